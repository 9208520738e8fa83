//! `clifford`: runs the verification suites and evaluates single objects.
//!
//! Exit status is 0 on success, 1 when a check fails or a decomposition is
//! undefined, and 2 on usage or input errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use clifford_spinor::algebra::Blade;
use clifford_spinor::dirac::{dhe_residual, lounesto_decompose, planewave_field, PlaneWaveParams, PotentialField};
use clifford_spinor::verify::{self, Execution, Fault, RunConfig, Suite};
use clifford_spinor::{Error, Multivector, Signature, SpacetimePoint};

const USAGE: u8 = 2;
const FAILED: u8 = 1;

#[derive(Parser)]
#[command(name = "clifford", version, about = "Clifford algebra spinor toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a JSON report.
    Verify(VerifyArgs),
    /// Evaluate a plane-wave solution and its equation residual at one point.
    Planewave {
        /// JSON file such as {"branch":"+","spin":"up","p":[0.1,0,0.3],"m":1.0}
        #[arg(long)]
        params: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        /// Spatial point as X,Y,Z
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        x: Vec<f64>,
    },
    /// Print the signed blade multiplication table of Cl(P,Q).
    Table {
        /// Signature as P,Q
        #[arg(long, value_delimiter = ',', required = true)]
        sig: Vec<u8>,
        /// Aligned text instead of JSON
        #[arg(long)]
        pretty: bool,
    },
    /// Split a Cl(3,0) multivector into density, Takabayasi angle and rotor.
    Decompose {
        /// Multivector JSON file
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite to run; repeatable. One of core, rep, weyl, dirac, paravector, cl03, all.
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<String>,
    /// Generator seed; the CLIFFORD_SEED environment variable takes precedence.
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Base sample count per check.
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    samples: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall time in the report, which makes it nondeterministic.
    #[arg(long)]
    timing: bool,
    /// Replace a check's tolerance, as ID=VALUE; repeatable.
    #[arg(long = "tolerance", value_parser = parse_override)]
    tolerances: Vec<(String, f64)>,
    /// Run sweeps on one thread.
    #[arg(long)]
    sequential: bool,
    #[arg(long, hide = true, value_parser = parse_fault)]
    fault: Option<Fault>,
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (id, v) = s.split_once('=').ok_or("expected ID=VALUE")?;
    let v: f64 = v.parse().map_err(|e| format!("bad tolerance {v:?}: {e}"))?;
    Ok((id.to_string(), v))
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    serde_json::from_value(json!(s)).map_err(|_| format!("unknown fault {s:?}"))
}

/// Error carrying the process exit code.
struct Exit(u8, String);

fn usage(msg: impl std::fmt::Display) -> Exit {
    Exit(USAGE, msg.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify_cmd(args),
        Command::Planewave { params, t, x } => planewave_cmd(&params, t, &x),
        Command::Table { sig, pretty } => table_cmd(&sig, pretty),
        Command::Decompose { input } => decompose_cmd(&input),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("clifford: {msg}");
            ExitCode::from(code)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Exit> {
    serde_json::to_string_pretty(value).map_err(|e| Exit(FAILED, e.to_string()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Exit> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn verify_cmd(args: VerifyArgs) -> Result<u8, Exit> {
    let mut suites = Vec::new();
    for name in &args.suites {
        suites.extend(Suite::parse_list(name).map_err(usage)?);
    }
    let seed = match std::env::var("CLIFFORD_SEED") {
        Ok(s) => s.trim().parse().map_err(|e| usage(format!("CLIFFORD_SEED={s:?}: {e}")))?,
        Err(_) => args.seed,
    };
    let mut cfg = RunConfig::default().with_seed(seed).with_samples(args.samples);
    cfg.tolerances = args.tolerances.into_iter().collect::<BTreeMap<_, _>>();
    if let Some(f) = args.fault {
        cfg = cfg.with_fault(f);
    }
    if args.sequential {
        cfg = cfg.with_execution(Execution::Sequential);
    }

    let start = Instant::now();
    let mut report = verify::run(&cfg, &suites);
    if args.timing {
        report.wall_time_s = Some(start.elapsed().as_secs_f64());
    }
    let text = to_json(&report)? + "\n";
    match &args.out {
        Some(path) => fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    for c in report.failures() {
        eprintln!("FAIL {} residual {:e} tolerance {:e}", c.id, c.residual, c.tolerance);
    }
    Ok(if report.pass { 0 } else { FAILED })
}

fn planewave_cmd(params: &Path, t: f64, x: &[f64]) -> Result<u8, Exit> {
    if x.len() != 3 {
        return Err(usage(format!("--x takes three coordinates, got {}", x.len())));
    }
    let params: PlaneWaveParams = read_json(params)?;
    let pt = SpacetimePoint::new(t, [x[0], x[1], x[2]]);
    let field = planewave_field(&params).map_err(usage)?;
    let residual = dhe_residual(&field, &PotentialField::zero(), params.m, &pt).norm();
    println!("{}", to_json(&json!({ "psi": field.value(&pt), "residual": residual }))?);
    Ok(0)
}

fn signed(sign: f64, b: Blade) -> String {
    format!("{}{}", if sign < 0.0 { '-' } else { '+' }, b.name())
}

fn table_cmd(sig: &[u8], pretty: bool) -> Result<u8, Exit> {
    if sig.len() != 2 {
        return Err(usage(format!("--sig takes P,Q, got {} values", sig.len())));
    }
    let sig = Signature::new(sig[0], sig[1]).map_err(usage)?;
    let blades: Vec<Blade> = (0..sig.size() as u8).map(Blade).collect();
    let rows: Vec<Vec<String>> = blades
        .iter()
        .map(|a| {
            blades
                .iter()
                .map(|b| {
                    let (s, c) = a.product(*b, sig);
                    signed(s, c)
                })
                .collect()
        })
        .collect();
    let names: Vec<String> = blades.iter().map(|b| b.name()).collect();
    if pretty {
        let width = rows.iter().flatten().chain(names.iter()).map(|s| s.len()).max().unwrap_or(1);
        print!("{:>width$}", "", width = width);
        for n in &names {
            print!(" {n:>width$}");
        }
        println!();
        for (n, row) in names.iter().zip(&rows) {
            print!("{n:>width$}");
            for cell in row {
                print!(" {cell:>width$}");
            }
            println!();
        }
    } else {
        println!("{}", to_json(&json!({ "signature": sig, "blades": names, "table": rows }))?);
    }
    Ok(0)
}

fn decompose_cmd(input: &Path) -> Result<u8, Exit> {
    let psi: Multivector = read_json(input)?;
    match lounesto_decompose(&psi) {
        Ok(d) => {
            let residual = (d.recompose() - psi).norm_inf();
            let out = json!({ "rho": d.rho, "beta": d.beta, "rotor": d.rotor, "residual": residual });
            println!("{}", to_json(&out)?);
            Ok(0)
        }
        Err(e @ Error::SingularDensity { .. }) => Err(Exit(FAILED, e.to_string())),
        Err(e) => Err(usage(e)),
    }
}
