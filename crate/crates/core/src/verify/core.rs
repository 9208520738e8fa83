use super::sample;
use super::Ctx;
use crate::algebra::{blade03, blade13, blade30, center_decompose, Blade, Multivector, Signature, MAX_DIM};

fn signatures() -> Vec<Signature> {
    let mut out = Vec::new();
    for n in 1..=MAX_DIM as u8 {
        for p in 0..=n {
            out.push(Signature::new(p, n - p).expect("p + q <= 4"));
        }
    }
    out
}

fn tag(sig: Signature) -> String {
    format!("cl{}{}", sig.p(), sig.q())
}

pub(super) fn run(ctx: &mut Ctx) {
    let n = ctx.n();
    for sig in signatures() {
        let t = tag(sig);
        ctx.max_check(&format!("core.associativity.{t}"), 1e-12, n, |rng| {
            let (a, b, c) =
                (sample::multivector(rng, sig), sample::multivector(rng, sig), sample::multivector(rng, sig));
            ((a * b) * c - a * (b * c)).norm_inf()
        });

        let mut anti = 0.0f64;
        for i in 1..=sig.dim() {
            for j in 1..=sig.dim() {
                let (ei, ej) = (Multivector::generator(sig, i), Multivector::generator(sig, j));
                let g = if i == j { sig.square(i - 1) } else { 0.0 };
                anti = anti.max((ei * ej + ej * ei - Multivector::scalar(sig, 2.0 * g)).norm_inf());
            }
        }
        ctx.fixed(&format!("core.anticommutation.{t}"), anti, 0.0, sig.dim() * sig.dim());

        ctx.max_check(&format!("core.involutions.{t}"), 1e-12, n, |rng| {
            let (a, b) = (sample::multivector(rng, sig), sample::multivector(rng, sig));
            let rev = ((a * b).reverse() - b.reverse() * a.reverse()).norm_inf();
            let inv = ((a * b).involute() - a.involute() * b.involute()).norm_inf();
            let conj1 = (a.conjugate() - a.reverse().involute()).norm_inf();
            let conj2 = (a.conjugate() - a.involute().reverse()).norm_inf();
            rev.max(inv).max(conj1).max(conj2)
        });

        ctx.max_check(&format!("core.grade_completeness.{t}"), 0.0, n, |rng| {
            let a = sample::multivector(rng, sig);
            let sum = (0..=sig.dim()).fold(Multivector::zero(sig), |acc, k| acc + a.grade(k).expect("k <= dim"));
            (sum - a).norm_inf()
        });
    }

    let squares = [(blade30(&[1, 2, 3]), -1.0), (blade03(&[1, 2, 3]), 1.0), (blade13(&[1, 2, 3, 4]), -1.0)];
    let sq =
        squares.iter().map(|(i, s)| (*i * *i - Multivector::scalar(i.signature(), *s)).norm_inf()).fold(0.0, f64::max);
    ctx.fixed("core.pseudoscalar_squares", sq, 0.0, 3);

    let mut central = 0.0f64;
    for sig in [Signature::CL30, Signature::CL03] {
        let j = Multivector::pseudoscalar(sig);
        for m in 0..sig.size() {
            let b = Multivector::blade(sig, Blade(m as u8), 1.0);
            central = central.max((j * b - b * j).norm_inf());
        }
    }
    ctx.fixed("core.centrality", central, 0.0, 16);

    ctx.max_check("core.center_commutes", 0.0, n, |rng| {
        let z = sample::center(rng).to_multivector();
        (0..8u8)
            .map(|m| {
                let b = Multivector::blade(Signature::CL30, Blade(m), 1.0);
                (z * b - b * z).norm_inf()
            })
            .fold(0.0, f64::max)
    });

    ctx.max_check("core.center_decompose", 0.0, n, |rng| {
        let a = sample::multivector(rng, Signature::CL30);
        let (c, rest) = center_decompose(&a).expect("Cl(3,0)");
        (c.to_multivector() + rest - a).norm_inf()
    });

    let e12 = blade30(&[1, 2]);
    let quarter_turn = (blade30(&[1, 2, 3]) * blade30(&[3])).scale(std::f64::consts::FRAC_PI_2).exp();
    ctx.fixed("core.exp_quarter_turn", (quarter_turn - e12).norm_inf(), 1e-15, 1);

    ctx.max_check("core.exp_inverse", 1e-12, n, |rng| {
        let theta = std::f64::consts::PI * sample::unit(rng);
        let one = Multivector::one(Signature::CL30);
        (e12.scale(theta).exp() * e12.scale(-theta).exp() - one).norm_inf()
    });

    ctx.max_check("core.exp_series_inverse", 1e-12, n, |rng| {
        // generic argument: exp(a) exp(-a) = 1 through the series path
        let a = sample::multivector(rng, Signature::CL13).scale(0.5);
        (a.exp() * (-a).exp() - Multivector::one(Signature::CL13)).norm_inf()
    });

    let g = |a: &Multivector, b: &Multivector| a.metric(b).expect("same signature");
    let metric = (g(&e12, &e12) - 1.0)
        .abs()
        .max(g(&blade30(&[1]), &e12).abs())
        .max((g(&blade03(&[1]), &blade03(&[1])) + 1.0).abs());
    ctx.fixed("core.metric_examples", metric, 0.0, 3);
}
