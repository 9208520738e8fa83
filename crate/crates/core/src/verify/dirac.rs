use rand::Rng;

use super::sample;
use super::{Ctx, Fault};
use crate::algebra::{blade30, Multivector, Signature};
use crate::dirac::{
    boost_signed, dhe_residual, dirac_from_weyl, energy, j_e3, lounesto_decompose, pauli_fields, pauli_residuals,
    pauli_split, planewave_field_with_boost, pseudoscalar, right_phase, vector, weyl_fields, weyl_from_dirac,
    weyl_residuals, weyl_split, PlaneWaveParams, PotentialField,
};
use crate::field::{Field, SpacetimePoint};
use crate::repr::{column_field, standard_dirac_residual};
use crate::weyl::f_plus;

const MASSES: [f64; 3] = [0.5, 1.0, 2.0];
const FD_STEP: f64 = 1e-4;

/// Plane-wave solution field, honouring the boost fault hook.
fn wave(ctx_fault: Option<Fault>, params: &PlaneWaveParams) -> Field<Multivector> {
    let sign = if ctx_fault == Some(Fault::BoostSign) { -1.0 } else { 1.0 };
    let l = boost_signed(params.p, params.m, sign).expect("positive mass");
    planewave_field_with_boost(params, l)
}

/// A momentum sample: a mass from the fixed list and `|p| <= 2m`.
fn draw(rng: &mut impl Rng) -> (f64, [f64; 3]) {
    let m = MASSES[rng.random_range(0..MASSES.len())];
    (m, sample::momentum(rng, 2.0 * m))
}

fn zero30() -> Multivector {
    Multivector::zero(Signature::CL30)
}

pub(super) fn run(ctx: &mut Ctx) {
    let n = ctx.n();
    let n_mom = ctx.fraction(50);
    let fault = ctx.cfg.fault;
    let pot = PotentialField::zero();

    // every branch at every mass; a sample is one random point
    ctx.max_check("dirac.rest_analytic", 1e-10, n_mom, |rng| {
        let x = sample::point(rng);
        let mut worst = 0.0f64;
        for m in MASSES {
            for params in PlaneWaveParams::all_branches([0.0; 3], m) {
                worst = worst.max(dhe_residual(&wave(fault, &params), &pot, m, &x).norm_inf());
            }
        }
        worst
    });

    // a sample is one random momentum for each mass, all four branches
    let boosted = |rng: &mut rand_chacha::ChaCha8Rng, step: Option<f64>| {
        let x = sample::point(rng);
        let mut worst = 0.0f64;
        for m in MASSES {
            let p = sample::momentum(rng, 2.0 * m);
            for params in PlaneWaveParams::all_branches(p, m) {
                let f = wave(fault, &params);
                let f = match step {
                    Some(h) => f.with_step(h),
                    None => f,
                };
                worst = worst.max(dhe_residual(&f, &pot, m, &x).norm_inf());
            }
        }
        worst
    };
    ctx.max_check("dirac.boosted_analytic", 1e-10, n_mom, |rng| boosted(rng, None));
    ctx.max_check("dirac.boosted_finite_difference", 1e-4, n_mom, |rng| boosted(rng, Some(FD_STEP)));

    // halving h twice must cut the derivative error by about 4 each time
    ctx.max_check("dirac.fd_convergence", 0.5, n_mom, |rng| {
        let (m, p) = draw(rng);
        let x = sample::point(rng);
        let params = PlaneWaveParams::all_branches(p, m)[rng.random_range(0..4)];
        let exact = wave(fault, &params).gradient(&x);
        let err = |h: f64| {
            let g = wave(fault, &params).with_step(h).gradient(&x);
            (0..4).map(|mu| (g[mu] - exact[mu]).norm()).fold(0.0, f64::max)
        };
        let e = [err(1e-2), err(5e-3), err(2.5e-3)];
        ((e[0] / e[1]) - 4.0).abs().max(((e[1] / e[2]) - 4.0).abs())
    });

    ctx.max_check("dirac.boost_unit", 1e-12, n, |rng| {
        let (m, p) = draw(rng);
        let l = boost_signed(p, m, if fault == Some(Fault::BoostSign) { -1.0 } else { 1.0 }).expect("mass");
        let unit = (l * l.conjugate() - Multivector::one(Signature::CL30)).norm_inf();
        let e = energy(p, m);
        let sandwich = l * (Multivector::scalar(Signature::CL30, e) - vector(p)) * l;
        unit.max((sandwich - Multivector::scalar(Signature::CL30, m)).norm_inf() / m)
    });

    ctx.max_check("dirac.right_phase_closure", 1e-10, n_mom, |rng| {
        let (m, p) = draw(rng);
        let x = sample::point(rng);
        let (c, d) = (sample::unit(rng), sample::unit(rng));
        PlaneWaveParams::all_branches(p, m)
            .iter()
            .map(|params| {
                let f = wave(fault, params).map_linear(move |v| right_phase(&v, c, d));
                dhe_residual(&f, &pot, m, &x).norm_inf()
            })
            .fold(0.0, f64::max)
    });

    // negative control: J e3 from the left breaks the equation once p has
    // a component off the e3 axis
    ctx.min_check("dirac.left_phase_control", 0.1, n_mom, |rng| {
        let m = MASSES[rng.random_range(0..MASSES.len())];
        let x = sample::point(rng);
        let params = PlaneWaveParams::all_branches([m, 0.5 * m, 0.3 * m], m)[1];
        let f = wave(fault, &params).map_linear(|v| j_e3() * v);
        dhe_residual(&f, &pot, m, &x).norm() / m
    });

    ctx.max_check("dirac.wrong_frequency_sign", 1e-12, 1, |_| {
        let m = 1.0;
        let f = Field::analytic(
            move |p: &SpacetimePoint| j_e3().scale(m * p.t).exp(),
            move |p: &SpacetimePoint| [j_e3().scale(m * p.t).exp() * j_e3().scale(m), zero30(), zero30(), zero30()],
        );
        (dhe_residual(&f, &pot, m, &SpacetimePoint::default()).norm() - 2.0 * m).abs()
    });

    // Psi0 exp(-J e3 w t) solves the free equation iff w Psi0 = m Psi0^
    let seeds = || [Multivector::one(Signature::CL30), blade30(&[1, 3]), pseudoscalar(), blade30(&[2])];
    let phased = |psi0: Multivector, w: f64| {
        Field::analytic(
            move |p: &SpacetimePoint| psi0 * j_e3().scale(-w * p.t).exp(),
            move |p: &SpacetimePoint| {
                [psi0 * j_e3().scale(-w * p.t).exp() * j_e3().scale(-w), zero30(), zero30(), zero30()]
            },
        )
    };
    ctx.max_check("dirac.frequency_rule", 1e-12, n_mom, |rng| {
        let m = MASSES[rng.random_range(0..MASSES.len())];
        let x = sample::point(rng);
        seeds()
            .into_iter()
            .map(|s| {
                let w = if s.odd_part().norm_inf() > 0.0 { -m } else { m };
                dhe_residual(&phased(s, w), &pot, m, &x).norm_inf()
            })
            .fold(0.0, f64::max)
    });
    ctx.min_check("dirac.frequency_rule_wrong_sign", 0.1, n_mom, |rng| {
        let m = MASSES[rng.random_range(0..MASSES.len())];
        let x = sample::point(rng);
        seeds()
            .into_iter()
            .map(|s| {
                let w = if s.odd_part().norm_inf() > 0.0 { m } else { -m };
                dhe_residual(&phased(s, w), &pot, m, &x).norm() / m
            })
            .fold(f64::INFINITY, f64::min)
    });

    ctx.max_check("dirac.gauge_covariance", 1e-10, n_mom, |rng| {
        let (m, p) = draw(rng);
        let x = sample::point(rng);
        let params = PlaneWaveParams::all_branches(p, m)[rng.random_range(0..4)];
        // chi = a.x + b t + c t x, all gradients closed form
        let (a, b, c, e) = (
            [sample::unit(rng), sample::unit(rng), sample::unit(rng)],
            sample::unit(rng),
            sample::unit(rng),
            0.5 + sample::unit(rng).abs(),
        );
        let chi = move |q: &SpacetimePoint| a[0] * q.x[0] + a[1] * q.x[1] + a[2] * q.x[2] + b * q.t + c * q.t * q.x[0];
        let dchi = move |q: &SpacetimePoint| [b + c * q.x[0], a[0] + c * q.t, a[1], a[2]];
        let base = wave(fault, &params);
        let base2 = base.clone();
        let gauged = Field::analytic(
            move |q: &SpacetimePoint| base.value(q) * j_e3().scale(chi(q)).exp(),
            move |q: &SpacetimePoint| {
                let (g, v, u, d) = (base2.gradient(q), base2.value(q), j_e3().scale(chi(q)).exp(), dchi(q));
                std::array::from_fn(|mu| g[mu] * u + v * j_e3().scale(d[mu]) * u)
            },
        );
        let pot = PotentialField::new(
            move |q| -dchi(q)[0] / e,
            move |q| {
                let d = dchi(q);
                [d[1] / e, d[2] / e, d[3] / e]
            },
        )
        .with_coupling(e);
        dhe_residual(&gauged, &pot, m, &x).norm_inf()
    });

    let coupled = |rng: &mut rand_chacha::ChaCha8Rng, pauli: bool| {
        let (m, p) = draw(rng);
        let x = sample::point(rng);
        let mut worst = 0.0f64;
        for params in
            PlaneWaveParams::all_branches(p, m).iter().chain(PlaneWaveParams::all_branches([0.0; 3], m).iter())
        {
            let f = wave(fault, params);
            let (r1, r2) = if pauli {
                let (phi, chi) = pauli_fields(&f);
                pauli_residuals(&phi, &chi, m, &x)
            } else {
                let (xi, eta) = weyl_fields(&f);
                weyl_residuals(&xi, &eta, m, &x)
            };
            worst = worst.max(r1.norm_inf()).max(r2.norm_inf());
        }
        worst
    };
    ctx.max_check("dirac.weyl_system", 1e-10, n_mom, |rng| coupled(rng, false));
    ctx.max_check("dirac.pauli_system", 1e-10, n_mom, |rng| coupled(rng, true));

    ctx.max_check("dirac.gamma_oracle", 1e-10, n_mom, |rng| {
        let (m, p) = draw(rng);
        let x = sample::point(rng);
        PlaneWaveParams::all_branches(p, m)
            .iter()
            .map(|params| standard_dirac_residual(&column_field(&wave(fault, params)), m, &x).norm())
            .fold(0.0, f64::max)
    });

    ctx.max_check("dirac.lounesto_round_trip", 1e-12, n, |rng| {
        let psi = nonsingular(rng);
        let d = lounesto_decompose(&psi).expect("nonsingular");
        (d.recompose() - psi).norm_inf()
    });
    ctx.max_check("dirac.lounesto_unit_rotor", 1e-12, n, |rng| {
        let d = lounesto_decompose(&nonsingular(rng)).expect("nonsingular");
        (d.rotor * d.rotor.conjugate() - Multivector::one(Signature::CL30)).norm_inf()
    });
    // every element of a minimal ideal has Psi conj(Psi) = 0
    ctx.max_check("dirac.lounesto_singular_rejected", 0.0, n, |rng| {
        let psi = sample::nonzero_cus(rng).embed();
        if lounesto_decompose(&psi).is_err() {
            0.0
        } else {
            1.0
        }
    });

    ctx.max_check("dirac.weyl_split", 1e-15, n, |rng| {
        let psi = sample::multivector(rng, Signature::CL30);
        let (xi, eta) = weyl_split(&psi);
        let e3 = blade30(&[3]);
        (xi + eta - psi).norm_inf().max((xi * e3 - xi).norm_inf()).max((eta * e3 + eta).norm_inf())
    });
    ctx.max_check("dirac.pauli_split", 1e-15, n, |rng| {
        let psi = sample::multivector(rng, Signature::CL30);
        let (phi, chi) = pauli_split(&psi);
        (phi + chi * blade30(&[3]) - psi).norm_inf().max(phi.odd_part().norm_inf()).max(chi.odd_part().norm_inf())
    });
    ctx.max_check("dirac.weyl_pair_round_trip", 1e-15, n, |rng| {
        let (k, l) = (sample::cus(rng), sample::cus(rng));
        let psi = dirac_from_weyl(&k, &l).expect("CUS");
        let (k2, l2) = weyl_from_dirac(&psi).expect("Cl(3,0)");
        let parts =
            (psi * f_plus() - k.embed()).norm_inf().max((psi * blade30(&[1]) * f_plus() - l.embed()).norm_inf());
        [(k.c1, k2.c1), (k.c2, k2.c2), (l.c1, l2.c1), (l.c2, l2.c2)]
            .iter()
            .map(|(a, b)| (*a - *b).abs())
            .fold(parts, f64::max)
    });
}

/// Random element with `|Psi conj(Psi)| >= 0.01`.
fn nonsingular(rng: &mut impl Rng) -> Multivector {
    loop {
        let psi = sample::multivector(rng, Signature::CL30);
        let d = psi * psi.conjugate();
        if d.scalar_part().hypot(d.pseudoscalar_part()) >= 0.01 {
            return psi;
        }
    }
}
