use num_complex::Complex64;

use super::sample;
use super::Ctx;
use crate::algebra::{blade13, blade30, Blade, Multivector, Signature};
use crate::repr::{
    iso_cl13_to_cl30, iso_cl30_to_cl13, rep_cl13_even, rep_cl30, rep_cl30_inverse, rep_rotor_matrix, GammaBasis, Mat2,
    Mat4,
};
use crate::weyl::{f_minus, f_plus};

fn rho(a: &Multivector) -> Mat2 {
    rep_cl30(a).expect("Cl(3,0)")
}

fn random_matrix(rng: &mut impl rand::Rng) -> Mat2 {
    let mut z = || Complex64::new(sample::unit(rng), sample::unit(rng));
    Mat2::new(z(), z(), z(), z())
}

pub(super) fn run(ctx: &mut Ctx) {
    let n = ctx.n();
    let (zero, one) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    let e1 = blade30(&[1]);
    let pinned = [
        (f_plus(), Mat2::new(one, zero, zero, zero)),
        (f_minus(), Mat2::new(zero, zero, zero, one)),
        (e1 * f_plus(), Mat2::new(zero, zero, one, zero)),
        (e1 * f_minus(), Mat2::new(zero, one, zero, zero)),
    ];
    let r = pinned.iter().map(|(x, m)| rho(x).max_abs_diff(m)).fold(0.0, f64::max);
    ctx.fixed("rep.pinned_matrices", r, 0.0, 4);

    ctx.max_check("rep.homomorphism", 1e-12, n, |rng| {
        let (a, b) = (sample::multivector(rng, Signature::CL30), sample::multivector(rng, Signature::CL30));
        rho(&(a * b)).max_abs_diff(&(rho(&a) * rho(&b)))
    });

    ctx.max_check("rep.reversion_is_dagger", 1e-15, n, |rng| {
        let a = sample::multivector(rng, Signature::CL30);
        rho(&a.reverse()).max_abs_diff(&rho(&a).dagger())
    });

    ctx.max_check("rep.inverse_round_trip", 1e-15, n, |rng| {
        let a = sample::multivector(rng, Signature::CL30);
        let m = random_matrix(rng);
        let back = (rep_cl30_inverse(&rho(&a)) - a).norm_inf();
        back.max(rho(&rep_cl30_inverse(&m)).max_abs_diff(&m))
    });

    // faithfulness: the inverse recovers every basis blade
    let faithful = (0..8u8)
        .map(|m| {
            let b = Multivector::blade(Signature::CL30, Blade(m), 1.0);
            (rep_cl30_inverse(&rho(&b)) - b).norm_inf()
        })
        .fold(0.0, f64::max);
    ctx.fixed("rep.faithful", faithful, 0.0, 8);

    ctx.max_check("rep.det_rotor", 1e-12, n, |rng| {
        let r = sample::real_even30(rng);
        let m = rep_rotor_matrix(&r).expect("even");
        let sum_sq: f64 = r.coeffs().iter().map(|c| c * c).sum();
        let det = m.det();
        let s = (r * r.conjugate()).scalar_part();
        (det.re - s).abs().max(det.im.abs()).max((sum_sq - s).abs())
    });

    ctx.max_check("rep.rotor_matrix_matches", 1e-15, n, |rng| {
        let r = sample::real_even30(rng);
        rep_rotor_matrix(&r).expect("even").max_abs_diff(&rho(&r))
    });

    ctx.max_check("rep.hat_is_inverse_dagger", 1e-12, n, |rng| {
        let r = sample::rotor(rng);
        let r = r.as_multivector();
        let target = rho(r).dagger().inverse().expect("unit determinant");
        rho(&r.involute()).max_abs_diff(&target)
    });

    ctx.max_check("rep.cl13_homomorphism", 1e-12, n, |rng| {
        let (a, b) = (sample::even(rng, Signature::CL13), sample::even(rng, Signature::CL13));
        let r = |x: &Multivector| rep_cl13_even(x).expect("even");
        r(&(a * b)).max_abs_diff(&(r(&a) * r(&b)))
    });

    // even blades against explicit gamma products
    let g = GammaBasis::standard().0;
    let gamma_product = |idx: &[usize]| idx.iter().fold(Mat4::identity(), |acc, &i| acc * g[i - 1]);
    let mut assembly = 0.0f64;
    for m in 0..16u8 {
        let b = Blade(m);
        if b.grade() % 2 == 1 {
            continue;
        }
        let idx: Vec<usize> = (0..4).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect();
        let mv = Multivector::blade(Signature::CL13, b, 1.0);
        assembly = assembly.max(rep_cl13_even(&mv).expect("even").max_abs_diff(&gamma_product(&idx)));
    }
    let i = Complex64::new(0.0, 1.0);
    let mut diag = Mat4::zero();
    for (k, s) in [-1.0, 1.0, -1.0, 1.0].iter().enumerate() {
        diag.0[k][k] = i * *s;
    }
    // gamma_12 is blade13(&[2, 3])
    assembly = assembly.max(rep_cl13_even(&blade13(&[2, 3])).expect("even").max_abs_diff(&diag));
    ctx.fixed("rep.cl13_gamma_assembly", assembly, 0.0, 9);

    let mut anti = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            let eta = if mu == nu { GammaBasis::eta(mu) } else { 0.0 };
            let lhs = g[mu] * g[nu] + g[nu] * g[mu];
            anti = anti.max(lhs.max_abs_diff(&Mat4::identity().scale(Complex64::new(2.0 * eta, 0.0))));
        }
    }
    ctx.fixed("rep.gamma_anticommutation", anti, 0.0, 16);

    ctx.max_check("rep.iso_homomorphism", 1e-12, n, |rng| {
        let (a, b) = (sample::even(rng, Signature::CL13), sample::even(rng, Signature::CL13));
        let f = |x: &Multivector| iso_cl13_to_cl30(x).expect("even");
        let hom = (f(&(a * b)) - f(&a) * f(&b)).norm_inf();
        let x = sample::multivector(rng, Signature::CL30);
        let round = (iso_cl13_to_cl30(&iso_cl30_to_cl13(&x).expect("Cl(3,0)")).expect("even") - x).norm_inf();
        hom.max(round)
    });

    let map = |x: Multivector| iso_cl13_to_cl30(&x).expect("even");
    let examples = (map(blade13(&[1, 2])) + blade30(&[1]))
        .norm_inf()
        .max((map(blade13(&[1, 2, 3, 4])) - blade30(&[1, 2, 3])).norm_inf());
    ctx.fixed("rep.iso_examples", examples, 0.0, 2);
}
