use super::sample;
use super::Ctx;
use crate::algebra::{blade03, Blade, Multivector, Signature};
use crate::cl03::{
    cus03_from_even, idempotents03, metric03, metric03_alt, metric03_alt_argument, metric03_product, quat_mul,
    reduce_even03, rep_h_plus_h, rep_h_plus_h_inverse, sigma, sigma_any, sigma_dual_spinor, sigma_pairing, PlaneScalar,
    QPair,
};

fn even03(rng: &mut impl rand::Rng) -> Multivector {
    sample::even(rng, Signature::CL03)
}

pub(super) fn run(ctx: &mut Ctx) {
    let n = ctx.n();
    let (fp, fm) = idempotents03();

    ctx.max_check("cl03.reduction", 0.0, n, |rng| {
        let a = sample::multivector(rng, Signature::CL03);
        let r = reduce_even03(&a).expect("Cl(0,3)");
        ((r - a) * fp).norm_inf().max(r.odd_part().norm_inf())
    });

    ctx.max_check("cl03.cus03_embed", 0.0, n, |rng| {
        let q = even03(rng);
        let k = cus03_from_even(&q).expect("even");
        (k.embed() - q * fp).norm_inf().max((k.even_form().expect("CUS03") - q).norm_inf())
    });

    ctx.max_check("cl03.sigma_antihomomorphism", 1e-12, n, |rng| {
        let (a, b) = (even03(rng), even03(rng));
        let s = |x: &Multivector| sigma(x).expect("even");
        (s(&(a * b)) - s(&b) * s(&a)).norm_inf()
    });

    ctx.max_check("cl03.sigma_involution", 1e-12, n, |rng| {
        let q = even03(rng);
        (sigma(&sigma(&q).expect("even")).expect("even") - q).norm_inf()
    });

    // sigma moves k2 from the left of e13 to its right, and commutes with f+
    ctx.max_check("cl03.sigma_module_swap", 1e-12, n, |rng| {
        let k = sample::cus03(rng);
        let q = k.even_form().expect("CUS03");
        let right = k.c1.embed() + k.c2.embed() * blade03(&[1, 3]);
        let swap = (sigma(&q).expect("even") - right).norm_inf();
        swap.max((sigma_any(&(q * fp)).expect("Cl(0,3)") - fp * sigma(&q).expect("even")).norm_inf())
    });

    ctx.max_check("cl03.dual_spinor", 1e-12, n, |rng| {
        let k = sample::cus03(rng);
        let algebraic = sigma_any(&k.embed()).expect("Cl(0,3)") * blade03(&[1, 3]);
        (sigma_dual_spinor(&k).expect("CUS03").embed() - algebraic).norm_inf()
    });

    let diff = |a: PlaneScalar, b: PlaneScalar| (a - b).abs();
    ctx.max_check("cl03.metric_product", 1e-12, n, |rng| {
        let (k, eta) = (sample::cus03(rng), sample::cus03(rng));
        diff(metric03(&k, &eta).expect("CUS03"), metric03_product(&k, &eta).expect("CUS03"))
    });

    ctx.max_check("cl03.metric_antisymmetry", 0.0, n, |rng| {
        let (k, eta) = (sample::cus03(rng), sample::cus03(rng));
        diff(metric03(&k, &eta).expect("CUS03"), -metric03(&eta, &k).expect("CUS03"))
    });

    ctx.max_check("cl03.metric_dictionary", 1e-12, n, |rng| {
        let (k, eta) = (sample::cus03(rng), sample::cus03(rng));
        let psi = metric03_alt_argument(&k).expect("CUS03");
        let alt = metric03_alt(&psi, &eta.even_form().expect("CUS03")).expect("even");
        (alt - metric03(&k, &eta).expect("CUS03").embed()).norm_inf()
    });

    // the symmetrization keeps exactly the span{1, e12} part of Y
    ctx.max_check("cl03.symmetrization_identity", 1e-12, n, |rng| {
        let (psi, phi) = (even03(rng), even03(rng));
        let y = sigma_pairing(&psi, &phi).expect("even");
        let kept = y.filter(|b| b == Blade::SCALAR || b == Blade::from_indices(&[1, 2]));
        (metric03_alt(&psi, &phi).expect("even") - kept).norm_inf()
    });

    let to_pair = |a: &Multivector| rep_h_plus_h(a).expect("Cl(0,3)");
    ctx.max_check("cl03.hh_homomorphism", 1e-12, n, |rng| {
        let (a, b) = (sample::multivector(rng, Signature::CL03), sample::multivector(rng, Signature::CL03));
        let (pa, pb, pab) = (to_pair(&a), to_pair(&b), to_pair(&(a * b)));
        let oracle = QPair { plus: quat_mul(pa.plus, pb.plus), minus: quat_mul(pa.minus, pb.minus) };
        (0..4)
            .map(|i| (pab.plus[i] - oracle.plus[i]).abs().max((pab.minus[i] - oracle.minus[i]).abs()))
            .fold(0.0, f64::max)
    });

    ctx.max_check("cl03.hh_round_trip", 1e-15, n, |rng| {
        let a = sample::multivector(rng, Signature::CL03);
        let pair = to_pair(&a);
        let projections = (a * fp - rep_h_plus_h_inverse(&QPair { plus: pair.plus, minus: [0.0; 4] }))
            .norm_inf()
            .max((a * fm - rep_h_plus_h_inverse(&QPair { plus: [0.0; 4], minus: pair.minus })).norm_inf());
        (rep_h_plus_h_inverse(&pair) - a).norm_inf().max(projections)
    });

    // no basis blade maps to zero
    let kernel = (0..8u8)
        .filter(|&m| {
            let p = to_pair(&Multivector::blade(Signature::CL03, Blade(m), 1.0));
            p.plus.iter().chain(p.minus.iter()).all(|&c| c == 0.0)
        })
        .count();
    ctx.fixed("cl03.hh_faithful", kernel as f64, 0.0, 8);
}
