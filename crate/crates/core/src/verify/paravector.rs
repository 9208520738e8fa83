use super::sample;
use super::Ctx;
use crate::algebra::{blade30, Multivector, Signature};
use crate::paravector::{
    is_future, is_null, paravector_from_spinor, pv_metric, pv_symmetric_product, spin_density_axis, spinor_bilinear,
    tetrad_decompose, Paravector,
};

fn random_paravector(rng: &mut impl rand::Rng) -> Paravector {
    Paravector::new(sample::unit(rng), [sample::unit(rng), sample::unit(rng), sample::unit(rng)])
}

pub(super) fn run(ctx: &mut Ctx) {
    let n = ctx.n();

    ctx.max_check("paravector.grade_content", 1e-12, n, |rng| {
        let x = spinor_bilinear(&sample::cus(rng)).expect("CUS");
        x.filter(|b| b.grade() >= 2).norm_inf() / x.norm_inf().max(1.0)
    });

    ctx.max_check("paravector.null", 1e-12, n, |rng| {
        let a = paravector_from_spinor(&sample::nonzero_cus(rng)).expect("CUS");
        let c = is_null(&a);
        let r = c.residual.abs() / a.scale_sqr();
        if c.null {
            r
        } else {
            f64::INFINITY
        }
    });

    // number of nonzero spinors whose paravector fails to point forward
    ctx.max_check("paravector.future", 0.0, n, |rng| {
        let a = paravector_from_spinor(&sample::nonzero_cus(rng)).expect("CUS");
        if is_future(&a) {
            0.0
        } else {
            1.0
        }
    });

    // K K~ coefficients against the component products k^A conj(k^B)
    ctx.max_check("paravector.kkt_components", 1e-12, n, |rng| {
        let k = sample::cus(rng);
        let x = k.embed();
        let t = tetrad_decompose(&(x * x.reverse())).expect("in span");
        [t.oo - k.c1 * k.c1.conj(), t.oi - k.c1 * k.c2.conj(), t.io - k.c2 * k.c1.conj(), t.ii - k.c2 * k.c2.conj()]
            .iter()
            .map(|d| d.abs())
            .fold(0.0, f64::max)
    });

    ctx.max_check("paravector.tetrad_rank1", 1e-12, n, |rng| {
        let x = sample::cus(rng).embed();
        tetrad_decompose(&(x * x.reverse())).expect("in span").rank_defect().abs()
    });

    ctx.max_check("paravector.clifford_relation", 1e-12, n, |rng| {
        let (a, b) = (random_paravector(rng), random_paravector(rng));
        let s = pv_symmetric_product(&a, &b);
        let g = a.a0 * b.a0 - (0..3).map(|k| a.a[k] * b.a[k]).sum::<f64>();
        (s - Multivector::scalar(Signature::CL30, g)).norm_inf()
    });

    ctx.max_check("paravector.polarization", 1e-12, n, |rng| {
        let (a, b) = (random_paravector(rng), random_paravector(rng));
        let sum = Paravector::new(a.a0 + b.a0, std::array::from_fn(|k| a.a[k] + b.a[k]));
        let polar = (pv_metric(&sum, &sum) - pv_metric(&a, &a) - pv_metric(&b, &b)) / 2.0;
        (pv_metric(&a, &b) - polar).abs()
    });

    // psi psi~ = a^2 + b^2 + c^2 + d^2 with nothing else, for even psi
    ctx.max_check("paravector.even_norm_positive", 1e-12, n, |rng| {
        let psi = sample::real_even30(rng);
        let s: f64 = psi.coeffs().iter().map(|c| c * c).sum();
        let x = psi * psi.reverse();
        if x.scalar_part() > 0.0 {
            (x - Multivector::scalar(Signature::CL30, s)).norm_inf()
        } else {
            f64::INFINITY
        }
    });

    // psi e3 psi~ is a vector of length psi psi~
    ctx.max_check("paravector.spin_axis", 1e-12, n, |rng| {
        let psi = sample::real_even30(rng);
        let v = spin_density_axis(&psi).expect("even");
        let full = psi * blade30(&[3]) * psi.reverse();
        let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = (psi * psi.reverse()).scalar_part();
        full.filter(|b| b.grade() != 1).norm_inf().max((len - scale).abs())
    });
}
