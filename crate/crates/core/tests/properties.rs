use proptest::prelude::*;

use clifford_spinor::algebra::{blade30, Multivector, Signature, MAX_DIM};
use clifford_spinor::cl03::{metric03, sigma, WeylSpinor03};
use clifford_spinor::paravector::{is_future, is_null, paravector_from_spinor};
use clifford_spinor::weyl::{metric_fplus, to_cds, to_cvds, WeylSpinor};
use clifford_spinor::CenterScalar;

fn signature() -> impl Strategy<Value = Signature> {
    (1..=MAX_DIM as u8).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

fn mv_in(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-1.0f64..1.0, sig.size()).prop_map(move |c| Multivector::from_coeffs(sig, &c))
}

fn triple() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    signature().prop_flat_map(|s| (mv_in(s), mv_in(s), mv_in(s)))
}

fn center() -> impl Strategy<Value = CenterScalar> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| CenterScalar::new(a, b))
}

fn cus() -> impl Strategy<Value = WeylSpinor> {
    (center(), center()).prop_map(|(a, b)| WeylSpinor::cus(a, b))
}

fn even03() -> impl Strategy<Value = Multivector> {
    mv_in(Signature::CL03).prop_map(|m| m.even_part())
}

proptest! {
    #[test]
    fn product_is_associative_and_distributive((a, b, c) in triple()) {
        prop_assert!(((a * b) * c - a * (b * c)).norm_inf() < 1e-12);
        prop_assert!((a * (b + c) - (a * b + a * c)).norm_inf() < 1e-12);
    }

    #[test]
    fn involutions_are_order_two((a, b, _) in triple()) {
        prop_assert_eq!(a.reverse().reverse(), a);
        prop_assert_eq!(a.involute().involute(), a);
        prop_assert_eq!(a.conjugate().conjugate(), a);
        prop_assert!(((a * b).conjugate() - b.conjugate() * a.conjugate()).norm_inf() < 1e-12);
    }

    #[test]
    fn grades_partition((a, _, _) in triple()) {
        let sig = a.signature();
        let mut total = Multivector::zero(sig);
        for k in 0..=sig.dim() {
            let g = a.grade(k).unwrap();
            prop_assert!(g.terms().all(|(b, _)| b.grade() == k));
            total += g;
        }
        prop_assert_eq!(total, a);
        prop_assert_eq!(a.even_part() + a.odd_part(), a);
    }

    #[test]
    fn json_round_trip_is_bit_exact((a, _, _) in triple()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Multivector = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.signature(), a.signature());
        for (x, y) in back.coeffs().iter().zip(a.coeffs()) {
            prop_assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn exponential_of_negation_is_inverse(t in -10.0f64..10.0, u in -10.0f64..10.0) {
        let b = blade30(&[1, 2]).scale(t) + blade30(&[3]).scale(u);
        let r = b.exp();
        prop_assert!((r * (-b).exp() - Multivector::one(Signature::CL30)).norm_inf() < 1e-10 * r.norm_inf().powi(2));
    }

    #[test]
    fn spinor_metric_is_antisymmetric(k in cus(), eta in cus()) {
        let a = metric_fplus(&k, &eta).unwrap();
        let b = metric_fplus(&eta, &k).unwrap();
        prop_assert_eq!(a.re, -b.re);
        prop_assert_eq!(a.im, -b.im);
    }

    #[test]
    fn diagram_closes_on_grade_involution(k in cus()) {
        let closed = to_cvds(&to_cds(&k).unwrap()).unwrap();
        prop_assert!((closed.embed() - k.embed().involute()).norm_inf() < 1e-12);
    }

    #[test]
    fn spinor_paravectors_are_null_and_future(k in cus()) {
        prop_assume!(k.c1.norm_sqr() + k.c2.norm_sqr() > 1e-6);
        let a = paravector_from_spinor(&k).unwrap();
        prop_assert!(is_null(&a).null);
        prop_assert!(is_future(&a));
    }

    #[test]
    fn sigma_reverses_products(a in even03(), b in even03()) {
        prop_assert!((sigma(&(a * b)).unwrap() - sigma(&b).unwrap() * sigma(&a).unwrap()).norm_inf() < 1e-12);
        prop_assert!((sigma(&sigma(&a).unwrap()).unwrap() - a).norm_inf() < 1e-12);
    }

    #[test]
    fn cl03_metric_vanishes_on_the_diagonal(a in -1.0f64..1.0, b in -1.0f64..1.0, c in -1.0f64..1.0, d in -1.0f64..1.0) {
        let k = WeylSpinor03::cus([a, b], [c, d]);
        let g = metric03(&k, &k).unwrap();
        prop_assert!(g.re.abs() < 1e-15 && g.im.abs() < 1e-15);
    }
}
