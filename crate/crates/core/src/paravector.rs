//! Paravectors `a0 + a^k e_k` in `Cl(3,0)` as a model of Minkowski space.
//!
//! A CUS spinor `K` gives the null, future-pointing paravector `2 K K~`; its
//! expansion in the idempotent products `f+, f+ e1, f- e1, f-` is the null
//! tetrad `o o', o i', i o', i i'`.

use serde::{Deserialize, Serialize};

use crate::algebra::{blade30, Blade, CenterScalar, Multivector, Signature};
use crate::error::{Error, Result};
use crate::repr::{rep_cl30, EVEN_TOL};
use crate::weyl::{f_minus, f_plus, SpinorKind, WeylSpinor};

/// Relative tolerance for grade and nullity checks.
pub const PARAVECTOR_TOL: f64 = 1e-12;

#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Paravector {
    pub a0: f64,
    pub a: [f64; 3],
}

impl Paravector {
    pub fn new(a0: f64, a: [f64; 3]) -> Self {
        Paravector { a0, a }
    }

    pub fn embed(&self) -> Multivector {
        let mut x = Multivector::scalar(Signature::CL30, self.a0);
        for k in 0..3 {
            x.set(Blade::generator(k + 1), self.a[k]);
        }
        x
    }

    /// Reads grades 0 and 1, rejecting anything with grade 2 or 3 content
    /// above `tol * max(1, |x|_inf)`.
    pub fn from_multivector(x: &Multivector, tol: f64) -> Result<Self> {
        x.signature().expect(Signature::CL30)?;
        let rest = x.filter(|b| b.grade() >= 2).norm_inf();
        if rest > tol * x.norm_inf().max(1.0) {
            return Err(Error::OutOfSpan { residual: rest });
        }
        Ok(Paravector { a0: x.scalar_part(), a: std::array::from_fn(|k| x.get(Blade::generator(k + 1))) })
    }

    /// `(a0)^2 - |a|^2`.
    pub fn square(&self) -> f64 {
        self.a0 * self.a0 - self.a.iter().map(|x| x * x).sum::<f64>()
    }

    /// `(a0)^2 + |a|^2`, the scale against which nullity is judged.
    pub fn scale_sqr(&self) -> f64 {
        self.a0 * self.a0 + self.a.iter().map(|x| x * x).sum::<f64>()
    }
}

/// `2 K K~` as a full multivector, before any grade check.
pub fn spinor_bilinear(k: &WeylSpinor) -> Result<Multivector> {
    if k.kind != SpinorKind::Cus {
        return Err(Error::KindMismatch { expected: "CUS", found: k.kind.name() });
    }
    let x = k.embed();
    Ok((x * x.reverse()).scale(2.0))
}

/// `2 K K~ = 2 K e1 K-bar`.
pub fn paravector_from_spinor(k: &WeylSpinor) -> Result<Paravector> {
    Paravector::from_multivector(&spinor_bilinear(k)?, PARAVECTOR_TOL)
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct NullCheck {
    pub null: bool,
    /// `(a0)^2 - |a|^2`
    pub residual: f64,
}

pub fn is_null(a: &Paravector) -> NullCheck {
    let residual = a.square();
    NullCheck { null: residual.abs() <= PARAVECTOR_TOL * a.scale_sqr().max(1.0), residual }
}

pub fn is_future(a: &Paravector) -> bool {
    a.a0 > 0.0
}

/// `(a b^ + b a^) / 2`, which should be the scalar `g(a, b)`.
pub fn pv_symmetric_product(a: &Paravector, b: &Paravector) -> Multivector {
    let (x, y) = (a.embed(), b.embed());
    (x * y.involute() + y * x.involute()).scale(0.5)
}

/// Minkowski metric `a0 b0 - a.b`.
pub fn pv_metric(a: &Paravector, b: &Paravector) -> f64 {
    pv_symmetric_product(a, b).scalar_part()
}

/// Vector part of `psi e3 psi~` for even `psi`.
pub fn spin_density_axis(psi: &Multivector) -> Result<[f64; 3]> {
    psi.signature().expect(Signature::CL30)?;
    psi.require_even(EVEN_TOL)?;
    let x = *psi * blade30(&[3]) * psi.reverse();
    Ok(std::array::from_fn(|k| x.get(Blade::generator(k + 1))))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NullTetradLabel {
    /// `f+`
    Oo,
    /// `f+ e1`
    Oi,
    /// `f- e1`
    Io,
    /// `f-`
    Ii,
}

impl NullTetradLabel {
    pub const ALL: [NullTetradLabel; 4] =
        [NullTetradLabel::Oo, NullTetradLabel::Oi, NullTetradLabel::Io, NullTetradLabel::Ii];

    pub fn element(self) -> Multivector {
        let e1 = blade30(&[1]);
        match self {
            NullTetradLabel::Oo => f_plus(),
            NullTetradLabel::Oi => f_plus() * e1,
            NullTetradLabel::Io => f_minus() * e1,
            NullTetradLabel::Ii => f_minus(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NullTetradLabel::Oo => "oo",
            NullTetradLabel::Oi => "oi",
            NullTetradLabel::Io => "io",
            NullTetradLabel::Ii => "ii",
        }
    }

    // matrix entry carrying this coefficient
    fn slot(self) -> (usize, usize) {
        match self {
            NullTetradLabel::Oo => (0, 0),
            NullTetradLabel::Oi => (0, 1),
            NullTetradLabel::Io => (1, 0),
            NullTetradLabel::Ii => (1, 1),
        }
    }
}

/// Coefficients of an element in the null tetrad.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TetradCoefficients {
    pub oo: CenterScalar,
    pub oi: CenterScalar,
    pub io: CenterScalar,
    pub ii: CenterScalar,
}

impl TetradCoefficients {
    pub fn get(&self, label: NullTetradLabel) -> CenterScalar {
        match label {
            NullTetradLabel::Oo => self.oo,
            NullTetradLabel::Oi => self.oi,
            NullTetradLabel::Io => self.io,
            NullTetradLabel::Ii => self.ii,
        }
    }

    pub fn recompose(&self) -> Multivector {
        NullTetradLabel::ALL.iter().fold(Multivector::zero(Signature::CL30), |acc, &l| acc + self.get(l) * l.element())
    }

    /// `oo ii - oi io`, zero for `K K~`.
    pub fn rank_defect(&self) -> CenterScalar {
        self.oo * self.ii - self.oi * self.io
    }
}

/// Expands `m` over the null tetrad with center-valued coefficients.
pub fn tetrad_decompose(m: &Multivector) -> Result<TetradCoefficients> {
    m.signature().expect(Signature::CL30)?;
    let rep = rep_cl30(m)?;
    let c = |l: NullTetradLabel| CenterScalar::from(rep.0[l.slot().0][l.slot().1]);
    let out = TetradCoefficients {
        oo: c(NullTetradLabel::Oo),
        oi: c(NullTetradLabel::Oi),
        io: c(NullTetradLabel::Io),
        ii: c(NullTetradLabel::Ii),
    };
    let residual = (out.recompose() - *m).norm_inf();
    if residual > PARAVECTOR_TOL * m.norm_inf().max(1.0) {
        return Err(Error::OutOfSpan { residual });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> WeylSpinor {
        WeylSpinor::cus(CenterScalar::new(0.8, -0.3), CenterScalar::new(-1.2, 0.45))
    }

    #[test]
    fn basis_spinors() {
        let a = paravector_from_spinor(&WeylSpinor::cus(1.0, 0.0)).unwrap();
        assert_eq!(a, Paravector::new(1.0, [0.0, 0.0, 1.0]));
        let a = paravector_from_spinor(&WeylSpinor::cus(0.0, 1.0)).unwrap();
        assert_eq!(a, Paravector::new(1.0, [0.0, 0.0, -1.0]));
        assert!(paravector_from_spinor(&WeylSpinor::new(SpinorKind::Cds, 1.0, 0.0)).is_err());
    }

    #[test]
    fn spinor_paravectors_are_null_and_future() {
        let x = spinor_bilinear(&sample()).unwrap();
        assert!(x.filter(|b| b.grade() >= 2).norm_inf() < 1e-15);
        let a = paravector_from_spinor(&sample()).unwrap();
        assert!(is_null(&a).null);
        assert!(is_future(&a));
        assert!(pv_metric(&a, &a).abs() < 1e-14);
        let n = is_null(&Paravector::new(1.0, [0.0; 3]));
        assert_eq!((n.null, n.residual), (false, 1.0));
        assert!(!is_future(&Paravector::new(-1.0, [0.0; 3])));
    }

    #[test]
    fn metric_examples() {
        let t = Paravector::new(1.0, [0.0; 3]);
        assert_eq!(pv_metric(&t, &t), 1.0);
        let a = Paravector::new(1.0, [0.0, 0.0, 1.0]);
        let b = Paravector::new(1.0, [0.0, 0.0, -1.0]);
        assert_eq!(pv_metric(&a, &b), 2.0);
        let c = Paravector::new(0.3, [1.0, -2.0, 0.5]);
        let d = Paravector::new(-1.1, [0.2, 0.7, 3.0]);
        let sym = pv_symmetric_product(&c, &d);
        assert!((sym.filter(|b| b.grade() > 0)).norm_inf() < 1e-15);
        assert!((pv_metric(&c, &d) - (0.3 * -1.1 - (0.2 - 1.4 + 1.5))).abs() < 1e-15);
    }

    #[test]
    fn spin_axis_examples() {
        let one = Multivector::one(Signature::CL30);
        assert_eq!(spin_density_axis(&one).unwrap(), [0.0, 0.0, 1.0]);
        let r = blade30(&[1, 2]).scale(-0.4).exp();
        let s = spin_density_axis(&r).unwrap();
        assert!((s[2] - 1.0).abs() < 1e-15 && s[0].abs() < 1e-15 && s[1].abs() < 1e-15);
        let r = blade30(&[2, 3]).scale(-std::f64::consts::FRAC_PI_4).exp();
        let s = spin_density_axis(&r).unwrap();
        assert!((s[1] + 1.0).abs() < 1e-15 && s[2].abs() < 1e-15);
        assert!(spin_density_axis(&blade30(&[1])).is_err());
    }

    #[test]
    fn tetrad_examples() {
        let t = tetrad_decompose(&f_plus()).unwrap();
        assert_eq!(t.oo, CenterScalar::ONE);
        assert_eq!((t.oi, t.io, t.ii), (CenterScalar::ZERO, CenterScalar::ZERO, CenterScalar::ZERO));

        let k = WeylSpinor::cus(1.0, 1.0);
        let x = k.embed() * k.embed().reverse();
        let t = tetrad_decompose(&x).unwrap();
        for l in NullTetradLabel::ALL {
            assert!((t.get(l) - CenterScalar::ONE).abs() < 1e-15, "{}", l.name());
        }

        let k = sample();
        let x = k.embed() * k.embed().reverse();
        let t = tetrad_decompose(&x).unwrap();
        assert!((t.oo - k.c1 * k.c1.conj()).abs() < 1e-15);
        assert!((t.oi - k.c1 * k.c2.conj()).abs() < 1e-15);
        assert!((t.io - k.c2 * k.c1.conj()).abs() < 1e-15);
        assert!((t.ii - k.c2 * k.c2.conj()).abs() < 1e-15);
        assert!(t.rank_defect().abs() < 1e-15);
        assert!(tetrad_decompose(&crate::algebra::blade03(&[1])).is_err());
    }

    #[test]
    fn json_form() {
        let a = Paravector::new(1.0, [0.0, 0.0, 1.0]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"a0":1.0,"a":[0.0,0.0,1.0]}"#);
    }
}
