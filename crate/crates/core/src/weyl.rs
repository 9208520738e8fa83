//! Algebraic Weyl spinors in the four one-sided minimal ideals of `Cl(3,0)`
//! built from `f+- = (1 +- e3)/2`, their spinorial metrics, and the
//! `SL(2,C)` transformation laws.
//!
//! | kind | ideal      | embedding                  |
//! |------|------------|----------------------------|
//! | CUS  | `Cl f+`    | `c1 f+ + c2 e1 f+`         |
//! | CVUS | `f+ Cl`    | `c1 f+ + c2 f+ e1`         |
//! | CDS  | `f- Cl`    | `c1 f- e1 + c2 f-`         |
//! | CVDS | `Cl f-`    | `c1 e1 f- + c2 f-`         |
//!
//! Components are center elements `a + b e123`, so they commute with every
//! basis element of the ideal.

use serde::{Deserialize, Serialize};

use crate::algebra::{blade30, Blade, CenterScalar, Multivector, Signature};
use crate::error::{Error, Result};
use crate::repr::{rep_cl30, EVEN_TOL};

/// Tolerance on `|R conj(R) - 1|_inf` accepted by [`Rotor::new`].
pub const ROTOR_TOL: f64 = 1e-10;

pub fn f_plus() -> Multivector {
    (Multivector::one(Signature::CL30) + blade30(&[3])).scale(0.5)
}

pub fn f_minus() -> Multivector {
    (Multivector::one(Signature::CL30) - blade30(&[3])).scale(0.5)
}

/// Which one-sided ideal a spinor lives in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealTag {
    /// `Cl(3,0) f+`
    LeftPlus,
    /// `f+ Cl(3,0)`
    RightPlus,
    /// `f- Cl(3,0)`
    RightMinus,
    /// `Cl(3,0) f-`
    LeftMinus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpinorKind {
    /// contravariant undotted
    #[serde(rename = "CUS")]
    Cus,
    /// covariant undotted
    #[serde(rename = "CVUS")]
    Cvus,
    /// contravariant dotted
    #[serde(rename = "CDS")]
    Cds,
    /// covariant dotted
    #[serde(rename = "CVDS")]
    Cvds,
}

impl SpinorKind {
    pub const ALL: [SpinorKind; 4] = [SpinorKind::Cus, SpinorKind::Cvus, SpinorKind::Cds, SpinorKind::Cvds];

    pub fn ideal(self) -> IdealTag {
        match self {
            SpinorKind::Cus => IdealTag::LeftPlus,
            SpinorKind::Cvus => IdealTag::RightPlus,
            SpinorKind::Cds => IdealTag::RightMinus,
            SpinorKind::Cvds => IdealTag::LeftMinus,
        }
    }

    pub fn from_ideal(tag: IdealTag) -> SpinorKind {
        match tag {
            IdealTag::LeftPlus => SpinorKind::Cus,
            IdealTag::RightPlus => SpinorKind::Cvus,
            IdealTag::RightMinus => SpinorKind::Cds,
            IdealTag::LeftMinus => SpinorKind::Cvds,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpinorKind::Cus => "CUS",
            SpinorKind::Cvus => "CVUS",
            SpinorKind::Cds => "CDS",
            SpinorKind::Cvds => "CVDS",
        }
    }

    // (row, col) of c1 and c2 in the 2x2 representation
    fn slots(self) -> [(usize, usize); 2] {
        match self {
            SpinorKind::Cus => [(0, 0), (1, 0)],
            SpinorKind::Cvus => [(0, 0), (0, 1)],
            SpinorKind::Cds => [(1, 0), (1, 1)],
            SpinorKind::Cvds => [(0, 1), (1, 1)],
        }
    }
}

/// A two-component Weyl spinor tagged with its ideal.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeylSpinor {
    pub kind: SpinorKind,
    pub c1: CenterScalar,
    pub c2: CenterScalar,
}

impl WeylSpinor {
    pub fn new(kind: SpinorKind, c1: impl Into<CenterScalar>, c2: impl Into<CenterScalar>) -> Self {
        WeylSpinor { kind, c1: c1.into(), c2: c2.into() }
    }

    pub fn cus(c1: impl Into<CenterScalar>, c2: impl Into<CenterScalar>) -> Self {
        Self::new(SpinorKind::Cus, c1, c2)
    }

    /// The two ideal basis elements for this kind.
    pub fn basis(kind: SpinorKind) -> [Multivector; 2] {
        let e1 = blade30(&[1]);
        match kind {
            SpinorKind::Cus => [f_plus(), e1 * f_plus()],
            SpinorKind::Cvus => [f_plus(), f_plus() * e1],
            SpinorKind::Cds => [f_minus() * e1, f_minus()],
            SpinorKind::Cvds => [e1 * f_minus(), f_minus()],
        }
    }

    /// The ideal element `c1 b1 + c2 b2`.
    pub fn embed(&self) -> Multivector {
        let [b1, b2] = Self::basis(self.kind);
        self.c1 * b1 + self.c2 * b2
    }

    /// Reads components of an element of the ideal named by `kind`. The
    /// element must lie in that ideal up to `tol * max(1, |x|_inf)`.
    pub fn from_element(kind: SpinorKind, x: &Multivector, tol: f64) -> Result<Self> {
        let m = rep_cl30(x)?;
        let [s1, s2] = kind.slots();
        let mut residual = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                if (i, j) != s1 && (i, j) != s2 {
                    residual = residual.max(m.0[i][j].norm());
                }
            }
        }
        if residual > tol * x.norm_inf().max(1.0) {
            return Err(Error::OutOfSpan { residual });
        }
        Ok(WeylSpinor { kind, c1: m.0[s1.0][s1.1].into(), c2: m.0[s2.0][s2.1].into() })
    }

    fn expect(&self, kind: SpinorKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch { expected: kind.name(), found: self.kind.name() })
        }
    }
}

/// `psi' = <psi>_even + <psi>_odd e3`, the even element with `psi' f+ = psi f+`.
pub fn reduce_to_even(psi: &Multivector) -> Result<Multivector> {
    psi.signature().expect(Signature::CL30)?;
    Ok(psi.even_part() + psi.odd_part() * blade30(&[3]))
}

/// CUS components of `psi f+` for even `psi = s + b12 e12 + b13 e13 + b23 e23`:
/// `k1 = s + b12 e123`, `k2 = b13 + b23 e123`.
pub fn cus_from_even(psi: &Multivector) -> Result<WeylSpinor> {
    psi.signature().expect(Signature::CL30)?;
    psi.require_even(EVEN_TOL)?;
    let s = psi.scalar_part();
    let b12 = psi.get(Blade(0b011));
    let b13 = psi.get(Blade(0b101));
    let b23 = psi.get(Blade(0b110));
    Ok(WeylSpinor::cus(CenterScalar::new(s, b12), CenterScalar::new(b13, b23)))
}

/// `K* = e1 conj(K)`: `(k_1, k_2) = (-k^2, k^1)`.
pub fn to_cvus(k: &WeylSpinor) -> Result<WeylSpinor> {
    k.expect(SpinorKind::Cus)?;
    Ok(WeylSpinor::new(SpinorKind::Cvus, -k.c2, k.c1))
}

/// `K-bar = e1 reverse(K)`: components are the complex conjugates.
pub fn to_cds(k: &WeylSpinor) -> Result<WeylSpinor> {
    k.expect(SpinorKind::Cus)?;
    Ok(WeylSpinor::new(SpinorKind::Cds, k.c1.conj(), k.c2.conj()))
}

/// `K-bar* = conj(e1 K-bar)`: `(kbar_1', kbar_2') = (-kbar^2', kbar^1')`.
pub fn to_cvds(kbar: &WeylSpinor) -> Result<WeylSpinor> {
    kbar.expect(SpinorKind::Cds)?;
    Ok(WeylSpinor::new(SpinorKind::Cvds, -kbar.c2, kbar.c1))
}

/// `G_{f+}(K, eta) = K* eta = (-k^2 eta^1 + k^1 eta^2) f+`; returns the
/// coefficient of `f+`.
pub fn metric_fplus(k: &WeylSpinor, eta: &WeylSpinor) -> Result<CenterScalar> {
    k.expect(SpinorKind::Cus)?;
    eta.expect(SpinorKind::Cus)?;
    Ok(-k.c2 * eta.c1 + k.c1 * eta.c2)
}

/// `G_{f-}(K-bar, eta-bar*) = (etabar^1' kbar^2' - etabar^2' kbar^1') f-`,
/// with `etabar^1' = etabar_2'` and `etabar^2' = -etabar_1'`.
pub fn metric_fminus(kbar: &WeylSpinor, eta_bar_star: &WeylSpinor) -> Result<CenterScalar> {
    kbar.expect(SpinorKind::Cds)?;
    eta_bar_star.expect(SpinorKind::Cvds)?;
    let eta_up1 = eta_bar_star.c2;
    let eta_up2 = -eta_bar_star.c1;
    Ok(eta_up1 * kbar.c2 - eta_up2 * kbar.c1)
}

/// Coefficient `c` of an element `c f` with `f = f+` or `f-`: twice the
/// scalar and pseudoscalar parts.
pub fn idempotent_coefficient(x: &Multivector) -> CenterScalar {
    CenterScalar::new(2.0 * x.scalar_part(), 2.0 * x.get(Blade(0b111)))
}

/// [`metric_fplus`] evaluated through the algebra: `f+` coefficient of
/// `embed(K*) embed(eta)`.
pub fn metric_fplus_product(k: &WeylSpinor, eta: &WeylSpinor) -> Result<CenterScalar> {
    eta.expect(SpinorKind::Cus)?;
    let kstar = to_cvus(k)?;
    Ok(idempotent_coefficient(&(kstar.embed() * eta.embed())))
}

/// [`metric_fminus`] evaluated through the algebra.
pub fn metric_fminus_product(kbar: &WeylSpinor, eta_bar_star: &WeylSpinor) -> Result<CenterScalar> {
    kbar.expect(SpinorKind::Cds)?;
    eta_bar_star.expect(SpinorKind::Cvds)?;
    Ok(idempotent_coefficient(&(kbar.embed() * eta_bar_star.embed())))
}

/// Element of `$pin+(1,3)`: any `Cl(3,0)` element with `R conj(R) = 1`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Rotor(Multivector);

impl Rotor {
    pub fn new(r: Multivector) -> Result<Self> {
        r.signature().expect(Signature::CL30)?;
        let deviation = (r * r.conjugate() - Multivector::one(Signature::CL30)).norm_inf();
        if deviation.is_nan() || deviation > ROTOR_TOL {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Rotor(r))
    }

    /// Divides `r` by a square root of its center-valued norm `r conj(r)`.
    pub fn normalize(r: &Multivector) -> Result<Self> {
        r.signature().expect(Signature::CL30)?;
        let n = r * &r.conjugate();
        let z = idempotent_coefficient(&n).scale(0.5).to_complex();
        if z.norm() <= 1e-300 {
            return Err(Error::SingularDensity { re: z.re, im: z.im });
        }
        let inv_sqrt = CenterScalar::from(z.sqrt().inv());
        Rotor::new(inv_sqrt * *r)
    }

    pub fn identity() -> Self {
        Rotor(Multivector::one(Signature::CL30))
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    /// `R^{-1} = conj(R)`
    pub fn inverse(&self) -> Multivector {
        self.0.conjugate()
    }
}

/// Applies the transformation law for the spinor's kind:
/// `K -> R K`, `K* -> K* R^-1`, `K-bar -> K-bar (R^)^-1`, `K-bar* -> R^ K-bar*`.
pub fn transform(r: &Rotor, s: &WeylSpinor) -> Result<WeylSpinor> {
    let rm = r.0;
    let x = s.embed();
    let y = match s.kind {
        SpinorKind::Cus => rm * x,
        SpinorKind::Cvus => x * r.inverse(),
        // (R^)^-1 = conj(R^) = reverse(R)
        SpinorKind::Cds => x * rm.reverse(),
        SpinorKind::Cvds => rm.involute() * x,
    };
    WeylSpinor::from_element(s.kind, &y, 1e-9)
}
