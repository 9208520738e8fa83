use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{Blade, Multivector, Signature};
use crate::error::Result;

const E123: Blade = Blade(0b111);

/// Element `re + im e123` of the center of `Cl(3,0)`.
///
/// `e123` is central and squares to `-1`, so these multiply as complex
/// numbers; reversion and grade involution both act as complex conjugation,
/// Clifford conjugation acts trivially.
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct CenterScalar {
    pub re: f64,
    pub im: f64,
}

impl CenterScalar {
    pub const ZERO: CenterScalar = CenterScalar { re: 0.0, im: 0.0 };
    pub const ONE: CenterScalar = CenterScalar { re: 1.0, im: 0.0 };
    /// `e123`
    pub const I: CenterScalar = CenterScalar { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        CenterScalar { re, im }
    }

    pub fn conj(self) -> Self {
        CenterScalar::new(self.re, -self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn scale(self, s: f64) -> Self {
        CenterScalar::new(self.re * s, self.im * s)
    }

    /// Embeds as `re + im e123` in `Cl(3,0)`.
    pub fn to_multivector(self) -> Multivector {
        Multivector::from_terms(Signature::CL30, &[(Blade::SCALAR, self.re), (E123, self.im)])
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl From<Complex64> for CenterScalar {
    fn from(z: Complex64) -> Self {
        CenterScalar::new(z.re, z.im)
    }
}

impl From<[f64; 2]> for CenterScalar {
    fn from(v: [f64; 2]) -> Self {
        CenterScalar::new(v[0], v[1])
    }
}

impl From<CenterScalar> for [f64; 2] {
    fn from(c: CenterScalar) -> Self {
        [c.re, c.im]
    }
}

impl From<f64> for CenterScalar {
    fn from(re: f64) -> Self {
        CenterScalar::new(re, 0.0)
    }
}

impl Add for CenterScalar {
    type Output = CenterScalar;
    fn add(self, o: CenterScalar) -> CenterScalar {
        CenterScalar::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for CenterScalar {
    type Output = CenterScalar;
    fn sub(self, o: CenterScalar) -> CenterScalar {
        CenterScalar::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for CenterScalar {
    type Output = CenterScalar;
    fn neg(self) -> CenterScalar {
        CenterScalar::new(-self.re, -self.im)
    }
}

impl Mul for CenterScalar {
    type Output = CenterScalar;
    fn mul(self, o: CenterScalar) -> CenterScalar {
        CenterScalar::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

/// `c * psi` for a `Cl(3,0)` multivector.
impl Mul<Multivector> for CenterScalar {
    type Output = Multivector;
    fn mul(self, psi: Multivector) -> Multivector {
        self.to_multivector() * psi
    }
}

/// Splits a `Cl(3,0)` element into its center part (grades 0 and 3) and the
/// remaining grades 1 and 2.
pub fn center_decompose(a: &Multivector) -> Result<(CenterScalar, Multivector)> {
    a.signature().expect(Signature::CL30)?;
    let c = CenterScalar::new(a.scalar_part(), a.get(E123));
    let rest = a.filter(|b| b.grade() == 1 || b.grade() == 2);
    Ok((c, rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        let sig = Signature::CL30;
        let a = Multivector::from_terms(sig, &[(Blade::SCALAR, 2.0), (E123, 5.0)]);
        let (c, r) = center_decompose(&a).unwrap();
        assert_eq!(c, CenterScalar::new(2.0, 5.0));
        assert_eq!(r, Multivector::zero(sig));

        let e1 = Multivector::generator(sig, 1);
        let (c, r) = center_decompose(&e1).unwrap();
        assert_eq!(c, CenterScalar::ZERO);
        assert_eq!(r, e1);
    }

    #[test]
    fn decompose_rejects_other_signatures() {
        assert!(center_decompose(&Multivector::one(Signature::CL03)).is_err());
    }

    #[test]
    fn multiplication_is_complex() {
        let a = CenterScalar::new(0.3, -1.2);
        let b = CenterScalar::new(2.0, 0.5);
        let lhs = (a * b).to_multivector();
        let rhs = a.to_multivector() * b.to_multivector();
        assert!((lhs - rhs).norm_inf() < 1e-15);
        assert_eq!(a.to_multivector().reverse(), a.conj().to_multivector());
    }
}
