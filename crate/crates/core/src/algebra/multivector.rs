use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::algebra::{Blade, Signature};
use crate::error::{Error, Result};

/// Dense element of `Cl(p,q)`, one coefficient per basis blade, indexed by
/// blade mask. Slots at or beyond `2^(p+q)` are always zero.
#[derive(Copy, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: [f64; 16],
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, coeffs: [0.0; 16] }
    }

    pub fn scalar(sig: Signature, s: f64) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = s;
        m
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    /// `coeff * e_blade`
    pub fn blade(sig: Signature, blade: Blade, coeff: f64) -> Self {
        assert!(blade.mask() < sig.size(), "{blade} not in {sig}");
        let mut m = Self::zero(sig);
        m.coeffs[blade.mask()] = coeff;
        m
    }

    /// Generator `e_index` (1-based).
    pub fn generator(sig: Signature, index: usize) -> Self {
        assert!((1..=sig.dim()).contains(&index), "no e{index} in {sig}");
        Self::blade(sig, Blade::generator(index), 1.0)
    }

    /// Basis blade from 1-based indices, e.g. `basis(sig, &[1, 3])` for `e13`.
    pub fn basis(sig: Signature, indices: &[usize]) -> Self {
        Self::blade(sig, Blade::from_indices(indices), 1.0)
    }

    /// Builds a multivector from coefficients in mask order. Extra slots must
    /// not be supplied.
    pub fn from_coeffs(sig: Signature, coeffs: &[f64]) -> Self {
        assert_eq!(coeffs.len(), sig.size(), "coefficient count for {sig}");
        let mut m = Self::zero(sig);
        m.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        m
    }

    pub fn from_terms(sig: Signature, terms: &[(Blade, f64)]) -> Self {
        let mut m = Self::zero(sig);
        for &(b, c) in terms {
            assert!(b.mask() < sig.size());
            m.coeffs[b.mask()] += c;
        }
        m
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.sig.size()]
    }

    pub fn get(&self, blade: Blade) -> f64 {
        self.coeffs[blade.mask()]
    }

    pub fn set(&mut self, blade: Blade, value: f64) {
        assert!(blade.mask() < self.sig.size());
        self.coeffs[blade.mask()] = value;
    }

    /// Nonzero terms in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.coeffs().iter().enumerate().filter(|(_, c)| **c != 0.0).map(|(m, &c)| (Blade(m as u8), c))
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Coefficient of the unit pseudoscalar `e_{12..n}`.
    pub fn pseudoscalar_part(&self) -> f64 {
        self.coeffs[self.sig.size() - 1]
    }

    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, Blade((sig.size() - 1) as u8), 1.0)
    }

    /// Geometric product, rejecting mixed signatures.
    pub fn try_mul(&self, rhs: &Multivector) -> Result<Multivector> {
        self.same_sig(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Multivector) -> Multivector {
        let sig = self.sig;
        let n = sig.size();
        let mut out = [0.0; 16];
        for a in 0..n {
            let ca = self.coeffs[a];
            if ca == 0.0 {
                continue;
            }
            for b in 0..n {
                let cb = rhs.coeffs[b];
                if cb == 0.0 {
                    continue;
                }
                let (s, blade) = Blade(a as u8).product(Blade(b as u8), sig);
                out[blade.mask()] += s * ca * cb;
            }
        }
        Multivector { sig, coeffs: out }
    }

    /// Outer (wedge) product.
    pub fn wedge(&self, rhs: &Multivector) -> Result<Multivector> {
        self.same_sig(rhs)?;
        let sig = self.sig;
        let n = sig.size();
        let mut out = [0.0; 16];
        for a in 0..n {
            for b in 0..n {
                if a & b != 0 {
                    continue;
                }
                let (s, blade) = Blade(a as u8).product(Blade(b as u8), sig);
                out[blade.mask()] += s * self.coeffs[a] * rhs.coeffs[b];
            }
        }
        Ok(Multivector { sig, coeffs: out })
    }

    /// `<a>_k`
    pub fn grade(&self, k: usize) -> Result<Multivector> {
        let dim = self.sig.dim();
        if k > dim {
            return Err(Error::GradeOutOfRange { grade: k, dim });
        }
        Ok(self.filter(|b| b.grade() == k))
    }

    pub fn even_part(&self) -> Multivector {
        self.filter(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Multivector {
        self.filter(|b| b.grade() % 2 == 1)
    }

    /// Keeps only the terms whose blade satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Multivector {
        let mut out = Self::zero(self.sig);
        for m in 0..self.sig.size() {
            if keep(Blade(m as u8)) {
                out.coeffs[m] = self.coeffs[m];
            }
        }
        out
    }

    fn map_blades(&self, sign: impl Fn(Blade) -> f64) -> Multivector {
        let mut out = *self;
        for m in 0..self.sig.size() {
            out.coeffs[m] *= sign(Blade(m as u8));
        }
        out
    }

    /// Reversion `~`, sign `(-1)^{[k/2]}` on grade `k`.
    pub fn reverse(&self) -> Multivector {
        self.map_blades(Blade::reversion_sign)
    }

    /// Grade involution `^`, sign `(-1)^k` on grade `k`.
    pub fn involute(&self) -> Multivector {
        self.map_blades(Blade::involution_sign)
    }

    /// Clifford conjugation: reversion followed by grade involution.
    pub fn conjugate(&self) -> Multivector {
        self.map_blades(|b| b.reversion_sign() * b.involution_sign())
    }

    /// Extended metric: zero across grades, Gram determinant on equal-grade
    /// blades, extended bilinearly. For the orthonormal basis this reduces to
    /// `sum_A a_A b_A g(e_A, e_A)`.
    pub fn metric(&self, rhs: &Multivector) -> Result<f64> {
        self.same_sig(rhs)?;
        Ok((0..self.sig.size())
            .map(|m| {
                let b = Blade(m as u8);
                self.coeffs[m] * rhs.coeffs[m] * b.metric_square(self.sig)
            })
            .sum())
    }

    pub fn scale(&self, s: f64) -> Multivector {
        let mut out = *self;
        out.coeffs.iter_mut().for_each(|c| *c *= s);
        out
    }

    pub fn norm_inf(&self) -> f64 {
        self.coeffs().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_finite())
    }

    /// `ab - ba`
    pub fn commutator(&self, rhs: &Multivector) -> Result<Multivector> {
        Ok(self.try_mul(rhs)? - rhs.try_mul(self)?)
    }

    /// Rejects inputs with an odd part larger than `tol * max(1, |a|)`.
    pub fn require_even(&self, tol: f64) -> Result<()> {
        let odd = self.odd_part().norm_inf();
        if odd > tol * self.norm_inf().max(1.0) {
            Err(Error::NotEven { odd_norm: odd })
        } else {
            Ok(())
        }
    }

    /// Exponential. Uses the closed form when `a^2` is a real scalar (up to
    /// `1e-12 |a|^2`), otherwise scaling and squaring of a truncated series.
    pub fn exp(&self) -> Multivector {
        let sig = self.sig;
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Self::one(sig);
        }
        let sq = *self * *self;
        let lambda = sq.scalar_part();
        let off = (sq - Self::scalar(sig, lambda)).norm_inf();
        if off <= 1e-12 * n2 {
            let one = Self::one(sig);
            return if lambda < 0.0 {
                let th = (-lambda).sqrt();
                one.scale(th.cos()) + self.scale(th.sin() / th)
            } else if lambda > 0.0 {
                let th = lambda.sqrt();
                one.scale(th.cosh()) + self.scale(th.sinh() / th)
            } else {
                one + *self
            };
        }
        self.exp_series()
    }

    fn exp_series(&self) -> Multivector {
        let norm = self.norm();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
        let a = self.scale(0.5f64.powi(squarings));
        let mut sum = Self::one(self.sig);
        let mut term = Self::one(self.sig);
        for k in 1..64 {
            term = (term * a).scale(1.0 / k as f64);
            sum += term;
            if term.norm_inf() <= 1e-14 * sum.norm_inf() {
                break;
            }
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }

    fn same_sig(&self, rhs: &Multivector) -> Result<()> {
        if self.sig == rhs.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch { left: self.sig, right: rhs.sig })
        }
    }
}

/// Geometric product of two multivectors with the same signature.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_mul(b)
}

/// Panics on signature mismatch; use [`Multivector::try_mul`] for untrusted input.
impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in product");
        self.mul_unchecked(&rhs)
    }
}

impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        *self * *rhs
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in sum");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Multivector) -> Multivector {
        self + (-rhs)
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.sig)?;
        let mut first = true;
        for (b, c) in self.terms() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{c} {b}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, c) in self.terms() {
            if first {
                write!(f, "{c}")?;
            } else if c < 0.0 {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if b != Blade::SCALAR {
                write!(f, "{b}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
