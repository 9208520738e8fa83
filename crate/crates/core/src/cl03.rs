//! The `Cl(0,3) = H + H` sector.
//!
//! `J = e123` squares to `+1` and is central, so `f+- = (1 +- J)/2` are central
//! idempotents splitting the algebra into two quaternion copies. Spinor
//! components live in `span{1, e12}`, which behaves like the complex numbers
//! but is not central: `e13` and `e23` anticommute with `e12`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::{blade03, Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::repr::EVEN_TOL;

const E12: Blade = Blade(0b011);
const E13: Blade = Blade(0b101);
const E23: Blade = Blade(0b110);

/// `a + b e12` in `Cl(0,3)`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct PlaneScalar {
    pub re: f64,
    pub im: f64,
}

impl PlaneScalar {
    pub const ZERO: PlaneScalar = PlaneScalar { re: 0.0, im: 0.0 };
    pub const ONE: PlaneScalar = PlaneScalar { re: 1.0, im: 0.0 };
    /// `e12`
    pub const E12: PlaneScalar = PlaneScalar { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        PlaneScalar { re, im }
    }

    /// `a - b e12`, the action of Clifford conjugation.
    pub fn conj(self) -> Self {
        PlaneScalar::new(self.re, -self.im)
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn embed(self) -> Multivector {
        Multivector::from_terms(Signature::CL03, &[(Blade::SCALAR, self.re), (E12, self.im)])
    }

    /// The `span{1, e12}` part of `x`.
    pub fn project(x: &Multivector) -> Self {
        PlaneScalar::new(x.scalar_part(), x.get(E12))
    }
}

impl From<[f64; 2]> for PlaneScalar {
    fn from(v: [f64; 2]) -> Self {
        PlaneScalar::new(v[0], v[1])
    }
}

impl From<PlaneScalar> for [f64; 2] {
    fn from(z: PlaneScalar) -> Self {
        [z.re, z.im]
    }
}

impl From<f64> for PlaneScalar {
    fn from(re: f64) -> Self {
        PlaneScalar::new(re, 0.0)
    }
}

impl Add for PlaneScalar {
    type Output = PlaneScalar;
    fn add(self, o: PlaneScalar) -> PlaneScalar {
        PlaneScalar::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for PlaneScalar {
    type Output = PlaneScalar;
    fn sub(self, o: PlaneScalar) -> PlaneScalar {
        PlaneScalar::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for PlaneScalar {
    type Output = PlaneScalar;
    fn neg(self) -> PlaneScalar {
        PlaneScalar::new(-self.re, -self.im)
    }
}

impl Mul for PlaneScalar {
    type Output = PlaneScalar;
    fn mul(self, o: PlaneScalar) -> PlaneScalar {
        PlaneScalar::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

/// `J = e123`, squaring to `+1`.
pub fn pseudoscalar03() -> Multivector {
    blade03(&[1, 2, 3])
}

/// `(f+, f-)` with `f+- = (1 +- J)/2`.
pub fn idempotents03() -> (Multivector, Multivector) {
    let one = Multivector::one(Signature::CL03);
    let j = pseudoscalar03();
    ((one + j).scale(0.5), (one - j).scale(0.5))
}

/// `A' = <A>_even + <A>_odd J`, the even element with `A' f+ = A f+`.
pub fn reduce_even03(a: &Multivector) -> Result<Multivector> {
    a.signature().expect(Signature::CL03)?;
    Ok(a.even_part() + a.odd_part() * pseudoscalar03())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind03 {
    #[serde(rename = "CUS03")]
    Cus03,
    #[serde(rename = "CDS03")]
    Cds03,
}

impl Kind03 {
    pub fn name(self) -> &'static str {
        match self {
            Kind03::Cus03 => "CUS03",
            Kind03::Cds03 => "CDS03",
        }
    }
}

/// `K = (k1 + e13 k2) f+` or `K-bar = f+ kbar1 - f+ kbar2 e13`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeylSpinor03 {
    pub kind: Kind03,
    pub c1: PlaneScalar,
    pub c2: PlaneScalar,
}

impl WeylSpinor03 {
    pub fn cus(c1: impl Into<PlaneScalar>, c2: impl Into<PlaneScalar>) -> Self {
        WeylSpinor03 { kind: Kind03::Cus03, c1: c1.into(), c2: c2.into() }
    }

    pub fn cds(c1: impl Into<PlaneScalar>, c2: impl Into<PlaneScalar>) -> Self {
        WeylSpinor03 { kind: Kind03::Cds03, c1: c1.into(), c2: c2.into() }
    }

    pub fn embed(&self) -> Multivector {
        let (fp, _) = idempotents03();
        let e13 = blade03(&[1, 3]);
        match self.kind {
            Kind03::Cus03 => (self.c1.embed() + e13 * self.c2.embed()) * fp,
            Kind03::Cds03 => fp * (self.c1.embed() - self.c2.embed() * e13),
        }
    }

    /// The even element `k1 + e13 k2`.
    pub fn even_form(&self) -> Result<Multivector> {
        self.expect(Kind03::Cus03)?;
        Ok(self.c1.embed() + blade03(&[1, 3]) * self.c2.embed())
    }

    fn expect(&self, kind: Kind03) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch { expected: kind.name(), found: self.kind.name() })
        }
    }
}

/// `Q = a + b e12 + c e13 + d e23` gives `k1 = a + b e12`, `k2 = c - d e12`.
pub fn cus03_from_even(q: &Multivector) -> Result<WeylSpinor03> {
    q.signature().expect(Signature::CL03)?;
    q.require_even(EVEN_TOL)?;
    Ok(WeylSpinor03::cus(PlaneScalar::new(q.scalar_part(), q.get(E12)), PlaneScalar::new(q.get(E13), -q.get(E23))))
}

/// `K-bar = conj(K)`: conjugate components.
pub fn to_cds03(k: &WeylSpinor03) -> Result<WeylSpinor03> {
    k.expect(Kind03::Cus03)?;
    Ok(WeylSpinor03::cds(k.c1.conj(), k.c2.conj()))
}

/// `k2 eta1 - k1 eta2`, the coefficient of `f+`.
pub fn metric03(k: &WeylSpinor03, eta: &WeylSpinor03) -> Result<PlaneScalar> {
    k.expect(Kind03::Cus03)?;
    eta.expect(Kind03::Cus03)?;
    Ok(k.c2 * eta.c1 - k.c1 * eta.c2)
}

/// [`metric03`] through the algebra: twice the `span{1, e12}` part of
/// `e13 conj(K) eta`. Twice the scalar part alone only recovers the real
/// component.
pub fn metric03_product(k: &WeylSpinor03, eta: &WeylSpinor03) -> Result<PlaneScalar> {
    k.expect(Kind03::Cus03)?;
    eta.expect(Kind03::Cus03)?;
    let x = blade03(&[1, 3]) * k.embed().conjugate() * eta.embed();
    let z = PlaneScalar::project(&x);
    Ok(PlaneScalar::new(2.0 * z.re, 2.0 * z.im))
}

/// `sigma(X) = e32 conj(X) e23` on any element.
pub fn sigma_any(x: &Multivector) -> Result<Multivector> {
    x.signature().expect(Signature::CL03)?;
    Ok(blade03(&[2, 3]).scale(-1.0) * x.conjugate() * blade03(&[2, 3]))
}

/// `sigma(Q) = e32 conj(Q) e23` for even `Q`: `k1 + e13 k2 -> k1 + k2 e13`.
pub fn sigma(q: &Multivector) -> Result<Multivector> {
    q.signature().expect(Signature::CL03)?;
    q.require_even(EVEN_TOL)?;
    sigma_any(q)
}

/// `K* = f+ (c1 + c2 e13)` in right-module form.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualSpinor03 {
    pub c1: PlaneScalar,
    pub c2: PlaneScalar,
}

impl DualSpinor03 {
    pub fn embed(&self) -> Multivector {
        let (fp, _) = idempotents03();
        fp * (self.c1.embed() + self.c2.embed() * blade03(&[1, 3]))
    }
}

/// `K* = sigma(K) e13 = f+ (-k2 + k1 e13)`.
pub fn sigma_dual_spinor(k: &WeylSpinor03) -> Result<DualSpinor03> {
    k.expect(Kind03::Cus03)?;
    Ok(DualSpinor03 { c1: -k.c2, c2: k.c1 })
}

/// `(Y + e21 Y e12) / 2` with `Y = sigma(psi) e13 phi`: the part of `Y`
/// commuting with `e12`, which for even arguments is its `span{1, e12}` part.
pub fn metric03_alt(psi: &Multivector, phi: &Multivector) -> Result<Multivector> {
    let y = sigma_pairing(psi, phi)?;
    let e12 = blade03(&[1, 2]);
    Ok((y + e12.scale(-1.0) * y * e12).scale(0.5))
}

/// `Y = sigma(psi) e13 phi` for even `psi`, `phi`.
pub fn sigma_pairing(psi: &Multivector, phi: &Multivector) -> Result<Multivector> {
    phi.signature().expect(Signature::CL03)?;
    phi.require_even(EVEN_TOL)?;
    Ok(sigma(psi)? * blade03(&[1, 3]) * *phi)
}

/// Even element fed to [`metric03_alt`] for a CUS03 spinor: `e21 (k1 + e13 k2) e12`.
/// With it `sigma(psi) e13 = e13 conj(k1 + e13 k2)`, so the two metrics agree.
pub fn metric03_alt_argument(k: &WeylSpinor03) -> Result<Multivector> {
    let e12 = blade03(&[1, 2]);
    Ok(e12.scale(-1.0) * k.even_form()? * e12)
}

/// Quaternion `w + x i + y j + z k`.
pub type Quaternion = [f64; 4];

pub fn quat_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

/// Images of a `Cl(0,3)` element in the two quaternion factors.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QPair {
    pub plus: Quaternion,
    pub minus: Quaternion,
}

impl Mul for QPair {
    type Output = QPair;
    fn mul(self, o: QPair) -> QPair {
        QPair { plus: quat_mul(self.plus, o.plus), minus: quat_mul(self.minus, o.minus) }
    }
}

// i = e23, j = e31 = -e13, k = e12
fn quaternion_of_even(q: &Multivector) -> Quaternion {
    [q.scalar_part(), q.get(E23), -q.get(E13), q.get(E12)]
}

fn even_of_quaternion(q: Quaternion) -> Multivector {
    Multivector::from_terms(Signature::CL03, &[(Blade::SCALAR, q[0]), (E23, q[1]), (E13, -q[2]), (E12, q[3])])
}

/// `A f+- = (E +- O J) f+-` with `E`, `O` the even and odd parts; the even
/// factors are read as quaternions with `i = e23`, `j = e31`, `k = e12`.
pub fn rep_h_plus_h(a: &Multivector) -> Result<QPair> {
    a.signature().expect(Signature::CL03)?;
    let even = a.even_part();
    let odd_j = a.odd_part() * pseudoscalar03();
    Ok(QPair { plus: quaternion_of_even(&(even + odd_j)), minus: quaternion_of_even(&(even - odd_j)) })
}

/// `q+ f+ + q- f-`.
pub fn rep_h_plus_h_inverse(pair: &QPair) -> Multivector {
    let (fp, fm) = idempotents03();
    even_of_quaternion(pair.plus) * fp + even_of_quaternion(pair.minus) * fm
}
