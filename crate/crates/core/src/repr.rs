//! Matrix representations: `Cl(3,0)` on 2x2 complex matrices, the even
//! subalgebra of `Cl(1,3)` on 4x4 complex matrices (standard Dirac basis),
//! and the isomorphism `Cl(1,3)+ ~ Cl(3,0)` given by `gamma_k gamma_0 -> e_k`.

use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::{Blade, Multivector, Signature};
use crate::error::Result;
use crate::field::{Field, SpacetimePoint};

/// Tolerance (relative to `max(1, |a|_inf)`) for the "even input" checks.
pub const EVEN_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix of size `N`, row-major.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct ComplexMatrix<const N: usize>(pub [[Complex64; N]; N]);

pub type Mat2 = ComplexMatrix<2>;
pub type Mat4 = ComplexMatrix<4>;

impl<const N: usize> ComplexMatrix<N> {
    pub fn zero() -> Self {
        ComplexMatrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|z| *z *= s);
        m
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> [Complex64; N] {
        std::array::from_fn(|i| self.0[i][j])
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.iter().flatten().zip(other.0.iter().flatten()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl ComplexMatrix<2> {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        ComplexMatrix([[a, b], [c, d]])
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Inverse, or `None` for a singular matrix.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 {
            return None;
        }
        let [[a, b], [c, d]] = self.0;
        Some(ComplexMatrix([[d, -b], [-c, a]]).scale(det.inv()))
    }
}

impl<const N: usize> Mul for ComplexMatrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                for j in 0..N {
                    m.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Add for ComplexMatrix<N> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()).for_each(|(a, b)| *a += b);
        self
    }
}

impl<const N: usize> Sub for ComplexMatrix<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + rhs.scale(-ONE)
    }
}

/// Row-major array of `[re, im]` pairs.
impl<const N: usize> Serialize for ComplexMatrix<N> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut rows = s.serialize_seq(Some(N))?;
        for row in &self.0 {
            let pairs: Vec<[f64; 2]> = row.iter().map(|z| [z.re, z.im]).collect();
            rows.serialize_element(&pairs)?;
        }
        rows.end()
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Pauli matrices `sigma_1, sigma_2, sigma_3`.
pub fn pauli() -> [Mat2; 3] {
    [Mat2::new(ZERO, ONE, ONE, ZERO), Mat2::new(ZERO, -I, I, ZERO), Mat2::new(ONE, ZERO, ZERO, -ONE)]
}

/// Images of all basis blades of a signature, built by multiplying the
/// generator images in ascending order.
fn blade_images<const N: usize>(sig: Signature, gens: &[ComplexMatrix<N>]) -> Vec<ComplexMatrix<N>> {
    (0..sig.size())
        .map(|m| (0..sig.dim()).filter(|b| m & (1 << b) != 0).fold(ComplexMatrix::identity(), |acc, b| acc * gens[b]))
        .collect()
}

fn cl30_images() -> &'static [Mat2] {
    static IMAGES: OnceLock<Vec<Mat2>> = OnceLock::new();
    IMAGES.get_or_init(|| blade_images(Signature::CL30, &pauli()))
}

/// The faithful representation of `Cl(3,0)` on 2x2 complex matrices with
/// `e_k -> sigma_k`. It sends `f+ = (1+e3)/2` to `diag(1,0)`,
/// `e1 f+` to `[[0,0],[1,0]]`, `e1 f-` to `[[0,1],[0,0]]` and `e123` to `i`.
pub fn rep_cl30(a: &Multivector) -> Result<Mat2> {
    a.signature().expect(Signature::CL30)?;
    Ok(a.terms().fold(Mat2::zero(), |acc, (b, coef)| acc + cl30_images()[b.mask()].scale(c(coef, 0.0))))
}

/// Inverse of [`rep_cl30`]; every 2x2 complex matrix has a preimage.
pub fn rep_cl30_inverse(m: &Mat2) -> Multivector {
    let [[m00, m01], [m10, m11]] = m.0;
    // M = c0 + c_k sigma_k with complex c's, and i -> e123
    let c0 = (m00 + m11) * 0.5;
    let c3 = (m00 - m11) * 0.5;
    let c1 = (m01 + m10) * 0.5;
    let c2 = (m10 - m01) * c(0.0, -0.5);
    // i e1 = e23, i e2 = -e13, i e3 = e12
    Multivector::from_terms(
        Signature::CL30,
        &[
            (Blade(0b000), c0.re),
            (Blade(0b111), c0.im),
            (Blade(0b001), c1.re),
            (Blade(0b110), c1.im),
            (Blade(0b010), c2.re),
            (Blade(0b101), -c2.im),
            (Blade(0b100), c3.re),
            (Blade(0b011), c3.im),
        ],
    )
}

/// `rho(R) = [[a + b i, -g + d i], [g + d i, a - b i]]` for
/// `R = a + b e12 + g e13 + d e23`; rejects inputs with an odd part.
pub fn rep_rotor_matrix(r: &Multivector) -> Result<Mat2> {
    r.signature().expect(Signature::CL30)?;
    r.require_even(EVEN_TOL)?;
    let a = r.scalar_part();
    let b = r.get(Blade(0b011));
    let g = r.get(Blade(0b101));
    let d = r.get(Blade(0b110));
    Ok(Mat2::new(c(a, b), c(-g, d), c(g, d), c(a, -b)))
}

/// Standard (Dirac) representation of `gamma_0..gamma_3` with
/// `gamma_0^2 = 1` and `gamma_k^2 = -1`.
#[derive(Copy, Clone, Debug)]
pub struct GammaBasis(pub [Mat4; 4]);

impl GammaBasis {
    pub fn standard() -> Self {
        let mut g0 = Mat4::zero();
        for i in 0..4 {
            g0.0[i][i] = if i < 2 { ONE } else { -ONE };
        }
        let s = pauli();
        let gk = |k: usize| {
            let mut m = Mat4::zero();
            for i in 0..2 {
                for j in 0..2 {
                    m.0[i][j + 2] = s[k].0[i][j];
                    m.0[i + 2][j] = -s[k].0[i][j];
                }
            }
            m
        };
        GammaBasis([g0, gk(0), gk(1), gk(2)])
    }

    /// Metric `eta = diag(+1, -1, -1, -1)`.
    pub fn eta(mu: usize) -> f64 {
        if mu == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Contravariant `gamma^mu = eta^{mu mu} gamma_mu`.
    pub fn upper(&self, mu: usize) -> Mat4 {
        self.0[mu].scale(c(Self::eta(mu), 0.0))
    }
}

fn cl13_images() -> &'static [Mat4] {
    static IMAGES: OnceLock<Vec<Mat4>> = OnceLock::new();
    IMAGES.get_or_init(|| blade_images(Signature::CL13, &GammaBasis::standard().0))
}

/// Representation of the even subalgebra of `Cl(1,3)` (generator 1 is
/// `gamma_0`, generators 2..4 are `gamma_1..gamma_3`), assembled from
/// products of the standard gamma matrices.
pub fn rep_cl13_even(psi: &Multivector) -> Result<Mat4> {
    psi.signature().expect(Signature::CL13)?;
    psi.require_even(EVEN_TOL)?;
    Ok(psi.even_part().terms().fold(Mat4::zero(), |acc, (b, coef)| acc + cl13_images()[b.mask()].scale(c(coef, 0.0))))
}

/// Signed permutation `Cl(3,0) blade -> (sign, Cl(1,3) even blade)` induced by
/// `e_k -> gamma_k gamma_0`.
fn iso_table() -> &'static [(f64, Blade); 8] {
    static TABLE: OnceLock<[(f64, Blade); 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let sig = Signature::CL13;
        let g0 = Multivector::generator(sig, 1);
        std::array::from_fn(|m| {
            let img = (0..3)
                .filter(|b| m & (1 << b) != 0)
                .fold(Multivector::one(sig), |acc, b| acc * (Multivector::generator(sig, b + 2) * g0));
            let (blade, coef) = img.terms().next().expect("blade image is a single term");
            (coef, blade)
        })
    })
}

/// `Cl(3,0) -> Cl(1,3)+`, `e_k -> gamma_k gamma_0`, `e123 -> gamma_0123`.
pub fn iso_cl30_to_cl13(psi: &Multivector) -> Result<Multivector> {
    psi.signature().expect(Signature::CL30)?;
    let mut out = Multivector::zero(Signature::CL13);
    for (m, &(sign, blade)) in iso_table().iter().enumerate() {
        out.set(blade, sign * psi.coeffs()[m]);
    }
    Ok(out)
}

/// `Cl(1,3)+ -> Cl(3,0)`, inverse of [`iso_cl30_to_cl13`].
pub fn iso_cl13_to_cl30(psi: &Multivector) -> Result<Multivector> {
    psi.signature().expect(Signature::CL13)?;
    psi.require_even(EVEN_TOL)?;
    let mut out = Multivector::zero(Signature::CL30);
    for (m, &(sign, blade)) in iso_table().iter().enumerate() {
        out.set(Blade(m as u8), sign * psi.get(blade));
    }
    Ok(out)
}

/// Four-component Dirac column spinor.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Spinor4(pub [Complex64; 4]);

impl Spinor4 {
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply(m: &Mat4, v: &Spinor4) -> Spinor4 {
        Spinor4(std::array::from_fn(|i| (0..4).map(|j| m.0[i][j] * v.0[j]).sum()))
    }

    pub fn scale_complex(&self, z: Complex64) -> Spinor4 {
        Spinor4(self.0.map(|w| w * z))
    }
}

impl Add for Spinor4 {
    type Output = Spinor4;
    fn add(self, o: Spinor4) -> Spinor4 {
        Spinor4(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for Spinor4 {
    type Output = Spinor4;
    fn sub(self, o: Spinor4) -> Spinor4 {
        Spinor4(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Mul<f64> for Spinor4 {
    type Output = Spinor4;
    fn mul(self, s: f64) -> Spinor4 {
        Spinor4(self.0.map(|w| w * s))
    }
}

/// First column of `rho(Psi)` for even `Psi` in `Cl(1,3)`.
pub fn dirac_column(psi: &Multivector) -> Result<Spinor4> {
    Ok(Spinor4(rep_cl13_even(psi)?.column(0)))
}

/// Column spinor field of a `Cl(3,0)` field, through the isomorphism and the
/// 4x4 representation. Both maps are real-linear, so analytic gradients carry
/// over.
pub fn column_field(psi: &Field<Multivector>) -> Field<Spinor4> {
    psi.map_linear(|v| {
        let even = iso_cl30_to_cl13(&v).expect("Cl(3,0) field");
        dirac_column(&even).expect("iso image is even")
    })
}

/// Free Dirac residual `i gamma^mu d_mu psi - m psi` in the standard
/// representation.
pub fn standard_dirac_residual(field: &Field<Spinor4>, m: f64, pt: &SpacetimePoint) -> Spinor4 {
    let gammas = GammaBasis::standard();
    let grad = field.gradient(pt);
    let psi = field.value(pt);
    let mut out = psi * (-m);
    for (mu, d) in grad.iter().enumerate() {
        out = out + Spinor4::apply(&gammas.upper(mu), d).scale_complex(I);
    }
    out
}
