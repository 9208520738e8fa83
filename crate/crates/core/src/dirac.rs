//! The Dirac-Hestenes equation transported to `Cl(3,0)`,
//!
//! ```text
//! d_t Psi + grad Psi = [e (A - phi) Psi - m Psi^] J e3,     J = e123,
//! ```
//!
//! with `grad = sum_k e_k d_k` acting from the left. `J e3 = e12` is the
//! bivector that plays the role of the imaginary unit; it multiplies from the
//! right, so the solution space is a right module over `span{1, e12}`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{blade30, Multivector, Signature};
use crate::error::{Error, Result};
use crate::field::{Field, SpacetimePoint};
use crate::weyl::{f_minus, f_plus, SpinorKind, WeylSpinor};

type ScalarFn = Arc<dyn Fn(&SpacetimePoint) -> f64 + Send + Sync>;
type VectorFn = Arc<dyn Fn(&SpacetimePoint) -> [f64; 3] + Send + Sync>;

/// `J e3 = e12`.
pub fn j_e3() -> Multivector {
    blade30(&[1, 2])
}

/// `J = e123`.
pub fn pseudoscalar() -> Multivector {
    blade30(&[1, 2, 3])
}

/// `a^k e_k`.
pub fn vector(a: [f64; 3]) -> Multivector {
    let mut v = Multivector::zero(Signature::CL30);
    for (k, &ak) in a.iter().enumerate() {
        v += blade30(&[k + 1]).scale(ak);
    }
    v
}

/// `sum_k e_k d_k X` from a gradient `[d_t, d_x, d_y, d_z]`.
fn nabla(grad: &[Multivector; 4]) -> Multivector {
    (1..4).fold(Multivector::zero(Signature::CL30), |acc, k| acc + blade30(&[k]) * grad[k])
}

/// Electromagnetic potential `(phi, A)` with coupling constant `e`.
#[derive(Clone)]
pub struct PotentialField {
    phi: ScalarFn,
    a: VectorFn,
    pub coupling: f64,
}

impl PotentialField {
    pub fn zero() -> Self {
        PotentialField::new(|_| 0.0, |_| [0.0; 3])
    }

    pub fn new(
        phi: impl Fn(&SpacetimePoint) -> f64 + Send + Sync + 'static,
        a: impl Fn(&SpacetimePoint) -> [f64; 3] + Send + Sync + 'static,
    ) -> Self {
        PotentialField { phi: Arc::new(phi), a: Arc::new(a), coupling: 1.0 }
    }

    pub fn with_coupling(mut self, e: f64) -> Self {
        self.coupling = e;
        self
    }

    pub fn phi(&self, pt: &SpacetimePoint) -> f64 {
        (self.phi)(pt)
    }

    pub fn a(&self, pt: &SpacetimePoint) -> [f64; 3] {
        (self.a)(pt)
    }
}

impl Default for PotentialField {
    fn default() -> Self {
        PotentialField::zero()
    }
}

impl fmt::Debug for PotentialField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PotentialField").field("coupling", &self.coupling).finish_non_exhaustive()
    }
}

/// `LHS - RHS` of the Dirac-Hestenes equation at `pt`.
pub fn dhe_residual(psi: &Field<Multivector>, pot: &PotentialField, m: f64, pt: &SpacetimePoint) -> Multivector {
    let grad = psi.gradient(pt);
    let v = psi.value(pt);
    let lhs = grad[0] + nabla(&grad);
    let a_minus_phi = vector(pot.a(pt)) - Multivector::scalar(Signature::CL30, pot.phi(pt));
    let rhs = ((a_minus_phi * v).scale(pot.coupling) - v.involute().scale(m)) * j_e3();
    lhs - rhs
}

/// Momentum operator `p Psi = grad Psi J e3`.
pub fn momentum_apply(psi: &Field<Multivector>, pt: &SpacetimePoint) -> Multivector {
    nabla(&psi.gradient(pt)) * j_e3()
}

/// Pure boost `L(p) = (E + m + p) / sqrt(2m (E + m))`. It satisfies
/// `L conj(L) = 1` and `L (E - p) L = m`.
pub fn boost(p: [f64; 3], m: f64) -> Result<Multivector> {
    boost_signed(p, m, 1.0)
}

pub(crate) fn boost_signed(p: [f64; 3], m: f64, sign: f64) -> Result<Multivector> {
    if !m.is_finite() || m <= 0.0 {
        return Err(Error::NonPositiveMass(m));
    }
    if p == [0.0; 3] {
        return Ok(Multivector::one(Signature::CL30));
    }
    let e = energy(p, m);
    let norm = (2.0 * m * (e + m)).sqrt();
    Ok((Multivector::scalar(Signature::CL30, e + m) + vector(p).scale(sign)).scale(1.0 / norm))
}

/// `E = sqrt(m^2 + |p|^2)`.
pub fn energy(p: [f64; 3], m: f64) -> f64 {
    (m * m + p.iter().map(|x| x * x).sum::<f64>()).sqrt()
}

/// Frequency branch of a plane wave.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Spin {
    #[serde(rename = "up")]
    Up,
    #[serde(rename = "down")]
    Down,
}

/// Selects one of the four plane-wave solutions.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveParams {
    pub branch: Branch,
    pub spin: Spin,
    pub p: [f64; 3],
    pub m: f64,
}

impl PlaneWaveParams {
    pub fn new(branch: Branch, spin: Spin, p: [f64; 3], m: f64) -> Self {
        PlaneWaveParams { branch, spin, p, m }
    }

    pub fn at_rest(branch: Branch, spin: Spin, m: f64) -> Self {
        Self::new(branch, spin, [0.0; 3], m)
    }

    pub fn all_branches(p: [f64; 3], m: f64) -> [PlaneWaveParams; 4] {
        [
            Self::new(Branch::Positive, Spin::Up, p, m),
            Self::new(Branch::Positive, Spin::Down, p, m),
            Self::new(Branch::Negative, Spin::Up, p, m),
            Self::new(Branch::Negative, Spin::Down, p, m),
        ]
    }

    pub fn energy(&self) -> f64 {
        energy(self.p, self.m)
    }

    /// `1, e13, J, e2` for `(+up), (+down), (-up), (-down)`.
    pub fn prefactor(&self) -> Multivector {
        match (self.branch, self.spin) {
            (Branch::Positive, Spin::Up) => Multivector::one(Signature::CL30),
            (Branch::Positive, Spin::Down) => blade30(&[1, 3]),
            (Branch::Negative, Spin::Up) => pseudoscalar(),
            (Branch::Negative, Spin::Down) => blade30(&[2]),
        }
    }

    /// `-1` for the positive branch `exp(-J e3 theta)`, `+1` otherwise.
    fn phase_sign(&self) -> f64 {
        match self.branch {
            Branch::Positive => -1.0,
            Branch::Negative => 1.0,
        }
    }

    pub fn label(&self) -> &'static str {
        match (self.branch, self.spin) {
            (Branch::Positive, Spin::Up) => "+up",
            (Branch::Positive, Spin::Down) => "+down",
            (Branch::Negative, Spin::Up) => "-up",
            (Branch::Negative, Spin::Down) => "-down",
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.m.is_finite() || self.m <= 0.0 {
            return Err(Error::NonPositiveMass(self.m));
        }
        Ok(())
    }
}

/// `L(p) P exp(-+ J e3 (E t - p.x))`.
pub fn planewave(params: &PlaneWaveParams, pt: &SpacetimePoint) -> Result<Multivector> {
    Ok(planewave_field(params)?.value(pt))
}

/// Plane wave as a field with analytic gradient.
pub fn planewave_field(params: &PlaneWaveParams) -> Result<Field<Multivector>> {
    params.validate()?;
    Ok(planewave_field_with_boost(params, boost(params.p, params.m)?))
}

/// Plane wave built with an arbitrary boost element in place of `L(p)`.
pub fn planewave_field_with_boost(params: &PlaneWaveParams, l: Multivector) -> Field<Multivector> {
    let seed = l * params.prefactor();
    let s = params.phase_sign();
    let e = params.energy();
    let p = params.p;
    let phase = move |pt: &SpacetimePoint| e * pt.t - p[0] * pt.x[0] - p[1] * pt.x[1] - p[2] * pt.x[2];
    let value = move |pt: &SpacetimePoint| seed * j_e3().scale(s * phase(pt)).exp();
    let gradient = move |pt: &SpacetimePoint| {
        // d exp(s e12 theta) = exp(s e12 theta) s e12 d theta
        let v = value(pt) * j_e3().scale(s);
        [v.scale(e), v.scale(-p[0]), v.scale(-p[1]), v.scale(-p[2])]
    };
    Field::analytic(value, gradient)
}

/// `Psi (c + d J e3)`, the right action preserving the solution space.
pub fn right_phase(psi: &Multivector, c: f64, d: f64) -> Multivector {
    *psi * (Multivector::scalar(Signature::CL30, c) + j_e3().scale(d))
}

/// `Psi = sqrt(rho) exp(J beta / 2) R` with `Psi conj(Psi) = rho exp(J beta)`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct Lounesto {
    pub rho: f64,
    /// Takabayasi angle in `(-pi, pi]`.
    pub beta: f64,
    pub rotor: Multivector,
}

impl Lounesto {
    pub fn recompose(&self) -> Multivector {
        (pseudoscalar().scale(self.beta / 2.0).exp() * self.rotor).scale(self.rho.sqrt())
    }
}

pub fn lounesto_decompose(psi: &Multivector) -> Result<Lounesto> {
    psi.signature().expect(Signature::CL30)?;
    let n = *psi * psi.conjugate();
    let (a, b) = (n.scalar_part(), n.pseudoscalar_part());
    let tol = 1e-12 * psi.norm_sqr();
    if a.hypot(b) <= tol || !a.hypot(b).is_finite() {
        return Err(Error::SingularDensity { re: a, im: b });
    }
    let rho = a.hypot(b);
    let mut beta = b.atan2(a);
    if beta == -std::f64::consts::PI {
        beta = std::f64::consts::PI;
    }
    let rotor = (pseudoscalar().scale(-beta / 2.0).exp() * *psi).scale(1.0 / rho.sqrt());
    Ok(Lounesto { rho, beta, rotor })
}

/// `(xi, eta^) = (psi f+, psi f-)`.
pub fn weyl_split(psi: &Multivector) -> (Multivector, Multivector) {
    (*psi * f_plus(), *psi * f_minus())
}

/// Fields `xi = psi f+` and `eta = (psi f-)^` of the Weyl system.
pub fn weyl_fields(psi: &Field<Multivector>) -> (Field<Multivector>, Field<Multivector>) {
    (psi.map_linear(|v| v * f_plus()), psi.map_linear(|v| (v * f_minus()).involute()))
}

/// Residuals of `(d_t + grad) xi J = m eta` and `(d_t - grad) eta J = m xi`.
pub fn weyl_residuals(
    xi: &Field<Multivector>,
    eta: &Field<Multivector>,
    m: f64,
    pt: &SpacetimePoint,
) -> (Multivector, Multivector) {
    let j = pseudoscalar();
    let gx = xi.gradient(pt);
    let ge = eta.gradient(pt);
    let (xv, ev) = (xi.value(pt), eta.value(pt));
    let r1 = (gx[0] + nabla(&gx)) * j - ev.scale(m);
    let r2 = (ge[0] - nabla(&ge)) * j - xv.scale(m);
    (r1, r2)
}

/// `psi = phi + chi e3` with `phi, chi` even.
pub fn pauli_split(psi: &Multivector) -> (Multivector, Multivector) {
    (psi.even_part(), psi.odd_part() * blade30(&[3]))
}

pub fn pauli_fields(psi: &Field<Multivector>) -> (Field<Multivector>, Field<Multivector>) {
    (psi.map_linear(|v| v.even_part()), psi.map_linear(|v| v.odd_part() * blade30(&[3])))
}

/// Residuals of `d_t phi J e3 + grad chi J = m phi` and
/// `d_t chi J e3 + grad phi J = -m chi`.
pub fn pauli_residuals(
    phi: &Field<Multivector>,
    chi: &Field<Multivector>,
    m: f64,
    pt: &SpacetimePoint,
) -> (Multivector, Multivector) {
    let j = pseudoscalar();
    let gp = phi.gradient(pt);
    let gc = chi.gradient(pt);
    let (pv, cv) = (phi.value(pt), chi.value(pt));
    let r1 = gp[0] * j_e3() + nabla(&gc) * j - pv.scale(m);
    let r2 = gc[0] * j_e3() + nabla(&gp) * j + cv.scale(m);
    (r1, r2)
}

/// `psi = K + L e1` for CUS spinors `K, L`.
pub fn dirac_from_weyl(k: &WeylSpinor, l: &WeylSpinor) -> Result<Multivector> {
    for s in [k, l] {
        if s.kind != SpinorKind::Cus {
            return Err(Error::KindMismatch { expected: "CUS", found: s.kind.name() });
        }
    }
    Ok(k.embed() + l.embed() * blade30(&[1]))
}

/// `(K, L) = (psi f+, psi e1 f+)`, inverse of [`dirac_from_weyl`].
pub fn weyl_from_dirac(psi: &Multivector) -> Result<(WeylSpinor, WeylSpinor)> {
    psi.signature().expect(Signature::CL30)?;
    let k = WeylSpinor::from_element(SpinorKind::Cus, &(*psi * f_plus()), 1e-12)?;
    let l = WeylSpinor::from_element(SpinorKind::Cus, &(*psi * blade30(&[1]) * f_plus()), 1e-12)?;
    Ok((k, l))
}
