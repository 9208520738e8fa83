//! Pointwise fields over Minkowski coordinates `(t, x, y, z)` with either an
//! analytic gradient or central finite differences.

use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Multivector;

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// A spacetime point in natural units (`hbar = c = 1`).
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: [f64; 3],
}

impl SpacetimePoint {
    pub fn new(t: f64, x: [f64; 3]) -> Self {
        SpacetimePoint { t, x }
    }

    /// Coordinate `mu` (0 = t, 1..3 = x, y, z).
    pub fn coord(&self, mu: usize) -> f64 {
        if mu == 0 {
            self.t
        } else {
            self.x[mu - 1]
        }
    }

    /// The point moved by `h` along coordinate `mu`.
    pub fn shifted(&self, mu: usize, h: f64) -> Self {
        let mut p = *self;
        if mu == 0 {
            p.t += h;
        } else {
            p.x[mu - 1] += h;
        }
        p
    }
}

/// Values a field can take: a real vector space.
pub trait FieldValue: Copy + Send + Sync + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}

impl<T> FieldValue for T where T: Copy + Send + Sync + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

type ValueFn<T> = Arc<dyn Fn(&SpacetimePoint) -> T + Send + Sync>;
type GradientFn<T> = Arc<dyn Fn(&SpacetimePoint) -> [T; 4] + Send + Sync>;

#[derive(Clone)]
pub enum Derivative<T> {
    /// Closed-form `[d/dt, d/dx, d/dy, d/dz]`.
    Analytic(GradientFn<T>),
    /// Central differences with step `h`, `O(h^2)` accurate.
    Central { h: f64 },
}

/// A field `T(t, x)`. Callbacks must be safe to call concurrently.
#[derive(Clone)]
pub struct Field<T> {
    value: ValueFn<T>,
    derivative: Derivative<T>,
}

impl<T: FieldValue + 'static> Field<T> {
    pub fn analytic(
        value: impl Fn(&SpacetimePoint) -> T + Send + Sync + 'static,
        gradient: impl Fn(&SpacetimePoint) -> [T; 4] + Send + Sync + 'static,
    ) -> Self {
        Field { value: Arc::new(value), derivative: Derivative::Analytic(Arc::new(gradient)) }
    }

    pub fn finite_difference(value: impl Fn(&SpacetimePoint) -> T + Send + Sync + 'static, h: f64) -> Self {
        Field { value: Arc::new(value), derivative: Derivative::Central { h } }
    }

    /// Same values, derivatives switched to central differences with step `h`.
    pub fn with_step(&self, h: f64) -> Self {
        Field { value: self.value.clone(), derivative: Derivative::Central { h } }
    }

    pub fn derivative_mode(&self) -> &Derivative<T> {
        &self.derivative
    }

    pub fn value(&self, pt: &SpacetimePoint) -> T {
        (self.value)(pt)
    }

    /// `[d/dt, d/dx, d/dy, d/dz]` at `pt`.
    pub fn gradient(&self, pt: &SpacetimePoint) -> [T; 4] {
        match &self.derivative {
            Derivative::Analytic(g) => g(pt),
            Derivative::Central { h } => {
                let h = *h;
                std::array::from_fn(|mu| {
                    let fwd = (self.value)(&pt.shifted(mu, h));
                    let bwd = (self.value)(&pt.shifted(mu, -h));
                    (fwd - bwd) * (0.5 / h)
                })
            }
        }
    }

    /// Pushes the field through a real-linear map. Analytic gradients are
    /// mapped too, so the result stays analytic.
    pub fn map_linear<U: FieldValue + 'static>(&self, f: impl Fn(T) -> U + Send + Sync + 'static) -> Field<U> {
        let f = Arc::new(f);
        let value = self.value.clone();
        let fv = f.clone();
        let new_value: ValueFn<U> = Arc::new(move |pt| fv(value(pt)));
        let derivative = match &self.derivative {
            Derivative::Analytic(g) => {
                let g = g.clone();
                Derivative::Analytic(Arc::new(move |pt: &SpacetimePoint| g(pt).map(|d| f(d))) as GradientFn<U>)
            }
            Derivative::Central { h } => Derivative::Central { h: *h },
        };
        Field { value: new_value, derivative }
    }
}

/// Field of `Cl(3,0)` multivectors.
pub type Mv30Field = Field<Multivector>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_differences_are_second_order() {
        // f(t,x) = sin(t) * x^3 + exp(y) z
        let f = |p: &SpacetimePoint| p.t.sin() * p.x[0].powi(3) + p.x[1].exp() * p.x[2];
        let exact = |p: &SpacetimePoint| {
            [p.t.cos() * p.x[0].powi(3), 3.0 * p.t.sin() * p.x[0].powi(2), p.x[1].exp() * p.x[2], p.x[1].exp()]
        };
        let pt = SpacetimePoint::new(0.4, [1.1, -0.3, 0.8]);
        let errs: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
            .iter()
            .map(|&h| {
                let g = Field::finite_difference(f, h).gradient(&pt);
                g.iter().zip(exact(&pt)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
            })
            .collect();
        for w in errs.windows(2) {
            let ratio = w[0] / w[1];
            assert!((3.5..4.5).contains(&ratio), "ratio {ratio}, errors {errs:?}");
        }
    }

    #[test]
    fn linear_map_keeps_analytic_gradient() {
        let f = Field::analytic(|p: &SpacetimePoint| p.t * p.t, |p: &SpacetimePoint| [2.0 * p.t, 0.0, 0.0, 0.0]);
        let g = f.map_linear(|v| 3.0 * v);
        let pt = SpacetimePoint::new(2.0, [0.0; 3]);
        assert_eq!(g.value(&pt), 12.0);
        assert_eq!(g.gradient(&pt)[0], 12.0);
        assert!(matches!(g.derivative_mode(), Derivative::Analytic(_)));
    }
}
