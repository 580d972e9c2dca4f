use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{q_to_f64, Q};

/// Component type of a tensor file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Float,
    Complex,
    /// Complex numbers with exact rational parts.
    Gaussian,
}

/// A field the tensor engine can compute in.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + Send
    + Sync
{
    const KIND: ScalarKind;

    fn from_q(x: &Q) -> Self;

    fn conj(&self) -> Self;

    /// A size used for relative tolerances; exact kinds may return anything.
    fn magnitude(&self) -> f64;

    fn is_exact() -> bool {
        matches!(Self::KIND, ScalarKind::Rational | ScalarKind::Gaussian)
    }

    /// Exact equality for exact kinds, `|a − b| ≤ tol · scale` otherwise.
    fn close(&self, other: &Self, tol: f64, scale: f64) -> bool {
        if Self::is_exact() {
            self == other
        } else {
            (self.clone() - other.clone()).magnitude() <= tol * scale.max(1.0)
        }
    }
}

impl Scalar for Q {
    const KIND: ScalarKind = ScalarKind::Rational;
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn magnitude(&self) -> f64 {
        q_to_f64(&self.abs())
    }
}

impl Scalar for f64 {
    const KIND: ScalarKind = ScalarKind::Float;
    fn from_q(x: &Q) -> Self {
        q_to_f64(x)
    }
    fn conj(&self) -> Self {
        *self
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    const KIND: ScalarKind = ScalarKind::Complex;
    fn from_q(x: &Q) -> Self {
        Complex64::new(q_to_f64(x), 0.0)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl Scalar for Complex<Q> {
    const KIND: ScalarKind = ScalarKind::Gaussian;
    fn from_q(x: &Q) -> Self {
        Complex::new(x.clone(), Q::zero())
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn magnitude(&self) -> f64 {
        q_to_f64(&self.re).hypot(q_to_f64(&self.im))
    }
}
