use num_traits::Zero;

use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::rational::Q;

/// A tensor in `V^⊗m ⊗ V*^⊗n` with `dim V = N`, stored row-major over the
/// index tuple `(i₁, …, i_m, j₁, …, j_n)`, every index in `0..N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseTensor<S> {
    m: usize,
    n: usize,
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseTensor<S> {
    pub fn new(m: usize, n: usize, dim: usize, data: Vec<S>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("N must be positive".into()));
        }
        let len = checked_len(m, n, dim)?;
        if data.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "expected {len} components for (m, n, N) = ({m}, {n}, {dim}), got {}",
                data.len()
            )));
        }
        Ok(DenseTensor { m, n, dim, data })
    }

    pub fn zeros(m: usize, n: usize, dim: usize) -> Self {
        let len = dim.pow((m + n) as u32);
        DenseTensor {
            m,
            n,
            dim,
            data: vec![S::zero(); len],
        }
    }

    /// Fills components from a function of the full multi-index.
    pub fn from_fn(m: usize, n: usize, dim: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let mut t = Self::zeros(m, n, dim);
        let mut idx = vec![0; m + n];
        for x in 0..t.data.len() {
            t.unravel_into(x, &mut idx);
            t.data[x] = f(&idx);
        }
        t
    }

    /// The basis tensor with a single unit component at flat position `x`.
    pub fn basis(m: usize, n: usize, dim: usize, x: usize) -> Self {
        let mut t = Self::zeros(m, n, dim);
        t.data[x] = S::one();
        t
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = dim V`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn components(&self) -> &[S] {
        &self.data
    }

    pub fn into_components(self) -> Vec<S> {
        self.data
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn unravel_into(&self, mut x: usize, idx: &mut [usize]) {
        for slot in idx.iter_mut().rev() {
            *slot = x % self.dim;
            x /= self.dim;
        }
    }

    pub fn unravel(&self, x: usize) -> Vec<usize> {
        let mut idx = vec![0; self.rank()];
        self.unravel_into(x, &mut idx);
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: S) {
        let x = self.offset(idx);
        self.data[x] = v;
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        (self.m, self.n, self.dim) == (other.m, other.n, other.dim)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "({}, {}, {}) vs ({}, {}, {})",
                self.m, self.n, self.dim, other.m, other.n, other.dim
            )))
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DenseTensor<T> {
        DenseTensor {
            m: self.m,
            n: self.n,
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(DenseTensor {
            m: self.m,
            n: self.n,
            dim: self.dim,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(DenseTensor {
            m: self.m,
            n: self.n,
            dim: self.dim,
            data,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// `self − other / a` in place, the update behind each projector factor.
    pub fn sub_scaled_assign(&mut self, other: &Self, inv_a: &S) {
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x = x.clone() - y.clone() * inv_a.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Largest component magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    /// Exact equality for exact kinds; relative tolerance for floats.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if !self.same_shape(other) {
            return false;
        }
        let scale = self.max_magnitude().max(other.max_magnitude());
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| a.close(b, tol, scale))
    }

    /// Whether every component is negligible relative to `scale`.
    pub fn approx_zero(&self, tol: f64, scale: f64) -> bool {
        if S::is_exact() {
            self.is_zero()
        } else {
            self.max_magnitude() <= tol * scale.max(1.0)
        }
    }
}

impl DenseTensor<Q> {
    pub fn to_kind<T: Scalar>(&self) -> DenseTensor<T> {
        self.map(T::from_q)
    }
}

fn checked_len(m: usize, n: usize, dim: usize) -> Result<usize> {
    dim.checked_pow((m + n) as u32)
        .filter(|&l| l <= 1 << 28)
        .ok_or_else(|| Error::InvalidArgument(format!("N^(m+n) = {dim}^{} is too large", m + n)))
}
