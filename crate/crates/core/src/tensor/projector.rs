//! Matrix-free application of `∏ (1 − 𝒜/a)`, including the restricted
//! products used for torsion- and curvature-type tensors.

use num_traits::Zero;

use super::dense::DenseTensor;
use super::ops::{is_antisymmetric, operator_a};
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::Q;
use crate::spectrum::{projector_factors, restricted_spec_union, spec_a, SpectrumRequest};

/// Applies `1 − 𝒜/a` for each `a` in turn.
pub fn apply_factors<S: Scalar>(t: &DenseTensor<S>, factors: &[Q]) -> Result<DenseTensor<S>> {
    apply_factors_with(t, factors, operator_a)
}

pub(crate) fn apply_factors_with<S: Scalar>(
    t: &DenseTensor<S>,
    factors: &[Q],
    op: impl Fn(&DenseTensor<S>) -> DenseTensor<S>,
) -> Result<DenseTensor<S>> {
    if factors.iter().any(Zero::is_zero) {
        return Err(Error::ZeroFactor);
    }
    let mut out = t.clone();
    for a in factors {
        let image = op(&out);
        out.sub_scaled_assign(&image, &S::from_q(&a.recip()));
    }
    Ok(out)
}

fn to_q(factors: &[i64]) -> Vec<Q> {
    factors.iter().map(|&a| Q::from_integer(a.into())).collect()
}

/// `∏_{a ∈ factors} (1 − 𝒜/a)`; refuses a zero factor.
pub fn apply_projector<S: Scalar>(t: &DenseTensor<S>, factors: &[i64]) -> Result<DenseTensor<S>> {
    apply_factors(t, &to_q(factors))
}

/// Eigenvalue factors of the full traceless projector for the tensor's shape,
/// descending. Empty when `m` or `n` is zero.
pub fn traceless_factors(m: usize, n: usize, dim: usize) -> Result<Vec<i64>> {
    if m == 0 || n == 0 {
        return Ok(Vec::new());
    }
    projector_factors(&spec_a(&SpectrumRequest::new(m, n, dim)?), true)
}

/// `𝒫_{m,n} T`.
pub fn traceless_project<S: Scalar>(t: &DenseTensor<S>) -> Result<DenseTensor<S>> {
    apply_projector(t, &traceless_factors(t.m(), t.n(), t.dim())?)
}

/// Factors of the restricted projector `𝒫^{(X)}`.
pub fn restricted_factors(
    pairs: &[(Partition, Partition)],
    m: usize,
    n: usize,
    dim: usize,
) -> Result<Vec<i64>> {
    projector_factors(
        &restricted_spec_union(pairs, &SpectrumRequest::new(m, n, dim)?)?,
        true,
    )
}

/// `𝒫^{(X)} T`. The caller is responsible for `T` lying in the isotypic
/// subspace described by `X`.
pub fn restricted_project<S: Scalar>(
    t: &DenseTensor<S>,
    pairs: &[(Partition, Partition)],
) -> Result<DenseTensor<S>> {
    apply_projector(t, &restricted_factors(pairs, t.m(), t.n(), t.dim())?)
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

/// Tolerance used for symmetry checks on float tensors.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Traceless projection of a torsion-type tensor.
///
/// Accepts `T^i_{jk}` antisymmetric in its two covariant slots (shape
/// `(1, 2)`) or `t^{ij}_k` antisymmetric in its two contravariant slots
/// (shape `(2, 1)`). Applies the single factor `1 − 𝒜/(N−1)`.
pub fn torsion_project<S: Scalar>(t: &DenseTensor<S>) -> Result<DenseTensor<S>> {
    let (pairs, slots) = match (t.m(), t.n()) {
        (1, 2) => (vec![(p(&[1]), p(&[1, 1]))], (1, 2)),
        (2, 1) => (vec![(p(&[1, 1]), p(&[1]))], (0, 1)),
        (m, n) => {
            return Err(Error::ShapeMismatch(format!(
                "torsion needs shape (1,2) or (2,1), got ({m},{n})"
            )))
        }
    };
    if t.dim() < 2 {
        return Err(Error::InvalidArgument(
            "torsion projection needs N ≥ 2".into(),
        ));
    }
    if !is_antisymmetric(t, slots.0, slots.1, SYMMETRY_TOL) {
        return Err(Error::Symmetry(format!(
            "slots {} and {} are not antisymmetric",
            slots.0 + 1,
            slots.1 + 1
        )));
    }
    restricted_project(t, &pairs)
}

/// Traceless projection of a curvature-type tensor.
///
/// Accepts `R^i_{j,kl}` antisymmetric in `k, l` (shape `(1, 3)`) or
/// `t^{ijk}_l` antisymmetric in `i, j` (shape `(3, 1)`). Applies the factors
/// for eigenvalues `N+1`, `N−1`, `N−2`.
pub fn riemann_project<S: Scalar>(t: &DenseTensor<S>) -> Result<DenseTensor<S>> {
    let (pairs, slots) = match (t.m(), t.n()) {
        (1, 3) => (
            vec![(p(&[1]), p(&[2, 1])), (p(&[1]), p(&[1, 1, 1]))],
            (2, 3),
        ),
        (3, 1) => (
            vec![(p(&[2, 1]), p(&[1])), (p(&[1, 1, 1]), p(&[1]))],
            (0, 1),
        ),
        (m, n) => {
            return Err(Error::ShapeMismatch(format!(
                "Riemann needs shape (1,3) or (3,1), got ({m},{n})"
            )))
        }
    };
    if t.dim() < 3 {
        return Err(Error::InvalidArgument(
            "Riemann projection needs N ≥ 3".into(),
        ));
    }
    if !is_antisymmetric(t, slots.0, slots.1, SYMMETRY_TOL) {
        return Err(Error::Symmetry(format!(
            "slots {} and {} are not antisymmetric",
            slots.0 + 1,
            slots.1 + 1
        )));
    }
    restricted_project(t, &pairs)
}
