//! Traceless projection in `V^⊗m ⊗ V̄^⊗n` for a non-degenerate hermitian form.
//!
//! Upper arcs contract `t^{…k…|…l…}` with `g_{kl}`; lower arcs multiply by
//! `ḡ^{ij}`. Equivalently, rewriting covariant-type slots through
//! `t'_{k} = g_{kl} t^{l}` turns every operation into the ordinary one.

use itertools::Itertools;

use super::dense::DenseTensor;
use super::ops::{diagram_action_with, transform_slot, Pairing};
use super::projector::{apply_factors_with, traceless_factors};
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::wbalgebra::WalledDiagram;

/// Tolerance for the hermitian symmetry check on float metrics.
pub const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMetric<S> {
    dim: usize,
    g: Vec<S>,
    g_inv: Vec<S>,
}

impl<S: Scalar> HermitianMetric<S> {
    /// `g` is `N × N`, row-major, with `g_{ij} = conj(g_{ji})`.
    pub fn new(dim: usize, g: Vec<S>) -> Result<Self> {
        if g.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "metric needs {} entries, got {}",
                dim * dim,
                g.len()
            )));
        }
        let scale = g.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        for (i, j) in (0..dim)
            .tuple_combinations::<(_, _)>()
            .chain((0..dim).map(|i| (i, i)))
        {
            if !g[i * dim + j].close(&g[j * dim + i].conj(), HERMITIAN_TOL, scale) {
                return Err(Error::InvalidArgument(format!(
                    "metric is not hermitian at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
        let g_inv = invert(dim, &g)?;
        Ok(HermitianMetric { dim, g, g_inv })
    }

    pub fn identity(dim: usize) -> Self {
        let g = super::ops::identity_matrix(dim);
        HermitianMetric {
            dim,
            g: g.clone(),
            g_inv: g,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn g(&self) -> &[S] {
        &self.g
    }

    pub fn g_inv(&self) -> &[S] {
        &self.g_inv
    }

    fn pairing(&self) -> Pairing<S> {
        Pairing::Metric {
            up: self.g.clone(),
            down: self.g_inv.iter().map(Scalar::conj).collect(),
        }
    }

    /// Rewrites components in the basis `e_i ⊗ e^k`: every covariant-type
    /// slot becomes `g_{kl} t^{…|l…}`.
    pub fn to_dual_basis(&self, t: &DenseTensor<S>) -> DenseTensor<S> {
        (t.m()..t.rank()).fold(t.clone(), |acc, slot| {
            transform_slot(&acc, slot, &self.g, true)
        })
    }

    /// Inverse of [`HermitianMetric::to_dual_basis`].
    pub fn from_dual_basis(&self, t: &DenseTensor<S>) -> DenseTensor<S> {
        (t.m()..t.rank()).fold(t.clone(), |acc, slot| {
            transform_slot(&acc, slot, &self.g_inv, true)
        })
    }
}

/// Gauss–Jordan inversion with magnitude pivoting.
pub fn invert<S: Scalar>(dim: usize, a: &[S]) -> Result<Vec<S>> {
    let mut m: Vec<Vec<S>> = (0..dim)
        .map(|i| a[i * dim..(i + 1) * dim].to_vec())
        .collect();
    let mut inv: Vec<Vec<S>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect();
    let scale = a.iter().map(Scalar::magnitude).fold(0.0, f64::max);
    for col in 0..dim {
        let piv = (col..dim)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&x, &y| m[x][col].magnitude().total_cmp(&m[y][col].magnitude()))
            .ok_or(Error::Singular)?;
        if !S::is_exact() && m[piv][col].magnitude() <= 1e-13 * scale.max(1.0) {
            return Err(Error::Singular);
        }
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].clone();
        for j in 0..dim {
            m[col][j] = m[col][j].clone() / p.clone();
            inv[col][j] = inv[col][j].clone() / p.clone();
        }
        for r in 0..dim {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..dim {
                m[r][j] = m[r][j].clone() - f.clone() * m[col][j].clone();
                inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
            }
        }
    }
    Ok(inv.into_iter().flatten().collect())
}

/// `τ^g_{ab′}`.
pub fn tau_arc_hermitian<S: Scalar>(
    t: &DenseTensor<S>,
    gm: &HermitianMetric<S>,
    a: usize,
    b: usize,
) -> Result<DenseTensor<S>> {
    let d = WalledDiagram::t_arc(t.m(), t.n(), a, b)?;
    diagram_action_with(&d, t, &gm.pairing())
}

/// `𝒜^g = Σ τ^g_{ab′}`.
pub fn operator_a_hermitian<S: Scalar>(
    t: &DenseTensor<S>,
    gm: &HermitianMetric<S>,
) -> Result<DenseTensor<S>> {
    check_dim(t, gm)?;
    let mut acc = DenseTensor::zeros(t.m(), t.n(), t.dim());
    for (a, b) in (1..=t.m()).cartesian_product(1..=t.n()) {
        acc = acc.add(&tau_arc_hermitian(t, gm, a, b)?)?;
    }
    Ok(acc)
}

fn check_dim<S: Scalar>(t: &DenseTensor<S>, gm: &HermitianMetric<S>) -> Result<()> {
    if t.dim() != gm.dim {
        return Err(Error::ShapeMismatch(format!(
            "tensor has N = {}, metric has N = {}",
            t.dim(),
            gm.dim
        )));
    }
    Ok(())
}

/// `∏ (1 − 𝒜^g/a)` over the given factors.
pub fn apply_projector_hermitian<S: Scalar>(
    t: &DenseTensor<S>,
    gm: &HermitianMetric<S>,
    factors: &[i64],
) -> Result<DenseTensor<S>> {
    check_dim(t, gm)?;
    let qs: Vec<Q> = factors.iter().map(|&a| Q::from_integer(a.into())).collect();
    apply_factors_with(t, &qs, |x| {
        operator_a_hermitian(x, gm).expect("dimension checked")
    })
}

/// The full traceless projector for the tensor's shape.
pub fn traceless_project_hermitian<S: Scalar>(
    t: &DenseTensor<S>,
    gm: &HermitianMetric<S>,
) -> Result<DenseTensor<S>> {
    apply_projector_hermitian(t, gm, &traceless_factors(t.m(), t.n(), t.dim())?)
}
