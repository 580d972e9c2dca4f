//! Brute-force exact linear algebra on `End(V^{m,n})`: explicit operator
//! matrices, ranks by fraction-free elimination, and spectrum checks.
//!
//! Every operator here conserves the GL(N) weight, so matrices split into
//! blocks along connected components; rank and annihilation work blockwise.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::dense::DenseTensor;
use super::ops::{diagram_action, tau_arc, tau_left, tau_right};
use super::projector::traceless_project;
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::wbalgebra::WalledDiagram;

/// Default bound on `N^(m+n)` for explicit matrices.
pub const DEFAULT_CAP: usize = 3000;

/// Default bound on `(m+n)! · N^(2(m+n))` for [`bmap_rank`].
pub const BMAP_CAP: usize = 2_000_000;

/// Sparse square matrix over ℚ acting on component vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    dim: usize,
    rows: Vec<BTreeMap<usize, Q>>,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        OperatorMatrix {
            dim,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.rows[i].insert(i, Q::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.rows[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, Q> {
        &self.rows[i]
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: Q) {
        if v.is_zero() {
            return;
        }
        let e = self.rows[i].entry(j).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zeros(self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (&j, v) in r {
                out.add_entry(i, j, v * c);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (i, r) in other.rows.iter().enumerate() {
            for (&j, v) in r {
                out.add_entry(i, j, v.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zeros(self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (&k, a) in r {
                for (&j, b) in &other.rows[k] {
                    out.add_entry(i, j, a * b);
                }
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(Q::zero(), |acc, (&j, a)| acc + a * &v[j]))
            .collect()
    }

    /// Connected components of the row/column incidence graph.
    fn blocks(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.dim).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (i, r) in self.rows.iter().enumerate() {
            for &j in r.keys() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }

    fn dense_block(&self, idx: &[usize]) -> Vec<Vec<Q>> {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        idx.iter()
            .map(|&i| {
                let mut row = vec![Q::zero(); idx.len()];
                for (j, v) in &self.rows[i] {
                    row[pos[j]] = v.clone();
                }
                row
            })
            .collect()
    }
}

/// Operators with an explicit matrix in the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpSpec {
    Identity,
    /// `𝒜_{m,n}`.
    A,
    /// `ℒ`, the contravariant Jucys–Murphy sum.
    L,
    /// `ℛ`, the covariant Jucys–Murphy sum.
    R,
    /// `𝒞 = ℒ + ℛ − 𝒜 + N·n`.
    C,
    TauArc(usize, usize),
    TauLeft(usize, usize),
    TauRight(usize, usize),
    Diagram(WalledDiagram),
    /// The traceless projector `𝒫_{m,n}`.
    Projector,
}

fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        Err(Error::CapExceeded { dim, cap })
    } else {
        Ok(())
    }
}

fn space_dim(m: usize, n: usize, big_n: usize) -> Result<usize> {
    big_n.checked_pow((m + n) as u32).ok_or(Error::CapExceeded {
        dim: usize::MAX,
        cap: DEFAULT_CAP,
    })
}

/// The matrix of a linear map, column by column on basis tensors.
pub fn from_linear_map(
    m: usize,
    n: usize,
    big_n: usize,
    cap: usize,
    f: impl Fn(&DenseTensor<Q>) -> Result<DenseTensor<Q>>,
) -> Result<OperatorMatrix> {
    let dim = space_dim(m, n, big_n)?;
    check_cap(dim, cap)?;
    let mut out = OperatorMatrix::zeros(dim);
    for x in 0..dim {
        let image = f(&DenseTensor::basis(m, n, big_n, x))?;
        for (y, v) in image.components().iter().enumerate() {
            out.add_entry(y, x, v.clone());
        }
    }
    Ok(out)
}

/// Multi-index helpers over `0..N` with `k` slots.
fn unravel(mut x: usize, big_n: usize, k: usize) -> Vec<usize> {
    let mut idx = vec![0; k];
    for slot in idx.iter_mut().rev() {
        *slot = x % big_n;
        x /= big_n;
    }
    idx
}

fn ravel(idx: &[usize], big_n: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * big_n + i)
}

/// `τ_{ab′}` straight from its index rule: a basis tensor whose slots `a`
/// and `b′` agree maps to `Σ_k` of the same tensor with both set to `k`.
fn arc_matrix_into(
    out: &mut OperatorMatrix,
    m: usize,
    n: usize,
    big_n: usize,
    sa: usize,
    sb: usize,
) {
    for x in 0..out.dim {
        let idx = unravel(x, big_n, m + n);
        if idx[sa] != idx[sb] {
            continue;
        }
        let mut y = idx.clone();
        for k in 0..big_n {
            y[sa] = k;
            y[sb] = k;
            out.add_entry(ravel(&y, big_n), x, Q::one());
        }
    }
}

fn swap_matrix_into(
    out: &mut OperatorMatrix,
    m: usize,
    n: usize,
    big_n: usize,
    p: usize,
    q: usize,
) {
    for x in 0..out.dim {
        let mut y = unravel(x, big_n, m + n);
        y.swap(p, q);
        out.add_entry(ravel(&y, big_n), x, Q::one());
    }
}

pub fn build_operator_matrix(
    op: &OpSpec,
    m: usize,
    n: usize,
    big_n: usize,
) -> Result<OperatorMatrix> {
    build_operator_matrix_capped(op, m, n, big_n, DEFAULT_CAP)
}

pub fn build_operator_matrix_capped(
    op: &OpSpec,
    m: usize,
    n: usize,
    big_n: usize,
    cap: usize,
) -> Result<OperatorMatrix> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let dim = space_dim(m, n, big_n)?;
    check_cap(dim, cap)?;
    let mut out = OperatorMatrix::zeros(dim);
    match op {
        OpSpec::Identity => return Ok(OperatorMatrix::identity(dim)),
        OpSpec::A => {
            for (a, b) in (0..m).cartesian_product(0..n) {
                arc_matrix_into(&mut out, m, n, big_n, a, m + b);
            }
        }
        OpSpec::L => {
            for (a, b) in (0..m).tuple_combinations() {
                swap_matrix_into(&mut out, m, n, big_n, a, b);
            }
        }
        OpSpec::R => {
            for (a, b) in (0..n).tuple_combinations() {
                swap_matrix_into(&mut out, m, n, big_n, m + a, m + b);
            }
        }
        OpSpec::C => {
            let l = build_operator_matrix_capped(&OpSpec::L, m, n, big_n, cap)?;
            let r = build_operator_matrix_capped(&OpSpec::R, m, n, big_n, cap)?;
            let a = build_operator_matrix_capped(&OpSpec::A, m, n, big_n, cap)?;
            let shift =
                OperatorMatrix::identity(dim).scale(&Q::from_integer(((big_n * n) as i64).into()));
            return Ok(l.add(&r).sub(&a).add(&shift));
        }
        OpSpec::TauArc(a, b) => return from_linear_map(m, n, big_n, cap, |t| tau_arc(t, *a, *b)),
        OpSpec::TauLeft(a, b) => return from_linear_map(m, n, big_n, cap, |t| tau_left(t, *a, *b)),
        OpSpec::TauRight(a, b) => {
            return from_linear_map(m, n, big_n, cap, |t| tau_right(t, *a, *b))
        }
        OpSpec::Diagram(d) => return from_linear_map(m, n, big_n, cap, |t| diagram_action(d, t)),
        OpSpec::Projector => return from_linear_map(m, n, big_n, cap, traceless_project),
    }
    Ok(out)
}

/// Row-wise denominators cleared, then Bareiss elimination over ℤ.
fn bareiss_rank(rows: Vec<Vec<Q>>) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter()
                .map(|x| (x * Q::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = (&a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Exact rank, computed blockwise.
pub fn exact_rank(mat: &OperatorMatrix) -> usize {
    mat.blocks()
        .into_iter()
        .map(|idx| {
            let block = mat.dense_block(&idx);
            if block.iter().all(|r| r.iter().all(Zero::is_zero)) {
                0
            } else {
                bareiss_rank(block)
            }
        })
        .sum()
}

pub fn kernel_dimension(mat: &OperatorMatrix) -> usize {
    mat.dim - exact_rank(mat)
}

fn dense_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let k = a.len();
    let mut out = vec![vec![Q::zero(); k]; k];
    for i in 0..k {
        for (l, x) in a[i].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..k {
                if !b[l][j].is_zero() {
                    out[i][j] += x * &b[l][j];
                }
            }
        }
    }
    out
}

/// Whether `∏_{a ∈ spec} (M − a·I) = 0`.
pub fn annihilation_check(mat: &OperatorMatrix, spec: &BTreeSet<i64>) -> bool {
    mat.blocks().into_iter().all(|idx| {
        let block = mat.dense_block(&idx);
        let k = idx.len();
        let mut prod: Vec<Vec<Q>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        for &a in spec {
            let mut shifted = block.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] -= Q::from_integer(a.into());
            }
            prod = dense_mul(&shifted, &prod);
        }
        prod.iter().all(|r| r.iter().all(Zero::is_zero))
    })
}

/// `M − a·I`.
pub fn shifted(mat: &OperatorMatrix, a: &Q) -> OperatorMatrix {
    mat.sub(&OperatorMatrix::identity(mat.dim).scale(a))
}

/// The quadratic Casimir `½(Σ E^i_j E^j_i + N Σ E^i_i)` with matrix units
/// acting as derivations: `E^i_j e_k = −δ^i_k e_j`, `E^i_j e^k = δ^k_j e^i`.
pub fn casimir_matrix_units(
    m: usize,
    n: usize,
    big_n: usize,
    cap: usize,
) -> Result<OperatorMatrix> {
    let dim = space_dim(m, n, big_n)?;
    check_cap(dim, cap)?;
    let k = m + n;
    let unit = |i: usize, j: usize, v: &BTreeMap<Vec<usize>, i64>| {
        let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for (idx, &c) in v {
            for s in 0..k {
                let (hit, coef, to) = if s < m {
                    (idx[s] == i, -1, j)
                } else {
                    (idx[s] == j, 1, i)
                };
                if hit {
                    let mut y = idx.clone();
                    y[s] = to;
                    *out.entry(y).or_insert(0) += coef * c;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    };
    let mut mat = OperatorMatrix::zeros(dim);
    let half = Q::new(1.into(), 2.into());
    for x in 0..dim {
        let e = BTreeMap::from([(unravel(x, big_n, k), 1i64)]);
        let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for (i, j) in (0..big_n).cartesian_product(0..big_n) {
            for (y, c) in unit(i, j, &unit(j, i, &e)) {
                *acc.entry(y).or_insert(0) += c;
            }
        }
        for i in 0..big_n {
            for (y, c) in unit(i, i, &e) {
                *acc.entry(y).or_insert(0) += big_n as i64 * c;
            }
        }
        for (y, c) in acc {
            mat.add_entry(ravel(&y, big_n), x, Q::from_integer(c.into()) * &half);
        }
    }
    Ok(mat)
}

/// Rank of `{vec 𝔟(b)}` over all walled diagrams `b`.
pub fn bmap_rank(m: usize, n: usize, big_n: usize) -> Result<usize> {
    bmap_rank_capped(m, n, big_n, BMAP_CAP)
}

pub fn bmap_rank_capped(m: usize, n: usize, big_n: usize, cap: usize) -> Result<usize> {
    let dim = space_dim(m, n, big_n)?;
    let count: usize = (1..=m + n).product();
    let size = count.saturating_mul(dim.saturating_mul(dim));
    check_cap(size, cap)?;
    let diagrams = WalledDiagram::all(m, n);
    let mut rows: Vec<BTreeMap<usize, Q>> = Vec::with_capacity(diagrams.len());
    for d in &diagrams {
        let mat =
            build_operator_matrix_capped(&OpSpec::Diagram(d.clone()), m, n, big_n, usize::MAX)?;
        let mut row = BTreeMap::new();
        for i in 0..dim {
            for (&j, v) in mat.row(i) {
                row.insert(i * dim + j, v.clone());
            }
        }
        rows.push(row);
    }
    let cols: Vec<usize> = rows
        .iter()
        .flat_map(|r| r.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let dense = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| r.get(c).cloned().unwrap_or_else(Q::zero))
                .collect()
        })
        .collect();
    Ok(bareiss_rank(dense))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn a11_kernel() {
        let a = build_operator_matrix(&OpSpec::A, 1, 1, 2).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(kernel_dimension(&a), 3);
        assert!(annihilation_check(&a, &BTreeSet::from([0, 2])));
        assert!(!annihilation_check(&a, &BTreeSet::from([0])));
    }

    #[test]
    fn a21_spectrum() {
        let a = build_operator_matrix(&OpSpec::A, 2, 1, 2).unwrap();
        assert!(annihilation_check(&a, &BTreeSet::from([0, 1, 3])));
        for v in [0, 1, 3] {
            assert!(kernel_dimension(&shifted(&a, &q(v))) >= 1);
        }
        assert_eq!(kernel_dimension(&shifted(&a, &q(2))), 0);
    }

    #[test]
    fn index_rule_matches_tau_path() {
        let direct = build_operator_matrix(&OpSpec::A, 2, 2, 2).unwrap();
        let via = from_linear_map(2, 2, 2, DEFAULT_CAP, |t| {
            Ok(crate::tensor::ops::operator_a(t))
        })
        .unwrap();
        assert_eq!(direct, via);
    }

    #[test]
    fn rank_examples() {
        let mut m = OperatorMatrix::zeros(3);
        m.add_entry(0, 0, q(2));
        m.add_entry(0, 1, q(4));
        m.add_entry(1, 0, Q::new(1.into(), 3.into()));
        m.add_entry(1, 1, Q::new(2.into(), 3.into()));
        m.add_entry(2, 2, q(-1));
        assert_eq!(exact_rank(&m), 2);
        assert_eq!(exact_rank(&OperatorMatrix::identity(5)), 5);
        assert_eq!(exact_rank(&OperatorMatrix::zeros(5)), 0);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            build_operator_matrix(&OpSpec::A, 4, 4, 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn bmap_small() {
        assert_eq!(bmap_rank(1, 1, 1).unwrap(), 1);
        assert_eq!(bmap_rank(1, 1, 2).unwrap(), 2);
    }
}
