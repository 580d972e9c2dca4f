//! Eigenvalues of `𝒜_{m,n}` on `V^{m,n}` and of `A_{m,n}` in the walled
//! Brauer algebra, read off from branching data rather than from matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::{branch_upper_bound, branch_upper_bound_unbounded, lr_expand};
use crate::partitions::{
    enumerate_lambda, enumerate_partitions, staircase_inverse, Partition, StaircaseClass,
};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectrumRequest {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
}

impl SpectrumRequest {
    pub fn new(m: usize, n: usize, big_n: usize) -> Result<Self> {
        if m == 0 || n == 0 || big_n == 0 {
            return Err(Error::InvalidArgument(format!(
                "m, n, N must be positive (got {m}, {n}, {big_n})"
            )));
        }
        Ok(SpectrumRequest { m, n, big_n })
    }
}

/// The eigenvalue `r·δ + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineEigenvalue {
    pub r: usize,
    pub c: i64,
}

impl AffineEigenvalue {
    pub fn new(r: usize, c: i64) -> Self {
        AffineEigenvalue { r, c }
    }

    pub fn at(&self, n: i64) -> i64 {
        self.r as i64 * n + self.c
    }

    pub fn at_q(&self, delta: &Q) -> Q {
        delta * Q::from_integer((self.r as i64).into()) + Q::from_integer(self.c.into())
    }

    pub fn is_trivial(&self) -> bool {
        self.r == 0 && self.c == 0
    }

    /// Renders with `var` as the indeterminate, e.g. `N+1`, `2N-3`, `5`.
    pub fn symbolic(&self, var: &str) -> String {
        let head = match self.r {
            0 => return self.c.to_string(),
            1 => var.to_string(),
            r => format!("{r}{var}"),
        };
        match self.c.cmp(&0) {
            std::cmp::Ordering::Equal => head,
            std::cmp::Ordering::Greater => format!("{head}+{}", self.c),
            std::cmp::Ordering::Less => format!("{head}−{}", -self.c),
        }
    }
}

impl fmt::Display for AffineEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbolic("δ"))
    }
}

/// `𝒫_{m,n}(N)`: pairs `(ρ, σ)` with `ρ ⊢ m`, `σ ⊢ n`, both of length at most N.
pub fn polynomial_pairs(req: &SpectrumRequest) -> Vec<(Partition, Partition)> {
    let rhos = enumerate_partitions(req.m, req.big_n);
    let sigmas = enumerate_partitions(req.n, req.big_n);
    rhos.iter()
        .flat_map(|r| sigmas.iter().map(move |s| (r.clone(), s.clone())))
        .collect()
}

fn check_pair(rho: &Partition, sigma: &Partition, req: &SpectrumRequest) -> Result<()> {
    if rho.size() != req.m || sigma.size() != req.n {
        return Err(Error::InvalidArgument(format!(
            "|{rho}| = {} and |{sigma}| = {} must equal m = {}, n = {}",
            rho.size(),
            sigma.size(),
            req.m,
            req.n
        )));
    }
    if rho.len() > req.big_n || sigma.len() > req.big_n {
        return Err(Error::LengthBound(format!(
            "ℓ({rho}) or ℓ({sigma}) exceeds N = {}",
            req.big_n
        )));
    }
    Ok(())
}

/// Affine forms `(r, c)` realized by the constituents of `(ρ, ∅) ⊗ (∅, σ)`.
pub fn restricted_affine(
    rho: &Partition,
    sigma: &Partition,
    req: &SpectrumRequest,
) -> Result<BTreeSet<AffineEigenvalue>> {
    check_pair(rho, sigma, req)?;
    let n = req.big_n;
    let mut out = BTreeSet::new();
    for lambda in lr_expand(rho, &sigma.bar(n)?, n).into_keys() {
        let label = staircase_inverse(&StaircaseClass::new(lambda, sigma.width(), n)?);
        let r = rho.size() - label.mu.size();
        debug_assert_eq!(sigma.size() - label.nu.size(), r);
        let c = rho.content() - label.mu.content() + sigma.content() - label.nu.content();
        out.insert(AffineEigenvalue::new(r, c));
    }
    Ok(out)
}

/// `I(ρ, σ)`.
pub fn restricted_spec(
    rho: &Partition,
    sigma: &Partition,
    req: &SpectrumRequest,
) -> Result<BTreeSet<i64>> {
    let n = req.big_n as i64;
    Ok(restricted_affine(rho, sigma, req)?
        .iter()
        .map(|a| a.at(n))
        .collect())
}

/// `I(X) = ⋃_{(ρ,σ) ∈ X} I(ρ, σ)`.
pub fn restricted_spec_union(
    pairs: &[(Partition, Partition)],
    req: &SpectrumRequest,
) -> Result<BTreeSet<i64>> {
    let mut out = BTreeSet::new();
    for (rho, sigma) in pairs {
        out.extend(restricted_spec(rho, sigma, req)?);
    }
    Ok(out)
}

/// Every affine form occurring in `spec(𝒜_{m,n})` at this N, grouped by value.
pub fn spec_a_affine(req: &SpectrumRequest) -> BTreeMap<i64, BTreeSet<AffineEigenvalue>> {
    let n = req.big_n as i64;
    let mut out: BTreeMap<i64, BTreeSet<AffineEigenvalue>> = BTreeMap::new();
    for (rho, sigma) in polynomial_pairs(req) {
        let forms = restricted_affine(&rho, &sigma, req).expect("pairs are valid by construction");
        for a in forms {
            out.entry(a.at(n)).or_default().insert(a);
        }
    }
    out
}

/// `spec(𝒜_{m,n})` at dimension N.
pub fn spec_a(req: &SpectrumRequest) -> BTreeSet<i64> {
    spec_a_affine(req).into_keys().collect()
}

/// A witness for a value in the alternative set `spec̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeCandidate {
    pub rho: Partition,
    pub sigma: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub eigenvalue: AffineEigenvalue,
    pub value: i64,
}

/// All `N·r + c(ρ/μ) + c(σ/ν)` whose branching upper bound is nonzero,
/// before discarding negative values.
pub fn spec_a_tilde_candidates(req: &SpectrumRequest) -> Vec<TildeCandidate> {
    let n = req.big_n;
    let pairs = polynomial_pairs(req);
    let mut out = Vec::new();
    for r in 0..=req.m.min(req.n) {
        for label in enumerate_lambda(req.m, req.n, r, Some(n)) {
            for (rho, sigma) in &pairs {
                if branch_upper_bound(rho, sigma, &label.mu, &label.nu, n) == 0 {
                    continue;
                }
                let c = rho.content() - label.mu.content() + sigma.content() - label.nu.content();
                let eigenvalue = AffineEigenvalue::new(r, c);
                out.push(TildeCandidate {
                    rho: rho.clone(),
                    sigma: sigma.clone(),
                    mu: label.mu.clone(),
                    nu: label.nu.clone(),
                    eigenvalue,
                    value: eigenvalue.at(n as i64),
                });
            }
        }
    }
    out
}

/// `spec̃(𝒜_{m,n})`, a superset of [`spec_a`] that equals it when saturated.
pub fn spec_a_tilde(req: &SpectrumRequest) -> BTreeSet<i64> {
    let forms: BTreeSet<AffineEigenvalue> = spec_a_tilde_candidates(req)
        .into_iter()
        .map(|c| c.eigenvalue)
        .collect();
    let n = req.big_n as i64;
    forms.iter().map(|a| a.at(n)).filter(|&v| v >= 0).collect()
}

/// Whether the branching upper bound is known to be attained.
pub fn is_saturated(m: usize, n: usize, big_n: usize) -> bool {
    big_n + 1 >= m + n
        || (m == 1 && n >= 2 && big_n < n)
        || (m >= 2 && n == 1 && big_n < m)
        || (m >= 2 && n >= 2 && big_n == 1)
}

/// Eigenvalues of left multiplication by `A_{m,n}` on `B_{m,n}(δ)`, as affine
/// forms in `δ`.
pub fn wb_spec_a(m: usize, n: usize) -> BTreeSet<AffineEigenvalue> {
    let rhos = enumerate_partitions(m, m);
    let sigmas = enumerate_partitions(n, n);
    let mut out = BTreeSet::new();
    for r in 0..=m.min(n) {
        for label in enumerate_lambda(m, n, r, None) {
            let c0 = -label.mu.content() - label.nu.content();
            for rho in &rhos {
                for sigma in &sigmas {
                    let c = c0 + rho.content() + sigma.content();
                    let a = AffineEigenvalue::new(r, c);
                    if out.contains(&a) {
                        continue;
                    }
                    if branch_upper_bound_unbounded(rho, sigma, &label.mu, &label.nu) != 0 {
                        out.insert(a);
                    }
                }
            }
        }
    }
    out
}

/// Nonzero eigenvalues in descending order, one factor `1 − 𝒜/a` each.
pub fn projector_factors(spec: &BTreeSet<i64>, exclude_zero: bool) -> Result<Vec<i64>> {
    if spec.contains(&0) && !exclude_zero {
        return Err(Error::ZeroFactor);
    }
    Ok(spec.iter().rev().copied().filter(|&a| a != 0).collect())
}

/// Rational variant of [`projector_factors`] for specialized `δ`.
pub fn projector_factors_q(spec: &BTreeSet<Q>, exclude_zero: bool) -> Result<Vec<Q>> {
    if spec.iter().any(Zero::is_zero) && !exclude_zero {
        return Err(Error::ZeroFactor);
    }
    Ok(spec
        .iter()
        .rev()
        .filter(|a| !a.is_zero())
        .cloned()
        .collect())
}
