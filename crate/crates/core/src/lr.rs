//! Littlewood–Richardson coefficients and the branching multiplicities of
//! rational GL(N) labels inside `(ρ, ∅) ⊗ (∅, σ)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, staircase, Partition};

type Key = (Partition, Partition, Partition);

fn cache() -> &'static Mutex<HashMap<Key, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `c^γ_{αβ}`: the number of LR tableaux of shape `γ/α` and content `β`.
pub fn lr_coefficient(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if gamma.size() != alpha.size() + beta.size() || !gamma.contains(alpha) || !gamma.contains(beta)
    {
        return 0;
    }
    if alpha.is_empty() || beta.is_empty() {
        return 1;
    }
    let key = (gamma.clone(), alpha.clone(), beta.clone());
    if let Some(&v) = cache().lock().expect("lr cache poisoned").get(&key) {
        return v;
    }
    let v = count_tableaux(gamma, alpha, beta);
    cache().lock().expect("lr cache poisoned").insert(key, v);
    v
}

/// Depth-first filling in reverse reading order (rows top to bottom, each
/// row right to left) so the lattice condition can be pruned on the fly.
fn count_tableaux(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    let cells: Vec<(usize, usize)> = (0..gamma.len())
        .flat_map(|i| (alpha.part(i)..gamma.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..gamma.len()).map(|i| vec![0; gamma.part(i)]).collect();
    let mut count = vec![0usize; beta.len()];
    let mut total = 0u64;

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        alpha: &Partition,
        beta: &Partition,
        grid: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
        total: &mut u64,
    ) {
        if k == cells.len() {
            *total += 1;
            return;
        }
        let (i, j) = cells[k];
        // entries are 1-based labels; 0 marks an empty cell
        let mut hi = beta.len().min(i + 1);
        if j + 1 < grid[i].len() && grid[i][j + 1] > 0 {
            hi = hi.min(grid[i][j + 1]);
        }
        let lo = if i > 0 && j >= alpha.part(i - 1) {
            grid[i - 1][j] + 1
        } else {
            1
        };
        for v in lo..=hi {
            let x = v - 1;
            if count[x] >= beta.part(x) || (x > 0 && count[x] + 1 > count[x - 1]) {
                continue;
            }
            count[x] += 1;
            grid[i][j] = v;
            go(k + 1, cells, alpha, beta, grid, count, total);
            grid[i][j] = 0;
            count[x] -= 1;
        }
    }

    go(0, &cells, alpha, beta, &mut grid, &mut count, &mut total);
    total
}

/// `s_α · s_β` truncated to `ℓ(γ) ≤ max_len`, as a map `γ ↦ c^γ_{αβ}`.
pub fn lr_expand(alpha: &Partition, beta: &Partition, max_len: usize) -> BTreeMap<Partition, u64> {
    let len = max_len.min(alpha.len() + beta.len());
    enumerate_partitions(alpha.size() + beta.size(), len)
        .into_iter()
        .filter(|g| g.contains(alpha) && g.contains(beta))
        .filter_map(|g| {
            let c = lr_coefficient(&g, alpha, beta);
            (c > 0).then_some((g, c))
        })
        .collect()
}

/// `c^{μν}_{ρσ}(N)`: multiplicity of `(μ, ν)` in `(ρ, ∅) ⊗ (∅, σ)`.
/// Zero when `(μ, ν) ∉ Λ(N)`.
pub fn branch_coefficient(
    rho: &Partition,
    sigma: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<u64> {
    if rho.len() > n || sigma.len() > n {
        return Err(Error::LengthBound(format!(
            "ℓ({rho}) or ℓ({sigma}) exceeds N = {n}"
        )));
    }
    if mu.len() + nu.len() > n {
        return Ok(0);
    }
    let cls = staircase(mu, nu, n)?;
    let t = sigma.width();
    if cls.t() > t {
        return Ok(0);
    }
    // the representative of the class with exactly t = σ₁
    let shift = t - cls.t();
    let lambda = if shift == 0 {
        cls.alpha().clone()
    } else {
        Partition::from_padded((0..n).map(|i| cls.alpha().part(i) + shift).collect())?
    };
    Ok(lr_coefficient(&lambda, rho, &sigma.bar(n)?))
}

/// `Σ_β c^ρ_{μβ} c^σ_{νβ}` over `β` with at most `n` parts.
pub fn branch_upper_bound(
    rho: &Partition,
    sigma: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> u64 {
    upper_bound(rho, sigma, mu, nu, Some(n))
}

/// [`branch_upper_bound`] with `β` unrestricted in length.
pub fn branch_upper_bound_unbounded(
    rho: &Partition,
    sigma: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> u64 {
    upper_bound(rho, sigma, mu, nu, None)
}

fn upper_bound(
    rho: &Partition,
    sigma: &Partition,
    mu: &Partition,
    nu: &Partition,
    cap: Option<usize>,
) -> u64 {
    if mu.size() > rho.size()
        || nu.size() > sigma.size()
        || rho.size() - mu.size() != sigma.size() - nu.size()
    {
        return 0;
    }
    let r = rho.size() - mu.size();
    let common = rho.intersect(sigma);
    enumerate_partitions(r, cap.unwrap_or(r).min(r))
        .iter()
        .filter(|b| common.contains(b))
        .map(|b| lr_coefficient(rho, mu, b) * lr_coefficient(sigma, nu, b))
        .sum()
}
