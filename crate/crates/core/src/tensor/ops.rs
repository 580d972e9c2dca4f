//! Index-level operators on mixed tensors. Slot labels are 1-based: `a` runs
//! over the contravariant slots `1..=m`, `b` over the covariant ones `1..=n`.

use itertools::Itertools;

use super::dense::DenseTensor;
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::wbalgebra::WalledDiagram;

fn upper_slot(m: usize, a: usize) -> Result<usize> {
    if (1..=m).contains(&a) {
        Ok(a - 1)
    } else {
        Err(Error::IndexOutOfRange(format!(
            "contravariant slot {a} not in 1..={m}"
        )))
    }
}

fn lower_slot(m: usize, n: usize, b: usize) -> Result<usize> {
    if (1..=n).contains(&b) {
        Ok(m + b - 1)
    } else {
        Err(Error::IndexOutOfRange(format!(
            "covariant slot {b} not in 1..={n}"
        )))
    }
}

/// `tr_{ab′}`: contracts slots `a` and `b′`, lowering the shape to `(m−1, n−1)`.
pub fn trace<S: Scalar>(t: &DenseTensor<S>, a: usize, b: usize) -> Result<DenseTensor<S>> {
    let (m, n, dim) = (t.m(), t.n(), t.dim());
    let sa = upper_slot(m, a)?;
    let sb = lower_slot(m, n, b)?;
    let mut src = vec![0; m + n];
    Ok(DenseTensor::from_fn(m - 1, n - 1, dim, |idx| {
        // rebuild the full index with a gap at sa and sb
        let mut it = idx.iter();
        for (p, slot) in src.iter_mut().enumerate() {
            if p != sa && p != sb {
                *slot = *it.next().unwrap();
            }
        }
        let mut acc = S::zero();
        for k in 0..dim {
            src[sa] = k;
            src[sb] = k;
            acc += t.get(&src).clone();
        }
        acc
    }))
}

/// `tr⁺_{ab′}`: inserts `Σ e_k ⊗ e^k` so the new slots sit at positions `a`
/// and `b′` of the `(m+1, n+1)` result.
pub fn insert<S: Scalar>(t: &DenseTensor<S>, a: usize, b: usize) -> Result<DenseTensor<S>> {
    let (m, n, dim) = (t.m() + 1, t.n() + 1, t.dim());
    let sa = upper_slot(m, a)?;
    let sb = lower_slot(m, n, b)?;
    let mut src = Vec::with_capacity(m + n - 2);
    Ok(DenseTensor::from_fn(m, n, dim, |idx| {
        if idx[sa] != idx[sb] {
            return S::zero();
        }
        src.clear();
        src.extend(
            idx.iter()
                .enumerate()
                .filter(|&(p, _)| p != sa && p != sb)
                .map(|(_, &i)| i),
        );
        t.get(&src).clone()
    }))
}

/// `τ_{ab′} = tr⁺_{ab′} ∘ tr_{ab′}`, computed in one pass.
pub fn tau_arc<S: Scalar>(t: &DenseTensor<S>, a: usize, b: usize) -> Result<DenseTensor<S>> {
    let sa = upper_slot(t.m(), a)?;
    let sb = lower_slot(t.m(), t.n(), b)?;
    let dim = t.dim();
    let mut src = vec![0; t.rank()];
    Ok(DenseTensor::from_fn(t.m(), t.n(), dim, |idx| {
        if idx[sa] != idx[sb] {
            return S::zero();
        }
        src.copy_from_slice(idx);
        let mut acc = S::zero();
        for k in 0..dim {
            src[sa] = k;
            src[sb] = k;
            acc += t.get(&src).clone();
        }
        acc
    }))
}

fn swap_slots<S: Scalar>(t: &DenseTensor<S>, p: usize, q: usize) -> DenseTensor<S> {
    let mut src = vec![0; t.rank()];
    DenseTensor::from_fn(t.m(), t.n(), t.dim(), |idx| {
        src.copy_from_slice(idx);
        src.swap(p, q);
        t.get(&src).clone()
    })
}

/// `τ_{ab}`: exchanges contravariant slots `a` and `b`.
pub fn tau_left<S: Scalar>(t: &DenseTensor<S>, a: usize, b: usize) -> Result<DenseTensor<S>> {
    Ok(swap_slots(t, upper_slot(t.m(), a)?, upper_slot(t.m(), b)?))
}

/// `τ_{a′b′}`: exchanges covariant slots `a′` and `b′`.
pub fn tau_right<S: Scalar>(t: &DenseTensor<S>, a: usize, b: usize) -> Result<DenseTensor<S>> {
    let (m, n) = (t.m(), t.n());
    Ok(swap_slots(t, lower_slot(m, n, a)?, lower_slot(m, n, b)?))
}

fn sum_of<S: Scalar>(
    t: &DenseTensor<S>,
    pairs: impl Iterator<Item = (usize, usize)>,
    f: impl Fn(&DenseTensor<S>, usize, usize) -> Result<DenseTensor<S>>,
) -> DenseTensor<S> {
    let mut acc = DenseTensor::zeros(t.m(), t.n(), t.dim());
    for (a, b) in pairs {
        acc = acc
            .add(&f(t, a, b).expect("slots in range"))
            .expect("same shape");
    }
    acc
}

/// `𝒜_{m,n} = Σ τ_{ab′}`.
pub fn operator_a<S: Scalar>(t: &DenseTensor<S>) -> DenseTensor<S> {
    sum_of(t, (1..=t.m()).cartesian_product(1..=t.n()), tau_arc)
}

/// `ℒ = Σ_{a<b} τ_{ab}`.
pub fn operator_l<S: Scalar>(t: &DenseTensor<S>) -> DenseTensor<S> {
    sum_of(t, (1..=t.m()).tuple_combinations(), tau_left)
}

/// `ℛ = Σ_{a′<b′} τ_{a′b′}`.
pub fn operator_r<S: Scalar>(t: &DenseTensor<S>) -> DenseTensor<S> {
    sum_of(t, (1..=t.n()).tuple_combinations(), tau_right)
}

/// `𝒞 = ℒ + ℛ − 𝒜 + N·n`.
pub fn operator_c<S: Scalar>(t: &DenseTensor<S>) -> DenseTensor<S> {
    let shift = S::from_q(&Q::from_integer(((t.dim() * t.n()) as i64).into()));
    let lr = operator_l(t).add(&operator_r(t)).expect("same shape");
    lr.sub(&operator_a(t))
        .expect("same shape")
        .add(&t.scale(&shift))
        .expect("same shape")
}

/// How arcs pair a contravariant index with a covariant one.
#[derive(Clone, Debug)]
pub enum Pairing<S> {
    /// The canonical pairing `δ^i_j`.
    Kronecker,
    /// Upper arcs contract with `up[i][j]`, lower arcs multiply by `down[i][j]`
    /// (both `N × N`, row-major).
    Metric { up: Vec<S>, down: Vec<S> },
}

/// `𝔟(b)`: the action of a walled diagram. Output indices sit on the lower
/// row; upper arcs contract input slots and passing lines carry indices up.
pub fn diagram_action<S: Scalar>(b: &WalledDiagram, t: &DenseTensor<S>) -> Result<DenseTensor<S>> {
    diagram_action_with(b, t, &Pairing::Kronecker)
}

pub fn diagram_action_with<S: Scalar>(
    b: &WalledDiagram,
    t: &DenseTensor<S>,
    pairing: &Pairing<S>,
) -> Result<DenseTensor<S>> {
    let (m, n, dim) = (t.m(), t.n(), t.dim());
    if (b.m(), b.n()) != (m, n) {
        return Err(Error::ShapeMismatch(format!(
            "diagram in B_{{{},{}}} acting on V^{{{m},{n}}}",
            b.m(),
            b.n()
        )));
    }
    let k = m + n;
    let upper: Vec<(usize, usize)> = (0..m)
        .filter(|&u| b.mate(u) < k)
        .map(|u| (u, b.mate(u)))
        .collect();
    let lower: Vec<(usize, usize)> = (0..m)
        .filter(|&u| b.mate(k + u) >= k)
        .map(|u| (u, b.mate(k + u) - k))
        .collect();
    let passing: Vec<(usize, usize)> = (0..k)
        .filter(|&u| b.mate(u) >= k)
        .map(|u| (u, b.mate(u) - k))
        .collect();

    let sums = match pairing {
        Pairing::Kronecker => assignments(upper.len(), dim),
        Pairing::Metric { .. } => assignments(2 * upper.len(), dim),
    };
    let mut src = vec![0; k];
    let out = DenseTensor::from_fn(m, n, dim, |y| {
        let weight = match pairing {
            Pairing::Kronecker => {
                if lower.iter().any(|&(p, q)| y[p] != y[q]) {
                    return S::zero();
                }
                S::one()
            }
            Pairing::Metric { down, .. } => {
                let mut w = S::one();
                for &(p, q) in &lower {
                    w = w * down[y[p] * dim + y[q]].clone();
                }
                if w.is_zero() {
                    return S::zero();
                }
                w
            }
        };
        for &(u, w) in &passing {
            src[u] = y[w];
        }
        let mut acc = S::zero();
        match pairing {
            Pairing::Kronecker => {
                for ks in &sums {
                    for (&(p, q), &kv) in upper.iter().zip(ks) {
                        src[p] = kv;
                        src[q] = kv;
                    }
                    acc += t.get(&src).clone();
                }
            }
            Pairing::Metric { up, .. } => {
                for ks in &sums {
                    let mut g = S::one();
                    for (r, &(p, q)) in upper.iter().enumerate() {
                        src[p] = ks[2 * r];
                        src[q] = ks[2 * r + 1];
                        g = g * up[ks[2 * r] * dim + ks[2 * r + 1]].clone();
                    }
                    acc += g * t.get(&src).clone();
                }
            }
        }
        weight * acc
    });
    Ok(out)
}

/// All assignments of values in `0..dim` to `count` summation indices.
fn assignments(count: usize, dim: usize) -> Vec<Vec<usize>> {
    if count == 0 {
        return vec![Vec::new()];
    }
    (0..count)
        .map(|_| 0..dim)
        .multi_cartesian_product()
        .collect()
}

/// Permutation symmetry imposed on a group of slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Symmetric,
    Antisymmetric,
}

fn sign(perm: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                s = -s;
            }
        }
    }
    s
}

fn project_group<S: Scalar>(t: &DenseTensor<S>, slots: &[usize], sym: Symmetry) -> DenseTensor<S> {
    if sym == Symmetry::None || slots.len() < 2 {
        return t.clone();
    }
    let perms: Vec<Vec<usize>> = (0..slots.len()).permutations(slots.len()).collect();
    let norm = Q::new(1.into(), (perms.len() as i64).into());
    let mut src = vec![0; t.rank()];
    DenseTensor::from_fn(t.m(), t.n(), t.dim(), |idx| {
        let mut acc = S::zero();
        for p in &perms {
            src.copy_from_slice(idx);
            for (r, &s) in slots.iter().enumerate() {
                src[s] = idx[slots[p[r]]];
            }
            let v = t.get(&src).clone();
            if sym == Symmetry::Antisymmetric && sign(p) < 0 {
                acc += -v;
            } else {
                acc += v;
            }
        }
        acc * S::from_q(&norm)
    })
}

/// (Anti)symmetrizes the contravariant and covariant slot groups separately.
pub fn symmetrize<S: Scalar>(
    t: &DenseTensor<S>,
    upper: Symmetry,
    lower: Symmetry,
) -> DenseTensor<S> {
    let ups: Vec<usize> = (0..t.m()).collect();
    let downs: Vec<usize> = (t.m()..t.rank()).collect();
    project_group(&project_group(t, &ups, upper), &downs, lower)
}

/// Whether swapping the two given 0-based slots negates the tensor.
pub fn is_antisymmetric<S: Scalar>(t: &DenseTensor<S>, p: usize, q: usize, tol: f64) -> bool {
    let swapped = swap_slots(t, p, q);
    let sum = swapped.add(t).expect("same shape");
    sum.approx_zero(tol, t.max_magnitude())
}

/// Multiplies slot `slot` (0-based) by the `N × N` matrix `mat`, from the
/// left (`new^i = M^i_p old^p`) or from the right (`new_j = old_p M^p_j`).
pub fn transform_slot<S: Scalar>(
    t: &DenseTensor<S>,
    slot: usize,
    mat: &[S],
    from_left: bool,
) -> DenseTensor<S> {
    let dim = t.dim();
    let mut src = vec![0; t.rank()];
    DenseTensor::from_fn(t.m(), t.n(), dim, |idx| {
        src.copy_from_slice(idx);
        let i = idx[slot];
        let mut acc = S::zero();
        for p in 0..dim {
            src[slot] = p;
            let c = if from_left {
                &mat[i * dim + p]
            } else {
                &mat[p * dim + i]
            };
            if !c.is_zero() {
                acc += c.clone() * t.get(&src).clone();
            }
        }
        acc
    })
}

/// The diagonal GL(N) action: `s` on contravariant slots and `s_inv` from the
/// right on covariant ones.
pub fn act_gl<S: Scalar>(t: &DenseTensor<S>, s: &[S], s_inv: &[S]) -> DenseTensor<S> {
    let mut out = t.clone();
    for slot in 0..t.m() {
        out = transform_slot(&out, slot, s, true);
    }
    for slot in t.m()..t.rank() {
        out = transform_slot(&out, slot, s_inv, false);
    }
    out
}

/// All contractions `tr_{ab′}` vanish.
pub fn is_traceless<S: Scalar>(t: &DenseTensor<S>, tol: f64) -> bool {
    let scale = t.max_magnitude();
    (1..=t.m()).cartesian_product(1..=t.n()).all(|(a, b)| {
        trace(t, a, b)
            .expect("slots in range")
            .approx_zero(tol, scale)
    })
}

/// `N × N` identity matrix, row-major.
pub fn identity_matrix<S: Scalar>(dim: usize) -> Vec<S> {
    (0..dim * dim)
        .map(|x| {
            if x / dim == x % dim {
                S::one()
            } else {
                S::zero()
            }
        })
        .collect()
}
