//! The walled Brauer algebra `B_{m,n}(δ)`, the element `A_{m,n}` and the
//! splitting idempotent `P_{m,n}`.

mod diagram;
mod element;

use std::collections::BTreeSet;

use num_traits::{One, Zero};

pub use diagram::WalledDiagram;
pub use element::{from_terms, AlgebraElement, Coeff, Generic, Specialized};

use crate::error::{Error, Result};
use crate::rational::{format_q, Poly, Q};
use crate::spectrum::{projector_factors_q, wb_spec_a, AffineEigenvalue};

/// `A_{m,n} = Σ t_{ab′}`.
pub fn element_a<C: Coeff>(m: usize, n: usize, delta: C) -> AlgebraElement<C> {
    let mut out = AlgebraElement::zero(m, n, delta);
    for a in 1..=m {
        for b in 1..=n {
            out.add_term(
                WalledDiagram::t_arc(m, n, a, b).expect("in range"),
                C::one(),
            );
        }
    }
    out
}

/// Semisimplicity of `B_{m,n}(δ)` for rational `δ`.
pub fn is_semisimple(m: usize, n: usize, delta: &Q) -> bool {
    if !delta.is_integer() {
        return true;
    }
    if delta.is_zero() {
        return matches!((m, n), (1, 2) | (1, 3) | (2, 1) | (3, 1));
    }
    let abs = if *delta < Q::zero() {
        -delta.clone()
    } else {
        delta.clone()
    };
    abs >= Q::from_integer(((m + n) as i64 - 1).into())
}

/// Nonzero eigenvalues of `A_{m,n}` at `δ`, refusing if a nontrivial affine
/// form vanishes there.
pub fn specialized_spectrum(m: usize, n: usize, delta: &Q) -> Result<BTreeSet<Q>> {
    let mut out = BTreeSet::new();
    for a in wb_spec_a(m, n) {
        let v = a.at_q(delta);
        if v.is_zero() && !a.is_trivial() {
            return Err(Error::ZeroEigenvalue {
                value: a.to_string(),
                delta: format_q(delta),
            });
        }
        out.insert(v);
    }
    Ok(out)
}

/// `P_{m,n} = ∏ (1 − A/a)` at a specialized `δ`.
pub fn element_p(m: usize, n: usize, delta: &Q) -> Result<Specialized> {
    if !is_semisimple(m, n, delta) {
        return Err(Error::NotSemisimple {
            m,
            n,
            delta: format_q(delta),
        });
    }
    let factors = projector_factors_q(&specialized_spectrum(m, n, delta)?, true)?;
    let a = element_a(m, n, delta.clone());
    let one = AlgebraElement::one(m, n, delta.clone());
    let mut p = one.clone();
    for x in factors {
        let f = &one - &a.scale(&x.recip());
        p = &p * &f;
    }
    Ok(p)
}

/// `P_{m,n}` at generic `δ` as `numerator / denominator`, with one factor per
/// distinct nontrivial affine eigenvalue.
pub fn element_p_generic(m: usize, n: usize) -> (Generic, Poly) {
    let a = element_a(m, n, Poly::delta());
    let one = AlgebraElement::one(m, n, Poly::delta());
    let mut num = one.clone();
    let mut den = Poly::one();
    let forms: Vec<AffineEigenvalue> = wb_spec_a(m, n)
        .into_iter()
        .filter(|a| !a.is_trivial())
        .collect();
    for f in forms.iter().rev() {
        let lin = Poly::new(vec![
            Q::from_integer(f.c.into()),
            Q::from_integer((f.r as i64).into()),
        ]);
        num = &num * &(&one.scale(&lin) - &a);
        den = &den * &lin;
    }
    (num, den)
}
