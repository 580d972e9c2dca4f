use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::diagram::WalledDiagram;
use crate::error::{Error, Result};
use crate::rational::{format_q, Poly, Q};

/// Coefficient rings for [`AlgebraElement`]: exact rationals (specialized
/// `δ`) or polynomials in `δ`.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Coeff for Q {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coeff for Poly {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// A linear combination of walled diagrams in `B_{m,n}(δ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<C> {
    m: usize,
    n: usize,
    delta: C,
    terms: BTreeMap<WalledDiagram, C>,
}

pub type Specialized = AlgebraElement<Q>;
pub type Generic = AlgebraElement<Poly>;

impl Generic {
    pub fn generic_zero(m: usize, n: usize) -> Self {
        AlgebraElement::zero(m, n, Poly::delta())
    }

    /// Substitutes a value for `δ`.
    pub fn specialize(&self, delta: &Q) -> Specialized {
        let mut out = AlgebraElement::zero(self.m, self.n, delta.clone());
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c.eval(delta));
        }
        out
    }
}

impl<C: Coeff> AlgebraElement<C> {
    pub fn zero(m: usize, n: usize, delta: C) -> Self {
        AlgebraElement {
            m,
            n,
            delta,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, n: usize, delta: C) -> Self {
        Self::from_diagram(WalledDiagram::identity(m, n), delta)
    }

    pub fn from_diagram(d: WalledDiagram, delta: C) -> Self {
        let mut out = Self::zero(d.m(), d.n(), delta);
        out.add_term(d, C::one());
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> &C {
        &self.delta
    }

    pub fn terms(&self) -> &BTreeMap<WalledDiagram, C> {
        &self.terms
    }

    pub fn coefficient(&self, d: &WalledDiagram) -> C {
        self.terms.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: WalledDiagram, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d.clone()).or_insert_with(C::zero);
        *slot = slot.add_ref(&c);
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.m, self.n, self.delta.clone());
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x.mul_ref(c));
        }
        out
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            (self.m, self.n),
            (other.m, other.n),
            "elements of different algebras"
        );
        assert!(self.delta == other.delta, "elements at different δ");
    }

    /// Product with `other` stacked on top, loops weighted by `δ`.
    pub fn mul_elem(&self, other: &Self) -> Self {
        self.check(other);
        let mut powers: Vec<C> = vec![C::one()];
        let mut out = Self::zero(self.m, self.n, self.delta.clone());
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let (d, loops) = x.compose(y).expect("shapes checked");
                while powers.len() <= loops {
                    let next = powers.last().unwrap().mul_ref(&self.delta);
                    powers.push(next);
                }
                out.add_term(d, a.mul_ref(b).mul_ref(&powers[loops]));
            }
        }
        out
    }

    pub fn add_elem(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub_elem(&self, other: &Self) -> Self {
        self.add_elem(&other.scale(&-C::one()))
    }

    /// The anti-automorphism reflecting every diagram upside down.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(self.m, self.n, self.delta.clone());
        for (d, c) in &self.terms {
            out.add_term(d.flip(), c.clone());
        }
        out
    }

    /// Membership in `J`: every diagram carries at least one arc.
    pub fn in_ideal_j(&self) -> bool {
        self.terms.keys().all(|d| d.arc_count() > 0)
    }

    /// The component in `ℂ[S_m × S_n]`.
    pub fn permutation_part(&self) -> Self {
        let mut out = Self::zero(self.m, self.n, self.delta.clone());
        for (d, c) in self.terms.iter().filter(|(d, _)| d.arc_count() == 0) {
            out.add_term(d.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Add for &AlgebraElement<C> {
    type Output = AlgebraElement<C>;
    fn add(self, rhs: Self) -> AlgebraElement<C> {
        self.add_elem(rhs)
    }
}

impl<C: Coeff> Sub for &AlgebraElement<C> {
    type Output = AlgebraElement<C>;
    fn sub(self, rhs: Self) -> AlgebraElement<C> {
        self.sub_elem(rhs)
    }
}

impl<C: Coeff> Mul for &AlgebraElement<C> {
    type Output = AlgebraElement<C>;
    fn mul(self, rhs: Self) -> AlgebraElement<C> {
        self.mul_elem(rhs)
    }
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{} · {d}", format_q(c))?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a, T> {
    diagram: &'a WalledDiagram,
    coeff: T,
}

#[derive(Serialize)]
struct PolyJson {
    poly: Vec<[String; 1]>,
}

impl Serialize for Specialized {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (d, c) in &self.terms {
            seq.serialize_element(&TermJson {
                diagram: d,
                coeff: format_q(c),
            })?;
        }
        seq.end()
    }
}

impl Serialize for Generic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (d, c) in &self.terms {
            let poly = c.coeffs().iter().map(|x| [format_q(x)]).collect();
            seq.serialize_element(&TermJson {
                diagram: d,
                coeff: PolyJson { poly },
            })?;
        }
        seq.end()
    }
}

/// Builds an element from explicit terms, checking that all diagrams share
/// `(m, n)`.
pub fn from_terms(
    m: usize,
    n: usize,
    delta: Q,
    terms: Vec<(WalledDiagram, Q)>,
) -> Result<Specialized> {
    let mut out = AlgebraElement::zero(m, n, delta);
    for (d, c) in terms {
        if (d.m(), d.n()) != (m, n) {
            return Err(Error::ShapeMismatch(format!(
                "diagram in B_{{{},{}}}",
                d.m(),
                d.n()
            )));
        }
        out.add_term(d, c);
    }
    Ok(out)
}
