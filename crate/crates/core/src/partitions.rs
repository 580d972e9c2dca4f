//! Partitions, skew shapes, contents, the bar map and the staircase
//! bijection between rational labels and classes of polynomial labels.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Parts beyond the
/// length read as zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but drops zero parts first.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// A single row `(k)`; empty for `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// A single column `(1_k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|α|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(α)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of columns, i.e. the first part.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    /// Boxes `(i, j)`, 0-based row and column.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn dual(&self) -> Partition {
        let parts = (0..self.width())
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `c(α) = Σ (j − i)` over boxes.
    pub fn content(&self) -> i64 {
        self.cells().map(|(i, j)| j as i64 - i as i64).sum()
    }

    /// Componentwise sum `α + β`.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Cellwise intersection `α ∩ β`.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let len = self.len().min(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i).min(other.part(i))).collect(),
        }
    }

    /// Cellwise inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// `β̄`: complement of `β` in the `q × N` box, rotated by 180°, where `q`
    /// is the number of columns of `β`.
    pub fn bar(&self, n: usize) -> Result<Partition> {
        if self.len() > n {
            return Err(Error::LengthBound(format!("ℓ({self}) > N = {n}")));
        }
        if self.is_empty() {
            return Ok(Partition::empty());
        }
        let cols = self.dual();
        let complement: Vec<usize> = cols.parts.iter().rev().map(|&c| n - c).collect();
        Ok(Partition::from_padded(complement)?.dual())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on parts, smaller size first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Command-line form: comma-separated parts, or `-` for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!("{inner} ⊄ {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn content(&self) -> i64 {
        self.outer.content() - self.inner.content()
    }
}

/// `c(α/β) = c(α) − c(β)`, without checking `β ⊆ α`.
pub fn skew_content(outer: &Partition, inner: &Partition) -> i64 {
    outer.content() - inner.content()
}

/// A pair `(μ, ν)` labelling a rational representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalLabel {
    pub mu: Partition,
    pub nu: Partition,
}

impl RationalLabel {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        RationalLabel { mu, nu }
    }

    /// Membership in `Λ(N)`: `ℓ(μ) + ℓ(ν) ≤ N`.
    pub fn in_lambda(&self, n: usize) -> bool {
        self.mu.len() + self.nu.len() <= n
    }
}

impl fmt::Display for RationalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

/// The class `[α, t]` of `(α, t)` modulo adding full columns of height `N`
/// to `α` while increasing `t`. Always holds the minimal representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseClass {
    alpha: Partition,
    t: usize,
    capacity: usize,
}

impl StaircaseClass {
    pub fn new(alpha: Partition, t: usize, capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::InvalidArgument("N must be positive".into()));
        }
        if alpha.len() > capacity {
            return Err(Error::LengthBound(format!("ℓ({alpha}) > N = {capacity}")));
        }
        let mut parts = alpha.parts;
        let mut t = t;
        while t > 0 && parts.len() == capacity {
            parts.iter_mut().for_each(|p| *p -= 1);
            parts.retain(|&p| p > 0);
            t -= 1;
        }
        Ok(StaircaseClass {
            alpha: Partition { parts },
            t,
            capacity,
        })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }
}

impl fmt::Display for StaircaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.alpha, self.t)
    }
}

/// `𝔰(μ, ν) = [μ + ν̄, ν₁]`.
pub fn staircase(mu: &Partition, nu: &Partition, n: usize) -> Result<StaircaseClass> {
    if mu.len() + nu.len() > n {
        return Err(Error::LengthBound(format!("ℓ({mu}) + ℓ({nu}) > N = {n}")));
    }
    StaircaseClass::new(mu.add(&nu.bar(n)?), nu.width(), n)
}

/// Inverse of [`staircase`]: `μ` drops the `t` leftmost columns of `α`, and
/// `ν` is the complement of `α` in the `N × t` box, rotated by 180°.
pub fn staircase_inverse(cls: &StaircaseClass) -> RationalLabel {
    let (alpha, t, n) = (&cls.alpha, cls.t, cls.capacity);
    if t == 0 {
        return RationalLabel::new(alpha.clone(), Partition::empty());
    }
    let mu = (0..n)
        .map(|i| alpha.part(i).saturating_sub(t))
        .filter(|&p| p > 0)
        .collect();
    let nu = (0..n)
        .rev()
        .map(|i| t.saturating_sub(alpha.part(i)))
        .filter(|&p| p > 0)
        .collect();
    RationalLabel::new(Partition { parts: mu }, Partition { parts: nu })
}

/// All partitions of `s` with at most `max_len` parts, reverse
/// lexicographic: `(s)` first.
pub fn enumerate_partitions(s: usize, max_len: usize) -> Vec<Partition> {
    fn rec(
        rest: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(s, s, max_len, &mut Vec::new(), &mut out);
    out
}

/// `Λ^{(r)}_{m,n}(N)`: pairs with `|μ| = m − r`, `|ν| = n − r` and
/// `ℓ(μ) + ℓ(ν) ≤ N`. `None` drops the length bound.
pub fn enumerate_lambda(m: usize, n: usize, r: usize, cap: Option<usize>) -> Vec<RationalLabel> {
    if r > m.min(n) {
        return Vec::new();
    }
    let bound = cap.unwrap_or(usize::MAX);
    let (sm, sn) = (m - r, n - r);
    let mut out = Vec::new();
    for mu in enumerate_partitions(sm, sm.min(bound)) {
        let room = bound.saturating_sub(mu.len());
        for nu in enumerate_partitions(sn, sn.min(room)) {
            out.push(RationalLabel::new(mu.clone(), nu));
        }
    }
    out
}
