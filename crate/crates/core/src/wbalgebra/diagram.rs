use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A walled diagram on `m` left and `n` right strands.
///
/// Stored as a perfect matching on `2(m+n)` nodes: upper row `0..m+n`, lower
/// row `m+n..2(m+n)`, and within a row the left block precedes the right one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalledDiagram {
    m: usize,
    n: usize,
    mate: Vec<usize>,
}

impl WalledDiagram {
    pub fn identity(m: usize, n: usize) -> Self {
        let k = m + n;
        let mate = (0..2 * k)
            .map(|u| if u < k { u + k } else { u - k })
            .collect();
        WalledDiagram { m, n, mate }
    }

    /// Builds from a raw matching, checking the wall rule.
    pub fn from_matching(m: usize, n: usize, mate: Vec<usize>) -> Result<Self> {
        let k = m + n;
        if mate.len() != 2 * k {
            return Err(Error::InvalidDiagram(format!(
                "expected {} nodes, got {}",
                2 * k,
                mate.len()
            )));
        }
        for (u, &v) in mate.iter().enumerate() {
            if v >= 2 * k || v == u || mate[v] != u {
                return Err(Error::InvalidDiagram(format!(
                    "node {u} is not matched consistently"
                )));
            }
            let same_row = (u < k) == (v < k);
            let same_side = (u % k < m) == (v % k < m);
            if same_row == same_side {
                return Err(Error::InvalidDiagram(format!(
                    "line {u}–{v} must cross the wall iff it stays in one row"
                )));
            }
        }
        Ok(WalledDiagram { m, n, mate })
    }

    /// Builds from the arc/line description with 1-based labels, arcs as
    /// `(left, right)` pairs.
    pub fn from_parts(
        m: usize,
        n: usize,
        upper_arcs: &[(usize, usize)],
        lower_arcs: &[(usize, usize)],
        left_lines: &[(usize, usize)],
        right_lines: &[(usize, usize)],
    ) -> Result<Self> {
        let k = m + n;
        let mut mate = vec![usize::MAX; 2 * k];
        let mut join = |u: usize, v: usize| -> Result<()> {
            if mate[u] != usize::MAX || mate[v] != usize::MAX {
                return Err(Error::InvalidDiagram(format!("node used twice in {u}–{v}")));
            }
            mate[u] = v;
            mate[v] = u;
            Ok(())
        };
        let left = |a: usize| -> Result<usize> {
            (1..=m)
                .contains(&a)
                .then(|| a - 1)
                .ok_or_else(|| Error::IndexOutOfRange(format!("left node {a} not in 1..={m}")))
        };
        let right = |b: usize| -> Result<usize> {
            (1..=n)
                .contains(&b)
                .then(|| m + b - 1)
                .ok_or_else(|| Error::IndexOutOfRange(format!("right node {b} not in 1..={n}")))
        };
        for &(a, b) in upper_arcs {
            join(left(a)?, right(b)?)?;
        }
        for &(a, b) in lower_arcs {
            join(k + left(a)?, k + right(b)?)?;
        }
        for &(a, c) in left_lines {
            join(left(a)?, k + left(c)?)?;
        }
        for &(a, c) in right_lines {
            join(right(a)?, k + right(c)?)?;
        }
        if mate.contains(&usize::MAX) {
            return Err(Error::InvalidDiagram("some node is left unmatched".into()));
        }
        WalledDiagram::from_matching(m, n, mate)
    }

    /// The diagram attached to a permutation `π` of `0..m+n` under the
    /// bijection that swaps the two rows on the right of the wall.
    pub fn from_permutation(m: usize, n: usize, perm: &[usize]) -> Result<Self> {
        let k = m + n;
        if perm.len() != k {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for m+n = {k}",
                perm.len()
            )));
        }
        let top = |p: usize| if p < m { p } else { k + p };
        let bottom = |p: usize| if p < m { k + p } else { p };
        let mut mate = vec![usize::MAX; 2 * k];
        for (p, &q) in perm.iter().enumerate() {
            if q >= k || mate[bottom(q)] != usize::MAX {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            mate[top(p)] = bottom(q);
            mate[bottom(q)] = top(p);
        }
        WalledDiagram::from_matching(m, n, mate)
    }

    /// Left transposition `t_{ab}`, 1-based.
    pub fn t_left(m: usize, n: usize, a: usize, b: usize) -> Result<Self> {
        if !(1 <= a && a < b && b <= m) {
            return Err(Error::IndexOutOfRange(format!(
                "t_{{{a}{b}}} needs 1 ≤ a < b ≤ {m}"
            )));
        }
        Ok(Self::identity(m, n).swap_lower(a - 1, b - 1))
    }

    /// Right transposition `t_{a′b′}`, 1-based.
    pub fn t_right(m: usize, n: usize, a: usize, b: usize) -> Result<Self> {
        if !(1 <= a && a < b && b <= n) {
            return Err(Error::IndexOutOfRange(format!(
                "t_{{{a}′{b}′}} needs 1 ≤ a′ < b′ ≤ {n}"
            )));
        }
        Ok(Self::identity(m, n).swap_lower(m + a - 1, m + b - 1))
    }

    /// The arc generator `t_{ab′}`, 1-based.
    pub fn t_arc(m: usize, n: usize, a: usize, b: usize) -> Result<Self> {
        if !(1..=m).contains(&a) || !(1..=n).contains(&b) {
            return Err(Error::IndexOutOfRange(format!(
                "t_{{{a}{b}′}} needs a ≤ {m}, b′ ≤ {n}"
            )));
        }
        let k = m + n;
        let (u, v) = (a - 1, m + b - 1);
        let mut mate = Self::identity(m, n).mate;
        mate[u] = v;
        mate[v] = u;
        mate[k + u] = k + v;
        mate[k + v] = k + u;
        Ok(WalledDiagram { m, n, mate })
    }

    fn swap_lower(mut self, p: usize, q: usize) -> Self {
        let k = self.m + self.n;
        self.mate.swap(p, q);
        self.mate[k + p] = q;
        self.mate[k + q] = p;
        self
    }

    /// All `(m+n)!` walled diagrams, in a fixed order.
    pub fn all(m: usize, n: usize) -> Vec<Self> {
        let k = m + n;
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..k).collect();
        permutations(&mut perm, 0, &mut |p| {
            out.push(Self::from_permutation(m, n, p).expect("valid permutation"));
        });
        out.sort();
        out
    }

    /// Diagrams without arcs, i.e. elements of `S_m × S_n`.
    pub fn permutations(m: usize, n: usize) -> Vec<Self> {
        Self::all(m, n)
            .into_iter()
            .filter(|d| d.arc_count() == 0)
            .collect()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The raw matching.
    pub fn matching(&self) -> &[usize] {
        &self.mate
    }

    /// Node partner, exposed for index bookkeeping in tensor actions.
    pub fn mate(&self, u: usize) -> usize {
        self.mate[u]
    }

    pub fn arc_count(&self) -> usize {
        (0..self.m)
            .filter(|&u| self.mate[u] < self.m + self.n)
            .count()
    }

    fn arcs(&self, offset: usize) -> Vec<(usize, usize)> {
        (0..self.m)
            .filter_map(|a| {
                let v = self.mate[offset + a];
                let in_row = v >= offset && v < offset + self.m + self.n;
                in_row.then(|| (a + 1, v - offset - self.m + 1))
            })
            .collect()
    }

    /// Upper-row arcs as 1-based `(a, b′)`.
    pub fn upper_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs(0)
    }

    /// Lower-row arcs as 1-based `(a, b′)`.
    pub fn lower_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs(self.m + self.n)
    }

    /// Left passing lines, upper node to lower node, 1-based.
    pub fn left_lines(&self) -> Vec<(usize, usize)> {
        let k = self.m + self.n;
        (0..self.m)
            .filter(|&a| self.mate[a] >= k)
            .map(|a| (a + 1, self.mate[a] - k + 1))
            .collect()
    }

    /// Right passing lines, upper node to lower node, 1-based.
    pub fn right_lines(&self) -> Vec<(usize, usize)> {
        let k = self.m + self.n;
        (self.m..k)
            .filter(|&b| self.mate[b] >= k)
            .map(|b| (b - self.m + 1, self.mate[b] - k - self.m + 1))
            .collect()
    }

    /// Reflection in the horizontal middle line.
    pub fn flip(&self) -> Self {
        let k = self.m + self.n;
        let swap = |u: usize| if u < k { u + k } else { u - k };
        let mut mate = vec![0; 2 * k];
        for (u, &v) in self.mate.iter().enumerate() {
            mate[swap(u)] = swap(v);
        }
        WalledDiagram {
            m: self.m,
            n: self.n,
            mate,
        }
    }

    /// `self · other`: `other` is stacked on top of `self`. Returns the
    /// composite and the number of closed loops removed.
    pub fn compose(&self, other: &WalledDiagram) -> Result<(WalledDiagram, usize)> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::ShapeMismatch(format!(
                "B_{{{},{}}} vs B_{{{},{}}}",
                self.m, self.n, other.m, other.n
            )));
        }
        let k = self.m + self.n;
        let (lower, upper) = (&self.mate, &other.mate);
        let mut mate = vec![usize::MAX; 2 * k];
        let mut seen = vec![false; k];

        for start in 0..2 * k {
            if mate[start] != usize::MAX {
                continue;
            }
            // position inside the current diagram, and which diagram
            let (mut in_upper, mut cur) = if start < k {
                (true, start)
            } else {
                (false, start)
            };
            let end = loop {
                if in_upper {
                    let v = upper[cur];
                    if v < k {
                        break v;
                    }
                    seen[v - k] = true;
                    in_upper = false;
                    cur = v - k;
                } else {
                    let v = lower[cur];
                    if v >= k {
                        break v;
                    }
                    seen[v] = true;
                    in_upper = true;
                    cur = v + k;
                }
            };
            mate[start] = end;
            mate[end] = start;
        }

        let mut loops = 0;
        for p in 0..k {
            if seen[p] {
                continue;
            }
            loops += 1;
            let mut q = p;
            loop {
                seen[q] = true;
                q = lower[q];
                seen[q] = true;
                q = upper[q + k] - k;
                if q == p {
                    break;
                }
            }
        }
        Ok((
            WalledDiagram {
                m: self.m,
                n: self.n,
                mate,
            },
            loops,
        ))
    }
}

fn permutations(v: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == v.len() {
        f(v);
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permutations(v, i + 1, f);
        v.swap(i, j);
    }
}

impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Vec<(usize, usize)>, prime: bool| {
            v.iter()
                .map(|(a, b)| {
                    if prime {
                        format!("{a}′{b}′")
                    } else {
                        format!("{a}{b}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let arcs = |v: Vec<(usize, usize)>| {
            v.iter()
                .map(|(a, b)| format!("{a}{b}′"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "⟨up: {} | down: {} | L: {} | R: {}⟩",
            arcs(self.upper_arcs()),
            arcs(self.lower_arcs()),
            show(self.left_lines(), false),
            show(self.right_lines(), true)
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct DiagramJson {
    m: usize,
    n: usize,
    upper_arcs: Vec<(usize, usize)>,
    lower_arcs: Vec<(usize, usize)>,
    left_lines: BTreeMap<String, usize>,
    right_lines: BTreeMap<String, usize>,
}

fn lines_to_json(v: Vec<(usize, usize)>) -> BTreeMap<String, usize> {
    v.into_iter().map(|(a, b)| (a.to_string(), b)).collect()
}

fn lines_from_json(
    m: &BTreeMap<String, usize>,
) -> std::result::Result<Vec<(usize, usize)>, String> {
    m.iter()
        .map(|(a, &b)| {
            a.parse()
                .map(|a| (a, b))
                .map_err(|_| format!("bad node label {a:?}"))
        })
        .collect()
}

impl Serialize for WalledDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            m: self.m,
            n: self.n,
            upper_arcs: self.upper_arcs(),
            lower_arcs: self.lower_arcs(),
            left_lines: lines_to_json(self.left_lines()),
            right_lines: lines_to_json(self.right_lines()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WalledDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = DiagramJson::deserialize(deserializer)?;
        let left = lines_from_json(&j.left_lines).map_err(D::Error::custom)?;
        let right = lines_from_json(&j.right_lines).map_err(D::Error::custom)?;
        WalledDiagram::from_parts(j.m, j.n, &j.upper_arcs, &j.lower_arcs, &left, &right)
            .map_err(D::Error::custom)
    }
}
