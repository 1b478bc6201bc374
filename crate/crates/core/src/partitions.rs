//! Partitions, Young diagrams and their β-set calculus.
//!
//! A [`Partition`] is stored canonically: positive parts, weakly decreasing,
//! no trailing zeros. β-sets are the workhorse for everything else in this
//! module. Border strips of size `x` correspond to moving one bead of a
//! β-set down by `x` onto a free position, dominoes are the case `x = 2`,
//! and the 2-core and 2-quotient are read off the even and odd runners of
//! the 2-abacus.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; zeros anywhere else are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The staircase `Δ_t = (t, t-1, ..., 1)`.
    pub fn staircase(t: usize) -> Self {
        Partition {
            parts: (1..=t).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of each part size: entry `i` counts parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn is_staircase(&self) -> bool {
        let t = self.len();
        self.parts.iter().enumerate().all(|(i, &p)| p == t - i)
    }

    /// Conjugate partition (columns become rows).
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.transpose();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.part(j) - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// β-set at `rows` rows: `β_i = λ_i + rows - i` for `i = 1..=rows`.
    pub fn beta_set(&self, rows: usize) -> Result<BetaSet> {
        if rows < self.len() {
            return Err(Error::TooFewRows {
                rows,
                parts: self.len(),
            });
        }
        let entries = (0..rows).map(|i| self.part(i) + rows - 1 - i).collect();
        Ok(BetaSet { entries })
    }

    /// All border strips of `size` whose removal leaves a Young diagram.
    ///
    /// Enumerated on the β-set: a strip of size `x` is a bead `b` with
    /// `b - x` free, and its height is the number of beads strictly between
    /// `b - x` and `b`.
    pub fn border_strips(&self, size: usize) -> Vec<BorderStrip> {
        if size == 0 {
            return Vec::new();
        }
        let beta = self
            .beta_set(self.len())
            .expect("row count equals the number of parts");
        let entries = &beta.entries;
        let mut strips = Vec::new();
        for (i, &b) in entries.iter().enumerate() {
            if b < size {
                continue;
            }
            let target = b - size;
            if entries.contains(&target) {
                continue;
            }
            let height = entries.iter().filter(|&&e| e > target && e < b).count();
            let mut moved = entries.clone();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let result = BetaSet { entries: moved }.to_partition();
            strips.push(BorderStrip {
                size,
                height,
                result,
                host: None,
            });
        }
        strips
    }

    /// Horizontal strips of `boxes` boxes that can be added (no two added
    /// boxes in one column).
    pub fn add_horizontal_strip(&self, boxes: usize) -> Vec<Partition> {
        // Row i of the result lies between λ_i and λ_{i-1}; row 0 is unbounded.
        let rows = self.len() + 1;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows);
        fn go(
            lam: &Partition,
            i: usize,
            rows: usize,
            left: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == rows {
                if left == 0 {
                    out.push(Partition::from_sorted(current.clone()));
                }
                return;
            }
            let base = lam.part(i);
            let room = if i == 0 { left } else { lam.part(i - 1) - base };
            for extra in (0..=room.min(left)).rev() {
                current.push(base + extra);
                go(lam, i + 1, rows, left - extra, current, out);
                current.pop();
            }
        }
        go(self, 0, rows, boxes, &mut current, &mut out);
        out
    }

    /// Horizontal strips of `boxes` boxes that can be deleted.
    pub fn remove_horizontal_strip(&self, boxes: usize) -> Vec<Partition> {
        let rows = self.len();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows);
        fn go(
            lam: &Partition,
            i: usize,
            rows: usize,
            left: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == rows {
                if left == 0 {
                    out.push(Partition::from_sorted(current.clone()));
                }
                return;
            }
            let top = lam.part(i);
            let room = top - lam.part(i + 1);
            for cut in 0..=room.min(left) {
                current.push(top - cut);
                go(lam, i + 1, rows, left - cut, current, out);
                current.pop();
            }
        }
        go(self, 0, rows, boxes, &mut current, &mut out);
        out
    }

    /// Index `t` of the 2-core `Δ_t`.
    pub fn two_core(&self) -> usize {
        let beta = self
            .beta_set(self.len())
            .expect("row count equals the number of parts");
        let odd = beta.entries.iter().filter(|&&b| b % 2 == 1).count();
        let even = beta.entries.len() - odd;
        let core = abacus_core(even, odd);
        debug_assert!(core.is_staircase());
        core.len()
    }

    /// 2-quotient at the canonical row count (number of nonzero parts).
    pub fn two_quotient(&self) -> Bipartition {
        self.two_quotient_at(self.len())
            .expect("row count equals the number of parts")
    }

    /// 2-quotient computed from the β-set at `rows` rows. The result does not
    /// depend on `rows`: one extra row flips both the parity of every bead
    /// and the parity of the row count.
    pub fn two_quotient_at(&self, rows: usize) -> Result<Bipartition> {
        let beta = self.beta_set(rows)?;
        let (even, odd) = beta.split_runners();
        let mu0 = even.to_partition();
        let mu1 = odd.to_partition();
        Ok(if rows % 2 == 1 {
            Bipartition::new(mu0, mu1)
        } else {
            Bipartition::new(mu1, mu0)
        })
    }

    pub fn core_quotient(&self) -> CoreQuotient {
        CoreQuotient {
            core: self.two_core(),
            quotient: self.two_quotient(),
        }
    }

    /// The unique partition with 2-core `Δ_t` and 2-quotient `quotient`.
    ///
    /// Interleaves the quotient β-sets on an odd number `2L + 1` of rows, for
    /// which the quotient order is `(μ^0, μ^1)`, picking the bead split
    /// between the runners whose compressed abacus is `Δ_t`.
    pub fn from_core_quotient(t: usize, quotient: &Bipartition) -> Partition {
        let (mu0, mu1) = (&quotient.first, &quotient.second);
        let half = t + mu0.len() + mu1.len() + 1;
        let rows = 2 * half + 1;
        let even_beads = (mu0.len()..=rows - mu1.len())
            .find(|&even| {
                let core = abacus_core(even, rows - even);
                core.is_staircase() && core.len() == t
            })
            .expect("every staircase is the core of some bead split");
        let odd_beads = rows - even_beads;
        let mut entries: Vec<usize> = mu0
            .beta_set(even_beads)
            .expect("enough beads on the even runner")
            .entries
            .iter()
            .map(|b| 2 * b)
            .chain(
                mu1.beta_set(odd_beads)
                    .expect("enough beads on the odd runner")
                    .entries
                    .iter()
                    .map(|b| 2 * b + 1),
            )
            .collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        BetaSet { entries }.to_partition()
    }
}

/// Partition whose β-set has the lowest `even` even and `odd` odd positions.
fn abacus_core(even: usize, odd: usize) -> Partition {
    let mut entries: Vec<usize> = (0..even)
        .map(|k| 2 * k)
        .chain((0..odd).map(|k| 2 * k + 1))
        .collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    BetaSet { entries }.to_partition()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Comma-separated parts, e.g. `3,3,2,2,1`. The empty partition is written
/// as an empty string, `0`, `-` or `∅`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

/// Ordered pair of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Partition, Partition)", into = "(Partition, Partition)")]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// Border strips of either diagram, tagged with their host.
    pub fn border_strips(&self, size: usize) -> Vec<BorderStrip> {
        let mut strips: Vec<BorderStrip> = self
            .first
            .border_strips(size)
            .into_iter()
            .map(|s| BorderStrip {
                host: Some(Host::First),
                ..s
            })
            .collect();
        strips.extend(
            self.second
                .border_strips(size)
                .into_iter()
                .map(|s| BorderStrip {
                    host: Some(Host::Second),
                    ..s
                }),
        );
        strips
    }

    /// Replaces the diagram a strip was removed from by the strip's result.
    pub fn after_removal(&self, strip: &BorderStrip) -> Bipartition {
        match strip.host {
            Some(Host::Second) => Bipartition::new(self.first.clone(), strip.result.clone()),
            _ => Bipartition::new(strip.result.clone(), self.second.clone()),
        }
    }
}

impl From<(Partition, Partition)> for Bipartition {
    fn from((first, second): (Partition, Partition)) -> Self {
        Bipartition { first, second }
    }
}

impl From<Bipartition> for (Partition, Partition) {
    fn from(b: Bipartition) -> Self {
        (b.first, b.second)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Two partitions separated by a slash, e.g. `3,1,1/4,2` or `/1`.
impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidPartition(Vec::new()))?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// Strictly decreasing non-negative integers encoding a partition at a fixed
/// row count (`entries.len()`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBetaSet(entries));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of rows this β-set encodes.
    pub fn declared_length(&self) -> usize {
        self.entries.len()
    }

    /// Inverse map `λ_i = β_i + i - r`.
    pub fn to_partition(&self) -> Partition {
        let r = self.entries.len();
        Partition::from_sorted(
            self.entries
                .iter()
                .enumerate()
                .map(|(i, &b)| b + i + 1 - r)
                .collect(),
        )
    }

    /// Halved even and odd entries: `(β^0, β^1)`.
    fn split_runners(&self) -> (BetaSet, BetaSet) {
        let even = self.entries.iter().filter(|&&b| b % 2 == 0).map(|b| b / 2);
        let odd = self
            .entries
            .iter()
            .filter(|&&b| b % 2 == 1)
            .map(|b| (b - 1) / 2);
        (
            BetaSet {
                entries: even.collect(),
            },
            BetaSet {
                entries: odd.collect(),
            },
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Host {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorderStrip {
    pub size: usize,
    /// Rows spanned minus one.
    pub height: usize,
    /// Diagram left after removing the strip.
    pub result: Partition,
    /// Which half of a bipartition the strip lives in, if any.
    pub host: Option<Host>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreQuotient {
    /// Staircase index `t` of the 2-core.
    pub core: usize,
    pub quotient: Bipartition,
}

impl CoreQuotient {
    pub fn to_partition(&self) -> Partition {
        Partition::from_core_quotient(self.core, &self.quotient)
    }

    pub fn size(&self) -> usize {
        self.core * (self.core + 1) / 2 + 2 * self.quotient.size()
    }
}

/// Triangular number `t(t+1)/2 = |Δ_t|`.
pub fn triangular(t: usize) -> usize {
    t * (t + 1) / 2
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(left: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=left.min(max)).rev() {
            current.push(p);
            go(left - p, p, current, out);
            current.pop();
        }
    }
    go(n, n, &mut current, &mut out);
    out
}

/// All bipartitions of `a`, in decreasing lexicographic order (first
/// component major).
pub fn bipartitions_of(a: usize) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> = (0..=a)
        .flat_map(|j| {
            let seconds = partitions_of(a - j);
            partitions_of(j).into_iter().flat_map(move |first| {
                seconds
                    .clone()
                    .into_iter()
                    .map(move |second| Bipartition::new(first.clone(), second))
            })
        })
        .collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}
