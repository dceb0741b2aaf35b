//! Partitions, Young diagrams and reverse tableaux.
//!
//! Boxes use 1-based `(row, column)` coordinates, as in the usual English
//! drawing of a diagram.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction so that equal partitions
/// always compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{:?} is not weakly decreasing", parts)));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts the input into decreasing order before building.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted input")
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `r`.
    ///
    /// Panics if the partition is longer than `r`.
    pub fn padded(&self, r: usize) -> Vec<usize> {
        assert!(self.len() <= r, "partition {} longer than {}", self, r);
        (0..r).map(|i| self.get(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.get(0);
        let parts = (1..=cols).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// True if `self ⊆ other` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        contains(self, other)
    }

    /// True if the box lies inside the diagram.
    pub fn has_box(&self, b: Box) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.get(b.row - 1)
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = Box> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Box::new(i + 1, j)))
    }

    /// Dominance order on partitions of the same weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.get(i);
            b += other.get(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Hook length `arm + leg + 1` of a box.
    pub fn hook(&self, b: Box) -> Result<usize> {
        let s = arm_leg(self, b)?;
        Ok(s.arm + s.leg + 1)
    }

    /// Comma separated parts, the empty string for the empty partition.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        const ZERO: usize = 0;
        self.parts.get(i).unwrap_or(&ZERO)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"2,1"`; the empty string (or `"0"`) gives the empty partition.
    /// Surrounding parentheses or brackets are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {:?} in {:?}", x, s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// A cell of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Box {
    pub row: usize,
    pub col: usize,
}

impl Box {
    pub fn new(row: usize, col: usize) -> Self {
        Box { row, col }
    }
}

impl fmt::Display for Box {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `inner ⊆ outer`.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && (0..inner.len()).all(|i| inner.get(i) <= outer.get(i))
}

/// Arm, leg and co-lengths of a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArmLeg {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

pub fn arm_leg(lambda: &Partition, b: Box) -> Result<ArmLeg> {
    if !lambda.has_box(b) {
        return Err(Error::Domain(format!("box {} outside {}", b, lambda)));
    }
    let arm = lambda.get(b.row - 1) - b.col;
    let leg = lambda.parts[b.row..].iter().filter(|&&p| p >= b.col).count();
    Ok(ArmLeg { arm, leg, coarm: b.col - 1, coleg: b.row - 1 })
}

/// A skew diagram `outer \ inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::Domain(format!("{} is not contained in {}", inner, outer)));
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
        self.outer.weight() - self.inner.weight()
    }

    /// Boxes of the skew diagram in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = Box> + '_ {
        (0..self.outer.len())
            .flat_map(move |i| (self.inner.get(i) + 1..=self.outer.get(i)).map(move |j| Box::new(i + 1, j)))
    }

    /// No two boxes share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|i| self.outer.get(i) <= self.inner.get(i - 1))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.outer, self.inner)
    }
}

/// A filling with weakly decreasing rows and strictly decreasing columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReverseTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    r: usize,
    /// `chain[k]` is the set of boxes with entry greater than `k`.
    chain: Vec<Partition>,
}

impl ReverseTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Largest admissible entry.
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, b: Box) -> usize {
        self.rows[b.row - 1][b.col - 1]
    }

    /// The partition `{b : T(b) > k}` for `0 ≤ k ≤ r`.
    pub fn sub_partition(&self, k: usize) -> &Partition {
        &self.chain[k]
    }
}

impl fmt::Display for ReverseTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

/// Partitions `mu` with `outer \ mu` a horizontal strip.
fn horizontal_strip_removals(outer: &Partition) -> Vec<Partition> {
    let l = outer.len();
    let mut out = Vec::new();
    let mut cur = vec![0usize; l];
    fn rec(i: usize, outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            out.push(Partition::new(cur.clone()).expect("interlacing"));
            return;
        }
        let lo = outer.get(i + 1);
        for v in (lo..=outer.get(i)).rev() {
            cur[i] = v;
            rec(i + 1, outer, cur, out);
        }
    }
    rec(0, outer, &mut cur, &mut out);
    out
}

/// All reverse tableaux of shape `lambda` with entries in `1..=r`.
///
/// Returns an empty list when `lambda` has more than `r` rows.
pub fn reverse_tableaux(lambda: &Partition, r: usize) -> Vec<ReverseTableau> {
    let mut out = Vec::new();
    if lambda.len() > r {
        return out;
    }
    let mut chain = vec![lambda.clone()];
    fn rec(r: usize, chain: &mut Vec<Partition>, out: &mut Vec<ReverseTableau>) {
        let k = chain.len() - 1;
        let top = chain[k].clone();
        if k == r {
            if top.is_empty() {
                out.push(build_tableau(chain, r));
            }
            return;
        }
        for next in horizontal_strip_removals(&top) {
            // rows left must fit the remaining entries
            if next.len() > r - k - 1 {
                continue;
            }
            chain.push(next);
            rec(r, chain, out);
            chain.pop();
        }
    }
    rec(r, &mut chain, &mut out);
    out
}

fn build_tableau(chain: &[Partition], r: usize) -> ReverseTableau {
    let shape = chain[0].clone();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    for k in 1..=r {
        let sk = SkewShape { outer: chain[k - 1].clone(), inner: chain[k].clone() };
        for b in sk.boxes() {
            rows[b.row - 1][b.col - 1] = k;
        }
    }
    ReverseTableau { shape, rows, r, chain: chain.to_vec() }
}

/// Boxes of `outer` lying in a row that meets `outer \ inner` but in no
/// column that meets it.
pub fn rc_set(outer: &Partition, inner: &Partition) -> Result<BTreeSet<Box>> {
    let skew = SkewShape::new(outer.clone(), inner.clone())?;
    let rows: BTreeSet<usize> = skew.boxes().map(|b| b.row).collect();
    let cols: BTreeSet<usize> = skew.boxes().map(|b| b.col).collect();
    Ok(outer.boxes().filter(|b| rows.contains(&b.row) && !cols.contains(&b.col)).collect())
}

/// Partitions of `n` with at most `max_length` parts, lexicographically
/// decreasing.
pub fn partitions_of(n: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, n, max_length, &mut cur, &mut out);
    out
}

/// Partitions of weight at most `max_weight` and length at most
/// `max_length`, ordered by weight and then lexicographically decreasing.
pub fn enumerate_partitions(max_weight: usize, max_length: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(|n| partitions_of(n, max_length)).collect()
}

/// Partitions contained in `outer`, in the same order as
/// [`enumerate_partitions`].
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    enumerate_partitions(outer.weight(), outer.len().max(1)).into_iter().filter(|p| contains(p, outer)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleMode {
    /// Every part doubled.
    Stretch,
    /// Every part repeated twice.
    Duplicate,
}

pub fn double(lambda: &Partition, mode: DoubleMode) -> Partition {
    let parts = match mode {
        DoubleMode::Stretch => lambda.parts.iter().map(|p| 2 * p).collect(),
        DoubleMode::Duplicate => lambda.parts.iter().flat_map(|&p| [p, p]).collect(),
    };
    Partition { parts }
}
