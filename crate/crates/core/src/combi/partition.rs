use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition with zero part: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts of a composition.
    pub fn from_composition(c: &Composition) -> Self {
        let mut parts = c.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                out.push(len - c + conj.0[c] - r - 1);
            }
        }
        out
    }

    /// Contents `column - row`, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                out.push(c as i64 - r as i64);
            }
        }
        out
    }

    /// Multiplicity vector `m[i]` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation of this cycle type.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        for (i, &a) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=a {
                z *= (i as u128) * (k as u128);
            }
        }
        z
    }

    /// Parts decreased by one, zeros dropped.
    pub fn natural(&self) -> Partition {
        Partition(self.0.iter().filter(|&&p| p > 1).map(|p| p - 1).collect())
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            conjugate: self.conjugate(),
            hooks: self.hooks(),
            contents: self.contents(),
            z: self.z(),
            natural: self.natural(),
        }
    }

    /// Dominance order `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub conjugate: Partition,
    pub hooks: Vec<usize>,
    pub contents: Vec<i64>,
    pub z: u128,
    pub natural: Partition,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "composition with zero part: {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_composition(self)
    }

    /// Block boundaries `0 = b_0 < b_1 < ... < b_r = n`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for &p in &self.0 {
            out.push(out.last().unwrap() + p);
        }
        out
    }

    /// Generators `s_i` (1-based) inside the Young subgroup: every `i` that is
    /// not a partial sum.
    pub fn generators(&self) -> Vec<usize> {
        let offs = self.offsets();
        let n = self.size();
        (1..n).filter(|i| !offs.contains(i)).collect()
    }

    /// Block index of each position (0-based positions).
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for (b, &p) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(b, p));
        }
        out
    }

    /// True when `self` is obtained by splitting parts of `coarser`.
    pub fn is_finer_than(&self, coarser: &Composition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        let mine = self.offsets();
        coarser.offsets().iter().all(|o| mine.contains(o))
    }

    /// All compositions finer than `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = compositions(p);
            let mut next = Vec::with_capacity(out.len() * pieces.len());
            for prefix in &out {
                for piece in &pieces {
                    let mut v: Vec<usize> = prefix.clone();
                    v.extend_from_slice(&piece.0);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(Composition).collect()
    }
}

impl Deref for Partition {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl Deref for Composition {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Composition {
        Composition(p.0)
    }
}

fn label(parts: &[usize]) -> String {
    if parts.iter().all(|&p| p < 10) {
        parts.iter().map(|p| p.to_string()).collect()
    } else {
        parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn parse_label(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    let bad = || Error::InvalidArgument(format!("bad partition label {s:?}"));
    if s.contains(['.', ',', ' ']) {
        s.split(['.', ',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label(&self.0))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    /// `"311"`, `"3.1.1"` or `"[3,1,1]"`.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_label(s)?)
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_label(s)?)
    }
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` in decreasing lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in (1..=rest).rev() {
            prefix.push(p);
            rec(rest - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    } else {
        out.push(Composition(Vec::new()));
    }
    out
}

/// Index of `lambda` in `partitions(n)`.
pub fn partition_index(lambda: &Partition) -> usize {
    partitions(lambda.size())
        .iter()
        .position(|p| p == lambda)
        .expect("partition of n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_order() {
        let names: Vec<String> = partitions(5).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["5", "41", "32", "311", "221", "2111", "11111"]);
        let names: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["4", "31", "22", "211", "1111"]);
        assert_eq!(partitions(1).len(), 1);
        assert_eq!(partitions(8).len(), 22);
    }

    #[test]
    fn statistics() {
        let s = p("4").stats();
        assert_eq!(s.contents, vec![0, 1, 2, 3]);
        assert_eq!(s.hooks, vec![4, 3, 2, 1]);
        let s = p("31").stats();
        let mut hooks = s.hooks.clone();
        hooks.sort();
        assert_eq!(hooks, vec![1, 1, 2, 4]);
        assert_eq!(s.contents.iter().sum::<i64>(), 2);
        let s = p("1").stats();
        assert_eq!(
            (s.conjugate, s.z, s.hooks, s.contents),
            (p("1"), 1, vec![1], vec![0])
        );
        assert_eq!(p("2211").z(), 2 * 2 * 2 * 2);
        assert_eq!(p("321").conjugate(), p("321"));
        assert_eq!(p("41").conjugate(), p("2111"));
        assert_eq!(p("3221").natural(), p("211"));
    }

    #[test]
    fn composition_helpers() {
        let c: Composition = "324".parse().unwrap();
        assert_eq!(c.generators(), vec![1, 2, 4, 6, 7, 8]);
        assert_eq!(c.offsets(), vec![0, 3, 5, 9]);
        let j: Composition = "22".parse().unwrap();
        let refs: Vec<String> = j.refinements().iter().map(|c| c.to_string()).collect();
        assert_eq!(refs, ["22", "211", "112", "1111"]);
        assert!("211".parse::<Composition>().unwrap().is_finer_than(&j));
        assert!(!"121".parse::<Composition>().unwrap().is_finer_than(&j));
        assert_eq!(compositions(4).len(), 8);
    }

    #[test]
    fn labels_round_trip() {
        let q: Partition = serde_json::from_str("[3,1,1]").unwrap();
        assert_eq!(q, p("311"));
        assert_eq!(serde_json::to_string(&q).unwrap(), "[3,1,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert_eq!("[1,10]".parse::<Composition>().unwrap().to_string(), "1.10");
    }
}
