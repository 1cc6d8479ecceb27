use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::group::SymGroup;
use super::partition::{Composition, Partition};
use crate::error::{Error, Result};

/// Permutation of `1..=n` in one-line notation. Products are composition
/// of functions: `(u * v)(i) = u(v(i))`, so right multiplication by `s_i`
/// swaps the entries in positions `i`, `i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetMode {
    Min,
    Max,
}

/// `Right` is `w S_I` (the subgroup permutes positions), `Left` is `S_I w`
/// (it permutes values).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetSide {
    Left,
    Right,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation: {word:?}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        Self(word)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// The longest element `[n, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    /// Simple transposition `s_i` (1-based) in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.0.swap(i - 1, i);
        w
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.0.swap(i - 1, j - 1);
        w
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    /// `self * s_i`: swaps positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.0.swap(i - 1, i);
        w
    }

    /// `s_i * self`: swaps values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        Self(
            self.0
                .iter()
                .map(|&x| {
                    if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// Values `i` such that `i+1` is left of `i`.
    pub fn recoils(&self) -> BTreeSet<usize> {
        self.inverse().descents()
    }

    /// Reduced word `[i_1, ..., i_k]` with `self = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut word = Vec::new();
        loop {
            match (1..w.len()).rev().find(|&i| w[i - 1] > w[i]) {
                Some(i) => {
                    w.swap(i - 1, i);
                    word.push(i);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    /// Reduced word built from bubble sort of the values instead of the
    /// positions; generally differs from [`Permutation::reduced_word`].
    pub fn reduced_word_alt(&self) -> Vec<usize> {
        let mut word = self.inverse().reduced_word();
        word.reverse();
        word
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] - 1;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle lengths")
    }

    /// True when `self` lies in the Young subgroup `S_I`.
    pub fn in_young_subgroup(&self, comp: &Composition) -> bool {
        let blocks = comp.block_of();
        self.0
            .iter()
            .enumerate()
            .all(|(i, &x)| blocks[i] == blocks[x - 1])
    }

    /// Cuts the word into blocks of sizes `I` and standardizes each block; the
    /// result acts blockwise on `1..=n`.
    pub fn project(&self, comp: &Composition) -> Result<Permutation> {
        if comp.size() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "composition {comp:?} does not compose {}",
                self.n()
            )));
        }
        let offs = comp.offsets();
        let mut out = Vec::with_capacity(self.n());
        for b in 0..comp.len() {
            let block = &self.0[offs[b]..offs[b + 1]];
            for &x in block {
                let rank = block.iter().filter(|&&y| y < x).count();
                out.push(offs[b] + rank + 1);
            }
        }
        Ok(Self(out))
    }

    /// The blockwise projection as separate permutations.
    pub fn project_blocks(&self, comp: &Composition) -> Result<Vec<Permutation>> {
        let p = self.project(comp)?;
        let offs = comp.offsets();
        Ok((0..comp.len())
            .map(|b| {
                Self(
                    p.0[offs[b]..offs[b + 1]]
                        .iter()
                        .map(|x| x - offs[b])
                        .collect(),
                )
            })
            .collect())
    }

    /// Direct product: blocks placed on consecutive values.
    pub fn direct_product(blocks: &[Permutation]) -> Self {
        let mut out = Vec::new();
        let mut off = 0;
        for b in blocks {
            out.extend(b.0.iter().map(|x| x + off));
            off += b.n();
        }
        Self(out)
    }
}

/// The permutation `w_I` whose `T`-element is `zeta_I`: on each block of
/// size `k` at offset `o` it reads `[o+k, o+1, ..., o+k-1]`.
pub fn zeta_permutation(comp: &Composition) -> Permutation {
    let mut out = Vec::with_capacity(comp.size());
    let mut off = 0;
    for &k in comp.iter() {
        out.push(off + k);
        out.extend(off + 1..off + k);
        off += k;
    }
    Permutation(out)
}

/// Longest element of the Young subgroup.
pub fn longest_in_young(comp: &Composition) -> Permutation {
    let mut out = Vec::with_capacity(comp.size());
    let mut off = 0;
    for &k in comp.iter() {
        out.extend((off + 1..=off + k).rev());
        off += k;
    }
    Permutation(out)
}

/// Distinguished coset representatives of `S_n / S_I` (right) or
/// `S_I \ S_n` (left), in lexicographic order.
pub fn coset_representatives(
    n: usize,
    comp: &Composition,
    mode: CosetMode,
    side: CosetSide,
) -> Vec<Permutation> {
    assert_eq!(comp.size(), n, "composition must compose n");
    let g = SymGroup::get(n);
    let blocks = comp.block_of();
    let keep = |w: &[u8]| -> bool {
        let ordered = |a: usize, b: usize| match mode {
            CosetMode::Min => a < b,
            CosetMode::Max => a > b,
        };
        match side {
            CosetSide::Right => (1..n)
                .all(|i| blocks[i - 1] != blocks[i] || ordered(w[i - 1] as usize, w[i] as usize)),
            CosetSide::Left => {
                let mut pos = vec![0usize; n + 1];
                for (i, &x) in w.iter().enumerate() {
                    pos[x as usize] = i;
                }
                (1..n).all(|v| blocks[v - 1] != blocks[v] || ordered(pos[v], pos[v + 1]))
            }
        }
    };
    (0..g.order())
        .filter(|&r| keep(g.word(r)))
        .map(|r| g.perm(r))
        .collect()
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Permutation {
    /// `[3,1,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;
    /// `"[3,1,2]"`, `"3,1,2"` or `"312"` (single digits).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let bad = || Error::InvalidArgument(format!("bad permutation {s:?}"));
        let word: Vec<usize> = if t.contains([',', ' ']) {
            t.split([',', ' '])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_permutation(&c("324")), w("[3,1,2,5,4,9,6,7,8]"));
        assert_eq!(zeta_permutation(&c("111")), Permutation::identity(3));
        assert_eq!(zeta_permutation(&c("4")), w("4123"));
        assert_eq!(zeta_permutation(&c("324")).cycle_type().to_string(), "432");
    }

    #[test]
    fn recoils_and_descents() {
        assert_eq!(
            w("2413").recoils().into_iter().collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert!(Permutation::identity(4).recoils().is_empty());
        assert_eq!(Permutation::longest(4).recoils().len(), 3);
        assert_eq!(
            w("2413").descents().into_iter().collect::<Vec<_>>(),
            vec![2]
        );
    }

    #[test]
    fn reduced_words_multiply_back() {
        let g = SymGroup::get(5);
        for r in 0..g.order() {
            let p = g.perm(r);
            for word in [p.reduced_word(), p.reduced_word_alt()] {
                assert_eq!(word.len(), p.length());
                let mut acc = Permutation::identity(5);
                for &i in &word {
                    acc = acc.mul_simple_right(i);
                }
                assert_eq!(acc, p);
            }
        }
    }

    #[test]
    fn projection() {
        let p = w("[7,5,4,6,3,1,2]").project(&c("43")).unwrap();
        assert_eq!(p, w("[4,2,1,3,7,5,6]"));
        let blocks = w("[4,2,1,3,7,5,6]").project_blocks(&c("43")).unwrap();
        assert_eq!(blocks, vec![w("4213"), w("312")]);
        assert_eq!(
            Permutation::identity(5).project(&c("23")).unwrap(),
            Permutation::identity(5)
        );
    }

    #[test]
    fn cosets() {
        let reps = coset_representatives(4, &c("22"), CosetMode::Min, CosetSide::Right);
        assert_eq!(reps.len(), 6);
        let maxes = coset_representatives(4, &c("22"), CosetMode::Max, CosetSide::Right);
        assert!(maxes.contains(&w("2143")));
        assert_eq!(
            coset_representatives(5, &c("32"), CosetMode::Min, CosetSide::Right).len(),
            10
        );
        let left = coset_representatives(5, &c("32"), CosetMode::Max, CosetSide::Left);
        assert_eq!(left.len(), 10);
        assert!(left.contains(&w("32154")));
        assert!(left.contains(&w("54321")));
    }
}
