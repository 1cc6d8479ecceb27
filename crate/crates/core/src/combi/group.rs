use std::sync::OnceLock;

use super::perm::Permutation;

/// Largest `n` with precomputed tables.
pub const MAX_N: usize = 8;

/// Index tables for `S_n`. Permutations are numbered by lexicographic rank
/// of their one-line words (the Lehmer rank), so rank 0 is the identity.
pub struct SymGroup {
    n: usize,
    words: Vec<u8>,
    length: Vec<u8>,
    inverse: Vec<u32>,
    /// `right[i - 1][w]` = rank of `w s_i`.
    right: Vec<Vec<u32>>,
    /// `left[i - 1][w]` = rank of `s_i w`.
    left: Vec<Vec<u32>>,
    /// Last right descent of `w` (0 for the identity); `w = parent * s_i`.
    last_descent: Vec<u8>,
    factorial: Vec<usize>,
}

static GROUPS: [OnceLock<SymGroup>; MAX_N + 1] = [const { OnceLock::new() }; MAX_N + 1];

impl SymGroup {
    /// Shared tables for `S_n`, built on first use.
    pub fn get(n: usize) -> &'static SymGroup {
        assert!(n <= MAX_N, "n = {n} exceeds the supported maximum {MAX_N}");
        GROUPS[n].get_or_init(|| SymGroup::build(n))
    }

    fn build(n: usize) -> Self {
        let mut factorial = vec![1usize; n + 1];
        for k in 1..=n {
            factorial[k] = factorial[k - 1] * k;
        }
        let order = factorial[n];
        let mut words = Vec::with_capacity(order * n);
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            words.extend_from_slice(&cur);
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let mut g = SymGroup {
            n,
            words,
            length: Vec::new(),
            inverse: Vec::new(),
            right: Vec::new(),
            left: Vec::new(),
            last_descent: Vec::new(),
            factorial,
        };
        let mut length = Vec::with_capacity(order);
        let mut inverse = Vec::with_capacity(order);
        let mut last_descent = Vec::with_capacity(order);
        let mut right = vec![Vec::with_capacity(order); n.saturating_sub(1)];
        let mut left = vec![Vec::with_capacity(order); n.saturating_sub(1)];
        let mut buf = vec![0u8; n];
        for r in 0..order {
            let w = g.word(r);
            let mut inv = 0u8;
            for i in 0..n {
                for j in i + 1..n {
                    if w[i] > w[j] {
                        inv += 1;
                    }
                }
            }
            length.push(inv);
            last_descent.push((1..n).rev().find(|&i| w[i - 1] > w[i]).unwrap_or(0) as u8);
            for (i, &x) in w.iter().enumerate() {
                buf[x as usize - 1] = i as u8 + 1;
            }
            inverse.push(g.rank(&buf) as u32);
            for i in 1..n {
                buf.copy_from_slice(w);
                buf.swap(i - 1, i);
                right[i - 1].push(g.rank(&buf) as u32);
                buf.copy_from_slice(w);
                for x in buf.iter_mut() {
                    if *x as usize == i {
                        *x = i as u8 + 1;
                    } else if *x as usize == i + 1 {
                        *x = i as u8;
                    }
                }
                left[i - 1].push(g.rank(&buf) as u32);
            }
        }
        g.length = length;
        g.inverse = inverse;
        g.right = right;
        g.left = left;
        g.last_descent = last_descent;
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.factorial[self.n]
    }

    /// One-line word of rank `r`.
    pub fn word(&self, r: usize) -> &[u8] {
        &self.words[r * self.n..(r + 1) * self.n]
    }

    pub fn perm(&self, r: usize) -> Permutation {
        Permutation::from_vec_unchecked(self.word(r).iter().map(|&x| x as usize).collect())
    }

    /// Lehmer rank of a one-line word with values `1..=n`.
    pub fn rank(&self, w: &[u8]) -> usize {
        let n = self.n;
        let mut r = 0;
        for i in 0..n {
            let smaller = w[i + 1..].iter().filter(|&&y| y < w[i]).count();
            r += smaller * self.factorial[n - 1 - i];
        }
        r
    }

    pub fn rank_of(&self, p: &Permutation) -> usize {
        assert_eq!(p.n(), self.n, "permutation size mismatch");
        let w: Vec<u8> = p.word().iter().map(|&x| x as u8).collect();
        self.rank(&w)
    }

    pub fn length(&self, r: usize) -> usize {
        self.length[r] as usize
    }

    pub fn inverse(&self, r: usize) -> usize {
        self.inverse[r] as usize
    }

    /// Rank of `w s_i`.
    pub fn right_mul(&self, r: usize, i: usize) -> usize {
        self.right[i - 1][r] as usize
    }

    /// Rank of `s_i w`.
    pub fn left_mul(&self, r: usize, i: usize) -> usize {
        self.left[i - 1][r] as usize
    }

    pub fn right_table(&self, i: usize) -> &[u32] {
        &self.right[i - 1]
    }

    pub fn left_table(&self, i: usize) -> &[u32] {
        &self.left[i - 1]
    }

    /// `(parent, i)` with `w = parent * s_i` and `l(parent) = l(w) - 1`.
    pub fn parent(&self, r: usize) -> Option<(usize, usize)> {
        match self.last_descent[r] as usize {
            0 => None,
            i => Some((self.right_mul(r, i), i)),
        }
    }

    /// `w s_i > w`.
    pub fn is_right_ascent(&self, r: usize, i: usize) -> bool {
        let w = self.word(r);
        w[i - 1] < w[i]
    }

    /// `s_i w > w`, i.e. `i` is not a recoil.
    pub fn is_left_ascent(&self, r: usize, i: usize) -> bool {
        self.length[self.left_mul(r, i)] > self.length[r]
    }

    /// Ranks ordered so that every permutation comes after its parent.
    pub fn by_length(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).collect();
        v.sort_by_key(|&r| self.length[r]);
        v
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for n in 0..=5 {
            let g = SymGroup::get(n);
            assert_eq!(g.order(), (1..=n).product::<usize>());
            for r in 0..g.order() {
                let p = g.perm(r);
                assert_eq!(g.rank_of(&p), r);
                assert_eq!(g.length(r), p.length());
                assert_eq!(g.perm(g.inverse(r)), p.inverse());
                for i in 1..n {
                    assert_eq!(g.perm(g.right_mul(r, i)), p.mul_simple_right(i));
                    assert_eq!(g.perm(g.left_mul(r, i)), p.mul_simple_left(i));
                }
                if let Some((par, i)) = g.parent(r) {
                    assert_eq!(g.length(par) + 1, g.length(r));
                    assert_eq!(g.right_mul(par, i), r);
                } else {
                    assert_eq!(r, 0);
                }
            }
        }
    }
}
