use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::coeff::{pretty, Coeff, Rational};
use crate::combi::{Composition, Permutation, SymGroup};
use crate::error::{Error, Result};

/// Element `sum_w c_w T_w` of the Hecke algebra `H_n`, stored densely by
/// permutation rank (see [`SymGroup`]).
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    coeffs: Vec<Coeff>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        let g = SymGroup::get(n);
        Self {
            n,
            coeffs: vec![Coeff::zero(); g.order()],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis_rank(n, 0)
    }

    pub fn scalar(n: usize, c: Coeff) -> Self {
        let mut h = Self::zero(n);
        h.coeffs[0] = c;
        h
    }

    pub fn basis_rank(n: usize, r: usize) -> Self {
        let mut h = Self::zero(n);
        h.coeffs[r] = Coeff::one();
        h
    }

    /// `T_w`.
    pub fn basis(w: &Permutation) -> Self {
        let g = SymGroup::get(w.n());
        Self::basis_rank(w.n(), g.rank_of(w))
    }

    /// The generator `T_i`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(&Permutation::simple(n, i))
    }

    /// `T_{i_1} T_{i_2} ...`.
    pub fn word(n: usize, word: &[usize]) -> Self {
        let mut h = Self::one(n);
        for &i in word {
            h = h.mul_generator_right(i);
        }
        h
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Coeff)>>(
        n: usize,
        terms: I,
    ) -> Result<Self> {
        let g = SymGroup::get(n);
        let mut h = Self::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::InvalidArgument(format!(
                    "permutation {w} is not in S_{n}"
                )));
            }
            h.coeffs[g.rank_of(&w)] += &c;
        }
        Ok(h)
    }

    pub(crate) fn from_dense(n: usize, coeffs: Vec<Coeff>) -> Self {
        debug_assert_eq!(coeffs.len(), SymGroup::get(n).order());
        Self { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dense(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, w: &Permutation) -> &Coeff {
        &self.coeffs[SymGroup::get(self.n).rank_of(w)]
    }

    pub fn coeff_rank(&self, r: usize) -> &Coeff {
        &self.coeffs[r]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero terms `(rank, coefficient)` in rank order.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Coeff)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Nonzero terms keyed by permutation, in lexicographic order.
    pub fn terms(&self) -> Vec<(Permutation, Coeff)> {
        let g = SymGroup::get(self.n);
        self.support()
            .map(|(r, c)| (g.perm(r), c.clone()))
            .collect()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Self {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|x| if x.is_zero() { Coeff::zero() } else { x * c })
                .collect(),
        }
    }

    /// `self * T_i`.
    pub fn mul_generator_right(&self, i: usize) -> Self {
        let g = SymGroup::get(self.n);
        Self {
            n: self.n,
            coeffs: mul_gen_right(g, &self.coeffs, i),
        }
    }

    /// `T_i * self`.
    pub fn mul_generator_left(&self, i: usize) -> Self {
        let g = SymGroup::get(self.n);
        Self {
            n: self.n,
            coeffs: mul_gen_left(g, &self.coeffs, i),
        }
    }

    /// `T_i * self * T_i`.
    pub fn conjugate_generator(&self, i: usize) -> Self {
        let g = SymGroup::get(self.n);
        Self {
            n: self.n,
            coeffs: mul_gen_right(g, &mul_gen_left(g, &self.coeffs, i), i),
        }
    }

    /// The anti-automorphism `T_w -> T_{w^-1}`.
    pub fn anti_involution(&self) -> Self {
        let g = SymGroup::get(self.n);
        let mut coeffs = vec![Coeff::zero(); self.coeffs.len()];
        for (r, c) in self.support() {
            coeffs[g.inverse(r)] = c.clone();
        }
        Self { n: self.n, coeffs }
    }

    /// `(a, b) = sum_w a_w b_w`.
    pub fn scalar_product(&self, other: &Self) -> Coeff {
        assert_eq!(self.n, other.n, "elements of different Hecke algebras");
        let mut acc = Coeff::zero();
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn commutes_with_generators(&self) -> bool {
        (1..self.n).all(|i| self.mul_generator_right(i) == self.mul_generator_left(i))
    }

    /// True iff `h T_i = T_i h` for every generator.
    pub fn is_central(&self) -> bool {
        self.commutes_with_generators()
    }

    /// True when every permutation in the support lies in `S_I`.
    pub fn in_young_subalgebra(&self, comp: &Composition) -> bool {
        let g = SymGroup::get(self.n);
        self.support()
            .all(|(r, _)| g.perm(r).in_young_subgroup(comp))
    }

    /// Exact specialization of every coefficient at `q = q0`.
    pub fn evaluate(&self, q0: &Rational) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Ok(Coeff::zero())
                } else {
                    c.evaluate(q0).map(Coeff::from_rational)
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self { n: self.n, coeffs })
    }

    /// Product `self * rhs`.
    pub fn mul_element(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "elements of different Hecke algebras");
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.n);
        }
        // Expand along the sparser factor; a*b = iota(iota(b) * iota(a)).
        if self.nnz() < rhs.nnz() {
            return rhs
                .anti_involution()
                .mul_expand_right(&self.anti_involution())
                .anti_involution();
        }
        self.mul_expand_right(rhs)
    }

    /// `sum_v b_v (self T_v)`, computing `self T_v` along the tree of
    /// reduced words restricted to the ancestors of the support of `b`.
    fn mul_expand_right(&self, rhs: &Self) -> Self {
        let g = SymGroup::get(self.n);
        let order = g.order();
        let mut needed = vec![false; order];
        for (r, _) in rhs.support() {
            let mut v = r;
            while !needed[v] {
                needed[v] = true;
                match g.parent(v) {
                    Some((p, _)) => v = p,
                    None => break,
                }
            }
        }
        let mut children: Vec<Vec<(usize, usize)>> = vec![Vec::new(); order];
        for v in 0..order {
            if needed[v] {
                if let Some((p, i)) = g.parent(v) {
                    children[p].push((v, i));
                }
            }
        }
        let mut out = vec![Coeff::zero(); order];
        let mut stack: Vec<(usize, Vec<Coeff>)> = vec![(0, self.coeffs.clone())];
        while let Some((v, x)) = stack.pop() {
            let c = &rhs.coeffs[v];
            if !c.is_zero() {
                add_scaled(&mut out, &x, c);
            }
            for &(child, i) in &children[v] {
                stack.push((child, mul_gen_right(g, &x, i)));
            }
        }
        Self {
            n: self.n,
            coeffs: out,
        }
    }

    /// Direct product of elements of `H_{k_1} x H_{k_2} x ...` inside `H_n`.
    pub fn direct_product(blocks: &[HeckeElement]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let g = SymGroup::get(n);
        let mut terms: Vec<(Vec<usize>, Coeff)> = vec![(Vec::new(), Coeff::one())];
        for b in blocks {
            let off = terms.first().map(|t| t.0.len()).unwrap_or(0);
            let gb = SymGroup::get(b.n);
            let mut next = Vec::new();
            for (w, c) in &terms {
                for (r, cb) in b.support() {
                    let mut word = w.clone();
                    word.extend(gb.word(r).iter().map(|&x| x as usize + off));
                    next.push((word, c * cb));
                }
            }
            terms = next;
        }
        let mut out = Self::zero(n);
        for (w, c) in terms {
            let w8: Vec<u8> = w.iter().map(|&x| x as u8).collect();
            out.coeffs[g.rank(&w8)] += &c;
        }
        out
    }

    pub fn pretty(&self) -> String {
        let g = SymGroup::get(self.n);
        let terms: Vec<String> = self
            .support()
            .map(|(r, c)| format!("({})*T{}", pretty(c), g.perm(r)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub(crate) fn add_scaled(out: &mut [Coeff], x: &[Coeff], c: &Coeff) {
    let unit = c.is_one();
    for (o, v) in out.iter_mut().zip(x) {
        if v.is_zero() {
            continue;
        }
        if unit {
            *o += v;
        } else {
            *o += &(v * c);
        }
    }
}

/// Right multiplication by `T_i`: `(x T_i)_u = x_{u s_i} + [u s_i < u] Q x_u`.
pub(crate) fn mul_gen_right(g: &SymGroup, x: &[Coeff], i: usize) -> Vec<Coeff> {
    let table = g.right_table(i);
    let mut out = Vec::with_capacity(x.len());
    for u in 0..x.len() {
        let swapped = &x[table[u] as usize];
        if g.is_right_ascent(u, i) || x[u].is_zero() {
            out.push(swapped.clone());
        } else {
            let mut v = x[u].mul_big_q();
            v += swapped;
            out.push(v);
        }
    }
    out
}

/// Left multiplication by `T_i`: `(T_i x)_u = x_{s_i u} + [s_i u < u] Q x_u`.
pub(crate) fn mul_gen_left(g: &SymGroup, x: &[Coeff], i: usize) -> Vec<Coeff> {
    let table = g.left_table(i);
    let mut out = Vec::with_capacity(x.len());
    for u in 0..x.len() {
        let swapped = &x[table[u] as usize];
        if x[u].is_zero() || g.length(table[u] as usize) > g.length(u) {
            out.push(swapped.clone());
        } else {
            let mut v = x[u].mul_big_q();
            v += swapped;
            out.push(v);
        }
    }
    out
}

impl fmt::Display for HeckeElement {
    /// Canonical form `(c)*T[w] + ...` in rank order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = SymGroup::get(self.n);
        let mut first = true;
        for (r, c) in self.support() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*T{}", g.perm(r))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'b> AddAssign<&'b HeckeElement> for HeckeElement {
    fn add_assign(&mut self, rhs: &'b HeckeElement) {
        assert_eq!(self.n, rhs.n, "elements of different Hecke algebras");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl<'b> SubAssign<&'b HeckeElement> for HeckeElement {
    fn sub_assign(&mut self, rhs: &'b HeckeElement) {
        assert_eq!(self.n, rhs.n, "elements of different Hecke algebras");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'b> Add<&'b HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &'b HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &'b HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &'b HeckeElement) -> HeckeElement {
        self.mul_element(rhs)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<HeckeElement> for HeckeElement {
            type Output = HeckeElement;
            fn $m(self, rhs: HeckeElement) -> HeckeElement {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b HeckeElement> for HeckeElement {
            type Output = HeckeElement;
            fn $m(self, rhs: &'b HeckeElement) -> HeckeElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let t1 = HeckeElement::generator(3, 1);
        let sq = &t1 * &t1;
        let expected = &t1.scale(&Coeff::big_q()) + &HeckeElement::one(3);
        assert_eq!(sq, expected);
    }

    #[test]
    fn braid_relation() {
        let a = HeckeElement::word(4, &[1, 2, 1]);
        let b = HeckeElement::word(4, &[2, 1, 2]);
        assert_eq!(a, b);
        assert_eq!(a, HeckeElement::basis(&perm("3214")));
    }

    #[test]
    fn reordered_zeta_factors() {
        let a = HeckeElement::word(8, &[7, 6, 4, 2, 1]);
        let b = HeckeElement::word(8, &[2, 1, 4, 7, 6]);
        assert_eq!(a, b);
        assert_eq!(a, HeckeElement::basis(&perm("[3,1,2,5,4,8,6,7]")));
    }

    #[test]
    fn general_product_matches_generator_chains() {
        let x = &HeckeElement::word(4, &[1, 2])
            + &HeckeElement::word(4, &[3, 1]).scale(&Coeff::q_pow(2));
        let y =
            &HeckeElement::word(4, &[2, 3, 2]) + &HeckeElement::one(4).scale(&Coeff::from_int(5));
        let mut chain = x.clone();
        for i in [2, 3, 2] {
            chain = chain.mul_generator_right(i);
        }
        let expected = &chain + &x.scale(&Coeff::from_int(5));
        assert_eq!(&x * &y, expected);
        assert_eq!(
            (&y * &x).anti_involution(),
            &x.anti_involution() * &y.anti_involution()
        );
    }

    #[test]
    fn left_generator_matches_product() {
        let x = &HeckeElement::word(4, &[1, 2, 3]) + &HeckeElement::word(4, &[2]);
        for i in 1..4 {
            assert_eq!(x.mul_generator_left(i), &HeckeElement::generator(4, i) * &x);
        }
    }

    #[test]
    fn direct_products() {
        let a = HeckeElement::word(3, &[2, 1]);
        let b = &HeckeElement::generator(2, 1) + &HeckeElement::one(2);
        let d = HeckeElement::direct_product(&[a, b]);
        let expected = &HeckeElement::word(5, &[2, 1])
            * &(&HeckeElement::generator(5, 4) + &HeckeElement::one(5));
        assert_eq!(d, expected);
    }
}
