use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::HeckeElement;
use crate::combi::Composition;

/// Polynomial in `z_1, ..., z_r` with coefficients in `H_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ZHeckeElement {
    n: usize,
    r: usize,
    terms: BTreeMap<Vec<usize>, HeckeElement>,
}

impl ZHeckeElement {
    pub fn zero(n: usize, r: usize) -> Self {
        Self {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variables(&self) -> usize {
        self.r
    }

    pub fn add_term(&mut self, exps: Vec<usize>, h: &HeckeElement) {
        assert_eq!(exps.len(), self.r, "exponent vector length");
        let slot = self
            .terms
            .entry(exps)
            .or_insert_with(|| HeckeElement::zero(self.n));
        *slot += h;
        self.terms.retain(|_, v| !v.is_zero());
    }

    /// Coefficient of `z^exps`.
    pub fn coeff(&self, exps: &[usize]) -> HeckeElement {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| HeckeElement::zero(self.n))
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, HeckeElement> {
        &self.terms
    }

    /// `a * self`, coefficientwise.
    pub fn left_mul(&self, a: &HeckeElement) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (e, h) in &self.terms {
            out.add_term(e.clone(), &(a * h));
        }
        out
    }
}

impl fmt::Debug for ZHeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, h) in &self.terms {
            writeln!(f, "z^{e:?}: {h}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratingKind {
    /// `(1 + z T_1)(1 + z T_2 T_1) ... (1 + z T_{k-1} ... T_1)`.
    T,
    /// `(1 + z xi_2)(1 + z xi_3) ... (1 + z xi_k)`.
    Xi,
}

/// Degree-indexed coefficients of the single-block product.
fn block_product(n: usize, offset: usize, k: usize, kind: GeneratingKind) -> Vec<HeckeElement> {
    let mut poly = vec![HeckeElement::one(n)];
    for m in 2..=k {
        let factor = match kind {
            GeneratingKind::T => {
                let word: Vec<usize> = (1..m).rev().map(|i| i + offset).collect();
                HeckeElement::word(n, &word)
            }
            GeneratingKind::Xi => {
                let word: Vec<usize> = (1..m).rev().chain(1..m).map(|i| i + offset).collect();
                HeckeElement::word(n, &word)
            }
        };
        let mut next = poly.clone();
        next.push(HeckeElement::zero(n));
        for d in 1..next.len() {
            let shifted = &poly[d - 1] * &factor;
            next[d] += &shifted;
        }
        poly = next;
    }
    poly
}

/// `E_J(z_1, ..., z_r)` or `E^xi_J(z)`: per-block products with one
/// variable per block.
pub fn e_generating_product(comp: &Composition, kind: GeneratingKind) -> ZHeckeElement {
    let n = comp.size();
    let mut terms: Vec<(Vec<usize>, HeckeElement)> = vec![(Vec::new(), HeckeElement::one(n))];
    for (&k, &off) in comp.iter().zip(&comp.offsets()) {
        let block = block_product(n, off, k, kind);
        let mut next = Vec::new();
        for (e, h) in &terms {
            for (d, b) in block.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut e2 = e.clone();
                e2.push(d);
                next.push((e2, h * b));
            }
        }
        terms = next;
    }
    let mut out = ZHeckeElement::zero(n, comp.len());
    for (e, h) in terms {
        out.add_term(e, &h);
    }
    out
}

#[cfg(test)]
fn xi_block_matches(n: usize) -> bool {
    use super::special::{jm_element, JmKind};
    let single = e_generating_product(&Composition::new(vec![n]).unwrap(), GeneratingKind::Xi);
    let mut expected = vec![HeckeElement::one(n)];
    for m in 2..=n {
        let x = jm_element(JmKind::Xi, m, n).unwrap();
        let mut next = expected.clone();
        next.push(HeckeElement::zero(n));
        for d in 1..next.len() {
            let add = &expected[d - 1] * &x;
            next[d] += &add;
        }
        expected = next;
    }
    expected
        .iter()
        .enumerate()
        .all(|(d, h)| single.coeff(&[d]) == *h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combi::longest_in_young;

    #[test]
    fn xi_product_agrees_with_jm_elements() {
        assert!(xi_block_matches(4));
    }

    #[test]
    fn constant_and_top_terms() {
        let c: Composition = "32".parse().unwrap();
        let e = e_generating_product(&c, GeneratingKind::Xi);
        assert_eq!(e.coeff(&[0, 0]), HeckeElement::one(5));
        let top = HeckeElement::basis(&longest_in_young(&c));
        assert_eq!(e.coeff(&[2, 1]), &top * &top);
        let t = e_generating_product(&c, GeneratingKind::T);
        assert_eq!(t.coeff(&[2, 1]), HeckeElement::word(5, &[1, 2, 1, 4]));
    }
}
