use serde::{Deserialize, Serialize};

use super::element::HeckeElement;
use crate::coeff::Coeff;
use crate::combi::{
    coset_representatives, ribbon_compatible, zeta_permutation, Composition, CosetMode, CosetSide,
    Permutation, RibbonShape, SymGroup,
};
use crate::error::{Error, Result};

/// `zeta_J = T_{w_J}`: the product over blocks of `T_{o+k-1} ... T_{o+1}`.
pub fn zeta(comp: &Composition) -> HeckeElement {
    HeckeElement::basis(&zeta_permutation(comp))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JmKind {
    /// Multiplicative JM elements `xi_i = T_{i-1}...T_1 T_1...T_{i-1}`.
    Xi,
    /// Additive JM elements `x_j = sum_{i<j} T_{(i,j)}`.
    X,
}

pub fn jm_element(kind: JmKind, i: usize, n: usize) -> Result<HeckeElement> {
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!(
            "JM index {i} out of range 1..={n}"
        )));
    }
    Ok(match kind {
        JmKind::Xi => xi(i, n, 0),
        JmKind::X => {
            let terms = (1..i).map(|a| (Permutation::transposition(n, a, i), Coeff::one()));
            HeckeElement::from_terms(n, terms)?
        }
    })
}

/// `xi_i` of the block starting after position `offset`.
fn xi(i: usize, n: usize, offset: usize) -> HeckeElement {
    let word: Vec<usize> = (1..i).rev().chain(1..i).map(|k| k + offset).collect();
    HeckeElement::word(n, &word)
}

/// Result of [`xi_monomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiMonomial {
    pub element: HeckeElement,
    pub sigma: Permutation,
}

/// Check block lengths and zero the first bit of each block.
pub fn canonical_uu(uu: &[Vec<u8>], comp: &Composition) -> Result<Vec<Vec<u8>>> {
    if uu.len() != comp.len() || uu.iter().zip(comp.iter()).any(|(u, &k)| u.len() != k) {
        return Err(Error::InvalidArgument(format!(
            "0-1 vectors do not fit the composition {comp}"
        )));
    }
    if uu.iter().flatten().any(|&b| b > 1) {
        return Err(Error::InvalidArgument("entries must be 0 or 1".into()));
    }
    Ok(uu
        .iter()
        .map(|u| {
            let mut u = u.clone();
            u[0] = 0;
            u
        })
        .collect())
}

/// Standard JM monomial `xi^{uu}` of the Young subalgebra `H(S_I)`, with
/// `sigma(uu)` read off the square-root word `(T_1)^{u_2} (T_2T_1)^{u_3} ...`.
pub fn xi_monomial(uu: &[Vec<u8>], comp: &Composition) -> Result<XiMonomial> {
    let uu = canonical_uu(uu, comp)?;
    let n = comp.size();
    let mut element = HeckeElement::one(n);
    let mut sigma = Permutation::identity(n);
    for (u, &off) in uu.iter().zip(&comp.offsets()) {
        for (k, &bit) in u.iter().enumerate().skip(1) {
            if bit == 1 {
                element = &element * &xi(k + 1, n, off);
                for j in (1..=k).rev() {
                    sigma = sigma.mul_simple_right(j + off);
                }
            }
        }
    }
    Ok(XiMonomial { element, sigma })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignedKind {
    /// `sum q^{l(w)} T_w`.
    Box,
    /// `sum (-q)^{-l(w)} T_w`.
    Nabla,
}

pub fn signed_sum(comp: &Composition, kind: SignedKind) -> HeckeElement {
    let n = comp.size();
    let g = SymGroup::get(n);
    let mut coeffs = vec![Coeff::zero(); g.order()];
    for r in 0..g.order() {
        if !g.perm(r).in_young_subgroup(comp) {
            continue;
        }
        let l = g.length(r) as i32;
        coeffs[r] = match kind {
            SignedKind::Box => Coeff::q_pow(l),
            SignedKind::Nabla => {
                let c = Coeff::q_pow(-l);
                if l % 2 == 1 {
                    -&c
                } else {
                    c
                }
            }
        };
    }
    HeckeElement::from_dense(n, coeffs)
}

/// `Upsilon_k = (T_{k-1} - q)(T_{k-2} - q^2/[2]) ... (T_1 - q^{k-1}/[k-1]) (-1/[k])`.
fn upsilon_part(k: usize) -> HeckeElement {
    let mut h = HeckeElement::one(k);
    for j in 1..k {
        let gen = k - j;
        let shift = Coeff::q_pow(j as i32) / Coeff::qint(j as i32);
        let factor = &HeckeElement::generator(k, gen) - &HeckeElement::scalar(k, shift);
        h = &h * &factor;
    }
    let last = -&Coeff::qint(k as i32)
        .recip()
        .expect("q-integers are nonzero");
    h.scale(&last)
}

/// Direct product of the per-part elements `Upsilon_{j}`.
pub fn upsilon(comp: &Composition) -> HeckeElement {
    let parts: Vec<HeckeElement> = comp.iter().map(|&k| upsilon_part(k)).collect();
    HeckeElement::direct_product(&parts)
}

/// `L[J]`: sum of `T_w` with `w` of maximal length in `S_J w`.
pub fn descent_sum(comp: &Composition) -> HeckeElement {
    let n = comp.size();
    let reps = coset_representatives(n, comp, CosetMode::Max, CosetSide::Left);
    HeckeElement::from_terms(n, reps.into_iter().map(|w| (w, Coeff::one()))).expect("sizes agree")
}

/// `R[theta]`: sum of `T_w` over permutations compatible with the ribbon.
pub fn ribbon_sum(shape: &RibbonShape) -> HeckeElement {
    let n = shape.size();
    let perms = ribbon_compatible(shape, n);
    HeckeElement::from_terms(n, perms.into_iter().map(|w| (w, Coeff::one()))).expect("sizes agree")
}

/// Result of [`descent_elements`].
#[derive(Clone, Debug)]
pub struct DescentElements {
    pub left: HeckeElement,
    pub ribbon: HeckeElement,
}

/// `L[J]` together with the ribbon sum `R[[J]]` of the connected ribbon `J`.
pub fn descent_elements(comp: &Composition) -> DescentElements {
    DescentElements {
        left: descent_sum(comp),
        ribbon: ribbon_sum(&RibbonShape::new(vec![comp.clone()])),
    }
}

/// Elementary symmetric functions `e_0, ..., e_{n-1}` of `x_2, ..., x_n`.
pub fn jm_elementary_all(n: usize) -> Vec<HeckeElement> {
    let mut e = vec![HeckeElement::one(n)];
    for j in 2..=n {
        let x = jm_element(JmKind::X, j, n).expect("index in range");
        let mut next = e.clone();
        next.push(HeckeElement::zero(n));
        for k in 1..next.len() {
            let add = &e[k - 1] * &x;
            next[k] += &add;
        }
        e = next;
    }
    e
}

pub fn jm_elementary(n: usize, k: usize) -> Result<HeckeElement> {
    if k >= n.max(1) {
        return Err(Error::InvalidArgument(format!(
            "degree {k} out of range 0..{n}"
        )));
    }
    Ok(jm_elementary_all(n).swap_remove(k))
}

/// `T_{omega_I}^2`.
pub fn longest_square(comp: &Composition) -> HeckeElement {
    let t = HeckeElement::basis(&crate::combi::longest_in_young(comp));
    &t * &t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_permutation(&comp("324")), perm("[3,1,2,5,4,9,6,7,8]"));
        assert_eq!(zeta(&comp("32")), HeckeElement::word(5, &[2, 1, 4]));
        assert_eq!(zeta(&comp("1111")), HeckeElement::one(4));
        assert_eq!(zeta(&comp("221")), HeckeElement::word(5, &[1, 3]));
    }

    #[test]
    fn jm_examples() {
        let xi2 = jm_element(JmKind::Xi, 2, 3).unwrap();
        assert_eq!(
            xi2,
            &HeckeElement::generator(3, 1).scale(&Coeff::big_q()) + &HeckeElement::one(3)
        );
        let x3 = jm_element(JmKind::X, 3, 3).unwrap();
        assert_eq!(
            x3,
            &HeckeElement::generator(3, 2) + &HeckeElement::word(3, &[2, 1, 2])
        );
        assert_eq!(jm_element(JmKind::Xi, 1, 3).unwrap(), HeckeElement::one(3));
        assert!(jm_element(JmKind::X, 1, 3).unwrap().is_zero());
        for j in 1..=4 {
            let xi = jm_element(JmKind::Xi, j, 4).unwrap();
            let x = jm_element(JmKind::X, j, 4).unwrap();
            assert_eq!(xi, &HeckeElement::one(4) + &x.scale(&Coeff::big_q()));
        }
    }

    #[test]
    fn xi_monomial_examples() {
        let m = xi_monomial(&[vec![0, 1, 0, 1, 0]], &comp("5")).unwrap();
        assert_eq!(m.sigma, perm("42135"));
        let t = HeckeElement::basis(&m.sigma);
        assert_eq!(m.element, &t * &t.anti_involution());
        let m = xi_monomial(&[vec![0, 0, 1], vec![0, 1]], &comp("32")).unwrap();
        assert_eq!(m.sigma, perm("31254"));
        let t = HeckeElement::basis(&m.sigma);
        assert_eq!(m.element, &t * &t.anti_involution());
        let m = xi_monomial(&[vec![1, 0], vec![0]], &comp("21")).unwrap();
        assert_eq!(m.element, HeckeElement::one(3));
        assert!(xi_monomial(&[vec![0, 1]], &comp("3")).is_err());
    }

    #[test]
    fn signed_sums_span_one_dimensional_modules() {
        let c = comp("32");
        let b = signed_sum(&c, SignedKind::Box);
        let d = signed_sum(&c, SignedKind::Nabla);
        for i in [1, 2, 4] {
            assert_eq!(b.mul_generator_right(i), b.scale(&Coeff::q_pow(1)));
            assert_eq!(d.mul_generator_right(i), d.scale(&-&Coeff::q_pow(-1)));
        }
        assert_eq!(
            signed_sum(&comp("1"), SignedKind::Box),
            HeckeElement::one(1)
        );
    }

    #[test]
    fn upsilon_support_is_in_subwords_of_zeta() {
        let c = comp("43");
        let gens = c.generators();
        let mut allowed = Vec::new();
        for mask in 0u32..(1 << gens.len()) {
            let mut w = Permutation::identity(7);
            for (k, &i) in gens.iter().enumerate().rev() {
                if mask & (1 << k) != 0 {
                    w = w.mul_simple_right(i);
                }
            }
            allowed.push(w);
        }
        let u = upsilon(&c);
        assert!(!u.is_zero());
        for (w, _) in u.terms() {
            assert!(allowed.contains(&w), "{w}");
        }
        assert_eq!(
            upsilon(&comp("1")),
            HeckeElement::scalar(1, Coeff::from_int(-1))
        );
    }

    #[test]
    fn descent_sum_of_32() {
        let l = descent_sum(&comp("32"));
        assert_eq!(l.nnz(), 10);
        assert!(!l.coeff(&perm("32154")).is_zero());
        assert_eq!(descent_sum(&comp("111")).nnz(), 6);
        let col = ribbon_sum(&RibbonShape::new(vec![comp("111")]));
        assert_eq!(col, HeckeElement::basis(&perm("321")));
    }

    #[test]
    fn elementary_jm() {
        let e = jm_elementary_all(3);
        assert_eq!(e.len(), 3);
        let x2 = jm_element(JmKind::X, 2, 3).unwrap();
        let x3 = jm_element(JmKind::X, 3, 3).unwrap();
        assert_eq!(e[1], &x2 + &x3);
        assert_eq!(e[2], &x2 * &x3);
        assert!(e[2].is_central());
    }
}
