use super::element::{mul_gen_left, mul_gen_right, HeckeElement};
use crate::combi::{Composition, SymGroup};
use crate::error::{Error, Result};

/// `sum_{w in set} T_w h T_{w^-1}` for a set of ranks closed under
/// `w -> s_i w` with `i` the smallest recoil of `w`.
fn conjugation_sum(h: &HeckeElement, member: impl Fn(usize) -> bool) -> HeckeElement {
    let n = h.n();
    let g = SymGroup::get(n);
    let order = g.order();
    let mut children: Vec<Vec<(usize, usize)>> = vec![Vec::new(); order];
    for r in 1..order {
        if !member(r) {
            continue;
        }
        let i = (1..n)
            .find(|&i| !g.is_left_ascent(r, i))
            .expect("non-identity has a recoil");
        let parent = g.left_mul(r, i);
        debug_assert!(member(parent));
        children[parent].push((r, i));
    }
    let mut out = HeckeElement::zero(n);
    let mut stack = vec![(0usize, h.clone())];
    while let Some((v, x)) = stack.pop() {
        out += &x;
        for &(child, i) in &children[v] {
            let next = mul_gen_right(g, &mul_gen_left(g, x.dense(), i), i);
            stack.push((child, HeckeElement::from_dense(n, next)));
        }
    }
    out
}

/// Normalization `N_I(h) = sum T_w h T_{w^-1}` over minimal-length
/// representatives `w` of `S_n / S_I`.
pub fn normalize(comp: &Composition, h: &HeckeElement) -> Result<HeckeElement> {
    let n = h.n();
    if comp.size() != n {
        return Err(Error::InvalidArgument(format!(
            "composition {comp} does not compose {n}"
        )));
    }
    if !h.in_young_subalgebra(comp) {
        return Err(Error::SupportViolation(format!(
            "element is not supported in the Young subgroup of {comp}"
        )));
    }
    let g = SymGroup::get(n);
    let blocks = comp.block_of();
    let minimal = |r: usize| {
        let w = g.word(r);
        (1..n).all(|i| blocks[i - 1] != blocks[i] || w[i - 1] < w[i])
    };
    Ok(conjugation_sum(h, minimal))
}

/// `sum_{w in S_K} T_w h T_{w^-1}` over the whole Young subgroup `S_K`.
pub fn subgroup_conjugation_sum(subgroup: &Composition, h: &HeckeElement) -> Result<HeckeElement> {
    let n = h.n();
    if subgroup.size() != n {
        return Err(Error::InvalidArgument(format!(
            "composition {subgroup} does not compose {n}"
        )));
    }
    let g = SymGroup::get(n);
    Ok(conjugation_sum(h, |r| {
        g.perm(r).in_young_subgroup(subgroup)
    }))
}
