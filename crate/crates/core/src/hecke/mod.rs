//! The Hecke algebra `H_n` of the symmetric group over Q(q).

mod element;
mod normalize;
mod special;
mod yang;
mod zelement;

pub use element::HeckeElement;
pub use normalize::{normalize, subgroup_conjugation_sum};
pub use special::{
    canonical_uu, descent_elements, descent_sum, jm_element, jm_elementary, jm_elementary_all,
    longest_square, ribbon_sum, signed_sum, upsilon, xi_monomial, zeta, DescentElements, JmKind,
    SignedKind, XiMonomial,
};
pub use yang::{
    reduced_words, yang_baxter, yang_baxter_along, yang_baxter_dual_check, yang_baxter_gram,
};
pub use zelement::{e_generating_product, GeneratingKind, ZHeckeElement};

use std::collections::BTreeMap;

use crate::coeff::Coeff;
use crate::combi::{Partition, SymGroup};
use crate::symfunc::{modified_complete_product, Basis, SymmetricFunction};

/// Coefficients of `h` summed over each cycle type.
pub fn class_coefficients(h: &HeckeElement) -> BTreeMap<Partition, Coeff> {
    let g = SymGroup::get(h.n());
    let mut by_type: BTreeMap<Partition, Coeff> = BTreeMap::new();
    for (r, c) in h.support() {
        *by_type
            .entry(g.perm(r).cycle_type())
            .or_insert_with(Coeff::zero) += c;
    }
    by_type
}

/// Frobenius map `Phi(T_w) = S^{cycle(w)}`, in the power-sum basis.
pub fn frobenius_phi(h: &HeckeElement) -> SymmetricFunction {
    let mut out = SymmetricFunction::zero(Basis::P, h.n());
    for (ty, c) in class_coefficients(h) {
        if !c.is_zero() {
            out = out.add(&modified_complete_product(&ty).scale(&c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_of_upsilon_is_complete() {
        for n in 1..=3 {
            for comp in crate::combi::compositions(n) {
                let phi = frobenius_phi(&upsilon(&comp));
                let h = SymmetricFunction::from_composition(Basis::H, &comp).to_basis(Basis::P);
                assert_eq!(phi, h, "{comp}");
            }
        }
        let one = frobenius_phi(&HeckeElement::one(3));
        let p111 = SymmetricFunction::basis_element(Basis::P, &"111".parse().unwrap());
        assert_eq!(one, p111.scale(&Coeff::from_int(-1)));
    }
}
