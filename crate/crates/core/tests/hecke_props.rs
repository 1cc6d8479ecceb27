use hecke_center::coeff::{rat, Coeff};
use hecke_center::combi::SymGroup;
use hecke_center::hecke::HeckeElement;
use proptest::prelude::*;

const N: usize = 4;

fn element() -> impl Strategy<Value = HeckeElement> {
    let order = SymGroup::get(N).order();
    prop::collection::vec((0..order, -3i64..=3, -2i32..=2), 0..6).prop_map(|terms| {
        let mut h = HeckeElement::zero(N);
        for (r, c, e) in terms {
            h += &HeckeElement::basis_rank(N, r).scale(&(&Coeff::from_int(c) * &Coeff::q_pow(e)));
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn scalar_product_compatibility(a in element(), b in element(), i in 1..N) {
        let t = HeckeElement::generator(N, i);
        prop_assert_eq!((&a * &t).scalar_product(&b), a.scalar_product(&(&b * &t)));
        prop_assert_eq!((&t * &a).scalar_product(&b), a.scalar_product(&(&t * &b)));
    }

    #[test]
    fn anti_involution_reverses_products(a in element(), b in element()) {
        prop_assert_eq!((&a * &b).anti_involution(), &b.anti_involution() * &a.anti_involution());
    }

    #[test]
    fn specialization_at_one_is_the_group_algebra(a in element(), b in element()) {
        let one = rat(1, 1);
        let lhs = (&a * &b).evaluate(&one).unwrap();
        let g = SymGroup::get(N);
        let (x, y) = (a.evaluate(&one).unwrap(), b.evaluate(&one).unwrap());
        let mut rhs = HeckeElement::zero(N);
        for (u, cu) in x.support() {
            for (v, cv) in y.support() {
                let w = g.rank_of(&g.perm(u).compose(&g.perm(v)));
                rhs += &HeckeElement::basis_rank(N, w).scale(&(cu * cv));
            }
        }
        prop_assert_eq!(lhs, rhs);
    }
}
