use hecke_center::coeff::{parse_expr, pretty, rat, Coeff, LaurentPoly};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -5i64..=5, 1i64..=3), 0..4).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(e, n, d)| (e, rat(n, d))))
    })
}

fn coeff() -> impl Strategy<Value = Coeff> {
    (laurent(), laurent()).prop_map(|(a, b)| {
        let den = if b.is_zero() { LaurentPoly::one() } else { b };
        Coeff::new(a, den).expect("nonzero denominator")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_string_round_trips(a in coeff()) {
        let s = a.to_string();
        let back = parse_expr(&s).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(parse_expr(&pretty(&a)).unwrap(), a);
    }

    #[test]
    fn bar_involution_is_an_involutive_automorphism(a in coeff(), b in coeff()) {
        prop_assert_eq!(a.bar_involution().bar_involution(), a.clone());
        prop_assert_eq!((&a * &b).bar_involution(), &a.bar_involution() * &b.bar_involution());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in coeff(), b in coeff()) {
        let q0 = rat(5, 3);
        if let (Ok(x), Ok(y)) = (a.evaluate(&q0), b.evaluate(&q0)) {
            prop_assert_eq!((&a * &b).evaluate(&q0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).evaluate(&q0).unwrap(), &x + &y);
        }
    }
}

#[test]
fn q_integers() {
    assert_eq!(
        parse_expr("[3]").unwrap(),
        parse_expr("q^2+1+q^-2").unwrap()
    );
    assert_eq!(Coeff::qint(2), Coeff::q_pow(1) + Coeff::q_pow(-1));
    assert_eq!(pretty(&parse_expr("q^2-2+q^-2").unwrap()), "Q^2");
}
