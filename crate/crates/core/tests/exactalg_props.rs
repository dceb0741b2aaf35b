use capelli_core::exactalg::{rat, solve_exact, LinearSystem};
use capelli_core::{Error, MultiPoly, Rational};
use proptest::prelude::*;

fn vars() -> Vec<String> {
    vec!["x1".into(), "x2".into(), "x3".into()]
}

fn coef() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), coef()), 0..5)
        .prop_map(|terms| MultiPoly::from_terms(vars(), terms).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let s = a.to_json_string();
        prop_assert_eq!(MultiPoly::from_json_str(&s).unwrap(), a.clone());
        prop_assert_eq!(MultiPoly::from_json_str(&s).unwrap().to_json_string(), s);
    }

    #[test]
    fn solve_round_trip(
        m in prop::collection::vec(prop::collection::vec(coef(), 3), 3),
        x in prop::collection::vec(coef(), 3),
    ) {
        let b: Vec<Rational> = m
            .iter()
            .map(|row| row.iter().zip(&x).map(|(a, y)| a * y).sum())
            .collect();
        let sys = LinearSystem::new(m, b.clone()).unwrap();
        match solve_exact(&sys) {
            Ok(sol) => {
                prop_assert_eq!(&sol, &x);
                prop_assert_eq!(sys.apply(&sol), b);
            }
            Err(Error::SingularSystem) => {}
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }
}
