use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;
use singtrans_core::{parse_poly, Monomial, MultiPoly, Rational, Ring, TermOrder};

fn ring() -> Ring {
    Ring::new(&["x", "y", "z"]).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=4, 3).prop_map(Monomial::new)
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((monomial(), rational()), 0..6).prop_map(|terms| MultiPoly::from_terms(&ring(), terms))
}

fn orders() -> Vec<TermOrder> {
    vec![
        TermOrder::Lex,
        TermOrder::DegRevLex,
        TermOrder::WeightedDeg(vec![Rational::from(BigInt::from(3)), Rational::from(BigInt::from(1)), Rational::new(1.into(), 2.into())]),
        TermOrder::LocalDegRevLex,
    ]
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
        prop_assert_eq!(&a * &MultiPoly::one(&ring()), a.clone());
    }

    #[test]
    fn display_parses_back(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(parse_poly(&text, &ring()).unwrap(), a);
    }

    #[test]
    fn orders_are_total_and_multiplicative(a in monomial(), b in monomial(), c in monomial()) {
        for o in orders() {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&(&a * &c), &(&b * &c)), ab);
            let one = Monomial::one(3);
            if !a.is_one() {
                let want = if o.is_global() { Ordering::Greater } else { Ordering::Less };
                prop_assert_eq!(o.cmp(&a, &one), want);
            }
        }
    }

    #[test]
    fn orders_are_transitive(a in monomial(), b in monomial(), c in monomial()) {
        for o in orders() {
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }
    }

    #[test]
    fn translation_round_trip(a in poly(), s in prop::collection::vec(rational(), 3)) {
        let back: Vec<Rational> = s.iter().map(|x| -x).collect();
        prop_assert_eq!(a.translate(&s).translate(&back), a.clone());
        // value at the shift becomes the constant term
        prop_assert_eq!(a.translate(&s).constant_term(), a.evaluate(&s));
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly()) {
        for i in 0..3 {
            let lhs = (&a * &b).derivative(i);
            let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitution_agrees_with_evaluation(a in poly(), p in prop::collection::vec(rational(), 3)) {
        let r = ring();
        let sub: Vec<(&str, MultiPoly)> = ["x", "y", "z"].iter().zip(&p).map(|(n, v)| (*n, MultiPoly::constant(&r, v.clone()))).collect();
        prop_assert_eq!(a.substitute(&sub).unwrap().constant_term(), a.evaluate(&p));
    }
}

#[test]
fn substitution_examples() {
    let r = Ring::new(&["x", "y"]).unwrap();
    let p = |s: &str| parse_poly(s, &r).unwrap();
    assert_eq!(p("x^2 + y").substitute(&[("x", p("y + 1"))]).unwrap(), p("y^2 + 3y + 1"));
    assert_eq!(p("x y").substitute(&[("x", p("y")), ("y", p("x"))]).unwrap(), p("x y"));
}

#[test]
fn ring_mismatch_is_an_error() {
    let a = parse_poly("x", &ring()).unwrap();
    let b = parse_poly("x", &Ring::new(&["x", "w"]).unwrap()).unwrap();
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&b).is_err());
}
