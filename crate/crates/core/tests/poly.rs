use std::collections::BTreeMap;

use proptest::prelude::*;
use prym_core::poly::{Monomial, Polynomial, Table, VariableTable};

fn even() -> Table {
    VariableTable::new(&[("xi", 1), ("b1", 1), ("b2", 2), ("g1", 1)]).unwrap()
}

fn p(t: &Table, s: &str) -> Polynomial {
    Polynomial::parse(t, s).unwrap()
}

#[test]
fn product_and_cancellation() {
    let t = even();
    assert_eq!(&p(&t, "g1") * &p(&t, "g1 + b1"), p(&t, "g1^2 + g1*b1"));
    assert_eq!(&p(&t, "xi - b1 - g1") + &p(&t, "b1 + g1"), p(&t, "xi"));
}

#[test]
fn hyperplane_product_at_m2() {
    let t = VariableTable::new(&[("xi2", 1), ("t2", 1), ("t3", 1)]).unwrap();
    let lhs = &p(&t, "xi2 - 2*t2") * &p(&t, "xi2 - 2*t3");
    assert_eq!(lhs, p(&t, "xi2^2 - 2*(t2 + t3)*xi2 + 4*t2*t3"));
}

#[test]
fn substitution_of_the_reduction() {
    let t = even();
    let g = 2;
    let f = p(&t, &format!("2*xi - {}*b1", 2 * g));
    let img = p(&t, &format!("{}*b1 + g1", g - 1));
    assert_eq!(f.substitute(&[("xi", &img)]).unwrap(), p(&t, "-2*b1 + 2*g1"));
    let q = p(&t, "xi^3 - 5*b2*g1 + 7");
    assert_eq!(q.substitute(&[("xi", &p(&t, "xi"))]).unwrap(), q);
}

#[test]
fn symmetric_expansion_into_the_torus() {
    let s = VariableTable::new(&[("c2", 2), ("c3", 3)]).unwrap();
    let t = VariableTable::new(&[("t1", 1), ("t2", 1), ("t3", 1)]).unwrap();
    let images = [p(&t, "t1*t2 + t1*t3 + t2*t3"), p(&t, "t1*t2*t3")];
    assert_eq!(p(&s, "2*c3").eval_map(&images, &t).unwrap(), p(&t, "2*t1*t2*t3"));
}

#[test]
fn graded_components_examples() {
    let t = VariableTable::new(&[("xi", 1), ("c2", 2), ("g1", 1)]).unwrap();
    let q = p(&t, "xi^2 + g1*xi + c2 + g1^2");
    let comps = q.graded_components();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[&2], q);
    assert!(Polynomial::zero(&t).graded_components().is_empty());

    let b = VariableTable::new(&[("b1", 1), ("b2", 2)]).unwrap();
    let comps: Vec<(u32, Polynomial)> = p(&b, "b1 + b2").graded_components().into_iter().collect();
    assert_eq!(comps, vec![(1, p(&b, "b1")), (2, p(&b, "b2"))]);
}

#[test]
fn parse_rejects_bad_input() {
    let t = even();
    assert!(Polynomial::parse(&t, "2*zz").is_err());
    assert!(Polynomial::parse(&t, "xi^").is_err());
    assert!(Polynomial::parse(&t, "(xi + 1").is_err());
    assert!(VariableTable::new(&[("x", 1), ("x", 2)]).is_err());
}

#[test]
fn mixing_tables_is_an_error() {
    let a = even();
    let b = VariableTable::new(&[("xi", 1)]).unwrap();
    assert!(p(&a, "xi").try_add(&p(&b, "xi")).is_err());
}

fn small_table() -> Table {
    VariableTable::new(&[("x", 1), ("y", 1), ("z", 2)]).unwrap()
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u16..4, 0u16..4, 0u16..3), -30i64..30), 0..6).prop_map(|terms| {
        let t = small_table();
        let terms = terms
            .into_iter()
            .map(|((a, b, c), k)| (Monomial::from_exps(&[a, b, c], t.weights()), k.into()));
        Polynomial::from_terms(&t, terms)
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        let one = Polynomial::one(a.table());
        prop_assert_eq!(&a * &one, a.clone());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), img in arb_poly()) {
        let s = |q: &Polynomial| q.substitute(&[("y", &img)]).unwrap();
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
    }

    #[test]
    fn graded_components_sum_back(a in arb_poly()) {
        let comps = a.graded_components();
        let mut sum = Polynomial::zero(a.table());
        for (d, c) in &comps {
            prop_assert!(c.is_homogeneous());
            prop_assert_eq!(c.degree(), Some(*d));
            sum = &sum + c;
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn print_parse_round_trip(a in arb_poly()) {
        let back = Polynomial::parse(a.table(), &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn pow_matches_repeated_product(a in arb_poly(), e in 0u32..4) {
        let mut acc = Polynomial::one(a.table());
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(e), acc);
    }
}

#[test]
fn embed_matches_variables_by_name() {
    let t = small_table();
    let wide = VariableTable::new(&[("w", 3), ("z", 2), ("y", 1), ("x", 1)]).unwrap();
    let q = p(&t, "x*z - 3*y^2");
    let e = q.embed(&wide).unwrap();
    assert_eq!(e, p(&wide, "x*z - 3*y^2"));
    let mut seen = BTreeMap::new();
    for (m, c) in e.terms() {
        seen.insert(m.exps().to_vec(), c.clone());
    }
    assert_eq!(seen.len(), 2);
}
