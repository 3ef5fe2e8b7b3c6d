use std::collections::BTreeMap;

use prym_core::catalog::formulas::{dab, even, odd};
use prym_core::catalog::qpush::{m1_chain, odd_chain, qpush_eval, rho_tau, RhoMap, TauClass};
use prym_core::catalog::wclass::{stratum_relations, torus_relations, w_class_in};
use prym_core::catalog::{
    catalog_presentation, chern_quotient_by_trivial, chern_twist, chern_va, class_formula, dump_ring,
    interpolate_from_strata, projective_polynomial, regular_rep_c1, strata_zero_test, tables, w_class,
    w_class_restriction, w_class_t1_form, RING_IDS, STRATA,
};
use prym_core::ideal::Ideal;
use prym_core::poly::{Polynomial, Table};
use prym_core::presentation::{parse_presentation, SymmetricBasis};
use prym_core::Error;

fn p(t: &Table, s: &str) -> Polynomial {
    Polynomial::parse(t, s).unwrap()
}

fn params(kv: &[(&str, i64)]) -> BTreeMap<String, i64> {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn in_ideal(gens: Vec<Polynomial>, q: &Polynomial) -> bool {
    Ideal::new(q.table(), gens).unwrap().contains_bool(q).unwrap()
}

#[test]
fn odd_classifying_ring() {
    let r = catalog_presentation("ring.BG.odd", &params(&[])).unwrap();
    let t = r.table();
    let degs: Vec<u32> = ["c2", "g1", "t"].iter().map(|n| t.weight(t.index_of(n).unwrap())).collect();
    assert_eq!(degs, vec![2, 1, 1]);
    assert_eq!(r.relations(), &[p(t, "2*g1")]);
}

#[test]
fn two_projective_lines() {
    let r = catalog_presentation("ring.P1pow", &params(&[("m", 2)])).unwrap();
    let t = r.table();
    let want = [p(t, "c3"), p(t, "tau1^2 + c2"), p(t, "D12^2 - D12*tau1")];
    assert_eq!(r.relations().len(), 3);
    for (got, w) in r.relations().iter().zip(&want) {
        // Relations are stored sign-normalized.
        assert!(got == w || *got == -w.clone(), "{got} vs {w}");
    }
}

#[test]
fn truncated_torus_ring() {
    let r = catalog_presentation("ring.PV.torus", &params(&[("m", 2)])).unwrap();
    let t = r.table();
    assert_eq!(r.validity_bound(), Some(4));
    assert_eq!(r.relations(), &[p(t, "t1 + t2 + t3"), p(t, "2*t1*t2*t3")]);
}

#[test]
fn catalog_errors() {
    assert!(matches!(catalog_presentation("ring.nosuch", &params(&[])), Err(Error::UnknownId(_))));
    assert!(matches!(catalog_presentation("ring.P1pow", &params(&[])), Err(Error::OutOfRange(_))));
    assert!(matches!(catalog_presentation("ring.PV.torus", &params(&[("m", 0)])), Err(Error::OutOfRange(_))));
    assert!(matches!(catalog_presentation("ring.hyperelliptic.even", &params(&[("g", 3)])), Err(Error::OutOfRange(_))));
    assert!(matches!(class_formula("nosuch", &params(&[])), Err(Error::UnknownId(_))));
}

#[test]
fn every_ring_dumps_and_parses_back() {
    for (id, _) in RING_IDS {
        let g = if id.ends_with(".even") { 4 } else { 5 };
        let defaults = params(&[("m", 2), ("a", 2), ("b", 3), ("g", g), ("n", 2)]);
        let text = dump_ring(id, &defaults).unwrap();
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('[')).collect();
        assert!(body.iter().all(|l| l.split_once('#').map(|(_, a)| !a.trim().is_empty()).unwrap_or(false)), "{id}");
        let back = parse_presentation(&text).unwrap();
        let orig = catalog_presentation(id, &defaults).unwrap();
        assert_eq!(back.relations().len(), orig.relations().len(), "{id}");
        assert_eq!(back.validity_bound(), orig.validity_bound(), "{id}");
    }
}

#[test]
fn class_formula_examples() {
    let et = tables::even();
    let ot = tables::odd();
    assert_eq!(class_formula("uD1.even", &params(&[("g", 2)])).unwrap().poly, p(&et, "2*xi - 4*b1"));
    assert_eq!(class_formula("uD11.odd", &params(&[("g", 3)])).unwrap().poly, p(&ot, "xi^2 + g1*xi + 9*c2 + g1^2"));
    assert_eq!(class_formula("i1alpha.even", &params(&[("g", 2)])).unwrap().poly, p(&et, "(b1 + g1)*xi - 8*b2"));
    assert_eq!(class_formula("XY.odd", &params(&[])).unwrap().poly, p(&ot, "xi^2 + xi*g1 + c2 + g1^2"));
}

#[test]
fn first_diagonal_variants_agree_in_the_ring() {
    for g in [2, 4, 6] {
        let d = &even::diag1(g).poly - &even::diag1_alt(g).poly;
        // 2g g1 lies in (2 g1).
        assert!(in_ideal(even::base_relations(), &d), "g = {g}");
        let r = &even::reduction(g).poly - &even::reduction_alt(g).poly;
        assert!(in_ideal(even::base_relations(), &r), "g = {g}");
    }
}

#[test]
fn w_class_closed_forms() {
    let t = tables::torus();
    let e1 = torus_relations(&t);
    assert_eq!(w_class(1, 1).unwrap(), p(&t, "(xi - t3)*(xi - t2)"));
    let m1 = p(&t, "xi^2 + t1*xi + (t1*t2 + t1*t3 + t2*t3) + t1^2");
    assert!(in_ideal(vec![e1[0].clone()], &(&w_class(1, 1).unwrap() - &m1)));
    let m2 = p(&t, "xi^2 + 3*t1*xi + 4*(t1*t2 + t1*t3 + t2*t3) + 6*t1^2");
    assert!(in_ideal(vec![e1[0].clone()], &(&w_class(2, 1).unwrap() - &m2)));
    // Even m = 2 product formula plus the correction 2 t2 t3 (2 xi^2 - 2 t2^2).
    let w22 = p(&t, "(xi - 2*t2 - 2*t3)*(xi - t1 - t3)*(xi - t2 - t3)*(xi - t1 - t2) + 2*t2*t3*(2*xi^2 - 2*t2^2)");
    assert_eq!(w_class(2, 2).unwrap(), w22);
    assert!(matches!(w_class(1, 2), Err(Error::OutOfRange(_))));
    assert!(matches!(w_class(2, 3), Err(Error::OutOfRange(_))));
}

#[test]
fn w_class_restriction_examples() {
    let t = tables::torus();
    assert_eq!(w_class_restriction(2, 1, [0, 1, 1]).unwrap(), p(&t, "(xi - 2*t2)*(xi - 2*t3)"));
    assert_eq!(w_class_restriction(2, 1, [0, 0, 2]).unwrap(), p(&t, "(xi - 2*t2)*(xi - t2 - t3)"));
    let r = w_class_restriction(1, 1, [0, 2, 0]).unwrap();
    assert_eq!(r, p(&t, "(xi - t3)*(xi - t2)"));
    assert!(in_ideal(stratum_relations(&t, [0, 2, 0]), &(&w_class(1, 1).unwrap() - &r)));
    assert!(w_class_restriction(2, 1, [1, 1, 0]).is_err());
}

#[test]
fn w_class_interpolation_and_uniqueness() {
    let t = tables::torus();
    for m in 2..=5u32 {
        for r in 1..=2u32 {
            let w = w_class(m, r).unwrap();
            assert!(in_ideal(torus_relations(&t), &(&w - &w_class_t1_form(m, r).unwrap())), "m={m} r={r}");
            let rs: Vec<Polynomial> = STRATA.iter().map(|s| w_class_restriction(m, r, *s).unwrap()).collect();
            for (s, rr) in STRATA.iter().zip(&rs) {
                assert!(in_ideal(stratum_relations(&t, *s), &(&w - rr)), "m={m} r={r} {s:?}");
            }
            let interp = interpolate_from_strata(&[rs[0].clone(), rs[1].clone(), rs[2].clone()], 2 * r)
                .unwrap()
                .expect("interpolant");
            assert!(strata_zero_test(&(&w - &interp), m).unwrap(), "m={m} r={r}");
        }
    }
}

#[test]
fn strata_zero_test_examples() {
    let t = tables::torus();
    assert!(strata_zero_test(&p(&t, "2*t2*t3*(t2 + t3)"), 2).unwrap());
    assert!(!strata_zero_test(&p(&t, "2*t2"), 2).unwrap());
    assert!(matches!(
        strata_zero_test(&p(&t, "t1^5"), 2),
        Err(Error::OutsideValidityBound { degree: 5, bound: 4 })
    ));
}

/// Rank r twist written out term by term.
fn twist_by_hand(t: &Table, c: &[&str], l: &str) -> Vec<Polynomial> {
    match c.len() {
        1 => vec![p(t, &format!("{} + {l}", c[0]))],
        2 => vec![
            p(t, &format!("{} + 2*{l}", c[0])),
            p(t, &format!("{} + {}*{l} + {l}^2", c[1], c[0])),
        ],
        _ => vec![
            p(t, &format!("{} + 3*{l}", c[0])),
            p(t, &format!("{} + 2*{}*{l} + 3*{l}^2", c[1], c[0])),
            p(t, &format!("{} + {}*{l} + {}*{l}^2 + {l}^3", c[2], c[1], c[0])),
        ],
    }
}

#[test]
fn chern_twist_of_the_standard_bundle() {
    let t = tables::odd();
    let c = vec![Polynomial::zero(&t), p(&t, "c2"), p(&t, "c3")];
    let tw = chern_twist(&c, &p(&t, "g1")).unwrap();
    assert_eq!(tw, vec![p(&t, "3*g1"), p(&t, "c2 + 3*g1^2"), p(&t, "c3 + g1*c2 + g1^3")]);
    let full = catalog_presentation("ring.BG.odd.full", &params(&[])).unwrap();
    let top = tw[2].embed(full.table()).unwrap();
    assert!(full.is_zero(&top).unwrap());
    assert_eq!(chern_twist(&c, &Polynomial::zero(&t)).unwrap(), c);
    assert!(matches!(chern_twist(&vec![c[1].clone(); 4], &p(&t, "g1")), Err(Error::RankOutOfScope(4))));
}

#[test]
fn chern_twist_matches_the_expansion() {
    let t = prym_core::poly::VariableTable::new(&[("a", 1), ("b", 2), ("c", 3), ("l", 1)]).unwrap();
    for names in [vec!["a"], vec!["a", "b"], vec!["a", "b", "c"]] {
        let c: Vec<Polynomial> = names.iter().map(|n| p(&t, n)).collect();
        assert_eq!(chern_twist(&c, &p(&t, "l")).unwrap(), twist_by_hand(&t, &names, "l"));
    }
}

#[test]
fn quotient_by_trivial_then_twist_gives_xy() {
    let t = tables::odd();
    let c = vec![Polynomial::zero(&t), p(&t, "c2"), p(&t, "c3")];
    let twisted = chern_twist(&c, &p(&t, "g1")).unwrap();
    let (q, top) = chern_quotient_by_trivial(&twisted).unwrap();
    assert_eq!(top, p(&t, "c3 + g1*c2 + g1^3"));
    let tw = chern_twist(&q, &p(&t, "xi + g1")).unwrap();
    let d = &tw[1] - &odd::xy().poly;
    assert!(in_ideal(vec![p(&t, "2*g1")], &d));
}

#[test]
fn regular_representation() {
    assert_eq!(regular_rep_c1(3).unwrap(), 0);
    assert_eq!(regular_rep_c1(2).unwrap(), 1);
    assert_eq!(regular_rep_c1(4).unwrap(), 2);
    for n in 1..40u64 {
        assert_eq!(regular_rep_c1(n).unwrap(), (0..n).sum::<u64>() % n);
    }
    assert!(regular_rep_c1(0).is_err());
}

#[test]
fn chern_classes_of_quadratic_forms_modulo_the_conic() {
    let va = chern_va(2).unwrap();
    assert_eq!(va.symmetric.len(), 6);
    let gt = tables::gl3_torus();
    // Roots are -k.t, so c1 = -4 e1, zero once t1 + t2 + t3 = 0.
    assert_eq!(va.symmetric[1], p(&tables::gl3(), "-4*c1"));
    // c1 is the weight sum 4 (t1 + t2 + t3) of the numerator.
    assert!(in_ideal(torus_relations(&gt), &va.torus[1]));
    // The degree six term of the series vanishes: rank five.
    let series = prym_core::catalog::chern::va_chern_series(&gt, 2, 6);
    assert!(in_ideal(torus_relations(&gt), &series[6]));

    // On the stratum (0,0,2) the projective polynomial is the product of its five hyperplanes.
    let t = tables::torus();
    let pa = projective_polynomial(&va.torus, &t, "xi").unwrap();
    let prod = p(&t, "(xi - 2*t1)*(xi - t1 - t2)*(xi - 2*t2)*(xi - t1 - t3)*(xi - t2 - t3)");
    assert!(in_ideal(stratum_relations(&t, [0, 0, 2]), &(&pa - &prod)));
}

#[test]
fn projective_polynomials_are_symmetric() {
    for a in 1..=4 {
        let va = chern_va(a).unwrap();
        assert_eq!(va.symmetric.len(), 2 * a as usize + 2);
        let basis = SymmetricBasis::standard(3);
        for c in &va.torus {
            assert!(basis.decompose(c).unwrap().keys().all(|k| k.iter().all(|&e| e == 0)));
        }
    }
}

#[test]
fn pushforward_values() {
    let chain = odd_chain(3).unwrap();
    let ot = tables::odd();
    let get = |id: &str| chain.iter().find(|i| i.id == id).unwrap().clone();
    assert_eq!(get("mult_xi2").value, p(&ot, "5*xi"));
    assert!(chain.iter().all(|i| i.holds));
    let m1 = m1_chain(2, 3).unwrap();
    let dt = tables::dab();
    assert_eq!(m1[1].value, p(&dt, "2*xi2a*xi2b - 12*c2"));
    assert!(m1.iter().all(|i| i.holds));
    let rho = rho_tau(4).unwrap();
    assert_eq!(rho.value, p(&tables::torus_coefficients(), "12*xi"));
}

#[test]
fn rational_route_guards() {
    let t = tables::torus_coefficients();
    let rho = RhoMap::new(&[(4, "xi")], &t).unwrap();
    let third = TauClass::parse(4, "tau1", 7).unwrap();
    assert!(matches!(qpush_eval(&third, &rho, &1.into()), Err(Error::NonIntegral(_))));
    let cubic = TauClass::parse(4, "tau1*tau2*tau3", 1).unwrap();
    assert!(matches!(qpush_eval(&cubic, &rho, &1.into()), Err(Error::RationalRouteNotJustified(_))));
}

#[test]
fn diagonal_coherence_on_three_lines() {
    let r = catalog_presentation("ring.P1pow", &params(&[("m", 3)])).unwrap();
    let t = r.table();
    let d23 = p(t, "D12 + D13 - tau1");
    let tau2 = p(t, "2*D12 - tau1");
    assert!(r.is_zero(&(&d23.pow(2) - &(&d23 * &tau2))).unwrap());
}

#[test]
fn third_bullet_matches_the_diagonal_pushforward() {
    let dt = tables::dab();
    for a in [2, 3, 4] {
        let printed = dab::printed_relations(a, 2).into_iter().find(|f| f.id == "Fa3").unwrap().poly;
        let pushed = p(&dt, &dab::f2_xi2sq(a));
        let f1 = vec![p(&dt, &dab::f1_one(a)), p(&dt, &dab::f1_tau(a))];
        assert!(in_ideal(f1, &(&printed - &pushed)), "a = {a}");
        // Not equal on the nose: the shift is a(a-1) c2 times the second F1 relation.
        let shift = &p(&dt, &format!("{}*c2", a * (a - 1))) * &p(&dt, &dab::f1_tau(a));
        assert_eq!(&pushed - &printed, shift);
    }
}

#[test]
fn product_of_first_w_classes() {
    let dt = tables::dab_torus();
    let d = tables::dab();
    let basis = SymmetricBasis::standard(3);
    for (a, b) in [(2, 2), (2, 3), (3, 3)] {
        let w = &w_class_in(a, 1, &dt, "xi2a").unwrap() * &w_class_in(b, 1, &dt, "xi2b").unwrap();
        let parts = basis.decompose(&w).unwrap();
        let comp = |k: [u16; 3]| parts.get(&k.to_vec()).map(|c| c.embed(&d).unwrap()).unwrap_or_else(|| Polynomial::zero(&d));
        let c1 = vec![p(&d, "c1"), p(&d, "2*c3")];
        for (k, want) in [([0, 0, 0], dab::alpha0(a as i64, b as i64)), ([1, 0, 0], dab::alpha1(a as i64, b as i64)), ([2, 0, 0], dab::alpha2(a as i64, b as i64))] {
            assert!(in_ideal(c1.clone(), &(&comp(k) - &p(&d, &want))), "({a},{b}) {k:?}");
        }
        for (k, c) in &parts {
            if k[1] > 0 {
                assert!(in_ideal(c1.clone(), &c.embed(&d).unwrap()), "({a},{b}) {k:?}");
            }
        }
    }
}
