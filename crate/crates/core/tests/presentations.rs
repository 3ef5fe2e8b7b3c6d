use std::collections::BTreeMap;

use proptest::prelude::*;
use prym_core::catalog::{catalog_presentation, rings};
use prym_core::poly::{monomials_of_degree, Monomial, Polynomial, Table, VariableTable};
use prym_core::presentation::{
    check_ring_map, congruence_componentwise, dump_presentation, parse_presentation, quotient_compare, root_gerbe,
    symmetric_decompose, BasisIndex, RingPresentation, SymmetricBasis,
};
use prym_core::{ideal::Ideal, Error};

fn p(t: &Table, s: &str) -> Polynomial {
    Polynomial::parse(t, s).unwrap()
}

fn ring(name: &str, vars: &[(&str, u32)], rels: &[&str]) -> RingPresentation {
    RingPresentation::parse(name, &VariableTable::new(vars).unwrap(), rels, None).unwrap()
}

fn no_params() -> BTreeMap<String, i64> {
    BTreeMap::new()
}

#[test]
fn even_classifying_ring_restricts_to_the_torus() {
    let bg = catalog_presentation("ring.BG.even", &no_params()).unwrap();
    let torus = ring("torus", &[("t1", 1), ("t2", 1)], &[]);
    let tt = torus.table().clone();
    let map = check_ring_map(
        &bg,
        &torus,
        &[("b1", p(&tt, "t1 + t2")), ("b2", p(&tt, "t1*t2")), ("g1", Polynomial::zero(&tt))],
    )
    .unwrap();
    assert_eq!(map.relation_certificates.len(), 2);
    assert_eq!(map.apply(&p(bg.table(), "b1^2 - b2")).unwrap(), p(&tt, "t1^2 + t1*t2 + t2^2"));
}

#[test]
fn identity_on_the_odd_genus_ring() {
    let r = rings::hyperelliptic_odd(3).unwrap();
    let t = r.table().clone();
    let images: Vec<(&str, Polynomial)> = t.names().iter().map(|n| (n.as_str(), p(&t, n))).collect();
    let map = check_ring_map(&r, &r, &images).unwrap();
    assert_eq!(map.relation_certificates.len(), r.relations().len());
    assert!(quotient_compare(&map, 4).unwrap().is_isomorphism());
}

#[test]
fn ring_map_errors() {
    let src = ring("x", &[("x", 1)], &["2*x"]);
    let dst = ring("y", &[("y", 1), ("z", 2)], &["2*y"]);
    let dt = dst.table().clone();
    assert!(matches!(check_ring_map(&src, &dst, &[]), Err(Error::MissingImage(_))));
    assert!(matches!(check_ring_map(&src, &dst, &[("x", p(&dt, "z"))]), Err(Error::InhomogeneousImage { .. })));
    assert!(matches!(check_ring_map(&src, &dst, &[("x", p(&dt, "y + y^2"))]), Err(Error::InhomogeneousImage { .. })));
    let free = ring("y", &[("y", 1)], &[]);
    let ft = free.table().clone();
    assert!(matches!(check_ring_map(&src, &free, &[("x", p(&ft, "y"))]), Err(Error::RelationNotPreserved(_))));
}

#[test]
fn renamed_torsion_rings_are_equal() {
    let a = ring("x", &[("x", 1)], &["2*x"]);
    let b = ring("y", &[("y", 1)], &["2*y"]);
    let map = check_ring_map(&a, &b, &[("x", p(b.table(), "y"))]).unwrap();
    let cmp = quotient_compare(&map, 4).unwrap();
    assert!(cmp.is_isomorphism());
    assert_eq!(cmp.degrees[0].source.to_string(), "Z");
    assert_eq!(cmp.degrees[3].target.to_string(), "Z/2");
}

#[test]
fn two_x_and_four_x_differ() {
    let a = ring("x", &[("x", 1)], &["4*x"]);
    let b = ring("x", &[("x", 1)], &["2*x"]);
    let map = check_ring_map(&a, &b, &[("x", p(b.table(), "x"))]).unwrap();
    let cmp = quotient_compare(&map, 1).unwrap();
    assert!(!cmp.is_isomorphism());
    assert!(cmp.degrees[1].surjective);
    assert_eq!(cmp.degrees[1].source.to_string(), "Z/4");
    assert_eq!(cmp.degrees[1].target.to_string(), "Z/2");
}

#[test]
fn genus_two_lambda_relabelling() {
    let lam = ring("lambda", &[("l1", 1), ("l2", 2), ("g1", 1)], &["2*l1", "2*g1", "8*l2", "g1*(g1 + l1)", "l1*(l1 + g1)"]);
    let ours = rings::hyperelliptic_even(2).unwrap();
    let ot = ours.table().clone();
    let map = check_ring_map(&lam, &ours, &[("l1", p(&ot, "b1")), ("l2", p(&ot, "b2")), ("g1", p(&ot, "g1"))]).unwrap();
    let cmp = quotient_compare(&map, 6).unwrap();
    assert!(cmp.is_isomorphism());
    assert_eq!(cmp.degrees[1].target.to_string(), "Z/2 + Z/2");
    assert_eq!(cmp.degrees[2].target.to_string(), "Z/2 + Z/8");
}

#[test]
fn validity_bound_is_enforced() {
    let mut params = BTreeMap::new();
    params.insert("m".to_string(), 2);
    let pv = catalog_presentation("ring.PV.torus", &params).unwrap();
    assert_eq!(pv.validity_bound(), Some(4));
    assert!(pv.graded_group(4).is_ok());
    assert!(matches!(pv.graded_group(5), Err(Error::OutsideValidityBound { degree: 5, bound: 4 })));
}

#[test]
fn root_gerbe_over_the_two_factor_ring() {
    let base = rings::dab_pushforward(2, 2).unwrap();
    let c1 = p(base.table(), "-xi2a - xi2b");
    let rh = root_gerbe(&base, &c1, 2, "t").unwrap();
    assert_eq!(rh.relations().len(), base.relations().len() + 1);
    let rt = rh.table().clone();
    assert_eq!(rh.relations().last().unwrap(), &p(&rt, "xi2a + xi2b + 2*t"));
    assert!(root_gerbe(&base, &p(base.table(), "c2"), 2, "t").is_err());
    assert!(root_gerbe(&base, &c1, 0, "t").is_err());
}

#[test]
fn root_gerbe_over_the_integers() {
    let z = RingPresentation::new("Z", &VariableTable::new::<&str>(&[]).unwrap(), vec![], None).unwrap();
    let g = root_gerbe(&z, &Polynomial::zero(z.table()), 1, "t").unwrap();
    for d in 0..4 {
        let grp = g.graded_group(d).unwrap();
        assert_eq!(grp.to_string(), if d == 0 { "Z" } else { "0" });
    }
}

#[test]
fn cube_root_of_a_free_class() {
    let zx = ring("Z[x]", &[("x", 1)], &[]);
    let g = root_gerbe(&zx, &p(zx.table(), "x"), 3, "t").unwrap();
    let d1 = g.graded_group(1).unwrap();
    assert_eq!((d1.free_rank, d1.torsion.len()), (1, 0));
    assert!(g.is_zero(&p(g.table(), "x - 3*t")).unwrap());
}

fn std_table(n: usize, extra: &[(&str, u32)]) -> Table {
    let mut vars: Vec<(String, u32)> = (1..=n).map(|i| (format!("t{i}"), 1)).collect();
    vars.extend(extra.iter().map(|(s, w)| (s.to_string(), *w)));
    VariableTable::new(&vars).unwrap()
}

fn coeffs(parts: &BTreeMap<BasisIndex, Polynomial>) -> BTreeMap<BasisIndex, String> {
    parts.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

#[test]
fn decompose_t1_squared() {
    let t = std_table(2, &[]);
    let parts = symmetric_decompose(&p(&t, "t1^2"), 2).unwrap();
    let ct = parts.values().next().unwrap().table().clone();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[&vec![0, 0]], p(&ct, "-c2"));
    assert_eq!(parts[&vec![1, 0]], p(&ct, "c1"));
}

#[test]
fn decompose_t3() {
    let t = std_table(3, &[]);
    let parts = symmetric_decompose(&p(&t, "t3"), 3).unwrap();
    let ct = parts.values().next().unwrap().table().clone();
    assert_eq!(parts.len(), 3);
    assert_eq!(parts[&vec![0, 0, 0]], p(&ct, "c1"));
    assert_eq!(parts[&vec![1, 0, 0]], p(&ct, "-1"));
    assert_eq!(parts[&vec![0, 1, 0]], p(&ct, "-1"));
}

#[test]
fn decompose_the_first_w_class() {
    let t = std_table(3, &[("xi2", 1), ("c2", 2)]);
    let parts = symmetric_decompose(&p(&t, "xi2^2 + c2 + t1*xi2 + t1^2"), 3).unwrap();
    let ct = parts.values().next().unwrap().table().clone();
    assert_eq!(parts.len(), 3);
    assert_eq!(parts[&vec![0, 0, 0]], p(&ct, "xi2^2 + c2"));
    assert_eq!(parts[&vec![1, 0, 0]], p(&ct, "xi2"));
    assert_eq!(parts[&vec![2, 0, 0]], p(&ct, "1"));
}

#[test]
fn basis_has_n_factorial_indices() {
    for (n, count) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
        let idx = SymmetricBasis::standard(n).indices();
        assert_eq!(idx.len(), count);
        assert!(idx.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn congruence_examples() {
    let basis = SymmetricBasis::standard(3);
    let t = std_table(3, &[("f", 2)]);
    let ct = basis.coefficient_table(&t).unwrap();
    let j = Ideal::new(&ct, vec![p(&ct, "f")]).unwrap();
    let c = congruence_componentwise(&p(&t, "t1*t2*f"), &Polynomial::zero(&t), &j, &basis).unwrap();
    assert!(c.holds);
    let nonzero: Vec<&BasisIndex> = c.components.iter().filter(|(_, q, _)| !q.is_zero()).map(|(k, _, _)| k).collect();
    assert_eq!(nonzero, vec![&vec![1, 1, 0]]);

    let zero = Ideal::new(&ct, vec![]).unwrap();
    assert!(!congruence_componentwise(&p(&t, "t1"), &Polynomial::zero(&t), &zero, &basis).unwrap().holds);
}

#[test]
fn congruence_of_a_w_combination() {
    let basis = SymmetricBasis::standard(3);
    let t = std_table(3, &[("xi2", 1), ("c2", 2)]);
    let ct = basis.coefficient_table(&t).unwrap();
    let gens = vec![p(&ct, "2*xi2"), p(&ct, "xi2^2 + c2")];
    let j = Ideal::new(&ct, gens).unwrap();
    // alpha0 + alpha1 t1 + alpha2 t1^2 with every alpha in J.
    let q = p(&t, "(xi2^2 + c2)*xi2 + 2*xi2*t1 + 6*xi2*t1^2");
    assert!(congruence_componentwise(&q, &Polynomial::zero(&t), &j, &basis).unwrap().holds);
    let bad = p(&t, "(xi2^2 + c2)*xi2 + xi2*t1");
    assert!(!congruence_componentwise(&bad, &Polynomial::zero(&t), &j, &basis).unwrap().holds);
}

#[test]
fn scenario_file_round_trip() {
    let r = rings::dab_printed(2, 3).unwrap();
    let text = dump_presentation(&r, "two-factor ring", &[]);
    assert!(text.lines().filter(|l| !l.starts_with('[')).all(|l| l.contains("# two-factor ring")));
    let back = parse_presentation(&text).unwrap();
    assert_eq!(back.name(), r.name());
    assert_eq!(back.table().names(), r.table().names());
    assert_eq!(back.relations().len(), r.relations().len());
    for (a, b) in back.relations().iter().zip(r.relations()) {
        assert_eq!(a.to_string(), b.to_string());
    }

    let mut params = BTreeMap::new();
    params.insert("m".to_string(), 3);
    let pv = catalog_presentation("ring.PV.torus", &params).unwrap();
    let back = parse_presentation(&dump_presentation(&pv, "x", &[])).unwrap();
    assert_eq!(back.validity_bound(), Some(6));
}

#[test]
fn scenario_file_errors() {
    assert!(matches!(parse_presentation("x = 1\n"), Err(Error::Parse { offset: 0, .. })));
    assert!(matches!(parse_presentation("[vars]\nx = one\n"), Err(Error::Parse { offset: 1, .. })));
    assert!(matches!(parse_presentation("[vars]\nx = 1\n[relations]\n2*y\n"), Err(Error::Parse { offset: 3, .. })));
    assert!(matches!(parse_presentation("[bogus]\n"), Err(Error::Parse { .. })));
    let r = parse_presentation("[vars]\nx = 1  # a\n\n[relations]\n2*x # b\n").unwrap();
    assert_eq!(r.graded_group(1).unwrap().to_string(), "Z/2");
}

fn arb_poly(n: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..=max_deg as u16, n + 1), -9i64..=9), 0..8).prop_map(
        move |terms| {
            let t = std_table(n, &[("x", 1)]);
            let terms = terms.into_iter().map(|(mut e, c)| {
                // Keep the total degree at most max_deg.
                let mut budget = max_deg as u16;
                for v in e.iter_mut() {
                    *v = (*v).min(budget);
                    budget -= *v;
                }
                (Monomial::from_exps(&e, t.weights()), c.into())
            });
            Polynomial::from_terms(&t, terms)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn round_trip_n2(q in arb_poly(2, 10)) {
        let basis = SymmetricBasis::standard(2);
        let parts = basis.decompose(&q).unwrap();
        prop_assert!(parts.keys().all(|d| d[0] <= 1 && d[1] == 0));
        prop_assert_eq!(basis.recompose(&parts, q.table()).unwrap(), q);
    }

    #[test]
    fn round_trip_n3(q in arb_poly(3, 10)) {
        let basis = SymmetricBasis::standard(3);
        let parts = basis.decompose(&q).unwrap();
        prop_assert!(parts.keys().all(|d| d[0] <= 2 && d[1] <= 1 && d[2] == 0));
        prop_assert_eq!(basis.recompose(&parts, q.table()).unwrap(), q);
    }
}

#[test]
fn basis_monomials_decompose_to_deltas() {
    for n in 1..=4 {
        let basis = SymmetricBasis::standard(n);
        let t = std_table(n, &[]);
        for d in basis.indices() {
            let q = Polynomial::term(&t, 1, Monomial::from_exps(&d, t.weights()));
            let parts = basis.decompose(&q).unwrap();
            assert_eq!(coeffs(&parts), BTreeMap::from([(d.clone(), "1".to_string())]), "n = {n}");
        }
    }
}

/// Random homogeneous polynomial of degree `d` with small coefficients.
fn homogeneous(t: &Table, d: u32, cs: &[i64]) -> Polynomial {
    let monos = monomials_of_degree(t.weights(), d);
    Polynomial::from_terms(t, monos.into_iter().zip(cs.iter().cycle()).map(|(m, c)| (m, (*c).into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ring_maps_compose(
        rel in prop::collection::vec(-3i64..=3, 3),
        f in prop::collection::vec(-2i64..=2, 4),
        g in prop::collection::vec(-2i64..=2, 4),
        extra in prop::collection::vec(-3i64..=3, 3),
    ) {
        let ta = VariableTable::new(&[("x", 1), ("y", 1)]).unwrap();
        let tb = VariableTable::new(&[("u", 1), ("v", 1)]).unwrap();
        let tc = VariableTable::new(&[("w", 1), ("z", 1)]).unwrap();
        let lin = |t: &Table, c: &[i64], a: &str, b: &str| p(t, &format!("{}*{a} + {}*{b}", c[0], c[1]));
        let a = RingPresentation::new("A", &ta, vec![homogeneous(&ta, 2, &rel)], None).unwrap();
        let fx = lin(&tb, &f[0..2], "u", "v");
        let fy = lin(&tb, &f[2..4], "u", "v");
        let fi: Vec<Polynomial> = vec![fx.clone(), fy.clone()];
        let mut brels: Vec<Polynomial> = a.relations().iter().map(|r| r.eval_map(&fi, &tb).unwrap()).collect();
        brels.push(homogeneous(&tb, 2, &extra));
        let b = RingPresentation::new("B", &tb, brels, None).unwrap();
        let gu = lin(&tc, &g[0..2], "w", "z");
        let gv = lin(&tc, &g[2..4], "w", "z");
        let gi: Vec<Polynomial> = vec![gu.clone(), gv.clone()];
        let crels: Vec<Polynomial> = b.relations().iter().map(|r| r.eval_map(&gi, &tc).unwrap()).collect();
        let c = RingPresentation::new("C", &tc, crels, None).unwrap();

        let fm = check_ring_map(&a, &b, &[("x", fx), ("y", fy)]).unwrap();
        let gm = check_ring_map(&b, &c, &[("u", gu), ("v", gv)]).unwrap();
        let comp: Vec<Polynomial> = fm.images.iter().map(|q| gm.apply(q).unwrap()).collect();
        let composed = check_ring_map(&a, &c, &[("x", comp[0].clone()), ("y", comp[1].clone())]);
        prop_assert!(composed.is_ok());
    }

    #[test]
    fn trivial_root_gerbe_is_quotient_equal(which in 0usize..4, cs in prop::collection::vec(-3i64..=3, 4)) {
        let base = match which {
            0 => catalog_presentation("ring.BG.even", &no_params()).unwrap(),
            1 => catalog_presentation("ring.BG.odd", &no_params()).unwrap(),
            2 => catalog_presentation("ring.P1.Godd", &no_params()).unwrap(),
            _ => rings::hyperelliptic_odd(3).unwrap(),
        };
        let bt = base.table().clone();
        let c1 = homogeneous(&bt, 1, &cs);
        let g = root_gerbe(&base, &c1, 1, "r").unwrap();
        let gt = g.table().clone();
        let images: Vec<(&str, Polynomial)> = bt.names().iter().map(|n| (n.as_str(), p(&gt, n))).collect();
        let map = check_ring_map(&base, &g, &images).unwrap();
        prop_assert!(quotient_compare(&map, 4).unwrap().is_isomorphism());
    }
}
