//! Named ring presentations, looked up by id with integer parameters.

use std::collections::BTreeMap;

use super::chern::{chern_va, projective_polynomial};
use super::formulas::{dab, even, odd};
use super::tables;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, VariableTable};
use crate::presentation::{root_gerbe, RingPresentation};

/// Ids accepted by [`catalog_presentation`], with the parameters each one reads.
pub const RING_IDS: &[(&str, &[&str])] = &[
    ("ring.BPGL2", &[]),
    ("ring.BG.even", &[]),
    ("ring.BG.odd", &[]),
    ("ring.BG.odd.full", &[]),
    ("ring.P1.PGL2", &[]),
    ("ring.P1.Godd", &[]),
    ("ring.P1pow", &["m"]),
    ("ring.PV.torus", &["m"]),
    ("ring.Dab.ambient", &["a", "b"]),
    ("ring.Dab", &["a", "b"]),
    ("ring.Dab.pushforward", &["a", "b"]),
    ("ring.hyperelliptic.even", &["g"]),
    ("ring.hyperelliptic.odd", &["g"]),
    ("ring.hyperelliptic.marked", &["g", "n"]),
];

fn get(params: &BTreeMap<String, i64>, k: &str) -> Result<i64> {
    params.get(k).copied().ok_or_else(|| Error::OutOfRange(format!("missing parameter {k}")))
}

/// `Z[c2, c3, tau1, D12..D1m] / (c3, tau1^2 + c2, D1j^2 - D1j tau1)`.
pub fn p1_power(m: i64) -> Result<RingPresentation> {
    if !(2..=8).contains(&m) {
        return Err(Error::OutOfRange(format!("m = {m}, need 2 <= m <= 8")));
    }
    let mut vars: Vec<(String, u32)> = vec![("c2".into(), 2), ("c3".into(), 3), ("tau1".into(), 1)];
    for j in 2..=m {
        vars.push((format!("D1{j}"), 1));
    }
    let table = VariableTable::new(&vars)?;
    let mut rels = vec!["c3".to_string(), "tau1^2 + c2".to_string()];
    for j in 2..=m {
        rels.push(format!("D1{j}^2 - D1{j}*tau1"));
    }
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    RingPresentation::parse(&format!("P1^{m}"), &table, &rels, None)
}

/// Relations of the product of the two projective bundles, `(c1, 2 c3, p_a(xi2a), p_b(xi2b))`.
pub fn dab_ambient(a: i64, b: i64) -> Result<RingPresentation> {
    if a < 1 || b < 1 {
        return Err(Error::OutOfRange(format!("a = {a}, b = {b}")));
    }
    let t = tables::dab();
    let pa = projective_polynomial(&chern_va(a as u32)?.symmetric, &t, "xi2a")?;
    let pb = projective_polynomial(&chern_va(b as u32)?.symmetric, &t, "xi2b")?;
    let mut rels = crate::poly::polys(&t, &["c1", "2*c3"]);
    rels.push(pa);
    rels.push(pb);
    RingPresentation::new(format!("Dab.ambient({a},{b})"), &t, rels, None)
}

pub fn hyperelliptic_even(g: i64) -> Result<RingPresentation> {
    even::check(g)?;
    let mut rels = even::base_relations();
    rels.extend(even::target(g));
    rels.push(even::reduction(g).poly);
    RingPresentation::new(format!("hyperelliptic.even({g})"), &tables::even(), rels, None)
}

pub fn hyperelliptic_odd(g: i64) -> Result<RingPresentation> {
    odd::check(g)?;
    let mut rels = odd::base_relations();
    rels.extend(odd::target(g));
    rels.push(odd::reduction().poly);
    RingPresentation::new(format!("hyperelliptic.odd({g})"), &tables::odd(), rels, None)
}

/// The two-factor ring with the relation list as printed.
pub fn dab_printed(a: i64, b: i64) -> Result<RingPresentation> {
    dab::check(a, b)?;
    let rels = dab::printed_relations(a, b).into_iter().map(|f| f.poly).collect();
    RingPresentation::new(format!("Dab({a},{b})"), &tables::dab(), rels, None)
}

/// The two-factor ring with relations taken from the pushforward formulas.
pub fn dab_pushforward(a: i64, b: i64) -> Result<RingPresentation> {
    dab::check(a, b)?;
    let rels = dab::pushforward_relations(a, b).into_iter().map(|f| f.poly).collect();
    RingPresentation::new(format!("Dab.pushforward({a},{b})"), &tables::dab(), rels, None)
}

/// Odd genus `g` with `n` marked Weierstrass points, as the square root of `O(-xi2n - xi2b)`
/// over the pushforward presentation with `a = n`, `b = g + 1 - n`.
pub fn hyperelliptic_marked(g: i64, n: i64) -> Result<RingPresentation> {
    odd::check(g)?;
    if !(n > 1 && 2 * n < g + 1) {
        return Err(Error::OutOfRange(format!("need 1 < n < (g+1)/2, got g = {g}, n = {n}")));
    }
    let base = dab_pushforward(n, g + 1 - n)?;
    let c1 = Polynomial::parse(base.table(), "-xi2a - xi2b")?;
    root_gerbe(&base, &c1, 2, "t")
}

pub fn catalog_presentation(id: &str, params: &BTreeMap<String, i64>) -> Result<RingPresentation> {
    let simple = |name: &str, vars: &[(&str, u32)], rels: &[&str], bound: Option<u32>| {
        RingPresentation::parse(name, &VariableTable::new(vars)?, rels, bound)
    };
    match id {
        "ring.BPGL2" => simple("BPGL2", &[("c2", 2), ("c3", 3)], &["2*c3"], None),
        "ring.BG.even" => simple("BG.even", &[("b1", 1), ("b2", 2), ("g1", 1)], &["2*g1", "g1*(g1 + b1)"], None),
        "ring.BG.odd" => simple("BG.odd", &[("c2", 2), ("g1", 1), ("t", 1)], &["2*g1"], None),
        "ring.BG.odd.full" => simple(
            "BG.odd.full",
            &[("c2", 2), ("c3", 3), ("g1", 1), ("t", 1)],
            &["2*g1", "g1^3 + c2*g1 + c3", "2*c3"],
            None,
        ),
        "ring.P1.PGL2" => simple("P1.PGL2", &[("c2", 2), ("c3", 3), ("tau", 1)], &["c3", "tau^2 + c2"], None),
        "ring.P1.Godd" => simple("P1.Godd", &[("tau", 1), ("g1", 1), ("t", 1)], &["2*g1", "g1*(g1 + tau)"], None),
        "ring.P1pow" => p1_power(get(params, "m")?),
        "ring.PV.torus" => {
            let m = get(params, "m")?;
            if m < 1 {
                return Err(Error::OutOfRange(format!("m = {m}")));
            }
            RingPresentation::parse(
                &format!("PV({m}).torus"),
                &tables::torus(),
                &["t1 + t2 + t3", "2*t1*t2*t3"],
                Some(2 * m as u32),
            )
        }
        "ring.Dab.ambient" => dab_ambient(get(params, "a")?, get(params, "b")?),
        "ring.Dab" => dab_printed(get(params, "a")?, get(params, "b")?),
        "ring.Dab.pushforward" => dab_pushforward(get(params, "a")?, get(params, "b")?),
        "ring.hyperelliptic.even" => hyperelliptic_even(get(params, "g")?),
        "ring.hyperelliptic.odd" => hyperelliptic_odd(get(params, "g")?),
        "ring.hyperelliptic.marked" => hyperelliptic_marked(get(params, "g")?, get(params, "n")?),
        other => Err(Error::UnknownId(format!("ring {other}"))),
    }
}

fn ring_anchor(id: &str) -> &'static str {
    match id {
        "ring.BPGL2" => "classifying stack of PGL2",
        "ring.BG.even" => "classifying stack of the even genus automorphism group",
        "ring.BG.odd" => "classifying stack of the odd genus automorphism group, c3 eliminated",
        "ring.BG.odd.full" => "classifying stack of the odd genus automorphism group",
        "ring.P1.PGL2" => "projective line over the classifying stack of PGL2",
        "ring.P1.Godd" => "projective line over the odd genus classifying stack",
        "ring.P1pow" => "power of the projective line with its diagonals",
        "ring.PV.torus" => "torus-level projective space of binary forms, truncated",
        "ring.Dab.ambient" => "product of two projective bundles of binary forms",
        "ring.Dab" => "two-factor ring, printed relation list",
        "ring.Dab.pushforward" => "two-factor ring, relations from the pushforward formulas",
        "ring.hyperelliptic.even" => "even genus, one marked point",
        "ring.hyperelliptic.odd" => "odd genus, one marked point",
        "ring.hyperelliptic.marked" => "odd genus, n marked points",
        _ => "",
    }
}

/// Scenario-file dump of a catalog ring; every line carries an anchor.
pub fn dump_ring(id: &str, params: &BTreeMap<String, i64>) -> Result<String> {
    let ring = catalog_presentation(id, params)?;
    let anchor = ring_anchor(id);
    let rel_anchors: Vec<String> = match id {
        "ring.Dab" => dab::printed_relations(get(params, "a")?, get(params, "b")?)
            .into_iter()
            .map(|f| format!("{} ({})", f.anchor, f.id))
            .collect(),
        "ring.Dab.pushforward" => dab::pushforward_relations(get(params, "a")?, get(params, "b")?)
            .into_iter()
            .map(|f| format!("{} ({})", f.anchor, f.id))
            .collect(),
        _ => Vec::new(),
    };
    // Relations may have been dropped as zero; only keep per-relation anchors when they line up.
    let rel_anchors = if rel_anchors.len() == ring.relations().len() { rel_anchors } else { Vec::new() };
    Ok(crate::presentation::dump_presentation(&ring, anchor, &rel_anchors))
}
