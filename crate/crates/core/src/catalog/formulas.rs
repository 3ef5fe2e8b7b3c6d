//! Closed-form classes, each tagged with an anchor naming the claim it encodes.

use std::collections::BTreeMap;

use super::tables;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Table};

/// A named class together with the claim it encodes.
#[derive(Debug, Clone)]
pub struct ClassFormula {
    pub id: String,
    pub anchor: String,
    pub poly: Polynomial,
}

fn parse(table: &Table, s: &str) -> Polynomial {
    Polynomial::parse(table, s).unwrap_or_else(|e| panic!("formula {s}: {e}"))
}

fn cf(id: &str, anchor: &str, table: &Table, s: &str) -> ClassFormula {
    ClassFormula { id: id.to_string(), anchor: anchor.to_string(), poly: parse(table, s) }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(what.to_string()))
    }
}

/// Classes for even genus `g` in `xi, b1, b2, g1`.
pub mod even {
    use super::*;

    pub fn check(g: i64) -> Result<()> {
        require(g >= 2 && g % 2 == 0, "even genus g >= 2 required")
    }

    /// Torsor relation identifying `xi` with a base class.
    pub fn reduction(g: i64) -> ClassFormula {
        cf("reduction.even", "torsor relation xi = (g-1) b1 + g1", &tables::even(), &format!("xi - {}*b1 - g1", g - 1))
    }

    /// Variant printed with the opposite sign on `g1`; equal modulo `2 g1`.
    pub fn reduction_alt(g: i64) -> ClassFormula {
        cf("reduction.even.alt", "torsor relation, sign variant", &tables::even(), &format!("xi - {}*b1 + g1", g - 1))
    }

    pub fn diag1(g: i64) -> ClassFormula {
        cf("uD1.even", "class of the first diagonal locus", &tables::even(), &format!("2*xi - {}*b1", 2 * g))
    }

    /// Variant of [`diag1`] carrying a `g1` term; equal modulo `2 g1`.
    pub fn diag1_alt(g: i64) -> ClassFormula {
        cf("uD1.even.alt", "first diagonal locus, variant with g1", &tables::even(), &format!("2*xi - {}*(b1 + g1)", 2 * g))
    }

    pub fn diag11(g: i64) -> ClassFormula {
        cf(
            "uD11.even",
            "class of the double diagonal locus",
            &tables::even(),
            &format!("xi^2 + xi*(g1 - {}*b1) + {}*b2", 2 * g, 4 * g * g),
        )
    }

    pub fn i1_alpha(g: i64) -> ClassFormula {
        cf("i1alpha.even", "pushforward of the orientation class", &tables::even(), &format!("(b1 + g1)*xi - {}*b2", 4 * g))
    }

    pub fn pi1_one(g: i64) -> ClassFormula {
        cf(
            "pi1_1.even",
            "pushforward of 1 from the first multiplication map",
            &tables::even(),
            &format!("{}*xi - {}*b1", 2 * (2 * g - 1), 2 * g * (2 * g - 1)),
        )
    }

    pub fn pi1_xi(g: i64) -> ClassFormula {
        cf(
            "pi1_xi.even",
            "pushforward of xi from the first multiplication map",
            &tables::even(),
            &format!("xi^2 - b1*xi - {}*b2", 2 * g * (2 * g - 2)),
        )
    }

    /// Torsion relations of the base classifying space.
    pub fn base_relations() -> Vec<Polynomial> {
        crate::poly::polys(&tables::even(), &["2*g1", "g1*(g1 + b1)"])
    }

    pub fn target(g: i64) -> Vec<Polynomial> {
        crate::poly::polys(
            &tables::even(),
            &["2*b1", "2*g1", &format!("{}*b2", 4 * g), "g1*(g1 + b1)", "b1*(b1 + g1)"],
        )
    }

    /// Quadratic factor of the projective bundle relation for the summand spanned by
    /// `X^(2g-i) Y^i` and `X^i Y^(2g-i)`, with optional `g1` component of its first class.
    pub fn pair_factor(g: i64, i: i64, lift: bool) -> Polynomial {
        let table = tables::even();
        let mut s = format!("xi^2 - {}*b1*xi + {}*b1^2 + {}*b2", 2 * g, i * (2 * g - i), 4 * (g - i) * (g - i));
        if lift {
            s.push_str(" + g1*xi");
        }
        parse(&table, &s)
    }

    /// Projective bundle relation as a product: the `i = 0` factor is the double diagonal
    /// class, then one quadratic per pair `0 < i < g`, then the linear middle factor.
    pub fn projective_relation(g: i64, lifts: &[bool]) -> Polynomial {
        let mut p = diag11(g).poly;
        for i in 1..g {
            p = &p * &pair_factor(g, i, lifts.get(i as usize - 1).copied().unwrap_or(false));
        }
        &p * &parse(&tables::even(), &format!("xi - {}*b1", g))
    }
}

/// Classes for odd genus `g` in `xi, c2, c3, g1, t`.
pub mod odd {
    use super::*;

    pub fn check(g: i64) -> Result<()> {
        require(g >= 3 && g % 2 == 1, "odd genus g >= 3 required")
    }

    pub fn reduction() -> ClassFormula {
        cf("reduction.odd", "torsor relation xi = -2t - g1", &tables::odd(), "xi + 2*t + g1")
    }

    pub fn reduction_flipped() -> ClassFormula {
        cf("reduction.odd.flipped", "torsor relation with the opposite sign", &tables::odd(), "xi - 2*t - g1")
    }

    pub fn diag1() -> ClassFormula {
        cf("uD1.odd", "class of the first diagonal locus", &tables::odd(), "2*xi")
    }

    pub fn diag11(g: i64) -> ClassFormula {
        cf(
            "uD11.odd",
            "class of the double diagonal locus",
            &tables::odd(),
            &format!("xi^2 + g1*xi + {}*c2 + g1^2", g * g),
        )
    }

    /// Class of the locus where the two quadratic factors agree up to the torsion line.
    pub fn xy() -> ClassFormula {
        cf("XY.odd", "second Chern class of the twisted rank two quotient", &tables::odd(), "xi^2 + g1*xi + c2 + g1^2")
    }

    pub fn i1_alpha(g: i64) -> ClassFormula {
        cf("i1alpha.odd", "pushforward of the orientation class", &tables::odd(), &format!("-{}*c2", 2 * g))
    }

    pub fn pi1_one(g: i64) -> ClassFormula {
        cf("pi1_1.odd", "pushforward of 1 from the first multiplication map", &tables::odd(), &format!("{}*xi", 2 * (2 * g - 1)))
    }

    pub fn pi1_tau(g: i64) -> ClassFormula {
        cf(
            "pi1_tau.odd",
            "pushforward of tau from the first multiplication map",
            &tables::odd(),
            &format!("2*xi^2 - {}*c2", 2 * g * (g - 1)),
        )
    }

    /// The constant term is taken as a multiple of `c2^2`, the only homogeneous choice.
    pub fn pi2_xi2sq(g: i64) -> ClassFormula {
        cf(
            "pi2_xi2sq.odd",
            "pushforward of xi2^2 from the second multiplication map",
            &tables::odd(),
            &format!("xi^4 + {}*c2*xi^2 + c3*xi + {}*c2^2", 1 + 2 * g * (g - 1), g * g * (g - 1) * (g - 1)),
        )
    }

    pub fn base_relations() -> Vec<Polynomial> {
        crate::poly::polys(&tables::odd(), &["2*g1", "g1^3 + c2*g1 + c3", "2*c3"])
    }

    pub fn target(g: i64) -> Vec<Polynomial> {
        crate::poly::polys(&tables::odd(), &["2*g1", "4*t", &format!("g1^2 + {}*c2", g)])
    }

    pub fn pair_factor(g: i64, i: i64, lift: bool) -> Polynomial {
        let mut s = format!("xi^2 + {}*c2", (g - i) * (g - i));
        if lift {
            s.push_str(" + g1*xi");
        }
        parse(&tables::odd(), &s)
    }

    pub fn projective_relation(g: i64, lifts: &[bool]) -> Polynomial {
        let mut p = diag11(g).poly;
        for i in 1..g {
            p = &p * &pair_factor(g, i, lifts.get(i as usize - 1).copied().unwrap_or(false));
        }
        &p * &parse(&tables::odd(), "xi")
    }
}

/// Classes on the product of projective bundles of binary forms of degrees `2a`, `2b`,
/// in `c1, c2, c3, xi2a, xi2b`.
pub mod dab {
    use super::*;

    pub fn check(a: i64, b: i64) -> Result<()> {
        require(a >= 2 && b >= 2, "a, b >= 2 required")
    }

    fn swap(s: &str) -> String {
        s.replace("xi2a", "@").replace("xi2b", "xi2a").replace('@', "xi2b")
    }

    pub fn f1_one(a: i64) -> String {
        format!("{}*xi2a", 2 * (2 * a - 1))
    }

    pub fn f1_tau(a: i64) -> String {
        format!("2*xi2a^2 - {}*c2", 2 * a * (a - 1))
    }

    pub fn f2_xi2sq(a: i64) -> String {
        format!(
            "xi2a^4 + {}*c2*xi2a^2 + c3*xi2a + {}*c2^2",
            1 + 2 * a * (a - 1),
            a * a * (a - 1) * (a - 1)
        )
    }

    pub fn m1_one(a: i64, b: i64) -> String {
        format!("{}*xi2a + {}*xi2b", 2 * b, 2 * a)
    }

    pub fn m1_tau(a: i64, b: i64) -> String {
        format!("2*xi2a*xi2b - {}*c2", 2 * a * b)
    }

    /// Coefficient of `t1^2` in the product of the two first W classes; equals the
    /// pushforward of 1 from the second mixed multiplication map.
    pub fn alpha2(a: i64, b: i64) -> String {
        format!(
            "{}*xi2a*xi2b + {}*xi2a^2 + {}*xi2b^2 + {}*c2",
            (2 * a - 1) * (2 * b - 1),
            b * (2 * b - 1),
            a * (2 * a - 1),
            a * b * (a + b - 1)
        )
    }

    /// Coefficient of `t1`.
    pub fn alpha1(a: i64, b: i64) -> String {
        format!(
            "xi2a*xi2b*({}*xi2a + {}*xi2b) + c2*({}*xi2a + {}*xi2b) - {}*c2*({}*xi2a + {}*xi2b) + {}*c3",
            2 * b - 1,
            2 * a - 1,
            (2 * a - 1) * b * b,
            (2 * b - 1) * a * a,
            (2 * a - 1) * (2 * b - 1),
            b,
            a,
            a * b
        )
    }

    /// Coefficient of `1`.
    pub fn alpha0(a: i64, b: i64) -> String {
        format!(
            "xi2a^2*xi2b^2 + c2*({}*xi2a^2 + {}*xi2b^2) + {}*c2^2 + c3*({}*xi2a + {}*xi2b)",
            b * b,
            a * a,
            a * a * b * b,
            b,
            a
        )
    }

    pub fn m2_xi2sq(a: i64, b: i64) -> String {
        format!(
            "xi2a^2*xi2b^2 - c2*({}*xi2a^2 + {}*xi2b^2) - {}*c2*xi2a*xi2b + {}*c2^2 + c3*({}*xi2a + {}*xi2b)",
            b * (b - 1),
            a * (a - 1),
            (2 * a - 1) * (2 * b - 1),
            a * b * (a * b - a - b + 1),
            b,
            a
        )
    }

    /// Relations obtained from the pushforward formulas, keyed by id.
    pub fn pushforward_relations(a: i64, b: i64) -> Vec<ClassFormula> {
        let t = tables::dab();
        vec![
            cf("c1", "first Chern class of the conic bundle vanishes", &t, "c1"),
            cf("2c3", "two-torsion of c3", &t, "2*c3"),
            cf("F1_1", "pushforward of 1 along the first diagonal, first factor", &t, &f1_one(a)),
            cf("F1_tau", "pushforward of tau along the first diagonal, first factor", &t, &f1_tau(a)),
            cf("F2_xi2sq", "pushforward of xi2^2 along the second diagonal, first factor", &t, &f2_xi2sq(a)),
            cf("G1_1", "pushforward of 1 along the first diagonal, second factor", &t, &swap(&f1_one(b))),
            cf("G1_tau", "pushforward of tau along the first diagonal, second factor", &t, &swap(&f1_tau(b))),
            cf("G2_xi2sq", "pushforward of xi2^2 along the second diagonal, second factor", &t, &swap(&f2_xi2sq(b))),
            cf("M1_1", "pushforward of 1 along the first mixed map", &t, &m1_one(a, b)),
            cf("M1_tau", "pushforward of tau along the first mixed map", &t, &m1_tau(a, b)),
            cf("M2_1", "pushforward of 1 along the second mixed map", &t, &alpha2(a, b)),
            cf("M2_xi2", "pushforward of xi2 along the second mixed map", &t, &alpha1(a, b)),
            cf("M2_xi2sq", "pushforward of xi2^2 along the second mixed map", &t, &m2_xi2sq(a, b)),
        ]
    }

    /// The relation list of the final presentation, exactly as printed.
    pub fn printed_relations(a: i64, b: i64) -> Vec<ClassFormula> {
        let t = tables::dab();
        let f_third = |a: i64| format!("xi2a^4 + c2*xi2a^2 + c3*xi2a + {}*c2^2", 3 * a * a * (a - 1) * (a - 1));
        vec![
            cf("c1", "c1", &t, "c1"),
            cf("2c3", "2 c3", &t, "2*c3"),
            cf("Fa1", "2(2a-1) xi2a", &t, &f1_one(a)),
            cf("Fa2", "2 xi2a^2 - a(2a-2) c2", &t, &format!("2*xi2a^2 - {}*c2", a * (2 * a - 2))),
            cf("Fa3", "xi2a^4 + c2 xi2a^2 + c3 xi2a + 3a^2(a-1)^2 c2^2", &t, &f_third(a)),
            cf("Fb1", "2(2b-1) xi2b", &t, &swap(&f1_one(b))),
            cf("Fb2", "2 xi2b^2 - b(2b-2) c2", &t, &swap(&format!("2*xi2a^2 - {}*c2", b * (2 * b - 2)))),
            cf("Fb3", "xi2b^4 + c2 xi2b^2 + c3 xi2b + 3b^2(b-1)^2 c2^2", &t, &swap(&f_third(b))),
            cf("M1", "2b xi2a + 2a xi2b", &t, &m1_one(a, b)),
            cf("M2", "2 xi2a xi2b - 2ab c2", &t, &m1_tau(a, b)),
            cf("M3", "(2a-1)(2b-1) xi2a xi2b + b(2b-1) xi2a^2 + a(2a-1) xi2b^2 + ab(a+b-1) c2", &t, &alpha2(a, b)),
            cf(
                "M4",
                "xi2a xi2b (xi2a + xi2b) + c2 (b xi2a + a xi2b) + c2 (b^2 xi2a + a^2 xi2b) - ab c3",
                &t,
                &format!(
                    "xi2a*xi2b*(xi2a + xi2b) + c2*({b}*xi2a + {a}*xi2b) + c2*({}*xi2a + {}*xi2b) - {}*c3",
                    b * b,
                    a * a,
                    a * b
                ),
            ),
            cf(
                "M5",
                "xi2a^2 xi2b^2 + c2(b^2 xi2a^2 + a^2 xi2b^2) - c2(b(2b-1) xi2a^2 + a(2a-1) xi2b^2) - (2a-1)(2b-1) c2 xi2a xi2b + c3(b xi2a + a xi2b) + ab c2^2 - ab(a+b-1) c2^2",
                &t,
                &format!(
                    "xi2a^2*xi2b^2 + c2*({}*xi2a^2 + {}*xi2b^2) - c2*({}*xi2a^2 + {}*xi2b^2) - {}*c2*xi2a*xi2b + c3*({b}*xi2a + {a}*xi2b) + {}*c2^2 - {}*c2^2",
                    b * b,
                    a * a,
                    b * (2 * b - 1),
                    a * (2 * a - 1),
                    (2 * a - 1) * (2 * b - 1),
                    a * b,
                    a * b * (a + b - 1)
                ),
            ),
        ]
    }

    /// Generators of the ideal after inverting odd integers, when `a` and `b` are both even.
    pub fn localized_even_relations(a: i64, b: i64) -> Vec<Polynomial> {
        let third = "xi2a^4 + c2*xi2a^2 + c3*xi2a";
        crate::poly::polys(
            &tables::dab(),
            &[
                "c1",
                "2*c3",
                "2*xi2a",
                "2*xi2b",
                &format!("{}*c2", 2 * a),
                &format!("{}*c2", 2 * b),
                third,
                &swap(third),
                "xi2a*xi2b",
            ],
        )
    }

    pub fn parse_in(s: &str) -> Polynomial {
        parse(&tables::dab(), s)
    }
}

/// Lookup of the simple named classes by id, with integer parameters.
pub fn class_formula(id: &str, params: &BTreeMap<String, i64>) -> Result<ClassFormula> {
    let get = |k: &str| {
        params.get(k).copied().ok_or_else(|| Error::OutOfRange(format!("missing parameter {k}")))
    };
    let f = match id {
        "reduction.even" | "uD1.even" | "uD1.even.alt" | "uD11.even" | "i1alpha.even" | "pi1_1.even"
        | "pi1_xi.even" | "reduction.even.alt" => {
            let g = get("g")?;
            even::check(g)?;
            match id {
                "reduction.even" => even::reduction(g),
                "reduction.even.alt" => even::reduction_alt(g),
                "uD1.even" => even::diag1(g),
                "uD1.even.alt" => even::diag1_alt(g),
                "uD11.even" => even::diag11(g),
                "i1alpha.even" => even::i1_alpha(g),
                "pi1_1.even" => even::pi1_one(g),
                _ => even::pi1_xi(g),
            }
        }
        "reduction.odd" => odd::reduction(),
        "uD1.odd" => odd::diag1(),
        "XY.odd" => odd::xy(),
        "uD11.odd" | "i1alpha.odd" | "pi1_1.odd" | "pi1_tau.odd" | "pi2_xi2sq.odd" => {
            let g = get("g")?;
            odd::check(g)?;
            match id {
                "uD11.odd" => odd::diag11(g),
                "i1alpha.odd" => odd::i1_alpha(g),
                "pi1_1.odd" => odd::pi1_one(g),
                "pi1_tau.odd" => odd::pi1_tau(g),
                _ => odd::pi2_xi2sq(g),
            }
        }
        other => {
            let (a, b) = (get("a"), get("b"));
            if let (Ok(a), Ok(b)) = (a, b) {
                dab::check(a, b)?;
                if let Some(f) = dab::pushforward_relations(a, b).into_iter().find(|f| f.id == other) {
                    return Ok(f);
                }
            }
            return Err(Error::UnknownId(format!("class formula {other}")));
        }
    };
    Ok(f)
}
