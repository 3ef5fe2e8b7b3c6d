//! Relation lists as they appear in the proofs, instantiated at given parameters.

use crate::catalog::formulas::{dab, even, odd, ClassFormula};
use crate::error::{Error, Result};

/// The torsor relation, the first diagonal classes, the second diagonal generators and the
/// projective bundle relation (factored, with the double diagonal class as pinned factor).
pub fn build_relations_n1(g: i64) -> Result<Vec<ClassFormula>> {
    if g < 2 {
        return Err(Error::OutOfRange(format!("g = {g}, need g >= 2")));
    }
    if g % 2 == 0 {
        let p = ClassFormula {
            id: "p.even".into(),
            anchor: "projective bundle relation as a product of quadratic factors".into(),
            poly: even::projective_relation(g, &[]),
        };
        Ok(vec![
            even::reduction(g),
            even::diag1(g),
            even::diag11(g),
            even::i1_alpha(g),
            even::pi1_one(g),
            even::pi1_xi(g),
            p,
        ])
    } else {
        odd::check(g)?;
        let p = ClassFormula {
            id: "p.odd".into(),
            anchor: "projective bundle relation as a product of quadratic factors".into(),
            poly: odd::projective_relation(g, &[]),
        };
        Ok(vec![
            odd::reduction(),
            odd::diag1(),
            odd::diag11(g),
            odd::i1_alpha(g),
            odd::pi1_one(g),
            odd::pi1_tau(g),
            odd::pi2_xi2sq(g),
            p,
        ])
    }
}

/// The printed relation list of the two-factor ring.
pub fn build_relations_dab(a: i64, b: i64) -> Result<Vec<ClassFormula>> {
    dab::check(a, b)?;
    Ok(dab::printed_relations(a, b))
}

/// Base relations of the classifying stack for the parity of `g`, as formulas.
pub fn base_relations_n1(g: i64) -> Vec<ClassFormula> {
    let polys = if g % 2 == 0 { even::base_relations() } else { odd::base_relations() };
    polys
        .into_iter()
        .map(|p| ClassFormula { id: format!("base {p}"), anchor: "relation of the classifying stack".into(), poly: p })
        .collect()
}
