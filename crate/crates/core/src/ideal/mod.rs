//! Ideal membership and equality over Z, with two independent engines: truncated
//! strong Groebner bases and the per-degree Smith normal form oracle.

mod graded;
mod groebner;
pub mod lattice;

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

pub use graded::{graded_piece_group, lattice_contains, DegreePiece, GradedGroup, DEFAULT_MONOMIAL_CAP};
pub use groebner::{Certificate, GroebnerBasis};

use crate::error::{Error, Result};
use crate::poly::{same_table, Polynomial, Table};

/// Which engine decides membership questions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    Groebner,
    Snf,
    #[default]
    Both,
}

impl FromStr for OracleMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "groebner" => Ok(OracleMode::Groebner),
            "snf" => Ok(OracleMode::Snf),
            "both" => Ok(OracleMode::Both),
            other => Err(Error::UnknownId(format!("oracle mode {other}"))),
        }
    }
}

impl fmt::Display for OracleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleMode::Groebner => "groebner",
            OracleMode::Snf => "snf",
            OracleMode::Both => "both",
        })
    }
}

/// Homogeneous ideal with a lazily computed, cached Groebner basis.
#[derive(Debug)]
pub struct Ideal {
    table: Table,
    generators: Vec<Polynomial>,
    basis: Mutex<Option<Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            table: self.table.clone(),
            generators: self.generators.clone(),
            basis: Mutex::new(self.basis.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(table: &Table, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            same_table(g.table(), table)?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        Ok(Ideal { table: table.clone(), generators, basis: Mutex::new(None) })
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Basis valid up to at least `cap`, computed once per larger cap.
    pub fn basis(&self, cap: u32) -> Result<Arc<GroebnerBasis>> {
        let mut slot = self.basis.lock().unwrap();
        if let Some(b) = slot.as_ref() {
            if b.degree_cap() >= cap {
                return Ok(b.clone());
            }
        }
        let b = Arc::new(GroebnerBasis::compute_in(&self.table, &self.generators, cap, true)?);
        *slot = Some(b.clone());
        Ok(b)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let cap = p.degree().unwrap_or(0);
        self.basis(cap)?.normal_form(p)
    }

    /// `Some(certificate)` iff `p` lies in the ideal. The certificate is re-expanded and
    /// checked before it is returned.
    pub fn contains(&self, p: &Polynomial) -> Result<Option<Certificate>> {
        same_table(p.table(), &self.table)?;
        if p.is_zero() {
            return Ok(Some(Certificate { terms: vec![] }));
        }
        let cap = p.degree().unwrap_or(0);
        let (nf, cert) = self.basis(cap)?.reduce_with_cofactors(p)?;
        if !nf.is_zero() {
            return Ok(None);
        }
        if !cert.verifies(p, &self.generators) {
            return Err(Error::EngineInconsistency(format!("certificate for {p} does not expand back")));
        }
        Ok(Some(cert))
    }

    pub fn contains_bool(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.contains(p)?.is_some())
    }

    /// Membership of `p` after inverting every odd integer: some odd `u` has `u*p` in the ideal.
    pub fn contains_localized_at_2(&self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous(p.to_string()));
        }
        let d = p.degree().unwrap();
        let group = graded_piece_group(&self.table, &self.generators, d)?;
        // The class of p has odd order iff it is killed by the odd part of the exponent.
        let mut odd = group.torsion.last().cloned().unwrap_or_else(|| 1.into());
        while (&odd % 2u32) == 0.into() {
            odd /= 2;
        }
        self.contains_bool(&p.scale(&odd))
    }
}

/// One-shot membership test with certificate.
pub fn ideal_contains(p: &Polynomial, generators: &[Polynomial]) -> Result<Option<Certificate>> {
    Ideal::new(p.table(), generators.to_vec())?.contains(p)
}

/// Canonical normal form of `p` modulo the ideal generated by `generators`.
pub fn normal_form(p: &Polynomial, generators: &[Polynomial]) -> Result<Polynomial> {
    Ideal::new(p.table(), generators.to_vec())?.normal_form(p)
}

/// Outcome of comparing two ideals of the same ambient ring.
#[derive(Debug, Clone)]
pub struct IdealComparison {
    pub equal: bool,
    /// For each generator of the left ideal: its certificate in the right ideal, if any.
    pub left_in_right: Vec<Option<Certificate>>,
    pub right_in_left: Vec<Option<Certificate>>,
    /// Oracle groups `(left, right)` per degree `0..=dmax`, empty in Groebner-only mode.
    pub groups: Vec<(GradedGroup, GradedGroup)>,
}

fn oracle_membership(
    pieces: &mut Vec<Option<DegreePiece>>,
    table: &Table,
    gens: &[Polynomial],
    p: &Polynomial,
    track: bool,
) -> Result<Option<Certificate>> {
    let Some(d) = p.degree() else { return Ok(Some(Certificate { terms: vec![] })) };
    let d = d as usize;
    if pieces.len() <= d {
        pieces.resize(d + 1, None);
    }
    if pieces[d].is_none() {
        pieces[d] = Some(DegreePiece::build(table, gens, d as u32, DEFAULT_MONOMIAL_CAP, track)?);
    }
    pieces[d].as_ref().unwrap().certificate(p)
}

/// Mutual containment, cross-checked against the Smith oracle up to `dmax`.
/// A disagreement between the engines is an `EngineInconsistency` error.
pub fn ideal_equal(left: &Ideal, right: &Ideal, dmax: u32, mode: OracleMode) -> Result<IdealComparison> {
    same_table(left.table(), right.table())?;
    let table = left.table().clone();
    let mut lp: Vec<Option<DegreePiece>> = Vec::new();
    let mut rp: Vec<Option<DegreePiece>> = Vec::new();
    let use_gb = mode != OracleMode::Snf;
    let use_oracle = mode != OracleMode::Groebner;

    let check = |gens_of: &Ideal, target: &Ideal, pieces: &mut Vec<Option<DegreePiece>>| -> Result<Vec<Option<Certificate>>> {
        let mut out = Vec::new();
        for g in gens_of.generators() {
            let deg = g.degree().unwrap_or(0);
            let gb = if use_gb { Some(target.contains(g)?) } else { None };
            let oracle = if use_oracle && (deg <= dmax || !use_gb) {
                Some(oracle_membership(pieces, &table, target.generators(), g, !use_gb)?)
            } else {
                None
            };
            if let (Some(c), Some(o)) = (&gb, &oracle) {
                if c.is_some() != o.is_some() {
                    return Err(Error::EngineInconsistency(format!(
                        "membership of {g}: groebner says {}, lattice oracle says {}",
                        c.is_some(),
                        o.is_some()
                    )));
                }
            }
            let cert = match gb {
                Some(c) => c,
                None => {
                    let c = oracle.flatten();
                    if let Some(c) = &c {
                        if !c.verifies(g, target.generators()) {
                            return Err(Error::EngineInconsistency(format!(
                                "oracle certificate for {g} does not expand back"
                            )));
                        }
                    }
                    c
                }
            };
            out.push(cert);
        }
        Ok(out)
    };
    let left_in_right = check(left, right, &mut rp)?;
    let right_in_left = check(right, left, &mut lp)?;
    let equal = left_in_right.iter().chain(&right_in_left).all(|c| c.is_some());
    let mut groups = Vec::new();
    if use_oracle {
        for d in 0..=dmax {
            let gl = graded_piece_group(&table, left.generators(), d)?;
            let gr = graded_piece_group(&table, right.generators(), d)?;
            if equal && gl != gr {
                return Err(Error::EngineInconsistency(format!(
                    "ideals judged equal but degree {d} groups differ: {gl} vs {gr}"
                )));
            }
            groups.push((gl, gr));
        }
    }
    Ok(IdealComparison { equal, left_in_right, right_in_left, groups })
}
