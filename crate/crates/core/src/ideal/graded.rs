//! Linear-algebra oracle: one graded piece of `Z[vars]/I` at a time.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::groebner::Certificate;
use super::lattice::{Echelon, SparseVec};
use crate::error::{Error, Result};
use crate::poly::{count_monomials, monomials_of_degree, same_table, Monomial, Polynomial, Table};

/// Default bound on the number of monomials in a single degree.
pub const DEFAULT_MONOMIAL_CAP: usize = 4000;

/// A finitely generated abelian group `Z^free_rank + sum Z/torsion_i`, torsion a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedGroup {
    pub degree: u32,
    pub free_rank: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

impl GradedGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Same abstract group, ignoring the degree label.
    pub fn same_group(&self, other: &GradedGroup) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub(crate) mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

/// The degree-`d` piece of an ideal as a lattice in the monomial basis.
#[derive(Debug, Clone)]
pub struct DegreePiece {
    table: Table,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon,
    /// Row provenance: (relation index, multiplier monomial) per inserted row.
    rows: Vec<(usize, Monomial)>,
}

impl DegreePiece {
    pub fn build(table: &Table, relations: &[Polynomial], d: u32, cap: usize, track: bool) -> Result<Self> {
        let n = count_monomials(table.weights(), d);
        if n > cap {
            return Err(Error::DegreeTooLarge { degree: d, monomials: n, cap });
        }
        let monomials = monomials_of_degree(table.weights(), d);
        let index: HashMap<Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut piece = DegreePiece {
            table: table.clone(),
            degree: d,
            monomials,
            index,
            echelon: Echelon::new(n, track),
            rows: Vec::new(),
        };
        let mut multipliers: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        let mut pending: Vec<(SparseVec, usize, Monomial)> = Vec::new();
        for (ri, r) in relations.iter().enumerate() {
            same_table(r.table(), table)?;
            if !r.is_homogeneous() {
                return Err(Error::NotHomogeneous(r.to_string()));
            }
            let Some(e) = r.degree() else { continue };
            if e > d {
                continue;
            }
            let mults = multipliers
                .entry(d - e)
                .or_insert_with(|| monomials_of_degree(table.weights(), d - e));
            for mu in mults.iter() {
                let row: SparseVec = {
                    let mut v: SparseVec =
                        r.terms().iter().map(|(m, c)| (piece.index[&m.mul(mu)], c.clone())).collect();
                    v.sort_by_key(|e| e.0);
                    v
                };
                pending.push((row, ri, mu.clone()));
            }
        }
        // Unit leading coefficients first keeps intermediate entries small.
        pending.sort_by_cached_key(|(row, _, _)| (!row[0].1.abs().is_one(), row.len()));
        for (row, ri, mu) in pending {
            piece.echelon.insert(row);
            piece.rows.push((ri, mu));
        }
        Ok(piece)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn vector(&self, p: &Polynomial) -> Result<SparseVec> {
        same_table(p.table(), &self.table)?;
        let mut v = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            if m.degree() != self.degree {
                return Err(Error::NotHomogeneous(format!("{p} is not of degree {}", self.degree)));
            }
            v.push((self.index[m], c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Ok(v)
    }

    /// Adds `p` to the spanning set (no provenance is recorded for it).
    pub fn insert_polynomial(&mut self, p: &Polynomial) -> Result<()> {
        if p.is_zero() {
            return Ok(());
        }
        let v = self.vector(p)?;
        self.echelon.insert(v);
        self.rows.push((usize::MAX, Monomial::one(self.table.len())));
        Ok(())
    }

    pub fn group(&self) -> GradedGroup {
        let (free_rank, torsion) = self.echelon.cokernel();
        GradedGroup { degree: self.degree, free_rank, torsion }
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        Ok(self.echelon.contains(&self.vector(p)?))
    }

    /// Membership with a certificate (requires a tracked piece).
    pub fn certificate(&self, p: &Polynomial) -> Result<Option<Certificate>> {
        if p.is_zero() {
            return Ok(Some(Certificate { terms: vec![] }));
        }
        let Some(combo) = self.echelon.solve(&self.vector(p)?) else { return Ok(None) };
        let mut per_rel: BTreeMap<usize, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (row, c) in combo {
            let (ri, mu) = &self.rows[row];
            per_rel.entry(*ri).or_default().push((mu.clone(), c));
        }
        let terms = per_rel
            .into_iter()
            .map(|(ri, t)| (ri, Polynomial::from_terms(&self.table, t)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Some(Certificate { terms }))
    }
}

/// Degree-`d` piece of `Z[vars]/(relations)` via Smith normal form.
pub fn graded_piece_group(table: &Table, relations: &[Polynomial], d: u32) -> Result<GradedGroup> {
    Ok(DegreePiece::build(table, relations, d, DEFAULT_MONOMIAL_CAP, false)?.group())
}

/// Oracle membership: `p` is homogeneous and lies in the degree piece of the ideal.
pub fn lattice_contains(table: &Table, relations: &[Polynomial], p: &Polynomial) -> Result<bool> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous(p.to_string()));
    }
    let Some(d) = p.degree() else { return Ok(true) };
    DegreePiece::build(table, relations, d, DEFAULT_MONOMIAL_CAP, false)?.contains(p)
}
