//! Step recorder shared by the scenarios.

use std::collections::HashMap;

use super::report::{GroupRow, Params, RingSpec, Step, Vars, Verdict, Witness, CERTIFICATE_LIMIT};
use crate::error::{Error, Result};
use crate::ideal::{ideal_equal, Certificate, DegreePiece, Ideal, OracleMode, DEFAULT_MONOMIAL_CAP};
use crate::poly::{same_table, Polynomial, Table};
use crate::presentation::{quotient_compare, RingMap, RingPresentation};

/// An ideal together with cached lattice pieces for the oracle.
pub struct Gens {
    ideal: Ideal,
    pieces: HashMap<u32, Option<DegreePiece>>,
}

impl Gens {
    pub fn new(table: &Table, gens: Vec<Polynomial>) -> Result<Self> {
        Ok(Gens { ideal: Ideal::new(table, gens)?, pieces: HashMap::new() })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn table(&self) -> &Table {
        self.ideal.table()
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec::of(self.table(), self.generators())
    }

    /// `None` when the degree is beyond the oracle's monomial cap.
    fn piece(&mut self, d: u32, track: bool) -> Result<Option<&DegreePiece>> {
        if !self.pieces.contains_key(&d) {
            let built = match DegreePiece::build(self.ideal.table(), self.ideal.generators(), d, DEFAULT_MONOMIAL_CAP, track) {
                Ok(p) => Some(p),
                Err(Error::DegreeTooLarge { .. }) => None,
                Err(e) => return Err(e),
            };
            self.pieces.insert(d, built);
        }
        Ok(self.pieces[&d].as_ref())
    }

    /// Membership decided according to `mode`. In `Both` mode a disagreement between
    /// the Groebner basis and the lattice oracle is an engine inconsistency.
    pub fn decide(&mut self, p: &Polynomial, mode: OracleMode, dmax: u32) -> Result<Option<Certificate>> {
        same_table(p.table(), self.table())?;
        let deg = p.degree().unwrap_or(0);
        match mode {
            OracleMode::Groebner => self.ideal.contains(p),
            OracleMode::Snf => {
                let gens = self.ideal.generators().to_vec();
                match self.piece(deg, true)? {
                    Some(piece) => {
                        let c = piece.certificate(p)?;
                        if let Some(c) = &c {
                            if !c.verifies(p, &gens) {
                                return Err(Error::EngineInconsistency(format!("oracle certificate for {p} does not expand back")));
                            }
                        }
                        Ok(c)
                    }
                    // Past the cap only the Groebner engine is available.
                    None => self.ideal.contains(p),
                }
            }
            OracleMode::Both => {
                let gb = self.ideal.contains(p)?;
                if deg <= dmax {
                    if let Some(piece) = self.piece(deg, false)? {
                        let lat = piece.contains(p)?;
                        if lat != gb.is_some() {
                            return Err(Error::EngineInconsistency(format!(
                                "membership of {p}: groebner says {}, lattice oracle says {lat}",
                                gb.is_some()
                            )));
                        }
                    }
                }
                Ok(gb)
            }
        }
    }
}

fn cert_strings(c: &Certificate) -> Option<Vec<(usize, String)>> {
    let v: Vec<(usize, String)> = c.terms.iter().map(|(i, p)| (*i, p.to_string())).collect();
    let len: usize = v.iter().map(|(_, s)| s.len()).sum();
    (len <= CERTIFICATE_LIMIT).then_some(v)
}

pub struct Run {
    pub params: Params,
    steps: Vec<Step>,
}

impl Run {
    pub fn new(params: Params) -> Self {
        Run { params, steps: Vec::new() }
    }

    pub fn mode(&self) -> OracleMode {
        self.params.oracle
    }

    pub fn dmax(&self) -> u32 {
        self.params.dmax
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn push(&mut self, anchor: impl Into<String>, verdict: Verdict, witness: Witness) {
        self.steps.push(Step { anchor: anchor.into(), verdict, witness });
    }

    pub fn note(&mut self, anchor: impl Into<String>, text: impl Into<String>) {
        self.push(anchor, Verdict::Info, Witness::Note { text: text.into() });
    }

    pub fn asserted(&mut self, anchor: impl Into<String>, text: impl Into<String>) {
        self.push(anchor, Verdict::Asserted, Witness::Note { text: text.into() });
    }

    /// Records `p in gens`; the step passes iff the outcome equals `expected`.
    pub fn member_expect(&mut self, anchor: impl Into<String>, gens: &mut Gens, p: &Polynomial, expected: bool) -> Result<bool> {
        let cert = gens.decide(p, self.mode(), self.dmax())?;
        let member = cert.is_some();
        let normal_form = if member { None } else { Some(gens.ideal().normal_form(p)?.to_string()) };
        self.push(
            anchor,
            Verdict::from_bool(member == expected),
            Witness::Membership {
                ring: gens.spec(),
                element: p.to_string(),
                member,
                expected,
                localized: false,
                certificate: cert.as_ref().and_then(cert_strings),
                normal_form,
            },
        );
        Ok(member)
    }

    pub fn member(&mut self, anchor: impl Into<String>, gens: &mut Gens, p: &Polynomial) -> Result<bool> {
        self.member_expect(anchor, gens, p, true)
    }

    /// `left - right` in the ideal.
    pub fn congruent(&mut self, anchor: impl Into<String>, gens: &mut Gens, left: &Polynomial, right: &Polynomial) -> Result<bool> {
        self.member(anchor, gens, &(left - right))
    }

    /// Membership after inverting odd integers.
    pub fn member_localized(&mut self, anchor: impl Into<String>, gens: &Gens, p: &Polynomial, expected: bool) -> Result<bool> {
        let member = gens.ideal().contains_localized_at_2(p)?;
        self.push(
            anchor,
            Verdict::from_bool(member == expected),
            Witness::Membership {
                ring: gens.spec(),
                element: p.to_string(),
                member,
                expected,
                localized: true,
                certificate: None,
                normal_form: None,
            },
        );
        Ok(member)
    }

    pub fn equal(&mut self, anchor: impl Into<String>, left: &Polynomial, right: &Polynomial) -> Result<bool> {
        same_table(left.table(), right.table())?;
        let equal = left == right;
        self.push(
            anchor,
            Verdict::from_bool(equal),
            Witness::Equality { vars: Vars::of(left.table()), left: left.to_string(), right: right.to_string(), equal },
        );
        Ok(equal)
    }

    /// Mutual containment of two generator lists, one step per generator (labelled by
    /// `names`), plus one step comparing the graded groups up to `dmax`.
    pub fn ideal_equality(
        &mut self,
        prefix: &str,
        left: (&str, &[String], &Gens),
        right: (&str, &[String], &Gens),
    ) -> Result<bool> {
        let (lname, lids, lg) = left;
        let (rname, rids, rg) = right;
        let cmp = ideal_equal(lg.ideal(), rg.ideal(), self.dmax(), self.mode())?;
        let record = |run: &mut Run, from: &Gens, ids: &[String], to: &Gens, tname: &str, certs: &[Option<Certificate>]| -> Result<()> {
            for (k, (g, c)) in from.generators().iter().zip(certs).enumerate() {
                let id = ids.get(k).cloned().unwrap_or_else(|| format!("#{k}"));
                let normal_form = if c.is_some() { None } else { Some(to.ideal().normal_form(g)?.to_string()) };
                run.push(
                    format!("{prefix}: {id} lies in the {tname} ideal"),
                    Verdict::from_bool(c.is_some()),
                    Witness::Membership {
                        ring: to.spec(),
                        element: g.to_string(),
                        member: c.is_some(),
                        expected: true,
                        localized: false,
                        certificate: c.as_ref().and_then(cert_strings),
                        normal_form,
                    },
                );
            }
            Ok(())
        };
        record(self, lg, lids, rg, rname, &cmp.left_in_right)?;
        record(self, rg, rids, lg, lname, &cmp.right_in_left)?;
        if !cmp.groups.is_empty() {
            let rows: Vec<GroupRow> = cmp
                .groups
                .iter()
                .map(|(l, r)| GroupRow { degree: l.degree, left: l.clone(), right: r.clone(), surjective: None })
                .collect();
            let same = rows.iter().all(|r| r.left == r.right);
            self.push(
                format!("{prefix}: graded groups of the {lname} and {rname} quotients agree up to degree {}", self.dmax()),
                Verdict::from_bool(same),
                Witness::Groups { left: lg.spec(), right: rg.spec(), map: None, rows },
            );
        }
        Ok(cmp.equal)
    }

    /// Groups of a verified map's source and target, with surjectivity per degree.
    pub fn quotient_compare(&mut self, anchor: impl Into<String>, map: &RingMap) -> Result<bool> {
        let cmp = quotient_compare(map, self.dmax())?;
        let rows: Vec<GroupRow> = cmp
            .degrees
            .iter()
            .enumerate()
            .map(|(d, c)| GroupRow { degree: d as u32, left: c.source.clone(), right: c.target.clone(), surjective: Some(c.surjective) })
            .collect();
        let iso = cmp.is_isomorphism();
        let images = map
            .source
            .table()
            .names()
            .iter()
            .zip(&map.images)
            .map(|(n, p)| (n.clone(), p.to_string()))
            .collect();
        self.push(
            anchor,
            Verdict::from_bool(iso),
            Witness::Groups {
                left: RingSpec::of(map.source.table(), map.source.relations()),
                right: RingSpec::of(map.target.table(), map.target.relations()),
                map: Some(images),
                rows,
            },
        );
        Ok(iso)
    }

    /// Records that each relation of the map's source vanishes in the target.
    pub fn map_certificates(&mut self, prefix: &str, map: &RingMap) -> Result<()> {
        let target = RingSpec::of(map.target.table(), map.target.relations());
        for (r, c) in map.source.relations().iter().zip(&map.relation_certificates) {
            let im = map.apply(r)?;
            self.push(
                format!("{prefix}: relation {r} maps into the target ideal"),
                Verdict::Pass,
                Witness::Membership {
                    ring: target.clone(),
                    element: im.to_string(),
                    member: true,
                    expected: true,
                    localized: false,
                    certificate: cert_strings(c),
                    normal_form: None,
                },
            );
        }
        Ok(())
    }

    /// Graded groups of a single presentation, recorded for information.
    pub fn groups_info(&mut self, anchor: impl Into<String>, ring: &RingPresentation) -> Result<()> {
        let rows: Vec<GroupRow> = (0..=self.dmax())
            .map(|d| {
                let g = ring.graded_group(d)?;
                Ok(GroupRow { degree: d, left: g.clone(), right: g, surjective: None })
            })
            .collect::<Result<_>>()?;
        let spec = RingSpec::of(ring.table(), ring.relations());
        self.push(anchor, Verdict::Info, Witness::Groups { left: spec.clone(), right: spec, map: None, rows });
        Ok(())
    }
}
