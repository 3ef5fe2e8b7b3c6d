//! Reports: per-step verdicts with witnesses that can be re-checked offline.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{GradedGroup, Ideal, OracleMode};
use crate::poly::{Polynomial, Table, VariableTable};
use crate::presentation::{check_ring_map, quotient_compare, RingPresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A claim taken on trust (geometric input), not checked by the engine.
    Asserted,
    /// Informational; never affects the overall verdict.
    Info,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Asserted => "ASSERTED",
            Verdict::Info => "INFO",
        }
    }
}

/// Variables with degrees, in table order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vars(pub Vec<(String, u32)>);

impl Vars {
    pub fn of(table: &Table) -> Self {
        Vars(table.entries().map(|(n, w)| (n.to_string(), w)).collect())
    }

    pub fn table(&self) -> Result<Table> {
        VariableTable::new(&self.0)
    }
}

/// A presentation as it appears in a report: variables and the exact generator list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub vars: Vars,
    pub relations: Vec<String>,
}

impl RingSpec {
    pub fn of(table: &Table, relations: &[Polynomial]) -> Self {
        RingSpec { vars: Vars::of(table), relations: relations.iter().map(|p| p.to_string()).collect() }
    }

    pub fn build(&self) -> Result<(Table, Vec<Polynomial>)> {
        let table = self.vars.table()?;
        let rels = self.relations.iter().map(|s| Polynomial::parse(&table, s)).collect::<Result<_>>()?;
        Ok((table, rels))
    }
}

/// One row of a group comparison. `surjective` is set when a ring map is involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRow {
    pub degree: u32,
    pub left: GradedGroup,
    pub right: GradedGroup,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surjective: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `element` in the ideal generated by `ring.relations`; with `localized`, after
    /// inverting odd integers.
    Membership {
        ring: RingSpec,
        element: String,
        member: bool,
        expected: bool,
        localized: bool,
        /// `(generator index, cofactor)`; omitted when too large to be useful.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        certificate: Option<Vec<(usize, String)>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        normal_form: Option<String>,
    },
    /// `left == right` as polynomials.
    Equality { vars: Vars, left: String, right: String, equal: bool },
    /// Graded pieces of two rings up to `rows.len() - 1`, optionally under a map
    /// given by the images of the left variables.
    Groups {
        left: RingSpec,
        right: RingSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        map: Option<Vec<(String, String)>>,
        rows: Vec<GroupRow>,
    },
    Note { text: String },
}

/// Certificates longer than this (in printed characters) are left out of reports.
pub const CERTIFICATE_LIMIT: usize = 20_000;

impl Witness {
    pub fn summary(&self) -> String {
        match self {
            Witness::Membership { element, member, localized, normal_form, .. } => {
                let loc = if *localized { " (localized at 2)" } else { "" };
                if *member {
                    format!("{} in ideal{loc}", clip(element))
                } else {
                    let nf = normal_form.as_deref().map(|s| format!(", normal form {}", clip(s))).unwrap_or_default();
                    format!("{} NOT in ideal{loc}{nf}", clip(element))
                }
            }
            Witness::Equality { left, right, equal, .. } => {
                format!("{} {} {}", clip(left), if *equal { "==" } else { "!=" }, clip(right))
            }
            Witness::Groups { rows, map, .. } => {
                let body: Vec<String> = rows
                    .iter()
                    .map(|r| {
                        let s = if r.surjective == Some(false) { " (not onto)" } else { "" };
                        if r.left == r.right || r.left.same_group(&r.right) {
                            format!("{}:{}{s}", r.degree, r.left)
                        } else {
                            format!("{}:{} vs {}{s}", r.degree, r.left, r.right)
                        }
                    })
                    .collect();
                let via = if map.is_some() { " via map" } else { "" };
                format!("groups{via} [{}]", body.join(", "))
            }
            Witness::Note { text } => text.clone(),
        }
    }

    /// The verdict the recorded data implies, for witnesses that decide one.
    pub fn implied_verdict(&self) -> Option<Verdict> {
        match self {
            Witness::Membership { member, expected, .. } => Some(Verdict::from_bool(member == expected)),
            Witness::Equality { equal, .. } => Some(Verdict::from_bool(*equal)),
            Witness::Groups { rows, .. } => Some(Verdict::from_bool(
                rows.iter().all(|r| r.left.same_group(&r.right) && r.surjective != Some(false)),
            )),
            Witness::Note { .. } => None,
        }
    }

    /// Recomputes the witness from its recorded inputs; true iff the recorded data is reproduced.
    pub fn recheck(&self) -> Result<bool> {
        match self {
            Witness::Membership { ring, element, member, localized, certificate, .. } => {
                let (table, rels) = ring.build()?;
                let p = Polynomial::parse(&table, element)?;
                let ideal = Ideal::new(&table, rels.clone())?;
                let now = if *localized {
                    ideal.contains_localized_at_2(&p)?
                } else if let (true, Some(cert)) = (*member, certificate) {
                    let terms = cert
                        .iter()
                        .map(|(i, s)| Ok((*i, Polynomial::parse(&table, s)?)))
                        .collect::<Result<Vec<_>>>()?;
                    crate::ideal::Certificate { terms }.verifies(&p, &rels)
                } else {
                    ideal.contains_bool(&p)?
                };
                Ok(now == *member)
            }
            Witness::Equality { vars, left, right, equal } => {
                let table = vars.table()?;
                let now = Polynomial::parse(&table, left)? == Polynomial::parse(&table, right)?;
                Ok(now == *equal)
            }
            Witness::Groups { left, right, map, rows } => {
                let (lt, lr) = left.build()?;
                let (rt, rr) = right.build()?;
                let dmax = rows.len().saturating_sub(1) as u32;
                let lp = RingPresentation::new("left", &lt, lr, None)?;
                let rp = RingPresentation::new("right", &rt, rr, None)?;
                let fresh: Vec<GroupRow> = match map {
                    Some(images) => {
                        let ims = images
                            .iter()
                            .map(|(v, s)| Ok((v.as_str(), Polynomial::parse(&rt, s)?)))
                            .collect::<Result<Vec<_>>>()?;
                        let m = check_ring_map(&lp, &rp, &ims)?;
                        quotient_compare(&m, dmax)?
                            .degrees
                            .into_iter()
                            .enumerate()
                            .map(|(d, c)| GroupRow {
                                degree: d as u32,
                                left: c.source,
                                right: c.target,
                                surjective: Some(c.surjective),
                            })
                            .collect()
                    }
                    None => (0..=dmax)
                        .map(|d| {
                            Ok(GroupRow { degree: d, left: lp.graded_group(d)?, right: rp.graded_group(d)?, surjective: None })
                        })
                        .collect::<Result<_>>()?,
                };
                Ok(&fresh == rows)
            }
            Witness::Note { .. } => Ok(true),
        }
    }
}

fn clip(s: &str) -> String {
    const MAX: usize = 160;
    if s.chars().count() <= MAX {
        s.to_string()
    } else {
        let head: String = s.chars().take(MAX).collect();
        format!("{head}...")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub anchor: String,
    pub verdict: Verdict,
    pub witness: Witness,
}

/// Scenario inputs. Parameters a scenario does not read are left empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    pub dmax: u32,
    pub oracle: OracleMode,
}

impl Default for Params {
    fn default() -> Self {
        Params { g: None, n: None, a: None, b: None, m: None, dmax: 8, oracle: OracleMode::Both }
    }
}

impl Params {
    pub fn get(&self, key: &str) -> Option<i64> {
        match key {
            "g" => self.g,
            "n" => self.n,
            "a" => self.a,
            "b" => self.b,
            "m" => self.m,
            _ => None,
        }
    }

    pub fn set(&mut self, key: &str, v: Option<i64>) {
        match key {
            "g" => self.g = v,
            "n" => self.n = v,
            "a" => self.a = v,
            "b" => self.b = v,
            "m" => self.m = v,
            _ => {}
        }
    }

    pub fn require(&self, key: &str) -> Result<i64> {
        self.get(key).ok_or_else(|| Error::OutOfRange(format!("missing parameter {key}")))
    }

    pub fn describe(&self) -> String {
        let mut s = String::new();
        for k in ["g", "n", "a", "b", "m"] {
            if let Some(v) = self.get(k) {
                let _ = write!(s, "{k}={v} ");
            }
        }
        let _ = write!(s, "dmax={} oracle={}", self.dmax, self.oracle);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub params: Params,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(scenario: &str, params: Params, steps: Vec<Step>) -> Self {
        let ok = steps.iter().all(|s| s.verdict != Verdict::Fail);
        Report { scenario: scenario.to_string(), params, steps, verdict: Verdict::from_bool(ok) }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| s.verdict == Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { offset: e.column(), message: e.to_string() })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario {} ({}): {}", self.scenario, self.params.describe(), self.verdict.label());
        for s in &self.steps {
            let _ = writeln!(out, "  [{:<8}] {} :: {}", s.verdict.label(), s.anchor, s.witness.summary());
        }
        out
    }

    /// Re-runs every witness; returns the indices of steps whose witness no longer
    /// reproduces the recorded data, or whose data does not imply the recorded verdict.
    pub fn recheck(&self) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            let decided = matches!(s.verdict, Verdict::Pass | Verdict::Fail);
            let implied_ok = !decided || s.witness.implied_verdict().map_or(true, |v| v == s.verdict);
            if !implied_ok || !s.witness.recheck()? {
                bad.push(i);
            }
        }
        Ok(bad)
    }
}
