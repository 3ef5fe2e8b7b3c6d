//! Scenario registry and runner.

mod dab;
mod n1;
mod suites;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::report::{Params, Report, Verdict, Witness};
use super::run::Run;
use crate::catalog::formulas::ClassFormula;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Table};

pub(crate) fn p(table: &Table, s: &str) -> Result<Polynomial> {
    Polynomial::parse(table, s)
}

/// Step labels and polynomials of `base` followed by `list`.
pub(crate) fn labelled(base: &[ClassFormula], list: &[ClassFormula]) -> (Vec<String>, Vec<Polynomial>) {
    base.iter().chain(list).map(|f| (format!("{} ({})", f.anchor, f.id), f.poly.clone())).unzip()
}

pub struct ScenarioInfo {
    pub id: &'static str,
    pub title: &'static str,
    /// Parameters read by the scenario, with defaults.
    pub params: &'static [(&'static str, i64)],
    run: fn(&mut Run) -> Result<()>,
}

pub const SCENARIOS: &[ScenarioInfo] = &[
    ScenarioInfo {
        id: "thm-n1-even",
        title: "even genus with one marked point",
        params: &[("g", 2)],
        run: n1::thm_n1_even,
    },
    ScenarioInfo {
        id: "thm-n1-odd",
        title: "odd genus with one marked point",
        params: &[("g", 3)],
        run: n1::thm_n1_odd,
    },
    ScenarioInfo {
        id: "cil24-recovery",
        title: "genus two, one marked point: the earlier lambda presentation",
        params: &[],
        run: n1::cil24_recovery,
    },
    ScenarioInfo {
        id: "thm-Dab",
        title: "product of two projective bundles of binary forms",
        params: &[("a", 2), ("b", 2)],
        run: dab::thm_dab,
    },
    ScenarioInfo {
        id: "thm-RHgn",
        title: "odd genus with n marked points",
        params: &[("g", 5), ("n", 2)],
        run: dab::thm_rhgn,
    },
    ScenarioInfo {
        id: "remark-a1",
        title: "odd genus, one marked point, through the two-factor route with a = 1",
        params: &[("g", 3)],
        run: n1::remark_a1,
    },
    ScenarioInfo {
        id: "w-classes",
        title: "W classes on the torus: closed forms, stratum restrictions, uniqueness",
        params: &[("m", 2)],
        run: suites::w_classes,
    },
    ScenarioInfo {
        id: "pi2-extraction",
        title: "second diagonal pushforward of xi2^2 from W(m;2,0)",
        params: &[("m", 2)],
        run: suites::pi2_extraction,
    },
    ScenarioInfo {
        id: "m2-extraction",
        title: "mixed pushforwards from the product of first W classes",
        params: &[("a", 2), ("b", 2)],
        run: suites::m2_extraction,
    },
    ScenarioInfo {
        id: "qpush",
        title: "rational pushforward route and diagonal coherence",
        params: &[("g", 3), ("a", 2), ("b", 3)],
        run: suites::qpush,
    },
    ScenarioInfo {
        id: "basis",
        title: "symmetric basis t^d: uniqueness, round trips, componentwise congruence",
        params: &[("n", 3)],
        run: suites::basis,
    },
];

pub fn list() -> &'static [ScenarioInfo] {
    SCENARIOS
}

pub fn find(id: &str) -> Result<&'static ScenarioInfo> {
    SCENARIOS.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Keeps the parameters the scenario reads (filling defaults) and clears the rest.
pub fn resolve_params(info: &ScenarioInfo, given: &Params) -> Params {
    let mut out = Params { dmax: given.dmax, oracle: given.oracle, ..Params::default() };
    for (k, default) in info.params {
        out.set(k, Some(given.get(k).unwrap_or(*default)));
    }
    out
}

/// Runs one scenario. Usage errors and engine inconsistencies are returned as `Err`;
/// any other error aborts the scenario with a failing step.
pub fn run_scenario(id: &str, params: &Params) -> Result<Report> {
    let info = find(id)?;
    let params = resolve_params(info, params);
    let mut run = Run::new(params.clone());
    match (info.run)(&mut run) {
        Ok(()) => {}
        Err(e @ (Error::OutOfRange(_) | Error::UnknownId(_) | Error::EngineInconsistency(_))) => return Err(e),
        Err(e) => run.push("scenario aborted", Verdict::Fail, Witness::Note { text: e.to_string() }),
    }
    Ok(Report::new(id, params, run.into_steps()))
}

/// Runs several scenarios on up to `jobs` threads; results come back in request order.
pub fn run_many(requests: &[(String, Params)], jobs: usize) -> Vec<Result<Report>> {
    let next = AtomicUsize::new(0);
    let out: Mutex<Vec<Option<Result<Report>>>> = Mutex::new((0..requests.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs.max(1).min(requests.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some((id, params)) = requests.get(i) else { break };
                let r = run_scenario(id, params);
                out.lock().expect("result lock")[i] = Some(r);
            });
        }
    });
    out.into_inner().expect("result lock").into_iter().map(|r| r.expect("every request ran")).collect()
}
