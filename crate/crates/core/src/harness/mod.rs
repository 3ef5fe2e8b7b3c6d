//! Scenario harness: relation lists as used in the proofs, a step recorder, the scenario
//! registry and the JSON/text report.

pub mod relations;
pub mod report;
pub mod run;
pub mod scenarios;

pub use relations::{base_relations_n1, build_relations_dab, build_relations_n1};
pub use report::{GroupRow, Params, Report, RingSpec, Step, Verdict, Witness};
pub use run::{Gens, Run};
pub use scenarios::{find, list, resolve_params, run_many, run_scenario, ScenarioInfo, SCENARIOS};
