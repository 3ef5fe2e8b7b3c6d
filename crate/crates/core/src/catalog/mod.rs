//! Concrete presentations, class formulas, W classes and Chern calculus.

pub mod chern;
pub mod formulas;
pub mod qpush;
pub mod rings;
pub mod tables;
pub mod wclass;

pub use chern::{chern_quotient_by_trivial, chern_twist, chern_va, projective_polynomial, regular_rep_c1, ChernVa};
pub use rings::{catalog_presentation, dump_ring, RING_IDS};
pub use formulas::{class_formula, ClassFormula};
pub use wclass::{
    interpolate_from_strata, strata_zero_test, w_class, w_class_restriction, w_class_t1_form, STRATA,
};
