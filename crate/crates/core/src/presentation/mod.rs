//! Graded ring presentations, verified maps between them, and symmetric reduction.

mod file;
mod ring;
mod symmetric;

pub use file::{dump_presentation, parse_presentation};
pub use ring::{
    check_ring_map, quotient_compare, root_gerbe, DegreeComparison, QuotientComparison, RingMap,
    RingPresentation,
};
pub use symmetric::{
    congruence_componentwise, symmetric_decompose, BasisIndex, Congruence, SymmetricBasis,
};
