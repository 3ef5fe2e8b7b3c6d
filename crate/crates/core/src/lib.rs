//! Exact verification of integral Chow ring presentations.
//!
//! The stack: [`poly`] (polynomials over Z), [`ideal`] (strong Groebner bases and the
//! Smith normal form oracle), [`presentation`] (graded rings, maps, symmetric reduction),
//! [`catalog`] (concrete rings and class formulas) and [`harness`] (scenarios and reports).

pub mod error;
pub mod poly;

pub use error::{Error, Result};
pub mod ideal;
pub mod presentation;
pub mod catalog;
pub mod harness;
