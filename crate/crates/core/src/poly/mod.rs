//! Sparse multivariate polynomials over Z with weighted variables.

mod monomial;
mod parse;
mod polynomial;
mod table;

pub use monomial::{count_monomials, monomials_of_degree, Monomial};
pub use polynomial::Polynomial;
pub use table::{same_table, Table, VariableTable};

/// Parses each string against `table`, panicking on error. Meant for fixed formulas.
pub fn polys(table: &Table, srcs: &[&str]) -> Vec<Polynomial> {
    srcs.iter()
        .map(|s| Polynomial::parse(table, s).unwrap_or_else(|e| panic!("{s}: {e}")))
        .collect()
}
