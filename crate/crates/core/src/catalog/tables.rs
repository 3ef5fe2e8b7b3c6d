//! Variable tables shared by catalog entries, so their polynomials can be combined.

use crate::poly::{Table, VariableTable};

fn table(vars: &[(&str, u32)]) -> Table {
    VariableTable::new(vars).expect("catalog table")
}

/// `xi, b1, b2, g1`: even genus, projective coordinate over the torsor base.
pub fn even() -> Table {
    table(&[("xi", 1), ("b1", 1), ("b2", 2), ("g1", 1)])
}

/// `xi, c2, c3, g1, t`: odd genus.
pub fn odd() -> Table {
    table(&[("xi", 1), ("c2", 2), ("c3", 3), ("g1", 1), ("t", 1)])
}

/// `c1, c2, c3, xi2a, xi2b`: product of two projective bundles.
pub fn dab() -> Table {
    table(&[("c1", 1), ("c2", 2), ("c3", 3), ("xi2a", 1), ("xi2b", 1)])
}

/// [`dab`] followed by the torus variables `t1, t2, t3`.
pub fn dab_torus() -> Table {
    table(&[
        ("c1", 1),
        ("c2", 2),
        ("c3", 3),
        ("xi2a", 1),
        ("xi2b", 1),
        ("t1", 1),
        ("t2", 1),
        ("t3", 1),
    ])
}

/// `xi, t1, t2, t3`: torus-equivariant classes on one projective space.
pub fn torus() -> Table {
    table(&[("xi", 1), ("t1", 1), ("t2", 1), ("t3", 1)])
}

/// `xi, c1, c2, c3`: coefficients produced by reducing [`torus`] classes.
pub fn torus_coefficients() -> Table {
    table(&[("xi", 1), ("c1", 1), ("c2", 2), ("c3", 3)])
}

/// `c1, c2, c3, t1, t2, t3`: torus of the general linear group in rank three.
pub fn gl3_torus() -> Table {
    table(&[("c1", 1), ("c2", 2), ("c3", 3), ("t1", 1), ("t2", 1), ("t3", 1)])
}

/// `c1, c2, c3`.
pub fn gl3() -> Table {
    table(&[("c1", 1), ("c2", 2), ("c3", 3)])
}
