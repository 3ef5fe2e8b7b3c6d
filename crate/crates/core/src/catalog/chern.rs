//! Chern class calculus for the representations that appear in the catalog.

use num_bigint::BigInt;
use num_integer::binomial;

use super::tables;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Table};
use crate::presentation::SymmetricBasis;

/// Chern classes `c_1..c_r` of `E (x) L` from those of `E` and `lambda = c_1(L)`.
pub fn chern_twist(c: &[Polynomial], lambda: &Polynomial) -> Result<Vec<Polynomial>> {
    let r = c.len();
    if r == 0 || r > 3 {
        return Err(Error::RankOutOfScope(r));
    }
    let table = lambda.table();
    let mut full = vec![Polynomial::one(table)];
    full.extend(c.iter().cloned());
    let mut out = Vec::with_capacity(r);
    for k in 1..=r {
        let mut acc = Polynomial::zero(table);
        for (i, ci) in full.iter().enumerate().take(k + 1) {
            let coef = binomial(BigInt::from(r - i), BigInt::from(k - i));
            acc = &acc + &(ci * &lambda.pow((k - i) as u32)).scale(&coef);
        }
        out.push(acc);
    }
    Ok(out)
}

/// Chern classes of `E / O` for a trivial line subbundle: `c(E/O) = c(E)`, one rank lower.
/// Returns the classes and the top class of `E`, which has to vanish in the ring.
pub fn chern_quotient_by_trivial(c: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    match c.split_last() {
        Some((top, rest)) => Ok((rest.to_vec(), top.clone())),
        None => Err(Error::RankOutOfScope(0)),
    }
}

/// First Chern class of the regular representation of `mu_n`, as a multiple of the generator.
pub fn regular_rep_c1(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::OutOfRange("mu_0".into()));
    }
    Ok(((n - 1) * n / 2) % n)
}

/// Exponent vectors `k` with `|k| = a` in three variables, lexicographically descending.
pub fn compositions3(a: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for k1 in (0..=a).rev() {
        for k2 in (0..=a - k1).rev() {
            out.push([k1, k2, a - k1 - k2]);
        }
    }
    out
}

/// `k . t` in a table containing `t1, t2, t3`.
pub fn weight_form(table: &Table, k: [u32; 3]) -> Polynomial {
    let mut acc = Polynomial::zero(table);
    for (i, &ki) in k.iter().enumerate() {
        if ki > 0 {
            let t = Polynomial::var(table, &format!("t{}", i + 1)).expect("torus variable");
            acc = &acc + &t.scale_i(ki as i64);
        }
    }
    acc
}

/// Graded pieces `0..=top` of the total Chern class of `Sym^a` of the dual standard
/// representation of the rank three torus, whose roots are `-k.t`, `|k| = a`.
pub fn sym_chern_torus(table: &Table, a: i64, top: usize) -> Vec<Polynomial> {
    let mut parts = vec![Polynomial::zero(table); top + 1];
    parts[0] = Polynomial::one(table);
    if a < 0 {
        return parts;
    }
    for k in compositions3(a as u32) {
        let root = -weight_form(table, k);
        for d in (1..=top).rev() {
            let add = &root * &parts[d - 1];
            parts[d] = &parts[d] + &add;
        }
    }
    parts
}

/// Graded pieces `0..=top` of `c(Sym^a) / c(Sym^(a-2))` as a power series in the torus variables.
pub fn va_chern_series(table: &Table, a: u32, top: usize) -> Vec<Polynomial> {
    let num = sym_chern_torus(table, a as i64, top);
    let den = sym_chern_torus(table, a as i64 - 2, top);
    let mut x: Vec<Polynomial> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let mut acc = num[d].clone();
        for i in 1..=d {
            acc = &acc - &(&den[i] * &x[d - i]);
        }
        x.push(acc);
    }
    x
}

/// Chern classes of the rank `2a+1` bundle of degree-`a` forms modulo a conic.
#[derive(Debug, Clone)]
pub struct ChernVa {
    pub a: u32,
    /// `c_0..c_{2a+1}` in `c1, c2, c3, t1, t2, t3`.
    pub torus: Vec<Polynomial>,
    /// The same classes written in `c1, c2, c3`.
    pub symmetric: Vec<Polynomial>,
}

pub fn chern_va(a: u32) -> Result<ChernVa> {
    if a == 0 {
        return Err(Error::OutOfRange("a must be positive".into()));
    }
    let table = tables::gl3_torus();
    let rank = 2 * a as usize + 1;
    let torus = va_chern_series(&table, a, rank);
    let basis = SymmetricBasis::standard(3);
    let target = tables::gl3();
    let mut symmetric = Vec::with_capacity(rank + 1);
    for c in &torus {
        let parts = basis.decompose(c)?;
        let mut sym = Polynomial::zero(&target);
        for (k, v) in parts {
            if k.iter().any(|&e| e != 0) {
                return Err(Error::CatalogInconsistency(format!(
                    "Chern class {c} is not symmetric (component {k:?})"
                )));
            }
            sym = v.embed(&target)?;
        }
        symmetric.push(sym);
    }
    Ok(ChernVa { a, torus, symmetric })
}

/// `sum_i c_i xi^(2a+1-i)` with the classes taken from `classes`, written in `table`.
pub fn projective_polynomial(classes: &[Polynomial], table: &Table, xi: &str) -> Result<Polynomial> {
    let x = Polynomial::var(table, xi)?;
    let top = classes.len() - 1;
    let mut acc = Polynomial::zero(table);
    for (i, c) in classes.iter().enumerate() {
        acc = &acc + &(&c.embed(table)? * &x.pow((top - i) as u32));
    }
    Ok(acc)
}
