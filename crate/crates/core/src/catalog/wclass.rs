//! Classes of the loci of degree-`m` forms divisible by a power of a linear form,
//! inside the torus-equivariant Chow ring of `P(V_m)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::chern::{compositions3, weight_form};
use super::tables;
use crate::error::{Error, Result};
use crate::ideal::lattice::{Echelon, SparseVec};
use crate::ideal::Ideal;
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Table};

/// The three torus-fixed strata of smooth conics, named by the conic `i` with `|i| = 2`.
pub const STRATA: [[u32; 3]; 3] = [[0, 2, 0], [0, 1, 1], [0, 0, 2]];

fn t(table: &Table, i: usize) -> Polynomial {
    Polynomial::var(table, &format!("t{i}")).expect("torus variable")
}

fn lin(table: &Table, xi: &Polynomial, coeffs: [i64; 3]) -> Polynomial {
    // xi - (a t1 + b t2 + c t3)
    let mut acc = xi.clone();
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            acc = &acc - &t(table, i + 1).scale_i(c);
        }
    }
    acc
}

fn check_params(m: u32, r: u32) -> Result<()> {
    match r {
        1 if m >= 1 => Ok(()),
        2 if m >= 2 => Ok(()),
        _ => Err(Error::OutOfRange(format!("W class needs r in {{1,2}} and m >= max(r,1); got m={m}, r={r}"))),
    }
}

/// Closed form of the class of forms divisible by `l^(r+1)`, written with all three `t_i`.
pub fn w_class_in(m: u32, r: u32, table: &Table, xi: &str) -> Result<Polynomial> {
    check_params(m, r)?;
    let x = Polynomial::var(table, xi)?;
    let m = m as i64;
    if r == 1 {
        let main = &lin(table, &x, [0, 0, m]) * &lin(table, &x, [0, 2 * m - 1, m - 1]);
        let corr = (&t(table, 2) * &(&t(table, 2) + &t(table, 3))).scale_i(m * (m - 1));
        return Ok(&main + &corr);
    }
    let factors = if m % 2 == 1 {
        [[0, m - 1, m], [1, m - 1, m - 1], [0, m, m - 1], [1, m - 2, m - 2]]
    } else {
        [[0, m, m], [1, m - 2, m - 1], [0, m - 1, m - 1], [1, m - 1, m - 2]]
    };
    let mut main = Polynomial::one(table);
    for f in factors {
        main = &main * &lin(table, &x, f);
    }
    let inner = &x.pow(2).scale_i(m * (m - 1)) - &t(table, 2).pow(2).scale_i(m * m * (m - 1) * (m - 1) / 2);
    let corr = (&(&t(table, 2) * &t(table, 3)) * &inner).scale_i(2);
    Ok(&main + &corr)
}

/// [`w_class_in`] in the table `xi, t1, t2, t3`.
pub fn w_class(m: u32, r: u32) -> Result<Polynomial> {
    w_class_in(m, r, &tables::torus(), "xi")
}

/// Second printed form of the same class, with `t3` eliminated in favour of `t1` and `c2`
/// (here `c2 = e2(t)`, so the result lives in the same table).
pub fn w_class_t1_form_in(m: u32, r: u32, table: &Table, xi: &str) -> Result<Polynomial> {
    check_params(m, r)?;
    let x = Polynomial::var(table, xi)?;
    let (t1, t2, t3) = (t(table, 1), t(table, 2), t(table, 3));
    let c2 = &(&(&t1 * &t2) + &(&t1 * &t3)) + &(&t2 * &t3);
    let m = m as i64;
    // xi + a t1 + b t2
    let f = |a: i64, b: i64| &(&x + &t1.scale_i(a)) + &t2.scale_i(b);
    if r == 1 {
        let mut acc = x.pow(2);
        acc = &acc + &(&t1 * &x).scale_i(2 * m - 1);
        acc = &acc + &c2.scale_i(m * m);
        acc = &acc + &t1.pow(2).scale_i(m * (2 * m - 1));
        return Ok(acc);
    }
    let main = if m % 2 == 1 {
        &(&f(m, 1) * &f(m - 2, 0)) * &(&f(m - 1, -1) * &f(m - 3, 0))
    } else {
        &(&f(m, 0) * &f(m - 2, 1)) * &(&f(m - 1, 0) * &f(m - 3, -1))
    };
    let inner = &x.pow(2).scale_i(m * (m - 1)) - &t2.pow(2).scale_i(m * m * (m - 1) * (m - 1) / 2);
    let corr = (&(&c2 + &t1.pow(2)) * &inner).scale_i(2);
    Ok(&main + &corr)
}

pub fn w_class_t1_form(m: u32, r: u32) -> Result<Polynomial> {
    w_class_t1_form_in(m, r, &tables::torus(), "xi")
}

/// Product of the coordinate hyperplanes `xi - k.t` cutting out the W locus on the
/// fixed stratum `stratum`: `|k| = m`, `k_j < i_j` for some `j`, and `k_1 < r`.
pub fn w_class_restriction_in(m: u32, r: u32, stratum: [u32; 3], table: &Table, xi: &str) -> Result<Polynomial> {
    check_params(m, r)?;
    if !STRATA.contains(&stratum) {
        return Err(Error::OutOfRange(format!("unknown stratum {stratum:?}")));
    }
    let x = Polynomial::var(table, xi)?;
    let mut acc = Polynomial::one(table);
    for k in compositions3(m) {
        let outside = (0..3).any(|j| k[j] < stratum[j]);
        if outside && k[0] < r {
            acc = &acc * &(&x - &weight_form(table, k));
        }
    }
    Ok(acc)
}

pub fn w_class_restriction(m: u32, r: u32, stratum: [u32; 3]) -> Result<Polynomial> {
    w_class_restriction_in(m, r, stratum, &tables::torus(), "xi")
}

/// `(t1 + t2 + t3, 2 t1 t2 t3)`: the torus relations of smooth conics.
pub fn torus_relations(table: &Table) -> Vec<Polynomial> {
    let (t1, t2, t3) = (t(table, 1), t(table, 2), t(table, 3));
    vec![&(&t1 + &t2) + &t3, (&(&t1 * &t2) * &t3).scale_i(2)]
}

/// Torus relations plus the stratum relation `i.t`.
pub fn stratum_relations(table: &Table, stratum: [u32; 3]) -> Vec<Polynomial> {
    let mut rels = torus_relations(table);
    rels.push(weight_form(table, stratum));
    rels
}

/// Zero test by restriction to the three strata, valid in degrees `<= 2m`. The verdict is
/// cross-checked by a direct membership test in the torus relations.
pub fn strata_zero_test(p: &Polynomial, m: u32) -> Result<bool> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous(p.to_string()));
    }
    let Some(d) = p.degree() else { return Ok(true) };
    if d > 2 * m {
        return Err(Error::OutsideValidityBound { degree: d, bound: 2 * m });
    }
    let table = p.table();
    let mut on_strata = true;
    for s in STRATA {
        let ideal = Ideal::new(table, stratum_relations(table, s))?;
        on_strata &= ideal.contains_bool(p)?;
    }
    let direct = Ideal::new(table, torus_relations(table))?.contains_bool(p)?;
    if direct != on_strata {
        return Err(Error::EngineInconsistency(format!(
            "{p}: zero on strata = {on_strata}, zero in the torus ring = {direct}"
        )));
    }
    Ok(on_strata)
}

fn span_rows(table: &Table, gens: &[Polynomial], d: u32, index: &HashMap<Monomial, usize>) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for mu in monomials_of_degree(table.weights(), d - e) {
            let mut v: SparseVec = g.terms().iter().map(|(m, c)| (index[&m.mul(&mu)], c.clone())).collect();
            v.sort_by_key(|x| x.0);
            rows.push(v);
        }
    }
    rows
}

/// Rebuilds a class of degree `d` from its three stratum restrictions by solving the
/// integer linear system `p = R_s mod (stratum s)` for all strata at once.
pub fn interpolate_from_strata(restrictions: &[Polynomial; 3], d: u32) -> Result<Option<Polynomial>> {
    let table = restrictions[0].table().clone();
    let monos = monomials_of_degree(table.weights(), d);
    let n = monos.len();
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let vec_of = |p: &Polynomial| -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); n];
        for (m, c) in p.terms() {
            let i = index.get(m).ok_or_else(|| Error::NotHomogeneous(format!("{p} is not of degree {d}")))?;
            v[*i] = c.clone();
        }
        Ok(v)
    };
    let rows: Vec<Vec<SparseVec>> =
        STRATA.iter().map(|s| span_rows(&table, &stratum_relations(&table, *s), d, &index)).collect();
    let mut ech = Echelon::new(2 * n, true);
    let mut a_rows: Vec<&SparseVec> = Vec::new();
    for r in &rows[0] {
        let mut v: SparseVec = r.iter().map(|(c, x)| (*c, -x)).collect();
        v.extend(r.iter().map(|(c, x)| (c + n, -x)));
        ech.insert(v);
        a_rows.push(r);
    }
    for r in &rows[1] {
        ech.insert(r.clone());
    }
    for r in &rows[2] {
        ech.insert(r.iter().map(|(c, x)| (c + n, x.clone())).collect());
    }
    let (ra, rb, rc) = (vec_of(&restrictions[0])?, vec_of(&restrictions[1])?, vec_of(&restrictions[2])?);
    let mut target: SparseVec = Vec::new();
    for i in 0..n {
        let x = &ra[i] - &rb[i];
        if !x.is_zero() {
            target.push((i, x));
        }
    }
    for i in 0..n {
        let x = &ra[i] - &rc[i];
        if !x.is_zero() {
            target.push((i + n, x));
        }
    }
    let Some(combo) = ech.solve(&target) else { return Ok(None) };
    let mut p = ra;
    for (row, c) in combo {
        if row < a_rows.len() {
            for (col, x) in a_rows[row] {
                p[*col] += &c * x;
            }
        }
    }
    let terms = monos.into_iter().zip(p).filter(|(_, c)| !c.is_zero());
    Ok(Some(Polynomial::from_terms(&table, terms)))
}
