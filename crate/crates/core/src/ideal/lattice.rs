//! Integer row lattices: Hermite-style echelon insertion and Smith invariants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector, sorted by column.
pub type SparseVec = Vec<(usize, BigInt)>;

fn axpy(a: &BigInt, x: &SparseVec, b: &BigInt, y: &SparseVec) -> SparseVec {
    // a*x + b*y
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, a * &x[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, b * &y[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (ci, a * &x[i - 1].1 + b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn combo_axpy(a: &BigInt, x: &BTreeMap<usize, BigInt>, b: &BigInt, y: &BTreeMap<usize, BigInt>) -> BTreeMap<usize, BigInt> {
    let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (k, v) in x {
        *out.entry(*k).or_insert_with(BigInt::zero) += a * v;
    }
    for (k, v) in y {
        *out.entry(*k).or_insert_with(BigInt::zero) += b * v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Echelon basis of the lattice spanned by inserted rows. Pivots are positive and
/// each pivot column carries exactly one row. Optionally tracks every basis row as a
/// combination of the inserted rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, (SparseVec, BTreeMap<usize, BigInt>)>,
    track: bool,
    inserted: usize,
    /// Once an untracked lattice has full rank, its index `D` satisfies `D Z^n <= L`,
    /// so entries right of a pivot may be reduced modulo `D`.
    modulus: Option<BigInt>,
}

/// Symmetric residues modulo `m`, from column `from` on; zeros dropped.
fn reduce_tail(row: SparseVec, m: &BigInt, from: usize) -> SparseVec {
    let half: BigInt = m / 2;
    row.into_iter()
        .enumerate()
        .filter_map(|(i, (c, v))| {
            if i < from {
                return Some((c, v));
            }
            let mut r = v.mod_floor(m);
            if r > half {
                r -= m;
            }
            (!r.is_zero()).then_some((c, r))
        })
        .collect()
}

impl Echelon {
    pub fn new(ncols: usize, track: bool) -> Self {
        Echelon { ncols, pivots: BTreeMap::new(), track, inserted: 0, modulus: None }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn insert(&mut self, row: SparseVec) {
        let mut combo = BTreeMap::new();
        if self.track {
            combo.insert(self.inserted, BigInt::one());
        }
        self.inserted += 1;
        let mut row = row;
        row.retain(|(_, v)| !v.is_zero());
        if let Some(m) = &self.modulus {
            row = reduce_tail(row, m, 0);
        }
        let mut shrunk = false;
        while let Some((c, b)) = row.first().cloned() {
            match self.pivots.remove(&c) {
                None => {
                    if b.is_negative() {
                        row = row.into_iter().map(|(k, v)| (k, -v)).collect();
                        combo = combo.into_iter().map(|(k, v)| (k, -v)).collect();
                    }
                    self.pivots.insert(c, (row, combo));
                    self.update_modulus(true);
                    return;
                }
                Some((prow, pcombo)) => {
                    let a = prow[0].1.clone();
                    if (&b % &a).is_zero() {
                        let q = &b / &a;
                        row = axpy(&BigInt::one(), &row, &-&q, &prow);
                        if let Some(m) = &self.modulus {
                            row = reduce_tail(row, m, 0);
                        }
                        if self.track {
                            combo = combo_axpy(&BigInt::one(), &combo, &-&q, &pcombo);
                        }
                        self.pivots.insert(c, (prow, pcombo));
                    } else {
                        let eg = a.extended_gcd(&b);
                        let g = eg.gcd.clone();
                        let mut npiv = axpy(&eg.x, &prow, &eg.y, &row);
                        let nrow = axpy(&(&a / &g), &row, &-(&b / &g), &prow);
                        let (mut npc, nrc) = if self.track {
                            (
                                combo_axpy(&eg.x, &pcombo, &eg.y, &combo),
                                combo_axpy(&(&a / &g), &combo, &-(&b / &g), &pcombo),
                            )
                        } else {
                            (BTreeMap::new(), BTreeMap::new())
                        };
                        if npiv[0].1.is_negative() {
                            npiv = npiv.into_iter().map(|(k, v)| (k, -v)).collect();
                            npc = npc.into_iter().map(|(k, v)| (k, -v)).collect();
                        }
                        let mut nrow = nrow;
                        if let Some(m) = &self.modulus {
                            npiv = reduce_tail(npiv, m, 1);
                            nrow = reduce_tail(nrow, m, 0);
                        }
                        self.pivots.insert(c, (npiv, npc));
                        shrunk = true;
                        row = nrow;
                        combo = nrc;
                    }
                }
            }
        }
        if shrunk {
            self.update_modulus(false);
        }
    }

    /// Sets or shrinks the modulus to the current index when the lattice has full rank.
    fn update_modulus(&mut self, new_pivot: bool) {
        if self.track || self.pivots.len() < self.ncols || (self.modulus.is_some() && new_pivot) {
            return;
        }
        let d: BigInt = self.pivots.values().map(|(r, _)| r[0].1.clone()).product();
        if self.modulus.as_ref() == Some(&d) {
            return;
        }
        for (r, _) in self.pivots.values_mut() {
            *r = reduce_tail(std::mem::take(r), &d, 1);
        }
        self.modulus = Some(d);
    }

    /// Reduces `v` by the basis; `Some(combination)` when `v` lies in the lattice.
    /// The combination is over inserted rows (empty unless tracking).
    pub fn solve(&self, v: &SparseVec) -> Option<BTreeMap<usize, BigInt>> {
        let mut v: SparseVec = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        if let Some(m) = &self.modulus {
            v = reduce_tail(v, m, 0);
        }
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        while let Some((c, b)) = v.first().cloned() {
            let (prow, pcombo) = self.pivots.get(&c)?;
            let a = &prow[0].1;
            if !(&b % a).is_zero() {
                return None;
            }
            let q = &b / a;
            v = axpy(&BigInt::one(), &v, &-&q, prow);
            if let Some(m) = &self.modulus {
                v = reduce_tail(v, m, 0);
            }
            if self.track {
                acc = combo_axpy(&BigInt::one(), &acc, &q, pcombo);
            }
        }
        Some(acc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.solve(v).is_some()
    }

    /// Cokernel `Z^ncols / lattice` as (free rank, invariant factors >= 2).
    pub fn cokernel(&self) -> (usize, Vec<BigInt>) {
        let free = self.ncols - self.pivots.len();
        let mut rows: BTreeMap<usize, SparseVec> =
            self.pivots.iter().map(|(c, (r, _))| (*c, r.clone())).collect();
        // Unit pivots split off a free summand that the relation kills; eliminate them
        // bottom-up so no eliminated column is reintroduced.
        let units: Vec<usize> = rows.iter().rev().filter(|(_, r)| r[0].1.is_one()).map(|(c, _)| *c).collect();
        let mut col_users: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (pc, r) in &rows {
            for (c, _) in r.iter().skip(1) {
                col_users.entry(*c).or_default().push(*pc);
            }
        }
        for c in units {
            let u = rows.remove(&c).unwrap();
            let users = col_users.remove(&c).unwrap_or_default();
            for pc in users {
                let Some(r) = rows.get(&pc) else { continue };
                let Ok(pos) = r.binary_search_by_key(&c, |e| e.0) else { continue };
                let f = r[pos].1.clone();
                let nr = axpy(&BigInt::one(), r, &-f, &u);
                for (k, _) in nr.iter().skip(1) {
                    if r.binary_search_by_key(k, |e| e.0).is_err() {
                        col_users.entry(*k).or_default().push(pc);
                    }
                }
                rows.insert(pc, nr);
            }
        }
        let rest: Vec<SparseVec> = rows.into_values().collect();
        let mut diag: Vec<BigInt> = Vec::new();
        // Rows that are alone in their only column give a cyclic summand directly.
        let mut col_count: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &rest {
            for (c, _) in r {
                *col_count.entry(*c).or_insert(0) += 1;
            }
        }
        let mut dense: Vec<SparseVec> = Vec::new();
        for r in rest {
            if r.len() == 1 && col_count[&r[0].0] == 1 {
                diag.push(r[0].1.abs());
            } else {
                dense.push(r);
            }
        }
        if !dense.is_empty() {
            let cols: Vec<usize> = {
                let mut s: Vec<usize> = dense.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
                s.sort();
                s.dedup();
                s
            };
            let mut m: Vec<Vec<BigInt>> = dense
                .iter()
                .map(|r| {
                    let mut row = vec![BigInt::zero(); cols.len()];
                    for (c, v) in r {
                        row[cols.binary_search(c).unwrap()] = v.clone();
                    }
                    row
                })
                .collect();
            diag.extend(smith_diagonal(&mut m));
        }
        let chain = invariant_chain(diag);
        (free, chain.into_iter().filter(|d| !d.is_one()).collect())
    }
}

/// Nonzero diagonal entries of a Smith form of `m` (destroys `m`).
pub fn smith_diagonal(m: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => v.abs() < m[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in (t + 1)..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let s = &q * &m[t][j];
                    m[i][j] -= s;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    dirty = true;
                }
            }
            for j in (t + 1)..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

/// Normalizes nonzero diagonal entries into a divisibility chain with the same cokernel.
pub fn invariant_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.retain(|x| !x.is_zero());
    for x in d.iter_mut() {
        *x = x.abs();
    }
    let n = d.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
