//! Reduction of torus-equivariant classes to the basis `t^d`, `0 <= d_i <= n - i`,
//! over the ring of elementary symmetric functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ideal::{Certificate, Ideal};
use crate::poly::{same_table, Monomial, Polynomial, Table, VariableTable};

/// Names of the torus variables `t_1..t_n` and elementary symmetric functions `c_1..c_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricBasis {
    pub t_names: Vec<String>,
    pub c_names: Vec<String>,
}

/// Exponent tuple `d` of `t^d`, length `n`.
pub type BasisIndex = Vec<u16>;

impl SymmetricBasis {
    pub fn new(t_names: &[&str], c_names: &[&str]) -> Result<Self> {
        if t_names.is_empty() || t_names.len() != c_names.len() {
            return Err(Error::OutOfRange("need matching nonempty t and c name lists".into()));
        }
        Ok(SymmetricBasis {
            t_names: t_names.iter().map(|s| s.to_string()).collect(),
            c_names: c_names.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// `t1..tn`, `c1..cn`.
    pub fn standard(n: usize) -> Self {
        SymmetricBasis {
            t_names: (1..=n).map(|i| format!("t{i}")).collect(),
            c_names: (1..=n).map(|i| format!("c{i}")).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.t_names.len()
    }

    /// Every basis index `d` with `d_i <= n - i`, in lexicographic order.
    pub fn indices(&self) -> Vec<BasisIndex> {
        let n = self.n();
        let mut out = vec![vec![]];
        for i in 0..n {
            let bound = (n - 1 - i) as u16;
            out = out
                .into_iter()
                .flat_map(|p: Vec<u16>| {
                    (0..=bound).map(move |e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        out.sort();
        out
    }

    /// Working table: the source variables plus any missing `c_r` (weight `r`).
    fn work_table(&self, source: &Table) -> Result<Table> {
        for t in &self.t_names {
            match source.index_of(t) {
                None => {}
                Some(i) if source.weight(i) == 1 => {}
                Some(_) => return Err(Error::InvalidTable(format!("{t} must have weight 1"))),
            }
        }
        let mut extra = Vec::new();
        for (r, c) in self.c_names.iter().enumerate() {
            match source.index_of(c) {
                None => extra.push((c.clone(), (r + 1) as u32)),
                Some(i) if source.weight(i) == (r + 1) as u32 => {}
                Some(_) => return Err(Error::InvalidTable(format!("{c} must have weight {}", r + 1))),
            }
        }
        let mut work = source.extended(&extra)?;
        for t in &self.t_names {
            if work.index_of(t).is_none() {
                work = work.extended(&[(t.as_str(), 1)])?;
            }
        }
        Ok(work)
    }

    /// Table of the coefficients: the working table without the `t_i`.
    pub fn coefficient_table(&self, source: &Table) -> Result<Table> {
        let work = self.work_table(source)?;
        let entries: Vec<(String, u32)> = work
            .entries()
            .filter(|(n, _)| !self.t_names.iter().any(|t| t == n))
            .map(|(n, w)| (n.to_string(), w))
            .collect();
        VariableTable::new(&entries)
    }

    /// `e_r` of `t_{n-s+1}..t_n` written via the `c`'s and `t_1..t_{n-s}`; index `[s][r]`.
    fn partial_elementaries(&self, work: &Table) -> Result<Vec<Vec<Polynomial>>> {
        let n = self.n();
        let mut e = vec![vec![Polynomial::zero(work); n + 1]; n + 1];
        for (r, name) in self.c_names.iter().enumerate() {
            e[n][r + 1] = Polynomial::var(work, name)?;
        }
        for row in e.iter_mut() {
            row[0] = Polynomial::one(work);
        }
        for s in (1..n).rev() {
            let t = Polynomial::var(work, &self.t_names[n - s - 1])?;
            for r in 1..=s {
                e[s][r] = &e[s + 1][r] - &(&t * &e[s][r - 1]);
            }
        }
        Ok(e)
    }

    /// Unique decomposition `p = sum_d t^d * coeff_d` with symmetric coefficients.
    pub fn decompose(&self, p: &Polynomial) -> Result<BTreeMap<BasisIndex, Polynomial>> {
        let work = self.work_table(p.table())?;
        let coeff_table = self.coefficient_table(p.table())?;
        let n = self.n();
        let e = self.partial_elementaries(&work)?;
        let t_idx: Vec<usize> = self.t_names.iter().map(|t| work.index_of(t).unwrap()).collect();
        let mut cur = p.embed(&work)?;
        for m in (1..=n).rev() {
            let s = n - m + 1;
            let var = t_idx[m - 1];
            // t_m^s = sum_{r>=1} (-1)^{r+1} e[s][r] t_m^{s-r}
            let mut rhs = Polynomial::zero(&work);
            for r in 1..=s {
                let tm = Polynomial::var_index(&work, var).pow((s - r) as u32);
                let term = &e[s][r] * &tm;
                rhs = if r % 2 == 1 { &rhs + &term } else { &rhs - &term };
            }
            loop {
                let k = cur.max_exp(var);
                if (k as usize) < s {
                    break;
                }
                let a = cur.coefficient_of_power(var, k);
                let tk = Monomial::var(var, work.len(), work.weights());
                let mut high = a.clone();
                for _ in 0..k {
                    high = high.mul_term(&BigInt::from(1), &tk);
                }
                let low = if k as usize == s {
                    a.clone()
                } else {
                    let mut l = a.clone();
                    for _ in 0..(k as usize - s) {
                        l = l.mul_term(&BigInt::from(1), &tk);
                    }
                    l
                };
                cur = &(&cur - &high) + &(&low * &rhs);
            }
        }
        let mut out: BTreeMap<BasisIndex, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        let coeff_pos: Vec<usize> = coeff_table.names().iter().map(|nm| work.index_of(nm).unwrap()).collect();
        for (mono, c) in cur.terms() {
            let key: BasisIndex = t_idx.iter().map(|&i| mono.exp(i)).collect();
            let exps: Vec<u16> = coeff_pos.iter().map(|&i| mono.exp(i)).collect();
            out.entry(key)
                .or_default()
                .push((Monomial::from_exps(&exps, coeff_table.weights()), c.clone()));
        }
        Ok(out
            .into_iter()
            .map(|(k, t)| (k, Polynomial::from_terms(&coeff_table, t)))
            .filter(|(_, p)| !p.is_zero())
            .collect())
    }

    /// Inverse of [`decompose`](Self::decompose): `sum_d t^d * coeff_d` with `c_r := e_r(t)`,
    /// returned in `target`, which must contain every `t_i` and every non-`c` coefficient variable.
    pub fn recompose(&self, parts: &BTreeMap<BasisIndex, Polynomial>, target: &Table) -> Result<Polynomial> {
        let n = self.n();
        let ts: Vec<Polynomial> =
            self.t_names.iter().map(|t| Polynomial::var(target, t)).collect::<Result<_>>()?;
        // e_r(t_1..t_n)
        let mut el = vec![Polynomial::one(target)];
        for t in &ts {
            let mut next = el.clone();
            next.push(Polynomial::zero(target));
            for r in 1..next.len() {
                next[r] = &el.get(r).cloned().unwrap_or_else(|| Polynomial::zero(target)) + &(t * &el[r - 1]);
            }
            el = next;
        }
        let mut acc = Polynomial::zero(target);
        for (d, coeff) in parts {
            if d.len() != n {
                return Err(Error::OutOfRange(format!("basis index {d:?} has wrong length")));
            }
            let ct = coeff.table();
            let mut images = Vec::with_capacity(ct.len());
            for (name, _) in ct.entries() {
                if let Some(r) = self.c_names.iter().position(|c| c == name) {
                    images.push(el[r + 1].clone());
                } else {
                    images.push(Polynomial::var(target, name)?);
                }
            }
            let mut term = coeff.eval_map(&images, target)?;
            for (i, &e) in d.iter().enumerate() {
                term = &term * &ts[i].pow(e as u32);
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

/// Convenience wrapper over [`SymmetricBasis::decompose`] with `t1..tn`, `c1..cn`.
pub fn symmetric_decompose(p: &Polynomial, n: usize) -> Result<BTreeMap<BasisIndex, Polynomial>> {
    SymmetricBasis::standard(n).decompose(p)
}

/// Componentwise congruence: every coefficient of `p - q` lies in `j`.
#[derive(Debug, Clone)]
pub struct Congruence {
    pub holds: bool,
    pub components: Vec<(BasisIndex, Polynomial, Option<Certificate>)>,
}

pub fn congruence_componentwise(
    p: &Polynomial,
    q: &Polynomial,
    j: &Ideal,
    basis: &SymmetricBasis,
) -> Result<Congruence> {
    same_table(p.table(), q.table())?;
    let diff = p - q;
    let parts = basis.decompose(&diff)?;
    let mut components = Vec::new();
    let mut holds = true;
    for (k, c) in parts {
        let c = c.embed(j.table())?;
        let cert = j.contains(&c)?;
        holds &= cert.is_some();
        components.push((k, c, cert));
    }
    Ok(Congruence { holds, components })
}
