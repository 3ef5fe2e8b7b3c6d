use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Table};

/// Cofactor expression `p = sum cof_i * generator_i`, listing nonzero cofactors only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub terms: Vec<(usize, Polynomial)>,
}

impl Certificate {
    /// Expands the combination against `generators`.
    pub fn expand(&self, generators: &[Polynomial]) -> Result<Polynomial> {
        let table = match generators.first() {
            Some(g) => g.table().clone(),
            None => {
                return if self.terms.is_empty() {
                    Err(Error::IncompatibleRings("empty generator list".into()))
                } else {
                    Err(Error::IncompatibleRings("certificate refers to missing generators".into()))
                }
            }
        };
        let mut acc = Polynomial::zero(&table);
        for (i, c) in &self.terms {
            let g = generators
                .get(*i)
                .ok_or_else(|| Error::IncompatibleRings(format!("no generator {i}")))?;
            acc = acc.try_add(&c.try_mul(g)?)?;
        }
        Ok(acc)
    }

    pub fn verifies(&self, p: &Polynomial, generators: &[Polynomial]) -> bool {
        if self.terms.is_empty() {
            return p.is_zero();
        }
        matches!(self.expand(generators), Ok(q) if q == *p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    S,
    G,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Gen(usize),
    Pair(Monomial, usize, usize, PairKind),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct TaskKey {
    degree: u32,
    task: Task,
}

/// Truncated strong Groebner basis of a homogeneous ideal over Z.
///
/// Exact for every question about elements of degree at most `degree_cap`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    table: Table,
    generators: Vec<Polynomial>,
    elements: Vec<Polynomial>,
    cofactors: Option<Vec<Vec<Polynomial>>>,
    degree_cap: u32,
}

struct Builder<'a> {
    table: Table,
    generators: &'a [Polynomial],
    cap: u32,
    track: bool,
    elements: Vec<Polynomial>,
    cofactors: Vec<Vec<Polynomial>>,
    queue: BTreeMap<TaskKey, ()>,
}

fn lcm_int(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

impl<'a> Builder<'a> {
    fn zero_cof(&self) -> Vec<Polynomial> {
        if self.track {
            vec![Polynomial::zero(&self.table); self.generators.len()]
        } else {
            Vec::new()
        }
    }

    /// Combination `c1*m1*e_i + c2*m2*e_j` of basis elements together with its cofactors.
    fn combine(
        &self,
        i: usize,
        c1: &BigInt,
        m1: &Monomial,
        j: usize,
        c2: &BigInt,
        m2: &Monomial,
    ) -> (Polynomial, Vec<Polynomial>) {
        let mut p = self.elements[i].mul_term(c1, m1);
        p.sub_mul_term_assign(&-c2, m2, &self.elements[j]);
        let mut cof = Vec::new();
        if self.track {
            cof = self.cofactors[i].iter().map(|c| c.mul_term(c1, m1)).collect();
            for (k, c) in self.cofactors[j].iter().enumerate() {
                cof[k].sub_mul_term_assign(&-c2, m2, c);
            }
        }
        (p, cof)
    }

    fn pair_poly(&self, lcm: &Monomial, i: usize, j: usize, kind: PairKind) -> (Polynomial, Vec<Polynomial>) {
        let (mi, a) = self.elements[i].leading_term().unwrap();
        let (mj, b) = self.elements[j].leading_term().unwrap();
        let ui = mi.quotient_of(lcm);
        let uj = mj.quotient_of(lcm);
        match kind {
            PairKind::S => {
                let l = lcm_int(a, b);
                self.combine(i, &(&l / a), &ui, j, &-(&l / b), &uj)
            }
            PairKind::G => {
                let eg = a.extended_gcd(b);
                self.combine(i, &eg.x, &ui, j, &eg.y, &uj)
            }
        }
    }

    fn reduce(&self, p: Polynomial, mut cof: Vec<Polynomial>) -> (Polynomial, Vec<Polynomial>) {
        let (rem, quotients) = reduce_full(&self.elements, p, None, self.track);
        if self.track {
            for (k, q) in quotients {
                for (g, c) in self.cofactors[k].iter().enumerate() {
                    if !c.is_zero() {
                        cof[g] = &cof[g] - &(&q * c);
                    }
                }
            }
        }
        (rem, cof)
    }

    fn insert(&mut self, p: Polynomial, mut cof: Vec<Polynomial>) {
        let neg = p.leading_coeff().map(|c| c.is_negative()).unwrap_or(false);
        let p = if neg {
            cof = cof.iter().map(|c| -c).collect();
            -p
        } else {
            p
        };
        let new = self.elements.len();
        let (mn, an) = {
            let (m, a) = p.leading_term().unwrap();
            (m.clone(), a.clone())
        };
        for (k, e) in self.elements.iter().enumerate() {
            let (mk, ak) = e.leading_term().unwrap();
            let lcm = mk.lcm(&mn, self.table.weights());
            if lcm.degree() > self.cap {
                continue;
            }
            let coprime_lm = mk.is_coprime(&mn);
            let coprime_lc = ak.gcd(&an).is_one();
            // Product criterion: coprime monomials and coprime coefficients.
            if !(coprime_lm && coprime_lc) {
                self.queue.insert(
                    TaskKey { degree: lcm.degree(), task: Task::Pair(lcm.clone(), k, new, PairKind::S) },
                    (),
                );
            }
            let divides = (&an % ak).is_zero() || (ak % &an).is_zero();
            if !divides {
                self.queue.insert(
                    TaskKey { degree: lcm.degree(), task: Task::Pair(lcm, k, new, PairKind::G) },
                    (),
                );
            }
        }
        self.elements.push(p);
        if self.track {
            self.cofactors.push(cof);
        }
    }

    fn run(&mut self) {
        for (i, g) in self.generators.iter().enumerate() {
            if let Some(d) = g.degree() {
                if d <= self.cap {
                    self.queue.insert(TaskKey { degree: d, task: Task::Gen(i) }, ());
                }
            }
        }
        while let Some((key, ())) = self.queue.pop_first() {
            let (p, cof) = match key.task {
                Task::Gen(i) => {
                    let mut cof = self.zero_cof();
                    if self.track {
                        cof[i] = Polynomial::one(&self.table);
                    }
                    (self.generators[i].clone(), cof)
                }
                Task::Pair(ref lcm, i, j, kind) => self.pair_poly(lcm, i, j, kind),
            };
            let (r, cof) = self.reduce(p, cof);
            if !r.is_zero() {
                self.insert(r, cof);
            }
        }
    }
}

/// Index of the divisor with the smallest leading coefficient, ties to the lowest index.
fn best_divisor(elements: &[Polynomial], m: &Monomial, skip: Option<usize>) -> Option<usize> {
    let mut best: Option<(usize, &BigInt)> = None;
    for (k, e) in elements.iter().enumerate() {
        if Some(k) == skip {
            continue;
        }
        let (lm, lc) = e.leading_term().unwrap();
        if lm.divides(m) {
            match best {
                Some((_, b)) if b <= lc => {}
                _ => best = Some((k, lc)),
            }
        }
    }
    best.map(|(k, _)| k)
}

/// Canonical full reduction. Every term is reduced by the divisor with the smallest
/// leading coefficient, keeping the remainder in `[0, lc)`.
fn reduce_full(
    elements: &[Polynomial],
    p: Polynomial,
    skip: Option<usize>,
    track: bool,
) -> (Polynomial, Vec<(usize, Polynomial)>) {
    let table = p.table().clone();
    let mut work = p;
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut quot: HashMap<usize, Vec<(Monomial, BigInt)>> = HashMap::new();
    while let Some((m, c)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        if let Some(k) = best_divisor(elements, &m, skip) {
            let (lm, lc) = elements[k].leading_term().unwrap();
            let q = c.div_floor(lc);
            if !q.is_zero() {
                let u = lm.quotient_of(&m);
                work.sub_mul_term_assign(&q, &u, &elements[k]);
                if track {
                    quot.entry(k).or_default().push((u, q));
                }
            }
        }
        let mut terms = work.into_terms();
        if terms.first().map(|(x, _)| *x == m).unwrap_or(false) {
            rem.push(terms.remove(0));
        }
        work = Polynomial::from_sorted(&table, terms);
    }
    let mut qs: Vec<(usize, Polynomial)> =
        quot.into_iter().map(|(k, t)| (k, Polynomial::from_terms(&table, t))).collect();
    qs.sort_by_key(|(k, _)| *k);
    (Polynomial::from_sorted(&table, rem), qs)
}

impl GroebnerBasis {
    /// Computes the basis up to `degree_cap`. With `track` set, every element carries
    /// its cofactors in the generators, enabling membership certificates.
    pub fn compute(generators: &[Polynomial], degree_cap: u32, track: bool) -> Result<GroebnerBasis> {
        let table = match generators.first() {
            Some(g) => g.table().clone(),
            None => return Err(Error::IncompatibleRings("no generators given".into())),
        };
        GroebnerBasis::compute_in(&table, generators, degree_cap, track)
    }

    pub fn compute_in(
        table: &Table,
        generators: &[Polynomial],
        degree_cap: u32,
        track: bool,
    ) -> Result<GroebnerBasis> {
        for g in generators {
            crate::poly::same_table(g.table(), table)?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        let mut b = Builder {
            table: table.clone(),
            generators,
            cap: degree_cap,
            track,
            elements: Vec::new(),
            cofactors: Vec::new(),
            queue: BTreeMap::new(),
        };
        b.run();
        let mut gb = GroebnerBasis {
            table: table.clone(),
            generators: generators.to_vec(),
            elements: b.elements,
            cofactors: if track { Some(b.cofactors) } else { None },
            degree_cap,
        };
        gb.minimalize();
        gb.tail_reduce();
        Ok(gb)
    }

    fn minimalize(&mut self) {
        let n = self.elements.len();
        let mut keep = vec![true; n];
        for j in 0..n {
            let (mj, cj) = self.elements[j].leading_term().unwrap();
            for i in 0..n {
                if i == j || !keep[i] {
                    continue;
                }
                let (mi, ci) = self.elements[i].leading_term().unwrap();
                if mi.divides(mj) && (cj % ci).is_zero() {
                    let same = mi == mj && ci == cj;
                    if !same || i < j {
                        keep[j] = false;
                        break;
                    }
                }
            }
        }
        let mut idx = 0;
        self.elements.retain(|_| {
            idx += 1;
            keep[idx - 1]
        });
        if let Some(cofs) = &mut self.cofactors {
            let mut idx = 0;
            cofs.retain(|_| {
                idx += 1;
                keep[idx - 1]
            });
        }
        let order: Vec<usize> = {
            let mut o: Vec<usize> = (0..self.elements.len()).collect();
            o.sort_by(|&a, &b| {
                let (ma, ca) = self.elements[a].leading_term().unwrap();
                let (mb, cb) = self.elements[b].leading_term().unwrap();
                ma.cmp(mb).then(ca.cmp(cb))
            });
            o
        };
        self.elements = order.iter().map(|&k| self.elements[k].clone()).collect();
        if let Some(cofs) = &mut self.cofactors {
            *cofs = order.iter().map(|&k| cofs[k].clone()).collect();
        }
    }

    fn tail_reduce(&mut self) {
        let track = self.cofactors.is_some();
        for k in 0..self.elements.len() {
            let p = self.elements[k].clone();
            let mut terms = p.clone().into_terms();
            let lead = terms.remove(0);
            let tail = Polynomial::from_sorted(&self.table, terms);
            let (rem, quot) = reduce_full(&self.elements, tail, Some(k), track);
            let mut new_terms = vec![lead];
            new_terms.extend(rem.into_terms());
            self.elements[k] = Polynomial::from_sorted(&self.table, new_terms);
            if let Some(cofs) = &mut self.cofactors {
                let mut cof = cofs[k].clone();
                for (j, q) in quot {
                    for (g, c) in cofs[j].iter().enumerate() {
                        if !c.is_zero() {
                            cof[g] = &cof[g] - &(&q * c);
                        }
                    }
                }
                cofs[k] = cof;
            }
        }
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn is_tracked(&self) -> bool {
        self.cofactors.is_some()
    }

    /// Cofactors of basis element `k` in the generators, if tracked.
    pub fn element_cofactors(&self, k: usize) -> Option<&[Polynomial]> {
        self.cofactors.as_ref().map(|c| c[k].as_slice())
    }

    fn check_degree(&self, p: &Polynomial) -> Result<()> {
        crate::poly::same_table(p.table(), &self.table)?;
        match p.degree() {
            Some(d) if d > self.degree_cap => Err(Error::OutOfRange(format!(
                "degree {d} exceeds the basis degree cap {}",
                self.degree_cap
            ))),
            _ => Ok(()),
        }
    }

    /// Canonical representative of `p` modulo the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_degree(p)?;
        Ok(reduce_full(&self.elements, p.clone(), None, false).0)
    }

    /// Normal form together with cofactors in the generators: `p - nf = sum cof_i g_i`.
    pub fn reduce_with_cofactors(&self, p: &Polynomial) -> Result<(Polynomial, Certificate)> {
        self.check_degree(p)?;
        let cofs = self.cofactors.as_ref().ok_or_else(|| {
            Error::EngineInconsistency("certificate requested from an untracked basis".into())
        })?;
        let (rem, quot) = reduce_full(&self.elements, p.clone(), None, true);
        let mut acc = vec![Polynomial::zero(&self.table); self.generators.len()];
        for (k, q) in quot {
            for (g, c) in cofs[k].iter().enumerate() {
                if !c.is_zero() {
                    acc[g] = &acc[g] + &(&q * c);
                }
            }
        }
        let terms = acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        Ok((rem, Certificate { terms }))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// All S- and G-polynomials up to the cap reduce to zero.
    pub fn check_pairs(&self) -> bool {
        let w = self.table.weights();
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let (mi, a) = self.elements[i].leading_term().unwrap();
                let (mj, b) = self.elements[j].leading_term().unwrap();
                let lcm = mi.lcm(mj, w);
                if lcm.degree() > self.degree_cap {
                    continue;
                }
                let ui = mi.quotient_of(&lcm);
                let uj = mj.quotient_of(&lcm);
                let l = a.lcm(b);
                let mut s = self.elements[i].mul_term(&(&l / a), &ui);
                s.sub_mul_term_assign(&(&l / b), &uj, &self.elements[j]);
                let eg = a.extended_gcd(b);
                let mut g = self.elements[i].mul_term(&eg.x, &ui);
                g.sub_mul_term_assign(&-&eg.y, &uj, &self.elements[j]);
                let reduces = |p: Polynomial| reduce_full(&self.elements, p, None, false).0.is_zero();
                if !reduces(s) || !reduces(g) {
                    return false;
                }
            }
        }
        true
    }
}
