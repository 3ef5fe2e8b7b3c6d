use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::table::{same_table, Table};
use crate::error::{Error, Result};

/// Sparse polynomial over Z. Terms are kept sorted in descending monomial order
/// with no zero coefficients, so equality is structural.
#[derive(Debug, Clone)]
pub struct Polynomial {
    table: Table,
    terms: Vec<(Monomial, BigInt)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table).is_ok() && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(table: &Table) -> Self {
        Polynomial { table: table.clone(), terms: Vec::new() }
    }

    pub fn constant(table: &Table, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Polynomial::zero(table);
        if !c.is_zero() {
            p.terms.push((Monomial::one(table.len()), c));
        }
        p
    }

    pub fn one(table: &Table) -> Self {
        Polynomial::constant(table, 1)
    }

    pub fn var(table: &Table, name: &str) -> Result<Self> {
        let i = table
            .index_of(name)
            .ok_or_else(|| Error::UnknownId(format!("variable {name}")))?;
        Ok(Polynomial::var_index(table, i))
    }

    pub fn var_index(table: &Table, i: usize) -> Self {
        let m = Monomial::var(i, table.len(), table.weights());
        Polynomial { table: table.clone(), terms: vec![(m, BigInt::one())] }
    }

    pub fn term(table: &Table, c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut p = Polynomial::zero(table);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary terms; combines and sorts them.
    pub fn from_terms(table: &Table, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Polynomial::from_map(table, acc)
    }

    fn from_map(table: &Table, acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { table: table.clone(), terms }
    }

    /// Trusted constructor: terms must already be sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted(table: &Table, terms: Vec<(Monomial, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { table: table.clone(), terms }
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigInt)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(x, _)| m.cmp(x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Maximum weighted degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(x, _)| x.degree() == m.degree()),
        }
    }

    /// Homogeneous components by weighted degree.
    pub fn graded_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().push((m.clone(), c.clone()));
        }
        out.into_iter().map(|(d, t)| (d, Polynomial::from_sorted(&self.table, t))).collect()
    }

    pub fn component(&self, d: u32) -> Polynomial {
        let t = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial::from_sorted(&self.table, t)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn max_exp(&self, i: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        same_table(&self.table, &other.table)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        same_table(&self.table, &other.table)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        same_table(&self.table, &other.table)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Less
            } else if j == b.len() {
                std::cmp::Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { table: self.table.clone(), terms: out }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.table);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(c, m);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(c, m);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Polynomial::from_map(&self.table, acc)
    }

    /// `c * m * self`; monomial multiplication preserves the order, so no sort is needed.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        let terms = self.terms.iter().map(|(x, d)| (x.mul(m), d * c)).collect();
        Polynomial { table: self.table.clone(), terms }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        let terms = self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect();
        Polynomial { table: self.table.clone(), terms }
    }

    pub fn scale_i(&self, c: i64) -> Polynomial {
        self.scale(&BigInt::from(c))
    }

    /// `self -= c * m * g`, merging in place.
    pub fn sub_mul_term_assign(&mut self, c: &BigInt, m: &Monomial, g: &Polynomial) {
        if c.is_zero() || g.is_zero() {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(old.len() + g.terms.len());
        let mut it = old.into_iter().peekable();
        for (gm, gc) in &g.terms {
            let pm = gm.mul(m);
            while let Some((x, _)) = it.peek() {
                if *x > pm {
                    out.push(it.next().unwrap());
                } else {
                    break;
                }
            }
            let sub = gc * c;
            match it.peek() {
                Some((x, _)) if *x == pm => {
                    let (x, xc) = it.next().unwrap();
                    let r = xc - sub;
                    if !r.is_zero() {
                        out.push((x, r));
                    }
                }
                _ => out.push((pm, -sub)),
            }
        }
        out.extend(it);
        self.terms = out;
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.table);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Flips the sign so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Ring homomorphism: variable `i` of `self.table` goes to `images[i]`.
    pub fn eval_map(&self, images: &[Polynomial], target: &Table) -> Result<Polynomial> {
        if images.len() != self.table.len() {
            return Err(Error::IncompatibleRings(format!(
                "{} images for {} variables",
                images.len(),
                self.table.len()
            )));
        }
        for im in images {
            same_table(im.table(), target)?;
        }
        let mut cache: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().product(&images[i]);
                    cache[i].push(next);
                }
                t = t.product(&cache[i][e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Substitutes named variables; the result lives in the same table.
    pub fn substitute(&self, subs: &[(&str, &Polynomial)]) -> Result<Polynomial> {
        let mut images: Vec<Polynomial> =
            (0..self.table.len()).map(|i| Polynomial::var_index(&self.table, i)).collect();
        for (name, img) in subs {
            let i = self
                .table
                .index_of(name)
                .ok_or_else(|| Error::UnknownId(format!("variable {name}")))?;
            same_table(img.table(), &self.table)?;
            images[i] = (*img).clone();
        }
        self.eval_map(&images, &self.table.clone())
    }

    /// Moves the polynomial into `target`, matching variables by name. Variables of the
    /// source table that do not occur in `self` need not exist in `target`.
    pub fn embed(&self, target: &Table) -> Result<Polynomial> {
        let mut idx = Vec::with_capacity(self.table.len());
        for (i, (name, w)) in self.table.entries().enumerate() {
            match target.index_of(name) {
                Some(j) if target.weight(j) == w => idx.push(Some(j)),
                Some(_) => return Err(Error::IncompatibleRings(format!("weight of {name} differs"))),
                None if self.uses_var(i) => {
                    return Err(Error::IncompatibleRings(format!("variable {name} missing in target table")))
                }
                None => idx.push(None),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; target.len()];
            for (i, &x) in m.exps().iter().enumerate() {
                if let Some(j) = idx[i] {
                    e[j] = x;
                }
            }
            (Monomial::from_exps(&e, target.weights()), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Coefficient of `var^k` as a polynomial in the remaining variables (same table).
    pub fn coefficient_of_power(&self, var: usize, k: u16) -> Polynomial {
        let w = self.table.weights();
        let terms = self.terms.iter().filter(|(m, _)| m.exp(var) == k).map(|(m, c)| {
            let mut e: Vec<u16> = m.exps().to_vec();
            e[var] = 0;
            (Monomial::from_exps(&e, w), c.clone())
        });
        Polynomial::from_terms(&self.table, terms)
    }

    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    pub fn parse(table: &Table, s: &str) -> Result<Polynomial> {
        super::parse::parse(table, s)
    }
}

fn fmt_monomial(m: &Monomial, table: &Table, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(table.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                fmt_monomial(m, &self.table, f)?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                if let Err(e) = same_table(&self.table, &rhs.table) {
                    panic!("{e}");
                }
                $body(self, rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Polynomial, b: &Polynomial| a.merge(b, false));
binop!(Sub, sub, |a: &Polynomial, b: &Polynomial| a.merge(b, true));
binop!(Mul, mul, |a: &Polynomial, b: &Polynomial| a.product(b));

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { table: self.table.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
