//! Pushforwards along multiplication maps `(P^1)^N -> P^N`, evaluated with rational
//! bookkeeping. Only classes of degree at most 2 are accepted, where the target groups
//! are torsion free; every result has to come out integral.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::formulas::{dab, odd};
use super::tables;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Table, VariableTable};

const MAX_DEGREE: u32 = 2;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `tau1..tauN`, all of degree 1.
pub fn tau_table(n: usize) -> Table {
    let names: Vec<(String, u32)> = (1..=n).map(|i| (format!("tau{i}"), 1)).collect();
    VariableTable::new(&names).expect("tau table")
}

/// A class `num / den` on `(P^1)^N`, `num` a polynomial in the `tau_i`.
#[derive(Debug, Clone)]
pub struct TauClass {
    pub num: Polynomial,
    pub den: BigInt,
}

impl TauClass {
    pub fn parse(n: usize, expr: &str, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::OutOfRange("zero denominator".into()));
        }
        Ok(TauClass { num: Polynomial::parse(&tau_table(n), expr)?, den: BigInt::from(den) })
    }
}

impl std::fmt::Display for TauClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

/// Product of multiplication maps, one block `(P^1)^N -> P^N` per factor, with the
/// hyperplane class of each `P^N` named in `target`. `target` must contain `c2`.
#[derive(Debug, Clone)]
pub struct RhoMap {
    blocks: Vec<(usize, String)>,
    target: Table,
}

impl RhoMap {
    pub fn new(blocks: &[(usize, &str)], target: &Table) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(|(n, _)| *n == 0) {
            return Err(Error::OutOfRange("need nonempty blocks".into()));
        }
        for (_, xi) in blocks {
            Polynomial::var(target, xi)?;
        }
        Polynomial::var(target, "c2")?;
        Ok(RhoMap { blocks: blocks.iter().map(|(n, s)| (*n, s.to_string())).collect(), target: target.clone() })
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.0).sum()
    }

    pub fn degree(&self) -> BigInt {
        self.blocks.iter().map(|b| factorial(b.0)).product()
    }

    /// Pushforward of a product of distinct `tau_i` lying in one block of size `n`.
    fn push_block(&self, n: usize, xi: &str, k: usize) -> Polynomial {
        let t = &self.target;
        let x = Polynomial::var(t, xi).unwrap();
        let c2 = Polynomial::var(t, "c2").unwrap();
        match k {
            0 => Polynomial::constant(t, factorial(n)),
            1 => x.scale(&(factorial(n - 1) * 2)),
            _ => {
                &x.pow(2).scale(&(factorial(n - 2) * 4)) + &c2.scale(&(factorial(n - 2) * BigInt::from(n)))
            }
        }
    }

    /// Integral pushforward of a polynomial in the `tau_i`, using `tau_i^2 = -c2`.
    pub fn push(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.table().len() != self.n() {
            return Err(Error::IncompatibleRings(format!(
                "class lives on (P^1)^{}, map starts at (P^1)^{}",
                p.table().len(),
                self.n()
            )));
        }
        let c2 = Polynomial::var(&self.target, "c2")?;
        let mut acc = Polynomial::zero(&self.target);
        for (m, c) in p.terms() {
            if m.degree() > MAX_DEGREE {
                return Err(Error::RationalRouteNotJustified(format!(
                    "class {p} has degree {} > {MAX_DEGREE}",
                    m.degree()
                )));
            }
            let mut term = Polynomial::constant(&self.target, c.clone());
            let mut start = 0;
            for (n, xi) in &self.blocks {
                let mut k = 0;
                for i in start..start + n {
                    match m.exp(i) {
                        0 => {}
                        1 => k += 1,
                        _ => term = &term * &(-c2.clone()),
                    }
                }
                if k > 2 {
                    return Err(Error::RationalRouteNotJustified(format!("too many factors in {p}")));
                }
                term = &term * &self.push_block(*n, xi, k);
                start += n;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

/// `value = rho_*(x) / (den(x) * other_degree)`, where `other_degree` is the degree of the
/// map through which `rho` factors.
#[derive(Debug, Clone)]
pub struct QPush {
    pub numerator: Polynomial,
    pub denominator: BigInt,
    pub value: Polynomial,
}

pub fn qpush_eval(x: &TauClass, rho: &RhoMap, other_degree: &BigInt) -> Result<QPush> {
    let numerator = rho.push(&x.num)?;
    let denominator = &x.den * other_degree;
    if denominator.is_zero() {
        return Err(Error::OutOfRange("zero map degree".into()));
    }
    let mut terms = Vec::with_capacity(numerator.len());
    for (m, c) in numerator.terms() {
        let (q, r) = c.div_rem(&denominator);
        if !r.is_zero() {
            return Err(Error::NonIntegral(format!("({numerator}) / {denominator}")));
        }
        terms.push((m.clone(), q));
    }
    let value = Polynomial::from_terms(&rho.target, terms);
    Ok(QPush { numerator, denominator, value })
}

/// One identity of a rational-route chain. `holds` compares `value` with `expected`
/// modulo `modulo` (empty for an exact equality).
#[derive(Debug, Clone)]
pub struct QPushIdentity {
    pub id: String,
    pub anchor: String,
    pub expression: String,
    pub denominator: BigInt,
    pub value: Polynomial,
    pub expected: Polynomial,
    pub modulo: Vec<Polynomial>,
    pub holds: bool,
}

fn identity(
    id: &str,
    anchor: &str,
    expression: String,
    denominator: BigInt,
    value: Polynomial,
    expected: Polynomial,
    modulo: Vec<Polynomial>,
) -> Result<QPushIdentity> {
    let diff = &value - &expected;
    let holds = if modulo.is_empty() {
        diff.is_zero()
    } else {
        Ideal::new(value.table(), modulo.clone())?.contains_bool(&diff)?
    };
    Ok(QPushIdentity { id: id.into(), anchor: anchor.into(), expression, denominator, value, expected, modulo, holds })
}

fn pushed(id: &str, anchor: &str, x: TauClass, rho: &RhoMap, other: BigInt, expected: Polynomial) -> Result<(QPushIdentity, Polynomial)> {
    let q = qpush_eval(&x, rho, &other)?;
    let v = q.value.clone();
    Ok((identity(id, anchor, format!("rho_*({x}) / {other}"), q.denominator, q.value, expected, vec![])?, v))
}

/// `rho_*(tau_1)` on `(P^1)^n`, in `xi, c1, c2, c3`.
pub fn rho_tau(n: usize) -> Result<QPushIdentity> {
    let t = tables::torus_coefficients();
    let rho = RhoMap::new(&[(n, "xi")], &t)?;
    let expected = Polynomial::var(&t, "xi")?.scale(&(factorial(n - 1) * 2));
    Ok(pushed("rho_tau", "pushforward of one tau along the multiplication map", TauClass::parse(n, "tau1", 1)?, &rho, BigInt::one(), expected)?.0)
}

/// The odd-genus chain: `phi_*(tau)`, the multiplication pushforwards, the double
/// diagonal class and the pushforward of the orientation class.
pub fn odd_chain(g: i64) -> Result<Vec<QPushIdentity>> {
    odd::check(g)?;
    let t = tables::odd();
    let n = 2 * g as usize;
    let rho = RhoMap::new(&[(n, "xi")], &t)?;
    let p = |s: &str| Polynomial::parse(&t, s);
    let gamma = p("g1")?;
    let mut out = Vec::new();

    let (phi_tau, phi_tau_v) = pushed(
        "phi_tau",
        "phi_*(tau) = 2 xi",
        TauClass::parse(n, "tau1", 1)?,
        &rho,
        factorial(n - 1),
        p("2*xi")?,
    )?;
    out.push(phi_tau);
    let (phi_one, phi_one_v) =
        pushed("phi_1", "phi has degree 2g", TauClass::parse(n, "1", 1)?, &rho, factorial(n - 1), p(&format!("{}", 2 * g))?)?;
    out.push(phi_one);

    let theta: BigInt = factorial(n - 2) * 2;
    let pair = format!("tau{} + tau{}", n - 1, n);
    let (m1, m1_v) = pushed(
        "mult_xi2",
        "mult_*(xi2) = (2g-1) xi",
        TauClass::parse(n, &pair, 2)?,
        &rho,
        theta.clone(),
        p(&format!("{}*xi", 2 * g - 1))?,
    )?;
    out.push(m1);
    let (m2, m2_v) = pushed(
        "mult_xi2sq",
        "mult_*(xi2^2) = xi^2 - g(g-1) c2",
        TauClass::parse(n, &format!("({pair})^2"), 4)?,
        &rho,
        theta.clone(),
        p(&format!("xi^2 - {}*c2", g * (g - 1)))?,
    )?;
    out.push(m2);
    let (m0, m0_v) =
        pushed("mult_1", "mult has degree g(2g-1)", TauClass::parse(n, "1", 1)?, &rho, theta, p(&format!("{}", g * (2 * g - 1)))?)?;
    out.push(m0);

    // [D11] = mult_*(xi2^2) + gamma mult_*(xi2) + mult_*(1) (c2 + gamma^2)
    let d11 = &(&m2_v + &(&gamma * &m1_v)) + &(&m0_v * &p("c2 + g1^2")?);
    out.push(identity(
        "uD11.odd",
        "double diagonal class, odd genus",
        "mult_*(xi2^2) + g1 mult_*(xi2) + mult_*(1) (c2 + g1^2)".into(),
        BigInt::one(),
        d11,
        odd::diag11(g).poly,
        vec![p("2*g1")?],
    )?);

    // i1_*(alpha) = phi_*(tau (tau + gamma)) = phi_*(tau^2) + gamma phi_*(tau)
    let (sq, sq_v) = pushed(
        "phi_tau2",
        "phi_*(tau^2) = -c2 phi_*(1)",
        TauClass::parse(n, "tau1^2", 1)?,
        &rho,
        factorial(n - 1),
        &phi_one_v * &p("-c2")?,
    )?;
    out.push(sq);
    out.push(identity(
        "i1alpha.odd",
        "pushforward of the orientation class, odd genus",
        "phi_*(tau^2) + g1 phi_*(tau)".into(),
        BigInt::one(),
        &sq_v + &(&gamma * &phi_tau_v),
        odd::i1_alpha(g).poly,
        vec![p("2*g1")?],
    )?);
    Ok(out)
}

/// `M1_*(1)` and `M1_*(tau)` on the product of two projective spaces.
pub fn m1_chain(a: i64, b: i64) -> Result<Vec<QPushIdentity>> {
    dab::check(a, b)?;
    let t = tables::dab();
    let (na, nb) = (2 * a as usize, 2 * b as usize);
    let rho = RhoMap::new(&[(na, "xi2a"), (nb, "xi2b")], &t)?;
    let sigma: BigInt = factorial(na - 1) * factorial(nb - 1) * 2;
    let j = na + 1;
    let mut out = Vec::new();
    out.push(
        pushed(
            "M1_1",
            "M1_*(1) = 2b xi2a + 2a xi2b",
            TauClass::parse(na + nb, &format!("tau1 + tau{j}"), 1)?,
            &rho,
            sigma.clone(),
            dab::parse_in(&dab::m1_one(a, b)),
        )?
        .0,
    );
    out.push(
        pushed(
            "M1_tau",
            "M1_*(tau) = 2 xi2a xi2b - 2ab c2",
            TauClass::parse(na + nb, &format!("tau1^2 + tau1*tau{j}"), 1)?,
            &rho,
            sigma,
            dab::parse_in(&dab::m1_tau(a, b)),
        )?
        .0,
    );
    Ok(out)
}
