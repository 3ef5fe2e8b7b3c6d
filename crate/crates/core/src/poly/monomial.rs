use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exps = SmallVec<[u16; 8]>;

/// Exponent vector with its cached weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: Exps,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exps(exps: &[u16], weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { deg, exps: SmallVec::from_slice(exps) }
    }

    pub fn var(i: usize, nvars: usize, weights: &[u32]) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = weights[i];
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { deg, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Weighted graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grevlex(other)
    }
}

/// All exponent vectors of weighted degree exactly `d`, in descending monomial order.
pub fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Monomial> {
    let n = weights.len();
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, rem: u32, weights: &[u32], cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == weights.len() {
            if rem % weights[i] == 0 {
                cur[i] = (rem / weights[i]) as u16;
                out.push(Monomial::from_exps(cur, weights));
                cur[i] = 0;
            }
            return;
        }
        let w = weights[i];
        for e in 0..=rem / w {
            cur[i] = e as u16;
            rec(i + 1, rem - e * w, weights, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, weights, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of weighted degree `d`, without materializing them.
pub fn count_monomials(weights: &[u32], d: u32) -> usize {
    let mut ways = vec![0usize; d as usize + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for k in w..=d as usize {
            ways[k] = ways[k].saturating_add(ways[k - w]);
        }
    }
    ways[d as usize]
}
