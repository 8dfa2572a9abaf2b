//! Reduction of cyclotomic polynomials to prime fields F_p with p ≡ 1 (mod 60).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::cyclotomic::{mulmod, powmod};
use crate::exact::Cyclotomic;

use super::monomial::Monomial;
use super::polynomial::Polynomial;

pub const DEFAULT_PRIMES: [u64; 2] = [61, 241];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeFieldConfig {
    pub p: u64,
    /// Image of ζ₆₀: an element of multiplicative order exactly 60.
    pub w: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeFieldConfig {
    /// Picks the smallest primitive 60th root of unity mod p.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p % 60 != 1 || p >= 1 << 31 {
            return Err(Error::BadPrime(p));
        }
        let w = (2..p)
            .find(|&g| powmod(g, 60, p) == 1 && [30, 20, 12].iter().all(|&e| powmod(g, e, p) != 1))
            .ok_or(Error::BadPrime(p))?;
        Ok(PrimeFieldConfig { p, w })
    }

    pub fn with_root(p: u64, w: u64) -> Result<Self> {
        let cfg = Self::new(p)?;
        if powmod(w, 60, p) != 1 || [30, 20, 12].iter().any(|&e| powmod(w, e, p) == 1) {
            return Err(Error::BadPrime(p));
        }
        Ok(PrimeFieldConfig { w, ..cfg })
    }

    pub fn reduce(&self, c: &Cyclotomic) -> Result<u64> {
        c.reduce_mod(self.p, self.w)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mulmod(a, b, self.p)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        powmod(a, self.p - 2, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        powmod(a, e, self.p)
    }
}

/// Polynomial over F_p, terms in descending grevlex order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    pub p: u64,
    pub nvars: usize,
    pub terms: Vec<(Monomial, u64)>,
}

impl ModPoly {
    fn from_unsorted(p: u64, nvars: usize, mut terms: Vec<(Monomial, u64)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = (*lc + c) % p,
                _ => out.push((m, c % p)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        ModPoly { p, nvars, terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn eval(&self, x: &[u64]) -> u64 {
        assert_eq!(x.len(), self.nvars);
        let p = self.p;
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = *c;
            for (i, xi) in x.iter().enumerate() {
                let e = m.0[i];
                if e > 0 {
                    t = mulmod(t, powmod(*xi, u64::from(e), p), p);
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let p = self.p;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let mut mm = *m;
                mm.0[var] -= 1;
                (mm, mulmod(*c, u64::from(m.0[var]) % p, p))
            })
            .collect();
        Self::from_unsorted(p, self.nvars, terms)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        t.extend(o.terms.iter().cloned());
        Self::from_unsorted(self.p, self.nvars, t)
    }

    pub fn scale(&self, c: u64) -> Self {
        let t = self.terms.iter().map(|(m, a)| (*m, mulmod(*a, c, self.p))).collect();
        Self::from_unsorted(self.p, self.nvars, t)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(self.p - 1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                t.push((m1.mul(m2), mulmod(*c1, *c2, self.p)));
            }
        }
        Self::from_unsorted(self.p, self.nvars, t)
    }

    /// Hessian matrix evaluated at x.
    pub fn hessian_at(&self, x: &[u64]) -> Vec<Vec<u64>> {
        let grad = self.gradient();
        grad.iter().map(|g| (0..self.nvars).map(|j| g.partial(j).eval(x)).collect()).collect()
    }
}

pub fn reduce_mod_p(f: &Polynomial, cfg: &PrimeFieldConfig) -> Result<ModPoly> {
    let terms = f.terms().map(|(m, c)| Ok((*m, cfg.reduce(c)?))).collect::<Result<Vec<_>>>()?;
    Ok(ModPoly::from_unsorted(cfg.p, f.nvars(), terms))
}

/// Rank of a matrix over F_p.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = powmod(rows[rank][c], p - 2, p);
        for j in 0..ncols {
            rows[rank][j] = mulmod(rows[rank][j], inv, p);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let sub = mulmod(f, rows[rank][j], p);
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{golden, sqrt3};

    #[test]
    fn primitive_roots() {
        for p in DEFAULT_PRIMES {
            let cfg = PrimeFieldConfig::new(p).unwrap();
            assert_eq!(cfg.pow(cfg.w, 60), 1);
            assert!((1..60).all(|e| cfg.pow(cfg.w, e) != 1));
        }
        assert_eq!(PrimeFieldConfig::new(59), Err(Error::BadPrime(59)));
        assert_eq!(PrimeFieldConfig::new(121), Err(Error::BadPrime(121)));
    }

    #[test]
    fn golden_and_sqrt3_images() {
        let cfg = PrimeFieldConfig::new(61).unwrap();
        let l = cfg.reduce(&golden()).unwrap();
        assert_eq!(cfg.sub(cfg.sub(cfg.mul(l, l), l), 1), 0);
        let s = cfg.reduce(&sqrt3()).unwrap();
        assert_eq!(cfg.mul(s, s), 3);
    }

    #[test]
    fn integer_polynomial_reduces_coefficientwise() {
        let f = Polynomial::from_int_terms(4, &[(&[2, 0, 0, 2], 1), (&[1, 1, 1, 1], -6), (&[0, 2, 2, 0], -3)]);
        let cfg = PrimeFieldConfig::new(61).unwrap();
        let r = reduce_mod_p(&f, &cfg).unwrap();
        let coeffs: Vec<u64> = r.terms.iter().map(|(_, c)| *c).collect();
        assert_eq!(coeffs, vec![58, 55, 1]);
    }

    #[test]
    fn rejects_bad_denominators() {
        let f = Polynomial::constant(1, Cyclotomic::from_frac(1, 61));
        let cfg = PrimeFieldConfig::new(61).unwrap();
        assert_eq!(reduce_mod_p(&f, &cfg), Err(Error::BadReduction(61)));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], 61), 1);
        assert_eq!(rank_mod_p(vec![vec![1, 0], vec![0, 1]], 61), 2);
    }
}
