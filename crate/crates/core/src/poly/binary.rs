//! Binary forms in (u, v): gcds and squarefree parts via dehomogenization.

use crate::error::{Error, Result};
use crate::exact::Cyclotomic;

use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Cyclotomic>);

impl UniPoly {
    pub fn new(mut c: Vec<Cyclotomic>) -> Self {
        while c.last().is_some_and(Cyclotomic::is_zero) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * &Cyclotomic::from_i64(k as i64)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inverse().expect("nonzero leading coefficient");
                UniPoly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.0[dd].inverse().expect("nonzero leading coefficient");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UniPoly(Vec::new()), self.clone());
        }
        let mut q = vec![Cyclotomic::zero(); rem.len() - dd];
        for k in (0..rem.len() - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

fn check_binary(f: &Polynomial) -> Result<u32> {
    if f.nvars() != 2 {
        return Err(Error::NvarsMismatch(f.nvars(), 2));
    }
    f.homogeneous_degree()
}

/// f(u, v) ↦ (f(t, 1), multiplicity of v as a factor).
pub fn dehomogenize(f: &Polynomial) -> Result<(UniPoly, u32)> {
    let n = check_binary(f)?;
    let mut c = vec![Cyclotomic::zero(); n as usize + 1];
    for (m, a) in f.terms() {
        c[m.exp(0) as usize] = a.clone();
    }
    let g = UniPoly::new(c);
    let vmult = n - g.degree().expect("nonzero form") as u32;
    Ok((g, vmult))
}

/// Homogenizes g(t) to degree deg(g) + vmult, multiplying by v^vmult.
pub fn homogenize(g: &UniPoly, vmult: u32) -> Polynomial {
    let n = g.degree().map_or(0, |d| d as u32) + vmult;
    Polynomial::from_terms(
        2,
        g.0.iter()
            .enumerate()
            .map(|(k, c)| (Monomial::from_exps(&[k as u16, (n - k as u32) as u16]), c.clone())),
    )
}

/// Gcd of two nonzero binary forms, normalized monic in u.
pub fn binary_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (a, va) = dehomogenize(f)?;
    let (b, vb) = dehomogenize(g)?;
    Ok(homogenize(&a.gcd(&b), va.min(vb)))
}

/// Product of the distinct linear factors of f.
pub fn binary_squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    let (g, vmult) = dehomogenize(f)?;
    let d = g.gcd(&g.derivative());
    let (q, _) = g.divrem(&d);
    Ok(homogenize(&q.monic(), vmult.min(1)))
}

/// Number of distinct roots on P¹.
pub fn distinct_root_count(f: &Polynomial) -> Result<u32> {
    binary_squarefree_part(f)?.homogeneous_degree()
}

pub fn is_squarefree(f: &Polynomial) -> Result<bool> {
    Ok(distinct_root_count(f)? == check_binary(f)?)
}
