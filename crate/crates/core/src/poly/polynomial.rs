//! Sparse multivariate polynomials over Q(ζ₆₀).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Rational};

use super::monomial::{Monomial, MAX_VARS};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Cyclotomic) -> Self {
        Self::term(nvars, Monomial::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Cyclotomic::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range");
        Self::term(nvars, Monomial::var(i), Cyclotomic::one())
    }

    /// All variables x₀..x_{n−1}.
    pub fn vars(nvars: usize) -> Vec<Self> {
        (0..nvars).map(|i| Self::var(nvars, i)).collect()
    }

    pub fn term(nvars: usize, m: Monomial, c: Cyclotomic) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Cyclotomic)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from integer-coefficient terms.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u16], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (Monomial::from_exps(e), Cyclotomic::from_i64(*c))),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Cyclotomic) {
        debug_assert!(m.support_len() <= self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Cyclotomic)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclotomic {
        self.terms.get(m).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn coeff_of(&self, exps: &[u16]) -> Cyclotomic {
        self.coeff(&Monomial::from_exps(exps))
    }

    pub fn leading(&self) -> Option<(&Monomial, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.degree().unwrap_or(0))
    }

    fn check_nvars(&self, o: &Self) -> Result<()> {
        if self.nvars == o.nvars {
            Ok(())
        } else {
            Err(Error::NvarsMismatch(self.nvars, o.nvars))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_nvars(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_nvars(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_nvars(o)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Cyclotomic::from_i64(n))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Cyclotomic::from_rational(r))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Applies ζ₆₀ ↦ ζ₆₀ᵏ to every coefficient.
    pub fn galois(&self, k: i64) -> Self {
        self.map_coeffs(|c| c.galois(k))
    }

    /// Substitutes `images[i]` for xᵢ.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Self::zero(0).try_add(&self.constant_part()),
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::NvarsMismatch(target, bad.nvars));
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Self::one(target), p.clone()]).collect();
        for m in self.terms.keys() {
            for (i, pw) in powers.iter_mut().enumerate() {
                while pw.len() <= m.0[i] as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
            }
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = m.0[i] as usize;
                if e > 0 {
                    t = &t * &pw[e];
                }
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    fn constant_part(&self) -> Self {
        Self::constant(0, self.coeff(&Monomial::one()))
    }

    /// Applies a linear change of variables: xᵢ ↦ Σⱼ m[i][j]·xⱼ.
    pub fn linear_substitute(&self, m: &crate::poly::Matrix) -> Result<Self> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: m.rows() });
        }
        let images: Vec<Polynomial> = (0..self.nvars)
            .map(|i| {
                Polynomial::from_terms(
                    self.nvars,
                    (0..self.nvars).map(|j| (Monomial::var(j), m.get(i, j).clone())),
                )
            })
            .collect();
        self.substitute(&images)
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::VarOutOfRange { index: var, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut mm = *m;
            mm.0[var] -= 1;
            out.add_term(mm, c * &Cyclotomic::from_i64(i64::from(e)));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial_derivative(i).expect("index in range")).collect()
    }

    pub fn eval(&self, point: &[Cyclotomic]) -> Result<Cyclotomic> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Cyclotomic::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.0[i];
                if e > 0 {
                    t *= x.pow(i64::from(e)).expect("nonnegative power");
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval_ints(&self, point: &[i64]) -> Result<Cyclotomic> {
        let pt: Vec<Cyclotomic> = point.iter().map(|&x| Cyclotomic::from_i64(x)).collect();
        self.eval(&pt)
    }

    /// Reinterprets the polynomial in `n ≥ nvars` variables.
    pub fn extend_vars(&self, n: usize) -> Self {
        assert!(n >= self.nvars && n <= MAX_VARS);
        Polynomial { nvars: n, terms: self.terms.clone() }
    }

    /// Returns c with self = c·other, if such c exists.
    pub fn proportional_to(&self, other: &Self) -> Option<Cyclotomic> {
        proportional(self, other)
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let mono: Vec<String> = (0..self.nvars)
                .filter(|&i| m.0[i] > 0)
                .map(|i| {
                    let name = names.get(i).map_or_else(|| format!("x{i}"), |n| n.to_string());
                    if m.0[i] == 1 {
                        name
                    } else {
                        format!("{name}^{}", m.0[i])
                    }
                })
                .collect();
            let coeff = match c.as_rational() {
                Some(r) => {
                    let neg = r < Rational::from_integer(0.into());
                    let mag = if neg { -r } else { r };
                    let sign = if neg { "-" } else { "+" };
                    let body = if mono.is_empty() || mag != Rational::from_integer(1.into()) {
                        let m = mag.to_string();
                        if mono.is_empty() {
                            m
                        } else {
                            format!("{m}*")
                        }
                    } else {
                        String::new()
                    };
                    (sign, body)
                }
                None => ("+", format!("({c})*")),
            };
            let (sign, body) = coeff;
            let body = if mono.is_empty() { body.trim_end_matches('*').to_string() } else { body };
            if k == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            s.push_str(&body);
            s.push_str(&mono.join("*"));
        }
        s
    }
}

pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => f.try_add(g),
        PolyOp::Sub => f.try_sub(g),
        PolyOp::Mul => f.try_mul(g),
    }
}

/// Finds c with f = c·g by comparing leading coefficients and then verifying.
pub fn proportional(f: &Polynomial, g: &Polynomial) -> Option<Cyclotomic> {
    if f.nvars != g.nvars {
        return None;
    }
    if f.is_zero() {
        return Some(Cyclotomic::zero());
    }
    if g.is_zero() || f.terms.len() != g.terms.len() {
        return None;
    }
    let (mf, cf) = f.leading()?;
    let (mg, cg) = g.leading()?;
    if mf != mg {
        return None;
    }
    let c = cf.checked_div(cg).ok()?;
    for ((m1, a), (m2, b)) in f.terms.iter().zip(g.terms.iter()) {
        if m1 != m2 || *a != b * &c {
            return None;
        }
    }
    Some(c)
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands have different variable counts.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs).expect("polynomial operands must share nvars")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale_int(-1)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&[]))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn tangential_quartic_expansion() {
        let v = Polynomial::vars(4);
        let q1 = &v[0] * &v[3] - &v[1] * &v[2];
        let q2 = &v[0] * &v[2] - &v[1] * &v[1];
        let q3 = &v[1] * &v[3] - &v[2] * &v[2];
        let f = &q1 * &q1 - (&q2 * &q3).scale_int(4);
        let expect = Polynomial::from_int_terms(
            4,
            &[
                (&[2, 0, 0, 2], 1),
                (&[1, 1, 1, 1], -6),
                (&[1, 0, 3, 0], 4),
                (&[0, 3, 0, 1], 4),
                (&[0, 2, 2, 0], -3),
            ],
        );
        assert_eq!(f, expect);
        assert!((&q1 * &Polynomial::zero(4)).is_zero());
    }

    #[test]
    fn nvars_mismatch_is_an_error() {
        assert_eq!(x(2, 0).try_add(&x(3, 0)), Err(Error::NvarsMismatch(2, 3)));
    }

    #[test]
    fn veronese_substitution() {
        let v = Polynomial::vars(4);
        let (u, w) = (x(2, 0), x(2, 1));
        let ver = vec![u.pow(3), &u.pow(2) * &w, &u * &w.pow(2), w.pow(3)];
        let q2 = &v[0] * &v[2] - &v[1] * &v[1];
        assert!(q2.substitute(&ver).unwrap().is_zero());
        let r1 = &v[0] * &v[3] + (&v[1] * &v[2]).scale_int(9);
        assert_eq!(
            r1.substitute(&ver).unwrap(),
            Polynomial::from_int_terms(2, &[(&[3, 3], 10)])
        );
        assert_eq!(
            q2.substitute(&ver[..3]),
            Err(Error::ArityMismatch { expected: 4, got: 3 })
        );
    }

    #[test]
    fn derivatives() {
        let f = Polynomial::from_int_terms(4, &[(&[2, 0, 0, 2], 1)]);
        assert_eq!(
            f.partial_derivative(0).unwrap(),
            Polynomial::from_int_terms(4, &[(&[1, 0, 0, 2], 2)])
        );
        assert_eq!(
            f.partial_derivative(4),
            Err(Error::VarOutOfRange { index: 4, nvars: 4 })
        );
    }

    #[test]
    fn proportionality() {
        let f = Polynomial::from_int_terms(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], -3)]);
        assert_eq!(proportional(&f.scale_int(2), &f), Some(Cyclotomic::from_i64(2)));
        let g = Polynomial::from_int_terms(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], 3)]);
        assert_eq!(proportional(&g, &f), None);
        assert_eq!(proportional(&Polynomial::zero(3), &f), Some(Cyclotomic::zero()));
    }

    #[test]
    fn display() {
        let f = Polynomial::from_int_terms(2, &[(&[1, 1], -2), (&[2, 0], 1), (&[0, 0], 3)]);
        assert_eq!(f.to_string_with(&["u", "v"]), "u^2 - 2*u*v + 3");
    }
}
