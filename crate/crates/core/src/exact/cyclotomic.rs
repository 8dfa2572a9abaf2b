//! The cyclotomic field Q(ζ₆₀).
//!
//! Elements are stored as a residue of degree < 16 modulo
//! Φ₆₀(x) = x¹⁶ + x¹⁴ − x¹⁰ − x⁸ − x⁶ + x² + 1, written over a single positive
//! common denominator. Small values live inline in `i64`s and all arithmetic
//! on them runs through checked `i128` operations; anything that overflows is
//! redone with `BigInt`s. Results are demoted back to the inline form whenever
//! they fit, so the representation (and therefore `Eq`/`Hash`) is canonical.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::complex::ComplexApprox;
use super::rational::{parse_rational, rational_to_string, Rational};
use crate::error::{Error, ParseError, Result};

pub const ORDER: i64 = 60;
pub const DEGREE: usize = 16;

/// Coefficients of Φ₆₀, constant term first.
pub const PHI60: [i64; DEGREE + 1] = [1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1];

/// x¹⁶ ≡ −x¹⁴ + x¹⁰ + x⁸ + x⁶ − x² − 1, as (offset below the reduced power, sign).
const FOLD: [(usize, i8); 6] = [(2, -1), (6, 1), (8, 1), (10, 1), (14, -1), (16, -1)];

trait Scalar: Clone + Sized {
    fn s_zero() -> Self;
    fn s_one() -> Self;
    fn s_is_zero(&self) -> bool;
    fn s_is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
}

impl Scalar for i128 {
    fn s_zero() -> Self {
        0
    }
    fn s_one() -> Self {
        1
    }
    fn s_is_zero(&self) -> bool {
        *self == 0
    }
    fn s_is_one(&self) -> bool {
        *self == 1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o).filter(|v| *v != i128::MIN)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o).filter(|v| *v != i128::MIN)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o).filter(|v| *v != i128::MIN)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Scalar for BigInt {
    fn s_zero() -> Self {
        BigInt::zero()
    }
    fn s_one() -> Self {
        One::one()
    }
    fn s_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn s_is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

#[derive(Clone)]
struct Raw<T> {
    num: [T; DEGREE],
    den: T,
}

fn reduce_product<T: Scalar>(mut prod: Vec<T>) -> Option<[T; DEGREE]> {
    for k in (DEGREE..prod.len()).rev() {
        if prod[k].s_is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut prod[k], T::s_zero());
        for &(off, sign) in FOLD.iter() {
            let slot = &mut prod[k - off];
            *slot = if sign > 0 { slot.add(&c)? } else { slot.sub(&c)? };
        }
    }
    prod.truncate(DEGREE);
    let mut it = prod.into_iter();
    Some(std::array::from_fn(|_| it.next().unwrap()))
}

fn normalize<T: Scalar>(mut raw: Raw<T>) -> Raw<T> {
    if raw.num.iter().all(Scalar::s_is_zero) {
        raw.den = T::s_one();
        return raw;
    }
    if raw.den.s_is_one() {
        return raw;
    }
    let mut g = raw.den.clone();
    for c in raw.num.iter() {
        if g.s_is_one() {
            return raw;
        }
        if !c.s_is_zero() {
            g = g.gcd(c);
        }
    }
    if g.s_is_one() {
        return raw;
    }
    for c in raw.num.iter_mut() {
        *c = c.div_exact(&g);
    }
    raw.den = raw.den.div_exact(&g);
    raw
}

fn mul_raw<T: Scalar>(a: &Raw<T>, b: &Raw<T>) -> Option<Raw<T>> {
    let mut prod: Vec<T> = vec![T::s_zero(); 2 * DEGREE - 1];
    for (i, x) in a.num.iter().enumerate() {
        if x.s_is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if y.s_is_zero() {
                continue;
            }
            let t = x.mul(y)?;
            prod[i + j] = prod[i + j].add(&t)?;
        }
    }
    let num = reduce_product(prod)?;
    let den = a.den.mul(&b.den)?;
    Some(normalize(Raw { num, den }))
}

fn add_raw<T: Scalar>(a: &Raw<T>, b: &Raw<T>, subtract: bool) -> Option<Raw<T>> {
    let combine = |x: &T, y: &T| if subtract { x.sub(y) } else { x.add(y) };
    if a.den.s_is_one() && b.den.s_is_one() || same_den(a, b) {
        let mut out = a.num.clone();
        for (o, y) in out.iter_mut().zip(b.num.iter()) {
            *o = combine(o, y)?;
        }
        return Some(normalize(Raw { num: out, den: a.den.clone() }));
    }
    let mut out = a.num.clone();
    for (o, y) in out.iter_mut().zip(b.num.iter()) {
        let l = o.mul(&b.den)?;
        let r = y.mul(&a.den)?;
        *o = combine(&l, &r)?;
    }
    let den = a.den.mul(&b.den)?;
    Some(normalize(Raw { num: out, den }))
}

fn same_den<T: Scalar>(a: &Raw<T>, b: &Raw<T>) -> bool {
    a.den.sub(&b.den).map(|d| d.s_is_zero()).unwrap_or(false)
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: [i64; DEGREE], den: i64 },
    Big(Box<BigRepr>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BigRepr {
    num: [BigInt; DEGREE],
    den: BigInt,
}

/// An element of Q(ζ₆₀) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    repr: Repr,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { repr: Repr::Small { num: [0; DEGREE], den: 1 } }
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        let mut num = [0; DEGREE];
        num[0] = n;
        Self::from_raw_small(Raw { num: num.map(i128::from), den: 1 })
    }

    pub fn from_rational(r: &Rational) -> Self {
        let mut num: [BigInt; DEGREE] = std::array::from_fn(|_| BigInt::zero());
        num[0] = r.numer().clone();
        Self::from_raw_big(Raw { num, den: r.denom().clone() })
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(&BigRational::new(num.into(), den.into()))
    }

    /// ζ₆₀ᵏ for any integer k.
    pub fn zeta(k: i64) -> Self {
        let k = k.rem_euclid(ORDER) as usize;
        let mut prod = vec![0i128; k.max(DEGREE - 1) + 1];
        prod[k] = 1;
        let num = reduce_product(prod).expect("powers of zeta have tiny coefficients");
        Self::from_raw_small(Raw { num, den: 1 })
    }

    /// Builds Σ cₖ ζ₆₀ᵏ from an arbitrary-length coefficient list, reducing mod Φ₆₀.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| Self::zeta(k as i64) * Self::from_rational(c))
            .sum()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        match &self.repr {
            Repr::Small { num, den } => BigRational::new(num[k].into(), (*den).into()),
            Repr::Big(b) => BigRational::new(b.num[k].clone(), b.den.clone()),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..DEGREE).map(|k| self.coeff(k)).collect()
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.repr, Repr::Small { num, .. } if num.iter().all(|c| *c == 0))
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Returns the value as a rational when it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        let rational = match &self.repr {
            Repr::Small { num, .. } => num[1..].iter().all(|c| *c == 0),
            Repr::Big(b) => b.num[1..].iter().all(Zero::is_zero),
        };
        rational.then(|| self.coeff(0))
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    fn to_raw_small(&self) -> Option<Raw<i128>> {
        match &self.repr {
            Repr::Small { num, den } => Some(Raw { num: num.map(i128::from), den: i128::from(*den) }),
            Repr::Big(_) => None,
        }
    }

    fn to_raw_big(&self) -> Raw<BigInt> {
        match &self.repr {
            Repr::Small { num, den } => Raw { num: num.map(BigInt::from), den: BigInt::from(*den) },
            Repr::Big(b) => Raw { num: b.num.clone(), den: b.den.clone() },
        }
    }

    fn from_raw_small(raw: Raw<i128>) -> Self {
        let fits = |v: i128| i64::try_from(v).is_ok();
        if fits(raw.den) && raw.num.iter().all(|v| fits(*v)) {
            Cyclotomic {
                repr: Repr::Small { num: raw.num.map(|v| v as i64), den: raw.den as i64 },
            }
        } else {
            Self::from_raw_big(Raw { num: raw.num.map(BigInt::from), den: BigInt::from(raw.den) })
        }
    }

    fn from_raw_big(raw: Raw<BigInt>) -> Self {
        let mut raw = raw;
        if raw.den.is_negative() {
            raw.den = -raw.den;
            for c in raw.num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let raw = normalize(raw);
        let small_den = raw.den.to_i64();
        let small_num: Option<Vec<i64>> = raw.num.iter().map(ToPrimitive::to_i64).collect();
        match (small_den, small_num) {
            (Some(den), Some(num)) => Cyclotomic {
                repr: Repr::Small { num: num.try_into().expect("length 16"), den },
            },
            _ => Cyclotomic { repr: Repr::Big(Box::new(BigRepr { num: raw.num, den: raw.den })) },
        }
    }

    fn binary(
        &self,
        other: &Self,
        small: impl Fn(&Raw<i128>, &Raw<i128>) -> Option<Raw<i128>>,
        big: impl Fn(&Raw<BigInt>, &Raw<BigInt>) -> Option<Raw<BigInt>>,
    ) -> Self {
        if let (Some(a), Some(b)) = (self.to_raw_small(), other.to_raw_small()) {
            if let Some(r) = small(&a, &b) {
                return Self::from_raw_small(r);
            }
        }
        let r = big(&self.to_raw_big(), &other.to_raw_big()).expect("bigint arithmetic is total");
        Self::from_raw_big(r)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        self.binary(other, |a, b| add_raw(a, b, false), |a, b| add_raw(a, b, false))
    }

    fn sub_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self.binary(other, |a, b| add_raw(a, b, true), |a, b| add_raw(a, b, true))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        self.binary(other, mul_raw, mul_raw)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ₆₀ over Q.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let phi: Vec<Rational> = PHI60.iter().map(|c| BigRational::from_integer((*c).into())).collect();
        let a = trim(self.coeffs());
        let (g, s) = ext_gcd(phi, a);
        // Φ₆₀ is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(g.len(), 1);
        let scale = g[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|c| c * &scale).collect();
        Ok(Self::from_coeffs(&s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// The Galois automorphism ζ ↦ ζᵏ (k must be a unit mod 60).
    pub fn galois(&self, k: i64) -> Self {
        assert_eq!(k.rem_euclid(ORDER).gcd(&ORDER), 1, "galois exponent must be a unit mod 60");
        (0..DEGREE)
            .map(|j| (j, self.coeff(j)))
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| Self::zeta(j as i64 * k) * Self::from_rational(&c))
            .sum()
    }

    /// Complex conjugation under the fixed embedding (ζ ↦ ζ⁻¹).
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Floating-point image under ζ₆₀ ↦ e^{2πi/60}. Diagnostics only.
    pub fn embed(&self) -> ComplexApprox {
        let mut z = ComplexApprox::new(0.0, 0.0);
        for k in 0..DEGREE {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / ORDER as f64;
            z = z + ComplexApprox::new(c * ang.cos(), c * ang.sin());
        }
        z
    }

    /// Image in F_p under ζ₆₀ ↦ w.
    pub fn reduce_mod(&self, p: u64, w: u64) -> Result<u64> {
        let pm = BigInt::from(p);
        let raw = self.to_raw_big();
        let den = raw.den.mod_floor(&pm);
        if den.is_zero() {
            return Err(Error::BadReduction(p));
        }
        let mut acc: u64 = 0;
        let mut wk: u64 = 1;
        for c in raw.num.iter() {
            let c = c.mod_floor(&pm).to_u64().expect("reduced below p");
            acc = (acc + mulmod(c, wk, p)) % p;
            wk = mulmod(wk, w, p);
        }
        let den = den.to_u64().expect("reduced below p");
        Ok(mulmod(acc, powmod(den, p - 2, p), p))
    }

    /// 16 strings `num/den`, index k = power of ζ₆₀.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(rational_to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != DEGREE {
            return Err(ParseError::Document(format!(
                "cyclotomic coefficient list has length {}, expected {DEGREE}",
                parts.len()
            ))
            .into());
        }
        let coeffs = parts.iter().map(|s| parse_rational(s.as_ref())).collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(&coeffs))
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut q = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= &c * bc;
        }
        q[k] = c;
        rem.pop();
        rem = trim(rem);
        if rem.len() <= db {
            break;
        }
    }
    (trim(q), trim(rem))
}

/// Returns (g, s) with s·a ≡ g (mod m) and g = gcd(m, a).
fn ext_gcd(m: Vec<Rational>, a: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl From<&Rational> for Cyclotomic {
    fn from(r: &Rational) -> Self {
        Self::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident, $atr:ident, $amethod:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$inner(&rhs)
            }
        }
        impl $atr<&Cyclotomic> for Cyclotomic {
            fn $amethod(&mut self, rhs: &Cyclotomic) {
                *self = self.$inner(rhs);
            }
        }
        impl $atr<Cyclotomic> for Cyclotomic {
            fn $amethod(&mut self, rhs: Cyclotomic) {
                *self = self.$inner(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, add_ref, AddAssign, add_assign);
forward_binop!(Sub, sub, sub_ref, SubAssign, sub_assign);
forward_binop!(Mul, mul, mul_ref, MulAssign, mul_assign);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::zero() - self
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for k in 0..DEGREE {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> Result<Cyclotomic> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// ε = ζ₆₀¹² = e^{2πi/5}.
pub fn epsilon() -> Cyclotomic {
    Cyclotomic::zeta(12)
}

/// εᵏ.
pub fn eps(k: i64) -> Cyclotomic {
    Cyclotomic::zeta(12 * k)
}

pub fn imag_unit() -> Cyclotomic {
    Cyclotomic::zeta(15)
}

pub fn sqrt3() -> Cyclotomic {
    Cyclotomic::zeta(5) + Cyclotomic::zeta(-5)
}

pub fn sqrt5() -> Cyclotomic {
    eps(1) - eps(2) - eps(3) + eps(4)
}

/// The golden ratio (1 + √5)/2.
pub fn golden() -> Cyclotomic {
    (Cyclotomic::one() + sqrt5()) * Cyclotomic::from_frac(1, 2)
}

pub fn named_constant(name: &str) -> Result<Cyclotomic> {
    Ok(match name {
        "epsilon" => epsilon(),
        "i" => imag_unit(),
        "sqrt3" => sqrt3(),
        "sqrt5" => sqrt5(),
        "golden" => golden(),
        other => return Err(Error::UnknownConstant(other.to_string())),
    })
}
