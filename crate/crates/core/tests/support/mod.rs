//! Randomized algebraic properties, run with a fixed seed and 256 cases each.

#![allow(dead_code)]

use icosa_core::exact::{rat, Cyclotomic};
use icosa_core::poly::{reduce_mod_p, Matrix, Monomial, Polynomial, PrimeFieldConfig};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const CASES: u32 = 256;

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, rng_seed: RngSeed::Fixed(0x1c05a), failure_persistence: None, ..Config::default() })
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0usize..16, -12i64..=12, 1i64..=4), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Cyclotomic::zero(), |acc, (k, n, d)| acc + Cyclotomic::zeta(k as i64) * Cyclotomic::from_rational(&rat(n, d)))
    })
}

fn small_int_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0usize..16, -5i64..=5), 0..4)
        .prop_map(|terms| terms.into_iter().fold(Cyclotomic::zero(), |acc, (k, n)| acc + Cyclotomic::zeta(k as i64) * Cyclotomic::from_i64(n)))
}

/// Homogeneous forms of the given degree in three variables.
fn form(degree: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=degree, 0..=degree, cyclotomic()), 0..6).prop_map(move |terms| {
        let mut f = Polynomial::zero(3);
        for (a, b, c) in terms {
            if a + b <= degree {
                f.add_term(Monomial::from_exps(&[a, b, degree - a - b]), c);
            }
        }
        f
    })
}

/// Polynomials in three variables with small integer coefficients, reducible modulo any prime.
fn integral_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u16..4, 0u16..4, 0u16..4, small_int_cyclotomic()), 0..6).prop_map(|terms| {
        let mut f = Polynomial::zero(3);
        for (a, b, c, k) in terms {
            f.add_term(Monomial::from_exps(&[a, b, c]), k);
        }
        f
    })
}

fn matrix3() -> impl Strategy<Value = Matrix> {
    prop::collection::vec(cyclotomic(), 9).prop_map(|e| Matrix::from_fn(3, 3, |i, j| e[3 * i + j].clone()))
}

fn run<S: Strategy>(s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner().run(&s, f).map_err(|e| e.to_string())
}

pub fn field_axioms() -> Result<(), String> {
    run((cyclotomic(), cyclotomic(), cyclotomic()), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a + -&a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * a.inverse().unwrap()).is_one());
        }
        Ok(())
    })
}

pub fn galois_is_a_ring_map() -> Result<(), String> {
    let k = prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23, 29]);
    run((cyclotomic(), cyclotomic(), k), |(a, b, k)| {
        prop_assert_eq!((&a * &b).galois(k), a.galois(k) * b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), a.galois(k) + b.galois(k));
        Ok(())
    })
}

pub fn polynomial_ring_axioms() -> Result<(), String> {
    run((form(2), form(2), form(3)), |(f, g, h)| {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!((&f * &g) * &h, &f * (&g * &h));
        prop_assert_eq!(&h * (&f + &g), &h * &f + &h * &g);
        prop_assert!((&f + &g - &g - &f).is_zero());
        Ok(())
    })
}

pub fn euler_relation() -> Result<(), String> {
    run(form(4), |f| {
        let x = Polynomial::vars(3);
        let lhs = (0..3).fold(Polynomial::zero(3), |acc, i| acc + &x[i] * &f.partial_derivative(i).unwrap());
        prop_assert_eq!(lhs, f.scale_int(4));
        Ok(())
    })
}

pub fn substitution_is_a_homomorphism() -> Result<(), String> {
    run((form(2), form(3), prop::collection::vec(form(1), 3)), |(f, g, images)| {
        let sub = |p: &Polynomial| p.substitute(&images).unwrap();
        prop_assert_eq!(sub(&(&f * &g)), sub(&f) * sub(&g));
        prop_assert_eq!(sub(&(&f + &f)), sub(&f).scale_int(2));
        let pt = [Cyclotomic::from_i64(2), Cyclotomic::zeta(7), Cyclotomic::from_frac(-1, 3)];
        let at: Vec<Cyclotomic> = images.iter().map(|q| q.eval(&pt).unwrap()).collect();
        prop_assert_eq!(sub(&g).eval(&pt).unwrap(), g.eval(&at).unwrap());
        Ok(())
    })
}

pub fn det_is_multiplicative() -> Result<(), String> {
    run((matrix3(), matrix3()), |(a, b)| {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
        Ok(())
    })
}

pub fn reduction_commutes_with_arithmetic() -> Result<(), String> {
    let p = prop::sample::select(vec![61u64, 181, 241]);
    run((integral_poly(), integral_poly(), p, prop::collection::vec(0u64..1000, 3)), |(f, g, p, pt)| {
        let cfg = PrimeFieldConfig::new(p).unwrap();
        let (rf, rg) = (reduce_mod_p(&f, &cfg).unwrap(), reduce_mod_p(&g, &cfg).unwrap());
        prop_assert_eq!(reduce_mod_p(&(&f * &g), &cfg).unwrap(), rf.mul(&rg));
        prop_assert_eq!(reduce_mod_p(&(&f + &g), &cfg).unwrap(), rf.add(&rg));
        let pt: Vec<u64> = pt.iter().map(|x| x % p).collect();
        let exact = f.eval_ints(&pt.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(rf.eval(&pt), cfg.reduce(&exact).unwrap());
        let r = |c: &Cyclotomic| cfg.reduce(c).unwrap();
        let (a, b) = (f.coeff_of(&[0, 0, 0]), g.coeff_of(&[0, 0, 0]));
        prop_assert_eq!(r(&(&a * &b)), cfg.mul(r(&a), r(&b)));
        Ok(())
    })
}

pub type Property = (&'static str, fn() -> Result<(), String>);

pub const PROPERTIES: [Property; 7] = [
    ("field axioms in Q(zeta60)", field_axioms),
    ("Galois automorphisms are ring maps", galois_is_a_ring_map),
    ("polynomial ring axioms", polynomial_ring_axioms),
    ("Euler relation for quartic forms", euler_relation),
    ("substitution is a ring homomorphism", substitution_is_a_homomorphism),
    ("det is multiplicative", det_is_multiplicative),
    ("reduction mod p commutes with arithmetic and evaluation", reduction_commutes_with_arithmetic),
];
