//! Exhaustive search for F_p-rational singular points of projective hypersurfaces.
//!
//! Points are enumerated chart by chart in canonical form (first nonzero
//! coordinate equal to 1). Inside a chart the last coordinate is the inner
//! loop: each partial derivative is specialized to a univariate polynomial in
//! it once per outer assignment and then evaluated by Horner's rule.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

use super::modp::{rank_mod_p, reduce_mod_p, ModPoly, PrimeFieldConfig};
use super::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub surface: String,
    pub p: u64,
    pub points: Vec<Vec<u64>>,
    /// Rank of the quadratic part of the affine expansion at each point.
    pub ranks: Vec<usize>,
}

impl ScanResult {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

/// A polynomial prepared for evaluation along lines in the last variable.
struct LineForm {
    n: usize,
    p: u64,
    /// (outer exponents, inner exponent, coefficient)
    terms: Vec<([u8; 8], usize, u64)>,
    inner_deg: usize,
}

impl LineForm {
    fn new(f: &ModPoly) -> Self {
        let n = f.nvars;
        let terms: Vec<([u8; 8], usize, u64)> = f
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = [0u8; 8];
                for i in 0..n - 1 {
                    e[i] = m.0[i] as u8;
                }
                (e, m.0[n - 1] as usize, *c)
            })
            .collect();
        let inner_deg = terms.iter().map(|t| t.1).max().unwrap_or(0);
        LineForm { n, p: f.p, terms, inner_deg }
    }

    /// Coefficients in the inner variable for fixed outer coordinates.
    fn specialize(&self, outer: &[u64], pw: &PowerTable, out: &mut Vec<u64>) {
        out.clear();
        out.resize(self.inner_deg + 1, 0);
        let p = self.p;
        for (e, k, c) in &self.terms {
            let mut t = *c;
            for i in 0..self.n - 1 {
                if e[i] > 0 {
                    t = t * pw.get(outer[i], e[i] as usize) % p;
                    if t == 0 {
                        break;
                    }
                }
            }
            out[*k] = (out[*k] + t) % p;
        }
    }
}

struct PowerTable {
    maxe: usize,
    table: Vec<u64>,
}

impl PowerTable {
    fn new(p: u64, maxe: usize) -> Self {
        let mut table = Vec::with_capacity(p as usize * (maxe + 1));
        for x in 0..p {
            let mut acc = 1 % p;
            for _ in 0..=maxe {
                table.push(acc);
                acc = acc * x % p;
            }
        }
        PowerTable { maxe, table }
    }

    fn get(&self, x: u64, e: usize) -> u64 {
        self.table[x as usize * (self.maxe + 1) + e]
    }
}

fn horner(c: &[u64], t: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| (acc * t + a) % p)
}

/// Visits every canonical point of Pⁿ⁻¹(F_p) one line at a time.
///
/// `visit(point_prefix, inner_values)` receives the coordinates with the last
/// entry left as a placeholder and must return the hits on that line, in the
/// order of the inner coordinate. Results are merged in enumeration order.
fn enumerate_lines<T, F>(n: usize, p: u64, visit: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[u64]) -> Vec<T> + Sync,
{
    let mut out = Vec::new();
    for chart in 0..n {
        if chart == n - 1 {
            let mut x = vec![0u64; n];
            x[n - 1] = 1;
            out.extend(visit(&x));
            continue;
        }
        // Outer free coordinates: chart+1 .. n-2; the inner coordinate n-1 is handled by `visit`.
        let nouter = n - 2 - chart;
        let total = p.pow(nouter as u32);
        let hits: Vec<T> = (0..total)
            .into_par_iter()
            .flat_map_iter(|idx| {
                let mut x = vec![0u64; n];
                x[chart] = 1;
                let mut r = idx;
                for k in (0..nouter).rev() {
                    x[chart + 1 + k] = r % p;
                    r /= p;
                }
                x[n - 1] = u64::MAX;
                visit(&x)
            })
            .collect();
        out.extend(hits);
    }
    out
}

fn chart_of(x: &[u64]) -> usize {
    x.iter().position(|&c| c != 0).expect("canonical points are nonzero")
}

/// Singular F_p-points of a homogeneous form given directly over F_p.
pub fn scan_modp(f: &ModPoly, label: &str) -> Result<ScanResult> {
    let n = f.nvars;
    if n < 2 {
        return Err(Error::TooManyVariables(n));
    }
    let p = f.p;
    let grad: Vec<LineForm> = f.gradient().iter().map(LineForm::new).collect();
    let fl = LineForm::new(f);
    let maxe = f.degree().unwrap_or(0) as usize + 1;
    let pw = PowerTable::new(p, maxe);
    let points = enumerate_lines(n, p, |x| {
        let mut coefs: Vec<Vec<u64>> = vec![Vec::new(); n];
        let single = x[n - 1] != u64::MAX;
        let inner: Vec<u64> = if single { vec![x[n - 1]] } else { (0..p).collect() };
        let mut hits = Vec::new();
        let mut done = vec![false; n];
        for t in inner {
            let mut ok = true;
            for j in 0..n {
                if !done[j] {
                    grad[j].specialize(x, &pw, &mut coefs[j]);
                    done[j] = true;
                }
                if horner(&coefs[j], t, p) != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                let mut pt = x.to_vec();
                pt[n - 1] = t;
                let mut fc = Vec::new();
                fl.specialize(&pt, &pw, &mut fc);
                if horner(&fc, t, p) == 0 {
                    hits.push(pt);
                }
            }
        }
        hits
    });
    let ranks = points.iter().map(|pt| quadratic_rank(f, pt)).collect();
    Ok(ScanResult { surface: label.to_string(), p, points, ranks })
}

/// Rank of the Hessian with the chart coordinate's row and column removed.
pub fn quadratic_rank(f: &ModPoly, pt: &[u64]) -> usize {
    let chart = chart_of(pt);
    let h = f.hessian_at(pt);
    let rows: Vec<Vec<u64>> = h
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != chart)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != chart).map(|(_, v)| *v).collect())
        .collect();
    rank_mod_p(rows, f.p)
}

pub fn scan_singular(f: &Polynomial, cfg: &PrimeFieldConfig) -> Result<ScanResult> {
    scan_singular_labeled(f, cfg, "")
}

pub fn scan_singular_labeled(f: &Polynomial, cfg: &PrimeFieldConfig, label: &str) -> Result<ScanResult> {
    f.homogeneous_degree()?;
    scan_modp(&reduce_mod_p(f, cfg)?, label)
}

/// A member λF₁ + μF₂ of a pencil, normalized to (λ:1) or (1:0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PencilParam {
    Finite(u64),
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PencilScan {
    pub p: u64,
    /// Points singular on the member with the given parameter, per parameter.
    #[serde(serialize_with = "members_as_list")]
    pub members: BTreeMap<PencilParam, Vec<Vec<u64>>>,
    /// Points where both gradients vanish (singular on every member).
    pub common: Vec<Vec<u64>>,
}

fn members_as_list<S: serde::Serializer>(m: &BTreeMap<PencilParam, Vec<Vec<u64>>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter())
}

impl PencilScan {
    pub fn counts(&self) -> Vec<(PencilParam, usize)> {
        self.members.iter().map(|(k, v)| (*k, v.len() + self.common.len())).collect()
    }
}

/// Finds every member of the pencil λF₁ + μF₂ with an F_p-rational singular point.
///
/// A point is singular on some member exactly when ∇F₁ and ∇F₂ are linearly
/// dependent there, so one pass over P³(F_p) sorts all singular points by
/// member.
pub fn scan_pencil(f1: &Polynomial, f2: &Polynomial, cfg: &PrimeFieldConfig) -> Result<PencilScan> {
    if f1.nvars() != f2.nvars() {
        return Err(Error::NvarsMismatch(f1.nvars(), f2.nvars()));
    }
    let d1 = f1.homogeneous_degree()?;
    let d2 = f2.homogeneous_degree()?;
    if d1 != d2 {
        return Err(Error::NotHomogeneous);
    }
    let n = f1.nvars();
    let p = cfg.p;
    let g1: Vec<LineForm> = reduce_mod_p(f1, cfg)?.gradient().iter().map(LineForm::new).collect();
    let g2: Vec<LineForm> = reduce_mod_p(f2, cfg)?.gradient().iter().map(LineForm::new).collect();
    let pw = PowerTable::new(p, d1 as usize + 1);
    let hits = enumerate_lines(n, p, |x| {
        let spec = |forms: &[LineForm]| -> Vec<Vec<u64>> {
            forms
                .iter()
                .map(|g| {
                    let mut c = Vec::new();
                    g.specialize(x, &pw, &mut c);
                    c
                })
                .collect()
        };
        let (c1, c2) = (spec(&g1), spec(&g2));
        let single = x[n - 1] != u64::MAX;
        let inner: Vec<u64> = if single { vec![x[n - 1]] } else { (0..p).collect() };
        let mut out = Vec::new();
        for t in inner {
            let a0 = horner(&c1[0], t, p);
            let b0 = horner(&c2[0], t, p);
            let a1 = horner(&c1[1], t, p);
            let b1 = horner(&c2[1], t, p);
            if !(a0 * b1 + p * p - a1 * b0 % p).is_multiple_of(p) {
                continue;
            }
            let a: Vec<u64> = (0..n).map(|j| if j < 2 { [a0, a1][j] } else { horner(&c1[j], t, p) }).collect();
            let b: Vec<u64> = (0..n).map(|j| if j < 2 { [b0, b1][j] } else { horner(&c2[j], t, p) }).collect();
            let mut pt = x.to_vec();
            pt[n - 1] = t;
            match dependency(&a, &b, p) {
                Dependency::Both => out.push((None, pt)),
                Dependency::Param(param) => out.push((Some(param), pt)),
                Dependency::Independent => {}
            }
        }
        out
    });
    let mut members: BTreeMap<PencilParam, Vec<Vec<u64>>> = BTreeMap::new();
    let mut common = Vec::new();
    for (param, pt) in hits {
        match param {
            Some(k) => members.entry(k).or_default().push(pt),
            None => common.push(pt),
        }
    }
    Ok(PencilScan { p, members, common })
}

enum Dependency {
    Both,
    Param(PencilParam),
    Independent,
}

/// Solves λa + μb = 0 for (λ:μ) when a and b are dependent.
fn dependency(a: &[u64], b: &[u64], p: u64) -> Dependency {
    let Some(k) = (0..a.len()).find(|&k| a[k] != 0 || b[k] != 0) else {
        return Dependency::Both;
    };
    let (lam, mu) = (b[k], (p - a[k]) % p);
    if (0..a.len()).any(|j| !(lam * a[j] + mu * b[j]).is_multiple_of(p)) {
        return Dependency::Independent;
    }
    if mu == 0 {
        Dependency::Param(PencilParam::Infinity)
    } else {
        let inv = crate::exact::cyclotomic::powmod(mu, p - 2, p);
        Dependency::Param(PencilParam::Finite(lam * inv % p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PrimeFieldConfig {
        PrimeFieldConfig::new(61).unwrap()
    }

    #[test]
    fn fermat_quartic_is_smooth() {
        let f = Polynomial::from_int_terms(4, &[(&[4, 0, 0, 0], 1), (&[0, 4, 0, 0], 1), (&[0, 0, 4, 0], 1), (&[0, 0, 0, 4], 1)]);
        assert_eq!(scan_singular(&f, &cfg()).unwrap().count(), 0);
    }

    #[test]
    fn nodal_cubic_curve() {
        // y²z = x³ + x²z has a node at (0:0:1).
        let f = Polynomial::from_int_terms(3, &[(&[0, 2, 1], 1), (&[3, 0, 0], -1), (&[2, 0, 1], -1)]);
        let r = scan_singular(&f, &cfg()).unwrap();
        assert_eq!(r.points, vec![vec![0, 0, 1]]);
        assert_eq!(r.ranks, vec![2]);
    }

    #[test]
    fn double_conic_is_singular_everywhere_on_it() {
        let q = Polynomial::from_int_terms(3, &[(&[1, 1, 0], 1), (&[0, 0, 2], 1)]);
        let r = scan_singular(&q.pow(3), &cfg()).unwrap();
        assert_eq!(r.count(), 62);
    }

    #[test]
    fn pencil_of_conics() {
        // x² + μ·(y² − z²)-type pencil: x² and yz. Member λx² + μyz is singular only at λ=0 or μ=0.
        let f1 = Polynomial::from_int_terms(3, &[(&[2, 0, 0], 1)]);
        let f2 = Polynomial::from_int_terms(3, &[(&[0, 1, 1], 1)]);
        let s = scan_pencil(&f1, &f2, &cfg()).unwrap();
        let params: Vec<PencilParam> = s.members.keys().copied().collect();
        assert_eq!(params, vec![PencilParam::Finite(0), PencilParam::Infinity]);
        assert_eq!(s.members[&PencilParam::Infinity].len(), 62);
        assert_eq!(s.members[&PencilParam::Finite(0)], vec![vec![1, 0, 0]]);
    }
}
