use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::exact::Cyclotomic;
use crate::poly::{Matrix, Monomial, Polynomial};

use super::closure::closure;
use super::MatrixRep;

/// A basis of the degree-d invariants, in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBasis {
    pub degree: usize,
    pub basis: Vec<Polynomial>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// True when `f` lies in the span of the basis.
    pub fn contains(&self, f: &Polynomial) -> bool {
        let monos: Vec<Monomial> = Monomial::all_of_degree(f.nvars(), self.degree as u16);
        let row = |p: &Polynomial| monos.iter().map(|m| p.coeff(m)).collect::<Vec<_>>();
        let mut rows: Vec<Vec<Cyclotomic>> = self.basis.iter().map(row).collect();
        let base_rank = Matrix::from_rows(rows.clone()).rank();
        rows.push(row(f));
        Matrix::from_rows(rows).rank() == base_rank
    }
}

/// Images under x ↦ g·x of every degree-d monomial, built up one factor at a time.
fn monomial_images(g: &Matrix, monos: &[Monomial], d: usize) -> Vec<Polynomial> {
    let n = g.rows();
    let linear: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::from_terms(n, (0..n).map(|j| (Monomial::var(j), g.get(i, j).clone()))))
        .collect();
    let mut layer: HashMap<Monomial, Polynomial> = HashMap::from([(Monomial::one(), Polynomial::one(n))]);
    for k in 1..=d {
        let mut next = HashMap::new();
        for m in Monomial::all_of_degree(n, k as u16) {
            let i = (0..n).find(|&i| m.0[i] > 0).expect("positive degree");
            let mut prev = m;
            prev.0[i] -= 1;
            next.insert(m, &layer[&prev] * &linear[i]);
        }
        layer = next;
    }
    monos.iter().map(|m| layer[m].clone()).collect()
}

/// Averages every degree-d monomial over the group and row-reduces the result.
pub fn reynolds(rep: &MatrixRep, d: usize) -> Result<InvariantBasis> {
    let g = closure(rep, false)?;
    let n = rep.dim;
    let monos = Monomial::all_of_degree(n, d as u16);
    let images: Vec<Vec<Polynomial>> = g.elements.par_iter().map(|m| monomial_images(m, &monos, d)).collect();
    let mut sums: Vec<Polynomial> = vec![Polynomial::zero(n); monos.len()];
    for img in &images {
        for (s, p) in sums.iter_mut().zip(img) {
            *s = &*s + p;
        }
    }
    let rows: Vec<Vec<Cyclotomic>> = sums.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect();
    let (r, pivots) = Matrix::from_rows(rows).rref();
    let basis = (0..pivots.len())
        .map(|i| Polynomial::from_terms(n, monos.iter().enumerate().map(|(j, m)| (*m, r.get(i, j).clone()))))
        .collect();
    Ok(InvariantBasis { degree: d, basis })
}

/// True when f ∘ g = f for every generator g.
pub fn is_invariant(f: &Polynomial, rep: &MatrixRep) -> Result<bool> {
    for (_, g) in &rep.generators {
        if f.linear_substitute(g)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The scalar c with f ∘ g = c·f for each generator, if f is semi-invariant.
pub fn invariance_scalars(f: &Polynomial, rep: &MatrixRep) -> Result<Option<Vec<Cyclotomic>>> {
    let mut out = Vec::new();
    for (_, g) in &rep.generators {
        match crate::poly::proportional(&f.linear_substitute(g)?, f) {
            Some(c) => out.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{klein_generators, molien, sym_power, KleinRep};

    #[test]
    fn u4_quartic_invariants() {
        let u4 = sym_power(&klein_generators(KleinRep::V), 3).unwrap();
        let b = reynolds(&u4, 4).unwrap();
        assert_eq!(b.dim(), 2);
        for f in &b.basis {
            assert!(is_invariant(f, &u4).unwrap());
        }
        assert_eq!(reynolds(&u4, 2).unwrap().dim(), 0);
    }

    #[test]
    fn binary_degree_twelve() {
        let v = klein_generators(KleinRep::V);
        let b = reynolds(&v, 12).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(molien(&v, 12).unwrap().coeffs[12], 1.into());
    }
}
