use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::poly::{Matrix, PolyMatrix, Polynomial};

use super::closure::{closure, GroupClosure};
use super::MatrixRep;

pub const DEFAULT_MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolienSeries {
    pub label: String,
    /// cₖ = dimension of the degree-k invariants, k = 0..=D.
    pub coeffs: Vec<BigInt>,
}

impl MolienSeries {
    pub fn coeff(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }
}

/// Coefficients of det(I − t·g) in t, constant term first.
fn char_poly_reversed(g: &Matrix) -> Result<Vec<Cyclotomic>> {
    let n = g.rows();
    let t = Polynomial::var(1, 0);
    let m = PolyMatrix::from_fn(n, n, 1, |i, j| {
        let entry = t.scale(&-g.get(i, j));
        if i == j {
            entry.try_add(&Polynomial::one(1)).expect("same nvars")
        } else {
            entry
        }
    });
    let det = m.det()?;
    Ok((0..=n).map(|k| det.coeff_of(&[k as u16])).collect())
}

/// Power-series inverse of p (with p₀ = 1) truncated after t^max.
fn series_inverse(p: &[Cyclotomic], max: usize) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(); max + 1];
    out[0] = Cyclotomic::one();
    for k in 1..=max {
        let mut acc = Cyclotomic::zero();
        for j in 1..=k.min(p.len() - 1) {
            if !p[j].is_zero() && !out[k - j].is_zero() {
                acc -= &p[j] * &out[k - j];
            }
        }
        out[k] = acc;
    }
    out
}

/// Molien series of the (linear) group generated by `rep`, up to degree `max_degree`.
pub fn molien(rep: &MatrixRep, max_degree: usize) -> Result<MolienSeries> {
    let g = closure(rep, false)?;
    molien_of_closure(&rep.label, &g, max_degree)
}

pub fn molien_of_closure(label: &str, g: &GroupClosure, max_degree: usize) -> Result<MolienSeries> {
    let terms: Vec<Vec<Cyclotomic>> = g
        .elements
        .par_iter()
        .map(|m| Ok(series_inverse(&char_poly_reversed(m)?, max_degree)))
        .collect::<Result<Vec<_>>>()?;
    let scale = Cyclotomic::from_frac(1, g.len() as i64);
    let coeffs = (0..=max_degree)
        .map(|d| {
            let s: Cyclotomic = terms.iter().map(|t| &t[d]).sum();
            (s * &scale).as_integer().ok_or(Error::NonIntegral(d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MolienSeries { label: label.to_string(), coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{klein_generators, sym_power, KleinRep};

    #[test]
    fn trivial_group_counts_monomials() {
        let rep = MatrixRep::new("1", vec![("e".into(), Matrix::identity(4))]).unwrap();
        let m = molien(&rep, 3).unwrap();
        let want: Vec<BigInt> = [1, 4, 10, 20].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(m.coeffs, want);
    }

    #[test]
    fn binary_icosahedral_invariants() {
        let v = klein_generators(KleinRep::V);
        let m = molien(&v, 12).unwrap();
        let nonzero: Vec<usize> = (0..=12).filter(|&d| m.coeffs[d] != BigInt::from(0)).collect();
        assert_eq!(nonzero, vec![0, 12]);
        let u4 = sym_power(&v, 3).unwrap();
        let m4 = molien(&u4, 4).unwrap();
        assert_eq!(m4.coeffs[2], BigInt::from(0));
        assert_eq!(m4.coeffs[4], BigInt::from(2));
    }
}
