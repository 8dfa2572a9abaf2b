//! Klein's generators of the binary icosahedral group and their symmetric powers.

use crate::error::{Error, Result};
use crate::exact::{eps, sqrt5, Cyclotomic};
use crate::poly::{Matrix, Polynomial};

use super::MatrixRep;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KleinRep {
    V,
    VPrime,
}

/// c = ε − ε⁻¹.
pub fn c_const() -> Cyclotomic {
    eps(1) - eps(4)
}

/// d = ε² − ε⁻².
pub fn d_const() -> Cyclotomic {
    eps(2) - eps(3)
}

/// S, T, U on V (unimodular), with ε = e^{2πi/5}.
fn v_generators() -> Vec<(String, Matrix)> {
    let z = Cyclotomic::zero;
    let one = Cyclotomic::one;
    let (c, d) = (c_const(), d_const());
    let inv_sqrt5 = sqrt5().inverse().expect("nonzero");
    let s = Matrix::diagonal(&[eps(3), eps(2)]);
    let t = Matrix::from_rows(vec![vec![-&c, d.clone()], vec![d, c]]).scale(&inv_sqrt5);
    let u = Matrix::from_rows(vec![vec![z(), -one()], vec![one(), z()]]);
    vec![("S".into(), s), ("T".into(), t), ("U".into(), u)]
}

/// Generators of V or of its Galois twin V′.
///
/// V′ is the image of V under the field automorphism ζ₆₀ ↦ ζ₆₀⁷, which sends
/// ε ↦ ε² and √5 ↦ −√5.
pub fn klein_generators(rep: KleinRep) -> MatrixRep {
    let gens = v_generators();
    match rep {
        KleinRep::V => MatrixRep::new("V", gens).expect("2x2 generators"),
        KleinRep::VPrime => MatrixRep::new(
            "V'",
            gens.into_iter().map(|(n, m)| (n, m.map(|x| x.galois(7)))).collect(),
        )
        .expect("2x2 generators"),
    }
}

/// The V′ generators obtained by replacing ε with ε² while keeping the factor 1/√5.
pub fn vprime_literal() -> MatrixRep {
    let v = v_generators();
    let inv_sqrt5 = sqrt5().inverse().expect("nonzero");
    let sub = |x: &Cyclotomic| x.galois(7);
    let gens = v
        .into_iter()
        .map(|(n, m)| {
            let m = if n == "T" {
                // Undo the sign flip of √5 so the scalar factor stays 1/√5.
                m.scale(&sqrt5()).map(sub).scale(&inv_sqrt5)
            } else {
                m.map(sub)
            };
            (n, m)
        })
        .collect();
    MatrixRep::new("V'(literal)", gens).expect("2x2 generators")
}

/// Matrix of f ↦ f(g·x) on degree-d binary forms in the basis u^{d−i}v^i.
///
/// Row i holds the coefficients of (g₀₀u + g₀₁v)^{d−i}(g₁₀u + g₁₁v)^i.
pub fn sym_power_matrix(g: &Matrix, d: usize) -> Result<Matrix> {
    if d < 1 {
        return Err(Error::BadDegree(d));
    }
    if g.rows() != 2 || g.cols() != 2 {
        return Err(Error::NotSquare { rows: g.rows(), cols: g.cols() });
    }
    let lin = |r: usize| {
        Polynomial::from_terms(
            2,
            [
                (crate::poly::Monomial::from_exps(&[1, 0]), g.get(r, 0).clone()),
                (crate::poly::Monomial::from_exps(&[0, 1]), g.get(r, 1).clone()),
            ],
        )
    };
    let (a, b) = (lin(0), lin(1));
    Ok(Matrix::from_rows(
        (0..=d)
            .map(|i| {
                let img = &a.pow((d - i) as u32) * &b.pow(i as u32);
                (0..=d).map(|j| img.coeff_of(&[(d - j) as u16, j as u16])).collect()
            })
            .collect(),
    ))
}

pub fn sym_power(rep: &MatrixRep, d: usize) -> Result<MatrixRep> {
    if rep.dim != 2 {
        return Err(Error::NotSquare { rows: rep.dim, cols: 2 });
    }
    let gens = rep
        .generators
        .iter()
        .map(|(n, m)| Ok((n.clone(), sym_power_matrix(m, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let label = match d {
        1 => rep.label.clone(),
        _ => format!("S^{d}{}", rep.label),
    };
    MatrixRep::new(&label, gens)
}

/// Smallest n ≥ 1 with gⁿ = I, searched up to `bound`.
pub fn linear_order(g: &Matrix, bound: u32) -> Option<u32> {
    let mut acc = g.clone();
    for n in 1..=bound {
        if acc.is_identity() {
            return Some(n);
        }
        acc = &acc * g;
    }
    None
}

/// Smallest n ≥ 1 with gⁿ a scalar matrix.
pub fn projective_order(g: &Matrix, bound: u32) -> Option<u32> {
    let mut acc = g.clone();
    for n in 1..=bound {
        let lead = acc.get(0, 0).clone();
        if !lead.is_zero() && acc == Matrix::identity(g.rows()).scale(&lead) {
            return Some(n);
        }
        acc = &acc * g;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::golden;

    #[test]
    fn unimodular_and_orders() {
        let v = klein_generators(KleinRep::V);
        for (_, m) in &v.generators {
            assert!(m.det().unwrap().is_one());
        }
        let orders: Vec<u32> = v.generators.iter().map(|(_, m)| linear_order(m, 20).unwrap()).collect();
        assert_eq!(orders, vec![5, 4, 4]);
        let proj: Vec<u32> = v.generators.iter().map(|(_, m)| projective_order(m, 20).unwrap()).collect();
        assert_eq!(proj, vec![5, 2, 2]);
    }

    #[test]
    fn traces_of_s() {
        let v = klein_generators(KleinRep::V);
        let vp = klein_generators(KleinRep::VPrime);
        assert_eq!(v.generator("S").unwrap().trace(), -golden());
        assert_eq!(vp.generator("S").unwrap().trace(), golden() - Cyclotomic::one());
    }

    #[test]
    fn sym_cube_of_s_is_diagonal() {
        let v = klein_generators(KleinRep::V);
        let u4 = sym_power(&v, 3).unwrap();
        assert_eq!(*u4.generator("S").unwrap(), Matrix::diagonal(&[eps(4), eps(3), eps(2), eps(1)]));
        let s2 = sym_power(&v, 2).unwrap();
        assert_eq!(*s2.generator("U").unwrap(), Matrix::from_ints(&[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]));
        assert_eq!(sym_power(&v, 1).unwrap().generators, v.generators);
        assert_eq!(sym_power(&v, 0), Err(Error::BadDegree(0)));
    }

    #[test]
    fn sym_power_is_multiplicative() {
        let v = klein_generators(KleinRep::V);
        let (s, t) = (v.generator("S").unwrap(), v.generator("T").unwrap());
        let st = s * t;
        for d in 1..5 {
            let lhs = sym_power_matrix(&st, d).unwrap();
            let rhs = &sym_power_matrix(s, d).unwrap() * &sym_power_matrix(t, d).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
