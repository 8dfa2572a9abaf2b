//! Matrices with polynomial entries and their determinants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::Cyclotomic;

use super::linalg::Matrix;
use super::polynomial::Polynomial;

pub const MAX_DET_SIZE: usize = 6;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let nvars = rows.first().and_then(|row| row.first()).map_or(0, Polynomial::nvars);
        for row in &rows {
            if row.len() != c {
                return Err(Error::NotSquare { rows: r, cols: row.len() });
            }
            if let Some(p) = row.iter().find(|p| p.nvars() != nvars) {
                return Err(Error::NvarsMismatch(nvars, p.nvars()));
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, nvars, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, nvars: usize, f: impl Fn(usize, usize) -> Polynomial) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert_eq!(p.nvars(), nvars, "entry nvars must agree");
                data.push(p);
            }
        }
        PolyMatrix { rows, cols, nvars, data }
    }

    /// Constant polynomial matrix in `nvars` variables.
    pub fn from_scalar(m: &Matrix, nvars: usize) -> Self {
        Self::from_fn(m.rows(), m.cols(), nvars, |i, j| Polynomial::constant(nvars, m.get(i, j).clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.nvars, |i, j| self.get(j, i).clone())
    }

    /// Evaluates every entry at a point.
    pub fn eval(&self, point: &[Cyclotomic]) -> Result<Matrix> {
        let vals = self.data.iter().map(|p| p.eval(point)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| vals[i * self.cols + j].clone()))
    }

    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self> {
        let data = self.data.iter().map(|p| p.substitute(images)).collect::<Result<Vec<_>>>()?;
        let nvars = images.first().map_or(0, Polynomial::nvars);
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, nvars, data })
    }

    /// Cofactor-expansion determinant, memoized on the set of used columns.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(Error::MatrixTooLarge(n));
        }
        // minors[mask] = det of rows 0..|mask| restricted to the columns in mask.
        let mut minors: HashMap<u32, Polynomial> = HashMap::new();
        minors.insert(0, Polynomial::one(self.nvars));
        for size in 1..=n {
            let row = size - 1;
            let mut next = HashMap::new();
            for mask in (0u32..(1 << n)).filter(|m| m.count_ones() as usize == size) {
                let mut acc = Polynomial::zero(self.nvars);
                for j in (0..n).filter(|j| mask & (1 << j) != 0) {
                    let entry = self.get(row, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest = mask & !(1 << j);
                    let sub = &minors[&rest];
                    if sub.is_zero() {
                        continue;
                    }
                    let term = entry * sub;
                    // Column j sits after every column of `rest` that is larger than it.
                    let later = (rest >> (j + 1)).count_ones();
                    acc = if later % 2 == 0 { acc + term } else { acc - term };
                }
                next.insert(mask, acc);
            }
            minors = next;
        }
        Ok(minors.remove(&((1u32 << n) - 1)).expect("full mask computed"))
    }
}

pub fn det(m: &PolyMatrix) -> Result<Polynomial> {
    m.det()
}

/// Matrix of second partial derivatives.
pub fn hessian(f: &Polynomial) -> Result<PolyMatrix> {
    let n = f.nvars();
    let first = f.gradient();
    let rows = first
        .iter()
        .map(|g| (0..n).map(|j| g.partial_derivative(j)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if n == 0 {
        return Ok(PolyMatrix { rows: 0, cols: 0, nvars: 0, data: Vec::new() });
    }
    PolyMatrix::from_rows(rows)
}

/// The symmetric matrix B of a quadratic form q, with q(x) = xᵀ B x.
pub fn quadric_matrix(q: &Polynomial) -> Result<Matrix> {
    let n = q.nvars();
    if !q.is_zero() && q.homogeneous_degree()? != 2 {
        return Err(Error::NotHomogeneous);
    }
    let half = Cyclotomic::from_frac(1, 2);
    Ok(Matrix::from_fn(n, n, |i, j| {
        let mut e = [0u16; super::monomial::MAX_VARS];
        e[i] += 1;
        e[j] += 1;
        let c = q.coeff_of(&e[..n]);
        if i == j {
            c
        } else {
            &c * &half
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_det() {
        let m = PolyMatrix::from_scalar(&Matrix::identity(4), 2);
        assert_eq!(m.det().unwrap(), Polynomial::one(2));
    }

    #[test]
    fn hankel_catalecticant_is_quartic() {
        let a = Polynomial::vars(7);
        let h = PolyMatrix::from_fn(4, 4, 7, |i, j| a[i + j].clone());
        let cat = h.det().unwrap();
        assert_eq!(cat.homogeneous_degree().unwrap(), 4);
    }

    #[test]
    fn symbolic_two_by_two() {
        let x = Polynomial::vars(4);
        let m = PolyMatrix::from_rows(vec![vec![x[0].clone(), x[1].clone()], vec![x[2].clone(), x[3].clone()]]).unwrap();
        assert_eq!(m.det().unwrap(), &x[0] * &x[3] - &x[1] * &x[2]);
    }

    #[test]
    fn scalar_det_agrees_with_elimination() {
        let m = Matrix::from_ints(&[&[2, -1, 0, 3], &[1, 1, 4, 0], &[0, 5, -2, 1], &[7, 0, 1, 1]]);
        let p = PolyMatrix::from_scalar(&m, 1).det().unwrap();
        assert_eq!(p, Polynomial::constant(1, m.det().unwrap()));
    }

    #[test]
    fn quadric_matrix_round_trip() {
        let q = Polynomial::from_int_terms(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 4)]);
        let b = quadric_matrix(&q).unwrap();
        assert_eq!(b, Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 2], &[0, 2, 0]]));
    }

    #[test]
    fn too_large() {
        let m = PolyMatrix::from_scalar(&Matrix::identity(7), 1);
        assert_eq!(m.det(), Err(Error::MatrixTooLarge(7)));
    }
}
