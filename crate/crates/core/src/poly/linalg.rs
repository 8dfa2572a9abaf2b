//! Dense matrices over Q(ζ₆₀) and exact row reduction.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::exact::Cyclotomic;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Cyclotomic::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Cyclotomic::one() } else { Cyclotomic::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Cyclotomic) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Cyclotomic::from_i64(x)).collect()).collect())
    }

    pub fn diagonal(entries: &[Cyclotomic]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Cyclotomic::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::ArityMismatch { expected: self.cols, got: o.rows });
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        Self::from_fn(self.rows + o.rows, self.cols + o.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => o.get(i - self.rows, j - self.cols).clone(),
                _ => Cyclotomic::zero(),
            }
        })
    }

    /// Scales so that the first nonzero entry (row-major) is 1.
    pub fn projective_normalize(&self) -> Self {
        match self.data.iter().find(|x| !x.is_zero()) {
            Some(lead) if !lead.is_one() => self.scale(&lead.inverse().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let rv = m.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * rv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis: one vector per free column, with a 1 in that column.
    pub fn kernel(&self) -> Vec<Vec<Cyclotomic>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Cyclotomic::zero(); self.cols];
                v[f] = Cyclotomic::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Determinant: cofactor expansion up to 6×6, Gaussian elimination beyond.
    ///
    /// Expansion avoids field inverses, whose coefficients grow quickly in Q(ζ₆₀).
    pub fn det(&self) -> Result<Cyclotomic> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows <= 6 {
            let cols: Vec<usize> = (0..self.rows).collect();
            return Ok(self.cofactor_det(0, &cols));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Cyclotomic::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Cyclotomic::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            let inv = piv.inverse()?;
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    fn cofactor_det(&self, row: usize, cols: &[usize]) -> Cyclotomic {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = Cyclotomic::zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &self.cofactor_det(row + 1, &rest);
            if k % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    /// Panics on a dimension mismatch.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Mul<Matrix> for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn kernel(m: &Matrix) -> Vec<Vec<Cyclotomic>> {
    m.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernels() {
        assert_eq!(kernel(&Matrix::zeros(4, 4)).len(), 4);
        assert!(kernel(&Matrix::identity(4)).is_empty());
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Cyclotomic::is_zero));
        }
    }

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det().unwrap(), Cyclotomic::from_i64(18));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(Matrix::zeros(2, 3).det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert_eq!(Matrix::zeros(2, 2).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rank_over_cyclotomics() {
        let e = crate::exact::epsilon();
        let m = Matrix::from_rows(vec![
            vec![Cyclotomic::one(), e.clone()],
            vec![e.clone(), &e * &e],
        ]);
        assert_eq!(m.rank(), 1);
    }
}
