use std::ops::{Add, Mul, Sub};

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over one exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::usage("matrix dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(Error::usage(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|s| !field.contains(s)) {
            return Err(Error::usage(format!("entry {pos} does not belong to field {field}")));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Matrix { field: field.clone(), rows, cols, data: vec![z; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let (z, o) = (field.zero(), field.one());
        Self::from_fn(field, n, n, |r, c| if r == c { o.clone() } else { z.clone() })
    }

    /// Builds from rows of small integers.
    pub fn from_i64_rows(field: &Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(field: &Field, perm: &[usize]) -> Self {
        let (z, o) = (field.zero(), field.one());
        Self::from_fn(field, perm.len(), perm.len(), |r, c| {
            if perm[c] == r { o.clone() } else { z.clone() }
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// Kronecker product: entry `((a,b),(c,d))` is `self[a][c] * other[b][d]`.
    pub fn kronecker(&self, other: &Matrix) -> Self {
        assert_eq!(self.field, other.field, "kronecker across fields");
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(&self.field, self.rows * r2, self.cols * c2, |r, c| {
            self.get(r / r2, c / c2) * other.get(r % r2, c % c2)
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| dot(&self.field, self.row(r), v))
            .collect()
    }
}

/// Sum of products, skipping zero factors.
pub fn dot(field: &Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        assert_eq!(self.field, rhs.field, "matrix product across fields");
        let mut out = Matrix::zeros(&self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * rhs.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_block_layout() {
        let q = Field::Rationals;
        let f = Matrix::from_i64_rows(&q, &[&[1, 2], &[3, 4]]);
        let g = Matrix::from_i64_rows(&q, &[&[0, 5], &[6, 7]]);
        let k = f.kronecker(&g);
        assert_eq!(k.get(0, 1), &q.from_i64(5));
        assert_eq!(k.get(1, 2), &q.from_i64(12));
        assert_eq!(k.get(3, 3), &q.from_i64(28));
    }

    #[test]
    fn rejects_foreign_entries() {
        let f5 = Field::prime(5).unwrap();
        let err = Matrix::new(Field::Rationals, 1, 1, vec![f5.one()]);
        assert!(err.is_err());
        assert!(Matrix::new(Field::Rationals, 0, 1, vec![]).is_err());
    }
}
