//! Gaussian elimination: solving, kernels, inverses and subspaces.
//!
//! Elimination is deterministic: columns are scanned in a fixed order
//! (left to right unless a priority order is supplied) and the topmost
//! remaining row with a nonzero entry becomes the pivot row.

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Reduced row echelon form of a list of rows.
#[derive(Clone, Debug)]
struct Echelon {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

fn echelon(mut rows: Vec<Vec<Scalar>>, width: usize, order: &[usize]) -> Echelon {
    let mut pivots = Vec::new();
    let mut next = 0;
    for &col in order {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].inv().unwrap();
        for v in rows[next].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in 0..width {
                if !pivot_row[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    Echelon { rows, pivots }
}

fn matrix_rows(a: &Matrix) -> Vec<Vec<Scalar>> {
    (0..a.rows()).map(|r| a.row(r).to_vec()).collect()
}

pub fn rank(a: &Matrix) -> usize {
    let order: Vec<usize> = (0..a.cols()).collect();
    echelon(matrix_rows(a), a.cols(), &order).pivots.len()
}

/// Some `x` with `A x = b`, free variables set to zero; `None` if inconsistent.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if a.rows() != b.len() {
        return Err(Error::usage(format!(
            "system has {} rows but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    let field = a.field();
    if let Some(pos) = b.iter().position(|s| !field.contains(s)) {
        return Err(Error::usage(format!("right-hand side entry {pos} is in the wrong field")));
    }
    let n = a.cols();
    let rows: Vec<Vec<Scalar>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let order: Vec<usize> = (0..=n).collect();
    let ech = echelon(rows, n + 1, &order);
    if ech.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); n];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

/// Basis of the null space: one vector per free column, with a 1 in that column.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let field = a.field();
    let n = a.cols();
    let order: Vec<usize> = (0..n).collect();
    let ech = echelon(matrix_rows(a), n, &order);
    let mut is_pivot = vec![false; n];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); n];
            v[free] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect()
}

pub fn matrix_inverse(a: &Matrix) -> Option<Matrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let field = a.field();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let order: Vec<usize> = (0..n).collect();
    let ech = echelon(rows, 2 * n, &order);
    if ech.pivots.len() < n {
        return None;
    }
    Some(Matrix::from_fn(field, n, n, |r, c| ech.rows[r][n + c].clone()))
}

/// A subspace of `field^ambient` kept as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span with leftmost pivots.
    pub fn span(field: &Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let order: Vec<usize> = (0..ambient).collect();
        Self::span_with_order(field, ambient, vectors, &order)
    }

    /// Span whose pivots are chosen by scanning columns in `order`
    /// (a permutation of `0..ambient`).
    pub fn span_with_order(field: &Field, ambient: usize, vectors: &[Vec<Scalar>], order: &[usize]) -> Self {
        assert_eq!(order.len(), ambient, "pivot order must cover every coordinate");
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
        }
        let ech = echelon(vectors.to_vec(), ambient, order);
        Subspace {
            field: field.clone(),
            ambient,
            basis: ech.rows,
            pivots: ech.pivots,
        }
    }

    pub fn zero(field: &Field, ambient: usize) -> Self {
        Self::span(field, ambient, &[])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Pivot column of each basis vector (the basis vector has a 1 there and
    /// every other basis vector a 0).
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus the unique combination of basis vectors clearing its pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o - &(&factor * r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}
