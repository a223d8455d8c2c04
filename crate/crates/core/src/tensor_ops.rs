//! Operators on `M ⊗ M` and the braid-type equations they may satisfy.
//!
//! An [`EndoPair`] stores `R ∈ End(M⊗M)` for `M` with basis `m_0..m_{n-1}`
//! through coefficients `x_uv^ji` defined by
//!
//! ```text
//! R(m_v ⊗ m_u) = Σ_{i,j} x_uv^ji  m_i ⊗ m_j
//! ```
//!
//! and serializes them as the `n²×n²` matrix whose entry at row `i*n + j`,
//! column `v*n + u` is `x_uv^ji` (basis order `m_0⊗m_0, m_0⊗m_1, ...`). With
//! this layout `f ⊗ g` is the Kronecker product of `f` and `g`.
//!
//! Operators on `M⊗M⊗M` use the basis index `a*n² + b*n + c` for
//! `m_a ⊗ m_b ⊗ m_c`; composition `AB` means "apply `B`, then `A`".

use crate::error::{Error, Result};
use crate::exactmath::{matrix_inverse, Field, Matrix, Scalar};

/// Default bound on `dim M` accepted from configuration and files.
pub const DEFAULT_MAX_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoPair {
    n: usize,
    matrix: Matrix,
}

/// Which pair of tensor factors an operator on `M⊗M` acts on inside `M⊗M⊗M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    S12,
    S13,
    S23,
}

impl EndoPair {
    /// Wraps an `n²×n²` matrix in the serialization described above.
    pub fn from_matrix(n: usize, matrix: Matrix) -> Result<Self> {
        if n == 0 {
            return Err(Error::usage("dim M must be positive"));
        }
        if matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(Error::usage(format!(
                "an operator on M⊗M with dim M = {n} needs a {0}x{0} matrix, got {1}x{2}",
                n * n,
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(EndoPair { n, matrix })
    }

    /// Builds from a coefficient function `x(u, v, j, i) = x_uv^ji`.
    pub fn from_coefficients(field: &Field, n: usize, mut x: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Self {
        let matrix = Matrix::from_fn(field, n * n, n * n, |row, col| {
            let (i, j) = (row / n, row % n);
            let (v, u) = (col / n, col % n);
            x(u, v, j, i)
        });
        EndoPair { n, matrix }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        EndoPair { n, matrix: Matrix::identity(field, n * n) }
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        EndoPair { n, matrix: Matrix::zeros(field, n * n, n * n) }
    }

    /// The flip `m ⊗ m' ↦ m' ⊗ m`.
    pub fn flip(field: &Field, n: usize) -> Self {
        let perm: Vec<usize> = (0..n * n).map(|idx| (idx % n) * n + idx / n).collect();
        EndoPair { n, matrix: Matrix::permutation(field, &perm) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// `x_uv^ji`: the coefficient of `m_i ⊗ m_j` in `R(m_v ⊗ m_u)` (0-based).
    pub fn x(&self, u: usize, v: usize, j: usize, i: usize) -> &Scalar {
        let n = self.n;
        self.matrix.get(i * n + j, v * n + u)
    }

    pub fn compose(&self, other: &EndoPair) -> EndoPair {
        assert_eq!(self.n, other.n);
        EndoPair { n: self.n, matrix: &self.matrix * &other.matrix }
    }

    /// `Rτ`.
    pub fn times_flip(&self) -> EndoPair {
        self.compose(&EndoPair::flip(self.field(), self.n))
    }

    /// `τR`.
    pub fn flip_times(&self) -> EndoPair {
        EndoPair::flip(self.field(), self.n).compose(self)
    }

    /// `τRτ`.
    pub fn flip_conjugate(&self) -> EndoPair {
        self.flip_times().times_flip()
    }

    /// Whether `Rτ = τR`.
    pub fn commutes_with_flip(&self) -> bool {
        self.times_flip() == self.flip_times()
    }

    /// `R` acting on the chosen two factors of `M⊗M⊗M`, by direct index action.
    pub fn lift(&self, slot: Slot) -> EndoTriple {
        let n = self.n;
        let n2 = n * n;
        let field = self.field();
        let zero = field.zero();
        let idx = |a: usize, b: usize, c: usize| a * n2 + b * n + c;
        let mut m = Matrix::zeros(field, n2 * n, n2 * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let col = idx(a, b, c);
                    for p in 0..n {
                        for q in 0..n {
                            let (row, entry) = match slot {
                                Slot::S12 => (idx(p, q, c), self.matrix.get(p * n + q, a * n + b)),
                                Slot::S23 => (idx(a, p, q), self.matrix.get(p * n + q, b * n + c)),
                                Slot::S13 => (idx(p, b, q), self.matrix.get(p * n + q, a * n + c)),
                            };
                            if *entry != zero {
                                m.set(row, col, entry.clone());
                            }
                        }
                    }
                }
            }
        }
        EndoTriple { n, matrix: m }
    }

    /// `(u⊗u) R (u⊗u)^{-1}`.
    pub fn conjugate(&self, u: &Matrix) -> Result<EndoPair> {
        if u.rows() != self.n || u.cols() != self.n {
            return Err(Error::usage(format!("conjugating matrix must be {0}x{0}", self.n)));
        }
        let inv = matrix_inverse(u).ok_or_else(|| Error::Singular("conjugating matrix is not invertible".into()))?;
        let uu = u.kronecker(u);
        let uu_inv = inv.kronecker(&inv);
        Ok(EndoPair { n: self.n, matrix: &(&uu * &self.matrix) * &uu_inv })
    }

    pub fn invert(&self) -> Option<EndoPair> {
        matrix_inverse(&self.matrix).map(|m| EndoPair { n: self.n, matrix: m })
    }
}

/// An operator on `M⊗M⊗M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoTriple {
    n: usize,
    matrix: Matrix,
}

impl EndoTriple {
    pub fn identity(field: &Field, n: usize) -> Self {
        EndoTriple { n, matrix: Matrix::identity(field, n * n * n) }
    }

    /// `τ^(123)`: `l ⊗ m ⊗ n ↦ n ⊗ l ⊗ m`.
    pub fn cyclic(field: &Field, n: usize) -> Self {
        let n2 = n * n;
        let perm: Vec<usize> = (0..n2 * n)
            .map(|idx| {
                let (a, b, c) = (idx / n2, (idx / n) % n, idx % n);
                c * n2 + a * n + b
            })
            .collect();
        EndoTriple { n, matrix: Matrix::permutation(field, &perm) }
    }

    /// `τ^23`: swaps the last two factors.
    pub fn swap23(field: &Field, n: usize) -> Self {
        let n2 = n * n;
        let perm: Vec<usize> = (0..n2 * n)
            .map(|idx| {
                let (a, b, c) = (idx / n2, (idx / n) % n, idx % n);
                a * n2 + c * n + b
            })
            .collect();
        EndoTriple { n, matrix: Matrix::permutation(field, &perm) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EndoTriple) -> EndoTriple {
        assert_eq!(self.n, other.n);
        EndoTriple { n: self.n, matrix: &self.matrix * &other.matrix }
    }

    pub fn sub(&self, other: &EndoTriple) -> EndoTriple {
        EndoTriple { n: self.n, matrix: &self.matrix - &other.matrix }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }
}

fn compose_all(ops: &[&EndoTriple]) -> EndoTriple {
    let mut it = ops.iter();
    let first = (*it.next().unwrap()).clone();
    it.fold(first, |acc, op| acc.compose(op))
}

/// First 0-based `(i,j,k,l,p,q)` where
/// `Σ_v x_kv^ji y_lq^vp = Σ_α x_kl^jα y_αq^ip` fails, in lexicographic order.
pub fn first_pair_violation(r: &EndoPair, s: &EndoPair) -> Option<[usize; 6]> {
    let n = r.n;
    let field = r.field();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for p in 0..n {
                        for q in 0..n {
                            let mut lhs = field.zero();
                            let mut rhs = field.zero();
                            for v in 0..n {
                                let a = r.x(k, v, j, i);
                                let b = s.x(l, q, v, p);
                                if !a.is_zero() && !b.is_zero() {
                                    lhs = &lhs + &(a * b);
                                }
                                let c = r.x(k, l, j, v);
                                let d = s.x(v, q, i, p);
                                if !c.is_zero() && !d.is_zero() {
                                    rhs = &rhs + &(c * d);
                                }
                            }
                            if lhs != rhs {
                                return Some([i, j, k, l, p, q]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn check_same_shape(r: &EndoPair, s: &EndoPair) -> Result<()> {
    if r.n != s.n {
        return Err(Error::usage(format!("dimension mismatch: {} vs {}", r.n, s.n)));
    }
    if r.field() != s.field() {
        return Err(Error::usage(format!("field mismatch: {} vs {}", r.field(), s.field())));
    }
    Ok(())
}

/// Coordinate form of `R^23 S^12 = S^12 R^23`.
pub fn commuting_pair_coordinate(r: &EndoPair, s: &EndoPair) -> Result<bool> {
    check_same_shape(r, s)?;
    Ok(first_pair_violation(r, s).is_none())
}

/// Operator form of `R^23 S^12 = S^12 R^23`.
pub fn commuting_pair_operator(r: &EndoPair, s: &EndoPair) -> Result<bool> {
    check_same_shape(r, s)?;
    let (r23, s12) = (r.lift(Slot::S23), s.lift(Slot::S12));
    Ok(r23.compose(&s12) == s12.compose(&r23))
}

/// `R^23 S^12 = S^12 R^23`, decided by both the coordinate and the operator
/// route; the two must agree.
pub fn check_commuting_pair(r: &EndoPair, s: &EndoPair) -> Result<bool> {
    let coord = commuting_pair_coordinate(r, s)?;
    let op = commuting_pair_operator(r, s)?;
    assert_eq!(coord, op, "coordinate and operator verdicts disagree");
    Ok(coord)
}

/// First failing 0-based `(i,j,k,l,p,q)` of the D-equation in coordinates.
pub fn first_d_violation(r: &EndoPair) -> Option<[usize; 6]> {
    first_pair_violation(r, r)
}

pub fn check_d_coordinate(r: &EndoPair) -> bool {
    first_d_violation(r).is_none()
}

/// `R^12 R^23 = R^23 R^12` by composing lifted operators.
pub fn check_d_operator(r: &EndoPair) -> bool {
    let (r12, r23) = (r.lift(Slot::S12), r.lift(Slot::S23));
    r12.compose(&r23) == r23.compose(&r12)
}

/// Whether `R` solves the D-equation `R^12 R^23 = R^23 R^12`.
///
/// Both the coordinate equations and the operator identity are evaluated;
/// disagreement is an internal error and panics.
pub fn check_d(r: &EndoPair) -> bool {
    let coord = check_d_coordinate(r);
    let op = check_d_operator(r);
    assert_eq!(coord, op, "coordinate and operator verdicts disagree");
    coord
}

/// `R^12 R^13 R^23 = R^23 R^13 R^12`.
pub fn check_qybe(r: &EndoPair) -> bool {
    let (r12, r13, r23) = (r.lift(Slot::S12), r.lift(Slot::S13), r.lift(Slot::S23));
    compose_all(&[&r12, &r13, &r23]) == compose_all(&[&r23, &r13, &r12])
}

/// Hopf equation `R^12 R^23 = R^23 R^13 R^12`.
pub fn check_hopf(r: &EndoPair) -> bool {
    let (r12, r13, r23) = (r.lift(Slot::S12), r.lift(Slot::S13), r.lift(Slot::S23));
    r12.compose(&r23) == compose_all(&[&r23, &r13, &r12])
}

/// Pentagon equation `W^12 W^13 W^23 = W^23 W^12`.
pub fn check_pentagon(w: &EndoPair) -> bool {
    let (w12, w13, w23) = (w.lift(Slot::S12), w.lift(Slot::S13), w.lift(Slot::S23));
    compose_all(&[&w12, &w13, &w23]) == w23.compose(&w12)
}

/// Verdicts of the D-equation and its three flip-transformed reformulations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalentForms {
    pub d: bool,
    /// `T = Rτ` with `T^12 T^13 = T^23 T^13 τ^(123)`.
    pub form_t: bool,
    /// `U = τR` with `U^13 U^23 = τ^(123) U^13 U^12`.
    pub form_u: bool,
    /// `W = τRτ` with `τ^(123) W^23 W^31 = W^12 W^31 τ^(123)`, where `W^31`
    /// puts the first leg of `W` in slot 3 and the second in slot 1.
    pub form_w: bool,
    /// The same equation with the ordinary lift `W^13`. This one is not
    /// equivalent to the D-equation; see `form_w`.
    pub form_w_literal: bool,
}

impl EquivalentForms {
    pub fn all_agree(&self) -> bool {
        self.d == self.form_t && self.d == self.form_u && self.d == self.form_w
    }
}

pub fn check_equivalent_forms(r: &EndoPair) -> EquivalentForms {
    let field = r.field();
    let cyc = EndoTriple::cyclic(field, r.n);

    let t = r.times_flip();
    let (t12, t13, t23) = (t.lift(Slot::S12), t.lift(Slot::S13), t.lift(Slot::S23));
    let form_t = t12.compose(&t13) == compose_all(&[&t23, &t13, &cyc]);

    let u = r.flip_times();
    let (u12, u13, u23) = (u.lift(Slot::S12), u.lift(Slot::S13), u.lift(Slot::S23));
    let form_u = u13.compose(&u23) == compose_all(&[&cyc, &u13, &u12]);

    let w = r.flip_conjugate();
    let (w12, w13, w23) = (w.lift(Slot::S12), w.lift(Slot::S13), w.lift(Slot::S23));
    let form_w_literal = compose_all(&[&cyc, &w23, &w13]) == compose_all(&[&w12, &w13, &cyc]);
    // τ^13 W^13 τ^13 is R^13 because W = τRτ
    let w31 = r.lift(Slot::S13);
    let form_w = compose_all(&[&cyc, &w23, &w31]) == compose_all(&[&w12, &w31, &cyc]);

    EquivalentForms { d: check_d(r), form_t, form_u, form_w, form_w_literal }
}

/// `f ⊗ g`, a D-solution exactly when `fg = gf`.
pub fn product_solution(f: &Matrix, g: &Matrix) -> Result<EndoPair> {
    if !f.is_square() || !g.is_square() || f.rows() != g.rows() {
        return Err(Error::usage("product_solution needs two square matrices of equal size"));
    }
    if f.field() != g.field() {
        return Err(Error::usage("product_solution factors live in different fields"));
    }
    EndoPair::from_matrix(f.rows(), f.kronecker(g))
}

/// `R(m_i ⊗ m_j) = a_ij m_i ⊗ m_j`.
pub fn diagonal_solution(a: &Matrix) -> Result<EndoPair> {
    if !a.is_square() {
        return Err(Error::usage("diagonal_solution needs an n×n table"));
    }
    let n = a.rows();
    let field = a.field();
    let zero = field.zero();
    Ok(EndoPair::from_coefficients(field, n, |u, v, j, i| {
        if i == v && j == u { a.get(v, u).clone() } else { zero.clone() }
    }))
}
