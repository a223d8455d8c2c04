//! Finite-dimensional coalgebras given by structure constants.
//!
//! `Δ(e_a) = Σ μ_a^{bc} e_b ⊗ e_c` is stored sparsely per `a`; a vector in
//! `C⊗C` uses index `b*d + c`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactmath::{solve_linear, Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    labels: Vec<String>,
    delta: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
}

impl Coalgebra {
    /// Builds and verifies coassociativity and the counit laws.
    pub fn new(
        field: &Field,
        labels: Vec<String>,
        triples: Vec<(usize, usize, usize, Scalar)>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let c = Self::from_parts(field, labels, triples, counit)?;
        if !c.is_coassociative() {
            return Err(Error::Structure("comultiplication is not coassociative".into()));
        }
        if !c.satisfies_counit() {
            return Err(Error::Structure("counit laws fail".into()));
        }
        Ok(c)
    }

    /// Builds without checking the coalgebra axioms (shape is still checked).
    pub fn from_parts(
        field: &Field,
        labels: Vec<String>,
        triples: Vec<(usize, usize, usize, Scalar)>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::usage("a coalgebra needs at least one basis element"));
        }
        if counit.len() != d {
            return Err(Error::usage(format!("counit has {} entries, expected {d}", counit.len())));
        }
        let mut delta: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); d];
        for (a, b, c, v) in triples {
            if a >= d || b >= d || c >= d {
                return Err(Error::usage(format!("structure constant index out of range: ({a},{b},{c})")));
            }
            if !field.contains(&v) || counit.iter().any(|e| !field.contains(e)) {
                return Err(Error::usage("structure constant in the wrong field"));
            }
            if v.is_zero() {
                continue;
            }
            match delta[a].iter_mut().find(|(b2, c2, _)| *b2 == b && *c2 == c) {
                Some(slot) => slot.2 = &slot.2 + &v,
                None => delta[a].push((b, c, v)),
            }
        }
        for row in &mut delta {
            row.retain(|t| !t.2.is_zero());
            row.sort_by_key(|t| (t.0, t.1));
        }
        Ok(Coalgebra { field: field.clone(), labels, delta, counit })
    }

    /// The comatrix coalgebra: `Δ(c_jk) = Σ_u c_ju ⊗ c_uk`, `ε(c_jk) = δ_jk`.
    /// Basis index of `c_jk` (0-based) is `j*n + k`.
    pub fn comatrix(field: &Field, n: usize) -> Self {
        assert!(n >= 1);
        let mut labels = Vec::with_capacity(n * n);
        let mut triples = Vec::new();
        let mut counit = Vec::new();
        for j in 0..n {
            for k in 0..n {
                labels.push(comatrix_label(n, j, k));
                for u in 0..n {
                    triples.push((j * n + k, j * n + u, u * n + k, field.one()));
                }
                counit.push(if j == k { field.one() } else { field.zero() });
            }
        }
        Self::from_parts(field, labels, triples, counit).unwrap()
    }

    /// `k[X]`: every basis element grouplike.
    pub fn grouplike(field: &Field, labels: Vec<String>) -> Result<Self> {
        let d = labels.len();
        let triples = (0..d).map(|a| (a, a, a, field.one())).collect();
        Self::from_parts(field, labels, triples, vec![field.one(); d])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Nonzero `(b, c, μ_a^{bc})`, sorted.
    pub fn delta(&self, a: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[a]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `Δ(v)` as a `d²` vector.
    pub fn delta_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d * d];
        for (a, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (b, c, mu) in &self.delta[a] {
                let slot = &mut out[b * d + c];
                *slot = &*slot + &(coeff * mu);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        crate::exactmath::dot(&self.field, &self.counit, v)
    }

    pub fn unit_vector(&self, a: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[a] = self.field.one();
        v
    }

    /// `(Δ⊗I)Δ = (I⊗Δ)Δ` on every basis element.
    pub fn is_coassociative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| {
            let mut left = vec![self.field.zero(); d * d * d];
            let mut right = left.clone();
            for (b, c, mu) in &self.delta[a] {
                for (b1, b2, nu) in &self.delta[*b] {
                    let i = (b1 * d + b2) * d + c;
                    left[i] = &left[i] + &(mu * nu);
                }
                for (c1, c2, nu) in &self.delta[*c] {
                    let i = (b * d + c1) * d + c2;
                    right[i] = &right[i] + &(mu * nu);
                }
            }
            left == right
        })
    }

    /// `(ε⊗I)Δ = (I⊗ε)Δ = id`.
    pub fn satisfies_counit(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| {
            let mut left = vec![self.field.zero(); d];
            let mut right = left.clone();
            for (b, c, mu) in &self.delta[a] {
                left[*c] = &left[*c] + &(&self.counit[*b] * mu);
                right[*b] = &right[*b] + &(&self.counit[*c] * mu);
            }
            left == self.unit_vector(a) && right == self.unit_vector(a)
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|a| {
            let mut flipped: Vec<_> = self.delta[a].iter().map(|(b, c, v)| (*c, *b, v.clone())).collect();
            flipped.sort_by_key(|t| (t.0, t.1));
            flipped == self.delta[a]
        })
    }

    /// Text form of a vector as a linear combination of basis labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let terms: Vec<(String, Scalar)> = v
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(a, s)| (self.labels[a].clone(), s.clone()))
            .collect();
        format_combination(&self.field, &terms)
    }

    /// `Δ(e_a)` in Sweedler-style text, e.g. `x ⊗ y + y ⊗ x`.
    pub fn format_delta(&self, a: usize) -> String {
        let terms: Vec<(String, Scalar)> = self.delta[a]
            .iter()
            .map(|(b, c, v)| (format!("{} ⊗ {}", self.labels[*b], self.labels[*c]), v.clone()))
            .collect();
        format_combination(&self.field, &terms)
    }
}

/// Label of `c_jk` (0-based inputs, printed 1-based).
pub fn comatrix_label(n: usize, j: usize, k: usize) -> String {
    if n < 10 {
        format!("c{}{}", j + 1, k + 1)
    } else {
        format!("c{}_{}", j + 1, k + 1)
    }
}

/// `t1 - 3*t2 + (q + 1)*t3`; `0` for no terms.
pub fn format_combination(field: &Field, terms: &[(String, Scalar)]) -> String {
    let mut out = String::new();
    for (idx, (name, coeff)) in terms.iter().enumerate() {
        let negative = is_negative_literal(field, coeff);
        let magnitude = if negative { -coeff } else { coeff.clone() };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            let text = magnitude.display(field).to_string();
            if text.contains(' ') {
                let _ = write!(out, "({text})*");
            } else {
                let _ = write!(out, "{text}*");
            }
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Whether the printed form of `s` is best shown as `-(...)`.
fn is_negative_literal(field: &Field, s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => r < &num_rational::BigRational::from_integer(0.into()),
        Scalar::Modular { .. } => false,
        Scalar::Function(_) => {
            let text = s.display(field).to_string();
            text.starts_with('-') && !(-s).display(field).to_string().starts_with('-')
        }
    }
}

/// A right comodule: `ρ(m_l) = Σ coeffs[l][v][a] m_v ⊗ e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    coalgebra: Coalgebra,
    dim: usize,
    coeffs: Vec<Vec<Vec<Scalar>>>,
}

impl Comodule {
    /// Builds and verifies the comodule axioms.
    pub fn new(coalgebra: &Coalgebra, dim: usize, coeffs: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let d = coalgebra.dim();
        let shape_ok = coeffs.len() == dim && coeffs.iter().all(|r| r.len() == dim && r.iter().all(|c| c.len() == d));
        if dim == 0 || !shape_ok {
            return Err(Error::usage(format!("coaction table must be {dim}x{dim}x{d}")));
        }
        let m = Comodule { coalgebra: coalgebra.clone(), dim, coeffs };
        if !m.is_coassociative() {
            return Err(Error::Structure("coaction is not coassociative".into()));
        }
        if !m.satisfies_counit() {
            return Err(Error::Structure("coaction fails the counit law".into()));
        }
        Ok(m)
    }

    /// `ρ(m) = m ⊗ g` for a grouplike `g` (given by its basis index).
    pub fn trivial(coalgebra: &Coalgebra, dim: usize, grouplike: usize) -> Result<Self> {
        let f = coalgebra.field();
        let coeffs = (0..dim)
            .map(|l| {
                (0..dim)
                    .map(|v| {
                        let mut c = vec![f.zero(); coalgebra.dim()];
                        if v == l {
                            c[grouplike] = f.one();
                        }
                        c
                    })
                    .collect()
            })
            .collect();
        Self::new(coalgebra, dim, coeffs)
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `m_v ⊗ e_a` in `ρ(m_l)`.
    pub fn coeff(&self, l: usize, v: usize, a: usize) -> &Scalar {
        &self.coeffs[l][v][a]
    }

    pub fn coeffs(&self) -> &[Vec<Vec<Scalar>>] {
        &self.coeffs
    }

    /// `(ρ⊗I)ρ = (I⊗Δ)ρ`.
    pub fn is_coassociative(&self) -> bool {
        let c = &self.coalgebra;
        let d = c.dim();
        let f = c.field();
        (0..self.dim).all(|l| {
            // index (w, a, b) -> w*d*d + a*d + b
            let mut left = vec![f.zero(); self.dim * d * d];
            let mut right = left.clone();
            for v in 0..self.dim {
                for b in 0..d {
                    let outer = &self.coeffs[l][v][b];
                    if outer.is_zero() {
                        continue;
                    }
                    for w in 0..self.dim {
                        for a in 0..d {
                            let inner = &self.coeffs[v][w][a];
                            if !inner.is_zero() {
                                let i = w * d * d + a * d + b;
                                left[i] = &left[i] + &(outer * inner);
                            }
                        }
                    }
                    for (b1, b2, mu) in c.delta(b) {
                        let i = v * d * d + b1 * d + b2;
                        right[i] = &right[i] + &(outer * mu);
                    }
                }
            }
            left == right
        })
    }

    /// `(I⊗ε)ρ = id`.
    pub fn satisfies_counit(&self) -> bool {
        let c = &self.coalgebra;
        (0..self.dim).all(|l| {
            (0..self.dim).all(|v| {
                let s = c.counit_of(&self.coeffs[l][v]);
                if v == l { s.is_one() } else { s.is_zero() }
            })
        })
    }
}

/// Whether `I` is a coideal: `ε(I) = 0` and `Δ(I) ⊆ I⊗C + C⊗I`.
///
/// The second condition is tested as `(π⊗π)Δ(I) = 0` for the projection
/// `π: C → C/I`, whose kernel on `C⊗C` is exactly `I⊗C + C⊗I`.
pub fn is_coideal(c: &Coalgebra, subspace: &Subspace) -> bool {
    coideal_failure(c, subspace).is_none()
}

fn coideal_failure(c: &Coalgebra, subspace: &Subspace) -> Option<String> {
    assert_eq!(subspace.ambient(), c.dim(), "subspace lives in a different space");
    for (idx, b) in subspace.basis().iter().enumerate() {
        if !c.counit_of(b).is_zero() {
            return Some(format!("ε does not vanish on basis vector {} ({})", idx + 1, c.format_vector(b)));
        }
        if !in_two_sided_tensor(c.dim(), subspace, &c.delta_vec(b)) {
            return Some(format!(
                "Δ({}) is not in I⊗C + C⊗I",
                c.format_vector(b)
            ));
        }
    }
    None
}

/// Membership of a `d²` vector in `I⊗C + C⊗I`.
fn in_two_sided_tensor(d: usize, subspace: &Subspace, x: &[Scalar]) -> bool {
    let rows: Vec<Vec<Scalar>> = (0..d).map(|b| subspace.reduce(&x[b * d..(b + 1) * d])).collect();
    (0..d).all(|c| {
        let column: Vec<Scalar> = rows.iter().map(|r| r[c].clone()).collect();
        subspace.reduce(&column).iter().all(Scalar::is_zero)
    })
}

/// A subspace verified to be a coideal of its coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coideal {
    coalgebra: Coalgebra,
    subspace: Subspace,
}

impl Coideal {
    pub fn new(coalgebra: &Coalgebra, subspace: Subspace) -> Result<Self> {
        if subspace.ambient() != coalgebra.dim() || subspace.field() != coalgebra.field() {
            return Err(Error::usage("subspace does not live in the coalgebra"));
        }
        if let Some(why) = coideal_failure(coalgebra, &subspace) {
            return Err(Error::NotCoideal(why));
        }
        Ok(Coideal { coalgebra: coalgebra.clone(), subspace })
    }

    pub fn zero(coalgebra: &Coalgebra) -> Self {
        Coideal {
            coalgebra: coalgebra.clone(),
            subspace: Subspace::zero(coalgebra.field(), coalgebra.dim()),
        }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

/// `C/I` with the section given by the non-pivot basis vectors of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCoalgebra {
    parent: Coalgebra,
    coideal: Subspace,
    section: Vec<usize>,
    quotient: Coalgebra,
}

impl QuotientCoalgebra {
    /// Quotient using the coideal's own pivots.
    pub fn new(coideal: &Coideal) -> Self {
        let parent = coideal.coalgebra().clone();
        let sub = coideal.subspace().clone();
        let section = sub.free_columns();
        let f = parent.field().clone();
        let d = parent.dim();
        let mut position = vec![usize::MAX; d];
        for (s, &a) in section.iter().enumerate() {
            position[a] = s;
        }
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = sub.reduce(v);
            section.iter().map(|&a| r[a].clone()).collect()
        };
        let mut triples = Vec::new();
        for (s, &a) in section.iter().enumerate() {
            // (π⊗π)Δ(e_a): reduce both legs
            let dv = parent.delta_vec(&parent.unit_vector(a));
            let rows: Vec<Vec<Scalar>> = (0..d).map(|b| project(&dv[b * d..(b + 1) * d])).collect();
            for t in 0..section.len() {
                let column: Vec<Scalar> = rows.iter().map(|r| r[t].clone()).collect();
                for (s1, v) in project(&column).into_iter().enumerate() {
                    if !v.is_zero() {
                        triples.push((s, s1, t, v));
                    }
                }
            }
        }
        let labels = section.iter().map(|&a| format!("~{}", parent.label(a))).collect();
        let counit = section.iter().map(|&a| parent.counit()[a].clone()).collect();
        let quotient = Coalgebra::from_parts(&f, labels, triples, counit)
            .expect("quotient of a coideal has a well-formed structure");
        QuotientCoalgebra { parent, coideal: sub, section, quotient }
    }

    /// Quotient by the span of `vectors`, pivots chosen by scanning `order`.
    pub fn with_order(coalgebra: &Coalgebra, vectors: &[Vec<Scalar>], order: &[usize]) -> Result<Self> {
        let sub = Subspace::span_with_order(coalgebra.field(), coalgebra.dim(), vectors, order);
        Ok(Self::new(&Coideal::new(coalgebra, sub)?))
    }

    pub fn parent(&self) -> &Coalgebra {
        &self.parent
    }

    pub fn coideal(&self) -> &Subspace {
        &self.coideal
    }

    /// Parent basis index lifted from each quotient basis element.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.quotient
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// `π(v)` in quotient coordinates.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.coideal.reduce(v);
        self.section.iter().map(|&a| r[a].clone()).collect()
    }

    /// `π(e_a)`.
    pub fn project_basis(&self, a: usize) -> Vec<Scalar> {
        self.project(&self.parent.unit_vector(a))
    }

    /// Matrix of `π`: `dim C/I × dim C`.
    pub fn projection_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.parent.dim()).map(|a| self.project_basis(a)).collect();
        Matrix::from_fn(self.parent.field(), self.dim(), self.parent.dim(), |r, c| cols[c][r].clone())
    }

    /// Matrix of the identification `C/I → C/I'` with another quotient of the
    /// same parent by the same subspace: `ē_s ↦ π'(e_{section[s]})`.
    pub fn identification_with(&self, other: &QuotientCoalgebra) -> Matrix {
        let cols: Vec<Vec<Scalar>> = self.section.iter().map(|&a| other.project_basis(a)).collect();
        Matrix::from_fn(self.parent.field(), other.dim(), self.dim(), |r, c| cols[c][r].clone())
    }
}

/// Whether the linear map `phi` (`dim to × dim from`) is a coalgebra map.
pub fn is_coalgebra_map(from: &Coalgebra, to: &Coalgebra, phi: &Matrix) -> bool {
    let f = from.field();
    let (d1, d2) = (from.dim(), to.dim());
    if phi.rows() != d2 || phi.cols() != d1 {
        return false;
    }
    (0..d1).all(|a| {
        let image = phi.column(a);
        if to.counit_of(&image) != from.counit()[a] {
            return false;
        }
        let lhs = to.delta_vec(&image);
        let mut rhs = vec![f.zero(); d2 * d2];
        for (b, c, mu) in from.delta(a) {
            for r in 0..d2 {
                let x = phi.get(r, *b);
                if x.is_zero() {
                    continue;
                }
                for s in 0..d2 {
                    let y = phi.get(s, *c);
                    if !y.is_zero() {
                        rhs[r * d2 + s] = &rhs[r * d2 + s] + &(&(mu * x) * y);
                    }
                }
            }
        }
        lhs == rhs
    })
}

/// A bilinear form `C ⊗ D → k` stored as a `dim C × dim D` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    left: Coalgebra,
    right: Coalgebra,
    table: Matrix,
}

impl BilinearForm {
    pub fn new(left: &Coalgebra, right: &Coalgebra, table: Matrix) -> Result<Self> {
        if table.rows() != left.dim() || table.cols() != right.dim() {
            return Err(Error::usage(format!(
                "form table must be {}x{}, got {}x{}",
                left.dim(),
                right.dim(),
                table.rows(),
                table.cols()
            )));
        }
        if left.field() != right.field() || table.field() != left.field() {
            return Err(Error::usage("form and coalgebras live in different fields"));
        }
        Ok(BilinearForm { left: left.clone(), right: right.clone(), table })
    }

    pub fn from_fn(left: &Coalgebra, right: &Coalgebra, f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let table = Matrix::from_fn(left.field(), left.dim(), right.dim(), f);
        BilinearForm { left: left.clone(), right: right.clone(), table }
    }

    /// `ε⊗ε`, the convolution unit.
    pub fn unit(left: &Coalgebra, right: &Coalgebra) -> Self {
        Self::from_fn(left, right, |a, b| &left.counit()[a] * &right.counit()[b])
    }

    pub fn left(&self) -> &Coalgebra {
        &self.left
    }

    pub fn right(&self) -> &Coalgebra {
        &self.right
    }

    pub fn table(&self) -> &Matrix {
        &self.table
    }

    pub fn value(&self, a: usize, b: usize) -> &Scalar {
        self.table.get(a, b)
    }

    fn same_pair(&self, other: &BilinearForm) -> bool {
        self.left == other.left && self.right == other.right
    }
}

/// `(φ*ψ)(c⊗d) = Σ φ(c₍₁₎⊗d₍₁₎) ψ(c₍₂₎⊗d₍₂₎)`.
pub fn convolve(phi: &BilinearForm, psi: &BilinearForm) -> Result<BilinearForm> {
    if !phi.same_pair(psi) {
        return Err(Error::usage("convolution of forms on different coalgebra pairs"));
    }
    let (c, d) = (&phi.left, &phi.right);
    let f = c.field();
    Ok(BilinearForm::from_fn(c, d, |a, b| {
        let mut acc = f.zero();
        for (a1, a2, mu) in c.delta(a) {
            for (b1, b2, nu) in d.delta(b) {
                let x = phi.value(*a1, *b1);
                let y = psi.value(*a2, *b2);
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(&(mu * nu) * &(x * y));
                }
            }
        }
        acc
    }))
}

/// Two-sided convolution inverse by an exact linear solve, if one exists.
pub fn convolution_inverse(phi: &BilinearForm) -> Option<BilinearForm> {
    let (c, d) = (&phi.left, &phi.right);
    let f = c.field();
    let (dc, dd) = (c.dim(), d.dim());
    let size = dc * dd;
    // unknown ψ(a2,b2) at index a2*dd + b2; equation (a,b): Σ φ(a1,b1) μ ν ψ(a2,b2) = ε(a)ε(b)
    let mut system = Matrix::zeros(f, size, size);
    for a in 0..dc {
        for b in 0..dd {
            let row = a * dd + b;
            for (a1, a2, mu) in c.delta(a) {
                for (b1, b2, nu) in d.delta(b) {
                    let x = phi.value(*a1, *b1);
                    if x.is_zero() {
                        continue;
                    }
                    let col = a2 * dd + b2;
                    let v = system.get(row, col) + &(&(mu * nu) * x);
                    system.set(row, col, v);
                }
            }
        }
    }
    let unit = BilinearForm::unit(c, d);
    let rhs: Vec<Scalar> = (0..size).map(|i| unit.value(i / dd, i % dd).clone()).collect();
    let sol = solve_linear(&system, &rhs).ok()??;
    let psi = BilinearForm::from_fn(c, d, |a, b| sol[a * dd + b].clone());
    let two_sided = convolve(&psi, phi).ok()? == unit;
    two_sided.then_some(psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn ints(f: &Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn comatrix_small() {
        let f = q();
        let c1 = Coalgebra::comatrix(&f, 1);
        assert_eq!(c1.delta(0), &[(0, 0, f.one())]);
        let c2 = Coalgebra::comatrix(&f, 2);
        assert_eq!(c2.dim(), 4);
        assert_eq!(c2.format_delta(1), "c11 ⊗ c12 + c12 ⊗ c22");
        assert!(c2.is_coassociative() && c2.satisfies_counit());
        assert!(!c2.is_cocommutative());
    }

    #[test]
    fn grouplike_is_cocommutative() {
        let f = q();
        let g = Coalgebra::grouplike(&f, vec!["x".into(), "y".into(), "z".into()]).unwrap();
        assert!(g.is_coassociative() && g.satisfies_counit() && g.is_cocommutative());
    }

    #[test]
    fn rejects_broken_counit() {
        let f = q();
        let err = Coalgebra::new(&f, vec!["x".into()], vec![(0, 0, 0, f.one())], vec![f.from_i64(2)]);
        assert!(matches!(err, Err(Error::Structure(_))));
    }

    #[test]
    fn coideal_examples() {
        let f = q();
        let c = Coalgebra::comatrix(&f, 2);
        assert!(is_coideal(&c, &Subspace::zero(&f, 4)));
        let i = Subspace::span(&f, 4, &[ints(&f, &[0, 0, 1, 0]), ints(&f, &[-1, 0, 0, 1])]);
        assert!(is_coideal(&c, &i));
        let bad = Subspace::span(&f, 4, &[ints(&f, &[1, 0, 0, 0])]);
        assert!(!is_coideal(&c, &bad));
        assert!(matches!(Coideal::new(&c, bad), Err(Error::NotCoideal(_))));
        // Δ(c12) = c11⊗c12 + c12⊗c22 already lies in C⊗I + I⊗C
        let i12 = Subspace::span(&f, 4, &[ints(&f, &[0, 1, 0, 0])]);
        assert!(is_coideal(&c, &i12));
        // c12 + c21 is not: Δ has c11⊗c12 + c21⊗c11 terms that do not combine
        let sym = Subspace::span(&f, 4, &[ints(&f, &[0, 1, 1, 0])]);
        assert!(!is_coideal(&c, &sym));
    }

    #[test]
    fn zero_quotient_is_parent() {
        let f = q();
        let c = Coalgebra::comatrix(&f, 2);
        let qc = QuotientCoalgebra::new(&Coideal::zero(&c));
        assert_eq!(qc.dim(), 4);
        assert_eq!(qc.coalgebra().format_delta(1), "~c11 ⊗ ~c12 + ~c12 ⊗ ~c22");
    }

    #[test]
    fn combination_format() {
        let f = q();
        let terms = vec![("a".to_string(), f.from_i64(-1)), ("b".to_string(), f.from_i64(3))];
        assert_eq!(format_combination(&f, &terms), "-a + 3*b");
        let half = crate::exactmath::parse_scalar(&f, "-1/2").unwrap();
        assert_eq!(format_combination(&f, &[("c".into(), half)]), "-1/2*c");
        assert_eq!(format_combination(&f, &[]), "0");
    }

    #[test]
    fn zero_form_has_no_inverse() {
        let f = q();
        let c = Coalgebra::comatrix(&f, 2);
        let zero = BilinearForm::from_fn(&c, &c, |_, _| f.zero());
        assert!(convolution_inverse(&zero).is_none());
        let unit = BilinearForm::unit(&c, &c);
        assert_eq!(convolution_inverse(&unit), Some(unit));
    }
}
