//! Long dimodules: a left module and right comodule over the same bialgebra
//! with `ρ(h·m) = Σ h·m₍₀₎ ⊗ m₍₁₎`.

use crate::coalg::{Coalgebra, Comodule};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, Scalar, Subspace};
use crate::tensor_ops::EndoPair;

/// A finite-dimensional unital associative algebra by structure constants:
/// `e_a e_b = Σ_c mult[a][b][c] e_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl Algebra {
    pub fn new(field: &Field, mult: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Self> {
        let dim = unit.len();
        let shape_ok = dim > 0
            && mult.len() == dim
            && mult.iter().all(|r| r.len() == dim && r.iter().all(|c| c.len() == dim));
        if !shape_ok {
            return Err(Error::usage(format!("multiplication table must be {dim}x{dim}x{dim}")));
        }
        let alg = Algebra { field: field.clone(), dim, mult, unit };
        if !alg.is_associative() {
            return Err(Error::Structure("multiplication is not associative".into()));
        }
        if !alg.is_unital() {
            return Err(Error::Structure("unit vector is not a two-sided unit".into()));
        }
        Ok(alg)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product_of_basis(&self, a: usize, b: usize) -> &[Scalar] {
        &self.mult[a][b]
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let s = xa * yb;
                for (c, m) in self.mult[a][b].iter().enumerate() {
                    if !m.is_zero() {
                        out[c] = &out[c] + &(&s * m);
                    }
                }
            }
        }
        out
    }

    fn basis(&self, a: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[a] = self.field.one();
        v
    }

    pub fn is_associative(&self) -> bool {
        (0..self.dim).all(|a| {
            (0..self.dim).all(|b| {
                (0..self.dim).all(|c| {
                    let ab = self.multiply(&self.basis(a), &self.basis(b));
                    let bc = self.multiply(&self.basis(b), &self.basis(c));
                    self.multiply(&ab, &self.basis(c)) == self.multiply(&self.basis(a), &bc)
                })
            })
        })
    }

    pub fn is_unital(&self) -> bool {
        (0..self.dim).all(|a| {
            let e = self.basis(a);
            self.multiply(&self.unit, &e) == e && self.multiply(&e, &self.unit) == e
        })
    }

    /// Action matrix of an algebra element, given action matrices of the basis.
    pub fn act(&self, action: &[Matrix], x: &[Scalar]) -> Matrix {
        let size = action[0].rows();
        let mut out = Matrix::zeros(&self.field, size, size);
        for (a, xa) in x.iter().enumerate() {
            if !xa.is_zero() {
                out = &out + &action[a].scale(xa);
            }
        }
        out
    }

    /// Whether the basis matrices define a unital left module.
    pub fn is_module(&self, action: &[Matrix]) -> bool {
        if action.len() != self.dim || action.iter().any(|m| !m.is_square() || m.rows() != action[0].rows()) {
            return false;
        }
        if !self.act(action, &self.unit).is_identity() {
            return false;
        }
        (0..self.dim).all(|a| {
            (0..self.dim).all(|b| &action[a] * &action[b] == self.act(action, &self.mult[a][b]))
        })
    }

    /// Left regular representation: `L_a[c][b] = coefficient of e_c in e_a e_b`.
    pub fn regular_action(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|a| Matrix::from_fn(&self.field, self.dim, self.dim, |c, b| self.mult[a][b][c].clone()))
            .collect()
    }

    /// Smallest subalgebra containing the given elements (as a subspace).
    pub fn generated_subalgebra(&self, gens: &[Vec<Scalar>]) -> Subspace {
        let mut vectors = vec![self.unit.clone()];
        vectors.extend(gens.iter().cloned());
        let mut span = Subspace::span(&self.field, self.dim, &vectors);
        loop {
            let basis = span.basis().to_vec();
            let mut grown = basis.clone();
            for x in &basis {
                for g in gens {
                    grown.push(self.multiply(x, g));
                }
            }
            let next = Subspace::span(&self.field, self.dim, &grown);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }
}

/// Algebra and coalgebra on the same basis with `Δ`, `ε` algebra maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinBialgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
}

impl FinBialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() || algebra.field() != coalgebra.field() {
            return Err(Error::usage("algebra and coalgebra differ in dimension or field"));
        }
        if !coalgebra.is_coassociative() || !coalgebra.satisfies_counit() {
            return Err(Error::Structure("coalgebra axioms fail".into()));
        }
        let h = FinBialgebra { algebra, coalgebra };
        if let Some(why) = h.compatibility_failure() {
            return Err(Error::Structure(why));
        }
        Ok(h)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Product in `H⊗H` of two `d²` vectors.
    fn multiply_tensor(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let f = self.field();
        let mut out = vec![f.zero(); d * d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                let left = self.algebra.product_of_basis(i / d, j / d);
                let right = self.algebra.product_of_basis(i % d, j % d);
                for (a, la) in left.iter().enumerate() {
                    if la.is_zero() {
                        continue;
                    }
                    for (b, rb) in right.iter().enumerate() {
                        if !rb.is_zero() {
                            out[a * d + b] = &out[a * d + b] + &(&s * &(la * rb));
                        }
                    }
                }
            }
        }
        out
    }

    fn compatibility_failure(&self) -> Option<String> {
        let d = self.dim();
        let c = &self.coalgebra;
        let unit = self.algebra.unit();
        let mut unit_unit = vec![self.field().zero(); d * d];
        for (a, ua) in unit.iter().enumerate() {
            for (b, ub) in unit.iter().enumerate() {
                unit_unit[a * d + b] = ua * ub;
            }
        }
        if c.delta_vec(unit) != unit_unit {
            return Some("Δ(1) != 1⊗1".into());
        }
        if !c.counit_of(unit).is_one() {
            return Some("ε(1) != 1".into());
        }
        for a in 0..d {
            for b in 0..d {
                let ab = self.algebra.product_of_basis(a, b);
                let (ea, eb) = (c.unit_vector(a), c.unit_vector(b));
                if c.counit_of(ab) != &c.counit()[a] * &c.counit()[b] {
                    return Some(format!("ε is not multiplicative on ({}, {})", c.label(a), c.label(b)));
                }
                let lhs = c.delta_vec(ab);
                let rhs = self.multiply_tensor(&c.delta_vec(&ea), &c.delta_vec(&eb));
                if lhs != rhs {
                    return Some(format!("Δ is not multiplicative on ({}, {})", c.label(a), c.label(b)));
                }
            }
        }
        None
    }
}

/// A finite group given by its multiplication table on named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    /// Verifies closure, associativity, identity and inverses.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("closure: table is not a full n×n table over the elements".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("identity: no two-sided identity element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(Error::NotAGroup(format!("inverses: {} has no inverse", names[a])));
            }
        }
        Ok(CayleyTable { names, table, identity })
    }

    /// The group of permutations of `0..k`, composed as maps (`(στ)(x) = σ(τ(x))`),
    /// listed in lexicographic order of their one-line images.
    pub fn symmetric(k: usize) -> Self {
        let perms = symmetric_permutations(k);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&t.iter().map(|&x| s[x]).collect())).collect())
            .collect();
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        CayleyTable::new(names, table).unwrap()
    }

    /// `Z/m` with elements named `0..m`.
    pub fn cyclic(m: usize) -> Self {
        let names = (0..m).map(|i| i.to_string()).collect();
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        CayleyTable::new(names, table).unwrap()
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Permutations of `0..k` in one-line notation, lexicographically ordered;
/// this is the element order of [`CayleyTable::symmetric`].
pub fn symmetric_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &perms {
            for x in 0..k {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    perms
}

/// Cycle notation with 1-based points, `e` for the identity.
fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// `k[G]` with every group element grouplike.
pub fn group_bialgebra(field: &Field, group: &CayleyTable) -> FinBialgebra {
    let d = group.order();
    let mult = (0..d)
        .map(|a| {
            (0..d)
                .map(|b| {
                    let mut v = vec![field.zero(); d];
                    v[group.mul(a, b)] = field.one();
                    v
                })
                .collect()
        })
        .collect();
    let mut unit = vec![field.zero(); d];
    unit[group.identity()] = field.one();
    let algebra = Algebra::new(field, mult, unit).expect("group algebra axioms");
    let coalgebra = Coalgebra::grouplike(field, group.names().to_vec()).expect("grouplike coalgebra");
    FinBialgebra::new(algebra, coalgebra).expect("group bialgebra axioms")
}

/// Where the acting algebra comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Host {
    /// A bialgebra given by full structure constants; actions are indexed by its basis.
    Bialgebra(FinBialgebra),
    /// The tensor algebra on a coalgebra of generators; actions are indexed by
    /// the generators and words act by matrix products.
    Free(Coalgebra),
}

impl Host {
    /// The coalgebra in which the coaction takes values.
    pub fn coalgebra(&self) -> &Coalgebra {
        match self {
            Host::Bialgebra(h) => h.coalgebra(),
            Host::Free(c) => c,
        }
    }
}

/// Compatibility failures `(h, l)` (0-based): `ρ(h·m_l) != Σ h·m_v ⊗ ...`.
pub fn compat_failures(action: &[Matrix], coaction: &Comodule) -> Vec<(usize, usize)> {
    let n = coaction.dim();
    let d = coaction.coalgebra().dim();
    let f = coaction.coalgebra().field();
    let mut out = Vec::new();
    for (h, x) in action.iter().enumerate() {
        for l in 0..n {
            let ok = (0..n).all(|w| {
                (0..d).all(|a| {
                    let mut lhs = f.zero();
                    let mut rhs = f.zero();
                    for v in 0..n {
                        let (p, q) = (x.get(v, l), coaction.coeff(v, w, a));
                        if !p.is_zero() && !q.is_zero() {
                            lhs = &lhs + &(p * q);
                        }
                        let (p, q) = (coaction.coeff(l, v, a), x.get(w, v));
                        if !p.is_zero() && !q.is_zero() {
                            rhs = &rhs + &(p * q);
                        }
                    }
                    lhs == rhs
                })
            });
            if !ok {
                out.push((h, l));
            }
        }
    }
    out
}

/// Exact verdict of `ρ(a·m) = Σ a·m₍₀₎ ⊗ m₍₁₎` over all basis pairs, for any
/// family of acting operators (one per algebra basis element or generator).
pub fn check_long_compat(action: &[Matrix], coaction: &Comodule) -> bool {
    compat_failures(action, coaction).is_empty()
}

/// Action matrix of an algebra element in a bialgebra host, or `None` for a free host.
fn element_action(host: &Host, action: &[Matrix], x: &[Scalar]) -> Option<Matrix> {
    match host {
        Host::Bialgebra(h) => Some(h.algebra().act(action, x)),
        Host::Free(_) => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongDimodule {
    host: Host,
    action: Vec<Matrix>,
    comodule: Comodule,
}

impl LongDimodule {
    /// Verifies module axioms (bialgebra hosts), comodule axioms and (C).
    pub fn new(host: Host, action: Vec<Matrix>, comodule: Comodule) -> Result<Self> {
        let d = Self::unchecked(host, action, comodule)?;
        if let Some(&(h, l)) = compat_failures(&d.action, &d.comodule).first() {
            return Err(Error::Incompatible(format!(
                "ρ(h·m) != Σ h·m₍₀₎ ⊗ m₍₁₎ for h = {}, m = m{}",
                d.host.coalgebra().label(h),
                l + 1
            )));
        }
        Ok(d)
    }

    /// Checks shapes, module and comodule axioms, but not (C).
    pub fn unchecked(host: Host, action: Vec<Matrix>, comodule: Comodule) -> Result<Self> {
        if host.coalgebra() != comodule.coalgebra() {
            return Err(Error::usage("comodule is over a different coalgebra than the host"));
        }
        let n = comodule.dim();
        if action.len() != host.coalgebra().dim() || action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::usage(format!(
                "need {} action matrices of size {n}x{n}",
                host.coalgebra().dim()
            )));
        }
        if let Host::Bialgebra(h) = &host {
            if !h.algebra().is_module(&action) {
                return Err(Error::Structure("action matrices do not define a module".into()));
            }
        }
        Ok(LongDimodule { host, action, comodule })
    }

    pub fn host(&self) -> &Host {
        &self.host
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn dim(&self) -> usize {
        self.comodule.dim()
    }

    pub fn field(&self) -> &Field {
        self.host.coalgebra().field()
    }

    pub fn is_compatible(&self) -> bool {
        check_long_compat(&self.action, &self.comodule)
    }

    /// Compatibility checked only on algebra generators; `None` when the given
    /// elements do not generate the host (or the host is free).
    pub fn is_compatible_on_generators(&self, generators: &[Vec<Scalar>]) -> Option<bool> {
        let Host::Bialgebra(h) = &self.host else {
            return None;
        };
        if h.algebra().generated_subalgebra(generators).dim() != h.dim() {
            return None;
        }
        let mats: Vec<Matrix> = generators
            .iter()
            .map(|g| element_action(&self.host, &self.action, g).unwrap())
            .collect();
        Some(check_long_compat(&mats, &self.comodule))
    }
}

/// The subspace of host elements `h` satisfying (C) for every basis vector.
pub fn compatible_subspace(host: &FinBialgebra, action: &[Matrix], coaction: &Comodule) -> Subspace {
    let f = host.field();
    let d = host.dim();
    let n = coaction.dim();
    let dc = coaction.coalgebra().dim();
    // the defect of (C) is linear in h: one column per basis element of H
    let rows = n * n * dc;
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(d);
    for x in action.iter() {
        let mut col = Vec::with_capacity(rows);
        for l in 0..n {
            for w in 0..n {
                for a in 0..dc {
                    let mut acc = f.zero();
                    for v in 0..n {
                        acc = &acc + &(x.get(v, l) * coaction.coeff(v, w, a));
                        acc = &acc - &(coaction.coeff(l, v, a) * x.get(w, v));
                    }
                    col.push(acc);
                }
            }
        }
        columns.push(col);
    }
    let defect = Matrix::from_fn(f, rows, d, |r, c| columns[c][r].clone());
    let kernel = crate::exactmath::kernel_basis(&defect);
    Subspace::span(f, d, &kernel)
}

/// `R(m ⊗ n) = Σ n₍₁₎·m ⊗ n₍₀₎`.
pub fn r_from_dimodule(d: &LongDimodule) -> Result<EndoPair> {
    if !d.is_compatible() {
        return Err(Error::Incompatible("input is not a Long dimodule".into()));
    }
    Ok(r_from_parts(&d.action, &d.comodule))
}

/// The same formula without the compatibility precondition.
pub fn r_from_parts(action: &[Matrix], coaction: &Comodule) -> EndoPair {
    let n = coaction.dim();
    let field = coaction.coalgebra().field();
    let dc = coaction.coalgebra().dim();
    EndoPair::from_coefficients(field, n, |u, v, j, i| {
        let mut acc = field.zero();
        for (h, m) in action.iter().enumerate().take(dc) {
            let k = coaction.coeff(u, j, h);
            let a = m.get(i, v);
            if !k.is_zero() && !a.is_zero() {
                acc = &acc + &(k * a);
            }
        }
        acc
    })
}

/// A `k[G]`-module with a decomposition into submodules along basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    field: Field,
    group: CayleyTable,
    action: Vec<Matrix>,
    grades: Vec<usize>,
}

impl GradedModule {
    /// `action[g]` is the matrix of group element `g`; basis vector `v` lies
    /// in the component `M_{grades[v]}`.
    pub fn new(field: &Field, group: CayleyTable, action: Vec<Matrix>, grades: Vec<usize>) -> Result<Self> {
        let n = grades.len();
        if n == 0 || action.len() != group.order() || action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::usage(format!(
                "need {} action matrices of size {n}x{n}",
                group.order()
            )));
        }
        if grades.iter().any(|&g| g >= group.order()) {
            return Err(Error::usage("grade outside the group"));
        }
        if !action[group.identity()].is_identity() {
            return Err(Error::Structure("identity element does not act as the identity".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if &action[a] * &action[b] != action[group.mul(a, b)] {
                    return Err(Error::Structure(format!(
                        "action is not multiplicative on ({}, {})",
                        group.names()[a],
                        group.names()[b]
                    )));
                }
            }
        }
        for (g, m) in action.iter().enumerate() {
            for v in 0..n {
                for w in 0..n {
                    if grades[v] != grades[w] && !m.get(w, v).is_zero() {
                        return Err(Error::Structure(format!(
                            "component {} is not stable under {}",
                            group.names()[grades[v]],
                            group.names()[g]
                        )));
                    }
                }
            }
        }
        Ok(GradedModule { field: field.clone(), group, action, grades })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn group(&self) -> &CayleyTable {
        &self.group
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn grades(&self) -> &[usize] {
        &self.grades
    }

    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    /// Projector onto `M_σ`.
    pub fn projector(&self, sigma: usize) -> Matrix {
        let (z, o) = (self.field.zero(), self.field.one());
        Matrix::from_fn(&self.field, self.dim(), self.dim(), |r, c| {
            if r == c && self.grades[r] == sigma { o.clone() } else { z.clone() }
        })
    }
}

/// `ρ(m_σ) = m_σ ⊗ σ` over `k[G]`.
pub fn dimodule_from_grading(g: &GradedModule) -> Result<LongDimodule> {
    let h = group_bialgebra(&g.field, &g.group);
    let n = g.dim();
    let d = h.dim();
    let coeffs = (0..n)
        .map(|l| {
            (0..n)
                .map(|v| {
                    let mut c = vec![g.field.zero(); d];
                    if v == l {
                        c[g.grades[l]] = g.field.one();
                    }
                    c
                })
                .collect()
        })
        .collect();
    let comodule = Comodule::new(h.coalgebra(), n, coeffs)?;
    LongDimodule::new(Host::Bialgebra(h), g.action.clone(), comodule)
}

/// Grade of each basis vector when every `ρ(m_v)` is `m_v ⊗ g` for a basis
/// element `g`; `None` otherwise.
pub fn read_grading(d: &LongDimodule) -> Option<Vec<usize>> {
    let c = d.comodule();
    let dc = c.coalgebra().dim();
    (0..c.dim())
        .map(|l| {
            let mut found = None;
            for v in 0..c.dim() {
                for a in 0..dc {
                    let s = c.coeff(l, v, a);
                    if s.is_zero() {
                        continue;
                    }
                    if v != l || !s.is_one() || found.is_some() {
                        return None;
                    }
                    found = Some(a);
                }
            }
            found
        })
        .collect()
}

fn bialgebra_host(d: &LongDimodule) -> Result<&FinBialgebra> {
    match d.host() {
        Host::Bialgebra(h) => Ok(h),
        Host::Free(_) => Err(Error::usage("operation needs a bialgebra host with full structure constants")),
    }
}

/// `M ⊗ N` with `h·(m⊗n) = Σ h₍₁₎·m ⊗ h₍₂₎·n` and `ρ(m⊗n) = Σ m₍₀₎⊗n₍₀₎⊗m₍₁₎n₍₁₎`.
/// Basis index of `m_i ⊗ n_j` is `i*dim N + j`.
pub fn tensor_dimodule(m: &LongDimodule, n: &LongDimodule) -> Result<LongDimodule> {
    let h = bialgebra_host(m)?;
    if bialgebra_host(n)? != h {
        return Err(Error::usage("dimodules live over different bialgebras"));
    }
    let f = h.field();
    let d = h.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let size = dm * dn;
    let action = (0..d)
        .map(|a| {
            let mut out = Matrix::zeros(f, size, size);
            for (b, c, mu) in h.coalgebra().delta(a) {
                out = &out + &m.action()[*b].kronecker(&n.action()[*c]).scale(mu);
            }
            out
        })
        .collect();
    let (cm, cn) = (m.comodule(), n.comodule());
    let mut coeffs = vec![vec![vec![f.zero(); d]; size]; size];
    for l in 0..dm {
        for l2 in 0..dn {
            for v in 0..dm {
                for v2 in 0..dn {
                    let slot = &mut coeffs[l * dn + l2][v * dn + v2];
                    for b in 0..d {
                        let x = cm.coeff(l, v, b);
                        if x.is_zero() {
                            continue;
                        }
                        for c in 0..d {
                            let y = cn.coeff(l2, v2, c);
                            if y.is_zero() {
                                continue;
                            }
                            let s = x * y;
                            for (a, p) in h.algebra().product_of_basis(b, c).iter().enumerate() {
                                if !p.is_zero() {
                                    slot[a] = &slot[a] + &(&s * p);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let comodule = Comodule::new(h.coalgebra(), size, coeffs)?;
    LongDimodule::new(Host::Bialgebra(h.clone()), action, comodule)
}

/// The unit object `k`: `h·1 = ε(h)`, `ρ(1) = 1 ⊗ 1_H`.
pub fn unit_dimodule(h: &FinBialgebra) -> Result<LongDimodule> {
    let f = h.field();
    let action = h.coalgebra().counit().iter().map(|e| Matrix::from_fn(f, 1, 1, |_, _| e.clone())).collect();
    let coeffs = vec![vec![h.algebra().unit().to_vec()]];
    let comodule = Comodule::new(h.coalgebra(), 1, coeffs)?;
    LongDimodule::new(Host::Bialgebra(h.clone()), action, comodule)
}

/// `N ⊗ H` with `h•(n⊗l) = h·n ⊗ l` and `ρ(n⊗l) = Σ n⊗l₍₁₎ ⊗ l₍₂₎`.
/// Basis index of `n_i ⊗ e_a` is `i*dim H + a`.
pub fn induce_from_module(action: &[Matrix], h: &FinBialgebra) -> Result<LongDimodule> {
    if !h.algebra().is_module(action) {
        return Err(Error::Structure("action matrices do not define a module".into()));
    }
    let f = h.field();
    let d = h.dim();
    let dn = action[0].rows();
    let size = dn * d;
    let id = Matrix::identity(f, d);
    let big: Vec<Matrix> = action.iter().map(|m| m.kronecker(&id)).collect();
    let mut coeffs = vec![vec![vec![f.zero(); d]; size]; size];
    for i in 0..dn {
        for a in 0..d {
            for (b, c, mu) in h.coalgebra().delta(a) {
                coeffs[i * d + a][i * d + b][*c] = mu.clone();
            }
        }
    }
    let comodule = Comodule::new(h.coalgebra(), size, coeffs)?;
    LongDimodule::new(Host::Bialgebra(h.clone()), big, comodule)
}

/// `H ⊗ M` with `h•(l⊗m) = hl ⊗ m` and `ρ(l⊗m) = Σ l⊗m₍₀₎ ⊗ m₍₁₎`.
/// Basis index of `e_a ⊗ m_l` is `a*dim M + l`.
pub fn induce_from_comodule(m: &Comodule, h: &FinBialgebra) -> Result<LongDimodule> {
    if m.coalgebra() != h.coalgebra() {
        return Err(Error::usage("comodule is over a different coalgebra"));
    }
    let f = h.field();
    let d = h.dim();
    let dm = m.dim();
    let size = d * dm;
    let id = Matrix::identity(f, dm);
    let action = h.algebra().regular_action().iter().map(|l| l.kronecker(&id)).collect();
    let mut coeffs = vec![vec![vec![f.zero(); d]; size]; size];
    for a in 0..d {
        for l in 0..dm {
            for v in 0..dm {
                coeffs[a * dm + l][a * dm + v] = m.coeffs()[l][v].clone();
            }
        }
    }
    let comodule = Comodule::new(h.coalgebra(), size, coeffs)?;
    LongDimodule::new(Host::Bialgebra(h.clone()), action, comodule)
}

/// The trivial action `h·m = ε(h)m` on `dim` copies of the field.
pub fn trivial_action(h: &FinBialgebra, dim: usize) -> Vec<Matrix> {
    let f = h.field();
    h.coalgebra()
        .counit()
        .iter()
        .map(|e| Matrix::identity(f, dim).scale(e))
        .collect()
}
