//! The FRT-type construction of `D(R)`.
//!
//! Every obstruction `o(i,j,k,l)` lies in the comatrix coalgebra, so the
//! ideal it generates in `T(C)` is generated in degree one and
//! `D(R) = T(C)/I ≅ T(C/I(R))`. The bialgebra is therefore presented as the
//! free algebra on a basis of the quotient coalgebra `C/I(R)`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coalg::{format_combination, Coalgebra, Coideal, Comodule, QuotientCoalgebra};
use crate::dimodule::{check_long_compat, r_from_parts, Host, LongDimodule};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, Scalar, Subspace};
use crate::tensor_ops::{first_d_violation, EndoPair, Slot};

/// `ρ(m_l) = Σ_v m_v ⊗ c_vl` over the comatrix coalgebra.
pub fn standard_comodule(field: &Field, n: usize) -> Comodule {
    let c = Coalgebra::comatrix(field, n);
    let coeffs = (0..n)
        .map(|l| {
            (0..n)
                .map(|v| {
                    let mut x = vec![field.zero(); n * n];
                    x[v * n + l] = field.one();
                    x
                })
                .collect()
        })
        .collect();
    Comodule::new(&c, n, coeffs).expect("standard comodule axioms")
}

/// `A(c_ju)`, indexed by `j*n + u`, with `c_ju · m_v = Σ_i x_uv^ji m_i`.
pub fn generator_action(r: &EndoPair) -> Vec<Matrix> {
    let n = r.n();
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for u in 0..n {
            out.push(Matrix::from_fn(r.field(), n, n, |i, v| r.x(u, v, j, i).clone()));
        }
    }
    out
}

/// Action of a degree-one element of `T(C)` given in comatrix coordinates.
pub fn action_of(action: &[Matrix], element: &[Scalar]) -> Matrix {
    let f = action[0].field();
    let n = action[0].rows();
    let mut out = Matrix::zeros(f, n, n);
    for (a, s) in element.iter().enumerate() {
        if !s.is_zero() {
            out = &out + &action[a].scale(s);
        }
    }
    out
}

/// `o(i,j,k,l) = Σ_v x_kv^ji c_vl − Σ_α x_kl^jα c_iα` in comatrix coordinates.
pub fn obstruction(r: &EndoPair, i: usize, j: usize, k: usize, l: usize) -> Vec<Scalar> {
    let n = r.n();
    let mut o = vec![r.field().zero(); n * n];
    for v in 0..n {
        let a = r.x(k, v, j, i);
        if !a.is_zero() {
            o[v * n + l] = &o[v * n + l] + a;
        }
        let b = r.x(k, l, j, v);
        if !b.is_zero() {
            o[i * n + v] = &o[i * n + v] - b;
        }
    }
    o
}

/// All obstructions, indexed by 0-based `(i,j,k,l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionSet {
    n: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl ObstructionSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &[Scalar] {
        let n = self.n;
        &self.vectors[((i * n + j) * n + k) * n + l]
    }

    /// In lexicographic order of `(i,j,k,l)`.
    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }
}

pub fn obstructions(r: &EndoPair) -> ObstructionSet {
    let n = r.n();
    let mut vectors = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    vectors.push(obstruction(r, i, j, k, l));
                }
            }
        }
    }
    ObstructionSet { n, vectors }
}

/// First 0-based `(i,j,k,l)` where
/// `Δ(o(i,j,k,l)) = Σ_u o(i,j,k,u)⊗c_ul + c_iu⊗o(u,j,k,l)` fails, if any.
pub fn prima_violation(r: &EndoPair, obs: &ObstructionSet) -> Option<[usize; 4]> {
    let n = r.n();
    let d = n * n;
    let c = Coalgebra::comatrix(r.field(), n);
    let zero = r.field().zero();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs = c.delta_vec(obs.get(i, j, k, l));
                    let mut rhs = vec![zero.clone(); d * d];
                    for u in 0..n {
                        for (a, s) in obs.get(i, j, k, u).iter().enumerate() {
                            if !s.is_zero() {
                                let idx = a * d + u * n + l;
                                rhs[idx] = &rhs[idx] + s;
                            }
                        }
                        for (a, s) in obs.get(u, j, k, l).iter().enumerate() {
                            if !s.is_zero() {
                                let idx = (i * n + u) * d + a;
                                rhs[idx] = &rhs[idx] + s;
                            }
                        }
                    }
                    if lhs != rhs {
                        return Some([i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}

/// Identity (prima) for every index tuple.
pub fn prima_holds(r: &EndoPair) -> bool {
    prima_violation(r, &obstructions(r)).is_none()
}

/// Column scan order used to pick relation pivots: off-diagonal generators
/// in row-major order, then the diagonal ones from `c_nn` down to `c_11`.
pub fn relation_pivot_order(n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n * n).filter(|a| a / n != a % n).collect();
    order.extend((0..n).rev().map(|i| i * n + i));
    order
}

/// `I(R)`: the span of all obstructions, verified to be a coideal by the
/// subspace test and by identity (prima).
pub fn obstruction_coideal(r: &EndoPair) -> Coideal {
    let obs = obstructions(r);
    coideal_from(r, &obs)
}

fn coideal_from(r: &EndoPair, obs: &ObstructionSet) -> Coideal {
    let n = r.n();
    if let Some(idx) = prima_violation(r, obs) {
        panic!("identity for Δ(o) fails at (i,j,k,l) = {idx:?}");
    }
    let c = Coalgebra::comatrix(r.field(), n);
    let sub = Subspace::span_with_order(r.field(), n * n, obs.vectors(), &relation_pivot_order(n));
    Coideal::new(&c, sub).expect("span of obstructions is a coideal")
}

/// `Σ c_jk·(m_l)₍₀₎ ⊗ (m_l)₍₁₎ − ρ(c_jk·m_l)` in `M⊗C` (index `i*n² + a`),
/// asserted equal to `Σ_i m_i ⊗ o(i,j,k,l)`.
pub fn defect_pairing(r: &EndoPair, j: usize, k: usize, l: usize) -> Vec<Scalar> {
    let n = r.n();
    let d = n * n;
    let f = r.field();
    let rho = standard_comodule(f, n);
    let a = &generator_action(r)[j * n + k];
    let mut lhs = vec![f.zero(); n * d];
    for w in 0..n {
        for e in 0..d {
            let mut acc = f.zero();
            for v in 0..n {
                acc = &acc + &(rho.coeff(l, v, e) * a.get(w, v));
                acc = &acc - &(a.get(v, l) * rho.coeff(v, w, e));
            }
            lhs[w * d + e] = acc;
        }
    }
    let mut rhs = vec![f.zero(); n * d];
    for i in 0..n {
        rhs[i * d..(i + 1) * d].clone_from_slice(&obstruction(r, i, j, k, l));
    }
    assert_eq!(lhs, rhs, "defect pairing disagrees with the obstructions");
    lhs
}

/// `(R²³R¹² − R¹²R²³)(w ⊗ m_k ⊗ m_j)`, asserted equal to
/// `Σ_{r,s} o(r,s,j,k)·w ⊗ m_r ⊗ m_s`.
pub fn d_identity(r: &EndoPair, w: &[Scalar], k: usize, j: usize) -> Vec<Scalar> {
    let n = r.n();
    assert_eq!(w.len(), n, "vector must lie in M");
    let f = r.field();
    let (r12, r23) = (r.lift(Slot::S12), r.lift(Slot::S23));
    let diff = r23.compose(&r12).sub(&r12.compose(&r23));
    let mut input = vec![f.zero(); n * n * n];
    for (a, s) in w.iter().enumerate() {
        input[a * n * n + k * n + j] = s.clone();
    }
    let lhs = diff.apply(&input);
    let action = generator_action(r);
    let mut rhs = vec![f.zero(); n * n * n];
    for rr in 0..n {
        for s in 0..n {
            let image = action_of(&action, &obstruction(r, rr, s, j, k)).mul_vec(w);
            for (a, x) in image.into_iter().enumerate() {
                rhs[a * n * n + rr * n + s] = x;
            }
        }
    }
    assert_eq!(lhs, rhs, "D-equation defect disagrees with the obstruction action");
    lhs
}

/// Identity (adoua) on every basis vector `w = m_a` and every `(k, j)`.
pub fn adoua_holds(r: &EndoPair) -> bool {
    let n = r.n();
    let (r12, r23) = (r.lift(Slot::S12), r.lift(Slot::S23));
    let diff = r23.compose(&r12).sub(&r12.compose(&r23));
    let action = generator_action(r);
    for j in 0..n {
        for k in 0..n {
            for rr in 0..n {
                for s in 0..n {
                    let a_o = action_of(&action, &obstruction(r, rr, s, j, k));
                    for a in 0..n {
                        for x in 0..n {
                            let lhs = diff.matrix().get(x * n * n + rr * n + s, a * n * n + k * n + j);
                            if lhs != a_o.get(x, a) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Whether every obstruction acts as zero on `M`.
pub fn annihilation_check(r: &EndoPair) -> bool {
    let action = generator_action(r);
    obstructions(r).vectors().iter().all(|o| action_of(&action, o).is_zero())
}

/// A relation `v = 0` of `D(R)`, with `v` a normalized basis vector of `I(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pivot: usize,
    coeffs: Vec<Scalar>,
}

impl Relation {
    /// Normalizes a reduced basis vector: over `Q` to primitive integers with
    /// a positive pivot coefficient, otherwise to pivot coefficient 1.
    pub fn new(field: &Field, pivot: usize, vector: &[Scalar]) -> Self {
        let inv = vector[pivot].inv().expect("pivot coefficient is nonzero");
        let mut coeffs: Vec<Scalar> = vector.iter().map(|s| s * &inv).collect();
        if matches!(field, Field::Rationals) {
            let rats: Vec<BigRational> = coeffs.iter().map(|s| s.as_rational().unwrap().clone()).collect();
            let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
            let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            coeffs = ints
                .iter()
                .map(|x| field.from_bigint(&(x / &gcd)))
                .collect();
            debug_assert!(ints[pivot].is_positive());
        }
        Relation { pivot, coeffs }
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `c12 - 3*c11 + 3*c22 = 0`: pivot term first, then row-major order.
    pub fn display(&self, field: &Field, labels: &[String]) -> String {
        let mut terms = vec![(labels[self.pivot].clone(), self.coeffs[self.pivot].clone())];
        for (a, s) in self.coeffs.iter().enumerate() {
            if a != self.pivot && !s.is_zero() {
                terms.push((labels[a].clone(), s.clone()));
            }
        }
        format!("{} = 0", format_combination(field, &terms))
    }
}

/// The presentation of `D(R)` as the free algebra on `C/I(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrtPresentation {
    r: EndoPair,
    obstructions: ObstructionSet,
    coideal: Coideal,
    quotient: QuotientCoalgebra,
    relations: Vec<Relation>,
}

/// Builds `D(R)`; fails with the first violated coordinate equation when `R`
/// does not solve the D-equation.
pub fn d_bialgebra(r: &EndoPair) -> Result<FrtPresentation> {
    if let Some(idx) = first_d_violation(r) {
        return Err(Error::NotASolution(idx.map(|x| x + 1)));
    }
    let obs = obstructions(r);
    let coideal = coideal_from(r, &obs);
    let quotient = QuotientCoalgebra::new(&coideal);
    let mut relations: Vec<Relation> = coideal
        .subspace()
        .basis()
        .iter()
        .zip(coideal.subspace().pivots())
        .map(|(v, &p)| Relation::new(r.field(), p, v))
        .collect();
    relations.sort_by_key(Relation::pivot);
    Ok(FrtPresentation { r: r.clone(), obstructions: obs, coideal, quotient, relations })
}

impl FrtPresentation {
    pub fn r(&self) -> &EndoPair {
        &self.r
    }

    pub fn obstructions(&self) -> &ObstructionSet {
        &self.obstructions
    }

    pub fn coideal(&self) -> &Coideal {
        &self.coideal
    }

    pub fn quotient(&self) -> &QuotientCoalgebra {
        &self.quotient
    }

    /// The coalgebra spanned by the algebra generators of `D(R)`.
    pub fn generators(&self) -> &Coalgebra {
        self.quotient.coalgebra()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation_strings(&self) -> Vec<String> {
        let labels = self.coideal.coalgebra().labels();
        self.relations.iter().map(|rel| rel.display(self.r.field(), labels)).collect()
    }

    /// `M` as a Long `D(R)`-dimodule: generators act through any lift to
    /// `C`, the coaction is `ρ(m_l) = Σ_v m_v ⊗ c̄_vl`.
    pub fn canonical_dimodule(&self) -> LongDimodule {
        let n = self.r.n();
        let full = generator_action(&self.r);
        let action: Vec<Matrix> = self.quotient.section().iter().map(|&a| full[a].clone()).collect();
        let coeffs = (0..n)
            .map(|l| (0..n).map(|v| self.quotient.project_basis(v * n + l)).collect())
            .collect();
        let comodule = Comodule::new(self.generators(), n, coeffs).expect("projected comodule axioms");
        LongDimodule::new(Host::Free(self.generators().clone()), action, comodule)
            .expect("canonical structure is a Long dimodule")
    }

    /// Whether regenerating `R` from the canonical dimodule returns `R`.
    pub fn round_trip(&self) -> bool {
        let d = self.canonical_dimodule();
        r_from_parts(d.action(), d.comodule()) == self.r
    }

    pub fn report(&self) -> String {
        let f = self.r.field();
        let g = self.generators();
        let mut out = String::new();
        let _ = writeln!(out, "field {}", f.header());
        let _ = writeln!(out, "n {}", self.r.n());
        let _ = writeln!(out, "dim I(R) {}", self.coideal.dim());
        let _ = writeln!(out, "relations {}", self.relations.len());
        for rel in self.relation_strings() {
            let _ = writeln!(out, "  {rel}");
        }
        let _ = writeln!(out, "generators {}", g.dim());
        for s in 0..g.dim() {
            let _ = writeln!(
                out,
                "  {}: Δ = {}; ε = {}",
                g.label(s),
                g.format_delta(s),
                g.counit()[s].display(f)
            );
        }
        let _ = writeln!(out, "round trip: {}", if self.round_trip() { "ok" } else { "FAILED" });
        out
    }
}

/// The generator assignment `c̄_ij ↦ c'_ij` of the induced map `D(R) → H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    /// Image of each generator of `D(R)` in the host's coalgebra coordinates.
    pub images: Vec<Vec<Scalar>>,
    /// `(I⊗f)ρ = ρ'` on the basis of `M`.
    pub colinear: bool,
    /// `Δ_H f(x) = (f⊗f)Δ(x)` on generators.
    pub respects_delta: bool,
    /// `ε_H f(x) = ε(x)` on generators.
    pub respects_counit: bool,
}

impl GeneratorMap {
    pub fn is_verified(&self) -> bool {
        self.colinear && self.respects_delta && self.respects_counit
    }
}

/// The generator-level map `D(R) → H` induced by a realization of `R` as a
/// Long `H`-dimodule; `None` when the realization is not a dimodule or does
/// not reproduce `R`.
pub fn universal_map(pres: &FrtPresentation, realization: &LongDimodule) -> Result<Option<GeneratorMap>> {
    let r = pres.r();
    let n = r.n();
    if realization.dim() != n {
        return Err(Error::usage(format!(
            "realization has dimension {}, expected {n}",
            realization.dim()
        )));
    }
    if realization.field() != r.field() {
        return Err(Error::usage("realization is over a different field"));
    }
    let rho = realization.comodule();
    if !check_long_compat(realization.action(), rho) || r_from_parts(realization.action(), rho) != *r {
        return Ok(None);
    }
    let h = rho.coalgebra();
    let f = h.field();
    let dh = h.dim();
    // c'_vl: coefficient vector of m_v in ρ'(m_l)
    let c_prime = |v: usize, l: usize| rho.coeffs()[l][v].clone();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut o = vec![f.zero(); dh];
                    for v in 0..n {
                        let (a, b) = (r.x(k, v, j, i), r.x(k, l, j, v));
                        for (e, (p, q)) in c_prime(v, l).iter().zip(c_prime(i, v)).enumerate() {
                            o[e] = &o[e] + &(&(a * p) - &(b * &q));
                        }
                    }
                    if o.iter().any(|s| !s.is_zero()) {
                        return Ok(None);
                    }
                }
            }
        }
    }
    let q = pres.quotient();
    let g = q.coalgebra();
    let images: Vec<Vec<Scalar>> = q.section().iter().map(|&a| c_prime(a / n, a % n)).collect();
    let apply = |x: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); dh];
        for (s, xs) in x.iter().enumerate() {
            if !xs.is_zero() {
                for (e, v) in images[s].iter().enumerate() {
                    out[e] = &out[e] + &(xs * v);
                }
            }
        }
        out
    };
    let colinear = (0..n).all(|l| (0..n).all(|v| apply(&q.project_basis(v * n + l)) == c_prime(v, l)));
    let respects_counit = (0..g.dim()).all(|s| h.counit_of(&images[s]) == g.counit()[s]);
    let respects_delta = (0..g.dim()).all(|s| {
        let lhs = h.delta_vec(&images[s]);
        let mut rhs = vec![f.zero(); dh * dh];
        for (t, u, mu) in g.delta(s) {
            for (a, x) in images[*t].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (b, y) in images[*u].iter().enumerate() {
                    if !y.is_zero() {
                        rhs[a * dh + b] = &rhs[a * dh + b] + &(&(mu * x) * y);
                    }
                }
            }
        }
        lhs == rhs
    });
    Ok(Some(GeneratorMap { images, colinear, respects_delta, respects_counit }))
}
