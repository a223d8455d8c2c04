//! D-maps: bilinear forms `σ: C ⊗ C/I → k` satisfying
//! `Σ σ(c₍₁₎⊗d̄) c̄₍₂₎ = Σ σ(c₍₂₎⊗d̄) c̄₍₁₎` in `C/I`.
//!
//! The left leg stays on `C`; only the right leg is taken modulo `I`.

use crate::coalg::{convolve, BilinearForm, Coalgebra, Coideal, Comodule, QuotientCoalgebra};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::frt::{d_bialgebra, obstructions, FrtPresentation, ObstructionSet};
use crate::tensor_ops::{first_d_violation, EndoPair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DMap {
    quotient: QuotientCoalgebra,
    sigma: BilinearForm,
}

impl DMap {
    /// `sigma` must be a form on `C ⊗ C/I` for the given quotient.
    pub fn new(quotient: QuotientCoalgebra, sigma: BilinearForm) -> Result<Self> {
        if sigma.left() != quotient.parent() || sigma.right() != quotient.coalgebra() {
            return Err(Error::usage("form is not defined on C ⊗ C/I for this quotient"));
        }
        Ok(DMap { quotient, sigma })
    }

    /// `σ` on `C ⊗ C/0`, for a strongly D-map.
    pub fn strong(c: &Coalgebra, table: impl FnMut(usize, usize) -> Scalar) -> Self {
        let quotient = QuotientCoalgebra::new(&Coideal::zero(c));
        let sigma = BilinearForm::from_fn(c, quotient.coalgebra(), table);
        DMap { quotient, sigma }
    }

    /// `ε ⊗ ε̄`.
    pub fn unit(quotient: QuotientCoalgebra) -> Self {
        let sigma = BilinearForm::unit(quotient.parent(), quotient.coalgebra());
        DMap { quotient, sigma }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        self.quotient.parent()
    }

    pub fn quotient(&self) -> &QuotientCoalgebra {
        &self.quotient
    }

    pub fn sigma(&self) -> &BilinearForm {
        &self.sigma
    }

    pub fn field(&self) -> &Field {
        self.coalgebra().field()
    }

    /// `I = 0`.
    pub fn is_strong(&self) -> bool {
        self.quotient.coideal().dim() == 0
    }

    /// `Σ σ(e_a₍₁₎⊗ē_s) π(e_a₍₂₎) − Σ σ(e_a₍₂₎⊗ē_s) π(e_a₍₁₎)` in quotient
    /// coordinates.
    pub fn deficit(&self, a: usize, s: usize) -> Vec<Scalar> {
        let f = self.field();
        let mut out = vec![f.zero(); self.quotient.dim()];
        for (a1, a2, mu) in self.coalgebra().delta(a) {
            let left = self.sigma.value(*a1, s);
            let right = self.sigma.value(*a2, s);
            if !left.is_zero() {
                let w = mu * left;
                for (o, p) in out.iter_mut().zip(self.quotient.project_basis(*a2)) {
                    *o = &*o + &(&w * &p);
                }
            }
            if !right.is_zero() {
                let w = mu * right;
                for (o, p) in out.iter_mut().zip(self.quotient.project_basis(*a1)) {
                    *o = &*o - &(&w * &p);
                }
            }
        }
        out
    }

    /// First `(a, s)` where the D-map condition fails.
    pub fn first_violation(&self) -> Option<(usize, usize)> {
        let (dc, dq) = (self.coalgebra().dim(), self.quotient.dim());
        (0..dc)
            .flat_map(|a| (0..dq).map(move |s| (a, s)))
            .find(|&(a, s)| self.deficit(a, s).iter().any(|x| !x.is_zero()))
    }

    pub fn is_dmap(&self) -> bool {
        self.first_violation().is_none()
    }
}

/// `σ₀(c_iv ⊗ c_ju) = x_uv^ji` on the full comatrix coalgebra, comatrix
/// index `i*n + v`.
pub fn sigma0(r: &EndoPair, a: usize, b: usize) -> &Scalar {
    let n = r.n();
    let (i, v) = (a / n, a % n);
    let (j, u) = (b / n, b % n);
    r.x(u, v, j, i)
}

/// `Σ σ₀(c₍₁₎⊗c_pq) c₍₂₎ − Σ σ₀(c₍₂₎⊗c_pq) c₍₁₎` for `c = c_ij`, computed in
/// the comatrix coalgebra before any quotient is taken.
pub fn sigma0_deficit(r: &EndoPair, i: usize, j: usize, p: usize, q: usize) -> Vec<Scalar> {
    let n = r.n();
    let f = r.field();
    let mut out = vec![f.zero(); n * n];
    let d = p * n + q;
    for v in 0..n {
        out[v * n + j] = &out[v * n + j] + sigma0(r, i * n + v, d);
        out[i * n + v] = &out[i * n + v] - sigma0(r, v * n + j, d);
    }
    out
}

fn pairing(r: &EndoPair, left: &[Scalar], b: usize, flip: bool) -> Scalar {
    let mut acc = r.field().zero();
    for (a, s) in left.iter().enumerate() {
        if !s.is_zero() {
            let value = if flip { sigma0(r, b, a) } else { sigma0(r, a, b) };
            acc = &acc + &(s * value);
        }
    }
    acc
}

/// First 0-based `(i,j,k,l)` such that `σ₀` does not vanish on
/// `C ⊗ o(i,j,k,l)` (or `o(i,j,k,l) ⊗ C` when `left` is set).
fn first_nonvanishing(r: &EndoPair, obs: &ObstructionSet, left: bool) -> Option<[usize; 4]> {
    let n = r.n();
    for (idx, o) in obs.vectors().iter().enumerate() {
        if (0..n * n).any(|b| !pairing(r, o, b, !left).is_zero()) {
            return Some([idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n]);
        }
    }
    None
}

fn not_a_solution(r: &EndoPair) -> Result<()> {
    match first_d_violation(r) {
        Some(idx) => Err(Error::NotASolution(idx.map(|x| x + 1))),
        None => Ok(()),
    }
}

/// The unique D-map on `C ⊗ C/I(R)` with `R = R_σ` on the standard comodule.
pub fn sigma_from_r(r: &EndoPair) -> Result<DMap> {
    not_a_solution(r)?;
    let pres = d_bialgebra(r)?;
    sigma_from_presentation(&pres, |a, b| sigma0(r, a, b).clone())
}

fn sigma_from_presentation(pres: &FrtPresentation, mut values: impl FnMut(usize, usize) -> Scalar) -> Result<DMap> {
    let r = pres.r();
    let n = r.n();
    // σ₀ must kill C ⊗ I(R); the values table is checked on every obstruction
    for (idx, o) in pres.obstructions().vectors().iter().enumerate() {
        for a in 0..n * n {
            let mut acc = r.field().zero();
            for (b, s) in o.iter().enumerate() {
                if !s.is_zero() {
                    acc = &acc + &(s * &values(a, b));
                }
            }
            if !acc.is_zero() {
                let at = [idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n];
                return Err(Error::NotWellDefined(at.map(|x| x + 1)));
            }
        }
    }
    let quotient = pres.quotient().clone();
    let section = quotient.section().to_vec();
    let sigma = BilinearForm::from_fn(quotient.parent(), quotient.coalgebra(), |a, s| values(a, section[s]));
    DMap::new(quotient, sigma)
}

/// `R_σ(m ⊗ m') = Σ σ(m₍₁₎ ⊗ m̄'₍₁₎) m₍₀₎ ⊗ m'₍₀₎` for a comodule over `C`.
pub fn r_sigma(comodule: &Comodule, dm: &DMap) -> Result<EndoPair> {
    if comodule.coalgebra() != dm.coalgebra() {
        return Err(Error::usage("comodule is not over the D-map's coalgebra"));
    }
    let n = comodule.dim();
    let f = dm.field();
    let dc = dm.coalgebra().dim();
    // table[a][b] = σ(e_a, π(e_b))
    let projected: Vec<Vec<Scalar>> = (0..dc).map(|b| dm.quotient().project_basis(b)).collect();
    let table: Vec<Vec<Scalar>> = (0..dc)
        .map(|a| {
            (0..dc)
                .map(|b| {
                    let mut acc = f.zero();
                    for (s, p) in projected[b].iter().enumerate() {
                        if !p.is_zero() {
                            acc = &acc + &(p * dm.sigma().value(a, s));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let k = comodule.coeffs();
    Ok(EndoPair::from_coefficients(f, n, |u, v, j, i| {
        let mut acc = f.zero();
        for (a, ka) in k[v][i].iter().enumerate() {
            if ka.is_zero() {
                continue;
            }
            for (b, kb) in k[u][j].iter().enumerate() {
                if !kb.is_zero() && !table[a][b].is_zero() {
                    acc = &acc + &(&(ka * kb) * &table[a][b]);
                }
            }
        }
        acc
    }))
}

/// First 1-based `(u,v,j,i)` with `x_uv^ji ≠ x_vu^ij`.
pub fn first_asymmetry(r: &EndoPair) -> Option<[usize; 4]> {
    let n = r.n();
    for u in 0..n {
        for v in 0..n {
            for j in 0..n {
                for i in 0..n {
                    if r.x(u, v, j, i) != r.x(v, u, i, j) {
                        return Some([u + 1, v + 1, j + 1, i + 1]);
                    }
                }
            }
        }
    }
    None
}

/// A strongly D-map on `C(R) = C/I(R)` together with `M` as a
/// `C(R)`-comodule.
#[derive(Clone, Debug)]
pub struct StrongDMap {
    pub presentation: FrtPresentation,
    pub dmap: DMap,
    pub comodule: Comodule,
}

impl StrongDMap {
    /// `C(R)`.
    pub fn coalgebra(&self) -> &Coalgebra {
        self.presentation.generators()
    }

    pub fn regenerate(&self) -> Result<EndoPair> {
        r_sigma(&self.comodule, &self.dmap)
    }
}

/// For a D-solution commuting with the flip, `σ₀` factors through
/// `C(R) ⊗ C(R)`.
pub fn strong_dmap_from_symmetric(r: &EndoPair) -> Result<StrongDMap> {
    not_a_solution(r)?;
    if let Some(at) = first_asymmetry(r) {
        return Err(Error::NotSymmetric(at));
    }
    let pres = d_bialgebra(r)?;
    for left in [false, true] {
        if let Some(at) = first_nonvanishing(r, pres.obstructions(), left) {
            return Err(Error::NotWellDefined(at.map(|x| x + 1)));
        }
    }
    let section = pres.quotient().section().to_vec();
    let dmap = DMap::strong(pres.generators(), |s, t| sigma0(r, section[s], section[t]).clone());
    let n = r.n();
    let coeffs = (0..n)
        .map(|l| (0..n).map(|v| pres.quotient().project_basis(v * n + l)).collect())
        .collect();
    let comodule = Comodule::new(pres.generators(), n, coeffs)?;
    Ok(StrongDMap { presentation: pres, dmap, comodule })
}

/// `σ` together with its convolution inverse `σ′`.
#[derive(Clone, Debug)]
pub struct InvertedSigma {
    pub sigma: DMap,
    pub inverse: BilinearForm,
}

/// `σ′₀(c_iv ⊗ c_ju) = y_uv^ji` from `R⁻¹`, passed to `C ⊗ C/I(R)` and
/// checked to be a two-sided convolution inverse of `σ`.
pub fn convolution_inverse_of_sigma(r: &EndoPair) -> Result<InvertedSigma> {
    not_a_solution(r)?;
    let y = r.invert().ok_or_else(|| Error::Singular("R is not invertible".into()))?;
    let pres = d_bialgebra(r)?;
    let sigma = sigma_from_presentation(&pres, |a, b| sigma0(r, a, b).clone())?;
    let inverse = sigma_from_presentation(&pres, |a, b| sigma0(&y, a, b).clone())?.sigma;
    let unit = BilinearForm::unit(sigma.sigma().left(), sigma.sigma().right());
    if convolve(sigma.sigma(), &inverse)? != unit || convolve(&inverse, sigma.sigma())? != unit {
        return Err(Error::Structure("σ′ is not a two-sided convolution inverse of σ".into()));
    }
    Ok(InvertedSigma { sigma, inverse })
}

/// Obstructions of `R` projected to `C/I(R)`; all zero for a D-solution.
pub fn projected_obstruction(q: &QuotientCoalgebra, r: &EndoPair, i: usize, j: usize, k: usize, l: usize) -> Vec<Scalar> {
    q.project(obstructions(r).get(i, j, k, l))
}
