//! Exhaustive census of D-equation solutions over `F_p` for small `n`.
//!
//! Candidates are the `p^(n⁴)` matrices of `End(M⊗M)`, serialized row-major
//! with entry 0 the most significant digit. The scan evaluates the `n⁶`
//! coordinate equations in `u32` arithmetic. When an equation fails, every
//! candidate sharing the prefix of digits that equation reads fails too, so
//! the scan jumps past that block.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix};
use crate::tensor_ops::{check_d_operator, EndoPair};

/// Candidate budget when nothing else is configured.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "DEQUATION_BUDGET";

/// [`BUDGET_ENV`] if set, otherwise [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> Result<u64> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::usage(format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// `p^(n⁴)`.
pub fn candidate_count(n: usize, p: u32) -> BigUint {
    BigUint::from(p).pow((n as u32).pow(4))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Filter {
    All,
    Bijective,
    Symmetric,
    Qybe,
}

impl Filter {
    pub fn accepts(self, s: &Solution) -> bool {
        match self {
            Filter::All => true,
            Filter::Bijective => s.bijective,
            Filter::Symmetric => s.symmetric,
            Filter::Qybe => s.qybe,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::Bijective => "bijective",
            Filter::Symmetric => "symmetric",
            Filter::Qybe => "qybe",
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Filter::All),
            "bijective" => Ok(Filter::Bijective),
            "symmetric" => Ok(Filter::Symmetric),
            "qybe" => Ok(Filter::Qybe),
            _ => Err(Error::usage(format!("unknown filter {s:?}; expected all, bijective, symmetric or qybe"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub n: usize,
    pub p: u32,
    pub filter: Filter,
    pub orbits: bool,
    pub budget: u64,
    /// 0 lets rayon choose.
    pub workers: usize,
}

impl CensusConfig {
    pub fn new(n: usize, p: u32) -> Self {
        CensusConfig { n, p, filter: Filter::All, orbits: false, budget: DEFAULT_BUDGET, workers: 0 }
    }
}

/// A solution found by the scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Position in the candidate order.
    pub index: u64,
    /// Row-major `n² × n²` entries in `0..p`.
    pub entries: Vec<u32>,
    pub bijective: bool,
    /// `Rτ = τR`.
    pub symmetric: bool,
    pub qybe: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically least conjugate.
    pub representative: Vec<u32>,
    /// Inputs falling in this orbit.
    pub size: usize,
    /// Size of the full conjugation orbit.
    pub orbit_size: usize,
}

impl Orbit {
    /// Whether every conjugate of the representative was among the inputs.
    pub fn is_complete(&self) -> bool {
        self.size == self.orbit_size
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub p: u32,
    pub filter: Filter,
    pub candidates: u64,
    pub solutions: u64,
    pub bijective: u64,
    pub symmetric: u64,
    pub qybe: u64,
    /// Filtered solutions, in candidate order.
    pub members: Vec<Solution>,
    /// Orbits of the filtered solutions, sorted by representative.
    pub orbits: Option<Vec<Orbit>>,
}

impl CensusReport {
    /// Stable line-oriented text.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "census");
        let _ = writeln!(out, "field F {}", self.p);
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "filter {}", self.filter);
        for (k, v) in self.counts() {
            let _ = writeln!(out, "{k} {v}");
        }
        match &self.orbits {
            Some(orbits) => {
                let _ = writeln!(out, "representatives {}", orbits.len());
                for o in orbits {
                    let _ = writeln!(out, "  {} {}", o.size, format_entries(&o.representative, self.n));
                }
            }
            None => {
                let _ = writeln!(out, "members {}", self.members.len());
                for s in &self.members {
                    let _ = writeln!(out, "  {}", format_entries(&s.entries, self.n));
                }
            }
        }
        out
    }

    /// Header counts as key/value pairs.
    pub fn counts(&self) -> Vec<(&'static str, u64)> {
        let mut v = vec![
            ("candidates", self.candidates),
            ("solutions", self.solutions),
            ("bijective", self.bijective),
            ("symmetric", self.symmetric),
            ("qybe", self.qybe),
            ("selected", self.members.len() as u64),
        ];
        if let Some(o) = &self.orbits {
            v.push(("orbits", o.len() as u64));
        }
        v
    }
}

/// Rows separated by `|`, e.g. `1 0 | 0 1` for `n² = 2`.
pub fn format_entries(entries: &[u32], n: usize) -> String {
    let m = n * n;
    entries
        .chunks(m)
        .map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Arithmetic mod a prime below `2^15`.
#[derive(Clone, Copy, Debug)]
struct Zp(u32);

impl Zp {
    fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.0
    }

    fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    fn neg(self, a: u32) -> u32 {
        (self.0 - a) % self.0
    }

    fn inv(self, a: u32) -> u32 {
        let (mut base, mut e, mut acc) = (a, self.0 - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// One coordinate equation `Σ lhs products = Σ rhs products`.
#[derive(Clone, Debug)]
struct Equation {
    lhs: Vec<(usize, usize)>,
    rhs: Vec<(usize, usize)>,
    /// Largest entry index read; the equation is decided by digits `0..=last`.
    last: usize,
}

/// Entry index of `x_uv^ji` in the row-major serialization.
fn entry(n: usize, u: usize, v: usize, j: usize, i: usize) -> usize {
    (i * n + j) * n * n + v * n + u
}

/// The `n⁶` equations `Σ_v x_kv^ji x_lq^vp = Σ_α x_kl^jα x_αq^ip`, sorted
/// so that those decided by the shortest prefix come first.
fn equations(n: usize) -> Vec<Equation> {
    let mut out = Vec::with_capacity(n.pow(6));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for p in 0..n {
                        for q in 0..n {
                            let lhs: Vec<_> = (0..n).map(|v| (entry(n, k, v, j, i), entry(n, l, q, v, p))).collect();
                            let rhs: Vec<_> = (0..n).map(|a| (entry(n, k, l, j, a), entry(n, a, q, i, p))).collect();
                            // identical sides cancel; such an equation always holds
                            let mut ls = lhs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect::<Vec<_>>();
                            let mut rs = rhs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect::<Vec<_>>();
                            ls.sort_unstable();
                            rs.sort_unstable();
                            if ls == rs {
                                continue;
                            }
                            let last = lhs.iter().chain(&rhs).map(|&(a, b)| a.max(b)).max().unwrap();
                            out.push(Equation { lhs, rhs, last });
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|e| {
        let mut touched: Vec<usize> = e.lhs.iter().chain(&e.rhs).flat_map(|&(a, b)| [a, b]).collect();
        touched.sort_unstable();
        touched.dedup();
        (e.last, touched.len())
    });
    out
}

fn holds(eq: &Equation, m: &[u32], p: u32) -> bool {
    let side = |terms: &[(usize, usize)]| terms.iter().map(|&(a, b)| m[a] * m[b]).sum::<u32>() % p;
    side(&eq.lhs) == side(&eq.rhs)
}

/// The first failing equation's `last` digit, or `None` for a solution.
fn first_failure(eqs: &[Equation], m: &[u32], p: u32) -> Option<usize> {
    eqs.iter().find(|e| !holds(e, m, p)).map(|e| e.last)
}

fn digits_of(mut index: u64, p: u32, out: &mut [u32]) {
    for d in out.iter_mut().rev() {
        *d = (index % p as u64) as u32;
        index /= p as u64;
    }
}

/// Determinant test mod `p` by elimination.
fn is_invertible(entries: &[u32], size: usize, zp: Zp) -> bool {
    let mut a = entries.to_vec();
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| a[r * size + col] != 0) else {
            return false;
        };
        if piv != col {
            for c in 0..size {
                a.swap(piv * size + c, col * size + c);
            }
        }
        let inv = zp.inv(a[col * size + col]);
        for r in col + 1..size {
            let factor = zp.mul(a[r * size + col], inv);
            if factor == 0 {
                continue;
            }
            for c in col..size {
                let sub = zp.mul(factor, a[col * size + c]);
                a[r * size + c] = zp.add(a[r * size + c], zp.neg(sub));
            }
        }
    }
    true
}

fn is_symmetric(m: &[u32], n: usize) -> bool {
    let nn = n * n;
    (0..nn).all(|row| {
        (0..nn).all(|col| {
            let (i, j, v, u) = (row / n, row % n, col / n, col % n);
            m[row * nn + col] == m[(j * n + i) * nn + u * n + v]
        })
    })
}

fn mat_mul(a: &[u32], b: &[u32], size: usize, zp: Zp) -> Vec<u32> {
    let mut out = vec![0u32; size * size];
    for r in 0..size {
        for k in 0..size {
            let x = a[r * size + k];
            if x == 0 {
                continue;
            }
            for c in 0..size {
                out[r * size + c] = zp.add(out[r * size + c], zp.mul(x, b[k * size + c]));
            }
        }
    }
    out
}

/// `R^12`, `R^13`, `R^23` on `M⊗M⊗M`, basis index `a n² + b n + c`.
fn lifts(m: &[u32], n: usize) -> [Vec<u32>; 3] {
    let nn = n * n;
    let size = nn * n;
    let mut out = [vec![0u32; size * size], vec![0u32; size * size], vec![0u32; size * size]];
    let r = |a: usize, b: usize, c: usize, d: usize| m[(a * n + b) * nn + c * n + d];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let row = a * nn + b * n + c;
                for x in 0..n {
                    for y in 0..n {
                        out[0][row * size + x * nn + y * n + c] = r(a, b, x, y);
                        out[1][row * size + x * nn + b * n + y] = r(a, c, x, y);
                        out[2][row * size + a * nn + x * n + y] = r(b, c, x, y);
                    }
                }
            }
        }
    }
    out
}

fn is_qybe(m: &[u32], n: usize, zp: Zp) -> bool {
    let size = n * n * n;
    let [r12, r13, r23] = lifts(m, n);
    let lhs = mat_mul(&mat_mul(&r12, &r13, size, zp), &r23, size, zp);
    let rhs = mat_mul(&mat_mul(&r23, &r13, size, zp), &r12, size, zp);
    lhs == rhs
}

fn classify_solution(index: u64, entries: Vec<u32>, n: usize, zp: Zp) -> Solution {
    let nn = n * n;
    Solution {
        index,
        bijective: is_invertible(&entries, nn, zp),
        symmetric: is_symmetric(&entries, n),
        qybe: is_qybe(&entries, n, zp),
        entries,
    }
}

fn scan_range(eqs: &[Equation], n: usize, zp: Zp, lo: u64, hi: u64) -> Vec<Solution> {
    let len = n.pow(4);
    let p = zp.0 as u64;
    // block[t] = p^(len-1-t): candidates sharing digits 0..=t
    let mut block = vec![1u64; len];
    for t in (0..len.saturating_sub(1)).rev() {
        block[t] = block[t + 1] * p;
    }
    let mut digits = vec![0u32; len];
    let mut found = Vec::new();
    let mut index = lo;
    while index < hi {
        digits_of(index, zp.0, &mut digits);
        match first_failure(eqs, &digits, zp.0) {
            None => {
                found.push(classify_solution(index, digits.clone(), n, zp));
                index += 1;
            }
            Some(t) => index = (index / block[t] + 1) * block[t],
        }
    }
    found
}

fn check_prime(p: u32) -> Result<()> {
    if p >= 1 << 15 {
        return Err(Error::usage(format!("the census supports primes below 32768, got {p}")));
    }
    Field::prime(p as u64).map(|_| ())
}

/// Every solution over `F_p` in candidate order, ignoring any budget.
///
/// The candidate space is split into contiguous ranges scanned in parallel;
/// results are concatenated in range order, so the output does not depend
/// on `workers`.
pub fn scan(n: usize, p: u32, workers: usize) -> Result<Vec<Solution>> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::usage("n must be at least 1"));
    }
    let total = u64::try_from(candidate_count(n, p))
        .map_err(|_| Error::usage(format!("p^(n^4) does not fit in 64 bits for n={n}, p={p}")))?;
    let eqs = equations(n);
    let zp = Zp(p);
    let chunks = total.div_ceil(4096).clamp(1, 1024);
    let step = total.div_ceil(chunks);
    let run = || -> Vec<Solution> {
        (0..chunks)
            .into_par_iter()
            .map(|c| scan_range(&eqs, n, zp, c * step, ((c + 1) * step).min(total)))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    if workers == 0 {
        Ok(run())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::usage(format!("cannot start {workers} workers: {e}")))?;
        Ok(pool.install(run))
    }
}

/// The serialized candidate as an operator over `F_p`.
pub fn to_endo_pair(entries: &[u32], n: usize, p: u32) -> Result<EndoPair> {
    let f = Field::prime(p as u64)?;
    let nn = n * n;
    if entries.len() != nn * nn {
        return Err(Error::usage(format!("expected {} entries, got {}", nn * nn, entries.len())));
    }
    EndoPair::from_matrix(n, Matrix::from_fn(&f, nn, nn, |r, c| f.from_i64(entries[r * nn + c] as i64)))
}

/// `(u, u⁻¹)` for every `u ∈ GL_n(F_p)`, in lexicographic order of `u`.
pub fn general_linear(n: usize, p: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let zp = Zp(p);
    let size = n * n;
    let total = (p as u64).pow(size as u32);
    let mut out = Vec::new();
    let mut u = vec![0u32; size];
    for idx in 0..total {
        digits_of(idx, p, &mut u);
        if let Some(inv) = invert(&u, n, zp) {
            out.push((u.clone(), inv));
        }
    }
    out
}

fn invert(a: &[u32], size: usize, zp: Zp) -> Option<Vec<u32>> {
    let w = 2 * size;
    let mut m = vec![0u32; size * w];
    for r in 0..size {
        m[r * w..r * w + size].copy_from_slice(&a[r * size..(r + 1) * size]);
        m[r * w + size + r] = 1;
    }
    for col in 0..size {
        let piv = (col..size).find(|&r| m[r * w + col] != 0)?;
        for c in 0..w {
            m.swap(piv * w + c, col * w + c);
        }
        let inv = zp.inv(m[col * w + col]);
        for c in 0..w {
            m[col * w + c] = zp.mul(m[col * w + c], inv);
        }
        for r in 0..size {
            let factor = m[r * w + col];
            if r == col || factor == 0 {
                continue;
            }
            for c in 0..w {
                let sub = zp.mul(factor, m[col * w + c]);
                m[r * w + c] = zp.add(m[r * w + c], zp.neg(sub));
            }
        }
    }
    Some((0..size).flat_map(|r| m[r * w + size..(r + 1) * w].to_vec()).collect())
}

fn kron(a: &[u32], n: usize, zp: Zp) -> Vec<u32> {
    let nn = n * n;
    let mut out = vec![0u32; nn * nn];
    for r in 0..nn {
        for c in 0..nn {
            out[r * nn + c] = zp.mul(a[(r / n) * n + c / n], a[(r % n) * n + c % n]);
        }
    }
    out
}

/// `(u⊗u) R (u⊗u)⁻¹` on serialized entries.
pub fn conjugate_entries(entries: &[u32], n: usize, p: u32, u: &[u32], u_inv: &[u32]) -> Vec<u32> {
    let zp = Zp(p);
    let nn = n * n;
    mat_mul(&mat_mul(&kron(u, n, zp), entries, nn, zp), &kron(u_inv, n, zp), nn, zp)
}

/// Partition of `solutions` under `GL_n(F_p)` conjugation, sorted by
/// representative. Inputs are grouped by their least conjugate.
pub fn orbit_reduce(solutions: &[Vec<u32>], n: usize, p: u32) -> Vec<Orbit> {
    let group = general_linear(n, p);
    let canonical: Vec<Vec<u32>> = solutions
        .par_iter()
        .map(|s| group.iter().map(|(u, ui)| conjugate_entries(s, n, p, u, ui)).min().expect("GL_n is nonempty"))
        .collect();
    let mut groups: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for c in canonical {
        *groups.entry(c).or_default() += 1;
    }
    groups
        .into_iter()
        .map(|(representative, size)| {
            let mut orbit: Vec<Vec<u32>> =
                group.iter().map(|(u, ui)| conjugate_entries(&representative, n, p, u, ui)).collect();
            orbit.sort();
            orbit.dedup();
            Orbit { representative, size, orbit_size: orbit.len() }
        })
        .collect()
}

/// Runs the census, refusing when `p^(n⁴)` exceeds the budget.
///
/// One solution in a hundred (by position) is re-verified with the exact
/// operator-composition check.
pub fn enumerate_solutions(config: &CensusConfig) -> Result<CensusReport> {
    let CensusConfig { n, p, filter, orbits, budget, workers } = *config;
    check_prime(p)?;
    let count = candidate_count(n, p);
    if count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { candidates: count.to_string(), budget });
    }
    let candidates = u64::try_from(&count).expect("bounded by the budget");
    let all = scan(n, p, workers)?;
    for s in all.iter().step_by(100) {
        if !check_d_operator(&to_endo_pair(&s.entries, n, p)?) {
            return Err(Error::Structure(format!("candidate {} failed the operator re-check", s.index)));
        }
    }
    let tally = |pred: fn(&Solution) -> bool| all.iter().filter(|s| pred(s)).count() as u64;
    let (bijective, symmetric, qybe) = (tally(|s| s.bijective), tally(|s| s.symmetric), tally(|s| s.qybe));
    let members: Vec<Solution> = all.iter().filter(|s| filter.accepts(s)).cloned().collect();
    let orbits = if orbits {
        let entries: Vec<Vec<u32>> = members.iter().map(|s| s.entries.clone()).collect();
        let reduced = orbit_reduce(&entries, n, p);
        if let Some(o) = reduced.iter().find(|o| !o.is_complete()) {
            return Err(Error::Structure(format!(
                "selected solutions are not closed under conjugation at {}",
                format_entries(&o.representative, n)
            )));
        }
        Some(reduced)
    } else {
        None
    };
    Ok(CensusReport {
        n,
        p,
        filter,
        candidates,
        solutions: all.len() as u64,
        bijective,
        symmetric,
        qybe,
        members,
        orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_everything_solves() {
        let sols = scan(1, 5, 1).unwrap();
        assert_eq!(sols.len(), 5);
        assert_eq!(sols.iter().filter(|s| s.bijective).count(), 4);
    }

    #[test]
    fn equation_count_and_order() {
        let eqs = equations(2);
        assert!(eqs.len() <= 64);
        assert!(eqs.windows(2).all(|w| w[0].last <= w[1].last));
    }

    #[test]
    fn gl2_f2_has_six_elements() {
        let g = general_linear(2, 2);
        assert_eq!(g.len(), 6);
        for (u, ui) in &g {
            assert_eq!(mat_mul(u, ui, 2, Zp(2)), vec![1, 0, 0, 1]);
        }
    }

    #[test]
    fn budget_refusal_reports_estimate() {
        let mut cfg = CensusConfig::new(2, 3);
        cfg.budget = 1000;
        match enumerate_solutions(&cfg) {
            Err(Error::BudgetExceeded { candidates, budget }) => {
                assert_eq!(candidates, "43046721");
                assert_eq!(budget, 1000);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn filter_parses() {
        assert_eq!("qybe".parse::<Filter>().unwrap(), Filter::Qybe);
        assert!("odd".parse::<Filter>().is_err());
    }
}
