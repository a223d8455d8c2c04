//! Seeded random consistency checks over F_5 with n = 2.

use dequation::dmap::{r_sigma, sigma_from_r};
use dequation::exactmath::{Field, Matrix};
use dequation::frt::{adoua_holds, annihilation_check, d_bialgebra, prima_holds, standard_comodule};
use dequation::tensor_ops::{check_d, check_equivalent_forms, product_solution, EndoPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Outcome;

const P: u64 = 5;
const N: usize = 2;

fn random_matrix(rng: &mut ChaCha8Rng, f: &Field, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(f, rows, cols, |_, _| f.from_i64(rng.gen_range(0..P as i64)))
}

/// Half of the pairs commute by construction (`g` a polynomial in `f`).
fn random_pair(rng: &mut ChaCha8Rng, f: &Field) -> (Matrix, Matrix) {
    let a = random_matrix(rng, f, N, N);
    let b = if rng.gen_bool(0.5) {
        let c: Vec<_> = (0..2).map(|_| f.from_i64(rng.gen_range(0..P as i64))).collect();
        &Matrix::identity(f, N).scale(&c[0]) + &a.scale(&c[1])
    } else {
        random_matrix(rng, f, N, N)
    };
    (a, b)
}

struct Tally {
    name: &'static str,
    passed: usize,
    total: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, passed: 0, total: 0 }
    }

    fn record(&mut self, ok: bool) {
        self.total += 1;
        self.passed += usize::from(ok);
    }
}

pub fn run(seed: u64, cases: usize) -> Outcome {
    let f = Field::prime(P).expect("5 is prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut product_law = Tally::new("product law");
    let mut identities = Tally::new("prima and adoua");
    let mut annihilation = Tally::new("annihilation");
    let mut forms = Tally::new("equivalent forms");
    let mut round_trip = Tally::new("round trip");
    for _ in 0..cases {
        let (a, b) = random_pair(&mut rng, &f);
        let r = product_solution(&a, &b).expect("square factors");
        product_law.record(check_d(&r) == (&a * &b == &b * &a));

        let random = EndoPair::from_matrix(N, random_matrix(&mut rng, &f, N * N, N * N)).expect("shape");
        for op in [&r, &random] {
            identities.record(prima_holds(op) && adoua_holds(op));
            annihilation.record(annihilation_check(op) == check_d(op));
            forms.record(check_equivalent_forms(op).all_agree());
        }
        if check_d(&r) {
            let ok = d_bialgebra(&r).is_ok_and(|p| p.round_trip())
                && sigma_from_r(&r)
                    .and_then(|dm| r_sigma(&standard_comodule(&f, N), &dm))
                    .is_ok_and(|back| back == r);
            round_trip.record(ok);
        }
    }
    let mut out = Outcome::new();
    out.fact("seed", seed);
    out.fact("field", f.header());
    let mut failed = false;
    for t in [product_law, identities, annihilation, forms, round_trip] {
        out.line(format!("{}: {}/{}", t.name, t.passed, t.total));
        out.key(&t.name.replace(' ', "_"), format!("{}/{}", t.passed, t.total));
        failed |= t.passed != t.total;
    }
    out.fact("result", if failed { "FAIL" } else { "ok" });
    out.negative = failed;
    out
}
