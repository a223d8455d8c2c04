use dequation::coalg::Coalgebra;
use dequation::dimodule::{dimodule_from_grading, group_bialgebra, r_from_parts, trivial_action, Host, LongDimodule};
use dequation::exactmath::{Field, Matrix, Scalar};
use dequation::fixtures::{self, eq100, eq100_symbolic, projection, r_q, s3_graded, s3_graded_module, yb_operator};
use dequation::frt::*;
use dequation::tensor_ops::{check_d, EndoPair};
use dequation::Error;
use proptest::prelude::*;

fn q() -> Field {
    Field::Rationals
}

fn generator_table(p: &FrtPresentation) -> Vec<String> {
    let g = p.generators();
    (0..g.dim())
        .map(|s| format!("{}: {}; {}", g.label(s), g.format_delta(s), g.counit()[s].display(g.field())))
        .collect()
}

#[test]
fn zero_operator_has_no_relations() {
    let r = EndoPair::zero(&q(), 2);
    assert!(obstructions(&r).vectors().iter().all(|o| o.iter().all(Scalar::is_zero)));
    let p = d_bialgebra(&r).unwrap();
    assert_eq!(p.coideal().dim(), 0);
    let c = Coalgebra::comatrix(&q(), 2);
    let g = p.generators();
    assert_eq!(g.labels(), ["~c11", "~c12", "~c21", "~c22"]);
    assert!((0..4).all(|a| g.delta(a) == c.delta(a) && g.counit()[a] == c.counit()[a]));
    assert!(annihilation_check(&r));
    assert!(p.round_trip());
}

#[test]
fn kronecker_family_presentation() {
    let one = q().one();
    for r in [eq100(&q(), &one, &one, &one), eq100_symbolic(), eq100(&q(), &q().from_i64(2), &q().zero(), &one)] {
        let p = d_bialgebra(&r).unwrap();
        assert_eq!(p.relation_strings(), ["c21 = 0", "c22 - c11 = 0"]);
        assert_eq!(generator_table(&p), ["~c11: ~c11 ⊗ ~c11; 1", "~c12: ~c11 ⊗ ~c12 + ~c12 ⊗ ~c11; 0"]);
        assert!(p.round_trip());
    }
}

#[test]
fn r_q_presentation() {
    let p = d_bialgebra(&r_q(&q(), &q().from_i64(3))).unwrap();
    assert_eq!(p.relation_strings(), ["c12 - 3*c11 + 3*c22 = 0", "c21 = 0"]);
    assert_eq!(generator_table(&p), ["~c11: ~c11 ⊗ ~c11; 1", "~c22: ~c22 ⊗ ~c22; 1"]);
    let qf = Field::functions(&["q"]).unwrap();
    let p = d_bialgebra(&r_q(&qf, &qf.var("q").unwrap())).unwrap();
    assert_eq!(p.relation_strings(), ["c12 - q*c11 + q*c22 = 0", "c21 = 0"]);
}

#[test]
fn projection_presentation() {
    let p = d_bialgebra(&projection(&q(), &q().from_i64(2), &q().from_i64(3))).unwrap();
    assert_eq!(p.relation_strings(), ["c12 = 0", "c21 = 0"]);
    assert_eq!(generator_table(&p), ["~c11: ~c11 ⊗ ~c11; 1", "~c22: ~c22 ⊗ ~c22; 1"]);
}

#[test]
fn non_solutions_are_refused_with_the_first_failure() {
    let r = yb_operator(&q(), &q().from_i64(2));
    match d_bialgebra(&r) {
        Err(Error::NotASolution(idx)) => assert!(idx.iter().all(|&i| (1..=2).contains(&i))),
        other => panic!("expected NotASolution, got {other:?}"),
    }
}

/// `Σ_v x_kv^ji c_vl − Σ_α x_kl^jα c_iα`, straight from the definition.
fn obstruction_oracle(r: &EndoPair, i: usize, j: usize, k: usize, l: usize) -> Vec<Scalar> {
    let n = r.n();
    let f = r.field();
    let mut o = vec![f.zero(); n * n];
    for v in 0..n {
        o[v * n + l] = &o[v * n + l] + r.x(k, v, j, i);
        o[i * n + v] = &o[i * n + v] - r.x(k, l, j, v);
    }
    o
}

#[test]
fn defect_pairing_on_the_unit_kronecker_example() {
    let one = q().one();
    let r = eq100(&q(), &one, &one, &one);
    let got = defect_pairing(&r, 0, 0, 0);
    let mut expected = Vec::new();
    for i in 0..2 {
        expected.extend(obstruction_oracle(&r, i, 0, 0, 0));
    }
    assert_eq!(got, expected);
    assert!(defect_pairing(&EndoPair::zero(&q(), 2), 1, 0, 1).iter().all(Scalar::is_zero));
}

#[test]
fn d_identity_is_nonzero_for_the_yb_operator() {
    let r = yb_operator(&q(), &q().from_i64(2));
    assert!(!annihilation_check(&r));
    let mut nonzero = false;
    for a in 0..2 {
        let w: Vec<Scalar> = (0..2).map(|b| if a == b { q().one() } else { q().zero() }).collect();
        for k in 0..2 {
            for j in 0..2 {
                nonzero |= d_identity(&r, &w, k, j).iter().any(|s| !s.is_zero());
            }
        }
    }
    assert!(nonzero);
    let one = q().one();
    let sol = eq100(&q(), &one, &one, &one);
    let w = vec![q().from_i64(3), q().from_i64(-1)];
    assert!(d_identity(&sol, &w, 1, 0).iter().all(Scalar::is_zero));
    assert!(d_identity(&EndoPair::zero(&q(), 2), &w, 0, 1).iter().all(Scalar::is_zero));
}

#[test]
fn generator_action_formula() {
    // c_ju · m_v = Σ_i x_uv^ji m_i
    let r = fixtures::by_name("s3-graded").unwrap().r;
    let n = r.n();
    let action = generator_action(&r);
    for j in 0..n {
        for u in 0..n {
            let a = &action[j * n + u];
            for v in 0..n {
                for i in 0..n {
                    assert_eq!(a.get(i, v), r.x(u, v, j, i));
                }
            }
        }
    }
}

#[test]
fn canonical_dimodule_is_its_own_universal_target() {
    for fx in fixtures::all().into_iter().filter(|fx| check_d(&fx.r)) {
        let p = d_bialgebra(&fx.r).unwrap();
        let d = p.canonical_dimodule();
        let map = universal_map(&p, &d).unwrap().expect("canonical realization");
        assert!(map.is_verified(), "{}", fx.name);
        let k = p.generators().dim();
        for (s, image) in map.images.iter().enumerate() {
            let f = fx.r.field();
            let unit: Vec<Scalar> = (0..k).map(|t| if s == t { f.one() } else { f.zero() }).collect();
            assert_eq!(image, &unit, "{}", fx.name);
        }
    }
}

#[test]
fn universal_map_into_the_group_bialgebra() {
    let module = s3_graded_module(&q());
    let realization = dimodule_from_grading(&module).unwrap();
    let r = s3_graded(&q()).unwrap();
    let p = d_bialgebra(&r).unwrap();
    let map = universal_map(&p, &realization).unwrap().expect("realization reproduces R");
    assert!(map.is_verified());
    let order = module.group().order();
    let n = r.n();
    // c̄_vl ↦ δ_vl · grade(m_l)
    for (s, &a) in p.quotient().section().iter().enumerate() {
        let (v, l) = (a / n, a % n);
        let expected: Vec<Scalar> =
            (0..order).map(|g| if v == l && g == module.grades()[l] { q().one() } else { q().zero() }).collect();
        assert_eq!(map.images[s], expected);
    }
}

#[test]
fn universal_map_rejects_wrong_realizations() {
    let module = s3_graded_module(&q());
    let h = group_bialgebra(&q(), module.group());
    let graded = dimodule_from_grading(&module).unwrap();
    let wrong = LongDimodule::new(Host::Bialgebra(h.clone()), trivial_action(&h, 4), graded.comodule().clone()).unwrap();
    let p = d_bialgebra(&s3_graded(&q()).unwrap()).unwrap();
    assert_eq!(universal_map(&p, &wrong).unwrap(), None);
    let small = d_bialgebra(&EndoPair::identity(&q(), 2)).unwrap();
    assert!(matches!(universal_map(&small, &graded), Err(Error::Usage(_))));
}

#[test]
fn relation_pivots_keep_the_diagonal_head() {
    assert_eq!(relation_pivot_order(2), [1, 2, 3, 0]);
}

fn f5_operator(n: usize, entries: &[i64]) -> EndoPair {
    let f = Field::prime(5).unwrap();
    let nn = n * n;
    EndoPair::from_matrix(n, Matrix::from_fn(&f, nn, nn, |r, c| f.from_i64(entries[r * nn + c]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn identities_hold_for_random_operators_n2(entries in prop::collection::vec(0i64..5, 16)) {
        let r = f5_operator(2, &entries);
        prop_assert!(prima_holds(&r));
        prop_assert!(adoua_holds(&r));
        prop_assert_eq!(annihilation_check(&r), check_d(&r));
    }

    #[test]
    fn identities_hold_for_random_operators_n3(entries in prop::collection::vec(0i64..5, 81)) {
        let r = f5_operator(3, &entries);
        prop_assert!(prima_holds(&r));
        prop_assert!(adoua_holds(&r));
    }

    #[test]
    fn obstructions_match_the_definition_and_have_zero_counit(entries in prop::collection::vec(0i64..5, 16)) {
        let r = f5_operator(2, &entries);
        let c = Coalgebra::comatrix(r.field(), 2);
        for i in 0..2 { for j in 0..2 { for k in 0..2 { for l in 0..2 {
            let o = obstruction(&r, i, j, k, l);
            prop_assert_eq!(&o, &obstruction_oracle(&r, i, j, k, l));
            prop_assert!(c.counit_of(&o).is_zero());
            prop_assert_eq!(defect_pairing(&r, j, k, l).len(), 2 * 4);
        }}}}
    }

    #[test]
    fn canonical_round_trip_for_product_solutions(a in prop::collection::vec(0i64..5, 4), c in prop::collection::vec(0i64..5, 2)) {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_fn(&f, 2, 2, |r, k| f.from_i64(a[r * 2 + k]));
        let g = &Matrix::identity(&f, 2).scale(&f.from_i64(c[0])) + &m.scale(&f.from_i64(c[1]));
        let r = dequation::tensor_ops::product_solution(&m, &g).unwrap();
        let p = d_bialgebra(&r).unwrap();
        let d = p.canonical_dimodule();
        prop_assert_eq!(r_from_parts(d.action(), d.comodule()), r);
    }
}
