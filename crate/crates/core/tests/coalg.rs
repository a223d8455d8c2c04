use dequation::coalg::*;
use dequation::exactmath::{Field, Matrix, Scalar, Subspace};
use dequation::frt::{obstructions, standard_comodule};
use dequation::tensor_ops::EndoPair;
use proptest::prelude::*;

fn vec_of(f: &Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| f.from_i64(x)).collect()
}

/// Independent coassociativity oracle: compare `(Δ⊗I)Δ` and `(I⊗Δ)Δ` on
/// every basis vector using only the structure constants.
fn coassociative_by_expansion(c: &Coalgebra) -> bool {
    let f = c.field();
    let d = c.dim();
    (0..d).all(|a| {
        let mut left = vec![f.zero(); d * d * d];
        let mut right = vec![f.zero(); d * d * d];
        for (b, e, mu) in c.delta(a) {
            for (x, y, nu) in c.delta(*b) {
                let k = (x * d + y) * d + e;
                left[k] = &left[k] + &(mu * nu);
            }
            for (x, y, nu) in c.delta(*e) {
                let k = (b * d + x) * d + y;
                right[k] = &right[k] + &(mu * nu);
            }
        }
        left == right
    })
}

#[test]
fn comatrix_examples() {
    let q = Field::Rationals;
    let c1 = Coalgebra::comatrix(&q, 1);
    assert_eq!(c1.dim(), 1);
    assert_eq!(c1.format_delta(0), "c11 ⊗ c11");
    let c2 = Coalgebra::comatrix(&q, 2);
    assert_eq!(c2.dim(), 4);
    assert_eq!(c2.labels(), ["c11", "c12", "c21", "c22"]);
    assert_eq!(c2.format_delta(1), "c11 ⊗ c12 + c12 ⊗ c22");
    assert_eq!(c2.counit(), vec_of(&q, &[1, 0, 0, 1]).as_slice());
    for n in 1..=3 {
        let c = Coalgebra::comatrix(&q, n);
        assert!(coassociative_by_expansion(&c));
        assert!(c.is_coassociative() && c.satisfies_counit());
    }
}

#[test]
fn grouplike_examples() {
    let q = Field::Rationals;
    let k = Coalgebra::grouplike(&q, vec!["x".into()]).unwrap();
    assert_eq!(k.dim(), 1);
    let g = Coalgebra::grouplike(&q, vec!["x".into(), "y".into(), "z".into()]).unwrap();
    assert!(coassociative_by_expansion(&g));
    for a in 0..3 {
        assert_eq!(g.delta(a), [(a, a, q.one())].as_slice());
        assert!(g.counit()[a].is_one());
    }
    assert!(Coalgebra::grouplike(&q, vec![]).is_err());
}

#[test]
fn grouplike_decomposition_is_a_comodule() {
    // M = M_x ⊕ M_y ⊕ M_y with ρ(m) = m ⊗ x on the first line, m ⊗ y on the others
    let q = Field::Rationals;
    let g = Coalgebra::grouplike(&q, vec!["x".into(), "y".into()]).unwrap();
    let grades = [0, 1, 1];
    let coeffs = (0..3)
        .map(|l| {
            (0..3)
                .map(|v| (0..2).map(|a| if v == l && a == grades[l] { q.one() } else { q.zero() }).collect())
                .collect()
        })
        .collect();
    let m = Comodule::new(&g, 3, coeffs).unwrap();
    assert!(m.is_coassociative() && m.satisfies_counit());
}

#[test]
fn coideal_examples() {
    let q = Field::Rationals;
    let c = Coalgebra::comatrix(&q, 2);
    assert!(is_coideal(&c, &Subspace::zero(&q, 4)));
    let zero = QuotientCoalgebra::new(&Coideal::zero(&c));
    assert_eq!(zero.coalgebra().dim(), 4);
    assert!(is_coalgebra_map(&c, zero.coalgebra(), &zero.projection_matrix()));

    let i = Subspace::span(&q, 4, &[vec_of(&q, &[0, 0, 1, 0]), vec_of(&q, &[-1, 0, 0, 1])]);
    assert!(is_coideal(&c, &i));
    let quotient = QuotientCoalgebra::new(&Coideal::new(&c, i).unwrap());
    assert_eq!(quotient.dim(), 2);

    let c11 = Subspace::span(&q, 4, &[vec_of(&q, &[1, 0, 0, 0])]);
    assert!(!is_coideal(&c, &c11));
    assert!(matches!(Coideal::new(&c, c11), Err(dequation::Error::NotCoideal(_))));
}

#[test]
fn quotient_structure_of_the_kronecker_coideal() {
    let q = Field::Rationals;
    let c = Coalgebra::comatrix(&q, 2);
    let vectors = [vec_of(&q, &[0, 0, 1, 0]), vec_of(&q, &[-1, 0, 0, 1])];
    // keep c11, c12 as representatives
    let quotient = QuotientCoalgebra::with_order(&c, &vectors, &[2, 3, 1, 0]).unwrap();
    let qc = quotient.coalgebra();
    assert_eq!(qc.labels(), ["~c11", "~c12"]);
    assert_eq!(qc.format_delta(0), "~c11 ⊗ ~c11");
    assert_eq!(qc.format_delta(1), "~c11 ⊗ ~c12 + ~c12 ⊗ ~c11");
    assert_eq!(qc.counit(), vec_of(&q, &[1, 0]).as_slice());
    assert!(qc.is_coassociative() && qc.satisfies_counit());
}

#[test]
fn convolution_unit_and_zero() {
    let f = Field::prime(5).unwrap();
    let c = Coalgebra::comatrix(&f, 2);
    let unit = BilinearForm::unit(&c, &c);
    let psi = BilinearForm::from_fn(&c, &c, |a, b| f.from_i64((a * 3 + b) as i64));
    assert_eq!(convolve(&unit, &psi).unwrap(), psi);
    assert_eq!(convolve(&psi, &unit).unwrap(), psi);
    let zero = BilinearForm::from_fn(&c, &c, |_, _| f.zero());
    assert!(convolution_inverse(&zero).is_none());
    assert_eq!(convolution_inverse(&unit), Some(unit));
}

#[test]
fn convolution_rejects_mismatched_pairs() {
    let q = Field::Rationals;
    let c = Coalgebra::comatrix(&q, 2);
    let g = Coalgebra::grouplike(&q, vec!["g".into()]).unwrap();
    let a = BilinearForm::unit(&c, &c);
    let b = BilinearForm::unit(&c, &g);
    assert!(convolve(&a, &b).is_err());
}

#[test]
fn standard_comodule_formula() {
    let q = Field::Rationals;
    let m = standard_comodule(&q, 2);
    // ρ(m_1) = m_1 ⊗ c11 + m_2 ⊗ c21
    assert_eq!(m.coeffs()[0][0], vec_of(&q, &[1, 0, 0, 0]));
    assert_eq!(m.coeffs()[0][1], vec_of(&q, &[0, 0, 1, 0]));
    let m1 = standard_comodule(&q, 1);
    assert!(m1.coeffs()[0][0][0].is_one());
    assert!(m1.coalgebra().delta(0) == [(0, 0, q.one())].as_slice());
    for n in 1..=3 {
        let m = standard_comodule(&q, n);
        assert!(m.is_coassociative() && m.satisfies_counit());
    }
}

fn f5() -> Field {
    Field::prime(5).unwrap()
}

fn random_form(c: &Coalgebra, entries: &[i64]) -> BilinearForm {
    let f = c.field();
    let d = c.dim();
    BilinearForm::from_fn(c, c, |a, b| f.from_i64(entries[a * d + b]))
}

fn random_operator(entries: &[i64]) -> EndoPair {
    let f = f5();
    EndoPair::from_matrix(2, Matrix::from_fn(&f, 4, 4, |r, c| f.from_i64(entries[r * 4 + c]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convolution_is_associative(
        a in prop::collection::vec(0i64..5, 16),
        b in prop::collection::vec(0i64..5, 16),
        c in prop::collection::vec(0i64..5, 16),
    ) {
        let co = Coalgebra::comatrix(&f5(), 2);
        let (x, y, z) = (random_form(&co, &a), random_form(&co, &b), random_form(&co, &c));
        let left = convolve(&convolve(&x, &y).unwrap(), &z).unwrap();
        let right = convolve(&x, &convolve(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn convolution_inverse_is_two_sided(a in prop::collection::vec(0i64..5, 16)) {
        let co = Coalgebra::comatrix(&f5(), 2);
        let x = random_form(&co, &a);
        let unit = BilinearForm::unit(&co, &co);
        if let Some(inv) = convolution_inverse(&x) {
            prop_assert_eq!(convolve(&x, &inv).unwrap(), unit.clone());
            prop_assert_eq!(convolve(&inv, &x).unwrap(), unit);
        }
    }

    /// Obstruction spans are coideals; two sections give isomorphic quotients.
    #[test]
    fn quotient_is_independent_of_the_section(entries in prop::collection::vec(0i64..5, 16)) {
        let r = random_operator(&entries);
        let f = f5();
        let c = Coalgebra::comatrix(&f, 2);
        let vectors = obstructions(&r).vectors().to_vec();
        let sub = Subspace::span(&f, 4, &vectors);
        prop_assert!(is_coideal(&c, &sub));
        let q1 = QuotientCoalgebra::with_order(&c, &vectors, &[0, 1, 2, 3]).unwrap();
        let q2 = QuotientCoalgebra::with_order(&c, &vectors, &[3, 2, 1, 0]).unwrap();
        prop_assert_eq!(q1.dim(), 4 - sub.dim());
        prop_assert_eq!(q1.coideal().basis().len(), q2.coideal().basis().len());
        let phi = q1.identification_with(&q2);
        prop_assert!(is_coalgebra_map(q1.coalgebra(), q2.coalgebra(), &phi));
        prop_assert_eq!(&phi * &q1.projection_matrix(), q2.projection_matrix());
        prop_assert!(is_coalgebra_map(&c, q1.coalgebra(), &q1.projection_matrix()));
        prop_assert!(q1.coalgebra().is_coassociative() && q1.coalgebra().satisfies_counit());
    }
}
