use dequation::coalg::{Coalgebra, QuotientCoalgebra};
use dequation::dimodule::CayleyTable;
use dequation::exactmath::{Field, Matrix};
use dequation::fixtures::{self, s3_graded_module};
use dequation::formats::*;
use dequation::frt::{d_bialgebra, obstructions, relation_pivot_order};
use dequation::tensor_ops::EndoPair;
use dequation::Error;
use proptest::prelude::*;

fn position(e: Error) -> (usize, usize) {
    match e {
        Error::Parse { line, column, .. } => (line, column),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn every_fixture_round_trips() {
    for fx in fixtures::all() {
        let text = write_matrix_file(&fx.r);
        let back = parse_matrix_file(&text).unwrap();
        assert_eq!(back, fx.r, "{}", fx.name);
        assert_eq!(write_matrix_file(&back), text, "{}", fx.name);
    }
}

#[test]
fn symbolic_entries_are_comma_separated() {
    let text = write_matrix_file(&fixtures::eq100_symbolic());
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "field QFUN a,b,c");
    assert_eq!(lines[1], "dim 2");
    assert_eq!(lines[2], "a*b, a*c, b, c");
}

#[test]
fn hand_written_matrix_file() {
    let text = "\
# R_q at q = 3, written by hand
field Q

dim 2
0 0 0 0
3 0 0 0
-3 0 0 0
-9 0 0 0
";
    let r = parse_matrix_file(text).unwrap();
    assert_eq!(r.n(), 2);
    assert_eq!(r.matrix().get(3, 0), &Field::Rationals.from_i64(-9));
}

#[test]
fn matrix_errors_point_at_the_problem() {
    assert_eq!(position(parse_matrix_file("field R\ndim 1\n1\n").unwrap_err()), (1, 7));
    assert_eq!(position(parse_matrix_file("field F 4\ndim 1\n1\n").unwrap_err()), (1, 9));
    assert_eq!(position(parse_matrix_file("field Q\ndim 0\n").unwrap_err()), (2, 5));
    assert_eq!(position(parse_matrix_file("field Q\ndim 1\n").unwrap_err()).0, 2);
    assert_eq!(position(parse_matrix_file("field Q\nsize 1\n1\n").unwrap_err()), (2, 1));
    assert_eq!(position(parse_matrix_file("field Q\ndim 1\n1\n2\n").unwrap_err()), (4, 1));
    assert_eq!(position(parse_matrix_file("field F 5\ndim 1\n  x\n").unwrap_err()), (3, 3));
    let qfun = "field QFUN a\ndim 1\na +* 2\n";
    assert_eq!(position(parse_matrix_file(qfun).unwrap_err()).0, 3);
}

#[test]
fn coalgebra_files_round_trip() {
    let q = Field::Rationals;
    let c = Coalgebra::comatrix(&q, 2);
    let text = write_coalgebra_file(&c);
    assert!(text.starts_with("field Q\ncoalg 4\nlabels c11 c12 c21 c22\n1 1 1 1\n1 2 3 1\n"));
    assert!(text.ends_with("counit 1 0 0 1\n"));
    assert_eq!(parse_coalgebra_file(&text).unwrap(), c);

    let r = fixtures::by_name("eq100-unit").unwrap().r;
    let quotient = QuotientCoalgebra::with_order(&c, obstructions(&r).vectors(), &relation_pivot_order(2)).unwrap();
    let qc = quotient.coalgebra();
    assert_eq!(parse_coalgebra_file(&write_coalgebra_file(qc)).unwrap(), *qc);

    let qf = Field::functions(&["q"]).unwrap();
    let rq = fixtures::by_name("rq-symbolic").unwrap().r;
    let g = d_bialgebra(&rq).unwrap().generators().clone();
    let text = write_coalgebra_file(&g);
    assert_eq!(parse_coalgebra_file(&text).unwrap(), g);
    assert!(text.starts_with(&format!("field {}\n", qf.header())));
}

#[test]
fn coalgebra_axioms_are_checked_on_read() {
    let broken = "field Q\ncoalg 2\nlabels x y\n1 1 1 1\n2 1 2 1\ncounit 1 1\n";
    assert!(parse_coalgebra_file(broken).is_err());
    let bad_index = "field Q\ncoalg 1\nlabels x\n1 1 2 1\ncounit 1\n";
    assert_eq!(position(parse_coalgebra_file(bad_index).unwrap_err()), (4, 5));
    let short = "field Q\ncoalg 2\nlabels x\n";
    assert_eq!(position(parse_coalgebra_file(short).unwrap_err()).0, 3);
}

#[test]
fn group_files() {
    for g in [CayleyTable::cyclic(3), CayleyTable::symmetric(3)] {
        assert_eq!(parse_group_file(&write_group_file(&g)).unwrap(), g);
    }
    assert_eq!(parse_group_file("group symmetric 3\n").unwrap(), CayleyTable::symmetric(3));
    assert_eq!(parse_group_file("group cyclic 4\n").unwrap(), CayleyTable::cyclic(4));
    let klein = "group 4\nnames e a b c\ne a b c\na e c b\nb c e a\nc b a e\n";
    let k = parse_group_file(klein).unwrap();
    assert!(k.is_abelian());
    assert_eq!(k.mul(1, 2), 3);
    let typo = "group 2\nnames e a\ne a\na f\n";
    assert_eq!(position(parse_group_file(typo).unwrap_err()), (4, 3));
    let not_a_group = "group 2\nnames e a\ne a\na a\n";
    assert!(parse_group_file(not_a_group).is_err());
}

#[test]
fn graded_files_round_trip() {
    let m = s3_graded_module(&Field::Rationals);
    let text = write_graded_file(&m);
    assert!(text.contains("\ngrades (12) (12) (123) (123)\n"), "{text}");
    assert_eq!(parse_graded_file(&text).unwrap(), m);
}

#[test]
fn graded_files_with_a_shorthand_group() {
    let text = "\
field F 3
group cyclic 2
dim 2
grades 0 1
action 0
1 0
0 1
action 1
1 0
0 2
";
    let m = parse_graded_file(text).unwrap();
    assert_eq!(m.grades(), [0, 1]);
    let unstable = text.replace("1 0\n0 2\n", "0 1\n1 0\n");
    assert!(matches!(parse_graded_file(&unstable), Err(Error::Parse { .. })));
    let missing = text.replace("action 1\n1 0\n0 2\n", "");
    assert!(parse_graded_file(&missing).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_matrices_round_trip(entries in prop::collection::vec((-20i64..20, 1i64..6), 16), p in prop::sample::select(vec![0u64, 2, 7])) {
        let f = if p == 0 { Field::Rationals } else { Field::prime(p).unwrap() };
        let m = Matrix::from_fn(&f, 4, 4, |r, c| {
            let (a, b) = entries[r * 4 + c];
            f.from_i64(a).checked_div(&f.from_i64(b)).unwrap_or_else(|| f.from_i64(a))
        });
        let r = EndoPair::from_matrix(2, m).unwrap();
        let text = write_matrix_file(&r);
        prop_assert_eq!(parse_matrix_file(&text).unwrap(), r);
    }
}
