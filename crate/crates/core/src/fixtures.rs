//! Named example operators used by the CLI `examples` command and the tests.

use crate::dimodule::{dimodule_from_grading, r_from_dimodule, symmetric_permutations, CayleyTable, GradedModule};
use crate::error::Result;
use crate::exactmath::{parse_scalar, Field, Matrix, Scalar};
use crate::tensor_ops::{product_solution, EndoPair};

fn matrix(field: &Field, rows: &[&[&Scalar]]) -> Matrix {
    Matrix::from_fn(field, rows.len(), rows[0].len(), |r, c| rows[r][c].clone())
}

fn lit(field: &Field, text: &str) -> Scalar {
    parse_scalar(field, text).expect("fixture literal")
}

/// `f ⊗ g` with `f = [[a,1],[0,a]]`, `g = [[b,c],[0,b]]`.
pub fn eq100(field: &Field, a: &Scalar, b: &Scalar, c: &Scalar) -> EndoPair {
    let (z, o) = (field.zero(), field.one());
    let f = matrix(field, &[&[a, &o], &[&z, a]]);
    let g = matrix(field, &[&[b, c], &[&z, b]]);
    product_solution(&f, &g).expect("square factors")
}

/// The same family over `Q(a,b,c)`.
pub fn eq100_symbolic() -> EndoPair {
    let field = Field::functions(&["a", "b", "c"]).unwrap();
    let (a, b, c) = (lit(&field, "a"), lit(&field, "b"), lit(&field, "c"));
    eq100(&field, &a, &b, &c)
}

/// `[[a,0,0,0],[0,b,c,0],[0,d,e,0],[0,0,0,f]]`.
pub fn block_family(field: &Field, p: [&Scalar; 6]) -> EndoPair {
    let z = field.zero();
    let [a, b, c, d, e, f] = p;
    let m = matrix(field, &[&[a, &z, &z, &z], &[&z, b, c, &z], &[&z, d, e, &z], &[&z, &z, &z, f]]);
    EndoPair::from_matrix(2, m).unwrap()
}

/// The two-dimensional Yang-Baxter operator
/// `[[q,0,0,0],[0,1,q-q⁻¹,0],[0,0,1,0],[0,0,0,q]]`.
pub fn yb_operator(field: &Field, q: &Scalar) -> EndoPair {
    let (z, o) = (field.zero(), field.one());
    let off = q - &q.inv().expect("q is nonzero");
    let m = matrix(field, &[&[q, &z, &z, &z], &[&z, &o, &off, &z], &[&z, &z, &o, &z], &[&z, &z, &z, q]]);
    EndoPair::from_matrix(2, m).unwrap()
}

/// `R_q = f ⊗ g`, `f = [[1,q],[0,0]]`, `g = [[0,-q],[0,1]]`, with `fg = gf = 0`.
pub fn r_q(field: &Field, q: &Scalar) -> EndoPair {
    let (z, o) = (field.zero(), field.one());
    let mq = -q;
    let f = matrix(field, &[&[&o, q], &[&z, &z]]);
    let g = matrix(field, &[&[&z, &mq], &[&z, &o]]);
    product_solution(&f, &g).unwrap()
}

/// `diag(1,0) ⊗ diag(a,b)`.
pub fn projection(field: &Field, a: &Scalar, b: &Scalar) -> EndoPair {
    let (z, o) = (field.zero(), field.one());
    let f = matrix(field, &[&[&o, &z], &[&z, &z]]);
    let g = matrix(field, &[&[a, &z], &[&z, b]]);
    product_solution(&f, &g).unwrap()
}

/// The two-dimensional standard representation of `S_3`: permutations of
/// `{e1,e2,e3}` restricted to the basis `e1 - e3, e2 - e3`.
pub fn s3_standard_rep(field: &Field) -> Vec<Matrix> {
    symmetric_permutations(3)
        .iter()
        .map(|p| {
            // image of e_x - e_3 is e_{p(x)} - e_{p(3)}; a sum-zero vector w
            // has coordinates (w_1, w_2) in the basis
            let image = |x: usize| -> [i64; 3] {
                let mut w = [0i64; 3];
                w[p[x]] += 1;
                w[p[2]] -= 1;
                w
            };
            let cols = [image(0), image(1)];
            Matrix::from_fn(field, 2, 2, |r, c| field.from_i64(cols[c][r]))
        })
        .collect()
}

/// `M = V_(12) ⊕ V_(123)` with `V` the standard representation of `S_3`.
pub fn s3_graded_module(field: &Field) -> GradedModule {
    let group = CayleyTable::symmetric(3);
    let a = group.index_of("(12)").unwrap();
    let b = group.index_of("(123)").unwrap();
    let action = s3_standard_rep(field)
        .iter()
        .map(|m| {
            Matrix::from_fn(field, 4, 4, |r, c| {
                if r / 2 == c / 2 { m.get(r % 2, c % 2).clone() } else { field.zero() }
            })
        })
        .collect();
    GradedModule::new(field, group, action, vec![a, a, b, b]).expect("S3 grading is valid")
}

/// `R(n ⊗ m) = Σ_σ σ·n ⊗ m_σ` for [`s3_graded_module`].
pub fn s3_graded(field: &Field) -> Result<EndoPair> {
    r_from_dimodule(&dimodule_from_grading(&s3_graded_module(field))?)
}

/// A named example operator.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub r: EndoPair,
}

/// Every shipped example, in a fixed order.
pub fn all() -> Vec<Fixture> {
    let q = Field::Rationals;
    let one = q.one();
    let qfun = Field::functions(&["q"]).unwrap();
    let qv = lit(&qfun, "q");
    vec![
        Fixture {
            name: "eq100",
            description: "f⊗g with f=[[a,1],[0,a]], g=[[b,c],[0,b]] over Q(a,b,c)",
            r: eq100_symbolic(),
        },
        Fixture {
            name: "eq100-unit",
            description: "the same family at a=b=c=1",
            r: eq100(&q, &one, &one, &one),
        },
        Fixture {
            name: "rq",
            description: "R_q = f⊗g with fg=gf=0 at q=3",
            r: r_q(&q, &q.from_i64(3)),
        },
        Fixture {
            name: "rq-symbolic",
            description: "R_q over Q(q)",
            r: r_q(&qfun, &qv),
        },
        Fixture {
            name: "projection",
            description: "diag(1,0)⊗diag(2,3)",
            r: projection(&q, &q.from_i64(2), &q.from_i64(3)),
        },
        Fixture {
            name: "yb-operator",
            description: "two-dimensional Yang-Baxter operator at q=2",
            r: yb_operator(&q, &q.from_i64(2)),
        },
        Fixture {
            name: "yb-operator-symbolic",
            description: "two-dimensional Yang-Baxter operator over Q(q)",
            r: yb_operator(&qfun, &qv),
        },
        Fixture {
            name: "s3-graded",
            description: "R(n⊗m)=Σ σ·n⊗m_σ for V_(12) ⊕ V_(123), V the standard S3 representation",
            r: s3_graded(&q).expect("S3 dimodule"),
        },
        Fixture {
            name: "identity",
            description: "identity on M⊗M, dim M = 2",
            r: EndoPair::identity(&q, 2),
        },
    ]
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}
