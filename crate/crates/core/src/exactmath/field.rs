//! Exact scalar domains: Q, prime fields F_p, and rational functions Q(vars).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{gcd, Poly};
use crate::error::{Error, Result};

/// Largest accepted prime; keeps products of residues inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
    /// Rational functions over Q in the listed variables (in this order).
    Functions(Arc<[String]>),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::usage(format!("modulus {p} exceeds {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::usage(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn functions<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::usage("rational function field needs at least one variable"));
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !valid_identifier(v) {
                return Err(Error::usage(format!("invalid variable name {v:?}")));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::usage(format!("duplicate variable name {v:?}")));
            }
            names.push(v.to_string());
        }
        Ok(Field::Functions(names.into()))
    }

    pub fn variables(&self) -> &[String] {
        match self {
            Field::Functions(vars) => vars,
            _ => &[],
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor_u64(*p);
                Scalar::Modular { residue: r, modulus: *p }
            }
            Field::Functions(vars) => Scalar::Function(RatFun::from_poly(Poly::constant(
                vars.len(),
                BigRational::from_integer(v.clone()),
            ))),
        }
    }

    /// Embeds a rational; `None` in F_p when the denominator vanishes mod p.
    pub fn from_rational(&self, v: &BigRational) -> Option<Scalar> {
        match self {
            Field::Rationals => Some(Scalar::Rational(v.clone())),
            Field::Prime(_) => self.from_bigint(v.numer()).checked_div(&self.from_bigint(v.denom())),
            Field::Functions(vars) => Some(Scalar::Function(RatFun::from_poly(Poly::constant(
                vars.len(),
                v.clone(),
            )))),
        }
    }

    /// The named parameter as a scalar, if this field has it.
    pub fn var(&self, name: &str) -> Option<Scalar> {
        match self {
            Field::Functions(vars) => {
                let idx = vars.iter().position(|v| v == name)?;
                Some(Scalar::Function(RatFun::from_poly(Poly::var(vars.len(), idx))))
            }
            _ => None,
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Modular { modulus, residue }) => p == modulus && residue < p,
            (Field::Functions(vars), Scalar::Function(f)) => f.num.nvars() == vars.len(),
            _ => false,
        }
    }

    /// Every element, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some(
                (0..*p)
                    .map(|r| Scalar::Modular { residue: r, modulus: *p })
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Header form used by the text formats: `Q`, `F 5`, `QFUN a,b,c`.
    pub fn header(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("F {p}"),
            Field::Functions(vars) => format!("QFUN {}", vars.join(",")),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.header())
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }
}

/// A quotient of polynomials in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn from_poly(num: Poly) -> Self {
        let den = Poly::one(num.nvars());
        RatFun { num, den }
    }

    /// Reduces `num/den` to canonical form. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(num);
        }
        let (num, den) = if den.constant_value().is_some() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let lc = den.leading_coefficient().unwrap().clone();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value at a point, or `None` if the denominator vanishes there.
    pub fn evaluate(&self, values: &[BigRational]) -> Option<BigRational> {
        let d = self.den.evaluate(values);
        (!d.is_zero()).then(|| self.num.evaluate(values) / d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
    Function(RatFun),
}

fn field_mismatch() -> ! {
    panic!("arithmetic between scalars of different fields")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
            Scalar::Function(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
            Scalar::Function(f) => f.num.is_one() && f.den.is_one(),
        }
    }

    /// Whether both scalars live in the same field (up to variable names).
    pub fn same_field(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Modular { modulus: a, .. }, Scalar::Modular { modulus: b, .. }) => a == b,
            (Scalar::Function(a), Scalar::Function(b)) => a.num.nvars() == b.num.nvars(),
            _ => false,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Function(f) => Scalar::Function(RatFun::new(f.den.clone(), f.num.clone())),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
            Scalar::Modular { modulus, .. } => Scalar::Modular { residue: 1, modulus: *modulus },
            Scalar::Function(f) => Scalar::Function(RatFun::from_poly(Poly::one(f.num.nvars()))),
        };
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Residue for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Modular { residue, .. } => Some(*residue),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_function(&self) -> Option<&RatFun> {
        match self {
            Scalar::Function(f) => Some(f),
            _ => None,
        }
    }

    /// Formats with the variable names of `field`.
    pub fn display<'a>(&'a self, field: &'a Field) -> ScalarDisplay<'a> {
        ScalarDisplay { scalar: self, field }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, modulus: m2 }) => {
                if modulus != m2 {
                    field_mismatch()
                }
                Scalar::Modular { residue: (a + b) % modulus, modulus: *modulus }
            }
            (Scalar::Function(a), Scalar::Function(b)) => {
                if a.is_zero() {
                    return rhs.clone();
                }
                if b.is_zero() {
                    return self.clone();
                }
                if a.is_polynomial() && b.is_polynomial() {
                    return Scalar::Function(RatFun::from_poly(&a.num + &b.num));
                }
                if a.den == b.den {
                    return Scalar::Function(RatFun::new(&a.num + &b.num, a.den.clone()));
                }
                let num = &(&a.num * &b.den) + &(&b.num * &a.den);
                Scalar::Function(RatFun::new(num, &a.den * &b.den))
            }
            _ => field_mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
            Scalar::Function(f) => Scalar::Function(RatFun {
                num: -&f.num,
                den: f.den.clone(),
            }),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, modulus: m2 }) => {
                if modulus != m2 {
                    field_mismatch()
                }
                Scalar::Modular { residue: (a + modulus - b) % modulus, modulus: *modulus }
            }
            _ => self + &(-rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, modulus: m2 }) => {
                if modulus != m2 {
                    field_mismatch()
                }
                Scalar::Modular { residue: a * b % modulus, modulus: *modulus }
            }
            (Scalar::Function(a), Scalar::Function(b)) => {
                if a.is_zero() {
                    return self.clone();
                }
                if b.is_zero() {
                    return rhs.clone();
                }
                if a.is_polynomial() && b.is_polynomial() {
                    return Scalar::Function(RatFun::from_poly(&a.num * &b.num));
                }
                Scalar::Function(RatFun::new(&a.num * &b.num, &a.den * &b.den))
            }
            _ => field_mismatch(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

pub struct ScalarDisplay<'a> {
    scalar: &'a Scalar,
    field: &'a Field,
}

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scalar {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
            Scalar::Function(r) => {
                let names = self.field.variables();
                if r.den.is_one() {
                    write!(f, "{}", r.num.display(names))
                } else {
                    write!(f, "({})/({})", r.num.display(names), r.den.display(names))
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    /// Prints without variable names (`x0`, `x1`, ...) for rational functions;
    /// use [`Scalar::display`] to print with the field's names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Function(r) => {
                let names: Vec<String> = (0..r.num.nvars()).map(|i| format!("x{i}")).collect();
                let field = Field::Functions(names.into());
                write!(f, "{}", self.display(&field))
            }
            _ => write!(f, "{}", self.display(&Field::Rationals)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn function_field_rejects_duplicate_names() {
        assert!(Field::functions(&["a", "b"]).is_ok());
        assert!(Field::functions(&["a", "a"]).is_err());
        assert!(Field::functions::<&str>(&[]).is_err());
        assert!(Field::functions(&["2x"]).is_err());
    }

    #[test]
    fn modular_inverse() {
        let f = Field::prime(7).unwrap();
        for v in 1..7 {
            let s = f.from_i64(v);
            assert!((&s * &s.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn rational_function_canonical_form() {
        let f = Field::functions(&["q"]).unwrap();
        let q = f.var("q").unwrap();
        let one = f.one();
        // (q^2 - 1)/(q - 1) == q + 1
        let lhs = (&(&q * &q) - &one).checked_div(&(&q - &one)).unwrap();
        assert_eq!(lhs, &q + &one);
        // q - 1/q prints over a monic denominator
        let s = &q - &q.inv().unwrap();
        assert_eq!(s.display(&f).to_string(), "(q^2 - 1)/(q)");
        // 1/(2q) normalizes the denominator's leading coefficient
        let t = f.from_i64(2).checked_div(&(&q * &f.from_i64(4))).unwrap();
        assert_eq!(t.display(&f).to_string(), "(1/2)/(q)");
    }
}
