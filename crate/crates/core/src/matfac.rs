//! Size-two matrix factorizations `f = x c + a b` of polynomials in
//! `(x, z, w)`, the lift to a complete intersection `(xy - a, c + yb)` and
//! Wall's reduction eliminating `y`.

use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatfacError {
    #[error("invalid factorization triple: {0}")]
    Triple(String),
    #[error("input must be a polynomial in x, z, w; found y in {0}")]
    HasY(String),
    #[error("no factorization x*c + a*b of the required shape: {0}")]
    NoFactorization(String),
    #[error("matrix identity failed: {0}")]
    Identity(String),
    #[error("pair is not of the shape (xy - a, c + y*b): {0}")]
    Shape(String),
}

/// `(a, b, c)` with `a, b` in `(z, w)` and `c` in `(x, z, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationTriple {
    a: Polynomial,
    b: Polynomial,
    c: Polynomial,
}

impl FactorizationTriple {
    pub fn new(a: Polynomial, b: Polynomial, c: Polynomial) -> Result<Self, MatfacError> {
        let bad = |m: &str| Err(MatfacError::Triple(m.to_string()));
        if !(a.is_free_of(Var::X) && a.is_free_of(Var::Y)) {
            return bad("a must be a polynomial in z, w");
        }
        if !(b.is_free_of(Var::X) && b.is_free_of(Var::Y)) {
            return bad("b must be a polynomial in z, w");
        }
        if !c.is_free_of(Var::Y) {
            return bad("c must not involve y");
        }
        if a.degree().unwrap_or(0) < 2 {
            return bad("a must have degree at least 2");
        }
        if b.degree().unwrap_or(0) < 1 {
            return bad("b must have degree at least 1");
        }
        if c.degree().unwrap_or(0) < 2 {
            return bad("c must have degree at least 2");
        }
        Ok(FactorizationTriple { a, b, c })
    }

    pub fn a(&self) -> &Polynomial {
        &self.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.b
    }

    pub fn c(&self) -> &Polynomial {
        &self.c
    }

    /// `x c + a b`.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::var(Var::X) * self.c.clone() + &self.a * &self.b
    }

    /// `q0 = [[a, -x], [c, b]]`.
    pub fn q0(&self) -> Mat2 {
        Mat2([
            [self.a.clone(), -Polynomial::var(Var::X)],
            [self.c.clone(), self.b.clone()],
        ])
    }

    /// `q1 = [[b, x], [-c, a]]`.
    pub fn q1(&self) -> Mat2 {
        Mat2([
            [self.b.clone(), Polynomial::var(Var::X)],
            [-self.c.clone(), self.a.clone()],
        ])
    }

    /// Same factorization up to moving a scalar between `a` and `b`.
    pub fn equivalent_up_to_scalar(&self, other: &FactorizationTriple) -> bool {
        if self.c != other.c {
            return false;
        }
        let (Some((m, s)), Some((n, t))) = (self.b.leading_term(), other.b.leading_term()) else {
            return false;
        };
        if m != n {
            return false;
        }
        let k = t / s;
        self.b.scale(&k) == other.b && other.a.scale(&k) == self.a
    }
}

impl fmt::Display for FactorizationTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x*({}) + ({})*({})", self.c, self.a, self.b)
    }
}

/// 2x2 matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[Polynomial; 2]; 2]);

impl Mat2 {
    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][0] * &o.0[0][j] + &self.0[i][1] * &o.0[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scalar(p: &Polynomial) -> Mat2 {
        Mat2([
            [p.clone(), Polynomial::zero()],
            [Polynomial::zero(), p.clone()],
        ])
    }
}

/// Two equations in `(x, y, z, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteIntersectionPair {
    #[serde(with = "poly_text")]
    pub first: Polynomial,
    #[serde(with = "poly_text")]
    pub second: Polynomial,
}

impl CompleteIntersectionPair {
    pub fn new(first: Polynomial, second: Polynomial) -> Self {
        CompleteIntersectionPair { first, second }
    }
}

impl fmt::Display for CompleteIntersectionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

pub(crate) mod poly_text {
    use crate::poly::Polynomial;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Polynomial, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Checks `q0 q1 = q1 q0 = (x c + a b) I` and returns `x c + a b`.
pub fn verify_factorization(t: &FactorizationTriple) -> Result<Polynomial, MatfacError> {
    let f = t.polynomial();
    let want = Mat2::scalar(&f);
    if t.q0().mul(&t.q1()) != want {
        return Err(MatfacError::Identity("q0*q1 != f*I".into()));
    }
    if t.q1().mul(&t.q0()) != want {
        return Err(MatfacError::Identity("q1*q0 != f*I".into()));
    }
    Ok(f)
}

/// Every factorization of `f` found by the divisor search, best first.
///
/// The terms of `f` divisible by `x` form `x c`; the rest `r(z, w)` is split
/// as `a b` with `b` monic, ranging over `b = m` and `b = m * prim(r)`, where
/// `m` divides the monomial content of `r`. Preference: smaller `deg b`,
/// then more terms in `b`, then larger leading monomial of `b`.
pub fn factorizations(f: &Polynomial) -> Result<Vec<FactorizationTriple>, MatfacError> {
    if !f.is_free_of(Var::Y) {
        return Err(MatfacError::HasY(f.to_string()));
    }
    let mut c = Polynomial::zero();
    let mut r = Polynomial::zero();
    for (m, coef) in f.terms() {
        let t = Polynomial::term(coef.clone(), *m);
        match Monomial::var(Var::X).quotient_of(m) {
            Some(q) => c = c + Polynomial::term(coef.clone(), q),
            None => r = r + t,
        }
    }
    if r.is_zero() {
        return Err(MatfacError::NoFactorization(format!(
            "{f} has no terms free of x"
        )));
    }
    let content = r.monomial_content();
    let prim = r.div_monomial(&content).expect("content divides every term");
    let (_, lc) = prim.leading_term().expect("nonzero");
    let prim_monic = prim.scale(&lc.recip());
    let mut out = Vec::new();
    for m in content.divisors() {
        let rest = m.quotient_of(&content).expect("divisor");
        let mut options = vec![(
            Polynomial::monomial(m),
            prim.mul_monomial(&rest),
        )];
        if prim.term_count() > 1 {
            options.push((
                prim_monic.mul_monomial(&m),
                Polynomial::term(lc.clone(), rest),
            ));
        }
        for (b, a) in options {
            if let Ok(t) = FactorizationTriple::new(a, b, c.clone()) {
                out.push(t);
            }
        }
    }
    out.sort_by(|s, t| {
        let key = |t: &FactorizationTriple| (t.b.degree(), std::cmp::Reverse(t.b.term_count()));
        key(s)
            .cmp(&key(t))
            .then_with(|| t.b.leading_term().map(|x| x.0).cmp(&s.b.leading_term().map(|x| x.0)))
    });
    if out.is_empty() {
        return Err(MatfacError::NoFactorization(format!(
            "remainder {r} has no split a*b with deg a >= 2, deg b >= 1 (and deg c >= 2)"
        )));
    }
    Ok(out)
}

pub fn factor_poly(f: &Polynomial) -> Result<FactorizationTriple, MatfacError> {
    Ok(factorizations(f)?.remove(0))
}

/// `(a - xy, c + yb)`.
pub fn lift(t: &FactorizationTriple) -> CompleteIntersectionPair {
    let xy = Polynomial::monomial(Monomial::new([1, 1, 0, 0]));
    CompleteIntersectionPair::new(&t.a - &xy, t.c.clone() + Polynomial::var(Var::Y) * t.b.clone())
}

/// `(xy - a, c + yb)`, the sign convention of the printed tables.
pub fn lift_normalized(t: &FactorizationTriple) -> CompleteIntersectionPair {
    let p = lift(t);
    CompleteIntersectionPair::new(-p.first, p.second)
}

/// Recovers `(a, b, c)` from a pair `(s(xy - a), c + yb)`, `s = +-1`.
pub fn split_pair(pair: &CompleteIntersectionPair) -> Result<FactorizationTriple, MatfacError> {
    let (f1, f2) = (&pair.first, &pair.second);
    let xy = Monomial::new([1, 1, 0, 0]);
    let s = f1.coefficient(&xy);
    if !(s.abs().is_one()) {
        return Err(MatfacError::Shape(format!(
            "first equation {f1} must contain the term xy or -xy"
        )));
    }
    let a = Polynomial::monomial(xy) - f1.scale(&s.recip());
    let offending: Vec<String> = a
        .terms()
        .filter(|(m, _)| m.exponent(Var::X) > 0 || m.exponent(Var::Y) > 0)
        .map(|(m, c)| Polynomial::term(c.clone(), *m).to_string())
        .collect();
    if !offending.is_empty() {
        return Err(MatfacError::Shape(format!(
            "first equation has terms in x or y besides xy: {}",
            offending.join(", ")
        )));
    }
    if f2.degree_in(Var::Y).unwrap_or(0) > 1 {
        return Err(MatfacError::Shape(format!(
            "second equation {f2} is not linear in y"
        )));
    }
    let b = f2.coefficient_in(Var::Y, 1);
    let c = f2.coefficient_in(Var::Y, 0);
    if !b.is_free_of(Var::X) {
        let bad: Vec<String> = b
            .terms()
            .filter(|(m, _)| m.exponent(Var::X) > 0)
            .map(|(m, k)| {
                (Polynomial::term(k.clone(), *m) * Polynomial::var(Var::Y)).to_string()
            })
            .collect();
        return Err(MatfacError::Shape(format!(
            "y-terms of the second equation involve x: {}",
            bad.join(", ")
        )));
    }
    FactorizationTriple::new(a, b, c)
}

/// Wall's reduction: `L_y F = x c + a b`.
pub fn reduce(pair: &CompleteIntersectionPair) -> Result<Polynomial, MatfacError> {
    Ok(split_pair(pair)?.polynomial())
}
