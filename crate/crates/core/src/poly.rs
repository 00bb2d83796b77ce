//! Sparse polynomials with exact rational coefficients in the fixed ambient
//! ring `Q[x, y, z, w]`.
//!
//! Every object handled by this crate lives in at most four variables, so a
//! monomial is a plain `[u32; 4]` exponent array. Polynomials in fewer
//! variables simply carry zero exponents in the unused slots.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! degree-lexicographic with `x > y > z > w`. Printing walks the map from the
//! largest monomial down, so two equal polynomials always print identically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One of the four ambient variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
    Z,
    W,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Var> {
        Var::ALL.get(i).copied()
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z', 'w'][self.index()]
    }

    /// Accepts lower- and upper-case names.
    pub fn from_char(c: char) -> Option<Var> {
        match c.to_ascii_lowercase() {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            'w' => Some(Var::W),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Parses a comma separated variable list such as `"x,z,w"`.
pub fn parse_var_list(text: &str) -> Result<Vec<Var>, PolyError> {
    let mut vars = Vec::new();
    for (i, part) in text.split(',').enumerate() {
        let part = part.trim();
        let mut chars = part.chars();
        let var = match (chars.next(), chars.next()) {
            (Some(c), None) => Var::from_char(c),
            _ => None,
        };
        match var {
            Some(v) if !vars.contains(&v) => vars.push(v),
            Some(v) => {
                return Err(PolyError::Syntax {
                    position: i + 1,
                    message: format!("variable {v} listed twice"),
                })
            }
            None => {
                return Err(PolyError::UnknownVariable {
                    position: i + 1,
                    name: part.to_string(),
                })
            }
        }
    }
    Ok(vars)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// `position` is the 1-based byte position of the offending character.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { position: usize, name: String },
    #[error("the zero polynomial has no weighted degree")]
    ZeroPolynomial,
}

/// Exponent vector `(a, b, c, d)` standing for `x^a y^b z^c w^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(exponents: [u32; 4]) -> Self {
        Monomial(exponents)
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u64; 4]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(&a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(self.0) {
            *a -= b;
        }
        Some(Monomial(e))
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = (*a).min(b);
        }
        Monomial(e)
    }

    /// Every monomial dividing `self`, in increasing order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::ONE];
        for v in Var::ALL {
            let mut next = Vec::new();
            for m in &out {
                for k in 0..=self.exponent(v) {
                    let mut e = m.0;
                    e[v.index()] = k;
                    next.push(Monomial(e));
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Degree-lexicographic with `x > y > z > w`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over the rationals. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(BigRational::one(), Monomial::var(v))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(BigRational::one(), m)
    }

    pub fn from_terms<I: IntoIterator<Item = (BigRational, Monomial)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down (canonical printing order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.terms().map(|(m, _)| *m).collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(Monomial, BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exponent(v) == 0)
    }

    /// Variables occurring in some term, in the order x, y, z, w.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| !self.is_free_of(v))
            .collect()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// The coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coefficient_in(&self, v: Var, k: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                let mut e = m.0;
                e[v.index()] = 0;
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }

    /// Greatest monomial dividing every term; `ONE` for the zero polynomial.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut out = Polynomial::zero();
        for (t, c) in &self.terms {
            out.terms.insert(m.quotient_of(t)?, c.clone());
        }
        Some(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut ex = m.0;
            ex[v.index()] -= 1;
            out.add_term(Monomial(ex), c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn evaluate(&self, point: &[BigRational; 4]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    t *= num_traits::pow(point[v.index()].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Replaces `v` by a constant.
    pub fn specialize(&self, v: Var, value: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let mut ex = m.0;
            ex[v.index()] = 0;
            out.add_term(Monomial(ex), c * num_traits::pow(value.clone(), e as usize));
        }
        out
    }

    pub fn substitute(&self, s: &Substitution) -> Polynomial {
        let mut powers: [Vec<Polynomial>; 4] = Default::default();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[v.index()];
                if cache.is_empty() {
                    cache.push(Polynomial::one());
                }
                while cache.len() <= e {
                    let next = cache.last().unwrap() * s.image(v);
                    cache.push(next);
                }
                t = &t * &cache[e];
            }
            out = out + t;
        }
        out
    }

    /// Weighted degree of every term, or a witness pair of terms that differ.
    pub fn quasi_degree(&self, weights: &[u64; 4]) -> Result<QuasiDegree, PolyError> {
        let mut it = self.terms();
        let (first, _) = it.next().ok_or(PolyError::ZeroPolynomial)?;
        let d = first.weighted_degree(weights);
        for (m, _) in it {
            let e = m.weighted_degree(weights);
            if e != d {
                return Ok(QuasiDegree::Mixed {
                    first: (*first, d),
                    second: (*m, e),
                });
            }
        }
        Ok(QuasiDegree::Homogeneous(d))
    }
}

/// Outcome of a weighted-homogeneity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiDegree {
    Homogeneous(u64),
    /// Two terms of different weighted degree.
    Mixed {
        first: (Monomial, u64),
        second: (Monomial, u64),
    },
}

impl QuasiDegree {
    pub fn degree(&self) -> Option<u64> {
        match self {
            QuasiDegree::Homogeneous(d) => Some(*d),
            QuasiDegree::Mixed { .. } => None,
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.clone() + rhs.clone()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.clone() - rhs.clone()
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

/// A ring endomorphism of `Q[x, y, z, w]` given by the image of each variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: [Polynomial; 4],
}

impl Default for Substitution {
    fn default() -> Self {
        Substitution::identity()
    }
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution {
            images: Var::ALL.map(Polynomial::var),
        }
    }

    pub fn new(images: [Polynomial; 4]) -> Self {
        Substitution { images }
    }

    /// Replaces the image of `v`.
    pub fn with(mut self, v: Var, image: Polynomial) -> Self {
        self.images[v.index()] = image;
        self
    }

    pub fn image(&self, v: Var) -> &Polynomial {
        &self.images[v.index()]
    }

    pub fn is_identity(&self) -> bool {
        Var::ALL
            .into_iter()
            .all(|v| self.images[v.index()] == Polynomial::var(v))
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            if self.images[v.index()] == Polynomial::var(v) {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{v} -> {}", self.images[v.index()])?;
        }
        if first {
            write!(f, "id")?;
        }
        Ok(())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

/// Parses the polynomial grammar
///
/// ```text
/// poly   := ['-'|'+'] term (('+'|'-') term)*
/// term   := coeff | [coeff '*'] factor ('*' factor)*
/// factor := var ['^' uint]
/// coeff  := ['-'] uint ['/' uint]
/// var    := x | y | z | w       (upper case accepted)
/// ```
pub fn parse_poly(text: &str) -> Result<Polynomial, PolyError> {
    Ok(Polynomial::from_terms(parse_term_list(text)?))
}

/// Like [`parse_poly`] but keeps the terms in the order written, without
/// merging. Table data where the term order carries meaning uses this.
pub fn parse_term_list(text: &str) -> Result<Vec<(BigRational, Monomial)>, PolyError> {
    Parser::new(text, None).parse()
}

/// Parses with the moduli `a1..a4` bound to concrete values.
pub fn parse_poly_with_params(text: &str, params: &[BigRational]) -> Result<Polynomial, PolyError> {
    Ok(Polynomial::from_terms(Parser::new(text, Some(params)).parse()?))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    params: Option<&'a [BigRational]>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, params: Option<&'a [BigRational]>) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            params,
        }
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            position: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<Vec<(BigRational, Monomial)>, PolyError> {
        let mut terms = Vec::new();
        if self.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((if negate { -c } else { c }, m));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                Some(other) => {
                    return Err(self.err(format!("expected '+' or '-', found '{}'", other as char)))
                }
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(BigRational, Monomial), PolyError> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::ONE;
        match self.peek() {
            Some(b) if b.is_ascii_digit() || b == b'-' => {
                coeff = self.coeff()?;
                if !self.eat(b'*') {
                    return Ok((coeff, mono));
                }
            }
            _ => {}
        }
        loop {
            self.factor(&mut coeff, &mut mono)?;
            if !self.eat(b'*') {
                return Ok((coeff, mono));
            }
        }
    }

    fn coeff(&mut self) -> Result<BigRational, PolyError> {
        let negative = self.eat(b'-');
        let num = self.uint()?;
        let mut q = BigRational::from_integer(num);
        if self.eat(b'/') {
            let den = self.uint()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            q /= BigRational::from_integer(den);
        }
        Ok(if negative { -q } else { q })
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.src.get(self.pos) {
                Some(&b) => self.err(format!("expected an unsigned integer, found '{}'", b as char)),
                None => self.err("expected an unsigned integer, found end of input"),
            });
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        let at = self.pos;
        let n = self.uint()?;
        u32::try_from(n).map_err(|_| PolyError::Syntax {
            position: at + 1,
            message: "exponent out of range".into(),
        })
    }

    fn factor(&mut self, coeff: &mut BigRational, mono: &mut Monomial) -> Result<(), PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.src.get(self.pos) {
                Some(&b) => self.err(format!("expected a variable, found '{}'", b as char)),
                None => self.err("expected a variable, found end of input"),
            });
        }
        let ident = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let mut chars = ident.chars();
        let single = match (chars.next(), chars.next()) {
            (Some(c), None) => Var::from_char(c),
            _ => None,
        };
        if let Some(v) = single {
            let e = if self.eat(b'^') { self.exponent()? } else { 1 };
            let mut ex = mono.0;
            ex[v.index()] += e;
            *mono = Monomial(ex);
            return Ok(());
        }
        if let Some(params) = self.params {
            if let Some(k) = ident.strip_prefix('a').and_then(|d| d.parse::<usize>().ok()) {
                if (1..=params.len()).contains(&k) {
                    let value = params[k - 1].clone();
                    *coeff *= if self.eat(b'^') {
                        let e = self.exponent()?;
                        num_traits::pow(value, e as usize)
                    } else {
                        value
                    };
                    return Ok(());
                }
            }
        }
        Err(PolyError::UnknownVariable {
            position: start + 1,
            name: ident.to_string(),
        })
    }
}
