//! Weight systems, Poincaré series and products of the form
//! `prod_l (1 - t^l)^{a_l}`.
//!
//! A [`FrameProduct`] stores only the exponent map `l -> a_l`. Products,
//! quotients and the Saito dual act on exponents alone. Converting to an
//! actual power series ([`FrameProduct::expand`]) or to a polynomial
//! ([`FrameProduct::to_polynomial`]) is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `l` accepted when parsing a frame.
pub const MAX_BASE: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("base {0} exceeds the limit of {MAX_BASE}")]
    BaseTooLarge(u64),
    #[error("weight system must look like \"w1,w2,w3,w4;d1,d2\" with positive integers: {0}")]
    WeightSystem(String),
    #[error("{ell} does not divide {degree}")]
    NotDivisor { ell: u64, degree: u64 },
    #[error("not a polynomial: nonzero remainder with leading term {coefficient}*t^{power}")]
    NotPolynomial { power: usize, coefficient: BigInt },
}

/// Four weights and two degrees, written `"w1,w2,w3,w4;d1,d2"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct WeightSystem {
    pub weights: [u64; 4],
    pub degrees: [u64; 2],
}

impl WeightSystem {
    pub fn new(weights: [u64; 4], degrees: [u64; 2]) -> Result<Self, SeriesError> {
        if weights.iter().chain(&degrees).any(|&v| v == 0) {
            return Err(SeriesError::WeightSystem(format!("{weights:?};{degrees:?}")));
        }
        Ok(WeightSystem { weights, degrees })
    }

    /// Degrees in ascending order.
    pub fn sorted_degrees(&self) -> [u64; 2] {
        let mut d = self.degrees;
        d.sort();
        d
    }

    pub fn poincare(&self) -> FrameProduct {
        poincare(self)
    }
}

impl FromStr for WeightSystem {
    type Err = SeriesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SeriesError::WeightSystem(s.to_string());
        let (w, d) = s.split_once(';').ok_or_else(bad)?;
        let nums = |part: &str| -> Result<Vec<u64>, SeriesError> {
            part.split(',')
                .map(|v| v.trim().parse::<u64>().map_err(|_| bad()))
                .collect()
        };
        let w = nums(w)?;
        let d = nums(d)?;
        let weights: [u64; 4] = w.try_into().map_err(|_| bad())?;
        let degrees: [u64; 2] = d.try_into().map_err(|_| bad())?;
        WeightSystem::new(weights, degrees).map_err(|_| bad())
    }
}

impl TryFrom<String> for WeightSystem {
    type Error = SeriesError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<WeightSystem> for String {
    fn from(w: WeightSystem) -> String {
        w.to_string()
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.weights;
        let [e, g] = self.degrees;
        write!(f, "{a},{b},{c},{d};{e},{g}")
    }
}

/// `prod_l (1 - t^l)^{a_l}` with no zero exponent stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct FrameProduct {
    exponents: BTreeMap<u64, i64>,
}

impl FrameProduct {
    pub fn identity() -> Self {
        FrameProduct::default()
    }

    /// Panics on `l = 0`, which would make the factor vanish.
    pub fn from_pairs<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut f = FrameProduct::identity();
        for (l, a) in pairs {
            f.bump(l, a);
        }
        f
    }

    fn bump(&mut self, l: u64, a: i64) {
        assert!(l > 0, "(1 - t^0) is zero");
        if a == 0 {
            return;
        }
        let slot = self.exponents.entry(l).or_insert(0);
        *slot += a;
        if *slot == 0 {
            self.exponents.remove(&l);
        }
    }

    pub fn exponent(&self, l: u64) -> i64 {
        self.exponents.get(&l).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &FrameProduct) -> FrameProduct {
        let mut out = self.clone();
        for (&l, &a) in &other.exponents {
            out.bump(l, a);
        }
        out
    }

    pub fn div(&self, other: &FrameProduct) -> FrameProduct {
        self.mul(&other.inverse())
    }

    pub fn inverse(&self) -> FrameProduct {
        FrameProduct {
            exponents: self.exponents.iter().map(|(&l, &a)| (l, -a)).collect(),
        }
    }

    /// `sum_l l * a_l`, the degree of the rational function.
    pub fn degree(&self) -> i64 {
        self.exponents.iter().map(|(&l, &a)| l as i64 * a).sum()
    }

    /// Exponent at `m` becomes `-a_{d/m}`.
    pub fn saito_dual(&self, d: u64) -> Result<FrameProduct, SeriesError> {
        let mut out = FrameProduct::identity();
        for (&l, &a) in &self.exponents {
            if d == 0 || !d.is_multiple_of(l) {
                return Err(SeriesError::NotDivisor { ell: l, degree: d });
            }
            out.bump(d / l, -a);
        }
        Ok(out)
    }

    /// Taylor coefficients at `t = 0` up to `t^order`.
    pub fn expand(&self, order: usize) -> Vec<BigInt> {
        let mut s = vec![BigInt::zero(); order + 1];
        s[0] = BigInt::one();
        for (&l, &a) in &self.exponents {
            let l = l as usize;
            if l > order {
                continue;
            }
            for _ in 0..a.unsigned_abs() {
                if a > 0 {
                    for i in (l..=order).rev() {
                        let v = s[i - l].clone();
                        s[i] -= v;
                    }
                } else {
                    for i in l..=order {
                        let v = s[i - l].clone();
                        s[i] += v;
                    }
                }
            }
        }
        s
    }

    /// Exact polynomial, if the denominator divides the numerator.
    pub fn to_polynomial(&self) -> Result<IntPolynomial, SeriesError> {
        let mut p = IntPolynomial::one();
        for (&l, &a) in &self.exponents {
            if a > 0 {
                for _ in 0..a {
                    p = p.mul(&IntPolynomial::one_minus_t_pow(l as usize));
                }
            }
        }
        for (&l, &a) in &self.exponents {
            if a < 0 {
                for _ in 0..-a {
                    p = p.div_one_minus_t_pow(l as usize)?;
                }
            }
        }
        Ok(p)
    }
}

pub fn poincare(ws: &WeightSystem) -> FrameProduct {
    FrameProduct::from_pairs(
        ws.degrees
            .iter()
            .map(|&d| (d, 1))
            .chain(ws.weights.iter().map(|&w| (w, -1))),
    )
}

/// `(1 - t)^{-2} prod_i (1 - t^{g_i})`.
pub fn or_polynomial(dolgachev: &[u64; 4]) -> FrameProduct {
    FrameProduct::from_pairs(std::iter::once((1, -2)).chain(dolgachev.iter().map(|&g| (g, 1))))
}

/// A frame together with the bases that were written more than once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedFrame {
    pub frame: FrameProduct,
    pub repeated_bases: Vec<u64>,
}

/// Parses `prod ['/' prod]` with `prod := item ('*' item)*` and
/// `item := uint ['^' uint]`. The middle dot is accepted as a separator.
pub fn parse_frame(text: &str) -> Result<ParsedFrame, SeriesError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let err = |i: usize, message: String| -> SeriesError {
        let position = chars.get(i).map_or(text.len(), |c| c.0) + 1;
        SeriesError::Syntax { position, message }
    };
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    let uint = |i: &mut usize| -> Result<u64, SeriesError> {
        skip_ws(i);
        let start = *i;
        while *i < chars.len() && chars[*i].1.is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            return Err(err(*i, "expected an unsigned integer".into()));
        }
        let s: String = chars[start..*i].iter().map(|c| c.1).collect();
        s.parse::<u64>()
            .map_err(|_| err(start, "integer out of range".into()))
    };

    let mut seen = BTreeMap::new();
    let mut frame = FrameProduct::identity();
    let mut repeated = Vec::new();
    let mut sign = 1i64;
    loop {
        let at = i;
        let l = uint(&mut i)?;
        let mut a = 1u64;
        skip_ws(&mut i);
        if i < chars.len() && chars[i].1 == '^' {
            i += 1;
            a = uint(&mut i)?;
        }
        if l == 0 {
            return Err(err(at, "base must be positive".into()));
        }
        if l > MAX_BASE {
            return Err(SeriesError::BaseTooLarge(l));
        }
        let a = i64::try_from(a).map_err(|_| err(at, "exponent out of range".into()))?;
        if a > 0 {
            if seen.insert(l, ()).is_some() && !repeated.contains(&l) {
                repeated.push(l);
            }
            frame.bump(l, sign * a);
        }
        skip_ws(&mut i);
        match chars.get(i).map(|c| c.1) {
            None => break,
            Some('*') | Some('·') => i += 1,
            Some('/') if sign == 1 => {
                sign = -1;
                i += 1;
            }
            Some(c) => return Err(err(i, format!("unexpected '{c}'"))),
        }
    }
    repeated.sort();
    Ok(ParsedFrame {
        frame,
        repeated_bases: repeated,
    })
}

impl FromStr for FrameProduct {
    type Err = SeriesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_frame(s).map(|p| p.frame)
    }
}

impl TryFrom<String> for FrameProduct {
    type Error = SeriesError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FrameProduct> for String {
    fn from(f: FrameProduct) -> String {
        f.to_string()
    }
}

impl fmt::Display for FrameProduct {
    /// Ascending bases; an empty numerator prints as `1^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |positive: bool| -> Vec<String> {
            self.exponents
                .iter()
                .filter(|(_, &a)| (a > 0) == positive)
                .map(|(&l, &a)| match a.unsigned_abs() {
                    1 => l.to_string(),
                    e => format!("{l}^{e}"),
                })
                .collect()
        };
        let num = side(true);
        let den = side(false);
        if num.is_empty() {
            write!(f, "1^0")?;
        } else {
            write!(f, "{}", num.join("*"))?;
        }
        if !den.is_empty() {
            write!(f, " / {}", den.join("*"))?;
        }
        Ok(())
    }
}

/// Integer polynomial in `t`, coefficients indexed by power. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    /// `1 + t + ... + t^{k-1}`; zero for `k = 0`.
    pub fn geometric(k: usize) -> Self {
        IntPolynomial::new(vec![BigInt::one(); k])
    }

    pub fn one_minus_t_pow(l: usize) -> Self {
        let mut c = vec![BigInt::zero(); l + 1];
        c[0] += 1;
        c[l] -= 1;
        IntPolynomial::new(c)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coefficient(k) + other.coefficient(k)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coefficient(k) - other.coefficient(k)).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }

    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        IntPolynomial::new(c)
    }

    /// Exact quotient by `1 - t^l`.
    pub fn div_one_minus_t_pow(&self, l: usize) -> Result<IntPolynomial, SeriesError> {
        // long division by the monic t^l - 1, then negate
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n <= l {
            return match self.is_zero() {
                true => Ok(IntPolynomial::zero()),
                false => Err(self.remainder_error(&r)),
            };
        }
        let mut quot = vec![BigInt::zero(); n - l];
        for k in (l..n).rev() {
            let c = std::mem::take(&mut r[k]);
            if c.is_zero() {
                continue;
            }
            r[k - l] += &c;
            quot[k - l] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(self.remainder_error(&r));
        }
        Ok(IntPolynomial::new(quot.into_iter().map(|c| -c).collect()))
    }

    fn remainder_error(&self, r: &[BigInt]) -> SeriesError {
        let (power, coefficient) = r
            .iter()
            .enumerate()
            .rev()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .expect("nonzero remainder");
        SeriesError::NotPolynomial { power, coefficient }
    }

    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Comma separated coefficients in ascending powers.
    pub fn coefficient_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let v: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        v.join(",")
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers, e.g. `t^3 - 2*t^2 - 2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let a = c.abs();
            let body = match k {
                0 => a.to_string(),
                _ => {
                    let var = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                    if a.is_one() {
                        var
                    } else {
                        format!("{a}*{var}")
                    }
                }
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(pairs: &[(u64, i64)]) -> FrameProduct {
        FrameProduct::from_pairs(pairs.iter().copied())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn poincare_of_j_prime_weights() {
        let ws: WeightSystem = "2,6,5,4;8,10".parse().unwrap();
        assert_eq!(
            poincare(&ws),
            fp(&[(8, 1), (10, 1), (2, -1), (6, -1), (5, -1), (4, -1)])
        );
    }

    #[test]
    fn poincare_collisions() {
        let ws: WeightSystem = "1,1,1,1;1,1".parse().unwrap();
        assert_eq!(poincare(&ws), fp(&[(1, -2)]));
        let ws: WeightSystem = "2,4,3,3;6,7".parse().unwrap();
        assert_eq!(poincare(&ws), fp(&[(6, 1), (7, 1), (2, -1), (4, -1), (3, -2)]));
    }

    #[test]
    fn weight_system_text() {
        assert!("2,6,5;8,10".parse::<WeightSystem>().is_err());
        assert!("2,6,5,0;8,10".parse::<WeightSystem>().is_err());
        let ws: WeightSystem = "3,4,2,3;7,6".parse().unwrap();
        assert_eq!(ws.to_string(), "3,4,2,3;7,6");
        assert_eq!(ws.sorted_degrees(), [6, 7]);
    }

    #[test]
    fn frame_arithmetic() {
        let a = fp(&[(2, 1), (3, -1)]);
        assert_eq!(a.mul(&FrameProduct::identity()), a);
        assert!(fp(&[(2, 1)]).div(&fp(&[(2, 1)])).is_identity());
        let ws: WeightSystem = "2,6,5,4;8,10".parse().unwrap();
        let got = or_polynomial(&[2, 2, 2, 6]).mul(&poincare(&ws));
        assert_eq!(got, "2^2*8*10 / 1^2*4*5".parse().unwrap());
    }

    #[test]
    fn or_polynomials() {
        assert_eq!(or_polynomial(&[2, 2, 2, 6]), fp(&[(2, 3), (6, 1), (1, -2)]));
        assert_eq!(or_polynomial(&[3, 3, 3, 3]), fp(&[(3, 4), (1, -2)]));
        assert_eq!(or_polynomial(&[1, 1, 1, 1]), fp(&[(1, 2)]));
    }

    #[test]
    fn saito_dual_rule() {
        let f = fp(&[(1, 1), (12, 1), (3, -1)]);
        assert_eq!(f.saito_dual(12).unwrap(), fp(&[(12, -1), (1, -1), (4, 1)]));
        assert_eq!(f.saito_dual(12).unwrap().saito_dual(12).unwrap(), f);
        assert_eq!(
            fp(&[(2, 1)]).saito_dual(5),
            Err(SeriesError::NotDivisor { ell: 2, degree: 5 })
        );
    }

    #[test]
    fn frame_to_polynomial_cases() {
        assert_eq!(FrameProduct::identity().to_polynomial().unwrap(), IntPolynomial::one());
        assert!(matches!(
            fp(&[(1, -1)]).to_polynomial(),
            Err(SeriesError::NotPolynomial { power: 0, .. })
        ));
        let p = fp(&[(2, 2), (8, 1), (10, 1), (1, -2), (4, -1), (5, -1)])
            .to_polynomial()
            .unwrap();
        assert_eq!(p.degree(), Some(11));
        assert_eq!(p, IntPolynomial::from_i64(&[1, 2, 1, 0, 1, 3, 3, 1, 0, 1, 2, 1]));
    }

    #[test]
    fn expansion() {
        let ws: WeightSystem = "2,6,5,4;8,10".parse().unwrap();
        assert_eq!(poincare(&ws).expand(6), ints(&[1, 0, 1, 0, 2, 1, 3]));
        assert_eq!(FrameProduct::identity().expand(3), ints(&[1, 0, 0, 0]));
        assert_eq!(fp(&[(1, 1)]).expand(3), ints(&[1, -1, 0, 0]));
    }

    #[test]
    fn frame_text() {
        let p = parse_frame("2^2*8*10 / 1^2*4*5").unwrap();
        assert_eq!(p.frame, fp(&[(2, 2), (8, 1), (10, 1), (1, -2), (4, -1), (5, -1)]));
        assert!(p.repeated_bases.is_empty());
        assert_eq!(p.frame.to_string(), "2^2*8*10 / 1^2*4*5");
        assert_eq!("6*7 / 1^2".parse::<FrameProduct>().unwrap(), fp(&[(6, 1), (7, 1), (1, -2)]));
        assert_eq!("1".parse::<FrameProduct>().unwrap(), fp(&[(1, 1)]));
        assert_eq!("2^2 · 8 · 10/1^2 · 4 · 5".parse::<FrameProduct>().unwrap(), p.frame);
        assert_eq!(FrameProduct::identity().to_string(), "1^0");
        assert!("1^0".parse::<FrameProduct>().unwrap().is_identity());
        assert_eq!(fp(&[(3, -1)]).to_string(), "1^0 / 3");
        assert_eq!("1^0 / 3".parse::<FrameProduct>().unwrap(), fp(&[(3, -1)]));
    }

    #[test]
    fn frame_text_errors_and_warnings() {
        let p = parse_frame("2*2*3").unwrap();
        assert_eq!(p.frame, fp(&[(2, 2), (3, 1)]));
        assert_eq!(p.repeated_bases, vec![2]);
        assert!(parse_frame("0").is_err());
        assert!(parse_frame("2*").is_err());
        assert!(parse_frame("2/3/4").is_err());
        assert!(parse_frame("").is_err());
        assert_eq!(parse_frame("2000000"), Err(SeriesError::BaseTooLarge(2_000_000)));
    }

    #[test]
    fn int_polynomial_display() {
        let p = IntPolynomial::from_i64(&[1, -2, -2, 1]);
        assert_eq!(p.to_string(), "t^3 - 2*t^2 - 2*t + 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p.coefficient_list(), "1,-2,-2,1");
    }

    #[test]
    fn exact_division_by_cyclotomic_pieces() {
        let p = IntPolynomial::one_minus_t_pow(6);
        let q = p.div_one_minus_t_pow(3).unwrap();
        assert_eq!(q, IntPolynomial::from_i64(&[1, 0, 0, 1]));
        assert!(IntPolynomial::one_minus_t_pow(5).div_one_minus_t_pow(2).is_err());
    }
}
