//! Exponent matrices of polynomials with as many terms as variables:
//! Berglund–Hübsch transposition, canonical weights and the group of
//! diagonal symmetries.
//!
//! Matrices with vanishing determinant are accepted. The four-term
//! polynomials arising from the quadrangle series all have a one-dimensional
//! kernel, and their transposition still makes sense; only the weight solve
//! and the group order need `det E != 0`, and those report
//! [`InvertibleError::Singular`] instead.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, QMatrix};
use crate::poly::{Monomial, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvertibleError {
    #[error("expected {vars} terms for {vars} variables, found {terms}")]
    TermCount { terms: usize, vars: usize },
    #[error("matrix dimension must be between 2 and 4, got {0}")]
    Dimension(usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("term {term} involves variable {var}, which is not active")]
    ForeignVariable { term: String, var: Var },
    #[error("exponent matrix is singular; kernel spanned by {kernel:?}")]
    Singular { kernel: Vec<Vec<BigInt>> },
    #[error("weight solve produced a non-positive component {value} at position {index}")]
    NonPositiveWeight { index: usize, value: BigInt },
}

/// Square exponent matrix with one row per term and one column per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMatrix {
    entries: Vec<Vec<u32>>,
    coefficients: Vec<BigRational>,
}

impl ExponentMatrix {
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self, InvertibleError> {
        let n = entries.len();
        let coefficients = vec![BigRational::one(); n];
        Self::with_coefficients(entries, coefficients)
    }

    pub fn with_coefficients(
        entries: Vec<Vec<u32>>,
        coefficients: Vec<BigRational>,
    ) -> Result<Self, InvertibleError> {
        let n = entries.len();
        if !(2..=4).contains(&n) {
            return Err(InvertibleError::Dimension(n));
        }
        if entries.iter().any(|r| r.len() != n) || coefficients.len() != n {
            return Err(InvertibleError::NotSquare);
        }
        Ok(ExponentMatrix {
            entries,
            coefficients,
        })
    }

    /// Rows follow the canonical (degree-lex, descending) term order.
    pub fn from_polynomial(p: &Polynomial, vars: &[Var]) -> Result<Self, InvertibleError> {
        let terms: Vec<(BigRational, Monomial)> =
            p.terms().map(|(m, c)| (c.clone(), *m)).collect();
        Self::from_terms(&terms, vars)
    }

    /// Rows follow the order of `terms`.
    pub fn from_terms(
        terms: &[(BigRational, Monomial)],
        vars: &[Var],
    ) -> Result<Self, InvertibleError> {
        let n = vars.len();
        if !(2..=4).contains(&n) {
            return Err(InvertibleError::Dimension(n));
        }
        if terms.len() != n {
            return Err(InvertibleError::TermCount {
                terms: terms.len(),
                vars: n,
            });
        }
        let mut entries = Vec::with_capacity(n);
        for (c, m) in terms {
            if let Some(v) = Var::ALL
                .into_iter()
                .find(|v| !vars.contains(v) && m.exponent(*v) > 0)
            {
                return Err(InvertibleError::ForeignVariable {
                    term: Polynomial::term(c.clone(), *m).to_string(),
                    var: v,
                });
            }
            entries.push(vars.iter().map(|&v| m.exponent(v)).collect());
        }
        let coefficients = terms.iter().map(|(c, _)| c.clone()).collect();
        Self::with_coefficients(entries, coefficients)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn row_set(&self) -> BTreeSet<Vec<u32>> {
        self.entries.iter().cloned().collect()
    }

    /// Equality up to a permutation of rows.
    pub fn same_rows(&self, other: &ExponentMatrix) -> bool {
        let mut a = self.entries.clone();
        let mut b = other.entries.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// The polynomial `sum_i a_i prod_j vars[j]^E_ij`.
    pub fn to_polynomial(&self, vars: &[Var]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (row, c) in self.entries.iter().zip(&self.coefficients) {
            let mut e = [0u32; 4];
            for (k, &v) in vars.iter().enumerate() {
                e[v.index()] += row[k];
            }
            p = p + Polynomial::term(c.clone(), Monomial::new(e));
        }
        p
    }

    /// Transposed exponents; row `i` of the transpose keeps coefficient `a_i`.
    pub fn bh_transpose(&self) -> ExponentMatrix {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect();
        ExponentMatrix {
            entries,
            coefficients: self.coefficients.clone(),
        }
    }

    fn rational(&self) -> QMatrix {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&v| linalg::q(v as i64)).collect())
            .collect()
    }

    fn integer(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    pub fn det(&self) -> BigInt {
        linalg::det(&self.rational()).to_integer()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rational())
    }

    /// Primitive integer basis of the rational kernel.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        linalg::nullspace(&self.rational(), self.dim())
            .iter()
            .map(|v| linalg::primitive_integer(v))
            .collect()
    }

    /// Whether `E v = 0`.
    pub fn annihilates(&self, v: &[i64]) -> bool {
        v.len() == self.dim()
            && self
                .entries
                .iter()
                .all(|r| r.iter().zip(v).map(|(&a, &b)| a as i64 * b).sum::<i64>() == 0)
    }

    /// Solves `E w = d 1` with `d = |det E|`.
    pub fn canonical_weights(&self) -> Result<CanonicalWeights, InvertibleError> {
        let d = self.det().abs();
        if d.is_zero() {
            return Err(InvertibleError::Singular {
                kernel: self.kernel(),
            });
        }
        let rhs = vec![BigRational::from_integer(d.clone()); self.dim()];
        let sol = linalg::solve(&self.rational(), &rhs).expect("non-singular solve");
        let mut weights = Vec::with_capacity(sol.len());
        for (i, v) in sol.into_iter().enumerate() {
            let v = v.to_integer();
            if !v.is_positive() {
                return Err(InvertibleError::NonPositiveWeight { index: i, value: v });
            }
            weights.push(v);
        }
        Ok(CanonicalWeights {
            weights,
            degree: d,
            reduced: false,
        })
    }

    /// `q_i = w_i / d` and the order of the exponential grading operator.
    pub fn grading_operator(&self) -> Result<GradingOperator, InvertibleError> {
        let cw = self.canonical_weights()?;
        let q: Vec<BigRational> = cw
            .weights
            .iter()
            .map(|w| BigRational::new(w.clone(), cw.degree.clone()))
            .collect();
        let order = linalg::common_denominator(&q);
        Ok(GradingOperator { q, order })
    }

    /// Invariant factors of the cokernel of `E` over the integers.
    pub fn symmetry_group(&self) -> DiagonalGroup {
        let diag = smith_diagonal(self.integer());
        let free_rank = self.dim() - diag.iter().filter(|d| !d.is_zero()).count();
        let factors: Vec<BigInt> = diag
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect();
        let order = (free_rank == 0).then(|| factors.iter().product());
        DiagonalGroup {
            factors,
            free_rank,
            order,
        }
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Solution of `E w = d 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalWeights {
    pub weights: Vec<BigInt>,
    pub degree: BigInt,
    pub reduced: bool,
}

impl CanonicalWeights {
    /// Divides by `gcd(w_1, .., w_n, d)`.
    pub fn reduce(&self) -> CanonicalWeights {
        let g = self
            .weights
            .iter()
            .fold(self.degree.clone(), |acc, w| acc.gcd(w));
        CanonicalWeights {
            weights: self.weights.iter().map(|w| w / &g).collect(),
            degree: &self.degree / &g,
            reduced: true,
        }
    }

    pub fn as_u64(&self) -> Option<(Vec<u64>, u64)> {
        let w = self.weights.iter().map(ToPrimitive::to_u64).collect::<Option<Vec<_>>>()?;
        Some((w, self.degree.to_u64()?))
    }
}

impl fmt::Display for CanonicalWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(BigInt::to_string).collect();
        write!(f, "{};{}", w.join(","), self.degree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingOperator {
    pub q: Vec<BigRational>,
    pub order: BigInt,
}

/// `factors` omits ones; `order` is `None` when the cokernel has free rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalGroup {
    pub factors: Vec<BigInt>,
    pub free_rank: usize,
    pub order: Option<BigInt>,
}

/// Diagonal of the Smith normal form, in divisibility order, zeros last.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block as pivot
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), rows.min(cols) - t));
            break;
        };
        a.swap(t, pi);
        for r in a.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let qt = a[i][t].div_floor(&a[t][t]);
                if !qt.is_zero() {
                    for j in t..cols {
                        let delta = &qt * &a[t][j];
                        a[i][j] -= delta;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let qt = a[t][j].div_floor(&a[t][t]);
                if !qt.is_zero() {
                    for i in t..rows {
                        let delta = &qt * &a[i][t];
                        a[i][j] -= delta;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row/column t onto the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.1 == t {
                a.swap(t, best.0);
            } else {
                for r in a.iter_mut() {
                    r.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}
