//! Strategies and property bodies shared by the property suite and the
//! acceptance harness.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use sd_core::catalog::Catalog;
use sd_core::invertible::ExponentMatrix;
use sd_core::poly::{parse_poly, Monomial, Polynomial, Substitution};
use sd_core::series::{FrameProduct, WeightSystem};

pub fn coefficient() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::array::uniform4(0..=max_exp).prop_map(Monomial::new)
}

pub fn polynomial(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((coefficient(), monomial(max_exp)), 0..=max_terms)
        .prop_map(Polynomial::from_terms)
}

pub fn small_poly() -> impl Strategy<Value = Polynomial> {
    polynomial(4, 3)
}

pub fn substitution() -> impl Strategy<Value = Substitution> {
    prop::array::uniform4(polynomial(2, 2)).prop_map(Substitution::new)
}

pub fn exponent_matrix() -> impl Strategy<Value = ExponentMatrix> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=6, n), n)
            .prop_map(|rows| ExponentMatrix::new(rows).expect("square"))
    })
}

pub fn frame() -> impl Strategy<Value = FrameProduct> {
    prop::collection::btree_map(1u64..=40, -3i64..=3, 0..6).prop_map(FrameProduct::from_pairs)
}

/// A degree together with a frame whose bases all divide it.
pub fn divisor_frame() -> impl Strategy<Value = (u64, FrameProduct)> {
    (1u64..=72).prop_flat_map(|d| {
        let divisors: Vec<u64> = (1..=d).filter(|l| d % l == 0).collect();
        prop::collection::vec((prop::sample::select(divisors), -3i64..=3), 0..6)
            .prop_map(move |pairs| (d, FrameProduct::from_pairs(pairs)))
    })
}

pub fn ring_axioms(p: &Polynomial, q: &Polynomial, r: &Polynomial) -> Result<(), TestCaseError> {
    let zero = Polynomial::zero();
    let one = Polynomial::one();
    prop_assert_eq!(p + q, q + p);
    prop_assert_eq!(p * q, q * p);
    prop_assert_eq!(&(p + q) + r, p + &(q + r));
    prop_assert_eq!(&(p * q) * r, p * &(q * r));
    prop_assert_eq!(p * &(q + r), &(p * q) + &(p * r));
    prop_assert_eq!(p + &zero, p.clone());
    prop_assert_eq!(p * &one, p.clone());
    prop_assert!((p - p).is_zero());
    prop_assert!((p + &(-p)).is_zero());
    Ok(())
}

pub fn substitution_homomorphism(
    s: &Substitution,
    p: &Polynomial,
    q: &Polynomial,
) -> Result<(), TestCaseError> {
    prop_assert_eq!((p + q).substitute(s), &p.substitute(s) + &q.substitute(s));
    prop_assert_eq!((p * q).substitute(s), &p.substitute(s) * &q.substitute(s));
    prop_assert_eq!(Polynomial::one().substitute(s), Polynomial::one());
    prop_assert_eq!(p.substitute(&Substitution::identity()), p.clone());
    Ok(())
}

pub fn transpose_involution(e: &ExponentMatrix) -> Result<(), TestCaseError> {
    let back = e.bh_transpose().bh_transpose();
    prop_assert_eq!(back.rows(), e.rows());
    Ok(())
}

pub fn saito_involution(d: u64, f: &FrameProduct) -> Result<(), TestCaseError> {
    let dual = f.saito_dual(d).expect("bases divide d");
    prop_assert_eq!(&dual.saito_dual(d).expect("bases divide d"), f);
    Ok(())
}

pub fn poly_round_trip(p: &Polynomial) -> Result<(), TestCaseError> {
    let text = p.to_string();
    let back = parse_poly(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(&back, p);
    Ok(())
}

pub fn frame_round_trip(f: &FrameProduct) -> Result<(), TestCaseError> {
    let text = f.to_string();
    let back: FrameProduct = text
        .parse()
        .map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(&back, f);
    Ok(())
}

/// Every weight system stored in the catalog, deduplicated.
pub fn catalog_weight_systems(cat: &Catalog) -> Vec<WeightSystem> {
    let mut out: Vec<WeightSystem> = Vec::new();
    for e in &cat.entries {
        let mut all = vec![e.k0.weights, e.dual_k0_weights];
        all.extend(e.k0.family.as_ref().map(|t| t.weights));
        all.extend(e.decomposition.iter().map(|d| d.weights));
        for w in all {
            if !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

/// The first coefficient below zero, if any, up to `t^order`.
pub fn first_negative(ws: &WeightSystem, order: usize) -> Option<(usize, BigInt)> {
    ws.poincare()
        .expand(order)
        .into_iter()
        .enumerate()
        .find(|(_, c)| c < &BigInt::from(0))
}
