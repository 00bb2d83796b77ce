//! Weighted `C*`-actions on the zero set of a pair `(h1, h2)`: exceptional
//! orbits, the case (A)/(B)/(C) rules selecting the principal orbits, and the
//! split of `h2` along the faces of its Newton polygon at infinity.
//!
//! Orbits are found stratum by stratum. On the stratum where exactly the
//! coordinates in `T` are nonzero the isotropy group has order
//! `gcd{w_i : i in T}`, so only strata with gcd > 1 matter. Fixing the
//! lowest-weight coordinate of `T` to 1 leaves a zero-dimensional system,
//! solved over the rationals by resultants and rational roots. The slice
//! still carries the action of the `w_s`-th roots of unity, and two rational
//! points are identified when one is a sign-twisted copy of the other.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg;
use crate::poly::{Monomial, Polynomial, Var};
use crate::series::WeightSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("the zero point has no orbit")]
    ZeroPoint,
    #[error("weights must be positive")]
    Weights,
    #[error("pair is not weighted homogeneous for weights {weights:?}: {detail}")]
    NotHomogeneous { weights: [u64; 4], detail: String },
    #[error("system too complex on stratum {stratum}: {detail}")]
    TooComplex { stratum: String, detail: String },
    #[error("expected exactly two principal orbits, found {count}")]
    PrincipalCount { count: usize },
    #[error("orbits with irrational coordinates left unresolved on strata {0}")]
    Unresolved(String),
    #[error("expected exactly two faces off the origin, found {0}")]
    FaceCount(usize),
    #[error("face {0} has fewer than two terms")]
    ThinFace(String),
}

/// `lambda . (x, y, z, w) = (lambda^w1 x, ..., lambda^w4 w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CStarAction {
    pub weights: [u64; 4],
}

impl CStarAction {
    pub fn new(weights: [u64; 4]) -> Result<Self, OrbitError> {
        if weights.contains(&0) {
            return Err(OrbitError::Weights);
        }
        Ok(CStarAction { weights })
    }

    pub fn weight(&self, v: Var) -> u64 {
        self.weights[v.index()]
    }
}

impl From<&WeightSystem> for CStarAction {
    fn from(ws: &WeightSystem) -> Self {
        CStarAction {
            weights: ws.weights,
        }
    }
}

pub type Point = [BigRational; 4];

/// `gcd` of the weights of the nonzero coordinates.
pub fn isotropy_order(action: &CStarAction, point: &Point) -> Result<u64, OrbitError> {
    let g = Var::ALL
        .into_iter()
        .filter(|v| !point[v.index()].is_zero())
        .fold(0u64, |acc, v| acc.gcd(&action.weight(v)));
    if g == 0 {
        Err(OrbitError::ZeroPoint)
    } else {
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRep {
    pub stratum: Vec<Var>,
    #[serde(with = "point_text")]
    pub point: Point,
    pub isotropy: u64,
    pub singular: bool,
}

impl OrbitRep {
    pub fn lies_in(&self, zero: &[Var]) -> bool {
        zero.iter().all(|v| self.point[v.index()].is_zero())
    }
}

fn fmt_q(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_vars(vars: &[Var]) -> String {
    let names: Vec<String> = vars.iter().map(|v| v.name().to_string()).collect();
    format!("{{{}}}", names.join(","))
}

impl fmt::Display for OrbitRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pt: Vec<String> = self.point.iter().map(fmt_q).collect();
        write!(
            f,
            "stratum={} point=({}) isotropy={} singular={}",
            fmt_vars(&self.stratum),
            pt.join(","),
            self.isotropy,
            if self.singular { "yes" } else { "no" }
        )
    }
}

mod point_text {
    use super::{fmt_q, Point};
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = p.iter().map(fmt_q).collect();
        s.collect_seq(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Point, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let q: Result<Vec<BigRational>, _> = v.iter().map(|s| s.parse::<BigRational>()).collect();
        let q = q.map_err(serde::de::Error::custom)?;
        q.try_into()
            .map_err(|_| serde::de::Error::custom("a point has four coordinates"))
    }
}

/// Orbits whose coordinates satisfy an irreducible polynomial of degree > 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnresolvedOrbit {
    pub stratum: Vec<Var>,
    pub isotropy: u64,
    /// Defining polynomial of one coordinate, as text.
    pub polynomial: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitAnalysis {
    pub orbits: Vec<OrbitRep>,
    pub unresolved: Vec<UnresolvedOrbit>,
}

fn check_homogeneous(h: &[&Polynomial], action: &CStarAction) -> Result<(), OrbitError> {
    let w = action.weights;
    for p in h {
        if p.is_zero() {
            continue;
        }
        if let crate::poly::QuasiDegree::Mixed { first, second } =
            p.quasi_degree(&w).expect("nonzero")
        {
            return Err(OrbitError::NotHomogeneous {
                weights: w,
                detail: format!(
                    "{} has degree {} but {} has degree {}",
                    Polynomial::monomial(first.0),
                    first.1,
                    Polynomial::monomial(second.0),
                    second.1
                ),
            });
        }
    }
    Ok(())
}

/// All exceptional orbits of the action on `{h1 = h2 = 0}`.
pub fn exceptional_orbits(
    h1: &Polynomial,
    h2: &Polynomial,
    action: &CStarAction,
) -> Result<OrbitAnalysis, OrbitError> {
    check_homogeneous(&[h1, h2], action)?;
    let mut out = OrbitAnalysis::default();
    for size in 1..=4 {
        for stratum in subsets(size) {
            let g = stratum.iter().fold(0u64, |acc, v| acc.gcd(&action.weight(*v)));
            if g <= 1 {
                continue;
            }
            let slice = *stratum
                .iter()
                .min_by_key(|v| (action.weight(**v), v.index()))
                .expect("nonempty");
            let free: Vec<Var> = stratum.iter().copied().filter(|&v| v != slice).collect();
            let restrict = |p: &Polynomial| {
                let mut q = p.specialize(slice, &BigRational::one());
                for v in Var::ALL {
                    if !stratum.contains(&v) {
                        q = q.specialize(v, &BigRational::zero());
                    }
                }
                q
            };
            let eqs = vec![restrict(h1), restrict(h2)];
            let mut unresolved = Vec::new();
            let sols = solve_nonzero(eqs, &free, &mut unresolved).map_err(|detail| {
                OrbitError::TooComplex {
                    stratum: fmt_vars(&stratum),
                    detail,
                }
            })?;
            for poly in unresolved {
                out.unresolved.push(UnresolvedOrbit {
                    stratum: stratum.clone(),
                    isotropy: g,
                    polynomial: poly.to_string(),
                });
            }
            let mut reps: Vec<Point> = Vec::new();
            for sol in sols {
                let mut pt: Point = Default::default();
                pt[slice.index()] = BigRational::one();
                for (v, val) in sol {
                    pt[v.index()] = val;
                }
                debug_assert!(h1.evaluate(&pt).is_zero() && h2.evaluate(&pt).is_zero());
                if !reps
                    .iter()
                    .any(|r| same_orbit(r, &pt, slice, &free, action))
                {
                    reps.push(pt);
                }
            }
            for pt in reps {
                let singular = jacobian_rank(h1, h2, &pt) < 2;
                out.orbits.push(OrbitRep {
                    stratum: stratum.clone(),
                    point: pt,
                    isotropy: g,
                    singular,
                });
            }
        }
    }
    Ok(out)
}

/// Subsets of the variables of a given size, lexicographically.
fn subsets(size: usize) -> Vec<Vec<Var>> {
    let mut out = Vec::new();
    let mut masks: Vec<u32> = (1u32..16).filter(|m| m.count_ones() as usize == size).collect();
    masks.sort_by_key(|m| (0..4).map(|i| (m >> i) & 1 == 0).collect::<Vec<_>>());
    for m in masks {
        out.push(Var::ALL.into_iter().filter(|v| m >> v.index() & 1 == 1).collect());
    }
    out
}

/// Whether `lambda` with `lambda^{w_s} = 1` maps `p` to `q`.
fn same_orbit(p: &Point, q: &Point, slice: Var, free: &[Var], action: &CStarAction) -> bool {
    let ws = action.weight(slice);
    (0..ws).any(|k| {
        free.iter().all(|&v| {
            let twice = 2 * k * action.weight(v);
            if !twice.is_multiple_of(ws) {
                // lambda^{w_v} is not real, so it cannot match two rationals
                return p[v.index()].is_zero() && q[v.index()].is_zero();
            }
            let sign_flip = (twice / ws) % 2 == 1;
            let image = if sign_flip {
                -p[v.index()].clone()
            } else {
                p[v.index()].clone()
            };
            image == q[v.index()]
        })
    })
}

fn jacobian_rank(h1: &Polynomial, h2: &Polynomial, pt: &Point) -> usize {
    let rows: Vec<Vec<BigRational>> = [h1, h2]
        .iter()
        .map(|h| Var::ALL.iter().map(|&v| h.derivative(v).evaluate(pt)).collect())
        .collect();
    linalg::rank(&rows)
}

type Assignment = Vec<(Var, BigRational)>;

/// Rational solutions with every free coordinate nonzero. Factors without
/// rational roots are pushed to `unresolved`.
fn solve_nonzero(
    eqs: Vec<Polynomial>,
    free: &[Var],
    unresolved: &mut Vec<Polynomial>,
) -> Result<Vec<Assignment>, String> {
    let mut system = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        // free coordinates are nonzero, so monomial factors can be dropped
        let e = e.div_monomial(&e.monomial_content()).expect("content");
        if e.as_constant().is_some() {
            return Ok(Vec::new());
        }
        system.push(e);
    }
    if free.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    if system.is_empty() {
        return Err("the slice is positive dimensional".into());
    }
    if let Some((e, v)) = system.iter().find_map(|e| {
        let vars = e.variables();
        (vars.len() == 1).then(|| (e.clone(), vars[0]))
    }) {
        let (roots, rest) = rational_roots(&e, v);
        if let Some(r) = rest {
            unresolved.push(r);
        }
        let mut out = Vec::new();
        let others: Vec<Var> = free.iter().copied().filter(|&u| u != v).collect();
        for r in roots {
            let sub: Vec<Polynomial> = system.iter().map(|p| p.specialize(v, &r)).collect();
            for mut s in solve_nonzero(sub, &others, unresolved)? {
                s.insert(0, (v, r.clone()));
                out.push(s);
            }
        }
        sort_assignment(&mut out);
        return Ok(out);
    }
    // eliminate a shared variable from the first two equations
    if system.len() < 2 {
        return Err(format!("one equation {} in several unknowns", system[0]));
    }
    let (e1, e2) = (&system[0], &system[1]);
    let Some(&v) = free.iter().find(|&&v| !e1.is_free_of(v) && !e2.is_free_of(v)) else {
        return Err("equations share no unknown".into());
    };
    let r = resultant(e1, e2, v);
    if r.is_zero() {
        return Err(format!("{e1} and {e2} have a common factor"));
    }
    let mut reduced = vec![r];
    reduced.extend(system.iter().skip(2).filter(|p| p.is_free_of(v)).cloned());
    let others: Vec<Var> = free.iter().copied().filter(|&u| u != v).collect();
    let partial = solve_nonzero(reduced, &others, unresolved)?;
    let mut out = Vec::new();
    for part in partial {
        let sub: Vec<Polynomial> = system
            .iter()
            .map(|p| part.iter().fold(p.clone(), |acc, (u, val)| acc.specialize(*u, val)))
            .collect();
        for mut s in solve_nonzero(sub, &[v], unresolved)? {
            s.extend(part.iter().cloned());
            out.push(s);
        }
    }
    sort_assignment(&mut out);
    Ok(out)
}

fn sort_assignment(sols: &mut Vec<Assignment>) {
    for s in sols.iter_mut() {
        s.sort_by_key(|(v, _)| *v);
    }
    sols.sort_by(|a, b| {
        let key = |s: &Assignment| s.iter().map(|(_, q)| q.clone()).collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    sols.dedup();
}

/// Univariate coefficients of `p` in `v`, ascending. `p` must involve only `v`.
fn univariate(p: &Polynomial, v: Var) -> Vec<BigRational> {
    let n = p.degree_in(v).unwrap_or(0) as usize;
    let mut c = vec![BigRational::zero(); n + 1];
    for (m, k) in p.terms() {
        c[m.exponent(v) as usize] += k;
    }
    c
}

fn from_univariate(c: &[BigRational], v: Var) -> Polynomial {
    Polynomial::from_terms(c.iter().enumerate().map(|(k, q)| {
        let mut e = [0u32; 4];
        e[v.index()] = k as u32;
        (q.clone(), Monomial::new(e))
    }))
}

/// Distinct nonzero rational roots, and the cofactor left after removing
/// them if it still has positive degree.
fn rational_roots(p: &Polynomial, v: Var) -> (Vec<BigRational>, Option<Polynomial>) {
    let mut c = univariate(p, v);
    while c.first().is_some_and(Zero::is_zero) {
        c.remove(0);
    }
    let lcm = linalg::common_denominator(&c);
    let ints: Vec<BigInt> = c.iter().map(|q| (q * &lcm).to_integer()).collect();
    let a0 = ints[0].abs();
    let an = ints.last().expect("nonzero").abs();
    let mut roots = Vec::new();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for sign in [1, -1] {
                let r = BigRational::new(BigInt::from(sign) * &num, den.clone());
                if roots.contains(&r) {
                    continue;
                }
                if eval_univariate(&c, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    for r in &roots {
        while c.len() > 1 && eval_univariate(&c, r).is_zero() {
            c = deflate(&c, r);
        }
    }
    roots.sort();
    let rest = (c.len() > 1).then(|| from_univariate(&c, v));
    (roots, rest)
}

fn eval_univariate(c: &[BigRational], t: &BigRational) -> BigRational {
    c.iter().rev().fold(BigRational::zero(), |acc, k| acc * t + k)
}

/// Synthetic division by `(t - r)`, assuming `r` is a root.
fn deflate(c: &[BigRational], r: &BigRational) -> Vec<BigRational> {
    let n = c.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for k in (0..n).rev() {
        carry = &c[k + 1] + carry * r;
        q[k] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.to_u64().expect("coefficients of the slice systems stay small");
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

/// Sylvester resultant of `p` and `q` with respect to `v`.
pub fn resultant(p: &Polynomial, q: &Polynomial, v: Var) -> Polynomial {
    let m = p.degree_in(v).unwrap_or(0) as usize;
    let n = q.degree_in(v).unwrap_or(0) as usize;
    let size = m + n;
    if size == 0 {
        return Polynomial::one();
    }
    let pc: Vec<Polynomial> = (0..=m).rev().map(|k| p.coefficient_in(v, k as u32)).collect();
    let qc: Vec<Polynomial> = (0..=n).rev().map(|k| q.coefficient_in(v, k as u32)).collect();
    let mut rows = vec![vec![Polynomial::zero(); size]; size];
    for i in 0..n {
        for (j, c) in pc.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in qc.iter().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    poly_det(&rows)
}

fn poly_det(m: &[Vec<Polynomial>]) -> Polynomial {
    fn go(m: &[Vec<Polynomial>], row: usize, cols: &mut Vec<usize>) -> Polynomial {
        if row == m.len() {
            return Polynomial::one();
        }
        let mut acc = Polynomial::zero();
        for k in 0..cols.len() {
            let c = cols[k];
            if m[row][c].is_zero() {
                continue;
            }
            cols.remove(k);
            let minor = go(m, row + 1, cols);
            cols.insert(k, c);
            let term = &m[row][c] * &minor;
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
    go(m, 0, &mut (0..m.len()).collect())
}

/// Which exclusion rule selects the principal orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// `{v1 = v2 = 0}` lies in the zero set.
    A(Var, Var),
    /// `(h1, h2) = (g1, z g2)` with `g1` free of `z` and `g2` free of `w`.
    B,
    C,
}

impl Case {
    pub fn marker(&self) -> &'static str {
        match self {
            Case::A(..) => "A",
            Case::B => "B",
            Case::C => "C",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::A(a, b) => write!(f, "A ({a}={b}=0)"),
            Case::B => write!(f, "B"),
            Case::C => write!(f, "C"),
        }
    }
}

pub fn classify_case(h1: &Polynomial, h2: &Polynomial) -> Case {
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b) = (Var::ALL[i], Var::ALL[j]);
            let zero = BigRational::zero();
            let vanishes =
                |p: &Polynomial| p.specialize(a, &zero).specialize(b, &zero).is_zero();
            if vanishes(h1) && vanishes(h2) {
                return Case::A(a, b);
            }
        }
    }
    let z = Monomial::var(Var::Z);
    if !h1.is_zero() && h1.is_free_of(Var::Z) && !h2.is_zero() && h2.monomial_content().exponent(Var::Z) > 0
    {
        let g2 = h2.div_monomial(&z).expect("z divides h2");
        if g2.is_free_of(Var::W) {
            return Case::B;
        }
    }
    Case::C
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DolgachevPair {
    pub case: Case,
    pub orders: (u64, u64),
    pub analysis: OrbitAnalysis,
    pub principal: Vec<OrbitRep>,
}

/// Isotropy orders of the two principal orbits, ascending.
pub fn dolgachev_pair(
    h1: &Polynomial,
    h2: &Polynomial,
    action: &CStarAction,
) -> Result<DolgachevPair, OrbitError> {
    let analysis = exceptional_orbits(h1, h2, action)?;
    if !analysis.unresolved.is_empty() {
        let strata: Vec<String> = analysis
            .unresolved
            .iter()
            .map(|u| fmt_vars(&u.stratum))
            .collect();
        return Err(OrbitError::Unresolved(strata.join(" ")));
    }
    let case = classify_case(h1, h2);
    let principal: Vec<OrbitRep> = analysis
        .orbits
        .iter()
        .filter(|o| match &case {
            Case::A(a, b) => !o.lies_in(&[*a, *b]),
            Case::B => !o.lies_in(&[Var::Z]),
            Case::C => !o.singular,
        })
        .cloned()
        .collect();
    if principal.len() != 2 {
        return Err(OrbitError::PrincipalCount {
            count: principal.len(),
        });
    }
    let mut orders = [principal[0].isotropy, principal[1].isotropy];
    orders.sort();
    Ok(DolgachevPair {
        case,
        orders: (orders[0], orders[1]),
        analysis,
        principal,
    })
}

/// One face of the Newton polygon at infinity: its terms, and the primitive
/// integer weights making them homogeneous of `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonFace {
    #[serde(with = "crate::matfac::poly_text")]
    pub terms: Polynomial,
    pub weights: Vec<BigInt>,
    pub degree: BigInt,
}

impl NewtonFace {
    /// Weight system `(w; deg h1, deg face)` when all weights are positive.
    pub fn weight_system(&self, h1: &Polynomial) -> Option<WeightSystem> {
        let w: Vec<u64> = self.weights.iter().map(|x| x.to_u64()).collect::<Option<_>>()?;
        let w: [u64; 4] = w.try_into().ok()?;
        let d1 = h1.quasi_degree(&w).ok()?.degree()?;
        WeightSystem::new(w, [d1, self.degree.to_u64()?]).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonSplit {
    pub faces: Vec<NewtonFace>,
}

/// Faces of `conv(Supp(h2) + {0})` not containing the origin.
///
/// With `h1` given, only face normals that make `h1` weighted homogeneous
/// are considered, i.e. the polygon is taken in the lattice of exponents
/// modulo the relations among the terms of `h1`. Without it the full
/// exponent space is used. Faces come out sorted by degree, ties by
/// descending weight vector.
pub fn split_newton(h2: &Polynomial, h1: Option<&Polynomial>) -> Result<NewtonSplit, OrbitError> {
    let support: Vec<(Monomial, BigRational)> = h2.terms().map(|(m, c)| (*m, c.clone())).collect();
    let to_q = |m: &Monomial| -> Vec<BigRational> {
        m.exponents().iter().map(|&e| linalg::q(e as i64)).collect()
    };
    // admissible normals: kernel of the exponent differences of h1
    let normals: Vec<Vec<BigRational>> = match h1 {
        Some(h) if h.term_count() > 1 => {
            let ms = h.monomials();
            let base = to_q(&ms[0]);
            let diffs: Vec<Vec<BigRational>> = ms[1..]
                .iter()
                .map(|m| to_q(m).iter().zip(&base).map(|(a, b)| a - b).collect())
                .collect();
            linalg::nullspace(&diffs, 4)
        }
        _ => (0..4)
            .map(|i| (0..4).map(|j| linalg::q((i == j) as i64)).collect())
            .collect(),
    };
    let projected: Vec<Vec<BigRational>> = support
        .iter()
        .map(|(m, _)| {
            let p = to_q(m);
            normals.iter().map(|k| linalg::dot(k, &p)).collect()
        })
        .collect();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for p in &projected {
        let mut trial = basis.clone();
        trial.push(p.clone());
        if linalg::rank(&trial) > basis.len() {
            basis = trial;
        }
    }
    let r = basis.len();
    let mut faces: Vec<(Vec<usize>, Vec<BigRational>)> = Vec::new();
    for subset in index_subsets(support.len(), r) {
        let g: Vec<Vec<BigRational>> = subset
            .iter()
            .map(|&i| basis.iter().map(|b| linalg::dot(b, &projected[i])).collect())
            .collect();
        let Some(d) = linalg::solve(&g, &vec![BigRational::one(); r]) else {
            continue;
        };
        let c: Vec<BigRational> = (0..normals.len())
            .map(|j| (0..r).map(|k| &d[k] * &basis[k][j]).sum())
            .collect();
        let n: Vec<BigRational> = (0..4)
            .map(|i| (0..normals.len()).map(|j| &c[j] * &normals[j][i]).sum())
            .collect();
        let vals: Vec<BigRational> = support.iter().map(|(m, _)| linalg::dot(&n, &to_q(m))).collect();
        if vals.iter().any(|v| v > &BigRational::one()) {
            continue;
        }
        let face: Vec<usize> = (0..support.len()).filter(|&i| vals[i].is_one()).collect();
        if !faces.iter().any(|(f, _)| f == &face) {
            faces.push((face, n));
        }
    }
    let mut out: Vec<NewtonFace> = faces
        .into_iter()
        .map(|(face, n)| {
            let degree = linalg::common_denominator(&n);
            let weights = n.iter().map(|x| (x * &degree).to_integer()).collect();
            let terms = Polynomial::from_terms(face.iter().map(|&i| (support[i].1.clone(), support[i].0)));
            NewtonFace {
                terms,
                weights,
                degree,
            }
        })
        .collect();
    out.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| b.weights.cmp(&a.weights)));
    if out.len() != 2 {
        return Err(OrbitError::FaceCount(out.len()));
    }
    if let Some(f) = out.iter().find(|f| f.terms.term_count() < 2) {
        return Err(OrbitError::ThinFace(f.terms.to_string()));
    }
    Ok(NewtonSplit { faces: out })
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Integer coordinates as a rational point.
pub fn point(coords: [i64; 4]) -> Point {
    coords.map(linalg::q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn act(w: [u64; 4]) -> CStarAction {
        CStarAction::new(w).unwrap()
    }

    #[test]
    fn isotropy_examples() {
        assert_eq!(isotropy_order(&act([2, 4, 3, 3]), &point([0, 0, 1, 0])), Ok(3));
        assert_eq!(isotropy_order(&act([2, 4, 4, 3]), &point([1, 0, -1, 0])), Ok(2));
        assert_eq!(isotropy_order(&act([2, 4, 4, 3]), &point([1, 1, 1, 1])), Ok(1));
        assert_eq!(isotropy_order(&act([2, 4, 4, 3]), &point([0, 0, 0, 0])), Err(OrbitError::ZeroPoint));
    }

    fn summary(a: &OrbitAnalysis) -> Vec<(String, u64, bool)> {
        a.orbits
            .iter()
            .map(|o| (fmt_vars(&o.stratum), o.isotropy, o.singular))
            .collect()
    }

    #[test]
    fn kflat_first_pair_orbits() {
        let a = exceptional_orbits(&p("x*y-w^2"), &p("-x^2*w+x^2*z+y*z"), &act([2, 4, 3, 3])).unwrap();
        assert_eq!(
            summary(&a),
            vec![
                ("{x}".to_string(), 2, false),
                ("{y}".to_string(), 4, false),
                ("{z}".to_string(), 3, true),
            ]
        );
        assert!(a.unresolved.is_empty());
        let d = dolgachev_pair(&p("x*y-w^2"), &p("-x^2*w+x^2*z+y*z"), &act([2, 4, 3, 3])).unwrap();
        assert_eq!(d.case, Case::C);
        assert_eq!(d.orders, (2, 4));
    }

    #[test]
    fn kflat_second_pair_orbits() {
        let h1 = p("x*y-w^2");
        let h2 = p("x^2*z+y*z+z^2");
        let a = exceptional_orbits(&h1, &h2, &act([2, 4, 4, 3])).unwrap();
        let mut iso: Vec<(u64, bool)> = a
            .orbits
            .iter()
            .map(|o| (o.isotropy, o.point[Var::Z.index()].is_zero()))
            .collect();
        iso.sort();
        assert_eq!(iso, vec![(2, false), (2, true), (4, false), (4, true)]);
        let d = dolgachev_pair(&h1, &h2, &act([2, 4, 4, 3])).unwrap();
        assert_eq!(d.case, Case::B);
        assert_eq!(d.orders, (2, 4));
        let pts: Vec<Point> = d.principal.iter().map(|o| o.point.clone()).collect();
        assert!(pts.contains(&point([1, 0, -1, 0])));
        assert!(pts.contains(&point([0, 1, -1, 0])));
    }

    #[test]
    fn l_first_pair_is_case_a() {
        let h1 = p("x*y-z*w");
        let h2 = p("-x^2*w+x*w^2+z^2");
        assert_eq!(classify_case(&h1, &h2), Case::A(Var::X, Var::Z));
        let d = dolgachev_pair(&h1, &h2, &act([2, 3, 3, 2])).unwrap();
        assert_eq!(d.orders, (2, 2));
        let pts: Vec<Point> = d.principal.iter().map(|o| o.point.clone()).collect();
        assert!(pts.contains(&point([1, 0, 0, 0])));
        assert!(pts.contains(&point([1, 0, 0, 1])));
    }

    #[test]
    fn case_b_and_c_examples() {
        assert_eq!(classify_case(&p("x*y-w^2"), &p("x^2*z+y*z+z^2")), Case::B);
        assert_eq!(classify_case(&p("x*y-w^2"), &p("-x^2*z+z^2+x*w^2")), Case::C);
    }

    #[test]
    fn trivial_weights_have_no_exceptional_orbits() {
        let a = exceptional_orbits(&p("x*y-z*w"), &p("x^2+y^2+z^2+w^2"), &act([1, 1, 1, 1])).unwrap();
        assert!(a.orbits.is_empty());
    }

    #[test]
    fn rejects_inhomogeneous_pairs() {
        assert!(matches!(
            exceptional_orbits(&p("x*y-w^2"), &p("x+z^2"), &act([2, 4, 3, 3])),
            Err(OrbitError::NotHomogeneous { .. })
        ));
    }

    #[test]
    fn irrational_orbits_are_reported() {
        // on the stratum {x, z} the slice x = 1 forces z^2 = 2
        let a = exceptional_orbits(&p("y"), &p("z^2-2*x^2"), &act([2, 2, 2, 1])).unwrap();
        assert!(!a.unresolved.is_empty());
        assert!(a.unresolved.iter().any(|u| u.polynomial == "z^2 - 2"));
    }

    #[test]
    fn sign_twins_merge() {
        // z^2 = x^2 with weights (2,.,2,.): (1,0,1,0) and (1,0,-1,0) differ
        let a = exceptional_orbits(&p("y"), &p("z^2-x^2"), &act([2, 2, 2, 1])).unwrap();
        let xz: Vec<&OrbitRep> = a.orbits.iter().filter(|o| o.stratum == vec![Var::X, Var::Z]).collect();
        assert_eq!(xz.len(), 2);
        // weights (4,.,6,.): lambda = i fixes x and flips the sign of z
        let a = exceptional_orbits(&p("y"), &p("z^2-x^3"), &act([4, 1, 6, 1])).unwrap();
        let xz: Vec<&OrbitRep> = a.orbits.iter().filter(|o| o.stratum == vec![Var::X, Var::Z]).collect();
        assert_eq!(xz.len(), 1);
        assert_eq!(xz[0].isotropy, 2);
    }

    #[test]
    fn resultant_of_linear_forms() {
        let r = resultant(&p("x+y"), &p("x-y"), Var::X);
        assert_eq!(r, p("-2*y"));
    }

    #[test]
    fn newton_split_examples() {
        let s = split_newton(&p("-y*z+x*w+z^3+w^2"), Some(&p("x*y-w^2"))).unwrap();
        let terms: Vec<Polynomial> = s.faces.iter().map(|f| f.terms.clone()).collect();
        assert_eq!(terms, vec![p("x*w+z^3+w^2"), p("z^3+w^2-y*z")]);
        let ws: Vec<String> = s
            .faces
            .iter()
            .map(|f| f.weight_system(&p("x*y-w^2")).unwrap().to_string())
            .collect();
        assert_eq!(ws, vec!["3,3,2,3;6,6", "2,4,2,3;6,6"]);

        let s = split_newton(&p("-x^2*z+y*w+z^2+x*w^2"), Some(&p("x*y-w^2"))).unwrap();
        assert_eq!(s.faces[0].terms, p("-x^2*z+z^2+x*w^2"));
        assert_eq!(s.faces[1].terms, p("z^2+x*w^2+y*w"));

        let s = split_newton(&p("-x*w+y*z+z^2+x*z"), Some(&p("x*y-w^3"))).unwrap();
        assert_eq!(s.faces[0].terms, p("-x*w+y*z+x*z"));
        assert_eq!(s.faces[1].terms, p("y*z+x*z+z^2"));
    }

    #[test]
    fn newton_without_h1_sees_a_simplex() {
        assert_eq!(
            split_newton(&p("-y*z+x*w+z^3+w^2"), None),
            Err(OrbitError::FaceCount(1))
        );
    }

    #[test]
    fn report_line() {
        let o = OrbitRep {
            stratum: vec![Var::X, Var::Z],
            point: point([1, 0, -1, 0]),
            isotropy: 2,
            singular: false,
        };
        assert_eq!(o.to_string(), "stratum={x,z} point=(1,0,-1,0) isotropy=2 singular=no");
    }
}
