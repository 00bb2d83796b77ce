//! The eight virtual series as data, and a verification engine that replays
//! every identity relating the tables to each other.
//!
//! The catalog is JSON (`"schema": 1`). Polynomials, frames and weight
//! systems are written in the text grammars of [`crate::poly`] and
//! [`crate::series`]; catalog polynomials may additionally use the moduli
//! `a1..a4`, bound at load time. Everything is parsed and the structural
//! invariants (unique names, duality is an involution, `sum gamma = 12`,
//! `3 + sum M_j = 13`) are checked by [`Catalog::from_json_str`].

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{charpoly_pi, charpoly_s, GabrielovQuadruple};
use crate::invertible::ExponentMatrix;
use crate::matfac::{self, CompleteIntersectionPair, FactorizationTriple};
use crate::orbits::{self, CStarAction};
use crate::poly::{
    parse_poly, parse_poly_with_params, parse_term_list, Monomial, Polynomial, QuasiDegree,
    Substitution, Var,
};
use crate::series::{or_polynomial, poincare, FrameProduct, IntPolynomial, WeightSystem};

/// The catalog shipped with the crate.
pub const SHIPPED_CATALOG: &str = include_str!("../data/catalog.json");

pub const SCHEMA_VERSION: u32 = 1;

pub const CHECK_NAMES: [&str; 10] = [
    "matfac identity",
    "coordinate change",
    "substitution",
    "kernel",
    "BH duality",
    "quasi-homogeneity",
    "Newton split",
    "Dolgachev numbers",
    "zeta function",
    "strange duality",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {message}")]
    Io { path: String, message: String },
    #[error("catalog schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("unsupported catalog schema version {0} (expected {SCHEMA_VERSION})")]
    Version(u32),
    #[error("entry {entry}: field {field}: {message}")]
    Field {
        entry: String,
        field: String,
        message: String,
    },
    #[error("entry {entry}: {message}")]
    Invariant { entry: String, message: String },
    #[error("duplicate entry name {0}")]
    Duplicate(String),
    #[error("no catalog entry named {0}")]
    UnknownEntry(String),
}

/// Four positive integers grouped as two pairs, `"a,b;c,d"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Quadruple(pub [u64; 4]);

impl Quadruple {
    pub fn pairs(&self) -> [[u64; 2]; 2] {
        let [a, b, c, d] = self.0;
        [[a, b], [c, d]]
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Equal as pairs of pairs after sorting within each pair, with the two
    /// pairs allowed to swap.
    pub fn matches_up_to_pair_swap(&self, other: &Quadruple) -> bool {
        let norm = |q: &Quadruple| {
            q.pairs().map(|mut p| {
                p.sort();
                p
            })
        };
        let (a, b) = (norm(self), norm(other));
        a == b || a == [b[1], b[0]]
    }

    pub fn gabrielov(&self) -> GabrielovQuadruple {
        GabrielovQuadruple(self.0)
    }
}

impl FromStr for Quadruple {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected \"a,b;c,d\" with positive integers, got {s:?}");
        let (l, r) = s.split_once(';').ok_or_else(bad)?;
        let nums: Vec<u64> = l
            .split(',')
            .chain(r.split(','))
            .map(|v| v.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let q: [u64; 4] = nums.try_into().map_err(|_| bad())?;
        if q.contains(&0) {
            return Err(bad());
        }
        Ok(Quadruple(q))
    }
}

impl TryFrom<String> for Quadruple {
    type Error = String;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Quadruple> for String {
    fn from(q: Quadruple) -> String {
        q.to_string()
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a},{b};{c},{d}")
    }
}

/// A multiplicity written `base` or `base+extra`, e.g. `"3+1"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Annotated {
    pub base: u64,
    pub extra: u64,
}

impl Annotated {
    pub fn total(&self) -> u64 {
        self.base + self.extra
    }
}

impl FromStr for Annotated {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected \"n\" or \"n+k\", got {s:?}");
        let num = |v: &str| v.trim().parse::<u64>().map_err(|_| bad());
        match s.split_once('+') {
            Some((b, e)) => Ok(Annotated {
                base: num(b)?,
                extra: num(e)?,
            }),
            None => Ok(Annotated {
                base: num(s)?,
                extra: 0,
            }),
        }
    }
}

impl TryFrom<String> for Annotated {
    type Error = String;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Annotated> for String {
    fn from(a: Annotated) -> String {
        a.to_string()
    }
}

impl fmt::Display for Annotated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.extra == 0 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}+{}", self.base, self.extra)
        }
    }
}

/// One orbit as listed in the table of exceptional orbits: `~` marks an
/// orbit that does not occur, `!` a principal one, `*` a singular point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitMark {
    pub order: u64,
    pub struck: bool,
    pub principal: bool,
    pub singular: bool,
}

impl FromStr for OrbitMark {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (struck, rest) = match s.strip_prefix('~') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let digits = rest.trim_end_matches(['!', '*']);
        let flags = &rest[digits.len()..];
        let order = digits
            .parse::<u64>()
            .map_err(|_| format!("bad orbit token {s:?}"))?;
        Ok(OrbitMark {
            order,
            struck,
            principal: flags.contains('!'),
            singular: flags.contains('*'),
        })
    }
}

impl fmt::Display for OrbitMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.struck {
            write!(f, "~")?;
        }
        write!(f, "{}", self.order)?;
        if self.singular {
            write!(f, "*")?;
        }
        if self.principal {
            write!(f, "!")?;
        }
        Ok(())
    }
}

// ---- raw file layout -------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    schema: u32,
    substitution_cases: BTreeMap<String, RawCase>,
    entries: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    relation: String,
    map: BTreeMap<String, String>,
    kernel: [i64; 4],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    id: String,
    name: String,
    dual: String,
    k0: RawK0,
    parent: RawParent,
    #[serde(rename = "virtual")]
    virtual_: RawVirtual,
    decomposition: [RawPiece; 2],
    dolgachev: Quadruple,
    gabrielov: Quadruple,
    zeta: FrameProduct,
    dual_k0_weights: WeightSystem,
    thimbles: RawThimbles,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawK0 {
    name: String,
    family: Option<RawFamily>,
    weights: WeightSystem,
    fq: [String; 2],
    fq_replacement: Option<RawReplacement>,
    substitution_case: String,
    f: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    equations: [String; 2],
    restrictions: String,
    modulus: String,
    dolgachev: [u64; 4],
    weights: WeightSystem,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawReplacement {
    from: String,
    to: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParent {
    name: String,
    #[serde(rename = "type")]
    kind: String,
    exponents: String,
    f: String,
    moduli: [String; 4],
    coordinate_change: BTreeMap<String, String>,
    matfac: RawTriple,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTriple {
    a: String,
    b: String,
    c: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVirtual {
    wall_equations: [String; 2],
    coordinate_change: BTreeMap<String, String>,
    hypersurface: Option<RawHypersurface>,
    matfac: RawTriple,
    equations: [String; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHypersurface {
    name: String,
    f: String,
    h: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPiece {
    h2: String,
    weights: WeightSystem,
    wall_type: String,
    case: String,
    orbits: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawThimbles {
    germ: String,
    m2: Annotated,
    m4: Annotated,
    m5: Annotated,
    m6: Annotated,
    m7: Annotated,
    gabrielov: [Annotated; 4],
}

// ---- parsed catalog --------------------------------------------------------

/// A substitution of type (a)-(d) with its kernel vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionCase {
    pub label: String,
    pub relation: Polynomial,
    pub map: Substitution,
    pub kernel: [i64; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KZeroFamily {
    pub equations: CompleteIntersectionPair,
    pub restrictions: String,
    /// Sample value used for the modulus `a`; irrelevant for the weights.
    pub modulus: BigRational,
    pub dolgachev: [u64; 4],
    pub weights: WeightSystem,
}

/// The `k = 0` member of the series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KZero {
    pub name: String,
    pub family: Option<KZeroFamily>,
    /// Weights of `fq` in its own coordinates.
    pub weights: WeightSystem,
    pub fq: CompleteIntersectionPair,
    pub fq_replacement: Option<(Polynomial, Polynomial)>,
    pub substitution_case: String,
    pub f: Polynomial,
    /// `f` in the order printed, which fixes the rows of its exponent matrix.
    pub f_terms: Vec<(BigRational, Monomial)>,
}

/// The hypersurface series the entry is obtained from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parent {
    pub name: String,
    pub kind: String,
    pub exponents: String,
    pub f_template: String,
    pub moduli: [BigRational; 4],
    /// `f` with the moduli substituted, in its own variables `x, y, z`.
    pub f: Polynomial,
    pub coordinate_change: Substitution,
    /// Factorization of `f` after the coordinate change, moduli substituted.
    pub matfac: FactorizationTriple,
    /// The same with every modulus equal to 1.
    pub matfac_generic: FactorizationTriple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualHypersurface {
    pub name: String,
    pub f: Polynomial,
    pub h: Polynomial,
}

/// The `k = -1` member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Virtual {
    pub wall_equations: CompleteIntersectionPair,
    pub coordinate_change: Substitution,
    pub hypersurface: Option<VirtualHypersurface>,
    pub matfac: FactorizationTriple,
    pub equations: CompleteIntersectionPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionPiece {
    pub h2: Polynomial,
    pub weights: WeightSystem,
    pub wall_type: String,
    pub case: String,
    pub orbits: Vec<OrbitMark>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thimbles {
    pub germ: String,
    /// `M_2, M_4, M_5, M_6, M_7`; the others are 1.
    pub multiplicities: [Annotated; 5],
    pub gabrielov: [Annotated; 4],
}

impl Thimbles {
    pub fn total(&self) -> u64 {
        3 + self.multiplicities.iter().map(Annotated::total).sum::<u64>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesEntry {
    pub id: String,
    pub name: String,
    pub dual: String,
    pub k0: KZero,
    pub parent: Parent,
    pub virtual_: Virtual,
    pub decomposition: [DecompositionPiece; 2],
    pub dolgachev: Quadruple,
    pub gabrielov: Quadruple,
    pub zeta: FrameProduct,
    pub dual_k0_weights: WeightSystem,
    pub thimbles: Thimbles,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub cases: BTreeMap<String, SubstitutionCase>,
    pub entries: Vec<SeriesEntry>,
}

struct Ctx<'a> {
    entry: &'a str,
}

impl Ctx<'_> {
    fn err(&self, field: &str, message: impl fmt::Display) -> CatalogError {
        CatalogError::Field {
            entry: self.entry.to_string(),
            field: field.to_string(),
            message: message.to_string(),
        }
    }

    fn poly(&self, field: &str, text: &str) -> Result<Polynomial, CatalogError> {
        parse_poly(text).map_err(|e| self.err(field, e))
    }

    fn poly_with(&self, field: &str, text: &str, params: &[BigRational]) -> Result<Polynomial, CatalogError> {
        parse_poly_with_params(text, params).map_err(|e| self.err(field, e))
    }

    fn pair(&self, field: &str, texts: &[String; 2]) -> Result<CompleteIntersectionPair, CatalogError> {
        Ok(CompleteIntersectionPair::new(
            self.poly(&format!("{field}[0]"), &texts[0])?,
            self.poly(&format!("{field}[1]"), &texts[1])?,
        ))
    }

    fn substitution(
        &self,
        field: &str,
        map: &BTreeMap<String, String>,
    ) -> Result<Substitution, CatalogError> {
        let mut s = Substitution::identity();
        for (k, v) in map {
            let mut chars = k.chars();
            let var = match (chars.next().and_then(Var::from_char), chars.next()) {
                (Some(var), None) => var,
                _ => return Err(self.err(field, format!("`{k}` is not a variable"))),
            };
            s = s.with(var, self.poly(&format!("{field}.{k}"), v)?);
        }
        Ok(s)
    }

    fn triple(
        &self,
        field: &str,
        t: &RawTriple,
        params: &[BigRational],
    ) -> Result<FactorizationTriple, CatalogError> {
        let a = self.poly_with(&format!("{field}.a"), &t.a, params)?;
        let b = self.poly_with(&format!("{field}.b"), &t.b, params)?;
        let c = self.poly_with(&format!("{field}.c"), &t.c, params)?;
        FactorizationTriple::new(a, b, c).map_err(|e| self.err(field, e))
    }
}

fn parse_entry(raw: RawEntry, cases: &BTreeMap<String, SubstitutionCase>) -> Result<SeriesEntry, CatalogError> {
    let cx = Ctx { entry: &raw.id };

    let family = match &raw.k0.family {
        None => None,
        Some(t) => {
            let modulus: BigRational = t
                .modulus
                .parse()
                .map_err(|e| cx.err("k0.family.modulus", e))?;
            let params = [modulus.clone()];
            Some(KZeroFamily {
                equations: CompleteIntersectionPair::new(
                    cx.poly_with("k0.family.equations[0]", &t.equations[0], &params)?,
                    cx.poly_with("k0.family.equations[1]", &t.equations[1], &params)?,
                ),
                restrictions: t.restrictions.clone(),
                modulus,
                dolgachev: t.dolgachev,
                weights: t.weights,
            })
        }
    };
    if !cases.contains_key(&raw.k0.substitution_case) {
        return Err(cx.err(
            "k0.substitution_case",
            format!("unknown case `{}`", raw.k0.substitution_case),
        ));
    }
    let f_terms = parse_term_list(&raw.k0.f).map_err(|e| cx.err("k0.f", e))?;
    let fq_replacement = match &raw.k0.fq_replacement {
        None => None,
        Some(r) => Some((
            cx.poly("k0.fq_replacement.from", &r.from)?,
            cx.poly("k0.fq_replacement.to", &r.to)?,
        )),
    };
    let k0 = KZero {
        name: raw.k0.name.clone(),
        family,
        weights: raw.k0.weights,
        fq: cx.pair("k0.fq", &raw.k0.fq)?,
        fq_replacement,
        substitution_case: raw.k0.substitution_case.clone(),
        f: Polynomial::from_terms(f_terms.clone()),
        f_terms,
    };

    let p = &raw.parent;
    let moduli: Vec<BigRational> = p
        .moduli
        .iter()
        .enumerate()
        .map(|(i, m)| m.parse().map_err(|e| cx.err(&format!("parent.moduli[{i}]"), e)))
        .collect::<Result<_, _>>()?;
    let ones = vec![BigRational::one(); 4];
    let parent = Parent {
        name: p.name.clone(),
        kind: p.kind.clone(),
        exponents: p.exponents.clone(),
        f_template: p.f.clone(),
        f: cx.poly_with("parent.f", &p.f, &moduli)?,
        moduli: moduli.clone().try_into().expect("four moduli"),
        coordinate_change: cx.substitution("parent.coordinate_change", &p.coordinate_change)?,
        matfac: cx.triple("parent.matfac", &p.matfac, &moduli)?,
        matfac_generic: cx.triple("parent.matfac", &p.matfac, &ones)?,
    };

    let v = &raw.virtual_;
    let hypersurface = match &v.hypersurface {
        None => None,
        Some(t) => Some(VirtualHypersurface {
            name: t.name.clone(),
            f: cx.poly("virtual.hypersurface.f", &t.f)?,
            h: cx.poly("virtual.hypersurface.h", &t.h)?,
        }),
    };
    let virtual_ = Virtual {
        wall_equations: cx.pair("virtual.wall_equations", &v.wall_equations)?,
        coordinate_change: cx.substitution("virtual.coordinate_change", &v.coordinate_change)?,
        hypersurface,
        matfac: cx.triple("virtual.matfac", &v.matfac, &[])?,
        equations: cx.pair("virtual.equations", &v.equations)?,
    };

    let mut pieces = Vec::with_capacity(2);
    for (i, piece) in raw.decomposition.iter().enumerate() {
        let field = format!("decomposition[{i}]");
        let orbits = piece
            .orbits
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<OrbitMark>, _>>()
            .map_err(|e| cx.err(&format!("{field}.orbits"), e))?;
        if !["A", "B", "C"].contains(&piece.case.as_str()) {
            return Err(cx.err(&format!("{field}.case"), "expected A, B or C"));
        }
        pieces.push(DecompositionPiece {
            h2: cx.poly(&format!("{field}.h2"), &piece.h2)?,
            weights: piece.weights,
            wall_type: piece.wall_type.clone(),
            case: piece.case.clone(),
            orbits,
        });
    }

    let t = &raw.thimbles;
    Ok(SeriesEntry {
        id: raw.id.clone(),
        name: raw.name.clone(),
        dual: raw.dual.clone(),
        k0,
        parent,
        virtual_,
        decomposition: pieces.try_into().expect("two pieces"),
        dolgachev: raw.dolgachev,
        gabrielov: raw.gabrielov,
        zeta: raw.zeta.clone(),
        dual_k0_weights: raw.dual_k0_weights,
        thimbles: Thimbles {
            germ: t.germ.clone(),
            multiplicities: [t.m2, t.m4, t.m5, t.m6, t.m7],
            gabrielov: t.gabrielov,
        },
    })
}

/// Folds the typographic variants of series names onto the ASCII ids.
fn normalize_name(s: &str) -> String {
    s.trim()
        .replace('♭', "b")
        .replace('♯', "#")
        .replace(['′', '’'], "'")
        .to_lowercase()
}

impl Catalog {
    pub fn shipped() -> Catalog {
        Catalog::from_json_str(SHIPPED_CATALOG).expect("shipped catalog is valid")
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Catalog::from_json_str(&text)
    }

    pub fn from_json_str(text: &str) -> Result<Catalog, CatalogError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawCatalog = serde_path_to_error::deserialize(de).map_err(|e| CatalogError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
        if raw.schema != SCHEMA_VERSION {
            return Err(CatalogError::Version(raw.schema));
        }
        let mut cases = BTreeMap::new();
        for (label, c) in &raw.substitution_cases {
            let cx = Ctx {
                entry: &format!("case {label}"),
            };
            cases.insert(
                label.clone(),
                SubstitutionCase {
                    label: label.clone(),
                    relation: cx.poly("relation", &c.relation)?,
                    map: cx.substitution("map", &c.map)?,
                    kernel: c.kernel,
                },
            );
        }
        let mut entries = Vec::with_capacity(raw.entries.len());
        for e in raw.entries {
            let entry = parse_entry(e, &cases)?;
            if entries.iter().any(|o: &SeriesEntry| o.id == entry.id) {
                return Err(CatalogError::Duplicate(entry.id));
            }
            entries.push(entry);
        }
        let catalog = Catalog { cases, entries };
        catalog.validate()?;
        Ok(catalog)
    }

    fn validate(&self) -> Result<(), CatalogError> {
        for e in &self.entries {
            let inv = |message: String| CatalogError::Invariant {
                entry: e.id.clone(),
                message,
            };
            let dual = self
                .by_id(&e.dual)
                .ok_or_else(|| inv(format!("dual `{}` is not in the catalog", e.dual)))?;
            if dual.dual != e.id {
                return Err(inv(format!(
                    "duality is not an involution: dual is {}, whose dual is {}",
                    dual.id, dual.dual
                )));
            }
            if e.gabrielov.sum() != 12 {
                return Err(inv(format!(
                    "Gabrielov numbers {} sum to {}, not 12",
                    e.gabrielov,
                    e.gabrielov.sum()
                )));
            }
            let gamma: u64 = e.thimbles.gabrielov.iter().map(Annotated::total).sum();
            if gamma != 12 {
                return Err(inv(format!("thimble Gabrielov numbers sum to {gamma}, not 12")));
            }
            if e.thimbles.total() != 13 {
                return Err(inv(format!(
                    "3 + M2 + M4 + M5 + M6 + M7 = {}, not 13",
                    e.thimbles.total()
                )));
            }
        }
        Ok(())
    }

    pub fn by_id(&self, id: &str) -> Option<&SeriesEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Looks an entry up by id or display name; `♭`, `♯` and primes may be
    /// written as `b`, `#` and `'`, and case is ignored.
    pub fn get(&self, name: &str) -> Result<&SeriesEntry, CatalogError> {
        let key = normalize_name(name);
        self.entries
            .iter()
            .find(|e| normalize_name(&e.id) == key || normalize_name(&e.name) == key)
            .ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
    }

    pub fn case(&self, e: &SeriesEntry) -> &SubstitutionCase {
        &self.cases[&e.k0.substitution_case]
    }
}

impl fmt::Display for SeriesEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.virtual_;
        writeln!(f, "{} ({})", self.name, self.id)?;
        writeln!(f, "  dual:                {}", self.dual)?;
        writeln!(f, "  k=0 member:          {}", self.k0.name)?;
        if let Some(t) = &self.k0.family {
            writeln!(
                f,
                "  k=0 equations:       ({}, {}) [a = modulus; {}]",
                t.equations.first, t.equations.second, t.restrictions
            )?;
        }
        writeln!(f, "  k=0 weights:         {}", self.k0.weights)?;
        writeln!(f, "  F_Q:                 {}", self.k0.fq)?;
        writeln!(
            f,
            "  substitution case:   ({}) -> f = {}",
            self.k0.substitution_case, self.k0.f
        )?;
        writeln!(
            f,
            "  parent:              {} of type {}, f = {}",
            self.parent.name, self.parent.kind, self.parent.f
        )?;
        writeln!(f, "  coordinate change:   {}", v.coordinate_change)?;
        writeln!(f, "  matrix factorization: {}", v.matfac)?;
        writeln!(f, "  virtual equations:   {}", v.equations)?;
        for (i, d) in self.decomposition.iter().enumerate() {
            let marks: Vec<String> = d.orbits.iter().map(ToString::to_string).collect();
            writeln!(
                f,
                "  h2,{}:                {}; {} ({}, case {}, orbits {})",
                i + 1,
                d.h2,
                d.weights,
                d.wall_type,
                d.case,
                marks.join(",")
            )?;
        }
        writeln!(f, "  Dolgachev numbers:   {}", self.dolgachev)?;
        writeln!(f, "  Gabrielov numbers:   {}", self.gabrielov)?;
        writeln!(f, "  zeta frame:          {}", self.zeta)?;
        writeln!(f, "  dual k=0 weights:    {}", self.dual_k0_weights)?;
        let m: Vec<String> = self.thimbles.multiplicities.iter().map(ToString::to_string).collect();
        let g: Vec<String> = self.thimbles.gabrielov.iter().map(ToString::to_string).collect();
        write!(
            f,
            "  thimbles:            germ {}, M2,M4..M7 = {}, gamma = {}",
            self.thimbles.germ,
            m.join(","),
            g.join(",")
        )
    }
}

// ---- verification ----------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub number: u8,
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
    pub failures: Vec<String>,
    /// Observations that do not affect the verdict.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub entry: String,
    pub name: String,
    pub checks: Vec<CheckResult>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, number: u8) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.number == number)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub total: usize,
    pub warnings: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn summary(&self) -> String {
        format!("{}/{} checks passed", self.passed, self.total)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        for e in &self.entries {
            writeln!(f, "{} ({})", e.name, e.entry)?;
            for c in &e.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(f, "  [{tag}] ({}) {}", c.number, c.name)?;
                for w in &c.witnesses {
                    writeln!(f, "      {w}")?;
                }
                for w in &c.failures {
                    writeln!(f, "      failure: {w}")?;
                }
                for w in &c.notes {
                    writeln!(f, "      note: {w}")?;
                }
            }
        }
        write!(f, "{}", self.summary())
    }
}

#[derive(Default)]
struct Check {
    witnesses: Vec<String>,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn ok(&mut self, s: impl Into<String>) {
        self.witnesses.push(s.into());
    }

    fn fail(&mut self, s: impl Into<String>) {
        self.failures.push(s.into());
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Records `what` as a witness or a failure.
    fn expect(&mut self, cond: bool, what: impl Into<String>) {
        if cond {
            self.ok(what)
        } else {
            self.fail(what)
        }
    }

    fn finish(self, number: u8) -> CheckResult {
        CheckResult {
            number,
            name: CHECK_NAMES[number as usize - 1].to_string(),
            passed: self.failures.is_empty(),
            witnesses: self.witnesses,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

fn xzw() -> Polynomial {
    Polynomial::monomial(Monomial::new([1, 0, 1, 1]))
}

fn cmp_text(label: &str, got: &impl fmt::Display, want: &impl fmt::Display) -> String {
    format!("{label}: {got} (expected {want})")
}

fn check_matfac(e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let v = &e.virtual_;
    let h = match matfac::verify_factorization(&v.matfac) {
        Ok(h) => {
            c.ok(format!("q0 q1 = q1 q0 = ({h}) I for {}", v.matfac));
            h
        }
        Err(err) => {
            c.fail(err.to_string());
            return c;
        }
    };
    let lifted = matfac::lift_normalized(&v.matfac);
    c.expect(lifted == v.equations, cmp_text("lift", &lifted, &v.equations));
    match matfac::reduce(&v.equations) {
        Ok(r) => c.expect(r == h, cmp_text("reduce of the printed pair", &r, &h)),
        Err(err) => c.fail(format!("reduce of the printed pair: {err}")),
    }
    match matfac::factorizations(&h) {
        Ok(all) => c.expect(
            all.iter().any(|t| t.equivalent_up_to_scalar(&v.matfac)),
            format!("{} is among the {} factorizations of h", v.matfac, all.len()),
        ),
        Err(err) => c.fail(format!("factorizations of h: {err}")),
    }
    let p = &e.parent;
    match matfac::verify_factorization(&p.matfac) {
        Ok(f0) => {
            let want = p.f.substitute(&p.coordinate_change);
            c.expect(
                f0 == want,
                cmp_text(&format!("k=0 factorization of {}", p.name), &f0, &want),
            );
        }
        Err(err) => c.fail(format!("k=0 factorization: {err}")),
    }
    c
}

fn check_coordinate_change(e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let p = &e.parent;
    let v = &e.virtual_;
    let f = p.f.substitute(&p.coordinate_change);
    let h = v.matfac.polynomial();
    if let Some(t5) = &v.hypersurface {
        c.expect(t5.f == f, cmp_text(&format!("{} f", t5.name), &t5.f, &f));
        c.expect(t5.h == h, cmp_text(&format!("{} h", t5.name), &t5.h, &h));
    } else {
        c.note(format!(
            "coordinates differ from the printed {} row; the change is transported",
            p.name
        ));
    }
    let got = (&f - &xzw()).substitute(&v.coordinate_change);
    let want = &h - &xzw();
    c.expect(
        got == want,
        cmp_text(&format!("(f - xzw) under {}", v.coordinate_change), &got, &want),
    );
    c
}

fn check_substitution(cat: &Catalog, e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let case = cat.case(e);
    let k0 = &e.k0;
    c.expect(
        k0.fq.first == case.relation,
        cmp_text("first equation of F_Q", &k0.fq.first, &case.relation),
    );
    let rel = case.relation.substitute(&case.map);
    c.expect(rel.is_zero(), cmp_text("relation under the substitution", &rel, &0));
    let got = k0.fq.second.substitute(&case.map);
    c.expect(
        got == k0.f,
        cmp_text(&format!("F_Q,2 under case ({})", case.label), &got, &k0.f),
    );
    let mut lifted = matfac::lift_normalized(&e.parent.matfac_generic);
    if let Some((from, to)) = &k0.fq_replacement {
        let has_all = from
            .terms()
            .all(|(m, coef)| &lifted.second.coefficient(m) == coef);
        if !has_all {
            c.fail(format!("replacement: {from} does not occur in {}", lifted.second));
        }
        lifted.second = &(&lifted.second - from) + to;
        c.note(format!("{from} replaced by {to} in the lifted pair"));
    }
    c.expect(
        lifted == k0.fq,
        cmp_text("lift of the k=0 factorization", &lifted, &k0.fq),
    );
    c
}

fn exponent_matrix(e: &SeriesEntry) -> Result<ExponentMatrix, String> {
    ExponentMatrix::from_terms(&e.k0.f_terms, &Var::ALL).map_err(|err| err.to_string())
}

fn check_kernel(cat: &Catalog, e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let kernel = cat.case(e).kernel;
    let m = match exponent_matrix(e) {
        Ok(m) => m,
        Err(err) => {
            c.fail(err);
            return c;
        }
    };
    c.expect(m.annihilates(&kernel), format!("E annihilates {kernel:?}"));
    let computed = m.kernel();
    let want: Vec<BigInt> = kernel.iter().map(|&k| BigInt::from(k)).collect();
    let neg: Vec<BigInt> = want.iter().map(|k| -k).collect();
    c.expect(
        computed.len() == 1 && (computed[0] == want || computed[0] == neg),
        format!("kernel of E is spanned by {computed:?}"),
    );
    c
}

fn check_duality(cat: &Catalog, e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let Some(dual) = cat.by_id(&e.dual) else {
        c.fail(format!("dual {} missing", e.dual));
        return c;
    };
    match (exponent_matrix(e), exponent_matrix(dual)) {
        (Ok(m), Ok(d)) => {
            let t = m.bh_transpose();
            c.expect(
                t.same_rows(&d),
                format!(
                    "rows of E^T {:?} against E of {} {:?}",
                    t.rows(),
                    dual.id,
                    d.rows()
                ),
            );
        }
        (Err(err), _) | (_, Err(err)) => c.fail(err),
    }
    c
}

fn degree_of(p: &Polynomial, w: &[u64; 4]) -> Option<u64> {
    match p.quasi_degree(w) {
        Ok(QuasiDegree::Homogeneous(d)) => Some(d),
        _ => None,
    }
}

fn pair_degrees(pair: &CompleteIntersectionPair, w: &[u64; 4]) -> Option<[u64; 2]> {
    Some([degree_of(&pair.first, w)?, degree_of(&pair.second, w)?])
}

fn check_quasi_homogeneity(cat: &Catalog, e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let multiset = |c: &mut Check, label: &str, pair: &CompleteIntersectionPair, ws: &WeightSystem| {
        match pair_degrees(pair, &ws.weights) {
            Some(mut d) => {
                d.sort();
                c.expect(
                    d == ws.sorted_degrees(),
                    format!("{label} {pair} has degrees {d:?} for {ws}"),
                );
            }
            None => c.fail(format!("{label} {pair} is not weighted homogeneous for {ws}")),
        }
    };
    match &e.k0.family {
        Some(t) => multiset(&mut c, "k=0 equations", &t.equations, &t.weights),
        None => c.note("k=0 equations: no family recorded"),
    }
    multiset(&mut c, "F_Q", &e.k0.fq, &e.k0.weights);
    let h1 = &e.virtual_.equations.first;
    for (i, d) in e.decomposition.iter().enumerate() {
        let pair = CompleteIntersectionPair::new(h1.clone(), d.h2.clone());
        let got = pair_degrees(&pair, &d.weights.weights);
        c.expect(
            got == Some(d.weights.degrees),
            match got {
                Some(g) => format!("(h1, h2,{}) = {pair} has degrees {g:?} for {}", i + 1, d.weights),
                None => format!("(h1, h2,{}) = {pair} is not weighted homogeneous for {}", i + 1, d.weights),
            },
        );
    }
    match cat.by_id(&e.dual) {
        Some(dual) => c.expect(
            dual.k0.weights == e.dual_k0_weights,
            cmp_text("k=0 weights of the dual", &dual.k0.weights, &e.dual_k0_weights),
        ),
        None => c.fail(format!("dual {} missing", e.dual)),
    }
    c
}

fn check_newton(e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let eq = &e.virtual_.equations;
    let split = match orbits::split_newton(&eq.second, Some(&eq.first)) {
        Ok(s) => s,
        Err(err) => {
            c.fail(err.to_string());
            return c;
        }
    };
    for (i, (face, d)) in split.faces.iter().zip(&e.decomposition).enumerate() {
        c.expect(
            face.terms == d.h2,
            cmp_text(&format!("face {}", i + 1), &face.terms, &d.h2),
        );
        match face.weight_system(&eq.first) {
            Some(ws) => c.expect(
                ws == d.weights,
                cmp_text(&format!("face {} weights", i + 1), &ws, &d.weights),
            ),
            None => c.fail(format!("face {} has no positive weight system", i + 1)),
        }
    }
    c
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort();
    v
}

fn check_dolgachev(e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let h1 = &e.virtual_.equations.first;
    let mut found = Vec::new();
    for (i, d) in e.decomposition.iter().enumerate() {
        let label = format!("(h1, h2,{})", i + 1);
        let action = CStarAction::from(&d.weights);
        let dp = match orbits::dolgachev_pair(h1, &d.h2, &action) {
            Ok(dp) => dp,
            Err(err) => {
                c.fail(format!("{label}: {err}"));
                continue;
            }
        };
        c.expect(
            dp.case.marker() == d.case,
            format!("{label} case {} (expected {})", dp.case, d.case),
        );
        let occurring: Vec<&OrbitMark> = d.orbits.iter().filter(|o| !o.struck).collect();
        let got = sorted(dp.analysis.orbits.iter().map(|o| o.isotropy).collect());
        let want = sorted(occurring.iter().map(|o| o.order).collect());
        c.expect(
            got == want,
            format!("{label} exceptional orbit orders {got:?} (expected {want:?})"),
        );
        let got_sing = sorted(
            dp.analysis
                .orbits
                .iter()
                .filter(|o| o.singular)
                .map(|o| o.isotropy)
                .collect(),
        );
        let want_sing = sorted(occurring.iter().filter(|o| o.singular).map(|o| o.order).collect());
        let stars = format!("{label} singular orbit orders {got_sing:?} (marked {want_sing:?})");
        if d.case == "C" {
            c.expect(got_sing == want_sing, stars);
        } else if got_sing != want_sing {
            c.note(stars);
        }
        let want_principal = sorted(occurring.iter().filter(|o| o.principal).map(|o| o.order).collect());
        let got_principal = vec![dp.orders.0, dp.orders.1];
        c.expect(
            got_principal == want_principal,
            format!("{label} principal orders {got_principal:?} (expected {want_principal:?})"),
        );
        found.extend(got_principal);
    }
    if found.len() == 4 {
        let q = Quadruple(found.clone().try_into().expect("four"));
        c.expect(q == e.dolgachev, cmp_text("Dolgachev numbers", &q, &e.dolgachev));
        if let Some(t) = &e.k0.family {
            let want = sorted(t.dolgachev.to_vec());
            c.expect(
                sorted(found) == want,
                format!("k=0 Dolgachev numbers {want:?} agree as a multiset"),
            );
        }
    }
    c
}

fn check_zeta(cat: &Catalog, e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let Some(dual) = cat.by_id(&e.dual) else {
        c.fail(format!("dual {} missing", e.dual));
        return c;
    };
    let lhs = poincare(&e.dual_k0_weights).mul(&or_polynomial(&dual.dolgachev.0));
    c.expect(
        lhs == e.zeta,
        cmp_text(
            &format!("P({}) * Or({})", e.dual_k0_weights, dual.dolgachev),
            &lhs,
            &e.zeta,
        ),
    );
    let g = e.gabrielov.gabrielov();
    let s = charpoly_s(&g);
    match e.zeta.to_polynomial() {
        Ok(p) => c.expect(p == s, cmp_text(&format!("charpoly_S({g})"), &s, &p)),
        Err(err) => c.fail(format!("zeta frame is not a polynomial: {err}")),
    }
    let want_deg = e.gabrielov.sum() as usize - 1;
    c.expect(
        s.degree() == Some(want_deg),
        format!("charpoly_S has degree {:?} = sum gamma - 1", s.degree()),
    );
    let square = IntPolynomial::from_i64(&[1, -2, 1]);
    c.expect(
        charpoly_pi(&g) == square.mul(&s),
        "charpoly_Pi = (1 - t)^2 charpoly_S".to_string(),
    );
    c
}

fn check_strange_duality(cat: &Catalog, e: &SeriesEntry) -> Check {
    let mut c = Check::default();
    let Some(dual) = cat.by_id(&e.dual) else {
        c.fail(format!("dual {} missing", e.dual));
        return c;
    };
    c.expect(
        e.gabrielov.matches_up_to_pair_swap(&dual.dolgachev),
        format!("Gab({}) = {} against Dol({}) = {}", e.id, e.gabrielov, dual.id, dual.dolgachev),
    );
    c.expect(
        e.dolgachev.matches_up_to_pair_swap(&dual.gabrielov),
        format!("Dol({}) = {} against Gab({}) = {}", e.id, e.dolgachev, dual.id, dual.gabrielov),
    );
    let t: Vec<u64> = e.thimbles.gabrielov.iter().map(Annotated::total).collect();
    c.expect(
        t == e.gabrielov.0,
        format!("thimble gamma {t:?} against {}", e.gabrielov),
    );
    c
}

/// Runs the ten checks on one entry. Checks (5), (6), (9) and (10) consult
/// the dual entry in `cat`.
pub fn verify_entry(cat: &Catalog, e: &SeriesEntry) -> EntryReport {
    let checks = vec![
        check_matfac(e).finish(1),
        check_coordinate_change(e).finish(2),
        check_substitution(cat, e).finish(3),
        check_kernel(cat, e).finish(4),
        check_duality(cat, e).finish(5),
        check_quasi_homogeneity(cat, e).finish(6),
        check_newton(e).finish(7),
        check_dolgachev(e).finish(8),
        check_zeta(cat, e).finish(9),
        check_strange_duality(cat, e).finish(10),
    ];
    EntryReport {
        entry: e.id.clone(),
        name: e.name.clone(),
        checks,
    }
}

pub fn verify_all(cat: &Catalog) -> VerifyReport {
    let entries: Vec<EntryReport> = cat.entries.iter().map(|e| verify_entry(cat, e)).collect();
    let total = entries.iter().map(|r| r.checks.len()).sum();
    let passed = entries
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.passed)
        .count();
    let mut warnings = Vec::new();
    if cat.entries.is_empty() {
        warnings.push("catalog is empty; nothing was verified".to_string());
    }
    VerifyReport {
        entries,
        passed,
        total,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn edited(f: impl FnOnce(&mut Value)) -> Result<Catalog, CatalogError> {
        let mut v: Value = serde_json::from_str(SHIPPED_CATALOG).unwrap();
        f(&mut v);
        Catalog::from_json_str(&v.to_string())
    }

    fn entry_mut<'a>(v: &'a mut Value, id: &str) -> &'a mut Value {
        v["entries"]
            .as_array_mut()
            .unwrap()
            .iter_mut()
            .find(|e| e["id"] == id)
            .unwrap()
    }

    #[test]
    fn shipped_has_eight_entries() {
        let c = Catalog::shipped();
        let ids: Vec<&str> = c.entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids, ["J'", "K'", "Kb", "L", "L#", "M", "M#", "I"]);
    }

    #[test]
    fn lookup_accepts_typographic_names() {
        let c = Catalog::shipped();
        assert_eq!(c.get("K♭_{1,-1}").unwrap().id, "Kb");
        assert_eq!(c.get("kb").unwrap().id, "Kb");
        assert_eq!(c.get("J′").unwrap().id, "J'");
        assert_eq!(c.get("m#").unwrap().id, "M#");
        assert!(matches!(c.get("Q"), Err(CatalogError::UnknownEntry(_))));
    }

    #[test]
    fn every_check_passes() {
        let c = Catalog::shipped();
        let r = verify_all(&c);
        for e in &r.entries {
            for ch in &e.checks {
                assert!(ch.passed, "{} ({}): {:?}", e.entry, ch.number, ch.failures);
            }
        }
        assert_eq!(r.summary(), "80/80 checks passed");
    }

    #[test]
    fn j_prime_zeta_frame() {
        let c = Catalog::shipped();
        let r = verify_entry(&c, c.get("J'").unwrap());
        let ch = r.check(9).unwrap();
        assert!(ch.passed);
        assert!(ch.witnesses[0].contains("2^2*8*10 / 1^2*4*5 (expected 2^2*8*10 / 1^2*4*5)"));
    }

    #[test]
    fn duality_pairs_kb_with_l() {
        let c = Catalog::shipped();
        let r = verify_entry(&c, c.get("Kb").unwrap());
        let ch = r.check(10).unwrap();
        assert!(ch.passed);
        assert!(ch.witnesses[0].contains("Gab(Kb) = 2,2;3,5 against Dol(L) = 2,2;3,5"));
    }

    #[test]
    fn i_dolgachev_numbers() {
        let c = Catalog::shipped();
        let r = verify_entry(&c, c.get("I").unwrap());
        let ch = r.check(8).unwrap();
        assert!(ch.passed);
        assert!(ch.witnesses.iter().any(|w| w == "Dolgachev numbers: 3,3;3,3 (expected 3,3;3,3)"));
    }

    #[test]
    fn m_sharp_star_is_only_noted() {
        let c = Catalog::shipped();
        let r = verify_entry(&c, c.get("M#").unwrap());
        let ch = r.check(8).unwrap();
        assert!(ch.passed);
        assert!(ch.notes.iter().any(|n| n.contains("(h1, h2,2)")));
    }

    #[test]
    fn perturbed_gamma_fails_entry_and_dual() {
        let c = edited(|v| {
            let e = entry_mut(v, "Kb");
            e["gabrielov"] = "2,2;4,4".into();
            e["thimbles"]["gabrielov"] = serde_json::json!(["2", "2", "3+1", "4"]);
        })
        .unwrap();
        let r = verify_all(&c);
        let failed: Vec<(String, u8)> = r
            .entries
            .iter()
            .flat_map(|e| e.checks.iter().filter(|c| !c.passed).map(move |c| (e.entry.clone(), c.number)))
            .collect();
        assert_eq!(
            failed,
            [("Kb".to_string(), 9), ("Kb".to_string(), 10), ("L".to_string(), 10)]
        );
        assert_eq!(r.summary(), "77/80 checks passed");
    }

    #[test]
    fn broken_involution_is_rejected() {
        let err = edited(|v| entry_mut(v, "Kb")["dual"] = "Kb".into()).unwrap_err();
        assert!(matches!(err, CatalogError::Invariant { ref entry, .. } if entry == "L"), "{err}");
    }

    #[test]
    fn missing_multiplicity_names_the_field() {
        let err = edited(|v| {
            entry_mut(v, "M")["thimbles"]
                .as_object_mut()
                .unwrap()
                .remove("m5");
        })
        .unwrap_err();
        let text = err.to_string();
        assert!(text.contains("entries[5].thimbles") && text.contains("m5"), "{text}");
    }

    #[test]
    fn gamma_sum_is_enforced() {
        let err = edited(|v| entry_mut(v, "I")["gabrielov"] = "3,3;3,4".into()).unwrap_err();
        assert!(err.to_string().contains("sum to 13"), "{err}");
        let err = edited(|v| entry_mut(v, "I")["thimbles"]["m7"] = "3".into()).unwrap_err();
        assert!(err.to_string().contains("not 13"), "{err}");
    }

    #[test]
    fn bad_polynomial_names_entry_and_field() {
        let err = edited(|v| entry_mut(v, "L")["virtual"]["matfac"]["c"] = "x^^2".into()).unwrap_err();
        assert!(matches!(err, CatalogError::Field { ref entry, ref field, .. } if entry == "L" && field == "virtual.matfac.c"));
    }

    #[test]
    fn schema_version_is_checked() {
        let err = edited(|v| v["schema"] = 2.into()).unwrap_err();
        assert_eq!(err, CatalogError::Version(2));
    }

    #[test]
    fn empty_catalog_passes_vacuously() {
        let c = edited(|v| v["entries"] = serde_json::json!([])).unwrap();
        let r = verify_all(&c);
        assert!(r.all_passed());
        assert_eq!(r.summary(), "0/0 checks passed");
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn report_round_trips_through_json() {
        let c = Catalog::shipped();
        let r = verify_all(&c);
        let text = serde_json::to_string(&r).unwrap();
        let back: VerifyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn token_formats() {
        let m: OrbitMark = "3*!".parse().unwrap();
        assert!(m.singular && m.principal && !m.struck);
        assert_eq!(m.to_string(), "3*!");
        assert_eq!("~4".parse::<OrbitMark>().unwrap().to_string(), "~4");
        assert_eq!("5+1".parse::<Annotated>().unwrap().total(), 6);
        assert!("2,2;0,4".parse::<Quadruple>().is_err());
        let q: Quadruple = "4,2;5,3".parse().unwrap();
        assert!(q.matches_up_to_pair_swap(&"3,5;2,4".parse().unwrap()));
        assert!(!q.matches_up_to_pair_swap(&"2,3;4,5".parse().unwrap()));
    }
}
