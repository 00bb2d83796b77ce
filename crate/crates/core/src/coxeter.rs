//! Characteristic polynomials of the Coxeter elements attached to the
//! quadrangle graphs `S` and `Pi`, together with the graphs themselves for
//! documentation (DOT export).
//!
//! The polynomial comes from the closed formula
//!
//! ```text
//! D_S(t) = (t^3 - 2t^2 - 2t + 1) prod_i G(g_i) + t^2 sum_i G(g_i - 1) prod_{j != i} G(g_j)
//! ```
//!
//! with `G(k) = 1 + t + ... + t^{k-1}`, and `D_Pi = (1 - t)^2 D_S`. The graphs
//! are not used to compute anything.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("Gabrielov numbers must be positive, got {0}")]
    NonPositive(u64),
    #[error("unknown graph shape `{0}` (expected S or Pi)")]
    Shape(String),
}

/// `(g1, g2; g3, g4)`, every entry at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GabrielovQuadruple(pub [u64; 4]);

impl GabrielovQuadruple {
    pub fn new(g: [u64; 4]) -> Result<Self, CoxeterError> {
        match g.iter().find(|&&v| v == 0) {
            Some(&v) => Err(CoxeterError::NonPositive(v)),
            None => Ok(GabrielovQuadruple(g)),
        }
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for GabrielovQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a},{b};{c},{d}")
    }
}

pub fn charpoly_s(g: &GabrielovQuadruple) -> IntPolynomial {
    let geo = |k: u64| IntPolynomial::geometric(k as usize);
    let all = g.0.iter().fold(IntPolynomial::one(), |acc, &k| acc.mul(&geo(k)));
    let head = IntPolynomial::from_i64(&[1, -2, -2, 1]).mul(&all);
    let mut tail = IntPolynomial::zero();
    for i in 0..4 {
        let mut term = geo(g.0[i] - 1);
        for j in (0..4).filter(|&j| j != i) {
            term = term.mul(&geo(g.0[j]));
        }
        tail = tail.add(&term);
    }
    head.add(&tail.shift(2))
}

pub fn charpoly_pi(g: &GabrielovQuadruple) -> IntPolynomial {
    let sq = IntPolynomial::from_i64(&[1, -2, 1]);
    sq.mul(&charpoly_s(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    S,
    Pi,
}

impl FromStr for Shape {
    type Err = CoxeterError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S" | "s" => Ok(Shape::S),
            "Pi" | "pi" | "PI" => Ok(Shape::Pi),
            other => Err(CoxeterError::Shape(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeKind {
    Single,
    Double,
    Dashed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub shape: Shape,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

/// Arm `i` is the chain `d{i}_1 - ... - d{i}_{g_i - 1}`; its last vertex is
/// attached to the centre.
pub fn emit_graph(g: &GabrielovQuadruple, shape: Shape) -> Graph {
    use EdgeKind::*;
    let centre_size = match shape {
        Shape::S => 3,
        Shape::Pi => 5,
    };
    let mut vertices: Vec<String> = (1..=centre_size).map(|k| format!("c{k}")).collect();
    let mut edges = Vec::new();
    let mut edge = |a: &str, b: &str, kind| {
        edges.push(Edge {
            from: a.to_string(),
            to: b.to_string(),
            kind,
        })
    };
    let centre: &[(&str, &str, EdgeKind)] = match shape {
        Shape::S => &[("c3", "c2", Single), ("c2", "c1", Double)],
        Shape::Pi => &[
            ("c3", "c5", Single),
            ("c3", "c1", Dashed),
            ("c1", "c5", Single),
            ("c1", "c2", Double),
            ("c1", "c4", Single),
            ("c5", "c4", Double),
            ("c2", "c4", Single),
            ("c2", "c5", Single),
        ],
    };
    for &(a, b, k) in centre {
        edge(a, b, k);
    }
    for (i, &gi) in g.0.iter().enumerate() {
        let arm = i + 1;
        let len = gi.saturating_sub(1);
        for k in 1..=len {
            vertices.push(format!("d{arm}_{k}"));
            if k > 1 {
                edge(&format!("d{arm}_{}", k - 1), &format!("d{arm}_{k}"), Single);
            }
        }
        if len == 0 {
            continue;
        }
        let anchors: [&str; 2] = match (shape, arm) {
            (Shape::S, _) => ["c1", "c2"],
            (Shape::Pi, 1 | 2) => ["c1", "c2"],
            (Shape::Pi, _) => ["c4", "c5"],
        };
        for c in anchors {
            edge(&format!("d{arm}_{len}"), c, Single);
        }
    }
    Graph {
        shape,
        vertices,
        edges,
    }
}

impl Graph {
    pub fn to_dot(&self) -> String {
        let name = match self.shape {
            Shape::S => "S",
            Shape::Pi => "Pi",
        };
        let mut out = format!("graph {name} {{\n");
        for v in &self.vertices {
            out.push_str(&format!("  {v};\n"));
        }
        for e in &self.edges {
            let attrs = match e.kind {
                EdgeKind::Single => String::new(),
                EdgeKind::Double => " [style=bold,label=\"2\"]".into(),
                EdgeKind::Dashed => " [style=dashed]".into(),
            };
            out.push_str(&format!("  {} -- {}{};\n", e.from, e.to, attrs));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::FrameProduct;

    fn gq(g: [u64; 4]) -> GabrielovQuadruple {
        GabrielovQuadruple::new(g).unwrap()
    }

    #[test]
    fn trivial_arms_leave_the_cubic() {
        assert_eq!(charpoly_s(&gq([1, 1, 1, 1])), IntPolynomial::from_i64(&[1, -2, -2, 1]));
        assert_eq!(
            charpoly_pi(&gq([1, 1, 1, 1])),
            IntPolynomial::from_i64(&[1, -2, 1]).mul(&IntPolynomial::from_i64(&[1, -2, -2, 1]))
        );
    }

    #[test]
    fn agrees_with_zeta_frames() {
        let f: FrameProduct = "2^2*8*10 / 1^2*4*5".parse().unwrap();
        assert_eq!(charpoly_s(&gq([2, 2, 2, 6])), f.to_polynomial().unwrap());
        let f: FrameProduct = "6*7 / 1^2".parse().unwrap();
        assert_eq!(charpoly_s(&gq([3, 3, 2, 4])), f.to_polynomial().unwrap());
    }

    #[test]
    fn pi_has_degree_sum_plus_one() {
        let g = gq([2, 2, 2, 6]);
        let p = charpoly_pi(&g);
        assert_eq!(p.degree(), Some(13));
        assert_eq!(p.div_one_minus_t_pow(1).unwrap().div_one_minus_t_pow(1).unwrap(), charpoly_s(&g));
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(emit_graph(&gq([2, 2, 2, 6]), Shape::S).vertices.len(), 11);
        assert_eq!(emit_graph(&gq([2, 2, 2, 6]), Shape::Pi).vertices.len(), 13);
        let s = emit_graph(&gq([1, 1, 1, 1]), Shape::S);
        assert_eq!(s.vertices, vec!["c1", "c2", "c3"]);
    }

    #[test]
    fn dot_marks_special_edges() {
        let dot = emit_graph(&gq([2, 3, 2, 2]), Shape::Pi).to_dot();
        assert!(dot.starts_with("graph Pi {"));
        assert!(dot.contains("c1 -- c2 [style=bold,label=\"2\"];"));
        assert!(dot.contains("c3 -- c1 [style=dashed];"));
        assert!(dot.contains("d2_1 -- d2_2;"));
        assert!(dot.contains("d2_2 -- c1;"));
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(GabrielovQuadruple::new([0, 1, 1, 1]), Err(CoxeterError::NonPositive(0)));
        assert!("Q".parse::<Shape>().is_err());
    }
}
