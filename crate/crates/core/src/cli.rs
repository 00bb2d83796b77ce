//! The `sd` command line.
//!
//! [`run`] takes argv and two writers and returns the exit status, so the
//! whole front end can be driven from tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::{verify_all, verify_entry, Catalog, VerifyReport};
use crate::coxeter::{charpoly_pi, charpoly_s, emit_graph, GabrielovQuadruple, Shape};
use crate::invertible::ExponentMatrix;
use crate::matfac::{self, CompleteIntersectionPair, FactorizationTriple};
use crate::orbits::{self, CStarAction};
use crate::poly::{parse_poly, parse_term_list, parse_var_list, Polynomial, Var};
use crate::series::{parse_frame, FrameProduct, WeightSystem};

pub const CATALOG_ENV: &str = "SD_CATALOG";

#[derive(Parser, Debug)]
#[command(name = "sd", version, about = "Exact computations for strange duality of virtual singularities")]
struct Cli {
    /// Catalog file to use instead of the built-in one (overrides SD_CATALOG)
    #[arg(long, global = true, value_name = "PATH")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Berglund-Hubsch transpose of an invertible polynomial
    Transpose {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "x,y,z,w")]
        vars: String,
    },
    /// Canonical weights, grading operator and diagonal symmetry group
    Weights {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "x,y,z,w")]
        vars: String,
    },
    /// Eliminate y from (xy - a, c + yb), giving xc + ab
    Reduce {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// The pair (a - xy, c + yb) of a factorization xc + ab
    Lift {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Print (xy - a, c + yb) instead
        #[arg(long)]
        normalized: bool,
    },
    /// Poincare series of a weight system "w1,w2,w3,w4;d1,d2"
    Poincare {
        weights: String,
        /// Also print the Taylor coefficients up to t^N
        #[arg(long, value_name = "N")]
        expand: Option<usize>,
    },
    /// Saito dual of a frame product
    SaitoDual {
        frame: String,
        #[arg(long)]
        degree: u64,
    },
    /// Characteristic polynomial of the Coxeter element for (g1,g2;g3,g4)
    Charpoly {
        g1: u64,
        g2: u64,
        g3: u64,
        g4: u64,
        #[arg(long, default_value = "S")]
        graph: String,
        /// Print the graph in DOT format after the polynomial
        #[arg(long)]
        dot: bool,
    },
    /// Faces of the Newton polygon at infinity of h2
    SplitNewton {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Restrict to weights making this equation homogeneous
        #[arg(long, allow_hyphen_values = true)]
        h1: Option<String>,
    },
    /// Exceptional orbits and the Dolgachev pair of (h1, h2)
    Dolgachev {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        /// Four weights "w1,w2,w3,w4"; a full weight system is accepted too
        #[arg(long)]
        weights: String,
    },
    /// Inspect the catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Replay every catalog identity
    Verify {
        #[arg(long)]
        entry: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Print one entry
    Show { name: String },
    /// List entry ids
    List,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

/// Runs the CLI; returns 0 on success, 1 on a failed computation or
/// verification, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn poly(text: &str) -> Result<Polynomial, Failure> {
    parse_poly(text).map_err(|e| Failure(format!("in {text:?}: {e}")))
}

fn load_catalog(path: Option<PathBuf>) -> Result<Catalog, Failure> {
    let path = path.or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from));
    match path {
        Some(p) => Ok(Catalog::load(&p)?),
        None => Ok(Catalog::shipped()),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Transpose { poly: p, vars } => {
            let vars = parse_var_list(&vars)?;
            // Rows in the order written, so a second transpose undoes the first.
            let e = ExponentMatrix::from_terms(&parse_term_list(&p)?, &vars)?;
            writeln!(out, "{}", e.bh_transpose().to_polynomial(&vars))?;
        }
        Command::Weights { poly: p, vars } => {
            let vars = parse_var_list(&vars)?;
            let e = ExponentMatrix::from_polynomial(&poly(&p)?, &vars)?;
            let group = e.symmetry_group();
            let cw = e.canonical_weights()?;
            let op = e.grading_operator()?;
            let names: Vec<String> = vars.iter().map(Var::to_string).collect();
            writeln!(out, "variables: {}", names.join(","))?;
            writeln!(out, "weights: {cw}")?;
            writeln!(out, "reduced: {}", cw.reduce())?;
            let q: Vec<String> = op.q.iter().map(ToString::to_string).collect();
            writeln!(out, "q: {}", q.join(","))?;
            writeln!(out, "grading order: {}", op.order)?;
            let factors: Vec<String> = group.factors.iter().map(ToString::to_string).collect();
            writeln!(out, "invariant factors: {}", if factors.is_empty() { "none".into() } else { factors.join(",") })?;
            match group.order {
                Some(o) => writeln!(out, "|G_f|: {o}")?,
                None => writeln!(out, "|G_f|: infinite (free rank {})", group.free_rank)?,
            }
        }
        Command::Reduce { first, second } => {
            let pair = CompleteIntersectionPair::new(poly(&first)?, poly(&second)?);
            writeln!(out, "{}", matfac::reduce(&pair)?)?;
        }
        Command::Lift { a, b, c, normalized } => {
            let t = FactorizationTriple::new(poly(&a)?, poly(&b)?, poly(&c)?)?;
            let pair = if normalized {
                matfac::lift_normalized(&t)
            } else {
                matfac::lift(&t)
            };
            writeln!(out, "{pair}")?;
        }
        Command::Poincare { weights, expand } => {
            let ws: WeightSystem = weights.parse()?;
            let frame = ws.poincare();
            writeln!(out, "{frame}")?;
            if let Some(n) = expand {
                let c: Vec<String> = frame.expand(n).iter().map(ToString::to_string).collect();
                writeln!(out, "{}", c.join(","))?;
            }
        }
        Command::SaitoDual { frame, degree } => {
            let f = frame_arg(&frame, err)?;
            writeln!(out, "{}", f.saito_dual(degree)?)?;
        }
        Command::Charpoly {
            g1,
            g2,
            g3,
            g4,
            graph,
            dot,
        } => {
            let g = GabrielovQuadruple::new([g1, g2, g3, g4])?;
            let shape: Shape = graph.parse()?;
            let p = match shape {
                Shape::S => charpoly_s(&g),
                Shape::Pi => charpoly_pi(&g),
            };
            writeln!(out, "{p}")?;
            if dot {
                write!(out, "{}", emit_graph(&g, shape).to_dot())?;
            }
        }
        Command::SplitNewton { poly: p, h1 } => {
            let h2 = poly(&p)?;
            let h1 = h1.as_deref().map(poly).transpose()?;
            let split = orbits::split_newton(&h2, h1.as_ref())?;
            for (i, face) in split.faces.iter().enumerate() {
                let w: Vec<String> = face.weights.iter().map(ToString::to_string).collect();
                write!(out, "face {}: {}; weights {}; degree {}", i + 1, face.terms, w.join(","), face.degree)?;
                if let Some(ws) = h1.as_ref().and_then(|h| face.weight_system(h)) {
                    write!(out, "; weight system {ws}")?;
                }
                writeln!(out)?;
            }
        }
        Command::Dolgachev {
            first,
            second,
            weights,
        } => {
            let w = weights.split(';').next().unwrap_or_default();
            let w: Vec<u64> = w
                .split(',')
                .map(|v| v.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure(format!("--weights expects four positive integers, got {weights:?}")))?;
            let w: [u64; 4] = w
                .try_into()
                .map_err(|_| Failure(format!("--weights expects four positive integers, got {weights:?}")))?;
            let action = CStarAction::new(w)?;
            let (h1, h2) = (poly(&first)?, poly(&second)?);
            let analysis = orbits::exceptional_orbits(&h1, &h2, &action)?;
            for o in &analysis.orbits {
                writeln!(out, "orbit {o}")?;
            }
            for u in &analysis.unresolved {
                writeln!(out, "unresolved stratum isotropy={} polynomial={}", u.isotropy, u.polynomial)?;
            }
            let dp = orbits::dolgachev_pair(&h1, &h2, &action)?;
            writeln!(out, "case: {}", dp.case)?;
            writeln!(out, "dolgachev: {},{}", dp.orders.0, dp.orders.1)?;
        }
        Command::Catalog { action } => {
            let cat = load_catalog(cli.catalog)?;
            match action {
                CatalogAction::Show { name } => writeln!(out, "{}", cat.get(&name)?)?,
                CatalogAction::List => {
                    for e in &cat.entries {
                        writeln!(out, "{}\t{}\tdual {}", e.id, e.name, e.dual)?;
                    }
                }
            }
        }
        Command::Verify { entry, json } => {
            let cat = load_catalog(cli.catalog)?;
            let report = match entry {
                Some(name) => {
                    let r = verify_entry(&cat, cat.get(&name)?);
                    let total = r.checks.len();
                    let passed = r.checks.iter().filter(|c| c.passed).count();
                    VerifyReport {
                        entries: vec![r],
                        passed,
                        total,
                        warnings: Vec::new(),
                    }
                }
                None => verify_all(&cat),
            };
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "{report}")?;
            }
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn frame_arg(text: &str, err: &mut dyn Write) -> Result<FrameProduct, Failure> {
    let parsed = parse_frame(text)?;
    for b in &parsed.repeated_bases {
        writeln!(err, "warning: base {b} is written more than once; exponents were added")?;
    }
    Ok(parsed.frame)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sd").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn poincare_expansion() {
        let (code, out, _) = sd(&["poincare", "2,6,5,4;8,10", "--expand", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "8*10 / 2*4*5*6\n1,0,1,0,2,1,3\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(sd(&[]).0, 2);
        assert_eq!(sd(&["charpoly", "2", "2"]).0, 2);
        assert_eq!(sd(&["frobnicate"]).0, 2);
    }

    #[test]
    fn computation_errors_exit_one() {
        let (code, _, err) = sd(&["poincare", "2,6;8"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        let (code, _, err) = sd(&["transpose", "x^^2", "--vars", "x"]);
        assert_eq!(code, 1);
        assert!(err.contains("position 3"), "{err}");
    }

    #[test]
    fn transpose_and_weights() {
        let (code, out, _) = sd(&["transpose", "x^2*y+y^3", "--vars", "x,y"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x*y^3 + x^2\n");
        let (code, out, _) = sd(&["weights", "x^3+y^3+z^3", "--vars", "x,y,z"]);
        assert_eq!(code, 0);
        assert!(out.contains("weights: 9,9,9;27"), "{out}");
        assert!(out.contains("reduced: 1,1,1;3"), "{out}");
        assert!(out.contains("|G_f|: 27"), "{out}");
    }

    #[test]
    fn reduce_and_lift_are_inverse() {
        let (_, out, _) = sd(&["lift", "w^2", "w", "-x^2*z+z^2+x*w^2", "--normalized"]);
        assert_eq!(out.trim(), "(x*y - w^2, -x^2*z + x*w^2 + y*w + z^2)");
        let (code, out, _) = sd(&["reduce", "x*y - w^2", "x*w^2 - x^2*z + y*w + z^2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "-x^3*z + x^2*w^2 + x*z^2 + w^3");
    }

    #[test]
    fn charpoly_and_dot() {
        let (code, out, _) = sd(&["charpoly", "2", "2", "2", "6", "--graph", "Pi", "--dot"]);
        assert_eq!(code, 0);
        assert!(out.contains("graph Pi {"));
        let (_, out, _) = sd(&["charpoly", "3", "3", "2", "4"]);
        let frame: FrameProduct = "6*7 / 1^2".parse().unwrap();
        assert_eq!(out.trim(), frame.to_polynomial().unwrap().to_string());
    }

    #[test]
    fn dolgachev_example() {
        let (code, out, _) = sd(&[
            "dolgachev",
            "x*y-w^2",
            "-x^2*z+z^2+x*w^2",
            "--weights",
            "2,4,4,3",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("dolgachev: 2,2\n"), "{out}");
    }

    #[test]
    fn verify_shipped() {
        let (code, out, _) = sd(&["verify"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("80/80 checks passed\n"));
        let (code, out, _) = sd(&["verify", "--entry", "K♭", "--json"]);
        assert_eq!(code, 0);
        let r: VerifyReport = serde_json::from_str(&out).unwrap();
        assert_eq!((r.passed, r.total), (10, 10));
    }

    #[test]
    fn catalog_show_and_missing_file() {
        let (code, out, _) = sd(&["catalog", "show", "L#"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("L♯_{1,-1} (L#)"));
        let (code, _, err) = sd(&["--catalog", "/nonexistent/catalog.json", "verify"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot read catalog"));
    }
}
