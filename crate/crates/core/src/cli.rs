//! The `hlpa` command line.
//!
//! Exit codes: 0 on success, 1 on any error raised while loading or computing,
//! 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::grading::WeightMap;
use crate::algebra::{Element, LeavittAlgebra, Strategy};
use crate::basis::{enumerate_nod_paths, growth_table};
use crate::error::{Error, Result, StepBudget};
use crate::gk::{enumerate_quasi_cycles, gk_dimension, GkResult, QuasiCycleRecord};
use crate::hypergraph::{EdgeSpec, Hypergraph, SeparatedGraph, WeightedGraph};
use crate::monoid::{
    covering_hypergraph, graded_monoid_presentation, group_completion, monoid_equal_bounded, v_monoid_presentation,
    verify_cover_isomorphism, BoundedEquality, DegreeWindow, MonoidPresentation,
};
use crate::props::{check_conditions, is_connected, property_report};
use crate::scalar::Field;
use crate::Word;

const DEFAULT_MAX_STEPS: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "hlpa", version, about = "Leavitt path algebras of finite hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Hypergraph file (.hg); .sg and .wg files are converted on load
    input: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FieldArg {
    /// Coefficient field: `q` or `fp:<prime>`
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: Field,
}

#[derive(Args, Debug)]
struct GradingArgs {
    /// Weight map: `std`, `double`, or a weight file
    #[arg(long, default_value = "std")]
    weights: String,
    /// Degree box bound B: degrees range over [-B, B]^d
    #[arg(long)]
    window: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a hypergraph and summarize it
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Normal form of an expression
    Nf {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        field: FieldArg,
        /// Expression, e.g. `h[1,1] * h*[1,1]`
        #[arg(short = 'e', long = "expr")]
        expr: String,
        /// Reduction order
        #[arg(long, default_value = "leftmost", value_parser = ["leftmost", "rightmost"])]
        strategy: String,
    },
    /// Normal form of the product of two expressions
    Mul {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        field: FieldArg,
        left: String,
        right: String,
    },
    /// Nod-path basis: growth counts or the list of basis words
    Basis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_len: usize,
        /// Print per-length and cumulative counts (default)
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print every basis word
        #[arg(long)]
        list: bool,
    },
    /// Gelfand-Kirillov dimension with its witness
    Gkdim {
        #[command(flatten)]
        common: Common,
    },
    /// All quasi-cycles with shift-class ids
    Quasicycles {
        #[command(flatten)]
        common: Common,
    },
    /// Hyperedge conditions and the derived ring-theoretic properties
    Props {
        #[command(flatten)]
        common: Common,
    },
    /// V-monoid presentation, group completion, bounded equality
    Vmonoid {
        #[command(flatten)]
        common: Common,
        /// Also compute the group completion
        #[arg(long)]
        k0: bool,
        /// Graded presentation over a degree window
        #[arg(long, requires = "window")]
        graded: bool,
        #[arg(long, default_value = "std")]
        weights: String,
        #[arg(long)]
        window: Option<i64>,
        /// Decide `A = B` by bounded search, e.g. `--equal "v1 + v2" "w1 + w2"`
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        equal: Option<Vec<String>>,
        /// Coordinate bound for `--equal`
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Covering hypergraph over a degree window, as .hg text
    Cover {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grading: GradingArgs,
    },
    /// Check the map from the cover's algebra into the smash product
    VerifyCover {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grading: GradingArgs,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Convert a separated (.sg) or weighted (.wg) graph to .hg
    Convert {
        input: PathBuf,
        /// Input format; inferred from the extension when omitted
        #[arg(long, value_parser = ["sg", "wg"])]
        from: Option<String>,
    },
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn budget() -> StepBudget {
    let max = std::env::var("HLPA_MAX_STEPS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_STEPS);
    StepBudget::limited(max)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read `{}`: {e}", path.display())))
}

fn load(path: &Path) -> Result<Hypergraph> {
    let text = read(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("sg") => SeparatedGraph::parse(&text)?.to_hypergraph(),
        Some("wg") => WeightedGraph::parse(&text)?.to_hypergraph(),
        _ => Hypergraph::parse(&text),
    }
}

fn weights(spec: &str, h: &Hypergraph) -> Result<WeightMap> {
    match spec {
        "std" => Ok(WeightMap::standard(h)),
        "double" => Ok(WeightMap::double(h)),
        path => WeightMap::parse(&read(Path::new(path))?, h),
    }
}

fn algebra(h: Hypergraph, field: Field) -> Arc<LeavittAlgebra> {
    LeavittAlgebra::with_budget(h, field, budget())
}

fn element_json(a: &Element) -> Value {
    json!({
        "field": a.algebra().field().to_string(),
        "terms": a.serialize_terms(),
        "valuation": a.valuation(),
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn edges_json(h: &Hypergraph) -> Vec<EdgeSpec> {
    h.edge_specs()
}

fn presentation_json(p: &MonoidPresentation) -> Value {
    let relations: Vec<Value> = p
        .relations
        .iter()
        .map(|r| json!({"name": r.name, "lhs": r.lhs, "rhs": r.rhs, "text": p.render_relation(r)}))
        .collect();
    json!({"generators": p.generators, "relations": relations})
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = writeln!(out);
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cmd: Command) -> Result<String> {
    match cmd {
        Command::Check { common } => {
            let h = load(&common.input)?;
            let letters = crate::letters::LetterGraph::build(&h).len();
            if common.json {
                return Ok(to_json(&json!({
                    "vertices": h.vertex_names(),
                    "hyperedges": edges_json(&h),
                    "letters": letters,
                })));
            }
            Ok(format!(
                "ok: {} vertices, {} hyperedges, {} letters",
                h.vertex_count(),
                h.edge_count(),
                letters
            ))
        }
        Command::Nf {
            common,
            field,
            expr,
            strategy,
        } => {
            let alg = algebra(load(&common.input)?, field.field);
            let mut a = alg.parse(&expr)?;
            if strategy == "rightmost" {
                a = alg.normal_form_with(&a.to_raw(), Strategy::Rightmost)?;
            }
            Ok(if common.json {
                to_json(&element_json(&a))
            } else {
                a.to_string()
            })
        }
        Command::Mul {
            common,
            field,
            left,
            right,
        } => {
            let alg = algebra(load(&common.input)?, field.field);
            let a = alg.parse(&left)?;
            let b = alg.parse(&right)?;
            let ab = a.multiply(&b)?;
            Ok(if common.json {
                to_json(&element_json(&ab))
            } else {
                ab.to_string()
            })
        }
        Command::Basis {
            common,
            max_len,
            count: _,
            list,
        } => {
            let h = load(&common.input)?;
            let lg = crate::letters::LetterGraph::build(&h);
            let table = growth_table(&h, &lg, max_len)?;
            if list {
                let limit = budget().max_steps.unwrap_or(u64::MAX);
                let total = *table.cumulative.last().expect("length 0 present");
                if total > limit as u128 {
                    return Err(Error::BudgetExhausted(limit));
                }
                let words: Vec<String> = enumerate_nod_paths(&h, &lg, max_len).map(|w| w.render(&h)).collect();
                if common.json {
                    return Ok(to_json(&json!({"max_len": max_len, "words": words})));
                }
                return Ok(words.join("\n"));
            }
            if common.json {
                return Ok(to_json(&json!({
                    "max_len": max_len,
                    "per_length": table.per_length.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "cumulative": table.cumulative.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })));
            }
            let mut s = String::from("n\tlength_n\tup_to_n\n");
            for n in 0..=max_len {
                s.push_str(&format!("{n}\t{}\t{}\n", table.per_length[n], table.cumulative[n]));
            }
            Ok(s)
        }
        Command::Gkdim { common } => {
            let h = load(&common.input)?;
            let lg = crate::letters::LetterGraph::build(&h);
            let r = gk_dimension(&lg, budget())?;
            if !common.json {
                return Ok(r.display(&h).to_string());
            }
            let v = match &r {
                GkResult::Finite { d, chain } => json!({
                    "kind": "finite",
                    "d": d,
                    "chain": chain.iter().map(|c| QuasiCycleRecord::new(c, &h)).collect::<Vec<_>>(),
                }),
                GkResult::Exponential { witness, connector } => json!({
                    "kind": "exponential",
                    "witness": QuasiCycleRecord::new(witness, &h),
                    "connector": Word::Path(connector.clone()).render(&h),
                }),
            };
            Ok(to_json(&v))
        }
        Command::Quasicycles { common } => {
            let h = load(&common.input)?;
            let lg = crate::letters::LetterGraph::build(&h);
            let cs = enumerate_quasi_cycles(&lg, budget())?;
            let classes = cs.iter().map(|c| c.class_id + 1).max().unwrap_or(0);
            if common.json {
                return Ok(to_json(&json!({
                    "count": cs.len(),
                    "classes": classes,
                    "quasi_cycles": cs.iter().map(|c| QuasiCycleRecord::new(c, &h)).collect::<Vec<_>>(),
                })));
            }
            let mut s = format!("{} quasi-cycles in {classes} shift classes\n", cs.len());
            for c in &cs {
                s.push_str(&format!("class {}: {}\n", c.class_id, c.render(&h)));
            }
            Ok(s)
        }
        Command::Props { common } => {
            let h = load(&common.input)?;
            let c = check_conditions(&h);
            let report = property_report(&h);
            if common.json {
                return Ok(to_json(&json!({
                    "conditions": c,
                    "connected": is_connected(&h),
                    "properties": report.entries,
                })));
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            let mut s = format!(
                "conditions: LV {}, A {}, A' {}, B {}; connected {}\n",
                yn(c.lv),
                yn(c.a),
                yn(c.a_prime),
                yn(c.b),
                yn(is_connected(&h))
            );
            for e in &report.entries {
                s.push_str(&format!("{:<18} {:<8} {}\n", e.property, e.verdict.label(), e.citation));
            }
            Ok(s)
        }
        Command::Vmonoid {
            common,
            k0,
            graded,
            weights: wspec,
            window,
            equal,
            bound,
        } => {
            let h = load(&common.input)?;
            let p = if graded {
                let w = weights(&wspec, &h)?;
                let win = DegreeWindow::new(w.rank(), window.expect("required by clap"))?;
                graded_monoid_presentation(&h, &w, &win)?
            } else {
                v_monoid_presentation(&h)
            };
            let k = k0.then(|| group_completion(&p));
            let eq = match &equal {
                Some(pair) => {
                    let a = p.parse_vector(&pair[0])?;
                    let b = p.parse_vector(&pair[1])?;
                    Some(monoid_equal_bounded(&p, &a, &b, bound, budget())?)
                }
                None => None,
            };
            if common.json {
                let mut v = presentation_json(&p);
                if let Some(k) = &k {
                    v["k0"] = serde_json::to_value(k).expect("serializable");
                }
                if let Some(e) = &eq {
                    v["equal"] = serde_json::to_value(e).expect("serializable");
                }
                return Ok(to_json(&v));
            }
            let mut s = format!("generators: {}\n", p.generators.join(" "));
            for r in &p.relations {
                s.push_str(&format!("{}: {}\n", r.name, p.render_relation(r)));
            }
            if let Some(k) = k {
                s.push_str(&format!("K0 = {k}\n"));
            }
            match eq {
                Some(BoundedEquality::Equal(trace)) => {
                    let n = trace.len();
                    s.push_str(&format!("equal in {n} step{}\n", if n == 1 { "" } else { "s" }));
                    for step in trace {
                        let dir = match step.direction {
                            crate::monoid::Direction::Forward => "->",
                            crate::monoid::Direction::Backward => "<-",
                        };
                        let name = &p.relations[step.relation].name;
                        s.push_str(&format!("  {name} {dir}: {}\n", p.render_vector(&step.result)));
                    }
                }
                Some(BoundedEquality::Unknown) => s.push_str(&format!("unknown within bound {bound}\n")),
                None => {}
            }
            Ok(s)
        }
        Command::Cover { common, grading } => {
            let h = load(&common.input)?;
            let w = weights(&grading.weights, &h)?;
            let win = DegreeWindow::new(w.rank(), grading.window)?;
            let c = covering_hypergraph(&h, &w, &win)?;
            if common.json {
                return Ok(to_json(&json!({
                    "vertices": c.vertex_names(),
                    "hyperedges": edges_json(&c),
                })));
            }
            Ok(c.serialize())
        }
        Command::VerifyCover {
            common,
            grading,
            field,
            trials,
            seed,
        } => {
            let h = load(&common.input)?;
            let w = weights(&grading.weights, &h)?;
            let win = DegreeWindow::new(w.rank(), grading.window)?;
            let r = verify_cover_isomorphism(&h, &w, &win, field.field, trials, seed)?;
            if common.json {
                return Ok(to_json(&r));
            }
            let mut s = format!(
                "cover: {} vertices, {} hyperedges; {} relation checks, {} product trials; {} violations\n",
                r.cover_vertices,
                r.cover_edges,
                r.relation_checks,
                r.trials,
                r.violations.len()
            );
            for v in &r.violations {
                s.push_str(&format!("  {v}\n"));
            }
            Ok(s)
        }
        Command::Convert { input, from } => {
            let text = read(&input)?;
            let kind = from.or_else(|| input.extension().and_then(|e| e.to_str()).map(str::to_string));
            let h = match kind.as_deref() {
                Some("sg") => SeparatedGraph::parse(&text)?.to_hypergraph()?,
                Some("wg") => WeightedGraph::parse(&text)?.to_hypergraph()?,
                _ => {
                    return Err(Error::Io(format!(
                        "cannot infer the format of `{}`; pass --from sg or --from wg",
                        input.display()
                    )))
                }
            };
            Ok(h.serialize())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hlpa").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&[]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["nf", "x.hg"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn missing_file_exits_one() {
        let (code, _, err) = run_str(&["check", "definitely-missing.hg"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn bad_field_is_usage_error() {
        assert_eq!(run_str(&["nf", "x.hg", "-e", "v", "--field", "fp:4"]).0, 2);
    }
}
