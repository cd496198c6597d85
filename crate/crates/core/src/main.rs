use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use cliqueminor::clique::clique_census;
use cliqueminor::extremal::{
    extremal_exponent, extremal_union_construct, family_ip_optimum, k_s_bound, single_minor_optimum, small_n_bound,
    wood_bound, EnvelopePoint, SmallNBound,
};
use cliqueminor::harness::{parse_graph, parse_graph6, run_suite, serialize_graph, GraphFormat, SuiteParams, SUITES};
use cliqueminor::matching::{maximum_matching, missing_matching_size};
use cliqueminor::minor::{find_minor_model_with_budget, hadwiger_dense, hadwiger_exact, MinorSearch, DEFAULT_BUDGET};
use cliqueminor::social::{best_contraction_minor, verify_structure_with, AlphaStar, SearchMode};
use cliqueminor::{BigRational, Error, ExactEnvelope, ForbiddenMinorSpec, Graph, Rational, Result};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "cliqueminor", version, about = "Exact clique counts, minors and extremal bounds for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph text; a literal `\n` is read as a newline.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    graph: Option<String>,
    /// Read the graph from a file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: GraphFormat,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        let text = match (&self.graph, &self.file) {
            (Some(s), _) => s.replace("\\n", "\n"),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display())))?,
            (None, None) => unreachable!("clap requires one input"),
        };
        parse_graph(&text, self.format)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HadwigerMode {
    Exact,
    Dense,
}

#[derive(Subcommand)]
enum Command {
    /// Clique count, clique number and per-vertex clique fractions.
    Census(GraphInput),
    /// Search for a minor model.
    Minor {
        #[command(flatten)]
        input: GraphInput,
        /// The minor: `kN` or `g6:<graph6>`.
        #[arg(long)]
        pattern: String,
        /// Search steps before giving up as indeterminate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Hadwiger number with a witness model.
    Hadwiger {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "exact")]
        mode: HadwigerMode,
    },
    /// Maximum matching, and the maximum matching of the complement.
    Matching(GraphInput),
    /// Shape optima and closed-form bounds.
    Bound {
        /// Forbidden minor: `kN`, `t:x` or `g6:<graph6>`. Repeat for a family.
        #[arg(long, required_unless_present_any = ["ks", "wood", "small_n"])]
        family: Vec<String>,
        /// Bound on cliques over graphs with n + omega <= S.
        #[arg(long, value_name = "S", conflicts_with_all = ["family", "wood", "small_n"])]
        ks: Option<usize>,
        /// Clique maximum for K_T-minor-free graphs on N vertices.
        #[arg(long, num_args = 2, value_names = ["T", "N"], conflicts_with_all = ["family", "small_n"])]
        wood: Option<Vec<usize>>,
        /// Construction and bound for K_T-minor-free graphs on N <= (4T-2)/3 vertices.
        #[arg(long, num_args = 2, value_names = ["T", "N"], conflicts_with = "family")]
        small_n: Option<Vec<usize>>,
    },
    /// Disjoint union of shapes with the most cliques on N vertices.
    Construct {
        /// Forbidden minor, as for `bound`. Repeat for a family.
        #[arg(long, required = true)]
        family: Vec<String>,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Also print the graph in this format.
        #[arg(long, value_enum)]
        emit: Option<GraphFormat>,
    },
    /// Social check, bad vertices and structure.
    Social {
        #[command(flatten)]
        input: GraphInput,
        /// Threshold offset below (2 - sqrt 2)/2, as `num/den`.
        #[arg(long, default_value = "1/1000")]
        offset: String,
        /// Also search for the contraction minor with the most cliques.
        #[arg(long)]
        best_minor: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Largest graph order to enumerate.
        #[arg(long)]
        max_n: Option<usize>,
        /// Size of the forbidden clique.
        #[arg(long)]
        t: Option<usize>,
        /// Number of vertices.
        #[arg(long)]
        n: Option<usize>,
        /// Largest t to sweep.
        #[arg(long)]
        max_t: Option<usize>,
        /// Minor-search step budget.
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
fn int_json(v: impl ToString) -> Value {
    let s = v.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

fn ratio_json(num: impl ToString, den: impl ToString) -> Value {
    json!({ "num": int_json(num), "den": int_json(den) })
}

fn point_json(p: &EnvelopePoint<Rational>) -> Value {
    json!({ "a": ratio_json(p.a.numer(), p.a.denom()), "b": ratio_json(p.b.numer(), p.b.denom()) })
}

fn pattern_graph(s: &str) -> Result<Graph> {
    if let Some(g6) = s.strip_prefix("g6:") {
        return parse_graph6(g6);
    }
    match s.strip_prefix('k').or_else(|| s.strip_prefix('K')).map(str::parse::<usize>) {
        Some(Ok(t)) => Ok(Graph::complete(t)),
        _ => Err(Error::InvalidInput(format!("cannot read minor {s:?}; use kN or g6:<graph6>"))),
    }
}

fn family_member(s: &str) -> Result<ForbiddenMinorSpec> {
    if let Some((t, x)) = s.split_once(':').filter(|(t, _)| *t != "g6") {
        let parse = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("cannot read family member {s:?}")))
        };
        return ForbiddenMinorSpec::from_params(parse(t)?, parse(x)?);
    }
    ForbiddenMinorSpec::from_graph(&pattern_graph(s)?)
}

fn family(specs: &[String]) -> Result<Vec<ForbiddenMinorSpec>> {
    specs.iter().map(|s| family_member(s)).collect()
}

fn model_json(sets: &[Vec<usize>]) -> Value {
    json!(sets)
}

fn run(cmd: Command) -> Result<(Value, bool)> {
    let out = match cmd {
        Command::Census(input) => {
            let g = input.load()?;
            let c = clique_census(&g);
            json!({
                "n": g.vertex_count(),
                "count": c.total.to_string(),
                "omega": c.omega,
                "containing": c.containing.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "alpha": c.fractions.iter().map(|f| ratio_json(f.numer(), f.denom())).collect::<Vec<_>>(),
            })
        }
        Command::Minor { input, pattern, budget } => {
            let g = input.load()?;
            let h = pattern_graph(&pattern)?;
            match find_minor_model_with_budget(&g, &h, budget)? {
                MinorSearch::Found(m) => json!({ "result": "found", "branch_sets": model_json(&m.branch_sets) }),
                MinorSearch::Absent => json!({ "result": "absent" }),
                MinorSearch::Indeterminate { steps } => json!({ "result": "indeterminate", "steps": steps }),
            }
        }
        Command::Hadwiger { input, mode } => {
            let g = input.load()?;
            let (h, m) = match mode {
                HadwigerMode::Exact => hadwiger_exact(&g)?,
                HadwigerMode::Dense => hadwiger_dense(&g)?,
            };
            json!({ "hadwiger": h, "branch_sets": model_json(&m.branch_sets) })
        }
        Command::Matching(input) => {
            let g = input.load()?;
            let m = maximum_matching(&g);
            json!({ "size": m.size(), "edges": m.edges, "missing_matching": missing_matching_size(&g) })
        }
        Command::Bound { family: fam, ks, wood, small_n } => {
            if let Some(s) = ks {
                let b = k_s_bound(s);
                json!({ "s": s, "statement": format!("c^3 <= 3^{s}"), "bound": b.to_f64(), "witness": b.witness })
            } else if let Some(v) = wood {
                json!({ "t": v[0], "n": v[1], "count": wood_bound(v[0], v[1])?.to_string() })
            } else if let Some(v) = small_n {
                match small_n_bound(v[0], v[1])? {
                    SmallNBound::Clique { n, count } => json!({ "case": "clique", "n": n, "count": count.to_string() }),
                    SmallNBound::Matching { shape, count, upper, upper_count } => json!({
                        "case": "matching",
                        "shape": shape,
                        "count": count.to_string(),
                        "upper_count": upper_count.to_string(),
                        "upper_exponent": {
                            "log3": ratio_json(upper.log3_coefficient.numer(), upper.log3_coefficient.denom()),
                            "constant": ratio_json(upper.constant.numer(), upper.constant.denom()),
                        },
                    }),
                }
            } else {
                let fam = family(&fam)?;
                let opt = if fam.len() == 1 {
                    single_minor_optimum(&fam[0])?
                } else {
                    family_ip_optimum(&fam)?
                };
                let env = ExactEnvelope::build(&fam)?;
                let e = extremal_exponent(&fam)?;
                json!({
                    "family": fam.iter().map(|s| json!({ "t": s.t, "x": s.x })).collect::<Vec<_>>(),
                    "shape": opt.shape,
                    "count": opt.clique_count.to_string(),
                    "lp_point": point_json(&opt.lp.point),
                    "lp_value_log2": opt.lp.value_log2,
                    "ratio": opt.gap_ratio(),
                    "extreme_points": env.extreme_points.iter().map(point_json).collect::<Vec<_>>(),
                    "exponent": {
                        "log3": ratio_json(e.exponent.log3_coefficient.numer(), e.exponent.log3_coefficient.denom()),
                        "constant": ratio_json(e.exponent.constant.numer(), e.exponent.constant.denom()),
                        "value": e.exponent.to_f64(),
                    },
                })
            }
        }
        Command::Construct { family: fam, n, emit } => {
            let fam = family(&fam)?;
            let c = extremal_union_construct(&fam, n)?;
            let mut v = json!({
                "n": n,
                "count": c.count.to_string(),
                "pieces": c.multiplicities().iter().map(|(s, k)| json!({ "shape": s, "copies": k })).collect::<Vec<_>>(),
            });
            if let Some(f) = emit {
                v["graph"] = Value::from(serialize_graph(&c.to_graph(), f));
            }
            v
        }
        Command::Social { input, offset, best_minor } => {
            let g = input.load()?;
            let (num, den) = offset
                .split_once('/')
                .and_then(|(a, b)| Some((a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)))
                .filter(|&(_, d)| d != 0)
                .ok_or_else(|| Error::InvalidInput(format!("cannot read offset {offset:?}; use num/den")))?;
            let threshold = AlphaStar::with_offset(BigRational::new(BigInt::from(num), BigInt::from(den)))?;
            let r = verify_structure_with(&g, &threshold)?;
            let mut v = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
            v["alpha_star"] = Value::from(threshold.to_f64());
            if best_minor {
                let m = best_contraction_minor(&g)?;
                v["best_minor"] = json!({
                    "count": m.count.to_string(),
                    "branch_sets": m.branch_sets,
                    "mode": match m.mode { SearchMode::Exact => "exact", SearchMode::Heuristic => "heuristic" },
                    "graph": serialize_graph(&m.graph, GraphFormat::EdgeList),
                });
            }
            v
        }
        Command::Verify { suite, max_n, t, n, max_t, budget } => {
            let r = run_suite(&suite, &SuiteParams { max_n, t, n, max_t, budget })?;
            let passed = r.passed;
            let v = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
            return Ok((v, passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((mut v, ok)) => {
            if v.get("schema_version").is_none() {
                v["schema_version"] = Value::from(SCHEMA_VERSION);
            }
            println!("{v}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!("{}", json!({ "schema_version": SCHEMA_VERSION, "error": e.to_string() }));
            ExitCode::from(1)
        }
    }
}
