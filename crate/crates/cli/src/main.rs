//! `wlpa`: classify weighted graphs by the structure of their weighted
//! Leavitt path algebra, enumerate the nod-path basis, count graded
//! dimensions, rewrite to an unweighted graph and decompose into matrix
//! algebra blocks.
//!
//! Exit codes: 0 success, 1 negative verdict (e.g. `transform` on a graph
//! that is not locally finite), 2 input error, 3 internal assertion.
//! Stdout carries a single machine-parseable JSON document; diagnostics
//! go to stderr.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use wlpa::classify::{classify, Condition, ConditionWitness, NonNoetherianWitness};
use wlpa::decompose::{decompose, total_dimension, TotalDimension};
use wlpa::graph::{parse_graph, serialize_graph, Format, WeightedGraph};
use wlpa::nod::{count_by_degree, enumerate_nod, word_range, word_source, Degree};
use wlpa::quasicycle::{primed_sets, quasicycles};
use wlpa::rewrite::unweight_pipeline;
use wlpa::{oracle, Error, SpecialSelection};

#[derive(Parser)]
#[command(name = "wlpa", version, about = "Weighted Leavitt path algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input graph file (`.wg` text or JSON)
    file: PathBuf,

    /// Input format; inferred from the extension when omitted
    #[arg(long, value_parser = ["wg", "json"])]
    format: Option<String>,
}

#[derive(Args)]
struct SpecialArgs {
    /// Override the special edge at a vertex, as VERTEX:EDGE (repeatable)
    #[arg(long = "special", value_name = "VERTEX:EDGE")]
    special: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a graph, reporting basic statistics
    Validate(InputArgs),
    /// Report the classification verdicts with witnesses
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        special: SpecialArgs,
    },
    /// Enumerate the nod-path basis up to a length bound
    Basis {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        special: SpecialArgs,
        /// Length bound (default: twice the letter count)
        #[arg(long = "max-len")]
        max_len: Option<usize>,
        /// Keep only words of this degree, comma-joined integers
        #[arg(long)]
        degree: Option<String>,
    },
    /// Count nod-paths per degree up to a length bound
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        special: SpecialArgs,
        #[arg(long = "max-len")]
        max_len: Option<usize>,
    },
    /// List quasicycles and the homogeneous dimension bound data
    Quasicycles {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        special: SpecialArgs,
    },
    /// Rewrite a locally finite graph to an unweighted one
    Transform {
        #[command(flatten)]
        input: InputArgs,
        /// Write the output graph here instead of stdout
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Write the rewrite trace (JSON) here
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Decompose an unweighted no-exit graph into matrix algebra blocks
    Decompose(InputArgs),
    /// Brute-force nod counting (reference implementation, exponential)
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        special: SpecialArgs,
        #[arg(long = "max-len")]
        max_len: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("wlpa: {err}");
            match err {
                Error::InternalAssertion(_) | Error::CapExceeded(_) => ExitCode::from(3),
                Error::NotLocallyFinite => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Validate(input) => {
            let g = load(&input)?;
            let classes = g.edge_classes();
            emit(json!({
                "vertices": g.vertices().len(),
                "edges": g.edges().len(),
                "weighted_edges": classes.weighted.len(),
                "max_weight": g.max_weight(),
                "letters": letter_count(&g),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { input, special } => {
            let g = load(&input)?;
            // the special selection enters only through witness search
            let _ = selection(&g, &special)?;
            let report = classify(&g)?;
            let conditions: BTreeMap<&str, Value> = Condition::ALL
                .iter()
                .map(|c| {
                    let verdict = report.conditions.verdict(*c);
                    (c.label(), json!(if verdict.holds() { "holds" } else { "fails" }))
                })
                .collect();
            let mut witnesses: Vec<Value> = Vec::new();
            for c in Condition::ALL {
                if let Some(w) = report.conditions.verdict(c).witness() {
                    witnesses.push(condition_witness_json(c, w));
                }
            }
            if let Some(w) = &report.cycle_with_exit {
                witnesses.push(json!({
                    "kind": "cycle-with-exit",
                    "cycle": w.cycle,
                    "exit": w.exit,
                }));
            }
            if let Some(w) = &report.non_noetherian_witness {
                let (kind, word) = match w {
                    NonNoetherianWitness::WeightedReturn { word } => ("weighted-return", word),
                    NonNoetherianWitness::IsometryDefect { word } => ("isometry-defect", word),
                };
                witnesses.push(json!({
                    "kind": "non-noetherian",
                    "shape": kind,
                    "word": word.to_string(),
                }));
            }
            emit(json!({
                "finite_dimensional": report.finite_dimensional,
                "locally_finite": report.locally_finite,
                "noetherian": report.noetherian,
                "gk": report.gk.to_string(),
                "conditions": conditions,
                "witnesses": witnesses,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis {
            input,
            special,
            max_len,
            degree,
        } => {
            let g = load(&input)?;
            let sp = selection(&g, &special)?;
            let max_len = max_len.unwrap_or_else(|| 2 * letter_count(&g));
            let n = g.max_weight() as usize;
            let filter = degree
                .map(|text| Degree::parse(&text, n))
                .transpose()?;
            let words = enumerate_nod(&g, &sp, max_len, filter.as_ref());
            let items: Vec<Value> = words
                .iter()
                .map(|w| {
                    json!({
                        "word": w.to_string(),
                        "length": w.len(),
                        "degree": w.degree(n).to_string(),
                        "source": word_source(&g, w).expect("enumerated word"),
                        "range": word_range(&g, w).expect("enumerated word"),
                    })
                })
                .collect();
            emit(json!({
                "max_len": max_len,
                "count": words.len(),
                "words": items,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilbert {
            input,
            special,
            max_len,
        } => {
            let g = load(&input)?;
            let sp = selection(&g, &special)?;
            let max_len = max_len.unwrap_or_else(|| 2 * letter_count(&g));
            let counts = count_by_degree(&g, &sp, max_len);
            emit(json!({
                "max_len": max_len,
                "total": big_json(&counts.values().sum::<BigUint>()),
                "by_degree": degree_map_json(&counts),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Quasicycles { input, special } => {
            let g = load(&input)?;
            let sp = selection(&g, &special)?;
            let qs = quasicycles(&g, &sp)?;
            let primed = primed_sets(&g, &sp)?;
            emit(json!({
                "quasicycles": qs.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                "k": primed.quasicycle_count,
                "l": primed.max_quasicycle_len,
                "p_prime": primed.p_prime.len(),
                "bound": big_json(&primed.homogeneous_bound()),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform {
            input,
            output,
            trace,
        } => {
            let g = load(&input)?;
            let (result, rewrite_trace) = unweight_pipeline(&g)?;
            let text = serialize_graph(&result, Format::Wg);
            if let Some(path) = &trace {
                std::fs::write(path, rewrite_trace.to_json()).map_err(io_error)?;
            }
            match output {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(io_error)?;
                    emit(json!({
                        "steps": rewrite_trace.steps.len(),
                        "vertices": result.vertices().len(),
                        "edges": result.edges().len(),
                        "output": path.display().to_string(),
                    }));
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose(input) => {
            let g = load(&input)?;
            match decompose(&g) {
                Ok(d) => {
                    let blocks: Vec<Value> = d
                        .blocks
                        .iter()
                        .map(|b| {
                            json!({
                                "size": big_json(&b.size),
                                "ring": b.ring.to_string(),
                                "at": b.at,
                            })
                        })
                        .collect();
                    emit(json!({
                        "blocks": blocks,
                        "pretty": d.pretty(),
                        "total_dimension": match total_dimension(&d) {
                            TotalDimension::Finite(n) => big_json(&n),
                            TotalDimension::Infinite => json!("infinite"),
                        },
                    }));
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::StructuralPrecondition(msg)) => {
                    eprintln!("wlpa: {msg}");
                    Ok(ExitCode::from(1))
                }
                Err(err) => Err(err),
            }
        }
        Command::Oracle {
            input,
            special,
            max_len,
        } => {
            let g = load(&input)?;
            let sp = selection(&g, &special)?;
            let max_len = max_len.unwrap_or_else(|| 2 * letter_count(&g));
            let counts = oracle::count_by_degree(&g, &sp, max_len);
            emit(json!({
                "max_len": max_len,
                "total": big_json(&counts.values().sum::<BigUint>()),
                "by_degree": degree_map_json(&counts),
            }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load(input: &InputArgs) -> Result<WeightedGraph, Error> {
    let text = std::fs::read_to_string(&input.file).map_err(io_error)?;
    let format = match input.format.as_deref() {
        Some("json") => Format::Json,
        Some(_) => Format::Wg,
        None => infer_format(&input.file),
    };
    parse_graph(&text, format)
}

fn infer_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Format::Json,
        _ => Format::Wg,
    }
}

fn io_error(err: std::io::Error) -> Error {
    Error::Parse {
        line: 0,
        msg: err.to_string(),
    }
}

fn selection(g: &WeightedGraph, args: &SpecialArgs) -> Result<SpecialSelection, Error> {
    let mut overrides = g.declared_special().clone();
    for item in &args.special {
        let (v, e) = item.split_once(':').ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("--special expects VERTEX:EDGE, got `{item}`"),
        })?;
        overrides.insert(v.trim().to_owned(), e.trim().to_owned());
    }
    SpecialSelection::select(g, &overrides)
}

fn letter_count(g: &WeightedGraph) -> usize {
    2 * g.edges().iter().map(|e| e.weight as usize).sum::<usize>()
}

fn degree_map_json(counts: &BTreeMap<Degree, BigUint>) -> Value {
    let map: serde_json::Map<String, Value> = counts
        .iter()
        .map(|(d, c)| (d.to_string(), big_json(c)))
        .collect();
    Value::Object(map)
}

/// Numbers that fit in u64 stay JSON numbers; larger counts become
/// decimal strings.
fn big_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(small) => json!(small),
        Err(_) => json!(n.to_string()),
    }
}

fn condition_witness_json(c: Condition, w: &ConditionWitness) -> Value {
    match w {
        ConditionWitness::TwoWeightedEdges {
            vertex,
            first,
            second,
        } => json!({
            "kind": format!("condition-{}", c.label()),
            "vertex": vertex,
            "edges": [first, second],
        }),
        ConditionWitness::DoubleEmitter {
            vertex,
            first,
            second,
        } => json!({
            "kind": format!("condition-{}", c.label()),
            "vertex": vertex,
            "edges": [first, second],
        }),
        ConditionWitness::OverlappingRangeTrees {
            first,
            second,
            common,
        } => json!({
            "kind": format!("condition-{}", c.label()),
            "edges": [first, second],
            "common": common,
        }),
        ConditionWitness::CycleInWeightedTree { cycle, vertex } => json!({
            "kind": format!("condition-{}", c.label()),
            "cycle": cycle,
            "vertex": vertex,
        }),
        ConditionWitness::CrosswiseSystem { pairs } => json!({
            "kind": format!("condition-{}", c.label()),
            "pairs": pairs
                .iter()
                .map(|(p, q)| json!({"p": p, "q": q}))
                .collect::<Vec<_>>(),
        }),
    }
}

fn emit(value: Value) {
    println!("{value}");
}
