//! `betweenness`: classify graphs, check transit axioms and run
//! verification campaigns from the command line.

mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use betweenness::fixtures::{fixture, FIXTURES};
use betweenness::formats::{emit_edge_list, emit_graph6, parse_constructor};
use betweenness::gated::{gate, gated_amalgam, glue_unchecked, is_gated};
use betweenness::metric::classify;
use betweenness::transit::{check_axioms, emit_transit, AxiomId};
use betweenness::verify::{minimize_counterexample, verify_theorems, Budget, TheoremId};
use betweenness::{Graph, TransitFunction, VertexSet};

use input::{load_graph, load_spec, load_transit, parse_list};

#[derive(Parser)]
#[command(
    name = "betweenness",
    version,
    about = "Interval functions, transit axioms and weakly modular graph classes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the weakly modular classes of a connected graph.
    Classify {
        /// graph6, a constructor like `wheel:5`, a file path, or `-`.
        #[arg(long)]
        graph: String,
    },
    /// Check transit axioms against a graph's interval function or a
    /// transit function.
    CheckAxioms {
        #[arg(long, conflicts_with = "transit", required_unless_present = "transit")]
        graph: Option<String>,
        /// A transit-function file, `-`, or `fixtures/NAME`.
        #[arg(long)]
        transit: Option<String>,
        /// Comma-separated axiom names; all axioms when omitted.
        #[arg(long, value_delimiter = ',')]
        axioms: Vec<String>,
    },
    /// Print the underlying graph `G_R` of a transit function.
    UnderlyingGraph {
        #[arg(long)]
        transit: String,
    },
    /// Gate of a vertex in a set, or whether the set is gated.
    Gate {
        #[arg(long)]
        graph: String,
        /// Comma-separated vertices.
        #[arg(long)]
        set: String,
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Build the gated amalgam described by a JSON spec.
    Amalgam {
        /// Inline JSON, a file path, or `-`.
        #[arg(long)]
        spec: String,
        /// Glue even if the identified sets are not gated.
        #[arg(long)]
        unchecked: bool,
    },
    /// Run verification campaigns (a theorem id, or `all`).
    Verify {
        /// Theorem ids such as T-4.1, or `all`.
        #[arg(required = true)]
        theorems: Vec<String>,
        /// Largest graph order enumerated exhaustively.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Sampled transit functions per size (5 and 6).
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, env = "TOOL_SEED", default_value_t = 0)]
        seed: u64,
        /// Worker threads (defaults to available cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Shrink each listed violation by vertex deletion.
        #[arg(long)]
        minimize: bool,
    },
    /// List the catalogued transit functions or print one.
    Fixtures {
        #[arg(long, conflicts_with = "name")]
        list: bool,
        name: Option<String>,
    },
    /// Emit a constructor graph (`cycle:K`, `path:K`, `complete:K`,
    /// `wheel:K`, `prism`) as graph6.
    Generate {
        constructor: String,
        /// Emit an edge list instead of graph6 in text mode.
        #[arg(long)]
        edges: bool,
    },
}

/// What a subcommand produced: the two renderings and whether it passed.
struct Output {
    json: Value,
    text: String,
    pass: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            pass: true,
        }
    }
}

type Outcome = Result<Output, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
                Format::Text => print!("{}", out.text),
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Classify { graph } => classify_cmd(&load_graph(&graph)?),
        Command::CheckAxioms {
            graph,
            transit,
            axioms,
        } => {
            let axioms = parse_axioms(&axioms)?;
            let r = match (graph, transit) {
                (Some(g), _) => load_graph(&g)?
                    .interval_function()
                    .map_err(|e| e.to_string())?,
                (None, Some(t)) => load_transit(&t)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            Ok(check_axioms_cmd(&r, &axioms))
        }
        Command::UnderlyingGraph { transit } => Ok(underlying_cmd(&load_transit(&transit)?)),
        Command::Gate { graph, set, vertex } => gate_cmd(&load_graph(&graph)?, &set, vertex),
        Command::Amalgam { spec, unchecked } => {
            let spec = load_spec(&spec)?;
            let g = if unchecked {
                glue_unchecked(&spec)
            } else {
                gated_amalgam(&spec)
            }
            .map_err(|e| e.to_string())?;
            let mut out = classify_cmd(&g)?;
            out.json = json!({ "graph6": emit_graph6(&g), "n": g.n(), "classification": out.json });
            out.text = format!(
                "amalgam: {} ({} vertices)\n{}",
                emit_graph6(&g),
                g.n(),
                out.text
            );
            Ok(out)
        }
        Command::Verify {
            theorems,
            max_n,
            samples,
            seed,
            threads,
            minimize,
        } => {
            let budget = Budget {
                max_n,
                samples,
                seed,
                threads: threads.unwrap_or(Budget::default().threads),
            };
            verify_cmd(&theorems, &budget, minimize)
        }
        Command::Fixtures { list, name } => match name {
            Some(name) if !list => fixture_cmd(&name),
            _ => Ok(fixture_list()),
        },
        Command::Generate { constructor, edges } => {
            let g = parse_constructor(&constructor).map_err(|e| e.to_string())?;
            let g6 = emit_graph6(&g);
            let text = if edges {
                emit_edge_list(&g)
            } else {
                format!("{g6}\n")
            };
            Ok(Output::ok(
                json!({ "graph6": g6, "n": g.n(), "edges": g.edges().collect::<Vec<_>>() }),
                text,
            ))
        }
    }
}

fn parse_axioms(names: &[String]) -> Result<Vec<AxiomId>, String> {
    if names.is_empty() {
        return Ok(AxiomId::ALL.to_vec());
    }
    names
        .iter()
        .map(|s| s.parse::<AxiomId>().map_err(|e| e.to_string()))
        .collect()
}

fn classify_cmd(g: &Graph) -> Outcome {
    let report = classify(g).map_err(|e| e.to_string())?;
    let text = format!("graph6: {}\n{}", report.graph6, report.to_text());
    Ok(Output::ok(serde_json::to_value(&report).unwrap(), text))
}

fn check_axioms_cmd(r: &TransitFunction, axioms: &[AxiomId]) -> Output {
    let reports = check_axioms(r, axioms);
    let json = reports
        .iter()
        .map(|rep| {
            let mut v = serde_json::to_value(rep).unwrap();
            if let Some(w) = &rep.witness {
                v["witness_labels"] = json!(w.iter().map(|&x| r.label(x)).collect::<Vec<_>>());
            }
            v["explanation"] = json!(rep.explain(r));
            v
        })
        .collect::<Vec<_>>();
    let text = reports
        .iter()
        .map(|rep| rep.explain(r) + "\n")
        .collect::<String>();
    Output::ok(json!({ "n": r.n(), "reports": json }), text)
}

fn underlying_cmd(r: &TransitFunction) -> Output {
    let g = r.underlying_graph();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let equals = r.equals_interval_function().ok();
    let mut text = format!(
        "graph6: {}\nconnected: {}\n",
        emit_graph6(&g),
        g.is_connected()
    );
    match equals {
        Some(e) => text.push_str(&format!("equals interval function: {e}\n")),
        None => text.push_str("equals interval function: undefined (disconnected)\n"),
    }
    text.push_str("edges:");
    for &(u, v) in &edges {
        text.push_str(&format!(" {}{}", r.label(u), r.label(v)));
    }
    text.push('\n');
    Output::ok(
        json!({
            "graph6": emit_graph6(&g),
            "n": g.n(),
            "edges": edges,
            "connected": g.is_connected(),
            "equals_interval_function": equals,
        }),
        text,
    )
}

fn gate_cmd(g: &Graph, set: &str, vertex: Option<usize>) -> Outcome {
    let s: VertexSet = parse_list(set)?.into_iter().collect();
    if s.iter().any(|v| v >= g.n()) {
        return Err(format!("set {s} is not within 0..{}", g.n()));
    }
    match vertex {
        Some(y) => {
            let x = gate(g, y, s).map_err(|e| e.to_string())?;
            let text = match x {
                Some(x) => format!("gate of {y} in {s}: {x}\n"),
                None => format!("{y} has no gate in {s}\n"),
            };
            Ok(Output::ok(
                json!({ "set": s, "vertex": y, "gate": x }),
                text,
            ))
        }
        None => {
            let gated = is_gated(g, s).map_err(|e| e.to_string())?;
            let gates: Vec<(usize, Option<usize>)> = (g.vertices() - s)
                .iter()
                .map(|y| (y, gate(g, y, s).unwrap()))
                .collect();
            let mut text = format!("{s} gated: {gated}\n");
            for &(y, x) in &gates {
                text.push_str(&match x {
                    Some(x) => format!("  {y} -> {x}\n"),
                    None => format!("  {y} -> none\n"),
                });
            }
            Ok(Output::ok(
                json!({ "set": s, "gated": gated, "gates": gates }),
                text,
            ))
        }
    }
}

fn verify_cmd(ids: &[String], budget: &Budget, minimize: bool) -> Outcome {
    let theorems: Vec<TheoremId> = if ids.len() == 1 && ids[0].eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        ids.iter()
            .map(|s| s.parse().map_err(|e: betweenness::Error| e.to_string()))
            .collect::<Result<_, _>>()?
    };
    let mut reports = verify_theorems(&theorems, budget).map_err(|e| e.to_string())?;
    if minimize {
        reports = reports.iter().map(minimize_counterexample).collect();
    }
    let pass = reports.iter().all(|r| r.pass);
    let text = reports
        .iter()
        .map(|r| r.to_text())
        .collect::<Vec<_>>()
        .join("\n");
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).unwrap()
    } else {
        serde_json::to_value(&reports).unwrap()
    };
    Ok(Output { json, text, pass })
}

fn profile_json(f: &betweenness::fixtures::Fixture) -> Value {
    let mismatches: Vec<Value> = f
        .profile_mismatches()
        .into_iter()
        .map(|(a, documented)| json!({ "axiom": a, "documented": documented, "actual": !documented }))
        .collect();
    json!({
        "name": f.name,
        "description": f.description,
        "holds": f.holds,
        "fails": f.fails,
        "matches_profile": mismatches.is_empty(),
        "mismatches": mismatches,
    })
}

fn fixture_list() -> Output {
    let json: Vec<Value> = FIXTURES.iter().map(profile_json).collect();
    let text = FIXTURES
        .iter()
        .map(|f| format!("{:<11} {}\n", f.name, f.description))
        .collect();
    Output::ok(Value::Array(json), text)
}

fn fixture_cmd(name: &str) -> Outcome {
    let name = name
        .strip_prefix("fixtures/")
        .or_else(|| name.strip_prefix("fixture:"))
        .unwrap_or(name);
    let f = fixture(name).map_err(|e| e.to_string())?;
    let r = f.load();
    let mut json = profile_json(f);
    json["transit"] = json!(emit_transit(&r));
    let mut text = format!("# {}: {}\n{}", f.name, f.description, emit_transit(&r));
    for (a, documented) in f.profile_mismatches() {
        text.push_str(&format!(
            "# note: {a} documented to {} but {}\n",
            if documented { "hold" } else { "fail" },
            if documented { "fails" } else { "holds" }
        ));
    }
    Ok(Output::ok(json, text))
}
