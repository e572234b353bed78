use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ringgraph::graph::{
    are_isomorphic, domination_number_exact, is_dominating, verify_isomorphism, Graph, TriState,
};
use ringgraph::ring::Ring;
use ringgraph::sweep::{run_sweep, SweepConfig};
use ringgraph::theorems::{
    analyze, build_cayley_graph_with_cap, build_total_graph_with_cap, construct_dominating_set,
    construct_iso_witness, predict_domination, predict_tau_iso_cayley, Budgets,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "ringgraph",
    version,
    about = "Total graphs of finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare every prediction for a ring with its graph oracle
    Analyze {
        spec: String,
        #[command(flatten)]
        opts: BudgetOpts,
        #[arg(long)]
        json: bool,
    },
    /// Analyze every product of catalog local rings up to an order
    Sweep {
        #[arg(long, default_value_t = 64)]
        max_order: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        opts: BudgetOpts,
        #[arg(long)]
        json: bool,
    },
    /// Export the total or Cayley graph as DOT
    Dot {
        spec: String,
        #[arg(long, value_enum, default_value_t = Which::Tau)]
        graph: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct and verify a dominating set of the predicted size
    Dominate {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Construct and verify an isomorphism from the total to the Cayley graph
    Iso {
        spec: String,
        #[command(flatten)]
        opts: BudgetOpts,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct BudgetOpts {
    /// Skip the isomorphism search
    #[arg(long)]
    skip_iso: bool,
    /// Node budget for the isomorphism search
    #[arg(long)]
    budget_iso: Option<u64>,
}

impl BudgetOpts {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::from_env();
        b.skip_iso = self.skip_iso;
        if let Some(n) = self.budget_iso {
            b.iso_budget = n;
        }
        b
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Tau,
    Cayley,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn parse(spec: &str) -> Result<Ring, String> {
    Ring::parse(spec).map_err(|e| format!("{spec:?}: {e}"))
}

fn print_json(value: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Analyze { spec, opts, json } => {
            let ring = parse(&spec)?;
            let report = analyze(&ring, &opts.budgets()).map_err(|e| e.to_string())?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_table());
            }
            Ok(if report.is_ok() { 0 } else { EXIT_MISMATCH })
        }
        Command::Sweep {
            max_order,
            jobs,
            opts,
            json,
        } => {
            let mut config = SweepConfig::new(max_order);
            config.budgets = opts.budgets();
            config.jobs = jobs;
            let summary = run_sweep(&config)?;
            if json {
                print_json(&summary);
            } else {
                println!(
                    "rings {}  match {}  skipped {}  mismatch {}  errors {}",
                    summary.rings,
                    summary.matches,
                    summary.skipped,
                    summary.mismatches,
                    summary.errors
                );
                for entry in summary.failing() {
                    match (&entry.report, &entry.error) {
                        (Some(report), _) => {
                            for row in report.mismatches() {
                                println!(
                                    "mismatch {}: {} predicted {} computed {}",
                                    entry.spec, row.property, row.predicted, row.computed
                                );
                            }
                            if let Some(cx) = &report.counterexample {
                                println!("counterexample {}", cx.spec);
                                print!("{}", cx.total_graph_dot);
                            }
                        }
                        (None, Some(error)) => println!("error {}: {error}", entry.spec),
                        (None, None) => {}
                    }
                }
            }
            Ok(if summary.is_ok() { 0 } else { EXIT_MISMATCH })
        }
        Command::Dot { spec, graph, out } => {
            let ring = parse(&spec)?;
            let cap = Budgets::from_env().graph_cap;
            let g = match graph {
                Which::Tau => build_total_graph_with_cap(&ring, cap),
                Which::Cayley => build_cayley_graph_with_cap(&ring, cap),
            }
            .map_err(|e| e.to_string())?;
            let dot = g.to_dot(&ring.vertex_labels());
            match out {
                Some(path) => {
                    fs::write(&path, dot).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => print!("{dot}"),
            }
            Ok(0)
        }
        Command::Dominate { spec, json } => dominate(&parse(&spec)?, json),
        Command::Iso { spec, opts, json } => iso(&parse(&spec)?, &opts.budgets(), json),
    }
}

fn graphs(ring: &Ring, budgets: &Budgets) -> Result<(Graph, Graph), String> {
    ringgraph::theorems::graph_pair(ring, budgets).map_err(|e| e.to_string())
}

fn dominate(ring: &Ring, json: bool) -> Result<u8, String> {
    let budgets = Budgets::from_env();
    let tau = build_total_graph_with_cap(ring, budgets.graph_cap).map_err(|e| e.to_string())?;
    let predicted = predict_domination(ring);
    let witness = construct_dominating_set(ring);
    let ids = witness.vertex_ids(ring);
    let verified = is_dominating(&tau, &ids);
    let elements: Vec<String> = witness
        .elements
        .iter()
        .map(|x| ring.format_element(x))
        .collect();
    let exact = if tau.n() <= budgets.domination_vertex_limit {
        domination_number_exact(&tau, budgets.domination_cap)
            .ok()
            .map(|d| d.size)
    } else {
        None
    };
    let ok = verified && ids.len() == predicted && exact.is_none_or(|g| g == predicted);
    if json {
        print_json(&json!({
            "ring": ring.spec().to_string(),
            "predicted": predicted,
            "construction": witness.construction,
            "witness": elements,
            "dominating": verified,
            "exact": exact,
        }));
    } else {
        println!("ring {}", ring.spec());
        println!("predicted domination number {predicted}");
        println!(
            "witness {{{}}} ({:?})",
            elements.join(", "),
            witness.construction
        );
        println!(
            "dominating {}",
            if verified { "verified" } else { "FAILED" }
        );
        match exact {
            Some(g) => println!("exact domination number {g}"),
            None => println!("exact domination number not computed"),
        }
    }
    Ok(if ok { 0 } else { EXIT_MISMATCH })
}

fn iso(ring: &Ring, budgets: &Budgets, json: bool) -> Result<u8, String> {
    let (tau, cayley) = graphs(ring, budgets)?;
    let prediction = predict_tau_iso_cayley(ring);
    let oracle = if budgets.skip_iso || tau.n() > budgets.iso_max_order {
        TriState::Unknown
    } else {
        are_isomorphic(&tau, &cayley, budgets.iso_budget).verdict
    };
    let (verified, condition) = if prediction.holds() {
        let witness = construct_iso_witness(ring).map_err(|e| e.to_string())?;
        (
            Some(verify_isomorphism(&tau, &cayley, &witness.map)),
            Some(witness.condition),
        )
    } else {
        (None, None)
    };
    let ok = verified.unwrap_or(true)
        && oracle
            .definite()
            .is_none_or(|iso| iso == prediction.holds());
    if json {
        print_json(&json!({
            "ring": ring.spec().to_string(),
            "predicted": prediction.holds(),
            "condition_a": prediction.condition_a,
            "condition_b": prediction.condition_b,
            "witness_condition": condition,
            "witness_verified": verified,
            "oracle": format!("{oracle:?}").to_lowercase(),
        }));
    } else {
        println!("ring {}", ring.spec());
        match (condition, verified) {
            (Some(c), Some(v)) => println!(
                "isomorphic: condition {c:?} map {}",
                if v { "verified" } else { "FAILED verification" }
            ),
            _ => println!(
                "not isomorphic (factors not all of even order, and not k >= 2 with f1 = 2)"
            ),
        }
        println!("oracle {}", format!("{oracle:?}").to_lowercase());
    }
    Ok(if ok { 0 } else { EXIT_MISMATCH })
}
