//! The `sweep` subcommand: construct and verify Hamilton cycles for every
//! DP(n, t) in a parameter range, optionally cross-checking against the
//! exhaustive search.

use std::process::ExitCode;

use clap::Args;
use dpg::{
    brute_force_hamilton, hamilton_cycle, verify_hamilton, DpGraph, GraphParams, OracleError,
    SearchBudget,
};
use rayon::prelude::*;

#[derive(Args)]
pub struct SweepArgs {
    /// Smallest n to check (at least 3)
    #[arg(long, default_value_t = 3)]
    pub min_n: usize,
    /// Largest n to check
    #[arg(long, default_value_t = 31)]
    pub max_n: usize,
    /// Check only these t values; default is every t with 2t < n.
    /// Every listed t must be valid for every n in range.
    #[arg(long, value_delimiter = ',', value_name = "T1,T2,...")]
    pub t: Option<Vec<usize>>,
    /// Cross-check each pair against the exhaustive search
    #[arg(long)]
    pub oracle: bool,
    /// Skip the search on graphs with more vertices than this
    #[arg(long, default_value_t = 48)]
    pub oracle_max_vertices: usize,
    /// Abort the search for a pair after this many steps
    #[arg(long, default_value_t = 100_000_000)]
    pub oracle_max_steps: u64,
    /// Worker threads; defaults to one per core
    #[arg(long)]
    pub jobs: Option<usize>,
}

enum OracleOutcome {
    /// Search not requested.
    Off,
    /// Graph exceeds the vertex cap; skipped, not a failure.
    TooLarge,
    /// Step budget ran out before the search finished; not a failure.
    BudgetExhausted,
    /// Search found a Hamilton cycle, matching the constructive result.
    Agreed,
    /// Search disagreed or broke down.
    Failed(String),
}

struct PairOutcome {
    n: usize,
    t: usize,
    /// First verification finding, if the constructed cycle did not pass.
    failure: Option<String>,
    oracle: OracleOutcome,
}

impl PairOutcome {
    fn passed(&self) -> bool {
        self.failure.is_none() && !matches!(self.oracle, OracleOutcome::Failed(_))
    }

    fn line(&self) -> String {
        let mut out = format!("n={} t={}", self.n, self.t);
        match &self.failure {
            None => out.push_str(" verify=ok"),
            Some(msg) => out.push_str(&format!(" verify=FAIL({msg})")),
        }
        match &self.oracle {
            OracleOutcome::Off => {}
            OracleOutcome::TooLarge => out.push_str(" oracle=skipped(too-large)"),
            OracleOutcome::BudgetExhausted => out.push_str(" oracle=skipped(budget)"),
            OracleOutcome::Agreed => out.push_str(" oracle=agreed"),
            OracleOutcome::Failed(msg) => out.push_str(&format!(" oracle=FAIL({msg})")),
        }
        out
    }
}

fn check_pair(n: usize, t: usize, budget: Option<&SearchBudget>) -> PairOutcome {
    let failure = match hamilton_cycle(n, t) {
        Ok(cycle) => {
            let g = DpGraph::build(n, t).expect("parameters validated before the sweep");
            let report = verify_hamilton(&g, cycle.vertices());
            if report.ok() {
                None
            } else {
                report.findings().first().map(|f| f.to_string())
            }
        }
        Err(e) => Some(e.to_string()),
    };
    let oracle = match budget {
        None => OracleOutcome::Off,
        Some(budget) if 4 * n > budget.max_vertices => OracleOutcome::TooLarge,
        Some(budget) => {
            let g = DpGraph::build(n, t).expect("parameters validated before the sweep");
            match brute_force_hamilton(&g, budget) {
                Ok(Some(_)) => OracleOutcome::Agreed,
                Ok(None) => OracleOutcome::Failed("search found no Hamilton cycle".into()),
                Err(OracleError::BudgetExhausted { .. }) => OracleOutcome::BudgetExhausted,
                Err(e) => OracleOutcome::Failed(e.to_string()),
            }
        }
    };
    PairOutcome { n, t, failure, oracle }
}

/// Expands the range into (n, t) pairs, rejecting an explicit t list that is
/// invalid for any n in range.
fn pairs(args: &SweepArgs) -> Result<Vec<(usize, usize)>, String> {
    if args.min_n < 3 {
        return Err(format!("--min-n must be at least 3, got {}", args.min_n));
    }
    if args.min_n > args.max_n {
        return Err(format!(
            "empty range: --min-n {} exceeds --max-n {}",
            args.min_n, args.max_n
        ));
    }
    let mut out = Vec::new();
    for n in args.min_n..=args.max_n {
        match &args.t {
            Some(ts) => {
                for &t in ts {
                    GraphParams::new(n, t)
                        .map_err(|e| format!("--t {t} is invalid for n = {n}: {e}"))?;
                    out.push((n, t));
                }
            }
            None => {
                for t in 1..=(n - 1) / 2 {
                    out.push((n, t));
                }
            }
        }
    }
    Ok(out)
}

fn run(args: &SweepArgs) -> Result<Vec<PairOutcome>, String> {
    let pairs = pairs(args)?;
    let budget = args.oracle.then(|| SearchBudget {
        max_vertices: args.oracle_max_vertices,
        max_steps: args.oracle_max_steps,
    });
    let check_all = |pairs: &[(usize, usize)]| {
        let mut outcomes: Vec<PairOutcome> = pairs
            .par_iter()
            .map(|&(n, t)| check_pair(n, t, budget.as_ref()))
            .collect();
        outcomes.sort_by_key(|o| (o.n, o.t));
        outcomes
    };
    match args.jobs {
        None => Ok(check_all(&pairs)),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| format!("cannot start {jobs} worker threads: {e}"))?
            .install(|| Ok(check_all(&pairs))),
    }
}

pub fn cmd_sweep(args: &SweepArgs) -> ExitCode {
    let outcomes = match run(args) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(super::EXIT_USAGE);
        }
    };
    let mut table = String::new();
    for outcome in &outcomes {
        table.push_str(&outcome.line());
        table.push('\n');
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    table.push_str(&format!("checked {} pairs, {} failed\n", outcomes.len(), failed));
    let emitted = super::emit(&table);
    if failed == 0 {
        emitted
    } else {
        ExitCode::from(super::EXIT_VERIFY)
    }
}
