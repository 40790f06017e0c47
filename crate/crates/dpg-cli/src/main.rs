//! `dpg`: build, verify, and export Hamilton cycles in double generalized
//! Petersen graphs DP(n, t).
//!
//! Exit codes: 0 on success, 1 when a cycle or certificate fails
//! verification, 2 for usage errors, bad parameters, or malformed input,
//! 3 for an invalid offset sequence, 4 for internal construction defects.

mod sweep;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dpg::{
    decode_certificate, encode_certificate, encode_dot, encode_edge_list, even_hamilton,
    odd_hamilton, ASequence, Construction, ConstructError, CycleCertificate, DpGraph, FormatError,
    GraphParams, HamiltonCycle,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SEQUENCE: u8 = 3;
const EXIT_INTEGRITY: u8 = 4;

#[derive(Parser)]
#[command(name = "dpg", version, about = "Hamilton cycles in double generalized Petersen graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a Hamilton cycle of DP(n, t) and print it
    Cycle {
        /// Cycle length parameter: DP(n, t) has 4n vertices
        n: usize,
        /// Inner edge offset, with 1 <= t and 2t < n
        t: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = CycleFormat::List)]
        format: CycleFormat,
        /// Offsets a_0,a_1,...,a_2k for odd n; defaults to the canonical
        /// sequence. Rejected for even n.
        #[arg(long, value_delimiter = ',', value_name = "A0,A1,...")]
        a: Option<Vec<usize>>,
    },
    /// Re-check a certificate produced by `cycle --format cert`
    Verify {
        /// Path to a JSON certificate file
        file: PathBuf,
    },
    /// Construct and verify cycles across a range of parameters
    Sweep(sweep::SweepArgs),
    /// Print the graph itself, without any cycle
    Export {
        n: usize,
        t: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = ExportFormat::Edges)]
        format: ExportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CycleFormat {
    /// One vertex label per line, in cycle order
    List,
    /// JSON certificate that `verify` accepts
    Cert,
    /// Graphviz source with the cycle edges highlighted
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    /// Header line "n t", then one edge per line as serial ids
    Edges,
    /// Graphviz source
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Cycle { n, t, format, a } => cmd_cycle(n, t, format, a),
        Command::Verify { file } => cmd_verify(&file),
        Command::Sweep(args) => sweep::cmd_sweep(&args),
        Command::Export { n, t, format } => cmd_export(n, t, format),
    }
}

/// Exit code for a failed construction: parameter and parity mistakes are
/// usage errors, bad offsets are the caller's data, everything else means
/// the construction itself produced a defect.
fn construct_exit(err: &ConstructError) -> u8 {
    match err {
        ConstructError::Params(_)
        | ConstructError::RequiresEvenN { .. }
        | ConstructError::RequiresOddN { .. } => EXIT_USAGE,
        ConstructError::ASequence(_) => EXIT_SEQUENCE,
        _ => EXIT_INTEGRITY,
    }
}

fn fail(code: u8, err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(code)
}

/// Writes the finished output to stdout. A broken pipe (the reader went
/// away, as with `dpg cycle 7 3 | head`) ends the run quietly instead of
/// panicking.
pub(crate) fn emit(text: &str) -> ExitCode {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => fail(EXIT_USAGE, format_args!("cannot write output: {e}")),
    }
}

fn cmd_cycle(n: usize, t: usize, format: CycleFormat, a: Option<Vec<usize>>) -> ExitCode {
    let params = match GraphParams::new(n, t) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let g = DpGraph::new(params);
    let offsets = match a {
        Some(entries) => match ASequence::new(params, entries) {
            Ok(seq) => Some(seq),
            Err(e) => return fail(EXIT_SEQUENCE, e),
        },
        None if params.n_is_odd() => match ASequence::canonical(params) {
            Ok(seq) => Some(seq),
            Err(e) => return fail(EXIT_SEQUENCE, e),
        },
        None => None,
    };
    let built = match &offsets {
        Some(seq) => odd_hamilton(&g, seq),
        None => even_hamilton(&g),
    };
    let cycle = match built {
        Ok(c) => c,
        Err(e) => {
            let code = construct_exit(&e);
            return fail(code, e);
        }
    };
    print_cycle(&g, &cycle, offsets.as_ref(), format)
}

fn print_cycle(
    g: &DpGraph,
    cycle: &HamiltonCycle,
    offsets: Option<&ASequence>,
    format: CycleFormat,
) -> ExitCode {
    match format {
        CycleFormat::List => {
            let mut text = String::new();
            for v in cycle.vertices() {
                text.push_str(&format!("{v}\n"));
            }
            emit(&text)
        }
        CycleFormat::Cert => {
            let construction = match offsets {
                Some(_) => Construction::OddPqrs,
                None => Construction::EvenLadder,
            };
            match CycleCertificate::new(g, construction, offsets, cycle) {
                Ok(cert) => emit(&encode_certificate(&cert)),
                Err(e) => fail(EXIT_INTEGRITY, e),
            }
        }
        CycleFormat::Dot => match encode_dot(g, Some(cycle)) {
            Ok(text) => emit(&text),
            Err(e) => fail(EXIT_INTEGRITY, e),
        },
    }
}

fn cmd_verify(file: &PathBuf) -> ExitCode {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_USAGE, format_args!("cannot read {}: {e}", file.display())),
    };
    match decode_certificate(&text) {
        Ok(cert) => emit(&format!(
            "ok: DP({}, {}) Hamilton cycle with {} vertices ({})\n",
            cert.n(),
            cert.t(),
            cert.cycle().len(),
            cert.construction()
        )),
        Err(FormatError::Verification(report)) => {
            eprintln!("certificate cycle fails verification:");
            for finding in report.findings() {
                eprintln!("  {finding}");
            }
            ExitCode::from(EXIT_VERIFY)
        }
        Err(e) => {
            let code = if e.is_malformed() { EXIT_USAGE } else { EXIT_VERIFY };
            fail(code, e)
        }
    }
}

fn cmd_export(n: usize, t: usize, format: ExportFormat) -> ExitCode {
    let g = match DpGraph::build(n, t) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    match format {
        ExportFormat::Edges => emit(&encode_edge_list(&g)),
        ExportFormat::Dot => match encode_dot(&g, None) {
            Ok(text) => emit(&text),
            Err(e) => fail(EXIT_INTEGRITY, e),
        },
    }
}
