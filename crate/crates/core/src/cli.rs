//! Command-line front end. The `pgraphic` binary is a thin wrapper around
//! [`run`], which writes to caller-supplied sinks and returns the exit code.
//!
//! Exit codes: 0 for a positive result, 1 for a negative one (or crosscheck
//! mismatches), 2 for usage, parse and graphicality errors.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::characterize::{check, realize_with_pattern, Verdict};
use crate::crosscheck::crosscheck;
use crate::error::Error;
use crate::graph::{TargetPattern, K5_MINUS_P4, K5_MINUS_Y4};
use crate::graphicality::{
    is_graphic_erdos_gallai, is_graphic_lay_off, is_graphic_small_degree, lay_off,
};
use crate::oracle::EnumerationBudget;
use crate::seq::{parse_sequence, DegreeSequence, FamilyMatch};
use crate::sigma::{compute_sigma, Decider};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Longest sequence length the predicate-mode sigma sweep accepts.
pub const PREDICATE_SWEEP_CEILING: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "pgraphic",
    about = "Decide, realize and verify potentially (K5-P4)- and (K5-Y4)-graphic sequences"
)]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = OutputMode::Human)]
    pub mode: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    /// One `key=value` record per result line.
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PatternArg {
    #[value(name = "k5-p4")]
    K5P4,
    #[value(name = "k5-y4")]
    K5Y4,
}

impl PatternArg {
    pub fn pattern(self) -> TargetPattern {
        match self {
            PatternArg::K5P4 => K5_MINUS_P4,
            PatternArg::K5Y4 => K5_MINUS_Y4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Predicate,
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a sequence is potentially H-graphic.
    Check {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        sequence: String,
    },
    /// Print a realization containing the pattern, as an edge list.
    Realize {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        sequence: String,
    },
    /// Decide graphicality with every available decider.
    Graphic {
        #[arg(long)]
        sequence: String,
    },
    /// Lay off the smallest term and print the residual sequence.
    Layoff {
        #[arg(long)]
        sequence: String,
    },
    /// Compute the extremal threshold σ(H, n) and a witness.
    Sigma {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Predicate)]
        method: Method,
    },
    /// Compare the predicate with the exhaustive oracle on every graphic
    /// sequence of length n.
    Crosscheck {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        n: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Io(io::Error),
    Domain(Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.into())
    }
}

fn sequence_arg(text: &str) -> Result<DegreeSequence, Failure> {
    Ok(parse_sequence(text)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `decision=NO condition=P4-4 k=1 i=3`
pub fn verdict_record(verdict: &Verdict) -> String {
    let mut line = format!("decision={}", verdict.decision);
    if let Some(c) = verdict.violated {
        line.push_str(&format!(" condition={c}"));
    }
    match verdict.family {
        Some(FamilyMatch::Condition3 { k, t }) => line.push_str(&format!(" k={k} t={t}")),
        Some(FamilyMatch::Condition4 { k, i }) => line.push_str(&format!(" k={k} i={i}")),
        None => {}
    }
    line
}

fn write_verdict(
    out: &mut dyn Write,
    mode: OutputMode,
    pattern: &TargetPattern,
    seq: &DegreeSequence,
    verdict: &Verdict,
) -> io::Result<()> {
    match mode {
        OutputMode::Machine => writeln!(out, "{}", verdict_record(verdict)),
        OutputMode::Human => writeln!(out, "{pattern} ({seq}): {verdict}"),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let mode = cli.mode;
    match &cli.command {
        Command::Check { pattern, sequence } => {
            let pattern = pattern.pattern();
            let seq = sequence_arg(sequence)?;
            let verdict = check(&pattern, &seq)?;
            write_verdict(out, mode, &pattern, &seq, &verdict)?;
            Ok(if verdict.is_yes() { EXIT_YES } else { EXIT_NO })
        }
        Command::Realize { pattern, sequence } => {
            let pattern = pattern.pattern();
            let seq = sequence_arg(sequence)?;
            match realize_with_pattern(&seq, &pattern) {
                Ok(r) => {
                    write!(out, "{}", r.graph)?;
                    writeln!(out, "embed: {}", r.embedding)?;
                    Ok(EXIT_YES)
                }
                Err(Error::NegativeVerdict(verdict)) => {
                    write_verdict(out, mode, &pattern, &seq, &verdict)?;
                    Ok(EXIT_NO)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Graphic { sequence } => {
            let seq = sequence_arg(sequence)?;
            let eg = is_graphic_erdos_gallai(&seq);
            let lo = is_graphic_lay_off(&seq);
            let small = is_graphic_small_degree(&seq);
            let small_text = small.map_or("n/a", yes_no);
            match mode {
                OutputMode::Machine => writeln!(
                    out,
                    "graphic={} erdos_gallai={} lay_off={} small_degree={}",
                    yes_no(eg),
                    yes_no(eg),
                    yes_no(lo),
                    small_text
                )?,
                OutputMode::Human => {
                    writeln!(out, "{seq}: {}", if eg { "graphic" } else { "not graphic" })?;
                    writeln!(out, "  erdos-gallai: {}", yes_no(eg))?;
                    writeln!(out, "  lay-off:      {}", yes_no(lo))?;
                    writeln!(out, "  small-degree: {small_text}")?;
                }
            }
            Ok(if eg { EXIT_YES } else { EXIT_NO })
        }
        Command::Layoff { sequence } => {
            let seq = sequence_arg(sequence)?;
            let step = lay_off(&seq)?;
            let positions: Vec<String> = step
                .reduced_positions
                .iter()
                .map(|p| (p + 1).to_string())
                .collect();
            match mode {
                OutputMode::Machine => writeln!(
                    out,
                    "residual={} reduced={}",
                    step.residual,
                    positions.join(",")
                )?,
                OutputMode::Human if step.residual.is_empty() => writeln!(out, "()")?,
                OutputMode::Human => writeln!(out, "{}", step.residual)?,
            }
            Ok(EXIT_YES)
        }
        Command::Sigma { pattern, n, method } => {
            let pattern = pattern.pattern();
            let decider = match method {
                Method::Predicate => {
                    if *n > PREDICATE_SWEEP_CEILING {
                        return Err(Error::ExceedsCeiling {
                            n: *n,
                            ceiling: PREDICATE_SWEEP_CEILING,
                        }
                        .into());
                    }
                    Decider::Predicate
                }
                Method::Oracle => Decider::Oracle(EnumerationBudget::default()),
            };
            let r = compute_sigma(&pattern, *n, decider)?;
            let witness_sum = r.extremal_witness.sigma();
            match mode {
                OutputMode::Machine => writeln!(
                    out,
                    "pattern={pattern} n={n} sigma={} witness={} witness_sigma={witness_sum}",
                    r.sigma_value, r.extremal_witness
                )?,
                OutputMode::Human => {
                    writeln!(out, "sigma({pattern}, {n}) = {}", r.sigma_value)?;
                    writeln!(out, "witness: {} (sum {witness_sum})", r.extremal_witness)?;
                }
            }
            Ok(EXIT_YES)
        }
        Command::Crosscheck { pattern, n } => {
            let pattern = pattern.pattern();
            let report = crosscheck(&pattern, *n, &EnumerationBudget::default())?;
            match mode {
                OutputMode::Machine => {
                    writeln!(
                        out,
                        "pattern={pattern} n={n} tested={} yes={} no={} mismatches={}",
                        report.tested,
                        report.yes,
                        report.no,
                        report.mismatches.len()
                    )?;
                    for m in &report.mismatches {
                        writeln!(
                            out,
                            "mismatch sequence={} predicate={} oracle={}",
                            m.sequence,
                            m.predicate.decision,
                            if m.oracle { "YES" } else { "NO" }
                        )?;
                    }
                }
                OutputMode::Human => {
                    writeln!(
                        out,
                        "{} mismatches / {} sequences (YES {}, NO {})",
                        report.mismatches.len(),
                        report.tested,
                        report.yes,
                        report.no
                    )?;
                    for m in &report.mismatches {
                        writeln!(
                            out,
                            "  {}: predicate {}, oracle {}",
                            m.sequence,
                            m.predicate,
                            if m.oracle { "YES" } else { "NO" }
                        )?;
                    }
                }
            }
            Ok(if report.is_clean() { EXIT_YES } else { EXIT_NO })
        }
    }
}
