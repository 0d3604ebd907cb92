//! `tcubic`: classification, factorization, concomitants and identity
//! verification for ternary cubic forms.
//!
//! Exit status: 0 success, 1 mathematical negative from a predicate
//! subcommand, 2 usage or parse error, 3 internal cross-check failure.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ternary_cubic::classify::Criterion;
use ternary_cubic::Concomitant;

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "tcubic", version, about = "Exact calculus for ternary cubic forms")]
struct Cli {
    /// Print the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A form written inline, or `@path` to read it from a file.
#[derive(Args, Debug)]
struct FormArg {
    form: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate concomitants of a cubic.
    Concomitant {
        #[command(flatten)]
        input: FormArg,
        /// Which concomitant (repeatable); all nine when omitted.
        #[arg(long = "kind", value_parser = parse_kind)]
        kinds: Vec<Concomitant>,
        /// Check every alternative formula on the generic cubic first.
        #[arg(long)]
        verify: bool,
    },
    /// Decide complete reducibility. Exits 1 when the cubic does not split
    /// into three lines.
    Classify {
        #[command(flatten)]
        input: FormArg,
        /// Use a single criterion instead of the full hierarchy (case and
        /// `-`/`_` insensitive, e.g. gamma, s-delta-minus-t-f).
        #[arg(long, value_parser = parse_criterion)]
        criterion: Option<Criterion>,
    },
    /// Factor a completely reducible cubic. Exits 1 when it is not.
    Factor {
        #[command(flatten)]
        input: FormArg,
        /// Largest accepted relative residual.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Squares decomposition and factors of a ternary quadratic.
    Quad {
        #[command(flatten)]
        input: FormArg,
    },
    /// Analyse a cubic unchanged by the even permutations of x1, x2, x3.
    /// Exits 1 when the form is not of that kind.
    Symmetric {
        #[command(flatten)]
        input: FormArg,
    },
    /// Run the identity corpus. Exits 3 if any identity fails.
    VerifyIdentities {
        /// Restrict to one tier (1 core, 2 inside proofs).
        #[arg(long)]
        tier: Option<u8>,
        /// Restrict to the listed ids (repeatable).
        #[arg(long = "id")]
        ids: Vec<String>,
        /// One JSON object per case instead of the report envelope.
        #[arg(long)]
        jsonl: bool,
    },
    /// Timings for the term table, the largest identity, the corpus and
    /// seeded random round trips.
    Bench {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random cubics per round-trip batch.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

fn parse_kind(s: &str) -> Result<Concomitant, String> {
    s.parse().map_err(|e: ternary_cubic::Error| e.to_string())
}

fn parse_criterion(s: &str) -> Result<Criterion, String> {
    s.parse().map_err(|e: ternary_cubic::Error| {
        let names: Vec<&str> = Criterion::ALL.iter().map(|c| c.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut format = if cli.json { Format::Json } else { Format::Text };
    let emit = match cli.command {
        Command::Concomitant { input, kinds, verify } => commands::concomitant(&input.form, &kinds, verify),
        Command::Classify { input, criterion } => commands::classify(&input.form, criterion),
        Command::Factor { input, tolerance } => commands::factor(&input.form, tolerance),
        Command::Quad { input } => commands::quad(&input.form),
        Command::Symmetric { input } => commands::symmetric(&input.form),
        Command::VerifyIdentities { tier, ids, jsonl } => {
            if jsonl {
                format = Format::JsonLines;
            }
            commands::verify_identities(tier, &ids, format)
        }
        Command::Bench { seed, samples } => commands::bench(seed, samples),
    };
    emit.print(format);
    ExitCode::from(emit.status)
}
