mod corpus;
mod error;
mod report;
mod task;

use std::io::Write;
use std::process::ExitCode;

use braidcert::braid::BraidWord;
use braidcert::certify::Hypotheses;
use braidcert::dehornoy::ReductionBudget;
use braidcert::fdtc::{default_tolerance, FdtcValue};
use braidcert::rational::{parse_rational, Rational};
use clap::{Args, Parser, Subcommand};

use crate::error::CliError;
use crate::report::{exit_code, Format, Record};
use crate::task::{parse_fdtc_value, run_task, Task};

/// Environment variable overriding the handle-reduction length budget.
const BUDGET_VAR: &str = "BRAIDCERT_MAX_WORD_LEN";

#[derive(Parser)]
#[command(
    name = "braidcert",
    version,
    about = "Braid computations and L-space certificates"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    report: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct Assertions {
    /// Assert the braid is pseudo-Anosov (only consulted beyond 3 strands).
    #[arg(long)]
    assert_pa: bool,
    /// Assert the knot or companion is hyperbolic and fibred in an integer homology sphere.
    #[arg(long)]
    assert_hyperbolic: bool,
    /// Assert the ambient manifold is irreducible.
    #[arg(long)]
    assert_irreducible: bool,
    /// Assert the fractional Dehn twist coefficient is nonzero.
    #[arg(long)]
    assert_nonzero: bool,
}

impl Assertions {
    fn hypotheses(self) -> Hypotheses {
        Hypotheses {
            hyperbolic: self.assert_hyperbolic,
            irreducible: self.assert_irreducible,
            pseudo_anosov: self.assert_pa,
            fdtc_nonzero: self.assert_nonzero,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dehornoy sign of a braid, or the comparison of two braids.
    Order { word: String, other: Option<String> },
    /// Dehornoy floor.
    Floor { word: String },
    /// Fractional Dehn twist coefficient: exact for 3-braids, an enclosure otherwise.
    Fdtc {
        word: String,
        /// Enclosure width, as `p/q`.
        #[arg(long, value_parser = parse_rat)]
        tol: Option<Rational>,
    },
    /// Conjugacy normal form of a 3-braid.
    Classify3 { word: String },
    /// Whether the double branched cover of a closed 3-braid is an L-space.
    Lspace2 { word: String },
    /// Cyclic branched cover of a closed braid.
    CertifyCover {
        #[arg(long)]
        word: String,
        /// Cover order.
        #[arg(long)]
        t: u64,
        #[arg(long, value_parser = parse_rat)]
        tol: Option<Rational>,
        #[command(flatten)]
        assert: Assertions,
    },
    /// Cyclic branched cover of the binding of a genus-one open book.
    CertifyGenus1 {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        assert: Assertions,
    },
    /// Surgery on a cyclic cover of a fibred knot, or an orbifold cover with `--cone`.
    CertifySurgery {
        /// Coefficient `p/q`, or an enclosure `lo..hi`.
        #[arg(long, value_parser = parse_fdtc, allow_hyphen_values = true)]
        c: FdtcValue,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long)]
        genus: Option<i64>,
        /// Cone order `m` of the orbifold; `n` is then the slope numerator `p`.
        #[arg(long)]
        cone: Option<i64>,
        #[command(flatten)]
        assert: Assertions,
    },
    /// Cyclic branched cover of a satellite with a braided pattern.
    CertifySatellite {
        #[arg(long)]
        pattern: String,
        /// Companion coefficient `p/q`, or an enclosure `lo..hi`.
        #[arg(long, value_parser = parse_fdtc, allow_hyphen_values = true)]
        c_companion: FdtcValue,
        /// The companion coefficient is known to be exactly zero.
        #[arg(long)]
        companion_zero: bool,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        assert: Assertions,
    },
    /// Runs every entry of a corpus file.
    Corpus { path: String },
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_fdtc(s: &str) -> Result<FdtcValue, String> {
    parse_fdtc_value(s).map_err(|e| e.to_string())
}

fn budget_from_env() -> Result<ReductionBudget, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map(ReductionBudget::new).map_err(|_| {
            CliError::Lib(braidcert::error::Error::BadParameters(format!(
                "{BUDGET_VAR} must be a positive integer, got `{v}`"
            )))
        }),
        Err(_) => Ok(ReductionBudget::default()),
    }
}

fn parse_word(s: &str) -> Result<BraidWord, CliError> {
    s.parse().map_err(|e| CliError::at_line(e, 1, 0))
}

fn single(task: Result<Task, CliError>, word: Option<&str>, budget: &ReductionBudget) -> Record {
    let name = match &task {
        Ok(t) => t.name().to_string(),
        Err(_) => "?".into(),
    };
    let outcome = task.and_then(|t| {
        let braid = word.map(parse_word).transpose()?;
        run_task(&t, braid.as_ref(), budget)
    });
    Record {
        id: None,
        task: name,
        input: word.map(str::to_string),
        outcome,
    }
}

fn run(cli: Cli) -> Result<Vec<Record>, CliError> {
    let budget = budget_from_env()?;
    let tol = |t: Option<Rational>| t.unwrap_or_else(default_tolerance);
    Ok(match cli.command {
        Command::Order { word, other } => {
            let other = other.as_deref().map(parse_word).transpose();
            vec![single(
                other.map(|other| Task::Order { other }),
                Some(&word),
                &budget,
            )]
        }
        Command::Floor { word } => vec![single(Ok(Task::Floor), Some(&word), &budget)],
        Command::Fdtc { word, tol: t } => {
            vec![single(Ok(Task::Fdtc { tol: tol(t) }), Some(&word), &budget)]
        }
        Command::Classify3 { word } => vec![single(Ok(Task::Classify3), Some(&word), &budget)],
        Command::Lspace2 { word } => vec![single(Ok(Task::LSpace2), Some(&word), &budget)],
        Command::CertifyCover {
            word,
            t,
            tol: tl,
            assert,
        } => {
            let task = Task::Cover {
                t,
                tol: tol(tl),
                hyp: assert.hypotheses(),
            };
            vec![single(Ok(task), Some(&word), &budget)]
        }
        Command::CertifyGenus1 { word, n, assert } => {
            vec![single(
                Ok(Task::Genus1 {
                    n,
                    hyp: assert.hypotheses(),
                }),
                Some(&word),
                &budget,
            )]
        }
        Command::CertifySurgery {
            c,
            n,
            q,
            genus,
            cone,
            assert,
        } => {
            let task = Task::Surgery {
                c,
                n,
                q,
                genus,
                cone,
                hyp: assert.hypotheses(),
            };
            vec![single(Ok(task), None, &budget)]
        }
        Command::CertifySatellite {
            pattern,
            c_companion,
            companion_zero,
            n,
            assert,
        } => {
            let task = Task::Satellite {
                c: c_companion,
                companion_zero,
                n,
                hyp: assert.hypotheses(),
            };
            vec![single(Ok(task), Some(&pattern), &budget)]
        }
        Command::Corpus { path } => {
            let text =
                std::fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?;
            corpus::run_corpus(&text, &budget)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.report;
    let corpus = matches!(cli.command, Command::Corpus { .. });
    let records = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error {}: {e}", e.name());
            return ExitCode::from(1);
        }
    };
    let mut out = std::io::stdout().lock();
    for r in &records {
        let text = match (format, corpus) {
            (Format::Json, _) => format!("{}\n", r.to_json()),
            (Format::Text, true) => r.to_text_line(),
            (Format::Text, false) => r.to_text(),
        };
        if out.write_all(text.as_bytes()).is_err() {
            return ExitCode::from(1);
        }
    }
    ExitCode::from(exit_code(&records) as u8)
}
