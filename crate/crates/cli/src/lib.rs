//! Library side of the `cintervals` command: input parsing, report
//! formatting and the search driver, kept here so tests can call them.

pub mod input;
pub mod output;
pub mod shrink;

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use common_intervals::oracle::{oracle, DEFAULT_BOUND};
use common_intervals::{run, validate, Interval, IntervalClass, SearchError, ValidationError};
use thiserror::Error;

use input::{format_rows, read_input, InputError};
use output::Format;

#[derive(Clone, Debug, clap::Args)]
pub struct RunConfig {
    /// Permutation file, one per line (`-` for standard input)
    pub input_path: PathBuf,

    /// common, nested, conserved, irreducible-common, same-sign-common,
    /// maximal-nested or irreducible-conserved
    #[arg(long, default_value = "common")]
    pub class: IntervalClass,

    /// Relabel elements by their position in the first permutation instead
    /// of requiring it to be +1 +2 ... +n
    #[arg(long)]
    pub renumber: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Compare against the brute-force oracle (skipped above n = 64)
    #[arg(long)]
    pub check_oracle: bool,

    /// Print the interval count, timings and stack counters
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{class}: search and oracle disagree ({detail}); smallest failing input found:\n{dump}")]
    OracleMismatch {
        class: IntervalClass,
        detail: String,
        dump: String,
    },
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 1,
            CliError::Validation(_) | CliError::Search(_) => 2,
            CliError::OracleMismatch { .. } => 3,
        }
    }
}

/// Search results against the oracle, as (search only, oracle only), or
/// `None` when the rows do not form a valid instance for the class.
fn disagreement(rows: &[Vec<i64>], class: IntervalClass) -> Option<(Vec<Interval>, Vec<Interval>)> {
    let inst = validate(rows, class).ok()?;
    let found: BTreeSet<Interval> = run(&inst, class).ok()?.intervals.into_iter().collect();
    let want = oracle(&inst.denormalized(), class).ok()?.intervals;
    Some((found.difference(&want).copied().collect(), want.difference(&found).copied().collect()))
}

fn disagrees(rows: &[Vec<i64>], class: IntervalClass) -> bool {
    disagreement(rows, class).is_some_and(|(a, b)| !a.is_empty() || !b.is_empty())
}

pub fn search(config: &RunConfig, out: &mut impl Write, err: &mut impl Write) -> Result<(), CliError> {
    let rows = read_input(&config.input_path)?;
    let class = config.class;

    let start = Instant::now();
    let inst = validate(&rows, class)?;
    if !config.renumber && !rows[0].iter().zip(1..).all(|(&v, e)| v == e) {
        return Err(ValidationError::NotIdentity.into());
    }
    let validated = start.elapsed();

    let start = Instant::now();
    let report = run(&inst, class)?;
    let searched = start.elapsed();

    if config.check_oracle {
        if inst.n() > DEFAULT_BOUND {
            writeln!(err, "# oracle check skipped: n = {} exceeds {DEFAULT_BOUND}", inst.n())?;
        } else if disagrees(&rows, class) {
            let (extra, missing) = disagreement(&rows, class).unwrap_or_default();
            let small = shrink::shrink(rows, class.needs_conserved_endpoints(), |r| disagrees(r, class));
            return Err(CliError::OracleMismatch {
                class,
                detail: format!("search only {extra:?}, oracle only {missing:?}"),
                dump: format_rows(&small),
            });
        }
    }

    match config.format {
        Format::Text => output::write_text(out, &report, config.stats)?,
        Format::Json => output::write_json(out, &report)?,
    }
    if config.stats {
        let c = report.op_counters;
        writeln!(
            err,
            "# N={} n={} K={} validate={:.3}ms search={:.3}ms push_l={} push_r={} pop_l={} pop_r={}",
            report.count(),
            report.n,
            report.k,
            validated.as_secs_f64() * 1e3,
            searched.as_secs_f64() * 1e3,
            c.push_l,
            c.push_r,
            c.pop_l,
            c.pop_r
        )?;
    }
    out.flush()?;
    Ok(())
}
