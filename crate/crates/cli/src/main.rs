use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cintervals::input::format_rows;
use cintervals::{search, CliError, RunConfig};
use common_intervals::gen::{random_rows, GenConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Common intervals of signed permutations and their subclasses
#[derive(Parser, Debug)]
#[command(name = "cintervals", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the intervals of one class
    Search(RunConfig),
    /// Print a random instance in the input format. The first row is random
    /// too, so search the result with --renumber
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Number of permutations, the first included
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random signs
    #[arg(long)]
    signed: bool,
    /// Every row starts with +1 and ends with +n
    #[arg(long)]
    conserved: bool,
}

fn gen(args: &GenArgs, out: &mut impl Write) -> io::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let rows = random_rows(
        &mut rng,
        GenConfig {
            n: args.n,
            k: args.k,
            signed: args.signed,
            conserved: args.conserved,
        },
    );
    writeln!(out, "# n={} k={} seed={}", args.n, args.k, args.seed)?;
    out.write_all(format_rows(&rows).as_bytes())?;
    out.flush()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Search(config) => search(config, &mut out, &mut io::stderr()),
        Command::Gen(args) => {
            if args.n == 0 || args.k == 0 {
                eprintln!("error: --n and --k must be at least 1");
                return ExitCode::from(1);
            }
            gen(args, &mut out).map_err(CliError::from)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
