//! `nilorbit`: orbit tables, class computation and verification suites.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use nilorbit::classes::{compute_class, compute_class_with_word, Kind};
use nilorbit::combin::{enumerate_involutions, Involution, Permutation, ReducedWord};
use nilorbit::operators::{Theory, TheoryContext, UMode};
use nilorbit::ring::MAX_T;
use nilorbit::schubert::{self, LongestConvention};
use nilorbit::verify::{self, Task};
use nilorbit::{weightfn, Error};

/// Default largest `n` accepted without `--force`.
const N_BOUND: usize = 9;

#[derive(Parser, Debug)]
#[command(name = "nilorbit", version, about = "Equivariant classes of Borel orbits of square-zero matrices")]
struct Cli {
    /// Worker threads for verification suites (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of the orbits of N_n: involution, rank, dim, codim, arcs, pi_w, word.
    List {
        #[arg(long)]
        n: usize,
        /// Only orbits of this rank.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Allow n above the default bound.
        #[arg(long)]
        force: bool,
    },
    /// The fundamental, CSM or motivic Chern class of one orbit.
    Class {
        #[arg(long)]
        n: usize,
        /// Involution as `(i,j)(k,l)...` or `id`.
        #[arg(long)]
        w: String,
        #[arg(long, value_enum)]
        theory: TheoryArg,
        #[arg(long, value_enum, default_value_t = KindArg::Fund)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = UArg::Keep)]
        u: UArg,
        /// Reduced word to compute along, comma separated (default: a word of pi_w).
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Double Schubert polynomial of a permutation in one-line notation.
    Schubert {
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Double Grothendieck polynomial of a permutation in one-line notation.
    Grothendieck {
        #[arg(long)]
        perm: String,
        /// Product used for the longest permutation.
        #[arg(long, value_enum, default_value_t = ConventionArg::Staircase)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Modified trigonometric weight function of a permutation.
    Weight {
        #[arg(long)]
        tau: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs a verification suite and prints one line per check.
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest size to check (default depends on the suite).
        #[arg(long)]
        n_max: Option<usize>,
        /// `json` prints JSON lines, `text` prints PASS/FAIL lines and a summary.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoryArg {
    #[value(name = "H", alias = "h", alias = "cohomology")]
    H,
    #[value(name = "K", alias = "k", alias = "k-theory")]
    K,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Fund,
    Csm,
    Mc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum UArg {
    Keep,
    Zero,
    One,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Staircase,
    AntiDiagonal,
}

/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal.
enum Failure {
    Verification,
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDivisible
            | Error::ContextMismatch
            | Error::DenominatorVanishes
            | Error::ZeroDenominator
            | Error::NotUpperTriangular => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(format!("output: {e}"))
    }
}

fn check_bound(n: usize, force: bool, hard_max: usize) -> Result<(), Failure> {
    if n == 0 || n > hard_max {
        return Err(Error::SizeOutOfRange { n, max: hard_max }.into());
    }
    if n > N_BOUND && !force {
        return Err(Failure::Usage(format!("n = {n} exceeds the default bound {N_BOUND}; pass --force to run it anyway")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::List { n, rank, format, force } => {
            check_bound(n, force, MAX_T)?;
            let rows: Vec<Involution> =
                enumerate_involutions(n).into_iter().filter(|w| rank.is_none_or(|m| w.rank() == m)).collect();
            output::list(&mut out, &rows, format)?;
        }
        Command::Class { n, w, theory, kind, u, word, format, force } => {
            check_bound(n, force, MAX_T)?;
            let w = Involution::parse(n, &w)?;
            let theory = match theory {
                TheoryArg::H => Theory::Cohomology,
                TheoryArg::K => Theory::KTheory,
            };
            let kind = match kind {
                KindArg::Fund => Kind::Fundamental,
                KindArg::Csm => Kind::Csm,
                KindArg::Mc => Kind::Mc,
            };
            let u_mode = match u {
                UArg::Keep => UMode::Keep,
                UArg::Zero => UMode::Zero,
                UArg::One => UMode::One,
            };
            let tc = TheoryContext::new(theory, u_mode, n)?;
            let result = match word {
                Some(word) => compute_class_with_word(&w, &word.parse::<ReducedWord>()?, &tc, kind)?,
                None => compute_class(&w, &tc, kind)?,
            };
            output::class(&mut out, &result, format)?;
        }
        Command::Schubert { perm, format } => {
            let perm: Permutation = perm.parse()?;
            check_bound(perm.n(), false, MAX_T / 2)?;
            let s = schubert::double_schubert(&perm)?;
            output::block_poly(&mut out, &perm, &s.poly, format)?;
        }
        Command::Grothendieck { perm, convention, format } => {
            let perm: Permutation = perm.parse()?;
            check_bound(perm.n(), false, MAX_T / 2)?;
            let convention = match convention {
                ConventionArg::Staircase => LongestConvention::Staircase,
                ConventionArg::AntiDiagonal => LongestConvention::AntiDiagonal,
            };
            let g = schubert::grothendieck_with(&perm, convention)?;
            output::block_poly(&mut out, &perm, &g.poly, format)?;
        }
        Command::Weight { tau, format } => {
            let tau: Permutation = tau.parse()?;
            check_bound(tau.n(), false, MAX_T.div_ceil(2))?;
            let w = weightfn::weight_function(&tau)?;
            output::weight(&mut out, &w, format)?;
        }
        Command::Verify { suite, n_max, format } => {
            if format == Format::Latex {
                return Err(Failure::Usage("verify prints text or json".into()));
            }
            let tasks = verify::suite_tasks(&suite, n_max)?;
            let report = run_tasks(&suite, &tasks, cli.threads)?;
            output::report(&mut out, &report, format)?;
            if !report.passed() {
                out.flush()?;
                return Err(Failure::Verification);
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Runs tasks on a pool of `threads` workers, keeping task order.
fn run_tasks(suite: &str, tasks: &[Task], threads: Option<usize>) -> Result<verify::Report, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Failure::Internal(e.to_string()))?;
    let reports = pool.install(|| tasks.par_iter().map(Task::run).collect::<Vec<_>>());
    Ok(verify::merge(suite, reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_failures_are_internal() {
        assert!(matches!(Failure::from(Error::NotDivisible), Failure::Internal(_)));
        assert!(matches!(Failure::from(Error::DenominatorVanishes), Failure::Internal(_)));
        assert!(matches!(Failure::from(Error::Parse("x".into())), Failure::Usage(_)));
        assert!(matches!(Failure::from(Error::UnknownSuite("x".into())), Failure::Usage(_)));
    }

    #[test]
    fn bound() {
        assert!(check_bound(9, false, MAX_T).is_ok());
        assert!(matches!(check_bound(10, false, MAX_T), Err(Failure::Usage(_))));
        assert!(check_bound(10, true, MAX_T).is_ok());
        assert!(matches!(check_bound(15, true, MAX_T), Err(Failure::Usage(_))));
    }
}
