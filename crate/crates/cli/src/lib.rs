//! Command-line front end: `gen`, `solve` and `verify`.

mod record;

use std::ffi::OsString;
use std::io::{self, Write};

use balance_forge_core::pellsolver::{Limit, PellSolver, QuadraticForm};
use balance_forge_core::sequences::{terms, SequenceKind};
use balance_forge_core::verifier::{all_passed, Verifier};
use balance_forge_core::BigInt;
use clap::{ArgGroup, Parser, Subcommand};

pub use crate::record::{CounterexampleRecord, Format, Record};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "balance-forge",
    version,
    about = "Balancing-type sequences, Pell-type equations and their identities"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "BALANCE_FORGE_FORMAT",
        default_value = "plain"
    )]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms `from..=to` of a sequence (B, b, C, c, P, Bs, Bss, Cs, Css, bs, bss, cs, css).
    Gen { kind: String, from: u64, to: u64 },
    /// Solve ax² + bxy + cy² = m.
    #[command(allow_negative_numbers = true, group(ArgGroup::new("limit").required(true).args(["count", "xbound"])))]
    Solve {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        m: BigInt,
        /// The first N solutions with x > 0 and y > 0.
        #[arg(long)]
        count: Option<usize>,
        /// Every solution with |x| ≤ X.
        #[arg(long)]
        xbound: Option<BigInt>,
    },
    /// Check an identity, a group of identities, or `all`.
    Verify {
        id: String,
        #[arg(long)]
        upto: u64,
        #[arg(long, default_value_t = 10)]
        pell_count: usize,
    },
}

/// Failure of a command: exit status plus a message for standard error.
#[derive(Debug)]
struct Exit(i32, String);

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status. Records go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut emit = |r: Record| writeln!(out, "{}", r.render(cli.format));
    let result = match &cli.command {
        Command::Gen { kind, from, to } => gen(kind, *from, *to, &mut emit),
        Command::Solve {
            a,
            b,
            c,
            m,
            count,
            xbound,
        } => {
            let limit = match (count, xbound) {
                (Some(n), _) => Limit::Count(*n),
                (None, Some(x)) => Limit::XBound(x.clone()),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            solve([a, b, c], m, &limit, &mut emit)
        }
        Command::Verify {
            id,
            upto,
            pell_count,
        } => verify(id, *upto, *pell_count, &mut emit),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type Emit<'a> = dyn FnMut(Record) -> io::Result<()> + 'a;

fn io_error(e: io::Error) -> Exit {
    Exit(EXIT_FAILED, e.to_string())
}

fn gen(kind: &str, from: u64, to: u64, emit: &mut Emit<'_>) -> Result<i32, Exit> {
    let kind: SequenceKind = kind.parse().map_err(|e| usage(format!("{e}")))?;
    if from > to {
        return Err(usage(format!("empty range {from}..={to}")));
    }
    for (n, value) in (from..=to).zip(terms(kind, from..=to)) {
        emit(Record::term(kind.symbol(), n, &value)).map_err(io_error)?;
    }
    Ok(EXIT_OK)
}

fn solve(
    [a, b, c]: [&BigInt; 3],
    m: &BigInt,
    limit: &Limit,
    emit: &mut Emit<'_>,
) -> Result<i32, Exit> {
    let form = QuadraticForm::new(a.clone(), b.clone(), c.clone())
        .map_err(|e| usage(format!("degenerate form: {e}")))?;
    let solver = PellSolver::new(form, m.clone()).map_err(|e| usage(e.to_string()))?;
    for s in solver.solutions(limit) {
        emit(Record::solution(&s)).map_err(io_error)?;
    }
    Ok(EXIT_OK)
}

fn verify(id: &str, upto: u64, pell_count: usize, emit: &mut Emit<'_>) -> Result<i32, Exit> {
    let verifier = Verifier::new(upto, pell_count).map_err(|e| usage(e.to_string()))?;
    let reports = verifier
        .verify_matching(id)
        .map_err(|e| usage(format!("{e}: {id}")))?;
    for r in &reports {
        emit(Record::report(r)).map_err(io_error)?;
    }
    Ok(if all_passed(&reports) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}
