//! `lwd`: construct binary linear codes, compute their local weight
//! distributions, transfer them between related codes, and check published
//! tables for internal consistency.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 failed precondition,
//! 4 enumeration cap exceeded, 5 identity violated or check failed.

mod commands;
mod output;
mod source;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lwd_core::ErrorKind;

#[derive(Parser, Debug)]
#[command(
    name = "lwd",
    version,
    about = "Local weight distributions of binary linear codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a generator matrix and write it in the text format.
    Construct(ConstructArgs),
    /// Compute the weight distribution, local weight distribution and
    /// only-odd counts of a code.
    Lwd(LwdArgs),
    /// Transfer a local weight distribution to the extended code, the
    /// punctured code, or the even-weight subcode.
    Relate(RelateArgs),
    /// Check embedded or user-supplied length-127 columns with the
    /// adjacent-weight ratio identity.
    CheckTable(CheckTableArgs),
    /// Brute-force a code, its extension and its even-weight subcode and
    /// check every transfer identity.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// hamming R
    Hamming,
    /// rm R M
    Rm,
    /// bch M DESIGNED_DISTANCE
    Bch,
    /// random N K (with --seed)
    Random,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    /// Family parameters.
    #[arg(required = true)]
    params: Vec<u64>,
    /// Seed for `random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the matrix here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Where the code comes from: a matrix file, a named family, or a seeded random code.
#[derive(Args, Debug, Default)]
pub struct SourceArgs {
    /// Generator matrix file.
    matrix: Option<PathBuf>,
    /// Named family followed by its parameters, e.g. `--family rm 2 4`.
    #[arg(long, num_args = 2..=3, value_names = ["FAMILY", "PARAMS"], conflicts_with_all = ["matrix", "random"])]
    family: Option<Vec<String>>,
    /// Random code of length N and dimension K.
    #[arg(long, num_args = 2, value_names = ["N", "K"], conflicts_with = "matrix")]
    random: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug, Default)]
pub struct RunArgs {
    /// Worker threads for the enumeration sweep (defaults to available cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Lift the enumeration caps.
    #[arg(long)]
    force: bool,
    /// Emit a JSON report instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Test every nonzero codeword.
    #[default]
    Brute,
    /// Copy `A_w` below twice the minimum distance and skip weights above `n − k + 1`.
    Shortcut,
    /// One coset per orbit of the subcode's cosets under a permutation group.
    Cosets,
}

#[derive(Args, Debug)]
pub struct LwdArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = Mode::Brute)]
    mode: Mode,
    /// Subcode for cosets mode: `even`, `rm:R`, or a matrix file.
    #[arg(long, default_value = "even")]
    subcode: String,
    /// Group for cosets mode: `cyclic`, `affine`, `identity`, or a permutation
    /// file. Defaults to `cyclic` for cyclic codes and `identity` otherwise.
    #[arg(long)]
    group: Option<String>,
    /// Also compute `N_w` in shortcut mode.
    #[arg(long)]
    with_n: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// `L(C)`, `N(C)` to `L(C_ex)`.
    Extend,
    /// `L(C_ex)`, `N(C)` to `L(C)` for transitive-invariant `C_ex`.
    Puncture,
    /// `L(C)`, `N(C)` to `L(C_even)`.
    Even,
}

#[derive(Args, Debug)]
pub struct RelateArgs {
    #[arg(value_enum)]
    direction: Direction,
    /// Code `C`; its tallies are brute-forced and the result is cross-checked.
    #[command(flatten)]
    source: SourceArgs,
    /// Input local weight distribution (of `C`, or of `C_ex` for puncture):
    /// inline `w:c,w:c` or a file of `w count` lines.
    #[arg(long, conflicts_with_all = ["matrix", "family", "random"])]
    lwd: Option<String>,
    /// Only-odd counts `N(C)`, same formats as `--lwd`.
    #[arg(long, conflicts_with = "n_zero")]
    only_odd: Option<String>,
    /// Take `N(C) = 0` (justified when every weight of `C_ex` is a multiple of four).
    #[arg(long)]
    n_zero: bool,
    /// Length of the `--lwd` tally.
    #[arg(long)]
    length: Option<usize>,
    /// Assert that the extended code is invariant under a transitive group.
    #[arg(long)]
    transitive: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
pub struct CheckTableArgs {
    /// Embedded column id (repeatable); all four when neither this nor --file is given.
    #[arg(long = "table", value_parser = ["bch-127-36", "bch-127-43", "bch-127-50", "rm-127-64"])]
    tables: Vec<String>,
    /// Column in the `w count` format.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Code length for --file columns.
    #[arg(long, default_value_t = 127)]
    length: usize,
    /// Print an embedded column in the `w count` format and exit.
    #[arg(long, value_name = "ID", conflicts_with_all = ["tables", "file"])]
    export: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Assert that the extended code is invariant under a transitive group;
    /// adds the coordinate-split and puncture checks.
    #[arg(long)]
    transitive: bool,
    #[command(flatten)]
    run: RunArgs,
}

/// Anything that ends the program with a nonzero status.
#[derive(Debug)]
pub enum CliError {
    Core(lwd_core::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// A check ran and reported failure.
    ChecksFailed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Precondition => 3,
                ErrorKind::Cap => 4,
                ErrorKind::Identity => 5,
            },
            CliError::Io(..) | CliError::Usage(_) => 2,
            CliError::ChecksFailed(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(m) | CliError::ChecksFailed(m) => f.write_str(m),
        }
    }
}

impl From<lwd_core::Error> for CliError {
    fn from(e: lwd_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Lwd(a) => commands::lwd(a),
        Command::Relate(a) => commands::relate(a),
        Command::CheckTable(a) => commands::check_table(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
