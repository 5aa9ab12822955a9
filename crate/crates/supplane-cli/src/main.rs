mod input;
mod report;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use supplane::chem;
use supplane::exact::Sign;
use supplane::separability;
use supplane::{decide, parse_decimal, Rational};

#[derive(Parser)]
#[command(
    name = "supplane",
    about = "Exact supporting-plane decisions for vector sets, with certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the input vectors fit strictly inside an open halfspace
    Decide(DecideArgs),
    /// Classify the four-bonded carbons of an XYZ molecule file
    Classify(ClassifyArgs),
    /// Fuzz the dispatch pipeline against the exact LP oracle
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct DecideArgs {
    /// Input path, or - for standard input
    #[arg(long, default_value = "-")]
    input: String,
    /// Input format
    #[arg(long, value_enum, default_value_t = InputFormat::Csv)]
    format: InputFormat,
    /// Attach a verified certificate to the verdict
    #[arg(long)]
    certificate: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Args)]
struct ClassifyArgs {
    /// XYZ molecule file
    path: PathBuf,
    /// Bond threshold scale, as P/Q or a decimal (default 23/20)
    #[arg(long, value_parser = parse_positive_rational)]
    bond_scale: Option<Rational>,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Covalent radii override file: one "symbol radius" pair per line
    #[arg(long)]
    radii: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Number of random quadruples to test
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Generator seed
    #[arg(long)]
    seed: u64,
    /// Coordinates are drawn from [-range, range]
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..=i32::MAX as i64))]
    range: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

/// Failures mapped to the exit-code contract: 1 for unparseable content,
/// 2 for structurally invalid input or usage, 3 for self-test failures.
enum Failure {
    Parse(String),
    Input(String),
    SelfTest(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Parse(_) => ExitCode::from(1),
            Failure::Input(_) => ExitCode::from(2),
            Failure::SelfTest(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Input(m) | Failure::SelfTest(m) => m,
        }
    }
}

impl From<separability::Error> for Failure {
    fn from(error: separability::Error) -> Failure {
        Failure::Input(error.to_string())
    }
}

impl From<chem::Error> for Failure {
    fn from(error: chem::Error) -> Failure {
        match error {
            chem::Error::Parse { .. } | chem::Error::Radii { .. } => {
                Failure::Parse(error.to_string())
            }
            chem::Error::UnknownElement { .. } | chem::Error::Separability(_) => {
                Failure::Input(error.to_string())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decide(args) => run_decide(args),
        Command::Classify(args) => run_classify(args),
        Command::Selftest(args) => selftest::run(args.trials, args.seed, args.range),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.exit_code()
        }
    }
}

fn run_decide(args: DecideArgs) -> Result<(), Failure> {
    let text = read_input(&args.input)?;
    let set = match args.format {
        InputFormat::Csv => input::vectors_from_csv(&text)?,
        InputFormat::Json => input::vectors_from_json(&text)?,
    };
    let verdict = decide(&set, args.certificate)?;
    match args.output {
        OutputFormat::Text => print!("{}", report::decide_text(&verdict)),
        OutputFormat::Json => println!("{}", report::decide_json(&verdict)),
    }
    Ok(())
}

fn run_classify(args: ClassifyArgs) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&args.path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", args.path.display())))?;
    let molecule = chem::parse_xyz(&text)?;

    let mut radii = chem::RadiiTable::standard();
    if let Some(path) = &args.radii {
        let overrides = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        radii.apply_overrides(&overrides)?;
    }

    let scale = args.bond_scale.unwrap_or_else(chem::default_bond_scale);
    let bonds = chem::infer_bonds(&molecule, &radii, &scale)?;
    let outcomes = chem::classify_carbons(&molecule, &bonds)?;
    match args.output {
        OutputFormat::Text => print!("{}", report::classify_text(&molecule, &outcomes)),
        OutputFormat::Json => println!("{}", report::classify_json(&molecule, &outcomes)),
    }
    Ok(())
}

fn read_input(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut text = String::new();
        use std::io::Read;
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| Failure::Input(format!("cannot read {source}: {e}")))
    }
}

/// Parses a strictly positive rational given as `P/Q` or as a decimal
/// literal. Used for --bond-scale.
fn parse_positive_rational(token: &str) -> Result<Rational, String> {
    let value = match token.split_once('/') {
        Some((numer, denom)) => {
            let numer = parse_decimal(numer.trim()).map_err(|e| e.to_string())?;
            let denom = parse_decimal(denom.trim()).map_err(|e| e.to_string())?;
            if Sign::of(&denom).is_zero() {
                return Err("denominator must be nonzero".to_owned());
            }
            numer / denom
        }
        None => parse_decimal(token).map_err(|e| e.to_string())?,
    };
    if !Sign::of(&value).is_positive() {
        return Err("the scale must be positive".to_owned());
    }
    Ok(value)
}
