use std::path::PathBuf;

use cesaro_core::operators::OperatorKind;
use cesaro_core::scalar::parse_rational;
use cesaro_core::{Alpha, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};

/// Upper bound on grid points, so a tiny step cannot exhaust memory.
pub const MAX_GRID_POINTS: usize = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "cesaro",
    version,
    about = "Exact checks of generalized Cesàro operator identities and positivity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the identity checks at each α of the grid.
    Verify(VerifyArgs),
    /// Certify hyponormality through the (Q, P) interrupter pair.
    Region(RegionArgs),
    /// Leading minors of I − B*B, the posinormal route.
    Conjecture(ConjectureArgs),
    /// Symbolic det(S_n) and its diff against the reference polynomials.
    Dets(DetsArgs),
    /// Dump a finite section of one operator.
    Matrix(MatrixArgs),
}

#[derive(Debug, Args)]
pub struct AlphaArgs {
    /// α as an exact rational "p/q"; repeatable or comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_alpha)]
    pub alpha: Vec<Alpha>,
    /// Rational grid start:stop:step; stop is included when hit exactly.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_grid)]
    pub grid: Vec<Grid>,
}

/// The points of one `--grid` flag.
#[derive(Clone, Debug)]
pub struct Grid(pub Vec<Alpha>);

impl AlphaArgs {
    /// The requested α values sorted and deduplicated, or `default` if none were given.
    pub fn resolve(&self, default: &[&str]) -> Vec<Alpha> {
        let mut alphas: Vec<Alpha> = self
            .alpha
            .iter()
            .chain(self.grid.iter().flat_map(|g| &g.0))
            .cloned()
            .collect();
        if alphas.is_empty() {
            alphas = default
                .iter()
                .map(|a| Alpha::parse(a).expect("default alpha"))
                .collect();
        }
        alphas.sort();
        alphas.dedup();
        alphas
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty() && self.grid.is_empty()
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long)]
    pub csv: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallelism: Option<u16>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl OutputArgs {
    pub fn format(&self, default: Format) -> Format {
        match (self.json, self.csv) {
            (true, _) => Format::Json,
            (_, true) => Format::Csv,
            _ => default,
        }
    }

    pub fn threads(&self) -> usize {
        self.parallelism
            .map(usize::from)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Mqm,
    Bm,
    Bb,
    C1,
    Preimage,
    Hausdorff,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub alphas: AlphaArgs,
    /// Section size.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Run only these checks (comma separated); all six by default.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<Check>,
    /// Also run the checks symbolic in α. On by default when no α is given.
    #[arg(long)]
    pub symbolic: bool,
    /// Section size of the symbolic checks.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub symbolic_n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[command(flatten)]
    pub alphas: AlphaArgs,
    /// Section size; Q − I and P are decided exactly once n ≥ 2.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(2..))]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[command(flatten)]
    pub alphas: AlphaArgs,
    /// Largest section size.
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Write finding records (JSON lines) here instead of stderr.
    #[arg(long)]
    pub findings: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DetsArgs {
    /// Largest n; only n ≤ 3 has reference polynomials to compare with.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(0..=12))]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// One of: hausdorff, cesaro, c1, c2, b_matrix, c2_P, c2_Q, c1_P, c1_Q, pB.
    #[arg(long, value_parser = parse_kind_name)]
    pub kind: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_alpha)]
    pub alpha: Alpha,
    /// Order of the Cesàro moments for `cesaro` and `hausdorff`.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub beta: u32,
    /// Section size.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl MatrixArgs {
    pub fn operator_kind(&self) -> cesaro_core::Result<OperatorKind> {
        OperatorKind::from_name(&self.kind, self.alpha.value(), self.beta)
    }
}

pub fn parse_alpha(text: &str) -> Result<Alpha, String> {
    Alpha::parse(text).map_err(|e| e.to_string())
}

fn parse_kind_name(text: &str) -> Result<String, String> {
    if OperatorKind::NAMES.contains(&text) {
        Ok(text.to_string())
    } else {
        Err(format!(
            "unknown operator kind {text:?}; expected one of {}",
            OperatorKind::NAMES.join(", ")
        ))
    }
}

/// start:stop:step with rational components, start ≤ stop, step > 0.
pub fn parse_grid(text: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(format!("grid {text:?} is not start:stop:step"));
    };
    let num = |s: &str| parse_rational(s).map_err(|e| e.to_string());
    let (start, stop, step): (Rational, Rational, Rational) = (num(start)?, num(stop)?, num(step)?);
    if !step.is_positive() {
        return Err(format!("grid step {step} must be positive"));
    }
    if start > stop {
        return Err(format!("grid start {start} exceeds stop {stop}"));
    }
    let mut points = Vec::new();
    let mut k = Rational::zero();
    loop {
        let value = start.clone() + step.clone() * k.clone();
        if value > stop {
            break;
        }
        if points.len() == MAX_GRID_POINTS {
            return Err(format!("grid has more than {MAX_GRID_POINTS} points"));
        }
        points.push(Alpha::new(value).map_err(|e| e.to_string())?);
        k += Rational::from_integer(1.into());
    }
    Ok(Grid(points))
}
