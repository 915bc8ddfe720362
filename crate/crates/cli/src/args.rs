use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Certificates for cyclic cubic points on explicit curves.
///
/// Polynomial arguments accept parser text or `@path` to read the text from
/// a UTF-8 file. Reports are canonical JSON.
#[derive(Debug, Parser)]
#[command(name = "cubiccert", version)]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus of a hyperelliptic or trigonal model.
    Genus(GenusArgs),
    /// Discriminant curve of a trigonal model.
    DiscCurve(CubicInput),
    /// Decide whether a trigonal model has infinitely many cyclic cubic fibres.
    Classify(ClassifyArgs),
    /// Certificate for a single fibre.
    Fibre(FibreArgs),
    /// Generate cyclic cubic fibre certificates.
    Enumerate(EnumerateArgs),
    /// Rational points of bounded height on y^2 = x^3 + a x + b.
    EcSearch(EcArgs),
    /// Non-torsion certificate for a point (given or found by search).
    EcRank(EcRankArgs),
    /// Castelnuovo-Severi bound check.
    CsCheck(CsArgs),
    /// Frobenius cycle types and Galois claims for a polynomial.
    Galois(GaloisArgs),
    /// Flex polynomial of a plane quartic and its Galois certificate.
    Flexes(FlexArgs),
    /// Integral cyclic cubic points from punctures.
    Punctures(PunctureArgs),
    /// Check a rational map between plane models and report its degree.
    VerifyMap(MapArgs),
    /// Run a bundled example pipeline.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    Quick,
    #[value(name = "paper")]
    Thorough,
}

/// `y^3 + p(x) y + q(x)` given by `--p`/`--q`, or any cubic equation in
/// `y` with constant leading coefficient by `--curve`.
#[derive(Debug, Clone, Args)]
pub struct CubicInput {
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p", "q"])]
    pub curve: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value = "quick")]
    pub budget_profile: Profile,
    /// Height bound for point searches.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub height: Option<u64>,
    /// Denominator bound `e` in `x = m / e^2`.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub denom: Option<u64>,
    /// Height bound for the conic point search.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub conic_height: Option<i64>,
}

#[derive(Debug, Args)]
pub struct GenusArgs {
    /// `y^2 = f(x)`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p", "q", "curve"])]
    pub f: Option<String>,
    #[command(flatten)]
    pub cubic: CubicInput,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub cubic: CubicInput,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Args)]
pub struct FibreArgs {
    #[command(flatten)]
    pub cubic: CubicInput,
    #[arg(long, allow_hyphen_values = true)]
    pub x0: String,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub cubic: CubicInput,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Number of certificates wanted.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    /// Walk candidates examined before giving up.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_steps: Option<u64>,
}

#[derive(Debug, Args)]
pub struct EcArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Args)]
pub struct EcRankArgs {
    #[command(flatten)]
    pub curve: EcArgs,
    #[arg(long, allow_hyphen_values = true, requires = "y")]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "x")]
    pub y: Option<String>,
}

#[derive(Debug, Args)]
pub struct CsArgs {
    #[arg(long)]
    pub g: u64,
    #[arg(long)]
    pub d1: u64,
    #[arg(long)]
    pub g1: u64,
    #[arg(long)]
    pub d2: u64,
    #[arg(long)]
    pub g2: u64,
}

#[derive(Debug, Args)]
pub struct GaloisArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Number of primes swept; the profile default otherwise.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub primes: Option<u64>,
    #[arg(long, value_enum, default_value = "quick")]
    pub budget_profile: Profile,
    /// Also run the screen for `y^2 = f(x)` (even degree at least 8).
    #[arg(long)]
    pub weierstrass: bool,
}

#[derive(Debug, Args)]
pub struct FlexArgs {
    /// Affine quartic `F(x, y)`; the projective curve is its homogenization.
    #[arg(long, allow_hyphen_values = true)]
    pub quartic: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub primes: Option<u64>,
    #[arg(long, value_enum, default_value = "quick")]
    pub budget_profile: Profile,
}

#[derive(Debug, Args)]
pub struct PunctureArgs {
    #[command(flatten)]
    pub cubic: CubicInput,
    /// Puncture images as rationals or `inf`, comma separated or repeated.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub puncture: Vec<String>,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Source equation in x, y (monic in y).
    #[arg(long, allow_hyphen_values = true)]
    pub source: String,
    #[arg(long, allow_hyphen_values = true)]
    pub target: String,
    /// First component as a polynomial in x, y, or `num / den` with `--map-x-den`.
    #[arg(long, allow_hyphen_values = true)]
    pub map_x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub map_x_den: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "y")]
    pub map_y: String,
    #[arg(long, allow_hyphen_values = true)]
    pub map_y_den: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleId {
    Example1,
    Genus5,
    Ns13,
    Rank672,
    Punctures,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub example: ExampleId,
}
