//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vzlef_core::lefschetz::GroupSpec;
use vzlef_core::{GroupKind, Partition};

use crate::table::Format;

fn parse_kind(s: &str) -> Result<GroupKind, String> {
    match s {
        "U" | "u" => Ok(GroupKind::U),
        "O" | "o" => Ok(GroupKind::O),
        _ => Err(format!("expected U or O, got {s:?}")),
    }
}

fn parse_group(s: &str) -> Result<GroupSpec, String> {
    s.parse().map_err(|e: vzlef_core::CoreError| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: vzlef_core::CoreError| e.to_string())
}

/// Cohomological-module catalogs, isolation, Lefschetz verdicts, branching and
/// geometry checks for U(p,q) and O(p,q).
#[derive(Debug, Parser)]
#[command(name = "vzlef", version, about)]
pub struct Cli {
    /// Output serializer; overrides the config file.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// TOML config file with caps, seeds, sample counts and tolerances.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Exit with status 2 when any row fails its criterion.
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All cohomological modules of U(p,q) or O(p,q).
    Catalog(CatalogArgs),
    /// Isolation verdicts per module, or the degree-bound table.
    Isolation(IsolationArgs),
    /// Restriction, cup-product, tensor and modular-symbol verdicts.
    Lefschetz(LefschetzArgs),
    /// K-type branching multiplicities and their oracles.
    #[command(subcommand)]
    Branch(BranchCommand),
    /// Numerical checks on the bounded model.
    #[command(subcommand)]
    Geometry(GeometryCommand),
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: GroupKind,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    /// Count modules per primitive degree instead of listing them.
    #[arg(long)]
    pub histogram: bool,
    /// Largest p*q box to enumerate.
    #[arg(long)]
    pub enum_cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct IsolationArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: GroupKind,
    #[arg(long, required_unless_present = "thresholds")]
    pub p: Option<usize>,
    #[arg(long, required_unless_present = "thresholds")]
    pub q: Option<usize>,
    /// Degree bound for non-isolated modules over a range of (p,q).
    #[arg(long)]
    pub thresholds: bool,
    /// Smallest side in the threshold table.
    #[arg(long, default_value_t = 1)]
    pub min_side: usize,
    /// Largest p+q in the threshold table.
    #[arg(long, default_value_t = 9)]
    pub max_sum: usize,
    #[arg(long)]
    pub enum_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Restriction,
    Cup,
    Tensor,
    ModularSymbol,
}

#[derive(Debug, Args)]
pub struct LefschetzArgs {
    #[arg(long, value_enum, default_value = "restriction")]
    pub mode: Mode,
    /// Group as `U:p,q` or `O:p,q`. For cup products this is the ambient
    /// group; for modular symbols it is the subgroup `G(p,q)` of `G(p,q+r)`.
    #[arg(long = "G", alias = "group", value_parser = parse_group, required_unless_present = "queries")]
    pub group: Option<GroupSpec>,
    /// `pair`, `codim:R` or `orthogonal`.
    #[arg(long)]
    pub subgroup: Option<String>,
    /// Degree or comma-separated degrees.
    #[arg(long, conflicts_with_all = ["component", "degrees", "tensor"])]
    pub degree: Option<String>,
    /// `λ;μ` for U or `λ` for O, e.g. `(1);(2,1)`.
    #[arg(long, conflicts_with_all = ["degrees", "tensor"])]
    pub component: Option<String>,
    /// Tensor mode: degrees `k,l` of the two classes.
    #[arg(long, conflicts_with = "tensor")]
    pub degrees: Option<String>,
    /// Tensor mode: `i,j,k,l` for U or `k,l` for O.
    #[arg(long)]
    pub tensor: Option<String>,
    /// Modular-symbol mode: codimension r.
    #[arg(long)]
    pub r: Option<usize>,
    /// L² / cuspidal statements for isotropic groups.
    #[arg(long)]
    pub isotropic: bool,
    /// CSV file with columns mode,group,subgroup,query[,isotropic].
    #[arg(long, conflicts_with_all = ["group", "degree", "component", "degrees", "tensor", "r"])]
    pub queries: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BranchCommand {
    /// Restriction of the lowest K-type to the codimension-r subgroup, with the character oracle.
    Restrict(RestrictArgs),
    /// Littlewood-Richardson coefficient `c^λ_{μν}`.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Multiplicity of `Γ̄_μ` in `E^λ` restricted to `O(n)`.
    GlToO {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Containment of the product module in a tensor product of two modules.
    Tensor {
        #[arg(long = "G", alias = "group", value_parser = parse_group)]
        group: GroupSpec,
        /// `i,j,k,l` for U or `k,l` for O.
        #[arg(long)]
        tensor: String,
    },
}

#[derive(Debug, Args)]
pub struct RestrictArgs {
    #[arg(long = "G", alias = "group", value_parser = parse_group, required_unless_present = "input")]
    pub group: Option<GroupSpec>,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Option<Partition>,
    /// Outer partition for U; O uses the complement of λ.
    #[arg(long, value_parser = parse_partition)]
    pub mu: Option<Partition>,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// JSON file: array of `{"group": "U:2,3", "lambda": [1], "mu": [2,1], "r": 1}`.
    #[arg(long, conflicts_with_all = ["group", "lambda", "mu"])]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub enum_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum GeometryCommand {
    /// Monte Carlo estimate of the Gamma-product integral against its closed form.
    VerifyIntegral(VerifyIntegralArgs),
    /// Jacobi-operator spectra against the stated and the corrected multisets.
    Jacobi(JacobiArgs),
    /// Hessian of the distance to X_V (r = 1) or of ½ log(B/A).
    Hessian(HessianArgs),
    /// Tube volume density: exact for r = 1, the growth bound otherwise.
    Volume(VolumeArgs),
    /// Spectral degree thresholds, Donnelly-Xavier limits, counting and Poincaré bounds.
    Thresholds(ThresholdArgs),
}

#[derive(Debug, Args)]
pub struct VerifyIntegralArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub batches: Option<usize>,
}

#[derive(Debug, Args)]
pub struct JacobiArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub r: usize,
    /// Explicit normal block, rows separated by `;`, e.g. `0.8,0;0,0.6`.
    /// It is normalized to unit length.
    #[arg(long, conflicts_with_all = ["samples", "seed"])]
    pub y2: Option<String>,
    /// Number of random unit directions.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct HessianArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, default_value_t = 10)]
    pub points: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Finite-difference step.
    #[arg(long, default_value_t = vzlef_geometry::hessian::DEFAULT_STEP)]
    pub step: f64,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    /// Comma-separated radii.
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<f64>,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub r: usize,
    /// Radius for the counting bound.
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    /// Exponent to test for Poincaré-series convergence.
    #[arg(long)]
    pub w: Option<f64>,
}
