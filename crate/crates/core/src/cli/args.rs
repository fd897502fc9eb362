use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "einl", version, about = "Conditions, orbit maps and kC-module checks for FI_Γ, VI and VIC")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transitivity and bijectivity conditions, with observed onsets.
    CheckConditions(CommonArgs),
    /// Stabilizers, orbit counts, the maps μ and μ′, and the θ census.
    Orbits(CommonArgs),
    /// Hom-space chain, ν and e_{i,j} for a submodule of M(i).
    Stabilize(CommonArgs),
    /// ρ_j flags, generator degrees and torsion of a module.
    FgTorsion(CommonArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckConditions(_) => "check-conditions",
            Command::Orbits(_) => "orbits",
            Command::Stabilize(_) => "stabilize",
            Command::FgTorsion(_) => "fg-torsion",
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::CheckConditions(a) | Command::Orbits(a) | Command::Stabilize(a) | Command::FgTorsion(a) => a,
        }
    }
}

/// Flags shared by every subcommand. Unset options fall back to the config
/// file, then to defaults.
#[derive(Clone, Debug, Default, Args)]
pub struct CommonArgs {
    /// fi_gamma, vi or vic [default: fi_gamma]
    #[arg(long)]
    pub category: Option<String>,
    /// Field size for VI and VIC [default: 2]
    #[arg(long)]
    pub q: Option<u32>,
    /// cyclic:<n> or table:<path> [default: cyclic:1]
    #[arg(long)]
    pub gamma: Option<String>,
    /// Comma-separated source objects [default: 1]
    #[arg(long, value_delimiter = ',')]
    pub i: Option<Vec<usize>>,
    /// Truncation J [default: 4]
    #[arg(long = "max-object")]
    pub max_object: Option<usize>,
    /// Largest hom-set or group to enumerate
    #[arg(long)]
    pub guard: Option<usize>,
    /// Stack equivariance systems over whole groups, not generators
    #[arg(long)]
    pub audit: bool,
    /// Worker threads
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// json or table [default: json]
    #[arg(long)]
    pub format: Option<String>,
    /// key = value file; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Builtin module: free, zero, sum-zero, atom, diagonal
    #[arg(long)]
    pub module: Option<String>,
    /// Generator file ("degree: c1 c2 ...") for a submodule of M(i)
    #[arg(long, conflicts_with = "module")]
    pub generators: Option<PathBuf>,
    /// First degree of the stabilization chain [default: the bijectivity onset]
    #[arg(long)]
    pub j0: Option<usize>,
    /// Add wall-clock milliseconds per section (output is then not reproducible)
    #[arg(long)]
    pub timings: bool,
}
