use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "holocurv",
    version,
    about = "Curvature and weak-curvature spaces of holonomy algebras"
)]
pub struct Cli {
    /// Directory for cached solution spaces (HOLOCURV_CACHE takes precedence).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Disable the cache entirely.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Seed for randomized probes; every current algorithm is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Catalog access.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// Weak-curvature space P(h) and the weak-Berger verdict.
    Pspace(SpaceArgs),
    /// Curvature space R(g) and the Berger verdict, alongside P.
    Rspace(SpaceArgs),
    /// Weak-Berger verdicts for every catalog entry up to a dimension.
    Table {
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Type algebras in so(1, n+1).
    Lorentz(LorentzArgs),
    /// Closedness of a torus subgroup given by a basis over a number field.
    TorusClosed {
        /// Minimal polynomial of the coefficient field, e.g. "x^2-2"; "x" means ℚ.
        #[arg(long, default_value = "x")]
        min_poly: String,
        /// Semicolon-separated vectors of comma-separated field elements.
        #[arg(long)]
        basis: String,
        /// Ambient dimension, required when the basis is empty.
        #[arg(long)]
        dim: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RepAction {
    List {
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    Show {
        name: String,
    },
    Export {
        name: String,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// `catalog:NAME`, `file:PATH`, a catalog name, or a JSON file path.
    pub rep: String,
    /// Include basis vectors.
    #[arg(long)]
    pub basis: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct LorentzArgs {
    #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=4))]
    pub ty: u8,
    #[arg(long)]
    pub h: String,
    /// φ over the canonical center basis, comma-separated.
    #[arg(long)]
    pub phi: Option<String>,
    /// ψ rows separated by ';', entries by ','.
    #[arg(long)]
    pub psi: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub e0_dim: usize,
    #[arg(long)]
    pub verify_thm3: bool,
    #[arg(long)]
    pub berger: bool,
    #[arg(long)]
    pub json: bool,
}
