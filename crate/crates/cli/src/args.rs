use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use photon::tensor::DiscreteSymmetry;
use photon::{Helicity, Vec3};

fn triple(text: &str) -> Result<Vec3, String> {
    photon::parse_triple(text).ok_or_else(|| format!("expected three comma-separated numbers, got `{text}`"))
}

/// Photon tensors, helicity states, single-photon evolution and rotating
/// toy models.
#[derive(Debug, Parser)]
#[command(name = "photon", version)]
pub struct Cli {
    /// Leave the wall time out of the report so identical runs print
    /// identical bytes.
    #[arg(long, global = true)]
    pub reproducible: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Photon-tensor algebra.
    #[command(subcommand)]
    Tensor(TensorCommand),
    /// Helicity eigenvectors of k·S.
    Helicity {
        #[arg(long, value_parser = triple, allow_hyphen_values = true)]
        k: Vec3,
    },
    /// Evolve a state file and write observables as CSV.
    Evolve {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the evolved state.
        #[arg(long)]
        final_state: Option<PathBuf>,
    },
    /// Energy, spin and cross section of a rotating toy model.
    Toymodel {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        omega0: f64,
        /// Ring shape parameter.
        #[arg(long)]
        k: Option<f64>,
    },
    /// Residuals of the Maxwell-form equations for a wave packet.
    MaxwellDemo {
        #[arg(long)]
        config: PathBuf,
    },
    /// Create a state file.
    #[command(subcommand)]
    State(StateCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Disk,
    Ring,
    String,
}

#[derive(Debug, Args)]
pub struct TensorInput {
    /// JSON tensor document.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum TensorCommand {
    /// Build a photon tensor.
    Make {
        #[arg(long, value_parser = triple, allow_hyphen_values = true)]
        k: Vec3,
        #[arg(long, allow_hyphen_values = true)]
        helicity: Helicity,
        #[arg(long)]
        omega: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phase: f64,
        /// Also write the tensor document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Boost into a frame moving with velocity beta.
    Boost {
        #[arg(long, value_parser = triple, allow_hyphen_values = true)]
        beta: Vec3,
        #[command(flatten)]
        input: TensorInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual tensor.
    Dual {
        #[command(flatten)]
        input: TensorInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The three scalars.
    Invariants {
        #[command(flatten)]
        input: TensorInput,
    },
    /// Apply P, T, C or D.
    Symmetry {
        #[arg(long)]
        op: DiscreteSymmetry,
        #[command(flatten)]
        input: TensorInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transversality residuals against k (taken from the document if not
    /// given).
    Transversality {
        #[arg(long, value_parser = triple, allow_hyphen_values = true)]
        k: Option<Vec3>,
        #[command(flatten)]
        input: TensorInput,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p_max: f64,
}

#[derive(Debug, Subcommand)]
pub enum StateCommand {
    /// Gaussian packet of one helicity.
    Gaussian {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_parser = triple, allow_hyphen_values = true)]
        p0: Vec3,
        #[arg(long)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        helicity: Helicity,
        /// `.json` for JSON, anything else for binary.
        #[arg(long)]
        out: PathBuf,
    },
    /// Thin energy shell of one helicity.
    Shell {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        energy: f64,
        #[arg(long)]
        width: f64,
        #[arg(long, allow_hyphen_values = true)]
        helicity: Helicity,
        #[arg(long)]
        out: PathBuf,
    },
}
