use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Exact checks for hom-Lie algebras, their representations, O-operators,
/// deformations and r-matrices. Inputs are JSON documents with rational
/// entries written as strings.
#[derive(Debug, Parser)]
#[command(name = "homlie", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit the machine-readable report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RepOperator {
    /// Representation document.
    #[arg(long)]
    pub rep: PathBuf,
    /// Operator document `V → g`.
    #[arg(long)]
    pub t: PathBuf,
}

#[derive(Debug, Args)]
pub struct RepDeformation {
    /// Representation document.
    #[arg(long)]
    pub rep: PathBuf,
    /// Deformation document.
    #[arg(long)]
    pub deformation: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check multiplicativity and the hom-Jacobi identity.
    VerifyAlgebra {
        /// Algebra document.
        algebra: PathBuf,
    },
    /// Check the representation axioms.
    VerifyRep {
        /// Representation document.
        rep: PathBuf,
    },
    /// Build the semidirect product algebra of a representation.
    Semidirect {
        /// Representation document.
        rep: PathBuf,
    },
    /// Dimensions of cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        /// Representation document.
        #[arg(long)]
        rep: PathBuf,
        /// Degree.
        #[arg(long)]
        n: usize,
        /// Use the complex of this O-operator instead of the algebra complex.
        #[arg(long, value_name = "PATH")]
        operator: Option<PathBuf>,
    },
    /// Check whether an operator is an O-operator, by three routes.
    CheckOOperator(RepOperator),
    /// Check the Rota-Baxter identity of weight lambda for the α^s-adjoint action.
    CheckRotaBaxter {
        /// Algebra document.
        #[arg(long)]
        algebra: PathBuf,
        /// Operator document.
        #[arg(long)]
        r: PathBuf,
        /// Power of the twist in the action.
        #[arg(long, default_value_t = 0)]
        s: u32,
        /// Weight, a rational.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Check the Nijenhuis identity of an operator on an algebra.
    CheckNijenhuisOperator {
        /// Algebra document.
        #[arg(long)]
        algebra: PathBuf,
        /// Operator document.
        #[arg(long = "operator")]
        operator: PathBuf,
    },
    /// The hom-pre-Lie product induced by an O-operator.
    InducedPreLie(RepOperator),
    /// The representation of the algebra on itself induced by an O-operator.
    RhoT(RepOperator),
    /// Check that T + tG is a deformation for all t.
    CheckLinearDeformation {
        #[command(flatten)]
        base: RepOperator,
        /// Generator document.
        #[arg(long)]
        generator: PathBuf,
    },
    /// Check whether x is a Nijenhuis element and certify the trivial deformation.
    NijenhuisElement {
        #[command(flatten)]
        base: RepOperator,
        /// Comma-separated rational coordinates of x.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Check a truncated formal deformation order by order.
    DeformCheck(RepDeformation),
    /// Extend a deformation order by order until an obstruction or the maximum order.
    DeformExtend {
        #[command(flatten)]
        input: RepDeformation,
        /// Highest order to reach.
        #[arg(long)]
        max_order: usize,
    },
    /// The obstruction cochain of a truncated deformation.
    Obstruction(RepDeformation),
    /// Decide whether an invariant skew 2-tensor is an r-matrix, by three routes.
    RmatrixCheck {
        /// Algebra document.
        #[arg(long)]
        algebra: PathBuf,
        /// r-matrix document.
        #[arg(long)]
        r: PathBuf,
    },
    /// Convert between an r-matrix document and the matrix of its operator.
    RmatrixConvert {
        /// r-matrix document to convert into an operator.
        #[arg(
            long,
            conflicts_with = "operator",
            required_unless_present = "operator"
        )]
        r: Option<PathBuf>,
        /// Dimension for `--r`.
        #[arg(long, requires = "r")]
        dim: Option<usize>,
        /// Skew operator document to convert into an r-matrix.
        #[arg(long = "operator")]
        operator: Option<PathBuf>,
    },
    /// Check the weak homomorphism conditions for (φ, ψ) from r1 to r2.
    WeakHomCheck {
        /// Algebra document.
        #[arg(long)]
        algebra: PathBuf,
        /// Algebra endomorphism document.
        #[arg(long)]
        phi: PathBuf,
        /// Second map document.
        #[arg(long)]
        psi: PathBuf,
        /// Source r-matrix document.
        #[arg(long)]
        r1: PathBuf,
        /// Target r-matrix document.
        #[arg(long)]
        r2: PathBuf,
    },
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::VerifyAlgebra { .. } => "verify-algebra",
            Command::VerifyRep { .. } => "verify-rep",
            Command::Semidirect { .. } => "semidirect",
            Command::Cohomology { .. } => "cohomology",
            Command::CheckOOperator(_) => "check-o-operator",
            Command::CheckRotaBaxter { .. } => "check-rota-baxter",
            Command::CheckNijenhuisOperator { .. } => "check-nijenhuis-operator",
            Command::InducedPreLie(_) => "induced-pre-lie",
            Command::RhoT(_) => "rho-t",
            Command::CheckLinearDeformation { .. } => "check-linear-deformation",
            Command::NijenhuisElement { .. } => "nijenhuis-element",
            Command::DeformCheck(_) => "deform-check",
            Command::DeformExtend { .. } => "deform-extend",
            Command::Obstruction(_) => "obstruction",
            Command::RmatrixCheck { .. } => "rmatrix-check",
            Command::RmatrixConvert { .. } => "rmatrix-convert",
            Command::WeakHomCheck { .. } => "weak-hom-check",
        }
    }
}
