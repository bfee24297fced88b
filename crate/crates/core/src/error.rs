use thiserror::Error;

use crate::check::Witness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cochain shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("subspace containment violated: vector {index} of the smaller space is not in the larger one")]
    ContainmentViolation { index: usize },

    #[error("algebra axiom violated: {0}")]
    AxiomViolation(String),

    #[error("asymmetric structure constants at (e{i}, e{j}) in strict mode", i = .0 + 1, j = .1 + 1)]
    AsymmetricInput(usize, usize),

    #[error("operator is not a Rota-Baxter operator (witness {0})")]
    NotRotaBaxter(Witness),

    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),

    #[error("representations do not share one Rota-Baxter algebra")]
    MixedBase,

    #[error("construction requires weight 0, got {0}")]
    NonzeroWeight(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("unsupported degree {0}: the Rota-Baxter complex is only defined in degrees 0 and 1")]
    UnsupportedDegree(usize),

    #[error("parameters fall in the excluded locus: {0}")]
    ExcludedParameters(String),

    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error("unknown family `{family}` for catalog entry `{id}`")]
    UnknownFamily { id: String, family: String },

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("missing section `{0}`")]
    MissingSection(String),
}
