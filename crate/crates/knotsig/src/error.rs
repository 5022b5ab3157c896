use num_bigint::BigInt;
use thiserror::Error;

/// Errors surfaced by the exact kernels and the table layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("Seifert matrix has odd dimension {dim}")]
    OddDimension { dim: usize },

    #[error("det(V - V^T) = {det}, expected 1; not a Seifert matrix")]
    NonUnimodular { det: BigInt },

    #[error("polynomial vanishes at interval endpoint {endpoint}")]
    EndpointIsRoot { endpoint: String },

    #[error("omega = 1 is excluded from signature evaluation")]
    PointEqualsOne,

    #[error("abscissa is not certifiably inside (-1, 1): [{lo}, {hi}]")]
    AbscissaOutOfRange { lo: String, hi: String },

    #[error("division by zero in Q(alpha)")]
    DivisionByZero,

    #[error("polynomial is not symmetric; not an Alexander polynomial")]
    AsymmetricInput,

    #[error("cannot parse matrix: {0}")]
    MatrixParse(String),

    #[error("table is missing required column `{name}` for role {role}")]
    MissingColumn { role: &'static str, name: String },

    #[error("table contains no data rows")]
    EmptyTable,

    #[error("failed to read table: {0}")]
    TableIo(#[from] csv::Error),

    #[error("while processing `{name}`: {source}")]
    Knot {
        name: String,
        #[source]
        source: Box<Error>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn for_knot(self, name: &str) -> Error {
        Error::Knot {
            name: name.to_string(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
