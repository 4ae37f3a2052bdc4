use crate::exact::Int;

/// Errors reported by operations whose preconditions can fail on user input.
///
/// Violations of internal identities (e.g. a determinant that fails a
/// guaranteed divisibility) are bugs, not domain errors, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not unimodular (determinant {det}, expected +1 or -1)")]
    NotUnimodular { det: Int },

    #[error("binary cubic form is not monogenized (x^3 coefficient {leading}, expected -1)")]
    NotMonogenized { leading: Int },

    #[error("ternary quadratic form has 4*det = {det4}, expected -1")]
    NotUnitCovolume { det4: Int },

    #[error("no isotropic vector with entries bounded by {bound}; retry with a larger bound")]
    SearchExhausted { bound: i64 },

    #[error("structure-constant table is not a ring: {0}")]
    CorruptRing(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid witness certificate: {0}")]
    BadWitness(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
