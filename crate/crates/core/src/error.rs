use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable tuples differ: {left:?} vs {right:?}")]
    VarMismatch { left: Vec<String>, right: Vec<String> },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("target degree {target} is below the total degree {actual}")]
    DegreeTooLow { target: u32, actual: u32 },

    #[error("polynomial is not univariate (variables {0:?})")]
    NotUnivariate(Vec<String>),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },

    #[error("interval ({lo}, {hi}] does not isolate a single root")]
    NotIsolating { lo: String, hi: String },

    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("division is not exact")]
    InexactDivision,

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("degenerate Legendre parameter {0}: the curve is singular")]
    DegenerateLambda(String),

    #[error("degree contract violated for P({mu},{k}): expected deg_x={want_x}, deg_lambda={want_l}; got {got_x}, {got_l}")]
    DegreeContract {
        mu: u32,
        k: u32,
        want_x: u32,
        want_l: u32,
        got_x: u32,
        got_l: u32,
    },

    #[error("invalid window: {0}")]
    Window(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("output failed: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
