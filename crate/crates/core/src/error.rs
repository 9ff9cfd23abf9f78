use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has a non-real root {re} + {im}i")]
    ComplexRoots { re: f64, im: f64 },
    #[error("leading coefficient {leading} is negligible against max coefficient {max}")]
    DegenerateLeadingCoefficient { leading: f64, max: f64 },
    #[error("graph factor has order 0")]
    EmptyGraph,
    #[error("first factor is not regular")]
    NotRegular,
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("rounding guard violated: numeric value {numeric} vs exact {exact}")]
    RoundingGuardViolated { numeric: f64, exact: String },
    #[error("hypothesis violated: {hypothesis} ({detail})")]
    HypothesisViolated { hypothesis: String, detail: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Variant name, used by the CLI when reporting computation errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::OutOfRange { .. } => "OutOfRange",
            Error::LoopEdge(_) => "LoopEdge",
            Error::MalformedGraph6(_) => "MalformedGraph6",
            Error::MalformedEdgeList(_) => "MalformedEdgeList",
            Error::BadFamilyParams(_) => "BadFamilyParams",
            Error::NonSquare => "NonSquare",
            Error::NonSymmetric => "NonSymmetric",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ComplexRoots { .. } => "ComplexRoots",
            Error::DegenerateLeadingCoefficient { .. } => "DegenerateLeadingCoefficient",
            Error::EmptyGraph => "EmptyGraph",
            Error::NotRegular => "NotRegular",
            Error::Disconnected { .. } => "Disconnected",
            Error::RoundingGuardViolated { .. } => "RoundingGuardViolated",
            Error::HypothesisViolated { .. } => "HypothesisViolated",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
