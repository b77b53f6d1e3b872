use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("knot is not rationally nullhomologous in the surgered manifold")]
    NotRationallyNullhomologous,
    #[error("capping surface references unknown region {0:?}")]
    IndexMismatch(String),
    #[error("augmentation search over {count} degree-zero generators exceeds the bound {bound}")]
    SearchSpaceTooLarge { count: usize, bound: usize },
    #[error("not an augmentation: {0}")]
    InvalidAugmentation(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid Seifert invariants: {0}")]
    InvalidSeifert(String),
    #[error("invalid DGA: {0}")]
    InvalidDga(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
}

impl Error {
    /// Stable variant name, used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Overflow => "Overflow",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::ParseRational(_) => "ParseRational",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotRationallyNullhomologous => "NotRationallyNullhomologous",
            Error::IndexMismatch(_) => "IndexMismatch",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            Error::InvalidAugmentation(_) => "InvalidAugmentation",
            Error::InvalidPresentation(_) => "InvalidPresentation",
            Error::InvalidSeifert(_) => "InvalidSeifert",
            Error::InvalidDga(_) => "InvalidDga",
            Error::InvalidFamily(_) => "InvalidFamily",
            Error::InvalidDiagram(_) => "InvalidDiagram",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
