use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("invalid letter `{found}` in word `{text}` (expected I, X, Y or A)")]
    InvalidLetter { text: String, found: char },
    #[error("word length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("word `{word}` is shorter than the grading depth {depth}")]
    WordTooShort { word: String, depth: usize },
    #[error("unsupported grading depth {0} (only 0, 1, 2)")]
    UnsupportedGrading(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("axiom violated: {0}")]
    Axiom(#[from] AxiomViolation),
    #[error("unknown class: {0}")]
    UnknownClass(String),
    #[error("catalog corruption: presentation matches several classes: {0}")]
    AmbiguousClass(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// The first superdivision axiom a presentation fails, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("unit missing: the zero sector must start with the positive all-I word, found {found}")]
    MissingUnit { found: String },
    #[error("sector count: expected sectors {expected}, found {found}")]
    SectorCount { expected: String, found: String },
    #[error("sector {sector} has {found} generators, series {series} needs {expected}")]
    SectorDimension { sector: String, series: String, expected: usize, found: usize },
    #[error("words of unequal length: {first} and {other}")]
    UnequalLength { first: String, other: String },
    #[error("word {word} declared in sector {declared} has grade {actual}")]
    MisplacedWord { word: String, declared: String, actual: String },
    #[error("generators {first} and {second} coincide up to sign")]
    DuplicateGenerator { first: String, second: String },
    #[error("product {left}·{right} = {product} lands in sector {actual}, expected {expected}")]
    GradingViolation { left: String, right: String, product: String, expected: String, actual: String },
    #[error("not closed: {left}·{right} = {product} is not ± any generator")]
    Closure { left: String, right: String, product: String },
    #[error("sector {sector} is not a division sector: {reason}")]
    Division { sector: String, reason: String },
    #[error("sector {sector}: determinant oracle found a singular element with coefficients {coefficients:?}")]
    SingularElement { sector: String, coefficients: Vec<i64> },
}
