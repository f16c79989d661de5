use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("cannot parse token {token:?} at position {position}")]
    Parse { position: usize, token: String },
    #[error("invalid strand range [{i}, {j}] on {strands} strands")]
    InvalidRange { i: usize, j: usize, strands: usize },
    #[error("need at least {needed} strands, got {got}")]
    TooFewStrands { needed: usize, got: usize },
    #[error("strand sets must be unions of permutation cycles")]
    NotUnionOfCycles,
    #[error("strand sets must be disjoint")]
    NotDisjoint,
    #[error("images do not form a permutation")]
    NotAPermutation,
    #[error("permutation is not a single cycle through every position")]
    NotFullCycle,
    #[error("invalid exchange form: {0}")]
    InvalidExchangeForm(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("no crossing with id {0}")]
    NoSuchCrossing(usize),
    #[error("no component with label {0}")]
    NoSuchComponent(usize),
    #[error("inconsistent connectivity: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("not a polynomial of degree {degree}: sample at m = {m} deviates")]
    NotPolynomial { degree: usize, m: i64 },
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("degree {degree} is below the lowest possible coefficient {lowest} for {components} components")]
    DegreeTooLow {
        degree: usize,
        lowest: usize,
        components: usize,
    },
    #[error("closure of the braid is not a knot ({0} components)")]
    NotAKnot(usize),
    #[error("corpus: {0}")]
    Corpus(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
