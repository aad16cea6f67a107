use thiserror::Error;

/// Errors raised by the library. The CLI maps every variant to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid name `{0}` (expected [A-Za-z_][A-Za-z0-9_]*)")]
    InvalidName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("undeclared vertex `{vertex}` used by `{user}`")]
    UndeclaredVertex { vertex: String, user: String },
    #[error("hyperedge `{0}` has an empty source")]
    EmptySource(String),
    #[error("hyperedge `{0}` has an empty range")]
    EmptyRange(String),
    #[error("group `{group}` has edges with different sources")]
    InconsistentGroupSource { group: String },
    #[error("invalid weighted graph: {0}")]
    InvalidWeightedGraph(String),
    #[error("edge `{edge}` uses vertex `{vertex}` outside the vertex subset")]
    SubhypergraphClosure { edge: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown hyperedge `{0}`")]
    UnknownEdge(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("index [{i},{j}] out of range for hyperedge `{edge}` (|s| = {source_len}, |r| = {range_len})")]
    IndexOutOfRange {
        edge: String,
        i: usize,
        j: usize,
        source_len: usize,
        range_len: usize,
    },
    #[error("scalar `{0}` is not an element of the selected field")]
    ScalarNotInField(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands belong to different algebras (hypergraph or field mismatch)")]
    AlgebraMismatch,
    #[error("not a hypergraph homomorphism: {0}")]
    InvalidHomomorphism(String),
    #[error("weight map is not admissible: {0}")]
    InadmissibleWeight(String),
    #[error("weight map rank {weights} does not match window rank {window}")]
    RankMismatch { weights: usize, window: usize },
    #[error("invalid monoid presentation: {0}")]
    InvalidPresentation(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("hypergraph has a selfconnected quasi-cycle; chain length is undefined")]
    SelfconnectedPresent,
    #[error("inconsistent chain digraph: {0}")]
    InconsistentChains(String),
    #[error("count overflow at length {0}")]
    CountOverflow(usize),
    #[error("budget exhausted after {0} steps")]
    BudgetExhausted(u64),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Step counter shared by the rewriting and search routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepBudget {
    pub max_steps: Option<u64>,
}

impl StepBudget {
    pub const UNLIMITED: StepBudget = StepBudget { max_steps: None };

    pub fn limited(max_steps: u64) -> Self {
        StepBudget {
            max_steps: Some(max_steps),
        }
    }

    /// Fails once `used` exceeds the cap.
    pub fn check(&self, used: u64) -> Result<()> {
        match self.max_steps {
            Some(max) if used > max => Err(Error::BudgetExhausted(max)),
            _ => Ok(()),
        }
    }
}

impl Default for StepBudget {
    fn default() -> Self {
        StepBudget::UNLIMITED
    }
}
