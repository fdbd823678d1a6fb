//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A residue word was built from an entry outside {0,1,2,3}.
    #[error("entry {entry} at position {position} is not a residue mod 4")]
    EntryOutOfRange { entry: u8, position: usize },

    /// Two words (or a word and a matrix) of different lengths were combined.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// An operation defined only for odd dimensions received an even or
    /// too-small one.
    #[error("{op} requires an odd dimension n >= {min}, got n = {n}")]
    OddDimensionRequired {
        op: &'static str,
        min: usize,
        n: usize,
    },

    /// An operation defined only for even indices received an odd one.
    #[error("{op} requires an even index m >= {min}, got m = {m}")]
    EvenIndexRequired {
        op: &'static str,
        min: usize,
        m: usize,
    },

    /// A 1-based coordinate fell outside 1..=n.
    #[error("coordinate {coordinate} out of range for dimension {dim}")]
    CoordinateOutOfRange { coordinate: usize, dim: usize },

    /// The exhaustive voxel oracle would need more voxels than allowed.
    #[error("voxel cover check for n = {n} needs {needed} voxels, budget is {budget}")]
    VoxelBudgetExceeded { n: usize, needed: u128, budget: u64 },

    /// Subset-sum enumeration over 2^n subsets refused for very large n.
    #[error("subset-sum enumeration for n = {n} exceeds the supported bound {max}")]
    EnumerationTooLarge { n: usize, max: usize },

    /// A word headed for the star substitution contained the entry 3.
    #[error("entry 3 at position {position} has no star-code image")]
    UnexpectedThree { position: usize },

    /// The all-ones discrete box has no canonical vertex.
    #[error("the all-ones box contains no Lucas cube vertex")]
    AllOnesBox,

    /// An index set handed to the dimension-reduction map was not a valid
    /// generator of the given word.
    #[error("malformed index set: {reason}")]
    MalformedIndexSet { reason: String },

    /// A report with no verdicts cannot be serialized.
    #[error("refusing to serialize a report with no verdicts")]
    EmptyReport,

    /// The requested output format cannot represent this report.
    #[error("unsupported output format for this report: {0}")]
    UnsupportedFormat(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
