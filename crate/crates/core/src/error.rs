use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. Node and packet indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NoNodes: a code needs at least one node")]
    NoNodes,
    #[error("EmptyNode: {0}")]
    EmptyNode(usize),
    #[error("IndexOutOfRange: packet {index} on node {node} is outside 1..={theta}")]
    IndexOutOfRange { node: usize, index: usize, theta: usize },
    #[error("DuplicatePacket: packet {packet} listed more than once on node {node}")]
    DuplicatePacket { node: usize, packet: usize },
    #[error("OrphanPacket: {0}")]
    OrphanPacket(usize),

    #[error("EmptyMatrix: matrix has no rows or no columns")]
    EmptyMatrix,
    #[error("RaggedMatrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix { row: usize, expected: usize, found: usize },
    #[error("ZeroRow: {0}")]
    ZeroRow(usize),
    #[error("ZeroColumn: {0}")]
    ZeroColumn(usize),
    #[error("NonBinaryEntry: value {value} at row {row}, column {col}")]
    NonBinaryEntry { row: usize, col: usize, value: u8 },

    #[error("KOutOfRange: k = {k} is outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("BOutOfRange: B = {b} is outside 1..={theta}")]
    BOutOfRange { b: usize, theta: usize },
    #[error("NoReconstructionSet: B = {b} exceeds theta = {theta}")]
    NoReconstructionSet { b: usize, theta: usize },
    #[error("NodeOutOfRange: node {node} is outside 1..={n}")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("FOutOfRange: f = {f} is outside 0..{n}")]
    FOutOfRange { f: usize, n: usize },
    #[error("TooManyNodes: {0} nodes exceed the 64-node enumeration limit")]
    TooManyNodes(usize),

    #[error("Unrepairable: node {node} holds packet {packet} with no other replica")]
    Unrepairable { node: usize, packet: usize },
    #[error("InvalidSurvivingSet: {0}")]
    InvalidSurvivingSet(String),
    #[error("NotReliable: some packet is stored on a single node")]
    NotReliable,
    #[error("NotSymmetric: node capacities or replication factors are not uniform")]
    NotSymmetric,
    #[error("SingleNode: pairwise quantities need at least two nodes")]
    SingleNode,

    #[error("BadAlpha: {0} (alpha must be at least 1)")]
    BadAlpha(usize),
    #[error("BadN: {0} (a cycle needs at least 3 nodes)")]
    BadN(usize),
    #[error("BadFold: m = {0} (m must be at least 1)")]
    BadFold(usize),
    #[error("NotRhoTwo: packet {0} is not stored exactly twice")]
    NotRhoTwo(usize),

    #[error("InvalidSchedule: {0}")]
    InvalidSchedule(String),
    #[error("InvalidField: {field}: {message}")]
    InvalidField { field: &'static str, message: String },
    #[error("ParseError at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}
