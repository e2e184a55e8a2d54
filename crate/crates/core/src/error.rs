use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid bit character {ch:?} at position {position}")]
    InvalidBit { ch: char, position: usize },

    #[error("dimension {dim} exceeds the enumeration cap of {cap} information bits")]
    TooLarge { dim: usize, cap: usize },

    #[error("code is not self-orthogonal")]
    NotSelfOrthogonal,

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("code is not semi self-dual")]
    NotSemiSelfDual,

    #[error(
        "code is doubly-even, so its shadow is empty; take a self-dual F with F_0 = D \
         and use the self-dual shadow of F instead"
    )]
    DoublyEven,

    #[error("code does not contain the all-ones vector")]
    MissingAllOnes,

    #[error("vector is already a codeword")]
    AlreadyInCode,

    #[error("vector has odd weight {0}")]
    OddWeight(usize),

    #[error("code has no admissible neighbor (every even-weight vector is a codeword)")]
    NoNeighbor,

    #[error("codimension {0} in the dual does not allow a semi self-dual extension")]
    BadCodimension(usize),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("permutation is not an involution: coordinate {coordinate} maps to {image}, which does not map back")]
    NotInvolution { coordinate: usize, image: usize },

    #[error("involution has fixed points (first fixed coordinate {0})")]
    HasFixedPoints(usize),

    #[error("involution does not stabilize the code")]
    NotStabilizing,

    #[error("generator row {row} is not constant on the pair ({a}, {b})")]
    NotPairConstant { row: usize, a: usize, b: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("no quadratic-residue code for q = {q}: {reason}")]
    BadResidueCondition { q: u64, reason: &'static str },

    #[error("odd length {0}")]
    OddLength(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polynomial is not in the invariant module (nonzero residual at y^{degree})")]
    NotInInvariantModule { degree: usize },

    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("binom(5*{mu}-1, {mu}-1) is odd, so the integrality certificate already refutes d = {d}; use prove_bound")]
    ParityOdd { mu: u64, d: usize },

    #[error("search space of {0} tuples is too large")]
    SearchTooLarge(u128),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
