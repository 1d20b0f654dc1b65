use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the kernel can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("term `{0}` is not numerical")]
    NonNumericalTerm(String),
    #[error("prime formula `{0}` is not constant")]
    NotConstant(String),
    #[error("formula `{0}` is not prime")]
    NotPrime(String),
    #[error("unknown function symbol `{0}`")]
    UnknownFunction(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("`{name}` expects {expected} arguments, got {got}")]
    Arity { name: String, expected: usize, got: usize },
    #[error("built-in symbol `{0}` cannot be redefined")]
    Shadowing(String),
    #[error("arithmetic overflow while evaluating `{0}`")]
    Overflow(String),
    #[error("substituting for `{var}` would capture `{captured}`")]
    CaptureViolation { var: String, captured: String },
    #[error("invalid part {0}")]
    InvalidPart(String),
    #[error("parts {0} and {1} overlap")]
    OverlappingParts(String, String),
    #[error("rule {rule} does not apply at {part}: {msg}")]
    WrongShape { rule: String, part: String, msg: String },
    #[error("rule {rule} is not admitted in {system}")]
    WrongSystem { rule: String, system: String },
    #[error("eigenvariable `{0}` occurs free in the sequent")]
    EigenNotFresh(String),
    #[error("rule {0} needs an argument")]
    MissingArgument(String),
    #[error("part {0} is not invertible")]
    NotInvertible(String),
    #[error("formulas `{0}` and `{1}` are not equivalent")]
    NotEquivalent(String, String),
    #[error("axiom 8 oracle could not decide `{0}`")]
    Axiom8Unknown(String),
    #[error("formula does not match schema {schema}: {msg}")]
    SchemaMismatch { schema: String, msg: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("no constructive transformation exists here: {0}")]
    NotConstructive(String),
    #[error("neither disjunct could be extracted: {0}")]
    NoDisjunct(String),
    #[error("side condition failed: {0}")]
    SideConditionFailed(String),
    #[error("not a PCN proof: {0}")]
    NotPcn(String),
    #[error("cut parts do not match: {0}")]
    PartMismatch(String),
    #[error("termination measure did not decrease: {0}")]
    MeasureViolation(String),
    #[error("proof rejected at node {node}: {reason}")]
    Rejected { node: String, reason: String },
    #[error("replay failed: {0}")]
    Replay(String),
    #[error("malformed proof file: {0}")]
    Format(String),
}
