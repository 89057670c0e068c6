use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} does not divide 24")]
    BadRootOrder(u32),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{name}` at byte {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("eigenvalue outside Q(zeta24)")]
    EigenvalueOutsideField,
    #[error("step budget of {0} exhausted")]
    BudgetExhausted(usize),
    #[error("identical lines")]
    IdenticalLines,
    #[error("line not on surface: {0}")]
    NotOnSurface(String),
    #[error("matrix is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("incidence graph is not the Schlafli graph")]
    NotSchlafli,
    #[error("anchoring failed: {0}")]
    Anchor(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("cocycle identity fails at ({0}, {1})")]
    CocycleViolation(usize, usize),
    #[error("oracle size bound exceeded: {0} maps")]
    OracleTooLarge(u128),
}

pub type Result<T> = std::result::Result<T, Error>;
