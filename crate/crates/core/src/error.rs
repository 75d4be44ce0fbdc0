use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("genus {0} is outside the supported range 2..=32")]
    InvalidGenus(usize),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("supplied inverse does not certify the automorphism: {0}")]
    NotAutomorphism(String),
    #[error("element is not ± a single monomial")]
    NotMonomial,
    #[error("element is not in the degree-{0} term of the augmentation filtration")]
    NotInFiltration(usize),
    #[error("tensor is not a Lie element")]
    NotLieElement,
    #[error("word is not in the degree-{0} term of the lower central series")]
    NotInGamma(usize),
    #[error("derivation is not symplectic")]
    NotSymplectic,
    #[error("derivation is not in the kernel of the projection to H'")]
    NotInG,
    #[error("the two Lagrangian-trace routes disagree")]
    RouteMismatch,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("Johnson degree too low: need {required}, have {actual}")]
    DegreeTooLow { required: usize, actual: usize },
    #[error("mapping class does not extend to the handlebody")]
    NotInHandlebodyGroup,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
