use thiserror::Error;

/// Errors surfaced by the algebra engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic 2 is not supported: 2 must be invertible in the coefficient field")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("quadratic extension modulus x^2 - t0 requires t0 != 0")]
    ZeroExtensionModulus,
    #[error("quadratic extensions over quadratic extensions are not supported")]
    NestedExtension,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero divisor: {factor} has norm 0 in the split quadratic extension")]
    ZeroDivisor { factor: String },
    #[error("scalar does not belong to the field {0}")]
    ScalarFieldMismatch(String),
    #[error("no image given for variable {0}")]
    MissingImage(String),
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: usize },
    #[error("map is not well defined: image of relation {relation} does not vanish (normal form {remainder})")]
    NotWellDefined { relation: String, remainder: String },
    #[error("map is not an involution: {0}")]
    NotInvolution(String),
    #[error("involutions do not commute on generator {0}")]
    NonCommutingInvolutions(String),
    #[error("{0} is not a theta-eigenvector")]
    NotEigenvector(String),
    #[error("expected alpha^2 = t0, got alpha^2 = {0}")]
    BadSquareRoot(String),
    #[error("t0 must be nonzero; use the t = 0 fiber instead")]
    ZeroFiberPoint,
    #[error("coefficients do not form a field: {0}")]
    NotAField(String),
    #[error("fields do not match: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid Lie data: {0}")]
    InvalidLieData(String),
    #[error("Hopf axiom {axiom} fails on generator {generator}: normal form {remainder}")]
    HopfAxiom {
        axiom: String,
        generator: String,
        remainder: String,
    },
    #[error("involution is not a Hopf involution: {0}")]
    NotHopfInvolution(String),
    #[error("element does not lie in the contraction subalgebra: {0}")]
    NotInSubalgebra(String),
    #[error("derivation action is not compatible with the involutions: {0}")]
    IncompatibleAction(String),
    #[error("unsupported field extension: {0}")]
    UnsupportedExtension(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
