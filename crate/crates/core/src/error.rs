use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    // field
    #[error("characteristic {0} is not a supported prime")]
    NonPrimeCharacteristic(u64),
    #[error("unsupported extension degree {0}")]
    UnsupportedDegree(usize),
    #[error("reducible or malformed modulus: {0}")]
    ReducibleModulus(String),
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),
    #[error("GF(p^{from}) is not a subfield of GF(p^{to})")]
    NotASubfield { from: usize, to: usize },

    // linear algebra
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,

    // algebra
    #[error("elements belong to different algebras: {0}")]
    AlgebraMismatch(String),
    #[error("module axiom violated: {0}")]
    ModuleAxiomViolation(String),
    #[error("Hopf algebra axioms fail: {0}")]
    AxiomsFail(String),
    #[error("no antipode solves the antipode equations")]
    NoAntipode,

    // integrals
    #[error("space of integrals is zero-dimensional; input is not a Hopf algebra")]
    NoIntegral,
    #[error("space of integrals has dimension {0} > 1; input data is corrupt")]
    IntegralSpaceTooBig(usize),
    #[error("left and right integrals differ; non-unimodular algebras are unsupported")]
    NotUnimodular,
    #[error("lambda(Lambda) = 0; the Frobenius pairing is degenerate")]
    DegeneratePairing,
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
    #[error("characteristic {p} does not satisfy p^2 > dim = {dim}")]
    PreconditionPSquare { p: u64, dim: usize },
    #[error("the element u = S(L2)L1 is not invertible")]
    SingularU,
    #[error("distinguished group-like check failed: {0}")]
    NotGrouplike(String),
    #[error("identity violated: {name}: {witness}")]
    IdentityViolation { name: String, witness: String },
    #[error("cocommutativity equivalence violated: {0}")]
    EquivalenceViolation(String),

    // wedderburn
    #[error("field too small to split the center; needs an extension of degree {degree}")]
    FieldTooSmall { degree: usize },
    #[error("block rank {0} is not a perfect square")]
    NonSquareBlock(usize),
    #[error("block dimension {0} is zero in the field")]
    DimensionNotInvertible(usize),
    #[error("Schur elements are inconsistent: {0}")]
    InconsistentSchur(String),
    #[error("center did not split after {0} rounds")]
    SplittingFailed(usize),

    // indicators
    #[error("tensor power needs {needed} coordinates, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("not a module: {0}")]
    NotAModule(String),

    // twists
    #[error("twist is not invertible")]
    NotInvertible,
    #[error("twist normalization fails: {0}")]
    NormalizationFails(String),
    #[error("twist cocycle identity fails at {0}")]
    CocycleFails(String),

    // builders / io
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("characteristic {p} divides the group order {order}")]
    CharacteristicDividesOrder { p: u64, order: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn identity(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::IdentityViolation {
            name: name.into(),
            witness: witness.into(),
        }
    }
}
