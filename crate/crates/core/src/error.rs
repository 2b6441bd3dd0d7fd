use thiserror::Error;

use crate::alphabet::GroupKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("coxeter matrix is not symmetric: m({a}, {b}) = {ab} but m({b}, {a}) = {ba}")]
    AsymmetricMatrix { a: String, b: String, ab: u32, ba: u32 },

    #[error("diagonal entry m({letter}, {letter}) must be 1, got {value}")]
    DiagonalEntry { letter: String, value: u32 },

    #[error("off-diagonal entry m({a}, {b}) must not be 1")]
    OffDiagonalOne { a: String, b: String },

    #[error("entry m({a}, {b}) = {value} is odd but the group is declared even-coxeter")]
    OddEntry { a: String, b: String, value: u32 },

    #[error("letter `{0}` declared twice")]
    DuplicateLetter(String),

    #[error("invalid letter name `{0}`")]
    InvalidLetterName(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("edge ({0}, {0}) would make the independence relation reflexive")]
    ReflexiveEdge(String),

    #[error("formal inverse `{0}'` is only allowed for graph and fim groups")]
    InverseNotAllowed(String),

    #[error("operation `{op}` is not available for kind {kind}")]
    KindMismatch { op: &'static str, kind: GroupKind },

    #[error("cyclotomic elements live in different rings (m = {left} vs m = {right})")]
    ModulusMismatch { left: usize, right: usize },

    #[error("cyclotomic element for m = {m} needs {expected} coefficients, got {found}")]
    CoefficientCount { m: usize, expected: usize, found: usize },

    #[error("residue {residue} is out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),

    #[error("residue list has {residues} entries for {moduli} moduli")]
    ResidueCount { moduli: usize, residues: usize },

    #[error("rewriting rule is not length-reducing")]
    NotLengthReducing,

    #[error("oracle bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("internal fault: {0}")]
    InternalFault(String),
}
