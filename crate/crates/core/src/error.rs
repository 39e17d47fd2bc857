use thiserror::Error;

/// Errors produced by the algebra, classification and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quiver has no vertices")]
    EmptyQuiver,

    #[error("duplicate {kind} identifier `{name}`")]
    DuplicateIdent { kind: &'static str, name: String },

    #[error("arrow `{arrow}` references undeclared vertex `{vertex}`")]
    UndeclaredVertex { arrow: String, vertex: String },

    #[error("paths are not composable: target `{left_target}` != source `{right_source}`")]
    NotComposable {
        left_target: String,
        right_source: String,
    },

    #[error("relation `{relation}` has length {length}, but length >= 2 is required")]
    RelationTooShort { relation: String, length: usize },

    #[error("algebra is not finite-dimensional: live cycle `{witness}` never meets a relation")]
    NotAdmissible { witness: String },

    #[error("path mentions an arrow unknown to this algebra's quiver")]
    ForeignPath,

    #[error("path `{path}` is zero in the algebra")]
    ZeroPath { path: String },

    #[error("path `{path}` is trivial, a nontrivial path is required")]
    TrivialPath { path: String },

    #[error("operation requires a quadratic monomial algebra (all relations of length 2)")]
    QuadraticRequired,

    #[error("operation requires a Nakayama algebra (quiver must be a basic cycle): {reason}")]
    NotNakayama { reason: String },

    #[error("invalid Kupisch series at index {index}: {reason}")]
    InvalidKupisch { index: usize, reason: String },

    #[error("stable Hom is only defined here for a perfect first argument; `{path}` is not perfect")]
    NotApplicable { path: String },

    #[error("module is projective: L(p) is empty for `{path}`")]
    ProjectivePath { path: String },

    #[error("generator gave up after {attempts} attempts without an admissible presentation")]
    GenerationExhausted { attempts: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
