//! Exact linear algebra for the maps `T_p` and for matrix representations
//! with operator entries.

pub mod delta;
pub mod intertwiner;
pub mod opmatrix;
pub mod relations;
pub mod rep;

pub use delta::{gram_matrix, verify_functoriality, DeltaTensor, FunctorialityReport};
pub use intertwiner::{intertwiner_check, DEFAULT_SIZE_BUDGET};
pub use opmatrix::{fraction, OpMatrix};
pub use relations::{check_primed, check_relations, PrimedReport, Relation, RelationReport, Violation};
pub use rep::{build_sigma_infty, build_sigma_k, signed_permutation, MatrixRep, RepDocument, SigmaParts};
