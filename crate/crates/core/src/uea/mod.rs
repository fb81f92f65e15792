//! The rank-2 symplectic Lie algebra from its concrete 4x4 matrices, PBW
//! normal ordering in the universal enveloping algebra, scalar K-type
//! evaluation and the Harish-Chandra projection.

mod basis;
mod casimir;
mod element;

pub use basis::{
    basis_matrix, bracket, jacobi_holds_for_all_triples, structure_table_text, LieTag, Ordering,
    ALL_TAGS,
};
pub use casimir::{
    build_casimir, hc_image, resolve_conventions, verify_scalar_restriction, CasimirKind,
    HcConventions, RestrictionOutcome, UeaConventions,
};
pub use element::UEAElement;
