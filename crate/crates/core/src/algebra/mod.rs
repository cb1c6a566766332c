//! Finite-dimensional graded quotients of path algebras and their modules.

mod based;
mod conjectures;
pub mod linalg;
mod module;
mod presentation;
mod resolution;

use thiserror::Error;

pub use based::{BasedAlgebra, BasisElement, DEFAULT_MAX_DEGREE};
pub use conjectures::{
    check_conjectures, solve_dk, ConjectureReport, ConjectureVerdict, DkSolution, Status,
};
pub use module::{bar_m, bar_module, end_algebra, std_quotient, std_submodule, EndAlgebra, FDModule, ModuleMap, Submodule};
pub use presentation::{
    parse_rational, AlgebraPresentation, Arrow, Relation, RelationTerm, DUAL_NUMBERS_JSON, SL2_JSON,
};
pub use resolution::{
    derived_order, ext_series, minimal_resolution, projective_dimension, resolve, ProjResolution,
    VertexOrder, DEFAULT_RESOLUTION_CAP,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("relation {0} mixes paths of different source, target or length")]
    NonHomogeneous(usize),
    #[error("algebra is not finite-dimensional within degree {max_degree}: degree {degree} is nonzero")]
    NotFiniteDimensional { degree: usize, max_degree: usize },
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("projective resolution did not terminate within {cap} steps")]
    ResolutionTruncated { cap: usize },
}
