//! Bound quivers for n-complete algebras and McKay quivers.
//!
//! The crate builds McKay quivers of finite groups from exact character
//! tables, adds returning arrows and cyclic coverings, applies the cone
//! construction to bound quivers with a higher Auslander-Reiten translation,
//! and checks mechanically that a cone quiver is a truncation of the bound
//! McKay quiver of an extended group.
//!
//! Modules, bottom-up:
//!
//! - [`quiver`]: multigraph quivers, paths, relation combinations.
//! - [`cyclotomic`]: exact arithmetic in `Q(ζ_N)`.
//! - [`character`]: character tables, tensor decomposition, group constructors.
//! - [`mckay`]: McKay quivers and the bound McKay quivers of abelian groups.
//! - [`path_algebra`]: graded dimensions of `kQ/(ρ)`, quadratic duality,
//!   stable translation quiver axioms.
//! - [`constructions`]: returning arrows, twisted trivial extensions, cyclic
//!   covers and the cone.
//! - [`truncation`]: quiver embeddings, truncation checks and the end-to-end
//!   cone-into-McKay pipeline.
//! - [`io`]: the JSON interchange documents.

pub mod character;
pub mod constructions;
pub mod cyclotomic;
pub mod io;
pub mod linalg;
pub mod mckay;
pub mod path_algebra;
pub mod quiver;
pub mod rational;
pub mod truncation;

pub use character::{CharacterTable, RepCharacter};
pub use cyclotomic::CyclotomicNumber;
pub use mckay::{AbelianBoundMcKay, AbelianMcKaySpec};
pub use path_algebra::GradedDims;
pub use quiver::{
    Arrow, ArrowId, ArrowLabel, BoundQuiver, Path, PathCombo, Quiver, QuiverIsoWitness, Vertex,
    VertexId, VertexLabel,
};
pub use rational::Rational;
pub use truncation::{QuiverEmbedding, TruncationReport};
