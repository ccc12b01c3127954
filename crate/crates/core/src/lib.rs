//! Exact enumeration of the mutation class of type D_n, three ways.
//!
//! * [`mutation_class`] runs a breadth-first search over quivers, deduplicated
//!   by the canonical labeling in [`canon`].
//! * [`polygon`] models tagged triangulations of the once-punctured n-gon;
//!   classes under rotation and tag inversion match the mutation class for
//!   `n >= 5`.
//! * [`trees`] counts star trees (cyclic sequences of full binary trees),
//!   which [`correspondence`] puts in bijection with those classes.
//!
//! [`counting`] has the closed forms all three are checked against.

pub mod canon;
pub mod correspondence;
pub mod counting;
pub mod error;
pub mod mutation_class;
pub mod polygon;
pub mod quiver;
pub mod trees;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use correspondence::{lambda, sigma, sigma_with_mutations};
pub use error::{Error, Result};
pub use mutation_class::{mutation_class, mutation_class_with, BfsOptions, MutationClass};
pub use polygon::{Diagonal, Tag, TagStructure, Triangulation};
pub use quiver::Quiver;
pub use trees::{BinaryTree, StarTree, Step, TreeMutation};
