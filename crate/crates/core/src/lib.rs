//! Finite-group models of connected homotopy 3-types.

pub mod corpus;
pub mod crossed;
pub mod error;
pub mod functors;
pub mod group;
pub mod homotopy;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};
pub use group::{Action, Group, Hom, SemidirectProduct, Subgroup};
pub use report::{Report, Violation};
