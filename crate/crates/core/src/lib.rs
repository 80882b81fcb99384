//! Exact computations with element-order spectra of finite groups.

pub mod atlasdb;
pub mod gf;
pub mod groups;
pub mod linact;
pub mod orderset;
pub mod poly;
pub mod primegraph;
pub mod verify;

pub use atlasdb::{Database, DbError, FilterQuery, GroupRecord};
pub use gf::{FieldElement, FieldError, FiniteField};
pub use groups::GroupError;
pub use linact::{Action, ActionError, ActionGroupElement, LinearAction, Matrix};
pub use orderset::{factorize, Factorization, OrderSet, OrderSetError};
pub use primegraph::{GraphError, PrimeGraph};
