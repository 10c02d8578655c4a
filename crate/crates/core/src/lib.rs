//! Exact-arithmetic algebra of crossed modules, categorical algebras and
//! their braidings, for associative and Lie algebras over ℚ and 𝔽_p.
//!
//! Every axiom is checked on basis tuples and reported with a witness; see
//! [`report::ValidationReport`]. The textual front end lives in [`frontend`].

pub mod action;
pub mod algebra;
pub mod braid;
pub mod catalog;
pub mod error;
pub mod field;
pub mod frontend;
pub mod groupx;
pub mod icat;
pub mod linspace;
pub mod natensor;
pub mod report;
pub mod xmod;

pub use algebra::{Algebra, Flavor};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linspace::{BilMap, LinMap, Space, Vector};
pub use report::{Axiom, Status, ValidationReport, Witness};
