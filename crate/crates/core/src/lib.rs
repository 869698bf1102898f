//! Finite-scale machinery for 2-dimensional monadicity.
//!
//! The crate works with table-presented finite structures throughout:
//!
//! * [`fincat`]: finite categories, functors, natural transformations and
//!   adjunctions, plus brute-force enumeration of functor and transformation
//!   sets.
//! * [`moncat`]: monoidal categories and strict, strong, lax and colax
//!   monoidal functors with full coherence checking.
//! * [`doctrinal`]: lifting adjunctions to monoidal adjunctions through mates.
//! * [`arrowlimits`]: comma-style limits of arrows in finite `Cat`, their span
//!   calculus and 2-cell representations.
//! * [`f2cat`]: finite 2-categories and F-categories, reflections, mates,
//!   doctrinality checking and the adjunction classifier.
//! * [`monadfiller`]: finite 2-monads, their algebras, orthogonality fillers
//!   and Eilenberg–Moore extensions.
//! * [`cli`]: JSON documents, reports and the command dispatcher behind the
//!   `fcat` binary.

pub mod arrowlimits;
pub mod check;
pub mod cli;
pub mod doctrinal;
pub mod error;
pub mod f2cat;
pub mod fincat;
pub mod moncat;
pub mod monadfiller;
pub mod search;
pub mod variance;

pub use check::{Validation, Violation};
pub use error::{Error, Result};
pub use search::{Cap, CapExceeded};
pub use variance::Variance;
