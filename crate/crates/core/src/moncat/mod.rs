//! Monoidal categories and monoidal functors of every variance, with
//! exhaustive coherence checking and the lax/colax op-duality.

pub mod category;
pub mod fixtures;
pub mod functor;
pub mod transformation;

pub use category::{corruptions, validate_monoidal_category, MonTable, MonoidalCategory};
pub use functor::{compose_monoidal_functors, enumerate_monoidal_structures, same_monoidal, validate_monoidal_functor, WMonoidalFunctor};
pub use transformation::{validate_monoidal_transformation, MonoidalTransformation};

use crate::Result;

/// Anything with a lax/colax opposite.
pub trait OpDual: Sized {
    fn op_dualize(&self) -> Result<Self>;
}

impl OpDual for MonoidalCategory {
    fn op_dualize(&self) -> Result<Self> {
        self.op()
    }
}

impl OpDual for WMonoidalFunctor {
    fn op_dualize(&self) -> Result<Self> {
        self.op()
    }
}

impl OpDual for MonoidalTransformation {
    fn op_dualize(&self) -> Result<Self> {
        self.op()
    }
}

/// `op_dualize` as a free function.
pub fn op_dualize<T: OpDual>(x: &T) -> Result<T> {
    x.op_dualize()
}
