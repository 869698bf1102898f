//! Finite categories, functors, natural transformations and adjunctions.

pub mod adjunction;
pub mod category;
pub mod embed;
pub mod enumerate;
pub mod fixtures;
pub mod functor;
pub mod natural;

pub use adjunction::{validate_adjunction, AdjunctionReport, CatAdjunction};
pub use category::{validate_category, Arrow, FinCategory, Mor, Obj, StructureError};
pub use embed::{full_sub_2category, CatWorld, FullSub};
pub use enumerate::{are_isomorphic, enumerate_functors, enumerate_nat_trans, small_categories};
pub use functor::{compose_functors, same_category, validate_functor, Functor};
pub use natural::{horizontal, nat_calculus, validate_nat_trans, vertical, whisker_left, whisker_right, NatOp, NatTransformation};
