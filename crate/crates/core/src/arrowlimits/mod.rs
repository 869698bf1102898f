//! Limits of arrows in finite `Cat` and the span calculus built on them.

pub mod comma;
pub mod universal;

pub use comma::{limit_of_arrow, ArrowLimit, CommaObj};
pub use universal::{check_against_battery, check_arrow_limit_universal, test_battery, UniversalReport};
pub mod span;
pub use span::{certify_factorization, compose_w_spans, factor_loose_morphism, pullback, tight_pullback_along_projection, Pullback, PullbackSquare, SpanComposite, SpanFactorization};
pub mod twocell;
pub use twocell::{represent_2cell, LaxRep, PseudoRep, TwoCellRep, TwoCellShape};
pub mod monoidal;
pub use monoidal::{enumerate_lifted_structures, lift_limit_monoidal, monoidal_factorization, MonoidalLimit};
