//! Finite 2-categories and F-categories.
//!
//! [`twocat`] holds table-presented strict 2-categories, [`fcat`] adds the
//! tight/loose marking together with F-functors, and [`calculus`] is the
//! reflection and mate calculus written once against the [`TwoCells`]
//! interface. The remaining modules build on these: the free reflection
//! [`classifier`], F-functor [`enumerate`]ion, [`doctrinality`] checking and
//! [`limits`] of loose morphisms.

pub mod calculus;
pub mod classifier;
pub mod doctrinality;
pub mod enumerate;
pub mod fcat;
pub mod fixtures;
pub mod limits;
pub mod twocat;

pub use calculus::{adjunctions_on, is_reflection_morphism, mate_of_square, reflections_on, unmate, validate_w_reflection, Adjunction, Co, Reflection, ReflectionMorphism, TwoCells};
pub use classifier::{build_adj_classifier, AdjClassifier};
pub use doctrinality::{is_w_doctrinal, orthogonal_to_classifier, DoctrinalReport, OrthogonalityReport};
pub use enumerate::{enumerate_ffunctors, FunctorQuery, Pins};
pub use fcat::{check_f_equivalence, compose_ffunctors, tight_inclusion, validate_fcategory, validate_ffunctor, EquivalenceReport, FCategory, FFunctor, FFunctorReport};
pub use limits::{check_limit_datum, find_limit_data, require_limit_data, validate_loose_limit_data, LimitDatum};
pub use twocat::{validate_2category, Cell1, Cell2, Fin2Category, TwoRules, TwoTables};
