//! 2-monads on finite 2-categories and their algebras, the orthogonality
//! filler, Eilenberg–Moore extensions and monadicity checks.

pub mod em;
pub mod filler;
pub mod fixtures;
pub mod monad;
pub mod talg;

pub use monad::{compose_w_morphisms, enumerate_algebras, enumerate_w_morphisms, morphism_violations, validate_2monad, validate_algebra_2cell, Fin2Monad, TAlgebra, WAlgebraMorphism};
pub use talg::{build_talg, AlgebraCell, TAlg};
pub use filler::{construct_filler, enumerate_fillers, Filler, FillerProblem, LiftedReflection};
pub use em::{check_monadicity, check_naturality, comparison, em_extension, free_adjunction, induced_monad, monadicity_loop, naturality_loop, talg_inclusion, validate_adjoint_data, AdjointData, Condition, EmExtension, MonadicityReport, NaturalityInstance, Verdict};
