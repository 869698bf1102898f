//! Sample documents shipped under `crates/core/fixtures/` and the command
//! lines that exercise them.

use std::sync::Arc;

use super::document::{AdjunctionItem, FillerSpec, Item};
use crate::fincat::fixtures::{chain, cyclic, galois_between, monotone, terminal};
use crate::fincat::{enumerate_nat_trans, CatAdjunction, Functor, NatTransformation};
use crate::moncat::fixtures::{join_chain, poset_monoidal_functor, sigma, sigma_functor};
use crate::monadfiller::fixtures::{arrow_reflection, closure_chain, filler_fixtures};
use crate::monadfiller::{build_talg, Fin2Monad};
use crate::f2cat::fixtures::arrow_2cat;
use crate::f2cat::FCategory;
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// `(file name, document)` pairs.
pub fn bundled_documents() -> Result<Vec<(&'static str, Item)>> {
    let mut out = vec![("terminal.json", Item::Category(Arc::new(terminal())))];
    let j3 = Arc::new(join_chain(3));
    let j2 = Arc::new(join_chain(2));
    out.push(("join-chain-3.json", Item::MonoidalCategory(j3.clone())));

    let adj = galois_between(j3.base(), j2.base(), &[0, 0, 1])?;
    let f = poset_monoidal_functor("F", Variance::Strict, &j3, &j2, &[0, 0, 1])?;
    out.push(("galois-3-2.json", Item::Adjunction(AdjunctionItem { adjunction: adj, monoidal: Some(f.clone()) })));
    out.push(("galois-left-monoidal.json", Item::MonoidalFunctor(f)));

    let z = Arc::new(sigma(&cyclic(3))?);
    let fz = sigma_functor("F", Variance::Strict, &z, &z, &[0, 1, 2], 0, 0)?;
    let id = fz.functor().clone();
    let unit = NatTransformation::new("eta", id.clone(), id.clone(), vec![1])?;
    let counit = NatTransformation::new("eps", id.clone(), id.clone(), vec![2])?;
    let twisted = CatAdjunction { left: id.clone(), right: id, unit, counit };
    out.push(("twisted-equivalence.json", Item::Adjunction(AdjunctionItem { adjunction: twisted, monoidal: Some(fz) })));

    let (c2, c3) = (Arc::new(chain(2)), Arc::new(chain(3)));
    let f23 = monotone(&c2, &c3, &[0, 2])?;
    let g32 = monotone(&c3, &c2, &[0, 0, 1])?.named("G");
    out.push(("monotone-2-3.json", Item::Functor(f23.clone())));
    out.push(("monotone-3-2.json", Item::Functor(g32)));
    let low: Functor = monotone(&c2, &c3, &[0, 0])?.named("L");
    let alpha = enumerate_nat_trans(&low, &f23, Cap::default())?
        .into_iter()
        .find(|a| a.components().iter().any(|&m| !c3.is_iso(m)))
        .ok_or_else(|| Error::consistency("no non-invertible 2-cell between the sample maps"))?
        .named("alpha");
    out.push(("alpha-2-3.json", Item::NatTrans(alpha)));

    let cc = closure_chain()?;
    out.push(("closure-chain.json", Item::TwoMonad(cc.clone())));
    out.push(("arrow-reflection.json", Item::TwoMonad(arrow_reflection()?)));
    out.push(("identity-arrow.json", Item::TwoMonad(Fin2Monad::identity(Arc::new(FCategory::all_tight(arrow_2cat())))?)));
    let t = build_talg(&cc, Variance::Lax, Cap::default())?;
    out.push(("talg-forgetful.json", Item::FFunctor(t.u.clone())));
    let (_, p) = filler_fixtures(Cap::default())?.into_iter().find(|(_, p)| p.variance == Variance::Pseudo).ok_or_else(|| Error::consistency("no pseudo filler fixture"))?;
    out.push(("filler-iso-pair.json", Item::FillerProblem(FillerSpec::from_problem(&p))));
    Ok(out)
}

/// Command lines over the bundled documents; `{name}` stands for the path of
/// the document `name`.
pub fn sample_invocations() -> Vec<Vec<&'static str>> {
    vec![
        vec!["validate", "{terminal.json}"],
        vec!["validate", "{join-chain-3.json}"],
        vec!["validate", "{filler-iso-pair.json}"],
        vec!["lift-adjunction", "--variance", "l", "{galois-3-2.json}"],
        vec!["lift-adjunction", "--variance", "c", "{twisted-equivalence.json}"],
        vec!["limit", "--variance", "l", "{monotone-2-3.json}"],
        vec!["limit", "--variance", "l", "{galois-left-monoidal.json}"],
        vec!["factor", "--variance", "p", "{monotone-2-3.json}"],
        vec!["span-compose", "--variance", "l", "{monotone-2-3.json}", "{monotone-3-2.json}"],
        vec!["represent-2cell", "--variance", "p", "{alpha-2-3.json}"],
        vec!["doctrinal-check", "--variance", "l", "{talg-forgetful.json}"],
        vec!["classifier", "--variance", "l"],
        vec!["build-talg", "--variance", "l", "{closure-chain.json}"],
        vec!["filler", "{filler-iso-pair.json}"],
        vec!["em-extend", "--variance", "l", "{arrow-reflection.json}"],
        vec!["naturality", "--variance", "c", "{closure-chain.json}"],
        vec!["monadicity", "--variance", "l", "{identity-arrow.json}"],
        vec!["dualize", "{closure-chain.json}"],
    ]
}
