//! One function per subcommand. Each fills a [`Report`] from a resolved
//! document; errors bubble up and are classified by the dispatcher.

use std::sync::Arc;

use serde_json::{json, Value};

use super::document::{
    category_doc, components_doc, constraint_doc, document_value, fcategory_doc, functor_maps, serialize_document, two_maps, AdjunctionItem, FillerSpec, Item,
};
use super::report::{Certificate, Report};
use crate::arrowlimits::{
    certify_factorization, check_against_battery, compose_w_spans, enumerate_lifted_structures, factor_loose_morphism, lift_limit_monoidal, limit_of_arrow, represent_2cell,
    SpanFactorization, TwoCellShape,
};
use crate::doctrinal::{certify_lift, enumerate_compatible_structures, lift_adjunction};
use crate::f2cat::{
    build_adj_classifier, check_f_equivalence, is_w_doctrinal, require_limit_data, tight_inclusion, validate_2category, validate_fcategory, validate_ffunctor, validate_w_reflection,
    FCategory, FFunctor, Reflection,
};
use crate::fincat::{validate_adjunction, validate_category, validate_functor, validate_nat_trans, Functor};
use crate::moncat::{validate_monoidal_category, validate_monoidal_functor, WMonoidalFunctor};
use crate::monadfiller::{
    build_talg, construct_filler, em_extension, enumerate_fillers, free_adjunction, monadicity_loop, naturality_loop, validate_2monad, FillerProblem, Fin2Monad, Verdict as MonadicityVerdict,
};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// Settings shared by every subcommand.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub variance: Variance,
    pub cap: Cap,
    pub battery: usize,
}

fn wrong_kind(item: &Item, want: &str) -> Error {
    Error::precondition(format!("expected a {want} document, got {}", item.kind().label()))
}

fn functor_of(item: &Item) -> Result<(Functor, Option<WMonoidalFunctor>)> {
    match item {
        Item::Functor(f) => Ok((f.clone(), None)),
        Item::MonoidalFunctor(f) => Ok((f.functor().clone(), Some(f.clone()))),
        other => Err(wrong_kind(other, "functor or monoidal_functor")),
    }
}

fn monad_of(item: &Item) -> Result<&Fin2Monad> {
    match item {
        Item::TwoMonad(m) => Ok(m),
        other => Err(wrong_kind(other, "two_monad")),
    }
}

pub fn validate(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let kind = item.kind().label();
    match item {
        Item::Category(c) => r.push(Certificate::from_validation("category laws", &validate_category(c))),
        Item::MonoidalCategory(m) => r.push(Certificate::from_validation("monoidal coherence", &validate_monoidal_category(m))),
        Item::Functor(f) => r.push(Certificate::from_validation("functor laws", &validate_functor(f))),
        Item::MonoidalFunctor(f) => r.push(Certificate::from_validation("monoidal functor coherence", &validate_monoidal_functor(f))),
        Item::NatTrans(t) => r.push(Certificate::from_validation("naturality", &validate_nat_trans(t))),
        Item::Adjunction(a) => {
            let rep = validate_adjunction(&a.adjunction);
            r.push(Certificate::from_validation("triangle identities", &rep.validation));
            if let Some(f) = &a.monoidal {
                r.push(Certificate::from_validation("monoidal functor coherence", &validate_monoidal_functor(f)));
            }
            r.data = json!({ "l_reflection": rep.is_l_reflection, "p_reflection": rep.is_p_reflection, "c_reflection": rep.is_c_reflection });
        }
        Item::TwoCategory(c) => r.push(Certificate::from_validation("2-category laws", &validate_2category(c))),
        Item::FCategory(c) => r.push(Certificate::from_validation("F-category laws", &validate_fcategory(c))),
        Item::FFunctor(f) => {
            let rep = validate_ffunctor(f);
            r.push(Certificate::from_validation("F-functor laws", &rep.validation));
            r.data = json!({ "locally_faithful": rep.locally_faithful, "locally_conservative": rep.locally_conservative, "reflects_identity_2cells": rep.reflects_identity_2cells });
        }
        Item::TwoMonad(m) => r.push(Certificate::from_validation("2-monad laws", &validate_2monad(m))),
        Item::FillerProblem(spec) => {
            let p = filler_problem(spec, s.cap)?;
            r.push(Certificate::new("w-doctrinality of H", p.doctrinal.verdict, &p.doctrinal));
            r.data = json!({ "limit_cones": p.limits.len() });
        }
    }
    if r.data.is_null() {
        r.data = json!({ "kind": kind });
    } else if let Value::Object(m) = &mut r.data {
        m.insert("kind".into(), kind.into());
    }
    Ok(())
}

pub fn lift(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let Item::Adjunction(AdjunctionItem { adjunction: adj, monoidal: Some(f) }) = item else {
        return Err(Error::precondition("lift-adjunction needs an adjunction document with a monoidal section"));
    };
    let w = s.variance;
    let lift = lift_adjunction(w, f, adj)?;
    let cert = certify_lift(&lift)?;
    r.push(Certificate::from_validation("lifted functor coherence", &cert.lifted));
    r.push(Certificate::from_validation("unit is monoidal", &cert.unit));
    r.push(Certificate::from_validation("counit is monoidal", &cert.counit));
    r.push(Certificate::flag("lift recovers the adjunction", cert.recovers_adjunction));
    let g = if w == Variance::Colax { &adj.left } else { &adj.right };
    let all = enumerate_compatible_structures(w, g, adj, f, s.cap)?;
    let unique = all.len() == 1 && all[0].constraint_table() == lift.lifted.constraint_table() && all[0].unit_constraint() == lift.lifted.unit_constraint();
    r.push(Certificate::new("uniqueness by enumeration", unique, json!({ "compatible_structures": all.len() })));
    r.data = json!({ "lifted": lift.lifted.name, "variance": w, "constraints": constraint_doc(&lift.lifted) });
    Ok(())
}

pub fn limit(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let (f, monoidal) = functor_of(item)?;
    let lim = limit_of_arrow(s.variance, &f)?;
    r.push(Certificate::from_validation("apex category laws", &validate_category(&lim.apex)));
    r.push(Certificate::from_validation("cone transformation", &validate_nat_trans(&lim.lambda)));
    for u in check_against_battery(&lim, s.battery, s.cap)? {
        r.push(Certificate::new(format!("universal property against {}", u.test_object), u.pass(), &u));
    }
    let mut data = json!({
        "variance": s.variance,
        "apex": category_doc(&lim.apex),
        "p": functor_maps(&lim.p),
        "q": functor_maps(&lim.q),
        "lambda": components_doc(&lim.lambda),
    });
    if let Some(mf) = monoidal {
        let ml = lift_limit_monoidal(s.variance, &mf)?;
        r.push(Certificate::from_validation("monoidal structure on the limit", &ml.certificate));
        let n = enumerate_lifted_structures(&ml, s.cap)?.len();
        r.push(Certificate::new("monoidal lift uniqueness by enumeration", n == 1, json!({ "structures": n })));
        data["monoidal"] = json!(ml.monoidal.name);
    }
    r.data = data;
    Ok(())
}

fn factorization(f: &Functor, w: Variance) -> Result<SpanFactorization> {
    factor_loose_morphism(&limit_of_arrow(w, f)?)
}

pub fn factor(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let (f, _) = functor_of(item)?;
    let fac = factorization(&f, s.variance)?;
    r.push(Certificate::from_validation("span factorization", &certify_factorization(&fac, s.cap)?));
    r.data = json!({ "variance": s.variance, "apex_objects": fac.limit.apex.num_objects(), "r": functor_maps(&fac.r), "eta": components_doc(&fac.eta) });
    Ok(())
}

pub fn span_compose(f_item: &Item, g_item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let (f, _) = functor_of(f_item)?;
    let (g, _) = functor_of(g_item)?;
    let (ff, fg) = (factorization(&f, s.variance)?, factorization(&g, s.variance)?);
    let comp = compose_w_spans(&ff, &fg, s.cap)?;
    r.push(Certificate::from_validation("span composition", &comp.certificate));
    r.data = json!({ "variance": s.variance, "pullback_objects": comp.pullback.apex.num_objects(), "k": functor_maps(&comp.k) });
    Ok(())
}

pub fn represent(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let Item::NatTrans(alpha) = item else { return Err(wrong_kind(item, "nat_trans")) };
    let (ff, fg) = (factorization(alpha.source(), s.variance)?, factorization(alpha.target(), s.variance)?);
    let rep = represent_2cell(s.variance, alpha, &ff, &fg, s.cap)?;
    r.push(Certificate::from_validation("2-cell representation", &rep.certificate));
    r.data = match &rep.shape {
        TwoCellShape::Lax(l) => json!({ "shape": "lax", "c": functor_maps(&l.c), "m": components_doc(&l.m) }),
        TwoCellShape::Pseudo(p) => json!({ "shape": "pseudo", "v": functor_maps(&p.v), "rho": components_doc(&p.rho) }),
    };
    Ok(())
}

/// Source and target of each named cell of a witness, looked up on both sides.
fn cell_table(h: &FFunctor, names: &[String]) -> Value {
    let rows: Vec<Value> = names
        .iter()
        .map(|n| {
            for c in [h.cod().ambient(), h.dom().ambient()] {
                if let Some(f) = c.index1(n) {
                    return json!({ "cell": n, "dim": 1, "category": c.name(), "src": c.obj_name(c.src1(f)), "tgt": c.obj_name(c.tgt1(f)) });
                }
                if let Some(a) = c.index2(n) {
                    return json!({ "cell": n, "dim": 2, "category": c.name(), "src": c.name1(c.src2(a)), "tgt": c.name1(c.tgt2(a)) });
                }
            }
            json!({ "cell": n })
        })
        .collect();
    Value::Array(rows)
}

pub fn doctrinal_check(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let Item::FFunctor(h) = item else { return Err(wrong_kind(item, "f_functor")) };
    let rep = is_w_doctrinal(h, s.variance, true)?;
    let tables: Vec<Value> = rep.w_refl.witnesses.iter().map(|w| json!({ "kind": w.kind, "found": w.found, "reflection": cell_table(h, &w.cells) })).collect();
    r.push(Certificate::new("w-reflection lifting", rep.w_refl.pass, json!({ "checked": rep.w_refl.checked, "witnesses": tables })));
    r.push(Certificate::new("w-morphism lifting", rep.w_morph.pass, &rep.w_morph));
    r.push(Certificate::flag("local faithfulness", rep.locally_faithful));
    r.data = json!({ "variance": s.variance, "doctrinal": rep.verdict, "diagnostics": rep.diagnostics });
    Ok(())
}

pub fn classifier(s: Settings, r: &mut Report) -> Result<()> {
    let k = build_adj_classifier(s.variance)?;
    r.push(Certificate::from_validation("classifier F-category laws", &validate_fcategory(&k.category)));
    let refl = Reflection::new(s.variance, k.f, k.g, k.eta);
    r.push(Certificate::from_validation("generic w-reflection", &validate_w_reflection(&k.category, &refl)?));
    let a = k.category.ambient();
    r.data = json!({ "variance": s.variance, "f": a.name1(k.f), "g": a.name1(k.g), "eta": a.name2(k.eta), "classifier": fcategory_doc(&k.category) });
    Ok(())
}

pub fn talg(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let m = monad_of(item)?;
    let t = build_talg(m, s.variance, s.cap)?;
    r.push(Certificate::from_validation("T-Alg construction", &t.certificate));
    r.push(Certificate::new("U is w-doctrinal", t.doctrinal.verdict, &t.doctrinal));
    let c = m.base().ambient();
    let algebras: Vec<Value> = t.algebras.iter().map(|a| json!([c.obj_name(a.carrier), c.name1(a.action)])).collect();
    r.data = json!({
        "variance": s.variance,
        "algebras": algebras,
        "morphisms": t.morphisms.len(),
        "tight_morphisms": t.strict.ambient().n1(),
        "two_cells": t.cells.len(),
        "limit_cones": t.limits.len(),
    });
    Ok(())
}

fn filler_problem(spec: &FillerSpec, cap: Cap) -> Result<FillerProblem> {
    let limits = require_limit_data(&spec.a, spec.variance, cap)?;
    FillerProblem::new(spec.variance, spec.a.clone(), limits, &spec.r, &spec.s, &spec.h, cap)
}

pub fn filler(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let Item::FillerProblem(spec) = item else { return Err(wrong_kind(item, "filler_problem")) };
    let p = filler_problem(spec, s.cap)?;
    let f = construct_filler(&p, s.cap)?;
    r.push(Certificate::from_validation("filler laws", &f.certificate));
    let all = enumerate_fillers(&p, s.cap)?;
    let same = |k: &FFunctor| k.obj_table() == f.k.obj_table() && k.one_table() == f.k.one_table() && k.two_table() == f.k.two_table();
    r.push(Certificate::new("filler uniqueness by enumeration", all.len() == 1 && same(&all[0]), json!({ "fillers": all.len() })));
    r.data = json!({ "variance": p.variance, "k": two_maps(&f.k) });
    Ok(())
}

pub fn em_extend(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let m = monad_of(item)?;
    let t = build_talg(m, s.variance, s.cap)?;
    let ext = em_extension(&t.fcat, &t.u, &free_adjunction(&t)?, s.variance, s.cap)?;
    r.push(Certificate::from_validation("extension certificate", &ext.certificate));
    let eq = check_f_equivalence(&ext.e_w);
    r.data = json!({ "variance": s.variance, "e_w": two_maps(&ext.e_w), "isomorphism": eq.is_isomorphism, "equivalence": eq.is_equivalence });
    Ok(())
}

pub fn naturality(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let m = monad_of(item)?;
    let (inst, v) = naturality_loop(m, s.variance, s.cap)?;
    r.push(Certificate::from_validation("naturality square", &v));
    r.data = json!({ "variance": s.variance, "inclusion": two_maps(&inst.incl), "e_p": two_maps(&inst.e_p), "e_w": two_maps(&inst.e_w) });
    Ok(())
}

pub fn monadicity(item: &Item, s: Settings, r: &mut Report) -> Result<()> {
    let m = monad_of(item)?;
    let rep = monadicity_loop(&build_talg(m, s.variance, s.cap)?, s.cap)?;
    for c in &rep.conditions {
        r.push(Certificate::new(c.name.clone(), c.pass, &c.detail));
    }
    r.push(Certificate::flag("comparison verdict", rep.verdict != MonadicityVerdict::Fail));
    r.data = json!({ "variance": s.variance, "monadicity": rep.verdict });
    Ok(())
}

/// The op-dual of 1-dimensional kinds and the co-dual of 2-dimensional ones.
pub fn dual(item: &Item) -> Result<Item> {
    Ok(match item {
        Item::Category(c) => Item::Category(Arc::new(c.op())),
        Item::MonoidalCategory(m) => Item::MonoidalCategory(Arc::new(m.op()?)),
        Item::Functor(f) => Item::Functor(f.op()),
        Item::MonoidalFunctor(f) => Item::MonoidalFunctor(f.op()?),
        Item::NatTrans(t) => Item::NatTrans(t.op_between(t.source().op(), t.target().op())),
        Item::Adjunction(a) => Item::Adjunction(AdjunctionItem { adjunction: a.adjunction.op(), monoidal: a.monoidal.as_ref().map(|f| f.op()).transpose()? }),
        Item::TwoCategory(c) => Item::TwoCategory(Arc::new(c.co_dual())),
        Item::FCategory(c) => Item::FCategory(Arc::new(c.co_dual())),
        Item::FFunctor(f) => Item::FFunctor(f.co_dual()),
        Item::TwoMonad(m) => Item::TwoMonad(m.co_dual()),
        Item::FillerProblem(p) => {
            let a: Arc<FCategory> = Arc::new(p.a.co_dual());
            let (a_tau, _) = tight_inclusion(&a);
            let (rr, ss, hh) = (p.r.co_dual(), p.s.co_dual(), p.h.co_dual());
            Item::FillerProblem(FillerSpec { variance: p.variance.dual(), a, a_tau, b: rr.cod().clone(), c: ss.cod().clone(), r: rr, s: ss, h: hh })
        }
    })
}

pub fn dualize(item: &Item, r: &mut Report) -> Result<()> {
    let d = dual(item)?;
    let back = dual(&d)?;
    r.push(Certificate::flag("dualization is an involution", serialize_document(&back) == serialize_document(item)));
    r.data = json!({ "document": document_value(&d) });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::samples::bundled_documents;

    #[test]
    fn dualizing_twice_restores_every_sample() {
        for (name, item) in bundled_documents().unwrap() {
            let back = dual(&dual(&item).unwrap()).unwrap();
            assert_eq!(serialize_document(&back), serialize_document(&item), "{name}");
        }
    }
}
