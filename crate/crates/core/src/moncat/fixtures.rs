//! Standard monoidal categories and monoidal functors for tests and demos.

use std::sync::Arc;

use super::category::MonoidalCategory;
use super::functor::WMonoidalFunctor;
use crate::fincat::fixtures::{chain, monotone};
use crate::fincat::{FinCategory, Functor, Mor, Obj};
use crate::variance::Variance;
use crate::{Error, Result};

fn poset_tensor(name: String, c: FinCategory, op: fn(Obj, Obj) -> Obj, unit: Obj) -> MonoidalCategory {
    let base = Arc::new(c);
    let b = base.clone();
    let tmor = move |f: Mor, g: Mor| b.hom(op(b.src(f), b.src(g)), op(b.tgt(f), b.tgt(g)))[0];
    MonoidalCategory::strict(name, base, op, tmor, unit).expect("poset tensor tables are well-formed")
}

/// `[n]` with `⊗ = max` and unit the bottom.
pub fn join_chain(n: usize) -> MonoidalCategory {
    poset_tensor(format!("([{n}],max,0)"), chain(n), |a, b| a.max(b), 0)
}

/// `[n]` with `⊗ = min` and unit the top.
pub fn meet_chain(n: usize) -> MonoidalCategory {
    poset_tensor(format!("([{n}],min,{})", n.saturating_sub(1)), chain(n), |a, b| a.min(b), n.saturating_sub(1))
}

/// The one-object monoidal category of a commutative monoid, with tensor
/// given by multiplication and identity constraints.
pub fn sigma(m: &FinCategory) -> Result<MonoidalCategory> {
    if m.num_objects() != 1 {
        return Err(Error::precondition(format!("{} has {} objects; a monoid has one", m.name(), m.num_objects())));
    }
    let n = m.num_morphisms();
    for a in 0..n {
        for b in 0..n {
            if m.comp(a, b) != m.comp(b, a) {
                return Err(Error::precondition(format!("{} is not commutative at ({}, {})", m.name(), m.mor_name(a), m.mor_name(b))));
            }
        }
    }
    let base = Arc::new(m.clone());
    let b = base.clone();
    Ok(MonoidalCategory::strict(format!("Σ{}", m.name()), base, |_, _| 0, move |f, g| b.comp(f, g), 0)?)
}

/// A monotone map between poset monoidal categories with the unique
/// comparison constraints in the direction dictated by `w`.
pub fn poset_monoidal_functor(name: &str, w: Variance, dom: &Arc<MonoidalCategory>, cod: &Arc<MonoidalCategory>, values: &[usize]) -> Result<WMonoidalFunctor> {
    let f = monotone(dom.base(), cod.base(), values)?.named(name);
    let cb = cod.base();
    let pick = |s: Obj, t: Obj| -> Result<Mor> {
        let (s, t) = if w == Variance::Colax { (t, s) } else { (s, t) };
        cb.hom(s, t).first().copied().ok_or_else(|| Error::precondition(format!("`{name}` admits no {w} comparison {} → {}", cb.obj_name(s), cb.obj_name(t))))
    };
    let k = dom.base().num_objects();
    let table = (0..k * k).map(|i| pick(cod.t0(f.ob(i / k), f.ob(i % k)), f.ob(dom.t0(i / k, i % k)))).collect::<Result<Vec<_>>>()?;
    let unit = pick(cod.unit(), f.ob(dom.unit()))?;
    WMonoidalFunctor::new(name, w, dom.clone(), cod.clone(), f, table, unit)
}

/// A monoidal functor between one-object monoidal categories: `values` maps
/// elements, `f_ab` and `f0` are the constraint elements.
pub fn sigma_functor(name: &str, w: Variance, dom: &Arc<MonoidalCategory>, cod: &Arc<MonoidalCategory>, values: &[usize], f_ab: Mor, f0: Mor) -> Result<WMonoidalFunctor> {
    let f = Functor::new(name, dom.base().clone(), cod.base().clone(), vec![0], values.to_vec())?;
    WMonoidalFunctor::new(name, w, dom.clone(), cod.clone(), f, vec![f_ab], f0)
}
