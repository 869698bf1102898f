//! The monoidal structure inherited by the limit of a monoidal functor.
//!
//! For a lax `F` the comma `B/F` carries
//! `(x,α,a)⊗(y,β,b) = (x⊗y, f_{a,b}∘(α⊗β), a⊗b)` with unit `(i, f_0, i)`
//! and constraints taken componentwise. A colax `F` gives the mirror image
//! on `F/B`, with `(α⊗β)∘f_{a,b}` and `f_0: Fi → i`. Each lift is a table
//! lookup; a missing entry is exactly a failed coherence condition of `F`.

use std::sync::Arc;

use super::comma::{ArrowLimit, CommaObj};
use super::limit_of_arrow;
use super::span::SpanFactorization;
use crate::check::Validation;
use crate::fincat::{Functor, Mor, Obj};
use crate::moncat::{compose_monoidal_functors, validate_monoidal_category, validate_monoidal_functor, validate_monoidal_transformation, MonoidalCategory, MonoidalTransformation, WMonoidalFunctor};
use crate::search::{for_each_tuple, Cap};
use crate::variance::Variance;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct MonoidalLimit {
    pub limit: ArrowLimit,
    pub f: WMonoidalFunctor,
    pub monoidal: Arc<MonoidalCategory>,
    pub p: WMonoidalFunctor,
    pub q: WMonoidalFunctor,
    pub lambda: MonoidalTransformation,
    pub certificate: Validation,
}

fn accepts(w: Variance, fv: Variance) -> bool {
    match w {
        Variance::Lax | Variance::Colax => fv.join(w) == Some(w),
        Variance::Pseudo => matches!(fv, Variance::Strict | Variance::Pseudo),
        Variance::Strict => false,
    }
}

/// Structure maps of `F` in the direction matching the limit's orientation.
struct Constraints<'a> {
    f: &'a WMonoidalFunctor,
    colax: bool,
}

impl Constraints<'_> {
    fn at(&self, a: Obj, b: Obj) -> Result<Mor> {
        if self.colax { self.f.colax_at(a, b) } else { self.f.lax_at(a, b) }
    }

    fn unit(&self) -> Result<Mor> {
        if self.colax { self.f.colax_unit() } else { self.f.lax_unit() }
    }
}

fn tensor_obj(lim: &ArrowLimit, fc: &Constraints, x: CommaObj, y: CommaObj) -> Result<CommaObj> {
    let (am, bm) = (fc.f.dom(), fc.f.cod());
    let b = bm.base();
    let ab = bm.t1(x.alpha, y.alpha);
    let f = fc.at(x.a, y.a)?;
    let alpha = if lim.is_reversed() { b.comp(ab, f) } else { b.comp(f, ab) };
    Ok(CommaObj { x: bm.t0(x.x, y.x), alpha, a: am.t0(x.a, y.a) })
}

/// Builds the lifted monoidal structure, reporting every failed lookup.
fn lifted_tables(lim: &ArrowLimit, f: &WMonoidalFunctor) -> Result<MonoidalCategory> {
    let fc = Constraints { f, colax: lim.is_reversed() };
    let (am, bm) = (f.dom(), f.cod());
    let apex = &lim.apex;
    let (k, n) = (apex.num_objects(), apex.num_morphisms());
    let mut v = Validation::new(format!("monoidal lift to {}", apex.name()));
    let name = |o: Obj| apex.obj_name(o).to_string();

    let mut t0 = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            let z = tensor_obj(lim, &fc, lim.comma_obj(i), lim.comma_obj(j))?;
            match lim.find_obj(z) {
                Some(o) => t0[i * k + j] = o,
                None => v.fail("tensor-lift", [name(i), name(j)]),
            }
        }
    }
    let unit_obj = CommaObj { x: bm.unit(), alpha: fc.unit()?, a: am.unit() };
    let unit = lim.find_obj(unit_obj);
    if unit.is_none() {
        v.fail("unit-lift", [format!("{unit_obj:?}")]);
    }
    if !v.is_ok() {
        return Err(Error::Invalid(v));
    }
    let unit = unit.unwrap_or_default();

    let mut t1 = vec![0; n * n];
    for g in 0..n {
        for h in 0..n {
            let ((ug, vg), (uh, vh)) = (lim.comma_mor(g), lim.comma_mor(h));
            let (s, t) = (t0[apex.src(g) * k + apex.src(h)], t0[apex.tgt(g) * k + apex.tgt(h)]);
            match lim.find_mor(s, t, bm.t1(ug, uh), am.t1(vg, vh)) {
                Some(m) => t1[g * n + h] = m,
                None => v.fail("tensor-lift", [apex.mor_name(g).to_string(), apex.mor_name(h).to_string()]),
            }
        }
    }
    let ob = |o: Obj| lim.comma_obj(o);
    let mut assoc = vec![0; k * k * k];
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let (s, t) = (t0[t0[x * k + y] * k + z], t0[x * k + t0[y * k + z]]);
                match lim.find_mor(s, t, bm.assoc(ob(x).x, ob(y).x, ob(z).x), am.assoc(ob(x).a, ob(y).a, ob(z).a)) {
                    Some(m) => assoc[(x * k + y) * k + z] = m,
                    None => v.fail("associator-lift", [name(x), name(y), name(z)]),
                }
            }
        }
    }
    let mut lunit = vec![0; k];
    let mut runit = vec![0; k];
    for x in 0..k {
        match lim.find_mor(t0[unit * k + x], x, bm.lunit(ob(x).x), am.lunit(ob(x).a)) {
            Some(m) => lunit[x] = m,
            None => v.fail("left-unitor-lift", [name(x)]),
        }
        match lim.find_mor(t0[x * k + unit], x, bm.runit(ob(x).x), am.runit(ob(x).a)) {
            Some(m) => runit[x] = m,
            None => v.fail("right-unitor-lift", [name(x)]),
        }
    }
    if !v.is_ok() {
        return Err(Error::Invalid(v));
    }
    Ok(MonoidalCategory::new(apex.name(), apex.clone(), t0, t1, unit, assoc, lunit, runit)?)
}

fn strict_projection(name: &str, m: &Arc<MonoidalCategory>, target: &Arc<MonoidalCategory>, p: &Functor) -> Result<WMonoidalFunctor> {
    let tb = target.base();
    let k = m.base().num_objects();
    let table = (0..k * k).map(|i| tb.id(p.ob(m.t0(i / k, i % k)))).collect();
    WMonoidalFunctor::new(name, Variance::Strict, m.clone(), target.clone(), p.clone(), table, tb.id(p.ob(m.unit())))
}

/// Lifts the monoidal structure of `F` to its `w̄`-limit and certifies that
/// the projections are strict and the cone is monoidal.
pub fn lift_limit_monoidal(w: Variance, f: &WMonoidalFunctor) -> Result<MonoidalLimit> {
    if !accepts(w, f.variance) {
        return Err(Error::precondition(format!("a {} monoidal functor has no monoidal {w}-limit lift", f.variance)));
    }
    let fv = validate_monoidal_functor(f);
    if !fv.is_ok() {
        return Err(Error::Invalid(fv));
    }
    let limit = limit_of_arrow(w, f.functor())?;
    let monoidal = Arc::new(lifted_tables(&limit, f)?);
    let p = strict_projection("p", &monoidal, f.dom(), &limit.p)?;
    let q = strict_projection("q", &monoidal, f.cod(), &limit.q)?;
    let fp = compose_monoidal_functors(f, &p)?;
    let comps = limit.lambda.components().to_vec();
    let lambda = if limit.is_reversed() { MonoidalTransformation::new("lambda", fp, q.clone(), comps)? } else { MonoidalTransformation::new("lambda", q.clone(), fp, comps)? };
    let mut certificate = Validation::new(format!("monoidal {w}-limit of {}", f.name));
    certificate.absorb("apex: ", validate_monoidal_category(&monoidal));
    certificate.absorb("p: ", validate_monoidal_functor(&p));
    certificate.absorb("q: ", validate_monoidal_functor(&q));
    certificate.absorb("lambda: ", validate_monoidal_transformation(&lambda)?);
    Ok(MonoidalLimit { limit, f: f.clone(), monoidal, p, q, lambda, certificate })
}

/// `r_f` as a monoidal functor with constraints `(f_{a,b}, 1)` and `(f_0, 1)`;
/// it is strict exactly when `F` is.
pub fn monoidal_factorization(ml: &MonoidalLimit, fac: &SpanFactorization) -> Result<WMonoidalFunctor> {
    let lim = &ml.limit;
    let f = &ml.f;
    let fc = Constraints { f, colax: lim.is_reversed() };
    let am = f.dom();
    let (a, m) = (am.base(), &ml.monoidal);
    let r = &fac.r;
    let k = a.num_objects();
    let strict = (0..k * k).all(|i| f.cod().base().is_identity(f.at(i / k, i % k))) && f.cod().base().is_identity(f.unit_constraint());
    let variance = if strict { Variance::Strict } else if lim.is_reversed() && f.variance == Variance::Colax { Variance::Colax } else if f.variance == Variance::Lax { Variance::Lax } else { Variance::Pseudo };
    let lookup = |src: Obj, tgt: Obj, u: Mor, v: Mor, what: &str| lim.find_mor(src, tgt, u, v).ok_or_else(|| Error::consistency(format!("{what} of r_f is not a comma morphism")));
    let mut table = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            let (tens, img) = (m.t0(r.ob(x), r.ob(y)), r.ob(am.t0(x, y)));
            let c = fc.at(x, y)?;
            let id = a.id(am.t0(x, y));
            table.push(if lim.is_reversed() { lookup(img, tens, c, id, "tensor constraint")? } else { lookup(tens, img, c, id, "tensor constraint")? });
        }
    }
    let (ru, id) = (r.ob(am.unit()), a.id(am.unit()));
    let unit = if lim.is_reversed() { lookup(ru, m.unit(), fc.unit()?, id, "unit constraint")? } else { lookup(m.unit(), ru, fc.unit()?, id, "unit constraint")? };
    WMonoidalFunctor::new("r", variance, am.clone(), m.clone(), r.clone(), table, unit)
}

/// Every monoidal structure on the apex making `p`, `q` strict and `λ`
/// monoidal, found by brute force over the tensor and unit objects.
pub fn enumerate_lifted_structures(ml: &MonoidalLimit, cap: Cap) -> Result<Vec<MonoidalCategory>> {
    let lim = &ml.limit;
    let (am, bm) = (ml.f.dom(), ml.f.cod());
    let apex = &lim.apex;
    let k = apex.num_objects();
    let over = |a: Obj, x: Obj| -> Vec<Obj> { (0..k).filter(|&o| lim.comma_obj(o).a == a && lim.comma_obj(o).x == x).collect() };
    let mut slots: Vec<Vec<Obj>> = Vec::with_capacity(k * k + 1);
    for i in 0..k {
        for j in 0..k {
            let (x, y) = (lim.comma_obj(i), lim.comma_obj(j));
            slots.push(over(am.t0(x.a, y.a), bm.t0(x.x, y.x)));
        }
    }
    slots.push(over(am.unit(), bm.unit()));
    let sizes: Vec<usize> = slots.iter().map(Vec::len).collect();
    cap.admit("lifted monoidal structures", sizes.iter().copied())?;
    let mut budget = cap.budget("lifted monoidal structures");
    let mut found = Vec::new();
    let mut failure = None;
    for_each_tuple(&sizes, &mut budget, |t| {
        let t0: Vec<Obj> = (0..k * k).map(|i| slots[i][t[i]]).collect();
        let unit = slots[k * k][t[k * k]];
        match candidate(ml, t0, unit) {
            Ok(Some(m)) => found.push(m),
            Ok(None) => {}
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        true
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

fn candidate(ml: &MonoidalLimit, t0: Vec<Obj>, unit: Obj) -> Result<Option<MonoidalCategory>> {
    let lim = &ml.limit;
    let (am, bm) = (ml.f.dom(), ml.f.cod());
    let apex = &lim.apex;
    let (k, n) = (apex.num_objects(), apex.num_morphisms());
    let ob = |o: Obj| lim.comma_obj(o);
    let mut t1 = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let ((ug, vg), (uh, vh)) = (lim.comma_mor(g), lim.comma_mor(h));
            match lim.find_mor(t0[apex.src(g) * k + apex.src(h)], t0[apex.tgt(g) * k + apex.tgt(h)], bm.t1(ug, uh), am.t1(vg, vh)) {
                Some(m) => t1.push(m),
                None => return Ok(None),
            }
        }
    }
    let mut assoc = Vec::with_capacity(k * k * k);
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                match lim.find_mor(t0[t0[x * k + y] * k + z], t0[x * k + t0[y * k + z]], bm.assoc(ob(x).x, ob(y).x, ob(z).x), am.assoc(ob(x).a, ob(y).a, ob(z).a)) {
                    Some(m) => assoc.push(m),
                    None => return Ok(None),
                }
            }
        }
    }
    let mut lunit = Vec::with_capacity(k);
    let mut runit = Vec::with_capacity(k);
    for x in 0..k {
        match (lim.find_mor(t0[unit * k + x], x, bm.lunit(ob(x).x), am.lunit(ob(x).a)), lim.find_mor(t0[x * k + unit], x, bm.runit(ob(x).x), am.runit(ob(x).a))) {
            (Some(l), Some(r)) => {
                lunit.push(l);
                runit.push(r);
            }
            _ => return Ok(None),
        }
    }
    let m = Arc::new(MonoidalCategory::new(apex.name(), apex.clone(), t0, t1, unit, assoc, lunit, runit)?);
    if !validate_monoidal_category(&m).is_ok() {
        return Ok(None);
    }
    let p = strict_projection("p", &m, am, &lim.p)?;
    let q = strict_projection("q", &m, bm, &lim.q)?;
    if !validate_monoidal_functor(&p).is_ok() || !validate_monoidal_functor(&q).is_ok() {
        return Ok(None);
    }
    let fp = compose_monoidal_functors(&ml.f, &p)?;
    let comps = lim.lambda.components().to_vec();
    let lambda = if lim.is_reversed() { MonoidalTransformation::new("lambda", fp, q, comps)? } else { MonoidalTransformation::new("lambda", q, fp, comps)? };
    if !validate_monoidal_transformation(&lambda)?.is_ok() {
        return Ok(None);
    }
    Ok(Some(Arc::try_unwrap(m).unwrap_or_else(|m| (*m).clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowlimits::factor_loose_morphism;
    use crate::fincat::fixtures::cyclic;
    use crate::moncat::fixtures::{join_chain, poset_monoidal_functor, sigma, sigma_functor};

    fn lifts() -> Vec<(Variance, WMonoidalFunctor)> {
        let j2 = Arc::new(join_chain(2));
        let j3 = Arc::new(join_chain(3));
        vec![
            (Variance::Lax, WMonoidalFunctor::identity(j2.clone())),
            (Variance::Pseudo, WMonoidalFunctor::identity(j3.clone())),
            (Variance::Colax, WMonoidalFunctor::identity(j2.clone())),
            (Variance::Lax, poset_monoidal_functor("up", Variance::Lax, &j2, &j3, &[1, 2]).unwrap()),
            (Variance::Colax, poset_monoidal_functor("low", Variance::Colax, &j2, &j3, &[0, 1]).unwrap()),
            (Variance::Lax, poset_monoidal_functor("incl", Variance::Strict, &j2, &j3, &[0, 1]).unwrap()),
        ]
    }

    #[test]
    fn lifted_structures_are_certified() {
        for (w, f) in lifts() {
            let ml = lift_limit_monoidal(w, &f).unwrap();
            assert!(ml.certificate.is_ok(), "{w} {}: {}", f.name, ml.certificate);
        }
    }

    #[test]
    fn unit_object_is_the_unit_constraint() {
        for (w, f) in lifts() {
            let ml = lift_limit_monoidal(w, &f).unwrap();
            let u = ml.limit.comma_obj(ml.monoidal.unit());
            assert_eq!((u.x, u.a), (f.cod().unit(), f.dom().unit()));
            let expect = if w == Variance::Colax { f.colax_unit().unwrap() } else { f.lax_unit().unwrap() };
            assert_eq!(u.alpha, expect);
        }
    }

    #[test]
    fn tensor_of_objects_is_the_displayed_composite() {
        let j2 = Arc::new(join_chain(2));
        let j3 = Arc::new(join_chain(3));
        let f = poset_monoidal_functor("up", Variance::Lax, &j2, &j3, &[1, 2]).unwrap();
        let ml = lift_limit_monoidal(Variance::Lax, &f).unwrap();
        let b = j3.base();
        for (i, x) in ml.limit.objects().iter().enumerate() {
            for (j, y) in ml.limit.objects().iter().enumerate() {
                let z = ml.limit.comma_obj(ml.monoidal.t0(i, j));
                assert_eq!(z.alpha, b.comp(f.at(x.a, y.a), j3.t1(x.alpha, y.alpha)));
            }
        }
    }

    #[test]
    fn the_lifted_structure_is_unique() {
        for (w, f) in lifts() {
            let ml = lift_limit_monoidal(w, &f).unwrap();
            let all = enumerate_lifted_structures(&ml, Cap::default()).unwrap();
            assert_eq!(all, vec![(*ml.monoidal).clone()], "{w} {}", f.name);
        }
    }

    #[test]
    fn colax_lift_is_dual_to_the_lax_lift() {
        let j2 = Arc::new(join_chain(2));
        let j3 = Arc::new(join_chain(3));
        let f = poset_monoidal_functor("low", Variance::Colax, &j2, &j3, &[0, 1]).unwrap();
        let c = lift_limit_monoidal(Variance::Colax, &f).unwrap();
        let l = lift_limit_monoidal(Variance::Lax, &f.op().unwrap()).unwrap();
        let dual = l.monoidal.op().unwrap();
        assert_eq!(c.monoidal.tensor_obj_table(), dual.tensor_obj_table());
        assert_eq!(c.monoidal.tensor_mor_table(), dual.tensor_mor_table());
        assert_eq!(c.monoidal.unit(), dual.unit());
        assert_eq!(c.monoidal.assoc_table(), dual.assoc_table());
    }

    #[test]
    fn r_f_is_strict_exactly_when_f_is() {
        for (w, f) in lifts() {
            let ml = lift_limit_monoidal(w, &f).unwrap();
            let fac = factor_loose_morphism(&ml.limit).unwrap();
            let r = monoidal_factorization(&ml, &fac).unwrap();
            assert!(validate_monoidal_functor(&r).is_ok(), "{w} {}: {}", f.name, validate_monoidal_functor(&r));
            let f_strict = (0..f.constraint_table().len()).all(|i| f.cod().base().is_identity(f.constraint_table()[i])) && f.cod().base().is_identity(f.unit_constraint());
            assert_eq!(r.variance == Variance::Strict, f_strict, "{w} {}", f.name);
        }
    }

    #[test]
    fn incoherent_functor_fails_a_named_lift() {
        let z3 = sigma(&cyclic(3)).unwrap();
        let m = Arc::new(z3);
        let bad = sigma_functor("bad", Variance::Lax, &m, &m, &[0, 1, 2], 0, 1).unwrap();
        assert!(!validate_monoidal_functor(&bad).is_ok());
        let limit = limit_of_arrow(Variance::Lax, bad.functor()).unwrap();
        match lifted_tables(&limit, &bad) {
            Err(Error::Invalid(v)) => assert!(v.has("left-unitor-lift") || v.has("right-unitor-lift") || v.has("unit-lift"), "{v}"),
            other => panic!("expected a lift failure, got {other:?}"),
        }
        assert!(matches!(lift_limit_monoidal(Variance::Lax, &bad), Err(Error::Invalid(_))));
    }
}
