//! Limits of loose morphisms inside a finite F-category.
//!
//! For a loose `f: a → b` the reflection variance `w` asks for the limit of
//! the opposite flavour: a colax cone `λ: q ⇒ f·p` when `w = l`, an
//! invertible one when `w = p`, and a lax cone `λ: f·p ⇒ q` when `w = c`.
//! The three universal properties are checked by quantifying over every
//! object of the ambient category.

use super::fcat::FCategory;
use crate::check::Validation;
use crate::search::{Budget, Cap};
use crate::variance::Variance;
use crate::{Error, Result};

/// A chosen limit cone `(apex, p, q, λ)` over the 1-cell `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LimitDatum {
    pub f: usize,
    pub apex: usize,
    pub p: usize,
    pub q: usize,
    pub lambda: usize,
}

struct Ctx<'a> {
    a: &'a FCategory,
    invertible: bool,
}

impl Ctx<'_> {
    fn cone_ok(&self, d: &LimitDatum) -> bool {
        let c = self.a.ambient();
        let f = d.f;
        let shape = c.src1(d.p) == d.apex && c.tgt1(d.p) == c.src1(f) && c.src1(d.q) == d.apex && c.tgt1(d.q) == c.tgt1(f);
        shape
            && self.a.tight(d.p)
            && self.a.tight(d.q)
            && c.src2(d.lambda) == d.q
            && c.tgt2(d.lambda) == c.comp1(f, d.p)
            && (!self.invertible || c.is_invertible2(d.lambda))
    }

    /// Property (1): each cone from `x` factors through exactly one `t`.
    fn one_dimensional(&self, d: &LimitDatum, x: usize, budget: &mut Budget) -> Result<Option<Vec<String>>> {
        let c = self.a.ambient();
        let (fa, fb) = (c.src1(d.f), c.tgt1(d.f));
        for &r in c.hom1(x, fa) {
            for &s in c.hom1(x, fb) {
                for &alpha in c.hom2(s, c.comp1(d.f, r)) {
                    budget.tick()?;
                    if self.invertible && !c.is_invertible2(alpha) {
                        continue;
                    }
                    let n = c
                        .hom1(x, d.apex)
                        .iter()
                        .filter(|&&t| c.comp1(d.p, t) == r && c.comp1(d.q, t) == s && c.rwhisk(d.lambda, t) == alpha)
                        .count();
                    if n != 1 {
                        return Ok(Some(vec![c.obj_name(x).into(), c.name1(r).into(), c.name2(alpha).into(), c.name1(s).into(), format!("{n} factorizations")]));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Property (2): compatible pairs `(θ_r, θ_s)` come from exactly one `φ`.
    fn two_dimensional(&self, d: &LimitDatum, x: usize, budget: &mut Budget) -> Result<Option<Vec<String>>> {
        let c = self.a.ambient();
        let ts = c.hom1(x, d.apex);
        for &t in ts {
            for &u in ts {
                let (pt, pu, qt, qu) = (c.comp1(d.p, t), c.comp1(d.p, u), c.comp1(d.q, t), c.comp1(d.q, u));
                for &tr in c.hom2(pt, pu) {
                    for &tq in c.hom2(qt, qu) {
                        budget.tick()?;
                        let left = c.vcomp(c.lwhisk(d.f, tr), c.rwhisk(d.lambda, t));
                        let right = c.vcomp(c.rwhisk(d.lambda, u), tq);
                        if left != right {
                            continue;
                        }
                        let n = c.hom2(t, u).iter().filter(|&&phi| c.lwhisk(d.p, phi) == tr && c.lwhisk(d.q, phi) == tq).count();
                        if n != 1 {
                            return Ok(Some(vec![c.obj_name(x).into(), c.name2(tr).into(), c.name2(tq).into(), format!("{n} fillers")]));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Property (3): `t` is tight exactly when `p·t` and `q·t` are.
    fn detects_tightness(&self, d: &LimitDatum, x: usize) -> Option<Vec<String>> {
        let c = self.a.ambient();
        c.hom1(x, d.apex)
            .iter()
            .find(|&&t| self.a.tight(t) != (self.a.tight(c.comp1(d.p, t)) && self.a.tight(c.comp1(d.q, t))))
            .map(|&t| vec![c.name1(t).to_string()])
    }

    fn check(&self, d: &LimitDatum, v: &mut Validation, budget: &mut Budget) -> Result<()> {
        let c = self.a.ambient();
        let fname = c.name1(d.f).to_string();
        if !self.cone_ok(d) {
            v.fail("cone-shape", [fname, c.name1(d.p).into(), c.name1(d.q).into(), c.name2(d.lambda).into()]);
            return Ok(());
        }
        for x in 0..c.n0() {
            let tag = |mut w: Vec<String>| {
                w.insert(0, fname.clone());
                w
            };
            if let Some(w) = self.one_dimensional(d, x, budget)? {
                v.fail("property-1", tag(w));
            }
            if let Some(w) = self.two_dimensional(d, x, budget)? {
                v.fail("property-2", tag(w));
            }
            if let Some(w) = self.detects_tightness(d, x) {
                v.fail("property-3", tag(w));
            }
        }
        Ok(())
    }
}

fn oriented(a: &FCategory, w: Variance) -> Result<(FCategory, bool)> {
    match w {
        Variance::Lax => Ok((a.clone(), false)),
        Variance::Pseudo => Ok((a.clone(), true)),
        Variance::Colax => Ok((a.co_dual(), false)),
        Variance::Strict => Err(Error::precondition("limits of loose morphisms are indexed by l, p or c")),
    }
}

/// Certifies that `data` supplies, for every 1-cell, a limit satisfying all
/// three universal properties.
pub fn validate_loose_limit_data(a: &FCategory, data: &[LimitDatum], w: Variance, cap: Cap) -> Result<Validation> {
    let (world, invertible) = oriented(a, w)?;
    let ctx = Ctx { a: &world, invertible };
    let c = world.ambient();
    let mut v = Validation::new(format!("{}-limit data on {}", w.dual(), a.name()));
    let mut budget = cap.budget("limit universal properties");
    for f in 0..c.n1() {
        match data.iter().find(|d| d.f == f) {
            None => v.fail("coverage", [c.name1(f).to_string()]),
            Some(d) => {
                let in_range = d.apex < c.n0() && d.p < c.n1() && d.q < c.n1() && d.lambda < c.n2();
                if in_range {
                    ctx.check(d, &mut v, &mut budget)?;
                } else {
                    v.fail("cone-shape", [c.name1(f).to_string()]);
                }
            }
        }
    }
    Ok(v)
}

/// Checks a single cone against all three universal properties.
pub fn check_limit_datum(a: &FCategory, d: &LimitDatum, w: Variance, cap: Cap) -> Result<Validation> {
    let (world, invertible) = oriented(a, w)?;
    let ctx = Ctx { a: &world, invertible };
    let c = world.ambient();
    let mut v = Validation::new(format!("{}-limit of {}", w.dual(), c.name1(d.f)));
    if d.f < c.n1() && d.apex < c.n0() && d.p < c.n1() && d.q < c.n1() && d.lambda < c.n2() {
        ctx.check(d, &mut v, &mut cap.budget("limit universal properties"))?;
    } else {
        v.fail("cone-shape", [d.f.to_string()]);
    }
    Ok(v)
}

/// Searches for limit data on every 1-cell, returning the first lawful cone
/// in index order, or `None` for a 1-cell that has no limit.
pub fn find_limit_data(a: &FCategory, w: Variance, cap: Cap) -> Result<Vec<Option<LimitDatum>>> {
    let (world, invertible) = oriented(a, w)?;
    let ctx = Ctx { a: &world, invertible };
    let c = world.ambient();
    let mut budget = cap.budget("limit search");
    let mut out = Vec::with_capacity(c.n1());
    for f in 0..c.n1() {
        let mut found = None;
        'search: for apex in 0..c.n0() {
            for &p in c.hom1(apex, c.src1(f)) {
                for &q in c.hom1(apex, c.tgt1(f)) {
                    for &lambda in c.hom2(q, c.comp1(f, p)) {
                        let d = LimitDatum { f, apex, p, q, lambda };
                        let mut v = Validation::new("candidate");
                        ctx.check(&d, &mut v, &mut budget)?;
                        if v.is_ok() {
                            found = Some(d);
                            break 'search;
                        }
                    }
                }
            }
        }
        out.push(found);
    }
    Ok(out)
}

/// Limit data for every 1-cell, or an unsatisfied-hypothesis error naming the
/// first 1-cell without a limit.
pub fn require_limit_data(a: &FCategory, w: Variance, cap: Cap) -> Result<Vec<LimitDatum>> {
    let found = find_limit_data(a, w, cap)?;
    found
        .into_iter()
        .enumerate()
        .map(|(f, d)| d.ok_or_else(|| Error::hypothesis(format!("{} has no {}-limit of its loose morphism `{}`", a.name(), w.dual(), a.ambient().name1(f)))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2cat::fixtures::{arrow_2cat, iso_pair_2cat, parallel_2cells};

    #[test]
    fn all_tight_identity_cones() {
        let a = FCategory::all_tight(arrow_2cat());
        let c = a.ambient();
        let data: Vec<LimitDatum> = (0..c.n1()).map(|f| LimitDatum { f, apex: c.src1(f), p: c.id1(c.src1(f)), q: f, lambda: c.id2(f) }).collect();
        for w in [Variance::Lax, Variance::Pseudo, Variance::Colax] {
            let v = validate_loose_limit_data(&a, &data, w, Cap::default()).unwrap();
            assert!(v.is_ok(), "{v}");
        }
        assert_eq!(find_limit_data(&a, Variance::Lax, Cap::default()).unwrap().into_iter().flatten().collect::<Vec<_>>(), data);
    }

    #[test]
    fn loose_inverse_is_represented_by_a_tight_span() {
        // Tight u with loose inverse v: the limit of v is the tight span (u, 1_0).
        let amb = iso_pair_2cat();
        let tight: Vec<bool> = (0..amb.n1()).map(|f| amb.name1(f) != "v").collect();
        let a = FCategory::new(amb, tight).unwrap();
        let c = a.ambient();
        let v_cell = c.index1("v").unwrap();
        let d = require_limit_data(&a, Variance::Lax, Cap::default()).unwrap();
        let dv = d[v_cell];
        assert_eq!((c.name1(dv.p), c.name1(dv.q)), ("u", "1_0"));
    }

    #[test]
    fn wrong_lambda_breaks_property_one() {
        // In a category with two parallel 2-cells σ, τ: a ⇒ b, the cone over
        // b with λ = σ cannot see τ-cones.
        let a = FCategory::all_tight(parallel_2cells());
        let found = find_limit_data(&a, Variance::Lax, Cap::default()).unwrap();
        let c = a.ambient();
        let b = c.index1("b").unwrap();
        assert!(found[b].is_none());
        let bogus: Vec<LimitDatum> = (0..c.n1()).map(|f| LimitDatum { f, apex: c.src1(f), p: c.id1(c.src1(f)), q: f, lambda: c.id2(f) }).collect();
        let v = validate_loose_limit_data(&a, &bogus, Variance::Lax, Cap::default()).unwrap();
        assert!(v.has("property-1"));
    }

    #[test]
    fn missing_datum_is_a_coverage_failure() {
        let a = FCategory::all_tight(arrow_2cat());
        let v = validate_loose_limit_data(&a, &[], Variance::Pseudo, Cap::default()).unwrap();
        assert!(v.has("coverage"));
        assert!(require_limit_data(&FCategory::all_tight(parallel_2cells()), Variance::Lax, Cap::default()).is_err());
    }
}
