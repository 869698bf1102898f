//! The unique diagonal filler of a commuting square
//!
//! ```text
//!   A_τ ──R──▶ B
//!    │j        │H
//!    ▼         ▼
//!    A  ──S──▶ C
//! ```
//!
//! with `H` w-doctrinal and `A` carrying limits of its loose morphisms. The
//! construction lifts the reflection `(1, p_f ⊣ r_f, η_f)` of each loose `f`
//! through `H` and sets `Kf = Rq_f·r̄_f`; on 2-cells it uses the mate
//! `m̄_α = η̄_g·Rc_α·r̄_f` for `l` and `Rρ_α·v̄_{f,g}` for `p`. The colax case
//! is the lax case of the co-dual square.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::check::Validation;
use crate::f2cat::{
    compose_ffunctors, enumerate_ffunctors, is_w_doctrinal, tight_inclusion, validate_ffunctor, validate_loose_limit_data, validate_w_reflection, DoctrinalReport, FCategory,
    FFunctor, FunctorQuery, LimitDatum, Pins, Reflection,
};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// A certified commuting square awaiting a filler.
#[derive(Clone, Debug)]
pub struct FillerProblem {
    pub variance: Variance,
    pub a: Arc<FCategory>,
    pub limits: Vec<LimitDatum>,
    pub a_tau: Arc<FCategory>,
    pub j: FFunctor,
    pub r: FFunctor,
    pub s: FFunctor,
    pub h: FFunctor,
    pub doctrinal: DoctrinalReport,
}

fn same_tables(x: &FFunctor, y: &FFunctor) -> bool {
    x.obj_table() == y.obj_table() && x.one_table() == y.one_table() && x.two_table() == y.two_table()
}

fn first_difference(x: &FFunctor, y: &FFunctor) -> Option<String> {
    let d = x.dom().ambient();
    if let Some(i) = (0..d.n0()).find(|&i| x.ob(i) != y.ob(i)) {
        return Some(format!("object {}", d.obj_name(i)));
    }
    if let Some(i) = (0..d.n1()).find(|&i| x.on1(i) != y.on1(i)) {
        return Some(format!("1-cell {}", d.name1(i)));
    }
    (0..d.n2()).find(|&i| x.on2(i) != y.on2(i)).map(|i| format!("2-cell {}", d.name2(i)))
}

/// Compares two F-functors with the same domain cell by cell.
pub fn compare_ffunctors(v: &mut Validation, law: &str, x: &FFunctor, y: &FFunctor) {
    v.require(same_tables(x, y), law, || first_difference(x, y).into_iter().collect::<Vec<_>>());
}

impl FillerProblem {
    /// Validates the square, the limit data and the doctrinality of `H`.
    ///
    /// `r` may be given over any F-category equal to the tight part of `a`.
    pub fn new(w: Variance, a: Arc<FCategory>, limits: Vec<LimitDatum>, r: &FFunctor, s: &FFunctor, h: &FFunctor, cap: Cap) -> Result<Self> {
        if w == Variance::Strict {
            return Err(Error::precondition("fillers are constructed for w in {l, p, c}"));
        }
        let (a_tau, j) = tight_inclusion(&a);
        let r = r.rebased(a_tau.clone(), r.cod().clone())?;
        let s = s.rebased(a.clone(), s.cod().clone())?;
        let h = h.rebased(r.cod().clone(), s.cod().clone())?;
        for f in [&r, &s, &h] {
            let rep = validate_ffunctor(f);
            if !rep.is_ok() {
                return Err(Error::Invalid(rep.validation));
            }
        }
        let lim = validate_loose_limit_data(&a, &limits, w, cap)?;
        if !lim.is_ok() {
            return Err(Error::hypothesis(format!("loose-limit data: {lim}")));
        }
        let (sj, hr) = (compose_ffunctors(&s, &j)?, compose_ffunctors(&h, &r)?);
        if !same_tables(&sj, &hr) {
            return Err(Error::precondition(format!("the square does not commute at {}", first_difference(&sj, &hr).unwrap_or_default())));
        }
        let doctrinal = is_w_doctrinal(&h, w, false)?;
        if !doctrinal.verdict {
            return Err(Error::hypothesis(format!("`{}` is not {w}-doctrinal", h.name)));
        }
        Ok(FillerProblem { variance: w, a, limits, a_tau, j, r, s, h, doctrinal })
    }

    pub fn b(&self) -> &Arc<FCategory> {
        self.r.cod()
    }

    pub fn c(&self) -> &Arc<FCategory> {
        self.s.cod()
    }

    /// The same square between the co-dual F-categories, with dual variance.
    pub fn co_dual(&self, cap: Cap) -> Result<FillerProblem> {
        let a = Arc::new(self.a.co_dual());
        let b = Arc::new(self.b().co_dual());
        let c = Arc::new(self.c().co_dual());
        let (a_tau, _) = tight_inclusion(&a);
        let r = retarget(&self.r, &a_tau, &b)?;
        let s = retarget(&self.s, &a, &c)?;
        let h = retarget(&self.h, &b, &c)?;
        FillerProblem::new(self.variance.dual(), a, self.limits.clone(), &r, &s, &h, cap)
    }
}

/// The same tables re-pointed at structurally different, equally shaped
/// F-categories.
pub(crate) fn retarget(f: &FFunctor, dom: &Arc<FCategory>, cod: &Arc<FCategory>) -> Result<FFunctor> {
    Ok(FFunctor::new(f.name.clone(), dom.clone(), cod.clone(), f.obj_table().to_vec(), f.one_table().to_vec(), f.two_table().to_vec())?)
}

/// The reflection of a 1-cell `f` in `A` and its unique lift through `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftedReflection {
    pub f: usize,
    pub r: usize,
    pub eta: usize,
    pub r_bar: usize,
    pub eta_bar: usize,
}

#[derive(Clone, Debug)]
pub struct Filler {
    pub k: FFunctor,
    pub lifts: Vec<LiftedReflection>,
    pub certificate: Validation,
}

fn unique<T: Copy>(items: impl IntoIterator<Item = T>, what: impl FnOnce(usize) -> String) -> Result<T> {
    let all: Vec<T> = items.into_iter().collect();
    match all[..] {
        [x] => Ok(x),
        _ => Err(Error::consistency(what(all.len()))),
    }
}

struct Ctx<'a> {
    p: &'a FillerProblem,
    w: Variance,
    tau1: HashMap<usize, usize>,
    tau2: HashMap<usize, usize>,
}

impl Ctx<'_> {
    fn r1(&self, g: usize) -> Result<usize> {
        let a = self.p.a.ambient();
        self.tau1.get(&g).map(|&i| self.p.r.on1(i)).ok_or_else(|| Error::consistency(format!("{} was expected to be tight", a.name1(g))))
    }

    fn r2(&self, x: usize) -> Result<usize> {
        let a = self.p.a.ambient();
        self.tau2.get(&x).map(|&i| self.p.r.on2(i)).ok_or_else(|| Error::consistency(format!("{} was expected to lie between tight 1-cells", a.name2(x))))
    }

    /// The unique lift through `H` of the reflection `(1, f ⊣ g, η)` of `A`.
    fn lift(&self, left: usize, g: usize, eta: usize, what: &str) -> Result<(usize, usize)> {
        let (a, b) = (self.p.a.ambient(), self.p.b().ambient());
        let (h, s) = (&self.p.h, &self.p.s);
        let rf = self.r1(left)?;
        let (x, y) = (self.p.r.ob(a.src1(g)), self.p.r.ob(a.tgt1(g)));
        let mut found = Vec::new();
        for &gb in b.hom1(x, y).iter().filter(|&&gb| h.on1(gb) == s.on1(g)) {
            if b.try_comp1(gb, rf).is_none() {
                continue;
            }
            for &eb in b.hom2(b.id1(y), b.comp1(gb, rf)).iter().filter(|&&eb| h.on2(eb) == s.on2(eta)) {
                if validate_w_reflection(&**self.p.b(), &Reflection::new(self.w, rf, gb, eb))?.is_ok() {
                    found.push((gb, eb));
                }
            }
        }
        unique(found, |n| format!("{n} lifts through `{}` of the reflection for {what}", self.p.h.name))
    }
}

/// Builds the filler `K` following the constructive proof.
pub fn construct_filler(prob: &FillerProblem, cap: Cap) -> Result<Filler> {
    if prob.variance == Variance::Colax {
        let co = prob.co_dual(cap)?;
        let res = construct_filler(&co, cap)?;
        let k = retarget(&res.k, &prob.a, prob.b())?.named("K");
        let certificate = certify(prob, &k)?;
        return Ok(Filler { k, lifts: res.lifts, certificate });
    }
    let a = prob.a.ambient();
    let b = prob.b().ambient();
    let ctx = Ctx {
        p: prob,
        w: prob.variance,
        tau1: prob.j.one_table().iter().enumerate().map(|(i, &g)| (g, i)).collect(),
        tau2: prob.j.two_table().iter().enumerate().map(|(i, &x)| (x, i)).collect(),
    };
    let mut budget = cap.budget("filler construction");
    let datum = |f: usize| -> Result<&LimitDatum> { prob.limits.iter().find(|d| d.f == f).ok_or_else(|| Error::hypothesis(format!("no limit datum for {}", a.name1(f)))) };

    let mut lifts = Vec::with_capacity(a.n1());
    let mut one = Vec::with_capacity(a.n1());
    for f in 0..a.n1() {
        budget.tick()?;
        let d = datum(f)?;
        let x = a.src1(f);
        let r = unique(
            a.hom1(x, d.apex).iter().copied().filter(|&r| a.comp1(d.p, r) == a.id1(x) && a.comp1(d.q, r) == f && a.rwhisk(d.lambda, r) == a.id2(f)),
            |n| format!("{n} factorizations of the identity cone over {}", a.name1(f)),
        )?;
        let eta = unique(
            a.hom2(a.id1(d.apex), a.comp1(r, d.p)).iter().copied().filter(|&e| a.lwhisk(d.p, e) == a.id2(d.p) && a.lwhisk(d.q, e) == d.lambda),
            |n| format!("{n} units for the reflection of {}", a.name1(f)),
        )?;
        let (r_bar, eta_bar) = ctx.lift(d.p, r, eta, a.name1(f))?;
        one.push(b.comp1(ctx.r1(d.q)?, r_bar));
        lifts.push(LiftedReflection { f, r, eta, r_bar, eta_bar });
    }

    let mut two = Vec::with_capacity(a.n2());
    for alpha in 0..a.n2() {
        budget.tick()?;
        let (f, g) = (a.src2(alpha), a.tgt2(alpha));
        let (df, dg) = (datum(f)?, datum(g)?);
        let (lf, lg) = (&lifts[f], &lifts[g]);
        let k = match prob.variance {
            Variance::Lax => {
                let want = a.vcomp(a.rwhisk(alpha, df.p), df.lambda);
                let c = unique(
                    a.hom1(df.apex, dg.apex).iter().copied().filter(|&c| a.comp1(dg.p, c) == df.p && a.comp1(dg.q, c) == df.q && a.rwhisk(dg.lambda, c) == want),
                    |n| format!("{n} tight 1-cells c_α for {}", a.name2(alpha)),
                )?;
                let m = b.rwhisk(lg.eta_bar, b.comp1(ctx.r1(c)?, lf.r_bar));
                b.lwhisk(ctx.r1(dg.q)?, m)
            }
            _ => pseudo_cell(&ctx, alpha, df, dg, lf, lg)?,
        };
        if b.src2(k) != one[f] || b.tgt2(k) != one[g] {
            return Err(Error::consistency(format!("K({}) has the wrong boundary", a.name2(alpha))));
        }
        two.push(k);
    }

    let k = FFunctor::new("K", prob.a.clone(), prob.b().clone(), prob.r.obj_table().to_vec(), one, two)?;
    let certificate = certify(prob, &k)?;
    Ok(Filler { k, lifts, certificate })
}

/// `Kα = Rρ_α·v̄_{f,g}` through the tight pullback `K_{f,g}` of `p_g` along `p_f`.
fn pseudo_cell(ctx: &Ctx<'_>, alpha: usize, df: &LimitDatum, dg: &LimitDatum, lf: &LiftedReflection, lg: &LiftedReflection) -> Result<usize> {
    let fa = ctx.p.a.as_ref();
    let a = fa.ambient();
    let b = ctx.p.b().ambient();
    let (s, t) = tight_pullback(fa, df.p, dg.p).ok_or_else(|| Error::hypothesis(format!("no tight pullback of {} along {}", a.name1(dg.p), a.name1(df.p))))?;
    let apex = a.src1(s);
    let x = a.src1(lf.r);
    let v = unique(a.hom1(x, apex).iter().copied().filter(|&v| a.comp1(s, v) == lf.r && a.comp1(t, v) == lg.r), |n| format!("{n} induced 1-cells v"))?;
    let u = a.comp1(df.p, s);
    let theta = unique(
        a.hom2(a.id1(apex), a.comp1(v, u)).iter().copied().filter(|&th| a.lwhisk(s, th) == a.rwhisk(lf.eta, s) && a.lwhisk(t, th) == a.rwhisk(lg.eta, t)),
        |n| format!("{n} induced units θ"),
    )?;
    let rho = unique(a.hom2(a.comp1(df.q, s), a.comp1(dg.q, t)).iter().copied().filter(|&r| a.rwhisk(r, v) == alpha), |n| {
        format!("{n} 2-cells ρ with ρ·v = {}", a.name2(alpha))
    })?;
    let (v_bar, _) = ctx.lift(u, v, theta, &format!("K({},{})", a.name1(df.f), a.name1(dg.f)))?;
    Ok(b.rwhisk(ctx.r2(rho)?, v_bar))
}

/// A pullback of tight `g` along tight `f` with tight projections, universal
/// for 1-cells and 2-cells from every object.
fn tight_pullback(fa: &FCategory, f: usize, g: usize) -> Option<(usize, usize)> {
    let a = fa.ambient();
    let (xf, xg) = (a.src1(f), a.src1(g));
    let cones = |y: usize| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &x in a.hom1(y, xf) {
            for &z in a.hom1(y, xg) {
                if a.comp1(f, x) == a.comp1(g, z) {
                    out.push((x, z));
                }
            }
        }
        out
    };
    for p in 0..a.n0() {
        for &(s, t) in cones(p).iter().filter(|&&(s, t)| fa.tight(s) && fa.tight(t)) {
            let universal = (0..a.n0()).all(|y| {
                let ones_ok = cones(y).iter().all(|&(x, z)| {
                    let hits: Vec<usize> = a.hom1(y, p).iter().copied().filter(|&m| a.comp1(s, m) == x && a.comp1(t, m) == z).collect();
                    hits.len() == 1 && (!(fa.tight(x) && fa.tight(z)) || fa.tight(hits[0]))
                });
                ones_ok
                    && a.hom1(y, p).iter().all(|&m| {
                        a.hom1(y, p).iter().all(|&n| {
                            let (sm, sn, tm, tn) = (a.comp1(s, m), a.comp1(s, n), a.comp1(t, m), a.comp1(t, n));
                            a.hom2(sm, sn).iter().all(|&th1| {
                                a.hom2(tm, tn).iter().filter(|&&th2| a.lwhisk(f, th1) == a.lwhisk(g, th2)).all(|&th2| {
                                    a.hom2(m, n).iter().filter(|&&ph| a.lwhisk(s, ph) == th1 && a.lwhisk(t, ph) == th2).count() == 1
                                })
                            })
                        })
                    })
            });
            if universal {
                return Some((s, t));
            }
        }
    }
    None
}

fn certify(prob: &FillerProblem, k: &FFunctor) -> Result<Validation> {
    let mut v = Validation::new(format!("filler for {} against {}", prob.s.name, prob.h.name));
    v.absorb("K: ", validate_ffunctor(k).validation);
    compare_ffunctors(&mut v, "K∘j = R", &compose_ffunctors(k, &prob.j)?, &prob.r);
    compare_ffunctors(&mut v, "H∘K = S", &compose_ffunctors(&prob.h, k)?, &prob.s);
    let a = prob.a.ambient();
    for (i, &g) in prob.j.one_table().iter().enumerate() {
        v.require(k.on1(g) == prob.r.on1(i), "K agrees with R on tight 1-cells", || [a.name1(g)]);
    }
    for (i, &x) in prob.j.two_table().iter().enumerate() {
        v.require(k.on2(x) == prob.r.on2(i), "K agrees with R on 2-cells between tight 1-cells", || [a.name2(x)]);
    }
    Ok(v)
}

/// Every F-functor `K` with `K∘j = R` and `H∘K = S`, by exhaustive search.
pub fn enumerate_fillers(prob: &FillerProblem, cap: Cap) -> Result<Vec<FFunctor>> {
    let pins = Pins::along(&prob.a, &prob.j, &prob.r)?;
    let q = FunctorQuery { dom: &prob.a, cod: prob.b(), pins: Some(pins), over: Some((&prob.h, &prob.s)), limit: None, cap };
    enumerate_ffunctors(&q)
}
