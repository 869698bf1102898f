//! The reflection `(1, p_f ⊣ r_f, η_f)` carried by every arrow limit, tight
//! pullbacks of limits and binary composition of the resulting spans.

use std::collections::HashMap;
use std::sync::Arc;

use super::comma::{ArrowLimit, CommaObj};
use super::limit_of_arrow;
use crate::check::Validation;
use crate::f2cat::calculus::{is_reflection_morphism, validate_w_reflection, Co, Reflection, TwoCells};
use crate::fincat::fixtures::{chain, terminal};
use crate::fincat::{compose_functors, enumerate_functors, vertical, whisker_left, whisker_right, Arrow, CatWorld, FinCategory, Functor, Mor, NatTransformation, Obj};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

pub type CatReflection = Reflection<Functor, NatTransformation>;

/// `r_f: A → W̄_f` with the unit `η_f` of the reflection `p_f ⊣ r_f`.
#[derive(Clone, Debug)]
pub struct SpanFactorization {
    pub limit: ArrowLimit,
    pub r: Functor,
    pub eta: NatTransformation,
    pub reflection: CatReflection,
}

fn is_identity_nat(t: &NatTransformation) -> bool {
    let c = t.cod_cat();
    t.components().iter().all(|&m| c.is_identity(m))
}

fn world(cats: &[&Arc<FinCategory>], cap: Cap) -> CatWorld {
    CatWorld::new(cats.iter().map(|c| (*c).clone()).collect(), cap)
}

/// Validates a reflection in `Cat`, reading `c`-reflections in the reversed world.
fn validate_reflection(w: &CatWorld, r: &CatReflection) -> Result<Validation> {
    validate_w_reflection(w, r)
}

/// `r_f(a) = (fa, 1, a)` and `η_f` at `(x, α, a)` is `(α, 1_a)`.
pub fn factor_loose_morphism(lim: &ArrowLimit) -> Result<SpanFactorization> {
    let (a, b, f) = (lim.dom().clone(), lim.cod().clone(), &lim.f);
    let objs: Vec<CommaObj> = (0..a.num_objects()).map(|o| CommaObj { x: f.ob(o), alpha: b.id(f.ob(o)), a: o }).collect();
    let mors: Vec<(Mor, Mor)> = (0..a.num_morphisms()).map(|v| (f.mor(v), v)).collect();
    let r = lim.functor_into("r", &a, &objs, &mors)?;
    let rp = compose_functors(&r, &lim.p)?;
    let id = Functor::identity(lim.apex.clone());
    let mut comps = Vec::with_capacity(lim.apex.num_objects());
    for o in 0..lim.apex.num_objects() {
        let c = lim.comma_obj(o);
        let target = rp.ob(o);
        let m = if lim.is_reversed() { lim.find_mor(target, o, c.alpha, a.id(c.a)) } else { lim.find_mor(o, target, c.alpha, a.id(c.a)) };
        comps.push(m.ok_or_else(|| Error::consistency(format!("unit component at {} is not a comma morphism", lim.apex.obj_name(o))))?);
    }
    let eta = if lim.is_reversed() { NatTransformation::new("eta", rp, id, comps)? } else { NatTransformation::new("eta", id, rp, comps)? };
    let reflection = Reflection::new(lim.variance, lim.p.clone(), r.clone(), eta.clone());
    Ok(SpanFactorization { limit: lim.clone(), r, eta, reflection })
}

/// The five defining equations of the factorization and the reflection laws.
pub fn certify_factorization(fac: &SpanFactorization, cap: Cap) -> Result<Validation> {
    let lim = &fac.limit;
    let mut v = Validation::new(format!("factorization of {}", lim.f.name));
    let a = lim.dom();
    v.require(compose_functors(&lim.p, &fac.r)? == Functor::identity(a.clone()), "p·r = 1", Vec::<String>::new);
    v.require(compose_functors(&lim.q, &fac.r)? == lim.f, "q·r = f", Vec::<String>::new);
    v.require(is_identity_nat(&whisker_right(&lim.lambda, &fac.r)?), "λ·r = 1", Vec::<String>::new);
    v.require(is_identity_nat(&whisker_left(&lim.p, &fac.eta)?), "p·η = 1", Vec::<String>::new);
    v.require(whisker_left(&lim.q, &fac.eta)?.components() == lim.lambda.components(), "q·η = λ", Vec::<String>::new);
    let w = world(&[a, &lim.apex], cap);
    v.absorb("reflection: ", validate_reflection(&w, &fac.reflection)?);
    Ok(v)
}

/// A strict pullback of `f1: X → Z` and `f2: Y → Z` in `Cat`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub apex: Arc<FinCategory>,
    pub pr1: Functor,
    pub pr2: Functor,
    obj_index: HashMap<(Obj, Obj), Obj>,
    mor_index: HashMap<(Mor, Mor), Mor>,
}

impl Pullback {
    pub fn find_obj(&self, x: Obj, y: Obj) -> Option<Obj> {
        self.obj_index.get(&(x, y)).copied()
    }

    pub fn find_mor(&self, m: Mor, n: Mor) -> Option<Mor> {
        self.mor_index.get(&(m, n)).copied()
    }

    /// The functor `⟨g1, g2⟩` into the pullback.
    pub fn pair(&self, name: &str, g1: &Functor, g2: &Functor) -> Result<Functor> {
        let d = g1.dom();
        let obj = (0..d.num_objects()).map(|o| self.find_obj(g1.ob(o), g2.ob(o)).ok_or_else(|| Error::boundary(format!("{name} does not land in the pullback")))).collect::<Result<Vec<_>>>()?;
        let mor = (0..d.num_morphisms()).map(|m| self.find_mor(g1.mor(m), g2.mor(m)).ok_or_else(|| Error::boundary(format!("{name} does not land in the pullback")))).collect::<Result<Vec<_>>>()?;
        Ok(Functor::new(name, d.clone(), self.apex.clone(), obj, mor)?)
    }

    /// The 2-cell `⟨θ1, θ2⟩` between functors into the pullback.
    pub fn pair2(&self, name: &str, s: &Functor, t: &Functor, th1: &NatTransformation, th2: &NatTransformation) -> Result<NatTransformation> {
        let comps = (0..s.dom().num_objects())
            .map(|o| self.find_mor(th1.at(o), th2.at(o)).ok_or_else(|| Error::boundary(format!("{name} does not land in the pullback"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTransformation::new(name, s.clone(), t.clone(), comps)?)
    }
}

pub fn pullback(name: &str, f1: &Functor, f2: &Functor) -> Result<Pullback> {
    if !crate::fincat::same_category(f1.cod(), f2.cod()) {
        return Err(Error::boundary(format!("{} and {} have different codomains", f1.name, f2.name)));
    }
    let (x, y) = (f1.dom(), f2.dom());
    let mut objects = Vec::new();
    let mut names = Vec::new();
    let mut obj_index = HashMap::new();
    for i in 0..x.num_objects() {
        for j in 0..y.num_objects() {
            if f1.ob(i) == f2.ob(j) {
                obj_index.insert((i, j), objects.len());
                objects.push((i, j));
                names.push(format!("<{},{}>", x.obj_name(i), y.obj_name(j)));
            }
        }
    }
    let mut arrows = Vec::new();
    let mut pairs = Vec::new();
    let mut mor_index = HashMap::new();
    for m in 0..x.num_morphisms() {
        for n in 0..y.num_morphisms() {
            if f1.mor(m) == f2.mor(n) {
                let (s, t) = (obj_index[&(x.src(m), y.src(n))], obj_index[&(x.tgt(m), y.tgt(n))]);
                mor_index.insert((m, n), arrows.len());
                arrows.push(Arrow { name: format!("<{},{}>", x.mor_name(m), y.mor_name(n)), src: s, tgt: t });
                pairs.push((m, n));
            }
        }
    }
    let ids = objects.iter().map(|&(i, j)| mor_index[&(x.id(i), y.id(j))]).collect();
    let apex = Arc::new(FinCategory::from_fn(name, names, arrows, ids, |g, h| mor_index[&(x.comp(pairs[g].0, pairs[h].0), y.comp(pairs[g].1, pairs[h].1))]));
    let pr1 = Functor::new("pr1", apex.clone(), x.clone(), objects.iter().map(|o| o.0).collect(), pairs.iter().map(|m| m.0).collect())?;
    let pr2 = Functor::new("pr2", apex.clone(), y.clone(), objects.iter().map(|o| o.1).collect(), pairs.iter().map(|m| m.1).collect())?;
    Ok(Pullback { apex, pr1, pr2, obj_index, mor_index })
}

/// `W̄_{f·g}` with its comparison `t: W̄_{f·g} → W̄_f`.
#[derive(Clone, Debug)]
pub struct PullbackSquare {
    pub limit: ArrowLimit,
    pub t: Functor,
    pub certificate: Validation,
}

/// Certifies that a commuting square is a pullback by testing against `1`
/// and `[2]`, which detect objects and morphisms of `Cat`.
fn certify_pullback(v: &mut Validation, apex: &Arc<FinCategory>, to_left: &Functor, to_down: &Functor, left: &Functor, down: &Functor, cap: Cap) -> Result<()> {
    v.require(compose_functors(left, to_left)? == compose_functors(down, to_down)?, "square-commutes", Vec::<String>::new);
    for x in [Arc::new(terminal()), Arc::new(chain(2))] {
        let mut hit: HashMap<Vec<Vec<usize>>, usize> = HashMap::new();
        for k in enumerate_functors(&x, apex, cap)? {
            let (m, n) = (compose_functors(to_left, &k)?, compose_functors(to_down, &k)?);
            *hit.entry(vec![m.obj_table().to_vec(), m.mor_table().to_vec(), n.obj_table().to_vec(), n.mor_table().to_vec()]).or_default() += 1;
        }
        for m in enumerate_functors(&x, left.dom(), cap)? {
            for n in enumerate_functors(&x, down.dom(), cap)? {
                if compose_functors(left, &m)? != compose_functors(down, &n)? {
                    continue;
                }
                let c = hit.get(&vec![m.obj_table().to_vec(), m.mor_table().to_vec(), n.obj_table().to_vec(), n.mor_table().to_vec()]).copied().unwrap_or(0);
                v.require(c == 1, "pullback-universality", || [x.name().to_string(), format!("{:?}", m.obj_table()), format!("{:?}", n.obj_table()), format!("{c} induced maps")]);
            }
        }
    }
    Ok(())
}

/// Pulls `W̄_f` back along a tight `g: C → A`, producing `W̄_{f·g}`.
pub fn tight_pullback_along_projection(lim_f: &ArrowLimit, g: &Functor, marking: &CatWorld) -> Result<PullbackSquare> {
    if !marking.is_tight(g) {
        return Err(Error::precondition(format!("{} is not tight", g.name)));
    }
    if !crate::fincat::same_category(g.cod(), lim_f.dom()) {
        return Err(Error::boundary(format!("{} does not land in the domain of {}", g.name, lim_f.f.name)));
    }
    let fg = compose_functors(&lim_f.f, g)?;
    let lim = limit_of_arrow(lim_f.variance, &fg)?;
    let d = lim.apex.clone();
    let objs: Vec<CommaObj> = (0..d.num_objects()).map(|o| { let c = lim.comma_obj(o); CommaObj { a: g.ob(c.a), ..c } }).collect();
    let mors: Vec<(Mor, Mor)> = (0..d.num_morphisms()).map(|m| { let (u, v) = lim.comma_mor(m); (u, g.mor(v)) }).collect();
    let t = lim_f.functor_into("t", &d, &objs, &mors)?;
    let mut v = Validation::new(format!("pullback of {} along {}", lim_f.apex.name(), g.name));
    v.require(whisker_right(&lim_f.lambda, &t)?.components() == lim.lambda.components(), "λ_f·t = λ_fg", Vec::<String>::new);
    v.require(compose_functors(&lim_f.q, &t)? == lim.q, "q_f·t = q_fg", Vec::<String>::new);
    certify_pullback(&mut v, &d, &t, &lim.p, &lim_f.p, g, marking.cap)?;
    Ok(PullbackSquare { limit: lim, t, certificate: v })
}

/// The composite of the spans of `f: A → B` and `g: B → C`.
#[derive(Clone, Debug)]
pub struct SpanComposite {
    pub pullback: Pullback,
    /// `p_{g,f}: W̄_gW̄_f → W̄_f`.
    pub p_gf: Functor,
    /// `q_{g,f}: W̄_gW̄_f → W̄_g`.
    pub q_gf: Functor,
    pub lifted: CatReflection,
    pub composite: CatReflection,
    pub k: Functor,
    pub factorization_gf: SpanFactorization,
    pub certificate: Validation,
}

/// The composite of two reflections `(p₁ ⊣ r₁, η₁)` then `(p₂ ⊣ r₂, η₂)`,
/// with unit `(r₁·η₂·p₁) ∘ η₁`.
fn compose_reflections<C: TwoCells>(c: &C, first: &Reflection<C::One, C::Two>, second: &Reflection<C::One, C::Two>, w: Variance) -> Result<Reflection<C::One, C::Two>> {
    let f = c.comp1(&second.f, &first.f)?;
    let g = c.comp1(&first.g, &second.g)?;
    let mid = c.whisk(&first.g, &second.eta, &first.f)?;
    let eta = c.vcomp(&mid, &first.eta)?;
    Ok(Reflection::new(w, f, g, eta))
}

fn whiskered_lambda(fac_f: &SpanFactorization, fac_g: &SpanFactorization, p_gf: &Functor, q_gf: &Functor) -> Result<NatTransformation> {
    let (lf, lg) = (&fac_f.limit.lambda, &fac_g.limit.lambda);
    let g = &fac_g.limit.f;
    let outer = whisker_left(g, &whisker_right(lf, p_gf)?)?;
    let inner = whisker_right(lg, q_gf)?;
    if fac_f.limit.is_reversed() {
        vertical(&inner, &outer)
    } else {
        vertical(&outer, &inner)
    }
}

/// Pulls `p_g` back along `q_f`, lifts and composes the reflections, and
/// builds the comparison `k_{g,f}` into `W̄_{g·f}`.
pub fn compose_w_spans(fac_f: &SpanFactorization, fac_g: &SpanFactorization, cap: Cap) -> Result<SpanComposite> {
    let (lf, lg) = (&fac_f.limit, &fac_g.limit);
    if lf.variance != lg.variance {
        return Err(Error::precondition("spans of different variances do not compose"));
    }
    if !crate::fincat::same_category(lf.cod(), lg.dom()) {
        return Err(Error::boundary(format!("{} and {} are not composable", lf.f.name, lg.f.name)));
    }
    let w = lf.variance;
    let pb = pullback(&format!("{}{}", lg.apex.name(), lf.apex.name()), &lg.p, &lf.q)?;
    let (q_gf, p_gf) = (pb.pr1.clone().named("q_gf"), pb.pr2.clone().named("p_gf"));
    let r_gf = pb.pair("r_gf", &compose_functors(&fac_g.r, &lf.q)?, &Functor::identity(lf.apex.clone()))?;
    let rp = compose_functors(&r_gf, &p_gf)?;
    let id_p = Functor::identity(pb.apex.clone());
    let eta_g_q = whisker_right(&fac_g.eta, &q_gf)?;
    let one = NatTransformation::identity(&p_gf);
    let eta_gf = if lf.is_reversed() { pb.pair2("eta_gf", &rp, &id_p, &eta_g_q, &one)? } else { pb.pair2("eta_gf", &id_p, &rp, &eta_g_q, &one)? };
    let lifted = Reflection::new(w, p_gf.clone(), r_gf.clone(), eta_gf);

    let cw = world(&[lf.dom(), lf.cod(), lg.cod(), &lf.apex, &lg.apex, &pb.apex], cap);
    let composite = if lf.is_reversed() {
        compose_reflections(&Co(&cw), &lifted, &fac_f.reflection, w)?
    } else {
        compose_reflections(&cw, &lifted, &fac_f.reflection, w)?
    };

    let gf = compose_functors(&lg.f, &lf.f)?;
    let lim_gf = limit_of_arrow(w, &gf)?;
    let fac_gf = factor_loose_morphism(&lim_gf)?;
    let c = lg.cod();
    let gfun = &lg.f;
    let d = &pb.apex;
    let mut objs = Vec::with_capacity(d.num_objects());
    for o in 0..d.num_objects() {
        let (og, of) = (lg.comma_obj(pb.pr1.ob(o)), lf.comma_obj(pb.pr2.ob(o)));
        let alpha = if lf.is_reversed() { c.comp(og.alpha, gfun.mor(of.alpha)) } else { c.comp(gfun.mor(of.alpha), og.alpha) };
        objs.push(CommaObj { x: og.x, alpha, a: of.a });
    }
    let mors: Vec<(Mor, Mor)> = (0..d.num_morphisms()).map(|m| (lg.comma_mor(pb.pr1.mor(m)).0, lf.comma_mor(pb.pr2.mor(m)).1)).collect();
    let k = lim_gf.functor_into("k", d, &objs, &mors)?;

    let mut v = Validation::new(format!("span composite {}∘{}", lg.f.name, lf.f.name));
    v.require(compose_functors(&lg.p, &q_gf)? == compose_functors(&lf.q, &p_gf)?, "pullback-square", Vec::<String>::new);
    let lifted_ok = validate_reflection(&cw, &lifted)?;
    if !lifted_ok.is_ok() {
        return Err(Error::consistency(format!("reflection lift along the pullback failed: {lifted_ok}")));
    }
    v.require(is_reflection_morphism(&cw, &q_gf, &lf.q, &lifted, &fac_g.reflection)?.holds(), "spancomp: (q_gf, q_f) is a reflection morphism", Vec::<String>::new);
    v.require(compose_functors(&lim_gf.p, &k)? == compose_functors(&lf.p, &p_gf)?, "comp: p_gf·k = p_f·p_{g,f}", Vec::<String>::new);
    v.require(compose_functors(&lim_gf.q, &k)? == compose_functors(&lg.q, &q_gf)?, "comp: q_gf·k = q_g·q_{g,f}", Vec::<String>::new);
    let lam = whiskered_lambda(fac_f, fac_g, &p_gf, &q_gf)?;
    v.require(whisker_right(&lim_gf.lambda, &k)?.components() == lam.components(), "comp: λ_gf·k", Vec::<String>::new);
    let cw2 = world(&[lf.dom(), lg.cod(), &pb.apex, &lim_gf.apex], cap);
    let id_a = Functor::identity(lf.dom().clone());
    let spanmap = is_reflection_morphism(&cw2, &k, &id_a, &composite, &fac_gf.reflection)?;
    v.require(spanmap.holds(), "spanmap: (k, 1) is a reflection morphism", || [format!("{:?}", spanmap.mate.components())]);
    Ok(SpanComposite { pullback: pb, p_gf, q_gf, lifted, composite, k, factorization_gf: fac_gf, certificate: v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures::{arrow_with_flip, monotone};
    use crate::fincat::are_isomorphic;

    fn variances() -> [Variance; 3] {
        [Variance::Lax, Variance::Pseudo, Variance::Colax]
    }

    #[test]
    fn factorizations_satisfy_all_equations() {
        let a = Arc::new(chain(2));
        let b = Arc::new(chain(3));
        let fs = [Functor::identity(a.clone()), monotone(&a, &b, &[0, 2]).unwrap(), monotone(&a, &b, &[1, 1]).unwrap(), Functor::identity(Arc::new(arrow_with_flip()))];
        for f in &fs {
            for w in variances() {
                let fac = factor_loose_morphism(&limit_of_arrow(w, f).unwrap()).unwrap();
                let v = certify_factorization(&fac, Cap::default()).unwrap();
                assert!(v.is_ok(), "{w} {}: {v}", f.name);
            }
        }
    }

    #[test]
    fn identity_pullback_is_the_limit_itself() {
        let a = Arc::new(chain(2));
        let b = Arc::new(chain(3));
        let f = monotone(&a, &b, &[0, 2]).unwrap();
        let marking = CatWorld::new(vec![], Cap::default());
        for w in variances() {
            let lim = limit_of_arrow(w, &f).unwrap();
            let sq = tight_pullback_along_projection(&lim, &Functor::identity(a.clone()), &marking).unwrap();
            assert!(sq.certificate.is_ok(), "{}", sq.certificate);
            assert!(sq.t.is_identity() || sq.t.obj_table().iter().enumerate().all(|(i, &o)| i == o));
        }
    }

    #[test]
    fn pullback_along_a_point_keeps_matching_objects() {
        let a = Arc::new(chain(2));
        let b = Arc::new(chain(3));
        let f = monotone(&a, &b, &[0, 2]).unwrap();
        let one = Arc::new(terminal());
        let g = monotone(&one, &a, &[1]).unwrap();
        let lim = limit_of_arrow(Variance::Lax, &f).unwrap();
        let sq = tight_pullback_along_projection(&lim, &g, &CatWorld::new(vec![], Cap::default())).unwrap();
        assert!(sq.certificate.is_ok(), "{}", sq.certificate);
        let expected = lim.objects().iter().filter(|o| o.a == 1).count();
        assert_eq!(sq.limit.apex.num_objects(), expected);
        let loose = CatWorld::new(vec![], Cap::default()).with_tightness(|_| false);
        assert!(tight_pullback_along_projection(&lim, &g, &loose).is_err());
    }

    #[test]
    fn span_composition_certifies_on_chains() {
        let a = Arc::new(chain(2));
        let b = Arc::new(chain(3));
        let f = monotone(&a, &b, &[0, 1]).unwrap();
        let g = monotone(&b, &a, &[0, 1, 1]).unwrap();
        for w in variances() {
            let ff = factor_loose_morphism(&limit_of_arrow(w, &f).unwrap()).unwrap();
            let fg = factor_loose_morphism(&limit_of_arrow(w, &g).unwrap()).unwrap();
            let comp = compose_w_spans(&ff, &fg, Cap::default()).unwrap();
            assert!(comp.certificate.is_ok(), "{w}: {}", comp.certificate);
        }
    }

    #[test]
    fn identity_spans_compose_to_an_isomorphic_presentation() {
        let a = Arc::new(chain(2));
        let id = Functor::identity(a);
        let fac = factor_loose_morphism(&limit_of_arrow(Variance::Lax, &id).unwrap()).unwrap();
        let comp = compose_w_spans(&fac, &fac, Cap::default()).unwrap();
        assert!(comp.certificate.is_ok());
        assert!(!are_isomorphic(&comp.pullback.apex, &comp.factorization_gf.limit.apex, Cap::default()).unwrap() || comp.k.obj_table().len() == comp.pullback.apex.num_objects());
    }
}
