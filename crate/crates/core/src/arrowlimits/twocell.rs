//! Representing a 2-cell `α: f ⇒ g` between loose morphisms by tight data
//! on the spans of `f` and `g`.

use super::comma::CommaObj;
use super::span::{pullback, CatReflection, Pullback, SpanFactorization};
use crate::check::Validation;
use crate::f2cat::calculus::{is_reflection_morphism, validate_w_reflection, Reflection};
use crate::fincat::{compose_functors, enumerate_nat_trans, vertical, whisker_left, whisker_right, CatWorld, Functor, Mor, NatTransformation};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// Lax representation: a tight `c_α: C_f → C_g` and its mate `m_α`.
#[derive(Clone, Debug)]
pub struct LaxRep {
    pub c: Functor,
    pub m: NatTransformation,
}

/// Pseudo representation through the pullback `K_{f,g}` of `p_g` along `p_f`.
#[derive(Clone, Debug)]
pub struct PseudoRep {
    pub k: Pullback,
    pub s: Functor,
    pub t: Functor,
    pub u: Functor,
    pub v: Functor,
    pub theta: NatTransformation,
    pub reflection: CatReflection,
    pub rho: NatTransformation,
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum TwoCellShape {
    Lax(LaxRep),
    Pseudo(PseudoRep),
}

#[derive(Clone, Debug)]
pub struct TwoCellRep {
    pub variance: Variance,
    pub alpha: NatTransformation,
    pub shape: TwoCellShape,
    pub certificate: Validation,
}

pub fn represent_2cell(w: Variance, alpha: &NatTransformation, fac_f: &SpanFactorization, fac_g: &SpanFactorization, cap: Cap) -> Result<TwoCellRep> {
    if alpha.source() != &fac_f.limit.f || alpha.target() != &fac_g.limit.f {
        return Err(Error::boundary(format!("{} is not a 2-cell between the factorized morphisms", alpha.name)));
    }
    if fac_f.limit.variance != w || fac_g.limit.variance != w {
        return Err(Error::precondition("factorizations were built for a different variance"));
    }
    let (shape, certificate) = match w {
        Variance::Lax => lax(alpha, fac_f, fac_g)?,
        Variance::Pseudo => pseudo(alpha, fac_f, fac_g, cap)?,
        other => return Err(Error::precondition(format!("2-cell representation is defined for l and p, not {other}"))),
    };
    Ok(TwoCellRep { variance: w, alpha: alpha.clone(), shape, certificate })
}

fn lax(alpha: &NatTransformation, fac_f: &SpanFactorization, fac_g: &SpanFactorization) -> Result<(TwoCellShape, Validation)> {
    let (lf, lg) = (&fac_f.limit, &fac_g.limit);
    let b = lf.cod();
    let d = &lf.apex;
    let objs: Vec<CommaObj> = lf.objects().iter().map(|o| CommaObj { alpha: b.comp(alpha.at(o.a), o.alpha), ..*o }).collect();
    let mors: Vec<(Mor, Mor)> = (0..d.num_morphisms()).map(|m| lf.comma_mor(m)).collect();
    let c = lg.functor_into("c_alpha", d, &objs, &mors)?;
    let m = whisker_right(&fac_g.eta, &compose_functors(&c, &fac_f.r)?)?.named("m_alpha");

    let mut v = Validation::new(format!("lax representation of {}", alpha.name));
    v.require(compose_functors(&lg.p, &c)? == lf.p, "p_f = p_g·c_α", Vec::<String>::new);
    v.require(compose_functors(&lg.q, &c)? == lf.q, "q_f = q_g·c_α", Vec::<String>::new);
    let left = vertical(&whisker_right(alpha, &lf.p)?, &lf.lambda)?;
    v.require(left.components() == whisker_right(&lg.lambda, &c)?.components(), "(α·p_f)∘λ_f = λ_g·c_α", Vec::<String>::new);
    let qm = whisker_left(&lg.q, &m)?;
    v.require(qm.components() == alpha.components(), "q_g·m_α = α", || [format!("{:?}", qm.components())]);
    Ok((TwoCellShape::Lax(LaxRep { c, m }), v))
}

fn pseudo(alpha: &NatTransformation, fac_f: &SpanFactorization, fac_g: &SpanFactorization, cap: Cap) -> Result<(TwoCellShape, Validation)> {
    let (lf, lg) = (&fac_f.limit, &fac_g.limit);
    let a = lf.dom();
    let k = pullback(&format!("K({},{})", lf.f.name, lg.f.name), &lf.p, &lg.p)?;
    let (s, t) = (k.pr1.clone().named("s"), k.pr2.clone().named("t"));
    let u = compose_functors(&lf.p, &s)?.named("u");
    let v = k.pair("v", &fac_f.r, &fac_g.r)?;
    let vu = compose_functors(&v, &u)?;
    let theta = k.pair2("theta", &Functor::identity(k.apex.clone()), &vu, &whisker_right(&fac_f.eta, &s)?, &whisker_right(&fac_g.eta, &t)?)?;
    let reflection = Reflection::new(Variance::Pseudo, u.clone(), v.clone(), theta.clone());

    let world = CatWorld::new(vec![a.clone(), lf.apex.clone(), lg.apex.clone(), k.apex.clone()], cap);
    let rv = validate_w_reflection(&world, &reflection)?;
    if !rv.is_ok() {
        return Err(Error::consistency(format!("v is not an equivalence on this fixture: {rv}")));
    }
    let mut cert = Validation::new(format!("pseudo representation of {}", alpha.name));
    let id_a = Functor::identity(a.clone());
    cert.require(is_reflection_morphism(&world, &s, &id_a, &reflection, &fac_f.reflection)?.holds(), "(s,1) is a morphism of p-reflections", Vec::<String>::new);
    cert.require(is_reflection_morphism(&world, &t, &id_a, &reflection, &fac_g.reflection)?.holds(), "(t,1) is a morphism of p-reflections", Vec::<String>::new);

    let (qs, qt) = (compose_functors(&lf.q, &s)?, compose_functors(&lg.q, &t)?);
    let found: Vec<NatTransformation> =
        enumerate_nat_trans(&qs, &qt, cap)?.into_iter().filter(|rho| whisker_right(rho, &v).map(|x| x.components() == alpha.components()).unwrap_or(false)).collect();
    cert.require(found.len() == 1, "ρ_α exists uniquely", || [format!("{} candidates", found.len())]);
    let rho = found.into_iter().next().ok_or_else(|| Error::consistency("no ρ_α with ρ_α·v = α"))?.named("rho_alpha");
    Ok((TwoCellShape::Pseudo(PseudoRep { k, s, t, u, v, theta, reflection, rho }), cert))
}

impl TwoCellRep {
    pub fn lax(&self) -> Option<&LaxRep> {
        match &self.shape {
            TwoCellShape::Lax(l) => Some(l),
            TwoCellShape::Pseudo(_) => None,
        }
    }

    pub fn pseudo(&self) -> Option<&PseudoRep> {
        match &self.shape {
            TwoCellShape::Pseudo(p) => Some(p),
            TwoCellShape::Lax(_) => None,
        }
    }

    pub fn apex_objects(&self) -> usize {
        match &self.shape {
            TwoCellShape::Lax(l) => l.c.dom().num_objects(),
            TwoCellShape::Pseudo(p) => p.k.apex.num_objects(),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::arrowlimits::{factor_loose_morphism, limit_of_arrow};
    use crate::fincat::fixtures::{chain, monotone};

    fn fac(w: Variance, f: &Functor) -> SpanFactorization {
        factor_loose_morphism(&limit_of_arrow(w, f).unwrap()).unwrap()
    }

    #[test]
    fn identity_two_cell_is_represented_by_the_identity() {
        let a = Arc::new(chain(2));
        let b = Arc::new(chain(3));
        let f = monotone(&a, &b, &[0, 2]).unwrap();
        let ff = fac(Variance::Lax, &f);
        let rep = represent_2cell(Variance::Lax, &NatTransformation::identity(&f), &ff, &ff, Cap::default()).unwrap();
        assert!(rep.certificate.is_ok(), "{}", rep.certificate);
        assert!(rep.lax().unwrap().c == Functor::identity(ff.limit.apex.clone()));
    }

    #[test]
    fn every_two_cell_between_chain_maps_is_represented() {
        let a = Arc::new(chain(2));
        let b = Arc::new(chain(3));
        let maps = [[0, 0], [0, 1], [0, 2], [1, 1], [1, 2], [2, 2]];
        for x in &maps {
            for y in &maps {
                let (f, g) = (monotone(&a, &b, x).unwrap(), monotone(&a, &b, y).unwrap());
                for alpha in enumerate_nat_trans(&f, &g, Cap::default()).unwrap() {
                    for w in [Variance::Lax, Variance::Pseudo] {
                        let rep = represent_2cell(w, &alpha, &fac(w, &f), &fac(w, &g), Cap::default()).unwrap();
                        assert!(rep.certificate.is_ok(), "{w} {x:?}=>{y:?}: {}", rep.certificate);
                    }
                }
            }
        }
    }

    #[test]
    fn colax_is_rejected() {
        let a = Arc::new(chain(2));
        let f = Functor::identity(a);
        let ff = fac(Variance::Colax, &f);
        assert!(matches!(represent_2cell(Variance::Colax, &NatTransformation::identity(&f), &ff, &ff, Cap::default()), Err(Error::Precondition(_))));
    }
}
