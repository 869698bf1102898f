//! Eilenberg–Moore extensions and the monadicity check.
//!
//! Given `H: A → B` into a 2-category and a left adjoint `F ⊣ H_τ` of its
//! tight part, the comparison `E: A_τ → T-Alg_s` for `T = H_τF` is the usual
//! one, `Y ↦ (HY, Hε_Y)`. Its extension `E_w: A → T-Alg_w` over `B` is the
//! filler of the square formed by `j_w∘E`, `H` and `U`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::filler::{compare_ffunctors, construct_filler, Filler, FillerProblem};
use super::monad::{validate_2monad, Fin2Monad, TAlgebra};
use super::talg::{build_talg, TAlg};
use crate::check::Validation;
use crate::f2cat::{check_f_equivalence, check_limit_datum, compose_ffunctors, is_w_doctrinal, require_limit_data, tight_inclusion, validate_ffunctor, FCategory, FFunctor, LimitDatum};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// A left adjoint `F: B → A_τ` to `H_τ` with unit and counit components.
#[derive(Clone, Debug)]
pub struct AdjointData {
    pub left: FFunctor,
    /// `η_X: X → H_τFX` in `B`.
    pub unit: Vec<usize>,
    /// `ε_Y: FH_τY → Y` in `A_τ`.
    pub counit: Vec<usize>,
}

/// Shapes, 2-naturality of unit and counit, and both triangle identities.
pub fn validate_adjoint_data(h_tau: &FFunctor, d: &AdjointData) -> Result<Validation> {
    let (at, b) = (h_tau.dom().ambient(), h_tau.cod().ambient());
    let f = &d.left;
    let mut v = Validation::new(format!("{} ⊣ {}", f.name, h_tau.name));
    v.absorb("F: ", validate_ffunctor(f).validation);
    if d.unit.len() != b.n0() || d.counit.len() != at.n0() || d.unit.iter().any(|&g| g >= b.n1()) || d.counit.iter().any(|&g| g >= at.n1()) {
        v.fail("component-count", [f.name.clone()]);
        return Ok(v);
    }
    let hf = compose_ffunctors(h_tau, f)?;
    let fh = compose_ffunctors(f, h_tau)?;
    for x in 0..b.n0() {
        let e = d.unit[x];
        v.require(b.src1(e) == x && b.tgt1(e) == hf.ob(x), "unit-boundary", || [b.obj_name(x)]);
    }
    for y in 0..at.n0() {
        let e = d.counit[y];
        v.require(at.src1(e) == fh.ob(y) && at.tgt1(e) == y, "counit-boundary", || [at.obj_name(y)]);
    }
    if !v.is_ok() {
        return Ok(v);
    }
    for g in 0..b.n1() {
        let (x, y) = (b.src1(g), b.tgt1(g));
        v.require(b.comp1(hf.on1(g), d.unit[x]) == b.comp1(d.unit[y], g), "unit-naturality", || [b.name1(g)]);
    }
    for a in 0..b.n2() {
        let g = b.src2(a);
        let (x, y) = (b.src1(g), b.tgt1(g));
        v.require(b.rwhisk(hf.on2(a), d.unit[x]) == b.lwhisk(d.unit[y], a), "unit-2-naturality", || [b.name2(a)]);
    }
    for g in 0..at.n1() {
        let (x, y) = (at.src1(g), at.tgt1(g));
        v.require(at.comp1(g, d.counit[x]) == at.comp1(d.counit[y], fh.on1(g)), "counit-naturality", || [at.name1(g)]);
    }
    for a in 0..at.n2() {
        let g = at.src2(a);
        let (x, y) = (at.src1(g), at.tgt1(g));
        v.require(at.rwhisk(a, d.counit[x]) == at.lwhisk(d.counit[y], fh.on2(a)), "counit-2-naturality", || [at.name2(a)]);
    }
    for y in 0..at.n0() {
        let hy = h_tau.ob(y);
        v.require(b.comp1(h_tau.on1(d.counit[y]), d.unit[hy]) == b.id1(hy), "triangle Hε·ηH", || [at.obj_name(y)]);
    }
    for x in 0..b.n0() {
        let fx = f.ob(x);
        v.require(at.comp1(d.counit[fx], f.on1(d.unit[x])) == at.id1(fx), "triangle εF·Fη", || [b.obj_name(x)]);
    }
    Ok(v)
}

/// `T = H_τF` with `μ = H_τεF`.
pub fn induced_monad(h_tau: &FFunctor, d: &AdjointData) -> Result<Fin2Monad> {
    let t = compose_ffunctors(h_tau, &d.left)?.named("T");
    let mu = (0..h_tau.cod().ambient().n0()).map(|x| h_tau.on1(d.counit[d.left.ob(x)])).collect();
    Fin2Monad::new(format!("{}{}", h_tau.name, d.left.name), h_tau.cod().clone(), t, d.unit.clone(), mu)
}

/// Maps from `T-Alg_w` indices to `T-Alg_s` indices.
fn strict_indices(talg: &TAlg) -> (HashMap<usize, usize>, HashMap<usize, usize>) {
    let one = talg.j.one_table().iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let two = talg.j.two_table().iter().enumerate().map(|(i, &x)| (x, i)).collect();
    (one, two)
}

fn missing(what: String) -> Error {
    Error::consistency(format!("{what} is missing from T-Alg"))
}

/// The strict morphism `(f, 1)` between two algebras, as an index into `T-Alg_s`.
fn strict_morphism(talg: &TAlg, one: &HashMap<usize, usize>, src: TAlgebra, tgt: TAlgebra, f: usize) -> Result<usize> {
    let c = talg.monad.base().ambient();
    let fbar = c.id2(c.comp1(f, src.action));
    talg.morphism_index(src, tgt, f, fbar).and_then(|i| one.get(&i).copied()).ok_or_else(|| missing(format!("strict morphism {}", c.name1(f))))
}

/// The comparison `E: A_τ → T-Alg_s`, `Y ↦ (H_τY, H_τε_Y)`.
pub fn comparison(h_tau: &FFunctor, d: &AdjointData, talg: &TAlg) -> Result<FFunctor> {
    let at = h_tau.dom().ambient();
    let c = talg.monad.base().ambient();
    let (one, two) = strict_indices(talg);
    let alg = |y: usize| TAlgebra { carrier: h_tau.ob(y), action: h_tau.on1(d.counit[y]) };
    let obj = (0..at.n0())
        .map(|y| talg.algebra_index(alg(y)).ok_or_else(|| missing(format!("algebra ({}, {})", c.obj_name(alg(y).carrier), c.name1(alg(y).action)))))
        .collect::<Result<Vec<_>>>()?;
    let ones = (0..at.n1()).map(|g| strict_morphism(talg, &one, alg(at.src1(g)), alg(at.tgt1(g)), h_tau.on1(g))).collect::<Result<Vec<_>>>()?;
    let twos = (0..at.n2())
        .map(|a| {
            let (src, tgt) = (talg.j.on1(ones[at.src2(a)]), talg.j.on1(ones[at.tgt2(a)]));
            talg.cell_index(h_tau.on2(a), src, tgt).and_then(|i| two.get(&i).copied()).ok_or_else(|| missing(format!("algebra 2-cell {}", c.name2(h_tau.on2(a)))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FFunctor::new("E", h_tau.dom().clone(), talg.strict.clone(), obj, ones, twos)?)
}

/// The free-algebra adjunction `F ⊣ U_τ` for an already built `T-Alg_w`.
pub fn free_adjunction(talg: &TAlg) -> Result<AdjointData> {
    let m = &talg.monad;
    let c = m.base().ambient();
    let t = m.functor();
    let (one, two) = strict_indices(talg);
    let free = |x: usize| TAlgebra { carrier: t.ob(x), action: m.mu(x) };
    let obj = (0..c.n0()).map(|x| talg.algebra_index(free(x)).ok_or_else(|| missing(format!("free algebra on {}", c.obj_name(x))))).collect::<Result<Vec<_>>>()?;
    let ones = (0..c.n1()).map(|f| strict_morphism(talg, &one, free(c.src1(f)), free(c.tgt1(f)), t.on1(f))).collect::<Result<Vec<_>>>()?;
    let twos = (0..c.n2())
        .map(|a| {
            let (src, tgt) = (talg.j.on1(ones[c.src2(a)]), talg.j.on1(ones[c.tgt2(a)]));
            talg.cell_index(t.on2(a), src, tgt).and_then(|i| two.get(&i).copied()).ok_or_else(|| missing(format!("free 2-cell on {}", c.name2(a))))
        })
        .collect::<Result<Vec<_>>>()?;
    let left = FFunctor::new("F", m.base().clone(), talg.strict.clone(), obj, ones, twos)?;
    let counit = talg.algebras.iter().map(|&alg| strict_morphism(talg, &one, free(alg.carrier), alg, alg.action)).collect::<Result<Vec<_>>>()?;
    Ok(AdjointData { left, unit: m.eta_table().to_vec(), counit })
}

/// `E`, `E_w` and everything built on the way.
#[derive(Clone, Debug)]
pub struct EmExtension {
    pub monad: Fin2Monad,
    pub talg: TAlg,
    pub e: FFunctor,
    pub e_w: FFunctor,
    pub filler: Filler,
    pub certificate: Validation,
}

struct Comparison {
    j: FFunctor,
    monad: Fin2Monad,
    talg: TAlg,
    e: FFunctor,
}

fn build_comparison(a: &Arc<FCategory>, h: &FFunctor, d: &AdjointData, w: Variance, cap: Cap) -> Result<Comparison> {
    if !h.cod().is_all_tight() {
        return Err(Error::precondition(format!("the codomain of `{}` must be all tight", h.name)));
    }
    let h = h.rebased(a.clone(), h.cod().clone())?;
    let (a_tau, j) = tight_inclusion(a);
    let h_tau = compose_ffunctors(&h, &j)?.named("H_tau");
    let left = d.left.rebased(h.cod().clone(), a_tau.clone())?;
    let data = AdjointData { left, ..d.clone() };
    let adj = validate_adjoint_data(&h_tau, &data)?;
    if !adj.is_ok() {
        return Err(Error::Invalid(adj));
    }
    let monad = induced_monad(&h_tau, &data)?;
    let mv = validate_2monad(&monad);
    if !mv.is_ok() {
        return Err(Error::Invalid(mv));
    }
    let talg = build_talg(&monad, w, cap)?;
    let e = comparison(&h_tau, &data, &talg)?;
    Ok(Comparison { j, monad, talg, e })
}

/// Extends the comparison to `E_w: A → T-Alg_w` by the orthogonality filler.
pub fn em_extension(a: &Arc<FCategory>, h: &FFunctor, d: &AdjointData, w: Variance, cap: Cap) -> Result<EmExtension> {
    let cmp = build_comparison(a, h, d, w, cap)?;
    let limits = require_limit_data(a, w, cap)?;
    let r = compose_ffunctors(&cmp.talg.j, &cmp.e)?;
    let h = h.rebased(a.clone(), cmp.talg.u.cod().clone())?;
    let prob = FillerProblem::new(w, a.clone(), limits, &r, &h, &cmp.talg.u, cap)?;
    let filler = construct_filler(&prob, cap)?;
    let e_w = filler.k.clone().named("E_w");
    let mut certificate = Validation::new(format!("extension of E along {}", cmp.j.name));
    certificate.absorb("E: ", validate_ffunctor(&cmp.e).validation);
    certificate.absorb("filler: ", filler.certificate.clone());
    compare_ffunctors(&mut certificate, "U∘E_w = H", &compose_ffunctors(&cmp.talg.u, &e_w)?, &h);
    compare_ffunctors(&mut certificate, "E_w∘j = j_w∘E", &compose_ffunctors(&e_w, &prob.j)?, &compose_ffunctors(&cmp.talg.j, &cmp.e)?.rebased(prob.a_tau.clone(), cmp.talg.fcat.clone())?);
    Ok(EmExtension { monad: cmp.monad, talg: cmp.talg, e: cmp.e, e_w, filler, certificate })
}

/// The inclusion `T-Alg_p → T-Alg_w` of pseudo morphisms, for `w ∈ {p, l, c}`.
pub fn talg_inclusion(p: &TAlg, w: &TAlg) -> Result<FFunctor> {
    if p.variance != Variance::Pseudo {
        return Err(Error::precondition("the domain of the inclusion must be T-Alg_p"));
    }
    let c = p.monad.base().ambient();
    let obj = p.algebras.iter().map(|&alg| w.algebra_index(alg).ok_or_else(|| missing("algebra".into()))).collect::<Result<Vec<_>>>()?;
    let one = p
        .morphisms
        .iter()
        .map(|x| {
            let fbar = if w.variance == Variance::Colax { c.inverse2(x.fbar).ok_or_else(|| Error::consistency("pseudo morphism without inverse"))? } else { x.fbar };
            w.morphism_index(x.src, x.tgt, x.f, fbar).ok_or_else(|| missing(format!("pseudo morphism {}", c.name1(x.f))))
        })
        .collect::<Result<Vec<_>>>()?;
    let two = p.cells.iter().map(|a| w.cell_index(a.alpha, one[a.src], one[a.tgt]).ok_or_else(|| missing(format!("2-cell {}", c.name2(a.alpha))))).collect::<Result<Vec<_>>>()?;
    Ok(FFunctor::new(format!("j_p{}", w.variance), p.fcat.clone(), w.fcat.clone(), obj, one, two)?)
}

/// The square `j_w∘E_p` against `E_w∘incl`.
#[derive(Clone, Debug)]
pub struct NaturalityInstance {
    pub incl: FFunctor,
    pub e_p: FFunctor,
    pub e_w: FFunctor,
    pub j_w: FFunctor,
}

pub fn check_naturality(inst: &NaturalityInstance) -> Result<Validation> {
    let mut v = Validation::new("naturality of the extension");
    let left = compose_ffunctors(&inst.j_w, &inst.e_p)?;
    let right = compose_ffunctors(&inst.e_w, &inst.incl)?;
    compare_ffunctors(&mut v, "j_w∘E_p = E_w∘incl", &left, &right);
    Ok(v)
}

/// The naturality square for `T-Alg_p ⊆ T-Alg_w` fed back through
/// [`em_extension`] with `H = U`.
pub fn naturality_loop(m: &Fin2Monad, w: Variance, cap: Cap) -> Result<(NaturalityInstance, Validation)> {
    let tp = build_talg(m, Variance::Pseudo, cap)?;
    let tw = build_talg(m, w, cap)?;
    let incl = talg_inclusion(&tp, &tw)?;
    let ext_p = em_extension(&tp.fcat, &tp.u, &free_adjunction(&tp)?, Variance::Pseudo, cap)?;
    let ext_w = em_extension(&tw.fcat, &tw.u, &free_adjunction(&tw)?, w, cap)?;
    let j_w = talg_inclusion(&ext_p.talg, &ext_w.talg)?;
    let inst = NaturalityInstance { incl, e_p: ext_p.e_w, e_w: ext_w.e_w, j_w };
    let v = check_naturality(&inst)?;
    Ok((inst, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Iso,
    Equivalence,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonadicityReport {
    pub variance: Variance,
    pub conditions: Vec<Condition>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub e_w: Option<FFunctor>,
}

fn condition(name: &str, r: Result<String>) -> Condition {
    match r {
        Ok(detail) => Condition { name: name.into(), pass: true, detail },
        Err(e) => Condition { name: name.into(), pass: false, detail: e.to_string() },
    }
}

fn image_datum(f: &FFunctor, d: &LimitDatum) -> LimitDatum {
    LimitDatum { f: f.on1(d.f), apex: f.ob(d.apex), p: f.on1(d.p), q: f.on1(d.q), lambda: f.on2(d.lambda) }
}

/// Checks the four hypotheses independently, then builds `E_w` and decides
/// whether it is an isomorphism or an equivalence.
pub fn check_monadicity(h: &FFunctor, w: Variance, d: &AdjointData, cap: Cap) -> Result<MonadicityReport> {
    if w == Variance::Strict {
        return Err(Error::precondition("monadicity is checked for w in {l, p, c}"));
    }
    let a = h.dom().clone();
    let mut conditions = Vec::new();
    let mut e_iso = false;
    conditions.push(condition(
        "(1) comparison E is a 2-equivalence",
        build_comparison(&a, h, d, w, cap).and_then(|cmp| {
            let eq = check_f_equivalence(&cmp.e);
            e_iso = eq.is_isomorphism;
            match (eq.is_isomorphism, eq.is_equivalence) {
                (true, _) => Ok("isomorphism".into()),
                (false, true) => Ok("equivalence".into()),
                _ => Err(Error::Invalid(eq.validation)),
            }
        }),
    ));
    let a_limits = require_limit_data(&a, w, cap);
    conditions.push(condition("(2) A has loose-limit data", a_limits.as_ref().map(|l| format!("{} cones", l.len())).map_err(|e| Error::hypothesis(e.to_string()))));
    conditions.push(condition("(3) B has limits of arrows", require_limit_data(h.cod(), w, cap).map(|l| format!("{} cones", l.len()))));
    conditions.push(condition(
        "(4) H is w-doctrinal",
        is_w_doctrinal(h, w, false).and_then(|r| if r.verdict { Ok(format!("{} reflections, {} squares", r.w_refl.checked, r.w_morph.checked)) } else { Err(Error::hypothesis("doctrinality sub-checks failed")) }),
    ));
    let mut verdict = Verdict::Fail;
    let mut e_w = None;
    if conditions.iter().all(|c| c.pass) {
        let built = em_extension(&a, h, d, w, cap);
        let created = built.as_ref().map_err(|e| Error::consistency(e.to_string())).and_then(|ext| {
            let limits = a_limits.as_ref().map_err(|e| Error::consistency(e.to_string()))?;
            for dt in limits {
                if !check_limit_datum(&ext.talg.fcat, &image_datum(&ext.e_w, dt), w, cap)?.is_ok() {
                    return Err(Error::consistency(format!("E_w does not preserve the limit over {}", a.ambient().name1(dt.f))));
                }
                if !check_limit_datum(h.cod(), &image_datum(h, dt), w, cap)?.is_ok() {
                    return Err(Error::consistency(format!("H does not send the limit over {} to a limit", a.ambient().name1(dt.f))));
                }
            }
            Ok(format!("{} cones transported", limits.len()))
        });
        conditions.push(condition("H creates the limits", created));
        if let Ok(ext) = built {
            let eq = check_f_equivalence(&ext.e_w);
            verdict = match (e_iso && eq.is_isomorphism, eq.is_equivalence) {
                (true, _) => Verdict::Iso,
                (false, true) => Verdict::Equivalence,
                _ => Verdict::Fail,
            };
            let ok = ext.certificate.is_ok();
            conditions.push(condition("extension certificate", if ok { Ok(ext.certificate.to_string()) } else { Err(Error::Invalid(ext.certificate.clone())) }));
            if !ok {
                verdict = Verdict::Fail;
            }
            e_w = Some(ext.e_w);
        }
    }
    Ok(MonadicityReport { variance: w, conditions, verdict, e_w })
}

/// `check_monadicity` on `U: T-Alg_w → C` with the free-algebra adjunction.
pub fn monadicity_loop(talg: &TAlg, cap: Cap) -> Result<MonadicityReport> {
    check_monadicity(&talg.u, talg.variance, &free_adjunction(talg)?, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2cat::fixtures::{arrow_2cat, parallel_2cells};
    use crate::monadfiller::fixtures::{arrow_reflection, closure_chain, monad_fixtures, wedge_reflection};

    #[test]
    fn identity_adjunction_extends_to_the_canonical_identification() {
        let m = Fin2Monad::identity(closure_chain().unwrap().base().clone()).unwrap();
        let t = build_talg(&m, Variance::Lax, Cap::default()).unwrap();
        let b = m.base().clone();
        let id = FFunctor::identity(b.clone());
        let (tau, _) = tight_inclusion(&b);
        let left = FFunctor::new("F", b.clone(), tau, id.obj_table().to_vec(), id.one_table().to_vec(), id.two_table().to_vec()).unwrap();
        let ids = b.ambient().identities1().to_vec();
        let ext = em_extension(&b, &id, &AdjointData { left, unit: ids.clone(), counit: ids }, Variance::Lax, Cap::default()).unwrap();
        assert!(ext.certificate.is_ok(), "{}", ext.certificate);
        assert!(check_f_equivalence(&ext.e_w).is_isomorphism);
        assert_eq!(ext.talg.fcat.ambient().tables().comp1, t.fcat.ambient().tables().comp1);
    }

    #[test]
    fn monadicity_loop_is_iso_for_every_buildable_fixture() {
        let mut nontrivial = 0;
        for m in monad_fixtures() {
            for w in [Variance::Lax, Variance::Pseudo, Variance::Colax] {
                let Ok(t) = build_talg(&m, w, Cap::default()) else { continue };
                let r = monadicity_loop(&t, Cap::default()).unwrap();
                assert_eq!(r.verdict, Verdict::Iso, "{} {w}: {:?}", m.name, r.conditions);
                nontrivial += usize::from(!m.is_identity());
            }
        }
        assert!(nontrivial >= 4);
    }

    #[test]
    fn naturality_squares_commute() {
        for m in [closure_chain().unwrap(), arrow_reflection().unwrap(), Fin2Monad::identity(std::sync::Arc::new(FCategory::all_tight(arrow_2cat()))).unwrap()] {
            for w in [Variance::Lax, Variance::Colax] {
                let (_, v) = naturality_loop(&m, w, Cap::default()).unwrap();
                assert!(v.is_ok(), "{} {w}: {v}", m.name);
            }
        }
    }

    #[test]
    fn mismatched_extensions_are_witnessed() {
        let m = closure_chain().unwrap();
        let (mut inst, _) = naturality_loop(&m, Variance::Lax, Cap::default()).unwrap();
        let d = inst.e_w.dom().clone();
        let c = inst.e_w.cod().clone();
        let mut obj = inst.e_w.obj_table().to_vec();
        obj.swap(0, 1);
        inst.e_w = FFunctor::new("E_w'", d, c, obj, inst.e_w.one_table().to_vec(), inst.e_w.two_table().to_vec()).unwrap();
        let v = check_naturality(&inst).unwrap();
        assert!(v.has("j_w∘E_p = E_w∘incl"));
        assert!(v.violations[0].witness[0].starts_with("object"));
    }

    #[test]
    fn pseudo_extension_over_the_wedge() {
        let m = wedge_reflection().unwrap();
        let t = build_talg(&m, Variance::Pseudo, Cap::default()).unwrap();
        let r = monadicity_loop(&t, Cap::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Iso, "{:?}", r.conditions);
    }

    #[test]
    fn a_local_faithfulness_defect_fails_condition_4() {
        let par = parallel_2cells();
        let tight = (0..par.n1()).map(|f| par.name1(f) != "b").collect();
        let a = Arc::new(FCategory::new(par, tight).unwrap());
        let b = Arc::new(FCategory::all_tight(arrow_2cat()));
        let h = FFunctor::new("H", a.clone(), b.clone(), vec![0, 1], vec![0, 1, 2, 2], vec![0, 1, 2, 2, 2, 2]).unwrap();
        assert!(!validate_ffunctor(&h).locally_faithful);
        let (tau, _) = tight_inclusion(&a);
        let left = FFunctor::new("F", b.clone(), tau, vec![0, 1], vec![0, 1, 2], vec![0, 1, 2]).unwrap();
        let d = AdjointData { left, unit: vec![0, 1], counit: vec![0, 1] };
        let r = check_monadicity(&h, Variance::Lax, &d, Cap::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let c4 = r.conditions.iter().find(|c| c.name.starts_with("(4)")).unwrap();
        assert!(!c4.pass, "{:?}", r.conditions);
        assert!(r.conditions[0].pass, "{:?}", r.conditions);
    }
}
