//! The F-category `T-Alg_w` of strict algebras, w-morphisms and algebra
//! 2-cells, with its forgetful F-functor `U` and the inclusion of the strict
//! part.

use std::collections::HashMap;
use std::sync::Arc;

use super::monad::{compose_w_morphisms, enumerate_algebras, enumerate_w_morphisms, validate_2monad, validate_algebra_2cell, Fin2Monad, TAlgebra, WAlgebraMorphism};
use crate::check::Validation;
use crate::f2cat::{
    check_limit_datum, is_w_doctrinal, require_limit_data, tight_inclusion, validate_2category, validate_ffunctor, validate_loose_limit_data, Cell1, Cell2,
    DoctrinalReport, FCategory, FFunctor, Fin2Category, LimitDatum, TwoRules,
};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// An algebra 2-cell: a base 2-cell `α` between the underlying 1-cells of
/// two parallel w-morphisms, given by their indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraCell {
    pub alpha: usize,
    pub src: usize,
    pub tgt: usize,
}

/// `T-Alg_w` together with `U`, `j_w` and lifted limit data.
#[derive(Clone, Debug)]
pub struct TAlg {
    pub monad: Fin2Monad,
    pub variance: Variance,
    pub algebras: Vec<TAlgebra>,
    pub morphisms: Vec<WAlgebraMorphism>,
    pub cells: Vec<AlgebraCell>,
    pub fcat: Arc<FCategory>,
    /// `U: T-Alg_w → C`.
    pub u: FFunctor,
    /// `T-Alg_s` as an all-tight F-category.
    pub strict: Arc<FCategory>,
    /// `j_w: T-Alg_s → T-Alg_w`.
    pub j: FFunctor,
    pub base_limits: Vec<LimitDatum>,
    pub limits: Vec<LimitDatum>,
    pub certificate: Validation,
    pub doctrinal: DoctrinalReport,
}

impl TAlg {
    pub fn algebra_index(&self, alg: TAlgebra) -> Option<usize> {
        self.algebras.iter().position(|&a| a == alg)
    }

    /// Index of the w-morphism with the given data.
    pub fn morphism_index(&self, src: TAlgebra, tgt: TAlgebra, f: usize, fbar: usize) -> Option<usize> {
        self.morphisms.iter().position(|m| m.src == src && m.tgt == tgt && m.f == f && m.fbar == fbar)
    }

    pub fn cell_index(&self, alpha: usize, src: usize, tgt: usize) -> Option<usize> {
        self.cells.iter().position(|c| *c == AlgebraCell { alpha, src, tgt })
    }
}

fn dedupe(names: Vec<String>) -> Vec<String> {
    let mut seen: HashMap<String, usize> = HashMap::new();
    names
        .into_iter()
        .map(|n| {
            let k = seen.entry(n.clone()).or_insert(0);
            *k += 1;
            if *k == 1 {
                n
            } else {
                format!("{n}#{k}")
            }
        })
        .collect()
}

/// The raw 2-category of algebras, for w in `{l, p}`.
struct Assembled {
    algebras: Vec<TAlgebra>,
    morphisms: Vec<WAlgebraMorphism>,
    cells: Vec<AlgebraCell>,
    ambient: Fin2Category,
    tight: Vec<bool>,
}

fn assemble(m: &Fin2Monad, w: Variance, cap: Cap) -> Result<Assembled> {
    let c = m.base().ambient();
    let algebras = enumerate_algebras(m, cap)?;
    let mut morphisms = Vec::new();
    for &x in &algebras {
        for &y in &algebras {
            morphisms.extend(enumerate_w_morphisms(m, x, y, w, cap)?);
        }
    }
    let alg_ix: HashMap<TAlgebra, usize> = algebras.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let mor_ix: HashMap<(TAlgebra, TAlgebra, usize, usize), usize> = morphisms.iter().enumerate().map(|(i, x)| ((x.src, x.tgt, x.f, x.fbar), i)).collect();
    let find_mor = |x: &WAlgebraMorphism| -> Result<usize> {
        mor_ix.get(&(x.src, x.tgt, x.f, x.fbar)).copied().ok_or_else(|| Error::consistency(format!("composite ({}, {}) is not a listed w-morphism", c.name1(x.f), c.name2(x.fbar))))
    };

    let mut budget = cap.budget("algebra 2-cells");
    let mut cells = Vec::new();
    for (i, x) in morphisms.iter().enumerate() {
        for (k, y) in morphisms.iter().enumerate() {
            if x.src != y.src || x.tgt != y.tgt {
                continue;
            }
            for &alpha in c.hom2(x.f, y.f) {
                budget.tick()?;
                if validate_algebra_2cell(m, alpha, x, y)?.is_ok() {
                    cells.push(AlgebraCell { alpha, src: i, tgt: k });
                }
            }
        }
    }
    let cell_ix: HashMap<AlgebraCell, usize> = cells.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let find_cell = |a: AlgebraCell| -> Result<usize> { cell_ix.get(&a).copied().ok_or_else(|| Error::consistency(format!("{} is not a listed algebra 2-cell", c.name2(a.alpha)))) };

    let (n1, n2) = (morphisms.len(), cells.len());
    let id1: Vec<usize> = algebras.iter().map(|&a| find_mor(&WAlgebraMorphism::identity(m, a, w))).collect::<Result<_>>()?;
    let id2: Vec<usize> = (0..n1).map(|i| find_cell(AlgebraCell { alpha: c.id2(morphisms[i].f), src: i, tgt: i })).collect::<Result<_>>()?;
    let mut comp1 = vec![usize::MAX; n1 * n1];
    for (gi, g) in morphisms.iter().enumerate() {
        for (fi, f) in morphisms.iter().enumerate() {
            if f.tgt == g.src {
                comp1[gi * n1 + fi] = find_mor(&compose_w_morphisms(m, g, f)?)?;
            }
        }
    }
    let mut vcomp = vec![usize::MAX; n2 * n2];
    let mut lwhisk = vec![usize::MAX; n1 * n2];
    let mut rwhisk = vec![usize::MAX; n2 * n1];
    for (ai, a) in cells.iter().enumerate() {
        for (bi, b) in cells.iter().enumerate() {
            if a.tgt == b.src {
                vcomp[bi * n2 + ai] = find_cell(AlgebraCell { alpha: c.vcomp(b.alpha, a.alpha), src: a.src, tgt: b.tgt })?;
            }
        }
        let from = &morphisms[a.src];
        for (hi, h) in morphisms.iter().enumerate() {
            if h.src == from.tgt {
                let cell = AlgebraCell { alpha: c.lwhisk(h.f, a.alpha), src: comp1[hi * n1 + a.src], tgt: comp1[hi * n1 + a.tgt] };
                lwhisk[hi * n2 + ai] = find_cell(cell)?;
            }
            if h.tgt == from.src {
                let cell = AlgebraCell { alpha: c.rwhisk(a.alpha, h.f), src: comp1[a.src * n1 + hi], tgt: comp1[a.tgt * n1 + hi] };
                rwhisk[ai * n1 + hi] = find_cell(cell)?;
            }
        }
    }

    let obj_names: Vec<String> = algebras.iter().map(|a| format!("({},{})", c.obj_name(a.carrier), c.name1(a.action))).collect();
    let one_names = dedupe(morphisms.iter().map(|x| if x.is_strict(m) { c.name1(x.f).to_string() } else { format!("({},{})", c.name1(x.f), c.name2(x.fbar)) }).collect());
    let two_names = dedupe(cells.iter().map(|a| c.name2(a.alpha).to_string()).collect());
    let cells1 = morphisms.iter().zip(one_names).map(|(x, name)| Cell1 { name, src: alg_ix[&x.src], tgt: alg_ix[&x.tgt] }).collect();
    let cells2 = cells.iter().zip(two_names).map(|(a, name)| Cell2 { name, src: a.src, tgt: a.tgt }).collect();
    let rules = TwoRules {
        comp1: &|g, f| comp1[g * n1 + f],
        vcomp: &|b, a| vcomp[b * n2 + a],
        lwhisk: &|h, a| lwhisk[h * n2 + a],
        rwhisk: &|a, k| rwhisk[a * n1 + k],
    };
    let name = format!("{}-Alg_{w}", m.name);
    let ambient = Fin2Category::from_fn(name, obj_names, cells1, id1, cells2, id2, rules);
    let tight = morphisms.iter().map(|x| x.is_strict(m)).collect();
    Ok(Assembled { algebras, morphisms, cells, ambient, tight })
}

/// Builds `T-Alg_w` for `w ∈ {l, p, c}`.
///
/// Tight 1-cells are the strict morphisms. The loose-limit data are obtained
/// by lifting the base's limits of arrows along `U`, and each lift is
/// certified; a base without those limits yields a hypothesis error.
pub fn build_talg(m: &Fin2Monad, w: Variance, cap: Cap) -> Result<TAlg> {
    match w {
        Variance::Strict => return Err(Error::precondition("T-Alg_w is built for w in {l, p, c}; the strict part comes with it")),
        Variance::Colax => return build_talg(&m.co_dual(), Variance::Lax, cap).and_then(|t| co_dual_talg(m, t)),
        _ => {}
    }
    let monad_report = validate_2monad(m);
    if !monad_report.is_ok() {
        return Err(Error::Invalid(monad_report));
    }
    let asm = assemble(m, w, cap)?;
    let fcat = Arc::new(FCategory::new(asm.ambient, asm.tight)?);
    let obj = asm.algebras.iter().map(|a| a.carrier).collect();
    let one = asm.morphisms.iter().map(|x| x.f).collect();
    let two = asm.cells.iter().map(|a| a.alpha).collect();
    let u = FFunctor::new(format!("U_{w}"), fcat.clone(), m.base().clone(), obj, one, two)?;
    let (strict, j) = tight_inclusion(&fcat);
    let j = j.named(format!("j_{w}"));
    let base_limits = require_limit_data(m.base(), w, cap)?;
    let limits = lift_limits(&fcat, &u, &base_limits, w, cap)?;

    let mut certificate = Validation::new(fcat.name().to_string());
    certificate.absorb("2-category: ", validate_2category(fcat.ambient()));
    let ur = validate_ffunctor(&u);
    certificate.absorb("U: ", ur.validation.clone());
    certificate.require(ur.reflects_identity_2cells, "U reflects identity 2-cells", Vec::<String>::new);
    certificate.require(ur.locally_conservative, "U is locally conservative", Vec::<String>::new);
    certificate.require(ur.locally_faithful, "U is locally faithful", Vec::<String>::new);
    certificate.absorb("j: ", validate_ffunctor(&j).validation);
    certificate.absorb("limits: ", validate_loose_limit_data(&fcat, &limits, w, cap)?);
    let doctrinal = is_w_doctrinal(&u, w, false)?;
    certificate.require(doctrinal.verdict, "U is w-doctrinal", Vec::<String>::new);
    Ok(TAlg { monad: m.clone(), variance: w, algebras: asm.algebras, morphisms: asm.morphisms, cells: asm.cells, fcat, u, strict, j, base_limits, limits, certificate, doctrinal })
}

/// For each 1-cell, the unique cone over it lying over the base datum of its
/// image and satisfying the universal properties in `T-Alg_w`.
fn lift_limits(a: &Arc<FCategory>, u: &FFunctor, base: &[LimitDatum], w: Variance, cap: Cap) -> Result<Vec<LimitDatum>> {
    let t = a.ambient();
    let by_f: HashMap<usize, &LimitDatum> = base.iter().map(|d| (d.f, d)).collect();
    let mut budget = cap.budget("lifting limits");
    let mut out = Vec::with_capacity(t.n1());
    for f in 0..t.n1() {
        let bd = by_f.get(&u.on1(f)).ok_or_else(|| Error::hypothesis(format!("no base limit over the image of {}", t.name1(f))))?;
        let (fa, fb) = (t.src1(f), t.tgt1(f));
        let mut found = Vec::new();
        for apex in (0..t.n0()).filter(|&x| u.ob(x) == bd.apex) {
            for &p in t.hom1(apex, fa).iter().filter(|&&p| a.tight(p) && u.on1(p) == bd.p) {
                for &q in t.hom1(apex, fb).iter().filter(|&&q| a.tight(q) && u.on1(q) == bd.q) {
                    let (from, to) = if w == Variance::Colax { (t.comp1(f, p), q) } else { (q, t.comp1(f, p)) };
                    for &lambda in t.hom2(from, to).iter().filter(|&&l| u.on2(l) == bd.lambda) {
                        budget.tick()?;
                        let d = LimitDatum { f, apex, p, q, lambda };
                        if check_limit_datum(a, &d, w, cap)?.is_ok() {
                            found.push(d);
                        }
                    }
                }
            }
        }
        match found[..] {
            [d] => out.push(d),
            _ => return Err(Error::consistency(format!("{} lifts of the limit over {}", found.len(), t.name1(f)))),
        }
    }
    Ok(out)
}

fn co_dual_talg(m: &Fin2Monad, t: TAlg) -> Result<TAlg> {
    let fcat = Arc::new(t.fcat.co_dual().with_name(format!("{}-Alg_c", m.name)));
    let (strict, j) = tight_inclusion(&fcat);
    let u = FFunctor::new("U_c", fcat.clone(), m.base().clone(), t.u.obj_table().to_vec(), t.u.one_table().to_vec(), t.u.two_table().to_vec())?;
    let morphisms = t.morphisms.into_iter().map(|x| WAlgebraMorphism { variance: Variance::Colax, ..x }).collect();
    let mut doctrinal = t.doctrinal;
    doctrinal.variance = Variance::Colax;
    Ok(TAlg {
        monad: m.clone(),
        variance: Variance::Colax,
        algebras: t.algebras,
        morphisms,
        cells: t.cells,
        fcat,
        u,
        strict,
        j: j.named("j_c"),
        base_limits: t.base_limits,
        limits: t.limits,
        certificate: t.certificate,
        doctrinal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2cat::check_f_equivalence;
    use crate::f2cat::fcat::same_fcat;
    use crate::monadfiller::fixtures::{closure_chain, monad_fixtures, wedge_reflection};

    #[test]
    fn identity_monad_gives_a_copy_of_the_base() {
        let base = closure_chain().unwrap().base().clone();
        let id = Fin2Monad::identity(base).unwrap();
        for w in [Variance::Lax, Variance::Pseudo, Variance::Colax] {
            let t = build_talg(&id, w, Cap::default()).unwrap();
            assert!(t.certificate.is_ok(), "{}", t.certificate);
            let e = check_f_equivalence(&t.u);
            assert!(e.is_isomorphism, "{w}: {}", e.validation);
            assert!(t.fcat.is_all_tight());
        }
    }

    #[test]
    fn every_fixture_with_base_limits_builds_a_certified_talg() {
        let mut built = 0;
        for m in monad_fixtures() {
            for w in [Variance::Lax, Variance::Pseudo, Variance::Colax] {
                match build_talg(&m, w, Cap::default()) {
                    Ok(t) => {
                        assert!(t.certificate.is_ok(), "{} {w}: {}", m.name, t.certificate);
                        assert!(is_w_doctrinal(&t.u, w, false).unwrap().verdict);
                        built += 1;
                    }
                    Err(Error::Hypothesis(_)) => {}
                    Err(e) => panic!("{} {w}: {e}", m.name),
                }
            }
        }
        assert!(built >= 20, "{built}");
    }

    #[test]
    fn lax_algebras_are_also_p_doctrinal() {
        for m in monad_fixtures() {
            for w in [Variance::Lax, Variance::Colax] {
                if let Ok(t) = build_talg(&m, w, Cap::default()) {
                    assert!(is_w_doctrinal(&t.u, Variance::Pseudo, false).unwrap().verdict, "{} {w}", m.name);
                }
            }
        }
    }

    #[test]
    fn a_base_without_lax_limits_is_an_unsatisfied_hypothesis() {
        let m = wedge_reflection().unwrap();
        assert!(matches!(build_talg(&m, Variance::Lax, Cap::default()), Err(Error::Hypothesis(_))));
        assert!(build_talg(&m, Variance::Pseudo, Cap::default()).is_ok());
    }

    #[test]
    fn colax_talg_is_the_co_dual_of_the_lax_one_of_the_co_dual_monad() {
        let m = closure_chain().unwrap();
        let c = build_talg(&m, Variance::Colax, Cap::default()).unwrap();
        let l = build_talg(&m.co_dual(), Variance::Lax, Cap::default()).unwrap();
        assert_eq!(c.fcat.ambient().tables().comp1, l.fcat.ambient().co_dual().tables().comp1);
        assert_eq!(c.fcat.ambient().tables().vcomp, l.fcat.ambient().co_dual().tables().vcomp);
        assert!(same_fcat(c.u.cod(), m.base()));
    }
}
