//! Small 2-monads used by tests, the acceptance suite and the CLI.
//!
//! Every monad on a finite category has an invertible multiplication, so the
//! nontrivial examples here are reflections onto full sub-2-categories.

use std::sync::Arc;

use super::filler::FillerProblem;
use super::monad::Fin2Monad;
use super::talg::build_talg;
use crate::f2cat::fixtures::{arrow_2cat, discrete_2cat, iso_pair_2cat, locally_discrete, locally_preordered, point_2cat};
use crate::f2cat::{require_limit_data, tight_inclusion, Cell1, Cell2, FCategory, FFunctor, Fin2Category, TwoRules};
use crate::fincat::fixtures::{chain, monoid};
use crate::fincat::{Arrow, FinCategory};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// The idempotent 2-monad of a reflection given by its object map and unit.
///
/// `T` on cells is recovered from the unique factorizations through the
/// unit; a hypothesis error names the first cell without one.
pub fn reflection_monad(name: &str, base: Arc<FCategory>, target: &[usize], eta: &[usize]) -> Result<Fin2Monad> {
    let c = base.ambient();
    let not_reflective = |what: &str, n: usize| Error::hypothesis(format!("{what} has {n} factorizations through the unit of `{name}`"));
    let mut one = Vec::with_capacity(c.n1());
    for f in 0..c.n1() {
        let (x, y) = (c.src1(f), c.tgt1(f));
        let want = c.comp1(eta[y], f);
        let hits: Vec<usize> = c.hom1(target[x], target[y]).iter().copied().filter(|&g| c.comp1(g, eta[x]) == want).collect();
        match hits[..] {
            [g] => one.push(g),
            _ => return Err(not_reflective(c.name1(f), hits.len())),
        }
    }
    let mut two = Vec::with_capacity(c.n2());
    for a in 0..c.n2() {
        let x = c.src1(c.src2(a));
        let y = c.tgt1(c.src2(a));
        let want = c.lwhisk(eta[y], a);
        let hits: Vec<usize> = c.hom2(one[c.src2(a)], one[c.tgt2(a)]).iter().copied().filter(|&b| c.rwhisk(b, eta[x]) == want).collect();
        match hits[..] {
            [b] => two.push(b),
            _ => return Err(not_reflective(c.name2(a), hits.len())),
        }
    }
    let mu = target.iter().map(|&y| c.id1(y)).collect();
    let t = FFunctor::new("T", base.clone(), base.clone(), target.to_vec(), one, two)?;
    Fin2Monad::new(name, base, t, eta.to_vec(), mu)
}

fn named(base: &Fin2Category, names: &[&str]) -> Vec<usize> {
    names.iter().map(|n| base.index1(n).expect("fixture cell")).collect()
}

/// `x ↦ max(x, 1)` on the chain `[3]`.
pub fn closure_chain() -> Result<Fin2Monad> {
    let base = locally_discrete(&chain(3));
    let eta = named(&base, &["0<=1", "1<=1", "2<=2"]);
    reflection_monad("max(-,1)", Arc::new(FCategory::all_tight(base)), &[1, 1, 2], &eta)
}

/// Reflection of the walking arrow onto its codomain.
pub fn arrow_reflection() -> Result<Fin2Monad> {
    let base = arrow_2cat();
    let eta = named(&base, &["f", "1_1"]);
    reflection_monad("cod", Arc::new(FCategory::all_tight(base)), &[1, 1], &eta)
}

/// Objects `0, 1, 2`; 1-cells `a, b: 0 → 1`, `c: 1 → 2` and composites; one
/// 2-cell `σ: a ⇒ b` and its whiskering `c·σ`.
pub fn wedge_base() -> Result<Fin2Category> {
    let objects = ["0", "1", "2"].map(String::from).to_vec();
    let arrows: Vec<Arrow> = [("1_0", 0, 0), ("1_1", 1, 1), ("1_2", 2, 2), ("a", 0, 1), ("b", 0, 1), ("c", 1, 2), ("ca", 0, 2), ("cb", 0, 2)]
        .iter()
        .map(|&(n, src, tgt)| Arrow { name: n.into(), src, tgt })
        .collect();
    let cat = FinCategory::from_fn("wedge", objects, arrows, vec![0, 1, 2], |g, f| match (g, f) {
        (0..=2, x) | (x, 0..=2) => x,
        (5, 3) => 6,
        (5, 4) => 7,
        _ => unreachable!(),
    });
    locally_preordered("wedge", &cat, |f, g| matches!((f, g), (3, 4) | (6, 7)), |f, _| Some(if f == 3 { "sigma".into() } else { "c.sigma".into() }))
}

/// Reflection of the wedge onto the objects `0` and `2`.
pub fn wedge_reflection() -> Result<Fin2Monad> {
    let base = wedge_base()?;
    let eta = named(&base, &["1_0", "c", "1_2"]);
    reflection_monad("wedge-reflect", Arc::new(FCategory::all_tight(base)), &[0, 2, 2], &eta)
}

/// A 1-cell `a: 0 → 1` carrying an idempotent 2-cell `σ: a ⇒ a`.
pub fn idempotent_2cell() -> Result<Arc<FCategory>> {
    let c1 = |n: &str, src, tgt| Cell1 { name: n.into(), src, tgt };
    let c2 = |n: &str, src, tgt| Cell2 { name: n.into(), src, tgt };
    let cells1 = vec![c1("1_0", 0, 0), c1("1_1", 1, 1), c1("a", 0, 1)];
    let cells2 = vec![c2("1_1_0", 0, 0), c2("1_1_1", 1, 1), c2("1_a", 2, 2), c2("sigma", 2, 2)];
    let comp1 = |g: usize, f: usize| if g < 2 { f } else { g };
    let rules = TwoRules {
        comp1: &comp1,
        vcomp: &|b, a| if a < 3 { b } else { a },
        lwhisk: &|h, a| if a < 3 { comp1(h, a) } else { a },
        rwhisk: &|a, k| if a < 3 { comp1(a, k) } else { a },
    };
    let c = Fin2Category::from_fn("idem", vec!["0".into(), "1".into()], cells1, vec![0, 1], cells2, vec![0, 1, 2], rules);
    Ok(Arc::new(FCategory::all_tight(c)))
}

/// `n ↦ n²` on the one-object 2-category of a commutative monoid, with unit
/// and multiplication the identity. Lawful exactly when the monoid is
/// idempotent.
pub fn squaring_monad(m: &FinCategory) -> Result<Fin2Monad> {
    let c = locally_discrete(m);
    let one: Vec<usize> = (0..c.n1()).map(|n| c.comp1(n, n)).collect();
    let two = one.iter().map(|&g| c.id2(g)).collect();
    let id = vec![c.id1(0)];
    let base = Arc::new(FCategory::all_tight(c));
    let t = FFunctor::new("(-)^2", base.clone(), base.clone(), vec![0], one, two)?;
    Fin2Monad::new(format!("square({})", m.name()), base, t, id.clone(), id)
}

/// The join semilattice `{0 < 1}` as a monoid.
pub fn two_element_semilattice() -> FinCategory {
    monoid("max2", 2, |a, b| a.max(b))
}

/// Identity monads on a spread of small bases followed by the nontrivial
/// fixtures.
pub fn monad_fixtures() -> Vec<Fin2Monad> {
    let bases = [point_2cat(), discrete_2cat(2), arrow_2cat(), iso_pair_2cat(), wedge_base().expect("fixture")];
    let mut out: Vec<Fin2Monad> = bases.into_iter().map(|b| Fin2Monad::identity(Arc::new(FCategory::all_tight(b))).expect("identity monad")).collect();
    out.push(Fin2Monad::identity(idempotent_2cell().expect("fixture")).expect("identity monad"));
    out.extend([closure_chain(), arrow_reflection(), wedge_reflection(), squaring_monad(&two_element_semilattice())].map(|m| m.expect("fixture")));
    out
}

/// The isomorphism pair with `u` tight and its inverse `v` loose.
pub fn iso_pair_loose_inverse() -> Arc<FCategory> {
    let c = iso_pair_2cat();
    let tight = (0..c.n1()).map(|f| c.name1(f) != "v").collect();
    Arc::new(FCategory::new(c, tight).expect("fixture marking"))
}

/// Certified filler problems small enough for exhaustive search.
pub fn filler_fixtures(cap: Cap) -> Result<Vec<(String, FillerProblem)>> {
    let mut out = Vec::new();
    let a = iso_pair_loose_inverse();
    let (a_tau, j) = tight_inclusion(&a);
    let b = Arc::new(FCategory::all_tight(a.ambient().clone()));
    for w in [Variance::Lax, Variance::Pseudo, Variance::Colax] {
        let limits = require_limit_data(&a, w, cap)?;
        let id = FFunctor::identity(a.clone());
        out.push((format!("identity square on iso-pair ({w})"), FillerProblem::new(w, a.clone(), limits.clone(), &j, &id, &id, cap)?));
        let r = FFunctor::new("R", a_tau.clone(), b.clone(), j.obj_table().to_vec(), j.one_table().to_vec(), j.two_table().to_vec())?;
        let s = FFunctor::new("S", a.clone(), b.clone(), id.obj_table().to_vec(), id.one_table().to_vec(), id.two_table().to_vec())?;
        out.push((format!("forget the marking of iso-pair ({w})"), FillerProblem::new(w, a.clone(), limits, &r, &s, &FFunctor::identity(b.clone()), cap)?));
    }
    for m in [closure_chain()?, arrow_reflection()?] {
        for w in [Variance::Lax, Variance::Colax] {
            let t = build_talg(&m, w, cap)?;
            let name = format!("forgetful square of {} ({w})", t.fcat.name());
            out.push((name, FillerProblem::new(w, t.fcat.clone(), t.limits.clone(), &t.j, &t.u, &t.u, cap)?));
        }
    }
    Ok(out)
}
