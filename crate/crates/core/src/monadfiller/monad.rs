//! Strict 2-monads on finite 2-categories, their strict algebras, algebra
//! morphisms of each variance and algebra 2-cells.
//!
//! Lax morphisms `(f, f̄)` carry `f̄: b·Tf ⇒ f·a` and must satisfy the two
//! standard coherence axioms, imported as a convention:
//!
//! * `f̄·η_A = 1_f`;
//! * `f̄·μ_A = (f̄·Ta)∘(b·Tf̄)`.
//!
//! Colax data are handled by passing to the co-dual monad, where they become
//! lax; no separate colax code path exists.

use std::sync::Arc;

use serde::Serialize;

use crate::check::Validation;
use crate::f2cat::{validate_2category, validate_ffunctor, FCategory, FFunctor};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// A 2-monad `(T, η, μ)` on the 2-category underlying an all-tight F-category.
#[derive(Clone, Debug)]
pub struct Fin2Monad {
    pub name: String,
    base: Arc<FCategory>,
    t: FFunctor,
    eta: Vec<usize>,
    mu: Vec<usize>,
}

impl PartialEq for Fin2Monad {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && self.eta == other.eta && self.mu == other.mu
    }
}

impl Fin2Monad {
    /// Checks shapes only; the laws are the business of [`validate_2monad`].
    pub fn new(name: impl Into<String>, base: Arc<FCategory>, t: FFunctor, eta: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        let name = name.into();
        if !base.is_all_tight() {
            return Err(Error::precondition(format!("the base of `{name}` must be all tight")));
        }
        let t = t.rebased(base.clone(), base.clone())?;
        let (n0, n1) = (base.ambient().n0(), base.ambient().n1());
        if eta.len() != n0 || mu.len() != n0 || eta.iter().chain(&mu).any(|&g| g >= n1) {
            return Err(Error::boundary(format!("`{name}` needs one unit and one multiplication component per object")));
        }
        Ok(Fin2Monad { name, base, t, eta, mu })
    }

    pub fn identity(base: Arc<FCategory>) -> Result<Self> {
        let ids = base.ambient().identities1().to_vec();
        let t = FFunctor::identity(base.clone()).named("Id");
        Fin2Monad::new(format!("Id({})", base.name()), base, t, ids.clone(), ids)
    }

    pub fn base(&self) -> &Arc<FCategory> {
        &self.base
    }

    pub fn functor(&self) -> &FFunctor {
        &self.t
    }

    pub fn eta(&self, x: usize) -> usize {
        self.eta[x]
    }

    pub fn mu(&self, x: usize) -> usize {
        self.mu[x]
    }

    pub fn eta_table(&self) -> &[usize] {
        &self.eta
    }

    pub fn mu_table(&self) -> &[usize] {
        &self.mu
    }

    /// The same monad on the 2-category with reversed 2-cells.
    pub fn co_dual(&self) -> Fin2Monad {
        let base = Arc::new(self.base.co_dual());
        let t = self.t.co_dual().rebased(base.clone(), base.clone()).expect("co-dual of the base is shared");
        Fin2Monad { name: crate::fincat::category::toggle_suffix(&self.name, "^co"), base, t, eta: self.eta.clone(), mu: self.mu.clone() }
    }

    pub fn is_identity(&self) -> bool {
        let c = self.base.ambient();
        self.t == FFunctor::identity(self.base.clone()) && self.eta.iter().chain(&self.mu).all(|&g| c.is_id1(g))
    }

    /// With the unit component at `x` replaced; used by perturbation tests.
    pub fn with_eta(mut self, x: usize, g: usize) -> Self {
        self.eta[x] = g;
        self
    }

    pub fn with_mu(mut self, x: usize, g: usize) -> Self {
        self.mu[x] = g;
        self
    }
}

/// Checks 2-functoriality of `T`, 2-naturality of `η` and `μ`, and the unit
/// and associativity laws.
pub fn validate_2monad(m: &Fin2Monad) -> Validation {
    let c = m.base.ambient();
    let t = &m.t;
    let mut v = Validation::new(format!("2-monad {}", m.name));
    v.absorb("base: ", validate_2category(c));
    v.absorb("T: ", validate_ffunctor(t).validation);
    if !v.is_ok() {
        return v;
    }
    for x in 0..c.n0() {
        let (e, u) = (m.eta[x], m.mu[x]);
        v.require(c.src1(e) == x && c.tgt1(e) == t.ob(x), "unit-boundary", || [c.obj_name(x), c.name1(e)]);
        v.require(c.src1(u) == t.ob(t.ob(x)) && c.tgt1(u) == t.ob(x), "multiplication-boundary", || [c.obj_name(x), c.name1(u)]);
    }
    if !v.is_ok() {
        return v;
    }
    for f in 0..c.n1() {
        let (x, y) = (c.src1(f), c.tgt1(f));
        let tf = t.on1(f);
        v.require(c.comp1(tf, m.eta[x]) == c.comp1(m.eta[y], f), "unit-naturality", || [c.name1(f)]);
        v.require(c.comp1(tf, m.mu[x]) == c.comp1(m.mu[y], t.on1(tf)), "multiplication-naturality", || [c.name1(f)]);
    }
    for a in 0..c.n2() {
        let f = c.src2(a);
        let (x, y) = (c.src1(f), c.tgt1(f));
        let ta = t.on2(a);
        v.require(c.rwhisk(ta, m.eta[x]) == c.lwhisk(m.eta[y], a), "unit-2-naturality", || [c.name2(a)]);
        v.require(c.rwhisk(ta, m.mu[x]) == c.lwhisk(m.mu[y], t.on2(ta)), "multiplication-2-naturality", || [c.name2(a)]);
    }
    for x in 0..c.n0() {
        let (tx, u) = (t.ob(x), m.mu[x]);
        let id = c.id1(tx);
        v.require(c.comp1(u, m.eta[tx]) == id, "left-unit", || [c.obj_name(x)]);
        v.require(c.comp1(u, t.on1(m.eta[x])) == id, "right-unit", || [c.obj_name(x)]);
        v.require(c.comp1(u, t.on1(u)) == c.comp1(u, m.mu[tx]), "associativity", || [c.obj_name(x)]);
    }
    v
}

/// A strict algebra `(A, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TAlgebra {
    pub carrier: usize,
    pub action: usize,
}

/// Every strict algebra, ordered by carrier and then by action.
pub fn enumerate_algebras(m: &Fin2Monad, cap: Cap) -> Result<Vec<TAlgebra>> {
    let c = m.base.ambient();
    let mut budget = cap.budget("algebra actions");
    let mut out = Vec::new();
    for x in 0..c.n0() {
        let tx = m.t.ob(x);
        for &a in c.hom1(tx, x) {
            budget.tick()?;
            if c.comp1(a, m.eta[x]) == c.id1(x) && c.comp1(a, m.mu[x]) == c.comp1(a, m.t.on1(a)) {
                out.push(TAlgebra { carrier: x, action: a });
            }
        }
    }
    Ok(out)
}

/// A morphism of algebras `(f, f̄)`.
///
/// For `s`, `p` and `l` the 2-cell is `f̄: b·Tf ⇒ f·a`; for `c` it is
/// `f̄: f·a ⇒ b·Tf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WAlgebraMorphism {
    pub variance: Variance,
    pub src: TAlgebra,
    pub tgt: TAlgebra,
    pub f: usize,
    pub fbar: usize,
}

impl WAlgebraMorphism {
    pub fn identity(m: &Fin2Monad, alg: TAlgebra, w: Variance) -> Self {
        let c = m.base.ambient();
        WAlgebraMorphism { variance: w, src: alg, tgt: alg, f: c.id1(alg.carrier), fbar: c.id2(alg.action) }
    }

    /// Whether the underlying 2-cell is an identity, so that `b·Tf = f·a`.
    pub fn is_strict(&self, m: &Fin2Monad) -> bool {
        m.base.ambient().is_id2(self.fbar)
    }
}

fn lax_coherence(m: &Fin2Monad, x: &WAlgebraMorphism) -> Vec<&'static str> {
    let c = m.base.ambient();
    let t = &m.t;
    let (a, b) = (x.src.action, x.tgt.action);
    let mut bad = Vec::new();
    if c.src2(x.fbar) != c.comp1(b, t.on1(x.f)) || c.tgt2(x.fbar) != c.comp1(x.f, a) {
        bad.push("structure-cell-boundary");
        return bad;
    }
    if c.rwhisk(x.fbar, m.eta[x.src.carrier]) != c.id2(x.f) {
        bad.push("unit-coherence");
    }
    let left = c.rwhisk(x.fbar, m.mu[x.src.carrier]);
    let right = c.vcomp(c.rwhisk(x.fbar, t.on1(a)), c.lwhisk(b, t.on2(x.fbar)));
    if left != right {
        bad.push("multiplication-coherence");
    }
    bad
}

/// The coherence laws failed by `(f, f̄)`, read in its own variance.
pub fn morphism_violations(m: &Fin2Monad, x: &WAlgebraMorphism) -> Vec<&'static str> {
    match x.variance {
        Variance::Colax => lax_coherence(&m.co_dual(), x),
        Variance::Strict => {
            let mut bad = lax_coherence(m, x);
            if !m.base.ambient().is_id2(x.fbar) {
                bad.push("strictness");
            }
            bad
        }
        Variance::Pseudo => {
            let mut bad = lax_coherence(m, x);
            if !m.base.ambient().is_invertible2(x.fbar) {
                bad.push("invertibility");
            }
            bad
        }
        Variance::Lax => lax_coherence(m, x),
    }
}

/// Every w-morphism between two algebras, ordered by `f` and then `f̄`.
pub fn enumerate_w_morphisms(m: &Fin2Monad, src: TAlgebra, tgt: TAlgebra, w: Variance, cap: Cap) -> Result<Vec<WAlgebraMorphism>> {
    if w == Variance::Colax {
        let co = m.co_dual();
        let found = enumerate_w_morphisms(&co, src, tgt, Variance::Lax, cap)?;
        return Ok(found.into_iter().map(|x| WAlgebraMorphism { variance: w, ..x }).collect());
    }
    let c = m.base.ambient();
    let mut budget = cap.budget("algebra morphisms");
    let mut out = Vec::new();
    for &f in c.hom1(src.carrier, tgt.carrier) {
        let (from, to) = (c.comp1(tgt.action, m.t.on1(f)), c.comp1(f, src.action));
        let candidates: Vec<usize> = if w == Variance::Strict { if from == to { vec![c.id2(from)] } else { vec![] } } else { c.hom2(from, to).to_vec() };
        for fbar in candidates {
            budget.tick()?;
            let x = WAlgebraMorphism { variance: w, src, tgt, f, fbar };
            if morphism_violations(m, &x).is_empty() {
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// `(g, ḡ)∘(f, f̄) = (gf, (g·f̄)∘(ḡ·Tf))`, read in the variance of the inputs.
pub fn compose_w_morphisms(m: &Fin2Monad, g: &WAlgebraMorphism, f: &WAlgebraMorphism) -> Result<WAlgebraMorphism> {
    if f.tgt != g.src || f.variance != g.variance {
        return Err(Error::boundary("algebra morphisms do not compose"));
    }
    if f.variance == Variance::Colax {
        let lax = |x: &WAlgebraMorphism| WAlgebraMorphism { variance: Variance::Lax, ..*x };
        let r = compose_w_morphisms(&m.co_dual(), &lax(g), &lax(f))?;
        return Ok(WAlgebraMorphism { variance: Variance::Colax, ..r });
    }
    let c = m.base.ambient();
    let fbar = c.vcomp(c.lwhisk(g.f, f.fbar), c.rwhisk(g.fbar, m.t.on1(f.f)));
    Ok(WAlgebraMorphism { variance: f.variance, src: f.src, tgt: g.tgt, f: c.comp1(g.f, f.f), fbar })
}

/// Checks `(α·a)∘f̄ = ḡ∘(b·Tα)` for `α: f ⇒ g`, with directions reversed in
/// the colax case.
pub fn validate_algebra_2cell(m: &Fin2Monad, alpha: usize, x: &WAlgebraMorphism, y: &WAlgebraMorphism) -> Result<Validation> {
    let c = m.base.ambient();
    if x.src != y.src || x.tgt != y.tgt || x.variance != y.variance || c.src2(alpha) != x.f || c.tgt2(alpha) != y.f {
        return Err(Error::boundary(format!("{} is not a 2-cell between the given algebra morphisms", c.name2(alpha))));
    }
    if x.variance == Variance::Colax {
        let lax = |z: &WAlgebraMorphism| WAlgebraMorphism { variance: Variance::Lax, ..*z };
        return validate_algebra_2cell(&m.co_dual(), alpha, &lax(x), &lax(y));
    }
    let mut v = Validation::new(format!("algebra 2-cell {}", c.name2(alpha)));
    let left = c.vcomp(c.rwhisk(alpha, x.src.action), x.fbar);
    let right = c.vcomp(y.fbar, c.lwhisk(x.tgt.action, m.t.on2(alpha)));
    v.require(left == right, "algebra-2-cell", || [c.name2(alpha), c.name2(left), c.name2(right)]);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monadfiller::fixtures::{closure_chain, monad_fixtures, squaring_monad, wedge_reflection};

    /// A second implementation over the named serialized tables.
    fn algebras_from_tables(m: &Fin2Monad) -> usize {
        let t = m.base.ambient().tables();
        let c = m.base.ambient();
        let comp = |g: &str, f: &str| t.comp1.iter().find(|e| e.0 == g && e.1 == f).map(|e| e.2.clone());
        let mut n = 0;
        for (x, obj) in t.objects.iter().enumerate() {
            let tx = &t.objects[m.functor().ob(x)];
            let id = &t.identities1.iter().find(|e| &e.0 == obj).unwrap().1;
            for (name, src, tgt) in &t.cells1 {
                if src != tx || tgt != obj {
                    continue;
                }
                let ta = c.name1(m.functor().on1(c.index1(name).unwrap()));
                let unit = comp(name, c.name1(m.eta(x))).as_ref() == Some(id);
                let mult = comp(name, c.name1(m.mu(x))) == comp(name, ta);
                n += usize::from(unit && mult);
            }
        }
        n
    }

    #[test]
    fn fixtures_are_lawful() {
        for m in monad_fixtures() {
            let v = validate_2monad(&m);
            assert!(v.is_ok(), "{v}");
        }
    }

    #[test]
    fn squaring_on_a_semilattice_is_lawful_and_elsewhere_breaks_unit_naturality() {
        let semilattice = crate::fincat::fixtures::monoid("max2", 2, |a, b| a.max(b));
        assert!(validate_2monad(&squaring_monad(&semilattice).unwrap()).is_ok());
        let z2 = crate::fincat::fixtures::cyclic(2);
        assert!(validate_2monad(&squaring_monad(&z2).unwrap()).has("unit-naturality"));
    }

    #[test]
    fn broken_multiplication_is_witnessed() {
        let m = wedge_reflection().unwrap();
        let c = m.base().ambient();
        let bad = m.clone().with_mu(2, c.index1("c").unwrap());
        let v = validate_2monad(&bad);
        assert!(!v.is_ok());
        assert!(v.has("multiplication-boundary"), "{v}");
        let chain = closure_chain().unwrap();
        let c = chain.base().ambient();
        let bad = chain.clone().with_eta(0, c.index1("0<=2").unwrap());
        assert!(validate_2monad(&bad).has("unit-boundary"));
    }

    #[test]
    fn algebra_counts_match_a_table_level_oracle() {
        for m in monad_fixtures() {
            assert_eq!(enumerate_algebras(&m, Cap::default()).unwrap().len(), algebras_from_tables(&m), "{}", m.name);
        }
    }

    #[test]
    fn identity_monad_algebras_are_the_objects() {
        let m = wedge_reflection().unwrap();
        let id = Fin2Monad::identity(m.base().clone()).unwrap();
        let algs = enumerate_algebras(&id, Cap::default()).unwrap();
        assert_eq!(algs.len(), 3);
        assert!(algs.iter().all(|a| id.base().ambient().is_id1(a.action)));
    }

    #[test]
    fn an_object_without_a_unit_section_carries_no_algebra() {
        let m = wedge_reflection().unwrap();
        let algs = enumerate_algebras(&m, Cap::default()).unwrap();
        let carriers: Vec<usize> = algs.iter().map(|a| a.carrier).collect();
        assert_eq!(carriers, vec![0, 2]);
    }

    #[test]
    fn morphism_lists_nest_by_variance() {
        for m in monad_fixtures() {
            let algs = enumerate_algebras(&m, Cap::default()).unwrap();
            let c = m.base().ambient();
            for &x in &algs {
                for &y in &algs {
                    let list = |w| enumerate_w_morphisms(&m, x, y, w, Cap::default()).unwrap();
                    let key = |v: Vec<WAlgebraMorphism>| v.into_iter().map(|z| (z.f, z.fbar)).collect::<Vec<_>>();
                    let (s, p, l, co) = (key(list(Variance::Strict)), key(list(Variance::Pseudo)), key(list(Variance::Lax)), key(list(Variance::Colax)));
                    let id_present = x != y || s.contains(&(c.id1(x.carrier), c.id2(x.action)));
                    assert!(id_present);
                    let s_expected: Vec<(usize, usize)> = c
                        .hom1(x.carrier, y.carrier)
                        .iter()
                        .filter(|&&f| c.comp1(y.action, m.functor().on1(f)) == c.comp1(f, x.action))
                        .map(|&f| (f, c.id2(c.comp1(f, x.action))))
                        .collect();
                    assert_eq!(s, s_expected);
                    let cross: Vec<(usize, usize)> = l.iter().copied().filter(|&(_, b)| c.is_invertible2(b)).collect();
                    assert_eq!(p, cross);
                    let mut co_invertible: Vec<(usize, usize)> = co.iter().filter(|&&(_, b)| c.is_invertible2(b)).map(|&(f, b)| (f, c.inverse2(b).unwrap())).collect();
                    co_invertible.sort_unstable();
                    assert_eq!(p, co_invertible);
                }
            }
        }
    }

    #[test]
    fn identity_monad_lax_morphisms_are_all_1_cells() {
        let m = Fin2Monad::identity(wedge_reflection().unwrap().base().clone()).unwrap();
        let c = m.base().ambient();
        let algs = enumerate_algebras(&m, Cap::default()).unwrap();
        for &x in &algs {
            for &y in &algs {
                let l = enumerate_w_morphisms(&m, x, y, Variance::Lax, Cap::default()).unwrap();
                assert_eq!(l.len(), c.hom1(x.carrier, y.carrier).len());
                assert!(l.iter().all(|z| c.is_id2(z.fbar)));
            }
        }
    }

    #[test]
    fn algebra_2cells_under_the_identity_monad_are_all_2cells() {
        let m = Fin2Monad::identity(wedge_reflection().unwrap().base().clone()).unwrap();
        let c = m.base().ambient();
        let algs = enumerate_algebras(&m, Cap::default()).unwrap();
        for a in 0..c.n2() {
            let (f, g) = (c.src2(a), c.tgt2(a));
            let alg = |x: usize| *algs.iter().find(|z| z.carrier == x).unwrap();
            let (s, t) = (alg(c.src1(f)), alg(c.tgt1(f)));
            let mk = |h: usize| WAlgebraMorphism { variance: Variance::Lax, src: s, tgt: t, f: h, fbar: c.id2(h) };
            assert!(validate_algebra_2cell(&m, a, &mk(f), &mk(g)).unwrap().is_ok());
        }
    }

    #[test]
    fn perturbed_structure_cell_fails_the_2cell_equation() {
        let base = crate::monadfiller::fixtures::idempotent_2cell().unwrap();
        let m = Fin2Monad::identity(base).unwrap();
        let c = m.base().ambient();
        let (s, t) = (TAlgebra { carrier: 0, action: c.id1(0) }, TAlgebra { carrier: 1, action: c.id1(1) });
        let a = c.index1("a").unwrap();
        let sigma = c.index2("sigma").unwrap();
        let x = WAlgebraMorphism { variance: Variance::Lax, src: s, tgt: t, f: a, fbar: c.id2(a) };
        let y = WAlgebraMorphism { variance: Variance::Lax, src: s, tgt: t, f: a, fbar: sigma };
        assert!(validate_algebra_2cell(&m, c.id2(a), &x, &x).unwrap().is_ok());
        assert!(!validate_algebra_2cell(&m, c.id2(a), &x, &y).unwrap().is_ok());
    }
}
