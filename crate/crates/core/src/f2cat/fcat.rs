use std::sync::Arc;

use super::calculus::{Reflection, TwoCells};
use super::twocat::{validate_2category, Cell1, Cell2, Fin2Category, TwoRules};
use crate::check::Validation;
use crate::fincat::category::toggle_suffix;
use crate::fincat::StructureError;
use crate::variance::Variance;
use crate::{Error, Result};

/// A finite 2-category together with its tight 1-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCategory {
    ambient: Fin2Category,
    tight: Vec<bool>,
}

impl FCategory {
    pub fn new(ambient: Fin2Category, tight: Vec<bool>) -> Result<Self, StructureError> {
        if tight.len() != ambient.n1() {
            return Err(StructureError::missing("tight marking", format!("{} flags for {} 1-cells", tight.len(), ambient.n1())));
        }
        Ok(FCategory { ambient, tight })
    }

    /// Every 1-cell tight: a 2-category viewed as an F-category.
    pub fn all_tight(ambient: Fin2Category) -> Self {
        let tight = vec![true; ambient.n1()];
        FCategory { ambient, tight }
    }

    /// Only identities tight.
    pub fn identities_tight(ambient: Fin2Category) -> Self {
        let tight = (0..ambient.n1()).map(|f| ambient.is_id1(f)).collect();
        FCategory { ambient, tight }
    }

    pub fn from_names(ambient: Fin2Category, tight: &[String]) -> Result<Self, StructureError> {
        let mut flags = vec![false; ambient.n1()];
        for t in tight {
            let i = ambient.index1(t).ok_or_else(|| StructureError::dangling(t.clone(), "tight marking"))?;
            flags[i] = true;
        }
        FCategory::new(ambient, flags)
    }

    pub fn ambient(&self) -> &Fin2Category {
        &self.ambient
    }

    pub fn name(&self) -> &str {
        self.ambient.name()
    }

    pub fn tight(&self, f: usize) -> bool {
        self.tight[f]
    }

    pub fn tight_flags(&self) -> &[bool] {
        &self.tight
    }

    pub fn is_all_tight(&self) -> bool {
        self.tight.iter().all(|&t| t)
    }

    pub fn tight_cells(&self) -> Vec<usize> {
        (0..self.tight.len()).filter(|&f| self.tight[f]).collect()
    }

    /// 2-cells reversed, tight marking unchanged.
    pub fn co_dual(&self) -> FCategory {
        FCategory { ambient: self.ambient.co_dual(), tight: self.tight.clone() }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.ambient = self.ambient.with_name(name);
        self
    }
}

impl TwoCells for FCategory {
    type Obj = usize;
    type One = usize;
    type Two = usize;

    fn src1(&self, f: &usize) -> usize {
        self.ambient.src1(*f)
    }
    fn tgt1(&self, f: &usize) -> usize {
        self.ambient.tgt1(*f)
    }
    fn id1(&self, x: &usize) -> usize {
        self.ambient.id1(*x)
    }
    fn comp1(&self, g: &usize, f: &usize) -> Result<usize> {
        self.ambient
            .try_comp1(*g, *f)
            .ok_or_else(|| Error::boundary(format!("1-cells `{}` and `{}` do not compose", self.ambient.name1(*g), self.ambient.name1(*f))))
    }
    fn src2(&self, a: &usize) -> usize {
        self.ambient.src2(*a)
    }
    fn tgt2(&self, a: &usize) -> usize {
        self.ambient.tgt2(*a)
    }
    fn id2(&self, f: &usize) -> usize {
        self.ambient.id2(*f)
    }
    fn vcomp(&self, b: &usize, a: &usize) -> Result<usize> {
        self.ambient
            .try_vcomp(*b, *a)
            .ok_or_else(|| Error::boundary(format!("2-cells `{}` and `{}` do not compose", self.ambient.name2(*b), self.ambient.name2(*a))))
    }
    fn lwhisk(&self, h: &usize, a: &usize) -> Result<usize> {
        self.ambient
            .try_lwhisk(*h, *a)
            .ok_or_else(|| Error::boundary(format!("cannot whisker `{}` by `{}`", self.ambient.name2(*a), self.ambient.name1(*h))))
    }
    fn rwhisk(&self, a: &usize, k: &usize) -> Result<usize> {
        self.ambient
            .try_rwhisk(*a, *k)
            .ok_or_else(|| Error::boundary(format!("cannot whisker `{}` by `{}`", self.ambient.name2(*a), self.ambient.name1(*k))))
    }
    fn objects(&self) -> Result<Vec<usize>> {
        Ok((0..self.ambient.n0()).collect())
    }
    fn hom1(&self, x: &usize, y: &usize) -> Result<Vec<usize>> {
        Ok(self.ambient.hom1(*x, *y).to_vec())
    }
    fn hom2(&self, f: &usize, g: &usize) -> Result<Vec<usize>> {
        Ok(self.ambient.hom2(*f, *g).to_vec())
    }
    fn is_tight(&self, f: &usize) -> bool {
        self.tight[*f]
    }
    fn show0(&self, x: &usize) -> String {
        self.ambient.obj_name(*x).to_string()
    }
    fn show1(&self, f: &usize) -> String {
        self.ambient.name1(*f).to_string()
    }
    fn show2(&self, a: &usize) -> String {
        self.ambient.name2(*a).to_string()
    }
    fn is_id2(&self, a: &usize) -> bool {
        self.ambient.is_id2(*a)
    }
    fn inverse2(&self, a: &usize) -> Result<Option<usize>> {
        Ok(self.ambient.inverse2(*a))
    }
}

/// Ambient axioms, then identities tight and tight cells closed under composition.
pub fn validate_fcategory(a: &FCategory) -> Validation {
    let mut v = Validation::new(format!("F-category {}", a.name()));
    v.absorb("", validate_2category(&a.ambient));
    if !v.is_ok() {
        return v;
    }
    let c = &a.ambient;
    for x in 0..c.n0() {
        v.require(a.tight(c.id1(x)), "tight-identities", || [c.obj_name(x).to_string()]);
    }
    for g in 0..c.n1() {
        for f in 0..c.n1() {
            if let Some(gf) = c.try_comp1(g, f) {
                v.require(!(a.tight(g) && a.tight(f)) || a.tight(gf), "tight-closure", || [c.name1(g).to_string(), c.name1(f).to_string()]);
            }
        }
    }
    v
}

/// An F-functor given by its object, 1-cell and 2-cell tables.
#[derive(Clone, Debug)]
pub struct FFunctor {
    pub name: String,
    dom: Arc<FCategory>,
    cod: Arc<FCategory>,
    obj: Vec<usize>,
    one: Vec<usize>,
    two: Vec<usize>,
}

/// Structural equality of shared F-categories, short-circuiting on pointer identity.
pub fn same_fcat(a: &Arc<FCategory>, b: &Arc<FCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}


impl PartialEq for FFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.obj == other.obj && self.one == other.one && self.two == other.two && same_fcat(&self.dom, &other.dom) && same_fcat(&self.cod, &other.cod)
    }
}

impl Eq for FFunctor {}

impl FFunctor {
    pub fn new(name: impl Into<String>, dom: Arc<FCategory>, cod: Arc<FCategory>, obj: Vec<usize>, one: Vec<usize>, two: Vec<usize>) -> Result<Self, StructureError> {
        let name = name.into();
        let (d, c) = (dom.ambient(), cod.ambient());
        let sizes = [(obj.len(), d.n0(), "objects"), (one.len(), d.n1(), "1-cells"), (two.len(), d.n2(), "2-cells")];
        for (got, want, what) in sizes {
            if got != want {
                return Err(StructureError::missing(format!("{what} map of `{name}`"), format!("{got} of {want} entries")));
            }
        }
        if obj.iter().any(|&x| x >= c.n0()) || one.iter().any(|&x| x >= c.n1()) || two.iter().any(|&x| x >= c.n2()) {
            return Err(StructureError::dangling("<index>", format!("tables of `{name}`")));
        }
        Ok(FFunctor { name, dom, cod, obj, one, two })
    }

    pub fn identity(a: Arc<FCategory>) -> FFunctor {
        let c = a.ambient();
        let (obj, one, two) = ((0..c.n0()).collect(), (0..c.n1()).collect(), (0..c.n2()).collect());
        FFunctor { name: format!("1_{}", a.name()), dom: a.clone(), cod: a, obj, one, two }
    }

    pub fn dom(&self) -> &Arc<FCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FCategory> {
        &self.cod
    }

    pub fn ob(&self, x: usize) -> usize {
        self.obj[x]
    }

    pub fn on1(&self, f: usize) -> usize {
        self.one[f]
    }

    pub fn on2(&self, a: usize) -> usize {
        self.two[a]
    }

    pub fn obj_table(&self) -> &[usize] {
        &self.obj
    }

    pub fn one_table(&self) -> &[usize] {
        &self.one
    }

    pub fn two_table(&self) -> &[usize] {
        &self.two
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The same tables between the reversed F-categories.
    pub fn co_dual(&self) -> FFunctor {
        FFunctor {
            name: toggle_suffix(&self.name, "^co"),
            dom: Arc::new(self.dom.co_dual()),
            cod: Arc::new(self.cod.co_dual()),
            obj: self.obj.clone(),
            one: self.one.clone(),
            two: self.two.clone(),
        }
    }

    /// Same tables, re-pointed at (equal) shared categories.
    pub fn rebased(&self, dom: Arc<FCategory>, cod: Arc<FCategory>) -> Result<FFunctor> {
        if !same_fcat(&dom, &self.dom) || !same_fcat(&cod, &self.cod) {
            return Err(Error::boundary(format!("cannot rebase `{}` onto different categories", self.name)));
        }
        Ok(FFunctor { dom, cod, ..self.clone() })
    }
}

/// `g ∘ f`.
pub fn compose_ffunctors(g: &FFunctor, f: &FFunctor) -> Result<FFunctor> {
    if !same_fcat(f.cod(), g.dom()) {
        return Err(Error::boundary(format!("codomain of `{}` is not the domain of `{}`", f.name, g.name)));
    }
    Ok(FFunctor {
        name: format!("{}∘{}", g.name, f.name),
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        obj: f.obj.iter().map(|&x| g.obj[x]).collect(),
        one: f.one.iter().map(|&x| g.one[x]).collect(),
        two: f.two.iter().map(|&x| g.two[x]).collect(),
    })
}

/// Validation of an F-functor with its three local flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFunctorReport {
    pub validation: Validation,
    pub reflects_identity_2cells: bool,
    pub locally_conservative: bool,
    pub locally_faithful: bool,
}

impl FFunctorReport {
    pub fn is_ok(&self) -> bool {
        self.validation.is_ok()
    }
}

/// Checks 2-functoriality and preservation of tightness, and computes the
/// local flags.
pub fn validate_ffunctor(f: &FFunctor) -> FFunctorReport {
    let (d, c) = (f.dom.ambient(), f.cod.ambient());
    let mut v = Validation::new(format!("F-functor {}", f.name));
    for g in 0..d.n1() {
        let fg = f.on1(g);
        v.require(c.src1(fg) == f.ob(d.src1(g)) && c.tgt1(fg) == f.ob(d.tgt1(g)), "1-cell-boundary", || [d.name1(g).to_string()]);
        v.require(!f.dom.tight(g) || f.cod.tight(fg), "preserves-tightness", || [d.name1(g).to_string()]);
    }
    for a in 0..d.n2() {
        let fa = f.on2(a);
        v.require(c.src2(fa) == f.on1(d.src2(a)) && c.tgt2(fa) == f.on1(d.tgt2(a)), "2-cell-boundary", || [d.name2(a).to_string()]);
    }
    let flags_none = |v: Validation| FFunctorReport { validation: v, reflects_identity_2cells: false, locally_conservative: false, locally_faithful: false };
    if !v.is_ok() {
        return flags_none(v);
    }
    for x in 0..d.n0() {
        v.require(f.on1(d.id1(x)) == c.id1(f.ob(x)), "1-identity", || [d.obj_name(x).to_string()]);
    }
    for g in 0..d.n1() {
        v.require(f.on2(d.id2(g)) == c.id2(f.on1(g)), "2-identity", || [d.name1(g).to_string()]);
        for h in 0..d.n1() {
            if let Some(hg) = d.try_comp1(h, g) {
                v.require(f.on1(hg) == c.comp1(f.on1(h), f.on1(g)), "1-composition", || [d.name1(h).to_string(), d.name1(g).to_string()]);
            }
        }
    }
    for b in 0..d.n2() {
        for a in 0..d.n2() {
            if let Some(ba) = d.try_vcomp(b, a) {
                v.require(f.on2(ba) == c.vcomp(f.on2(b), f.on2(a)), "vertical-composition", || [d.name2(b).to_string(), d.name2(a).to_string()]);
            }
        }
        for h in 0..d.n1() {
            if let Some(hb) = d.try_lwhisk(h, b) {
                v.require(f.on2(hb) == c.lwhisk(f.on1(h), f.on2(b)), "left-whiskering", || [d.name1(h).to_string(), d.name2(b).to_string()]);
            }
            if let Some(bh) = d.try_rwhisk(b, h) {
                v.require(f.on2(bh) == c.rwhisk(f.on2(b), f.on1(h)), "right-whiskering", || [d.name2(b).to_string(), d.name1(h).to_string()]);
            }
        }
    }
    let reflects_identity_2cells = (0..d.n2()).all(|a| !c.is_id2(f.on2(a)) || d.is_id2(a));
    let locally_conservative = (0..d.n2()).all(|a| !c.is_invertible2(f.on2(a)) || d.is_invertible2(a));
    let locally_faithful = (0..d.n2()).all(|a| (0..a).all(|b| !(d.src2(a) == d.src2(b) && d.tgt2(a) == d.tgt2(b) && f.on2(a) == f.on2(b))));
    FFunctorReport { validation: v, reflects_identity_2cells, locally_conservative, locally_faithful }
}

/// The sub-2-category on the tight 1-cells, as an all-tight F-category, with
/// its inclusion `j: A_τ → A`.
pub fn tight_inclusion(a: &Arc<FCategory>) -> (Arc<FCategory>, FFunctor) {
    let c = a.ambient();
    let ones: Vec<usize> = a.tight_cells();
    let mut new1 = vec![usize::MAX; c.n1()];
    for (i, &f) in ones.iter().enumerate() {
        new1[f] = i;
    }
    let twos: Vec<usize> = (0..c.n2()).filter(|&x| a.tight(c.src2(x)) && a.tight(c.tgt2(x))).collect();
    let mut new2 = vec![usize::MAX; c.n2()];
    for (i, &x) in twos.iter().enumerate() {
        new2[x] = i;
    }
    let cells1 = ones.iter().map(|&f| Cell1 { name: c.name1(f).to_string(), src: c.src1(f), tgt: c.tgt1(f) }).collect();
    let cells2 = twos.iter().map(|&x| Cell2 { name: c.name2(x).to_string(), src: new1[c.src2(x)], tgt: new1[c.tgt2(x)] }).collect();
    let id1 = (0..c.n0()).map(|x| new1[c.id1(x)]).collect();
    let id2 = ones.iter().map(|&f| new2[c.id2(f)]).collect();
    let rules = TwoRules {
        comp1: &|g, f| new1[c.comp1(ones[g], ones[f])],
        vcomp: &|b, x| new2[c.vcomp(twos[b], twos[x])],
        lwhisk: &|h, x| new2[c.lwhisk(ones[h], twos[x])],
        rwhisk: &|x, k| new2[c.rwhisk(twos[x], ones[k])],
    };
    let tau = Fin2Category::from_fn(format!("{}_tau", c.name()), c.objects().to_vec(), cells1, id1, cells2, id2, rules);
    let tau = Arc::new(FCategory::all_tight(tau));
    let j = FFunctor { name: format!("j_{}", c.name()), dom: tau.clone(), cod: a.clone(), obj: (0..c.n0()).collect(), one: ones, two: twos };
    (tau, j)
}

/// Co-dual of a reflection: l and c swap, p is fixed, data unchanged.
pub fn co_dual_reflection(r: &Reflection<usize, usize>) -> Reflection<usize, usize> {
    Reflection::new(r.variance.dual(), r.f, r.g, r.eta)
}

/// Verdict of [`check_f_equivalence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub validation: Validation,
    pub is_isomorphism: bool,
    pub is_equivalence: bool,
}

/// Whether the functor between hom-categories `hom(x, y) → hom(Fx, Fy)` is
/// bijective on 1-cells (restricted to `cells`) and on 2-cells between them.
fn locally_bijective(f: &FFunctor, x: usize, y: usize, keep1: &dyn Fn(&FCategory, usize) -> bool) -> std::result::Result<(), String> {
    let (d, c) = (f.dom.ambient(), f.cod.ambient());
    let src: Vec<usize> = d.hom1(x, y).iter().copied().filter(|&g| keep1(&f.dom, g)).collect();
    let tgt: Vec<usize> = c.hom1(f.ob(x), f.ob(y)).iter().copied().filter(|&g| keep1(&f.cod, g)).collect();
    let mut images: Vec<usize> = src.iter().map(|&g| f.on1(g)).collect();
    images.sort_unstable();
    let mut expect = tgt.clone();
    expect.sort_unstable();
    if images != expect {
        return Err(format!("1-cells {} → {}", d.obj_name(x), d.obj_name(y)));
    }
    for &g in &src {
        for &h in &src {
            let mut im: Vec<usize> = d.hom2(g, h).iter().map(|&a| f.on2(a)).collect();
            im.sort_unstable();
            let mut want = c.hom2(f.on1(g), f.on1(h)).to_vec();
            want.sort_unstable();
            if im != want {
                return Err(format!("2-cells {} ⇒ {}", d.name1(g), d.name1(h)));
            }
        }
    }
    Ok(())
}

/// Tight equivalence between two objects: tight `u`, `v` with invertible
/// 2-cells `1 ≅ v·u` and `u·v ≅ 1`.
fn tight_equivalent(a: &FCategory, x: usize, y: usize) -> bool {
    let c = a.ambient();
    let iso_to_id = |f: usize, obj: usize| c.hom2(c.id1(obj), f).iter().any(|&t| c.is_invertible2(t));
    c.hom1(x, y)
        .iter()
        .filter(|&&u| a.tight(u))
        .any(|&u| c.hom1(y, x).iter().filter(|&&v| a.tight(v)).any(|&v| iso_to_id(c.comp1(v, u), x) && iso_to_id(c.comp1(u, v), y)))
}

/// Essential surjectivity of the tight part and 2-full-faithfulness of both
/// the tight and loose parts; also reports whether `F` is an isomorphism.
pub fn check_f_equivalence(f: &FFunctor) -> EquivalenceReport {
    let mut v = Validation::new(format!("equivalence check for {}", f.name));
    let (d, c) = (f.dom.ambient(), f.cod.ambient());
    for y in 0..c.n0() {
        let hit = (0..d.n0()).any(|x| f.ob(x) == y || tight_equivalent(&f.cod, f.ob(x), y));
        v.require(hit, "essentially-surjective", || [c.obj_name(y).to_string()]);
    }
    let tight_only = |a: &FCategory, g: usize| a.tight(g);
    let everything = |_: &FCategory, _: usize| true;
    for x in 0..d.n0() {
        for y in 0..d.n0() {
            if let Err(w) = locally_bijective(f, x, y, &tight_only) {
                v.fail("tight-2-fully-faithful", [w]);
            }
            if let Err(w) = locally_bijective(f, x, y, &everything) {
                v.fail("loose-2-fully-faithful", [w]);
            }
        }
    }
    let is_equivalence = v.is_ok();
    let bijective = |table: &[usize], n: usize| {
        let mut seen = vec![false; n];
        table.len() == n && table.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    };
    let is_isomorphism = is_equivalence
        && bijective(&f.obj, c.n0())
        && bijective(&f.one, c.n1())
        && bijective(&f.two, c.n2())
        && (0..d.n1()).all(|g| f.dom.tight(g) == f.cod.tight(f.on1(g)));
    EquivalenceReport { validation: v, is_isomorphism, is_equivalence }
}

/// The variance letter used by reflections in `F`-categories.
pub fn reflection_variances() -> [Variance; 3] {
    [Variance::Lax, Variance::Pseudo, Variance::Colax]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2cat::classifier::build_adj_classifier;
    use crate::f2cat::fixtures;

    #[test]
    fn markings() {
        let c = fixtures::arrow_2cat();
        assert!(validate_fcategory(&FCategory::all_tight(c.clone())).is_ok());
        assert!(validate_fcategory(&FCategory::identities_tight(c.clone())).is_ok());
        let adj = build_adj_classifier(Variance::Lax).unwrap();
        let amb = adj.category.ambient().clone();
        // Mark g and f tight but not g·f.
        let mut flags: Vec<bool> = (0..amb.n1()).map(|f| amb.is_id1(f)).collect();
        flags[adj.f] = true;
        flags[adj.g] = true;
        let bad = FCategory::new(amb, flags).unwrap();
        let v = validate_fcategory(&bad);
        assert!(v.has("tight-closure"));
    }

    #[test]
    fn identity_and_inclusion_flags() {
        let adj = build_adj_classifier(Variance::Lax).unwrap();
        let a = Arc::new(adj.category.clone());
        let r = validate_ffunctor(&FFunctor::identity(a.clone()));
        assert!(r.is_ok() && r.reflects_identity_2cells && r.locally_conservative && r.locally_faithful);
        let (tau, j) = tight_inclusion(&a);
        let r = validate_ffunctor(&j);
        assert!(r.is_ok() && r.reflects_identity_2cells && r.locally_conservative && r.locally_faithful);
        // The tight part is the walking arrow.
        assert_eq!(tau.ambient().n0(), 2);
        assert_eq!(tau.ambient().n1(), 3);
        assert_eq!(tau.ambient().n2(), 3);
    }

    #[test]
    fn identities_only_marking_gives_discrete_tight_part() {
        let a = Arc::new(FCategory::identities_tight(fixtures::arrow_2cat()));
        let (tau, _) = tight_inclusion(&a);
        assert_eq!(tau.ambient().n1(), tau.ambient().n0());
    }

    #[test]
    fn collapse_is_not_locally_faithful() {
        let src = Arc::new(FCategory::all_tight(fixtures::parallel_2cells()));
        let tgt = Arc::new(FCategory::all_tight(fixtures::arrow_2cat()));
        // Objects 0, 1; the two parallel 1-cells both go to f and the 2-cells to the identity.
        let d = src.ambient();
        let c = tgt.ambient();
        let f = c.index1("f").unwrap();
        let one: Vec<usize> = (0..d.n1()).map(|g| if d.is_id1(g) { c.id1(d.src1(g)) } else { f }).collect();
        let two: Vec<usize> = (0..d.n2()).map(|a| c.id2(one[d.src2(a)])).collect();
        let k = FFunctor::new("collapse", src, tgt, vec![0, 1], one, two).unwrap();
        let r = validate_ffunctor(&k);
        assert!(r.is_ok(), "{}", r.validation);
        assert!(!r.locally_faithful);
        assert!(!r.reflects_identity_2cells);
    }

    #[test]
    fn equivalence_checks() {
        let a = Arc::new(FCategory::all_tight(fixtures::arrow_2cat()));
        let r = check_f_equivalence(&FFunctor::identity(a.clone()));
        assert!(r.is_equivalence && r.is_isomorphism);
        // Inclusion of the skeleton {0} of an isomorphic pair 0 ≅ 1.
        let iso = Arc::new(FCategory::all_tight(fixtures::iso_pair_2cat()));
        let skel = Arc::new(FCategory::all_tight(fixtures::point_2cat()));
        let inc = FFunctor::new("skeleton", skel, iso.clone(), vec![0], vec![iso.ambient().id1(0)], vec![iso.ambient().id2(iso.ambient().id1(0))]).unwrap();
        let r = check_f_equivalence(&inc);
        assert!(r.is_equivalence, "{}", r.validation);
        assert!(!r.is_isomorphism);
        // Discrete two objects into the arrow: not full.
        let disc = Arc::new(FCategory::all_tight(fixtures::discrete_2cat(2)));
        let c = a.ambient();
        let inc = FFunctor::new("points", disc, a.clone(), vec![0, 1], vec![c.id1(0), c.id1(1)], vec![c.id2(c.id1(0)), c.id2(c.id1(1))]).unwrap();
        let r = check_f_equivalence(&inc);
        assert!(!r.is_equivalence);
        assert!(r.validation.has("tight-2-fully-faithful"));
    }
}
