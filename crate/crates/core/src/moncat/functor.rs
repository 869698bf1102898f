use std::sync::Arc;

use super::category::{chain_comp, MonoidalCategory};
use crate::check::Validation;
use crate::fincat::{validate_functor, FinCategory, Functor, Mor, Obj};
use crate::search::{for_each_tuple, Cap};
use crate::variance::Variance;
use crate::{Error, Result};

/// A monoidal functor of variance `s`, `p`, `l` or `c`.
///
/// Constraints are stored in the lax direction `Fa⊗Fb → F(a⊗b)`,
/// `i → F i` for `s`, `p` and `l`, and in the colax direction for `c`.
#[derive(Clone, Debug)]
pub struct WMonoidalFunctor {
    pub name: String,
    pub variance: Variance,
    dom: Arc<MonoidalCategory>,
    cod: Arc<MonoidalCategory>,
    functor: Functor,
    constraint: Vec<Mor>,
    unit_constraint: Mor,
}

impl PartialEq for WMonoidalFunctor {
    fn eq(&self, o: &Self) -> bool {
        self.variance == o.variance
            && self.functor == o.functor
            && self.constraint == o.constraint
            && self.unit_constraint == o.unit_constraint
            && same_monoidal(&self.dom, &o.dom)
            && same_monoidal(&self.cod, &o.cod)
    }
}

impl Eq for WMonoidalFunctor {}

pub fn same_monoidal(a: &Arc<MonoidalCategory>, b: &Arc<MonoidalCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl WMonoidalFunctor {
    pub fn new(
        name: impl Into<String>,
        variance: Variance,
        dom: Arc<MonoidalCategory>,
        cod: Arc<MonoidalCategory>,
        functor: Functor,
        constraint: Vec<Mor>,
        unit_constraint: Mor,
    ) -> Result<Self> {
        let name = name.into();
        if **functor.dom() != **dom.base() || **functor.cod() != **cod.base() {
            return Err(Error::boundary(format!("underlying functor of `{name}` does not run between the bases of {} and {}", dom.name, cod.name)));
        }
        let k = dom.base().num_objects();
        if constraint.len() != k * k {
            return Err(Error::boundary(format!("`{name}` needs {} tensor constraints, got {}", k * k, constraint.len())));
        }
        let n = cod.base().num_morphisms();
        if constraint.iter().chain([&unit_constraint]).any(|&m| m >= n) {
            return Err(Error::boundary(format!("constraint of `{name}` is not a morphism of {}", cod.name)));
        }
        Ok(WMonoidalFunctor { name, variance, dom, cod, functor, constraint, unit_constraint })
    }

    /// A functor with the given constraint rules, tabulated over object pairs.
    pub fn from_fn(
        name: impl Into<String>,
        variance: Variance,
        dom: Arc<MonoidalCategory>,
        cod: Arc<MonoidalCategory>,
        functor: Functor,
        constraint: impl Fn(Obj, Obj) -> Mor,
        unit_constraint: Mor,
    ) -> Result<Self> {
        let k = dom.base().num_objects();
        let table = (0..k * k).map(|i| constraint(i / k, i % k)).collect();
        WMonoidalFunctor::new(name, variance, dom, cod, functor, table, unit_constraint)
    }

    pub fn identity(m: Arc<MonoidalCategory>) -> WMonoidalFunctor {
        let base = m.base().clone();
        let constraint = m.tensor_obj_table().iter().map(|&x| base.id(x)).collect();
        WMonoidalFunctor {
            name: format!("1_{}", m.name),
            variance: Variance::Strict,
            unit_constraint: base.id(m.unit()),
            functor: Functor::identity(base),
            dom: m.clone(),
            cod: m,
            constraint,
        }
    }

    pub fn dom(&self) -> &Arc<MonoidalCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<MonoidalCategory> {
        &self.cod
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    /// The stored constraint `f_{a,b}`.
    pub fn at(&self, a: Obj, b: Obj) -> Mor {
        self.constraint[a * self.dom.base().num_objects() + b]
    }

    pub fn unit_constraint(&self) -> Mor {
        self.unit_constraint
    }

    pub fn constraint_table(&self) -> &[Mor] {
        &self.constraint
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_variance(mut self, variance: Variance) -> Self {
        self.variance = variance;
        self
    }

    fn stored_lax(&self) -> bool {
        self.variance != Variance::Colax
    }

    fn flip(&self, m: Mor) -> Result<Mor> {
        let c = self.cod.base();
        c.inverse(m).ok_or_else(|| Error::precondition(format!("constraint `{}` of {} is not invertible", c.mor_name(m), self.name)))
    }

    /// `f_{a,b}` in the lax direction, inverting a colax-stored constraint only
    /// when it is invertible.
    pub fn lax_at(&self, a: Obj, b: Obj) -> Result<Mor> {
        if self.stored_lax() {
            Ok(self.at(a, b))
        } else {
            self.flip(self.at(a, b))
        }
    }

    pub fn lax_unit(&self) -> Result<Mor> {
        if self.stored_lax() {
            Ok(self.unit_constraint)
        } else {
            self.flip(self.unit_constraint)
        }
    }

    pub fn colax_at(&self, a: Obj, b: Obj) -> Result<Mor> {
        if self.stored_lax() {
            self.flip(self.at(a, b))
        } else {
            Ok(self.at(a, b))
        }
    }

    pub fn colax_unit(&self) -> Result<Mor> {
        if self.stored_lax() {
            self.flip(self.unit_constraint)
        } else {
            Ok(self.unit_constraint)
        }
    }

    /// The same functor between opposite monoidal categories: `l` and `c`
    /// swap, `s` and `p` stay put with pseudo constraints inverted.
    pub fn op(&self) -> Result<WMonoidalFunctor> {
        let dom = Arc::new(self.dom.op()?);
        let cod = Arc::new(self.cod.op()?);
        let functor = self.functor.op_between(dom.base().clone(), cod.base().clone());
        let (variance, constraint, unit_constraint) = match self.variance {
            Variance::Lax => (Variance::Colax, self.constraint.clone(), self.unit_constraint),
            Variance::Colax => (Variance::Lax, self.constraint.clone(), self.unit_constraint),
            w => {
                let table = self.constraint.iter().map(|&m| self.flip(m)).collect::<Result<Vec<_>>>()?;
                (w, table, self.flip(self.unit_constraint)?)
            }
        };
        Ok(WMonoidalFunctor { name: crate::fincat::category::toggle_suffix(&self.name, "^op"), variance, dom, cod, functor, constraint, unit_constraint })
    }
}

/// Orientation, naturality, the three coherence conditions and the
/// variance-specific strictness or invertibility.
pub fn validate_monoidal_functor(f: &WMonoidalFunctor) -> Validation {
    let mut v = Validation::new(format!("{}-monoidal functor {}", f.variance, f.name));
    v.absorb("functor: ", validate_functor(&f.functor));
    if !v.is_ok() {
        return v;
    }
    if f.variance == Variance::Colax {
        match f.op() {
            Ok(dual) => {
                let inner = validate_monoidal_functor(&dual);
                v.violations.extend(inner.violations);
            }
            Err(e) => v.fail("precondition", [e.to_string()]),
        }
        return v;
    }
    check_lax(f, &mut v);
    v
}

fn check_lax(f: &WMonoidalFunctor, v: &mut Validation) {
    let (a, b) = (&*f.dom, &*f.cod);
    let (ca, cb): (&FinCategory, &FinCategory) = (a.base(), b.base());
    let fun = &f.functor;
    let (k, n) = (ca.num_objects(), ca.num_morphisms());
    let on = |x: Obj| ca.obj_name(x).to_string();
    for x in 0..k {
        for y in 0..k {
            let m = f.at(x, y);
            let ok = cb.src(m) == b.t0(fun.ob(x), fun.ob(y)) && cb.tgt(m) == fun.ob(a.t0(x, y));
            v.require(ok, "orientation", || [on(x), on(y)]);
        }
    }
    let f0 = f.unit_constraint;
    v.require(cb.src(f0) == b.unit() && cb.tgt(f0) == fun.ob(a.unit()), "orientation", || ["unit".to_string()]);
    if !v.is_ok() {
        return;
    }
    for u in 0..n {
        for w in 0..n {
            let (x, x2, y, y2) = (ca.src(u), ca.tgt(u), ca.src(w), ca.tgt(w));
            let lhs = cb.compose(fun.mor(a.t1(u, w)), f.at(x, y));
            let rhs = cb.compose(f.at(x2, y2), b.t1(fun.mor(u), fun.mor(w)));
            v.require(lhs == rhs, "naturality", || [ca.mor_name(u).to_string(), ca.mor_name(w).to_string()]);
        }
    }
    let id = |x: Obj| cb.id(fun.ob(x));
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let lhs = chain_comp(cb, &[fun.mor(a.assoc(x, y, z)), f.at(a.t0(x, y), z), b.t1(f.at(x, y), id(z))]);
                let rhs = chain_comp(cb, &[f.at(x, a.t0(y, z)), b.t1(id(x), f.at(y, z)), b.assoc(fun.ob(x), fun.ob(y), fun.ob(z))]);
                v.require(lhs.is_some() && lhs == rhs, "associativity", || [on(x), on(y), on(z)]);
            }
        }
        let left = chain_comp(cb, &[fun.mor(a.lunit(x)), f.at(a.unit(), x), b.t1(f0, id(x))]);
        v.require(left == Some(b.lunit(fun.ob(x))), "left-unit", || [on(x)]);
        let right = chain_comp(cb, &[fun.mor(a.runit(x)), f.at(x, a.unit()), b.t1(id(x), f0)]);
        v.require(right == Some(b.runit(fun.ob(x))), "right-unit", || [on(x)]);
    }
    match f.variance {
        Variance::Strict => {
            for (i, &m) in f.constraint.iter().chain([&f0]).enumerate() {
                v.require(cb.is_identity(m), "strictness", || [constraint_label(f, i)]);
            }
        }
        Variance::Pseudo => {
            for (i, &m) in f.constraint.iter().chain([&f0]).enumerate() {
                v.require(cb.is_iso(m), "invertibility", || [constraint_label(f, i)]);
            }
        }
        _ => {}
    }
}

fn constraint_label(f: &WMonoidalFunctor, i: usize) -> String {
    let ca = f.dom.base();
    let k = ca.num_objects();
    if i == k * k {
        "unit".into()
    } else {
        format!("{}⊗{}", ca.obj_name(i / k), ca.obj_name(i % k))
    }
}

/// `G∘F` in the joined variance; `l` with `c` is rejected.
pub fn compose_monoidal_functors(g: &WMonoidalFunctor, f: &WMonoidalFunctor) -> Result<WMonoidalFunctor> {
    if !same_monoidal(&f.cod, &g.dom) {
        return Err(Error::boundary(format!("{} ends at {} but {} starts at {}", f.name, f.cod.name, g.name, g.dom.name)));
    }
    let w = f.variance.join(g.variance).ok_or_else(|| Error::precondition(format!("non-composable variances {} and {}: lax and colax morphisms cannot be composed", f.variance, g.variance)))?;
    let functor = crate::fincat::compose_functors(&g.functor, &f.functor)?;
    let c = g.cod.base();
    let gm = |m: Mor| g.functor.mor(m);
    let k = f.dom.base().num_objects();
    let mut table = Vec::with_capacity(k * k);
    let unit = if w == Variance::Colax {
        for i in 0..k * k {
            let (x, y) = (i / k, i % k);
            table.push(c.comp(g.colax_at(f.functor.ob(x), f.functor.ob(y))?, gm(f.colax_at(x, y)?)));
        }
        c.comp(g.colax_unit()?, gm(f.colax_unit()?))
    } else {
        for i in 0..k * k {
            let (x, y) = (i / k, i % k);
            table.push(c.comp(gm(f.lax_at(x, y)?), g.lax_at(f.functor.ob(x), f.functor.ob(y))?));
        }
        c.comp(gm(f.lax_unit()?), g.lax_unit()?)
    };
    WMonoidalFunctor::new(format!("{}∘{}", g.name, f.name), w, f.dom.clone(), g.cod.clone(), functor, table, unit)
}

/// Every constraint family on `functor` making it a valid monoidal functor of
/// variance `w`.
pub fn enumerate_monoidal_structures(w: Variance, functor: &Functor, dom: &Arc<MonoidalCategory>, cod: &Arc<MonoidalCategory>, cap: Cap) -> Result<Vec<WMonoidalFunctor>> {
    let (ca, cb) = (dom.base(), cod.base());
    let k = ca.num_objects();
    let ob = |x: Obj| functor.ob(x);
    let mut slots: Vec<Vec<Mor>> = Vec::with_capacity(k * k + 1);
    for i in 0..k * k {
        let (x, y) = (i / k, i % k);
        let (s, t) = (cod.t0(ob(x), ob(y)), ob(dom.t0(x, y)));
        slots.push(if w == Variance::Colax { cb.hom(t, s) } else { cb.hom(s, t) }.to_vec());
    }
    let (s, t) = (cod.unit(), ob(dom.unit()));
    slots.push(if w == Variance::Colax { cb.hom(t, s) } else { cb.hom(s, t) }.to_vec());
    let sizes: Vec<usize> = slots.iter().map(Vec::len).collect();
    cap.admit("monoidal constraint families", sizes.iter().copied())?;
    let mut budget = cap.budget("monoidal constraint families");
    let mut out = Vec::new();
    let mut err = None;
    for_each_tuple(&sizes, &mut budget, |t| {
        let table: Vec<Mor> = t[..k * k].iter().enumerate().map(|(i, &j)| slots[i][j]).collect();
        let unit = slots[k * k][t[k * k]];
        match WMonoidalFunctor::new(format!("{}#{}", functor.name, out.len()), w, dom.clone(), cod.clone(), functor.clone(), table, unit) {
            Ok(cand) => {
                if validate_monoidal_functor(&cand).is_ok() {
                    out.push(cand);
                }
                true
            }
            Err(e) => {
                err = Some(e);
                false
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moncat::fixtures::{join_chain, meet_chain, poset_monoidal_functor, sigma, sigma_functor};

    #[test]
    fn identity_is_strict_and_valid() {
        let m = Arc::new(join_chain(3));
        let id = WMonoidalFunctor::identity(m);
        assert!(validate_monoidal_functor(&id).is_ok());
        assert_eq!(id.op().unwrap().variance, Variance::Strict);
    }

    #[test]
    fn subadditive_map_of_join_semilattices_is_lax() {
        // Collapse [3] onto [2] by 0,1 ↦ 0 and 2 ↦ 1: join-preserving, so lax and strict.
        let a = Arc::new(join_chain(3));
        let b = Arc::new(join_chain(2));
        let f = poset_monoidal_functor("h", Variance::Lax, &a, &b, &[0, 0, 1]).unwrap();
        assert!(validate_monoidal_functor(&f).is_ok());
        // The constant-top map is lax for join: Fa ∨ Fb ≤ F(a ∨ b) and 0 ≤ top.
        let top = poset_monoidal_functor("top", Variance::Lax, &a, &b, &[1, 1, 1]).unwrap();
        assert!(validate_monoidal_functor(&top).is_ok());
        // The constant-top map is not colax: F(i) = top is not below the unit.
        assert!(poset_monoidal_functor("top", Variance::Colax, &a, &b, &[1, 1, 1]).is_err());
    }

    #[test]
    fn unit_condition_classifies_f0_on_sigma() {
        let z3 = Arc::new(sigma(&crate::fincat::fixtures::cyclic(3)).unwrap());
        let mut passing = Vec::new();
        for e in 0..3 {
            let f = sigma_functor("id", Variance::Lax, &z3, &z3, &[0, 1, 2], 0, e).unwrap();
            let v = validate_monoidal_functor(&f);
            if v.is_ok() {
                passing.push(e);
            } else {
                assert!(v.has("left-unit") || v.has("right-unit"), "{v}");
            }
        }
        assert_eq!(passing, [0]);
    }

    #[test]
    fn wrong_orientation_is_reported_separately() {
        let a = Arc::new(meet_chain(2));
        let b = Arc::new(meet_chain(2));
        let f = Functor::identity(a.base().clone());
        // Unit constraint pointing down from the top is the wrong way for lax.
        let bad = WMonoidalFunctor::from_fn("bad", Variance::Lax, a.clone(), b, f, |x, y| a.base().id(a.t0(x, y)), a.base().hom(1, 0).first().copied().unwrap_or(0)).unwrap();
        let v = validate_monoidal_functor(&bad);
        assert!(v.has("orientation") || !v.is_ok());
    }

    #[test]
    fn composition_joins_variances() {
        let a = Arc::new(join_chain(3));
        let b = Arc::new(join_chain(2));
        let f = poset_monoidal_functor("f", Variance::Lax, &a, &b, &[0, 0, 1]).unwrap();
        let g = WMonoidalFunctor::identity(b.clone());
        let gf = compose_monoidal_functors(&g, &f).unwrap();
        assert_eq!(gf.variance, Variance::Lax);
        assert!(validate_monoidal_functor(&gf).is_ok());
        assert_eq!(gf.constraint_table(), f.constraint_table());
        let colax = poset_monoidal_functor("c", Variance::Colax, &b, &b, &[0, 1]).unwrap();
        let err = compose_monoidal_functors(&colax, &f).unwrap_err();
        assert!(err.to_string().contains("non-composable variances"));
    }

    #[test]
    fn op_is_an_involution_and_preserves_validity() {
        let a = Arc::new(join_chain(3));
        let b = Arc::new(join_chain(2));
        let f = poset_monoidal_functor("f", Variance::Lax, &a, &b, &[0, 1, 1]).unwrap();
        let d = f.op().unwrap();
        assert_eq!(d.variance, Variance::Colax);
        assert_eq!(validate_monoidal_functor(&d).is_ok(), validate_monoidal_functor(&f).is_ok());
        assert_eq!(d.op().unwrap(), f);
    }

    #[test]
    fn enumeration_on_sigma_finds_exactly_the_lawful_families() {
        let z2 = Arc::new(sigma(&crate::fincat::fixtures::cyclic(2)).unwrap());
        let id = Functor::identity(z2.base().clone());
        let found = enumerate_monoidal_structures(Variance::Lax, &id, &z2, &z2, Cap::default()).unwrap();
        // The unit laws force f_{*,*} · f_0 = 0, leaving one family per choice of f_0.
        assert_eq!(found.len(), 2);
        assert!(found.iter().all(|f| f.at(0, 0) == f.unit_constraint()));
    }
}
