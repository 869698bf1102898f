use std::sync::Arc;

use super::category::{FinCategory, Mor, Obj, StructureError};
use crate::check::Validation;
use crate::{Error, Result};

/// Structural equality of shared categories, short-circuiting on pointer identity.
pub fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor given by its object and morphism tables.
///
/// Equality is extensional: the label in `name` is ignored.
#[derive(Clone, Debug)]
pub struct Functor {
    pub name: String,
    dom: Arc<FinCategory>,
    cod: Arc<FinCategory>,
    obj: Vec<Obj>,
    mor: Vec<Mor>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.obj == other.obj && self.mor == other.mor && same_category(&self.dom, &other.dom) && same_category(&self.cod, &other.cod)
    }
}

impl Eq for Functor {}

impl Functor {
    /// Builds a functor from index tables, rejecting unmapped or dangling entries.
    pub fn new(
        name: impl Into<String>,
        dom: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        obj: Vec<Obj>,
        mor: Vec<Mor>,
    ) -> Result<Self, StructureError> {
        let name = name.into();
        if obj.len() != dom.num_objects() {
            return Err(StructureError::missing(format!("object map of `{name}`"), format!("{} of {} objects mapped", obj.len(), dom.num_objects())));
        }
        if mor.len() != dom.num_morphisms() {
            return Err(StructureError::missing(format!("morphism map of `{name}`"), format!("{} of {} morphisms mapped", mor.len(), dom.num_morphisms())));
        }
        if obj.iter().any(|&o| o >= cod.num_objects()) || mor.iter().any(|&m| m >= cod.num_morphisms()) {
            return Err(StructureError::dangling("<index>", format!("tables of `{name}`")));
        }
        Ok(Functor { name, dom, cod, obj, mor })
    }

    /// Builds a functor from name-keyed tables.
    pub fn from_names(
        name: impl Into<String>,
        dom: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        obj_map: &[(String, String)],
        mor_map: &[(String, String)],
    ) -> Result<Self, StructureError> {
        let name = name.into();
        let mut obj = vec![None; dom.num_objects()];
        for (a, b) in obj_map {
            let ai = dom.object_index(a).ok_or_else(|| StructureError::dangling(a.clone(), format!("object map of `{name}`")))?;
            let bi = cod.object_index(b).ok_or_else(|| StructureError::dangling(b.clone(), format!("object map of `{name}`")))?;
            obj[ai] = Some(bi);
        }
        let mut mor = vec![None; dom.num_morphisms()];
        for (a, b) in mor_map {
            let ai = dom.morphism_index(a).ok_or_else(|| StructureError::dangling(a.clone(), format!("morphism map of `{name}`")))?;
            let bi = cod.morphism_index(b).ok_or_else(|| StructureError::dangling(b.clone(), format!("morphism map of `{name}`")))?;
            mor[ai] = Some(bi);
        }
        let obj = obj
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| StructureError::missing(format!("object map of `{name}`"), format!("object `{}` is unmapped", dom.obj_name(i)))))
            .collect::<Result<Vec<_>, _>>()?;
        let mor = mor
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| StructureError::missing(format!("morphism map of `{name}`"), format!("morphism `{}` is unmapped", dom.mor_name(i)))))
            .collect::<Result<Vec<_>, _>>()?;
        Functor::new(name, dom, cod, obj, mor)
    }

    pub fn identity(c: Arc<FinCategory>) -> Functor {
        let obj = (0..c.num_objects()).collect();
        let mor = (0..c.num_morphisms()).collect();
        Functor { name: format!("1_{}", c.name()), dom: c.clone(), cod: c, obj, mor }
    }

    /// Constant functor at object `b`.
    pub fn constant(dom: Arc<FinCategory>, cod: Arc<FinCategory>, b: Obj) -> Functor {
        let obj = vec![b; dom.num_objects()];
        let mor = vec![cod.id(b); dom.num_morphisms()];
        Functor { name: format!("const_{}", cod.obj_name(b)), dom, cod, obj, mor }
    }

    pub fn dom(&self) -> &Arc<FinCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinCategory> {
        &self.cod
    }

    pub fn ob(&self, a: Obj) -> Obj {
        self.obj[a]
    }

    pub fn mor(&self, m: Mor) -> Mor {
        self.mor[m]
    }

    pub fn obj_table(&self) -> &[Obj] {
        &self.obj
    }

    pub fn mor_table(&self) -> &[Mor] {
        &self.mor
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_identity(&self) -> bool {
        same_category(&self.dom, &self.cod) && self.obj.iter().enumerate().all(|(i, &o)| i == o) && self.mor.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// The same tables read between opposite categories.
    pub fn op(&self) -> Functor {
        Functor {
            name: super::category::toggle_suffix(&self.name, "^op"),
            dom: Arc::new(self.dom.op()),
            cod: Arc::new(self.cod.op()),
            obj: self.obj.clone(),
            mor: self.mor.clone(),
        }
    }

    /// Re-targets the functor at opposite categories that are already built.
    pub fn op_between(&self, dom_op: Arc<FinCategory>, cod_op: Arc<FinCategory>) -> Functor {
        Functor { name: super::category::toggle_suffix(&self.name, "^op"), dom: dom_op, cod: cod_op, obj: self.obj.clone(), mor: self.mor.clone() }
    }
}

/// Checks boundaries, identities and composition.
pub fn validate_functor(f: &Functor) -> Validation {
    let (d, c) = (f.dom(), f.cod());
    let mut v = Validation::new(format!("functor {}", f.name));
    for m in 0..d.num_morphisms() {
        let fm = f.mor(m);
        v.require(c.src(fm) == f.ob(d.src(m)) && c.tgt(fm) == f.ob(d.tgt(m)), "source-target", || {
            [d.mor_name(m).to_string(), c.mor_name(fm).to_string()]
        });
    }
    if !v.is_ok() {
        return v;
    }
    for a in 0..d.num_objects() {
        v.require(f.mor(d.id(a)) == c.id(f.ob(a)), "identity", || [d.obj_name(a).to_string()]);
    }
    for (g, h, gh) in d.composition_triples() {
        v.require(c.comp(f.mor(g), f.mor(h)) == f.mor(gh), "composition", || [d.mor_name(g).to_string(), d.mor_name(h).to_string()]);
    }
    v
}

/// `g ∘ f`, computed pointwise.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if !same_category(f.cod(), g.dom()) {
        return Err(Error::boundary(format!("codomain of `{}` is not the domain of `{}`", f.name, g.name)));
    }
    let obj = f.obj.iter().map(|&o| g.ob(o)).collect();
    let mor = f.mor.iter().map(|&m| g.mor(m)).collect();
    Ok(Functor { name: format!("{}∘{}", g.name, f.name), dom: f.dom.clone(), cod: g.cod.clone(), obj, mor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures;

    #[test]
    fn identity_and_constant_are_functors() {
        let two = Arc::new(fixtures::chain(2));
        let one = Arc::new(fixtures::terminal());
        assert!(validate_functor(&Functor::identity(two.clone())).is_ok());
        assert!(validate_functor(&Functor::constant(two.clone(), one, 0)).is_ok());
    }

    #[test]
    fn wrong_source_is_reported() {
        let two = Arc::new(fixtures::chain(2));
        // Send the non-identity arrow to the identity at 0 while moving objects apart.
        let f = Functor::new("bad", two.clone(), two.clone(), vec![0, 1], vec![two.id(0), two.id(1), two.id(0)]).unwrap();
        let v = validate_functor(&f);
        assert!(v.has("source-target"));
    }

    #[test]
    fn unmapped_morphism_is_structural() {
        let two = Arc::new(fixtures::chain(2));
        let err = Functor::new("short", two.clone(), two, vec![0, 1], vec![0]).unwrap_err();
        assert!(matches!(err, StructureError::Missing { .. }));
    }

    #[test]
    fn units_of_composition() {
        let c3 = Arc::new(fixtures::chain(3));
        let f = crate::fincat::enumerate::enumerate_functors(&c3, &c3, crate::Cap::default()).unwrap();
        let id = Functor::identity(c3.clone());
        for g in &f {
            assert_eq!(&compose_functors(&id, g).unwrap(), g);
            assert_eq!(&compose_functors(g, &id).unwrap(), g);
        }
    }

    #[test]
    fn chain_composite_is_pointwise() {
        let c3 = Arc::new(fixtures::chain(3));
        let all = crate::fincat::enumerate::enumerate_functors(&c3, &c3, crate::Cap::default()).unwrap();
        for g in &all {
            for f in &all {
                let gf = compose_functors(g, f).unwrap();
                assert!(validate_functor(&gf).is_ok());
                for a in 0..3 {
                    assert_eq!(gf.ob(a), g.ob(f.ob(a)));
                }
            }
        }
    }
}
