use std::sync::Arc;

use super::category::{FinCategory, Mor, Obj, StructureError};
use super::functor::{compose_functors, same_category, validate_functor, Functor};
use crate::check::Validation;
use crate::{Error, Result};

/// A natural transformation `source ⇒ target` given by its components.
#[derive(Clone, Debug)]
pub struct NatTransformation {
    pub name: String,
    source: Functor,
    target: Functor,
    comp: Vec<Mor>,
}

impl PartialEq for NatTransformation {
    fn eq(&self, other: &Self) -> bool {
        self.comp == other.comp && self.source == other.source && self.target == other.target
    }
}

impl Eq for NatTransformation {}

impl NatTransformation {
    pub fn new(name: impl Into<String>, source: Functor, target: Functor, comp: Vec<Mor>) -> Result<Self, StructureError> {
        let name = name.into();
        if comp.len() != source.dom().num_objects() {
            return Err(StructureError::missing(
                format!("components of `{name}`"),
                format!("{} of {} components given", comp.len(), source.dom().num_objects()),
            ));
        }
        if comp.iter().any(|&m| m >= source.cod().num_morphisms()) {
            return Err(StructureError::dangling("<index>", format!("components of `{name}`")));
        }
        Ok(NatTransformation { name, source, target, comp })
    }

    pub fn from_names(name: impl Into<String>, source: Functor, target: Functor, components: &[(String, String)]) -> Result<Self, StructureError> {
        let name = name.into();
        let dom = source.dom().clone();
        let cod = source.cod().clone();
        let mut comp = vec![None; dom.num_objects()];
        for (a, m) in components {
            let ai = dom.object_index(a).ok_or_else(|| StructureError::dangling(a.clone(), format!("components of `{name}`")))?;
            let mi = cod.morphism_index(m).ok_or_else(|| StructureError::dangling(m.clone(), format!("components of `{name}`")))?;
            comp[ai] = Some(mi);
        }
        let comp = comp
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| StructureError::missing(format!("components of `{name}`"), format!("component at `{}` is missing", dom.obj_name(i)))))
            .collect::<Result<Vec<_>, _>>()?;
        NatTransformation::new(name, source, target, comp)
    }

    pub fn identity(f: &Functor) -> NatTransformation {
        let comp = (0..f.dom().num_objects()).map(|a| f.cod().id(f.ob(a))).collect();
        NatTransformation { name: format!("1_{}", f.name), source: f.clone(), target: f.clone(), comp }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn at(&self, a: Obj) -> Mor {
        self.comp[a]
    }

    pub fn components(&self) -> &[Mor] {
        &self.comp
    }

    pub fn dom_cat(&self) -> &Arc<FinCategory> {
        self.source.dom()
    }

    pub fn cod_cat(&self) -> &Arc<FinCategory> {
        self.source.cod()
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && (0..self.comp.len()).all(|a| self.cod_cat().is_identity(self.comp[a]))
    }

    /// Componentwise inverse, when every component is invertible.
    pub fn inverse(&self) -> Option<NatTransformation> {
        let c = self.cod_cat();
        let comp = self.comp.iter().map(|&m| c.inverse(m)).collect::<Option<Vec<_>>>()?;
        Some(NatTransformation { name: format!("{}^-1", self.name), source: self.target.clone(), target: self.source.clone(), comp })
    }

    /// The same components read as a transformation between opposite functors,
    /// which reverses its direction.
    pub fn op_between(&self, source_op: Functor, target_op: Functor) -> NatTransformation {
        NatTransformation { name: super::category::toggle_suffix(&self.name, "^op"), source: target_op, target: source_op, comp: self.comp.clone() }
    }
}

/// Checks component boundaries and every naturality square.
pub fn validate_nat_trans(t: &NatTransformation) -> Validation {
    let mut v = Validation::new(format!("transformation {}", t.name));
    let (f, g) = (t.source(), t.target());
    if !same_category(f.dom(), g.dom()) || !same_category(f.cod(), g.cod()) {
        v.fail("parallel-functors", [f.name.clone(), g.name.clone()]);
        return v;
    }
    let (d, c) = (f.dom(), f.cod());
    for a in 0..d.num_objects() {
        let m = t.at(a);
        v.require(c.src(m) == f.ob(a) && c.tgt(m) == g.ob(a), "component-boundary", || [d.obj_name(a).to_string(), c.mor_name(m).to_string()]);
    }
    if !v.is_ok() {
        return v;
    }
    for m in 0..d.num_morphisms() {
        let (a, b) = (d.src(m), d.tgt(m));
        let lhs = c.comp(g.mor(m), t.at(a));
        let rhs = c.comp(t.at(b), f.mor(m));
        v.require(lhs == rhs, "naturality", || [d.mor_name(m).to_string()]);
    }
    v
}

/// The pasting operations on natural transformations.
#[derive(Clone, Debug)]
pub enum NatOp<'a> {
    /// `β ∘ α`.
    Vertical(&'a NatTransformation, &'a NatTransformation),
    /// `H·α`.
    WhiskerLeft(&'a Functor, &'a NatTransformation),
    /// `α·K`.
    WhiskerRight(&'a NatTransformation, &'a Functor),
    /// `β * α` for `α: F ⇒ F'` and `β: G ⇒ G'` with `G` after `F`.
    Horizontal(&'a NatTransformation, &'a NatTransformation),
}

pub fn nat_calculus(op: NatOp<'_>) -> Result<NatTransformation> {
    match op {
        NatOp::Vertical(b, a) => vertical(b, a),
        NatOp::WhiskerLeft(h, a) => whisker_left(h, a),
        NatOp::WhiskerRight(a, k) => whisker_right(a, k),
        NatOp::Horizontal(b, a) => horizontal(b, a),
    }
}

pub fn vertical(b: &NatTransformation, a: &NatTransformation) -> Result<NatTransformation> {
    if a.target() != b.source() {
        return Err(Error::boundary(format!("target of `{}` is not the source of `{}`", a.name, b.name)));
    }
    let c = a.cod_cat();
    let comp = (0..a.comp.len()).map(|x| c.comp(b.at(x), a.at(x))).collect();
    Ok(NatTransformation { name: format!("{}∘{}", b.name, a.name), source: a.source.clone(), target: b.target.clone(), comp })
}

pub fn whisker_left(h: &Functor, a: &NatTransformation) -> Result<NatTransformation> {
    let source = compose_functors(h, a.source())?;
    let target = compose_functors(h, a.target())?;
    let comp = a.comp.iter().map(|&m| h.mor(m)).collect();
    Ok(NatTransformation { name: format!("{}·{}", h.name, a.name), source, target, comp })
}

pub fn whisker_right(a: &NatTransformation, k: &Functor) -> Result<NatTransformation> {
    let source = compose_functors(a.source(), k)?;
    let target = compose_functors(a.target(), k)?;
    let comp = (0..k.dom().num_objects()).map(|x| a.at(k.ob(x))).collect();
    Ok(NatTransformation { name: format!("{}·{}", a.name, k.name), source, target, comp })
}

pub fn horizontal(b: &NatTransformation, a: &NatTransformation) -> Result<NatTransformation> {
    let left = whisker_left(b.source(), a)?;
    let right = whisker_right(b, a.target())?;
    vertical(&right, &left).map(|t| t.named(format!("{}*{}", b.name, a.name)))
}

/// Validates the functors and then the transformation.
pub fn validate_nat_trans_deep(t: &NatTransformation) -> Validation {
    let mut v = Validation::new(format!("transformation {}", t.name));
    v.absorb("source:", validate_functor(t.source()));
    v.absorb("target:", validate_functor(t.target()));
    if v.is_ok() {
        v.absorb("", validate_nat_trans(t));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::enumerate::{enumerate_functors, enumerate_nat_trans};
    use crate::fincat::fixtures;
    use crate::Cap;

    #[test]
    fn identities_behave() {
        let c = Arc::new(fixtures::chain(3));
        for f in enumerate_functors(&c, &c, Cap::default()).unwrap() {
            let one = NatTransformation::identity(&f);
            assert!(validate_nat_trans(&one).is_ok());
            assert_eq!(vertical(&one, &one).unwrap(), one);
        }
        let h = Functor::identity(c.clone());
        let f = Functor::constant(c.clone(), c.clone(), 1);
        let w = whisker_left(&h, &NatTransformation::identity(&f)).unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn poset_constants_have_unique_comparison() {
        let c = Arc::new(fixtures::chain(3));
        let lo = Functor::constant(c.clone(), c.clone(), 0);
        let hi = Functor::constant(c.clone(), c.clone(), 2);
        let ts = enumerate_nat_trans(&lo, &hi, Cap::default()).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(validate_nat_trans(&ts[0]).is_ok());
        assert!(enumerate_nat_trans(&hi, &lo, Cap::default()).unwrap().is_empty());
    }

    #[test]
    fn mismatched_component_breaks_naturality() {
        // Two parallel arrows f, g: 0 → 1, compared with the functor swapping them.
        let arrows = ["1_0", "1_1", "f", "g"].iter().zip([(0, 0), (1, 1), (0, 1), (0, 1)]).map(|(n, (s, t))| crate::fincat::Arrow { name: n.to_string(), src: s, tgt: t }).collect();
        let c = Arc::new(FinCategory::from_fn("par", vec!["0".into(), "1".into()], arrows, vec![0, 1], |g, f| if g < 2 { f } else { g }));
        let id = Functor::identity(c.clone());
        let swap = Functor::new("swap", c.clone(), c.clone(), vec![0, 1], vec![0, 1, 3, 2]).unwrap();
        let bad = NatTransformation::new("bad", id, swap, vec![c.id(0), c.id(1)]).unwrap();
        let v = validate_nat_trans(&bad);
        assert!(v.has("naturality"));
        assert_eq!(v.violations[0].witness, vec!["f".to_string()]);
    }

    #[test]
    fn interchange_on_small_fixture() {
        let c = Arc::new(fixtures::chain(2));
        let fs = enumerate_functors(&c, &c, Cap::default()).unwrap();
        let mut checked = 0;
        for f in &fs {
            for f2 in &fs {
                for a in enumerate_nat_trans(f, f2, Cap::default()).unwrap() {
                    for g in &fs {
                        for g2 in &fs {
                            for b in enumerate_nat_trans(g, g2, Cap::default()).unwrap() {
                                let h = horizontal(&b, &a).unwrap();
                                let other = vertical(&whisker_left(g2, &a).unwrap(), &whisker_right(&b, f).unwrap()).unwrap();
                                assert_eq!(h.components(), other.components());
                                assert!(validate_nat_trans(&h).is_ok());
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}
