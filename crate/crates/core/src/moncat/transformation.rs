use super::functor::{same_monoidal, WMonoidalFunctor};
use crate::check::Validation;
use crate::fincat::{validate_nat_trans, Mor, NatTransformation};
use crate::variance::Variance;
use crate::{Error, Result};

/// A natural transformation between monoidal functors of one variance class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalTransformation {
    pub name: String,
    source: WMonoidalFunctor,
    target: WMonoidalFunctor,
    underlying: NatTransformation,
}

impl MonoidalTransformation {
    pub fn new(name: impl Into<String>, source: WMonoidalFunctor, target: WMonoidalFunctor, components: Vec<Mor>) -> Result<Self> {
        let name = name.into();
        if !same_monoidal(source.dom(), target.dom()) || !same_monoidal(source.cod(), target.cod()) {
            return Err(Error::boundary(format!("`{name}` joins monoidal functors that are not parallel")));
        }
        let underlying = NatTransformation::new(name.clone(), source.functor().clone(), target.functor().clone(), components)?;
        Ok(MonoidalTransformation { name, source, target, underlying })
    }

    pub fn identity(f: &WMonoidalFunctor) -> Self {
        let underlying = NatTransformation::identity(f.functor());
        MonoidalTransformation { name: underlying.name.clone(), source: f.clone(), target: f.clone(), underlying }
    }

    pub fn source(&self) -> &WMonoidalFunctor {
        &self.source
    }

    pub fn target(&self) -> &WMonoidalFunctor {
        &self.target
    }

    pub fn underlying(&self) -> &NatTransformation {
        &self.underlying
    }

    pub fn at(&self, a: usize) -> Mor {
        self.underlying.at(a)
    }

    /// The transformation between opposite functors, which runs backwards.
    pub fn op(&self) -> Result<MonoidalTransformation> {
        let (s, t) = (self.source.op()?, self.target.op()?);
        let underlying = self.underlying.op_between(s.functor().clone(), t.functor().clone());
        Ok(MonoidalTransformation { name: underlying.name.clone(), source: t, target: s, underlying })
    }
}

fn variance_class(a: Variance, b: Variance) -> Result<bool> {
    match a.join(b) {
        None => Err(Error::precondition(format!("variance mismatch: {a} and {b} monoidal functors admit no common transformations"))),
        Some(w) => Ok(w == Variance::Colax),
    }
}

/// Naturality together with the tensor and unit conditions, read in the
/// colax direction when either functor is colax.
pub fn validate_monoidal_transformation(t: &MonoidalTransformation) -> Result<Validation> {
    let (f, g) = (&t.source, &t.target);
    let colax = variance_class(f.variance, g.variance)?;
    let mut v = Validation::new(format!("monoidal transformation {}", t.name));
    v.absorb("natural: ", validate_nat_trans(&t.underlying));
    if !v.is_ok() {
        return Ok(v);
    }
    let (a, b) = (f.dom(), f.cod());
    let cb = b.base();
    let ca = a.base();
    let k = ca.num_objects();
    for x in 0..k {
        for y in 0..k {
            let xy = a.t0(x, y);
            let th = b.t1(t.at(x), t.at(y));
            let (lhs, rhs) = if colax {
                (cb.compose(g.colax_at(x, y)?, t.at(xy)), cb.compose(th, f.colax_at(x, y)?))
            } else {
                (cb.compose(t.at(xy), f.lax_at(x, y)?), cb.compose(g.lax_at(x, y)?, th))
            };
            v.require(lhs.is_some() && lhs == rhs, "tensor-condition", || [ca.obj_name(x).to_string(), ca.obj_name(y).to_string()]);
        }
    }
    let i = a.unit();
    let unit_ok = if colax { cb.compose(g.colax_unit()?, t.at(i)) == Some(f.colax_unit()?) } else { cb.compose(t.at(i), f.lax_unit()?) == Some(g.lax_unit()?) };
    v.require(unit_ok, "unit-condition", || [ca.obj_name(i).to_string()]);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moncat::fixtures::{join_chain, poset_monoidal_functor, sigma, sigma_functor};
    use std::sync::Arc;

    #[test]
    fn identity_transformation_is_monoidal() {
        let a = Arc::new(join_chain(3));
        let f = poset_monoidal_functor("f", Variance::Lax, &a, &a, &[0, 1, 2]).unwrap();
        assert!(validate_monoidal_transformation(&MonoidalTransformation::identity(&f)).unwrap().is_ok());
    }

    #[test]
    fn poset_transformations_are_automatic() {
        let a = Arc::new(join_chain(3));
        let b = Arc::new(join_chain(3));
        let f = poset_monoidal_functor("f", Variance::Lax, &a, &b, &[0, 1, 1]).unwrap();
        let g = poset_monoidal_functor("g", Variance::Lax, &a, &b, &[0, 1, 2]).unwrap();
        let comps = (0..3).map(|x| b.base().hom(f.functor().ob(x), g.functor().ob(x))[0]).collect();
        let t = MonoidalTransformation::new("t", f, g, comps).unwrap();
        assert!(validate_monoidal_transformation(&t).unwrap().is_ok());
    }

    #[test]
    fn corrupted_component_on_sigma_fails_the_tensor_condition() {
        let z3 = Arc::new(sigma(&crate::fincat::fixtures::cyclic(3)).unwrap());
        let f = sigma_functor("f", Variance::Strict, &z3, &z3, &[0, 1, 2], 0, 0).unwrap();
        let good = MonoidalTransformation::new("t", f.clone(), f.clone(), vec![0]).unwrap();
        assert!(validate_monoidal_transformation(&good).unwrap().is_ok());
        let bad = MonoidalTransformation::new("t", f.clone(), f, vec![1]).unwrap();
        let v = validate_monoidal_transformation(&bad).unwrap();
        assert!(v.has("tensor-condition"), "{v}");
    }

    #[test]
    fn lax_against_colax_is_a_mismatch() {
        let a = Arc::new(join_chain(2));
        let l = poset_monoidal_functor("l", Variance::Lax, &a, &a, &[0, 1]).unwrap();
        let c = poset_monoidal_functor("c", Variance::Colax, &a, &a, &[0, 1]).unwrap();
        let t = MonoidalTransformation::new("t", l, c, vec![0, 2]).unwrap();
        assert!(validate_monoidal_transformation(&t).is_err());
    }

    #[test]
    fn op_reverses_and_preserves_validity() {
        let a = Arc::new(join_chain(3));
        let f = poset_monoidal_functor("f", Variance::Lax, &a, &a, &[0, 1, 1]).unwrap();
        let g = poset_monoidal_functor("g", Variance::Lax, &a, &a, &[1, 1, 2]).unwrap();
        let comps = (0..3).map(|x| a.base().hom(f.functor().ob(x), g.functor().ob(x))[0]).collect();
        let t = MonoidalTransformation::new("t", f, g, comps).unwrap();
        let d = t.op().unwrap();
        assert_eq!(d.source().variance, Variance::Colax);
        assert_eq!(validate_monoidal_transformation(&d).unwrap().is_ok(), validate_monoidal_transformation(&t).unwrap().is_ok());
        assert_eq!(d.op().unwrap(), t);
    }
}
