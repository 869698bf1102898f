use super::functor::{compose_functors, same_category, validate_functor, Functor};
use super::natural::{validate_nat_trans, NatTransformation};
use crate::check::Validation;
use crate::Result;

/// An adjunction `F ⊣ G` with `F: A → B`, unit `η: 1 ⇒ GF` and counit `ε: FG ⇒ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatAdjunction {
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTransformation,
    pub counit: NatTransformation,
}

/// Validation of an adjunction together with its reflection flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub validation: Validation,
    /// Counit is an identity (so `FG = 1` on the nose).
    pub is_l_reflection: bool,
    /// Identity counit and invertible unit.
    pub is_p_reflection: bool,
    /// Unit is an identity.
    pub is_c_reflection: bool,
}

impl AdjunctionReport {
    pub fn is_ok(&self) -> bool {
        self.validation.is_ok()
    }
}

impl CatAdjunction {
    /// The adjunction `1 ⊣ 1` with identity unit and counit.
    pub fn identity(f: &Functor) -> Result<CatAdjunction> {
        let id = Functor::identity(f.dom().clone());
        let unit = NatTransformation::identity(&compose_functors(&id, &id)?);
        Ok(CatAdjunction { left: id.clone(), right: id, unit: unit.clone(), counit: unit })
    }

    /// The opposite adjunction `G^op ⊣ F^op` between opposite categories.
    ///
    /// Its unit is `ε^op` and its counit `η^op`, so l-reflections become
    /// c-reflections and conversely.
    pub fn op(&self) -> CatAdjunction {
        let a_op = std::sync::Arc::new(self.left.dom().op());
        let b_op = std::sync::Arc::new(self.left.cod().op());
        let left = self.right.op_between(b_op.clone(), a_op.clone());
        let right = self.left.op_between(a_op.clone(), b_op.clone());
        let after_left = compose_functors(&right, &left).expect("composable");
        let after_right = compose_functors(&left, &right).expect("composable");
        let toggle = super::category::toggle_suffix;
        let unit = NatTransformation::new(toggle(&self.counit.name, "^op"), Functor::identity(b_op), after_left, self.counit.components().to_vec())
            .expect("sizes agree");
        let counit = NatTransformation::new(toggle(&self.unit.name, "^op"), after_right, Functor::identity(a_op), self.unit.components().to_vec())
            .expect("sizes agree");
        CatAdjunction { left, right, unit, counit }
    }
}

/// Checks the constituents, both triangle identities and the reflection flags.
pub fn validate_adjunction(adj: &CatAdjunction) -> AdjunctionReport {
    let mut v = Validation::new(format!("adjunction {} ⊣ {}", adj.left.name, adj.right.name));
    let (f, g) = (&adj.left, &adj.right);
    v.absorb("left:", validate_functor(f));
    v.absorb("right:", validate_functor(g));
    let shapes_ok = same_category(f.cod(), g.dom()) && same_category(g.cod(), f.dom());
    if !shapes_ok {
        v.fail("adjoint-shapes", [f.name.clone(), g.name.clone()]);
    }
    let none = |v: Validation| AdjunctionReport { validation: v, is_l_reflection: false, is_p_reflection: false, is_c_reflection: false };
    if !v.is_ok() {
        return none(v);
    }
    let gf = compose_functors(g, f).expect("checked shapes");
    let fg = compose_functors(f, g).expect("checked shapes");
    let id_a = Functor::identity(f.dom().clone());
    let id_b = Functor::identity(f.cod().clone());
    v.require(adj.unit.source() == &id_a && adj.unit.target() == &gf, "unit-boundary", || [adj.unit.name.clone()]);
    v.require(adj.counit.source() == &fg && adj.counit.target() == &id_b, "counit-boundary", || [adj.counit.name.clone()]);
    if !v.is_ok() {
        return none(v);
    }
    v.absorb("unit:", validate_nat_trans(&adj.unit));
    v.absorb("counit:", validate_nat_trans(&adj.counit));
    if !v.is_ok() {
        return none(v);
    }
    let (a, b) = (f.dom(), f.cod());
    for x in 0..a.num_objects() {
        let lhs = b.comp(adj.counit.at(f.ob(x)), f.mor(adj.unit.at(x)));
        v.require(lhs == b.id(f.ob(x)), "left-triangle", || [a.obj_name(x).to_string()]);
    }
    for y in 0..b.num_objects() {
        let lhs = a.comp(g.mor(adj.counit.at(y)), adj.unit.at(g.ob(y)));
        v.require(lhs == a.id(g.ob(y)), "right-triangle", || [b.obj_name(y).to_string()]);
    }
    let ok = v.is_ok();
    let is_l = ok && fg == id_b && adj.counit.is_identity();
    let is_c = ok && gf == id_a && adj.unit.is_identity();
    let is_p = is_l && adj.unit.inverse().is_some();
    AdjunctionReport { validation: v, is_l_reflection: is_l, is_p_reflection: is_p, is_c_reflection: is_c }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures;
    use std::sync::Arc;

    #[test]
    fn identity_adjunction_has_all_flags() {
        let c = Arc::new(fixtures::chain(3));
        let adj = CatAdjunction::identity(&Functor::identity(c)).unwrap();
        let r = validate_adjunction(&adj);
        assert!(r.is_ok() && r.is_l_reflection && r.is_p_reflection && r.is_c_reflection);
    }

    #[test]
    fn galois_with_surjective_left_adjoint_is_l_reflection() {
        // Left adjoint [3] → [2] sending 0 ↦ 0 and 1, 2 ↦ 1.
        let adj = fixtures::galois_connection(3, 2, &[0, 1, 1]).unwrap();
        let r = validate_adjunction(&adj);
        assert!(r.is_ok(), "{}", r.validation);
        assert!(r.is_l_reflection);
        assert!(!r.is_p_reflection);
    }

    #[test]
    fn non_identity_counit_is_not_l_reflection() {
        // Left adjoint [2] → [2] constant at 0 is not left adjoint; use [2] → [3], 0 ↦ 0, 1 ↦ 1.
        let adj = fixtures::galois_connection(2, 3, &[0, 1]).unwrap();
        let r = validate_adjunction(&adj);
        assert!(r.is_ok(), "{}", r.validation);
        assert!(!r.is_l_reflection);
        assert!(r.is_c_reflection);
    }

    #[test]
    fn op_swaps_reflection_flags() {
        let adj = fixtures::galois_connection(3, 2, &[0, 1, 1]).unwrap();
        let dual = adj.op();
        let r = validate_adjunction(&dual);
        assert!(r.is_ok(), "{}", r.validation);
        assert!(r.is_c_reflection && !r.is_l_reflection);
        assert_eq!(dual.op(), adj);
    }
}
