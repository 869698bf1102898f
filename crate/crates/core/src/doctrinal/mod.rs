//! Lifting an adjunction `F ⊣ G` along the forgetful functor from monoidal
//! categories: when `F` is strong monoidal, `G` acquires a unique lax
//! structure making unit and counit monoidal.
//!
//! The lax constraints are
//!
//! ```text
//! g_{x,y} = G(ε_x ⊗ ε_y) ∘ G(f_{Gx,Gy}⁻¹) ∘ η_{Gx⊗Gy}
//! g_0     = G(f_0⁻¹) ∘ η_i
//! ```
//!
//! The colax case runs the same construction on opposite categories.

use std::sync::Arc;

use serde::Serialize;

use crate::check::Validation;
use crate::fincat::{validate_adjunction, CatAdjunction, Functor, Mor};
use crate::moncat::{
    compose_monoidal_functors, enumerate_monoidal_structures, validate_monoidal_functor, validate_monoidal_transformation, MonoidalCategory, MonoidalTransformation,
    WMonoidalFunctor,
};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// A lifted adjunction with its certificates.
#[derive(Clone, Debug)]
pub struct DoctrinalLift {
    pub variance: Variance,
    pub input: WMonoidalFunctor,
    pub adjunction: CatAdjunction,
    pub lifted: WMonoidalFunctor,
    pub lifted_unit: MonoidalTransformation,
    pub lifted_counit: MonoidalTransformation,
}

/// Summary of the certificates carried by a [`DoctrinalLift`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftCertificate {
    pub lifted: Validation,
    pub unit: Validation,
    pub counit: Validation,
    pub recovers_adjunction: bool,
}

impl LiftCertificate {
    pub fn is_ok(&self) -> bool {
        self.lifted.is_ok() && self.unit.is_ok() && self.counit.is_ok() && self.recovers_adjunction
    }
}

fn orientation(msg: impl Into<String>) -> Error {
    Error::Orientation(format!("doctrinal orientation error: {}", msg.into()))
}

fn same_functor(a: &Functor, b: &Functor) -> bool {
    a == b
}

fn check_adjunction(adj: &CatAdjunction) -> Result<()> {
    let r = validate_adjunction(adj);
    if r.is_ok() {
        Ok(())
    } else {
        Err(Error::Invalid(r.validation))
    }
}

/// The monoidal unit `1 ⇒ G∘F` and counit `F∘G ⇒ 1` for a chosen structure
/// on each side.
fn unit_and_counit(f: &WMonoidalFunctor, g: &WMonoidalFunctor, adj: &CatAdjunction) -> Result<(MonoidalTransformation, MonoidalTransformation)> {
    let gf = compose_monoidal_functors(g, f)?;
    let fg = compose_monoidal_functors(f, g)?;
    let unit = MonoidalTransformation::new(adj.unit.name.clone(), WMonoidalFunctor::identity(f.dom().clone()), gf, adj.unit.components().to_vec())?;
    let counit = MonoidalTransformation::new(adj.counit.name.clone(), fg, WMonoidalFunctor::identity(f.cod().clone()), adj.counit.components().to_vec())?;
    Ok((unit, counit))
}

/// Re-checks every invariant of a lift.
pub fn certify_lift(lift: &DoctrinalLift) -> Result<LiftCertificate> {
    let right_side = lift.variance != Variance::Colax;
    let underlying = if right_side { &lift.adjunction.right } else { &lift.adjunction.left };
    Ok(LiftCertificate {
        lifted: validate_monoidal_functor(&lift.lifted),
        unit: validate_monoidal_transformation(&lift.lifted_unit)?,
        counit: validate_monoidal_transformation(&lift.lifted_counit)?,
        recovers_adjunction: same_functor(lift.lifted.functor(), underlying)
            && lift.lifted_unit.underlying().components() == lift.adjunction.unit.components()
            && lift.lifted_counit.underlying().components() == lift.adjunction.counit.components(),
    })
}

fn lift_lax(w: Variance, f: &WMonoidalFunctor, adj: &CatAdjunction) -> Result<DoctrinalLift> {
    if !matches!(f.variance, Variance::Strict | Variance::Pseudo) {
        return Err(orientation(format!("the left adjoint {} must be strict or strong monoidal, not {}", f.name, f.variance)));
    }
    if !same_functor(f.functor(), &adj.left) {
        return Err(orientation(format!("{} is not the left adjoint of the supplied adjunction", f.name)));
    }
    check_adjunction(adj)?;
    if w == Variance::Pseudo && (adj.unit.inverse().is_none() || adj.counit.inverse().is_none()) {
        return Err(Error::precondition("the p-lift needs an adjoint equivalence: both η and ε must be invertible"));
    }
    let fv = validate_monoidal_functor(f);
    if !fv.is_ok() {
        return Err(Error::Invalid(fv));
    }
    let (a, b): (&Arc<MonoidalCategory>, &Arc<MonoidalCategory>) = (f.dom(), f.cod());
    let (ca, cb) = (a.base(), b.base());
    let g = &adj.right;
    let (eta, eps) = (&adj.unit, &adj.counit);
    let k = cb.num_objects();
    let mut table = Vec::with_capacity(k * k);
    for i in 0..k * k {
        let (x, y) = (i / k, i % k);
        let (gx, gy) = (g.ob(x), g.ob(y));
        let f_inv = cb.inverse(f.lax_at(gx, gy)?).ok_or_else(|| orientation(format!("constraint of {} at ({gx}, {gy}) is not invertible", f.name)))?;
        let m = ca.comp_all(&[g.mor(b.t1(eps.at(x), eps.at(y))), g.mor(f_inv), eta.at(a.t0(gx, gy))]);
        table.push(m);
    }
    let f0_inv = cb.inverse(f.lax_unit()?).ok_or_else(|| orientation(format!("unit constraint of {} is not invertible", f.name)))?;
    let g0 = ca.comp(g.mor(f0_inv), eta.at(a.unit()));
    let lifted = WMonoidalFunctor::new(g.name.clone(), w, b.clone(), a.clone(), g.clone(), table, g0)?;
    let (lifted_unit, lifted_counit) = unit_and_counit(f, &lifted, adj)?;
    let lift = DoctrinalLift { variance: w, input: f.clone(), adjunction: adj.clone(), lifted, lifted_unit, lifted_counit };
    let cert = certify_lift(&lift)?;
    if !cert.is_ok() {
        return Err(Error::consistency(format!("computed lift fails its own certificate: {cert:?}")));
    }
    Ok(lift)
}

/// Lifts `adj` to monoidal categories.
///
/// For `l` and `p`, `F` is the strict or strong left adjoint and the right
/// adjoint acquires the structure. For `c`, `F` is the strong right adjoint and
/// the left adjoint becomes colax monoidal.
pub fn lift_adjunction(w: Variance, f: &WMonoidalFunctor, adj: &CatAdjunction) -> Result<DoctrinalLift> {
    match w {
        Variance::Lax | Variance::Pseudo => lift_lax(w, f, adj),
        Variance::Colax => {
            if !same_functor(f.functor(), &adj.right) {
                return Err(orientation(format!("for the c-lift {} must be the right adjoint", f.name)));
            }
            let dual = lift_lax(Variance::Lax, &f.op()?, &adj.op())?;
            Ok(DoctrinalLift {
                variance: w,
                input: f.clone(),
                adjunction: adj.clone(),
                lifted: dual.lifted.op()?,
                lifted_unit: dual.lifted_counit.op()?,
                lifted_counit: dual.lifted_unit.op()?,
            })
        }
        Variance::Strict => Err(orientation("adjunctions lift with variance l, p or c")),
    }
}

/// Every structure on `g` of variance `w` that makes the adjunction's unit and
/// counit monoidal, found by exhaustive search.
pub fn enumerate_compatible_structures(w: Variance, g: &Functor, adj: &CatAdjunction, f: &WMonoidalFunctor, cap: Cap) -> Result<Vec<WMonoidalFunctor>> {
    let g_is_right = w != Variance::Colax && same_functor(g, &adj.right) && same_functor(f.functor(), &adj.left);
    let g_is_left = w == Variance::Colax && same_functor(g, &adj.left) && same_functor(f.functor(), &adj.right);
    let (dom, cod) = (f.cod().clone(), f.dom().clone());
    let mut out = Vec::new();
    for cand in enumerate_monoidal_structures(w, g, &dom, &cod, cap)? {
        let (l, r) = if g_is_right {
            (f, &cand)
        } else if g_is_left {
            (&cand, f)
        } else {
            return Err(Error::boundary(format!("{} is not adjoint to {} in the supplied adjunction", g.name, f.name)));
        };
        let (unit, counit) = match unit_and_counit(l, r, adj) {
            Ok(x) => x,
            Err(Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        };
        if validate_monoidal_transformation(&unit)?.is_ok() && validate_monoidal_transformation(&counit)?.is_ok() {
            out.push(cand);
        }
    }
    Ok(out)
}

/// The displayed composite for `g_{x,y}` evaluated directly, for comparison
/// against a stored constraint.
pub fn displayed_composite(f: &WMonoidalFunctor, adj: &CatAdjunction, x: usize, y: usize) -> Result<Mor> {
    let (a, b) = (f.dom(), f.cod());
    let g = &adj.right;
    let (gx, gy) = (g.ob(x), g.ob(y));
    let f_inv = b.base().inverse(f.lax_at(gx, gy)?).ok_or_else(|| orientation("non-invertible constraint"))?;
    let path = [adj.unit.at(a.t0(gx, gy)), g.mor(f_inv), g.mor(b.t1(adj.counit.at(x), adj.counit.at(y)))];
    let c = a.base();
    path.iter().skip(1).try_fold(path[0], |acc, &m| c.compose(m, acc)).ok_or_else(|| Error::consistency("displayed composite is not composable"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures::{cyclic, galois_between};
    use crate::fincat::NatTransformation;
    use crate::moncat::fixtures::{join_chain, poset_monoidal_functor, sigma, sigma_functor};
    use crate::moncat::op_dualize;

    fn galois(m: usize, n: usize, left: &[usize]) -> (WMonoidalFunctor, CatAdjunction) {
        let a = Arc::new(join_chain(m));
        let b = Arc::new(join_chain(n));
        let adj = galois_between(a.base(), b.base(), left).unwrap();
        let f = poset_monoidal_functor("F", Variance::Strict, &a, &b, left).unwrap();
        (f, adj)
    }

    /// `id ⊣ id` on ΣZ3 with unit `e1` and counit `e2`.
    fn twisted_equivalence() -> (WMonoidalFunctor, CatAdjunction) {
        let z = Arc::new(sigma(&cyclic(3)).unwrap());
        let f = sigma_functor("F", Variance::Strict, &z, &z, &[0, 1, 2], 0, 0).unwrap();
        let id = f.functor().clone();
        let unit = NatTransformation::new("eta", id.clone(), id.clone(), vec![1]).unwrap();
        let counit = NatTransformation::new("eps", id.clone(), id.clone(), vec![2]).unwrap();
        (f, CatAdjunction { left: id.clone(), right: id, unit, counit })
    }

    #[test]
    fn identity_lifts_to_identity() {
        let a = Arc::new(join_chain(3));
        let f = WMonoidalFunctor::identity(a.clone());
        let adj = CatAdjunction::identity(f.functor()).unwrap();
        let lift = lift_adjunction(Variance::Lax, &f, &adj).unwrap();
        assert!(lift.lifted.constraint_table().iter().all(|&m| a.base().is_identity(m)));
    }

    #[test]
    fn galois_lift_is_the_unique_compatible_structure() {
        for left in [[0, 0, 1], [0, 1, 1]] {
            let (f, adj) = galois(3, 2, &left);
            let lift = lift_adjunction(Variance::Lax, &f, &adj).unwrap();
            let all = enumerate_compatible_structures(Variance::Lax, &adj.right, &adj, &f, Cap::default()).unwrap();
            assert_eq!(all.len(), 1);
            assert_eq!(all[0].constraint_table(), lift.lifted.constraint_table());
        }
    }

    #[test]
    fn constraints_equal_the_displayed_composite() {
        let (f, adj) = twisted_equivalence();
        let lift = lift_adjunction(Variance::Lax, &f, &adj).unwrap();
        assert_eq!(lift.lifted.at(0, 0), displayed_composite(&f, &adj, 0, 0).unwrap());
        // ε·ε·η = 2 + 2 + 1 in Z3, and g_0 = η.
        assert_eq!((lift.lifted.at(0, 0), lift.lifted.unit_constraint()), (2, 1));
        let all = enumerate_compatible_structures(Variance::Lax, &adj.right, &adj, &f, Cap::default()).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn pseudo_lift_on_an_equivalence_is_invertible() {
        let (f, adj) = twisted_equivalence();
        let lift = lift_adjunction(Variance::Pseudo, &f, &adj).unwrap();
        let c = lift.lifted.cod().base().clone();
        assert!(lift.lifted.constraint_table().iter().all(|&m| c.is_iso(m)));
        let (f, adj) = galois(3, 2, &[0, 0, 1]);
        assert!(matches!(lift_adjunction(Variance::Pseudo, &f, &adj), Err(Error::Precondition(_))));
    }

    #[test]
    fn lax_input_is_an_orientation_error() {
        let (f, adj) = galois(3, 2, &[0, 0, 1]);
        let lax = f.with_variance(Variance::Lax);
        let err = lift_adjunction(Variance::Lax, &lax, &adj).unwrap_err();
        assert!(err.to_string().contains("doctrinal orientation error"));
    }

    #[test]
    fn colax_lift_is_the_op_dual_of_the_lax_lift() {
        // The right adjoint of a Galois connection between join chains is
        // meet-preserving but only lax for join; use the equivalence instead.
        let (f, adj) = twisted_equivalence();
        let c = lift_adjunction(Variance::Colax, &f, &adj).unwrap();
        assert_eq!(c.lifted.variance, Variance::Colax);
        assert!(certify_lift(&c).unwrap().is_ok());
        let l = lift_adjunction(Variance::Lax, &op_dualize(&f).unwrap(), &adj.op()).unwrap();
        assert_eq!(op_dualize(&l.lifted).unwrap(), c.lifted);
        let all = enumerate_compatible_structures(Variance::Colax, &adj.left, &adj, &f, Cap::default()).unwrap();
        assert_eq!(all, [c.lifted]);
    }
}
