//! Comma-category limits of a functor.
//!
//! Objects of `B/F` are triples `(x, α, a)` with `α: x → Fa`; a morphism
//! `(x, α, a) → (x', α', a')` is a pair `(u, v)` with `α'∘u = F(v)∘α`.
//! The lax limit `F/B` is computed as the opposite of `B^op/F^op`, so its
//! triples read `α: Fa → x` in `B`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::fincat::{compose_functors, Arrow, FinCategory, Functor, Mor, NatTransformation, Obj};
use crate::variance::Variance;
use crate::{Error, Result};

/// An object `(x, α, a)` of a comma category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CommaObj {
    pub x: Obj,
    pub alpha: Mor,
    pub a: Obj,
}

/// The w̄-limit of a functor `f`: colax for `l`, pseudo for `p` and lax for
/// `c`, with projections `p: apex → dom f`, `q: apex → cod f` and the cone
/// 2-cell `λ` (`q ⇒ f·p` for `l` and `p`, `f·p ⇒ q` for `c`).
#[derive(Clone, Debug)]
pub struct ArrowLimit {
    pub variance: Variance,
    pub f: Functor,
    pub apex: Arc<FinCategory>,
    pub p: Functor,
    pub q: Functor,
    pub lambda: NatTransformation,
    objects: Vec<CommaObj>,
    morphisms: Vec<(Mor, Mor)>,
    obj_index: HashMap<CommaObj, Obj>,
    mor_index: HashMap<(Obj, Obj, Mor, Mor), Mor>,
}

impl ArrowLimit {
    pub fn comma_obj(&self, o: Obj) -> CommaObj {
        self.objects[o]
    }

    /// The pair `(u, v)` underlying an apex morphism.
    pub fn comma_mor(&self, m: Mor) -> (Mor, Mor) {
        self.morphisms[m]
    }

    pub fn find_obj(&self, o: CommaObj) -> Option<Obj> {
        self.obj_index.get(&o).copied()
    }

    pub fn find_mor(&self, src: Obj, tgt: Obj, u: Mor, v: Mor) -> Option<Mor> {
        self.mor_index.get(&(src, tgt, u, v)).copied()
    }

    pub fn objects(&self) -> &[CommaObj] {
        &self.objects
    }

    pub fn dom(&self) -> &Arc<FinCategory> {
        self.f.dom()
    }

    pub fn cod(&self) -> &Arc<FinCategory> {
        self.f.cod()
    }

    /// `λ` read in the colax direction `q ⇒ f·p` of the underlying
    /// construction, i.e. whether 2-cells must be reversed for `c`.
    pub fn is_reversed(&self) -> bool {
        self.variance == Variance::Colax
    }

    /// A functor into the apex from object and morphism assignments given as
    /// comma data.
    pub fn functor_into(&self, name: &str, dom: &Arc<FinCategory>, obj: &[CommaObj], mor: &[(Mor, Mor)]) -> Result<Functor> {
        let objs = obj.iter().map(|o| self.find_obj(*o).ok_or_else(|| Error::consistency(format!("{o:?} is not an object of {}", self.apex.name())))).collect::<Result<Vec<_>>>()?;
        let mors = (0..dom.num_morphisms())
            .map(|m| {
                let (u, v) = mor[m];
                self.find_mor(objs[dom.src(m)], objs[dom.tgt(m)], u, v).ok_or_else(|| Error::consistency(format!("({u}, {v}) is not a morphism of {}", self.apex.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Functor::new(name, dom.clone(), self.apex.clone(), objs, mors)?)
    }

    /// The same limit with object `o` removed from the apex, for sabotage tests.
    pub fn without_object(&self, o: Obj) -> Result<ArrowLimit> {
        let keep: Vec<bool> = (0..self.objects.len()).map(|i| i != o).collect();
        let objects: Vec<CommaObj> = self.objects.iter().zip(&keep).filter(|(_, &k)| k).map(|(x, _)| *x).collect();
        Ok(restrict(self, &objects, format!("{}-{}", self.apex.name(), self.apex.obj_name(o))))
    }
}

fn comma_name(b: &FinCategory, a: &FinCategory, o: &CommaObj) -> String {
    format!("({},{},{})", b.obj_name(o.x), b.mor_name(o.alpha), a.obj_name(o.a))
}

/// Builds the comma category on the given triples, which must be closed
/// under nothing in particular: morphisms are all lawful pairs among them.
fn comma_on(name: String, f: &Functor, objects: Vec<CommaObj>, variance: Variance) -> ArrowLimit {
    let (a, b) = (f.dom().clone(), f.cod().clone());
    let obj_index: HashMap<CommaObj, Obj> = objects.iter().enumerate().map(|(i, o)| (*o, i)).collect();
    let mut arrows = Vec::new();
    let mut morphisms = Vec::new();
    let mut mor_index = HashMap::new();
    let mut ids = vec![0; objects.len()];
    for (s, os) in objects.iter().enumerate() {
        for (t, ot) in objects.iter().enumerate() {
            for &u in b.hom(os.x, ot.x) {
                for &v in a.hom(os.a, ot.a) {
                    if b.comp(ot.alpha, u) != b.comp(f.mor(v), os.alpha) {
                        continue;
                    }
                    if s == t && u == b.id(os.x) && v == a.id(os.a) {
                        ids[s] = arrows.len();
                    }
                    mor_index.insert((s, t, u, v), arrows.len());
                    arrows.push(Arrow { name: format!("({},{})", b.mor_name(u), a.mor_name(v)), src: s, tgt: t });
                    morphisms.push((u, v));
                }
            }
        }
    }
    let names = objects.iter().map(|o| comma_name(&b, &a, o)).collect();
    let ends: Vec<(Obj, Obj)> = arrows.iter().map(|x: &Arrow| (x.src, x.tgt)).collect();
    let apex = FinCategory::from_fn(name, names, arrows, ids, |g, h| {
        let ((ug, vg), (uh, vh)) = (morphisms[g], morphisms[h]);
        mor_index[&(ends[h].0, ends[g].1, b.comp(ug, uh), a.comp(vg, vh))]
    });
    let apex = Arc::new(apex);
    let p = Functor::new("p", apex.clone(), a.clone(), objects.iter().map(|o| o.a).collect(), morphisms.iter().map(|m| m.1).collect()).expect("projection tables");
    let q = Functor::new("q", apex.clone(), b.clone(), objects.iter().map(|o| o.x).collect(), morphisms.iter().map(|m| m.0).collect()).expect("projection tables");
    let fp = compose_functors(f, &p).expect("composable");
    let lambda = NatTransformation::new("lambda", q.clone(), fp, objects.iter().map(|o| o.alpha).collect()).expect("components");
    ArrowLimit { variance, f: f.clone(), apex, p, q, lambda, objects, morphisms, obj_index, mor_index }
}

fn restrict(lim: &ArrowLimit, objects: &[CommaObj], name: String) -> ArrowLimit {
    if lim.variance == Variance::Colax {
        let dual = to_lax_side(lim);
        let small = comma_on(name.clone(), &dual.f, objects.to_vec(), Variance::Lax);
        return from_lax_side(&small, &lim.f, name);
    }
    comma_on(name, &lim.f, objects.to_vec(), lim.variance)
}

fn triples(f: &Functor, iso_only: bool) -> Vec<CommaObj> {
    let (a, b) = (f.dom(), f.cod());
    let mut out = Vec::new();
    for x in 0..b.num_objects() {
        for ao in 0..a.num_objects() {
            for &alpha in b.hom(x, f.ob(ao)) {
                if !iso_only || b.is_iso(alpha) {
                    out.push(CommaObj { x, alpha, a: ao });
                }
            }
        }
    }
    out
}

/// Reads the lax-side construction for `f^op` as the lax limit of `f`.
fn from_lax_side(l: &ArrowLimit, f: &Functor, name: String) -> ArrowLimit {
    let apex = Arc::new(l.apex.op().with_name(name));
    let p = l.p.op_between(apex.clone(), f.dom().clone()).named("p");
    let q = l.q.op_between(apex.clone(), f.cod().clone()).named("q");
    let fp = compose_functors(f, &p).expect("composable");
    let lambda = l.lambda.op_between(q.clone(), fp).named("lambda");
    ArrowLimit {
        variance: Variance::Colax,
        f: f.clone(),
        apex,
        p,
        q,
        lambda,
        objects: l.objects.clone(),
        morphisms: l.morphisms.clone(),
        obj_index: l.obj_index.clone(),
        mor_index: l.mor_index.iter().map(|(&(s, t, u, v), &m)| ((t, s, u, v), m)).collect(),
    }
}

/// The lax-side (`B^op/F^op`) presentation of a `c`-limit.
pub(crate) fn to_lax_side(c: &ArrowLimit) -> ArrowLimit {
    let fop = c.f.op();
    let apex = Arc::new(c.apex.op());
    let p = c.p.op_between(apex.clone(), fop.dom().clone());
    let q = c.q.op_between(apex.clone(), fop.cod().clone());
    let fp = compose_functors(&fop, &p).expect("composable");
    let lambda = c.lambda.op_between(fp, q.clone());
    ArrowLimit {
        variance: Variance::Lax,
        f: fop,
        apex,
        p,
        q,
        lambda,
        objects: c.objects.clone(),
        morphisms: c.morphisms.clone(),
        obj_index: c.obj_index.clone(),
        mor_index: c.mor_index.iter().map(|(&(s, t, u, v), &m)| ((t, s, u, v), m)).collect(),
    }
}

/// The w̄-limit of `f`: `B/F` for `l`, its full subcategory on invertible
/// `α` for `p`, and `F/B` for `c`.
pub fn limit_of_arrow(w: Variance, f: &Functor) -> Result<ArrowLimit> {
    let b = f.cod();
    match w {
        Variance::Lax => Ok(comma_on(format!("{}/{}", b.name(), f.name), f, triples(f, false), w)),
        Variance::Pseudo => Ok(comma_on(format!("{}/≅{}", b.name(), f.name), f, triples(f, true), w)),
        Variance::Colax => {
            let fop = f.op();
            let l = comma_on(String::new(), &fop, triples(&fop, false), Variance::Lax);
            Ok(from_lax_side(&l, f, format!("{}/{}", f.name, b.name())))
        }
        Variance::Strict => Err(Error::precondition("limits of arrows are taken for variances l, p and c")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures::{arrow_with_flip, chain, monotone, terminal};
    use crate::fincat::{validate_category, validate_functor, validate_nat_trans};

    fn check(lim: &ArrowLimit) {
        assert!(validate_category(&lim.apex).is_ok());
        assert!(validate_functor(&lim.p).is_ok() && validate_functor(&lim.q).is_ok());
        let v = validate_nat_trans(&lim.lambda);
        assert!(v.is_ok(), "{v}");
    }

    #[test]
    fn identity_on_the_point_has_a_point_apex() {
        let t = Arc::new(terminal());
        for w in [Variance::Lax, Variance::Pseudo, Variance::Colax] {
            let lim = limit_of_arrow(w, &Functor::identity(t.clone())).unwrap();
            check(&lim);
            assert_eq!((lim.apex.num_objects(), lim.apex.num_morphisms()), (1, 1));
        }
    }

    #[test]
    fn comma_of_the_identity_on_two_has_three_objects() {
        let two = Arc::new(chain(2));
        let id = Functor::identity(two);
        let l = limit_of_arrow(Variance::Lax, &id).unwrap();
        check(&l);
        assert_eq!(l.apex.num_objects(), 3);
        let c = limit_of_arrow(Variance::Colax, &id).unwrap();
        check(&c);
        assert_eq!(c.apex.num_objects(), 3);
        // Only identities are invertible, so the pseudo limit is the graph.
        let p = limit_of_arrow(Variance::Pseudo, &id).unwrap();
        check(&p);
        assert_eq!(p.apex.num_objects(), 2);
        assert!(p.objects().iter().all(|o| o.x == o.a));
    }

    #[test]
    fn pseudo_limit_keeps_isomorphisms() {
        let b = Arc::new(arrow_with_flip());
        let f = Functor::identity(b);
        let p = limit_of_arrow(Variance::Pseudo, &f).unwrap();
        check(&p);
        assert!(p.objects().iter().all(|o| f.cod().is_iso(o.alpha)));
    }

    #[test]
    fn lax_limit_reads_alpha_out_of_fa() {
        let a = Arc::new(chain(2));
        let b = Arc::new(chain(3));
        let f = monotone(&a, &b, &[0, 2]).unwrap();
        let c = limit_of_arrow(Variance::Colax, &f).unwrap();
        check(&c);
        for o in c.objects() {
            assert_eq!((b.src(o.alpha), b.tgt(o.alpha)), (f.ob(o.a), o.x));
        }
        // Elements of [3] above F0 = 0 plus those above F1 = 2.
        assert_eq!(c.apex.num_objects(), 3 + 1);
    }
}
