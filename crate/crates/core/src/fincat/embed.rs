//! Finite categories seen as objects of a 2-category.
//!
//! [`full_sub_2category`] tabulates the full sub-2-category of `Cat` on a
//! list of categories, and [`CatWorld`] exposes the same structure lazily to
//! the generic pasting calculus.

use std::collections::HashMap;
use std::sync::Arc;

use super::category::{FinCategory, Mor, Obj};
use super::enumerate::{enumerate_functors, enumerate_nat_trans};
use super::functor::{compose_functors, Functor};
use super::natural::{vertical, whisker_left, whisker_right, NatTransformation};
use crate::f2cat::calculus::TwoCells;
use crate::f2cat::twocat::{Cell1, Cell2, Fin2Category, TwoRules};
use crate::search::Cap;
use crate::{Error, Result};

/// The tabulated sub-2-category with the functor and transformation behind
/// every cell.
#[derive(Clone, Debug)]
pub struct FullSub {
    pub category: Fin2Category,
    pub cats: Vec<Arc<FinCategory>>,
    pub functors: Vec<Functor>,
    pub transformations: Vec<NatTransformation>,
    one_index: HashMap<(usize, usize, Vec<Obj>, Vec<Mor>), usize>,
    two_index: HashMap<(usize, usize, Vec<Mor>), usize>,
}

impl FullSub {
    fn cat_index(&self, c: &Arc<FinCategory>) -> Option<usize> {
        self.cats.iter().position(|k| super::functor::same_category(k, c))
    }

    /// The 1-cell carrying the functor `f`.
    pub fn one_cell(&self, f: &Functor) -> Option<usize> {
        let (d, c) = (self.cat_index(f.dom())?, self.cat_index(f.cod())?);
        self.one_index.get(&(d, c, f.obj_table().to_vec(), f.mor_table().to_vec())).copied()
    }

    /// The 2-cell carrying the transformation `t`.
    pub fn two_cell(&self, t: &NatTransformation) -> Option<usize> {
        let (s, g) = (self.one_cell(t.source())?, self.one_cell(t.target())?);
        self.two_index.get(&(s, g, t.components().to_vec())).copied()
    }
}

/// Objects are the given categories, 1-cells every functor among them and
/// 2-cells every natural transformation.
pub fn full_sub_2category(cats: &[Arc<FinCategory>], cap: Cap) -> Result<FullSub> {
    let k = cats.len();
    let mut functors: Vec<Functor> = Vec::new();
    let mut one_index = HashMap::new();
    let mut cells1 = Vec::new();
    let mut id1 = vec![0; k];
    for (i, a) in cats.iter().enumerate() {
        for (j, b) in cats.iter().enumerate() {
            for f in enumerate_functors(a, b, cap)? {
                let idx = functors.len();
                let name = if i == j && f.is_identity() {
                    id1[i] = idx;
                    format!("1_{}", a.name())
                } else {
                    format!("F{idx}:{}->{}", a.name(), b.name())
                };
                one_index.insert((i, j, f.obj_table().to_vec(), f.mor_table().to_vec()), idx);
                cells1.push(Cell1 { name: name.clone(), src: i, tgt: j });
                functors.push(f.named(name));
            }
        }
    }
    let mut transformations: Vec<NatTransformation> = Vec::new();
    let mut two_index = HashMap::new();
    let mut cells2 = Vec::new();
    let mut id2 = vec![0; functors.len()];
    for (x, fx) in functors.iter().enumerate() {
        for (y, fy) in functors.iter().enumerate() {
            if cells1[x].src != cells1[y].src || cells1[x].tgt != cells1[y].tgt {
                continue;
            }
            for t in enumerate_nat_trans(fx, fy, cap)? {
                let idx = transformations.len();
                let name = if x == y && t.is_identity() {
                    id2[x] = idx;
                    format!("1_{}", fx.name)
                } else {
                    format!("t{idx}:{}=>{}", fx.name, fy.name)
                };
                two_index.insert((x, y, t.components().to_vec()), idx);
                cells2.push(Cell2 { name: name.clone(), src: x, tgt: y });
                transformations.push(t.named(name));
            }
        }
    }
    let cat_of = |c: &Arc<FinCategory>| cats.iter().position(|k| super::functor::same_category(k, c)).expect("listed category");
    let find1 = |f: &Functor| one_index[&(cat_of(f.dom()), cat_of(f.cod()), f.obj_table().to_vec(), f.mor_table().to_vec())];
    let find2 = |t: &NatTransformation| two_index[&(find1(t.source()), find1(t.target()), t.components().to_vec())];
    let rules = TwoRules {
        comp1: &|g, f| find1(&compose_functors(&functors[g], &functors[f]).expect("composable")),
        vcomp: &|b, a| find2(&vertical(&transformations[b], &transformations[a]).expect("composable")),
        lwhisk: &|h, a| find2(&whisker_left(&functors[h], &transformations[a]).expect("composable")),
        rwhisk: &|a, h| find2(&whisker_right(&transformations[a], &functors[h]).expect("composable")),
    };
    let objects = cats.iter().map(|c| c.name().to_string()).collect();
    let category = Fin2Category::from_fn("Cat|", objects, cells1, id1, cells2, id2, rules);
    let name = format!("Cat|{{{}}}", cats.iter().map(|c| c.name()).collect::<Vec<_>>().join(","));
    Ok(FullSub { category: category.with_name(name), cats: cats.to_vec(), functors, transformations, one_index, two_index })
}

type TightPredicate = Arc<dyn Fn(&Functor) -> bool + Send + Sync>;

/// `Cat` restricted to a battery of finite categories, evaluated on demand.
///
/// Composition and whiskering work for any functors and transformations;
/// the battery only bounds the enumerations behind `objects`, `hom1` and
/// `hom2`.
#[derive(Clone)]
pub struct CatWorld {
    pub battery: Vec<Arc<FinCategory>>,
    pub cap: Cap,
    tight: Option<TightPredicate>,
}

impl std::fmt::Debug for CatWorld {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<&str> = self.battery.iter().map(|c| c.name()).collect();
        f.debug_struct("CatWorld").field("battery", &names).field("cap", &self.cap).field("marked", &self.tight.is_some()).finish()
    }
}

impl CatWorld {
    pub fn new(battery: Vec<Arc<FinCategory>>, cap: Cap) -> Self {
        CatWorld { battery, cap, tight: None }
    }

    /// Marks as tight exactly the functors accepted by `pred`.
    pub fn with_tightness(mut self, pred: impl Fn(&Functor) -> bool + Send + Sync + 'static) -> Self {
        self.tight = Some(Arc::new(pred));
        self
    }
}

impl TwoCells for CatWorld {
    type Obj = Arc<FinCategory>;
    type One = Functor;
    type Two = NatTransformation;

    fn src1(&self, f: &Functor) -> Arc<FinCategory> {
        f.dom().clone()
    }
    fn tgt1(&self, f: &Functor) -> Arc<FinCategory> {
        f.cod().clone()
    }
    fn id1(&self, x: &Arc<FinCategory>) -> Functor {
        Functor::identity(x.clone())
    }
    fn comp1(&self, g: &Functor, f: &Functor) -> Result<Functor> {
        compose_functors(g, f)
    }
    fn src2(&self, a: &NatTransformation) -> Functor {
        a.source().clone()
    }
    fn tgt2(&self, a: &NatTransformation) -> Functor {
        a.target().clone()
    }
    fn id2(&self, f: &Functor) -> NatTransformation {
        NatTransformation::identity(f)
    }
    fn vcomp(&self, b: &NatTransformation, a: &NatTransformation) -> Result<NatTransformation> {
        vertical(b, a)
    }
    fn lwhisk(&self, h: &Functor, a: &NatTransformation) -> Result<NatTransformation> {
        whisker_left(h, a)
    }
    fn rwhisk(&self, a: &NatTransformation, k: &Functor) -> Result<NatTransformation> {
        whisker_right(a, k)
    }
    fn objects(&self) -> Result<Vec<Arc<FinCategory>>> {
        Ok(self.battery.clone())
    }
    fn hom1(&self, x: &Arc<FinCategory>, y: &Arc<FinCategory>) -> Result<Vec<Functor>> {
        Ok(enumerate_functors(x, y, self.cap)?)
    }
    fn hom2(&self, f: &Functor, g: &Functor) -> Result<Vec<NatTransformation>> {
        if !super::functor::same_category(f.dom(), g.dom()) || !super::functor::same_category(f.cod(), g.cod()) {
            return Err(Error::boundary(format!("`{}` and `{}` are not parallel", f.name, g.name)));
        }
        Ok(enumerate_nat_trans(f, g, self.cap)?)
    }
    fn is_tight(&self, f: &Functor) -> bool {
        self.tight.as_ref().is_none_or(|p| p(f))
    }
    fn show0(&self, x: &Arc<FinCategory>) -> String {
        x.name().to_string()
    }
    fn show1(&self, f: &Functor) -> String {
        f.name.clone()
    }
    fn show2(&self, a: &NatTransformation) -> String {
        a.name.clone()
    }
    fn is_id2(&self, a: &NatTransformation) -> bool {
        a.source() == a.target() && a.is_identity()
    }
    fn inverse2(&self, a: &NatTransformation) -> Result<Option<NatTransformation>> {
        Ok(a.inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2cat::twocat::validate_2category;
    use crate::fincat::fixtures;

    #[test]
    fn terminal_gives_the_point() {
        let s = full_sub_2category(&[Arc::new(fixtures::terminal())], Cap::default()).unwrap();
        assert_eq!((s.category.n0(), s.category.n1(), s.category.n2()), (1, 1, 1));
        assert!(validate_2category(&s.category).is_ok());
    }

    #[test]
    fn endofunctors_of_the_arrow() {
        let s = full_sub_2category(&[Arc::new(fixtures::chain(2))], Cap::default()).unwrap();
        assert_eq!(s.category.hom1(0, 0).len(), 3);
        // Comparable pairs among const0 ≤ id ≤ const1: 6 transformations.
        assert_eq!(s.category.n2(), 6);
        let v = validate_2category(&s.category);
        assert!(v.is_ok(), "{v}");
        let id = s.category.id1(0);
        assert!(s.functors[id].is_identity());
    }

    #[test]
    fn monoid_homs_become_one_cells() {
        let z2 = Arc::new(fixtures::cyclic(2));
        let z3 = Arc::new(fixtures::cyclic(3));
        let s = full_sub_2category(&[z2, z3], Cap::default()).unwrap();
        // Hom(Z2, Z3) is trivial; Hom(Z3, Z2) is trivial; End(Z2) = 2, End(Z3) = 3.
        assert_eq!(s.category.hom1(0, 1).len(), 1);
        assert_eq!(s.category.hom1(1, 0).len(), 1);
        assert_eq!(s.category.hom1(0, 0).len(), 2);
        assert_eq!(s.category.hom1(1, 1).len(), 3);
        assert!(validate_2category(&s.category).is_ok());
    }

    #[test]
    fn functor_category_matches_direct_enumeration() {
        for c in [fixtures::chain(3), fixtures::arrow_with_flip(), fixtures::cyclic(2)] {
            let c = Arc::new(c);
            let s = full_sub_2category(std::slice::from_ref(&c), Cap::default()).unwrap();
            let fs = enumerate_functors(&c, &c, Cap::default()).unwrap();
            assert_eq!(s.category.n1(), fs.len());
            let total: usize = fs.iter().flat_map(|f| fs.iter().map(move |g| (f, g))).map(|(f, g)| enumerate_nat_trans(f, g, Cap::default()).unwrap().len()).sum();
            assert_eq!(s.category.n2(), total);
            for f in &fs {
                let i = s.one_cell(f).unwrap();
                assert_eq!(&s.functors[i], f);
            }
        }
    }
}
