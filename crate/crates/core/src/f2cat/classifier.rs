//! The free w-reflection `Adj_w` and its generator `j: 2 → Adj_w`.
//!
//! The underlying category is computed by closing the presentation with
//! generators `f: 0 → 1`, `g: 1 → 0` under the rewrite `f·g → 1`. Words are
//! stored in application order, so the composite `g·f` is the word `[f, g]`
//! and the rewrite deletes every adjacent `[g, f]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::fcat::{FCategory, FFunctor};
use super::fixtures::{arrow_2cat, locally_preordered};
use crate::fincat::{Arrow, FinCategory};
use crate::variance::Variance;
use crate::{Error, Result};

/// Default number of rewrite steps allowed while closing the presentation.
pub const DEFAULT_STEP_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Gen {
    F,
    G,
}

impl Gen {
    fn src(self) -> usize {
        match self {
            Gen::F => 0,
            Gen::G => 1,
        }
    }

    fn tgt(self) -> usize {
        1 - self.src()
    }
}

fn normalize(word: &mut Vec<Gen>, steps: &mut usize, budget: usize) -> Result<()> {
    while let Some(i) = word.windows(2).position(|w| w == [Gen::G, Gen::F]) {
        *steps += 1;
        if *steps > budget {
            return Err(Error::precondition(format!("presentation closure exceeded its budget of {budget} rewrite steps")));
        }
        word.drain(i..i + 2);
    }
    Ok(())
}

fn word_name(obj: usize, w: &[Gen]) -> String {
    if w.is_empty() {
        return format!("1_{obj}");
    }
    w.iter()
        .rev()
        .map(|g| match g {
            Gen::F => "f",
            Gen::G => "g",
        })
        .collect()
}

/// The category presented by `f: 0 → 1`, `g: 1 → 0`, `f·g = 1_1`, found by
/// breadth-first closure of normal forms.
pub fn close_presentation(budget: usize) -> Result<FinCategory> {
    let mut steps = 0;
    // Normal form → (source object, word).
    let mut found: BTreeMap<(usize, Vec<Gen>), ()> = BTreeMap::new();
    let mut frontier: Vec<(usize, Vec<Gen>)> = vec![(0, vec![]), (1, vec![])];
    while let Some((obj, w)) = frontier.pop() {
        if found.insert((obj, w.clone()), ()).is_some() {
            continue;
        }
        let end = w.last().map_or(obj, |g| g.tgt());
        for gen in [Gen::F, Gen::G] {
            if gen.src() != end {
                continue;
            }
            let mut next = w.clone();
            next.push(gen);
            normalize(&mut next, &mut steps, budget)?;
            if !found.contains_key(&(obj, next.clone())) {
                frontier.push((obj, next));
            }
        }
        if found.len() > budget {
            return Err(Error::precondition("presentation closure does not terminate within its budget"));
        }
    }
    // Identities first, then by length.
    let mut cells: Vec<(usize, Vec<Gen>)> = found.into_keys().collect();
    cells.sort_by(|a, b| (a.1.len(), a.0, &a.1).cmp(&(b.1.len(), b.0, &b.1)));
    let arrows: Vec<Arrow> = cells
        .iter()
        .map(|(o, w)| Arrow { name: word_name(*o, w), src: *o, tgt: w.last().map_or(*o, |g| g.tgt()) })
        .collect();
    let ids = vec![0, 1];
    let lookup: BTreeMap<(usize, Vec<Gen>), usize> = cells.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let mut comp_err = None;
    let c = FinCategory::from_fn("Adj", vec!["0".into(), "1".into()], arrows, ids, |g, f| {
        let mut w = cells[f].1.clone();
        w.extend(cells[g].1.iter().copied());
        if let Err(e) = normalize(&mut w, &mut steps, budget) {
            comp_err = Some(e);
            return 0;
        }
        lookup[&(cells[f].0, w)]
    });
    match comp_err {
        Some(e) => Err(e),
        None => Ok(c),
    }
}

/// `Adj_w` with its distinguished cells and the generator `j`.
#[derive(Clone, Debug)]
pub struct AdjClassifier {
    pub variance: Variance,
    pub category: FCategory,
    pub f: usize,
    pub g: usize,
    pub eta: usize,
    /// The walking tight arrow `2`.
    pub arrow: Arc<FCategory>,
    /// `j: 2 → Adj_w`, picking out `f`.
    pub j: FFunctor,
}

/// Builds `Adj_w` for `w ∈ {l, p, c}`: the l-classifier has the single
/// non-identity 2-cell `η: 1 ⇒ g·f`, the p-classifier adds its inverse, and
/// the c-classifier is the l-classifier with 2-cells reversed.
pub fn build_adj_classifier(w: Variance) -> Result<AdjClassifier> {
    build_adj_classifier_with_budget(w, DEFAULT_STEP_BUDGET)
}

pub fn build_adj_classifier_with_budget(w: Variance, budget: usize) -> Result<AdjClassifier> {
    if w == Variance::Colax {
        let l = build_adj_classifier_with_budget(Variance::Lax, budget)?;
        let category = l.category.co_dual().with_name("Adj_c");
        let arrow = l.arrow.clone();
        let j = FFunctor::new("j", arrow.clone(), Arc::new(category.clone()), l.j.obj_table().to_vec(), l.j.one_table().to_vec(), l.j.two_table().to_vec())?;
        return Ok(AdjClassifier { variance: w, category, j, arrow, ..l });
    }
    if w == Variance::Strict {
        return Err(Error::precondition("the classifier exists for variances l, p and c"));
    }
    let base = close_presentation(budget)?;
    let find = |n: &str| base.morphism_index(n).ok_or_else(|| Error::consistency(format!("closure lost the cell `{n}`")));
    let (one0, f, g, gf) = (base.id(0), find("f")?, find("g")?, find("gf")?);
    let invertible = w == Variance::Pseudo;
    let leq = |a: usize, b: usize| (a, b) == (one0, gf) || (invertible && (a, b) == (gf, one0));
    let label = |a: usize, _b: usize| Some(if a == one0 { "eta".to_string() } else { "eta^-1".to_string() });
    let two = locally_preordered(&format!("Adj_{w}"), &base, leq, label)?;
    let eta = two.index2("eta").ok_or_else(|| Error::consistency("unit missing from the classifier"))?;
    let tight: Vec<bool> = (0..two.n1()).map(|x| two.is_id1(x) || x == f).collect();
    let category = FCategory::new(two, tight)?;
    let arrow = Arc::new(FCategory::all_tight(arrow_2cat()));
    let a = arrow.ambient();
    let c = category.ambient();
    let one: Vec<usize> = (0..a.n1()).map(|x| if a.is_id1(x) { c.id1(a.src1(x)) } else { f }).collect();
    let twos: Vec<usize> = (0..a.n2()).map(|x| c.id2(one[a.src2(x)])).collect();
    let j = FFunctor::new("j", arrow.clone(), Arc::new(category.clone()), vec![0, 1], one, twos)?;
    Ok(AdjClassifier { variance: w, category, f, g, eta, arrow, j })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2cat::calculus::{validate_w_reflection, Reflection};
    use crate::f2cat::fcat::{tight_inclusion, validate_fcategory, validate_ffunctor};
    use crate::fincat::{full_sub_2category, validate_category};
    use crate::Cap;

    #[test]
    fn closure_gives_five_cells() {
        let c = close_presentation(DEFAULT_STEP_BUDGET).unwrap();
        assert!(validate_category(&c).is_ok());
        let names: Vec<&str> = c.arrows().iter().map(|a| a.name.as_str()).collect();
        assert_eq!(names, ["1_0", "1_1", "f", "g", "gf"]);
        let gf = c.morphism_index("gf").unwrap();
        assert_eq!(c.comp(gf, gf), gf);
        assert_eq!(c.hom(0, 0).len(), 2);
    }

    #[test]
    fn tiny_budget_is_an_error() {
        assert!(close_presentation(0).is_err());
    }

    #[test]
    fn classifiers_are_f_categories() {
        for w in [Variance::Lax, Variance::Pseudo, Variance::Colax] {
            let k = build_adj_classifier(w).unwrap();
            let v = validate_fcategory(&k.category);
            assert!(v.is_ok(), "{v}");
            assert!(validate_ffunctor(&k.j).is_ok());
            assert_eq!(k.category.tight_cells().iter().filter(|&&x| !k.category.ambient().is_id1(x)).count(), 1);
            let r = Reflection::new(w, k.f, k.g, k.eta);
            assert!(validate_w_reflection(&k.category, &r).unwrap().is_ok());
        }
        assert_eq!(build_adj_classifier(Variance::Pseudo).unwrap().category.ambient().n2(), 7);
        assert_eq!(build_adj_classifier(Variance::Lax).unwrap().category.ambient().n2(), 6);
    }

    #[test]
    fn tight_part_is_the_walking_arrow() {
        let k = build_adj_classifier(Variance::Lax).unwrap();
        let (tau, j) = tight_inclusion(&Arc::new(k.category.clone()));
        assert_eq!(tau.ambient().tables().cells1, k.arrow.ambient().tables().cells1);
        assert_eq!(j.one_table(), k.j.one_table());
        assert_eq!(j.obj_table(), k.j.obj_table());
    }

    #[test]
    fn cat_model_of_the_l_classifier() {
        // 0 ↦ [2], 1 ↦ [1], f the unique functor, g picks the top element.
        let two = Arc::new(crate::fincat::fixtures::chain(2));
        let one = Arc::new(crate::fincat::fixtures::chain(1));
        let sub = full_sub_2category(&[two.clone(), one.clone()], Cap::default()).unwrap();
        let k = build_adj_classifier(Variance::Lax).unwrap();
        let c = k.category.ambient();
        let s = &sub.category;
        let f_img = s.hom1(0, 1)[0];
        let g_img = *s.hom1(1, 0).iter().find(|&&x| sub.functors[x].ob(0) == 1).unwrap();
        let image1 = |x: usize| match c.name1(x) {
            "1_0" => s.id1(0),
            "1_1" => s.id1(1),
            "f" => f_img,
            "g" => g_img,
            _ => s.comp1(g_img, f_img),
        };
        let one_map: Vec<usize> = (0..c.n1()).map(image1).collect();
        let eta_img = s.hom2(s.id1(0), one_map[c.comp1(k.g, k.f)])[0];
        let two_map: Vec<usize> = (0..c.n2()).map(|a| if a == k.eta { eta_img } else { s.id2(one_map[c.src2(a)]) }).collect();
        let model = FFunctor::new("model", Arc::new(k.category.clone()), Arc::new(FCategory::all_tight(s.clone())), vec![0, 1], one_map, two_map).unwrap();
        let r = validate_ffunctor(&model);
        assert!(r.is_ok(), "{}", r.validation);
        assert!(r.locally_faithful && r.reflects_identity_2cells);
    }
}
