//! Brute-force enumeration of F-functors.
//!
//! The search assigns objects, then 1-cells, then 2-cells, checking each law
//! as soon as every cell it mentions has been assigned. Entries can be pinned
//! in advance, and the whole search can be constrained to lie over a pair
//! `(H, S)` so that only functors `K` with `H∘K = S` are produced.

use std::sync::Arc;

use super::fcat::{validate_ffunctor, FCategory, FFunctor};
use crate::search::{Budget, Cap};
use crate::{Error, Result};

/// Prescribed values for some entries of the functor tables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pins {
    pub obj: Vec<Option<usize>>,
    pub one: Vec<Option<usize>>,
    pub two: Vec<Option<usize>>,
}

impl Pins {
    pub fn none(dom: &FCategory) -> Pins {
        let c = dom.ambient();
        Pins { obj: vec![None; c.n0()], one: vec![None; c.n1()], two: vec![None; c.n2()] }
    }

    /// Pins forcing `K∘j = R` for an F-functor `j: D → dom` and `R: D → cod`.
    pub fn along(dom: &FCategory, j: &FFunctor, r: &FFunctor) -> Result<Pins> {
        let mut p = Pins::none(dom);
        let d = j.dom().ambient();
        let set = |slot: &mut Option<usize>, v: usize, what: &str| -> Result<()> {
            match slot.replace(v) {
                Some(old) if old != v => Err(Error::precondition(format!("conflicting pins on a {what}"))),
                _ => Ok(()),
            }
        };
        for x in 0..d.n0() {
            set(&mut p.obj[j.ob(x)], r.ob(x), "object")?;
        }
        for f in 0..d.n1() {
            set(&mut p.one[j.on1(f)], r.on1(f), "1-cell")?;
        }
        for a in 0..d.n2() {
            set(&mut p.two[j.on2(a)], r.on2(a), "2-cell")?;
        }
        Ok(p)
    }
}

struct Search<'a> {
    dom: &'a FCategory,
    cod: &'a FCategory,
    pins: &'a Pins,
    over: Option<(&'a FFunctor, &'a FFunctor)>,
    obj: Vec<usize>,
    one: Vec<usize>,
    two: Vec<usize>,
    budget: Budget,
    found: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)>,
    limit: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn objects(&mut self, x: usize) -> Result<()> {
        let d = self.dom.ambient();
        if x == d.n0() {
            return self.ones(0);
        }
        for y in 0..self.cod.ambient().n0() {
            if self.pins.obj[x].is_some_and(|p| p != y) {
                continue;
            }
            if let Some((h, s)) = self.over {
                if h.ob(y) != s.ob(x) {
                    continue;
                }
            }
            self.budget.tick()?;
            self.obj[x] = y;
            self.objects(x + 1)?;
            if self.done() {
                break;
            }
        }
        Ok(())
    }

    fn one_ok(&self, g: usize) -> bool {
        let (d, c) = (self.dom.ambient(), self.cod.ambient());
        let val = |f: usize| self.one[f];
        if d.is_id1(g) && val(g) != c.id1(self.obj[d.src1(g)]) {
            return false;
        }
        for f in 0..=g {
            for (a, b) in [(g, f), (f, g)] {
                if let Some(ab) = d.try_comp1(a, b) {
                    if ab <= g && c.try_comp1(val(a), val(b)) != Some(val(ab)) {
                        return false;
                    }
                }
            }
        }
        // Composites landing on g from earlier cells.
        for a in 0..g {
            for b in 0..g {
                if d.try_comp1(a, b) == Some(g) && c.try_comp1(val(a), val(b)) != Some(val(g)) {
                    return false;
                }
            }
        }
        true
    }

    fn ones(&mut self, g: usize) -> Result<()> {
        let (d, c) = (self.dom.ambient(), self.cod.ambient());
        if g == d.n1() {
            return self.twos(0);
        }
        let cands: Vec<usize> = c.hom1(self.obj[d.src1(g)], self.obj[d.tgt1(g)]).to_vec();
        for y in cands {
            if self.pins.one[g].is_some_and(|p| p != y) || (self.dom.tight(g) && !self.cod.tight(y)) {
                continue;
            }
            if let Some((h, s)) = self.over {
                if h.on1(y) != s.on1(g) {
                    continue;
                }
            }
            self.budget.tick()?;
            self.one[g] = y;
            if self.one_ok(g) {
                self.ones(g + 1)?;
                if self.done() {
                    break;
                }
            }
        }
        Ok(())
    }

    fn two_ok(&self, a: usize) -> bool {
        let (d, c) = (self.dom.ambient(), self.cod.ambient());
        let val = |x: usize| self.two[x];
        if d.is_id2(a) && val(a) != c.id2(self.one[d.src2(a)]) {
            return false;
        }
        for b in 0..=a {
            for (x, y) in [(a, b), (b, a)] {
                if let Some(xy) = d.try_vcomp(x, y) {
                    if xy <= a && c.try_vcomp(val(x), val(y)) != Some(val(xy)) {
                        return false;
                    }
                }
            }
        }
        for x in 0..a {
            for y in 0..a {
                if d.try_vcomp(x, y) == Some(a) && c.try_vcomp(val(x), val(y)) != Some(val(a)) {
                    return false;
                }
            }
        }
        for b in 0..=a {
            for h in 0..d.n1() {
                if let Some(hb) = d.try_lwhisk(h, b) {
                    if (b == a || hb == a) && hb <= a && c.try_lwhisk(self.one[h], val(b)) != Some(val(hb)) {
                        return false;
                    }
                }
                if let Some(bh) = d.try_rwhisk(b, h) {
                    if (b == a || bh == a) && bh <= a && c.try_rwhisk(val(b), self.one[h]) != Some(val(bh)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn twos(&mut self, a: usize) -> Result<()> {
        let (d, c) = (self.dom.ambient(), self.cod.ambient());
        if a == d.n2() {
            self.found.push((self.obj.clone(), self.one.clone(), self.two.clone()));
            return Ok(());
        }
        let cands: Vec<usize> = c.hom2(self.one[d.src2(a)], self.one[d.tgt2(a)]).to_vec();
        for y in cands {
            if self.pins.two[a].is_some_and(|p| p != y) {
                continue;
            }
            if let Some((h, s)) = self.over {
                if h.on2(y) != s.on2(a) {
                    continue;
                }
            }
            self.budget.tick()?;
            self.two[a] = y;
            if self.two_ok(a) {
                self.twos(a + 1)?;
                if self.done() {
                    break;
                }
            }
        }
        Ok(())
    }
}

/// Query for [`enumerate_ffunctors`].
#[derive(Clone, Debug)]
pub struct FunctorQuery<'a> {
    pub dom: &'a Arc<FCategory>,
    pub cod: &'a Arc<FCategory>,
    pub pins: Option<Pins>,
    /// Restrict to `K` with `H∘K = S`, given as `(H, S)`.
    pub over: Option<(&'a FFunctor, &'a FFunctor)>,
    /// Stop after this many results.
    pub limit: Option<usize>,
    pub cap: Cap,
}

impl<'a> FunctorQuery<'a> {
    pub fn new(dom: &'a Arc<FCategory>, cod: &'a Arc<FCategory>, cap: Cap) -> Self {
        FunctorQuery { dom, cod, pins: None, over: None, limit: None, cap }
    }
}

/// Every F-functor matching the query, in lexicographic order of tables.
pub fn enumerate_ffunctors(q: &FunctorQuery<'_>) -> Result<Vec<FFunctor>> {
    if let Some((h, s)) = q.over {
        let ok = super::fcat::same_fcat(h.dom(), q.cod) && super::fcat::same_fcat(s.dom(), q.dom) && super::fcat::same_fcat(h.cod(), s.cod());
        if !ok {
            return Err(Error::boundary(format!("`{}` and `{}` do not frame the search", h.name, s.name)));
        }
    }
    let pins = q.pins.clone().unwrap_or_else(|| Pins::none(q.dom));
    let d = q.dom.ambient();
    let mut s = Search {
        dom: q.dom,
        cod: q.cod,
        pins: &pins,
        over: q.over,
        obj: vec![0; d.n0()],
        one: vec![0; d.n1()],
        two: vec![0; d.n2()],
        budget: q.cap.budget(format!("F-functors {} → {}", q.dom.name(), q.cod.name())),
        found: Vec::new(),
        limit: q.limit,
    };
    s.objects(0)?;
    let mut out = Vec::with_capacity(s.found.len());
    for (k, (obj, one, two)) in s.found.into_iter().enumerate() {
        let f = FFunctor::new(format!("K{k}"), q.dom.clone(), q.cod.clone(), obj, one, two)?;
        let report = validate_ffunctor(&f);
        if !report.is_ok() {
            return Err(Error::consistency(format!("enumerated functor fails validation: {}", report.validation)));
        }
        out.push(f);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2cat::fcat::tight_inclusion;
    use crate::f2cat::fixtures::{arrow_2cat, iso_pair_2cat, parallel_2cells, point_2cat};
    use crate::fincat::{enumerate_functors, fixtures::chain};

    fn all_tight(c: crate::f2cat::twocat::Fin2Category) -> Arc<FCategory> {
        Arc::new(FCategory::all_tight(c))
    }

    #[test]
    fn functors_between_locally_discrete_match_1_categorical_count() {
        let two = all_tight(arrow_2cat());
        let n = enumerate_ffunctors(&FunctorQuery::new(&two, &two, Cap::default())).unwrap().len();
        let c = Arc::new(chain(2));
        assert_eq!(n, enumerate_functors(&c, &c, Cap::default()).unwrap().len());
    }

    #[test]
    fn into_the_point_is_unique() {
        let p = all_tight(point_2cat());
        for src in [arrow_2cat(), iso_pair_2cat(), parallel_2cells()] {
            let a = all_tight(src);
            assert_eq!(enumerate_ffunctors(&FunctorQuery::new(&a, &p, Cap::default())).unwrap().len(), 1);
        }
    }

    #[test]
    fn endofunctors_of_parallel_cells() {
        // Objects fixed or collapsed; the σ, τ pair can be permuted or merged.
        let a = all_tight(parallel_2cells());
        let fs = enumerate_ffunctors(&FunctorQuery::new(&a, &a, Cap::default())).unwrap();
        assert!(fs.iter().any(|f| *f == FFunctor::identity(a.clone())));
        let swapped = fs.iter().filter(|f| f.obj_table() == [0, 1] && f.one_table() == [0, 1, 2, 3]).count();
        assert_eq!(swapped, 4);
    }

    #[test]
    fn pins_along_the_tight_inclusion() {
        let a = Arc::new(FCategory::identities_tight(iso_pair_2cat()));
        let (_tau, j) = tight_inclusion(&a);
        let mut q = FunctorQuery::new(&a, &a, Cap::default());
        q.pins = Some(Pins::along(&a, &j, &j).unwrap());
        let fs = enumerate_ffunctors(&q).unwrap();
        // Objects fixed; u ↦ u or v is impossible (wrong boundary), so only the identity remains.
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let a = all_tight(parallel_2cells());
        let r = enumerate_ffunctors(&FunctorQuery::new(&a, &a, Cap(3)));
        assert!(matches!(r, Err(Error::Cap(_))));
    }
}
