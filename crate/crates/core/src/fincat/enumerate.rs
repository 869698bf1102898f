//! Brute-force enumeration of functors, transformations and small categories.

use std::sync::Arc;

use super::category::{validate_category, Arrow, FinCategory, Mor};
use super::functor::Functor;
use super::natural::NatTransformation;
use crate::search::{Budget, Cap, CapExceeded};

/// Every functor `dom → cod`, in lexicographic order of (object table, morphism table).
pub fn enumerate_functors(dom: &Arc<FinCategory>, cod: &Arc<FinCategory>, cap: Cap) -> Result<Vec<Functor>, CapExceeded> {
    let mut budget = cap.budget(format!("functors {} → {}", dom.name(), cod.name()));
    let n = dom.num_morphisms();
    // Composition constraints, keyed by the largest morphism index they mention.
    let mut checks: Vec<Vec<(Mor, Mor, Mor)>> = vec![Vec::new(); n];
    for (g, f, gf) in dom.composition_triples() {
        checks[g.max(f).max(gf)].push((g, f, gf));
    }
    let mut out = Vec::new();
    let mut obj = vec![0; dom.num_objects()];
    let mut mor = vec![0; n];
    objects(dom, cod, &checks, 0, &mut obj, &mut mor, &mut budget, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn objects(
    dom: &Arc<FinCategory>,
    cod: &Arc<FinCategory>,
    checks: &[Vec<(Mor, Mor, Mor)>],
    i: usize,
    obj: &mut Vec<usize>,
    mor: &mut Vec<usize>,
    budget: &mut Budget,
    out: &mut Vec<Functor>,
) -> Result<(), CapExceeded> {
    if i == obj.len() {
        return morphisms(dom, cod, checks, 0, obj, mor, budget, out);
    }
    for b in 0..cod.num_objects() {
        budget.tick()?;
        obj[i] = b;
        objects(dom, cod, checks, i + 1, obj, mor, budget, out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn morphisms(
    dom: &Arc<FinCategory>,
    cod: &Arc<FinCategory>,
    checks: &[Vec<(Mor, Mor, Mor)>],
    m: usize,
    obj: &mut Vec<usize>,
    mor: &mut Vec<usize>,
    budget: &mut Budget,
    out: &mut Vec<Functor>,
) -> Result<(), CapExceeded> {
    if m == mor.len() {
        out.push(Functor::new(format!("F{}", out.len()), dom.clone(), cod.clone(), obj.clone(), mor.clone()).expect("in range"));
        return Ok(());
    }
    let (a, b) = (obj[dom.src(m)], obj[dom.tgt(m)]);
    let forced = dom.is_identity(m).then(|| cod.id(a));
    let candidates: Vec<Mor> = match forced {
        Some(i) => vec![i],
        None => cod.hom(a, b).to_vec(),
    };
    for c in candidates {
        budget.tick()?;
        mor[m] = c;
        if checks[m].iter().all(|&(g, f, gf)| cod.compose(mor[g], mor[f]) == Some(mor[gf])) {
            morphisms(dom, cod, checks, m + 1, obj, mor, budget, out)?;
        }
    }
    Ok(())
}

/// Every natural transformation `f ⇒ g`.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor, cap: Cap) -> Result<Vec<NatTransformation>, CapExceeded> {
    let (d, c) = (f.dom(), f.cod());
    let mut budget = cap.budget(format!("transformations {} ⇒ {}", f.name, g.name));
    let k = d.num_objects();
    let mut checks: Vec<Vec<Mor>> = vec![Vec::new(); k];
    for m in 0..d.num_morphisms() {
        checks[d.src(m).max(d.tgt(m))].push(m);
    }
    let mut comp = vec![0; k];
    let mut out = Vec::new();
    nat_step(f, g, c, &checks, 0, &mut comp, &mut budget, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn nat_step(
    f: &Functor,
    g: &Functor,
    c: &FinCategory,
    checks: &[Vec<Mor>],
    a: usize,
    comp: &mut Vec<Mor>,
    budget: &mut Budget,
    out: &mut Vec<NatTransformation>,
) -> Result<(), CapExceeded> {
    if a == comp.len() {
        let name = format!("t{}", out.len());
        out.push(NatTransformation::new(name, f.clone(), g.clone(), comp.clone()).expect("in range"));
        return Ok(());
    }
    let d = f.dom();
    for &m in c.hom(f.ob(a), g.ob(a)) {
        budget.tick()?;
        comp[a] = m;
        let natural = checks[a].iter().all(|&x| c.comp(g.mor(x), comp[d.src(x)]) == c.comp(comp[d.tgt(x)], f.mor(x)));
        if natural {
            nat_step(f, g, c, checks, a + 1, comp, budget, out)?;
        }
    }
    Ok(())
}

/// Whether some functor `a → b` is bijective on objects and morphisms.
pub fn are_isomorphic(a: &Arc<FinCategory>, b: &Arc<FinCategory>, cap: Cap) -> Result<bool, CapExceeded> {
    if a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() {
        return Ok(false);
    }
    Ok(enumerate_functors(a, b, cap)?.iter().any(is_bijective))
}

fn is_bijective(f: &Functor) -> bool {
    let mut seen_o = vec![false; f.cod().num_objects()];
    let mut seen_m = vec![false; f.cod().num_morphisms()];
    f.obj_table().iter().all(|&o| !std::mem::replace(&mut seen_o[o], true)) && f.mor_table().iter().all(|&m| !std::mem::replace(&mut seen_m[m], true))
}

/// All categories with at most `max_morphisms` morphisms, one per
/// isomorphism class, ordered by (morphisms, objects, discovery order).
/// The empty category is included.
pub fn small_categories(max_morphisms: usize, cap: Cap) -> Result<Vec<FinCategory>, CapExceeded> {
    let mut budget = cap.budget(format!("categories with ≤ {max_morphisms} morphisms"));
    let mut kept: Vec<Arc<FinCategory>> = Vec::new();
    for total in 0..=max_morphisms {
        for n in (0..=total).rev() {
            let k = total - n;
            if n == 0 && k > 0 {
                continue;
            }
            let mut ends = vec![(0usize, 0usize); k];
            endpoint_tables(n, k, 0, &mut ends, &mut budget, &mut |ends, budget| {
                composition_tables(n, ends, budget, &mut kept, cap)
            })?;
        }
    }
    Ok(kept
        .into_iter()
        .enumerate()
        .map(|(i, c)| Arc::try_unwrap(c).unwrap_or_else(|c| (*c).clone()).with_name(format!("X{i}")))
        .collect())
}

type EndsVisitor<'a> = dyn FnMut(&[(usize, usize)], &mut Budget) -> Result<(), CapExceeded> + 'a;

fn endpoint_tables(n: usize, k: usize, i: usize, ends: &mut Vec<(usize, usize)>, budget: &mut Budget, visit: &mut EndsVisitor<'_>) -> Result<(), CapExceeded> {
    if i == k {
        return visit(ends, budget);
    }
    // Sorted endpoint lists suffice: permuting non-identity morphisms gives an isomorphic category.
    let start = if i == 0 { (0, 0) } else { ends[i - 1] };
    for s in 0..n {
        for t in 0..n {
            if (s, t) < start {
                continue;
            }
            budget.tick()?;
            ends[i] = (s, t);
            endpoint_tables(n, k, i + 1, ends, budget, visit)?;
        }
    }
    Ok(())
}

fn composition_tables(n: usize, ends: &[(usize, usize)], budget: &mut Budget, kept: &mut Vec<Arc<FinCategory>>, cap: Cap) -> Result<(), CapExceeded> {
    let objects: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut arrows: Vec<Arrow> = (0..n).map(|i| Arrow { name: format!("1x{i}"), src: i, tgt: i }).collect();
    for (j, &(s, t)) in ends.iter().enumerate() {
        arrows.push(Arrow { name: format!("m{j}"), src: s, tgt: t });
    }
    let m = arrows.len();
    let hom = |a: usize, b: usize| -> Vec<usize> { (0..m).filter(|&x| arrows[x].src == a && arrows[x].tgt == b).collect() };
    let mut free: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for g in n..m {
        for f in n..m {
            if arrows[g].src == arrows[f].tgt {
                free.push((g, f, hom(arrows[f].src, arrows[g].tgt)));
            }
        }
    }
    let sizes: Vec<usize> = free.iter().map(|x| x.2.len()).collect();
    let mut tables = Vec::new();
    crate::search::for_each_tuple(&sizes, budget, |choice| {
        tables.push(choice.to_vec());
        true
    })?;
    if free.is_empty() {
        tables.push(Vec::new());
    }
    for choice in tables {
        let mut comp = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if arrows[g].src != arrows[f].tgt {
                    continue;
                }
                comp[g * m + f] = Some(if g < n { f } else if f < n { g } else { 0 });
            }
        }
        for (slot, (g, f, options)) in free.iter().enumerate() {
            comp[g * m + f] = Some(options[choice[slot]]);
        }
        let c = FinCategory::from_raw("candidate", objects.clone(), arrows.clone(), (0..n).collect(), comp).expect("well-formed");
        if !validate_category(&c).is_ok() {
            continue;
        }
        let c = Arc::new(c);
        let mut duplicate = false;
        for k in kept.iter() {
            if are_isomorphic(k, &c, cap)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            kept.push(c);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures;
    use crate::fincat::functor::validate_functor;

    #[test]
    fn endofunctors_of_the_arrow() {
        let two = Arc::new(fixtures::chain(2));
        let fs = enumerate_functors(&two, &two, Cap::default()).unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|f| validate_functor(f).is_ok()));
    }

    #[test]
    fn monotone_maps_between_chains() {
        // Monotone maps [m] → [n] number C(m+n-1, m).
        for (m, n, count) in [(2, 3, 6), (3, 3, 10), (3, 2, 4), (4, 3, 15)] {
            let a = Arc::new(fixtures::chain(m));
            let b = Arc::new(fixtures::chain(n));
            assert_eq!(enumerate_functors(&a, &b, Cap::default()).unwrap().len(), count);
        }
    }

    #[test]
    fn monoid_homs_are_functors() {
        let z2 = Arc::new(fixtures::cyclic(2));
        let z4 = Arc::new(fixtures::cyclic(4));
        // Homs Z4 → Z2: 2; Z2 → Z4: 2.
        assert_eq!(enumerate_functors(&z4, &z2, Cap::default()).unwrap().len(), 2);
        assert_eq!(enumerate_functors(&z2, &z4, Cap::default()).unwrap().len(), 2);
    }

    #[test]
    fn small_category_counts() {
        // Up to isomorphism: 1 with no morphisms, 1 with one, 3 with two, 11 with three.
        let cats = small_categories(3, Cap::default()).unwrap();
        let count = |k: usize| cats.iter().filter(|c| c.num_morphisms() == k).count();
        assert_eq!((count(0), count(1), count(2), count(3)), (1, 1, 3, 11));
        assert!(cats.iter().all(|c| validate_category(c).is_ok()));
    }

    #[test]
    fn cap_is_enforced() {
        let a = Arc::new(fixtures::chain(4));
        let err = enumerate_functors(&a, &a, Cap(5)).unwrap_err();
        assert!(err.to_string().contains("search too large"));
    }
}
