//! Small 2-categories used across the crate.

use super::twocat::{Cell1, Cell2, Fin2Category, TwoRules};
use crate::fincat::{Arrow, FinCategory};
use crate::{Error, Result};

/// A 2-category whose hom-categories are preorders.
///
/// The 2-cells are the pairs `(f, g)` of parallel 1-cells with `leq(f, g)`
/// (identities are always included). The preorder must be transitive and
/// compatible with composition on both sides; otherwise a precondition error
/// names the offending pair. `label(f, g)` may supply names for non-identity
/// 2-cells.
pub fn locally_preordered(
    name: &str,
    c: &FinCategory,
    leq: impl Fn(usize, usize) -> bool,
    label: impl Fn(usize, usize) -> Option<String>,
) -> Result<Fin2Category> {
    let n1 = c.num_morphisms();
    let mut pairs = Vec::new();
    let mut index = vec![usize::MAX; n1 * n1];
    for f in 0..n1 {
        for g in 0..n1 {
            let parallel = c.src(f) == c.src(g) && c.tgt(f) == c.tgt(g);
            if parallel && (f == g || leq(f, g)) {
                index[f * n1 + g] = pairs.len();
                pairs.push((f, g));
            }
        }
    }
    let lookup = |f: usize, g: usize, what: &str| -> Result<usize> {
        match index[f * n1 + g] {
            usize::MAX => Err(Error::precondition(format!("{what}: no 2-cell {} ⇒ {} in {name}", c.mor_name(f), c.mor_name(g)))),
            i => Ok(i),
        }
    };
    // Check closure before building, so the rules below cannot fail.
    for &(f, g) in &pairs {
        for &(g2, h) in &pairs {
            if g2 == g {
                lookup(f, h, "transitivity")?;
            }
        }
        for k in 0..n1 {
            if c.src(k) == c.tgt(f) {
                lookup(c.comp(k, f), c.comp(k, g), "left whiskering")?;
            }
            if c.tgt(k) == c.src(f) {
                lookup(c.comp(f, k), c.comp(g, k), "right whiskering")?;
            }
        }
    }
    let cells1 = c.arrows().iter().map(|a| Cell1 { name: a.name.clone(), src: a.src, tgt: a.tgt }).collect();
    let cells2 = pairs
        .iter()
        .map(|&(f, g)| {
            let name = if f == g { format!("1_{}", c.mor_name(f)) } else { label(f, g).unwrap_or_else(|| format!("{}=>{}", c.mor_name(f), c.mor_name(g))) };
            Cell2 { name, src: f, tgt: g }
        })
        .collect();
    let id2 = (0..n1).map(|f| index[f * n1 + f]).collect();
    let at = |f: usize, g: usize| index[f * n1 + g];
    let rules = TwoRules {
        comp1: &|g, f| c.comp(g, f),
        vcomp: &|b, a| at(pairs[a].0, pairs[b].1),
        lwhisk: &|h, a| at(c.comp(h, pairs[a].0), c.comp(h, pairs[a].1)),
        rwhisk: &|a, k| at(c.comp(pairs[a].0, k), c.comp(pairs[a].1, k)),
    };
    Ok(Fin2Category::from_fn(name, c.objects().to_vec(), cells1, c.identities().to_vec(), cells2, id2, rules))
}

/// Only identity 2-cells.
pub fn locally_discrete(c: &FinCategory) -> Fin2Category {
    locally_preordered(c.name(), c, |_, _| false, |_, _| None).expect("equality is compatible with everything")
}

fn walking(name: &str, objects: &[&str], arrows: &[(&str, usize, usize)], comp: impl FnMut(usize, usize) -> usize) -> FinCategory {
    let objects = objects.iter().map(|s| s.to_string()).collect();
    let arrows: Vec<Arrow> = arrows.iter().map(|&(n, s, t)| Arrow { name: n.into(), src: s, tgt: t }).collect();
    let ids = (0..arrows.iter().filter(|a| a.name.starts_with("1_")).count()).collect();
    FinCategory::from_fn(name, objects, arrows, ids, comp)
}

/// One object, nothing else.
pub fn point_2cat() -> Fin2Category {
    locally_discrete(&walking("pt", &["0"], &[("1_0", 0, 0)], |_, _| 0))
}

/// `n` objects, identities only.
pub fn discrete_2cat(n: usize) -> Fin2Category {
    locally_discrete(&crate::fincat::fixtures::discrete(n).with_name(format!("disc{n}")))
}

/// The walking arrow `f: 0 → 1`, locally discrete.
pub fn arrow_2cat() -> Fin2Category {
    locally_discrete(&arrow_category())
}

/// The walking arrow as a category with morphisms `1_0`, `1_1`, `f`.
pub fn arrow_category() -> FinCategory {
    walking("2", &["0", "1"], &[("1_0", 0, 0), ("1_1", 1, 1), ("f", 0, 1)], |g, f| if g < 2 { f } else { g })
}

/// Two objects and an isomorphism `u: 0 → 1` with inverse `v`.
pub fn iso_pair_2cat() -> Fin2Category {
    let c = walking("iso", &["0", "1"], &[("1_0", 0, 0), ("1_1", 1, 1), ("u", 0, 1), ("v", 1, 0)], |g, f| match (g, f) {
        (0 | 1, x) | (x, 0 | 1) => x,
        (2, 3) => 1,
        (3, 2) => 0,
        _ => unreachable!(),
    });
    locally_discrete(&c)
}

/// Two parallel 1-cells `a, b: 0 → 1` with two distinct 2-cells `σ, τ: a ⇒ b`.
pub fn parallel_2cells() -> Fin2Category {
    let c1 = |n: &str, src, tgt| Cell1 { name: n.into(), src, tgt };
    let c2 = |n: &str, src, tgt| Cell2 { name: n.into(), src, tgt };
    let cells1 = vec![c1("1_0", 0, 0), c1("1_1", 1, 1), c1("a", 0, 1), c1("b", 0, 1)];
    let cells2 = vec![c2("1_1_0", 0, 0), c2("1_1_1", 1, 1), c2("1_a", 2, 2), c2("1_b", 3, 3), c2("sigma", 2, 3), c2("tau", 2, 3)];
    // 1-cells and identity 2-cells share indices 0..4.
    let comp1 = |g: usize, f: usize| if g < 2 { f } else { g };
    let rules = TwoRules {
        comp1: &comp1,
        vcomp: &|b, a| if a < 4 { b } else { a },
        lwhisk: &|h, a| if a < 4 { comp1(h, a) } else { a },
        rwhisk: &|a, k| if a < 4 { comp1(a, k) } else { a },
    };
    Fin2Category::from_fn("par", vec!["0".into(), "1".into()], cells1, vec![0, 1], cells2, vec![0, 1, 2, 3], rules)
}
