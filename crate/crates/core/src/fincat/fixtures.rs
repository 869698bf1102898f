//! Small named categories used by tests, examples and the CLI.

use std::sync::Arc;

use super::adjunction::CatAdjunction;
use super::category::{Arrow, FinCategory};
use super::functor::{compose_functors, Functor};
use super::natural::NatTransformation;
use crate::{Error, Result};

/// One object, one morphism.
pub fn terminal() -> FinCategory {
    discrete(1).with_name("1")
}

/// No objects.
pub fn empty() -> FinCategory {
    discrete(0).with_name("0")
}

/// `n` objects and only identities.
pub fn discrete(n: usize) -> FinCategory {
    let objects = (0..n).map(|i| i.to_string()).collect();
    let arrows = (0..n).map(|i| Arrow { name: format!("{i}<={i}"), src: i, tgt: i }).collect();
    FinCategory::from_fn(format!("disc{n}"), objects, arrows, (0..n).collect(), |g, f| if g == f { g } else { unreachable!() })
}

/// A finite poset on `0..n` given by its order relation, which must be reflexive,
/// antisymmetric and transitive. Morphisms are named `i<=j`.
pub fn poset(name: &str, n: usize, leq: impl Fn(usize, usize) -> bool) -> FinCategory {
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    let mut index = vec![usize::MAX; n * n];
    for i in 0..n {
        for j in 0..n {
            if leq(i, j) {
                index[i * n + j] = arrows.len();
                arrows.push(Arrow { name: format!("{i}<={j}"), src: i, tgt: j });
            }
        }
    }
    let ids = (0..n).map(|i| index[i * n + i]).collect();
    let ends: Vec<(usize, usize)> = arrows.iter().map(|a| (a.src, a.tgt)).collect();
    FinCategory::from_fn(name, objects, arrows, ids, |g, f| index[ends[f].0 * n + ends[g].1])
}

/// The chain `[n] = {0 < 1 < … < n-1}`.
pub fn chain(n: usize) -> FinCategory {
    poset(&format!("[{n}]"), n, |i, j| i <= j)
}

/// One-object category of a monoid on `0..n` with unit 0 and the given product.
pub fn monoid(name: &str, n: usize, mul: impl Fn(usize, usize) -> usize) -> FinCategory {
    let arrows = (0..n).map(|i| Arrow { name: format!("e{i}"), src: 0, tgt: 0 }).collect();
    FinCategory::from_fn(name, vec!["*".to_string()], arrows, vec![0], mul)
}

/// The cyclic group `Z/n`.
pub fn cyclic(n: usize) -> FinCategory {
    monoid(&format!("Z{n}"), n, |a, b| (a + b) % n)
}

/// Commutative monoids of order at most `max_order`, one per isomorphism
/// class, found by exhaustive search over unital multiplication tables.
/// Element 0 is the unit of each.
pub fn commutative_monoids(max_order: usize) -> Vec<FinCategory> {
    let cap = crate::Cap::default();
    let mut out: Vec<Arc<FinCategory>> = Vec::new();
    for n in 1..=max_order {
        let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let mut tables = Vec::new();
        let mut budget = cap.budget("commutative monoid tables");
        crate::search::for_each_tuple(&vec![n; free.len()], &mut budget, |t| {
            tables.push(t.to_vec());
            true
        })
        .expect("tables of order ≤ 4 fit the default cap");
        if free.is_empty() {
            tables.push(Vec::new());
        }
        let start = out.len();
        for table in tables {
            let mul = |a: usize, b: usize| -> usize {
                if a == 0 || b == 0 {
                    return a + b;
                }
                table[free.iter().position(|&k| k == (a.min(b), a.max(b))).expect("listed pair")]
            };
            let assoc = (1..n).all(|a| (1..n).all(|b| (1..n).all(|c| mul(mul(a, b), c) == mul(a, mul(b, c)))));
            if !assoc {
                continue;
            }
            let c = Arc::new(monoid(&format!("CM{n}.{}", out.len() - start), n, mul));
            let seen = out[start..].iter().any(|k| super::enumerate::are_isomorphic(k, &c, cap).expect("tiny search"));
            if !seen {
                out.push(c);
            }
        }
    }
    out.into_iter().map(|c| (*c).clone()).collect()
}

/// The arrow `f: 0 → 1` together with an involution `t` on 1 satisfying `t∘f = f`.
pub fn arrow_with_flip() -> FinCategory {
    let objects = vec!["0".to_string(), "1".to_string()];
    let arrows = vec![
        Arrow { name: "1_0".into(), src: 0, tgt: 0 },
        Arrow { name: "1_1".into(), src: 1, tgt: 1 },
        Arrow { name: "f".into(), src: 0, tgt: 1 },
        Arrow { name: "t".into(), src: 1, tgt: 1 },
    ];
    FinCategory::from_fn("flip", objects, arrows, vec![0, 1], |g, f| match (g, f) {
        (0, x) | (1, x) => x,
        (x, 0) | (x, 1) => x,
        (3, 2) => 2,
        (3, 3) => 1,
        _ => unreachable!(),
    })
}

/// The monotone map `[m] → [n]` given by its values.
pub fn monotone(dom: &Arc<FinCategory>, cod: &Arc<FinCategory>, values: &[usize]) -> Result<Functor> {
    let mor = (0..dom.num_morphisms())
        .map(|x| {
            let (i, j) = (values[dom.src(x)], values[dom.tgt(x)]);
            cod.hom(i, j).first().copied().ok_or_else(|| Error::precondition(format!("map {values:?} is not monotone")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Functor::new("F", dom.clone(), cod.clone(), values.to_vec(), mor)?)
}

/// The Galois connection `F ⊣ G` between chains `[m] → [n]` whose left adjoint
/// is the monotone map with values `left`; requires `left(0) = 0`.
pub fn galois_connection(m: usize, n: usize, left: &[usize]) -> Result<CatAdjunction> {
    let a = Arc::new(chain(m));
    let b = Arc::new(chain(n));
    galois_between(&a, &b, left)
}

/// As [`galois_connection`], over given chain objects.
pub fn galois_between(a: &Arc<FinCategory>, b: &Arc<FinCategory>, left: &[usize]) -> Result<CatAdjunction> {
    let f = monotone(a, b, left)?;
    let right: Vec<usize> = (0..b.num_objects())
        .map(|y| (0..a.num_objects()).filter(|&x| left[x] <= y).max().ok_or_else(|| Error::precondition("left adjoint must send the bottom to the bottom")))
        .collect::<Result<_>>()?;
    let g = monotone(b, a, &right)?.named("G");
    let gf = compose_functors(&g, &f)?;
    let fg = compose_functors(&f, &g)?;
    let unit_comp = (0..a.num_objects()).map(|x| a.hom(x, gf.ob(x))[0]).collect();
    let counit_comp = (0..b.num_objects()).map(|y| b.hom(fg.ob(y), y)[0]).collect();
    let unit = NatTransformation::new("eta", Functor::identity(a.clone()), gf, unit_comp)?;
    let counit = NatTransformation::new("eps", fg, Functor::identity(b.clone()), counit_comp)?;
    Ok(CatAdjunction { left: f, right: g, unit, counit })
}

/// All monotone maps `[m] → [n]` sending 0 to 0.
pub fn bottom_preserving_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, n: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == m {
            out.push(acc.clone());
            return;
        }
        let lo = acc.last().copied().unwrap_or(0);
        let hi = if acc.is_empty() { 0 } else { n - 1 };
        for v in lo..=hi {
            acc.push(v);
            go(m, n, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 && n > 0 {
        go(m, n, &mut Vec::new(), &mut out);
    }
    out
}
