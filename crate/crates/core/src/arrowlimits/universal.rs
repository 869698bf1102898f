//! Certifying the universal properties of an arrow limit by enumeration.
//!
//! Cones from a test category `X` are triples `(r, s, α)` with
//! `α: s ⇒ f·r`; the apex is a limit when `t ↦ (p·t, q·t, λ·t)` is a
//! bijection onto cones and `φ ↦ (p·φ, q·φ)` is a bijection onto compatible
//! pairs of 2-cells. The lax variance is checked on opposite categories.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::comma::{to_lax_side, ArrowLimit};
use crate::fincat::{compose_functors, enumerate_functors, enumerate_nat_trans, small_categories, whisker_left, whisker_right, FinCategory, Functor, Mor};
use crate::search::Cap;
use crate::variance::Variance;
use crate::Result;

/// Outcome of testing one limit against one test category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniversalReport {
    pub variance: Variance,
    pub test_object: String,
    pub cones: usize,
    pub factorizations_unique: bool,
    pub compatible_pairs: usize,
    pub fillers_unique: bool,
    pub witnesses: Vec<String>,
}

impl UniversalReport {
    pub fn pass(&self) -> bool {
        self.factorizations_unique && self.fillers_unique
    }
}

type FunctorKey = (Vec<usize>, Vec<usize>);

fn key(f: &Functor) -> FunctorKey {
    (f.obj_table().to_vec(), f.mor_table().to_vec())
}

/// Checks both universal properties of `lim` against the test category `x`.
pub fn check_arrow_limit_universal(lim: &ArrowLimit, x: &Arc<FinCategory>, cap: Cap) -> Result<UniversalReport> {
    if lim.variance == Variance::Colax {
        let mut r = check_colax_side(&to_lax_side(lim), &Arc::new(x.op()), cap)?;
        r.variance = Variance::Colax;
        r.test_object = x.name().to_string();
        return Ok(r);
    }
    check_colax_side(lim, x, cap)
}

fn check_colax_side(lim: &ArrowLimit, x: &Arc<FinCategory>, cap: Cap) -> Result<UniversalReport> {
    let (a, b, f) = (lim.dom(), lim.cod(), &lim.f);
    let invertible = lim.variance == Variance::Pseudo;
    let ts = enumerate_functors(x, &lim.apex, cap)?;
    let mut witnesses = Vec::new();

    let mut hit: HashMap<(FunctorKey, FunctorKey, Vec<Mor>), usize> = HashMap::new();
    for t in &ts {
        let cone = (key(&compose_functors(&lim.p, t)?), key(&compose_functors(&lim.q, t)?), whisker_right(&lim.lambda, t)?.components().to_vec());
        *hit.entry(cone).or_default() += 1;
    }
    let mut cones = 0;
    for r in enumerate_functors(x, a, cap)? {
        let fr = compose_functors(f, &r)?;
        for s in enumerate_functors(x, b, cap)? {
            for alpha in enumerate_nat_trans(&s, &fr, cap)? {
                if invertible && alpha.inverse().is_none() {
                    continue;
                }
                cones += 1;
                let n = hit.get(&(key(&r), key(&s), alpha.components().to_vec())).copied().unwrap_or(0);
                if n != 1 {
                    witnesses.push(format!("cone (r={:?}, s={:?}, α={:?}) has {n} factorizations", r.obj_table(), s.obj_table(), alpha.components()));
                }
            }
        }
    }
    let factorizations_unique = witnesses.is_empty() && hit.values().all(|&n| n == 1) && hit.len() == cones;

    let mut pairs = 0;
    let mut filler_witnesses = Vec::new();
    for t in &ts {
        for u in &ts {
            let (pt, pu) = (compose_functors(&lim.p, t)?, compose_functors(&lim.p, u)?);
            let (qt, qu) = (compose_functors(&lim.q, t)?, compose_functors(&lim.q, u)?);
            let mut by_image: HashMap<(Vec<Mor>, Vec<Mor>), usize> = HashMap::new();
            for phi in enumerate_nat_trans(t, u, cap)? {
                let img = (whisker_left(&lim.p, &phi)?.components().to_vec(), whisker_left(&lim.q, &phi)?.components().to_vec());
                *by_image.entry(img).or_default() += 1;
            }
            let (lt, lu) = (whisker_right(&lim.lambda, t)?, whisker_right(&lim.lambda, u)?);
            for tr in enumerate_nat_trans(&pt, &pu, cap)? {
                let ftr = whisker_left(f, &tr)?;
                for ts_ in enumerate_nat_trans(&qt, &qu, cap)? {
                    let compatible = (0..x.num_objects()).all(|o| b.compose(ftr.at(o), lt.at(o)) == b.compose(lu.at(o), ts_.at(o)));
                    if !compatible {
                        continue;
                    }
                    pairs += 1;
                    let n = by_image.get(&(tr.components().to_vec(), ts_.components().to_vec())).copied().unwrap_or(0);
                    if n != 1 {
                        filler_witnesses.push(format!("pair (θr={:?}, θs={:?}) over t={:?}, u={:?} has {n} fillers", tr.components(), ts_.components(), t.obj_table(), u.obj_table()));
                    }
                }
            }
        }
    }
    let fillers_unique = filler_witnesses.is_empty();
    witnesses.extend(filler_witnesses);
    Ok(UniversalReport { variance: lim.variance, test_object: x.name().to_string(), cones, factorizations_unique, compatible_pairs: pairs, fillers_unique, witnesses })
}

/// Every category with at most `max_morphisms` morphisms, up to isomorphism.
pub fn test_battery(max_morphisms: usize, cap: Cap) -> Result<Vec<Arc<FinCategory>>> {
    Ok(small_categories(max_morphisms, cap)?.into_iter().map(Arc::new).collect())
}

/// Checks `lim` against the battery and the apex itself.
pub fn check_against_battery(lim: &ArrowLimit, max_morphisms: usize, cap: Cap) -> Result<Vec<UniversalReport>> {
    let mut tests = test_battery(max_morphisms, cap)?;
    tests.push(lim.apex.clone());
    tests.iter().map(|x| check_arrow_limit_universal(lim, x, cap)).collect()
}
