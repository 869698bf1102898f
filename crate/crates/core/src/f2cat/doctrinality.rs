//! Deciding w-doctrinality of an F-functor by enumeration.

use std::sync::Arc;

use serde::Serialize;

use super::calculus::{adjunctions_on, is_reflection_morphism, reflections_on, Reflection};
use super::classifier::build_adj_classifier;
use super::enumerate::{enumerate_ffunctors, FunctorQuery, Pins};
use super::fcat::{compose_ffunctors, validate_ffunctor, FCategory, FFunctor};
use crate::search::Cap;
use crate::variance::Variance;
use crate::{Error, Result};

/// A named configuration of cells that made a sub-check fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: String,
    pub cells: Vec<String>,
    /// Number of lifts (or fillers) found where exactly one was required.
    pub found: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub pass: bool,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl SubCheck {
    fn new() -> Self {
        SubCheck { pass: true, checked: 0, witnesses: Vec::new() }
    }

    fn record(&mut self, ok: bool, w: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.pass = false;
            self.witnesses.push(w());
        }
    }
}

/// Weak and strong doctrinal adjunction together with the local flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub weak_doctrinal_adjunction: SubCheck,
    pub doctrinal_adjunction: SubCheck,
    pub reflects_identity_2cells: bool,
    pub locally_conservative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoctrinalReport {
    pub variance: Variance,
    pub w_refl: SubCheck,
    pub w_morph: SubCheck,
    pub locally_faithful: bool,
    pub verdict: bool,
    pub diagnostics: Option<Diagnostics>,
}

fn refl_cells(c: &FCategory, r: &Reflection<usize, usize>) -> Vec<String> {
    let a = c.ambient();
    vec![a.name1(r.f).into(), a.name1(r.g).into(), a.name2(r.eta).into()]
}

fn image(h: &FFunctor, r: &Reflection<usize, usize>) -> Reflection<usize, usize> {
    Reflection::new(r.variance, h.on1(r.f), h.on1(r.g), h.on2(r.eta))
}

/// Every w-reflection of `c`, grouped by nothing in particular.
fn all_reflections(c: &FCategory, w: Variance) -> Result<Vec<Reflection<usize, usize>>> {
    let mut out = Vec::new();
    for f in c.tight_cells() {
        out.extend(reflections_on(c, &f, w)?);
    }
    Ok(out)
}

fn check_refl(h: &FFunctor, w: Variance) -> Result<SubCheck> {
    let (a, b) = (h.dom(), h.cod());
    let mut out = SubCheck::new();
    for f in a.tight_cells() {
        let below = reflections_on(&**a, &f, w)?;
        for above in reflections_on(&**b, &h.on1(f), w)? {
            let lifts = below.iter().filter(|r| image(h, r) == above).count();
            out.record(lifts == 1, || Witness { kind: "orphaned or ambiguous reflection".into(), cells: refl_cells(b, &above), found: lifts });
        }
    }
    Ok(out)
}

fn check_morph(h: &FFunctor, w: Variance) -> Result<SubCheck> {
    let (a, b) = (h.dom(), h.cod());
    let ca = a.ambient();
    let refls = all_reflections(a, w)?;
    let mut out = SubCheck::new();
    for r1 in &refls {
        for r2 in &refls {
            let (x1, y1, x2, y2) = (ca.src1(r1.f), ca.tgt1(r1.f), ca.src1(r2.f), ca.tgt1(r2.f));
            for &r in ca.hom1(x1, x2).iter().filter(|&&r| a.tight(r)) {
                for &s in ca.hom1(y1, y2).iter().filter(|&&s| a.tight(s)) {
                    if ca.comp1(r2.f, r) != ca.comp1(s, r1.f) {
                        continue;
                    }
                    let below = is_reflection_morphism(&**a, &r, &s, r1, r2)?.holds();
                    let above = is_reflection_morphism(&**b, &h.on1(r), &h.on1(s), &image(h, r1), &image(h, r2))?.holds();
                    out.record(below == above, || {
                        let mut cells = refl_cells(a, r1);
                        cells.extend(refl_cells(a, r2));
                        cells.extend([ca.name1(r).to_string(), ca.name1(s).to_string()]);
                        Witness { kind: "square not reflected".into(), cells, found: usize::from(below) }
                    });
                }
            }
        }
    }
    Ok(out)
}

fn check_adjunctions(h: &FFunctor, w: Variance) -> Result<(SubCheck, SubCheck)> {
    let (a, b) = (h.dom(), h.cod());
    let cb = b.ambient();
    let (mut weak, mut strong) = (SubCheck::new(), SubCheck::new());
    for f in a.tight_cells() {
        let below = adjunctions_on(&**a, &f, w)?;
        for above in adjunctions_on(&**b, &h.on1(f), w)? {
            let lifts = below.iter().filter(|x| h.on1(x.g) == above.g && h.on2(x.eta) == above.eta && h.on2(x.eps) == above.eps).count();
            let cells = || vec![cb.name1(above.f).to_string(), cb.name1(above.g).to_string(), cb.name2(above.eta).to_string(), cb.name2(above.eps).to_string()];
            weak.record(lifts >= 1, || Witness { kind: "adjunction without lift".into(), cells: cells(), found: lifts });
            strong.record(lifts == 1, || Witness { kind: "adjunction without unique lift".into(), cells: cells(), found: lifts });
        }
    }
    Ok((weak, strong))
}

/// w-Refl, w-Morph and local faithfulness of `h`, optionally with the
/// doctrinal-adjunction diagnostics.
pub fn is_w_doctrinal(h: &FFunctor, w: Variance, diagnostics: bool) -> Result<DoctrinalReport> {
    if w == Variance::Strict {
        return Err(Error::precondition("doctrinality is defined for variances l, p and c"));
    }
    let report = validate_ffunctor(h);
    if !report.is_ok() {
        return Err(Error::Invalid(report.validation));
    }
    let w_refl = check_refl(h, w)?;
    let w_morph = check_morph(h, w)?;
    let diagnostics = if diagnostics {
        let (weak, strong) = check_adjunctions(h, w)?;
        Some(Diagnostics {
            weak_doctrinal_adjunction: weak,
            doctrinal_adjunction: strong,
            reflects_identity_2cells: report.reflects_identity_2cells,
            locally_conservative: report.locally_conservative,
        })
    } else {
        None
    };
    let verdict = w_refl.pass && w_morph.pass && report.locally_faithful;
    Ok(DoctrinalReport { variance: w, w_refl, w_morph, locally_faithful: report.locally_faithful, verdict, diagnostics })
}

/// Outcome of testing orthogonality against the classifier generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub variance: Variance,
    pub squares: usize,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

/// Checks that every commuting square from `j: 2 → Adj_w` to `h` has exactly
/// one diagonal filler.
pub fn orthogonal_to_classifier(h: &FFunctor, w: Variance, cap: Cap) -> Result<OrthogonalityReport> {
    let k = build_adj_classifier(w)?;
    let adj = Arc::new(k.category.clone());
    let j = k.j.rebased(k.arrow.clone(), adj.clone())?;
    let (a, b) = (h.dom(), h.cod());
    let mut squares = 0;
    let mut witnesses = Vec::new();
    for r in enumerate_ffunctors(&FunctorQuery::new(&k.arrow, a, cap))? {
        let hr = compose_ffunctors(h, &r)?;
        let mut sq = FunctorQuery::new(&adj, b, cap);
        sq.pins = Some(Pins::along(&adj, &j, &hr)?);
        for s in enumerate_ffunctors(&sq)? {
            squares += 1;
            let mut fq = FunctorQuery::new(&adj, a, cap);
            fq.pins = Some(Pins::along(&adj, &j, &r)?);
            fq.over = Some((h, &s));
            fq.limit = Some(2);
            let n = enumerate_ffunctors(&fq)?.len();
            if n != 1 {
                let cb = b.ambient();
                let cells = vec![cb.name1(s.on1(k.f)).to_string(), cb.name1(s.on1(k.g)).to_string(), cb.name2(s.on2(k.eta)).to_string()];
                witnesses.push(Witness { kind: if n == 0 { "square without filler" } else { "square with several fillers" }.into(), cells, found: n });
            }
        }
    }
    Ok(OrthogonalityReport { variance: w, squares, pass: witnesses.is_empty(), witnesses })
}
