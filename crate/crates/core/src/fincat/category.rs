use std::collections::HashMap;

use thiserror::Error;

use crate::check::Validation;

/// Index of an object inside its category.
pub type Obj = usize;
/// Index of a morphism inside its category.
pub type Mor = usize;

/// Malformed tables, as opposed to well-formed tables that break a law.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("dangling identifier `{name}` in {location}")]
    Dangling { name: String, location: String },
    #[error("duplicate identifier `{name}` in {location}")]
    Duplicate { name: String, location: String },
    #[error("missing entry in {location}: {detail}")]
    Missing { location: String, detail: String },
    #[error("entry in {location} is outside its declared domain: {detail}")]
    OutOfDomain { location: String, detail: String },
}

impl StructureError {
    pub(crate) fn dangling(name: impl Into<String>, location: impl Into<String>) -> Self {
        StructureError::Dangling { name: name.into(), location: location.into() }
    }

    pub(crate) fn missing(location: impl Into<String>, detail: impl Into<String>) -> Self {
        StructureError::Missing { location: location.into(), detail: detail.into() }
    }
}

/// A morphism record.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: Obj,
    pub tgt: Obj,
}

/// A finite category presented by tables.
///
/// Composition is stored densely: `comp[g * n + f]` holds `g ∘ f` for every
/// pair with `src(g) = tgt(f)` and `None` elsewhere. The record itself is not
/// assumed lawful; see [`validate_category`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<Mor>,
    comp: Vec<Option<Mor>>,
    homs: Vec<Vec<Mor>>,
}

fn index_names(names: &[String], location: &str) -> Result<HashMap<String, usize>, StructureError> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.clone(), i).is_some() {
            return Err(StructureError::Duplicate { name: n.clone(), location: location.to_string() });
        }
    }
    Ok(map)
}

fn lookup(map: &HashMap<String, usize>, name: &str, location: impl FnOnce() -> String) -> Result<usize, StructureError> {
    map.get(name).copied().ok_or_else(|| StructureError::dangling(name, location()))
}

impl FinCategory {
    /// Builds a category from named tables, resolving every identifier.
    ///
    /// `composition` lists triples `(g, f, g∘f)` and must cover each composable
    /// pair exactly once.
    pub fn from_tables(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        identities: Vec<(String, String)>,
        composition: Vec<(String, String, String)>,
    ) -> Result<Self, StructureError> {
        let name = name.into();
        let obj_ix = index_names(&objects, "objects")?;
        let mor_names: Vec<String> = morphisms.iter().map(|m| m.0.clone()).collect();
        let mor_ix = index_names(&mor_names, "morphisms")?;
        let mut arrows = Vec::with_capacity(morphisms.len());
        for (m, s, t) in &morphisms {
            let src = lookup(&obj_ix, s, || format!("source of morphism `{m}`"))?;
            let tgt = lookup(&obj_ix, t, || format!("target of morphism `{m}`"))?;
            arrows.push(Arrow { name: m.clone(), src, tgt });
        }
        let mut ids = vec![None; objects.len()];
        for (o, m) in &identities {
            let oi = lookup(&obj_ix, o, || "identities".to_string())?;
            let mi = lookup(&mor_ix, m, || format!("identity of object `{o}`"))?;
            if ids[oi].replace(mi).is_some() {
                return Err(StructureError::Duplicate { name: o.clone(), location: "identities".into() });
            }
        }
        let identities = ids
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| StructureError::missing("identities", format!("object `{}` has no identity", objects[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        let n = arrows.len();
        let mut comp = vec![None; n * n];
        for (g, f, gf) in &composition {
            let loc = || format!("composition entry ({g}, {f}, {gf})");
            let gi = lookup(&mor_ix, g, loc)?;
            let fi = lookup(&mor_ix, f, loc)?;
            let gfi = lookup(&mor_ix, gf, loc)?;
            if arrows[gi].src != arrows[fi].tgt {
                return Err(StructureError::OutOfDomain { location: "composition".into(), detail: format!("({g}, {f}) is not a composable pair") });
            }
            if comp[gi * n + fi].replace(gfi).is_some() {
                return Err(StructureError::Duplicate { name: format!("({g}, {f})"), location: "composition".into() });
            }
        }
        for g in 0..n {
            for f in 0..n {
                if arrows[g].src == arrows[f].tgt && comp[g * n + f].is_none() {
                    return Err(StructureError::missing(
                        "composition",
                        format!("no composite for ({}, {})", arrows[g].name, arrows[f].name),
                    ));
                }
            }
        }
        Ok(Self::assemble(name, objects, arrows, identities, comp))
    }

    /// Builds a category from indexed data and a composition rule that is
    /// consulted on every composable pair.
    pub fn from_fn(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<Mor>,
        mut compose: impl FnMut(Mor, Mor) -> Mor,
    ) -> Self {
        let n = arrows.len();
        let mut comp = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                if arrows[g].src == arrows[f].tgt {
                    comp[g * n + f] = Some(compose(g, f));
                }
            }
        }
        Self::assemble(name.into(), objects, arrows, identities, comp)
    }

    /// Direct constructor over a dense composition table; no checks beyond sizes.
    pub fn from_raw(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<Mor>,
        comp: Vec<Option<Mor>>,
    ) -> Result<Self, StructureError> {
        let n = arrows.len();
        if comp.len() != n * n {
            return Err(StructureError::missing("composition", format!("expected {} entries, found {}", n * n, comp.len())));
        }
        if identities.len() != objects.len() {
            return Err(StructureError::missing("identities", "one identity per object is required"));
        }
        let bad = arrows.iter().find(|a| a.src >= objects.len() || a.tgt >= objects.len());
        if let Some(a) = bad {
            return Err(StructureError::dangling(a.name.clone(), "morphism endpoints"));
        }
        if identities.iter().any(|&m| m >= n) || comp.iter().flatten().any(|&m| m >= n) {
            return Err(StructureError::dangling("<index>", "identity or composition table"));
        }
        Ok(Self::assemble(name.into(), objects, arrows, identities, comp))
    }

    fn assemble(name: String, objects: Vec<String>, arrows: Vec<Arrow>, identities: Vec<Mor>, comp: Vec<Option<Mor>>) -> Self {
        let k = objects.len();
        let mut homs = vec![Vec::new(); k * k];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.src * k + a.tgt].push(i);
        }
        FinCategory { name, objects, arrows, identities, comp, homs }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.arrows.len()
    }

    pub fn obj_name(&self, a: Obj) -> &str {
        &self.objects[a]
    }

    pub fn mor_name(&self, m: Mor) -> &str {
        &self.arrows[m].name
    }

    pub fn src(&self, m: Mor) -> Obj {
        self.arrows[m].src
    }

    pub fn tgt(&self, m: Mor) -> Obj {
        self.arrows[m].tgt
    }

    pub fn id(&self, a: Obj) -> Mor {
        self.identities[a]
    }

    pub fn identities(&self) -> &[Mor] {
        &self.identities
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.identities[self.arrows[m].src] == m
    }

    /// `g ∘ f`, or `None` when the pair is not composable.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.comp[g * self.arrows.len() + f]
    }

    /// `g ∘ f` for a pair known to be composable.
    ///
    /// Panics on a non-composable pair, which is a logic error in the caller.
    pub fn comp(&self, g: Mor, f: Mor) -> Mor {
        self.compose(g, f).unwrap_or_else(|| {
            panic!("{}: `{}` ∘ `{}` is not composable", self.name, self.mor_name(g), self.mor_name(f))
        })
    }

    /// Composes a path given in diagrammatic-reverse order (`ms[0] ∘ ms[1] ∘ …`).
    pub fn comp_all(&self, ms: &[Mor]) -> Mor {
        let (&last, rest) = ms.split_last().expect("non-empty path");
        rest.iter().rev().fold(last, |acc, &g| self.comp(g, acc))
    }

    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a * self.objects.len() + b]
    }

    pub fn object_index(&self, name: &str) -> Option<Obj> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<Mor> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Two-sided inverse of `m`, if any.
    pub fn inverse(&self, m: Mor) -> Option<Mor> {
        let (a, b) = (self.src(m), self.tgt(m));
        self.hom(b, a).iter().copied().find(|&n| self.comp(n, m) == self.id(a) && self.comp(m, n) == self.id(b))
    }

    pub fn is_iso(&self, m: Mor) -> bool {
        self.inverse(m).is_some()
    }

    pub fn composition_triples(&self) -> Vec<(Mor, Mor, Mor)> {
        let n = self.arrows.len();
        let mut out = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if let Some(gf) = self.compose(g, f) {
                    out.push((g, f, gf));
                }
            }
        }
        out
    }

    /// The opposite category. Names toggle an `^op` suffix, making this an
    /// exact involution.
    pub fn op(&self) -> FinCategory {
        let arrows = self.arrows.iter().map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src }).collect();
        let n = self.arrows.len();
        let mut comp = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                comp[g * n + f] = self.compose(f, g);
            }
        }
        Self::assemble(toggle_suffix(&self.name, "^op"), self.objects.clone(), arrows, self.identities.clone(), comp)
    }
}

pub(crate) fn toggle_suffix(name: &str, suffix: &str) -> String {
    match name.strip_suffix(suffix) {
        Some(base) => base.to_string(),
        None => format!("{name}{suffix}"),
    }
}

/// Checks identities, composite boundaries, unit laws and associativity.
pub fn validate_category(c: &FinCategory) -> Validation {
    let mut v = Validation::new(format!("category {}", c.name()));
    for (a, &m) in c.identities.iter().enumerate() {
        v.require(c.src(m) == a && c.tgt(m) == a, "identity-boundary", || [c.obj_name(a).to_string(), c.mor_name(m).to_string()]);
    }
    if !v.is_ok() {
        return v;
    }
    let n = c.num_morphisms();
    for g in 0..n {
        for f in 0..n {
            let Some(gf) = c.compose(g, f) else { continue };
            v.require(c.src(gf) == c.src(f) && c.tgt(gf) == c.tgt(g), "composite-boundary", || {
                [c.mor_name(g).to_string(), c.mor_name(f).to_string(), c.mor_name(gf).to_string()]
            });
        }
    }
    if !v.is_ok() {
        return v;
    }
    for f in 0..n {
        v.require(c.comp(c.id(c.tgt(f)), f) == f, "left-unit", || [c.mor_name(f).to_string()]);
        v.require(c.comp(f, c.id(c.src(f))) == f, "right-unit", || [c.mor_name(f).to_string()]);
    }
    for (g, f, gf) in c.composition_triples() {
        for h in (0..n).filter(|&h| c.src(h) == c.tgt(g)) {
            let left = c.comp(c.comp(h, g), f);
            let right = c.comp(h, gf);
            v.require(left == right, "associativity", || {
                [c.mor_name(h).to_string(), c.mor_name(g).to_string(), c.mor_name(f).to_string()]
            });
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures;

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn terminal_and_arrow_are_categories() {
        assert!(validate_category(&fixtures::terminal()).is_ok());
        assert!(validate_category(&fixtures::chain(2)).is_ok());
        assert!(validate_category(&fixtures::chain(5)).is_ok());
    }

    #[test]
    fn magma_associativity_witness() {
        // Elements e, a, b with e the unit and a·a = b, a·b = a, b·a = b, b·b = a.
        let objects = vec![s("*")];
        let morphisms = ["e", "a", "b"].iter().map(|m| (s(m), s("*"), s("*"))).collect();
        let table = [("a", "a", "b"), ("a", "b", "a"), ("b", "a", "b"), ("b", "b", "a")];
        let mut comp: Vec<(String, String, String)> = table.iter().map(|(g, f, r)| (s(g), s(f), s(r))).collect();
        for m in ["e", "a", "b"] {
            comp.push((s("e"), s(m), s(m)));
            if m != "e" {
                comp.push((s(m), s("e"), s(m)));
            }
        }
        let c = FinCategory::from_tables("magma", objects, morphisms, vec![(s("*"), s("e"))], comp).unwrap();
        let v = validate_category(&c);
        assert!(v.has("associativity"));
        // Brute-force oracle: count non-associative triples directly.
        let mut bad = 0;
        for h in 0..3 {
            for g in 0..3 {
                for f in 0..3 {
                    if c.comp(c.comp(h, g), f) != c.comp(h, c.comp(g, f)) {
                        bad += 1;
                    }
                }
            }
        }
        assert_eq!(bad, v.violations.iter().filter(|x| x.law == "associativity").count());
        assert!(bad > 0);
    }

    #[test]
    fn dangling_is_structural() {
        let err = FinCategory::from_tables(
            "broken",
            vec![s("0")],
            vec![(s("id"), s("0"), s("1"))],
            vec![(s("0"), s("id"))],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, StructureError::Dangling { ref name, .. } if name == "1"));
    }

    #[test]
    fn missing_composite_is_structural() {
        let err = FinCategory::from_tables("broken", vec![s("0")], vec![(s("id"), s("0"), s("0"))], vec![(s("0"), s("id"))], vec![]).unwrap_err();
        assert!(matches!(err, StructureError::Missing { .. }));
    }

    #[test]
    fn op_is_an_involution() {
        let c = fixtures::chain(3);
        assert_eq!(c.op().op(), c);
        assert!(validate_category(&c.op()).is_ok());
        assert_eq!(c.op().hom(2, 0).len(), 1);
    }
}
