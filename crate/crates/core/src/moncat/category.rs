use std::sync::Arc;

use crate::check::Validation;
use crate::fincat::category::toggle_suffix;
use crate::fincat::{validate_category, FinCategory, Mor, Obj, StructureError};
use crate::{Error, Result};

/// A monoidal structure on a finite category, with every table explicit.
///
/// Orientation: `assoc(a, b, c): (a⊗b)⊗c → a⊗(b⊗c)`, `lunit(a): i⊗a → a`
/// and `runit(a): a⊗i → a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalCategory {
    pub name: String,
    base: Arc<FinCategory>,
    tensor_obj: Vec<Obj>,
    tensor_mor: Vec<Mor>,
    unit: Obj,
    assoc: Vec<Mor>,
    lunit: Vec<Mor>,
    runit: Vec<Mor>,
}

/// The tables of a monoidal category, for single-entry edits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonTable {
    TensorObj,
    TensorMor,
    Unit,
    Assoc,
    LeftUnitor,
    RightUnitor,
}

impl MonTable {
    pub fn all() -> [MonTable; 6] {
        [MonTable::TensorObj, MonTable::TensorMor, MonTable::Unit, MonTable::Assoc, MonTable::LeftUnitor, MonTable::RightUnitor]
    }

    pub fn label(self) -> &'static str {
        match self {
            MonTable::TensorObj => "tensor on objects",
            MonTable::TensorMor => "tensor on morphisms",
            MonTable::Unit => "unit",
            MonTable::Assoc => "associator",
            MonTable::LeftUnitor => "left unitor",
            MonTable::RightUnitor => "right unitor",
        }
    }
}

/// Composes `ms[0] ∘ ms[1] ∘ …`, or `None` if some pair is not composable.
pub(crate) fn chain_comp(c: &FinCategory, ms: &[Mor]) -> Option<Mor> {
    let (&last, rest) = ms.split_last()?;
    rest.iter().rev().try_fold(last, |acc, &g| c.compose(g, acc))
}

impl MonoidalCategory {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        base: Arc<FinCategory>,
        tensor_obj: Vec<Obj>,
        tensor_mor: Vec<Mor>,
        unit: Obj,
        assoc: Vec<Mor>,
        lunit: Vec<Mor>,
        runit: Vec<Mor>,
    ) -> Result<Self, StructureError> {
        let name = name.into();
        let (k, n) = (base.num_objects(), base.num_morphisms());
        let sizes = [
            ("tensor on objects", tensor_obj.len(), k * k, k, &tensor_obj),
            ("tensor on morphisms", tensor_mor.len(), n * n, n, &tensor_mor),
            ("associator", assoc.len(), k * k * k, n, &assoc),
            ("left unitor", lunit.len(), k, n, &lunit),
            ("right unitor", runit.len(), k, n, &runit),
        ];
        for (what, got, want, bound, table) in sizes {
            if got != want {
                return Err(StructureError::missing(format!("{what} of `{name}`"), format!("{got} of {want} entries")));
            }
            if table.iter().any(|&x| x >= bound) {
                return Err(StructureError::dangling("<index>", format!("{what} of `{name}`")));
            }
        }
        if unit >= k {
            return Err(StructureError::dangling("<index>", format!("unit of `{name}`")));
        }
        Ok(MonoidalCategory { name, base, tensor_obj, tensor_mor, unit, assoc, lunit, runit })
    }

    /// Tabulates the structure from rules.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fn(
        name: impl Into<String>,
        base: Arc<FinCategory>,
        tobj: impl Fn(Obj, Obj) -> Obj,
        tmor: impl Fn(Mor, Mor) -> Mor,
        unit: Obj,
        assoc: impl Fn(Obj, Obj, Obj) -> Mor,
        lunit: impl Fn(Obj) -> Mor,
        runit: impl Fn(Obj) -> Mor,
    ) -> Result<Self, StructureError> {
        let (k, n) = (base.num_objects(), base.num_morphisms());
        let tensor_obj = (0..k * k).map(|i| tobj(i / k, i % k)).collect();
        let tensor_mor = (0..n * n).map(|i| tmor(i / n, i % n)).collect();
        let assoc = (0..k * k * k).map(|i| assoc(i / (k * k), (i / k) % k, i % k)).collect();
        let lunit = (0..k).map(lunit).collect();
        let runit = (0..k).map(runit).collect();
        MonoidalCategory::new(name, base, tensor_obj, tensor_mor, unit, assoc, lunit, runit)
    }

    /// A strict monoidal structure: all constraints are identities.
    pub fn strict(name: impl Into<String>, base: Arc<FinCategory>, tobj: impl Fn(Obj, Obj) -> Obj, tmor: impl Fn(Mor, Mor) -> Mor, unit: Obj) -> Result<Self, StructureError> {
        let b = base.clone();
        let id = move |a: Obj| b.id(a);
        let (id1, id2, id3) = (id.clone(), id.clone(), id);
        let t = &tobj;
        MonoidalCategory::from_fn(name, base, t, tmor, unit, |a, bb, c| id1(t(t(a, bb), c)), id2, id3)
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn unit(&self) -> Obj {
        self.unit
    }

    pub fn t0(&self, a: Obj, b: Obj) -> Obj {
        self.tensor_obj[a * self.base.num_objects() + b]
    }

    pub fn t1(&self, f: Mor, g: Mor) -> Mor {
        self.tensor_mor[f * self.base.num_morphisms() + g]
    }

    pub fn assoc(&self, a: Obj, b: Obj, c: Obj) -> Mor {
        let k = self.base.num_objects();
        self.assoc[(a * k + b) * k + c]
    }

    pub fn lunit(&self, a: Obj) -> Mor {
        self.lunit[a]
    }

    pub fn runit(&self, a: Obj) -> Mor {
        self.runit[a]
    }

    pub fn tensor_obj_table(&self) -> &[Obj] {
        &self.tensor_obj
    }

    pub fn tensor_mor_table(&self) -> &[Mor] {
        &self.tensor_mor
    }

    pub fn assoc_table(&self) -> &[Mor] {
        &self.assoc
    }

    pub fn lunit_table(&self) -> &[Mor] {
        &self.lunit
    }

    pub fn runit_table(&self) -> &[Mor] {
        &self.runit
    }

    pub fn is_strict(&self) -> bool {
        let c = &self.base;
        self.assoc.iter().chain(&self.lunit).chain(&self.runit).all(|&m| c.is_identity(m))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Number of entries in a table and the number of values each entry may take.
    pub fn table_shape(&self, t: MonTable) -> (usize, usize) {
        let (k, n) = (self.base.num_objects(), self.base.num_morphisms());
        match t {
            MonTable::TensorObj => (k * k, k),
            MonTable::TensorMor => (n * n, n),
            MonTable::Unit => (1, k),
            MonTable::Assoc => (k * k * k, n),
            MonTable::LeftUnitor | MonTable::RightUnitor => (k, n),
        }
    }

    /// A copy with one table entry replaced.
    pub fn with_entry(&self, t: MonTable, i: usize, v: usize) -> MonoidalCategory {
        let mut m = self.clone();
        match t {
            MonTable::TensorObj => m.tensor_obj[i] = v,
            MonTable::TensorMor => m.tensor_mor[i] = v,
            MonTable::Unit => m.unit = v,
            MonTable::Assoc => m.assoc[i] = v,
            MonTable::LeftUnitor => m.lunit[i] = v,
            MonTable::RightUnitor => m.runit[i] = v,
        }
        m
    }

    /// The same tensor on the opposite category, with every constraint
    /// inverted.
    pub fn op(&self) -> Result<MonoidalCategory> {
        let c = &self.base;
        let inv = |m: Mor| c.inverse(m).ok_or_else(|| Error::precondition(format!("constraint `{}` of {} is not invertible", c.mor_name(m), self.name)));
        let assoc = self.assoc.iter().map(|&m| inv(m)).collect::<Result<Vec<_>>>()?;
        let lunit = self.lunit.iter().map(|&m| inv(m)).collect::<Result<Vec<_>>>()?;
        let runit = self.runit.iter().map(|&m| inv(m)).collect::<Result<Vec<_>>>()?;
        Ok(MonoidalCategory {
            name: toggle_suffix(&self.name, "^op"),
            base: Arc::new(c.op()),
            tensor_obj: self.tensor_obj.clone(),
            tensor_mor: self.tensor_mor.clone(),
            unit: self.unit,
            assoc,
            lunit,
            runit,
        })
    }
}

/// Bifunctoriality of the tensor, naturality and invertibility of the
/// constraints, and the pentagon and triangle axioms.
pub fn validate_monoidal_category(m: &MonoidalCategory) -> Validation {
    let mut v = Validation::new(format!("monoidal category {}", m.name));
    let c = &**m.base();
    v.absorb("base: ", validate_category(c));
    if !v.is_ok() {
        return v;
    }
    let (k, n) = (c.num_objects(), c.num_morphisms());
    let on = |a: Obj| c.obj_name(a).to_string();
    let mn = |f: Mor| c.mor_name(f).to_string();
    for f in 0..n {
        for g in 0..n {
            let t = m.t1(f, g);
            let ok = c.src(t) == m.t0(c.src(f), c.src(g)) && c.tgt(t) == m.t0(c.tgt(f), c.tgt(g));
            v.require(ok, "tensor-boundary", || [mn(f), mn(g)]);
        }
    }
    for a in 0..k {
        for b in 0..k {
            v.require(m.t1(c.id(a), c.id(b)) == c.id(m.t0(a, b)), "tensor-identity", || [on(a), on(b)]);
        }
    }
    if !v.is_ok() {
        return v;
    }
    for (f2, f1, f21) in c.composition_triples() {
        for (g2, g1, g21) in c.composition_triples() {
            v.require(c.compose(m.t1(f2, g2), m.t1(f1, g1)) == Some(m.t1(f21, g21)), "tensor-composition", || [mn(f2), mn(f1), mn(g2), mn(g1)]);
        }
    }
    let iso_law = |v: &mut Validation, law: &str, x: Mor, src: Obj, tgt: Obj, w: Vec<String>| {
        if c.src(x) != src || c.tgt(x) != tgt {
            v.fail(&format!("{law}-boundary"), w);
        } else if !c.is_iso(x) {
            v.fail(&format!("{law}-invertible"), w);
        }
    };
    for a in 0..k {
        for b in 0..k {
            for d in 0..k {
                iso_law(&mut v, "associator", m.assoc(a, b, d), m.t0(m.t0(a, b), d), m.t0(a, m.t0(b, d)), vec![on(a), on(b), on(d)]);
            }
        }
        iso_law(&mut v, "left-unitor", m.lunit(a), m.t0(m.unit(), a), a, vec![on(a)]);
        iso_law(&mut v, "right-unitor", m.runit(a), m.t0(a, m.unit()), a, vec![on(a)]);
    }
    if v.violations.iter().any(|x| x.law.ends_with("-boundary")) {
        return v;
    }
    let i = c.id(m.unit());
    for f in 0..n {
        let (a, a2) = (c.src(f), c.tgt(f));
        v.require(c.compose(f, m.lunit(a)) == c.compose(m.lunit(a2), m.t1(i, f)), "left-unitor-naturality", || [mn(f)]);
        v.require(c.compose(f, m.runit(a)) == c.compose(m.runit(a2), m.t1(f, i)), "right-unitor-naturality", || [mn(f)]);
        for g in 0..n {
            for h in 0..n {
                let (b, b2, d, d2) = (c.src(g), c.tgt(g), c.src(h), c.tgt(h));
                let lhs = c.compose(m.assoc(a2, b2, d2), m.t1(m.t1(f, g), h));
                let rhs = c.compose(m.t1(f, m.t1(g, h)), m.assoc(a, b, d));
                v.require(lhs == rhs, "associator-naturality", || [mn(f), mn(g), mn(h)]);
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            let tri_l = c.compose(m.t1(c.id(a), m.lunit(b)), m.assoc(a, m.unit(), b));
            v.require(tri_l == Some(m.t1(m.runit(a), c.id(b))), "triangle", || [on(a), on(b)]);
            for d in 0..k {
                for e in 0..k {
                    let lhs = chain_comp(c, &[m.assoc(a, b, m.t0(d, e)), m.assoc(m.t0(a, b), d, e)]);
                    let rhs = chain_comp(c, &[m.t1(c.id(a), m.assoc(b, d, e)), m.assoc(a, m.t0(b, d), e), m.t1(m.assoc(a, b, d), c.id(e))]);
                    v.require(lhs.is_some() && lhs == rhs, "pentagon", || [on(a), on(b), on(d), on(e)]);
                }
            }
        }
    }
    v
}

/// Every single-entry corruption of the monoidal tables, labelled by table,
/// position and the replacement value.
pub fn corruptions(m: &MonoidalCategory) -> Vec<(String, MonoidalCategory)> {
    let mut out = Vec::new();
    for t in MonTable::all() {
        let (len, range) = m.table_shape(t);
        for i in 0..len {
            let current = match t {
                MonTable::TensorObj => m.tensor_obj[i],
                MonTable::TensorMor => m.tensor_mor[i],
                MonTable::Unit => m.unit,
                MonTable::Assoc => m.assoc[i],
                MonTable::LeftUnitor => m.lunit[i],
                MonTable::RightUnitor => m.runit[i],
            };
            for val in (0..range).filter(|&x| x != current) {
                out.push((format!("{}[{i}] := {val}", t.label()), m.with_entry(t, i, val)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moncat::fixtures::{join_chain, meet_chain, sigma};

    #[test]
    fn chains_and_monoids_validate() {
        for n in 1..=4 {
            for m in [join_chain(n), meet_chain(n)] {
                let v = validate_monoidal_category(&m);
                assert!(v.is_ok(), "{v}");
            }
        }
        let z3 = sigma(&crate::fincat::fixtures::cyclic(3)).unwrap();
        assert!(validate_monoidal_category(&z3).is_ok());
    }

    #[test]
    fn bad_associator_is_caught() {
        let z3 = sigma(&crate::fincat::fixtures::cyclic(3)).unwrap();
        let bad = z3.with_entry(MonTable::Assoc, 0, 1);
        let v = validate_monoidal_category(&bad);
        assert!(v.has("pentagon") || v.has("triangle"), "{v}");
    }

    #[test]
    fn non_invertible_associator_is_its_own_class() {
        // {1, 0} under multiplication: 0 is not invertible.
        let m = crate::fincat::fixtures::monoid("mul2", 2, |a, b| if a == 0 && b == 0 { 0 } else { 1 });
        let s = sigma(&m).unwrap();
        let bad = s.with_entry(MonTable::Assoc, 0, 1);
        assert!(validate_monoidal_category(&bad).has("associator-invertible"));
    }

    #[test]
    fn op_is_an_involution() {
        let m = join_chain(3);
        let back = m.op().unwrap().op().unwrap();
        assert_eq!(back, m);
        assert!(validate_monoidal_category(&m.op().unwrap()).is_ok());
    }

    #[test]
    fn every_corruption_of_a_small_chain_is_detected() {
        let m = join_chain(2);
        for (label, bad) in corruptions(&m) {
            assert!(!validate_monoidal_category(&bad).is_ok(), "{label}");
        }
    }

    #[test]
    fn every_corruption_of_sigma_and_chains_is_detected() {
        let mut fixtures: Vec<MonoidalCategory> = crate::fincat::fixtures::commutative_monoids(3).iter().map(|m| sigma(m).unwrap()).collect();
        fixtures.extend([join_chain(3), meet_chain(3)]);
        for m in &fixtures {
            for (label, bad) in corruptions(m) {
                assert!(!validate_monoidal_category(&bad).is_ok(), "{}: {label}", m.name);
            }
        }
    }
}
