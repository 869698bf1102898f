//! JSON documents: one schema per kind, with every identifier given by name.
//!
//! Tables are lists of tuples over names, for instance composition is a list
//! of triples `[g, f, g∘f]`. Serialization walks the resolved structure in
//! index order, so `serialize(parse(d))` is the canonical form of `d` and
//! canonicalization is idempotent.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2cat::{FCategory, FFunctor, Fin2Category, TwoTables};
use crate::fincat::{CatAdjunction, FinCategory, Functor, NatTransformation, StructureError};
use crate::moncat::{MonoidalCategory, WMonoidalFunctor};
use crate::monadfiller::Fin2Monad;
use crate::variance::Variance;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Category,
    MonoidalCategory,
    Functor,
    MonoidalFunctor,
    NatTrans,
    Adjunction,
    TwoCategory,
    FCategory,
    FFunctor,
    TwoMonad,
    FillerProblem,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::MonoidalCategory => "monoidal_category",
            Kind::Functor => "functor",
            Kind::MonoidalFunctor => "monoidal_functor",
            Kind::NatTrans => "nat_trans",
            Kind::Adjunction => "adjunction",
            Kind::TwoCategory => "two_category",
            Kind::FCategory => "f_category",
            Kind::FFunctor => "f_functor",
            Kind::TwoMonad => "two_monad",
            Kind::FillerProblem => "filler_problem",
        }
    }

    fn all() -> [Kind; 11] {
        use Kind::*;
        [Category, MonoidalCategory, Functor, MonoidalFunctor, NatTrans, Adjunction, TwoCategory, FCategory, FFunctor, TwoMonad, FillerProblem]
    }

    fn parse(s: &str) -> Option<Kind> {
        Kind::all().into_iter().find(|k| k.label() == s)
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown document kind `{0}`")]
    UnknownKind(String),
    #[error("format_version `{found}` is not supported (expected `{FORMAT_VERSION}`)")]
    Version { found: String },
    #[error("malformed {kind} payload: {message}")]
    Schema { kind: &'static str, message: String },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("{0}")]
    Semantic(String),
}

impl From<crate::Error> for ParseError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::Structure(s) => ParseError::Structure(s),
            other => ParseError::Semantic(other.to_string()),
        }
    }
}

type Pair = (String, String);
type Triple = (String, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub name: String,
    pub objects: Vec<String>,
    /// `[name, source, target]`.
    pub morphisms: Vec<Triple>,
    pub identities: Vec<Pair>,
    /// `[g, f, g∘f]`.
    pub composition: Vec<Triple>,
}

/// The monoidal structure on a category given elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalStructureDoc {
    pub name: String,
    pub unit: String,
    pub tensor_objects: Vec<Triple>,
    pub tensor_morphisms: Vec<Triple>,
    /// `[a, b, c, α_{a,b,c}]`.
    pub associator: Vec<(String, String, String, String)>,
    pub left_unitor: Vec<Pair>,
    pub right_unitor: Vec<Pair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDoc {
    pub category: CategoryDoc,
    pub structure: MonoidalStructureDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorMaps {
    pub name: String,
    pub objects: Vec<Pair>,
    pub morphisms: Vec<Pair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub dom: CategoryDoc,
    pub cod: CategoryDoc,
    pub functor: FunctorMaps,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintDoc {
    pub variance: Variance,
    /// `[a, b, φ_{a,b}]`.
    pub constraint: Vec<Triple>,
    pub unit_constraint: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalFunctorDoc {
    pub dom: MonoidalDoc,
    pub cod: MonoidalDoc,
    pub functor: FunctorMaps,
    pub constraints: ConstraintDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentsDoc {
    pub name: String,
    pub components: Vec<Pair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDoc {
    pub dom: CategoryDoc,
    pub cod: CategoryDoc,
    pub source: FunctorMaps,
    pub target: FunctorMaps,
    pub transformation: ComponentsDoc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Monoidal structures on both sides and constraints on one adjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionMonoidalDoc {
    pub c: MonoidalStructureDoc,
    pub d: MonoidalStructureDoc,
    pub adjoint: Side,
    pub constraints: ConstraintDoc,
}

/// `left: c → d` and `right: d → c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionDoc {
    pub c: CategoryDoc,
    pub d: CategoryDoc,
    pub left: FunctorMaps,
    pub right: FunctorMaps,
    pub unit: ComponentsDoc,
    pub counit: ComponentsDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoidal: Option<AdjunctionMonoidalDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCategoryDoc {
    pub name: String,
    pub objects: Vec<String>,
    pub cells1: Vec<Triple>,
    pub identities1: Vec<Pair>,
    pub comp1: Vec<Triple>,
    /// `[name, source 1-cell, target 1-cell]`.
    pub cells2: Vec<Triple>,
    pub identities2: Vec<Pair>,
    pub vcomp: Vec<Triple>,
    /// `[h, α, h·α]`.
    pub lwhisk: Vec<Triple>,
    /// `[α, k, α·k]`.
    pub rwhisk: Vec<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FCategoryDoc {
    pub two_category: TwoCategoryDoc,
    pub tight: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoMaps {
    pub name: String,
    pub objects: Vec<Pair>,
    pub cells1: Vec<Pair>,
    pub cells2: Vec<Pair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FFunctorDoc {
    pub dom: FCategoryDoc,
    pub cod: FCategoryDoc,
    pub functor: TwoMaps,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoMonadDoc {
    pub name: String,
    pub base: TwoCategoryDoc,
    pub functor: TwoMaps,
    pub unit: Vec<Pair>,
    pub multiplication: Vec<Pair>,
}

/// `r: a_τ → b`, `s: a → c` and `h: b → c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FillerProblemDoc {
    pub variance: Variance,
    pub a: FCategoryDoc,
    pub b: FCategoryDoc,
    pub c: FCategoryDoc,
    pub r: TwoMaps,
    pub s: TwoMaps,
    pub h: TwoMaps,
}

/// The unassembled data of a filler problem; limits and certification need a
/// cap and happen at command time.
#[derive(Clone, Debug)]
pub struct FillerSpec {
    pub variance: Variance,
    pub a: Arc<FCategory>,
    pub a_tau: Arc<FCategory>,
    pub b: Arc<FCategory>,
    pub c: Arc<FCategory>,
    pub r: FFunctor,
    pub s: FFunctor,
    pub h: FFunctor,
}

/// An adjunction, optionally with a monoidal structure on one of its adjoints.
#[derive(Clone, Debug)]
pub struct AdjunctionItem {
    pub adjunction: CatAdjunction,
    pub monoidal: Option<WMonoidalFunctor>,
}

/// A resolved document.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Item {
    Category(Arc<FinCategory>),
    MonoidalCategory(Arc<MonoidalCategory>),
    Functor(Functor),
    MonoidalFunctor(WMonoidalFunctor),
    NatTrans(NatTransformation),
    Adjunction(AdjunctionItem),
    TwoCategory(Arc<Fin2Category>),
    FCategory(Arc<FCategory>),
    FFunctor(FFunctor),
    TwoMonad(Fin2Monad),
    FillerProblem(FillerSpec),
}

impl Item {
    pub fn kind(&self) -> Kind {
        match self {
            Item::Category(_) => Kind::Category,
            Item::MonoidalCategory(_) => Kind::MonoidalCategory,
            Item::Functor(_) => Kind::Functor,
            Item::MonoidalFunctor(_) => Kind::MonoidalFunctor,
            Item::NatTrans(_) => Kind::NatTrans,
            Item::Adjunction(_) => Kind::Adjunction,
            Item::TwoCategory(_) => Kind::TwoCategory,
            Item::FCategory(_) => Kind::FCategory,
            Item::FFunctor(_) => Kind::FFunctor,
            Item::TwoMonad(_) => Kind::TwoMonad,
            Item::FillerProblem(_) => Kind::FillerProblem,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    format_version: String,
    kind: String,
    payload: serde_json::Value,
}

#[derive(Serialize)]
struct EnvelopeOut<'a, P: Serialize> {
    format_version: &'static str,
    kind: &'a str,
    payload: P,
}

fn payload<T: for<'de> Deserialize<'de>>(kind: Kind, v: serde_json::Value) -> Result<T, ParseError> {
    serde_json::from_value(v).map_err(|e| ParseError::Schema { kind: kind.label(), message: e.to_string() })
}

/// Parses and resolves a document.
pub fn parse_document(bytes: &[u8]) -> Result<Item, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::Syntax { line: 0, column: e.valid_up_to(), message: "input is not UTF-8".into() })?;
    let env: Envelope = serde_json::from_str(text).map_err(|e| ParseError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })?;
    let kind = Kind::parse(&env.kind).ok_or_else(|| ParseError::UnknownKind(env.kind.clone()))?;
    if env.format_version != FORMAT_VERSION {
        return Err(ParseError::Version { found: env.format_version });
    }
    let p = env.payload;
    Ok(match kind {
        Kind::Category => Item::Category(Arc::new(category_from(&payload(kind, p)?)?)),
        Kind::MonoidalCategory => Item::MonoidalCategory(monoidal_from(&payload(kind, p)?)?),
        Kind::Functor => Item::Functor(functor_from(&payload(kind, p)?)?),
        Kind::MonoidalFunctor => Item::MonoidalFunctor(monoidal_functor_from(&payload(kind, p)?)?),
        Kind::NatTrans => Item::NatTrans(nat_trans_from(&payload(kind, p)?)?),
        Kind::Adjunction => Item::Adjunction(adjunction_from(&payload(kind, p)?)?),
        Kind::TwoCategory => Item::TwoCategory(Arc::new(two_category_from(&payload(kind, p)?)?)),
        Kind::FCategory => Item::FCategory(Arc::new(fcategory_from(&payload(kind, p)?)?)),
        Kind::FFunctor => Item::FFunctor(ffunctor_doc_from(&payload(kind, p)?)?),
        Kind::TwoMonad => Item::TwoMonad(monad_from(&payload(kind, p)?)?),
        Kind::FillerProblem => Item::FillerProblem(filler_from(&payload(kind, p)?)?),
    })
}

/// The canonical JSON text of a resolved document, newline-terminated.
pub fn serialize_document(item: &Item) -> Vec<u8> {
    let value = document_value(item);
    let mut out = serde_json::to_vec_pretty(&value).expect("documents serialize");
    out.push(b'\n');
    out
}

/// The canonical document as a JSON value.
pub fn document_value(item: &Item) -> serde_json::Value {
    fn wrap<P: Serialize>(kind: Kind, p: P) -> serde_json::Value {
        serde_json::to_value(EnvelopeOut { format_version: FORMAT_VERSION, kind: kind.label(), payload: p }).expect("documents serialize")
    }
    let k = item.kind();
    match item {
        Item::Category(c) => wrap(k, category_doc(c)),
        Item::MonoidalCategory(m) => wrap(k, monoidal_doc(m)),
        Item::Functor(f) => wrap(k, FunctorDoc { dom: category_doc(f.dom()), cod: category_doc(f.cod()), functor: functor_maps(f) }),
        Item::MonoidalFunctor(f) => wrap(k, MonoidalFunctorDoc { dom: monoidal_doc(f.dom()), cod: monoidal_doc(f.cod()), functor: functor_maps(f.functor()), constraints: constraint_doc(f) }),
        Item::NatTrans(t) => wrap(
            k,
            NatTransDoc { dom: category_doc(t.dom_cat()), cod: category_doc(t.cod_cat()), source: functor_maps(t.source()), target: functor_maps(t.target()), transformation: components_doc(t) },
        ),
        Item::Adjunction(a) => wrap(k, adjunction_doc(a)),
        Item::TwoCategory(c) => wrap(k, two_category_doc(c)),
        Item::FCategory(c) => wrap(k, fcategory_doc(c)),
        Item::FFunctor(f) => wrap(k, FFunctorDoc { dom: fcategory_doc(f.dom()), cod: fcategory_doc(f.cod()), functor: two_maps(f) }),
        Item::TwoMonad(m) => wrap(k, monad_doc(m)),
        Item::FillerProblem(s) => wrap(
            k,
            FillerProblemDoc { variance: s.variance, a: fcategory_doc(&s.a), b: fcategory_doc(&s.b), c: fcategory_doc(&s.c), r: two_maps(&s.r), s: two_maps(&s.s), h: two_maps(&s.h) },
        ),
    }
}

/// `serialize(parse(bytes))`.
pub fn canonicalize(bytes: &[u8]) -> Result<Vec<u8>, ParseError> {
    Ok(serialize_document(&parse_document(bytes)?))
}

// ---- name resolution ----

struct Names {
    map: HashMap<String, usize>,
    what: &'static str,
}

impl Names {
    fn new<'a>(names: impl IntoIterator<Item = &'a str>, what: &'static str) -> Self {
        Names { map: names.into_iter().enumerate().map(|(i, n)| (n.to_string(), i)).collect(), what }
    }

    fn get(&self, name: &str, location: &str) -> Result<usize, StructureError> {
        self.map.get(name).copied().ok_or_else(|| StructureError::dangling(name, format!("{location} (undeclared {})", self.what)))
    }
}

/// Fills a dense table of `size` entries, rejecting repeats and gaps.
fn fill(location: &str, size: usize, entries: impl IntoIterator<Item = Result<(usize, usize), StructureError>>) -> Result<Vec<usize>, StructureError> {
    let mut out = vec![None; size];
    for e in entries {
        let (i, v) = e?;
        if out[i].replace(v).is_some() {
            return Err(StructureError::Duplicate { name: format!("entry {i}"), location: location.into() });
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| StructureError::missing(location, format!("entry {i} is not given"))))
        .collect()
}

fn obj_names(c: &FinCategory) -> Names {
    Names::new(c.objects().iter().map(String::as_str), "object")
}

fn mor_names(c: &FinCategory) -> Names {
    Names::new(c.arrows().iter().map(|a| a.name.as_str()), "morphism")
}

// ---- categories ----

pub fn category_from(d: &CategoryDoc) -> Result<FinCategory, StructureError> {
    FinCategory::from_tables(d.name.clone(), d.objects.clone(), d.morphisms.clone(), d.identities.clone(), d.composition.clone())
}

pub fn category_doc(c: &FinCategory) -> CategoryDoc {
    let on = |o: usize| c.obj_name(o).to_string();
    let mn = |m: usize| c.mor_name(m).to_string();
    CategoryDoc {
        name: c.name().into(),
        objects: c.objects().to_vec(),
        morphisms: c.arrows().iter().map(|a| (a.name.clone(), on(a.src), on(a.tgt))).collect(),
        identities: (0..c.num_objects()).map(|o| (on(o), mn(c.id(o)))).collect(),
        composition: c.composition_triples().into_iter().map(|(g, f, gf)| (mn(g), mn(f), mn(gf))).collect(),
    }
}

fn structure_from(base: Arc<FinCategory>, s: &MonoidalStructureDoc) -> Result<MonoidalCategory, StructureError> {
    let (on, mn) = (obj_names(&base), mor_names(&base));
    let (k, n) = (base.num_objects(), base.num_morphisms());
    let loc = |t: &str| format!("{t} of `{}`", s.name);
    let tobj = fill(&loc("tensor_objects"), k * k, s.tensor_objects.iter().map(|(a, b, ab)| Ok((on.get(a, &loc("tensor_objects"))? * k + on.get(b, &loc("tensor_objects"))?, on.get(ab, &loc("tensor_objects"))?))))?;
    let tmor = fill(&loc("tensor_morphisms"), n * n, s.tensor_morphisms.iter().map(|(f, g, fg)| Ok((mn.get(f, &loc("tensor_morphisms"))? * n + mn.get(g, &loc("tensor_morphisms"))?, mn.get(fg, &loc("tensor_morphisms"))?))))?;
    let l = loc("associator");
    let assoc = fill(&l, k * k * k, s.associator.iter().map(|(a, b, c, m)| Ok(((on.get(a, &l)? * k + on.get(b, &l)?) * k + on.get(c, &l)?, mn.get(m, &l)?))))?;
    let l = loc("left_unitor");
    let lunit = fill(&l, k, s.left_unitor.iter().map(|(a, m)| Ok((on.get(a, &l)?, mn.get(m, &l)?))))?;
    let l = loc("right_unitor");
    let runit = fill(&l, k, s.right_unitor.iter().map(|(a, m)| Ok((on.get(a, &l)?, mn.get(m, &l)?))))?;
    let unit = on.get(&s.unit, &loc("unit"))?;
    MonoidalCategory::new(s.name.clone(), base, tobj, tmor, unit, assoc, lunit, runit)
}

fn structure_doc(m: &MonoidalCategory) -> MonoidalStructureDoc {
    let c = m.base();
    let (k, n) = (c.num_objects(), c.num_morphisms());
    let on = |o: usize| c.obj_name(o).to_string();
    let mn = |x: usize| c.mor_name(x).to_string();
    MonoidalStructureDoc {
        name: m.name.clone(),
        unit: on(m.unit()),
        tensor_objects: (0..k * k).map(|i| (on(i / k), on(i % k), on(m.tensor_obj_table()[i]))).collect(),
        tensor_morphisms: (0..n * n).map(|i| (mn(i / n), mn(i % n), mn(m.tensor_mor_table()[i]))).collect(),
        associator: (0..k * k * k).map(|i| (on(i / (k * k)), on((i / k) % k), on(i % k), mn(m.assoc_table()[i]))).collect(),
        left_unitor: (0..k).map(|a| (on(a), mn(m.lunit(a)))).collect(),
        right_unitor: (0..k).map(|a| (on(a), mn(m.runit(a)))).collect(),
    }
}

fn monoidal_from(d: &MonoidalDoc) -> Result<Arc<MonoidalCategory>, StructureError> {
    Ok(Arc::new(structure_from(Arc::new(category_from(&d.category)?), &d.structure)?))
}

pub(crate) fn monoidal_doc(m: &MonoidalCategory) -> MonoidalDoc {
    MonoidalDoc { category: category_doc(m.base()), structure: structure_doc(m) }
}

fn functor_from_maps(dom: &Arc<FinCategory>, cod: &Arc<FinCategory>, m: &FunctorMaps) -> Result<Functor, StructureError> {
    Functor::from_names(m.name.clone(), dom.clone(), cod.clone(), &m.objects, &m.morphisms)
}

pub(crate) fn functor_maps(f: &Functor) -> FunctorMaps {
    let (d, c) = (f.dom(), f.cod());
    FunctorMaps {
        name: f.name.clone(),
        objects: (0..d.num_objects()).map(|o| (d.obj_name(o).into(), c.obj_name(f.ob(o)).into())).collect(),
        morphisms: (0..d.num_morphisms()).map(|m| (d.mor_name(m).into(), c.mor_name(f.mor(m)).into())).collect(),
    }
}

fn functor_from(d: &FunctorDoc) -> Result<Functor, StructureError> {
    functor_from_maps(&Arc::new(category_from(&d.dom)?), &Arc::new(category_from(&d.cod)?), &d.functor)
}

fn constraints_from(name: &str, f: Functor, dom: Arc<MonoidalCategory>, cod: Arc<MonoidalCategory>, c: &ConstraintDoc) -> Result<WMonoidalFunctor, ParseError> {
    let (on, mn) = (obj_names(dom.base()), mor_names(cod.base()));
    let k = dom.base().num_objects();
    let loc = format!("constraint of `{name}`");
    let table = fill(&loc, k * k, c.constraint.iter().map(|(a, b, m)| Ok((on.get(a, &loc)? * k + on.get(b, &loc)?, mn.get(m, &loc)?))))?;
    let unit = mn.get(&c.unit_constraint, &format!("unit_constraint of `{name}`"))?;
    Ok(WMonoidalFunctor::new(name, c.variance, dom, cod, f, table, unit)?)
}

pub(crate) fn constraint_doc(f: &WMonoidalFunctor) -> ConstraintDoc {
    let (d, c) = (f.dom().base(), f.cod().base());
    let k = d.num_objects();
    ConstraintDoc {
        variance: f.variance,
        constraint: (0..k * k).map(|i| (d.obj_name(i / k).into(), d.obj_name(i % k).into(), c.mor_name(f.constraint_table()[i]).into())).collect(),
        unit_constraint: c.mor_name(f.unit_constraint()).into(),
    }
}

fn monoidal_functor_from(d: &MonoidalFunctorDoc) -> Result<WMonoidalFunctor, ParseError> {
    let (dom, cod) = (monoidal_from(&d.dom)?, monoidal_from(&d.cod)?);
    let f = functor_from_maps(dom.base(), cod.base(), &d.functor)?;
    constraints_from(&d.functor.name, f, dom, cod, &d.constraints)
}

fn components_from(source: Functor, target: Functor, d: &ComponentsDoc) -> Result<NatTransformation, StructureError> {
    NatTransformation::from_names(d.name.clone(), source, target, &d.components)
}

pub(crate) fn components_doc(t: &NatTransformation) -> ComponentsDoc {
    let (d, c) = (t.dom_cat(), t.cod_cat());
    ComponentsDoc { name: t.name.clone(), components: (0..d.num_objects()).map(|o| (d.obj_name(o).into(), c.mor_name(t.at(o)).into())).collect() }
}

fn nat_trans_from(d: &NatTransDoc) -> Result<NatTransformation, StructureError> {
    let (dom, cod) = (Arc::new(category_from(&d.dom)?), Arc::new(category_from(&d.cod)?));
    components_from(functor_from_maps(&dom, &cod, &d.source)?, functor_from_maps(&dom, &cod, &d.target)?, &d.transformation)
}

fn adjunction_from(d: &AdjunctionDoc) -> Result<AdjunctionItem, ParseError> {
    let (c, dd) = (Arc::new(category_from(&d.c)?), Arc::new(category_from(&d.d)?));
    let left = functor_from_maps(&c, &dd, &d.left)?;
    let right = functor_from_maps(&dd, &c, &d.right)?;
    let rl = crate::fincat::compose_functors(&right, &left)?;
    let lr = crate::fincat::compose_functors(&left, &right)?;
    let unit = components_from(Functor::identity(c.clone()), rl, &d.unit)?;
    let counit = components_from(lr, Functor::identity(dd.clone()), &d.counit)?;
    let monoidal = match &d.monoidal {
        None => None,
        Some(m) => {
            let mc = Arc::new(structure_from(c.clone(), &m.c)?);
            let md = Arc::new(structure_from(dd.clone(), &m.d)?);
            Some(match m.adjoint {
                Side::Left => constraints_from(&left.name, left.clone(), mc, md, &m.constraints)?,
                Side::Right => constraints_from(&right.name, right.clone(), md, mc, &m.constraints)?,
            })
        }
    };
    Ok(AdjunctionItem { adjunction: CatAdjunction { left, right, unit, counit }, monoidal })
}

fn adjunction_doc(a: &AdjunctionItem) -> AdjunctionDoc {
    let adj = &a.adjunction;
    let monoidal = a.monoidal.as_ref().map(|f| {
        let adjoint = if f.functor() == &adj.left { Side::Left } else { Side::Right };
        let (mc, md) = match adjoint {
            Side::Left => (f.dom(), f.cod()),
            Side::Right => (f.cod(), f.dom()),
        };
        AdjunctionMonoidalDoc { c: structure_doc(mc), d: structure_doc(md), adjoint, constraints: constraint_doc(f) }
    });
    AdjunctionDoc {
        c: category_doc(adj.left.dom()),
        d: category_doc(adj.left.cod()),
        left: functor_maps(&adj.left),
        right: functor_maps(&adj.right),
        unit: components_doc(&adj.unit),
        counit: components_doc(&adj.counit),
        monoidal,
    }
}

// ---- 2-categories ----

pub fn two_category_from(d: &TwoCategoryDoc) -> Result<Fin2Category, StructureError> {
    let t = TwoTables {
        objects: d.objects.clone(),
        cells1: d.cells1.clone(),
        identities1: d.identities1.clone(),
        comp1: d.comp1.clone(),
        cells2: d.cells2.clone(),
        identities2: d.identities2.clone(),
        vcomp: d.vcomp.clone(),
        lwhisk: d.lwhisk.clone(),
        rwhisk: d.rwhisk.clone(),
    };
    Fin2Category::from_tables(d.name.clone(), &t)
}

pub fn two_category_doc(c: &Fin2Category) -> TwoCategoryDoc {
    let t = c.tables();
    TwoCategoryDoc {
        name: c.name().into(),
        objects: t.objects,
        cells1: t.cells1,
        identities1: t.identities1,
        comp1: t.comp1,
        cells2: t.cells2,
        identities2: t.identities2,
        vcomp: t.vcomp,
        lwhisk: t.lwhisk,
        rwhisk: t.rwhisk,
    }
}

pub fn fcategory_from(d: &FCategoryDoc) -> Result<FCategory, StructureError> {
    FCategory::from_names(two_category_from(&d.two_category)?, &d.tight)
}

pub fn fcategory_doc(c: &FCategory) -> FCategoryDoc {
    let a = c.ambient();
    FCategoryDoc { two_category: two_category_doc(a), tight: c.tight_cells().into_iter().map(|f| a.name1(f).to_string()).collect() }
}

fn ffunctor_from(dom: &Arc<FCategory>, cod: &Arc<FCategory>, m: &TwoMaps) -> Result<FFunctor, StructureError> {
    let (d, c) = (dom.ambient(), cod.ambient());
    let loc = |t: &str| format!("{t} of `{}`", m.name);
    let (do_, co) = (Names::new(d.objects().iter().map(String::as_str), "object"), Names::new(c.objects().iter().map(String::as_str), "object"));
    let (d1, c1) = (Names::new(d.cells1().iter().map(|x| x.name.as_str()), "1-cell"), Names::new(c.cells1().iter().map(|x| x.name.as_str()), "1-cell"));
    let (d2, c2) = (Names::new(d.cells2().iter().map(|x| x.name.as_str()), "2-cell"), Names::new(c.cells2().iter().map(|x| x.name.as_str()), "2-cell"));
    let l0 = loc("objects");
    let obj = fill(&l0, d.n0(), m.objects.iter().map(|(x, y)| Ok((do_.get(x, &l0)?, co.get(y, &l0)?))))?;
    let l1 = loc("cells1");
    let one = fill(&l1, d.n1(), m.cells1.iter().map(|(x, y)| Ok((d1.get(x, &l1)?, c1.get(y, &l1)?))))?;
    let l2 = loc("cells2");
    let two = fill(&l2, d.n2(), m.cells2.iter().map(|(x, y)| Ok((d2.get(x, &l2)?, c2.get(y, &l2)?))))?;
    FFunctor::new(m.name.clone(), dom.clone(), cod.clone(), obj, one, two)
}

pub(crate) fn two_maps(f: &FFunctor) -> TwoMaps {
    let (d, c) = (f.dom().ambient(), f.cod().ambient());
    TwoMaps {
        name: f.name.clone(),
        objects: (0..d.n0()).map(|x| (d.obj_name(x).into(), c.obj_name(f.ob(x)).into())).collect(),
        cells1: (0..d.n1()).map(|x| (d.name1(x).into(), c.name1(f.on1(x)).into())).collect(),
        cells2: (0..d.n2()).map(|x| (d.name2(x).into(), c.name2(f.on2(x)).into())).collect(),
    }
}

fn ffunctor_doc_from(d: &FFunctorDoc) -> Result<FFunctor, StructureError> {
    ffunctor_from(&Arc::new(fcategory_from(&d.dom)?), &Arc::new(fcategory_from(&d.cod)?), &d.functor)
}

fn monad_from(d: &TwoMonadDoc) -> Result<Fin2Monad, ParseError> {
    let base = Arc::new(FCategory::all_tight(two_category_from(&d.base)?));
    let t = ffunctor_from(&base, &base, &d.functor)?;
    let c = base.ambient();
    let on = Names::new(c.objects().iter().map(String::as_str), "object");
    let c1 = Names::new(c.cells1().iter().map(|x| x.name.as_str()), "1-cell");
    let comps = |rows: &[Pair], what: &str| {
        let loc = format!("{what} of `{}`", d.name);
        fill(&loc, c.n0(), rows.iter().map(|(x, f)| Ok((on.get(x, &loc)?, c1.get(f, &loc)?))))
    };
    let eta = comps(&d.unit, "unit")?;
    let mu = comps(&d.multiplication, "multiplication")?;
    Ok(Fin2Monad::new(d.name.clone(), base, t, eta, mu)?)
}

fn monad_doc(m: &Fin2Monad) -> TwoMonadDoc {
    let c = m.base().ambient();
    let comps = |t: &[usize]| (0..c.n0()).map(|x| (c.obj_name(x).to_string(), c.name1(t[x]).to_string())).collect();
    TwoMonadDoc { name: m.name.clone(), base: two_category_doc(c), functor: two_maps(m.functor()), unit: comps(m.eta_table()), multiplication: comps(m.mu_table()) }
}

fn filler_from(d: &FillerProblemDoc) -> Result<FillerSpec, ParseError> {
    let a = Arc::new(fcategory_from(&d.a)?);
    let b = Arc::new(fcategory_from(&d.b)?);
    let c = Arc::new(fcategory_from(&d.c)?);
    let (a_tau, _) = crate::f2cat::tight_inclusion(&a);
    let r = ffunctor_from(&a_tau, &b, &d.r)?;
    let s = ffunctor_from(&a, &c, &d.s)?;
    let h = ffunctor_from(&b, &c, &d.h)?;
    Ok(FillerSpec { variance: d.variance, a, a_tau, b, c, r, s, h })
}

impl FillerSpec {
    pub fn from_problem(p: &crate::monadfiller::FillerProblem) -> FillerSpec {
        FillerSpec {
            variance: p.variance,
            a: p.a.clone(),
            a_tau: p.a_tau.clone(),
            b: p.r.cod().clone(),
            c: p.s.cod().clone(),
            r: p.r.clone(),
            s: p.s.clone(),
            h: p.h.clone(),
        }
    }
}
