use std::collections::HashMap;

use crate::check::Validation;
use crate::fincat::category::toggle_suffix;
use crate::fincat::StructureError;

/// A 1-cell record.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell1 {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A 2-cell record; `src` and `tgt` are 1-cells with common endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell2 {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Named tables for [`Fin2Category::from_tables`].
#[derive(Clone, Debug, Default)]
pub struct TwoTables {
    pub objects: Vec<String>,
    pub cells1: Vec<(String, String, String)>,
    pub identities1: Vec<(String, String)>,
    pub comp1: Vec<(String, String, String)>,
    pub cells2: Vec<(String, String, String)>,
    pub identities2: Vec<(String, String)>,
    pub vcomp: Vec<(String, String, String)>,
    pub lwhisk: Vec<(String, String, String)>,
    pub rwhisk: Vec<(String, String, String)>,
}

/// A finite strict 2-category presented by tables.
///
/// Horizontal structure is carried by the whiskering tables: `lwhisk[h][α]`
/// is `h·α` and `rwhisk[α][k]` is `α·k`. Horizontal composites are derived
/// from these, and interchange is checked by [`validate_2category`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fin2Category {
    name: String,
    objects: Vec<String>,
    cells1: Vec<Cell1>,
    id1: Vec<usize>,
    comp1: Vec<Option<usize>>,
    cells2: Vec<Cell2>,
    id2: Vec<usize>,
    vcomp: Vec<Option<usize>>,
    lwhisk: Vec<Option<usize>>,
    rwhisk: Vec<Option<usize>>,
    hom1: Vec<Vec<usize>>,
    hom2: HashMap<(usize, usize), Vec<usize>>,
    into1: Vec<Vec<usize>>,
    from1: Vec<Vec<usize>>,
    into2: Vec<Vec<usize>>,
}

/// Composition rules consulted by [`Fin2Category::from_fn`].
pub struct TwoRules<'a> {
    pub comp1: &'a dyn Fn(usize, usize) -> usize,
    pub vcomp: &'a dyn Fn(usize, usize) -> usize,
    pub lwhisk: &'a dyn Fn(usize, usize) -> usize,
    pub rwhisk: &'a dyn Fn(usize, usize) -> usize,
}

fn names_index(names: impl Iterator<Item = String>, location: &str) -> Result<HashMap<String, usize>, StructureError> {
    let mut map = HashMap::new();
    for (i, n) in names.enumerate() {
        if map.insert(n.clone(), i).is_some() {
            return Err(StructureError::Duplicate { name: n, location: location.into() });
        }
    }
    Ok(map)
}

fn find(map: &HashMap<String, usize>, name: &str, location: &str) -> Result<usize, StructureError> {
    map.get(name).copied().ok_or_else(|| StructureError::dangling(name, location))
}

impl Fin2Category {
    pub fn from_tables(name: impl Into<String>, t: &TwoTables) -> Result<Self, StructureError> {
        let name = name.into();
        let ob = names_index(t.objects.iter().cloned(), "objects")?;
        let c1 = names_index(t.cells1.iter().map(|c| c.0.clone()), "1-cells")?;
        let c2 = names_index(t.cells2.iter().map(|c| c.0.clone()), "2-cells")?;
        let cells1 = t
            .cells1
            .iter()
            .map(|(n, s, d)| Ok(Cell1 { name: n.clone(), src: find(&ob, s, &format!("source of 1-cell `{n}`"))?, tgt: find(&ob, d, &format!("target of 1-cell `{n}`"))? }))
            .collect::<Result<Vec<_>, StructureError>>()?;
        let cells2 = t
            .cells2
            .iter()
            .map(|(n, s, d)| Ok(Cell2 { name: n.clone(), src: find(&c1, s, &format!("source of 2-cell `{n}`"))?, tgt: find(&c1, d, &format!("target of 2-cell `{n}`"))? }))
            .collect::<Result<Vec<_>, StructureError>>()?;
        let mut id1 = vec![None; t.objects.len()];
        for (o, c) in &t.identities1 {
            id1[find(&ob, o, "1-cell identities")?] = Some(find(&c1, c, "1-cell identities")?);
        }
        let id1 = id1
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| StructureError::missing("1-cell identities", format!("object `{}`", t.objects[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut id2 = vec![None; cells1.len()];
        for (f, a) in &t.identities2 {
            id2[find(&c1, f, "2-cell identities")?] = Some(find(&c2, a, "2-cell identities")?);
        }
        let id2 = id2
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| StructureError::missing("2-cell identities", format!("1-cell `{}`", cells1[i].name))))
            .collect::<Result<Vec<_>, _>>()?;
        let (n1, n2) = (cells1.len(), cells2.len());
        let fill = |entries: &[(String, String, String)], left: &HashMap<String, usize>, right: &HashMap<String, usize>, out: &HashMap<String, usize>, stride: usize, size: usize, location: &str| {
            let mut table = vec![None; size];
            for (a, b, r) in entries {
                let i = find(left, a, location)? * stride + find(right, b, location)?;
                if table[i].replace(find(out, r, location)?).is_some() {
                    return Err(StructureError::Duplicate { name: format!("({a}, {b})"), location: location.into() });
                }
            }
            Ok(table)
        };
        let comp1 = fill(&t.comp1, &c1, &c1, &c1, n1, n1 * n1, "1-cell composition")?;
        let vcomp = fill(&t.vcomp, &c2, &c2, &c2, n2, n2 * n2, "vertical composition")?;
        let lwhisk = fill(&t.lwhisk, &c1, &c2, &c2, n2, n1 * n2, "left whiskering")?;
        let rwhisk = fill(&t.rwhisk, &c2, &c1, &c2, n1, n2 * n1, "right whiskering")?;
        let c = Self::assemble(name, t.objects.clone(), cells1, id1, comp1, cells2, id2, vcomp, lwhisk, rwhisk);
        c.check_domains()?;
        Ok(c)
    }

    /// Builds a 2-category from index data and composition rules evaluated on
    /// every composable pair.
    pub fn from_fn(name: impl Into<String>, objects: Vec<String>, cells1: Vec<Cell1>, id1: Vec<usize>, cells2: Vec<Cell2>, id2: Vec<usize>, rules: TwoRules<'_>) -> Self {
        let (n1, n2) = (cells1.len(), cells2.len());
        let mut comp1 = vec![None; n1 * n1];
        for g in 0..n1 {
            for f in 0..n1 {
                if cells1[g].src == cells1[f].tgt {
                    comp1[g * n1 + f] = Some((rules.comp1)(g, f));
                }
            }
        }
        let mut vcomp = vec![None; n2 * n2];
        for b in 0..n2 {
            for a in 0..n2 {
                if cells2[b].src == cells2[a].tgt {
                    vcomp[b * n2 + a] = Some((rules.vcomp)(b, a));
                }
            }
        }
        let mut lwhisk = vec![None; n1 * n2];
        let mut rwhisk = vec![None; n2 * n1];
        for h in 0..n1 {
            for a in 0..n2 {
                let f = cells2[a].src;
                if cells1[h].src == cells1[f].tgt {
                    lwhisk[h * n2 + a] = Some((rules.lwhisk)(h, a));
                }
                if cells1[h].tgt == cells1[f].src {
                    rwhisk[a * n1 + h] = Some((rules.rwhisk)(a, h));
                }
            }
        }
        Self::assemble(name.into(), objects, cells1, id1, comp1, cells2, id2, vcomp, lwhisk, rwhisk)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        name: String,
        objects: Vec<String>,
        cells1: Vec<Cell1>,
        id1: Vec<usize>,
        comp1: Vec<Option<usize>>,
        cells2: Vec<Cell2>,
        id2: Vec<usize>,
        vcomp: Vec<Option<usize>>,
        lwhisk: Vec<Option<usize>>,
        rwhisk: Vec<Option<usize>>,
    ) -> Self {
        let k = objects.len();
        let mut hom1 = vec![Vec::new(); k * k];
        for (i, c) in cells1.iter().enumerate() {
            if c.src < k && c.tgt < k {
                hom1[c.src * k + c.tgt].push(i);
            }
        }
        let mut into1 = vec![Vec::new(); k];
        let mut from1 = vec![Vec::new(); k];
        for (i, c) in cells1.iter().enumerate() {
            if c.src < k && c.tgt < k {
                into1[c.tgt].push(i);
                from1[c.src].push(i);
            }
        }
        let mut hom2: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut into2 = vec![Vec::new(); cells1.len()];
        for (i, c) in cells2.iter().enumerate() {
            hom2.entry((c.src, c.tgt)).or_default().push(i);
            if c.tgt < cells1.len() {
                into2[c.tgt].push(i);
            }
        }
        Fin2Category { name, objects, cells1, id1, comp1, cells2, id2, vcomp, lwhisk, rwhisk, hom1, hom2, into1, from1, into2 }
    }

    /// Every composable pair has an entry and no other pair does.
    fn check_domains(&self) -> Result<(), StructureError> {
        let (n1, n2) = (self.cells1.len(), self.cells2.len());
        for c in &self.cells2 {
            if self.cells1[c.src].src != self.cells1[c.tgt].src || self.cells1[c.src].tgt != self.cells1[c.tgt].tgt {
                return Err(StructureError::OutOfDomain { location: "2-cells".into(), detail: format!("frame of `{}` is not a parallel pair", c.name) });
            }
        }
        let check = |has: bool, ok: bool, what: &str, pair: String| -> Result<(), StructureError> {
            match (has, ok) {
                (false, true) => Err(StructureError::missing(what, format!("no entry for {pair}"))),
                (true, false) => Err(StructureError::OutOfDomain { location: what.into(), detail: format!("{pair} is not composable") }),
                _ => Ok(()),
            }
        };
        for g in 0..n1 {
            for f in 0..n1 {
                let ok = self.cells1[g].src == self.cells1[f].tgt;
                check(self.comp1[g * n1 + f].is_some(), ok, "1-cell composition", format!("({}, {})", self.cells1[g].name, self.cells1[f].name))?;
            }
        }
        for b in 0..n2 {
            for a in 0..n2 {
                let ok = self.cells2[b].src == self.cells2[a].tgt;
                check(self.vcomp[b * n2 + a].is_some(), ok, "vertical composition", format!("({}, {})", self.cells2[b].name, self.cells2[a].name))?;
            }
        }
        for h in 0..n1 {
            for a in 0..n2 {
                let f = self.cells2[a].src;
                let pair = format!("({}, {})", self.cells1[h].name, self.cells2[a].name);
                check(self.lwhisk[h * n2 + a].is_some(), self.cells1[h].src == self.cells1[f].tgt, "left whiskering", pair.clone())?;
                check(self.rwhisk[a * n1 + h].is_some(), self.cells1[h].tgt == self.cells1[f].src, "right whiskering", pair)?;
            }
        }
        Ok(())
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

    pub fn cells1(&self) -> &[Cell1] {
        &self.cells1
    }

    pub fn cells2(&self) -> &[Cell2] {
        &self.cells2
    }

    pub fn n0(&self) -> usize {
        self.objects.len()
    }

    pub fn n1(&self) -> usize {
        self.cells1.len()
    }

    pub fn n2(&self) -> usize {
        self.cells2.len()
    }

    pub fn src1(&self, f: usize) -> usize {
        self.cells1[f].src
    }

    pub fn tgt1(&self, f: usize) -> usize {
        self.cells1[f].tgt
    }

    pub fn src2(&self, a: usize) -> usize {
        self.cells2[a].src
    }

    pub fn tgt2(&self, a: usize) -> usize {
        self.cells2[a].tgt
    }

    pub fn id1(&self, x: usize) -> usize {
        self.id1[x]
    }

    pub fn id2(&self, f: usize) -> usize {
        self.id2[f]
    }

    pub fn identities1(&self) -> &[usize] {
        &self.id1
    }

    pub fn identities2(&self) -> &[usize] {
        &self.id2
    }

    pub fn obj_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn name1(&self, f: usize) -> &str {
        &self.cells1[f].name
    }

    pub fn name2(&self, a: usize) -> &str {
        &self.cells2[a].name
    }

    pub fn is_id1(&self, f: usize) -> bool {
        self.id1[self.cells1[f].src] == f
    }

    pub fn is_id2(&self, a: usize) -> bool {
        self.id2[self.cells2[a].src] == a
    }

    pub fn try_comp1(&self, g: usize, f: usize) -> Option<usize> {
        self.comp1[g * self.cells1.len() + f]
    }

    /// `g ∘ f`; panics if the pair is not composable.
    pub fn comp1(&self, g: usize, f: usize) -> usize {
        self.try_comp1(g, f).unwrap_or_else(|| panic!("{}: 1-cells `{}` ∘ `{}` not composable", self.name, self.name1(g), self.name1(f)))
    }

    /// Composite of a path listed outermost first.
    pub fn comp1_all(&self, path: &[usize]) -> usize {
        let (&last, rest) = path.split_last().expect("non-empty path");
        rest.iter().rev().fold(last, |acc, &g| self.comp1(g, acc))
    }

    pub fn try_vcomp(&self, b: usize, a: usize) -> Option<usize> {
        self.vcomp[b * self.cells2.len() + a]
    }

    pub fn vcomp(&self, b: usize, a: usize) -> usize {
        self.try_vcomp(b, a).unwrap_or_else(|| panic!("{}: 2-cells `{}` ∘ `{}` not composable", self.name, self.name2(b), self.name2(a)))
    }

    pub fn try_lwhisk(&self, h: usize, a: usize) -> Option<usize> {
        self.lwhisk[h * self.cells2.len() + a]
    }

    /// `h·α`.
    pub fn lwhisk(&self, h: usize, a: usize) -> usize {
        self.try_lwhisk(h, a).unwrap_or_else(|| panic!("{}: cannot whisker `{}` by `{}` on the left", self.name, self.name2(a), self.name1(h)))
    }

    pub fn try_rwhisk(&self, a: usize, k: usize) -> Option<usize> {
        self.rwhisk[a * self.cells1.len() + k]
    }

    /// `α·k`.
    pub fn rwhisk(&self, a: usize, k: usize) -> usize {
        self.try_rwhisk(a, k).unwrap_or_else(|| panic!("{}: cannot whisker `{}` by `{}` on the right", self.name, self.name2(a), self.name1(k)))
    }

    /// `h·α·k`.
    pub fn whisk(&self, h: usize, a: usize, k: usize) -> usize {
        self.lwhisk(h, self.rwhisk(a, k))
    }

    /// Horizontal composite `β * α` for `α: f ⇒ f'` and `β: g ⇒ g'` with `g` after `f`.
    pub fn hcomp(&self, b: usize, a: usize) -> usize {
        let (g, f2) = (self.src2(b), self.tgt2(a));
        self.vcomp(self.rwhisk(b, f2), self.lwhisk(g, a))
    }

    pub fn hom1(&self, x: usize, y: usize) -> &[usize] {
        &self.hom1[x * self.objects.len() + y]
    }

    pub fn hom2(&self, f: usize, g: usize) -> &[usize] {
        self.hom2.get(&(f, g)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Two-sided vertical inverse.
    pub fn inverse2(&self, a: usize) -> Option<usize> {
        let (f, g) = (self.src2(a), self.tgt2(a));
        self.hom2(g, f).iter().copied().find(|&b| self.vcomp(b, a) == self.id2(f) && self.vcomp(a, b) == self.id2(g))
    }

    pub fn is_invertible2(&self, a: usize) -> bool {
        self.inverse2(a).is_some()
    }

    /// Whether every hom-category is discrete.
    pub fn is_locally_discrete(&self) -> bool {
        (0..self.n2()).all(|a| self.is_id2(a))
    }

    /// Whether the only invertible 2-cells are identities.
    pub fn is_locally_iso_free(&self) -> bool {
        (0..self.n2()).all(|a| self.is_id2(a) || !self.is_invertible2(a))
    }

    pub fn index1(&self, name: &str) -> Option<usize> {
        self.cells1.iter().position(|c| c.name == name)
    }

    pub fn index2(&self, name: &str) -> Option<usize> {
        self.cells2.iter().position(|c| c.name == name)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    /// Reverses 2-cells. The name toggles a `^co` suffix, and applying this
    /// twice gives back the original.
    pub fn co_dual(&self) -> Fin2Category {
        let cells2 = self.cells2.iter().map(|c| Cell2 { name: c.name.clone(), src: c.tgt, tgt: c.src }).collect();
        let n2 = self.cells2.len();
        let mut vcomp = vec![None; n2 * n2];
        for b in 0..n2 {
            for a in 0..n2 {
                vcomp[b * n2 + a] = self.vcomp[a * n2 + b];
            }
        }
        Self::assemble(
            toggle_suffix(&self.name, "^co"),
            self.objects.clone(),
            self.cells1.clone(),
            self.id1.clone(),
            self.comp1.clone(),
            cells2,
            self.id2.clone(),
            vcomp,
            self.lwhisk.clone(),
            self.rwhisk.clone(),
        )
    }

    /// Named composition triples, for serialization.
    pub fn tables(&self) -> TwoTables {
        let n1 = self.n1();
        let n2 = self.n2();
        let mut t = TwoTables {
            objects: self.objects.clone(),
            cells1: self.cells1.iter().map(|c| (c.name.clone(), self.objects[c.src].clone(), self.objects[c.tgt].clone())).collect(),
            identities1: self.id1.iter().enumerate().map(|(x, &f)| (self.objects[x].clone(), self.name1(f).to_string())).collect(),
            cells2: self.cells2.iter().map(|c| (c.name.clone(), self.name1(c.src).to_string(), self.name1(c.tgt).to_string())).collect(),
            identities2: self.id2.iter().enumerate().map(|(f, &a)| (self.name1(f).to_string(), self.name2(a).to_string())).collect(),
            ..TwoTables::default()
        };
        for g in 0..n1 {
            for f in 0..n1 {
                if let Some(r) = self.try_comp1(g, f) {
                    t.comp1.push((self.name1(g).into(), self.name1(f).into(), self.name1(r).into()));
                }
            }
        }
        for b in 0..n2 {
            for a in 0..n2 {
                if let Some(r) = self.try_vcomp(b, a) {
                    t.vcomp.push((self.name2(b).into(), self.name2(a).into(), self.name2(r).into()));
                }
            }
        }
        for h in 0..n1 {
            for a in 0..n2 {
                if let Some(r) = self.try_lwhisk(h, a) {
                    t.lwhisk.push((self.name1(h).into(), self.name2(a).into(), self.name2(r).into()));
                }
            }
        }
        for a in 0..n2 {
            for k in 0..n1 {
                if let Some(r) = self.try_rwhisk(a, k) {
                    t.rwhisk.push((self.name2(a).into(), self.name1(k).into(), self.name2(r).into()));
                }
            }
        }
        t
    }

    /// Replaces one table entry; used to build corrupted fixtures.
    pub fn with_entry(&self, table: TableKind, i: usize, value: usize) -> Fin2Category {
        let mut c = self.clone();
        let slot = match table {
            TableKind::Comp1 => &mut c.comp1[i],
            TableKind::VComp => &mut c.vcomp[i],
            TableKind::LWhisk => &mut c.lwhisk[i],
            TableKind::RWhisk => &mut c.rwhisk[i],
        };
        *slot = Some(value);
        c
    }
}

/// Selector for [`Fin2Category::with_entry`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Comp1,
    VComp,
    LWhisk,
    RWhisk,
}

/// Checks every axiom of a strict 2-category, interchange included.
pub fn validate_2category(c: &Fin2Category) -> Validation {
    let mut v = Validation::new(format!("2-category {}", c.name));
    let (n1, n2) = (c.n1(), c.n2());
    let n1s = |f: usize| c.name1(f).to_string();
    let n2s = |a: usize| c.name2(a).to_string();
    for (x, &f) in c.id1.iter().enumerate() {
        v.require(c.src1(f) == x && c.tgt1(f) == x, "1-identity-boundary", || [c.obj_name(x).to_string()]);
    }
    for (f, &a) in c.id2.iter().enumerate() {
        v.require(c.src2(a) == f && c.tgt2(a) == f, "2-identity-boundary", || [n1s(f)]);
    }
    for g in 0..n1 {
        for f in 0..n1 {
            if let Some(gf) = c.try_comp1(g, f) {
                v.require(c.src1(gf) == c.src1(f) && c.tgt1(gf) == c.tgt1(g), "1-composite-boundary", || [n1s(g), n1s(f)]);
            }
        }
    }
    if !v.is_ok() {
        return v;
    }
    for f in 0..n1 {
        v.require(c.comp1(c.id1(c.tgt1(f)), f) == f && c.comp1(f, c.id1(c.src1(f))) == f, "1-unit", || [n1s(f)]);
    }
    for h in 0..n1 {
        for g in 0..n1 {
            let Some(hg) = c.try_comp1(h, g) else { continue };
            for &f in c.hom1_into(c.src1(g)) {
                v.require(c.comp1(hg, f) == c.comp1(h, c.comp1(g, f)), "1-associativity", || [n1s(h), n1s(g), n1s(f)]);
            }
        }
    }
    for b in 0..n2 {
        for a in 0..n2 {
            if let Some(ba) = c.try_vcomp(b, a) {
                v.require(c.src2(ba) == c.src2(a) && c.tgt2(ba) == c.tgt2(b), "vertical-composite-boundary", || [n2s(b), n2s(a)]);
            }
        }
    }
    for h in 0..n1 {
        for a in 0..n2 {
            if let Some(ha) = c.try_lwhisk(h, a) {
                let ok = c.src2(ha) == c.comp1(h, c.src2(a)) && c.tgt2(ha) == c.comp1(h, c.tgt2(a));
                v.require(ok, "left-whisker-boundary", || [n1s(h), n2s(a)]);
            }
            if let Some(ak) = c.try_rwhisk(a, h) {
                let ok = c.src2(ak) == c.comp1(c.src2(a), h) && c.tgt2(ak) == c.comp1(c.tgt2(a), h);
                v.require(ok, "right-whisker-boundary", || [n2s(a), n1s(h)]);
            }
        }
    }
    if !v.is_ok() {
        return v;
    }
    for a in 0..n2 {
        v.require(c.vcomp(c.id2(c.tgt2(a)), a) == a && c.vcomp(a, c.id2(c.src2(a))) == a, "2-unit", || [n2s(a)]);
        let x = c.src1(c.src2(a));
        let y = c.tgt1(c.src2(a));
        v.require(c.lwhisk(c.id1(y), a) == a, "left-whisker-unit", || [n2s(a)]);
        v.require(c.rwhisk(a, c.id1(x)) == a, "right-whisker-unit", || [n2s(a)]);
    }
    for cc in 0..n2 {
        for b in 0..n2 {
            let Some(cb) = c.try_vcomp(cc, b) else { continue };
            for a in c.hom2_into(c.src2(b)) {
                v.require(c.vcomp(cb, a) == c.vcomp(cc, c.vcomp(b, a)), "vertical-associativity", || [n2s(cc), n2s(b), n2s(a)]);
            }
        }
    }
    for h in 0..n1 {
        for f in 0..n1 {
            if c.try_comp1(h, f).is_none() {
                continue;
            }
            v.require(c.lwhisk(h, c.id2(f)) == c.id2(c.comp1(h, f)), "left-whisker-identity", || [n1s(h), n1s(f)]);
            v.require(c.rwhisk(c.id2(h), f) == c.id2(c.comp1(h, f)), "right-whisker-identity", || [n1s(h), n1s(f)]);
        }
    }
    for b in 0..n2 {
        for a in 0..n2 {
            let Some(ba) = c.try_vcomp(b, a) else { continue };
            let (x, y) = (c.src1(c.src2(a)), c.tgt1(c.src2(a)));
            for &h in c.hom1_from(y) {
                v.require(c.lwhisk(h, ba) == c.vcomp(c.lwhisk(h, b), c.lwhisk(h, a)), "left-whisker-vertical", || [n1s(h), n2s(b), n2s(a)]);
            }
            for &k in c.hom1_into(x) {
                v.require(c.rwhisk(ba, k) == c.vcomp(c.rwhisk(b, k), c.rwhisk(a, k)), "right-whisker-vertical", || [n2s(b), n2s(a), n1s(k)]);
            }
        }
    }
    for a in 0..n2 {
        let (x, y) = (c.src1(c.src2(a)), c.tgt1(c.src2(a)));
        for &h in c.hom1_from(y) {
            for &h2 in c.hom1_from(c.tgt1(h)) {
                v.require(c.lwhisk(c.comp1(h2, h), a) == c.lwhisk(h2, c.lwhisk(h, a)), "left-whisker-composite", || [n1s(h2), n1s(h), n2s(a)]);
            }
            for &k in c.hom1_into(x) {
                v.require(c.rwhisk(c.lwhisk(h, a), k) == c.lwhisk(h, c.rwhisk(a, k)), "whisker-associativity", || [n1s(h), n2s(a), n1s(k)]);
            }
        }
        for &k in c.hom1_into(x) {
            for &k2 in c.hom1_into(c.src1(k)) {
                v.require(c.rwhisk(a, c.comp1(k, k2)) == c.rwhisk(c.rwhisk(a, k), k2), "right-whisker-composite", || [n2s(a), n1s(k), n1s(k2)]);
            }
        }
    }
    for a in 0..n2 {
        let y = c.tgt1(c.src2(a));
        for b in 0..n2 {
            if c.src1(c.src2(b)) != y {
                continue;
            }
            let (f, f2) = (c.src2(a), c.tgt2(a));
            let (g, g2) = (c.src2(b), c.tgt2(b));
            let one = c.vcomp(c.rwhisk(b, f2), c.lwhisk(g, a));
            let two = c.vcomp(c.lwhisk(g2, a), c.rwhisk(b, f));
            v.require(one == two, "interchange", || [n2s(b), n2s(a)]);
        }
    }
    v
}

impl Fin2Category {
    /// 1-cells ending at `x`.
    pub fn hom1_into(&self, x: usize) -> &[usize] {
        &self.into1[x]
    }

    /// 1-cells starting at `x`.
    pub fn hom1_from(&self, x: usize) -> &[usize] {
        &self.from1[x]
    }

    /// 2-cells whose target is the 1-cell `f`.
    pub fn hom2_into(&self, f: usize) -> Vec<usize> {
        self.into2[f].clone()
    }
}
