//! Pasting operations shared by every 2-categorical world in the crate, and
//! the reflection and mate calculus written once against them.
//!
//! A w-reflection `(1, f ⊣ g, η)` has tight left adjoint `f`, identity counit
//! (so `f·g = 1`) and unit `η: 1 ⇒ g·f` with `f·η = 1` and `η·g = 1`.
//! For a square `(r, s): f₁ → f₂` with `f₂·r = s·f₁` between two such
//! reflections the mate is `η₂·r·g₁: r·g₁ ⇒ g₂·s`.

use std::fmt::Debug;

use crate::check::Validation;
use crate::variance::Variance;
use crate::{Error, Result};

/// The operations of a strict 2-category with a tight/loose marking.
pub trait TwoCells {
    type Obj: Clone + PartialEq + Debug;
    type One: Clone + PartialEq + Debug;
    type Two: Clone + PartialEq + Debug;

    fn src1(&self, f: &Self::One) -> Self::Obj;
    fn tgt1(&self, f: &Self::One) -> Self::Obj;
    fn id1(&self, x: &Self::Obj) -> Self::One;
    fn comp1(&self, g: &Self::One, f: &Self::One) -> Result<Self::One>;
    fn src2(&self, a: &Self::Two) -> Self::One;
    fn tgt2(&self, a: &Self::Two) -> Self::One;
    fn id2(&self, f: &Self::One) -> Self::Two;
    fn vcomp(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two>;
    /// `h·α`.
    fn lwhisk(&self, h: &Self::One, a: &Self::Two) -> Result<Self::Two>;
    /// `α·k`.
    fn rwhisk(&self, a: &Self::Two, k: &Self::One) -> Result<Self::Two>;
    fn objects(&self) -> Result<Vec<Self::Obj>>;
    fn hom1(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Vec<Self::One>>;
    fn hom2(&self, f: &Self::One, g: &Self::One) -> Result<Vec<Self::Two>>;

    fn is_tight(&self, _f: &Self::One) -> bool {
        true
    }

    fn show0(&self, x: &Self::Obj) -> String;
    fn show1(&self, f: &Self::One) -> String;
    fn show2(&self, a: &Self::Two) -> String;

    fn is_id2(&self, a: &Self::Two) -> bool {
        let f = self.src2(a);
        self.tgt2(a) == f && *a == self.id2(&f)
    }

    fn inverse2(&self, a: &Self::Two) -> Result<Option<Self::Two>> {
        let (f, g) = (self.src2(a), self.tgt2(a));
        for b in self.hom2(&g, &f)? {
            if self.is_id2(&self.vcomp(&b, a)?) && self.is_id2(&self.vcomp(a, &b)?) {
                return Ok(Some(b));
            }
        }
        Ok(None)
    }

    /// `h·α·k`.
    fn whisk(&self, h: &Self::One, a: &Self::Two, k: &Self::One) -> Result<Self::Two> {
        self.lwhisk(h, &self.rwhisk(a, k)?)
    }
}

/// The same world with 2-cells reversed.
#[derive(Clone, Copy, Debug)]
pub struct Co<'a, C>(pub &'a C);

impl<C: TwoCells> TwoCells for Co<'_, C> {
    type Obj = C::Obj;
    type One = C::One;
    type Two = C::Two;

    fn src1(&self, f: &C::One) -> C::Obj {
        self.0.src1(f)
    }
    fn tgt1(&self, f: &C::One) -> C::Obj {
        self.0.tgt1(f)
    }
    fn id1(&self, x: &C::Obj) -> C::One {
        self.0.id1(x)
    }
    fn comp1(&self, g: &C::One, f: &C::One) -> Result<C::One> {
        self.0.comp1(g, f)
    }
    fn src2(&self, a: &C::Two) -> C::One {
        self.0.tgt2(a)
    }
    fn tgt2(&self, a: &C::Two) -> C::One {
        self.0.src2(a)
    }
    fn id2(&self, f: &C::One) -> C::Two {
        self.0.id2(f)
    }
    fn vcomp(&self, b: &C::Two, a: &C::Two) -> Result<C::Two> {
        self.0.vcomp(a, b)
    }
    fn lwhisk(&self, h: &C::One, a: &C::Two) -> Result<C::Two> {
        self.0.lwhisk(h, a)
    }
    fn rwhisk(&self, a: &C::Two, k: &C::One) -> Result<C::Two> {
        self.0.rwhisk(a, k)
    }
    fn objects(&self) -> Result<Vec<C::Obj>> {
        self.0.objects()
    }
    fn hom1(&self, x: &C::Obj, y: &C::Obj) -> Result<Vec<C::One>> {
        self.0.hom1(x, y)
    }
    fn hom2(&self, f: &C::One, g: &C::One) -> Result<Vec<C::Two>> {
        self.0.hom2(g, f)
    }
    fn is_tight(&self, f: &C::One) -> bool {
        self.0.is_tight(f)
    }
    fn show0(&self, x: &C::Obj) -> String {
        self.0.show0(x)
    }
    fn show1(&self, f: &C::One) -> String {
        self.0.show1(f)
    }
    fn show2(&self, a: &C::Two) -> String {
        self.0.show2(a)
    }
    fn inverse2(&self, a: &C::Two) -> Result<Option<C::Two>> {
        self.0.inverse2(a)
    }
}

/// Reflection data `(f, g, η)`; the variance says how to read it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection<O, T> {
    pub variance: Variance,
    pub f: O,
    pub g: O,
    pub eta: T,
}

impl<O, T> Reflection<O, T> {
    pub fn new(variance: Variance, f: O, g: O, eta: T) -> Self {
        Reflection { variance, f, g, eta }
    }
}

/// Checks the lax-style conditions: `f` tight, `f·g = 1`, `η: 1 ⇒ g·f`,
/// `f·η = 1` and `η·g = 1`, plus invertibility when `invertible` is set.
fn check_identity_counit<C: TwoCells>(c: &C, r: &Reflection<C::One, C::Two>, invertible: bool) -> Result<Validation> {
    let mut v = Validation::new(format!("reflection {} ⊣ {}", c.show1(&r.f), c.show1(&r.g)));
    if !c.is_tight(&r.f) {
        return Err(Error::Orientation(format!("left adjoint `{}` of a reflection must be tight", c.show1(&r.f))));
    }
    let (a, b) = (c.src1(&r.f), c.tgt1(&r.f));
    if c.src1(&r.g) != b || c.tgt1(&r.g) != a {
        v.fail("adjoint-shapes", [c.show1(&r.f), c.show1(&r.g)]);
        return Ok(v);
    }
    let fg = c.comp1(&r.f, &r.g)?;
    v.require(fg == c.id1(&b), "identity-counit", || [c.show1(&r.f), c.show1(&r.g)]);
    let gf = c.comp1(&r.g, &r.f)?;
    let frame_ok = c.src2(&r.eta) == c.id1(&a) && c.tgt2(&r.eta) == gf;
    v.require(frame_ok, "unit-frame", || [c.show2(&r.eta)]);
    if !v.is_ok() {
        return Ok(v);
    }
    v.require(c.is_id2(&c.lwhisk(&r.f, &r.eta)?), "triangle f·η", || [c.show2(&r.eta)]);
    v.require(c.is_id2(&c.rwhisk(&r.eta, &r.g)?), "triangle η·g", || [c.show2(&r.eta)]);
    if invertible {
        v.require(c.inverse2(&r.eta)?.is_some(), "invertible-unit", || [c.show2(&r.eta)]);
    }
    Ok(v)
}

/// Every 2-cell `θ: 1 ⇒ g·f` satisfying both triangle identities.
fn units_satisfying_triangles<C: TwoCells>(c: &C, r: &Reflection<C::One, C::Two>) -> Result<Vec<C::Two>> {
    let a = c.src1(&r.f);
    let gf = c.comp1(&r.g, &r.f)?;
    let mut out = Vec::new();
    for theta in c.hom2(&c.id1(&a), &gf)? {
        if c.is_id2(&c.lwhisk(&r.f, &theta)?) && c.is_id2(&c.rwhisk(&theta, &r.g)?) {
            out.push(theta);
        }
    }
    Ok(out)
}

/// Validates a w-reflection and certifies that its unit is the only 2-cell
/// satisfying the triangle identities. The colax case is checked in the
/// reversed world, where its data form an l-reflection.
pub fn validate_w_reflection<C: TwoCells>(c: &C, r: &Reflection<C::One, C::Two>) -> Result<Validation> {
    match r.variance {
        Variance::Colax => validate_lax_or_pseudo(&Co(c), &lax_view(r), false),
        Variance::Strict => Err(Error::precondition("reflections come in variances l, p and c")),
        w => validate_lax_or_pseudo(c, r, w == Variance::Pseudo),
    }
}

fn validate_lax_or_pseudo<C: TwoCells>(c: &C, r: &Reflection<C::One, C::Two>, invertible: bool) -> Result<Validation> {
    let mut v = check_identity_counit(c, r, invertible)?;
    if v.is_ok() {
        let units = units_satisfying_triangles(c, r)?;
        v.require(units.len() == 1 && units[0] == r.eta, "unit-uniqueness", || units.iter().map(|u| c.show2(u)).collect::<Vec<_>>());
    }
    Ok(v)
}

/// The mate `η₂·r·g₁: r·g₁ ⇒ g₂·s` of a commuting square `(r, s): f₁ → f₂`.
pub fn mate_of_square<C: TwoCells>(
    c: &C,
    r: &C::One,
    s: &C::One,
    refl1: &Reflection<C::One, C::Two>,
    refl2: &Reflection<C::One, C::Two>,
) -> Result<C::Two> {
    if refl1.variance == Variance::Colax {
        return lax_mate(&Co(c), r, s, &lax_view(refl1), &lax_view(refl2));
    }
    lax_mate(c, r, s, refl1, refl2)
}

fn lax_mate<C: TwoCells>(c: &C, r: &C::One, s: &C::One, refl1: &Reflection<C::One, C::Two>, refl2: &Reflection<C::One, C::Two>) -> Result<C::Two> {
    square_commutes(c, r, s, refl1, refl2)?;
    let rg1 = c.comp1(r, &refl1.g)?;
    let m = c.rwhisk(&refl2.eta, &rg1)?;
    let expected = c.comp1(&refl2.g, s)?;
    if c.tgt2(&m) != expected {
        return Err(Error::boundary(format!("mate target {} differs from g₂·s = {}", c.show1(&c.tgt2(&m)), c.show1(&expected))));
    }
    Ok(m)
}

fn lax_view<O: Clone, T: Clone>(r: &Reflection<O, T>) -> Reflection<O, T> {
    Reflection::new(Variance::Lax, r.f.clone(), r.g.clone(), r.eta.clone())
}

fn square_commutes<C: TwoCells>(c: &C, r: &C::One, s: &C::One, refl1: &Reflection<C::One, C::Two>, refl2: &Reflection<C::One, C::Two>) -> Result<()> {
    let ok_shape = c.src1(r) == c.src1(&refl1.f) && c.tgt1(r) == c.src1(&refl2.f) && c.src1(s) == c.tgt1(&refl1.f) && c.tgt1(s) == c.tgt1(&refl2.f);
    if !ok_shape {
        return Err(Error::boundary(format!("square ({}, {}) does not connect the two reflections", c.show1(r), c.show1(s))));
    }
    if c.comp1(&refl2.f, r)? != c.comp1(s, &refl1.f)? {
        return Err(Error::boundary(format!("square ({}, {}) does not commute", c.show1(r), c.show1(s))));
    }
    Ok(())
}

/// Recovers the square's 2-cell from a mate `m: r·g₁ ⇒ g₂·s`:
/// `(f₂·m·f₁) ∘ (f₂·r·η₁)`, which is an identity exactly when the input came
/// from a commuting square.
pub fn unmate<C: TwoCells>(c: &C, m: &C::Two, r: &C::One, refl1: &Reflection<C::One, C::Two>, refl2: &Reflection<C::One, C::Two>) -> Result<C::Two> {
    if refl1.variance == Variance::Colax {
        return lax_unmate(&Co(c), m, r, &lax_view(refl1), &lax_view(refl2));
    }
    lax_unmate(c, m, r, refl1, refl2)
}

fn lax_unmate<C: TwoCells>(c: &C, m: &C::Two, r: &C::One, refl1: &Reflection<C::One, C::Two>, refl2: &Reflection<C::One, C::Two>) -> Result<C::Two> {
    let f2r = c.comp1(&refl2.f, r)?;
    let first = c.lwhisk(&f2r, &refl1.eta)?;
    let second = c.whisk(&refl2.f, m, &refl1.f)?;
    c.vcomp(&second, &first)
}

/// Both characterizations of a morphism of reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionMorphism<T> {
    /// Right adjoints commute and `r·η₁ = η₂·r`.
    pub by_units: bool,
    /// The mate is an identity.
    pub by_mate: bool,
    pub mate: T,
}

impl<T> ReflectionMorphism<T> {
    pub fn holds(&self) -> bool {
        self.by_units && self.by_mate
    }
}

/// Decides whether a commuting square is a morphism of reflections, computing
/// both characterizations and insisting that they agree.
pub fn is_reflection_morphism<C: TwoCells>(
    c: &C,
    r: &C::One,
    s: &C::One,
    refl1: &Reflection<C::One, C::Two>,
    refl2: &Reflection<C::One, C::Two>,
) -> Result<ReflectionMorphism<C::Two>> {
    if refl1.variance == Variance::Colax {
        return lax_reflection_morphism(&Co(c), r, s, &lax_view(refl1), &lax_view(refl2));
    }
    lax_reflection_morphism(c, r, s, refl1, refl2)
}

fn lax_reflection_morphism<C: TwoCells>(
    c: &C,
    r: &C::One,
    s: &C::One,
    refl1: &Reflection<C::One, C::Two>,
    refl2: &Reflection<C::One, C::Two>,
) -> Result<ReflectionMorphism<C::Two>> {
    let mate = lax_mate(c, r, s, refl1, refl2)?;
    let by_mate = c.is_id2(&mate);
    let rights_commute = c.comp1(&refl2.g, s)? == c.comp1(r, &refl1.g)?;
    let by_units = rights_commute && c.lwhisk(r, &refl1.eta)? == c.rwhisk(&refl2.eta, r)?;
    if by_units != by_mate {
        return Err(Error::consistency(format!(
            "the two characterizations of a reflection morphism disagree on ({}, {})",
            c.show1(r),
            c.show1(s)
        )));
    }
    Ok(ReflectionMorphism { by_units, by_mate, mate })
}

/// Every w-reflection whose left adjoint is the tight 1-cell `f`.
pub fn reflections_on<C: TwoCells>(c: &C, f: &C::One, w: Variance) -> Result<Vec<Reflection<C::One, C::Two>>> {
    match w {
        Variance::Colax => {
            let lax = lax_reflections_on(&Co(c), f, Variance::Lax)?;
            Ok(lax.into_iter().map(|r| Reflection::new(Variance::Colax, r.f, r.g, r.eta)).collect())
        }
        Variance::Strict => Err(Error::precondition("reflections come in variances l, p and c")),
        w => lax_reflections_on(c, f, w),
    }
}

fn lax_reflections_on<C: TwoCells>(c: &C, f: &C::One, w: Variance) -> Result<Vec<Reflection<C::One, C::Two>>> {
    if !c.is_tight(f) {
        return Ok(Vec::new());
    }
    let (a, b) = (c.src1(f), c.tgt1(f));
    let mut out = Vec::new();
    for g in c.hom1(&b, &a)? {
        if c.comp1(f, &g)? != c.id1(&b) {
            continue;
        }
        let gf = c.comp1(&g, f)?;
        for eta in c.hom2(&c.id1(&a), &gf)? {
            let r = Reflection::new(w, f.clone(), g.clone(), eta);
            if check_identity_counit(c, &r, w == Variance::Pseudo)?.is_ok() {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// A general adjunction `(ε, f ⊣ g, η)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction<O, T> {
    pub f: O,
    pub g: O,
    pub eta: T,
    pub eps: T,
}

/// Every adjunction with left adjoint `f`: all of them for `l`, adjoint
/// equivalences for `p`, and for `c` the adjunctions of the reversed world
/// (so `f` is a right adjoint there).
pub fn adjunctions_on<C: TwoCells>(c: &C, f: &C::One, w: Variance) -> Result<Vec<Adjunction<C::One, C::Two>>> {
    match w {
        Variance::Colax => lax_adjunctions_on(&Co(c), f, false),
        Variance::Strict => Err(Error::precondition("doctrinal adjunction comes in variances l, p and c")),
        _ => lax_adjunctions_on(c, f, w == Variance::Pseudo),
    }
}

fn lax_adjunctions_on<C: TwoCells>(c: &C, f: &C::One, invertible: bool) -> Result<Vec<Adjunction<C::One, C::Two>>> {
    let (a, b) = (c.src1(f), c.tgt1(f));
    let (one_f, mut out) = (c.id2(f), Vec::new());
    for g in c.hom1(&b, &a)? {
        let (gf, fg) = (c.comp1(&g, f)?, c.comp1(f, &g)?);
        let one_g = c.id2(&g);
        for eta in c.hom2(&c.id1(&a), &gf)? {
            for eps in c.hom2(&fg, &c.id1(&b))? {
                let t1 = c.vcomp(&c.rwhisk(&eps, f)?, &c.lwhisk(f, &eta)?)?;
                let t2 = c.vcomp(&c.lwhisk(&g, &eps)?, &c.rwhisk(&eta, &g)?)?;
                if t1 != one_f || t2 != one_g {
                    continue;
                }
                if invertible && (c.inverse2(&eta)?.is_none() || c.inverse2(&eps)?.is_none()) {
                    continue;
                }
                out.push(Adjunction { f: f.clone(), g: g.clone(), eta: eta.clone(), eps });
            }
        }
    }
    Ok(out)
}
