//! Acceptance suites, one per criterion. Runs without the libtest harness so
//! that every suite reports exactly one PASS/FAIL line with its timing.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use fcat::arrowlimits::{
    certify_factorization, check_against_battery, compose_w_spans, enumerate_lifted_structures, factor_loose_morphism, lift_limit_monoidal, limit_of_arrow, represent_2cell, SpanFactorization,
};
use fcat::cli::{self, samples};
use fcat::doctrinal::{enumerate_compatible_structures, lift_adjunction};
use fcat::f2cat::fixtures::{arrow_2cat, discrete_2cat, iso_pair_2cat, locally_preordered, parallel_2cells, point_2cat};
use fcat::f2cat::{build_adj_classifier, compose_ffunctors, is_reflection_morphism, is_w_doctrinal, orthogonal_to_classifier, tight_inclusion, FCategory, FFunctor};
use fcat::fincat::fixtures::{arrow_with_flip, bottom_preserving_maps, chain, commutative_monoids, cyclic, galois_between, monotone};
use fcat::fincat::{compose_functors, enumerate_functors, enumerate_nat_trans, whisker_left, whisker_right, CatWorld, Functor};
use fcat::monadfiller::fixtures::{filler_fixtures, monad_fixtures};
use fcat::monadfiller::{build_talg, construct_filler, enumerate_fillers, monadicity_loop, naturality_loop, Verdict};
use fcat::moncat::fixtures::{join_chain, meet_chain, poset_monoidal_functor, sigma, sigma_functor};
use fcat::moncat::{corruptions, op_dualize, validate_monoidal_category, validate_monoidal_functor, validate_monoidal_transformation, MonoidalCategory, WMonoidalFunctor};
use fcat::{Cap, Error, Variance};

const BUDGET: Duration = Duration::from_secs(60);
/// Largest limit apex, in morphisms, put through the universal-property battery.
const BATTERY_APEX: usize = 15;
const LCP: [Variance; 3] = [Variance::Lax, Variance::Pseudo, Variance::Colax];

type Suite = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, ctx: impl std::fmt::Display) -> Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e}"))
}

fn cap() -> Cap {
    Cap::default()
}

fn same_tables(x: &FFunctor, y: &FFunctor) -> bool {
    x.obj_table() == y.obj_table() && x.one_table() == y.one_table() && x.two_table() == y.two_table()
}

fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out.into_iter().flat_map(|v: Vec<usize>| (v.last().copied().unwrap_or(0)..n).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn coherence() -> Result<String, String> {
    let mut fixtures: Vec<MonoidalCategory> = Vec::new();
    for n in 1..=4 {
        fixtures.extend([join_chain(n), meet_chain(n)]);
    }
    for m in commutative_monoids(4) {
        fixtures.push(ok(sigma(&m), m.name())?);
    }
    let (j2, j3) = (Arc::new(join_chain(2)), Arc::new(join_chain(3)));
    let lifted_inputs = [
        (Variance::Lax, WMonoidalFunctor::identity(j2.clone())),
        (Variance::Pseudo, WMonoidalFunctor::identity(j3.clone())),
        (Variance::Lax, ok(poset_monoidal_functor("up", Variance::Lax, &j2, &j3, &[1, 2]), "up")?),
        (Variance::Colax, ok(poset_monoidal_functor("low", Variance::Colax, &j2, &j3, &[0, 1]), "low")?),
    ];
    for (w, f) in &lifted_inputs {
        fixtures.push((*ok(lift_limit_monoidal(*w, f), &f.name)?.monoidal).clone());
    }
    let mut corrupted = 0;
    for m in &fixtures {
        let v = validate_monoidal_category(m);
        ensure!(v.is_ok(), "{} does not validate: {v}", m.name);
        for (label, bad) in corruptions(m) {
            let v = validate_monoidal_category(&bad);
            ensure!(!v.violations.is_empty(), "{}: corruption {label} went undetected", m.name);
            ensure!(v.violations.iter().all(|x| !x.law.is_empty()), "{}: corruption {label} has an unnamed violation", m.name);
            corrupted += 1;
        }
    }
    Ok(format!("{} fixtures valid, {corrupted}/{corrupted} corruptions detected", fixtures.len()))
}

fn doctrinal() -> Result<String, String> {
    let (mut lax, mut colax) = (0, 0);
    for m in 1..=5 {
        for n in 1..=5 {
            let (a, b) = (Arc::new(join_chain(m)), Arc::new(join_chain(n)));
            for left in bottom_preserving_maps(m, n) {
                let ctx = format!("{m}->{n} {left:?}");
                let adj = ok(galois_between(a.base(), b.base(), &left), &ctx)?;
                let f = ok(poset_monoidal_functor("F", Variance::Strict, &a, &b, &left), &ctx)?;
                let lift = ok(lift_adjunction(Variance::Lax, &f, &adj), &ctx)?;
                let all = ok(enumerate_compatible_structures(Variance::Lax, &adj.right, &adj, &f, cap()), &ctx)?;
                ensure!(all.len() == 1, "{ctx}: {} compatible structures", all.len());
                ensure!(all[0].constraint_table() == lift.lifted.constraint_table() && all[0].unit_constraint() == lift.lifted.unit_constraint(), "{ctx}: lift differs from the enumerated structure");
                for t in [&lift.lifted_unit, &lift.lifted_counit] {
                    let v = ok(validate_monoidal_transformation(t), &ctx)?;
                    ensure!(v.is_ok(), "{ctx}: {v}");
                }
                lax += 1;

                let g = match poset_monoidal_functor("G", Variance::Strict, &b, &a, adj.right.obj_table()) {
                    Ok(g) if validate_monoidal_functor(&g).is_ok() => g,
                    _ => continue,
                };
                let c = ok(lift_adjunction(Variance::Colax, &g, &adj), &ctx)?;
                let l = ok(lift_adjunction(Variance::Lax, &ok(op_dualize(&g), &ctx)?, &adj.op()), &ctx)?;
                let dual = ok(op_dualize(&l.lifted), &ctx)?;
                ensure!(c.lifted == dual, "{ctx}: colax lift is not the op-dual of the lax lift");
                ensure!(c.lifted.constraint_table() == dual.constraint_table() && c.lifted.unit_constraint() == dual.unit_constraint(), "{ctx}: colax tables differ");
                let cs = ok(enumerate_compatible_structures(Variance::Colax, &adj.left, &adj, &g, cap()), &ctx)?;
                ensure!(cs == [c.lifted.clone()], "{ctx}: colax lift is not the unique compatible structure");
                colax += 1;
            }
        }
    }
    ensure!(colax > 0, "no Galois fixture admits a colax lift");
    Ok(format!("{lax} Galois fixtures lifted uniquely, {colax} colax lifts equal their op-duals"))
}

fn loose_morphisms() -> Result<Vec<Functor>, String> {
    let mut out = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            let (a, b) = (Arc::new(chain(m)), Arc::new(chain(n)));
            for vals in monotone_maps(m, n) {
                out.push(ok(monotone(&a, &b, &vals), "monotone")?);
            }
        }
    }
    out.push(Functor::identity(Arc::new(arrow_with_flip())));
    let z3 = Arc::new(cyclic(3));
    out.extend(ok(enumerate_functors(&z3, &z3, cap()), "Z3 endomorphisms")?);
    Ok(out)
}

fn limits() -> Result<String, String> {
    let fs = loose_morphisms()?;
    let mut certified = 0;
    for f in &fs {
        for w in LCP {
            let fac = ok(limit_of_arrow(w, f).and_then(|l| factor_loose_morphism(&l)), format!("{w} {}", f.name))?;
            let v = ok(certify_factorization(&fac, cap()), &f.name)?;
            ensure!(v.is_ok(), "{w} {}: {v}", f.name);
            certified += 1;
        }
    }
    let mut reports = 0;
    let mut skipped = 0;
    for f in &fs {
        for w in LCP {
            let lim = ok(limit_of_arrow(w, f), &f.name)?;
            if lim.apex.num_morphisms() > BATTERY_APEX {
                skipped += 1;
                continue;
            }
            for r in ok(check_against_battery(&lim, 3, cap()), &f.name)? {
                ensure!(r.pass(), "{w} {}: {r:?}", f.name);
                reports += 1;
            }
        }
    }
    let mut unique = 0;
    for (m, n) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let (a, b) = (Arc::new(join_chain(m)), Arc::new(join_chain(n)));
        for vals in monotone_maps(m, n) {
            for w in LCP {
                let fv = if w == Variance::Pseudo { Variance::Pseudo } else { w };
                let Ok(f) = poset_monoidal_functor("F", fv, &a, &b, &vals) else { continue };
                if !validate_monoidal_functor(&f).is_ok() {
                    continue;
                }
                let ml = match lift_limit_monoidal(w, &f) {
                    Ok(ml) => ml,
                    Err(Error::Precondition(_)) => continue,
                    Err(e) => return Err(format!("{w} {vals:?}: {e}")),
                };
                ensure!(ml.certificate.is_ok(), "{w} {vals:?}: {}", ml.certificate);
                let all = ok(enumerate_lifted_structures(&ml, cap()), "lifted structures")?;
                ensure!(all == vec![(*ml.monoidal).clone()], "{w} {vals:?}: {} lifted structures", all.len());
                unique += 1;
            }
        }
    }
    let z = Arc::new(ok(sigma(&cyclic(3)), "sigma")?);
    let fz = ok(sigma_functor("F", Variance::Strict, &z, &z, &[0, 1, 2], 0, 0), "sigma functor")?;
    for w in LCP {
        let ml = ok(lift_limit_monoidal(w, &fz), "ΣZ3")?;
        ensure!(ok(enumerate_lifted_structures(&ml, cap()), "ΣZ3")?.len() == 1, "ΣZ3 {w}: lift is not unique");
        unique += 1;
    }
    Ok(format!("{certified} factorizations certified, {reports} universal checks passed ({skipped} limits above {BATTERY_APEX} morphisms skipped), {unique} monoidal lifts unique"))
}

fn factor(w: Variance, f: &Functor) -> Result<SpanFactorization, String> {
    ok(limit_of_arrow(w, f).and_then(|l| factor_loose_morphism(&l)), format!("{w} {}", f.name))
}

fn spans() -> Result<String, String> {
    let (c2, c3) = (Arc::new(chain(2)), Arc::new(chain(3)));
    let mut pairs: Vec<(Functor, Functor)> = Vec::new();
    for x in monotone_maps(2, 3) {
        for y in monotone_maps(3, 2) {
            pairs.push((ok(monotone(&c2, &c3, &x), "f")?, ok(monotone(&c3, &c2, &y), "g")?));
        }
    }
    let flip = Functor::identity(Arc::new(arrow_with_flip()));
    pairs.push((flip.clone(), flip));
    let mut composites = 0;
    for (f, g) in &pairs {
        for w in LCP {
            let ctx = format!("{w} {}∘{}", g.name, f.name);
            let (ff, fg) = (factor(w, f)?, factor(w, g)?);
            let comp = ok(compose_w_spans(&ff, &fg, cap()), &ctx)?;
            ensure!(comp.certificate.is_ok(), "{ctx}: {}", comp.certificate);
            let gf = &comp.factorization_gf.limit;
            ensure!(compose_functors(&gf.p, &comp.k).ok() == compose_functors(&ff.limit.p, &comp.p_gf).ok(), "{ctx}: p_gf·k ≠ p_f·p_(g,f)");
            ensure!(compose_functors(&gf.q, &comp.k).ok() == compose_functors(&fg.limit.q, &comp.q_gf).ok(), "{ctx}: q_gf·k ≠ q_g·q_(g,f)");
            let world = CatWorld::new(vec![ff.limit.dom().clone(), fg.limit.cod().clone(), comp.pullback.apex.clone(), gf.apex.clone()], cap());
            let id = Functor::identity(ff.limit.dom().clone());
            let rm = ok(is_reflection_morphism(&world, &comp.k, &id, &comp.composite, &comp.factorization_gf.reflection), &ctx)?;
            ensure!(rm.mate.is_identity(), "{ctx}: mate of (k, 1) is {:?}", rm.mate.components());
            composites += 1;
        }
    }

    let (mut lax, mut pseudo, mut non_invertible) = (0, 0, 0);
    let maps = monotone_maps(2, 3);
    for x in &maps {
        for y in &maps {
            let (f, g) = (ok(monotone(&c2, &c3, x), "f")?, ok(monotone(&c2, &c3, y), "g")?);
            for alpha in ok(enumerate_nat_trans(&f, &g, cap()), "2-cells")? {
                let ctx = format!("{x:?}⇒{y:?} {:?}", alpha.components());
                let (lf, lg) = (factor(Variance::Lax, &f)?, factor(Variance::Lax, &g)?);
                let rep = ok(represent_2cell(Variance::Lax, &alpha, &lf, &lg, cap()), &ctx)?;
                ensure!(rep.certificate.is_ok(), "{ctx}: {}", rep.certificate);
                let m = &rep.lax().ok_or("lax shape expected")?.m;
                let qm = ok(whisker_left(&lg.limit.q, m), &ctx)?;
                ensure!(qm.components() == alpha.components(), "{ctx}: q_g·m_α = {:?}", qm.components());
                lax += 1;

                let (pf, pg) = (factor(Variance::Pseudo, &f)?, factor(Variance::Pseudo, &g)?);
                let rep = ok(represent_2cell(Variance::Pseudo, &alpha, &pf, &pg, cap()), &ctx)?;
                ensure!(rep.certificate.is_ok(), "{ctx}: {}", rep.certificate);
                let p = rep.pseudo().ok_or("pseudo shape expected")?;
                let (qs, qt) = (compose_functors(&pf.limit.q, &p.s).map_err(|e| e.to_string())?, compose_functors(&pg.limit.q, &p.t).map_err(|e| e.to_string())?);
                let sols: Vec<_> = ok(enumerate_nat_trans(&qs, &qt, cap()), &ctx)?
                    .into_iter()
                    .filter(|r| whisker_right(r, &p.v).map(|x| x.components() == alpha.components()).unwrap_or(false))
                    .collect();
                ensure!(sols.len() == 1 && sols[0].components() == p.rho.components(), "{ctx}: {} solutions for ρ_α", sols.len());
                pseudo += 1;
                non_invertible += usize::from(alpha.inverse().is_none());
            }
        }
    }
    ensure!(non_invertible > 0, "no non-invertible 2-cell was represented");
    Ok(format!("{composites} span composites, {lax} lax 2-cells, {pseudo} pseudo 2-cells ({non_invertible} non-invertible)"))
}

fn doctrinality() -> Result<String, String> {
    let mut talgs = 0;
    let mut subjects: Vec<FFunctor> = Vec::new();
    for m in monad_fixtures() {
        let base = m.base().ambient();
        if base.n0() > 3 || base.n2() > 20 {
            continue;
        }
        for w in LCP {
            let t = match build_talg(&m, w, cap()) {
                Ok(t) => t,
                Err(Error::Hypothesis(_)) => continue,
                Err(e) => return Err(format!("{} {w}: {e}", m.name)),
            };
            ensure!(ok(is_w_doctrinal(&t.u, w, false), &m.name)?.verdict, "{} {w}: U is not w-doctrinal", m.name);
            if w == Variance::Lax {
                ensure!(ok(is_w_doctrinal(&t.u, Variance::Pseudo, false), &m.name)?.verdict, "{}: U_l is not p-doctrinal", m.name);
            }
            talgs += 1;
            subjects.push(t.u);
        }
    }
    ensure!(talgs > 0, "no T-Alg was buildable");

    let k = ok(build_adj_classifier(Variance::Lax), "classifier")?;
    let adj = Arc::new(k.category.clone());
    let thin = ok(locally_preordered("2thin", &chain(2), |_, _| true, |_, _| None), "thin")?;
    subjects.push(FFunctor::identity(adj.clone()));
    subjects.push(tight_inclusion(&adj).1);
    for b in [thin, iso_pair_2cat(), arrow_2cat(), parallel_2cells(), point_2cat(), discrete_2cat(2)] {
        subjects.push(FFunctor::identity(Arc::new(FCategory::all_tight(b))));
    }
    let mut agreements = 0;
    let mut distinct = BTreeSet::new();
    for h in &subjects {
        for w in LCP {
            let refl = ok(is_w_doctrinal(h, w, false), &h.name)?.w_refl.pass;
            let orth = ok(orthogonal_to_classifier(h, w, cap()), &h.name)?.pass;
            ensure!(refl == orth, "{} at {w}: w-Refl {refl}, orthogonality {orth}", h.name);
            agreements += 1;
        }
        distinct.insert(format!("{}:{:?}:{:?}", h.name, h.one_table(), h.two_table()));
    }
    ensure!(distinct.len() >= 10, "only {} orthogonality fixtures", distinct.len());
    Ok(format!("{talgs} forgetful functors doctrinal, orthogonality agrees on {} fixtures ({agreements} verdicts)", distinct.len()))
}

fn fillers() -> Result<String, String> {
    let fixtures = ok(filler_fixtures(cap()), "filler fixtures")?;
    let mut colax = 0;
    for (name, prob) in &fixtures {
        let fill = ok(construct_filler(prob, cap()), name)?;
        ensure!(fill.certificate.is_ok(), "{name}: {}", fill.certificate);
        let all = ok(enumerate_fillers(prob, cap()), name)?;
        ensure!(all.len() == 1 && same_tables(&all[0], &fill.k), "{name}: {} fillers by enumeration", all.len());
        ensure!(same_tables(&ok(compose_ffunctors(&prob.h, &fill.k), name)?, &prob.s), "{name}: HK ≠ S");
        ensure!(same_tables(&ok(compose_ffunctors(&fill.k, &prob.j), name)?, &prob.r), "{name}: Kj ≠ R");
        if prob.variance == Variance::Colax {
            let dual = ok(prob.co_dual(cap()).and_then(|p| construct_filler(&p, cap())), name)?;
            ensure!(same_tables(&fill.k.co_dual(), &dual.k), "{name}: co-dual filler differs");
            ensure!(same_tables(&dual.k.co_dual(), &fill.k), "{name}: co-duality does not round-trip");
            colax += 1;
        }
    }
    ensure!(colax > 0, "no colax filler fixture");
    Ok(format!("{} fixtures with a unique filler, {colax} colax round trips", fixtures.len()))
}

fn monadicity() -> Result<String, String> {
    let mut identity_ok = false;
    let mut nontrivial = BTreeSet::new();
    let mut loops = 0;
    for m in monad_fixtures() {
        let mut all_iso = true;
        let mut any = false;
        for w in LCP {
            let t = match build_talg(&m, w, cap()) {
                Ok(t) => t,
                Err(Error::Hypothesis(_)) => continue,
                Err(e) => return Err(format!("{} {w}: {e}", m.name)),
            };
            let r = ok(monadicity_loop(&t, cap()), &m.name)?;
            ensure!(r.verdict == Verdict::Iso, "{} {w}: {:?}", m.name, r.conditions);
            all_iso &= r.verdict == Verdict::Iso;
            any = true;
            loops += 1;
        }
        let mut natural = true;
        for w in [Variance::Lax, Variance::Colax] {
            match naturality_loop(&m, w, cap()) {
                Ok((_, v)) => ensure!(v.is_ok(), "{} (p,{w}): {v}", m.name),
                Err(Error::Hypothesis(_)) => natural = false,
                Err(e) => return Err(format!("{} (p,{w}): {e}", m.name)),
            }
        }
        if any && all_iso && natural {
            if m.is_identity() {
                identity_ok = true;
            } else {
                nontrivial.insert(m.name.clone());
            }
        }
    }
    ensure!(identity_ok, "no identity monad completed the loop");
    ensure!(nontrivial.len() >= 2, "only {} nontrivial monads completed the loop", nontrivial.len());
    Ok(format!("{loops} monadicity checks iso; identity and {} nontrivial monads natural under (p,l) and (p,c)", nontrivial.len()))
}

fn determinism() -> Result<String, String> {
    let dir = std::env::temp_dir().join(format!("fcat-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    for (name, item) in ok(samples::bundled_documents(), "bundled documents")? {
        std::fs::write(dir.join(name), cli::serialize_document(&item)).map_err(|e| e.to_string())?;
    }
    let mut runs = 0;
    for inv in samples::sample_invocations() {
        let mut argv = vec!["fcat".to_string(), "--mode".into(), "machine".into()];
        argv.extend(inv.iter().map(|a| match a.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            Some(file) => dir.join(file).to_string_lossy().into_owned(),
            None => a.to_string(),
        }));
        let (first, second) = (cli::run(argv.clone()), cli::run(argv));
        ensure!(first == second, "`{}` differs between runs", inv.join(" "));
        ensure!(first.code == 0, "`{}` exited {}", inv.join(" "), first.code);
        runs += 1;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{runs} invocations byte-identical across two runs"))
}

fn main() -> ExitCode {
    let suites: [(&str, Suite); 8] = [
        ("coherence", coherence),
        ("doctrinal", doctrinal),
        ("limits", limits),
        ("spans", spans),
        ("doctrinality", doctrinality),
        ("fillers", fillers),
        ("monadicity loop", monadicity),
        ("determinism", determinism),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, suite)) in suites.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(suite)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > BUDGET => Err(format!("took {} ms, over the {} s budget", elapsed.as_millis(), BUDGET.as_secs())),
            r => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        println!("criterion {} {name}: {tag} ({detail}; {} ms)", i + 1, elapsed.as_millis());
        failed += usize::from(result.is_err());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
