use std::sync::Arc;

use proptest::prelude::*;

use fcat::arrowlimits::{certify_factorization, factor_loose_morphism, limit_of_arrow};
use fcat::cli::{canonicalize, parse_document, serialize_document, Item};
use fcat::doctrinal::{enumerate_compatible_structures, lift_adjunction};
use fcat::fincat::fixtures::{chain, galois_between, monotone};
use fcat::fincat::{compose_functors, enumerate_nat_trans, validate_category, vertical, Functor};
use fcat::moncat::fixtures::{join_chain, poset_monoidal_functor};
use fcat::moncat::{validate_monoidal_category, MonTable};
use fcat::{Cap, Variance};

fn variance() -> impl Strategy<Value = Variance> {
    prop::sample::select(Variance::all().to_vec())
}

/// A monotone map between chains of the given lengths, as its value list.
fn monotone_values(m: usize, n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, m).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

fn chain_map() -> impl Strategy<Value = (usize, usize, Vec<usize>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| monotone_values(m, n).prop_map(move |v| (m, n, v)))
}

fn lcp() -> impl Strategy<Value = Variance> {
    prop::sample::select(vec![Variance::Lax, Variance::Pseudo, Variance::Colax])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn variance_dual_is_an_involution(w in variance()) {
        prop_assert_eq!(w.dual().dual(), w);
        prop_assert_eq!(w.letter().parse::<Variance>().unwrap(), w);
    }

    #[test]
    fn variance_join_is_commutative_and_idempotent(a in variance(), b in variance()) {
        prop_assert_eq!(a.join(b), b.join(a));
        prop_assert_eq!(a.join(a), Some(a));
        prop_assert_eq!(a.dual().join(b.dual()), a.join(b).map(Variance::dual));
    }

    #[test]
    fn composing_chain_maps_is_pointwise((k, m, xs) in chain_map(), n in 1usize..=4, seed in prop::collection::vec(0usize..4, 4)) {
        let ys: Vec<usize> = {
            let mut v: Vec<usize> = seed.into_iter().take(m).map(|s| s % n).collect();
            v.resize(m, n - 1);
            v.sort_unstable();
            v
        };
        let (a, b, c) = (Arc::new(chain(k)), Arc::new(chain(m)), Arc::new(chain(n)));
        let f = monotone(&a, &b, &xs).unwrap();
        let g = monotone(&b, &c, &ys).unwrap();
        let gf = compose_functors(&g, &f).unwrap();
        let expected: Vec<usize> = xs.iter().map(|&x| ys[x]).collect();
        prop_assert_eq!(gf.obj_table(), &expected[..]);
    }

    #[test]
    fn opposite_category_is_an_involution(n in 1usize..=5) {
        let c = chain(n);
        let op = c.op();
        prop_assert!(validate_category(&op).is_ok());
        prop_assert_eq!(op.op(), c);
    }

    #[test]
    fn documents_canonicalize_idempotently((m, n, v) in chain_map()) {
        let (a, b) = (Arc::new(chain(m)), Arc::new(chain(n)));
        let f = monotone(&a, &b, &v).unwrap();
        let bytes = serialize_document(&Item::Functor(f));
        let once = canonicalize(&bytes).unwrap();
        prop_assert_eq!(&once, &bytes);
        prop_assert_eq!(canonicalize(&once).unwrap(), once);
        prop_assert!(parse_document(&bytes).is_ok());
    }

    #[test]
    fn limits_of_chain_maps_satisfy_the_reflection_equations((m, n, v) in chain_map(), w in lcp()) {
        let (a, b) = (Arc::new(chain(m)), Arc::new(chain(n)));
        let f = monotone(&a, &b, &v).unwrap();
        let fac = factor_loose_morphism(&limit_of_arrow(w, &f).unwrap()).unwrap();
        let cert = certify_factorization(&fac, Cap::default()).unwrap();
        prop_assert!(cert.is_ok(), "{}", cert);
    }

    #[test]
    fn single_entry_corruptions_of_join_chains_are_caught(n in 2usize..=4, t in 0usize..6, i in 0usize..64, val in 0usize..64) {
        let m = join_chain(n);
        let table = MonTable::all()[t];
        let (len, range) = m.table_shape(table);
        let (i, val) = (i % len, val % range);
        let bad = m.with_entry(table, i, val);
        prop_assume!(bad != m);
        prop_assert!(!validate_monoidal_category(&bad).is_ok());
    }

    #[test]
    fn galois_lifts_are_unique(m in 1usize..=4, n in 1usize..=4, raw in prop::collection::vec(0usize..4, 4)) {
        let mut left: Vec<usize> = raw.into_iter().take(m).map(|x| x % n).collect();
        left.resize(m, n - 1);
        left.sort_unstable();
        left[0] = 0;
        let (a, b) = (Arc::new(join_chain(m)), Arc::new(join_chain(n)));
        let adj = galois_between(a.base(), b.base(), &left).unwrap();
        let f = poset_monoidal_functor("F", Variance::Strict, &a, &b, &left).unwrap();
        let lift = lift_adjunction(Variance::Lax, &f, &adj).unwrap();
        let all = enumerate_compatible_structures(Variance::Lax, &adj.right, &adj, &f, Cap::default()).unwrap();
        prop_assert_eq!(all, vec![lift.lifted]);
    }

    #[test]
    fn vertical_composition_is_associative(x in monotone_values(2, 3), y in monotone_values(2, 3), z in monotone_values(2, 3), u in monotone_values(2, 3)) {
        let (a, b) = (Arc::new(chain(2)), Arc::new(chain(3)));
        let fs: Vec<Functor> = [x, y, z, u].iter().map(|v| monotone(&a, &b, v).unwrap()).collect();
        let cell = |i: usize| enumerate_nat_trans(&fs[i], &fs[i + 1], Cap::default()).unwrap().into_iter().next();
        if let (Some(p), Some(q), Some(r)) = (cell(0), cell(1), cell(2)) {
            let left = vertical(&r, &vertical(&q, &p).unwrap()).unwrap();
            let right = vertical(&vertical(&r, &q).unwrap(), &p).unwrap();
            prop_assert_eq!(left.components(), right.components());
        }
    }
}
