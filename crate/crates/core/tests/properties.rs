use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use rootcase::caseengine;
use rootcase::exactfield::rat;
use rootcase::matrixlie::{self, MatQ};
use rootcase::model::{ClosureSeed, HRootDatum, PairModel};
use rootcase::pattern::{format_vector, parse_vector};
use rootcase::roots::Family;
use rootcase::weyl::{self, pair_canonical};
use rootcase::{CartanType, FieldElem, RootSystem, Vect};

const TYPES: [(Family, usize); 9] = [
    (Family::A, 3),
    (Family::B, 3),
    (Family::C, 3),
    (Family::D, 4),
    (Family::G, 2),
    (Family::F, 4),
    (Family::B, 4),
    (Family::C, 4),
    (Family::E, 6),
];

fn system(k: usize) -> Arc<RootSystem> {
    let (f, n) = TYPES[k % TYPES.len()];
    RootSystem::shared(CartanType::new(f, n).unwrap())
}

fn field() -> impl Strategy<Value = FieldElem> {
    (-6i64..=6, -6i64..=6, -6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d, q)| {
        FieldElem::new(rat(a, q), rat(b, q), rat(c, q), rat(d, q))
    })
}

fn zero() -> FieldElem {
    FieldElem::from_int(0)
}

/// Two distinct, non-opposite roots of one system.
fn pair() -> impl Strategy<Value = (Arc<RootSystem>, Vect, Vect)> {
    (0..TYPES.len(), any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_filter_map("±α", |(k, i, j)| {
        let rs = system(k);
        let a = rs.roots()[i.index(rs.len())].clone();
        let b = rs.roots()[j.index(rs.len())].clone();
        (a != b && a != -&b).then_some((rs, a, b))
    })
}

/// An integer combination of roots, so it lies in the span of `Δ`.
fn in_span(rs: &RootSystem, coefs: &[i64]) -> Vect {
    let mut v = rs.roots()[0].scale(&zero());
    for (r, c) in rs.roots().iter().zip(coefs) {
        v = v.add_scaled(&FieldElem::from_int(*c), r);
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn field_order_matches_sign(a in field(), b in field()) {
        let d = &a - &b;
        prop_assert_eq!(a.cmp(&b), d.sign().cmp(&0));
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if a.sign() != 0 {
            prop_assert_eq!(&a * &a.inverse().unwrap(), FieldElem::from_int(1));
        }
    }

    #[test]
    fn reflections_permute_roots((rs, a, b) in pair()) {
        let r = weyl::reflect(&a, &b).unwrap();
        prop_assert!(rs.contains(&r));
        prop_assert_eq!(weyl::reflect(&a, &r).unwrap(), b.clone());
        prop_assert_eq!(r.norm_sq(), b.norm_sq());
    }

    #[test]
    fn dominant_rep_is_a_class_function((rs, a, b) in pair()) {
        let d = weyl::dominant_rep(&rs, &b);
        prop_assert_eq!(weyl::dominant_rep(&rs, &weyl::reflect(&a, &b).unwrap()), d.clone());
        prop_assert_eq!(weyl::dominant_rep(&rs, &d), d);
    }

    #[test]
    fn pair_class_ignores_order_and_weyl((rs, a, b) in pair(), k in any::<prop::sample::Index>()) {
        let c = pair_canonical(&rs, &a, &b, true).unwrap();
        let s = rs.roots()[k.index(rs.len())].clone();
        let (wa, wb) = (weyl::reflect(&s, &a).unwrap(), weyl::reflect(&s, &b).unwrap());
        prop_assert_eq!(pair_canonical(&rs, &wa, &wb, true).unwrap(), c.clone());
        if a.norm_sq() == b.norm_sq() {
            prop_assert_eq!(pair_canonical(&rs, &b, &a, true).unwrap(), c);
        }
    }

    #[test]
    fn projections_split_t((rs, a, b) in pair(), coefs in prop::collection::vec(-3i64..=3, 8)) {
        let pm = PairModel::new(rs.clone(), a, b).unwrap();
        let v = in_span(&rs, &coefs);
        let (h, m) = (pm.pr_h(&v).unwrap(), pm.pr_m(&v).unwrap());
        prop_assert_eq!(&h + &m, v.clone());
        prop_assert_eq!(pm.pr_h(&h).unwrap(), h.clone());
        prop_assert_eq!(pm.pr_m(&m).unwrap(), m.clone());
        prop_assert_eq!(h.dot(&m), zero());
    }

    #[test]
    fn ray_test_is_sign_symmetric((rs, a, b) in pair(), k in any::<prop::sample::Index>()) {
        let pm = PairModel::new(rs.clone(), a, b).unwrap();
        let g = rs.roots()[k.index(rs.len())].clone();
        if pm.frame.split.in_h_part(&g) {
            prop_assert_eq!(pm.only_root_on_ray(&g).unwrap(), pm.only_root_on_ray(&-&g).unwrap());
        }
        if !pm.pr_h(&g).unwrap().is_zero() {
            prop_assert_eq!(pm.only_root_odd_multiples(&g).unwrap(), pm.only_root_odd_multiples(&-&g).unwrap());
        }
    }

    #[test]
    fn closure_is_monotone_and_idempotent((rs, a, b) in pair()) {
        let pm = PairModel::new(rs, a.clone(), b.clone()).unwrap();
        let bare = pm.frame.forced_closure(&ClosureSeed {
            regular: Vec::new(),
            diagonal: vec![vec![a, b]],
            use_ray_test: false,
        });
        if let (Ok(bare), Ok(full)) = (bare, pm.forced_h_closure()) {
            prop_assert!(bare.h_roots().is_subset(&full.h_roots()));
            prop_assert!(full.is_consistent());
            let again = pm.frame.forced_closure(&ClosureSeed {
                regular: full.regular.iter().cloned().collect(),
                diagonal: full.diagonal.iter().map(|d| d.preimages.iter().cloned().collect()).collect(),
                use_ray_test: true,
            }).unwrap();
            prop_assert_eq!(again, full);
        }
    }

    #[test]
    fn pattern_round_trip((rs, a, _b) in pair()) {
        let s = format_vector(&a);
        prop_assert_eq!(parse_vector(&s, rs.ambient_dim()).unwrap(), a);
    }

    #[test]
    fn bracket_is_bilinear_and_jacobi(c in prop::collection::vec(-2i64..=2, 9)) {
        let basis = matrixlie::sp_basis(3);
        let comb = |cs: &[i64], off: usize| -> MatQ {
            let mut m = MatQ::zero(3);
            for (k, &x) in cs.iter().enumerate() {
                m = m.try_add(&basis[(k * 7 + off) % basis.len()].scale(&rat(x, 1))).unwrap();
            }
            m
        };
        let (x, y, z) = (comb(&c[0..3], 0), comb(&c[3..6], 3), comb(&c[6..9], 5));
        let br = |p: &MatQ, q: &MatQ| matrixlie::bracket(p, q).unwrap();
        let jac = br(&x, &br(&y, &z)).try_add(&br(&y, &br(&z, &x))).unwrap().try_add(&br(&z, &br(&x, &y))).unwrap();
        prop_assert!(jac.is_zero());
        prop_assert_eq!(br(&x, &y), br(&y, &x).scale(&rat(-1, 1)));
        let lhs = br(&x.try_add(&z).unwrap(), &y);
        prop_assert_eq!(lhs, br(&x, &y).try_add(&br(&z, &y)).unwrap());
        prop_assert!(br(&x, &y).in_sp());
    }

    #[test]
    fn even_scan_is_symmetric_and_weyl_invariant((rs, r, _b) in pair()) {
        // h = {±r} is closed, and s_r preserves it.
        let model = rootcase::model::HomModel::even("rank-one", rs, [r.clone(), -&r]).unwrap();
        let raw = caseengine::even_pair_scan(&model).unwrap();
        let base: BTreeSet<BTreeSet<Vect>> = raw.iter().map(|(a, b)| [a.clone(), b.clone()].into_iter().collect()).collect();
        prop_assert_eq!(base.len(), raw.len());
        for (a, b) in &raw {
            prop_assert!(a > b);
        }
        let moved: BTreeSet<BTreeSet<Vect>> = base
            .iter()
            .map(|p| p.iter().map(|v| weyl::reflect(&r, v).unwrap()).collect())
            .collect();
        prop_assert_eq!(moved, base);
    }
}

#[test]
fn regular_datum_round_trips_through_h_roots() {
    let rs = RootSystem::of(Family::B, 2).unwrap();
    let h = HRootDatum::regular(rs.roots().iter().cloned());
    assert_eq!(h.h_roots().len(), rs.len());
}
