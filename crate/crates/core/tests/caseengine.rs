use std::collections::BTreeSet;
use std::sync::Arc;

use rootcase::caseengine::{self, case3::table6_types, Subcase, Tables};
use rootcase::model::{CaseLabel, DiagonalRecord, GRoots, HRootDatum, HomModel};
use rootcase::pattern::{expand_pattern, format_vector, parse_vector};
use rootcase::pipeline;
use rootcase::roots::Family;
use rootcase::weyl::pair_canonical;
use rootcase::{AngleClass, CartanType, RootSystem, Vect};

fn ty(f: Family, n: usize) -> CartanType {
    CartanType::new(f, n).unwrap()
}

fn vec_of(s: &str, dim: usize) -> Vect {
    parse_vector(s, dim).unwrap()
}

#[test]
fn g2_classes() {
    let classes = caseengine::enumerate_case3(ty(Family::G, 2), false);
    let off: BTreeSet<AngleClass> = classes.iter().map(|(_, a)| *a).filter(|a| !a.is_pi3_or_2pi3()).collect();
    assert_eq!(off, [AngleClass::Pi6, AngleClass::Pi2, AngleClass::FivePi6].into_iter().collect());
    assert_eq!(classes.iter().filter(|(_, a)| !a.is_pi3_or_2pi3()).count(), 3);
}

#[test]
fn a2_is_all_iii_a() {
    let classes = caseengine::enumerate_case3(ty(Family::A, 2), false);
    assert!(!classes.is_empty());
    assert!(classes.iter().all(|(_, a)| a.is_pi3_or_2pi3()));
}

#[test]
fn d4_outer_merges_orthogonal_pairs() {
    let rs = RootSystem::of(Family::D, 4).unwrap();
    let a = pair_canonical(&rs, &vec_of("e1+e2", 4), &vec_of("-e3-e4", 4), true).unwrap();
    let b = pair_canonical(&rs, &vec_of("e1+e2", 4), &vec_of("e2-e1", 4), true).unwrap();
    assert_eq!(a, b);
    let a = pair_canonical(&rs, &vec_of("e1+e2", 4), &vec_of("-e3-e4", 4), false).unwrap();
    let b = pair_canonical(&rs, &vec_of("e1+e2", 4), &vec_of("e2-e1", 4), false).unwrap();
    assert_ne!(a, b);
}

#[test]
fn subcase_examples() {
    let tables = Tables::load().unwrap();
    let cases = [
        (Family::B, 4, "e1+e2", "-e1", Subcase::B, Some(8)),
        (Family::F, 4, "e1", "e2", Subcase::C, Some(24)),
        (Family::G, 2, "3/2e1+[1/2*r3]e2", "e1", Subcase::A, Some(26)),
    ];
    for (f, n, a, b, sub, row) in cases {
        let t = ty(f, n);
        let rs = RootSystem::shared(t);
        let pc = pair_canonical(&rs, &vec_of(a, t.ambient_dim()), &vec_of(b, t.ambient_dim()), true).unwrap();
        let label = caseengine::assign_subcase(&pc, pc.angle(), &tables.t6).unwrap();
        assert_eq!((label.subcase, label.row), (sub, row), "{f}{n} {a} {b}");
    }
}

#[test]
fn no_unmatched_pair_outside_known_gap() {
    let tables = Tables::load().unwrap();
    for t in table6_types(&tables.t6) {
        if t == ty(Family::E, 8) {
            continue;
        }
        for (pc, theta) in caseengine::enumerate_case3(t, true) {
            caseengine::assign_subcase(&pc, theta, &tables.t6).unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }
}

#[test]
fn table6_rows_recovered() {
    let tables = Tables::load().unwrap();
    let rows = |t| {
        let c = caseengine::verify_table6(t, true, false, &tables).unwrap();
        (c.pass, c.rows.iter().map(|r| r.row).collect::<Vec<_>>())
    };
    assert_eq!(rows(ty(Family::B, 4)), (true, vec![2, 3, 4, 6, 7, 8]));
    assert_eq!(rows(ty(Family::A, 4)), (true, vec![1]));
    // Rows 19 and 20 are one class of E8.
    let e8 = caseengine::verify_table6(ty(Family::E, 8), true, false, &tables).unwrap();
    assert_eq!(e8.rows.iter().map(|r| r.row).collect::<Vec<_>>(), vec![19, 20]);
    assert_eq!(e8.shared_classes.len(), 1);
    assert!(!e8.pass);
}

#[test]
fn a3_has_one_class_beyond_the_table() {
    let tables = Tables::load().unwrap();
    let c = caseengine::verify_table6(ty(Family::A, 3), true, false, &tables).unwrap();
    assert_eq!(c.classes, 1);
    assert!(c.rows.is_empty());
    assert_eq!(c.classes_without_row.len(), 1);
}

#[test]
fn table2_examples() {
    let tables = Tables::load().unwrap();
    let row2 = caseengine::verify_table2_row(&tables.t2[1], ty(Family::B, 4)).unwrap();
    assert!(row2.pass);
    let row15 = caseengine::verify_table2_row(&tables.t2[14], ty(Family::G, 2)).unwrap();
    assert!(row15.pass);
    let mutated = caseengine::verify_table2(&tables.t2[1].head.alpha, &tables.t2[1].head.beta, "e1+e2", ty(Family::B, 4)).unwrap();
    assert!(!mutated.checks.odd_multiples || !mutated.checks.plane_in_m);
}

#[test]
fn table2_row7_listed_delta_is_regular() {
    let tables = Tables::load().unwrap();
    let row = &tables.t2[6];
    assert_eq!(row.delta, "2e3");
    for n in 3..=5 {
        let c = caseengine::verify_table2_row(row, ty(Family::C, n)).unwrap();
        assert!(!c.checks.plane_in_m && c.checks.odd_multiples);
        let other = caseengine::verify_table2(&row.head.alpha, &row.head.beta, "2e2", ty(Family::C, n)).unwrap();
        assert!(other.pass, "C{n}");
    }
}

#[test]
fn table2_row12_delta_is_orthogonal_to_m() {
    let tables = Tables::load().unwrap();
    let row = &tables.t2[11];
    let t = ty(Family::E, 8);
    let a = vec_of(&row.head.alpha, 8);
    let b = vec_of(&row.head.beta, 8);
    let d = vec_of(&row.delta, 8);
    assert_eq!(d.dot(&(&a - &b)), rootcase::FieldElem::from_int(0));
    let c = caseengine::verify_table2_row(row, t).unwrap();
    assert!(!c.pass && c.alternative_delta.is_some());
    let alt = caseengine::verify_table2(&row.head.alpha, &row.head.beta, "e4+e5", t).unwrap();
    assert!(alt.pass);
}

#[test]
fn table3_examples() {
    let tables = Tables::load().unwrap();
    assert!(caseengine::verify_table3_row(&tables.t3[0], ty(Family::B, 3)).unwrap().pass);
    assert!(caseengine::verify_table3_row(&tables.t3[1], ty(Family::C, 3)).unwrap().pass);
    let r = &tables.t3[2];
    let bad = caseengine::verify_table3(&r.head.alpha, &r.head.beta, "±e1; ±e3", ty(Family::F, 4), true).unwrap();
    assert!(!bad.pass);
}

#[test]
fn table4_examples() {
    let tables = Tables::load().unwrap();
    let row2 = &tables.t4[1];
    for (n, count) in [(3, 8), (4, 18), (5, 32)] {
        let c = caseengine::verify_table4_row(row2, ty(Family::D, n)).unwrap();
        assert!(c.pass, "D{n}");
        assert_eq!(c.h_roots.len(), count);
        assert_eq!(c.h_type, format!("B{}", n - 1));
    }
    let row1 = caseengine::verify_table4_row(&tables.t4[0], ty(Family::B, 3)).unwrap();
    assert!(row1.pass);
    let want: Vec<String> = ["-e1+e2", "-e1+e3", "-e2+e3", "e1-e2", "e1-e3", "e2-e3"].map(String::from).into();
    let mut got = row1.regular.clone();
    got.sort();
    let mut want = want;
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn table5_examples() {
    let tables = Tables::load().unwrap();
    let r1 = caseengine::verify_table5_row(&tables.t5[0], ty(Family::B, 3)).unwrap();
    assert!(r1.pass);
    assert_eq!(r1.subsystem, "B2");
    let r6 = caseengine::verify_table5_row(&tables.t5[5], ty(Family::F, 4)).unwrap();
    assert!(r6.pass);
    assert_eq!(r6.subsystem, "B3");
    let bad = caseengine::verify_table5(&tables.t5[0].head.alpha, &tables.t5[0].head.beta, "±e2; ±e2±e3", None, ty(Family::B, 3))
        .unwrap();
    assert!(!bad.pass);
    assert!(bad.extra.contains(&"e3".to_string()));
}

#[test]
fn table5_printed_reading_differs() {
    let tables = Tables::load().unwrap();
    for row in &tables.t5[2..4] {
        assert!(row.printed.is_some());
        let c = caseengine::verify_table5_row(row, ty(Family::C, 4)).unwrap();
        assert!(c.pass);
        assert_eq!(c.printed_reading_matches, Some(false));
    }
}

#[test]
fn even_scan_examples() {
    let b3 = RootSystem::of(Family::B, 3).unwrap();
    let d3 = expand_pattern("±e_i±e_j : 1<=i<j<=n", 3, 3).unwrap();
    let m = HomModel::even("(B3,D3)", b3, d3).unwrap();
    assert!(caseengine::even_pair_scan(&m).unwrap().is_empty());
    let flag = pipeline::b2_torus().unwrap();
    let bad = caseengine::even_pair_scan(&flag).unwrap();
    assert!(bad.contains(&(vec_of("e1+e2", 2), vec_of("e1-e2", 2))));
    let list = rootcase::data::wallach().unwrap();
    assert_eq!(caseengine::wallach_membership(&flag, &list).unwrap(), None);
}

#[test]
fn even_scan_rejects_odd_models() {
    let tables = Tables::load().unwrap();
    let r = &tables.t4[1];
    let t = ty(Family::D, 4);
    let pm = rootcase::model::PairModel::new(RootSystem::shared(t), vec_of(&r.head.alpha, 4), vec_of(&r.head.beta, 4)).unwrap();
    let m = pm.to_hom_model("odd", pm.forced_h_closure().unwrap());
    assert!(matches!(caseengine::even_pair_scan(&m), Err(rootcase::Error::NotEvenModel(1))));
}

#[test]
fn wallach_examples() {
    let list = rootcase::data::wallach().unwrap();
    let f4 = RootSystem::of(Family::F, 4).unwrap();
    let d4 = expand_pattern("±e_i±e_j : 1<=i<j<=4", 4, 4).unwrap();
    let m = HomModel::even("(F4,D4)", f4, d4).unwrap();
    assert_eq!(caseengine::wallach_membership(&m, &list).unwrap().map(|x| x.item), Some(2));
    let g2 = RootSystem::of(Family::G, 2).unwrap();
    let long: Vec<Vect> = g2.roots().iter().filter(|r| r.norm_sq() == rootcase::FieldElem::from_int(3)).cloned().collect();
    let m = HomModel::even("(G2,A2)", g2, long).unwrap();
    assert_eq!(caseengine::wallach_membership(&m, &list).unwrap().map(|x| x.item), Some(3));
    let b3 = RootSystem::of(Family::B, 3).unwrap();
    let b2 = expand_pattern("±e_i : i>=2; ±e_i±e_j : 2<=i<j<=3", 3, 3).unwrap();
    let m = HomModel::even("(B3,B2)", b3, b2).unwrap();
    assert_eq!(caseengine::wallach_membership(&m, &list).unwrap(), None);
}

fn two_component(first: Family, n: usize, alpha: &str, third: bool) -> HomModel {
    let g1 = RootSystem::of(first, n).unwrap();
    let a1 = RootSystem::of(Family::A, 1).unwrap();
    let mut comps = vec![g1.clone(), a1.clone()];
    if third {
        comps.push(a1.clone());
    }
    let g = Arc::new(GRoots::product(comps, 0, Vec::new()));
    let a = g.embed(0, &vec_of(alpha, g1.ambient_dim()));
    let b = g.embed(1, &a1.roots()[0]);
    let mut m = HomModel::new("case2", g, &[&a - &b], HRootDatum::default());
    for s in [1, -1] {
        let sign = rootcase::FieldElem::from_int(s);
        let (x, y) = (a.scale(&sign), b.scale(&sign));
        let image = m.frame.pr_h(&x).unwrap();
        m.h.diagonal.push(DiagonalRecord { image, preimages: [x, y].into_iter().collect() });
    }
    m
}

#[test]
fn case2_examples() {
    let m = two_component(Family::A, 2, "e1-e2", false);
    assert_eq!(m.classify_case().unwrap(), CaseLabel::II);
    let r = caseengine::case2_analyze(&m).unwrap();
    assert!(r.first.witness.is_some() || r.second.witness.is_some());
    assert!(r.contradiction);
    let m = two_component(Family::A, 1, "e1-e2", false);
    let r = caseengine::case2_analyze(&m).unwrap();
    assert!(r.first.witness.is_none() && r.second.witness.is_none());
    assert!(!r.contradiction);
    let m = two_component(Family::A, 1, "e1-e2", true);
    let r = caseengine::case2_analyze(&m).unwrap();
    assert_eq!(r.forced_into_h, vec![2]);
    assert!(r.contradiction);
}

#[test]
fn case2_witness_for_c_is_e1_plus_e2() {
    let m = two_component(Family::C, 3, "2e1", false);
    let r = caseengine::case2_analyze(&m).unwrap();
    let w = if r.first.ctype == "C3" { &r.first } else { &r.second };
    assert_eq!(w.witness.as_deref(), Some("e1+e2"));
}

#[test]
fn case2_needs_a_straddling_record() {
    let b3 = RootSystem::of(Family::B, 3).unwrap();
    let m = HomModel::even("even", b3, Vec::new()).unwrap();
    assert!(matches!(caseengine::case2_analyze(&m), Err(rootcase::Error::MalformedCase2Model(_))));
}

#[test]
fn case_i_for_symplectic_sphere() {
    let (ok, w) = caseengine::sphere::sp_sphere(3).unwrap();
    assert!(ok);
    assert_eq!(w["case"], "I");
    assert_eq!(w["rank_data"]["rk_g"].as_u64().unwrap() - w["rank_data"]["rk_h"].as_u64().unwrap(), 1);
}

#[test]
fn sphere_verdicts() {
    let r = caseengine::sphere_report();
    assert_eq!(r.summary.fail, 0);
    assert_eq!(r.summary.skipped, 1);
    assert_eq!(r.get("sphere.5.SpSp1_3").unwrap().witness["case"], "II");
    assert_eq!(r.get("sphere.2.U2").unwrap().witness["flagged_center"], true);
    assert_eq!(r.get("sphere.4.SpU1_3").unwrap().witness["flagged_center"], true);
    let so5 = &r.get("sphere.1.SO5").unwrap().witness["rank_data"];
    assert_eq!((so5["rk_g"].as_u64(), so5["rk_h"].as_u64(), so5["dim_m"].as_u64()), (Some(2), Some(2), Some(4)));
}

#[test]
fn pattern_names_used_in_witnesses() {
    assert_eq!(format_vector(&vec_of("2e1", 3)), "2e1");
}
