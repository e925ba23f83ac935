use rootcase::caseengine::Tables;
use rootcase::model::CaseLabel;
use rootcase::pipeline::{self, Filter, ModelSpec};
use rootcase::report::{Format, Status};
use rootcase::roots::Family;
use rootcase::CartanType;

#[test]
fn every_negative_control_is_caught() {
    let tables = Tables::load().unwrap();
    let r = pipeline::negative_controls(&tables);
    assert_eq!(r.items.len(), 5);
    for it in &r.items {
        assert_eq!(it.status, Status::Pass, "{}: {}", it.id, it.witness);
    }
}

#[test]
fn each_row_appears_once() {
    let tables = Tables::load().unwrap();
    let r = pipeline::tables_report(&tables, Filter::default(), false);
    assert_eq!(r.with_prefix("table2.row").count(), tables.t2.len());
    assert_eq!(r.with_prefix("table3.row").count(), tables.t3.len());
    assert_eq!(r.with_prefix("table5.row").count(), tables.t5.len());
    assert_eq!(r.with_prefix("table4.row").filter(|i| !i.id.ends_with("completion")).count(), tables.t4.len());
    assert_eq!(r.get("table4.row01.completion").unwrap().status, Status::SkippedOutOfScope);
    let failing: Vec<&str> = r.items.iter().filter(|i| i.status == Status::Fail).map(|i| i.id.as_str()).collect();
    assert_eq!(failing, ["table2.row07", "table2.row12", "table6.E8"]);
}

#[test]
fn filter_selects_one_type() {
    let tables = Tables::load().unwrap();
    let t = CartanType::new(Family::B, 4).unwrap();
    let r = pipeline::tables_report(&tables, Filter { ctype: Some(t) }, false);
    let ids: Vec<&str> = r.items.iter().map(|i| i.id.as_str()).collect();
    assert_eq!(
        ids,
        [
            "table2.row02",
            "table2.row03",
            "table2.row04",
            "table3.row01",
            "table5.normalization",
            "table5.row01",
            "table5.row02",
            "table6.B4"
        ]
    );
    assert!(r.ok());
    assert_eq!(r.items[0].witness.as_object().unwrap().keys().collect::<Vec<_>>(), ["B4"]);
}

#[test]
fn seeded_sweep_is_reproducible() {
    let a = pipeline::matrix_report(7).without_timing().render(Format::Json);
    let b = pipeline::matrix_report(7).without_timing().render(Format::Json);
    let c = pipeline::matrix_report(8).without_timing().render(Format::Json);
    assert_eq!(a, b);
    assert_ne!(a, c);
    let r = pipeline::matrix_report(0);
    assert_eq!(r.with_prefix("matrix.sp2.random").count(), 20);
    assert_eq!(r.summary.fail, 0);
}

#[test]
fn even_report_labels() {
    let r = pipeline::even_report();
    assert_eq!(r.summary.fail, 0, "{}", r.render(Format::Tsv));
    assert_eq!(r.get("even.item3.G2").unwrap().witness["membership"]["item"], 3);
    assert_eq!(r.get("even.item2.F4").unwrap().witness["membership"]["item"], 2);
    assert_eq!(r.get("even.item4.C3").unwrap().witness["membership"]["item"], 4);
}

#[test]
fn parity_holds() {
    let tables = Tables::load().unwrap();
    let r = pipeline::parity_report(&tables);
    assert!(r.ok(), "{}", r.render(Format::Tsv));
}

#[test]
fn model_spec_pair_and_regular() {
    let pair = ModelSpec::from_json(r#"{"family": "D", "rank": 4, "alpha": "e1+e2", "beta": "e2-e1"}"#).unwrap();
    let m = pair.build().unwrap();
    assert_eq!(m.classify_case().unwrap(), CaseLabel::III);
    assert_eq!(m.h.h_roots().len(), 18);

    let sp = ModelSpec::from_json(
        r#"{"label": "Sp(3)/Sp(2)", "family": "C", "rank": 3, "m": ["e1"], "h": "±e_i±e_j : 2<=i<j<=n; ±2e_i : i>=2"}"#,
    )
    .unwrap();
    let m = sp.build().unwrap();
    assert_eq!(m.classify_case().unwrap(), CaseLabel::I);
    assert_eq!(m.rank_data().dim_m, 11);
}

#[test]
fn model_spec_rejects_bad_input() {
    assert!(ModelSpec::from_json(r#"{"family": "B", "rank": 3, "colour": 1}"#).is_err());
    let not_root = ModelSpec::from_json(r#"{"family": "B", "rank": 3, "h": "±2e1"}"#).unwrap();
    assert!(matches!(not_root.build(), Err(rootcase::Error::NotARoot(_))));
    let bad_pair = ModelSpec::from_json(r#"{"family": "B", "rank": 3, "alpha": "e1", "beta": "-e1"}"#).unwrap();
    assert!(matches!(bad_pair.build(), Err(rootcase::Error::InvalidPair(_))));
}

#[test]
fn model_spec_diagonal() {
    let spec = ModelSpec::from_json(
        r#"{"family": "B", "rank": 2, "m": ["e1-e2"], "diagonal": [["e1", "e2"], ["-e1", "-e2"]]}"#,
    )
    .unwrap();
    let m = spec.build().unwrap();
    assert_eq!(m.h.diagonal.len(), 2);
    assert_eq!(m.classify_case().unwrap(), CaseLabel::III);
    let skew = ModelSpec::from_json(r#"{"family": "B", "rank": 2, "m": ["e1-e2"], "diagonal": [["e1", "e1+e2"]]}"#).unwrap();
    assert!(skew.build().is_err());
}
