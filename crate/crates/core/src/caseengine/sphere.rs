//! Root data of the homogeneous sphere presentations and their verdicts.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde_json::{json, Value};

use super::case2::case2_analyze;
use super::even::even_pair_scan;
use crate::error::Result;
use crate::exactfield::FieldElem;
use crate::linalg::Vector;
use crate::model::{DiagonalRecord, GRoots, HRootDatum, HomModel, PairModel};
use crate::pattern;
use crate::report::{ReportItem, Status, VerificationReport};
use crate::roots::{CartanType, Family, RootSystem, Vect};

fn unit(dim: usize, i: usize) -> Vect {
    let mut c = vec![FieldElem::from_int(0); dim];
    c[i] = FieldElem::from_int(1);
    Vector::new(c)
}

fn rs(f: Family, n: usize) -> Result<Arc<RootSystem>> {
    Ok(RootSystem::shared(CartanType::new(f, n)?))
}

/// `C_{n−1}` on the coordinates `2..=n` of `C_n`, padded to `dim`.
fn c_tail(n: usize, dim: usize) -> Result<BTreeSet<Vect>> {
    let small = pattern::expand_pattern("±e_i±e_j : 2<=i<j<=n; ±2e_i : i>=2", n, n)?;
    Ok(small.into_iter().map(|v| pad(&v, dim)).collect())
}

fn pad(v: &Vect, dim: usize) -> Vect {
    let mut c = v.coords().to_vec();
    c.resize(dim, FieldElem::from_int(0));
    Vector::new(c)
}

fn summary(model: &HomModel) -> Value {
    let rd = model.rank_data();
    json!({
        "label": model.label,
        "rank_data": rd,
        "center_dim": model.g().center_dim(),
        "case": model.classify_case().map(|c| format!("{c:?}")).unwrap_or_else(|e| e.to_string()),
    })
}

fn outcome(r: Result<(bool, Value)>) -> (Status, Value) {
    match r {
        Ok((ok, w)) => (Status::from_bool(ok), w),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    }
}

/// `SO(n)/SO(n−1)`: `(B_k, D_k)` for odd `n = 2k+1`, the forced closure of
/// the `D_k` pair `{e1+e2, e2−e1}` for even `n = 2k`.
pub fn so_sphere(n: usize) -> Result<(bool, Value)> {
    let k = n / 2;
    let model = if n % 2 == 1 {
        let b = rs(Family::B, k)?;
        let h = pattern::expand_pattern("±e_i±e_j : 1<=i<j<=n", k, k)?;
        HomModel::even(&format!("SO({n})/SO({})", n - 1), b, h)?
    } else {
        let d = rs(Family::D, k)?;
        let dim = d.ambient_dim();
        let pm = PairModel::new(d, pattern::parse_vector("e1+e2", dim)?, pattern::parse_vector("e2-e1", dim)?)?;
        let h = pm.forced_h_closure()?;
        pm.to_hom_model(&format!("SO({n})/SO({})", n - 1), h)
    };
    let rd = model.rank_data();
    let mut w = summary(&model);
    let ok = if n % 2 == 1 {
        let bad = even_pair_scan(&model)?;
        w["bad_pairs"] = json!(bad.len());
        rd.rk_g == rd.rk_h && bad.is_empty()
    } else {
        rd.rk_g == rd.rk_h + 1 && model.classify_case().ok() == Some(crate::model::CaseLabel::III)
    };
    Ok((ok && rd.dim_m == n - 1 && rd.parity_ok, w))
}

/// `U(n)/U(n−1)`: `A_{n−1}` plus the center `ℝ(1,…,1)`, `t∩m = ℝe1`.
pub fn u_sphere(n: usize) -> Result<(bool, Value)> {
    let a = rs(Family::A, n - 1)?;
    let center = Vector::new(vec![FieldElem::from_int(1); n]);
    let g = Arc::new(GRoots::product(vec![a], 0, vec![center]));
    let h = pattern::expand_pattern("e_i-e_j : i!=j, i>=2, j>=2", n, n)?;
    let model = HomModel::new(&format!("U({n})/U({})", n - 1), g, &[unit(n, 0)], HRootDatum::regular(h));
    let rd = model.rank_data();
    let flagged = model.g().center_dim() > 0;
    let mut w = summary(&model);
    w["flagged_center"] = json!(flagged);
    Ok((flagged && rd.dim_m == 2 * n - 1 && rd.parity_ok, w))
}

/// `Sp(n)/Sp(n−1)`: `C_n`, `t∩m = ℝe1`, `h = C_{n−1}` regular.
pub fn sp_sphere(n: usize) -> Result<(bool, Value)> {
    let c = rs(Family::C, n)?;
    let h = c_tail(n, n)?;
    let model = HomModel::new(&format!("Sp({n})/Sp({})", n - 1), GRoots::simple(c), &[unit(n, 0)], HRootDatum::regular(h.clone()));
    let mut forced = BTreeSet::new();
    for r in model.frame.roots_in_h_part() {
        if model.frame.only_root_on_ray(&r)? {
            forced.insert(r);
        }
    }
    let rd = model.rank_data();
    let mut w = summary(&model);
    w["ray_forced"] = json!(forced.len());
    let ok = forced.is_subset(&h)
        && model.classify_case().ok() == Some(crate::model::CaseLabel::I)
        && rd.dim_m == 4 * n - 1
        && rd.parity_ok;
    Ok((ok, w))
}

/// `Sp(n)U(1)/Sp(n−1)U(1)`: `C_n` plus a central coordinate `f`,
/// `t∩m = ℝ(e1 − f)`.
pub fn sp_u1_sphere(n: usize) -> Result<(bool, Value)> {
    let c = rs(Family::C, n)?;
    let dim = n + 1;
    let g = Arc::new(GRoots::product(vec![c], 1, vec![unit(dim, n)]));
    let h = c_tail(n, dim)?;
    let m = &unit(dim, 0) - &unit(dim, n);
    let model = HomModel::new(&format!("Sp({n})U(1)/Sp({})U(1)", n - 1), g, &[m], HRootDatum::regular(h));
    let rd = model.rank_data();
    let flagged = model.g().center_dim() > 0;
    let mut w = summary(&model);
    w["flagged_center"] = json!(flagged);
    Ok((flagged && rd.dim_m == 4 * n - 1 && rd.parity_ok, w))
}

/// `Sp(n)Sp(1)/Sp(n−1)Sp(1)`: `C_n ⊕ A_1` with the diagonal root over
/// `{2e1, f1−f2}`.
pub fn sp_sp1_sphere(n: usize) -> Result<(bool, Value)> {
    let c = rs(Family::C, n)?;
    let a1 = rs(Family::A, 1)?;
    let g = Arc::new(GRoots::product(vec![c, a1.clone()], 0, Vec::new()));
    let dim = g.dim();
    let alpha = g.embed(0, &pattern::parse_vector("2e1", n)?);
    let beta = g.embed(1, &a1.roots()[0].clone());
    let m = &alpha - &beta;
    let mut model = HomModel::new(&format!("Sp({n})Sp(1)/Sp({})Sp(1)", n - 1), g, &[m], HRootDatum::regular(c_tail(n, dim)?));
    for s in [1, -1] {
        let sign = FieldElem::from_int(s);
        let (a, b) = (alpha.scale(&sign), beta.scale(&sign));
        let image = model.frame.pr_h(&a)?;
        model.h.diagonal.push(DiagonalRecord { image, preimages: [a, b].into_iter().collect() });
    }
    model.h.diagonal.sort();
    let rd = model.rank_data();
    let report = case2_analyze(&model)?;
    let mut w = summary(&model);
    w["case2"] = json!(report);
    let ok = model.classify_case().ok() == Some(crate::model::CaseLabel::II)
        && report.contradiction
        && rd.dim_m == 4 * n - 1
        && rd.parity_ok;
    Ok((ok, w))
}

/// Every sphere presentation at its checked ranks.
pub fn sphere_report() -> VerificationReport {
    let mut items = Vec::new();
    for n in 5..=8 {
        items.push(ReportItem::timed(format!("sphere.1.SO{n}"), || outcome(so_sphere(n))));
    }
    for n in 2..=3 {
        items.push(ReportItem::timed(format!("sphere.2.U{n}"), || outcome(u_sphere(n))));
    }
    for n in 3..=4 {
        items.push(ReportItem::timed(format!("sphere.3.Sp{n}"), || outcome(sp_sphere(n))));
        items.push(ReportItem::timed(format!("sphere.4.SpU1_{n}"), || outcome(sp_u1_sphere(n))));
        items.push(ReportItem::timed(format!("sphere.5.SpSp1_{n}"), || outcome(sp_sp1_sphere(n))));
    }
    items.push(ReportItem::new(
        "sphere.6.Spin9",
        Status::SkippedOutOfScope,
        json!({
            "label": "Spin(9)/Spin(7)",
            "verdict": "excluded by the Case III-B argument",
            "note": "the isotropy embedding goes through the spin representation and is not a regular subsystem in these coordinates",
        }),
    ));
    VerificationReport::new(items)
}
