//! Case III: enumeration of same-ideal pairs and the subcase table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::data::{Table2Row, Table3Row, Table4Row, Table5Row, Table6Row};
use crate::error::{Error, Result};
use crate::roots::{AngleClass, CartanType, Family, RootSystem};
use crate::weyl::{self, PairClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Subcase {
    #[serde(rename = "III-A")]
    A,
    #[serde(rename = "III-B")]
    B,
    #[serde(rename = "III-C")]
    C,
    #[serde(rename = "III-D")]
    D,
    #[serde(rename = "III-E")]
    E,
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Subcase::A => "III-A",
            Subcase::B => "III-B",
            Subcase::C => "III-C",
            Subcase::D => "III-D",
            Subcase::E => "III-E",
        };
        f.write_str(s)
    }
}

impl FromStr for Subcase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "III-A" => Ok(Subcase::A),
            "III-B" => Ok(Subcase::B),
            "III-C" => Ok(Subcase::C),
            "III-D" => Ok(Subcase::D),
            "III-E" => Ok(Subcase::E),
            _ => Err(Error::Parse(format!("unknown subcase {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubcaseLabel {
    pub subcase: Subcase,
    pub row: Option<u32>,
}

impl fmt::Display for SubcaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Some(r) => write!(f, "{} (row {r})", self.subcase),
            None => write!(f, "{}", self.subcase),
        }
    }
}

/// Every pair class with its angle.
pub fn enumerate_case3(t: CartanType, use_outer: bool) -> Vec<(PairClass, AngleClass)> {
    weyl::all_pair_classes(t, use_outer).into_iter().map(|pc| {
        let a = pc.angle();
        (pc, a)
    }).collect()
}

fn row_class(rs: &RootSystem, row: &crate::data::RowHead, use_outer: bool) -> Result<PairClass> {
    let t = rs.ctype();
    weyl::pair_canonical(rs, &row.alpha_at(t)?, &row.beta_at(t)?, use_outer)
}

/// `III-A` for `π/3` and `2π/3`; otherwise the subcase of the matching
/// subcase-table row.
pub fn assign_subcase(pc: &PairClass, theta: AngleClass, rows: &[Table6Row]) -> Result<SubcaseLabel> {
    if theta.is_pi3_or_2pi3() {
        return Ok(SubcaseLabel { subcase: Subcase::A, row: None });
    }
    let rs = RootSystem::shared(pc.ctype);
    for row in rows.iter().filter(|r| r.head.applies(pc.ctype)) {
        if row_class(&rs, &row.head, pc.used_outer)? == *pc {
            return Ok(SubcaseLabel { subcase: row.subcase.parse()?, row: Some(row.head.no) });
        }
    }
    Err(Error::UnmatchedPair(pc.to_string()))
}

/// All bundled table rows, used for cross-references.
#[derive(Clone, Debug)]
pub struct Tables {
    pub t2: Vec<Table2Row>,
    pub t3: Vec<Table3Row>,
    pub t4: Vec<Table4Row>,
    pub t5: Vec<Table5Row>,
    pub t6: Vec<Table6Row>,
}

impl Tables {
    pub fn load() -> Result<Self> {
        Ok(Tables {
            t2: crate::data::table2()?,
            t3: crate::data::table3()?,
            t4: crate::data::table4()?,
            t5: crate::data::table5()?,
            t6: crate::data::table6()?,
        })
    }

    /// Row heads of the table that handles `subcase`.
    fn handlers(&self, subcase: Subcase) -> Vec<(&'static str, &crate::data::RowHead)> {
        match subcase {
            Subcase::A => Vec::new(),
            Subcase::B => self.t2.iter().map(|r| ("table2", &r.head)).collect(),
            Subcase::C => self.t3.iter().map(|r| ("table3", &r.head)).collect(),
            Subcase::D => self.t4.iter().map(|r| ("table4", &r.head)).collect(),
            Subcase::E => self.t5.iter().map(|r| ("table5", &r.head)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RowMatch {
    pub row: u32,
    pub class: String,
    pub theta: String,
    pub theta_ok: bool,
    pub subcase: String,
    /// The row of the handling table with the same pair class.
    pub handled_by: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table6Check {
    pub ctype: String,
    pub mode: &'static str,
    pub classes: usize,
    pub rows: Vec<RowMatch>,
    pub classes_without_row: Vec<String>,
    pub shared_classes: Vec<String>,
    pub pass: bool,
}

/// Whether the table's subcase assignment is backed by the handling
/// table. Subcase `III-A` rows must be `G2` rows with `θ ∈ {π/6, π/2}`.
fn handled_by(tables: &Tables, rs: &RootSystem, pc: &PairClass, subcase: Subcase, theta: AngleClass) -> Result<Option<String>> {
    if subcase == Subcase::A {
        let ok = rs.family() == Family::G && matches!(theta, AngleClass::Pi6 | AngleClass::Pi2);
        return Ok(ok.then(|| "G2 angle rule".to_string()));
    }
    for (name, head) in tables.handlers(subcase) {
        if head.applies(rs.ctype()) && row_class(rs, head, pc.used_outer)? == *pc {
            return Ok(Some(format!("{name}.row{}", head.no)));
        }
    }
    Ok(None)
}

/// Bijection between the filtered pair classes of `t` and the applicable
/// subcase rows. Without `deep`, `E8` uses one class per pair bucket.
pub fn verify_table6(t: CartanType, use_outer: bool, deep: bool, tables: &Tables) -> Result<Table6Check> {
    let rs = RootSystem::shared(t);
    let bucket_mode = !deep && t == CartanType::new(Family::E, 8)?;
    let classes: BTreeSet<PairClass> = if bucket_mode {
        weyl::bucket_representatives(t, use_outer)
            .into_iter()
            .filter(|(b, _)| !b.angle.is_pi3_or_2pi3())
            .map(|(_, pc)| pc)
            .collect()
    } else {
        enumerate_case3(t, use_outer).into_iter().filter(|(_, a)| !a.is_pi3_or_2pi3()).map(|(pc, _)| pc).collect()
    };
    let mut rows = Vec::new();
    let mut by_class: BTreeMap<PairClass, Vec<u32>> = BTreeMap::new();
    for row in tables.t6.iter().filter(|r| r.head.applies(t)) {
        let pc = row_class(&rs, &row.head, use_outer)?;
        let theta = pc.angle();
        let subcase: Subcase = row.subcase.parse()?;
        by_class.entry(pc.clone()).or_default().push(row.head.no);
        rows.push(RowMatch {
            row: row.head.no,
            class: pc.to_string(),
            theta: theta.as_str().into(),
            theta_ok: row.angle()? == theta,
            subcase: subcase.to_string(),
            handled_by: handled_by(tables, &rs, &pc, subcase, theta)?,
        });
    }
    let classes_without_row: Vec<String> =
        classes.iter().filter(|c| !by_class.contains_key(c)).map(ToString::to_string).collect();
    let shared_classes: Vec<String> = by_class
        .iter()
        .filter(|(_, rows)| rows.len() > 1)
        .map(|(c, rows)| format!("{c} <- rows {rows:?}"))
        .collect();
    let rows_in_classes = by_class.keys().all(|c| classes.contains(c));
    let pass = classes_without_row.is_empty()
        && shared_classes.is_empty()
        && rows_in_classes
        && rows.iter().all(|r| r.theta_ok && r.handled_by.is_some());
    Ok(Table6Check {
        ctype: t.to_string(),
        mode: if bucket_mode { "bucket" } else { "full" },
        classes: classes.len(),
        rows,
        classes_without_row,
        shared_classes,
        pass,
    })
}

/// Ranks at which the subcase table is checked for each family: the
/// smallest rank any row allows and the next two, capped at 8.
pub fn table6_types(rows: &[Table6Row]) -> Vec<CartanType> {
    let mut min: BTreeMap<Family, usize> = BTreeMap::new();
    for r in rows {
        let e = min.entry(r.head.family).or_insert(r.head.min_rank);
        *e = (*e).min(r.head.min_rank);
    }
    let mut out = Vec::new();
    for (f, m) in min {
        for n in m..=(m + 2).min(8) {
            if let Ok(t) = CartanType::new(f, n) {
                if rows.iter().any(|r| r.head.applies(t)) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subcase_parse() {
        for s in ["III-A", "III-B", "III-C", "III-D", "III-E"] {
            assert_eq!(s.parse::<Subcase>().unwrap().to_string(), s);
        }
        assert!("IV".parse::<Subcase>().is_err());
    }

    #[test]
    fn checked_types() {
        let tables = Tables::load().unwrap();
        let names: Vec<String> = table6_types(&tables.t6).iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            ["A4", "A5", "A6", "B2", "B3", "B4", "C3", "C4", "C5", "D3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]
        );
    }
}
