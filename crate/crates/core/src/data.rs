//! Bundled table data. Files are compiled in; setting `ROOTCASE_DATA_DIR`
//! makes the loaders read `<dir>/<name>.json` instead.

use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::pattern;
use crate::roots::{AngleClass, CartanType, Family, Vect};

pub const DATA_DIR_ENV: &str = "ROOTCASE_DATA_DIR";

const TABLE2: &str = include_str!("../data/table2.json");
const TABLE3: &str = include_str!("../data/table3.json");
const TABLE4: &str = include_str!("../data/table4.json");
const TABLE5: &str = include_str!("../data/table5.json");
const TABLE6: &str = include_str!("../data/table6.json");
const WALLACH: &str = include_str!("../data/wallach.json");

fn load<T: DeserializeOwned>(name: &str, bundled: &str) -> Result<T> {
    let text = match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => {
            let path = PathBuf::from(dir).join(format!("{name}.json"));
            std::fs::read_to_string(&path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))?
        }
        None => bundled.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Error::Data(format!("{name}: {e}")))
}

/// Rank range shared by all rows.
#[derive(Clone, Debug, Deserialize)]
pub struct RowHead {
    pub no: u32,
    pub family: Family,
    pub min_rank: usize,
    #[serde(default)]
    pub max_rank: Option<usize>,
    pub alpha: String,
    pub beta: String,
}

impl RowHead {
    /// The row's ranks that are verified: the minimum and the next two,
    /// capped at 8 and at the row's own bound.
    pub fn ranks(&self) -> Vec<usize> {
        let top = self.max_rank.unwrap_or(8).min(8).min(self.min_rank + 2);
        (self.min_rank..=top).filter(|&n| CartanType::new(self.family, n).is_ok()).collect()
    }

    pub fn applies(&self, t: CartanType) -> bool {
        t.family == self.family && t.rank >= self.min_rank && self.max_rank.is_none_or(|m| t.rank <= m)
    }

    pub fn alpha_at(&self, t: CartanType) -> Result<Vect> {
        pattern::parse_vector(&self.alpha, t.ambient_dim())
    }

    pub fn beta_at(&self, t: CartanType) -> Result<Vect> {
        pattern::parse_vector(&self.beta, t.ambient_dim())
    }

    pub fn family_label(&self) -> String {
        match self.max_rank {
            Some(m) if m == self.min_rank => format!("{}{}", self.family, m),
            _ => format!("{} n>{}", self.family, self.min_rank - 1),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table2Row {
    #[serde(flatten)]
    pub head: RowHead,
    pub delta: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table3Row {
    #[serde(flatten)]
    pub head: RowHead,
    pub g_prime: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table4Row {
    #[serde(flatten)]
    pub head: RowHead,
    pub h_type: String,
    pub cover: String,
    #[serde(default)]
    pub h_roots: Option<String>,
    #[serde(default)]
    pub forced_regular: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table5Row {
    #[serde(flatten)]
    pub head: RowHead,
    pub h_roots: String,
    /// The listing as printed, when it differs from `h_roots`.
    #[serde(default)]
    pub printed: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table6Row {
    #[serde(flatten)]
    pub head: RowHead,
    pub theta: String,
    pub subcase: String,
}

impl Table6Row {
    pub fn angle(&self) -> Result<AngleClass> {
        self.theta.parse()
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct WallachEntry {
    pub item: u8,
    pub label: String,
    pub family: Family,
    pub min_rank: usize,
    pub max_rank: usize,
    /// Whether the entry is a series valid at every rank `>= min_rank`.
    #[serde(default)]
    pub open: bool,
    pub h_roots: String,
}

impl WallachEntry {
    pub fn scan_ranks(&self) -> std::ops::RangeInclusive<usize> {
        self.min_rank..=self.max_rank
    }

    pub fn covers(&self, t: CartanType) -> bool {
        t.family == self.family && t.rank >= self.min_rank && (self.open || t.rank <= self.max_rank)
    }

    pub fn label_at(&self, rank: usize) -> String {
        if self.open {
            format!("{} n={rank}", self.label)
        } else {
            self.label.clone()
        }
    }
}

pub fn table2() -> Result<Vec<Table2Row>> {
    load("table2", TABLE2)
}

pub fn table3() -> Result<Vec<Table3Row>> {
    load("table3", TABLE3)
}

pub fn table4() -> Result<Vec<Table4Row>> {
    load("table4", TABLE4)
}

pub fn table5() -> Result<Vec<Table5Row>> {
    load("table5", TABLE5)
}

pub fn table6() -> Result<Vec<Table6Row>> {
    load("table6", TABLE6)
}

pub fn wallach() -> Result<Vec<WallachEntry>> {
    load("wallach", WALLACH)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_parse() {
        assert_eq!(table2().unwrap().len(), 15);
        assert_eq!(table3().unwrap().len(), 3);
        assert_eq!(table4().unwrap().len(), 2);
        assert_eq!(table5().unwrap().len(), 6);
        assert_eq!(table6().unwrap().len(), 28);
        assert_eq!(wallach().unwrap().len(), 9);
    }

    #[test]
    fn rank_ranges() {
        let t6 = table6().unwrap();
        assert_eq!(t6[0].head.ranks(), vec![4, 5, 6]);
        assert_eq!(t6[4].head.ranks(), vec![3]);
        assert_eq!(t6[18].head.ranks(), vec![8]);
        assert_eq!(t6[0].head.family_label(), "A n>3");
    }
}
