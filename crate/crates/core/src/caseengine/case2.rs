//! Case II: a diagonal `h`-root across two simple ideals.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::HomModel;
use crate::pattern::format_vector;
use crate::roots::Vect;

#[derive(Clone, Debug, Serialize)]
pub struct ComponentFinding {
    pub component: usize,
    pub ctype: String,
    pub root: String,
    /// A root `δ ≠ ±root` with `⟨δ, root⟩ ≠ 0`; its existence means the
    /// component cannot be `A1`.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case2Report {
    pub first: ComponentFinding,
    pub second: ComponentFinding,
    /// Further components whose roots all pass the ray test, so the whole
    /// ideal lies in `h`.
    pub forced_into_h: Vec<usize>,
    pub contradiction: bool,
}

fn finding(model: &HomModel, k: usize, root: &Vect) -> ComponentFinding {
    let g = model.g();
    let witness = g
        .roots()
        .iter()
        .enumerate()
        .filter(|(i, d)| g.component_of(*i) == k && *d != root && *d != &-root && !d.dot(root).is_zero())
        .map(|(_, d)| d)
        .max()
        .map(format_vector);
    ComponentFinding { component: k, ctype: g.components()[k].ctype().to_string(), root: format_vector(root), witness }
}

pub fn case2_analyze(model: &HomModel) -> Result<Case2Report> {
    let g = model.g();
    let record = model
        .h
        .diagonal
        .iter()
        .find(|d| {
            let comps: BTreeSet<usize> = d.preimages.iter().filter_map(|p| g.index_of(p)).map(|i| g.component_of(i)).collect();
            comps.len() == 2
        })
        .ok_or_else(|| Error::MalformedCase2Model("no diagonal root across two components".into()))?;
    let mut pre = record.preimages.iter();
    let (alpha, beta) = match (pre.next(), pre.next(), pre.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(Error::MalformedCase2Model("diagonal root needs exactly two preimages".into())),
    };
    let comp = |v: &Vect| g.index_of(v).map(|i| g.component_of(i)).expect("preimages are roots");
    let (c1, c2) = (comp(alpha), comp(beta));
    let mut forced_into_h = Vec::new();
    for k in 0..g.components().len() {
        if k == c1 || k == c2 {
            continue;
        }
        let mut all = true;
        for (i, r) in g.roots().iter().enumerate() {
            if g.component_of(i) == k {
                all &= model.frame.split.in_h_part(r) && model.frame.only_root_on_ray(r)?;
            }
        }
        if all {
            forced_into_h.push(k);
        }
    }
    let first = finding(model, c1, alpha);
    let second = finding(model, c2, beta);
    let contradiction = first.witness.is_some() || second.witness.is_some() || !forced_into_h.is_empty();
    Ok(Case2Report { first, second, forced_into_h, contradiction })
}
