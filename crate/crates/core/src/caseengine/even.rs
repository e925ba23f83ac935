//! Equal-rank models: the bad-pair scan and membership in Wallach's list.

use std::collections::BTreeSet;

use serde::Serialize;

use super::subsystem::{subsystem_type, SubsystemType};
use crate::data::WallachEntry;
use crate::error::{Error, Result};
use crate::model::HomModel;
use crate::pattern;
use crate::roots::{CartanType, RootSystem, Vect};

/// Unordered pairs of independent `m`-roots with `α ± β ∉ Δ`, each listed
/// with the larger root first.
pub fn even_pair_scan(model: &HomModel) -> Result<Vec<(Vect, Vect)>> {
    let gap = model.rank_gap();
    if gap != 0 {
        return Err(Error::NotEvenModel(gap));
    }
    let g = model.g();
    let m_roots: Vec<&Vect> = g.roots().iter().filter(|r| !model.h.regular.contains(*r)).collect();
    let mut out = Vec::new();
    for (i, a) in m_roots.iter().enumerate() {
        for b in &m_roots[i + 1..] {
            if *b == &-*a {
                continue;
            }
            if !g.contains(&(*a + *b)) && !g.contains(&(*a - *b)) {
                let (x, y) = if a > b { (a, b) } else { (b, a) };
                out.push(((*x).clone(), (*y).clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub item: u8,
    pub label: String,
}

/// `(type of Δ′, dimension of the center of h)`.
fn signature(t: CartanType, h: &BTreeSet<Vect>) -> Result<(SubsystemType, usize)> {
    let st = subsystem_type(h)?;
    let center = t.rank - st.rank;
    Ok((st, center))
}

/// Matches `Δ′` of an equal-rank simple model against the list by type
/// (with root lengths) and center dimension.
pub fn wallach_membership(model: &HomModel, list: &[WallachEntry]) -> Result<Option<Membership>> {
    let gap = model.rank_gap();
    if gap != 0 {
        return Err(Error::NotEvenModel(gap));
    }
    let comps = model.g().components();
    if comps.len() != 1 || model.g().center_dim() != 0 {
        return Ok(None);
    }
    let t = comps[0].ctype();
    let sig = signature(t, &model.h.regular)?;
    for e in list.iter().filter(|e| e.covers(t)) {
        let reference = pattern::expand_pattern(&e.h_roots, t.ambient_dim(), t.rank)?;
        if signature(t, &reference)? == sig {
            return Ok(Some(Membership { item: e.item, label: e.label_at(t.rank) }));
        }
    }
    Ok(None)
}

/// The model of a list entry at `rank`.
pub fn wallach_model(e: &WallachEntry, rank: usize) -> Result<HomModel> {
    let t = CartanType::new(e.family, rank)?;
    let h = pattern::expand_pattern(&e.h_roots, t.ambient_dim(), rank)?;
    HomModel::even(&e.label_at(rank), RootSystem::shared(t), h)
}
