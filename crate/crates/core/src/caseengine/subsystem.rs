//! Identification of root subsystems by their irreducible components.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::FieldElem;
use crate::linalg;
use crate::roots::{Family, Vect};

/// One irreducible component: its type and the squared lengths it uses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComponentType {
    pub family: Family,
    pub rank: usize,
    pub norms: Vec<FieldElem>,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubsystemType {
    pub components: Vec<ComponentType>,
    pub rank: usize,
}

impl SubsystemType {
    pub fn names(&self) -> Vec<String> {
        self.components.iter().map(ToString::to_string).collect()
    }

    pub fn is(&self, family: Family, rank: usize) -> bool {
        self.components.len() == 1 && self.components[0].family == family && self.components[0].rank == rank
    }

    /// Types only, ignoring lengths.
    pub fn shape(&self) -> Vec<(Family, usize)> {
        self.components.iter().map(|c| (c.family, c.rank)).collect()
    }
}

impl fmt::Display for SubsystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", self.names().join("+"))
        }
    }
}

/// Connected components of the graph joining roots with nonzero inner
/// product.
pub fn components(roots: &[Vect]) -> Vec<Vec<Vect>> {
    let n = roots.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(roots[i].clone());
            for j in 0..n {
                if comp[j] == usize::MAX && !roots[i].dot(&roots[j]).is_zero() {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort();
        out.push(members);
    }
    out
}

fn identify_component(roots: &[Vect]) -> Option<ComponentType> {
    let rows: Vec<Vec<FieldElem>> = roots.iter().map(|r| r.coords().to_vec()).collect();
    let r = linalg::rank(&rows);
    let n = roots.len();
    let norms: BTreeSet<FieldElem> = roots.iter().map(Vect::norm_sq).collect();
    let norms: Vec<FieldElem> = norms.into_iter().collect();
    let (family, rank) = match norms.len() {
        1 => {
            if n == r * (r + 1) {
                (Family::A, r)
            } else if r >= 4 && n == 2 * r * (r - 1) {
                (Family::D, r)
            } else if (r, n) == (6, 72) || (r, n) == (7, 126) || (r, n) == (8, 240) {
                (Family::E, r)
            } else {
                return None;
            }
        }
        2 => {
            let ratio = &norms[1] * &norms[0].inverse()?;
            let short = roots.iter().filter(|v| v.norm_sq() == norms[0]).count();
            if ratio == FieldElem::from_int(3) && (r, n) == (2, 12) {
                (Family::G, 2)
            } else if ratio != FieldElem::from_int(2) {
                return None;
            } else if (r, n) == (4, 48) {
                (Family::F, 4)
            } else if n == 2 * r * r && (r == 2 || short == 2 * r) {
                (Family::B, r)
            } else if n == 2 * r * r && short == 2 * r * (r - 1) {
                (Family::C, r)
            } else {
                return None;
            }
        }
        _ => return None,
    };
    Some(ComponentType { family, rank, norms })
}

/// Type of a symmetric root subsystem, with `C2 = B2`, `D3 = A3` and
/// `D2 = A1+A1` normalized.
pub fn subsystem_type(roots: &BTreeSet<Vect>) -> Result<SubsystemType> {
    let list: Vec<Vect> = roots.iter().cloned().collect();
    let mut comps = Vec::new();
    for c in components(&list) {
        comps.push(identify_component(&c).ok_or_else(|| {
            Error::Data(format!("unrecognized component with {} roots", c.len()))
        })?);
    }
    comps.sort();
    let rows: Vec<Vec<FieldElem>> = list.iter().map(|r| r.coords().to_vec()).collect();
    Ok(SubsystemType { components: comps, rank: linalg::rank(&rows) })
}

/// `−S = S`, and `a + b ∈ Δ` forces `a + b ∈ S`.
pub fn is_closed_symmetric(set: &BTreeSet<Vect>, in_delta: impl Fn(&Vect) -> bool) -> bool {
    set.iter().all(|a| set.contains(&-a))
        && set.iter().all(|a| set.iter().all(|b| {
            let s = a + b;
            s.is_zero() || !in_delta(&s) || set.contains(&s)
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystem;

    fn of(f: Family, n: usize) -> BTreeSet<Vect> {
        RootSystem::of(f, n).unwrap().roots().iter().cloned().collect()
    }

    #[test]
    fn full_systems() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::E, 6), (Family::F, 4), (Family::G, 2)] {
            let t = subsystem_type(&of(f, n)).unwrap();
            let expect = if (f, n) == (Family::D, 3) { (Family::A, 3) } else { (f, n) };
            assert_eq!(t.shape(), vec![expect], "{f}{n}");
        }
    }

    #[test]
    fn d_subsystem_of_b2_is_two_a1() {
        let rs = RootSystem::of(Family::B, 2).unwrap();
        let long: BTreeSet<Vect> = rs.roots().iter().filter(|r| r.support() == 2).cloned().collect();
        let t = subsystem_type(&long).unwrap();
        assert_eq!(t.shape(), vec![(Family::A, 1), (Family::A, 1)]);
        assert!(is_closed_symmetric(&long, |v| rs.contains(v)));
    }
}
