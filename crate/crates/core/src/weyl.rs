//! Reflections, dominant representatives, pair orbits and outer
//! automorphisms.
//!
//! Group elements are never enumerated. Each simple reflection and each
//! outer map is precomputed as a permutation of root indices; pair orbits
//! are then explored by BFS over index pairs, at most `|Δ|²` states.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactfield::FieldElem;
use crate::linalg::{self, Vector};
use crate::roots::{angle_class, AngleClass, CartanType, Family, RootSystem, Vect};

/// `s_α(v) = v − (2⟨v,α⟩/⟨α,α⟩) α`.
pub fn reflect(alpha: &Vect, v: &Vect) -> Result<Vect> {
    alpha.check_dim(v)?;
    let nn = alpha.norm_sq();
    let inv = nn.inverse().ok_or(Error::ZeroRoot)?;
    let ip = v.dot(alpha);
    if ip.is_zero() {
        return Ok(v.clone());
    }
    let k = &(&ip * &inv) * &FieldElem::from_int(2);
    Ok(v.add_scaled(&-k, alpha))
}

/// The dominant vector in the Weyl orbit of `v`: reflect at a simple root
/// with negative pairing until none remains.
pub fn dominant_rep(rs: &RootSystem, v: &Vect) -> Vect {
    let mut cur = v.clone();
    loop {
        let bad = rs.simple_base().iter().find(|s| cur.dot(s).sign() < 0);
        match bad {
            Some(s) => cur = reflect(s, &cur).expect("simple roots are nonzero"),
            None => return cur,
        }
    }
}

pub fn is_weyl_equivalent(rs: &RootSystem, u: &Vect, v: &Vect) -> bool {
    dominant_rep(rs, u) == dominant_rep(rs, v)
}

/// Fundamental weights `ω_i` with `2⟨ω_i, σ_j⟩/⟨σ_j, σ_j⟩ = δ_ij`.
pub fn fundamental_weights(rs: &RootSystem) -> Vec<Vect> {
    let base = rs.simple_base();
    let gram: Vec<Vec<FieldElem>> = base.iter().map(|x| base.iter().map(|y| x.dot(y)).collect()).collect();
    (0..base.len())
        .map(|i| {
            let rhs: Vec<FieldElem> = base
                .iter()
                .enumerate()
                .map(|(j, s)| if i == j { &s.norm_sq() * &FieldElem::ratio(1, 2) } else { FieldElem::zero() })
                .collect();
            let c = linalg::solve(&gram, &rhs).expect("simple roots are independent");
            let mut w = Vector::zero(rs.ambient_dim());
            for (ci, s) in c.iter().zip(base) {
                w = w.add_scaled(ci, s);
            }
            w
        })
        .collect()
}

/// A linear isometry of `V` permuting `Δ`, outside the Weyl group.
#[derive(Clone, Debug, PartialEq)]
pub struct OuterMap {
    pub name: String,
    pub matrix: Vec<Vec<FieldElem>>,
}

impl OuterMap {
    pub fn apply(&self, v: &Vect) -> Vect {
        Vector::new(self.matrix.iter().map(|row| Vector::new(row.clone()).dot(v)).collect())
    }

    fn scalar(name: &str, dim: usize, k: i64) -> Self {
        let matrix = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { FieldElem::from_int(k) } else { FieldElem::zero() }).collect())
            .collect();
        OuterMap { name: name.into(), matrix }
    }

    fn flip_last(dim: usize) -> Self {
        let mut m = Self::scalar("flip-e_n", dim, 1);
        m.matrix[dim - 1][dim - 1] = FieldElem::from_int(-1);
        m
    }

    pub fn permutes_roots(&self, rs: &RootSystem) -> bool {
        let mut hit = vec![false; rs.len()];
        for r in rs.roots() {
            match rs.index_of(&self.apply(r)) {
                Some(j) if !hit[j] => hit[j] = true,
                _ => return false,
            }
        }
        true
    }

    pub fn preserves_norms(&self, rs: &RootSystem) -> bool {
        rs.roots().iter().all(|r| self.apply(r).norm_sq() == r.norm_sq())
    }

    /// A fundamental weight whose image leaves its Weyl orbit, proving the
    /// map is not a Weyl element.
    pub fn non_weyl_witness(&self, rs: &RootSystem) -> Option<Vect> {
        fundamental_weights(rs).into_iter().find(|w| !is_weyl_equivalent(rs, w, &self.apply(w)))
    }

    pub fn verify(&self, rs: &RootSystem) -> bool {
        self.permutes_roots(rs) && self.preserves_norms(rs) && self.non_weyl_witness(rs).is_some()
    }
}

/// `½` times the symmetric Hadamard matrix: the reflection in
/// `(1,−1,−1,−1)`, which preserves the `D4` roots.
fn d4_triality_candidate() -> OuterMap {
    let s = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
    OuterMap {
        name: "triality".into(),
        matrix: s.iter().map(|row| row.iter().map(|&x| FieldElem::ratio(x, 2)).collect()).collect(),
    }
}

/// Linear maps sending the simple base to itself under some permutation
/// that preserves all pairings, excluding the identity.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<OuterMap> {
    let base = rs.simple_base();
    let n = base.len();
    let gram: Vec<Vec<FieldElem>> = base.iter().map(|x| base.iter().map(|y| x.dot(y)).collect()).collect();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut perms = Vec::new();
    permutations(&mut perm, 0, &mut perms);
    let dim = rs.ambient_dim();
    // Extend the base to a basis of the ambient space with vectors
    // orthogonal to V, which the map fixes.
    let std: Vec<Vect> = (0..dim).map(|i| Vector::unit(dim, i)).collect();
    let perp = linalg::complement_in(&std, base);
    for p in perms.into_iter().skip(1) {
        if (0..n).any(|i| (0..n).any(|j| gram[i][j] != gram[p[i]][p[j]])) {
            continue;
        }
        let mut src: Vec<Vect> = base.to_vec();
        src.extend(perp.iter().cloned());
        let mut dst: Vec<Vect> = p.iter().map(|&k| base[k].clone()).collect();
        dst.extend(perp.iter().cloned());
        // M src_k = dst_k for each k; solve row by row.
        let rows: Vec<Vec<FieldElem>> = src.iter().map(|v| v.coords().to_vec()).collect();
        let matrix: Vec<Vec<FieldElem>> = (0..dim)
            .map(|r| {
                let b: Vec<FieldElem> = dst.iter().map(|v| v[r].clone()).collect();
                linalg::solve(&rows, &b).expect("basis")
            })
            .collect();
        out.push(OuterMap { name: format!("diagram{p:?}"), matrix });
    }
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

/// Outer automorphism generators, each verified to permute `Δ` and to lie
/// outside `W`.
pub fn outer_maps(rs: &RootSystem) -> Vec<OuterMap> {
    let dim = rs.ambient_dim();
    let t = rs.ctype();
    let mut maps = match (t.family, t.rank) {
        (Family::A, n) if n >= 2 => vec![OuterMap::scalar("minus-id", dim, -1)],
        (Family::D, 4) => {
            let mut cand = d4_triality_candidate();
            if !cand.verify(rs) {
                cand = diagram_automorphisms(rs)
                    .into_iter()
                    .find(|m| m.verify(rs) && m.apply(&rs.e(0)).support() > 1)
                    .expect("D4 has a triality automorphism");
            }
            vec![OuterMap::flip_last(dim), cand]
        }
        (Family::D, _) => vec![OuterMap::flip_last(dim)],
        (Family::E, 6) => vec![OuterMap::scalar("minus-id", dim, -1)],
        _ => Vec::new(),
    };
    maps.retain(|m| m.verify(rs));
    maps
}

/// Whether `pair_canonical` adjoins outer maps for this type.
pub fn uses_outer(t: CartanType) -> bool {
    matches!((t.family, t.rank), (Family::D, 4) | (Family::E, 6))
}

/// Root-index permutations induced by the simple reflections and the
/// outer maps of one root system.
pub struct WeylAction {
    rs: Arc<RootSystem>,
    simple: Vec<Vec<usize>>,
    outer: Vec<Vec<usize>>,
}

static ACTIONS: OnceLock<Mutex<HashMap<CartanType, Arc<WeylAction>>>> = OnceLock::new();

impl WeylAction {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let perm_of = |f: &dyn Fn(&Vect) -> Vect| -> Vec<usize> {
            rs.roots().iter().map(|r| rs.index_of(&f(r)).expect("maps roots to roots")).collect()
        };
        let simple = rs
            .simple_base()
            .iter()
            .map(|s| perm_of(&|r: &Vect| reflect(s, r).expect("nonzero")))
            .collect();
        let outer = outer_maps(&rs).iter().map(|m| perm_of(&|r: &Vect| m.apply(r))).collect();
        WeylAction { rs, simple, outer }
    }

    pub fn shared(t: CartanType) -> Arc<WeylAction> {
        let cache = ACTIONS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(a) = cache.lock().expect("cache lock").get(&t) {
            return a.clone();
        }
        let a = Arc::new(WeylAction::new(RootSystem::shared(t)));
        cache.lock().expect("cache lock").entry(t).or_insert(a).clone()
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn simple_perms(&self) -> &[Vec<usize>] {
        &self.simple
    }

    pub fn outer_perms(&self) -> &[Vec<usize>] {
        &self.outer
    }

    fn generators(&self, use_outer: bool) -> impl Iterator<Item = &Vec<usize>> {
        let outer: &[Vec<usize>] = if use_outer { &self.outer } else { &[] };
        self.simple.iter().chain(outer)
    }

    /// Longer root first; equal lengths in increasing lexicographic order.
    pub fn normalize(&self, i: usize, j: usize) -> (usize, usize) {
        let (ni, nj) = (self.rs.norm_sq_of(i), self.rs.norm_sq_of(j));
        if ni > nj || (ni == nj && i < j) {
            (i, j)
        } else {
            (j, i)
        }
    }

    /// Orbit of an unordered index pair, each element normalized.
    pub fn pair_orbit(&self, i: usize, j: usize, use_outer: bool) -> Vec<(usize, usize)> {
        let n = self.rs.len();
        let mut seen = vec![false; n * n];
        let start = self.normalize(i, j);
        seen[start.0 * n + start.1] = true;
        let mut queue = VecDeque::from([start]);
        let mut orbit = vec![start];
        while let Some((a, b)) = queue.pop_front() {
            for g in self.generators(use_outer) {
                let next = self.normalize(g[a], g[b]);
                let key = next.0 * n + next.1;
                if !seen[key] {
                    seen[key] = true;
                    orbit.push(next);
                    queue.push_back(next);
                }
            }
        }
        orbit
    }
}

/// An unordered pair of roots up to the Weyl group (and possibly outer
/// maps), represented by the lexicographically least normalized pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairClass {
    pub ctype: CartanType,
    pub alpha: Vect,
    pub beta: Vect,
    pub used_outer: bool,
}

impl PairClass {
    pub fn angle(&self) -> AngleClass {
        angle_class(&self.alpha, &self.beta).expect("roots of one system")
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {{{}, {}}}", self.ctype, self.alpha, self.beta)
    }
}

fn check_pair(rs: &RootSystem, a: &Vect, b: &Vect) -> Result<(usize, usize)> {
    let i = rs.index_of(a).ok_or_else(|| Error::NotARoot(a.to_string()))?;
    let j = rs.index_of(b).ok_or_else(|| Error::NotARoot(b.to_string()))?;
    if i == j || rs.neg_index(i) == j {
        return Err(Error::InvalidPair(format!("{b} is ±{a}")));
    }
    Ok((i, j))
}

/// Canonical representative of the pair's orbit. Outer maps are adjoined
/// only for `D4` and `E6`, and only when requested.
pub fn pair_canonical(rs: &RootSystem, a: &Vect, b: &Vect, use_outer: bool) -> Result<PairClass> {
    let (i, j) = check_pair(rs, a, b)?;
    let action = WeylAction::shared(rs.ctype());
    let outer = use_outer && uses_outer(rs.ctype());
    let (p, q) = action.pair_orbit(i, j, outer).into_iter().min().expect("orbit is nonempty");
    Ok(PairClass { ctype: rs.ctype(), alpha: rs.root(p).clone(), beta: rs.root(q).clone(), used_outer: outer })
}

/// Every pair class of `Δ` (pairs with `β ≠ ±α`), sorted.
pub fn all_pair_classes(t: CartanType, use_outer: bool) -> Vec<PairClass> {
    let action = WeylAction::shared(t);
    let rs = action.root_system().clone();
    let outer = use_outer && uses_outer(t);
    let n = rs.len();
    let mut seen = vec![false; n * n];
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rs.neg_index(i) == j {
                continue;
            }
            let (a, b) = action.normalize(i, j);
            if seen[a * n + b] {
                continue;
            }
            let orbit = action.pair_orbit(a, b, outer);
            for &(x, y) in &orbit {
                seen[x * n + y] = true;
            }
            let (p, q) = orbit.into_iter().min().expect("nonempty");
            out.push(PairClass { ctype: t, alpha: rs.root(p).clone(), beta: rs.root(q).clone(), used_outer: outer });
        }
    }
    out.sort();
    out
}

/// Cheap invariants of a pair, constant on orbits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairBucket {
    pub norm_alpha: FieldElem,
    pub norm_beta: FieldElem,
    pub angle: AngleClass,
    pub sum_is_root: bool,
    pub diff_is_root: bool,
}

pub fn pair_bucket(rs: &RootSystem, a: &Vect, b: &Vect) -> PairBucket {
    PairBucket {
        norm_alpha: a.norm_sq(),
        norm_beta: b.norm_sq(),
        angle: angle_class(a, b).expect("roots"),
        sum_is_root: rs.contains(&(a + b)),
        diff_is_root: rs.contains(&(a - b)),
    }
}

/// One canonical class per bucket. Sound as a completeness check only for
/// buckets that hold a single class; the full enumeration decides that.
pub fn bucket_representatives(t: CartanType, use_outer: bool) -> Vec<(PairBucket, PairClass)> {
    let action = WeylAction::shared(t);
    let rs = action.root_system().clone();
    let mut first: HashMap<PairBucket, (usize, usize)> = HashMap::new();
    for i in 0..rs.len() {
        for j in i + 1..rs.len() {
            if rs.neg_index(i) == j {
                continue;
            }
            let (a, b) = action.normalize(i, j);
            first.entry(pair_bucket(&rs, rs.root(a), rs.root(b))).or_insert((a, b));
        }
    }
    let mut out: Vec<(PairBucket, PairClass)> = first
        .into_iter()
        .map(|(k, (a, b))| (k, pair_canonical(&rs, rs.root(a), rs.root(b), use_outer).expect("valid pair")))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    fn v(c: &[i64]) -> Vect {
        Vector::new(c.iter().map(|&x| FieldElem::from_int(x)).collect())
    }

    #[test]
    fn reflections() {
        assert_eq!(reflect(&v(&[1, -1]), &v(&[1, 0])).unwrap(), v(&[0, 1]));
        assert_eq!(reflect(&v(&[1, 0]), &v(&[1, 1])).unwrap(), v(&[-1, 1]));
        let a = v(&[1, 2, 0]);
        assert_eq!(reflect(&a, &a).unwrap(), v(&[-1, -2, 0]));
        assert_eq!(reflect(&v(&[0, 0]), &v(&[1, 0])), Err(Error::ZeroRoot));
    }

    #[test]
    fn dominant_examples() {
        let b2 = RootSystem::of(Family::B, 2).unwrap();
        assert_eq!(dominant_rep(&b2, &v(&[-1, 0])), v(&[1, 0]));
        assert_eq!(dominant_rep(&b2, &v(&[0, 0])), v(&[0, 0]));
        assert!(is_weyl_equivalent(&b2, &v(&[1, 0]), &v(&[0, 1])));
        assert!(!is_weyl_equivalent(&b2, &v(&[1, 0]), &v(&[1, 1])));
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        assert!(is_weyl_equivalent(&a2, &v(&[0, 1, -1]), &v(&[-1, 0, 1])));
    }

    #[test]
    fn unordered_pairs_agree() {
        let b3 = RootSystem::of(Family::B, 3).unwrap();
        let (a, b) = (v(&[1, 1, 0]), v(&[0, 0, -1]));
        assert_eq!(pair_canonical(&b3, &a, &b, false).unwrap(), pair_canonical(&b3, &b, &a, false).unwrap());
        assert!(pair_canonical(&b3, &a, &-&a, false).is_err());
    }
}
