//! Root-level models of a pair `(g, h)`: the Cartan split, the projections,
//! the ray predicates and the forced closure of `h`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::FieldElem;
use crate::linalg::{self, Vector};
use crate::roots::{RootSystem, Vect};

/// `t = (t∩h) ⊕ (t∩m)`, orthogonal.
#[derive(Clone, Debug)]
pub struct CartanSplit {
    t_basis: Vec<Vect>,
    m_basis: Vec<Vect>,
    h_basis: Vec<Vect>,
}

impl CartanSplit {
    /// `m` is spanned by `m_vectors` (dependent vectors are dropped); `h` is
    /// its orthogonal complement inside `span(t_basis)`.
    pub fn new(t_basis: Vec<Vect>, m_vectors: &[Vect]) -> Self {
        let m_basis = linalg::independent_subset(m_vectors);
        let h_basis = linalg::complement_in(&t_basis, &m_basis);
        CartanSplit { t_basis, m_basis, h_basis }
    }

    pub fn t_basis(&self) -> &[Vect] {
        &self.t_basis
    }

    pub fn m_basis(&self) -> &[Vect] {
        &self.m_basis
    }

    pub fn h_basis(&self) -> &[Vect] {
        &self.h_basis
    }

    pub fn rank_g(&self) -> usize {
        self.t_basis.len()
    }

    pub fn rank_h(&self) -> usize {
        self.h_basis.len()
    }

    fn check(&self, v: &Vect) -> Result<()> {
        match self.t_basis.first() {
            Some(b) => b.check_dim(v),
            None => Ok(()),
        }
    }

    pub fn pr_m(&self, v: &Vect) -> Result<Vect> {
        self.check(v)?;
        Ok(linalg::project(&self.m_basis, v))
    }

    pub fn pr_h(&self, v: &Vect) -> Result<Vect> {
        Ok(v - &self.pr_m(v)?)
    }

    pub fn in_h_part(&self, v: &Vect) -> bool {
        self.m_basis.iter().all(|m| m.dot(v).is_zero())
    }

    pub fn in_m_part(&self, v: &Vect) -> bool {
        self.pr_m(v).map(|p| &p == v).unwrap_or(false)
    }
}

/// The roots of a (possibly non-simple) compact `g`, embedded in the
/// direct sum of the components' coordinate spaces plus optional center
/// coordinates.
pub struct GRoots {
    components: Vec<Arc<RootSystem>>,
    offsets: Vec<usize>,
    dim: usize,
    roots: Vec<Vect>,
    comp_of: Vec<usize>,
    index: HashMap<Vect, usize>,
    t_basis: Vec<Vect>,
    center_dim: usize,
}

impl fmt::Debug for GRoots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.components.iter().map(|c| c.ctype().to_string()).collect();
        write!(f, "GRoots({} + center {})", names.join("+"), self.center_dim)
    }
}

impl GRoots {
    pub fn simple(rs: Arc<RootSystem>) -> Arc<GRoots> {
        Arc::new(Self::product(vec![rs], 0, Vec::new()))
    }

    /// `extra` coordinates are appended after the components; `center`
    /// vectors (in the full ambient space, orthogonal to every root) span
    /// the abelian ideal.
    pub fn product(components: Vec<Arc<RootSystem>>, extra: usize, center: Vec<Vect>) -> GRoots {
        let mut offsets = Vec::new();
        let mut dim = 0;
        for c in &components {
            offsets.push(dim);
            dim += c.ambient_dim();
        }
        dim += extra;
        let pad = |k: usize, v: &Vect| -> Vect {
            let mut coords = vec![FieldElem::zero(); dim];
            for (i, x) in v.coords().iter().enumerate() {
                coords[offsets[k] + i] = x.clone();
            }
            Vector::new(coords)
        };
        let mut roots = Vec::new();
        let mut comp_of = Vec::new();
        let mut t_basis = Vec::new();
        for (k, c) in components.iter().enumerate() {
            for r in c.roots() {
                roots.push(pad(k, r));
                comp_of.push(k);
            }
            t_basis.extend(c.space_basis().iter().map(|b| pad(k, b)));
        }
        let center_dim = center.len();
        t_basis.extend(center);
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        GRoots { components, offsets, dim, roots, comp_of, index, t_basis, center_dim }
    }

    pub fn components(&self) -> &[Arc<RootSystem>] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &[Vect] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Vect {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &Vect) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &Vect) -> bool {
        self.index.contains_key(v)
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.comp_of[i]
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    pub fn t_basis(&self) -> &[Vect] {
        &self.t_basis
    }

    /// Embeds a vector of component `k` into the full space.
    pub fn embed(&self, k: usize, v: &Vect) -> Vect {
        let mut coords = vec![FieldElem::zero(); self.dim];
        for (i, x) in v.coords().iter().enumerate() {
            coords[self.offsets[k] + i] = x.clone();
        }
        Vector::new(coords)
    }

    fn root_index(&self, v: &Vect) -> Result<usize> {
        self.index_of(v).ok_or_else(|| Error::NotARoot(v.to_string()))
    }
}

/// An `h`-root whose plane sits diagonally across the planes of several
/// `g`-roots with the same projection.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DiagonalRecord {
    pub image: Vect,
    pub preimages: BTreeSet<Vect>,
}

/// The root data of `h`: regular roots carry a full `g` root plane,
/// diagonal records do not. Both signs are always present.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HRootDatum {
    pub regular: BTreeSet<Vect>,
    pub diagonal: Vec<DiagonalRecord>,
}

impl HRootDatum {
    pub fn regular(roots: impl IntoIterator<Item = Vect>) -> Self {
        HRootDatum { regular: roots.into_iter().collect(), diagonal: Vec::new() }
    }

    /// Every root of `h`: the regular ones and the diagonal images.
    pub fn h_roots(&self) -> BTreeSet<Vect> {
        let mut out = self.regular.clone();
        out.extend(self.diagonal.iter().map(|d| d.image.clone()));
        out
    }

    /// No `g`-root is used twice, and no regular root is also a preimage.
    pub fn is_consistent(&self) -> bool {
        let mut seen = self.regular.clone();
        for d in &self.diagonal {
            for p in &d.preimages {
                if !seen.insert(p.clone()) {
                    return false;
                }
            }
        }
        true
    }
}

/// `m̂_0`: all of `t∩m` plus the root planes of roots inside `t∩m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MHatZero {
    pub dim: usize,
    pub root: Option<Vect>,
}

/// A split Cartan `t = (t∩h) ⊕ (t∩m)` over the roots of `g`, with the
/// predicates that only depend on this geometry.
#[derive(Clone, Debug)]
pub struct Frame {
    pub g: Arc<GRoots>,
    pub split: CartanSplit,
}

/// Status of one projection block: the `g`-roots whose planes lie in `h`,
/// or the preimages of a diagonal `h`-root; every other plane of the block
/// lies in `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BlockStatus {
    regular: BTreeSet<usize>,
    diagonal: Option<BTreeSet<usize>>,
}

impl BlockStatus {
    fn map(&self, f: impl Fn(usize) -> usize) -> BlockStatus {
        BlockStatus {
            regular: self.regular.iter().map(|&i| f(i)).collect(),
            diagonal: self.diagonal.as_ref().map(|d| d.iter().map(|&i| f(i)).collect()),
        }
    }
}

/// Starting data for the forced closure.
#[derive(Clone, Debug, Default)]
pub struct ClosureSeed {
    /// `g`-roots known to have their plane in `h` (negatives implied).
    pub regular: Vec<Vect>,
    /// Sets of `g`-roots spanning one diagonal `h`-root (negatives implied).
    pub diagonal: Vec<Vec<Vect>>,
    /// Whether roots passing the ray test are added.
    pub use_ray_test: bool,
}

impl Frame {
    pub fn new(g: Arc<GRoots>, m_vectors: &[Vect]) -> Self {
        let split = CartanSplit::new(g.t_basis().to_vec(), m_vectors);
        Frame { g, split }
    }

    pub fn pr_h(&self, v: &Vect) -> Result<Vect> {
        self.split.pr_h(v)
    }

    pub fn pr_m(&self, v: &Vect) -> Result<Vect> {
        self.split.pr_m(v)
    }

    /// Roots lying in `t∩h`.
    pub fn roots_in_h_part(&self) -> Vec<Vect> {
        self.g.roots().iter().filter(|r| self.split.in_h_part(r)).cloned().collect()
    }

    pub fn m_hat_zero(&self) -> MHatZero {
        let on_m: Vec<&Vect> = self.g.roots().iter().filter(|r| self.split.in_m_part(r)).collect();
        let root = match self.split.m_basis().first() {
            Some(m0) => on_m.iter().copied().filter(|r| r.dot(m0).sign() > 0).max().cloned(),
            None => None,
        };
        MHatZero { dim: self.split.m_basis().len() + on_m.len(), root }
    }

    /// Ray test: `γ` is the only root in `ℝ_{>0}γ + t∩m`.
    pub fn only_root_on_ray(&self, gamma: &Vect) -> Result<bool> {
        let gi = self.g.root_index(gamma)?;
        if !self.split.in_h_part(gamma) {
            return Err(Error::NotInHPart(gamma.to_string()));
        }
        let mut basis = vec![gamma.clone()];
        basis.extend(self.split.m_basis().iter().cloned());
        for (i, delta) in self.g.roots().iter().enumerate() {
            if i == gi || delta.dot(gamma).sign() <= 0 {
                continue;
            }
            if let Some(c) = linalg::coords_in_span(&basis, delta) {
                if c[0].sign() > 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Odd-multiples test: `δ` is the only root in `(2ℕ−1)δ + t∩m`.
    pub fn only_root_odd_multiples(&self, delta: &Vect) -> Result<bool> {
        let di = self.g.root_index(delta)?;
        if self.pr_h(delta)?.is_zero() {
            return Err(Error::ZeroProjection(delta.to_string()));
        }
        let mut basis = vec![delta.clone()];
        basis.extend(self.split.m_basis().iter().cloned());
        for (i, eps) in self.g.roots().iter().enumerate() {
            if i == di {
                continue;
            }
            if let Some(c) = linalg::coords_in_span(&basis, eps) {
                let p = &c[0];
                let odd_positive = p.sign() > 0
                    && p.as_rational().is_some_and(|q| q.is_integer() && q.to_integer() % 2 != 0.into());
                if odd_positive {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether the plane of `δ` is known to lie in `m` given the closure `h`.
    ///
    /// Either the block of `δ` carries a known `h` part that does not use
    /// `δ`, or the block is `{δ}` alone and `t∩m` moves `δ`: `t∩h` acts
    /// irreducibly on the plane and `[t∩m, 𝔤_{±δ}] ⊂ 𝔪` rules out `h`.
    pub fn plane_in_m(&self, delta: &Vect, h: &HRootDatum) -> Result<bool> {
        self.g.root_index(delta)?;
        let lambda = self.pr_h(delta)?;
        if lambda.is_zero() || h.regular.contains(delta) {
            return Ok(false);
        }
        if h.diagonal.iter().any(|d| d.preimages.contains(delta)) {
            return Ok(false);
        }
        let image_known = h.diagonal.iter().any(|d| d.image == lambda)
            || h.regular.iter().any(|r| self.pr_h(r).is_ok_and(|p| p == lambda));
        if image_known {
            return Ok(true);
        }
        let singleton = self.g.roots().iter().all(|r| r == delta || self.pr_h(r).is_ok_and(|p| p != lambda));
        Ok(singleton && !self.split.in_h_part(delta))
    }

    /// Blocks of roots keyed by their nonzero `h`-projection.
    fn blocks(&self) -> BTreeMap<Vect, Vec<usize>> {
        let mut out: BTreeMap<Vect, Vec<usize>> = BTreeMap::new();
        for (i, r) in self.g.roots().iter().enumerate() {
            let p = self.pr_h(r).expect("same space");
            if !p.is_zero() {
                out.entry(p).or_default().push(i);
            }
        }
        out
    }

    /// Forced closure of `h` at the level of root blocks.
    ///
    /// Seeds and ray-forced roots fix the status of some blocks. A regular
    /// `σ` then transports a known block `B` onto the block `B + σ` when
    /// `ε ↦ ε + σ` is a bijection and no `ε − σ` is a root, since `ad` of a
    /// vector in the plane of `σ` is then an isomorphism preserving `h` and
    /// `m`. Partial overlaps are skipped.
    pub fn forced_closure(&self, seed: &ClosureSeed) -> Result<HRootDatum> {
        let g = &self.g;
        let blocks = self.blocks();
        let neg = |i: usize| g.index_of(&-g.root(i)).expect("Δ = −Δ");
        let image = |i: usize| self.pr_h(g.root(i)).expect("same space");
        let mut status: BTreeMap<Vect, BlockStatus> = BTreeMap::new();

        let set = |status: &mut BTreeMap<Vect, BlockStatus>, key: Vect, st: BlockStatus| -> Result<bool> {
            let neg_key = -&key;
            let neg_st = st.map(neg);
            match status.get(&key) {
                Some(old) if old == &st => Ok(false),
                Some(_) => Err(Error::InconsistentTransport(key.to_string())),
                None => {
                    status.insert(key, st);
                    status.insert(neg_key, neg_st);
                    Ok(true)
                }
            }
        };

        for group in &seed.diagonal {
            let idx: Vec<usize> = group.iter().map(|v| g.root_index(v)).collect::<Result<_>>()?;
            let key = image(idx[0]);
            if idx.iter().any(|&i| image(i) != key) {
                return Err(Error::InvalidPair("diagonal preimages project differently".into()));
            }
            set(&mut status, key, BlockStatus { regular: BTreeSet::new(), diagonal: Some(idx.into_iter().collect()) })?;
        }
        for r in &seed.regular {
            let i = g.root_index(r)?;
            set(&mut status, image(i), BlockStatus { regular: BTreeSet::from([i]), diagonal: None })?;
        }
        if seed.use_ray_test {
            for r in self.roots_in_h_part() {
                if self.only_root_on_ray(&r)? {
                    let i = g.root_index(&r)?;
                    set(&mut status, r, BlockStatus { regular: BTreeSet::from([i]), diagonal: None })?;
                }
            }
        }

        loop {
            let sigmas: BTreeSet<usize> = status.values().flat_map(|s| s.regular.iter().copied()).collect();
            let known: Vec<(Vect, BlockStatus)> = status.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
            let mut changed = false;
            for &s in &sigmas {
                let sigma = g.root(s);
                for (key, st) in &known {
                    let target = key + sigma;
                    if target.is_zero() {
                        continue;
                    }
                    let (Some(src), Some(dst)) = (blocks.get(key), blocks.get(&target)) else { continue };
                    if src.len() != dst.len() {
                        continue;
                    }
                    let shifted: Option<Vec<usize>> = src
                        .iter()
                        .map(|&i| {
                            let r = g.root(i);
                            if g.contains(&(r - sigma)) {
                                None
                            } else {
                                g.index_of(&(r + sigma))
                            }
                        })
                        .collect();
                    let Some(shifted) = shifted else { continue };
                    let map: HashMap<usize, usize> = src.iter().copied().zip(shifted.iter().copied()).collect();
                    let new = st.map(|i| map[&i]);
                    changed |= set(&mut status, target, new)?;
                }
            }
            if !changed {
                break;
            }
        }

        let mut out = HRootDatum::default();
        for (key, st) in &status {
            out.regular.extend(st.regular.iter().map(|&i| g.root(i).clone()));
            if let Some(d) = &st.diagonal {
                out.diagonal.push(DiagonalRecord {
                    image: key.clone(),
                    preimages: d.iter().map(|&i| g.root(i).clone()).collect(),
                });
            }
        }
        out.diagonal.sort();
        Ok(out)
    }
}

/// A same-ideal pair `α ≠ ±β` with `t∩m = ℝ(α − β)`.
#[derive(Clone, Debug)]
pub struct PairModel {
    pub rs: Arc<RootSystem>,
    pub alpha: Vect,
    pub beta: Vect,
    pub frame: Frame,
}

impl PairModel {
    pub fn new(rs: Arc<RootSystem>, alpha: Vect, beta: Vect) -> Result<Self> {
        let i = rs.index_of(&alpha).ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        let j = rs.index_of(&beta).ok_or_else(|| Error::NotARoot(beta.to_string()))?;
        if i == j || rs.neg_index(i) == j {
            return Err(Error::InvalidPair(format!("{beta} is ±{alpha}")));
        }
        let frame = Frame::new(GRoots::simple(rs.clone()), &[&alpha - &beta]);
        Ok(PairModel { rs, alpha, beta, frame })
    }

    pub fn m_direction(&self) -> Vect {
        &self.alpha - &self.beta
    }

    /// `α' = pr_h(α) = pr_h(β)`.
    pub fn alpha_prime(&self) -> Vect {
        self.frame.pr_h(&self.alpha).expect("same space")
    }

    pub fn pr_h(&self, v: &Vect) -> Result<Vect> {
        self.frame.pr_h(v)
    }

    pub fn pr_m(&self, v: &Vect) -> Result<Vect> {
        self.frame.pr_m(v)
    }

    pub fn m_hat_zero(&self) -> MHatZero {
        self.frame.m_hat_zero()
    }

    pub fn only_root_on_ray(&self, gamma: &Vect) -> Result<bool> {
        self.frame.only_root_on_ray(gamma)
    }

    pub fn only_root_odd_multiples(&self, delta: &Vect) -> Result<bool> {
        self.frame.only_root_odd_multiples(delta)
    }

    /// Seed: the diagonal root `α'` over `{α, β}`; then ray-forced roots
    /// and transport.
    pub fn forced_h_closure(&self) -> Result<HRootDatum> {
        self.frame.forced_closure(&ClosureSeed {
            regular: Vec::new(),
            diagonal: vec![vec![self.alpha.clone(), self.beta.clone()]],
            use_ray_test: true,
        })
    }

    pub fn to_hom_model(&self, label: &str, h: HRootDatum) -> HomModel {
        HomModel { label: label.into(), frame: self.frame.clone(), h }
    }
}

/// A general `(g, h)` root datum.
#[derive(Clone, Debug)]
pub struct HomModel {
    pub label: String,
    pub frame: Frame,
    pub h: HRootDatum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankData {
    pub rk_g: usize,
    pub rk_h: usize,
    pub dim_g: usize,
    pub dim_h: usize,
    pub dim_m: usize,
    pub parity_ok: bool,
    pub rank_gap_ok: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    I,
    II,
    III,
}

impl HomModel {
    pub fn new(label: &str, g: Arc<GRoots>, m_vectors: &[Vect], h: HRootDatum) -> Self {
        HomModel { label: label.into(), frame: Frame::new(g, m_vectors), h }
    }

    /// Equal-rank model: `t ⊂ h` and `h` is regular.
    pub fn even(label: &str, rs: Arc<RootSystem>, h_roots: impl IntoIterator<Item = Vect>) -> Result<Self> {
        let h = HRootDatum::regular(h_roots);
        for r in &h.regular {
            if !rs.contains(r) {
                return Err(Error::NotARoot(r.to_string()));
            }
        }
        Ok(Self::new(label, GRoots::simple(rs), &[], h))
    }

    pub fn g(&self) -> &Arc<GRoots> {
        &self.frame.g
    }

    pub fn rank_gap(&self) -> usize {
        self.frame.split.rank_g() - self.frame.split.rank_h()
    }

    pub fn rank_data(&self) -> RankData {
        let rk_g = self.frame.split.rank_g();
        let rk_h = self.frame.split.rank_h();
        let dim_g = rk_g + self.g().len();
        let dim_h = rk_h + self.h.regular.len() + self.h.diagonal.len();
        let dim_m = dim_g - dim_h;
        RankData {
            rk_g,
            rk_h,
            dim_g,
            dim_h,
            dim_m,
            parity_ok: dim_m % 2 == (rk_g - rk_h) % 2,
            rank_gap_ok: rk_g - rk_h <= 1,
        }
    }

    pub fn classify_case(&self) -> Result<CaseLabel> {
        let gap = self.rank_gap();
        if gap != 1 {
            return Err(Error::NotOddModel(gap));
        }
        if self.h.diagonal.is_empty() {
            return Ok(CaseLabel::I);
        }
        let g = self.g();
        let straddles = self.h.diagonal.iter().any(|d| {
            let comps: BTreeSet<usize> =
                d.preimages.iter().filter_map(|p| g.index_of(p)).map(|i| g.component_of(i)).collect();
            comps.len() > 1
        });
        Ok(if straddles { CaseLabel::II } else { CaseLabel::III })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    fn v(c: &[i64]) -> Vect {
        Vector::new(c.iter().map(|&x| FieldElem::from_int(x)).collect())
    }

    fn half(c: &[i64]) -> Vect {
        Vector::new(c.iter().map(|&x| FieldElem::ratio(x, 2)).collect())
    }

    #[test]
    fn projections() {
        let b4 = RootSystem::of(Family::B, 4).unwrap();
        let pm = PairModel::new(b4, v(&[1, 1, 0, 0]), v(&[0, 0, -1, -1])).unwrap();
        assert_eq!(pm.alpha_prime(), half(&[1, 1, -1, -1]));
        assert_eq!(pm.pr_m(&pm.m_direction()).unwrap(), pm.m_direction());
        let d5 = RootSystem::of(Family::D, 5).unwrap();
        let pm = PairModel::new(d5, v(&[1, 1, 0, 0, 0]), v(&[-1, 1, 0, 0, 0])).unwrap();
        assert_eq!(pm.alpha_prime(), v(&[0, 1, 0, 0, 0]));
    }

    #[test]
    fn m_hat_zero_examples() {
        let d4 = RootSystem::of(Family::D, 4).unwrap();
        let pm = PairModel::new(d4, v(&[1, 1, 0, 0]), v(&[-1, 1, 0, 0])).unwrap();
        assert_eq!(pm.m_hat_zero(), MHatZero { dim: 1, root: None });
        let b4 = RootSystem::of(Family::B, 4).unwrap();
        let pm = PairModel::new(b4, v(&[1, 1, 0, 0]), v(&[-1, 1, 0, 0])).unwrap();
        assert_eq!(pm.m_hat_zero(), MHatZero { dim: 3, root: Some(v(&[1, 0, 0, 0])) });
        let c3 = RootSystem::of(Family::C, 3).unwrap();
        let pm = PairModel::new(c3, v(&[2, 0, 0]), v(&[0, -1, -1])).unwrap();
        assert_eq!(pm.m_hat_zero().dim, 1);
    }

    #[test]
    fn ray_examples() {
        let d4 = RootSystem::of(Family::D, 4).unwrap();
        let pm = PairModel::new(d4, v(&[1, 1, 0, 0]), v(&[-1, 1, 0, 0])).unwrap();
        assert!(pm.only_root_on_ray(&v(&[0, 1, 1, 0])).unwrap());
        assert!(pm.only_root_on_ray(&v(&[1, 1, 0, 0])).is_err());
        let b4 = RootSystem::of(Family::B, 4).unwrap();
        let pm = PairModel::new(b4, v(&[1, 1, 0, 0]), v(&[-1, 1, 0, 0])).unwrap();
        assert!(!pm.only_root_on_ray(&v(&[0, 1, 0, 0])).unwrap());
    }

    #[test]
    fn odd_multiple_examples() {
        let b4 = RootSystem::of(Family::B, 4).unwrap();
        let pm = PairModel::new(b4.clone(), v(&[1, 1, 0, 0]), v(&[0, 0, -1, -1])).unwrap();
        assert!(pm.only_root_odd_multiples(&v(&[1, 0, 0, 0])).unwrap());
        let pm = PairModel::new(b4, v(&[1, 1, 0, 0]), v(&[-1, 0, 0, 0])).unwrap();
        assert!(pm.only_root_odd_multiples(&v(&[-1, 1, 0, 0])).unwrap());
    }

    #[test]
    fn rank_data_examples() {
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        let space = a2.space_basis();
        let trivial = HomModel::new("A2/e", GRoots::simple(a2), &space, HRootDatum::default());
        assert!(!trivial.rank_data().rank_gap_ok);
    }
}
