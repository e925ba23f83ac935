//! Root systems of the compact simple Lie algebras in orthonormal
//! coordinates.
//!
//! Conventions: `A_n` lives in the sum-zero hyperplane of `ℝ^{n+1}`; every
//! other family of rank `n` lives in `ℝ^n` (E6 in `ℝ^6` with a `√3` last
//! coordinate, E7 in `ℝ^7` with a `√2` last coordinate).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{rat, FieldElem};
use crate::linalg::{self, Vector};
use crate::scalar::Field;
use num_traits::{One, ToPrimitive, Zero};

pub type Vect = Vector<FieldElem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "A" | "a" => Family::A,
            "B" | "b" => Family::B,
            "C" | "c" => Family::C,
            "D" | "d" => Family::D,
            "E" | "e" => Family::E,
            "F" | "f" => Family::F,
            "G" | "g" => Family::G,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A family together with a rank that passes the validity guards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    /// Lower classical ranks are rejected to avoid coincidences such as
    /// `B_1 = A_1`; `D_3` is allowed.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C | Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.to_string(), rank })
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// `|Δ|` by closed form.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::B | Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Accepts `B4`, `E8`, `b 4`.
impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (fam, rank) = s.split_at(1.min(s.len()));
        let rank: usize = rank.trim().parse().map_err(|_| Error::Parse(format!("bad type {s:?}")))?;
        CartanType::new(fam.parse()?, rank)
    }
}

/// Angles that occur between two roots of one simple system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AngleClass {
    Zero,
    Pi6,
    Pi4,
    Pi3,
    Pi2,
    TwoPi3,
    ThreePi4,
    FivePi6,
    Pi,
}

impl AngleClass {
    pub const ALL: [AngleClass; 9] = [
        AngleClass::Zero,
        AngleClass::Pi6,
        AngleClass::Pi4,
        AngleClass::Pi3,
        AngleClass::Pi2,
        AngleClass::TwoPi3,
        AngleClass::ThreePi4,
        AngleClass::FivePi6,
        AngleClass::Pi,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            AngleClass::Zero => "0",
            AngleClass::Pi6 => "pi/6",
            AngleClass::Pi4 => "pi/4",
            AngleClass::Pi3 => "pi/3",
            AngleClass::Pi2 => "pi/2",
            AngleClass::TwoPi3 => "2pi/3",
            AngleClass::ThreePi4 => "3pi/4",
            AngleClass::FivePi6 => "5pi/6",
            AngleClass::Pi => "pi",
        }
    }

    /// The two angles at which `α ± β` is forced to be a root.
    pub fn is_pi3_or_2pi3(&self) -> bool {
        matches!(self, AngleClass::Pi3 | AngleClass::TwoPi3)
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AngleClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('π', "pi");
        AngleClass::ALL
            .into_iter()
            .find(|a| a.as_str() == norm)
            .ok_or_else(|| Error::Parse(format!("bad angle {s:?}")))
    }
}

pub fn inner(u: &Vect, v: &Vect) -> Result<FieldElem> {
    u.checked_dot(v)
}

pub fn norm_sq(u: &Vect) -> FieldElem {
    u.norm_sq()
}

/// Classifies the angle between two nonzero vectors from
/// `r = 4⟨α,β⟩² / (|α|²|β|²)` and the sign of `⟨α,β⟩`.
pub fn angle_class(a: &Vect, b: &Vect) -> Result<AngleClass> {
    let ab = inner(a, b)?;
    let denom = &a.norm_sq() * &b.norm_sq();
    if denom.is_zero() {
        return Err(Error::NotRootAngle("zero vector".into()));
    }
    let r = (&FieldElem::from_int(4) * &(&ab * &ab)).div_ref(&denom).expect("nonzero denominator");
    let ri = match r.as_rational().filter(|q| q.is_integer()).and_then(|q| q.to_integer().to_i64()) {
        Some(k) if (0..=4).contains(&k) => k,
        _ => return Err(Error::NotRootAngle(r.to_string())),
    };
    let positive = ab.sign() > 0;
    Ok(match (ri, positive) {
        (0, _) => AngleClass::Pi2,
        (1, true) => AngleClass::Pi3,
        (2, true) => AngleClass::Pi4,
        (3, true) => AngleClass::Pi6,
        (4, true) => AngleClass::Zero,
        (1, false) => AngleClass::TwoPi3,
        (2, false) => AngleClass::ThreePi4,
        (3, false) => AngleClass::FivePi6,
        _ => AngleClass::Pi,
    })
}

fn fe(p: i64, q: i64) -> FieldElem {
    FieldElem::ratio(p, q)
}

fn vect(coords: Vec<FieldElem>) -> Vect {
    Vector::new(coords)
}

fn e(dim: usize, i: usize) -> Vect {
    Vector::unit(dim, i)
}

/// `±e_i ± e_j` for `i < j < limit` (0-based).
fn pm_pairs(dim: usize, limit: usize, out: &mut Vec<Vect>) {
    for i in 0..limit {
        for j in i + 1..limit {
            for si in [1, -1] {
                for sj in [1, -1] {
                    let mut c = vec![FieldElem::zero(); dim];
                    c[i] = FieldElem::from_int(si);
                    c[j] = FieldElem::from_int(sj);
                    out.push(vect(c));
                }
            }
        }
    }
}

/// Sign patterns over `k` slots: `true` means plus.
fn sign_patterns(k: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << k).map(move |m| (0..k).map(|b| m & (1 << b) == 0).collect())
}

fn raw_roots(t: CartanType) -> Vec<Vect> {
    let n = t.rank;
    let dim = t.ambient_dim();
    let mut out = Vec::new();
    match t.family {
        Family::A => {
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        out.push(&e(dim, i) - &e(dim, j));
                    }
                }
            }
        }
        Family::B | Family::C | Family::D => {
            pm_pairs(dim, n, &mut out);
            let short = match t.family {
                Family::B => Some(1),
                Family::C => Some(2),
                _ => None,
            };
            if let Some(k) = short {
                for i in 0..n {
                    let v = e(dim, i).scale(&FieldElem::from_int(k));
                    out.push(-&v);
                    out.push(v);
                }
            }
        }
        Family::F => {
            pm_pairs(dim, 4, &mut out);
            for i in 0..4 {
                out.push(e(dim, i));
                out.push(-&e(dim, i));
            }
            for signs in sign_patterns(4) {
                out.push(vect(signs.iter().map(|&p| fe(if p { 1 } else { -1 }, 2)).collect()));
            }
        }
        Family::G => {
            let r3h = FieldElem::new(rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1));
            let r3 = FieldElem::sqrt3();
            let mut base = vec![
                vect(vec![FieldElem::one(), FieldElem::zero()]),
                vect(vec![FieldElem::zero(), r3]),
            ];
            for sx in [1, -1] {
                for sy in [1, -1] {
                    let y = r3h.scale(&rat(sy, 1));
                    base.push(vect(vec![fe(sx, 2), y.clone()]));
                    base.push(vect(vec![fe(3 * sx, 2), y]));
                }
            }
            for v in base {
                out.push(-&v);
                out.push(v);
            }
        }
        Family::E => match n {
            6 => {
                pm_pairs(dim, 5, &mut out);
                let r3h = FieldElem::new(rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1));
                for signs in sign_patterns(6) {
                    if signs.iter().filter(|&&p| p).count() % 2 == 1 {
                        let mut c: Vec<FieldElem> = signs[..5].iter().map(|&p| fe(if p { 1 } else { -1 }, 2)).collect();
                        c.push(if signs[5] { r3h.clone() } else { -r3h.clone() });
                        out.push(vect(c));
                    }
                }
            }
            7 => {
                pm_pairs(dim, 6, &mut out);
                let r2 = FieldElem::sqrt2();
                out.push(vect((0..7).map(|i| if i == 6 { r2.clone() } else { FieldElem::zero() }).collect()));
                out.push(vect((0..7).map(|i| if i == 6 { -r2.clone() } else { FieldElem::zero() }).collect()));
                let r2h = FieldElem::new(rat(0, 1), rat(1, 2), rat(0, 1), rat(0, 1));
                for signs in sign_patterns(6) {
                    if signs.iter().filter(|&&p| p).count() % 2 == 0 {
                        for last in [true, false] {
                            let mut c: Vec<FieldElem> = signs.iter().map(|&p| fe(if p { 1 } else { -1 }, 2)).collect();
                            c.push(if last { r2h.clone() } else { -r2h.clone() });
                            out.push(vect(c));
                        }
                    }
                }
            }
            _ => {
                pm_pairs(dim, 8, &mut out);
                for signs in sign_patterns(8) {
                    if signs.iter().filter(|&&p| p).count() % 2 == 0 {
                        out.push(vect(signs.iter().map(|&p| fe(if p { 1 } else { -1 }, 2)).collect()));
                    }
                }
            }
        },
    }
    out
}

fn stated_base(t: CartanType) -> Option<Vec<Vect>> {
    let n = t.rank;
    let dim = t.ambient_dim();
    let chain = |k: usize| (0..k).map(|i| &e(dim, i) - &e(dim, i + 1)).collect::<Vec<_>>();
    match t.family {
        Family::A => Some(chain(n)),
        Family::B => {
            let mut b = chain(n - 1);
            b.push(e(dim, n - 1));
            Some(b)
        }
        Family::C => {
            let mut b = chain(n - 1);
            b.push(e(dim, n - 1).scale(&FieldElem::from_int(2)));
            Some(b)
        }
        Family::D => {
            let mut b = chain(n - 1);
            b.push(&e(dim, n - 2) + &e(dim, n - 1));
            Some(b)
        }
        Family::G => Some(vec![
            vect(vec![FieldElem::one(), FieldElem::zero()]),
            vect(vec![fe(-3, 2), FieldElem::new(rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1))]),
        ]),
        Family::F => Some(vec![
            &e(dim, 1) - &e(dim, 2),
            &e(dim, 2) - &e(dim, 3),
            e(dim, 3),
            vect(vec![fe(1, 2), fe(-1, 2), fe(-1, 2), fe(-1, 2)]),
        ]),
        Family::E => None,
    }
}

/// Simple roots of the positive system `{γ : f(γ) > 0}`: the positive roots
/// that are not a sum of two positive roots. `f` must not vanish on any root.
pub fn base_from_functional(roots: &[Vect], index: &HashMap<Vect, usize>, f: &Vect) -> Vec<Vect> {
    let positive: Vec<&Vect> = roots.iter().filter(|r| r.dot(f).sign() > 0).collect();
    let mut base: Vec<Vect> = positive
        .iter()
        .filter(|&&r| {
            !positive.iter().any(|&p| {
                let rest = r - p;
                rest.dot(f).sign() > 0 && index.contains_key(&rest)
            })
        })
        .map(|&r| r.clone())
        .collect();
    base.sort_by(|a, b| b.cmp(a));
    base
}

/// A weighting that agrees with the lexicographic sign on every root
/// (coordinates of roots are bounded by 2 with denominators at most 2).
fn lex_functional(dim: usize) -> Vect {
    vect((0..dim).map(|i| FieldElem::from_int(10i64.pow((dim - 1 - i) as u32))).collect())
}

/// The root system of a compact simple Lie algebra. Immutable once built;
/// roots are stored in increasing lexicographic order.
pub struct RootSystem {
    ctype: CartanType,
    roots: Vec<Vect>,
    index: HashMap<Vect, usize>,
    negation: Vec<usize>,
    norms: Vec<FieldElem>,
    simple: Vec<Vect>,
    long_norm: FieldElem,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}, {} roots)", self.ctype, self.roots.len())
    }
}

static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<RootSystem>>>> = OnceLock::new();

impl RootSystem {
    pub fn build(ctype: CartanType) -> RootSystem {
        let mut roots = raw_roots(ctype);
        roots.sort();
        roots.dedup();
        let index: HashMap<Vect, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let negation = roots.iter().map(|r| index[&-r]).collect();
        let norms: Vec<FieldElem> = roots.iter().map(|r| r.norm_sq()).collect();
        let long_norm = norms.iter().max().cloned().unwrap_or_else(FieldElem::zero);
        let simple = stated_base(ctype)
            .unwrap_or_else(|| base_from_functional(&roots, &index, &lex_functional(ctype.ambient_dim())));
        RootSystem { ctype, roots, index, negation, norms, simple, long_norm }
    }

    /// Shared, lazily built instance.
    pub fn shared(ctype: CartanType) -> Arc<RootSystem> {
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rs) = cache.lock().expect("cache lock").get(&ctype) {
            return rs.clone();
        }
        let rs = Arc::new(RootSystem::build(ctype));
        cache.lock().expect("cache lock").entry(ctype).or_insert(rs).clone()
    }

    pub fn of(family: Family, rank: usize) -> Result<Arc<RootSystem>> {
        Ok(Self::shared(CartanType::new(family, rank)?))
    }

    pub fn ctype(&self) -> CartanType {
        self.ctype
    }

    pub fn family(&self) -> Family {
        self.ctype.family
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ctype.ambient_dim()
    }

    pub fn roots(&self) -> &[Vect] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, i: usize) -> &Vect {
        &self.roots[i]
    }

    pub fn index_of(&self, v: &Vect) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &Vect) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_root(&self, v: &Vect) -> Result<bool> {
        if v.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { left: v.dim(), right: self.ambient_dim() });
        }
        Ok(self.contains(v))
    }

    pub fn neg_index(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn norm_sq_of(&self, i: usize) -> &FieldElem {
        &self.norms[i]
    }

    pub fn long_norm(&self) -> &FieldElem {
        &self.long_norm
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.norms[i] == self.long_norm
    }

    /// Whether the system has two root lengths.
    pub fn is_simply_laced(&self) -> bool {
        self.norms.iter().all(|n| n == &self.long_norm)
    }

    pub fn simple_base(&self) -> &[Vect] {
        &self.simple
    }

    /// A basis of `V` (the sum-zero hyperplane for `A_n`).
    pub fn space_basis(&self) -> Vec<Vect> {
        let dim = self.ambient_dim();
        match self.family() {
            Family::A => (0..dim - 1).map(|i| &e(dim, i) - &e(dim, i + 1)).collect(),
            _ => (0..dim).map(|i| e(dim, i)).collect(),
        }
    }

    /// Coefficients of `v` on the simple base, if `v` lies in `V`.
    pub fn base_coefficients(&self, v: &Vect) -> Option<Vec<FieldElem>> {
        linalg::coords_in_span(&self.simple, v)
    }

    pub fn e(&self, i: usize) -> Vect {
        e(self.ambient_dim(), i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(f: Family, n: usize) -> Arc<RootSystem> {
        RootSystem::of(f, n).unwrap()
    }

    #[test]
    fn g2_roots() {
        let g = t(Family::G, 2);
        assert_eq!(g.len(), 12);
        assert!(g.contains(&vect(vec![FieldElem::zero(), FieldElem::sqrt3()])));
        assert!(g.contains(&vect(vec![fe(-3, 2), "-1/2*r3".parse().unwrap()])));
    }

    #[test]
    fn a1() {
        let a = t(Family::A, 1);
        assert_eq!(a.roots(), &[vect(vec![fe(-1, 1), fe(1, 1)]), vect(vec![fe(1, 1), fe(-1, 1)])]);
    }

    #[test]
    fn membership() {
        let b3 = t(Family::B, 3);
        assert!(!b3.is_root(&vect(vec![fe(1, 1), fe(1, 1), fe(1, 1)])).unwrap());
        assert!(b3.is_root(&b3.e(0)).unwrap());
        assert!(b3.is_root(&vect(vec![fe(1, 1)])).is_err());
        assert!(!t(Family::C, 3).contains(&b3.e(0)));
    }

    #[test]
    fn angles() {
        let b = t(Family::B, 3);
        let a = &b.e(0) + &b.e(1);
        assert_eq!(angle_class(&a, &-&b.e(0)).unwrap(), AngleClass::ThreePi4);
        assert_eq!(angle_class(&a, &a).unwrap(), AngleClass::Zero);
        let long = vect(vec![fe(3, 2), FieldElem::new(rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1))]);
        let short = vect(vec![fe(1, 1), FieldElem::zero()]);
        assert_eq!(angle_class(&long, &short).unwrap(), AngleClass::Pi6);
        assert_eq!(norm_sq(&long), FieldElem::from_int(3));
        assert!(angle_class(&short, &vect(vec![fe(1, 1), fe(1, 3)])).is_err());
    }

    #[test]
    fn rank_guards() {
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::D, 3).is_ok());
        assert_eq!("E8".parse::<CartanType>().unwrap(), CartanType { family: Family::E, rank: 8 });
    }
}
