//! Exact quaternion matrices and the bracket certificates for the order-3
//! element of SU(3) and Sp(3) and for the sp(2) escape computation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{rat, Rational};
use crate::linalg;
use crate::scalar::Scalar;

/// `w + x i + y j + z k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn real(w: T) -> Self {
        Quaternion { w, x: T::zero(), y: T::zero(), z: T::zero() }
    }

    pub fn i() -> Self {
        Quaternion::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    pub fn norm_sq(&self) -> T {
        self.w.mul_ref(&self.w) + self.x.mul_ref(&self.x) + self.y.mul_ref(&self.y) + self.z.mul_ref(&self.z)
    }

    pub fn scale(&self, s: &T) -> Self {
        Quaternion::new(self.w.mul_ref(s), self.x.mul_ref(s), self.y.mul_ref(s), self.z.mul_ref(s))
    }

    pub fn is_complex(&self) -> bool {
        self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.w.is_zero()
    }

    pub fn components(&self) -> [T; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

impl<T: Scalar> Zero for Quaternion<T> {
    fn zero() -> Self {
        Quaternion::real(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<T: Scalar> One for Quaternion<T> {
    fn one() -> Self {
        Quaternion::real(T::one())
    }
}

impl<T: Scalar> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Scalar> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<T: Scalar> Mul for Quaternion<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<T: Scalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, o: &Quaternion<T>) -> Quaternion<T> {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a.mul_ref(e) - b.mul_ref(f) - c.mul_ref(g) - d.mul_ref(h),
            a.mul_ref(f) + b.mul_ref(e) + c.mul_ref(h) - d.mul_ref(g),
            a.mul_ref(g) - b.mul_ref(h) + c.mul_ref(e) + d.mul_ref(f),
            a.mul_ref(h) + b.mul_ref(g) - c.mul_ref(f) + d.mul_ref(e),
        )
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, unit) in [(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() < 0;
            let abs = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if wrote {
                write!(f, "+")?;
            }
            if !abs.is_one() || unit.is_empty() {
                write!(f, "{abs}")?;
            }
            write!(f, "{unit}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Square matrix with quaternion entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix<T> {
    n: usize,
    entries: Vec<Quaternion<T>>,
}

impl<T: Scalar> QMatrix<T> {
    pub fn zero(n: usize) -> Self {
        QMatrix { n, entries: vec![Quaternion::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Quaternion::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion<T>>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { left: n, right: rows.iter().map(Vec::len).max().unwrap_or(0) });
        }
        Ok(QMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Real matrix from integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, Quaternion::real(T::from_ratio(x, 1)));
            }
        }
        m
    }

    pub fn diag(d: Vec<Quaternion<T>>) -> Self {
        let mut m = Self::zero(d.len());
        for (i, q) in d.into_iter().enumerate() {
            m.set(i, i, q);
        }
        m
    }

    /// `E_pq`.
    pub fn unit(n: usize, p: usize, q: usize) -> Self {
        let mut m = Self::zero(n);
        m.set(p, q, Quaternion::one());
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion<T> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, q: Quaternion<T>) {
        self.entries[i * self.n + j] = q;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n == o.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.n, right: o.n })
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(QMatrix { n: self.n, entries })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(QMatrix { n: self.n, entries })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Quaternion::zero();
                for k in 0..n {
                    acc = acc + self.get(i, k) * o.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `q · A`, entrywise on the left.
    pub fn left_mul(&self, q: &Quaternion<T>) -> Self {
        QMatrix { n: self.n, entries: self.entries.iter().map(|e| q * e).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        QMatrix { n: self.n, entries: self.entries.iter().map(|e| e.scale(s)).collect() }
    }

    pub fn conj_transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Quaternion<T> {
        (0..self.n).fold(Quaternion::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.conj_transpose() == self.scale(&-T::one())
    }

    pub fn is_complex(&self) -> bool {
        self.entries.iter().all(Quaternion::is_complex)
    }

    /// `su(n)`: complex, anti-Hermitian, traceless.
    pub fn in_su(&self) -> bool {
        self.is_complex() && self.is_anti_hermitian() && self.trace().is_zero()
    }

    /// `sp(n)`: anti-Hermitian.
    pub fn in_sp(&self) -> bool {
        self.is_anti_hermitian()
    }

    /// Real coordinates, four per entry.
    pub fn flatten(&self) -> Vec<T> {
        self.entries.iter().flat_map(Quaternion::components).collect()
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for QMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for QMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Scalar + fmt::Display> Serialize for QMatrix<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub type QuatRat = Quaternion<Rational>;
pub type MatQ = QMatrix<Rational>;

/// `AB − BA`.
pub fn bracket<T: Scalar>(a: &QMatrix<T>, b: &QMatrix<T>) -> Result<QMatrix<T>> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

fn q(w: i64, x: i64, y: i64, z: i64) -> QuatRat {
    Quaternion::new(rat(w, 1), rat(x, 1), rat(y, 1), rat(z, 1))
}

fn rank_of_mats(mats: &[MatQ]) -> usize {
    let rows: Vec<Vec<Rational>> = mats.iter().map(QMatrix::flatten).collect();
    linalg::rank(&rows)
}

/// Dimension of `{x ∈ span(basis) : f(x) = x}` for a linear `f`.
fn fixed_dimension(basis: &[MatQ], f: impl Fn(&MatQ) -> MatQ) -> usize {
    let diffs: Vec<MatQ> = basis.iter().map(|b| f(b).try_sub(b).expect("same size")).collect();
    rank_of_mats(basis) - rank_of_mats(&diffs)
}

/// The cyclic permutation matrix `g`, `g e_j = e_{j−1}`.
pub fn order3_element() -> MatQ {
    QMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
}

/// `Ad(g) x = g x g⁻¹` for a real orthogonal `g`.
pub fn ad_orthogonal(g: &MatQ, x: &MatQ) -> MatQ {
    g.try_mul(x).and_then(|m| m.try_mul(&g.conj_transpose())).expect("same size")
}

pub fn su3_basis() -> Vec<MatQ> {
    let n = 3;
    let i = Quaternion::i();
    let mut out = Vec::new();
    for p in 0..n - 1 {
        out.push(QMatrix::unit(n, p, p).try_sub(&QMatrix::unit(n, p + 1, p + 1)).unwrap().left_mul(&i));
    }
    for p in 0..n {
        for r in p + 1..n {
            out.push(QMatrix::unit(n, p, r).try_sub(&QMatrix::unit(n, r, p)).unwrap());
            out.push(QMatrix::unit(n, p, r).try_add(&QMatrix::unit(n, r, p)).unwrap().left_mul(&i));
        }
    }
    out
}

/// `{E_pp q} ∪ {E_pq − E_qp} ∪ {(E_pq + E_qp) q}` for `q ∈ {i, j, k}`.
pub fn sp_basis(n: usize) -> Vec<MatQ> {
    let units = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let mut out = Vec::new();
    for p in 0..n {
        for u in &units {
            out.push(QMatrix::unit(n, p, p).left_mul(u));
        }
    }
    for p in 0..n {
        for r in p + 1..n {
            out.push(QMatrix::unit(n, p, r).try_sub(&QMatrix::unit(n, r, p)).unwrap());
            for u in &units {
                out.push(QMatrix::unit(n, p, r).try_add(&QMatrix::unit(n, r, p)).unwrap().left_mul(u));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Su3Certificate {
    pub g_cubed_is_identity: bool,
    pub g_in_su3_group: bool,
    pub u_v_in_su3: bool,
    pub u_fixed: bool,
    pub v_fixed: bool,
    pub u_v_commute: bool,
    pub fixed_dim: usize,
    pub u_v_span_fixed: bool,
    pub torus_fixed_dim: usize,
}

impl Su3Certificate {
    pub fn ok(&self) -> bool {
        self.g_cubed_is_identity
            && self.g_in_su3_group
            && self.u_v_in_su3
            && self.u_fixed
            && self.v_fixed
            && self.u_v_commute
            && self.fixed_dim == 2
            && self.u_v_span_fixed
            && self.torus_fixed_dim == 0
    }
}

pub fn su3_u() -> MatQ {
    QMatrix::from_ints(&[&[0, 1, -1], &[-1, 0, 1], &[1, -1, 0]])
}

pub fn su3_v() -> MatQ {
    QMatrix::from_ints(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).left_mul(&Quaternion::i())
}

/// Centralizer of the order-3 element in `su(3)`.
pub fn verify_su3_centralizer() -> Su3Certificate {
    let g = order3_element();
    let id = QMatrix::identity(3);
    let g3 = g.try_mul(&g).and_then(|m| m.try_mul(&g)).unwrap();
    let (u, v) = (su3_u(), su3_v());
    let ad = |x: &MatQ| ad_orthogonal(&g, x);
    let basis = su3_basis();
    let fixed_dim = fixed_dimension(&basis, ad);
    let torus: Vec<MatQ> = basis[..2].to_vec();
    let torus_fixed_dim = fixed_dimension(&torus, ad);
    Su3Certificate {
        g_cubed_is_identity: g3 == id,
        g_in_su3_group: g.try_mul(&g.conj_transpose()).unwrap() == id && det3_real(&g) == rat(1, 1),
        u_v_in_su3: u.in_su() && v.in_su(),
        u_fixed: ad(&u) == u,
        v_fixed: ad(&v) == v,
        u_v_commute: bracket(&u, &v).unwrap().is_zero(),
        fixed_dim,
        u_v_span_fixed: rank_of_mats(&[u, v]) == fixed_dim,
        torus_fixed_dim,
    }
}

fn det3_real(m: &MatQ) -> Rational {
    let e = |i: usize, j: usize| m.get(i, j).w.clone();
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

#[derive(Clone, Debug, Serialize)]
pub struct Sp3Certificate {
    pub basis_size: usize,
    pub fixed_dim: usize,
    pub generators_fixed: bool,
    pub generators_span_fixed: bool,
    pub ideals_commute: bool,
    pub u_central: bool,
    pub v1_closes_as_a1: bool,
    pub v2_closes_as_a1: bool,
    pub diagonal_in_sum: bool,
}

impl Sp3Certificate {
    pub fn ok(&self) -> bool {
        self.basis_size == 21
            && self.fixed_dim == 7
            && self.generators_fixed
            && self.generators_span_fixed
            && self.ideals_commute
            && self.u_central
            && self.v1_closes_as_a1
            && self.v2_closes_as_a1
            && self.diagonal_in_sum
    }
}

pub fn sp3_v1() -> MatQ {
    QMatrix::from_ints(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]])
}

pub fn sp3_v2() -> MatQ {
    QMatrix::from_ints(&[&[-2, 1, 1], &[1, -2, 1], &[1, 1, -2]])
}

/// Centralizer of the order-3 element in `sp(3)`: `Im ℍ v1 ⊕ Im ℍ v2 ⊕ ℝu`.
pub fn verify_sp3_centralizer() -> Sp3Certificate {
    let g = order3_element();
    let ad = |x: &MatQ| ad_orthogonal(&g, x);
    let basis = sp_basis(3);
    let fixed_dim = fixed_dimension(&basis, ad);
    let units: [QuatRat; 3] = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let (v1, v2, u) = (sp3_v1(), sp3_v2(), su3_u());
    let g1: Vec<MatQ> = units.iter().map(|q| v1.left_mul(q)).collect();
    let g2: Vec<MatQ> = units.iter().map(|q| v2.left_mul(q)).collect();
    let mut gens = g1.clone();
    gens.extend(g2.iter().cloned());
    gens.push(u.clone());
    let generators_fixed = gens.iter().all(|x| x.in_sp() && ad(x) == *x);
    let ideals_commute = g1.iter().all(|a| g2.iter().all(|b| bracket(a, b).unwrap().is_zero()));
    let u_central = gens.iter().all(|x| bracket(&u, x).unwrap().is_zero());
    // [i v, j v] = 2k v², and v1² = 3 v1, v2² = −3 v2
    let closes = |v: &MatQ, c: i64| {
        let lhs = bracket(&v.left_mul(&units[0]), &v.left_mul(&units[1])).unwrap();
        lhs == v.left_mul(&units[2]).scale(&rat(c, 1))
    };
    let third = rat(1, 3);
    let diagonal_in_sum = units.iter().all(|q| {
        let qi = QMatrix::identity(3).left_mul(q);
        qi == v1.try_sub(&v2).unwrap().left_mul(q).scale(&third)
    });
    Sp3Certificate {
        basis_size: basis.len(),
        fixed_dim,
        generators_fixed,
        generators_span_fixed: rank_of_mats(&gens) == fixed_dim,
        ideals_commute,
        u_central,
        v1_closes_as_a1: closes(&v1, 6),
        v2_closes_as_a1: closes(&v2, -6),
        diagonal_in_sum,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sp2Escape {
    pub a: String,
    pub h: MatQ,
    pub x: MatQ,
    pub y: MatQ,
    pub xy: MatQ,
    pub members_in_sp2: bool,
    pub y_is_bracket: bool,
    pub closed_form: bool,
    pub escapes: bool,
}

impl Sp2Escape {
    pub fn ok(&self) -> bool {
        self.members_in_sp2 && self.y_is_bracket && self.closed_form && self.escapes
    }
}

/// Builds `H`, `X`, `Y = [H, X]` and checks `[X, Y] ∉ span(H, X, Y)`.
pub fn verify_sp2_escape(a: &QuatRat) -> Result<Sp2Escape> {
    if a.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let i = Quaternion::i();
    let zero = Quaternion::zero();
    let h = QMatrix::diag(vec![i.clone(), zero.clone()]);
    let x = QMatrix::from_rows(vec![vec![zero.clone(), a.clone()], vec![-a.conj(), zero.clone()]])?;
    let y_printed = QMatrix::from_rows(vec![vec![zero.clone(), &i * a], vec![&a.conj() * &i, zero]])?;
    let y = bracket(&h, &x)?;
    let xy = bracket(&x, &y)?;
    let two = rat(2, 1);
    let expected = QMatrix::diag(vec![i.scale(&(a.norm_sq() * &two)), (&(&a.conj() * &i) * a).scale(&-two)]);
    let escapes = rank_of_mats(&[h.clone(), x.clone(), y.clone(), xy.clone()]) == 4;
    Ok(Sp2Escape {
        a: a.to_string(),
        members_in_sp2: h.in_sp() && x.in_sp() && y.in_sp(),
        y_is_bracket: y == y_printed,
        closed_form: xy == expected,
        escapes,
        h,
        x,
        y,
        xy,
    })
}

/// The fixed parameters `1, i, j, ½+½j`.
pub fn sp2_fixed_parameters() -> Vec<QuatRat> {
    vec![
        q(1, 0, 0, 0),
        q(0, 1, 0, 0),
        q(0, 0, 1, 0),
        Quaternion::new(rat(1, 2), rat(0, 1), rat(1, 2), rat(0, 1)),
    ]
}
