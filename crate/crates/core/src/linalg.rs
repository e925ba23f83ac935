//! Vectors and dense linear algebra over any [`Field`].

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A coordinate vector. Ordering (when `S: Ord`) is lexicographic, first
/// differing coordinate decides.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector { coords: vec![S::zero(); dim] }
    }

    /// Standard basis vector `e_{i+1}` (0-based `i`).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = S::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = S::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.is_zero() && !b.is_zero() {
                acc += &a.mul_ref(b);
            }
        }
        acc
    }

    pub fn checked_dot(&self, other: &Self) -> Result<S> {
        self.check_dim(other)?;
        Ok(self.dot(other))
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn scale(&self, k: &S) -> Self {
        Vector { coords: self.coords.iter().map(|c| c.mul_ref(k)).collect() }
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: &S, other: &Self) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| {
                let mut out = a.clone();
                if !b.is_zero() {
                    out += &k.mul_ref(b);
                }
                out
            })
            .collect();
        Vector { coords }
    }

    pub fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() })
        }
    }

    /// Number of nonzero coordinates.
    pub fn support(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }

    /// Concatenation `self ⊕ other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        Vector { coords }
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.coords[i]
    }
}

impl<S: Scalar> Add for &Vector<S> {
    type Output = Vector<S>;
    fn add(self, o: &Vector<S>) -> Vector<S> {
        debug_assert_eq!(self.dim(), o.dim());
        let coords = self
            .coords
            .iter()
            .zip(&o.coords)
            .map(|(a, b)| {
                let mut out = a.clone();
                out += b;
                out
            })
            .collect();
        Vector { coords }
    }
}

impl<S: Scalar> Sub for &Vector<S> {
    type Output = Vector<S>;
    fn sub(self, o: &Vector<S>) -> Vector<S> {
        debug_assert_eq!(self.dim(), o.dim());
        let coords = self
            .coords
            .iter()
            .zip(&o.coords)
            .map(|(a, b)| {
                let mut out = a.clone();
                out -= b;
                out
            })
            .collect();
        Vector { coords }
    }
}

impl<S: Scalar> Neg for &Vector<S> {
    type Output = Vector<S>;
    fn neg(self) -> Vector<S> {
        Vector { coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }
}

impl<S: Scalar> Add for Vector<S> {
    type Output = Vector<S>;
    fn add(self, o: Vector<S>) -> Vector<S> {
        &self + &o
    }
}

impl<S: Scalar> Sub for Vector<S> {
    type Output = Vector<S>;
    fn sub(self, o: Vector<S>) -> Vector<S> {
        &self - &o
    }
}

impl<S: Scalar> Neg for Vector<S> {
    type Output = Vector<S>;
    fn neg(self) -> Vector<S> {
        -&self
    }
}

impl<S: fmt::Display> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<S: fmt::Display> serde::Serialize for Vector<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.collect_str(self)
    }
}

impl<S: fmt::Display> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<S: Field>(m: &mut [Vec<S>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = row[c].clone();
                for (d, s) in row.iter_mut().zip(&pivot_row) {
                    if !s.is_zero() {
                        *d -= &k.mul_ref(s);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Field>(rows: &[Vec<S>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_of<S: Field>(vs: &[Vector<S>]) -> usize {
    let rows: Vec<Vec<S>> = vs.iter().map(|v| v.coords().to_vec()).collect();
    rank(&rows)
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows.
pub fn nullspace<S: Field>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![S::zero(); ncols];
            x[f] = S::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Solves the square system `A x = b`; `None` when `A` is singular.
pub fn solve<S: Field>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Coefficients of `v` in the span of `basis` (assumed independent), or
/// `None` when `v` is not in that span.
pub fn coords_in_span<S: Field>(basis: &[Vector<S>], v: &Vector<S>) -> Option<Vec<S>> {
    let gram: Vec<Vec<S>> = basis.iter().map(|x| basis.iter().map(|y| x.dot(y)).collect()).collect();
    let rhs: Vec<S> = basis.iter().map(|x| x.dot(v)).collect();
    let c = solve(&gram, &rhs)?;
    let mut back = Vector::zero(v.dim());
    for (ci, bi) in c.iter().zip(basis) {
        back = back.add_scaled(ci, bi);
    }
    (&back == v).then_some(c)
}

/// Orthogonal projection of `v` onto the span of `basis` (independent).
pub fn project<S: Field>(basis: &[Vector<S>], v: &Vector<S>) -> Vector<S> {
    if basis.is_empty() {
        return Vector::zero(v.dim());
    }
    let gram: Vec<Vec<S>> = basis.iter().map(|x| basis.iter().map(|y| x.dot(y)).collect()).collect();
    let rhs: Vec<S> = basis.iter().map(|x| x.dot(v)).collect();
    let c = solve(&gram, &rhs).expect("basis is independent");
    let mut out = Vector::zero(v.dim());
    for (ci, bi) in c.iter().zip(basis) {
        out = out.add_scaled(ci, bi);
    }
    out
}

/// Basis of the orthogonal complement of `sub` inside `span(space)`.
pub fn complement_in<S: Field>(space: &[Vector<S>], sub: &[Vector<S>]) -> Vec<Vector<S>> {
    // x = Σ c_k space_k with ⟨x, s⟩ = 0 for every s in sub
    let rows: Vec<Vec<S>> = sub.iter().map(|s| space.iter().map(|b| b.dot(s)).collect()).collect();
    let dim = space.first().map_or(0, |v| v.dim());
    nullspace(&rows, space.len())
        .into_iter()
        .map(|c| {
            let mut x = Vector::zero(dim);
            for (ci, bi) in c.iter().zip(space) {
                x = x.add_scaled(ci, bi);
            }
            x
        })
        .collect()
}

/// An independent subset spanning the same space, in input order.
pub fn independent_subset<S: Field>(vs: &[Vector<S>]) -> Vec<Vector<S>> {
    let mut out: Vec<Vector<S>> = Vec::new();
    for v in vs {
        let mut trial = out.clone();
        trial.push(v.clone());
        if rank_of(&trial) == trial.len() {
            out = trial;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_ratio(n, 1)
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let s: Q = r.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert_eq!(s, q(0));
        }
    }

    #[test]
    fn solve_square() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(&a, &[q(3), q(5)]).unwrap();
        assert_eq!(x, vec![Q::from_ratio(4, 5), Q::from_ratio(7, 5)]);
        assert!(solve(&[vec![q(1), q(1)], vec![q(2), q(2)]], &[q(1), q(2)]).is_none());
    }

    #[test]
    fn projection_and_complement_f64() {
        let space = vec![Vector::<f64>::unit(3, 0), Vector::unit(3, 1), Vector::unit(3, 2)];
        let sub = vec![Vector::new(vec![1.0, 1.0, 0.0])];
        let comp = complement_in(&space, &sub);
        assert_eq!(comp.len(), 2);
        for c in &comp {
            assert_eq!(c.dot(&sub[0]), 0.0);
        }
        let p = project(&sub, &Vector::new(vec![2.0, 0.0, 5.0]));
        assert_eq!(p, Vector::new(vec![1.0, 1.0, 0.0]));
    }
}
