//! Exact arithmetic in ℚ(√2, √3).
//!
//! Every coordinate of the classical and exceptional root systems in the
//! orthonormal conventions used here lies in this field (E6 and G2 need √3,
//! E7 needs √2), so all downstream tests are exact equalities or exact signs.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Arbitrary-precision rational.
pub type Rational = BigRational;

/// `a + b√2 + c√3 + d√6` with rational coefficients.
///
/// `BigRational` keeps each component in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn rat_sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl FieldElem {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        FieldElem { a, b, c, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        FieldElem {
            a,
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(rat(p, q))
    }

    pub fn sqrt2() -> Self {
        FieldElem::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt3() -> Self {
        FieldElem::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn sqrt6() -> Self {
        FieldElem::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    /// Coefficients on the basis `1, √2, √3, √6`.
    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElem {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    /// Exact sign under the embedding with √2, √3 > 0.
    ///
    /// Zero is decided componentwise. Otherwise rational enclosures of √2,
    /// √3 and √6 are tightened one decimal digit per round until the
    /// enclosure of the value excludes zero, which happens for every nonzero
    /// element because 1, √2, √3, √6 are linearly independent over ℚ.
    pub fn sign(&self) -> i8 {
        if self.is_rational() {
            return rat_sign(&self.a);
        }
        let mut scale = BigInt::one();
        let ten = BigInt::from(10);
        loop {
            scale *= &ten;
            let sq = &scale * &scale;
            let mut lo = self.a.clone();
            let mut hi = self.a.clone();
            for (coef, radicand) in [(&self.b, 2), (&self.c, 3), (&self.d, 6)] {
                if coef.is_zero() {
                    continue;
                }
                let floor = (&sq * BigInt::from(radicand)).sqrt();
                let r_lo = Rational::new(floor.clone(), scale.clone());
                let r_hi = Rational::new(floor + 1, scale.clone());
                if coef.is_positive() {
                    lo += coef * &r_lo;
                    hi += coef * &r_hi;
                } else {
                    lo += coef * &r_hi;
                    hi += coef * &r_lo;
                }
            }
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
        }
    }

    /// Multiplicative inverse via Galois conjugates: writing
    /// `x = p + q√3` with `p, q ∈ ℚ(√2)`, `x(p − q√3) = r + s√2` and
    /// `(r + s√2)(r − s√2) ∈ ℚ`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.a.recip()));
        }
        let conj3 = FieldElem::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d);
        let partial = self * &conj3;
        debug_assert!(partial.c.is_zero() && partial.d.is_zero());
        let conj2 = FieldElem::new(partial.a.clone(), -&partial.b, Rational::zero(), Rational::zero());
        let norm = &partial * &conj2;
        let n = norm.as_rational().expect("norm lies in Q").clone();
        Some((&conj3 * &conj2).scale(&n.recip()))
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &Rational| <Rational as Scalar>::to_f64(r);
        f(&self.a)
            + f(&self.b) * std::f64::consts::SQRT_2
            + f(&self.c) * 3f64.sqrt()
            + f(&self.d) * 6f64.sqrt()
    }

    /// Decimal rendering for human-facing reports.
    pub fn to_decimal(&self, digits: usize) -> String {
        format!("{:.*}", digits, self.to_f64())
    }
}

impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coef, unit) in [(&self.a, ""), (&self.b, "r2"), (&self.c, "r3"), (&self.d, "r6")] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            match (unit.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{unit}")?,
                (false, false) => write!(f, "{mag}*{unit}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts the `a+b*r2+c*r3+d*r6` form with any subset of terms, in any
/// order; a unit coefficient may be omitted (`-r3`, `1/2*r6`).
impl FromStr for FieldElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut out = FieldElem::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'+' => (false, &term[1..]),
                b'-' => (true, &term[1..]),
                _ => (false, term),
            };
            let (coef_str, unit) = match body.find('r') {
                Some(pos) => (body[..pos].trim_end_matches('*'), &body[pos..]),
                None => (body, ""),
            };
            let mut coef = if coef_str.is_empty() {
                if unit.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                Rational::one()
            } else {
                parse_rational(coef_str)?
            };
            if neg {
                coef = -coef;
            }
            let slot = match unit {
                "" => &mut out.a,
                "r2" => &mut out.b,
                "r3" => &mut out.c,
                "r6" => &mut out.d,
                other => return Err(Error::Parse(format!("unknown radical {other:?} in {s:?}"))),
            };
            *slot += coef;
        }
        Ok(out)
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl One for FieldElem {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.is_rational() && other.is_rational() {
            return self.a.cmp(&other.a);
        }
        (self - other).sign().cmp(&0)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        FieldElem {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        FieldElem {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        if o.is_rational() {
            return self.scale(&o.a);
        }
        if self.is_rational() {
            return o.scale(&self.a);
        }
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let two = rat(2, 1);
        let three = rat(3, 1);
        let six = rat(6, 1);
        // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2
        FieldElem {
            a: a1 * a2 + &two * (b1 * b2) + &three * (c1 * c2) + &six * (d1 * d2),
            b: a1 * b2 + b1 * a2 + &three * (c1 * d2 + d1 * c2),
            c: a1 * c2 + c1 * a2 + &two * (b1 * d2 + d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                (&self).$m(o)
            }
        }
        impl<'a> $atr<&'a FieldElem> for FieldElem {
            fn $am(&mut self, o: &FieldElem) {
                *self = (&*self).$m(o);
            }
        }
        impl $atr for FieldElem {
            fn $am(&mut self, o: FieldElem) {
                *self = (&*self).$m(&o);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Scalar for FieldElem {
    fn sign(&self) -> i8 {
        FieldElem::sign(self)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        FieldElem::ratio(num, den)
    }

    fn to_f64(&self) -> f64 {
        FieldElem::to_f64(self)
    }
}

impl Field for FieldElem {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn basis_products() {
        assert_eq!(FieldElem::sqrt2() * FieldElem::sqrt3(), FieldElem::sqrt6());
        assert_eq!(FieldElem::sqrt6() * FieldElem::sqrt2(), fe("2*r3"));
        assert_eq!(FieldElem::sqrt6() * FieldElem::sqrt3(), fe("3*r2"));
        assert_eq!(fe("1+r2") * fe("1-r2"), fe("-1"));
        let half_r3 = fe("1/2*r3");
        assert_eq!(&half_r3 * &half_r3, fe("3/4"));
    }

    #[test]
    fn signs() {
        assert_eq!(FieldElem::zero().sign(), 0);
        assert_eq!(fe("3-2*r2").sign(), 1);
        assert_eq!(fe("1+r2+r3-r6").sign(), 1);
        assert_eq!(fe("-3+2*r2").sign(), -1);
        // 5 - 2√6 = (√3 - √2)² ≈ 0.101
        assert_eq!(fe("5-2*r6").sign(), 1);
        assert_eq!(fe("r2+r3-r6-1/2").sign(), 1);
    }

    #[test]
    fn parse_and_display() {
        let x = fe("1/2 - 3*r2 + r6");
        assert_eq!(x.to_string(), "1/2-3*r2+r6");
        assert_eq!(fe(&x.to_string()), x);
        assert_eq!(fe("-r3").to_string(), "-r3");
        assert_eq!(fe("r3+r3"), fe("2*r3"));
        assert!("1+r5".parse::<FieldElem>().is_err());
        assert!("".parse::<FieldElem>().is_err());
        assert!("1/0".parse::<FieldElem>().is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for s in ["2", "1+r2", "r3-r2", "1/2+r2-r3+2*r6", "-r6"] {
            let x = fe(s);
            assert_eq!(&x * &x.inverse().unwrap(), FieldElem::one(), "{s}");
        }
        assert!(FieldElem::zero().inverse().is_none());
    }

    #[test]
    fn ordering() {
        let mut xs = [fe("r2"), fe("3/2"), fe("-1"), fe("r3-r2"), fe("0")];
        xs.sort();
        let shown: Vec<_> = xs.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["-1", "0", "-r2+r3", "r2", "3/2"]);
    }
}
