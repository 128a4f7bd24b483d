//! The fraction field of [`LaurentInt`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laurent::LaurentInt;
use crate::scalar::{Field, QScalar, Ring};

/// A quotient `num / den` of integer Laurent polynomials in lowest terms.
///
/// Canonical form: `num` and `den` share no nonunit common factor in
/// `Z[q, q^-1]`, `den` has lowest exponent 0 and a positive leading (highest
/// degree) coefficient. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentInt,
    den: LaurentInt,
}

impl RatFunc {
    /// Reduces `num / den` to canonical form. Panics when `den` is zero.
    pub fn new(num: LaurentInt, den: LaurentInt) -> Self {
        assert!(!den.is_zero(), "RatFunc with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            // den = c q^e
            let c = den.dense()[0].clone();
            let e = den.low_exp();
            let g = content(num.dense()).gcd(&c);
            let sign = if c.is_negative() { -BigInt::one() } else { BigInt::one() };
            let num = LaurentInt::from_dense(
                num.low_exp() - e,
                num.dense().iter().map(|x| x / &g * &sign).collect(),
            );
            let den = LaurentInt::constant(c.abs() / g);
            return Self { num, den };
        }
        let shift_num = num.low_exp();
        let shift_den = den.low_exp();
        let a = num.dense().to_vec();
        let b = den.dense().to_vec();
        let g = poly_gcd(&a, &b);
        let mut a = poly_exact_div(&a, &g);
        let mut b = poly_exact_div(&b, &g);
        if b.last().unwrap().is_negative() {
            a.iter_mut().for_each(|c| *c = -c.clone());
            b.iter_mut().for_each(|c| *c = -c.clone());
        }
        Self {
            num: LaurentInt::from_dense(shift_num - shift_den, a),
            den: LaurentInt::from_dense(0, b),
        }
    }

    pub fn numer(&self) -> &LaurentInt {
        &self.num
    }

    pub fn denom(&self) -> &LaurentInt {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is 1.
    pub fn to_laurent(&self) -> Option<LaurentInt> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let num = LaurentInt::from_json(v.get("num")?)?;
        let den = LaurentInt::from_json(v.get("den")?)?;
        (!den.is_zero()).then(|| Self::new(num, den))
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return p.to_vec();
    }
    let sign = if p.last().is_some_and(|l| l.is_negative()) { -1 } else { 1 };
    p.iter().map(|x| x / &c * sign).collect()
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b` (dense, ascending, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        r = trim(r);
    }
    r
}

/// GCD in `Z[x]` of two nonzero dense polynomials, with positive leading
/// coefficient. Powers of `x` are not stripped here; callers pass polynomials
/// with nonzero constant term.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let cont = content(a).gcd(&content(b));
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive_part(&r) };
    }
    let mut g = primitive_part(&x);
    for c in g.iter_mut() {
        *c *= &cont;
    }
    g
}

/// Exact division in `Z[x]`; panics if `b` does not divide `a`.
fn poly_exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        assert!(a.iter().all(Zero::is_zero), "inexact polynomial division");
        return vec![];
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let (quot, rem) = r[i + db].div_rem(&b[db]);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (j, bc) in b.iter().enumerate() {
            r[i + j] -= &quot * bc;
        }
        q[i] = quot;
    }
    assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    q
}

impl From<LaurentInt> for RatFunc {
    fn from(p: LaurentInt) -> Self {
        Self {
            num: p,
            den: LaurentInt::one(),
        }
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        Self::from(LaurentInt::constant(v))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::from(LaurentInt::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from(LaurentInt::one())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from(&self.num + &rhs.num);
            }
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Add for RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;

    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero RatFunc");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;

    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl Ring for RatFunc {
    fn from_i64(v: i64) -> Self {
        Self::from(v)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }
}

impl QScalar for RatFunc {
    type Frac = RatFunc;

    fn q_pow(e: i64) -> Self {
        Self::from(LaurentInt::q_pow(e))
    }

    fn quantum_int(m: i64) -> Self {
        Self::from(LaurentInt::quantum_int(m))
    }

    fn to_frac(&self) -> RatFunc {
        self.clone()
    }

    fn to_json_value(&self) -> serde_json::Value {
        self.to_json()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        Self::from_json(&v).ok_or_else(|| D::Error::custom("expected {\"num\": .., \"den\": ..}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn lp(terms: &[(i64, i64)]) -> LaurentInt {
        LaurentInt::from_terms(terms.iter().copied())
    }

    #[test]
    fn reduces_common_factors() {
        // (q^2 - 1) / (q - 1) = q + 1
        let r = RatFunc::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)]));
        assert_eq!(r, RatFunc::from(lp(&[(1, 1), (0, 1)])));
        // (2q^3) / (4q) = q^2 / 2
        let r = RatFunc::new(lp(&[(3, 2)]), lp(&[(1, 4)]));
        assert_eq!(r.numer(), &lp(&[(2, 1)]));
        assert_eq!(r.denom(), &lp(&[(0, 2)]));
        // sign moves to the numerator
        let r = RatFunc::new(lp(&[(0, 1)]), lp(&[(0, 1), (1, -1)]));
        assert_eq!(r.numer(), &lp(&[(0, -1)]));
        assert_eq!(r.denom(), &lp(&[(0, -1), (1, 1)]));
    }

    #[test]
    fn structural_equality_is_equality() {
        // 1/(q+1) + q/(q+1) = 1
        let d = lp(&[(0, 1), (1, 1)]);
        let a = RatFunc::new(LaurentInt::one(), d.clone());
        let b = RatFunc::new(LaurentInt::q(), d);
        assert_eq!(a + b, RatFunc::one());
        // (q - q^-1) / (q^2 - 1) = q^-1
        let r = RatFunc::new(lp(&[(1, 1), (-1, -1)]), lp(&[(2, 1), (0, -1)]));
        assert_eq!(r, RatFunc::from(LaurentInt::q_pow(-1)));
    }

    #[test]
    fn field_inverse() {
        let x = RatFunc::new(lp(&[(0, 3), (2, -1)]), lp(&[(1, 2), (0, 5)]));
        assert_eq!(&x * &x.inv().unwrap(), RatFunc::one());
        assert!(RatFunc::zero().inv().is_none());
    }

    #[test]
    fn gcd_of_products() {
        let f = lp(&[(0, 1), (1, 1)]);
        let g = lp(&[(0, 2), (1, -3), (2, 1)]);
        let h = lp(&[(0, -1), (3, 1)]);
        let r = RatFunc::new(&f * &h, &g * &h);
        assert_eq!(r, RatFunc::new(f, g));
    }

    #[test]
    fn json_shape() {
        let r = RatFunc::new(LaurentInt::one(), lp(&[(0, 1), (1, 1)]));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"den":{"0":1,"1":1},"num":{"0":1}}"#
        );
    }
}
