//! Integer Laurent polynomials in one variable `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ratfunc::RatFunc;
use crate::scalar::{QScalar, Ring};

/// An element of `Z[q, q^-1]`.
///
/// Stored densely from the lowest exponent upwards. The coefficient vector
/// never starts or ends with a zero, and the zero polynomial is the empty
/// vector with `low == 0`, so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentInt {
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        Self::from_dense(exp, vec![coeff.into()])
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let map: BTreeMap<i64, BigInt> =
            terms.into_iter().fold(BTreeMap::new(), |mut acc, (e, c)| {
                *acc.entry(e).or_insert_with(BigInt::zero) += c.into();
                acc
            });
        let Some((&low, _)) = map.iter().next() else {
            return Self::zero();
        };
        let high = *map.keys().next_back().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in map {
            coeffs[(e - low) as usize] = c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            low: low + lead as i64,
            coeffs,
        }
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn high_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub(crate) fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_q1(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True if the polynomial is `c * q^e` for a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// `[m]_q = q^{m-1} + q^{m-3} + ... + q^{1-m}`, with `[-m]_q = -[m]_q`.
    pub fn quantum_int(m: i64) -> Self {
        let sign = if m < 0 { -1 } else { 1 };
        let m = m.abs();
        Self::from_terms((0..m).map(|j| (m - 1 - 2 * j, sign)))
    }
}

impl Zero for LaurentInt {
    fn zero() -> Self {
        Self {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentInt {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;

    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (src, off) in [(self, self.low - low), (rhs, rhs.low - low)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                coeffs[i + off as usize] += c;
            }
        }
        LaurentInt::from_dense(low, coeffs)
    }
}

impl Add for LaurentInt {
    type Output = LaurentInt;

    fn add(self, rhs: LaurentInt) -> LaurentInt {
        &self + &rhs
    }
}

impl Neg for LaurentInt {
    type Output = LaurentInt;

    fn neg(self) -> LaurentInt {
        LaurentInt {
            low: self.low,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;

    fn neg(self) -> LaurentInt {
        -self.clone()
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;

    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        self + &(-rhs)
    }
}

impl Sub for LaurentInt {
    type Output = LaurentInt;

    fn sub(self, rhs: LaurentInt) -> LaurentInt {
        &self - &rhs
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;

    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentInt::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentInt {
    type Output = LaurentInt;

    fn mul(self, rhs: LaurentInt) -> LaurentInt {
        &self * &rhs
    }
}

impl From<i64> for LaurentInt {
    fn from(v: i64) -> Self {
        Self::constant(v)
    }
}

impl From<BigInt> for LaurentInt {
    fn from(v: BigInt) -> Self {
        Self::constant(v)
    }
}

impl Ring for LaurentInt {
    fn from_i64(v: i64) -> Self {
        Self::constant(v)
    }
}

impl QScalar for LaurentInt {
    type Frac = RatFunc;

    fn q_pow(e: i64) -> Self {
        LaurentInt::q_pow(e)
    }

    fn quantum_int(m: i64) -> Self {
        LaurentInt::quantum_int(m)
    }

    fn to_frac(&self) -> RatFunc {
        RatFunc::from(self.clone())
    }

    fn to_json_value(&self) -> serde_json::Value {
        self.to_json()
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentInt({self})")
    }
}

pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl LaurentInt {
    /// JSON object `{"exp": coeff, ...}` with string keys.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms()
            .map(|(e, c)| (e.to_string(), bigint_to_json(c)))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let obj = v.as_object()?;
        let mut terms = Vec::with_capacity(obj.len());
        for (k, c) in obj {
            terms.push((k.parse::<i64>().ok()?, bigint_from_json(c)?));
        }
        Some(Self::from_terms(terms))
    }
}

impl Serialize for LaurentInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        Self::from_json(&v).ok_or_else(|| D::Error::custom("expected {\"exp\": coeff} object"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentInt {
        LaurentInt::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(LaurentInt::q() + (-LaurentInt::q()), LaurentInt::zero());
        assert_eq!(
            lp(&[(0, 1), (1, 1)]) + LaurentInt::q_pow(-1),
            lp(&[(-1, 1), (0, 1), (1, 1)])
        );
        assert_eq!(lp(&[(2, 2)]) + lp(&[(2, 3)]), lp(&[(2, 5)]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(LaurentInt::q() * LaurentInt::q_pow(-1), LaurentInt::one());
        assert_eq!(
            lp(&[(0, 1), (1, 1)]) * lp(&[(0, 1), (1, -1)]),
            lp(&[(0, 1), (2, -1)])
        );
        assert!((LaurentInt::zero() * lp(&[(5, 1), (0, 7)])).is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(lp(&[(-1, 1), (0, 1), (1, 1)]).eval_q1(), BigInt::from(3));
        assert_eq!(LaurentInt::zero().eval_q1(), BigInt::zero());
        assert_eq!(lp(&[(3, 1), (1, -1)]).eval_q1(), BigInt::zero());
    }

    #[test]
    fn canonical_form_has_no_zero_ends() {
        let p = lp(&[(-3, 0), (0, 2), (4, 0)]);
        assert_eq!(p.low_exp(), 0);
        assert_eq!(p.high_exp(), Some(0));
        assert_eq!(p, LaurentInt::constant(2));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(LaurentInt::quantum_int(0), LaurentInt::zero());
        assert_eq!(LaurentInt::quantum_int(1), LaurentInt::one());
        assert_eq!(LaurentInt::quantum_int(2), lp(&[(-1, 1), (1, 1)]));
        assert_eq!(LaurentInt::quantum_int(-2), -lp(&[(-1, 1), (1, 1)]));
        // [m] (q - q^-1) = q^m - q^-m
        for m in -4..=4 {
            let lhs = LaurentInt::quantum_int(m) * lp(&[(1, 1), (-1, -1)]);
            assert_eq!(lhs, lp(&[(m, 1), (-m, -1)]));
        }
    }

    #[test]
    fn display_and_json() {
        let p = lp(&[(-1, -1), (0, 2), (1, 1), (3, -4)]);
        assert_eq!(p.to_string(), "-q^-1 + 2 + q - 4q^3");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"-1":-1,"0":2,"1":1,"3":-4}"#);
        let back: LaurentInt = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
