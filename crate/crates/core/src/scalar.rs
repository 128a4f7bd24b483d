//! Scalar traits shared by the linear algebra, the module code and the
//! relation checks.
//!
//! Everything is exact. [`Ring`] covers integers and integer Laurent
//! polynomials, [`Field`] their fraction fields, and [`QScalar`] adds the
//! two q-dependent quantities the quantum-group formulas need: powers of `q`
//! and quantum integers. The classical (`q = 1`) instances are `BigInt` and
//! `BigRational`, so the same generic code checks both the quantum and the
//! classical relations.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

pub trait Field: Ring + Div<Output = Self> {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
}

pub trait QScalar: Ring {
    type Frac: Field + QScalar<Frac = Self::Frac>;

    /// `q^e`.
    fn q_pow(e: i64) -> Self;

    /// `[m]_q = (q^m - q^-m) / (q - q^-1)`.
    fn quantum_int(m: i64) -> Self;

    fn to_frac(&self) -> Self::Frac;

    /// JSON form used in module dumps.
    fn to_json_value(&self) -> serde_json::Value;
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl QScalar for BigInt {
    type Frac = BigRational;

    fn q_pow(_e: i64) -> Self {
        BigInt::one()
    }

    fn quantum_int(m: i64) -> Self {
        BigInt::from(m)
    }

    fn to_frac(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn to_json_value(&self) -> serde_json::Value {
        crate::laurent::bigint_to_json(self)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl QScalar for BigRational {
    type Frac = BigRational;

    fn q_pow(_e: i64) -> Self {
        BigRational::one()
    }

    fn quantum_int(m: i64) -> Self {
        BigRational::from_i64(m)
    }

    fn to_frac(&self) -> BigRational {
        self.clone()
    }

    fn to_json_value(&self) -> serde_json::Value {
        if self.is_integer() {
            crate::laurent::bigint_to_json(self.numer())
        } else {
            serde_json::Value::String(self.to_string())
        }
    }
}
