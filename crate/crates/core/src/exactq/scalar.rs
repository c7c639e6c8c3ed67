use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; zero is `0/1`.
pub type Q = BigRational;

/// Field operations needed by elimination.
///
/// Implementors are exact fields. `zero_like`/`one_like` exist because
/// number-field elements carry their modulus and cannot be conjured from
/// nothing.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn vanishes(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero; callers check first.
    fn inv(&self) -> Self;
    /// Whether two values may share a matrix.
    fn same_kind(&self, _other: &Self) -> bool {
        true
    }
}

impl Scalar for Q {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q, ExactError> {
    let t = s.trim();
    let bad = || ExactError::Parse(format!("not a rational literal: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

/// Serde adapter: a rational as its `p/q` string.
pub mod qstr {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip() {
        assert_eq!(fmt_q(&qf(6, -4)), "-3/2");
        assert_eq!(fmt_q(&q(7)), "7");
        assert_eq!(fmt_q(&qf(0, 5)), "0");
        assert_eq!(parse_q("-3/2").unwrap(), qf(-3, 2));
        assert_eq!(parse_q(" 12 ").unwrap(), q(12));
        assert_eq!(parse_q("4/8").unwrap(), qf(1, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn normal_form() {
        let x = qf(10, -4);
        assert_eq!(x.numer(), &BigInt::from(-5));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(qf(0, -3).denom(), &BigInt::from(1));
    }
}
