//! Exact arithmetic: integers, rationals, Laurent polynomials in `u`,
//! truncated power series in `h`, and square matrices over any of them.

mod laurent;
mod matrix;
mod series;

pub use laurent::LaurentPoly;
pub use matrix::{rational_rank, SquareMatrix};
pub use series::{
    constant_term_matrix, exp_series, laurent_matrix_to_series, laurent_to_series,
    series_coefficient_matrix, series_matrix_valuation, TruncSeries,
};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with unit, as used by the matrix layer.
///
/// Elements carry whatever context they need (a truncated series knows its
/// order), so constants are produced from an existing element rather than
/// out of thin air.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }
}

/// A sign `±1`. Used for the substitution branch `u = ±e^h` and for the
/// overall sign of the generator normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `self^e` for any integer exponent.
    pub fn pow(self, e: i64) -> Sign {
        if self == Sign::Minus && e.rem_euclid(2) == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// Serialized as the integer `1` or `-1`.
impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

impl<'de> serde::Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Sign::from_value(v)
            .ok_or_else(|| serde::de::Error::custom(format!("expected 1 or -1, found {v}")))
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("NOT_UNIPOTENT: constant term of the series matrix is not the identity")]
    NotUnipotent,
    #[error("VALUATION_EXCEEDS_ORDER: matrix is congruent to the identity through h^{order}; raise the truncation order")]
    ValuationExceedsOrder { order: usize },
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn int_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
    fn unit_inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn int_like(&self, n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Canonical `p/q` rendering of a rational (denominator always present).
pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if Zero::is_zero(&q) {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_format_round_trip() {
        let q = BigRational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(rational_to_string(&q), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(q));
        assert_eq!(rational_to_string(&BigRational::zero()), "0/1");
        assert_eq!(
            parse_rational("7"),
            Some(BigRational::from_integer(7.into()))
        );
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn sign_powers() {
        assert_eq!(Sign::Minus.pow(3), Sign::Minus);
        assert_eq!(Sign::Minus.pow(-4), Sign::Plus);
        assert_eq!(Sign::Minus.pow(-1), Sign::Minus);
        assert_eq!(Sign::Plus.pow(7), Sign::Plus);
    }
}
