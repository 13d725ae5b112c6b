use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, LaurentPoly, Ring, Sign, SquareMatrix};

/// Power series in `h` with exact rational coefficients, truncated after
/// `h^order`. Always stores exactly `order + 1` coefficients.
///
/// Binary operations on series of different orders truncate to the smaller
/// order, so mixing orders is the truncation homomorphism followed by the
/// operation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `h` (zero when `order == 0`).
    pub fn h(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// Coefficients of `h^0, h^1, ...`; missing ones are zero and extra ones
    /// beyond `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `h^j` (zero beyond the order).
    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Least `j` with a nonzero coefficient of `h^j`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplicative inverse, defined when the constant term is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = inv0.clone();
        for j in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=j {
                acc += &self.coeffs[i] * &out[j - i];
            }
            out[j] = -(acc * &inv0);
        }
        Some(Self { coeffs: out })
    }

    fn binary(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let n = self.order().min(rhs.order());
        Self {
            coeffs: (0..=n)
                .map(|j| f(&self.coeffs[j], &rhs.coeffs[j]))
                .collect(),
        }
    }
}

/// `exp(m·h) = Σ_{j ≤ order} (m h)^j / j!`.
pub fn exp_series(m: i64, order: usize) -> TruncSeries {
    let m = BigRational::from_integer(m.into());
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    coeffs.push(term.clone());
    for j in 1..=order {
        term = term * &m / BigRational::from_integer(BigInt::from(j));
        coeffs.push(term.clone());
    }
    TruncSeries { coeffs }
}

/// Substitutes `u = ε·e^h`: `u^m ↦ ε^m · exp(m h)`, truncated at `order`.
///
/// The coefficient of `h^j` is `Σ_m c_m ε^m m^j / j!`, computed with integer
/// power sums and a single division per degree.
pub fn laurent_to_series(p: &LaurentPoly, eps: Sign, order: usize) -> TruncSeries {
    let mut sums = vec![BigInt::zero(); order + 1];
    for (m, c) in p.terms() {
        let signed = match eps.pow(m) {
            Sign::Plus => c.clone(),
            Sign::Minus => -c,
        };
        let base = BigInt::from(m);
        let mut power = signed;
        for slot in sums.iter_mut() {
            *slot += &power;
            power *= &base;
        }
    }
    let mut factorial = BigInt::one();
    let coeffs = sums
        .into_iter()
        .enumerate()
        .map(|(j, s)| {
            if j > 0 {
                factorial *= BigInt::from(j);
            }
            BigRational::new(s, factorial.clone())
        })
        .collect();
    TruncSeries { coeffs }
}

/// Entrywise [`laurent_to_series`].
pub fn laurent_matrix_to_series(
    m: &SquareMatrix<LaurentPoly>,
    eps: Sign,
    order: usize,
) -> SquareMatrix<TruncSeries> {
    m.map(|p| laurent_to_series(p, eps, order))
}

/// Rational matrix of `h^j` coefficients.
pub fn series_coefficient_matrix(
    m: &SquareMatrix<TruncSeries>,
    j: usize,
) -> SquareMatrix<BigRational> {
    m.map(|s| s.coeff(j))
}

/// The `h^0` coefficient matrix.
pub fn constant_term_matrix(m: &SquareMatrix<TruncSeries>) -> SquareMatrix<BigRational> {
    series_coefficient_matrix(m, 0)
}

/// For `M = I + h^k·C + O(h^{k+1})` with `C ≠ 0`, returns `(k, C)`.
pub fn series_matrix_valuation(
    m: &SquareMatrix<TruncSeries>,
) -> Result<(usize, SquareMatrix<BigRational>), AlgebraError> {
    let order = m.get(0, 0).order();
    let identity = SquareMatrix::identity(m.dim(), &BigRational::one());
    if constant_term_matrix(m) != identity {
        return Err(AlgebraError::NotUnipotent);
    }
    for k in 1..=order {
        let c = series_coefficient_matrix(m, k);
        if !c.is_zero() {
            return Ok((k, c));
        }
    }
    Err(AlgebraError::ValuationExceedsOrder { order })
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(h^{})", self.order() + 1)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("({abs})")
            };
            match j {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{coeff}")?;
                    }
                    if j == 1 {
                        write!(f, "h")?;
                    } else {
                        write!(f, "h^{j}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &'a TruncSeries) -> TruncSeries {
        self.binary(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &'a TruncSeries) -> TruncSeries {
        self.binary(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &'a TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: TruncSeries) -> TruncSeries {
        &self + &rhs
    }
}

impl Sub for TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: TruncSeries) -> TruncSeries {
        &self - &rhs
    }
}

impl Mul for TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: TruncSeries) -> TruncSeries {
        &self * &rhs
    }
}

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

impl Ring for TruncSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.order())
    }
    fn one_like(&self) -> Self {
        Self::one(self.order())
    }
    fn is_zero_elem(&self) -> bool {
        TruncSeries::is_zero(self)
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
        Self::constant(self.order(), BigRational::from_integer(n.into()))
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}
