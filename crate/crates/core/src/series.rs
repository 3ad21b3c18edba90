//! Truncated integer power series.
//!
//! A series is a dense coefficient vector over BigInt, indexed from t^0.
//! The truncation order T is implicit in the length: a series of length
//! T + 1 represents a polynomial known modulo t^(T+1). Multiplication
//! truncates to the smaller of the two operand orders, so precision
//! degrades explicitly rather than silently.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// Wraps a coefficient vector; `coeffs[i]` is the t^i coefficient.
    /// The vector must be non-empty (order 0 means a bare constant).
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        IntSeries { coeffs }
    }

    /// The constant series c + 0·t + ... up to order `truncation`.
    pub fn constant(c: BigInt, truncation: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); truncation + 1];
        coeffs[0] = c;
        IntSeries { coeffs }
    }

    /// 1 - a·t, padded to order `truncation`.
    pub fn one_minus_at(a: &BigInt, truncation: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); truncation + 1];
        coeffs[0] = BigInt::one();
        if truncation >= 1 {
            coeffs[1] = -a;
        }
        IntSeries { coeffs }
    }

    /// Truncation order T; coefficients above t^T are unknown.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The t^i coefficient. Asking above the truncation order is an error,
    /// never a silent zero.
    pub fn coefficient(&self, i: usize) -> Result<&BigInt> {
        self.coeffs.get(i).ok_or(Error::TruncationExceeded {
            index: i,
            truncation: self.truncation(),
        })
    }

    /// Product truncated to min(T_f, T_g).
    pub fn multiply(&self, other: &IntSeries) -> IntSeries {
        let t = self.truncation().min(other.truncation());
        let mut coeffs = vec![BigInt::zero(); t + 1];
        for (i, a) in self.coeffs.iter().take(t + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(t + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntSeries { coeffs }
    }

    /// Multiplicative inverse to the same truncation order. Requires the
    /// constant term to be +1 or -1; the inverse then stays integral.
    pub fn invert(&self) -> Result<IntSeries> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && !(-c0).is_one() {
            return Err(Error::NonUnitConstant(c0.clone()));
        }
        let t = self.truncation();
        let mut inv = vec![BigInt::zero(); t + 1];
        inv[0] = c0.clone(); // c0 is its own inverse when c0 = ±1
        for m in 1..=t {
            let mut s = BigInt::zero();
            for j in 1..=m {
                s += &self.coeffs[j] * &inv[m - j];
            }
            inv[m] = -c0 * s;
        }
        Ok(IntSeries { coeffs: inv })
    }
}

/// [t^m] of the product over j of 1/(1 - a_j t), computed by inverting each
/// linear factor to order m and multiplying.
pub fn rational_product_coefficient(factors: &[BigInt], m: usize) -> BigInt {
    let mut acc = IntSeries::constant(BigInt::one(), m);
    for a in factors {
        let inv = IntSeries::one_minus_at(a, m)
            .invert()
            .expect("1 - a·t has unit constant");
        acc = acc.multiply(&inv);
    }
    acc.coefficient(m)
        .expect("product keeps order m")
        .clone()
}
