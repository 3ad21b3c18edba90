//! Degrees of the singular strata swept out by linear subspaces.
//!
//! Over a base ℂPᵐ sitting inside ℂPⁿ, the relevant jet bundle has total
//! Chern series (1 + (d−1)t)^{−(n+1)}; the degree of the variety swept by
//! the singular loci along the subspace is read off from powers of the
//! companion matrix of that series. The closed form C(n+1, m)·(d−1)^m is
//! kept out of the computation path and used only as a cross-check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::series::IntSeries;

/// The t¹..t^m coefficients x₁,…,x_m of a total Chern series over a base
/// whose cohomology is generated by a single degree-2 class (ℂPᵐ here).
/// base_dim = m is the coefficient count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernVector {
    coeffs: Vec<BigInt>,
}

impl ChernVector {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        ChernVector { coeffs }
    }

    pub fn base_dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// Chern coefficients of the singularity bundle over ℂPᵐ ⊂ ℂPⁿ for degree d:
/// the t¹..t^m coefficients of 1/(1 + (d−1)t)^{n+1}. Coefficient j equals
/// (−1)ʲ·C(n+j, j)·(d−1)ʲ.
pub fn chern_coeffs(d: u64, n: u32, m: u32) -> Result<ChernVector> {
    if d < 2 {
        return Err(Error::DegreeBelowTwo(d));
    }
    if m > n {
        return Err(Error::StratumDimension { m, n });
    }
    let dm1 = BigInt::from(d - 1);
    let direct: Vec<BigInt> = (0..=m as usize)
        .map(|j| binomial(n as u64 + 1, j as i64) * dm1.pow(j as u32))
        .collect();
    let inverted = IntSeries::new(direct).invert()?;
    Ok(ChernVector {
        coeffs: inverted.coeffs()[1..].to_vec(),
    })
}

/// Degree of the swept variety: the bottom-right entry of Aᵐ, where A is
/// the m×m matrix with sub-diagonal 1's and last column (−x_m, …, −x_1)
/// top to bottom. Computed as the last coordinate of Aᵐ·(0,…,0,1)ᵀ.
/// An empty vector (point base) yields 1 by convention.
pub fn swept_degree(cv: &ChernVector) -> BigInt {
    let m = cv.base_dim();
    if m == 0 {
        return BigInt::one();
    }
    let x = cv.coeffs();
    let mut w = vec![BigInt::zero(); m];
    w[m - 1] = BigInt::one();
    for _ in 0..m {
        let lead = w[m - 1].clone();
        for i in (1..m).rev() {
            w[i] = &w[i - 1] - &x[m - i - 1] * &lead;
        }
        w[0] = -&x[m - 1] * &lead;
    }
    w.pop().unwrap()
}

/// deg V_{(d),n,ℂPᵐ} via the companion-matrix route. Equals
/// C(n+1, m)·(d−1)^m; that identity is verified in tests, not assumed here.
pub fn stratum_degree(d: u64, n: u32, m: u32) -> Result<BigInt> {
    Ok(swept_degree(&chern_coeffs(d, n, m)?))
}

/// deg Σ_{(d),n}: the full discriminant degree, the m = n stratum.
/// Equals (n+1)(d−1)ⁿ.
pub fn sigma_degree(d: u64, n: u32) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::DimensionTooSmall { n, min: 1 });
    }
    stratum_degree(d, n, n)
}
