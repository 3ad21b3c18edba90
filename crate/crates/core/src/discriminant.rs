//! Discriminant counts N(d̲, n) and the linking multipliers m_i.
//!
//! N(d̲, n) is the local intersection multiplicity that controls how the
//! singular members of a multidegree-d̲ family in ℂPⁿ link the strata of the
//! degenerate-matrix variety. It satisfies a two-term recursion
//!
//!   N(d̲, n) = (d₁ − 1)·N(d̲, n−1) + d₁·N(d̲′, n−1)
//!
//! where d̲′ drops the smallest degree. Arranged as a table over columns
//! a = 1..k and rows b = −2..n−k, that recursion becomes a weighted
//! staircase count, and the same number also has a closed form via
//! coefficient extraction from rational generating functions. All three
//! routes are implemented here and are expected to agree everywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::rational_product_coefficient;

/// A non-decreasing tuple d₁ ≤ … ≤ d_k of equation degrees, every dᵢ ≥ 2.
/// Construction sorts; every other function in this module may assume order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multidegree {
    degrees: Vec<u64>,
}

impl Multidegree {
    pub fn new(mut degrees: Vec<u64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyMultidegree);
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::DegreeBelowTwo(d));
        }
        degrees.sort_unstable();
        Ok(Multidegree { degrees })
    }

    pub fn single(d: u64) -> Result<Self> {
        Multidegree::new(vec![d])
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Number of defining equations.
    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_single_quadric(&self) -> bool {
        self.degrees == [2]
    }

    /// d̲′: the multidegree with the smallest entry removed. None when k = 1.
    pub fn drop_smallest(&self) -> Option<Multidegree> {
        if self.degrees.len() == 1 {
            None
        } else {
            Some(Multidegree {
                degrees: self.degrees[1..].to_vec(),
            })
        }
    }

    /// ∏ dᵢ.
    pub fn product(&self) -> BigInt {
        self.degrees
            .iter()
            .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
    }

    fn check_ambient(&self, n: u32) -> Result<()> {
        if self.k() as u64 > n as u64 + 1 {
            Err(Error::TooManyDegrees {
                k: self.k(),
                limit: n + 1,
            })
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Display for Multidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// The staircase table for a fixed (d̲, n): columns a = 0..=k, rows
/// b = −2..=n−k. Column a carries the degree d_{k−a+1}, so column 1 holds
/// pure powers of d_k − 1 and column k is governed by d₁.
///
///   entry(a, −2) = 1            (a ≥ 1, the bottom line of 1's)
///   entry(0, b)  = 0            (b ≥ −1)
///   entry(a, b)  = (d_{k−a+1} − 1)·entry(a, b−1) + d_{k−a+1}·entry(a−1, b)
///
/// N(d̲, n) is the top-left corner entry(k, n−k).
#[derive(Debug, Clone)]
pub struct StaircaseTable {
    k: usize,
    top_row: i64,
    // columns[a][(b + 2) as usize] = entry(a, b)
    columns: Vec<Vec<BigInt>>,
}

impl StaircaseTable {
    pub fn build(md: &Multidegree, n: u32) -> Result<Self> {
        md.check_ambient(n)?;
        let k = md.k();
        let top_row = n as i64 - k as i64; // ≥ −1
        let height = (top_row + 2) as usize + 1;
        let mut columns = vec![vec![BigInt::zero(); height]];
        for a in 1..=k {
            let d = BigInt::from(md.degrees[k - a]); // d_{k−a+1}
            let dm1 = &d - 1;
            let mut col = Vec::with_capacity(height);
            col.push(BigInt::one()); // b = −2
            for b in -1..=top_row {
                let below = &col[(b + 1) as usize];
                let left = &columns[a - 1][(b + 2) as usize];
                col.push(&dm1 * below + &d * left);
            }
            columns.push(col);
        }
        Ok(StaircaseTable { k, top_row, columns })
    }

    /// entry(a, b); a in 0..=k, b in −2..=n−k.
    pub fn entry(&self, a: usize, b: i64) -> &BigInt {
        assert!(a <= self.k && (-2..=self.top_row).contains(&b));
        &self.columns[a][(b + 2) as usize]
    }

    /// The corner value N(d̲, n).
    pub fn n_value(&self) -> &BigInt {
        self.entry(self.k, self.top_row)
    }
}

/// N(d̲, n) by the staircase-table recursion. Requires k ≤ n + 1.
pub fn n_value(md: &Multidegree, n: u32) -> Result<BigInt> {
    Ok(StaircaseTable::build(md, n)?.n_value().clone())
}

/// N(d̲, n) by the closed form
///
///   (d₁−1)^{n−k+2} + Σ_{i=2}^{k} d₁⋯d_{i−1}(dᵢ−1)·[t^{n−k+1}] ∏_{j≤i} 1/(1−(dⱼ−1)t).
///
/// For k = 1 the leading power is the whole value.
pub fn n_value_closed(md: &Multidegree, n: u32) -> Result<BigInt> {
    md.check_ambient(n)?;
    let k = md.k();
    let ds = md.degrees();
    let m = (n as usize + 1) - k; // n − k + 1 ≥ 0
    let mut total = BigInt::from(ds[0] - 1).pow(m as u32 + 1);
    let mut prefix = BigInt::one(); // d₁⋯d_{i−1}
    let mut shifted: Vec<BigInt> = Vec::with_capacity(k); // d_j − 1 for j ≤ i
    shifted.push(BigInt::from(ds[0] - 1));
    for i in 2..=k {
        prefix *= BigInt::from(ds[i - 2]);
        shifted.push(BigInt::from(ds[i - 1] - 1));
        let coeff = rational_product_coefficient(&shifted, m);
        total += &prefix * BigInt::from(ds[i - 1] - 1) * coeff;
    }
    Ok(total)
}

/// N(d̲, n) by brute-force enumeration of weighted staircases: monotone
/// down/left paths from (k, n−k) that end with a vertical step into row −2,
/// a down step in column a weighing d_{k−a+1} − 1 and a left step d_{k−a+1}.
/// Exponential in k + n, so the budget k + n ≤ 24 is enforced.
pub fn n_value_staircase_oracle(md: &Multidegree, n: u32) -> Result<BigInt> {
    md.check_ambient(n)?;
    let k = md.k();
    let budget = k as u32 + n;
    if budget > 24 {
        return Err(Error::EnumerationBudget { budget });
    }
    let weights: Vec<(BigInt, BigInt)> = (0..=k)
        .map(|a| {
            if a == 0 {
                (BigInt::zero(), BigInt::zero())
            } else {
                let d = md.degrees[k - a];
                (BigInt::from(d - 1), BigInt::from(d))
            }
        })
        .collect();
    let mut total = BigInt::zero();
    walk(k, n as i64 - k as i64, &BigInt::one(), &weights, &mut total);
    Ok(total)
}

fn walk(a: usize, b: i64, weight: &BigInt, weights: &[(BigInt, BigInt)], total: &mut BigInt) {
    if b == -2 {
        *total += weight;
        return;
    }
    let (down, left) = &weights[a];
    walk(a, b - 1, &(weight * down), weights, total);
    if a >= 2 {
        walk(a - 1, b, &(weight * left), weights, total);
    }
}

fn check_index(i: u32, n: u32) -> Result<()> {
    if i < 1 || i > n + 1 {
        Err(Error::MultiplierIndex { i, max: n + 1 })
    } else {
        Ok(())
    }
}

fn sign(exp: u32) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// The two-branch multiplier formula with no exclusion on d̲ = (2); the
/// suspension recursion needs the quadric values (m_1((2), 0) = 2).
fn multiplier_raw(md: &Multidegree, n: u32, i: u32) -> Result<BigInt> {
    check_index(i, n)?;
    md.check_ambient(n)?;
    let k = md.k() as u32;
    let nv = n_value(md, n)?;
    if i + k >= n + 2 {
        // i ≥ n − k + 2
        Ok(nv + sign(n + 1 - k))
    } else {
        // i ≤ n − k + 1, which forces k ≤ (n − i) + 1
        debug_assert!(k <= n - i + 1);
        Ok(nv + sign(i + 1) * n_value(md, n - i)?)
    }
}

/// The linking multiplier m_i^{d̲,n} for 1 ≤ i ≤ n + 1:
///
///   m_i = N(d̲,n) + (−1)^{n−k+1}          if i ≥ n − k + 2,
///   m_i = N(d̲,n) + (−1)^{i+1} N(d̲,n−i)   if i ≤ n − k + 1.
///
/// The single quadric is excluded: it is the one multidegree whose
/// multipliers may vanish.
pub fn multiplier(md: &Multidegree, n: u32, i: u32) -> Result<BigInt> {
    if md.is_single_quadric() {
        return Err(Error::QuadricExcluded);
    }
    multiplier_raw(md, n, i)
}

/// Verifies the suspension recursion
///
///   m_i(d̲, n) = γ·m_i(d̲′, n−1) + δ·m_i(d̲, n−1)
///
/// with γ = d₁ when k > 1 (else the term is absent) and δ = d₁ − 1 when
/// k < n + 1 (else absent). Valid for 1 ≤ i ≤ n, n ≥ 1.
pub fn multiplier_suspension_check(md: &Multidegree, n: u32, i: u32) -> Result<bool> {
    if n < 1 {
        return Err(Error::DimensionTooSmall { n, min: 1 });
    }
    if i < 1 || i > n {
        return Err(Error::MultiplierIndex { i, max: n });
    }
    let lhs = multiplier_raw(md, n, i)?;
    let d1 = md.degrees[0];
    let mut rhs = BigInt::zero();
    if let Some(tail) = md.drop_smallest() {
        rhs += BigInt::from(d1) * multiplier_raw(&tail, n - 1, i)?;
    }
    if (md.k() as u64) < n as u64 + 1 {
        rhs += BigInt::from(d1 - 1) * multiplier_raw(md, n - 1, i)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(ds: &[u64]) -> Multidegree {
        Multidegree::new(ds.to_vec()).unwrap()
    }

    fn nv(ds: &[u64], n: u32) -> i64 {
        use num_traits::ToPrimitive;
        n_value(&md(ds), n).unwrap().to_i64().unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        assert_eq!(md(&[3, 2]).degrees(), &[2, 3]);
        assert_eq!(Multidegree::new(vec![]), Err(Error::EmptyMultidegree));
        assert_eq!(Multidegree::new(vec![2, 1]), Err(Error::DegreeBelowTwo(1)));
        assert!(md(&[2]).is_single_quadric());
        assert!(!md(&[2, 2]).is_single_quadric());
        assert_eq!(md(&[4, 2, 3]).to_string(), "(2,3,4)");
    }

    #[test]
    fn recursion_reference_values() {
        assert_eq!(nv(&[3], 2), 8);
        assert_eq!(nv(&[2, 2], 1), 3);
        assert_eq!(nv(&[2, 3], 2), 13);
    }

    #[test]
    fn hypersurface_column_is_pure_powers() {
        // entry(1, b) = (d_k − 1)^{b+2}
        let t = StaircaseTable::build(&md(&[2, 3, 4]), 7).unwrap();
        for b in -2..=4i64 {
            assert_eq!(*t.entry(1, b), BigInt::from(3).pow((b + 2) as u32));
        }
    }

    #[test]
    fn maximal_k_gives_product_minus_one() {
        // k = n + 1 collapses to ∏dᵢ − 1
        assert_eq!(nv(&[2, 2], 1), 3);
        assert_eq!(nv(&[2, 3, 4], 2), 23);
        assert_eq!(nv(&[5, 5, 5, 5], 3), 624);
    }

    #[test]
    fn single_degree_gives_power() {
        for d in 2..=6u64 {
            for n in 0..=5u32 {
                assert_eq!(nv(&[d], n), ((d - 1) as i64).pow(n + 1));
            }
        }
    }

    #[test]
    fn quadric_always_one() {
        for n in 0..=8 {
            assert_eq!(nv(&[2], n), 1);
        }
    }

    #[test]
    fn closed_form_reference_values() {
        use num_traits::ToPrimitive;
        let cf = |ds: &[u64], n| n_value_closed(&md(ds), n).unwrap().to_i64().unwrap();
        assert_eq!(cf(&[2, 3], 2), 13);
        assert_eq!(cf(&[3], 2), 8);
        assert_eq!(cf(&[2, 2], 1), 3);
    }

    #[test]
    fn oracle_reference_values() {
        use num_traits::ToPrimitive;
        let or = |ds: &[u64], n| {
            n_value_staircase_oracle(&md(ds), n)
                .unwrap()
                .to_i64()
                .unwrap()
        };
        assert_eq!(or(&[3], 2), 8);
        assert_eq!(or(&[2, 3], 2), 13);
        assert_eq!(or(&[2, 2], 1), 3);
    }

    #[test]
    fn oracle_budget() {
        assert_eq!(
            n_value_staircase_oracle(&md(&[2, 2]), 23),
            Err(Error::EnumerationBudget { budget: 25 })
        );
    }

    #[test]
    fn ambient_dimension_enforced() {
        assert_eq!(
            n_value(&md(&[2, 2, 2]), 1),
            Err(Error::TooManyDegrees { k: 3, limit: 2 })
        );
    }

    #[test]
    fn multiplier_reference_values() {
        use num_traits::ToPrimitive;
        let m = |ds: &[u64], n, i| multiplier(&md(ds), n, i).unwrap().to_i64().unwrap();
        assert_eq!(m(&[3], 2, 1), 12);
        assert_eq!(m(&[3], 2, 2), 6);
        assert_eq!(m(&[3], 2, 3), 9);
        assert_eq!(m(&[2, 3], 2, 1), 18);
        assert_eq!(m(&[2, 3], 2, 2), 12);
        assert_eq!(m(&[2, 3], 2, 3), 12);
    }

    #[test]
    fn multiplier_rejects_quadric_and_bad_index() {
        assert_eq!(multiplier(&md(&[2]), 3, 1), Err(Error::QuadricExcluded));
        assert_eq!(
            multiplier(&md(&[3]), 2, 0),
            Err(Error::MultiplierIndex { i: 0, max: 3 })
        );
        assert_eq!(
            multiplier(&md(&[3]), 2, 4),
            Err(Error::MultiplierIndex { i: 4, max: 3 })
        );
    }

    #[test]
    fn suspension_reference_cases() {
        assert!(multiplier_suspension_check(&md(&[2, 3]), 2, 1).unwrap());
        assert!(multiplier_suspension_check(&md(&[3]), 3, 2).unwrap());
        assert!(multiplier_suspension_check(&md(&[2, 2]), 1, 1).unwrap());
    }

    #[test]
    fn suspension_index_range() {
        assert_eq!(
            multiplier_suspension_check(&md(&[3]), 2, 3),
            Err(Error::MultiplierIndex { i: 3, max: 2 })
        );
    }
}
