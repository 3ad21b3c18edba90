//! The divisibility bounds themselves.
//!
//! Three families of bounds on automorphism-group orders, each returned as
//! a report carrying the per-factor breakdown, the final integer, and its
//! prime factorization:
//!
//!  * GL stabiliser bounds, for a single degree or a full multidegree;
//!  * the PGL bound for smooth hypersurfaces, assembled from exact
//!    rationals with lcm glue and an integrality assertion at the end;
//!  * the deck-transformation bound for ramified coverings of ℂPⁿ.
//!
//! The module also embeds the golden table of PGL values for n = 2, 3, 4,
//! d = 3..10 against which the general formula is regression-tested.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::{binomial, factorize, lcm, Factorization};
use crate::discriminant::{multiplier, Multidegree};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// GL stabiliser bound for a hypersurface, the plain product formula.
    GlVector,
    /// GL stabiliser bound for a complete intersection, via multipliers.
    GlGeneral,
    /// Projective automorphism bound with lcm glue.
    Pgl,
    /// Deck transformations of the covering induced by projection.
    Deck,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::GlVector => "gl",
            BoundKind::GlGeneral => "gl",
            BoundKind::Pgl => "pgl",
            BoundKind::Deck => "deck",
        }
    }
}

/// A fully evaluated bound. `factor_breakdown` holds the per-index factors
/// exactly as they enter the product (rationals for pgl/deck), so their
/// product reconstructs `value`, and `factorization` reconstructs it too.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub n: u32,
    pub degrees: Multidegree,
    pub value: BigInt,
    pub factorization: Factorization,
    pub factor_breakdown: Vec<BigRational>,
}

fn finish(
    kind: BoundKind,
    degrees: Multidegree,
    n: u32,
    factor_breakdown: Vec<BigRational>,
) -> Result<BoundReport> {
    let mut product = BigRational::one();
    for f in &factor_breakdown {
        product *= f;
    }
    if !product.is_integer() {
        return Err(Error::NonIntegralBound(product.to_string()));
    }
    let value = product.to_integer();
    assert!(value >= BigInt::one(), "bound collapsed below 1");
    let factorization = factor_rational_product(&value, &factor_breakdown)?;
    Ok(BoundReport {
        kind,
        n,
        degrees,
        value,
        factorization,
        factor_breakdown,
    })
}

/// Factors the product of positive rationals by factoring each numerator
/// and denominator separately and merging signed exponents. Far cheaper
/// than factoring the assembled value, whose smooth parts arrive
/// pre-split. Negative residual exponents mean the product was not an
/// integer after all.
fn factor_rational_product(value: &BigInt, factors: &[BigRational]) -> Result<Factorization> {
    let mut exps: BTreeMap<BigInt, i64> = BTreeMap::new();
    let mut accumulate = |v: &BigInt, sgn: i64| -> Result<()> {
        assert!(v.is_positive(), "breakdown factors must be positive");
        if v.is_one() {
            return Ok(());
        }
        for (p, e) in factorize(v)?.factors() {
            *exps.entry(p.clone()).or_insert(0) += sgn * i64::from(*e);
        }
        Ok(())
    };
    for r in factors {
        accumulate(r.numer(), 1)?;
        accumulate(r.denom(), -1)?;
    }
    let mut pairs = Vec::new();
    for (p, e) in exps {
        if e < 0 {
            return Err(Error::NonIntegralBound(format!("{p}^{e} left over")));
        }
        if e > 0 {
            pairs.push((p, e as u32));
        }
    }
    let f = Factorization::from_pairs(pairs);
    assert_eq!(&f.value(), value, "factor merge disagrees with product");
    Ok(f)
}

fn sign(exp: u32) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Bound on the order of any finite subgroup of GL_{n+2}(ℂ) preserving a
/// smooth degree-d hypersurface equation in n+1 variables:
///
///   ∏_{i=0}^{n} ((−1)^{n−i} + (d−1)^{n−i+1}) · (d−1)^i,    d ≥ 3.
pub fn gl_bound_hypersurface(d: u64, n: u32) -> Result<BoundReport> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d, min: 3 });
    }
    let dm1 = BigInt::from(d - 1);
    let factor_breakdown = (0..=n)
        .map(|i| BigRational::from_integer((sign(n - i) + dm1.pow(n - i + 1)) * dm1.pow(i)))
        .collect();
    finish(BoundKind::GlVector, Multidegree::single(d)?, n, factor_breakdown)
}

/// GL stabiliser bound for a complete intersection of multidegree d̲ in
/// ℂPⁿ: the product of all n+1 multipliers. For k = n + 1 every
/// multiplier equals ∏dᵢ and the bound collapses to (∏dᵢ)^{n+1}.
pub fn gl_bound_general(md: &Multidegree, n: u32) -> Result<BoundReport> {
    let factor_breakdown = (1..=n + 1)
        .map(|i| multiplier(md, n, i).map(BigRational::from_integer))
        .collect::<Result<Vec<_>>>()?;
    finish(BoundKind::GlGeneral, md.clone(), n, factor_breakdown)
}

/// Bound on the order of the projective automorphism group of a smooth
/// degree-d hypersurface in ℂPⁿ:
///
///   (1/(n+1)) ∏_{i=0}^{n−1} ((−1)^{n−i}+(d−1)^{n−i+1})
///             · LCM(C(n+1,i)(d−1)^i, (n+1)(d−1)^n) / C(n+1,i)
///
/// for d ≥ 3, n ≥ 1. The lcm arguments are the degrees of the i-dimensional
/// singular stratum and of the full discriminant. The value is provably an
/// integer; a non-integral product is reported as an internal violation.
pub fn pgl_bound(d: u64, n: u32) -> Result<BoundReport> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d, min: 3 });
    }
    if n < 1 {
        return Err(Error::DimensionTooSmall { n, min: 1 });
    }
    let dm1 = BigInt::from(d - 1);
    let sigma = BigInt::from(n + 1) * dm1.pow(n);
    let mut factor_breakdown = Vec::with_capacity(n as usize + 1);
    for i in 0..n {
        let c = binomial(n as u64 + 1, i as i64);
        let stratum = &c * dm1.pow(i);
        let head = sign(n - i) + dm1.pow(n - i + 1);
        factor_breakdown.push(BigRational::new(head * lcm(&stratum, &sigma)?, c));
    }
    factor_breakdown.push(BigRational::new(BigInt::one(), BigInt::from(n + 1)));
    finish(BoundKind::Pgl, Multidegree::single(d)?, n, factor_breakdown)
}

/// The printed closed forms of the PGL bound for n = 2, 3, 4, evaluated
/// literally (polynomial coefficients hard-coded, not re-derived), so they
/// can audit `pgl_bound` independently.
pub fn pgl_bound_closed(n: u32, d: u64) -> Result<BigInt> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d, min: 3 });
    }
    let x = BigInt::from(d);
    let dm1 = BigInt::from(d - 1);
    let poly = |coeffs: &[i64]| -> BigInt {
        // coeffs from the leading power down to the constant
        coeffs
            .iter()
            .fold(BigInt::from(0), |acc, &c| acc * &x + BigInt::from(c))
    };
    let q2 = poly(&[1, -3, 3]); // d^2 − 3d + 3
    let q3 = poly(&[1, -4, 6, -4]); // d^3 − 4d^2 + 6d − 4
    let q4 = poly(&[1, -5, 10, -10, 5]); // d^4 − 5d^3 + 10d^2 − 10d + 5
    let d_minus_2 = poly(&[1, -2]);
    let (numer, denom) = match n {
        2 => (x.pow(2) * dm1.pow(4) * q2 * d_minus_2, BigInt::one()),
        3 => (
            x.pow(3)
                * dm1.pow(8)
                * q3
                * q2
                * d_minus_2
                * lcm(&BigInt::from(3), &(BigInt::from(2) * &dm1))?,
            BigInt::from(3),
        ),
        4 => (
            x.pow(4)
                * dm1.pow(13)
                * q4
                * q3
                * q2
                * d_minus_2
                * lcm(&BigInt::from(2), &dm1.pow(2))?
                * lcm(&BigInt::from(2), &dm1)?,
            BigInt::from(4),
        ),
        _ => return Err(Error::UnsupportedClosedForm(n)),
    };
    let r = BigRational::new(numer, denom);
    if !r.is_integer() {
        return Err(Error::NonIntegralBound(r.to_string()));
    }
    Ok(r.to_integer())
}

/// Bound on the order of the deck-transformation group of the covering of
/// ℂPⁿ induced by a smooth degree-d hypersurface:
///
///   d^{n²−1} · ∏_{i=2}^{n+1} LCM(C(n+1,i), (n+1)·d^{i−1}) / C(n+1,i)
///
/// for d ≥ 2, n ≥ 1, with the same exact-rational discipline as the PGL
/// bound.
pub fn deck_bound(d: u64, n: u32) -> Result<BoundReport> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { d, min: 2 });
    }
    if n < 1 {
        return Err(Error::DimensionTooSmall { n, min: 1 });
    }
    let db = BigInt::from(d);
    let mut factor_breakdown =
        vec![BigRational::from_integer(db.pow(n * n - 1))];
    for i in 2..=n + 1 {
        let c = binomial(n as u64 + 1, i as i64);
        let l = lcm(&c, &(BigInt::from(n + 1) * db.pow(i - 1)))?;
        factor_breakdown.push(BigRational::new(l, c));
    }
    finish(BoundKind::Deck, Multidegree::single(d)?, n, factor_breakdown)
}

/// One golden-table row: the PGL bound value for (n, d) with its printed
/// prime factorization.
#[derive(Debug, Clone)]
pub struct ReferenceRow {
    pub n: u32,
    pub d: u64,
    pub value: BigInt,
    pub factorization: Factorization,
}

/// PGL bound factorizations for n = 2, 3, 4 and d = 3..10, transcribed
/// once and frozen. `reference_table` reconstructs values from these.
type ReferenceEntry = (u32, u64, &'static [(u64, u32)]);

const REFERENCE_DATA: &[ReferenceEntry] = &[
    (2, 3, &[(2, 4), (3, 3)]),
    (2, 4, &[(2, 5), (3, 4), (7, 1)]),
    (2, 5, &[(2, 8), (3, 1), (5, 2), (13, 1)]),
    (2, 6, &[(2, 4), (3, 3), (5, 4), (7, 1)]),
    (2, 7, &[(2, 4), (3, 4), (5, 1), (7, 2), (31, 1)]),
    (2, 8, &[(2, 7), (3, 1), (7, 4), (43, 1)]),
    (2, 9, &[(2, 12), (3, 5), (7, 1), (19, 1)]),
    (2, 10, &[(2, 5), (3, 8), (5, 2), (73, 1)]),
    (3, 3, &[(2, 10), (3, 4), (5, 1)]),
    (3, 4, &[(2, 10), (3, 8), (5, 1), (7, 1)]),
    (3, 5, &[(2, 19), (3, 2), (5, 3), (13, 1), (17, 1)]),
    (3, 6, &[(2, 9), (3, 4), (5, 9), (7, 1), (13, 1)]),
    (3, 7, &[(2, 10), (3, 8), (5, 2), (7, 3), (31, 1), (37, 1)]),
    (3, 8, &[(2, 13), (3, 2), (5, 2), (7, 9), (43, 1)]),
    (3, 9, &[(2, 28), (3, 7), (5, 1), (7, 2), (13, 1), (19, 1)]),
    (3, 10, &[(2, 11), (3, 17), (5, 3), (41, 1), (73, 1)]),
    (4, 3, &[(2, 14), (3, 5), (5, 1), (11, 1)]),
    (4, 4, &[(2, 11), (3, 16), (5, 1), (7, 1), (61, 1)]),
    (4, 5, &[(2, 30), (3, 2), (5, 5), (13, 1), (17, 1), (41, 1)]),
    (4, 6, &[(2, 9), (3, 5), (5, 16), (7, 1), (13, 1), (521, 1)]),
    (4, 7, &[(2, 14), (3, 16), (5, 2), (7, 4), (11, 1), (31, 1), (37, 1), (101, 1)]),
    (4, 8, &[(2, 15), (3, 2), (5, 2), (7, 16), (11, 1), (43, 1), (191, 1)]),
    (4, 9, &[(2, 46), (3, 9), (5, 1), (7, 2), (11, 1), (13, 1), (19, 1), (331, 1)]),
    (4, 10, &[(2, 11), (3, 32), (5, 5), (41, 1), (73, 1), (1181, 1)]),
];

/// The 24 golden PGL values, ordered by (n, d).
pub fn reference_table() -> Vec<ReferenceRow> {
    REFERENCE_DATA
        .iter()
        .map(|&(n, d, pairs)| {
            let factorization =
                Factorization::from_pairs(pairs.iter().map(|&(p, e)| (BigInt::from(p), e)));
            ReferenceRow {
                n,
                d,
                value: factorization.value(),
                factorization,
            }
        })
        .collect()
}
