//! Arbitrary-precision integer combinatorics and factorization.
//!
//! Everything here is exact: binomials by multiplicative descent, lcm via
//! gcd, and prime factorizations by trial division below 10^6 followed by
//! Miller-Rabin certified Pollard-rho splitting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient C(n, k) with the out-of-range convention C(n, k) = 0
/// for k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Positive least common multiple of two nonzero integers.
pub fn lcm(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::LcmZero);
    }
    Ok(a.lcm(b).abs())
}

/// A complete prime factorization, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Empty factorization; reconstructs to 1.
    pub fn unit() -> Self {
        Factorization { factors: Vec::new() }
    }

    /// Builds a factorization from (prime, exponent) pairs. Pairs are merged
    /// and sorted; every base is checked for primality.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, u32)>,
    {
        let mut merged: std::collections::BTreeMap<BigInt, u32> = std::collections::BTreeMap::new();
        for (p, e) in pairs {
            assert!(is_prime(p.magnitude()), "{p} is not prime");
            if e > 0 {
                *merged.entry(p).or_insert(0) += e;
            }
        }
        Factorization {
            factors: merged.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Spaced rendering, e.g. `2^4 · 3^3`, exponent 1 omitted.
    pub fn format_spaced(&self) -> String {
        self.render(" · ")
    }

    /// Compact rendering, e.g. `2^4·3^3`.
    pub fn format_compact(&self) -> String {
        self.render("·")
    }

    /// LaTeX rendering, e.g. `2^4\cdot 3^{11}`; exponents >= 10 are braced.
    pub fn format_latex(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(p, e)| match e {
                1 => p.to_string(),
                2..=9 => format!("{p}^{e}"),
                _ => format!("{p}^{{{e}}}"),
            })
            .collect::<Vec<_>>()
            .join("\\cdot ")
    }

    fn render(&self, sep: &str) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// Complete prime factorization of an integer >= 2.
pub fn factorize(v: &BigInt) -> Result<Factorization> {
    if v < &BigInt::from(2) {
        return Err(Error::FactorizeRange(v.clone()));
    }
    let mut map: std::collections::BTreeMap<BigUint, u32> = std::collections::BTreeMap::new();
    let mut n = v.magnitude().clone();

    // Trial division by 2, 3 and the 6k±1 wheel up to 10^6.
    for p in [2u64, 3] {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            *map.entry(bp.clone()).or_insert(0) += 1;
        }
    }
    let mut p = 5u64;
    let mut cap = sqrt_cap(&n);
    while p <= cap {
        for q in [p, p + 2] {
            let bq = BigUint::from(q);
            if (&n % &bq).is_zero() {
                while (&n % &bq).is_zero() {
                    n /= &bq;
                    *map.entry(bq.clone()).or_insert(0) += 1;
                }
                cap = sqrt_cap(&n);
            }
        }
        p += 6;
    }

    if !n.is_one() {
        split(n, &mut map);
    }

    Ok(Factorization {
        factors: map
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect(),
    })
}

/// Largest wheel prime still worth trying: min(√n, 10^6 − 1).
fn sqrt_cap(n: &BigUint) -> u64 {
    n.sqrt().to_u64().map_or(999_999, |v| v.min(999_999))
}

/// Recursively splits a number with no prime factor below 10^6.
fn split(n: BigUint, map: &mut std::collections::BTreeMap<BigUint, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        *map.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(&n);
    split(&n / &d, map);
    split(d, map);
}

/// Deterministic Miller-Rabin. The first twelve prime bases certify
/// primality below 3.3·10^24; larger inputs get further fixed bases.
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    // Primes through 37 certify everything below 3.3·10^24; the tail
    // through 97 covers the larger composites this crate ever factors.
    const BASES: [u64; 25] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97,
    ];
    for b in BASES {
        if n == &BigUint::from(b) {
            return true;
        }
        if (n % b).is_zero() {
            return false;
        }
    }

    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let threshold = BigUint::from(10u32).pow(24) * 4u32;
    let witnesses: &[u64] = if *n < threshold { &BASES[..12] } else { &BASES };

    'witness: for &a in witnesses {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's cycle-finding variant of Pollard's rho. Deterministic: the
/// polynomial offset is bumped until a proper divisor appears.
fn pollard_rho(n: &BigUint) -> BigUint {
    debug_assert!(!is_prime(n));
    if n.is_even() {
        return BigUint::from(2u32);
    }
    if let Some(small) = n.to_u64() {
        // Perfect squares of large primes defeat rho's random walk slowly;
        // a direct sqrt probe is cheap for machine-sized inputs.
        let r = small.isqrt();
        if r * r == small {
            return BigUint::from(r);
        }
    }
    let one = BigUint::one();
    for c in 1u64.. {
        let cc = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cc) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle collapsed, retry with the next offset
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
    }
    unreachable!("rho exhausted all offsets")
}
