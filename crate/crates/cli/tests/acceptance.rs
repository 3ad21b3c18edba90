//! The acceptance gate. Each test is one release criterion; together they
//! cover the golden table, every cross-method identity, and the CLI's
//! verification mode. Run with `cargo test --test acceptance`.

use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;

use autbound::{
    binomial, deck_bound, gl_bound_hypersurface, lcm, multiplier, multiplier_suspension_check,
    n_value, n_value_closed, n_value_staircase_oracle, pgl_bound, pgl_bound_closed,
    stratum_degree, chern_coeffs, IntSeries, Multidegree,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Non-decreasing degree lists with entries in lo..=hi and 1 <= k <= max_k.
fn multisets(max_k: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    fn rec(cur: &mut Vec<u64>, lo: u64, hi: u64, max_k: usize, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_k {
            return;
        }
        let start = *cur.last().unwrap_or(&lo);
        for d in start..=hi {
            cur.push(d);
            rec(cur, lo, hi, max_k, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), lo, hi, max_k, &mut out);
    out
}

/// The two-term recursion run on a raw unsorted list, pivoting on the first
/// entry. Used as the permutation-invariance oracle.
fn n_raw(ds: &[u64], n: u32) -> BigInt {
    let k = ds.len() as u32;
    assert!(k >= 1 && k <= n + 1);
    if ds.len() == 1 {
        return big(ds[0] as i64 - 1).pow(n + 1);
    }
    if k == n + 1 {
        return ds.iter().fold(BigInt::from(1), |a, &d| a * d) - 1;
    }
    let d1 = BigInt::from(ds[0]);
    (&d1 - 1) * n_raw(ds, n - 1) + d1 * n_raw(&ds[1..], n - 1)
}

fn permutations(items: &[u64]) -> Vec<Vec<u64>> {
    fn heap(arr: &mut Vec<u64>, k: usize, out: &mut Vec<Vec<u64>>) {
        if k <= 1 {
            out.push(arr.clone());
            return;
        }
        for i in 0..k {
            heap(arr, k - 1, out);
            if k.is_multiple_of(2) {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    let mut arr = items.to_vec();
    let mut out = Vec::new();
    let len = arr.len();
    heap(&mut arr, len, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

#[test]
fn criterion_1_golden_table_reproduction() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_autbound"))
        .args(["table", "--check"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "check failed:\n{text}");
    assert!(text.ends_with("24/24 PASS\n"), "got:\n{text}");
    assert!(
        elapsed.as_millis() < 1000,
        "table --check took {elapsed:?}, budget is 1s"
    );
}

#[test]
fn criterion_2_closed_form_consistency() {
    for n in 2u32..=4 {
        for d in 3u64..=50 {
            assert_eq!(
                pgl_bound(d, n).unwrap().value,
                pgl_bound_closed(n, d).unwrap(),
                "n={n} d={d}"
            );
        }
    }
    for d in 3u64..=50 {
        let expect = big((d * (d - 1) * (d - 2)) as i64);
        assert_eq!(pgl_bound(d, 1).unwrap().value, expect, "d={d}");
    }
}

#[test]
fn criterion_3_integrality_of_rational_bounds() {
    for n in 1u32..=6 {
        for d in 3u64..=30 {
            let p = pgl_bound(d, n).unwrap();
            assert!(p.value >= big(1));
            let k = deck_bound(d, n).unwrap();
            assert!(k.value >= big(1));
        }
    }
}

#[test]
fn criterion_4_three_way_n_agreement() {
    for ds in multisets(4, 2, 5) {
        let md = Multidegree::new(ds.clone()).unwrap();
        let k = md.k() as u32;
        for n in (k - 1)..=8 {
            let rec = n_value(&md, n).unwrap();
            assert_eq!(rec, n_value_closed(&md, n).unwrap(), "closed {md} n={n}");
            assert_eq!(
                rec,
                n_value_staircase_oracle(&md, n).unwrap(),
                "oracle {md} n={n}"
            );
            for perm in permutations(&ds) {
                assert_eq!(rec, n_raw(&perm, n), "perm {perm:?} n={n}");
            }
            if md.is_single_quadric() {
                assert_eq!(rec, big(1));
            } else {
                assert!(rec > big(1), "{md} n={n}");
            }
        }
    }
}

#[test]
fn criterion_5_multiplier_identities() {
    for d in 3u64..=20 {
        for n in 1u32..=6 {
            let md = Multidegree::single(d).unwrap();
            let product = (1..=n + 1).fold(BigInt::from(1), |acc, i| {
                acc * multiplier(&md, n, i).unwrap()
            });
            assert_eq!(
                product,
                gl_bound_hypersurface(d, n).unwrap().value,
                "d={d} n={n}"
            );
        }
    }
    for ds in multisets(4, 2, 5) {
        let md = Multidegree::new(ds).unwrap();
        let k = md.k() as u32;
        for n in (k - 1).max(1)..=8 {
            for i in 1..=n {
                assert!(
                    multiplier_suspension_check(&md, n, i).unwrap(),
                    "{md} n={n} i={i}"
                );
            }
            if !md.is_single_quadric() {
                for i in 1..=n + 1 {
                    assert!(multiplier(&md, n, i).unwrap() >= big(1), "{md} n={n} i={i}");
                }
            }
        }
    }
}

#[test]
fn criterion_6_stratum_degrees() {
    for d in 2u64..=10 {
        for n in 0u32..=8 {
            for m in 0..=n {
                let got = stratum_degree(d, n, m).unwrap();
                let expect = binomial(n as u64 + 1, m as i64) * big(d as i64 - 1).pow(m);
                assert_eq!(got, expect, "d={d} n={n} m={m}");

                // (1 + (d−1)t)^{n+1} · (1 + Σ xⱼ tʲ) = 1 + O(t^{m+1})
                let direct = IntSeries::new(
                    (0..=m as usize)
                        .map(|j| binomial(n as u64 + 1, j as i64) * big(d as i64 - 1).pow(j as u32))
                        .collect(),
                );
                let mut one_plus_x = vec![big(1)];
                one_plus_x.extend(chern_coeffs(d, n, m).unwrap().coeffs().iter().cloned());
                let prod = direct.multiply(&IntSeries::new(one_plus_x));
                assert_eq!(*prod.coefficient(0).unwrap(), big(1));
                for j in 1..=m as usize {
                    assert_eq!(*prod.coefficient(j).unwrap(), big(0), "d={d} n={n} m={m} j={j}");
                }
            }
        }
    }
}

#[test]
fn criterion_7_divisibility_anecdotes() {
    // plane cubics admit 18, 36 or 54 projective automorphisms
    let cubic_orders = [18i64, 36, 54]
        .iter()
        .fold(big(1), |acc, &v| lcm(&acc, &big(v)).unwrap());
    assert_eq!(cubic_orders, big(108));
    let b32 = pgl_bound(3, 2).unwrap().value;
    assert_eq!(b32, big(432));
    assert_eq!(&b32 % &cubic_orders, big(0));

    // the full automorphism-order lcm of cubic surfaces
    let b33 = pgl_bound(3, 3).unwrap().value;
    assert_eq!(b33, big(414720));
    assert_eq!(&b33 % big(3240), big(0));

    // plane quartics: bound is 9 times the automorphism-order lcm
    let b42 = pgl_bound(4, 2).unwrap().value;
    assert_eq!(b42, big(18144));
    assert_eq!(&b42 % big(9), big(0));
}

#[test]
fn criterion_8_deck_bound_on_the_line() {
    for d in 2u64..=10 {
        assert_eq!(deck_bound(d, 1).unwrap().value, big(2 * d as i64), "d={d}");
    }
}
