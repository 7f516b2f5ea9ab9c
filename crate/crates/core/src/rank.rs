//! Exact rank of integer matrices.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Runs in `i128` and falls back to arbitrary precision if an intermediate
/// minor overflows. Rows may have differing lengths only if all are empty.
pub fn rank_exact(m: &[Vec<i64>]) -> usize {
    bareiss_i128(m).unwrap_or_else(|| bareiss_big(m))
}

fn bareiss_i128(m: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col];
        for i in r + 1..rows {
            let lead = a[i][col];
            for j in col + 1..cols {
                let t = pivot
                    .checked_mul(a[i][j])?
                    .checked_sub(lead.checked_mul(a[r][j])?)?;
                a[i][j] = t / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        for i in r + 1..rows {
            let lead = a[i][col].clone();
            for j in col + 1..cols {
                let t = &pivot * &a[i][j] - &lead * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Rank over `GF(p)` for a prime `p < 2^31`.
pub fn rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][col], p - 2, p);
        for j in col..cols {
            a[r][j] = a[r][j] * inv % p;
        }
        for i in r + 1..rows {
            let f = a[i][col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(rank_exact(&[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]), 2);
        for n in 1..8 {
            let id: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect();
            assert_eq!(rank_exact(&id), n);
        }
        let matching2 = [
            vec![1, 1, 0, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ];
        assert_eq!(rank_exact(&matching2), 3);
        assert_eq!(rank_exact(&[]), 0);
        assert_eq!(rank_exact(&[vec![0, 0], vec![0, 0]]), 0);
    }

    #[test]
    fn skipped_columns() {
        let m = [vec![0, 1, 2], vec![0, 2, 4], vec![0, 1, 3]];
        assert_eq!(rank_exact(&m), 2);
    }

    #[test]
    fn big_fallback_agrees() {
        let big = 1i64 << 62;
        let m = vec![
            vec![big, big - 1, 3],
            vec![big - 5, big, 7],
            vec![2 * (big / 4), 11, big - 9],
        ];
        assert_eq!(bareiss_i128(&m), None);
        assert_eq!(rank_exact(&m), 3);
        let dependent = vec![vec![big, big - 1], vec![big, big - 1]];
        assert_eq!(rank_exact(&dependent), 1);
    }

    #[test]
    fn characteristic_dependence() {
        // det = 2: full rank over Q and GF(3), rank 2 over GF(2)
        let m = [vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(rank_exact(&m), 3);
        assert_eq!(rank_mod_p(&m, 2), 2);
        assert_eq!(rank_mod_p(&m, 3), 3);
    }
}
