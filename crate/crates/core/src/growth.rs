//! Dimension of the cover semigroup ring from the growth of its graded
//! pieces, independent of any linear algebra.
//!
//! `H(t)` counts the distinct sums of `t` rows of `B_G` (with repetition),
//! i.e. the monomials of degree `t` in the ring. It grows like a polynomial
//! of degree `dim - 1`; iterated finite differences expose that degree.

use std::collections::HashSet;

use crate::algebra::ExponentMatrix;

pub const MAX_ROWS: usize = 12;
pub const MAX_N: usize = 6;
pub const MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrowthError {
    #[error("instance outside the growth guard (d={d}, n={n}, max_degree={max_degree})")]
    Guard {
        d: usize,
        n: usize,
        max_degree: usize,
    },
    #[error("growth did not stabilise within degree {max_degree}: H = {values:?}")]
    Inconclusive { max_degree: usize, values: Vec<u64> },
}

// Each coordinate of a degree-t sum is at most t <= 12, so 4 bits suffice
// and packed addition never carries between coordinates.
fn pack(entries: &[u8]) -> u64 {
    entries
        .iter()
        .enumerate()
        .fold(0, |acc, (k, &e)| acc | u64::from(e) << (4 * k))
}

/// `H(1), .., H(max_degree)`.
pub fn hilbert_counts(matrix: &ExponentMatrix, max_degree: usize) -> Result<Vec<u64>, GrowthError> {
    let guard = GrowthError::Guard {
        d: matrix.d(),
        n: matrix.n,
        max_degree,
    };
    if matrix.d() > MAX_ROWS || matrix.n > MAX_N || max_degree > MAX_DEGREE {
        return Err(guard);
    }
    let rows: Vec<u64> = {
        let mut r: Vec<u64> = matrix.rows.iter().map(|v| pack(v.entries())).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    let mut level: HashSet<u64> = rows.iter().copied().collect();
    let mut counts = Vec::with_capacity(max_degree);
    for t in 1..=max_degree {
        if t > 1 {
            level = level
                .iter()
                .flat_map(|&s| rows.iter().map(move |&r| s + r))
                .collect();
        }
        counts.push(level.len() as u64);
    }
    Ok(counts)
}

/// `1 + deg`, where `deg` is the smallest `k` whose `k`-th finite difference
/// of `H` has its last three values equal.
pub fn growth_oracle(matrix: &ExponentMatrix, max_degree: usize) -> Result<usize, GrowthError> {
    let counts = hilbert_counts(matrix, max_degree)?;
    let mut diff: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
    let mut k = 0;
    while diff.len() >= 3 {
        let tail = &diff[diff.len() - 3..];
        if tail[0] == tail[1] && tail[1] == tail[2] {
            return Ok(k + 1);
        }
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        k += 1;
    }
    Err(GrowthError::Inconclusive {
        max_degree,
        values: counts,
    })
}
