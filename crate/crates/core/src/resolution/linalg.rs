//! Ranks of small dense integer matrices over the rationals or a prime field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Field;

/// Rank of a row-major integer matrix over `field`.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Rational => rank_rational(rows),
        Field::Prime(p) => {
            let reduced: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
                .collect();
            rank_mod_p(reduced, p)
        }
    }
}

/// Gaussian elimination over `GF(p)`; entries must already be reduced.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][c], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let nrows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = BigRational::one() / m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &factor * y;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_depends_on_characteristic() {
        // determinant 2: singular only in characteristic 2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&m, Field::Rational), 2);
        assert_eq!(rank(&m, Field::Prime(3)), 2);
        assert_eq!(rank(&m, Field::Prime(2)), 1);
    }

    #[test]
    fn rank_of_degenerate_shapes() {
        assert_eq!(rank(&[], Field::Rational), 0);
        assert_eq!(rank(&[vec![]], Field::Prime(7)), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]], Field::Rational), 0);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&m, Field::Rational), 2);
        assert_eq!(rank(&m, Field::Prime(32003)), 2);
    }

    #[test]
    fn rational_and_modular_agree_on_random_small_matrices() {
        // LCG, so the test is deterministic
        let mut state: u64 = 12345;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 5) as i64 - 2
        };
        for _ in 0..50 {
            let m: Vec<Vec<i64>> = (0..5).map(|_| (0..6).map(|_| next()).collect()).collect();
            assert_eq!(rank(&m, Field::Rational), rank(&m, Field::Prime(1_000_003)));
        }
    }
}
