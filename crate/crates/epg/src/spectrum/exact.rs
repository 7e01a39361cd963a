//! Exact rank of integer matrices by fraction-free (Bareiss) elimination
//! over arbitrary-precision integers. Intermediate entries are minors of
//! the input, so every division is exact and no rational arithmetic is
//! needed.

use num_bigint::BigInt;

/// Rank over the rationals of an integer matrix given in row-major order.
pub fn integer_rank(rows: usize, cols: usize, entries: &[i64]) -> usize {
    assert_eq!(entries.len(), rows * cols);
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigInt::from(entries[i * cols + j]))
                .collect()
        })
        .collect();

    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // First nonzero pivot in this column at or below `rank`.
        let pivot_row = (rank..rows).find(|&r| m[r][col] != zero);
        let Some(pivot_row) = pivot_row else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for i in (rank + 1)..rows {
            let factor = m[i][col].clone();
            for j in (col + 1)..cols {
                let val = (&m[i][j] * &pivot - &factor * &m[rank][j]) / &prev;
                m[i][j] = val;
            }
            m[i][col] = zero.clone();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_rank_and_singular() {
        assert_eq!(integer_rank(2, 2, &[1, 2, 3, 4]), 2);
        assert_eq!(integer_rank(2, 2, &[1, 2, 2, 4]), 1);
        assert_eq!(integer_rank(3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 0]), 0);
    }

    #[test]
    fn rank_of_rectangular_matrices() {
        assert_eq!(integer_rank(2, 3, &[1, 0, 0, 0, 1, 0]), 2);
        assert_eq!(integer_rank(3, 2, &[1, 2, 2, 4, 3, 6]), 1);
    }

    #[test]
    fn large_intermediate_values_are_exact() {
        // Hilbert-like scaled matrix: entries lcm/(i+j+1); full rank.
        let n = 7;
        let lcm: i64 = 360360;
        let entries: Vec<i64> = (0..n)
            .flat_map(|i| (0..n).map(move |j| lcm / (i + j + 1) as i64))
            .collect();
        assert_eq!(integer_rank(n, n, &entries), n);
    }

    #[test]
    fn rank_matches_minor_structure() {
        // Column skips: a zero column between pivot columns.
        let m = [
            1, 0, 2, 3, //
            2, 0, 4, 6, //
            0, 0, 1, 1, //
            1, 0, 0, 5, //
        ];
        assert_eq!(integer_rank(4, 4, &m), 3);
    }
}
