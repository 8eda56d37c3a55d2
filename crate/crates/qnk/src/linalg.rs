//! Exact inversion of integer matrices by one-step fraction-free
//! Gauss-Jordan elimination. All intermediate divisions are exact (the
//! divisor always divides), so the computation stays in `BigInt` and
//! returns a common denominator `d` with an integer matrix `B` such that
//! the true inverse is `B / d`. This backs the resistance oracle, where the
//! reduced Laplacian of a graph on up to 2^8 vertices must be inverted
//! exactly and every entry of the inverse shares one denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Past this many rows, row updates within an elimination step run in
/// parallel; below it the serial loop is faster.
const PARALLEL_THRESHOLD: usize = 64;

/// Inverts a square integer matrix exactly. Returns `Some((d, b))` with
/// `inverse = b / d` (entrywise), or `None` if the matrix is singular.
///
/// Implementation: one-step fraction-free Gauss-Jordan on the augmented
/// block [A | I]. Each elimination step rewrites row i as
/// (pivot * row_i - row_i[col] * pivot_row) / previous_pivot, and the
/// division is exact by the Desnanot-Jacobi determinant identity. After
/// the last step every processed column of the left block is diagonal, the
/// final pivot is d = +-det(A) in exact form, and the right block holds
/// d * A^{-1}. Only columns to the right of the current one are updated:
/// the skipped left-block entries are never read again, and the right
/// block starts as the identity so its columns only become active once
/// touched.
pub fn fraction_free_inverse(matrix: &[Vec<BigInt>]) -> Option<(BigInt, Vec<Vec<BigInt>>)> {
    let n = matrix.len();
    assert!(n > 0, "cannot invert an empty matrix");
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }

    // Augmented working matrix [A | I], width 2n.
    let mut work: Vec<Vec<BigInt>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut extended = row.clone();
            extended.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            extended
        })
        .collect();

    let mut previous_pivot = BigInt::one();
    for col in 0..n {
        // Processed columns are already diagonalized, so a zero pivot with
        // no nonzero entry below it means the matrix is singular.
        let pivot_row_index = (col..n).find(|&r| !work[r][col].is_zero())?;
        if pivot_row_index != col {
            work.swap(col, pivot_row_index);
        }
        let pivot_row = work[col].clone();
        let pivot = pivot_row[col].clone();

        let eliminate = |(i, row): (usize, &mut Vec<BigInt>)| {
            if i == col {
                return;
            }
            let factor = row[col].clone();
            for j in (col + 1)..(2 * n) {
                let numerator = &pivot * &row[j] - &factor * &pivot_row[j];
                let (quotient, remainder) = numerator.div_rem(&previous_pivot);
                debug_assert!(remainder.is_zero(), "fraction-free division not exact");
                row[j] = quotient;
            }
        };
        if n >= PARALLEL_THRESHOLD {
            work.par_iter_mut().enumerate().for_each(eliminate);
        } else {
            work.iter_mut().enumerate().for_each(eliminate);
        }
        previous_pivot = pivot;
    }

    // The right block now holds previous_pivot * A^{-1}. Normalize the
    // sign so the returned denominator is positive.
    let mut denominator = previous_pivot;
    let flip = denominator.is_negative();
    if flip {
        denominator = -denominator;
    }
    let inverse_scaled: Vec<Vec<BigInt>> = work
        .into_iter()
        .map(|row| {
            row.into_iter()
                .skip(n)
                .map(|entry| if flip { -entry } else { entry })
                .collect()
        })
        .collect();
    Some((denominator, inverse_scaled))
}

#[cfg(test)]
mod tests {
    // Index loops here mirror the textbook elimination steps on purpose.
    #![allow(clippy::needless_range_loop)]

    use super::*;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn from_i64(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Plain rational Gauss-Jordan used only as a test reference.
    fn rational_inverse(matrix: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
        let n = matrix.len();
        let mut work: Vec<Vec<BigRational>> = matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut extended: Vec<BigRational> = row
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect();
                extended.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                extended
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !work[r][col].is_zero())?;
            work.swap(col, pivot_row);
            let pivot = work[col][col].clone();
            for j in 0..2 * n {
                work[col][j] = &work[col][j] / &pivot;
            }
            for i in 0..n {
                if i == col || work[i][col].is_zero() {
                    continue;
                }
                let factor = work[i][col].clone();
                for j in 0..2 * n {
                    let delta = &factor * &work[col][j];
                    work[i][j] = &work[i][j] - delta;
                }
            }
        }
        Some(
            work.into_iter()
                .map(|row| row.into_iter().skip(n).collect())
                .collect(),
        )
    }

    fn assert_matches_reference(matrix: &[Vec<BigInt>]) {
        let ours = fraction_free_inverse(matrix);
        let reference = rational_inverse(matrix);
        match (ours, reference) {
            (None, None) => {}
            (Some((d, b)), Some(r)) => {
                assert!(d.is_positive());
                for i in 0..matrix.len() {
                    for j in 0..matrix.len() {
                        assert_eq!(
                            BigRational::new(b[i][j].clone(), d.clone()),
                            r[i][j],
                            "entry ({i},{j})"
                        );
                    }
                }
            }
            (ours, _) => panic!(
                "singularity disagreement: fraction-free said {}",
                if ours.is_some() {
                    "regular"
                } else {
                    "singular"
                }
            ),
        }
    }

    #[test]
    fn identity_and_single_entry() {
        let (d, b) = fraction_free_inverse(&from_i64(&[&[7]])).unwrap();
        assert_eq!(d, BigInt::from(7));
        assert_eq!(b, from_i64(&[&[1]]));

        let eye = from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let (d, b) = fraction_free_inverse(&eye).unwrap();
        assert_eq!(d, BigInt::one());
        assert_eq!(b, eye);
    }

    #[test]
    fn known_two_by_two() {
        // [[2,1],[1,1]] has determinant 1 and inverse [[1,-1],[-1,2]].
        let (d, b) = fraction_free_inverse(&from_i64(&[&[2, 1], &[1, 1]])).unwrap();
        assert_eq!(d, BigInt::one());
        assert_eq!(b, from_i64(&[&[1, -1], &[-1, 2]]));

        // [[1,2],[3,4]] has determinant -2; denominator comes back positive.
        let (d, b) = fraction_free_inverse(&from_i64(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(d, BigInt::from(2));
        assert_eq!(b, from_i64(&[&[-4, 2], &[3, -1]]));
    }

    #[test]
    fn singular_matrices_return_none() {
        assert!(fraction_free_inverse(&from_i64(&[&[0]])).is_none());
        assert!(fraction_free_inverse(&from_i64(&[&[1, 2], &[2, 4]])).is_none());
        assert!(fraction_free_inverse(&from_i64(&[&[1, 2, 3], &[4, 5, 6], &[5, 7, 9]])).is_none());
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let m = from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 0]]);
        assert_matches_reference(&m);
    }

    #[test]
    fn random_matrices_match_rational_reference() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4c494e414c47);
        for trial in 0..60 {
            let n = 1 + (trial % 7);
            let matrix: Vec<Vec<BigInt>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| BigInt::from(rng.gen_range(-9..=9i64)))
                        .collect()
                })
                .collect();
            assert_matches_reference(&matrix);
        }
    }

    #[test]
    fn random_laplacian_blocks_invert() {
        // Diagonally dominant symmetric matrices (reduced-Laplacian-like):
        // always invertible, exercising larger pivots.
        let mut rng = ChaCha8Rng::seed_from_u64(0x4c41504c);
        for _ in 0..20 {
            let n = 2 + rng.gen_range(0..6usize);
            let mut matrix = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let w = BigInt::from(-rng.gen_range(0..3i64));
                    matrix[i][j] = w.clone();
                    matrix[j][i] = w;
                }
            }
            for i in 0..n {
                let off_diagonal: BigInt = (0..n).filter(|&j| j != i).map(|j| -&matrix[i][j]).sum();
                matrix[i][i] = off_diagonal + 1;
            }
            assert_matches_reference(&matrix);
        }
    }
}
