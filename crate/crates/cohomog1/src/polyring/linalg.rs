//! Small exact linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

/// Rank of the row span, by fraction-free-ish Gaussian elimination (exact
/// `BigRational` arithmetic, no pivot-size heuristics needed at these sizes).
pub fn rank_rational(mut rows: Vec<Vec<BigRational>>) -> usize {
    rows.retain(|r| !r.is_empty());
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == width), "ragged matrix");
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let head_row = &upper[rank];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &head_row[col];
            for (dst, src) in row[col..].iter_mut().zip(&head_row[col..]) {
                *dst -= &factor * src;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
