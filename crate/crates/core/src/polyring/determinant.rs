use super::sparse::{CoefficientRing, SparsePoly};
use crate::error::{Error, Result};

/// Division-free determinant by Laplace expansion along rows, memoized over
/// the set of columns still available.
///
/// `minors[S]` is the determinant of the bottom `|S|` rows restricted to the
/// columns in `S`; each level is built from the one below, for
/// `n · 2^n` ring multiplications in total.
pub fn determinant<R: CoefficientRing>(matrix: &[Vec<SparsePoly<R>>]) -> Result<SparsePoly<R>> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: matrix.first().map_or(0, Vec::len),
        });
    }
    if n > 20 {
        return Err(Error::SizeGuard { size: n, limit: 20 });
    }
    let ring = matrix[0][0].ring().clone();
    let vars = matrix[0][0].vars();

    let mut minors: Vec<Option<SparsePoly<R>>> = vec![None; 1 << n];
    minors[0] = Some(SparsePoly::one(ring.clone(), vars));
    for size in 1..=n {
        let row = &matrix[n - size];
        for set in 1usize..(1 << n) {
            if set.count_ones() as usize != size {
                continue;
            }
            let mut acc = SparsePoly::zero(ring.clone(), vars);
            // Sign of column j within `set` alternates with its rank.
            for (rank, j) in (0..n).filter(|j| set & (1 << j) != 0).enumerate() {
                let entry = &row[j];
                if entry.is_zero() {
                    continue;
                }
                let minor = minors[set & !(1 << j)]
                    .as_ref()
                    .expect("minors one size down are kept");
                if minor.is_zero() {
                    continue;
                }
                let term = entry.try_mul(minor)?;
                acc = if rank % 2 == 0 {
                    acc.try_add(&term)?
                } else {
                    acc.try_sub(&term)?
                };
            }
            minors[set] = Some(acc);
        }
        // Minors of the previous size are no longer needed.
        if size > 1 {
            for (set, minor) in minors.iter_mut().enumerate().skip(1) {
                if set.count_ones() as usize == size - 1 {
                    *minor = None;
                }
            }
        }
    }
    Ok(minors[(1 << n) - 1].take().expect("full minor computed"))
}
