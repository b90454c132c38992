//! Exact rank by fraction-free (Bareiss) elimination.
//!
//! Rows are first scaled to integers, then eliminated in `i128`. If an
//! intermediate minor overflows, the whole elimination is redone over
//! `BigInt`. Pivots are the first nonzero entry in scan order, so the pivot
//! columns are exactly the greedy left-to-right independent columns.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::grid::GridPoint;
use crate::linalg::matrix::{LabeledMatrix, Matrix};
use crate::scalar::{narrow_rows, RingInt, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    /// Pivot column indices, ascending.
    pub pivot_cols: Vec<usize>,
}

/// Fraction-free elimination over `D`; `None` if `D` overflows.
pub fn bareiss<D: RingInt>(mut a: Vec<Vec<D>>, ncols: usize) -> Option<RankResult> {
    let nrows = a.len();
    let mut prev = D::one();
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                // (piv * row[j] - lead * pivot_row[j]) / prev, exact
                let x = piv.checked_mul(&row[j])?;
                let y = lead.checked_mul(&pivot_row[j])?;
                row[j] = x.checked_sub(&y)?.div_floor(&prev);
            }
            row[c] = D::zero();
        }
        prev = piv;
        pivot_cols.push(c);
        r += 1;
    }
    Some(RankResult { rank: r, pivot_cols })
}

/// Rank of integer rows, trying `i128` before `BigInt`.
pub(crate) fn integer_rank(rows: Vec<Vec<BigInt>>, ncols: usize) -> RankResult {
    if let Some(small) = narrow_rows::<i128>(&rows) {
        if let Some(res) = bareiss(small, ncols) {
            return res;
        }
    }
    bareiss(rows, ncols).expect("BigInt arithmetic does not overflow")
}

/// Exact rank and leftmost greedy pivot columns.
pub fn rank<T: Scalar>(m: &Matrix<T>) -> RankResult {
    let rows: Vec<Vec<BigInt>> = m.row_vecs().map(T::integer_row).collect();
    integer_rank(rows, m.cols())
}

/// Greedy maximal independent column set, scanning columns in `order`.
///
/// Returns the chosen column indices (original numbering), ascending.
pub fn pivot_columns_in_order<T: Scalar>(m: &Matrix<T>, order: &[usize]) -> Result<Vec<usize>> {
    check_permutation(order, m.cols())?;
    let res = rank(&m.select_columns(order));
    let mut cols: Vec<usize> = res.pivot_cols.iter().map(|&j| order[j]).collect();
    cols.sort_unstable();
    Ok(cols)
}

/// Labeled variant of [`pivot_columns_in_order`]; returns the chosen column labels, sorted.
pub fn pivot_labels_in_order<T: Scalar>(m: &LabeledMatrix<T>, order: &[usize]) -> Result<Vec<GridPoint>> {
    let cols = pivot_columns_in_order(m.entries(), order)?;
    let mut labels: Vec<GridPoint> = cols.into_iter().map(|j| m.col_labels()[j].clone()).collect();
    labels.sort();
    Ok(labels)
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::BadPermutation { columns: n });
    }
    for &j in order {
        if j >= n || std::mem::replace(&mut seen[j], true) {
            return Err(Error::BadPermutation { columns: n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    /// Plain Gaussian elimination over rationals; independent of the Bareiss path.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let ncols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[r][c];
                    #[allow(clippy::needless_range_loop)]
                    for j in 0..ncols {
                        let t = &f * &a[r][j];
                        a[i][j] -= t;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn mat(rows: &[Vec<i64>]) -> Matrix<i64> {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(cols, rows.to_vec()).unwrap()
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        let m = Matrix::<i64>::zeros(0, 0);
        assert_eq!(rank(&m), RankResult { rank: 0, pivot_cols: vec![] });
        assert_eq!(rank(&Matrix::<i64>::zeros(3, 0)).rank, 0);
        assert_eq!(rank(&Matrix::<i64>::zeros(0, 3)).rank, 0);
    }

    #[test]
    fn diagonal_has_full_rank() {
        let m = Matrix::<i64>::from_fn(4, 4, |i, j| if i == j { (i + 2) as i64 } else { 0 });
        assert_eq!(rank(&m).rank, 4);
    }

    #[test]
    fn pivots_skip_dependent_columns() {
        let m = mat(&[vec![1, 2, 0, 1], vec![2, 4, 1, 0]]);
        assert_eq!(rank(&m).pivot_cols, vec![0, 2]);
    }

    #[test]
    fn pivot_order_examples() {
        let z = Matrix::<i64>::zeros(2, 2);
        assert!(pivot_columns_in_order(&z, &[1, 0]).unwrap().is_empty());
        let id = Matrix::<i64>::identity(3);
        assert_eq!(pivot_columns_in_order(&id, &[0, 1, 2]).unwrap(), vec![0, 1, 2]);
        let ones = mat(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(pivot_columns_in_order(&ones, &[0, 1]).unwrap(), vec![0]);
        assert_eq!(pivot_columns_in_order(&ones, &[1, 0]).unwrap(), vec![1]);
        assert_eq!(
            pivot_columns_in_order(&ones, &[0, 0]),
            Err(Error::BadPermutation { columns: 2 })
        );
        assert_eq!(
            pivot_columns_in_order(&ones, &[0]),
            Err(Error::BadPermutation { columns: 2 })
        );
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Entries near 2^62 make the 2x2 minors overflow i128 after a few steps.
        let big = 1i64 << 62;
        let m = mat(&[
            vec![big, big - 1, 3, 1],
            vec![big - 7, big, 5, 2],
            vec![big - 3, big - 5, big, 7],
            vec![1, big - 11, big - 13, big],
        ]);
        assert!(bareiss(
            m.row_vecs().map(|r| r.iter().map(|&v| v as i128).collect()).collect(),
            4
        )
        .is_none());
        let rows: Vec<Vec<i64>> = m.row_vecs().map(<[i64]>::to_vec).collect();
        assert_eq!(rank(&m).rank, rational_rank(&rows));
    }

    #[test]
    fn rational_entries() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let m = Matrix::from_rows(2, vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), BigRational::one()]]).unwrap();
        assert_eq!(rank(&m).rank, 1);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r)
        })
    }

    proptest! {
        #[test]
        fn matches_rational_elimination(rows in small_matrix()) {
            let cols = rows.first().map_or(0, Vec::len);
            let m = Matrix::from_rows(cols, rows.clone()).unwrap();
            prop_assert_eq!(rank(&m).rank, rational_rank(&rows));
        }

        #[test]
        fn transpose_invariant(rows in small_matrix()) {
            let cols = rows.first().map_or(0, Vec::len);
            let m = Matrix::from_rows(cols, rows).unwrap();
            prop_assert_eq!(rank(&m).rank, rank(&m.transpose()).rank);
        }

        #[test]
        fn invariant_under_permutation_and_scaling(
            rows in small_matrix(),
            seed in any::<u64>(),
            factor in prop_oneof![-5i64..-1, 1i64..6],
        ) {
            let cols = rows.first().map_or(0, Vec::len);
            let m = Matrix::from_rows(cols, rows.clone()).unwrap();
            let mut rperm: Vec<usize> = (0..m.rows()).collect();
            let mut cperm: Vec<usize> = (0..m.cols()).collect();
            // deterministic shuffle from the seed
            let mut s = seed;
            for v in [&mut rperm, &mut cperm] {
                for i in (1..v.len()).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    v.swap(i, (s >> 33) as usize % (i + 1));
                }
            }
            let mut p = m.select_rows(&rperm).select_columns(&cperm).map(|&v| BigRational::from_integer(v.into()));
            if p.rows() > 0 {
                let q = BigRational::new(factor.into(), 7.into());
                for j in 0..p.cols() {
                    let v = p.get(0, j).clone() * q.clone();
                    p.set(0, j, v);
                }
            }
            prop_assert_eq!(rank(&m).rank, rank(&p).rank);
        }

        #[test]
        fn pivots_are_independent_and_maximal(rows in small_matrix()) {
            let cols = rows.first().map_or(0, Vec::len);
            let m = Matrix::from_rows(cols, rows).unwrap();
            let res = rank(&m);
            prop_assert_eq!(res.rank, res.pivot_cols.len());
            prop_assert_eq!(rank(&m.select_columns(&res.pivot_cols)).rank, res.rank);
        }
    }
}
