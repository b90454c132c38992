//! Structured matrices on layers of a uniform grid.
//!
//! Rows of an evaluation matrix are the falling-factorial polynomials
//! `Y^(alpha) = prod_i X_i (X_i - 1) ... (X_i - alpha_i + 1)` and columns are
//! points, so `Ev(alpha, beta) = alpha! * binom(beta, alpha)`. Rows and
//! columns follow the canonical order of [`UniformGrid::unfold`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grid::{GridPoint, UniformGrid, WeightSet};
use crate::linalg::matrix::LabeledMatrix;
use crate::scalar::Scalar;

/// `Y^(alpha)(beta) = prod_i beta_i (beta_i - 1) ... (beta_i - alpha_i + 1)`.
///
/// Zero exactly when some `alpha_i > beta_i`.
pub fn falling_factorial_value(alpha: &GridPoint, beta: &GridPoint) -> Result<BigInt> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch { expected: alpha.len(), found: beta.len() });
    }
    Ok(falling_factorial_unchecked(alpha, beta))
}

pub(crate) fn falling_factorial_unchecked(alpha: &GridPoint, beta: &GridPoint) -> BigInt {
    let mut acc = BigInt::one();
    for (&a, &b) in alpha.coords().iter().zip(beta.coords()) {
        if a > b {
            return BigInt::zero();
        }
        for t in 0..a {
            acc *= b - t;
        }
    }
    acc
}

/// `alpha!`.
pub(crate) fn multi_factorial(alpha: &GridPoint) -> BigInt {
    falling_factorial_unchecked(alpha, alpha)
}

/// `Ev_{D,E}`: rows are the points of `D`, columns the points of `E`.
pub fn eval_matrix<T>(grid: &UniformGrid, rows: &WeightSet, cols: &WeightSet) -> Result<LabeledMatrix<T>>
where
    T: Scalar + From<BigInt>,
{
    let r = grid.unfold(rows)?;
    let c = grid.unfold(cols)?;
    eval_matrix_on(r, c)
}

/// Evaluation matrix for arbitrary exponent rows and point columns.
pub fn eval_matrix_on<T>(rows: Vec<GridPoint>, cols: Vec<GridPoint>) -> Result<LabeledMatrix<T>>
where
    T: Scalar + From<BigInt>,
{
    LabeledMatrix::tabulate(rows, cols, |a, b| T::from(falling_factorial_unchecked(a, b)))
}

/// `U_{d,d+1}`: 0/1 matrix from layer `d` to layer `d+1`, `1` when `alpha <= beta`.
pub fn up_matrix<T: Scalar>(grid: &UniformGrid, d: usize) -> Result<LabeledMatrix<T>> {
    if d >= grid.max_weight() {
        return Err(Error::WeightOutOfRange { weight: d + 1, max: grid.max_weight() });
    }
    LabeledMatrix::tabulate(grid.layer(d)?, grid.layer(d + 1)?, |a, b| {
        if a.le(b) {
            T::one()
        } else {
            T::zero()
        }
    })
}

/// `diag_w = diag(alpha! : alpha in layer w)`.
pub fn diag_matrix<T>(grid: &UniformGrid, w: usize) -> Result<LabeledMatrix<T>>
where
    T: Scalar + From<BigInt>,
{
    let layer = grid.layer(w)?;
    LabeledMatrix::tabulate(layer.clone(), layer, |a, b| {
        if a == b {
            T::from(multi_factorial(a))
        } else {
            T::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank::rank;
    use num_rational::BigRational;

    fn pt(c: &[usize]) -> GridPoint {
        GridPoint::new(c.to_vec())
    }

    fn grid(a: &[usize]) -> UniformGrid {
        UniformGrid::new(a.to_vec()).unwrap()
    }

    fn ints(m: &LabeledMatrix<BigInt>) -> Vec<Vec<i64>> {
        m.entries()
            .row_vecs()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect()
    }

    #[test]
    fn falling_factorial_examples() {
        let v = |a: &[usize], b: &[usize]| falling_factorial_value(&pt(a), &pt(b)).unwrap();
        assert_eq!(v(&[0, 0], &[2, 1]), BigInt::from(1));
        assert_eq!(v(&[1, 0], &[2, 1]), BigInt::from(2));
        assert_eq!(v(&[2, 2], &[2, 1]), BigInt::from(0));
        assert_eq!(
            falling_factorial_value(&pt(&[1]), &pt(&[1, 1])),
            Err(Error::LengthMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn eval_matrix_examples() {
        let g22 = grid(&[2, 2]);
        let one: LabeledMatrix<BigInt> =
            eval_matrix(&g22, &WeightSet::new([2]), &WeightSet::new([2])).unwrap();
        assert_eq!(ints(&one), vec![vec![1]]);
        let row: LabeledMatrix<BigInt> =
            eval_matrix(&g22, &WeightSet::new([0]), &WeightSet::new([1])).unwrap();
        assert_eq!(ints(&row), vec![vec![1, 1]]);

        let m: LabeledMatrix<BigInt> =
            eval_matrix(&grid(&[3, 3]), &WeightSet::new([1]), &WeightSet::new([2])).unwrap();
        assert_eq!(m.row_labels(), &[pt(&[0, 1]), pt(&[1, 0])]);
        assert_eq!(m.col_labels(), &[pt(&[0, 2]), pt(&[1, 1]), pt(&[2, 0])]);
        assert_eq!(ints(&m), vec![vec![2, 1, 0], vec![0, 1, 2]]);

        let bad = eval_matrix::<BigInt>(&g22, &WeightSet::new([3]), &WeightSet::new([0]));
        assert_eq!(bad.unwrap_err(), Error::WeightOutOfRange { weight: 3, max: 2 });
    }

    #[test]
    fn up_matrix_examples() {
        let u: LabeledMatrix<BigInt> = up_matrix(&grid(&[2, 2]), 0).unwrap();
        assert_eq!(ints(&u), vec![vec![1, 1]]);
        let u: LabeledMatrix<BigInt> = up_matrix(&grid(&[3, 3]), 0).unwrap();
        assert_eq!(ints(&u), vec![vec![1, 1]]);
        let u: LabeledMatrix<BigInt> = up_matrix(&grid(&[3, 3]), 1).unwrap();
        assert_eq!(ints(&u), vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(rank(u.entries()).rank, 2);
        assert!(up_matrix::<BigInt>(&grid(&[3, 3]), 4).is_err());
    }

    #[test]
    fn diagonal_layer_block_is_diag() {
        let g = grid(&[3, 4]);
        for w in 0..=g.max_weight() {
            let ev: LabeledMatrix<BigRational> =
                eval_matrix(&g, &WeightSet::new([w]), &WeightSet::new([w])).unwrap();
            let dg: LabeledMatrix<BigRational> = diag_matrix(&g, w).unwrap();
            assert_eq!(ev, dg);
            assert_eq!(rank(ev.entries()).rank, g.layer(w).unwrap().len());
        }
    }
}
