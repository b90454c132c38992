//! Incremental row-echelon basis for span membership tests.
//!
//! Used wherever vectors are offered one at a time and each must be
//! classified as independent of the ones kept so far: greedy standard
//! monomials and the rank-increase test behind Z-closures.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::scalar::{normalize_content, RingInt};

#[derive(Debug, Clone)]
struct Echelon<D> {
    /// `(pivot, row)` in insertion order; each row is zero at every earlier pivot.
    rows: Vec<(usize, Vec<D>)>,
}

impl<D: RingInt> Echelon<D> {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `v` against the basis. `Err(())` on overflow.
    fn reduce(&self, mut v: Vec<D>) -> Result<Vec<D>, ()> {
        for (p, b) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let g = b[*p].gcd(&v[*p]);
            let fb = b[*p].div_floor(&g);
            let fv = v[*p].div_floor(&g);
            for (x, y) in v.iter_mut().zip(b) {
                let l = fb.checked_mul(x).ok_or(())?;
                let r = fv.checked_mul(y).ok_or(())?;
                *x = l.checked_sub(&r).ok_or(())?;
            }
            normalize_content(&mut v);
        }
        Ok(v)
    }

    fn push(&mut self, v: Vec<D>) {
        let p = v.iter().position(|x| !x.is_zero()).expect("pushed vector is nonzero");
        self.rows.push((p, v));
    }
}

#[derive(Debug, Clone)]
enum Store {
    Small(Echelon<i128>),
    Big(Echelon<BigInt>),
}

/// Tracks the span of the vectors accepted so far.
#[derive(Debug, Clone)]
pub struct SpanTracker {
    dim: usize,
    store: Store,
}

impl SpanTracker {
    pub fn new(dim: usize) -> Self {
        SpanTracker { dim, store: Store::Small(Echelon::new()) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of accepted vectors (the rank so far).
    pub fn rank(&self) -> usize {
        match &self.store {
            Store::Small(e) => e.rows.len(),
            Store::Big(e) => e.rows.len(),
        }
    }

    fn promote(&mut self) {
        if let Store::Small(e) = &self.store {
            let rows = e
                .rows
                .iter()
                .map(|(p, r)| (*p, r.iter().map(|&x| BigInt::from(x)).collect()))
                .collect();
            self.store = Store::Big(Echelon { rows });
        }
    }

    /// Residual of `v` modulo the current span, in whichever arithmetic succeeds.
    fn residual(&mut self, v: &[BigInt]) -> Residual {
        assert_eq!(v.len(), self.dim, "vector length must match tracker dimension");
        if let Store::Small(e) = &self.store {
            if let Some(small) = v.iter().map(i128::from_big).collect::<Option<Vec<_>>>() {
                if let Ok(r) = e.reduce(small) {
                    return Residual::Small(r);
                }
            }
            self.promote();
        }
        match &self.store {
            Store::Big(e) => Residual::Big(e.reduce(v.to_vec()).expect("BigInt does not overflow")),
            Store::Small(_) => unreachable!("promoted above"),
        }
    }

    /// True if `v` lies in the current span.
    pub fn contains(&mut self, v: &[BigInt]) -> bool {
        match self.residual(v) {
            Residual::Small(r) => r.iter().all(Zero::is_zero),
            Residual::Big(r) => r.iter().all(Zero::is_zero),
        }
    }

    /// Adds `v` if it is independent of the span; returns whether it was added.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        match self.residual(v) {
            Residual::Small(r) => {
                if r.iter().all(Zero::is_zero) {
                    return false;
                }
                match &mut self.store {
                    Store::Small(e) => e.push(r),
                    Store::Big(e) => e.push(r.into_iter().map(BigInt::from).collect()),
                }
                true
            }
            Residual::Big(r) => {
                if r.iter().all(Zero::is_zero) {
                    return false;
                }
                self.promote();
                match &mut self.store {
                    Store::Big(e) => e.push(r),
                    Store::Small(_) => unreachable!("promoted above"),
                }
                true
            }
        }
    }
}

enum Residual {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::Matrix;
    use crate::linalg::rank::rank;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn detects_dependence() {
        let mut t = SpanTracker::new(3);
        assert!(t.insert(&big(&[1, 2, 3])));
        assert!(t.insert(&big(&[0, 1, 1])));
        assert!(t.contains(&big(&[2, 5, 7])));
        assert!(!t.insert(&big(&[1, 3, 4])));
        assert!(t.insert(&big(&[0, 0, 5])));
        assert_eq!(t.rank(), 3);
        assert!(!t.insert(&big(&[0, 0, 0])));
    }

    #[test]
    fn survives_overflow() {
        let huge = BigInt::from(i128::MAX) * BigInt::from(3);
        let mut t = SpanTracker::new(2);
        assert!(t.insert(&big(&[1, 2])));
        assert!(t.insert(&[huge.clone(), BigInt::from(1)]));
        assert!(t.contains(&[huge, BigInt::from(7)]));
        assert_eq!(t.rank(), 2);
    }

    proptest! {
        #[test]
        fn greedy_rank_matches_bareiss(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 0..7)) {
            let mut t = SpanTracker::new(4);
            let mut kept = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                if t.insert(&big(r)) {
                    kept.push(i);
                }
            }
            // rows are the vectors, so the greedy choice is the pivot set of the transpose
            let m = Matrix::from_rows(4, rows.clone()).unwrap();
            let res = rank(&m.transpose());
            prop_assert_eq!(t.rank(), res.rank);
            prop_assert_eq!(kept, res.pivot_cols);
        }
    }
}
