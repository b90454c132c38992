//! Finite-degree closures of weight-determined sets.
//!
//! The combinatorial side is the operator `L_{N,d}` and its fixpoint
//! `L̄_{N,d}`. The algebraic side is the degree-`d` Z-closure, computed by a
//! rank-increase test: `x` is in the closure of `A` exactly when the column
//! of `x` in the degree-`<= d` evaluation matrix lies in the span of the
//! columns of `A`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::grid::{GridPoint, UniformGrid, WeightSet};
use crate::linalg::builders::falling_factorial_unchecked;
use crate::linalg::SpanTracker;

fn check_degree(max_weight: usize, d: usize) -> Result<()> {
    if d > max_weight {
        return Err(Error::DegreeOutOfRange { degree: d, max: max_weight });
    }
    Ok(())
}

/// One application of `L_{N,d}`.
///
/// With `E = {t_1 < ... < t_s}`: `E` itself if `s <= d`, otherwise
/// `[0, t_{s-d}] ∪ E ∪ [t_{d+1}, N]`.
pub fn l_step(max_weight: usize, d: usize, e: &WeightSet) -> Result<WeightSet> {
    check_degree(max_weight, d)?;
    e.check_within(max_weight)?;
    let s = e.len();
    if s <= d {
        return Ok(e.clone());
    }
    let t = e.members();
    let low = WeightSet::interval(0, t[s - d - 1]);
    let high = WeightSet::interval(t[d], max_weight);
    Ok(low.union(e).union(&high))
}

/// `L̄_{N,d}(E)` and the number of steps that changed the set.
pub fn l_bar_with_iterations(max_weight: usize, d: usize, e: &WeightSet) -> Result<(WeightSet, usize)> {
    let mut cur = e.clone();
    let mut steps = 0;
    loop {
        let next = l_step(max_weight, d, &cur)?;
        if next == cur {
            return Ok((cur, steps));
        }
        cur = next;
        steps += 1;
    }
}

/// `L̄_{N,d}(E)`, the union of all iterates of `L_{N,d}` on `E`.
pub fn l_bar(max_weight: usize, d: usize, e: &WeightSet) -> Result<WeightSet> {
    l_bar_with_iterations(max_weight, d, e).map(|(s, _)| s)
}

/// `T_{N,i} = [0, i-1] ∪ [N-i+1, N]`.
pub fn t_set(max_weight: usize, i: usize) -> Result<WeightSet> {
    if i > max_weight {
        return Err(Error::WeightOutOfRange { weight: i, max: max_weight });
    }
    if i == 0 {
        return Ok(WeightSet::empty());
    }
    Ok(WeightSet::interval(0, i - 1).union(&WeightSet::interval(max_weight - i + 1, max_weight)))
}

/// Precomputed evaluation columns of every grid point against all
/// falling-factorial rows, for repeated closure queries on one grid.
///
/// Rows are ordered by weight, so the rows of weight `<= d` form a prefix.
#[derive(Debug, Clone)]
pub struct ClosureOracle {
    grid: UniformGrid,
    /// `prefix[d]` = number of exponents of weight `<= d`.
    prefix: Vec<usize>,
    /// Points of each layer, as indices into `columns`.
    layers: Vec<Vec<usize>>,
    points: Vec<GridPoint>,
    index: HashMap<GridPoint, usize>,
    columns: Vec<Vec<BigInt>>,
}

impl ClosureOracle {
    pub fn new(grid: &UniformGrid) -> Self {
        let n = grid.max_weight();
        let all = WeightSet::interval(0, n);
        let exps = grid.unfold(&all).expect("full weight range is valid");
        let mut prefix = Vec::with_capacity(n + 1);
        let mut layers = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for j in 0..=n {
            let len = grid.layer(j).expect("weight in range").len();
            layers.push((acc..acc + len).collect());
            acc += len;
            prefix.push(acc);
        }
        let columns = exps
            .iter()
            .map(|beta| exps.iter().map(|alpha| falling_factorial_unchecked(alpha, beta)).collect())
            .collect();
        let index = exps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        ClosureOracle { grid: grid.clone(), prefix, layers, points: exps, index, columns }
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    fn column(&self, i: usize, d: usize) -> &[BigInt] {
        &self.columns[i][..self.prefix[d]]
    }

    fn span_of(&self, d: usize, members: impl IntoIterator<Item = usize>) -> SpanTracker {
        let dim = self.prefix[d];
        let mut t = SpanTracker::new(dim);
        for i in members {
            if t.rank() == dim {
                break;
            }
            t.insert(self.column(i, d));
        }
        t
    }

    /// Degree-`d` Z-closure of an arbitrary point set, in canonical order.
    pub fn z_closure(&self, d: usize, a: &[GridPoint]) -> Result<Vec<GridPoint>> {
        self.grid.check_degree(d)?;
        let mut ids = Vec::with_capacity(a.len());
        for p in a {
            self.grid.check_point(p)?;
            ids.push(self.index[p]);
        }
        if ids.is_empty() {
            return Ok(Vec::new());
        }
        let mut span = self.span_of(d, ids);
        Ok((0..self.points.len())
            .filter(|&i| span.contains(self.column(i, d)))
            .map(|i| self.points[i].clone())
            .collect())
    }

    /// Degree-`d` Z*-closure: the weights whose whole layer lies in the Z-closure of `E̲`.
    pub fn zstar(&self, d: usize, e: &WeightSet) -> Result<WeightSet> {
        self.grid.check_degree(d)?;
        e.check_within(self.grid.max_weight())?;
        if e.is_empty() {
            return Ok(WeightSet::empty());
        }
        let mut span = self.span_of(d, e.iter().flat_map(|j| self.layers[j].iter().copied()));
        let full = span.rank() == span.dim();
        Ok((0..=self.grid.max_weight())
            .filter(|&j| {
                full || e.contains(j) || self.layers[j].iter().all(|&i| span.contains(self.column(i, d)))
            })
            .collect())
    }
}

/// Degree-`d` Z-closure of a point set.
pub fn z_closure_points(grid: &UniformGrid, d: usize, a: &[GridPoint]) -> Result<Vec<GridPoint>> {
    ClosureOracle::new(grid).z_closure(d, a)
}

/// Degree-`d` Z*-closure of a weight-determined set.
pub fn zstar_closure(grid: &UniformGrid, d: usize, e: &WeightSet) -> Result<WeightSet> {
    ClosureOracle::new(grid).zstar(d, e)
}

/// Both closures of one set, side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub input: WeightSet,
    pub lbar: WeightSet,
    pub zstar: WeightSet,
    pub iterations: usize,
}

impl ClosureReport {
    pub fn agree(&self) -> bool {
        self.lbar == self.zstar
    }
}

pub fn closure_report(grid: &UniformGrid, d: usize, e: &WeightSet) -> Result<ClosureReport> {
    let (lbar, iterations) = l_bar_with_iterations(grid.max_weight(), d, e)?;
    let zstar = zstar_closure(grid, d, e)?;
    Ok(ClosureReport { input: e.clone(), lbar, zstar, iterations })
}
