//! Affine Hilbert functions of weight-determined sets.
//!
//! `H_d(E)` is the dimension of the space of functions on the union of
//! layers `E` that are represented by polynomials of degree at most `d`.
//! It is computed two ways: the closed form driven by the BE enumeration of
//! `E`, and the rank of the evaluation matrix `Ev_{[0,d],E}`.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grid::{LayerSizeTable, UniformGrid, WeightSet};
use crate::linalg::{eval_matrix, rank, LabeledMatrix};

/// The `(N, d)`-BE enumeration of a weight set `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeEnumeration {
    /// `[0,d] \ E`, descending: `t_1 > t_2 > ...`.
    pub t_desc: Vec<usize>,
    /// `E \ [0,d]`, ascending: `w_1 < w_2 < ...`.
    pub w_asc: Vec<usize>,
    /// `E ∩ [0,d]`.
    pub kept: WeightSet,
}

impl BeEnumeration {
    /// The pairs `(t_j, w_j)` for `j <= min(l, r)`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.t_desc.iter().copied().zip(self.w_asc.iter().copied())
    }
}

pub fn be_enumeration(max_weight: usize, d: usize, e: &WeightSet) -> Result<BeEnumeration> {
    if d > max_weight {
        return Err(Error::DegreeOutOfRange { degree: d, max: max_weight });
    }
    e.check_within(max_weight)?;
    let t_desc = (0..=d).rev().filter(|&t| !e.contains(t)).collect();
    let w_asc = e.iter().filter(|&w| w > d).collect();
    let kept = e.iter().filter(|&w| w <= d).collect();
    Ok(BeEnumeration { t_desc, w_asc, kept })
}

/// Single layer: `H_d(w) = min(|d|, |w|)` for `d <= w`, and `|w|` for `d >= w`.
///
/// Both cases are `min(|min(d, floor(N/2))|, |w|)`, which is what is returned.
pub fn hilbert_layer(grid: &UniformGrid, d: usize, w: usize) -> Result<BigUint> {
    grid.check_weight(d)?;
    grid.check_weight(w)?;
    Ok(grid.layer_sizes().min_of(d.min(grid.max_weight() / 2), w))
}

/// Closed form of `H_d(E)` from a precomputed layer size table.
pub fn hilbert_from_sizes(sizes: &LayerSizeTable, d: usize, e: &WeightSet) -> Result<BigUint> {
    let be = be_enumeration(sizes.max_weight(), d, e)?;
    let kept = sizes.total(&be.kept);
    let paired: BigUint = be.pairs().map(|(t, w)| sizes.min_of(t, w)).sum();
    Ok(kept + paired)
}

/// Closed form of `H_d(E)`: `sum_{w in E∩[0,d]} |w| + sum_j min(|t_j|, |w_j|)`.
pub fn hilbert_closed(grid: &UniformGrid, d: usize, e: &WeightSet) -> Result<BigUint> {
    hilbert_from_sizes(&grid.layer_sizes(), d, e)
}

/// `H_d(E) = rank(Ev_{[0,d],E})`, by exact elimination.
pub fn hilbert_rank_oracle(grid: &UniformGrid, d: usize, e: &WeightSet) -> Result<usize> {
    grid.check_degree(d)?;
    rank_block(grid, &WeightSet::interval(0, d), e)
}

/// Boolean-cube closed form with binomial layer sizes.
pub fn hilbert_cube_closed(n: usize, d: usize, e: &WeightSet) -> Result<BigUint> {
    let be = be_enumeration(n, d, e)?;
    let size = |j: usize| binomial(BigUint::from(n), BigUint::from(j));
    let kept: BigUint = be.kept.iter().map(size).sum();
    let paired: BigUint = be.pairs().map(|(t, w)| size(t).min(size(w))).sum();
    Ok(kept + paired)
}

/// The sequence `((u_1,v_1), ..., (u_{d+1},v_{d+1}))` pairing the `d+1`
/// smallest weights of `E` with `[0,d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertProfile {
    pub pairs: Vec<(usize, usize)>,
}

impl HilbertProfile {
    /// `sum_j min(|u_j|, |v_j|)`.
    pub fn value(&self, sizes: &LayerSizeTable) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for &(u, v) in &self.pairs {
            for j in [u, v] {
                if j > sizes.max_weight() {
                    return Err(Error::WeightOutOfRange { weight: j, max: sizes.max_weight() });
                }
            }
            total += sizes.min_of(u, v);
        }
        Ok(total)
    }
}

pub fn hilbert_profile(d: usize, e: &WeightSet) -> Result<HilbertProfile> {
    if e.len() < d + 1 {
        return Err(Error::SetTooSmall { size: e.len(), needed: d + 1 });
    }
    let u: Vec<usize> = e.iter().take(d + 1).collect();
    // weights of [0,d] not matched to themselves, handed out largest first
    let mut free = (0..=d).rev().filter(|t| !u.contains(t));
    let pairs = u
        .iter()
        .map(|&uj| {
            let vj = if uj <= d { uj } else { free.next().expect("counts agree") };
            (uj, vj)
        })
        .collect();
    Ok(HilbertProfile { pairs })
}

/// Checks whether `t -> values[t - c]` on the interval `c..=d` is interval-compatible:
///
/// * `w_t >= t` for every `t`;
/// * `w_t != t` implies `w_t > d`;
/// * for `s < t` with both values outside the interval, `w_t < w_s`.
///
/// An empty range (`c == d + 1`) is compatible.
pub fn is_interval_compatible(interval: RangeInclusive<usize>, values: &[usize]) -> Result<bool> {
    let (c, d) = (*interval.start(), *interval.end());
    let len = if c > d { 0 } else { d - c + 1 };
    if values.len() != len {
        return Err(Error::LengthMismatch { expected: len, found: values.len() });
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEntries { value: w[0] });
    }
    let mut last_outside: Option<usize> = None;
    for (offset, &w) in values.iter().enumerate() {
        let t = c + offset;
        if w < t || (w != t && w <= d) {
            return Ok(false);
        }
        if !interval.contains(&w) {
            if last_outside.is_some_and(|prev| w >= prev) {
                return Ok(false);
            }
            last_outside = Some(w);
        }
    }
    Ok(true)
}

/// `rank(Ev_{D,E})`.
pub fn rank_block(grid: &UniformGrid, rows: &WeightSet, cols: &WeightSet) -> Result<usize> {
    let m: LabeledMatrix<BigInt> = eval_matrix(grid, rows, cols)?;
    Ok(rank(m.entries()).rank)
}
