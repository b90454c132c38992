//! Uniform grids, their points, weights and layers.
//!
//! A uniform grid is the product `[0, k_1-1] x ... x [0, k_n-1]` with every
//! `k_i >= 2`. The weight of a point is the sum of its coordinates and ranges
//! over `[0, N]` with `N = sum(k_i - 1)`. A union of whole layers (all points
//! of some weights) is identified with the set of those weights, a
//! [`WeightSet`].
//!
//! All point listings produced here are in lexicographic order with
//! coordinate 1 most significant. Every matrix layout in the crate inherits
//! that order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A finite uniform grid `[0, k_1-1] x ... x [0, k_n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformGrid {
    arities: Vec<usize>,
    max_weight: usize,
}

/// A grid point, equally read as a monomial exponent vector or a multiset on `[n]`.
///
/// The derived ordering compares coordinates lexicographically, coordinate 1
/// first, which is the grid's lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint(Vec<usize>);

impl GridPoint {
    pub fn new(coords: Vec<usize>) -> Self {
        GridPoint(coords)
    }

    pub fn zeros(n: usize) -> Self {
        GridPoint(vec![0; n])
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Sum of coordinates.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &GridPoint) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum (multiset intersection).
    pub fn meet(&self, other: &GridPoint) -> GridPoint {
        GridPoint(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    /// Number of points componentwise below `self`, `prod(b_i + 1)`.
    pub fn down_set_size(&self) -> BigUint {
        self.0.iter().fold(BigUint::one(), |acc, &c| acc * BigUint::from(c + 1))
    }
}

impl From<Vec<usize>> for GridPoint {
    fn from(coords: Vec<usize>) -> Self {
        GridPoint(coords)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for GridPoint {
    type Err = Error;

    /// Parses `"1,0,2"` or `"(1,0,2)"`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{}` in point `{s}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(GridPoint)
    }
}

/// Parses a `;`-separated list of points, e.g. `"0,0;1,1"`.
pub fn parse_points(s: &str) -> Result<Vec<GridPoint>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(GridPoint::from_str)
        .collect()
}

/// A set of weights in `[0, N]`, sorted ascending without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightSet(Vec<usize>);

impl WeightSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        WeightSet(v)
    }

    pub fn empty() -> Self {
        WeightSet(Vec::new())
    }

    /// All weights `lo..=hi`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        WeightSet((lo..=hi).collect())
    }

    /// The set whose bit `j` is set in `mask`.
    pub fn from_mask(mask: u64) -> Self {
        WeightSet((0..64).filter(|j| mask >> j & 1 == 1).collect())
    }

    /// Bitmask of the members; `None` if some member is 64 or more.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |m, &j| (j < 64).then(|| m | 1 << j))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &WeightSet) -> WeightSet {
        WeightSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &WeightSet) -> WeightSet {
        WeightSet(self.iter().filter(|&j| other.contains(j)).collect())
    }

    pub fn difference(&self, other: &WeightSet) -> WeightSet {
        WeightSet(self.iter().filter(|&j| !other.contains(j)).collect())
    }

    pub fn with(&self, j: usize) -> WeightSet {
        WeightSet::new(self.iter().chain(std::iter::once(j)))
    }

    pub fn is_subset(&self, other: &WeightSet) -> bool {
        self.iter().all(|j| other.contains(j))
    }

    /// Fails with `WeightOutOfRange` if a member exceeds `max`.
    pub fn check_within(&self, max: usize) -> Result<()> {
        match self.largest() {
            Some(weight) if weight > max => Err(Error::WeightOutOfRange { weight, max }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for WeightSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        WeightSet::new(iter)
    }
}

impl fmt::Display for WeightSet {
    /// Compact text form with dash ranges, e.g. `0,2-4,7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let start = self.0[i];
            let mut end = start;
            while i + 1 < self.0.len() && self.0[i + 1] == end + 1 {
                i += 1;
                end += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if end > start {
                write!(f, "{start}-{end}")?;
            } else {
                write!(f, "{start}")?;
            }
            i += 1;
        }
        Ok(())
    }
}

impl FromStr for WeightSet {
    type Err = Error;

    /// Parses comma-separated integers and dash ranges, e.g. `"0,2-4,7"`.
    /// The empty string (or `{}`) is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        let mut out = Vec::new();
        if body.is_empty() {
            return Ok(WeightSet::empty());
        }
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad weight `{}` in set `{s}`", t.trim())))
        };
        for part in body.split(',') {
            match part.split_once('-') {
                Some((lo, hi)) => {
                    let (lo, hi) = (num(lo)?, num(hi)?);
                    if lo > hi {
                        return Err(Error::Parse(format!("empty range `{}` in set `{s}`", part.trim())));
                    }
                    out.extend(lo..=hi);
                }
                None => out.push(num(part)?),
            }
        }
        Ok(WeightSet::new(out))
    }
}

/// Layer sizes `|j|` for `j` in `[0, N]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerSizeTable(Vec<BigUint>);

impl LayerSizeTable {
    pub fn sizes(&self) -> &[BigUint] {
        &self.0
    }

    pub fn get(&self, j: usize) -> &BigUint {
        &self.0[j]
    }

    pub fn max_weight(&self) -> usize {
        self.0.len() - 1
    }

    /// Number of points of the union of layers in `e`.
    pub fn total(&self, e: &WeightSet) -> BigUint {
        e.iter().map(|j| &self.0[j]).sum()
    }

    /// `min(|i|, |j|)`.
    pub fn min_of(&self, i: usize, j: usize) -> BigUint {
        self.0[i].clone().min(self.0[j].clone())
    }
}

impl UniformGrid {
    /// Builds a grid from its arities `(k_1, ..., k_n)`.
    pub fn new(arities: Vec<usize>) -> Result<Self> {
        if arities.is_empty() {
            return Err(Error::EmptyArities);
        }
        if let Some((i, &k)) = arities.iter().enumerate().find(|(_, &k)| k < 2) {
            return Err(Error::AritySmallerThanTwo { coordinate: i + 1, arity: k });
        }
        let max_weight = arities.iter().map(|k| k - 1).sum();
        Ok(UniformGrid { arities, max_weight })
    }

    /// The Boolean cube `{0,1}^n`.
    pub fn cube(n: usize) -> Result<Self> {
        UniformGrid::new(vec![2; n])
    }

    pub fn arities(&self) -> &[usize] {
        &self.arities
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        self.arities.len()
    }

    /// `N = sum(k_i - 1)`.
    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// Largest arity `K`.
    pub fn max_arity(&self) -> usize {
        self.arities.iter().copied().max().unwrap_or(0)
    }

    /// Total number of points, `prod(k_i)`.
    pub fn num_points(&self) -> usize {
        self.arities.iter().product()
    }

    pub fn is_boolean_cube(&self) -> bool {
        self.arities.iter().all(|&k| k == 2)
    }

    pub fn contains(&self, p: &GridPoint) -> bool {
        p.len() == self.dim() && p.coords().iter().zip(&self.arities).all(|(&c, &k)| c < k)
    }

    pub fn check_point(&self, p: &GridPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::PointNotInGrid { point: p.to_string() })
        }
    }

    pub fn check_weight(&self, j: usize) -> Result<()> {
        if j > self.max_weight {
            Err(Error::WeightOutOfRange { weight: j, max: self.max_weight })
        } else {
            Ok(())
        }
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_weight {
            Err(Error::DegreeOutOfRange { degree: d, max: self.max_weight })
        } else {
            Ok(())
        }
    }

    /// All points in lex order.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut out = Vec::with_capacity(self.num_points());
        let mut cur = vec![0; self.dim()];
        loop {
            out.push(GridPoint(cur.clone()));
            // mixed-radix increment, last coordinate fastest
            let mut i = self.dim();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.arities[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// Points of weight `j` in lex order.
    pub fn layer(&self, j: usize) -> Result<Vec<GridPoint>> {
        self.check_weight(j)?;
        let mut out = Vec::new();
        let mut cur = vec![0; self.dim()];
        self.fill_layer(0, j, &mut cur, &mut out);
        Ok(out)
    }

    fn fill_layer(&self, i: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<GridPoint>) {
        if i == self.dim() {
            if remaining == 0 {
                out.push(GridPoint(cur.clone()));
            }
            return;
        }
        let tail_cap: usize = self.arities[i + 1..].iter().map(|k| k - 1).sum();
        let lo = remaining.saturating_sub(tail_cap);
        let hi = remaining.min(self.arities[i] - 1);
        for c in lo..=hi {
            cur[i] = c;
            self.fill_layer(i + 1, remaining - c, cur, out);
        }
        cur[i] = 0;
    }

    /// Points of the weight-determined set `E`, ascending weight then lex.
    pub fn unfold(&self, e: &WeightSet) -> Result<Vec<GridPoint>> {
        e.check_within(self.max_weight)?;
        let mut out = Vec::new();
        for j in e.iter() {
            out.extend(self.layer(j)?);
        }
        Ok(out)
    }

    /// Layer sizes, as the coefficients of `prod_i (1 + x + ... + x^{k_i - 1})`.
    pub fn layer_sizes(&self) -> LayerSizeTable {
        let mut coeffs = vec![BigUint::one()];
        for &k in &self.arities {
            let mut next = vec![BigUint::zero(); coeffs.len() + k - 1];
            for (j, c) in coeffs.iter().enumerate() {
                for slot in &mut next[j..j + k] {
                    *slot += c;
                }
            }
            coeffs = next;
        }
        LayerSizeTable(coeffs)
    }

    /// `lex-wt(a) = sum_i a_i K^{n-i}` with `K` the largest arity.
    pub fn lex_weight(&self, p: &GridPoint) -> Result<BigUint> {
        self.check_point(p)?;
        let base = BigUint::from(self.max_arity());
        Ok(p.coords()
            .iter()
            .fold(BigUint::zero(), |acc, &c| acc * &base + BigUint::from(c)))
    }

    /// The point immediately before `p` in lex order, or `None` for the origin.
    pub fn lex_predecessor(&self, p: &GridPoint) -> Result<Option<GridPoint>> {
        self.check_point(p)?;
        if p.is_zero() {
            return Ok(None);
        }
        let mut c = p.coords().to_vec();
        for i in (0..c.len()).rev() {
            if c[i] > 0 {
                c[i] -= 1;
                break;
            }
            c[i] = self.arities[i] - 1;
        }
        Ok(Some(GridPoint(c)))
    }

    /// Strictly unimodal layer sizes: `|0| < ... < |floor(N/2)| = |ceil(N/2)| > ... > |N|`.
    pub fn is_su2(&self) -> bool {
        let sizes = self.layer_sizes();
        let s = sizes.sizes();
        let n = self.max_weight;
        let (lo, hi) = (n / 2, n.div_ceil(2));
        (0..lo).all(|i| s[i] < s[i + 1]) && s[lo] == s[hi] && (hi..n).all(|i| s[i] > s[i + 1])
    }
}

impl fmt::Display for UniformGrid {
    /// Comma-separated arities, e.g. `3,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arities.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for UniformGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        if body.is_empty() {
            return Err(Error::EmptyArities);
        }
        let arities = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad arity `{}` in grid `{s}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        UniformGrid::new(arities)
    }
}
