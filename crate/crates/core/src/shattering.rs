//! Order shattering and lex standard monomials of point sets.
//!
//! Points double as multisets on the coordinates and as monomial exponents.
//! The monomial order is lex with `X_1 > ... > X_n`, which agrees with the
//! lex order on grid points, so both outputs are sets of grid points.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::grid::{GridPoint, UniformGrid};
use crate::linalg::SpanTracker;

/// A downward-closed set of exponent vectors, iterated in lex order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonomialDownset {
    members: BTreeSet<GridPoint>,
}

impl MonomialDownset {
    /// Wraps `members` without checking closure; see [`MonomialDownset::is_downset`].
    pub fn from_points(members: impl IntoIterator<Item = GridPoint>) -> Self {
        MonomialDownset { members: members.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &GridPoint) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GridPoint> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &MonomialDownset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Members of weight at most `w`.
    pub fn up_to_weight(&self, w: usize) -> MonomialDownset {
        MonomialDownset::from_points(self.members.iter().filter(|p| p.weight() <= w).cloned())
    }

    /// True if every lower cover of every member is a member.
    pub fn is_downset(&self) -> bool {
        self.members.iter().all(|p| lower_covers(p).all(|q| self.members.contains(&q)))
    }

    pub fn into_vec(self) -> Vec<GridPoint> {
        self.members.into_iter().collect()
    }
}

impl fmt::Display for MonomialDownset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(GridPoint::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn lower_covers(p: &GridPoint) -> impl Iterator<Item = GridPoint> + '_ {
    (0..p.len()).filter(|&i| p.coords()[i] > 0).map(|i| {
        let mut c = p.coords().to_vec();
        c[i] -= 1;
        GridPoint::new(c)
    })
}

/// `τ(b)`: the last coordinate (1-based) where `b` is positive.
pub fn tau(b: &GridPoint) -> Result<usize> {
    b.coords().iter().rposition(|&x| x > 0).map(|i| i + 1).ok_or(Error::EmptyMultiset)
}

/// `b*`: zero up to `τ(b)`, full arity minus one after it.
pub fn b_star(grid: &UniformGrid, b: &GridPoint) -> Result<GridPoint> {
    grid.check_point(b)?;
    let t = tau(b)?;
    let coords = grid.arities().iter().enumerate().map(|(i, &k)| if i < t { 0 } else { k - 1 }).collect();
    Ok(GridPoint::new(coords))
}

fn check_all(grid: &UniformGrid, a: &[GridPoint]) -> Result<()> {
    a.iter().try_for_each(|p| grid.check_point(p))
}

/// Shattering test on raw coordinate slices.
///
/// `b = 0` needs a nonempty set. Otherwise, with `τ` the last positive
/// coordinate of `b` and `m = b(τ)`, some group of points agreeing after `τ`
/// must contain `m + 1` distinct values at `τ` whose classes each shatter
/// `b` with coordinate `τ` cleared.
fn shatters(pts: &mut [&[usize]], b: &mut [usize]) -> bool {
    if pts.is_empty() {
        return false;
    }
    let Some(t) = b.iter().rposition(|&x| x > 0) else {
        return true;
    };
    // the downset of b has to fit inside A
    let needed = b.iter().try_fold(1usize, |acc, &x| acc.checked_mul(x + 1));
    if needed.is_none_or(|n| pts.len() < n) {
        return false;
    }
    let m = b[t];
    pts.sort_unstable_by(|x, y| x[t + 1..].cmp(&y[t + 1..]).then(x[t].cmp(&y[t])));
    b[t] = 0;
    let mut found = false;
    let mut start = 0;
    'groups: while start < pts.len() {
        let end = start + pts[start..].iter().take_while(|p| p[t + 1..] == pts[start][t + 1..]).count();
        let mut hits = 0;
        let mut cls = start;
        while cls < end {
            let cls_end = cls + pts[cls..end].iter().take_while(|p| p[t] == pts[cls][t]).count();
            if shatters(&mut pts[cls..cls_end], b) {
                hits += 1;
                if hits > m {
                    found = true;
                    break 'groups;
                }
            }
            cls = cls_end;
        }
        start = end;
    }
    b[t] = m;
    found
}

/// Whether `A` order shatters `b`.
pub fn order_shatters(grid: &UniformGrid, a: &[GridPoint], b: &GridPoint) -> Result<bool> {
    check_all(grid, a)?;
    grid.check_point(b)?;
    let mut pts: Vec<&[usize]> = a.iter().map(GridPoint::coords).collect();
    Ok(shatters(&mut pts, &mut b.coords().to_vec()))
}

/// `ord-str(A)`: every grid point shattered by `A`.
pub fn ord_str(grid: &UniformGrid, a: &[GridPoint]) -> Result<MonomialDownset> {
    check_all(grid, a)?;
    let mut set = BTreeSet::new();
    if a.is_empty() {
        return Ok(MonomialDownset { members: set });
    }
    let mut pts: Vec<&[usize]> = a.iter().map(GridPoint::coords).collect();
    // every b is tested on its own so that closure and size stay checkable
    for b in grid.points() {
        if shatters(&mut pts, &mut b.coords().to_vec()) {
            set.insert(b);
        }
    }
    Ok(MonomialDownset { members: set })
}

fn monomial_value(alpha: &[usize], x: &[usize]) -> BigInt {
    alpha
        .iter()
        .zip(x)
        .fold(BigInt::one(), |acc, (&e, &v)| acc * BigInt::from(v).pow(e as u32))
}

/// Lex standard monomials of `A`: scan `X^alpha` in ascending lex order and
/// keep those whose value vector on `A` is independent of the kept ones.
pub fn standard_monomials(grid: &UniformGrid, a: &[GridPoint]) -> Result<MonomialDownset> {
    check_all(grid, a)?;
    let mut span = SpanTracker::new(a.len());
    let mut set = BTreeSet::new();
    for alpha in grid.points() {
        if span.rank() == a.len() {
            break;
        }
        let v: Vec<BigInt> = a.iter().map(|x| monomial_value(alpha.coords(), x.coords())).collect();
        if span.insert(&v) {
            set.insert(alpha);
        }
    }
    Ok(MonomialDownset { members: set })
}
