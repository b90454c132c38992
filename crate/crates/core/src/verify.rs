//! Deterministic verification sweeps.
//!
//! Each suite checks one family of identities over a family of small grids,
//! comparing closed forms against rank computations. Grids are processed in
//! parallel, but results are merged in family order, so the reported
//! counterexample is always the first one in sweep order.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closure::{l_bar, l_step, t_set, ClosureOracle};
use crate::error::{Error, Result};
use crate::grid::{GridPoint, UniformGrid, WeightSet};
use crate::hilbert::{
    hilbert_closed, hilbert_cube_closed, hilbert_from_sizes, hilbert_layer, hilbert_profile, hilbert_rank_oracle,
    is_interval_compatible, rank_block,
};
use crate::linalg::builders::falling_factorial_unchecked;
use crate::linalg::{diag_matrix, eval_matrix, rank, up_matrix, LabeledMatrix};
use crate::shattering::{ord_str, standard_monomials};

/// Size caps for the grid family and the sampled suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest grid (in points) in the main family.
    pub max_points: usize,
    pub max_dim: usize,
    pub max_arity: usize,
    /// Boolean cubes `{0,1}^n` for `n <= max_cube` are always included.
    pub max_cube: usize,
    pub seed: u64,
    /// Random interval-compatible instances per grid.
    pub rank_samples: usize,
    /// Grids up to this size are swept over every subset in the shattering suite.
    pub exhaustive_points: usize,
    /// Grids above `exhaustive_points` and up to this size get random subsets.
    pub sampled_points: usize,
    pub shatter_samples: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_points: 36,
            max_dim: 3,
            max_arity: 4,
            max_cube: 6,
            seed: 0x6772_6964,
            rank_samples: 200,
            exhaustive_points: 16,
            sampled_points: 27,
            shatter_samples: 500,
        }
    }
}

/// Grids with dimension `<= max_dim`, arities in `[2, max_arity]` and at most
/// `max_points` points, in order of dimension then arities; followed by the
/// remaining Boolean cubes up to `max_cube`.
pub fn family(limits: &Limits) -> Vec<UniformGrid> {
    fn extend(prefix: &mut Vec<usize>, dim: usize, limits: &Limits, out: &mut Vec<UniformGrid>) {
        if prefix.len() == dim {
            out.push(UniformGrid::new(prefix.clone()).expect("arities are at least two"));
            return;
        }
        let used: usize = prefix.iter().product();
        for k in 2..=limits.max_arity {
            if used * k > limits.max_points {
                break;
            }
            prefix.push(k);
            extend(prefix, dim, limits, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for dim in 1..=limits.max_dim {
        extend(&mut Vec::new(), dim, limits, &mut out);
    }
    for n in 1..=limits.max_cube {
        let cube = UniformGrid::cube(n).expect("n >= 1");
        if !out.contains(&cube) {
            out.push(cube);
        }
    }
    out
}

/// The first failing instance of a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub grid: UniformGrid,
    pub degree: Option<usize>,
    pub set: Option<WeightSet>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "grid {}", self.grid)?;
        if let Some(d) = self.degree {
            write!(f, ", d = {d}")?;
        }
        if let Some(e) = &self.set {
            write!(f, ", E = {{{e}}}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub grids: usize,
    /// Instances checked before the first failure (all of them on success).
    pub instances: u64,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Check = Result<u64, Counterexample>;

struct Ctx<'a> {
    grid: &'a UniformGrid,
}

impl Ctx<'_> {
    fn fail(&self, degree: Option<usize>, set: Option<&WeightSet>, detail: impl Into<String>) -> Counterexample {
        Counterexample { grid: self.grid.clone(), degree, set: set.cloned(), detail: detail.into() }
    }

    /// Library errors inside a sweep are reported as failures of that instance.
    fn lift<T>(&self, d: Option<usize>, e: Option<&WeightSet>, r: Result<T>) -> Result<T, Counterexample> {
        r.map_err(|err| self.fail(d, e, format!("{}: {err}", err.name())))
    }

    fn expect_eq<T: PartialEq + fmt::Debug>(
        &self,
        d: Option<usize>,
        e: Option<&WeightSet>,
        what: &str,
        left: T,
        right: T,
    ) -> Result<(), Counterexample> {
        if left == right {
            Ok(())
        } else {
            Err(self.fail(d, e, format!("{what}: {left:?} != {right:?}")))
        }
    }
}

fn sweep<F>(name: &str, grids: Vec<UniformGrid>, check: F) -> SuiteReport
where
    F: Fn(&Ctx<'_>) -> Check + Sync,
{
    let results: Vec<Check> = grids.par_iter().map(|g| check(&Ctx { grid: g })).collect();
    let mut instances = 0;
    let mut counterexample = None;
    for r in results {
        match r {
            Ok(n) => instances += n,
            Err(c) => {
                counterexample = Some(c);
                break;
            }
        }
    }
    SuiteReport { name: name.to_string(), grids: grids.len(), instances, counterexample }
}

fn all_sets(max_weight: usize) -> impl Iterator<Item = WeightSet> {
    (0..1u64 << (max_weight + 1)).map(WeightSet::from_mask)
}

fn grid_seed(seed: u64, grid: &UniformGrid) -> u64 {
    grid.arities().iter().fold(seed, |h, &k| (h ^ k as u64).wrapping_mul(0x0100_0000_01b3))
}

fn layers(limits: &Limits) -> SuiteReport {
    sweep("layers", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let sizes = g.layer_sizes();
        let s = sizes.sizes();
        let mut count = 0;
        for j in 0..=n {
            cx.expect_eq(None, None, &format!("symmetry at {j}"), &s[j], &s[n - j])?;
            let layer = cx.lift(None, None, g.layer(j))?;
            cx.expect_eq(None, None, &format!("layer {j} size"), BigUint::from(layer.len()), s[j].clone())?;
            count += 1;
        }
        let mid = n / 2;
        let unimodal = (0..mid).all(|i| s[i] <= s[i + 1]) && (mid..n).all(|i| s[i] >= s[i + 1]);
        if !unimodal {
            return Err(cx.fail(None, None, "layer sizes are not unimodal"));
        }
        let total: BigUint = s.iter().sum();
        cx.expect_eq(None, None, "total", total, BigUint::from(g.num_points()))?;
        let pts = g.points();
        for w in pts.windows(2) {
            let (a, b) = (cx.lift(None, None, g.lex_weight(&w[0]))?, cx.lift(None, None, g.lex_weight(&w[1]))?);
            if a >= b || w[0] >= w[1] {
                return Err(cx.fail(None, None, format!("lex order breaks at {} {}", w[0], w[1])));
            }
            let pred = cx.lift(None, None, g.lex_predecessor(&w[1]))?;
            cx.expect_eq(None, None, "predecessor", pred.as_ref(), Some(&w[0]))?;
            count += 1;
        }
        Ok(count)
    })
}

fn grid_hilbert(limits: &Limits) -> SuiteReport {
    sweep("grid-hilbert", family(limits), |cx| {
        let g = cx.grid;
        let sizes = g.layer_sizes();
        let mut count = 0;
        for d in 0..=g.max_weight() {
            for e in all_sets(g.max_weight()) {
                let closed = cx.lift(Some(d), Some(&e), hilbert_from_sizes(&sizes, d, &e))?;
                let oracle = cx.lift(Some(d), Some(&e), hilbert_rank_oracle(g, d, &e))?;
                cx.expect_eq(Some(d), Some(&e), "closed form vs rank", closed, BigUint::from(oracle))?;
                count += 1;
            }
        }
        Ok(count)
    })
}

fn cube(limits: &Limits) -> SuiteReport {
    let cubes = (1..=limits.max_cube).map(|n| UniformGrid::cube(n).expect("n >= 1")).collect();
    sweep("cube", cubes, |cx| {
        let g = cx.grid;
        let n = g.dim();
        let mut count = 0;
        for d in 0..=n {
            for e in all_sets(n) {
                let cube = cx.lift(Some(d), Some(&e), hilbert_cube_closed(n, d, &e))?;
                let grid = cx.lift(Some(d), Some(&e), hilbert_closed(g, d, &e))?;
                cx.expect_eq(Some(d), Some(&e), "binomial form vs grid form", cube, grid)?;
                count += 1;
            }
        }
        Ok(count)
    })
}

fn wilson(limits: &Limits) -> SuiteReport {
    sweep("wilson", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let sizes = g.layer_sizes();
        let mut count = 0;
        for d in 0..=n {
            for w in 0..=n {
                let e = WeightSet::new([w]);
                let closed = cx.lift(Some(d), Some(&e), hilbert_from_sizes(&sizes, d, &e))?;
                let layer = cx.lift(Some(d), Some(&e), hilbert_layer(g, d, w))?;
                let oracle = cx.lift(Some(d), Some(&e), hilbert_rank_oracle(g, d, &e))?;
                let dual = cx.lift(Some(d), Some(&e), hilbert_rank_oracle(g, d, &WeightSet::new([n - w])))?;
                if d <= w {
                    cx.expect_eq(Some(d), Some(&e), "min of layer sizes", layer.clone(), sizes.min_of(d, w))?;
                }
                cx.expect_eq(Some(d), Some(&e), "single layer", closed.clone(), layer)?;
                cx.expect_eq(Some(d), Some(&e), "rank", closed, BigUint::from(oracle))?;
                cx.expect_eq(Some(d), Some(&e), "duality", oracle, dual)?;
                count += 1;
            }
        }
        Ok(count)
    })
}

fn up_rank(limits: &Limits) -> SuiteReport {
    sweep("up-rank", family(limits), |cx| {
        let g = cx.grid;
        let sizes = g.layer_sizes();
        for d in 0..g.max_weight() {
            let u: LabeledMatrix<BigInt> = cx.lift(Some(d), None, up_matrix(g, d))?;
            let r = rank(u.entries()).rank;
            cx.expect_eq(Some(d), None, "rank of up operator", BigUint::from(r), sizes.min_of(d, d + 1))?;
        }
        Ok(g.max_weight() as u64)
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn layer_eval(g: &UniformGrid, d: usize, w: usize) -> Result<LabeledMatrix<BigRational>> {
    eval_matrix(g, &WeightSet::new([d]), &WeightSet::new([w]))
}

/// `U_{d,d+1} U_{d+1,d+2} ... U_{e-1,e}`, or `None` when `d == e`.
fn up_chain(g: &UniformGrid, d: usize, e: usize) -> Result<Option<LabeledMatrix<BigRational>>> {
    let mut acc: Option<LabeledMatrix<BigRational>> = None;
    for j in d..e {
        let u = up_matrix(g, j)?;
        acc = Some(match acc {
            None => u,
            Some(m) => m.mul(&u)?,
        });
    }
    Ok(acc)
}

fn factorization(limits: &Limits) -> SuiteReport {
    sweep("factorization", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let mut count = 0;
        for d in 0..n {
            for w in d + 1..=n {
                let at = Some(d);
                let e = WeightSet::new([w]);
                let ev = cx.lift(at, Some(&e), layer_eval(g, d, w))?;
                let chain = cx.lift(at, Some(&e), up_chain(g, d, w))?.expect("d < w");
                let diag = cx.lift(at, Some(&e), diag_matrix(g, w))?;
                let scale = BigRational::new(BigInt::one(), factorial(w - d));
                let rhs = cx.lift(at, Some(&e), chain.mul(&diag))?.scale(&scale);
                cx.expect_eq(at, Some(&e), "Ev = U...U diag / (w-d)!", &ev, &rhs)?;
                count += 1;

                for d2 in d + 1..w {
                    let ev2 = cx.lift(at, Some(&e), layer_eval(g, d2, w))?;
                    let chain = cx.lift(at, Some(&e), up_chain(g, d, d2))?.expect("d < d2");
                    let c = factorial(d2 - d) * BigInt::from(binomial(w - d, w - d2));
                    let lhs = ev.scale(&BigRational::from_integer(c));
                    let rhs = cx.lift(at, Some(&e), chain.mul(&ev2))?;
                    cx.expect_eq(at, Some(&e), &format!("shift to degree {d2}"), &lhs, &rhs)?;
                    count += 1;
                }

                // Y^(alpha) = (1/(w-d)) sum_{gamma >= alpha, wt gamma = d+1} Y^(gamma) on layer w
                let lower = cx.lift(at, Some(&e), g.layer(d))?;
                let upper = cx.lift(at, Some(&e), g.layer(d + 1))?;
                let points = cx.lift(at, Some(&e), g.layer(w))?;
                for alpha in &lower {
                    for beta in &points {
                        let lhs = falling_factorial_unchecked(alpha, beta) * BigInt::from(w - d);
                        let rhs: BigInt = upper
                            .iter()
                            .filter(|gamma| alpha.le(gamma))
                            .map(|gamma| falling_factorial_unchecked(gamma, beta))
                            .sum();
                        if lhs != rhs {
                            return Err(cx.fail(at, Some(&e), format!("function identity at {alpha}, {beta}")));
                        }
                        count += 1;
                    }
                }
            }
        }
        Ok(count)
    })
}

fn tail_collapse(limits: &Limits) -> SuiteReport {
    sweep("tail-collapse", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let mut count = 0;
        for d in 1..=n / 2 {
            let row = WeightSet::new([d]);
            let lo = n - d + 1;
            for mask in 1..1u64 << d {
                let e: WeightSet = WeightSet::from_mask(mask).iter().map(|j| j + lo).collect();
                let min = WeightSet::new([e.smallest().expect("nonempty")]);
                let full = cx.lift(Some(d), Some(&e), rank_block(g, &row, &e))?;
                let first = cx.lift(Some(d), Some(&e), rank_block(g, &row, &min))?;
                cx.expect_eq(Some(d), Some(&e), "rank against the smallest weight", full, first)?;
                count += 1;
            }
        }
        Ok(count)
    })
}

/// A random interval `[c, d]` with an interval-compatible assignment.
fn random_compatible(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize, Vec<usize>) {
    let c = rng.gen_range(0..=n);
    let d = rng.gen_range(c..=n);
    let len = d - c + 1;
    let moved = rng.gen_range(0..=len.min(n - d));
    let mut positions = sample(rng, len, moved).into_vec();
    positions.sort_unstable();
    let mut targets: Vec<usize> = sample(rng, n - d, moved).into_iter().map(|v| v + d + 1).collect();
    targets.sort_unstable_by(|a, b| b.cmp(a));
    let mut values: Vec<usize> = (c..=d).collect();
    for (p, v) in positions.into_iter().zip(targets) {
        values[p] = v;
    }
    (c, d, values)
}

fn rank_main(limits: &Limits) -> SuiteReport {
    sweep("rank-main", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let sizes = g.layer_sizes();
        let mut rng = ChaCha8Rng::seed_from_u64(grid_seed(limits.seed, g));
        for _ in 0..limits.rank_samples {
            let (c, d, values) = random_compatible(&mut rng, n);
            let interval = WeightSet::interval(c, d);
            let e = WeightSet::new(values.iter().copied());
            let ok = cx.lift(Some(d), Some(&e), is_interval_compatible(c..=d, &values))?;
            if !ok {
                return Err(cx.fail(Some(d), Some(&e), format!("generator produced {values:?} on [{c},{d}]")));
            }
            let expected: BigUint = (c..=d).zip(&values).map(|(t, &w)| sizes.min_of(t, w)).sum();
            let r = cx.lift(Some(d), Some(&e), rank_block(g, &interval, &e))?;
            cx.expect_eq(Some(d), Some(&e), &format!("rank on I = [{c},{d}]"), BigUint::from(r), expected)?;
        }
        Ok(limits.rank_samples as u64)
    })
}

fn profile(limits: &Limits) -> SuiteReport {
    sweep("profile", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let sizes = g.layer_sizes();
        let mut count = 0;
        for d in 0..=n {
            for e in all_sets(n).filter(|e| e.len() > d) {
                let p = cx.lift(Some(d), Some(&e), hilbert_profile(d, &e))?;
                let v = cx.lift(Some(d), Some(&e), p.value(&sizes))?;
                let closed = cx.lift(Some(d), Some(&e), hilbert_from_sizes(&sizes, d, &e))?;
                cx.expect_eq(Some(d), Some(&e), "profile sum", v, closed)?;
                count += 1;
            }
        }
        Ok(count)
    })
}

fn interval_spanning(limits: &Limits) -> SuiteReport {
    sweep("interval-spanning", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let mut count = 0;
        for e in all_sets(n).filter(|e| !e.is_empty()) {
            let min = e.smallest().expect("nonempty");
            for d in 0..min {
                let top = d + e.len();
                if top > n {
                    continue;
                }
                let all = cx.lift(Some(d), Some(&e), rank_block(g, &WeightSet::interval(0, top), &e))?;
                let band = cx.lift(Some(d), Some(&e), rank_block(g, &WeightSet::interval(d + 1, top), &e))?;
                cx.expect_eq(Some(d), Some(&e), "spanning band", all, band)?;
                count += 1;
            }
        }
        Ok(count)
    })
}

/// `cl[d][mask]` for every degree and every weight set.
fn closure_table(cx: &Ctx<'_>, oracle: &ClosureOracle) -> Result<Vec<Vec<WeightSet>>, Counterexample> {
    let n = cx.grid.max_weight();
    (0..=n)
        .map(|d| all_sets(n).map(|e| cx.lift(Some(d), Some(&e), oracle.zstar(d, &e))).collect())
        .collect()
}

fn mask(e: &WeightSet) -> usize {
    e.to_mask().expect("weights below 64") as usize
}

fn zstar_lbar(limits: &Limits) -> SuiteReport {
    let grids = family(limits).into_iter().filter(UniformGrid::is_su2).collect();
    sweep("zstar-lbar", grids, |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let oracle = ClosureOracle::new(g);
        let mut count = 0;
        for d in 0..=n {
            for e in all_sets(n) {
                let z = cx.lift(Some(d), Some(&e), oracle.zstar(d, &e))?;
                let l = cx.lift(Some(d), Some(&e), l_bar(n, d, &e))?;
                cx.expect_eq(Some(d), Some(&e), "Z*-closure vs L-bar", z, l)?;
                count += 1;
            }
        }
        Ok(count)
    })
}

fn closure_laws(limits: &Limits) -> SuiteReport {
    sweep("closure-laws", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let sizes = g.layer_sizes();
        let oracle = ClosureOracle::new(g);
        let cl = closure_table(cx, &oracle)?;
        let full = WeightSet::interval(0, n);
        let mut count = 0;
        for d in 0..=n {
            let at = Some(d);
            for e in all_sets(n) {
                let c = &cl[d][mask(&e)];
                let fail = |what: &str| Err(cx.fail(at, Some(&e), what.to_string()));
                if !e.is_subset(c) {
                    return fail("not extensive");
                }
                if &cl[d][mask(c)] != c {
                    return fail("not idempotent");
                }
                for j in (0..=n).filter(|&j| !e.contains(j)) {
                    if !c.is_subset(&cl[d][mask(&e.with(j))]) {
                        return fail(&format!("not monotone when adding {j}"));
                    }
                }
                if d < n && !cl[d + 1][mask(&e)].is_subset(c) {
                    return fail("degree d+1 closure is larger");
                }
                let h = cx.lift(at, Some(&e), hilbert_from_sizes(&sizes, d, &e))?;
                let hc = cx.lift(at, Some(&e), hilbert_from_sizes(&sizes, d, c))?;
                cx.expect_eq(at, Some(&e), "H_d changes under closure", h, hc)?;
                if e.len() > d {
                    let (lo, hi) = (e.smallest().expect("nonempty"), e.largest().expect("nonempty"));
                    let ends = WeightSet::interval(0, lo).union(&WeightSet::interval(hi, n));
                    if !ends.is_subset(c) {
                        return fail("closure builder ends missing");
                    }
                }
                let lb = cx.lift(at, Some(&e), l_bar(n, d, &e))?;
                let step = cx.lift(at, Some(&e), l_step(n, d, &lb))?;
                if step != lb || !e.is_subset(&lb) {
                    return fail("L-bar is not an extensive fixpoint");
                }
                for j in (0..=n).filter(|&j| !e.contains(j)) {
                    let bigger = cx.lift(at, Some(&e), l_bar(n, d, &e.with(j)))?;
                    if !lb.is_subset(&bigger) {
                        return fail(&format!("L-bar not monotone when adding {j}"));
                    }
                }
                count += 1;
            }
            if g.is_su2() {
                for i in 0..=n {
                    let t = cx.lift(at, None, t_set(n, i))?;
                    let want = if i <= d { t.clone() } else { full.clone() };
                    cx.expect_eq(at, Some(&t), &format!("closure of T_{{N,{i}}}"), &cl[d][mask(&t)], &want)?;
                    count += 1;
                }
            }
        }
        Ok(count)
    })
}

fn subset(points: &[GridPoint], bits: u64) -> Vec<GridPoint> {
    points.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, p)| p.clone()).collect()
}

fn check_shattering(cx: &Ctx<'_>, a: &[GridPoint]) -> Result<(), Counterexample> {
    let describe = || a.iter().map(GridPoint::to_string).collect::<Vec<_>>().join(" ");
    let os = cx.lift(None, None, ord_str(cx.grid, a))?;
    let sm = cx.lift(None, None, standard_monomials(cx.grid, a))?;
    if os != sm || os.len() != a.len() || !os.is_downset() {
        return Err(cx.fail(None, None, format!("A = {}: ord-str {os}, SM {sm}", describe())));
    }
    Ok(())
}

fn shattering(limits: &Limits) -> SuiteReport {
    let grids = family(limits)
        .into_iter()
        .filter(|g| g.num_points() <= limits.sampled_points.max(limits.exhaustive_points))
        .collect();
    sweep("shattering", grids, |cx| {
        let g = cx.grid;
        let points = g.points();
        if g.num_points() <= limits.exhaustive_points {
            let subsets = 1u64 << points.len();
            let chunks: Vec<Result<(), Counterexample>> = (0..subsets)
                .into_par_iter()
                .map(|bits| check_shattering(cx, &subset(&points, bits)))
                .collect();
            chunks.into_iter().collect::<Result<(), _>>()?;
            return Ok(subsets);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(grid_seed(limits.seed, g));
        for _ in 0..limits.shatter_samples {
            let size = rng.gen_range(0..=points.len());
            let a: Vec<GridPoint> = sample(&mut rng, points.len(), size).into_iter().map(|i| points[i].clone()).collect();
            check_shattering(cx, &a)?;
        }
        Ok(limits.shatter_samples as u64)
    })
}

fn layer_shattering(limits: &Limits) -> SuiteReport {
    sweep("layer-shattering", family(limits), |cx| {
        let g = cx.grid;
        let n = g.max_weight();
        let mut os = Vec::with_capacity(n + 1);
        let mut sm = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let layer = cx.lift(None, None, g.layer(j))?;
            os.push(cx.lift(None, None, ord_str(g, &layer))?);
            sm.push(cx.lift(None, None, standard_monomials(g, &layer))?);
        }
        let mut count = 0;
        for j in 0..=n {
            let e = WeightSet::new([j]);
            cx.expect_eq(None, Some(&e), "SM of complementary layers", &sm[j], &sm[n - j])?;
            if j > n / 2 {
                continue;
            }
            for i in 0..=j {
                let at = Some(&e);
                cx.expect_eq(None, at, &format!("ord-str of layer {i} vs truncation"), &os[i], &os[j].up_to_weight(i))?;
                if !sm[i].is_subset(&sm[j]) {
                    return Err(cx.fail(None, at, format!("SM of layer {i} not inside SM of layer {j}")));
                }
                count += 1;
            }
        }
        Ok(count)
    })
}

fn digression(_limits: &Limits) -> SuiteReport {
    let g = UniformGrid::new(vec![3, 3]).expect("valid arities");
    sweep("digression", vec![g], |cx| {
        let base_set = WeightSet::new([2]);
        let base = cx.lift(Some(1), Some(&base_set), hilbert_closed(cx.grid, 1, &base_set))?;
        for a in [0, 1, 3, 4] {
            let e = WeightSet::new([a, 2]);
            let h = cx.lift(Some(1), Some(&e), hilbert_closed(cx.grid, 1, &e))?;
            if h <= base {
                return Err(cx.fail(Some(1), Some(&e), format!("H_1 = {h} is not above H_1({{2}}) = {base}")));
            }
        }
        Ok(4)
    })
}

type SuiteFn = fn(&Limits) -> SuiteReport;

const SUITES: &[(&str, SuiteFn)] = &[
    ("layers", layers),
    ("grid-hilbert", grid_hilbert),
    ("cube", cube),
    ("wilson", wilson),
    ("up-rank", up_rank),
    ("factorization", factorization),
    ("tail-collapse", tail_collapse),
    ("rank-main", rank_main),
    ("profile", profile),
    ("interval-spanning", interval_spanning),
    ("zstar-lbar", zstar_lbar),
    ("closure-laws", closure_laws),
    ("shattering", shattering),
    ("layer-shattering", layer_shattering),
    ("digression", digression),
];

/// Names of all registered suites, in registry order.
pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(name, _)| *name)
}

pub fn run_suite(name: &str, limits: &Limits) -> Result<SuiteReport> {
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f(limits))
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}
