//! Worked examples checked against oracles that share no code with the
//! library: layer sizes by brute-force enumeration, and Hilbert functions as
//! the rank of plain monomials `x^alpha` (not falling factorials) under naive
//! rational Gaussian elimination.

use gridhilbert::{
    hilbert_closed, hilbert_cube_closed, hilbert_profile, hilbert_rank_oracle, standard_monomials, zstar_closure,
    GridPoint, UniformGrid, WeightSet,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

fn grid(a: &[usize]) -> UniformGrid {
    UniformGrid::new(a.to_vec()).unwrap()
}

fn ws(v: &[usize]) -> WeightSet {
    WeightSet::new(v.iter().copied())
}

/// Every point of the grid by nested counting, in no particular order.
fn brute_points(arities: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &k in arities {
        out = out.into_iter().flat_map(|p| (0..k).map(move |c| [p.clone(), vec![c]].concat())).collect();
    }
    out
}

fn brute_sizes(arities: &[usize]) -> Vec<usize> {
    let n: usize = arities.iter().map(|k| k - 1).sum();
    let mut sizes = vec![0; n + 1];
    for p in brute_points(arities) {
        sizes[p.iter().sum::<usize>()] += 1;
    }
    sizes
}

fn gauss_rank(mut a: Vec<Vec<BigRational>>) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            let f = &a[i][c] / &a[r][c];
            #[allow(clippy::needless_range_loop)]
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// `H_d(E)` as the rank of `{x^alpha : |alpha| <= d}` evaluated on `E̲`.
fn monomial_hilbert(arities: &[usize], d: usize, e: &[usize]) -> usize {
    let pts: Vec<Vec<usize>> = brute_points(arities).into_iter().filter(|p| e.contains(&p.iter().sum())).collect();
    let exps: Vec<Vec<usize>> =
        brute_points(arities).into_iter().filter(|p| p.iter().sum::<usize>() <= d).collect();
    let rows = exps
        .iter()
        .map(|alpha| {
            pts.iter()
                .map(|x| {
                    let v = alpha.iter().zip(x).fold(BigInt::one(), |acc, (&a, &b)| acc * Pow::pow(BigInt::from(b), a));
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect();
    gauss_rank(rows)
}

#[test]
fn layer_sizes_match_enumeration() {
    for a in [vec![3, 3], vec![2, 2, 2], vec![2], vec![2, 4], vec![4, 3, 2], vec![2, 2, 2, 2, 2]] {
        let table: Vec<usize> = grid(&a).layer_sizes().sizes().iter().map(|s| s.try_into().unwrap()).collect();
        assert_eq!(table, brute_sizes(&a), "{a:?}");
    }
    assert_eq!(brute_sizes(&[3, 3]), vec![1, 2, 3, 2, 1]);
    assert_eq!(brute_sizes(&[2, 2, 2]), vec![1, 3, 3, 1]);
}

#[test]
fn layer_enumeration_matches_brute_force() {
    let g = grid(&[3, 3]);
    let mut brute: Vec<Vec<usize>> = brute_points(&[3, 3]).into_iter().filter(|p| p.iter().sum::<usize>() == 2).collect();
    brute.sort();
    let layer: Vec<Vec<usize>> = g.layer(2).unwrap().iter().map(|p| p.coords().to_vec()).collect();
    assert_eq!(layer, brute);
    assert_eq!(layer, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
}

#[test]
fn hilbert_examples_against_monomial_rank() {
    let cases: &[(&[usize], usize, &[usize], usize)] = &[
        (&[3, 3], 2, &[0, 3, 4], 4),
        (&[3, 3], 1, &[0, 2], 3),
        (&[3, 3], 1, &[2], 2),
        (&[2, 2, 2], 1, &[2], 3),
        (&[2, 2, 2], 1, &[0, 3], 2),
        (&[3, 3], 4, &[0, 1, 2, 3, 4], 9),
        (&[2, 2], 0, &[1], 1),
        (&[2, 2, 2], 0, &[2], 1),
        (&[3, 3], 1, &[2, 3, 4], 3),
    ];
    for &(a, d, e, want) in cases {
        let g = grid(a);
        assert_eq!(monomial_hilbert(a, d, e), want, "oracle {a:?} d={d} E={e:?}");
        assert_eq!(hilbert_closed(&g, d, &ws(e)).unwrap(), want.into());
        assert_eq!(hilbert_rank_oracle(&g, d, &ws(e)).unwrap(), want);
    }
    assert_eq!(hilbert_cube_closed(3, 1, &ws(&[0, 3])).unwrap(), 2u32.into());
}

#[test]
fn closed_form_against_monomial_rank_on_small_grids() {
    for a in [vec![2, 3], vec![4], vec![3, 2, 2], vec![2, 2, 2, 2]] {
        let g = grid(&a);
        let n = g.max_weight();
        for d in 0..=n {
            for mask in 0..1u64 << (n + 1) {
                let e = WeightSet::from_mask(mask);
                let want = monomial_hilbert(&a, d, e.members());
                assert_eq!(hilbert_closed(&g, d, &e).unwrap(), want.into(), "{a:?} d={d} E={e}");
            }
        }
    }
}

#[test]
fn profile_example_against_monomial_rank() {
    let p = hilbert_profile(1, &ws(&[2, 3, 4])).unwrap();
    assert_eq!(p.pairs, vec![(2, 1), (3, 0)]);
    let sizes = brute_sizes(&[3, 3]);
    let sum: usize = p.pairs.iter().map(|&(u, v)| sizes[u].min(sizes[v])).sum();
    assert_eq!(sum, monomial_hilbert(&[3, 3], 1, &[2, 3, 4]));
}

/// Z*-closure by definition: a layer joins when adding it leaves `H_d` unchanged
/// point by point, i.e. when every one of its points is already determined.
fn brute_zstar(a: &[usize], d: usize, e: &[usize]) -> Vec<usize> {
    if e.is_empty() {
        return vec![];
    }
    let n: usize = a.iter().map(|k| k - 1).sum();
    let base = monomial_hilbert(a, d, e);
    (0..=n)
        .filter(|&j| {
            let mut f = e.to_vec();
            if !f.contains(&j) {
                f.push(j);
            }
            monomial_hilbert(a, d, &f) == base
        })
        .collect()
}

#[test]
fn zstar_examples_against_definition() {
    assert_eq!(brute_zstar(&[3, 3], 1, &[1, 3]), vec![0, 1, 2, 3, 4]);
    assert_eq!(zstar_closure(&grid(&[3, 3]), 1, &ws(&[1, 3])).unwrap(), ws(&[0, 1, 2, 3, 4]));
    for a in [vec![3, 3], vec![2, 2, 2], vec![2, 4]] {
        let g = grid(&a);
        let n = g.max_weight();
        for d in 0..=n {
            for mask in 0..1u64 << (n + 1) {
                let e = WeightSet::from_mask(mask);
                let want = WeightSet::new(brute_zstar(&a, d, e.members()));
                assert_eq!(zstar_closure(&g, d, &e).unwrap(), want, "{a:?} d={d} E={e}");
            }
        }
    }
}

#[test]
fn standard_monomial_example_by_hand() {
    // on A = {(0,0),(1,1)}: 1 -> (1,1), x2 -> (0,1) independent; x1 -> (0,1) dependent
    let g = grid(&[2, 2]);
    let a = vec![GridPoint::new(vec![0, 0]), GridPoint::new(vec![1, 1])];
    let sm: Vec<GridPoint> = standard_monomials(&g, &a).unwrap().into_vec();
    assert_eq!(sm, vec![GridPoint::new(vec![0, 0]), GridPoint::new(vec![0, 1])]);
}
