use gridhilbert::{
    hilbert_closed, hilbert_profile, hilbert_rank_oracle, l_bar, l_step, ord_str, rank_block, standard_monomials,
    zstar_closure, GridPoint, UniformGrid, WeightSet,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_grid() -> impl Strategy<Value = UniformGrid> {
    prop::collection::vec(2usize..5, 1..4)
        .prop_filter("at most 36 points", |a| a.iter().product::<usize>() <= 36)
        .prop_map(|a| UniformGrid::new(a).unwrap())
}

fn grid_degree_set() -> impl Strategy<Value = (UniformGrid, usize, WeightSet)> {
    small_grid().prop_flat_map(|g| {
        let n = g.max_weight();
        (Just(g), 0..=n, any::<u64>().prop_map(move |m| WeightSet::from_mask(m & ((1 << (n + 1)) - 1))))
    })
}

fn grid_and_subset() -> impl Strategy<Value = (UniformGrid, Vec<GridPoint>, Vec<GridPoint>)> {
    small_grid().prop_flat_map(|g| {
        let pts = g.points();
        let len = pts.len();
        (Just(g), prop::collection::vec(any::<bool>(), len), prop::collection::vec(any::<bool>(), len)).prop_map(
            move |(g, x, y)| {
                let a: Vec<GridPoint> = pts.iter().zip(&x).filter(|(_, &k)| k).map(|(p, _)| p.clone()).collect();
                let b: Vec<GridPoint> =
                    pts.iter().zip(x.iter().zip(&y)).filter(|(_, (&i, &j))| i || j).map(|(p, _)| p.clone()).collect();
                (g, a, b)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grid_text_round_trips(g in small_grid()) {
        prop_assert_eq!(g.to_string().parse::<UniformGrid>().unwrap(), g);
    }

    #[test]
    fn weight_set_text_round_trips(m in any::<u32>()) {
        let e = WeightSet::from_mask(m as u64);
        prop_assert_eq!(e.to_string().parse::<WeightSet>().unwrap(), e);
    }

    #[test]
    fn predecessor_undoes_successor(g in small_grid()) {
        let pts = g.points();
        prop_assert_eq!(g.lex_predecessor(&pts[0]).unwrap(), None);
        for w in pts.windows(2) {
            prop_assert_eq!(g.lex_predecessor(&w[1]).unwrap(), Some(w[0].clone()));
            prop_assert!(g.lex_weight(&w[0]).unwrap() < g.lex_weight(&w[1]).unwrap());
        }
    }

    #[test]
    fn closed_form_equals_rank((g, d, e) in grid_degree_set()) {
        prop_assert_eq!(hilbert_closed(&g, d, &e).unwrap(), BigUint::from(hilbert_rank_oracle(&g, d, &e).unwrap()));
    }

    #[test]
    fn hilbert_is_monotone((g, d, e) in grid_degree_set(), extra in 0usize..8) {
        let n = g.max_weight();
        let sizes = g.layer_sizes();
        let h = hilbert_closed(&g, d, &e).unwrap();
        if d < n {
            prop_assert!(h <= hilbert_closed(&g, d + 1, &e).unwrap());
        }
        let bigger = e.with(extra % (n + 1));
        prop_assert!(h <= hilbert_closed(&g, d, &bigger).unwrap());
        prop_assert!(h <= sizes.total(&e));
        prop_assert_eq!(hilbert_closed(&g, n, &e).unwrap(), sizes.total(&e));
    }

    #[test]
    fn profile_sums_to_hilbert((g, d, e) in grid_degree_set()) {
        prop_assume!(e.len() > d);
        let p = hilbert_profile(d, &e).unwrap();
        let vs: Vec<usize> = p.pairs.iter().map(|&(_, v)| v).collect();
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..=d).collect::<Vec<_>>());
        prop_assert_eq!(p.value(&g.layer_sizes()).unwrap(), hilbert_closed(&g, d, &e).unwrap());
    }

    #[test]
    fn single_layer_duality((g, d, _e) in grid_degree_set(), w in 0usize..10) {
        let n = g.max_weight();
        let w = w % (n + 1);
        prop_assert_eq!(
            hilbert_closed(&g, d, &WeightSet::new([w])).unwrap(),
            hilbert_closed(&g, d, &WeightSet::new([n - w])).unwrap()
        );
    }

    #[test]
    fn spanning_band((g, d, e) in grid_degree_set()) {
        prop_assume!(!e.is_empty() && d < e.smallest().unwrap() && d + e.len() <= g.max_weight());
        let top = d + e.len();
        prop_assert_eq!(
            rank_block(&g, &WeightSet::interval(0, top), &e).unwrap(),
            rank_block(&g, &WeightSet::interval(d + 1, top), &e).unwrap()
        );
    }

    #[test]
    fn l_bar_is_extensive_monotone_fixpoint((g, d, e) in grid_degree_set(), extra in 0usize..8) {
        let n = g.max_weight();
        let lb = l_bar(n, d, &e).unwrap();
        prop_assert!(e.is_subset(&lb));
        prop_assert_eq!(l_step(n, d, &lb).unwrap(), lb.clone());
        prop_assert!(lb.is_subset(&l_bar(n, d, &e.with(extra % (n + 1))).unwrap()));
    }

    #[test]
    fn zstar_keeps_hilbert_and_matches_l_bar_on_su2((g, d, e) in grid_degree_set()) {
        let z = zstar_closure(&g, d, &e).unwrap();
        prop_assert!(e.is_subset(&z));
        prop_assert_eq!(hilbert_closed(&g, d, &z).unwrap(), hilbert_closed(&g, d, &e).unwrap());
        if g.is_su2() {
            prop_assert_eq!(z, l_bar(g.max_weight(), d, &e).unwrap());
        }
    }

    #[test]
    fn shattering_matches_standard_monomials((g, a, b) in grid_and_subset()) {
        let oa = ord_str(&g, &a).unwrap();
        let ob = ord_str(&g, &b).unwrap();
        prop_assert_eq!(oa.len(), a.len());
        prop_assert!(oa.is_downset());
        prop_assert!(oa.is_subset(&ob));
        prop_assert_eq!(oa, standard_monomials(&g, &a).unwrap());
    }
}
