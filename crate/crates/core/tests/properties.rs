//! Invariants of realized CDFs, the propagation operator and the grid
//! distance, checked over randomized inputs.

use logmap_core::analysis::sup_distance_on;
use logmap_core::dist::{cdf_kumaraswamy, quantile_kumaraswamy};
use logmap_core::grid::MONOTONE_TOLERANCE;
use logmap_core::pushforward::{iterate_pushforward_with, Strategy as Eval};
use logmap_core::{pushforward_cdf, standard_grid, tabulate, CdfFn, MapParam};
use proptest::prelude::*;

fn assert_valid_cdf(f: &CdfFn, grid: &[f64]) -> Result<(), TestCaseError> {
    let values: Vec<f64> = grid.iter().map(|&y| f.eval(y).unwrap()).collect();
    prop_assert!(values[0].abs() <= MONOTONE_TOLERANCE, "F(0) = {}", values[0]);
    prop_assert!((values[values.len() - 1] - 1.0).abs() <= MONOTONE_TOLERANCE);
    for (w, y) in values.windows(2).zip(grid) {
        prop_assert!(w[1] >= w[0] - MONOTONE_TOLERANCE, "decrease at {y}: {} -> {}", w[0], w[1]);
    }
    Ok(())
}

fn closed_cdf() -> impl Strategy<Value = CdfFn> {
    prop_oneof![
        Just(CdfFn::uniform()),
        Just(CdfFn::arcsine()),
        (0.1f64..8.0, 0.1f64..8.0).prop_map(|(a, b)| CdfFn::kumaraswamy(a, b).unwrap()),
        (0.2f64..6.0, 0.2f64..6.0).prop_map(|(a, b)| CdfFn::beta(a, b).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_forms_are_cdfs(f in closed_cdf()) {
        assert_valid_cdf(&f, &standard_grid(10_000).unwrap())?;
    }

    #[test]
    fn pushforward_preserves_cdfs(f in closed_cdf(), r in 0.05f64..=4.0, depth in 1usize..=3) {
        let r = MapParam::new(r).unwrap();
        let g = iterate_pushforward_with(&f, r, depth, Eval::Exact).unwrap();
        let grid = standard_grid(10_000).unwrap();
        assert_valid_cdf(g.cdf(), &grid)?;
        for &y in grid.iter().filter(|&&y| y >= r.peak()) {
            prop_assert_eq!(g.eval(y).unwrap(), 1.0);
        }
    }

    #[test]
    fn kumaraswamy_round_trip(a in 0.2f64..10.0, b in 0.2f64..10.0, p in 1e-9f64..(1.0 - 1e-9)) {
        let x = quantile_kumaraswamy(a, b, p).unwrap();
        prop_assert!((cdf_kumaraswamy(a, b, x).unwrap() - p).abs() <= 1e-12);
    }

    #[test]
    fn sup_distance_is_a_pseudometric(f in closed_cdf(), g in closed_cdf(), h in closed_cdf()) {
        let grid = standard_grid(512).unwrap();
        let fg = sup_distance_on(&f, &g, &grid).unwrap();
        let gf = sup_distance_on(&g, &f, &grid).unwrap();
        let gh = sup_distance_on(&g, &h, &grid).unwrap();
        let fh = sup_distance_on(&f, &h, &grid).unwrap();
        prop_assert_eq!(fg, gf);
        prop_assert_eq!(sup_distance_on(&f, &f, &grid).unwrap(), 0.0);
        prop_assert!(fh <= fg + gh + 1e-15);
    }

    #[test]
    fn tabulated_pushforwards_are_valid(f in closed_cdf(), r in 0.05f64..=4.0) {
        let g = pushforward_cdf(f, MapParam::new(r).unwrap());
        let t = tabulate(&g, 256).unwrap();
        prop_assert!(t.values().windows(2).all(|w| w[0] <= w[1]));
        assert_valid_cdf(&CdfFn::from(t), &standard_grid(1000).unwrap())?;
    }
}

#[test]
fn exact_and_grid_iterates_agree() {
    let grid = standard_grid(4096).unwrap();
    for n in 1..=12 {
        let exact = iterate_pushforward_with(&CdfFn::uniform(), MapParam::FOUR, n, Eval::Exact).unwrap();
        let tab = iterate_pushforward_with(&CdfFn::uniform(), MapParam::FOUR, n, Eval::Grid { m: 4096 }).unwrap();
        let d = sup_distance_on(exact.cdf(), tab.cdf(), &grid).unwrap();
        assert!(d <= 1e-6, "n={n}: {d:e}");
    }
}

#[test]
fn zero_iterations_is_the_base() {
    let k = CdfFn::kumaraswamy(2.0, 3.0).unwrap();
    for strategy in [Eval::Exact, Eval::Grid { m: 64 }] {
        let it = iterate_pushforward_with(&k, MapParam::new(3.3).unwrap(), 0, strategy).unwrap();
        for y in standard_grid(100).unwrap() {
            assert_eq!(it.eval(y).unwrap(), k.eval(y).unwrap());
        }
    }
}

#[test]
fn convergence_table_rows() {
    let report = logmap_core::analysis::convergence_table(8, 2048).unwrap();
    assert_eq!(report.rows.len(), 9);
    let rows = &report.rows;
    assert_eq!(rows[0].to_uniform, 0.0);
    assert!(rows[2].to_kumaraswamy <= 1e-10);
    // D_n approaches A without reaching it at any finite n
    for row in rows {
        assert!(row.to_arcsine > 0.0, "n = {}", row.n);
    }
    for w in rows[1..].windows(2) {
        assert!(w[1].to_arcsine < w[0].to_arcsine, "n = {}", w[1].n);
    }
}
