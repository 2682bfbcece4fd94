//! Monte Carlo checks: sampling fidelity, propagation against ensembles,
//! and long-orbit statistics. Seeds are fixed, so every run is identical.

use logmap_core::analysis::{
    ks_band_95, ks_band_99, ks_statistic, ks_two_sample, propagation_ks, PROPAGATION_GRID,
};
use logmap_core::pushforward::{iterate_pushforward_with, Strategy as Eval};
use logmap_core::simulate::{ensemble_push, ergodic_empirical, DEFAULT_BURN_IN};
use logmap_core::{tabulate, CdfFn, DistSpec, EmpiricalCdf, MapParam};

const N: usize = 100_000;

fn ks_of_sample(dist: &DistSpec, reference: &CdfFn, seed: u64) -> f64 {
    let e = EmpiricalCdf::new(dist.sample(N, seed).unwrap()).unwrap();
    ks_statistic(&e, reference).unwrap()
}

#[test]
fn inversion_sampling_matches_target_laws() {
    let cases = [
        (DistSpec::Uniform, 1),
        (DistSpec::kumaraswamy(0.5, 0.5).unwrap(), 2),
        (DistSpec::Arcsine, 3),
        (DistSpec::kumaraswamy(2.0, 3.0).unwrap(), 4),
    ];
    for (dist, seed) in cases {
        let d = ks_of_sample(&dist, &CdfFn::Closed(dist.clone()), seed);
        assert!(d < ks_band_95(N), "{dist}: {d}");
    }
}

#[test]
fn beta_sampling_by_bisection() {
    let dist = DistSpec::beta(2.0, 5.0).unwrap();
    let e = EmpiricalCdf::new(dist.sample(10_000, 8).unwrap()).unwrap();
    assert!(ks_statistic(&e, &CdfFn::Closed(dist)).unwrap() < ks_band_99(10_000));
}

#[test]
fn kumaraswamy_power_transform_is_beta() {
    for (alpha, beta, seed) in [(0.5, 2.0, 10), (3.0, 0.7, 11)] {
        let xs = DistSpec::kumaraswamy(alpha, beta).unwrap().sample(N, seed).unwrap();
        let e = EmpiricalCdf::new(xs.iter().map(|x| x.powf(alpha)).collect()).unwrap();
        let d = ks_statistic(&e, &CdfFn::beta(1.0, beta).unwrap()).unwrap();
        assert!(d < ks_band_99(N), "K({alpha},{beta}): {d}");
    }
}

#[test]
fn propagation_matches_ensembles() {
    let bases = [
        DistSpec::Uniform,
        DistSpec::Arcsine,
        DistSpec::kumaraswamy(1.0, 0.5).unwrap(),
        DistSpec::kumaraswamy(2.0, 3.0).unwrap(),
    ];
    for (i, base) in bases.iter().enumerate() {
        for (j, r) in [2.0, 3.5, 4.0].into_iter().enumerate() {
            let seed = (3 * i + j) as u64 + 1;
            let d = propagation_ks(base, MapParam::new(r).unwrap(), 1, N, seed, PROPAGATION_GRID).unwrap();
            assert!(d < ks_band_99(N), "{base} r={r}: {d}");
        }
    }
}

#[test]
fn time_evolution_commutes_with_operator() {
    for r in [3.5, 4.0] {
        for k in 1..=3 {
            let d = propagation_ks(&DistSpec::Uniform, MapParam::new(r).unwrap(), k, N, 77 + k as u64, PROPAGATION_GRID).unwrap();
            assert!(d < ks_band_99(N), "r={r} k={k}: {d}");
        }
    }
}

#[test]
fn uniform_ensembles_at_r4() {
    let four = MapParam::FOUR;
    let e0 = ensemble_push(&DistSpec::Uniform, four, 0, N, 5).unwrap();
    assert!(ks_statistic(&e0, &CdfFn::uniform()).unwrap() < ks_band_99(N));

    let e2 = ensemble_push(&DistSpec::Uniform, four, 2, N, 6).unwrap();
    let k = CdfFn::kumaraswamy(0.5, 0.5).unwrap();
    assert!(ks_statistic(&e2, &k).unwrap() < ks_band_99(N));

    let e50 = ensemble_push(&DistSpec::Uniform, four, 50, N, 7).unwrap();
    let d50 = iterate_pushforward_with(&CdfFn::uniform(), four, 50, Eval::Grid { m: 4096 }).unwrap();
    let d50 = CdfFn::from(tabulate(d50.cdf(), 4096).unwrap());
    assert!(ks_statistic(&e50, &d50).unwrap() < ks_band_99(N));
    assert!(ks_statistic(&e50, &CdfFn::arcsine()).unwrap() < ks_band_99(N));
}

#[test]
fn long_orbits_follow_the_arcsine_law() {
    let four = MapParam::FOUR;
    let a = ergodic_empirical(four, 1_000_000, DEFAULT_BURN_IN, 7).unwrap();
    let b = ergodic_empirical(four, 1_000_000, DEFAULT_BURN_IN, 8).unwrap();
    assert!(ks_statistic(&a.ecdf, &CdfFn::arcsine()).unwrap() <= 0.01);
    assert!(ks_statistic(&b.ecdf, &CdfFn::arcsine()).unwrap() <= 0.01);
    assert!(ks_two_sample(&a.ecdf, &b.ecdf).unwrap() <= 0.01);
    assert_eq!(a.attractor, None);
}

#[test]
fn ks_band_is_calibrated() {
    // the 99% band should be exceeded in roughly 1% of independent runs
    let dist = DistSpec::kumaraswamy(0.5, 0.5).unwrap();
    let reference = CdfFn::Closed(dist.clone());
    let n = 10_000;
    let exceed = (0..200u64)
        .filter(|&s| {
            let e = EmpiricalCdf::new(dist.sample(n, 9000 + s).unwrap()).unwrap();
            ks_statistic(&e, &reference).unwrap() > ks_band_99(n)
        })
        .count();
    assert!(exceed <= 8, "{exceed}/200 runs above the 99% band");
    assert!(ks_of_sample(&dist, &reference, 12) < ks_band_99(N));
}

#[test]
fn ks_shrinks_with_sample_size() {
    let dist = DistSpec::kumaraswamy(0.5, 0.5).unwrap();
    let reference = CdfFn::Closed(dist.clone());
    let mean_ks = |n: usize| {
        (0..20u64)
            .map(|s| {
                let e = EmpiricalCdf::new(dist.sample(n, 500 + s).unwrap()).unwrap();
                ks_statistic(&e, &reference).unwrap()
            })
            .sum::<f64>()
            / 20.0
    };
    let (small, large) = (mean_ks(1_000), mean_ks(10_000));
    assert!(large < small, "{large} !< {small}");
    // √n · E[D] tends to √(π/2) ln 2 ≈ 0.87
    let scaled = large * (10_000f64).sqrt();
    assert!((0.6..1.1).contains(&scaled), "{scaled}");
}
