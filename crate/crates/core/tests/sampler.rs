//! Whole-chain sampler behavior: determinism, bounds, adaptation freeze,
//! thinning, and statistical agreement with independent oracles.

use std::collections::BTreeMap;

use hbayes::dataio::{synthesize, CovariateRanges, Dataset, JournalRecord};
use hbayes::mcmc::{
    default_inits, default_priors, grid_posterior_oracle, run_chain, run_chain_fixed, summarize,
    GridSpec, PriorSpec, Sampler, SamplerConfig,
};
use hbayes::{ModelKind, ObsKind, ObservationModel, ParamVector};

fn ecology_ranges() -> CovariateRanges {
    CovariateRanges::new((48.0, 8678.0), (19.0, 456_498.0)).unwrap()
}

fn gs_dataset(n: usize, seed: u64) -> Dataset {
    synthesize(
        ModelKind::GlanzelSchubert,
        &ParamVector::glanzel_schubert(1.77, 0.7),
        &ObservationModel::trunc_gaussian(5.0).unwrap(),
        n,
        &ecology_ranges(),
        seed,
    )
    .unwrap()
}

fn quick_config(seed: u64) -> SamplerConfig {
    SamplerConfig { iterations: 2000, burn_in: 500, seed, ..Default::default() }
}

#[test]
fn identical_configs_give_bit_identical_chains() {
    let data = gs_dataset(30, 11);
    let kind = ModelKind::GlanzelSchubert;
    let obs = ObsKind::Gaussian;
    let priors = default_priors(kind, obs);
    let inits = default_inits(kind, obs);
    let config = quick_config(42);
    let a = run_chain(&config, kind, obs, &data, &priors, &inits).unwrap();
    let b = run_chain(&config, kind, obs, &data, &priors, &inits).unwrap();
    assert_eq!(a, b);

    let c = run_chain(&quick_config(43), kind, obs, &data, &priors, &inits).unwrap();
    assert_ne!(a.draws, c.draws, "different seeds should explore differently");
}

#[test]
fn all_draws_respect_truncation_bounds() {
    let data = gs_dataset(25, 7);
    let kind = ModelKind::EggheRousseau;
    let obs = ObsKind::NegBinomial;
    let chain = run_chain(
        &quick_config(3),
        kind,
        obs,
        &data,
        &default_priors(kind, obs),
        &default_inits(kind, obs),
    )
    .unwrap();
    assert_eq!(chain.param_names, vec!["alpha", "r"]);
    for draw in &chain.draws {
        assert!(draw[0] > 2.0, "alpha = {} leaked past its bound", draw[0]);
        assert!(draw[1] > 0.0, "r = {} leaked past its bound", draw[1]);
    }
    // every kept state has positive posterior density, hence finite deviance
    assert!(chain.deviance_draws.iter().all(|d| d.is_finite()));
}

#[test]
fn adaptation_freezes_after_burn_in() {
    let data = gs_dataset(25, 19);
    let kind = ModelKind::GlanzelSchubert;
    let obs = ObsKind::Gaussian;
    let priors = default_priors(kind, obs);
    let inits = default_inits(kind, obs);
    let config = SamplerConfig { iterations: 1000, burn_in: 300, seed: 5, ..Default::default() };
    let mut sampler =
        Sampler::new(&config, kind, obs, &data, &priors, &inits, &BTreeMap::new()).unwrap();

    let initial = sampler.proposal_scales();
    assert!(sampler.adapting());
    for _ in 0..config.burn_in {
        sampler.sweep();
    }
    let frozen = sampler.proposal_scales();
    assert!(!sampler.adapting());
    assert_ne!(initial, frozen, "burn-in should have tuned the scales");

    for _ in 0..500 {
        sampler.sweep();
    }
    assert_eq!(frozen, sampler.proposal_scales(), "scales moved after the freeze");
}

#[test]
fn thinning_keeps_every_kth_draw() {
    let data = gs_dataset(20, 23);
    let kind = ModelKind::GlanzelSchubert;
    let obs = ObsKind::Gaussian;
    let priors = default_priors(kind, obs);
    let inits = default_inits(kind, obs);
    let base = SamplerConfig { iterations: 2000, burn_in: 200, seed: 9, ..Default::default() };
    let thinned = SamplerConfig { thin: 5, ..base };

    let full = run_chain(&base, kind, obs, &data, &priors, &inits).unwrap();
    let kept = run_chain(&thinned, kind, obs, &data, &priors, &inits).unwrap();
    assert_eq!(full.len(), 2000);
    assert_eq!(kept.len(), 400);
    // thinning only drops rows; the underlying trajectory is identical
    for (i, draw) in kept.draws.iter().enumerate() {
        assert_eq!(draw, &full.draws[5 * (i + 1) - 1]);
    }
}

#[test]
fn acceptance_rates_settle_near_target() {
    let data = gs_dataset(40, 31);
    let kind = ModelKind::GlanzelSchubert;
    let obs = ObsKind::Gaussian;
    let chain = run_chain(
        &SamplerConfig { iterations: 8000, burn_in: 2000, seed: 17, ..Default::default() },
        kind,
        obs,
        &data,
        &default_priors(kind, obs),
        &default_inits(kind, obs),
    )
    .unwrap();
    for (name, rate) in chain.param_names.iter().zip(&chain.accept_rates) {
        assert!(
            (0.2..=0.7).contains(rate),
            "{name} acceptance rate {rate} strayed far from the 0.44 target"
        );
    }
}

#[test]
fn fixed_parameters_stay_out_of_the_columns() {
    let data = gs_dataset(20, 37);
    let kind = ModelKind::EggheRousseau;
    let obs = ObsKind::NegBinomial;
    let fixed: BTreeMap<String, f64> = [("r".to_string(), 5.0)].into();
    let chain = run_chain_fixed(
        &quick_config(2),
        kind,
        obs,
        &data,
        &default_priors(kind, obs),
        &default_inits(kind, obs),
        &fixed,
    )
    .unwrap();
    assert_eq!(chain.param_names, vec!["alpha"]);
    assert_eq!(chain.fixed["r"], 5.0);
    let draws = chain.param_draws().unwrap();
    assert_eq!(draws.len(), chain.len());
    assert!(draws.iter().all(|p| p.c.is_none() && p.a.is_none()));
}

/// The spec'd cross-check between the sampler and the quadrature oracle:
/// a one-parameter Egghe-Rousseau/NB posterior (r pinned) on ten synthetic
/// journals must agree within 2% on the mean and 5% on the interval ends.
#[test]
fn posterior_matches_quadrature_oracle() {
    let data = synthesize(
        ModelKind::EggheRousseau,
        &ParamVector::egghe_rousseau(3.0),
        &ObservationModel::neg_binomial(5.0).unwrap(),
        10,
        &CovariateRanges::new((100.0, 2000.0), (500.0, 20_000.0)).unwrap(),
        4242,
    )
    .unwrap();
    let kind = ModelKind::EggheRousseau;
    let obs = ObsKind::NegBinomial;
    let fixed: BTreeMap<String, f64> = [("r".to_string(), 5.0)].into();

    let chain = run_chain_fixed(
        &SamplerConfig { seed: 99, ..Default::default() },
        kind,
        obs,
        &data,
        &default_priors(kind, obs),
        &default_inits(kind, obs),
        &fixed,
    )
    .unwrap();
    let summary = summarize(&chain).unwrap();
    let alpha = summary.param("alpha").unwrap();
    let draws = chain.column("alpha").unwrap();
    let mcmc_mean = draws.iter().sum::<f64>() / draws.len() as f64;

    let oracle = grid_posterior_oracle(
        kind,
        obs,
        "alpha",
        &fixed,
        PriorSpec::TruncNormal { mean: 1.0, variance: 100.0, lower: 2.0 },
        &data,
        GridSpec::new(2.02, 8.0, 4001).unwrap(),
    )
    .unwrap();

    let rel = |a: f64, b: f64| (a - b).abs() / b.abs();
    assert!(rel(mcmc_mean, oracle.mean) < 0.02, "mean {mcmc_mean} vs oracle {}", oracle.mean);
    assert!(rel(alpha.ci_low, oracle.q025) < 0.05, "q025 {} vs {}", alpha.ci_low, oracle.q025);
    assert!(rel(alpha.ci_high, oracle.q975) < 0.05, "q975 {} vs {}", alpha.ci_high, oracle.q975);
}

/// Conjugate closed form: with the mean pinned at mu = C for every record,
/// the Gaussian precision tau has a Gamma(0.001 + n/2, 0.001 + SS/2)
/// posterior; 40 records with squared residual sum 80 give Gamma(20.001,
/// 40.001), mean 0.50001...
#[test]
fn conjugate_tau_posterior_matches_closed_form() {
    let records = (0..40)
        .map(|i| JournalRecord {
            name: format!("r{i:02}"),
            h: 8 + (i % 5) as u32,
            publications: 1000,
            citations: 10,
        })
        .collect();
    let data = Dataset::new(records).unwrap();
    let kind = ModelKind::HirschGaussian;
    let obs = ObsKind::Gaussian;
    let fixed: BTreeMap<String, f64> =
        [("alpha".to_string(), 1.0), ("a".to_string(), 1.0), ("b".to_string(), 1.0)].into();

    let chain = run_chain_fixed(
        &SamplerConfig { seed: 7, ..Default::default() },
        kind,
        obs,
        &data,
        &default_priors(kind, obs),
        &default_inits(kind, obs),
        &fixed,
    )
    .unwrap();
    let draws = chain.column("tau").unwrap();
    let mean = draws.iter().sum::<f64>() / draws.len() as f64;
    let analytic = 20.001 / 40.001;
    assert!(
        (mean - analytic).abs() / analytic < 0.02,
        "tau mean {mean} vs conjugate {analytic}"
    );
}

/// Parameter recovery at the paper's ecology posterior: synthesize 130
/// journals from G-S Gaussian with (alpha, c) = (1.77, 0.7) and refit.
#[test]
fn gs_parameters_recovered_within_15_percent() {
    let truth = (1.77, 0.7);
    let data = gs_dataset(130, 2026);
    let kind = ModelKind::GlanzelSchubert;
    let obs = ObsKind::Gaussian;
    let chain = run_chain(
        &SamplerConfig { seed: 13, ..Default::default() },
        kind,
        obs,
        &data,
        &default_priors(kind, obs),
        &default_inits(kind, obs),
    )
    .unwrap();
    let summary = summarize(&chain).unwrap();
    let alpha = summary.param("alpha").unwrap();
    let c = summary.param("c").unwrap();

    assert!(
        (alpha.median - truth.0).abs() / truth.0 < 0.15,
        "alpha median {} vs truth {}",
        alpha.median,
        truth.0
    );
    assert!(
        (c.median - truth.1).abs() / truth.1 < 0.15,
        "c median {} vs truth {}",
        c.median,
        truth.1
    );
    assert!(
        alpha.ci_low <= truth.0 && truth.0 <= alpha.ci_high,
        "alpha CI [{}, {}] misses {}",
        alpha.ci_low,
        alpha.ci_high,
        truth.0
    );
    assert!(
        c.ci_low <= truth.1 && truth.1 <= c.ci_high,
        "c CI [{}, {}] misses {}",
        c.ci_low,
        c.ci_high,
        truth.1
    );
}
