//! Covariate grids and the h-index sensitivity analysis.
//!
//! A fitted model is probed by sliding one covariate along a grid while
//! the other is pinned at its dataset median, pushing every posterior
//! draw through the mean function at each grid point, and summarizing the
//! spread of the resulting h values. The headline number is the
//! sensitivity index `SI = (h_max − h_min) / h_max` over the per-point
//! posterior means: 0 means the covariate hardly moves h across its
//! observed range, values near 1 mean it dominates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{evaluate_mean, Covariates, ModelKind, ParamVector};
use crate::quantile::quantile;

/// Which covariate a grid varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CovariateAxis {
    Publications,
    Citations,
}

impl CovariateAxis {
    pub fn code(self) -> &'static str {
        match self {
            CovariateAxis::Publications => "P",
            CovariateAxis::Citations => "C",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "P" => Some(CovariateAxis::Publications),
            "C" => Some(CovariateAxis::Citations),
            _ => None,
        }
    }
}

/// Global grids span the covariate's observed percentiles; local grids
/// take small multiplicative steps around its median.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GridMode {
    Global,
    Local,
}

/// Percentiles used by the global grid.
pub const GLOBAL_PERCENTILES: [f64; 7] = [5.0, 10.0, 25.0, 50.0, 75.0, 90.0, 95.0];

/// Multiplicative factors used by the local grid: 0.70 through 1.30 in
/// steps of 0.05.
pub const LOCAL_FACTORS: [f64; 13] = [
    0.70, 0.75, 0.80, 0.85, 0.90, 0.95, 1.00, 1.05, 1.10, 1.15, 1.20, 1.25, 1.30,
];

/// A grid of values for one covariate, with the other held fixed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensitivityGrid {
    pub varied: CovariateAxis,
    pub mode: GridMode,
    /// Non-decreasing positive grid values. Adjacent values may be equal
    /// when the underlying percentiles coincide (tiny or degenerate
    /// datasets), which is harmless for the index.
    pub values: Vec<f64>,
    /// The pinned value of the other covariate.
    pub fixed_value: f64,
}

impl SensitivityGrid {
    pub fn new(
        varied: CovariateAxis,
        mode: GridMode,
        values: Vec<f64>,
        fixed_value: f64,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Data("sensitivity grid needs at least one value".into()));
        }
        for v in &values {
            if !(v.is_finite() && *v > 0.0) {
                return Err(Error::Data(format!("grid values must be positive, got {v}")));
            }
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Data("grid values must be non-decreasing".into()));
        }
        if !(fixed_value.is_finite() && fixed_value > 0.0) {
            return Err(Error::Data(format!(
                "fixed covariate must be positive, got {fixed_value}"
            )));
        }
        Ok(Self { varied, mode, values, fixed_value })
    }

    fn covariates(&self, grid_value: f64) -> Result<Covariates> {
        match self.varied {
            CovariateAxis::Publications => Covariates::new(grid_value, self.fixed_value),
            CovariateAxis::Citations => Covariates::new(self.fixed_value, grid_value),
        }
    }
}

/// Type-7 percentile of `values` at `p` in [0, 100].
pub fn percentile(values: &[f64], p: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::Data("percentile of an empty slice".into()));
    }
    if !(0.0..=100.0).contains(&p) || p.is_nan() {
        return Err(Error::Domain(format!("percentile must lie in [0, 100], got {p}")));
    }
    if values.iter().any(|v| v.is_nan()) {
        return Err(Error::Data("percentile input contains NaN".into()));
    }
    Ok(quantile(values, p / 100.0))
}

fn axis_values(data: &crate::dataio::Dataset, axis: CovariateAxis) -> Vec<f64> {
    match axis {
        CovariateAxis::Publications => data.publication_values(),
        CovariateAxis::Citations => data.citation_values(),
    }
}

fn other_axis(axis: CovariateAxis) -> CovariateAxis {
    match axis {
        CovariateAxis::Publications => CovariateAxis::Citations,
        CovariateAxis::Citations => CovariateAxis::Publications,
    }
}

/// Grid over the 5/10/25/50/75/90/95th percentiles of `axis` in `data`,
/// with the other covariate pinned at its median.
pub fn build_global_grid(
    data: &crate::dataio::Dataset,
    axis: CovariateAxis,
) -> Result<SensitivityGrid> {
    if data.is_empty() {
        return Err(Error::Data("cannot build a grid from an empty dataset".into()));
    }
    let varied = axis_values(data, axis);
    let values = GLOBAL_PERCENTILES
        .iter()
        .map(|&p| percentile(&varied, p))
        .collect::<Result<Vec<f64>>>()?;
    let fixed = percentile(&axis_values(data, other_axis(axis)), 50.0)?;
    SensitivityGrid::new(axis, GridMode::Global, values, fixed)
}

/// Grid over median × {0.70, 0.75, …, 1.30} of `axis` in `data`, with the
/// other covariate pinned at its median.
pub fn build_local_grid(
    data: &crate::dataio::Dataset,
    axis: CovariateAxis,
) -> Result<SensitivityGrid> {
    if data.is_empty() {
        return Err(Error::Data("cannot build a grid from an empty dataset".into()));
    }
    let median = percentile(&axis_values(data, axis), 50.0)?;
    let values = LOCAL_FACTORS.iter().map(|f| f * median).collect();
    let fixed = percentile(&axis_values(data, other_axis(axis)), 50.0)?;
    SensitivityGrid::new(axis, GridMode::Local, values, fixed)
}

/// One grid point of a propagated curve: the posterior mean and
/// equal-tailed quantiles of the model mean at that covariate value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub grid_value: f64,
    pub h_mean: f64,
    pub h_q025: f64,
    pub h_q50: f64,
    pub h_q975: f64,
}

/// A sensitivity curve: one [`CurvePoint`] per grid value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensitivityCurve {
    pub varied: CovariateAxis,
    pub mode: GridMode,
    pub points: Vec<CurvePoint>,
}

/// Subsample at most `cap` draws at an even stride, keeping order.
fn thin_indices(n: usize, cap: Option<usize>) -> Vec<usize> {
    match cap {
        Some(m) if m > 0 && m < n => (0..m).map(|i| i * n / m).collect(),
        _ => (0..n).collect(),
    }
}

fn check_axis_supported(kind: ModelKind, grid: &SensitivityGrid) -> Result<()> {
    if grid.varied == CovariateAxis::Publications && !kind.uses_publications() {
        return Err(Error::Unsupported(format!(
            "{} does not depend on P; a P-sensitivity curve would be identically flat",
            kind.label()
        )));
    }
    Ok(())
}

/// Push every posterior draw through the mean function at each grid point.
///
/// `max_draws` caps the propagation cost by even-stride subsampling;
/// `None` uses every draw.
pub fn propagate_draws_with_cap(
    kind: ModelKind,
    draws: &[ParamVector],
    grid: &SensitivityGrid,
    max_draws: Option<usize>,
) -> Result<SensitivityCurve> {
    check_axis_supported(kind, grid)?;
    if draws.is_empty() {
        return Err(Error::Data("no posterior draws to propagate".into()));
    }
    let idx = thin_indices(draws.len(), max_draws);
    let mut points = Vec::with_capacity(grid.values.len());
    for &g in &grid.values {
        let cov = grid.covariates(g)?;
        let mut h = Vec::with_capacity(idx.len());
        for &i in &idx {
            h.push(evaluate_mean(kind, &draws[i], &cov)?);
        }
        let mean = h.iter().sum::<f64>() / h.len() as f64;
        points.push(CurvePoint {
            grid_value: g,
            h_mean: mean,
            h_q025: percentile(&h, 2.5)?,
            h_q50: percentile(&h, 50.0)?,
            h_q975: percentile(&h, 97.5)?,
        });
    }
    Ok(SensitivityCurve { varied: grid.varied, mode: grid.mode, points })
}

/// [`propagate_draws_with_cap`] using every draw.
pub fn propagate_draws(
    kind: ModelKind,
    draws: &[ParamVector],
    grid: &SensitivityGrid,
) -> Result<SensitivityCurve> {
    propagate_draws_with_cap(kind, draws, grid, None)
}

/// Draws kept beyond this are subsampled before propagation; three-digit
/// SI stability does not need all 50k.
pub const PROPAGATION_DRAW_CAP: usize = 5_000;

/// Propagate a fitted chain's posterior through the mean function of
/// `kind` over the grid, subsampling to [`PROPAGATION_DRAW_CAP`] draws.
///
/// `kind` must be the model the chain was fitted on — the chain's own
/// draws are reused, fixed parameters included.
pub fn propagate(
    chain: &crate::mcmc::Chain,
    kind: ModelKind,
    grid: &SensitivityGrid,
) -> Result<SensitivityCurve> {
    propagate_chain_with_cap(chain, kind, grid, Some(PROPAGATION_DRAW_CAP))
}

/// [`propagate`] without the draw cap (slower, bit-stable to draw count).
pub fn propagate_full(
    chain: &crate::mcmc::Chain,
    kind: ModelKind,
    grid: &SensitivityGrid,
) -> Result<SensitivityCurve> {
    propagate_chain_with_cap(chain, kind, grid, None)
}

fn propagate_chain_with_cap(
    chain: &crate::mcmc::Chain,
    kind: ModelKind,
    grid: &SensitivityGrid,
    max_draws: Option<usize>,
) -> Result<SensitivityCurve> {
    if kind != chain.kind {
        return Err(Error::Unsupported(format!(
            "chain was fitted on {}, not {}",
            chain.kind.label(),
            kind.label()
        )));
    }
    propagate_draws_with_cap(kind, &chain.param_draws()?, grid, max_draws)
}

/// The sensitivity index and the intermediate quantities it is built from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SiResult {
    pub si: f64,
    pub h_max: f64,
    pub h_min: f64,
    /// `progressive[k]` is the index over the first `k + 1` grid points,
    /// so the last entry equals `si`. Useful for seeing which part of the
    /// covariate range contributes the spread.
    pub progressive: Vec<f64>,
}

fn si_of(h_max: f64, h_min: f64) -> f64 {
    if h_max <= 0.0 {
        0.0 // a curve that is zero everywhere is insensitive, not undefined
    } else {
        (h_max - h_min) / h_max
    }
}

/// `SI = (h_max − h_min) / h_max` over the per-grid-point posterior mean
/// h of a propagated curve, plus its prefix evolution.
pub fn sensitivity_index(curve: &SensitivityCurve) -> Result<SiResult> {
    let h_means: Vec<f64> = curve.points.iter().map(|p| p.h_mean).collect();
    sensitivity_index_over(&h_means)
}

/// [`sensitivity_index`] over raw per-grid-point h values.
pub fn sensitivity_index_over(h_means: &[f64]) -> Result<SiResult> {
    if h_means.is_empty() {
        return Err(Error::Data("sensitivity index of an empty curve".into()));
    }
    for h in h_means {
        if !(h.is_finite() && *h >= 0.0) {
            return Err(Error::Domain(format!("curve values must be finite and >= 0, got {h}")));
        }
    }
    let mut h_max = f64::MIN;
    let mut h_min = f64::MAX;
    let mut progressive = Vec::with_capacity(h_means.len());
    for &h in h_means {
        h_max = h_max.max(h);
        h_min = h_min.min(h);
        progressive.push(si_of(h_max, h_min));
    }
    if h_max <= 0.0 {
        return Err(Error::Domain("sensitivity index needs h_max > 0".into()));
    }
    Ok(SiResult { si: si_of(h_max, h_min), h_max, h_min, progressive })
}

/// One sensitivity index per posterior draw, for credible bands on the
/// index itself.
pub fn per_draw_si(
    kind: ModelKind,
    draws: &[ParamVector],
    grid: &SensitivityGrid,
    max_draws: Option<usize>,
) -> Result<Vec<f64>> {
    check_axis_supported(kind, grid)?;
    if draws.is_empty() {
        return Err(Error::Data("no posterior draws to propagate".into()));
    }
    let idx = thin_indices(draws.len(), max_draws);
    let mut out = Vec::with_capacity(idx.len());
    for &i in &idx {
        let mut h = Vec::with_capacity(grid.values.len());
        for &g in &grid.values {
            h.push(evaluate_mean(kind, &draws[i], &grid.covariates(g)?)?);
        }
        out.push(sensitivity_index_over(&h)?.si);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataio::{Dataset, JournalRecord};

    fn rec(name: &str, h: u32, p: u32, c: u32) -> JournalRecord {
        JournalRecord { name: name.into(), h, publications: p, citations: c }
    }

    fn grid_c(values: Vec<f64>) -> SensitivityGrid {
        SensitivityGrid::new(CovariateAxis::Citations, GridMode::Global, values, 100.0).unwrap()
    }

    #[test]
    fn si_basic_values() {
        let r = sensitivity_index_over(&[10.0, 50.0]).unwrap();
        assert_eq!(r.si, 0.8);
        assert_eq!(r.h_max, 50.0);
        assert_eq!(r.h_min, 10.0);

        let r = sensitivity_index_over(&[7.0, 7.0, 7.0]).unwrap();
        assert_eq!(r.si, 0.0);

        assert!(sensitivity_index_over(&[0.0, 0.0]).is_err()); // h_max must be positive
        assert!(sensitivity_index_over(&[]).is_err());
        assert!(sensitivity_index_over(&[1.0, f64::NAN]).is_err());
        assert!(sensitivity_index_over(&[1.0, -2.0]).is_err());
    }

    #[test]
    fn si_progressive_prefixes() {
        let r = sensitivity_index_over(&[20.0, 20.0, 30.0, 10.0, 40.0]).unwrap();
        assert_eq!(r.progressive.len(), 5);
        assert_eq!(r.progressive[0], 0.0);
        assert_eq!(r.progressive[1], 0.0);
        assert!((r.progressive[2] - 1.0 / 3.0).abs() < 1e-15);
        assert!((r.progressive[3] - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.progressive[4], 0.75);
        assert_eq!(*r.progressive.last().unwrap(), r.si);
        assert!(r.progressive.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn grid_validation() {
        assert!(SensitivityGrid::new(CovariateAxis::Citations, GridMode::Global, vec![], 1.0)
            .is_err());
        assert!(SensitivityGrid::new(
            CovariateAxis::Citations,
            GridMode::Global,
            vec![1.0, 0.5],
            1.0
        )
        .is_err());
        assert!(SensitivityGrid::new(
            CovariateAxis::Citations,
            GridMode::Global,
            vec![0.0, 1.0],
            1.0
        )
        .is_err());
        assert!(SensitivityGrid::new(
            CovariateAxis::Citations,
            GridMode::Global,
            vec![1.0, 2.0],
            0.0
        )
        .is_err());
        // equal adjacent values are allowed
        assert!(SensitivityGrid::new(
            CovariateAxis::Citations,
            GridMode::Global,
            vec![1.0, 1.0, 2.0],
            1.0
        )
        .is_ok());
    }

    #[test]
    fn global_grid_hits_percentiles() {
        let records: Vec<_> =
            (1..=100).map(|i| rec(&format!("j{i}"), 1, 10 * i, 100 * i)).collect();
        let data = Dataset::new(records).unwrap();
        let grid = build_global_grid(&data, CovariateAxis::Citations).unwrap();
        assert_eq!(grid.values.len(), 7);
        // type-7 on 100..=10000 step 100: p5 -> 595, median -> 5050
        assert!((grid.values[0] - 595.0).abs() < 1e-9);
        assert!((grid.values[3] - 5050.0).abs() < 1e-9);
        assert!((grid.values[6] - 9505.0).abs() < 1e-9);
        // P pinned at its median
        assert!((grid.fixed_value - 505.0).abs() < 1e-9);
        assert_eq!(grid.mode, GridMode::Global);
    }

    #[test]
    fn local_grid_is_median_scaled() {
        let records: Vec<_> = (1..=9).map(|i| rec(&format!("j{i}"), 1, 10, 100 * i)).collect();
        let data = Dataset::new(records).unwrap();
        let grid = build_local_grid(&data, CovariateAxis::Citations).unwrap();
        assert_eq!(grid.values.len(), 13);
        assert!((grid.values[0] - 0.70 * 500.0).abs() < 1e-9);
        assert!((grid.values[6] - 500.0).abs() < 1e-9);
        assert!((grid.values[12] - 1.30 * 500.0).abs() < 1e-9);
        assert_eq!(grid.fixed_value, 10.0);
        assert_eq!(grid.mode, GridMode::Local);
    }

    #[test]
    fn single_journal_grid_degenerates_but_builds() {
        let data = Dataset::new(vec![rec("only", 10, 200, 4000)]).unwrap();
        let grid = build_global_grid(&data, CovariateAxis::Citations).unwrap();
        assert!(grid.values.iter().all(|&v| v == 4000.0));
        assert_eq!(grid.fixed_value, 200.0);
    }

    #[test]
    fn propagate_single_draw_equals_pointwise_mean() {
        let draw = ParamVector::egghe_rousseau(3.0);
        let grid = grid_c(vec![16.0, 54.0, 128.0]);
        let curve = propagate_draws(ModelKind::EggheRousseau, &[draw], &grid).unwrap();
        assert_eq!(curve.points.len(), 3);
        for pt in &curve.points {
            let cov = Covariates::new(100.0, pt.grid_value).unwrap();
            let mu = evaluate_mean(ModelKind::EggheRousseau, &draw, &cov).unwrap();
            assert_eq!(pt.h_mean, mu);
            assert_eq!(pt.h_q025, mu);
            assert_eq!(pt.h_q50, mu);
            assert_eq!(pt.h_q975, mu);
        }
        // exact values: (C/2)^(1/3)
        assert!((curve.points[0].h_mean - 2.0).abs() < 1e-12);
        assert!((curve.points[1].h_mean - 3.0).abs() < 1e-12);
        assert!((curve.points[2].h_mean - 4.0).abs() < 1e-12);

        // and the index over that curve: (4 - 2) / 4
        let si = sensitivity_index(&curve).unwrap();
        assert!((si.si - 0.5).abs() < 1e-12);
        assert_eq!(si.progressive.len(), 3);
    }

    #[test]
    fn propagate_orders_quantiles() {
        let draws: Vec<_> = (1..=40)
            .map(|i| ParamVector::glanzel_schubert(1.2 + 0.02 * i as f64, 0.5 + 0.01 * i as f64))
            .collect();
        let grid = SensitivityGrid::new(
            CovariateAxis::Publications,
            GridMode::Global,
            vec![50.0, 500.0, 5000.0],
            10_000.0,
        )
        .unwrap();
        let curve = propagate_draws(ModelKind::GlanzelSchubert, &draws, &grid).unwrap();
        for pt in &curve.points {
            assert!(pt.h_q025 <= pt.h_q50 && pt.h_q50 <= pt.h_q975);
            assert!(pt.h_mean >= pt.h_q025 && pt.h_mean <= pt.h_q975);
        }
    }

    #[test]
    fn propagate_rejects_flat_axis() {
        let grid = SensitivityGrid::new(
            CovariateAxis::Publications,
            GridMode::Global,
            vec![10.0, 100.0],
            500.0,
        )
        .unwrap();
        let draw = ParamVector::egghe_rousseau(3.0);
        let err = propagate_draws(ModelKind::EggheRousseau, &[draw], &grid).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)), "{err}");
        let draw = ParamVector::hirsch(1.0, 1.0, 1.0);
        assert!(propagate_draws(ModelKind::HirschNb, &[draw], &grid).is_err());
        // citations axis is fine for every model
        let grid = grid_c(vec![10.0, 100.0]);
        assert!(propagate_draws(ModelKind::HirschNb, &[draw], &grid).is_ok());
    }

    #[test]
    fn propagate_cap_subsamples_evenly() {
        let draws: Vec<_> =
            (0..100).map(|i| ParamVector::egghe_rousseau(2.5 + 0.01 * i as f64)).collect();
        let grid = grid_c(vec![100.0]);
        let full = propagate_draws(ModelKind::EggheRousseau, &draws, &grid).unwrap();
        let capped =
            propagate_draws_with_cap(ModelKind::EggheRousseau, &draws, &grid, Some(10)).unwrap();
        // the cap keeps every 10th draw (0, 10, ..., 90); the capped mean is
        // exactly the mean over that subsample
        let cov = Covariates::new(100.0, 100.0).unwrap();
        let manual = (0..10)
            .map(|i| evaluate_mean(ModelKind::EggheRousseau, &draws[i * 10], &cov).unwrap())
            .sum::<f64>()
            / 10.0;
        assert!((capped.points[0].h_mean - manual).abs() < 1e-12);
        assert!((full.points[0].h_mean - capped.points[0].h_mean).abs() < 0.2);
        let uncapped =
            propagate_draws_with_cap(ModelKind::EggheRousseau, &draws, &grid, Some(1000)).unwrap();
        assert_eq!(full, uncapped);
    }

    #[test]
    fn propagate_uses_chain_draws_and_checks_kind() {
        use crate::likelihood::ObsKind;
        use crate::mcmc::{Chain, SamplerConfig};
        use std::collections::BTreeMap;

        let chain = Chain {
            kind: ModelKind::EggheRousseau,
            obs_kind: ObsKind::NegBinomial,
            param_names: vec!["alpha".into(), "r".into()],
            fixed: BTreeMap::new(),
            draws: vec![vec![3.0, 5.0], vec![4.0, 6.0]],
            deviance_draws: vec![10.0, 11.0],
            accept_rates: vec![0.4, 0.4],
            proposal_scales: vec![0.1, 0.1],
            config: SamplerConfig::default(),
        };
        let grid = grid_c(vec![16.0, 128.0]);
        let curve = propagate(&chain, ModelKind::EggheRousseau, &grid).unwrap();
        // nuisance column ignored; matches draw-level propagation
        let draws = vec![ParamVector::egghe_rousseau(3.0), ParamVector::egghe_rousseau(4.0)];
        let direct = propagate_draws(ModelKind::EggheRousseau, &draws, &grid).unwrap();
        assert_eq!(curve, direct);
        assert_eq!(propagate_full(&chain, ModelKind::EggheRousseau, &grid).unwrap(), direct);

        let err = propagate(&chain, ModelKind::GlanzelSchubert, &grid).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)), "{err}");
    }

    #[test]
    fn per_draw_si_matches_manual() {
        let draws =
            vec![ParamVector::egghe_rousseau(3.0), ParamVector::egghe_rousseau(4.0)];
        let grid = grid_c(vec![16.0, 128.0]);
        let sis = per_draw_si(ModelKind::EggheRousseau, &draws, &grid, None).unwrap();
        assert_eq!(sis.len(), 2);
        for (draw, si) in draws.iter().zip(&sis) {
            let lo = evaluate_mean(
                ModelKind::EggheRousseau,
                draw,
                &Covariates::new(100.0, 16.0).unwrap(),
            )
            .unwrap();
            let hi = evaluate_mean(
                ModelKind::EggheRousseau,
                draw,
                &Covariates::new(100.0, 128.0).unwrap(),
            )
            .unwrap();
            assert!((si - (hi - lo) / hi).abs() < 1e-12);
        }
    }

    #[test]
    fn percentile_endpoints_and_errors() {
        let v = [3.0, 1.0, 2.0];
        assert_eq!(percentile(&v, 0.0).unwrap(), 1.0);
        assert_eq!(percentile(&v, 100.0).unwrap(), 3.0);
        assert_eq!(percentile(&v, 50.0).unwrap(), 2.0);
        assert!(percentile(&v, -1.0).is_err());
        assert!(percentile(&v, 101.0).is_err());
        assert!(percentile(&[], 50.0).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn si_stays_in_unit_interval(
                mut values in proptest::collection::vec(0.0f64..1e6, 1..1000),
                anchor in 0.01f64..1e6,
            ) {
                values.push(anchor); // keep h_max positive
                let r = sensitivity_index_over(&values).unwrap();
                prop_assert!((0.0..=1.0).contains(&r.si), "si = {}", r.si);
                prop_assert!(r.progressive.iter().all(|s| (0.0..=1.0).contains(s)));
            }

            #[test]
            fn si_progressive_never_decreases(
                mut values in proptest::collection::vec(0.0f64..1e6, 2..200),
                anchor in 0.01f64..1e6,
            ) {
                values.push(anchor);
                let r = sensitivity_index_over(&values).unwrap();
                prop_assert!(r.progressive.windows(2).all(|w| w[0] <= w[1]));
                prop_assert_eq!(*r.progressive.last().unwrap(), r.si);
            }

            #[test]
            fn si_subset_never_exceeds_full(
                values in proptest::collection::vec(0.01f64..1e6, 2..100),
                take in 1usize..99,
            ) {
                let take = take.min(values.len());
                let full = sensitivity_index_over(&values).unwrap().si;
                let prefix = sensitivity_index_over(&values[..take]).unwrap().si;
                prop_assert!(prefix <= full + 1e-15);
            }

            #[test]
            fn si_scale_invariant(
                values in proptest::collection::vec(0.01f64..1e4, 2..50),
                k in 0.001f64..1e3,
            ) {
                let base = sensitivity_index_over(&values).unwrap().si;
                let scaled_values: Vec<f64> = values.iter().map(|v| v * k).collect();
                let scaled = sensitivity_index_over(&scaled_values).unwrap().si;
                prop_assert!((base - scaled).abs() < 1e-9);
            }
        }
    }
}
