//! Grid-quadrature oracle for one-dimensional posteriors.
//!
//! When exactly one parameter is free (the rest pinned), the posterior is a
//! curve that trapezoid quadrature can normalize directly — an independent
//! cross-check for the sampler that shares no random-walk machinery with it.

use std::collections::BTreeMap;

use super::sampler::{param_layout, Evaluator, PriorSpec};
use crate::dataio::Dataset;
use crate::error::{Error, Result};
use crate::likelihood::ObsKind;
use crate::models::ModelKind;

/// An evenly spaced evaluation grid `[lo, hi]` with `points` nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, points: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Domain(format!(
                "grid bounds must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        if points < 3 {
            return Err(Error::Domain(format!(
                "grid needs at least 3 points, got {points}"
            )));
        }
        Ok(Self { lo, hi, points })
    }

    fn step(&self) -> f64 {
        (self.hi - self.lo) / (self.points - 1) as f64
    }

    fn node(&self, i: usize) -> f64 {
        self.lo + self.step() * i as f64
    }
}

/// Quadrature posterior moments for the single free parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSummary {
    pub mean: f64,
    pub q025: f64,
    pub q50: f64,
    pub q975: f64,
}

/// Relative density allowed at the outermost grid nodes; more means the
/// grid truncates visible posterior mass and the quadrature would be biased.
const EDGE_TOLERANCE: f64 = 1e-4;

/// Normalize the posterior of `free_param` over a bounded grid by trapezoid
/// quadrature, all other parameters of `(kind, obs_kind)` held at `fixed`.
///
/// Errors if `fixed` does not cover exactly the remaining parameters, if the
/// grid dips below the parameter's support, or if the posterior density at
/// either grid edge exceeds 1e-4 of its peak (the grid is too narrow).
pub fn grid_posterior_oracle(
    kind: ModelKind,
    obs_kind: ObsKind,
    free_param: &str,
    fixed: &BTreeMap<String, f64>,
    prior: PriorSpec,
    data: &Dataset,
    grid: GridSpec,
) -> Result<OracleSummary> {
    let layout = param_layout(kind, obs_kind);
    let free_idx = layout
        .iter()
        .position(|(n, _)| n == free_param)
        .ok_or_else(|| {
            Error::Mcmc(format!(
                "unknown parameter {free_param:?}; this model has {:?}",
                layout.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>()
            ))
        })?;
    if fixed.contains_key(free_param) {
        return Err(Error::Mcmc(format!(
            "parameter {free_param:?} is both free and fixed"
        )));
    }
    for name in fixed.keys() {
        if !layout.iter().any(|(n, _)| n == name) {
            return Err(Error::Mcmc(format!(
                "fixed value for unknown parameter {name:?}"
            )));
        }
    }

    let mut x = vec![f64::NAN; layout.len()];
    for (i, (name, lower)) in layout.iter().enumerate() {
        if i == free_idx {
            continue;
        }
        let value = *fixed.get(name).ok_or_else(|| {
            Error::Mcmc(format!("no fixed value for parameter {name:?}"))
        })?;
        if !(value.is_finite() && value > *lower) {
            return Err(Error::Mcmc(format!(
                "fixed value {name} = {value} is outside the parameter's support"
            )));
        }
        x[i] = value;
    }
    if grid.lo <= layout[free_idx].1 {
        return Err(Error::Mcmc(format!(
            "grid starts at {} but {free_param:?} requires values above {}",
            grid.lo, layout[free_idx].1
        )));
    }

    let priors: BTreeMap<String, PriorSpec> = [(free_param.to_string(), prior)].into();
    let eval = Evaluator::new(kind, obs_kind, data, &priors)?;

    let mut lps = Vec::with_capacity(grid.points);
    for i in 0..grid.points {
        x[free_idx] = grid.node(i);
        lps.push(eval.evaluate(&x).0);
    }
    let lp_max = lps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !lp_max.is_finite() {
        return Err(Error::Mcmc(
            "posterior density is zero (or undefined) everywhere on the grid".into(),
        ));
    }
    let dens: Vec<f64> = lps.iter().map(|lp| (lp - lp_max).exp()).collect();
    if dens[0] > EDGE_TOLERANCE || dens[grid.points - 1] > EDGE_TOLERANCE {
        return Err(Error::Mcmc(format!(
            "posterior mass at the grid edges ({:.3e} low, {:.3e} high, relative to peak) \
             exceeds {EDGE_TOLERANCE:.0e}; widen the grid",
            dens[0],
            dens[grid.points - 1]
        )));
    }

    let step = grid.step();
    // cumulative trapezoid CDF; cdf[last] is the normalizing constant
    let mut cdf = vec![0.0; grid.points];
    let mut mean_num = 0.0;
    for i in 1..grid.points {
        cdf[i] = cdf[i - 1] + 0.5 * (dens[i - 1] + dens[i]) * step;
        mean_num += 0.5 * (grid.node(i - 1) * dens[i - 1] + grid.node(i) * dens[i]) * step;
    }
    let z = cdf[grid.points - 1];
    if !(z.is_finite() && z > 0.0) {
        return Err(Error::Mcmc("posterior quadrature failed to normalize".into()));
    }

    let quantile = |q: f64| -> f64 {
        let target = q * z;
        for i in 1..grid.points {
            if cdf[i] >= target {
                let t = (target - cdf[i - 1]) / (cdf[i] - cdf[i - 1]);
                return grid.node(i - 1) + t * step;
            }
        }
        grid.hi
    };

    Ok(OracleSummary {
        mean: mean_num / z,
        q025: quantile(0.025),
        q50: quantile(0.5),
        q975: quantile(0.975),
    })
}
