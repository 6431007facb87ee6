//! Convergence diagnostics and posterior summaries for a sampled chain.

use serde::{Deserialize, Serialize};

use super::sampler::Chain;
use crate::error::{Error, Result};
use crate::quantile::quantile_sorted;

/// Longest lag examined when summing autocorrelations. Keeps the ESS
/// computation from going quadratic on very sticky 50k-draw chains.
const MAX_LAG: usize = 5_000;

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Autocovariance at `lag`, normalized by n (biased, as usual for ACF work).
fn autocov(xs: &[f64], m: f64, lag: usize) -> f64 {
    let n = xs.len();
    xs[..n - lag]
        .iter()
        .zip(&xs[lag..])
        .map(|(a, b)| (a - m) * (b - m))
        .sum::<f64>()
        / n as f64
}

/// Effective sample size via Geyer's initial positive sequence: sum
/// autocorrelations in (odd, even) lag pairs while the pair sums stay
/// positive, then ESS = n / (1 + 2 Σρ). A constant series has no
/// autocorrelation structure to estimate, so it counts as n independent
/// draws; ESS is clamped to n.
pub fn ess(draws: &[f64]) -> f64 {
    let n = draws.len();
    if n < 4 {
        return n as f64;
    }
    let m = mean(draws);
    let c0 = autocov(draws, m, 0);
    if !(c0 > 0.0) || !c0.is_finite() {
        return n as f64;
    }
    let mut tau = 1.0;
    let mut lag = 1;
    let max_lag = MAX_LAG.min(n - 2);
    while lag + 1 <= max_lag {
        let pair = (autocov(draws, m, lag) + autocov(draws, m, lag + 1)) / c0;
        if !(pair > 0.0) {
            break;
        }
        tau += 2.0 * pair;
        lag += 2;
    }
    (n as f64 / tau).min(n as f64)
}

fn segment_var(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / xs.len() as f64
}

/// Geweke convergence score: difference of means between the first 10% and
/// the last 50% of the series, standardized by ESS-adjusted standard errors.
/// Two constant, equal segments give 0; constant but different segments give
/// a signed infinity.
pub fn geweke_z(draws: &[f64]) -> f64 {
    let n = draws.len();
    if n < 2 {
        return 0.0;
    }
    let head = &draws[..(n / 10).max(1)];
    let tail = &draws[n - n / 2..];
    let (m_a, m_b) = (mean(head), mean(tail));
    let se2 = segment_var(head) / ess(head) + segment_var(tail) / ess(tail);
    if se2 > 0.0 {
        (m_a - m_b) / se2.sqrt()
    } else if m_a == m_b {
        0.0
    } else {
        (m_a - m_b).signum() * f64::INFINITY
    }
}

/// Split-R̂ across one or more chains: each chain is halved, and the usual
/// between/within variance ratio is computed over the resulting sub-chains.
/// Values near 1 indicate the halves are indistinguishable.
pub fn split_rhat(chains: &[Vec<f64>]) -> Result<f64> {
    if chains.is_empty() {
        return Err(Error::Mcmc("split_rhat needs at least one chain".into()));
    }
    let half = chains.iter().map(|c| c.len()).min().unwrap_or(0) / 2;
    if half < 2 {
        return Err(Error::Mcmc(
            "split_rhat needs at least 4 draws per chain".into(),
        ));
    }
    let mut halves: Vec<&[f64]> = Vec::with_capacity(2 * chains.len());
    for c in chains {
        halves.push(&c[..half]);
        halves.push(&c[c.len() - half..]);
    }
    let m = halves.len() as f64;
    let n = half as f64;
    let means: Vec<f64> = halves.iter().map(|h| mean(h)).collect();
    let grand = mean(&means);
    let b = n / (m - 1.0) * means.iter().map(|x| (x - grand) * (x - grand)).sum::<f64>();
    let w = halves
        .iter()
        .map(|h| {
            let hm = mean(h);
            h.iter().map(|x| (x - hm) * (x - hm)).sum::<f64>() / (n - 1.0)
        })
        .sum::<f64>()
        / m;
    if w == 0.0 {
        return Ok(if b == 0.0 { 1.0 } else { f64::INFINITY });
    }
    let var_plus = (n - 1.0) / n * w + b / n;
    Ok((var_plus / w).sqrt())
}

/// Mean posterior deviance D̄, the model-comparison score (smaller is better).
pub fn mean_deviance(chain: &Chain) -> Result<f64> {
    if chain.deviance_draws.is_empty() {
        return Err(Error::Mcmc("chain has no deviance draws".into()));
    }
    Ok(mean(&chain.deviance_draws))
}

/// Per-parameter posterior summary: median, equal-tailed 95% credible
/// interval, effective sample size, and Geweke z.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamSummary {
    pub name: String,
    pub median: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub ess: f64,
    pub geweke_z: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosteriorSummary {
    pub params: Vec<ParamSummary>,
}

impl PosteriorSummary {
    pub fn param(&self, name: &str) -> Option<&ParamSummary> {
        self.params.iter().find(|p| p.name == name)
    }
}

/// Summarize every sampled parameter of a chain.
pub fn summarize(chain: &Chain) -> Result<PosteriorSummary> {
    if chain.is_empty() {
        return Err(Error::Mcmc("cannot summarize an empty chain".into()));
    }
    let mut params = Vec::with_capacity(chain.param_names.len());
    for (j, name) in chain.param_names.iter().enumerate() {
        let col: Vec<f64> = chain.draws.iter().map(|row| row[j]).collect();
        let mut sorted = col.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("draws are finite"));
        params.push(ParamSummary {
            name: name.clone(),
            median: quantile_sorted(&sorted, 0.5),
            ci_low: quantile_sorted(&sorted, 0.025),
            ci_high: quantile_sorted(&sorted, 0.975),
            ess: ess(&col),
            geweke_z: geweke_z(&col),
        });
    }
    Ok(PosteriorSummary { params })
}
