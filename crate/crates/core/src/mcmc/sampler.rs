//! Priors, the adaptive Metropolis-within-Gibbs sampler, and the chains
//! it produces.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::dataio::Dataset;
use crate::error::{Error, Result};
use crate::likelihood::{self, std_normal_cdf, ObsKind, ObservationModel};
use crate::models::{param_bounds, ModelKind, ParamVector};

const LN_2PI: f64 = 1.8378770664093453;

/// A prior over one scalar parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PriorSpec {
    /// Normal(mean, variance) truncated below at `lower` (open bound).
    TruncNormal { mean: f64, variance: f64, lower: f64 },
    /// Gamma with the (shape, rate) convention, supported on x > 0.
    Gamma { shape: f64, rate: f64 },
}

impl PriorSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PriorSpec::TruncNormal { mean, variance, lower } => {
                if !(variance > 0.0) || !mean.is_finite() || !lower.is_finite() {
                    return Err(Error::Domain(format!(
                        "TruncNormal needs finite mean/lower and variance > 0, \
                         got mean={mean}, variance={variance}, lower={lower}"
                    )));
                }
            }
            PriorSpec::Gamma { shape, rate } => {
                if !(shape > 0.0) || !(rate > 0.0) {
                    return Err(Error::Domain(format!(
                        "Gamma needs shape > 0 and rate > 0, got shape={shape}, rate={rate}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Lower edge of the support (open: density is zero at the bound).
    pub fn lower(&self) -> f64 {
        match *self {
            PriorSpec::TruncNormal { lower, .. } => lower,
            PriorSpec::Gamma { .. } => 0.0,
        }
    }

    /// Normalized log density; `-inf` at or below the support bound.
    pub fn log_density(&self, x: f64) -> f64 {
        if x <= self.lower() || !x.is_finite() {
            return f64::NEG_INFINITY;
        }
        match *self {
            PriorSpec::TruncNormal { mean, variance, lower } => {
                let sd = variance.sqrt();
                let z = (x - mean) / sd;
                -0.5 * z * z - 0.5 * LN_2PI - sd.ln()
                    - (1.0 - std_normal_cdf((lower - mean) / sd)).ln()
            }
            PriorSpec::Gamma { shape, rate } => {
                shape * rate.ln() - statrs::function::gamma::ln_gamma(shape)
                    + (shape - 1.0) * x.ln()
                    - rate * x
            }
        }
    }
}

/// Chain length, burn-in, seed, adaptation target and thinning.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplerConfig {
    /// Post-burn-in iterations.
    pub iterations: usize,
    pub burn_in: usize,
    pub seed: u64,
    pub target_acceptance: f64,
    /// Keep every `thin`-th post-burn-in draw.
    pub thin: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self { iterations: 50_000, burn_in: 5_000, seed: 0, target_acceptance: 0.44, thin: 1 }
    }
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.iterations < 1000 {
            return Err(Error::Mcmc(format!(
                "iterations must be >= 1000, got {}",
                self.iterations
            )));
        }
        if self.thin == 0 {
            return Err(Error::Mcmc("thin must be >= 1".into()));
        }
        if self.iterations / self.thin == 0 {
            return Err(Error::Mcmc(format!(
                "thin = {} leaves no draws from {} iterations",
                self.thin, self.iterations
            )));
        }
        if !(self.target_acceptance > 0.0 && self.target_acceptance < 1.0) {
            return Err(Error::Mcmc(format!(
                "target_acceptance must lie in (0, 1), got {}",
                self.target_acceptance
            )));
        }
        Ok(())
    }

    /// Number of draws a run with this config keeps.
    pub fn kept_draws(&self) -> usize {
        self.iterations / self.thin
    }
}

/// Sampled parameters in order: the structural parameters of the mean
/// function, then the observation-model nuisance (`tau` or `r`).
pub(crate) fn param_layout(kind: ModelKind, obs_kind: ObsKind) -> Vec<(String, f64)> {
    let mut layout: Vec<(String, f64)> =
        param_bounds(kind).into_iter().map(|(name, lower)| (name.to_string(), lower)).collect();
    layout.push((obs_kind.param_name().to_string(), 0.0));
    layout
}

/// The reference priors: vague truncated normals on the mean-function
/// parameters and Gamma(0.001, 0.001) on the nuisance.
pub fn default_priors(kind: ModelKind, obs_kind: ObsKind) -> BTreeMap<String, PriorSpec> {
    let mut priors = BTreeMap::new();
    for (name, lower) in param_bounds(kind) {
        let prior = match name {
            "alpha" => PriorSpec::TruncNormal { mean: 1.0, variance: 100.0, lower },
            "c" => PriorSpec::TruncNormal { mean: 0.0, variance: 100.0, lower: 0.0 },
            "a" | "b" => PriorSpec::TruncNormal { mean: 1.0, variance: 100.0, lower: 0.0 },
            other => unreachable!("unknown structural parameter {other}"),
        };
        priors.insert(name.to_string(), prior);
    }
    priors.insert(
        obs_kind.param_name().to_string(),
        PriorSpec::Gamma { shape: 0.001, rate: 0.001 },
    );
    priors
}

/// Default initial values: one unit above each structural lower bound,
/// and 1 for the nuisance parameter.
pub fn default_inits(kind: ModelKind, obs_kind: ObsKind) -> BTreeMap<String, f64> {
    let mut inits = BTreeMap::new();
    for (name, lower) in param_bounds(kind) {
        inits.insert(name.to_string(), lower + 1.0);
    }
    inits.insert(obs_kind.param_name().to_string(), 1.0);
    inits
}

/// Evaluates log-prior, log-likelihood and deviance at full parameter
/// vectors laid out per [`param_layout`].
pub(crate) struct Evaluator<'a> {
    kind: ModelKind,
    obs_kind: ObsKind,
    data: &'a Dataset,
    pub(crate) names: Vec<String>,
    pub(crate) lowers: Vec<f64>,
    priors: Vec<Option<PriorSpec>>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(
        kind: ModelKind,
        obs_kind: ObsKind,
        data: &'a Dataset,
        priors: &BTreeMap<String, PriorSpec>,
    ) -> Result<Self> {
        let layout = param_layout(kind, obs_kind);
        for (name, prior) in priors {
            if !layout.iter().any(|(n, _)| n == name) {
                return Err(Error::Mcmc(format!(
                    "prior given for unknown parameter {name:?}; this model has {:?}",
                    layout.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>()
                )));
            }
            prior.validate()?;
            if prior.lower() < layout.iter().find(|(n, _)| n == name).unwrap().1 {
                return Err(Error::Mcmc(format!(
                    "prior for {name:?} extends below the parameter's bound"
                )));
            }
        }
        let (names, lowers): (Vec<String>, Vec<f64>) = layout.into_iter().unzip();
        let priors = names.iter().map(|n| priors.get(n).copied()).collect();
        Ok(Self { kind, obs_kind, data, names, lowers, priors })
    }

    pub(crate) fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| {
            Error::Mcmc(format!("unknown parameter {name:?}; this model has {:?}", self.names))
        })
    }

    fn in_bounds(&self, x: &[f64]) -> bool {
        x.iter().zip(&self.lowers).all(|(v, lo)| v.is_finite() && *v > *lo)
    }

    /// (log-posterior, log-likelihood); both `-inf` out of support.
    pub(crate) fn evaluate(&self, x: &[f64]) -> (f64, f64) {
        debug_assert_eq!(x.len(), self.names.len());
        if !self.in_bounds(x) {
            return (f64::NEG_INFINITY, f64::NEG_INFINITY);
        }
        let mut lp = 0.0;
        for (value, prior) in x.iter().zip(&self.priors) {
            if let Some(p) = prior {
                lp += p.log_density(*value);
            }
        }
        if lp == f64::NEG_INFINITY {
            return (f64::NEG_INFINITY, f64::NEG_INFINITY);
        }
        let n_structural = x.len() - 1;
        let ll = (|| -> Result<f64> {
            let params = ParamVector::from_slice(self.kind, &x[..n_structural])?;
            let obs = ObservationModel::from_nuisance(self.obs_kind, x[n_structural])?;
            likelihood::log_likelihood(self.kind, &params, &obs, self.data)
        })()
        // an overflowing mean (extreme proposals) has zero likelihood, so
        // failures reject the move rather than abort the chain
        .unwrap_or(f64::NEG_INFINITY);
        (lp + ll, ll)
    }
}

/// Unnormalized log-posterior at a named parameter point: sum of prior
/// log-densities plus the data log-likelihood, `-inf` out of support.
///
/// `values` must cover exactly the parameters of `(kind, obs_kind)`;
/// `priors` may cover any subset of them.
pub fn log_posterior(
    kind: ModelKind,
    obs_kind: ObsKind,
    values: &BTreeMap<String, f64>,
    priors: &BTreeMap<String, PriorSpec>,
    data: &Dataset,
) -> Result<f64> {
    let eval = Evaluator::new(kind, obs_kind, data, priors)?;
    if values.len() != eval.names.len() {
        return Err(Error::Mcmc(format!(
            "expected values for {:?}, got {:?}",
            eval.names,
            values.keys().collect::<Vec<_>>()
        )));
    }
    let mut x = vec![0.0; eval.names.len()];
    for (name, value) in values {
        x[eval.index_of(name)?] = *value;
    }
    Ok(eval.evaluate(&x).0)
}

const INITIAL_SCALE: f64 = 0.5;
const LN_SCALE_CLAMP: f64 = 12.0;

/// The adaptive component-wise random-walk Metropolis sampler.
///
/// Each free component moves on `y = ln(x − lower)`; the acceptance
/// ratio carries the Jacobian of that transform. During burn-in the
/// per-component proposal scale follows a Robbins-Monro recursion toward
/// the target acceptance rate and is frozen afterwards — the freeze is
/// observable through [`Sampler::proposal_scales`].
pub struct Sampler<'a> {
    eval: Evaluator<'a>,
    config: SamplerConfig,
    rng: ChaCha8Rng,
    x: Vec<f64>,
    free: Vec<usize>,
    ln_scales: Vec<f64>,
    lp: f64,
    ll: f64,
    sweeps_done: usize,
    accepted_post: Vec<u64>,
    post_sweeps: u64,
}

impl<'a> Sampler<'a> {
    pub fn new(
        config: &SamplerConfig,
        kind: ModelKind,
        obs_kind: ObsKind,
        data: &'a Dataset,
        priors: &BTreeMap<String, PriorSpec>,
        inits: &BTreeMap<String, f64>,
        fixed: &BTreeMap<String, f64>,
    ) -> Result<Self> {
        config.validate()?;
        if data.is_empty() {
            return Err(Error::Data("cannot fit an empty dataset".into()));
        }
        let eval = Evaluator::new(kind, obs_kind, data, priors)?;

        let mut x = vec![f64::NAN; eval.names.len()];
        let mut is_fixed = vec![false; eval.names.len()];
        for (name, value) in fixed {
            let i = eval.index_of(name)?;
            if !(value.is_finite() && *value > eval.lowers[i]) {
                return Err(Error::Mcmc(format!(
                    "fixed value {name} = {value} is outside the parameter's support"
                )));
            }
            x[i] = *value;
            is_fixed[i] = true;
        }
        for name in inits.keys() {
            eval.index_of(name)?; // reject unknown names early
        }
        let mut free = Vec::new();
        for i in 0..eval.names.len() {
            if is_fixed[i] {
                continue;
            }
            let name = &eval.names[i];
            let value = *inits.get(name).ok_or_else(|| {
                Error::Mcmc(format!("no initial value for free parameter {name:?}"))
            })?;
            if !(value.is_finite() && value > eval.lowers[i]) {
                return Err(Error::Mcmc(format!(
                    "initial value {name} = {value} is outside the parameter's support \
                     (must exceed {})",
                    eval.lowers[i]
                )));
            }
            if eval.priors[i].is_none() {
                return Err(Error::Mcmc(format!("no prior for free parameter {name:?}")));
            }
            x[i] = value;
            free.push(i);
        }
        if free.is_empty() {
            return Err(Error::Mcmc("every parameter is fixed; nothing to sample".into()));
        }

        let (lp, ll) = eval.evaluate(&x);
        if lp == f64::NEG_INFINITY {
            return Err(Error::Mcmc(
                "initial values have zero posterior density; \
                 check inits against the data and priors"
                    .into(),
            ));
        }
        Ok(Self {
            eval,
            config: *config,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            x,
            ln_scales: vec![INITIAL_SCALE.ln(); free.len()],
            accepted_post: vec![0; free.len()],
            free,
            lp,
            ll,
            sweeps_done: 0,
            post_sweeps: 0,
        })
    }

    /// Still inside the adaptive burn-in phase?
    pub fn adapting(&self) -> bool {
        self.sweeps_done < self.config.burn_in
    }

    /// Current per-free-parameter proposal scales (sampling order).
    pub fn proposal_scales(&self) -> Vec<f64> {
        self.ln_scales.iter().map(|s| s.exp()).collect()
    }

    /// Names of the sampled (non-fixed) parameters, in sampling order.
    pub fn free_names(&self) -> Vec<String> {
        self.free.iter().map(|&i| self.eval.names[i].clone()).collect()
    }

    /// Current values of the free parameters, in sampling order.
    pub fn position(&self) -> Vec<f64> {
        self.free.iter().map(|&i| self.x[i]).collect()
    }

    /// Current log-likelihood (deviance is `-2` times this).
    pub fn log_likelihood(&self) -> f64 {
        self.ll
    }

    /// Post-burn-in acceptance rate per free parameter.
    pub fn acceptance_rates(&self) -> Vec<f64> {
        if self.post_sweeps == 0 {
            return vec![0.0; self.free.len()];
        }
        self.accepted_post.iter().map(|&a| a as f64 / self.post_sweeps as f64).collect()
    }

    /// One full sweep: a Metropolis update of each free component in turn.
    pub fn sweep(&mut self) {
        let adapting = self.adapting();
        // Robbins-Monro gain for this sweep; decays slowly enough to keep
        // moving early and settles well before the freeze
        let gain = ((self.sweeps_done + 1) as f64).powf(-0.6);
        if !adapting {
            self.post_sweeps += 1;
        }
        for j in 0..self.free.len() {
            let i = self.free[j];
            let current = self.x[i];
            let lower = self.eval.lowers[i];
            let y = (current - lower).ln();
            let step: f64 = self.rng.sample(StandardNormal);
            let y_new = y + self.ln_scales[j].exp() * step;
            let proposed = lower + y_new.exp();

            self.x[i] = proposed;
            let (lp_new, ll_new) = self.eval.evaluate(&self.x);
            // the +y terms are the log-Jacobian of x = lower + e^y
            let delta = (lp_new + y_new) - (self.lp + y);
            // NaN never accepts (f64::min would otherwise let it through)
            let accept_prob = if delta.is_nan() { 0.0 } else { delta.exp().min(1.0) };
            let u: f64 = self.rng.random();
            if u < accept_prob {
                self.lp = lp_new;
                self.ll = ll_new;
                if !adapting {
                    self.accepted_post[j] += 1;
                }
            } else {
                self.x[i] = current;
            }
            if adapting {
                let nudged =
                    self.ln_scales[j] + gain * (accept_prob - self.config.target_acceptance);
                self.ln_scales[j] = nudged.clamp(-LN_SCALE_CLAMP, LN_SCALE_CLAMP);
            }
        }
        self.sweeps_done += 1;
    }
}

/// One sampled chain: kept draws of the free parameters plus the
/// deviance at each kept draw.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Chain {
    pub kind: ModelKind,
    pub obs_kind: ObsKind,
    /// Free (sampled) parameters, in sampling order — the draw columns.
    pub param_names: Vec<String>,
    /// Parameters pinned during sampling, if any.
    pub fixed: BTreeMap<String, f64>,
    pub draws: Vec<Vec<f64>>,
    pub deviance_draws: Vec<f64>,
    /// Post-burn-in acceptance rate per free parameter.
    pub accept_rates: Vec<f64>,
    /// Proposal scales at the adaptation freeze.
    pub proposal_scales: Vec<f64>,
    pub config: SamplerConfig,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.draws.len()
    }

    pub fn is_empty(&self) -> bool {
        self.draws.is_empty()
    }

    /// All kept draws of one named parameter.
    pub fn column(&self, name: &str) -> Result<Vec<f64>> {
        let j = self
            .param_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Mcmc(format!("chain has no parameter {name:?}")))?;
        Ok(self.draws.iter().map(|row| row[j]).collect())
    }

    /// Kept draws as mean-function parameter vectors (fixed values filled
    /// in), ready for sensitivity propagation.
    pub fn param_draws(&self) -> Result<Vec<ParamVector>> {
        let structural = param_bounds(self.kind);
        enum Source {
            Column(usize),
            Fixed(f64),
        }
        let mut sources = Vec::with_capacity(structural.len());
        for (name, _) in &structural {
            if let Some(j) = self.param_names.iter().position(|n| n == name) {
                sources.push(Source::Column(j));
            } else if let Some(v) = self.fixed.get(*name) {
                sources.push(Source::Fixed(*v));
            } else {
                return Err(Error::Mcmc(format!(
                    "parameter {name:?} is neither sampled nor fixed in this chain"
                )));
            }
        }
        self.draws
            .iter()
            .map(|row| {
                let values: Vec<f64> = sources
                    .iter()
                    .map(|s| match s {
                        Source::Column(j) => row[*j],
                        Source::Fixed(v) => *v,
                    })
                    .collect();
                ParamVector::from_slice(self.kind, &values)
            })
            .collect()
    }
}

/// Run one chain: `burn_in` adaptive sweeps, then `iterations` sweeps
/// keeping every `thin`-th draw. Fully deterministic given the config.
pub fn run_chain(
    config: &SamplerConfig,
    kind: ModelKind,
    obs_kind: ObsKind,
    data: &Dataset,
    priors: &BTreeMap<String, PriorSpec>,
    inits: &BTreeMap<String, f64>,
) -> Result<Chain> {
    run_chain_fixed(config, kind, obs_kind, data, priors, inits, &BTreeMap::new())
}

/// [`run_chain`] with some parameters pinned at fixed values (used for
/// conditional fits and oracle cross-checks).
pub fn run_chain_fixed(
    config: &SamplerConfig,
    kind: ModelKind,
    obs_kind: ObsKind,
    data: &Dataset,
    priors: &BTreeMap<String, PriorSpec>,
    inits: &BTreeMap<String, f64>,
    fixed: &BTreeMap<String, f64>,
) -> Result<Chain> {
    let mut sampler = Sampler::new(config, kind, obs_kind, data, priors, inits, fixed)?;
    for _ in 0..config.burn_in {
        sampler.sweep();
    }
    let scales = sampler.proposal_scales();
    let kept = config.kept_draws();
    let mut draws = Vec::with_capacity(kept);
    let mut deviance_draws = Vec::with_capacity(kept);
    for i in 0..config.iterations {
        sampler.sweep();
        if (i + 1) % config.thin == 0 {
            draws.push(sampler.position());
            deviance_draws.push(-2.0 * sampler.log_likelihood());
        }
    }
    debug_assert_eq!(draws.len(), kept);
    Ok(Chain {
        kind,
        obs_kind,
        param_names: sampler.free_names(),
        fixed: fixed.clone(),
        draws,
        deviance_draws,
        accept_rates: sampler.acceptance_rates(),
        proposal_scales: scales,
        config: *config,
    })
}
