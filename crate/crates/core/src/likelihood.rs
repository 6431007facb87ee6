//! Observation models: how an observed h-index scatters around the model
//! mean, plus the deviance used for model comparison.
//!
//! Two error families are supported. The truncated Gaussian keeps a normal
//! kernel on `(0, ∞)` (h can never be negative) and renormalizes by
//! `Φ(μ/σ)`. The negative binomial treats h as an overdispersed count with
//! success probability `q = r/(r+μ)`, so its mean is exactly `μ`.

use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;
use statrs::function::gamma::ln_gamma;

use crate::dataio::Dataset;
use crate::error::{Error, Result};
use crate::models::{evaluate_mean, Covariates, ModelKind, ParamVector};

const LN_2PI: f64 = 1.8378770664093453;

/// Standard normal CDF via the complementary error function.
pub(crate) fn std_normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Which error family a fit uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ObsKind {
    Gaussian,
    NegBinomial,
}

impl ObsKind {
    pub fn code(self) -> &'static str {
        match self {
            ObsKind::Gaussian => "gaussian",
            ObsKind::NegBinomial => "nb",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "gaussian" => Some(ObsKind::Gaussian),
            "nb" => Some(ObsKind::NegBinomial),
            _ => None,
        }
    }

    /// Name of the sampled nuisance parameter: the Gaussian is parameterized
    /// by the precision `tau = 1/sigma^2`, the NB by its size `r`.
    pub fn param_name(self) -> &'static str {
        match self {
            ObsKind::Gaussian => "tau",
            ObsKind::NegBinomial => "r",
        }
    }
}

/// A concrete observation model with its nuisance parameter fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ObservationModel {
    TruncGaussian { sigma: f64 },
    NegBinomial { r: f64 },
}

impl ObservationModel {
    pub fn trunc_gaussian(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::Domain(format!("sigma must be > 0, got {sigma}")));
        }
        Ok(ObservationModel::TruncGaussian { sigma })
    }

    pub fn neg_binomial(r: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::Domain(format!("r must be > 0, got {r}")));
        }
        Ok(ObservationModel::NegBinomial { r })
    }

    /// Build from the sampled nuisance parameter: precision `tau` for the
    /// Gaussian family, size `r` for the negative binomial.
    pub fn from_nuisance(kind: ObsKind, value: f64) -> Result<Self> {
        match kind {
            ObsKind::Gaussian => {
                if !(value > 0.0) || !value.is_finite() {
                    return Err(Error::Domain(format!("tau must be > 0, got {value}")));
                }
                Self::trunc_gaussian(value.sqrt().recip())
            }
            ObsKind::NegBinomial => Self::neg_binomial(value),
        }
    }

    pub fn kind(&self) -> ObsKind {
        match self {
            ObservationModel::TruncGaussian { .. } => ObsKind::Gaussian,
            ObservationModel::NegBinomial { .. } => ObsKind::NegBinomial,
        }
    }

    /// Log density/mass of an observed h given the model mean `mu`.
    ///
    /// Returns `-inf` for an impossible observation (NB with `mu = 0` but
    /// `h > 0`) rather than an error, so samplers treat it as a rejected
    /// region instead of aborting.
    pub fn log_density(&self, h: u32, mu: f64) -> Result<f64> {
        match *self {
            ObservationModel::TruncGaussian { sigma } => {
                log_density_trunc_gaussian(f64::from(h), mu, sigma)
            }
            ObservationModel::NegBinomial { r } => log_pmf_neg_binomial(u64::from(h), mu, r),
        }
    }
}

/// Log density at `h` of a Gaussian(mu, sigma) truncated to `(0, ∞)`.
/// `h` is real-valued here so the density can be integrated in tests.
pub fn log_density_trunc_gaussian(h: f64, mu: f64, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!("sigma must be > 0, got {sigma}")));
    }
    check_mean(mu)?;
    if h < 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    let z = (h - mu) / sigma;
    Ok(-0.5 * z * z - 0.5 * LN_2PI - sigma.ln() - std_normal_cdf(mu / sigma).ln())
}

/// Log pmf at count `h` of a negative binomial with mean `mu` and size `r`,
/// i.e. `q = r/(r+mu)` and `P(h) = Γ(h+r)/(Γ(r) h!) · q^r (1−q)^h`.
///
/// A zero mean degenerates to a point mass at zero: log pmf is `0` at
/// `h = 0` and `-inf` otherwise.
pub fn log_pmf_neg_binomial(h: u64, mu: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    check_mean(mu)?;
    if mu == 0.0 {
        return Ok(if h == 0 { 0.0 } else { f64::NEG_INFINITY });
    }
    let hf = h as f64;
    // ln q and ln(1−q) written in subtraction form so tiny mu stays stable
    let ln_q = r.ln() - (r + mu).ln();
    let ln_1mq = mu.ln() - (r + mu).ln();
    Ok(ln_gamma(hf + r) - ln_gamma(r) - ln_gamma(hf + 1.0) + r * ln_q + hf * ln_1mq)
}

fn check_mean(mu: f64) -> Result<()> {
    if mu < 0.0 || !mu.is_finite() {
        return Err(Error::Domain(format!("mean must be finite and >= 0, got {mu}")));
    }
    Ok(())
}

/// Sum of log densities of every record in `data` under the given model
/// and observation family. `-inf` if any record is impossible.
pub fn log_likelihood(
    kind: ModelKind,
    params: &ParamVector,
    obs: &ObservationModel,
    data: &Dataset,
) -> Result<f64> {
    let mut total = 0.0;
    for rec in data.records() {
        let cov = Covariates::new(f64::from(rec.publications), f64::from(rec.citations))?;
        let mu = evaluate_mean(kind, params, &cov)?;
        let lp = obs.log_density(rec.h, mu)?;
        if lp == f64::NEG_INFINITY {
            return Ok(f64::NEG_INFINITY);
        }
        total += lp;
    }
    Ok(total)
}

/// The deviance `D = −2·log-likelihood` of a dataset. Models are compared
/// by the posterior mean of this quantity: smaller is better.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Deviance(pub f64);

impl Deviance {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }
}

impl std::fmt::Display for Deviance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deviance of `data` at a fixed parameter point. An empty dataset has
/// deviance 0; an impossible observation gives `+inf`.
pub fn deviance(
    kind: ModelKind,
    params: &ParamVector,
    obs: &ObservationModel,
    data: &Dataset,
) -> Result<Deviance> {
    let ll = log_likelihood(kind, params, obs, data)?;
    if ll == f64::NEG_INFINITY {
        return Ok(Deviance(f64::INFINITY));
    }
    Ok(Deviance(-2.0 * ll))
}
