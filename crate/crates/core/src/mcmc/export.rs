//! Chain and summary serialization: trace extraction, the chain CSV format
//! (`iter,<param...>,deviance`), and the JSON fit summary.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::diagnostics::{self, mean_deviance};
use super::sampler::{Chain, SamplerConfig};
use crate::error::{Error, Result};
use crate::likelihood::ObsKind;
use crate::models::{param_bounds, ModelKind};

/// Kept draws of one parameter (or of `"deviance"`) in sampling order,
/// tagged with their post-burn-in iteration numbers.
pub fn export_trace(chain: &Chain, parameter: &str) -> Result<Vec<(u64, f64)>> {
    let values = if parameter == "deviance" {
        chain.deviance_draws.clone()
    } else {
        chain.column(parameter)?
    };
    let thin = chain.config.thin as u64;
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(row, v)| (thin * (row as u64 + 1), v))
        .collect())
}

/// Write the kept draws as CSV: `iter,<param...>,deviance`, one row per
/// kept draw, floats in shortest round-trip form.
pub fn write_chain_csv(path: impl AsRef<Path>, chain: &Chain) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write!(out, "iter")?;
    for name in &chain.param_names {
        write!(out, ",{name}")?;
    }
    writeln!(out, ",deviance")?;
    let thin = chain.config.thin as u64;
    for (row, draw) in chain.draws.iter().enumerate() {
        write!(out, "{}", thin * (row as u64 + 1))?;
        for v in draw {
            write!(out, ",{v}")?;
        }
        writeln!(out, ",{}", chain.deviance_draws[row])?;
    }
    out.flush()?;
    Ok(())
}

/// Infer `(kind, obs_kind)` from a full set of sampled column names:
/// the structural columns name the model, the trailing nuisance column
/// (`tau` or `r`) names the likelihood.
fn infer_kinds(params: &[&str]) -> Result<(ModelKind, ObsKind)> {
    let (nuisance, structural) = params
        .split_last()
        .ok_or_else(|| Error::Mcmc("chain CSV has no parameter columns".into()))?;
    let obs_kind = match *nuisance {
        "tau" => ObsKind::Gaussian,
        "r" => ObsKind::NegBinomial,
        other => {
            return Err(Error::Mcmc(format!(
                "last parameter column must be the nuisance (tau or r), got {other:?}"
            )))
        }
    };
    let kind = match (structural, obs_kind) {
        (["alpha"], _) => ModelKind::EggheRousseau,
        (["alpha", "c"], _) => ModelKind::GlanzelSchubert,
        (["alpha", "a", "b"], ObsKind::Gaussian) => ModelKind::HirschGaussian,
        (["alpha", "a", "b"], ObsKind::NegBinomial) => ModelKind::HirschNb,
        _ => {
            return Err(Error::Mcmc(format!(
                "cannot infer a model from columns {params:?}"
            )))
        }
    };
    debug_assert_eq!(
        param_bounds(kind).iter().map(|(n, _)| *n).collect::<Vec<_>>(),
        structural.to_vec()
    );
    Ok((kind, obs_kind))
}

/// Rebuild a [`Chain`] from its CSV export.
///
/// The model and likelihood are inferred from the column names, so only
/// full fits (no pinned parameters) round-trip; thinning is inferred from
/// the iteration column. Acceptance rates, proposal scales, seed, and
/// burn-in are not part of the CSV and come back empty/zero.
pub fn read_chain_csv(path: impl AsRef<Path>) -> Result<Chain> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = reader.lines();
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::Mcmc("chain CSV is empty".into()))?;
    let cols: Vec<&str> = header.trim_end().split(',').collect();
    if cols.len() < 3 || cols[0] != "iter" || cols[cols.len() - 1] != "deviance" {
        return Err(Error::Mcmc(format!(
            "chain CSV header must be `iter,<param...>,deviance`, got {header:?}"
        )));
    }
    let params: Vec<&str> = cols[1..cols.len() - 1].to_vec();
    let (kind, obs_kind) = infer_kinds(&params)?;
    let param_names: Vec<String> = params.iter().map(|s| s.to_string()).collect();

    let mut thin: Option<u64> = None;
    let mut draws = Vec::new();
    let mut deviance_draws = Vec::new();
    let mut row = 0usize;
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim_end().split(',').collect();
        if fields.len() != cols.len() {
            return Err(Error::Mcmc(format!(
                "chain CSV row {} has {} fields, expected {}",
                row + 1,
                fields.len(),
                cols.len()
            )));
        }
        let iter: u64 = fields[0]
            .parse()
            .map_err(|_| Error::Mcmc(format!("bad iteration index at row {}", row + 1)))?;
        let t = *thin.get_or_insert(iter);
        if t == 0 || iter != t * (row as u64 + 1) {
            return Err(Error::Mcmc(format!(
                "iteration column is not an even thinning progression at row {}",
                row + 1
            )));
        }
        let mut values = Vec::with_capacity(params.len());
        for (name, field) in params.iter().zip(&fields[1..]) {
            let v: f64 = field.parse().map_err(|_| {
                Error::Mcmc(format!("bad value for {name} at row {}", row + 1))
            })?;
            values.push(v);
        }
        let dev: f64 = fields[cols.len() - 1]
            .parse()
            .map_err(|_| Error::Mcmc(format!("bad deviance at row {}", row + 1)))?;
        draws.push(values);
        deviance_draws.push(dev);
        row += 1;
    }
    if draws.is_empty() {
        return Err(Error::Mcmc("chain CSV has no draws".into()));
    }
    let thin = thin.unwrap() as usize;
    Ok(Chain {
        kind,
        obs_kind,
        param_names,
        fixed: BTreeMap::new(),
        deviance_draws,
        accept_rates: Vec::new(),
        proposal_scales: Vec::new(),
        config: SamplerConfig {
            iterations: thin * draws.len(),
            burn_in: 0,
            seed: 0,
            thin,
            ..SamplerConfig::default()
        },
        draws,
    })
}

/// Posterior statistics for one parameter, as exported in the JSON summary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamStats {
    pub median: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub ess: f64,
    pub geweke_z: f64,
}

/// JSON-facing fit summary: model/likelihood codes, per-parameter posterior
/// statistics, mean posterior deviance, and the sampler configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitSummary {
    pub model: String,
    pub likelihood: String,
    pub params: BTreeMap<String, ParamStats>,
    pub mean_deviance: f64,
    pub config: SamplerConfig,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub data_sha256: Option<String>,
    /// Split-R̂ per parameter, present only for multi-chain fits.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhat: Option<BTreeMap<String, f64>>,
}

impl FitSummary {
    pub fn from_chain(chain: &Chain) -> Result<Self> {
        let summary = diagnostics::summarize(chain)?;
        let params = summary
            .params
            .into_iter()
            .map(|p| {
                (
                    p.name,
                    ParamStats {
                        median: p.median,
                        ci_low: p.ci_low,
                        ci_high: p.ci_high,
                        ess: p.ess,
                        geweke_z: p.geweke_z,
                    },
                )
            })
            .collect();
        Ok(Self {
            model: chain.kind.code().to_string(),
            likelihood: chain.obs_kind.code().to_string(),
            params,
            mean_deviance: mean_deviance(chain)?,
            config: chain.config,
            data_sha256: None,
            rhat: None,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| Error::Mcmc(format!("summary serialization failed: {e}")))
    }
}
