//! Bayesian modeling of the journal h-index.
//!
//! The crate fits four theoretical mean functions relating a journal's
//! h-index to its publication count `P` and citation count `C`
//! (Egghe-Rousseau, Glänzel-Schubert and a three-parameter Hirsch model
//! under Gaussian or negative-binomial observation noise), samples their
//! posteriors with an adaptive component-wise random-walk Metropolis
//! scheme, ranks the fits by mean posterior deviance, and propagates the
//! posterior through covariate grids to quantify how strongly the
//! h-index reacts to changes in `P` and `C`.

pub mod dataio;
pub mod error;
pub mod likelihood;
pub mod mcmc;
pub mod models;
pub mod sensitivity;

mod quantile;

pub use error::{Error, Result};
pub use likelihood::{deviance, Deviance, ObsKind, ObservationModel};
pub use models::{evaluate_mean, param_bounds, Covariates, ModelKind, ParamVector};
