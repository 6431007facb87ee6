//! The four theoretical h-index mean functions and their parameter ranges.
//!
//! Each model maps a journal's publication count `P` and citation count
//! `C` to an expected h-index:
//!
//! * Egghe-Rousseau: `h = (C / (α−1))^(1/α)` with `α > 2` (the citation-
//!   driven modification of the Lotkaian `h = P^(1/α)` family),
//! * Glänzel-Schubert: `h = c · P^(1/(α+1)) · (C/P)^(α/(α+1))` with
//!   `α > 1`, `c > 0`,
//! * three-parameter Hirsch: `h = (C/α)^(1/(a·b))` with `α, a, b > 0`,
//!   fitted twice — once paired with Gaussian noise, once with
//!   negative-binomial noise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::likelihood::ObsKind;

/// The four fitted models. The two Hirsch entries share the same mean
/// function and differ only in which observation model they pair with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    EggheRousseau,
    GlanzelSchubert,
    HirschGaussian,
    HirschNb,
}

impl ModelKind {
    pub const ALL: [ModelKind; 4] = [
        ModelKind::EggheRousseau,
        ModelKind::GlanzelSchubert,
        ModelKind::HirschGaussian,
        ModelKind::HirschNb,
    ];

    /// Short code used in CLI flags and file headers.
    pub fn code(self) -> &'static str {
        match self {
            ModelKind::EggheRousseau => "er",
            ModelKind::GlanzelSchubert => "gs",
            ModelKind::HirschGaussian | ModelKind::HirschNb => "h",
        }
    }

    /// Human-readable label.
    pub fn label(self) -> &'static str {
        match self {
            ModelKind::EggheRousseau => "Egghe-Rousseau",
            ModelKind::GlanzelSchubert => "Glanzel-Schubert",
            ModelKind::HirschGaussian => "Hirsch (Gaussian)",
            ModelKind::HirschNb => "Hirsch (NB)",
        }
    }

    /// The observation model this entry is conventionally paired with.
    pub fn paired_likelihood(self) -> ObsKind {
        match self {
            ModelKind::EggheRousseau => ObsKind::NegBinomial,
            ModelKind::GlanzelSchubert => ObsKind::Gaussian,
            ModelKind::HirschGaussian => ObsKind::Gaussian,
            ModelKind::HirschNb => ObsKind::NegBinomial,
        }
    }

    /// Whether the mean function actually depends on the publication count.
    /// Only Glänzel-Schubert uses P; the others are citation-only.
    pub fn uses_publications(self) -> bool {
        matches!(self, ModelKind::GlanzelSchubert)
    }
}

/// Parameter values for one model. Parameters not used by the model kind
/// are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamVector {
    pub alpha: f64,
    pub c: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
}

impl ParamVector {
    pub fn egghe_rousseau(alpha: f64) -> Self {
        Self { alpha, c: None, a: None, b: None }
    }

    pub fn glanzel_schubert(alpha: f64, c: f64) -> Self {
        Self { alpha, c: Some(c), a: None, b: None }
    }

    pub fn hirsch(alpha: f64, a: f64, b: f64) -> Self {
        Self { alpha, c: None, a: Some(a), b: Some(b) }
    }

    /// Build from values listed in `param_bounds(kind)` order.
    pub fn from_slice(kind: ModelKind, values: &[f64]) -> Result<Self> {
        let expected = param_bounds(kind).len();
        if values.len() != expected {
            return Err(Error::Domain(format!(
                "{} expects {} parameters, got {}",
                kind.label(),
                expected,
                values.len()
            )));
        }
        Ok(match kind {
            ModelKind::EggheRousseau => Self::egghe_rousseau(values[0]),
            ModelKind::GlanzelSchubert => Self::glanzel_schubert(values[0], values[1]),
            ModelKind::HirschGaussian | ModelKind::HirschNb => {
                Self::hirsch(values[0], values[1], values[2])
            }
        })
    }

    /// Check the range invariants for `kind`. Unused parameters must be absent.
    pub fn validate(&self, kind: ModelKind) -> Result<()> {
        let fail = |msg: String| Err(Error::Domain(msg));
        match kind {
            ModelKind::EggheRousseau => {
                if self.alpha <= 2.0 {
                    return fail(format!("Egghe-Rousseau requires alpha > 2, got {}", self.alpha));
                }
                if self.c.is_some() || self.a.is_some() || self.b.is_some() {
                    return fail("Egghe-Rousseau uses only alpha".into());
                }
            }
            ModelKind::GlanzelSchubert => {
                if self.alpha <= 1.0 {
                    return fail(format!(
                        "Glanzel-Schubert requires alpha > 1, got {}",
                        self.alpha
                    ));
                }
                match self.c {
                    Some(c) if c > 0.0 => {}
                    Some(c) => return fail(format!("Glanzel-Schubert requires c > 0, got {c}")),
                    None => return fail("Glanzel-Schubert requires c".into()),
                }
                if self.a.is_some() || self.b.is_some() {
                    return fail("Glanzel-Schubert uses only alpha and c".into());
                }
            }
            ModelKind::HirschGaussian | ModelKind::HirschNb => {
                if self.alpha <= 0.0 {
                    return fail(format!("Hirsch requires alpha > 0, got {}", self.alpha));
                }
                match (self.a, self.b) {
                    (Some(a), Some(b)) if a > 0.0 && b > 0.0 => {}
                    (Some(a), Some(b)) => {
                        return fail(format!("Hirsch requires a > 0 and b > 0, got a={a}, b={b}"))
                    }
                    _ => return fail("Hirsch requires a and b".into()),
                }
                if self.c.is_some() {
                    return fail("Hirsch does not use c".into());
                }
            }
        }
        Ok(())
    }
}

/// A journal's covariates. Real-valued so percentile-interpolated grid
/// values are valid inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Covariates {
    pub publications: f64,
    pub citations: f64,
}

impl Covariates {
    pub fn new(publications: f64, citations: f64) -> Result<Self> {
        if !(publications > 0.0) || !publications.is_finite() {
            return Err(Error::Domain(format!("P must be > 0, got {publications}")));
        }
        if !(citations >= 0.0) || !citations.is_finite() {
            return Err(Error::Domain(format!("C must be >= 0, got {citations}")));
        }
        Ok(Self { publications, citations })
    }
}

/// Lower truncation bounds of each parameter, in canonical order.
/// These are open bounds: valid values lie strictly above them.
pub fn param_bounds(kind: ModelKind) -> Vec<(&'static str, f64)> {
    match kind {
        ModelKind::EggheRousseau => vec![("alpha", 2.0)],
        ModelKind::GlanzelSchubert => vec![("alpha", 1.0), ("c", 0.0)],
        ModelKind::HirschGaussian | ModelKind::HirschNb => {
            vec![("alpha", 0.0), ("a", 0.0), ("b", 0.0)]
        }
    }
}

/// Expected h-index under `kind` at the given covariates.
///
/// Zero citations give a zero mean for every model (the bases are zero
/// with positive exponents) rather than an error, so datasets holding
/// uncited journals evaluate cleanly.
pub fn evaluate_mean(kind: ModelKind, params: &ParamVector, cov: &Covariates) -> Result<f64> {
    params.validate(kind)?;
    if !(cov.publications > 0.0) {
        return Err(Error::Domain(format!("P must be > 0, got {}", cov.publications)));
    }
    if !(cov.citations >= 0.0) {
        return Err(Error::Domain(format!("C must be >= 0, got {}", cov.citations)));
    }
    if cov.citations == 0.0 {
        return Ok(0.0);
    }
    let mu = match kind {
        ModelKind::EggheRousseau => {
            // ((α−2)/(α−1) · A)^(1/α) with A = C/(α−2); the (α−2) factors cancel.
            let alpha = params.alpha;
            (cov.citations / (alpha - 1.0)).powf(1.0 / alpha)
        }
        ModelKind::GlanzelSchubert => {
            let alpha = params.alpha;
            let c = params.c.expect("validated");
            let inv = 1.0 / (alpha + 1.0);
            c * cov.publications.powf(inv)
                * (cov.citations / cov.publications).powf(alpha * inv)
        }
        ModelKind::HirschGaussian | ModelKind::HirschNb => {
            let (a, b) = (params.a.expect("validated"), params.b.expect("validated"));
            (cov.citations / params.alpha).powf(1.0 / (a * b))
        }
    };
    Ok(mu)
}
