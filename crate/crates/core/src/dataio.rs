//! Journal records, CSV loading/saving, dataset summaries and synthetic
//! data generation.
//!
//! The on-disk schema is a four-column CSV: `journal,h,P,C`. Counts may be
//! written with a decimal point (aggregated sources sometimes report e.g.
//! a median citation count); fractional values are rounded on load with a
//! warning rather than rejected.

use std::io::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, Poisson, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::likelihood::ObservationModel;
use crate::models::{evaluate_mean, Covariates, ModelKind, ParamVector};
use crate::quantile::quantile_sorted;

/// One journal: its h-index and the two covariates (publication and
/// citation counts over the study window).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JournalRecord {
    pub name: String,
    pub h: u32,
    pub publications: u32,
    pub citations: u32,
}

impl JournalRecord {
    /// The h-index cannot exceed the number of publications.
    fn check(&self) -> Result<()> {
        if self.publications == 0 {
            return Err(Error::Data(format!("journal {:?}: P must be >= 1", self.name)));
        }
        if self.h > self.publications {
            return Err(Error::Data(format!(
                "journal {:?}: h = {} exceeds P = {}",
                self.name, self.h, self.publications
            )));
        }
        Ok(())
    }

    /// An h of `h` needs at least `h²` citations; short of that the record
    /// is suspect but not impossible to process.
    fn soft_warning(&self) -> Option<String> {
        let needed = u64::from(self.h) * u64::from(self.h);
        if u64::from(self.citations) < needed {
            Some(format!(
                "journal {:?}: C = {} is below h^2 = {}",
                self.name, self.citations, needed
            ))
        } else {
            None
        }
    }
}

/// An ordered collection of journal records with the hard invariants
/// (`P >= 1`, `h <= P`, unique names) already checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dataset {
    records: Vec<JournalRecord>,
    /// Which field the journals belong to (e.g. "ecology"), when known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub field_label: Option<String>,
}

impl Dataset {
    pub fn new(records: Vec<JournalRecord>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for rec in &records {
            rec.check()?;
            if !seen.insert(rec.name.as_str()) {
                return Err(Error::Data(format!("duplicate journal name {:?}", rec.name)));
            }
        }
        Ok(Self { records, field_label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.field_label = Some(label.into());
        self
    }

    pub fn records(&self) -> &[JournalRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Warnings for records that are suspicious but not invalid.
    pub fn soft_warnings(&self) -> Vec<String> {
        self.records.iter().filter_map(JournalRecord::soft_warning).collect()
    }

    pub fn h_values(&self) -> Vec<f64> {
        self.records.iter().map(|r| f64::from(r.h)).collect()
    }

    pub fn publication_values(&self) -> Vec<f64> {
        self.records.iter().map(|r| f64::from(r.publications)).collect()
    }

    pub fn citation_values(&self) -> Vec<f64> {
        self.records.iter().map(|r| f64::from(r.citations)).collect()
    }
}

/// A loaded dataset together with any parse or plausibility warnings,
/// in file order.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub dataset: Dataset,
    pub warnings: Vec<String>,
}

const HEADER: [&str; 4] = ["journal", "h", "P", "C"];

/// Read a `journal,h,P,C` CSV. Structural problems (wrong header, bad
/// numbers, `h > P`) are errors naming the offending row; fractional
/// counts and `C < h²` only produce warnings.
pub fn load_csv(path: impl AsRef<Path>) -> Result<Loaded> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_path(path)?;
    let headers = reader.headers()?.clone();
    let got: Vec<&str> = headers.iter().collect();
    if got != HEADER {
        return Err(Error::Data(format!(
            "expected header {:?}, got {:?}",
            HEADER.join(","),
            got.join(",")
        )));
    }

    let mut warnings = Vec::new();
    let mut records: Vec<JournalRecord> = Vec::new();
    for (idx, row) in reader.records().enumerate() {
        let line = idx + 1; // data rows are numbered from 1, excluding the header
        let row = row?;
        if row.len() != 4 {
            return Err(Error::Data(format!("row {line}: expected 4 fields, got {}", row.len())));
        }
        let name = row[0].trim().to_string();
        if name.is_empty() {
            return Err(Error::Data(format!("row {line}: empty journal name")));
        }
        let mut parse_count = |field: usize, label: &str| -> Result<u32> {
            let raw = row[field].trim();
            let value: f64 = raw.parse().map_err(|_| {
                Error::Data(format!("row {line}: {label} = {raw:?} is not a number"))
            })?;
            if !value.is_finite() || value < 0.0 {
                return Err(Error::Data(format!(
                    "row {line}: {label} = {raw} must be finite and >= 0"
                )));
            }
            if value > f64::from(u32::MAX) {
                return Err(Error::Data(format!("row {line}: {label} = {raw} is too large")));
            }
            let rounded = value.round();
            if rounded != value {
                warnings.push(format!("row {line}: rounded {label} = {raw} to {rounded}"));
            }
            Ok(rounded as u32)
        };
        let h = parse_count(1, "h")?;
        let publications = parse_count(2, "P")?;
        let citations = parse_count(3, "C")?;
        let rec = JournalRecord { name, h, publications, citations };
        rec.check().map_err(|e| Error::Data(format!("row {line}: {e}")))?;
        if records.iter().any(|r| r.name == rec.name) {
            return Err(Error::Data(format!(
                "row {line}: duplicate journal name {:?}",
                rec.name
            )));
        }
        if let Some(w) = rec.soft_warning() {
            warnings.push(format!("row {line}: {w}"));
        }
        records.push(rec);
    }
    Ok(Loaded { dataset: Dataset::new(records)?, warnings })
}

/// Write a dataset back out in the same `journal,h,P,C` schema.
pub fn save_csv(path: impl AsRef<Path>, data: &Dataset) -> Result<()> {
    let mut out = std::fs::File::create(path)?;
    writeln!(out, "{}", HEADER.join(","))?;
    for rec in &data.records {
        let name = if rec.name.contains(',') || rec.name.contains('"') {
            format!("\"{}\"", rec.name.replace('"', "\"\""))
        } else {
            rec.name.clone()
        };
        writeln!(out, "{},{},{},{}", name, rec.h, rec.publications, rec.citations)?;
    }
    Ok(())
}

const STAT_LABELS: [(&str, f64); 9] = [
    ("min", 0.0),
    ("5%", 0.05),
    ("10%", 0.10),
    ("25%", 0.25),
    ("median", 0.50),
    ("75%", 0.75),
    ("90%", 0.90),
    ("95%", 0.95),
    ("max", 1.0),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub label: String,
    pub h: f64,
    pub publications: f64,
    pub citations: f64,
}

/// Nine order statistics (min through max) of h, P and C.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryTable {
    pub rows: Vec<SummaryRow>,
}

impl SummaryTable {
    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut table: Vec<[String; 4]> =
            vec![["stat".into(), "h".into(), "P".into(), "C".into()]];
        for row in &self.rows {
            table.push([
                row.label.clone(),
                fmt_stat(row.h),
                fmt_stat(row.publications),
                fmt_stat(row.citations),
            ]);
        }
        let mut widths = [0usize; 4];
        for row in &table {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        for row in &table {
            let mut line = format!("{:<width$}", row[0], width = widths[0]);
            for (cell, w) in row.iter().zip(widths).skip(1) {
                line.push_str(&format!("  {cell:>w$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Interpolated quantiles can be fractional; show at most two decimals
/// and drop trailing zeros.
fn fmt_stat(v: f64) -> String {
    let mut s = format!("{v:.2}");
    while s.contains('.') && (s.ends_with('0') || s.ends_with('.')) {
        s.pop();
    }
    s
}

/// Order statistics of a dataset's three columns. Errors on an empty
/// dataset since there is nothing to rank.
pub fn summarize(data: &Dataset) -> Result<SummaryTable> {
    if data.is_empty() {
        return Err(Error::Data("cannot summarize an empty dataset".into()));
    }
    let mut h = data.h_values();
    let mut p = data.publication_values();
    let mut c = data.citation_values();
    for col in [&mut h, &mut p, &mut c] {
        col.sort_by(|a, b| a.partial_cmp(b).unwrap());
    }
    let rows = STAT_LABELS
        .iter()
        .map(|&(label, q)| SummaryRow {
            label: label.to_string(),
            h: quantile_sorted(&h, q),
            publications: quantile_sorted(&p, q),
            citations: quantile_sorted(&c, q),
        })
        .collect();
    Ok(SummaryTable { rows })
}

/// Covariate ranges for synthetic data, as inclusive (min, max) pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovariateRanges {
    pub publications: (f64, f64),
    pub citations: (f64, f64),
}

impl CovariateRanges {
    pub fn new(publications: (f64, f64), citations: (f64, f64)) -> Result<Self> {
        for (label, (lo, hi)) in [("P", publications), ("C", citations)] {
            if !(lo > 0.0) || !lo.is_finite() || !hi.is_finite() || hi < lo {
                return Err(Error::Data(format!(
                    "{label} range must satisfy 0 < min <= max, got ({lo}, {hi})"
                )));
            }
            if hi > f64::from(u32::MAX) {
                return Err(Error::Data(format!("{label} max {hi} exceeds the count range")));
            }
        }
        Ok(Self { publications, citations })
    }
}

fn log_uniform(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    if lo == hi {
        return lo;
    }
    let u: f64 = rng.random();
    (lo.ln() + u * (hi.ln() - lo.ln())).exp()
}

/// Draw a synthetic dataset of `n` journals from a known model.
///
/// Covariates are log-uniform over their ranges (both span orders of
/// magnitude in real journal sets) and rounded to counts; h is drawn from
/// the observation model around the model mean — a rejection-sampled
/// truncated normal for the Gaussian family, a gamma-Poisson mixture for
/// the NB family. A draw with `h > P` violates the record invariant, so
/// the whole record is redrawn; clamping instead would pile mass at
/// `h = P` and bias fits.
pub fn synthesize(
    kind: ModelKind,
    params: &ParamVector,
    obs: &ObservationModel,
    n: usize,
    ranges: &CovariateRanges,
    seed: u64,
) -> Result<Dataset> {
    params.validate(kind)?;
    if n == 0 {
        return Err(Error::Data("synthesize needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(n);
    // generous cap: at sane parameters the h > P rejection rate is far
    // below one in ten, so hitting this means the setup is pathological
    const MAX_ATTEMPTS: usize = 10_000;
    for i in 0..n {
        let mut attempts = 0;
        let rec = loop {
            attempts += 1;
            if attempts > MAX_ATTEMPTS {
                return Err(Error::Data(format!(
                    "synthesize: record {i} rejected {MAX_ATTEMPTS} times (h > P); \
                     the parameters put the expected h above the P range"
                )));
            }
            let publications = log_uniform(&mut rng, ranges.publications).round().max(1.0);
            let citations = log_uniform(&mut rng, ranges.citations).round();
            let cov = Covariates::new(publications, citations)?;
            let mu = evaluate_mean(kind, params, &cov)?;
            let h = draw_h(&mut rng, obs, mu)?;
            if f64::from(h) <= publications {
                break JournalRecord {
                    name: format!("synth-{:04}", i + 1),
                    h,
                    publications: publications as u32,
                    citations: citations as u32,
                };
            }
        };
        records.push(rec);
    }
    Dataset::new(records)
}

fn draw_h(rng: &mut ChaCha8Rng, obs: &ObservationModel, mu: f64) -> Result<u32> {
    match *obs {
        ObservationModel::TruncGaussian { sigma } => {
            // mu >= 0, so at least half of each proposal's mass is positive
            loop {
                let z: f64 = rng.sample(StandardNormal);
                let x = mu + sigma * z;
                if x > 0.0 {
                    return Ok(round_count(x));
                }
            }
        }
        ObservationModel::NegBinomial { r } => {
            if mu == 0.0 {
                return Ok(0);
            }
            let gamma = Gamma::new(r, mu / r)
                .map_err(|e| Error::Data(format!("synthesize: bad gamma mixture: {e}")))?;
            let lambda: f64 = gamma.sample(rng);
            if !(lambda > 0.0) {
                return Ok(0); // gamma draw underflowed
            }
            let poisson = Poisson::new(lambda)
                .map_err(|e| Error::Data(format!("synthesize: bad poisson rate: {e}")))?;
            let draw: f64 = poisson.sample(rng);
            Ok(round_count(draw))
        }
    }
}

fn round_count(x: f64) -> u32 {
    x.round().clamp(0.0, f64::from(u32::MAX)) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(name: &str, h: u32, p: u32, c: u32) -> JournalRecord {
        JournalRecord { name: name.into(), h, publications: p, citations: c }
    }

    #[test]
    fn hard_invariants_enforced() {
        assert!(Dataset::new(vec![rec("a", 5, 4, 100)]).is_err()); // h > P
        assert!(Dataset::new(vec![rec("a", 0, 0, 0)]).is_err()); // P = 0
        assert!(Dataset::new(vec![rec("a", 5, 5, 100)]).is_ok());
        // names must be unique
        let dup = Dataset::new(vec![rec("a", 1, 10, 5), rec("a", 2, 10, 5)]);
        assert!(dup.unwrap_err().to_string().contains("duplicate"));
    }

    #[test]
    fn soft_warning_for_low_citations() {
        let data = Dataset::new(vec![rec("a", 10, 50, 99), rec("b", 10, 50, 100)]).unwrap();
        let warnings = data.soft_warnings();
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("\"a\""), "{warnings:?}");
        assert!(warnings[0].contains("h^2 = 100"));
    }

    #[test]
    fn csv_round_trip_preserves_records_and_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("journals.csv");
        let data = Dataset::new(vec![
            rec("Ecology Letters", 108, 1181, 68110),
            rec("Oikos, Nordic", 88, 3340, 80921),
            rec("Ecography", 56, 1306, 23400),
        ])
        .unwrap();
        save_csv(&path, &data).unwrap();
        let loaded = load_csv(&path).unwrap();
        assert_eq!(loaded.dataset, data);
        assert!(loaded.warnings.is_empty());

        let first = std::fs::read(&path).unwrap();
        save_csv(&path, &loaded.dataset).unwrap();
        let second = std::fs::read(&path).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn load_rounds_fractional_counts_with_warning() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("frac.csv");
        std::fs::write(&path, "journal,h,P,C\nj1,45.5,1351,14917.5\n").unwrap();
        let loaded = load_csv(&path).unwrap();
        assert_eq!(loaded.dataset.records()[0].h, 46);
        assert_eq!(loaded.dataset.records()[0].citations, 14918);
        assert_eq!(loaded.warnings.len(), 2);
        assert!(loaded.warnings[0].contains("row 1"));
        assert!(loaded.warnings[0].contains("45.5"));
    }

    #[test]
    fn load_errors_name_the_row() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");

        std::fs::write(&path, "journal,h,P,C\nj1,3,10,90\nj2,11,10,500\n").unwrap();
        let err = load_csv(&path).unwrap_err().to_string();
        assert!(err.contains("row 2"), "{err}");
        assert!(err.contains("exceeds"), "{err}");

        std::fs::write(&path, "journal,h,P,C\nj1,x,10,90\n").unwrap();
        let err = load_csv(&path).unwrap_err().to_string();
        assert!(err.contains("row 1") && err.contains('h'), "{err}");

        std::fs::write(&path, "journal,h,P,C\nj1,-1,10,90\n").unwrap();
        let err = load_csv(&path).unwrap_err().to_string();
        assert!(err.contains("row 1") && err.contains(">= 0"), "{err}");

        std::fs::write(&path, "journal,h,P,C\nj1,3,10,90\nj1,4,10,90\n").unwrap();
        let err = load_csv(&path).unwrap_err().to_string();
        assert!(err.contains("row 2") && err.contains("duplicate"), "{err}");

        std::fs::write(&path, "name,h,P,C\nj1,3,10,90\n").unwrap();
        let err = load_csv(&path).unwrap_err().to_string();
        assert!(err.contains("header"), "{err}");
    }

    #[test]
    fn summary_shape_and_values() {
        let records =
            (1..=9).map(|i| rec(&format!("j{i}"), i, 10 * i, 100 * i)).collect::<Vec<_>>();
        let data = Dataset::new(records).unwrap();
        let table = summarize(&data).unwrap();
        assert_eq!(table.rows.len(), 9);
        let labels: Vec<&str> = table.rows.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["min", "5%", "10%", "25%", "median", "75%", "90%", "95%", "max"]);
        assert_eq!(table.rows[0].h, 1.0);
        assert_eq!(table.rows[4].h, 5.0);
        assert_eq!(table.rows[8].citations, 900.0);
        // type-7 interpolation at the 25th percentile of 1..=9
        assert_eq!(table.rows[3].h, 3.0);
        assert_eq!(table.rows[1].h, 1.4);

        assert!(summarize(&Dataset::new(vec![]).unwrap()).is_err());

        // a single record degenerates every row to that record
        let one = summarize(&Dataset::new(vec![rec("only", 3, 7, 11)]).unwrap()).unwrap();
        assert!(one.rows.iter().all(|r| r.h == 3.0 && r.publications == 7.0 && r.citations == 11.0));
    }

    #[test]
    fn summary_on_a_known_sequence() {
        let records: Vec<_> =
            (1..=99).map(|i| rec(&format!("j{i}"), i, 100 + i, 10_000)).collect();
        let table = summarize(&Dataset::new(records).unwrap()).unwrap();
        assert_eq!(table.rows[4].h, 50.0); // median of 1..=99
        assert_eq!(table.rows[3].h, 25.5); // 25th percentile, type-7
    }

    #[test]
    fn summary_text_is_aligned() {
        let data = Dataset::new(vec![rec("a", 2, 48, 19), rec("b", 246, 8678, 456498)]).unwrap();
        let text = summarize(&data).unwrap().to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 10);
        assert!(lines[0].starts_with("stat"));
        // every data line ends at the same column as its header
        let header_cols: Vec<usize> = ["h", "P", "C"]
            .iter()
            .map(|name| lines[0].find(&format!(" {name}")).unwrap())
            .collect();
        assert!(header_cols.windows(2).all(|w| w[0] < w[1]));
        assert!(text.contains("median"));
        assert!(text.contains("456498"));
    }

    #[test]
    fn synthesize_is_deterministic_in_seed() {
        let params = ParamVector::glanzel_schubert(1.77, 0.7);
        let obs = ObservationModel::trunc_gaussian(5.0).unwrap();
        let ranges = CovariateRanges::new((48.0, 8678.0), (19.0, 456_498.0)).unwrap();
        let a = synthesize(ModelKind::GlanzelSchubert, &params, &obs, 50, &ranges, 7).unwrap();
        let b = synthesize(ModelKind::GlanzelSchubert, &params, &obs, 50, &ranges, 7).unwrap();
        let c = synthesize(ModelKind::GlanzelSchubert, &params, &obs, 50, &ranges, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 50);
    }

    #[test]
    fn synthesize_tiny_sigma_recovers_the_mean() {
        // degenerate covariate ranges pin mu, and sigma -> 0 pins h = round(mu)
        let params = ParamVector::glanzel_schubert(1.77, 0.7);
        let obs = ObservationModel::trunc_gaussian(1e-9).unwrap();
        let ranges = CovariateRanges::new((1351.0, 1351.0), (14918.0, 14918.0)).unwrap();
        let data = synthesize(ModelKind::GlanzelSchubert, &params, &obs, 20, &ranges, 3).unwrap();
        for r in data.records() {
            assert_eq!(r.h, 44); // round(43.83...)
            assert_eq!(r.publications, 1351);
            assert_eq!(r.citations, 14918);
        }
    }

    #[test]
    fn synthesize_median_h_in_plausible_band() {
        // Log-uniform covariates put most journals well below the upper
        // range ends, so the median synthetic h sits in the teens — far
        // below the arithmetic midpoint of the observable h range.
        let params = ParamVector::glanzel_schubert(1.77, 0.7);
        let obs = ObservationModel::trunc_gaussian(5.0).unwrap();
        let ranges = CovariateRanges::new((48.0, 8678.0), (19.0, 456_498.0)).unwrap();
        let data =
            synthesize(ModelKind::GlanzelSchubert, &params, &obs, 400, &ranges, 42).unwrap();
        let mut h = data.h_values();
        h.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = quantile_sorted(&h, 0.5);
        assert!((6.0..=24.0).contains(&median), "median h = {median}");
    }

    #[test]
    fn synthesize_nb_draws_counts() {
        let params = ParamVector::egghe_rousseau(3.0);
        let obs = ObservationModel::neg_binomial(5.0).unwrap();
        let ranges = CovariateRanges::new((100.0, 5000.0), (1000.0, 300_000.0)).unwrap();
        let data = synthesize(ModelKind::EggheRousseau, &params, &obs, 200, &ranges, 11).unwrap();
        assert_eq!(data.len(), 200);
        // all record invariants hold by construction
        assert!(data.records().iter().all(|r| r.h <= r.publications));
        // and the h values are not all equal (the NB actually disperses)
        let h0 = data.records()[0].h;
        assert!(data.records().iter().any(|r| r.h != h0));
    }

    #[test]
    fn synthesize_rejects_impossible_setup() {
        // expected h far above the whole P range: every record hits the cap
        let params = ParamVector::hirsch(1.0, 1.0, 1.0); // mu = C
        let obs = ObservationModel::trunc_gaussian(1.0).unwrap();
        let ranges = CovariateRanges::new((1.0, 2.0), (50_000.0, 60_000.0)).unwrap();
        let err = synthesize(ModelKind::HirschGaussian, &params, &obs, 1, &ranges, 0);
        assert!(err.is_err());
    }

    #[test]
    fn covariate_ranges_validated() {
        assert!(CovariateRanges::new((0.0, 10.0), (1.0, 2.0)).is_err());
        assert!(CovariateRanges::new((5.0, 4.0), (1.0, 2.0)).is_err());
        assert!(CovariateRanges::new((1.0, 2.0), (1.0, f64::INFINITY)).is_err());
        assert!(CovariateRanges::new((1.0, 2.0), (1.0, 2.0)).is_ok());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn record_strategy() -> impl Strategy<Value = JournalRecord> {
            (1u32..2000, any::<u32>()).prop_flat_map(|(p, c)| {
                (0..=p).prop_map(move |h| JournalRecord {
                    name: String::new(), // renamed uniquely by the test
                    h,
                    publications: p,
                    citations: c,
                })
            })
        }

        fn name_uniquely(records: &mut [JournalRecord]) {
            for (i, rec) in records.iter_mut().enumerate() {
                rec.name = format!("j{i}");
            }
        }

        proptest! {
            #[test]
            fn summary_invariant_under_permutation(
                mut records in proptest::collection::vec(record_strategy(), 1..40),
                seed in any::<u64>(),
            ) {
                name_uniquely(&mut records);
                let base = summarize(&Dataset::new(records.clone()).unwrap()).unwrap();
                // deterministic shuffle driven by the seed
                let n = records.len();
                let mut state = seed;
                for i in (1..n).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let j = (state >> 33) as usize % (i + 1);
                    records.swap(i, j);
                }
                let shuffled = summarize(&Dataset::new(records).unwrap()).unwrap();
                prop_assert_eq!(base, shuffled);
            }

            #[test]
            fn summary_rows_are_monotone(
                mut records in proptest::collection::vec(record_strategy(), 1..40),
            ) {
                name_uniquely(&mut records);
                let table = summarize(&Dataset::new(records).unwrap()).unwrap();
                for pair in table.rows.windows(2) {
                    prop_assert!(pair[0].h <= pair[1].h);
                    prop_assert!(pair[0].publications <= pair[1].publications);
                    prop_assert!(pair[0].citations <= pair[1].citations);
                }
            }
        }
    }
}
