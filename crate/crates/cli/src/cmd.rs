//! Subcommand implementations. Each takes its parsed arguments plus the raw
//! argv (recorded verbatim in the run manifest written next to every output).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use hbayes::dataio::{self, Dataset};
use hbayes::mcmc::{
    default_inits, default_priors, export_trace, read_chain_csv, run_chain, split_rhat,
    write_chain_csv, Chain, FitSummary, PriorSpec, SamplerConfig,
};
use hbayes::sensitivity::{
    build_global_grid, build_local_grid, propagate, propagate_full, sensitivity_index,
    CovariateAxis, CurvePoint,
};
use hbayes::{ModelKind, ObsKind, ObservationModel, ParamVector};

use crate::manifest::{sha256_hex, RunManifest};
use crate::svg;
use crate::{
    CompareArgs, Failure, FitArgs, PlotArgs, SensitivityArgs, SimulateArgs, SummaryArgs,
};

/// Model/likelihood pairings from the reference analysis; anything else
/// needs --allow-nonpaper.
const REFERENCE_COMBOS: [(&str, &str); 4] =
    [("gs", "gaussian"), ("er", "nb"), ("h", "gaussian"), ("h", "nb")];

fn user(msg: impl Into<String>) -> Failure {
    Failure::User(msg.into())
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| user(format!("cannot write {}: {e}", path.display())))
}

fn ensure_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .map_err(|e| user(format!("cannot create {}: {e}", dir.display())))
}

fn parent_dir(path: &Path) -> PathBuf {
    match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    }
}

fn load_data(path: &Path) -> Result<Dataset, Failure> {
    let loaded = dataio::load_csv(path)?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    Ok(loaded.dataset)
}

fn resolve_combo(
    model: &str,
    likelihood: &str,
    allow_nonpaper: bool,
) -> Result<(ModelKind, ObsKind), Failure> {
    let obs = ObsKind::from_code(likelihood).ok_or_else(|| {
        user(format!("unknown likelihood {likelihood:?}; choose gaussian or nb"))
    })?;
    let kind = match model {
        "er" => ModelKind::EggheRousseau,
        "gs" => ModelKind::GlanzelSchubert,
        "h" => match obs {
            ObsKind::Gaussian => ModelKind::HirschGaussian,
            ObsKind::NegBinomial => ModelKind::HirschNb,
        },
        other => return Err(user(format!("unknown model {other:?}; choose er, gs or h"))),
    };
    if !allow_nonpaper && !REFERENCE_COMBOS.contains(&(kind.code(), obs.code())) {
        return Err(user(format!(
            "{} + {} is not one of the reference pairings (gs+gaussian, er+nb, \
             h+gaussian, h+nb); pass --allow-nonpaper to fit it anyway",
            kind.code(),
            obs.code()
        )));
    }
    Ok((kind, obs))
}

pub fn fit(args: &FitArgs, argv: &[String]) -> Result<(), Failure> {
    let (kind, obs_kind) = resolve_combo(&args.model, &args.likelihood, args.allow_nonpaper)?;
    if args.chains == 0 {
        return Err(user("--chains must be >= 1"));
    }
    let config = SamplerConfig {
        iterations: args.iters,
        burn_in: args.burnin,
        seed: args.seed,
        thin: args.thin,
        ..SamplerConfig::default()
    };
    config.validate()?;
    let data = load_data(&args.data)?;
    let priors = default_priors(kind, obs_kind);
    let inits = default_inits(kind, obs_kind);

    let chains = if args.chains == 1 {
        vec![run_chain(&config, kind, obs_kind, &data, &priors, &inits)?]
    } else {
        run_parallel(&config, kind, obs_kind, &data, &priors, &inits, args.chains)?
    };

    ensure_dir(&args.out)?;
    let prefix = format!("{}-{}", kind.code(), obs_kind.code());
    let mut written = Vec::new();
    if args.chains == 1 {
        let path = args.out.join(format!("{prefix}-chain.csv"));
        write_chain_csv(&path, &chains[0])?;
        written.push(path);
    } else {
        for (i, chain) in chains.iter().enumerate() {
            let path = args.out.join(format!("{prefix}-chain-{i}.csv"));
            write_chain_csv(&path, chain)?;
            written.push(path);
        }
    }

    let data_sha = sha256_hex(&args.data)?;
    let mut summary = FitSummary::from_chain(&chains[0])?;
    summary.data_sha256 = Some(data_sha.clone());
    if args.chains > 1 {
        let mut rhat = BTreeMap::new();
        for name in &chains[0].param_names {
            let columns = chains
                .iter()
                .map(|c| c.column(name))
                .collect::<hbayes::Result<Vec<_>>>()?;
            rhat.insert(name.clone(), split_rhat(&columns)?);
        }
        summary.rhat = Some(rhat);
    }
    let summary_path = args.out.join(format!("{prefix}-summary.json"));
    write_text(&summary_path, &(summary.to_json()? + "\n"))?;
    written.push(summary_path);

    let mut manifest = RunManifest::new(argv, &args.out);
    manifest.config = Some(config);
    manifest.model = Some(kind.code().to_string());
    manifest.likelihood = Some(obs_kind.code().to_string());
    manifest.input = Some(args.data.clone());
    manifest.data_sha256 = Some(data_sha);
    manifest.chains = Some(args.chains);
    let manifest_path = args.out.join(format!("{prefix}-manifest.json"));
    manifest.write(&manifest_path)?;
    written.push(manifest_path);

    println!(
        "{} + {} likelihood, {} journals, {} chain(s) of {} iterations",
        kind.label(),
        obs_kind.code(),
        data.len(),
        args.chains,
        config.iterations
    );
    println!(
        "{:<10} {:>12} {:>12} {:>12} {:>10} {:>10}",
        "parameter", "median", "2.5%", "97.5%", "ESS", "Geweke z"
    );
    for name in &chains[0].param_names {
        let s = summary.params[name];
        println!(
            "{:<10} {:>12.4} {:>12.4} {:>12.4} {:>10.0} {:>10.2}",
            name, s.median, s.ci_low, s.ci_high, s.ess, s.geweke_z
        );
    }
    if let Some(rhat) = &summary.rhat {
        for (name, r) in rhat {
            println!("split R-hat ({name}): {r:.4}");
        }
    }
    println!("mean deviance: {:.2}", summary.mean_deviance);
    for p in &written {
        println!("wrote {}", p.display());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_parallel(
    config: &SamplerConfig,
    kind: ModelKind,
    obs_kind: ObsKind,
    data: &Dataset,
    priors: &BTreeMap<String, PriorSpec>,
    inits: &BTreeMap<String, f64>,
    n_chains: usize,
) -> Result<Vec<Chain>, Failure> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..n_chains)
            .map(|i| {
                let cfg = SamplerConfig { seed: config.seed + i as u64, ..*config };
                scope.spawn(move || run_chain(&cfg, kind, obs_kind, data, priors, inits))
            })
            .collect();
        let mut chains = Vec::with_capacity(n_chains);
        for handle in handles {
            let chain = handle
                .join()
                .map_err(|_| Failure::Internal("a sampler thread panicked".into()))??;
            chains.push(chain);
        }
        Ok(chains)
    })
}

pub fn compare(args: &CompareArgs, argv: &[String]) -> Result<(), Failure> {
    if args.summaries.len() < 2 && !args.force {
        return Err(user(
            "compare needs at least two fit summaries (pass --force to rank a single one)",
        ));
    }
    let mut entries = Vec::new();
    for path in &args.summaries {
        let text = fs::read_to_string(path)
            .map_err(|e| user(format!("cannot read {}: {e}", path.display())))?;
        let summary: FitSummary = serde_json::from_str(&text)
            .map_err(|e| user(format!("{} is not a fit summary: {e}", path.display())))?;
        entries.push(summary);
    }
    let mut hashes: Vec<&str> =
        entries.iter().filter_map(|s| s.data_sha256.as_deref()).collect();
    hashes.sort_unstable();
    hashes.dedup();
    if hashes.len() > 1 {
        return Err(user(
            "fit summaries were computed on different datasets (data_sha256 differs); \
             compare fits of one dataset only",
        ));
    }
    entries.sort_by(|a, b| {
        a.mean_deviance
            .total_cmp(&b.mean_deviance)
            .then_with(|| a.model.cmp(&b.model))
            .then_with(|| a.likelihood.cmp(&b.likelihood))
    });

    ensure_dir(&args.out)?;
    let mut csv = String::from("model,likelihood,mean_deviance,best\n");
    for (i, s) in entries.iter().enumerate() {
        let _ = writeln!(csv, "{},{},{},{}", s.model, s.likelihood, s.mean_deviance, i == 0);
    }
    let csv_path = args.out.join("compare.csv");
    write_text(&csv_path, &csv)?;

    println!("{:<6} {:<10} {:>14}", "model", "likelihood", "mean deviance");
    for (i, s) in entries.iter().enumerate() {
        let marker = if i == 0 { "  <- best" } else { "" };
        println!("{:<6} {:<10} {:>14.2}{marker}", s.model, s.likelihood, s.mean_deviance);
    }

    let manifest = RunManifest::new(argv, &args.out);
    let manifest_path = args.out.join("compare-manifest.json");
    manifest.write(&manifest_path)?;
    println!("wrote {}", csv_path.display());
    println!("wrote {}", manifest_path.display());
    Ok(())
}

/// The sensitivity-index record written as JSON and read back by
/// `plot --progressive`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SiReport {
    pub model: String,
    pub likelihood: String,
    pub varied: String,
    pub mode: String,
    pub si: f64,
    pub h_max: f64,
    pub h_min: f64,
    pub progressive: Vec<f64>,
}

fn axis_name(axis: CovariateAxis) -> &'static str {
    match axis {
        CovariateAxis::Publications => "publications (P)",
        CovariateAxis::Citations => "citations (C)",
    }
}

fn progressive_chart(progressive: &[f64], title: &str) -> String {
    let pts: Vec<(f64, f64)> =
        progressive.iter().enumerate().map(|(k, v)| ((k + 1) as f64, *v)).collect();
    svg::line_chart(
        title,
        "grid points included",
        "sensitivity index",
        &[svg::Series { label: "progressive SI", points: &pts }],
        None,
    )
}

pub fn sensitivity(args: &SensitivityArgs, argv: &[String]) -> Result<(), Failure> {
    let chain = read_chain_csv(&args.chain)?;
    let data = load_data(&args.data)?;
    let axis = CovariateAxis::from_code(&args.vary.to_ascii_uppercase())
        .ok_or_else(|| user(format!("unknown covariate {:?}; choose P or C", args.vary)))?;
    let grid = match args.mode.as_str() {
        "global" => build_global_grid(&data, axis)?,
        "local" => build_local_grid(&data, axis)?,
        other => return Err(user(format!("unknown mode {other:?}; choose global or local"))),
    };
    let curve = if args.no_thin {
        propagate_full(&chain, chain.kind, &grid)?
    } else {
        propagate(&chain, chain.kind, &grid)?
    };
    let si = sensitivity_index(&curve)?;

    ensure_dir(&args.out)?;
    let prefix = format!("{}-{}-{}", chain.kind.code(), axis.code(), args.mode);
    let mut written = Vec::new();

    let mut csv = String::from("grid_value,h_mean,h_q025,h_q50,h_q975\n");
    for p in &curve.points {
        let _ = writeln!(csv, "{},{},{},{},{}", p.grid_value, p.h_mean, p.h_q025, p.h_q50, p.h_q975);
    }
    let csv_path = args.out.join(format!("{prefix}-curve.csv"));
    write_text(&csv_path, &csv)?;
    written.push(csv_path);

    let report = SiReport {
        model: chain.kind.code().to_string(),
        likelihood: chain.obs_kind.code().to_string(),
        varied: axis.code().to_string(),
        mode: args.mode.clone(),
        si: si.si,
        h_max: si.h_max,
        h_min: si.h_min,
        progressive: si.progressive.clone(),
    };
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::Internal(format!("SI serialization failed: {e}")))?;
    let si_path = args.out.join(format!("{prefix}-si.json"));
    write_text(&si_path, &(json + "\n"))?;
    written.push(si_path);

    let mean_pts: Vec<(f64, f64)> =
        curve.points.iter().map(|p| (p.grid_value, p.h_mean)).collect();
    let lo_pts: Vec<(f64, f64)> =
        curve.points.iter().map(|p| (p.grid_value, p.h_q025)).collect();
    let hi_pts: Vec<(f64, f64)> =
        curve.points.iter().map(|p| (p.grid_value, p.h_q975)).collect();
    let title = format!("{}: h vs {} ({} grid)", chain.kind.label(), axis.code(), args.mode);
    let chart = svg::line_chart(
        &title,
        axis_name(axis),
        "expected h",
        &[svg::Series { label: "posterior mean", points: &mean_pts }],
        Some(svg::Band { lower: &lo_pts, upper: &hi_pts }),
    );
    let curve_svg = args.out.join(format!("{prefix}-curve.svg"));
    write_text(&curve_svg, &chart)?;
    written.push(curve_svg);

    let prog_title =
        format!("progressive SI: {} varying {} ({} grid)", chain.kind.label(), axis.code(), args.mode);
    let prog_svg_path = args.out.join(format!("{prefix}-progressive.svg"));
    write_text(&prog_svg_path, &progressive_chart(&report.progressive, &prog_title))?;
    written.push(prog_svg_path);

    let mut manifest = RunManifest::new(argv, &args.out);
    manifest.model = Some(chain.kind.code().to_string());
    manifest.likelihood = Some(chain.obs_kind.code().to_string());
    manifest.input = Some(args.data.clone());
    let manifest_path = args.out.join(format!("{prefix}-manifest.json"));
    manifest.write(&manifest_path)?;
    written.push(manifest_path);

    println!(
        "SI varying {} ({} grid): {:.4}  (h_max = {:.3}, h_min = {:.3})",
        axis.code(),
        args.mode,
        si.si,
        si.h_max,
        si.h_min
    );
    for p in &written {
        println!("wrote {}", p.display());
    }
    Ok(())
}

pub fn summary(args: &SummaryArgs, argv: &[String]) -> Result<(), Failure> {
    let data = load_data(&args.data)?;
    let table = dataio::summarize(&data)?;
    let text = table.to_text();
    print!("{text}");
    if !text.ends_with('\n') {
        println!();
    }
    if let Some(csv_path) = &args.csv {
        let dir = parent_dir(csv_path);
        ensure_dir(&dir)?;
        let mut csv = String::from("label,h,P,C\n");
        for row in &table.rows {
            let _ = writeln!(csv, "{},{},{},{}", row.label, row.h, row.publications, row.citations);
        }
        write_text(csv_path, &csv)?;
        let mut manifest = RunManifest::new(argv, &dir);
        manifest.input = Some(args.data.clone());
        let manifest_path = dir.join("summary-manifest.json");
        manifest.write(&manifest_path)?;
        println!("wrote {}", csv_path.display());
        println!("wrote {}", manifest_path.display());
    }
    Ok(())
}

pub fn simulate(args: &SimulateArgs, argv: &[String]) -> Result<(), Failure> {
    let obs_kind = ObsKind::from_code(&args.likelihood).ok_or_else(|| {
        user(format!("unknown likelihood {:?}; choose gaussian or nb", args.likelihood))
    })?;
    let kind = match args.model.as_str() {
        "er" => ModelKind::EggheRousseau,
        "gs" => ModelKind::GlanzelSchubert,
        "h" => match obs_kind {
            ObsKind::Gaussian => ModelKind::HirschGaussian,
            ObsKind::NegBinomial => ModelKind::HirschNb,
        },
        other => return Err(user(format!("unknown model {other:?}; choose er, gs or h"))),
    };
    let params = build_params(kind, args)?;
    let obs = match obs_kind {
        ObsKind::Gaussian => ObservationModel::trunc_gaussian(args.sigma)?,
        ObsKind::NegBinomial => ObservationModel::neg_binomial(args.r)?,
    };
    let ranges = dataio::CovariateRanges::new(args.p_range, args.c_range)?;
    let data = dataio::synthesize(kind, &params, &obs, args.n, &ranges, args.seed)?;

    let dir = parent_dir(&args.out);
    ensure_dir(&dir)?;
    dataio::save_csv(&args.out, &data)?;
    let stem = args
        .out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "simulate".into());
    let mut manifest = RunManifest::new(argv, &dir);
    manifest.model = Some(kind.code().to_string());
    manifest.likelihood = Some(obs_kind.code().to_string());
    let manifest_path = dir.join(format!("{stem}-manifest.json"));
    manifest.write(&manifest_path)?;

    println!("wrote {} synthetic journals to {}", data.len(), args.out.display());
    println!("wrote {}", manifest_path.display());
    Ok(())
}

fn build_params(kind: ModelKind, args: &SimulateArgs) -> Result<ParamVector, Failure> {
    fn refuse(kind: ModelKind, flag: &str) -> Failure {
        Failure::User(format!("--{flag} is not a parameter of the {} model", kind.label()))
    }
    let params = match kind {
        ModelKind::EggheRousseau => {
            if args.c.is_some() {
                return Err(refuse(kind, "c"));
            }
            if args.a.is_some() {
                return Err(refuse(kind, "a"));
            }
            if args.b.is_some() {
                return Err(refuse(kind, "b"));
            }
            ParamVector::egghe_rousseau(args.alpha)
        }
        ModelKind::GlanzelSchubert => {
            if args.a.is_some() {
                return Err(refuse(kind, "a"));
            }
            if args.b.is_some() {
                return Err(refuse(kind, "b"));
            }
            let c = args.c.ok_or_else(|| user("the Glanzel-Schubert model needs --c"))?;
            ParamVector::glanzel_schubert(args.alpha, c)
        }
        ModelKind::HirschGaussian | ModelKind::HirschNb => {
            if args.c.is_some() {
                return Err(refuse(kind, "c"));
            }
            let a = args.a.ok_or_else(|| user("the Hirsch model needs --a"))?;
            let b = args.b.ok_or_else(|| user("the Hirsch model needs --b"))?;
            ParamVector::hirsch(args.alpha, a, b)
        }
    };
    params.validate(kind)?;
    Ok(params)
}

/// Clap value parser for `lo,hi` covariate ranges.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected lo,hi but got {s:?}"));
    }
    let lo: f64 =
        parts[0].trim().parse().map_err(|e| format!("bad lower bound {:?}: {e}", parts[0]))?;
    let hi: f64 =
        parts[1].trim().parse().map_err(|e| format!("bad upper bound {:?}: {e}", parts[1]))?;
    Ok((lo, hi))
}

const CURVE_HEADER: &str = "grid_value,h_mean,h_q025,h_q50,h_q975";

fn read_curve_csv(path: &Path) -> Result<Vec<CurvePoint>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| user(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim_end() == CURVE_HEADER => {}
        _ => {
            return Err(user(format!(
                "{} is not a sensitivity curve (expected header {CURVE_HEADER:?})",
                path.display()
            )))
        }
    }
    let mut points = Vec::new();
    let mut row = 0usize;
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        row += 1;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(user(format!(
                "{}: row {row} has {} fields, expected 5",
                path.display(),
                fields.len()
            )));
        }
        let mut vals = [0.0f64; 5];
        for (j, field) in fields.iter().enumerate() {
            vals[j] = field.trim().parse().map_err(|e| {
                user(format!("{}: row {row}: bad number {field:?}: {e}", path.display()))
            })?;
        }
        points.push(CurvePoint {
            grid_value: vals[0],
            h_mean: vals[1],
            h_q025: vals[2],
            h_q50: vals[3],
            h_q975: vals[4],
        });
    }
    if points.is_empty() {
        return Err(user(format!("{} contains no curve rows", path.display())));
    }
    Ok(points)
}

pub fn plot(args: &PlotArgs, argv: &[String]) -> Result<(), Failure> {
    if args.trace.is_none()
        && args.violin.is_empty()
        && args.curve.is_none()
        && args.progressive.is_none()
    {
        return Err(user(
            "nothing to plot: pass --trace, --violin, --curve and/or --progressive",
        ));
    }
    ensure_dir(&args.out)?;
    let mut written = Vec::new();

    if let Some(chain_path) = &args.trace {
        let chain = read_chain_csv(chain_path)?;
        let params = match &args.param {
            Some(p) => vec![p.clone()],
            None => chain.param_names.clone(),
        };
        for name in &params {
            let trace = export_trace(&chain, name)?;
            let pts: Vec<(f64, f64)> = trace.iter().map(|&(it, v)| (it as f64, v)).collect();
            let title =
                format!("trace of {name} ({}-{})", chain.kind.code(), chain.obs_kind.code());
            let chart = svg::line_chart(
                &title,
                "iteration",
                name,
                &[svg::Series { label: name, points: &pts }],
                None,
            );
            let path = args.out.join(format!("trace-{name}.svg"));
            write_text(&path, &chart)?;
            written.push(path);
        }
    }

    if !args.violin.is_empty() {
        let mut groups: Vec<(String, Vec<f64>)> = Vec::new();
        for path in &args.violin {
            let chain = read_chain_csv(path)?;
            let finite: Vec<f64> =
                chain.deviance_draws.iter().copied().filter(|v| v.is_finite()).collect();
            if finite.is_empty() {
                return Err(user(format!(
                    "{} has no finite deviance draws to plot",
                    path.display()
                )));
            }
            let base = format!("{}-{}", chain.kind.code(), chain.obs_kind.code());
            let n_same = groups
                .iter()
                .filter(|(l, _)| *l == base || l.starts_with(&format!("{base} #")))
                .count();
            let label = if n_same == 0 { base } else { format!("{base} #{}", n_same + 1) };
            groups.push((label, finite));
        }
        let chart = svg::violin_chart("posterior deviance by model", "deviance", &groups);
        let path = args.out.join("violin.svg");
        write_text(&path, &chart)?;
        written.push(path);
    }

    if let Some(curve_path) = &args.curve {
        let points = read_curve_csv(curve_path)?;
        let mean_pts: Vec<(f64, f64)> = points.iter().map(|p| (p.grid_value, p.h_mean)).collect();
        let lo_pts: Vec<(f64, f64)> = points.iter().map(|p| (p.grid_value, p.h_q025)).collect();
        let hi_pts: Vec<(f64, f64)> = points.iter().map(|p| (p.grid_value, p.h_q975)).collect();
        let chart = svg::line_chart(
            "sensitivity curve",
            "covariate value",
            "expected h",
            &[svg::Series { label: "posterior mean", points: &mean_pts }],
            Some(svg::Band { lower: &lo_pts, upper: &hi_pts }),
        );
        let path = args.out.join("curve.svg");
        write_text(&path, &chart)?;
        written.push(path);
    }

    if let Some(si_path) = &args.progressive {
        let text = fs::read_to_string(si_path)
            .map_err(|e| user(format!("cannot read {}: {e}", si_path.display())))?;
        let report: SiReport = serde_json::from_str(&text)
            .map_err(|e| user(format!("{} is not an SI report: {e}", si_path.display())))?;
        let title = format!(
            "progressive SI: {} varying {} ({} grid)",
            report.model, report.varied, report.mode
        );
        let path = args.out.join("progressive.svg");
        write_text(&path, &progressive_chart(&report.progressive, &title))?;
        written.push(path);
    }

    let manifest = RunManifest::new(argv, &args.out);
    let manifest_path = args.out.join("plot-manifest.json");
    manifest.write(&manifest_path)?;
    written.push(manifest_path);
    for p in &written {
        println!("wrote {}", p.display());
    }
    Ok(())
}
