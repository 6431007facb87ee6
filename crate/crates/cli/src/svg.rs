//! Minimal hand-rolled SVG 1.1 figures: line charts (traces, sensitivity
//! curves, progressive SI) and mirrored-KDE violins for deviance draws.

use std::fmt::Write as _;

use hbayes::sensitivity::percentile;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_L: f64 = 72.0;
const MARGIN_R: f64 = 24.0;
const MARGIN_T: f64 = 44.0;
const MARGIN_B: f64 = 56.0;

const PALETTE: [&str; 6] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

pub struct Series<'a> {
    pub label: &'a str,
    pub points: &'a [(f64, f64)],
}

/// A shaded region between a lower and an upper trace (e.g. a credible band).
pub struct Band<'a> {
    pub lower: &'a [(f64, f64)],
    pub upper: &'a [(f64, f64)],
}

struct Scale {
    lo: f64,
    hi: f64,
    px_lo: f64,
    px_hi: f64,
}

impl Scale {
    fn map(&self, v: f64) -> f64 {
        let span = if self.hi > self.lo { self.hi - self.lo } else { 1.0 };
        self.px_lo + (v - self.lo) / span * (self.px_hi - self.px_lo)
    }
}

fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if !(0.001..10_000.0).contains(&a) {
        return format!("{v:.2e}");
    }
    let mut s = format!("{v:.3}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    s
}

fn open_svg(title: &str) -> String {
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = write!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"15\">{}</text>",
        WIDTH / 2.0,
        escape(title)
    );
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn axes(s: &mut String, x: &Scale, y: &Scale, x_label: &str, y_label: &str) {
    let _ = writeln!(
        s,
        "<line x1=\"{l}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n\
         <line x1=\"{l}\" y1=\"{t}\" x2=\"{l}\" y2=\"{b}\" stroke=\"black\"/>",
        l = MARGIN_L,
        r = WIDTH - MARGIN_R,
        t = MARGIN_T,
        b = HEIGHT - MARGIN_B
    );
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let xv = x.lo + f * (x.hi - x.lo);
        let xp = x.map(xv);
        let _ = writeln!(
            s,
            "<line x1=\"{xp:.2}\" y1=\"{b}\" x2=\"{xp:.2}\" y2=\"{b2}\" stroke=\"black\"/>\n\
             <text x=\"{xp:.2}\" y=\"{ty}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"11\">{lab}</text>",
            b = HEIGHT - MARGIN_B,
            b2 = HEIGHT - MARGIN_B + 5.0,
            ty = HEIGHT - MARGIN_B + 18.0,
            lab = fmt_tick(xv)
        );
        let yv = y.lo + f * (y.hi - y.lo);
        let yp = y.map(yv);
        let _ = writeln!(
            s,
            "<line x1=\"{l}\" y1=\"{yp:.2}\" x2=\"{l2}\" y2=\"{yp:.2}\" stroke=\"black\"/>\n\
             <text x=\"{tx}\" y=\"{typ:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" \
             font-size=\"11\">{lab}</text>",
            l = MARGIN_L,
            l2 = MARGIN_L - 5.0,
            tx = MARGIN_L - 8.0,
            typ = yp + 4.0,
            lab = fmt_tick(yv)
        );
    }
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"13\">{}</text>",
        (MARGIN_L + WIDTH - MARGIN_R) / 2.0,
        HEIGHT - 14.0,
        escape(x_label)
    );
    let _ = writeln!(
        s,
        "<text x=\"18\" y=\"{mid}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"13\" transform=\"rotate(-90 18 {mid})\">{lab}</text>",
        mid = (MARGIN_T + HEIGHT - MARGIN_B) / 2.0,
        lab = escape(y_label)
    );
}

fn polyline_points(points: &[(f64, f64)], x: &Scale, y: &Scale) -> String {
    let mut s = String::with_capacity(points.len() * 14);
    for (px, py) in points {
        let _ = write!(s, "{:.2},{:.2} ", x.map(*px), y.map(*py));
    }
    s.pop();
    s
}

fn data_range<'a>(values: impl Iterator<Item = &'a f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(*v);
        hi = hi.max(*v);
    }
    if !lo.is_finite() || !hi.is_finite() {
        (0.0, 1.0)
    } else if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

/// One polyline per series, an optional shaded band behind them, a legend
/// when there is more than one series.
pub fn line_chart(
    title: &str,
    x_label: &str,
    y_label: &str,
    series: &[Series],
    band: Option<Band>,
) -> String {
    let xs = series
        .iter()
        .flat_map(|s| s.points.iter())
        .chain(band.iter().flat_map(|b| b.lower.iter().chain(b.upper.iter())))
        .map(|(x, _)| x);
    let (x_lo, x_hi) = data_range(xs);
    let ys = series
        .iter()
        .flat_map(|s| s.points.iter())
        .chain(band.iter().flat_map(|b| b.lower.iter().chain(b.upper.iter())))
        .map(|(_, y)| y);
    let (mut y_lo, mut y_hi) = data_range(ys);
    let pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    let x = Scale { lo: x_lo, hi: x_hi, px_lo: MARGIN_L, px_hi: WIDTH - MARGIN_R };
    let y = Scale { lo: y_lo, hi: y_hi, px_lo: HEIGHT - MARGIN_B, px_hi: MARGIN_T };

    let mut s = open_svg(title);
    if let Some(b) = &band {
        let mut pts = polyline_points(b.lower, &x, &y);
        let upper_rev: Vec<(f64, f64)> = b.upper.iter().rev().copied().collect();
        pts.push(' ');
        pts.push_str(&polyline_points(&upper_rev, &x, &y));
        let _ = writeln!(
            s,
            "<polygon class=\"band\" points=\"{pts}\" fill=\"#1f77b4\" \
             fill-opacity=\"0.18\" stroke=\"none\"/>"
        );
    }
    for (i, ser) in series.iter().enumerate() {
        let _ = writeln!(
            s,
            "<polyline class=\"series\" points=\"{}\" fill=\"none\" stroke=\"{}\" \
             stroke-width=\"1.4\"/>",
            polyline_points(ser.points, &x, &y),
            PALETTE[i % PALETTE.len()]
        );
    }
    if series.len() > 1 {
        for (i, ser) in series.iter().enumerate() {
            let ly = MARGIN_T + 16.0 * i as f64 + 12.0;
            let _ = writeln!(
                s,
                "<text x=\"{}\" y=\"{ly}\" text-anchor=\"end\" font-family=\"sans-serif\" \
                 font-size=\"12\" fill=\"{}\">{}</text>",
                WIDTH - MARGIN_R - 6.0,
                PALETTE[i % PALETTE.len()],
                escape(ser.label)
            );
        }
    }
    axes(&mut s, &x, &y, x_label, y_label);
    s.push_str("</svg>\n");
    s
}

fn silverman_bandwidth(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let sd = (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n).sqrt();
    let iqr = percentile(values, 75.0).unwrap_or(mean) - percentile(values, 25.0).unwrap_or(mean);
    let spread = if iqr > 0.0 { sd.min(iqr / 1.34) } else { sd };
    let bw = 0.9 * spread * n.powf(-0.2);
    if bw > 0.0 {
        bw
    } else {
        // degenerate (constant) sample: draw a hairline spike
        (mean.abs() * 1e-4).max(1e-9)
    }
}

fn kde(values: &[f64], at: f64, bw: f64) -> f64 {
    let norm = 1.0 / (values.len() as f64 * bw * (2.0 * std::f64::consts::PI).sqrt());
    values
        .iter()
        .map(|v| {
            let z = (at - v) / bw;
            (-0.5 * z * z).exp()
        })
        .sum::<f64>()
        * norm
}

/// One mirrored kernel-density polygon per group, labeled along the x axis.
pub fn violin_chart(title: &str, y_label: &str, groups: &[(String, Vec<f64>)]) -> String {
    const EVAL_POINTS: usize = 81;
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    let prepared: Vec<(f64, f64, f64)> = groups
        .iter()
        .map(|(_, vals)| {
            let bw = silverman_bandwidth(vals);
            let (lo, hi) = data_range(vals.iter());
            y_lo = y_lo.min(lo - 3.0 * bw);
            y_hi = y_hi.max(hi + 3.0 * bw);
            (bw, lo - 3.0 * bw, hi + 3.0 * bw)
        })
        .collect();

    let x = Scale {
        lo: 0.0,
        hi: groups.len() as f64,
        px_lo: MARGIN_L,
        px_hi: WIDTH - MARGIN_R,
    };
    let y = Scale { lo: y_lo, hi: y_hi, px_lo: HEIGHT - MARGIN_B, px_hi: MARGIN_T };

    let mut s = open_svg(title);
    s.push_str("<desc>Gaussian kernel density, Silverman bandwidth, mirrored</desc>\n");
    let half_slot = 0.38;
    for (i, ((label, vals), (bw, g_lo, g_hi))) in groups.iter().zip(&prepared).enumerate() {
        let center = i as f64 + 0.5;
        let dens: Vec<(f64, f64)> = (0..EVAL_POINTS)
            .map(|k| {
                let at = g_lo + (g_hi - g_lo) * k as f64 / (EVAL_POINTS - 1) as f64;
                (at, kde(vals, at, *bw))
            })
            .collect();
        let peak = dens.iter().map(|(_, d)| *d).fold(f64::MIN, f64::max).max(f64::MIN_POSITIVE);
        let mut pts = String::new();
        for (at, d) in &dens {
            let _ = write!(
                pts,
                "{:.2},{:.2} ",
                x.map(center - half_slot * d / peak),
                y.map(*at)
            );
        }
        for (at, d) in dens.iter().rev() {
            let _ = write!(
                pts,
                "{:.2},{:.2} ",
                x.map(center + half_slot * d / peak),
                y.map(*at)
            );
        }
        pts.pop();
        let _ = writeln!(
            s,
            "<polygon class=\"violin\" points=\"{pts}\" fill=\"{c}\" fill-opacity=\"0.55\" \
             stroke=\"{c}\" stroke-width=\"1\"/>",
            c = PALETTE[i % PALETTE.len()]
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"12\">{}</text>",
            x.map(center),
            HEIGHT - MARGIN_B + 18.0,
            escape(label)
        );
    }
    // y axis only; group labels replace x ticks
    for i in 0..=4 {
        let yv = y.lo + i as f64 / 4.0 * (y.hi - y.lo);
        let yp = y.map(yv);
        let _ = writeln!(
            s,
            "<line x1=\"{l}\" y1=\"{yp:.2}\" x2=\"{l2}\" y2=\"{yp:.2}\" stroke=\"black\"/>\n\
             <text x=\"{tx}\" y=\"{typ:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" \
             font-size=\"11\">{lab}</text>",
            l = MARGIN_L,
            l2 = MARGIN_L - 5.0,
            tx = MARGIN_L - 8.0,
            typ = yp + 4.0,
            lab = fmt_tick(yv)
        );
    }
    let _ = writeln!(
        s,
        "<line x1=\"{l}\" y1=\"{t}\" x2=\"{l}\" y2=\"{b}\" stroke=\"black\"/>\n\
         <line x1=\"{l}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>",
        l = MARGIN_L,
        r = WIDTH - MARGIN_R,
        t = MARGIN_T,
        b = HEIGHT - MARGIN_B
    );
    let _ = writeln!(
        s,
        "<text x=\"18\" y=\"{mid}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"13\" transform=\"rotate(-90 18 {mid})\">{lab}</text>",
        mid = (MARGIN_T + HEIGHT - MARGIN_B) / 2.0,
        lab = escape(y_label)
    );
    s.push_str("</svg>\n");
    s
}
