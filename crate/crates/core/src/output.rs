//! CSV, JSON and DOT renderings of a centrality report.

use std::fmt::Write;

use serde::Serialize;

use crate::centrality::{CentralityReport, EdgeCentralityRecord};
use crate::graph::Graph;

/// Formats `x` with 12 significant digits in the style of `%.12g`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let sci = format!("{:.11e}", x);
    // Rounding can carry into the next decade, so take the exponent from
    // the rounded scientific form.
    let exp = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse::<i32>().ok())
        .unwrap_or(exp);
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    } else {
        let (mantissa, e) = sci.split_once('e').expect("scientific format");
        format!("{}e{}", trim_zeros(mantissa), e)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn rounded(x: f64) -> f64 {
    fmt_num(x).parse().unwrap_or(x)
}

fn opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

/// Which optional parts of a record are rendered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub bounds: bool,
    pub regularized: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub u: u64,
    pub v: u64,
    pub is_cut: bool,
    pub centrality: f64,
    pub lower_bound: Option<f64>,
    pub upper_bound: Option<f64>,
    pub component_sizes: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularized: Option<f64>,
}

impl OutputRecord {
    pub fn new(g: &Graph, rec: &EdgeCentralityRecord, opts: RenderOptions) -> Self {
        let bound = |b: Option<f64>| if opts.bounds { b.map(rounded) } else { None };
        OutputRecord {
            u: g.label(rec.edge.u),
            v: g.label(rec.edge.v),
            is_cut: rec.is_cut,
            centrality: rounded(rec.c),
            lower_bound: bound(rec.lower),
            upper_bound: bound(rec.upper),
            component_sizes: rec.component_sizes,
            regularized: if opts.regularized {
                rec.regularized.map(rounded)
            } else {
                None
            },
        }
    }
}

pub fn to_csv(g: &Graph, report: &CentralityReport, opts: RenderOptions) -> String {
    let mut out = String::from("u,v,is_cut,centrality,lower,upper,m1,m2");
    if opts.regularized {
        out.push_str(",c_r");
    }
    out.push('\n');
    for rec in &report.records {
        let r = OutputRecord::new(g, rec, opts);
        let (m1, m2) = r
            .component_sizes
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .unwrap_or_default();
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.u,
            r.v,
            r.is_cut,
            fmt_num(rec.c),
            opt(r.lower_bound),
            opt(r.upper_bound),
            m1,
            m2
        );
        if opts.regularized {
            let _ = write!(out, ",{}", opt(r.regularized));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonReport {
    kappa: f64,
    lambda_min: f64,
    lambda_second: f64,
    edges: Vec<OutputRecord>,
}

pub fn to_json(g: &Graph, report: &CentralityReport, opts: RenderOptions) -> String {
    let doc = JsonReport {
        kappa: rounded(report.kappa),
        lambda_min: rounded(report.lambda_min),
        lambda_second: rounded(report.lambda_second),
        edges: report
            .records
            .iter()
            .map(|r| OutputRecord::new(g, r, opts))
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// Blue to red through purple, `t` in `[0, 1]`.
fn ramp(t: f64) -> String {
    let t = t.clamp(0.0, 1.0);
    let r = (40.0 + 215.0 * t).round() as u8;
    let b = (255.0 - 215.0 * t).round() as u8;
    format!("#{r:02x}30{b:02x}")
}

/// Undirected DOT graph with one statement per edge. Edge pen width and
/// colour grow with centrality; loops are drawn plain.
pub fn to_dot(g: &Graph, report: &CentralityReport) -> String {
    let (lo, hi) = report
        .records
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.c), hi.max(r.c))
        });
    let span = hi - lo;
    let mut out = String::from("graph kemeny {\n  node [shape=circle];\n");
    let mut records: Vec<_> = report.records.iter().collect();
    records.sort_by_key(|r| r.edge);
    for rec in records {
        let t = if span > 0.0 { (rec.c - lo) / span } else { 1.0 };
        let _ = writeln!(
            out,
            "  {} -- {} [penwidth={:.2}, color=\"{}\", label=\"{}\"];",
            g.label(rec.edge.u),
            g.label(rec.edge.v),
            1.0 + 7.0 * t,
            ramp(t),
            fmt_num(rec.c)
        );
    }
    for (k, _) in g.loops() {
        let _ = writeln!(out, "  {0} -- {0} [color=\"#999999\"];", g.label(k));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::{analyze_graph, AnalyzeOptions};

    #[test]
    fn twelve_digits() {
        assert_eq!(fmt_num(41.5 / 3.0), "13.8333333333");
        assert_eq!(fmt_num(25.0 / 26.0), "0.961538461538");
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(-2.5), "-2.5");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(123456789012345.0), "1.23456789012e14");
        assert_eq!(fmt_num(1.5e-7), "1.5e-7");
        assert_eq!(fmt_num(999999999999.9), "1e12");
        assert_eq!(fmt_num(0.00012345), "0.00012345");
    }

    fn star_report() -> (Graph, CentralityReport) {
        let e: Vec<_> = (0..7).map(|i| (i, 7)).collect();
        let g = Graph::from_unit_edges(8, &e)
            .unwrap()
            .add_loop(0, 1.0)
            .unwrap();
        let r = analyze_graph(&g, &AnalyzeOptions::default()).unwrap();
        (g, r)
    }

    #[test]
    fn csv_layout() {
        let (g, r) = star_report();
        let csv = to_csv(
            &g,
            &r,
            RenderOptions {
                bounds: true,
                regularized: false,
            },
        );
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "u,v,is_cut,centrality,lower,upper,m1,m2");
        assert_eq!(lines.len(), 8);
        assert!(lines[1..].iter().all(|l| l.split(',').count() == 8));
        let plain = to_csv(&g, &r, RenderOptions::default());
        assert!(plain.lines().nth(1).unwrap().contains(",,,"));
    }

    #[test]
    fn json_parses() {
        let (g, r) = star_report();
        let v: serde_json::Value =
            serde_json::from_str(&to_json(&g, &r, RenderOptions::default())).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 7);
    }

    #[test]
    fn dot_has_one_statement_per_edge() {
        let (g, r) = star_report();
        let dot = to_dot(&g, &r);
        assert_eq!(dot.matches(" -- ").count(), 8);
        assert!(dot.starts_with("graph kemeny {"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
