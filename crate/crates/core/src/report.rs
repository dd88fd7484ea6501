//! Text, JSON and CSV renderings of command results.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::expr::Value;
use crate::kinematics::{
    fmt_sig, BoundValue, KinematicParams, MassShellCheck, SweepRow, UncertaintyBounds, SWEEP_COLUMNS,
};
use crate::ncpoly::{Basis, Sector};
use crate::suite::SuiteReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parameter(format!("unknown format `{s}`; expected text, json or csv"))),
        }
    }
}

/// Rounds every float to 12 significant digits so JSON output is stable.
fn rounded<T: Serialize>(v: &T) -> Json {
    fn walk(v: Json) -> Json {
        match v {
            Json::Number(n) if n.is_f64() => {
                let x = n.as_f64().unwrap_or_default();
                fmt_sig(x).parse::<f64>().ok().and_then(serde_json::Number::from_f64).map_or(Json::Null, Json::Number)
            }
            Json::Array(a) => Json::Array(a.into_iter().map(walk).collect()),
            Json::Object(o) => Json::Object(o.into_iter().map(|(k, v)| (k, walk(v))).collect()),
            v => v,
        }
    }
    walk(serde_json::to_value(v).unwrap_or(Json::Null))
}

fn pretty(v: &Json) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

pub fn eval(input: &str, basis: Basis, sector: Sector, value: &Value, format: Format) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Json => pretty(&json!({
            "expr": input,
            "basis": basis.name(),
            "sector": sector.name(),
            "kind": value.kind(),
            "rendering": value.render_ascii(),
        })),
        Format::Csv => csv_rows(
            &["expr", "basis", "sector", "kind", "rendering"],
            &[vec![input.into(), basis.name().into(), sector.name().into(), value.kind().into(), value.render_ascii()]],
        ),
    }
}

pub fn suite(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Text => report.render_text(),
        Format::Json => pretty(&rounded(report)),
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .records
                .iter()
                .map(|r| {
                    let status = if r.informational {
                        "info"
                    } else if r.pass {
                        "pass"
                    } else {
                        "fail"
                    };
                    vec![
                        r.suite.clone(),
                        r.preset.clone(),
                        r.check.clone(),
                        r.subject.clone(),
                        status.into(),
                        r.detail.clone(),
                    ]
                })
                .collect();
            csv_rows(&["suite", "preset", "check", "subject", "status", "detail"], &rows)
        }
    }
}

fn key_values(pairs: &[(String, f64)], warnings: &[String], format: Format) -> String {
    match format {
        Format::Text => {
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in pairs {
                let _ = writeln!(out, "{k:<width$}  {}", fmt_sig(*v));
            }
            for w in warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            out
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = pairs.iter().map(|(k, v)| vec![k.clone(), fmt_sig(*v)]).collect();
            rows.extend(warnings.iter().map(|w| vec!["warning".into(), w.clone()]));
            csv_rows(&["quantity", "value"], &rows)
        }
        Format::Json => unreachable!("structured reports serialize directly"),
    }
}

fn param_pairs(p: &KinematicParams) -> Vec<(String, f64)> {
    vec![
        ("kappa".into(), p.kappa),
        ("c".into(), p.c),
        ("hbar".into(), p.hbar),
        ("M".into(), p.mass),
        ("P".into(), p.pvec),
    ]
}

pub fn mass_shell(params: &KinematicParams, check: &MassShellCheck, format: Format) -> String {
    if format == Format::Json {
        return pretty(&rounded(&json!({ "params": rounded(params), "mass_shell": rounded(check) })));
    }
    let mut pairs = param_pairs(params);
    pairs.extend([
        ("exp(P0/2 kappa c)".into(), check.exp),
        ("P0".into(), check.p0),
        ("residual".into(), check.residual),
        ("relative residual".into(), check.relative),
        ("tolerance".into(), check.tolerance),
    ]);
    key_values(&pairs, &[], format)
}

/// Everything `numeric bounds` reports.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub params: KinematicParams,
    pub bounds: UncertaintyBounds,
    /// `Δp Δx` bound in the nonrelativistic limit.
    pub nonrel: f64,
    pub modified: Option<BoundValue>,
    pub sqrt: Option<f64>,
}

pub fn bounds(report: &BoundsReport, format: Format) -> String {
    if format == Format::Json {
        return pretty(&rounded(report));
    }
    let b = &report.bounds;
    let mut pairs = param_pairs(&report.params);
    for k in 0..3 {
        pairs.push((format!("dt dx{}", k + 1), b.time_space[k]));
    }
    pairs.push(("dp_k dx_k".into(), b.momentum_position));
    pairs.push(("dE dt".into(), b.energy_time));
    for k in 0..3 {
        pairs.push((format!("dp{} dt", k + 1), b.momentum_time[k]));
    }
    pairs.push(("nonrel dp dx".into(), report.nonrel));
    let mut warnings = b.warnings.clone();
    if let Some(m) = &report.modified {
        pairs.push(("modified dp dx".into(), m.value));
        warnings.extend(m.warnings.iter().cloned());
    }
    if let Some(s) = report.sqrt {
        pairs.push(("sqrt dp dx".into(), s));
    }
    let mut out = if format == Format::Text { format!("basis {}\n", b.basis) } else { String::new() };
    out.push_str(&key_values(&pairs, &warnings, format));
    out
}

pub fn sweep(rows: &[SweepRow], format: Format) -> String {
    match format {
        Format::Json => pretty(&rounded(&rows)),
        Format::Csv | Format::Text => {
            let data: Vec<Vec<String>> = rows
                .iter()
                .map(|r| [r.kappa, r.c, r.hbar, r.mass, r.pvec, r.value, r.residual].map(fmt_sig).to_vec())
                .collect();
            csv_rows(&SWEEP_COLUMNS, &data)
        }
    }
}
