//! Deterministic report rendering: JSON with floats rounded to 12
//! significant digits (stable across runs for golden-file comparison) and
//! RFC-4180 CSV with CRLF records.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{json, Value};

use crate::conditions::{ConditionReport, Verdict};
use crate::equivalence::EquivalenceReport;
use crate::limit::{LimitEstimate, SideCondition};
use crate::summators::{MeanTrace, Method};

/// Round to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let exp = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - exp);
    (x * factor).round() / factor
}

fn significant_digits(rendered: &str) -> usize {
    let mantissa = rendered.split(['e', 'E']).next().unwrap_or(rendered);
    mantissa
        .chars()
        .filter(|c| c.is_ascii_digit())
        .skip_while(|&c| c == '0')
        .count()
}

/// Decimal form with at most 12 significant digits: the shortest round-trip
/// form of the rounded value when that is already short enough, scientific
/// notation otherwise (rounding alone can leave a representation artifact
/// like `...96000 01` in the shortest form).
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        let rounded = round_sig(x);
        let plain = format!("{rounded}");
        if significant_digits(&plain) <= 12 {
            plain
        } else {
            format!("{rounded:.11e}")
        }
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

/// Compact JSON formatter that rounds every float to 12 significant digits
/// and renders non-finite values as null.
struct SigFigFormatter;

impl Formatter for SigFigFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        if value.is_finite() {
            write!(writer, "{}", fmt_f64(value))
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.write_f64(writer, value as f64)
    }
}

/// Serialize any JSON value with the rounding formatter, newline-terminated.
pub fn to_json_string(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFigFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    out.push(b'\n');
    String::from_utf8(out).expect("serializer emits UTF-8")
}

/// One CSV record; fields must not contain commas, quotes or line breaks.
pub fn csv_record(fields: &[String]) -> String {
    debug_assert!(fields
        .iter()
        .all(|f| !f.contains([',', '"', '\n', '\r'])));
    let mut line = fields.join(",");
    line.push_str("\r\n");
    line
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn method_params(method: &Method) -> Value {
    match method {
        Method::Riesz { beta } | Method::Cesaro { beta } => json!({ "beta": beta }),
        Method::Gamma { kappa } => json!({ "kappa": kappa }),
        Method::Abel | Method::Lebesgue => json!({}),
    }
}

/// The summation-result object: method, params, value, error, flags.
pub fn estimate_json(
    method: &Method,
    estimate: &LimitEstimate,
    side_condition: Option<SideCondition>,
) -> Value {
    let mut obj = json!({
        "method": method.name(),
        "params": method_params(method),
        "value": [estimate.value.re, estimate.value.im],
        "error": estimate.error_estimate,
        "converged": estimate.converged,
        "certified": estimate.certified,
    });
    if let Some(side) = side_condition {
        obj["side_condition"] = json!(side.as_str());
    }
    obj
}

pub fn condition_json(report: &ConditionReport) -> Value {
    json!({
        "condition": report.condition.as_str(),
        "measured_constant": report.measured_constant,
        "fitted_exponent": report.fitted_exponent,
        "verdict": verdict_str(report.verdict),
        "probe_range": [report.probe_range.0, report.probe_range.1],
    })
}

pub fn equivalence_json(report: &EquivalenceReport) -> Value {
    let estimates: Vec<Value> = report
        .estimates
        .iter()
        .map(|e| estimate_json(&e.method, &e.estimate, e.side_condition))
        .collect();
    let agreement: Vec<Value> = report
        .agreement
        .iter()
        .map(|p| {
            json!({
                "a": p.a.to_string(),
                "b": p.b.to_string(),
                "difference": p.difference,
            })
        })
        .collect();
    json!({
        "series": report.series,
        "tolerance": report.tolerance,
        "growth": condition_json(&report.growth),
        "estimates": estimates,
        "agreement": agreement,
        "verdict": report.verdict.as_str(),
    })
}

/// CSV rows for a trace: `parameter,re,im,certified` under a header.
pub fn trace_csv(trace: &MeanTrace) -> String {
    let mut out = csv_record(&[
        "parameter".into(),
        "re".into(),
        "im".into(),
        "certified".into(),
    ]);
    for s in &trace.samples {
        out.push_str(&csv_record(&[
            fmt_f64(s.parameter),
            fmt_f64(s.value.re),
            fmt_f64(s.value.im),
            s.cert.is_certified().to_string(),
        ]));
    }
    out
}

/// Plot-ready summary table of equivalence reports, one row per estimate.
pub fn equivalence_csv(reports: &[EquivalenceReport]) -> String {
    let mut out = csv_record(&[
        "series".into(),
        "method".into(),
        "parameter".into(),
        "value_re".into(),
        "value_im".into(),
        "error".into(),
        "converged".into(),
        "certified".into(),
        "growth_verdict".into(),
        "verdict".into(),
    ]);
    for report in reports {
        for e in &report.estimates {
            out.push_str(&csv_record(&[
                report.series.clone(),
                e.method.name().to_string(),
                e.method.parameter().map(fmt_f64).unwrap_or_default(),
                fmt_f64(e.estimate.value.re),
                fmt_f64(e.estimate.value.im),
                fmt_f64(e.estimate.error_estimate),
                e.estimate.converged.to_string(),
                e.estimate.certified.to_string(),
                verdict_str(report.growth.verdict).to_string(),
                report.verdict.as_str().to_string(),
            ]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(fmt_f64(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_f64(0.5), "0.5");
        assert_eq!(fmt_f64(-123456.789012345), "-123456.789012");
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(1e-13), "0.0000000000001");
        // rounding artifacts in the shortest form fall back to scientific
        assert_eq!(fmt_f64(1.6958101589600001e-12), "1.69581015896e-12");
        for x in [1.0 / 3.0, 2.0f64.sqrt() * 1e-9, -9.87654321098765e20] {
            assert!(significant_digits(&fmt_f64(x)) <= 12, "{}", fmt_f64(x));
        }
    }

    #[test]
    fn json_floats_round_consistently() {
        let v = json!({ "x": std::f64::consts::PI, "bad": f64::NAN });
        let s = to_json_string(&v);
        assert!(s.contains("3.14159265359"));
        assert!(s.contains("\"bad\":null"));
        assert!(s.ends_with('\n'));
    }

    #[test]
    fn csv_records_use_crlf() {
        let line = csv_record(&["a".into(), "1".into()]);
        assert_eq!(line, "a,1\r\n");
    }
}
