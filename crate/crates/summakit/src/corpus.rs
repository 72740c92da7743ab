//! Builtin reference series with known summability behavior.
//!
//! Every entry is generator-backed (no stored data) and deterministic, so
//! repeated fetches stream identical coefficients.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{trig_to_series, NodeSequence, RealFn, SeriesSpec, TrigSeries};

/// Names accepted by [`corpus_get`], in reporting order.
pub const CORPUS_NAMES: [&str; 6] = [
    "grandi",
    "log2",
    "basel",
    "abel_only",
    "sawtooth_quarter",
    "zero",
];

/// Fetch a builtin series by name.
///
/// * `grandi` — alternating ones; every method here assigns 1/2.
/// * `log2` — alternating harmonic; sums to ln 2.
/// * `basel` — inverse squares; sums to pi^2/6.
/// * `abel_only` — alternating linear growth; Abel-summable to -1/4 but not
///   Cesaro-summable of order 1.
/// * `sawtooth_quarter` — the sawtooth sine series evaluated at pi/2; the
///   alternating odd reciprocals, summing to pi/4.
/// * `zero` — all coefficients zero.
pub fn corpus_get(name: &str) -> Result<SeriesSpec> {
    let coeffs: Arc<dyn Fn(usize) -> Complex64 + Send + Sync> = match name {
        "grandi" => Arc::new(|n| Complex64::new(if n % 2 == 0 { 1.0 } else { -1.0 }, 0.0)),
        "log2" => Arc::new(|n| {
            if n == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                Complex64::new(sign / n as f64, 0.0)
            }
        }),
        "basel" => Arc::new(|n| {
            if n == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(1.0 / (n as f64 * n as f64), 0.0)
            }
        }),
        "abel_only" => Arc::new(|n| {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new(sign * n as f64, 0.0)
        }),
        "sawtooth_quarter" => {
            let trig = corpus_trig("sawtooth_quarter").expect("registered");
            return Ok(trig_to_series(&trig));
        }
        "zero" => Arc::new(|_| Complex64::new(0.0, 0.0)),
        other => return Err(Error::UnknownSeries(other.to_string())),
    };
    Ok(SeriesSpec::new(name, NodeSequence::integers(), coeffs, None))
}

/// The trigonometric form of a builtin entry, when it has one.
pub fn corpus_trig(name: &str) -> Option<TrigSeries> {
    match name {
        "sawtooth_quarter" => {
            let a: RealFn = Arc::new(|_| 0.0);
            let b: RealFn = Arc::new(|n| if n == 0 { 0.0 } else { 1.0 / n as f64 });
            Some(TrigSeries::new("sawtooth_quarter", a, b, FRAC_PI_2, None))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grandi_leading_coefficients() {
        let s = corpus_get("grandi").unwrap();
        let signs: Vec<f64> = (0..4).map(|n| s.coeff(n).re).collect();
        assert_eq!(signs, vec![1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn unknown_name_is_a_lookup_error() {
        assert!(matches!(
            corpus_get("nope"),
            Err(Error::UnknownSeries(_))
        ));
    }

    #[test]
    fn log2_partial_sums_approach_ln2() {
        let s = corpus_get("log2").unwrap();
        // averaged pair of consecutive partial sums kills the alternating tail
        let mut acc = 0.0;
        let mut prev = 0.0;
        for n in 1..=1_000_001usize {
            prev = acc;
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign / n as f64;
        }
        let averaged = 0.5 * (acc + prev);
        assert!((averaged - std::f64::consts::LN_2).abs() < 1e-9);
        assert!((s.coeff(1).re - 1.0).abs() < 1e-15);
        assert!((s.coeff(2).re + 0.5).abs() < 1e-15);
    }

    #[test]
    fn abel_only_closed_form_at_half() {
        // sum (-1)^n n z^n = -z/(1+z)^2 at z = 1/2 gives -2/9
        let s = corpus_get("abel_only").unwrap();
        let z: f64 = 0.5;
        let mut acc = 0.0;
        for n in 0..200 {
            acc += s.coeff(n).re * z.powi(n as i32);
        }
        assert!((acc + 2.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn corpus_fetches_are_deterministic() {
        for name in CORPUS_NAMES {
            let s1 = corpus_get(name).unwrap();
            let s2 = corpus_get(name).unwrap();
            for n in (0..5000).step_by(97) {
                assert_eq!(s1.coeff(n), s2.coeff(n), "{name} at {n}");
                assert_eq!(s1.node(n), s2.node(n), "{name} at {n}");
            }
        }
    }
}
