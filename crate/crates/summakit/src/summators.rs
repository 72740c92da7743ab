//! Per-parameter means of the summation methods.
//!
//! Finite means (Riesz, Cesaro) are evaluated exactly. Infinite means (Abel,
//! kernel-weighted, Lebesgue) are truncated by a shared engine that measures
//! the growth of the coefficient stream as it sums and stops as soon as a
//! derivable tail bound drops below tolerance; otherwise it falls back to an
//! empirical stabilization test and marks the sample uncertified.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::{kernel_tail_constant, YoungKernel};
use crate::series::{trig_to_series, SeriesSpec, TrigSeries};

/// A summation method with its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    /// Weights `(1 - node/x)^beta` over nodes below `x`; limit as `x -> inf`.
    Riesz { beta: f64 },
    /// Binomial-weighted coefficient averages; integer nodes only.
    Cesaro { beta: f64 },
    /// Weights `exp(-node * y)`; limit as `y -> 0+`.
    Abel,
    /// Weights `gamma_kappa(node * h)`; limit as `h -> 0+`.
    Gamma { kappa: f64 },
    /// Order-1 kernel mean plus the side requirement that the integrated
    /// series converges; values coincide with `Gamma { kappa: 1 }`.
    Lebesgue,
}

/// Which way the parameter runs toward the limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ToInfinity,
    ToZero,
}

impl Method {
    pub fn direction(&self) -> Direction {
        match self {
            Method::Riesz { .. } | Method::Cesaro { .. } => Direction::ToInfinity,
            Method::Abel | Method::Gamma { .. } | Method::Lebesgue => Direction::ToZero,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Method::Riesz { .. } => "riesz",
            Method::Cesaro { .. } => "cesaro",
            Method::Abel => "abel",
            Method::Gamma { .. } => "gamma",
            Method::Lebesgue => "lebesgue",
        }
    }

    pub fn parameter(&self) -> Option<f64> {
        match self {
            Method::Riesz { beta } | Method::Cesaro { beta } => Some(*beta),
            Method::Gamma { kappa } => Some(*kappa),
            Method::Abel | Method::Lebesgue => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Riesz { beta } => write!(f, "riesz(beta={beta})"),
            Method::Cesaro { beta } => write!(f, "cesaro(beta={beta})"),
            Method::Abel => write!(f, "abel"),
            Method::Gamma { kappa } => write!(f, "gamma(kappa={kappa})"),
            Method::Lebesgue => write!(f, "lebesgue"),
        }
    }
}

/// Truncation status of one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleCert {
    /// An analytic tail bound below tolerance held at the stopping index.
    Certified { bound: f64 },
    /// Stopped because 20 consecutive increments moved the partial mean by
    /// less than a tenth of the tolerance; no bound claimed.
    Stabilized,
    /// The enumeration budget ran out first; no accuracy claim.
    Exhausted,
}

impl SampleCert {
    pub fn is_certified(&self) -> bool {
        matches!(self, SampleCert::Certified { .. })
    }
}

/// One (parameter, mean value) sample.
#[derive(Debug, Clone, Copy)]
pub struct TraceSample {
    pub parameter: f64,
    pub value: Complex64,
    pub cert: SampleCert,
}

/// Ordered samples of one method along a schedule toward its limit point.
#[derive(Debug, Clone)]
pub struct MeanTrace {
    pub method: Method,
    pub direction: Direction,
    pub samples: Vec<TraceSample>,
}

/// Options for the truncation engine.
#[derive(Debug, Clone, Copy)]
pub struct TruncationOptions {
    /// Per-sample absolute tolerance for certified tail bounds.
    pub tolerance: f64,
}

impl Default for TruncationOptions {
    fn default() -> Self {
        TruncationOptions { tolerance: 1e-9 }
    }
}

/// Running growth measurements of the enumerated prefix.
#[derive(Default)]
struct GrowthState {
    /// Sum of coefficient magnitudes.
    abs_sum: f64,
    /// Sum of node-weighted magnitudes.
    weighted_abs: f64,
    /// sup of `abs_sum / max(node, 1)`.
    envelope: f64,
    /// sup of `weighted_abs / max(node, 1)`.
    weighted_envelope: f64,
}

impl GrowthState {
    fn update(&mut self, node: f64, mag: f64) {
        self.abs_sum += mag;
        self.weighted_abs += node * mag;
        let scale = node.max(1.0);
        self.envelope = self.envelope.max(self.abs_sum / scale);
        self.weighted_envelope = self.weighted_envelope.max(self.weighted_abs / scale);
    }
}

/// Shared truncation loop.
///
/// `weight` evaluates the method weight at a node; `tail_bound` turns the
/// measured growth state and the current node into an upper bound for the
/// remaining tail (infinity when no bound is derivable there).
fn sum_with_tail_control(
    series: &SeriesSpec,
    tolerance: f64,
    mut weight: impl FnMut(f64) -> Result<Complex64>,
    tail_bound: impl Fn(&GrowthState, f64) -> f64,
) -> Result<(Complex64, SampleCert)> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last_contrib = Complex64::new(0.0, 0.0);
    let mut calm = 0usize;
    let mut state = GrowthState::default();
    let mut seen = 0usize;
    let calm_threshold = tolerance / 10.0;
    // Set once stabilization fires while a finite bound is still shrinking:
    // (index, bound) at that moment. The analytic route gets a bounded
    // lookahead to certify before the stabilized stop is accepted.
    let mut pending: Option<(usize, f64)> = None;

    let mut iter = series.terms();
    for term in iter.by_ref() {
        let term = term?;
        let w = weight(term.node)?;
        let contrib = term.coeff * w;
        sum += contrib;
        last_contrib = contrib;
        state.update(term.node, term.coeff.norm());
        seen += 1;

        let bound = if seen >= 16 {
            let bound = tail_bound(&state, term.node);
            if bound <= tolerance {
                return Ok((sum, SampleCert::Certified { bound }));
            }
            bound
        } else {
            f64::INFINITY
        };
        if contrib.norm() < calm_threshold {
            calm += 1;
        } else {
            calm = 0;
            pending = None;
        }
        if calm >= 20 && seen >= 64 {
            match pending {
                None => {
                    if !bound.is_finite() {
                        return Ok((sum, SampleCert::Stabilized));
                    }
                    pending = Some((seen, bound));
                }
                Some((calm_at, bound_then)) if seen >= 2 * calm_at => {
                    if bound > 0.3 * bound_then {
                        // bound decays too slowly to certify; accept the stop
                        return Ok((sum, SampleCert::Stabilized));
                    }
                    pending = Some((seen, bound));
                }
                Some(_) => {}
            }
        }
    }

    // The data itself may simply end; then the sum is complete and exact.
    let data_complete = series
        .horizon()
        .is_some_and(|h| h <= series.budget());
    if data_complete {
        return Ok((sum, SampleCert::Certified { bound: 0.0 }));
    }
    // Budget ran out mid-stream: return the midpoint of the last two partial
    // sums, which cancels the leading oscillation of slowly decaying tails.
    Ok((sum - 0.5 * last_contrib, SampleCert::Exhausted))
}

/// Riesz mean: `sum_{node <= x} c_n (1 - node/x)^beta`, an exact finite sum.
pub fn riesz_mean(series: &SeriesSpec, beta: f64, x: f64) -> Result<Complex64> {
    if !(beta >= 0.0) || !beta.is_finite() {
        return Err(Error::argument(format!("riesz order must be >= 0, got {beta}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::argument(format!("riesz point must be > 0, got {x}")));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut iter = series.terms();
    for term in iter.by_ref() {
        let term = term?;
        if term.node > x {
            return Ok(acc);
        }
        // powf(0, 0) = 1 keeps beta = 0 equal to the plain partial sum
        acc += term.coeff * (1.0 - term.node / x).powf(beta);
    }
    if iter.exhausted() {
        return Err(Error::horizon(format!(
            "series {:?} ended before nodes exceeded x = {x}",
            series.name()
        )));
    }
    Ok(acc)
}

/// Cesaro mean of order `n_mean`: binomial-type weighted coefficient average.
///
/// The weight numbers follow the multiplicative recurrence
/// `A_m = A_{m-1} (m + beta) / m`, avoiding factorial overflow.
pub fn cesaro_mean(series: &SeriesSpec, beta: f64, n_mean: usize) -> Result<Complex64> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::argument(format!("cesaro order must be > 0, got {beta}")));
    }
    if n_mean >= series.effective_limit() {
        return Err(Error::horizon(format!(
            "cesaro mean of order {n_mean} exceeds the enumeration limit {}",
            series.effective_limit()
        )));
    }
    let mut weights = vec![1.0; n_mean + 1];
    for m in 1..=n_mean {
        weights[m] = weights[m - 1] * (m as f64 + beta) / m as f64;
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, term) in series.terms().take(n_mean + 1).enumerate() {
        let term = term?;
        if term.node != k as f64 {
            return Err(Error::inapplicable(format!(
                "cesaro means need integer nodes; node {} is {}",
                k, term.node
            )));
        }
        acc += term.coeff * weights[n_mean - k];
    }
    Ok(acc / weights[n_mean])
}

/// Abel mean: `sum c_n exp(-node * y)`.
///
/// The tail bound integrates the measured linear envelope of the magnitude
/// partial sums against the exponential weight; it certifies once
/// `envelope * (X + 1/y) * exp(-X y)` drops below tolerance.
pub fn abel_mean(
    series: &SeriesSpec,
    y: f64,
    opts: &TruncationOptions,
) -> Result<(Complex64, SampleCert)> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::argument(format!("abel parameter must be > 0, got {y}")));
    }
    sum_with_tail_control(
        series,
        opts.tolerance,
        |node| Ok(Complex64::new((-node * y).exp(), 0.0)),
        |state, node| {
            if state.abs_sum == 0.0 {
                return 0.0;
            }
            if node * y < 1.0 {
                return f64::INFINITY;
            }
            state.envelope * (node + 1.0 / y) * (-node * y).exp()
        },
    )
}

/// Kernel-weighted mean: `sum c_n gamma_kappa(node * h)` for order >= 1.
///
/// The tail bound combines the kernel envelope `K / (node h)` with the
/// measured node-weighted growth constant; absent a usable bound the engine
/// falls back to stabilization.
pub fn gamma_mean(
    series: &SeriesSpec,
    kappa: f64,
    h: f64,
    opts: &TruncationOptions,
) -> Result<(Complex64, SampleCert)> {
    if !(kappa >= 1.0) || !kappa.is_finite() {
        return Err(Error::inapplicable(format!(
            "kernel-weighted summation needs order >= 1, got {kappa}"
        )));
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::argument(format!("scale must be > 0, got {h}")));
    }
    let kernel = YoungKernel::new(kappa)?;
    let tail_k = kernel_tail_constant(kappa);
    sum_with_tail_control(
        series,
        opts.tolerance,
        |node| Ok(Complex64::new(kernel.eval(node * h)?, 0.0)),
        |state, node| {
            if state.abs_sum == 0.0 {
                return 0.0;
            }
            if node * h < 1.0 || node <= 0.0 {
                return f64::INFINITY;
            }
            2.0 * state.weighted_envelope * tail_k / (h * node)
        },
    )
}

/// General Lebesgue-type mean; values equal the order-1 kernel mean.
pub fn lebesgue_general_mean(
    series: &SeriesSpec,
    h: f64,
    opts: &TruncationOptions,
) -> Result<(Complex64, SampleCert)> {
    gamma_mean(series, 1.0, h, opts)
}

/// Symmetric-difference mean of the integrated trigonometric series:
/// `a0/2 + sum (a_n cos n x0 + b_n sin n x0) sin(nh)/(nh)`.
///
/// Even in `h`, so negative scales evaluate at `|h|`.
pub fn lebesgue_mean(
    trig: &TrigSeries,
    h: f64,
    opts: &TruncationOptions,
) -> Result<(f64, SampleCert)> {
    if h == 0.0 || !h.is_finite() {
        return Err(Error::argument("symmetric scale must be finite and nonzero"));
    }
    let derived = trig_to_series(trig);
    let (value, cert) = gamma_mean(&derived, 1.0, h.abs(), opts)?;
    Ok((value.re, cert))
}

/// Evaluate one method at one parameter value.
pub fn mean_at(
    series: &SeriesSpec,
    method: Method,
    parameter: f64,
    opts: &TruncationOptions,
) -> Result<(Complex64, SampleCert)> {
    match method {
        Method::Riesz { beta } => Ok((
            riesz_mean(series, beta, parameter)?,
            SampleCert::Certified { bound: 0.0 },
        )),
        Method::Cesaro { beta } => {
            if parameter < 0.0 || parameter.fract() != 0.0 {
                return Err(Error::argument(format!(
                    "cesaro schedule points must be non-negative integers, got {parameter}"
                )));
            }
            Ok((
                cesaro_mean(series, beta, parameter as usize)?,
                SampleCert::Certified { bound: 0.0 },
            ))
        }
        Method::Abel => abel_mean(series, parameter, opts),
        Method::Gamma { kappa } => gamma_mean(series, kappa, parameter, opts),
        Method::Lebesgue => lebesgue_general_mean(series, parameter, opts),
    }
}

/// Sample a method along a schedule, collecting certifications.
///
/// The schedule must move strictly toward the method's limit point: upward
/// for Riesz and Cesaro, downward toward zero otherwise.
pub fn trace(
    series: &SeriesSpec,
    method: Method,
    schedule: &[f64],
    opts: &TruncationOptions,
) -> Result<MeanTrace> {
    if schedule.is_empty() {
        return Err(Error::argument("trace schedule is empty"));
    }
    let direction = method.direction();
    for w in schedule.windows(2) {
        let ok = match direction {
            Direction::ToInfinity => w[1] > w[0],
            Direction::ToZero => w[1] < w[0],
        };
        if !ok {
            return Err(Error::argument(format!(
                "schedule must be strictly monotone toward the limit, saw {} then {}",
                w[0], w[1]
            )));
        }
    }
    if direction == Direction::ToZero && schedule.iter().any(|&p| !(p > 0.0)) {
        return Err(Error::argument("limit-to-zero schedules must stay positive"));
    }
    let mut samples = Vec::with_capacity(schedule.len());
    for &parameter in schedule {
        let (value, cert) = mean_at(series, method, parameter, opts)?;
        samples.push(TraceSample {
            parameter,
            value,
            cert,
        });
    }
    Ok(MeanTrace {
        method,
        direction,
        samples,
    })
}
