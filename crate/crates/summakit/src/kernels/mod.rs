//! Young kernels: the integral cosine means
//! `gamma_k(x) = k * int_0^1 (1-u)^(k-1) cos(xu) du` for order `k >= 0`,
//! with `gamma_0(x) = cos x`.
//!
//! These kernels weight the terms of a series in the Riemann-type summation
//! methods: order 1 is `sin x / x`, order 2 the squared half-angle sinc.
//! Evaluation dispatches between closed forms, a power series for small
//! arguments, a stable upward recurrence in the order for large arguments,
//! and a panel quadrature that serves as an independent slow path.

pub mod gauss;

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

/// Argument below which the power series is used for every order.
const SERIES_CUTOFF: f64 = 8.0;
/// Laguerre order for the fractional-order tail integral.
const LAGUERRE_POINTS: usize = 64;
/// Gauss-Legendre points per oscillation panel.
const PANEL_POINTS: usize = 16;

/// Controls for the panel quadrature path.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    /// Panels per half oscillation of `cos(xu)`; 1 already isolates sign changes.
    pub panels_per_half_period: usize,
    /// Absolute accuracy target; evaluation errors out when unreachable.
    pub tolerance: f64,
    /// Hard cap on the panel count (guards absurd arguments).
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            panels_per_half_period: 1,
            tolerance: 1e-10,
            max_panels: 4_000_000,
        }
    }
}

/// An integral cosine mean of fixed order.
#[derive(Debug, Clone)]
pub struct YoungKernel {
    kappa: f64,
    config: QuadratureConfig,
}

impl YoungKernel {
    pub fn new(kappa: f64) -> Result<Self> {
        Self::with_config(kappa, QuadratureConfig::default())
    }

    pub fn with_config(kappa: f64, config: QuadratureConfig) -> Result<Self> {
        if !kappa.is_finite() || kappa < 0.0 {
            return Err(Error::argument(format!(
                "kernel order must be finite and non-negative, got {kappa}"
            )));
        }
        if config.panels_per_half_period == 0 {
            return Err(Error::argument("panels_per_half_period must be at least 1"));
        }
        Ok(YoungKernel { kappa, config })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Evaluate the kernel at `x >= 0`.
    ///
    /// Orders 0, 1 and 2 use their closed forms; other orders use the power
    /// series below [`SERIES_CUTOFF`] and an order-recurrence seeded by either
    /// the order-1 closed form (integer orders) or the fractional-part kernel
    /// (fractional orders) above it.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::argument(format!(
                "kernel argument must be finite and non-negative, got {x}"
            )));
        }
        if x == 0.0 {
            return Ok(1.0);
        }
        let k = self.kappa;
        if k == 0.0 {
            return Ok(x.cos());
        }
        if k == 1.0 {
            return Ok(x.sin() / x);
        }
        if k == 2.0 {
            let s = (0.5 * x).sin() / (0.5 * x);
            return Ok(s * s);
        }
        if x <= SERIES_CUTOFF {
            return Ok(series_eval(k, x));
        }
        if x > k + 4.0 {
            if k.fract() == 0.0 {
                return Ok(integer_recurrence(k as u32, x));
            }
            return Ok(fractional_eval(k, x));
        }
        // Large order close to the argument: recurrence loses its contraction,
        // fall back to the panel path (the weight is smooth there).
        self.eval_quadrature(x)
    }

    /// Evaluate by the panel scheme regardless of order: oscillation-sized
    /// Gauss panels away from `u = 1` plus an exact endpoint expansion that
    /// absorbs the `(1-u)^(k-1)` factor.
    pub fn eval_quadrature(&self, x: f64) -> Result<f64> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::argument(format!(
                "kernel argument must be finite and non-negative, got {x}"
            )));
        }
        if x == 0.0 {
            return Ok(1.0);
        }
        let k = self.kappa;
        if k == 0.0 {
            return Ok(x.cos());
        }
        let delta = (PI / x).min(1.0);
        let end = endpoint_integral(k, x, delta)?;
        let mut main = 0.0;
        let mut abs_accum = end.abs();
        if delta < 1.0 {
            let span = 1.0 - delta;
            let raw = (x * span / PI).ceil() as usize;
            let panels = raw.max(1) * self.panels_per_half_period();
            if panels > self.config.max_panels {
                return Err(Error::quadrature(format!(
                    "argument {x} needs {panels} panels, cap is {}",
                    self.config.max_panels
                )));
            }
            let rule = gauss::legendre(PANEL_POINTS);
            let width = span / panels as f64;
            for p in 0..panels {
                let lo = p as f64 * width;
                let mut acc = 0.0;
                for (t, w) in rule.nodes.iter().zip(&rule.weights) {
                    let u = lo + 0.5 * width * (t + 1.0);
                    let f = (1.0 - u).powf(k - 1.0) * (x * u).cos();
                    acc += w * f;
                    abs_accum += (w * f).abs();
                }
                main += acc * 0.5 * width;
            }
        }
        let value = k * (main + end);
        let err_est = 8.0 * f64::EPSILON * k * (abs_accum + 1.0);
        if err_est > self.config.tolerance {
            return Err(Error::quadrature(format!(
                "estimated error {err_est:.2e} exceeds tolerance {:.2e} at x = {x}",
                self.config.tolerance
            )));
        }
        Ok(value)
    }

    /// Measured envelope constant: `sup x * |gamma_k(x)|` over a log grid on
    /// `[1, x_max]`.
    pub fn tail_constant_probe(&self, x_max: f64, points: usize) -> Result<f64> {
        if x_max < 1.0 || points < 2 {
            return Err(Error::argument("probe needs x_max >= 1 and >= 2 points"));
        }
        let mut sup: f64 = 0.0;
        let ratio = x_max.ln() / (points - 1) as f64;
        for i in 0..points {
            let x = (ratio * i as f64).exp();
            sup = sup.max(x * self.eval(x)?.abs());
        }
        Ok(sup)
    }

    fn panels_per_half_period(&self) -> usize {
        self.config.panels_per_half_period
    }
}

/// Evaluate with the default configuration.
pub fn young_eval(kappa: f64, x: f64) -> Result<f64> {
    YoungKernel::new(kappa)?.eval(x)
}

/// Residual of the order-dilation identity
/// `G(k+1) x^t gamma_t(x) = G(t+1)/G(t-k) * int_0^x (x-s)^(t-k-1) s^k gamma_k(s) ds`
/// with both sides computed independently (`G` the gamma function).
///
/// The left side evaluates the kernel at order `tau`; the right side runs a
/// Gauss-Jacobi rule matched to the endpoint exponents over the kernel of
/// order `kappa`.
pub fn dilation_check(kappa: f64, tau: f64, x: f64) -> Result<f64> {
    if !(kappa >= 0.0) || !(tau > kappa) || !(x > 0.0) || !x.is_finite() {
        return Err(Error::argument(format!(
            "dilation check needs 0 <= kappa < tau and x > 0, got kappa={kappa}, tau={tau}, x={x}"
        )));
    }
    let lower = YoungKernel::new(kappa)?;
    let upper = YoungKernel::new(tau)?;
    let lhs = gamma(kappa + 1.0) * x.powf(tau) * upper.eval(x)?;

    let n = 48 + (0.75 * x).ceil() as usize;
    if n > 4096 {
        return Err(Error::quadrature(format!(
            "dilation check argument {x} too large for the Jacobi rule"
        )));
    }
    let rule = gauss::jacobi_unit(n, tau - kappa - 1.0, kappa);
    let mut integral = 0.0;
    for (u, w) in rule.nodes.iter().zip(&rule.weights) {
        integral += w * lower.eval(x * u)?;
    }
    let rhs = gamma(tau + 1.0) / gamma(tau - kappa) * x.powf(tau) * integral;
    Ok((lhs - rhs).abs())
}

/// Envelope constant `K` with `|gamma_k(u)| <= K/u` for `u >= 1`, measured
/// once per order and cached. Order 1 is exactly 1.
pub(crate) fn kernel_tail_constant(kappa: f64) -> f64 {
    if kappa == 1.0 {
        return 1.0;
    }
    static CACHE: OnceLock<Mutex<HashMap<u64, f64>>> = OnceLock::new();
    let map = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().expect("tail constant cache poisoned");
    *guard.entry(kappa.to_bits()).or_insert_with(|| {
        let kernel = YoungKernel::new(kappa).expect("valid order");
        let probed = kernel
            .tail_constant_probe(2000.0, 4000)
            .unwrap_or(f64::INFINITY);
        1.05 * probed.max(1.0)
    })
}

/// Power series in x^2; entire, accurate for moderate arguments.
fn series_eval(kappa: f64, x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..200 {
        let jf = j as f64;
        let den = (kappa + 2.0 * jf - 1.0) * (kappa + 2.0 * jf);
        term *= -x2 / den;
        sum += term;
        if term.abs() < 1e-18 * (1.0 + sum.abs()) {
            break;
        }
    }
    sum
}

/// `W_m = int_0^1 (1-u)^(m-1) e^{ixu} du` by upward recurrence from
/// `W_1 = (e^{ix} - 1)/(ix)`; contracts whenever the order stays below `x`.
fn integer_recurrence(kappa: u32, x: f64) -> f64 {
    let ix = Complex64::new(0.0, x);
    let eix = Complex64::from_polar(1.0, x);
    let mut w = (eix - 1.0) / ix;
    for m in 2..=kappa {
        w = ((m - 1) as f64 * w - 1.0) / ix;
    }
    kappa as f64 * w.re
}

/// Fractional order: evaluate the fractional-part kernel by splitting the
/// endpoint integral into its full-line part (a closed form) and a tail
/// rotated onto the decaying axis (a Laguerre integral), then climb the same
/// order recurrence.
fn fractional_eval(kappa: f64, x: f64) -> f64 {
    let frac = kappa.fract();
    let steps = kappa.trunc() as u32;
    let ix = Complex64::new(0.0, x);

    let mut w = if frac == 0.0 {
        // unreachable from eval(), kept for direct callers
        let eix = Complex64::from_polar(1.0, x);
        (eix - 1.0) / ix
    } else {
        let rule = gauss::laguerre(LAGUERRE_POINTS);
        let mut tail = Complex64::new(0.0, 0.0);
        for (wv, ww) in rule.nodes.iter().zip(&rule.weights) {
            let base = Complex64::new(1.0, -wv / x);
            tail += ww * base.powf(frac - 1.0);
        }
        let leading = Complex64::from_polar(gamma(frac) * x.powf(-frac), x - 0.5 * PI * frac);
        leading + Complex64::new(0.0, 1.0 / x) * tail
    };
    let mut order = frac;
    for _ in 0..steps {
        w = (order * w - 1.0) / ix;
        order += 1.0;
    }
    kappa * w.re
}

/// Exact endpoint piece `int_{1-delta}^{1} (1-u)^(k-1) cos(xu) du` as a
/// convergent expansion; valid because `x * delta <= pi`.
fn endpoint_integral(kappa: f64, x: f64, delta: f64) -> Result<f64> {
    let z = Complex64::new(0.0, -x * delta);
    let mut u = Complex64::new(delta.powf(kappa), 0.0);
    let mut acc = u / kappa;
    for m in 1..200 {
        u = u * z / m as f64;
        let term = u / (kappa + m as f64);
        acc += term;
        if term.norm() < 1e-18 * (1.0 + acc.norm()) {
            let eix = Complex64::from_polar(1.0, x);
            return Ok((eix * acc).re);
        }
    }
    Err(Error::quadrature(format!(
        "endpoint expansion did not converge at x = {x}, delta = {delta}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn oracle_trapezoid(kappa: f64, x: f64, n: usize) -> f64 {
        // brute-force reference: composite trapezoid on the defining integral
        let h = 1.0 / n as f64;
        let mut acc = 0.0;
        for i in 0..=n {
            let u = i as f64 * h;
            let f = (1.0 - u).powf(kappa - 1.0) * (x * u).cos();
            acc += if i == 0 || i == n { 0.5 * f } else { f };
        }
        kappa * acc * h
    }

    #[test]
    fn zero_argument_is_exactly_one() {
        for kappa in [0.0, 0.4, 1.0, 2.0, 3.7] {
            assert_eq!(YoungKernel::new(kappa).unwrap().eval(0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn order_one_at_pi_vanishes() {
        let v = young_eval(1.0, PI).unwrap();
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn order_two_at_pi_is_four_over_pi_squared() {
        let v = young_eval(2.0, PI).unwrap();
        assert_abs_diff_eq!(v, 4.0 / (PI * PI), epsilon = 1e-14);
    }

    #[test]
    fn order_zero_is_cosine() {
        assert_eq!(young_eval(0.0, 0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(young_eval(0.0, 2.5).unwrap(), (2.5f64).cos(), epsilon = 1e-15);
    }

    #[test]
    fn order_three_matches_trapezoid_oracle() {
        let v = young_eval(3.0, PI).unwrap();
        let oracle = oracle_trapezoid(3.0, PI, 200_000);
        assert_abs_diff_eq!(v, oracle, epsilon = 1e-8);
    }

    #[test]
    fn closed_form_order_three_everywhere() {
        // 6 (x - sin x) / x^3 is an elementary reduction of the order-3 kernel
        for &x in &[0.3, 1.0, 4.0, 7.9, 8.1, 15.0, 80.0, 1000.0] {
            let v = young_eval(3.0, x).unwrap();
            let closed = 6.0 * (x - x.sin()) / (x * x * x);
            assert_abs_diff_eq!(v, closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn closed_form_order_four_everywhere() {
        // 12 (x^2 - 2 + 2 cos x) / x^4
        for &x in &[1.0, 5.0, 9.0, 40.0, 500.0] {
            let v = young_eval(4.0, x).unwrap();
            let closed = 12.0 * (x * x - 2.0 + 2.0 * x.cos()) / x.powi(4);
            assert_abs_diff_eq!(v, closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn quadrature_path_agrees_with_closed_forms_on_grid() {
        let k1 = YoungKernel::new(1.0).unwrap();
        let k2 = YoungKernel::new(2.0).unwrap();
        let mut x = 0.1;
        while x <= 50.0 {
            let q1 = k1.eval_quadrature(x).unwrap();
            let q2 = k2.eval_quadrature(x).unwrap();
            assert_abs_diff_eq!(q1, x.sin() / x, epsilon = 1e-10);
            let s = (0.5 * x).sin() / (0.5 * x);
            assert_abs_diff_eq!(q2, s * s, epsilon = 1e-10);
            x += 0.1;
        }
    }

    #[test]
    fn fast_path_agrees_with_quadrature_for_fractional_orders() {
        for &kappa in &[0.35, 0.5, 1.5, 2.25, 3.8] {
            let kernel = YoungKernel::new(kappa).unwrap();
            for &x in &[0.5, 3.0, 8.5, 12.0, 19.5, 60.0, 300.0] {
                let fast = kernel.eval(x).unwrap();
                let slow = kernel.eval_quadrature(x).unwrap();
                assert_abs_diff_eq!(fast, slow, epsilon = 5e-13);
            }
        }
    }

    #[test]
    fn small_fractional_orders_match_oracle() {
        // endpoint-singular weight, checked against a graded brute-force sum
        let kappa = 0.5;
        let x = 2.0;
        // substitute u = 1 - v^2: integrand 2 kappa v^(2 kappa - 1) cos(x(1-v^2))
        let n = 400_000;
        let h = 1.0 / n as f64;
        let mut acc = 0.0;
        for i in 0..=n {
            let v = i as f64 * h;
            let f = 2.0 * v.powf(2.0 * kappa - 1.0) * (x * (1.0 - v * v)).cos();
            acc += if i == 0 || i == n { 0.5 * f } else { f };
        }
        let oracle = kappa * acc * h;
        assert_abs_diff_eq!(young_eval(kappa, x).unwrap(), oracle, epsilon = 1e-8);
    }

    #[test]
    fn kernel_values_bounded_by_one() {
        for &kappa in &[0.0, 1.0, 1.5, 2.0, 3.0, 4.5] {
            let kernel = YoungKernel::new(kappa).unwrap();
            let mut x = 0.0;
            while x <= 60.0 {
                let v = kernel.eval(x).unwrap();
                assert!(v.abs() <= 1.0 + 1e-12, "kappa={kappa}, x={x}, v={v}");
                x += 0.37;
            }
        }
    }

    #[test]
    fn tail_product_bounded_for_unit_and_larger_orders() {
        for &kappa in &[1.0, 1.5, 2.0, 3.0] {
            let kernel = YoungKernel::new(kappa).unwrap();
            let sup = kernel.tail_constant_probe(200.0, 2000).unwrap();
            assert!(sup.is_finite() && sup < 4.0, "kappa={kappa}, sup={sup}");
        }
    }

    #[test]
    fn dilation_identity_hand_checked_cases() {
        // kappa=1, tau=2, x=pi: both sides equal 4
        let r = dilation_check(1.0, 2.0, PI).unwrap();
        assert!(r < 1e-8, "residual {r}");
        let lhs = gamma(2.0) * PI * PI * young_eval(2.0, PI).unwrap();
        assert_abs_diff_eq!(lhs, 4.0, epsilon = 1e-12);

        // kappa=0, tau=1, x=pi: identity reduces to sin(pi) = 0
        let r = dilation_check(0.0, 1.0, PI).unwrap();
        assert!(r < 1e-8, "residual {r}");

        // x -> 0+: both sides vanish
        let r = dilation_check(1.3, 2.6, 1e-4).unwrap();
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn invalid_arguments_are_rejected() {
        assert!(YoungKernel::new(-0.5).is_err());
        assert!(young_eval(1.0, -1.0).is_err());
        assert!(dilation_check(2.0, 1.0, 1.0).is_err());
        assert!(dilation_check(1.0, 2.0, 0.0).is_err());
    }
}
