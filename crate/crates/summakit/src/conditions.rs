//! Empirical growth and Tauberian condition checks.
//!
//! Asymptotic conditions are undecidable from finitely many terms, so every
//! verdict is explicitly empirical: `Holds` means the normalized quantity
//! stayed bounded with a sub-critical fitted growth exponent, `Fails` means
//! the exponent exceeded its critical value by more than the slack, anything
//! degenerate is `Inconclusive`.

use crate::error::{Error, Result};
use crate::series::{SeriesSpec, Term, TrigSeries};

/// Slack applied to fitted growth exponents before calling a verdict.
pub const EXPONENT_SLACK: f64 = 0.15;

/// Default probe ceiling.
pub const DEFAULT_PROBE_MAX: f64 = 1e5;

/// Which condition a report measures (tags are part of the wire format).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionId {
    /// Amplitude decay `n * rho_n` bounded.
    Rho14,
    /// Averaged amplitude growth `(1/N) sum n rho_n` bounded.
    Moricz15,
    /// Signed node-weighted partial sums grow at most linearly.
    T126,
    /// Node-inverse tail decays like `1/x`.
    T227,
    /// Signed integer-node weighted sums grow at most linearly.
    Signed16,
    /// Coefficients bounded by relative node gaps.
    Ratio31,
    /// Gap-weighted power sums converge.
    Hl32,
    /// Gap-weighted power sums grow at most like the nodes.
    Szasz33,
}

impl ConditionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionId::Rho14 => "rho_1_4",
            ConditionId::Moricz15 => "moricz_1_5",
            ConditionId::T126 => "T1_2_6",
            ConditionId::T227 => "T2_2_7",
            ConditionId::Signed16 => "signed_1_6",
            ConditionId::Ratio31 => "ratio_3_1",
            ConditionId::Hl32 => "hl_3_2",
            ConditionId::Szasz33 => "szasz_3_3",
        }
    }
}

/// Outcome of a condition check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

/// Measured constants and the verdict for one condition on one series.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub condition: ConditionId,
    /// sup of the normalized quantity over the probed range.
    pub measured_constant: f64,
    /// Least-squares slope of log quantity against log scale.
    pub fitted_exponent: f64,
    pub verdict: Verdict,
    pub probe_range: (f64, f64),
}

/// Log-spaced probe points on `[1, x_max]`, at least 40, 8 per decade.
fn probe_grid(x_max: f64) -> Vec<f64> {
    let decades = x_max.log10().max(1.0);
    let count = ((8.0 * decades).ceil() as usize).max(40);
    let step = x_max.ln() / (count - 1) as f64;
    let mut grid: Vec<f64> = (0..count).map(|i| (step * i as f64).exp()).collect();
    grid[0] = 1.0;
    let last = grid.len() - 1;
    grid[last] = x_max;
    grid
}

/// Integer probe points on `[1, n_max]`, deduplicated.
fn integer_grid(n_max: usize) -> Vec<usize> {
    let mut grid: Vec<usize> = probe_grid(n_max as f64)
        .iter()
        .map(|&x| (x.round() as usize).clamp(1, n_max))
        .collect();
    grid.dedup();
    grid
}

/// Least-squares slope of `ln q` against `ln x` over positive entries.
fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, q)| *x > 0.0 && *q > 0.0 && q.is_finite())
        .map(|&(x, q)| (x.ln(), q.ln()))
        .collect();
    if usable.len() < 2 {
        return 0.0;
    }
    let n = usable.len() as f64;
    let mx = usable.iter().map(|p| p.0).sum::<f64>() / n;
    let my = usable.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in &usable {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

fn verdict_from_exponent(exponent: f64, critical: f64, constant: f64) -> Verdict {
    if !exponent.is_finite() || !constant.is_finite() {
        return Verdict::Inconclusive;
    }
    if exponent <= critical + EXPONENT_SLACK {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

/// Walk the series once, recording a running quantity at each grid point
/// (after every node `<=` that point has been folded in).
///
/// A series whose data genuinely ends completes the remaining grid points
/// with the final quantity; hitting the enumeration budget mid-stream is a
/// horizon error.
fn probe_quantity<S>(
    series: &SeriesSpec,
    grid: &[f64],
    state: &mut S,
    update: impl Fn(&mut S, &Term),
    snapshot: impl Fn(&S) -> f64,
) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::with_capacity(grid.len());
    let mut next = 0usize;
    let mut iter = series.terms();
    for term in iter.by_ref() {
        let term = term?;
        while next < grid.len() && grid[next] < term.node {
            out.push((grid[next], snapshot(state)));
            next += 1;
        }
        if next == grid.len() {
            return Ok(out);
        }
        update(state, &term);
    }
    let data_complete = series.horizon().is_some_and(|h| h <= series.budget());
    if !data_complete && next < grid.len() {
        return Err(Error::horizon(format!(
            "series {:?} hit the enumeration budget before probe point {}",
            series.name(),
            grid[next]
        )));
    }
    while next < grid.len() {
        out.push((grid[next], snapshot(state)));
        next += 1;
    }
    Ok(out)
}

fn report(
    condition: ConditionId,
    constant: f64,
    exponent: f64,
    verdict: Verdict,
    range: (f64, f64),
) -> ConditionReport {
    ConditionReport {
        condition,
        measured_constant: constant,
        fitted_exponent: exponent,
        verdict,
        probe_range: range,
    }
}

/// Linear-growth check on the signed node-weighted partial sums
/// `|sum_{node <= x} node * c_n|`; critical exponent 1.
pub fn check_t1(series: &SeriesSpec, x_max: f64) -> Result<ConditionReport> {
    if !(x_max >= 1.0) || !x_max.is_finite() {
        return Err(Error::argument("probe ceiling must be >= 1"));
    }
    let grid = probe_grid(x_max);
    let mut acc = num_complex::Complex64::new(0.0, 0.0);
    let points = probe_quantity(
        series,
        &grid,
        &mut acc,
        |acc, t| *acc += t.node * t.coeff,
        |acc| acc.norm(),
    )?;
    let constant = points
        .iter()
        .map(|(x, q)| q / x)
        .fold(0.0f64, f64::max);
    let exponent = fit_exponent(&points);
    let verdict = verdict_from_exponent(exponent, 1.0, constant);
    Ok(report(ConditionId::T126, constant, exponent, verdict, (1.0, x_max)))
}

/// Tail-decay check: `x * sum_{node >= x} |c_n| / node` bounded; critical
/// exponent 0 for the logged quantity. Inconclusive when the tail has not
/// stabilized within the enumeration budget.
pub fn check_t2(series: &SeriesSpec, x_max: f64) -> Result<ConditionReport> {
    if !(x_max >= 1.0) || !x_max.is_finite() {
        return Err(Error::argument("probe ceiling must be >= 1"));
    }
    let grid = probe_grid(x_max);
    // Single pass: prefix sums of |c|/node at each grid crossing, suffix by
    // subtraction from the full enumerated total.
    let mut prefix_at_grid = Vec::with_capacity(grid.len());
    let mut next = 0usize;
    let mut acc = 0.0f64;
    let mut half_point = 0.0f64;
    let mut last_node = 0.0f64;
    for term in series.terms() {
        let term = term?;
        while next < grid.len() && grid[next] < term.node {
            prefix_at_grid.push((grid[next], acc));
            next += 1;
        }
        if term.node > 0.0 {
            acc += term.coeff.norm() / term.node;
            last_node = term.node;
        }
        half_point = last_node / 2.0;
    }
    while next < grid.len() {
        prefix_at_grid.push((grid[next], acc));
        next += 1;
    }
    let total = acc;
    // contribution of the last enumerated half-range, a stabilization proxy
    let mut tail_half = 0.0f64;
    for term in series.terms() {
        let term = term?;
        if term.node > half_point && term.node > 0.0 {
            tail_half += term.coeff.norm() / term.node;
        }
    }
    let points: Vec<(f64, f64)> = prefix_at_grid
        .iter()
        .map(|&(x, prefix)| (x, x * (total - prefix).max(0.0)))
        .collect();
    let constant = points.iter().map(|&(_, q)| q).fold(0.0f64, f64::max);
    let exponent = fit_exponent(&points);
    let data_complete = series.horizon().is_some_and(|h| h <= series.budget());
    let unstable = !data_complete && x_max * tail_half > 0.02 * (1.0 + constant);
    let verdict = if unstable {
        Verdict::Inconclusive
    } else {
        verdict_from_exponent(exponent, 0.0, constant)
    };
    Ok(report(ConditionId::T227, constant, exponent, verdict, (1.0, x_max)))
}

/// Amplitude checks on a trigonometric series: the pointwise form
/// `n * rho_n` bounded, and the averaged form `(1/N) sum n rho_n` bounded.
pub fn check_rho(trig: &TrigSeries, n_max: usize) -> Result<(ConditionReport, ConditionReport)> {
    if n_max < 1 {
        return Err(Error::argument("probe ceiling must be >= 1"));
    }
    let limit = trig.horizon().map_or(n_max, |h| n_max.min(h.saturating_sub(1)));
    let grid = integer_grid(limit.max(1));
    let mut point_points = Vec::with_capacity(grid.len());
    let mut avg_points = Vec::with_capacity(grid.len());
    let mut sup_point: f64 = 0.0;
    let mut sup_avg: f64 = 0.0;
    let mut running = 0.0;
    let mut gi = 0usize;
    for n in 1..=limit {
        let q = n as f64 * trig.rho(n);
        sup_point = sup_point.max(q);
        running += q;
        if gi < grid.len() && grid[gi] == n {
            point_points.push((n as f64, q));
            let avg = running / n as f64;
            avg_points.push((n as f64, avg));
            sup_avg = sup_avg.max(avg);
            gi += 1;
        }
    }
    let range = (1.0, limit as f64);
    let pe = fit_exponent(&point_points);
    let ae = fit_exponent(&avg_points);
    let zygmund = report(
        ConditionId::Rho14,
        sup_point,
        pe,
        verdict_from_exponent(pe, 0.0, sup_point),
        range,
    );
    let moricz = report(
        ConditionId::Moricz15,
        sup_avg,
        ae,
        verdict_from_exponent(ae, 0.0, sup_avg),
        range,
    );
    Ok((zygmund, moricz))
}

/// Signed linear-growth check on integer nodes:
/// `|sum_{n <= N} node_n * c_n|` grows at most like `N`.
pub fn check_signed(series: &SeriesSpec, n_max: usize) -> Result<ConditionReport> {
    if n_max < 1 {
        return Err(Error::argument("probe ceiling must be >= 1"));
    }
    if !series.has_integer_nodes(n_max.min(4096)) {
        return Err(Error::inapplicable(
            "the signed growth condition is stated for integer nodes",
        ));
    }
    let grid: Vec<f64> = integer_grid(n_max).iter().map(|&n| n as f64).collect();
    let mut acc = num_complex::Complex64::new(0.0, 0.0);
    let points = probe_quantity(
        series,
        &grid,
        &mut acc,
        |acc, t| *acc += t.node * t.coeff,
        |acc| acc.norm(),
    )?;
    let constant = points.iter().map(|(x, q)| q / x).fold(0.0f64, f64::max);
    let exponent = fit_exponent(&points);
    let verdict = verdict_from_exponent(exponent, 1.0, constant);
    Ok(report(
        ConditionId::Signed16,
        constant,
        exponent,
        verdict,
        (1.0, n_max as f64),
    ))
}

/// Gap-ratio check: `|c_n| * node_n / (node_n - node_{n-1})` bounded;
/// holds only when finite and non-trending.
pub fn check_ratio(series: &SeriesSpec, n_max: usize) -> Result<ConditionReport> {
    if n_max < 1 {
        return Err(Error::argument("probe ceiling must be >= 1"));
    }
    let grid: Vec<f64> = integer_grid(n_max).iter().map(|&n| n as f64).collect();
    struct RatioState {
        prev_node: Option<f64>,
        sup: f64,
    }
    let mut state = RatioState {
        prev_node: None,
        sup: 0.0,
    };
    let points = probe_quantity(
        series,
        &grid,
        &mut state,
        |s, t| {
            if let Some(prev) = s.prev_node {
                let q = t.coeff.norm() * t.node / (t.node - prev);
                s.sup = s.sup.max(q);
            }
            s.prev_node = Some(t.node);
        },
        |s| s.sup,
    )?;
    let sup = state.sup;
    // note: the probe axis here is the index cut, the quantity a running sup
    let exponent = fit_exponent(&points);
    let verdict = verdict_from_exponent(exponent, 0.0, sup);
    Ok(report(
        ConditionId::Ratio31,
        sup,
        exponent,
        verdict,
        (1.0, n_max as f64),
    ))
}

/// Convergence check on the gap-weighted power sums
/// `sum (node/gap)^(p-1) |c|^p`: holds when the partial sums are empirically
/// Cauchy over the last probed decade and non-trending.
pub fn check_hl(series: &SeriesSpec, p: f64, n_max: usize) -> Result<ConditionReport> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::argument(format!("exponent p must exceed 1, got {p}")));
    }
    if n_max < 1 {
        return Err(Error::argument("probe ceiling must be >= 1"));
    }
    let grid: Vec<f64> = integer_grid(n_max).iter().map(|&n| n as f64).collect();
    struct HlState {
        prev_node: Option<f64>,
        acc: f64,
    }
    let mut state = HlState {
        prev_node: None,
        acc: 0.0,
    };
    let points = probe_quantity(
        series,
        &grid,
        &mut state,
        |s, t| {
            if let Some(prev) = s.prev_node {
                let gap = t.node - prev;
                if t.node > 0.0 {
                    s.acc += (t.node / gap).powf(p - 1.0) * t.coeff.norm().powf(p);
                }
            }
            s.prev_node = Some(t.node);
        },
        |s| s.acc,
    )?;
    let last = points.last().map(|&(_, q)| q).unwrap_or(0.0);
    let decade_floor = n_max as f64 / 10.0;
    let at_decade = points
        .iter()
        .filter(|&&(x, _)| x <= decade_floor)
        .next_back()
        .map(|&(_, q)| q)
        .unwrap_or(0.0);
    let rel_increment = (last - at_decade) / last.max(1e-300);
    let exponent = fit_exponent(&points);
    let verdict = if !last.is_finite() {
        Verdict::Inconclusive
    } else if exponent > EXPONENT_SLACK {
        Verdict::Fails
    } else if rel_increment <= EXPONENT_SLACK {
        Verdict::Holds
    } else {
        Verdict::Inconclusive
    };
    Ok(report(
        ConditionId::Hl32,
        last,
        exponent,
        verdict,
        (1.0, n_max as f64),
    ))
}

/// Node-growth check on the gap-weighted power sums:
/// `(1/node_N) sum_{n<=N} node^p gap^(1-p) |c|^p` bounded; critical
/// exponent 1 on the raw sums.
pub fn check_szasz(series: &SeriesSpec, p: f64, n_max: usize) -> Result<ConditionReport> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::argument(format!("exponent p must exceed 1, got {p}")));
    }
    if n_max < 1 {
        return Err(Error::argument("probe ceiling must be >= 1"));
    }
    let grid: Vec<f64> = integer_grid(n_max).iter().map(|&n| n as f64).collect();
    struct SzaszState {
        prev_node: Option<f64>,
        acc: f64,
        sup: f64,
    }
    let mut state = SzaszState {
        prev_node: None,
        acc: 0.0,
        sup: 0.0,
    };
    let points = probe_quantity(
        series,
        &grid,
        &mut state,
        |s, t| {
            if let Some(prev) = s.prev_node {
                let gap = t.node - prev;
                if t.node > 0.0 {
                    s.acc += t.node.powf(p) * gap.powf(1.0 - p) * t.coeff.norm().powf(p);
                }
            }
            s.prev_node = Some(t.node);
            if t.node > 0.0 {
                s.sup = s.sup.max(s.acc / t.node);
            }
        },
        |s| s.acc,
    )?;
    let sup = state.sup;
    let exponent = fit_exponent(&points);
    let verdict = verdict_from_exponent(exponent, 1.0, sup);
    Ok(report(
        ConditionId::Szasz33,
        sup,
        exponent,
        verdict,
        (1.0, n_max as f64),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus_get, corpus_trig};
    use crate::series::NodeSequence;
    use num_complex::Complex64;
    use std::sync::Arc;

    fn power_series(q: f64) -> SeriesSpec {
        SeriesSpec::new(
            format!("n^-{q}"),
            NodeSequence::integers(),
            Arc::new(move |n| {
                if n == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new((n as f64).powf(-q), 0.0)
                }
            }),
            None,
        )
    }

    #[test]
    fn t1_basel_holds_with_unit_constant() {
        let r = check_t1(&corpus_get("basel").unwrap(), 1e4).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!((r.measured_constant - 1.0).abs() < 1e-12, "{}", r.measured_constant);
    }

    #[test]
    fn t1_grandi_holds() {
        let r = check_t1(&corpus_get("grandi").unwrap(), 1e4).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn t1_abel_only_fails_quadratically() {
        let r = check_t1(&corpus_get("abel_only").unwrap(), 1e4).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(
            (1.8..=2.2).contains(&r.fitted_exponent),
            "exponent {}",
            r.fitted_exponent
        );
    }

    #[test]
    fn t1_zero_holds_with_zero_constant() {
        let r = check_t1(&corpus_get("zero").unwrap(), 1e4).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.measured_constant, 0.0);
    }

    #[test]
    fn t2_basel_holds() {
        let r = check_t2(&corpus_get("basel").unwrap(), 1e3).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.measured_constant < 1.3, "{}", r.measured_constant);
    }

    #[test]
    fn t2_slow_decay_fails() {
        let r = check_t2(&power_series(0.5), 1e3).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        assert!((r.fitted_exponent - 0.5).abs() < 0.15, "{}", r.fitted_exponent);
    }

    #[test]
    fn t2_zero_holds() {
        let r = check_t2(&corpus_get("zero").unwrap(), 1e3).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.measured_constant, 0.0);
    }

    #[test]
    fn t2_divergent_tail_is_inconclusive() {
        let r = check_t2(&corpus_get("grandi").unwrap(), 1e3).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn rho_sawtooth_exact_unit_constants() {
        let t = corpus_trig("sawtooth_quarter").unwrap();
        let (zygmund, moricz) = check_rho(&t, 100_000).unwrap();
        assert_eq!(zygmund.verdict, Verdict::Holds);
        assert!((zygmund.measured_constant - 1.0).abs() < 1e-9);
        assert_eq!(moricz.verdict, Verdict::Holds);
        assert!((moricz.measured_constant - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rho_sqrt_decay_fails_both_forms() {
        let a: crate::series::RealFn = Arc::new(|_| 0.0);
        let b: crate::series::RealFn =
            Arc::new(|n| if n == 0 { 0.0 } else { 1.0 / (n as f64).sqrt() });
        let t = TrigSeries::new("slow", a, b, 1.0, None);
        let (zygmund, moricz) = check_rho(&t, 100_000).unwrap();
        assert_eq!(zygmund.verdict, Verdict::Fails);
        assert_eq!(moricz.verdict, Verdict::Fails);
    }

    #[test]
    fn signed_grandi_holds_ones_fail() {
        let r = check_signed(&corpus_get("grandi").unwrap(), 100_000).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let ones = SeriesSpec::new(
            "ones",
            NodeSequence::integers(),
            Arc::new(|_| Complex64::new(1.0, 0.0)),
            None,
        );
        let r = check_signed(&ones, 100_000).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        let z = check_signed(&corpus_get("zero").unwrap(), 100_000).unwrap();
        assert_eq!(z.verdict, Verdict::Holds);
    }

    #[test]
    fn ratio_log2_unit_constant() {
        let r = check_ratio(&corpus_get("log2").unwrap(), 100_000).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!((r.measured_constant - 1.0).abs() < 1e-12);
        let slow = check_ratio(&power_series(0.5), 100_000).unwrap();
        assert_eq!(slow.verdict, Verdict::Fails);
        let z = check_ratio(&corpus_get("zero").unwrap(), 100_000).unwrap();
        assert_eq!(z.verdict, Verdict::Holds);
    }

    #[test]
    fn hl_convergent_power_sum_holds_log2_fails() {
        let ok = check_hl(&power_series(1.1), 2.0, 100_000).unwrap();
        assert_eq!(ok.verdict, Verdict::Holds, "exp {}", ok.fitted_exponent);
        let bad = check_hl(&corpus_get("log2").unwrap(), 2.0, 100_000).unwrap();
        assert_eq!(bad.verdict, Verdict::Fails, "exp {}", bad.fitted_exponent);
        let z = check_hl(&corpus_get("zero").unwrap(), 2.0, 100_000).unwrap();
        assert_eq!(z.verdict, Verdict::Holds);
    }

    #[test]
    fn szasz_log2_unit_constant_slow_decay_fails() {
        let ok = check_szasz(&corpus_get("log2").unwrap(), 2.0, 100_000).unwrap();
        assert_eq!(ok.verdict, Verdict::Holds);
        assert!((ok.measured_constant - 1.0).abs() < 1e-12);
        let bad = check_szasz(&power_series(0.5), 2.0, 100_000).unwrap();
        assert_eq!(bad.verdict, Verdict::Fails);
        let z = check_szasz(&corpus_get("zero").unwrap(), 2.0, 100_000).unwrap();
        assert_eq!(z.verdict, Verdict::Holds);
    }

    #[test]
    fn ratio_implies_linear_growth_on_corpus() {
        // gap-ratio boundedness forces the weighted sums to grow linearly
        for name in ["log2", "basel", "zero"] {
            let s = corpus_get(name).unwrap();
            let ratio = check_ratio(&s, 10_000).unwrap();
            if ratio.verdict == Verdict::Holds {
                let t1 = check_t1(&s, 1e4).unwrap();
                assert_eq!(t1.verdict, Verdict::Holds, "{name}");
            }
        }
    }

    #[test]
    fn verdicts_are_deterministic() {
        let a = check_t1(&corpus_get("log2").unwrap(), 1e4).unwrap();
        let b = check_t1(&corpus_get("log2").unwrap(), 1e4).unwrap();
        assert_eq!(a.measured_constant.to_bits(), b.measured_constant.to_bits());
        assert_eq!(a.fitted_exponent.to_bits(), b.fitted_exponent.to_bits());
        assert_eq!(a.verdict, b.verdict);
    }

    #[test]
    fn growing_probe_never_flips_fails_to_holds() {
        // power-law families: once super-critical, larger probes stay super-critical
        for q in [0.2, 0.5, 0.8] {
            let s = power_series(q);
            let small = check_t2(&s, 1e2).unwrap();
            let large = check_t2(&s, 1e3).unwrap();
            if small.verdict == Verdict::Fails {
                assert_eq!(large.verdict, Verdict::Fails, "q={q}");
            }
        }
    }
}
