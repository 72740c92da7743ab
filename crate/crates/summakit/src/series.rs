//! Series domain types: node sequences, coefficient providers, partial sums
//! and the trigonometric-series adapter.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default cap on how many terms any operation may enumerate.
pub const DEFAULT_BUDGET: usize = 1_000_000;

pub type NodeFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;
pub type CoeffFn = Arc<dyn Fn(usize) -> Complex64 + Send + Sync>;
pub type RealFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

/// A strictly increasing sequence of non-negative nodes.
///
/// Unboundedness cannot be decided from finitely many probes, so the
/// constructor demands the caller assert it and backs the assertion with a
/// finite monotone probe; every later enumeration keeps checking strictness
/// on the indices it actually visits.
#[derive(Clone)]
pub struct NodeSequence {
    provider: NodeFn,
    declared_unbounded: bool,
}

impl NodeSequence {
    /// Build from a provider. `declared_unbounded` must be `true`; a probe
    /// over a short prefix plus geometrically spaced indices up to
    /// `probe_horizon` rejects obviously non-increasing providers.
    pub fn new(provider: NodeFn, declared_unbounded: bool, probe_horizon: usize) -> Result<Self> {
        if !declared_unbounded {
            return Err(Error::construction(
                "node sequences must be declared unbounded; finite node lists \
                 bound the series horizon instead",
            ));
        }
        let first = provider(0);
        if !first.is_finite() || first < 0.0 {
            return Err(Error::construction(format!(
                "nodes must be non-negative, node 0 is {first}"
            )));
        }
        let prefix = probe_horizon.min(64);
        let mut prev = first;
        for n in 1..prefix {
            let value = provider(n);
            if !(value > prev) {
                return Err(Error::construction(format!(
                    "nodes must increase strictly: node {} = {} after {}",
                    n,
                    value,
                    prev
                )));
            }
            prev = value;
        }
        let mut probe = prefix.max(2);
        while probe < probe_horizon {
            let lo = provider(probe / 2);
            let hi = provider(probe);
            if !(hi > lo) {
                return Err(Error::construction(format!(
                    "nodes stopped increasing between indices {} and {}",
                    probe / 2,
                    probe
                )));
            }
            probe *= 2;
        }
        Ok(NodeSequence {
            provider,
            declared_unbounded,
        })
    }

    /// The node sequence 0, 1, 2, ...
    pub fn integers() -> Self {
        NodeSequence {
            provider: Arc::new(|n| n as f64),
            declared_unbounded: true,
        }
    }

    /// A finite, explicitly listed prefix of a node sequence.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::construction("node list is empty"));
        }
        if !values[0].is_finite() || values[0] < 0.0 {
            return Err(Error::construction(format!(
                "nodes must be non-negative, node 0 is {}",
                values[0]
            )));
        }
        for w in values.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::construction(format!(
                    "nodes must increase strictly, saw {} then {}",
                    w[0], w[1]
                )));
            }
        }
        let owned: Vec<f64> = values.to_vec();
        Ok(NodeSequence {
            provider: Arc::new(move |n| owned[n]),
            declared_unbounded: true,
        })
    }

    pub fn value(&self, n: usize) -> f64 {
        (self.provider)(n)
    }

    pub fn declared_unbounded(&self) -> bool {
        self.declared_unbounded
    }
}

impl fmt::Debug for NodeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NodeSequence")
            .field("declared_unbounded", &self.declared_unbounded)
            .finish_non_exhaustive()
    }
}

/// A series: nodes plus a deterministic coefficient provider.
#[derive(Clone)]
pub struct SeriesSpec {
    name: String,
    nodes: NodeSequence,
    coeffs: CoeffFn,
    /// Highest index with data, when the series is backed by finite data.
    horizon: Option<usize>,
    /// Enumeration cap applied on top of the horizon.
    budget: usize,
}

impl SeriesSpec {
    pub fn new(
        name: impl Into<String>,
        nodes: NodeSequence,
        coeffs: CoeffFn,
        horizon: Option<usize>,
    ) -> Self {
        SeriesSpec {
            name: name.into(),
            nodes,
            coeffs,
            horizon,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget.max(2);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn node(&self, n: usize) -> f64 {
        self.nodes.value(n)
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        (self.coeffs)(n)
    }

    pub fn horizon(&self) -> Option<usize> {
        self.horizon
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Number of indices any enumeration may touch.
    pub fn effective_limit(&self) -> usize {
        match self.horizon {
            Some(h) => h.min(self.budget),
            None => self.budget,
        }
    }

    /// True when the nodes are exactly 0, 1, 2, ... over the probed prefix.
    pub fn has_integer_nodes(&self, probe: usize) -> bool {
        let limit = probe.min(self.effective_limit()).max(1);
        let step = (limit / 64).max(1);
        let mut n = 0;
        while n < limit {
            if self.nodes.value(n) != n as f64 {
                return false;
            }
            n += step;
        }
        true
    }

    /// Iterate terms in node order, enforcing strict node increase.
    pub fn terms(&self) -> TermIter<'_> {
        TermIter {
            series: self,
            next: 0,
            limit: self.effective_limit(),
            prev_node: f64::NEG_INFINITY,
        }
    }
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesSpec")
            .field("name", &self.name)
            .field("horizon", &self.horizon)
            .field("budget", &self.budget)
            .finish_non_exhaustive()
    }
}

/// One enumerated term.
#[derive(Debug, Clone, Copy)]
pub struct Term {
    pub index: usize,
    pub node: f64,
    pub coeff: Complex64,
}

pub struct TermIter<'a> {
    series: &'a SeriesSpec,
    next: usize,
    limit: usize,
    prev_node: f64,
}

impl TermIter<'_> {
    /// Indices remaining before the enumeration cap.
    pub fn exhausted(&self) -> bool {
        self.next >= self.limit
    }
}

impl Iterator for TermIter<'_> {
    type Item = Result<Term>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.limit {
            return None;
        }
        let n = self.next;
        self.next += 1;
        let node = self.series.node(n);
        if !(node > self.prev_node) || !node.is_finite() {
            return Some(Err(Error::construction(format!(
                "nodes must increase strictly: node {} = {} after {}",
                n, node, self.prev_node
            ))));
        }
        self.prev_node = node;
        Some(Ok(Term {
            index: n,
            node,
            coeff: self.series.coeff(n),
        }))
    }
}

/// Partial sum over all nodes `<= x` (inclusive boundary).
pub fn partial_sum(series: &SeriesSpec, x: f64) -> Result<Complex64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::argument(format!(
            "partial sums need finite x >= 0, got {x}"
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut iter = series.terms();
    for term in iter.by_ref() {
        let term = term?;
        if term.node > x {
            return Ok(acc);
        }
        acc += term.coeff;
    }
    if iter.exhausted() {
        return Err(Error::horizon(format!(
            "series {:?} ended (limit {}) before nodes exceeded x = {x}",
            series.name(),
            series.effective_limit()
        )));
    }
    Ok(acc)
}

/// Right-continuous step data of partial sums at each node.
#[derive(Debug, Clone)]
pub struct PartialSumTable {
    breakpoints: Vec<f64>,
    sums: Vec<Complex64>,
}

impl PartialSumTable {
    /// Tabulate partial sums for all nodes `<= x_max`.
    pub fn build(series: &SeriesSpec, x_max: f64) -> Result<Self> {
        if !x_max.is_finite() || x_max < 0.0 {
            return Err(Error::argument(format!(
                "partial sum tables need finite x_max >= 0, got {x_max}"
            )));
        }
        let mut breakpoints = Vec::new();
        let mut sums = Vec::new();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut iter = series.terms();
        for term in iter.by_ref() {
            let term = term?;
            if term.node > x_max {
                return Ok(PartialSumTable { breakpoints, sums });
            }
            acc += term.coeff;
            breakpoints.push(term.node);
            sums.push(acc);
        }
        if iter.exhausted() {
            return Err(Error::horizon(format!(
                "series {:?} ended before nodes exceeded x_max = {x_max}",
                series.name()
            )));
        }
        Ok(PartialSumTable { breakpoints, sums })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn sums(&self) -> &[Complex64] {
        &self.sums
    }

    /// Step evaluation: zero left of the first breakpoint.
    pub fn sum_at(&self, x: f64) -> Complex64 {
        match self.breakpoints.partition_point(|&b| b <= x) {
            0 => Complex64::new(0.0, 0.0),
            k => self.sums[k - 1],
        }
    }
}

/// A real trigonometric series evaluated at a fixed point.
#[derive(Clone)]
pub struct TrigSeries {
    name: String,
    a: RealFn,
    b: RealFn,
    x0: f64,
    horizon: Option<usize>,
}

impl TrigSeries {
    /// `a` provides the cosine coefficients from index 0, `b` the sine
    /// coefficients from index 1 (`b(0)` is never read), `x0` the point.
    pub fn new(name: impl Into<String>, a: RealFn, b: RealFn, x0: f64, horizon: Option<usize>) -> Self {
        TrigSeries {
            name: name.into(),
            a,
            b,
            x0,
            horizon,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn a(&self, n: usize) -> f64 {
        (self.a)(n)
    }

    pub fn b(&self, n: usize) -> f64 {
        (self.b)(n)
    }

    /// Evaluated coefficient: `a0/2` at index 0, otherwise
    /// `a_n cos(n x0) + b_n sin(n x0)`.
    pub fn coeff(&self, n: usize) -> f64 {
        if n == 0 {
            0.5 * self.a(0)
        } else {
            let arg = n as f64 * self.x0;
            self.a(n) * arg.cos() + self.b(n) * arg.sin()
        }
    }

    /// Amplitude envelope: dominates `|coeff(n)|` at every index.
    pub fn rho(&self, n: usize) -> f64 {
        if n == 0 {
            0.5 * self.a(0).abs()
        } else {
            self.a(n).hypot(self.b(n))
        }
    }

    pub fn horizon(&self) -> Option<usize> {
        self.horizon
    }
}

impl fmt::Debug for TrigSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TrigSeries")
            .field("name", &self.name)
            .field("x0", &self.x0)
            .finish_non_exhaustive()
    }
}

/// Evaluate a trigonometric series at its point, producing the integer-node
/// series the general summation methods consume.
pub fn trig_to_series(t: &TrigSeries) -> SeriesSpec {
    let t = t.clone();
    let horizon = t.horizon();
    let name = t.name().to_string();
    SeriesSpec::new(
        name,
        NodeSequence::integers(),
        Arc::new(move |n| Complex64::new(t.coeff(n), 0.0)),
        horizon,
    )
}
