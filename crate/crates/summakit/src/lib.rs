//! Summation methods for divergent and conditionally convergent series.
//!
//! The crate evaluates a series `sum c_n` over an increasing node sequence
//! under six summation methods — growth-weighted (Riesz) means, binomial
//! (Cesaro) means, exponential (Abel) means, integral-cosine-kernel means of
//! any order, and the Lebesgue-type symmetric-derivative mean — extrapolates
//! each family of means to its limit, measures the growth and Tauberian
//! conditions that govern when the methods agree, and runs the equivalence
//! statements as executable experiments with structured verdicts.
//!
//! Entry points:
//!
//! * [`corpus::corpus_get`] — builtin reference series.
//! * [`summators::trace`] — sample a method's means along a schedule.
//! * [`limit::sum_series`] — schedule, sample, extrapolate, certify.
//! * [`conditions`] — empirical growth/Tauberian condition reports.
//! * [`equivalence`] — six-way equivalence and Tauberian experiments.
//! * [`kernels`] — the integral cosine means and their dilation identity.
//!
//! Each `examples/*.rs` file exercises one of these surfaces end to end; the
//! thin `summakit` binary exposes the same operations as subcommands.

pub mod cli;
pub mod conditions;
pub mod corpus;
pub mod equivalence;
pub mod error;
pub mod kernels;
pub mod limit;
pub mod output;
pub mod series;
pub mod summators;

pub use conditions::{ConditionId, ConditionReport, Verdict};
pub use corpus::{corpus_get, corpus_trig, CORPUS_NAMES};
pub use equivalence::{
    run_cesaro_riesz, run_claim_monotone, run_prop1, run_tauberian, run_theorem4,
    EquivalenceReport, EquivalenceVerdict, MethodsConfig,
};
pub use error::{Error, Result};
pub use kernels::{dilation_check, young_eval, QuadratureConfig, YoungKernel};
pub use limit::{
    extrapolate, partial_sum_limit, sum_series, Accelerator, LimitEstimate, SideCondition,
    SumConfig, SumResult,
};
pub use series::{
    partial_sum, trig_to_series, NodeSequence, PartialSumTable, SeriesSpec, TrigSeries,
};
pub use summators::{
    abel_mean, cesaro_mean, gamma_mean, lebesgue_general_mean, lebesgue_mean, riesz_mean, trace,
    MeanTrace, Method, SampleCert, TraceSample, TruncationOptions,
};
