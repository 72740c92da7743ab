//! The theorem statements as executable experiments: six-way method
//! equivalence under the linear-growth hypothesis, the Lebesgue/kernel
//! correspondence, order monotonicity of the kernel methods, the classical
//! Cesaro/Riesz equivalence, and the Tauberian corollaries.
//!
//! Every outcome is encoded in a structured report; a series that violates
//! the hypothesis is a first-class result, never an error.

use crate::conditions::{self, ConditionReport, Verdict};
use crate::corpus;
use crate::error::{Error, Result};
use crate::limit::{sum_series, LimitEstimate, SideCondition, SumConfig};
use crate::series::SeriesSpec;
use crate::summators::Method;

/// Method panels evaluated by the six-way experiment.
#[derive(Debug, Clone)]
pub struct MethodsConfig {
    pub kappas: Vec<f64>,
    pub riesz_betas: Vec<f64>,
    pub cesaro_betas: Vec<f64>,
    pub include_abel: bool,
}

impl Default for MethodsConfig {
    fn default() -> Self {
        MethodsConfig {
            kappas: vec![1.0, 2.0, 3.0],
            riesz_betas: vec![1.0, 2.0],
            cesaro_betas: vec![1.0, 2.0],
            include_abel: true,
        }
    }
}

/// One method's outcome inside a report.
#[derive(Debug, Clone)]
pub struct MethodEstimate {
    pub method: Method,
    pub estimate: LimitEstimate,
    pub side_condition: Option<SideCondition>,
}

/// Absolute difference between two converged estimates.
#[derive(Debug, Clone)]
pub struct PairAgreement {
    pub a: Method,
    pub b: Method,
    pub difference: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    /// Growth hypothesis held and every converged pair agreed within
    /// tolerance.
    EquivalentWithinTol,
    /// The growth hypothesis failed; the equivalence statement makes no
    /// claim for this series.
    HypothesisViolated,
    /// Hypothesis held but converged estimates disagreed.
    Disagreement,
}

impl EquivalenceVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            EquivalenceVerdict::EquivalentWithinTol => "equivalent-within-tol",
            EquivalenceVerdict::HypothesisViolated => "hypothesis-violated",
            EquivalenceVerdict::Disagreement => "disagreement",
        }
    }
}

/// Outcome of the six-way equivalence experiment on one series.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub series: String,
    pub tolerance: f64,
    pub estimates: Vec<MethodEstimate>,
    pub growth: ConditionReport,
    pub agreement: Vec<PairAgreement>,
    pub verdict: EquivalenceVerdict,
}

fn growth_probe(series: &SeriesSpec) -> f64 {
    let reach = series.node(series.effective_limit().saturating_sub(1));
    1e5f64.min((reach / 2.0).max(1.0))
}

/// Run every configured method on the series, check the growth hypothesis,
/// and assemble the pairwise agreement matrix over converged estimates.
pub fn run_theorem4(
    series: &SeriesSpec,
    methods: &MethodsConfig,
    tolerance: f64,
    config: &SumConfig,
) -> Result<EquivalenceReport> {
    if !(tolerance > 0.0) {
        return Err(Error::argument("tolerance must be positive"));
    }
    let mut estimates: Vec<MethodEstimate> = Vec::new();
    let mut push = |method: Method| -> Result<()> {
        let r = sum_series(series, method, config)?;
        estimates.push(MethodEstimate {
            method,
            estimate: r.estimate,
            side_condition: r.side_condition,
        });
        Ok(())
    };
    push(Method::Lebesgue)?;
    for &kappa in &methods.kappas {
        push(Method::Gamma { kappa })?;
    }
    for &beta in &methods.riesz_betas {
        push(Method::Riesz { beta })?;
    }
    if series.has_integer_nodes(4096) {
        for &beta in &methods.cesaro_betas {
            push(Method::Cesaro { beta })?;
        }
    }
    if methods.include_abel {
        push(Method::Abel)?;
    }

    let growth = conditions::check_t1(series, growth_probe(series))?;

    let mut agreement = Vec::new();
    let mut max_disagreement = 0.0f64;
    for i in 0..estimates.len() {
        for j in (i + 1)..estimates.len() {
            if estimates[i].estimate.converged && estimates[j].estimate.converged {
                let difference =
                    (estimates[i].estimate.value - estimates[j].estimate.value).norm();
                max_disagreement = max_disagreement.max(difference);
                agreement.push(PairAgreement {
                    a: estimates[i].method,
                    b: estimates[j].method,
                    difference,
                });
            }
        }
    }
    let verdict = if growth.verdict != Verdict::Holds {
        EquivalenceVerdict::HypothesisViolated
    } else if max_disagreement <= tolerance {
        EquivalenceVerdict::EquivalentWithinTol
    } else {
        EquivalenceVerdict::Disagreement
    };
    Ok(EquivalenceReport {
        series: series.name().to_string(),
        tolerance,
        estimates,
        growth,
        agreement,
        verdict,
    })
}

/// Outcome of the Lebesgue/kernel correspondence experiment.
#[derive(Debug, Clone)]
pub struct Prop1Report {
    pub series: String,
    pub growth: ConditionReport,
    pub lebesgue: MethodEstimate,
    pub gamma1: LimitEstimate,
    pub hypothesis_holds: bool,
    pub pass: bool,
}

/// Under the growth hypothesis the Lebesgue-type estimate and the order-1
/// kernel estimate must converge together to the same value, with the side
/// series certified absolutely.
pub fn run_prop1(series: &SeriesSpec, tolerance: f64, config: &SumConfig) -> Result<Prop1Report> {
    let leb = sum_series(series, Method::Lebesgue, config)?;
    let gamma = sum_series(series, Method::Gamma { kappa: 1.0 }, config)?;
    let growth = conditions::check_t1(series, growth_probe(series))?;
    let hypothesis_holds = growth.verdict == Verdict::Holds;
    let agree = (leb.estimate.value - gamma.estimate.value).norm() <= tolerance;
    let side_ok = leb
        .side_condition
        .map(|s| s.certified())
        .unwrap_or(false);
    let pass = !hypothesis_holds
        || (leb.estimate.converged && gamma.estimate.converged && agree && side_ok);
    Ok(Prop1Report {
        series: series.name().to_string(),
        growth,
        lebesgue: MethodEstimate {
            method: Method::Lebesgue,
            estimate: leb.estimate,
            side_condition: leb.side_condition,
        },
        gamma1: gamma.estimate,
        hypothesis_holds,
        pass,
    })
}

/// Outcome of the kernel-order monotonicity experiment.
#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub series: String,
    pub kappa: f64,
    pub tau: f64,
    pub growth: ConditionReport,
    pub lower: LimitEstimate,
    pub upper: LimitEstimate,
    pub pass: bool,
}

/// Under the growth hypothesis, convergence of the order-`kappa` kernel
/// method must propagate to every higher order with the same value.
pub fn run_claim_monotone(
    series: &SeriesSpec,
    kappa: f64,
    tau: f64,
    tolerance: f64,
    config: &SumConfig,
) -> Result<ClaimReport> {
    if !(kappa >= 1.0) || !(tau > kappa) {
        return Err(Error::argument(format!(
            "order monotonicity needs 1 <= kappa < tau, got kappa={kappa}, tau={tau}"
        )));
    }
    let lower = sum_series(series, Method::Gamma { kappa }, config)?.estimate;
    let upper = sum_series(series, Method::Gamma { kappa: tau }, config)?.estimate;
    let growth = conditions::check_t1(series, growth_probe(series))?;
    let premise = growth.verdict == Verdict::Holds && lower.converged;
    let pass = !premise
        || (upper.converged && (upper.value - lower.value).norm() <= tolerance);
    Ok(ClaimReport {
        series: series.name().to_string(),
        kappa,
        tau,
        growth,
        lower,
        upper,
        pass,
    })
}

/// Outcome of the classical Cesaro/Riesz equivalence experiment.
#[derive(Debug, Clone)]
pub struct CesaroRieszReport {
    pub series: String,
    pub beta: f64,
    pub cesaro: LimitEstimate,
    pub riesz: LimitEstimate,
    pub pass: bool,
}

/// On integer nodes the binomial means and the growth-weighted means of the
/// same order must agree whenever both converge.
pub fn run_cesaro_riesz(
    series: &SeriesSpec,
    beta: f64,
    tolerance: f64,
    config: &SumConfig,
) -> Result<CesaroRieszReport> {
    if !(beta > 0.0) {
        return Err(Error::argument("order must be positive"));
    }
    if !series.has_integer_nodes(4096) {
        return Err(Error::inapplicable(
            "the binomial-mean comparison needs integer nodes",
        ));
    }
    let cesaro = sum_series(series, Method::Cesaro { beta }, config)?.estimate;
    let riesz = sum_series(series, Method::Riesz { beta }, config)?.estimate;
    let both = cesaro.converged && riesz.converged;
    let pass = !both || (cesaro.value - riesz.value).norm() <= tolerance;
    Ok(CesaroRieszReport {
        series: series.name().to_string(),
        beta,
        cesaro,
        riesz,
        pass,
    })
}

/// Outcome of the Tauberian-corollary experiment.
#[derive(Debug, Clone)]
pub struct TauberianReport {
    pub series: String,
    pub ratio: ConditionReport,
    pub hl: ConditionReport,
    pub szasz: ConditionReport,
    pub gamma1: LimitEstimate,
    pub partial_sums: LimitEstimate,
    pub lebesgue: MethodEstimate,
    /// Some Tauberian condition held and the kernel estimate converged.
    pub premise: bool,
    /// Raw partial sums converge to the kernel estimate under the premise.
    pub convergence_pass: bool,
    /// Lebesgue estimate matches the partial-sum limit under the premise.
    pub lebesgue_pass: bool,
}

/// When any Tauberian condition holds and the order-1 kernel method sums the
/// series, the raw partial sums must converge to the same value, and the
/// Lebesgue-type estimate must match it.
pub fn run_tauberian(
    series: &SeriesSpec,
    p: f64,
    tolerance: f64,
    config: &SumConfig,
) -> Result<TauberianReport> {
    let n_probe = growth_probe(series) as usize;
    let ratio = conditions::check_ratio(series, n_probe)?;
    let hl = conditions::check_hl(series, p, n_probe)?;
    let szasz = conditions::check_szasz(series, p, n_probe)?;
    let gamma1 = sum_series(series, Method::Gamma { kappa: 1.0 }, config)?.estimate;
    let partial_sums = crate::limit::partial_sum_limit(series, config)?;
    let leb = sum_series(series, Method::Lebesgue, config)?;

    let any_holds = [&ratio, &hl, &szasz]
        .iter()
        .any(|r| r.verdict == Verdict::Holds);
    let premise = any_holds && gamma1.converged;
    let convergence_pass = !premise
        || (partial_sums.converged
            && (partial_sums.value - gamma1.value).norm() <= tolerance);
    let lebesgue_pass = !premise
        || (leb.estimate.converged
            && (leb.estimate.value - partial_sums.value).norm() <= tolerance);
    Ok(TauberianReport {
        series: series.name().to_string(),
        ratio,
        hl,
        szasz,
        gamma1,
        partial_sums,
        lebesgue: MethodEstimate {
            method: Method::Lebesgue,
            estimate: leb.estimate,
            side_condition: leb.side_condition,
        },
        premise,
        convergence_pass,
        lebesgue_pass,
    })
}

/// Run the six-way experiment across the whole builtin corpus.
pub fn run_all_corpus(
    methods: &MethodsConfig,
    tolerance: f64,
    config: &SumConfig,
) -> Result<Vec<EquivalenceReport>> {
    corpus::CORPUS_NAMES
        .iter()
        .map(|name| {
            let series = corpus::corpus_get(name)?.with_budget(config.budget);
            run_theorem4(&series, methods, tolerance, config)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_get;

    fn config() -> SumConfig {
        SumConfig::default()
    }

    #[test]
    fn theorem4_grandi_equivalent_at_half() {
        let s = corpus_get("grandi").unwrap();
        let r = run_theorem4(&s, &MethodsConfig::default(), 1e-3, &config()).unwrap();
        assert_eq!(r.verdict, EquivalenceVerdict::EquivalentWithinTol);
        assert_eq!(r.growth.verdict, Verdict::Holds);
        for est in &r.estimates {
            assert!(
                (est.estimate.value.re - 0.5).abs() <= 1e-3,
                "{}: {:?}",
                est.method,
                est.estimate
            );
        }
    }

    #[test]
    fn theorem4_zero_trivially_equivalent() {
        let s = corpus_get("zero").unwrap();
        let r = run_theorem4(&s, &MethodsConfig::default(), 1e-3, &config()).unwrap();
        assert_eq!(r.verdict, EquivalenceVerdict::EquivalentWithinTol);
        for est in &r.estimates {
            assert_eq!(est.estimate.value.norm(), 0.0, "{}", est.method);
        }
    }

    #[test]
    fn theorem4_abel_only_violates_hypothesis() {
        let s = corpus_get("abel_only").unwrap();
        let r = run_theorem4(&s, &MethodsConfig::default(), 1e-3, &config()).unwrap();
        assert_eq!(r.verdict, EquivalenceVerdict::HypothesisViolated);
        assert_eq!(r.growth.verdict, Verdict::Fails);
        let abel = r
            .estimates
            .iter()
            .find(|e| e.method == Method::Abel)
            .unwrap();
        assert!(abel.estimate.converged);
        assert!((abel.estimate.value.re + 0.25).abs() <= 1e-3, "{:?}", abel.estimate);
        let c1 = r
            .estimates
            .iter()
            .find(|e| e.method == Method::Cesaro { beta: 1.0 })
            .unwrap();
        assert!(!c1.estimate.converged, "{:?}", c1.estimate);
    }

    #[test]
    fn prop1_grandi_and_zero_pass() {
        for name in ["grandi", "zero"] {
            let s = corpus_get(name).unwrap();
            let r = run_prop1(&s, 1e-3, &config()).unwrap();
            assert!(r.pass, "{name}: {r:?}");
            assert!(r.hypothesis_holds, "{name}");
        }
    }

    #[test]
    fn prop1_sawtooth_reaches_quarter_pi() {
        let s = corpus_get("sawtooth_quarter").unwrap();
        let r = run_prop1(&s, 1e-3, &config()).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(
            (r.lebesgue.estimate.value.re - std::f64::consts::FRAC_PI_4).abs() <= 1e-3,
            "{:?}",
            r.lebesgue.estimate
        );
    }

    #[test]
    fn claim_monotone_examples() {
        let cfg = config();
        let g = corpus_get("grandi").unwrap();
        let r = run_claim_monotone(&g, 1.0, 2.0, 2e-3, &cfg).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.lower.value.re - 0.5).abs() <= 1e-3);
        assert!((r.upper.value.re - 0.5).abs() <= 1e-3);

        let l = corpus_get("log2").unwrap();
        let r = run_claim_monotone(&l, 1.0, 3.0, 2e-3, &cfg).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.lower.value.re - std::f64::consts::LN_2).abs() <= 1e-3);

        let z = corpus_get("zero").unwrap();
        let r = run_claim_monotone(&z, 2.0, 3.0, 2e-3, &cfg).unwrap();
        assert!(r.pass);
        assert!(run_claim_monotone(&z, 2.0, 2.0, 1e-3, &cfg).is_err());
    }

    #[test]
    fn cesaro_riesz_agree_on_integer_corpus() {
        let cfg = config();
        for name in ["grandi", "log2", "zero"] {
            let s = corpus_get(name).unwrap();
            let r = run_cesaro_riesz(&s, 1.0, 1e-3, &cfg).unwrap();
            assert!(r.pass, "{name}: {r:?}");
        }
    }

    #[test]
    fn tauberian_log2_and_zero() {
        let cfg = config();
        let l = corpus_get("log2").unwrap();
        let r = run_tauberian(&l, 2.0, 1e-3, &cfg).unwrap();
        assert_eq!(r.ratio.verdict, Verdict::Holds);
        assert!(r.premise, "{r:?}");
        assert!(r.convergence_pass, "{r:?}");
        assert!(r.lebesgue_pass, "{r:?}");

        let z = corpus_get("zero").unwrap();
        let r = run_tauberian(&z, 2.0, 1e-3, &cfg).unwrap();
        assert!(r.convergence_pass && r.lebesgue_pass);
    }
}
