//! Gauss quadrature rules built with the Golub–Welsch algorithm.
//!
//! Nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix of the
//! monic three-term recurrence; weights come from the first components of the
//! normalized eigenvectors scaled by the zeroth moment. Rules are cached by
//! family, order and weight exponents.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{DMatrix, SymmetricEigen};
use statrs::function::gamma::ln_gamma;

/// A quadrature rule: `sum_i weights[i] * f(nodes[i])` approximates the
/// weighted integral the rule was built for.
#[derive(Debug, Clone)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

#[derive(PartialEq, Eq, Hash, Clone, Copy)]
enum Family {
    Legendre,
    Jacobi01,
    Laguerre,
}

#[derive(PartialEq, Eq, Hash, Clone, Copy)]
struct RuleKey {
    family: Family,
    n: usize,
    a_bits: u64,
    b_bits: u64,
}

fn cache() -> &'static Mutex<HashMap<RuleKey, Arc<QuadRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<RuleKey, Arc<QuadRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(key: RuleKey, build: impl FnOnce() -> QuadRule) -> Arc<QuadRule> {
    let mut map = cache().lock().expect("quadrature cache poisoned");
    map.entry(key).or_insert_with(|| Arc::new(build())).clone()
}

/// Golub–Welsch from monic recurrence coefficients.
///
/// `alpha[k]` are the diagonal entries, `beta[k]` the recurrence betas with
/// `beta[0]` equal to the zeroth moment of the weight.
fn golub_welsch(alpha: &[f64], beta: &[f64]) -> QuadRule {
    let n = alpha.len();
    let mut jac = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        jac[(k, k)] = alpha[k];
        if k + 1 < n {
            let off = beta[k + 1].sqrt();
            jac[(k, k + 1)] = off;
            jac[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::new(jac);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let node = eig.eigenvalues[i];
            let v0 = eig.eigenvectors[(0, i)];
            (node, beta[0] * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    QuadRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    }
}

/// Gauss–Legendre rule on `[-1, 1]`.
pub fn legendre(n: usize) -> Arc<QuadRule> {
    assert!(n >= 1);
    let key = RuleKey {
        family: Family::Legendre,
        n,
        a_bits: 0,
        b_bits: 0,
    };
    cached(key, || {
        let alpha = vec![0.0; n];
        let mut beta = vec![0.0; n];
        beta[0] = 2.0;
        for (k, b) in beta.iter_mut().enumerate().skip(1) {
            let kf = k as f64;
            *b = kf * kf / (4.0 * kf * kf - 1.0);
        }
        golub_welsch(&alpha, &beta)
    })
}

/// Gauss–Jacobi rule for the weight `(1-u)^a * u^b` on `[0, 1]`.
///
/// Requires `a > -1` and `b > -1`. The weights sum to `B(a+1, b+1)`.
pub fn jacobi_unit(n: usize, a: f64, b: f64) -> Arc<QuadRule> {
    assert!(n >= 1 && a > -1.0 && b > -1.0);
    let key = RuleKey {
        family: Family::Jacobi01,
        n,
        a_bits: a.to_bits(),
        b_bits: b.to_bits(),
    };
    cached(key, || {
        // Recurrence for the weight (1-t)^a (1+t)^b on [-1, 1].
        let mut alpha = vec![0.0; n];
        let mut beta = vec![0.0; n];
        let apb = a + b;
        alpha[0] = (b - a) / (apb + 2.0);
        for (k, item) in alpha.iter_mut().enumerate().skip(1) {
            let kf = k as f64;
            let den = (2.0 * kf + apb) * (2.0 * kf + apb + 2.0);
            *item = (b * b - a * a) / den;
        }
        // ln B(a+1, b+1) via ln-gamma keeps large parameters stable.
        let ln_b = ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(apb + 2.0);
        beta[0] = 2f64.powf(apb + 1.0) * ln_b.exp();
        if n > 1 {
            beta[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
        }
        for (k, item) in beta.iter_mut().enumerate().skip(2) {
            let kf = k as f64;
            let two = 2.0 * kf + apb;
            *item = 4.0 * kf * (kf + a) * (kf + b) * (kf + apb)
                / (two * two * (two + 1.0) * (two - 1.0));
        }
        let rule = golub_welsch(&alpha, &beta);
        // Map [-1, 1] to [0, 1]; the weight picks up 2^-(a+b+1).
        let scale = 2f64.powf(-(apb + 1.0));
        QuadRule {
            nodes: rule.nodes.iter().map(|t| 0.5 * (1.0 + t)).collect(),
            weights: rule.weights.iter().map(|w| w * scale).collect(),
        }
    })
}

/// Gauss–Laguerre rule for the weight `e^{-w}` on `[0, inf)`.
pub fn laguerre(n: usize) -> Arc<QuadRule> {
    assert!(n >= 1);
    let key = RuleKey {
        family: Family::Laguerre,
        n,
        a_bits: 0,
        b_bits: 0,
    };
    cached(key, || {
        let mut alpha = vec![0.0; n];
        let mut beta = vec![0.0; n];
        beta[0] = 1.0;
        for k in 0..n {
            alpha[k] = 2.0 * k as f64 + 1.0;
            if k >= 1 {
                beta[k] = (k as f64) * (k as f64);
            }
        }
        golub_welsch(&alpha, &beta)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        let rule = legendre(8);
        // degree 15 is exact for an 8-point rule
        let quad: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * (x.powi(14) + 3.0 * x.powi(7) - x))
            .sum();
        // int_{-1}^{1} x^14 dx = 2/15, odd powers vanish
        assert_relative_eq!(quad, 2.0 / 15.0, max_relative = 1e-13);
    }

    #[test]
    fn legendre_handles_oscillation_with_enough_points() {
        let rule = legendre(24);
        let quad: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * (5.0 * x).cos())
            .sum();
        let exact = 2.0 * (5f64).sin() / 5.0;
        assert_relative_eq!(quad, exact, max_relative = 1e-12);
    }

    #[test]
    fn jacobi_weights_sum_to_beta_function() {
        let a = 0.3;
        let b = 1.7;
        let rule = jacobi_unit(32, a, b);
        let total: f64 = rule.weights.iter().sum();
        let exact = (ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(a + b + 2.0)).exp();
        assert_relative_eq!(total, exact, max_relative = 1e-13);
        assert!(rule.nodes.iter().all(|&u| (0.0..=1.0).contains(&u)));
    }

    #[test]
    fn jacobi_integrates_monomial_against_singular_weight() {
        // int_0^1 (1-u)^(-1/2) u^2 du = B(1/2, 3) = 16/15
        let rule = jacobi_unit(16, -0.5, 0.0);
        let quad: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(u, w)| w * u * u)
            .sum();
        assert_relative_eq!(quad, 16.0 / 15.0, max_relative = 1e-12);
    }

    #[test]
    fn laguerre_matches_gamma_moments() {
        let rule = laguerre(48);
        // int_0^inf w^3 e^-w dw = 6
        let quad: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * x.powi(3))
            .sum();
        assert_relative_eq!(quad, 6.0, max_relative = 1e-12);
        // int_0^inf e^-w/(1+w) dw = 0.596347362323194...
        let quad2: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w / (1.0 + x))
            .sum();
        assert_relative_eq!(quad2, 0.596_347_362_323_194_1, max_relative = 1e-8);
    }
}
