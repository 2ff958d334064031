//! Statistical acceptance helpers: chi-square goodness of fit and binomial
//! sigma bounds.

use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};

/// Chi-square goodness-of-fit result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

impl ChiSquareTest {
    /// True when the fit is not rejected at the given significance level.
    pub fn passes(&self, significance: f64) -> bool {
        self.p_value > significance
    }
}

/// Pearson chi-square statistic of observed counts against expected
/// probabilities. `expected` must be positive and sum to ~1.
pub fn chi_square_gof(observed: &[u64], expected: &[f64]) -> Result<ChiSquareTest> {
    if observed.len() != expected.len() || observed.len() < 2 {
        return Err(Error::InvalidProbability {
            detail: format!(
                "chi-square needs at least two matching cells (got {} observed, {} expected)",
                observed.len(),
                expected.len()
            ),
        });
    }
    let n: u64 = observed.iter().sum();
    if n == 0 {
        return Err(Error::ZeroSamples);
    }
    let mut statistic = 0.0;
    for (&o, &p) in observed.iter().zip(expected) {
        if p <= 0.0 {
            return Err(Error::InvalidProbability {
                detail: format!("expected probability {p} is not positive"),
            });
        }
        let e = n as f64 * p;
        statistic += (o as f64 - e).powi(2) / e;
    }
    let df = observed.len() - 1;
    let dist = ChiSquared::new(df as f64).expect("df >= 1");
    Ok(ChiSquareTest {
        statistic,
        degrees_of_freedom: df,
        p_value: 1.0 - dist.cdf(statistic),
    })
}

/// Standard deviation of a Binomial(n, p) count.
pub fn binomial_sigma(n: u64, p: f64) -> f64 {
    (n as f64 * p * (1.0 - p)).sqrt()
}

/// |observed/n − p| ≤ 3σ/n, with exact equality required when σ = 0.
pub fn within_three_sigma(observed: u64, n: u64, p: f64) -> bool {
    let sigma = binomial_sigma(n, p);
    (observed as f64 - n as f64 * p).abs() <= 3.0 * sigma
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_counts_fit_uniform() {
        let test = chi_square_gof(&[5010, 4990], &[0.5, 0.5]).unwrap();
        assert!(test.passes(0.001));
        assert!(test.statistic < 1.0);
    }

    #[test]
    fn skewed_counts_fail_uniform() {
        let test = chi_square_gof(&[9000, 1000], &[0.5, 0.5]).unwrap();
        assert!(!test.passes(0.001));
    }

    #[test]
    fn sigma_bound_edges() {
        assert!(within_three_sigma(0, 1000, 0.0));
        assert!(!within_three_sigma(1, 1000, 0.0));
        assert!(within_three_sigma(1000, 1000, 1.0));
        let sigma = binomial_sigma(100_000, 0.5);
        assert!((sigma - 158.11388).abs() < 1e-4);
    }
}
