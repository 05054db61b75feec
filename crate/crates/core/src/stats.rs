//! The goodness-of-fit statistics.
//!
//! Every statistic compares the observed bin fractions `q_k = counts[k] / m`
//! against the model probabilities `p_k`:
//!
//! * root-mean-square: `sqrt((1/n) * sum_k (q_k - p_k)^2)`
//! * chi-square:       `m * sum_k (q_k - p_k)^2 / p_k`
//! * G-square:         `2m * sum_k q_k * ln(q_k / p_k)`
//! * Freeman-Tukey:    `4m * sum_k (sqrt(q_k) - sqrt(p_k))^2`
//! * negative log-likelihood: `-ln[ m!/(prod_k c_k!) * prod_k p_k^{c_k} ]`,
//!   the multinomial probability of the observed counts (log-factorials via
//!   the log-gamma function).
//!
//! Conventions: a chi-square term with `p_k = 0 = q_k` contributes 0, and a
//! G-square term with `q_k = 0` contributes 0. A bin with `q_k > 0` but
//! `p_k = 0` makes chi-square, G-square, and the negative log-likelihood
//! `+inf`; under the Monte-Carlo engine's ordering this counts as at least
//! as extreme as every simulated value, which is the right behaviour because
//! a draw from the model can never occupy a zero-probability bin.

use std::fmt;
use std::str::FromStr;

use statrs::function::gamma::ln_gamma;

use crate::counts::{CountVector, ProbabilityVector};
use crate::error::{Error, Result};

/// Which goodness-of-fit statistic to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatisticKind {
    RootMeanSquare,
    ChiSquare,
    GSquare,
    FreemanTukey,
    NegLogLikelihood,
}

impl StatisticKind {
    /// All five statistics, in display order.
    pub const ALL: [StatisticKind; 5] = [
        StatisticKind::RootMeanSquare,
        StatisticKind::ChiSquare,
        StatisticKind::GSquare,
        StatisticKind::FreemanTukey,
        StatisticKind::NegLogLikelihood,
    ];

    /// The default set: the four divergence statistics.
    pub const DEFAULT: [StatisticKind; 4] = [
        StatisticKind::RootMeanSquare,
        StatisticKind::ChiSquare,
        StatisticKind::GSquare,
        StatisticKind::FreemanTukey,
    ];

    /// Stable position of the statistic in fixed-size scratch arrays.
    pub(crate) fn index(self) -> usize {
        match self {
            StatisticKind::RootMeanSquare => 0,
            StatisticKind::ChiSquare => 1,
            StatisticKind::GSquare => 2,
            StatisticKind::FreemanTukey => 3,
            StatisticKind::NegLogLikelihood => 4,
        }
    }

    /// Human-readable name.
    pub fn label(self) -> &'static str {
        match self {
            StatisticKind::RootMeanSquare => "root-mean-square",
            StatisticKind::ChiSquare => "chi-square",
            StatisticKind::GSquare => "G-square",
            StatisticKind::FreemanTukey => "Freeman-Tukey",
            StatisticKind::NegLogLikelihood => "neg-log-likelihood",
        }
    }
}

impl fmt::Display for StatisticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StatisticKind::RootMeanSquare => "rms",
            StatisticKind::ChiSquare => "chi2",
            StatisticKind::GSquare => "g2",
            StatisticKind::FreemanTukey => "ft",
            StatisticKind::NegLogLikelihood => "nll",
        };
        f.write_str(s)
    }
}

impl FromStr for StatisticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rms" | "root-mean-square" => Ok(StatisticKind::RootMeanSquare),
            "chi2" | "chi-square" | "chisq" => Ok(StatisticKind::ChiSquare),
            "g2" | "g-square" => Ok(StatisticKind::GSquare),
            "ft" | "freeman-tukey" => Ok(StatisticKind::FreemanTukey),
            "nll" | "neg-log-likelihood" => Ok(StatisticKind::NegLogLikelihood),
            other => Err(Error::InvalidArgument(format!(
                "unknown statistic `{other}` (expected rms, chi2, g2, ft, or nll)"
            ))),
        }
    }
}

fn check_lengths(q: &CountVector, p: &ProbabilityVector) -> Result<()> {
    if q.len() != p.len() {
        return Err(Error::DimensionMismatch {
            context: "statistic evaluation",
            expected: p.len(),
            got: q.len(),
        });
    }
    Ok(())
}

/// Root-mean-square distance between observed fractions and model
/// probabilities. Always in `[0, 1]`.
pub fn rms(q: &CountVector, p: &ProbabilityVector) -> Result<f64> {
    check_lengths(q, p)?;
    Ok(rms_raw(q.counts(), q.total(), p.probs()))
}

/// Pearson chi-square statistic; `+inf` when a zero-probability bin is
/// occupied.
pub fn chi_square(q: &CountVector, p: &ProbabilityVector) -> Result<f64> {
    check_lengths(q, p)?;
    Ok(chi_square_raw(q.counts(), q.total(), p.probs()))
}

/// Log-likelihood-ratio statistic; `+inf` when a zero-probability bin is
/// occupied.
pub fn g_square(q: &CountVector, p: &ProbabilityVector) -> Result<f64> {
    check_lengths(q, p)?;
    Ok(g_square_raw(q.counts(), q.total(), p.probs()))
}

/// Freeman-Tukey (Hellinger-distance) statistic; finite for all valid inputs.
pub fn freeman_tukey(q: &CountVector, p: &ProbabilityVector) -> Result<f64> {
    check_lengths(q, p)?;
    Ok(freeman_tukey_raw(q.counts(), q.total(), p.probs()))
}

/// Negative logarithm of the multinomial probability of the observed counts
/// under the model, including the multinomial coefficient; `+inf` when a
/// zero-probability bin is occupied.
pub fn neg_log_likelihood(q: &CountVector, p: &ProbabilityVector) -> Result<f64> {
    check_lengths(q, p)?;
    Ok(neg_log_likelihood_raw(q.counts(), q.total(), p.probs()))
}

pub(crate) fn rms_raw(counts: &[u64], total: u64, probs: &[f64]) -> f64 {
    let m = total as f64;
    let mut acc = 0.0;
    for (&c, &p) in counts.iter().zip(probs) {
        let d = c as f64 / m - p;
        acc += d * d;
    }
    (acc / counts.len() as f64).sqrt()
}

pub(crate) fn chi_square_raw(counts: &[u64], total: u64, probs: &[f64]) -> f64 {
    let m = total as f64;
    let mut acc = 0.0;
    for (&c, &p) in counts.iter().zip(probs) {
        if p > 0.0 {
            let d = c as f64 / m - p;
            acc += d * d / p;
        } else if c > 0 {
            return f64::INFINITY;
        }
        // p == 0 == q contributes nothing
    }
    m * acc
}

pub(crate) fn g_square_raw(counts: &[u64], total: u64, probs: &[f64]) -> f64 {
    let m = total as f64;
    let mut acc = 0.0;
    for (&c, &p) in counts.iter().zip(probs) {
        if c == 0 {
            continue; // q ln(q/p) -> 0 as q -> 0
        }
        if p <= 0.0 {
            return f64::INFINITY;
        }
        let cf = c as f64;
        acc += cf * (cf / (m * p)).ln();
    }
    2.0 * acc
}

pub(crate) fn freeman_tukey_raw(counts: &[u64], total: u64, probs: &[f64]) -> f64 {
    let m = total as f64;
    let mut acc = 0.0;
    for (&c, &p) in counts.iter().zip(probs) {
        let d = (c as f64 / m).sqrt() - p.sqrt();
        acc += d * d;
    }
    4.0 * m * acc
}

pub(crate) fn neg_log_likelihood_raw(counts: &[u64], total: u64, probs: &[f64]) -> f64 {
    let mut log_prob = ln_gamma(total as f64 + 1.0);
    for (&c, &p) in counts.iter().zip(probs) {
        if c == 0 {
            continue;
        }
        if p <= 0.0 {
            return f64::INFINITY;
        }
        let cf = c as f64;
        log_prob += cf * p.ln() - ln_gamma(cf + 1.0);
    }
    -log_prob
}

/// Evaluate the requested statistics in one pass, writing each into its slot
/// of a five-wide scratch array. Lengths must already match.
pub(crate) fn eval_kinds(
    counts: &[u64],
    total: u64,
    probs: &[f64],
    kinds: &[StatisticKind],
) -> [f64; 5] {
    debug_assert_eq!(counts.len(), probs.len());
    let mut out = [f64::NAN; 5];
    for &kind in kinds {
        let v = match kind {
            StatisticKind::RootMeanSquare => rms_raw(counts, total, probs),
            StatisticKind::ChiSquare => chi_square_raw(counts, total, probs),
            StatisticKind::GSquare => g_square_raw(counts, total, probs),
            StatisticKind::FreemanTukey => freeman_tukey_raw(counts, total, probs),
            StatisticKind::NegLogLikelihood => neg_log_likelihood_raw(counts, total, probs),
        };
        debug_assert!(!v.is_nan(), "{kind} evaluated to NaN");
        out[kind.index()] = v;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const TOL: f64 = 1e-12;

    fn cv(counts: &[u64]) -> CountVector {
        CountVector::new(counts.to_vec()).unwrap()
    }

    fn pv(probs: &[f64]) -> ProbabilityVector {
        ProbabilityVector::new(probs.to_vec()).unwrap()
    }

    #[test]
    fn rms_hand_values() {
        let half = pv(&[0.5, 0.5]);
        assert_eq!(rms(&cv(&[1, 1]), &half).unwrap(), 0.0);
        assert_abs_diff_eq!(rms(&cv(&[2, 0]), &half).unwrap(), 0.5, epsilon = TOL);
        assert_abs_diff_eq!(rms(&cv(&[3, 1]), &half).unwrap(), 0.25, epsilon = TOL);
    }

    #[test]
    fn chi_square_hand_values() {
        let half = pv(&[0.5, 0.5]);
        assert_eq!(chi_square(&cv(&[1, 1]), &half).unwrap(), 0.0);
        assert_abs_diff_eq!(chi_square(&cv(&[3, 1]), &half).unwrap(), 1.0, epsilon = TOL);
        // empty zero-probability bin contributes nothing
        assert_eq!(chi_square(&cv(&[0, 2]), &pv(&[0.0, 1.0])).unwrap(), 0.0);
        // occupied zero-probability bin is infinitely extreme
        assert_eq!(
            chi_square(&cv(&[1, 1]), &pv(&[0.0, 1.0])).unwrap(),
            f64::INFINITY
        );
    }

    #[test]
    fn g_square_hand_values() {
        let half = pv(&[0.5, 0.5]);
        assert_eq!(g_square(&cv(&[1, 1]), &half).unwrap(), 0.0);
        assert_abs_diff_eq!(
            g_square(&cv(&[2, 0]), &half).unwrap(),
            4.0 * std::f64::consts::LN_2,
            epsilon = TOL
        );
        assert_abs_diff_eq!(
            g_square(&cv(&[0, 1]), &half).unwrap(),
            2.0 * std::f64::consts::LN_2,
            epsilon = TOL
        );
        assert_eq!(
            g_square(&cv(&[1, 0]), &pv(&[0.0, 1.0])).unwrap(),
            f64::INFINITY
        );
    }

    #[test]
    fn freeman_tukey_hand_values() {
        let half = pv(&[0.5, 0.5]);
        assert_eq!(freeman_tukey(&cv(&[1, 1]), &half).unwrap(), 0.0);
        let expected = 4.0 * ((1.0 - 0.5f64.sqrt()).powi(2) + 0.5);
        assert_abs_diff_eq!(
            freeman_tukey(&cv(&[1, 0]), &half).unwrap(),
            expected,
            epsilon = TOL
        );
    }

    #[test]
    fn neg_log_likelihood_hand_values() {
        // certain outcome: probability 1, so -ln 1 = 0
        assert_eq!(
            neg_log_likelihood(&cv(&[1, 0]), &pv(&[1.0, 0.0])).unwrap(),
            0.0
        );
        // P(counts (1,1) | 1/2, 1/2) = 2!/(1!1!) * (1/2)^2 = 1/2
        assert_abs_diff_eq!(
            neg_log_likelihood(&cv(&[1, 1]), &pv(&[0.5, 0.5])).unwrap(),
            std::f64::consts::LN_2,
            epsilon = TOL
        );
        // impossible outcome
        assert_eq!(
            neg_log_likelihood(&cv(&[1, 0]), &pv(&[0.0, 1.0])).unwrap(),
            f64::INFINITY
        );
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let q = cv(&[1, 1, 1]);
        let p = pv(&[0.5, 0.5]);
        assert!(rms(&q, &p).is_err());
        assert!(chi_square(&q, &p).is_err());
        assert!(g_square(&q, &p).is_err());
        assert!(freeman_tukey(&q, &p).is_err());
        assert!(neg_log_likelihood(&q, &p).is_err());
    }

    #[test]
    fn uniform_model_ties_rms_to_chi_square() {
        // With p uniform over n bins, chi2 = m * n * sum d^2 while
        // rms = sqrt(sum d^2 / n), so rms = sqrt(chi2 / (m * n^2)).
        let q = cv(&[3, 1, 7, 9]);
        let p = ProbabilityVector::uniform(4).unwrap();
        let x2 = chi_square(&q, &p).unwrap();
        let r = rms(&q, &p).unwrap();
        let m = q.total() as f64;
        let n = q.len() as f64;
        assert_abs_diff_eq!(r, (x2 / (m * n * n)).sqrt(), epsilon = TOL);
    }

    #[test]
    fn statistic_names_round_trip() {
        for kind in StatisticKind::ALL {
            let parsed: StatisticKind = kind.to_string().parse().unwrap();
            assert_eq!(parsed, kind);
        }
        assert!("bogus".parse::<StatisticKind>().is_err());
    }
}
