//! Multinomial sampling of count vectors.

use rand::Rng;
use rand_distr::{Binomial, Distribution};

use crate::counts::{CountVector, ProbabilityVector};

/// Draws multinomial count vectors from a fixed probability vector.
///
/// Two strategies, picked per call: when the number of draws is below the
/// number of bins, each draw is placed individually by inverse-CDF binary
/// search; otherwise the bins are filled left to right with conditional
/// binomials, which costs one binomial variate per bin regardless of the
/// number of draws.
pub struct MultinomialSampler {
    probs: Vec<f64>,
    cumulative: Vec<f64>,
    suffix: Vec<f64>,
}

impl MultinomialSampler {
    pub fn new(p: &ProbabilityVector) -> Self {
        let probs = p.probs().to_vec();
        let mut cumulative = Vec::with_capacity(probs.len());
        let mut acc = 0.0;
        for &w in &probs {
            acc += w;
            cumulative.push(acc);
        }
        // Backward sums so that the last positive bin sees exactly its own
        // mass as the remaining total, making its conditional probability 1.
        let mut suffix = vec![0.0; probs.len()];
        let mut tail = 0.0;
        for (k, &w) in probs.iter().enumerate().rev() {
            tail += w;
            suffix[k] = tail;
        }
        Self {
            probs,
            cumulative,
            suffix,
        }
    }

    pub fn bins(&self) -> usize {
        self.probs.len()
    }

    /// Draw `draws >= 1` items and return the per-bin counts.
    pub fn sample<R: Rng + ?Sized>(&self, draws: u64, rng: &mut R) -> CountVector {
        assert!(draws >= 1, "need at least one draw");
        let counts = if (draws as u128) < self.probs.len() as u128 {
            self.sample_by_inversion(draws, rng)
        } else {
            self.sample_by_conditionals(draws, rng)
        };
        CountVector::from_parts(counts, draws)
    }

    fn sample_by_inversion<R: Rng + ?Sized>(&self, draws: u64, rng: &mut R) -> Vec<u64> {
        let n = self.probs.len();
        let total = *self.cumulative.last().expect("nonempty");
        let mut counts = vec![0u64; n];
        for _ in 0..draws {
            let u = rng.gen_range(0.0..total);
            let k = self.cumulative.partition_point(|&c| c <= u);
            counts[k.min(n - 1)] += 1;
        }
        counts
    }

    fn sample_by_conditionals<R: Rng + ?Sized>(&self, draws: u64, rng: &mut R) -> Vec<u64> {
        let n = self.probs.len();
        let mut counts = vec![0u64; n];
        let mut remaining = draws;
        for k in 0..n - 1 {
            if remaining == 0 {
                break;
            }
            let mass = self.suffix[k];
            if mass <= 0.0 {
                break;
            }
            let cond = (self.probs[k] / mass).clamp(0.0, 1.0);
            let taken = if cond >= 1.0 {
                remaining
            } else {
                Binomial::new(remaining, cond)
                    .expect("conditional probability in [0, 1]")
                    .sample(rng)
            };
            counts[k] = taken;
            remaining -= taken;
        }
        counts[n - 1] += remaining;
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    #[test]
    fn point_mass_places_every_draw_in_one_bin() {
        let p = ProbabilityVector::new(vec![0.0, 1.0, 0.0]).unwrap();
        let sampler = MultinomialSampler::new(&p);
        let mut rng = RngStream::new(1, 0).rng();
        // exercise both strategies
        for draws in [2u64, 50] {
            let c = sampler.sample(draws, &mut rng);
            assert_eq!(c.counts(), &[0, draws, 0]);
        }
    }

    #[test]
    fn sampling_is_deterministic_per_stream() {
        let p = ProbabilityVector::from_weights(vec![3.0, 2.0, 1.0, 1.0]).unwrap();
        let sampler = MultinomialSampler::new(&p);
        let a = sampler.sample(100, &mut RngStream::new(9, 5).rng());
        let b = sampler.sample(100, &mut RngStream::new(9, 5).rng());
        assert_eq!(a, b);
    }

    #[test]
    fn empirical_means_match_the_distribution() {
        // mean of counts[k]/draws over many repetitions is p_k, within
        // three binomial standard errors of the pooled estimate
        let p = ProbabilityVector::new(vec![0.5, 0.3, 0.15, 0.05]).unwrap();
        let sampler = MultinomialSampler::new(&p);
        let reps = 10_000u64;
        let draws = 40u64;
        let mut sums = [0u64; 4];
        for i in 0..reps {
            let mut rng = RngStream::new(123, i).rng();
            let c = sampler.sample(draws, &mut rng);
            for (s, &x) in sums.iter_mut().zip(c.counts()) {
                *s += x;
            }
        }
        for (k, &s) in sums.iter().enumerate() {
            let mean = s as f64 / (reps * draws) as f64;
            let pk = p.probs()[k];
            let se = (pk * (1.0 - pk) / (reps * draws) as f64).sqrt();
            assert!(
                (mean - pk).abs() <= 3.0 * se,
                "bin {k}: mean {mean} vs p {pk} (se {se})"
            );
        }
    }
}
