//! Observed count vectors, model probability vectors, and square count tables.
//!
//! A [`CountVector`] holds how many of the `m` i.i.d. draws landed in each of
//! the `n` bins. A [`ProbabilityVector`] is a normalized discrete distribution
//! over the same bins. A [`SquareTable`] is an `r x r` cross-tabulation, used
//! by the table-symmetry test; its row-major flattening is an ordinary count
//! vector over `r^2` bins.

use crate::error::{Error, Result};

/// Absolute tolerance on the total probability mass of a [`ProbabilityVector`].
pub const PROBABILITY_SUM_TOL: f64 = 1e-9;

/// Counts of draws per bin. Always has at least two bins and at least one draw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector {
    counts: Vec<u64>,
    total: u64,
}

impl CountVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::InvalidCounts(format!(
                "need at least 2 bins, got {}",
                counts.len()
            )));
        }
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::InvalidCounts("total draw count is zero".into()));
        }
        Ok(Self { counts, total })
    }

    /// Constructor for counts whose invariants are guaranteed by the caller
    /// (e.g. fresh multinomial samples).
    pub(crate) fn from_parts(counts: Vec<u64>, total: u64) -> Self {
        debug_assert!(counts.len() >= 2);
        debug_assert_eq!(counts.iter().sum::<u64>(), total);
        debug_assert!(total >= 1);
        Self { counts, total }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of draws `m`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of bins `n`.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least two bins
    }

    /// Observed fraction of draws in bin `k`.
    pub fn fraction(&self, k: usize) -> f64 {
        self.counts[k] as f64 / self.total as f64
    }

    /// Keep only the first `bins` bins, discarding the draws beyond them
    /// (the total shrinks accordingly).
    pub fn truncated(&self, bins: usize) -> Result<Self> {
        if bins > self.len() {
            return Err(Error::InvalidArgument(format!(
                "cannot truncate {} bins to {bins}",
                self.len()
            )));
        }
        Self::new(self.counts[..bins].to_vec())
    }

    /// Aggregate every bin from index `bins - 1` on into a single final bin,
    /// producing a vector with exactly `bins` bins. The total is unchanged.
    pub fn rebinned_tail(&self, bins: usize) -> Result<Self> {
        if bins < 2 || bins > self.len() {
            return Err(Error::InvalidArgument(format!(
                "rebin target {bins} out of range for {} bins",
                self.len()
            )));
        }
        let mut out = self.counts[..bins].to_vec();
        out[bins - 1] += self.counts[bins..].iter().sum::<u64>();
        Ok(Self::from_parts(out, self.total))
    }
}

/// A normalized probability distribution over `n >= 2` bins.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    probs: Vec<f64>,
}

impl ProbabilityVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.len() < 2 {
            return Err(Error::InvalidProbabilities(format!(
                "need at least 2 bins, got {}",
                probs.len()
            )));
        }
        for (k, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidProbabilities(format!(
                    "entry {k} is {p}, must be finite and >= 0"
                )));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOL {
            return Err(Error::InvalidProbabilities(format!(
                "entries sum to {sum}, not 1"
            )));
        }
        Ok(Self { probs })
    }

    /// Normalize nonnegative weights into a probability vector.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidProbabilities(format!(
                "need at least 2 bins, got {}",
                weights.len()
            )));
        }
        for (k, &w) in weights.iter().enumerate() {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidProbabilities(format!(
                    "weight {k} is {w}, must be finite and >= 0"
                )));
            }
        }
        let sum: f64 = weights.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidProbabilities(
                "weights sum to zero".into(),
            ));
        }
        let probs = weights.into_iter().map(|w| w / sum).collect();
        Ok(Self { probs })
    }

    pub fn uniform(bins: usize) -> Result<Self> {
        Self::from_weights(vec![1.0; bins])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Aggregate every bin from index `bins - 1` on into a single final bin.
    /// The final bin's probability is exactly the sum of the aggregated ones.
    pub fn rebinned_tail(&self, bins: usize) -> Result<Self> {
        if bins < 2 || bins > self.len() {
            return Err(Error::InvalidArgument(format!(
                "rebin target {bins} out of range for {} bins",
                self.len()
            )));
        }
        let mut out = self.probs[..bins].to_vec();
        out[bins - 1] += self.probs[bins..].iter().sum::<f64>();
        Ok(Self { probs: out })
    }
}

/// An `r x r` cross-tabulation of counts, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTable {
    side: usize,
    cells: Vec<u64>,
}

impl SquareTable {
    /// Build from rows; every row must have exactly as many entries as there
    /// are rows.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let side = rows.len();
        if side < 2 {
            return Err(Error::InvalidCounts(format!(
                "square table needs side >= 2, got {side}"
            )));
        }
        let mut cells = Vec::with_capacity(side * side);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != side {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!(
                        "ragged table: row {} has {} entries, expected {side}",
                        i + 1,
                        row.len()
                    ),
                });
            }
            cells.extend_from_slice(row);
        }
        Ok(Self { side, cells })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// Cell (row, col), zero-based.
    pub fn cell(&self, row: usize, col: usize) -> u64 {
        self.cells[row * self.side + col]
    }

    pub fn cells(&self) -> &[u64] {
        &self.cells
    }

    pub fn total(&self) -> u64 {
        self.cells.iter().sum()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.cells.chunks(self.side).map(<[u64]>::to_vec).collect()
    }

    /// Flatten row-major into a count vector over `side^2` bins.
    pub fn flatten(&self) -> Result<CountVector> {
        CountVector::new(self.cells.clone())
    }
}
