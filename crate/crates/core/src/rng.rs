//! Reproducible random-number streams.
//!
//! Every Monte-Carlo work item (one simulation, one calibration sample, one
//! outer experiment, ...) gets its own ChaCha8 stream addressed by
//! `(master seed, stream id)`. Streams with distinct ids are statistically
//! independent, and the same `(seed, id)` pair always yields the same
//! sequence, so results do not depend on how work is scheduled across
//! threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Address of one independent random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    pub master_seed: u64,
    pub stream_index: u64,
}

impl RngStream {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        Self {
            master_seed,
            stream_index,
        }
    }

    /// Instantiate the generator for this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(self.stream_index);
        rng
    }
}

/// Purpose tag folded into the top byte of a stream id, so that the
/// simulation loop, calibration draws, the two power-simulation sides, and
/// outer experiment replicates never share a stream.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Domain {
    Simulation = 1,
    Calibration = 2,
    NullSide = 3,
    AltSide = 4,
    OuterDraw = 5,
}

pub(crate) fn domain_stream(domain: Domain, index: u64) -> u64 {
    debug_assert!(index < 1 << 56);
    ((domain as u64) << 56) | index
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive an independent sub-seed for a nested Monte-Carlo run (for example
/// the inner test of one outer replicate). Deterministic in all arguments.
pub fn derive_seed(seed: u64, tag: u64, index: u64) -> u64 {
    let a = splitmix64(seed ^ tag.wrapping_mul(0xA076_1D64_78BD_642F));
    splitmix64(a ^ index)
}
