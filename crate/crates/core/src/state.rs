//! Amplitude-vector representation of an n-bit register, plus measurement
//! sampling.
//!
//! A register over `n` bits has `N = 2^n` basis states addressed by the
//! integer value of the bit string; bit `k` of the index is qubit `k`, with
//! bit 0 least significant. Amplitudes are complex doubles and every
//! constructor and transform keeps the vector normalized.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on register width: 2^26 amplitudes at 16 bytes each is 1 GiB.
pub const MAX_QUBITS: u32 = 26;

/// Number of bits in the register, restricted to `1..=MAX_QUBITS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QubitCount(u32);

impl QubitCount {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange(n));
        }
        Ok(QubitCount(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// N = 2^n, the number of basis states.
    pub fn state_count(self) -> usize {
        1usize << self.0
    }
}

/// Index of a basis state, in `[0, 2^n)` for the owning register's `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisIndex(pub usize);

impl BasisIndex {
    /// Validates the index against a register width.
    pub fn checked(value: usize, n: QubitCount) -> Result<Self> {
        if value >= n.state_count() {
            return Err(Error::BasisIndexOutOfRange {
                index: value,
                qubits: n.get(),
                states: n.state_count(),
            });
        }
        Ok(BasisIndex(value))
    }

    pub fn value(self) -> usize {
        self.0
    }
}

/// Normalized complex amplitude vector of length 2^n.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: QubitCount,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The uniform superposition: every amplitude is 1/sqrt(N).
    pub fn uniform(n: QubitCount) -> Self {
        let len = n.state_count();
        let amp = Complex64::new(1.0 / (len as f64).sqrt(), 0.0);
        StateVector {
            n,
            amps: vec![amp; len],
        }
    }

    /// A single basis state: amplitude 1 at `index`, 0 elsewhere.
    pub fn basis(n: QubitCount, index: BasisIndex) -> Result<Self> {
        let index = BasisIndex::checked(index.value(), n)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); n.state_count()];
        amps[index.value()] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// Adopts raw amplitudes; the vector must have length 2^n and be
    /// normalized to within the crate tolerance of 1e-9.
    pub fn from_amplitudes(n: QubitCount, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != n.state_count() {
            return Err(Error::InvalidStateLength {
                expected: n.state_count(),
                actual: amps.len(),
            });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized(norm));
        }
        Ok(StateVector { n, amps })
    }

    pub fn qubit_count(&self) -> QubitCount {
        self.n
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is 2^n with n >= 1
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: BasisIndex) -> Complex64 {
        self.amps[index.value()]
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    /// Euclidean norm, sqrt of the summed squared magnitudes. 1 for any
    /// state produced by this crate's constructors and transforms.
    pub fn norm(&self) -> f64 {
        pairwise_norm_sqr(&self.amps).sqrt()
    }

    /// Squared-magnitude distribution over basis states.
    pub fn probabilities(&self) -> ProbabilityDistribution {
        ProbabilityDistribution {
            probs: self.amps.iter().map(|a| a.norm_sqr()).collect(),
        }
    }

    /// Mean of all amplitudes, the quantity the diffusion transform inverts
    /// about.
    pub fn average_amplitude(&self) -> Complex64 {
        pairwise_sum(&self.amps) / self.len() as f64
    }
}

// Summing up to 2^26 terms sequentially costs ~N*eps of accuracy, which
// eats most of the 1e-9 norm budget over a long run; pairwise summation
// keeps the error at ~log2(N)*eps.

const PAIRWISE_LEAF: usize = 128;

fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    if values.len() <= PAIRWISE_LEAF {
        return values.iter().sum();
    }
    let (lo, hi) = values.split_at(values.len() / 2);
    pairwise_sum(lo) + pairwise_sum(hi)
}

fn pairwise_norm_sqr(values: &[Complex64]) -> f64 {
    if values.len() <= PAIRWISE_LEAF {
        return values.iter().map(|a| a.norm_sqr()).sum();
    }
    let (lo, hi) = values.split_at(values.len() / 2);
    pairwise_norm_sqr(lo) + pairwise_norm_sqr(hi)
}

/// Measurement distribution: `probs[i]` is the chance of observing basis
/// state `i`. Sums to 1 on normalized input.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probs: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

/// Draws `count` independent basis states from the squared-magnitude
/// distribution of `state`.
///
/// Deterministic: the same `(state, seed, count)` always yields the same
/// sequence (ChaCha8 keyed by `seed`, inverse-CDF over one cumulative pass).
/// A draw landing exactly on an interval boundary resolves to the lower
/// index; zero-probability outcomes are never produced.
pub fn measure_sample(state: &StateVector, seed: u64, count: usize) -> Vec<BasisIndex> {
    let probs = state.probabilities();
    let probs = probs.as_slice();
    let mut cumulative = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for &p in probs {
        acc += p;
        cumulative.push(acc);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| BasisIndex(sample_index(&cumulative, probs, rng.gen::<f64>())))
        .collect()
}

/// Smallest index whose cumulative weight reaches `u`, skipping zero-width
/// intervals. `u` is in [0, 1); the final clamp covers states whose total
/// falls a rounding error short of 1.
fn sample_index(cumulative: &[f64], probs: &[f64], u: f64) -> usize {
    let mut idx = cumulative.partition_point(|&c| c < u);
    while idx < probs.len() && probs[idx] == 0.0 {
        idx += 1;
    }
    if idx >= probs.len() {
        idx = probs
            .iter()
            .rposition(|&p| p > 0.0)
            .expect("state vector has no nonzero amplitude");
    }
    idx
}
