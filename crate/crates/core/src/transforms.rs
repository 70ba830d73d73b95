//! The unitary transforms of the search algorithm: the single-bit
//! superposition transform, the fast Walsh-Hadamard transform, selective
//! phase rotation, the oracle phase flip, and the diffusion transform in
//! both its direct (inversion about average) and W-R-W forms.
//!
//! All transforms act in place and preserve the norm.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{BasisIndex, QubitCount, StateVector};

/// A phase rotation e^{i phi} applied to the amplitudes of every basis
/// state accepted by the predicate. Magnitudes are untouched.
pub struct PhaseSpec {
    phi: f64,
    predicate: Box<dyn Fn(BasisIndex) -> bool + Send + Sync>,
}

impl PhaseSpec {
    pub fn new(
        phi: f64,
        predicate: impl Fn(BasisIndex) -> bool + Send + Sync + 'static,
    ) -> Self {
        PhaseSpec {
            phi,
            predicate: Box::new(predicate),
        }
    }

    /// Rotates exactly the given basis indices.
    pub fn for_indices(phi: f64, indices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        Self::new(phi, move |i| set.contains(&i.value()))
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn selects(&self, index: BasisIndex) -> bool {
        (self.predicate)(index)
    }
}

/// The search condition C(S): a set of marked basis states plus a counter
/// of how many times the condition has been consulted. One phase-flip call
/// counts as one query, the loop-visible cost unit.
#[derive(Debug, Clone)]
pub struct Oracle {
    n: QubitCount,
    marked: BTreeSet<usize>,
    queries: u64,
}

impl Oracle {
    pub fn new(n: QubitCount, marked: impl IntoIterator<Item = BasisIndex>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for index in marked {
            BasisIndex::checked(index.value(), n)?;
            set.insert(index.value());
        }
        Ok(Oracle {
            n,
            marked: set,
            queries: 0,
        })
    }

    /// The single-marked-state oracle the algorithm's guarantees cover.
    pub fn single(n: QubitCount, marked: BasisIndex) -> Result<Self> {
        Self::new(n, [marked])
    }

    pub fn qubit_count(&self) -> QubitCount {
        self.n
    }

    pub fn is_marked(&self, index: BasisIndex) -> bool {
        self.marked.contains(&index.value())
    }

    pub fn marked_indices(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        self.marked.iter().map(|&i| BasisIndex(i))
    }

    pub fn marked_count(&self) -> usize {
        self.marked.len()
    }

    pub fn queries(&self) -> u64 {
        self.queries
    }
}

/// One butterfly stage over bit `bit`: for every index pair differing only
/// in that bit, (a, b) -> ((a+b)/sqrt2, (a-b)/sqrt2). Scaling by 1/sqrt2
/// at each stage keeps every intermediate state normalized.
fn butterfly_stage(amps: &mut [Complex64], bit: u32) {
    let stride = 1usize << bit;
    let mut base = 0;
    while base < amps.len() {
        for low in base..base + stride {
            let high = low + stride;
            let a = amps[low];
            let b = amps[high];
            amps[low] = (a + b) * FRAC_1_SQRT_2;
            amps[high] = (a - b) * FRAC_1_SQRT_2;
        }
        base += stride << 1;
    }
}

/// The two-state superposition transform on one bit of the register.
pub fn single_bit_hadamard(state: &mut StateVector, bit: u32) -> Result<()> {
    let n = state.qubit_count();
    if bit >= n.get() {
        return Err(Error::BitOutOfRange {
            bit,
            qubits: n.get(),
        });
    }
    butterfly_stage(state.amplitudes_mut(), bit);
    Ok(())
}

/// Full Walsh-Hadamard transform, the single-bit transform applied to every
/// bit: an in-place butterfly, O(N log N) arithmetic. Self-inverse.
pub fn walsh_hadamard(state: &mut StateVector) {
    let n = state.qubit_count().get();
    let amps = state.amplitudes_mut();
    for bit in 0..n {
        butterfly_stage(amps, bit);
    }
}

/// Rotates the phase of every selected amplitude by e^{i phi}.
pub fn selective_phase(state: &mut StateVector, spec: &PhaseSpec) {
    let rotation = Complex64::from_polar(1.0, spec.phi());
    for (i, amp) in state.amplitudes_mut().iter_mut().enumerate() {
        if spec.selects(BasisIndex(i)) {
            *amp *= rotation;
        }
    }
}

/// Inverts the sign of every marked amplitude (a pi phase rotation, applied
/// exactly) and counts one oracle query.
pub fn oracle_phase_flip(state: &mut StateVector, oracle: &mut Oracle) -> Result<()> {
    if oracle.n != state.qubit_count() {
        return Err(Error::DimensionMismatch {
            left: oracle.n.get(),
            right: state.qubit_count().get(),
        });
    }
    let amps = state.amplitudes_mut();
    for &i in &oracle.marked {
        amps[i] = -amps[i];
    }
    oracle.queries += 1;
    Ok(())
}

/// Inversion about average: with A the mean amplitude, every amplitude v
/// becomes 2A - v. The average is taken in a separate full pass so the
/// update reads a single fixed scalar.
pub fn diffusion_direct(state: &mut StateVector) {
    invert_about_average(state);
}

/// Same as [`diffusion_direct`] but hands back the average it inverted
/// about, for trajectory capture.
pub(crate) fn invert_about_average(state: &mut StateVector) -> Complex64 {
    let average = state.average_amplitude();
    let twice = average * 2.0;
    for amp in state.amplitudes_mut() {
        *amp = twice - *amp;
    }
    average
}

/// The diffusion transform factored into Walsh-Hadamard, a phase rotation
/// that negates every amplitude except that of state 0, and Walsh-Hadamard
/// again. Agrees with [`diffusion_direct`] to within accumulated rounding.
pub fn diffusion_wrw(state: &mut StateVector) {
    walsh_hadamard(state);
    let amps = state.amplitudes_mut();
    for amp in amps.iter_mut().skip(1) {
        *amp = -*amp;
    }
    walsh_hadamard(state);
}
