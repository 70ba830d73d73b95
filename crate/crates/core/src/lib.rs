//! State-vector simulator for the quantum search algorithm.
//!
//! The crate is organized around the pieces of the algorithm:
//!
//! - [`state`]: the normalized amplitude vector over 2^n basis states,
//!   probabilities, and seeded measurement sampling.
//! - [`transforms`]: the fast in-place unitaries — single-bit and full
//!   Walsh-Hadamard butterflies, selective phase rotation, the oracle phase
//!   flip, and the diffusion transform (direct and factored forms).
//! - [`dense`]: the same operators as explicit small matrices, used as the
//!   reference the fast paths are verified against.
//! - [`engine`]: the search loop with iteration scheduling, trajectory
//!   tracing, the closed-form amplitude oracle, and the classical
//!   random-scan baseline.
//! - [`verify`]: the operator-identity suite (WW=I, D=WRW, D=-I+2P, P²=P,
//!   D²=I, unitarity, fast-vs-dense agreement).

pub mod dense;
pub mod engine;
pub mod error;
pub mod state;
pub mod transforms;
pub mod verify;

pub use num_complex::Complex64;

pub use dense::DenseOperator;
pub use engine::{
    analytic_amplitude, analytic_success_prob, classical_baseline, grover_iterate,
    resolve_iterations, run, ClassicalSummary, DiffusionKind, IterationMode, RunConfig, RunResult,
    TrajectoryPoint,
};
pub use error::{Error, Result};
pub use state::{measure_sample, BasisIndex, ProbabilityDistribution, QubitCount, StateVector};
pub use transforms::{
    diffusion_direct, diffusion_wrw, oracle_phase_flip, selective_phase, single_bit_hadamard,
    walsh_hadamard, Oracle, PhaseSpec,
};
