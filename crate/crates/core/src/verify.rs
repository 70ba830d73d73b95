//! Numerical verification of the operator identities behind the search
//! loop, run against the dense reference matrices for every register size
//! up to a requested cap. The fast in-place transforms are checked against
//! the dense path on random states as part of the same suite.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::DenseOperator;
use crate::error::Result;
use crate::state::{QubitCount, StateVector};
use crate::transforms::{diffusion_direct, diffusion_wrw, walsh_hadamard};

/// Outcome of one identity across all checked register sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Suite parameters. `corrupt_phase_rotation_sign` is a test hook that
/// flips the global sign of the dense phase rotation matrix; the factored
/// diffusion identity must then fail and name itself.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_qubits: u32,
    pub random_states_per_size: usize,
    pub corrupt_phase_rotation_sign: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_qubits: 6,
            random_states_per_size: 20,
            corrupt_phase_rotation_sign: false,
        }
    }
}

struct DeviationTracker {
    name: &'static str,
    tolerance: f64,
    max_deviation: f64,
}

impl DeviationTracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        DeviationTracker {
            name,
            tolerance,
            max_deviation: 0.0,
        }
    }

    fn record(&mut self, deviation: f64) {
        if deviation > self.max_deviation {
            self.max_deviation = deviation;
        }
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name,
            max_deviation: self.max_deviation,
            tolerance: self.tolerance,
            passed: self.max_deviation <= self.tolerance,
        }
    }
}

/// Runs every identity for n = 1 ..= `max_qubits` and reports the worst
/// deviation per identity. Deterministic: random states come from a fixed
/// per-size seed.
pub fn run_identity_suite(options: &VerifyOptions) -> Result<Vec<IdentityCheck>> {
    let mut ww = DeviationTracker::new("WW=I", 1e-12);
    let mut wrw = DeviationTracker::new("D=WRW", 1e-12);
    let mut projection_form = DeviationTracker::new("D=-I+2P", 1e-12);
    let mut idempotent = DeviationTracker::new("P^2=P", 1e-12);
    let mut involution = DeviationTracker::new("D^2=I", 1e-12);
    let mut w_unitary = DeviationTracker::new("W unitary", 1e-12);
    let mut d_unitary = DeviationTracker::new("D unitary", 1e-12);
    let mut walsh_fast = DeviationTracker::new("walsh fast=dense", 1e-12);
    let mut diffusion_fast = DeviationTracker::new("diffusion fast=dense", 1e-10);

    for qubits in 1..=options.max_qubits {
        let n = QubitCount::new(qubits)?;
        let w = DenseOperator::walsh(n)?;
        let r = {
            let base = DenseOperator::phase_rotation(n)?;
            if options.corrupt_phase_rotation_sign {
                DenseOperator::from_fn(n, |i, j| -base.entry(i, j))?
            } else {
                base
            }
        };
        let p = DenseOperator::average_projection(n)?;
        let d = DenseOperator::diffusion(n)?;
        let identity = DenseOperator::identity(n)?;

        ww.record(w.matmul(&w)?.max_abs_diff(&identity));
        wrw.record(w.matmul(&r)?.matmul(&w)?.max_abs_diff(&d));

        let from_projection = DenseOperator::from_fn(n, |i, j| {
            let id = if i == j { 1.0 } else { 0.0 };
            Complex64::new(-id, 0.0) + p.entry(i, j) * 2.0
        })?;
        projection_form.record(d.max_abs_diff(&from_projection));

        idempotent.record(p.matmul(&p)?.max_abs_diff(&p));
        involution.record(d.matmul(&d)?.max_abs_diff(&identity));
        w_unitary.record(w.unitarity_deviation());
        d_unitary.record(d.unitarity_deviation());

        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ u64::from(qubits));
        for _ in 0..options.random_states_per_size {
            let state = random_state(n, &mut rng);

            let dense_w = w.apply(state.amplitudes())?;
            let mut fast_w = state.clone();
            walsh_hadamard(&mut fast_w);
            walsh_fast.record(max_component_diff(fast_w.amplitudes(), &dense_w));

            let dense_d = d.apply(state.amplitudes())?;
            let mut fast_direct = state.clone();
            diffusion_direct(&mut fast_direct);
            diffusion_fast.record(max_component_diff(fast_direct.amplitudes(), &dense_d));

            let mut fast_wrw = state.clone();
            diffusion_wrw(&mut fast_wrw);
            diffusion_fast.record(max_component_diff(fast_wrw.amplitudes(), &dense_d));
        }
    }

    Ok(vec![
        ww.finish(),
        wrw.finish(),
        projection_form.finish(),
        idempotent.finish(),
        involution.finish(),
        w_unitary.finish(),
        d_unitary.finish(),
        walsh_fast.finish(),
        diffusion_fast.finish(),
    ])
}

/// A random normalized complex state, for exercising the fast transforms
/// on inputs with no special structure.
pub fn random_state(n: QubitCount, rng: &mut ChaCha8Rng) -> StateVector {
    let mut state = StateVector::uniform(n);
    let amps = state.amplitudes_mut();
    let mut norm_sqr = 0.0;
    for amp in amps.iter_mut() {
        *amp = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        norm_sqr += amp.norm_sqr();
    }
    let scale = norm_sqr.sqrt().recip();
    for amp in amps.iter_mut() {
        *amp *= scale;
    }
    state
}

fn max_component_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
