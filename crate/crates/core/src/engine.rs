//! The search loop: uniform initialization, oracle flip plus diffusion
//! repeated a scheduled number of times, per-iteration trajectory capture,
//! the closed-form amplitude used to schedule iterations, and the classical
//! random-scan baseline it is compared against.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{measure_sample, BasisIndex, QubitCount, StateVector};
use crate::transforms::{
    diffusion_wrw, invert_about_average, oracle_phase_flip, Oracle,
};

/// Guard on explicit iteration counts so a mistyped flag cannot run for
/// hours.
pub const MAX_EXPLICIT_ITERATIONS: u64 = 1 << 20;

/// Iteration schedule: an explicit count, or the argmax of the closed-form
/// success probability over a pi/4 * sqrt(N) window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IterationMode {
    Auto,
    Explicit(u64),
}

/// Which implementation of the diffusion transform the loop applies. Both
/// compute the same operator; direct is O(N) per iteration, the factored
/// form exercises the Walsh-Hadamard path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffusionKind {
    #[default]
    Direct,
    Wrw,
}

/// Parameters of one search experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: QubitCount,
    pub marked: BasisIndex,
    pub iterations: IterationMode,
    pub seed: u64,
    pub sample_count: usize,
    pub trace: bool,
    pub diffusion: DiffusionKind,
}

/// State of the search after iteration `j` (j = 0 is the uniform start).
///
/// From a uniform start the state stays in a two-dimensional subspace: one
/// shared amplitude for every unmarked state and one for the marked state,
/// both real. `c_scale` is the unmarked amplitude scaled by sqrt(N);
/// `average_after_flip` is the mean amplitude of the phase-flipped vector
/// the diffusion of iteration `j` inverted about (for j = 0, where no flip
/// has happened, the plain mean of the initial state).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    pub j: u64,
    pub marked_amp: f64,
    pub unmarked_amp: f64,
    pub c_scale: f64,
    pub average_after_flip: f64,
    pub success_prob: f64,
}

/// Everything a search run produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub config: RunConfig,
    pub trajectory: Vec<TrajectoryPoint>,
    pub final_success_prob: f64,
    pub iterations_executed: u64,
    pub oracle_queries: u64,
    pub samples: Vec<BasisIndex>,
    pub sample_hit_fraction: f64,
}

/// One loop body: oracle phase flip followed by the diffusion transform.
pub fn grover_iterate(
    state: &mut StateVector,
    oracle: &mut Oracle,
    diffusion: DiffusionKind,
) -> Result<()> {
    oracle_phase_flip(state, oracle)?;
    match diffusion {
        DiffusionKind::Direct => {
            invert_about_average(state);
        }
        DiffusionKind::Wrw => diffusion_wrw(state),
    }
    Ok(())
}

/// Marked-state amplitude after `j` iterations from the uniform start:
/// sin((2j+1) * theta) with theta = arcsin(1/sqrt(N)).
///
/// This closed form is the engineering oracle behind [`IterationMode::Auto`];
/// it is derived from the two-amplitude recurrence of the loop and validated
/// against brute-force state-vector iteration in the test suite.
pub fn analytic_amplitude(n: QubitCount, j: u64) -> f64 {
    let theta = (1.0 / (n.state_count() as f64).sqrt()).asin();
    ((2 * j + 1) as f64 * theta).sin()
}

/// Probability of measuring the marked state after `j` iterations.
pub fn analytic_success_prob(n: QubitCount, j: u64) -> f64 {
    let amp = analytic_amplitude(n, j);
    amp * amp
}

/// Resolves the iteration schedule to a concrete count.
///
/// AUTO scans j = 0 ..= ceil(pi/4 * sqrt(N)) + 1 for the largest closed-form
/// success probability, ties toward the smaller j.
pub fn resolve_iterations(n: QubitCount, mode: IterationMode) -> Result<u64> {
    match mode {
        IterationMode::Explicit(count) => {
            if count > MAX_EXPLICIT_ITERATIONS {
                return Err(Error::IterationGuardExceeded(count));
            }
            Ok(count)
        }
        IterationMode::Auto => {
            let sqrt_states = (n.state_count() as f64).sqrt();
            let window = (std::f64::consts::FRAC_PI_4 * sqrt_states).ceil() as u64 + 1;
            let mut best_j = 0;
            let mut best = analytic_success_prob(n, 0);
            for j in 1..=window {
                let p = analytic_success_prob(n, j);
                if p > best {
                    best = p;
                    best_j = j;
                }
            }
            Ok(best_j)
        }
    }
}

/// Executes a full search run: uniform start, the resolved number of
/// iterations, optional trajectory capture at every step, then
/// `sample_count` measurements keyed by `seed`. Deterministic in the config.
pub fn run(config: &RunConfig) -> Result<RunResult> {
    let marked = BasisIndex::checked(config.marked.value(), config.n)?;
    let iterations = resolve_iterations(config.n, config.iterations)?;

    let mut state = StateVector::uniform(config.n);
    let mut oracle = Oracle::single(config.n, marked)?;

    let mut trajectory = Vec::new();
    if config.trace {
        let average = state.average_amplitude();
        trajectory.push(trajectory_point(0, &state, marked, average));
    }

    for j in 1..=iterations {
        oracle_phase_flip(&mut state, &mut oracle)?;
        let average_after_flip = match config.diffusion {
            DiffusionKind::Direct => invert_about_average(&mut state),
            DiffusionKind::Wrw => {
                let average = if config.trace {
                    state.average_amplitude()
                } else {
                    Complex64::new(0.0, 0.0)
                };
                diffusion_wrw(&mut state);
                average
            }
        };
        if config.trace {
            trajectory.push(trajectory_point(j, &state, marked, average_after_flip));
        }
    }

    let final_success_prob = state.amplitude(marked).norm_sqr().min(1.0);
    let samples = measure_sample(&state, config.seed, config.sample_count);
    let hits = samples.iter().filter(|s| **s == marked).count();
    let sample_hit_fraction = if samples.is_empty() {
        0.0
    } else {
        hits as f64 / samples.len() as f64
    };

    Ok(RunResult {
        config: config.clone(),
        trajectory,
        final_success_prob,
        iterations_executed: iterations,
        oracle_queries: oracle.queries(),
        samples,
        sample_hit_fraction,
    })
}

fn trajectory_point(
    j: u64,
    state: &StateVector,
    marked: BasisIndex,
    average_after_flip: Complex64,
) -> TrajectoryPoint {
    let marked_amp_full = state.amplitude(marked);
    // Starting from a real state, every amplitude on the trajectory is real.
    assert!(
        marked_amp_full.im.abs() <= 1e-12,
        "trajectory amplitude has an imaginary part: {}",
        marked_amp_full.im
    );
    assert!(average_after_flip.im.abs() <= 1e-12);

    let unmarked_index = BasisIndex(if marked.value() == 0 { 1 } else { 0 });
    let marked_amp = marked_amp_full.re;
    let unmarked_amp = state.amplitude(unmarked_index).re;
    TrajectoryPoint {
        j,
        marked_amp,
        unmarked_amp,
        c_scale: unmarked_amp * (state.len() as f64).sqrt(),
        average_after_flip: average_after_flip.re,
        success_prob: (marked_amp * marked_amp).min(1.0),
    }
}

/// Query-count summary of the classical random-order scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalSummary {
    pub mean_queries: f64,
    pub median_queries: f64,
    /// Smallest q with empirical P(found within q queries) >= 0.5.
    pub queries_for_half_success: u64,
}

/// Simulates classical search: each trial picks a uniformly random marked
/// index and scans the database in random order without repetition,
/// counting the accesses until the marked item turns up. Trial seeds are
/// derived as seed + trial index, so trials are independent and the result
/// does not depend on evaluation order.
pub fn classical_baseline(n: QubitCount, seed: u64, trials: usize) -> Result<ClassicalSummary> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let states = n.state_count();
    let mut counts: Vec<u64> = (0..trials)
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64));
            let marked = rng.gen_range(0..states);
            scan_until_found(states, marked, &mut rng)
        })
        .collect();
    counts.sort_unstable();

    let mean_queries = counts.iter().map(|&c| c as f64).sum::<f64>() / trials as f64;
    let median_queries = if trials % 2 == 1 {
        counts[trials / 2] as f64
    } else {
        (counts[trials / 2 - 1] + counts[trials / 2]) as f64 / 2.0
    };
    // Sorted counts: entry k is reached by (k+1)/trials of the trials.
    let queries_for_half_success = counts[trials.div_ceil(2) - 1];

    Ok(ClassicalSummary {
        mean_queries,
        median_queries,
        queries_for_half_success,
    })
}

/// Random-order scan without repetition, shuffled lazily: each step swaps a
/// uniformly chosen remaining item into place and examines it.
fn scan_until_found(states: usize, marked: usize, rng: &mut ChaCha8Rng) -> u64 {
    let mut order: Vec<usize> = (0..states).collect();
    for step in 0..states {
        let pick = rng.gen_range(step..states);
        order.swap(step, pick);
        if order[step] == marked {
            return (step + 1) as u64;
        }
    }
    unreachable!("the marked index is always somewhere in the scan order")
}
