//! Convergence behavior of the search loop, checked against the full state
//! vector: the two-amplitude subspace, the per-iteration growth bound, the
//! half-probability crossing, and the inversion-about-average reading of
//! the diffusion step.

use grover_core::{
    diffusion_direct, grover_iterate, measure_sample, oracle_phase_flip, run, BasisIndex,
    DiffusionKind, IterationMode, Oracle, QubitCount, RunConfig, StateVector,
};

fn qc(n: u32) -> QubitCount {
    QubitCount::new(n).unwrap()
}

fn base_config(n: u32, marked: usize) -> RunConfig {
    RunConfig {
        n: qc(n),
        marked: BasisIndex(marked),
        iterations: IterationMode::Auto,
        seed: 0,
        sample_count: 0,
        trace: false,
        diffusion: DiffusionKind::Direct,
    }
}

/// From a uniform start all unmarked amplitudes stay mutually equal and the
/// state stays on the unit circle of the two-dimensional subspace.
#[test]
fn unmarked_amplitudes_stay_equal() {
    for n in 2..=8u32 {
        let n = qc(n);
        let states = n.state_count();
        for marked in [0, states - 1, states / 2] {
            let mut state = StateVector::uniform(n);
            let mut oracle = Oracle::single(n, BasisIndex(marked)).unwrap();
            let steps = (states as f64).sqrt().ceil() as u64 + 2;
            for _ in 0..steps {
                grover_iterate(&mut state, &mut oracle, DiffusionKind::Direct).unwrap();

                let amps = state.amplitudes();
                let mut min_unmarked = f64::INFINITY;
                let mut max_unmarked = f64::NEG_INFINITY;
                for (i, a) in amps.iter().enumerate() {
                    assert!(a.im.abs() < 1e-12);
                    if i != marked {
                        min_unmarked = min_unmarked.min(a.re);
                        max_unmarked = max_unmarked.max(a.re);
                    }
                }
                assert!(max_unmarked - min_unmarked <= 1e-10);

                let k = amps[marked].re;
                let l = amps[if marked == 0 { 1 } else { 0 }].re;
                let identity = k * k + (states as f64 - 1.0) * l * l;
                assert!((identity - 1.0).abs() <= 1e-9);
            }
        }
    }
}

/// Until the marked amplitude first exceeds 1/sqrt(2), each iteration grows
/// it by more than 1/sqrt(2N).
#[test]
fn growth_bound_until_half_power() {
    for n in 2..=12u32 {
        let n = qc(n);
        let states = n.state_count() as f64;
        let threshold = std::f64::consts::FRAC_1_SQRT_2;
        let min_increase = 1.0 / (2.0 * states).sqrt();

        let mut state = StateVector::uniform(n);
        let mut oracle = Oracle::single(n, BasisIndex(0)).unwrap();
        let mut current = state.amplitude(BasisIndex(0)).re;
        loop {
            if current > threshold {
                break;
            }
            grover_iterate(&mut state, &mut oracle, DiffusionKind::Direct).unwrap();
            let next = state.amplitude(BasisIndex(0)).re;
            assert!(
                next - current > min_increase,
                "n={}: increase {} <= bound {}",
                n.get(),
                next - current,
                min_increase
            );
            current = next;
        }
    }
}

/// The success probability reaches 0.5 within ceil(sqrt(N)) iterations.
#[test]
fn half_probability_reached_within_sqrt_n() {
    for n in 2..=14u32 {
        let n = qc(n);
        let states = n.state_count();
        let limit = (states as f64).sqrt().ceil() as u64;
        for marked in [0, states - 1, states / 2] {
            let mut state = StateVector::uniform(n);
            let mut oracle = Oracle::single(n, BasisIndex(marked)).unwrap();
            let mut crossing = None;
            for j in 1..=limit {
                grover_iterate(&mut state, &mut oracle, DiffusionKind::Direct).unwrap();
                if state.amplitude(BasisIndex(marked)).norm_sqr() >= 0.5 {
                    crossing = Some(j);
                    break;
                }
            }
            assert!(
                crossing.is_some(),
                "n={} marked={marked}: no crossing within {limit} iterations",
                n.get()
            );
        }
    }
}

/// Every diffusion maps each amplitude v to 2A - v with A the mean of the
/// phase-flipped vector, and the traced average matches.
#[test]
fn diffusion_is_inversion_about_average() {
    for n in [2u32, 3, 5] {
        let n = qc(n);
        let marked = BasisIndex(n.state_count() - 1);
        let iterations = 4;

        let mut cfg = base_config(n.get(), marked.value());
        cfg.iterations = IterationMode::Explicit(iterations);
        cfg.trace = true;
        let traced = run(&cfg).unwrap();

        let mut state = StateVector::uniform(n);
        let mut oracle = Oracle::single(n, marked).unwrap();
        for j in 1..=iterations {
            oracle_phase_flip(&mut state, &mut oracle).unwrap();
            let flipped = state.clone();
            let average = flipped
                .amplitudes()
                .iter()
                .sum::<grover_core::Complex64>()
                / flipped.len() as f64;
            diffusion_direct(&mut state);

            for (post, pre) in state.amplitudes().iter().zip(flipped.amplitudes()) {
                assert!((post - (average * 2.0 - pre)).norm() <= 1e-10);
            }
            let point = traced.trajectory[j as usize];
            assert!((point.average_after_flip - average.re).abs() <= 1e-12);
            assert!((point.marked_amp - state.amplitude(marked).re).abs() <= 1e-12);
        }
    }
}

/// Both diffusion implementations drive the same full run.
#[test]
fn direct_and_factored_runs_agree() {
    for n in [2u32, 6, 10, 12] {
        let n = qc(n);
        let marked = BasisIndex(n.state_count() / 3);
        let iterations =
            grover_core::resolve_iterations(n, IterationMode::Auto).unwrap();

        let mut direct = StateVector::uniform(n);
        let mut factored = StateVector::uniform(n);
        let mut oracle_a = Oracle::single(n, marked).unwrap();
        let mut oracle_b = Oracle::single(n, marked).unwrap();
        for _ in 0..iterations {
            grover_iterate(&mut direct, &mut oracle_a, DiffusionKind::Direct).unwrap();
            grover_iterate(&mut factored, &mut oracle_b, DiffusionKind::Wrw).unwrap();
        }
        for (a, b) in direct.amplitudes().iter().zip(factored.amplitudes()) {
            assert!((a - b).norm() <= 1e-8);
        }

        let mut cfg = base_config(n.get(), marked.value());
        cfg.diffusion = DiffusionKind::Wrw;
        let result = run(&cfg).unwrap();
        assert!((result.final_success_prob - direct.amplitude(marked).norm_sqr()).abs() <= 1e-8);
        assert_eq!(result.oracle_queries, result.iterations_executed);
    }
}

/// Empirical sample frequencies stay within 3-sigma binomial bounds of the
/// state's probabilities for every outcome with p >= 0.01.
#[test]
fn sampling_matches_probabilities() {
    // A mid-run state carries one dominant and many small probabilities.
    let n = qc(3);
    let mut state = StateVector::uniform(n);
    let mut oracle = Oracle::single(n, BasisIndex(5)).unwrap();
    grover_iterate(&mut state, &mut oracle, DiffusionKind::Direct).unwrap();

    let total = 10_000usize;
    let draws = measure_sample(&state, 424_242, total);
    let mut histogram = vec![0usize; n.state_count()];
    for d in &draws {
        histogram[d.value()] += 1;
    }
    for (i, &p) in state.probabilities().as_slice().iter().enumerate() {
        if p < 0.01 {
            continue;
        }
        let frequency = histogram[i] as f64 / total as f64;
        let sigma = (p * (1.0 - p) / total as f64).sqrt();
        assert!(
            (frequency - p).abs() <= 3.0 * sigma,
            "outcome {i}: frequency {frequency} vs probability {p}"
        );
    }
}
