//! Chaos diagnostics and the experiments built on the cipher and optimizer.

mod bifurcation;
mod experiments;
mod keyspace;
mod lyapunov;

pub use bifurcation::{bifurcation_sweep, bin_coverage, BifurcationRow, SweepSpec, SweptParameter};
pub use experiments::{
    fitness_landscape, length_experiment, printable_plaintext, LandscapeRow, LengthExperiment,
    LengthRun, LengthSummary,
};
pub use keyspace::{
    keyspace_size, sensitivity_probe, KeyComponent, KeyRange, PUBLISHED_KEY_RANGES,
};
pub use lyapunov::{lyapunov_spectrum, LyapunovResult, DEFAULT_ITERATIONS, DEFAULT_TRANSIENT};

/// `steps` evenly spaced points from `lo` to `hi` inclusive.
pub(crate) fn linspace(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    let span = hi - lo;
    let last = (steps.max(2) - 1) as f64;
    (0..steps).map(move |i| {
        if i + 1 == steps {
            hi
        } else {
            lo + span * i as f64 / last
        }
    })
}

/// Midpoints of `cells` equal cells of `(lo, hi)`; never touches the ends.
pub(crate) fn cell_centers(lo: f64, hi: f64, cells: usize) -> impl Iterator<Item = f64> {
    let width = (hi - lo) / cells as f64;
    (0..cells).map(move |i| lo + (i as f64 + 0.5) * width)
}
