use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::map::{self, MapParams, MapState};

use super::linspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweptParameter {
    A,
    B,
}

/// A bifurcation sweep over one coefficient with the other held fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub swept: SweptParameter,
    pub fixed_value: f64,
    pub range_low: f64,
    pub range_high: f64,
    pub steps: usize,
    pub iterations: usize,
    pub transient: usize,
    pub initial_state: MapState,
}

impl SweepSpec {
    /// Defaults used for the published diagrams: start at `(0.1, 0.1)`,
    /// 500 discarded steps.
    pub fn new(swept: SweptParameter, fixed_value: f64, range: (f64, f64)) -> Self {
        Self {
            swept,
            fixed_value,
            range_low: range.0,
            range_high: range.1,
            steps: 100,
            iterations: 2500,
            transient: 500,
            initial_state: MapState { x: 0.1, y: 0.1 },
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.range_low.is_finite() && self.range_high.is_finite())
            || self.range_low >= self.range_high
        {
            return Err(Error::invalid(format!(
                "sweep range [{}, {}] is empty",
                self.range_low, self.range_high
            )));
        }
        if self.steps < 2 {
            return Err(Error::invalid("sweep needs at least 2 steps"));
        }
        if self.iterations <= self.transient {
            return Err(Error::invalid("iterations must exceed transient"));
        }
        MapState::new(self.initial_state.x, self.initial_state.y)?;
        if !self.fixed_value.is_finite() {
            return Err(Error::invalid("fixed parameter must be finite"));
        }
        Ok(())
    }

    fn params_at(&self, value: f64) -> MapParams {
        match self.swept {
            SweptParameter::A => MapParams {
                a: value,
                b: self.fixed_value,
            },
            SweptParameter::B => MapParams {
                a: self.fixed_value,
                b: value,
            },
        }
    }

    pub fn parameter_values(&self) -> Vec<f64> {
        linspace(self.range_low, self.range_high, self.steps).collect()
    }
}

/// One bifurcation-diagram point: the map coefficients and an asymptotic x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BifurcationRow {
    pub a: f64,
    pub b: f64,
    pub x: f64,
}

/// `steps × (iterations − transient)` rows, grouped by parameter value in
/// sweep order.
pub fn bifurcation_sweep(spec: &SweepSpec) -> Result<Vec<BifurcationRow>> {
    spec.validate()?;
    let kept = spec.iterations - spec.transient;
    let columns: Vec<Result<Vec<BifurcationRow>>> = spec
        .parameter_values()
        .into_par_iter()
        .map(|v| {
            let params = spec.params_at(v);
            let orbit = map::generate_sequence(params, spec.initial_state, kept, spec.transient)?;
            Ok(orbit
                .xs
                .into_iter()
                .map(|x| BifurcationRow {
                    a: params.a,
                    b: params.b,
                    x,
                })
                .collect())
        })
        .collect();
    let mut rows = Vec::with_capacity(spec.steps * kept);
    for col in columns {
        rows.extend(col?);
    }
    Ok(rows)
}

/// Number of the `bins` equal-width bins of `[0, 1)` hit by at least one value.
pub fn bin_coverage(values: impl IntoIterator<Item = f64>, bins: usize) -> usize {
    let mut hit = vec![false; bins];
    for v in values {
        if (0.0..1.0).contains(&v) {
            hit[((v * bins as f64) as usize).min(bins - 1)] = true;
        }
    }
    hit.iter().filter(|&&h| h).count()
}
