//! Lyapunov spectrum of the hybrid map by tangent-space iteration.
//!
//! An orthonormal frame is pushed through the step Jacobian
//!
//! ```text
//! J(x, y) = [[ 1,      2πa·cos(2πy) ],
//!            [ −2a·x,  1            ]]
//! ```
//!
//! and re-orthonormalized with Gram–Schmidt after every step. The logs of the
//! diagonal stretch factors, averaged over the measured window, are the two
//! exponents.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::map::{step_unchecked, MapParams, MapState};

pub const DEFAULT_TRANSIENT: usize = 500;
/// 500 discarded plus 2000 measured steps.
pub const DEFAULT_ITERATIONS: usize = 2500;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LyapunovResult {
    /// Largest exponent, natural-log units per step.
    pub exponent_1: f64,
    pub exponent_2: f64,
    pub iterations: usize,
    pub transient: usize,
}

impl LyapunovResult {
    pub fn sum(&self) -> f64 {
        self.exponent_1 + self.exponent_2
    }
}

pub fn lyapunov_spectrum(
    params: MapParams,
    initial: MapState,
    iterations: usize,
    transient: usize,
) -> Result<LyapunovResult> {
    if iterations <= transient {
        return Err(Error::invalid("iterations must exceed transient"));
    }
    let params = MapParams::new(params.a, params.b)?;
    let mut state = MapState::new(initial.x, initial.y)?;
    let a = params.a;

    let mut e1 = [1.0, 0.0];
    let mut e2 = [0.0, 1.0];
    let mut sums = [0.0f64; 2];

    for i in 0..iterations {
        let j12 = TAU * a * (TAU * state.y).cos();
        let j21 = -2.0 * a * state.x;
        let apply = |v: [f64; 2]| [v[0] + j12 * v[1], j21 * v[0] + v[1]];
        let v1 = apply(e1);
        let v2 = apply(e2);

        let r11 = v1[0].hypot(v1[1]);
        let q1 = [v1[0] / r11, v1[1] / r11];
        let proj = q1[0] * v2[0] + q1[1] * v2[1];
        let w = [v2[0] - proj * q1[0], v2[1] - proj * q1[1]];
        let r22 = w[0].hypot(w[1]);
        if !(r11.is_finite() && r22.is_finite()) || r11 == 0.0 || r22 == 0.0 {
            return Err(Error::Numerical(format!(
                "degenerate tangent frame at step {i} (a={}, b={})",
                params.a, params.b
            )));
        }
        e1 = q1;
        e2 = [w[0] / r22, w[1] / r22];
        if i >= transient {
            sums[0] += r11.ln();
            sums[1] += r22.ln();
        }

        state = step_unchecked(params, state);
        if !(state.x.is_finite() && state.y.is_finite()) {
            return Err(Error::Numerical(format!("orbit diverged at step {i}")));
        }
    }

    let measured = (iterations - transient) as f64;
    let (mut l1, mut l2) = (sums[0] / measured, sums[1] / measured);
    if l2 > l1 {
        std::mem::swap(&mut l1, &mut l2);
    }
    Ok(LyapunovResult {
        exponent_1: l1,
        exponent_2: l2,
        iterations,
        transient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn start() -> MapState {
        MapState { x: 0.1, y: 0.1 }
    }

    #[test]
    fn rigid_rotation_has_zero_exponents() {
        let r = lyapunov_spectrum(MapParams { a: 0.0, b: 0.3 }, start(), 2500, 500).unwrap();
        assert!(
            r.exponent_1.abs() < 1e-6 && r.exponent_2.abs() < 1e-6,
            "{r:?}"
        );
    }

    #[test]
    fn sum_matches_mean_log_determinant() {
        // independent route: λ1 + λ2 = <ln |det J|> = <ln |1 + 4π a² x cos(2πy)|>
        let params = MapParams { a: 2.3, b: 1.7 };
        let r = lyapunov_spectrum(params, start(), 1500, 300).unwrap();
        let mut s = start();
        let mut acc = 0.0;
        for i in 0..1500 {
            if i >= 300 {
                let det = 1.0 + 2.0 * TAU * params.a * params.a * s.x * (TAU * s.y).cos();
                acc += det.abs().ln();
            }
            s = step_unchecked(params, s);
        }
        let expected = acc / 1200.0;
        assert!(
            (r.sum() - expected).abs() < 1e-9,
            "{} vs {}",
            r.sum(),
            expected
        );
    }

    #[test]
    fn sorted_descending() {
        let r = lyapunov_spectrum(MapParams { a: 3.1, b: 0.9 }, start(), 1000, 100).unwrap();
        assert!(r.exponent_1 >= r.exponent_2);
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(lyapunov_spectrum(MapParams { a: 2.0, b: 2.0 }, start(), 500, 500).is_err());
    }
}
