//! The hybrid circle/Hénon map.
//!
//! One step of the map reads the current point `(x, y)` and produces
//!
//! ```text
//! x' = (x + b + a·sin(2π·y)) mod 1
//! y' = 1 − a·x² + y
//! ```
//!
//! Both coordinates are computed from the input point (simultaneous update).
//! `x` is reduced with a floor-style modulus so it always lands in `[0, 1)`;
//! `y` is left unbounded.
//!
//! Orbits are reproducible bit for bit only when `+`, `−`, `×`, `floor` and
//! `sin` round identically, so the expression order below is part of the
//! contract: `((x + b) + a·s)` for the x-update, `(1 − (a·x)·x) + y` for the
//! y-update, and `s = sin(TAU · y)` with `TAU` the binary64 value of 2π.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Open interval of `a` accepted for key generation and encryption.
pub const A_RANGE: (f64, f64) = (1.0, 4.0);
/// Open interval of `b` accepted for key generation and encryption.
pub const B_RANGE: (f64, f64) = (0.1, 4.0);

/// The secret coefficients of the map.
///
/// Any finite pair is a valid map parameterization (the analysis routines
/// sweep outside the key ranges); [`MapParams::for_encryption`] additionally
/// enforces `a ∈ (1, 4)` and `b ∈ (0.1, 4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapParams {
    pub a: f64,
    pub b: f64,
}

impl MapParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::invalid(format!(
                "map parameters must be finite (a={a}, b={b})"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn for_encryption(a: f64, b: f64) -> Result<Self> {
        let params = Self::new(a, b)?;
        params.check_encryption_range()?;
        Ok(params)
    }

    pub fn check_encryption_range(&self) -> Result<()> {
        if !in_open(self.a, A_RANGE) {
            return Err(Error::invalid(format!(
                "a={} outside ({}, {})",
                self.a, A_RANGE.0, A_RANGE.1
            )));
        }
        if !in_open(self.b, B_RANGE) {
            return Err(Error::invalid(format!(
                "b={} outside ({}, {})",
                self.b, B_RANGE.0, B_RANGE.1
            )));
        }
        Ok(())
    }
}

pub(crate) fn in_open(v: f64, (lo, hi): (f64, f64)) -> bool {
    v > lo && v < hi
}

/// One point of an orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapState {
    pub x: f64,
    pub y: f64,
}

impl MapState {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::invalid(format!(
                "state must be finite (x={x}, y={y})"
            )));
        }
        Ok(Self { x, y })
    }
}

/// Starting point derived from the plaintext bytes.
///
/// `x0` is the mean byte value divided by the byte sum, `y0 = 1 − x0`. The
/// ratio collapses to `1/n`, so only the plaintext length matters.
pub fn derive_initial_state(plaintext: &[u8]) -> Result<MapState> {
    if plaintext.is_empty() {
        return Err(Error::invalid("plaintext is empty"));
    }
    let sum: u64 = plaintext.iter().map(|&b| u64::from(b)).sum();
    if sum == 0 {
        return Err(Error::invalid("plaintext byte sum is zero"));
    }
    let sum = sum as f64;
    let mean = sum / plaintext.len() as f64;
    let x0 = mean / sum;
    Ok(MapState { x: x0, y: 1.0 - x0 })
}

/// Floor-style `v mod 1`, always in `[0, 1)`.
#[inline]
pub fn mod1(v: f64) -> f64 {
    let r = v - v.floor();
    // a tiny negative v rounds up to exactly 1.0
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

#[inline]
pub(crate) fn step_unchecked(params: MapParams, state: MapState) -> MapState {
    let MapParams { a, b } = params;
    let MapState { x, y } = state;
    let s = (TAU * y).sin();
    MapState {
        x: mod1(x + b + a * s),
        y: 1.0 - a * x * x + y,
    }
}

/// Advance the orbit by one step.
pub fn step(params: MapParams, state: MapState) -> Result<MapState> {
    MapParams::new(params.a, params.b)?;
    MapState::new(state.x, state.y)?;
    Ok(step_unchecked(params, state))
}

/// An orbit split into its x and y coordinate sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

/// Iterate `transient` discarded steps, then collect `n` points.
///
/// The first collected point is the state *after* the first counted step, so
/// the initial state itself never appears in the output.
pub fn generate_sequence(
    params: MapParams,
    initial: MapState,
    n: usize,
    transient: usize,
) -> Result<Orbit> {
    if n == 0 {
        return Err(Error::invalid("sequence length must be at least 1"));
    }
    MapParams::new(params.a, params.b)?;
    let mut state = MapState::new(initial.x, initial.y)?;
    for _ in 0..transient {
        state = step_unchecked(params, state);
    }
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for _ in 0..n {
        state = step_unchecked(params, state);
        xs.push(state.x);
        ys.push(state.y);
    }
    Ok(Orbit { xs, ys })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64) -> MapParams {
        MapParams::new(a, b).unwrap()
    }

    #[test]
    fn initial_state_uniform_bytes() {
        let s = derive_initial_state(b"AAAA").unwrap();
        assert_eq!(s.x, 0.25);
        assert_eq!(s.y, 0.75);
    }

    #[test]
    fn initial_state_two_bytes() {
        let s = derive_initial_state(b"AB").unwrap();
        assert_eq!(s.x, 0.5);
        assert_eq!(s.y, 0.5);
    }

    #[test]
    fn initial_state_is_reciprocal_length() {
        let text: Vec<u8> = (0..1000).map(|i| (i % 95 + 32) as u8).collect();
        let s = derive_initial_state(&text).unwrap();
        assert!((s.x - 0.001).abs() <= f64::EPSILON * 0.001);
        assert!((s.y - 0.999).abs() <= f64::EPSILON);
    }

    #[test]
    fn initial_state_rejects_empty_and_zero() {
        assert!(matches!(
            derive_initial_state(b""),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            derive_initial_state(&[0, 0, 0]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn step_reference_point() {
        let s = step(p(2.0, 1.0), MapState { x: 0.25, y: 0.75 }).unwrap();
        assert!((s.x - 0.25).abs() < 1e-12);
        assert!((s.y - 1.625).abs() < 1e-12);
    }

    #[test]
    fn step_from_origin() {
        for a in [0.0, 1.3, 3.9] {
            let s = step(p(a, 0.5), MapState { x: 0.0, y: 0.0 }).unwrap();
            assert_eq!(s.x, 0.5);
            assert_eq!(s.y, 1.0);
        }
    }

    #[test]
    fn step_rejects_non_finite() {
        let bad = MapParams {
            a: f64::NAN,
            b: 1.0,
        };
        assert!(step(bad, MapState { x: 0.1, y: 0.1 }).is_err());
        let bad_state = MapState {
            x: 0.1,
            y: f64::INFINITY,
        };
        assert!(step(p(2.0, 1.0), bad_state).is_err());
    }

    #[test]
    fn mod1_negative_and_edge() {
        assert_eq!(mod1(-0.25), 0.75);
        assert_eq!(mod1(2.5), 0.5);
        assert_eq!(mod1(-1e-18), 0.0);
        assert_eq!(mod1(-3.0), 0.0);
    }

    #[test]
    fn sequence_first_values() {
        let o = generate_sequence(p(2.0, 1.0), MapState { x: 0.25, y: 0.75 }, 3, 0).unwrap();
        assert_eq!(o.xs.len(), 3);
        assert!((o.xs[0] - 0.25).abs() < 1e-12);
        assert!((o.ys[0] - 1.625).abs() < 1e-12);
    }

    #[test]
    fn transient_is_prefix_discard() {
        let init = MapState { x: 0.1, y: 0.1 };
        let long = generate_sequence(p(3.1, 0.7), init, 7, 0).unwrap();
        let short = generate_sequence(p(3.1, 0.7), init, 5, 2).unwrap();
        assert_eq!(short.xs, long.xs[2..]);
        assert_eq!(short.ys, long.ys[2..]);
    }

    #[test]
    fn sequence_rejects_zero_length() {
        assert!(generate_sequence(p(2.0, 1.0), MapState { x: 0.1, y: 0.1 }, 0, 0).is_err());
    }

    #[test]
    fn encryption_range() {
        assert!(MapParams::for_encryption(2.0, 2.0).is_ok());
        assert!(MapParams::for_encryption(1.0, 2.0).is_err());
        assert!(MapParams::for_encryption(2.0, 0.1).is_err());
        assert!(MapParams::for_encryption(2.0, 4.0).is_err());
    }
}
