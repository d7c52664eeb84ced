//! Rank-permutation keystream and the XOR trapdoor.
//!
//! The x and y orbit sequences are each replaced by their descending-sort
//! ranks, giving two permutations `s_x` and `s_y` of `0..n`. The key array is
//! their composition `key[i] = s_y[s_x[i]]`, and each data byte is XORed with
//! the low eight bits of the matching key value.

use crate::error::{Error, Result};
use crate::map::{self, MapParams, MapState};

/// Rank arrays and the composed key for one keystream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankKeystream {
    pub s_x: Vec<usize>,
    pub s_y: Vec<usize>,
    pub key: Vec<usize>,
}

impl RankKeystream {
    /// Build the keystream of length `n` for `params` starting at `initial`.
    pub fn generate(params: MapParams, initial: MapState, n: usize) -> Result<Self> {
        let orbit = map::generate_sequence(params, initial, n, 0)?;
        let s_x = rank_descending(&orbit.xs)?;
        let s_y = rank_descending(&orbit.ys)?;
        let key = compose_key(&s_x, &s_y)?;
        Ok(Self { s_x, s_y, key })
    }

    pub fn len(&self) -> usize {
        self.key.len()
    }

    pub fn is_empty(&self) -> bool {
        self.key.is_empty()
    }
}

/// Everything needed to decrypt: the map coefficients and the starting point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyRecord {
    pub a: f64,
    pub b: f64,
    pub x0: f64,
    pub y0: f64,
}

impl KeyRecord {
    pub fn params(&self) -> MapParams {
        MapParams {
            a: self.a,
            b: self.b,
        }
    }

    pub fn initial_state(&self) -> MapState {
        MapState {
            x: self.x0,
            y: self.y0,
        }
    }

    /// Checks the coefficient ranges, `x0 ∈ (0, 1]` and `y0 = 1 − x0`.
    ///
    /// The last relation is accepted when `|y0 − (1 − x0)|` is at most one
    /// ulp of 1.0, which admits the single-ulp perturbations used by the
    /// sensitivity probe.
    pub fn validate(&self) -> Result<()> {
        MapParams::new(self.a, self.b)?.check_encryption_range()?;
        if !self.x0.is_finite() || !(self.x0 > 0.0 && self.x0 <= 1.0) {
            return Err(Error::invalid(format!("x0={} outside (0, 1]", self.x0)));
        }
        if !self.y0.is_finite() || (self.y0 - (1.0 - self.x0)).abs() > f64::EPSILON {
            return Err(Error::invalid(format!(
                "y0={} is not 1 - x0 (x0={})",
                self.y0, self.x0
            )));
        }
        Ok(())
    }
}

/// Position of every element in the descending sort of `values`.
///
/// Equal values keep their original relative order, so the earlier element
/// gets the smaller rank.
pub fn rank_descending(values: &[f64]) -> Result<Vec<usize>> {
    if values.is_empty() {
        return Err(Error::invalid("cannot rank an empty sequence"));
    }
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::invalid(format!("non-finite value at index {i}")));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    // stable sort; finite values always compare
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
    let mut ranks = vec![0; values.len()];
    for (rank, &idx) in order.iter().enumerate() {
        ranks[idx] = rank;
    }
    Ok(ranks)
}

fn check_permutation(name: &str, p: &[usize]) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for (i, &v) in p.iter().enumerate() {
        if v >= p.len() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::invalid(format!(
                "{name} is not a permutation (value {v} at index {i})"
            )));
        }
    }
    Ok(())
}

/// `key[i] = s_y[s_x[i]]`.
pub fn compose_key(s_x: &[usize], s_y: &[usize]) -> Result<Vec<usize>> {
    if s_x.len() != s_y.len() {
        return Err(Error::invalid(format!(
            "rank arrays differ in length ({} vs {})",
            s_x.len(),
            s_y.len()
        )));
    }
    check_permutation("s_x", s_x)?;
    check_permutation("s_y", s_y)?;
    Ok(s_x.iter().map(|&i| s_y[i]).collect())
}

/// XOR every byte with the low eight bits of its key value.
pub fn xor_apply(data: &[u8], key: &[usize]) -> Result<Vec<u8>> {
    if data.len() != key.len() {
        return Err(Error::invalid(format!(
            "data length {} does not match key length {}",
            data.len(),
            key.len()
        )));
    }
    Ok(data
        .iter()
        .zip(key)
        .map(|(&d, &k)| d ^ (k & 0xff) as u8)
        .collect())
}

/// Ciphertext together with the key record needed to reverse it.
#[derive(Debug, Clone, PartialEq)]
pub struct Encrypted {
    pub ciphertext: Vec<u8>,
    pub key: KeyRecord,
}

/// Encrypt `plaintext` under `params`, starting from the plaintext-derived state.
pub fn encrypt(plaintext: &[u8], params: MapParams) -> Result<Encrypted> {
    let initial = map::derive_initial_state(plaintext)?;
    let params = MapParams::new(params.a, params.b)?;
    params.check_encryption_range()?;
    let stream = RankKeystream::generate(params, initial, plaintext.len())?;
    let ciphertext = xor_apply(plaintext, &stream.key)?;
    Ok(Encrypted {
        ciphertext,
        key: KeyRecord {
            a: params.a,
            b: params.b,
            x0: initial.x,
            y0: initial.y,
        },
    })
}

pub fn decrypt(ciphertext: &[u8], key: &KeyRecord) -> Result<Vec<u8>> {
    if ciphertext.is_empty() {
        return Err(Error::invalid("ciphertext is empty"));
    }
    key.validate()?;
    let stream = RankKeystream::generate(key.params(), key.initial_state(), ciphertext.len())?;
    xor_apply(ciphertext, &stream.key)
}
