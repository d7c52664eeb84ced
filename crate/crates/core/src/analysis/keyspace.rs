use crate::cipher::{self, KeyRecord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyComponent {
    A,
    B,
    X0,
    Y0,
}

impl KeyComponent {
    pub const ALL: [KeyComponent; 4] = [Self::A, Self::B, Self::X0, Self::Y0];

    pub fn perturb(self, key: &KeyRecord, epsilon: f64) -> KeyRecord {
        let mut k = *key;
        match self {
            Self::A => k.a += epsilon,
            Self::B => k.b += epsilon,
            Self::X0 => k.x0 += epsilon,
            Self::Y0 => k.y0 += epsilon,
        }
        k
    }
}

/// Fraction of plaintext bytes that fail to decrypt when one key component
/// is shifted by `epsilon`.
pub fn sensitivity_probe(
    plaintext: &[u8],
    key: &KeyRecord,
    component: KeyComponent,
    epsilon: f64,
) -> Result<f64> {
    if !(epsilon.is_finite() && epsilon >= 0.0) {
        return Err(Error::invalid("epsilon must be finite and non-negative"));
    }
    if plaintext.is_empty() {
        return Err(Error::invalid("plaintext is empty"));
    }
    // XOR is an involution, so decrypting with the true key encrypts
    let ciphertext = cipher::decrypt(plaintext, key)?;
    let recovered = cipher::decrypt(&ciphertext, &component.perturb(key, epsilon))?;
    let differing = plaintext
        .iter()
        .zip(&recovered)
        .filter(|(p, r)| p != r)
        .count();
    Ok(differing as f64 / plaintext.len() as f64)
}

/// One key component's range and the smallest step that still matters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyRange {
    pub low: f64,
    pub high: f64,
    pub precision: f64,
}

/// `a ∈ (1,4)`, `b ∈ (0.1,4)` at 1e-15; `x0, y0 ∈ (0,1)` at 1e-16.
pub const PUBLISHED_KEY_RANGES: [KeyRange; 4] = [
    KeyRange {
        low: 1.0,
        high: 4.0,
        precision: 1e-15,
    },
    KeyRange {
        low: 0.1,
        high: 4.0,
        precision: 1e-15,
    },
    KeyRange {
        low: 0.0,
        high: 1.0,
        precision: 1e-16,
    },
    KeyRange {
        low: 0.0,
        high: 1.0,
        precision: 1e-16,
    },
];

/// Product of `(high − low) / precision` over all components.
pub fn keyspace_size(ranges: &[KeyRange]) -> Result<f64> {
    ranges.iter().try_fold(1.0, |acc, r| {
        let valid = r.high > r.low && r.precision > 0.0;
        if !valid {
            return Err(Error::invalid(format!(
                "bad key range ({}, {}) with precision {}",
                r.low, r.high, r.precision
            )));
        }
        Ok(acc * ((r.high - r.low) / r.precision))
    })
}
