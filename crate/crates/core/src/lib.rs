//! Text encryption driven by a hybrid circle/Hénon chaotic map.
//!
//! * [`map`]: the two-dimensional map, its plaintext-derived starting point
//!   and orbit generation.
//! * [`cipher`]: rank-permutation keystream and XOR encryption/decryption.
//! * [`ga`]: genetic-algorithm search for the map coefficients `(a, b)`.
//! * [`analysis`]: bifurcation sweeps, Lyapunov spectra, fitness landscapes,
//!   the plaintext-length experiment, key sensitivity and key-space size.
//! * [`keyfile`] and [`report`]: on-disk key files and CSV tables.
//! * [`cli`]: the `chaotext` command.
//!
//! ```
//! use chaotext::{cipher, MapParams};
//!
//! let params = MapParams::for_encryption(2.5, 1.5).unwrap();
//! let enc = cipher::encrypt(b"attack at dawn", params).unwrap();
//! assert_eq!(cipher::decrypt(&enc.ciphertext, &enc.key).unwrap(), b"attack at dawn");
//! ```
//!
//! This is a research toy: nothing here is a vetted cryptographic primitive.

pub mod analysis;
pub mod cipher;
pub mod cli;
pub mod error;
pub mod ga;
pub mod keyfile;
pub mod map;
pub mod report;

pub use cipher::{decrypt, encrypt, Encrypted, KeyRecord, RankKeystream};
pub use error::{Error, Result};
pub use ga::{evolve, EvolutionReport, GaConfig, Genome};
pub use map::{MapParams, MapState};
