use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ga::{self, GaConfig, Termination};
use crate::map::MapParams;

use super::cell_centers;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandscapeRow {
    pub a: f64,
    pub b: f64,
    pub fitness: f64,
}

/// Fitness on a `grid_a × grid_b` lattice of cell centers, `a`-major order.
///
/// Cell centers keep every grid point strictly inside the open key ranges.
pub fn fitness_landscape(
    plaintext: &[u8],
    a_range: (f64, f64),
    b_range: (f64, f64),
    grid_a: usize,
    grid_b: usize,
) -> Result<Vec<LandscapeRow>> {
    if grid_a == 0 || grid_b == 0 {
        return Err(Error::invalid("landscape grid must be at least 1×1"));
    }
    if !(a_range.0 < a_range.1 && b_range.0 < b_range.1) {
        return Err(Error::invalid("landscape ranges must be non-empty"));
    }
    let points: Vec<(f64, f64)> = cell_centers(a_range.0, a_range.1, grid_a)
        .flat_map(|a| cell_centers(b_range.0, b_range.1, grid_b).map(move |b| (a, b)))
        .collect();
    points
        .into_par_iter()
        .map(|(a, b)| {
            let fitness = ga::evaluate(plaintext, MapParams::new(a, b)?)?;
            Ok(LandscapeRow { a, b, fitness })
        })
        .collect()
}

/// Seed derivation (SplitMix64 finalizer) for per-trial streams.
fn derive_seed(base: u64, trial: usize, length_index: usize, stream: u64) -> u64 {
    let mut z = base
        ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (length_index as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)
        ^ stream.wrapping_mul(0x8CB9_2BA7_2F3D_8DD7);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform random printable ASCII (bytes 32..=126).
pub fn printable_plaintext(len: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rng.gen_range(32u8..=126)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LengthRun {
    pub length: usize,
    pub trial: usize,
    pub seed: u64,
    pub generations: usize,
    pub max_fitness: f64,
    pub terminated_by: Termination,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LengthSummary {
    pub length: usize,
    pub trials: usize,
    pub max_generations: usize,
    pub mean_generations: f64,
    pub max_fitness: f64,
    pub mean_fitness: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LengthExperiment {
    pub runs: Vec<LengthRun>,
    pub summary: Vec<LengthSummary>,
}

/// Evolve a key for random printable plaintexts of each length.
///
/// Trial `t` of length index `i` draws its plaintext and its optimizer seed
/// from streams derived from `config.rng_seed`, so the whole table is
/// reproducible from one seed.
pub fn length_experiment(
    lengths: &[usize],
    config: &GaConfig,
    trials: usize,
) -> Result<LengthExperiment> {
    if trials == 0 {
        return Err(Error::invalid("at least one trial is required"));
    }
    if lengths.contains(&0) {
        return Err(Error::invalid("plaintext lengths must be at least 1"));
    }
    config.validate()?;

    let mut runs = Vec::with_capacity(lengths.len() * trials);
    for trial in 0..trials {
        for (i, &length) in lengths.iter().enumerate() {
            let text = printable_plaintext(length, derive_seed(config.rng_seed, trial, i, 0));
            let seed = derive_seed(config.rng_seed, trial, i, 1);
            let report = ga::evolve(
                &text,
                &GaConfig {
                    rng_seed: seed,
                    ..config.clone()
                },
            )?;
            runs.push(LengthRun {
                length,
                trial,
                seed,
                generations: report.generations_run,
                max_fitness: report.best_fitness(),
                terminated_by: report.terminated_by,
            });
        }
    }

    let summary = lengths
        .iter()
        .map(|&length| {
            let mine: Vec<&LengthRun> = runs.iter().filter(|r| r.length == length).collect();
            let n = mine.len() as f64;
            LengthSummary {
                length,
                trials: mine.len(),
                max_generations: mine.iter().map(|r| r.generations).max().unwrap_or(0),
                mean_generations: mine.iter().map(|r| r.generations as f64).sum::<f64>() / n,
                max_fitness: mine
                    .iter()
                    .map(|r| r.max_fitness)
                    .fold(f64::NEG_INFINITY, f64::max),
                mean_fitness: mine.iter().map(|r| r.max_fitness).sum::<f64>() / n,
            }
        })
        .collect();
    Ok(LengthExperiment { runs, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn landscape_shape_and_range() {
        let rows = fitness_landscape(b"some text", (1.0, 4.0), (0.1, 4.0), 2, 2).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!((rows[0].a, rows[0].b), (1.75, 1.075));
        assert_eq!((rows[1].a, rows[1].b), (1.75, 3.025));
        assert!(rows.iter().all(|r| (0.0..=100.0).contains(&r.fitness)));
        assert!(fitness_landscape(b"x", (1.0, 4.0), (0.1, 4.0), 0, 2).is_err());
    }

    #[test]
    fn printable_bytes() {
        let t = printable_plaintext(5000, 3);
        assert!(t.iter().all(|b| (32..=126).contains(b)));
        assert_eq!(t, printable_plaintext(5000, 3));
    }

    #[test]
    fn single_byte_lengths() {
        let cfg = GaConfig {
            max_generations: 3,
            ..GaConfig::with_seed(2)
        };
        let exp = length_experiment(&[1], &cfg, 2).unwrap();
        assert_eq!(exp.runs.len(), 2);
        for r in &exp.runs {
            assert!(r.max_fitness == 0.0 || r.max_fitness == 100.0);
        }
        assert_eq!(exp.summary.len(), 1);
        assert_eq!(exp.summary[0].trials, 2);
    }

    #[test]
    fn rejects_zero_length() {
        assert!(length_experiment(&[0], &GaConfig::default(), 1).is_err());
        assert!(length_experiment(&[3], &GaConfig::default(), 0).is_err());
    }
}
