//! Genetic-algorithm search for the `(a, b)` pair that makes the ciphertext
//! byte alphabet as different as possible from the plaintext's.
//!
//! Each generation is evaluated, truncated to its fittest fraction, refilled
//! with single-point crossover offspring of randomly paired survivors, and
//! mutated as a whole. All random draws come from one ChaCha stream in a fixed
//! order, so a seed pins the entire run no matter how many threads score the
//! population.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cipher;
use crate::error::{Error, Result};
use crate::map::{MapParams, A_RANGE, B_RANGE};

/// Set of distinct byte values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ByteSet([u64; 4]);

impl ByteSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, byte: u8) {
        self.0[usize::from(byte >> 6)] |= 1 << (byte & 63);
    }

    pub fn contains(&self, byte: u8) -> bool {
        self.0[usize::from(byte >> 6)] & (1 << (byte & 63)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_len(&self, other: &Self) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }
}

impl FromIterator<u8> for ByteSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut set = ByteSet::new();
        for b in iter {
            set.insert(b);
        }
        set
    }
}

impl<'a> FromIterator<&'a u8> for ByteSet {
    fn from_iter<I: IntoIterator<Item = &'a u8>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// Jaccard index scaled to `[0, 100]`.
pub fn jaccard_index(a: &ByteSet, b: &ByteSet) -> Result<f64> {
    let union = a.union_len(b);
    if union == 0 {
        return Err(Error::invalid("jaccard index of two empty sets"));
    }
    Ok(100.0 * a.intersection_len(b) as f64 / union as f64)
}

/// `100 − J(plaintext alphabet, ciphertext alphabet)`.
pub fn fitness(plaintext: &[u8], ciphertext: &[u8]) -> Result<f64> {
    if plaintext.len() != ciphertext.len() {
        return Err(Error::invalid(format!(
            "plaintext length {} does not match ciphertext length {}",
            plaintext.len(),
            ciphertext.len()
        )));
    }
    if plaintext.is_empty() {
        return Err(Error::invalid("fitness of empty texts"));
    }
    let p: ByteSet = plaintext.iter().collect();
    let c: ByteSet = ciphertext.iter().collect();
    Ok(100.0 - jaccard_index(&p, &c)?)
}

/// Encrypt `plaintext` under `params` and score the result.
pub fn evaluate(plaintext: &[u8], params: MapParams) -> Result<f64> {
    let enc = cipher::encrypt(plaintext, params)?;
    fitness(plaintext, &enc.ciphertext)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Genome {
    pub params: MapParams,
    /// `None` until scored.
    pub fitness: Option<f64>,
}

impl Genome {
    pub fn new(a: f64, b: f64) -> Self {
        Self {
            params: MapParams { a, b },
            fitness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    pub population_size: usize,
    pub elite_fraction: f64,
    pub mutation_probability: f64,
    /// Half-width of the uniform mutation step.
    pub mutation_step: f64,
    pub fitness_threshold: f64,
    /// Strictly more than this fraction must reach the threshold to stop.
    pub quorum_fraction: f64,
    pub max_generations: usize,
    pub rng_seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            population_size: 20,
            elite_fraction: 0.2,
            mutation_probability: 0.1,
            mutation_step: 0.05,
            fitness_threshold: 95.0,
            quorum_fraction: 0.5,
            max_generations: 500,
            rng_seed: 0,
        }
    }
}

impl GaConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            rng_seed: seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        if self.population_size < 2 {
            return Err(Error::invalid("population_size must be at least 2"));
        }
        if !(self.elite_fraction > 0.0 && self.elite_fraction <= 1.0) {
            return Err(Error::invalid("elite_fraction must lie in (0, 1]"));
        }
        if !unit(self.mutation_probability) || !unit(self.quorum_fraction) {
            return Err(Error::invalid(
                "mutation_probability and quorum_fraction must lie in [0, 1]",
            ));
        }
        if !(self.mutation_step.is_finite() && self.mutation_step >= 0.0) {
            return Err(Error::invalid(
                "mutation_step must be finite and non-negative",
            ));
        }
        if !self.fitness_threshold.is_finite() {
            return Err(Error::invalid("fitness_threshold must be finite"));
        }
        if self.max_generations == 0 {
            return Err(Error::invalid("max_generations must be at least 1"));
        }
        Ok(())
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.rng_seed)
    }
}

/// Uniform draw from the open interval `(lo, hi)`.
fn sample_open<R: Rng + ?Sized>(rng: &mut R, (lo, hi): (f64, f64)) -> f64 {
    loop {
        let v = rng.gen_range(lo..hi);
        if v > lo {
            return v;
        }
    }
}

fn clamp_open(v: f64, (lo, hi): (f64, f64)) -> f64 {
    v.clamp(lo.next_up(), hi.next_down())
}

pub fn spawn_population<R: Rng + ?Sized>(config: &GaConfig, rng: &mut R) -> Vec<Genome> {
    (0..config.population_size)
        .map(|_| {
            let a = sample_open(rng, A_RANGE);
            let b = sample_open(rng, B_RANGE);
            Genome::new(a, b)
        })
        .collect()
}

/// Number of survivors kept from a population of `n`.
pub fn elite_count(n: usize, elite_fraction: f64) -> usize {
    // the small slack keeps products like 0.2 * 20 from rounding up to 5
    let k = (elite_fraction * n as f64 - 1e-9).ceil() as usize;
    k.clamp(1, n)
}

/// Truncation selection: the fittest `ceil(fraction · N)` genomes, best first.
pub fn select_top(population: &[Genome], elite_fraction: f64) -> Result<Vec<Genome>> {
    let mut scored = Vec::with_capacity(population.len());
    for (i, g) in population.iter().enumerate() {
        match g.fitness {
            Some(f) => scored.push((i, f)),
            None => {
                return Err(Error::InvalidState(format!(
                    "genome {i} has not been evaluated"
                )))
            }
        }
    }
    scored.sort_by(|x, y| y.1.total_cmp(&x.1).then(x.0.cmp(&y.0)));
    let k = elite_count(population.len(), elite_fraction);
    Ok(scored[..k].iter().map(|&(i, _)| population[i]).collect())
}

/// Single-point crossover of the two-gene chromosome `(a, b)`.
pub fn crossover(p1: &Genome, p2: &Genome) -> (Genome, Genome) {
    (
        Genome::new(p1.params.a, p2.params.b),
        Genome::new(p2.params.a, p1.params.b),
    )
}

pub fn mutate<R: Rng + ?Sized>(genome: &Genome, config: &GaConfig, rng: &mut R) -> Genome {
    let mut out = *genome;
    let step = config.mutation_step;
    let nudge = |v: f64, range: (f64, f64), rng: &mut R| {
        if rng.gen_bool(config.mutation_probability) {
            let delta = if step > 0.0 {
                rng.gen_range(-step..=step)
            } else {
                0.0
            };
            clamp_open(v + delta, range)
        } else {
            v
        }
    };
    out.params.a = nudge(genome.params.a, A_RANGE, rng);
    out.params.b = nudge(genome.params.b, B_RANGE, rng);
    if out.params != genome.params {
        out.fitness = None;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Quorum,
    GenerationCap,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::Quorum => "quorum",
            Termination::GenerationCap => "generation-cap",
        }
    }
}

/// One evaluated generation.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationRecord {
    pub index: usize,
    pub max_fitness: f64,
    pub mean_fitness: f64,
    pub best_so_far: f64,
    /// `(a, b, fitness)` for each member, in population order.
    pub population: Vec<(f64, f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionReport {
    pub best: Genome,
    pub generations_run: usize,
    pub generations: Vec<GenerationRecord>,
    pub terminated_by: Termination,
}

impl EvolutionReport {
    pub fn best_fitness(&self) -> f64 {
        self.best.fitness.unwrap_or(0.0)
    }
}

fn evaluate_population(plaintext: &[u8], population: &mut [Genome]) -> Result<()> {
    let scores: Vec<Result<Option<f64>>> = population
        .par_iter()
        .map(|g| match g.fitness {
            Some(_) => Ok(None),
            None => evaluate(plaintext, g.params).map(Some),
        })
        .collect();
    for (g, s) in population.iter_mut().zip(scores) {
        if let Some(f) = s? {
            g.fitness = Some(f);
        }
    }
    Ok(())
}

/// Run the optimizer on `plaintext` until a quorum of the population reaches
/// the fitness threshold or the generation cap is hit.
pub fn evolve(plaintext: &[u8], config: &GaConfig) -> Result<EvolutionReport> {
    config.validate()?;
    crate::map::derive_initial_state(plaintext)?;

    let n = config.population_size;
    let mut rng = config.rng();
    let mut population = spawn_population(config, &mut rng);
    let mut best: Option<Genome> = None;
    let mut generations = Vec::new();

    loop {
        evaluate_population(plaintext, &mut population)?;

        let scores: Vec<f64> = population.iter().map(|g| g.fitness.unwrap()).collect();
        for g in &population {
            if best.is_none_or(|b| g.fitness > b.fitness) {
                best = Some(*g);
            }
        }
        let best_so_far = best.and_then(|b| b.fitness).unwrap();
        generations.push(GenerationRecord {
            index: generations.len(),
            max_fitness: scores.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            mean_fitness: scores.iter().sum::<f64>() / n as f64,
            best_so_far,
            population: population
                .iter()
                .map(|g| (g.params.a, g.params.b, g.fitness.unwrap()))
                .collect(),
        });

        let passing = scores
            .iter()
            .filter(|&&f| f >= config.fitness_threshold)
            .count();
        let terminated_by = if passing as f64 > config.quorum_fraction * n as f64 {
            Some(Termination::Quorum)
        } else if generations.len() >= config.max_generations {
            Some(Termination::GenerationCap)
        } else {
            None
        };
        if let Some(terminated_by) = terminated_by {
            return Ok(EvolutionReport {
                best: best.unwrap(),
                generations_run: generations.len(),
                generations,
                terminated_by,
            });
        }

        let survivors = select_top(&population, config.elite_fraction)?;
        let mut next = survivors.clone();
        while next.len() < n {
            let p1 = &survivors[rng.gen_range(0..survivors.len())];
            let p2 = &survivors[rng.gen_range(0..survivors.len())];
            let (c1, c2) = crossover(p1, p2);
            next.push(c1);
            if next.len() < n {
                next.push(c2);
            }
        }
        population = next.iter().map(|g| mutate(g, config, &mut rng)).collect();
    }
}
