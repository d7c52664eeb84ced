//! The `chaotext` command line.
//!
//! Exit codes: 0 on success, 2 for usage, input, format and I/O errors, 3 for
//! numerical failures.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    self, KeyComponent, KeyRange, SweepSpec, SweptParameter, PUBLISHED_KEY_RANGES,
};
use crate::cipher;
use crate::error::{Error, Result};
use crate::ga::{self, GaConfig};
use crate::keyfile;
use crate::map::{self, MapParams, MapState, A_RANGE, B_RANGE};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "chaotext",
    version,
    about = "Chaotic-map text encryption with GA-optimized keys"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimize a key for a plaintext file and encrypt it.
    Encrypt(EncryptArgs),
    /// Decrypt a ciphertext file with a key file.
    Decrypt(DecryptArgs),
    /// Run one of the chaos or optimizer diagnostics and write a CSV table.
    Analyze {
        #[command(subcommand)]
        analysis: Analysis,
    },
    /// Print the key-space size and its ratio to 2^128.
    Keyspace(KeyspaceArgs),
}

#[derive(Debug, Args, Clone)]
pub struct GaArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub population: usize,
    #[arg(long, default_value_t = 0.2)]
    pub elite_fraction: f64,
    #[arg(long, default_value_t = 0.1)]
    pub mutation_probability: f64,
    #[arg(long, default_value_t = 0.05)]
    pub mutation_step: f64,
    #[arg(long, default_value_t = 95.0)]
    pub threshold: f64,
    #[arg(long, default_value_t = 0.5)]
    pub quorum: f64,
    #[arg(long, default_value_t = 500)]
    pub max_generations: usize,
}

impl GaArgs {
    pub fn config(&self) -> GaConfig {
        GaConfig {
            population_size: self.population,
            elite_fraction: self.elite_fraction,
            mutation_probability: self.mutation_probability,
            mutation_step: self.mutation_step,
            fitness_threshold: self.threshold,
            quorum_fraction: self.quorum,
            max_generations: self.max_generations,
            rng_seed: self.seed,
        }
    }
}

#[derive(Debug, Args)]
pub struct EncryptArgs {
    /// Plaintext file.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Key file to write.
    #[arg(long, short)]
    pub key: PathBuf,
    /// Ciphertext file to write (raw bytes).
    #[arg(long, short)]
    pub output: PathBuf,
    #[command(flatten)]
    pub ga: GaArgs,
    /// Per-generation summary CSV.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Every evaluated (a, b, fitness) triple as CSV.
    #[arg(long)]
    pub population_report: Option<PathBuf>,
    /// Encrypt with --a/--b directly instead of evolving a key.
    #[arg(long, requires_all = ["a", "b"])]
    pub skip_ga: bool,
    #[arg(long, requires = "skip_ga")]
    pub a: Option<f64>,
    #[arg(long, requires = "skip_ga")]
    pub b: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DecryptArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, short)]
    pub key: PathBuf,
    #[arg(long, short)]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ParamName {
    A,
    B,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ComponentName {
    A,
    B,
    X0,
    Y0,
}

impl From<ComponentName> for KeyComponent {
    fn from(c: ComponentName) -> Self {
        match c {
            ComponentName::A => KeyComponent::A,
            ComponentName::B => KeyComponent::B,
            ComponentName::X0 => KeyComponent::X0,
            ComponentName::Y0 => KeyComponent::Y0,
        }
    }
}

/// `low:high`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Span(pub f64, pub f64);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("expected low:high, got `{s}`"))?;
        let lo: f64 = lo.parse().map_err(|_| format!("bad number `{lo}`"))?;
        let hi: f64 = hi.parse().map_err(|_| format!("bad number `{hi}`"))?;
        Ok(Span(lo, hi))
    }
}

/// `low:high:precision`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeArg(pub KeyRange);

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected low:high:precision, got `{s}`"));
        }
        let num = |p: &str| p.parse::<f64>().map_err(|_| format!("bad number `{p}`"));
        let range = KeyRange {
            low: num(parts[0])?,
            high: num(parts[1])?,
            precision: num(parts[2])?,
        };
        if !(range.high > range.low && range.precision > 0.0) {
            return Err(format!("need high > low and precision > 0 in `{s}`"));
        }
        Ok(RangeArg(range))
    }
}

#[derive(Debug, Subcommand)]
pub enum Analysis {
    /// x-values versus one swept coefficient.
    Bifurcation {
        #[arg(long, value_enum)]
        param: ParamName,
        /// Value of the coefficient that is not swept.
        #[arg(long)]
        fixed: f64,
        #[arg(long)]
        range: Span,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 2500)]
        iters: usize,
        #[arg(long, default_value_t = 500)]
        transient: usize,
        #[arg(long, default_value_t = 0.1)]
        x0: f64,
        #[arg(long, default_value_t = 0.1)]
        y0: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Both tangent-space Lyapunov exponents for one parameter pair.
    Lyapunov {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long, default_value_t = analysis::DEFAULT_ITERATIONS)]
        iters: usize,
        #[arg(long, default_value_t = analysis::DEFAULT_TRANSIENT)]
        transient: usize,
        #[arg(long, default_value_t = 0.1)]
        x0: f64,
        #[arg(long, default_value_t = 0.1)]
        y0: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Fitness over an (a, b) grid for one plaintext.
    Landscape {
        /// Plaintext file; a random printable text of --length is used otherwise.
        #[arg(long, short, conflicts_with = "length")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        grid_a: usize,
        #[arg(long, default_value_t = 50)]
        grid_b: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Generations and best fitness versus plaintext length.
    Lengths {
        #[arg(long, value_delimiter = ',', default_value = "10,50,100,300,700,1000")]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[command(flatten)]
        ga: GaArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Fraction of bytes lost when one key component is nudged.
    Sensitivity {
        #[arg(long, default_value_t = 1000)]
        length: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Components to probe; all four by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        component: Vec<ComponentName>,
        /// Shift for a and b.
        #[arg(long, default_value_t = 1e-15)]
        epsilon_ab: f64,
        /// Shift for x0 and y0.
        #[arg(long, default_value_t = 1e-16)]
        epsilon_xy: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct KeyspaceArgs {
    /// `low:high:precision`, repeatable; defaults to the published key ranges.
    #[arg(long = "range")]
    pub ranges: Vec<RangeArg>,
}

/// Parse `args` (including the program name) and run, writing user-facing
/// text to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Numerical(_) | Error::InvalidState(_) => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    }
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::io(path, e))
}

fn write_output(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

/// Write a CSV either to `path` or, when absent, to `out`.
fn emit_csv(
    path: Option<&Path>,
    out: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match path {
        Some(p) => {
            let mut w = create(p)?;
            f(&mut w)?;
            w.flush().map_err(|e| Error::io(p, e))
        }
        None => f(out),
    }
}

fn say(out: &mut dyn Write, line: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| Error::io("<stdout>", e))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Encrypt(args) => cmd_encrypt(&args, out),
        Command::Decrypt(args) => cmd_decrypt(&args, out),
        Command::Analyze { analysis } => cmd_analyze(analysis, out),
        Command::Keyspace(args) => cmd_keyspace(&args, out),
    }
}

pub fn cmd_encrypt(args: &EncryptArgs, out: &mut dyn Write) -> Result<()> {
    let plaintext = read_input(&args.input)?;
    map::derive_initial_state(&plaintext)?;

    let params = if args.skip_ga {
        let (a, b) = (args.a.unwrap_or(f64::NAN), args.b.unwrap_or(f64::NAN));
        MapParams::for_encryption(a, b)?
    } else {
        let report = ga::evolve(&plaintext, &args.ga.config())?;
        if let Some(p) = &args.report {
            let mut w = create(p)?;
            report::write_generations(&mut w, &report)?;
            w.flush().map_err(|e| Error::io(p, e))?;
        }
        if let Some(p) = &args.population_report {
            let mut w = create(p)?;
            report::write_population(&mut w, &report)?;
            w.flush().map_err(|e| Error::io(p, e))?;
        }
        say(out, format!("generations: {}", report.generations_run))?;
        say(out, format!("best fitness: {}", report.best_fitness()))?;
        say(
            out,
            format!("terminated by: {}", report.terminated_by.as_str()),
        )?;
        report.best.params
    };

    let enc = cipher::encrypt(&plaintext, params)?;
    write_output(&args.output, &enc.ciphertext)?;
    keyfile::write_key_file(&enc.key, &args.key)?;
    say(out, format!("a: {}", keyfile::format_decimal(enc.key.a)))?;
    say(out, format!("b: {}", keyfile::format_decimal(enc.key.b)))?;
    say(
        out,
        format!("fitness: {}", ga::fitness(&plaintext, &enc.ciphertext)?),
    )
}

pub fn cmd_decrypt(args: &DecryptArgs, out: &mut dyn Write) -> Result<()> {
    let key = keyfile::read_key_file(&args.key)?;
    let ciphertext = read_input(&args.input)?;
    let plaintext = cipher::decrypt(&ciphertext, &key)?;
    write_output(&args.output, &plaintext)?;
    say(out, format!("decrypted {} bytes", plaintext.len()))
}

fn summary_sink<'a>(
    output: &Option<PathBuf>,
    out: &'a mut dyn Write,
    sink: &'a mut Vec<u8>,
) -> &'a mut dyn Write {
    // with the CSV on stdout the summary is held back
    if output.is_some() {
        out
    } else {
        sink
    }
}

pub fn cmd_analyze(analysis: Analysis, out: &mut dyn Write) -> Result<()> {
    let mut held = Vec::new();
    match analysis {
        Analysis::Bifurcation {
            param,
            fixed,
            range,
            steps,
            iters,
            transient,
            x0,
            y0,
            output,
        } => {
            let spec = SweepSpec {
                swept: match param {
                    ParamName::A => SweptParameter::A,
                    ParamName::B => SweptParameter::B,
                },
                fixed_value: fixed,
                range_low: range.0,
                range_high: range.1,
                steps,
                iterations: iters,
                transient,
                initial_state: MapState::new(x0, y0)?,
            };
            let rows = analysis::bifurcation_sweep(&spec)?;
            emit_csv(output.as_deref(), out, |w| {
                report::write_bifurcation(w, &rows, x0, y0)
            })?;
            let per = iters - transient;
            let coverage: Vec<usize> = rows
                .chunks(per)
                .map(|c| analysis::bin_coverage(c.iter().map(|r| r.x), 100))
                .collect();
            let min = coverage.iter().copied().min().unwrap_or(0);
            let mean = coverage.iter().sum::<usize>() as f64 / coverage.len() as f64;
            let s = summary_sink(&output, out, &mut held);
            say(s, format!("rows: {}", rows.len()))?;
            say(
                s,
                format!("bin coverage (of 100): min {min}, mean {mean:.2}"),
            )?;
        }
        Analysis::Lyapunov {
            a,
            b,
            iters,
            transient,
            x0,
            y0,
            output,
        } => {
            let params = MapParams::new(a, b)?;
            let r = analysis::lyapunov_spectrum(params, MapState::new(x0, y0)?, iters, transient)?;
            if let Some(p) = &output {
                emit_csv(Some(p), out, |w| report::write_lyapunov(w, &[(params, r)]))?;
            }
            say(out, format!("exponent_1: {}", r.exponent_1))?;
            say(out, format!("exponent_2: {}", r.exponent_2))?;
        }
        Analysis::Landscape {
            input,
            length,
            seed,
            grid_a,
            grid_b,
            output,
        } => {
            let text = match &input {
                Some(p) => read_input(p)?,
                None => analysis::printable_plaintext(length, seed),
            };
            let rows = analysis::fitness_landscape(&text, A_RANGE, B_RANGE, grid_a, grid_b)?;
            emit_csv(output.as_deref(), out, |w| {
                report::write_landscape(w, &rows)
            })?;
            let max = rows
                .iter()
                .map(|r| r.fitness)
                .fold(f64::NEG_INFINITY, f64::max);
            let near = rows.iter().filter(|r| r.fitness >= max - 0.5).count();
            let s = summary_sink(&output, out, &mut held);
            say(s, format!("max fitness: {max}"))?;
            say(s, format!("cells within 0.5 of max: {near}"))?;
        }
        Analysis::Lengths {
            lengths,
            trials,
            ga,
            output,
        } => {
            let exp = analysis::length_experiment(&lengths, &ga.config(), trials)?;
            emit_csv(output.as_deref(), out, |w| report::write_lengths(w, &exp))?;
            let s = summary_sink(&output, out, &mut held);
            for row in &exp.summary {
                say(
                    s,
                    format!(
                        "length {}: max fitness {:.4}, mean generations {:.1}",
                        row.length, row.max_fitness, row.mean_generations
                    ),
                )?;
            }
        }
        Analysis::Sensitivity {
            length,
            trials,
            seed,
            component,
            epsilon_ab,
            epsilon_xy,
            output,
        } => {
            let components: Vec<KeyComponent> = if component.is_empty() {
                KeyComponent::ALL.to_vec()
            } else {
                component.into_iter().map(Into::into).collect()
            };
            let rows = sensitivity_rows(length, trials, seed, &components, epsilon_ab, epsilon_xy)?;
            emit_csv(output.as_deref(), out, |w| {
                report::write_sensitivity(w, &rows)
            })?;
            let s = summary_sink(&output, out, &mut held);
            for c in &components {
                let name = component_name(*c);
                let fr: Vec<f64> = rows.iter().filter(|r| r.0 == name).map(|r| r.3).collect();
                let min = fr.iter().copied().fold(f64::INFINITY, f64::min);
                say(
                    s,
                    format!(
                        "{name}: min differing fraction {min:.4} over {} trials",
                        fr.len()
                    ),
                )?;
            }
        }
    }
    Ok(())
}

fn component_name(c: KeyComponent) -> String {
    match c {
        KeyComponent::A => "a",
        KeyComponent::B => "b",
        KeyComponent::X0 => "x0",
        KeyComponent::Y0 => "y0",
    }
    .to_string()
}

/// Random printable plaintexts encrypted under random in-range keys, each
/// probed once per component.
pub fn sensitivity_rows(
    length: usize,
    trials: usize,
    seed: u64,
    components: &[KeyComponent],
    epsilon_ab: f64,
    epsilon_xy: f64,
) -> Result<Vec<(String, f64, usize, f64)>> {
    use rand::Rng;
    let cfg = GaConfig::with_seed(seed);
    let mut rng = cfg.rng();
    let mut rows = Vec::new();
    for trial in 0..trials {
        let text = analysis::printable_plaintext(length, rng.gen());
        let genome = &ga::spawn_population(
            &GaConfig {
                population_size: 2,
                ..cfg.clone()
            },
            &mut rng,
        )[0];
        let key = cipher::encrypt(&text, genome.params)?.key;
        for &c in components {
            let eps = match c {
                KeyComponent::A | KeyComponent::B => epsilon_ab,
                KeyComponent::X0 | KeyComponent::Y0 => epsilon_xy,
            };
            let frac = analysis::sensitivity_probe(&text, &key, c, eps)?;
            rows.push((component_name(c), eps, trial, frac));
        }
    }
    Ok(rows)
}

pub fn cmd_keyspace(args: &KeyspaceArgs, out: &mut dyn Write) -> Result<()> {
    let ranges: Vec<KeyRange> = if args.ranges.is_empty() {
        PUBLISHED_KEY_RANGES.to_vec()
    } else {
        args.ranges.iter().map(|r| r.0).collect()
    };
    let size = analysis::keyspace_size(&ranges)?;
    say(out, format!("key space: {size:.2e} (exact {size:e})"))?;
    say(out, format!("ratio to 2^128: {:e}", size / 2f64.powi(128)))
}
