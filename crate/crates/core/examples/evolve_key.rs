// Let the genetic algorithm choose (a, b) for a plaintext, then encrypt.
//
// cargo run --release --example evolve_key

use chaotext::{cipher, ga, GaConfig};

pub fn run_example() -> chaotext::Result<()> {
    let plaintext = b"the quick brown fox jumps over the lazy dog; \
                      pack my box with five dozen liquor jugs."
        .to_vec();
    let config = GaConfig {
        max_generations: 200,
        ..GaConfig::with_seed(2024)
    };
    let report = ga::evolve(&plaintext, &config)?;

    for g in report.generations.iter().step_by(20) {
        println!(
            "gen {:>3}: max {:7.3} mean {:7.3} best so far {:7.3}",
            g.index, g.max_fitness, g.mean_fitness, g.best_so_far
        );
    }
    println!(
        "{} generations, stopped by {}, best fitness {:.4} at a={:.6} b={:.6}",
        report.generations_run,
        report.terminated_by.as_str(),
        report.best_fitness(),
        report.best.params.a,
        report.best.params.b
    );

    let enc = cipher::encrypt(&plaintext, report.best.params)?;
    assert_eq!(
        ga::fitness(&plaintext, &enc.ciphertext)?,
        report.best_fitness()
    );
    assert_eq!(cipher::decrypt(&enc.ciphertext, &enc.key)?, plaintext);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
