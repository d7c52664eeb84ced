// Generations to termination and best fitness for plaintexts of increasing
// length, population 20.
//
// cargo run --release --example length_table

use chaotext::analysis::length_experiment;
use chaotext::GaConfig;

pub fn run_example() -> chaotext::Result<()> {
    let lengths = [10, 50, 100, 300, 700, 1000];
    let config = GaConfig {
        max_generations: 100,
        ..GaConfig::with_seed(7)
    };
    let exp = length_experiment(&lengths, &config, 2)?;
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "length", "mean gens", "max fitness", "mean fitness"
    );
    for s in &exp.summary {
        println!(
            "{:>6} {:>12.1} {:>12.4} {:>12.4}",
            s.length, s.mean_generations, s.max_fitness, s.mean_fitness
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
