// Fitness of every (a, b) on a grid for one plaintext, and how many grid
// cells share the top score.
//
// cargo run --release --example fitness_landscape

use std::fs::File;
use std::io::BufWriter;

use chaotext::analysis::{fitness_landscape, printable_plaintext};
use chaotext::map::{A_RANGE, B_RANGE};
use chaotext::report;

pub fn run_example() -> chaotext::Result<()> {
    let text = printable_plaintext(1000, 1);
    let rows = fitness_landscape(&text, A_RANGE, B_RANGE, 50, 50)?;

    let path = std::env::temp_dir().join("landscape.csv");
    let file = File::create(&path).map_err(|e| chaotext::Error::Io {
        path: path.clone(),
        source: e,
    })?;
    report::write_landscape(BufWriter::new(file), &rows)?;

    let max = rows
        .iter()
        .map(|r| r.fitness)
        .fold(f64::NEG_INFINITY, f64::max);
    let mean = rows.iter().map(|r| r.fitness).sum::<f64>() / rows.len() as f64;
    let top: Vec<_> = rows.iter().filter(|r| r.fitness >= max - 0.5).collect();
    println!("{} cells -> {}", rows.len(), path.display());
    println!(
        "mean fitness {mean:.3}, max {max:.3}, {} cells within 0.5 of max",
        top.len()
    );
    for r in top.iter().take(5) {
        println!("  a={:.4} b={:.4} fitness={:.4}", r.a, r.b, r.fitness);
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
