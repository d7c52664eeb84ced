// Bifurcation data for x against a (b = 2) and against b (a = 2), written as
// CSV for an external plotter, with a bin-coverage density summary.
//
// cargo run --release --example bifurcation_diagram

use std::fs::File;
use std::io::BufWriter;

use chaotext::analysis::{bifurcation_sweep, bin_coverage, SweepSpec, SweptParameter};
use chaotext::report;

pub fn run_example() -> chaotext::Result<()> {
    let dir = std::env::temp_dir();
    for (swept, range, name) in [
        (SweptParameter::A, (1.0, 4.0), "bifurcation_a.csv"),
        (SweptParameter::B, (0.0, 4.0), "bifurcation_b.csv"),
    ] {
        let spec = SweepSpec::new(swept, 2.0, range);
        let rows = bifurcation_sweep(&spec)?;
        let path = dir.join(name);
        let file = File::create(&path).map_err(|e| chaotext::Error::Io {
            path: path.clone(),
            source: e,
        })?;
        report::write_bifurcation(
            BufWriter::new(file),
            &rows,
            spec.initial_state.x,
            spec.initial_state.y,
        )?;

        let per = spec.iterations - spec.transient;
        let coverage: Vec<usize> = rows
            .chunks(per)
            .map(|c| bin_coverage(c.iter().map(|r| r.x), 100))
            .collect();
        println!(
            "{swept:?} over {range:?}: {} rows -> {}, bins filled min {} / 100",
            rows.len(),
            path.display(),
            coverage.iter().min().unwrap()
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
