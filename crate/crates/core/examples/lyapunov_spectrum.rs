// Both Lyapunov exponents at a few coefficient pairs, then a coarse map of
// the largest exponent over the key ranges.
//
// cargo run --release --example lyapunov_spectrum

use chaotext::analysis::{lyapunov_spectrum, DEFAULT_ITERATIONS, DEFAULT_TRANSIENT};
use chaotext::{MapParams, MapState};

pub fn run_example() -> chaotext::Result<()> {
    let start = MapState::new(0.1, 0.1)?;
    for (a, b) in [(0.0, 0.3), (1.5, 0.5), (2.0, 2.0), (3.9, 3.9)] {
        let r = lyapunov_spectrum(
            MapParams::new(a, b)?,
            start,
            DEFAULT_ITERATIONS,
            DEFAULT_TRANSIENT,
        )?;
        println!(
            "a={a:<4} b={b:<4} -> {:+.4} {:+.4}",
            r.exponent_1, r.exponent_2
        );
    }

    println!("\nlargest exponent, a down / b across:");
    for i in 0..6 {
        let a = 1.25 + 0.5 * i as f64;
        let row: Vec<String> = (0..6)
            .map(|j| {
                let b = 0.4 + 0.65 * j as f64;
                lyapunov_spectrum(
                    MapParams { a, b },
                    start,
                    DEFAULT_ITERATIONS,
                    DEFAULT_TRANSIENT,
                )
                .map(|r| format!("{:6.3}", r.exponent_1))
                .unwrap_or_else(|_| "   n/a".into())
            })
            .collect();
        println!("a={a:.2} {}", row.join(" "));
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
