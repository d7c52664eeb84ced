// Size of the key space from each component's range and resolution.
//
// cargo run --example key_space

use chaotext::analysis::{keyspace_size, KeyRange, PUBLISHED_KEY_RANGES};

pub fn run_example() -> chaotext::Result<()> {
    let size = keyspace_size(&PUBLISHED_KEY_RANGES)?;
    println!("a, b at 1e-15 and x0, y0 at 1e-16: {size:.3e} keys");
    println!("that is {:.3e} times 2^128", size / 2f64.powi(128));

    // only a and b are secret if x0, y0 are recovered from the message length
    let coeffs_only = keyspace_size(&PUBLISHED_KEY_RANGES[..2])?;
    println!(
        "a and b alone: {coeffs_only:.3e} (~2^{:.1})",
        coeffs_only.log2()
    );

    let coarse = KeyRange {
        low: 1.0,
        high: 4.0,
        precision: 1e-6,
    };
    println!("a at 1e-6 resolution: {:.3e}", keyspace_size(&[coarse])?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
