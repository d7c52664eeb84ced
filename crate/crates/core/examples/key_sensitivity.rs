// Nudge each key component by a tiny amount and count the bytes that no
// longer decrypt.
//
// cargo run --release --example key_sensitivity

use chaotext::analysis::{printable_plaintext, sensitivity_probe, KeyComponent};
use chaotext::{encrypt, MapParams};

pub fn run_example() -> chaotext::Result<()> {
    let text = printable_plaintext(1000, 11);
    let key = encrypt(&text, MapParams::for_encryption(2.9, 1.7)?)?.key;
    for component in KeyComponent::ALL {
        for eps in [1e-13, 1e-15, 1e-16] {
            match sensitivity_probe(&text, &key, component, eps) {
                Ok(frac) => println!(
                    "{component:?} + {eps:e}: {:5.1}% of bytes wrong",
                    100.0 * frac
                ),
                // x0 and y0 must stay consistent with each other
                Err(e) => println!("{component:?} + {eps:e}: key rejected ({e})"),
            }
        }
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
