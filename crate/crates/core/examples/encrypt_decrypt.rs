// Encrypt a message under fixed map coefficients and decrypt it again.
//
// cargo run --example encrypt_decrypt

use chaotext::cipher::{self, RankKeystream};
use chaotext::{ga, MapParams};

pub fn run_example() -> chaotext::Result<()> {
    let message = b"Meet me by the old lighthouse at half past nine.";
    let params = MapParams::for_encryption(3.2, 2.5)?;

    let enc = cipher::encrypt(message, params)?;
    println!(
        "key: a={} b={} x0={} y0={}",
        enc.key.a, enc.key.b, enc.key.x0, enc.key.y0
    );

    let stream = RankKeystream::generate(params, enc.key.initial_state(), message.len())?;
    println!("first key values: {:?}", &stream.key[..8]);
    println!("ciphertext: {:02x?}", enc.ciphertext);
    println!("fitness: {:.4}", ga::fitness(message, &enc.ciphertext)?);

    let back = cipher::decrypt(&enc.ciphertext, &enc.key)?;
    assert_eq!(back, message);
    println!("decrypted: {}", String::from_utf8_lossy(&back));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
