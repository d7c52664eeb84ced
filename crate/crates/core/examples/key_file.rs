// Write a key file, show it, and read it back bit for bit.
//
// cargo run --example key_file

use chaotext::{encrypt, keyfile, MapParams};

pub fn run_example() -> chaotext::Result<()> {
    let text = vec![b'x'; 1000];
    let enc = encrypt(&text, MapParams::for_encryption(3.3, 0.7)?)?;

    let path = std::env::temp_dir().join("chaotext-example.key");
    keyfile::write_key_file(&enc.key, &path)?;
    print!("{}", keyfile::encode(&enc.key));

    let back = keyfile::read_key_file(&path)?;
    assert_eq!(back.x0.to_bits(), 0.001f64.to_bits());
    assert_eq!(
        [back.a, back.b, back.x0, back.y0].map(f64::to_bits),
        [enc.key.a, enc.key.b, enc.key.x0, enc.key.y0].map(f64::to_bits)
    );
    println!("read back {} identically", path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
