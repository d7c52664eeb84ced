//! Version 1 key files.
//!
//! Line-oriented UTF-8, one `name=value` pair per line:
//!
//! ```text
//! version=1
//! a.dec=2.5000000000000000e0
//! a.hex=4004000000000000
//! b.dec=...
//! ```
//!
//! Each of `a`, `b`, `x0`, `y0` is stored twice: a 17-significant-digit
//! decimal for people and the big-endian hex of its binary64 bit pattern,
//! which is what the reader trusts. The two must agree bit for bit.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::cipher::KeyRecord;
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

const COMPONENTS: [&str; 4] = ["a", "b", "x0", "y0"];

/// 17 significant digits, enough to round-trip any binary64.
pub fn format_decimal(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn format_hex(v: f64) -> String {
    format!("{:016X}", v.to_bits())
}

pub fn parse_hex(field: &str, s: &str) -> Result<f64> {
    if s.len() != 16 || !s.bytes().all(|c| c.is_ascii_hexdigit()) {
        return Err(Error::format(
            field,
            format!("expected 16 hex digits, got `{s}`"),
        ));
    }
    u64::from_str_radix(s, 16)
        .map(f64::from_bits)
        .map_err(|e| Error::format(field, e.to_string()))
}

pub fn encode(key: &KeyRecord) -> String {
    let mut out = format!("version={FORMAT_VERSION}\n");
    for (name, v) in COMPONENTS.iter().zip([key.a, key.b, key.x0, key.y0]) {
        out.push_str(&format!("{name}.dec={}\n", format_decimal(v)));
        out.push_str(&format!("{name}.hex={}\n", format_hex(v)));
    }
    out
}

pub fn decode(text: &str) -> Result<KeyRecord> {
    let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (name, value) = line.split_once('=').ok_or_else(|| {
            Error::format(format!("line {}", lineno + 1), "expected `name=value`")
        })?;
        let (name, value) = (name.trim(), value.trim());
        let known = name == "version"
            || COMPONENTS
                .iter()
                .any(|c| name == format!("{c}.dec") || name == format!("{c}.hex"));
        if !known {
            return Err(Error::format(name, "unknown field"));
        }
        if fields.insert(name, value).is_some() {
            return Err(Error::format(name, "duplicate field"));
        }
    }

    let get = |name: &str| {
        fields
            .get(name)
            .copied()
            .ok_or_else(|| Error::format(name, "missing"))
    };
    let version = get("version")?;
    match version.parse::<u32>() {
        Ok(FORMAT_VERSION) => {}
        Ok(v) => return Err(Error::format("version", format!("unsupported version {v}"))),
        Err(_) => {
            return Err(Error::format(
                "version",
                format!("not a number: `{version}`"),
            ))
        }
    }

    let mut values = [0.0; 4];
    for (slot, name) in values.iter_mut().zip(COMPONENTS) {
        let hex_field = format!("{name}.hex");
        let dec_field = format!("{name}.dec");
        let from_hex = parse_hex(&hex_field, get(&hex_field)?)?;
        let dec = get(&dec_field)?;
        let from_dec: f64 = dec
            .parse()
            .map_err(|_| Error::format(&dec_field, format!("not a number: `{dec}`")))?;
        if from_dec.to_bits() != from_hex.to_bits() {
            return Err(Error::format(
                &dec_field,
                format!("decimal {dec} disagrees with {hex_field}"),
            ));
        }
        *slot = from_hex;
    }
    let key = KeyRecord {
        a: values[0],
        b: values[1],
        x0: values[2],
        y0: values[3],
    };
    key.validate()
        .map_err(|e| Error::format("key", e.to_string()))?;
    Ok(key)
}

pub fn write_key_file(key: &KeyRecord, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    key.validate()?;
    fs::write(path, encode(key)).map_err(|e| Error::io(path, e))
}

pub fn read_key_file(path: impl AsRef<Path>) -> Result<KeyRecord> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    decode(&text)
}
