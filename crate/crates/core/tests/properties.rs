use std::collections::HashSet;

use chaotext::analysis::{fitness_landscape, keyspace_size, KeyRange};
use chaotext::cipher::{rank_descending, xor_apply, RankKeystream};
use chaotext::map::{derive_initial_state, generate_sequence, step};
use chaotext::{decrypt, encrypt, ga, keyfile, KeyRecord, MapParams, MapState};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn is_permutation(p: &[usize]) -> bool {
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &v)| i == v)
}

fn key_params() -> impl Strategy<Value = MapParams> {
    (1.0001f64..3.9999, 0.1001f64..3.9999).prop_map(|(a, b)| MapParams { a, b })
}

fn plaintext(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(any::<u8>(), 1..max)
        .prop_filter("nonzero sum", |v| v.iter().any(|&b| b != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn step_keeps_x_in_unit_interval(
        a in -10.0f64..10.0, b in -10.0f64..10.0,
        x in -5.0f64..5.0, y in -1e4f64..1e4,
    ) {
        let s = step(MapParams { a, b }, MapState { x, y }).unwrap();
        prop_assert!((0.0..1.0).contains(&s.x));
    }

    #[test]
    fn transient_is_a_suffix(params in key_params(), n in 1usize..200, t in 1usize..50) {
        let init = MapState { x: 0.3, y: 0.7 };
        let long = generate_sequence(params, init, n + t, 0).unwrap();
        let short = generate_sequence(params, init, n, t).unwrap();
        prop_assert_eq!(&short.xs[..], &long.xs[t..]);
        prop_assert_eq!(&short.ys[..], &long.ys[t..]);
    }

    #[test]
    fn initial_state_is_reciprocal_length(text in plaintext(3000)) {
        let s = derive_initial_state(&text).unwrap();
        let exact = 1.0 / text.len() as f64;
        prop_assert!((s.x - exact).abs() <= exact * f64::EPSILON);
        prop_assert_eq!(s.y, 1.0 - s.x);
    }

    #[test]
    fn ranks_index_the_sorted_copy(values in prop::collection::vec(-1e3f64..1e3, 1..300)) {
        let ranks = rank_descending(&values).unwrap();
        prop_assert!(is_permutation(&ranks));
        let mut sorted = values.clone();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (i, &r) in ranks.iter().enumerate() {
            prop_assert_eq!(sorted[r], values[i]);
        }
    }

    #[test]
    fn keystream_is_permutation(params in key_params(), n in 1usize..1500) {
        let init = MapState { x: 1.0 / n as f64, y: 1.0 - 1.0 / n as f64 };
        let ks = RankKeystream::generate(params, init, n).unwrap();
        prop_assert!(is_permutation(&ks.s_x) && is_permutation(&ks.s_y) && is_permutation(&ks.key));
        for i in 0..n {
            prop_assert_eq!(ks.key[i], ks.s_y[ks.s_x[i]]);
        }
    }

    #[test]
    fn xor_is_involution(data in prop::collection::vec(any::<u8>(), 0..500), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let key: Vec<usize> = data.iter().map(|_| rng.gen_range(0..100_000)).collect();
        let once = xor_apply(&data, &key).unwrap();
        prop_assert_eq!(xor_apply(&once, &key).unwrap(), data);
    }

    #[test]
    fn round_trip(text in plaintext(1200), params in key_params()) {
        let enc = encrypt(&text, params).unwrap();
        prop_assert_eq!(enc.ciphertext.len(), text.len());
        prop_assert_eq!(decrypt(&enc.ciphertext, &enc.key).unwrap(), text);
    }

    #[test]
    fn fitness_bounds(p in prop::collection::vec(any::<u8>(), 1..300), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c: Vec<u8> = p.iter().map(|_| rng.gen()).collect();
        let f = ga::fitness(&p, &c).unwrap();
        prop_assert!((0.0..=100.0).contains(&f));
        prop_assert_eq!(ga::fitness(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn key_file_round_trip(a in 1.0001f64..3.9999, b in 0.1001f64..3.9999, n in 1u32..100_000) {
        let x0 = 1.0 / f64::from(n);
        let key = KeyRecord { a, b, x0, y0: 1.0 - x0 };
        let back = keyfile::decode(&keyfile::encode(&key)).unwrap();
        prop_assert_eq!(back.a.to_bits(), a.to_bits());
        prop_assert_eq!(back.b.to_bits(), b.to_bits());
        prop_assert_eq!(back.x0.to_bits(), key.x0.to_bits());
        prop_assert_eq!(back.y0.to_bits(), key.y0.to_bits());
    }

    #[test]
    fn hex_encoding_is_lossless(bits in any::<u64>()) {
        let v = f64::from_bits(bits);
        let hex = keyfile::format_hex(v);
        prop_assert_eq!(keyfile::format_hex(keyfile::parse_hex("v", &hex).unwrap()), hex);
    }

    #[test]
    fn keyspace_split(lo in 0.0f64..10.0, w1 in 1u32..50, w2 in 1u32..50, other in 1u32..1000) {
        let prec = 0.125;
        let mid = lo + f64::from(w1) * prec;
        let hi = mid + f64::from(w2) * prec;
        let rest = KeyRange { low: 0.0, high: f64::from(other), precision: 1.0 };
        let whole = keyspace_size(&[KeyRange { low: lo, high: hi, precision: prec }, rest]).unwrap();
        let left = keyspace_size(&[KeyRange { low: lo, high: mid, precision: prec }, rest]).unwrap();
        let right = keyspace_size(&[KeyRange { low: mid, high: hi, precision: prec }, rest]).unwrap();
        prop_assert!((whole - (left + right)).abs() <= 1e-9 * whole);
    }
}

#[test]
fn nearby_coefficients_decorrelate_orbits() {
    let init = MapState { x: 0.1, y: 0.1 };
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10 {
        let a: f64 = rng.gen_range(1.1..3.9);
        let b: f64 = rng.gen_range(0.2..3.9);
        let o1 = generate_sequence(MapParams { a, b }, init, 1000, 0).unwrap();
        let o2 = generate_sequence(MapParams { a: a + 1e-15, b }, init, 1000, 0).unwrap();
        let differ = o1.xs[100..]
            .iter()
            .zip(&o2.xs[100..])
            .filter(|(p, q)| p != q)
            .count();
        assert!(differ as f64 >= 0.9 * 900.0, "a={a} b={b}: {differ}/900");
    }
}

#[test]
fn landscape_matches_direct_fitness() {
    let text: Vec<u8> = (0..400u32)
        .map(|i| 32 + ((i * 37 + i / 7) % 95) as u8)
        .collect();
    let rows = fitness_landscape(&text, (1.0, 4.0), (0.1, 4.0), 12, 12).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let row = rows[rng.gen_range(0..rows.len())];
        let enc = encrypt(&text, MapParams::new(row.a, row.b).unwrap()).unwrap();
        let p: HashSet<u8> = text.iter().copied().collect();
        let c: HashSet<u8> = enc.ciphertext.iter().copied().collect();
        let j = 100.0 * p.intersection(&c).count() as f64 / p.union(&c).count() as f64;
        assert_eq!(row.fitness, 100.0 - j);
    }
}

#[test]
fn thousand_byte_jaccard_fixture() {
    // printable text, fixed key: the ciphertext alphabet spreads over almost
    // all 256 byte values, so J is close to |P| / 256
    let text = chaotext::analysis::printable_plaintext(1000, 1);
    let enc = encrypt(&text, MapParams::new(3.2, 2.5).unwrap()).unwrap();
    let j = 100.0 - ga::fitness(&text, &enc.ciphertext).unwrap();
    assert!((j - 36.904761904761905).abs() < 1e-9, "J = {j}");
}
