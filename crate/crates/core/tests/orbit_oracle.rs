//! Reference orbits frozen from `oracles/step_orbit.py`, an mpmath
//! re-implementation that rounds every operation to binary64.

use chaotext::map::{derive_initial_state, generate_sequence, step};
use chaotext::{MapParams, MapState};

// (step, x bits, y bits) for a=3.7, b=2.9 from the 100-byte starting point
const LONG_ORBIT: [(usize, u64, u64); 5] = [
    (1, 0x3FE5AF83A506DA84, 0x3FFFD58644523F68),
    (10, 0x3FEEF621C0AB0EA0, 0x400D24CEAD0ED97F),
    (100, 0x3FA47836D67B0400, 0xC01F14F086AFF214),
    (500, 0x3FEE23AD4EBFF528, 0xC053255AB73F6DE7),
    (1000, 0x3FD536EF925B8A20, 0xC066612BA23C4368),
];

#[test]
fn thousand_steps_match_high_precision_oracle() {
    let text = vec![b'q'; 100];
    let init = derive_initial_state(&text).unwrap();
    assert_eq!(init, MapState { x: 0.01, y: 0.99 });
    let orbit = generate_sequence(MapParams::new(3.7, 2.9).unwrap(), init, 1000, 0).unwrap();
    for (n, xb, yb) in LONG_ORBIT {
        let (x, y) = (orbit.xs[n - 1], orbit.ys[n - 1]);
        let (ex, ey) = (f64::from_bits(xb), f64::from_bits(yb));
        assert!(
            (x - ex).abs() < 1e-6 && (y - ey).abs() < 1e-6,
            "step {n}: ({x}, {y}) vs ({ex}, {ey})"
        );
    }
}

#[test]
fn thousand_steps_are_bit_exact_on_this_platform() {
    let init = MapState { x: 0.01, y: 0.99 };
    let orbit = generate_sequence(MapParams::new(3.7, 2.9).unwrap(), init, 1000, 0).unwrap();
    for (n, xb, yb) in LONG_ORBIT {
        assert_eq!(orbit.xs[n - 1].to_bits(), xb, "x at step {n}");
        assert_eq!(orbit.ys[n - 1].to_bits(), yb, "y at step {n}");
    }
}

#[test]
fn short_orbit_from_quarter_point() {
    let p = MapParams::new(2.0, 1.0).unwrap();
    let expected = [
        (0x3FD0000000000000u64, 0x3FFA000000000000u64),
        (0x3FEABEC333018860, 0x4004000000000000),
        (0x3FEABEC33301886C, 0x4000D2C8CD3C8D1E),
    ];
    let mut s = MapState { x: 0.25, y: 0.75 };
    for (xb, yb) in expected {
        s = step(p, s).unwrap();
        assert!((s.x - f64::from_bits(xb)).abs() < 1e-12);
        assert!((s.y - f64::from_bits(yb)).abs() < 1e-12);
    }
}
