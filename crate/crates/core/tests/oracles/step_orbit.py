"""Independent reference orbit for the hybrid map.

Every arithmetic operation is evaluated in 200-bit precision with mpmath and
then rounded to the nearest binary64, which reproduces correctly rounded
IEEE-754 double arithmetic (including a correctly rounded sine). The printed
values are frozen into tests/orbit_oracle.rs.
"""
import struct
import mpmath as mp

mp.mp.prec = 200


def rnd(v):
    return float(mp.mpf(v))


def step(a, b, x, y):
    tau = rnd(2 * mp.pi)
    arg = rnd(mp.mpf(tau) * y)
    s = rnd(mp.sin(mp.mpf(arg)))
    v = rnd(rnd(mp.mpf(x) + b) + rnd(mp.mpf(a) * s))
    xn = rnd(mp.mpf(v) - mp.floor(v))
    if xn == 1.0:
        xn = 0.0
    yn = rnd(rnd(1 - rnd(rnd(mp.mpf(a) * x) * x)) + y)
    return xn, yn


def hexf(v):
    return struct.pack(">d", v).hex().upper()


def orbit(a, b, x, y, n, checkpoints):
    for i in range(1, n + 1):
        x, y = step(a, b, x, y)
        if i in checkpoints:
            print(f"  step {i}: x={x!r} ({hexf(x)}) y={y!r} ({hexf(y)})")


if __name__ == "__main__":
    x0 = rnd(mp.mpf(1) / 100)
    y0 = rnd(1 - mp.mpf(x0))
    print(f"a=3.7 b=2.9 x0={x0!r} y0={y0!r}")
    orbit(3.7, 2.9, x0, y0, 1000, {1, 10, 100, 500, 1000})
    print("a=2 b=1 x0=0.25 y0=0.75")
    orbit(2.0, 1.0, 0.25, 0.75, 3, {1, 2, 3})
    print("0.001 ->", hexf(0.001))
