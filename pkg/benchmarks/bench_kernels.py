"""Compiled vs pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times the same call under both backends and checks the results agree.
"""

import argparse
import random
import timeit

from cyclotrig import TrigQuery, classify, kernels, normalize_angle, zeta
from cyclotrig.field import _phi, _split_prime
from cyclotrig.trig import _orbit_vectors, minimal_polynomial, niven_table, trig_element


def _cases():
    rng = random.Random(1)
    phi = list(_phi(236))
    a = [rng.randint(-50, 50) for _ in range(len(phi) - 1)]
    b = [rng.randint(-50, 50) for _ in range(len(phi) - 1)]
    tan59 = trig_element("tan", normalize_angle(1, 59))
    vectors, den = _orbit_vectors(tan59)
    p, g = _split_prime(236, 0)
    x = sum((rng.randint(-3, 3) * zeta(105, k) for k in range(48)), zeta(105, 0) * 0)
    return [
        ("mulmod, n=236", lambda: kernels.mulmod(a, b, phi)),
        ("orbit, n=236", lambda: kernels.orbit(a, 236, phi)),
        ("orbit_product_split, tan(pi/59)", lambda: kernels.orbit_product_split(vectors, den, 236, p, g)),
        ("inverse, n=105", lambda: x.inverse()),
        ("minimal_polynomial tan(pi/59)", lambda: minimal_polynomial(tan59)),
        ("classify sin(7*pi/60)", lambda: classify(TrigQuery.of("sin", 7, 60))),
        ("niven_table cos, b<=20", lambda: niven_table("cos", 20)),
    ]


def _best(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not kernels.compiled_available():
        raise SystemExit("compiled kernels are not built; run pip install -e . first")
    print(f"{'case':<36} {'python':>11} {'compiled':>11} {'speedup':>8}")
    for name, fn in _cases():
        kernels.set_backend("python")
        ref, t_py = fn(), _best(fn, args.repeat)
        kernels.set_backend("compiled")
        got, t_c = fn(), _best(fn, args.repeat)
        assert got == ref, name
        print(f"{name:<36} {t_py * 1e3:>9.3f}ms {t_c * 1e3:>9.3f}ms {t_py / t_c:>7.1f}x")
    kernels.set_backend("auto")


if __name__ == "__main__":
    main()
