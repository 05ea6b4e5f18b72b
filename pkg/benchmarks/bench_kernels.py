"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat K]
"""

from __future__ import annotations

import argparse
import random
import timeit
from fractions import Fraction

from qeuler import kernels
from qeuler.padic_oracle import _common_denominator
from qeuler.qcalc import q_bracket


def lattice_case(p: int, N: int, r: int, weights: tuple[int, ...]):
    P = p**N
    q = Fraction(1 + p)
    g = [(-1) ** s * Fraction(1 + p) ** s * q_bracket(1 + s, q) ** 2 for s in range(r * (P - 1) + 1)]
    emax = sum(weights) * (P - 1)
    a, _ = _common_denominator(g)
    b, _ = _common_denominator([q**e for e in range(emax + 1)])
    return (a, b, list(weights), 0, P)


def convolve_case(n: int, bits: int):
    rng = random.Random(0)
    return ([rng.getrandbits(bits) for _ in range(n)], [rng.getrandbits(bits) for _ in range(n)])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled backend not built; timing the Python kernels only")

    cases = [
        ("lattice_sum p=5 N=3 r=2", "lattice_sum", lattice_case(5, 3, 2, (1, 0))),
        ("lattice_sum p=3 N=4 r=2", "lattice_sum", lattice_case(3, 4, 2, (2, 1))),
        ("lattice_sum p=3 N=2 r=3", "lattice_sum", lattice_case(3, 2, 3, (2, 1, 0))),
        ("int_convolve 200x200, 64-bit", "int_convolve", convolve_case(200, 64)),
    ]
    print(f"{'case':32} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for label, fn, data in cases:
        results = {mod.__name__: getattr(mod, fn)(*data) for _, mod in backends}
        if len({str(v) for v in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        times = [
            min(timeit.repeat(lambda m=mod: getattr(m, fn)(*data), number=1, repeat=args.repeat))
            for _, mod in backends
        ]
        speed = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
        print(f"{label:32} " + " ".join(f"{t * 1e3:8.1f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
