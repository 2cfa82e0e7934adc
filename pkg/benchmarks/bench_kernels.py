"""Timing of the compiled and pure-Python special-function kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  Each kernel is timed on
the same inputs under both backends; the largest absolute difference of
the outputs is printed next to the speedup.
"""

import argparse
import timeit

import numpy as np

from batres._backend import get_kernels


def _cases(size):
    rng = np.random.default_rng(0)
    z = rng.uniform(-6, 6, size) + 1j * rng.uniform(-6, 6, size)
    x = rng.uniform(0.0, 30.0, size).astype(np.complex128)
    return [
        ("gamma_array", lambda k: k.gamma_array(z)),
        ("rgamma_array", lambda k: k.rgamma_array(z)),
        ("hyp1f1_array a=0.3+0.2i b=2", lambda k: k.hyp1f1_array(0.3 + 0.2j, 2.0 + 0j, z)),
        ("hyp1f1_array a=-7 b=1.5", lambda k: k.hyp1f1_array(-7.0 + 0j, 1.5 + 0j, z)),
        ("laguerre_array n=20", lambda k: k.laguerre_array(20, 1.0 + 0j, x)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--size", type=int, default=2000, help="points per call")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    py = get_kernels("python")
    try:
        cy = get_kernels("cython")
    except ImportError:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':32s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s} {'max |diff|':>11s}")
    for name, call in _cases(args.size):
        tp = min(timeit.repeat(lambda: call(py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: call(cy), number=1, repeat=args.repeat))
        diff = float(np.max(np.abs(np.asarray(call(py)) - np.asarray(call(cy)))))
        print(f"{name:32s} {tp:11.4f} {tc:11.4f} {tp / tc:8.1f} {diff:11.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
