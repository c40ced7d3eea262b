"""Compiled kernels against the pure-Python fallback.

Two measurements: the raw kernels on random rational matrices, and the
whole ``check --suite all`` pipeline on each fixture with the backend forced
through ``COENDCHECK_PURE``.

    python3 benchmarks/bench_kernels.py [--size 24] [--repeat 5]
"""

import argparse
import os
import random
import subprocess
import sys
import tempfile
import timeit
from fractions import Fraction
from pathlib import Path

from coendcheck import _pykernels
from coendcheck.fixtures import FIXTURE_NAMES, emit_fixture

try:
    from coendcheck import _ckernels
except ImportError:
    sys.exit("compiled kernels not built; reinstall with Cython available")


def rational_matrix(rng, n, m):
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n * m)]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_rows(size, repeat, rng):
    a = rational_matrix(rng, size, size)
    b = rational_matrix(rng, size, size)
    small = rational_matrix(rng, 6, 6)
    cases = {
        f"matmul {size}x{size}": lambda k: k.matmul(a, size, size, b, size),
        "kron 6x6 (x) 6x6": lambda k: k.kron(small, 6, 6, small, 6, 6),
        f"rref {size}x{size}": lambda k: k.rref(a, size, size),
    }
    for name, case in cases.items():
        py = best(lambda: case(_pykernels), repeat)
        cy = best(lambda: case(_ckernels), repeat)
        yield name, py, cy


def pipeline_rows(repeat):
    with tempfile.TemporaryDirectory() as tmp:
        for name in FIXTURE_NAMES:
            path = Path(tmp) / f"{name}.json"
            emit_fixture(name, path)
            cmd = [sys.executable, "-m", "coendcheck", "check", str(path),
                   "--suite", "all", "--report", "json"]
            times = {}
            for backend, extra in (("python", {"COENDCHECK_PURE": "1"}), ("cython", {})):
                env = {k: v for k, v in os.environ.items() if k != "COENDCHECK_PURE"}
                env.update(extra)
                times[backend] = best(
                    lambda: subprocess.run(cmd, env=env, capture_output=True), repeat)
            yield f"check all {name}", times["python"], times["cython"]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=24)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    rng = random.Random(args.seed)
    print(f"{'case':<26}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, py, cy in [*kernel_rows(args.size, args.repeat, rng),
                         *pipeline_rows(args.repeat)]:
        print(f"{name:<26}{py:>12.4f}{cy:>12.4f}{py / cy:>9.2f}x")


if __name__ == "__main__":
    main()
