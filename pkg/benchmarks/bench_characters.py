"""Compare the compiled and pure-Python character kernels.

    python3 benchmarks/bench_characters.py --n 12 16 20 24 --repeat 3

Each timing builds a fresh kernel and computes full character rows for a
spread of shapes, so memo warm-up is included. Rows are cross-checked.
"""

from __future__ import annotations

import argparse
import time

from kronstab import _kernels
from kronstab.partitions import partitions_of


def sample_shapes(n: int, count: int) -> list[tuple[int, ...]]:
    shapes = partitions_of(n)
    step = max(1, len(shapes) // count)
    return list(shapes[::step][:count])


def time_backend(backend: str, n: int, shapes, repeat: int) -> tuple[float, list]:
    best, rows = float("inf"), []
    for _ in range(repeat):
        t0 = time.perf_counter()
        kernel = _kernels.make_kernel(n, backend)
        rows = [kernel.row(lam) for lam in shapes]
        best = min(best, time.perf_counter() - t0)
    return best, rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[10, 14, 18, 22])
    ap.add_argument("--shapes", type=int, default=8, help="rows per size")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = _kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'n':>4} {'classes':>8} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for n in args.n:
        shapes = sample_shapes(n, args.shapes)
        timings, reference = {}, None
        for b in backends:
            timings[b], rows = time_backend(b, n, shapes, args.repeat)
            if reference is None:
                reference = [list(r) for r in rows]
            elif [list(r) for r in rows] != reference:
                raise SystemExit(f"backends disagree at n={n}")
        speed = (f"{timings['python'] / timings['cython']:8.1f}x"
                 if "cython" in timings else "       -")
        cells = " ".join(f"{timings[b]:9.4f}s" for b in backends)
        print(f"{n:>4} {len(partitions_of(n)):>8} {cells} {speed}")


if __name__ == "__main__":
    main()
