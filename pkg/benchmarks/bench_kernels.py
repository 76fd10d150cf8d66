"""Compare the compiled kernels against the pure-Python ones.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is timed for both implementations on identical inputs; results
are checked equal before a line is reported.
"""

from __future__ import annotations

import argparse
import time

from qroots import _kernel_py as pure

try:
    from qroots import _kernel as compiled
except ImportError:
    compiled = None

E8_AFFINE = (
    (2, -1, 0, 0, 0, 0, 0, 0, 0),
    (-1, 2, 0, -1, 0, 0, 0, 0, 0),
    (0, 0, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, 0, -1, 2),
)
A2_AFFINE = ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
HYPERBOLIC = ((2, -2, -2), (-2, 2, -2), (-2, -2, 2))

LONG_WORD = tuple((0, 1, 2) * 30)
SHUFFLE = tuple((i * 7 + 3) % 9 for i in range(300))


def workloads():
    yield (
        "reduce_word, 300 letters, rank 9",
        lambda k: k.reduce_word(E8_AFFINE, SHUFFLE),
    )
    yield (
        "word_key, 300 letters, rank 9",
        lambda k: k.word_key(E8_AFFINE, SHUFFLE),
    )
    yield (
        "act_on_root, 90 letters, big ints",
        lambda k: k.act_on_root(HYPERBOLIC, LONG_WORD, (1, 0, 0)),
    )
    inv_word = pure.reduce_word(E8_AFFINE, SHUFFLE)
    yield (
        f"inversion_pairs, {len(inv_word)} letters",
        lambda k: k.inversion_pairs(E8_AFFINE, inv_word),
    )
    yield (
        "real_roots_upto(30), affine rank 3",
        lambda k: k.real_roots_upto(A2_AFFINE, 30),
    )
    yield (
        "quantum_closure, affine rank 9",
        lambda k: k.quantum_closure(E8_AFFINE, 10, 9**14),
    )
    yield (
        "certify_pairings, deep coweight",
        lambda k: k.certify_pairings(A2_AFFINE, (-40, 3, 1), 0, 10_000),
    )


def best_of(fn, kernel, repeat):
    out = None
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(kernel)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5, help="timing repeats")
    args = ap.parse_args()

    if compiled is None:
        print("compiled kernel not built; run pip install -e . first")
        return 1

    print(f"{'workload':<40} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in workloads():
        tp, rp = best_of(fn, pure, args.repeat)
        tc, rc = best_of(fn, compiled, args.repeat)
        assert rp == rc, f"implementations disagree on {name}"
        print(f"{name:<40} {tp * 1e3:>8.2f}ms {tc * 1e3:>8.2f}ms {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
