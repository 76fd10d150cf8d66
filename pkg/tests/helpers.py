"""Shared fixtures and brute-force oracles for the test suite.

The matrices here are deliberately written out as literals, independent of
the copies shipped in :mod:`qroots.verify`, so that a typo in one place
cannot silently blind both.
"""

from __future__ import annotations

import itertools
import random
from typing import Optional

from qroots import GCM, Affine, AffineElement, BudgetExceeded, RootDatum, doubled_datum
from qroots.quantum import coefficient_cap, is_quantum_by_length
from qroots.roots import Roots

# --- fixture matrices -------------------------------------------------------

A2 = [[2, -1], [-1, 2]]
B2 = [[2, -2], [-1, 2]]
G2 = [[2, -1], [-3, 2]]
A1_AFFINE = [[2, -2], [-2, 2]]
A2_AFFINE = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
A3_AFFINE = [[2, -1, 0, -1], [-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2]]
TRIDIAG_2 = [[2, -2, 0], [-2, 2, -2], [0, -2, 2]]
HYPERBOLIC_3 = [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]

# Every rank <= 4 shape we exercise, entries in {0, -1, -2, -3}.
FAMILY = [
    ("A1", [[2]]),
    ("A2", A2),
    ("B2", B2),
    ("G2", G2),
    ("G2-op", [[2, -3], [-1, 2]]),
    ("A1xA1", [[2, 0], [0, 2]]),
    ("A1-affine", A1_AFFINE),
    ("G-wild", [[2, -3], [-3, 2]]),
    ("A3", [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]),
    ("B3", [[2, -2, 0], [-1, 2, -1], [0, -1, 2]]),
    ("C3", [[2, -1, 0], [-2, 2, -1], [0, -1, 2]]),
    ("A2-affine", A2_AFFINE),
    ("C2-affine", [[2, -1, 0], [-2, 2, -2], [0, -1, 2]]),
    ("tridiagonal-2", TRIDIAG_2),
    ("hyperbolic-3", HYPERBOLIC_3),
    ("mixed-3", [[2, -1, 0], [-3, 2, -1], [0, -2, 2]]),
    ("D4", [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]),
    ("F4", [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]),
    ("F4-op", [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]),
    ("B4", [[2, -2, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]),
    ("C4", [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -2, 2]]),
    ("A3-affine", A3_AFFINE),
    ("B3-affine", [[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -2], [0, 0, -1, 2]]),
    ("star-4", [[2, -1, -1, -1], [-1, 2, 0, 0], [-1, 0, 2, 0], [-1, 0, 0, 2]]),
    ("wild-23", [[2, -2, 0, 0], [-3, 2, -1, 0], [0, -1, 2, -3], [0, 0, -2, 2]]),
    ("mixed-4", [[2, -1, 0, 0], [-2, 2, -1, 0], [0, -1, 2, -1], [0, 0, -3, 2]]),
    ("path-4w", [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -2], [0, 0, -1, 2]]),
    ("split-4", [[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -2], [0, 0, -2, 2]]),
]

FAMILY_COUNTS = {
    "A1": 1, "A2": 3, "B2": 3, "G2": 4, "G2-op": 4, "A1xA1": 2,
    "A1-affine": 2, "G-wild": 2, "A3": 6, "B3": 7, "C3": 6,
    "A2-affine": 6, "C2-affine": 5, "tridiagonal-2": 3, "hyperbolic-3": 3,
    "mixed-3": 9, "D4": 12, "F4": 15, "F4-op": 15, "B4": 13, "C4": 13,
    "A3-affine": 12, "B3-affine": 12, "star-4": 12, "wild-23": 5,
    "mixed-4": 11, "path-4w": 14, "split-4": 5,
}

# Fixtures used for the affine-order suites: two finite, two affine shapes.
ORDER_FIXTURES = [
    ("A2", A2),
    ("B2", B2),
    ("A1-affine", A1_AFFINE),
    ("A2-affine", A2_AFFINE),
]


def simply_laced(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return a


def path_weighted(weights: list[tuple[int, int]]) -> list[list[int]]:
    """A path whose t-th edge carries entries (a[t][t+1], a[t+1][t])."""
    n = len(weights) + 1
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for t, (x, y) in enumerate(weights):
        a[t][t + 1] = x
        a[t + 1][t] = y
    return a


def e_series(n: int) -> list[list[int]]:
    # Vertex 0 is the branch vertex's neighbour (Bourbaki's alpha_2),
    # attached to position 3 of the path 1..n-1.
    return simply_laced(n, [(i, i + 1) for i in range(1, n - 1)] + [(0, 3)])


def d_series(n: int) -> list[list[int]]:
    return simply_laced(n, [(i, i + 1) for i in range(1, n - 1)] + [(0, 2)])


def a_series(n: int) -> list[list[int]]:
    return simply_laced(n, [(i, i + 1) for i in range(n - 1)])


def affine_cycle(nverts: int) -> list[list[int]]:
    if nverts == 2:
        return [[2, -2], [-2, 2]]
    return simply_laced(nverts, [(i, (i + 1) % nverts) for i in range(nverts)])


def make_datum(matrix: list[list[int]]) -> RootDatum:
    return doubled_datum(GCM.from_matrix(matrix))


def connected_subsets(gcm: GCM):
    verts = range(gcm.n)
    for size in range(1, gcm.n + 1):
        for sub in itertools.combinations(verts, size):
            reach = {sub[0]}
            frontier = [sub[0]]
            while frontier:
                x = frontier.pop()
                for y in gcm.neighbors(x, sub):
                    if y not in reach:
                        reach.add(y)
                        frontier.append(y)
            if len(reach) == size:
                yield sub


def candidate_sequences(gcm: GCM, cap: int):
    """Every nested level sequence over a connected support, heights <= cap."""
    for sub in connected_subsets(gcm):
        for heights in itertools.product(range(1, cap + 1), repeat=len(sub)):
            top = max(heights)
            yield tuple(
                tuple(v for v, h in zip(sub, heights) if h >= level)
                for level in range(1, top + 1)
            )


# --- quantum-root oracle ----------------------------------------------------


def brute_quantum_nvecs(datum: RootDatum, bound: Optional[int] = None) -> set[tuple[int, ...]]:
    """Definitional filter over all real roots up to the coefficient bound."""
    if bound is None:
        bound = datum.n * coefficient_cap(datum.n)
    roots = Roots(datum)
    return {
        beta.nvec
        for beta, _word in roots.enumerate_real_roots(bound)
        if is_quantum_by_length(datum, beta)
    }


# --- affine-order oracles ---------------------------------------------------


def pair_root(datum: RootDatum, lam, m) -> int:
    return sum(c * datum.pairing(lam, i) for i, c in enumerate(m) if c)


def elem_key(x: AffineElement) -> tuple:
    return (x.coweight, x.w.key)


def _sweep(aff: Affine, x: AffineElement, height_cap: int, n_spread: int):
    """All (gamma, n, s x) over a blind reflection grid around x."""
    for gamma, _word in aff.roots.enumerate_real_roots(height_cap):
        p = pair_root(aff.datum, x.coweight, gamma.m)
        ns = set(range(-n_spread, n_spread + 1))
        ns |= {p + d for d in range(-n_spread, n_spread + 1)}
        for n in ns:
            try:
                y = aff.apply_reflection(gamma, n, x)
            except BudgetExceeded:
                # Shifted far out along the coweight lattice; such an image
                # cannot sit one length step away, so skipping is safe here.
                continue
            yield gamma, n, y


def oracle_covers(aff: Affine, x: AffineElement, height_cap: int = 24, n_spread: int = 8):
    out = {}
    for gamma, n, y in _sweep(aff, x, height_cap, n_spread):
        if y.length == x.length + 1 and aff.descends(gamma, n, y):
            out[elem_key(y)] = y
    return sorted(out.values(), key=lambda e: (e.coweight, e.w.word))


def oracle_cocovers(aff: Affine, x: AffineElement, height_cap: int = 24, n_spread: int = 8):
    out = {}
    for gamma, n, z in _sweep(aff, x, height_cap, n_spread):
        if z.length == x.length - 1 and aff.descends(gamma, n, x):
            out[elem_key(z)] = z
    return sorted(out.values(), key=lambda e: (e.coweight, e.w.word))


def sample_elements(
    aff: Affine,
    rng: random.Random,
    count: int,
    max_coeff: int = 3,
    max_word: int = 4,
    length_cap: int = 20,
    require_spherical: bool = False,
):
    """Random elements of the semigroup, rejection-sampled into the cone."""
    n = aff.datum.n
    out = []
    attempts = 0
    while len(out) < count and attempts < 40 * count:
        attempts += 1
        lam = tuple(rng.randint(-max_coeff, max_coeff) for _ in range(n))
        lam += tuple(rng.randint(-1, 1) for _ in range(n))
        word = tuple(rng.randrange(n) for _ in range(rng.randint(0, max_word)))
        try:
            x = aff.element(lam, word)
        except BudgetExceeded:
            continue
        if abs(x.length) > length_cap:
            continue
        if require_spherical and not aff.datum.is_spherical(x.coweight, aff.budget):
            continue
        out.append(x)
    assert len(out) == count, f"only {len(out)} samples after {attempts} attempts"
    return out
