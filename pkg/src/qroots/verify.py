"""Self-contained verification suites behind ``qroots verify``.

Each suite returns ``(name, ok, detail)`` triples; a suite passes when every
triple does.  Suites with built-in fixture lists (``ade``, ``affine-a``,
``classification``) ignore the optional datum; the others run on it when
given and fall back to small built-ins otherwise.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Callable, Optional

from qroots.affine import Affine, PreconditionFailed
from qroots.cartan import GCM, connected_components
from qroots.datum import RootDatum, doubled_datum
from qroots.quantum import (
    classify_sequence,
    coefficient_cap,
    count_cap,
    enumerate_quantum_roots,
    is_quantum_by_definition,
    is_quantum_by_length,
)
from qroots.roots import Roots

Check = tuple[str, bool, str]

ADE_FIXTURES = [
    ("A2", [[2, -1], [-1, 2]], 3),
    ("A3", [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 6),
    (
        "D4",
        [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
        12,
    ),
]

SIMPLE_ONLY_FIXTURES = [
    ("two-by-two", [[2, -2], [-2, 2]]),
    ("tridiagonal", [[2, -2, 0], [-2, 2, -2], [0, -2, 2]]),
]

AFFINE_A_FIXTURES = [
    ("A2-affine", [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], 6),
    (
        "A3-affine",
        [[2, -1, 0, -1], [-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2]],
        12,
    ),
]

# Curated matrices of rank <= 4 with off-diagonal entries in {0, -1, -2, -3}.
CLASSIFICATION_FAMILY = [
    ("A1", [[2]]),
    ("A2", [[2, -1], [-1, 2]]),
    ("B2", [[2, -2], [-1, 2]]),
    ("G2", [[2, -1], [-3, 2]]),
    ("G2-op", [[2, -3], [-1, 2]]),
    ("A1xA1", [[2, 0], [0, 2]]),
    ("A1-affine", [[2, -2], [-2, 2]]),
    ("G-wild", [[2, -3], [-3, 2]]),
    ("A3", [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]),
    ("B3", [[2, -2, 0], [-1, 2, -1], [0, -1, 2]]),
    ("C3", [[2, -1, 0], [-2, 2, -1], [0, -1, 2]]),
    ("A2-affine", [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]),
    ("C2-affine", [[2, -1, 0], [-2, 2, -2], [0, -1, 2]]),
    ("tridiagonal-2", [[2, -2, 0], [-2, 2, -2], [0, -2, 2]]),
    ("hyperbolic-3", [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]),
    ("mixed-3", [[2, -1, 0], [-3, 2, -1], [0, -2, 2]]),
    (
        "D4",
        [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    ),
    ("F4", [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]),
    (
        "F4-op",
        [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    ),
    ("B4", [[2, -2, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]),
    ("C4", [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -2, 2]]),
    (
        "A3-affine",
        [[2, -1, 0, -1], [-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2]],
    ),
    (
        "B3-affine",
        [[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -2], [0, 0, -1, 2]],
    ),
    (
        "star-4",
        [[2, -1, -1, -1], [-1, 2, 0, 0], [-1, 0, 2, 0], [-1, 0, 0, 2]],
    ),
    (
        "wild-23",
        [[2, -2, 0, 0], [-3, 2, -1, 0], [0, -1, 2, -3], [0, 0, -2, 2]],
    ),
    (
        "mixed-4",
        [[2, -1, 0, 0], [-2, 2, -1, 0], [0, -1, 2, -1], [0, 0, -3, 2]],
    ),
    (
        "path-4w",
        [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -2], [0, 0, -1, 2]],
    ),
    (
        "split-4",
        [[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -2], [0, 0, -2, 2]],
    ),
]

GRADING_FIXTURES = [
    ("A2", [[2, -1], [-1, 2]]),
    ("G2", [[2, -1], [-3, 2]]),
    ("B3", [[2, -2, 0], [-1, 2, -1], [0, -1, 2]]),
    ("A2-affine", [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]),
    ("A1-affine", [[2, -2], [-2, 2]]),
]


def _quantum_set(datum: RootDatum) -> set[tuple[int, ...]]:
    return {
        r.root.nvec for r in enumerate_quantum_roots(datum, classify=False)
    }


def _brute_quantum_set(datum: RootDatum) -> set[tuple[int, ...]]:
    bound = datum.n * coefficient_cap(datum.n)
    roots = Roots(datum)
    return {
        beta.nvec
        for beta, _w in roots.enumerate_real_roots(bound)
        if is_quantum_by_definition(datum, beta)
    }


def suite_ade(datum: Optional[RootDatum] = None) -> list[Check]:
    out: list[Check] = []
    for name, mat, expected in ADE_FIXTURES:
        d = doubled_datum(GCM.from_matrix(mat))
        got = _quantum_set(d)
        bound = d.n * coefficient_cap(d.n)
        allpos = {b.nvec for b, _w in Roots(d).enumerate_real_roots(bound)}
        ok = len(got) == expected and got == allpos
        out.append(
            (
                f"ade/{name}",
                ok,
                f"{len(got)} quantum roots (expected {expected}), "
                f"{'equal to' if got == allpos else 'differ from'} all positive roots",
            )
        )
    return out


def suite_simple_only(datum: Optional[RootDatum] = None) -> list[Check]:
    targets: list[tuple[str, RootDatum]] = [
        (name, doubled_datum(GCM.from_matrix(mat)))
        for name, mat in SIMPLE_ONLY_FIXTURES
    ]
    if datum is not None:
        a = datum.a
        if any(
            a[i][j] == -1 for i in range(datum.n) for j in range(datum.n) if i != j
        ):
            raise ValueError(
                "simple-only applies to matrices without -1 entries"
            )
        targets.append(("input", datum))
    out: list[Check] = []
    for name, d in targets:
        got = _quantum_set(d)
        simples = {
            tuple(1 if j == i else 0 for j in range(d.n)) for i in range(d.n)
        }
        out.append(
            (
                f"simple-only/{name}",
                got == simples,
                f"quantum set {'is' if got == simples else 'is not'} "
                f"exactly the {d.n} simple roots",
            )
        )
    return out


def suite_affine_a(datum: Optional[RootDatum] = None) -> list[Check]:
    out: list[Check] = []
    for name, mat, expected in AFFINE_A_FIXTURES:
        d = doubled_datum(GCM.from_matrix(mat))
        got = _quantum_set(d)
        brute = _brute_quantum_set(d)
        ok = got == brute and len(got) == expected
        out.append(
            (
                f"affine-a/{name}",
                ok,
                f"{len(got)} quantum roots (expected {expected}), closure "
                f"{'matches' if got == brute else 'differs from'} the definitional filter",
            )
        )
    return out


def suite_bound(datum: Optional[RootDatum] = None) -> list[Check]:
    targets = (
        [("input", datum)]
        if datum is not None
        else [
            (name, doubled_datum(GCM.from_matrix(mat)))
            for name, mat in CLASSIFICATION_FAMILY
        ]
    )
    out: list[Check] = []
    for name, d in targets:
        recs = enumerate_quantum_roots(d, classify=False)
        peak = max(max(r.root.nvec) for r in recs)
        ccap, ncap = coefficient_cap(d.n), count_cap(d.n)
        ok = peak <= ccap and len(recs) <= ncap
        out.append(
            (
                f"bound/{name}",
                ok,
                f"peak coordinate {peak} <= {ccap}, count {len(recs)} <= {ncap}",
            )
        )
    return out


def suite_grading(
    datum: Optional[RootDatum] = None, max_height: int = 10
) -> list[Check]:
    targets = (
        [("input", datum)]
        if datum is not None
        else [
            (name, doubled_datum(GCM.from_matrix(mat)))
            for name, mat in GRADING_FIXTURES
        ]
    )
    out: list[Check] = []
    for name, d in targets:
        roots = Roots(d)
        bad = 0
        total = 0
        for beta, _w in roots.enumerate_real_roots(max_height):
            total += 1
            if is_quantum_by_definition(d, beta) != is_quantum_by_length(d, beta):
                bad += 1
        out.append(
            (
                f"grading/{name}",
                bad == 0,
                f"definition and length test agree on {total - bad}/{total} "
                f"roots of coroot height <= {max_height}",
            )
        )
    return out


def classification_roundtrip(
    gcm: GCM, cap: int = 7
) -> tuple[set, set]:
    """Realized level sequences vs. classifier-accepted candidates."""
    d = doubled_datum(gcm)
    realized = {
        r.sequence
        for r in enumerate_quantum_roots(d, classify=False)
        if max(r.root.nvec) <= cap
    }
    accepted = set()
    for k in range(1, gcm.n + 1):
        for supp in combinations(range(gcm.n), k):
            if len(connected_components(gcm, supp)) != 1:
                continue
            for lams in product(range(1, cap + 1), repeat=k):
                lam = dict(zip(supp, lams))
                seq = tuple(
                    tuple(i for i in supp if lam[i] >= level)
                    for level in range(1, max(lams) + 1)
                )
                if classify_sequence(gcm, seq).ok:
                    accepted.add(seq)
    return realized, accepted


def suite_classification(datum: Optional[RootDatum] = None) -> list[Check]:
    out: list[Check] = []
    for name, mat in CLASSIFICATION_FAMILY:
        gcm = GCM.from_matrix(mat)
        realized, accepted = classification_roundtrip(gcm)
        ok = realized == accepted
        detail = f"{len(realized)} realized sequences"
        if not ok:
            detail += (
                f"; {len(realized - accepted)} rejected wrongly, "
                f"{len(accepted - realized)} accepted wrongly"
            )
        out.append((f"classification/{name}", ok, detail))
    return out


def suite_explicit_covers(
    datum: Optional[RootDatum] = None,
    seed: int = 0,
    samples: int = 5,
) -> list[Check]:
    targets = (
        [("input", datum)]
        if datum is not None
        else [
            ("A2", doubled_datum(GCM.from_matrix([[2, -1], [-1, 2]]))),
            (
                "B3",
                doubled_datum(
                    GCM.from_matrix([[2, -2, 0], [-1, 2, -1], [0, -1, 2]])
                ),
            ),
        ]
    )
    rng = random.Random(seed)
    out: list[Check] = []
    for name, d in targets:
        aff = Affine(d)
        roots = Roots(d)
        verified = 0
        wanted = 0
        for rec in enumerate_quantum_roots(d, classify=False):
            beta = rec.root
            base = tuple(
                max(0, -roots.simple_pairing(beta, i)) + 1 + rng.randint(0, 2)
                for i in range(d.n)
            )
            lam = d.coweight_from_pairings(base)
            for variant in (1, 2):
                for _ in range(samples):
                    wanted += 1
                    word = tuple(
                        rng.randrange(d.n) for _ in range(rng.randint(0, 3))
                    )
                    v = aff.weyl.element(word)
                    w = aff.weyl.element(
                        tuple(rng.randrange(d.n) for _ in range(rng.randint(0, 3)))
                    )
                    try:
                        aff.explicit_cover_up(variant, beta, lam, v, w)
                    except PreconditionFailed:
                        # Random v, w can break length additivity; the
                        # identity never does.
                        e = aff.weyl.identity()
                        aff.explicit_cover_up(
                            variant, beta, lam, e if variant == 2 else v, e
                        )
                    verified += 1
        out.append(
            (
                f"explicit-covers/{name}",
                verified == wanted,
                f"{verified}/{wanted} sampled cover pairs verified",
            )
        )
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "ade": suite_ade,
    "simple-only": suite_simple_only,
    "affine-a": suite_affine_a,
    "bound": suite_bound,
    "grading": suite_grading,
    "classification": suite_classification,
    "explicit-covers": suite_explicit_covers,
}


def run_suite(
    name: str,
    datum: Optional[RootDatum] = None,
    seed: int = 0,
    max_height: int = 10,
) -> list[Check]:
    if name == "all":
        out: list[Check] = []
        for key in SUITES:
            out.extend(run_suite(key, datum, seed, max_height))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "grading":
        return suite_grading(datum, max_height)
    if name == "explicit-covers":
        return suite_explicit_covers(datum, seed)
    return SUITES[name](datum)
