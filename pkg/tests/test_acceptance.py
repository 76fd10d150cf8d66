"""Whole-surface acceptance run: one test per shipped guarantee.

Each test prints a one-line summary with its measured numbers once the
asserts pass, so ``pytest -s tests/test_acceptance.py`` reads as a
checklist.  Wall-clock limits are enforced only under the compiled kernel;
the pure-Python fallback runs the identical checks untimed.
"""

import time
from collections import Counter
from contextlib import contextmanager

import helpers
from qroots import Affine, kernel
from qroots.quantum import (
    classify_sequence,
    coefficient_cap,
    construct_from_sequence,
    count_cap,
    enumerate_quantum_roots,
    is_quantum_by_definition,
    is_quantum_by_length,
)
from qroots.roots import Roots

FAM = dict(helpers.FAMILY)
TIMED = kernel.IMPLEMENTATION == "c"

# Shared across the family-wide tests so the 28 shapes are enumerated once.
_CACHE = {}


def family_enumeration(name):
    if name not in _CACHE:
        datum = helpers.make_datum(FAM[name])
        _CACHE[name] = (datum, enumerate_quantum_roots(datum, classify=False))
    return _CACHE[name]


@contextmanager
def deadline(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    if TIMED:
        assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds:.0f}s"


def test_criterion_01_ade_exhaustion():
    seen = {}
    for name, want in (("A2", 3), ("A3", 6), ("D4", 12)):
        datum = helpers.make_datum(FAM[name])
        with deadline(1.0):
            quantum = {
                r.root.nvec
                for r in enumerate_quantum_roots(datum, classify=False)
            }
        bound = datum.n * coefficient_cap(datum.n)
        positive = {
            beta.nvec
            for beta, _w in Roots(datum).enumerate_real_roots(bound)
        }
        assert quantum == positive
        assert len(quantum) == want
        seen[name] = want
    print(f"[01 ade-exhaustion] every positive root is quantum: {seen} -- pass")


def test_criterion_02_collapse_to_simples():
    for mat in (helpers.A1_AFFINE, helpers.TRIDIAG_2):
        datum = helpers.make_datum(mat)
        with deadline(1.0):
            got = {
                r.root.nvec
                for r in enumerate_quantum_roots(datum, classify=False)
            }
        n = datum.n
        assert got == {tuple(int(i == j) for j in range(n)) for i in range(n)}
    print(
        "[02 collapse-to-simples] no weight-1 edge anywhere: "
        "only the simple roots survive -- pass"
    )


def test_criterion_03_affine_cycle_arc_family():
    # A proper arc is determined by its start and size, so a cycle on
    # (n+1) vertices carries exactly (n+1)*n of them; the full cycle is
    # excluded because its coefficient vector is not a real root.
    with deadline(10.0):
        for nverts, want in ((3, 6), (4, 12)):
            datum = helpers.make_datum(helpers.affine_cycle(nverts))
            got = {
                r.root.nvec
                for r in enumerate_quantum_roots(datum, classify=False)
            }
            arcs = set()
            for start in range(nverts):
                for size in range(1, nverts):
                    arc = {(start + t) % nverts for t in range(size)}
                    arcs.add(tuple(int(v in arc) for v in range(nverts)))
            assert got == helpers.brute_quantum_nvecs(datum) == arcs
            assert len(got) == want
    print(
        "[03 arc-family] cycle shapes carry exactly the proper arcs: "
        "6 over three vertices, 12 over four -- pass"
    )


def test_criterion_04_definition_matches_length_test():
    total = 0
    with deadline(30.0):
        for name, mat in helpers.FAMILY:
            datum = helpers.make_datum(mat)
            for beta, _w in Roots(datum).enumerate_real_roots(10):
                total += 1
                assert is_quantum_by_definition(
                    datum, beta
                ) == is_quantum_by_length(datum, beta)
    print(
        f"[04 predicate-equivalence] definition and length test agree on "
        f"{total} real roots of coroot height <= 10 over 28 shapes -- pass"
    )


def test_criterion_05_closure_equals_brute_force():
    with deadline(60.0):
        for name, _mat in helpers.FAMILY:
            datum, recs = family_enumeration(name)
            got = {r.root.nvec for r in recs}
            assert got == helpers.brute_quantum_nvecs(datum)
            assert len(got) == helpers.FAMILY_COUNTS[name]
    total = sum(helpers.FAMILY_COUNTS.values())
    print(
        f"[05 oracle-equivalence] closure enumeration matches the "
        f"definitional filter on all 28 shapes ({total} roots) -- pass"
    )


def test_criterion_06_caps_hold_everywhere():
    peak = 0
    for name, _mat in helpers.FAMILY:
        datum, recs = family_enumeration(name)
        worst = max(max(r.root.nvec) for r in recs)
        assert worst <= coefficient_cap(datum.n)
        assert len(recs) <= count_cap(datum.n)
        peak = max(peak, worst)
    print(
        f"[06 caps] coefficients peak at {peak} within max(6, n+1); "
        f"counts stay within n**(n+5) -- pass"
    )


def test_criterion_07_classification_round_trip():
    sequences = 0
    with deadline(300.0):
        for name, _mat in helpers.FAMILY:
            datum, recs = family_enumeration(name)
            gcm = datum.gcm
            realized = {r.sequence for r in recs}
            accepted = {
                seq
                for seq in helpers.candidate_sequences(gcm, cap=7)
                if classify_sequence(gcm, seq).ok
            }
            assert accepted == realized
            for seq in sorted(accepted):
                assert construct_from_sequence(datum, seq).sequence == seq
            sequences += len(realized)
    print(
        f"[07 classification-round-trip] accepted == realized == "
        f"reconstructed for {sequences} sequences over 28 shapes -- pass"
    )


def _cover_shape(aff, datum, x, y):
    """Which of the four legal reflection offsets produced this cover."""
    assert y.length == x.length + 1
    gamma, n = aff.linking_reflection(x, y)
    v = aff.weyl.element(x.cert.word)
    m = aff.weyl.act_on_root(aff.weyl.invert(v), gamma.m)
    if all(c <= 0 for c in m):
        m = tuple(-c for c in m)
        n = -n
    beta = aff.roots.validate(m)
    p = helpers.pair_root(datum, x.cert.dominant, beta.m)
    assert n in {0, p, -1, p + 1}
    if y.cert.dominant != x.cert.dominant:
        assert is_quantum_by_length(datum, beta)
    if n == 0:
        return "0"
    if n == -1:
        return "-1"
    return "pair" if n == p else "pair+1"


def test_criterion_08_cover_grading_and_shapes(rng):
    cases = [
        ("A2", helpers.A2, {}, {"height_cap": 8, "n_spread": 6}),
        ("A1-affine", helpers.A1_AFFINE, {"max_coeff": 2}, {}),
    ]
    offsets = Counter()
    covers_seen = 0
    with deadline(120.0):
        for _name, mat, sample_kw, sweep_kw in cases:
            datum = helpers.make_datum(mat)
            aff = Affine(datum)
            sweeper = Affine(datum, budget=200_000)
            for x in helpers.sample_elements(aff, rng, 50, **sample_kw):
                ups = aff.covers(x)
                assert {helpers.elem_key(y) for y in ups} == {
                    helpers.elem_key(y)
                    for y in helpers.oracle_covers(sweeper, x, **sweep_kw)
                }
                for y in ups:
                    offsets[_cover_shape(aff, datum, x, y)] += 1
                    covers_seen += 1
    assert covers_seen > 0
    print(
        f"[08 cover-shapes] {covers_seen} covers of 100 sampled elements "
        f"match the blind sweep; offsets {dict(offsets)} -- pass"
    )


def test_criterion_09_cocover_completeness(rng):
    seen = 0
    with deadline(120.0):
        for name, mat in helpers.ORDER_FIXTURES:
            datum = helpers.make_datum(mat)
            aff = Affine(datum)
            sweeper = Affine(datum, budget=200_000)
            for x in helpers.sample_elements(
                aff, rng, 20, require_spherical=True
            ):
                downs = aff.cocovers(x)
                assert {helpers.elem_key(z) for z in downs} == {
                    helpers.elem_key(z)
                    for z in helpers.oracle_cocovers(
                        sweeper, x, height_cap=24, n_spread=14
                    )
                }
                for z in downs:
                    assert z.length == x.length - 1
                seen += len(downs)
            # A coweight pairing zero with every simple root is fixed by the
            # whole group, so its fibre carries plain Weyl co-covers.
            lam_in = (1,) + (0,) * (datum.n - 1) + tuple(-c for c in mat[0])
            for word in ((), (0,), (0, 1)):
                x = aff.element(lam_in, word)
                want = {
                    helpers.elem_key(aff.element(lam_in, u.word))
                    for u in aff.weyl.cocovers_in_weyl(x.w)
                }
                assert {helpers.elem_key(z) for z in aff.cocovers(x)} == want
    print(
        f"[09 cocovers] {seen} co-covers of 80 spherical samples match the "
        f"blind sweep; fixed-coweight fibres reduce to Weyl co-covers -- pass"
    )


def test_criterion_10_explicit_cover_both_variants(rng):
    built = 0
    with deadline(60.0):
        for name, mat in helpers.ORDER_FIXTURES:
            datum = helpers.make_datum(mat)
            aff = Affine(datum)
            n = datum.n
            for rec in enumerate_quantum_roots(datum, classify=False):
                beta = rec.root
                sbeta = aff.weyl.element(aff.roots.reflection_word(beta))
                for variant in (1, 2):
                    for _ in range(5):
                        base = tuple(
                            max(0, -aff.roots.simple_pairing(beta, i))
                            + 1
                            + rng.randint(0, 2)
                            for i in range(n)
                        )
                        lam = datum.coweight_from_pairings(base)
                        free = aff.weyl.element(
                            tuple(
                                rng.randrange(n)
                                for _ in range(rng.randint(0, 3))
                            )
                        )
                        slot = _additive_slot(aff, sbeta, variant, rng, n)
                        v, w = (free, slot) if variant == 1 else (slot, free)
                        lo, hi = aff.explicit_cover_up(variant, beta, lam, v, w)
                        assert hi.length == lo.length + 1
                        link = aff.linking_reflection(lo, hi)
                        assert link is not None
                        assert aff.descends(link[0], link[1], hi)
                        built += 1
    assert built == 140
    print(
        "[10 explicit-covers] 140 constructed pairs (14 quantum roots x 5 "
        "samples x 2 variants) all verified as covers -- pass"
    )


def _additive_slot(aff, sbeta, variant, rng, n):
    """A word whose product with s_beta keeps lengths additive."""
    for _ in range(8):
        u = aff.weyl.element(
            tuple(rng.randrange(n) for _ in range(rng.randint(0, 3)))
        )
        prod = (
            aff.weyl.multiply(sbeta, u)
            if variant == 1
            else aff.weyl.multiply(u, sbeta)
        )
        if len(prod.word) == len(sbeta.word) + len(u.word):
            return u
    return aff.weyl.identity()


def test_criterion_11_cocover_witness_family():
    with deadline(60.0):
        aff = Affine(helpers.make_datum(helpers.HYPERBOLIC_3))
        pairs = aff.cocover_witness_family(0, count=12)
        assert len(pairs) == 12
        assert len({helpers.elem_key(hi) for _lo, hi in pairs}) == 1
        assert len({helpers.elem_key(lo) for lo, _hi in pairs}) == 12
        for lo, hi in pairs:
            assert hi.length == lo.length + 1
            link = aff.linking_reflection(lo, hi)
            assert link is not None
            assert aff.descends(link[0], link[1], hi)
    print(
        "[11 witness-family] 12 distinct verified co-covers of one "
        "translation on the rank-3 all-(-2) shape -- pass"
    )


def test_criterion_12_intervals_finite_and_graded(rng):
    nodes_seen = 0
    gaps = Counter()
    for name, mat in helpers.ORDER_FIXTURES:
        aff = Affine(helpers.make_datum(mat))
        for x in helpers.sample_elements(aff, rng, 20, max_word=3, length_cap=14):
            gap = rng.randint(1, 6)
            y = x
            for _ in range(gap):
                y = rng.choice(aff.covers(y))
            nodes, edges = aff.interval(x, y)
            assert nodes[0] == x and nodes[-1] == y
            for z in nodes:
                assert x.length <= z.length <= y.length
            for z, c in edges:
                assert c.length == z.length + 1
            nodes_seen += len(nodes)
            gaps[gap] += 1
    a2 = Affine(helpers.make_datum(helpers.A2))
    aff1 = Affine(helpers.make_datum(helpers.A1_AFFINE))
    aff2 = Affine(helpers.make_datum(helpers.A2_AFFINE))
    goldens = [
        (a2, a2.identity(), a2.element((1, 1, 0, 0), (0, 1, 0)), (42, 121)),
        (a2, a2.identity(), a2.translation((1, 1, 0, 0)), (12, 22)),
        (
            aff2,
            aff2.element((0, 0, 0, 1, 0, 0)),
            aff2.element((0, 0, 1, 1, 0, 0), (1, 0)),
            (12, 20),
        ),
        (aff1, aff1.identity(), aff1.element((0, 0, 0, 0), (0, 1, 0)), (6, 8)),
    ]
    for aff, x, y, want in goldens:
        nodes, edges = aff.interval(x, y)
        assert (len(nodes), len(edges)) == want
    print(
        f"[12 intervals] 80 sampled intervals (gap mix {dict(sorted(gaps.items()))}) "
        f"finite and graded, {nodes_seen} nodes; four golden size pairs hold -- pass"
    )
