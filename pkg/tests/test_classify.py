"""Level-sequence classification: frozen forward tables on the big shapes,
an exhaustive accepted == realized sweep on small ones, and the failure
clauses on hand-built bad sequences."""

from collections import Counter

import pytest

import helpers
from qroots import GCM
from qroots.quantum import (
    ConstructionMismatch,
    classify_sequence,
    construct_from_sequence,
    dynkin_sequence,
    enumerate_quantum_roots,
)

AFF_E6 = helpers.simply_laced(7, [(i, i + 1) for i in range(1, 5)] + [(0, 3), (6, 0)])
AFF_E7 = helpers.simply_laced(8, [(i, i + 1) for i in range(1, 6)] + [(0, 3), (7, 1)])
AFF_E8 = helpers.simply_laced(9, [(i, i + 1) for i in range(1, 7)] + [(0, 3), (8, 7)])
AFF_D6 = helpers.simply_laced(7, [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)])
AFF_D4 = helpers.simply_laced(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
B6 = helpers.path_weighted([(-2, -1), (-1, -1), (-1, -1), (-1, -1), (-1, -1)])
TWO_HUMP = helpers.path_weighted([(-2, -1), (-1, -1), (-1, -1), (-1, -1), (-1, -2)])

# (matrix, total count, kind multiset over all components)
FORWARD_TABLE = [
    (helpers.e_series(6), 36, {"4A": 10, "4D": 1}),
    (helpers.e_series(7), 63, {"4A": 22, "4D": 6, "4EA": 1}),
    (
        helpers.e_series(8),
        120,
        {"4A": 40, "4D": 22, "4EA": 7, "4ED1": 1, "4ED2": 5, "4ED3": 1},
    ),
    (helpers.d_series(5), 20, {"4A": 3}),
    (helpers.d_series(6), 30, {"4A": 6}),
    (helpers.a_series(6), 21, {}),
    (B6, 31, {"3S": 10}),
    (AFF_E6, 72, {"4A": 32, "4D": 3, "4S": 1}),
    (AFF_E7, 126, {"4A": 53, "4D": 20, "4EA": 2, "4SA1": 1, "4SA2": 5}),
    (
        AFF_E8,
        240,
        {"4A": 65, "4D": 64, "4EA": 28, "4ED1": 6, "4ED2": 15, "4ED3": 7},
    ),
    (AFF_D6, 60, {"4A": 24}),
    (AFF_D4, 24, {"4A": 4}),
    (TWO_HUMP, 42, {"3S": 24}),
]


def kinds_of(recs):
    return Counter(c.kind for r in recs for c in r.classification.components)


def test_forward_table():
    for mat, count, kinds in FORWARD_TABLE:
        recs = enumerate_quantum_roots(helpers.make_datum(mat))
        assert len(recs) == count, mat
        assert not [r for r in recs if not r.classification.ok], mat
        assert dict(kinds_of(recs)) == kinds, mat


def test_family_kind_multisets():
    expected = {
        "G2": {"2G": 1},
        "G2-op": {"2G": 1},
        "B3": {"3S": 1},
        "mixed-3": {"2G": 2, "3S": 1},
        "D4": {"4A": 1},
        "F4": {"3C": 1, "3F": 1, "3S": 3},
        "F4-op": {"3C": 1, "3F": 1, "3S": 3},
        "B4": {"3S": 3},
        "C4": {"3S": 3},
        "B3-affine": {"4A": 1},
        "star-4": {"4A": 1},
        "mixed-4": {"2G": 1},
        "path-4w": {"3C": 1, "3S": 3},
    }
    for name, mat in helpers.FAMILY:
        recs = enumerate_quantum_roots(helpers.make_datum(mat))
        assert dict(kinds_of(recs)) == expected.get(name, {}), name


def test_every_kind_is_realized():
    seen = set()
    for mat, _count, kinds in FORWARD_TABLE:
        seen |= set(kinds)
    for name, mat in helpers.FAMILY:
        seen |= set(kinds_of(enumerate_quantum_roots(helpers.make_datum(mat))))
    assert seen == {
        "2G", "3S", "3C", "3F", "4S", "4A", "4D",
        "4EA", "4ED1", "4ED2", "4ED3", "4SA1", "4SA2",
    }


def test_highest_roots_get_the_deep_kinds():
    cases = [
        (helpers.e_series(6), (2, 1, 2, 3, 2, 1), ["4D"]),
        (helpers.e_series(7), (2, 2, 3, 4, 3, 2, 1), ["4EA"]),
        (helpers.e_series(8), (3, 2, 4, 6, 5, 4, 3, 2), ["4ED2"]),
        (AFF_E8, (2, 2, 4, 6, 5, 4, 3, 2, 1), ["4EA"]),
    ]
    for mat, nvec, want in cases:
        recs = enumerate_quantum_roots(helpers.make_datum(mat))
        rec = next(r for r in recs if r.root.nvec == nvec)
        assert [c.kind for c in rec.classification.components] == want


# --- exhaustive converse ----------------------------------------------------


@pytest.mark.parametrize(
    "name",
    ["A2", "G2", "B3", "A2-affine", "hyperbolic-3", "F4", "star-4", "wild-23"],
)
def test_accepted_equals_realized(name):
    mat = dict(helpers.FAMILY)[name]
    gcm = GCM.from_matrix(mat)
    datum = helpers.make_datum(mat)
    realized = {r.sequence for r in enumerate_quantum_roots(datum, classify=False)}
    accepted = set()
    for seq in helpers.candidate_sequences(gcm, cap=7):
        if classify_sequence(gcm, seq).ok:
            accepted.add(seq)
            rec = construct_from_sequence(datum, seq)
            assert rec.sequence == seq
    assert accepted == realized


# --- failure clauses --------------------------------------------------------


def test_failure_strings():
    gcm = GCM.from_matrix(dict(helpers.FAMILY)["B3"])
    cases = [
        ((), "empty-sequence"),
        (((0, 1), ()), "empty-level"),
        (((1,), (0, 1)), "not-nested"),
        (((0, 5), (0,)), "vertex-out-of-range"),
        (((0, 2),), "support-not-tree"),  # disconnected pair
        (((0,), (0,)), "component-without-branch-vertex"),
    ]
    for seq, want in cases:
        got = classify_sequence(gcm, seq)
        assert not got.ok and got.failure == want, seq


def test_failure_star_convexity():
    # Both directions of the edge weigh 2: neither end is a basepoint.
    gcm = GCM.from_matrix(helpers.TRIDIAG_2)
    got = classify_sequence(gcm, ((0, 1),))
    assert not got.ok and got.failure == "support-not-star-convex"


def test_failure_on_cycle_support():
    gcm = GCM.from_matrix(helpers.A2_AFFINE)
    got = classify_sequence(gcm, ((0, 1, 2), (0, 1, 2)))
    assert not got.ok and got.failure == "support-not-tree"


def test_failure_without_branch_vertex():
    gcm = GCM.from_matrix(dict(helpers.FAMILY)["A3"])
    got = classify_sequence(gcm, ((0, 1, 2), (1,)))
    assert not got.ok and got.failure == "component-without-branch-vertex"


def test_single_level_sequences_are_plain():
    gcm = GCM.from_matrix(helpers.A2)
    got = classify_sequence(gcm, ((0, 1),))
    assert got.ok and got.components == ()


def test_b3_doubled_middle():
    mat = dict(helpers.FAMILY)["B3"]
    datum = helpers.make_datum(mat)
    rec = construct_from_sequence(datum, ((0, 1, 2), (1,)))
    assert rec.root.nvec == (1, 2, 1)
    assert [c.kind for c in rec.classification.components] == ["3S"]
    assert rec.classification.components[0].base == 1


def test_construct_rejects_unreachable_targets():
    datum = helpers.make_datum(helpers.A2)
    with pytest.raises(ConstructionMismatch, match="no quantum root"):
        construct_from_sequence(datum, dynkin_sequence((2, 1)))
