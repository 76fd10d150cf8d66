"""Quantum roots: the finite subset of positive real roots whose reflection
has length ``2 ht(beta^v) - 1``, together with their level-sequence
classification.

The level sequence of a quantum root lists ``I_n = {i : N_i >= n}`` for the
coroot coordinates ``N``; ``classify_sequence`` decides from the Cartan matrix
alone whether a nested sequence arises from a quantum root, and names the
shape of each level-2 component when it does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from qroots import kernel
from qroots.cartan import (
    GCM,
    connected_components,
    degree,
    is_tree,
    one_star_convex_basepoints,
    support,
)
from qroots.datum import RootDatum
from qroots.roots import RealRoot, Roots

Seq = tuple[tuple[int, ...], ...]

__all__ = [
    "ConstructionMismatch",
    "NotMergeable",
    "ComponentClass",
    "Classification",
    "QuantumRootRecord",
    "coefficient_cap",
    "count_cap",
    "dynkin_sequence",
    "root_from_sequence",
    "is_quantum_by_definition",
    "is_quantum_by_length",
    "enumerate_quantum_roots",
    "classify_sequence",
    "construct_from_sequence",
    "mergeable",
    "merge",
]


class ConstructionMismatch(ValueError):
    """An accepted level sequence is not realized by any quantum root."""


class NotMergeable(ValueError):
    """Two quantum roots whose level sequences cannot be merged."""


@dataclass(frozen=True)
class ComponentClass:
    """Shape of one level-2 component: its kind, branch vertex, and top level."""

    kind: str
    base: int
    vertices: tuple[int, ...]
    top: int


@dataclass(frozen=True)
class Classification:
    ok: bool
    components: tuple[ComponentClass, ...]
    failure: Optional[str] = None


@dataclass(frozen=True)
class QuantumRootRecord:
    root: RealRoot
    word: tuple[int, ...]
    sequence: Seq
    classification: Classification


def coefficient_cap(n: int) -> int:
    """Hard bound on any coroot coordinate of a quantum root."""
    return max(6, n + 1)


def count_cap(n: int) -> int:
    """Hard bound on the number of quantum roots."""
    return n ** (n + 5)


def dynkin_sequence(nvec: Sequence[int]) -> Seq:
    top = max(nvec, default=0)
    return tuple(
        tuple(i for i, x in enumerate(nvec) if x >= level)
        for level in range(1, top + 1)
    )


def root_from_sequence(seq: Seq, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for level in seq:
        for i in level:
            counts[i] += 1
    return tuple(counts)


def is_quantum_by_definition(datum: RootDatum, beta: RealRoot) -> bool:
    """Inversion test: every other inversion root of ``s_beta`` pairs to 1.

    ``beta`` itself pairs to 2 and must appear exactly once.
    """
    roots = Roots(datum)
    sword = roots.reflection_word(beta)
    self_seen = 0
    for m, _nv in kernel.inversion_pairs(datum.a, sword):
        if m == beta.m:
            self_seen += 1
            continue
        if roots.coroot_pairing(beta, m) != 1:
            return False
    return self_seen == 1


def is_quantum_by_length(datum: RootDatum, beta: RealRoot) -> bool:
    """Length test: ``l(s_beta) = 2 ht(beta^v) - 1``."""
    roots = Roots(datum)
    return len(roots.reflection_word(beta)) == 2 * sum(beta.nvec) - 1


def enumerate_quantum_roots(
    datum: RootDatum, classify: bool = True
) -> list[QuantumRootRecord]:
    """All quantum roots by upward closure, sorted by (height, coroot)."""
    roots = Roots(datum)
    out = []
    for nvec, word in kernel.quantum_closure(
        datum.a, coefficient_cap(datum.n), count_cap(datum.n)
    ):
        beta = roots.from_expression(word)
        assert beta.nvec == nvec
        seq = dynkin_sequence(nvec)
        cls = (
            classify_sequence(datum.gcm, seq)
            if classify
            else Classification(True, ())
        )
        out.append(QuantumRootRecord(beta, word, seq, cls))
    return out


def construct_from_sequence(datum: RootDatum, seq: Seq) -> QuantumRootRecord:
    """Find the quantum root realizing a level sequence.

    Runs the closure restricted to the box below the prescribed coroot, which
    reaches the target iff some quantum root realizes it.  Raises
    ConstructionMismatch otherwise.
    """
    target = root_from_sequence(seq, datum.n)
    word = kernel.box_closure(datum.a, target)
    if word is None:
        raise ConstructionMismatch(
            f"no quantum root has coroot coordinates {target}"
        )
    beta = Roots(datum).from_expression(word)
    if beta.nvec != target or not is_quantum_by_definition(datum, beta):
        raise ConstructionMismatch(
            f"construction for {target} failed the inversion test"
        )
    return QuantumRootRecord(
        beta, word, dynkin_sequence(beta.nvec), classify_sequence(datum.gcm, seq)
    )


def mergeable(datum: RootDatum, r1: QuantumRootRecord, r2: QuantumRootRecord) -> bool:
    """Same support, disjoint level-2 sets with no edges between them."""
    s1, s2 = r1.sequence, r2.sequence
    if not s1 or not s2 or s1[0] != s2[0]:
        return False
    i2a = set(s1[1]) if len(s1) > 1 else set()
    i2b = set(s2[1]) if len(s2) > 1 else set()
    if i2a & i2b:
        return False
    return all(datum.a[x][y] == 0 for x in i2a for y in i2b)


def merge(
    datum: RootDatum, r1: QuantumRootRecord, r2: QuantumRootRecord
) -> QuantumRootRecord:
    """The quantum root whose level sequence is the levelwise union."""
    if not mergeable(datum, r1, r2):
        raise NotMergeable("level-2 sets overlap or touch, or supports differ")
    depth = max(len(r1.sequence), len(r2.sequence))
    seq = tuple(
        tuple(
            sorted(
                set(r1.sequence[k] if k < len(r1.sequence) else ())
                | set(r2.sequence[k] if k < len(r2.sequence) else ())
            )
        )
        for k in range(depth)
    )
    merged = construct_from_sequence(datum, seq)
    base = tuple(1 if x else 0 for x in r1.root.nvec)
    expect = tuple(
        x + y - b for x, y, b in zip(r1.root.nvec, r2.root.nvec, base)
    )
    assert merged.root.nvec == expect
    return merged


# --- level-sequence classification -----------------------------------------


def classify_sequence(gcm: GCM, seq: Seq) -> Classification:
    """Decide whether a nested level sequence belongs to a quantum root.

    On success the result lists one ComponentClass per connected component of
    the level-2 set; on failure it names the first violated clause.
    """

    def fail(name: str) -> Classification:
        return Classification(False, (), name)

    if not seq or not seq[0]:
        return fail("empty-sequence")
    sets = [set(level) for level in seq]
    if any(not s for s in sets):
        return fail("empty-level")
    for up, down in zip(sets[1:], sets):
        if not up <= down:
            return fail("not-nested")
    i1 = sets[0]
    if any(not 0 <= x < gcm.n for x in i1):
        return fail("vertex-out-of-range")
    if not is_tree(gcm, i1):
        return fail("support-not-tree")
    if not one_star_convex_basepoints(gcm, i1):
        return fail("support-not-star-convex")
    if len(sets) == 1:
        return Classification(True, ())

    deg = {x: degree(gcm, x, i1) for x in i1}
    if any(deg[x] > 3 for x in sets[1]):
        return fail("degree-exceeds-three")
    for level in sets[1:]:
        for comp in connected_components(gcm, level):
            branch = [x for x in comp if deg[x] == 3]
            if not branch:
                return fail("component-without-branch-vertex")
            if len(branch) > 1:
                return fail("component-with-multiple-branch-vertices")

    lam = {x: sum(1 for s in sets if x in s) for x in i1}
    components: list[ComponentClass] = []
    for comp in connected_components(gcm, sets[1]):
        base = next(x for x in comp if deg[x] == 3)
        res = _classify_component(gcm, i1, sets[1], lam, comp, base)
        if isinstance(res, str):
            return fail(res)
        components.append(res)
    return Classification(True, tuple(components))


def _classify_component(
    gcm: GCM,
    i1: set[int],
    i2: set[int],
    lam: dict[int, int],
    comp: tuple[int, ...],
    base: int,
) -> "ComponentClass | str":
    compset = set(comp)
    K = lam[base]
    nbrs = list(gcm.neighbors(base, i1))

    # Walk the branches of the component away from the base.
    chains: dict[int, list[int]] = {}
    claimed = {base}
    for b in nbrs:
        if b not in compset:
            continue
        chain = [b]
        prev = base
        while True:
            steps = [y for y in gcm.neighbors(chain[-1], compset) if y != prev]
            if not steps:
                break
            if len(steps) > 1:
                return "branch-not-a-path"
            prev = chain[-1]
            chain.append(steps[0])
        chains[b] = chain
        claimed |= set(chain)
    if claimed != compset:
        return "component-shape"

    # Branch vertices admit at most two extra neighbours, all entering with
    # weight one; levels fall away from the base, one level at most per step
    # only where a kind below demands it.
    for x in compset - {base}:
        sup = support(gcm, x, i1)
        if len(sup) > 3:
            return "branch-support-size"
        if any(gcm.a[y][x] != -1 for y in sup if y != x):
            return "branch-in-weight"
    for b, chain in chains.items():
        levels = [K] + [lam[x] for x in chain]
        if any(q > p for p, q in zip(levels, levels[1:])):
            return "branch-level-not-monotone"

    # Interior branch vertices have exactly their two chain neighbours; an end
    # either continues to a vertex outside level 2 (an "E3" end) or is a leaf
    # of the support (an "E2" end, only possible past level 3).
    ends: dict[int, tuple[str, Optional[int]]] = {}
    for b, chain in chains.items():
        path = [base] + chain
        for t in range(1, len(path) - 1):
            if set(support(gcm, path[t], i1)) != {path[t - 1], path[t], path[t + 1]}:
                return "interior-extra-neighbour"
        extra = set(support(gcm, path[-1], i1)) - {path[-2], path[-1]}
        if extra:
            u = extra.pop()
            if u in i2:
                return "component-shape"
            ends[b] = ("E3", u)
        else:
            if lam[path[-2]] < 3:
                return "leaf-end-too-early"
            ends[b] = ("E2", None)

    def strict_prefixes(b: int) -> bool:
        full = [base] + chains[b]

        def k(n: int) -> int:
            return sum(1 for x in full if lam[x] >= n)

        return all(k(n) < k(n - 1) for n in range(3, K + 2) if k(n - 1) > 0)

    def arm_count(b: int, n: int) -> int:
        return sum(1 for x in chains[b] if lam[x] >= n)

    made = lambda kind: ComponentClass(kind, base, comp, K)

    s = len(nbrs) + 1
    if s == 2:
        if K != 2:
            return "2G-base-level"
        return made("2G")

    if s == 3:
        weights = sorted(-gcm.a[b][base] for b in nbrs)
        if weights != [1, 2]:
            return "base-in-weights"
        b2 = next(b for b in nbrs if gcm.a[b][base] == -2)
        b2p = next(b for b in nbrs if gcm.a[b][base] == -1)
        if K == 2:
            return made("3S")
        if b2p in compset:
            if K != 3:
                return "3F-base-level"
            if set(support(gcm, b2p, i1)) != {base, b2p}:
                return "3F-short-arm-not-leaf"
            if lam[b2p] != 2:
                return "3F-short-arm-level"
            if b2 not in compset:
                return "3F-long-arm-missing"
            if not strict_prefixes(b2):
                return "3F-prefix-not-strict"
            if ends[b2][0] != "E3":
                return "3F-end-leaf"
            return made("3F")
        if b2 not in compset:
            return "3C-arm-missing"
        if not strict_prefixes(b2):
            return "3C-prefix-not-strict"
        if ends[b2][0] != "E3":
            return "3C-end-leaf"
        return made("3C")

    # s == 4: three neighbours, each entering with weight one.
    inside = [b for b in nbrs if b in compset]
    outside = [b for b in nbrs if b not in compset]
    if outside:
        if K >= 3 and len(outside) != 1:
            return "4A-base-level"
        for b in inside:
            if not strict_prefixes(b):
                return "4A-prefix-not-strict"
            if ends[b][0] != "E3":
                return "4A-end-leaf"
        return made("4A")
    if K == 2:
        if any(ends[b][0] != "E3" for b in inside):
            return "4S-end-leaf"
        return made("4S")

    leaf_arms = [b for b in inside if len(support(gcm, b, i1)) == 2]
    if len(leaf_arms) != 1:
        return "4-branch-leaf-count"
    j2pp = leaf_arms[0]
    others = [b for b in inside if b != j2pp]
    qualifiers = [b for b in others if len(chains[b]) == 1 and ends[b][0] == "E3"]

    if qualifiers:
        for q in qualifiers:
            main = next(b for b in others if b != q)
            if K % 2 == 0:
                if lam[q] not in (K // 2, K // 2 + 1):
                    return "4D-short-arm-level"
                if lam[j2pp] != K // 2:
                    return "4D-leaf-arm-level"
            else:
                if lam[q] != (K + 1) // 2:
                    return "4D-short-arm-level"
                if lam[j2pp] not in ((K - 1) // 2, (K + 1) // 2):
                    return "4D-leaf-arm-level"
            if not strict_prefixes(main):
                return "4D-prefix-not-strict"
            if ends[main][0] != "E3":
                return "4D-end-leaf"
        return made("4D")

    arms3 = [b for b in others if lam[b] >= 3]
    if K == 3 and len(arms3) == 2:
        if lam[j2pp] != 2:
            return "4SA-leaf-arm-level"
        for b in others:
            if ends[b][0] != "E3":
                return "4SA-end-leaf"
            if arm_count(b, 3) >= len(chains[b]):
                return "4SA1-prefix-not-strict"
        return made("4SA1")
    if K in (3, 4) and len(arms3) <= 1:
        if lam[j2pp] != 2:
            return "4SA-leaf-arm-level"
        if any(ends[b][0] != "E3" for b in others):
            return "4SA-end-leaf"
        if K == 4 and not arms3:
            return "4SA2-live-arm-missing"
        if arms3:
            b = arms3[0]
            if arm_count(b, 3) >= len(chains[b]):
                return "4SA2-prefix-not-strict"
            if K == 4 and arm_count(b, 4) >= arm_count(b, 3):
                return "4SA2-prefix-not-strict"
        return made("4SA2")
    if K >= 4 and len(arms3) == 2:
        tails = [
            b
            for b in others
            if len(chains[b]) == 2
            and set(support(gcm, chains[b][1], i1)) == {b, chains[b][1]}
            and lam[chains[b][1]] == 2
        ]
        if not tails:
            return "4E-no-tail-arm"
        first_failure: Optional[str] = None
        for j2p in tails:
            main = next(b for b in others if b != j2p)
            res = _check_4e(
                gcm, i1, compset, lam, chains, ends, base, K, j2pp, j2p, main,
                strict_prefixes, arm_count, made,
            )
            if isinstance(res, str):
                first_failure = first_failure or res
            else:
                return res
        return first_failure or "4E-no-tail-arm"
    return "4-base-level-vs-arms"


def _check_4e(
    gcm: GCM,
    i1: set[int],
    compset: set[int],
    lam: dict[int, int],
    chains: dict[int, list[int]],
    ends: dict[int, tuple[str, Optional[int]]],
    base: int,
    K: int,
    j2pp: int,
    j2p: int,
    main: int,
    strict_prefixes,
    arm_count,
    made,
) -> "ComponentClass | str":
    if lam[j2pp] == 2:
        if K > 6:
            return "4EA-base-level"
        if lam[j2p] not in (3, 4) or (K == 4 and lam[j2p] != 3):
            return "4EA-tail-arm-level"
        if ends[main][0] != "E3":
            return "4E-end-leaf"
        if not strict_prefixes(main):
            return "4EA-prefix-not-strict"
        return made("4EA")
    if lam[j2pp] != 3:
        return "4E-leaf-arm-level"
    if K not in (5, 6):
        return "4ED-base-level"
    if lam[j2p] == 4:
        if K == 5:
            if ends[main][0] != "E3":
                return "4E-end-leaf"
            if not strict_prefixes(main):
                return "4ED1-prefix-not-strict"
            return made("4ED1")
        # K == 6: the level ladder must come down in steps of one from some
        # level n0 on, with a plateau (or, for n0 = 2, the whole support in
        # play and the segment closed off by a support leaf).
        p = lambda n: arm_count(main, n)
        if p(6) != 0:
            return "4ED2-level-6"
        for n0 in range(2, 7):
            if p(n0) != 6 - n0:
                continue
            if n0 == 2:
                if i1 != compset or ends[main][0] != "E2":
                    continue
            else:
                if ends[main][0] != "E3" or p(n0 - 1) != p(n0):
                    continue
                if any(p(n) >= p(n - 1) for n in range(3, n0)):
                    continue
            if any(p(n - 1) != p(n) + 1 for n in range(n0 + 1, 6)):
                continue
            return made("4ED2")
        return "4ED2-ladder"
    if lam[j2p] == 3:
        if ends[main][0] != "E3":
            return "4E-end-leaf"
        if not strict_prefixes(main):
            return "4ED3-prefix-not-strict"
        return made("4ED3")
    return "4ED-tail-arm-level"
