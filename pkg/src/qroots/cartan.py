"""Generalized Cartan matrices and their Dynkin diagrams.

A generalized Cartan matrix ``A = (a_ij)`` over index set ``I`` satisfies
``a_ii = 2``, ``a_ij <= 0`` for ``i != j``, and ``a_ij = 0`` iff ``a_ji = 0``.
Its Dynkin diagram has vertex set ``I`` and a directed edge ``i -> j`` of
weight ``w(i, j) = -a_ij`` whenever ``a_ij < 0``.

Vertices carry arbitrary string labels; all graph operations below work on
integer indices into ``labels``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

Matrix = tuple[tuple[int, ...], ...]
Subset = tuple[int, ...]

__all__ = [
    "GCM",
    "DynkinDiagram",
    "StandardType",
    "det_int",
    "diagram_from_gcm",
    "gcm_from_diagram",
    "connected_components",
    "is_tree",
    "degree",
    "support",
    "one_star_convex_basepoints",
    "leaf_deletion_basepoint",
    "standard_type",
    "is_finite_type",
]


@dataclass(frozen=True)
class GCM:
    """A generalized Cartan matrix with labelled rows and columns."""

    labels: tuple[str, ...]
    a: Matrix

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate vertex labels")
        if len(self.a) != n:
            raise ValueError(f"matrix has {len(self.a)} rows, expected {n}")
        for i, row in enumerate(self.a):
            if len(row) != n:
                raise ValueError(
                    f"row {self.labels[i]!r} has {len(row)} entries, expected {n}"
                )
            for j, x in enumerate(row):
                if not isinstance(x, int):
                    raise ValueError(
                        f"entry at row {self.labels[i]!r}, column {self.labels[j]!r}"
                        f" is not an integer: {x!r}"
                    )
                if i == j and x != 2:
                    raise ValueError(
                        f"diagonal entry at row {self.labels[i]!r} must be 2, got {x}"
                    )
                if i != j and x > 0:
                    raise ValueError(
                        f"off-diagonal entry at row {self.labels[i]!r},"
                        f" column {self.labels[j]!r} must be <= 0, got {x}"
                    )
        for i in range(n):
            for j in range(i + 1, n):
                if (self.a[i][j] == 0) != (self.a[j][i] == 0):
                    raise ValueError(
                        f"entries at ({self.labels[i]!r}, {self.labels[j]!r}) must"
                        f" vanish together: {self.a[i][j]} vs {self.a[j][i]}"
                    )

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def from_matrix(
        cls, rows: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None
    ) -> "GCM":
        if labels is None:
            labels = [str(i) for i in range(len(rows))]
        return cls(tuple(labels), tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_json(cls, text: str) -> "GCM":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {exc}") from exc
        if not isinstance(obj, dict) or "matrix" not in obj:
            raise ValueError('expected an object with a "matrix" key')
        return cls.from_matrix(obj["matrix"], obj.get("labels"))

    def to_json(self) -> str:
        return json.dumps(
            {"labels": list(self.labels), "matrix": [list(r) for r in self.a]},
            sort_keys=True,
        )

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def neighbors(self, i: int, subset: Optional[Iterable[int]] = None) -> Subset:
        """Indices adjacent to ``i`` in the underlying undirected graph."""
        pool = range(self.n) if subset is None else subset
        return tuple(j for j in pool if j != i and self.a[i][j] != 0)


@dataclass(frozen=True)
class DynkinDiagram:
    """Directed weighted graph of a Cartan matrix.

    ``edges`` lists ``(i, j, w)`` with ``w = w(i, j) = -a_ij > 0``.
    """

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]


def diagram_from_gcm(gcm: GCM) -> DynkinDiagram:
    edges = tuple(
        (i, j, -gcm.a[i][j])
        for i in range(gcm.n)
        for j in range(gcm.n)
        if i != j and gcm.a[i][j] < 0
    )
    return DynkinDiagram(gcm.labels, edges)


def gcm_from_diagram(diagram: DynkinDiagram) -> GCM:
    n = len(diagram.labels)
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, w in diagram.edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"edge ({i}, {j}) does not join two distinct vertices")
        if w <= 0:
            raise ValueError(f"edge ({i}, {j}) has non-positive weight {w}")
        rows[i][j] = -w
    return GCM.from_matrix(rows, diagram.labels)


def _vertices(gcm: GCM, subset: Optional[Iterable[int]]) -> Subset:
    if subset is None:
        return tuple(range(gcm.n))
    return tuple(sorted(set(subset)))


def connected_components(gcm: GCM, subset: Optional[Iterable[int]] = None) -> tuple[Subset, ...]:
    """Components of the undirected diagram restricted to ``subset``."""
    verts = _vertices(gcm, subset)
    pool = set(verts)
    out = []
    while pool:
        start = min(pool)
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in gcm.neighbors(u, pool):
                if v not in comp:
                    comp.add(v)
                    queue.append(v)
        pool -= comp
        out.append(tuple(sorted(comp)))
    return tuple(sorted(out))


def is_tree(gcm: GCM, subset: Optional[Iterable[int]] = None) -> bool:
    """True when the undirected diagram on ``subset`` is connected and acyclic."""
    verts = _vertices(gcm, subset)
    if not verts:
        return False
    if len(connected_components(gcm, verts)) != 1:
        return False
    edge_count = sum(
        1 for i, j in combinations(verts, 2) if gcm.a[i][j] != 0
    )
    return edge_count == len(verts) - 1


def degree(gcm: GCM, i: int, subset: Optional[Iterable[int]] = None) -> int:
    """Weighted in-degree of ``i``: the sum of ``w(j, i)`` over neighbours ``j``.

    >>> degree(GCM.from_matrix([[2, -1], [-3, 2]]), 0)
    3
    """
    verts = _vertices(gcm, subset)
    return sum(-gcm.a[j][i] for j in verts if j != i and gcm.a[j][i] != 0)


def support(gcm: GCM, i: int, subset: Optional[Iterable[int]] = None) -> Subset:
    """Vertices of ``subset`` whose column entry at ``i`` is non-zero, plus ``i``."""
    verts = _vertices(gcm, subset)
    return tuple(j for j in verts if j == i or gcm.a[j][i] != 0)


def one_star_convex_basepoints(
    gcm: GCM, subset: Optional[Iterable[int]] = None
) -> Subset:
    """Vertices from which every vertex is reachable along weight-one edges.

    A step ``u -> v`` is allowed when ``w(u, v) = 1``, i.e. ``a_uv = -1``.  The
    diagram restricted to ``subset`` is 1-star-convex iff this returns a
    non-empty tuple.
    """
    verts = _vertices(gcm, subset)
    vset = set(verts)
    out = []
    for start in verts:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in vset:
                if v not in seen and gcm.a[u][v] == -1:
                    seen.add(v)
                    queue.append(v)
        if seen == vset:
            out.append(start)
    return tuple(out)


def leaf_deletion_basepoint(
    gcm: GCM, subset: Optional[Iterable[int]] = None
) -> Optional[int]:
    """Repeatedly delete a leaf ``j`` with neighbour ``i`` when ``w(i, j) = 1``.

    Returns the single surviving vertex, or None when the procedure gets stuck
    (some leaf remains but every leaf has ``w(neighbour, leaf) > 1``) or the
    subset is empty/disconnected at the start.  Deletion order is the smallest
    deletable leaf first; the surviving vertex does not depend on the order.
    """
    verts = set(_vertices(gcm, subset))
    if not verts or len(connected_components(gcm, verts)) != 1:
        return None
    while len(verts) > 1:
        deletable = None
        for j in sorted(verts):
            nbs = gcm.neighbors(j, verts)
            if len(nbs) == 1 and gcm.a[nbs[0]][j] == -1:
                deletable = j
                break
        if deletable is None:
            return None
        verts.remove(deletable)
    return next(iter(verts))


@dataclass(frozen=True)
class StandardType:
    """A diagram shape from the standard families, e.g. ``A_n`` or ``C_n``.

    ``special`` is the distinguished vertex where one exists: the short end of
    a C/G diagram, the branch vertex of a D/E diagram, None for A.
    """

    family: str
    rank: int
    special: Optional[int] = None


def _path_order(gcm: GCM, verts: Subset) -> Optional[list[int]]:
    """Vertices of a path graph in end-to-end order, else None."""
    if len(verts) == 1:
        return [verts[0]]
    deg = {v: len(gcm.neighbors(v, verts)) for v in verts}
    ends = [v for v in verts if deg[v] == 1]
    if len(ends) != 2 or any(deg[v] > 2 for v in verts):
        return None
    if len(connected_components(gcm, verts)) != 1:
        return None
    order = [min(ends)]
    prev = None
    while True:
        nxt = [v for v in gcm.neighbors(order[-1], verts) if v != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    return order if len(order) == len(verts) else None


def standard_type(
    gcm: GCM, subset: Optional[Iterable[int]] = None
) -> Optional[StandardType]:
    """Recognize the shape of a connected subdiagram, or None.

    Families: A (simply-laced segment), C/G (segment with a (1,2)/(1,3) edge
    at one end, weight-1 side pointing out of the special vertex), F (leaf
    attached to the special vertex of a C diagram), D (two leaves sharing a
    neighbour, rest a segment), E (unique branch vertex, removing one vertex
    leaves a D diagram).
    """
    verts = _vertices(gcm, subset)
    if not verts or len(connected_components(gcm, verts)) != 1:
        return None
    n = len(verts)

    def weight(i: int, j: int) -> int:
        return -gcm.a[i][j]

    order = _path_order(gcm, verts)
    if order is not None:
        pairs = [
            (weight(order[t], order[t + 1]), weight(order[t + 1], order[t]))
            for t in range(n - 1)
        ]
        if all(p == (1, 1) for p in pairs):
            return StandardType("A", n)
        if n >= 2:
            for ordered in (order, order[::-1]):
                w01 = (weight(ordered[0], ordered[1]), weight(ordered[1], ordered[0]))
                rest = [
                    (weight(ordered[t], ordered[t + 1]), weight(ordered[t + 1], ordered[t]))
                    for t in range(1, n - 1)
                ]
                if all(p == (1, 1) for p in rest):
                    if w01 == (1, 2):
                        return StandardType("C", n, special=ordered[0])
                    if w01 == (1, 3):
                        return StandardType("G", n, special=ordered[0])
        if n >= 4:
            # F: a weight-1 leaf attached to the special vertex of a C diagram.
            for ordered in (order, order[::-1]):
                pre = (weight(ordered[0], ordered[1]), weight(ordered[1], ordered[0]))
                mid = (weight(ordered[1], ordered[2]), weight(ordered[2], ordered[1]))
                rest = [
                    (weight(ordered[t], ordered[t + 1]), weight(ordered[t + 1], ordered[t]))
                    for t in range(2, n - 1)
                ]
                if pre == (1, 1) and mid == (1, 2) and all(p == (1, 1) for p in rest):
                    return StandardType("F", n, special=ordered[1])
        return None

    # Branched shapes are all simply laced.
    for i in verts:
        for j in verts:
            if i != j and gcm.a[i][j] not in (0, -1):
                return None
    if not is_tree(gcm, verts):
        return None
    branch = [v for v in verts if len(gcm.neighbors(v, verts)) == 3]
    if len(branch) != 1 or any(len(gcm.neighbors(v, verts)) > 3 for v in verts):
        return None
    b = branch[0]
    if n >= 4:
        leaves_at_b = [
            v for v in gcm.neighbors(b, verts) if len(gcm.neighbors(v, verts)) == 1
        ]
        # D4 has three leaves at the branch; dropping any two leaves the same
        # two-vertex segment, so only the first two matter.
        if len(leaves_at_b) >= 2:
            rest = tuple(v for v in verts if v not in leaves_at_b[:2])
            tail = standard_type(gcm, rest)
            if tail is not None and tail.family == "A":
                rest_ends = [v for v in rest if len(gcm.neighbors(v, rest)) <= 1]
                if b in rest_ends:
                    return StandardType("D", n, special=b)
    if n >= 6:
        for v in verts:
            if len(gcm.neighbors(v, verts)) != 1:
                continue
            sub = standard_type(gcm, tuple(x for x in verts if x != v))
            if sub is not None and sub.family == "D" and sub.rank == n - 1:
                return StandardType("E", n, special=b)
    return None


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_finite_type(gcm: GCM, subset: Optional[Iterable[int]] = None) -> bool:
    """True when every principal minor over ``subset`` is positive.

    The empty subset counts as finite (trivial group).
    """
    verts = _vertices(gcm, subset)
    for comp in connected_components(gcm, verts):
        for size in range(1, len(comp) + 1):
            for sub in combinations(comp, size):
                minor = [[gcm.a[i][j] for j in sub] for i in sub]
                if det_int(minor) <= 0:
                    return False
    return True
