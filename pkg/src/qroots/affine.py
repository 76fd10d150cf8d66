"""The Weyl semigroup ``W+ = { pi^lam w : lam in the Tits cone }`` and its
affine Bruhat order.

Elements are written ``pi^lam w`` with ``lam`` a doubled coweight and ``w`` a
Weyl element; the length is

    l(pi^lam w) = 2 ht(lam++) + l(v^-1 w) - l(v),

where ``lam++`` is the dominant representative of ``lam`` and ``v`` the
minimal element with ``v(lam++) = lam``.  A reflection ``s_(gamma,n)``
descends an element exactly when the element's inverse sends the affine root
``(gamma, n)`` to a negative one; covers are descent-linked pairs whose
lengths differ by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from qroots import kernel
from qroots.cartan import is_finite_type
from qroots.datum import BudgetExceeded, ConeCertificate, Coweight, RootDatum
from qroots.quantum import enumerate_quantum_roots, is_quantum_by_definition
from qroots.roots import RealRoot, Roots
from qroots.weyl import Weyl, WeylElement

__all__ = [
    "NotSupported",
    "PreconditionFailed",
    "HypothesisNotMet",
    "AffineElement",
    "Affine",
]


class NotSupported(RuntimeError):
    """Co-cover enumeration outside the supported coweight classes."""


class PreconditionFailed(ValueError):
    """An explicit-cover construction was called off its hypotheses."""


class HypothesisNotMet(ValueError):
    """The witness-family construction needs a different Cartan matrix."""


@dataclass(frozen=True, eq=False)
class AffineElement:
    """``pi^coweight w`` with its cone certificate and length precomputed."""

    coweight: Coweight
    w: WeylElement
    cert: ConeCertificate
    length: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.coweight == other.coweight and self.w == other.w

    def __hash__(self) -> int:
        return hash((self.coweight, self.w.key))

    def __repr__(self) -> str:
        return f"AffineElement(coweight={self.coweight}, word={self.w.word})"


class Affine:
    """Order operations on ``W+`` for a fixed root datum."""

    def __init__(self, datum: RootDatum, budget: Optional[int] = None):
        self.datum = datum
        self.weyl = Weyl(datum.gcm)
        self.roots = Roots(datum)
        self.budget = budget
        self._finite = is_finite_type(datum.gcm, tuple(range(datum.n)))
        self._quantum: Optional[list[RealRoot]] = None
        self._pad: Optional[int] = None

    # --- construction -------------------------------------------------------

    def element(self, coweight: Sequence[int], word: Sequence[int] = ()) -> AffineElement:
        lam = tuple(int(x) for x in coweight)
        w = self.weyl.element(word)
        return self._make(lam, w)

    def _make(self, lam: Coweight, w: WeylElement) -> AffineElement:
        cert = self.datum.certify_in_tits_cone(lam, self.budget)
        v = self.weyl.element(cert.word)
        u = self.weyl.multiply(self.weyl.invert(v), w)
        length = 2 * self.datum.height(cert.dominant) + len(u.word) - len(cert.word)
        return AffineElement(lam, w, cert, length)

    def identity(self) -> AffineElement:
        return self.element(self.datum.zero())

    def translation(self, coweight: Sequence[int]) -> AffineElement:
        return self.element(coweight)

    def from_weyl(self, w: WeylElement) -> AffineElement:
        return self._make(self.datum.zero(), w)

    def multiply(self, x: AffineElement, y: AffineElement) -> AffineElement:
        lam = self.datum.add(
            x.coweight, self.weyl.act_on_coweight(x.w, y.coweight)
        )
        return self._make(lam, self.weyl.multiply(x.w, y.w))

    # --- affine roots and reflections --------------------------------------

    def act_on_affine_root(
        self, x: AffineElement, gamma: RealRoot, n: int
    ) -> tuple[RealRoot, int]:
        """``pi^lam w (gamma, n) = (w gamma, n + <lam, w gamma>)``."""
        m = self.weyl.act_on_root(x.w, gamma.m)
        nv = self.weyl.act_on_coroot(x.w, gamma.nvec)
        img = RealRoot(m, nv)
        return img, n + self._pair(x.coweight, m)

    def _pair(self, lam: Coweight, m: Sequence[int]) -> int:
        return sum(c * self.datum.pairing(lam, i) for i, c in enumerate(m) if c)

    @staticmethod
    def _normalize(gamma: RealRoot, n: int) -> tuple[RealRoot, int]:
        """The positive affine root of ``s_(gamma,n)``: ``n > 0``, or ``n = 0``
        with ``gamma`` positive."""
        if n < 0 or (n == 0 and not gamma.positive):
            return gamma.negate(), -n
        return gamma, n

    def descends(self, gamma: RealRoot, n: int, x: AffineElement) -> bool:
        """Is ``s_(gamma,n) x`` below ``x``?

        Holds exactly when ``x^-1 (gamma, n)`` is a negative affine root.
        """
        gamma, n = self._normalize(gamma, n)
        level = n - self._pair(x.coweight, gamma.m)
        if level != 0:
            return level < 0
        img = self.weyl.act_on_root(self.weyl.invert(x.w), gamma.m)
        return all(c <= 0 for c in img)

    def apply_reflection(
        self, gamma: RealRoot, n: int, x: AffineElement
    ) -> AffineElement:
        """``s_(gamma,n) x = pi^(n gamma^v + s_gamma lam) (s_gamma w)``."""
        pos = gamma if gamma.positive else gamma.negate()
        sword = self.roots.reflection_word(pos)
        lam = kernel.act_on_coweight(self.datum.a, sword, x.coweight)
        shift = self.datum.coroot_coweight(gamma.nvec)
        lam = tuple(c + n * s for c, s in zip(lam, shift))
        return self._make(lam, self.weyl.element(sword + x.w.word))

    def linking_reflection(
        self, x: AffineElement, y: AffineElement
    ) -> Optional[tuple[RealRoot, int]]:
        """The positive ``(gamma, n)`` with ``y = s_(gamma,n) x``, if one exists."""
        t = self.weyl.multiply(y.w, self.weyl.invert(x.w))
        m = self.weyl.reflection_root(t)
        if m is None:
            return None
        gamma = self.roots.validate(m)
        sword = self.roots.reflection_word(gamma)
        base = kernel.act_on_coweight(self.datum.a, sword, x.coweight)
        diff = [c - b for c, b in zip(y.coweight, base)]
        shift = self.datum.coroot_coweight(gamma.nvec)
        try:
            n = next(d // s for d, s in zip(diff, shift) if s)
        except StopIteration:
            return None
        if any(d != n * s for d, s in zip(diff, shift)):
            return None
        return gamma, n

    # --- candidate reflections for covers ----------------------------------

    def quantum_roots(self) -> list[RealRoot]:
        if self._quantum is None:
            self._quantum = [
                r.root for r in enumerate_quantum_roots(self.datum, classify=False)
            ]
        return self._quantum

    def _conjugate(self, v: WeylElement, gamma: RealRoot) -> RealRoot:
        m = self.weyl.act_on_root(v, gamma.m)
        nv = self.weyl.act_on_coroot(v, gamma.nvec)
        img = RealRoot(m, nv)
        return img if img.positive else img.negate()

    def _weyl_linked_roots(self, base: WeylElement) -> list[RealRoot]:
        out = []
        inv = self.weyl.invert(base)
        for other in self.weyl.covers_in_weyl(base) + self.weyl.cocovers_in_weyl(base):
            m = self.weyl.reflection_root(self.weyl.multiply(other, inv))
            assert m is not None
            out.append(self.roots.validate(m))
        return out

    def _candidates(self, x: AffineElement) -> set[tuple[RealRoot, int]]:
        v = self.weyl.element(x.cert.word)
        u = self.weyl.multiply(self.weyl.invert(v), x.w)
        gammas: dict[tuple[int, ...], RealRoot] = {}

        def add(root: RealRoot) -> None:
            gammas.setdefault(root.m, root)

        for gamma in self._weyl_linked_roots(u):
            add(self._conjugate(v, gamma))
        for base in (v, x.w):
            for gamma in self._weyl_linked_roots(base):
                add(gamma)
        for beta in self.quantum_roots():
            add(beta)
            add(self._conjugate(v, beta))

        cands: set[tuple[RealRoot, int]] = set()
        for gamma in gammas.values():
            p = self._pair(x.coweight, gamma.m)
            for n in {0, 1, -1, p, p - 1, p + 1}:
                cands.add((gamma, n))
        return cands

    def _cocover_ball_pad(self) -> int:
        """How far a co-cover's minimal word can outgrow ours.

        The length identity ``l(v) = 2 ht(dominant) + l(v^-1 w) - l^a``
        bounds the growth: one co-cover step moves the dominant height by at
        most the largest quantum coroot height ``H``, the ``v^-1 w`` part by
        at most ``l(s_beta) <= 2H - 1`` plus two finite-stabiliser factors,
        and the length itself by one.
        """
        if self._pad is None:
            h = max(sum(b.nvec) for b in self.quantum_roots())
            s = 0
            for size in range(1, self.datum.n + 1):
                for sub in combinations(range(self.datum.n), size):
                    if not is_finite_type(self.datum.gcm, sub):
                        continue
                    w0 = self.weyl.identity()
                    while True:
                        j = next(
                            (
                                j
                                for j in sub
                                if not self.weyl.descends_right(w0, j)
                            ),
                            None,
                        )
                        if j is None:
                            break
                        w0 = self.weyl.element(w0.word + (j,))
                    s = max(s, len(w0.word))
            self._pad = 4 * h + 2 * s
        return self._pad

    def _spherical_ball_candidates(
        self, x: AffineElement
    ) -> set[tuple[RealRoot, int]]:
        """Conjugates ``|v'(beta)|`` over every reachable minimal word ``v'``."""
        radius = len(x.cert.word) + self._cocover_ball_pad()
        gammas: dict[tuple[int, ...], RealRoot] = {}
        for level in self.weyl.enumerate_by_length(radius):
            for v2 in level:
                for beta in self.quantum_roots():
                    gamma = self._conjugate(v2, beta)
                    gammas.setdefault(gamma.m, gamma)
        cands: set[tuple[RealRoot, int]] = set()
        for gamma in gammas.values():
            p = self._pair(x.coweight, gamma.m)
            for n in {0, 1, -1, p, p - 1, p + 1}:
                cands.add((gamma, n))
        return cands

    # --- covers and co-covers ----------------------------------------------

    @staticmethod
    def _sort_key(x: AffineElement):
        return (x.coweight, x.w.word)

    def covers(self, x: AffineElement) -> list[AffineElement]:
        """All ``y`` with ``x`` covered by ``y``."""
        if not self._finite and self.datum.is_in_Y_in(x.coweight):
            # A fixed coweight cannot move without leaving the Tits cone, so
            # the fibre over it is ordered exactly as the Weyl group.
            return [
                self._make(x.coweight, w2)
                for w2 in self.weyl.covers_in_weyl(x.w)
            ]
        out: dict[tuple[Coweight, tuple[int, ...]], AffineElement] = {}
        for gamma, n in self._candidates(x):
            y = self.apply_reflection(gamma, n, x)
            if y.length == x.length + 1 and self.descends(gamma, n, y):
                out[(y.coweight, y.w.key)] = y
        return sorted(out.values(), key=self._sort_key)

    def cocovers(
        self, x: AffineElement, length_bound: Optional[int] = None
    ) -> list[AffineElement]:
        """All ``z`` covered by ``x``.

        Complete for coweights with spherical stabilizer and for fixed
        coweights; otherwise only a bounded sweep is possible, so a
        ``length_bound`` on the reflection root height is required and the
        listing may be partial.
        """
        if not self._finite and self.datum.is_in_Y_in(x.coweight):
            return [
                self._make(x.coweight, w2)
                for w2 in self.weyl.cocovers_in_weyl(x.w)
            ]
        spherical = self.datum.is_spherical(x.coweight, self.budget)
        if not spherical and length_bound is None:
            raise NotSupported(
                "co-cover enumeration needs a spherical or fixed coweight; "
                "pass length_bound for a partial sweep"
            )
        cands = self._candidates(x)
        if spherical:
            cands |= self._spherical_ball_candidates(x)
        else:
            for gamma, _word in self.roots.enumerate_real_roots(length_bound):
                p = self._pair(x.coweight, gamma.m)
                for n in {0, 1, -1, p, p - 1, p + 1}:
                    cands.add((gamma, n))
        out: dict[tuple[Coweight, tuple[int, ...]], AffineElement] = {}
        for gamma, n in cands:
            if not self.descends(gamma, n, x):
                continue
            z = self.apply_reflection(gamma, n, x)
            if z.length == x.length - 1:
                out[(z.coweight, z.w.key)] = z
        return sorted(out.values(), key=self._sort_key)

    # --- order -------------------------------------------------------------

    def leq(self, x: AffineElement, y: AffineElement) -> bool:
        if x.length > y.length:
            return False
        if x.length == y.length:
            return x == y
        frontier = {x}
        for _ in range(y.length - x.length):
            nxt: set[AffineElement] = set()
            for z in frontier:
                for c in self.covers(z):
                    if c == y:
                        return True
                    if c.length < y.length:
                        nxt.add(c)
            frontier = nxt
            if not frontier:
                return False
        return False

    def interval(
        self, x: AffineElement, y: AffineElement
    ) -> tuple[list[AffineElement], list[tuple[AffineElement, AffineElement]]]:
        """Nodes and cover edges of ``[x, y]``; empty when ``x`` is not below ``y``."""
        if x.length > y.length:
            return [], []
        if x.length == y.length:
            return ([x], []) if x == y else ([], [])
        edges: set[tuple[AffineElement, AffineElement]] = set()
        frontier = {x}
        nodes = {x}
        for _ in range(y.length - x.length):
            nxt: set[AffineElement] = set()
            for z in frontier:
                for c in self.covers(z):
                    if c.length <= y.length:
                        edges.add((z, c))
                        nxt.add(c)
            frontier = nxt
            nodes |= frontier
        if y not in nodes:
            return [], []
        parents: dict[AffineElement, set[AffineElement]] = {}
        for z, c in edges:
            parents.setdefault(c, set()).add(z)
        keep = {y}
        stack = [y]
        while stack:
            cur = stack.pop()
            for z in parents.get(cur, ()):
                if z not in keep:
                    keep.add(z)
                    stack.append(z)
        kept_nodes = sorted(keep, key=lambda e: (e.length,) + self._sort_key(e))
        kept_edges = sorted(
            ((z, c) for z, c in edges if z in keep and c in keep),
            key=lambda p: (self._sort_key(p[0]), self._sort_key(p[1])),
        )
        return kept_nodes, kept_edges

    # --- explicit cover constructions --------------------------------------

    def _check_deep(self, lam: Coweight, beta: RealRoot) -> None:
        for i in range(self.datum.n):
            need = max(0, -self.roots.simple_pairing(beta, i))
            if self.datum.pairing(lam, i) <= need:
                raise PreconditionFailed(
                    f"coweight must pair above {need} with simple root "
                    f"{self.datum.gcm.labels[i]!r}"
                )

    def explicit_cover_up(
        self,
        variant: int,
        beta: RealRoot,
        lam: Coweight,
        v: WeylElement,
        w: WeylElement,
    ) -> tuple[AffineElement, AffineElement]:
        """A cover pair built from a quantum root ``beta``.

        Variant 1 needs ``l(s_beta w) = l(s_beta) + l(w)`` and returns
        ``pi^(v lam) v s_beta w  <.  pi^(v(lam + beta^v)) v w``; variant 2
        needs ``l(v s_beta) = l(v) + l(s_beta)`` and returns
        ``pi^(v lam) w  <.  pi^(v s_beta (lam + beta^v)) s_(v beta) w``.
        """
        if not is_quantum_by_definition(self.datum, beta):
            raise PreconditionFailed("beta is not a quantum root")
        self._check_deep(lam, beta)
        sbeta = self.weyl.element(self.roots.reflection_word(beta))
        lam_up = self.datum.add(lam, self.datum.coroot_coweight(beta.nvec))
        if variant == 1:
            sw = self.weyl.multiply(sbeta, w)
            if len(sw.word) != len(sbeta.word) + len(w.word):
                raise PreconditionFailed("length of s_beta w must be additive")
            lower = self._make(
                self.weyl.act_on_coweight(v, lam),
                self.weyl.multiply(v, sw),
            )
            upper = self._make(
                self.weyl.act_on_coweight(v, lam_up), self.weyl.multiply(v, w)
            )
        elif variant == 2:
            vs = self.weyl.multiply(v, sbeta)
            if len(vs.word) != len(v.word) + len(sbeta.word):
                raise PreconditionFailed("length of v s_beta must be additive")
            lower = self._make(self.weyl.act_on_coweight(v, lam), w)
            upper = self._make(
                self.weyl.act_on_coweight(vs, lam_up),
                self.weyl.multiply(
                    self.weyl.multiply(vs, self.weyl.invert(v)), w
                ),
            )
        else:
            raise ValueError(f"variant must be 1 or 2, got {variant}")
        self._assert_cover(lower, upper)
        return lower, upper

    def _assert_cover(self, lower: AffineElement, upper: AffineElement) -> None:
        if upper.length != lower.length + 1:
            raise RuntimeError(
                f"lengths {lower.length}, {upper.length} do not differ by one"
            )
        link = self.linking_reflection(lower, upper)
        if link is None or not self.descends(link[0], link[1], upper):
            raise RuntimeError("elements are not linked by a descending reflection")

    def cocover_witness_family(
        self, i: int, count: int = 10
    ) -> list[tuple[AffineElement, AffineElement]]:
        """Distinct co-covers of one translation, witnessing non-spherical blowup.

        Needs rank 3 with every opposite entry product at least 4; then
        ``pi^nu`` for ``nu`` pairing ``(3, 0, 0)`` at ``i`` has an infinite
        co-cover family indexed by the rank-2 subgroup away from ``i``.
        """
        n = self.datum.n
        if n != 3:
            raise HypothesisNotMet(f"rank must be 3, got {n}")
        if not 0 <= i < n:
            raise ValueError(f"vertex index {i} out of range")
        a = self.datum.a
        for p in range(3):
            for q in range(p + 1, 3):
                if a[p][q] * a[q][p] < 4:
                    raise HypothesisNotMet(
                        f"entry product at rows {self.datum.gcm.labels[p]!r}, "
                        f"{self.datum.gcm.labels[q]!r} must be at least 4"
                    )
        nu = self.datum.coweight_from_pairings(
            tuple(3 if j == i else 0 for j in range(n))
        )
        lam = self.datum.sub(nu, self.datum.simple_coroot(i))
        upper = self.translation(nu)
        j, k = (m for m in range(n) if m != i)
        out = []
        word: tuple[int, ...] = ()
        for t in range(count):
            first = (j, k)[t % 2]
            word = ((first,) + word) if t else ()
            w = self.weyl.element(word)
            lower = self._make(
                self.weyl.act_on_coweight(w, lam),
                self.weyl.element(word + (i,) + tuple(reversed(word))),
            )
            self._assert_cover(lower, upper)
            out.append((lower, upper))
        return out
