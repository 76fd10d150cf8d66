"""Real roots: reflections, expressions, inversion sets, enumeration.

A real root is stored with both coordinate systems at once: ``m`` in the
simple-root basis and ``nvec`` (its coroot) in the simple-coroot basis.  Both
blocks carry the same sign.  Expression words keep their seed as the last
letter: ``(t1, ..., tk, s)`` spells ``r_t1 ... r_tk (alpha_s)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from qroots import kernel
from qroots.datum import RootDatum
from qroots.weyl import WeylElement

__all__ = ["NotReachable", "RealRoot", "Roots"]


class NotReachable(ValueError):
    """The given coordinates are not those of a real root."""


@dataclass(frozen=True)
class RealRoot:
    m: tuple[int, ...]
    nvec: tuple[int, ...]

    @property
    def positive(self) -> bool:
        return any(x > 0 for x in self.m)

    @property
    def coroot_height(self) -> int:
        return sum(self.nvec)

    @property
    def root_height(self) -> int:
        return sum(self.m)

    def negate(self) -> "RealRoot":
        return RealRoot(tuple(-x for x in self.m), tuple(-x for x in self.nvec))


class Roots:
    """Real-root operations for a root datum."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.a = datum.a
        self.n = datum.n

    def simple_root(self, i: int) -> RealRoot:
        e = tuple(1 if l == i else 0 for l in range(self.n))
        return RealRoot(e, e)

    def reflect(self, i: int, beta: RealRoot) -> RealRoot:
        m = kernel.act_on_root(self.a, (i,), beta.m)
        nv = kernel.act_on_coroot(self.a, (i,), beta.nvec)
        return RealRoot(m, nv)

    def from_expression(self, word: Sequence[int]) -> RealRoot:
        seed = word[-1]
        prefix = tuple(word[:-1])
        e = tuple(1 if l == seed else 0 for l in range(self.n))
        return RealRoot(
            kernel.act_on_root(self.a, prefix, e),
            kernel.act_on_coroot(self.a, prefix, e),
        )

    def coroot_pairing(self, beta: RealRoot, gamma_m: Sequence[int]) -> int:
        """``<beta^v, gamma>`` from the coroot of beta and root coords of gamma."""
        return sum(
            beta.nvec[k] * self.a[k][l] * gamma_m[l]
            for k in range(self.n)
            for l in range(self.n)
            if self.a[k][l] and beta.nvec[k] and gamma_m[l]
        )

    def simple_pairing(self, beta: RealRoot, i: int) -> int:
        """``<beta^v, alpha_i>``."""
        return sum(beta.nvec[k] * self.a[k][i] for k in range(self.n))

    def expression(self, beta: RealRoot) -> tuple[int, ...]:
        """An expression word for ``|beta|``, by greedy height descent.

        Expression words always spell the positive root of the pair.
        """
        m = beta.m if beta.positive else tuple(-x for x in beta.m)
        res = kernel.descend_to_simple(self.a, m)
        if res is None:
            raise NotReachable(f"{beta.m} is not a real root")
        word, seed = res
        return word + (seed,)

    def validate(self, m: Sequence[int]) -> RealRoot:
        """Check root coordinates and recover the coroot, or NotReachable."""
        mm = tuple(int(x) for x in m)
        if all(x <= 0 for x in mm) and any(x < 0 for x in mm):
            pos = self.validate(tuple(-x for x in mm))
            return pos.negate()
        res = kernel.descend_to_simple(self.a, mm)
        if res is None:
            raise NotReachable(f"{mm} is not a real root")
        word, seed = res
        beta = self.from_expression(word + (seed,))
        return beta

    def minimal_expression(self, beta: RealRoot) -> tuple[int, ...]:
        """Shortest expression word, by breadth-first search from the root.

        The search applies every simple reflection and stops when a simple
        root is dequeued, so the first hit is minimal.  Intended for small
        examples; the greedy ``expression`` serves everything else.
        """
        target = beta.m if beta.positive else tuple(-x for x in beta.m)
        start = tuple(target)
        seen = {start}
        queue: deque[tuple[tuple[int, ...], tuple[int, ...]]] = deque([(start, ())])
        while queue:
            m, path = queue.popleft()
            nz = [k for k in range(self.n) if m[k] != 0]
            if len(nz) == 1 and m[nz[0]] == 1:
                return path + (nz[0],)
            for i in range(self.n):
                m2 = kernel.act_on_root(self.a, (i,), m)
                if m2 not in seen:
                    seen.add(m2)
                    queue.append((m2, path + (i,)))
        raise NotReachable(f"{beta.m} is not a real root")

    def reflection_word(self, beta: RealRoot) -> tuple[int, ...]:
        """Reduced word of the reflection at a (positive) real root."""
        expr = self.expression(beta)
        pal = expr[:-1] + (expr[-1],) + tuple(reversed(expr[:-1]))
        return kernel.reduce_word(self.a, pal)

    def inversion_set(self, w: WeylElement) -> list[RealRoot]:
        """Roots sent negative by ``w``; requires a reduced word."""
        return [RealRoot(m, nv) for m, nv in kernel.inversion_pairs(self.a, w.word)]

    def enumerate_real_roots(
        self, max_coroot_height: int
    ) -> list[tuple[RealRoot, tuple[int, ...]]]:
        """Positive real roots of coroot height <= bound, with expressions."""
        return [
            (RealRoot(m, nv), word)
            for m, nv, word in kernel.real_roots_upto(self.a, max_coroot_height)
        ]
