"""Weyl group elements as reduced words with canonical keys.

An element is identified by the image of the regular base coweight (the one
with every simple pairing equal to 1); two elements agree iff their keys do.
Words compose left to right with the rightmost letter acting first, so the
word of ``u * v`` is ``u.word + v.word``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from qroots import kernel
from qroots.cartan import GCM

__all__ = ["WeylElement", "Weyl"]


@dataclass(frozen=True, eq=False)
class WeylElement:
    word: tuple[int, ...]
    key: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __len__(self) -> int:
        return len(self.word)

    def __repr__(self) -> str:
        return f"WeylElement({list(self.word)})"


class Weyl:
    """The Weyl group of a Cartan matrix."""

    def __init__(self, gcm: GCM):
        self.gcm = gcm
        self.a = gcm.a
        self.n = gcm.n
        self._id_key = (0,) * self.n

    def element(self, word: Sequence[int]) -> WeylElement:
        red = kernel.reduce_word(self.a, tuple(word))
        return WeylElement(red, kernel.word_key(self.a, red))

    def identity(self) -> WeylElement:
        return WeylElement((), self._id_key)

    def simple(self, i: int) -> WeylElement:
        return self.element((i,))

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self.element(u.word + v.word)

    def invert(self, u: WeylElement) -> WeylElement:
        word = tuple(reversed(u.word))
        return WeylElement(word, kernel.word_key(self.a, word))

    def length(self, u: WeylElement) -> int:
        return len(u.word)

    def act_on_root(self, u: WeylElement, m: Sequence[int]) -> tuple[int, ...]:
        return kernel.act_on_root(self.a, u.word, m)

    def act_on_coroot(self, u: WeylElement, nvec: Sequence[int]) -> tuple[int, ...]:
        return kernel.act_on_coroot(self.a, u.word, nvec)

    def act_on_coweight(self, u: WeylElement, lam: Sequence[int]) -> tuple[int, ...]:
        return kernel.act_on_coweight(self.a, u.word, lam)

    def _simple_image_negative(self, word: tuple[int, ...], i: int) -> bool:
        img = kernel.act_on_root(self.a, word, tuple(1 if l == i else 0 for l in range(self.n)))
        return any(x < 0 for x in img)

    def descends_left(self, i: int, u: WeylElement) -> bool:
        """True when ``r_i u`` is shorter, i.e. u^-1(alpha_i) is negative."""
        return self._simple_image_negative(tuple(reversed(u.word)), i)

    def descends_right(self, u: WeylElement, i: int) -> bool:
        """True when ``u r_i`` is shorter, i.e. u(alpha_i) is negative."""
        return self._simple_image_negative(u.word, i)

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        """Bruhat order test by the one-branch subword lift along ``w.word``."""
        if len(u.word) > len(w.word):
            return False
        v = u
        remaining = len(w.word)
        for i in w.word:
            if len(v.word) > remaining:
                return False
            if self.descends_left(i, v):
                v = self.element((i,) + v.word)
            remaining -= 1
        return not v.word

    def enumerate_by_length(
        self, lmax: int, cap: int = 200_000
    ) -> list[list[WeylElement]]:
        """All elements of length <= lmax, grouped by length, key-sorted.

        Raises RuntimeError when more than ``cap`` elements appear; callers
        exploring groups of unknown growth should catch it and lower lmax.
        """
        levels: list[list[WeylElement]] = [[self.identity()]]
        total = 1
        for _l in range(lmax):
            nxt: dict[tuple[int, ...], WeylElement] = {}
            for u in levels[-1]:
                for i in range(self.n):
                    if not self.descends_right(u, i):
                        word = u.word + (i,)
                        key = kernel.word_key(self.a, word)
                        if key not in nxt:
                            nxt[key] = WeylElement(word, key)
            total += len(nxt)
            if total > cap:
                raise RuntimeError(
                    f"Weyl enumeration exceeded {cap} elements at length {_l + 1}"
                )
            levels.append([nxt[k] for k in sorted(nxt)])
            if not nxt:
                break
        return levels

    def covers_in_weyl(
        self, w: WeylElement, cap: int = 200_000
    ) -> list[WeylElement]:
        """Bruhat covers of ``w``: the full next length level, filtered."""
        levels = self.enumerate_by_length(len(w.word) + 1, cap)
        if len(levels) <= len(w.word) + 1:
            return []
        return [y for y in levels[len(w.word) + 1] if self.bruhat_leq(w, y)]

    def cocovers_in_weyl(self, w: WeylElement) -> list[WeylElement]:
        """Bruhat co-covers via single-letter deletions of one reduced word."""
        out: dict[tuple[int, ...], WeylElement] = {}
        for t in range(len(w.word)):
            y = self.element(w.word[:t] + w.word[t + 1 :])
            if len(y.word) == len(w.word) - 1:
                out[y.key] = y
        return [out[k] for k in sorted(out)]

    def min_coset_rep(
        self, w: WeylElement, J: Iterable[int]
    ) -> tuple[WeylElement, tuple[int, ...]]:
        """Split ``w = rep * tail`` with rep shortest in ``w W_J``, tail in W_J."""
        Jset = tuple(J)
        cur = w
        tail: list[int] = []
        while True:
            i = next((i for i in Jset if self.descends_right(cur, i)), None)
            if i is None:
                return cur, tuple(tail)
            cur = self.element(cur.word + (i,))
            tail.insert(0, i)

    def reflection_root(self, t: WeylElement) -> Optional[tuple[int, ...]]:
        """Root coordinates of the positive root of a reflection, else None."""
        if len(t.word) % 2 == 0:
            return None
        for m, _nv in kernel.inversion_pairs(self.a, t.word):
            if kernel.act_on_root(self.a, t.word, m) == tuple(-x for x in m):
                return m
        return None
