"""Doubled root datum: coweights, pairings, and dominance certificates.

For an n-vertex Cartan matrix the coweight lattice is Z^(2n).  The simple
coroot ``alpha_i^v`` is the i-th unit vector of the first block; the simple
root ``alpha_j`` pairs with a coweight ``lam`` as::

    <lam, alpha_j> = sum_k lam[k] * a[k][j]  +  lam[n + j]

so the second block realizes arbitrary prescribed pairings (a translation
coweight with pairings p is ``(0, ..., 0, *p)``).  The height functional is
``rho = (1, ..., 1, 0, ..., 0)`` by default; any vector pairing to 1 with
every simple coroot is accepted as an alternative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from qroots import kernel
from qroots.cartan import GCM, is_finite_type

Coweight = tuple[int, ...]

__all__ = [
    "BudgetExceeded",
    "ConeCertificate",
    "RootDatum",
    "doubled_datum",
]


class BudgetExceeded(RuntimeError):
    """A dominance walk did not finish within its step budget."""


@dataclass(frozen=True)
class ConeCertificate:
    """Certifies that a coweight lies in the Tits cone.

    ``word`` spells the minimal-length element carrying ``dominant`` to the
    certified coweight (rightmost letter first); ``pairings`` are the simple
    pairings of ``dominant``, all non-negative.
    """

    dominant: Coweight
    word: tuple[int, ...]
    pairings: tuple[int, ...]


@dataclass(frozen=True)
class RootDatum:
    gcm: GCM
    rho: Coweight = field(default=())

    def __post_init__(self) -> None:
        n = self.gcm.n
        if not self.rho:
            object.__setattr__(self, "rho", (1,) * n + (0,) * n)
        if len(self.rho) != 2 * n:
            raise ValueError(f"rho must have length {2 * n}")
        for i in range(n):
            if self.rho[i] != 1:
                raise ValueError("rho must pair to 1 with every simple coroot")

    @property
    def n(self) -> int:
        return self.gcm.n

    @property
    def a(self) -> tuple[tuple[int, ...], ...]:
        return self.gcm.a

    def with_rho(self, rho: Sequence[int]) -> "RootDatum":
        return RootDatum(self.gcm, tuple(rho))

    def zero(self) -> Coweight:
        return (0,) * (2 * self.n)

    def simple_coroot(self, i: int) -> Coweight:
        n = self.n
        return tuple(1 if k == i else 0 for k in range(n)) + (0,) * n

    def coroot_coweight(self, nvec: Sequence[int]) -> Coweight:
        """The coweight of a coroot given in simple-coroot coordinates."""
        return tuple(nvec) + (0,) * self.n

    def coweight_from_pairings(self, p: Sequence[int]) -> Coweight:
        if len(p) != self.n:
            raise ValueError(f"expected {self.n} pairings")
        return (0,) * self.n + tuple(int(x) for x in p)

    def add(self, lam: Coweight, mu: Coweight) -> Coweight:
        return tuple(x + y for x, y in zip(lam, mu))

    def sub(self, lam: Coweight, mu: Coweight) -> Coweight:
        return tuple(x - y for x, y in zip(lam, mu))

    def pairing(self, lam: Coweight, j: int) -> int:
        n = self.n
        return sum(lam[k] * self.a[k][j] for k in range(n)) + lam[n + j]

    def pairings(self, lam: Coweight) -> tuple[int, ...]:
        return tuple(self.pairing(lam, j) for j in range(self.n))

    def reflect_coweight(self, i: int, lam: Coweight) -> Coweight:
        p = self.pairing(lam, i)
        out = list(lam)
        out[i] -= p
        return tuple(out)

    def height(self, lam: Coweight) -> int:
        return sum(x * r for x, r in zip(lam, self.rho))

    def is_dominant(self, lam: Coweight) -> bool:
        return all(self.pairing(lam, j) >= 0 for j in range(self.n))

    def default_budget(self, lam: Coweight) -> int:
        return 10 * (abs(self.height(lam)) + 16)

    def certify_in_tits_cone(
        self, lam: Coweight, budget: Optional[int] = None
    ) -> ConeCertificate:
        """Walk ``lam`` to its dominant representative.

        Each step reflects at the smallest simple root pairing negatively, so
        the height strictly increases; for a coweight in the Tits cone the
        walk ends at the unique dominant representative and the recorded word
        is a reduced word for the minimal element mapping it back.  Raises
        BudgetExceeded after ``budget`` steps.
        """
        if budget is None:
            budget = self.default_budget(lam)
        res = kernel.certify_pairings(
            self.a, self.pairings(lam), self.height(lam), budget
        )
        if res is None:
            raise BudgetExceeded(
                f"no dominant representative within {budget} reflection steps"
            )
        pair_final, _ht, word = res
        dominant = kernel.act_on_coweight(self.a, tuple(reversed(word)), lam)
        return ConeCertificate(dominant, word, pair_final)

    def is_spherical(self, lam: Coweight, budget: Optional[int] = None) -> bool:
        """True when the stabilizer of ``lam`` is a finite Weyl group."""
        cert = self.certify_in_tits_cone(lam, budget)
        zeros = tuple(j for j, p in enumerate(cert.pairings) if p == 0)
        return is_finite_type(self.gcm, zeros)

    def is_in_Y_in(self, lam: Coweight) -> bool:
        """True when ``lam`` pairs to zero with every simple root."""
        return all(self.pairing(lam, j) == 0 for j in range(self.n))

    def parse_coweight(self, obj: object) -> Coweight:
        """Read a coweight from its JSON form.

        Accepts ``{"doubled": [2n ints]}`` or ``{"pairings": [n ints]}``.
        """
        if isinstance(obj, dict) and "doubled" in obj:
            vec = obj["doubled"]
            if not isinstance(vec, list) or len(vec) != 2 * self.n:
                raise ValueError(f'"doubled" must be a list of {2 * self.n} ints')
            return tuple(int(x) for x in vec)
        if isinstance(obj, dict) and "pairings" in obj:
            vec = obj["pairings"]
            if not isinstance(vec, list) or len(vec) != self.n:
                raise ValueError(f'"pairings" must be a list of {self.n} ints')
            return self.coweight_from_pairings(vec)
        raise ValueError('coweight must be {"doubled": [...]} or {"pairings": [...]}')


def doubled_datum(gcm: GCM, rho: Optional[Sequence[int]] = None) -> RootDatum:
    """The doubled root datum of a Cartan matrix (default height functional)."""
    return RootDatum(gcm, tuple(rho) if rho is not None else ())
