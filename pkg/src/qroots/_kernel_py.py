"""Pure-Python reference kernels.

Every function takes the Cartan matrix as a tuple of tuples of ints and works
with exact integer arithmetic.  Words follow the composition convention: the
list ``[j1, ..., jL]`` denotes ``r_j1 ∘ ... ∘ r_jL`` (rightmost letter acts
first).  Expression words carry their seed as the last letter: the word
``[t1, ..., tk, s]`` denotes the root ``r_t1 ∘ ... ∘ r_tk (alpha_s)``.

The compiled twin in ``_kernel.pyx`` must agree bit for bit; see
``tests/test_kernel_parity.py``.
"""

from __future__ import annotations

from typing import Optional, Sequence

IMPLEMENTATION = "python"

Matrix = tuple[tuple[int, ...], ...]
Vec = tuple[int, ...]
Word = tuple[int, ...]


def reduce_word(a: Matrix, word: Sequence[int]) -> Word:
    """Reduced word for the element spelled by ``word``.

    Tracks the matrix M with column i holding the root coordinates of
    w(alpha_i), then strips the smallest right descent until the identity.
    """
    n = len(a)
    m = [[1 if k == i else 0 for i in range(n)] for k in range(n)]
    for t in reversed(word):
        row_a = a[t]
        new_row = [
            m[t][i] - sum(row_a[l] * m[l][i] for l in range(n)) for i in range(n)
        ]
        m[t] = new_row
    out: list[int] = []
    identity = [[1 if k == i else 0 for i in range(n)] for k in range(n)]
    while m != identity:
        desc = None
        for i in range(n):
            if all(m[k][i] <= 0 for k in range(n)):
                desc = i
                break
        if desc is None:  # cannot happen for a genuine reflection word
            raise ValueError("no descent found on a non-identity element")
        out.append(desc)
        row_a = a[desc]
        for k in range(n):
            mk = m[k]
            pivot = mk[desc]
            if pivot:
                for l in range(n):
                    mk[l] -= pivot * row_a[l]
    return tuple(reversed(out))


def word_key(a: Matrix, word: Sequence[int]) -> Vec:
    """Image of the regular base coweight under ``word``; identity maps to 0.

    The base coweight pairs to 1 with every simple root and lies on no
    reflection wall, so this key is a faithful element identifier.
    """
    n = len(a)
    c = [0] * n
    for t in reversed(word):
        p = 1 + sum(a[k][t] * c[k] for k in range(n))
        c[t] -= p
    return tuple(c)


def act_on_root(a: Matrix, word: Sequence[int], m: Sequence[int]) -> Vec:
    n = len(a)
    cur = list(m)
    for t in reversed(word):
        row = a[t]
        d = sum(row[l] * cur[l] for l in range(n))
        cur[t] -= d
    return tuple(cur)


def act_on_coroot(a: Matrix, word: Sequence[int], nvec: Sequence[int]) -> Vec:
    n = len(a)
    cur = list(nvec)
    for t in reversed(word):
        c = sum(cur[k] * a[k][t] for k in range(n))
        cur[t] -= c
    return tuple(cur)


def act_on_coweight(a: Matrix, word: Sequence[int], lam: Sequence[int]) -> Vec:
    """Doubled-coordinate coweight action (length 2n vectors)."""
    n = len(a)
    cur = list(lam)
    for t in reversed(word):
        p = sum(cur[k] * a[k][t] for k in range(n)) + cur[n + t]
        cur[t] -= p
    return tuple(cur)


def inversion_pairs(a: Matrix, word: Sequence[int]) -> tuple[tuple[Vec, Vec], ...]:
    """Inversion roots of a reduced word, as (root, coroot) coordinate pairs.

    Entry k (0-based) is ``r_jL ... r_j(k+2) (alpha_j(k+1))``.
    """
    n = len(a)
    acc: list[tuple[list[int], list[int]]] = []
    for t in word:
        row = a[t]
        for m, nv in acc:
            d = sum(row[l] * m[l] for l in range(n))
            m[t] -= d
            c = sum(nv[k] * a[k][t] for k in range(n))
            nv[t] -= c
        e_m = [1 if l == t else 0 for l in range(n)]
        acc.append((e_m, list(e_m)))
    return tuple((tuple(m), tuple(nv)) for m, nv in acc)


def descend_to_simple(a: Matrix, m: Sequence[int]) -> Optional[tuple[Word, int]]:
    """Greedy height descent from a positive root candidate to a simple root.

    Returns ``(word, seed)`` with ``root = word applied to alpha_seed``, or
    None when the input is not a positive real root (mixed signs, descent
    leaves the positive cone, or no descent direction exists).
    """
    n = len(a)
    cur = list(m)
    if any(x < 0 for x in cur) or all(x == 0 for x in cur):
        return None
    word: list[int] = []
    while True:
        nz = [k for k in range(n) if cur[k] != 0]
        if len(nz) == 1 and cur[nz[0]] == 1:
            return tuple(word), nz[0]
        step = None
        for i in range(n):
            d = sum(a[i][l] * cur[l] for l in range(n))
            if d > 0:
                step = (i, d)
                break
        if step is None:
            return None
        i, d = step
        cur[i] -= d
        if any(x < 0 for x in cur):
            return None
        word.append(i)


def real_roots_upto(a: Matrix, hmax: int) -> list[tuple[Vec, Vec, Word]]:
    """Positive real roots of coroot height at most ``hmax``.

    Returns ``(root, coroot, expression)`` triples sorted by (height, coroot);
    the expression word has its seed as the last letter.  Complete because a
    non-simple positive real root always has a simple reflection lowering its
    coroot height, so upward steps from the simples reach everything.
    """
    n = len(a)
    buckets: dict[int, list[tuple[Vec, Vec, Word]]] = {1: []}
    for i in range(n):
        e = tuple(1 if l == i else 0 for l in range(n))
        buckets[1].append((e, e, (i,)))
    seen: set[Vec] = set()
    out: list[tuple[Vec, Vec, Word]] = []
    for h in range(1, hmax + 1):
        for m, nv, word in sorted(buckets.pop(h, [])):
            if nv in seen:
                continue
            seen.add(nv)
            out.append((m, nv, word))
            for i in range(n):
                c = sum(nv[k] * a[k][i] for k in range(n))
                if c < 0 and h - c <= hmax:
                    d = sum(a[i][l] * m[l] for l in range(n))
                    m2 = list(m)
                    m2[i] -= d
                    nv2 = list(nv)
                    nv2[i] -= c
                    buckets.setdefault(h - c, []).append(
                        (tuple(m2), tuple(nv2), (i,) + word)
                    )
    return out


def quantum_closure(
    a: Matrix, coeff_cap: int, count_cap: int
) -> list[tuple[Vec, Word]]:
    """Quantum roots by upward closure from the simple roots.

    Level h+1 applies ``r_i`` to level-h roots with coroot pairing -1 against
    ``alpha_i`` (the step that adds ``e_i`` to the coroot).  Terminates when a
    level is empty; the caps are hard bounds that hold for every quantum set
    and guard against a wrong closure step.
    """
    n = len(a)
    level: dict[Vec, Word] = {}
    for i in range(n):
        level[tuple(1 if l == i else 0 for l in range(n))] = (i,)
    out: list[tuple[Vec, Word]] = sorted(level.items())
    while level:
        nxt: dict[Vec, Word] = {}
        for nv, word in sorted(level.items()):
            for i in range(n):
                c = sum(nv[k] * a[k][i] for k in range(n))
                if c == -1:
                    nv2 = list(nv)
                    nv2[i] += 1
                    assert nv2[i] <= coeff_cap, (
                        f"coroot coefficient {nv2[i]} exceeds bound {coeff_cap}"
                    )
                    key = tuple(nv2)
                    if key not in nxt:
                        nxt[key] = (i,) + word
        level = nxt
        out.extend(sorted(nxt.items()))
        assert len(out) <= count_cap, (
            f"quantum root count {len(out)} exceeds bound {count_cap}"
        )
    return out


def box_closure(a: Matrix, target: Sequence[int]) -> Optional[Word]:
    """Closure restricted to coroots bounded by ``target`` componentwise.

    Returns an expression word for the root with coroot ``target`` when the
    closure reaches it, else None.  Restricting to the box loses nothing: a
    quantum root below the target descends inside the box.
    """
    n = len(a)
    goal = tuple(target)
    level: dict[Vec, Word] = {}
    for i in range(n):
        if goal[i] >= 1:
            e = tuple(1 if l == i else 0 for l in range(n))
            if e == goal:
                return (i,)
            level[e] = (i,)
    while level:
        nxt: dict[Vec, Word] = {}
        for nv, word in sorted(level.items()):
            for i in range(n):
                if nv[i] + 1 > goal[i]:
                    continue
                c = sum(nv[k] * a[k][i] for k in range(n))
                if c == -1:
                    nv2 = list(nv)
                    nv2[i] += 1
                    key = tuple(nv2)
                    if key == goal:
                        return (i,) + word
                    if key not in nxt:
                        nxt[key] = (i,) + word
        level = nxt
    return None


def certify_pairings(
    a: Matrix, p: Sequence[int], ht: int, budget: int
) -> Optional[tuple[Vec, int, Word]]:
    """Drive a pairing vector to dominance by smallest-index descents.

    ``p`` holds the simple-root pairings of a coweight, ``ht`` its height.
    Returns ``(final_pairings, final_height, word)`` where the recorded word
    maps the dominant representative back to the input coweight, or None when
    ``budget`` steps do not suffice.
    """
    n = len(a)
    cur = list(p)
    word: list[int] = []
    while True:
        i = next((k for k in range(n) if cur[k] < 0), None)
        if i is None:
            return tuple(cur), ht, tuple(word)
        if len(word) >= budget:
            return None
        pi = cur[i]
        ht -= pi
        row = a[i]
        for j in range(n):
            cur[j] -= pi * row[j]
        word.append(i)
