# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels, a bit-for-bit twin of ``_kernel_py``.

Loop indices are C integers; the coefficients stay Python ints because root
coordinates grow without bound in indefinite type.  Any change here must be
mirrored in ``_kernel_py.py`` and survive ``tests/test_kernel_parity.py``.
"""

IMPLEMENTATION = "c"


def reduce_word(a, word):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, k, l, t, desc
    cdef bint found
    cdef list m = [[1 if k == i else 0 for i in range(n)] for k in range(n)]
    cdef list row_a, new_row, mk
    cdef object s, pivot
    for t in reversed(word):
        row_a = list(a[t])
        new_row = []
        for i in range(n):
            s = m[t][i]
            for l in range(n):
                if row_a[l]:
                    s = s - row_a[l] * (<list> m[l])[i]
            new_row.append(s)
        m[t] = new_row
    out = []
    identity = [[1 if k == i else 0 for i in range(n)] for k in range(n)]
    while m != identity:
        desc = -1
        for i in range(n):
            found = True
            for k in range(n):
                if (<list> m[k])[i] > 0:
                    found = False
                    break
            if found:
                desc = i
                break
        if desc < 0:  # cannot happen for a genuine reflection word
            raise ValueError("no descent found on a non-identity element")
        out.append(desc)
        row_a = list(a[desc])
        for k in range(n):
            mk = <list> m[k]
            pivot = mk[desc]
            if pivot:
                for l in range(n):
                    mk[l] = mk[l] - pivot * row_a[l]
    out.reverse()
    return tuple(out)


def word_key(a, word):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k, t
    cdef list c = [0] * n
    cdef object p
    for t in reversed(word):
        p = 1
        for k in range(n):
            if c[k]:
                p = p + a[k][t] * c[k]
        c[t] = c[t] - p
    return tuple(c)


def act_on_root(a, word, m):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t l, t
    cdef list cur = list(m)
    cdef list row
    cdef object d
    for t in reversed(word):
        row = list(a[t])
        d = 0
        for l in range(n):
            if row[l] and cur[l]:
                d = d + row[l] * cur[l]
        cur[t] = cur[t] - d
    return tuple(cur)


def act_on_coroot(a, word, nvec):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k, t
    cdef list cur = list(nvec)
    cdef object c
    for t in reversed(word):
        c = 0
        for k in range(n):
            if cur[k]:
                c = c + cur[k] * a[k][t]
        cur[t] = cur[t] - c
    return tuple(cur)


def act_on_coweight(a, word, lam):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k, t
    cdef list cur = list(lam)
    cdef object p
    for t in reversed(word):
        p = cur[n + t]
        for k in range(n):
            if cur[k]:
                p = p + cur[k] * a[k][t]
        cur[t] = cur[t] - p
    return tuple(cur)


def inversion_pairs(a, word):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k, l, t
    cdef list acc = [], row, m, nv
    cdef object d, c
    for t in word:
        row = list(a[t])
        for m, nv in acc:
            d = 0
            for l in range(n):
                if row[l] and m[l]:
                    d = d + row[l] * m[l]
            m[t] = m[t] - d
            c = 0
            for k in range(n):
                if nv[k]:
                    c = c + nv[k] * a[k][t]
            nv[t] = nv[t] - c
        e_m = [1 if l == t else 0 for l in range(n)]
        acc.append((e_m, list(e_m)))
    return tuple((tuple(m), tuple(nv)) for m, nv in acc)


def descend_to_simple(a, m):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, k, l, nz_count, nz_last, step
    cdef list cur = list(m)
    cdef list row
    cdef object d, x
    cdef bint neg = False
    nz_count = 0
    for k in range(n):
        x = cur[k]
        if x < 0:
            neg = True
        if x != 0:
            nz_count += 1
    if neg or nz_count == 0:
        return None
    word = []
    while True:
        nz_count = 0
        nz_last = -1
        for k in range(n):
            if cur[k] != 0:
                nz_count += 1
                nz_last = k
        if nz_count == 1 and cur[nz_last] == 1:
            return tuple(word), nz_last
        step = -1
        for i in range(n):
            row = list(a[i])
            d = 0
            for l in range(n):
                if row[l] and cur[l]:
                    d = d + row[l] * cur[l]
            if d > 0:
                step = i
                break
        if step < 0:
            return None
        cur[step] = cur[step] - d
        for k in range(n):
            if cur[k] < 0:
                return None
        word.append(step)


def real_roots_upto(a, hmax):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, k, h
    cdef object c, d
    cdef list nv2, m2
    buckets = {1: []}
    for i in range(n):
        e = tuple(1 if l == i else 0 for l in range(n))
        buckets[1].append((e, e, (i,)))
    seen = set()
    out = []
    for h in range(1, hmax + 1):
        for m, nv, word in sorted(buckets.pop(h, [])):
            if nv in seen:
                continue
            seen.add(nv)
            out.append((m, nv, word))
            for i in range(n):
                c = 0
                for k in range(n):
                    if nv[k]:
                        c = c + nv[k] * a[k][i]
                if c < 0 and h - c <= hmax:
                    d = 0
                    for k in range(n):
                        if m[k]:
                            d = d + a[i][k] * m[k]
                    m2 = list(m)
                    m2[i] = m2[i] - d
                    nv2 = list(nv)
                    nv2[i] = nv2[i] - c
                    buckets.setdefault(h - c, []).append(
                        (tuple(m2), tuple(nv2), (i,) + word)
                    )
    return out


def quantum_closure(a, coeff_cap, count_cap):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, k
    cdef object c
    cdef list nv2
    level = {}
    for i in range(n):
        level[tuple(1 if l == i else 0 for l in range(n))] = (i,)
    out = sorted(level.items())
    while level:
        nxt = {}
        for nv, word in sorted(level.items()):
            for i in range(n):
                c = 0
                for k in range(n):
                    if nv[k]:
                        c = c + nv[k] * a[k][i]
                if c == -1:
                    nv2 = list(nv)
                    nv2[i] = nv2[i] + 1
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


def box_closure(a, target):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, k
    cdef object c
    cdef list nv2
    goal = tuple(target)
    level = {}
    for i in range(n):
        if goal[i] >= 1:
            e = tuple(1 if l == i else 0 for l in range(n))
            if e == goal:
                return (i,)
            level[e] = (i,)
    while level:
        nxt = {}
        for nv, word in sorted(level.items()):
            for i in range(n):
                if nv[i] + 1 > goal[i]:
                    continue
                c = 0
                for k in range(n):
                    if nv[k]:
                        c = c + nv[k] * a[k][i]
                if c == -1:
                    nv2 = list(nv)
                    nv2[i] = nv2[i] + 1
                    key = tuple(nv2)
                    if key == goal:
                        return (i,) + word
                    if key not in nxt:
                        nxt[key] = (i,) + word
        level = nxt
    return None


def certify_pairings(a, p, ht, budget):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, steps = 0
    cdef object pi, height = ht
    cdef list cur = list(p)
    cdef list row
    word = []
    while True:
        i = -1
        for j in range(n):
            if cur[j] < 0:
                i = j
                break
        if i < 0:
            return tuple(cur), height, tuple(word)
        if steps >= budget:
            return None
        pi = cur[i]
        height = height - pi
        row = list(a[i])
        for j in range(n):
            if row[j]:
                cur[j] = cur[j] - pi * row[j]
        word.append(i)
        steps += 1
