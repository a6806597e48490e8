# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics mirror ``bvfla._pykernels`` exactly."""

from itertools import permutations

cdef enum:
    MAXN = 8

cdef int LEFT_INVERTIVE = 0
cdef int MEDIAL = 1
cdef int PARAMEDIAL = 2
cdef int ASSOCIATIVE = 3
cdef int COMMUTATIVE = 4
cdef int LEMMA_L1 = 5

cdef int SUBSEMIGROUP = 0
cdef int LEFT = 1
cdef int RIGHT = 2
cdef int GEN_BI_XZ = 3
cdef int GEN_BI_XY = 4
cdef int INTERIOR = 5

cdef inline int _load(object table, int n, int *t) except -1:
    cdef int i
    if n < 1 or n > MAXN:
        raise ValueError("compiled kernels support orders 1..%d" % MAXN)
    for i in range(n * n):
        t[i] = table[i]
    return 0

def law_failure(table, int n, int law):
    cdef int t[MAXN * MAXN]
    cdef int a, b, c, d, ab, ba, ac, lhs, rhs
    _load(table, n, t)
    if law == COMMUTATIVE:
        for a in range(n):
            for b in range(n):
                if t[a * n + b] != t[b * n + a]:
                    return (a, b)
        return None
    if law == LEFT_INVERTIVE or law == ASSOCIATIVE or law == LEMMA_L1:
        for a in range(n):
            for b in range(n):
                ab = t[a * n + b]
                for c in range(n):
                    if law == LEFT_INVERTIVE:
                        lhs = t[ab * n + c]
                        rhs = t[t[c * n + b] * n + a]
                    elif law == ASSOCIATIVE:
                        lhs = t[a * n + t[b * n + c]]
                        rhs = t[ab * n + c]
                    else:
                        lhs = t[a * n + t[b * n + c]]
                        rhs = t[b * n + t[a * n + c]]
                    if lhs != rhs:
                        return (a, b, c)
        return None
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            ba = t[b * n + a]
            for c in range(n):
                ac = t[a * n + c]
                for d in range(n):
                    lhs = t[ab * n + t[c * n + d]]
                    if law == MEDIAL:
                        rhs = t[ac * n + t[b * n + d]]
                    else:
                        rhs = t[t[d * n + c] * n + ba]
                    if lhs != rhs:
                        return (a, b, c, d)
    return None

def compose(table, int n, pos1, neg1, pos2, neg2):
    # degrees are Python ints of arbitrary size; keep them as objects
    cdef int t[MAXN * MAXN]
    cdef int seen[MAXN]
    cdef int x, y, z
    _load(table, n, t)
    pos = [0] * n
    neg = [0] * n
    for x in range(n):
        seen[x] = 0
    for y in range(n):
        py = pos1[y]
        ny = neg1[y]
        for z in range(n):
            x = t[y * n + z]
            p = py if py < pos2[z] else pos2[z]
            q = ny if ny > neg2[z] else neg2[z]
            if not seen[x]:
                seen[x] = 1
                pos[x] = p
                neg[x] = q
            else:
                if p > pos[x]:
                    pos[x] = p
                if q < neg[x]:
                    neg[x] = q
    return pos, neg

def violation(table, int n, int kind, pos, neg):
    cdef int t[MAXN * MAXN]
    cdef int x, y, z, p, xy
    _load(table, n, t)
    if kind <= RIGHT:
        for x in range(n):
            for y in range(n):
                p = t[x * n + y]
                if kind == SUBSEMIGROUP:
                    bp = pos[x] if pos[x] < pos[y] else pos[y]
                    bn = neg[x] if neg[x] > neg[y] else neg[y]
                elif kind == LEFT:
                    bp = pos[y]
                    bn = neg[y]
                else:
                    bp = pos[x]
                    bn = neg[x]
                if pos[p] < bp or neg[p] > bn:
                    return (x, y)
        return None
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                p = t[xy * n + z]
                if kind == GEN_BI_XZ:
                    bp = pos[x] if pos[x] < pos[z] else pos[z]
                    bn = neg[x] if neg[x] > neg[z] else neg[z]
                elif kind == GEN_BI_XY:
                    bp = pos[x] if pos[x] < pos[y] else pos[y]
                    bn = neg[x] if neg[x] > neg[y] else neg[y]
                else:
                    bp = pos[y]
                    bn = neg[y]
                if pos[p] < bp or neg[p] > bn:
                    return (x, y, z)
    return None

cdef int RULE_SUB = 1
cdef int RULE_LEFT = 2
cdef int RULE_RIGHT = 4
cdef int RULE_GEN_BI = 8
cdef int RULE_INTERIOR = 16


def close(table, int n, int rules, pos, neg):
    cdef int t[MAXN * MAXN]
    cdef int x, y, z, p, xy
    cdef bint changed
    _load(table, n, t)
    pos = list(pos)
    neg = list(neg)
    changed = True
    while changed:
        changed = False
        if rules & (RULE_SUB | RULE_LEFT | RULE_RIGHT):
            for x in range(n):
                for y in range(n):
                    p = t[x * n + y]
                    if rules & RULE_SUB:
                        bp = pos[x] if pos[x] < pos[y] else pos[y]
                        bn = neg[x] if neg[x] > neg[y] else neg[y]
                        if pos[p] < bp:
                            pos[p] = bp
                            changed = True
                        if neg[p] > bn:
                            neg[p] = bn
                            changed = True
                    if rules & RULE_LEFT:
                        if pos[p] < pos[y]:
                            pos[p] = pos[y]
                            changed = True
                        if neg[p] > neg[y]:
                            neg[p] = neg[y]
                            changed = True
                    if rules & RULE_RIGHT:
                        if pos[p] < pos[x]:
                            pos[p] = pos[x]
                            changed = True
                        if neg[p] > neg[x]:
                            neg[p] = neg[x]
                            changed = True
        if rules & (RULE_GEN_BI | RULE_INTERIOR):
            for x in range(n):
                for y in range(n):
                    xy = t[x * n + y]
                    for z in range(n):
                        p = t[xy * n + z]
                        if rules & RULE_GEN_BI:
                            bp = pos[x] if pos[x] < pos[z] else pos[z]
                            bn = neg[x] if neg[x] > neg[z] else neg[z]
                            if pos[p] < bp:
                                pos[p] = bp
                                changed = True
                            if neg[p] > bn:
                                neg[p] = bn
                                changed = True
                        if rules & RULE_INTERIOR:
                            if pos[p] < pos[y]:
                                pos[p] = pos[y]
                                changed = True
                            if neg[p] > neg[y]:
                                neg[p] = neg[y]
                                changed = True
    return pos, neg


cdef inline bint _triple_ok(int *t, int n, int k, int a, int b, int c):
    cdef int i1 = a * n + b
    cdef int i2, i3, i4
    if i1 > k:
        return True
    i2 = t[i1] * n + c
    i3 = c * n + b
    if i2 > k or i3 > k:
        return True
    i4 = t[i3] * n + a
    if i4 > k:
        return True
    return t[i2] == t[i4]

def enumerate_tables(int n, long long budget):
    cdef int t[MAXN * MAXN]
    cdef int size = n * n
    cdef int k, i, j, a, b, c
    cdef long long nodes = 0
    cdef bint ok
    cdef bint exhausted = False
    if n < 1 or n > MAXN:
        raise ValueError("compiled kernels support orders 1..%d" % MAXN)
    out = []
    for k in range(size):
        t[k] = -1
    k = 0
    while k >= 0:
        t[k] += 1
        if t[k] >= n:
            t[k] = -1
            k -= 1
            continue
        nodes += 1
        if budget > 0 and nodes > budget:
            exhausted = True
            break
        i = k // n
        j = k % n
        ok = True
        for c in range(n):
            if not (_triple_ok(t, n, k, i, j, c) and _triple_ok(t, n, k, c, j, i)):
                ok = False
                break
        if ok:
            for a in range(n):
                for b in range(n):
                    if a * n + b <= k and t[a * n + b] == i:
                        if not (_triple_ok(t, n, k, a, b, j) and _triple_ok(t, n, k, j, b, a)):
                            ok = False
                            break
                if not ok:
                    break
        if not ok:
            continue
        if k == size - 1:
            out.append(tuple([t[c] for c in range(size)]))
        else:
            k += 1
    return out, nodes, exhausted

_PERMS = {}

def canonical_form(table, int n):
    cdef int t[MAXN * MAXN]
    cdef int best[MAXN * MAXN]
    cdef int p[MAXN]
    cdef int inv[MAXN]
    cdef int r, s, idx, v
    cdef int have = 0
    cdef int state
    _load(table, n, t)
    perms = _PERMS.get(n)
    if perms is None:
        perms = list(permutations(range(n)))
        _PERMS[n] = perms
    for perm in perms:
        for r in range(n):
            p[r] = perm[r]
            inv[p[r]] = r
        # state: 0 = equal so far, -1 = smaller (take it), 1 = larger (abort)
        state = 0 if have else -1
        for idx in range(n * n):
            r = idx // n
            s = idx % n
            v = p[t[inv[r] * n + inv[s]]]
            if state == 0:
                if v < best[idx]:
                    state = -1
                elif v > best[idx]:
                    state = 1
                    break
            if state == -1:
                best[idx] = v
        have = 1
    return tuple([best[idx] for idx in range(n * n)])
