"""Pure-Python reference kernels.

Every function here has a twin in ``_ckernels.pyx`` with identical semantics;
``bvfla.kernels`` picks one at import time.  Tables are flat row-major
sequences of length ``n*n``; membership degrees arrive pre-scaled to integers
(a common denominator has been multiplied out), so only order comparisons are
needed and results stay exact.
"""

from itertools import permutations

LEFT_INVERTIVE = 0
MEDIAL = 1
PARAMEDIAL = 2
ASSOCIATIVE = 3
COMMUTATIVE = 4
LEMMA_L1 = 5

SUBSEMIGROUP = 0
LEFT = 1
RIGHT = 2
GEN_BI_XZ = 3
GEN_BI_XY = 4
INTERIOR = 5

_LAW_ARITY = {LEFT_INVERTIVE: 3, MEDIAL: 4, PARAMEDIAL: 4,
              ASSOCIATIVE: 3, COMMUTATIVE: 2, LEMMA_L1: 3}


def law_failure(table, n, law):
    """First tuple (row-major) where ``law`` fails, or None."""
    t = table
    if law == COMMUTATIVE:
        for a in range(n):
            for b in range(n):
                if t[a * n + b] != t[b * n + a]:
                    return (a, b)
        return None
    if _LAW_ARITY[law] == 3:
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


def compose(table, n, pos1, neg1, pos2, neg2):
    """Sup-min / inf-max product; elements with no factorization get 0, 0."""
    seen = [False] * n
    pos = [0] * n
    neg = [0] * n
    for y in range(n):
        py = pos1[y]
        ny = neg1[y]
        row = y * n
        for z in range(n):
            x = table[row + z]
            p = py if py < pos2[z] else pos2[z]
            q = ny if ny > neg2[z] else neg2[z]
            if not seen[x]:
                seen[x] = True
                pos[x] = p
                neg[x] = q
            else:
                if p > pos[x]:
                    pos[x] = p
                if q < neg[x]:
                    neg[x] = q
    return pos, neg


def violation(table, n, kind, pos, neg):
    """First tuple (row-major) violating the pointwise ideal condition ``kind``."""
    t = table
    if kind <= RIGHT:
        for x in range(n):
            for y in range(n):
                p = t[x * n + y]
                if kind == SUBSEMIGROUP:
                    bp = pos[x] if pos[x] < pos[y] else pos[y]
                    bn = neg[x] if neg[x] > neg[y] else neg[y]
                elif kind == LEFT:
                    bp, bn = pos[y], neg[y]
                else:
                    bp, bn = pos[x], neg[x]
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
                    bp, bn = pos[y], neg[y]
                if pos[p] < bp or neg[p] > bn:
                    return (x, y, z)
    return None


RULE_SUB = 1
RULE_LEFT = 2
RULE_RIGHT = 4
RULE_GEN_BI = 8
RULE_INTERIOR = 16


def close(table, n, rules, pos, neg):
    """Raise product degrees (lower negative ones) until every rule in the
    ``rules`` bitmask holds; returns new lists."""
    t = table
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


def _triple_ok(t, n, k, a, b, c):
    # cells with flat index <= k are assigned
    i1 = a * n + b
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


def enumerate_tables(n, budget):
    """All left-invertive tables of order ``n`` in lexicographic order.

    Depth-first over cells in row-major order; after each assignment only the
    triples that involve the new cell are re-checked.  Returns
    ``(tables, nodes, exhausted)``; ``budget <= 0`` means unlimited.
    """
    size = n * n
    t = [-1] * size
    out = []
    nodes = 0
    exhausted = False
    k = 0
    # explicit stack: t[k] holds the value being tried at depth k
    while k >= 0:
        t[k] += 1
        if t[k] >= n:
            t[k] = -1
            k -= 1
            continue
        nodes += 1
        if 0 < budget < nodes:
            exhausted = True
            break
        i, j = divmod(k, n)
        ok = True
        for c in range(n):
            if not (_triple_ok(t, n, k, i, j, c) and _triple_ok(t, n, k, c, j, i)):
                ok = False
                break
        if ok:
            for a in range(n):
                for b in range(n):
                    ab = a * n + b
                    if ab <= k and t[ab] == i:
                        if not (_triple_ok(t, n, k, a, b, j) and _triple_ok(t, n, k, j, b, a)):
                            ok = False
                            break
                if not ok:
                    break
        if not ok:
            continue
        if k == size - 1:
            out.append(tuple(t))
        else:
            k += 1
    return out, nodes, exhausted


_PERMS = {}


def _perms(n):
    if n not in _PERMS:
        _PERMS[n] = list(permutations(range(n)))
    return _PERMS[n]


def canonical_form(table, n):
    """Lexicographically least relabeling over all carrier permutations."""
    best = None
    for p in _perms(n):
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        cand = [p[table[inv[r] * n + inv[s]]] for r in range(n) for s in range(n)]
        if best is None or cand < best:
            best = cand
    return tuple(best)
