"""Brute-force reference implementations used as test oracles.

Nothing here imports the package; everything works on plain nested lists and
Fractions so that agreement with the library is meaningful.
"""

from fractions import Fraction
from itertools import product


def is_left_invertive(t):
    n = len(t)
    return all(t[t[a][b]][c] == t[t[c][b]][a] for a, b, c in product(range(n), repeat=3))


def count_left_invertive(n):
    """Generate-and-filter over all n**(n*n) tables."""
    count = 0
    for flat in product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if is_left_invertive(t):
            count += 1
    return count


def all_left_invertive(n):
    out = []
    for flat in product(range(n), repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if is_left_invertive(t):
            out.append(t)
    return out


def has_left_identity(t):
    n = len(t)
    return any(all(t[e][x] == x for x in range(n)) for e in range(n))


def compose(t, pos1, neg1, pos2, neg2):
    """Sup-min / inf-max over explicit factorization lists; 0 when none."""
    n = len(t)
    pos, neg = [], []
    for x in range(n):
        facts = [(y, z) for y in range(n) for z in range(n) if t[y][z] == x]
        if not facts:
            pos.append(Fraction(0))
            neg.append(Fraction(0))
            continue
        pos.append(max(min(pos1[y], pos2[z]) for y, z in facts))
        neg.append(min(max(neg1[y], neg2[z]) for y, z in facts))
    return pos, neg


def _ge(t, pos, neg, p, bound):
    return pos[p] >= min(pos[i] for i in bound) and neg[p] <= max(neg[i] for i in bound)


def pointwise(t, pos, neg, cls):
    """Ideal-class membership straight from the defining inequalities."""
    n = len(t)
    S = range(n)
    if cls == "subsemigroup":
        return all(_ge(t, pos, neg, t[x][y], (x, y)) for x, y in product(S, S))
    if cls == "left":
        return all(_ge(t, pos, neg, t[x][y], (y,)) for x, y in product(S, S))
    if cls == "right":
        return all(_ge(t, pos, neg, t[x][y], (x,)) for x, y in product(S, S))
    if cls == "two_sided":
        return pointwise(t, pos, neg, "left") and pointwise(t, pos, neg, "right")
    if cls == "generalized_bi":
        return all(_ge(t, pos, neg, t[t[x][y]][z], (x, z)) for x, y, z in product(S, S, S))
    if cls == "bi":
        return pointwise(t, pos, neg, "subsemigroup") and pointwise(t, pos, neg, "generalized_bi")
    if cls == "interior":
        return all(_ge(t, pos, neg, t[t[x][y]][z], (y,)) for x, y, z in product(S, S, S))
    raise ValueError(cls)


def crisp(t, A, cls):
    n = len(t)
    S = range(n)
    A = set(A)
    if cls == "subsemigroup":
        return all(t[a][b] in A for a in A for b in A)
    if cls == "left":
        return all(t[s][a] in A for s in S for a in A)
    if cls == "right":
        return all(t[a][s] in A for s in S for a in A)
    raise ValueError(cls)


def canonical(t):
    """Least relabeling, by trying every permutation."""
    from itertools import permutations

    n = len(t)
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        cand = tuple(p[t[inv[r]][inv[s]]] for r in range(n) for s in range(n))
        if best is None or cand < best:
            best = cand
    return best
