"""Finite groupoids given by Cayley tables, and the structural laws on them."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

from . import kernels
from .errors import PreconditionError, TableFormatError

Witness = tuple[int, ...]

# law name -> (arity, lhs, rhs); each side takes the operation and a tuple
LAWS: dict[str, tuple[int, Callable, Callable]] = {
    "left_invertive": (
        3,
        lambda op, a, b, c: op(op(a, b), c),
        lambda op, a, b, c: op(op(c, b), a),
    ),
    "medial": (
        4,
        lambda op, a, b, c, d: op(op(a, b), op(c, d)),
        lambda op, a, b, c, d: op(op(a, c), op(b, d)),
    ),
    "paramedial": (
        4,
        lambda op, a, b, c, d: op(op(a, b), op(c, d)),
        lambda op, a, b, c, d: op(op(d, c), op(b, a)),
    ),
    "associative": (
        3,
        lambda op, a, b, c: op(a, op(b, c)),
        lambda op, a, b, c: op(op(a, b), c),
    ),
    "commutative": (
        2,
        lambda op, a, b: op(a, b),
        lambda op, a, b: op(b, a),
    ),
    "lemma_l1": (
        3,
        lambda op, a, b, c: op(a, op(b, c)),
        lambda op, a, b, c: op(b, op(a, c)),
    ),
}

_LAW_CODES = {
    "left_invertive": kernels.LEFT_INVERTIVE,
    "medial": kernels.MEDIAL,
    "paramedial": kernels.PARAMEDIAL,
    "associative": kernels.ASSOCIATIVE,
    "commutative": kernels.COMMUTATIVE,
    "lemma_l1": kernels.LEMMA_L1,
}

# human-readable shape of each law, used in reports
LAW_FORMS = {
    "left_invertive": "(a*b)*c = (c*b)*a",
    "medial": "(a*b)*(c*d) = (a*c)*(b*d)",
    "paramedial": "(a*b)*(c*d) = (d*c)*(b*a)",
    "associative": "a*(b*c) = (a*b)*c",
    "commutative": "a*b = b*a",
    "lemma_l1": "a*(b*c) = b*(a*c)",
}


@dataclass(frozen=True)
class Magma:
    """A finite groupoid on ``0..order-1``; ``table[x][y]`` is ``x*y``.

    Display names are cosmetic; all operations work on indices.
    """

    table: tuple[tuple[int, ...], ...]
    names: Optional[tuple[str, ...]] = None
    order: int = field(init=False)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n == 0:
            raise ValueError("a magma needs at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(f"entry ({i},{j}) = {v} is outside [0,{n})")
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "order", n)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != n:
                raise ValueError(f"expected {n} names, got {len(names)}")
            if len(set(names)) != n:
                raise ValueError("element names must be distinct")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_flat(cls, flat: Sequence[int], names=None) -> "Magma":
        n = round(len(flat) ** 0.5)
        if n * n != len(flat):
            raise ValueError("flat table length is not a perfect square")
        return cls(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), names)

    @cached_property
    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def label(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def labels(self, tup: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.label(i) for i in tup)

    def index(self, token: str) -> int:
        """Resolve a label or a decimal index to an element index."""
        if self.names and token in self.names:
            return self.names.index(token)
        try:
            i = int(token)
        except ValueError:
            raise ValueError(f"unknown element {token!r}") from None
        if not 0 <= i < self.order:
            raise ValueError(f"element {i} is outside [0,{self.order})")
        return i

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(",".join(map(str, self.flat)).encode()).hexdigest()[:16]

    @cached_property
    def is_left_invertive(self) -> bool:
        return kernels.law_failure(self.flat, self.order, kernels.LEFT_INVERTIVE) is None

    @cached_property
    def left_identity(self) -> Optional[int]:
        return find_left_identity(self)

    def relabel(self, perm: Sequence[int]) -> "Magma":
        """Image under the bijection ``i -> perm[i]``."""
        n = self.order
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        rows = tuple(
            tuple(perm[self.table[inv[r]][inv[s]]] for s in range(n)) for r in range(n)
        )
        names = None
        if self.names:
            names = tuple(self.names[inv[r]] for r in range(n))
        return Magma(rows, names)

    def to_text(self) -> str:
        lines = [str(self.order)]
        if self.names:
            lines.append("# " + " ".join(self.names))
        for row in self.table:
            lines.append(" ".join(self.label(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_line(self) -> str:
        """Single-line rendering used in census files: rows joined by ' / '."""
        return " / ".join(" ".join(map(str, row)) for row in self.table)


@dataclass(frozen=True)
class LawReport:
    law: str
    holds: bool
    witness: Optional[Witness] = None
    # the two sides of the law evaluated at the witness
    values: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("holds must be true exactly when no witness is given")


def parse_table(text: str) -> Magma:
    """Parse the Cayley-table text format.

    Line 1 is the order n, an optional ``#`` line declares n labels, then n
    rows of n whitespace-separated entries (indices or declared labels).
    Blank lines are ignored.
    """
    lines = [(no, line) for no, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not lines:
        raise TableFormatError("empty table file")
    no, first = lines[0]
    try:
        n = int(first.strip())
    except ValueError:
        raise TableFormatError(f"expected the order, got {first.strip()!r}", no, 1) from None
    if n < 1:
        raise TableFormatError(f"order must be positive, got {n}", no, 1)
    rest = lines[1:]
    names = None
    if rest and rest[0][1].lstrip().startswith("#"):
        no, header = rest[0]
        labels = header.lstrip()[1:].split()
        if len(labels) != n:
            raise TableFormatError(f"expected {n} labels, got {len(labels)}", no, 1)
        seen = set()
        for lab, col in zip(labels, _columns(header, labels)):
            if lab in seen:
                raise TableFormatError(f"duplicate label {lab!r}", no, col)
            seen.add(lab)
        names = tuple(labels)
        rest = rest[1:]
    if len(rest) != n:
        where = rest[n][0] if len(rest) > n else (rest[-1][0] + 1 if rest else no + 1)
        raise TableFormatError(f"expected {n} rows, got {len(rest)}", where)
    rows = []
    for no, line in rest:
        tokens = line.split()
        cols = _columns(line, tokens)
        if len(tokens) != n:
            raise TableFormatError(f"expected {n} entries, got {len(tokens)}", no, 1)
        row = []
        for tok, col in zip(tokens, cols):
            row.append(_resolve(tok, n, names, no, col))
        rows.append(tuple(row))
    return Magma(tuple(rows), names)


def _columns(line: str, tokens: list[str]) -> list[int]:
    cols, pos = [], 0
    for tok in tokens:
        pos = line.index(tok, pos)
        cols.append(pos + 1)
        pos += len(tok)
    return cols


def _resolve(tok, n, names, line, col):
    if names is not None and tok in names:
        return names.index(tok)
    try:
        v = int(tok)
    except ValueError:
        raise TableFormatError(f"unknown element {tok!r}", line, col) from None
    if not 0 <= v < n:
        raise TableFormatError(f"entry {v} is out of range [0,{n})", line, col)
    return v


def load_table(path) -> Magma:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


def law_values(law: str, op: Callable, tup: Sequence) -> tuple:
    _, lhs, rhs = LAWS[law]
    return lhs(op, *tup), rhs(op, *tup)


def check_law(M: Magma, law: str, at: Optional[Sequence[int]] = None) -> LawReport:
    """Exhaustively test ``law`` on ``M``.

    The witness is the first failing tuple in row-major order, unless ``at``
    names a tuple where the law fails, in which case that tuple is reported.
    """
    if law not in LAWS:
        raise ValueError(f"unknown law {law!r}")
    if at is not None:
        at = tuple(at)
        if len(at) != LAWS[law][0]:
            raise ValueError(f"{law} takes {LAWS[law][0]} elements, got {len(at)}")
        lhs, rhs = law_values(law, M.op, at)
        if lhs != rhs:
            return LawReport(law, False, at, (lhs, rhs))
    w = kernels.law_failure(M.flat, M.order, _LAW_CODES[law])
    if w is None:
        return LawReport(law, True)
    return LawReport(law, False, tuple(w), law_values(law, M.op, w))


def find_left_identity(M: Magma) -> Optional[int]:
    """Least ``e`` with ``e*x == x`` for every ``x``."""
    ident = tuple(range(M.order))
    for e, row in enumerate(M.table):
        if row == ident:
            return e
    return None


def check_lemma_l1(M: Magma) -> LawReport:
    """``a(bc) = b(ac)`` over all triples; needs a left-invertive magma with left identity."""
    if not M.is_left_invertive:
        raise PreconditionError("not-left-invertive")
    if M.left_identity is None:
        raise PreconditionError("no-left-identity")
    return check_law(M, "lemma_l1")


INTEGER_OPS: dict[str, Callable[[int, int], int]] = {
    "b-a": lambda a, b: b - a,
}


def sampled_law_check(op: str, window: tuple[int, int], law: str) -> LawReport:
    """Check a law for an integer operation over every tuple drawn from ``window``.

    The window is inclusive; values produced outside it are still exact
    integers (closure is not required).
    """
    lo, hi = window
    if lo > hi:
        raise ValueError("window is empty")
    f = INTEGER_OPS[op]
    arity = LAWS[law][0]
    for tup in product(range(lo, hi + 1), repeat=arity):
        lhs, rhs = law_values(law, f, tup)
        if lhs != rhs:
            return LawReport(law, False, tup, (lhs, rhs))
    return LawReport(law, True)


@dataclass(frozen=True)
class CrispVerdict:
    holds: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class CrispClassification:
    subsemigroup: CrispVerdict
    left: CrispVerdict
    right: CrispVerdict
    two_sided: CrispVerdict
    generalized_bi: CrispVerdict
    bi: CrispVerdict
    interior: CrispVerdict

    def __getitem__(self, name: str) -> CrispVerdict:
        return getattr(self, name)

    def as_dict(self):
        return {k: getattr(self, k) for k in CRISP_CLASSES}


CRISP_CLASSES = ("subsemigroup", "left", "right", "two_sided", "generalized_bi", "bi", "interior")


def _first(tuples, bad) -> CrispVerdict:
    for tup in tuples:
        if bad(*tup):
            return CrispVerdict(False, tup)
    return CrispVerdict(True)


def classify_crisp(M: Magma, A: Iterable[int]) -> CrispClassification:
    """Decide the crisp subsemigroup/ideal classes of a nonempty subset ``A``."""
    members = frozenset(A)
    if not members:
        raise ValueError("subset must be nonempty")
    if any(not 0 <= a < M.order for a in members):
        raise ValueError("subset contains elements outside the carrier")
    S = range(M.order)
    t = M.table
    inA = members.__contains__
    pairs = list(product(S, repeat=2))
    triples = list(product(S, repeat=3))

    sub = _first([p for p in pairs if inA(p[0]) and inA(p[1])], lambda a, b: not inA(t[a][b]))
    left = _first([p for p in pairs if inA(p[1])], lambda s, a: not inA(t[s][a]))
    right = _first([p for p in pairs if inA(p[0])], lambda a, s: not inA(t[a][s]))
    if not left.holds:
        two = left
    elif not right.holds:
        two = right
    else:
        two = CrispVerdict(True)
    gbi = _first(
        [p for p in triples if inA(p[0]) and inA(p[2])],
        lambda a, s, b: not inA(t[t[a][s]][b]),
    )
    bi = sub if not sub.holds else gbi
    interior = _first(
        [p for p in triples if inA(p[1])], lambda s, a, u: not inA(t[t[s][a]][u])
    )
    return CrispClassification(sub, left, right, two, gbi, bi, interior)
