"""Bipolar-valued fuzzy subsets over a finite carrier, with exact degrees.

Degrees are :class:`fractions.Fraction` throughout.  The composition kernel
works on integers obtained by multiplying out a common denominator; since
the calculus only ever takes minima and maxima this is exact.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import kernels
from .errors import DegreeError, OrderMismatch
from .magma import Magma

Degree = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
MINUS_ONE = Fraction(-1)


def parse_degree(value) -> Fraction:
    """Exact degree from ``"p/q"``, an integer, or a decimal literal."""
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        raise DegreeError(f"not a degree: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # a JSON number: take the decimal literal it was written as
        value = repr(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DegreeError(f"not a degree: {value!r}") from None
    raise DegreeError(f"not a degree: {value!r}")


def format_degree(d: Fraction, decimal: bool = False) -> str:
    if decimal:
        return f"~{float(d):.4f}"
    return str(d)


@dataclass(frozen=True)
class BVFSubset:
    """Per-element pair of positive (``[0,1]``) and negative (``[-1,0]``) degrees."""

    pos: tuple[Fraction, ...]
    neg: tuple[Fraction, ...]

    def __post_init__(self):
        pos = tuple(parse_degree(v) for v in self.pos)
        neg = tuple(parse_degree(v) for v in self.neg)
        if len(pos) != len(neg):
            raise DegreeError("pos and neg must have the same length")
        if not pos:
            raise DegreeError("a BVF subset needs at least one element")
        # denominators are positive, so the range tests reduce to integer ones
        for i, (p, q) in enumerate(zip(pos, neg)):
            if not 0 <= p.numerator <= p.denominator:
                raise DegreeError(f"positive degree {p} at element {i} is outside [0,1]")
            if not -q.denominator <= q.numerator <= 0:
                raise DegreeError(f"negative degree {q} at element {i} is outside [-1,0]")
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)

    def __getattr__(self, name):
        # kernel outputs carry integer degrees and build Fractions on demand
        if name in ("pos", "neg") and "_basis_ints" in self.__dict__:
            scale = self.__dict__["_basis"]
            ints = self.__dict__["_basis_ints"][0 if name == "pos" else 1]
            value = tuple([Fraction(v, scale) for v in ints])
            self.__dict__[name] = value
            return value
        raise AttributeError(name)

    @property
    def order(self) -> int:
        ints = self.__dict__.get("_basis_ints")
        return len(ints[0]) if ints is not None else len(self.pos)

    @cached_property
    def denominator(self) -> int:
        return math.lcm(*(d.denominator for d in self.pos + self.neg))

    @cached_property
    def _own_scale(self) -> tuple[list[int], list[int]]:
        return self._scale(self.denominator)

    @property
    def basis(self) -> int:
        """A common multiple of all denominators (not always the least one)."""
        return self.__dict__.get("_basis") or self.denominator

    def scaled(self, scale: int) -> tuple[list[int], list[int]]:
        """Degrees times ``scale`` as ints; ``scale`` must be a multiple of the denominator."""
        known = self.__dict__.get("_basis")
        if known is not None and scale == known:
            return self.__dict__["_basis_ints"]
        if known is not None and scale % known == 0:
            f = scale // known
            p, q = self.__dict__["_basis_ints"]
            return [v * f for v in p], [v * f for v in q]
        if scale == self.denominator:
            return self._own_scale
        return self._scale(scale)

    def _scale(self, scale):
        return (
            [d.numerator * (scale // d.denominator) for d in self.pos],
            [d.numerator * (scale // d.denominator) for d in self.neg],
        )

    def to_json(self) -> dict:
        return {"pos": [str(d) for d in self.pos], "neg": [str(d) for d in self.neg]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @cached_property
    def digest(self) -> str:
        """Short content hash; equal subsets hash equally however they were built."""
        scale = self.basis
        pos, neg = self.scaled(scale)
        g = math.gcd(scale, *pos, *neg)
        key = f"{scale // g}:{[v // g for v in pos]}:{[v // g for v in neg]}"
        return hashlib.sha256(key.encode()).hexdigest()[:16]

    @classmethod
    def from_scaled(cls, pos: Sequence[int], neg: Sequence[int], scale: int) -> "BVFSubset":
        """Build from integer degrees over ``scale``, range-checking the ints only."""
        if len(pos) != len(neg) or not pos:
            raise DegreeError("pos and neg must be nonempty and of the same length")
        for i, (p, q) in enumerate(zip(pos, neg)):
            if not 0 <= p <= scale or not -scale <= q <= 0:
                raise DegreeError(f"degrees at element {i} are out of range")
        self = object.__new__(cls)
        d = self.__dict__
        d["_basis"] = scale
        d["_basis_ints"] = (list(pos), list(neg))
        return self

    @classmethod
    def from_json(cls, obj) -> "BVFSubset":
        if not isinstance(obj, dict) or set(obj) != {"pos", "neg"}:
            raise DegreeError('BVF JSON must be an object with exactly "pos" and "neg"')
        if not isinstance(obj["pos"], list) or not isinstance(obj["neg"], list):
            raise DegreeError('"pos" and "neg" must be arrays')
        return cls(tuple(obj["pos"]), tuple(obj["neg"]))


def loads_bvf(text: str) -> BVFSubset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DegreeError(f"invalid JSON: {exc}") from None
    return BVFSubset.from_json(obj)


def load_bvf(path) -> BVFSubset:
    with open(path, encoding="utf-8") as fh:
        return loads_bvf(fh.read())


def _check(*orders: int) -> int:
    if len(set(orders)) != 1:
        raise OrderMismatch(f"carrier orders differ: {orders}")
    return orders[0]


@lru_cache(maxsize=None)
def gamma(n: int) -> BVFSubset:
    """The whole carrier: positive degree 1 and negative degree -1 everywhere."""
    if n < 1:
        raise ValueError("order must be at least 1")
    return BVFSubset((ONE,) * n, (MINUS_ONE,) * n)


def characteristic(n: int, A: Iterable[int]) -> BVFSubset:
    members = frozenset(A)
    if not members:
        raise ValueError("characteristic function needs a nonempty subset")
    if any(not 0 <= a < n for a in members):
        raise ValueError("subset contains elements outside the carrier")
    return BVFSubset(
        tuple(ONE if i in members else ZERO for i in range(n)),
        tuple(MINUS_ONE if i in members else ZERO for i in range(n)),
    )


def compose(M: Magma, B1: BVFSubset, B2: BVFSubset) -> BVFSubset:
    """Product ``B1 o B2`` over the factorizations ``x = y*z`` in ``M``.

    Positive part is the max over factorizations of ``min(B1+(y), B2+(z))``,
    negative part the min of ``max(B1-(y), B2-(z))``; an element that is not
    a product gets 0 in both parts.
    """
    n = _check(M.order, B1.order, B2.order)
    scale = math.lcm(B1.basis, B2.basis)
    p1, n1 = B1.scaled(scale)
    p2, n2 = B2.scaled(scale)
    pos, neg = kernels.compose(M.flat, n, p1, n1, p2, n2)
    return BVFSubset.from_scaled(pos, neg, scale)


def _common(B1: BVFSubset, B2: BVFSubset):
    _check(B1.order, B2.order)
    scale = math.lcm(B1.basis, B2.basis)
    return scale, B1.scaled(scale), B2.scaled(scale)


def meet(B1: BVFSubset, B2: BVFSubset) -> BVFSubset:
    scale, (p1, n1), (p2, n2) = _common(B1, B2)
    return BVFSubset.from_scaled(list(map(min, p1, p2)), list(map(max, n1, n2)), scale)


def join(B1: BVFSubset, B2: BVFSubset) -> BVFSubset:
    scale, (p1, n1), (p2, n2) = _common(B1, B2)
    return BVFSubset.from_scaled(list(map(max, p1, p2)), list(map(min, n1, n2)), scale)


def leq(B1: BVFSubset, B2: BVFSubset) -> bool:
    """Bipolar containment: positive parts below, negative parts above."""
    return first_excess(B1, B2) is None


def first_excess(B1: BVFSubset, B2: BVFSubset):
    """First element where ``leq(B1, B2)`` breaks, or None."""
    _, (p1, n1), (p2, n2) = _common(B1, B2)
    for i in range(len(p1)):
        if p1[i] > p2[i] or n1[i] < n2[i]:
            return i
    return None


def equal_at(B1: BVFSubset, B2: BVFSubset):
    """First element where the two subsets differ, or None."""
    _, s1, s2 = _common(B1, B2)
    if s1 == s2:
        return None
    return next(i for i in range(B1.order) if s1[0][i] != s2[0][i] or s1[1][i] != s2[1][i])


def from_degrees(pos: Sequence, neg: Sequence) -> BVFSubset:
    return BVFSubset(tuple(pos), tuple(neg))
