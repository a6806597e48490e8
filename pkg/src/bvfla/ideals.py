"""Ideal classes of BVF subsets: pointwise predicates and composition tests.

The two routes are independent: the pointwise predicates scan element tuples
directly, while :func:`characterize_by_composition` builds products with
``compose`` and compares them with ``leq``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import kernels
from .bvf import BVFSubset, compose, first_excess, format_degree, gamma
from .errors import OrderMismatch
from .magma import Magma

CLASSES = ("subsemigroup", "left", "right", "two_sided", "generalized_bi", "bi", "interior")
COMPOSITION_CLASSES = ("subsemigroup", "left", "right", "generalized_bi", "bi", "interior")
BI_FORMS = ("xz", "xy")


@dataclass(frozen=True)
class Witness:
    """A tuple where ``pos[0] >= pos[1]`` or ``neg[0] <= neg[1]`` fails.

    For pointwise conditions ``elements`` is the tuple of operands and index 0
    of each pair is the degree of their product; for composition inclusions
    ``elements`` is the single element and index 1 is the composite degree.
    """

    elements: tuple[int, ...]
    pos: tuple[Fraction, Fraction]
    neg: tuple[Fraction, Fraction]
    condition: str

    @property
    def pos_fails(self) -> bool:
        return self.pos[0] < self.pos[1]

    @property
    def neg_fails(self) -> bool:
        return self.neg[0] > self.neg[1]

    def to_json(self, M: Optional[Magma] = None, decimal=False):
        out = {
            "condition": self.condition,
            "elements": list(self.elements),
            "pos": [format_degree(d, decimal) for d in self.pos],
            "neg": [format_degree(d, decimal) for d in self.neg],
        }
        if M is not None and M.names:
            out["labels"] = list(M.labels(self.elements))
        return out


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.holds

    def to_json(self, M=None, decimal=False):
        return {
            "holds": self.holds,
            "witness": None if self.witness is None else self.witness.to_json(M, decimal),
        }


# condition -> (arity, kernel code, product of the tuple, bound selector)
# the bound selector returns the operand indices whose degrees bound the product
_CONDITIONS = {
    "subsemigroup": (2, kernels.SUBSEMIGROUP, lambda t, x, y: t[x][y], (0, 1)),
    "left": (2, kernels.LEFT, lambda t, x, y: t[x][y], (1,)),
    "right": (2, kernels.RIGHT, lambda t, x, y: t[x][y], (0,)),
    "generalized_bi": (3, kernels.GEN_BI_XZ, lambda t, x, y, z: t[t[x][y]][z], (0, 2)),
    "generalized_bi_xy": (3, kernels.GEN_BI_XY, lambda t, x, y, z: t[t[x][y]][z], (0, 1)),
    "interior": (3, kernels.INTERIOR, lambda t, x, y, z: t[t[x][y]][z], (1,)),
}

_FORMS = {
    "subsemigroup": "B(xy) >= B(x) & B(y)",
    "left": "B(xy) >= B(y)",
    "right": "B(xy) >= B(x)",
    "generalized_bi": "B((xy)z) >= B(x) & B(z)",
    "generalized_bi_xy": "B((xy)z) >= B(x) & B(y)",
    "interior": "B((xy)z) >= B(y)",
}


def _pointwise_witness(M, B, cond, tup) -> Witness:
    _, _, prod, bound = _CONDITIONS[cond]
    p = prod(M.table, *tup)
    return Witness(
        tuple(tup),
        (B.pos[p], min(B.pos[tup[i]] for i in bound)),
        (B.neg[p], max(B.neg[tup[i]] for i in bound)),
        _FORMS[cond],
    )


def _pointwise(M: Magma, B: BVFSubset, cond: str, at=None) -> Verdict:
    if M.order != B.order:
        raise OrderMismatch(f"magma has order {M.order}, subset has {B.order}")
    arity, code, _, _ = _CONDITIONS[cond]
    if at is not None:
        at = tuple(at)
        if len(at) != arity:
            raise ValueError(f"{cond} is checked on {arity}-tuples, got {len(at)}")
        w = _pointwise_witness(M, B, cond, at)
        if w.pos_fails or w.neg_fails:
            return Verdict(False, w)
    pos, neg = B.scaled(B.basis)
    tup = kernels.violation(M.flat, M.order, code, pos, neg)
    if tup is None:
        return Verdict(True)
    return Verdict(False, _pointwise_witness(M, B, cond, tup))


def is_bvf_subsemigroup(M: Magma, B: BVFSubset, at=None) -> Verdict:
    return _pointwise(M, B, "subsemigroup", at)


def is_bvf_left_ideal(M: Magma, B: BVFSubset, at=None) -> Verdict:
    return _pointwise(M, B, "left", at)


def is_bvf_right_ideal(M: Magma, B: BVFSubset, at=None) -> Verdict:
    return _pointwise(M, B, "right", at)


def is_bvf_two_sided_ideal(M: Magma, B: BVFSubset, at=None) -> Verdict:
    left = is_bvf_left_ideal(M, B, at)
    if not left:
        return left
    return is_bvf_right_ideal(M, B, at)


def is_bvf_generalized_bi_ideal(M: Magma, B: BVFSubset, form="xz", at=None) -> Verdict:
    """``B((xy)z)`` against the degrees of ``x`` and ``z``.

    ``form="xy"`` bounds by ``x`` and ``y`` instead; that variant is kept for
    comparison only and does not match the composition test.
    """
    if form not in BI_FORMS:
        raise ValueError(f"form must be one of {BI_FORMS}")
    return _pointwise(M, B, "generalized_bi" if form == "xz" else "generalized_bi_xy", at)


def is_bvf_bi_ideal(M: Magma, B: BVFSubset, form="xz", at=None) -> Verdict:
    at_sub = at if at is not None and len(at) == 2 else None
    at_gbi = at if at is not None and len(at) == 3 else None
    sub = is_bvf_subsemigroup(M, B, at_sub)
    if not sub:
        return sub
    return is_bvf_generalized_bi_ideal(M, B, form, at_gbi)


def is_bvf_interior_ideal(M: Magma, B: BVFSubset, at=None) -> Verdict:
    return _pointwise(M, B, "interior", at)


@dataclass(frozen=True)
class Classification:
    subsemigroup: Verdict
    left: Verdict
    right: Verdict
    two_sided: Verdict
    generalized_bi: Verdict
    bi: Verdict
    interior: Verdict

    def __post_init__(self):
        if self.two_sided.holds != (self.left.holds and self.right.holds):
            raise AssertionError("two_sided must equal left and right")
        if self.bi.holds != (self.subsemigroup.holds and self.generalized_bi.holds):
            raise AssertionError("bi must equal subsemigroup and generalized_bi")

    def __getitem__(self, name: str) -> Verdict:
        return getattr(self, name)

    def flags(self) -> dict[str, bool]:
        return {c: getattr(self, c).holds for c in CLASSES}

    def to_json(self, M=None, decimal=False):
        return {c: getattr(self, c).to_json(M, decimal) for c in CLASSES}


def classify(M: Magma, B: BVFSubset, form="xz", at: Optional[dict] = None) -> Classification:
    """Run every predicate; ``at`` maps class names to preferred witness tuples."""
    at = at or {}
    unknown = set(at) - set(CLASSES)
    if unknown:
        raise ValueError(f"unknown classes: {sorted(unknown)}")
    sub = is_bvf_subsemigroup(M, B, at.get("subsemigroup"))
    left = is_bvf_left_ideal(M, B, at.get("left"))
    right = is_bvf_right_ideal(M, B, at.get("right"))
    if "two_sided" in at:
        two = is_bvf_two_sided_ideal(M, B, at["two_sided"])
    else:
        two = left if not left else right
    gbi = is_bvf_generalized_bi_ideal(M, B, form, at.get("generalized_bi"))
    if "bi" in at:
        bi = is_bvf_bi_ideal(M, B, form, at["bi"])
    else:
        bi = sub if not sub else gbi
    interior = is_bvf_interior_ideal(M, B, at.get("interior"))
    return Classification(sub, left, right, two, gbi, bi, interior)


PREDICATES = {
    "subsemigroup": is_bvf_subsemigroup,
    "left": is_bvf_left_ideal,
    "right": is_bvf_right_ideal,
    "two_sided": is_bvf_two_sided_ideal,
    "generalized_bi": is_bvf_generalized_bi_ideal,
    "bi": is_bvf_bi_ideal,
    "interior": is_bvf_interior_ideal,
}


def _inclusion(B: BVFSubset, composite: BVFSubset, label: str) -> Verdict:
    i = first_excess(composite, B)
    if i is None:
        return Verdict(True)
    return Verdict(
        False,
        Witness((i,), (B.pos[i], composite.pos[i]), (B.neg[i], composite.neg[i]), label),
    )


def characterize_by_composition(M: Magma, B: BVFSubset, cls: str) -> Verdict:
    """Decide ``cls`` through product inclusions instead of pointwise checks."""
    if M.order != B.order:
        raise OrderMismatch(f"magma has order {M.order}, subset has {B.order}")
    G = gamma(M.order)
    if cls == "subsemigroup":
        return _inclusion(B, compose(M, B, B), "B o B <= B")
    if cls == "left":
        return _inclusion(B, compose(M, G, B), "G o B <= B")
    if cls == "right":
        return _inclusion(B, compose(M, B, G), "B o G <= B")
    if cls == "two_sided":
        left = characterize_by_composition(M, B, "left")
        return left if not left else characterize_by_composition(M, B, "right")
    if cls == "generalized_bi":
        return _inclusion(B, compose(M, compose(M, B, G), B), "(B o G) o B <= B")
    if cls == "bi":
        sub = characterize_by_composition(M, B, "subsemigroup")
        return sub if not sub else characterize_by_composition(M, B, "generalized_bi")
    if cls == "interior":
        return _inclusion(B, compose(M, compose(M, G, B), G), "(G o B) o G <= B")
    raise ValueError(f"unknown class {cls!r}")


def witness_violates(M: Magma, B: BVFSubset, cls: str, w: Witness) -> bool:
    """Re-evaluate a pointwise witness from scratch."""
    if cls == "two_sided":
        conds = ["left", "right"]
    elif cls == "bi":
        conds = ["subsemigroup", "generalized_bi"]
    else:
        conds = [cls]
    for cond in conds:
        if _CONDITIONS[cond][0] != len(w.elements):
            continue
        fresh = _pointwise_witness(M, B, cond, w.elements)
        if fresh.pos_fails or fresh.neg_fails:
            return True
    return False
