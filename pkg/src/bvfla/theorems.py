"""Instance-level verification of the LA-semigroup / BVF-ideal results.

Each ``verify_*`` function checks one result on one instance and returns a
:class:`TheoremReport`.  Hypotheses are re-checked first; when they fail the
report is ``not_applicable`` rather than a failure.  :func:`run_all` drives
every verifier over fixture and seeded random subsets and aggregates one
report per theorem id.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from . import kernels
from .bvf import BVFSubset, characteristic, compose, equal_at, first_excess, gamma, meet
from .errors import PreconditionError
from .ideals import (
    COMPOSITION_CLASSES,
    PREDICATES,
    characterize_by_composition,
    is_bvf_bi_ideal,
    is_bvf_interior_ideal,
    is_bvf_left_ideal,
    is_bvf_right_ideal,
    is_bvf_subsemigroup,
    is_bvf_two_sided_ideal,
)
from .magma import Magma, check_law, check_lemma_l1, classify_crisp
from .search import DEFAULT_Q, random_bvf

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"

THEOREMS = {
    "law-medial": "an LA-semigroup satisfies the medial law",
    "law-paramedial": "an LA-semigroup with left identity satisfies the paramedial law",
    "lem-l1": "with a left identity, a(bc) = b(ac)",
    "prop-bvfs-la": "(BVF(S), o) satisfies the left invertive law",
    "cor-bvfs-medial": "the medial law holds in BVF(S)",
    "prop-ideal-subsemigroup": "every BVF left (right) ideal is a BVF-LA-subsemigroup",
    "lem-char-subsemigroup": "subsemigroup iff B o B <= B",
    "lem-char-left": "left ideal iff G o B <= B",
    "lem-char-right": "right ideal iff B o G <= B",
    "lem-char-generalized-bi": "generalized bi-ideal iff (B o G) o B <= B",
    "lem-char-bi": "bi-ideal iff B o B <= B and (B o G) o B <= B",
    "lem-char-interior": "interior ideal iff (G o B) o G <= B",
    "thm-product-in-meet": "right ideal B1, left ideal B2 give B1 o B2 <= B1 meet B2",
    "prop-meet-subsemigroup": "the meet of two subsemigroups is a subsemigroup",
    "prop-meet-ideal": "the meet of two left (right, two-sided) ideals is one too",
    "lem-gamma-absorption": "with a left identity, G o B = B for every left ideal B",
    "thm-char-subsemigroup": "A is an LA-subsemigroup iff its characteristic function is",
    "thm-char-ideal": "A is a left (right) ideal iff its characteristic function is",
    "rem-ideal-interior": "every BVF ideal is a BVF interior ideal",
    "prop-right-iff-interior": "with a left identity, right ideal iff interior ideal",
    "thm-left-ideal-bi": "with a left identity, every BVF left ideal is a BVF bi-ideal",
}

NOTES = {
    "thm-left-ideal-bi": (
        "checked under the hypotheses the argument actually uses (left ideal, "
        "left identity); interior-ideality is not assumed"
    ),
}

_CHAR_IDS = {
    "subsemigroup": "lem-char-subsemigroup",
    "left": "lem-char-left",
    "right": "lem-char-right",
    "generalized_bi": "lem-char-generalized-bi",
    "bi": "lem-char-bi",
    "interior": "lem-char-interior",
}


@dataclass
class TheoremReport:
    id: str
    status: str
    checked: int = 0
    witness: Optional[dict] = None
    instance: dict = field(default_factory=dict)
    note: Optional[str] = None

    @property
    def holds(self) -> Optional[bool]:
        """True/False for a decided instance, None when not applicable."""
        if self.status == NOT_APPLICABLE:
            return None
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "holds": self.holds,
            "checked": self.checked,
            "witness": self.witness,
            "instance": self.instance,
            "note": self.note,
        }


def _instance(M: Magma, *subsets: BVFSubset, **extra) -> dict:
    out = {"magma": M.digest, "order": M.order, "subsets": [B.digest for B in subsets]}
    out.update(extra)
    return out


def _na(tid, M, reason, *subsets) -> TheoremReport:
    return TheoremReport(tid, NOT_APPLICABLE, 0, None, _instance(M, *subsets), reason)


def _equality(tid, M, lhs: BVFSubset, rhs: BVFSubset, subsets) -> TheoremReport:
    inst = _instance(M, *subsets)
    x = equal_at(lhs, rhs)
    if x is not None:
        w = {
            "element": x,
            "lhs": [str(lhs.pos[x]), str(lhs.neg[x])],
            "rhs": [str(rhs.pos[x]), str(rhs.neg[x])],
        }
        return TheoremReport(tid, FAIL, M.order, w, inst)
    return TheoremReport(tid, PASS, M.order, None, inst)


def _inclusion(tid, M, small: BVFSubset, big: BVFSubset, subsets) -> TheoremReport:
    inst = _instance(M, *subsets)
    x = first_excess(small, big)
    if x is None:
        return TheoremReport(tid, PASS, M.order, None, inst)
    w = {
        "element": x,
        "lhs": [str(small.pos[x]), str(small.neg[x])],
        "rhs": [str(big.pos[x]), str(big.neg[x])],
    }
    return TheoremReport(tid, FAIL, M.order, w, inst)


def _need_la(M: Magma) -> Optional[str]:
    return None if M.is_left_invertive else "not left invertive"


def _need_identity(M: Magma) -> Optional[str]:
    if not M.is_left_invertive:
        return "not left invertive"
    if M.left_identity is None:
        return "no left identity"
    return None


def verify_magma_laws(M: Magma) -> list[TheoremReport]:
    out = []
    reason = _need_la(M)
    if reason:
        out.append(_na("law-medial", M, reason))
    else:
        out.append(_law_report("law-medial", M, check_law(M, "medial"), 4))
    reason = _need_identity(M)
    if reason:
        out.append(_na("law-paramedial", M, reason))
        out.append(_na("lem-l1", M, reason))
    else:
        out.append(_law_report("law-paramedial", M, check_law(M, "paramedial"), 4))
        out.append(_law_report("lem-l1", M, check_lemma_l1(M), 3))
    return out


def _law_report(tid, M, rep, arity) -> TheoremReport:
    inst = _instance(M)
    if rep.holds:
        return TheoremReport(tid, PASS, M.order**arity, None, inst)
    w = {"tuple": list(rep.witness), "values": list(rep.values)}
    return TheoremReport(tid, FAIL, M.order**arity, w, inst)


def verify_bvfs_is_la(M, B1, B2, B3) -> TheoremReport:
    tid = "prop-bvfs-la"
    reason = _need_la(M)
    if reason:
        return _na(tid, M, reason, B1, B2, B3)
    lhs = compose(M, compose(M, B1, B2), B3)
    rhs = compose(M, compose(M, B3, B2), B1)
    return _equality(tid, M, lhs, rhs, (B1, B2, B3))


def verify_medial_in_bvfs(M, B1, B2, B3, B4) -> TheoremReport:
    tid = "cor-bvfs-medial"
    reason = _need_la(M)
    if reason:
        return _na(tid, M, reason, B1, B2, B3, B4)
    lhs = compose(M, compose(M, B1, B2), compose(M, B3, B4))
    rhs = compose(M, compose(M, B1, B3), compose(M, B2, B4))
    return _equality(tid, M, lhs, rhs, (B1, B2, B3, B4))


def verify_ideal_is_subsemigroup(M, B) -> TheoremReport:
    tid = "prop-ideal-subsemigroup"
    reason = _need_la(M)
    if reason:
        return _na(tid, M, reason, B)
    if not (is_bvf_left_ideal(M, B) or is_bvf_right_ideal(M, B)):
        return _na(tid, M, "neither a left nor a right ideal", B)
    v = is_bvf_subsemigroup(M, B)
    return _verdict_report(tid, M, v, (B,), M.order**2)


def _verdict_report(tid, M, v, subsets, checked, expected=True) -> TheoremReport:
    inst = _instance(M, *subsets)
    if v.holds == expected:
        return TheoremReport(tid, PASS, checked, None, inst)
    w = v.witness.to_json(M) if v.witness is not None else {"expected": expected}
    return TheoremReport(tid, FAIL, checked, w, inst)


def verify_characterization(M, B, cls) -> TheoremReport:
    """Pointwise verdict and composition verdict must agree."""
    tid = _CHAR_IDS[cls]
    reason = _need_la(M)
    if reason:
        return _na(tid, M, reason, B)
    pointwise = PREDICATES[cls](M, B)
    composed = characterize_by_composition(M, B, cls)
    inst = _instance(M, B, pointwise=pointwise.holds)
    if pointwise.holds == composed.holds:
        return TheoremReport(tid, PASS, 1, None, inst)
    w = {
        "pointwise": pointwise.to_json(M),
        "composition": composed.to_json(M),
    }
    return TheoremReport(tid, FAIL, 1, w, inst)


def verify_product_in_meet(M, B1, B2) -> TheoremReport:
    tid = "thm-product-in-meet"
    reason = _need_la(M)
    if reason:
        return _na(tid, M, reason, B1, B2)
    if not is_bvf_right_ideal(M, B1):
        return _na(tid, M, "B1 is not a BVF right ideal", B1, B2)
    if not is_bvf_left_ideal(M, B2):
        return _na(tid, M, "B2 is not a BVF left ideal", B1, B2)
    return _inclusion(tid, M, compose(M, B1, B2), meet(B1, B2), (B1, B2))


_MEET_CLASSES = {
    "subsemigroup": is_bvf_subsemigroup,
    "left": is_bvf_left_ideal,
    "right": is_bvf_right_ideal,
    "two_sided": is_bvf_two_sided_ideal,
}


def verify_meet_closure(M, B1, B2, cls) -> TheoremReport:
    tid = "prop-meet-subsemigroup" if cls == "subsemigroup" else "prop-meet-ideal"
    if cls not in _MEET_CLASSES:
        raise ValueError(f"meet closure is stated for {sorted(_MEET_CLASSES)}, not {cls!r}")
    pred = _MEET_CLASSES[cls]
    reason = _need_la(M)
    if reason:
        return _na(tid, M, reason, B1, B2)
    if not (pred(M, B1) and pred(M, B2)):
        return _na(tid, M, f"operands are not both in class {cls}", B1, B2)
    rep = _verdict_report(tid, M, pred(M, meet(B1, B2)), (B1, B2), M.order**2)
    rep.instance["class"] = cls
    return rep


def verify_gamma_absorption(M, B) -> TheoremReport:
    tid = "lem-gamma-absorption"
    reason = _need_identity(M)
    if reason:
        return _na(tid, M, reason, B)
    if not is_bvf_left_ideal(M, B):
        return _na(tid, M, "not a BVF left ideal", B)
    return _equality(tid, M, compose(M, gamma(M.order), B), B, (B,))


def verify_characteristic_bridge(M, A, cls) -> TheoremReport:
    """Crisp class of ``A`` and BVF class of its characteristic function agree."""
    tid = "thm-char-subsemigroup" if cls == "subsemigroup" else "thm-char-ideal"
    A = tuple(sorted(set(A)))
    inst = {"magma": M.digest, "order": M.order, "subset": list(A), "class": cls}
    reason = _need_la(M)
    if reason:
        return TheoremReport(tid, NOT_APPLICABLE, 0, None, inst, reason)
    crisp = classify_crisp(M, A)[cls]
    fuzzy = PREDICATES[cls](M, characteristic(M.order, A))
    if crisp.holds == fuzzy.holds:
        return TheoremReport(tid, PASS, 1, None, inst)
    w = {
        "crisp": {"holds": crisp.holds, "witness": list(crisp.witness or ())},
        "characteristic": fuzzy.to_json(M),
    }
    return TheoremReport(tid, FAIL, 1, w, inst)


def verify_ideal_is_interior(M, B) -> TheoremReport:
    """Two-sided implies interior; a subset that is interior but not two-sided
    is recorded in the instance as a counterexample to the converse."""
    tid = "rem-ideal-interior"
    reason = _need_la(M)
    if reason:
        return _na(tid, M, reason, B)
    two = is_bvf_two_sided_ideal(M, B)
    interior = is_bvf_interior_ideal(M, B)
    if not two:
        rep = _na(tid, M, "not a BVF two-sided ideal", B)
        if interior:
            rep.instance["converse_counterexample"] = {
                "subset": B.to_json(),
                "two_sided_witness": two.witness.to_json(M),
            }
        return rep
    return _verdict_report(tid, M, interior, (B,), M.order**3)


def verify_right_iff_interior(M, B) -> TheoremReport:
    tid = "prop-right-iff-interior"
    reason = _need_identity(M)
    if reason:
        return _na(tid, M, reason, B)
    right = is_bvf_right_ideal(M, B)
    interior = is_bvf_interior_ideal(M, B)
    inst = _instance(M, B, right=right.holds, interior=interior.holds)
    if right.holds == interior.holds:
        return TheoremReport(tid, PASS, M.order**3, None, inst)
    w = {"right": right.to_json(M), "interior": interior.to_json(M)}
    return TheoremReport(tid, FAIL, M.order**3, w, inst)


def verify_left_interior_implies_bi(M, B) -> TheoremReport:
    tid = "thm-left-ideal-bi"
    reason = _need_identity(M)
    if reason:
        return _na(tid, M, reason, B)
    if not is_bvf_left_ideal(M, B):
        return _na(tid, M, "not a BVF left ideal", B)
    rep = _verdict_report(tid, M, is_bvf_bi_ideal(M, B), (B,), M.order**3)
    rep.note = NOTES[tid]
    return rep


# -- hypothesis-satisfying random inputs -------------------------------------

_RULES = {
    "subsemigroup": kernels.RULE_SUB,
    "left": kernels.RULE_LEFT,
    "right": kernels.RULE_RIGHT,
    "two_sided": kernels.RULE_LEFT | kernels.RULE_RIGHT,
    "generalized_bi": kernels.RULE_GEN_BI,
    "bi": kernels.RULE_SUB | kernels.RULE_GEN_BI,
    "interior": kernels.RULE_INTERIOR,
}


def close_under(M: Magma, B: BVFSubset, cls: str) -> BVFSubset:
    """Smallest subset above ``B`` (in the bipolar order) satisfying ``cls``.

    Raises positive degrees of products and lowers negative ones until every
    defining inequality holds.  Degrees only move monotonically through values
    already in ``B``, so the fixpoint iteration terminates.
    """
    scale = B.basis
    pos, neg = B.scaled(scale)
    pos, neg = kernels.close(M.flat, M.order, _RULES[cls], pos, neg)
    return BVFSubset.from_scaled(pos, neg, scale)


def grid_subsets(n: int, q: int) -> Iterable[BVFSubset]:
    """Every subset whose degrees lie on the ``q``-grid (tiny n and q only)."""
    pos_vals = [Fraction(k, q) for k in range(q + 1)]
    neg_vals = [-v for v in pos_vals]
    for pos in product(pos_vals, repeat=n):
        for neg in product(neg_vals, repeat=n):
            yield BVFSubset(pos, neg)


def exhaustive_regime(n: int, q: int) -> bool:
    return n <= 2 and q <= 2


# -- aggregation -------------------------------------------------------------


@dataclass
class _Tally:
    id: str
    checked: int = 0
    failure: Optional[TheoremReport] = None
    na_reasons: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def add(self, rep: TheoremReport):
        if rep.status == NOT_APPLICABLE:
            self.na_reasons[rep.note] = self.na_reasons.get(rep.note, 0) + 1
            cx = rep.instance.get("converse_counterexample")
            if cx is not None and "converse_counterexample" not in self.extra:
                self.extra["converse_counterexample"] = cx
            return
        self.checked += 1
        if rep.status == FAIL and self.failure is None:
            self.failure = rep

    def report(self, instance: dict) -> TheoremReport:
        inst = dict(instance)
        inst.update(self.extra)
        note = NOTES.get(self.id)
        if self.failure is not None:
            inst["failing_instance"] = self.failure.instance
            return TheoremReport(self.id, FAIL, self.checked, self.failure.witness, inst, note)
        if self.checked == 0:
            reasons = "; ".join(sorted(r for r in self.na_reasons if r))
            return TheoremReport(self.id, NOT_APPLICABLE, 0, None, inst, reasons or note)
        if self.na_reasons:
            inst["not_applicable_instances"] = sum(self.na_reasons.values())
        return TheoremReport(self.id, PASS, self.checked, None, inst, note)


def _unary(M, B) -> list[TheoremReport]:
    out = [verify_ideal_is_subsemigroup(M, B)]
    out += [verify_characterization(M, B, c) for c in COMPOSITION_CLASSES]
    out.append(verify_gamma_absorption(M, B))
    out.append(verify_ideal_is_interior(M, B))
    out.append(verify_right_iff_interior(M, B))
    out.append(verify_left_interior_implies_bi(M, B))
    return out


def _fixture_reports(M, B) -> list[TheoremReport]:
    G = gamma(M.order)
    out = _unary(M, B)
    out.append(verify_bvfs_is_la(M, B, B, G))
    out.append(verify_bvfs_is_la(M, B, G, B))
    out.append(verify_medial_in_bvfs(M, B, G, B, G))
    out.append(verify_product_in_meet(M, B, B))
    for cls in _MEET_CLASSES:
        out.append(verify_meet_closure(M, B, B, cls))
        out.append(verify_meet_closure(M, B, G, cls))
    return out


def _sample_reports(M, rnd: Sequence[BVFSubset]) -> list[TheoremReport]:
    R0, R1, R2, R3 = rnd
    closed = {c: close_under(M, R0, c) for c in _RULES}
    L2 = close_under(M, R1, "left")
    Rt1 = close_under(M, R2, "right")
    Rt2 = close_under(M, R3, "right")
    S2 = close_under(M, R1, "subsemigroup")
    T2 = close_under(M, R1, "two_sided")
    out = [
        verify_bvfs_is_la(M, R0, R1, R2),
        verify_medial_in_bvfs(M, R0, R1, R2, R3),
        verify_product_in_meet(M, Rt1, closed["left"]),
        verify_product_in_meet(M, closed["right"], L2),
        verify_meet_closure(M, closed["subsemigroup"], S2, "subsemigroup"),
        verify_meet_closure(M, closed["left"], L2, "left"),
        verify_meet_closure(M, Rt1, Rt2, "right"),
        verify_meet_closure(M, closed["two_sided"], T2, "two_sided"),
    ]
    for B in (R0, closed["left"], Rt1):
        out.append(verify_ideal_is_subsemigroup(M, B))
    for c in COMPOSITION_CLASSES:
        out.append(verify_characterization(M, R0, c))
        out.append(verify_characterization(M, closed[c], c))
    out.append(verify_gamma_absorption(M, closed["left"]))
    for B in (R0, closed["two_sided"], closed["interior"]):
        out.append(verify_ideal_is_interior(M, B))
    for B in (R0, closed["right"], closed["interior"]):
        out.append(verify_right_iff_interior(M, B))
    out.append(verify_left_interior_implies_bi(M, closed["left"]))
    return out


def run_all(
    M: Magma,
    fixtures: Sequence[BVFSubset] = (),
    seed: int = 0,
    samples: int = 0,
    q: int = DEFAULT_Q,
) -> list[TheoremReport]:
    """Every verifier over ``fixtures`` plus ``samples`` seeded random subsets.

    With no fixtures and no samples there is nothing to check and the result
    is empty.  In the exhaustive regime (``n <= 2`` and ``q <= 2``) unary
    results run over every grid subset instead of random ones.  The output
    has one report per theorem id, in registry order, and depends only on
    the arguments.
    """
    for B in fixtures:
        if B.order != M.order:
            raise ValueError(f"fixture has order {B.order}, magma has {M.order}")
    if not fixtures and samples <= 0:
        return []
    regime = "exhaustive" if exhaustive_regime(M.order, q) and samples > 0 else "random"
    tallies = {tid: _Tally(tid) for tid in THEOREMS}

    def feed(reports):
        for rep in reports:
            tallies[rep.id].add(rep)

    feed(verify_magma_laws(M))
    for A in _nonempty_subsets(M.order):
        for cls in ("subsemigroup", "left", "right"):
            feed([verify_characteristic_bridge(M, A, cls)])
    for B in fixtures:
        feed(_fixture_reports(M, B))
    if samples > 0:
        rng = random.Random(f"{seed}:{M.digest}")
        for _ in range(samples):
            rnd = [random_bvf(M.order, q, rng) for _ in range(4)]
            feed(_sample_reports(M, rnd))
        if regime == "exhaustive":
            for B in grid_subsets(M.order, q):
                feed(_unary(M, B))
    instance = {
        "magma": M.digest,
        "order": M.order,
        "fixtures": [B.digest for B in fixtures],
        "seed": seed,
        "samples": samples,
        "q": q,
        "regime": regime,
    }
    return [tallies[tid].report(instance) for tid in THEOREMS]


def _nonempty_subsets(n: int):
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


def _run_one(args):
    M, fixtures, seed, samples, q = args
    return run_all(M, fixtures, seed, samples, q)


def run_family(
    magmas: Sequence[Magma],
    seed: int = 0,
    samples: int = 1000,
    q: int = DEFAULT_Q,
    workers: Optional[int] = None,
) -> list[list[TheoremReport]]:
    """``run_all`` over many magmas; results come back in input order.

    ``workers`` defaults to ``BVFLA_THREADS`` (or 1).
    """
    if workers is None:
        workers = int(os.environ.get("BVFLA_THREADS", "1") or 1)
    jobs = [(M, (), seed, samples, q) for M in magmas]
    if workers <= 1 or len(jobs) <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))


def summarize(reports: Iterable[TheoremReport]) -> dict[str, str]:
    return {r.id: r.status for r in reports}


def check_hypotheses(M: Magma, need_identity=False) -> None:
    """Raise :class:`PreconditionError` unless ``M`` meets the stated hypotheses."""
    reason = _need_identity(M) if need_identity else _need_la(M)
    if reason:
        raise PreconditionError(reason)


__all__ = [
    "THEOREMS",
    "TheoremReport",
    "check_hypotheses",
    "close_under",
    "run_all",
    "run_family",
    "verify_bvfs_is_la",
    "verify_characteristic_bridge",
    "verify_characterization",
    "verify_gamma_absorption",
    "verify_ideal_is_interior",
    "verify_ideal_is_subsemigroup",
    "verify_left_interior_implies_bi",
    "verify_magma_laws",
    "verify_medial_in_bvfs",
    "verify_meet_closure",
    "verify_product_in_meet",
    "verify_right_iff_interior",
]
