"""Kernel backend selection.

The compiled core (``_ckernels``) is used when it imports; otherwise the
pure-Python twin.  Set ``BVFLA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("BVFLA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

# compiled core is limited to small fixed-size buffers
MAX_COMPILED_ORDER = 8

LEFT_INVERTIVE = _pykernels.LEFT_INVERTIVE
MEDIAL = _pykernels.MEDIAL
PARAMEDIAL = _pykernels.PARAMEDIAL
ASSOCIATIVE = _pykernels.ASSOCIATIVE
COMMUTATIVE = _pykernels.COMMUTATIVE
LEMMA_L1 = _pykernels.LEMMA_L1

SUBSEMIGROUP = _pykernels.SUBSEMIGROUP
LEFT = _pykernels.LEFT
RIGHT = _pykernels.RIGHT
GEN_BI_XZ = _pykernels.GEN_BI_XZ
GEN_BI_XY = _pykernels.GEN_BI_XY
INTERIOR = _pykernels.INTERIOR

RULE_SUB = _pykernels.RULE_SUB
RULE_LEFT = _pykernels.RULE_LEFT
RULE_RIGHT = _pykernels.RULE_RIGHT
RULE_GEN_BI = _pykernels.RULE_GEN_BI
RULE_INTERIOR = _pykernels.RULE_INTERIOR


def _pick(n):
    if BACKEND == "cython" and n <= MAX_COMPILED_ORDER:
        return _impl
    return _pykernels


def law_failure(table, n, law):
    return _pick(n).law_failure(table, n, law)


def compose(table, n, pos1, neg1, pos2, neg2):
    return _pick(n).compose(table, n, pos1, neg1, pos2, neg2)


def violation(table, n, kind, pos, neg):
    return _pick(n).violation(table, n, kind, pos, neg)


def close(table, n, rules, pos, neg):
    return _pick(n).close(table, n, rules, pos, neg)


def enumerate_tables(n, budget=0):
    return _pick(n).enumerate_tables(n, budget)


def canonical_form(table, n):
    return _pick(n).canonical_form(table, n)
