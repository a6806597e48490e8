"""Random BVF subsets and separating-example search."""

from __future__ import annotations

import ast
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bvf import BVFSubset, gamma
from .census import EnumerationTask, enumerate_magmas
from .errors import TargetSyntaxError
from .ideals import CLASSES, PREDICATES, Classification, classify
from .magma import Magma

DEFAULT_Q = 10
DEFAULT_MAX_TRIALS = 100_000


def random_bvf(n: int, q: int = DEFAULT_Q, seed=0) -> BVFSubset:
    """Degrees drawn uniformly from ``{0, 1/q, ..., 1}`` and its negation."""
    if q < 1:
        raise ValueError("q must be positive")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pos = tuple(Fraction(rng.randint(0, q), q) for _ in range(n))
    neg = tuple(Fraction(-rng.randint(0, q), q) for _ in range(n))
    return BVFSubset(pos, neg)


_ALIASES = {f"bvf_{c}": c for c in CLASSES}
_ALIASES.update({
    "two_sided_ideal": "two_sided", "ideal": "two_sided",
    "left_ideal": "left", "right_ideal": "right",
    "bi_ideal": "bi", "interior_ideal": "interior",
    "generalized_bi_ideal": "generalized_bi",
})


def parse_target(text: str):
    """Compile a boolean formula over classification flags.

    Accepts ``& ∧ and``, ``| ∨ or``, ``! ¬ ~ not`` and parentheses.  Returns
    ``(expression, names)``; evaluate with :func:`eval_target`.
    """
    src = text
    for sym, word in (("∧", " and "), ("&&", " and "), ("&", " and "),
                      ("∨", " or "), ("||", " or "), ("|", " or "),
                      ("¬", " not "), ("!", " not "), ("~", " not ")):
        src = src.replace(sym, word)
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError:
        raise TargetSyntaxError(f"cannot parse target {text!r}") from None
    names = []

    def walk(node):
        if isinstance(node, ast.BoolOp) and isinstance(node.op, (ast.And, ast.Or)):
            return (type(node.op).__name__.lower(), [walk(v) for v in node.values])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            return ("not", [walk(node.operand)])
        if isinstance(node, ast.Name):
            name = _ALIASES.get(node.id, node.id)
            if name not in CLASSES:
                raise TargetSyntaxError(f"unknown class {node.id!r} in target")
            names.append(name)
            return ("flag", name)
        raise TargetSyntaxError(f"unsupported construct in target {text!r}")

    return walk(tree.body), tuple(dict.fromkeys(names))


def eval_target(expr, flag) -> bool:
    """Evaluate with ``flag(name) -> bool``; only the flags needed are queried."""
    kind, arg = expr
    if kind == "flag":
        return flag(arg)
    if kind == "not":
        return not eval_target(arg[0], flag)
    if kind == "and":
        return all(eval_target(e, flag) for e in arg)
    return any(eval_target(e, flag) for e in arg)


@dataclass
class SearchSpec:
    target: str
    orders: Sequence[int] = (4,)
    q: int = DEFAULT_Q
    seed: int = 0
    max_trials: int = DEFAULT_MAX_TRIALS
    up_to_isomorphism: bool = True
    expr: tuple = field(init=False, repr=False)

    def __post_init__(self):
        self.expr, _ = parse_target(self.target)
        if self.q < 1 or self.max_trials < 1:
            raise ValueError("q and max_trials must be positive")
        if not self.orders or min(self.orders) < 1:
            raise ValueError("orders must be a nonempty list of positive integers")


@dataclass(frozen=True)
class SearchHit:
    magma: Magma
    subset: BVFSubset
    classification: Classification
    trial: int


@dataclass(frozen=True)
class SearchResult:
    hit: Optional[SearchHit]
    trials: int
    magmas: int


def search(spec: SearchSpec) -> SearchResult:
    """Look for a magma and subset whose classification satisfies the target.

    Trial 0 tries the whole-carrier subset on the first magma; trial ``k``
    after that pairs magma ``k mod m`` with a random subset seeded from
    ``(seed, k)``, so the result depends only on the spec.
    """
    magmas = []
    for n in sorted(set(spec.orders)):
        magmas.extend(enumerate_magmas(EnumerationTask(n, up_to_isomorphism=spec.up_to_isomorphism)).magmas)
    for trial in range(spec.max_trials):
        M = magmas[trial % len(magmas)]
        if trial == 0:
            B = gamma(M.order)
        else:
            B = random_bvf(M.order, spec.q, f"{spec.seed}:{trial}")
        cache = {}

        def flag(name, M=M, B=B, cache=cache):
            if name not in cache:
                cache[name] = PREDICATES[name](M, B).holds
            return cache[name]

        if eval_target(spec.expr, flag):
            return SearchResult(SearchHit(M, B, classify(M, B), trial), trial + 1, len(magmas))
    return SearchResult(None, spec.max_trials, len(magmas))
