"""Enumeration of left-invertive tables and isomorphism rejection."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Optional

from . import kernels
from .magma import Magma

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class EnumerationTask:
    order: int
    require_left_identity: bool = False
    up_to_isomorphism: bool = False
    budget: Optional[int] = DEFAULT_BUDGET

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if self.budget is not None and self.budget <= 0:
            raise ValueError("budget must be positive")


@dataclass(frozen=True)
class Census:
    task: EnumerationTask
    magmas: tuple[Magma, ...]
    nodes: int
    budget_exhausted: bool

    def __iter__(self):
        return iter(self.magmas)

    def __len__(self):
        return len(self.magmas)

    def header(self) -> dict:
        return {
            "order": self.task.order,
            "count": len(self.magmas),
            "up_to_isomorphism": self.task.up_to_isomorphism,
            "require_left_identity": self.task.require_left_identity,
            "budget": self.task.budget,
            "budget_exhausted": self.budget_exhausted,
            "nodes": self.nodes,
        }

    def dumps(self) -> str:
        lines = [json.dumps(self.header(), sort_keys=True)]
        lines.extend(M.to_line() for M in self.magmas)
        return "\n".join(lines) + "\n"


def canonicalize(M: Magma) -> Magma:
    """The lexicographically least relabeling of ``M`` (names are dropped)."""
    return Magma.from_flat(kernels.canonical_form(M.flat, M.order))


def enumerate_magmas(task: EnumerationTask) -> Census:
    """All order-n left-invertive tables, optionally with a left identity and
    one canonical representative per isomorphism class.

    Labeled output is in lexicographic table order; canonical output is
    sorted.  If the node budget runs out the census is partial and flagged.
    """
    flats, nodes, exhausted = kernels.enumerate_tables(task.order, task.budget or 0)
    n = task.order
    if task.require_left_identity:
        ident = tuple(range(n))
        flats = [f for f in flats if any(f[e * n:(e + 1) * n] == ident for e in range(n))]
    if task.up_to_isomorphism:
        flats = sorted({kernels.canonical_form(f, n) for f in flats})
    return Census(task, tuple(Magma.from_flat(f) for f in flats), nodes, exhausted)


def iter_magmas(task: EnumerationTask) -> Iterable[Magma]:
    yield from enumerate_magmas(task).magmas


def automorphism_count(M: Magma) -> int:
    n = M.order
    return sum(1 for p in permutations(range(n)) if M.relabel(p).table == M.table)


def orbit_size(M: Magma) -> int:
    """Number of distinct labeled tables isomorphic to ``M``."""
    return factorial(M.order) // automorphism_count(M)


def parse_census(text: str) -> tuple[dict, list[Magma]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = json.loads(lines[0])
    magmas = []
    for ln in lines[1:]:
        rows = [tuple(int(v) for v in part.split()) for part in ln.split("/")]
        magmas.append(Magma(tuple(rows)))
    return header, magmas

