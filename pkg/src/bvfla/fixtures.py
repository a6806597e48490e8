"""The two worked examples on four elements, as tables and BVF subsets."""

from __future__ import annotations

import json
import os
from fractions import Fraction as F

from .bvf import BVFSubset
from .magma import Magma

NAMES = ("a", "b", "c", "d")

# x*y with a=0, b=1, c=2, d=3
EXAMPLE31_TABLE = (
    (1, 3, 2, 0),
    (0, 1, 2, 3),
    (2, 2, 2, 2),
    (3, 0, 2, 1),
)

EXAMPLE32_TABLE = (
    (2, 2, 2, 3),
    (3, 3, 2, 2),
    (3, 3, 3, 3),
    (3, 3, 3, 3),
)

EXAMPLE31_BVF = BVFSubset(
    (F(1, 5), F(1, 5), F(7, 10), F(1, 5)),
    (F(-1, 2), F(-1, 2), F(-4, 5), F(-1, 2)),
)

EXAMPLE32_BVF = BVFSubset(
    (F(1, 2), F(3, 10), F(1, 10), F(4, 5)),
    (F(-7, 10), F(-2, 5), F(-1, 5), F(-9, 10)),
)


def example31() -> tuple[Magma, BVFSubset]:
    return Magma(EXAMPLE31_TABLE, NAMES), EXAMPLE31_BVF


def example32() -> tuple[Magma, BVFSubset]:
    return Magma(EXAMPLE32_TABLE, NAMES), EXAMPLE32_BVF


def bvf_text(B: BVFSubset) -> str:
    return json.dumps(B.to_json(), sort_keys=True) + "\n"


def golden_files() -> dict[str, str]:
    """File name -> exact file contents."""
    out = {}
    for stem, (M, B) in (("example31", example31()), ("example32", example32())):
        out[f"{stem}.tbl"] = M.to_text()
        out[f"{stem}.bvf.json"] = bvf_text(B)
    return out


def write_fixtures(directory) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, text in golden_files().items():
        path = os.path.join(directory, name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        written.append(path)
    return written
