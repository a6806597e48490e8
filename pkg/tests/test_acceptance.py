"""Acceptance criteria, one test each, with their runtime limits.

Every criterion records a PASS/FAIL line that is printed in the terminal
summary (see ``conftest.pytest_terminal_summary``), so a plain ``pytest``
run shows the full table.
"""

import json
import os
import re
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

import oracles
from bvfla.bvf import characteristic
from bvfla.census import EnumerationTask, enumerate_magmas
from bvfla.cli import main
from bvfla.ideals import PREDICATES
from bvfla.magma import classify_crisp
from bvfla.search import SearchSpec, search
from bvfla.theorems import FAIL, NOT_APPLICABLE, run_family

RESULTS = []

IDENTITY_ONLY = {"law-paramedial", "lem-l1", "lem-gamma-absorption",
                 "prop-right-iff-interior", "thm-left-ideal-bi"}
CHAR_IDS = {"lem-char-subsemigroup", "lem-char-left", "lem-char-right",
            "lem-char-generalized-bi", "lem-char-bi", "lem-char-interior"}


@contextmanager
def criterion(name, limit_s, already=0.0):
    """Time the body (plus ``already`` seconds spent in shared setup)."""
    start = time.perf_counter()
    ok = False
    elapsed = already
    try:
        yield
        ok = True
    finally:
        elapsed = already + time.perf_counter() - start
        within = elapsed < limit_s
        status = "PASS" if ok and within else "FAIL"
        note = "" if within else f" over the {limit_s:g}s limit"
        RESULTS.append(f"{status}  {name}  ({elapsed:.2f}s, limit {limit_s:g}s){note}")
    assert within, f"{name}: {elapsed:.2f}s exceeds {limit_s}s"


def cli_json(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def fx(fixture_dir, name):
    return os.path.join(fixture_dir, name)


def test_example31_laws(capsys, fixture_dir):
    with criterion("example 3.1 laws: left invertive, not associative at (d,b,a), left identity b", 1):
        code, rep = cli_json(capsys, "laws", fx(fixture_dir, "example31.tbl"),
                             "--at", "associative=d,b,a", "--json")
        assert code == 0
        assert rep["laws"]["left_invertive"]["holds"] is True
        w = rep["laws"]["associative"]["witness"]
        assert rep["laws"]["associative"]["holds"] is False
        assert w["labels"] == ["d", "b", "a"]
        # d(ba) = d, (db)a = b
        assert w["value_labels"] == ["d", "b"]
        assert rep["left_identity"]["label"] == "b"


def test_example31_classify(capsys, fixture_dir):
    with criterion("example 3.1 classify: all seven classes hold", 1):
        code, rep = cli_json(capsys, "classify", fx(fixture_dir, "example31.tbl"),
                             fx(fixture_dir, "example31.bvf.json"), "--json")
        assert code == 0
        assert len(rep["classes"]) == 7
        assert all(v["holds"] for v in rep["classes"].values())


def test_example32_interior_not_right(capsys, fixture_dir):
    with criterion("example 3.2: interior, not right at (b,c) with 1/10 < 3/10 and -1/5 > -2/5", 1):
        code, rep = cli_json(capsys, "classify", fx(fixture_dir, "example32.tbl"),
                             fx(fixture_dir, "example32.bvf.json"), "--at", "right=b,c", "--json")
        assert code == 0
        c = rep["classes"]
        assert c["interior"]["holds"] is True
        assert c["right"]["holds"] is False
        w = c["right"]["witness"]
        assert w["labels"] == ["b", "c"]
        assert w["pos"] == ["1/10", "3/10"]
        assert w["neg"] == ["-1/5", "-2/5"]


@pytest.fixture(scope="module")
def family_run():
    """Every left-invertive table of order 1..3 with 1000 seeded subsets each."""
    start = time.perf_counter()
    magmas = [M for n in (1, 2, 3) for M in enumerate_magmas(EnumerationTask(n)).magmas]
    reports = run_family(magmas, seed=2024, samples=1000)
    return magmas, reports, time.perf_counter() - start


def test_theorem_suite(family_run):
    magmas, reports, elapsed = family_run
    with criterion("theorem suite: order <= 3, 1000 subsets each, zero failures", 300, elapsed):
        assert len(magmas) == 112
        for M, reps in zip(magmas, reports):
            for r in reps:
                assert r.status != FAIL, (M.table, r.to_json())
                if r.status == NOT_APPLICABLE:
                    # only hypotheses that genuinely fail
                    assert r.id in IDENTITY_ONLY and M.left_identity is None, (M.table, r.id)
                else:
                    assert r.checked > 0
        assert all(r.instance["samples"] == 1000 for reps in reports for r in reps)


def test_characterization_equivalence(family_run):
    magmas, reports, elapsed = family_run
    # same instance family as the theorem suite, so the same run is timed
    with criterion("characterization: pointwise and composition verdicts agree, six classes", 300, elapsed):
        for reps in reports:
            char = {r.id: r for r in reps if r.id in CHAR_IDS}
            assert set(char) == CHAR_IDS
            for r in char.values():
                assert r.status == "pass" and r.checked >= 1000


def test_characteristic_bridge():
    with criterion("characteristic bridge: crisp class iff BVF class, exhaustive to order 3", 60):
        checked = 0
        for n in (1, 2, 3):
            for M in enumerate_magmas(EnumerationTask(n)).magmas:
                t = [list(r) for r in M.table]
                for k in range(1, n + 1):
                    for A in combinations(range(n), k):
                        crisp_all = classify_crisp(M, A)
                        chi = characteristic(n, A)
                        for cls in ("subsemigroup", "left", "right", "two_sided"):
                            crisp = crisp_all[cls].holds
                            assert crisp == PREDICATES[cls](M, chi).holds, (M.table, A, cls)
                            if cls in ("subsemigroup", "left", "right"):
                                assert crisp == oracles.crisp(t, A, cls)
                            checked += 1
        assert checked == 4 * (1 * 1 + 6 * 3 + 105 * 7)


def test_enumeration_oracle():
    with criterion("enumeration: orders 2 and 3 match generate-and-filter (6 and 105)", 10):
        for n, locked in ((2, 6), (3, 105)):
            brute = oracles.count_left_invertive(n)
            assert brute == locked
            assert len(enumerate_magmas(EnumerationTask(n))) == brute


def test_search_interior_not_two_sided():
    with criterion("search: interior and not two-sided found on order 4 within 1e5 trials", 60):
        result = search(SearchSpec("interior ∧ ¬two_sided", orders=(4,), seed=7, max_trials=100_000))
        assert result.hit is not None
        flags = result.hit.classification.flags()
        assert flags["interior"] and not flags["two_sided"]


def test_exactness():
    with criterion("exactness: zero inexact-comparison parameters in the test code", 1):
        here = os.path.dirname(os.path.abspath(__file__))
        words = ["appr" + "ox", "is" + "close", "at" + "ol", "rt" + "ol", "tol" + "erance",
                 "rel" + "=", "ab" + "s=", "eps" + "ilon", "flo" + "at("]
        pattern = re.compile("|".join(re.escape(w) for w in words))
        offenders = []
        for name in sorted(os.listdir(here)):
            if name.endswith(".py"):
                with open(os.path.join(here, name), encoding="utf-8") as fh:
                    for i, line in enumerate(fh, 1):
                        if pattern.search(line):
                            offenders.append(f"{name}:{i}")
        assert offenders == []
