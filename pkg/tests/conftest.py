import os
import sys
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from bvfla.bvf import BVFSubset  # noqa: E402
from bvfla.census import EnumerationTask, enumerate_magmas  # noqa: E402
from bvfla.fixtures import example31, example32  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURE_DIR = os.path.join(ROOT, "fixtures")


@lru_cache(maxsize=None)
def la_magmas(n):
    return enumerate_magmas(EnumerationTask(n)).magmas


def la_magma_strategy(orders=(1, 2, 3, 4)):
    pool = [M for n in orders for M in la_magmas(n)]
    return st.sampled_from(pool)


@st.composite
def bvf_subsets(draw, n, q=None):
    """Subsets of order ``n``; degrees on a random grid ``1/q``."""
    if q is None:
        q = draw(st.sampled_from([1, 2, 3, 4, 6, 10]))
    ks = st.integers(0, q)
    pos = tuple(Fraction(draw(ks), q) for _ in range(n))
    neg = tuple(Fraction(-draw(ks), q) for _ in range(n))
    return BVFSubset(pos, neg)


@st.composite
def magma_and_subsets(draw, k=1, orders=(1, 2, 3, 4)):
    M = draw(la_magma_strategy(orders))
    q = draw(st.sampled_from([1, 2, 3, 5, 10]))
    return (M,) + tuple(draw(bvf_subsets(M.order, q)) for _ in range(k))


@pytest.fixture
def ex31():
    return example31()


@pytest.fixture
def ex32():
    return example32()


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
