import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from bvfla.errors import PreconditionError, TableFormatError
from bvfla.magma import (
    LAWS,
    Magma,
    check_law,
    check_lemma_l1,
    classify_crisp,
    find_left_identity,
    parse_table,
    sampled_law_check,
)
from conftest import la_magma_strategy

A, B, C, D = range(4)


def test_example31_laws(ex31):
    M, _ = ex31
    assert M.is_left_invertive
    assert check_law(M, "medial").holds
    assert check_law(M, "paramedial").holds
    assert check_lemma_l1(M).holds
    assoc = check_law(M, "associative", at=(D, B, A))
    assert not assoc.holds
    assert assoc.witness == (D, B, A)
    # d(ba) = d and (db)a = b
    assert assoc.values == (D, B)
    assert find_left_identity(M) == B


def test_example32_laws(ex32):
    M, _ = ex32
    assert M.is_left_invertive
    assert M.left_identity is None
    rep = check_law(M, "associative", at=(A, A, B))
    assert rep.witness == (A, A, B)
    # a(ab) = c and (aa)b = d
    assert rep.values == (C, D)


def test_default_witness_is_first_row_major(ex31):
    M, _ = ex31
    rep = check_law(M, "associative")
    assert rep.witness == (A, A, A)
    # a preferred tuple where the law holds is ignored
    assert check_law(M, "associative", at=(B, B, B)).witness == (A, A, A)


def test_lemma_preconditions(ex32):
    M, _ = ex32
    with pytest.raises(PreconditionError, match="no-left-identity"):
        check_lemma_l1(M)
    bad = Magma(((0, 0), (1, 0)))
    assert not bad.is_left_invertive
    with pytest.raises(PreconditionError, match="not-left-invertive"):
        check_lemma_l1(bad)


def test_integer_window():
    assert sampled_law_check("b-a", (-5, 5), "left_invertive").holds
    assoc = sampled_law_check("b-a", (-5, 5), "associative")
    assert assoc.witness == (-5, -5, -5)
    comm = sampled_law_check("b-a", (-5, 5), "commutative")
    assert comm.witness == (-5, -4)
    with pytest.raises(ValueError):
        sampled_law_check("b-a", (1, 0), "associative")


def test_parse_labels_and_indices(ex31, fixture_dir):
    M, _ = ex31
    text = "4\n# a b c d\nb d c a\na b c d\nc c c c\nd a c b\n"
    assert parse_table(text) == M
    idx = "4\n1 3 2 0\n0 1 2 3\n2 2 2 2\n3 0 2 1\n"
    assert parse_table(idx).table == M.table
    assert parse_table("\n\n" + idx + "\n").table == M.table
    assert parse_table(M.to_text()) == M


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("2\n0 1\n1\n", 3, None),
        ("2\n0 2\n1 0\n", 2, 3),
        ("2\n# a b\na c\nb a\n", 3, 3),
        ("2\n# a a\na b\nb a\n", 2, None),
        ("2\n# a\na b\nb a\n", 2, None),
        ("x\n", 1, 1),
        ("2\n0 1\n", None, None),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(TableFormatError) as info:
        parse_table(text)
    if line is not None:
        assert info.value.line == line
    if column is not None:
        assert info.value.column == column


def test_magma_validation():
    with pytest.raises(ValueError):
        Magma(((0, 2), (1, 0)))
    with pytest.raises(ValueError):
        Magma(((0,), (0, 0)))
    with pytest.raises(ValueError):
        Magma(((0, 0), (0, 0)), names=("a", "a"))


@given(la_magma_strategy((1, 2, 3)))
def test_la_magmas_satisfy_medial(M):
    assert check_law(M, "medial").holds
    if M.left_identity is not None:
        assert check_law(M, "paramedial").holds
        assert check_lemma_l1(M).holds


@given(st.lists(st.integers(0, 2), min_size=9, max_size=9), st.sampled_from(sorted(LAWS)))
def test_witness_soundness(flat, law):
    M = Magma.from_flat(flat)
    rep = check_law(M, law)
    if rep.holds:
        return
    _, lhs, rhs = LAWS[law]
    assert lhs(M.op, *rep.witness) != rhs(M.op, *rep.witness)
    assert rep.values == (lhs(M.op, *rep.witness), rhs(M.op, *rep.witness))


@given(st.lists(st.integers(0, 2), min_size=9, max_size=9))
def test_left_invertive_matches_oracle(flat):
    M = Magma.from_flat(flat)
    assert M.is_left_invertive == oracles.is_left_invertive([list(r) for r in M.table])


@given(la_magma_strategy((1, 2, 3)), st.data())
def test_relabel_preserves_laws(M, data):
    perm = data.draw(st.permutations(range(M.order)))
    N = M.relabel(perm)
    for law in LAWS:
        assert check_law(N, law).holds == check_law(M, law).holds


def test_crisp_examples(ex32):
    M, _ = ex32
    c = classify_crisp(M, [C])
    assert not c.right.holds
    assert c.right.witness == (C, A)
    d = classify_crisp(M, [C, D])
    assert d.two_sided.holds


@given(la_magma_strategy((1, 2, 3)), st.data())
def test_crisp_matches_oracle(M, data):
    A_ = data.draw(st.sets(st.integers(0, M.order - 1), min_size=1))
    t = [list(r) for r in M.table]
    c = classify_crisp(M, A_)
    for cls in ("subsemigroup", "left", "right"):
        assert c[cls].holds == oracles.crisp(t, A_, cls)
    assert c.two_sided.holds == (c.left.holds and c.right.holds)
