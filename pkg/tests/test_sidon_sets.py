import random
from decimal import Decimal
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from sidonspaces.acceptance import _r_constructions
from sidonspaces.constructions import bose_sidon_set, construct
from sidonspaces.errors import BudgetExceeded, VerificationFailure
from sidonspaces.field_tower import build_ctx
from sidonspaces.sidon_sets import (bose_record, density_report, extract_br_set,
                                    extract_sidon_set, is_br_set)
from sidonspaces.subspaces import subfield_space


def naive_br(elements, m, r):
    sums = [sum(c) % m if m else sum(c)
            for c in combinations_with_replacement(sorted(elements), r)]
    return len(sums) == len(set(sums))


def test_small_examples():
    assert is_br_set([0, 1, 3, 7], 0) == (True, None)
    ok, witness = is_br_set([0, 1, 2], 0)
    assert not ok and witness == ((0, 2), (1, 1))
    assert is_br_set([0, 1, 3], 7)[0]
    assert not is_br_set([0, 1, 3, 5], 7)[0]
    assert is_br_set([0, 1, 5], 0, 3)[0]
    assert not is_br_set([0, 1, 2], 0, 3)[0]


@settings(max_examples=150, deadline=None)
@given(st.sets(st.integers(0, 60), max_size=7), st.integers(0, 40), st.integers(2, 4))
def test_matches_naive(elements, m, r):
    assert is_br_set(elements, m, r)[0] == naive_br(elements, m, r)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(0, 50), max_size=6), st.integers(1, 40))
def test_modular_implies_integer(elements, m):
    elements = {x % m for x in elements}
    if is_br_set(elements, m)[0]:
        assert is_br_set(elements, 0)[0]


def test_witness_has_equal_sums():
    rng = random.Random(4)
    for _ in range(50):
        S = rng.sample(range(30), 6)
        ok, w = is_br_set(S, 31, 3)
        if not ok:
            assert w[0] != w[1] and sum(w[0]) % 31 == sum(w[1]) % 31


@pytest.mark.parametrize("q,k", [(3, 2), (3, 3), (4, 2), (5, 2), (7, 2)])
def test_extract_from_c2(q, k):
    rec = extract_sidon_set(construct("C2", q, k=k).space)
    assert rec.m == (q ** (2 * k) - 1) // (q - 1)
    assert len(rec.elements) == (q ** k - 1) // (q - 1)
    assert rec.verified and naive_br(rec.elements, rec.m, 2)


def test_extract_rejects_non_sidon():
    ctx = build_ctx(2, 1, 2, 4)
    with pytest.raises(VerificationFailure):
        extract_sidon_set(subfield_space(ctx, 2))


def test_br_from_r_sidon():
    for cid, q, k, r in _r_constructions():
        con = construct(cid, q, k=k, r=r)
        rec = extract_br_set(con.space, r)
        assert rec.r == r and naive_br(rec.elements, rec.m, r)


@pytest.mark.parametrize("qp", [2, 3, 4, 5, 7, 8, 9])
def test_bose(qp):
    S = bose_sidon_set(qp)
    assert len(S) == qp and len(set(S)) == qp
    assert all(0 <= x < qp * qp - 1 for x in S)
    assert naive_br(S, qp * qp - 1, 2)
    assert bose_record(qp).verified


def test_density_values():
    rec = extract_sidon_set(construct("C2", 3, k=2).space)
    assert density_report(rec, 3) == (Decimal("0.632456"), Decimal("0.707107"))
    value, target = density_report(extract_sidon_set(construct("C2", 5, k=2).space), 5)
    assert value == Decimal("0.480384") and target == Decimal("0.500000")
    value, target = density_report(bose_record(5))
    assert value == Decimal("1.020621") and target is None


def test_budget(monkeypatch):
    monkeypatch.setenv("SIDON_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        is_br_set(range(5), 0)
    assert is_br_set(range(5), 0, force=True)[0] is False
