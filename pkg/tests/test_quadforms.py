import random
from collections import Counter
from fractions import Fraction

import pytest

from sidonspaces.errors import ParameterError
from sidonspaces.field_tower import ScalarField, build_ctx, ctx_for_q
from sidonspaces.linalg import rank
from sidonspaces.quadforms import (
    QuadraticForm, all_forms, count_forms_of_rank, count_full_rank, count_roots_bruteforce,
    count_roots_formula, max_span_fraction_bound, qf_rank, qf_rank_bruteforce,
    qf_rank_by_invariance)

GF4 = ctx_for_q(4, 1, 2).scalars


def form(F, k, **terms):
    return QuadraticForm.from_dict(F, k, {(int(key[1]), int(key[2])): v for key, v in terms.items()})


def random_invertible(F, k, rng):
    while True:
        P = [[rng.randrange(F.q) for _ in range(k)] for _ in range(k)]
        if rank(P, F) == k:
            return P


def test_examples():
    F2, F3 = ScalarField(2), ScalarField(3)
    assert qf_rank(form(F2, 2)) == 0
    assert qf_rank(form(F2, 2, a00=1)) == 1
    assert qf_rank(form(F2, 2, a10=1)) == 2
    assert qf_rank(form(F2, 2, a00=1, a11=1)) == 1  # a perfect square in char 2
    assert qf_rank(form(F2, 2, a00=1, a10=1, a11=1)) == 2
    assert qf_rank(form(F3, 2, a00=1, a11=2)) == 2
    assert qf_rank(form(F3, 3, a00=1, a10=2, a11=1)) == 1  # (x0 + x1)^2
    assert qf_rank(form(F2, 3, a00=1, a11=1, a22=1)) == 1


def test_evaluation_and_polar():
    F3 = ScalarField(3)
    Q = form(F3, 2, a00=1, a10=1, a11=2)
    assert Q((1, 1)) == (1 + 1 + 2) % 3
    assert Q.polar_matrix() == [[2, 1], [1, 1]]
    with pytest.raises(ParameterError):
        QuadraticForm.from_dict(F3, 2, {(0, 1): 1})


@pytest.mark.parametrize("F,k", [(ScalarField(2), 1), (ScalarField(2), 2), (ScalarField(2), 3),
                                 (ScalarField(3), 1), (ScalarField(3), 2), (GF4, 1)])
def test_rank_against_gl_scan(F, k):
    for Q in all_forms(F, k):
        assert qf_rank(Q) == qf_rank_bruteforce(Q)


@pytest.mark.parametrize("F,k", [(ScalarField(3), 3), (GF4, 2), (ScalarField(5), 2)])
def test_rank_against_invariance(F, k):
    rng = random.Random(k * F.q)
    forms = list(all_forms(F, k))
    for Q in rng.sample(forms, min(len(forms), 300)):
        assert qf_rank(Q) == qf_rank_by_invariance(Q)


@pytest.mark.parametrize("F,k", [(ScalarField(2), 3), (ScalarField(3), 3), (GF4, 2), (ScalarField(5), 3)])
def test_rank_invariant_under_substitution(F, k):
    rng = random.Random(7)
    forms = list(all_forms(F, k))
    for Q in rng.sample(forms, 60):
        P = random_invertible(F, k, rng)
        assert qf_rank(Q.substitute(P)) == qf_rank(Q)


@pytest.mark.parametrize("F,k", [(ScalarField(2), 2), (ScalarField(2), 3), (ScalarField(3), 2),
                                 (ScalarField(3), 3), (GF4, 2)])
def test_counts_by_rank(F, k):
    counts = Counter(qf_rank(Q) for Q in all_forms(F, k))
    assert counts == Counter({r: count_forms_of_rank(F.q, k, r) for r in range(k + 1)})
    assert sum(count_forms_of_rank(F.q, k, r) for r in range(k + 1)) == F.q ** (k * (k + 1) // 2)


def test_full_rank_small_values():
    assert [count_full_rank(2, k) for k in range(4)] == [1, 1, 4, 28]
    assert count_full_rank(3, 2) == 18
    with pytest.raises(ParameterError):
        count_forms_of_rank(2, 2, 3)


@pytest.mark.parametrize("q,k,n", [(2, 2, 1), (2, 2, 2), (3, 2, 2), (2, 3, 1), (2, 3, 2), (3, 3, 1)])
def test_root_counts(q, k, n):
    F = ScalarField(q)
    ext = build_ctx(q, 1, 1, n)
    for Q in all_forms(F, k):
        r = qf_rank(Q)
        if r:
            assert count_roots_bruteforce(Q, ext) in count_roots_formula(q, k, r, n)


def test_root_counts_over_gf4():
    ext = ctx_for_q(4, 1, 2)
    for Q in all_forms(ext.scalars, 2):
        r = qf_rank(Q)
        if r:
            assert count_roots_bruteforce(Q, ext) in count_roots_formula(4, 2, r, 2)


def test_root_formula_shape():
    assert count_roots_formula(3, 3, 1, 2) == (3 ** 4,)
    plus, minus = count_roots_formula(2, 2, 2, 1)
    assert (plus, minus) == (3, 1)
    with pytest.raises(ParameterError):
        count_roots_formula(2, 2, 0, 1)


def test_fraction_bound():
    assert max_span_fraction_bound(3, 2, 3) == Fraction(1, 2)
    assert max_span_fraction_bound(2, 3, 7) == Fraction(1, 2)
    with pytest.raises(ParameterError):
        max_span_fraction_bound(2, 3, 5)
