import random
from itertools import product

import pytest

from sidonspaces.errors import ParameterError
from sidonspaces.field_tower import build_ctx
from sidonspaces.linalg import inverse, nullspace, rank, rref, solve_left
from sidonspaces.subspaces import (
    Subspace, enumerate_grassmannian, from_rows, grassmannian_size, intersect_dim,
    product_space, projective_points, projective_reps, shift, span, square, square_dim,
    subfield_space, subspace_distance)

CTX = build_ctx(3, 1, 2, 4)
CTX2 = build_ctx(2, 1, 3, 6)
CTX4 = build_ctx(2, 2, 2, 3)


def random_space(ctx, dim, rng):
    while True:
        V = span(ctx, [rng.randrange(1, ctx.order) for _ in range(dim)])
        if V.dim == dim:
            return V


def brute_span(ctx, gens):
    out = {0}
    for g in gens:
        out |= {ctx.add(x, ctx.scale(c, g)) for x in out for c in range(ctx.q)}
    return out


@pytest.mark.parametrize("ctx", [CTX, CTX2, CTX4])
def test_span_matches_closure(ctx):
    rng = random.Random(3)
    for _ in range(20):
        gens = [rng.randrange(ctx.order) for _ in range(rng.randrange(4))]
        V = span(ctx, gens)
        assert set(V.elements()) == brute_span(ctx, gens)
        assert len(V.elements()) == ctx.q ** V.dim
        assert span(ctx, V.basis) == V


def test_rref_invariants():
    rng = random.Random(4)
    for _ in range(20):
        V = random_space(CTX4, 2, rng)
        prev = -1
        for row, pc in zip(V.rows, V.pivots):
            assert pc > prev and row[pc] == 1
            prev = pc
            for other in V.rows:
                if other is not row:
                    assert other[pc] == 0


def test_span_scalar_dependence():
    a = 7
    assert span(CTX, [a]).dim == 1
    assert span(CTX, [a, CTX.scale(2, a)]).dim == 1
    assert span(CTX, []).dim == 0


def test_shift_properties():
    rng = random.Random(5)
    V = random_space(CTX2, 3, rng)
    assert shift(V, 1) == V
    for _ in range(100):
        alpha = rng.randrange(1, CTX2.order)
        W = shift(V, alpha)
        assert W.dim == 3
        assert shift(W, CTX2.inv(alpha)) == V
    U = random_space(CTX, 2, rng)
    assert shift(U, 2) == U
    with pytest.raises(ParameterError):
        shift(V, 0)


def test_intersection_and_distance():
    rng = random.Random(6)
    for _ in range(30):
        U, V, W = (random_space(CTX, rng.randrange(1, 4), rng) for _ in range(3))
        inter = set(U.elements()) & set(V.elements())
        assert len(inter) == CTX.q ** intersect_dim(U, V)
        assert intersect_dim(U, V) <= min(U.dim, V.dim)
        assert subspace_distance(U, V) == subspace_distance(V, U)
        assert (subspace_distance(U, V) == 0) == (U == V)
        assert subspace_distance(U, W) <= subspace_distance(U, V) + subspace_distance(V, W)
        alpha = rng.randrange(1, CTX.order)
        assert intersect_dim(shift(U, alpha), shift(V, alpha)) == intersect_dim(U, V)
    U = span(CTX, [1, CTX.beta])
    V = span(CTX, [CTX.pow(CTX.beta, 2), CTX.pow(CTX.beta, 3)])
    assert subspace_distance(U, V) == 4


def test_context_mismatch():
    with pytest.raises(ParameterError):
        intersect_dim(span(CTX, [1]), span(CTX2, [1]))


def test_products():
    rng = random.Random(7)
    V = random_space(CTX2, 2, rng)
    one = span(CTX2, [1])
    assert product_space(V, one) == V
    assert square(V) == product_space(V, V)
    assert square_dim(V) == square(V).dim <= 3
    S, T = random_space(CTX2, 2, rng), random_space(CTX2, 2, rng)
    P = product_space(S, T)
    assert P.dim <= 4
    Se, Te = S.elements(), T.elements()
    for _ in range(100):
        assert P.contains(CTX2.mul(rng.choice(Se), rng.choice(Te)))


def test_subfield_square():
    ctx = build_ctx(2, 1, 2, 6)
    F4 = subfield_space(ctx, 2)
    assert square_dim(F4) == 2
    assert set(F4.elements()) == set(ctx.subfield_elements(2))


def test_projective_reps():
    assert len(projective_reps(span(CTX, [5]))) == 1
    V = span(CTX, [1, CTX.beta])
    reps = projective_reps(V)
    assert len(reps) == 4
    for rep in reps:
        assert CTX.normalize(rep) == rep
    lines = {frozenset(CTX.scale(c, r) for c in range(1, 3)) for r in reps}
    assert len(lines) == 4
    assert len(projective_points(CTX)) == 40


@pytest.mark.parametrize("q,e,n,k", [(2, 1, 6, 2), (3, 1, 4, 2), (3, 1, 3, 2), (2, 2, 3, 2), (2, 1, 5, 3)])
def test_grassmannian_enumeration(q, e, n, k):
    ctx = build_ctx(q, e, k, n)
    spaces = list(enumerate_grassmannian(ctx, k))
    assert len(spaces) == len({V.key() for V in spaces}) == grassmannian_size(ctx.q, n, k)
    for V in spaces[:20]:
        assert from_rows(ctx, V.rows) == V


def test_json_round_trip():
    V = span(CTX, [1, CTX.beta])
    assert Subspace.from_json(CTX, V.to_json()) == V
    assert V.to_json()["dim"] == 2


def test_linear_algebra_helpers():
    F = CTX4.scalars
    rng = random.Random(8)
    for _ in range(20):
        A = [[rng.randrange(4) for _ in range(4)] for _ in range(3)]
        for v in nullspace(A, F, 4):
            assert all(sum_f(F, [F.mul(a, x) for a, x in zip(row, v)]) == 0 for row in A)
        assert rank(A, F) + len(nullspace(A, F, 4)) == 4
        c = [rng.randrange(4) for _ in range(3)]
        y = [sum_f(F, [F.mul(ci, A[i][j]) for i, ci in enumerate(c)]) for j in range(4)]
        sol = solve_left(A, y, F)
        assert [sum_f(F, [F.mul(si, A[i][j]) for i, si in enumerate(sol)]) for j in range(4)] == y
    M = [[1, 2], [2, 1]]
    inv = inverse(M, F)
    prod = [[sum_f(F, [F.mul(M[i][t], inv[t][j]) for t in range(2)]) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


def sum_f(F, xs):
    acc = 0
    for x in xs:
        acc = F.add(acc, x)
    return acc
