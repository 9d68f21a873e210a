import random
from fractions import Fraction

import pytest

from sidonspaces.codes import (
    bound_ratio, cross_orbit_check, cyclic_code, full_orbit_check, min_distance, orbit,
    orbit_size, qbin, shift_profile, sphere_packing_bound, stabilizer_size)
from sidonspaces.constructions import construct
from sidonspaces.errors import BudgetExceeded, ParameterError
from sidonspaces.field_tower import build_ctx, divisors
from sidonspaces.subspaces import (enumerate_grassmannian, shift, span, subfield_space,
                                   subspace_distance)
from sidonspaces.verify import is_sidon_bruteforce


def naive_orbit(V):
    ctx = V.ctx
    return {shift(V, a).key() for a in range(1, ctx.order)}


def naive_min_distance(spaces):
    best = None
    for i, U in enumerate(spaces):
        for V in spaces[i + 1:]:
            d = subspace_distance(U, V)
            best = d if best is None else min(best, d)
    return best


def test_subfield_orbit():
    ctx = build_ctx(2, 1, 2, 6)
    F4 = subfield_space(ctx, 2)
    assert len(orbit(F4)) == 21
    assert not full_orbit_check(F4)
    code = cyclic_code([F4])
    assert code.size == 21 and code.min_distance == 4
    assert sphere_packing_bound(2, 6, 2, 4) == 21


def test_orbit_matches_naive_enumeration():
    ctx = build_ctx(2, 1, 3, 6)
    rng = random.Random(1)
    total = (ctx.order - 1) // (ctx.q - 1)
    for V in rng.sample(list(enumerate_grassmannian(ctx, 3)), 40):
        orb = orbit(V)
        assert {W.key() for W in orb} == naive_orbit(V)
        assert total % len(orb) == 0
        assert len(orb) == orbit_size(V)
        assert len(orb) in {(ctx.order - 1) // (ctx.q ** t - 1) for t in divisors(ctx.n)}


def test_sidon_orbit_is_full():
    con = construct("C2", 3, k=2)
    assert full_orbit_check(con.space)
    assert len(orbit(con.space)) == 40


def test_span_of_one():
    ctx = build_ctx(2, 1, 1, 6)
    assert stabilizer_size(span(ctx, [1])) == 1
    assert full_orbit_check(span(ctx, [1]))


def test_min_distance_matches_pairwise_scan():
    for con in [construct("C2", 3, k=2), construct("C1", 2, n=6)]:
        code = cyclic_code([con.space])
        orb = orbit(con.space)
        assert code.min_distance == naive_min_distance(orb) == 2 * con.k - 2
    con = construct("C6", 5, k=2)
    code = cyclic_code(list(con.spaces))
    assert code.size == 312 and code.min_distance == 2
    assert not set(W.key() for W in orbit(con.spaces[0])) & set(W.key() for W in orbit(con.spaces[1]))


def test_distance_invariance():
    ctx = build_ctx(3, 1, 2, 4)
    rng = random.Random(2)
    spaces = list(enumerate_grassmannian(ctx, 2))
    for _ in range(50):
        U, V = rng.sample(spaces, 2)
        a = rng.randrange(1, ctx.order)
        assert subspace_distance(shift(U, a), shift(V, a)) == subspace_distance(U, V)


def test_cross_orbit():
    con = construct("C6", 5, k=2)
    assert cross_orbit_check(*con.spaces)
    assert cross_orbit_check(con.spaces[0], con.spaces[0])
    ctx = build_ctx(2, 1, 2, 4)
    F4 = subfield_space(ctx, 2)
    assert not cross_orbit_check(F4, F4)


def test_qbin():
    assert qbin(3, 4, 2) == 130
    assert qbin(5, 7, 0) == 1
    assert qbin(2, 3, 5) == 0
    for q in (2, 3, 4, 5):
        for t in range(10):
            for s in range(t + 1):
                assert qbin(q, t, s) == qbin(q, t, t - s)
                assert qbin(q, t, s) < 4 * q ** (s * (t - s))


def test_qbin_counts_subspaces():
    for q, n, k in [(2, 6, 2), (2, 6, 3), (3, 4, 2), (3, 3, 2)]:
        ctx = build_ctx(q, 1, k, n)
        assert sum(1 for _ in enumerate_grassmannian(ctx, k)) == qbin(q, n, k)


def test_sphere_packing():
    assert sphere_packing_bound(5, 4, 2, 2) == 806
    for q, n, k in [(2, 6, 2), (2, 6, 3), (3, 4, 2), (2, 8, 4)]:
        assert sphere_packing_bound(q, n, k, 2 * k) == (q ** n - 1) // (q ** k - 1)
    with pytest.raises(ParameterError):
        sphere_packing_bound(2, 6, 2, 3)
    with pytest.raises(ParameterError):
        sphere_packing_bound(2, 6, 2, 6)


def test_bound_ratio():
    con = construct("C6", 5, k=2)
    code = cyclic_code(list(con.spaces))
    ratio, target = bound_ratio(code)
    assert ratio == Fraction(312, 806)
    assert target == ratio
    code = cyclic_code([construct("C2", 3, k=2).space])
    ratio, _ = bound_ratio(code)
    assert ratio == Fraction(40, sphere_packing_bound(3, 4, 2, 2))


def test_codes_respect_bound():
    for con in [construct("C2", 3, k=2), construct("C1", 2, n=8), construct("C2", 5, k=2)]:
        code = cyclic_code([con.space])
        assert code.size <= sphere_packing_bound(code.q, code.n, code.k, code.min_distance)


def test_budget(monkeypatch):
    monkeypatch.setenv("SIDON_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        orbit(construct("C2", 3, k=2).space)


def test_json_summary():
    code = cyclic_code([construct("C2", 3, k=2).space])
    data = code.to_json()
    assert data["size"] == "40" and data["min_distance"] == 2
    assert data["bound"] == str(sphere_packing_bound(3, 4, 2, 2))
    num, den = map(int, data["ratio"].split("/"))
    assert Fraction(num, den) == Fraction(40, int(data["bound"]))


@pytest.mark.slow
def test_sidon_iff_full_orbit_and_distance_exhaustive():
    from sidonspaces.acceptance import sidon_orbit_equivalence
    for n, k in [(5, 2), (6, 2), (6, 3), (4, 2)]:
        total, bad = sidon_orbit_equivalence(2, n, k)
        assert bad == 0 and total == qbin(2, n, k)
