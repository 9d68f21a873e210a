"""The acceptance suite: one function per criterion, shared by tests and ``selftest``.

Each criterion returns a list of (label, ok, detail) checks; the criterion
passes when every check does.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .codes import (cross_orbit_check, cyclic_code, orbit, qbin, shift_profile,
                    sphere_packing_bound)
from .constructions import (bose_sidon_set, construct, construct_c3, construct_c4,
                            greedy_expand)
from .field_tower import ScalarField, build_ctx, split_prime_power
from .quadforms import (all_forms, count_forms_of_rank, count_roots_bruteforce,
                        count_roots_formula, max_span_fraction_bound, qf_rank,
                        qf_rank_bruteforce, qf_rank_by_invariance)
from .sidon_sets import extract_br_set, extract_sidon_set, is_br_set
from .subspaces import (enumerate_grassmannian, span, square_dim, subfield_space)
from .verify import (decode_c1, decode_c2, decode_cross_orbit, decode_r_product,
                     is_r_sidon_bruteforce, is_sidon_bruteforce, max_span_criterion,
                     r_sidon_dim_bound)

C1_PARAMS = [(2, 6), (2, 8), (2, 9), (3, 9)]
C2_PARAMS = [(3, 2), (3, 3), (4, 2), (5, 2)]
C7_PARAMS = [(2, 2, 2)]
C8_PARAMS = [(3, 2, 2), (3, 2, 3)]


def _lines(ctx, k):
    return [x for x in ctx.subfield_elements(k) if x and ctx.normalize(x) == x]


def criterion_1():
    checks = []
    for q, n in C1_PARAMS:
        con = construct("C1", q, n=n)
        v = is_sidon_bruteforce(con.space)
        checks.append((f"C1 q={q} n={n} k={con.k} Sidon", v.is_sidon, ""))
        checks.append((f"C1 q={q} n={n} dim V^2 = 2k", v.dim_square == 2 * con.k,
                       f"dim V^2={v.dim_square}, 2k={2 * con.k}"))
    return checks


def criterion_2():
    checks = []
    for q, k in C2_PARAMS:
        con = construct("C2", q, k=k)
        ctx = con.ctx
        v = is_sidon_bruteforce(con.space)
        code = cyclic_code([con.space])
        checks.append((f"C2 q={q} k={k} Sidon", v.is_sidon, ""))
        checks.append((f"C2 q={q} k={k} dim V^2 = 2k = n",
                       v.dim_square == 2 * k == ctx.n, f"dim V^2={v.dim_square}, n={ctx.n}"))
        checks.append((f"C2 q={q} k={k} orbit size", code.orbit_sizes[0] == (ctx.order - 1) // (q - 1),
                       f"{code.orbit_sizes[0]}"))
        checks.append((f"C2 q={q} k={k} min distance 2k-2", code.min_distance == 2 * k - 2,
                       f"d={code.min_distance}"))
    return checks


def sidon_orbit_equivalence(q, n, k):
    """Counts (total, exceptions) for [full orbit and d = 2k-2] <=> Sidon."""
    ctx = build_ctx(*split_prime_power(q), k, n)
    total = bad = 0
    for V in enumerate_grassmannian(ctx, k):
        stab, inter = shift_profile(V)
        full_and_distance = stab == 1 and 2 * k - 2 * inter == 2 * k - 2
        sidon = is_sidon_bruteforce(V).is_sidon
        total += 1
        bad += full_and_distance != sidon
    return total, bad


def criterion_3():
    checks = []
    for k, expected in [(2, 651), (3, 1395)]:
        total, bad = sidon_orbit_equivalence(2, 6, k)
        checks.append((f"Gr_2(6,{k}) equivalence", total == expected and bad == 0,
                       f"{total} spaces, {bad} exceptions"))
    return checks


def criterion_4():
    checks = []
    for q, k, n in [(2, 4, 15), (3, 3, 8)]:
        con = construct("C5", q, k=k)
        d = square_dim(con.space)
        checks.append((f"C5 ({q},{k},{n}) max-span", con.ctx.n == n and d == comb(k + 1, 2)
                       and is_sidon_bruteforce(con.space).is_sidon, f"dim V^2={d}"))
    return checks


def criterion_5():
    con = construct("C6", 5, k=2)
    code = cyclic_code(list(con.spaces))
    bound = sphere_packing_bound(5, 4, 2, code.min_distance)
    ratio = Fraction(code.size, bound)
    U, V = con.spaces
    return [
        ("C6 code size 312 = tau (q^n-1)/(q-1)", code.size == 312 == 2 * 624 // 4, f"{code.size}"),
        ("C6 min distance 2", code.min_distance == 2, f"{code.min_distance}"),
        ("C6 cross-orbit intersections <= 1", cross_orbit_check(U, V), ""),
        ("C6 sphere-packing bound 806", bound == 806, f"{bound}"),
        ("C6 ratio 312/806", ratio == Fraction(312, 806), f"{ratio}"),
        ("odd-q cardinality (q-1)/2 (q^n-1)/(q-1)", code.size == (5 - 1) // 2 * (5 ** 4 - 1) // 4, ""),
    ]


def _round_trip(con, decode, r, gamma=None):
    ctx = con.ctx
    lines = _lines(ctx, con.k)
    bad = total = 0
    for combo in combinations_with_replacement(lines, r):
        x = 1
        for u in combo:
            x = ctx.mul(x, con.element(u, gamma))
        total += 1
        try:
            bad += tuple(sorted(decode(x))) != combo
        except Exception:
            bad += 1
    return total, bad


def criterion_6():
    checks = []
    for q, n in C1_PARAMS:
        con = construct("C1", q, n=n)
        total, bad = _round_trip(con, lambda x, c=con: decode_c1(c, x), 2)
        checks.append((f"decode_c1 q={q} n={n}", bad == 0, f"{total} inputs, {bad} failures"))
    for q, k in C2_PARAMS:
        con = construct("C2", q, k=k)
        total, bad = _round_trip(con, lambda x, c=con: decode_c2(c, x), 2)
        checks.append((f"decode_c2 q={q} k={k}", bad == 0, f"{total} inputs, {bad} failures"))
    con = construct("C6", 5, k=2)
    ctx, gammas = con.ctx, con.params["gammas"]
    lines = _lines(ctx, 2)
    total = bad = 0
    for i in range(len(gammas)):
        for j in range(len(gammas)):
            if i == j:
                continue
            for u in lines:
                for v in lines:
                    x = ctx.mul(con.element(u, gammas[i]), con.element(v, gammas[j]))
                    total += 1
                    try:
                        bad += decode_cross_orbit(con, i, j, x) != (u, v)
                    except Exception:
                        bad += 1
    checks.append(("decode_cross_orbit q=5 k=2", bad == 0, f"{total} inputs, {bad} failures"))
    for cid, params in [("C7", (2, 2, 2)), ("C8", (3, 2, 3))]:
        q, k, r = params
        con = construct(cid, q, k=k, r=r)
        total, bad = _round_trip(con, lambda x, c=con, r=r: decode_r_product(c, x, r), r)
        checks.append((f"decode_r_product {cid} {params}", bad == 0, f"{total} inputs, {bad} failures"))
    return checks


def _r_constructions():
    for q, k, r in C7_PARAMS:
        yield "C7", q, k, r
    for q, k, r in C8_PARAMS:
        yield "C8", q, k, r


def criterion_7():
    checks = []
    for cid, q, k, r in _r_constructions():
        con = construct(cid, q, k=k, r=r)
        ok, _ = is_r_sidon_bruteforce(con.space, r)
        checks.append((f"{cid} ({q},{k},{r}) {r}-Sidon", ok, ""))
        checks.append((f"{cid} ({q},{k},{r}) dimension bound",
                       r_sidon_dim_bound(q, con.ctx.n, k, r), ""))
    return checks


def criterion_8():
    checks = []
    for q, k in C2_PARAMS:
        rec = extract_sidon_set(construct("C2", q, k=k).space)
        ok, _ = is_br_set(rec.elements, rec.m, 2)
        checks.append((f"B_2 set from C2 q={q} k={k}", ok and rec.m == (q ** (2 * k) - 1) // (q - 1)
                       and len(rec.elements) == (q ** k - 1) // (q - 1), f"m={rec.m}"))
    for cid, q, k, r in _r_constructions():
        rec = extract_br_set(construct(cid, q, k=k, r=r).space, r)
        ok, _ = is_br_set(rec.elements, rec.m, r)
        checks.append((f"B_{r} set from {cid} ({q},{k},{r})", ok, f"m={rec.m}"))
    for qp in (3, 4, 5, 7):
        S = bose_sidon_set(qp)
        ok, _ = is_br_set(S, qp * qp - 1, 2)
        checks.append((f"Bose q'={qp}", ok and len(S) == qp, f"{S}"))
    return checks


def criterion_9():
    checks = []
    for q, k in [(2, 2), (2, 3), (3, 2)]:
        F = ScalarField(q)
        counts = Counter()
        agree = True
        for Q in all_forms(F, k):
            r = qf_rank(Q)
            oracle = qf_rank_bruteforce(Q) if q ** (k * k) <= 3 ** 4 else qf_rank_by_invariance(Q)
            agree &= r == oracle
            counts[r] += 1
        want = {r: count_forms_of_rank(q, k, r) for r in range(k + 1)}
        checks.append((f"rank counts q={q} k={k}", agree and dict(counts) == want,
                       f"{dict(sorted(counts.items()))}"))
    for q, k, n in [(2, 2, 2), (3, 2, 2)]:
        F = ScalarField(q)
        ext = build_ctx(q, 1, 1, n)
        bad = total = 0
        for Q in all_forms(F, k):
            r = qf_rank(Q)
            if r == 0:
                continue
            total += 1
            bad += count_roots_bruteforce(Q, ext) not in count_roots_formula(q, k, r, n)
        checks.append((f"root counts ({q},{k},{n})", bad == 0, f"{total} forms, {bad} mismatches"))
    return checks


def criterion_10():
    ctx = build_ctx(3, 1, 2, 3)
    spaces = list(enumerate_grassmannian(ctx, 2))
    maxspan = sum(max_span_criterion(V) for V in spaces)
    bound = max_span_fraction_bound(3, 2, 3)
    measured = Fraction(len(spaces) - maxspan, len(spaces))
    return [("Gr_3(3,2) has 13 spaces", len(spaces) == 13, ""),
            ("max-span count >= 7", maxspan >= 7, f"{maxspan} max-span"),
            ("non-max-span fraction <= bound", measured <= bound, f"{measured} <= {bound}")]


def criterion_11():
    con = greedy_expand(build_ctx(2, 1, 3, 14), 3)
    v = is_sidon_bruteforce(con.space)
    return [("greedy q=2 n=14 k=3", con.k == 3 and v.is_sidon,
             f"exponents {[s['exponent'] for s in con.params['steps']]}")]


def sidon_outputs_k3():
    """Constructed Sidon spaces of dimension at least 3."""
    out = [construct("C1", 2, n=9), construct("C1", 3, n=9), construct("C2", 3, k=3),
           construct("C5", 2, k=4), construct("C5", 3, k=3),
           construct_c3(build_ctx(2, 1, 3, 17), bose_sidon_set(3)),
           construct_c4(build_ctx(7, 1, 3, 7), 3),
           greedy_expand(build_ctx(2, 1, 3, 14), 3)]
    return out


def criterion_12(seed=0):
    checks = []
    outs = sidon_outputs_k3()
    prop1 = True
    for con in outs:
        v = is_sidon_bruteforce(con.space)
        k = con.k
        prop1 &= v.is_sidon and 2 * k <= v.dim_square <= comb(k + 1, 2)
    checks.append(("2k <= dim V^2 <= C(k+1,2)", prop1, f"{len(outs)} spaces"))
    rng = random.Random(seed)
    ok = True
    for _ in range(50):
        con = rng.choice(outs)
        V = con.space
        dim = rng.randrange(1, V.dim)
        coeffs = [[rng.randrange(V.ctx.q) for _ in range(V.dim)] for _ in range(dim)]
        W = span(V.ctx, [V.combination(c) for c in coeffs])
        ok &= is_sidon_bruteforce(W).is_sidon
    checks.append(("subspaces of Sidon spaces are Sidon", ok, "50 restrictions"))
    ok = all(qbin(q, t, s) < 4 * q ** (s * (t - s))
             for q in (2, 3, 4, 5, 7) for t in range(13) for s in range(t + 1))
    checks.append(("q-binomial bound", ok, ""))
    ctx = build_ctx(3, 1, 2, 4)
    shifts = {W.key() for W in orbit(subfield_space(ctx, 2))}
    total = bad = 0
    for V in enumerate_grassmannian(ctx, 2):
        total += 1
        bad += is_sidon_bruteforce(V).is_sidon == (V.key() in shifts)
    checks.append(("Gr_3(4,2): Sidon iff not a shift of F_9", total == 130 and bad == 0,
                   f"{total} spaces, {len(shifts)} shifts of F_9, {bad} exceptions"))
    return checks


CRITERIA = [
    (1, "C1 Sidon and min-span", criterion_1),
    (2, "C2 Sidon, min-span, orbit, distance", criterion_2),
    (3, "orbit/distance characterization on Gr_2(6,2), Gr_2(6,3)", criterion_3),
    (4, "C5 max-span at listed triples", criterion_4),
    (5, "C6 code at q=5 k=2", criterion_5),
    (6, "decoder round trips", criterion_6),
    (7, "r-Sidon constructions", criterion_7),
    (8, "Sidon and B_r set extraction", criterion_8),
    (9, "quadratic form counts", criterion_9),
    (10, "max-span fraction bound on Gr_3(3,2)", criterion_10),
    (11, "greedy expansion", criterion_11),
    (12, "property suite", criterion_12),
]

SLOW = {3}


def run_criterion(number):
    for num, title, fn in CRITERIA:
        if num == number:
            checks = fn()
            return all(ok for _, ok, _ in checks), title, checks
    raise KeyError(number)


def format_line(number, title, ok, checks):
    failed = [f"{label} ({detail})" if detail else label for label, good, detail in checks if not good]
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number:2d} {status}: {title}"
    if failed:
        line += " | failed: " + "; ".join(failed)
    return line
