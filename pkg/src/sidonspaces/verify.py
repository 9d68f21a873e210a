"""Brute-force Sidon oracles and the algebraic product decoders."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .errors import DecodeError, ParameterError, check_budget
from .field_tower import (is_qm1_power, minimal_poly_over_subfield, roots_in)
from .linalg import linear_kernel, linear_preimage, solve_left
from .subspaces import projective_reps, square_dim

MIN_SPAN = "min_span"
MAX_SPAN = "max_span"
INTERMEDIATE = "intermediate"
NOT_SIDON = "not_sidon"


@dataclass(frozen=True)
class SidonVerdict:
    is_sidon: bool
    witness: tuple | None
    dim_square: int
    classification: str

    def to_json(self):
        return {"is_sidon": self.is_sidon,
                "witness": list(self.witness) if self.witness else None,
                "dim_square": self.dim_square,
                "classification": self.classification}


def span_bounds_attained(k, dim_sq):
    """(dim V^2 == 2k, dim V^2 == C(k+1,2)); both hold when k = 3."""
    return dim_sq == 2 * k, dim_sq == comb(k + 1, 2)


def classify(k, dim_sq, is_sidon):
    if not is_sidon:
        return NOT_SIDON
    if dim_sq == comb(k + 1, 2):
        return MAX_SPAN
    if dim_sq == 2 * k:
        return MIN_SPAN
    return INTERMEDIATE


def _first_collision(ctx, reps, r):
    """Lexicographically first pair of distinct r-multisets with equal
    projective products, as index tuples, or None."""
    seen = {}
    for combo in combinations_with_replacement(range(len(reps)), r):
        x = 1
        for i in combo:
            x = ctx.mul(x, reps[i])
        key = ctx.normalize(x)
        earlier = seen.get(key)
        if earlier is not None:
            return earlier, combo
        seen[key] = combo
    return None


def is_sidon_bruteforce(V, force=False):
    """Exhaustive Sidon test over unordered pairs of F_q-lines of V."""
    ctx = V.ctx
    reps = projective_reps(V)
    check_budget(comb(len(reps) + 1, 2), "Sidon check", force)
    hit = _first_collision(ctx, reps, 2)
    dsq = square_dim(V)
    if hit is None:
        return SidonVerdict(True, None, dsq, classify(V.dim, dsq, True))
    (i, j), (s, t) = hit
    a, b, c, d = reps[i], reps[j], reps[s], reps[t]
    # rescale c so that ab = cd holds exactly, not just up to F_q
    ratio = ctx.div(ctx.mul(a, b), ctx.mul(c, d))
    c = ctx.mul(ratio, c)
    return SidonVerdict(False, (a, b, c, d), dsq, NOT_SIDON)


def is_r_sidon_bruteforce(V, r, force=False):
    """Exhaustive r-Sidon test; returns (ok, witness) where the witness is a
    pair of distinct multisets of line representatives with equal products."""
    if r < 1:
        raise ParameterError("r must be positive")
    reps = projective_reps(V)
    check_budget(comb(len(reps) + r - 1, r), "r-Sidon check", force)
    hit = _first_collision(V.ctx, reps, r)
    if hit is None:
        return True, None
    first, second = hit
    return False, (tuple(reps[i] for i in first), tuple(reps[i] for i in second))


def replay_sidon_definition(V, witness):
    """Recheck a non-Sidon witness: ab = cd but the line pairs differ."""
    ctx = V.ctx
    a, b, c, d = witness
    if ctx.mul(a, b) != ctx.mul(c, d):
        return False
    lines = lambda x, y: sorted((ctx.normalize(x), ctx.normalize(y)))
    return lines(a, b) != lines(c, d)


def max_span_criterion(V):
    """True iff the products of basis pairs are linearly independent."""
    return square_dim(V) == comb(V.dim + 1, 2)


def r_sidon_dim_bound(q, n, k, r):
    """k < n/r + 1 + log_q r, evaluated exactly."""
    excess = Fraction(k - 1) - Fraction(n, r)
    if excess < 0:
        return True
    # q^excess < r  <=>  q^(excess*r) < r^r with excess*r an integer
    return q ** int(excess * r) < r ** r


# -- decoding ---------------------------------------------------------------

class _Decomposer:
    """Coordinates of an element in the F_{q^k}-basis 1, g, ..., g^{m-1}."""

    def __init__(self, ctx, k, gamma, terms):
        self.ctx, self.k, self.terms = ctx, k, terms
        self.sub = ctx.subfield_basis(k) if ctx.n % k == 0 else None
        if self.sub is None:
            raise ParameterError("decoding needs k | n")
        g_pows = [ctx.pow(gamma, j) for j in range(terms)]
        self.basis = [ctx.mul(w, g) for g in g_pows for w in self.sub]
        self.rows = [ctx.coords(b) for b in self.basis]

    def __call__(self, x):
        ctx, k = self.ctx, self.k
        c = solve_left(self.rows, ctx.coords(x), ctx.scalars)
        if c is None:
            raise DecodeError("element is not in the expected span")
        out = []
        for j in range(self.terms):
            acc = 0
            for l in range(k):
                if c[j * k + l]:
                    acc = ctx.add(acc, ctx.scale(c[j * k + l], self.sub[l]))
            out.append(acc)
        return out


_decomposers = {}


def _decomposer(ctx, k, gamma, terms):
    key = (ctx, k, gamma, terms)
    if key not in _decomposers:
        _decomposers[key] = _Decomposer(ctx, k, gamma, terms)
    return _decomposers[key]


def line_from_power(ctx, k, mu, s=1):
    """The F_q-line {x in F_{q^k} : x^{q^s} = mu x} as its normalized generator."""
    f = lambda x: ctx.sub(ctx.frobenius(x, s), ctx.mul(mu, x))
    ker = linear_kernel(ctx, f, ctx.subfield_basis(k))
    if len(ker) != 1:
        raise DecodeError(f"expected a single line, kernel has dimension {len(ker)}")
    return ctx.normalize(ker[0])


def _lines_from_roots(ctx, k, coeffs, count, s=1):
    roots, rest = roots_in(ctx, coeffs, ctx.subfield_elements(k))
    if len(roots) != count or len(rest) != 1:
        raise DecodeError("product polynomial does not split into the expected roots")
    lines = []
    for rho in roots:
        if rho == 0:
            raise DecodeError("zero root")
        mu = ctx.neg(ctx.inv(rho))
        lines.append(line_from_power(ctx, k, mu, s))
    return tuple(sorted(lines))


def _check_product(con, lines, product, gammas=None):
    """Re-encode the decoded lines; they must give the product up to F_q^*."""
    ctx = con.ctx
    gammas = gammas or [None] * len(lines)
    x = 1
    for u, g in zip(lines, gammas):
        x = ctx.mul(x, con.element(u, g))
    if ctx.normalize(x) != ctx.normalize(product):
        raise DecodeError("decoded lines do not reproduce the product")
    return lines


def decode_c1(con, product):
    """Unordered pair of lines {uF_q, vF_q} from (u+u^Q g)(v+v^Q g), Q = q^s."""
    ctx, k, s = con.ctx, con.k, con.params.get("s", 1)
    a0, a1, a2 = _decomposer(ctx, k, con.gamma, 3)(product)
    return _check_product(con, _lines_from_roots(ctx, k, [a0, a1, a2], 2, s), product)


def decode_c2(con, product):
    """Unordered pair of lines from a product of two elements of a
    degree-two construction with g^2 + b g + c = 0."""
    ctx, k = con.ctx, con.k
    b, c = con.params["b"], con.params["c"]
    q0, q1 = _decomposer(ctx, k, con.gamma, 2)(product)
    t_map = lambda x: ctx.sub(x, ctx.mul(c, ctx.frobenius(x)))
    uv = linear_preimage(ctx, t_map, ctx.subfield_basis(k), q0)
    if uv is None:
        raise DecodeError("x - c x^q is not onto the constant coefficient")
    uvq = ctx.frobenius(uv)
    a1 = ctx.add(q1, ctx.mul(b, uvq))
    return _check_product(con, _lines_from_roots(ctx, k, [uv, a1, uvq], 2), product)


def decode_cross_orbit(con, i, j, product):
    """Ordered pair (uF_q, vF_q) from (u+u^q g_i)(v+v^q g_j), g_i = w^i g_0, i != j."""
    ctx, k, q = con.ctx, con.k, con.ctx.q
    if i == j:
        raise ParameterError("cross-orbit decoding needs distinct orbits")
    w = con.params["w"]
    b0 = con.params["b"]
    q0, q1 = _decomposer(ctx, k, con.gamma, 2)(product)
    coef = ctx.pow(w, i + j + 1)
    t_map = lambda x: ctx.sub(x, ctx.mul(coef, ctx.frobenius(x)))
    uv = linear_preimage(ctx, t_map, ctx.subfield_basis(k), q0)
    if uv is None or uv == 0:
        raise DecodeError("constant coefficient has no admissible preimage")
    uvq = ctx.frobenius(uv)
    num = ctx.add(q1, ctx.mul(ctx.mul(b0, uvq), ctx.pow(w, i + j)))
    p1 = ctx.div(num, ctx.mul(uv, ctx.pow(w, j)))
    shift = ctx.pow(w, i - j)
    p0 = ctx.mul(ctx.pow(uv, q - 1), shift)
    roots, rest = roots_in(ctx, [p0, ctx.neg(p1), 1], ctx.subfield_elements(k))
    if len(roots) != 2 or 0 in roots:
        raise DecodeError("quadratic does not have two nonzero roots")
    flags = [is_qm1_power(ctx, rho, k) for rho in roots]
    if flags.count(False) != 1:
        raise DecodeError("exactly one root must lie outside the (q-1)st powers")
    u_root = roots[flags.index(False)]
    v_root = roots[flags.index(True)]
    u_line = line_from_power(ctx, k, ctx.div(u_root, shift))
    v_line = line_from_power(ctx, k, v_root)
    gammas = con.params["gammas"]
    return _check_product(con, (u_line, v_line), product, [gammas[i], gammas[j]])


def decode_r_product(con, product, r):
    """Multiset of r lines from a product of r elements of {u + u^q g}."""
    ctx, k = con.ctx, con.k
    M = minimal_poly_over_subfield(ctx, con.gamma, k)
    deg = len(M) - 1
    if deg > r:
        coeffs = _decomposer(ctx, k, con.gamma, r + 1)(product)
        return _check_product(con, _lines_from_roots(ctx, k, coeffs, r), product)
    if deg != r:
        raise ParameterError(f"minimal polynomial degree {deg} is below r={r}")
    # the product polynomial P has degree r; only P mod M is visible
    low = _decomposer(ctx, k, con.gamma, r)(product)
    m0 = M[0]
    t_map = lambda x: ctx.sub(x, ctx.mul(m0, ctx.frobenius(x)))
    p0 = linear_preimage(ctx, t_map, ctx.subfield_basis(k), low[0])
    if p0 is None:
        raise DecodeError("free coefficient could not be recovered")
    lead = ctx.frobenius(p0)
    coeffs = [ctx.add(x, ctx.mul(lead, m)) for x, m in zip(low + [0], M)]
    return _check_product(con, _lines_from_roots(ctx, k, coeffs, r), product)
