"""Sidon and r-Sidon space constructions, greedy expansion and random search.

Every choice the constructions leave open (the field element gamma, the
coefficients b and c, the polynomial set of the irreducible-product
construction) is made deterministically: the smallest qualifying candidate in
element order.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from math import comb, gcd

from .errors import ParameterError, SearchExhausted, VerificationFailure
from .field_tower import (ScalarField, build_ctx, discrete_log, divisors,
                          find_b_for_c, gamma_via_pgamma, monic_irreducibles,
                          poly_mul, smallest_root, split_prime_power)
from .linalg import linear_kernel
from .subspaces import Subspace, projective_reps, span
from .verify import is_sidon_bruteforce, max_span_criterion

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Construction:
    """Output of a construction: the space plus everything needed to decode it."""

    id: str
    ctx: object = field(repr=False)
    space: Subspace = field(repr=False)
    params: dict = field(default_factory=dict)
    gamma: int | None = None
    spaces: tuple = field(default=(), repr=False)

    @property
    def k(self):
        return self.space.dim

    def element(self, u, gamma=None):
        """u + u^{q^s} gamma for u in F_{q^k}."""
        ctx = self.ctx
        g = self.gamma if gamma is None else gamma
        s = self.params.get("s", 1)
        return ctx.add(u, ctx.mul(ctx.frobenius(u, s), g))

    def to_json(self):
        out = {"id": self.id, "params": _jsonable(self.params), "gamma": self.gamma}
        if self.spaces:
            out["spaces"] = [V.to_json() for V in self.spaces]
        else:
            out["space"] = self.space.to_json()
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _frobenius_twist_space(ctx, k, gamma, s=1):
    """span{w^j + (w^j)^{q^s} gamma : j < k}."""
    gens = [ctx.add(x, ctx.mul(ctx.frobenius(x, s), gamma)) for x in ctx.subfield_basis(k)]
    V = span(ctx, gens)
    if V.dim != k:
        raise VerificationFailure("u -> u + u^Q gamma is not injective")
    return V


def largest_small_divisor(n):
    """Largest divisor of n strictly below n/2 that is larger than 1."""
    cands = [d for d in divisors(n) if 1 < d and 2 * d < n]
    if not cands:
        raise ParameterError(f"n={n} has no divisor k with 1 < k < n/2 (n prime or too small)")
    return max(cands)


def c1_ctx(q, n, k=None):
    p, e = split_prime_power(q)
    k = largest_small_divisor(n) if k is None else k
    return build_ctx(p, e, k, n)


def construct_c1(ctx, s=1):
    """{u + u^{q^s} gamma : u in F_{q^k}} with gamma = beta, for k | n, n > 2k."""
    k, n = ctx.k, ctx.n
    if n % k or 2 * k >= n:
        raise ParameterError(f"need k | n and n > 2k (k={k}, n={n})")
    if gcd(s, k) != 1:
        raise ParameterError(f"gcd(s, k) = gcd({s}, {k}) must be 1")
    gamma = ctx.beta
    V = _frobenius_twist_space(ctx, k, gamma, s)
    return Construction("C1", ctx, V, {"q": ctx.q, "k": k, "n": n, "s": s}, gamma)


def _quadratic_gamma(ctx):
    k = ctx.k
    if ctx.q < 3:
        raise ParameterError("q >= 3 is required")
    if ctx.n != 2 * k:
        raise ParameterError(f"need n = 2k (k={k}, n={ctx.n})")
    w = ctx.smallest_primitive_of_subfield(k)
    b = find_b_for_c(ctx, w, k)
    gamma = smallest_root(ctx, [w, b, 1])
    return w, b, gamma


def construct_c2(ctx):
    """{u + u^q gamma} with gamma a root of x^2 + bx + c, c primitive in F_{q^k}."""
    w, b, gamma = _quadratic_gamma(ctx)
    V = _frobenius_twist_space(ctx, ctx.k, gamma)
    params = {"q": ctx.q, "k": ctx.k, "n": ctx.n, "b": b, "c": w}
    return Construction("C2", ctx, V, params, gamma)


def construct_c6(ctx):
    """The floor((q-1)/2) spaces {u + u^q w^i gamma_0}, one per orbit."""
    w, b, gamma = _quadratic_gamma(ctx)
    tau = (ctx.q - 1) // 2
    gammas = [ctx.mul(ctx.pow(w, i), gamma) for i in range(tau)]
    spaces = tuple(_frobenius_twist_space(ctx, ctx.k, g) for g in gammas)
    params = {"q": ctx.q, "k": ctx.k, "n": ctx.n, "b": b, "c": w, "w": w,
              "tau": tau, "gammas": gammas}
    return Construction("C6", ctx, spaces[0], params, gamma, spaces)


def is_sidon_set_integers(values):
    values = sorted(values)
    if len(set(values)) != len(values):
        return False
    sums = [a + b for i, a in enumerate(values) for b in values[i:]]
    return len(sums) == len(set(sums))


def construct_c3(ctx, sidon_set):
    """span{gamma^a : a in the Sidon set}, gamma = beta, requires n > 2 max."""
    S = sorted(int(a) for a in sidon_set)
    if not S or S[0] < 1:
        raise ParameterError("Sidon set must be a nonempty set of positive integers")
    if not is_sidon_set_integers(S):
        raise ParameterError(f"{S} is not a Sidon set of integers")
    m = S[-1]
    if ctx.n <= 2 * m:
        raise ParameterError(f"need n > 2*max = {2 * m}, got n={ctx.n}")
    gamma = ctx.beta
    V = span(ctx, [ctx.pow(gamma, a) for a in S])
    return Construction("C3", ctx, V, {"q": ctx.q, "k": len(S), "n": ctx.n,
                                       "sidon_set": S}, gamma)


def c4_polynomials(q, k, F=None):
    """The first C(k+1,2) monic irreducibles over F_q (by degree, then integer
    order), keyed by the pairs (s, t), s >= t, in order (1,1), (2,1), (2,2), ..."""
    need = comb(k + 1, 2)
    F = _scalar_field(q) if F is None else F
    polys = []
    deg = 1
    while len(polys) < need:
        for f in monic_irreducibles(F, deg):
            polys.append(f)
            if len(polys) == need:
                break
        deg += 1
    pairs = [(s, t) for s in range(1, k + 1) for t in range(1, s + 1)]
    return dict(zip(pairs, polys)), deg - 1


def _scalar_field(q):
    p, e = split_prime_power(q)
    if e == 1:
        return ScalarField(p)
    # tables of F_q taken from any context containing it
    return build_ctx(p, e, 1, 1).scalars


def c4_min_n(q, k):
    _, delta = c4_polynomials(q, k)
    return 2 * delta * comb(k, 2) + 1


def construct_c4(ctx, k=None):
    """span{f_i(beta)}, f_i the product of the pair polynomials avoiding i."""
    k = ctx.k if k is None else k
    pairs, delta = c4_polynomials(ctx.q, k, ctx.scalars)
    if ctx.n <= 2 * delta * comb(k, 2):
        raise ParameterError(f"need n > 2*Delta*C(k,2) = {2 * delta * comb(k, 2)}, got n={ctx.n}")
    F = ctx.scalars
    gamma = ctx.beta
    fs = []
    for i in range(1, k + 1):
        f = [1]
        for (s, t), poly in pairs.items():
            if s != i and t != i:
                f = poly_mul(f, poly, F)
        fs.append(f)
    gens = [ctx.eval_poly([ctx.embed_scalar(c) for c in f], gamma) for f in fs]
    V = span(ctx, gens)
    params = {"q": ctx.q, "k": k, "n": ctx.n, "delta": delta,
              "poly_set": [[list(st), poly] for st, poly in pairs.items()],
              "f": fs}
    return Construction("C4", ctx, V, params, gamma)


def c5_ctx(q, k):
    p, e = split_prime_power(q)
    return build_ctx(p, e, k, k * k - 1)


def construct_c5(ctx):
    """Root space of x^{q^k} + x^q + x in F_{q^{k^2-1}}, k a power of q."""
    q, k, n = ctx.q, ctx.k, ctx.n
    m = k
    while m > 1 and m % q == 0:
        m //= q
    if k <= 1 or m != 1:
        raise ParameterError(f"k={k} is not a power of q={q} above 1")
    if n != k * k - 1:
        raise ParameterError(f"need n = k^2 - 1 = {k * k - 1}, got n={n}")
    f = lambda x: ctx.add(ctx.add(ctx.frobenius(x, k), ctx.frobenius(x)), x)
    full = [ctx.from_coords([1 if i == j else 0 for j in range(n)]) for i in range(n)]
    ker = linear_kernel(ctx, f, full)
    V = span(ctx, ker)
    if V.dim != k:
        raise VerificationFailure(f"root space has dimension {V.dim}, expected {k}")
    return Construction("C5", ctx, V, {"q": q, "k": k, "n": n}, None)


def construct_c7(ctx, r):
    """r-Sidon {u + u^q beta} for n = k(r+1)."""
    k, n = ctx.k, ctx.n
    if r < 2:
        raise ParameterError("r must be at least 2")
    if n != k * (r + 1):
        raise ParameterError(f"need n = k(r+1) = {k * (r + 1)}, got n={n}")
    gamma = ctx.beta
    V = _frobenius_twist_space(ctx, k, gamma)
    return Construction("C7", ctx, V, {"q": ctx.q, "k": k, "n": n, "r": r}, gamma)


def construct_c8(ctx, r):
    """r-Sidon {u + u^q gamma} for n = kr, q >= 3, gamma = -beta^i."""
    k, n = ctx.k, ctx.n
    if ctx.q < 3:
        raise ParameterError("q >= 3 is required")
    if r < 2:
        raise ParameterError("r must be at least 2")
    if n != k * r:
        raise ParameterError(f"need n = kr = {k * r}, got n={n}")
    gamma = gamma_via_pgamma(ctx, r)
    V = _frobenius_twist_space(ctx, k, gamma)
    return Construction("C8", ctx, V, {"q": ctx.q, "k": k, "n": n, "r": r}, gamma)


# -- greedy expansion -------------------------------------------------------

def greedy_bound(n):
    return max((n - 2) // 4, 0)


def expansion_precondition(q, n, k):
    """q^n - q^k > 2 (q^{4k+4} - 1)/(q - 1): a Sidon space of dim k can grow."""
    return (q ** n - q ** k) * (q - 1) > 2 * (q ** (4 * k + 4) - 1)


def greedy_expand(ctx, target_k, allow_beyond=False, guard=True):
    """Grow a Sidon space from <1> by adding the first admissible power of beta.

    Returns the Construction; its params record, per step, the exponent that
    was added and whether the expansion precondition held.
    """
    q, n = ctx.q, ctx.n
    if target_k < 1:
        raise ParameterError("target dimension must be positive")
    if target_k > greedy_bound(n) and not allow_beyond:
        raise ParameterError(f"target k={target_k} exceeds floor((n-2)/4) = {greedy_bound(n)}")
    gens = [1]
    V = span(ctx, gens)
    reps = projective_reps(V)
    products = {ctx.normalize(ctx.mul(a, b)) for i, a in enumerate(reps) for b in reps[i:]}
    steps = []
    exponent = 0
    while V.dim < target_k:
        pre = expansion_precondition(q, n, V.dim)
        found = None
        for i in range(exponent + 1, ctx.mult_order):
            x = ctx.pow(ctx.beta, i)
            if V.contains(x):
                continue
            new = _new_products(ctx, V, reps, x, products)
            if new is not None:
                found = (i, x, new)
                break
        if found is None:
            raise SearchExhausted(f"no element extends the dimension-{V.dim} space")
        exponent, x, new = found
        gens.append(x)
        V = span(ctx, gens)
        reps = projective_reps(V)
        products |= new
        steps.append({"dim": V.dim, "exponent": exponent, "precondition": pre})
        log.debug("greedy step to dim %d with beta^%d", V.dim, exponent)
    if guard and not is_sidon_bruteforce(V).is_sidon:
        raise VerificationFailure("greedy output failed the brute-force check")
    params = {"q": q, "k": V.dim, "n": n, "steps": steps,
              "within_bound": target_k <= greedy_bound(n)}
    return Construction("GREEDY", ctx, V, params, None)


def _new_products(ctx, V, reps, v, products):
    """Normalized products involving a new line of V + <v>, or None if one
    of them repeats (i.e. v solves a nontrivial collision equation)."""
    new_lines = [ctx.normalize(ctx.add(v, a)) for a in V.elements()]
    seen = set()
    for i, a in enumerate(new_lines):
        for b in reps:
            key = ctx.normalize(ctx.mul(a, b))
            if key in products or key in seen:
                return None
            seen.add(key)
        for b in new_lines[i:]:
            key = ctx.normalize(ctx.mul(a, b))
            if key in products or key in seen:
                return None
            seen.add(key)
    return seen


# -- random max-span search -------------------------------------------------

def trial_rng(seed, trial):
    """Independent generator for one trial, derived from (seed, trial)."""
    return random.Random(f"{seed}:{trial}")


def random_max_span_search(ctx, k, seed=0, max_trials=1000):
    """Sample k uniform elements until their pair products are independent."""
    if ctx.n < comb(k + 1, 2):
        raise ParameterError(f"need n >= C(k+1,2) = {comb(k + 1, 2)}, got n={ctx.n}")
    for trial in range(1, max_trials + 1):
        rng = trial_rng(seed, trial)
        gens = [rng.randrange(ctx.order) for _ in range(k)]
        V = span(ctx, gens)
        if V.dim == k and max_span_criterion(V):
            params = {"q": ctx.q, "k": k, "n": ctx.n, "seed": seed, "trials": trial,
                      "sample": gens}
            return Construction("RANDOM_MAXSPAN", ctx, V, params, None)
    raise SearchExhausted(f"no max-span space in {max_trials} trials")


def max_span_success_rate(ctx, k, seed=0, trials=200):
    """Fraction of sampled k-sets (of full rank) whose span is max-span."""
    hits = total = 0
    for trial in range(1, trials + 1):
        rng = trial_rng(seed, trial)
        V = span(ctx, [rng.randrange(ctx.order) for _ in range(k)])
        if V.dim != k:
            continue
        total += 1
        hits += max_span_criterion(V)
    return hits, total


# -- the Bose Sidon set -------------------------------------------------------

def bose_sidon_set(qp):
    """{log_g(a + d) : a in F_{q'}} mod q'^2 - 1, d the smallest element outside F_{q'}."""
    p, e = split_prime_power(qp)
    ctx = build_ctx(p, e, 1, 2)
    base = set(ctx.subfield_elements(1))
    delta = next(x for x in ctx.elements() if x not in base)
    m = qp * qp - 1
    return sorted(discrete_log(ctx, ctx.add(a, delta)) % m for a in sorted(base))


def construct(cid, q, k=None, n=None, r=None, s=1, sidon_set=None, seed=0,
              max_trials=1000, allow_beyond=False):
    """Build any construction from plain parameters (the CLI entry point)."""
    cid = cid.upper()
    p, e = split_prime_power(q)
    if cid == "C1":
        if n is None:
            raise ParameterError("C1 needs n")
        return construct_c1(c1_ctx(q, n, k), s)
    if cid in ("C2", "C6"):
        if k is None:
            raise ParameterError(f"{cid} needs k")
        ctx = build_ctx(p, e, k, 2 * k if n is None else n)
        return construct_c2(ctx) if cid == "C2" else construct_c6(ctx)
    if cid == "C3":
        if not sidon_set:
            raise ParameterError("C3 needs a Sidon set")
        n = 2 * max(sidon_set) + 1 if n is None else n
        return construct_c3(build_ctx(p, e, len(sidon_set), n), sidon_set)
    if cid == "C4":
        if k is None:
            raise ParameterError("C4 needs k")
        n = c4_min_n(q, k) if n is None else n
        return construct_c4(build_ctx(p, e, k, n), k)
    if cid == "C5":
        if k is None:
            raise ParameterError("C5 needs k")
        if n is not None and n != k * k - 1:
            raise ParameterError(f"C5 needs n = k^2 - 1 = {k * k - 1}")
        if k * k - 1 > 0 and q ** (k * k - 1) >= 2 ** 63:
            raise ParameterError("field too large")
        return construct_c5(c5_ctx(q, k))
    if cid in ("C7", "C8"):
        if k is None or r is None:
            raise ParameterError(f"{cid} needs k and r")
        if cid == "C7":
            return construct_c7(build_ctx(p, e, k, k * (r + 1)), r)
        return construct_c8(build_ctx(p, e, k, k * r), r)
    if cid == "GREEDY":
        if k is None or n is None:
            raise ParameterError("greedy expansion needs k and n")
        return greedy_expand(build_ctx(p, e, k, n), k, allow_beyond)
    if cid in ("RANDOM", "RANDOM_MAXSPAN", "MAXSPAN"):
        if k is None or n is None:
            raise ParameterError("random search needs k and n")
        return random_max_span_search(build_ctx(p, e, k, n), k, seed, max_trials)
    raise ParameterError(f"unknown construction id {cid}")
