"""Cyclic orbit codes: orbits, stabilizers, minimum distance and bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParameterError, check_budget
from .subspaces import intersect_dim, projective_points, shift, subspace_distance


def _alphas(ctx, force=False, factor=1):
    check_budget(factor * (ctx.order - 1) // (ctx.q - 1), "shift scan", force)
    return projective_points(ctx)


def orbit(V, force=False):
    """Distinct shifts alpha*V, alpha over normalized nonzero field elements."""
    seen = {}
    for alpha in _alphas(V.ctx, force):
        W = shift(V, alpha)
        seen.setdefault(W.key(), W)
    return list(seen.values())


def stabilizer_size(V, force=False):
    """Number of F_q-lines alpha with alpha*V = V."""
    return sum(1 for a in _alphas(V.ctx, force) if shift(V, a) == V)


def orbit_size(V, force=False):
    ctx = V.ctx
    return (ctx.order - 1) // (ctx.q - 1) // stabilizer_size(V, force)


def full_orbit_check(V, force=False):
    """True iff only F_q^* stabilizes V."""
    return stabilizer_size(V, force) == 1


def shift_profile(V, force=False):
    """(stabilizer size, largest dim(V & aV) over shifts aV != V)."""
    stab, best = 0, 0
    for a in _alphas(V.ctx, force):
        d = intersect_dim(V, shift(V, a))
        if d == V.dim:
            stab += 1
        else:
            best = max(best, d)
    return stab, best


@dataclass
class CyclicCode:
    generators: list
    orbit_sizes: list
    k: int
    n: int
    q: int
    min_distance: int = -1
    extra: dict = field(default_factory=dict)

    @property
    def size(self):
        return sum(self.orbit_sizes)

    def to_json(self):
        out = {"generators": [V.to_json() for V in self.generators],
               "orbit_sizes": self.orbit_sizes,
               "size": str(self.size),
               "min_distance": self.min_distance}
        if self.min_distance >= 0:
            bound = sphere_packing_bound(self.q, self.n, self.k, self.min_distance)
            out["bound"] = str(bound)
            r = Fraction(self.size, bound)
            out["ratio"] = f"{r.numerator}/{r.denominator}"
        return out


def cyclic_code(generators, distance=True, force=False):
    """Union of the orbits of the given generators (one per orbit)."""
    if not generators:
        raise ParameterError("a code needs at least one generator")
    ctx = generators[0].ctx
    sizes = [orbit_size(V, force) for V in generators]
    code = CyclicCode(list(generators), sizes, generators[0].dim, ctx.n, ctx.q)
    if distance:
        code.min_distance = min_distance(code, force)
    return code


def min_distance(code, force=False):
    """Smallest nonzero d(V_i, a V_j) over generator pairs and shifts a."""
    gens = code.generators
    ctx = gens[0].ctx
    alphas = _alphas(ctx, force, len(gens) * (len(gens) + 1) // 2)
    best = None
    for i, U in enumerate(gens):
        for V in gens[i:]:
            for a in alphas:
                d = subspace_distance(U, shift(V, a))
                if d and (best is None or d < best):
                    best = d
    if best is None:
        raise ParameterError("code has a single codeword; distance undefined")
    return best


def cross_orbit_check(U, V, force=False):
    """dim(U & aV) <= 1 for every a (a outside F_q^* when U == V)."""
    same = U == V
    for a in _alphas(U.ctx, force):
        if same and a == 1:
            continue
        if intersect_dim(U, shift(V, a)) > 1:
            return False
    return True


def qbin(q, t, s):
    """Gaussian binomial [t choose s]_q; zero when s > t or s < 0."""
    if s < 0 or s > t:
        return 0
    num = den = 1
    for i in range(s):
        num *= q ** (t - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def sphere_packing_bound(q, n, k, d):
    """floor(qbin(n, k - d/2 + 1) / qbin(k, k - d/2 + 1))."""
    if d % 2 or d < 2 or d > 2 * k or k > n:
        raise ParameterError(f"need even d with 2 <= d <= 2k, got d={d}, k={k}")
    m = k - d // 2 + 1
    return qbin(q, n, m) // qbin(q, k, m)


def bound_ratio(code):
    """(size / bound, (q-1)/2 * (q^n-1)/(q-1) / bound) as exact rationals."""
    if code.min_distance < 0:
        raise ParameterError("minimum distance not computed")
    bound = sphere_packing_bound(code.q, code.n, code.k, code.min_distance)
    q, n = code.q, code.n
    target = Fraction((q - 1) // 2 * (q ** n - 1) // (q - 1), bound)
    return Fraction(code.size, bound), target
