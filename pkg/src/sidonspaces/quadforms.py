"""Quadratic forms over F_q: rank, root counts and counts of forms by rank."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from .codes import qbin
from .errors import ParameterError
from .linalg import nullspace, rank


@dataclass(frozen=True)
class QuadraticForm:
    """Q(x) = sum_{i >= j} a_{ij} x_i x_j over the scalar field F.

    ``coeffs`` maps (i, j) with i >= j to a nonzero digit of F.
    """

    F: object = field(repr=False)
    k: int
    coeffs: tuple  # sorted ((i, j), a) pairs

    @classmethod
    def from_dict(cls, F, k, coeffs):
        items = []
        for (i, j), a in coeffs.items():
            if not (0 <= j <= i < k):
                raise ParameterError(f"index ({i}, {j}) outside i >= j in [k]")
            if a:
                items.append(((i, j), a))
        return cls(F, k, tuple(sorted(items)))

    def coefficient(self, i, j):
        i, j = max(i, j), min(i, j)
        return dict(self.coeffs).get((i, j), 0)

    def __call__(self, x):
        F = self.F
        acc = 0
        for (i, j), a in self.coeffs:
            if x[i] and x[j]:
                acc = F.add(acc, F.mul(a, F.mul(x[i], x[j])))
        return acc

    def polar_matrix(self):
        """B(x, y) = Q(x+y) - Q(x) - Q(y) as a symmetric matrix."""
        F, k = self.F, self.k
        B = [[0] * k for _ in range(k)]
        for (i, j), a in self.coeffs:
            if i == j:
                B[i][i] = F.add(B[i][i], F.add(a, a))
            else:
                B[i][j] = F.add(B[i][j], a)
                B[j][i] = F.add(B[j][i], a)
        return B

    def substitute(self, P):
        """The form x -> Q(x P), P a k x k matrix over F."""
        F, k = self.F, self.k
        out = {}
        for (i, j), a in self.coeffs:
            # x_i x_j with x_i = sum_s y_s P[s][i]
            for s in range(k):
                if not P[s][i]:
                    continue
                for t in range(k):
                    if not P[t][j]:
                        continue
                    c = F.mul(a, F.mul(P[s][i], P[t][j]))
                    key = (max(s, t), min(s, t))
                    out[key] = F.add(out.get(key, 0), c)
        return QuadraticForm.from_dict(F, k, out)


def all_forms(F, k):
    """Every quadratic form in k variables, q^{k(k+1)/2} of them."""
    slots = [(i, j) for i in range(k) for j in range(i + 1)]
    for values in product(range(F.q), repeat=len(slots)):
        yield QuadraticForm.from_dict(F, k, dict(zip(slots, values)))


def qf_rank(Q):
    """k minus the dimension of the set of radical vectors where Q vanishes.

    For odd q that set is the whole radical of the polar form; for even q
    Q restricted to the radical is semilinear, so its zeros still form a
    subspace.  Both cases are handled by taking the nullspace of the polar
    matrix and then the kernel of Q on it.
    """
    F, k = Q.F, Q.k
    if not Q.coeffs:
        return 0
    rad = nullspace(Q.polar_matrix(), F, k)
    if not rad:
        return k
    if F.p != 2:
        return k - len(rad)
    # on the radical Q(sum c_i r_i) = sum c_i^2 Q(r_i); it vanishes on the
    # kernel of the semilinear map c -> sum c_i^2 Q(r_i), whose dimension is
    # that of the F-linear map c -> sum c_i Q(r_i)^{1/2}
    vals = [Q(r) for r in rad]
    roots = [_sqrt_char2(F, v) for v in vals]
    zero_dim = len(nullspace([roots], F, len(rad))) if any(roots) else len(rad)
    return k - zero_dim


def _sqrt_char2(F, a):
    return next(x for x in range(F.q) if F.mul(x, x) == a)


def _gl_matrices(F, k):
    for flat in product(range(F.q), repeat=k * k):
        P = [list(flat[i * k:(i + 1) * k]) for i in range(k)]
        if rank(P, F) == k:
            yield P


def live_variables(Q):
    used = set()
    for (i, j), _ in Q.coeffs:
        used.update((i, j))
    return len(used)


def qf_rank_bruteforce(Q):
    """Fewest variables appearing in Q(x P) over all invertible P."""
    best = live_variables(Q)
    for P in _gl_matrices(Q.F, Q.k):
        best = min(best, live_variables(Q.substitute(P)))
        if best == 0:
            break
    return best


def qf_rank_by_invariance(Q):
    """k minus dim{u : Q(x + u) = Q(x) for all x}, by enumeration."""
    F, k = Q.F, Q.k
    points = list(product(range(F.q), repeat=k))
    values = [Q(x) for x in points]
    index = {x: i for i, x in enumerate(points)}
    count = 0
    for u in points:
        if all(values[index[tuple(F.add(a, b) for a, b in zip(x, u))]] == values[i]
               for i, x in enumerate(points)):
            count += 1
    dim = 0
    while F.q ** dim < count:
        dim += 1
    return k - dim


def count_roots_formula(q, k, r, n):
    """Solutions of Q(v) = 0 with v in F_{q^n}^k for a rank-r form.

    A tuple: one value for odd r, the (+, -) branches for even r.
    """
    if not 1 <= r <= k:
        raise ParameterError(f"need 1 <= r <= k, got r={r}, k={k}")
    base = q ** (n * (k - 1))
    if r % 2:
        return (base,)
    delta = Fraction(q ** n - 1, q ** (r * n // 2))
    return (int(base * (1 + delta)), int(base * (1 - delta)))


def count_roots_bruteforce(Q, ext):
    """Roots of Q over F_{q^n}^k, coefficients embedded via ext.embed_scalar."""
    k = Q.k
    coeffs = [((i, j), ext.embed_scalar(a)) for (i, j), a in Q.coeffs]
    total = 0
    for v in product(range(ext.order), repeat=k):
        acc = 0
        for (i, j), a in coeffs:
            if v[i] and v[j]:
                acc = ext.add(acc, ext.mul(a, ext.mul(v[i], v[j])))
        total += acc == 0
    return total


def count_full_rank(q, k):
    """Number of rank-k forms in k variables."""
    if k == 0:
        return 1
    num = Fraction(q ** (k * (k + 1) // 2))
    for j in range(1, (k + 1) // 2 + 1):
        num *= 1 - Fraction(1, q ** (2 * j - 1))
    return int(num)


def count_forms_of_rank(q, k, r):
    if not 0 <= r <= k:
        raise ParameterError(f"need 0 <= r <= k, got r={r}, k={k}")
    return qbin(q, k, r) * count_full_rank(q, r)


def max_span_fraction_bound(q, k, n):
    """q^{k(k+1)/2 - n} / (q - 1) as an exact rational."""
    if k < 1 or n < comb(k + 1, 2):
        raise ParameterError(f"need k >= 1 and n >= C(k+1,2) = {comb(k + 1, 2)}")
    return Fraction(q ** (k * (k + 1) // 2), q ** n * (q - 1))
