"""F_q-subspaces of F_{q^n} in canonical reduced row echelon form."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product

from .errors import ParameterError
from .field_tower import FieldCtx
from .linalg import rank, rref


@dataclass(frozen=True)
class Subspace:
    """An F_q-subspace; ``rows`` are the RREF F_q-coordinate vectors of a basis.

    Two subspaces of the same field are equal exactly when their rows are.
    """

    ctx: FieldCtx = field(repr=False)
    rows: tuple

    @property
    def dim(self):
        return len(self.rows)

    @cached_property
    def basis(self):
        """Basis elements as field elements, in row order."""
        return tuple(self.ctx.from_coords(list(r)) for r in self.rows)

    @cached_property
    def pivots(self):
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.rows)

    def key(self):
        return self.rows

    def combination(self, coeffs):
        ctx = self.ctx
        x = 0
        for c, b in zip(coeffs, self.basis):
            if c:
                x = ctx.add(x, ctx.scale(c, b))
        return x

    def elements(self):
        """All q^dim elements, zero first."""
        return [self.combination(c) for c in product(range(self.ctx.q), repeat=self.dim)]

    def contains(self, a):
        if a == 0:
            return True
        rows = [list(r) for r in self.rows] + [self.ctx.coords(a)]
        return rank(rows, self.ctx.scalars) == self.dim

    def to_json(self):
        return {"dim": self.dim, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, ctx, data):
        V = from_rows(ctx, data["rows"])
        if V.dim != data.get("dim", V.dim):
            raise ParameterError("subspace rows are linearly dependent")
        return V


def from_rows(ctx, rows):
    red, _ = rref([list(r) for r in rows], ctx.scalars, ctx.n)
    return Subspace(ctx, tuple(tuple(r) for r in red))


def span(ctx, gens):
    """Canonical F_q-span of the given field elements."""
    rows = [ctx.coords(g) for g in gens if g]
    if not rows:
        return Subspace(ctx, ())
    return from_rows(ctx, rows)


def _same_ctx(U, V):
    if U.ctx != V.ctx:
        raise ParameterError("subspaces live in different field contexts")


def shift(V, alpha):
    """The cyclic shift alpha*V."""
    if alpha == 0:
        raise ParameterError("cannot shift by zero")
    ctx = V.ctx
    return span(ctx, [ctx.mul(alpha, b) for b in V.basis])


def sum_dim(U, V):
    _same_ctx(U, V)
    rows = [list(r) for r in U.rows + V.rows]
    return rank(rows, U.ctx.scalars) if rows else 0


def intersect_dim(U, V):
    return U.dim + V.dim - sum_dim(U, V)


def subspace_distance(U, V):
    """dim U + dim V - 2 dim(U & V)."""
    return 2 * sum_dim(U, V) - U.dim - V.dim


def pair_products(V):
    """Products b_i b_j, i <= j, of basis elements."""
    ctx, B = V.ctx, V.basis
    return [ctx.mul(B[i], B[j]) for i in range(len(B)) for j in range(i, len(B))]


def product_space(S, T):
    _same_ctx(S, T)
    ctx = S.ctx
    return span(ctx, [ctx.mul(s, t) for s in S.basis for t in T.basis])


def square(V):
    return span(V.ctx, pair_products(V))


def square_dim(V):
    return rank([V.ctx.coords(x) for x in pair_products(V)], V.ctx.scalars) if V.dim else 0


def projective_coefficients(q, k):
    """Coefficient vectors whose first nonzero entry is 1, in lexicographic order."""
    out = []
    for lead in range(k):
        for tail in product(range(q), repeat=k - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


def projective_reps(V):
    """One normalized nonzero element per F_q-line of V.

    Because the basis is in RREF, the first nonzero coordinate of a
    combination is its first nonzero coefficient, so each representative is
    normalized in the field sense as well.
    """
    return [V.combination(c) for c in projective_coefficients(V.ctx.q, V.dim)]


def projective_points(ctx):
    """Normalized representatives of all F_q-lines of F_{q^n}, ascending."""
    if ctx.q == 2:
        return list(range(1, ctx.order))
    return [a for a in range(1, ctx.order) if ctx.leading_scalar(a) == 1]


def full_space(ctx):
    return Subspace(ctx, tuple(tuple(1 if i == j else 0 for j in range(ctx.n))
                               for i in range(ctx.n)))


def subfield_space(ctx, t):
    """F_{q^t} as an F_q-subspace (t | n)."""
    return span(ctx, ctx.subfield_basis(t))


def enumerate_grassmannian(ctx, k):
    """Every k-dimensional subspace of F_{q^n}, generated as RREF matrices."""
    q, n = ctx.q, ctx.n
    for pivots in combinations(range(n), k):
        slots = [(i, c) for i, pc in enumerate(pivots)
                 for c in range(pc + 1, n) if c not in pivots]
        for values in product(range(q), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), v in zip(slots, values):
                rows[i][c] = v
            yield Subspace(ctx, tuple(tuple(r) for r in rows))


def grassmannian_size(q, n, k):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
