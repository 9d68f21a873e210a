"""Dense linear algebra over a small field given as a ScalarField.

Vectors are lists of digits; matrices are lists of rows.  Prime fields take a
plain modular-arithmetic path, other fields go through the table methods.
"""

from __future__ import annotations


def _mod_rref(rows, p, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c] % p
                if f:
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [[x % p for x in row] for row in rows[:r]], pivots


def _table_rref(rows, F, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(x, inv) for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rref(rows, F, ncols=None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = list(rows)
    if not rows:
        return [], []
    ncols = len(rows[0]) if ncols is None else ncols
    if F.is_prime:
        return _mod_rref(rows, F.p, ncols)
    return _table_rref(rows, F, ncols)


def rank(rows, F):
    return len(rref(rows, F)[0])


def nullspace(rows, F, ncols=None):
    """Basis of {x : A x = 0} for the matrix A given by rows."""
    rows = list(rows)
    ncols = len(rows[0]) if ncols is None and rows else (ncols or 0)
    red, pivots = rref(rows, F, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, pc in zip(red, pivots):
            x[pc] = F.neg(row[f])
        basis.append(x)
    return basis


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def left_nullspace(rows, F):
    """Basis of {y : y A = 0}."""
    if not rows:
        return []
    return nullspace(transpose(rows), F, len(rows))


def solve_left(rows, y, F):
    """Some c with c A = y (A given by rows), or None when inconsistent."""
    m = len(rows)
    if m == 0:
        return [] if not any(y) else None
    # columns of A become equations: sum_i c_i A[i][j] = y_j
    aug = [[rows[i][j] for i in range(m)] + [y[j]] for j in range(len(y))]
    red, pivots = rref(aug, F, m + 1)
    if m in pivots:
        return None
    c = [0] * m
    for row, pc in zip(red, pivots):
        c[pc] = row[m]
    return c


def inverse(rows, F):
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, F, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def mat_vec_left(c, rows, F):
    """The row vector c A."""
    ncols = len(rows[0]) if rows else 0
    out = [0] * ncols
    for ci, row in zip(c, rows):
        if ci:
            out = [F.add(o, F.mul(ci, x)) for o, x in zip(out, row)]
    return out


# -- F_q-linear maps of the big field, described by basis images -----------

def map_matrix(ctx, f, basis):
    """Rows coords(f(b)) for b in basis."""
    return [ctx.coords(f(b)) for b in basis]


def combine(ctx, coeffs, elements):
    x = 0
    for c, b in zip(coeffs, elements):
        if c:
            x = ctx.add(x, ctx.scale(c, b))
    return x


def linear_kernel(ctx, f, basis):
    """Elements of span(basis) mapped to zero by the F_q-linear map f."""
    rows = map_matrix(ctx, f, basis)
    return [combine(ctx, v, basis) for v in left_nullspace(rows, ctx.scalars)]


def linear_preimage(ctx, f, basis, target):
    """Some x in span(basis) with f(x) = target, or None."""
    rows = map_matrix(ctx, f, basis)
    c = solve_left(rows, ctx.coords(target), ctx.scalars)
    if c is None:
        return None
    return combine(ctx, c, basis)


def linear_rank(ctx, f, basis):
    return rank(map_matrix(ctx, f, basis), ctx.scalars)
