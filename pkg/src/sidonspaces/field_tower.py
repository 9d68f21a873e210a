"""Exact arithmetic in F_{q^n}, q = p^e, as a single extension of F_p.

Elements are plain ints: the coefficient vector (c_0, ..., c_{D-1}) of the
residue polynomial modulo the context modulus, packed in base p with c_0 the
least significant digit (D = e*n).  Integer order on elements is the
"coordinate order" used for every deterministic choice in the package.

Subfields F_{q^t} (t | n) are never represented separately; they are the
fixed points of x -> x^{q^t} inside the big field.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product

from sympy import factorint, isprime

from .errors import ParameterError
from .linalg import inverse, linear_rank

MAX_ORDER = 2 ** 63
_TABLE_LIMIT = 2 ** 16


@lru_cache(maxsize=None)
def prime_factors(n):
    return tuple(sorted(factorint(n)))


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def split_prime_power(q):
    """Return (p, e) with q = p^e, or raise ParameterError."""
    if q < 2:
        raise ParameterError(f"q={q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ParameterError(f"q={q} is not a prime power")
    (p, e), = f.items()
    return p, e


class ScalarField:
    """A small field GF(q) whose elements are the digits 0..q-1.

    Digit 0 is zero and digit 1 is one.  Prime fields use modular arithmetic;
    proper prime-power fields carry addition and multiplication tables that
    are induced by an embedding into a FieldCtx.
    """

    def __init__(self, p, e=1, add_table=None, mul_table=None):
        self.p = p
        self.e = e
        self.q = p ** e
        self.is_prime = e == 1
        self._add = add_table
        self._mul = mul_table
        if not self.is_prime:
            q = self.q
            self._neg = [next(b for b in range(q) if add_table[a][b] == 0) for a in range(q)]
            self._inv = [0] + [next(b for b in range(1, q) if mul_table[a][b] == 1)
                               for a in range(1, q)]

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return (isinstance(other, ScalarField) and self.q == other.q
                and self._mul == other._mul and self._add == other._add)

    def __hash__(self):
        return hash((self.p, self.e))

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        if self.is_prime:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a):
        if self.is_prime:
            return -a % self.p
        return self._neg[a]

    def sub(self, a, b):
        if self.is_prime:
            return (a - b) % self.p
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        if self.is_prime:
            return a * b % self.p
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime:
            return pow(a, -1, self.p)
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        r = 1
        for _ in range(k):
            r = self.mul(r, a)
        return r


# -- polynomials over a ScalarField: digit lists, ascending degree, trimmed --

def poly_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(f, g, F):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return poly_trim(F.add(a, b) for a, b in zip(f, g))


def poly_sub(f, g, F):
    return poly_add(f, [F.neg(b) for b in g], F)


def poly_mul(f, g, F):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(out)


def poly_divmod(f, g, F):
    g = poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(f)
    lead_inv = F.inv(g[-1])
    quo = [0] * max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - len(g)
        quo[shift] = c
        for j, b in enumerate(g):
            r[shift + j] = F.sub(r[shift + j], F.mul(c, b))
        r = poly_trim(r)
    return poly_trim(quo), r


def poly_mod(f, g, F):
    return poly_divmod(f, g, F)[1]


def poly_gcd(f, g, F):
    a, b = poly_trim(f), poly_trim(g)
    while b:
        a, b = b, poly_mod(a, b, F)
    if a:
        lead_inv = F.inv(a[-1])
        a = [F.mul(c, lead_inv) for c in a]
    return a


def poly_powmod(base, exp, mod, F):
    result = [1]
    base = poly_mod(base, mod, F)
    while exp:
        if exp & 1:
            result = poly_mod(poly_mul(result, base, F), mod, F)
        exp >>= 1
        if exp:
            base = poly_mod(poly_mul(base, base, F), mod, F)
    return result


def is_irreducible(f, F):
    """Rabin's irreducibility test for a polynomial over the scalar field F."""
    f = poly_trim(f)
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    lead_inv = F.inv(f[-1])
    f = [F.mul(c, lead_inv) for c in f]
    x = [0, 1]
    frob = [x]
    h = x
    for _ in range(deg):
        h = poly_powmod(h, F.q, f, F)
        frob.append(h)
    if poly_trim(poly_sub(frob[deg], x, F)):
        return False
    for r in prime_factors(deg):
        g = poly_gcd(poly_sub(frob[deg // r], x, F), f, F)
        if len(g) > 1:
            return False
    return True


def poly_to_int(f, q):
    v = 0
    for c in reversed(f):
        v = v * q + c
    return v


def int_to_poly(v, q):
    out = []
    while v:
        v, r = divmod(v, q)
        out.append(r)
    return out


def monic_irreducibles(F, degree):
    """Monic irreducible polynomials of the given degree, in integer order."""
    q = F.q
    for tail in range(q ** degree):
        f = int_to_poly(tail, q)
        f = f + [0] * (degree - len(f)) + [1]
        if degree > 1 and f[0] == 0:
            continue
        if is_irreducible(f, F):
            yield f


def smallest_irreducible(p, degree):
    return next(monic_irreducibles(ScalarField(p), degree))


class FieldCtx:
    """The field F_{q^n} with fixed modulus, primitive element and coordinates.

    ``k`` is carried along for the constructions (the intermediate field
    F_{q^k}); it need not divide ``n``.  Instances are immutable after
    construction; lazily built lookup tables are pure caches.
    """

    def __init__(self, p, e, k, n, modulus, seed=0):
        if not isprime(p):
            raise ParameterError(f"p={p} is not prime")
        if e < 1 or k < 1 or n < 1:
            raise ParameterError("e, k and n must be positive")
        self.p, self.e, self.k, self.n = p, e, k, n
        self.q = p ** e
        self.order = self.q ** n
        if self.order >= MAX_ORDER:
            raise ParameterError(f"q^n = {self.q}^{n} does not fit in 63 bits")
        if e > 1 and self.q > 1024:
            raise ParameterError("proper prime-power base fields are limited to q <= 1024")
        self.D = e * n
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != self.D + 1 or modulus[-1] != 1:
            raise ParameterError(f"modulus must be monic of degree {self.D}")
        self.modulus = modulus
        self.seed = seed
        self._gfp = ScalarField(p)
        if not is_irreducible(list(modulus), self._gfp):
            raise ParameterError(f"modulus {modulus} is reducible over F_{p}")
        self._mod_int = poly_to_int(modulus[:self.D], 2) if p == 2 else None
        # x^{D+i} mod f for i < D-1, as digit lists (odd p)
        self._red = self._reduction_rows() if p != 2 else None
        self._exp = self._log = None
        self._bsgs = None
        self.mult_order = self.order - 1
        self.beta = self._smallest_primitive()
        self.scalars = self._build_scalars()
        self._coord_inv = self._build_coordinates() if e > 1 else None

    # -- identity --------------------------------------------------------

    def _key(self):
        return (self.p, self.e, self.k, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, k={self.k}, n={self.n}, modulus={list(self.modulus)})"

    def to_json(self):
        return {"p": self.p, "e": self.e, "k": self.k, "n": self.n,
                "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data):
        return cls(data["p"], data["e"], data["k"], data["n"], data["modulus"])

    # -- digits ----------------------------------------------------------

    def digits(self, a):
        p = self.p
        if p == 2:
            return [(a >> i) & 1 for i in range(self.D)]
        out = []
        for _ in range(self.D):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def pack(self, ds):
        if self.p == 2:
            v = 0
            for i, d in enumerate(ds):
                if d:
                    v |= 1 << i
            return v
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _reduction_rows(self):
        D, p = self.D, self.p
        row = [0] * D
        row[D - 1] = 1  # x^{D-1}
        rows = []
        for _ in range(D - 1):
            # multiply by x and reduce with x^D = -sum m_j x^j
            top = row[D - 1]
            row = [0] + row[:D - 1]
            if top:
                row = [(c - top * m) % p for c, m in zip(row, self.modulus)]
            rows.append(row)
        return rows

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        r, m = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            r += (x + y) % p * m
            m *= p
        return r

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        r, m = 0, 1
        while a:
            a, x = divmod(a, p)
            r += (-x % p) * m
            m *= p
        return r

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def _mul_poly(self, a, b):
        if self.p == 2:
            D, mod_int = self.D, self._mod_int
            top = 1 << D
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= top | mod_int
            return r
        p, D = self.p, self.D
        da, db = self.digits(a), self.digits(b)
        c = [0] * (2 * D - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        c[i + j] += x * y
        low = c[:D]
        for i, hi in enumerate(c[D:]):
            if hi:
                for j, r in enumerate(self._red[i]):
                    if r:
                        low[j] += hi * r
        return self.pack([v % p for v in low])

    def _tables(self):
        if self._exp is None:
            N = self.mult_order
            exp = [0] * N
            log = [0] * self.order
            x = 1
            for i in range(N):
                exp[i] = x
                log[x] = i
                x = self._mul_poly(x, self.beta)
            self._exp, self._log = exp, log
        return self._exp, self._log

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self.order <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[(log[a] + log[b]) % self.mult_order]
        return self._mul_poly(a, b)

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if k == 0 else 0
        k %= self.mult_order
        if self.order <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[log[a] * k % self.mult_order]
        result = 1
        while k:
            if k & 1:
                result = self._mul_poly(result, a)
            k >>= 1
            if k:
                a = self._mul_poly(a, a)
        return result

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, -1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a, s=1):
        """a^{q^s}."""
        return self.pow(a, self.q ** s)

    def elements(self):
        return range(self.order)

    def nonzero(self):
        return range(1, self.order)

    # -- primitive element ----------------------------------------------

    def is_primitive(self, a):
        if a == 0:
            return False
        N = self.mult_order
        if N == 1:
            return a == 1
        return all(self._pow_poly(a, N // r) != 1 for r in prime_factors(N))

    def _pow_poly(self, a, k):
        result = 1
        while k:
            if k & 1:
                result = self._mul_poly(result, a)
            k >>= 1
            if k:
                a = self._mul_poly(a, a)
        return result

    def _smallest_primitive(self):
        for a in range(1, self.order):
            if self.is_primitive(a):
                return a
        raise AssertionError("no primitive element found")

    def element_order(self, a):
        N = self.mult_order
        m = N
        for r in prime_factors(N) if N > 1 else ():
            while m % r == 0 and self.pow(a, m // r) == 1:
                m //= r
        return m

    # -- subfields -------------------------------------------------------

    def _check_divides(self, t):
        if t < 1 or self.n % t:
            raise ParameterError(f"t={t} does not divide n={self.n}")

    def in_subfield(self, a, t):
        """True iff a lies in F_{q^t}; requires t | n."""
        self._check_divides(t)
        return self.frobenius(a, t) == a

    def subfield_generator(self, t):
        """A primitive element of F_{q^t}: beta^{(q^n-1)/(q^t-1)}."""
        self._check_divides(t)
        return self.pow(self.beta, self.mult_order // (self.q ** t - 1))

    @lru_cache(maxsize=None)
    def subfield_elements(self, t):
        w = self.subfield_generator(t)
        out, x = [0], 1
        for _ in range(self.q ** t - 1):
            out.append(x)
            x = self.mul(x, w)
        return tuple(sorted(out))

    def subfield_basis(self, t):
        """The F_q-basis 1, w, ..., w^{t-1} of F_{q^t}, w the subfield generator."""
        w = self.subfield_generator(t)
        return [self.pow(w, j) for j in range(t)]

    def smallest_primitive_of_subfield(self, t):
        target = self.q ** t - 1
        for a in self.subfield_elements(t):
            if a and self.element_order(a) == target:
                return a
        raise AssertionError("subfield without primitive element")

    # -- the base field F_q and F_q-coordinates --------------------------

    def _build_scalars(self):
        if self.e == 1:
            return ScalarField(self.p)
        g = self.subfield_generator(1)
        powers = [self.pow(g, l) for l in range(self.e)]
        embed = []
        for d in range(self.q):
            x = 0
            for l, c in enumerate(int_to_poly(d, self.p)):
                for _ in range(c):
                    x = self.add(x, powers[l])
            embed.append(x)
        index = {x: d for d, x in enumerate(embed)}
        add_t = [[index[self.add(x, y)] for y in embed] for x in embed]
        mul_t = [[index[self.mul(x, y)] for y in embed] for x in embed]
        self._embed, self._unembed = embed, index
        return ScalarField(self.p, self.e, add_t, mul_t)

    def embed_scalar(self, d):
        """The element of F_q inside F_{q^n} named by digit d."""
        return d if self.e == 1 else self._embed[d]

    def scalar_of(self, a):
        """Digit of an element known to lie in F_q."""
        if self.e == 1:
            if a >= self.p:
                raise ValueError(f"{a} is not in F_q")
            return a
        return self._unembed[a]

    def _build_coordinates(self):
        # F_p-basis g^l beta^j of F_{p^D}; coordinate j*e + l
        g = self.subfield_generator(1)
        rows = []
        for j in range(self.n):
            bj = self.pow(self.beta, j)
            for l in range(self.e):
                rows.append(self.digits(self.mul(self.pow(g, l), bj)))
        self._fq_basis = [self.pow(self.beta, j) for j in range(self.n)]
        return inverse(rows, self._gfp)

    def coords(self, a):
        """F_q-coordinates (digits) of a, length n."""
        if self.e == 1:
            return self.digits(a)
        d = self.digits(a)
        p, e, inv = self.p, self.e, self._coord_inv
        flat = [sum(d[i] * inv[i][c] for i in range(self.D) if d[i]) % p for c in range(self.D)]
        return [poly_to_int(flat[j * e:(j + 1) * e], p) for j in range(self.n)]

    def from_coords(self, vec):
        if self.e == 1:
            return self.pack(vec)
        x = 0
        for c, b in zip(vec, self._fq_basis):
            if c:
                x = self.add(x, self.mul(self._embed[c], b))
        return x

    def scale(self, d, a):
        """Multiply a by the F_q scalar with digit d."""
        if self.e == 1:
            if self.p == 2:
                return a if d else 0
            p = self.p
            r, m = 0, 1
            while a:
                a, x = divmod(a, p)
                r += x * d % p * m
                m *= p
            return r
        return self.mul(self._embed[d], a)

    def leading_scalar(self, a):
        """First nonzero F_q-coordinate of a (a != 0)."""
        if self.e == 1:
            if self.p == 2:
                return 1
            p = self.p
            while a % p == 0:
                a //= p
            return a % p
        return next(c for c in self.coords(a) if c)

    def normalize(self, a):
        """Canonical representative of the F_q-line of a (first coordinate 1)."""
        if a == 0:
            return 0
        lead = self.leading_scalar(a)
        if lead == 1:
            return a
        return self.scale(self.scalars.inv(lead), a)

    # -- polynomial evaluation with coefficients in the big field --------

    def eval_poly(self, coeffs, x):
        r = 0
        for c in reversed(coeffs):
            r = self.add(self.mul(r, x), c)
        return r


@lru_cache(maxsize=64)
def build_ctx(p, e, k, n, seed=0):
    """Context for F_{q^n}, q = p^e, using the smallest irreducible modulus.

    The modulus is the smallest monic irreducible of degree e*n over F_p in
    integer order (coefficients as base-p digits, constant term least
    significant); beta is the smallest primitive element in the same order.
    """
    if not isprime(p):
        raise ParameterError(f"p={p} is not prime")
    if e < 1 or n < 1 or k < 1:
        raise ParameterError("e, k and n must be positive")
    if (p ** e) ** n >= MAX_ORDER:
        raise ParameterError(f"q^n = {p ** e}^{n} does not fit in 63 bits")
    modulus = smallest_irreducible(p, e * n)
    return FieldCtx(p, e, k, n, modulus, seed)


def ctx_for_q(q, k, n, seed=0):
    p, e = split_prime_power(q)
    return build_ctx(p, e, k, n, seed)


# -- operations tied to the intermediate field F_{q^k} ---------------------

def _sub_order(ctx, t):
    return ctx.q ** t


def abs_trace_to_f2(ctx, y, t=None):
    """Absolute trace y + y^2 + ... + y^{q^t/2} of y in F_{q^t}, q even."""
    t = ctx.k if t is None else t
    if ctx.p != 2:
        raise ParameterError("absolute trace to F_2 needs even q")
    acc, x = 0, y
    for _ in range(ctx.e * t):
        acc ^= x
        x = ctx.mul(x, x)
    if acc not in (0, 1):
        raise AssertionError("trace left F_2; y is not in F_{q^t}")
    return acc


def is_qr(ctx, y, t=None):
    """True iff y is a nonzero square in F_{q^t} (q odd)."""
    t = ctx.k if t is None else t
    if ctx.p == 2:
        raise ParameterError("quadratic residues need odd q")
    if y == 0:
        raise ParameterError("0 is neither a residue nor a non-residue")
    return ctx.pow(y, (_sub_order(ctx, t) - 1) // 2) == 1


def is_qm1_power(ctx, y, t=None):
    """True iff y = x^{q-1} for some x in F_{q^t} (0 counts as 0^{q-1})."""
    t = ctx.k if t is None else t
    if y == 0:
        return True
    return ctx.pow(y, (_sub_order(ctx, t) - 1) // (ctx.q - 1)) == 1


def is_qm1_power_matrix(ctx, y, t=None):
    """Same predicate as is_qm1_power, decided by singularity of x -> x^q - y x on F_{q^t}."""
    t = ctx.k if t is None else t
    if y == 0:
        return True
    f = lambda x: ctx.sub(ctx.frobenius(x), ctx.mul(y, x))
    return linear_rank(ctx, f, ctx.subfield_basis(t)) < t


def quadratic_irreducible(ctx, b, c, t=None):
    """Irreducibility of x^2 + bx + c over F_{q^t} via the residue/trace criterion."""
    t = ctx.k if t is None else t
    if ctx.p == 2:
        if b == 0:
            return False
        return abs_trace_to_f2(ctx, ctx.div(c, ctx.mul(b, b)), t) == 1
    disc = ctx.sub(ctx.mul(b, b), ctx.scale(4 % ctx.p, c))
    return disc != 0 and not is_qr(ctx, disc, t)


def find_b_for_c(ctx, c, t=None):
    """Smallest b in F_{q^t} making x^2 + bx + c irreducible over F_{q^t}."""
    t = ctx.k if t is None else t
    if c == 0:
        raise ParameterError("c must be nonzero")
    for b in ctx.subfield_elements(t):
        if quadratic_irreducible(ctx, b, c, t):
            return b
    raise AssertionError("no b found; an irreducible x^2+bx+c always exists")


def discrete_log(ctx, a):
    """log_beta(a) in [0, q^n - 2] by baby-step/giant-step."""
    if a == 0:
        raise ParameterError("discrete log of zero")
    N = ctx.mult_order
    if ctx._bsgs is None:
        m = math.isqrt(N - 1) + 1 if N > 1 else 1
        table = {}
        x = 1
        for j in range(m):
            table.setdefault(x, j)
            x = ctx.mul(x, ctx.beta)
        ctx._bsgs = (m, table, ctx.inv(ctx.pow(ctx.beta, m)))
    m, table, giant = ctx._bsgs
    y = a
    for i in range(m + 1):
        j = table.get(y)
        if j is not None:
            return (i * m + j) % N
        y = ctx.mul(y, giant)
    raise AssertionError("discrete log not found")


def poly_mul_ext(ctx, f, g):
    """Product of polynomials with coefficients in the big field."""
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return out


def minimal_poly_over_subfield(ctx, gamma, t):
    """Minimal polynomial of gamma over F_{q^t}, coefficients ascending, monic."""
    ctx._check_divides(t)
    conj = [gamma]
    x = ctx.frobenius(gamma, t)
    while x != gamma:
        conj.append(x)
        x = ctx.frobenius(x, t)
    m = [1]
    for c in conj:
        m = poly_mul_ext(ctx, m, [ctx.neg(c), 1])
    return m


def gamma_via_pgamma(ctx, r):
    """gamma = -beta^i whose minimal polynomial over F_{q^k} has degree r and
    a free coefficient that is not a (q-1)st power; i is the smallest valid
    exponent."""
    q, k, n = ctx.q, ctx.k, ctx.n
    if n != k * r:
        raise ParameterError(f"need n = k*r, got n={n}, k={k}, r={r}")
    if q < 3:
        raise ParameterError("a free coefficient outside W_{q-1} needs q >= 3")
    N = ctx.mult_order
    forbidden = [N // (q ** (k * t) - 1) for t in divisors(r) if t < r]
    for i in range(1, N + 1):
        if i % (q - 1) == 0 or any(i % f == 0 for f in forbidden):
            continue
        gamma = ctx.neg(ctx.pow(ctx.beta, i))
        m = minimal_poly_over_subfield(ctx, gamma, k)
        if len(m) - 1 != r or is_qm1_power(ctx, m[0], k):
            raise AssertionError(f"exponent {i} failed the minimal-polynomial check")
        return gamma
    raise AssertionError("no admissible exponent")


def roots_in(ctx, coeffs, candidates):
    """Roots of a big-field polynomial among candidates, with multiplicity."""
    f = list(coeffs)
    while f and f[-1] == 0:
        f.pop()
    roots = []
    for rho in candidates:
        while len(f) > 1 and ctx.eval_poly(f, rho) == 0:
            # synthetic division by (x - rho)
            quo = [0] * (len(f) - 1)
            acc = 0
            for i in range(len(f) - 1, 0, -1):
                acc = ctx.add(ctx.mul(acc, rho), f[i])
                quo[i - 1] = acc
            f = quo
            roots.append(rho)
        if len(f) <= 1:
            break
    return roots, f


def all_roots_sorted(ctx, coeffs, t=None):
    """Roots in F_{q^t} (exhaustive scan), sorted, with multiplicity."""
    t = ctx.n if t is None else t
    return roots_in(ctx, coeffs, ctx.subfield_elements(t))[0]


def smallest_root(ctx, coeffs):
    """Smallest root of the polynomial in F_{q^n} (scan in element order)."""
    for x in ctx.elements():
        if ctx.eval_poly(coeffs, x) == 0:
            return x
    raise ParameterError("polynomial has no root in F_{q^n}")


__all__ = [
    "FieldCtx", "ScalarField", "build_ctx", "ctx_for_q", "split_prime_power",
    "abs_trace_to_f2", "is_qr", "is_qm1_power", "find_b_for_c", "discrete_log",
    "minimal_poly_over_subfield", "gamma_via_pgamma", "monic_irreducibles",
    "is_irreducible", "smallest_irreducible", "divisors", "prime_factors",
]
