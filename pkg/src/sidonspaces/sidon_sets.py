"""Sidon and B_r sets: extraction from (r-)Sidon spaces, checks and density."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from itertools import combinations_with_replacement
from math import comb

from .constructions import bose_sidon_set
from .errors import VerificationFailure, check_budget
from .field_tower import discrete_log
from .subspaces import projective_reps


@dataclass(frozen=True)
class SidonSetRecord:
    m: int
    r: int
    elements: tuple
    source: str
    verified: bool

    def to_json(self):
        return {"m": self.m, "r": self.r, "elements": list(self.elements),
                "source": self.source, "verified": self.verified}


def is_br_set(elements, m, r=2, force=False):
    """Distinct r-fold multiset sums mod m (over the integers when m = 0).

    Returns (ok, witness); the witness is the lexicographically first pair
    of distinct multisets with equal sums.
    """
    elements = sorted(elements)
    check_budget(comb(len(elements) + r - 1, r), "B_r check", force)
    seen = {}
    for combo in combinations_with_replacement(elements, r):
        s = sum(combo) % m if m else sum(combo)
        if s in seen:
            return False, (seen[s], combo)
        seen[s] = combo
    return True, None


def _extract(V, r, source):
    ctx = V.ctx
    m = (ctx.order - 1) // (ctx.q - 1)
    residues = sorted(discrete_log(ctx, a) % m for a in projective_reps(V))
    ok, _ = is_br_set(residues, m, r)
    if not ok or len(set(residues)) != len(residues):
        raise VerificationFailure(f"extracted set is not a B_{r} set in Z_{m}")
    return SidonSetRecord(m, r, tuple(residues), source, True)


def extract_sidon_set(V):
    """Residues log(rep) mod (q^n-1)/(q-1) of the line representatives of V."""
    return _extract(V, 2, "extracted")


def extract_br_set(V, r):
    return _extract(V, r, "extracted")


def bose_record(qp):
    elements = bose_sidon_set(qp)
    m = qp * qp - 1
    ok, _ = is_br_set(elements, m, 2)
    return SidonSetRecord(m, 2, tuple(elements), "bose", ok)


def density_report(record, q=None, digits=6):
    """(|S| / m^{1/r}, (q-1)^{1/r - 1}) rounded to the given digits.

    The second entry is None without q.  Nothing here is a limit claim; it
    is the finite ratio for this one record.
    """
    with localcontext() as dc:
        dc.prec = digits + 10
        size = Decimal(len(record.elements))
        m = Decimal(record.m)
        if record.r == 1:
            value = size / m
        else:
            value = size / m ** (Decimal(1) / Decimal(record.r))
        target = None
        if q is not None:
            target = round(Decimal(q - 1) ** (Decimal(1) / Decimal(record.r) - 1), digits)
        return round(value, digits), target
