"""Brute-force lattice search, used to cross-verify the closed formulas.

The oracle knows nothing about congruence criteria or counting cases.  It
scans primitive classes v = a*(f + e*g) + b*delta inside finite bounds and
keeps those with bbf_square(v) = 2d and divisibility(v) = t, checking both
through the lattice module's definitions.  Since v and -v generate the same
polarization data, a is restricted to a >= 1 while b runs over both signs.

For a non-empty space the explicit witness construction produces a class
with a = t, 1 <= b <= t^2 and e = (d + b^2*m)/t^2 <= d + t^2*m, so the
default bounds (max_a = t, max_b = t^2, max_e = d + t^4*(n+1)) are large
enough that "no hit within default bounds" genuinely means "empty".
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple, Optional

from .lattice import LatticeClass, bbf_square, divisibility
from .moduli import ModuliQuery, Witness

__all__ = [
    "SearchBounds",
    "default_bounds",
    "enumerate_witnesses",
    "verify_witness",
]


class SearchBounds(NamedTuple):
    max_a: int
    max_b: int
    max_e: int


def default_bounds(q: ModuliQuery) -> SearchBounds:
    """Bounds guaranteed to contain a witness whenever one exists at all."""
    t = q.t
    return SearchBounds(max_a=t, max_b=t * t,
                        max_e=q.d + t ** 4 * (q.n + 1))


def enumerate_witnesses(
    q: ModuliQuery,
    bounds: Optional[SearchBounds] = None,
    stop_after: Optional[int] = None,
) -> list[Witness]:
    """All witnesses with 1 <= a <= max_a, |b| <= max_b, 1 <= e <= max_e.

    Returned sorted by (a, b, e).  With stop_after = k the scan stops once
    k witnesses are found (the result is then a prefix of the full sorted
    enumeration, which is what existence probes need).
    """
    if bounds is None:
        bounds = default_bounds(q)
    family, n, d, t = q
    m = family.m(n)
    max_a, max_b, max_e = bounds
    found: list[Witness] = []
    squares = [a * a for a in range(max_a + 1)]
    for a in range(1, max_a + 1):
        asq = squares[a]
        for b in range(-max_b, max_b + 1):
            # e is forced by requiring the square to be 2d:
            # 2*a^2*e - 2*b^2*m = 2d  <=>  e = (d + b^2*m) / a^2.
            num = d + b * b * m
            if num % asq:
                continue
            e = num // asq
            if e < 1 or e > max_e:
                continue
            if gcd(a, b) != 1:
                continue
            c = LatticeClass(family, n, a, b, e)
            if bbf_square(c) != 2 * d or divisibility(c) != t:
                continue
            found.append(Witness(a, b, e))
            if stop_after is not None and len(found) >= stop_after:
                return found
    found.sort()
    return found


def verify_witness(w: Witness, q: ModuliQuery) -> bool:
    """True iff w really is a polarization class for q: primitive, e >= 1,
    square 2d, divisibility t, all checked through the lattice module."""
    if w.e < 1 or gcd(w.a, w.b) != 1:
        return False
    c = LatticeClass(q.family, q.n, w.a, w.b, w.e)
    return bbf_square(c) == 2 * q.d and divisibility(c) == q.t
