"""BBF squares and divisibilities of polarization classes.

For the two families handled here the second cohomology carries the
Beauville-Bogomolov-Fujiki form:

    K3HILB (Hilbert schemes of n points on a K3 surface, n >= 2):
        H^2 = U^3 + E8(-1)^2 + Z*delta,   delta^2 = -2(n-1),  rank 23
    KUMMER (generalized Kummer varieties, n >= 2):
        H^2 = U^3 + Z*delta,              delta^2 = -2(n+1),  rank 7

A polarization candidate is a class v = a*(f + e*g) + b*delta where f, g is
a standard basis of one hyperbolic plane U (f^2 = g^2 = 0, f.g = 1), e >= 1,
and gcd(a, b) = 1 so that v is primitive.  Its square and divisibility (the
positive generator of the pairing ideal (v, H^2)) have closed forms, with
m = n-1 resp. n+1:

    v^2 = 2*a^2*e - 2*b^2*m
    div(v) = gcd(a, 2*b*m)

`bbf_square` and `divisibility` evaluate those closed forms; the Gram-matrix
path (`rank3_model` / `full_model` + `gram_divisibility`) recomputes the same
quantities from an explicit bilinear form, with no shared code, as an oracle.

Why a rank 3 model is faithful: v lies in the sublattice M = U + Z*delta,
and M splits off H^2 as a direct summand, H^2 = M + N with N orthogonal to
M.  Every pairing of v against H^2 is then a pairing against M (the N part
contributes 0), so the ideal (v, H^2) equals (v, M) and the divisibility of
v computed in the 3 x 3 Gram matrix of M is the divisibility in the full
lattice; the square is an evaluation of the same form and does not see N at
all.  This needs only the direct sum decomposition, not unimodularity of N.
The full-rank models are still provided (23 x 23 and 7 x 7) so tests can
check the reduction instead of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import NamedTuple, Sequence

__all__ = [
    "DimensionMismatch",
    "Family",
    "GramLattice",
    "LatticeClass",
    "bbf_square",
    "direct_sum",
    "divisibility",
    "e8_minus",
    "embed_full",
    "embed_rank3",
    "full_model",
    "gram_divisibility",
    "hyperbolic_plane",
    "is_primitive",
    "rank3_model",
]


class DimensionMismatch(ValueError):
    """Vector length does not match the rank of the Gram matrix."""


class Family(Enum):
    """The two deformation families, tagged by their CLI names."""

    K3HILB = "k3n"
    KUMMER = "kum"

    def m(self, n: int) -> int:
        """The integer m with delta^2 = -2m: n-1 for K3HILB, n+1 for KUMMER."""
        if n < 2:
            raise ValueError("n must be >= 2, got %r" % (n,))
        return n - 1 if self is Family.K3HILB else n + 1

    def delta_square(self, n: int) -> int:
        return -2 * self.m(n)


class LatticeClass(NamedTuple):
    """The class a*(f + e*g) + b*delta in the lattice of `family` at `n`."""

    family: Family
    n: int
    a: int
    b: int
    e: int


def _check(c: LatticeClass) -> None:
    if c.n < 2:
        raise ValueError("n must be >= 2, got %r" % (c.n,))
    if c.e < 1:
        raise ValueError("e must be >= 1, got %r" % (c.e,))
    if c.a == 0 and c.b == 0:
        raise ValueError("(a, b) = (0, 0) is the zero class")


def bbf_square(c: LatticeClass) -> int:
    """BBF square of the class: 2*a^2*e - 2*b^2*m.

    >>> bbf_square(LatticeClass(Family.K3HILB, 2, 2, 1, 1))
    6
    >>> bbf_square(LatticeClass(Family.KUMMER, 2, 2, 1, 1))
    2
    """
    _check(c)
    return 2 * c.a * c.a * c.e - 2 * c.b * c.b * c.family.m(c.n)


def divisibility(c: LatticeClass) -> int:
    """Positive generator of the pairing ideal: gcd(a, 2*b*m).

    Independent of e, like the pairing ideal itself.

    >>> divisibility(LatticeClass(Family.K3HILB, 2, 2, 1, 1))
    2
    """
    _check(c)
    return gcd(c.a, 2 * c.b * c.family.m(c.n))


def is_primitive(a: int, b: int) -> bool:
    """True iff a*(f + e*g) + b*delta is primitive, i.e. gcd(a, b) = 1."""
    return gcd(a, b) == 1


@dataclass(frozen=True)
class GramLattice:
    """A lattice given by an explicit integer Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        r = len(self.gram)
        for row in self.gram:
            if len(row) != r:
                raise ValueError("Gram matrix must be square")
        for i in range(r):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Bilinear pairing u.v."""
        if len(u) != self.rank or len(v) != self.rank:
            raise DimensionMismatch(
                "expected vectors of length %d" % self.rank)
        return sum(ui * sum(gij * vj for gij, vj in zip(row, v))
                   for ui, row in zip(u, self.gram))

    def square(self, v: Sequence[int]) -> int:
        return self.pair(v, v)


def gram_divisibility(lat: GramLattice, v: Sequence[int]) -> int:
    """gcd of the pairings of v with a basis; v must be nonzero.

    This is the divisibility of v in `lat`, computed with no reference to
    the closed forms above.
    """
    if len(v) != lat.rank:
        raise DimensionMismatch(
            "vector of length %d in a rank %d lattice" % (len(v), lat.rank))
    g = 0
    for row in lat.gram:
        g = gcd(g, sum(x * y for x, y in zip(row, v)))
    if g == 0:
        raise ValueError("divisibility of the zero vector is undefined")
    return g


def hyperbolic_plane() -> GramLattice:
    """U: the even unimodular rank 2 lattice of signature (1, 1)."""
    return GramLattice(((0, 1), (1, 0)))


# E8 Cartan matrix (nodes numbered so that 1-3-4-5-6-7-8 is the chain and
# node 2 hangs off node 4), then negated to get the negative definite E8(-1).
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def e8_minus() -> GramLattice:
    """E8(-1): negative definite, even, unimodular, rank 8."""
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for i, j in _E8_EDGES:
        g[i - 1][j - 1] = g[j - 1][i - 1] = 1
    return GramLattice(tuple(tuple(row) for row in g))


def direct_sum(*parts: GramLattice) -> GramLattice:
    """Orthogonal direct sum, blocks in the given order."""
    rank = sum(p.rank for p in parts)
    g = [[0] * rank for _ in range(rank)]
    off = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                g[off + i][off + j] = p.gram[i][j]
        off += p.rank
    return GramLattice(tuple(tuple(row) for row in g))


def rank3_model(family: Family, n: int) -> GramLattice:
    """U + <-2m> with basis (f, g, delta): the summand containing every
    class this package handles."""
    return GramLattice(((0, 1, 0), (1, 0, 0), (0, 0, family.delta_square(n))))


def embed_rank3(c: LatticeClass) -> tuple[int, int, int]:
    """Coordinates of a*(f + e*g) + b*delta in the (f, g, delta) basis."""
    return (c.a, c.a * c.e, c.b)


def full_model(family: Family, n: int) -> GramLattice:
    """The full BBF lattice: rank 23 for K3HILB, rank 7 for KUMMER."""
    u = hyperbolic_plane()
    span = GramLattice(((family.delta_square(n),),))
    if family is Family.K3HILB:
        e8 = e8_minus()
        return direct_sum(u, u, u, e8, e8, span)
    return direct_sum(u, u, u, span)


def embed_full(c: LatticeClass) -> tuple[int, ...]:
    """Coordinates in the full model: (a, a*e) in the first U, b on delta."""
    rank = 23 if c.family is Family.K3HILB else 7
    v = [0] * rank
    v[0] = c.a
    v[1] = c.a * c.e
    v[-1] = c.b
    return tuple(v)
