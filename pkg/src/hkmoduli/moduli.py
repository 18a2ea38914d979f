"""Moduli spaces of polarized pairs: non-emptiness, components, thresholds.

A query (family, n, d, t) asks about the moduli space of polarized pairs
(X, H) where X deforms to the Hilbert scheme of n points on a K3 surface
(family K3HILB) or to a generalized Kummer variety of dimension 2n (family
KUMMER), H is primitive ample with BBF square 2d and divisibility t.  Write
m = n-1 for K3HILB and m = n+1 for KUMMER throughout.

Non-emptiness.  The space is non-empty iff t divides 2m and there is an
integer b, coprime to t, with d = -b^2*m (mod t^2).  When such b exists the
class a*(f + e*g) + b*delta with a = t and e = (d + b^2*m) / t^2 has square
2d and divisibility t, giving an explicit witness; `witness` returns it with
the smallest valid b in [1, t^2].

Component count.  With G = gcd(2d, 2m), t | G, set

    d1 = 2d / G,  n1 = 2m / G,  g = G / t,  w = gcd(g, t),
    g1 = g / w,   t1 = t / w,
    w+ = product of the full p-parts of w over primes p | gcd(w, t1),
    w- = w / w+.

For t > 2 the number of connected components is

    w+ * phi(w-) * 2^(rho(t1) - 1)        in cases (i)-(iii)
    w+ * phi(w-) * 2^(rho(t1/2) - 1)      in case (iv)

when exactly one of the following holds, and 0 otherwise:

    (i)   g1 even,  gcd(d1, t1) = gcd(n1, t1) = 1,
          -d1/n1 a square mod t1;
    (ii)  g1, t1, d1 odd,  gcd(d1, t1) = 1,  gcd(n1, 2*t1) = 1,
          -d1/n1 a square mod 2*t1;
    (iii) g1, t1, w odd,  d1 even,  gcd(d1, t1) = 1,  gcd(n1, 2*t1) = 1,
          -d1/(4*n1) a square mod t1;
    (iv)  g1 odd,  t1 even,  gcd(d1, t1) = 1,  gcd(n1, 2*t1) = 1,
          -d1/n1 a square mod 2*t1.

For t <= 2 the count is 1 when one of the same four conditions holds and 0
otherwise.  Two implementation notes, both forced by consistency with the
non-emptiness criterion (the equivalence count >= 1 <=> non-empty is grid
tested in the acceptance suite):

* The power of two is taken with exact division: when rho(t1) = 0 (resp.
  rho(t1/2) = 0 in case (iv)) the remaining factor w+ * phi(w-) is halved.
  That factor is provably even whenever the exponent is negative (t1 = 1
  forces w = t >= 3, and phi of anything >= 3 is even, while 2-adic parts
  land in w+), so the division is exact; `InternalInconsistency` is raised
  if it ever were not.  Rounding the exponent up to 0 instead would double
  the count of, e.g., (K3HILB, n=10, d=27, t=3) from the correct 1 to 2.

* In case (iv) the parity condition is on t1 for both families.  Reading it
  as a parity condition on d1 for KUMMER would contradict non-emptiness on
  hundreds of small queries (already (KUMMER, n=2, d=1, t=2), which has the
  explicit witness a=2, b=1, e=1 but would be assigned count 0, since
  gcd(d1, t1) = 1 forces d1 odd when t1 is even).

Case (iii) is vacuous as stated: g1, t1, w all odd forces t odd, hence
g = G/t even (G is a gcd of even numbers), hence g1 even.  It is kept for
completeness and costs nothing.

Thresholds.  For t >= 2 let tau = t^2 / (2*(t-1)), an exact rational.  On
some connected component of a non-empty moduli space the polarization is

    K3HILB:  base point free if d >= (tau-1)*n + tau + 1,
             very ample     if d >= (tau-1)*n + 2*tau + 1;
    KUMMER:  base point free if d >= (tau-1)*n + 2*tau - 1,
             very ample     if d >= (tau-1)*n + 3*tau - 1.

For t = 1: on some component, K3HILB polarizations are always base point
free and very ample iff d >= n+1; KUMMER polarizations are base point free
iff d >= 3 and very ample iff d >= n+4.  Whenever H is base point free on a
component, H^(n+2) is very ample there.  All guarantees are per-component;
they extend to the whole space exactly when the component count is 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd
from typing import NamedTuple, Optional

from .arith import euler_phi, factorize, qr_of_ratio, rho
from .lattice import Family, LatticeClass, bbf_square, divisibility, is_primitive

__all__ = [
    "ComponentCountDetail",
    "Decomposition",
    "DivisibilityViolation",
    "InternalInconsistency",
    "ModuliQuery",
    "ModuliReport",
    "ThresholdDecision",
    "Witness",
    "component_count",
    "component_count_detail",
    "decompose",
    "is_nonempty",
    "nonempty_residue",
    "prime_power_connected",
    "report",
    "thresholds",
    "witness",
]

logger = logging.getLogger(__name__)


class DivisibilityViolation(ValueError):
    """t does not divide gcd(2d, 2m)."""


class InternalInconsistency(RuntimeError):
    """The counting formula and the non-emptiness criterion disagree."""


class ModuliQuery(NamedTuple):
    family: Family
    n: int
    d: int
    t: int


class Witness(NamedTuple):
    """Coordinates (a, b, e) of a polarization class a*(f + e*g) + b*delta."""

    a: int
    b: int
    e: int


def _validate(q: ModuliQuery) -> None:
    if q.n < 2:
        raise ValueError("n must be >= 2, got %r" % (q.n,))
    if q.d < 1:
        raise ValueError("d must be >= 1, got %r" % (q.d,))
    if q.t < 1:
        raise ValueError("t must be >= 1, got %r" % (q.t,))


@dataclass(frozen=True)
class Decomposition:
    """The derived quantities the counting cases are stated in.

    big_gcd = gcd(2d, 2m), d1 = 2d/big_gcd, n1 = 2m/big_gcd, g = big_gcd/t,
    w = gcd(g, t), g1 = g/w, t1 = t/w; w_plus collects the full p-part of w
    for every prime p dividing gcd(w, t1) and w_minus = w / w_plus.
    """

    big_gcd: int
    d1: int
    n1: int
    g: int
    w: int
    g1: int
    t1: int
    w_plus: int
    w_minus: int


class ComponentCountDetail(NamedTuple):
    count: int
    branch: Optional[str]
    halved: bool
    decomposition: Optional[Decomposition]
    matched: tuple[str, ...]


@dataclass(frozen=True)
class ThresholdDecision:
    """Per-component ampleness guarantees for a query (see module docstring).

    The booleans say whether d clears the bound; they are statements about
    components and are vacuous when the space is empty.  d_min_bpf/d_min_va
    are the smallest integers d clearing each bound at this (family, n, t).
    tau is None exactly when t = 1.
    """

    bpf: bool
    very_ample: bool
    fujita_power: int
    tau: Optional[Fraction]
    d_min_bpf: int
    d_min_va: int
    t_equals_one: bool
    notes: tuple[str, ...]


@dataclass(frozen=True)
class ModuliReport:
    family: Family
    n: int
    d: int
    t: int
    non_empty: bool
    components: int
    witness: Optional[Witness]
    bpf_some_component: bool
    va_some_component: bool
    fujita_power: int
    applies_to_all_components: bool
    threshold_notes: tuple[str, ...]


def decompose(q: ModuliQuery) -> Decomposition:
    """Split the query into the gcd data the counting cases use.

    Raises DivisibilityViolation when t does not divide gcd(2d, 2m).
    """
    _validate(q)
    m = q.family.m(q.n)
    big = gcd(2 * q.d, 2 * m)
    if big % q.t:
        raise DivisibilityViolation(
            "t = %d does not divide gcd(2d, 2m) = %d" % (q.t, big))
    g = big // q.t
    w = gcd(g, q.t)
    t1 = q.t // w
    w_plus = 1
    for p, k in factorize(w):
        if t1 % p == 0:
            w_plus *= p ** k
    return Decomposition(
        big_gcd=big,
        d1=2 * q.d // big,
        n1=2 * m // big,
        g=g,
        w=w,
        g1=g // w,
        t1=t1,
        w_plus=w_plus,
        w_minus=w // w_plus,
    )


def _matched_cases(dec: Decomposition) -> list[str]:
    # Order as stated; parity and gcd conditions are evaluated before the
    # quadratic residue tests, whose invertibility preconditions they secure.
    d1, n1, g1, t1, w = dec.d1, dec.n1, dec.g1, dec.t1, dec.w
    out = []
    if (g1 % 2 == 0 and gcd(d1, t1) == 1 and gcd(n1, t1) == 1
            and qr_of_ratio(-d1, n1, t1)):
        out.append("i")
    if (g1 % 2 and t1 % 2 and d1 % 2 and gcd(d1, t1) == 1
            and gcd(n1, 2 * t1) == 1 and qr_of_ratio(-d1, n1, 2 * t1)):
        out.append("ii")
    if (g1 % 2 and t1 % 2 and w % 2 and d1 % 2 == 0 and gcd(d1, t1) == 1
            and gcd(n1, 2 * t1) == 1 and qr_of_ratio(-d1, 4 * n1, t1)):
        out.append("iii")
    if (g1 % 2 and t1 % 2 == 0 and gcd(d1, t1) == 1
            and gcd(n1, 2 * t1) == 1 and qr_of_ratio(-d1, n1, 2 * t1)):
        out.append("iv")
    return out


def _two_power_value(base: int, exponent: int, q: ModuliQuery) -> tuple[int, bool]:
    # base * 2^exponent with exact division when exponent = -1 (the only
    # negative value rho can produce).  See the module docstring.
    if exponent >= 0:
        return base << exponent, False
    if base % 2:
        raise InternalInconsistency(
            "odd branch value %d cannot be halved at %r" % (base, q))
    logger.debug("exact halving applied at %r", q)
    return base // 2, True


def component_count_detail(q: ModuliQuery) -> ComponentCountDetail:
    """Component count plus which case fired and whether halving was used."""
    _validate(q)
    try:
        dec = decompose(q)
    except DivisibilityViolation:
        return ComponentCountDetail(0, None, False, None, ())
    matched = _matched_cases(dec)
    if not matched:
        return ComponentCountDetail(0, None, False, dec, ())
    branch = matched[0]
    if q.t <= 2:
        count, halved = 1, False
    else:
        base = dec.w_plus * euler_phi(dec.w_minus)
        r = rho(dec.t1 // 2) if branch == "iv" else rho(dec.t1)
        count, halved = _two_power_value(base, r - 1, q)
    if len(matched) > 1:
        # The cases are mutually exclusive by parity; if that ever failed
        # they would still have to agree on the value.
        for other in matched[1:]:
            if q.t <= 2:
                continue
            base = dec.w_plus * euler_phi(dec.w_minus)
            r = rho(dec.t1 // 2) if other == "iv" else rho(dec.t1)
            assert _two_power_value(base, r - 1, q)[0] == count, \
                "overlapping cases %r disagree at %r" % (matched, q)
    return ComponentCountDetail(count, branch, halved, dec, tuple(matched))


def component_count(q: ModuliQuery) -> int:
    """Number of connected components of the moduli space (0 when empty)."""
    return component_count_detail(q).count


def nonempty_residue(q: ModuliQuery) -> Optional[int]:
    """Smallest b in [1, t^2] with gcd(b, t) = 1 and d = -b^2*m (mod t^2),
    or None when the space is empty (including when t does not divide 2m)."""
    _validate(q)
    m = q.family.m(q.n)
    if (2 * m) % q.t:
        return None
    tsq = q.t * q.t
    target = (-q.d) % tsq
    for b in range(1, tsq + 1):
        if gcd(b, q.t) == 1 and (b * b * m) % tsq == target:
            return b
    return None


def is_nonempty(q: ModuliQuery) -> bool:
    """True iff the moduli space is non-empty."""
    return nonempty_residue(q) is not None


def witness(q: ModuliQuery) -> Optional[Witness]:
    """An explicit polarization class for a non-empty space, None otherwise.

    Returns (a, b, e) = (t, b, (d + b^2*m) / t^2) with the smallest valid b.
    The square, divisibility and primitivity of the result are re-verified
    through the lattice module, not assumed from the construction.
    """
    b = nonempty_residue(q)
    if b is None:
        return None
    m = q.family.m(q.n)
    e = (q.d + b * b * m) // (q.t * q.t)
    w = Witness(a=q.t, b=b, e=e)
    c = LatticeClass(q.family, q.n, w.a, w.b, w.e)
    if (e < 1 or bbf_square(c) != 2 * q.d or divisibility(c) != q.t
            or not is_primitive(w.a, w.b)):
        raise InternalInconsistency(
            "constructed witness %r fails verification at %r" % (w, q))
    return w


def thresholds(q: ModuliQuery) -> ThresholdDecision:
    """Per-component base point freeness / very ampleness guarantees.

    Pure threshold arithmetic: exact rational comparisons, no emptiness
    check.  Combine with non-emptiness via `report`.
    """
    _validate(q)
    n, d, t = q.n, q.d, q.t
    fujita = n + 2
    notes: list[str] = []
    if t == 1:
        if q.family is Family.K3HILB:
            bpf_min, va_min = 1, n + 1
            notes.append("t = 1: base point free for every d on some component")
        else:
            bpf_min, va_min = 3, n + 4
            notes.append(
                "t = 1: base point free on some component iff d >= 3")
        bpf = d >= bpf_min
        va = d >= va_min
        notes.append("very ample on some component iff d >= %d; d = %d: %s"
                     % (va_min, d, "satisfied" if va else "not satisfied"))
        tau = None
    else:
        tau = Fraction(t * t, 2 * (t - 1))
        if q.family is Family.K3HILB:
            bpf_bound = (tau - 1) * n + tau + 1
            va_bound = (tau - 1) * n + 2 * tau + 1
        else:
            bpf_bound = (tau - 1) * n + 2 * tau - 1
            va_bound = (tau - 1) * n + 3 * tau - 1
        bpf_min, va_min = ceil(bpf_bound), ceil(va_bound)
        bpf = d >= bpf_bound
        va = d >= va_bound
        notes.append("tau = t^2/(2(t-1)) = %s" % (tau,))
        notes.append(
            "base point free on some component iff d >= %s "
            "(minimal integer d = %d); d = %d: %s"
            % (bpf_bound, bpf_min, d, "satisfied" if bpf else "not satisfied"))
        notes.append(
            "very ample on some component iff d >= %s "
            "(minimal integer d = %d); d = %d: %s"
            % (va_bound, va_min, d, "satisfied" if va else "not satisfied"))
    if bpf:
        notes.append("H^%d is very ample on the base point free component"
                     % fujita)
    return ThresholdDecision(
        bpf=bpf,
        very_ample=va,
        fujita_power=fujita,
        tau=tau,
        d_min_bpf=bpf_min,
        d_min_va=va_min,
        t_equals_one=(t == 1),
        notes=tuple(notes),
    )


def prime_power_connected(q: ModuliQuery) -> bool:
    """Sufficient condition for connectedness by the shape of t alone.

    True when t = 2, or t = p^a for an odd prime p with p^(a+1) not
    dividing gcd(2d, 2m).  False otherwise (in particular for t = 1 and
    for t a higher power of 2: no claim is made there, even though t = 1
    spaces are in fact connected whenever non-empty).
    """
    _validate(q)
    if q.t == 2:
        return True
    fac = factorize(q.t)
    if len(fac) != 1:
        return False
    p, a = fac[0]
    if p == 2:
        return False
    m = q.family.m(q.n)
    return gcd(2 * q.d, 2 * m) % p ** (a + 1) != 0


def report(q: ModuliQuery) -> ModuliReport:
    """Full answer for one query.

    Cross-checks the counting formula against the non-emptiness criterion
    and raises InternalInconsistency when they disagree.  The per-component
    guarantees are masked with non-emptiness (no component, no claim) and
    apply to every component exactly when the count is 1.
    """
    _validate(q)
    ne = is_nonempty(q)
    detail = component_count_detail(q)
    if (detail.count >= 1) != ne:
        raise InternalInconsistency(
            "non_empty = %r but component count = %d at %r"
            % (ne, detail.count, q))
    th = thresholds(q)
    w = witness(q) if ne else None
    notes = list(th.notes)
    if detail.halved:
        notes.append("component count used exact halving (rho = 0 case)")
    return ModuliReport(
        family=q.family,
        n=q.n,
        d=q.d,
        t=q.t,
        non_empty=ne,
        components=detail.count,
        witness=w,
        bpf_some_component=th.bpf and ne,
        va_some_component=th.very_ample and ne,
        fujita_power=th.fujita_power,
        applies_to_all_components=detail.count == 1,
        threshold_notes=tuple(notes),
    )
