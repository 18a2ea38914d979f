"""k-very-ampleness of line bundles on K3 and abelian surfaces.

A line bundle L on a surface S is k-very ample when the restriction map
H^0(L) -> H^0(L restricted to Z) is surjective for every length k+1
zero-dimensional subscheme Z of S.  0-very ample means globally generated
(base point free), 1-very ample means very ample.

For S with Pic(S) = Z*H, H^2 = 2e, and L = a*H (a >= 1) the sharpest
uniform bounds used here are:

    K3 surface:      a = 1: L is k-very ample iff k <= e // 2
                     a >= 2: L is k-very ample for k <= 2*(a-1)*e - 2
    abelian surface: a = 1: L is k-very ample iff k <= (e - 3) // 2
                     a >= 2: L is k-very ample for k <= 2*(a-1)*e - 2

// is floor division throughout.  The a = 1 abelian bound can be negative
(e = 1 or 2 give -1): the bundle then fails even 0-very-ampleness and the
bound is returned as is, negative values acting as a "not base point free"
sentinel.

On the Hilbert scheme of n points of a K3 surface resp. the generalized
Kummer variety of an abelian surface, the bundle induced by L is controlled
by these bounds: see `induced_bundle_status`.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

__all__ = [
    "BundleSpec",
    "BundleStatus",
    "SurfaceKind",
    "induced_bundle_status",
    "max_k_very_ample",
]


class SurfaceKind(Enum):
    K3 = "k3"
    ABELIAN = "abelian"


class BundleSpec(NamedTuple):
    """L = a*H on a surface with Pic = Z*H and H^2 = 2e."""

    surface: SurfaceKind
    a: int
    e: int


class BundleStatus(NamedTuple):
    bpf: bool
    very_ample: bool


def _check(s: BundleSpec) -> None:
    if s.a < 1:
        raise ValueError("a must be >= 1, got %r" % (s.a,))
    if s.e < 1:
        raise ValueError("e must be >= 1, got %r" % (s.e,))


def max_k_very_ample(s: BundleSpec) -> int:
    """Largest k for which the bounds above certify k-very-ampleness.

    >>> max_k_very_ample(BundleSpec(SurfaceKind.K3, 1, 4))
    2
    >>> max_k_very_ample(BundleSpec(SurfaceKind.ABELIAN, 1, 2))
    -1
    """
    _check(s)
    if s.a >= 2:
        return 2 * (s.a - 1) * s.e - 2
    if s.surface is SurfaceKind.K3:
        return s.e // 2
    return (s.e - 3) // 2


def induced_bundle_status(s: BundleSpec, n: int) -> BundleStatus:
    """Base point freeness / very ampleness of the induced bundle.

    For the Hilbert scheme of n points of a K3 surface the induced bundle
    is base point free iff L is (n-1)-very ample and very ample iff L is
    n-very ample; for the generalized Kummer variety of an abelian surface
    the cutoffs shift by one: base point free iff L is n-very ample, very
    ample iff L is (n+1)-very ample.
    """
    if n < 2:
        raise ValueError("n must be >= 2, got %r" % (n,))
    k = max_k_very_ample(s)
    if s.surface is SurfaceKind.K3:
        return BundleStatus(bpf=n - 1 <= k, very_ample=n <= k)
    return BundleStatus(bpf=n <= k, very_ample=n <= k - 1)
