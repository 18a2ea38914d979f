import doctest

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkmoduli import bundles
from hkmoduli.bundles import (
    BundleSpec,
    BundleStatus,
    SurfaceKind,
    induced_bundle_status,
    max_k_very_ample,
)


def test_doctests():
    assert doctest.testmod(bundles).failed == 0


def test_k3_a1_pins():
    # floor(e/2)
    assert max_k_very_ample(BundleSpec(SurfaceKind.K3, 1, 1)) == 0
    assert max_k_very_ample(BundleSpec(SurfaceKind.K3, 1, 2)) == 1
    assert max_k_very_ample(BundleSpec(SurfaceKind.K3, 1, 4)) == 2
    assert max_k_very_ample(BundleSpec(SurfaceKind.K3, 1, 5)) == 2
    assert max_k_very_ample(BundleSpec(SurfaceKind.K3, 1, 11)) == 5


def test_abelian_a1_pins():
    # floor((e-3)/2); negative values mean not even base point free
    assert max_k_very_ample(BundleSpec(SurfaceKind.ABELIAN, 1, 1)) == -1
    assert max_k_very_ample(BundleSpec(SurfaceKind.ABELIAN, 1, 2)) == -1
    assert max_k_very_ample(BundleSpec(SurfaceKind.ABELIAN, 1, 3)) == 0
    assert max_k_very_ample(BundleSpec(SurfaceKind.ABELIAN, 1, 4)) == 0
    assert max_k_very_ample(BundleSpec(SurfaceKind.ABELIAN, 1, 7)) == 2


def test_higher_a_pins():
    # 2*(a-1)*e - 2, independent of the surface kind
    for kind in SurfaceKind:
        assert max_k_very_ample(BundleSpec(kind, 2, 1)) == 0
        assert max_k_very_ample(BundleSpec(kind, 2, 3)) == 4
        assert max_k_very_ample(BundleSpec(kind, 3, 5)) == 18


def test_validation():
    with pytest.raises(ValueError):
        max_k_very_ample(BundleSpec(SurfaceKind.K3, 0, 1))
    with pytest.raises(ValueError):
        max_k_very_ample(BundleSpec(SurfaceKind.K3, 1, 0))
    with pytest.raises(ValueError):
        induced_bundle_status(BundleSpec(SurfaceKind.K3, 1, 1), 1)


def test_induced_status_pins():
    # K3, a=1, e=4: k_max = 2, so bpf for n <= 3 and very ample for n <= 2
    s = BundleSpec(SurfaceKind.K3, 1, 4)
    assert induced_bundle_status(s, 2) == BundleStatus(True, True)
    assert induced_bundle_status(s, 3) == BundleStatus(True, False)
    assert induced_bundle_status(s, 4) == BundleStatus(False, False)
    # abelian, a=1, e <= 2: not base point free for any n
    for e in (1, 2):
        s = BundleSpec(SurfaceKind.ABELIAN, 1, e)
        for n in range(2, 7):
            assert induced_bundle_status(s, n) == BundleStatus(False, False)
    # abelian, a=1, e=7: k_max = 2 gives bpf at n=2 only, never very ample
    s = BundleSpec(SurfaceKind.ABELIAN, 1, 7)
    assert induced_bundle_status(s, 2) == BundleStatus(True, False)
    assert induced_bundle_status(s, 3) == BundleStatus(False, False)


kinds = st.sampled_from(list(SurfaceKind))
small = st.integers(min_value=1, max_value=60)


@given(kinds, small, small)
def test_monotone_in_e(kind, a, e):
    k1 = max_k_very_ample(BundleSpec(kind, a, e))
    k2 = max_k_very_ample(BundleSpec(kind, a, e + 1))
    assert k2 >= k1


@given(kinds, small, small)
def test_monotone_in_a(kind, a, e):
    k1 = max_k_very_ample(BundleSpec(kind, a, e))
    k2 = max_k_very_ample(BundleSpec(kind, a + 1, e))
    assert k2 >= k1


@given(kinds, small, small, st.integers(min_value=2, max_value=30))
def test_very_ample_implies_bpf(kind, a, e, n):
    status = induced_bundle_status(BundleSpec(kind, a, e), n)
    assert not status.very_ample or status.bpf
