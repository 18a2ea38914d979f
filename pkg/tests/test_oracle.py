from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from hkmoduli.lattice import Family
from hkmoduli.moduli import ModuliQuery, Witness, is_nonempty, witness
from hkmoduli.oracle import (
    SearchBounds,
    default_bounds,
    enumerate_witnesses,
    verify_witness,
)

K3 = Family.K3HILB
KUM = Family.KUMMER


def test_default_bounds():
    q = ModuliQuery(K3, 2, 3, 2)
    assert default_bounds(q) == SearchBounds(2, 4, 3 + 16 * 3)
    q = ModuliQuery(KUM, 5, 7, 1)
    assert default_bounds(q) == SearchBounds(1, 1, 13)


def test_enumerate_contains_known_classes():
    hits = enumerate_witnesses(ModuliQuery(K3, 2, 1, 1), SearchBounds(5, 5, 5))
    assert Witness(1, 0, 1) in hits
    hits = enumerate_witnesses(ModuliQuery(K3, 2, 3, 2),
                               SearchBounds(10, 10, 10))
    assert Witness(2, 1, 1) in hits
    assert Witness(2, -1, 1) in hits


def test_enumerate_is_sorted_and_verified():
    q = ModuliQuery(K3, 3, 6, 2)
    hits = enumerate_witnesses(q, SearchBounds(6, 6, 40))
    assert hits == sorted(hits)
    assert hits, "expected at least one witness in these bounds"
    for w in hits:
        assert verify_witness(w, q)
        assert gcd(w.a, w.b) == 1 and w.a >= 1


def test_enumerate_empty_space_finds_nothing():
    assert enumerate_witnesses(ModuliQuery(KUM, 2, 3, 3)) == []
    assert enumerate_witnesses(ModuliQuery(K3, 2, 2, 2)) == []


def test_stop_after_is_a_prefix():
    q = ModuliQuery(K3, 2, 1, 1)
    bounds = SearchBounds(4, 4, 20)
    full = enumerate_witnesses(q, bounds)
    probe = enumerate_witnesses(q, bounds, stop_after=1)
    assert len(probe) == 1
    assert probe[0] in full


def test_sign_symmetry_in_b():
    q = ModuliQuery(KUM, 3, 12, 4)
    hits = enumerate_witnesses(q, SearchBounds(8, 10, 60))
    assert hits
    for w in hits:
        assert Witness(w.a, -w.b, w.e) in hits


def test_verify_witness_rejects_bad_classes():
    q = ModuliQuery(K3, 2, 3, 2)
    assert verify_witness(Witness(2, 1, 1), q)
    assert not verify_witness(Witness(2, 1, 2), q)   # wrong square
    assert not verify_witness(Witness(2, 4, 1), q)   # not primitive
    assert not verify_witness(Witness(1, 1, 4), q)   # divisibility 1, not 2
    assert not verify_witness(Witness(2, 1, 0), q)   # e out of range


families = st.sampled_from([K3, KUM])


@settings(max_examples=150, deadline=None)
@given(families, st.integers(min_value=2, max_value=8),
       st.integers(min_value=1, max_value=60),
       st.integers(min_value=1, max_value=10))
def test_oracle_agrees_with_formula(family, n, d, t):
    q = ModuliQuery(family, n, d, t)
    hit = bool(enumerate_witnesses(q, stop_after=1))
    assert hit == is_nonempty(q)
    w = witness(q)
    if w is not None:
        assert verify_witness(w, q)
        full = enumerate_witnesses(q)
        assert w in full
