import itertools
import random
from fractions import Fraction

import pytest

from staralg.algebra import is_associative, multiply
from staralg.conjugation import ConjugationSpec
from staralg.maps import MapMatrix, apply_map
from staralg.quaternion import (
    enumerate_signed_perm_automorphisms,
    inner_automorphism,
    quaternion_constants,
    signed_perm_candidates,
    verify_automorphism,
)

from conftest import rand_rational
from oracles import det3, hamilton

H = quaternion_constants()
CONJ = MapMatrix.diagonal([1, -1, -1, -1])
CYCLIC = MapMatrix.from_columns([H.basis(0), H.basis(2), H.basis(3), H.basis(1)])


def oracle_is_automorphism(M):
    """Definition checked with Hamilton's formula on all 16 basis pairs."""
    f = lambda x: apply_map(M, x)
    return f(H.basis(0)) == H.basis(0) and all(
        f(hamilton(H.basis(a), H.basis(b))) == hamilton(f(H.basis(a)), f(H.basis(b)))
        for a, b in itertools.product(range(4), repeat=2)
    )


def test_constants():
    assert multiply(H, H.basis(1), H.basis(2)) == H.basis(3)
    assert multiply(H, H.basis(2), H.basis(1)) == (0, 0, 0, -1)
    assert is_associative(H).holds
    for a in (1, 2, 3):
        assert multiply(H, H.basis(a), H.basis(a)) == (-1, 0, 0, 0)
    for a, b in itertools.product(range(4), repeat=2):
        assert multiply(H, H.basis(a), H.basis(b)) == hamilton(H.basis(a), H.basis(b))


def test_verify_examples():
    report = verify_automorphism(MapMatrix.identity(4))
    assert report.is_automorphism and report.determinant_of_vector_block == 1
    assert verify_automorphism(CYCLIC).is_automorphism
    report = verify_automorphism(CONJ)
    assert not report.is_automorphism
    assert report.determinant_of_vector_block == -1
    assert report.residual_witness[0] == (1, 2)
    with pytest.raises(ValueError):
        verify_automorphism(MapMatrix.identity(3))


def test_verify_rejects_singular_and_unit_moving():
    assert verify_automorphism(MapMatrix.zero(4, 4)).reason == "singular"
    scaled = MapMatrix.identity(4) * 2
    assert verify_automorphism(scaled).reason == "moves unit"


def test_enumeration():
    candidates = list(signed_perm_candidates())
    assert len(candidates) == 48 == len(set(candidates))
    autos = enumerate_signed_perm_automorphisms()
    brute = [m for m in candidates if oracle_is_automorphism(m)]
    assert len(autos) == 24
    assert set(autos) == set(brute)
    for m in autos:
        block = [row[1:] for row in m.entries[1:]]
        assert det3(block) == 1
        assert verify_automorphism(m).determinant_of_vector_block == 1
    # every det +1 candidate is an automorphism
    assert {m for m in candidates if det3([r[1:] for r in m.entries[1:]]) == 1} == set(autos)
    swap = MapMatrix.from_columns([H.basis(0), H.basis(2), H.basis(1), (0, 0, 0, -1)])
    assert swap in autos


def test_enumerated_group_closure():
    autos = set(enumerate_signed_perm_automorphisms())
    assert MapMatrix.identity(4) in autos
    for a in autos:
        assert any(a @ b == MapMatrix.identity(4) for b in autos)
        for b in autos:
            assert a @ b in autos


def test_automorphisms_commute_with_conjugation():
    I = ConjugationSpec(H).matrix
    for m in enumerate_signed_perm_automorphisms():
        assert m @ I == I @ m


def test_inner_automorphism_examples():
    assert inner_automorphism((1, 0, 0, 0)) == MapMatrix.identity(4)
    m = inner_automorphism((1, 1, 0, 0))
    assert apply_map(m, H.basis(1)) == H.basis(1)
    assert apply_map(m, H.basis(2)) == H.basis(3)
    assert apply_map(m, H.basis(3)) == (0, 0, -1, 0)
    assert inner_automorphism((1, 1, 1, 1)) == CYCLIC
    with pytest.raises(ValueError):
        inner_automorphism((0, 0, 0, 0))


def test_inner_automorphisms_random():
    rng = random.Random(12)
    for _ in range(100):
        q = tuple(rand_rational(rng) for _ in range(4))
        if not any(q):
            continue
        m = inner_automorphism(q)
        assert verify_automorphism(m).is_automorphism
        assert oracle_is_automorphism(m)
        lam = Fraction(rng.choice([-3, -1, 2, 5]), rng.randint(1, 4))
        assert inner_automorphism(tuple(lam * v for v in q)) == m
