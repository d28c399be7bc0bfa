"""Exact Betti numbers, cocycle/coboundary tests, representatives."""
from fractions import Fraction
from math import comb

import pytest

from helpers import mono
from superquad import build
from superquad.algebra import GradedBasis, LieSuperalgebra
from superquad.cochains import Cochain, Monomial, monomials_of_degree
from superquad.cohomology import (
    CochainBasis,
    betti_table,
    class_vector,
    cochain_basis,
    cochain_dimension,
    cohomology,
    cohomology_report,
    differential_matrix,
    is_coboundary,
    is_cocycle,
)
from superquad.errors import InputError, ResourceLimitError


def test_cochain_dimension_matches_enumeration():
    cases = [
        build("g_4_1_s").basis,  # 2 even, 2 odd
        build("g_6_1").basis,  # 6 even, 0 odd
        GradedBasis(labels=("u", "v", "w"), parities=(1, 1, 1)),  # 0 even
    ]
    for basis in cases:
        for k in range(0, 6):
            assert cochain_dimension(basis, k) == len(
                monomials_of_degree(basis, k)
            )


def test_cochain_dimension_closed_forms():
    # purely even: binomials, zero beyond the dimension
    b = build("g_6_1").basis
    assert [cochain_dimension(b, k) for k in range(8)] == [
        comb(6, k) for k in range(8)
    ]
    # purely odd: multiset coefficients grow without bound
    odd = GradedBasis(labels=("u", "v"), parities=(1, 1))
    assert [cochain_dimension(odd, k) for k in range(5)] == [1, 2, 3, 4, 5]


def test_differential_matrices_compose_to_zero():
    q = build("g_6_s")
    for k in range(0, 4):
        dk = differential_matrix(q, k)
        dk1 = differential_matrix(q, k + 1)
        rows, cols = dk1.shape[0], dk.shape[1]
        for i in range(rows):
            for j in range(cols):
                acc = Fraction(0)
                for t in range(dk.shape[0]):
                    acc += dk1.entries[i][t] * dk.entries[t][j]
                assert acc == 0


def test_rank_nullity_consistency():
    q = build("g_4_2_s")
    results = betti_table(q, 3)
    for k, r in enumerate(results):
        assert r.dim_cocycles + differential_matrix(q, k).rank() == r.dim_cochains
        if k > 0:
            assert r.dim_coboundaries == differential_matrix(q, k - 1).rank()
        assert r.betti == r.dim_cocycles - r.dim_coboundaries


def test_is_cocycle_and_is_coboundary():
    q = build("g_4_1_s")
    # delta of anything is a cocycle and a coboundary
    from superquad.cochains import differential_direct

    c = mono(q.basis, odd_labels=("X1", "X1"))
    dc = differential_direct(q.algebra, c)
    assert not dc.is_zero
    assert is_cocycle(q, dc)
    assert is_coboundary(q, dc)
    # a degree-1 closed dual that is not exact
    y0 = mono(q.basis, even_labels=("Y0",))
    assert is_cocycle(q, y0)
    assert not is_coboundary(q, y0)
    # zero cochain is a coboundary by convention
    assert is_coboundary(q, Cochain.zero(q.basis))
    # mixed-degree input is rejected
    mixed = y0 + c
    with pytest.raises(InputError):
        is_coboundary(q, mixed)


def test_class_vector_separates_classes():
    q = build("g_4_1_s")
    res = cohomology(q, 2)
    assert res.betti == 2
    r0, r1 = res.representatives
    v0 = class_vector(q, r0, result=res)
    v1 = class_vector(q, r1, result=res)
    assert v0 == [Fraction(1), Fraction(0)]
    assert v1 == [Fraction(0), Fraction(1)]
    combo = r0 + r1.scale(Fraction(3))
    assert class_vector(q, combo, result=res) == [Fraction(1), Fraction(3)]
    # shifting by a coboundary does not move the class
    from superquad.cochains import differential_direct

    shift = differential_direct(q.algebra, mono(q.basis, odd_labels=("X1",)))
    assert not shift.is_zero
    assert class_vector(q, combo + shift, result=res) == [
        Fraction(1),
        Fraction(3),
    ]
    # non-cocycles are rejected
    with pytest.raises(InputError):
        class_vector(q, mono(q.basis, even_labels=("X0",)), result=None)


def test_representatives_are_honest():
    for key in ("g_4_1_s", "g_6_s", "g_6_1"):
        q = build(key)
        for r in betti_table(q, 3):
            assert len(r.representatives) == r.betti
            for rep in r.representatives:
                assert is_cocycle(q, rep)
                if r.degree > 0:
                    assert not is_coboundary(q, rep)


def test_resource_limit_guard():
    q = build("g_8_2_5_s")
    with pytest.raises(ResourceLimitError):
        cohomology_report(q, 3, max_monomials=10)


def test_report_schema():
    r = cohomology_report(build("g_4_1_s"), 2)
    assert r["schema"] == 1
    assert r["kind"] == "cohomology"
    assert [row["betti"] for row in r["table"]] == [1, 2, 2]
    r2 = cohomology_report(
        build("g_4_1_s"), 2, include_representatives=False, name="demo"
    )
    assert all("representatives" not in row for row in r2["table"])
    assert r2["name"] == "demo"


def test_cochain_basis_coordinates_round_trip():
    basis = build("g_4_1_s").basis
    cb = cochain_basis(basis, 2)
    assert isinstance(cb, CochainBasis)
    c = Cochain.from_terms(
        basis,
        {
            Monomial(even=(0, 1), odd=()): Fraction(5),
            Monomial(even=(), odd=(2, 3)): Fraction(-1, 2),
        },
    )
    vec = cb.coordinates(c)
    back = cb.from_coordinates(basis, vec)
    assert (back - c).is_zero
