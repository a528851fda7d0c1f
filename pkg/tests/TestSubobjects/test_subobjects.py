# -*- coding: utf-8 -*-
from __future__ import print_function

import hlyaconstructor
import hlyaconstructor.Fields
import hlyaconstructor.LinAlg
import hlyaconstructor.Subobjects
import hlyaconstructor.Constructions
import hlyaconstructor.Fixtures

import numpy as np

import sys, os
import pytest


def _span(rows, field, n):
    return hlyaconstructor.LinAlg.Subspace(field.asarray(rows, shape=(len(rows), n)), field, n)


@pytest.mark.parametrize("field", ["Q", "F2", "F3"])
def test_heisenberg(field):
    """Z = A^2 = span{e3}: the Heisenberg algebra is stem."""
    H = hlyaconstructor.Fixtures.heisenberg(field)
    f = H.field
    Z = hlyaconstructor.Subobjects.center(H)
    D = hlyaconstructor.Subobjects.derived(H)

    assert Z == _span([[0, 0, 1]], f, 3)
    assert D == Z
    assert hlyaconstructor.Subobjects.is_stem(H)


def test_example_A():
    """Centerless, with A^2 = span{e1, e2}."""
    A = hlyaconstructor.Fixtures.example_A("Q")
    f = A.field
    assert hlyaconstructor.Subobjects.center(A).is_trivial()
    assert hlyaconstructor.Subobjects.derived(A) == _span([[1, 0, 0], [0, 1, 0]], f, 3)
    assert hlyaconstructor.Subobjects.is_stem(A)


def test_example_B():
    """Z = span{f3}, B^2 = span{f1, f2}: not stem."""
    B = hlyaconstructor.Fixtures.example_B("Q")
    f = B.field
    Z = hlyaconstructor.Subobjects.center(B)
    assert Z == _span([[0, 0, 1, 0]], f, 4)
    assert hlyaconstructor.Subobjects.derived(B) == _span([[1, 0, 0, 0], [0, 1, 0, 0]], f, 4)
    assert not hlyaconstructor.Subobjects.is_stem(B)


def test_abelian():
    for k in [0, 1, 2]:
        C = hlyaconstructor.Fixtures.abelian(k)
        assert hlyaconstructor.Subobjects.center(C).is_full()
        assert hlyaconstructor.Subobjects.derived(C).is_trivial()
        # only the zero space is stem among the abelian ones
        assert hlyaconstructor.Subobjects.is_stem(C) == (k == 0)


def test_direct_sum_center():
    H = hlyaconstructor.Fixtures.heisenberg()
    f = H.field
    S = hlyaconstructor.Constructions.direct_sum(H, hlyaconstructor.Fixtures.abelian(1))
    assert hlyaconstructor.Subobjects.center(S) == _span([[0, 0, 1, 0], [0, 0, 0, 1]], f, 4)
    assert hlyaconstructor.Subobjects.derived(S) == _span([[0, 0, 1, 0]], f, 4)
    assert not hlyaconstructor.Subobjects.is_stem(S)


def test_ideals():
    H = hlyaconstructor.Fixtures.heisenberg()
    f = H.field

    report = hlyaconstructor.Subobjects.is_hom_ideal(H, _span([[0, 0, 1]], f, 3))
    assert report.passed
    assert report.first_failure() is None

    # [e1, e2] = e3 leaves span{e1}
    report = hlyaconstructor.Subobjects.is_hom_ideal(H, _span([[1, 0, 0]], f, 3))
    assert not report.passed
    check, idx, vec = report.first_failure()
    assert check == "binary_absorb"
    assert idx == (0, 1)
    assert f.equal(vec, f.asarray([0, 0, 1]))
    assert report.to_dict()["failures"][0]["check"] == "binary_absorb"

    # span{e1} is a subalgebra though, span{e1, e2} is not
    assert hlyaconstructor.Subobjects.is_subalgebra(H, _span([[1, 0, 0]], f, 3)).passed
    report = hlyaconstructor.Subobjects.is_subalgebra(H, _span([[1, 0, 0], [0, 1, 0]], f, 3))
    assert report.first_failure()[:2] == ("binary", (0, 1))

    # every algebra has the trivial ideals
    assert hlyaconstructor.Subobjects.is_hom_ideal(H, hlyaconstructor.LinAlg.Subspace.zero(f, 3)).passed
    assert hlyaconstructor.Subobjects.is_hom_ideal(H, hlyaconstructor.LinAlg.Subspace.full(f, 3)).passed


def test_twist_invariance():
    """alpha(e1 + e2) = e1 - e2 in example A."""
    A = hlyaconstructor.Fixtures.example_A("Q")
    f = A.field
    report = hlyaconstructor.Subobjects.is_twist_invariant(A, _span([[1, 1, 0]], f, 3))
    assert not report.passed
    assert report.first_failure()[0] == "twist"
    assert hlyaconstructor.Subobjects.is_twist_invariant(A, _span([[1, 0, 0], [0, 1, 0]], f, 3)).passed


def test_ambient_mismatch():
    H = hlyaconstructor.Fixtures.heisenberg()
    with pytest.raises(ValueError):
        hlyaconstructor.Subobjects.is_hom_ideal(H, hlyaconstructor.LinAlg.Subspace.zero(H.field, 2))


def test_center_twist_invariant_on_corpus():
    """For a multiplicative regular algebra the center and A^2 are alpha-invariant Hom-ideals."""
    for A in hlyaconstructor.Fixtures.enumerate_algebras("F2", 2):
        Z = hlyaconstructor.Subobjects.center(A)
        D = hlyaconstructor.Subobjects.derived(A)
        assert hlyaconstructor.Subobjects.is_hom_ideal(A, Z).passed
        assert hlyaconstructor.Subobjects.is_hom_ideal(A, D).passed


if __name__ == "__main__":
    test_heisenberg("Q")
    test_example_A()
    test_example_B()
    test_ideals()
