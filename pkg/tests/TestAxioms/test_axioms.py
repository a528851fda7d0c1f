# -*- coding: utf-8 -*-
from __future__ import print_function

import hlyaconstructor
import hlyaconstructor.Fields
import hlyaconstructor.Axioms
import hlyaconstructor.Fixtures
import hlyaconstructor.Timer

import numpy as np

import sys, os
import pytest
import hypothesis
import hypothesis.strategies as strat


@pytest.mark.parametrize("field", ["Q", "F2", "F3", "F5"])
def test_heisenberg_passes(field):
    """The Heisenberg algebra with identity twist satisfies everything."""
    H = hlyaconstructor.Fixtures.heisenberg(field)
    report = hlyaconstructor.Axioms.check_axioms(H)

    assert report.passed, report.failing()
    assert report.is_hlya and report.is_multiplicative and report.is_regular
    assert not report.abelian
    assert [a["name"] for a in report.to_dict()["axioms"]] == hlyaconstructor.Axioms.AXIOM_NAMES


def test_trivial_algebras():
    for k in [0, 1, 3]:
        report = hlyaconstructor.Axioms.check_axioms(hlyaconstructor.Fixtures.abelian(k))
        assert report.passed
        assert report.abelian


def test_example_A_multiplicativity():
    """
    alpha[e1, e2] = e1 while [alpha e1, alpha e2] = -e1: binary
    multiplicativity fails first on the pair (0, 1), the ternary one holds.
    """
    A = hlyaconstructor.Fixtures.example_A("Q")
    report = hlyaconstructor.Axioms.check_axioms(A)

    status = report["multiplicative_binary"]
    assert not status.passed
    assert status.n_failures == 2
    idx, lhs, rhs = status.failures[0]
    assert idx == (0, 1)
    assert A.field.equal(lhs, A.field.asarray([1, 0, 0]))
    assert A.field.equal(rhs, A.field.asarray([-1, 0, 0]))

    assert report["multiplicative_ternary"].passed
    assert report.is_regular
    assert not report.passed
    assert "multiplicative_binary" in report.failing()

    doc = report.to_dict()
    entry = [a for a in doc["axioms"] if a["name"] == "multiplicative_binary"][0]
    assert entry["failures"][0]["index"] == [0, 1]
    assert entry["failures"][0]["lhs"] == ["1", "0", "0"]


def test_example_B_multiplicativity():
    """alpha[f1, f4] = f2 and [alpha f1, alpha f4] = -f2."""
    B = hlyaconstructor.Fixtures.example_B("Q")
    report = hlyaconstructor.Axioms.check_axioms(B)
    assert report["multiplicative_binary"].failures[0][0] == (0, 3)
    assert report["multiplicative_ternary"].passed


def test_failure_cap():
    A = hlyaconstructor.Fixtures.example_A("Q")
    report = hlyaconstructor.Axioms.check_axioms(A, cap=1)
    status = report["multiplicative_binary"]
    assert status.n_failures == 2
    assert len(status.failures) == 1


def test_singular_twist():
    field = hlyaconstructor.Fields.get_field("F3")
    A = hlyaconstructor.Fixtures.abelian(2, field, twist=field.asarray([[1, 1], [1, 1]]))
    report = hlyaconstructor.Axioms.check_axioms(A)
    assert not report.is_regular
    assert report.is_hlya
    assert report.failing() == ["regular"]


def test_broken_jacobi():
    """
    [e1, e2] = e2, [e2, e3] = e1, [e1, e3] = e3 breaks the Jacobi identity,
    so with the ternary bracket zero the second axiom fails.
    """
    field = hlyaconstructor.Fields.get_field("Q")
    A = hlyaconstructor.Fixtures._build(field, 3, binary=[(0, 1, 1, 1), (1, 2, 0, 1), (0, 2, 2, 1)])
    report = hlyaconstructor.Axioms.check_axioms(A)
    assert not report["hlya2"].passed
    assert not hlyaconstructor.Axioms.is_hom_lie_algebra(A)


def test_timer_records_axioms():
    H = hlyaconstructor.Fixtures.heisenberg()
    timer = hlyaconstructor.Timer.Timer(active=True)
    hlyaconstructor.Axioms.check_axioms(H, timer=timer)
    for name in ["axiom2", "axiom5", "multiplicativity", "regularity"]:
        assert name in timer.timed_subroutines


def test_corpus_vector_oracle():
    """
    The tensor sweep and the direct evaluation on random vectors agree:
    an algebra passing the sweep never fails on a vector tuple.
    """
    rng = np.random.RandomState(0)
    for field, dim in [("F2", 2), ("F3", 2), ("F2", 3)]:
        corpus = hlyaconstructor.Fixtures.generate_corpus(field, dim, 5, seed=dim)
        for A in corpus:
            assert hlyaconstructor.Axioms.random_identity_check(A, rng, n_samples=20) == []


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(strat.lists(strat.integers(-4, 4), min_size=15, max_size=15))
def test_heisenberg_vector_identities(values):
    """Every identity holds on arbitrary rational vectors of the Heisenberg algebra."""
    H = hlyaconstructor.Fixtures.heisenberg("Q")
    vectors = [values[3 * i:3 * i + 3] for i in range(5)]
    outcome = hlyaconstructor.Axioms.check_identities_on_vectors(H, *vectors)
    assert all(outcome.values()), outcome


@hypothesis.settings(max_examples=30, deadline=None)
@hypothesis.given(strat.integers(0, 2**16))
def test_random_algebras_sweep_vs_vectors(seed):
    """
    When the sweep rejects the second axiom on a random algebra over F3,
    evaluating on the failing basis tuple rejects it too.
    """
    field = hlyaconstructor.Fields.get_field("F3")
    rng = np.random.RandomState(seed)
    A = hlyaconstructor.Fixtures.random_algebra(field, 3, rng, density=0.3)
    report = hlyaconstructor.Axioms.check_axioms(A)

    status = report["hlya2"]
    if status.passed:
        return
    i, j, k = status.failures[0][0]
    e = [A.basis_vector(x) for x in range(3)]
    outcome = hlyaconstructor.Axioms.check_identities_on_vectors(A, e[i], e[j], e[k], e[0], e[0])
    assert not outcome["hlya2"]


def test_reductions():
    """
    The binary part of the Heisenberg algebra is a Hom-Lie algebra, its
    ternary part (zero) a Hom-Lie triple system.
    """
    H = hlyaconstructor.Fixtures.heisenberg()
    assert hlyaconstructor.Axioms.is_hom_lie_algebra(H)
    assert hlyaconstructor.Axioms.is_hom_lie_algebra(hlyaconstructor.Axioms.as_hom_lie_algebra(H))

    T = hlyaconstructor.Axioms.as_hom_lie_triple_system(H)
    assert T.field.is_zero(T.binary)
    assert hlyaconstructor.Axioms.is_hom_lie_triple_system(T)
    assert not hlyaconstructor.Axioms.is_hom_lie_triple_system(H)

    # Example A carries a ternary bracket
    A = hlyaconstructor.Fixtures.example_A("Q")
    assert not hlyaconstructor.Axioms.is_hom_lie_algebra(A)


if __name__ == "__main__":
    test_heisenberg_passes("Q")
    test_example_A_multiplicativity()
    test_corpus_vector_oracle()
    test_reductions()
