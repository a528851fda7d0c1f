# -*- coding: utf-8 -*-
from __future__ import print_function

import hlyaconstructor
import hlyaconstructor.Fields
import hlyaconstructor.LinAlg
import hlyaconstructor.Algebra
import hlyaconstructor.Subobjects
import hlyaconstructor.Morphisms
import hlyaconstructor.Constructions
import hlyaconstructor.Isoclinism
import hlyaconstructor.Fixtures

import itertools
import numpy as np

import sys, os
import pytest

"""
Isoclinism witnesses: verification, constructive witnesses,
bounded searches and the stem (+) abelian decomposition.
"""


def _span(rows, field, n):
    return hlyaconstructor.LinAlg.Subspace(field.asarray(rows, shape=(len(rows), n)), field, n)


def test_frame_heisenberg():
    H = hlyaconstructor.Fixtures.heisenberg()
    f = H.field
    frame = hlyaconstructor.Isoclinism.isoclinism_frame(H)
    assert frame.q == 2 and frame.d == 1
    assert f.equal(frame.tau2[0, 1], f.asarray([1]))
    assert f.is_zero(frame.tau3)
    assert frame.spanning_columns().shape == (1, 12)
    assert frame.derived_invariant


@pytest.mark.parametrize("field", ["Q", "F2", "F3"])
def test_identity_and_abelian_extension(field):
    """A ~ A and A ~ A (+) C, with the inverse and composed witnesses verified too."""
    H = hlyaconstructor.Fixtures.heisenberg(field)
    assert hlyaconstructor.Isoclinism.identity_witness(H).verified

    w1 = hlyaconstructor.Isoclinism.abelian_extension_witness(H, 1)
    assert w1.verified
    assert w1.target.dim == 4

    back = w1.inverse()
    assert hlyaconstructor.Isoclinism.verify_isoclinism(w1.target, H, back).passed

    w2 = hlyaconstructor.Isoclinism.abelian_extension_witness(w1.target, 2)
    chain = w1.compose(w2)
    assert hlyaconstructor.Isoclinism.verify_isoclinism(H, w2.target, chain).passed
    assert w2.target.dim == 6


def test_abelian_extension_on_corpus():
    """Every enumerated algebra over F2 in dimension 2 is isoclinic to its sum with K and K^2."""
    for A in hlyaconstructor.Fixtures.enumerate_algebras("F2", 2):
        for k in [1, 2]:
            w = hlyaconstructor.Isoclinism.abelian_extension_witness(A, k)
            assert w.verified
            props = hlyaconstructor.Isoclinism.check_isoclinism_properties(A, w.target, w)
            assert all(status.passed for status in props.values())


def test_rejected_witness():
    """beta = 2 does not intertwine the brackets of H with themselves over Q."""
    H = hlyaconstructor.Fixtures.heisenberg()
    f = H.field
    w = hlyaconstructor.Isoclinism.IsoclinismWitness(f.eye(2), f.asarray([[2]]), f)
    report = hlyaconstructor.Isoclinism.verify_isoclinism(H, H, w)
    assert not report.passed
    assert not w.verified
    assert report.first_failure() == ("binary", (0, 1))
    assert report["theta_twist"].passed

    w = hlyaconstructor.Isoclinism.IsoclinismWitness(f.eye(3), f.eye(1), f)
    with pytest.raises(ValueError):
        hlyaconstructor.Isoclinism.verify_isoclinism(H, H, w)


def test_witness_document():
    H = hlyaconstructor.Fixtures.heisenberg("F3")
    f = H.field
    w = hlyaconstructor.Isoclinism.abelian_extension_witness(H, 1)
    doc = w.to_dict()
    assert doc["report"]["pass"]
    w2 = hlyaconstructor.Isoclinism.IsoclinismWitness.from_dict(doc, f)
    assert hlyaconstructor.Isoclinism.verify_isoclinism(H, w.target, w2).passed

    with pytest.raises(ValueError):
        hlyaconstructor.Isoclinism.IsoclinismWitness.from_dict({"theta": [[1]]}, f)


def test_search_heisenberg_plus_abelian():
    H = hlyaconstructor.Fixtures.heisenberg("F2")
    S = hlyaconstructor.Fixtures.heisenberg_plus_abelian(2, "F2")
    w = hlyaconstructor.Isoclinism.search_isoclinism(H, S)
    assert w is not None
    assert w.verified

    # over Q the first bounded candidate already works
    H = hlyaconstructor.Fixtures.heisenberg("Q")
    S = hlyaconstructor.Fixtures.heisenberg_plus_abelian(1, "Q")
    w = hlyaconstructor.Isoclinism.search_isoclinism(H, S)
    assert w is not None and w.verified


def test_search_dimension_mismatch():
    """A/Z(A) of dimension 2 against 0: not isoclinic, decided without search."""
    H = hlyaconstructor.Fixtures.heisenberg("Q")
    C = hlyaconstructor.Fixtures.abelian(3, "Q")
    assert hlyaconstructor.Isoclinism.search_isoclinism(H, C) is None


def test_search_budget():
    H = hlyaconstructor.Fixtures.heisenberg("Q")
    S = hlyaconstructor.Fixtures.heisenberg_plus_abelian(1, "Q")
    with pytest.raises(hlyaconstructor.Isoclinism.BudgetExhausted):
        hlyaconstructor.Isoclinism.search_isoclinism(H, S, budget=0)


def test_search_isomorphism():
    H = hlyaconstructor.Fixtures.heisenberg("F2")
    f = H.field
    P = f.asarray([[0, 1, 0], [1, 0, 1], [0, 0, 1]])
    H2 = H.transport(P)
    iso = hlyaconstructor.Isoclinism.search_isomorphism(H, H2)
    assert iso is not None
    assert iso.is_isomorphism

    # isomorphic algebras are isoclinic through the induced witness
    w = hlyaconstructor.Isoclinism.isomorphism_witness(iso, H, H2)
    assert w.verified

    assert hlyaconstructor.Isoclinism.search_isomorphism(H, hlyaconstructor.Fixtures.abelian(3, f)) is None


def test_twisted_abelian_pair():
    """
    Two abelian algebras differing only by their twist are isoclinic
    (both quotients by the center are zero) but not isomorphic.
    """
    f = hlyaconstructor.Fields.get_field("F2")
    A = hlyaconstructor.Fixtures.abelian(2, f)
    B = hlyaconstructor.Fixtures.abelian(2, f, twist=f.asarray([[1, 1], [0, 1]]))
    outcome = hlyaconstructor.Isoclinism.compare_isoclinism_isomorphism(A, B)
    assert outcome == {"isoclinic": True, "isomorphic": False, "agree": False}


def test_isomorphic_implies_isoclinic():
    """Over F2 in dimension 2, every change of basis of an algebra is found isoclinic to it."""
    corpus = hlyaconstructor.Fixtures.enumerate_algebras("F2", 2)
    f = hlyaconstructor.Fields.get_field("F2")
    changes = list(hlyaconstructor.LinAlg.enumerate_invertible(f, 2))
    for i, A in enumerate(corpus):
        B = A.transport(changes[i % len(changes)])
        outcome = hlyaconstructor.Isoclinism.compare_isoclinism_isomorphism(A, B)
        assert outcome["isomorphic"]
        assert outcome["isoclinic"]


def _has_isomorphism(A, B):
    """Try every change of basis of GL(n, p)."""
    f = A.field
    for P in hlyaconstructor.LinAlg.enumerate_invertible(f, A.dim):
        if hlyaconstructor.Morphisms.is_homomorphism(hlyaconstructor.Morphisms.Morphism(P, f), A, B).is_isomorphism:
            return True
    return False


def test_isoclinism_against_isomorphism_dim2():
    """
    Every pair of the F2 dimension 2 enumeration: isomorphic pairs are
    isoclinic, the converse fails 23 times out of 435. Twelve of those
    pairs are stem algebras (Z = 0, A^2 = A) with twists that are not
    conjugate: isoclinic through a verified witness, yet no change of
    basis maps one onto the other.
    """
    corpus = hlyaconstructor.Fixtures.enumerate_algebras("F2", 2)
    n_pairs = 0
    n_agree = 0
    stem_pairs = []
    for i, j in itertools.combinations(range(len(corpus)), 2):
        A, B = corpus[i], corpus[j]
        outcome = hlyaconstructor.Isoclinism.compare_isoclinism_isomorphism(A, B)
        n_pairs += 1
        assert outcome["agree"] is not None
        if outcome["isomorphic"]:
            assert outcome["isoclinic"]
        if outcome["agree"]:
            n_agree += 1
        elif hlyaconstructor.Subobjects.is_stem(A) and hlyaconstructor.Subobjects.is_stem(B):
            stem_pairs.append((A, B))

    assert n_pairs == 435
    assert n_pairs - n_agree == 23
    assert len(stem_pairs) == 12

    for A, B in stem_pairs:
        for X in (A, B):
            assert hlyaconstructor.Subobjects.center(X).is_trivial()
            assert hlyaconstructor.Subobjects.derived(X).is_full()
        assert not _has_isomorphism(A, B)
        w = hlyaconstructor.Isoclinism.search_isoclinism(A, B)
        assert w is not None and w.verified


def test_isoclinism_against_isomorphism_dim3():
    """On a seeded F2 sample in dimension 3, isomorphic pairs are isoclinic."""
    corpus = hlyaconstructor.Fixtures.generate_corpus("F2", 3, 10, seed=11)
    for A, B in itertools.combinations(corpus, 2):
        outcome = hlyaconstructor.Isoclinism.compare_isoclinism_isomorphism(A, B)
        assert outcome["agree"] is not None
        if outcome["isomorphic"]:
            assert outcome["isoclinic"]

    # each member against a relabelled copy of itself
    f = hlyaconstructor.Fields.get_field("F2")
    P = f.asarray([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    for A in corpus:
        outcome = hlyaconstructor.Isoclinism.compare_isoclinism_isomorphism(A, A.transport(P))
        assert outcome == {"isoclinic": True, "isomorphic": True, "agree": True}


def test_ideal_and_quotient_witnesses():
    A = hlyaconstructor.Fixtures.heisenberg_plus_abelian(2)
    f = A.field

    # span{e4} is central and meets A^2 = span{e3} trivially
    w = hlyaconstructor.Isoclinism.ideal_isoclinism_witness(A, _span([[0, 0, 0, 1, 0]], f, 5))
    assert w.verified
    assert w.target.dim == 4

    with pytest.raises(ValueError):
        hlyaconstructor.Isoclinism.ideal_isoclinism_witness(A, _span([[0, 0, 1, 0, 0]], f, 5))

    # A/span{e3, e4} against A/span{e3}: both abelian
    w = hlyaconstructor.Isoclinism.quotient_isoclinism_witness(A, _span([[0, 0, 1, 0, 0], [0, 0, 0, 1, 0]], f, 5))
    assert w.verified
    assert w.source.dim == 3 and w.target.dim == 4

    # I inside A^2: both quotients coincide and the witness is the identity
    H = hlyaconstructor.Fixtures.heisenberg()
    w = hlyaconstructor.Isoclinism.quotient_isoclinism_witness(H, _span([[0, 0, 1]], f, 3))
    assert w.verified
    assert f.equal(w.theta.matrix, f.eye(w.theta.matrix.shape[0]))

    with pytest.raises(hlyaconstructor.Constructions.NotAnIdeal):
        hlyaconstructor.Isoclinism.quotient_isoclinism_witness(H, _span([[1, 0, 0]], f, 3))


def test_surjection():
    A = hlyaconstructor.Fixtures.heisenberg_plus_abelian(2)
    H = hlyaconstructor.Fixtures.heisenberg()
    f = A.field
    proj = f.zeros((3, 5))
    proj[:, :3] = f.eye(3)

    w = hlyaconstructor.Isoclinism.surjection_isoclinism(proj, A, H)
    assert w.verified

    # the quotient by the center kills A^2
    onto = f.asarray([[1, 0, 0], [0, 1, 0]])
    with pytest.raises(ValueError):
        hlyaconstructor.Isoclinism.surjection_isoclinism(onto, H, hlyaconstructor.Fixtures.abelian(2))


def test_decompose():
    """H (+) K^2 splits into the Heisenberg algebra and K^2."""
    A = hlyaconstructor.Fixtures.heisenberg_plus_abelian(2)
    f = A.field
    dec = hlyaconstructor.Isoclinism.decompose_stem_abelian(A)

    assert dec.stem_part.dim == 3
    assert dec.abelian_part.dim == 2
    assert dec.stem_part == hlyaconstructor.Fixtures.heisenberg()
    assert dec.abelian_part.is_abelian()
    assert hlyaconstructor.Subobjects.is_stem(dec.stem_part)
    assert dec.witness.is_isomorphism
    assert dec.abelian_subspace == _span([[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]], f, 5)
    assert dec.to_dict()["witness"]["is_isomorphism"]


def test_decompose_edge_cases():
    H = hlyaconstructor.Fixtures.heisenberg()
    dec = hlyaconstructor.Isoclinism.decompose_stem_abelian(H)
    assert dec.stem_part.dim == 3 and dec.abelian_part.dim == 0

    C = hlyaconstructor.Fixtures.abelian(2)
    dec = hlyaconstructor.Isoclinism.decompose_stem_abelian(C)
    assert dec.stem_part.dim == 0 and dec.abelian_part.dim == 2

    with pytest.raises(ValueError):
        # not multiplicative
        hlyaconstructor.Isoclinism.decompose_stem_abelian(hlyaconstructor.Fixtures.example_A("Q"))


def test_decompose_obstruction():
    """
    H (+) K with alpha(e4) = e3 + e4: the twist glues the abelian direction
    to A^2, so Z cap A^2 has no invariant complement inside Z.
    """
    f = hlyaconstructor.Fields.get_field("Q")
    B = f.zeros((4, 4, 4))
    B[0, 1, 2] = f.one
    B[1, 0, 2] = f.neg(f.one)
    twist = f.asarray([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    A = hlyaconstructor.Algebra.HlyAlgebra(f, 4, binary=B, twist=twist, label="glued")

    with pytest.raises(hlyaconstructor.Constructions.NoInvariantComplement) as err:
        hlyaconstructor.Isoclinism.decompose_stem_abelian(A)
    assert err.value.step == "abelian part"
    assert err.value.system_shape == (1, 1)
    K, rhs = err.value.system
    assert hlyaconstructor.LinAlg.solve(K, rhs, f) is None
    dumped = err.value.system_to_dict()
    assert dumped["matrix"] == [["0"]]
    assert dumped["rhs"] != ["0"]


def test_decompose_corpus():
    """Each summand is a stem algebra isoclinic to the whole algebra."""
    for A in hlyaconstructor.Fixtures.generate_corpus("F3", 2, 5, seed=3):
        try:
            dec = hlyaconstructor.Isoclinism.decompose_stem_abelian(A)
        except hlyaconstructor.Constructions.NoInvariantComplement:
            continue
        assert dec.stem_part.dim + dec.abelian_part.dim == A.dim
        assert hlyaconstructor.Subobjects.is_stem(dec.stem_part)
        assert hlyaconstructor.Isoclinism.search_isoclinism(A, dec.stem_part) is not None


def test_stem_minimality():
    H = hlyaconstructor.Fixtures.heisenberg()
    w1 = hlyaconstructor.Isoclinism.abelian_extension_witness(H, 1)
    w2 = hlyaconstructor.Isoclinism.abelian_extension_witness(H, 2)
    report = hlyaconstructor.Isoclinism.stem_minimality_check([H, w1.target, w2.target], [w1, w2])

    assert report.minimum_dim == 3
    assert report.stem_present
    assert report.consistent
    assert [e["is_stem"] for e in report.entries] == [True, False, False]

    # without the stem member the note is set
    report = hlyaconstructor.Isoclinism.stem_minimality_check([w1.target, w2.target])
    assert not report.stem_present
    assert report.note

    with pytest.raises(hlyaconstructor.Isoclinism.NotAFamily):
        hlyaconstructor.Isoclinism.stem_minimality_check([H, hlyaconstructor.Fixtures.abelian(2)])


@pytest.mark.parametrize("field", ["Q", "F3"])
def test_pulled_back_extension(field):
    """The factor set of a relabelled Heisenberg algebra pulled back to H rebuilds it."""
    H = hlyaconstructor.Fixtures.heisenberg(field)
    f = H.field
    P = f.asarray([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    H2 = H.transport(P)
    w = hlyaconstructor.Isoclinism.isomorphism_witness(P, H, H2)

    result = hlyaconstructor.Isoclinism.pulled_back_extension(H, H2, w)
    assert result.verified
    assert result.omega.axiom_report.passed
    assert f.equal(result.factor_set.pi2[0, 1], f.asarray([1]))

    result = hlyaconstructor.Isoclinism.pulled_back_extension(H, H, hlyaconstructor.Isoclinism.identity_witness(H))
    assert result.verified

    with pytest.raises(ValueError):
        hlyaconstructor.Isoclinism.pulled_back_extension(
            hlyaconstructor.Fixtures.heisenberg_plus_abelian(1, f), H,
            hlyaconstructor.Isoclinism.abelian_extension_witness(H, 1).inverse())


if __name__ == "__main__":
    test_identity_and_abelian_extension("Q")
    test_search_heisenberg_plus_abelian()
    test_decompose()
    test_pulled_back_extension("Q")
