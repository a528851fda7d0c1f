# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Centers, derived subalgebras, subalgebra and Hom-ideal predicates.

Predicates are tested on the basis vectors of the subspace paired with the
basis vectors of the algebra, which is enough by multilinearity.
"""

import numpy as np

import hlyaconstructor.LinAlg as LinAlg


__all__ = ["SubobjectReport", "center", "derived", "is_subalgebra", "is_hom_ideal",
           "is_stem", "is_twist_invariant"]


class SubobjectReport(object):
    def __init__(self, subject, predicate, failures=None):
        """
        Parameters
        ----------
            subject : LinAlg.Subspace
                The tested subspace.
            predicate : str
                "subalgebra", "hom_ideal" or "twist_invariant".
            failures : list of (check, index, vector)
                Each failing inclusion: which product, the generator indices
                (basis of the subspace first, then basis of the algebra) and the
                offending product vector.
        """
        self.subject = subject
        self.predicate = predicate
        self.failures = failures if failures is not None else []

    @property
    def passed(self):
        return len(self.failures) == 0

    def first_failure(self):
        if self.failures:
            return self.failures[0]
        return None

    def to_dict(self):
        field = self.subject.field
        return {
            "predicate": self.predicate,
            "pass": self.passed,
            "subject": self.subject.to_json(),
            "failures": [{"check": check, "index": list(idx), "vector": field.array_to_json(vec)}
                         for check, idx, vec in self.failures],
        }

    def __repr__(self):
        return "SubobjectReport({}, pass={})".format(self.predicate, self.passed)


def _check_ambient(algebra, subspace):
    if subspace.ambient_dim != algebra.dim or subspace.field != algebra.field:
        raise ValueError("Error, ambient mismatch: subspace of dimension {} over {} in an algebra of dimension {} over {}".format(
            subspace.ambient_dim, subspace.field.name, algebra.dim, algebra.field.name))


def center(algebra):
    """
    CENTER
    ======

    Z(A) = {x : [x, e_j] = 0, [x, e_j, e_k] = 0, [e_j, e_k, x] = 0 for all j, k},
    the kernel of the stacked linear conditions.
    """
    n = algebra.dim
    B = algebra.binary
    T = algebra.ternary

    # rows indexed by (j, output), columns by the coordinate of x
    conditions = [B.transpose(1, 2, 0).reshape((n * n, n)),
                  T.transpose(1, 2, 3, 0).reshape((n ** 3, n)),
                  T.transpose(0, 1, 3, 2).reshape((n ** 3, n))]
    return LinAlg.kernel_basis(np.vstack(conditions), algebra.field)


def derived(algebra):
    """A^2: the span of every [e_i, e_j] and [e_i, e_j, e_k]."""
    n = algebra.dim
    rows = np.vstack([algebra.binary.reshape((n * n, n)), algebra.ternary.reshape((n ** 3, n))])
    return LinAlg.Subspace(rows, algebra.field, n)


def _inclusion_failures(subspace, products):
    return [(check, idx, vec) for check, idx, vec in products if not subspace.contains_vector(vec)]


def _subalgebra_products(algebra, subspace):
    s = list(subspace.basis)
    k = len(s)
    for i in range(k):
        yield "twist", (i,), algebra.apply_twist(s[i])
    for i in range(k):
        for j in range(i + 1, k):
            yield "binary", (i, j), algebra.eval_binary(s[i], s[j])
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(k):
                yield "ternary", (i, j, l), algebra.eval_ternary(s[i], s[j], s[l])


def _ideal_products(algebra, subspace):
    n = algebra.dim
    e = [algebra.basis_vector(j) for j in range(n)]
    for i, v in enumerate(subspace.basis):
        for j in range(n):
            yield "binary_absorb", (i, j), algebra.eval_binary(v, e[j])
    for i, v in enumerate(subspace.basis):
        for j in range(n):
            for l in range(n):
                yield "ternary_absorb_first", (i, j, l), algebra.eval_ternary(v, e[j], e[l])
    for i, v in enumerate(subspace.basis):
        for j in range(n):
            for l in range(n):
                yield "ternary_absorb_last", (i, j, l), algebra.eval_ternary(e[j], e[l], v)


def is_subalgebra(algebra, subspace):
    """alpha(S), [S, S] and [S, S, S] contained in S."""
    _check_ambient(algebra, subspace)
    failures = _inclusion_failures(subspace, _subalgebra_products(algebra, subspace))
    return SubobjectReport(subspace, "subalgebra", failures)


def is_hom_ideal(algebra, subspace):
    """
    IS A HOM-IDEAL
    ==============

    Subalgebra plus [S, A], [S, A, A] and [A, A, S] contained in S.
    """
    _check_ambient(algebra, subspace)
    failures = _inclusion_failures(subspace, _subalgebra_products(algebra, subspace))
    failures += _inclusion_failures(subspace, _ideal_products(algebra, subspace))
    return SubobjectReport(subspace, "hom_ideal", failures)


def is_stem(algebra):
    """Z(A) contained in A^2."""
    return derived(algebra).contains(center(algebra))


def is_twist_invariant(algebra, subspace):
    """
    alpha(S) contained in S. For a regular twist this is alpha(S) = S.
    """
    _check_ambient(algebra, subspace)
    failures = [(check, idx, vec) for check, idx, vec in _subalgebra_products(algebra, subspace)
                if check == "twist" and not subspace.contains_vector(vec)]
    return SubobjectReport(subspace, "twist_invariant", failures)
