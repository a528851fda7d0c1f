# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Linear maps between algebras and their verification as homomorphisms.
"""

import numpy as np

import hlyaconstructor.LinAlg as LinAlg
from hlyaconstructor.Axioms import AxiomStatus, compare_tensors, DEFAULT_FAILURE_CAP
from hlyaconstructor.Methods import apply_output, twist_slots


__all__ = ["Morphism", "MorphismReport", "is_homomorphism", "is_isomorphism"]


class Morphism(object):
    def __init__(self, matrix, field, label=""):
        """
        A linear map K^n -> K^m given by an m x n matrix acting on columns.

        The flags is_homomorphism / is_isomorphism stay None until the map
        is verified against a pair of algebras (see verify).
        """
        self.field = field
        self.matrix = field.asarray(matrix)
        if self.matrix.ndim != 2:
            raise ValueError("Error, a morphism needs a 2D matrix, got shape {}".format(self.matrix.shape))
        self.matrix.setflags(write=False)
        self.label = label
        self.is_homomorphism = None
        self.is_isomorphism = None
        self.report = None

    @property
    def source_dim(self):
        return self.matrix.shape[1]

    @property
    def target_dim(self):
        return self.matrix.shape[0]

    def __call__(self, x):
        return self.field.dot(self.matrix, self.field.asarray(x))

    def verify(self, source, target):
        """Run is_homomorphism and cache the flags. Returns the report."""
        return is_homomorphism(self, source, target)

    def inverse(self):
        return Morphism(LinAlg.inverse(self.matrix, self.field), self.field,
                        label="inverse of {}".format(self.label) if self.label else "")

    def compose(self, other):
        """self after other."""
        if other.target_dim != self.source_dim:
            raise ValueError("Error, cannot compose a map into dimension {} with a map from dimension {}".format(
                other.target_dim, self.source_dim))
        return Morphism(self.field.dot(self.matrix, other.matrix), self.field)

    def kernel(self):
        return LinAlg.kernel_basis(self.matrix, self.field)

    def rank(self):
        return LinAlg.rank(self.matrix, self.field)

    def to_dict(self):
        out = {"matrix": self.field.array_to_json(self.matrix),
               "source_dim": self.source_dim, "target_dim": self.target_dim,
               "is_homomorphism": self.is_homomorphism, "is_isomorphism": self.is_isomorphism}
        if self.report is not None:
            out["report"] = self.report.to_dict()
        return out

    def __repr__(self):
        return "Morphism({} -> {}, homomorphism={}, isomorphism={})".format(
            self.source_dim, self.target_dim, self.is_homomorphism, self.is_isomorphism)


class MorphismReport(object):
    def __init__(self, field, statuses):
        self.field = field
        self.statuses = statuses

    def __getitem__(self, name):
        return self.statuses[name]

    @property
    def passed(self):
        """Homomorphism: brackets and twist preserved."""
        return all(self.statuses[name].passed for name in ("binary", "ternary", "twist"))

    @property
    def bijective(self):
        return self.statuses["bijective"].passed

    @property
    def is_isomorphism(self):
        return self.passed and self.bijective

    def first_failure(self):
        for name in ("binary", "ternary", "twist", "bijective"):
            status = self.statuses[name]
            if not status.passed:
                idx = status.failures[0][0] if status.failures else ()
                return name, idx
        return None

    def to_dict(self):
        return {"homomorphism": self.passed, "isomorphism": self.is_isomorphism,
                "checks": [self.statuses[name].to_dict(self.field)
                           for name in ("binary", "ternary", "twist", "bijective")]}


def is_homomorphism(f, source, target, cap=DEFAULT_FAILURE_CAP):
    """
    IS A HOMOMORPHISM
    =================

    f([x, y]) = [f x, f y] on basis pairs, the ternary analogue on triples
    and f . alpha_source = alpha_target . f as a matrix identity.
    Bijectivity is reported alongside.

    Parameters
    ----------
        f : Morphism or matrix
            The map source -> target.
        source, target : Algebra.HlyAlgebra

    Results
    -------
        report : MorphismReport
            If f is a Morphism its flags are updated.
    """
    field = source.field
    if target.field != field:
        raise ValueError("Error, the algebras live over different fields")
    morphism = f if isinstance(f, Morphism) else Morphism(f, field)
    F = morphism.matrix
    if F.shape != (target.dim, source.dim):
        raise ValueError("Error, a map {} -> {} needs a {}x{} matrix, got {}".format(
            source.dim, target.dim, target.dim, source.dim, F.shape))

    statuses = {}
    statuses["binary"] = compare_tensors("binary", apply_output(F, source.binary, field),
                                         twist_slots(target.binary, [0, 1], F, field), field, cap)
    statuses["ternary"] = compare_tensors("ternary", apply_output(F, source.ternary, field),
                                          twist_slots(target.ternary, [0, 1, 2], F, field), field, cap)
    # columns of f . alpha and alpha . f, indexed by the source basis
    statuses["twist"] = compare_tensors("twist", field.dot(F, source.twist).T,
                                        field.dot(target.twist, F).T, field, cap)

    bijective = source.dim == target.dim and LinAlg.is_invertible(F, field)
    statuses["bijective"] = AxiomStatus("bijective") if bijective else \
        AxiomStatus("bijective", 1, [((), None, None)],
                    detail="rank {} for a {}x{} matrix".format(LinAlg.rank(F, field), target.dim, source.dim))

    report = MorphismReport(field, statuses)
    morphism.is_homomorphism = report.passed
    morphism.is_isomorphism = report.is_isomorphism
    morphism.report = report
    return report


def is_isomorphism(f, source, target):
    return is_homomorphism(f, source, target).is_isomorphism
