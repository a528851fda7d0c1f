# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Axiom verification for Hom-Lie Yamaguti algebras.

Each identity is evaluated on every tuple of basis vectors at once, as a
tensor built by composing the structure tensors (see Methods). By
multilinearity this decides the identity on the whole carrier.
The identities, with alpha the twist:

    hlya2 : cyc_{x,y,z} [[x,y], a z] + cyc_{x,y,z} [x,y,z] = 0
    hlya3 : [[x,y], a z, a w] = 0
    hlya4 : cyc_{x,y,z} [a x, a y, [z,w]] = [[x,y,z], a^2 w] + [a^2 z, [x,y,w]]
    hlya5 : [a^2 x, a^2 y, [z,w,t]] = [[x,y,z], a^2 w, a^2 t]
                                     + [a^2 z, [x,y,w], a^2 t] + [a^2 z, a^2 w, [x,y,t]]
"""

import numpy as np

import hlyaconstructor.LinAlg as LinAlg
import hlyaconstructor.Methods as Methods
from hlyaconstructor.Methods import compose, twist_slots, reorder, cyclic_sum, apply_output


__all__ = ["DEFAULT_FAILURE_CAP", "AXIOM_NAMES", "AxiomStatus", "AxiomReport", "check_axioms",
           "hom_jacobi_status", "check_identities_on_vectors", "random_identity_check",
           "as_hom_lie_algebra", "as_hom_lie_triple_system", "is_hom_lie_algebra",
           "is_hom_lie_triple_system"]

DEFAULT_FAILURE_CAP = 16

STRUCTURE_AXIOMS = ["hlya1_skew_binary", "hlya1_alternating_binary",
                    "hlya1_skew_ternary", "hlya1_alternating_ternary",
                    "hlya2", "hlya3", "hlya4", "hlya5"]
AXIOM_NAMES = STRUCTURE_AXIOMS + ["multiplicative_binary", "multiplicative_ternary", "regular"]


class AxiomStatus(object):
    def __init__(self, name, n_failures=0, failures=None, detail=""):
        """
        Outcome of one identity.

        Parameters
        ----------
            name : str
                The identity.
            n_failures : int
                Total number of failing basis tuples.
            failures : list of (index, lhs, rhs)
                The first failing tuples (capped), in row-major index order.
            detail : str
                Optional free text, used when a failure has no index tuple.
        """
        self.name = name
        self.n_failures = n_failures
        self.failures = failures if failures is not None else []
        self.detail = detail

    @property
    def passed(self):
        return self.n_failures == 0

    def to_dict(self, field):
        return {
            "name": self.name,
            "pass": self.passed,
            "n_failures": self.n_failures,
            "detail": self.detail,
            "failures": [{"index": list(idx),
                          "lhs": None if lhs is None else field.array_to_json(lhs),
                          "rhs": None if rhs is None else field.array_to_json(rhs)}
                         for idx, lhs, rhs in self.failures],
        }


def compare_tensors(name, lhs, rhs, field, cap=DEFAULT_FAILURE_CAP):
    """Build the status of the identity lhs = rhs (tensors of the same shape)."""
    bad = Methods.failing_indices(field.reduce(lhs - rhs), field)
    failures = [(idx, lhs[idx], rhs[idx]) for idx in bad[:cap]]
    return AxiomStatus(name, len(bad), failures)


class AxiomReport(object):
    def __init__(self, field, statuses, abelian):
        self.field = field
        self.statuses = statuses
        self.abelian = abelian

    def __getitem__(self, name):
        return self.statuses[name]

    def failing(self):
        return [name for name in AXIOM_NAMES if name in self.statuses and not self.statuses[name].passed]

    @property
    def passed(self):
        return all(s.passed for s in self.statuses.values())

    @property
    def is_hlya(self):
        return all(self.statuses[name].passed for name in STRUCTURE_AXIOMS)

    @property
    def is_multiplicative(self):
        return self.statuses["multiplicative_binary"].passed and self.statuses["multiplicative_ternary"].passed

    @property
    def is_regular(self):
        return self.statuses["regular"].passed

    def to_dict(self):
        return {
            "pass": self.passed,
            "abelian": self.abelian,
            "axioms": [self.statuses[name].to_dict(self.field) for name in AXIOM_NAMES if name in self.statuses],
        }

    def __repr__(self):
        if self.passed:
            return "AxiomReport(pass)"
        return "AxiomReport(failing={})".format(self.failing())


def skew_statuses(tensor, skew_name, alternating_name, field, cap=DEFAULT_FAILURE_CAP):
    """
    Skew-symmetry T(x, y, ...) = -T(y, x, ...) and alternation T(x, x, ...) = 0,
    reported separately since they differ in characteristic 2.
    """
    rest = list(range(2, tensor.ndim))
    swapped = field.reduce(-np.transpose(tensor, [1, 0] + rest))
    skew = compare_tensors(skew_name, tensor, swapped, field, cap)

    n = tensor.shape[0]
    if tensor.ndim == 3:
        diagonal = [(i, i) for i in range(n)]
    else:
        diagonal = [(i, i, k) for i in range(n) for k in range(n)]
    bad = [idx for idx in diagonal if not field.is_zero(tensor[idx])]
    zero = field.zeros(tensor.shape[-1])
    alternating = AxiomStatus(alternating_name, len(bad),
                              [(idx, tensor[idx], zero) for idx in bad[:cap]])
    return skew, alternating


def hom_jacobi_status(binary, twist, field, cap=DEFAULT_FAILURE_CAP, name="hom_jacobi"):
    """cyc_{x,y,z} [[x,y], a z] = 0, the identity of a Hom-Lie algebra."""
    lhs = cyclic_sum(compose(twist_slots(binary, [1], twist, field), 0, binary, field), field)
    return compare_tensors(name, lhs, field.zeros(lhs.shape), field, cap)


def check_axioms(algebra, cap=DEFAULT_FAILURE_CAP, timer=None):
    """
    CHECK THE HLYA AXIOMS
    =====================

    Evaluate every axiom, multiplicativity and regularity on all basis tuples.

    Parameters
    ----------
        algebra : Algebra.HlyAlgebra
            The algebra to check.
        cap : int
            Maximum number of failing tuples stored for each axiom
            (the total count is always reported).
        timer : Timer.Timer, optional
            If given, each identity is timed separately.

    Results
    -------
        report : AxiomReport
            One AxiomStatus per entry of AXIOM_NAMES.
    """
    field = algebra.field
    B = algebra.binary
    T = algebra.ternary
    a1 = algebra.twist
    a2 = algebra.twist_squared()

    def run(function, *args):
        if timer is not None:
            return timer.execute_timed_function(function, *args)
        return function(*args)

    def axiom2():
        double = compose(twist_slots(B, [1], a1, field), 0, B, field)
        lhs = field.reduce(cyclic_sum(double, field) + cyclic_sum(T, field))
        return compare_tensors("hlya2", lhs, field.zeros(lhs.shape), field, cap)

    def axiom3():
        lhs = compose(twist_slots(T, [1, 2], a1, field), 0, B, field)
        return compare_tensors("hlya3", lhs, field.zeros(lhs.shape), field, cap)

    def axiom4():
        lhs = cyclic_sum(compose(twist_slots(T, [0, 1], a1, field), 2, B, field), field)
        first = compose(twist_slots(B, [1], a2, field), 0, T, field)
        second = reorder(compose(twist_slots(B, [0], a2, field), 1, T, field), [1, 2, 0, 3])
        return compare_tensors("hlya4", lhs, field.reduce(first + second), field, cap)

    def axiom5():
        outer = compose(twist_slots(T, [0, 1], a2, field), 2, T, field)
        first = compose(twist_slots(T, [1, 2], a2, field), 0, T, field)
        second = reorder(compose(twist_slots(T, [0, 2], a2, field), 1, T, field), [1, 2, 0, 3, 4])
        third = reorder(outer, [2, 3, 0, 1, 4])
        return compare_tensors("hlya5", outer, field.reduce(first + second + third), field, cap)

    def multiplicativity():
        mb = compare_tensors("multiplicative_binary", apply_output(a1, B, field),
                             twist_slots(B, [0, 1], a1, field), field, cap)
        mt = compare_tensors("multiplicative_ternary", apply_output(a1, T, field),
                             twist_slots(T, [0, 1, 2], a1, field), field, cap)
        return mb, mt

    def regularity():
        try:
            LinAlg.inverse(a1, field)
        except LinAlg.Singular as err:
            return AxiomStatus("regular", 1, [((), None, None)], detail=str(err))
        return AxiomStatus("regular")

    statuses = {}
    for status in skew_statuses(B, "hlya1_skew_binary", "hlya1_alternating_binary", field, cap) + \
            skew_statuses(T, "hlya1_skew_ternary", "hlya1_alternating_ternary", field, cap):
        statuses[status.name] = status
    for function in (axiom2, axiom3, axiom4, axiom5, regularity):
        status = run(function)
        statuses[status.name] = status
    for status in run(multiplicativity):
        statuses[status.name] = status

    return AxiomReport(field, statuses, algebra.is_abelian())


# ---- vector level evaluation, independent of the tensor sweep ----
def check_identities_on_vectors(algebra, x, y, z, w, t):
    """
    Evaluate every identity on explicit vectors using only eval_binary,
    eval_ternary and apply_twist.

    Results
    -------
        outcome : dict
            identity name -> bool
    """
    A = algebra
    field = A.field
    b = A.eval_binary
    tr = A.eval_ternary
    a = A.apply_twist

    def a2(v):
        return a(a(v))

    out = {}
    out["hlya1_skew_binary"] = field.is_zero(b(x, y) + b(y, x))
    out["hlya1_skew_ternary"] = field.is_zero(tr(x, y, z) + tr(y, x, z))

    cyc_double = b(b(x, y), a(z)) + b(b(y, z), a(x)) + b(b(z, x), a(y))
    cyc_triple = tr(x, y, z) + tr(y, z, x) + tr(z, x, y)
    out["hlya2"] = field.is_zero(cyc_double + cyc_triple)

    out["hlya3"] = field.is_zero(tr(b(x, y), a(z), a(w)))

    lhs4 = tr(a(x), a(y), b(z, w)) + tr(a(y), a(z), b(x, w)) + tr(a(z), a(x), b(y, w))
    rhs4 = b(tr(x, y, z), a2(w)) + b(a2(z), tr(x, y, w))
    out["hlya4"] = field.is_zero(lhs4 - rhs4)

    lhs5 = tr(a2(x), a2(y), tr(z, w, t))
    rhs5 = tr(tr(x, y, z), a2(w), a2(t)) + tr(a2(z), tr(x, y, w), a2(t)) + tr(a2(z), a2(w), tr(x, y, t))
    out["hlya5"] = field.is_zero(lhs5 - rhs5)

    out["multiplicative_binary"] = field.is_zero(a(b(x, y)) - b(a(x), a(y)))
    out["multiplicative_ternary"] = field.is_zero(a(tr(x, y, z)) - tr(a(x), a(y), a(z)))
    return out


def random_identity_check(algebra, rng, n_samples=50, bound=3):
    """
    Evaluate the identities on n_samples random vector tuples.

    Results
    -------
        failing : list of str
            Sorted names of the identities that failed on at least one sample.
    """
    failing = set()
    for _ in range(n_samples):
        vectors = [algebra.field.random_matrix(rng, (algebra.dim,), bound) for _ in range(5)]
        for name, ok in check_identities_on_vectors(algebra, *vectors).items():
            if not ok:
                failing.add(name)
    return sorted(failing)


# ---- reductions ----
def as_hom_lie_algebra(algebra):
    """The same carrier with the ternary bracket set to zero."""
    return algebra.replace(ternary=None, label=algebra.label + " (binary part)")


def as_hom_lie_triple_system(algebra):
    """The same carrier with the binary bracket set to zero."""
    return algebra.replace(binary=None, label=algebra.label + " (ternary part)")


def is_hom_lie_algebra(algebra):
    """
    True when the ternary bracket vanishes and (A, [,], alpha) satisfies the
    Hom-Jacobi identity and multiplicativity.
    """
    field = algebra.field
    if not field.is_zero(algebra.ternary):
        return False
    if not hom_jacobi_status(algebra.binary, algebra.twist, field).passed:
        return False
    mult = compare_tensors("multiplicative_binary", apply_output(algebra.twist, algebra.binary, field),
                           twist_slots(algebra.binary, [0, 1], algebra.twist, field), field)
    return mult.passed


def is_hom_lie_triple_system(algebra):
    """
    True when the binary bracket vanishes and the remaining ternary structure
    passes every axiom (the fundamental identity is then twisted by alpha^2).
    """
    if not algebra.field.is_zero(algebra.binary):
        return False
    return check_axioms(algebra).is_hlya
