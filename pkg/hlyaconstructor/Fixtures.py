# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Built-in algebras and small corpora of generated algebras.
"""

import itertools
import os
import warnings

import numpy as np

import hlyaconstructor.Fields as Fields
import hlyaconstructor.LinAlg as LinAlg
import hlyaconstructor.Axioms as Axioms
import hlyaconstructor.Constructions as Constructions
from hlyaconstructor.Algebra import HlyAlgebra
from hlyaconstructor.Settings import ParallelPrint as print


__all__ = ["heisenberg", "abelian", "example_A", "example_B",
           "heisenberg_plus_abelian", "FIXTURES", "get_fixture", "random_algebra",
           "passes_check", "generate_corpus", "enumerate_algebras", "corpus_filename",
           "save_corpus", "MAX_ENUMERATION"]

MAX_ENUMERATION = 10**6

TWIST_NOTE = ("The listed twist assigns f3 twice; it is read as alpha(f1)=f1, alpha(f2)=f2, "
              "alpha(f3)=-f3, alpha(f4)=-f4.")


def _build(field, n, binary=(), ternary=(), twist_diagonal=None, names=None, label="", metadata=None):
    """
    Algebra from the listed products (indices from 0). Each entry of binary is
    (i, j, k, value) for [e_i, e_j] += value e_k; ternary entries are
    (i, j, k, l, value). The mirrored entries are added with the opposite sign.
    """
    B = field.zeros((n, n, n))
    for i, j, k, value in binary:
        v = field.coerce(value)
        B[i, j, k] = field.reduce(B[i, j, k] + v)
        B[j, i, k] = field.reduce(B[j, i, k] - v)
    T = field.zeros((n, n, n, n))
    for i, j, k, l, value in ternary:
        v = field.coerce(value)
        T[i, j, k, l] = field.reduce(T[i, j, k, l] + v)
        T[j, i, k, l] = field.reduce(T[j, i, k, l] - v)
    twist = None
    if twist_diagonal is not None:
        twist = field.zeros((n, n))
        for i, value in enumerate(twist_diagonal):
            twist[i, i] = field.coerce(value)
    return HlyAlgebra(field, n, binary=B, ternary=T, twist=twist, basis_names=names,
                      label=label, metadata=metadata)


def heisenberg(field=None):
    """[e1, e2] = e3, no ternary bracket, identity twist."""
    field = Fields.get_field(field)
    return _build(field, 3, binary=[(0, 1, 2, 1)], label="heisenberg")


def abelian(k=2, field=None, twist=None):
    """Zero brackets on K^k, identity twist unless given."""
    field = Fields.get_field(field)
    return HlyAlgebra(field, k, twist=twist, label="abelian({})".format(k))


def example_A(field=None):
    """
    [e1, e2] = e1, [e1, e3, e3] = e1, [e2, e3, e3] = e2,
    alpha = diag(1, -1, -1).
    """
    field = Fields.get_field(field)
    return _build(field, 3, binary=[(0, 1, 0, 1)],
                  ternary=[(0, 2, 2, 0, 1), (1, 2, 2, 1, 1)],
                  twist_diagonal=[1, -1, -1], label="example-A")


def example_B(field=None):
    """
    [f1, f4] = f2, [f1, f4, f4] = f1, [f2, f4, f4] = f2,
    alpha = diag(1, 1, -1, -1).
    """
    field = Fields.get_field(field)
    warnings.warn(TWIST_NOTE)
    return _build(field, 4, binary=[(0, 3, 1, 1)],
                  ternary=[(0, 3, 3, 0, 1), (1, 3, 3, 1, 1)],
                  twist_diagonal=[1, 1, -1, -1], names=["f1", "f2", "f3", "f4"],
                  label="example-B", metadata={"twist_reading": TWIST_NOTE})


def heisenberg_plus_abelian(k=2, field=None):
    field = Fields.get_field(field)
    S = Constructions.direct_sum(heisenberg(field), abelian(k, field))
    return S.replace(basis_names=["e{}".format(i + 1) for i in range(3 + k)],
                     label="heisenberg+abelian{}".format(k))


FIXTURES = {
    "heisenberg": lambda field, dim: heisenberg(field),
    "abelian": lambda field, dim: abelian(2 if dim is None else dim, field),
    "example-A": lambda field, dim: example_A(field),
    "example-B": lambda field, dim: example_B(field),
    "heisenberg+abelian2": lambda field, dim: heisenberg_plus_abelian(2, field),
}


def get_fixture(name, field=None, dim=None):
    """
    Build a fixture by name.

    Parameters
    ----------
        name : str
            One of FIXTURES.
        field : str or Fields.Field
            Q by default.
        dim : int
            Only used by "abelian".
    """
    if name not in FIXTURES:
        raise ValueError("Error, unknown fixture '{}' (known: {})".format(name, ", ".join(sorted(FIXTURES))))
    return FIXTURES[name](Fields.get_field(field), dim)


# ---- generation ----
def _free_slots(n):
    binary = [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(n)]
    ternary = [(i, j, k, l) for i in range(n) for j in range(i + 1, n) for k in range(n) for l in range(n)]
    return binary, ternary


def _from_free_values(field, n, values, twist, label=""):
    binary_slots, ternary_slots = _free_slots(n)
    nb = len(binary_slots)
    binary = [slot + (v,) for slot, v in zip(binary_slots, values[:nb]) if v != 0]
    ternary = [slot + (v,) for slot, v in zip(ternary_slots, values[nb:]) if v != 0]
    A = _build(field, n, binary=binary, ternary=ternary, label=label)
    return A.replace(twist=twist)


def random_algebra(field, dim, rng, density=0.15, bound=1):
    """
    Random skew structure constants and a random invertible twist.

    Parameters
    ----------
        rng : numpy.random.RandomState
        density : float
            Probability for each free constant to be nonzero.
        bound : int
            Entry bound over Q.
    """
    binary_slots, ternary_slots = _free_slots(dim)
    n_free = len(binary_slots) + len(ternary_slots)
    mask = rng.uniform(size=n_free) < density
    raw = field.random_matrix(rng, (n_free,), bound)
    values = [raw[i] if mask[i] else field.zero for i in range(n_free)]

    while True:
        if rng.uniform() < 0.5:
            twist = field.eye(dim)
        else:
            twist = field.random_matrix(rng, (dim, dim), bound)
        if LinAlg.is_invertible(twist, field):
            break
    return _from_free_values(field, dim, values, twist)


def passes_check(algebra):
    """Every axiom, multiplicativity and regularity."""
    return Axioms.check_axioms(algebra).passed


def generate_corpus(field, dim, count, seed=0, max_attempts=None, density=0.15, verbose=False):
    """
    GENERATE A CORPUS
    =================

    Rejection sampling: random_algebra draws are kept when passes_check.
    The same seed gives the same list.

    Results
    -------
        corpus : list of HlyAlgebra
            At most count algebras, fewer (with a warning) if max_attempts runs out.
    """
    field = Fields.get_field(field)
    rng = np.random.RandomState(seed)
    if max_attempts is None:
        max_attempts = 200 * max(1, count)

    corpus = []
    attempts = 0
    while len(corpus) < count and attempts < max_attempts:
        attempts += 1
        A = random_algebra(field, dim, rng, density)
        if passes_check(A):
            corpus.append(A.replace(label="hlya_{}_d{}_{}".format(field.name, dim, len(corpus))))
            if verbose:
                print("Accepted {} / {} after {} attempts".format(len(corpus), count, attempts))
    if len(corpus) < count:
        warnings.warn("Only {} algebras accepted out of {} requested in {} attempts".format(
            len(corpus), count, attempts))
    return corpus


def enumerate_algebras(field, dim, verbose=False):
    """
    Every algebra of dimension dim over F_p passing passes_check, in the
    lexicographic order of (structure constants, twist).
    """
    field = Fields.get_field(field)
    if field.p is None:
        raise ValueError("Error, exhaustive enumeration needs a finite field")
    binary_slots, ternary_slots = _free_slots(dim)
    n_free = len(binary_slots) + len(ternary_slots)
    # |GL(n, p)| = prod_i (p^n - p^i)
    gl_order = 1
    for i in range(dim):
        gl_order *= field.p ** dim - field.p ** i
    total = field.p ** n_free * gl_order
    if total > MAX_ENUMERATION:
        raise ValueError("Error, {} candidates over {} in dimension {}: too many to enumerate".format(
            total, field.name, dim))
    twists = list(LinAlg.enumerate_invertible(field, dim))

    found = []
    for values in itertools.product(field.elements(), repeat=n_free):
        for twist in twists:
            A = _from_free_values(field, dim, list(values), twist)
            if passes_check(A):
                found.append(A.replace(label="hlya_{}_d{}_{}".format(field.name, dim, len(found))))
    if verbose:
        print("{} algebras out of {} candidates".format(len(found), total))
    return found


def corpus_filename(field, dim, index):
    return "hlya_{}_d{}_{}.json".format(field.name, dim, index)


def save_corpus(corpus, directory):
    """Write one document per algebra, returns the list of paths."""
    if not os.path.isdir(directory):
        os.makedirs(directory)
    paths = []
    for index, A in enumerate(corpus):
        path = os.path.join(directory, corpus_filename(A.field, A.dim, index))
        A.save_json(path)
        paths.append(path)
    return paths
