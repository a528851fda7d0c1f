# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Isoclinism of Hom-Lie Yamaguti algebras.

A witness (theta, beta) between A and B is stored in canonical coordinates:

    theta : A/Z(A) -> B/Z(B)   in the quotient coordinates of quotient(A, Z(A))
    beta  : A^2 -> B^2         in the RREF coordinates of derived(A), derived(B)

The canonical data of each algebra is collected by isoclinism_frame.
Searches enumerate theta in lexicographic order and force beta from the
bracket values, the first verified candidate wins.
"""

import itertools
import warnings

import numpy as np

import hlyaconstructor.Settings as Settings
from hlyaconstructor.Settings import ParallelPrint as print
import hlyaconstructor.LinAlg as LinAlg
import hlyaconstructor.Axioms as Axioms
import hlyaconstructor.Subobjects as Subobjects
import hlyaconstructor.Morphisms as Morphisms
import hlyaconstructor.Constructions as Constructions
from hlyaconstructor.Algebra import HlyAlgebra
from hlyaconstructor.Axioms import AxiomStatus, compare_tensors
from hlyaconstructor.Methods import transform_tensor, twist_slots, apply_output


__all__ = ["DEFAULT_BOUND", "DEFAULT_BUDGET", "BudgetExhausted", "WitnessVerificationFailed",
           "StemCheckFailed", "NotAFamily", "IsoclinismFrame", "isoclinism_frame",
           "IsoclinismWitness", "IsoclinismReport", "verify_isoclinism", "identity_witness",
           "search_isoclinism", "search_isomorphism", "abelian_extension_witness",
           "isomorphism_witness", "ideal_isoclinism_witness", "quotient_isoclinism_witness",
           "surjection_isoclinism", "check_isoclinism_properties", "Decomposition",
           "decompose_stem_abelian", "MinimalityReport", "stem_minimality_check",
           "PullbackResult", "pulled_back_extension", "compare_isoclinism_isomorphism"]

DEFAULT_BOUND = 2
DEFAULT_BUDGET = 200000
WAVE_SIZE = 64


class BudgetExhausted(RuntimeError):
    def __init__(self, message, examined=0):
        self.examined = examined
        super(BudgetExhausted, self).__init__(message)


class WitnessVerificationFailed(RuntimeError):
    def __init__(self, message, report=None):
        self.report = report
        super(WitnessVerificationFailed, self).__init__(message)


class StemCheckFailed(RuntimeError):
    pass


class NotAFamily(ValueError):
    pass


# ---- canonical data ----
class IsoclinismFrame(object):
    def __init__(self, algebra):
        """
        ISOCLINISM FRAME
        ================

        Canonical coordinates of A/Z(A) and A^2 with the maps

            tau2(xbar, ybar)       = [x, y]      in A^2 coordinates
            tau3(xbar, ybar, zbar) = [x, y, z]   in A^2 coordinates

        evaluated on the transversal representatives (central shifts do not change them).

        Parameters
        ----------
            algebra : HlyAlgebra
                The center must be a Hom-ideal (it is whenever alpha(Z) is in Z).
        """
        field = algebra.field
        self.algebra = algebra
        self.field = field
        self.center = Subobjects.center(algebra)
        self.presentation = Constructions.quotient(algebra, self.center, label="{} / Z".format(algebra.label))
        self.transversal = self.presentation.transversal
        self.projection = self.presentation.projection
        self.abar = self.presentation.quotient.twist

        self.derived = Subobjects.derived(algebra)
        self.derived_embedding = self.derived.embedding()
        self.derived_selector = self.derived.selector()

        self.tau2 = transform_tensor(algebra.binary, self.transversal, self.derived_selector, field)
        self.tau3 = transform_tensor(algebra.ternary, self.transversal, self.derived_selector, field)

        self.derived_invariant = self.derived.contains(self.derived.image(algebra.twist))
        self.alpha_derived = field.dot(field.dot(self.derived_selector, algebra.twist), self.derived_embedding)

    @property
    def q(self):
        return self.presentation.quotient.dim

    @property
    def d(self):
        return self.derived.dim

    def spanning_columns(self, tau2=None, tau3=None):
        """The bracket values as columns: d x (q^2 + q^3)."""
        tau2 = self.tau2 if tau2 is None else tau2
        tau3 = self.tau3 if tau3 is None else tau3
        d = tau2.shape[-1]
        q = tau2.shape[0]
        return np.hstack([tau2.reshape((q * q, d)).T, tau3.reshape((q ** 3, d)).T])

    def to_dict(self):
        field = self.field
        return {"center": self.center.to_json(),
                "transversal": field.array_to_json(self.transversal.T),
                "derived_basis": self.derived.to_json()}


def isoclinism_frame(algebra):
    return IsoclinismFrame(algebra)


# ---- witnesses ----
class IsoclinismWitness(object):
    def __init__(self, theta, beta, field, source=None, target=None, report=None):
        """
        Parameters
        ----------
            theta : Morphism or matrix
                A/Z(A) -> B/Z(B), q_B x q_A.
            beta : Morphism or matrix
                A^2 -> B^2, d_B x d_A.
            source, target : HlyAlgebra, optional
                The algebras A and B.
            report : IsoclinismReport, optional
                Set once verified.
        """
        self.field = field
        self.theta = theta if isinstance(theta, Morphisms.Morphism) else Morphisms.Morphism(theta, field, label="theta")
        self.beta = beta if isinstance(beta, Morphisms.Morphism) else Morphisms.Morphism(beta, field, label="beta")
        self.source = source
        self.target = target
        self.report = report

    @property
    def verified(self):
        return self.report is not None and self.report.passed

    def inverse(self):
        """The witness B -> A."""
        return IsoclinismWitness(self.theta.inverse(), self.beta.inverse(), self.field,
                                 source=self.target, target=self.source)

    def compose(self, other):
        """This witness A -> B followed by other B -> C."""
        return IsoclinismWitness(other.theta.compose(self.theta), other.beta.compose(self.beta), self.field,
                                 source=self.source, target=other.target)

    def to_dict(self):
        out = {"theta": self.field.array_to_json(self.theta.matrix),
               "beta": self.field.array_to_json(self.beta.matrix)}
        if self.report is not None:
            out["report"] = self.report.to_dict()
        return out

    @staticmethod
    def from_dict(doc, field):
        if not isinstance(doc, dict) or "theta" not in doc or "beta" not in doc:
            raise ValueError("Error, a witness document needs the fields 'theta' and 'beta'")
        matrices = []
        for key in ("theta", "beta"):
            rows = doc[key]
            if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
                raise ValueError("Error, field '{}' must be a list of rows".format(key))
            width = len(rows[0]) if rows else 0
            matrices.append(field.asarray([[field.scalar_from_json(v) for v in r] for r in rows],
                                          shape=(len(rows), width)))
        return IsoclinismWitness(matrices[0], matrices[1], field)


class IsoclinismReport(object):
    CHECKS = ["theta_invertible", "beta_invertible", "binary", "ternary", "theta_twist", "beta_twist"]

    def __init__(self, field, statuses):
        self.field = field
        self.statuses = statuses

    def __getitem__(self, name):
        return self.statuses[name]

    @property
    def passed(self):
        return all(s.passed for s in self.statuses.values())

    def first_failure(self):
        for name in self.CHECKS:
            status = self.statuses[name]
            if not status.passed:
                return name, status.failures[0][0] if status.failures else ()
        return None

    def to_dict(self):
        return {"pass": self.passed,
                "checks": [self.statuses[name].to_dict(self.field) for name in self.CHECKS]}


def _flag(name, ok, detail=""):
    if ok:
        return AxiomStatus(name)
    return AxiomStatus(name, 1, [((), None, None)], detail=detail)


def _verify_frames(fa, fb, theta, beta, cap=Axioms.DEFAULT_FAILURE_CAP):
    field = fa.field
    statuses = {}
    statuses["theta_invertible"] = _flag("theta_invertible", LinAlg.is_invertible(theta, field),
                                         "theta has rank {}".format(LinAlg.rank(theta, field)))
    statuses["beta_invertible"] = _flag("beta_invertible", LinAlg.is_invertible(beta, field),
                                        "beta has rank {}".format(LinAlg.rank(beta, field)))

    statuses["binary"] = compare_tensors("binary", apply_output(beta, fa.tau2, field),
                                         twist_slots(fb.tau2, [0, 1], theta, field), field, cap)
    statuses["ternary"] = compare_tensors("ternary", apply_output(beta, fa.tau3, field),
                                          twist_slots(fb.tau3, [0, 1, 2], theta, field), field, cap)
    statuses["theta_twist"] = compare_tensors("theta_twist", field.dot(theta, fa.abar).T,
                                              field.dot(fb.abar, theta).T, field, cap)
    if fa.derived_invariant and fb.derived_invariant:
        statuses["beta_twist"] = compare_tensors("beta_twist", field.dot(beta, fa.alpha_derived).T,
                                                 field.dot(fb.alpha_derived, beta).T, field, cap)
    else:
        statuses["beta_twist"] = _flag("beta_twist", False, "the derived subalgebra is not invariant under the twist")
    return IsoclinismReport(field, statuses)


def _check_shapes(fa, fb, theta, beta):
    if fa.q != fb.q or fa.d != fb.d:
        raise ValueError("Error, A/Z(A) and B/Z(B) have dimensions {} and {}, A^2 and B^2 have {} and {}".format(
            fa.q, fb.q, fa.d, fb.d))
    if theta.shape != (fb.q, fa.q) or beta.shape != (fb.d, fa.d):
        raise ValueError("Error, the witness needs theta {0}x{0} and beta {1}x{1}, got {2} and {3}".format(
            fa.q, fa.d, theta.shape, beta.shape))


def verify_isoclinism(A, B, w, frames=None):
    """
    VERIFY AN ISOCLINISM WITNESS
    ============================

    Checks that theta and beta are invertible and that

        beta tau2_A(x, y)    = tau2_B(theta x, theta y)
        beta tau3_A(x, y, z) = tau3_B(theta x, theta y, theta z)
        theta abar_A = abar_B theta
        beta alpha_A|A^2 = alpha_B|B^2 beta

    on all quotient basis tuples.

    Parameters
    ----------
        A, B : HlyAlgebra
        w : IsoclinismWitness
        frames : tuple, optional
            Precomputed (frame of A, frame of B).

    Results
    -------
        report : IsoclinismReport
            Also stored in w.report.
    """
    fa, fb = frames if frames is not None else (IsoclinismFrame(A), IsoclinismFrame(B))
    theta = w.theta.matrix
    beta = w.beta.matrix
    _check_shapes(fa, fb, theta, beta)
    report = _verify_frames(fa, fb, theta, beta)
    w.report = report
    w.source = A
    w.target = B
    return report


def identity_witness(A):
    fa = IsoclinismFrame(A)
    field = A.field
    w = IsoclinismWitness(field.eye(fa.q), field.eye(fa.d), field)
    verify_isoclinism(A, A, w, frames=(fa, fa))
    return w


def _require(A, B, w, what):
    report = verify_isoclinism(A, B, w)
    if not report.passed:
        name, idx = report.first_failure()
        raise WitnessVerificationFailed("Error, the {} witness fails the {} check at {}".format(what, name, idx), report)
    return w


# ---- searches ----
def _run_waves(candidates, test, budget, field, what, verbose=False, timer=None):
    """
    Feed the candidates in waves through GoParallel, return the first success
    in enumeration order, None when the enumeration ends without success.
    """
    examined = 0
    wave_size = WAVE_SIZE * max(1, Settings.GetNProc())
    while True:
        room = budget - examined
        if room <= 0:
            if next(candidates, None) is None:
                return None, examined, True
            return None, examined, False
        wave = list(itertools.islice(candidates, min(wave_size, room)))
        if not wave:
            return None, examined, True
        examined += len(wave)
        results = Settings.GoParallel(test, wave, timer=timer)
        for result in results:
            if result is not None:
                return result, examined, True
        if verbose:
            print("{}: {} candidates examined".format(what, examined))


def _conclude_miss(field, examined, complete, what, budget):
    if complete and field.p is not None:
        return None
    if complete:
        raise BudgetExhausted("Error, the bounded {} search over Q found nothing in {} candidates (inconclusive)".format(
            what, examined), examined)
    raise BudgetExhausted("Error, the {} search stopped after the budget of {} candidates (inconclusive)".format(
        what, budget), examined)


def search_isoclinism(A, B, budget=DEFAULT_BUDGET, bound=DEFAULT_BOUND, verbose=False, timer=None):
    """
    SEARCH AN ISOCLINISM WITNESS
    ============================

    theta ranges over GL(q) (over Q: entries in [-bound, bound]) in lexicographic
    order. For each theta commuting with the quotient twists, beta is forced by
    beta tau_A = tau_B(theta, ...) on the bracket values, which span A^2.

    Results
    -------
        w : IsoclinismWitness or None
            The first verified witness. None when the necessary dimension
            conditions fail or when GL(q, p) is exhausted.

    Raises BudgetExhausted when the search is inconclusive.
    """
    if A.field != B.field:
        raise ValueError("Error, the algebras live over different fields")
    field = A.field
    fa, fb = IsoclinismFrame(A), IsoclinismFrame(B)
    if fa.q != fb.q or fa.d != fb.d:
        return None

    spanning = fa.spanning_columns()

    def test(theta):
        if not field.equal(field.dot(theta, fa.abar), field.dot(fb.abar, theta)):
            return None
        targets = fb.spanning_columns(twist_slots(fb.tau2, [0, 1], theta, field),
                                      twist_slots(fb.tau3, [0, 1, 2], theta, field))
        beta_t = LinAlg.solve(spanning.T, targets.T, field)
        if beta_t is None:
            return None
        beta = np.array(beta_t.T)
        if _verify_frames(fa, fb, theta, beta).passed:
            return theta, beta
        return None

    candidates = LinAlg.enumerate_invertible(field, fa.q, bound)
    found, examined, complete = _run_waves(candidates, test, budget, field, "isoclinism", verbose, timer)
    if found is not None:
        w = IsoclinismWitness(found[0], found[1], field)
        verify_isoclinism(A, B, w, frames=(fa, fb))
        return w
    return _conclude_miss(field, examined, complete, "isoclinism", budget)


def search_isomorphism(A, B, budget=DEFAULT_BUDGET, bound=DEFAULT_BOUND, verbose=False, timer=None):
    """
    Enumerate GL(n) (bounded over Q) in lexicographic order for a map
    f : A -> B commuting with the twists and preserving both brackets.

    Results
    -------
        f : Morphism or None
            The first verified isomorphism, None when dimensions differ or GL(n, p) is exhausted.
    """
    if A.field != B.field:
        raise ValueError("Error, the algebras live over different fields")
    field = A.field
    if A.dim != B.dim:
        return None

    def test(f):
        if not field.equal(field.dot(f, A.twist), field.dot(B.twist, f)):
            return None
        if Morphisms.is_homomorphism(f, A, B).is_isomorphism:
            return f
        return None

    candidates = LinAlg.enumerate_invertible(field, A.dim, bound)
    found, examined, complete = _run_waves(candidates, test, budget, field, "isomorphism", verbose, timer)
    if found is not None:
        f = Morphisms.Morphism(found, field, label="isomorphism")
        Morphisms.is_homomorphism(f, A, B)
        return f
    return _conclude_miss(field, examined, complete, "isomorphism", budget)


def compare_isoclinism_isomorphism(A, B, budget=DEFAULT_BUDGET, bound=DEFAULT_BOUND):
    """
    Run both searches on the pair.

    Results
    -------
        outcome : dict
            "isoclinic" and "isomorphic" (True, False or None when inconclusive)
            and "agree" (None if either search is inconclusive).
    """
    outcome = {}
    for key, search in (("isoclinic", search_isoclinism), ("isomorphic", search_isomorphism)):
        try:
            outcome[key] = search(A, B, budget, bound) is not None
        except BudgetExhausted:
            outcome[key] = None
    if outcome["isoclinic"] is None or outcome["isomorphic"] is None:
        outcome["agree"] = None
    else:
        outcome["agree"] = outcome["isoclinic"] == outcome["isomorphic"]
    return outcome


# ---- constructive witnesses ----
def _abelian(field, k, twist=None):
    return HlyAlgebra(field, k, twist=twist, label="abelian({})".format(k))


def abelian_extension_witness(A, k, abelian_twist=None):
    """
    The witness A ~ A (+) C for C abelian of dimension k:

        theta(x + Z(A)) = (x, 0) + Z(A (+) C),   beta(a) = (a, 0).

    Results
    -------
        w : IsoclinismWitness
            Verified, w.target is the direct sum.
    """
    field = A.field
    S = Constructions.direct_sum(A, _abelian(field, k, abelian_twist))
    fa, fs = IsoclinismFrame(A), IsoclinismFrame(S)
    inj = field.zeros((A.dim + k, A.dim))
    inj[:A.dim, :] = field.eye(A.dim)
    theta = field.dot(field.dot(fs.projection, inj), fa.transversal)
    beta = field.dot(field.dot(fs.derived_selector, inj), fa.derived_embedding)
    return _require(A, S, IsoclinismWitness(theta, beta, field), "direct sum")


def isomorphism_witness(f, A, B):
    """The (theta, beta) induced by an isomorphism f : A -> B."""
    field = A.field
    F = f.matrix if isinstance(f, Morphisms.Morphism) else field.asarray(f)
    fa, fb = IsoclinismFrame(A), IsoclinismFrame(B)
    theta = field.dot(field.dot(fb.projection, F), fa.transversal)
    beta = field.dot(field.dot(fb.derived_selector, F), fa.derived_embedding)
    return _require(A, B, IsoclinismWitness(theta, beta, field), "induced")


def _projection_witness(A, presentation):
    """A ~ A/I through the projection, valid when I meets A^2 trivially."""
    field = A.field
    Q = presentation.quotient
    fa, fq = IsoclinismFrame(A), IsoclinismFrame(Q)
    P = presentation.projection
    theta = field.dot(field.dot(fq.projection, P), fa.transversal)
    beta = field.dot(field.dot(fq.derived_selector, P), fa.derived_embedding)
    return _require(A, Q, IsoclinismWitness(theta, beta, field), "projection")


def ideal_isoclinism_witness(A, I):
    """
    Witness A ~ A/I for a Hom-ideal I with I cap A^2 = 0.
    """
    meet = I.intersection(Subobjects.derived(A))
    if not meet.is_trivial():
        raise ValueError("Error, the ideal meets A^2 in {}".format(meet.to_json()))
    return _projection_witness(A, Constructions.quotient(A, I))


def quotient_isoclinism_witness(A, I):
    """
    QUOTIENT ISOCLINISM
    ===================

    Witness A/I ~ A/(I cap A^2). With J = I cap A^2:

        theta : (A/I)/Z -> (A/J)/Z   lift to A, project to A/J
        beta  : (A/I)^2 -> (A/J)^2   inverse of the map induced by A/J -> A/I

    The candidate is verified before returning, a rejected candidate raises
    WitnessVerificationFailed with the failing check.

    Results
    -------
        w : IsoclinismWitness
            w.source is A/I and w.target is A/J.
    """
    field = A.field
    report = Subobjects.is_hom_ideal(A, I)
    if not report.passed:
        raise Constructions.NotAnIdeal(report)
    J = I.intersection(Subobjects.derived(A))

    pres_i = Constructions.quotient(A, I)
    pres_j = Constructions.quotient(A, J)
    Qi, Qj = pres_i.quotient, pres_j.quotient
    fi, fj = IsoclinismFrame(Qi), IsoclinismFrame(Qj)

    theta = field.dot(field.dot(fj.projection, pres_j.projection), field.dot(pres_i.transversal, fi.transversal))
    down = field.dot(field.dot(fi.derived_selector, pres_i.projection),
                     field.dot(pres_j.transversal, fj.derived_embedding))
    try:
        beta = LinAlg.inverse(down, field)
    except (LinAlg.Singular, ValueError) as err:
        raise WitnessVerificationFailed("Error, the derived map (A/J)^2 -> (A/I)^2 is not invertible: {}".format(err))

    w = IsoclinismWitness(theta, beta, field)
    try:
        _check_shapes(fi, fj, w.theta.matrix, w.beta.matrix)
    except ValueError as err:
        raise WitnessVerificationFailed(str(err))
    return _require(Qi, Qj, w, "quotient")


def surjection_isoclinism(f, A, B):
    """
    Witness A ~ B from a surjective homomorphism f with ker(f) cap A^2 = 0:
    A ~ A/ker(f) followed by the induced isomorphism A/ker(f) -> B.
    """
    field = A.field
    f = f if isinstance(f, Morphisms.Morphism) else Morphisms.Morphism(f, field)
    report = Morphisms.is_homomorphism(f, A, B)
    if not report.passed:
        raise ValueError("Error, f is not a homomorphism: the {} check fails at {}".format(*report.first_failure()))
    if f.rank() != B.dim:
        raise ValueError("Error, f is not surjective (rank {} < {})".format(f.rank(), B.dim))
    K = f.kernel()
    meet = K.intersection(Subobjects.derived(A))
    if not meet.is_trivial():
        raise ValueError("Error, ker(f) meets A^2 in {}".format(meet.to_json()))

    pres = Constructions.quotient(A, K)
    first = _projection_witness(A, pres)
    fbar = Morphisms.Morphism(field.dot(f.matrix, pres.transversal), field, label="induced isomorphism")
    second = isomorphism_witness(fbar, pres.quotient, B)
    return _require(A, B, first.compose(second), "composite")


def check_isoclinism_properties(A, B, w):
    """
    Instance checks on a verified witness:

        derived_coset     : theta(x + Z(A)) = beta(x) + Z(B) for x in A^2
        derived_bracket   : beta([x, y]) = [beta(x), b] with b a representative of theta(ybar)
        representative    : the same with b shifted by a central vector

    Results
    -------
        statuses : dict of name -> AxiomStatus
    """
    field = A.field
    fa, fb = IsoclinismFrame(A), IsoclinismFrame(B)
    theta, beta = w.theta.matrix, w.beta.matrix
    statuses = {}

    lhs = field.dot(field.dot(fb.projection, fb.derived_embedding), beta)
    rhs = field.dot(theta, field.dot(fa.projection, fa.derived_embedding))
    statuses["derived_coset"] = compare_tensors("derived_coset", lhs.T, rhs.T, field)

    left = twist_slots(twist_slots(A.binary, [0], fa.derived_embedding, field), [1], fa.transversal, field)
    left = apply_output(field.dot(beta, fa.derived_selector), left, field)
    images = field.dot(fb.derived_embedding, beta)

    reps = field.dot(fb.transversal, theta)
    right = twist_slots(twist_slots(B.binary, [0], images, field), [1], reps, field)
    statuses["derived_bracket"] = compare_tensors("derived_bracket", left,
                                                  apply_output(fb.derived_selector, right, field), field)

    shifted = np.array(reps)
    if fb.center.dim:
        shifted = field.reduce(shifted + np.outer(fb.center.basis[0], np.ones(reps.shape[1], dtype=object)))
    right = twist_slots(twist_slots(B.binary, [0], images, field), [1], shifted, field)
    statuses["representative"] = compare_tensors("representative", left,
                                                 apply_output(fb.derived_selector, right, field), field)
    return statuses


# ---- decomposition ----
class Decomposition(object):
    def __init__(self, stem_part, abelian_part, witness, stem_subspace, abelian_subspace):
        """
        A = B1 (+) B2 with B1 stem and B2 abelian.

        Parameters
        ----------
            stem_part, abelian_part : HlyAlgebra
            witness : Morphism
                Verified isomorphism direct_sum(B1, B2) -> A.
            stem_subspace, abelian_subspace : LinAlg.Subspace
                The subspaces W and V of A carrying B1 and B2.
        """
        self.stem_part = stem_part
        self.abelian_part = abelian_part
        self.witness = witness
        self.stem_subspace = stem_subspace
        self.abelian_subspace = abelian_subspace

    def to_dict(self):
        return {"stem_part": self.stem_part.to_dict(),
                "abelian_part": self.abelian_part.to_dict(),
                "stem_subspace": self.stem_subspace.to_json(),
                "abelian_subspace": self.abelian_subspace.to_json(),
                "witness": self.witness.to_dict()}


def decompose_stem_abelian(A):
    """
    STEM (+) ABELIAN DECOMPOSITION
    ==============================

    With Z the center, D = A^2 and K = Z cap D:

        V = twist invariant complement of K in Z      (abelian part)
        C = twist invariant complement of D + V in A
        W = D + C                                     (stem part)

    A = W (+) V as algebras since V is central.

    Results
    -------
        decomposition : Decomposition

    Raises NoInvariantComplement naming the failed step, StemCheckFailed if
    the result is not a stem (+) abelian splitting.
    """
    report = Axioms.check_axioms(A)
    if not report.is_hlya or not report.is_multiplicative or not report.is_regular:
        raise ValueError("Error, the decomposition needs a regular multiplicative HLYA, failing: {}".format(
            report.failing()))

    field = A.field
    n = A.dim
    full = LinAlg.Subspace.full(field, n)
    Z = Subobjects.center(A)
    D = Subobjects.derived(A)
    K = Z.intersection(D)

    V = LinAlg.invariant_complement(K, Z, A.twist)
    if V is None:
        sys_K, sys_rhs, _ = LinAlg.sylvester_system(K, Z, A.twist)
        raise Constructions.NoInvariantComplement(
            "Error, no twist invariant complement of Z cap A^2 in Z", step="abelian part",
            system=(sys_K, sys_rhs), field=field)
    DV = D + V
    C = LinAlg.invariant_complement(DV, full, A.twist)
    if C is None:
        sys_K, sys_rhs, _ = LinAlg.sylvester_system(DV, full, A.twist)
        raise Constructions.NoInvariantComplement(
            "Error, no twist invariant complement of A^2 + V", step="stem part",
            system=(sys_K, sys_rhs), field=field)
    W = D + C

    B1 = A.restrict(W.embedding(), label="stem part of {}".format(A.label))
    B2 = A.restrict(V.embedding(), label="abelian part of {}".format(A.label))
    if not B2.is_abelian():
        raise StemCheckFailed("Error, the central complement carries a nonzero bracket")

    witness = Morphisms.Morphism(np.hstack([W.embedding(), V.embedding()]), field, label="decomposition")
    if not Morphisms.is_homomorphism(witness, Constructions.direct_sum(B1, B2), A).is_isomorphism:
        raise StemCheckFailed("Error, W (+) V is not isomorphic to A: {}".format(witness.report.first_failure()))
    if not Subobjects.is_stem(B1):
        raise StemCheckFailed("Error, the stem part has center {} outside its derived subalgebra".format(
            Subobjects.center(B1).to_json()))
    return Decomposition(B1, B2, witness, W, V)


# ---- families ----
class MinimalityReport(object):
    def __init__(self, entries, note=""):
        self.entries = entries
        self.note = note

    @property
    def minimum_dim(self):
        return min(e["dim"] for e in self.entries)

    @property
    def stem_present(self):
        return any(e["is_stem"] for e in self.entries)

    @property
    def consistent(self):
        """Stem members attain the minimum dimension and non-stem members exceed it."""
        if not self.stem_present:
            return True
        low = self.minimum_dim
        return all((e["dim"] == low) if e["is_stem"] else (e["dim"] > low) for e in self.entries)

    def to_dict(self):
        return {"entries": self.entries, "minimum_dim": self.minimum_dim,
                "stem_present": self.stem_present, "consistent": self.consistent, "note": self.note}


def stem_minimality_check(family, witnesses=None, budget=DEFAULT_BUDGET):
    """
    Dimensions and stem flags of an isoclinism family.

    Parameters
    ----------
        family : list of HlyAlgebra
        witnesses : list, optional
            witnesses[j - 1] relates family[0] to family[j]; missing entries are searched.

    Raises NotAFamily when a member cannot be tied to family[0].
    """
    if not family:
        raise NotAFamily("Error, empty family")
    witnesses = list(witnesses) if witnesses is not None else []
    first = family[0]
    for j in range(1, len(family)):
        w = witnesses[j - 1] if j - 1 < len(witnesses) else None
        try:
            if w is None:
                w = search_isoclinism(first, family[j], budget)
            elif not verify_isoclinism(first, family[j], w).passed:
                w = None
        except (BudgetExhausted, ValueError) as err:
            raise NotAFamily("Error, member {} has no isoclinism witness with member 0: {}".format(j, err))
        if w is None:
            raise NotAFamily("Error, member {} is not isoclinic to member 0".format(j))

    entries = [{"index": i, "label": alg.label, "dim": alg.dim, "is_stem": Subobjects.is_stem(alg)}
               for i, alg in enumerate(family)]
    note = "" if any(e["is_stem"] for e in entries) else "no stem member present in sample"
    return MinimalityReport(entries, note)


# ---- pulled back extensions ----
class PullbackResult(object):
    def __init__(self, factor_set, omega, lam, composite):
        self.factor_set = factor_set
        self.omega = omega
        self.lam = lam
        self.composite = composite

    @property
    def verified(self):
        return bool(self.lam.is_isomorphism and self.composite.is_isomorphism)

    def to_dict(self):
        return {"factor_set": self.factor_set.to_dict(),
                "omega_axioms": self.omega.axiom_report.to_dict(),
                "lambda": self.lam.to_dict(),
                "composite": self.composite.to_dict(),
                "verified": self.verified}


def pulled_back_extension(A, B, w):
    """
    PULLED BACK EXTENSION
    =====================

    For stem A and B related by a verified witness, pull the factor set of B
    back along (theta, beta|Z) and build Omega_A(pi). The map

        (a, x) -> (beta a, theta x) : Omega_A(pi) -> Omega_B(omega)

    followed by the reconstruction Omega_B(omega) -> B is certified as an
    isomorphism, so B is the extension of Z(A) by A/Z(A) through pi.
    """
    field = A.field
    if not (Subobjects.is_stem(A) and Subobjects.is_stem(B)):
        raise ValueError("Error, both algebras must be stem")
    if not verify_isoclinism(A, B, w).passed:
        raise WitnessVerificationFailed("Error, the witness does not verify", w.report)
    fa, fb = IsoclinismFrame(A), IsoclinismFrame(B)

    pi_a, sect_a = Constructions.extract_factor_set(A)
    omega_b, sect_b = Constructions.extract_factor_set(B)
    phi_b, ext_b = Constructions.reconstruct_iso(B, omega_b, sect_b)

    # canonical quotient coordinates <-> section quotient coordinates
    theta = field.dot(field.dot(sect_b.presentation.projection, fb.transversal),
                      field.dot(w.theta.matrix, field.dot(fa.projection, sect_a.presentation.transversal)))

    Za, Zb = fa.center, fb.center
    images = field.dot(fb.derived_embedding, field.dot(w.beta.matrix, field.dot(fa.derived_selector, Za.embedding())))
    beta_z = field.dot(Zb.selector(), images)
    if not field.equal(field.dot(Zb.embedding(), beta_z), images):
        raise ValueError("Error, beta does not map Z(A) into Z(B)")

    pi = Constructions.pull_back_factor_set(omega_b, theta, beta_z)
    omega = Constructions.central_extension(Constructions.restricted_twist(A, Za), sect_a.presentation.quotient, pi)

    z, q = pi.z, pi.q
    lam = field.zeros((z + q, z + q))
    lam[:z, :z] = beta_z
    lam[z:, z:] = theta
    lam = Morphisms.Morphism(lam, field, label="lambda")
    Morphisms.is_homomorphism(lam, omega, ext_b)
    composite = phi_b.compose(lam)
    composite.label = "Omega_A(pi) -> B"
    Morphisms.is_homomorphism(composite, omega, B)
    if not composite.is_isomorphism:
        warnings.warn("The pulled back extension is not isomorphic to B: {}".format(composite.report.first_failure()))
    return PullbackResult(pi, omega, lam, composite)
