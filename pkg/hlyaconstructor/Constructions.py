# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Quotients, direct sums, factor sets and central extensions.

Conventions
-----------
Quotient coordinates are read by the projection matrix of a
QuotientPresentation. Center coordinates are the coordinates in the RREF
basis of Z(A), center_embedding converts them back to the carrier.
A central extension Omega lives on K^z (+) K^q, center coordinates first.
"""

import warnings

import numpy as np

import hlyaconstructor.LinAlg as LinAlg
import hlyaconstructor.Methods as Methods
import hlyaconstructor.Axioms as Axioms
import hlyaconstructor.Subobjects as Subobjects
import hlyaconstructor.Morphisms as Morphisms
from hlyaconstructor.Algebra import HlyAlgebra, MalformedAlgebra
from hlyaconstructor.Methods import DocumentError, compose, twist_slots, apply_output, cyclic_sum, transform_tensor


__all__ = ["NotAnIdeal", "TwistNotInvertibleOnQuotient", "TwistNotInvertible",
           "NoInvariantComplement", "ValueOutsideCenter", "ReconstructionFailed",
           "QuotientPresentation", "quotient", "direct_sum", "restricted_twist",
           "FactorSet", "SectionMap", "extract_factor_set", "FactorSetReport",
           "validate_factor_set", "CentralExtension", "central_extension",
           "reconstruct_iso", "RoundtripResult", "factor_set_roundtrip",
           "pull_back_factor_set", "compat_failures", "twisted_iso_from_compat",
           "induced_automorphisms", "extension_quotient_check"]


class NotAnIdeal(ValueError):
    def __init__(self, report):
        self.report = report
        check, idx, vec = report.first_failure()
        super(NotAnIdeal, self).__init__(
            "Error, the subspace is not a Hom-ideal: the {} product at {} gives {} outside the subspace".format(
                check, idx, report.subject.field.array_to_json(vec)))


class TwistNotInvertibleOnQuotient(ValueError):
    pass


class TwistNotInvertible(ValueError):
    pass


class NoInvariantComplement(ValueError):
    def __init__(self, message, step="", system=None, field=None):
        """
        system is the inconsistent Sylvester system (K, rhs) of the failing step,
        kept with its field so the command line can print it.
        """
        self.step = step
        self.system = system
        self.field = field
        super(NoInvariantComplement, self).__init__(message)

    @property
    def system_shape(self):
        if self.system is None:
            return None
        return tuple(self.system[0].shape)

    def system_to_dict(self):
        """The Sylvester system as JSON lists, None when there is none."""
        if self.system is None:
            return None
        K, rhs = self.system
        return {"matrix": self.field.array_to_json(K), "rhs": self.field.array_to_json(rhs)}


class ValueOutsideCenter(RuntimeError):
    pass


class ReconstructionFailed(RuntimeError):
    def __init__(self, message, failure=None):
        self.failure = failure
        super(ReconstructionFailed, self).__init__(message)


# ---- quotients and direct sums ----
class QuotientPresentation(object):
    def __init__(self, quotient, ideal, transversal, projection):
        """
        Parameters
        ----------
            quotient : HlyAlgebra
                The algebra A/I in quotient coordinates.
            ideal : LinAlg.Subspace
                The Hom-ideal I.
            transversal : ndarray(shape=(n, q))
                One representative per quotient basis vector (columns).
            projection : ndarray(shape=(q, n))
                Carrier -> quotient coordinates, with kernel I.
        """
        self.quotient = quotient
        self.ideal = ideal
        self.transversal = transversal
        self.projection = projection

    def lift(self, xbar):
        return self.quotient.field.dot(self.transversal, xbar)

    def project(self, x):
        return self.quotient.field.dot(self.projection, x)

    def to_dict(self):
        field = self.quotient.field
        return {"ideal": self.ideal.to_json(),
                "transversal": field.array_to_json(self.transversal.T),
                "projection": field.array_to_json(self.projection),
                "quotient": self.quotient.to_dict()}


def quotient(algebra, ideal, transversal=None, label=""):
    """
    QUOTIENT ALGEBRA
    ================

    Parameters
    ----------
        algebra : HlyAlgebra
        ideal : LinAlg.Subspace
            Must pass is_hom_ideal.
        transversal : LinAlg.Subspace, optional
            A complement of the ideal whose RREF basis gives the representatives.
            Defaults to the canonical complement.

    Results
    -------
        presentation : QuotientPresentation
    """
    field = algebra.field
    report = Subobjects.is_hom_ideal(algebra, ideal)
    if not report.passed:
        raise NotAnIdeal(report)

    n = algebra.dim
    if transversal is None:
        transversal = LinAlg.complement(ideal, LinAlg.Subspace.full(field, n))
    elif transversal.dim + ideal.dim != n or not transversal.intersection(ideal).is_trivial():
        raise ValueError("Error, the transversal is not a complement of the ideal")

    T = transversal.embedding()
    q = transversal.dim
    if n == 0:
        P = field.zeros((0, 0))
    else:
        M = np.hstack([ideal.embedding(), T])
        P = LinAlg.inverse(M, field)[ideal.dim:, :]

    twist = field.dot(field.dot(P, algebra.twist), T)
    qalg = HlyAlgebra(field, q,
                      binary=transform_tensor(algebra.binary, T, P, field),
                      ternary=transform_tensor(algebra.ternary, T, P, field),
                      twist=twist,
                      basis_names=["q{}".format(i + 1) for i in range(q)],
                      label=label or "{} / ideal of dim {}".format(algebra.label, ideal.dim))

    if algebra.is_regular() and not qalg.is_regular():
        raise TwistNotInvertibleOnQuotient(
            "Error, the quotient twist is singular although the parent twist is invertible")

    return QuotientPresentation(qalg, ideal, T, P)


def _merged_names(a_names, b_names):
    if set(a_names) & set(b_names):
        return ["a." + x for x in a_names] + ["b." + x for x in b_names]
    return list(a_names) + list(b_names)


def direct_sum(A, B, label=""):
    """
    Direct sum with componentwise brackets, no cross terms and block diagonal twist.
    The first dim(A) coordinates belong to A.
    """
    if A.field != B.field:
        raise ValueError("Error, direct sum of algebras over {} and {}".format(A.field.name, B.field.name))
    field = A.field
    a, b = A.dim, B.dim
    n = a + b

    binary = field.zeros((n, n, n))
    binary[:a, :a, :a] = A.binary
    binary[a:, a:, a:] = B.binary
    ternary = field.zeros((n, n, n, n))
    ternary[:a, :a, :a, :a] = A.ternary
    ternary[a:, a:, a:, a:] = B.ternary
    twist = field.zeros((n, n))
    twist[:a, :a] = A.twist
    twist[a:, a:] = B.twist

    return HlyAlgebra(field, n, binary=binary, ternary=ternary, twist=twist,
                      basis_names=_merged_names(A.basis_names, B.basis_names),
                      label=label or "{} (+) {}".format(A.label, B.label))


def restricted_twist(algebra, subspace):
    """The twist restricted to an invariant subspace, in its RREF coordinates."""
    field = algebra.field
    if not subspace.contains(subspace.image(algebra.twist)):
        raise ValueError("Error, the subspace is not invariant under the twist")
    return field.dot(field.dot(subspace.selector(), algebra.twist), subspace.embedding())


# ---- factor sets ----
class FactorSet(object):
    def __init__(self, field, q, z, pi2=None, pi3=None, center_embedding=None):
        """
        FACTOR SET
        ==========

        Center valued tables indexed by the quotient basis.

        Parameters
        ----------
            field : Fields.Field
            q : int
                Dimension of the quotient A/Z(A).
            z : int
                Dimension of the center.
            pi2 : ndarray(shape=(q, q, z))
            pi3 : ndarray(shape=(q, q, q, z))
            center_embedding : ndarray(shape=(n, z)), optional
                Center coordinates -> carrier, when tied to a concrete algebra.
        """
        self.field = field
        self.q = int(q)
        self.z = int(z)
        self.pi2 = field.zeros((q, q, z)) if pi2 is None else field.asarray(pi2, shape=(q, q, z))
        self.pi3 = field.zeros((q, q, q, z)) if pi3 is None else field.asarray(pi3, shape=(q, q, q, z))
        self.center_embedding = center_embedding

    def replace(self, pi2=None, pi3=None):
        return FactorSet(self.field, self.q, self.z,
                         self.pi2 if pi2 is None else pi2,
                         self.pi3 if pi3 is None else pi3,
                         self.center_embedding)

    def to_dict(self):
        return {"q": self.q, "z": self.z,
                "pi2": Methods.tensor_to_entries(self.pi2, self.field),
                "pi3": Methods.tensor_to_entries(self.pi3, self.field)}

    @staticmethod
    def from_dict(doc, field):
        if not isinstance(doc, dict):
            raise DocumentError("Error, the factor set document must be a JSON object")
        for key in ("q", "z"):
            val = doc.get(key)
            if isinstance(val, bool) or not isinstance(val, int) or val < 0:
                raise DocumentError("Error, field '{}' must be a non negative integer".format(key))
        q, z = doc["q"], doc["z"]
        pi2 = Methods.entries_to_tensor(doc.get("pi2"), 2, q, z, field, "pi2")
        pi3 = Methods.entries_to_tensor(doc.get("pi3"), 3, q, z, field, "pi3")
        return FactorSet(field, q, z, pi2, pi3)

    def __repr__(self):
        return "FactorSet(q={}, z={}, field={})".format(self.q, self.z, self.field.name)


class SectionMap(object):
    def __init__(self, presentation, lift):
        """
        The section A/Z(A) -> A. lift is an n x q matrix whose columns span a
        twist invariant complement of the center, so it commutes with the twists.
        """
        self.presentation = presentation
        self.lift = lift

    def __call__(self, xbar):
        return self.presentation.quotient.field.dot(self.lift, xbar)


def extract_factor_set(algebra):
    """
    EXTRACT THE FACTOR SET
    ======================

    Build a section R from a twist invariant complement of Z(A) and fill

        pi2(x, y)    = [R x, R y] - R [x, y]
        pi3(x, y, z) = [R x, R y, R z] - R [x, y, z]

    on quotient basis tuples, in center coordinates.

    Results
    -------
        factor_set : FactorSet
        section : SectionMap

    Raises NoInvariantComplement when no section commuting with the twists exists.
    """
    field = algebra.field
    n = algebra.dim
    Z = Subobjects.center(algebra)
    full = LinAlg.Subspace.full(field, n)

    if not Z.contains(Z.image(algebra.twist)):
        raise NoInvariantComplement("Error, the center is not invariant under the twist", step="center")

    V = LinAlg.invariant_complement(Z, full, algebra.twist)
    if V is None:
        K, rhs, fixed = LinAlg.sylvester_system(Z, full, algebra.twist)
        raise NoInvariantComplement(
            "Error, no twist invariant complement of the center: the Sylvester system ({}x{}) is inconsistent".format(
                K.shape[0], K.shape[1]), step="section", system=(K, rhs), field=field)

    pres = quotient(algebra, Z, transversal=V, label="{} / Z".format(algebra.label))
    R = pres.transversal
    E = Z.embedding()
    sel = Z.selector()
    ident = field.eye(n)

    tables = []
    for tensor, qtensor in ((algebra.binary, pres.quotient.binary), (algebra.ternary, pres.quotient.ternary)):
        lifted = transform_tensor(tensor, R, ident, field)
        correction = apply_output(R, qtensor, field)
        difference = field.reduce(lifted - correction)
        values = apply_output(sel, difference, field)
        if not field.equal(apply_output(E, values, field), difference):
            raise ValueOutsideCenter("Error, a factor set value falls outside the center")
        tables.append(values)

    fs = FactorSet(field, pres.quotient.dim, Z.dim, tables[0], tables[1], center_embedding=E)
    return fs, SectionMap(pres, R)


class FactorSetReport(object):
    def __init__(self, field, statuses, extension=None):
        self.field = field
        self.statuses = statuses
        self.extension = extension

    def __getitem__(self, name):
        return self.statuses[name]

    @property
    def passed(self):
        return all(s.passed for s in self.statuses.values())

    def failing(self):
        return sorted(name for name, s in self.statuses.items() if not s.passed)

    def to_dict(self):
        return {"pass": self.passed,
                "checks": [self.statuses[name].to_dict(self.field) for name in sorted(self.statuses)]}


def validate_factor_set(pi, z_twist, qbar, cap=Axioms.DEFAULT_FAILURE_CAP):
    """
    VALIDATE A FACTOR SET
    =====================

    Literal checks on basis tuples:

        F1 : pi2, pi3 skew and alternating in the first two slots
        F2 : cyc pi2([x,y], a z) + cyc pi3(x,y,z) = 0
        F3 : cyc_{x,y,z} pi3([x,y], a z, a t) = 0
        multiplicativity : pi(a x, a y, ...) = a_Z pi(x, y, ...)

    F4 and F5 are checked operationally: Omega is built and must satisfy
    axioms (4) and (5).

    Parameters
    ----------
        pi : FactorSet
        z_twist : ndarray(shape=(z, z))
            The twist restricted to the center.
        qbar : HlyAlgebra
            The quotient algebra indexing the factor set.
    """
    field = pi.field
    a = qbar.twist
    z_twist = field.asarray(z_twist, shape=(pi.z, pi.z))
    statuses = {}

    for status in Axioms.skew_statuses(pi.pi2, "f1_skew_binary", "f1_alternating_binary", field, cap) + \
            Axioms.skew_statuses(pi.pi3, "f1_skew_ternary", "f1_alternating_ternary", field, cap):
        statuses[status.name] = status

    f2 = field.reduce(cyclic_sum(compose(twist_slots(pi.pi2, [1], a, field), 0, qbar.binary, field), field)
                      + cyclic_sum(pi.pi3, field))
    statuses["f2"] = Axioms.compare_tensors("f2", f2, field.zeros(f2.shape), field, cap)

    f3 = cyclic_sum(compose(twist_slots(pi.pi3, [1, 2], a, field), 0, qbar.binary, field), field)
    statuses["f3"] = Axioms.compare_tensors("f3", f3, field.zeros(f3.shape), field, cap)

    statuses["multiplicative_binary"] = Axioms.compare_tensors(
        "multiplicative_binary", twist_slots(pi.pi2, [0, 1], a, field), apply_output(z_twist, pi.pi2, field), field, cap)
    statuses["multiplicative_ternary"] = Axioms.compare_tensors(
        "multiplicative_ternary", twist_slots(pi.pi3, [0, 1, 2], a, field), apply_output(z_twist, pi.pi3, field), field, cap)

    extension = None
    try:
        extension = central_extension(z_twist, qbar, pi)
    except (MalformedAlgebra, TwistNotInvertible) as err:
        for name in ("f4_operational", "f5_operational"):
            statuses[name] = Axioms.AxiomStatus(name, 1, [((), None, None)], detail=str(err))
    else:
        report = extension.axiom_report
        for name, axiom in (("f4_operational", "hlya4"), ("f5_operational", "hlya5")):
            src = report[axiom]
            statuses[name] = Axioms.AxiomStatus(name, src.n_failures, src.failures, detail="axiom {} of Omega".format(axiom))

    return FactorSetReport(field, statuses, extension)


class CentralExtension(HlyAlgebra):
    def __init__(self, field, z, base, factor_set, binary, ternary, twist):
        """
        The algebra Omega on K^z (+) K^q built from a factor set, with its
        axiom report and the comparison of its center with {(a, 0)}.
        """
        self.center_dim = z
        self.base = base
        self.factor_set = factor_set
        self.axiom_report = None
        self.computed_center = None
        self.expected_center = None
        self.center_agrees = None
        names = ["c{}".format(i + 1) for i in range(z)] + ["q{}".format(i + 1) for i in range(base.dim)]
        super(CentralExtension, self).__init__(field, z + base.dim, binary=binary, ternary=ternary,
                                               twist=twist, basis_names=names,
                                               label="Omega({})".format(base.label))

    def center_block(self):
        """Z_Omega = {(a, 0)}."""
        return LinAlg.Subspace(self.field.eye(self.dim)[:self.center_dim], self.field, self.dim)


def central_extension(z_twist, qbar, pi):
    """
    CENTRAL EXTENSION
    =================

        [(a1, x), (a2, y)]          = (pi2(x, y), [x, y])
        [(a1, x), (a2, y), (a3, w)] = (pi3(x, y, w), [x, y, w])
        alpha(a, x)                 = (a_Z a, abar x)

    Parameters
    ----------
        z_twist : ndarray(shape=(z, z))
            Invertible twist on the center coordinates.
        qbar : HlyAlgebra
            The base quotient algebra.
        pi : FactorSet

    Results
    -------
        omega : CentralExtension
            With axiom_report, computed_center and center_agrees filled.
    """
    field = pi.field
    z, q = pi.z, pi.q
    if qbar.field != field:
        raise ValueError("Error, the factor set and the quotient live over different fields")
    if qbar.dim != q:
        raise ValueError("Error, the factor set is indexed by a {}-dim quotient, got {}".format(q, qbar.dim))
    z_twist = field.asarray(z_twist)
    if z_twist.shape != (z, z):
        raise ValueError("Error, the center twist must be {0}x{0}, got {1}".format(z, z_twist.shape))
    if not LinAlg.is_invertible(z_twist, field):
        raise TwistNotInvertible("Error, the twist on the center is not invertible")

    n = z + q
    binary = field.zeros((n, n, n))
    binary[z:, z:, :z] = pi.pi2
    binary[z:, z:, z:] = qbar.binary
    ternary = field.zeros((n, n, n, n))
    ternary[z:, z:, z:, :z] = pi.pi3
    ternary[z:, z:, z:, z:] = qbar.ternary
    twist = field.zeros((n, n))
    twist[:z, :z] = z_twist
    twist[z:, z:] = qbar.twist

    omega = CentralExtension(field, z, qbar, pi, binary, ternary, twist)
    omega.axiom_report = Axioms.check_axioms(omega)
    omega.computed_center = Subobjects.center(omega)
    omega.expected_center = omega.center_block()
    omega.center_agrees = omega.computed_center == omega.expected_center
    if not omega.center_agrees:
        warnings.warn("The center of Omega has dimension {} while {{(a, 0)}} has dimension {}".format(
            omega.computed_center.dim, z))
    return omega


def reconstruct_iso(algebra, pi, sect):
    """
    RECONSTRUCTION ISOMORPHISM
    ==========================

    phi(a, x) = E a + R x as a map Omega -> A, verified to be an isomorphism.

    Results
    -------
        phi : Morphisms.Morphism
            Verified; phi.report holds the check outcomes.
        omega : CentralExtension
    """
    field = algebra.field
    E = pi.center_embedding
    if E is None:
        raise ValueError("Error, the factor set is not tied to a concrete algebra")
    Z = LinAlg.Subspace.from_columns(E, field)
    omega = central_extension(restricted_twist(algebra, Z), sect.presentation.quotient, pi)

    phi = Morphisms.Morphism(np.hstack([E, sect.lift]), field, label="phi")
    report = Morphisms.is_homomorphism(phi, omega, algebra)
    if not report.is_isomorphism:
        failure = report.first_failure()
        raise ReconstructionFailed("Error, phi is not an isomorphism: {} check fails at {}".format(*failure), failure)
    return phi, omega


class RoundtripResult(object):
    def __init__(self, factor_set, section, omega, phi):
        self.factor_set = factor_set
        self.section = section
        self.omega = omega
        self.phi = phi

    @property
    def verified(self):
        return bool(self.phi.is_isomorphism)

    def to_dict(self):
        field = self.factor_set.field
        return {"factor_set": self.factor_set.to_dict(),
                "lift": field.array_to_json(self.section.lift.T),
                "omega_axioms": self.omega.axiom_report.to_dict(),
                "omega_center": self.omega.computed_center.to_json(),
                "omega_center_agrees": self.omega.center_agrees,
                "phi": self.phi.to_dict(),
                "verified": self.verified}


def factor_set_roundtrip(algebra):
    """extract -> extend -> reconstruct."""
    fs, sect = extract_factor_set(algebra)
    phi, omega = reconstruct_iso(algebra, fs, sect)
    return RoundtripResult(fs, sect, omega, phi)


def pull_back_factor_set(omega, theta, beta):
    """
    PULL BACK A FACTOR SET
    ======================

        pi2(x, y)    = beta^-1 omega2(theta x, theta y)
        pi3(x, y, z) = beta^-1 omega3(theta x, theta y, theta z)

    Parameters
    ----------
        omega : FactorSet
        theta : ndarray(shape=(q, q))
            Invertible map between the quotients.
        beta : ndarray(shape=(z, z))
            Invertible map between the centers (center coordinates).
    """
    field = omega.field
    theta = field.asarray(theta)
    beta = field.asarray(beta)
    if theta.shape != (omega.q, omega.q) or not LinAlg.is_invertible(theta, field):
        raise LinAlg.Singular("Error, theta must be an invertible {0}x{0} matrix".format(omega.q))
    beta_inv = LinAlg.inverse(beta, field) if beta.shape == (omega.z, omega.z) else None
    if beta_inv is None:
        raise LinAlg.Singular("Error, beta must be an invertible {0}x{0} matrix".format(omega.z))

    pi2 = apply_output(beta_inv, twist_slots(omega.pi2, [0, 1], theta, field), field)
    pi3 = apply_output(beta_inv, twist_slots(omega.pi3, [0, 1, 2], theta, field), field)
    return FactorSet(field, omega.q, omega.z, pi2, pi3)


def compat_failures(xi, eta, nu, pi, omega, qbar):
    """
    Basis tuples where

        xi pi2(x, y) + nu [x, y]       = omega2(eta x, eta y)
        xi pi3(x, y, z) + nu [x, y, z] = omega3(eta x, eta y, eta z)

    fail, as (bracket, index) pairs in row-major order.
    """
    field = pi.field
    out = []
    for name, ptab, otab, qtab, arity in (("binary", pi.pi2, omega.pi2, qbar.binary, 2),
                                          ("ternary", pi.pi3, omega.pi3, qbar.ternary, 3)):
        lhs = field.reduce(apply_output(xi, ptab, field) + apply_output(nu, qtab, field))
        rhs = twist_slots(otab, range(arity), eta, field)
        out += [(name, idx) for idx in Methods.failing_indices(field.reduce(lhs - rhs), field)]
    return out


def twisted_iso_from_compat(xi, eta, nu, pi, omega, qbar, z_twist):
    """
    ISOMORPHISM FROM THE COMPATIBILITY EQUATIONS
    ============================================

    lambda(a, x) = (xi a + nu x, eta x) between the extensions of pi and omega.

    Results
    -------
        lam : Morphisms.Morphism or None
            The verified isomorphism Omega(pi) -> Omega(omega).
        failure : tuple or None
            The first failing (bracket, index) when lam is None.
    """
    field = pi.field
    z, q = pi.z, pi.q
    xi = field.asarray(xi, shape=(z, z))
    eta = field.asarray(eta, shape=(q, q))
    nu = field.asarray(nu, shape=(z, q))
    z_twist = field.asarray(z_twist, shape=(z, z))
    if not LinAlg.is_invertible(xi, field):
        raise LinAlg.Singular("Error, xi is singular")
    if not LinAlg.is_invertible(eta, field):
        raise LinAlg.Singular("Error, eta is singular")
    if not field.equal(field.dot(nu, qbar.twist), field.dot(z_twist, nu)):
        raise ValueError("Error, nu does not commute with the twists")

    failures = compat_failures(xi, eta, nu, pi, omega, qbar)
    if failures:
        return None, failures[0]

    lam = field.zeros((z + q, z + q))
    lam[:z, :z] = xi
    lam[:z, z:] = nu
    lam[z:, z:] = eta
    lam = Morphisms.Morphism(lam, field, label="lambda")

    source = central_extension(z_twist, qbar, pi)
    target = central_extension(z_twist, qbar, omega)
    report = Morphisms.is_homomorphism(lam, source, target)
    if not report.is_isomorphism:
        return None, report.first_failure()
    return lam, None


def induced_automorphisms(lam, z, q, field):
    """
    Split a map between two extensions on the same (center, quotient) that
    sends {(a, 0)} onto {(a, 0)}.

    Results
    -------
        xi : ndarray(shape=(z, z))
            Restriction to the center.
        mu : ndarray(shape=(z, q))
            The off-diagonal block.
        eta : ndarray(shape=(q, q))
            The induced map on the quotient.
    """
    L = lam.matrix if isinstance(lam, Morphisms.Morphism) else field.asarray(lam)
    if L.shape != (z + q, z + q):
        raise ValueError("Error, expected a {0}x{0} matrix".format(z + q))
    if not field.is_zero(L[z:, :z]):
        raise ValueError("Error, the map does not send the center block into itself")
    xi = np.array(L[:z, :z])
    if not LinAlg.is_invertible(xi, field):
        raise ValueError("Error, the map does not send the center block onto itself")
    return xi, np.array(L[:z, z:]), np.array(L[z:, z:])


def extension_quotient_check(omega):
    """
    Omega / Z_Omega with Z_Omega = {(a, 0)}: builds the quotient and verifies that
    x -> (0, x) + Z_Omega is an isomorphism from the base quotient onto it.

    Results
    -------
        phi : Morphisms.Morphism
            Verified map base -> Omega / Z_Omega.
        presentation : QuotientPresentation
        multiplicative : bool
            Whether Omega / Z_Omega passes both multiplicativity checks.
    """
    field = omega.field
    z, q = omega.center_dim, omega.base.dim
    pres = quotient(omega, omega.center_block(), label="Omega / Z_Omega")
    inclusion = field.zeros((z + q, q))
    inclusion[z:, :] = field.eye(q)
    phi = Morphisms.Morphism(field.dot(pres.projection, inclusion), field, label="quotient identification")
    Morphisms.is_homomorphism(phi, omega.base, pres.quotient)
    multiplicative = Axioms.check_axioms(pres.quotient).is_multiplicative
    return phi, pres, multiplicative
