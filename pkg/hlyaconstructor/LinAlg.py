# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Exact linear algebra over Q and F_p.

Everything here works on numpy object arrays whose entries belong to a
hlyaconstructor.Fields.Field. Vectors are 1D arrays, matrices act on column
vectors, and subspaces are stored as canonical RREF row bases.
"""

import itertools

import numpy as np

import hlyaconstructor.Fields as Fields


__all__ = ["Singular", "rref", "rank", "kernel_basis", "solve", "inverse",
           "is_invertible", "Subspace", "complement", "sylvester_system",
           "invariant_complement", "kron", "enumerate_invertible"]


class Singular(ValueError):
    """Raised when inverting a matrix with rank < n."""
    pass


def _as_matrix(matrix, field, ncols=None):
    m = np.array(matrix, dtype=object)
    if m.size == 0 and ncols is not None:
        m = m.reshape((-1, ncols))
    if m.ndim != 2:
        raise ValueError("Error, expected a 2D matrix, got shape {}".format(m.shape))
    return field.asarray(m)


def rref(matrix, field):
    """
    REDUCED ROW ECHELON FORM
    ========================

    Gauss-Jordan elimination with the first nonzero entry of each column
    as pivot. The output is unique for a given row space.

    Parameters
    ----------
        matrix : ndarray(shape=(r, c), dtype=object)
            The matrix to reduce.
        field : Fields.Field
            The scalar field.

    Results
    -------
        R : ndarray(shape=(r, c), dtype=object)
            The reduced matrix (zero rows at the bottom).
        rank : int
            The number of nonzero rows.
        pivots : list of int
            The pivot column of each nonzero row, strictly increasing.
    """
    R = _as_matrix(matrix, field)
    nrows, ncols = R.shape

    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break

        candidates = [r for r in range(row, nrows) if R[r, col] != 0]
        if not candidates:
            continue

        piv = candidates[0]
        if piv != row:
            R[[row, piv], :] = R[[piv, row], :]

        R[row, :] = field.reduce(R[row, :] * field.inv(R[row, col]))
        for r in range(nrows):
            if r != row and R[r, col] != 0:
                R[r, :] = field.reduce(R[r, :] - R[r, col] * R[row, :])

        pivots.append(col)
        row += 1

    return R, row, pivots


def rank(matrix, field):
    return rref(matrix, field)[1]


def kernel_basis(matrix, field):
    """
    Null space {x : matrix . x = 0} as a Subspace of dimension cols - rank.
    """
    R, rk, pivots = rref(matrix, field)
    ncols = R.shape[1]

    vectors = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = field.zeros(ncols)
        v[free] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i, free])
        vectors.append(v)

    return Subspace(vectors, field, ncols)


def solve(matrix, rhs, field):
    """
    SOLVE A LINEAR SYSTEM
    =====================

    Find one x with matrix . x = rhs. Free variables are set to zero.

    Parameters
    ----------
        matrix : ndarray(shape=(r, c))
        rhs : ndarray(shape=(r,)) or ndarray(shape=(r, k))
        field : Fields.Field

    Results
    -------
        x : ndarray(shape=(c,)) or ndarray(shape=(c, k)), or None
            None when the system is inconsistent.
    """
    m = _as_matrix(matrix, field)
    b = field.asarray(rhs)
    is_vector = b.ndim == 1
    if is_vector:
        b = b.reshape((-1, 1))
    if b.ndim != 2 or b.shape[0] != m.shape[0]:
        raise ValueError("Error, the right hand side has {} rows, the matrix has {}".format(
            b.shape[0] if b.ndim else 0, m.shape[0]))

    ncols = m.shape[1]
    R, rk, pivots = rref(np.hstack([m, b]), field)
    if any(pc >= ncols for pc in pivots):
        return None

    x = field.zeros((ncols, b.shape[1]))
    for i, pc in enumerate(pivots):
        x[pc, :] = R[i, ncols:]

    if is_vector:
        return x[:, 0]
    return x


def inverse(matrix, field):
    """
    Exact inverse of a square matrix, raises Singular when rank < n.
    """
    m = _as_matrix(matrix, field)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("Error, cannot invert a non square {} matrix".format(m.shape))

    R, rk, pivots = rref(np.hstack([m, field.eye(n)]), field)
    left_rank = len([pc for pc in pivots if pc < n])
    if left_rank < n:
        raise Singular("Error, the matrix is singular (rank {} < {})".format(left_rank, n))
    return R[:, n:]


def is_invertible(matrix, field):
    m = np.asarray(matrix, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return rank(m, field) == m.shape[0]


def kron(a, b, field):
    """Kronecker product of two object matrices."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    outer = np.multiply.outer(a, b)
    shape = (a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    return field.reduce(outer.transpose(0, 2, 1, 3).reshape(shape))


class Subspace(object):
    def __init__(self, vectors, field, ambient_dim=None):
        """
        SUBSPACE
        ========

        A subspace of K^n stored by its canonical RREF basis, so that equal
        subspaces have identical representations.

        Parameters
        ----------
            vectors : list of vectors or 2D array
                A spanning set (one vector per row), not necessarily independent.
            field : Fields.Field
                The scalar field.
            ambient_dim : int
                The dimension n of the carrier. Needed when vectors is empty.
        """
        rows = np.array([np.asarray(v, dtype=object) for v in vectors], dtype=object) \
            if isinstance(vectors, list) else np.array(vectors, dtype=object)

        if ambient_dim is None:
            if rows.ndim != 2:
                raise ValueError("Error, cannot infer the ambient dimension of an empty spanning set")
            ambient_dim = rows.shape[1]

        if rows.size == 0:
            rows = rows.reshape((0, ambient_dim))
        if rows.ndim != 2 or rows.shape[1] != ambient_dim:
            raise ValueError("Error, spanning vectors of shape {} in a space of dimension {}".format(
                rows.shape, ambient_dim))

        R, rk, pivots = rref(rows, field)
        self.field = field
        self.ambient_dim = int(ambient_dim)
        self.basis = R[:rk, :]
        self.basis.setflags(write=False)
        self.pivots = tuple(pivots)
        self.dim = rk

    @classmethod
    def full(cls, field, n):
        return cls(field.eye(n), field, n)

    @classmethod
    def zero(cls, field, n):
        return cls([], field, n)

    @classmethod
    def from_columns(cls, columns, field):
        columns = np.asarray(columns, dtype=object)
        return cls(columns.T, field, columns.shape[0])

    def _check_compatible(self, other):
        if not isinstance(other, Subspace):
            raise TypeError("Error, expected a Subspace, got {}".format(type(other).__name__))
        if other.field != self.field or other.ambient_dim != self.ambient_dim:
            raise ValueError("Error, ambient mismatch: {} in {} vs {} in {}".format(
                self.ambient_dim, self.field.name, other.ambient_dim, other.field.name))

    def is_trivial(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient_dim

    def __add__(self, other):
        self._check_compatible(other)
        return Subspace(np.vstack([self.basis, other.basis]), self.field, self.ambient_dim)

    def sum(self, other):
        return self + other

    def intersection(self, other):
        """
        The intersection is read from the kernel of the stacked system
        s . self.basis - t . other.basis = 0.
        """
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)

        stacked = np.vstack([self.basis, self.field.reduce(-other.basis)]).T
        kernel = kernel_basis(stacked, self.field)
        vectors = [self.field.dot(s[:self.dim], self.basis) for s in kernel.basis]
        return Subspace(vectors, self.field, self.ambient_dim)

    def coordinates(self, vector):
        """
        Coordinates of vector in the RREF basis, or None if it does not belong to the subspace.
        """
        v = self.field.asarray(vector)
        if v.shape != (self.ambient_dim,):
            raise ValueError("Error, vector of shape {} in a space of dimension {}".format(
                v.shape, self.ambient_dim))
        if self.dim == 0:
            if self.field.is_zero(v):
                return self.field.zeros(0)
            return None
        coords = v[list(self.pivots)]
        if self.field.equal(self.field.dot(coords, self.basis), v):
            return coords
        return None

    def contains_vector(self, vector):
        return self.coordinates(vector) is not None

    def contains(self, other):
        self._check_compatible(other)
        return all(self.contains_vector(row) for row in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return False
        if other.field != self.field or other.ambient_dim != self.ambient_dim:
            return False
        return self.pivots == other.pivots and self.field.equal(self.basis, other.basis)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, tuple(str(x) for x in self.basis.ravel())))

    def image(self, matrix):
        """Span of matrix . v over the basis vectors v."""
        matrix = np.asarray(matrix, dtype=object)
        if self.dim == 0:
            return Subspace.zero(self.field, matrix.shape[0])
        return Subspace(self.field.dot(self.basis, matrix.T), self.field, matrix.shape[0])

    def embedding(self):
        """The n x dim matrix whose columns are the basis vectors."""
        return np.array(self.basis.T, dtype=object)

    def selector(self):
        """
        The dim x n matrix reading the pivot coordinates.
        It is a left inverse of embedding() on vectors of the subspace.
        """
        sel = self.field.zeros((self.dim, self.ambient_dim))
        for i, pc in enumerate(self.pivots):
            sel[i, pc] = self.field.one
        return sel

    def to_json(self):
        return self.field.array_to_json(self.basis)

    def __repr__(self):
        return "Subspace(dim={}, ambient={}, field={}, basis={})".format(
            self.dim, self.ambient_dim, self.field.name, self.to_json())


def complement(w, u):
    """
    COMPLEMENT
    ==========

    Deterministic complement v of w inside u: the RREF basis rows of u are
    scanned in order and kept whenever they leave the current span.

    Parameters
    ----------
        w, u : Subspace
            w must be contained in u.

    Results
    -------
        v : Subspace
            u = w + v and w, v intersect trivially.
    """
    if not u.contains(w):
        raise ValueError("Error, cannot complement: the subspace is not contained in u")

    chosen = []
    span = w
    for row in u.basis:
        if not span.contains_vector(row):
            chosen.append(row)
            span = span + Subspace([row], u.field, u.ambient_dim)
    return Subspace(chosen, u.field, u.ambient_dim)


def _block_coordinates(basis_rows, images, field):
    """Coordinates (one row per image) of the images in the given independent rows."""
    if len(images) == 0:
        return field.zeros((0, basis_rows.shape[0]))
    coords = solve(basis_rows.T, np.asarray(images, dtype=object).T, field)
    if coords is None:
        raise ValueError("Error, the operator does not preserve the subspace")
    return coords.T


def sylvester_system(w, u, t):
    """
    SYLVESTER SYSTEM FOR INVARIANT COMPLEMENTS
    ==========================================

    Complements of w in u are the graphs span{c_i + phi(c_i)} of the linear maps
    phi from the fixed complement C = complement(w, u) into w. Writing t in the
    block coordinates of u = w + C,

        t(c) = T_cw . w + T_cc . c ,   t(w) = T_ww . w

    the graph of phi (row coordinates Phi, m x k) is t-invariant iff

        T_cc Phi - Phi T_ww = T_cw .

    The row-major vectorization gives the linear system returned here.

    Results
    -------
        K : ndarray(shape=(m k, m k))
        rhs : ndarray(shape=(m k,))
        fixed : Subspace
            The complement C.
    """
    field = u.field
    t = np.asarray(t, dtype=object)
    fixed = complement(w, u)
    k = w.dim
    m = fixed.dim

    combined = np.vstack([w.basis, fixed.basis])
    c_images = field.dot(fixed.basis, t.T) if m else field.zeros((0, u.ambient_dim))
    w_images = field.dot(w.basis, t.T) if k else field.zeros((0, u.ambient_dim))

    c_coords = _block_coordinates(combined, c_images, field)
    t_cw = c_coords[:, :k]
    t_cc = c_coords[:, k:]
    t_ww = _block_coordinates(w.basis, w_images, field)

    K = field.reduce(kron(t_cc, field.eye(k), field) - kron(field.eye(m), t_ww.T, field))
    rhs = t_cw.reshape(m * k)
    return K, rhs, fixed


def invariant_complement(w, u, t):
    """
    T-INVARIANT COMPLEMENT
    ======================

    Find v with u = w + v (direct) and t(v) contained in v, or report that none exists.

    Parameters
    ----------
        w, u : Subspace
            w contained in u, both invariant under t.
        t : ndarray(shape=(n, n))
            The operator, acting on column vectors.

    Results
    -------
        v : Subspace or None
            None when the Sylvester system is inconsistent.
    """
    field = u.field
    t = np.asarray(t, dtype=object)
    if not u.contains(w):
        raise ValueError("Error, invariant complement: w is not contained in u")
    if not u.contains(u.image(t)):
        raise ValueError("Error, invariant complement: the operator does not preserve u")
    if not w.contains(w.image(t)):
        raise ValueError("Error, invariant complement: the operator does not preserve w")

    if w.dim == 0:
        return u
    if w.dim == u.dim:
        return Subspace.zero(field, u.ambient_dim)

    K, rhs, fixed = sylvester_system(w, u, t)
    phi = solve(K, rhs, field)
    if phi is None:
        return None

    phi = phi.reshape((fixed.dim, w.dim))
    graph = field.reduce(fixed.basis + field.dot(phi, w.basis))
    return Subspace(graph, field, u.ambient_dim)


def enumerate_invertible(field, n, bound=2):
    """
    Invertible matrices in lexicographic order of their row-major entries.

    Over F_p this is the whole GL(n, p). Over Q the entries range in [-bound, bound].
    """
    values = field.elements() if field.p is not None else list(range(-bound, bound + 1))
    values = [field.coerce(v) for v in values]
    for entries in itertools.product(values, repeat=n * n):
        mat = np.array(entries, dtype=object).reshape((n, n))
        if rank(mat, field) == n:
            yield mat
