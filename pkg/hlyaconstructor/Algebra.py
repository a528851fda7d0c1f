# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
The Hom-Lie Yamaguti algebra value type.

An algebra is stored by structure constants:

    binary[i, j, :]     = [e_i, e_j]
    ternary[i, j, k, :] = [e_i, e_j, e_k]
    twist[:, j]         = alpha(e_j)

Skew-symmetry (and alternation) in the first two slots is enforced at
construction, all the other axioms are checked by hlyaconstructor.Axioms.
"""

import difflib
import json

import numpy as np

import hlyaconstructor.Fields as Fields
import hlyaconstructor.LinAlg as LinAlg
import hlyaconstructor.Methods as Methods
from hlyaconstructor.Methods import DocumentError


__all__ = ["HlyAlgebra", "MalformedAlgebra", "DocumentError", "load_json"]


class MalformedAlgebra(ValueError):
    """Structure constants violating skew-symmetry or with inconsistent shapes."""
    pass


class HlyAlgebra(object):
    def __init__(self, field, dim, binary=None, ternary=None, twist=None,
                 basis_names=None, label="", metadata=None, subspaces=None):
        """
        HOM-LIE YAMAGUTI ALGEBRA
        ========================

        Parameters
        ----------
            field : Fields.Field
                The scalar field.
            dim : int
                The dimension n of the carrier.
            binary : ndarray(shape=(n, n, n)), optional
                Binary structure constants, zero if omitted.
            ternary : ndarray(shape=(n, n, n, n)), optional
                Ternary structure constants, zero if omitted.
            twist : ndarray(shape=(n, n)), optional
                The twist matrix (acting on columns), identity if omitted.
            basis_names : list of str, optional
                Labels of the basis vectors, e1 ... en by default.
            label : str
                Free text identifying the algebra in reports.
            metadata : dict
                Carried through the document format unchanged.
            subspaces : dict
                Named spanning sets (lists of rows) carried by the document.
        """
        if isinstance(dim, bool) or not isinstance(dim, (int, np.integer)) or dim < 0:
            raise MalformedAlgebra("Error, the dimension must be a non negative integer, got {}".format(repr(dim)))
        n = int(dim)

        self.field = field
        self.dim = n
        self.binary = self._read_tensor(binary, (n, n, n), "binary")
        self.ternary = self._read_tensor(ternary, (n, n, n, n), "ternary")
        self.twist = self._read_tensor(field.eye(n) if twist is None else twist, (n, n), "twist")

        if basis_names is None:
            basis_names = ["e{}".format(i + 1) for i in range(n)]
        if len(basis_names) != n:
            raise MalformedAlgebra("Error, {} basis names for dimension {}".format(len(basis_names), n))
        self.basis_names = [str(x) for x in basis_names]
        self.label = label
        self.metadata = dict(metadata) if metadata else {}
        self.subspaces = dict(subspaces) if subspaces else {}

        self._check_skew()
        for arr in (self.binary, self.ternary, self.twist):
            arr.setflags(write=False)

        # Setup the attribute control
        self.__total_attributes__ = [item for item in self.__dict__.keys()]
        self.fixed_attributes = True

    def __setattr__(self, name, value):
        """
        Only the attributes created in __init__ can be set (with a suggestion of similar entries).
        """
        if "fixed_attributes" in self.__dict__:
            if name in self.__total_attributes__:
                super(HlyAlgebra, self).__setattr__(name, value)
            elif self.fixed_attributes:
                similar_objects = str(difflib.get_close_matches(name, self.__total_attributes__))
                ERROR_MSG = """
        Error, the attribute '{}' is not a member of '{}'.
        Suggested similar attributes: {} ?
        """.format(name, type(self).__name__, similar_objects)
                raise AttributeError(ERROR_MSG)
        else:
            super(HlyAlgebra, self).__setattr__(name, value)

    def _read_tensor(self, data, shape, name):
        if data is None:
            return self.field.zeros(shape)
        try:
            arr = self.field.asarray(data)
        except ValueError as err:
            raise MalformedAlgebra("Error, {} constants: {}".format(name, err))
        if arr.size == 0 and int(np.prod(shape)) == 0:
            arr = arr.reshape(shape)
        if arr.shape != shape:
            raise MalformedAlgebra("Error, {} has shape {}, expected {}".format(name, arr.shape, shape))
        return self.field.reduce(arr)

    def _check_skew(self):
        field = self.field
        for name, tensor in (("binary", self.binary), ("ternary", self.ternary)):
            rest = list(range(2, tensor.ndim))
            bad = Methods.failing_indices(tensor + np.transpose(tensor, [1, 0] + rest), field)
            if bad:
                raise MalformedAlgebra("Error, the {} bracket is not skew-symmetric at {}".format(name, bad[0]))
            for i in range(self.dim):
                if not field.is_zero(tensor[i, i]):
                    raise MalformedAlgebra("Error, the {} bracket does not vanish on the repeated index {}".format(name, i))

    # ---- evaluation ----
    def _vector(self, x):
        v = self.field.asarray(x)
        if v.shape != (self.dim,):
            raise ValueError("Error, expected a vector of length {}, got shape {}".format(self.dim, v.shape))
        return v

    def eval_binary(self, x, y):
        """Bilinear extension: sum_ij x_i y_j [e_i, e_j]."""
        x = self._vector(x)
        y = self._vector(y)
        partial = np.tensordot(x, self.binary, axes=([0], [0]))
        return self.field.reduce(np.tensordot(y, partial, axes=([0], [0])))

    def eval_ternary(self, x, y, z):
        """Trilinear extension: sum_ijk x_i y_j z_k [e_i, e_j, e_k]."""
        x = self._vector(x)
        y = self._vector(y)
        z = self._vector(z)
        partial = np.tensordot(x, self.ternary, axes=([0], [0]))
        partial = np.tensordot(y, partial, axes=([0], [0]))
        return self.field.reduce(np.tensordot(z, partial, axes=([0], [0])))

    def apply_twist(self, x):
        return self.field.dot(self.twist, self._vector(x))

    def twist_squared(self):
        """alpha^2, recomputed each time from the twist."""
        return self.field.dot(self.twist, self.twist)

    def basis_vector(self, i):
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def is_abelian(self):
        return self.field.is_zero(self.binary) and self.field.is_zero(self.ternary)

    def is_regular(self):
        return LinAlg.is_invertible(self.twist, self.field)

    def replace(self, **kwargs):
        """A copy with some constructor arguments replaced."""
        args = dict(field=self.field, dim=self.dim, binary=self.binary, ternary=self.ternary,
                    twist=self.twist, basis_names=self.basis_names, label=self.label,
                    metadata=self.metadata, subspaces=self.subspaces)
        args.update(kwargs)
        return HlyAlgebra(**args)

    # ---- change of basis ----
    def restrict(self, columns, basis_names=None, label=""):
        """
        RESTRICT TO A SUBALGEBRA
        ========================

        The algebra induced on the span of the given columns, in the coordinates
        of those columns.

        Parameters
        ----------
            columns : ndarray(shape=(n, m))
                Independent columns spanning a subalgebra (alpha-invariant and
                closed under both brackets).

        Results
        -------
            sub : HlyAlgebra
                The m-dimensional algebra. Raises ValueError if the span is not closed.
        """
        field = self.field
        if np.size(columns) == 0:
            return HlyAlgebra(field, 0, label=label)

        P = field.asarray(columns)
        if P.ndim != 2 or P.shape[0] != self.dim:
            raise ValueError("Error, expected columns of length {}, got shape {}".format(self.dim, P.shape))
        m = P.shape[1]
        span = LinAlg.Subspace.from_columns(P, field)
        if span.dim != m:
            raise ValueError("Error, the {} columns are not independent".format(m))

        # Coordinates w.r.t. the columns: inverse(selector . P) . selector
        sel = span.selector()
        coords = field.dot(LinAlg.inverse(field.dot(sel, P), field), sel)

        checks = [("binary", self.binary), ("ternary", self.ternary), ("twist", self.twist.T)]
        new_tensors = {}
        for name, tensor in checks:
            image = Methods.twist_slots(tensor, range(tensor.ndim - 1), P, field)
            reduced = Methods.apply_output(coords, image, field)
            rebuilt = Methods.apply_output(P, reduced, field)
            if not field.equal(rebuilt, image):
                raise ValueError("Error, the span is not closed under the {} operation".format(name))
            new_tensors[name] = reduced

        return HlyAlgebra(field, m, binary=new_tensors["binary"], ternary=new_tensors["ternary"],
                          twist=new_tensors["twist"].T, basis_names=basis_names, label=label)

    def transport(self, matrix, label=""):
        """
        The same algebra written in the basis given by the columns of an invertible matrix.
        The matrix is then an isomorphism from the result onto self.
        """
        P = self.field.asarray(matrix)
        if P.shape != (self.dim, self.dim) or not LinAlg.is_invertible(P, self.field):
            raise ValueError("Error, a change of basis needs an invertible {0}x{0} matrix".format(self.dim))
        return self.restrict(P, label=label)

    def __eq__(self, other):
        if not isinstance(other, HlyAlgebra):
            return False
        if other.field != self.field or other.dim != self.dim:
            return False
        field = self.field
        return field.equal(self.binary, other.binary) and field.equal(self.ternary, other.ternary) \
            and field.equal(self.twist, other.twist)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return "HlyAlgebra(label='{}', dim={}, field={})".format(self.label, self.dim, self.field.name)

    # ---- documents ----
    def to_dict(self):
        """The JSON algebra document."""
        field = self.field
        doc = {
            "header": {"field": field.to_json(), "dim": self.dim, "basis": list(self.basis_names)},
            "body": {
                "binary": Methods.tensor_to_entries(self.binary, field),
                "ternary": Methods.tensor_to_entries(self.ternary, field),
                "twist": field.array_to_json(self.twist),
            },
        }
        if self.label:
            doc["header"]["label"] = self.label
        if self.metadata:
            doc["metadata"] = self.metadata
        if self.subspaces:
            doc["subspaces"] = self.subspaces
        return doc

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    def save_json(self, filename):
        with open(filename, "w") as fp:
            fp.write(self.to_json())
            fp.write("\n")

    @staticmethod
    def from_dict(doc):
        """
        Build an algebra from a JSON document (already parsed).
        Errors name the offending field.
        """
        if not isinstance(doc, dict):
            raise DocumentError("Error, the algebra document must be a JSON object")
        header = doc.get("header")
        if not isinstance(header, dict):
            raise DocumentError("Error, field 'header' is missing or not an object")

        try:
            field = Fields.Field.from_json(header.get("field", None))
        except ValueError as err:
            raise DocumentError("Error, field 'header.field': {}".format(err))

        dim = header.get("dim")
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
            raise DocumentError("Error, field 'header.dim' must be a non negative integer, got {}".format(repr(dim)))
        names = header.get("basis")
        if names is not None and (not isinstance(names, list) or len(names) != dim):
            raise DocumentError("Error, field 'header.basis' must list {} names".format(dim))

        body = doc.get("body", {})
        if not isinstance(body, dict):
            raise DocumentError("Error, field 'body' must be an object")

        binary = Methods.entries_to_tensor(body.get("binary"), 2, dim, dim, field, "body.binary")
        ternary = Methods.entries_to_tensor(body.get("ternary"), 3, dim, dim, field, "body.ternary")

        twist = body.get("twist")
        if twist is not None:
            if not isinstance(twist, list) or len(twist) != dim or \
                    any(not isinstance(row, list) or len(row) != dim for row in twist):
                raise DocumentError("Error, field 'body.twist' must be a {0}x{0} list of rows".format(dim))
            try:
                twist = field.asarray([[field.scalar_from_json(v) for v in row] for row in twist], shape=(dim, dim))
            except ValueError as err:
                raise DocumentError("Error, field 'body.twist': {}".format(err))

        subspaces = doc.get("subspaces", {})
        if not isinstance(subspaces, dict):
            raise DocumentError("Error, field 'subspaces' must be an object")

        try:
            return HlyAlgebra(field, dim, binary=binary, ternary=ternary, twist=twist,
                              basis_names=names, label=header.get("label", ""),
                              metadata=doc.get("metadata"), subspaces=subspaces)
        except MalformedAlgebra as err:
            raise DocumentError("Error, field 'body': {}".format(err))

    def named_subspace(self, name):
        """A Subspace listed in the document's 'subspaces' section."""
        if name not in self.subspaces:
            raise ValueError("Error, no subspace '{}' in the document (known: {})".format(
                name, sorted(self.subspaces.keys())))
        rows = self.subspaces[name]
        return subspace_from_rows(rows, self.field, self.dim, "subspaces.{}".format(name))


def subspace_from_rows(rows, field, dim, where="subspace"):
    """Parse a JSON list of rows into a Subspace, with document diagnostics."""
    if not isinstance(rows, list) or any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise DocumentError("Error, field '{}' must be a list of rows of length {}".format(where, dim))
    try:
        vectors = [[field.scalar_from_json(v) for v in r] for r in rows]
    except ValueError as err:
        raise DocumentError("Error, field '{}': {}".format(where, err))
    return LinAlg.Subspace(field.asarray(vectors, shape=(len(vectors), dim)), field, dim)


def loads(text):
    """Parse a document string, JSON syntax errors report line and column."""
    try:
        doc = json.loads(text)
    except ValueError as err:
        lineno = getattr(err, "lineno", "?")
        colno = getattr(err, "colno", "?")
        msg = getattr(err, "msg", str(err))
        raise DocumentError("Error, line {} column {}: {}".format(lineno, colno, msg))
    return doc


def load_json(filename):
    """
    Load an algebra document from file.
    """
    with open(filename, "r") as fp:
        doc = loads(fp.read())
    return HlyAlgebra.from_dict(doc)
