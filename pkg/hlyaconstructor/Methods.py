# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Some general purpose methods on multilinear structure tensors.

A k-linear map K^n x ... x K^n -> K^m is stored as an object array of shape
(n, ..., n, m): the k input slots first, the output coordinates last.
A linear map given as a matrix M (acting on columns) is the 1-linear tensor M.T.
"""

import numpy as np


__all__ = ["DocumentError", "map_tensor", "compose", "twist_slots", "apply_output",
           "reorder", "cyclic_sum", "transform_tensor", "failing_indices",
           "tensor_to_entries", "entries_to_tensor"]


class DocumentError(ValueError):
    """Malformed JSON document, the message names the offending field."""
    pass


def map_tensor(matrix):
    """The 1-linear tensor of a matrix acting on column vectors."""
    return np.asarray(matrix, dtype=object).T


def compose(outer, slot, inner, field):
    """
    COMPOSE MULTILINEAR MAPS
    ========================

    Plug the output of inner into the input `slot` of outer.
    The inputs of the result are: the inputs of outer before slot, the inputs
    of inner, the inputs of outer after slot.

    Parameters
    ----------
        outer : ndarray
            Tensor with ko inputs.
        slot : int
            The input slot of outer that receives inner.
        inner : ndarray
            Tensor with ki inputs, its output dimension must match the slot.
        field : Fields.Field

    Results
    -------
        tensor : ndarray
            Tensor with ki + ko - 1 inputs.
    """
    ki = inner.ndim - 1
    ko = outer.ndim - 1
    assert 0 <= slot < ko, "slot {} out of range for a {}-linear map".format(slot, ko)

    result = np.tensordot(inner, outer, axes=([ki], [slot]))
    perm = list(range(ki, ki + slot)) + list(range(ki)) + \
        list(range(ki + slot, ki + ko - 1)) + [ki + ko - 1]
    return field.reduce(np.transpose(result, perm))


def twist_slots(tensor, slots, matrix, field):
    """Precompose the given input slots with the linear map `matrix`."""
    mt = map_tensor(matrix)
    for s in slots:
        tensor = compose(tensor, s, mt, field)
    return tensor


def apply_output(matrix, tensor, field):
    """Postcompose the tensor with the linear map `matrix`."""
    return compose(map_tensor(matrix), 0, tensor, field)


def reorder(tensor, order):
    """
    Reorder the input slots: result[i_0, ..., i_k] = tensor[j] with j[order[s]] = i_s.
    The output axis stays last.
    """
    return np.transpose(tensor, list(order) + [tensor.ndim - 1])


def cyclic_sum(tensor, field):
    """
    Cyclic sum over the first three inputs:
    S(x, y, z, ...) = T(x, y, z, ...) + T(y, z, x, ...) + T(z, x, y, ...)
    """
    rest = list(range(3, tensor.ndim))
    return field.reduce(tensor + np.transpose(tensor, [2, 0, 1] + rest)
                        + np.transpose(tensor, [1, 2, 0] + rest))


def transform_tensor(tensor, in_map, out_map, field):
    """
    Change the coordinates of a structure tensor.

    Parameters
    ----------
        tensor : ndarray
            Tensor on K^n with output in K^n.
        in_map : ndarray(shape=(n, n_new))
            Columns are the new input basis vectors in the old coordinates.
        out_map : ndarray(shape=(m_new, n))
            Reads the new output coordinates from the old ones.
    """
    arity = tensor.ndim - 1
    tensor = twist_slots(tensor, range(arity), in_map, field)
    return apply_output(out_map, tensor, field)


def failing_indices(difference, field):
    """Row-major list of the input index tuples where the output vector is nonzero."""
    if difference.size == 0:
        return []
    nonzero = np.asarray(field.reduce(difference) != 0, dtype=bool)
    mask = nonzero.any(axis=-1)
    return [tuple(int(i) for i in idx) for idx in np.argwhere(mask)]


_SLOT_NAMES = ["i", "j", "k", "l"]


def tensor_to_entries(tensor, field):
    """
    Sparse listing of a tensor skew in its first two slots.

    Only the pairs i < j are written. A mirrored entry (j, i) is written
    too when it is not the negative of (i, j), and so is a nonzero diagonal
    entry, so any table survives the roundtrip.
    """
    arity = tensor.ndim - 1
    entries = []
    for idx in np.ndindex(tensor.shape[:-1]):
        value = tensor[idx]
        i, j = idx[0], idx[1]
        if i < j:
            if field.is_zero(value):
                continue
        elif i == j:
            if field.is_zero(value):
                continue
        else:
            mirror = (j, i) + idx[2:]
            if field.is_zero(value + tensor[mirror]):
                continue
        entry = {_SLOT_NAMES[s]: int(idx[s]) for s in range(arity)}
        entry["value"] = field.array_to_json(value)
        entries.append(entry)
    return entries


def entries_to_tensor(entries, arity, in_dim, out_dim, field, where="body"):
    """
    Read a sparse listing back into a dense tensor.

    Listed entries are set as given; the mirror (j, i, ...) of a listed
    entry is set to its negative unless the mirror is listed too.
    Unlisted entries are zero.
    """
    tensor = field.zeros((in_dim,) * arity + (out_dim,))
    if entries is None:
        return tensor
    if not isinstance(entries, list):
        raise DocumentError("Error, field '{}' must be a list".format(where))

    listed = {}
    for n_entry, entry in enumerate(entries):
        path = "{}[{}]".format(where, n_entry)
        if not isinstance(entry, dict):
            raise DocumentError("Error, field '{}' must be an object".format(path))
        idx = []
        for s in range(arity):
            key = _SLOT_NAMES[s]
            if key not in entry:
                raise DocumentError("Error, field '{}.{}' is missing".format(path, key))
            val = entry[key]
            if isinstance(val, bool) or not isinstance(val, int) or not 0 <= val < in_dim:
                raise DocumentError("Error, field '{}.{}' = {} is not an index in [0, {})".format(
                    path, key, repr(val), in_dim))
            idx.append(val)
        idx = tuple(idx)
        if idx in listed:
            raise DocumentError("Error, field '{}' repeats the entry {}".format(path, idx))

        value = entry.get("value")
        if not isinstance(value, list) or len(value) != out_dim:
            raise DocumentError("Error, field '{}.value' must list {} coefficients".format(path, out_dim))
        try:
            listed[idx] = np.array([field.scalar_from_json(v) for v in value], dtype=object)
        except ValueError as err:
            raise DocumentError("Error, field '{}.value': {}".format(path, err))

    for idx, value in listed.items():
        tensor[idx] = value
    for idx, value in listed.items():
        mirror = (idx[1], idx[0]) + idx[2:]
        if mirror != idx and mirror not in listed:
            tensor[mirror] = field.reduce(-value)
    return tensor
