# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Exact scalar fields.

The rationals are realized with fractions.Fraction, the prime fields F_p
with python integer residues in [0, p). Every matrix or tensor of the package
is a numpy array with dtype=object holding these scalars, so numpy only
moves python objects around and the arithmetic never leaves the field.
"""

import numbers
from fractions import Fraction

import numpy as np
import sympy


__MAX_MODULUS__ = 2**31

__all__ = ["Field", "get_field"]


class Field(object):
    def __init__(self, p=None):
        """
        FIELD DESCRIPTOR
        ================

        All the scalars of a computation share one descriptor.

        Parameters
        ----------
            p : int or None
                The prime modulus of F_p. If None (default) the field is Q.
        """
        if p is not None:
            if isinstance(p, bool) or not isinstance(p, numbers.Integral):
                raise ValueError("Error, the modulus must be an integer, got {}".format(repr(p)))
            p = int(p)
            if p >= __MAX_MODULUS__ or not sympy.isprime(p):
                raise ValueError("Error, the modulus {} is not a prime below 2^31".format(p))
        self.p = p

    @property
    def is_rational(self):
        return self.p is None

    @property
    def characteristic(self):
        if self.p is None:
            return 0
        return self.p

    @property
    def name(self):
        if self.p is None:
            return "Q"
        return "F{}".format(self.p)

    @property
    def zero(self):
        if self.p is None:
            return Fraction(0)
        return 0

    @property
    def one(self):
        if self.p is None:
            return Fraction(1)
        return 1

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field({})".format(self.name)

    def coerce(self, x):
        """
        Convert x into a scalar of this field.

        Integers, Fractions and strings like "3/4" are accepted.
        Floating point values are refused: nothing in this package is approximate.
        """
        if isinstance(x, bool):
            raise ValueError("Error, boolean {} is not a field element".format(x))
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except ValueError:
                raise ValueError("Error, cannot read '{}' as an exact rational".format(x))
        elif isinstance(x, numbers.Integral):
            x = int(x)
        elif isinstance(x, numbers.Rational):
            x = Fraction(x.numerator, x.denominator)
        else:
            raise ValueError("Error, {} ({}) is not an exact scalar".format(repr(x), type(x).__name__))

        if self.p is None:
            return Fraction(x)

        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError("Error, {} has no value in F{}".format(x, self.p))
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return x % self.p

    def asarray(self, data, shape=None):
        """
        Build an object array of field elements from nested lists or arrays.

        Parameters
        ----------
            data : array_like
                The entries.
            shape : tuple, optional
                Reshape the result (needed for empty inputs like 0 x n matrices).
        """
        arr = np.array(data, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        out = np.empty(arr.shape, dtype=object)
        for index in np.ndindex(arr.shape):
            out[index] = self.coerce(arr[index])
        return out

    def zeros(self, shape):
        return np.full(shape, self.zero, dtype=object)

    def eye(self, n):
        ident = self.zeros((n, n))
        for i in range(n):
            ident[i, i] = self.one
        return ident

    def reduce(self, arr):
        """Bring an array (or scalar) back to canonical residues. No-op over Q."""
        if self.p is None:
            return arr
        return arr % self.p

    def neg(self, x):
        return self.reduce(-x)

    def inv(self, x):
        if self.p is None:
            if x == 0:
                raise ZeroDivisionError("Error, inverting zero in Q")
            return Fraction(1) / x
        if x % self.p == 0:
            raise ZeroDivisionError("Error, inverting zero in F{}".format(self.p))
        return pow(int(x), -1, self.p)

    def dot(self, a, b):
        return self.reduce(np.dot(a, b))

    def is_zero(self, arr):
        arr = np.asarray(arr, dtype=object)
        if arr.size == 0:
            return True
        return not np.any(np.asarray(self.reduce(arr) != 0, dtype=bool))

    def equal(self, a, b):
        a = np.asarray(a, dtype=object)
        b = np.asarray(b, dtype=object)
        if a.shape != b.shape:
            return False
        return self.is_zero(a - b)

    def elements(self):
        """Enumerate F_p in increasing residue order."""
        if self.p is None:
            raise ValueError("Error, Q cannot be enumerated")
        return list(range(self.p))

    def random_matrix(self, rng, shape, bound=3):
        """
        Random exact matrix.

        Over Q the entries are integers in [-bound, bound], over F_p uniform residues.

        Parameters
        ----------
            rng : numpy.random.RandomState
                The seeded generator.
            shape : tuple
                The shape of the result.
            bound : int
                Entry bound over Q.
        """
        if self.p is None:
            raw = rng.randint(-bound, bound + 1, size=shape)
        else:
            raw = rng.randint(0, self.p, size=shape)
        return self.asarray(raw.tolist(), shape=shape)

    # ---- JSON codec ----
    def scalar_to_json(self, x):
        if self.p is None:
            return str(Fraction(x))
        return int(x) % self.p

    def scalar_from_json(self, value):
        if isinstance(value, float):
            raise ValueError("Error, floating point value {} in an exact document".format(value))
        return self.coerce(value)

    def array_to_json(self, arr):
        arr = np.asarray(arr, dtype=object)
        if arr.ndim == 0:
            return self.scalar_to_json(arr[()])
        return [self.array_to_json(row) for row in arr]

    def to_json(self):
        if self.p is None:
            return "Q"
        return {"Fp": self.p}

    @staticmethod
    def from_json(descriptor):
        """
        Read a header descriptor: "Q", {"Fp": p}, or the short names "F2", "F3", ...
        """
        if isinstance(descriptor, dict):
            if set(descriptor.keys()) != {"Fp"}:
                raise ValueError("Error, unknown field descriptor {}".format(descriptor))
            return Field(descriptor["Fp"])
        return get_field(descriptor)


def get_field(name):
    """
    Parse a field name: "Q" or "F<p>" (like "F2").
    """
    if isinstance(name, Field):
        return name
    if name is None:
        return Field()
    if not isinstance(name, str):
        raise ValueError("Error, unknown field descriptor {}".format(repr(name)))
    key = name.strip()
    if key.upper() == "Q":
        return Field()
    if key[:1].upper() == "F":
        digits = key[1:]
        if digits.lower().startswith("p="):
            digits = digits[2:]
        if digits.isdigit():
            return Field(int(digits))
    raise ValueError("Error, unknown field '{}', use Q or F<p>".format(name))
