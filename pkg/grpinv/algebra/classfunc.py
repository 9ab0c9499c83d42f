__all__ = ["ClassFunction", "class_histogram"]

import logging
from fractions import Fraction

import numpy as np

from grpinv.core.common import NumericalFailure
from grpinv.core.config import get_config

logger = logging.getLogger(__name__)


def class_histogram(G, elements):
    """number of ``elements`` in each conjugacy class of G, as a tuple"""
    counts = [0] * G.class_count
    for x in elements:
        counts[G.class_of(x)] += 1
    return tuple(counts)


def _exact(value):
    return isinstance(value, (int, Fraction))


class ClassFunction(object):
    """A function on G constant on conjugacy classes, one value per class.

    Values are ints or Fractions when exact, complex otherwise.
    """

    def __init__(self, group, values, name=None):
        values = list(values)
        if len(values) != group.class_count:
            raise ValueError(
                "{} values for {} classes of {}".format(
                    len(values), group.class_count, group.name
                )
            )
        self.group = group
        self.values = values
        self.name = name

    def __repr__(self):
        return "<ClassFunction {} on {}>".format(self.name or "", self.group.name)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __check(self, other):
        if other.group is not self.group:
            raise ValueError("class functions of different groups")

    def __add__(self, other):
        self.__check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self.__check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def __mul__(self, scalar):
        return ClassFunction(self.group, [scalar * a for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.equals(other)

    def __hash__(self):
        return hash((id(self.group), len(self.values)))

    def equals(self, other, tolerance=None):
        self.__check(other)
        if all(_exact(a) and _exact(b) for a, b in zip(self.values, other.values)):
            return self.values == other.values
        if tolerance is None:
            tolerance = get_config().integrality_tol
        return bool(
            np.allclose(
                np.array(self.values, dtype=complex),
                np.array(other.values, dtype=complex),
                rtol=0,
                atol=tolerance,
            )
        )

    @property
    def degree(self):
        return self.values[0]

    def value_at(self, g):
        return self.values[self.group.class_of(g)]

    def conj(self):
        inverse = self.group.inverse_class
        return ClassFunction(self.group, [self.values[inverse(i)] for i in range(len(self))])

    def is_real(self, tolerance=None):
        if tolerance is None:
            tolerance = get_config().character_tol
        return all(
            abs(complex(self.values[i]) - complex(self.values[self.group.inverse_class(i)]))
            <= tolerance
            for i in range(len(self))
        )

    def inner(self, other):
        """(1/|G|) sum_g self(g) conj(other(g))"""
        self.__check(other)
        sizes = self.group.class_sizes
        if all(_exact(a) for a in self.values) and all(_exact(b) for b in other.values):
            # exact values here are real
            total = sum(s * a * b for s, a, b in zip(sizes, self.values, other.values))
            return Fraction(total, self.group.order)
        total = sum(
            s * complex(a) * complex(b).conjugate()
            for s, a, b in zip(sizes, self.values, other.values)
        )
        return total / self.group.order

    def average_over(self, histogram, order):
        """(1/|H|) sum_{h in H} f(h) for a subgroup with the given class histogram"""
        if all(_exact(a) for a in self.values):
            return Fraction(sum(n * a for n, a in zip(histogram, self.values) if n), order)
        return sum(n * complex(a) for n, a in zip(histogram, self.values) if n) / order

    def as_rationals(self, denominator_bound=10 ** 6, tolerance=None):
        """Values as Fractions; returns ``(function, residual)``.

        Non-real values raise NumericalFailure.
        """
        if tolerance is None:
            tolerance = get_config().character_tol
        values = []
        residual = 0.0
        for a in self.values:
            if _exact(a):
                values.append(Fraction(a))
                continue
            z = complex(a)
            if abs(z.imag) > tolerance:
                raise NumericalFailure("imaginary part of a real character", z, tolerance)
            nearest = round(z.real)
            if abs(z.real - nearest) <= tolerance:
                values.append(Fraction(int(nearest)))
                continue
            q = Fraction(z.real).limit_denominator(denominator_bound)
            residual = max(residual, abs(float(q) - z.real))
            values.append(q)
        return ClassFunction(self.group, values, self.name), residual

    def to_dict(self):
        return {
            "group": self.group.name,
            "classes": [
                "{}{}".format(c.element_order, c.index) for c in self.group.conjugacy_classes()
            ],
            "values": [
                v if _exact(v) else [complex(v).real, complex(v).imag] for v in self.values
            ],
            "provenance": self.name,
        }
