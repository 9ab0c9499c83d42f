"""Permutations on the points 0..n-1.

Elements are plain tuples of images; ``Permutation`` is a tuple subclass that
adds the group operations and cycle notation. Products compose left to
right: ``(a * b)(x) == b(a(x))``.
"""

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "power",
    "conjugate",
    "commutator",
    "element_order",
    "cycles",
    "cycle_type",
    "parse_cycles",
    "format_cycles",
]

import re
from math import gcd

from grpinv.core.common import ParseError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def identity(degree):
    return tuple(range(degree))


def compose(a, b):
    return tuple(map(b.__getitem__, a))


def inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def power(a, k):
    if k < 0:
        a = inverse(a)
        k = -k
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(x, g, g_inv=None):
    """g^-1 x g"""
    if g_inv is None:
        g_inv = inverse(g)
    return compose(compose(g_inv, x), g)


def commutator(a, b):
    """a^-1 b^-1 a b"""
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def cycles(a):
    seen = [False] * len(a)
    result = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = a[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = a[x]
        result.append(tuple(cycle))
    return result


def cycle_type(a):
    return tuple(sorted((len(c) for c in cycles(a)), reverse=True))


def element_order(a):
    order = 1
    for c in cycles(a):
        n = len(c)
        order = order * n // gcd(order, n)
    return order


def format_cycles(a):
    parts = ["(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles(a) if len(c) > 1]
    return "".join(parts) or "()"


def parse_cycles(text, degree, line=1):
    """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``.

    Points may be separated by spaces or commas. Raises ParseError with the
    column (1-based offset into ``text``) of the first problem.
    """
    images = list(range(degree))
    used = set()
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        char = stripped[position]
        if char.isspace():
            position += 1
            continue
        if char != "(":
            raise ParseError(line, position + 1, text, "expected '('")
        match = _CYCLE_RE.match(stripped, position)
        if match is None:
            raise ParseError(line, position + 1, text, "unclosed cycle")
        body = match.group(1).replace(",", " ").split()
        points = []
        for token in body:
            if not token.isdigit():
                raise ParseError(
                    line, match.start(1) + 1, text, "bad point {!r}".format(token)
                )
            point = int(token) - 1
            if point < 0 or point >= degree:
                raise ParseError(
                    line,
                    match.start(1) + 1,
                    text,
                    "point {} outside 1..{}".format(token, degree),
                )
            if point in used:
                raise ParseError(
                    line, match.start(1) + 1, text, "point {} repeated".format(token)
                )
            used.add(point)
            points.append(point)
        for i, point in enumerate(points):
            images[point] = points[(i + 1) % len(points)]
        position = match.end()
    return tuple(images)


class Permutation(tuple):
    """A bijection of {0..degree-1} stored as its image tuple"""

    def __new__(cls, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation: {!r}".format(images))
        return super(Permutation, cls).__new__(cls, images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text, degree):
        return cls(parse_cycles(text, degree))

    @property
    def degree(self):
        return len(self)

    def order(self):
        return element_order(self)

    def inverse(self):
        return Permutation(inverse(self))

    def cycles(self):
        return cycles(self)

    def __mul__(self, other):
        return Permutation(compose(self, other))

    def __pow__(self, k):
        return Permutation(power(self, k))

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return "Permutation({})".format(format_cycles(self))
