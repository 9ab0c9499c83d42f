__all__ = ["FiniteField", "field", "IRREDUCIBLE_POLYNOMIALS"]

import itertools
import logging
import random
import threading

from sympy import factorint

from grpinv.core.common import GroupComputationError

# monic, coefficients from the constant term up
IRREDUCIBLE_POLYNOMIALS = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 1, 1),  # x^2 + x + 2
    27: (1, 2, 0, 1),  # x^3 - x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
}

_fields = {}
_fields_lock = threading.Lock()


class FiniteField(object):
    """GF(p^k) with elements encoded as integers 0..q-1.

    The integer sum c_0 + c_1 p + ... + c_{k-1} p^{k-1} stands for the
    polynomial c_0 + c_1 x + ... reduced modulo the bundled irreducible
    polynomial, so 0..p-1 are the prime field and addition is digitwise.
    """

    def __init__(self, q):
        factors = factorint(q)
        if len(factors) != 1:
            raise ValueError("{} is not a prime power".format(q))
        ((p, k),) = factors.items()
        if k > 1 and q not in IRREDUCIBLE_POLYNOMIALS:
            raise ValueError("no bundled polynomial for GF({})".format(q))
        self.__logger = logging.getLogger(__name__)
        self.p = p
        self.k = k
        self.q = q
        self.modulus = IRREDUCIBLE_POLYNOMIALS.get(q, (0, 1))
        self._add = [[self.__add(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self.__mul(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._add[a].index(0) for a in range(q)]
        self._inv = [None] + [self._mul[a].index(1) for a in range(1, q)]
        self.primitive = self.__find_primitive()
        self._frob = [self.power(a, p) for a in range(q)]
        self.__logger.debug("GF(%d) with primitive element %d", q, self.primitive)

    def __repr__(self):
        return "GF({})".format(self.q)

    def __len__(self):
        return self.q

    def __iter__(self):
        return iter(range(self.q))

    # -- coefficient arithmetic --------------------------------------------

    def _digits(self, a):
        digits = []
        for _ in range(self.k):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def _number(self, digits):
        return sum(c * self.p ** i for i, c in enumerate(digits))

    def __add(self, a, b):
        return self._number(
            [(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))]
        )

    def __mul(self, a, b):
        p, k = self.p, self.k
        product = [0] * (2 * k - 1)
        for i, x in enumerate(self._digits(a)):
            for j, y in enumerate(self._digits(b)):
                product[i + j] = (product[i + j] + x * y) % p
        for degree in range(len(product) - 1, k - 1, -1):
            c = product[degree]
            if c:
                for i, m in enumerate(self.modulus[:-1]):
                    position = degree - k + i
                    product[position] = (product[position] - c * m) % p
                product[degree] = 0
        return self._number(product[:k])

    def __find_primitive(self):
        if self.q == 2:
            return 1
        for candidate in range(2 if self.q > 2 else 1, self.q):
            if self.multiplicative_order(candidate) == self.q - 1:
                return candidate
        raise GroupComputationError("GF({}) has no primitive element".format(self.q))

    # -- field operations --------------------------------------------------

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF({})".format(self.q))
        return self._inv[a]

    def power(self, a, n):
        if n < 0:
            a = self.inv(a)
            n = -n
        result = 1
        while n:
            if n & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            n >>= 1
        return result

    def frobenius(self, a, times=1):
        for _ in range(times):
            a = self._frob[a]
        return a

    def multiplicative_order(self, a):
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        order = 1
        x = a
        while x != 1:
            x = self._mul[x][a]
            order += 1
        return order

    def is_square(self, a):
        return a == 0 or any(self._mul[x][x] == a for x in range(1, self.q))

    def non_square(self):
        for a in range(1, self.q):
            if not self.is_square(a):
                return a
        return None

    # -- vectors -----------------------------------------------------------

    def vector_times_matrix(self, v, M):
        result = []
        for j in range(len(M[0])):
            s = 0
            for i, x in enumerate(v):
                if x:
                    s = self._add[s][self._mul[x][M[i][j]]]
            result.append(s)
        return tuple(result)

    def normalize(self, v):
        """projective representative with first nonzero coordinate 1"""
        for x in v:
            if x:
                scale = self.inv(x)
                return tuple(self._mul[scale][y] for y in v)
        raise ValueError("zero vector has no projective point")

    def vectors(self, n):
        return [tuple(v) for v in itertools.product(range(self.q), repeat=n)]

    def projective_points(self, n):
        """normalized points of PG(n-1, q) in lexicographic order"""
        return sorted({self.normalize(v) for v in self.vectors(n) if any(v)})

    def check_axioms(self, samples=200, seed=0):
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = (rng.randrange(self.q) for _ in range(3))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                return False
        return self.multiplicative_order(self.primitive) == self.q - 1


def field(q):
    """the shared GF(q) instance"""
    with _fields_lock:
        if q not in _fields:
            _fields[q] = FiniteField(q)
        return _fields[q]
