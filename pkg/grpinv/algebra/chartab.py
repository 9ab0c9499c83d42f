"""Complex character tables by Dixon's method.

The class algebra is diagonalised over GF(p) for a prime p = 1 mod exp(G)
with p > 2 sqrt|G|; each common eigenvector gives a character mod p, which
is lifted to complex values through the eigenvalue multiplicities of every
class representative (a discrete Fourier transform of length ord(g)).
"""

__all__ = [
    "CharacterTable",
    "character_table",
    "frobenius_schur",
    "real_character_basis",
    "class_labels",
    "dixon_prime",
]

import logging
import string
from math import isqrt

import numpy as np
import pandas as pd
from sympy import Poly, nextprime, primitive_root, symbols

from grpinv.algebra.classfunc import ClassFunction
from grpinv.algebra.linalg import mod_nullspace, mod_row_echelon, mod_sqrt
from grpinv.core.common import CapExceeded, GroupComputationError, NumericalFailure
from grpinv.core.config import get_config
from grpinv.perm.permutation import compose, inverse

logger = logging.getLogger(__name__)


def dixon_prime(order, exponent):
    """smallest prime p > 2 sqrt(order) with p = 1 mod exponent"""
    p = 2 * isqrt(order) + 1
    while True:
        p = nextprime(p)
        if p % exponent == 1:
            return p


def class_labels(G):
    """ATLAS style labels: element order followed by a letter"""
    labels = []
    seen = {}
    for c in G.conjugacy_classes():
        k = seen.get(c.element_order, 0)
        seen[c.element_order] = k + 1
        suffix = ""
        while True:
            suffix = string.ascii_lowercase[k % 26] + suffix
            k = k // 26 - 1
            if k < 0:
                break
        labels.append("{}{}".format(c.element_order, suffix))
    return labels


# -- GF(p) helpers -------------------------------------------------------------


def _charpoly(A, p):
    """characteristic polynomial mod p (coefficients low to high), by Hessenberg form"""
    n = len(A)
    H = [[int(x) % p for x in row] for row in A]
    for m in range(1, n - 1):
        pivot = next((i for i in range(m, n) if H[i][m - 1]), None)
        if pivot is None:
            continue
        if pivot != m:
            H[pivot], H[m] = H[m], H[pivot]
            for row in H:
                row[pivot], row[m] = row[m], row[pivot]
        t_inv = pow(H[m][m - 1], p - 2, p)
        for i in range(m + 1, n):
            u = H[i][m - 1] * t_inv % p
            if not u:
                continue
            H[i] = [(a - u * b) % p for a, b in zip(H[i], H[m])]
            for row in H:
                row[m] = (row[m] + u * row[i]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        previous = polys[k - 1]
        current = [0] + previous
        h = H[k - 1][k - 1]
        for d, c in enumerate(previous):
            current[d] = (current[d] - h * c) % p
        t = 1
        for i in range(1, k):
            t = t * H[k - i][k - i - 1] % p
            coefficient = t * H[k - i - 1][k - 1] % p
            if coefficient:
                for d, c in enumerate(polys[k - i - 1]):
                    current[d] = (current[d] - coefficient * c) % p
        polys.append(current)
    return polys[n]


def _roots(coefficients, p):
    """distinct roots in GF(p) of a polynomial given low to high"""
    x = symbols("x")
    poly = Poly(list(reversed(coefficients)), x, modulus=p)
    roots = set()
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = (int(c) % p for c in factor.all_coeffs())
            roots.add((-b * pow(a, p - 2, p)) % p)
    return sorted(roots)


class _ClassMatrices(object):
    """class structure constants a[r][s][t] = #{x in C_r : x^-1 g_t in C_s}, built per r"""

    def __init__(self, G):
        self.G = G
        self._matrices = {}

    def __getitem__(self, r):
        if r not in self._matrices:
            G = self.G
            classes = G.conjugacy_classes()
            k = len(classes)
            M = np.zeros((k, k), dtype=np.int64)
            inverses = [inverse(x) for x in classes[r].members]
            for t, c in enumerate(classes):
                for x_inv in inverses:
                    M[G.class_of(compose(x_inv, c.representative)), t] += 1
            self._matrices[r] = M
        return self._matrices[r]


def _split(space, N, p):
    """split a row space invariant under N into eigenspaces of N"""
    S, pivots = mod_row_echelon(space, p)
    S = S[: len(pivots)]
    C = (S.dot(N) % p)[:, pivots]
    pieces = []
    for root in _roots(_charpoly(C.tolist(), p), p):
        shifted = (C - root * np.eye(len(pivots), dtype=np.int64)) % p
        W = mod_nullspace(shifted.T, p)
        if W:
            pieces.append(np.array(W, dtype=np.int64).dot(S) % p)
    if sum(len(piece) for piece in pieces) != len(pivots):
        raise NumericalFailure("eigenspace decomposition mod {}".format(p), len(pieces), 0)
    return pieces


def _eigenvectors(G, p):
    k = G.class_count
    matrices = _ClassMatrices(G)
    spaces = [np.eye(k, dtype=np.int64)]
    r = 1
    while len(spaces) < k:
        if r >= k:
            raise GroupComputationError(
                "{}: class algebra does not split mod {}".format(G.name, p)
            )
        N = matrices[r].T % p
        refined = []
        for space in spaces:
            if len(space) == 1:
                refined.append(space)
            else:
                refined.extend(_split(space, N, p))
        spaces = refined
        logger.debug("%s: %d of %d eigenspaces after class %d", G.name, len(spaces), k, r)
        r += 1
    return [space[0] for space in spaces]


# -- table ---------------------------------------------------------------------


class CharacterTable(object):
    """Irreducible complex characters of a group, aligned with its classes."""

    def __init__(self, group, characters, prime):
        self.group = group
        self.characters = characters
        self.prime = prime
        self.labels = class_labels(group)
        self.degrees = [int(round(chi.degree.real)) for chi in characters]
        self.indicators = [frobenius_schur(chi, irreducible=True) for chi in characters]

    def __repr__(self):
        return "<CharacterTable {} degrees={}>".format(self.group.name, self.degrees)

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def matrix(self):
        return np.array([chi.values for chi in self.characters], dtype=complex)

    def orthogonality_defect(self):
        """max |<chi_i, chi_j> - delta_ij| over the table"""
        X = self.matrix()
        sizes = np.array(self.group.class_sizes, dtype=float)
        gram = (X * sizes).dot(X.conj().T) / self.group.order
        return float(np.max(np.abs(gram - np.eye(len(X)))))

    def square_root_counts(self):
        """#{g : g^2 = x} for x in each class, from the squaring map"""
        G = self.group
        squares = G.power_map(2)
        sizes = G.class_sizes
        counts = [0] * G.class_count
        for s, t in enumerate(squares):
            counts[t] += sizes[s]
        return [counts[t] // sizes[t] for t in range(G.class_count)]

    def square_root_identity_holds(self, tolerance=None):
        """sum_chi nu(chi) chi(x) equals the number of square roots of x"""
        if tolerance is None:
            tolerance = get_config().integrality_tol
        total = np.zeros(self.group.class_count, dtype=complex)
        for nu, chi in zip(self.indicators, self.characters):
            total += nu * np.array(chi.values, dtype=complex)
        return bool(
            np.allclose(total, self.square_root_counts(), rtol=0, atol=tolerance)
        )

    def to_frame(self):
        """rows = characters, columns = class labels; values rounded for display"""
        rows = []
        for chi in self.characters:
            row = []
            for v in chi.values:
                z = complex(v)
                if abs(z.imag) < 1e-9:
                    row.append(round(z.real, 6))
                else:
                    row.append(complex(round(z.real, 6), round(z.imag, 6)))
            rows.append(row)
        frame = pd.DataFrame(rows, columns=self.labels)
        frame.index = ["X.{}".format(i + 1) for i in range(len(rows))]
        frame.insert(0, "indicator", self.indicators)
        return frame


def _lift(G, theta, p):
    """complex values of a character given mod p on every class"""
    exponent = G.exponent
    z = pow(primitive_root(p), (p - 1) // exponent, p)
    values = []
    degree = int(theta[0])
    for c in G.conjugacy_classes():
        o = c.element_order
        if o == 1:
            values.append(complex(degree))
            continue
        z_o = pow(z, exponent // o, p)
        z_inv = pow(z_o, p - 2, p)
        powers = np.array([theta[G.power_map(l)[c.index]] for l in range(o)], dtype=np.int64)
        dft = np.array(
            [[pow(z_inv, (k * l) % o, p) for l in range(o)] for k in range(o)],
            dtype=np.int64,
        )
        multiplicities = (dft.dot(powers) % p) * pow(o, p - 2, p) % p
        if int(multiplicities.sum()) != degree or np.any(multiplicities > degree):
            raise NumericalFailure(
                "eigenvalue multiplicities of class {}".format(c.index),
                multiplicities.tolist(),
                degree,
            )
        roots = np.exp(2j * np.pi * np.arange(o) / o)
        values.append(complex(multiplicities.dot(roots)))
    return values


def _compute_table(G):
    order = G.order
    p = dixon_prime(order, G.exponent)
    sizes = G.class_sizes
    k = G.class_count
    inverse_class = [G.inverse_class(t) for t in range(k)]
    logger.info("%s: character table mod %d for %d classes", G.name, p, k)
    characters = []
    for vector in _eigenvectors(G, p):
        if not vector[0]:
            raise NumericalFailure("central character at the identity", 0, 0)
        scale = pow(int(vector[0]), p - 2, p)
        omega = [int(v) * scale % p for v in vector]
        norm = sum(
            omega[t] * omega[inverse_class[t]] * pow(sizes[t], p - 2, p) for t in range(k)
        ) % p
        degree = mod_sqrt(order * pow(norm, p - 2, p), p)
        if degree is None or degree == 0:
            raise NumericalFailure("degree square root mod {}".format(p), norm, 0)
        theta = [omega[t] * degree * pow(sizes[t], p - 2, p) % p for t in range(k)]
        characters.append(_lift(G, theta, p))

    def key(values):
        return (round(values[0].real),) + tuple(
            (round(v.real, 6), round(v.imag, 6)) for v in values[1:]
        )

    characters.sort(key=key)
    table = CharacterTable(
        G,
        [ClassFunction(G, values, "X.{}".format(i + 1)) for i, values in enumerate(characters)],
        p,
    )
    tolerance = get_config().character_tol
    defect = table.orthogonality_defect()
    if defect > tolerance:
        raise NumericalFailure("row orthogonality", defect, tolerance)
    if sum(d * d for d in table.degrees) != order:
        raise NumericalFailure("sum of squared degrees", table.degrees, 0)
    return table


def character_table(G, order_cap=None):
    """The irreducible characters of G, computed once per group.

    Raises CapExceeded beyond the order cap (exact-gap-cap by default) or
    the class count cap.
    """
    config = get_config()
    if order_cap is None:
        order_cap = config.exact_gap_cap
    if G.order > order_cap:
        raise CapExceeded(G.name, order_cap, G.order)
    if G.class_count > config.table_class_cap:
        raise CapExceeded(G.name, config.table_class_cap, G.class_count)
    return G.cached("character_table", lambda: _compute_table(G))


def frobenius_schur(chi, irreducible=False):
    """nu(chi) = (1/|G|) sum_g chi(g^2), rounded to an integer"""
    G = chi.group
    squares = G.power_map(2)
    total = sum(
        size * complex(chi.values[squares[t]]) for t, size in enumerate(G.class_sizes)
    ) / G.order
    nu = int(round(total.real))
    tolerance = get_config().integrality_tol
    if abs(total - nu) > tolerance or (irreducible and nu not in (-1, 0, 1)):
        raise NumericalFailure("Frobenius-Schur indicator", total, tolerance)
    return nu


def real_character_basis(G, table=None):
    """One real irreducible character per Galois orbit under complex conjugation.

    Real type characters are kept, complex ones are summed with their
    conjugate and quaternionic ones doubled. Values are Fractions.
    """
    if table is None:
        table = character_table(G)
    basis = []
    used = set()
    worst = 0.0
    for i, (chi, nu) in enumerate(zip(table.characters, table.indicators)):
        if i in used:
            continue
        used.add(i)
        if nu == 1:
            real = chi
        elif nu == -1:
            real = 2 * chi
        else:
            conjugate = chi.conj()
            partner = next(
                j
                for j, other in enumerate(table.characters)
                if j not in used and other.equals(conjugate, get_config().character_tol)
            )
            used.add(partner)
            real = chi + table.characters[partner]
        rational, residual = real.as_rationals()
        worst = max(worst, residual)
        rational.name = "R{}".format(len(basis) + 1)
        basis.append(rational)
    if worst:
        logger.debug("%s: real basis rounded with residual %.3g", G.name, worst)
    return basis
