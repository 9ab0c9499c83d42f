"""Exact linear algebra: row reduction over GF(p), rational rank, and the
feasibility LP behind the exact gap decision."""

__all__ = [
    "mod_row_echelon",
    "mod_nullspace",
    "mod_sqrt",
    "rational_rank",
    "integer_nullspace",
    "lp_feasible",
]

import logging
from functools import reduce

import numpy as np
from sympy import Matrix, Rational, igcd, ilcm, symbols
from sympy.ntheory import sqrt_mod
from sympy.solvers.simplex import InfeasibleLPError, lpmin

logger = logging.getLogger(__name__)


def mod_row_echelon(M, p):
    """Reduced row echelon form of an integer matrix over GF(p).

    Returns ``(R, pivot_cols)`` with ``R`` an int64 array whose pivots are 1.
    """
    R = np.array(M, dtype=np.int64).reshape((len(M), -1)) % p
    m, n = R.shape
    pivot_cols = []
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        nonzero = np.nonzero(R[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + nonzero[0]
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        R[pivot_row] = (R[pivot_row] * pow(int(R[pivot_row, col]), p - 2, p)) % p
        for row in range(m):
            if row != pivot_row and R[row, col]:
                R[row] = (R[row] - R[row, col] * R[pivot_row]) % p
        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def mod_nullspace(M, p):
    """basis (list of int vectors) of {x : M x = 0} over GF(p)"""
    R, pivots = mod_row_echelon(M, p)
    n = R.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for row, c in enumerate(pivots):
            v[c] = (-R[row, f]) % p
        basis.append(v)
    return basis


def mod_sqrt(a, p):
    """the square root of a mod p lying in [0, p/2], or None"""
    root = sqrt_mod(int(a) % p, p)
    if root is None:
        return None
    return min(root, p - root)


def _rational(x):
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Rational(int(x.numerator), int(x.denominator))
    return Rational(x)


def rational_rank(rows):
    """rank over Q of a matrix with int or Fraction entries"""
    if not rows or not rows[0]:
        return 0
    return Matrix([[_rational(x) for x in row] for row in rows]).rank()


def integer_nullspace(rows):
    """basis of {x : rows . x = 0} over Q, as primitive integer vectors"""
    basis = []
    for v in Matrix([[_rational(x) for x in row] for row in rows]).nullspace():
        scale = reduce(ilcm, [Rational(e).q for e in v], 1)
        ints = [int(e * scale) for e in v]
        divisor = reduce(igcd, ints, 0)
        basis.append([n // divisor for n in ints])
    return basis


def lp_feasible(rows, rhs):
    """Nonnegative x with ``rows[i] . x >= rhs[i]`` for every i, or None.

    Solved exactly; the returned list holds sympy Rationals.
    """
    width = len(rows[0]) if rows else 0
    constraints = []
    for row, bound in zip(rows, rhs):
        if not any(row):
            if bound > 0:
                logger.debug("zero row with positive bound: infeasible")
                return None
            continue
        constraints.append((row, bound))
    if not constraints:
        return [Rational(0)] * width
    x = symbols("m0:{}".format(width))
    system = [xi >= 0 for xi in x]
    for row, bound in constraints:
        system.append(sum(_rational(c) * xi for c, xi in zip(row, x) if c) >= bound)
    try:
        optimum, solution = lpmin(sum(x), system)
    except InfeasibleLPError:
        logger.debug("LP with %d constraints is infeasible", len(constraints))
        return None
    logger.debug("LP feasible with objective %s", optimum)
    return [Rational(solution.get(xi, 0)) for xi in x]
