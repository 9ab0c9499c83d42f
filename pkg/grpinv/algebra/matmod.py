"""Real G-modules as orthogonal matrices, one per generator of G.

Products compose left to right, so matrices act on row vectors:
``rho(compose(x, g)) == rho(x) @ rho(g)``. Matrices are only needed where
determinants are, that is for the 𝒫-orientation of U ⊕ V.
"""

__all__ = [
    "MatrixModule",
    "OrientationReport",
    "OrientationResult",
    "trivial_module",
    "linear_module",
    "rotation_module",
    "tensor_product",
    "permutation_module",
    "regular_module",
    "direct_sum",
    "random_orthogonal",
    "random_module",
    "io_kernel_basis",
    "io_kernel_modules",
    "linear_characters",
    "pq_pair_modules",
    "orientation_check",
    "determinant_lemma",
    "two_group_reduction",
]

import cmath
import logging
import math
import threading
from collections import namedtuple
from functools import reduce
from math import gcd

import numpy as np

from grpinv.algebra.chartab import character_table
from grpinv.algebra.classfunc import ClassFunction
from grpinv.algebra.invariants import normal_quotient
from grpinv.algebra.linalg import integer_nullspace
from grpinv.algebra.pairs import p_subgroup_classes
from grpinv.algebra.repmod import (
    RealModuleChar,
    VirtualCharacter,
    cyclic_pq_quotients,
    membership,
    pq_exponents,
)
from grpinv.core.common import MEMBERSHIP, STRUCTURE, GroupComputationError, NumericalFailure
from grpinv.core.config import get_config
from grpinv.perm.group import SubgroupRef
from grpinv.perm.permutation import compose, element_order, power
from grpinv.perm.subgroups import normalizer, structure, sylow_subgroup
from grpinv.util import is_prime_power

logger = logging.getLogger(__name__)

OrientationResult = namedtuple(
    "OrientationResult", ["p_order", "generator", "det_u", "det_v", "passed"]
)


class MatrixModule(object):
    """An orthogonal representation given on the generators of a group.

    The image of every element is obtained once by a breadth-first walk over
    the Cayley graph and cached.
    """

    def __init__(self, group, matrices, name=None):
        matrices = [np.asarray(m, dtype=float) for m in matrices]
        if len(matrices) != len(group.generators):
            raise ValueError(
                "{} matrices for {} generators of {}".format(
                    len(matrices), len(group.generators), group.name
                )
            )
        shapes = {m.shape for m in matrices}
        if len(shapes) > 1 or any(len(s) != 2 or s[0] != s[1] for s in shapes):
            raise ValueError("generator matrices must be square of one size")
        self.group = group
        self.matrices = matrices
        self.name = name
        self.dimension = matrices[0].shape[0] if matrices else 0
        self.__lock = threading.RLock()
        self.__logger = logging.getLogger(__name__)
        self._images = None

    def __repr__(self):
        return "<MatrixModule {} dim={} on {}>".format(
            self.name or "", self.dimension, self.group.name
        )

    def images(self):
        with self.__lock:
            if self._images is None:
                G = self.group
                images = {G.identity: np.eye(self.dimension)}
                frontier = [G.identity]
                while frontier:
                    following = []
                    for x in frontier:
                        for g, M in zip(G.generators, self.matrices):
                            y = compose(x, g)
                            if y not in images:
                                images[y] = images[x] @ M
                                following.append(y)
                    frontier = following
                if len(images) != G.order:
                    raise GroupComputationError(
                        "{}: {} images for {} elements".format(self.name, len(images), G.order)
                    )
                self._images = images
                self.__logger.debug("%s: %d element images", self.name, len(images))
            return self._images

    def __call__(self, g):
        return self.images()[tuple(g)]

    def is_orthogonal(self, tolerance=None):
        if tolerance is None:
            tolerance = get_config().character_tol
        eye = np.eye(self.dimension)
        return all(np.allclose(M @ M.T, eye, rtol=0, atol=tolerance) for M in self.matrices)

    def check_relations(self, samples=200, seed=None, tolerance=None):
        """rho(a) rho(b) == rho(ab) on generator pairs and random element pairs"""
        if tolerance is None:
            tolerance = get_config().character_tol
        if seed is None:
            seed = get_config().random_seed
        G = self.group
        rng = np.random.default_rng(seed)
        elements = G.elements
        pairs = [(a, b) for a in G.generators for b in G.generators]
        for i, j in rng.integers(0, len(elements), size=(samples, 2)):
            pairs.append((elements[i], elements[j]))
        return all(
            np.allclose(self(a) @ self(b), self(compose(a, b)), rtol=0, atol=tolerance)
            for a, b in pairs
        )

    def character(self):
        G = self.group
        values = [float(np.trace(self(c.representative))) for c in G.conjugacy_classes()]
        return ClassFunction(G, values, "tr {}".format(self.name or "rho"))

    def fixed_projection(self, elements):
        elements = list(elements)
        return sum(self(h) for h in elements) / len(elements)

    def fixed_basis(self, elements):
        """orthonormal columns spanning the vectors fixed by ``elements``"""
        projection = self.fixed_projection(elements)
        values, vectors = np.linalg.eigh((projection + projection.T) / 2)
        return vectors[:, values > 0.5]

    def fixed_rank(self, elements):
        return int(np.linalg.matrix_rank(self.fixed_projection(elements), tol=1e-6))

    def restricted_det(self, g, basis):
        """det of g on the invariant subspace spanned by the columns of ``basis``"""
        if basis.shape[1] == 0:
            return 1.0
        return float(np.linalg.det(basis.T @ self(g) @ basis))

    def conjugate_by(self, Q, name=None):
        """the same module in the orthonormal basis given by the rows of Q"""
        Q = np.asarray(Q, dtype=float)
        return MatrixModule(self.group, [Q @ M @ Q.T for M in self.matrices], name or self.name)

    def nonfixed_part(self, name=None):
        """the module on the orthogonal complement of the G-fixed vectors"""
        projection = self.fixed_projection(self.group.elements)
        values, vectors = np.linalg.eigh((projection + projection.T) / 2)
        basis = vectors[:, values < 0.5]
        return MatrixModule(
            self.group, [basis.T @ M @ basis for M in self.matrices], name or self.name
        )

    def as_character(self):
        return RealModuleChar(self.character())


# -- builders --------------------------------------------------------------------


def trivial_module(G):
    return MatrixModule(G, [np.eye(1) for _ in G.generators], "1")


def _rotation(angle):
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, s], [-s, c]])


def rotation_module(G, angles, name=None):
    """2x2 rotation blocks; real when every angle is 0 or pi"""
    if all(abs(math.sin(a)) < 1e-12 for a in angles):
        return MatrixModule(G, [np.array([[round(math.cos(a))]]) for a in angles], name)
    return MatrixModule(G, [_rotation(a) for a in angles], name)


def tensor_product(U, W, name=None):
    if U.group is not W.group:
        raise ValueError("modules of different groups")
    return MatrixModule(
        U.group,
        [np.kron(a, b) for a, b in zip(U.matrices, W.matrices)],
        name or "{}*{}".format(U.name or "?", W.name or "?"),
    )


def linear_module(G, chi, name=None):
    """the realification of a linear character: a sign or a rotation block"""
    angles = [cmath.phase(complex(chi.value_at(g))) for g in G.generators]
    return rotation_module(G, angles, name or chi.name)


def linear_characters(G):
    table = character_table(G)
    return [
        chi for chi, degree in zip(table.characters, table.degrees) if round(degree) == 1
    ]


def _right_cosets(G, H):
    coset_of = {}
    representatives = []
    members = list(H.elements)
    for x in G.elements:
        if x in coset_of:
            continue
        index = len(representatives)
        representatives.append(x)
        for h in members:
            coset_of[compose(h, x)] = index
    return coset_of, representatives


def permutation_module(G, H, name=None):
    """the permutation action of G on the right cosets of H"""
    coset_of, representatives = _right_cosets(G, H)
    n = len(representatives)
    matrices = []
    for g in G.generators:
        M = np.zeros((n, n))
        for i, x in enumerate(representatives):
            M[i, coset_of[compose(x, g)]] = 1.0
        matrices.append(M)
    return MatrixModule(G, matrices, name or "R[G/{}]".format(H.order))


def regular_module(G):
    trivial = SubgroupRef(G, generators=[], elements=[G.identity])
    return permutation_module(G, trivial, "R[G]")


def direct_sum(*modules, **kwargs):
    G = modules[0].group
    if any(m.group is not G for m in modules):
        raise ValueError("modules of different groups")
    size = sum(m.dimension for m in modules)
    matrices = []
    for k in range(len(G.generators)):
        M = np.zeros((size, size))
        p = 0
        for m in modules:
            M[p : p + m.dimension, p : p + m.dimension] = m.matrices[k]
            p += m.dimension
        matrices.append(M)
    name = kwargs.get("name") or "+".join(m.name or "?" for m in modules)
    return MatrixModule(G, matrices, name)


def random_orthogonal(n, rng):
    A = rng.standard_normal((n, n))
    Q, R = np.linalg.qr(A)
    return Q * np.sign(np.diag(R))


def _block_pool(G, rng):
    pool = [trivial_module(G)]
    pool.extend(linear_module(G, chi) for chi in linear_characters(G))
    elements = G.elements
    for _ in range(2):
        x = elements[int(rng.integers(0, len(elements)))]
        cyclic = SubgroupRef(G, generators=[x])
        pool.append(permutation_module(G, cyclic))
    if G.order <= 60:
        pool.append(regular_module(G))
    return pool


def random_module(G, rng, blocks=3):
    """a direct sum of random blocks in a random orthonormal basis"""
    pool = _block_pool(G, rng)
    chosen = [pool[int(i)] for i in rng.integers(0, len(pool), size=blocks)]
    module = direct_sum(*chosen)
    return module.conjugate_by(random_orthogonal(module.dimension, rng), "random")


def _cyclic_permutation_characters(G):
    """(C, values) per distinct character of R[G/C], C cyclic"""

    def compute():
        classes = G.conjugacy_classes()
        seen = set()
        columns = []
        for c in classes:
            C = SubgroupRef(G, generators=[c.representative])
            values = tuple(
                G.order * len(k.members & C.elements) // (len(k.members) * C.order)
                for k in classes
            )
            if values not in seen:
                seen.add(values)
                columns.append((C, values))
        return columns

    return G.cached("cyclic_permutation_characters", compute)


def _combined_character(columns, x):
    width = len(columns[0][1])
    return [sum(n * values[k] for (_, values), n in zip(columns, x)) for k in range(width)]


def io_kernel_basis(G):
    """Integer multiplicities x_C over cyclic subgroups C such that
    sum x_C R[G/C] vanishes on elements of prime power order.

    Vectors whose virtual module is zero are dropped. By Artin induction the
    basis is empty exactly when G has no element of non prime power order.
    """

    def compute():
        columns = _cyclic_permutation_characters(G)
        rows = [
            [values[c.index] for _, values in columns]
            for c in G.conjugacy_classes()
            if is_prime_power(c.element_order)
        ]
        basis = [v for v in integer_nullspace(rows) if any(_combined_character(columns, v))]
        logger.debug(
            "%s: IO kernel of rank %d over %d cyclic subgroups", G.name, len(basis), len(columns)
        )
        return basis

    return G.cached("io_kernel_basis", compute)


def io_kernel_modules(G, rng, attempts=20):
    """A random pair (U, V) of sums of permutation modules with U - V in IO(G)
    and U, V not isomorphic, or None when no such pair exists."""
    basis = io_kernel_basis(G)
    if not basis:
        return None
    columns = _cyclic_permutation_characters(G)
    x = basis[0]
    for _ in range(attempts):
        coefficients = rng.integers(-1, 2, size=len(basis))
        candidate = [
            sum(int(a) * v[i] for a, v in zip(coefficients, basis)) for i in range(len(columns))
        ]
        if any(_combined_character(columns, candidate)):
            x = candidate
            break
    divisor = reduce(gcd, x, 0)
    x = [n // divisor for n in x]
    plus = [permutation_module(G, C) for (C, _), n in zip(columns, x) for _ in range(max(n, 0))]
    minus = [permutation_module(G, C) for (C, _), n in zip(columns, x) for _ in range(max(-n, 0))]
    U = direct_sum(*plus, name="IO+")
    V = direct_sum(*minus, name="IO-")
    return (
        U.conjugate_by(random_orthogonal(U.dimension, rng)),
        V.conjugate_by(random_orthogonal(V.dimension, rng)),
    )


def pq_pair_modules(G, N=None):
    """matrix realizations of the modules r(U), r(V) of a cyclic pq quotient"""
    candidates = cyclic_pq_quotients(G)
    if N is not None:
        candidates = [c for c in candidates if c[0] == N]
    if not candidates:
        raise GroupComputationError("{} has no cyclic quotient of order pq".format(G.name))
    N, p, q = candidates[0]
    n = p * q
    a, b = pq_exponents(p, q)
    Q = normal_quotient(G, N)
    x = next(
        Q.representatives[c.representative]
        for c in Q.conjugacy_classes()
        if c.element_order == n
    )
    exponent = {}
    y = x
    for j in range(1, n + 1):
        exponent[Q.projection(y)] = j % n
        y = compose(y, x)
    js = [exponent[Q.projection(g)] for g in G.generators]

    def block(k):
        return rotation_module(G, [2 * math.pi * k * j / n for j in js])

    U = direct_sum(block(1), block(2), name="r(U)")
    V = direct_sum(block(a), block(b), name="r(V)")
    return U, V


# -- orientation -----------------------------------------------------------------


class OrientationReport(object):
    def __init__(self, group, precondition, results):
        self.group = group
        self.precondition = precondition
        self.results = results

    def __repr__(self):
        return "<OrientationReport {} passed={}>".format(self.group, self.passed)

    @property
    def passed(self):
        return self.precondition and all(r.passed for r in self.results)

    def to_dict(self):
        return {
            "group": self.group,
            "precondition": self.precondition,
            "passed": self.passed,
            "pairs": [
                {"p_order": r.p_order, "det_u": r.det_u, "det_v": r.det_v, "pass": r.passed}
                for r in self.results
            ],
        }


def _unit(value, what, tolerance):
    if abs(abs(value) - 1) > tolerance:
        raise NumericalFailure(what, value, tolerance)
    return value


def orientation_check(U, V):
    """Whether det(g | (U ⊕ V)^P) = +1 for each P in 𝒫(G) up to conjugacy and
    each generator g of N_G(P).

    The modules must agree on elements of prime power order; otherwise the
    report fails its precondition and nothing is checked.
    """
    G = U.group
    tolerance = get_config().integrality_tol
    d = VirtualCharacter(U.as_character(), V.as_character())
    if not membership(d, MEMBERSHIP.IO):
        logger.info("%s: modules differ on prime power order elements", G.name)
        return OrientationReport(G.name, False, [])
    results = []
    for P in p_subgroup_classes(G):
        members = list(P.elements)
        basis_u, basis_v = U.fixed_basis(members), V.fixed_basis(members)
        gens = G.generators if P.order == 1 else normalizer(G, P).generators
        for g in gens:
            du = _unit(U.restricted_det(g, basis_u), "det on U^P", tolerance)
            dv = _unit(V.restricted_det(g, basis_v), "det on V^P", tolerance)
            results.append(
                OrientationResult(P.order, g, du, dv, abs(du * dv - 1) <= tolerance)
            )
    report = OrientationReport(G.name, True, results)
    logger.debug("%s: %d orientation checks, passed=%s", G.name, len(results), report.passed)
    return report


def determinant_lemma(U, V, t):
    """``(applicable, holds)``: for t of 2-power order, equal dimensions and
    dim U^T = dim V^T mod 2 give det(t|U) = det(t|V)"""
    order = element_order(t)
    if order & (order - 1):
        raise ValueError("t has order {}, not a power of 2".format(order))
    T = [power(t, k) for k in range(order)]
    if U.dimension != V.dimension or (U.fixed_rank(T) - V.fixed_rank(T)) % 2:
        return False, None
    tolerance = get_config().integrality_tol
    return True, abs(np.linalg.det(U(t)) - np.linalg.det(V(t))) <= tolerance


def two_group_reduction(U, V):
    """``(applicable, determinants_agree)`` for G = P·T with P a normal
    p-subgroup, p odd, and T = <t> a cyclic Sylow 2-subgroup.

    Applies to nonzero U, V with U^G = V^G = 0 that are isomorphic as
    P-modules; the conclusion is det(t|U) = det(t|V).
    """
    G = U.group
    odd = [p for p in G.prime_divisors if p != 2]
    if len(odd) != 1 or 2 not in G.prime_divisors:
        return False, None
    P = sylow_subgroup(G, odd[0])
    T = sylow_subgroup(G, 2)
    if not P.is_normal or not structure(T, STRUCTURE.CYCLIC):
        return False, None
    if not U.dimension or not V.dimension:
        return False, None
    if U.fixed_rank(G.elements) or V.fixed_rank(G.elements):
        return False, None
    tolerance = get_config().integrality_tol
    chi_u, chi_v = U.character().values, V.character().values
    if any(abs(chi_u[i] - chi_v[i]) > tolerance for i in P.class_set):
        return False, None
    t = next(x for x in T.elements if element_order(x) == T.order)
    return True, abs(np.linalg.det(U(t)) - np.linalg.det(V(t))) <= tolerance
