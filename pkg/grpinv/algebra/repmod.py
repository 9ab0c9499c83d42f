"""Real G-modules handled through their characters.

Characters determine real modules up to isomorphism, so fixed-space
dimensions, 𝓛-freeness, the IO/LO memberships and gap defects are all
computed from class functions. Matrices only appear in ``matmod``.
"""

__all__ = [
    "RealModuleChar",
    "VirtualCharacter",
    "trivial_character",
    "permutation_character",
    "regular_character",
    "dim_fixed",
    "is_l_free",
    "membership",
    "v_g_character",
    "v_g_fixed_dim",
    "gap_defect",
    "is_gap_module",
    "cyclic_pq_quotients",
    "pq_exponents",
    "construct_pq_pair",
]

import cmath
import logging
from fractions import Fraction

from sympy import primefactors
from sympy.ntheory.modular import crt

from grpinv.algebra.classfunc import ClassFunction, class_histogram
from grpinv.algebra.invariants import fix_pushforward, normal_quotient
from grpinv.algebra.pairs import pair_parity, proper_pairs
from grpinv.core.common import (
    MEMBERSHIP,
    BadQuotient,
    GroupComputationError,
    NumericalFailure,
)
from grpinv.core.config import get_config
from grpinv.perm.group import FiniteGroup
from grpinv.perm.permutation import compose
from grpinv.perm.subgroups import normal_subgroups, op_residual
from grpinv.util import is_prime_power

logger = logging.getLogger(__name__)


class RealModuleChar(object):
    """the character of a real G-module"""

    def __init__(self, character, name=None):
        self.character = character
        self.group = character.group
        self.name = name or character.name

    def __repr__(self):
        return "<RealModuleChar {} dim={} on {}>".format(
            self.name or "", self.dimension, self.group.name
        )

    def __add__(self, other):
        return RealModuleChar(self.character + other.character)

    def __sub__(self, other):
        return VirtualCharacter(self, other)

    @property
    def dimension(self):
        return _rounded(self.character.degree, "module dimension")

    def check_real(self):
        if not self.character.is_real(get_config().integrality_tol):
            raise NumericalFailure(
                "character of {} is not real".format(self.name), self.character.values, 0
            )
        return True

    def to_dict(self):
        return self.character.to_dict()


class VirtualCharacter(object):
    """the formal difference plus - minus of two real modules"""

    def __init__(self, plus, minus, name=None):
        if plus.group is not minus.group:
            raise ValueError("modules of different groups")
        self.plus = plus
        self.minus = minus
        self.group = plus.group
        self.name = name

    def __repr__(self):
        return "<VirtualCharacter {} on {}>".format(self.name or "", self.group.name)

    @property
    def net(self):
        return self.plus.character - self.minus.character

    def to_dict(self):
        result = self.net.to_dict()
        result["provenance"] = self.name
        return result


def _tolerance():
    return get_config().integrality_tol


def _rounded(value, what):
    """nearest integer, within the integrality tolerance"""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    # rationalized irrational values only come out integral approximately
    z = complex(value)
    nearest = round(z.real)
    if abs(z - nearest) > _tolerance():
        raise NumericalFailure(what, z, _tolerance())
    return int(nearest)


def _character(V):
    if isinstance(V, RealModuleChar):
        return V.character
    if isinstance(V, VirtualCharacter):
        return V.net
    return V


def _subgroup_histogram(G, H):
    if isinstance(H, tuple):
        return H
    if isinstance(H, FiniteGroup):
        return tuple(G.class_sizes) if H is G else class_histogram(G, H.elements)
    return G.cached(("histogram", H.elements), lambda: class_histogram(G, H.elements))


def _subgroup_order(H):
    if isinstance(H, tuple):
        return sum(H)
    return H.order


def trivial_character(G):
    return RealModuleChar(ClassFunction(G, [1] * G.class_count, "1"))


def permutation_character(G, H):
    """number of cosets of H fixed by g: |H ∩ C_t| |G| / (|H| |C_t|)"""
    histogram = _subgroup_histogram(G, H)
    order = _subgroup_order(H)
    values = []
    for size, meet in zip(G.class_sizes, histogram):
        value = Fraction(meet * G.order, order * size)
        if value.denominator != 1:
            raise GroupComputationError(
                "permutation character of {} on a subgroup of order {} is not integral".format(
                    G.name, order
                )
            )
        values.append(int(value))
    return RealModuleChar(ClassFunction(G, values, "R[G/{}]".format(order)))


def regular_character(G):
    values = [0] * G.class_count
    values[0] = G.order
    return RealModuleChar(ClassFunction(G, values, "R[G]"))


def dim_fixed(V, H):
    """dim V^H = (1/|H|) sum_{h in H} chi(h), checked to be integral"""
    chi = _character(V)
    G = chi.group
    value = chi.average_over(_subgroup_histogram(G, H), _subgroup_order(H))
    return _rounded(value, "dim of fixed space in {}".format(chi.name or G.name))


def is_l_free(V):
    chi = _character(V)
    G = chi.group
    return all(dim_fixed(chi, op_residual(G, p)) == 0 for p in G.prime_divisors)


def _prime_power_classes(G):
    return [c.index for c in G.conjugacy_classes() if is_prime_power(c.element_order)]


def _agree(f, g, indices=None):
    tolerance = _tolerance()
    indices = range(len(f)) if indices is None else indices
    return all(abs(complex(f[i]) - complex(g[i])) <= tolerance for i in indices)


def membership(d, kind, H=None):
    """whether d = U - V lies in IO(G), IO(G,G), IO(G,H) or LO(G)"""
    G = d.group
    U, V = d.plus.character, d.minus.character
    if not _agree(U, V, _prime_power_classes(G)):
        return False
    if kind == MEMBERSHIP.IO:
        return True
    if kind == MEMBERSHIP.IO_GG:
        return dim_fixed(U, G) == dim_fixed(V, G)
    if kind == MEMBERSHIP.IO_GH:
        if H is None:
            raise ValueError("IO_GH membership needs a normal subgroup")
        return _agree(fix_pushforward(G, H, U), fix_pushforward(G, H, V))
    if kind == MEMBERSHIP.LO:
        return is_l_free(U) and is_l_free(V)
    raise ValueError("unknown membership kind {!r}".format(kind))


def v_g_character(G):
    """V(G) = (R[G] - R) - sum_p (R[G]^{O^p(G)} - R)"""

    def compute():
        trivial = trivial_character(G)
        minus = trivial.character
        for p in G.prime_divisors:
            residual = op_residual(G, p)
            minus = minus + permutation_character(G, residual).character - trivial.character
        return VirtualCharacter(
            regular_character(G), RealModuleChar(minus, "1+sum_p(R[G/O^p]-1)"), "V(G)"
        )

    return G.cached("v_g_character", compute)


def v_g_fixed_dim(G, K):
    """dim V(G)^K = (|G:K| - 1) - sum_p (|G : K O^p(G)| - 1), from orders alone"""
    histogram = _subgroup_histogram(G, K)
    order = _subgroup_order(K)
    result = G.order // order - 1
    for p in G.prime_divisors:
        N = op_residual(G, p)
        meet = sum(histogram[i] for i in N.class_set)
        product = order * N.order // meet
        result -= G.order // product - 1
    return result


def gap_defect(V, P, H):
    """d_V(P, H) = dim V^P - 2 dim V^H; raises BadPair unless (P, H) is proper"""
    pair_parity(_character(V).group, P, H)
    return dim_fixed(V, P) - 2 * dim_fixed(V, H)


def is_gap_module(V):
    chi = _character(V)
    if not is_l_free(chi):
        return False
    for pair in proper_pairs(chi.group):
        if dim_fixed(chi, pair.P) - 2 * dim_fixed(chi, pair.H) <= 0:
            logger.debug(
                "%s: d = %d on (|P|=%d, |H|=%d)",
                chi.name,
                dim_fixed(chi, pair.P) - 2 * dim_fixed(chi, pair.H),
                pair.P.order,
                pair.H.order,
            )
            return False
    return True


# -- the pair attached to a cyclic quotient of order pq ------------------------


def cyclic_pq_quotients(G):
    """(N, p, q) for normal N with G/N cyclic of order pq, p < q odd primes"""
    result = []
    for N in normal_subgroups(G):
        n = N.index
        if n % 2 == 0 or n < 15:
            continue
        primes = primefactors(n)
        if len(primes) != 2 or primes[0] * primes[1] != n:
            continue
        Q = normal_quotient(G, N)
        if any(c.element_order == n for c in Q.conjugacy_classes()):
            result.append((N, primes[0], primes[1]))
    return result


def pq_exponents(p, q):
    """a = 1 mod p, 2 mod q and b = 2 mod p, 1 mod q, both in (0, pq)"""
    a, _ = crt([p, q], [1, 2])
    b, _ = crt([p, q], [2, 1])
    return int(a), int(b)


def _quotient_generator(G, N, n):
    """an element of G whose coset generates the cyclic quotient G/N"""
    Q = normal_quotient(G, N)
    for c in Q.conjugacy_classes():
        if c.element_order == n:
            return Q, Q.representatives[c.representative]
    raise BadQuotient(G.name, "G/N of order {} is not cyclic".format(n))


def _realified_linear(G, exponent_of_class, n, k, name):
    values = []
    for j in exponent_of_class:
        values.append(2 * cmath.exp(2j * cmath.pi * k * j / n).real)
    return ClassFunction(G, values, name)


def construct_pq_pair(G, N=None):
    """The real modules r(U), r(V) pulled back from G/N cyclic of order pq.

    U = λ + λ² and V = λ^a + λ^b for a faithful linear character λ of Z_pq;
    r(U) - r(V) is a nonzero element of LO(G).
    """
    candidates = cyclic_pq_quotients(G)
    if N is None:
        if not candidates:
            raise BadQuotient(G.name, "no cyclic quotient of order pq")
        N, p, q = candidates[0]
    else:
        found = [(M, p, q) for M, p, q in candidates if M == N]
        if not found:
            raise BadQuotient(
                G.name, "G/N for |N| = {} is not cyclic of order pq".format(N.order)
            )
        N, p, q = found[0]
    n = p * q
    a, b = pq_exponents(p, q)
    Q, x = _quotient_generator(G, N, n)
    # coset of x^j -> j
    exponent_of_coset = {}
    y = x
    for j in range(1, n + 1):
        exponent_of_coset[Q.projection(y)] = j % n
        y = compose(y, x)
    exponent_of_class = [
        exponent_of_coset[Q.projection(c.representative)] for c in G.conjugacy_classes()
    ]
    U = ClassFunction(G, [0] * G.class_count)
    for k in (1, 2):
        U = U + _realified_linear(G, exponent_of_class, n, k, None)
    V = ClassFunction(G, [0] * G.class_count)
    for k in (a, b):
        V = V + _realified_linear(G, exponent_of_class, n, k, None)
    rU = RealModuleChar(ClassFunction(G, U.values, "r(U)"))
    rV = RealModuleChar(ClassFunction(G, V.values, "r(V)"))
    logger.info("%s: pq pair for p=%d q=%d, a=%d b=%d", G.name, p, q, a, b)
    difference = VirtualCharacter(rU, rV, "r(U)-r(V)")
    if not (is_l_free(rU) and is_l_free(rV)):
        raise GroupComputationError("{}: pq pair is not 𝓛-free".format(G.name))
    if not membership(difference, MEMBERSHIP.LO):
        raise GroupComputationError("{}: r(U) - r(V) is not in LO(G)".format(G.name))
    if _agree(rU.character, rV.character):
        raise GroupComputationError("{}: r(U) = r(V)".format(G.name))
    return rU, rV
