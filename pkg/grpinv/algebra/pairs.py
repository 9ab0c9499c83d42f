"""p-subgroups up to conjugacy and proper pairs (P, H).

A proper pair has P of prime power order (possibly trivial) and P < H <= G.
Fixed-space dimensions only see the class histogram of a subgroup (how many
of its elements fall into each conjugacy class of G), so pairs are
deduplicated by the pair of histograms.
"""

__all__ = [
    "ProperPair",
    "p_subgroup_classes",
    "overgroups",
    "proper_pairs",
    "pair_parity",
    "conjugate_subgroups",
]

import logging
from collections import namedtuple
from math import gcd

from sympy import primefactors

from grpinv.algebra.classfunc import class_histogram
from grpinv.core.common import PARITY, BadPair
from grpinv.perm.group import SubgroupRef, extend_subgroup
from grpinv.perm.permutation import compose, conjugate, element_order, inverse, power
from grpinv.perm.subgroups import normalizer, op_residual
from grpinv.util import is_prime_power

logger = logging.getLogger(__name__)

# key: (class histogram of P, class histogram of H)
ProperPair = namedtuple("ProperPair", ["P", "H", "parity", "key"])


def _histogram(G, S):
    return G.cached(("histogram", S.elements), lambda: class_histogram(G, S.elements))


def conjugate_subgroups(G, A, B):
    """whether A and B are conjugate in G"""
    if A.order != B.order or _histogram(G, A) != _histogram(G, B):
        return False
    members = B.elements
    gens = A.generators
    for g in G.elements:
        g_inv = inverse(g)
        if all(conjugate(a, g, g_inv) in members for a in gens):
            return True
    return False


def _extensions(G, P, p):
    """subgroups <P, x> of order p|P| with x normalizing P"""
    N = G.elements if P.order == 1 else sorted(normalizer(G, P).elements)
    members = P.elements
    gens = list(P.generators)
    covered = set(members)
    for x in N:
        if x in covered or power(x, p) not in members:
            continue
        elements = extend_subgroup(members, gens + [x], x)
        covered.update(elements)
        yield SubgroupRef(G, generators=gens + [x], elements=elements)


def p_subgroup_classes(G):
    """Representatives of the conjugacy classes of p-subgroups, all primes.

    The trivial subgroup comes first and only once; each prime then follows
    in increasing order of subgroup size. Every p-subgroup of order p^(k+1)
    normalizes a subgroup of order p^k, so growing the representatives by one
    normalizing element reaches every class.
    """

    def compute():
        trivial = SubgroupRef(G, generators=[], elements=[G.identity], name="1")
        result = [trivial]
        for p in G.prime_divisors:
            level = [trivial]
            while level:
                following = []
                for P in level:
                    for Q in _extensions(G, P, p):
                        if not any(conjugate_subgroups(G, Q, R) for R in following):
                            following.append(Q)
                logger.debug(
                    "%s: %d classes of %d-subgroups of order %d",
                    G.name,
                    len(following),
                    p,
                    following[0].order if following else 0,
                )
                result.extend(following)
                level = following
        return result

    return G.cached("p_subgroup_classes", compute)


def _minimal_overgroups(G, P):
    """<P, x> for x outside P with some prime power of x inside P"""
    members = P.elements
    gens = list(P.generators)
    done = set(members)
    found = set()
    for x in G.elements:
        if x in done:
            continue
        order = element_order(x)
        if not any(power(x, r) in members for r in primefactors(order)):
            continue
        # generating powers of x and their P-cosets give the same subgroup
        y = x
        for k in range(1, order):
            if gcd(k, order) == 1:
                done.update(compose(m, y) for m in members)
            y = compose(y, x)
        elements = frozenset(extend_subgroup(members, gens + [x], x))
        if elements in found:
            continue
        found.add(elements)
        yield SubgroupRef(G, generators=gens + [x], elements=elements)


def _all_overgroups(G, P):
    found = {P.elements: P}
    frontier = [P]
    while frontier:
        following = []
        for K in frontier:
            for x in G.elements:
                if x in K.elements:
                    continue
                elements = frozenset(
                    extend_subgroup(K.elements, list(K.generators) + [x], x)
                )
                if elements not in found:
                    L = SubgroupRef(G, generators=list(K.generators) + [x], elements=elements)
                    found[elements] = L
                    following.append(L)
        frontier = following
    del found[P.elements]
    return sorted(found.values(), key=lambda K: K.order)


def overgroups(G, P, minimal=True):
    """Subgroups H > P: the one-element extensions by default, else all of them.

    Every overgroup of P contains one of the one-element extensions.
    """
    if minimal:
        return list(_minimal_overgroups(G, P))
    return _all_overgroups(G, P)


def _product_order(G, histogram, order, N):
    """|X N| for a subgroup X with the given class histogram and N normal"""
    meet = sum(histogram[i] for i in N.class_set)
    return order * N.order // meet


def pair_parity(G, P, H):
    """ODD when |H:P| = |H O^2 : P O^2| = 2 and P O^p = G for every odd p"""
    if not is_prime_power(P.order):
        raise BadPair(P.order, H.order, "|P| is not a prime power")
    if not P.elements < H.elements:
        raise BadPair(P.order, H.order, "P is not a proper subgroup of H")
    if H.order != 2 * P.order or G.order % 2:
        return PARITY.EVEN
    p_hist, h_hist = _histogram(G, P), _histogram(G, H)
    O2 = op_residual(G, 2)
    if _product_order(G, h_hist, H.order, O2) != 2 * _product_order(
        G, p_hist, P.order, O2
    ):
        return PARITY.EVEN
    for p in G.prime_divisors:
        if p == 2:
            continue
        if _product_order(G, p_hist, P.order, op_residual(G, p)) != G.order:
            return PARITY.EVEN
    return PARITY.ODD


def proper_pairs(G, reduced=True):
    """Proper pairs with P running over p_subgroup_classes.

    ``reduced`` restricts H to one-element extensions of P and keeps one
    pair per histogram key; otherwise every overgroup of every
    representative is produced.
    """
    seen = set()
    for P in p_subgroup_classes(G):
        p_hist = _histogram(G, P)
        for H in overgroups(G, P, minimal=reduced):
            key = (p_hist, _histogram(G, H))
            if reduced:
                if key in seen:
                    continue
                seen.add(key)
            yield ProperPair(P, H, pair_parity(G, P, H), key)
