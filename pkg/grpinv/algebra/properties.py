"""Statements about a_G and b_{G/H} checked on individual groups.

Each check returns whether its hypotheses hold on the group and, if so,
whether the conclusion does.
"""

__all__ = [
    "PropertyCheck",
    "sandwich_check",
    "two_npp_classes_check",
    "two_npp_orders_check",
    "monotonicity_check",
    "nonsolvable_check",
    "odd_order_check",
    "pq_quotient_check",
    "eight_condition",
    "v_g_parity_check",
    "v_g_large_check",
    "coset_meeting_check",
    "quotient_inheritance_check",
    "direct_factor_check",
    "abelian_centralizer_check",
    "odd_fitting_check",
]

import logging
from collections import namedtuple

from sympy import isprime

from grpinv.algebra.invariants import (
    b_invariant,
    has_element_of_order,
    laitinen_number,
    normal_quotient,
    quotient_laitinen_number,
)
from grpinv.algebra.pairs import proper_pairs
from grpinv.algebra.predicates import is_oliver, large_subgroup_test
from grpinv.algebra.repmod import (
    cyclic_pq_quotients,
    dim_fixed,
    v_g_character,
    v_g_fixed_dim,
)
from grpinv.core.common import PARITY, RESIDUAL, STRUCTURE
from grpinv.perm.permutation import compose
from grpinv.perm.subgroups import (
    center,
    centralizer,
    fitting,
    largest_normal_p_subgroup,
    normal_subgroups,
    residual,
    structure,
    subgroup_intersection,
    sylow_subgroup,
)
from grpinv.util import is_prime_power, prime_power_base

logger = logging.getLogger(__name__)

# detail: what failed, or None
PropertyCheck = namedtuple("PropertyCheck", ["applicable", "holds", "detail"])

# a_G = b_{G/G^sol} = 2 for these two nonsolvable groups only
EXCEPTIONAL_NONSOLVABLE = ("Aut(A6)", "PSigmaL(2,27)")


def _npp_classes(G, H):
    return [c for c in G.real_classes() if c.is_npp and set(c.class_indices) <= H.class_set]


def sandwich_check(G):
    """a_G >= b_{G/H} >= a_{G/H} for every normal H"""
    a = laitinen_number(G)
    for H in normal_subgroups(G):
        b = b_invariant(G, H)
        a_quotient = quotient_laitinen_number(G, H)
        if not a >= b >= a_quotient:
            return PropertyCheck(True, False, "|H| = {}: {} {} {}".format(H.order, a, b, a_quotient))
    return PropertyCheck(True, True, None)


def two_npp_classes_check(G):
    """a normal H holding two NPP real classes gives a_G > b_{G/H}"""
    a = laitinen_number(G)
    applicable = False
    for H in normal_subgroups(G):
        if len(_npp_classes(G, H)) < 2:
            continue
        applicable = True
        if not a > b_invariant(G, H):
            return PropertyCheck(True, False, "|H| = {}".format(H.order))
    return PropertyCheck(applicable, True if applicable else None, None)


def two_npp_orders_check(G):
    """a normal H holding NPP elements of two orders gives a_G > b_{G/H}"""
    a = laitinen_number(G)
    applicable = False
    for H in normal_subgroups(G):
        if len({c.element_order for c in _npp_classes(G, H)}) < 2:
            continue
        applicable = True
        if not a > b_invariant(G, H):
            return PropertyCheck(True, False, "|H| = {}".format(H.order))
    return PropertyCheck(applicable, True if applicable else None, None)


def monotonicity_check(G):
    """H <= K normal gives b_{G/H} >= b_{G/K}"""
    normals = normal_subgroups(G)
    b = {H.class_set: b_invariant(G, H) for H in normals}
    for H in normals:
        for K in normals:
            if H.class_set < K.class_set and b[H.class_set] < b[K.class_set]:
                return PropertyCheck(
                    True, False, "|H| = {} |K| = {}".format(H.order, K.order)
                )
    return PropertyCheck(True, True, None)


def nonsolvable_check(G):
    """nonsolvable G with a_G = b_{G/G^sol} has a_G <= 1, or is one of two
    groups where a_G = 2"""
    if structure(G, STRUCTURE.SOLVABLE):
        return PropertyCheck(False, None, None)
    a = laitinen_number(G)
    b = b_invariant(G, residual(G, RESIDUAL.SOLVABLE))
    names = (G.name,) + tuple(G.labels)
    exceptional = any(name in EXCEPTIONAL_NONSOLVABLE for name in names)
    if exceptional:
        holds = a == b == 2
    else:
        holds = a != b or a <= 1
    return PropertyCheck(True, holds, None if holds else "a_G = {} b = {}".format(a, b))


def odd_order_check(G):
    """odd-order Oliver G whose cyclic quotients all have prime power order
    has a_G > b_{G/G^nil} >= 1"""
    if G.order % 2 == 0 or not is_oliver(G)[0]:
        return PropertyCheck(False, None, None)
    cyclic_indices = [N.index for N in normal_subgroups(G) if _quotient_cyclic(G, N)]
    if not all(is_prime_power(n) for n in cyclic_indices):
        return PropertyCheck(False, None, None)
    a = laitinen_number(G)
    b = b_invariant(G, residual(G, RESIDUAL.NILPOTENT))
    return PropertyCheck(True, a > b >= 1, "a_G = {} b = {}".format(a, b))


def _quotient_cyclic(G, N):
    Q = normal_quotient(G, N)
    return any(c.element_order == Q.order for c in Q.conjugacy_classes())


def pq_quotient_check(G):
    """a cyclic quotient G/H of order pq gives a_G >= b_{G/H} >= (p-1)(q-1)/2"""
    quotients = cyclic_pq_quotients(G)
    if not quotients:
        return PropertyCheck(False, None, None)
    a = laitinen_number(G)
    for N, p, q in quotients:
        b = b_invariant(G, N)
        if not a >= b >= (p - 1) * (q - 1) // 2:
            return PropertyCheck(True, False, "|N| = {}: a_G = {} b = {}".format(N.order, a, b))
    return PropertyCheck(True, True, None)


def eight_condition(G):
    """G has an element of order 8"""
    return has_element_of_order(G, 8)


def v_g_parity_check(G):
    """d_{V(G)}(P, H) is 0 on odd pairs and positive on even pairs.

    Pairs with P large are skipped. Returns ``(checked, skipped, failures)``.
    """
    V = v_g_character(G)
    checked, skipped, failures = 0, 0, []
    for pair in proper_pairs(G):
        if large_subgroup_test(G, pair.P):
            skipped += 1
            continue
        checked += 1
        d = dim_fixed(V, pair.P) - 2 * dim_fixed(V, pair.H)
        if d != v_g_fixed_dim(G, pair.P) - 2 * v_g_fixed_dim(G, pair.H):
            failures.append((pair.P.order, pair.H.order, pair.parity, d, "closed form"))
        elif (pair.parity == PARITY.ODD) != (d == 0) or d < 0:
            failures.append((pair.P.order, pair.H.order, pair.parity, d, "dichotomy"))
    if failures:
        logger.warning("%s: V(G) parity failures %s", G.name, failures)
    return checked, skipped, failures


def v_g_large_check(G):
    """dim V(G)^K = 0 exactly for large K, over the subgroups met in proper pairs"""
    seen = set()
    for pair in proper_pairs(G):
        for K in (pair.P, pair.H):
            if K.elements in seen:
                continue
            seen.add(K.elements)
            if (v_g_fixed_dim(G, K) == 0) != large_subgroup_test(G, K):
                return PropertyCheck(True, False, "|K| = {}".format(K.order))
    return PropertyCheck(True, True, None)


def coset_meeting_check(G):
    """some coset gH meets two NPP real classes of G iff a_G > b_{G/H}"""
    a = laitinen_number(G)
    npp_classes = [c for c in G.real_classes() if c.is_npp]
    for H in normal_subgroups(G):
        Q = normal_quotient(G, H)
        seen = {}
        meets = False
        for c in npp_classes:
            for x in c.members:
                coset = Q.projection(x)
                if seen.setdefault(coset, c.index) != c.index:
                    meets = True
                    break
            if meets:
                break
        b = b_invariant(G, H)
        if meets != (a > b):
            return PropertyCheck(
                True, False, "|H| = {}: meets {} a_G = {} b = {}".format(H.order, meets, a, b)
            )
    return PropertyCheck(True, True, None)


def _b_relative(G, H, K):
    """b_{(G/K)/(H/K)}: real classes of G/H with a coset holding an NPP element of G/K"""
    QK = normal_quotient(G, K)
    marked = {
        c.index
        for c in G.conjugacy_classes()
        if not is_prime_power(QK.coset_order(c.representative))
    }
    return sum(
        1
        for c in normal_quotient(G, H).real_classes()
        if any(i in marked for i in c.class_indices)
    )


def quotient_inheritance_check(G):
    """a_G = b_{G/H} gives a_{G/K} = b_{(G/K)/(H/K)} for normal K inside H"""
    a = laitinen_number(G)
    normals = normal_subgroups(G)
    applicable = False
    for H in normals:
        if b_invariant(G, H) != a:
            continue
        for K in normals:
            if not K.class_set <= H.class_set:
                continue
            applicable = True
            a_quotient = quotient_laitinen_number(G, K)
            b = _b_relative(G, H, K)
            if a_quotient != b:
                return PropertyCheck(
                    True,
                    False,
                    "|H| = {} |K| = {}: {} != {}".format(H.order, K.order, a_quotient, b),
                )
    return PropertyCheck(applicable, True if applicable else None, None)


def _nonsolvable_direct_factor(G):
    """(c, B) with c of prime order and B = C_G(c)^sol a nonsolvable complement to <c>"""
    for c in G.conjugacy_classes():
        if not isprime(c.element_order):
            continue
        C = centralizer(G, c.representative).as_group()
        B = residual(C, RESIDUAL.SOLVABLE)
        if B.order > 1 and c.representative not in B.elements:
            return c.representative, B
    return None, None


def direct_factor_check(G):
    """a subgroup B x C with B nonsolvable and C cyclic gives a_G >= 2,
    and a_G > b_{G/G^sol} when B lies in G^sol"""
    c, B = _nonsolvable_direct_factor(G)
    if c is None:
        return PropertyCheck(False, None, None)
    a = laitinen_number(G)
    if a < 2:
        return PropertyCheck(True, False, "a_G = {}".format(a))
    solvable_residual = residual(G, RESIDUAL.SOLVABLE)
    if B.elements <= solvable_residual.elements:
        b = b_invariant(G, solvable_residual)
        if not a > b:
            return PropertyCheck(True, False, "a_G = {} b = {}".format(a, b))
    return PropertyCheck(True, True, None)


def abelian_centralizer_check(G):
    """odd |G|: an abelian normal p-subgroup P of H and x in H of prime order
    q != p with C_P(x) != 1 give a_G > b_{G/H}"""
    if G.order % 2 == 0:
        return PropertyCheck(False, None, None)
    a = laitinen_number(G)
    classes = G.conjugacy_classes()
    applicable = False
    for H in normal_subgroups(G):
        for p in G.prime_divisors:
            core = subgroup_intersection(largest_normal_p_subgroup(G, p), H)
            if core.order == 1:
                continue
            P = center(core.as_group()).elements
            for i in H.class_set:
                x = classes[i].representative
                q = classes[i].element_order
                if not isprime(q) or q == p:
                    continue
                if not any(
                    y != G.identity and compose(x, y) == compose(y, x) for y in P
                ):
                    continue
                applicable = True
                b = b_invariant(G, H)
                if not a > b:
                    return PropertyCheck(
                        True, False, "|H| = {} p = {} q = {}".format(H.order, p, q)
                    )
    return PropertyCheck(applicable, True if applicable else None, None)


def odd_fitting_check(G):
    """odd |G| and a_G = b_{G/H}: F(H) is a p-group and the Sylow q-subgroups
    of H are cyclic for q != p"""
    if G.order % 2 == 0:
        return PropertyCheck(False, None, None)
    a = laitinen_number(G)
    applicable = False
    for H in normal_subgroups(G)[1:]:
        if b_invariant(G, H) != a:
            continue
        applicable = True
        X = H.as_group()
        F = fitting(X)
        if not is_prime_power(F.order):
            return PropertyCheck(True, False, "|H| = {}: |F(H)| = {}".format(H.order, F.order))
        p = prime_power_base(F.order)
        for q in X.prime_divisors:
            if q != p and not structure(sylow_subgroup(X, q), STRUCTURE.CYCLIC):
                return PropertyCheck(
                    True, False, "|H| = {}: Sylow {} not cyclic".format(H.order, q)
                )
    return PropertyCheck(applicable, True if applicable else None, None)
