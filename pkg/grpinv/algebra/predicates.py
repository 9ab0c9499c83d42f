__all__ = [
    "Isthmus",
    "is_oliver",
    "noncyclic_sylow_count",
    "is_cp",
    "is_ep",
    "large_subgroup_test",
    "p_l_disjoint",
    "gap_status",
    "gap_module_witness",
]

import logging
from collections import namedtuple
from fractions import Fraction
from functools import reduce
from math import gcd

from sympy import primefactors

from grpinv.algebra.chartab import character_table, real_character_basis
from grpinv.algebra.invariants import normal_quotient
from grpinv.algebra.linalg import lp_feasible
from grpinv.algebra.pairs import proper_pairs
from grpinv.algebra.repmod import dim_fixed
from grpinv.core.common import GAP, GAP_MODE, STRUCTURE, CapExceeded
from grpinv.core.config import get_config
from grpinv.perm.group import FiniteGroup
from grpinv.perm.subgroups import (
    coset_order,
    derived_subgroup,
    largest_normal_p_subgroup,
    normal_subgroups,
    op_residual,
    structure,
    sylow_subgroup,
)
from grpinv.util import is_prime_power, prime_power_base

logger = logging.getLogger(__name__)

# P ⊴ H ⊴ G with |P| a power of p_prime, |G:H| a power of h_prime and H/P cyclic
Isthmus = namedtuple("Isthmus", ["p_order", "h_order", "p_prime", "h_prime"])


def _isthmus_over(G, H):
    """an isthmus P ⊴ H ⊴ G, or None

    H/P cyclic with P a normal p-subgroup forces [H, H] <= P <= O_p(H), and
    then H/O_p(H) is cyclic too.
    """
    h_prime = prime_power_base(H.index)
    if H.order == 1:
        return Isthmus(1, 1, None, h_prime)
    commutators = derived_subgroup(G, H).order
    Hg = H.as_group()
    for p in primefactors(H.order):
        if not is_prime_power(commutators) or (
            commutators > 1 and prime_power_base(commutators) != p
        ):
            continue
        O = largest_normal_p_subgroup(Hg, p)
        target = H.order // O.order
        lower = O.class_set
        if any(
            coset_order(Hg, c.representative, lower) == target
            for c in Hg.conjugacy_classes()
        ):
            return Isthmus(O.order, H.order, p, h_prime)
    return None


def is_oliver(G):
    """``(True, None)`` for Oliver groups, else ``(False, isthmus)``"""
    for H in normal_subgroups(G):
        if not is_prime_power(H.index):
            continue
        witness = _isthmus_over(G, H)
        if witness is not None:
            logger.debug("%s is not Oliver: %s", G.name, witness)
            return False, witness
    return True, None


def noncyclic_sylow_count(G):
    return sum(
        1
        for p in G.prime_divisors
        if not structure(sylow_subgroup(G, p), STRUCTURE.CYCLIC)
    )


def is_cp(G):
    """every element has prime power order"""
    return not any(c.is_npp for c in G.real_classes())


def is_ep(G):
    """all NPP elements share one order and every normal subgroup meeting
    them contains all of them"""
    npp_classes = frozenset(
        i for c in G.real_classes() if c.is_npp for i in c.class_indices
    )
    if not npp_classes:
        return True
    orders = {G.class_orders[i] for i in npp_classes}
    if len(orders) > 1:
        return False
    for K in normal_subgroups(G):
        if K.class_set & npp_classes and not npp_classes <= K.class_set:
            return False
    return True


def _members(H):
    if isinstance(H, FiniteGroup):
        return frozenset(H.elements)
    return H.elements


def large_subgroup_test(G, H):
    """O^p(G) <= H for some prime p"""
    members = _members(H)
    return any(op_residual(G, p).elements <= members for p in G.prime_divisors)


def p_l_disjoint(G):
    """no large subgroup has prime power order"""
    return not any(is_prime_power(op_residual(G, q).order) for q in G.prime_divisors)


def _sufficient(G):
    odd = [
        p for p in G.prime_divisors if p % 2 and op_residual(G, p).order < G.order
    ]
    if len(odd) >= 2:
        return GAP.GAP
    if op_residual(G, 2).order == G.order:
        return GAP.GAP
    for N in normal_subgroups(G):
        if N.order == 1 or N.order == G.order:
            continue
        try:
            Q = normal_quotient(G, N).group
        except CapExceeded:
            logger.debug("%s: quotient by |N| = %d not realized", G.name, N.order)
            continue
        if p_l_disjoint(Q) and _sufficient(Q) == GAP.GAP:
            logger.debug("%s: gap quotient by |N| = %d", G.name, N.order)
            return GAP.GAP
    return GAP.UNKNOWN


def gap_module_witness(G, order_cap=None):
    """Multiplicities of real irreducibles forming an 𝓛-free gap module, or None.

    The variables are the real irreducible characters with no fixed vectors
    on any O^p(G); each distinct proper pair contributes the constraint
    dim V^P - 2 dim V^H >= 1.
    """
    table = character_table(G, order_cap)
    basis = real_character_basis(G, table)
    residuals = [op_residual(G, p) for p in G.prime_divisors]
    allowed = [
        chi for chi in basis if all(dim_fixed(chi, N) == 0 for N in residuals)
    ]
    rows = []
    for pair in proper_pairs(G):
        p_hist, h_hist = pair.key
        rows.append(
            [dim_fixed(chi, p_hist) - 2 * dim_fixed(chi, h_hist) for chi in allowed]
        )
    logger.info(
        "%s: gap LP with %d characters and %d pairs", G.name, len(allowed), len(rows)
    )
    solution = lp_feasible(rows, [1] * len(rows))
    if solution is None:
        return None
    multiplicities = [Fraction(int(x.p), int(x.q)) for x in solution]
    scale = reduce(
        lambda a, b: a * b // gcd(a, b), (m.denominator for m in multiplicities), 1
    )
    return {
        chi.name: int(m * scale) for chi, m in zip(allowed, multiplicities) if m
    }


def gap_status(G, mode=GAP_MODE.SUFFICIENT, order_cap=None):
    """GAP, NOT_GAP or UNKNOWN.

    Groups with a large subgroup of prime power order are never gap groups.
    The sufficient mode never answers NOT_GAP otherwise; the exact mode
    decides by linear programming up to the order cap.
    """
    if not p_l_disjoint(G):
        return GAP.NOT_GAP
    if mode == GAP_MODE.SUFFICIENT:
        return _sufficient(G)
    if mode != GAP_MODE.EXACT:
        raise ValueError("unknown gap mode {!r}".format(mode))
    if order_cap is None:
        order_cap = get_config().exact_gap_cap
    if G.order > order_cap:
        logger.info("%s: order %d beyond the exact gap cap %d", G.name, G.order, order_cap)
        return GAP.UNKNOWN
    try:
        witness = gap_module_witness(G, order_cap)
    except CapExceeded as e:
        logger.warning("%s: exact gap decision unavailable: %s", G.name, e)
        return GAP.UNKNOWN
    return GAP.GAP if witness is not None else GAP.NOT_GAP
