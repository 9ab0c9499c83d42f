"""Counting invariants: NPP elements, the Laitinen number a_G, the coset
invariant b_{G/H}, ranks of IO(G), IO(G,G), IO(G,H) and the LO(G) bounds.

b_{G/H} is computed twice: by marking cosets that contain NPP elements, and
as the rank of the Fix^H pushforward of the NPP real class indicators.
"""

__all__ = [
    "npp",
    "npp_orders",
    "laitinen_number",
    "b_invariant",
    "quotient_laitinen_number",
    "rank",
    "lo_rank_bounds",
    "fix_pushforward",
    "fix_rank_oracle",
    "has_element_of_order",
    "normal_quotient",
    "InvariantReport",
    "BRow",
    "LoBounds",
    "invariant_report",
]

import logging
from collections import namedtuple

from grpinv.algebra.classfunc import ClassFunction
from grpinv.algebra.linalg import rational_rank
from grpinv.core.common import RANK, RESIDUAL, NotNormal
from grpinv.perm.permutation import compose
from grpinv.perm.subgroups import normal_subgroups, op_residual, quotient_group, residual

logger = logging.getLogger(__name__)

BRow = namedtuple("BRow", ["order", "b", "rank", "a_quotient", "oracle"])
LoBounds = namedtuple("LoBounds", ["lower", "upper", "exact"])


def normal_quotient(G, H):
    """G/H, cached on G; raises NotNormal unless H is normal"""
    if H.parent is not G or not H.is_normal:
        raise NotNormal(G.name, H.order)
    return G.cached(("quotient", H.class_set), lambda: quotient_group(G, H))


def npp(G):
    """elements whose order has at least two prime divisors"""
    return frozenset().union(
        *(c.members for c in G.real_classes() if c.is_npp)
    )


def npp_orders(G):
    return sorted({c.element_order for c in G.real_classes() if c.is_npp})


def laitinen_number(G):
    return sum(1 for c in G.real_classes() if c.is_npp)


def has_element_of_order(G, n):
    return n in G.class_orders


def _npp_class_indices(G):
    return frozenset(
        i for c in G.real_classes() if c.is_npp for i in c.class_indices
    )


def b_invariant(G, H):
    """real classes of G/H holding a coset with an NPP element of G"""
    Q = normal_quotient(G, H)
    marked = _npp_class_indices(G)
    return sum(
        1 for c in Q.real_classes() if any(i in marked for i in c.class_indices)
    )


def quotient_laitinen_number(G, H):
    """a_{G/H}, from coset orders in the quotient"""
    return normal_quotient(G, H).laitinen_number()


def rank(G, kind, H=None):
    a = laitinen_number(G)
    if kind == RANK.IO:
        return a
    if kind == RANK.IO_GG:
        return a - min(a, 1)
    if kind == RANK.IO_GH:
        if H is None:
            raise ValueError("rank IO_GH needs a normal subgroup")
        return a - b_invariant(G, H)
    raise ValueError("unknown rank kind {!r}".format(kind))


def lo_rank_bounds(G):
    """(a_G - b_{G/G^nil}, min_p a_G - b_{G/O^p(G)}) for rk LO(G)"""
    a = laitinen_number(G)
    lower = a - b_invariant(G, residual(G, RESIDUAL.NILPOTENT))
    upper = min(
        (a - b_invariant(G, op_residual(G, p)) for p in G.prime_divisors), default=a
    )
    return LoBounds(lower, upper, lower == upper)


def fix_pushforward(G, H, f):
    """The class function gH -> (1/|H|) sum_{h in H} f(gh) on G/H.

    Exact when ``f`` has int or Fraction values.
    """
    Q = normal_quotient(G, H)
    kernel = list(H.elements)
    values = []
    for c in Q.conjugacy_classes():
        representative = Q.representatives[c.representative]
        counts = [0] * G.class_count
        for n in kernel:
            counts[G.class_of(compose(n, representative))] += 1
        values.append(f.average_over(counts, H.order))
    name = "Fix^{}({})".format(H.order, f.name) if f.name else None
    return ClassFunction(Q, values, name)


def fix_rank_oracle(G, H):
    """rank over Q of the pushforwards of the NPP real class indicators"""
    rows = []
    for c in G.real_classes():
        if not c.is_npp:
            continue
        indicator = ClassFunction(
            G, [1 if i in c.class_indices else 0 for i in range(G.class_count)]
        )
        rows.append(fix_pushforward(G, H, indicator).values)
    return rational_rank(rows)


class InvariantReport(object):
    """a_G, the b table over normal subgroups, the IO ranks and LO bounds of a group"""

    def __init__(self, group, order, a_g, npp_orders, b_table, rank_io, rank_io_gg, lo):
        self.group = group
        self.order = order
        self.a_g = a_g
        self.npp_orders = npp_orders
        self.b_table = b_table
        self.rank_io = rank_io
        self.rank_io_gg = rank_io_gg
        self.lo_lower = lo.lower
        self.lo_upper = lo.upper
        self.lo_exact = lo.exact

    def __repr__(self):
        return "<InvariantReport {} a_G={}>".format(self.group, self.a_g)

    def sandwich_holds(self):
        return all(self.a_g >= row.b >= row.a_quotient for row in self.b_table)

    def oracle_agrees(self):
        return all(row.oracle is None or row.oracle == row.b for row in self.b_table)

    def to_dict(self):
        return {
            "group": self.group,
            "order": self.order,
            "a_g": self.a_g,
            "npp_orders": list(self.npp_orders),
            "b_table": [
                {"order": row.order, "b": row.b, "rank_io_gh": row.rank, "a_quotient": row.a_quotient}
                for row in self.b_table
            ],
            "ranks": {"io": self.rank_io, "io_gg": self.rank_io_gg},
            "lo_bounds": [self.lo_lower, self.lo_upper],
        }


def invariant_report(G, with_oracle=True):
    a = laitinen_number(G)
    rows = []
    for H in normal_subgroups(G):
        b = b_invariant(G, H)
        oracle = fix_rank_oracle(G, H) if with_oracle else None
        if oracle is not None and oracle != b:
            logger.warning(
                "%s: b_{G/H} = %d but the Fix rank is %d for |H| = %d",
                G.name,
                b,
                oracle,
                H.order,
            )
        rows.append(BRow(H.order, b, a - b, quotient_laitinen_number(G, H), oracle))
    report = InvariantReport(
        G.name,
        G.order,
        a,
        npp_orders(G),
        rows,
        rank(G, RANK.IO),
        rank(G, RANK.IO_GG),
        lo_rank_bounds(G),
    )
    logger.info("%s: a_G = %d, %d normal subgroups", G.name, a, len(rows))
    return report
