"""Subgroups, normal subgroups and the characteristic subgroups of a group.

Normal subgroups are handled as sets of parent class indices. The normal
closure of a class set is its closure under class multiplication; abelian
groups, where every class is a single element, are closed by cosets instead.
"""

__all__ = [
    "subgroup",
    "subgroup_intersection",
    "normal_product",
    "normal_closure",
    "normal_closure_classes",
    "normal_subgroups",
    "residual",
    "op_residual",
    "derived_subgroup",
    "derived_series",
    "lower_central_series",
    "is_nilpotent_section",
    "coset_order",
    "fitting",
    "fitting2",
    "sylow_subgroup",
    "largest_normal_p_subgroup",
    "normalizer",
    "centralizer",
    "center",
    "quotient_group",
    "structure",
    "fingerprint",
]

import logging

from sympy import isprime, primefactors

from grpinv.core.common import RESIDUAL, STRUCTURE, GroupComputationError, NotNormal
from grpinv.perm.group import SubgroupRef, extend_subgroup
from grpinv.perm.permutation import commutator, compose, inverse
from grpinv.perm.quotient import QuotientGroup

logger = logging.getLogger(__name__)


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _as_group(X):
    return X.as_group() if isinstance(X, SubgroupRef) else X


def subgroup(G, gens, name=None):
    return SubgroupRef(G, generators=list(gens), name=name)


def subgroup_intersection(A, B):
    if A.parent is not B.parent:
        raise ValueError("subgroups of different groups")
    return SubgroupRef(A.parent, elements=A.elements & B.elements)


def normal_product(A, N):
    """A·N for N normal in the parent"""
    G = N.parent
    if not N.is_normal:
        raise NotNormal(G.name, N.order)
    product = SubgroupRef(G, generators=list(A.generators) + list(N.generators))
    expected = A.order * N.order // subgroup_intersection(A, N).order
    if product.order != expected:
        raise GroupComputationError(
            "|AN| = {} but |A||N|/|A^N| = {}".format(product.order, expected)
        )
    return product


# -- class-level closures ------------------------------------------------------


def _close_abelian(G, seed, closed):
    classes = G.conjugacy_classes()
    elements = set(classes[i].representative for i in closed) or {G.identity}
    elements.add(G.identity)
    for i in sorted(seed):
        x = classes[i].representative
        if x in elements:
            continue
        base = list(elements)
        y = x
        while y not in elements:
            elements.update(compose(m, y) for m in base)
            y = compose(y, x)
    return frozenset(G.class_of(x) for x in elements)


def _close_by_products(G, seed, closed):
    result = set(closed)
    result.add(0)
    pending = [i for i in seed if i not in result]
    result.update(pending)
    while pending:
        i = pending.pop()
        for j in list(result):
            for c in G.class_product(i, j):
                if c not in result:
                    result.add(c)
                    pending.append(c)
    return frozenset(result)


def normal_closure_classes(G, seed, closed=frozenset()):
    """Class set of the normal subgroup generated by the classes in ``seed``.

    ``closed`` may name a class set already known to form a normal subgroup.
    """
    seed = frozenset(seed) | closed
    if G.class_count == G.order:
        return _close_abelian(G, seed, closed)
    return _close_by_products(G, seed, closed)


def normal_closure(G, elements):
    return SubgroupRef(
        G, class_set=normal_closure_classes(G, {G.class_of(x) for x in elements})
    )


def _order_of(G, class_set):
    sizes = G.class_sizes
    return sum(sizes[i] for i in class_set)


def normal_subgroups(G, containing=None):
    """All normal subgroups (optionally those containing ``containing``), by order."""
    base = containing.class_set if containing is not None else frozenset([0])

    def compute():
        bottom = normal_closure_classes(G, base)
        singles = set()
        for i in range(G.class_count):
            if i not in bottom:
                singles.add(normal_closure_classes(G, {i}, bottom))
        singles = sorted(singles, key=lambda s: (_order_of(G, s), sorted(s)))
        found = {bottom}
        joins = {}
        for N in singles:
            for M in list(found):
                if N <= M:
                    continue
                key = M | N
                if key not in joins:
                    joins[key] = normal_closure_classes(G, N, M)
                found.add(joins[key])
        ordered = sorted(found, key=lambda s: (_order_of(G, s), sorted(s)))
        logger.debug("%s: %d normal subgroups", G.name, len(ordered))
        return [SubgroupRef(G, class_set=s) for s in ordered]

    return G.cached(("normal_subgroups", base), compute)


# -- residuals -----------------------------------------------------------------


def op_residual(G, p):
    """O^p(G): generated by the elements of order prime to p"""

    def compute():
        seed = {c.index for c in G.conjugacy_classes() if c.element_order % p}
        return SubgroupRef(G, class_set=normal_closure_classes(G, seed))

    return G.cached(("op", p), compute)


def derived_subgroup(G, N=None):
    """[N, N] for a normal subgroup N (G itself by default), as a normal subgroup of G"""
    gens = G.generators if N is None else N.generators
    seed = set()
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            seed.add(G.class_of(commutator(a, b)))
    return SubgroupRef(G, class_set=normal_closure_classes(G, seed))


def derived_series(G):
    def compute():
        series = [SubgroupRef(G, class_set=range(G.class_count), name=G.name)]
        while True:
            following = derived_subgroup(G, series[-1])
            if following.class_set == series[-1].class_set:
                return series
            series.append(following)

    return G.cached("derived_series", compute)


def lower_central_series(G):
    def compute():
        series = [SubgroupRef(G, class_set=range(G.class_count), name=G.name)]
        while True:
            seed = {
                G.class_of(commutator(x, g))
                for x in series[-1].generators
                for g in G.generators
            }
            following = SubgroupRef(G, class_set=normal_closure_classes(G, seed))
            if following.class_set == series[-1].class_set:
                return series
            series.append(following)

    return G.cached("lower_central_series", compute)


def residual(G, kind, p=None):
    if kind == RESIDUAL.OP:
        if p is None or not isprime(p):
            raise ValueError("O^p needs a prime p, got {!r}".format(p))
        return op_residual(G, p)
    if kind == RESIDUAL.SOLVABLE:
        return derived_series(G)[-1]
    if kind == RESIDUAL.NILPOTENT:

        def compute():
            classes = frozenset(range(G.class_count))
            for q in G.prime_divisors:
                classes &= op_residual(G, q).class_set
            solvable = derived_series(G)[-1].class_set
            assert solvable <= classes, "solvable residual not inside nilpotent residual"
            return SubgroupRef(G, class_set=classes)

        return G.cached("nilpotent_residual", compute)
    raise ValueError("unknown residual kind {!r}".format(kind))


# -- nilpotency and Fitting subgroups -------------------------------------------


def coset_order(G, x, lower):
    """order of x modulo the normal subgroup with class set ``lower``"""
    y = x
    k = 1
    while G.class_of(y) not in lower:
        y = compose(y, x)
        k += 1
    return k


def is_nilpotent_section(G, upper, lower=frozenset([0])):
    """Whether upper/lower is nilpotent (both given as normal class sets).

    A finite group is nilpotent iff for each prime the elements of p-power
    order number exactly the p-part of the order.
    """
    classes = G.conjugacy_classes()
    lower_order = _order_of(G, lower)
    index = _order_of(G, upper) // lower_order
    for p in primefactors(index):
        count = sum(
            len(classes[i].members)
            for i in upper
            if _is_p_power(coset_order(G, classes[i].representative, lower), p)
        )
        p_part = 1
        while index % (p_part * p) == 0:
            p_part *= p
        if count != p_part * lower_order:
            return False
    return True


def fitting(G):
    """F(G), the largest nilpotent normal subgroup"""

    def compute():
        nilpotent = [N for N in normal_subgroups(G) if is_nilpotent_section(G, N.class_set)]
        best = max(nilpotent, key=lambda N: N.order)
        for N in nilpotent:
            if not N.class_set <= best.class_set:
                raise GroupComputationError(
                    "{}: nilpotent normal subgroup of order {} outside F(G)".format(
                        G.name, N.order
                    )
                )
        best.name = "F({})".format(G.name)
        return best

    return G.cached("fitting", compute)


def fitting2(G):
    """F²(G), the preimage of F(G/F(G))"""

    def compute():
        F = fitting(G)
        over = [
            M
            for M in normal_subgroups(G, containing=F)
            if is_nilpotent_section(G, M.class_set, F.class_set)
        ]
        best = max(over, key=lambda M: M.order)
        if not all(M.class_set <= best.class_set for M in over):
            raise GroupComputationError("{}: F2 is not unique".format(G.name))
        best.name = "F2({})".format(G.name)
        return best

    return G.cached("fitting2", compute)


# -- Sylow subgroups, normalizers, centralizers --------------------------------


def sylow_subgroup(G, p):
    """A Sylow p-subgroup, grown one normalizing p-element at a time."""

    def compute():
        target = G.p_part(p)
        elements = {G.identity}
        gens = []
        p_elements = [
            x
            for c in sorted(
                G.conjugacy_classes(), key=lambda c: (-c.element_order, c.index)
            )
            if c.element_order > 1 and _is_p_power(c.element_order, p)
            for x in sorted(c.members)
        ]
        while len(elements) < target:
            extension = None
            for x in p_elements:
                if x in elements:
                    continue
                x_inv = inverse(x)
                if all(compose(compose(x_inv, s), x) in elements for s in gens):
                    extension = x
                    break
            if extension is None:
                raise GroupComputationError(
                    "{}: p-subgroup of order {} cannot be extended".format(
                        G.name, len(elements)
                    )
                )
            gens.append(extension)
            elements = extend_subgroup(elements, gens, extension)
            if not _is_p_power(len(elements), p):
                raise GroupComputationError(
                    "{}: extension left the p-subgroups".format(G.name)
                )
        return SubgroupRef(
            G, generators=gens, elements=elements, name="Syl{}({})".format(p, G.name)
        )

    return G.cached(("sylow", p), compute)


def largest_normal_p_subgroup(G, p):
    """O_p(G), the core of a Sylow p-subgroup"""

    def compute():
        core = set(sylow_subgroup(G, p).elements)
        conjugators = [(g, inverse(g)) for g in G.generators]
        changed = True
        while changed:
            changed = False
            for g, g_inv in conjugators:
                kept = {x for x in core if compose(compose(g_inv, x), g) in core}
                if len(kept) != len(core):
                    core = kept
                    changed = True
        return SubgroupRef(G, elements=core, name="O_{}({})".format(p, G.name))

    return G.cached(("o_p", p), compute)


def normalizer(G, S):
    gens = S.generators
    members = S.elements
    elements = [
        g
        for g in G.elements
        if all(compose(compose(inverse(g), s), g) in members for s in gens)
    ]
    return SubgroupRef(G, elements=elements)


def centralizer(G, x):
    """centralizer of an element, or of a SubgroupRef through its generators"""
    targets = x.generators if isinstance(x, SubgroupRef) else [tuple(x)]
    elements = [
        g for g in G.elements if all(compose(g, t) == compose(t, g) for t in targets)
    ]
    return SubgroupRef(G, elements=elements)


def center(G):
    return SubgroupRef(
        G, class_set=[c.index for c in G.conjugacy_classes() if len(c.members) == 1]
    )


def quotient_group(G, N):
    return QuotientGroup(G, N)


# -- structure predicates ------------------------------------------------------


def structure(X, predicate, p=None):
    G = _as_group(X)
    if predicate == STRUCTURE.CYCLIC:
        return G.order in G.class_orders
    if predicate == STRUCTURE.ABELIAN:
        return G.is_abelian()
    if predicate == STRUCTURE.NILPOTENT:
        return all(
            sylow_subgroup(G, q).is_normal for q in G.prime_divisors
        )
    if predicate == STRUCTURE.SOLVABLE:
        return derived_series(G)[-1].order == 1
    if predicate == STRUCTURE.PERFECT:
        return derived_subgroup(G).order == G.order
    if predicate == STRUCTURE.P_GROUP:
        return _is_p_power(G.order, p)
    if predicate == STRUCTURE.ELEMENTARY_ABELIAN:
        return (
            _is_p_power(G.order, p)
            and G.is_abelian()
            and all(order in (1, p) for order in G.class_orders)
        )
    raise ValueError("unknown structure predicate {!r}".format(predicate))


def fingerprint(G):
    """isomorphism invariants standing in for an isomorphism test"""
    series = derived_series(G)
    return {
        "order": G.order,
        "histogram": G.order_histogram(),
        "class_sizes": tuple(sorted(G.class_sizes)),
        "center_order": center(G).order,
        "derived_length": len(series) - 1 if series[-1].order == 1 else None,
    }
