__all__ = [
    "FiniteGroup",
    "SubgroupRef",
    "ConjugacyClass",
    "RealClass",
    "close_subgroup",
    "extend_subgroup",
    "greedy_generators",
]

import logging
import threading
from collections import namedtuple
from math import gcd

from sympy import primefactors

from grpinv.core.common import CapExceeded
from grpinv.core.config import get_config
from grpinv.perm.permutation import compose, element_order, identity, inverse

ConjugacyClass = namedtuple(
    "ConjugacyClass", ["index", "representative", "members", "element_order"]
)
RealClass = namedtuple(
    "RealClass",
    [
        "index",
        "representative",
        "members",
        "element_order",
        "is_npp",
        "class_indices",
    ],
)

logger = logging.getLogger(__name__)


def _is_npp(order):
    return len(primefactors(order)) >= 2


def extend_subgroup(elements, generators, new, cap=None, name=None):
    """Closure of ``elements`` (closed under ``generators``) with ``new`` added.

    ``generators`` must already contain ``new``. Returns a new set.
    """
    result = set(elements)
    frontier = []
    for e in elements:
        y = compose(e, new)
        if y not in result:
            result.add(y)
            frontier.append(y)
    while frontier:
        if cap is not None and len(result) > cap:
            raise CapExceeded(name, cap, len(result))
        following = []
        for e in frontier:
            for g in generators:
                y = compose(e, g)
                if y not in result:
                    result.add(y)
                    following.append(y)
        frontier = following
    if cap is not None and len(result) > cap:
        raise CapExceeded(name, cap, len(result))
    return result


def close_subgroup(generators, degree, cap=None, name=None):
    elements = {identity(degree)}
    gens = []
    for g in generators:
        if g in elements:
            continue
        gens.append(g)
        elements = extend_subgroup(elements, gens, g, cap, name)
    return elements


def greedy_generators(elements, degree, candidates=None, target=None):
    """A short generating list for the subgroup formed by ``elements``.

    Candidates are tried in the given order (sorted elements by default);
    an element is kept only when it is not yet generated.
    """
    if target is None:
        target = len(elements)
    current = {identity(degree)}
    gens = []
    for x in candidates if candidates is not None else sorted(elements):
        if len(current) >= target:
            break
        if x in current:
            continue
        gens.append(x)
        current = extend_subgroup(current, gens, x)
    return gens, current


class FiniteGroup(object):
    """A permutation group given by generators.

    Elements, classes and derived tables are computed on first use and then
    never change.
    """

    def __init__(
        self, generators, degree=None, name=None, labels=(), cap=None, elements=None
    ):
        generators = [tuple(g) for g in generators]
        if degree is None:
            if not generators:
                raise ValueError("degree required for a group without generators")
            degree = len(generators[0])
        for g in generators:
            if len(g) != degree:
                raise ValueError(
                    "generator of degree {} in a group of degree {}".format(
                        len(g), degree
                    )
                )
        self.degree = degree
        self.generators = generators
        self.name = name or "G"
        self.labels = tuple(labels)
        self.cap = cap
        self.metadata = {}
        self.__lock = threading.RLock()
        self.__logger = logging.getLogger(__name__)
        self._elements = sorted(elements) if elements is not None else None
        self._index = None
        self._classes = None
        self._class_of = None
        self._real_classes = None
        self._inverse_class = None
        self._products = {}
        self._power_maps = {}
        self._cache = {}

    def __repr__(self):
        return "<FiniteGroup {} degree={}>".format(self.name, self.degree)

    def __str__(self):
        return self.name

    # -- enumeration -------------------------------------------------------

    def enumerate(self):
        with self.__lock:
            if self._elements is None:
                cap = self.cap if self.cap is not None else get_config().element_cap
                self.__logger.debug("Enumerating %s (cap %d)", self.name, cap)
                elements = close_subgroup(self.generators, self.degree, cap, self.name)
                self._elements = sorted(elements)
                self.__logger.info("%s has order %d", self.name, len(self._elements))
            if self._index is None:
                self._index = {g: i for i, g in enumerate(self._elements)}
            return self._elements

    @property
    def elements(self):
        return self.enumerate()

    @property
    def order(self):
        return len(self.enumerate())

    @property
    def identity(self):
        return identity(self.degree)

    def contains(self, g):
        self.enumerate()
        return tuple(g) in self._index

    __contains__ = contains

    def index_of(self, g):
        self.enumerate()
        return self._index[tuple(g)]

    @property
    def prime_divisors(self):
        return primefactors(self.order)

    def p_part(self, p):
        n = self.order
        result = 1
        while n % p == 0:
            n //= p
            result *= p
        return result

    # -- classes -----------------------------------------------------------

    def conjugacy_classes(self):
        with self.__lock:
            if self._classes is None:
                self.__compute_classes()
            return self._classes

    def __compute_classes(self):
        elements = self.enumerate()
        conjugators = [(g, inverse(g)) for g in self.generators]
        placed = set()
        orbits = []
        for x in elements:
            if x in placed:
                continue
            placed.add(x)
            orbit = [x]
            frontier = [x]
            while frontier:
                following = []
                for y in frontier:
                    for g, g_inv in conjugators:
                        z = compose(compose(g_inv, y), g)
                        if z not in placed:
                            placed.add(z)
                            orbit.append(z)
                            following.append(z)
                frontier = following
            orbits.append(orbit)
        decorated = []
        for orbit in orbits:
            representative = min(orbit)
            decorated.append(
                (element_order(representative), len(orbit), representative, orbit)
            )
        decorated.sort(key=lambda d: (d[0], d[1], d[2]))
        classes = []
        class_of = {}
        for i, (order, _, representative, orbit) in enumerate(decorated):
            classes.append(ConjugacyClass(i, representative, frozenset(orbit), order))
            for y in orbit:
                class_of[y] = i
        self._classes = classes
        self._class_of = class_of
        self._inverse_class = [
            class_of[inverse(c.representative)] for c in classes
        ]
        self.__logger.debug("%s has %d conjugacy classes", self.name, len(classes))

    def class_of(self, g):
        self.conjugacy_classes()
        return self._class_of[tuple(g)]

    @property
    def class_count(self):
        return len(self.conjugacy_classes())

    @property
    def class_sizes(self):
        return [len(c.members) for c in self.conjugacy_classes()]

    @property
    def class_orders(self):
        return [c.element_order for c in self.conjugacy_classes()]

    def inverse_class(self, i):
        self.conjugacy_classes()
        return self._inverse_class[i]

    def real_classes(self):
        with self.__lock:
            if self._real_classes is None:
                classes = self.conjugacy_classes()
                pairs = sorted(
                    {tuple(sorted((c.index, self._inverse_class[c.index]))) for c in classes}
                )
                decorated = []
                for pair in pairs:
                    members = frozenset().union(*(classes[i].members for i in pair))
                    representative = min(classes[i].representative for i in pair)
                    order = classes[pair[0]].element_order
                    decorated.append((order, len(members), representative, members, pair))
                decorated.sort(key=lambda d: (d[0], d[1], d[2]))
                real = []
                for i, (order, _, representative, members, pair) in enumerate(decorated):
                    real.append(
                        RealClass(i, representative, members, order, _is_npp(order), pair)
                    )
                self._real_classes = real
            return self._real_classes

    def power_map(self, k):
        """class index of rep**k for every class"""
        with self.__lock:
            if k not in self._power_maps:
                result = []
                for c in self.conjugacy_classes():
                    y = self.identity
                    for _ in range(k % c.element_order):
                        y = compose(y, c.representative)
                    result.append(self._class_of[y])
                self._power_maps[k] = result
            return self._power_maps[k]

    def class_product(self, i, j):
        """set of classes meeting C_i * C_j"""
        key = (i, j) if i <= j else (j, i)
        with self.__lock:
            products = self._products.get(key)
            if products is None:
                classes = self.conjugacy_classes()
                small, large = sorted(key, key=lambda c: len(classes[c].members))
                target = classes[large].representative
                class_of = self._class_of
                products = frozenset(
                    class_of[compose(x, target)] for x in classes[small].members
                )
                self._products[key] = products
            return products

    @property
    def exponent(self):
        result = 1
        for order in self.class_orders:
            result = result * order // gcd(result, order)
        return result

    def order_histogram(self):
        histogram = {}
        for c in self.conjugacy_classes():
            histogram[c.element_order] = histogram.get(c.element_order, 0) + len(
                c.members
            )
        return dict(sorted(histogram.items()))

    def is_abelian(self):
        gens = self.generators
        for i, a in enumerate(gens):
            for b in gens[i + 1 :]:
                if compose(a, b) != compose(b, a):
                    return False
        return True

    def fingerprint(self):
        from grpinv.perm.subgroups import fingerprint

        return fingerprint(self)

    def cached(self, key, factory):
        """memoize a derived object (residuals, tables) on this group"""
        with self.__lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]


class SubgroupRef(object):
    """A subgroup of a fixed parent group.

    Built either from generators (closure inside the parent), from an
    element set, or, for normal subgroups, from the set of parent classes it
    is the union of.
    """

    def __init__(self, parent, generators=None, elements=None, class_set=None, name=None):
        self.parent = parent
        self.name = name
        self._generators = [tuple(g) for g in generators] if generators is not None else None
        self._class_set = frozenset(class_set) if class_set is not None else None
        self._is_normal = True if class_set is not None else None
        self._group = None
        if elements is not None:
            self._elements = frozenset(elements)
        elif class_set is not None:
            classes = parent.conjugacy_classes()
            self._elements = frozenset().union(*(classes[i].members for i in class_set))
        elif self._generators is not None:
            for g in self._generators:
                if not parent.contains(g):
                    raise ValueError("generator {} not in {}".format(g, parent.name))
            self._elements = frozenset(
                close_subgroup(self._generators, parent.degree, name=parent.name)
            )
        else:
            raise ValueError("a subgroup needs generators, elements or classes")

    def __repr__(self):
        return "<SubgroupRef order={} of {}>".format(self.order, self.parent.name)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, g):
        return tuple(g) in self._elements

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupRef)
            and self.parent is other.parent
            and self._elements == other._elements
        )

    def __hash__(self):
        return hash(self._elements)

    contains = __contains__

    @property
    def elements(self):
        return self._elements

    @property
    def order(self):
        return len(self._elements)

    @property
    def index(self):
        return self.parent.order // self.order

    @property
    def generators(self):
        if self._generators is None:
            if self.order == self.parent.order:
                self._generators = list(self.parent.generators)
            else:
                candidates = None
                if self._class_set is not None:
                    classes = self.parent.conjugacy_classes()
                    candidates = [
                        x
                        for i in sorted(self._class_set, key=lambda c: -classes[c].element_order)
                        for x in sorted(classes[i].members)
                    ]
                self._generators, _ = greedy_generators(
                    self._elements, self.parent.degree, candidates
                )
        return self._generators

    @property
    def is_normal(self):
        if self._is_normal is None:
            self._is_normal = all(
                compose(compose(inverse(g), h), g) in self._elements
                for g in self.parent.generators
                for h in self.generators
            )
        return self._is_normal

    @property
    def class_set(self):
        """parent class indices covered; only meaningful for normal subgroups"""
        if self._class_set is None:
            self._class_set = frozenset(self.parent.class_of(x) for x in self._elements)
        return self._class_set

    def as_group(self, name=None):
        if self.order == self.parent.order:
            return self.parent
        if self._group is None:
            label = name or self.name or "{}<{}>".format(self.parent.name, self.order)
            self._group = FiniteGroup(
                self.generators,
                degree=self.parent.degree,
                name=label,
                elements=self._elements,
            )
        return self._group
