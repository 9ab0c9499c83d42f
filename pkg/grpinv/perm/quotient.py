__all__ = ["QuotientGroup", "QuotientClass"]

import logging
import random
import threading
from collections import namedtuple

from grpinv.core.common import CapExceeded, GroupComputationError, NotNormal
from grpinv.core.config import get_config
from grpinv.perm.group import FiniteGroup, _is_npp
from grpinv.perm.permutation import compose, inverse

# cosets: frozenset of coset indices; class_indices: base classes mapping onto it
QuotientClass = namedtuple(
    "QuotientClass",
    ["index", "representative", "cosets", "element_order", "is_npp", "class_indices"],
)


class _Partition(object):
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, i):
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)

    def groups(self):
        result = {}
        for i in range(len(self.parent)):
            result.setdefault(self.find(i), []).append(i)
        return list(result.values())


class QuotientGroup(object):
    """G/N as right cosets Nx of a normal subgroup N.

    Cosets are numbered by their smallest element. Classes of the quotient are
    obtained by fusing base classes whose images share a coset; the coset
    action itself is only realized as a permutation group on request.
    """

    def __init__(self, base, kernel, name=None):
        if kernel.parent is not base or not kernel.is_normal:
            raise NotNormal(base.name, kernel.order)
        self.base = base
        self.kernel = kernel
        self.name = name or "{}/{}".format(base.name, kernel.order)
        self.__lock = threading.RLock()
        self.__logger = logging.getLogger(__name__)
        self._coset_of = {}
        self._representatives = []
        self._classes = None
        self._real_classes = None
        self._class_of = None
        self._group = None
        self.__build_cosets()

    def __repr__(self):
        return "<QuotientGroup {} order={}>".format(self.name, self.order)

    def __build_cosets(self):
        kernel = list(self.kernel.elements)
        coset_of = self._coset_of
        for x in self.base.elements:
            if x in coset_of:
                continue
            index = len(self._representatives)
            self._representatives.append(x)
            for n in kernel:
                coset_of[compose(n, x)] = index
        if len(self._representatives) * len(kernel) != self.base.order:
            raise GroupComputationError(
                "cosets of {} do not partition {}".format(self.kernel, self.base.name)
            )
        self.__logger.debug("%s: %d cosets", self.name, len(self._representatives))

    @property
    def order(self):
        return len(self._representatives)

    @property
    def representatives(self):
        return list(self._representatives)

    def projection(self, g):
        return self._coset_of[tuple(g)]

    def multiply(self, c1, c2):
        return self._coset_of[
            compose(self._representatives[c1], self._representatives[c2])
        ]

    def coset_order(self, g):
        """smallest k >= 1 with g**k in the kernel"""
        kernel = self.kernel.elements
        y = tuple(g)
        k = 1
        while y not in kernel:
            y = compose(y, g)
            k += 1
        return k

    def check_homomorphism(self, samples=1000, seed=None):
        """projection(a*b) == projection(a)projection(b) on generator and random pairs"""
        if seed is None:
            seed = get_config().random_seed
        rng = random.Random(seed)
        elements = self.base.elements
        pairs = [(a, b) for a in self.base.generators for b in self.base.generators]
        pairs.extend(
            (rng.choice(elements), rng.choice(elements)) for _ in range(samples)
        )
        for a, b in pairs:
            if self.projection(compose(a, b)) != self.multiply(
                self.projection(a), self.projection(b)
            ):
                return False
        return True

    # -- classes -----------------------------------------------------------

    def __fuse(self, with_inverses):
        base = self.base
        classes = base.conjugacy_classes()
        partition = _Partition(len(classes))
        owner = {}
        for c in classes:
            if with_inverses:
                partition.union(c.index, base.inverse_class(c.index))
            for x in c.members:
                coset = self._coset_of[x]
                if coset in owner:
                    partition.union(c.index, owner[coset])
                else:
                    owner[coset] = c.index
        decorated = []
        for group in partition.groups():
            cosets = frozenset(
                self._coset_of[x] for i in group for x in classes[i].members
            )
            representative = min(cosets)
            order = self.coset_order(self._representatives[representative])
            decorated.append((order, len(cosets), representative, cosets, tuple(group)))
        decorated.sort(key=lambda d: d[:3])
        return [
            QuotientClass(i, rep, cosets, order, _is_npp(order), group)
            for i, (order, _, rep, cosets, group) in enumerate(decorated)
        ]

    def conjugacy_classes(self):
        with self.__lock:
            if self._classes is None:
                self._classes = self.__fuse(with_inverses=False)
            return self._classes

    def real_classes(self):
        with self.__lock:
            if self._real_classes is None:
                self._real_classes = self.__fuse(with_inverses=True)
            return self._real_classes

    def class_of(self, coset):
        """conjugacy class index of a coset index"""
        with self.__lock:
            if self._class_of is None:
                self._class_of = {
                    coset: c.index for c in self.conjugacy_classes() for coset in c.cosets
                }
            return self._class_of[coset]

    @property
    def class_count(self):
        return len(self.conjugacy_classes())

    @property
    def class_sizes(self):
        return [len(c.cosets) for c in self.conjugacy_classes()]

    def inverse_class(self, i):
        representative = self._representatives[self.conjugacy_classes()[i].representative]
        return self.class_of(self._coset_of[inverse(representative)])

    def order_histogram(self):
        histogram = {}
        for c in self.conjugacy_classes():
            histogram[c.element_order] = histogram.get(c.element_order, 0) + len(
                c.cosets
            )
        return dict(sorted(histogram.items()))

    def laitinen_number(self):
        return sum(1 for c in self.real_classes() if c.is_npp)

    # -- realization -------------------------------------------------------

    @property
    def group(self):
        """the quotient as a permutation group on the cosets"""
        with self.__lock:
            if self._group is None:
                cap = get_config().quotient_degree_cap
                if self.order > cap:
                    raise CapExceeded(self.name, cap, self.order)
                generators = []
                for g in self.base.generators:
                    generators.append(
                        tuple(
                            self._coset_of[compose(rep, g)]
                            for rep in self._representatives
                        )
                    )
                self._group = FiniteGroup(
                    generators, degree=self.order, name=self.name
                )
                if self._group.order != self.order:
                    raise GroupComputationError(
                        "coset action of {} has order {}".format(
                            self.name, self._group.order
                        )
                    )
            return self._group
