#!/usr/bin/env py.test -v

# built-in python libraries

# third-party libraries (install with pip)
import pytest

# local libraries
from common_fixtures import catalog, default_config
from grpinv.catalog.constructors import (
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    symmetric,
)
from grpinv.core.common import RESIDUAL, STRUCTURE, CapExceeded, NotNormal
from grpinv.perm.group import FiniteGroup, SubgroupRef
from grpinv.perm.quotient import QuotientGroup
from grpinv.perm.subgroups import (
    center,
    centralizer,
    derived_series,
    fingerprint,
    fitting,
    fitting2,
    largest_normal_p_subgroup,
    lower_central_series,
    normal_closure,
    normal_product,
    normal_subgroups,
    normalizer,
    op_residual,
    quotient_group,
    residual,
    structure,
    subgroup,
    sylow_subgroup,
)

# (constructor, argument, order, class sizes, element orders of the classes)
CLASS_DATA = (
    (symmetric, 3, 6, [1, 3, 2], [1, 2, 3]),
    (symmetric, 4, 24, [1, 3, 6, 8, 6], [1, 2, 2, 3, 4]),
    (alternating, 4, 12, [1, 3, 4, 4], [1, 2, 3, 3]),
    (cyclic, 5, 5, [1, 1, 1, 1, 1], [1, 5, 5, 5, 5]),
    (dihedral, 4, 8, [1, 1, 2, 2, 2], [1, 2, 2, 2, 4]),
)

NORMAL_COUNTS = (
    (symmetric, 3, [1, 3, 6]),
    (symmetric, 4, [1, 4, 12, 24]),
    (alternating, 4, [1, 4, 12]),
    (alternating, 5, [1, 60]),
    (cyclic, 6, [1, 2, 3, 6]),
)


@pytest.fixture
def S3(default_config):
    return symmetric(3)


@pytest.fixture
def S4(default_config):
    return symmetric(4)


@pytest.mark.parametrize(("family", "n", "order", "sizes", "orders"), CLASS_DATA)
def test_conjugacy_classes(default_config, family, n, order, sizes, orders):
    G = family(n)
    assert G.order == order
    assert G.class_sizes == sizes
    assert G.class_orders == orders
    assert G.conjugacy_classes()[0].representative == G.identity


@pytest.mark.parametrize(("family", "n", "orders"), NORMAL_COUNTS)
def test_normal_subgroups(default_config, family, n, orders):
    G = family(n)
    normals = normal_subgroups(G)
    assert [N.order for N in normals] == orders
    assert normals[-1].order == G.order
    assert all(N.is_normal for N in normals)


class TestFiniteGroup:
    def test_elements_and_membership(self, S3):
        assert len(S3.elements) == 6
        assert (1, 0, 2) in S3
        assert S3.contains((2, 0, 1))
        assert S3.index_of(S3.identity) == 0

    def test_cap(self, default_config):
        G = FiniteGroup(symmetric(6).generators, degree=6, name="S6", cap=100)
        with pytest.raises(CapExceeded):
            G.order

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            FiniteGroup([(1, 0), (1, 2, 0)])

    def test_trivial_group_needs_degree(self):
        with pytest.raises(ValueError):
            FiniteGroup([])

    def test_real_classes(self, default_config):
        Z5 = cyclic(5)
        real = Z5.real_classes()
        assert [len(c.members) for c in real] == [1, 2, 2]
        assert not any(c.is_npp for c in real)
        Z6 = cyclic(6)
        assert [c.element_order for c in Z6.real_classes() if c.is_npp] == [6]

    def test_power_map(self, S3):
        assert S3.power_map(2) == [0, 0, 2]
        assert S3.power_map(3) == [0, 1, 0]

    def test_inverse_class(self, default_config):
        Z3 = cyclic(3)
        assert [Z3.inverse_class(i) for i in range(3)] == [0, 2, 1]

    def test_class_product(self, S3):
        # transposition * transposition lands in 1 or the 3-cycles
        assert S3.class_product(1, 1) == frozenset([0, 2])

    def test_histogram_and_exponent(self, S4):
        assert S4.order_histogram() == {1: 1, 2: 9, 3: 8, 4: 6}
        assert S4.exponent == 12
        assert S4.prime_divisors == [2, 3]
        assert S4.p_part(2) == 8

    def test_abelian(self, S3):
        assert not S3.is_abelian()
        assert elementary_abelian(2, 3).is_abelian()

    def test_cached(self, S3):
        calls = []
        factory = lambda: calls.append(1) or len(calls)
        assert S3.cached("key", factory) == 1
        assert S3.cached("key", factory) == 1
        assert len(calls) == 1


class TestSubgroupRef:
    def test_generated(self, S4):
        H = SubgroupRef(S4, generators=[(1, 2, 3, 0)])
        assert H.order == 4
        assert H.index == 6
        assert not H.is_normal

    def test_generator_outside_parent(self, default_config):
        A4 = alternating(4)
        with pytest.raises(ValueError):
            SubgroupRef(A4, generators=[(1, 0, 2, 3)])

    def test_class_set_round_trip(self, S4):
        V4 = normal_subgroups(S4)[1]
        assert V4.class_set == frozenset([0, 1])
        rebuilt = SubgroupRef(S4, elements=V4.elements)
        assert rebuilt == V4
        assert rebuilt.class_set == V4.class_set
        assert rebuilt.is_normal

    def test_as_group(self, S4):
        A4 = normal_subgroups(S4)[2]
        G = A4.as_group()
        assert G.order == 12
        assert G.class_sizes == [1, 3, 4, 4]
        assert normal_subgroups(S4)[-1].as_group() is S4

    def test_needs_something(self, S3):
        with pytest.raises(ValueError):
            SubgroupRef(S3)


class TestSubgroups:
    def test_series(self, S4):
        assert [N.order for N in derived_series(S4)] == [24, 12, 4, 1]
        assert [N.order for N in lower_central_series(S4)] == [24, 12]

    def test_residuals(self, S4):
        assert op_residual(S4, 2).order == 12
        assert op_residual(S4, 3).order == 24
        assert residual(S4, RESIDUAL.SOLVABLE).order == 1
        assert residual(S4, RESIDUAL.NILPOTENT).order == 12
        assert residual(S4, RESIDUAL.OP, 3).order == 24

    def test_residual_bad_prime(self, S4):
        with pytest.raises(ValueError):
            residual(S4, RESIDUAL.OP, 4)
        with pytest.raises(ValueError):
            residual(S4, "BOGUS")

    def test_fitting(self, S4):
        assert fitting(S4).order == 4
        assert fitting2(S4).order == 12

    def test_sylow(self, S4):
        P = sylow_subgroup(S4, 2)
        assert P.order == 8
        assert not P.is_normal
        assert sylow_subgroup(S4, 3).order == 3
        assert largest_normal_p_subgroup(S4, 2).order == 4
        assert largest_normal_p_subgroup(S4, 3).order == 1

    def test_normalizer_centralizer_center(self, S4):
        P3 = sylow_subgroup(S4, 3)
        assert normalizer(S4, P3).order == 6
        assert centralizer(S4, (1, 0, 2, 3)).order == 4
        assert center(S4).order == 1
        assert center(cyclic(6)).order == 6

    def test_normal_closure(self, S4):
        assert normal_closure(S4, [(1, 0, 3, 2)]).order == 4
        assert normal_closure(S4, [(1, 0, 2, 3)]).order == 24

    def test_normal_product(self, S4):
        V = normal_subgroups(S4)[1]
        A = subgroup(S4, [(1, 0, 2, 3)])
        assert V.order == 4
        assert normal_product(A, V).order == 8
        with pytest.raises(NotNormal):
            normal_product(V, A)

    def test_subgroup(self, S4):
        H = subgroup(S4, [(1, 0, 2, 3), (0, 1, 3, 2)], name="V")
        assert H.order == 4
        assert H.name == "V"

    def test_structure(self, default_config):
        S4 = symmetric(4)
        assert structure(S4, STRUCTURE.SOLVABLE)
        assert not structure(S4, STRUCTURE.NILPOTENT)
        assert structure(alternating(5), STRUCTURE.PERFECT)
        assert not structure(alternating(5), STRUCTURE.SOLVABLE)
        assert structure(cyclic(6), STRUCTURE.CYCLIC)
        assert not structure(elementary_abelian(2, 2), STRUCTURE.CYCLIC)
        assert structure(elementary_abelian(2, 3), STRUCTURE.ELEMENTARY_ABELIAN, 2)
        assert not structure(cyclic(4), STRUCTURE.ELEMENTARY_ABELIAN, 2)
        assert structure(dihedral(4), STRUCTURE.P_GROUP, 2)
        assert structure(dihedral(4), STRUCTURE.NILPOTENT)

    def test_quaternion(self, catalog):
        Q8 = catalog.build("Q8")
        assert center(Q8).order == 2
        assert structure(Q8, STRUCTURE.NILPOTENT)
        assert not structure(Q8, STRUCTURE.ABELIAN)
        assert Q8.order_histogram() == {1: 1, 2: 1, 4: 6}

    def test_fingerprint(self, S4):
        fp = fingerprint(S4)
        assert fp["order"] == 24
        assert fp["center_order"] == 1
        assert fp["derived_length"] == 3
        assert S4.fingerprint() == fp
        assert fingerprint(alternating(5))["derived_length"] is None


class TestQuotientGroup:
    def test_s4_mod_v4(self, S4):
        V4 = normal_subgroups(S4)[1]
        Q = QuotientGroup(S4, V4)
        assert Q.order == 6
        assert Q.order_histogram() == {1: 1, 2: 3, 3: 2}
        assert Q.class_count == 3
        assert Q.laitinen_number() == 0
        assert Q.check_homomorphism(samples=50)

    def test_quotient_group(self, S4):
        Q = quotient_group(S4, normal_subgroups(S4)[2])
        assert isinstance(Q, QuotientGroup)
        assert Q.order == 2

    def test_package_exports(self):
        import grpinv.perm as perm

        assert perm.quotient.QuotientGroup is QuotientGroup
        assert perm.quotient_group is quotient_group

    def test_realized_group(self, S4):
        V4 = normal_subgroups(S4)[1]
        G = QuotientGroup(S4, V4).group
        assert G.order == 6
        assert not G.is_abelian()

    def test_npp_cosets(self, default_config):
        Z30 = cyclic(30)
        trivial = normal_subgroups(Z30)[0]
        assert QuotientGroup(Z30, trivial).laitinen_number() == 11

    def test_not_normal(self, S3):
        H = SubgroupRef(S3, generators=[(1, 0, 2)])
        with pytest.raises(NotNormal):
            QuotientGroup(S3, H)

    def test_coset_order(self, S4):
        A4 = normal_subgroups(S4)[2]
        Q = QuotientGroup(S4, A4)
        assert Q.coset_order((1, 0, 2, 3)) == 2
        assert Q.coset_order((1, 2, 0, 3)) == 1
