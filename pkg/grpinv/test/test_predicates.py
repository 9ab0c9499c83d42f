#!/usr/bin/env py.test -v

# built-in python libraries

# third-party libraries (install with pip)
import pytest

# local libraries
from common_fixtures import catalog, default_config
from grpinv.algebra.chartab import real_character_basis
from grpinv.algebra.pairs import (
    conjugate_subgroups,
    overgroups,
    p_subgroup_classes,
    pair_parity,
    proper_pairs,
)
from grpinv.algebra.predicates import (
    gap_module_witness,
    gap_status,
    is_cp,
    is_ep,
    is_oliver,
    large_subgroup_test,
    noncyclic_sylow_count,
    p_l_disjoint,
)
from grpinv.algebra.repmod import dim_fixed
from grpinv.catalog.constructors import alternating, dihedral, symmetric
from grpinv.core.common import GAP, GAP_MODE, PARITY, BadPair
from grpinv.perm.group import SubgroupRef
from grpinv.perm.subgroups import normal_subgroups

# (group, Oliver)
OLIVER = (
    ("S3", False),
    ("S4", False),
    ("SL(2,3)", False),
    ("Z15", False),
    ("A5", True),
    ("S5", True),
    ("A6", True),
)

# (group, noncyclic Sylow count, CP, EP)
SYLOW_CP_EP = (
    ("S4", 1, True, True),
    ("A5", 1, True, True),
    ("Z15", 0, False, True),
    ("S5", 1, False, True),
    ("Z6", 0, False, True),
    ("S6", 2, False, True),
    ("Z30", 0, False, False),
    ("A5xZ3", 2, False, False),
)

SUFFICIENT_GAP = (
    ("A5", GAP.GAP),
    ("A6", GAP.GAP),
    ("S5", GAP.UNKNOWN),
    ("S6", GAP.UNKNOWN),
    ("Z15", GAP.NOT_GAP),
    ("S3", GAP.NOT_GAP),
    ("A4", GAP.NOT_GAP),
)

EXACT_GAP = (
    ("A5", GAP.GAP),
    ("S5", GAP.NOT_GAP),
)

HEAVY_EXACT_GAP = (
    ("S6", GAP.GAP),
    ("Aut(A6)", GAP.NOT_GAP),
)


@pytest.mark.parametrize(("name", "oliver"), OLIVER)
def test_is_oliver(catalog, name, oliver):
    result, witness = is_oliver(catalog.build(name))
    assert result == oliver
    assert (witness is None) == oliver


@pytest.mark.parametrize(("name", "sylow", "cp", "ep"), SYLOW_CP_EP)
def test_sylow_cp_ep(catalog, name, sylow, cp, ep):
    G = catalog.build(name)
    assert noncyclic_sylow_count(G) == sylow
    assert is_cp(G) == cp
    assert is_ep(G) == ep


@pytest.mark.parametrize(("name", "status"), SUFFICIENT_GAP)
def test_gap_sufficient(catalog, name, status):
    assert gap_status(catalog.build(name)) == status


@pytest.mark.parametrize(("name", "status"), EXACT_GAP)
def test_gap_exact(catalog, name, status):
    assert gap_status(catalog.build(name), GAP_MODE.EXACT) == status


@pytest.mark.heavy
@pytest.mark.parametrize(("name", "status"), HEAVY_EXACT_GAP)
def test_gap_exact_heavy(catalog, name, status):
    assert gap_status(catalog.build(name), GAP_MODE.EXACT) == status


class TestOliverWitness:
    def test_s3(self, default_config):
        result, witness = is_oliver(symmetric(3))
        assert not result
        # 1 < A3 with S3/A3 of order 2
        assert (witness.p_order, witness.h_order) == (3, 3)
        assert (witness.p_prime, witness.h_prime) == (3, 2)

    def test_s4(self, default_config):
        result, witness = is_oliver(symmetric(4))
        assert not result
        assert (witness.p_order, witness.h_order, witness.p_prime) == (4, 12, 2)


class TestGap:
    def test_unknown_mode(self, catalog):
        with pytest.raises(ValueError):
            gap_status(catalog.build("A5"), "BOGUS")

    def test_exact_beyond_cap(self, catalog):
        assert gap_status(catalog.build("A5"), GAP_MODE.EXACT, order_cap=10) == GAP.UNKNOWN

    def test_p_l_disjoint(self, catalog):
        assert p_l_disjoint(catalog.build("A5"))
        assert p_l_disjoint(catalog.build("S4"))
        assert not p_l_disjoint(catalog.build("S3"))

    def test_module_witness(self, catalog):
        witness = gap_module_witness(catalog.build("A5"))
        assert witness
        assert all(isinstance(m, int) and m > 0 for m in witness.values())
        assert gap_module_witness(catalog.build("S5")) is None


class TestLargeSubgroups:
    def test_s4(self, default_config):
        S4 = symmetric(4)
        A4 = normal_subgroups(S4)[2]
        S3 = SubgroupRef(S4, generators=[(1, 0, 2, 3), (1, 2, 0, 3)])
        assert large_subgroup_test(S4, A4)
        assert not large_subgroup_test(S4, S3)
        assert large_subgroup_test(S4, S4)


class TestPairs:
    @pytest.mark.parametrize(
        ("family", "n", "orders"),
        (
            (symmetric, 3, [1, 2, 3]),
            (symmetric, 4, [1, 2, 2, 3, 4, 4, 4, 8]),
            (alternating, 4, [1, 2, 3, 4]),
        ),
    )
    def test_p_subgroup_classes(self, default_config, family, n, orders):
        G = family(n)
        assert sorted(P.order for P in p_subgroup_classes(G)) == orders
        assert p_subgroup_classes(G)[0].order == 1

    def test_conjugate_subgroups(self, default_config):
        S4 = symmetric(4)
        A = SubgroupRef(S4, generators=[(1, 0, 2, 3)])
        B = SubgroupRef(S4, generators=[(0, 1, 3, 2)])
        C = SubgroupRef(S4, generators=[(1, 0, 3, 2)])
        assert conjugate_subgroups(S4, A, B)
        assert not conjugate_subgroups(S4, A, C)

    def test_overgroups(self, default_config):
        S3 = symmetric(3)
        trivial = normal_subgroups(S3)[0]
        assert sorted(H.order for H in overgroups(S3, trivial)) == [2, 2, 2, 3]
        assert [H.order for H in overgroups(S3, trivial, minimal=False)] == [2, 2, 2, 3, 6]

    def test_proper_pairs_s3(self, default_config):
        S3 = symmetric(3)
        reduced = list(proper_pairs(S3))
        assert sorted((pair.P.order, pair.H.order) for pair in reduced) == [
            (1, 2),
            (1, 3),
            (2, 6),
            (3, 6),
        ]
        assert sum(1 for pair in reduced if pair.parity == PARITY.ODD) == 2
        assert len(list(proper_pairs(S3, reduced=False))) == 7

    @pytest.mark.parametrize(
        ("family", "n"), ((symmetric, 4), (alternating, 4), (dihedral, 6))
    )
    def test_reduced_pairs_keep_minimum(self, default_config, family, n):
        G = family(n)
        reduced = list(proper_pairs(G))
        full = list(proper_pairs(G, reduced=False))
        assert {pair.key for pair in reduced} <= {pair.key for pair in full}
        for chi in real_character_basis(G):
            least = min(dim_fixed(chi, p.P) - 2 * dim_fixed(chi, p.H) for p in reduced)
            assert least == min(
                dim_fixed(chi, p.P) - 2 * dim_fixed(chi, p.H) for p in full
            ), chi.name


class TestParity:
    def test_odd(self, default_config):
        S3 = symmetric(3)
        trivial = normal_subgroups(S3)[0]
        H = SubgroupRef(S3, generators=[(1, 0, 2)])
        assert pair_parity(S3, trivial, H) == PARITY.ODD
        S4 = symmetric(4)
        H = SubgroupRef(S4, generators=[(1, 0, 2, 3)])
        assert pair_parity(S4, normal_subgroups(S4)[0], H) == PARITY.ODD

    def test_even(self, default_config):
        S3 = symmetric(3)
        trivial, A3 = normal_subgroups(S3)[:2]
        assert pair_parity(S3, trivial, A3) == PARITY.EVEN
        A4 = alternating(4)
        H = SubgroupRef(A4, generators=[(1, 0, 3, 2)])
        assert pair_parity(A4, normal_subgroups(A4)[0], H) == PARITY.EVEN

    def test_bad_pairs(self, default_config):
        S4 = symmetric(4)
        S3 = SubgroupRef(S4, generators=[(1, 0, 2, 3), (1, 2, 0, 3)])
        with pytest.raises(BadPair):
            pair_parity(S4, S3, normal_subgroups(S4)[-1])
        C2 = SubgroupRef(S4, generators=[(1, 0, 2, 3)])
        with pytest.raises(BadPair):
            pair_parity(S4, C2, C2)
