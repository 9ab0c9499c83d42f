#!/usr/bin/env py.test -v

# built-in python libraries

# third-party libraries (install with pip)
import numpy as np
import pytest

# local libraries
from common_fixtures import catalog, default_config
from grpinv.algebra.chartab import real_character_basis
from grpinv.algebra.classfunc import ClassFunction
from grpinv.algebra.pairs import p_subgroup_classes
from grpinv.algebra.repmod import (
    RealModuleChar,
    VirtualCharacter,
    construct_pq_pair,
    cyclic_pq_quotients,
    dim_fixed,
    gap_defect,
    is_gap_module,
    is_l_free,
    membership,
    permutation_character,
    pq_exponents,
    regular_character,
    trivial_character,
    v_g_character,
    v_g_fixed_dim,
)
from grpinv.catalog.constructors import alternating, cyclic, symmetric
from grpinv.core.common import MEMBERSHIP, BadPair, BadQuotient, NumericalFailure
from grpinv.perm.group import SubgroupRef
from grpinv.perm.subgroups import normal_subgroups

PQ_EXPONENTS = (
    ((3, 5), (7, 11)),
    ((3, 7), (16, 8)),
    ((5, 7), (16, 22)),
)

# (group, dim V(G))
V_G_DIMENSIONS = (
    ("S3", 4),
    ("A5", 59),
    ("S5", 118),
    ("S6", 718),
    ("Z15", 8),
)

# (group, number of cyclic quotients of order pq)
PQ_QUOTIENTS = (
    ("Z15", 1),
    ("Z30", 1),
    ("Z21", 1),
    ("Z3xZ5xZ2", 1),
    ("S3xZ5", 0),
    ("D15", 0),
    ("A5xZ3", 0),
    ("S5", 0),
)


@pytest.mark.parametrize(("primes", "exponents"), PQ_EXPONENTS)
def test_pq_exponents(primes, exponents):
    p, q = primes
    a, b = pq_exponents(p, q)
    assert (a, b) == exponents
    assert (a % p, a % q, b % p, b % q) == (1, 2, 2, 1)


@pytest.mark.parametrize(("name", "dimension"), V_G_DIMENSIONS)
def test_v_g_dimension(catalog, name, dimension):
    G = catalog.build(name)
    assert v_g_character(G).net.degree == dimension
    assert v_g_fixed_dim(G, normal_subgroups(G)[0]) == dimension


@pytest.mark.parametrize(("name", "count"), PQ_QUOTIENTS)
def test_cyclic_pq_quotients(catalog, name, count):
    assert len(cyclic_pq_quotients(catalog.build(name))) == count


class TestCharacters:
    @pytest.fixture
    def S3(self, default_config):
        return symmetric(3)

    def test_permutation_character(self, S3):
        H = SubgroupRef(S3, generators=[(1, 0, 2)])
        R = permutation_character(S3, H)
        assert R.character.values == [3, 1, 0]
        assert R.dimension == 3
        assert permutation_character(S3, S3).character.values == [1, 1, 1]
        assert regular_character(S3).character.values == [6, 0, 0]

    def test_dim_fixed(self, S3):
        C2 = SubgroupRef(S3, generators=[(1, 0, 2)])
        A3 = normal_subgroups(S3)[1]
        R = permutation_character(S3, C2)
        assert dim_fixed(R, C2) == 2
        assert dim_fixed(R, A3) == 1
        assert dim_fixed(R, S3) == 1
        assert dim_fixed(regular_character(S3), A3) == 2
        assert dim_fixed(trivial_character(S3), C2) == 1

    def test_l_free(self, S3):
        assert not is_l_free(trivial_character(S3))
        basis = real_character_basis(S3)
        sign = next(chi for chi in basis if chi.degree == 1 and chi.values[1] != 1)
        two = next(chi for chi in basis if chi.degree == 2)
        assert not is_l_free(sign)
        assert is_l_free(two)

    def test_l_free_perfect(self, default_config):
        A5 = alternating(5)
        nontrivial = [chi for chi in real_character_basis(A5) if chi.degree > 1]
        assert len(nontrivial) == 4
        assert all(is_l_free(chi) for chi in nontrivial)

    def test_check_real(self, default_config):
        Z3 = cyclic(3)
        w = np.exp(2j * np.pi / 3)
        with pytest.raises(NumericalFailure):
            RealModuleChar(ClassFunction(Z3, [1, w, w.conjugate()])).check_real()
        assert trivial_character(Z3).check_real()

    def test_sum_and_difference(self, S3):
        R = regular_character(S3)
        one = trivial_character(S3)
        assert (R + one).character.values == [7, 1, 1]
        d = R - one
        assert isinstance(d, VirtualCharacter)
        assert d.net.values == [5, -1, -1]

    def test_different_groups(self, S3):
        with pytest.raises(ValueError):
            VirtualCharacter(trivial_character(S3), trivial_character(symmetric(3)))


class TestMembership:
    def test_pq_pair_in_every_ideal(self, catalog):
        rU, rV = construct_pq_pair(catalog.build("Z15"))
        d = VirtualCharacter(rU, rV)
        assert membership(d, MEMBERSHIP.IO)
        assert membership(d, MEMBERSHIP.IO_GG)
        assert membership(d, MEMBERSHIP.LO)

    def test_not_in_io(self, default_config):
        S3 = symmetric(3)
        six = RealModuleChar(ClassFunction(S3, [6, 6, 6]))
        d = VirtualCharacter(regular_character(S3), six)
        assert not membership(d, MEMBERSHIP.IO)
        assert not membership(d, MEMBERSHIP.LO)

    def test_io_gh(self, default_config):
        S3 = symmetric(3)
        one = trivial_character(S3)
        d = VirtualCharacter(one, one)
        assert membership(d, MEMBERSHIP.IO_GH, normal_subgroups(S3)[1])
        with pytest.raises(ValueError):
            membership(d, MEMBERSHIP.IO_GH)
        with pytest.raises(ValueError):
            membership(d, "BOGUS")


class TestVG:
    def test_fixed_dims_agree(self, default_config):
        S4 = symmetric(4)
        V = v_g_character(S4)
        for K in p_subgroup_classes(S4):
            assert dim_fixed(V, K) == v_g_fixed_dim(S4, K), "|K| = {}".format(K.order)

    def test_cached(self, default_config):
        S3 = symmetric(3)
        assert v_g_character(S3) is v_g_character(S3)

    def test_gap_module(self, default_config):
        assert is_gap_module(v_g_character(alternating(5)))
        # d = 4 - 2 * 2 on (1, <(12)>)
        assert not is_gap_module(v_g_character(symmetric(3)))

    def test_gap_defect(self, default_config):
        S3 = symmetric(3)
        trivial = normal_subgroups(S3)[0]
        C2 = SubgroupRef(S3, generators=[(1, 0, 2)])
        assert gap_defect(regular_character(S3), trivial, C2) == 0
        with pytest.raises(BadPair):
            gap_defect(regular_character(S3), C2, C2)


class TestPQPair:
    def test_z15(self, catalog):
        rU, rV = construct_pq_pair(catalog.build("Z15"))
        assert rU.dimension == rV.dimension == 4
        assert max(rU.character.values[1:]) == pytest.approx(3.16535, abs=1e-4)
        assert not rU.character.equals(rV.character)
        assert is_l_free(rU) and is_l_free(rV)

    def test_pulled_back(self, catalog):
        G = catalog.build("Z30")
        (N, p, q), = cyclic_pq_quotients(G)
        assert (N.order, p, q) == (2, 3, 5)
        rU, rV = construct_pq_pair(G, N)
        assert dim_fixed(rU, N) == 4

    def test_no_quotient(self, default_config):
        with pytest.raises(BadQuotient):
            construct_pq_pair(symmetric(3))

    def test_wrong_subgroup(self, catalog):
        G = catalog.build("Z15")
        with pytest.raises(BadQuotient):
            construct_pq_pair(G, normal_subgroups(G)[1])
