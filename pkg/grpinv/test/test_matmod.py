#!/usr/bin/env py.test -v

# built-in python libraries

# third-party libraries (install with pip)
import numpy as np
import pytest

# local libraries
from common_fixtures import catalog, default_config
from grpinv.algebra.matmod import (
    MatrixModule,
    determinant_lemma,
    direct_sum,
    io_kernel_basis,
    io_kernel_modules,
    linear_characters,
    linear_module,
    orientation_check,
    permutation_module,
    pq_pair_modules,
    random_module,
    random_orthogonal,
    regular_module,
    tensor_product,
    trivial_module,
    two_group_reduction,
)
from grpinv.algebra.repmod import construct_pq_pair
from grpinv.catalog.constructors import cyclic, symmetric
from grpinv.core.common import GroupComputationError
from grpinv.perm.group import SubgroupRef
from grpinv.util import is_prime_power


@pytest.fixture
def S3(default_config):
    return symmetric(3)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


class TestMatrixModule:
    def test_regular(self, S3):
        R = regular_module(S3)
        assert R.dimension == 6
        assert R.is_orthogonal()
        assert R.check_relations(samples=20, seed=7)
        assert len(R.images()) == S3.order
        assert np.allclose(R.character().values, [6, 0, 0])
        assert R.fixed_rank(S3.elements) == 1

    def test_permutation(self, S3):
        H = SubgroupRef(S3, generators=[(1, 0, 2)])
        M = permutation_module(S3, H)
        assert M.dimension == 3
        assert np.allclose(M.character().values, [3, 1, 0])
        assert M.fixed_basis(H.elements).shape == (3, 2)

    def test_identity_image(self, S3):
        R = regular_module(S3)
        assert np.allclose(R(S3.identity), np.eye(6))

    def test_wrong_generator_count(self, S3):
        with pytest.raises(ValueError):
            MatrixModule(S3, [np.eye(2)])

    def test_non_square(self, S3):
        with pytest.raises(ValueError):
            MatrixModule(S3, [np.zeros((2, 3)) for _ in S3.generators])

    def test_restricted_det_empty_basis(self, S3):
        R = regular_module(S3)
        assert R.restricted_det((1, 0, 2), np.zeros((6, 0))) == 1.0

    def test_conjugate_keeps_character(self, S3, rng):
        R = regular_module(S3)
        Q = random_orthogonal(R.dimension, rng)
        assert np.allclose(Q @ Q.T, np.eye(6))
        C = R.conjugate_by(Q)
        assert C.is_orthogonal()
        assert C.character().equals(R.character())


class TestBuilders:
    def test_linear_characters(self, S3):
        assert len(linear_characters(S3)) == 2
        assert len(linear_characters(cyclic(5))) == 5

    def test_sign_module(self, S3):
        sign = next(chi for chi in linear_characters(S3) if abs(chi.values[1] + 1) < 1e-9)
        M = linear_module(S3, sign)
        assert M.dimension == 1
        assert np.allclose(M.character().values, [1, -1, 1])

    def test_rotation_module(self, default_config):
        Z5 = cyclic(5)
        faithful = [chi for chi in linear_characters(Z5) if abs(chi.values[1] - 1) > 1e-9]
        M = linear_module(Z5, faithful[0])
        assert M.dimension == 2
        assert M.is_orthogonal()
        assert M.check_relations(samples=10)
        assert M.character().values[0] == pytest.approx(2)

    def test_direct_sum(self, S3):
        M = direct_sum(trivial_module(S3), regular_module(S3))
        assert M.dimension == 7
        assert M.name == "1+R[G]"
        assert np.allclose(M.character().values, [7, 1, 1])
        assert direct_sum(trivial_module(S3), name="one").name == "one"

    def test_tensor_product(self, S3):
        sign = next(chi for chi in linear_characters(S3) if abs(chi.values[1] + 1) < 1e-9)
        H = SubgroupRef(S3, generators=[(1, 0, 2)])
        M = tensor_product(permutation_module(S3, H), linear_module(S3, sign))
        assert M.dimension == 3
        assert M.is_orthogonal()
        assert np.allclose(M.character().values, [3, -1, 0])

    def test_nonfixed_part(self, S3):
        M = regular_module(S3).nonfixed_part()
        assert M.dimension == 5
        assert M.is_orthogonal()
        assert M.check_relations(samples=10)
        assert np.allclose(M.character().values, [5, -1, -1])
        assert M.fixed_rank(S3.elements) == 0

    def test_direct_sum_different_groups(self, S3):
        with pytest.raises(ValueError):
            direct_sum(trivial_module(S3), trivial_module(symmetric(3)))

    def test_random_module(self, rng, default_config):
        G = symmetric(4)
        M = random_module(G, rng)
        assert M.is_orthogonal()
        assert M.check_relations(samples=30)

    def test_pq_pair_modules(self, catalog):
        G = catalog.build("Z15")
        U, V = pq_pair_modules(G)
        rU, rV = construct_pq_pair(G)
        assert U.dimension == V.dimension == 4
        assert U.as_character().character.equals(rU.character)
        assert V.as_character().character.equals(rV.character)

    def test_pq_pair_modules_without_quotient(self, S3):
        with pytest.raises(GroupComputationError):
            pq_pair_modules(S3)


class TestOrientation:
    def test_pq_pair_of_odd_order(self, catalog):
        U, V = pq_pair_modules(catalog.build("Z15"))
        report = orientation_check(U, V)
        assert report.precondition
        assert report.results
        assert report.passed
        document = report.to_dict()
        assert document["group"] == "Z15"
        assert document["passed"]
        assert len(document["pairs"]) == len(report.results)

    def test_isomorphic_modules(self, S3, rng):
        U = regular_module(S3)
        V = U.conjugate_by(random_orthogonal(U.dimension, rng))
        assert orientation_check(U, V).passed

    def test_precondition(self, S3):
        U = regular_module(S3)
        V = direct_sum(*[trivial_module(S3)] * 6)
        report = orientation_check(U, V)
        assert not report.precondition
        assert not report.passed
        assert report.results == []


class TestDeterminantLemma:
    def test_applicable(self, S3, rng):
        U = regular_module(S3)
        V = U.conjugate_by(random_orthogonal(U.dimension, rng))
        assert determinant_lemma(U, V, (1, 0, 2)) == (True, True)

    def test_parity_mismatch(self, S3):
        sign = next(chi for chi in linear_characters(S3) if abs(chi.values[1] + 1) < 1e-9)
        U = linear_module(S3, sign)
        assert determinant_lemma(U, trivial_module(S3), (1, 0, 2)) == (False, None)

    def test_dimension_mismatch(self, S3):
        assert determinant_lemma(trivial_module(S3), regular_module(S3), (1, 0, 2)) == (
            False,
            None,
        )

    def test_odd_element(self, S3):
        with pytest.raises(ValueError):
            determinant_lemma(trivial_module(S3), trivial_module(S3), (1, 2, 0))


def _linear(G, predicate):
    return next(chi for chi in linear_characters(G) if predicate(chi.values))


def _is_sign(values):
    return any(abs(v + 1) < 1e-9 for v in values)


def _is_complex(values):
    return any(abs(complex(v).imag) > 1e-9 for v in values)


class TestKernelPairs:
    def test_z15_basis(self, catalog, rng):
        G = catalog.build("Z15")
        # R[G] + 15 * 1 against 3 * R[G/Z3] + 5 * R[G/Z5]
        assert io_kernel_basis(G) == [[1, -3, -5, 15]]
        U, V = io_kernel_modules(G, rng)
        assert U.dimension == V.dimension == 30

    @pytest.mark.parametrize("name", ["Z6", "D6", "SL(2,3)", "S5"])
    def test_non_isomorphic_pair(self, catalog, rng, name):
        G = catalog.build(name)
        U, V = io_kernel_modules(G, rng)
        assert U.is_orthogonal(1e-8)
        chi_u, chi_v = U.character(), V.character()
        assert not chi_u.equals(chi_v)
        for c in G.conjugacy_classes():
            if is_prime_power(c.element_order):
                assert chi_u.values[c.index] == pytest.approx(chi_v.values[c.index], abs=1e-6)
        report = orientation_check(U, V)
        assert report.precondition
        assert report.results
        assert report.passed

    def test_determinant_lemma(self, catalog, rng):
        G = catalog.build("SL(2,3)")
        U, V = io_kernel_modules(G, rng)
        two_elements = [
            c.representative for c in G.conjugacy_classes() if c.element_order in (2, 4)
        ]
        assert len(two_elements) == 2
        for t in two_elements:
            assert determinant_lemma(U, V, t) == (True, True)

    def test_no_npp_elements(self, catalog, rng):
        S4 = catalog.build("S4")
        assert io_kernel_basis(S4) == []
        assert io_kernel_modules(S4, rng) is None

    def test_sign_twist_rejected(self, catalog):
        S4 = catalog.build("S4")
        point_stabilizer = SubgroupRef(S4, generators=[(1, 0, 2, 3), (1, 2, 0, 3)])
        U = permutation_module(S4, point_stabilizer)
        V = tensor_product(U, linear_module(S4, _linear(S4, _is_sign)))
        assert U.dimension == V.dimension == 4
        report = orientation_check(U, V)
        assert not report.precondition
        assert not report.passed


class TestTwoGroupReduction:
    def test_non_isomorphic_pair(self, catalog):
        Z6 = catalog.build("Z6")
        order2 = next(c.index for c in Z6.conjugacy_classes() if c.element_order == 2)
        cube = _linear(Z6, lambda v: _is_complex(v) and abs(v[order2] - 1) < 1e-9)
        faithful = _linear(Z6, lambda v: _is_complex(v) and abs(v[order2] + 1) < 1e-9)
        U, V = linear_module(Z6, cube), linear_module(Z6, faithful)
        # both restrict to the same Z3-module; t = -1 on V
        assert not U.character().equals(V.character())
        sign = linear_module(Z6, _linear(Z6, _is_sign))
        assert tensor_product(U, sign).character().equals(V.character())
        assert two_group_reduction(U, V) == (True, True)

    def test_isomorphic_pair(self, S3, rng):
        U = regular_module(S3).nonfixed_part()
        V = U.conjugate_by(random_orthogonal(U.dimension, rng))
        assert two_group_reduction(U, V) == (True, True)

    def test_fixed_vectors(self, S3, rng):
        U = regular_module(S3)
        V = U.conjugate_by(random_orthogonal(U.dimension, rng))
        assert two_group_reduction(U, V) == (False, None)

    def test_different_on_p(self, S3):
        sign = linear_module(S3, _linear(S3, _is_sign))
        rest = regular_module(S3).nonfixed_part()
        assert two_group_reduction(rest, direct_sum(*[sign] * 5)) == (False, None)

    def test_not_applicable(self, catalog):
        S4 = catalog.build("S4")
        assert two_group_reduction(trivial_module(S4), trivial_module(S4)) == (False, None)
        U, V = pq_pair_modules(catalog.build("Z15"))
        assert two_group_reduction(U, V) == (False, None)
        # the Sylow 2-subgroup of D6 is not cyclic
        D6 = catalog.build("D6")
        R = regular_module(D6).nonfixed_part()
        assert two_group_reduction(R, R) == (False, None)
