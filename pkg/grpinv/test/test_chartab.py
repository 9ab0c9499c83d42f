#!/usr/bin/env py.test -v

# built-in python libraries
from fractions import Fraction

# third-party libraries (install with pip)
import numpy as np
import pytest

# local libraries
from common_fixtures import catalog, default_config
from grpinv.algebra.chartab import (
    character_table,
    class_labels,
    dixon_prime,
    frobenius_schur,
    real_character_basis,
)
from grpinv.algebra.classfunc import ClassFunction, class_histogram
from grpinv.catalog.constructors import alternating, cyclic, dihedral, symmetric
from grpinv.core.common import CapExceeded, NumericalFailure
from grpinv.core.config import Config, set_config
from grpinv.perm.group import SubgroupRef

# (group, sorted degrees, sorted Frobenius-Schur indicators)
TABLES = (
    ("S3", [1, 1, 2], [1, 1, 1]),
    ("S4", [1, 1, 2, 3, 3], [1, 1, 1, 1, 1]),
    ("A4", [1, 1, 1, 3], [0, 0, 1, 1]),
    ("A5", [1, 3, 3, 4, 5], [1, 1, 1, 1, 1]),
    ("Q8", [1, 1, 1, 1, 2], [-1, 1, 1, 1, 1]),
    ("Z5", [1, 1, 1, 1, 1], [0, 0, 0, 0, 1]),
    ("D6", [1, 1, 1, 1, 2, 2], [1, 1, 1, 1, 1, 1]),
    ("SL(2,3)", [1, 1, 1, 2, 2, 2, 3], [-1, 0, 0, 0, 0, 1, 1]),
    ("S5", [1, 1, 4, 4, 5, 5, 6], [1, 1, 1, 1, 1, 1, 1]),
)


@pytest.mark.parametrize(("name", "degrees", "indicators"), TABLES)
def test_character_tables(catalog, name, degrees, indicators):
    G = catalog.build(name)
    table = character_table(G)
    assert sorted(table.degrees) == degrees
    assert sorted(table.indicators) == indicators
    assert table.orthogonality_defect() < 1e-8, "rows are not orthonormal"
    assert table.square_root_identity_holds()
    assert len(table) == G.class_count


@pytest.mark.parametrize(
    ("order", "exponent", "prime"), ((6, 6, 7), (60, 30, 31), (24, 12, 13), (8, 4, 13))
)
def test_dixon_prime(order, exponent, prime):
    assert dixon_prime(order, exponent) == prime


def test_class_labels(default_config):
    assert class_labels(symmetric(3)) == ["1a", "2a", "3a"]
    assert class_labels(symmetric(4)) == ["1a", "2a", "2b", "3a", "4a"]


class TestCharacterTable:
    def test_cached_on_group(self, default_config):
        G = symmetric(3)
        assert character_table(G) is character_table(G)

    def test_columns_are_orthogonal(self, default_config):
        G = alternating(4)
        X = character_table(G).matrix()
        sizes = np.array(G.class_sizes, dtype=float)
        gram = X.conj().T.dot(X)
        assert np.allclose(gram, np.diag(G.order / sizes), atol=1e-8)

    def test_trivial_character_present(self, default_config):
        G = dihedral(5)
        rows = [[round(complex(v).real, 6) for v in chi.values] for chi in character_table(G)]
        assert [1.0] * G.class_count in rows

    def test_order_cap(self, default_config):
        with pytest.raises(CapExceeded):
            character_table(symmetric(4), order_cap=10)

    def test_class_cap(self):
        set_config(Config(config_filename="no_such_config.yml", table_class_cap=3))
        try:
            with pytest.raises(CapExceeded):
                character_table(symmetric(4))
        finally:
            set_config(None)

    def test_to_frame(self, default_config):
        frame = character_table(symmetric(3)).to_frame()
        assert list(frame.columns) == ["indicator", "1a", "2a", "3a"]
        assert list(frame.index) == ["X.1", "X.2", "X.3"]
        assert sorted(frame["1a"].tolist()) == [1.0, 1.0, 2.0]


class TestFrobeniusSchur:
    def test_regular_character_counts_involutions(self, default_config):
        G = symmetric(3)
        values = [0] * G.class_count
        values[0] = G.order
        # identity plus three transpositions
        assert frobenius_schur(ClassFunction(G, values)) == 4

    def test_irreducible_bound(self, default_config):
        G = symmetric(3)
        with pytest.raises(NumericalFailure):
            frobenius_schur(ClassFunction(G, [2, 2, 2]), irreducible=True)


class TestRealBasis:
    def test_cyclic(self, default_config):
        basis = real_character_basis(cyclic(3))
        assert sorted(chi.degree for chi in basis) == [1, 2]
        two = next(chi for chi in basis if chi.degree == 2)
        assert two.values == [2, -1, -1]
        assert all(isinstance(v, Fraction) for v in two.values)

    def test_quaternion_doubles(self, catalog):
        basis = real_character_basis(catalog.build("Q8"))
        assert sorted(chi.degree for chi in basis) == [1, 1, 1, 1, 4]

    def test_names(self, default_config):
        basis = real_character_basis(symmetric(4))
        assert [chi.name for chi in basis] == ["R1", "R2", "R3", "R4", "R5"]


class TestClassFunction:
    @pytest.fixture
    def S3(self, default_config):
        return symmetric(3)

    def test_arithmetic(self, S3):
        f = ClassFunction(S3, [1, 1, 1])
        g = ClassFunction(S3, [1, -1, 1])
        assert (f + g).values == [2, 0, 2]
        assert (f - g).values == [0, 2, 0]
        assert (2 * g).values == [2, -2, 2]
        assert (-g).values == [-1, 1, -1]

    def test_inner_product(self, S3):
        f = ClassFunction(S3, [1, 1, 1])
        g = ClassFunction(S3, [1, -1, 1])
        assert f.inner(f) == 1
        assert f.inner(g) == 0
        assert isinstance(f.inner(g), Fraction)

    def test_wrong_length(self, S3):
        with pytest.raises(ValueError):
            ClassFunction(S3, [1, 1])

    def test_different_groups(self, S3):
        with pytest.raises(ValueError):
            ClassFunction(S3, [1, 1, 1]) + ClassFunction(symmetric(3), [1, 1, 1])

    def test_equals_with_tolerance(self, S3):
        f = ClassFunction(S3, [1, 1, 1])
        g = ClassFunction(S3, [1 + 1e-12, 1, 1 - 1e-12])
        assert f.equals(g)
        assert f == ClassFunction(S3, [1, 1, 1])

    def test_as_rationals(self, S3):
        f = ClassFunction(S3, [complex(2, 0), 0.5000000001, -1.0])
        rational, residual = f.as_rationals()
        assert rational.values == [2, Fraction(1, 2), -1]
        assert residual < 1e-6
        with pytest.raises(NumericalFailure):
            ClassFunction(S3, [complex(0, 1), 0, 0]).as_rationals()

    def test_value_at_and_conj(self, default_config):
        Z3 = cyclic(3)
        w = np.exp(2j * np.pi / 3)
        f = ClassFunction(Z3, [1, w, w.conjugate()])
        assert f.value_at((1, 2, 0)) == w
        assert f.conj().values[1] == w.conjugate()
        assert not f.is_real()

    def test_class_histogram(self, S3):
        H = SubgroupRef(S3, generators=[(1, 0, 2)])
        assert class_histogram(S3, H.elements) == (1, 1, 0)
