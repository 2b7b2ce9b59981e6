"""Matrix-group enumeration, conjugacy data, and brute-force counting tests."""

import pytest

from charvar.errors import CentralElementUnavailable, GroupTooLarge
from charvar.groups import (
    build_group,
    commutator_distribution,
    conjugacy_classes,
    diagonal_group,
    matrix_group_from_elements,
    tuple_count,
)


@pytest.fixture(scope="module")
def sl23():
    return build_group("SL", 2, 3)


@pytest.fixture(scope="module")
def gl23():
    return build_group("GL", 2, 3)


@pytest.fixture(scope="module")
def sl25():
    return build_group("SL", 2, 5)


class TestBuildGroup:
    def test_orders(self, sl23, gl23, sl25):
        assert gl23.order == (9 - 1) * (9 - 3) == 48
        assert sl23.order == 48 // (3 - 1) == 24
        assert sl25.order == 120

    def test_group_too_large(self):
        with pytest.raises(GroupTooLarge):
            build_group("GL", 2, 7)  # order 2016 > 500
        with pytest.raises(GroupTooLarge):
            build_group("GL", 2, 11)  # q beyond desk scale

    def test_configurable_bound(self):
        with pytest.raises(GroupTooLarge):
            build_group("GL", 2, 5, max_order=100)

    def test_central_elements(self, gl23):
        assert gl23.element_order(gl23.central_of_order(2)) == 2
        assert gl23.central_of_order(1) == gl23.identity
        with pytest.raises(CentralElementUnavailable):
            gl23.central_of_order(3)  # 3 does not divide q-1 = 2

    def test_sl25_center_is_plus_minus_identity(self, sl25):
        assert sorted(sl25.element_order(i) for i in sl25.center()) == [1, 2]
        with pytest.raises(CentralElementUnavailable):
            sl25.central_of_order(4)  # order-4 scalar has determinant 4 != 1

    def test_bad_family(self):
        with pytest.raises(ValueError):
            build_group("SP", 2, 3)


class TestConjugacy:
    def test_class_counts(self, sl23, gl23, sl25):
        assert len(conjugacy_classes(sl23).classes) == 7
        assert len(conjugacy_classes(gl23).classes) == 8
        assert len(conjugacy_classes(sl25).classes) == 9

    def test_sizes_partition_the_group(self, gl23):
        data = conjugacy_classes(gl23)
        assert sum(data.sizes) == gl23.order

    def test_identity_class_is_singleton(self, sl23):
        data = conjugacy_classes(sl23)
        assert data.sizes[data.identity_class] == 1
        assert data.classes[data.identity_class] == (sl23.identity,)

    def test_class_coefficient_row_sums(self, sl23):
        # sum_k a_ijk |C_k| = |C_i| |C_j|
        data = conjugacy_classes(sl23)
        r = len(data.classes)
        for i in range(r):
            for j in range(r):
                total = sum(data.a_ijk[i][j][k] * data.sizes[k] for k in range(r))
                assert total == data.sizes[i] * data.sizes[j]


class TestCommutatorDistribution:
    def test_abelian_fixture(self):
        diag = diagonal_group(3)
        c = commutator_distribution(diag)
        assert c.at_element(diag.identity) == diag.order**2
        data = diag.conjugacy()
        for k, value in enumerate(c.values):
            if k != data.identity_class:
                assert value == 0

    def test_total_mass(self, sl23):
        c = commutator_distribution(sl23)
        data = sl23.conjugacy()
        assert sum(v * s for v, s in zip(c.values, data.sizes)) == 24 * 24

    def test_genus_one_count_is_the_distribution(self, sl23):
        c = commutator_distribution(sl23)
        minus_id = sl23.central_of_order(2)
        assert tuple_count(sl23, 1, minus_id) == c.at_element(minus_id)

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_abelian_tuple_counts(self, g):
        diag = diagonal_group(3)
        assert tuple_count(diag, g, diag.identity) == diag.order ** (2 * g)
        non_identity = next(i for i in diag.center() if i != diag.identity)
        assert tuple_count(diag, g, non_identity) == 0


def test_explicit_subgroup_wrapper():
    c2 = matrix_group_from_elements("C2", 3, [(1, 0, 0, 1), (2, 0, 0, 2)])
    assert c2.order == 2 and c2.element_order(1 - c2.identity) == 2
    with pytest.raises(ValueError):
        matrix_group_from_elements("BAD", 3, [(1, 0, 0, 1), (1, 1, 0, 1)])
