import logging

import pytest
from hypothesis import given

from braid_deformations import charpoly
from braid_deformations.arrangement import build_deformation, cone
from braid_deformations.charpoly import (
    admissible_primes,
    characteristic_polynomial,
    count_complement_points,
    integer_root_split,
    reduce_arrangement,
    reduction_bound,
)
from braid_deformations.errors import BadReductionError, InputError, ResourceLimitError
from braid_deformations.objects import (
    Arrangement,
    Digraph,
    DigraphFactory,
    Hyperplane,
    IntPolynomial,
)

from tests.settings import CHARPOLY_SETTINGS
from tests.strategies import digraphs

T_MINUS_ONE = IntPolynomial.new([-1, 1])
BRAID_3 = build_deformation(DigraphFactory.empty(3), 0)


class TestIntPolynomial:
    def test_new_strips_leading_zeros(self):
        assert IntPolynomial.new([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPolynomial.new([0, 0]).is_zero

    def test_from_roots_and_printing(self):
        p = IntPolynomial.from_roots([0, 1, 2])
        assert p.coeffs == (0, 2, -3, 1)
        assert str(p) == "t^3 - 3*t^2 + 2*t"
        assert str(IntPolynomial.new([7, -5, 1])) == "t^2 - 5*t + 7"

    def test_arithmetic(self):
        p = IntPolynomial.new([0, 7, -5, 1])
        assert p(2) == 8 - 20 + 14
        assert (p * T_MINUS_ONE).divide_linear(1) == (p, 0)
        assert p.shift(2).coeffs == (0, 0, 0, 7, -5, 1)
        assert p - p == IntPolynomial()


class TestCounting:
    def test_empty_arrangement(self):
        assert count_complement_points(Arrangement.new(2), 5).count == 25

    def test_single_coordinate_hyperplane(self):
        a = Arrangement.new(1, [Hyperplane.coordinate(1, 0)])
        assert count_complement_points(a, 7).count == 6

    def test_braid_injective_triples(self):
        evaluation = count_complement_points(BRAID_3, 5)
        assert evaluation.count == 5 * 4 * 3
        assert evaluation.dim == 3

    def test_translation_directions_are_split_off(self):
        reduced = reduce_arrangement(BRAID_3)
        assert reduced.translations == 1
        assert reduced.dim == 2

    def test_composite_modulus(self):
        with pytest.raises(InputError):
            count_complement_points(BRAID_3, 9)

    def test_prime_below_bound(self):
        with pytest.raises(InputError):
            count_complement_points(BRAID_3, 3)

    def test_budget(self):
        a = cone(build_deformation(DigraphFactory.complete(5), 3))
        with pytest.raises(ResourceLimitError):
            count_complement_points(a, 101)


class TestReduction:
    def test_bound_of_deformation(self):
        assert reduction_bound(build_deformation(DigraphFactory.complete(3), 1)) == 5
        assert reduction_bound(build_deformation(DigraphFactory.empty(4), 0)) == 4

    def test_admissible_primes(self):
        assert admissible_primes(5, 3) == [7, 11, 13]
        assert admissible_primes(10, 2) == [11, 13]


class TestCharacteristicPolynomial:
    def test_path_level_zero(self):
        chi = characteristic_polynomial(build_deformation(DigraphFactory.from_pattern("path"), 0))
        assert str(chi) == "t^3 - 5*t^2 + 7*t"

    def test_cycle_level_one(self):
        chi = characteristic_polynomial(build_deformation(DigraphFactory.from_pattern("cycle"), 1))
        assert chi == IntPolynomial.new([0, 38, -12, 1])

    def test_chord_level_zero(self):
        chi = characteristic_polynomial(build_deformation(DigraphFactory.from_pattern("cycle_plus_chord"), 0))
        assert chi == IntPolynomial.new([0, 13, -7, 1])

    def test_empty_arrangement(self):
        assert characteristic_polynomial(Arrangement.new(4)) == IntPolynomial.monomial(4)

    def test_braid(self):
        assert characteristic_polynomial(BRAID_3) == IntPolynomial.from_roots([0, 1, 2])

    def test_catalan(self):
        a = build_deformation(DigraphFactory.complete(3), 0)
        assert characteristic_polynomial(a) == IntPolynomial.from_roots([0, 4, 5])
        assert integer_root_split(characteristic_polynomial(cone(a))) == (0, 1, 4, 5)

    @pytest.mark.parametrize("arcs", [[], [(0, 1)], [(0, 1), (1, 0)]])
    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_two_vertices(self, arcs, k):
        g = Digraph.new(2, arcs)
        m = 2 * k + 1 + len(arcs)
        expected = IntPolynomial.from_roots([1, 0, m])
        assert characteristic_polynomial(cone(build_deformation(g, k))) == expected

    @given(g=digraphs(min_n=2, max_n=3))
    @CHARPOLY_SETTINGS
    def test_coning_identity(self, g):
        a = build_deformation(g, 1)
        assert characteristic_polynomial(cone(a)) == characteristic_polynomial(a) * T_MINUS_ONE

    @given(g=digraphs(min_n=2, max_n=3))
    @CHARPOLY_SETTINGS
    def test_polynomial_counts_points(self, g):
        a = build_deformation(g, 0)
        chi = characteristic_polynomial(a)
        assert chi.is_monic and chi.degree == a.dim
        for q in admissible_primes(reduction_bound(a), 2):
            assert chi(q) == count_complement_points(a, q).count

    def test_caches_are_bounded(self):
        assert characteristic_polynomial.cache_info().maxsize == charpoly.CACHE_SIZE
        assert reduce_arrangement.cache_info().maxsize == charpoly.CACHE_SIZE

    def test_bad_reduction_is_reported(self, monkeypatch, caplog):
        a = Arrangement.new(1, [Hyperplane.coordinate(1, 0, 0)])
        characteristic_polynomial.cache_clear()
        monkeypatch.setattr(charpoly, "_count_reduced", lambda reduced, q: 0)
        with caplog.at_level(logging.WARNING, logger="braid_deformations.charpoly"):
            with pytest.raises(BadReductionError, match="bad reduction suspected"):
                characteristic_polynomial(a)
        assert "Bad reduction suspected" in caplog.text
        characteristic_polynomial.cache_clear()


class TestIntegerRootSplit:
    def test_irreducible_quadratic(self):
        assert integer_root_split(IntPolynomial.new([0, 7, -5, 1])) is None

    def test_full_split(self):
        assert integer_root_split(IntPolynomial.from_roots([2, 0, 1])) == (0, 1, 2)

    def test_negative_and_repeated_roots(self):
        assert integer_root_split(IntPolynomial.from_roots([1, -3, 1])) == (-3, 1, 1)

    def test_powers_of_t(self):
        assert integer_root_split(IntPolynomial.monomial(2)) == (0, 0)
        assert integer_root_split(IntPolynomial.monomial(0)) == ()

    def test_not_monic(self):
        with pytest.raises(InputError):
            integer_root_split(IntPolynomial.new([0, 2]))

    @pytest.mark.parametrize("roots", [[0, 1, 1, 2], [0, 1, 4, 5], [3, 3, 3], [0, 6, 7]])
    def test_split_reproduces_polynomial(self, roots):
        p = IntPolynomial.from_roots(roots)
        assert IntPolynomial.from_roots(integer_root_split(p)) == p
