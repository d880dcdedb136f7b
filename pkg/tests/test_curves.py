import math

import pytest

from twoquadrics.curves import (
    curve_diamond,
    jacobian_diamond,
    projective_space_diamond,
    sym_curve_diamond,
)
from twoquadrics.exactpoly import BiPoly
from twoquadrics.hodge import HodgeDiamond


def truncated_euler_series_coefficient(g, n):
    """Coefficient of t^n in (1-t)^{2g-2}, covering negative powers."""
    exponent = 2 * g - 2
    if exponent >= 0:
        return (-1) ** n * math.comb(exponent, n) if n <= exponent else 0
    return math.comb(n - exponent - 1, n)


class TestCurveDiamond:
    def test_genus_zero_is_projective_line(self):
        assert curve_diamond(0) == projective_space_diamond(1)

    @pytest.mark.parametrize("g", [2, 4])
    def test_genus(self, g):
        dia = curve_diamond(g)
        assert dia.hodge_number(1, 0) == g
        assert dia.hodge_number(0, 0) == dia.hodge_number(1, 1) == 1

    def test_negative_genus_rejected(self):
        with pytest.raises(ValueError):
            curve_diamond(-1)


class TestSymCurveDiamond:
    @pytest.mark.parametrize("g", [0, 1, 3])
    def test_zeroth_power_is_point(self, g):
        assert sym_curve_diamond(g, 0) == HodgeDiamond.point()

    @pytest.mark.parametrize("g", [0, 2, 5])
    def test_first_power_is_curve(self, g):
        assert sym_curve_diamond(g, 1) == curve_diamond(g)

    def test_square_of_genus_four(self):
        dia = sym_curve_diamond(4, 2)
        assert dia.hodge_number(0, 0) == 1
        assert dia.hodge_number(1, 0) == 4
        assert dia.hodge_number(2, 0) == 6
        assert dia.hodge_number(1, 1) == 17

    @pytest.mark.parametrize("g", [0, 1, 2, 3, 4, 5])
    def test_euler_generating_function(self, g):
        for n in range(2 * g + 1):
            assert sym_curve_diamond(g, n).euler() == truncated_euler_series_coefficient(
                g, n
            ), (g, n)

    @pytest.mark.parametrize("g", [1, 2, 4])
    def test_first_betti_number_is_2g(self, g):
        for n in range(1, 6):
            assert sym_curve_diamond(g, n).betti(1) == 2 * g

    @pytest.mark.parametrize("g", [2, 4, 6])
    def test_top_holomorphic_forms(self, g):
        for n in range(1, g + 2):
            assert sym_curve_diamond(g, n).hodge_number(n, 0) == math.comb(g, n)

    def test_negative_arguments_rejected(self):
        with pytest.raises(ValueError):
            sym_curve_diamond(-1, 2)
        with pytest.raises(ValueError):
            sym_curve_diamond(2, -1)


class TestJacobianDiamond:
    def test_genus_one_is_elliptic_curve(self):
        assert jacobian_diamond(1) == curve_diamond(1)

    def test_genus_two_betti(self):
        dia = jacobian_diamond(2)
        assert dia.betti(1) == 4
        assert dia.betti(2) == 6

    def test_genus_three_h11(self):
        assert jacobian_diamond(3).hodge_number(1, 1) == 9

    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_betti_numbers_are_binomials(self, g):
        dia = jacobian_diamond(g)
        for m in range(2 * g + 1):
            assert dia.betti(m) == math.comb(2 * g, m)

    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_kunneth_power_of_elliptic_curve(self, g):
        power = HodgeDiamond.point()
        for _ in range(g):
            power = power.kunneth(curve_diamond(1))
        assert jacobian_diamond(g) == power


class TestProjectiveSpaceDiamond:
    def test_point(self):
        assert projective_space_diamond(0) == HodgeDiamond.point()

    def test_line(self):
        assert projective_space_diamond(1).rows() == ((1, 0), (0, 1))

    def test_three_space_e_polynomial(self):
        expected = BiPoly({(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1})
        assert projective_space_diamond(3).e_polynomial() == expected

    def test_negative_dimension_rejected(self):
        with pytest.raises(ValueError):
            projective_space_diamond(-2)
