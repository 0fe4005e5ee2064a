"""多项式与初等运算测试"""

import random
from fractions import Fraction

import pytest

from src.core.calculus import (
    dehomogenize,
    euler_sum,
    gradient,
    initial_degree,
    jet,
    linear_change,
    partial_derivative,
    poly_arith,
    set_variables,
    substitute,
    translate_to_origin,
    weighted_initial_part,
)
from src.core.config import engine_overrides
from src.core.errors import NotHomogeneousError, ResourceLimitError, RingMismatchError
from src.core.polynomial import Polynomial, RingContext
from src.core.types import Point


def random_polynomial(
    rng: random.Random, ring: RingContext, n_terms: int = 4, max_degree: int = 3
) -> Polynomial:
    terms = {}
    for _ in range(n_terms):
        exp = tuple(rng.randint(0, max_degree) for _ in range(ring.nvars))
        terms[exp] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(ring, terms)


def random_homogeneous(rng: random.Random, ring: RingContext, degree: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, 5)):
        cuts = sorted(rng.randint(0, degree) for _ in range(ring.nvars - 1))
        parts = [b - a for a, b in zip([0, *cuts], [*cuts, degree])]
        terms[tuple(parts)] = rng.randint(-7, 7)
    return Polynomial(ring, terms)


# ==================== 基本算术 ====================


class TestArithmetic:
    """测试环运算"""

    def test_difference_of_squares(self, ring_xy, poly):
        """(x+y)(x-y) = x²-y²"""
        a = poly("x + y", ring_xy)
        b = poly("x - y", ring_xy)
        assert poly_arith(a, b, "mul") == poly("x^2 - y^2", ring_xy)

    def test_add_zero(self, ring_xy, poly):
        """f + 0 = f"""
        f = poly("3/2*x^2*y - x + 1", ring_xy)
        assert poly_arith(f, Polynomial.zero(ring_xy), "add") == f

    def test_cube_expansion(self, ring_xy, poly):
        """(x²-y²)³ 展开为 4 项，系数 1, -3, 3, -1"""
        f = poly("(x^2 - y^2)^3", ring_xy)
        assert len(f) == 4
        coeffs = [c for _, c in f.sorted_terms()]
        assert coeffs == [1, -3, 3, -1]

    def test_ring_mismatch(self, ring_xy, ring_xyz):
        """不同环的多项式不能运算"""
        with pytest.raises(RingMismatchError):
            poly_arith(Polynomial.variable(ring_xy, "x"), Polynomial.variable(ring_xyz, "x"), "add")

    def test_zero_coefficients_dropped(self, ring_xy):
        """零系数不存储"""
        f = Polynomial(ring_xy, {(1, 0): 0, (0, 1): Fraction(2, 4)})
        assert dict(f.terms) == {(0, 1): Fraction(1, 2)}
        assert Polynomial(ring_xy, {}).is_zero

    def test_ring_axioms_random(self, ring_xyz):
        """随机多项式上的结合律、交换律、分配律"""
        rng = random.Random(7)
        for _ in range(30):
            a, b, c = (random_polynomial(rng, ring_xyz) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a - a == Polynomial.zero(ring_xyz)

    def test_exact_divide(self, ring_xy, poly):
        """整除与不能整除"""
        f = poly("x^3 - x*y^2", ring_xy)
        assert f.exact_divide(poly("x - y", ring_xy)) == poly("x^2 + x*y", ring_xy)
        with pytest.raises(ValueError):
            f.exact_divide(poly("x + 1", ring_xy))

    def test_term_cap(self, ring_xyz, poly):
        """超过项数上限时抛出 ResourceLimitError"""
        with engine_overrides(max_terms=5):
            with pytest.raises(ResourceLimitError) as exc_info:
                poly("(x + y + z + 1)^3", ring_xyz)
        assert exc_info.value.limit == "max_terms"

    def test_evaluate(self, ring_xy, poly):
        f = poly("x^2 - y^2", ring_xy)
        assert f.evaluate([3, Fraction(1, 2)]) == Fraction(35, 4)

    def test_embed_and_restrict(self, ring_xy, ring_xyz, poly):
        """按变量名换环"""
        f = poly("x*y + 1", ring_xy)
        g = f.embed(ring_xyz)
        assert g == poly("x*y + 1", ring_xyz)
        assert g.restrict(ring_xy) == f
        with pytest.raises(RingMismatchError):
            poly("z", ring_xyz).restrict(ring_xy)


# ==================== 微分 ====================


class TestDerivatives:
    """测试偏导"""

    def test_cusp(self, ring_xy, poly):
        assert partial_derivative(poly("y^2 - x^3", ring_xy), 0) == poly("-3*x^2", ring_xy)

    def test_product(self, ring_xyzw, poly):
        assert partial_derivative(poly("x*y*z*w", ring_xyzw), 3) == poly("x*y*z", ring_xyzw)

    def test_chain_rule(self, ring_xy, poly):
        f = poly("(x^2-y^2)^3 - x^2*y^2", ring_xy)
        expected = poly("6*x*(x^2-y^2)^2 - 2*x*y^2", ring_xy)
        assert partial_derivative(f, 0) == expected

    def test_index_out_of_range(self, ring_xy, poly):
        with pytest.raises(IndexError):
            partial_derivative(poly("x", ring_xy), 2)

    def test_gradient_keeps_zero_partials(self, ring_xyz, poly):
        grads = gradient(poly("x^2 + y^2", ring_xyz))
        assert len(grads) == 3
        assert grads[2].is_zero

    def test_mixed_partials_commute(self, ring_xyz):
        """∂i∂j = ∂j∂i"""
        rng = random.Random(11)
        for _ in range(20):
            f = random_polynomial(rng, ring_xyz, n_terms=6, max_degree=4)
            for i in range(3):
                for j in range(3):
                    assert partial_derivative(partial_derivative(f, i), j) == partial_derivative(
                        partial_derivative(f, j), i
                    )

    def test_euler_identity(self, ring_xyz):
        """齐次 f：Σ x_i ∂f/∂x_i = d·f"""
        rng = random.Random(3)
        for _ in range(100):
            d = rng.randint(1, 6)
            f = random_homogeneous(rng, ring_xyz, d)
            total = Polynomial.zero(ring_xyz)
            for i, g in enumerate(gradient(f)):
                total = total + Polynomial.variable(ring_xyz, i) * g
            assert total == f * d
            assert euler_sum(f, [1, 1, 1]) == f * d


# ==================== 去齐次化 / 平移 ====================


class TestCharts:
    """测试仿射卡与平移"""

    def test_dehomogenize_cusp(self, ring_xyz, poly):
        g = dehomogenize(poly("y^2*z - x^3", ring_xyz), 2)
        assert g == poly("y^2 - x^3", RingContext.of("x", "y"))

    def test_dehomogenize_cubic_surface(self, cubic_surface, poly):
        g = dehomogenize(cubic_surface, 3)
        assert g == poly("x*z + x^2*y + y^2*z - z^3", RingContext.of("x", "y", "z"))

    def test_dehomogenize_to_constant(self, ring_xy, poly):
        g = dehomogenize(poly("x^4", ring_xy), 0)
        assert g == Polynomial.constant(RingContext.of("y"), 1)

    def test_dehomogenize_rejects_inhomogeneous(self, ring_xy, poly):
        with pytest.raises(NotHomogeneousError):
            dehomogenize(poly("x^2 + y", ring_xy), 0)

    def test_translate_square(self, ring_xy, poly):
        f = poly("(x-1)^2", ring_xy)
        assert translate_to_origin(f, Point.affine(1, 0)) == poly("x^2", ring_xy)

    def test_translate_by_zero(self, ring_xy, poly):
        f = poly("x^3 + y", ring_xy)
        assert translate_to_origin(f, Point.origin(2)) == f

    def test_translate_hyperbola(self, ring_xy, poly):
        f = poly("x^2 - y^2", ring_xy)
        assert translate_to_origin(f, Point.affine(1, 1)) == poly(
            "x^2 + 2*x - y^2 - 2*y", ring_xy
        )

    def test_translate_dimension_mismatch(self, ring_xy, poly):
        with pytest.raises(ValueError):
            translate_to_origin(poly("x", ring_xy), Point.affine(1, 2, 3))

    def test_translate_round_trip(self, ring_xyz):
        """平移后再反向平移得到原多项式"""
        rng = random.Random(5)
        for _ in range(20):
            f = random_polynomial(rng, ring_xyz)
            p = Point.affine(*(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)))
            assert translate_to_origin(translate_to_origin(f, p), -p) == f

    def test_translation_matches_substitution(self, ring_xy, poly):
        f = poly("x^3*y - 2*x*y^2 + 5", ring_xy)
        p = Point.affine(2, Fraction(-1, 3))
        shifted = substitute(
            f,
            {
                0: poly("x + 2", ring_xy),
                1: poly("y - 1/3", ring_xy),
            },
        )
        assert translate_to_origin(f, p) == shifted


# ==================== 阶 / jet / 加权 ====================


class TestOrderAndJets:
    """测试初始次数、jet 与加权初始部分"""

    def test_initial_degree_d_family(self, ring_xy, poly):
        assert initial_degree(poly("y^2*x - x^3 + x^4*y", ring_xy)) == 3

    def test_initial_degree_constant(self, ring_xy):
        assert initial_degree(Polynomial.constant(ring_xy, 5)) == 0

    def test_initial_degree_non_eulerian(self, non_eulerian_curve):
        assert initial_degree(non_eulerian_curve) == 5

    def test_initial_degree_zero(self, ring_xy):
        with pytest.raises(ValueError):
            initial_degree(Polynomial.zero(ring_xy))

    def test_jet(self, ring_xy, poly):
        assert jet(poly("y^2 - x^3", ring_xy), 2) == poly("y^2", ring_xy)
        f = poly("(x^2-y^2)^3 - x^2*y^2", ring_xy)
        assert jet(f, 4) == poly("-x^2*y^2", ring_xy)
        assert jet(f, f.total_degree()) == f

    def test_jet_decomposition(self, ring_xyz):
        """jet(f, d) + (f - jet(f, d)) = f，余项的阶更高"""
        rng = random.Random(13)
        for _ in range(20):
            f = random_polynomial(rng, ring_xyz, n_terms=5)
            if f.is_zero:
                continue
            d = initial_degree(f)
            rest = f - jet(f, d)
            assert jet(f, d) + rest == f
            if not rest.is_zero:
                assert initial_degree(rest) > d

    def test_weighted_initial_part(self, non_eulerian_curve, poly, ring_xy):
        F, d = weighted_initial_part(non_eulerian_curve, (6, 5))
        assert F == poly("x^5 - y^6", ring_xy)
        assert d == 30

    def test_weighted_initial_part_homogeneous_weights(self, ring_xy, poly):
        F, d = weighted_initial_part(poly("y^2*x - x^3 + x^4", ring_xy), (1, 1))
        assert F == poly("y^2*x - x^3", ring_xy)
        assert d == 3

    def test_weighted_initial_part_of_quasi_homogeneous(self, ring_xyz, poly):
        f = poly("x^3*y^2 + x^5*z + y^4", ring_xyz)
        assert weighted_initial_part(f, (2, 3, 2)) == (f, 12)

    def test_weighted_initial_part_rejects_bad_weights(self, ring_xy, poly):
        with pytest.raises(ValueError):
            weighted_initial_part(poly("x", ring_xy), (1, 0))


# ==================== 代换 ====================


class TestSubstitution:
    """测试代换与坐标变换"""

    def test_linear_change_and_inverse(self, ring_xy, poly):
        f = poly("y^2 - x^3", ring_xy)
        g = linear_change(f, [[1, 1], [0, 1]])
        assert g == poly("y^2 - (x+y)^3", ring_xy)
        assert linear_change(g, [[1, -1], [0, 1]]) == f

    def test_set_variables(self, ring_xyz, poly):
        f = poly("x^2*z + y*z^2 - z^3 + x", ring_xyz)
        g = set_variables(f, {2: 0})
        assert g == poly("x", RingContext.of("x", "y"))
        h = set_variables(f, {0: 1, 2: 2})
        assert h == Polynomial(RingContext.of("y"), {(0,): -5, (1,): 4})

    def test_substitute_into_larger_ring(self, ring_xy, ring_xyz, poly):
        f = poly("x*y", ring_xy)
        g = substitute(f, {1: poly("z^2", ring_xyz)}, ring_xyz)
        assert g == poly("x*z^2", ring_xyz)
