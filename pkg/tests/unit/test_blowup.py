"""对称代数、Rees 代数与线性型判定测试"""

import json
import logging

import pytest

from src.blowup import (
    PresentationKind,
    gradient_linear_type,
    is_linear_type,
    jacobian_linear_type,
    rees_ideal,
    substitute_images,
    symmetric_ideal,
    syzygy_entries_codim_check,
)
from src.core.calculus import gradient
from src.core.constants import (
    CRITERION_LOCAL_CI,
    CRITERION_LOCALLY_EULERIAN,
    CRITERION_REES_DIRECT,
    CRITERION_SOCLE_CYCLIC,
    CRITERION_SYZYGY_CODIM,
)
from src.core.errors import CriteriaDisagreementError
from src.core.logging import setup_logging
from src.core.polynomial import RingContext
from src.core.types import LinearTypeVerdict, Point
from src.ideals.ideal import Ideal


def ideal(ring, poly, *texts):
    return Ideal([poly(t, ring) for t in texts], ring)


def same_up_to_scalar(a, b) -> bool:
    return a.monic() == b.monic()


# ==================== 表示理想 ====================


class TestSymmetricIdeal:
    """测试 I_1([T]·φ)"""

    def test_koszul(self, ring_xy, poly):
        sym = symmetric_ideal(ideal(ring_xy, poly, "x", "y"))
        assert sym.kind is PresentationKind.SYMMETRIC
        assert sym.t_variables == ("T1", "T2")
        (g,) = sym.generators
        assert same_up_to_scalar(g, poly("y*T1 - x*T2", sym.ring))

    def test_principal_is_zero(self, ring_xy, poly):
        sym = symmetric_ideal(ideal(ring_xy, poly, "y^2 - x^3"))
        assert sym.is_zero

    def test_t_variable_clash(self, poly):
        ring = RingContext.of("T1", "x")
        sym = symmetric_ideal(ideal(ring, poly, "T1", "x"))
        assert sym.t_variables == ("_T1", "_T2")

    def test_surface_syzygies(self, ring_xyzw, poly):
        f = poly("x^4 - x*y*w^2 + z*w^3", ring_xyzw)
        sym = symmetric_ideal(Ideal(gradient(f), ring_xyzw))
        assert sym.contains(poly("2*y*T2 + 3*z*T3 - w*T4", sym.ring))
        assert sym.contains(poly("w*T2 + x*T3", sym.ring))
        assert all(sym.t_degree(g) == 1 for g in sym.generators)


class TestReesIdeal:
    """测试 (T_i - t·f_i) ∩ R[T]"""

    def test_regular_sequence(self, ring_xy, poly):
        i = ideal(ring_xy, poly, "x", "y")
        rees = rees_ideal(i)
        assert rees.kind is PresentationKind.REES
        assert rees.ideal().same_as(symmetric_ideal(i).ideal())

    def test_square_of_maximal_ideal(self, ring_xy, poly):
        rees = rees_ideal(ideal(ring_xy, poly, "x^2", "x*y", "y^2"))
        assert rees.contains(poly("T2^2 - T1*T3", rees.ring))
        assert rees.of_t_degree(2)

    def test_generators_map_to_zero(self, ring_xy, poly):
        rees = rees_ideal(ideal(ring_xy, poly, "x^2", "x*y", "y^3"))
        for g in rees.generators:
            assert substitute_images(g, rees).is_zero
            assert rees.is_t_homogeneous(g)

    def test_symmetric_contained_in_rees(self, ring_xy, poly):
        for texts in (("x", "y"), ("x^2", "x*y", "y^2"), ("x^2", "y^3", "x*y^2")):
            i = ideal(ring_xy, poly, *texts)
            rees = rees_ideal(i)
            assert all(rees.contains(g) for g in symmetric_ideal(i).generators)

    def test_degree_one_parts_agree(self, ring_xy, poly):
        i = ideal(ring_xy, poly, "x^2", "x*y", "y^2")
        sym = symmetric_ideal(i)
        rees = rees_ideal(i)
        assert Ideal(rees.degree_one_part(), rees.ring).same_as(sym.ideal())

    def test_zero_ideal(self, ring_xy):
        rees = rees_ideal(Ideal.zero(ring_xy))
        assert rees.is_zero
        assert rees.t_variables == ()


# ==================== 直接判据 ====================


class TestIsLinearType:
    def test_variables(self, ring_xyz, poly):
        verdict = is_linear_type(ideal(ring_xyz, poly, "x", "y", "z"))
        assert verdict.verdict is True
        assert verdict.methods == [CRITERION_REES_DIRECT]
        assert verdict.witness is None

    def test_product_of_principal_and_regular(self, ring_xy, poly):
        """x·(x, y) 的 Rees 代数与 (x, y) 的同构"""
        assert is_linear_type(ideal(ring_xy, poly, "x^2", "x*y")).verdict is True

    def test_square_of_maximal_ideal(self, ring_xy, poly):
        i = ideal(ring_xy, poly, "x^2", "x*y", "y^2")
        verdict = is_linear_type(i)
        assert verdict.verdict is False
        sym = symmetric_ideal(i)
        rees = rees_ideal(i)
        witness = verdict.witness
        assert witness is not None
        assert same_up_to_scalar(witness, poly("T2^2 - T1*T3", rees.ring))
        assert rees.contains(witness)
        assert not sym.contains(witness)

    def test_fermat_gradient(self, ring_xyz, poly):
        f = poly("x^3 + y^3 + z^3", ring_xyz)
        assert is_linear_type(Ideal(gradient(f), ring_xyz)).verdict is True

    def test_cross_check_enabled(self, ring_xy, poly, default_engine):
        from src.core.config import engine_overrides

        with engine_overrides(cross_check_oracles=True):
            verdict = is_linear_type(ideal(ring_xy, poly, "x^2", "x*y", "y^2"))
        assert verdict.verdict is False

    @pytest.mark.slow
    def test_surface_witness(self, ring_xyzw, poly):
        f = poly("x^4 - x*y*w^2 + z*w^3", ring_xyzw)
        i = Ideal(gradient(f), ring_xyzw)
        verdict = is_linear_type(i)
        assert verdict.verdict is False
        rees = rees_ideal(i)
        assert rees.t_degree(verdict.witness) == 2
        assert rees.contains(poly("4*x*T2^2 - w*T1*T3 - y*T3^2", rees.ring))


class TestSyzygyEntriesCodim:
    def test_plane_quintic(self, ring_xyz, poly):
        f = poly("y^4*z - x^5 + x^2*y^3", ring_xyz)
        assert syzygy_entries_codim_check(Ideal(gradient(f), ring_xyz), 2)

    def test_smooth_cubic(self, ring_xyz, poly):
        f = poly("x^3 + y^3 + z^3", ring_xyz)
        assert syzygy_entries_codim_check(gradient(f), 2)

    def test_zero_partial_gives_unit_entry(self, ring_xyz, poly):
        f = poly("x^3 + y^3 + x*y^2", ring_xyz)
        assert syzygy_entries_codim_check(gradient(f), 2)

    def test_principal_has_no_syzygies(self, ring_xyz, poly):
        assert not syzygy_entries_codim_check(ideal(ring_xyz, poly, "x*y*z"), 2)

    def test_low_codimension(self, ring_xyz, poly):
        """(xz, yz) 的合冲 (y, -x) 只生成余维 2 的理想"""
        assert not syzygy_entries_codim_check(ideal(ring_xyz, poly, "x*z", "y*z"), 2)

    def test_surface_with_singular_line(self, ring_xyzw, poly):
        """奇异轨迹是一条直线，合冲矩阵元素理想的余维数仍为 4"""
        f = poly("x^4 - x*y*w^2 + z*w^3", ring_xyzw)
        assert syzygy_entries_codim_check(gradient(f), 3)

    @pytest.mark.slow
    def test_quartic_surfaces(self, ring_xyzw, poly):
        for text in (
            "x^4 + y^4 + z^4 + z^2*w^2 + x*y*z*w",
            "x^2*z^2 + x^2*w^2 + y^2*z^2 + z^2*w^2",
        ):
            f = poly(text, ring_xyzw)
            assert syzygy_entries_codim_check(Ideal(gradient(f), ring_xyzw), 3)


# ==================== Jacobian 线性型 ====================


class TestJacobianLinearType:
    """仿射超曲面：逐点判据与直接判据"""

    def test_cusp(self, ring_xy, poly):
        verdict = jacobian_linear_type(poly("y^2 - x^3", ring_xy))
        assert verdict.verdict is True
        assert verdict.methods == [
            CRITERION_LOCAL_CI,
            CRITERION_LOCALLY_EULERIAN,
            CRITERION_SOCLE_CYCLIC,
        ]
        assert verdict.informational == {"quasi-homogeneous": True}
        assert [r.point for r in verdict.evidence] == [Point.origin(2)]

    def test_cusp_with_direct_rees(self, ring_xy, poly):
        verdict = jacobian_linear_type(poly("y^2 - x^3", ring_xy), direct_rees=True)
        assert verdict.verdict is True
        assert CRITERION_REES_DIRECT in verdict.methods

    def test_non_eulerian_curve(self, non_eulerian_curve):
        verdict = jacobian_linear_type(non_eulerian_curve)
        assert verdict.verdict is False
        assert verdict.failing_points == [Point.origin(2)]
        assert verdict.informational == {"quasi-homogeneous": False}

    def test_semiquasi_d4(self, ring_xy, poly):
        verdict = jacobian_linear_type(poly("y^2*x - x^3 + x^4*y", ring_xy))
        assert verdict.verdict is True

    def test_smooth(self, ring_xy, poly):
        verdict = jacobian_linear_type(poly("y - x^2", ring_xy))
        assert verdict.verdict is True
        assert verdict.evidence == []

    def test_positive_dimensional_locus_has_no_verdict(self, ring_xyz, poly):
        verdict = jacobian_linear_type(poly("x^3*y^2 + x^5*z + y^4", ring_xyz))
        assert verdict.verdict is None
        assert verdict.methods == []
        assert "dimension 1" in verdict.caveats[0]

    def test_disagreement_is_fatal(self, ring_xy, poly, mocker):
        fake = LinearTypeVerdict(
            verdict=False,
            methods=[CRITERION_REES_DIRECT],
            witness=poly("x", ring_xy),
        )
        mocker.patch("src.blowup.linear_type.is_linear_type", return_value=fake)
        with pytest.raises(CriteriaDisagreementError) as exc_info:
            jacobian_linear_type(poly("y^2 - x^3", ring_xy), direct_rees=True)
        assert exc_info.value.results[CRITERION_REES_DIRECT] is False
        assert exc_info.value.exit_code == 4

    def test_verdict_written_to_audit_log(self, ring_xy, poly, isolated_logging):
        setup_logging(log_dir=str(isolated_logging), enable_audit=True)
        jacobian_linear_type(poly("y^2 - x^3", ring_xy), name="cusp")
        for handler in logging.getLogger("audit").handlers:
            handler.flush()

        lines = (isolated_logging / "audit.log").read_text().splitlines()
        record = json.loads(lines[-1])
        assert record["event"] == "linear_type_verdict"
        assert record["name"] == "cusp"
        assert record["verdict"] is True


# ==================== 梯度线性型 ====================


class TestGradientLinearType:
    """射影超曲面：余维数判据与逐点判据"""

    def test_smooth_cubic(self, ring_xyz, poly):
        verdict = gradient_linear_type(poly("x^3 + y^3 + z^3", ring_xyz))
        assert verdict.verdict is True
        assert verdict.methods[0] == CRITERION_SYZYGY_CODIM
        assert verdict.evidence == []

    def test_nodal_cubic(self, ring_xyz, poly):
        verdict = gradient_linear_type(poly("y^2*z - x^3 - x^2*z", ring_xyz))
        assert verdict.verdict is True
        assert verdict.informational == {"simple-singularities": True}

    def test_cubic_surface(self, cubic_surface):
        verdict = gradient_linear_type(cubic_surface)
        assert verdict.verdict is True
        assert [r.point for r in verdict.evidence] == [Point.homogeneous(0, 0, 0, 1)]

    def test_quintic_with_non_simple_point(self, ring_xyz, poly):
        """唯一奇点 [0:0:1] 的重数为 4，不是简单奇点，但曲线仍是梯度线性型"""
        verdict = gradient_linear_type(poly("y^4*z - x^5 + x^2*y^3", ring_xyz))
        assert verdict.verdict is True
        assert verdict.methods[0] == CRITERION_SYZYGY_CODIM
        assert CRITERION_LOCALLY_EULERIAN in verdict.methods
        assert [r.point for r in verdict.evidence] == [Point.homogeneous(0, 0, 1)]
        assert verdict.informational == {"simple-singularities": False}

    @pytest.mark.slow
    def test_one_dimensional_locus(self, ring_xyzw, poly):
        f = poly("x^2*z^2 + x^2*w^2 + y^2*z^2 + z^2*w^2", ring_xyzw)
        verdict = gradient_linear_type(f)
        assert verdict.verdict is None
        assert verdict.methods == []
        assert verdict.informational == {CRITERION_SYZYGY_CODIM: True}
        assert verdict.caveats

    @pytest.mark.slow
    def test_one_dimensional_locus_with_direct_rees(self, ring_xyzw, poly):
        f = poly("x^2*z^2 + x^2*w^2 + y^2*z^2 + z^2*w^2", ring_xyzw)
        verdict = gradient_linear_type(f, direct_rees=True)
        assert verdict.verdict is True
        assert verdict.methods == [CRITERION_REES_DIRECT]
        assert verdict.informational == {CRITERION_SYZYGY_CODIM: True}

    def test_codim_alone_is_not_a_verdict(self, ring_xyzw, poly):
        """余维数判据成立而曲面并非梯度线性型；没有直接比较时不给结论"""
        f = poly("x^4 - x*y*w^2 + z*w^3", ring_xyzw)
        verdict = gradient_linear_type(f)
        assert verdict.verdict is None
        assert verdict.methods == []
        assert verdict.informational == {CRITERION_SYZYGY_CODIM: True}
        assert any("direct-rees" in c for c in verdict.caveats)

    @pytest.mark.slow
    def test_one_dimensional_locus_decided_by_direct_rees(self, ring_xyzw, poly):
        """余维数判据成立但并非线性型：直接比较给出结论"""
        f = poly("x^4 - x*y*w^2 + z*w^3", ring_xyzw)
        verdict = gradient_linear_type(f, direct_rees=True)
        assert verdict.verdict is False
        assert verdict.methods == [CRITERION_REES_DIRECT]
        assert verdict.informational == {CRITERION_SYZYGY_CODIM: True}
        assert verdict.witness is not None
