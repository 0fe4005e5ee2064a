"""逐点分析器测试"""

import pytest

from src.core.config import engine_overrides
from src.core.types import ADEFamily, ADEType, HypersurfaceInput, Point, Setting
from src.ideals.ideal import Ideal
from src.singularity import analyze_hypersurface, analyze_point, jacobian_ideal, local_chart


@pytest.fixture
def sextic_input(sextic):
    return HypersurfaceInput(sextic, Setting.PROJECTIVE, name="sextic")


class TestLocalChart:
    def test_default_chart_is_last_nonzero(self, sextic_input):
        chart = local_chart(sextic_input, Point.homogeneous(1, 1, 0))
        assert chart.chart == "y"
        assert chart.point == Point.affine(1, 0)

    def test_preference(self, sextic_input):
        chart = local_chart(sextic_input, Point.homogeneous(1, 1, 0), preference=["x"])
        assert chart.chart == "x"
        assert chart.point == Point.affine(1, 0)

    def test_preference_skips_charts_missing_the_point(self, sextic_input):
        chart = local_chart(sextic_input, Point.homogeneous(0, 0, 1), preference=["x", "y"])
        assert chart.chart == "z"

    def test_affine_input_unchanged(self, ring_xy, poly):
        f = poly("y^2 - x^3", ring_xy)
        chart = local_chart(HypersurfaceInput(f), Point.origin(2))
        assert chart.f == f
        assert chart.chart is None


class TestAnalyzeSextic:
    """六次曲线：一个四重点与两个尖点"""

    def test_reports(self, sextic_input):
        analysis = analyze_hypersurface(sextic_input)
        assert analysis.complete
        by_point = {r.point: r for r in analysis.reports}
        quadruple = by_point[Point.homogeneous(0, 0, 1)]
        assert (quadruple.milnor, quadruple.tjurina, quadruple.multiplicity) == (13, 12, 4)
        assert quadruple.chart == "z"
        assert quadruple.ade == ADEType(ADEFamily.NOT_SIMPLE)
        assert not quadruple.locally_eulerian
        assert quadruple.local_complete_intersection is False
        assert quadruple.socle_cyclic is False
        assert quadruple.euler_defect == 1

        for p in (Point.homogeneous(1, 1, 0), Point.homogeneous(1, -1, 0)):
            cusp = by_point[p]
            assert cusp.ade == ADEType(ADEFamily.A, 2)
            assert (cusp.milnor, cusp.tjurina, cusp.delta, cusp.branches) == (2, 2, 1, 1)
            assert cusp.locally_eulerian
            assert cusp.local_complete_intersection is True

    def test_reports_sorted(self, sextic_input):
        analysis = analyze_hypersurface(sextic_input, with_socle=False)
        points = [r.point for r in analysis.reports]
        assert points == sorted(points, key=lambda p: p.coordinates)
        assert all(r.socle_cyclic is None for r in analysis.reports)

    def test_parallel_matches_serial(self, sextic_input):
        serial = analyze_hypersurface(sextic_input, with_socle=False)
        with engine_overrides(workers=2):
            parallel = analyze_hypersurface(sextic_input, with_socle=False)
        assert parallel.reports == serial.reports

    def test_chart_preference_keeps_invariants(self, sextic_input):
        default = analyze_point(sextic_input, Point.homogeneous(1, 1, 0), with_socle=False)
        other = analyze_point(
            sextic_input, Point.homogeneous(1, 1, 0), preference=["x"], with_socle=False
        )
        assert other.chart == "x"
        assert (other.milnor, other.tjurina, other.ade) == (
            default.milnor,
            default.tjurina,
            default.ade,
        )


class TestAffineAnalysis:
    def test_tjurina_sum_is_global_length(self, ring_xy, poly):
        """Σ τ_p 等于 R/I(f) 的整体维数"""
        f = poly("y^2 - x^2*(x - 1)^2", ring_xy)
        analysis = analyze_hypersurface(HypersurfaceInput(f))
        total = sum(r.tjurina for r in analysis.reports)
        assert total == jacobian_ideal(f).quotient_dimension() == 2

    def test_three_variables_skip_ade(self, ring_xyz, poly):
        f = poly("x^2 + y^2 - z^3", ring_xyz)
        report = analyze_point(HypersurfaceInput(f), Point.origin(3))
        assert report.ade is None
        assert report.delta is None
        assert (report.milnor, report.tjurina) == (2, 2)
        assert report.chart is None

    def test_cubic_surface(self, cubic_surface):
        h = HypersurfaceInput(cubic_surface, Setting.PROJECTIVE)
        analysis = analyze_hypersurface(h)
        (report,) = analysis.reports
        assert report.point == Point.homogeneous(0, 0, 0, 1)
        assert report.chart == "w"
        assert report.locally_eulerian

    def test_incomplete_locus(self, ring_xy, poly):
        f = poly("y^2 - (x^2 - 2)^2", ring_xy)
        analysis = analyze_hypersurface(HypersurfaceInput(f))
        assert analysis.reports == []
        assert not analysis.complete
        assert isinstance(analysis.locus.leftover, Ideal)
