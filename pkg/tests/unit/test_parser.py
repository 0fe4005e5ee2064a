"""多项式语法与输入文件测试"""

import random
from fractions import Fraction

import pytest

from src.core.errors import ParseError, UnknownVariableError
from src.core.parser import parse_polynomial, parse_program, tokenize
from src.core.polynomial import Polynomial, RingContext, format_polynomial
from src.core.types import Setting
from tests.unit.test_polynomial import random_polynomial


class TestParsePolynomial:
    """测试单个多项式的解析"""

    def test_d4_normal_form(self, ring_xy):
        f = parse_polynomial("y^2*x - x^3", ring_xy)
        assert f == Polynomial(ring_xy, {(1, 2): 1, (3, 0): -1})

    def test_sextic(self, ring_xyz, sextic):
        x, y, z = (Polynomial.variable(ring_xyz, v) for v in "xyz")
        assert sextic == (x**2 - y**2) ** 3 - x**2 * y**2 * z**2

    def test_implicit_multiplication(self, ring_xy):
        assert parse_polynomial("3/2 x^2 y", ring_xy) == parse_polynomial("3/2*x^2*y", ring_xy)
        assert parse_polynomial("2(x+y)", ring_xy) == parse_polynomial("2*x + 2*y", ring_xy)

    def test_unary_minus_binds_after_power(self, ring_xy):
        assert parse_polynomial("-x^2", ring_xy) == Polynomial(ring_xy, {(2, 0): -1})

    def test_rational_coefficients(self, ring_xy):
        f = parse_polynomial("1/3*x - 2/6", ring_xy)
        assert f.terms[(1, 0)] == Fraction(1, 3)
        assert f.constant_term == Fraction(-1, 3)

    def test_dangling_power(self, ring_xy):
        with pytest.raises(ParseError) as exc_info:
            parse_polynomial("x^", ring_xy)
        assert exc_info.value.line == 1

    def test_fractional_exponent_rejected(self, ring_xy):
        with pytest.raises(ParseError):
            parse_polynomial("x^1/2", ring_xy)

    def test_unknown_variable(self, ring_xy):
        with pytest.raises(UnknownVariableError) as exc_info:
            parse_polynomial("x + q", ring_xy)
        assert (exc_info.value.line, exc_info.value.column) == (1, 5)

    def test_unbalanced_parenthesis(self, ring_xy):
        with pytest.raises(ParseError):
            parse_polynomial("(x + y", ring_xy)

    def test_bad_character(self, ring_xy):
        with pytest.raises(ParseError):
            parse_polynomial("x $ y", ring_xy)

    def test_zero_denominator(self, ring_xy):
        with pytest.raises(ParseError, match="zero denominator") as exc_info:
            parse_polynomial("y^2 + 1/0*x^3", ring_xy)
        assert (exc_info.value.line, exc_info.value.column) == (1, 7)

    def test_round_trip_random(self, ring_xyz):
        """parse(print(f)) = f"""
        rng = random.Random(17)
        for _ in range(50):
            f = random_polynomial(rng, ring_xyz, n_terms=6, max_degree=5)
            assert parse_polynomial(format_polynomial(f), ring_xyz) == f

    def test_print_format(self, ring_xy):
        f = parse_polynomial("1 - x + 3/2*x^2*y", ring_xy)
        assert str(f) == "3/2*x^2*y - x + 1"
        assert str(Polynomial.zero(ring_xy)) == "0"


class TestTokenizer:
    """测试记号切分"""

    def test_line_and_column(self):
        tokens = tokenize("ring x;\n  f = x;")
        f_token = tokens[3]
        assert f_token.text == "f"
        assert (f_token.line, f_token.column) == (2, 3)

    def test_comments_skipped(self):
        tokens = tokenize("# header\nx")
        assert [t.kind for t in tokens] == ["id", "end"]


class TestParseProgram:
    """测试输入文件"""

    def test_full_program(self):
        text = (
            "# sextic from the worked example\n"
            "ring x,y,z;\n"
            "setting projective;\n"
            "f = (x^2-y^2)^3 - x^2*y^2*z^2;\n"
            "g = x*y;\n"
        )
        program = parse_program(text)
        assert program.ring == RingContext.of("x", "y", "z")
        assert program.setting is Setting.PROJECTIVE
        assert list(program.polynomials) == ["f", "g"]
        assert program.sources["f"] == "(x^2-y^2)^3 - x^2*y^2*z^2"

    def test_setting_optional(self):
        program = parse_program("ring x,y;\nf = y^2 - x^3;")
        assert program.setting is None
        assert program.polynomials["f"] == parse_polynomial("y^2 - x^3", program.ring)

    def test_missing_ring(self):
        with pytest.raises(ParseError):
            parse_program("f = x;")

    def test_missing_semicolon(self):
        with pytest.raises(ParseError) as exc_info:
            parse_program("ring x;\nf = x\ng = x;")
        assert exc_info.value.line == 3

    def test_duplicate_name(self):
        with pytest.raises(ParseError):
            parse_program("ring x;\nf = x;\nf = x^2;")

    def test_unknown_setting(self):
        with pytest.raises(ParseError):
            parse_program("ring x;\nsetting weird;\nf = x;")

    def test_duplicate_variables(self):
        with pytest.raises(ParseError):
            parse_program("ring x,x;\nf = x;")

    def test_underscore_prefix_reserved(self):
        """下划线开头的变量名留给内部辅助变量"""
        with pytest.raises(ParseError, match="reserved") as exc_info:
            parse_program("ring x,_t;\nf = x;")
        assert (exc_info.value.line, exc_info.value.column) == (1, 8)

    def test_zero_denominator_in_program(self):
        with pytest.raises(ParseError) as exc_info:
            parse_program("ring x,y;\nf = 1/0*x^3 + y^2;")
        assert (exc_info.value.line, exc_info.value.column) == (2, 5)
