"""多项式文本语法与输入文件格式

多项式语法：
- 变量为标识符；^ 表示乘方；因子之间的 * 可以省略
- 系数为整数或 p/q 有理数；允许括号与一元负号

输入文件（UTF-8，语句以分号结束，# 开头为注释）：

    ring x,y,z;
    setting projective;
    f = (x^2-y^2)^3 - x^2*y^2*z^2;
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

import structlog

from src.core.errors import ParseError, UnknownVariableError
from src.core.polynomial import Polynomial, RingContext
from src.core.types import Setting

logger = structlog.get_logger()

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<id>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^(),;=])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # num / id / op / end
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    """切分记号，记录行列号（从 1 开始）"""
    tokens: list[Token] = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup or ""
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _ExpressionParser:
    """递归下降：expr := [+-] term ((+|-) term)*；term := power ([*] power)*；
    power := atom [^ int]；atom := num | id | ( expr ) | - power
    """

    def __init__(self, tokens: list[Token], ring: RingContext, start: int = 0):
        self.tokens = tokens
        self.ring = ring
        self.pos = start

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _error(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def _accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.pos += 1
            return True
        return False

    def _starts_factor(self) -> bool:
        tok = self.current
        return tok.kind in ("num", "id") or (tok.kind == "op" and tok.text == "(")

    def parse_expression(self) -> Polynomial:
        negate = False
        if self._accept("-"):
            negate = True
        else:
            self._accept("+")
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            if self._accept("+"):
                result = result + self.parse_term()
            elif self._accept("-"):
                result = result - self.parse_term()
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_power()
        while True:
            if self._accept("*"):
                result = result * self.parse_power()
            elif self._starts_factor():
                result = result * self.parse_power()
            else:
                return result

    def parse_power(self) -> Polynomial:
        base = self.parse_atom()
        if self._accept("^"):
            tok = self.current
            if tok.kind != "num" or "/" in tok.text:
                raise self._error("expected a non-negative integer exponent")
            self.pos += 1
            return base ** int(tok.text)
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.current
        if tok.kind == "num":
            self.pos += 1
            try:
                value = Fraction(tok.text)
            except ZeroDivisionError:
                raise self._error("zero denominator", tok) from None
            return Polynomial.constant(self.ring, value)
        if tok.kind == "id":
            self.pos += 1
            if tok.text not in self.ring.variables:
                raise UnknownVariableError(
                    f"unknown variable {tok.text!r} (ring: {self.ring})", tok.line, tok.column
                )
            return Polynomial.variable(self.ring, tok.text)
        if self._accept("("):
            inner = self.parse_expression()
            if not self._accept(")"):
                raise self._error("expected ')'")
            return inner
        if self._accept("-"):
            return -self.parse_power()
        if tok.kind == "end":
            raise self._error("unexpected end of input")
        raise self._error(f"unexpected token {tok.text!r}")


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """解析单个多项式"""
    tokens = tokenize(text)
    parser = _ExpressionParser(tokens, ring)
    result = parser.parse_expression()
    if parser.current.kind != "end":
        raise ParseError(
            f"unexpected token {parser.current.text!r}",
            parser.current.line,
            parser.current.column,
        )
    return result


@dataclass
class Program:
    """解析后的输入文件"""

    ring: RingContext
    setting: Setting | None = None
    polynomials: dict[str, Polynomial] = field(default_factory=dict)
    sources: dict[str, str] = field(default_factory=dict)


def parse_program(text: str) -> Program:
    """解析输入文件：ring 语句、可选的 setting 语句、若干 name = expr 语句"""
    tokens = tokenize(text)
    pos = 0
    ring: RingContext | None = None
    setting: Setting | None = None
    polynomials: dict[str, Polynomial] = {}
    sources: dict[str, str] = {}

    def expect_semicolon(at: int) -> int:
        tok = tokens[at]
        if tok.kind != "op" or tok.text != ";":
            raise ParseError("expected ';'", tok.line, tok.column)
        return at + 1

    while tokens[pos].kind != "end":
        tok = tokens[pos]
        if tok.kind != "id":
            raise ParseError(f"expected a statement, got {tok.text!r}", tok.line, tok.column)

        if tok.text == "ring" and tokens[pos + 1].kind == "id":
            if ring is not None:
                raise ParseError("ring declared twice", tok.line, tok.column)
            names: list[str] = []
            pos += 1
            while True:
                name_tok = tokens[pos]
                if name_tok.kind != "id":
                    raise ParseError("expected a variable name", name_tok.line, name_tok.column)
                if name_tok.text.startswith("_"):
                    raise ParseError(
                        f"variable names starting with '_' are reserved: {name_tok.text!r}",
                        name_tok.line,
                        name_tok.column,
                    )
                names.append(name_tok.text)
                pos += 1
                if tokens[pos].kind == "op" and tokens[pos].text == ",":
                    pos += 1
                    continue
                break
            try:
                ring = RingContext(tuple(names))
            except ValueError as e:
                raise ParseError(str(e), tok.line, tok.column) from e
            pos = expect_semicolon(pos)
            continue

        if tok.text == "setting" and tokens[pos + 1].kind == "id":
            value_tok = tokens[pos + 1]
            try:
                setting = Setting(value_tok.text)
            except ValueError:
                raise ParseError(
                    f"unknown setting {value_tok.text!r}", value_tok.line, value_tok.column
                ) from None
            pos = expect_semicolon(pos + 2)
            continue

        # name = expr ;
        eq = tokens[pos + 1]
        if eq.kind != "op" or eq.text != "=":
            raise ParseError("expected '='", eq.line, eq.column)
        if ring is None:
            raise ParseError("polynomial defined before the ring statement", tok.line, tok.column)
        if tok.text in polynomials:
            raise ParseError(f"polynomial {tok.text!r} defined twice", tok.line, tok.column)
        parser = _ExpressionParser(tokens, ring, pos + 2)
        start = tokens[pos + 2]
        polynomials[tok.text] = parser.parse_expression()
        end = tokens[parser.pos]
        sources[tok.text] = _slice_source(text, start, end)
        pos = expect_semicolon(parser.pos)

    if ring is None:
        last = tokens[-1]
        raise ParseError("missing ring statement", last.line, last.column)

    logger.debug(
        "program_parsed",
        ring=str(ring),
        setting=setting.value if setting else None,
        polynomials=list(polynomials),
    )
    return Program(ring=ring, setting=setting, polynomials=polynomials, sources=sources)


def _slice_source(text: str, start: Token, end: Token) -> str:
    """取出 [start, end) 之间的原始文本"""
    lines = text.split("\n")

    def offset(tok: Token) -> int:
        return sum(len(line) + 1 for line in lines[: tok.line - 1]) + tok.column - 1

    return " ".join(text[offset(start) : offset(end)].split())
