"""Parser for cubic equations written as text, e.g. "x^3 - 12x + 16 = 0".

Grammar (whitespace-insensitive, locale-independent, '.' decimal point):

    equation := term+ ('=' '0')?
    term     := [+|-] coefficient? '*'? ('x' ('^' digits)?)?
    coefficient := number ('*' sqrtlit)? | sqrtlit
    number   := digits '/' digits | decimal | digits
    sqrtlit  := 'sqrt' '(' digits ')'

Integers, rationals a/b, and decimals parse to exact Fractions (decimals
exactly: "0.75" -> 3/4); sqrt(m) stays exact for perfect squares and falls
back to a float otherwise. A term needs a coefficient or an x-part, powers
may not exceed 3, and the x^3 coefficient must be nonzero.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .reduction import GeneralCubic

_INT = re.compile(r"\d+")
_DECIMAL = re.compile(r"\d+\.\d+|\.\d+|\d+\.")


class ParseError(ValueError):
    """Syntax or degree error, annotated with the offending position."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        pointer = ""
        if text:
            pointer = f"\n  {text}\n  {' ' * position}^"
        super().__init__(f"{message} (at position {position}){pointer}")


@dataclass(frozen=True)
class Term:
    sign: int
    coefficient: Union[Fraction, float]
    power: int


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def accept(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def match(self, regex: re.Pattern) -> Optional[str]:
        self.skip_ws()
        m = regex.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return m.group()
        return None

    def error(self, message: str):
        raise ParseError(message, self.pos, self.text)


def _parse_sqrt(sc: _Scanner) -> Optional[Union[Fraction, float]]:
    save = sc.pos
    if not sc.accept("sqrt"):
        return None
    if not sc.accept("("):
        sc.pos = save
        sc.error("expected '(' after sqrt")
    digits = sc.match(_INT)
    if digits is None:
        sc.error("expected a nonnegative integer inside sqrt()")
    if not sc.accept(")"):
        sc.error("expected ')'")
    n = int(digits)
    root = math.isqrt(n)
    if root * root == n:
        return Fraction(root)
    return math.sqrt(n)


def _parse_coefficient(sc: _Scanner) -> Optional[Union[Fraction, float]]:
    """number ('*' sqrtlit)? | sqrtlit, or None if neither is present."""
    if (value := _parse_sqrt(sc)) is not None:
        return value
    if (dec := sc.match(_DECIMAL)) is not None:
        number = Fraction(dec if dec[-1] != "." else dec + "0")
    elif (digits := sc.match(_INT)) is not None:
        number = Fraction(int(digits))
        save = sc.pos
        if sc.accept("/"):
            denom = sc.match(_INT)
            if denom is None:
                sc.error("expected an integer denominator after '/'")
            if int(denom) == 0:
                sc.pos = save + 1
                sc.error("zero denominator")
            number = Fraction(int(digits), int(denom))
    else:
        return None
    save = sc.pos
    if sc.accept("*"):
        surd = _parse_sqrt(sc)
        if surd is None:
            sc.pos = save  # the '*' separates coefficient and x instead
            return number
        if isinstance(surd, Fraction):
            return number * surd
        return float(number) * surd
    return number


def parse_terms(text: str) -> list[Term]:
    """Tokenize the equation into signed terms; raises ParseError."""
    sc = _Scanner(text)
    terms: list[Term] = []
    if sc.at_end():
        sc.error("empty input")
    while not sc.at_end():
        if sc.accept("="):
            if not sc.accept("0"):
                sc.error("only '= 0' is supported on the right-hand side")
            if not sc.at_end():
                sc.error("unexpected input after '= 0'")
            break
        term_start = sc.pos
        sign = 1
        if sc.accept("+"):
            sign = 1
        elif sc.accept("-"):
            sign = -1
        elif terms:
            sc.error("expected '+', '-' or '=' between terms")
        coefficient = _parse_coefficient(sc)
        starred = coefficient is not None and sc.accept("*")
        power = 0
        if sc.accept("x") or sc.accept("X"):
            power = 1
            if sc.accept("^"):
                digits = sc.match(_INT)
                if digits is None:
                    sc.error("expected an integer exponent after '^'")
                power = int(digits)
                if power > 3:
                    sc.pos = term_start
                    sc.error(f"power {power} exceeds 3 (cubics only)")
        elif starred:
            sc.error("expected 'x' after '*'")
        elif coefficient is None:
            sc.error("expected a coefficient or 'x'")
        terms.append(Term(sign, coefficient if coefficient is not None else Fraction(1), power))
    return terms


def parse_cubic(text: str) -> GeneralCubic:
    """Parse an equation string into a (monic-normalized) general cubic."""
    terms = parse_terms(text)
    coeffs: dict[int, Union[Fraction, float]] = {0: Fraction(0), 1: Fraction(0), 2: Fraction(0), 3: Fraction(0)}
    for t in terms:
        coeffs[t.power] = coeffs[t.power] + t.sign * t.coefficient
    if coeffs[3] == 0:
        raise ParseError("not a cubic: the x^3 coefficient is zero", 0, text)
    return GeneralCubic(coeffs[2], coeffs[1], coeffs[0], lead=coeffs[3])


def parse_coefficient(text: str) -> Union[Fraction, float]:
    """Parse a standalone coefficient literal: '9/2', '-0.5', '64*sqrt(2)', 'sqrt(3)'."""
    sc = _Scanner(text)
    sign = 1
    if sc.accept("-"):
        sign = -1
    elif sc.accept("+"):
        sign = 1
    value = _parse_coefficient(sc)
    if value is None:
        sc.error("expected a number")
    if not sc.at_end():
        sc.error("unexpected trailing input")
    return sign * value
