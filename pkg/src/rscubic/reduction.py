"""Cubic input forms and the quadratic-term elimination x -> x - a/3.

Coefficients may be floats or exact rationals (``fractions.Fraction``).
Rational inputs are kept rational through the substitution, which is what
lets whole-number examples come out exact downstream. Ints are promoted to
Fraction at construction so ``a / 3`` never silently turns exact input
into a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:
    from .chen import RootTriple

Coefficient = Union[Fraction, float]


class InvalidInputError(ValueError):
    """Raised for non-finite or otherwise unusable coefficients."""


def _coerce(value) -> Coefficient:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    value = float(value)
    if not math.isfinite(value):
        raise InvalidInputError(f"non-finite coefficient: {value!r}")
    return value


def is_exact(value) -> bool:
    return isinstance(value, (Fraction, int))


@dataclass(frozen=True)
class GeneralCubic:
    """Monic cubic x^3 + a*x^2 + b*x + c.

    A non-unit leading coefficient may be passed via ``lead``; the stored
    form is always monic (coefficients divided through).
    """

    a: Coefficient
    b: Coefficient
    c: Coefficient

    def __init__(self, a, b, c, lead=1):
        lead = _coerce(lead)
        if lead == 0:
            raise InvalidInputError("leading coefficient must be nonzero")
        object.__setattr__(self, "a", _coerce(a) / lead)
        object.__setattr__(self, "b", _coerce(b) / lead)
        object.__setattr__(self, "c", _coerce(c) / lead)

    @property
    def exact(self) -> bool:
        return is_exact(self.a) and is_exact(self.b) and is_exact(self.c)

    def __call__(self, x):
        """Evaluate at x (Horner); exact for rational x, complex-capable."""
        if isinstance(x, complex):
            return ((x + float(self.a)) * x + float(self.b)) * x + float(self.c)
        return ((x + self.a) * x + self.b) * x + self.c

    def __str__(self) -> str:
        return f"x^3 + ({self.a})x^2 + ({self.b})x + ({self.c})"


@dataclass(frozen=True)
class DepressedCubic:
    """x^3 + p*x + q."""

    p: Coefficient
    q: Coefficient

    def __init__(self, p, q):
        object.__setattr__(self, "p", _coerce(p))
        object.__setattr__(self, "q", _coerce(q))

    @property
    def exact(self) -> bool:
        return is_exact(self.p) and is_exact(self.q)

    def __call__(self, x):
        """Evaluate at x (Horner); exact for rational x, complex-capable."""
        if isinstance(x, complex):
            return (x * x + float(self.p)) * x + float(self.q)
        return (x * x + self.p) * x + self.q

    def __str__(self) -> str:
        return f"x^3 + ({self.p})x + ({self.q})"


@dataclass(frozen=True)
class Shift:
    """Records the translation: original_root = depressed_root - delta."""

    delta: Coefficient


def depress(cubic: GeneralCubic) -> tuple[DepressedCubic, Shift]:
    """Substitute x -> x - a/3, giving x^3 + px + q.

    p = -a^2/3 + b and q = 2a^3/27 - ab/3 + c; exact when the input is.
    """
    a, b, c = cubic.a, cubic.b, cubic.c
    p = b - a * a / 3
    q = 2 * a**3 / 27 - a * b / 3 + c
    return DepressedCubic(p, q), Shift(delta=a / 3)


def lift_roots(triple: "RootTriple", shift: Shift) -> "RootTriple":
    """Undo the depression shift on a root triple.

    Case tag, multiplicity, and the trig annotation ride along unchanged
    (the trig form keeps describing the depressed roots); exact values are
    shifted exactly when the shift itself is exact.
    """
    delta = shift.delta
    if delta == 0:
        return triple
    d = complex(delta)
    roots = tuple(x - d for x in triple.roots)
    exact = triple.exact
    if exact is not None:
        if is_exact(delta):
            exact = tuple(e.shift(-Fraction(delta)) if e is not None else None for e in exact)
        else:
            exact = None
    return replace(triple, roots=roots, exact=exact)
