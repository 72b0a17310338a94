"""Roots of x^3 + px + q through the r,s factorization.

With p = -3rs and q = rs(r+s) the cubic splits (for r != s) as

    x^3 - 3rsx + rs(r+s) = s/(s-r) * (x-r)^3 + r/(r-s) * (x-s)^3,

so a root satisfies ((x-r)/(x-s))^3 = r/s and every case reduces to cube
roots of the ratio r/s:

* r = s:           (x-r)^2 (x+2r), roots r, r, -2r;
* r, s real:       one real root -r^(1/3) s^(1/3) (r^(1/3) + s^(1/3)) plus
                   an omega-twisted conjugate pair (real cube roots);
* s = conj(r):     three real roots -2|r| cos(theta/3 + 2k pi/3) with
                   theta = Arg(r) -- no complex intermediates at all;
* any cube roots:  the uniform product form works for every branch choice,
                   and the Moebius map x = (r - su)/(1 - u) over the cube
                   roots u of r/s gives the same set.

p = 0 or q = 0 fall outside the decomposition and are solved directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .decompose import CaseTag, classify, compute_rs
from .numerics import (
    OMEGA,
    OMEGA2,
    CubeRootBranch,
    cube_root,
    cube_roots_all,
    principal_arg,
    real_cube_root,
)
from .reduction import DepressedCubic, GeneralCubic, depress, is_exact, lift_roots

_TWO_PI_3 = 2.0 * math.pi / 3.0
_SQRT3 = math.sqrt(3.0)

# Roots closer than this (relative to the largest root) are annotated as a
# multiple root by the approximate solution paths.
_MULTIPLICITY_TOL = 1e-8


class InvalidCaseError(ValueError):
    """Raised when a solver is applied outside its case (e.g. Moebius with r = s)."""


def _square_free_split(n: int, max_trial: int = 10**6) -> tuple[int, int]:
    """Write n = k^2 * m with m square-free (best effort under the trial cap)."""
    k, m = 1, 1
    d = 2
    while d * d <= n and d <= max_trial:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            k *= d ** (e // 2)
            if e % 2:
                m *= d
        d += 1 if d == 2 else 2
    return k, m * n


def _icbrt_floor(n: int) -> int:
    """Floor of the integer cube root (n >= 0); exact for arbitrary size."""
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def fraction_cbrt(value: Fraction) -> Optional[Fraction]:
    """Exact rational cube root of value, or None if it is not a perfect cube."""
    num, den = value.numerator, value.denominator
    rn = _icbrt_floor(abs(num))
    rd = _icbrt_floor(den)
    if rn**3 != abs(num) or rd**3 != den:
        return None
    return Fraction(-rn if num < 0 else rn, rd)


@dataclass(frozen=True)
class ExactValue:
    """An exactly-known real root value: rational + surd_coef * sqrt(radicand)."""

    rational: Fraction
    surd_coef: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self):
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if self.radicand in (0, 1) or self.surd_coef == 0:
            # Fold degenerate surds into the rational part.
            extra = self.surd_coef if self.radicand == 1 else Fraction(0)
            object.__setattr__(self, "rational", self.rational + extra)
            object.__setattr__(self, "surd_coef", Fraction(0))
            object.__setattr__(self, "radicand", 1)

    @classmethod
    def sqrt_of(cls, value: Fraction) -> "ExactValue":
        """Exact sqrt of a nonnegative rational, as k*sqrt(m)."""
        if value < 0:
            raise ValueError("sqrt_of needs a nonnegative rational")
        if value == 0:
            return cls(Fraction(0))
        k, m = _square_free_split(value.numerator * value.denominator)
        return cls(Fraction(0), Fraction(k, value.denominator), m)

    @property
    def is_rational(self) -> bool:
        return self.surd_coef == 0

    def as_fraction(self) -> Optional[Fraction]:
        return self.rational if self.is_rational else None

    def shift(self, dr: Fraction) -> "ExactValue":
        return ExactValue(self.rational + dr, self.surd_coef, self.radicand)

    def __neg__(self) -> "ExactValue":
        return ExactValue(-self.rational, -self.surd_coef, self.radicand)

    def __float__(self) -> float:
        return float(self.rational) + float(self.surd_coef) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.rational)
        coef = self.surd_coef
        if abs(coef) == 1:
            surd = f"sqrt({self.radicand})"
        else:
            surd = f"{abs(coef)}*sqrt({self.radicand})"
        if self.rational == 0:
            return surd if coef > 0 else f"-{surd}"
        joiner = " + " if coef > 0 else " - "
        return f"{self.rational}{joiner}{surd}"


@dataclass(frozen=True)
class TrigForm:
    """Cosine form of the three-real-root case: root_k = amplitude * cos(offsets[k]).

    amplitude = -2*sqrt(rs) = -2|r| and theta = Arg(r); the offsets are
    theta/3 + 2k pi/3, reordered in step with the sorted roots.
    """

    amplitude: float
    theta: float
    offsets: tuple[float, float, float]


@dataclass(frozen=True)
class RootTriple:
    """Three roots in canonical order: reals first ascending, then the
    non-real pair by ascending imaginary part.

    multiplicity lists (index, count) for repeated roots only. exact holds
    per-root exactly-known values when the input arithmetic allowed it.
    """

    roots: tuple[complex, complex, complex]
    case: CaseTag
    multiplicity: tuple[tuple[int, int], ...] = ()
    exact: Optional[tuple[Optional[ExactValue], ...]] = None
    trig: Optional[TrigForm] = None


def _as_real(x) -> float:
    if isinstance(x, complex):
        return x.real
    return float(x)


def _with_negligible_p_zeroed(d: DepressedCubic) -> DepressedCubic:
    """Zero out p when its effect on the roots is below double resolution.

    The roots have magnitude ~|q|^(1/3), so p matters only through
    p*|q|^(1/3) against q; once |p|^3 < 1e-60 * q^2 (log-compared, and
    covariant under (p,q) -> (p l^2, q l^3)) the px term is invisible in
    doubles while the decomposition's r, s overflow/underflow. Solving
    x^3 + q instead is then exact to the last ulp.
    """
    p, q = float(d.p), float(d.q)
    if p == 0.0 or q == 0.0:
        return d
    if 3.0 * math.log(abs(p)) < 2.0 * math.log(abs(q)) - 138.2:
        return DepressedCubic(0.0, d.q)
    return d


def _multiplicity_of(values) -> tuple[tuple[int, int], ...]:
    """(index, count) entries for exactly-equal runs in a sorted list."""
    notes = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] == values[i]:
            j += 1
        if j > i:
            notes.append((i, j - i + 1))
        i = j + 1
    return tuple(notes)


def solve_equal(r) -> RootTriple:
    """Roots r, r, -2r of the repeated-pair case x^3 - 3r^2 x + 2r^3.

    Stated with r itself rather than sqrt(rs): for r < 0, sqrt(rs) = |r|
    would flip the sign, while (x-r)^2 (x+2r) pins the repeated root at r.
    Exact when r is rational.
    """
    if isinstance(r, complex):
        if r.imag != 0:
            raise InvalidCaseError("equal case needs a real r")
        r = r.real
    if is_exact(r):
        r = Fraction(r)
        values = sorted([r, r, -2 * r])
        roots = tuple(complex(float(v), 0.0) for v in values)
        exact = tuple(ExactValue(v) for v in values)
    else:
        r = float(r)
        values = sorted([r, r, -2.0 * r])
        roots = tuple(complex(v, 0.0) for v in values)
        exact = None
    return RootTriple(roots, CaseTag.EQUAL, multiplicity=_multiplicity_of(values), exact=exact)


def solve_real_distinct(r, s) -> RootTriple:
    """One real root and a conjugate pair, from real cube roots of r and s.

    With u = r^(1/3), v = s^(1/3) (real, sign-preserving) the roots are
    -uv(u+v) and -uv(omega^j u + omega^-j v); the twisted pair collapses to
    uv(u+v)/2 +- i sqrt(3) uv(u-v)/2.
    """
    r = _as_real(r)
    s = _as_real(s)
    u = real_cube_root(r)
    v = real_cube_root(s)
    m = u * v
    x0 = -m * (u + v)
    re = -x0 / 2.0
    im = abs(m * (u - v)) * _SQRT3 / 2.0
    roots = (complex(x0, 0.0), complex(re, -im), complex(re, im))
    return RootTriple(roots, CaseTag.REAL_DISTINCT)


def solve_conjugate(r: complex) -> RootTriple:
    """Three real roots -2|r| cos(theta/3 + 2k pi/3) for s = conj(r).

    The imaginary parts are identically zero by construction, so none of
    the casus-irreducibilis complex arithmetic leaks into the output.
    """
    r = complex(r)
    theta = principal_arg(r)
    amplitude = -2.0 * abs(r)
    offsets = (theta / 3.0, theta / 3.0 + _TWO_PI_3, theta / 3.0 + 2.0 * _TWO_PI_3)
    pairs = sorted((amplitude * math.cos(o), o) for o in offsets)
    roots = tuple(complex(v, 0.0) for v, _ in pairs)
    trig = TrigForm(amplitude=amplitude, theta=theta, offsets=tuple(o for _, o in pairs))
    return RootTriple(roots, CaseTag.CONJUGATE_PAIR, trig=trig)


def unified_roots(
    r: complex, s: complex, branch: CubeRootBranch = CubeRootBranch.REAL_PREFERRING
) -> tuple[complex, complex, complex]:
    """The raw product-form roots -r^(1/3) s^(1/3) (omega^j r^(1/3) + omega^-j s^(1/3)).

    Any cube-root branch yields the same root set: replacing u by omega^a u
    and v by omega^b v permutes the three j-values.
    """
    u = cube_root(complex(r), branch)
    v = cube_root(complex(s), branch)
    m = u * v
    return (
        -m * (u + v),
        -m * (OMEGA * u + OMEGA2 * v),
        -m * (OMEGA2 * u + OMEGA * v),
    )


def _finalize(raw, case: CaseTag, p: float, q: float) -> RootTriple:
    """Order raw roots canonically and restore the exact real/conjugate shape.

    Real coefficients force the roots to be all real or one real plus a
    conjugate pair; residual imaginary noise from complex cube roots is
    folded back into that structure.
    """
    three_real = (
        case in (CaseTag.EQUAL, CaseTag.CONJUGATE_PAIR)
        or (case is CaseTag.DEGENERATE_Q0 and p < 0)
        or (case is CaseTag.DEGENERATE_P0 and q == 0)
    )
    if three_real:
        values = sorted(x.real for x in raw)
        roots = tuple(complex(v, 0.0) for v in values)
        mult = ()
        if case in (CaseTag.EQUAL, CaseTag.DEGENERATE_P0):
            tol = _MULTIPLICITY_TOL * max(1.0, max(abs(v) for v in values))
            merged = list(values)
            for i in (1, 2):
                if abs(merged[i] - merged[i - 1]) <= tol:
                    merged[i] = merged[i - 1]
            mult = _multiplicity_of(merged)
        return RootTriple(roots, case, multiplicity=mult)
    k = min(range(3), key=lambda i: abs(raw[i].imag))
    z1, z2 = (raw[i] for i in range(3) if i != k)
    re = 0.5 * (z1.real + z2.real)
    im = 0.5 * (abs(z1.imag) + abs(z2.imag))
    roots = (complex(raw[k].real, 0.0), complex(re, -im), complex(re, im))
    return RootTriple(roots, case)


def solve_unified(
    d: DepressedCubic, branch: CubeRootBranch = CubeRootBranch.REAL_PREFERRING
) -> RootTriple:
    """Solve via the uniform product form (p, q != 0; degenerate inputs reroute)."""
    d = _with_negligible_p_zeroed(d)
    if d.p == 0 or d.q == 0:
        return solve_degenerate(d)
    pair = compute_rs(d)
    raw = unified_roots(pair.r, pair.s, branch)
    return _finalize(raw, pair.case, float(d.p), float(d.q))


def solve_moebius(r: complex, s: complex) -> RootTriple:
    """Roots x = (r - su)/(1 - u) over the three cube roots u of r/s.

    Needs s != 0 and r != s (u = 1 would make the map blow up, and it
    cannot occur otherwise).
    """
    r = complex(r)
    s = complex(s)
    if s == 0:
        raise InvalidCaseError("Moebius form needs s != 0")
    if r == s:
        raise InvalidCaseError("Moebius form degenerates when r = s")
    raw = tuple((r - s * u) / (1.0 - u) for u in cube_roots_all(r / s))
    rs = r * s
    p = (-3.0 * rs).real
    q = (rs * (r + s)).real
    case = classify(DepressedCubic(p, q))
    return _finalize(raw, case, p, q)


def solve_degenerate(d: DepressedCubic) -> RootTriple:
    """p = 0 or q = 0: solved directly, no decomposition involved.

    q = 0: x(x^2 + p) -> {0, +-sqrt(-p)};  p = 0: the cube roots of -q.
    """
    p, q = d.p, d.q
    if p == 0 and q == 0:
        zero = ExactValue(Fraction(0))
        return RootTriple(
            (0j, 0j, 0j), CaseTag.DEGENERATE_P0, multiplicity=((0, 3),), exact=(zero, zero, zero)
        )
    if q == 0:
        pf = float(p)
        if pf < 0:
            w = math.sqrt(-pf)
            roots = (complex(-w, 0.0), complex(0.0, 0.0), complex(w, 0.0))
            exact = None
            if is_exact(p):
                sv = ExactValue.sqrt_of(-Fraction(p))
                exact = (-sv, ExactValue(Fraction(0)), sv)
            return RootTriple(roots, CaseTag.DEGENERATE_Q0, exact=exact)
        w = math.sqrt(pf)
        roots = (complex(0.0, 0.0), complex(0.0, -w), complex(0.0, w))
        exact = (ExactValue(Fraction(0)), None, None) if is_exact(p) else None
        return RootTriple(roots, CaseTag.DEGENERATE_Q0, exact=exact)
    c = real_cube_root(-float(q))
    re, im = -c / 2.0, abs(c) * _SQRT3 / 2.0
    roots = (complex(c, 0.0), complex(re, -im), complex(re, im))
    exact = None
    if is_exact(q):
        cr = fraction_cbrt(-Fraction(q))
        if cr is not None:
            exact = (ExactValue(cr), None, None)
    return RootTriple(roots, CaseTag.DEGENERATE_P0, exact=exact)


def solve_depressed(
    d: DepressedCubic, branch: CubeRootBranch = CubeRootBranch.REAL_PREFERRING
) -> RootTriple:
    """Case-dispatched solve of x^3 + px + q.

    The default branch keeps every intermediate real where the case allows
    it (real cube roots for real r, s; the cosine form for a conjugate
    pair) and carries exact/trig annotations. Any other branch goes through
    the uniform product form, which returns the same root set without
    annotations.
    """
    if branch is not CubeRootBranch.REAL_PREFERRING:
        return solve_unified(d, branch)
    d = _with_negligible_p_zeroed(d)
    pair = compute_rs(d)
    if pair.case in (CaseTag.DEGENERATE_P0, CaseTag.DEGENERATE_Q0):
        return solve_degenerate(d)
    if pair.case is CaseTag.EQUAL:
        return solve_equal(pair.exact_r if pair.exact_r is not None else pair.r.real)
    if pair.case is CaseTag.REAL_DISTINCT:
        if pair.exact_r is not None:
            return solve_real_distinct(pair.exact_r, pair.exact_s)
        return solve_real_distinct(pair.r.real, pair.s.real)
    return solve_conjugate(pair.r)


def newton_polish(triple: RootTriple, cubic: GeneralCubic) -> RootTriple:
    """One Newton step per root against the original monic cubic."""
    a = complex(float(cubic.a))
    b = complex(float(cubic.b))
    c = complex(float(cubic.c))
    polished = []
    for x in triple.roots:
        fp = (3.0 * x + 2.0 * a) * x + b
        if abs(fp) > 1e-300:
            f = ((x + a) * x + b) * x + c
            x = x - f / fp
        polished.append(x)
    return replace(triple, roots=tuple(polished))


def solve(
    cubic: GeneralCubic,
    branch: CubeRootBranch = CubeRootBranch.REAL_PREFERRING,
    polish: bool = False,
) -> RootTriple:
    """Full pipeline: depress, decompose into (r, s), dispatch, lift back."""
    d, shift = depress(cubic)
    triple = lift_roots(solve_depressed(d, branch), shift)
    if polish:
        triple = newton_polish(triple, cubic)
    return triple
