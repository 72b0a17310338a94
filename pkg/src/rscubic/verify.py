"""Independent checks: residuals, Vieta sums, algebraic identities, and a
bisection/deflation root finder that shares no code path with the closed-form
solvers.

The trig identities checked here are the ones the three-real-root cosine
form forces through Vieta's relations, with c_k = cos(theta/3 + 2k pi/3):

    sum c_k = 0
    sum_{j<k} c_j c_k = -3/4
    prod c_k = +cos(theta)/4
    sum c_k^3 = +(3/4) cos(theta)

The signs on the last two follow from prod(-2|r| c_k) = -q = -2|r|^3 cos
theta and from A^3+B^3+C^3 = 3ABC when A+B+C = 0; theta = 0 (c = 1, -1/2,
-1/2, product 1/4) pins them numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .chen import RootTriple
from .decompose import classify
from .reduction import DepressedCubic


@dataclass(frozen=True)
class VerificationReport:
    residuals: tuple[float, float, float]
    vieta_errors: tuple[float, float, float]
    identity_errors: Optional[tuple[float, ...]]
    passed: bool
    tol: float
    scale: float


def verify_roots(d: DepressedCubic, triple: RootTriple, tol: float = 1e-10) -> VerificationReport:
    """Residuals |x^3+px+q| and Vieta errors |sum x|, |sum x_i x_j - p|, |prod x + q|.

    passed requires every error <= tol * max(1,|p|,|q|)^(3/2); the 3/2 power
    keeps the bound covariant under the scaling (p,q) -> (p l^2, q l^3).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p, q = float(d.p), float(d.q)
    x0, x1, x2 = triple.roots
    residuals = tuple(abs(d(x)) for x in triple.roots)
    vieta = (
        abs(x0 + x1 + x2),
        abs(x0 * x1 + x0 * x2 + x1 * x2 - p),
        abs(x0 * x1 * x2 + q),
    )
    scale = max(1.0, abs(p), abs(q)) ** 1.5
    passed = all(e <= tol * scale for e in residuals + vieta)
    return VerificationReport(residuals, vieta, None, passed, tol, scale)


def decomposition_identity_residual(r: complex, s: complex, x: complex) -> float:
    """|x^3 - 3rsx + rs(r+s)  -  [s/(s-r) (x-r)^3 + r/(r-s) (x-s)^3]| for r != s."""
    r, s, x = complex(r), complex(s), complex(x)
    lhs = x**3 - 3 * r * s * x + r * s * (r + s)
    rhs = s / (s - r) * (x - r) ** 3 + r / (r - s) * (x - s) ** 3
    return abs(lhs - rhs)


def ratio_cube_residual(r: complex, s: complex, x: complex) -> float:
    """|((x-r)/(x-s))^3 - r/s|: every root turns the split form into this ratio condition."""
    r, s, x = complex(r), complex(s), complex(x)
    return abs(((x - r) / (x - s)) ** 3 - r / s)


def trig_identity_residuals(theta: float) -> tuple[float, float, float, float]:
    """Absolute deviations of the four cosine identities above at this theta."""
    c0, c1, c2 = (math.cos(theta / 3.0 + k * 2.0 * math.pi / 3.0) for k in range(3))
    return (
        abs(c0 + c1 + c2),
        abs(c0 * c1 + c0 * c2 + c1 * c2 + 0.75),
        abs(c0 * c1 * c2 - math.cos(theta) / 4.0),
        abs(c0**3 + c1**3 + c2**3 - 0.75 * math.cos(theta)),
    )


def brute_force_roots(d: DepressedCubic) -> RootTriple:
    """Bisection + Newton for one real root, then quadratic deflation.

    A monic cubic always changes sign over [-R, R] with R = 1 + max(|p|,|q|)
    (Cauchy bound), and bisection can only converge to a sign-changing
    (odd-multiplicity) root, so deflation never divides out the wrong
    factor at a double root. Pure oracle: no cube roots, no (r, s).
    """
    p, q = float(d.p), float(d.q)

    def f(x: float) -> float:
        return (x * x + p) * x + q

    radius = 1.0 + max(abs(p), abs(q))
    lo, hi = -radius, radius
    flo = f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = f(mid)
        if fm == 0.0:
            lo = hi = mid
            break
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    x0 = 0.5 * (lo + hi)
    for _ in range(60):
        dfx = 3.0 * x0 * x0 + p
        if dfx == 0.0:
            break
        x1 = x0 - f(x0) / dfx
        if x1 == x0:
            break
        if abs(f(x1)) > abs(f(x0)):
            break
        x0 = x1

    # x^3 + px + q = (x - x0)(x^2 + x0 x + (x0^2 + p)) up to the residual.
    b2, c2 = x0, x0 * x0 + p
    disc = b2 * b2 - 4.0 * c2
    if disc >= 0.0:
        w = math.sqrt(disc)
        t1 = -(b2 + math.copysign(w, b2)) / 2.0 if b2 != 0.0 else w / 2.0
        t2 = c2 / t1 if t1 != 0.0 else 0.0
        values = sorted([x0, t1, t2])
        roots = tuple(complex(v, 0.0) for v in values)
    else:
        re, im = -b2 / 2.0, math.sqrt(-disc) / 2.0
        roots = (complex(x0, 0.0), complex(re, -im), complex(re, im))
    return RootTriple(roots, classify(d))
