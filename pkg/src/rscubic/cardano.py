"""Cardano baseline: x = cbrt(A) + cbrt(B) and its omega-twisted companions.

A = -q/2 + sqrt((q/2)^2 + (p/3)^3), B the conjugate choice. The one sharp
edge is branch pairing: cbrt(A) and cbrt(B) must be chosen so that their
product is -p/3, otherwise cbrt(A) + cbrt(B) silently stops being a root
once the discriminant goes negative. We therefore take one cube root and
derive the other as (-p/3) / cbrt(A).

Kept independent of the r,s path so the two can cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .chen import RootTriple, _finalize, solve_depressed
from .decompose import CaseTag, classify
from .numerics import OMEGA, OMEGA2, principal_cube_root, real_cube_root
from .reduction import DepressedCubic


@dataclass(frozen=True)
class CardanoIntermediates:
    """The raw quantities a by-hand application would write down.

    disc = (q/2)^2 + (p/3)^3; sqrt_disc is its principal square root
    (+i sqrt|disc| when negative). All four of A, B, cbrt_a, cbrt_b stay
    exactly real (zero imaginary part) whenever disc >= 0.
    """

    A: complex
    B: complex
    disc: float
    sqrt_disc: complex
    cbrt_a: complex
    cbrt_b: complex


@dataclass(frozen=True)
class ComparisonReport:
    """Agreement report between the r,s solver and the Cardano baseline."""

    case: CaseTag
    rs_roots: tuple[complex, complex, complex]
    cardano_roots: tuple[complex, complex, complex]
    max_matched_distance: float
    rs_residuals: tuple[float, float, float]
    cardano_residuals: tuple[float, float, float]


def cardano_solve(d: DepressedCubic) -> tuple[RootTriple, CardanoIntermediates]:
    """Solve x^3 + px + q by Cardano's formula (all p, q accepted)."""
    p = float(d.p)
    q = float(d.q)
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc >= 0:
        w = math.sqrt(disc)
        # Compute whichever of A, B adds like signs (no cancellation) and
        # derive the other from the exact product A*B = -(p/3)^3.
        if q <= 0:
            a_val = -q / 2.0 + w
            b_val = -((p / 3.0) ** 3) / a_val if a_val != 0.0 else -q / 2.0 - w
        else:
            b_val = -q / 2.0 - w
            a_val = -((p / 3.0) ** 3) / b_val if b_val != 0.0 else -q / 2.0 + w
        ca = real_cube_root(a_val)
        cb = (-p / 3.0) / ca if ca != 0.0 else real_cube_root(b_val)
        A, B = complex(a_val, 0.0), complex(b_val, 0.0)
        sqrt_disc = complex(w, 0.0)
        cbrt_a, cbrt_b = complex(ca, 0.0), complex(cb, 0.0)
    else:
        sqrt_disc = complex(0.0, math.sqrt(-disc))
        A = -q / 2.0 + sqrt_disc
        B = -q / 2.0 - sqrt_disc
        cbrt_a = principal_cube_root(A)
        cbrt_b = (-p / 3.0) / cbrt_a if cbrt_a != 0 else principal_cube_root(B)
    raw = (
        cbrt_a + cbrt_b,
        OMEGA * cbrt_a + OMEGA2 * cbrt_b,
        OMEGA2 * cbrt_a + OMEGA * cbrt_b,
    )
    case = classify(d)
    triple = _finalize(raw, case, p, q)
    return triple, CardanoIntermediates(A, B, disc, sqrt_disc, cbrt_a, cbrt_b)


def match_root_sets(a, b) -> float:
    """Minimum over pairings of the maximum pairwise distance between two root triples."""
    return min(max(abs(x - y) for x, y in zip(a, perm)) for perm in permutations(b))


def compare_methods(d: DepressedCubic) -> ComparisonReport:
    """Run both solvers on the same depressed cubic and score the agreement."""
    rs_triple = solve_depressed(d)
    cardano_triple, _ = cardano_solve(d)
    dist = match_root_sets(rs_triple.roots, cardano_triple.roots)
    return ComparisonReport(
        case=rs_triple.case,
        rs_roots=rs_triple.roots,
        cardano_roots=cardano_triple.roots,
        max_matched_distance=dist,
        rs_residuals=tuple(abs(d(x)) for x in rs_triple.roots),
        cardano_residuals=tuple(abs(d(x)) for x in cardano_triple.roots),
    )
