import cmath
import math
import random
from fractions import Fraction

import pytest

from rscubic import (
    CaseTag,
    CubeRootBranch,
    DepressedCubic,
    ExactValue,
    GeneralCubic,
    InvalidCaseError,
    compute_rs,
    match_root_sets,
    newton_polish,
    solve,
    solve_conjugate,
    solve_degenerate,
    solve_depressed,
    solve_equal,
    solve_moebius,
    solve_real_distinct,
    solve_unified,
    unified_roots,
)
from rscubic.chen import fraction_cbrt

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)


def log_uniform_pq(rng):
    p = (-1) ** rng.randrange(2) * 10 ** rng.uniform(-3, 3)
    q = (-1) ** rng.randrange(2) * 10 ** rng.uniform(-3, 3)
    return p, q


def assert_root_sets_close(a, b, tol):
    assert match_root_sets(a, b) <= tol


class TestSolveEqual:
    def test_rational_example(self):
        triple = solve_equal(Fraction(2))
        assert triple.roots == (complex(-4), complex(2), complex(2))
        assert triple.multiplicity == ((1, 2),)
        assert [e.as_fraction() for e in triple.exact] == [-4, 2, 2]

    def test_negative_r(self):
        # x^3 - 3x - 2 = (x+1)^2 (x-2): the repeated root must be -1, not +1
        triple = solve_equal(Fraction(-1))
        assert triple.roots == (complex(-1), complex(-1), complex(2))
        assert triple.multiplicity == ((0, 2),)

    def test_positive_one(self):
        # x^3 - 3x + 2 = (x-1)^2 (x+2)
        triple = solve_equal(Fraction(1))
        assert triple.roots == (complex(-2), complex(1), complex(1))

    def test_float_input_no_exact(self):
        triple = solve_equal(1.5)
        assert triple.exact is None
        assert triple.roots == (complex(-3.0), complex(1.5), complex(1.5))

    def test_complex_with_imag_rejected(self):
        with pytest.raises(InvalidCaseError):
            solve_equal(complex(1, 1))


class TestSolveRealDistinct:
    def test_worked_example(self):
        triple = solve_real_distinct(-0.5, -4.0)
        assert triple.roots[0].real == pytest.approx(3.0, abs=1e-12)
        assert triple.roots[1] == pytest.approx(complex(-1.5, -SQRT3 / 2), abs=1e-12)
        assert triple.roots[2] == pytest.approx(complex(-1.5, SQRT3 / 2), abs=1e-12)

    def test_one_eight(self):
        # r=1, s=8 gives p=-24, q=72; the real root is -(1*2)(1+2) = -6
        triple = solve_real_distinct(1.0, 8.0)
        assert triple.roots[0].real == pytest.approx(-6.0, abs=1e-12)
        d = DepressedCubic(-24, 72)
        for x in triple.roots:
            assert abs(d(x)) <= 1e-10

    def test_exactly_one_real_root(self):
        triple = solve_real_distinct(0.25, 7.5)
        assert triple.roots[0].imag == 0
        assert triple.roots[1].imag != 0
        assert triple.roots[1] == triple.roots[2].conjugate()

    def test_boundary_pair_routes_to_degenerate(self):
        # r=1, s=-1 means q=0: never reaches this op via dispatch
        pair = compute_rs(DepressedCubic(3, 0))
        assert pair.case is CaseTag.DEGENERATE_Q0


class TestSolveConjugate:
    def test_surd_example(self):
        r = cmath.rect(4.0, 3 * math.pi / 4)
        triple = solve_conjugate(r)
        expected = sorted([-4 * SQRT2, 2 * SQRT2 + 2 * SQRT6, 2 * SQRT2 - 2 * SQRT6])
        for root, want in zip(triple.roots, expected):
            assert root.real == pytest.approx(want, abs=1e-12)
            assert root.imag == 0.0

    def test_cosine_example(self):
        triple = solve_conjugate(cmath.rect(0.5, math.pi / 3))
        expected = sorted(math.cos(k * math.pi / 9) for k in (8, 2, 4))
        for root, want in zip(triple.roots, expected):
            assert root.real == pytest.approx(want, abs=1e-12)

    def test_sine_example(self):
        triple = solve_conjugate(cmath.rect(0.5, math.pi / 6))
        expected = sorted(math.sin(k * math.pi / 9) for k in (14, 2, 8))
        for root, want in zip(triple.roots, expected):
            assert root.real == pytest.approx(want, abs=1e-12)

    def test_trig_annotation_reproduces_roots(self):
        r = cmath.rect(4.0, 3 * math.pi / 4)
        triple = solve_conjugate(r)
        trig = triple.trig
        assert trig.amplitude == pytest.approx(-8.0)
        assert trig.theta == pytest.approx(3 * math.pi / 4)
        for root, offset in zip(triple.roots, trig.offsets):
            assert trig.amplitude * math.cos(offset) == pytest.approx(root.real, abs=1e-12)


class TestSolveUnified:
    def test_principal_branch_real_distinct(self):
        triple = solve_unified(DepressedCubic(-6, -9), CubeRootBranch.PRINCIPAL)
        expected = (complex(3), complex(-1.5, -SQRT3 / 2), complex(-1.5, SQRT3 / 2))
        assert_root_sets_close(triple.roots, expected, 1e-10)

    def test_matches_equal_case(self):
        triple = solve_unified(DepressedCubic(-12, 16))
        assert_root_sets_close(triple.roots, (complex(-4), complex(2), complex(2)), 1e-10)

    def test_matches_conjugate_case(self):
        triple = solve_unified(DepressedCubic(-0.75, 0.125))
        expected = tuple(complex(math.cos(k * math.pi / 9)) for k in (8, 2, 4))
        assert_root_sets_close(triple.roots, expected, 1e-12)

    def test_degenerate_reroutes(self):
        triple = solve_unified(DepressedCubic(0, -8))
        assert_root_sets_close(
            triple.roots, (complex(2), 2 * complex(-0.5, SQRT3 / 2), 2 * complex(-0.5, -SQRT3 / 2)), 1e-12
        )

    def test_set_matches_case_solver_for_every_branch(self):
        rng = random.Random(29)
        for _ in range(300):
            p, q = log_uniform_pq(rng)
            d = DepressedCubic(p, q)
            reference = solve_depressed(d)
            for branch in CubeRootBranch:
                triple = solve_unified(d, branch)
                scale = max(1.0, max(abs(x) for x in reference.roots))
                assert match_root_sets(triple.roots, reference.roots) <= 1e-10 * scale


class TestSolveMoebius:
    def test_real_distinct_example(self):
        # u = 1/2 gives x = (-1/2 + 4*(1/2)) / (1 - 1/2) = 3
        triple = solve_moebius(complex(-0.5), complex(-4))
        assert any(abs(x - 3) <= 1e-12 for x in triple.roots)

    def test_one_eight(self):
        triple = solve_moebius(complex(1), complex(8))
        assert any(abs(x - (-6)) <= 1e-12 for x in triple.roots)

    def test_conjugate_matches_trig_solver(self):
        r = cmath.rect(4.0, 3 * math.pi / 4)
        triple = solve_moebius(r, r.conjugate())
        reference = solve_conjugate(r)
        assert_root_sets_close(triple.roots, reference.roots, 1e-9)

    def test_equal_pair_rejected(self):
        with pytest.raises(InvalidCaseError):
            solve_moebius(complex(2), complex(2))

    def test_zero_s_rejected(self):
        with pytest.raises(InvalidCaseError):
            solve_moebius(complex(1), complex(0))


class TestSolveDegenerate:
    def test_q_zero_negative_p(self):
        triple = solve_degenerate(DepressedCubic(-1, 0))
        assert triple.roots == (complex(-1), complex(0), complex(1))
        assert [e.as_fraction() for e in triple.exact] == [-1, 0, 1]

    def test_q_zero_positive_p(self):
        triple = solve_degenerate(DepressedCubic(3, 0))
        assert triple.roots[0] == 0
        assert triple.roots[1] == pytest.approx(complex(0, -SQRT3), abs=1e-15)
        assert triple.roots[2] == pytest.approx(complex(0, SQRT3), abs=1e-15)

    def test_q_zero_surd_annotation(self):
        triple = solve_degenerate(DepressedCubic(Fraction(-8), 0))
        assert str(triple.exact[2]) == "2*sqrt(2)"
        assert float(triple.exact[2]) == pytest.approx(math.sqrt(8))

    def test_p_zero(self):
        triple = solve_degenerate(DepressedCubic(0, -8))
        assert triple.roots[0] == complex(2)
        assert triple.exact[0].as_fraction() == 2
        assert triple.roots[1] == pytest.approx(complex(-1, -SQRT3), abs=1e-14)
        assert triple.roots[2] == pytest.approx(complex(-1, SQRT3), abs=1e-14)

    def test_origin(self):
        triple = solve_degenerate(DepressedCubic(0, 0))
        assert triple.roots == (0j, 0j, 0j)
        assert triple.multiplicity == ((0, 3),)


class TestSolvePipeline:
    def test_equal_case_stays_exact(self):
        triple = solve(GeneralCubic(0, -12, 16))
        assert triple.roots == (complex(-4), complex(2), complex(2))
        assert [e.as_fraction() for e in triple.exact] == [-4, 2, 2]

    def test_factored_cubic(self):
        triple = solve(GeneralCubic(-6, 11, -6))
        assert [x.real for x in triple.roots] == pytest.approx([1, 2, 3], abs=1e-12)
        assert [e.as_fraction() for e in triple.exact] == [1, 2, 3]

    def test_real_distinct_example(self):
        triple = solve(GeneralCubic(0, -6, -9))
        assert triple.roots[0].real == pytest.approx(3, abs=1e-12)

    def test_exact_surd_survives_shift(self):
        # (x+1)((x+1)^2 - 2) = x^3 + 3x^2 + x - 1: roots -1, -1 +- sqrt(2)
        triple = solve(GeneralCubic(3, 1, -1))
        assert triple.case is CaseTag.DEGENERATE_Q0
        assert [str(e) for e in triple.exact] == ["-1 - sqrt(2)", "-1", "-1 + sqrt(2)"]
        assert triple.roots[0].real == pytest.approx(-1 - SQRT2, abs=1e-14)
        assert triple.roots[2].real == pytest.approx(-1 + SQRT2, abs=1e-14)

    def test_ordering_convention(self):
        rng = random.Random(31)
        for _ in range(500):
            p, q = log_uniform_pq(rng)
            triple = solve_depressed(DepressedCubic(p, q))
            reals = [x for x in triple.roots if x.imag == 0]
            others = [x for x in triple.roots if x.imag != 0]
            assert triple.roots == tuple(
                sorted(reals, key=lambda z: z.real) + sorted(others, key=lambda z: z.imag)
            )
            if others:
                assert others[0] == others[1].conjugate()

    def test_polish_flag(self):
        cubic = GeneralCubic(0, -6, -9)
        raw = solve(cubic)
        polished = solve(cubic, polish=True)
        assert max(abs(cubic(x)) for x in polished.roots) <= max(abs(cubic(x)) for x in raw.roots) + 1e-15

    def test_polish_keeps_triple_shape(self):
        cubic = GeneralCubic(0, -12, 16)
        polished = newton_polish(solve(cubic), cubic)
        assert polished.case is CaseTag.EQUAL
        assert polished.multiplicity == ((1, 2),)


class TestProperties:
    def test_residual_and_vieta(self):
        rng = random.Random(37)
        for _ in range(2000):
            p, q = log_uniform_pq(rng)
            d = DepressedCubic(p, q)
            triple = solve_depressed(d)
            scale = max(1.0, abs(p), abs(q)) ** 1.5
            x0, x1, x2 = triple.roots
            for x in triple.roots:
                assert abs(d(x)) <= 1e-10 * scale
            assert abs(x0 + x1 + x2) <= 1e-10 * scale
            assert abs(x0 * x1 + x0 * x2 + x1 * x2 - p) <= 1e-10 * scale
            assert abs(x0 * x1 * x2 + q) <= 1e-10 * scale

    def test_conjugate_pairing_of_nonreal_roots(self):
        rng = random.Random(41)
        for _ in range(1000):
            p, q = log_uniform_pq(rng)
            triple = solve_depressed(DepressedCubic(p, q))
            nonreal = [x for x in triple.roots if x.imag != 0]
            assert len(nonreal) in (0, 2)
            if nonreal:
                assert nonreal[0] == nonreal[1].conjugate()

    def test_ratio_cube_property(self):
        # ((x - r)/(x - s))^3 == r/s at every computed root; tolerance is
        # relative to the ratio once it exceeds 1 (eps*|r/s| is the floor
        # for merely computing the right-hand side).
        rng = random.Random(43)
        for _ in range(500):
            p, q = log_uniform_pq(rng)
            pair = compute_rs(DepressedCubic(p, q))
            if pair.case is CaseTag.EQUAL:
                continue
            triple = solve_depressed(DepressedCubic(p, q))
            ratio = pair.r / pair.s
            for x in triple.roots:
                lhs = ((x - pair.r) / (x - pair.s)) ** 3
                assert abs(lhs - ratio) <= 1e-9 * max(1.0, abs(ratio))

    def test_swap_invariance(self):
        rng = random.Random(47)
        for _ in range(300):
            p, q = log_uniform_pq(rng)
            pair = compute_rs(DepressedCubic(p, q))
            if pair.case in (CaseTag.DEGENERATE_P0, CaseTag.DEGENERATE_Q0):
                continue
            a = unified_roots(pair.r, pair.s)
            b = unified_roots(pair.s, pair.r)
            scale = max(1.0, max(abs(x) for x in a))
            assert match_root_sets(a, b) <= 1e-10 * scale
            if pair.case is not CaseTag.EQUAL:
                ma = solve_moebius(pair.r, pair.s)
                mb = solve_moebius(pair.s, pair.r)
                assert match_root_sets(ma.roots, mb.roots) <= 1e-10 * scale

    def test_scaling_covariance(self):
        rng = random.Random(53)
        for _ in range(300):
            p, q = log_uniform_pq(rng)
            lam = 10 ** rng.uniform(-2, 2)
            base = solve_depressed(DepressedCubic(p, q))
            scaled = solve_depressed(DepressedCubic(p * lam**2, q * lam**3))
            expected = tuple(lam * x for x in base.roots)
            scale = max(1.0, max(abs(x) for x in expected))
            assert match_root_sets(scaled.roots, expected) <= 1e-10 * scale

    def test_case_structure_agreement(self):
        rng = random.Random(59)
        for _ in range(2000):
            p, q = log_uniform_pq(rng)
            d = DepressedCubic(p, q)
            triple = solve_depressed(d)
            delta = 4 * p**3 + 27 * q**2
            n_real = sum(1 for x in triple.roots if x.imag == 0)
            if triple.case is CaseTag.REAL_DISTINCT:
                assert delta > 0 and n_real == 1
            elif triple.case is CaseTag.CONJUGATE_PAIR:
                assert delta < 0 and n_real == 3


class TestExactValue:
    def test_rational_str(self):
        assert str(ExactValue(Fraction(9, 2))) == "9/2"
        assert str(ExactValue(Fraction(-4))) == "-4"

    def test_surd_str(self):
        assert str(ExactValue(Fraction(0), Fraction(1), 2)) == "sqrt(2)"
        assert str(ExactValue(Fraction(0), Fraction(-3, 2), 5)) == "-3/2*sqrt(5)"
        assert str(ExactValue(Fraction(1), Fraction(-1), 2)) == "1 - sqrt(2)"

    def test_sqrt_of_extracts_square_part(self):
        v = ExactValue.sqrt_of(Fraction(8))
        assert (v.rational, v.surd_coef, v.radicand) == (0, 2, 2)
        assert ExactValue.sqrt_of(Fraction(49, 4)).as_fraction() == Fraction(7, 2)
        v = ExactValue.sqrt_of(Fraction(8, 9))
        assert float(v) == pytest.approx(math.sqrt(8 / 9))

    def test_shift_and_negate(self):
        v = ExactValue.sqrt_of(Fraction(2)).shift(Fraction(-1))
        assert str(v) == "-1 + sqrt(2)"
        assert str(-v) == "1 - sqrt(2)"
        assert float(v) == pytest.approx(SQRT2 - 1)

    def test_normalization_folds_unit_radicand(self):
        v = ExactValue(Fraction(1), Fraction(3), 1)
        assert v.as_fraction() == 4


class TestFractionCbrt:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (Fraction(8), Fraction(2)),
            (Fraction(-27, 64), Fraction(-3, 4)),
            (Fraction(0), Fraction(0)),
            (Fraction(10**33), Fraction(10**11)),
        ],
    )
    def test_perfect_cubes(self, value, expected):
        assert fraction_cbrt(value) == expected

    @pytest.mark.parametrize("value", [Fraction(2), Fraction(9), Fraction(8, 3)])
    def test_non_cubes(self, value):
        assert fraction_cbrt(value) is None
