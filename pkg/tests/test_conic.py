"""Tests for the exact four-point analysis: the hypersurface polynomial,
the conic reports, the six boundary labels, consistency with the growth
diagrams, and the flag example quartic."""

from fractions import Fraction

import pytest
import sympy

from growth.conic import (
    ConicReport, DegenerateReport, EmptyReport, Monomial, consistency_with_growth,
    delta, flag6_example, four_point_solve, six_point_cycle,
    wronski_polynomial,
)
from growth.partitions import Frame, complement, contains, is_domino, size
from test_partitions import all_partitions

F24 = Frame(2, 4)
F25 = Frame(2, 5)
F26 = Frame(2, 6)
BOX = (1,)


class TestWronski:
    def test_single_term_13(self):
        coeffs = wronski_polynomial({(1, 3): 1}, F24)
        assert coeffs == {1: -2}

    def test_single_term_12(self):
        coeffs = wronski_polynomial({(1, 2): 1}, F24)
        assert coeffs == {2: 1}

    def test_scaling(self):
        base = wronski_polynomial({(1, 3): 1, (2, 4): 2}, F24)
        scaled = wronski_polynomial({(1, 3): 3, (2, 4): 6}, F24)
        assert scaled == {k: 3 * v for k, v in base.items()}

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            wronski_polynomial({(1, 3): 0}, F24)

    def test_bad_subset_rejected(self):
        with pytest.raises(ValueError):
            wronski_polynomial({(1, 2, 3): 1}, F24)


class TestFourPointSolve:
    def test_two_boxes_two_by_two(self):
        report = four_point_solve(BOX, BOX, F24)
        assert isinstance(report, ConicReport)
        assert report.s == () and (report.i, report.j) == (1, 3)
        assert report.conic == (1, 2, 2, 3)
        values = {tuple(sorted(k)): m for k, m in report.pluecker}
        assert values[(1, 3)] == Monomial(Fraction(1, 2), 0, 0)
        assert values[(2, 3)] == Monomial(Fraction(1, 2), 0, 1)
        assert values[(1, 4)] == Monomial(Fraction(1, 2), 1, -1)
        assert values[(2, 4)] == Monomial(Fraction(1, 2), 1, 0)

    def test_u_discriminant(self):
        # a u^2 - (b + c tau) u + d' tau has discriminant 4(tau^2 - tau + 1)
        a, b, c, d = four_point_solve(BOX, BOX, F24).conic
        tau = sympy.symbols("tau")
        disc = sympy.expand((b + c * tau) ** 2 - 4 * a * d * tau)
        assert disc == sympy.expand(4 * (tau ** 2 - tau + 1))

    def test_wider_frame(self):
        report = four_point_solve((3, 1), complement((4, 2), F26), F26)
        assert (report.i, report.j) == (2, 5)
        assert report.conic == (2, 3, 3, 4)
        subsets = {tuple(sorted(k)) for k, _ in report.pluecker}
        assert (2, 5) in subsets and (3, 6) in subsets

    def test_empty(self):
        report = four_point_solve((4,), (1, 1), F26)
        assert isinstance(report, EmptyReport)

    def test_degenerate_domino(self):
        report = four_point_solve((2,), (), F24)
        assert isinstance(report, DegenerateReport)
        assert report.degree == 1

    def test_codimension_mismatch(self):
        with pytest.raises(ValueError):
            four_point_solve((2,), (2,), F24)

    def test_json(self):
        data = four_point_solve(BOX, BOX, F24).to_json()
        assert data["conic"] == [1, 2, 2, 3]
        assert len(data["labels"]) == 6


class TestSixPointCycle:
    def test_two_by_two(self):
        assert six_point_cycle(BOX, BOX, F24) == \
            ((1, 1), (2,), (1, 1), (2,), (1, 1), (2,))

    def test_paper_frame_26(self):
        cycle = six_point_cycle((3, 1), complement((4, 2), F26), F26)
        assert cycle == ((3, 2), (4, 1), (1, 1), (4, 1), (3, 2), (2,))

    def test_symmetric_positions(self):
        for frame in (F24, F25, F26):
            for lam, mu in _conic_pairs(frame):
                cycle = six_point_cycle(lam, mu, frame)
                assert cycle[0] == cycle[4] and cycle[1] == cycle[3]
                assert cycle[2] == (1, 1) and cycle[5] == (2,)

    def test_wrong_skew_rejected(self):
        with pytest.raises(ValueError):
            six_point_cycle((2,), (), F24)  # domino skew
        with pytest.raises(ValueError):
            six_point_cycle((2,), (1, 1), F24)  # empty problem


def _conic_pairs(frame):
    """All (lam, mu) with two nonadjacent boxes between lam and the
    complement of mu."""
    out = []
    for lam in all_partitions(frame):
        for mu in all_partitions(frame):
            if size(lam) + size(mu) != frame.size - 2:
                continue
            muc = complement(mu, frame)
            if contains(muc, lam) and not is_domino(lam, muc):
                out.append((lam, mu))
    return out


class TestInvariants:
    def test_unbranched_certificate(self):
        for frame in (F24, F25, F26):
            for lam, mu in _conic_pairs(frame):
                a, b, c, d = four_point_solve(lam, mu, frame).conic
                assert b * c > a * d

    def test_pluecker_product_identity(self):
        for frame in (F24, F25, F26):
            for lam, mu in _conic_pairs(frame):
                report = four_point_solve(lam, mu, frame)
                values = {tuple(sorted(k)): m for k, m in report.pluecker}
                s, i, j = set(report.s), report.i, report.j
                p_l = values[tuple(sorted(s | {i, j}))]
                p_k1 = values[tuple(sorted(s | {i + 1, j}))]
                p_k2 = values[tuple(sorted(s | {i, j + 1}))]
                p_m = values[tuple(sorted(s | {i + 1, j + 1}))]
                assert p_l * p_m == p_k1 * p_k2

    def test_wronski_roots_one_and_tau(self):
        tau, u, z = sympy.symbols("tau u z")
        for frame, lam, mu in [(F24, BOX, BOX),
                               (F26, (3, 1), complement((4, 2), F26))]:
            report = four_point_solve(lam, mu, frame)
            a, b, c, d = report.conic
            pluecker = {tuple(sorted(k)):
                        m.coeff * tau ** m.tau_pow * u ** m.u_pow
                        for k, m in report.pluecker}
            coeffs = wronski_polynomial(pluecker, frame)
            low = min(coeffs)
            assert sorted(coeffs) == [low, low + 1, low + 2]
            # on the conic, tau = u (b - a u) / (d - c u)
            on_conic = {tau: u * (b - a * u) / (d - c * u)}
            quad = sum(coeffs[low + k] * z ** k for k in range(3))
            want = coeffs[low + 2] * (z - 1) * (z - tau)
            diff = sympy.simplify((quad - want).subs(on_conic))
            assert diff == 0

    def test_boundary_specialization(self):
        for lam, mu in _conic_pairs(F26):
            a, b, c, d = four_point_solve(lam, mu, F26).conic
            q = b

            def conic(tau, u):
                return a * u * u - b * u - c * tau * u + d * tau

            assert conic(0, 0) == 0
            assert conic(0, Fraction(q, q - 1)) == 0
            assert conic(1, 1) == 0
            assert conic(1, Fraction(q + 1, q - 1)) == 0


class TestGrowthConsistency:
    @pytest.mark.parametrize("frame", [F24, F25])
    def test_frames(self, frame):
        assert consistency_with_growth(frame)


class TestFlag6:
    def test_quartic(self):
        result = flag6_example()
        assert result["quartic"] == (256, -960, 1281, -720, 144)

    def test_eliminant(self):
        c0, c1, c2 = flag6_example()["eliminant"]
        assert c1 == (16, 15, -12)
        assert c0 == (-12, 6) and c2 == (0, -30, 15)

    def test_roots(self):
        roots = flag6_example()["roots"]
        expected = [0.678121, 0.945553, 1.41011, 1.96622]
        assert len(roots) == 4
        for got, want in zip(roots, expected):
            assert abs(got - want) < 1e-4


def test_delta_oracle():
    assert delta({1, 3}) == 2
    assert delta({2, 4, 5}) == 2 * 3 * 1
