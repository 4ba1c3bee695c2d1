"""Kernel point counts: three routes must agree, and tie to moment 4."""

import math

import pytest

from triweil.ff import build_field
from triweil.kernel_curve import (
    fourth_moment_via_kernel,
    kernel_count_charsum,
    kernel_count_direct,
    kernel_count_naive,
    kernel_report,
)
from triweil.weil import power_moment, spectrum


def test_axes_always_on_curve():
    ctx = build_field(3, 3)
    # x = 0 or y = 0 alone contributes 2q - 1 points for any r
    from triweil.kernel_curve import _on_curve

    for r in (1, 2):
        axes = sum(
            1
            for x in ctx.elements()
            for y in ctx.elements()
            if (x == 0 or y == 0) and _on_curve(ctx, r, x, y)
        )
        assert axes == 2 * ctx.q - 1


@pytest.mark.parametrize("n,r", [(3, 1), (5, 1), (5, 4)])
def test_three_routes_agree_small(n, r):
    ctx = build_field(3, n)
    naive = kernel_count_naive(ctx, r)
    assert naive == kernel_count_direct(ctx, r)
    assert naive == kernel_count_charsum(ctx, r).count
    assert naive == 3 * ctx.q


@pytest.mark.parametrize("n,r", [(7, 2), (7, 1), (9, 7)])
def test_direct_equals_charsum_larger(n, r):
    ctx = build_field(3, n)
    assert kernel_count_direct(ctx, r) == kernel_count_charsum(ctx, r).count == 3 * ctx.q


def test_eta_shift_sum_is_minus_one():
    for n in (3, 5, 7):
        ctx = build_field(3, n)
        assert kernel_count_charsum(ctx, 1).eta_sum == -1


def test_fourth_moment_matches_spectrum():
    for n, r in [(3, 1), (5, 1), (5, 4)]:
        ctx = build_field(3, n)
        d = 3**r + 2
        assert fourth_moment_via_kernel(ctx, r) == power_moment(spectrum(ctx, d), 4)
    assert fourth_moment_via_kernel(build_field(3, 3), 1) == 27**2 * 3 * 27
    assert 3 * 27**3 == 59049


def test_gcd_reductions_used_in_proof():
    for n, r in [(5, 1), (5, 4), (7, 2), (9, 7)]:
        q1 = 3**n - 1
        assert math.gcd(2 - 3**r - 3 ** (2 * r), q1) == 2
        assert math.gcd(3 ** (2 * r) - 3**r, q1) == 2


def test_hypothesis_flag_reported_not_raised():
    ctx = build_field(3, 9)
    out = kernel_count_charsum(ctx, 3)  # gcd(3, 9) != 1: outside the lemma
    assert out.hypotheses_ok is False


def test_report_passes():
    rep = kernel_report(build_field(3, 5), 4)
    assert rep.passed
    assert rep.axes_count == 2 * 243 - 1
