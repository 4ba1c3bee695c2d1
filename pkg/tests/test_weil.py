"""Character sums, spectra and moments, with a fully independent
mini-field oracle for the smallest interesting field."""

import math

import pytest

from triweil.ff import build_field
from triweil.weil import (
    SpectrumError,
    check_family,
    is_degenerate,
    power_moment,
    spectrum,
    validate_exponent,
    weil_sum,
)


# ---------------------------------------------------------------------------
# Oracle: GF(27) rebuilt from scratch with coefficient arithmetic only.


def oracle_spectrum_q27(d):
    p, n = 3, 3
    mod = build_field(3, 3).modulus  # the polynomial choice must agree

    def mul(a, b):
        res = [0] * (2 * n - 1)
        for i in range(n):
            for j in range(n):
                res[i + j] = (res[i + j] + a[i] * b[j]) % p
        for k in range(2 * n - 2, n - 1, -1):
            c = res[k]
            if c:
                res[k] = 0
                for j in range(n):
                    res[k - n + j] = (res[k - n + j] - c * mod[j]) % p
        return tuple(res[:n])

    def powd(a, e):
        out = (1, 0, 0)
        base = a
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    def trace(a):
        t = [0, 0, 0]
        cur = a
        for _ in range(n):
            t = [(u + v) % p for u, v in zip(t, cur)]
            cur = powd(cur, p)
        assert t[1] == t[2] == 0
        return t[0]

    elements = [(c0, c1, c2) for c2 in range(3) for c1 in range(3) for c0 in range(3)]
    spec = {}
    for a in elements:
        if a == (0, 0, 0):
            continue
        fibers = [0, 0, 0]
        for x in elements:
            ax = mul(a, x)
            t = (trace(powd(x, d)) - trace(ax)) % p
            fibers[t] += 1
        assert fibers[1] == fibers[2]  # d odd over GF(3^n) always rationalizes
        val = fibers[0] - fibers[1]
        spec[val] = spec.get(val, 0) + 1
    return spec


def test_spectrum_against_independent_oracle_q27():
    ctx = build_field(3, 3)
    for d in (1, 5, 7, 11):
        assert spectrum(ctx, d).entries == oracle_spectrum_q27(d)


# ---------------------------------------------------------------------------


def test_sum_at_zero_vanishes():
    ctx = build_field(3, 5)
    for d in (5, 83):
        assert weil_sum(ctx, d, 0).value == 0


def test_degenerate_exponent():
    ctx = build_field(3, 5)
    assert weil_sum(ctx, 1, 1).value == ctx.q
    assert weil_sum(ctx, 1, 2).value == 0
    assert spectrum(ctx, 1).entries == {0: ctx.q - 2, ctx.q: 1}


def test_family_values_n5():
    ctx = build_field(3, 5)
    for a in range(1, ctx.q):
        assert weil_sum(ctx, 83, a).value in (0, 27, -27)


def test_family_spectra():
    assert spectrum(build_field(3, 5), 83).entries == {0: 161, 27: 45, -27: 36}
    assert spectrum(build_field(3, 7), 11).entries == {0: 1457, 81: 378, -81: 351}


def test_spectrum_jobs_merge():
    ctx = build_field(3, 5)
    assert spectrum(ctx, 83, jobs=4).entries == spectrum(ctx, 83).entries


def test_moments_n5():
    s = spectrum(build_field(3, 5), 83)
    assert power_moment(s, 1) == 243
    assert power_moment(s, 2) == 243**2
    assert power_moment(s, 4) == 3 * 243**3 == 43046721


def test_fourth_moment_non_family_instances():
    # only gcd(r, n) = gcd(d, q-1) = 1 is needed, not 4r = 1 mod n
    for n, r in [(3, 1), (5, 1), (7, 1), (9, 2)]:
        ctx = build_field(3, n)
        d = 3**r + 2
        assert math.gcd(d, ctx.q - 1) == 1
        assert power_moment(spectrum(ctx, d), 4) == 3 * ctx.q**3


def test_validate_exponent():
    assert (validate_exponent(5).r, validate_exponent(5).d) == (4, 83)
    assert (validate_exponent(7).r, validate_exponent(7).d) == (2, 11)
    assert (validate_exponent(9).r, validate_exponent(9).d) == (7, 2189)
    for n in (5, 7, 9, 11, 13):
        choice = validate_exponent(n)
        assert choice.gcd_with_group == 1
        assert choice.d_mod_13 in (3, 5, 11)
    with pytest.raises(ValueError):
        validate_exponent(6)
    with pytest.raises(ValueError):
        validate_exponent(1)


def test_is_degenerate():
    assert is_degenerate(3, 3, 5)
    assert is_degenerate(9 * (3**5 - 1) + 9, 3, 5)
    assert not is_degenerate(83, 3, 5)


def test_nondegenerate_at_least_three_valued_q243():
    ctx = build_field(3, 5)
    for d in range(1, ctx.q - 1, 2):
        if math.gcd(d, ctx.q - 1) != 1:
            continue
        spec = spectrum(ctx, d)
        if is_degenerate(d, 3, 5):
            assert set(spec.entries) == {0, ctx.q}
        else:
            assert len(spec.entries) >= 3, d


def test_helleseth_integrality_criterion_p5():
    # integer values iff d = 1 mod p-1, both directions over GF(25)
    ctx = build_field(5, 2)
    for d in range(1, ctx.q - 1):
        if math.gcd(d, ctx.q - 1) != 1:
            continue
        spec = spectrum(ctx, d)
        assert spec.is_integer == (d % 4 == 1), d
        if not spec.is_integer:
            with pytest.raises(SpectrumError):
                power_moment(spec, 1)


def test_first_two_moments_generic():
    for p, n, ds in [(3, 4, (5, 7, 11)), (3, 6, (5, 11)), (5, 2, (1, 5, 13))]:
        ctx = build_field(p, n)
        for d in ds:
            if math.gcd(d, ctx.q - 1) != 1:
                continue
            spec = spectrum(ctx, d)
            if spec.is_integer:
                assert power_moment(spec, 1) == ctx.q
                assert power_moment(spec, 2) == ctx.q**2


def test_check_family_reports():
    for n in (5, 7):
        rep = check_family(n)
        assert rep.passed, [c.line() for c in rep.checks if not c.ok]
