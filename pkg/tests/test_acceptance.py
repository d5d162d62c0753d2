"""End-to-end acceptance checks, one marker per criterion.

The per-criterion pass/fail lines are printed in the terminal summary
(see conftest.py).  Run just this file with ``pytest tests/test_acceptance.py``.
"""

import io
import random
import time
from fractions import Fraction
from math import comb, factorial

import pytest

from hookverify import cli
from hookverify.engine import rhs_value, sum_brute, sum_rec, verify
from hookverify.exactnum import Poly, RatFunc, rf_add, rf_eval, rf_make, rf_mul, rf_parse, rf_pow
from hookverify.series import TruncatedSeries, lemma3_sides, series_exp, tree_function, verify_square
from hookverify.trees import (
    LEAF,
    EnumerationCaps,
    encode_binary,
    enumerate_binary,
    enumerate_ternary,
    hooks_ternary_internal,
)
from hookverify.weights import WEIGHTS, w_half, w_han, w_ternary

criterion = pytest.mark.criterion

t = Poly((0, 1))
ONE = Poly((1,))


def timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def odd_power_over_factorial(n):
    return RatFunc.const(Fraction((2 * n + 1) ** (n - 1), factorial(n)))


def catalan_oracle(n_max):
    c = [1]
    for n in range(n_max):
        c.append(sum(c[k] * c[n - k] for k in range(n + 1)))
    return c


# -- 1 -----------------------------------------------------------------------

@criterion(1, "worked example via the CLI, n = 3 value exact")
def test_worked_example_cli():
    out, err = io.StringIO(), io.StringIO()
    start = time.perf_counter()
    code = cli.main(["verify", "--identity", "han", "--n-max", "3", "--method", "both"], out=out, err=err, environ={})
    elapsed = time.perf_counter() - start
    assert code == 0
    rows = [l.split("\t") for l in out.getvalue().splitlines() if not l.startswith("#")]
    header, last = rows[0], dict(zip(rows[0], rows[-1]))
    assert len(rows) == 4 and all(r[header.index("verdict")] == "pass" for r in rows[1:])
    expected = rf_make((t * (t + 3) ** 2).scale(Fraction(2**3, factorial(3))), ONE)
    for side in ("lhs_brute", "lhs_rec", "rhs"):
        assert rf_parse(last[side]) == expected
    assert verify("han", 3, "both").rhs == expected
    assert elapsed < 1.0


# -- 2 -----------------------------------------------------------------------

@criterion(2, "han identity: recurrence n = 1..60, brute force n = 1..12")
def test_han_recurrence_to_60():
    def run():
        return all(verify("han", n, "recurrence").passed for n in range(1, 61))

    ok, elapsed = timed(run)
    assert ok and elapsed < 5.0


@criterion(2, "han identity: recurrence n = 1..60, brute force n = 1..12")
def test_han_brute_to_12():
    assert sum(1 for _ in enumerate_binary(12)) == 208012
    start = time.perf_counter()
    for n in range(1, 13):
        rep = verify("han", n, "both", EnumerationCaps(binary=12))
        assert rep.passed and rep.lhs_brute == rep.lhs_rec == rep.rhs
    assert time.perf_counter() - start < 120.0


# -- 3 -----------------------------------------------------------------------

@criterion(3, "postnikov identity: brute n = 1..12, recurrence n = 1..60")
def test_postnikov():
    for n in range(1, 13):
        assert verify("postnikov", n, "both").passed
    for n in range(1, 61):
        assert verify("postnikov", n, "recurrence").passed
    assert sum_brute("binary", 3, WEIGHTS["postnikov"]) == RatFunc.const(Fraction(2**3 * 4**2, factorial(3)))
    assert rhs_value("postnikov", 3) == RatFunc.const(Fraction(64, 3))


# -- 4 -----------------------------------------------------------------------

@criterion(4, "lascoux identity: polynomial equality n = 1..40, degree n")
def test_lascoux():
    for n in range(1, 41):
        rep = verify("lascoux", n, "recurrence")
        assert rep.passed
        for side in (rep.lhs_rec, rep.rhs):
            assert side.is_polynomial() and side.num.degree == n
    for n in range(1, 11):
        assert verify("lascoux", n, "brute").passed


# -- 5 -----------------------------------------------------------------------

@criterion(5, "half identity: three-way agreement n = 1..40, per-factor bridge")
def test_half_three_way():
    for n in range(1, 41):
        direct = sum_rec("binary", n, WEIGHTS["half"])
        via_han = rf_eval(sum_rec("binary", n, WEIGHTS["han"]), Fraction(1, 2))
        assert direct == RatFunc.const(via_han) == odd_power_over_factorial(n) == rhs_value("half", n)
    for n in range(1, 11):
        assert verify("half", n, "both").passed


@criterion(5, "half identity: three-way agreement n = 1..40, per-factor bridge")
def test_half_bridge():
    for h in range(1, 31):
        assert rf_eval(w_han(h), Fraction(1, 2)) == w_half(h).constant_value()


# -- 6 -----------------------------------------------------------------------

@criterion(6, "ternary identity: brute n = 1..6, recurrence n = 1..40")
def test_ternary_counts():
    counts = [sum(1 for _ in enumerate_ternary(n)) for n in range(1, 7)]
    assert counts == [1, 3, 12, 55, 273, 1428]
    assert counts == [comb(3 * n, n) // (2 * n + 1) for n in range(1, 7)]


@criterion(6, "ternary identity: brute n = 1..6, recurrence n = 1..40")
def test_ternary_sums():
    w = WEIGHTS["ternary"]
    for n in range(1, 7):
        assert sum_brute("ternary", n, w) == odd_power_over_factorial(n)
        assert verify("ternary", n, "both").passed
    for n in range(1, 41):
        assert sum_rec("ternary", n, w) == odd_power_over_factorial(n)


def _hooks_with_leaves(tree):
    # every vertex, leaves included, counts toward its ancestors' hooks
    out = []

    def walk(node):
        if node is LEAF:
            out.append(1)
            return 1
        size = 1 + sum(walk(c) for c in node.children)
        out.append(size)
        return size

    walk(tree)
    return out


@criterion(6, "ternary identity: brute n = 1..6, recurrence n = 1..40")
def test_ternary_hook_convention():
    # internal-only hooks close the identity; counting leaves as well does not
    for n in range(1, 5):
        internal = RatFunc.const(0)
        with_leaves = RatFunc.const(0)
        for tree in enumerate_ternary(n):
            a = RatFunc.const(1)
            for h in hooks_ternary_internal(tree):
                a = rf_mul(a, w_ternary(h))
            b = RatFunc.const(1)
            for h in _hooks_with_leaves(tree):
                b = rf_mul(b, w_ternary(h))
            internal, with_leaves = rf_add(internal, a), rf_add(with_leaves, b)
        assert internal == odd_power_over_factorial(n)
        assert with_leaves != odd_power_over_factorial(n)


# -- 7 -----------------------------------------------------------------------

@criterion(7, "forest identity: brute n = 1..12, recurrence n = 1..40")
def test_forest():
    w = WEIGHTS["forest"]
    for n in range(1, 13):
        assert sum_brute("forest", n, w) == odd_power_over_factorial(n)
    for n in range(1, 41):
        rep = verify("forest", n, "recurrence")
        assert rep.passed and rep.lhs_rec == odd_power_over_factorial(n)


# -- 8 -----------------------------------------------------------------------

@criterion(8, "series identities: convolution n = 0..25, square and tree function to order 12")
def test_convolution_identity():
    for n in range(26):
        closed, conv = lemma3_sides(n)
        assert closed == conv


@criterion(8, "series identities: convolution n = 0..25, square and tree function to order 12")
def test_series_square():
    assert verify_square(12)


@criterion(8, "series identities: convolution n = 0..25, square and tree function to order 12")
def test_tree_function():
    N = 12
    y = tree_function(N)
    for n in range(N + 1):
        assert y[n] == RatFunc.const(Fraction((n + 1) ** (n - 1) if n else 1, factorial(n)))
    xy = TruncatedSeries((RatFunc.const(0),) + y.coeffs[:-1], N)
    assert (y - series_exp(xy)).is_zero()


# -- 9 -----------------------------------------------------------------------

@criterion(9, "binary enumeration: Catalan counts n = 0..12, unique encodings at n = 10")
def test_catalan_counts():
    cat = catalan_oracle(12)
    assert [sum(1 for _ in enumerate_binary(n)) for n in range(13)] == cat
    assert cat == [comb(2 * n, n) // (n + 1) for n in range(13)]


@criterion(9, "binary enumeration: Catalan counts n = 0..12, unique encodings at n = 10")
def test_unique_encodings():
    codes = [encode_binary(T) for T in enumerate_binary(10)]
    assert len(codes) == len(set(codes)) == 16796


# -- 10 ----------------------------------------------------------------------

def _rand_poly(rng, max_deg=3):
    return Poly(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(rng.randint(0, max_deg + 1))))


def _rand_rf(rng, nonzero=False):
    while True:
        den = _rand_poly(rng, 2)
        if den.is_zero():
            continue
        f = rf_make(_rand_poly(rng), den)
        if not (nonzero and f.is_zero()):
            return f


@criterion(10, "exact arithmetic properties: 1000 ring/canonical cases, 500 power cases")
def test_ring_axioms_and_canonical_form():
    rng = random.Random(20261014)
    zero, one = RatFunc.const(0), RatFunc.const(1)
    cases = 0
    for _ in range(1000):
        a, b, c = _rand_rf(rng), _rand_rf(rng), _rand_rf(rng)
        assert rf_add(a, b) == rf_add(b, a)
        assert rf_mul(a, b) == rf_mul(b, a)
        assert rf_add(rf_add(a, b), c) == rf_add(a, rf_add(b, c))
        assert rf_mul(rf_mul(a, b), c) == rf_mul(a, rf_mul(b, c))
        assert rf_mul(a, rf_add(b, c)) == rf_add(rf_mul(a, b), rf_mul(a, c))
        assert rf_add(a, zero) == a and rf_mul(a, one) == a
        assert rf_add(a, -a).is_zero()
        # canonical: monic denominator, coprime parts, rebuilding is a no-op
        assert a.den.lead == 1
        g = rf_make(a.num, a.den)
        assert (g.num, g.den) == (a.num, a.den)
        cases += 1
    assert cases >= 1000


@criterion(10, "exact arithmetic properties: 1000 ring/canonical cases, 500 power cases")
def test_pow_additivity():
    rng = random.Random(1014)
    cases = 0
    for _ in range(500):
        f = _rand_rf(rng, nonzero=True)
        m, n = rng.randint(-4, 4), rng.randint(-4, 4)
        assert rf_pow(f, m + n) == rf_mul(rf_pow(f, m), rf_pow(f, n))
        cases += 1
    assert cases >= 500
