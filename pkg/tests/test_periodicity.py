"""Fractional powers, common power prefixes, runs, periodic shifts."""

import random
from fractions import Fraction

import pytest

from burnside.errors import (
    BadRegime,
    CommutingPeriods,
    NotAPrefixOfPower,
    NotAFractionalPower,
    SpanOutOfRange,
)
from burnside.periodicity import (
    common_power_prefix,
    decompose,
    find_runs,
    lambda_measure,
    periodic_shifts,
)
from burnside.words import EMPTY, parse


def test_lambda_measure_examples():
    assert lambda_measure(parse("ababa"), parse("ab")) == Fraction(5, 2)
    assert lambda_measure(parse("a"), parse("ab")) == Fraction(1, 2)
    assert lambda_measure(EMPTY, parse("ab")) == 0


def test_lambda_measure_accepts_any_phase():
    # ba is a factor of (ab)^inf, just shifted
    assert lambda_measure(parse("ba"), parse("ab")) == 1


def test_lambda_measure_rejects_mismatch():
    with pytest.raises(NotAFractionalPower):
        lambda_measure(parse("aa"), parse("ab"))


def test_common_power_prefix_examples():
    prefix, bound = common_power_prefix(parse("ab"), parse("aab"))
    assert prefix == parse("a") and bound == 4
    prefix, bound = common_power_prefix(parse("ab"), parse("aba"))
    assert prefix == parse("aba") and bound == 4
    with pytest.raises(CommutingPeriods):
        common_power_prefix(parse("ab"), parse("abab"))
    with pytest.raises(CommutingPeriods):
        common_power_prefix(parse("ab"), parse("BA"))


def test_decompose_examples():
    fp = decompose(parse("ababa"), parse("ab"))
    assert fp.k == 2 and fp.a1 == parse("a")
    fp = decompose(parse("abaab"), parse("aba"))
    assert fp.k == 1 and fp.a1 == parse("ab")
    with pytest.raises(NotAPrefixOfPower):
        decompose(parse("ba"), parse("ab"))


def test_periodic_shifts_examples():
    offs = periodic_shifts(parse("aab"), 3, (0, 2))
    assert set(offs) == {0, 3, 6} and len(offs) >= 1
    offs = periodic_shifts(parse("ab"), 4, (0, 4))
    assert set(offs) == {0, 2, 4} and len(offs) >= 2
    with pytest.raises(BadRegime):
        periodic_shifts(parse("ab"), 2, (0, 2))
    with pytest.raises(SpanOutOfRange):
        periodic_shifts(parse("ab"), 3, (5, 4))


def test_find_runs_letter_power():
    runs = find_runs(parse("ba^5b"), min_measure=2)
    assert (1, 5, (1,)) in runs


def test_find_runs_two_letter_period():
    runs = find_runs(parse("c(ab)^3c"), min_measure=2)
    spans = [(s, l) for s, l, p in runs if p == parse("ab")]
    assert (1, 6) in spans


def test_find_runs_skips_imprimitive_periods():
    # the period at length 4 inside (ab)^4 is abab = (ab)^2: not listed
    runs = find_runs(parse("(ab)^4"), min_measure=1)
    assert all(len(p) != 4 for _, _, p in runs)


def test_find_runs_no_trivial_measure_one():
    runs = find_runs(parse("abcd"), min_measure=1)
    assert runs == []


def test_find_runs_numpy_matches_pure():
    # the implementation switches strategy at 64 letters; compare both
    rng = random.Random(7)
    for _ in range(20):
        w = tuple(rng.choice([1, -1, 2, -2, 3]) for _ in range(100))
        long_runs = find_runs(w, min_measure=Fraction(3, 2))
        short_runs = [
            r
            for i in range(0, 60, 20)
            for r in find_runs(w[i:i + 40], min_measure=Fraction(3, 2))
        ]
        # every run found in a window appears (shifted) in the full scan
        for s, l, p in find_runs(w[:40], min_measure=Fraction(3, 2)):
            assert any(
                rs <= s and rs + rl >= s + l and rp == w[rs:rs + len(rp)]
                for rs, rl, rp in long_runs
                if rl >= l
            )


def test_find_runs_sorted_and_maximal():
    w = parse("a^20ba^30")
    runs = find_runs(w, min_measure=5)
    assert runs == sorted(runs, key=lambda r: (r[0], -r[1]))
    assert (0, 20, (1,)) in runs and (21, 30, (1,)) in runs
