"""Parameter system: exact thresholds and mode validation."""

from fractions import Fraction

import pytest

from burnside.config import LAB, STRICT, default_params, make_params
from burnside.errors import (
    BadRegime,
    EvenExponent,
    ExponentTooSmall,
    TooFewGenerators,
)


def test_reference_values():
    p = make_params(593, 2, STRICT)
    assert p.tau == 16
    assert p.epsilon == 33
    assert p.lam == Fraction(691, 2)
    assert p.mu == 462
    assert p.alpha == 50
    assert p.cert_floor == 83
    assert p.window_lo == Fraction(429, 2)
    assert p.window_hi == Fraction(757, 2)
    assert p.lambda2 == Fraction(757, 2)
    assert p.lambda1 == Fraction(823, 2)
    assert p.half_n == Fraction(593, 2)


def test_no_floats():
    p = default_params()
    for name in ("lam", "lambda1", "lambda2", "window_lo", "window_hi"):
        assert isinstance(getattr(p, name), (int, Fraction))


def test_even_exponent_rejected():
    with pytest.raises(EvenExponent):
        make_params(592, 2, STRICT)
    with pytest.raises(EvenExponent):
        make_params(4, 2, LAB)


def test_strict_floor():
    with pytest.raises(ExponentTooSmall):
        make_params(3, 2, STRICT)
    with pytest.raises(ExponentTooSmall):
        make_params(591, 2, STRICT)


def test_generator_floor():
    with pytest.raises(TooFewGenerators):
        make_params(593, 1, STRICT)


def test_unknown_mode():
    with pytest.raises(BadRegime):
        make_params(593, 2, "fast")


def test_lab_mode():
    p = make_params(3, 2, LAB, tau=1)
    assert p.n == 3
    assert p.tau == 1
    assert not p.guarantees_unique
    assert default_params().guarantees_unique


def test_tau_fixed_in_strict():
    with pytest.raises(BadRegime):
        make_params(593, 2, STRICT, tau=8)
    assert make_params(593, 2, STRICT, tau=16).tau == 16


def test_default_params_cached():
    assert default_params() is default_params()
