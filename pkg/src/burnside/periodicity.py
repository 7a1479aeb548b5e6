"""Fractional powers, periodic runs, and common-prefix bounds."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .errors import (
    BadRegime,
    CommutingPeriods,
    NotAFractionalPower,
    NotAPrefixOfPower,
    PeriodNotPrimitive,
    SpanOutOfRange,
)
from .words import Word, inverse, is_primitive, primitive_root

_NUMPY_CUTOFF = 64


@dataclass(frozen=True)
class FractionalPower:
    u: Word
    period: Word
    k: int
    a1: Word

    @property
    def measure(self) -> Fraction:
        return Fraction(len(self.u), len(self.period))


def lambda_measure(u: Sequence[int], period: Sequence[int]) -> Fraction:
    """|u| / |period|, after checking u really is a factor of period^N."""
    u, period = tuple(u), tuple(period)
    p = len(period)
    if p == 0:
        raise NotAFractionalPower("empty period")
    if not is_primitive(period):
        raise PeriodNotPrimitive(repr(period))
    if u:
        for phase in range(p):
            if all(u[i] == period[(phase + i) % p] for i in range(len(u))):
                break
        else:
            raise NotAFractionalPower(f"{u!r} is not a factor of a power of {period!r}")
    return Fraction(len(u), p)


def decompose(u: Sequence[int], period: Sequence[int]) -> FractionalPower:
    """Write a prefix of period^N as period^k * a1."""
    u, period = tuple(u), tuple(period)
    p = len(period)
    if p == 0 or any(u[i] != period[i % p] for i in range(len(u))):
        raise NotAPrefixOfPower(f"{u!r} is not a prefix of a power of {period!r}")
    return FractionalPower(u, period, len(u) // p, u[len(u) - len(u) % p:])


def common_power_prefix(x: Sequence[int], y: Sequence[int]) -> tuple[Word, int]:
    """Longest common prefix of x^inf and y^inf, plus the |x|+|y|-gcd bound."""
    x, y = tuple(x), tuple(y)
    rx, ry = primitive_root(x).root, primitive_root(y).root
    if ry == rx or ry == inverse(rx):
        raise CommutingPeriods(f"{x!r} and {y!r} share a root")
    bound = len(x) + len(y) - gcd(len(x), len(y))
    cap = bound + len(x) + len(y)
    i = 0
    while i < cap and x[i % len(x)] == y[i % len(y)]:
        i += 1
    return tuple(x[j % len(x)] for j in range(i)), bound


def periodic_shifts(X: Sequence[int], K: int, span: tuple[int, int]) -> list[int]:
    """Offsets of all |X|-translates of span inside X^K."""
    X = tuple(X)
    if not is_primitive(X):
        raise PeriodNotPrimitive(repr(X))
    if K < 3:
        raise BadRegime(f"need K >= 3, got {K}")
    off, length = span
    total = K * len(X)
    if off < 0 or length < 0 or off + length > total:
        raise SpanOutOfRange(f"span {span} outside X^{K}")
    lo = off % len(X)
    return [o for o in range(lo, total - length + 1, len(X))]


def find_runs(
    w: Sequence[int],
    min_measure: Fraction | int = 1,
    max_period: int | None = None,
) -> list[tuple[int, int, Word]]:
    """Maximal periodic segments (start, length, aligned primitive period).

    A segment counts as a run only when it is longer than its period, so
    trivial measure-1 occurrences (every factor is one) are never listed.
    Non-primitive aligned periods are skipped: the same segment is reported
    at the primitive period length.
    """
    w = tuple(w)
    L = len(w)
    out: list[tuple[int, int, Word]] = []
    if L < 2:
        return out
    pm = L - 1 if max_period is None else min(max_period, L - 1)
    if min_measure > 1:
        pm = min(pm, int(Fraction(L) / Fraction(min_measure)))
    arr = np.asarray(w, dtype=np.int32) if L >= _NUMPY_CUTOFF else None
    for p in range(1, pm + 1):
        if arr is not None:
            m = arr[p:] == arr[:-p]
            if not m.any():
                continue
            padded = np.concatenate(([False], m, [False]))
            edges = np.flatnonzero(padded[1:] != padded[:-1])
            blocks = zip(edges[::2], edges[1::2])
        else:
            blocks = []
            i = 0
            while i < L - p:
                if w[i] == w[i + p]:
                    j = i
                    while j < L - p and w[j] == w[j + p]:
                        j += 1
                    blocks.append((i, j))
                    i = j
                i += 1
        for i, j in blocks:
            length = int(j) - int(i) + p
            if Fraction(length, p) < min_measure:
                continue
            period = w[int(i): int(i) + p]
            if p > 1 and not is_primitive(period):
                continue
            out.append((int(i), length, period))
    out.sort(key=lambda t: (t[0], -t[1]))
    return out
