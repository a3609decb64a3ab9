"""Truncated series in X with coefficients in ZPoly.

Moving a coefficient past X shifts every offset by one, so
(P X^m)(Q X^k) = P * Q.shift(m) X^(m+k).
"""
from __future__ import annotations

from functools import lru_cache

from .core import ZPoly, zvar


class ShiftSeries:
    """Coefficients c_0 .. c_K of a series truncated after X^K."""

    __slots__ = ("coeffs", "K")

    def __init__(self, coeffs, K: int):
        coeffs = list(coeffs)[: K + 1]
        coeffs += [ZPoly()] * (K + 1 - len(coeffs))
        self.coeffs = coeffs
        self.K = K

    @classmethod
    def one(cls, K):
        return cls([ZPoly.one()], K)

    def __getitem__(self, r):
        if r < 0 or r > self.K:
            raise IndexError(r)
        return self.coeffs[r]

    def __mul__(self, other: "ShiftSeries") -> "ShiftSeries":
        K = min(self.K, other.K)
        out = [ZPoly() for _ in range(K + 1)]
        for m, a in enumerate(self.coeffs[: K + 1]):
            if a.is_zero():
                continue
            for k, b in enumerate(other.coeffs[: K + 1 - m]):
                if b.is_zero():
                    continue
                out[m + k] = out[m + k] + a * b.shift(m)
        return ShiftSeries(out, K)

    def __sub__(self, other):
        K = min(self.K, other.K)
        return ShiftSeries([self.coeffs[i] - other.coeffs[i] for i in range(K + 1)], K)

    def negate_x(self) -> "ShiftSeries":
        """Substitute X -> -X."""
        return ShiftSeries([c if r % 2 == 0 else -c for r, c in enumerate(self.coeffs)], self.K)

    def shift(self, k: int) -> "ShiftSeries":
        return ShiftSeries([c.shift(k) for c in self.coeffs], self.K)

    def is_one(self) -> bool:
        return self.coeffs[0] == ZPoly.one() and all(c.is_zero() for c in self.coeffs[1:])

    def __eq__(self, other):
        return self.K == other.K and self.coeffs == other.coeffs


def linear_factor(code: int, sign: int, K: int) -> ShiftSeries:
    """1 + sign * z_code X."""
    return ShiftSeries([ZPoly.one(), ZPoly.var(code, 0).scale(sign)], K)


def geometric_factor(code: int, K: int) -> ShiftSeries:
    """(1 - z_code X)^(-1) = sum_m z_{a} z_{a-2} ... z_{a-2m+2} X^m."""
    coeffs = []
    mono = 0
    for m in range(K + 1):
        coeffs.append(ZPoly({mono: 1}))
        mono += zvar(code, m)
    return ShiftSeries(coeffs, K)


def _pair_term(n: int) -> ZPoly:
    # z_nbar X z_n X = z_{nbar,a} z_{n,a-2} X^2
    return ZPoly({zvar(-n, 0) + zvar(n, 1): 1})


def middle_factor(n: int, K: int) -> ShiftSeries:
    """1 - z_nbar X z_n X."""
    coeffs = [ZPoly.one(), ZPoly(), -_pair_term(n)]
    return ShiftSeries(coeffs, K)


def middle_inverse(n: int, K: int) -> ShiftSeries:
    """(1 - z_nbar X z_n X)^(-1) as a geometric series in the shifted ring."""
    step = ShiftSeries([ZPoly(), ZPoly(), _pair_term(n)], K)
    total = ShiftSeries.one(K)
    power = ShiftSeries.one(K)
    for _ in range(K // 2):
        power = power * step
        total = ShiftSeries([a + b for a, b in zip(total.coeffs, power.coeffs)], K)
    return total


def _product(factors, K):
    out = ShiftSeries.one(K)
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=64)
def series_E(n: int, K: int) -> ShiftSeries:
    left = [linear_factor(k, 1, K) for k in range(1, n + 1)]
    right = [linear_factor(-k, 1, K) for k in range(n, 0, -1)]
    return _product(left + [middle_inverse(n, K)] + right, K)


@lru_cache(maxsize=64)
def series_H(n: int, K: int) -> ShiftSeries:
    left = [geometric_factor(-k, K) for k in range(1, n + 1)]
    right = [geometric_factor(k, K) for k in range(n, 0, -1)]
    return _product(left + [middle_factor(n, K)] + right, K)


def e_poly(r: int, k: int, n: int) -> ZPoly:
    """Coefficient of X^r in E(z, X) at parameter a-2k."""
    if r < 0:
        return ZPoly()
    return series_E(n, max(r, 6))[r].shift(k)


def h_poly(r: int, k: int, n: int) -> ZPoly:
    """Coefficient of X^r in H(z, X) at parameter a-2k."""
    if r < 0:
        return ZPoly()
    return series_H(n, max(r, 6))[r].shift(k)


def check_inverse(n: int, K: int) -> bool:
    """H(X) E(-X) == 1 up to X^K, exactly."""
    return (series_H(n, K) * series_E(n, K).negate_x()).is_one()
