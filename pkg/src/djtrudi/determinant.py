"""Jacobi-Trudi type determinants with entries from the series coefficients."""
from __future__ import annotations

from .core import SkewDiagram, ZPoly, part
from .series import e_poly, h_poly


def det(matrix) -> ZPoly:
    """Laplace expansion along successive rows, memoized on the used columns."""
    size = len(matrix)
    if size == 0:
        return ZPoly.one()
    memo: dict[int, ZPoly] = {}

    def minor(row: int, used: int) -> ZPoly:
        if row == size:
            return ZPoly.one()
        got = memo.get(used)
        if got is not None:
            return got
        total = ZPoly()
        sign = 1
        for col in range(size):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if not entry.is_zero():
                rest = minor(row + 1, used | (1 << col))
                if not rest.is_zero():
                    term = entry * rest
                    total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[used] = total
        return total

    return minor(0, 0)


def h_matrix(d: SkewDiagram, n: int):
    lam, mu = d.lam, d.mu
    l = len(lam)
    return [[h_poly(part(lam, i) - part(mu, j) - i + j, -(part(lam, i) - i), n)
             for j in range(1, l + 1)] for i in range(1, l + 1)]


def e_matrix(d: SkewDiagram, n: int):
    lc, mc = d.lam_conj, d.mu_conj
    l = len(lc)
    return [[e_poly(part(lc, i) - part(mc, j) - i + j, part(mc, j) - j + 1, n)
             for j in range(1, l + 1)] for i in range(1, l + 1)]


def jt_det_h(d: SkewDiagram, n: int) -> ZPoly:
    return det(h_matrix(d, n))


def jt_det_e(d: SkewDiagram, n: int) -> ZPoly:
    return det(e_matrix(d, n))
