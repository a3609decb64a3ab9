"""The staged folding from positive tuples to tuples with sigma = id.

Pairs of families move through the classes Q_1, Q_2, ... by repeated
2^t-foldings until they land in the class R, which lifts back to tuples
made of straight pairs [alpha_i, beta_i].
"""
from __future__ import annotations

from .core import SkewDiagram
from .paths import PathTuple, enumerate_tuples
from .regions import (
    HPair,
    Region,
    epsilon_k,
    odd_regions,
    project_pi,
    regions,
    tuple_from_pairing,
    components,
    is_boundary,
)


def t_zero(l: int) -> int:
    t = 0
    while 2**t <= l:
        t += 1
    return t


def overlap_indices(h: HPair, k: int, even: bool | None = None, hole: bool = False):
    """Indices i with (alpha_i, beta_{i+k}) an overlap (or hole), optionally by parity."""
    out = []
    for i in range(1, h.l - k + 1):
        g = h.gap(i, k)
        if (g > 0) != hole:
            continue
        if even is not None and (g % 2 == 0) != even:
            continue
        out.append(i)
    return out


def _is_even_overlap(h: HPair, i: int, k: int) -> bool:
    if i < 1 or i + k > h.l or k < 1:
        return False
    g = h.gap(i, k)
    return g <= 0 and g % 2 == 0


def _is_even_hole(h: HPair, i: int, k: int) -> bool:
    if i < 1 or i + k > h.l or k < 1:
        return False
    g = h.gap(i, k)
    return g > 0 and g % 2 == 0


def s_alpha(h: HPair, i: int) -> int:
    return (h.alphas[i - 1][0] - h.betas[0][0]) // 2 + i - 1


def s_beta(h: HPair, i: int) -> int:
    return (h.betas[i - 1][0] - h.betas[0][0]) // 2 + i - 1


def m_alpha(h: HPair, i: int, t: int | None) -> int:
    """m_t(alpha_i); t=None gives the limiting count."""
    if t is None:
        return m_beta(h, i, None)
    k = 2**t - 1
    return sum(_is_even_overlap(h, j, k) for j in range(1, i + 1)) + \
        sum(_is_even_hole(h, j, 1) for j in range(1, i))


def m_beta(h: HPair, i: int, t: int | None) -> int:
    holes = sum(_is_even_hole(h, j - 1, 1) for j in range(1, i + 1))
    if t is None:
        return holes
    k = 2**t - 1
    return sum(_is_even_overlap(h, j - k, k) for j in range(1, i)) + holes


def conditions(h: HPair, t: int) -> dict[int, bool]:
    """Truth values of the conditions (1)_t .. (7)_t."""
    l = h.l
    k = 2**t
    c = {}
    c[1] = all(h.alphas[i][0] <= h.betas[i][0] for i in range(l))
    c[2] = not odd_regions(h, 1, "II")
    c[3] = (k - 1 > l - 1) or not odd_regions(h, k - 1, "I")
    c[4] = not overlap_indices(h, k)
    c[5] = t < 2 or bool(overlap_indices(h, k // 2))
    c[6] = all((s_alpha(h, i) - m_alpha(h, i, t)) % 2 == 0 and
               (s_beta(h, i) - m_beta(h, i, t)) % 2 == 0 for i in range(1, l + 1))
    c[7] = bool(overlap_indices(h, k - 1, even=True))
    return c


def in_Q(h: HPair, t: int, hat: bool = False) -> bool:
    c = conditions(h, t)
    need = range(1, 8) if hat else range(1, 7)
    return all(c[i] for i in need)


def in_R(h: HPair) -> bool:
    """Membership in the union of Q_t minus hat-Q_t."""
    last = max(t_zero(h.l), 1)
    return any(in_Q(h, t) and not conditions(h, t)[7] for t in range(1, last + 1))


def in_R_direct(h: HPair) -> bool:
    """The same set via (1), (2) and a single parity condition."""
    l = h.l
    if not all(h.alphas[i][0] <= h.betas[i][0] for i in range(l)):
        return False
    if odd_regions(h, 1, "II"):
        return False
    for i in range(1, l + 1):
        m = m_beta(h, i, None)
        if len({s_alpha(h, i) % 2, s_beta(h, i) % 2, m % 2}) != 1:
            return False
    return True


# --------------------------------------------------------------------------
# LR / RL typing of height-0 units


def unit_type(h: HPair, u, k: int) -> str | None:
    """'LR', 'RL' or None for a height-0 unit, relative to the even (k-1)-overlaps."""
    side, r, a2 = u
    if r != 0:
        return None
    if side < 0:
        a2 -= 2  # type of the dual upper triangle
    idx = overlap_indices(h, k - 1, even=True)
    if len(idx) % 2:
        return None
    for j in range(len(idx) - 1):
        i, i2 = idx[j], idx[j + 1]
        if h.B(i2 + k - 1, 0) <= a2 and a2 + 2 <= h.A_dual(i, 0):
            return "LR" if j % 2 == 0 else "RL"
    return None


def region_type(h: HPair, V: Region, k: int) -> set:
    return {unit_type(h, u, k) for u in V.units if u[1] == 0}


def lr_regions(h: HPair, k: int) -> list[Region]:
    return [V for V in regions(h, k, "II") if region_type(h, V, k) == {"LR"}]


def typed_conditions(h: HPair, k: int) -> dict[str, bool]:
    """The three conditions characterizing the absence of odd I_{k-1}-regions."""
    idx = overlap_indices(h, k - 1, even=True)
    out = {"even_count": len(idx) % 2 == 0}
    if not out["even_count"]:
        out["no_mixed"] = out["lr_bounded"] = False
        return out
    mixed = False
    bounded = True
    for comp in components(h, k, "II"):
        types = {unit_type(h, u, k) for u in comp if u[1] == 0} - {None}
        if types == {"LR", "RL"}:
            mixed = True
        if "LR" in types and any(is_boundary(h, u, k) for u in comp):
            bounded = False
    out["no_mixed"] = not mixed
    out["lr_bounded"] = bounded
    return out


# --------------------------------------------------------------------------
# the stage maps


def _apply_all(h: HPair, vs: list[Region], k: int) -> HPair:
    units = [u for V in vs for u in V.units]
    if len(units) != len(set(units)):
        raise AssertionError("regions to be folded overlap")
    for V in sorted(vs, key=lambda R: -R.max_height0()):
        h = epsilon_k(h, V, k)
    return h


def phi_t(h: HPair, t: int) -> HPair:
    k = 2**t
    return _apply_all(h, lr_regions(h, k), k)


def phi_t_inv(h: HPair, t: int) -> HPair:
    k = 2**t
    return _apply_all(h, regions(h, k, "I"), k)


def fold_pair(h: HPair) -> tuple[HPair, int]:
    """Apply phi_1, phi_2, ... while (7)_t holds; returns the final pair and t."""
    t = 1
    while conditions(h, t)[7]:
        h = phi_t(h, t)
        t += 1
    return h, t


# --------------------------------------------------------------------------
# lifting pairs back to tuples


def pi_inv_Q1(h: HPair) -> PathTuple:
    """Pair lower and upper halves in three passes."""
    l = h.l
    target = [None] * l
    used_beta = set()
    for i in range(1, l):
        if _is_even_overlap(h, i, 1):
            target[i - 1] = i  # beta_{i+1}, 0-based index i
            used_beta.add(i)
    for i in range(1, l + 1):
        if target[i - 1] is not None or (i - 1) in used_beta:
            continue
        if (h.alphas[i - 1][0] - h.betas[i - 1][0]) % 4 == 0:
            target[i - 1] = i - 1
            used_beta.add(i - 1)
    for i in range(1, l + 1):
        if target[i - 1] is not None:
            continue
        # nearest free beta below index i lying strictly to the right
        for j in range(i - 1, 0, -1):
            if (j - 1) not in used_beta and h.alphas[i - 1][0] < h.betas[j - 1][0]:
                target[i - 1] = j - 1
                used_beta.add(j - 1)
                break
        else:
            raise ValueError("pair is not in Q_1")
    t = tuple_from_pairing(h, target)
    if t is None:
        raise ValueError("pairing produced an odd run of east steps")
    return t


def pi_inv_R(h: HPair) -> PathTuple:
    t = tuple_from_pairing(h, tuple(range(h.l)))
    if t is None:
        raise ValueError("pair is not in R")
    return t


def phi(t: PathTuple, n: int) -> PathTuple:
    """The folding map from positive tuples to tuples with sigma = id."""
    h, _ = fold_pair(project_pi(t, n))
    return pi_inv_R(h)


def unfold_pair(h: HPair, stage: int) -> HPair:
    """Undo fold_pair for a pair that ended at the given stage."""
    for t in range(stage - 1, 0, -1):
        h = phi_t_inv(h, t)
    return h


def enumerate_P(d: SkewDiagram, n: int):
    """Tuples with sigma = id, no ordinary adjacent pair, no odd II_1-region."""
    for t in enumerate_tuples(d, n, "hv"):
        if not odd_regions(project_pi(t, n), 1, "II"):
            yield t
