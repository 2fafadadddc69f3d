"""Catalog of irreducible root systems and generated combinatorial data.

The static per-type data (marks, Coxeter number, period, radical, Cartan
matrix) is hard-coded; positive roots are generated from the Cartan matrix
by the standard root-string closure, and Weyl groups (small rank only) by
breadth-first closure over the simple reflections.

Coordinates are always in the simple-root basis: a root is the integer
vector (m_1, ..., m_l) with alpha = sum m_j alpha_j.  The Cartan matrix is
stored as A[i][j] = <alpha_i, alpha_j-coroot>, so the reflection s_j acts by
beta -> beta - (sum_i beta_i A[i][j]) e_j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "RootSystemInfo",
    "PositiveRoot",
    "WeylElement",
    "GroupTooLargeError",
    "catalog",
    "positive_roots",
    "highest_root",
    "weyl_elements",
    "CLI_LABELS",
]

#: Labels advertised on the command line (any valid label is accepted).
CLI_LABELS = ("A3", "B4", "C3", "D4", "E6", "E7", "E8", "F4", "G2")

# (period rho, rad(rho)) per family
_PERIODS = {
    "A": (1, 1),
    "B": (2, 2),
    "C": (2, 2),
    "D": (2, 2),
    "E6": (6, 6),
    "E7": (12, 6),
    "E8": (60, 30),
    "F4": (12, 6),
    "G2": (6, 6),
}


@dataclass(frozen=True)
class RootSystemInfo:
    label: str
    family: str
    rank: int
    marks: tuple[int, ...]  # c_0..c_l, ascending (c_0 = 1)
    distinct_marks: tuple[tuple[int, int], ...]  # (c-hat, l-hat) pairs
    coxeter_h: int
    period_rho: int
    rad_rho: int
    cartan: tuple[tuple[int, ...], ...]
    index_f: int


class PositiveRoot(NamedTuple):
    coords: tuple[int, ...]


class WeylElement(NamedTuple):
    simple_images: tuple[tuple[int, ...], ...]
    signs: tuple[bool, ...]  # sign of w(alpha_i), i = 0..l (index 0: -highest root)


class GroupTooLargeError(RuntimeError):
    pass


def _path_cartan(rank: int) -> list[list[int]]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
        if i + 1 < rank:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    if family == "A":
        a = _path_cartan(rank)
    elif family == "B":
        a = _path_cartan(rank)
        a[rank - 2][rank - 1] = -2  # last simple root short
    elif family == "C":
        a = _path_cartan(rank)
        a[rank - 1][rank - 2] = -2  # last simple root long
    elif family == "D":
        a = _path_cartan(rank - 1)
        for row in a:
            row.append(0)
        a.append([0] * rank)
        a[rank - 1][rank - 1] = 2
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    elif family == "E":
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if rank >= 7:
            edges.append((5, 6))
        if rank == 8:
            edges.append((6, 7))
        for i, j in edges:
            a[i][j] = a[j][i] = -1
    elif family == "F":
        a = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    elif family == "G":
        a = [[2, -3], [-1, 2]]
    else:  # pragma: no cover
        raise ValueError(family)
    return tuple(tuple(row) for row in a)


def _marks(family: str, rank: int) -> tuple[int, ...]:
    if family == "A":
        return (1,) * (rank + 1)
    if family in ("B", "C"):
        return (1, 1) + (2,) * (rank - 1)
    if family == "D":
        return (1, 1, 1, 1) + (2,) * (rank - 3)
    return {
        "E6": (1, 1, 1, 2, 2, 2, 3),
        "E7": (1, 1, 2, 2, 2, 3, 3, 4),
        "E8": (1, 2, 2, 3, 3, 4, 4, 5, 6),
        "F4": (1, 2, 2, 3, 4),
        "G2": (1, 2, 3),
    }[family + str(rank)]


def _det(matrix: tuple[tuple[int, ...], ...]) -> int:
    # exact determinant by fraction-free-ish elimination (tiny matrices)
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    assert det.denominator == 1
    return int(det)


_LABEL_RE = re.compile(r"^([A-G])_?([0-9]+)$")


@lru_cache(maxsize=None)
def catalog(label: str) -> RootSystemInfo:
    """Table-of-root-systems record for a label like "E6", "A3", "B12"."""
    m = _LABEL_RE.match(label.strip().upper())
    if not m:
        raise ValueError(f"unrecognized root system label: {label!r}")
    family, rank = m.group(1), int(m.group(2))
    limits = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if not limits[family]:
        raise ValueError(f"rank {rank} out of range for family {family}")
    marks = tuple(sorted(_marks(family, rank)))
    h = sum(marks)
    rho, rad = _PERIODS[family if family in "ABCD" else family + str(rank)]
    distinct = tuple(
        (c, sum(1 for x in marks if x % c == 0) - 1) for c in sorted(set(marks))
    )
    cartan = _cartan_matrix(family, rank)
    return RootSystemInfo(
        label=f"{family}{rank}",
        family=family,
        rank=rank,
        marks=marks,
        distinct_marks=distinct,
        coxeter_h=h,
        period_rho=rho,
        rad_rho=rad,
        cartan=cartan,
        index_f=_det(cartan),
    )


def _pair_coroot(beta: tuple[int, ...], j: int, cartan) -> int:
    return sum(b * cartan[i][j] for i, b in enumerate(beta) if b)


def _reflect(beta: tuple[int, ...], j: int, cartan) -> tuple[int, ...]:
    c = _pair_coroot(beta, j, cartan)
    if not c:
        return beta
    out = list(beta)
    out[j] -= c
    return tuple(out)


@lru_cache(maxsize=None)
def positive_roots(info: RootSystemInfo) -> tuple[PositiveRoot, ...]:
    """All positive roots, generated level-by-level from the simple roots.

    For each root beta and simple direction j, beta + alpha_j is a root iff
    q = p - <beta, alpha_j-coroot> > 0, where p is how far the root string
    extends downward (standard root-string closure).
    """
    rank = info.rank
    cartan = info.cartan
    simple = [tuple(int(i == j) for i in range(rank)) for j in range(rank)]
    found: set[tuple[int, ...]] = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for j in range(rank):
                c = _pair_coroot(beta, j, cartan)
                p = 0
                down = list(beta)
                while True:
                    down[j] -= 1
                    if down[j] < 0 or tuple(down) not in found:
                        break
                    p += 1
                if p - c > 0:
                    up = list(beta)
                    up[j] += 1
                    t = tuple(up)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        level = nxt
    ordered = sorted(found, key=lambda v: (sum(v), v))
    return tuple(PositiveRoot(v) for v in ordered)


def highest_root(info: RootSystemInfo) -> tuple[int, ...]:
    return positive_roots(info)[-1].coords


@lru_cache(maxsize=None)
def weyl_elements(info: RootSystemInfo, cap: int = 200000) -> tuple[WeylElement, ...]:
    """Every Weyl group element, as the tuple of images of the simple roots,
    by breadth-first closure; raises GroupTooLargeError past ``cap``.

    Each element also records the signs of w(alpha_i) for i = 0..l, where
    alpha_0 = -(highest root).
    """
    rank = info.rank
    cartan = info.cartan
    theta = highest_root(info)
    identity = tuple(tuple(int(i == j) for i in range(rank)) for j in range(rank))
    seen: dict[tuple, None] = {identity: None}
    queue = [identity]
    while queue:
        nxt = []
        for w in queue:
            for j in range(rank):
                new = tuple(_reflect(v, j, cartan) for v in w)
                if new not in seen:
                    seen[new] = None
                    if len(seen) > cap:
                        raise GroupTooLargeError(
                            f"Weyl group of {info.label} exceeds cap {cap}"
                        )
                    nxt.append(new)
        queue = nxt

    def is_positive(vec: tuple[int, ...]) -> bool:
        for x in vec:
            if x:
                return x > 0
        raise ValueError("zero vector is not a root")

    elements = []
    for w in seen:
        theta_img = [0] * rank
        for coeff, img in zip(theta, w):
            for i, x in enumerate(img):
                theta_img[i] += coeff * x
        signs = (not is_positive(tuple(theta_img)),) + tuple(
            is_positive(v) for v in w
        )
        elements.append(WeylElement(w, signs))
    return tuple(elements)
