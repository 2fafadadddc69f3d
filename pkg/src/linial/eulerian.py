"""Eulerian polynomials and their root-system generalization.

Convention: A_l(t) = sum over permutations of {1..l} of t^(asc+1), so
A_0 = 1, A_1 = t, A_2 = t + t^2, A_3 = t + 4t^2 + t^3, and A_l(1) = l!.

The generalized polynomial R_Phi is computed two independent ways:
as the product [c_0]_t [c_1]_t ... [c_l]_t * A_l(t) over the marks, and as
(1/f) * sum over the Weyl group of t^asc(w) with
asc(w) = sum of c_i over the i in 0..l with w(alpha_i) > 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .ratpoly import RatPoly, compose_power, cyclotomic_type
from .rootsystems import RootSystemInfo, highest_root, weyl_elements

__all__ = [
    "eulerian",
    "generalized_eulerian",
    "generalized_eulerian_by_weyl",
    "eulerian_congruence_check",
    "generalized_congruence_operator",
]


@lru_cache(maxsize=None)
def eulerian(ell: int) -> RatPoly:
    """The Eulerian polynomial A_ell(t); A_0 = 1."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if ell == 0:
        return RatPoly.one()
    # triangle of ascent counts: row[j] = #{perms of {1..m} with j ascents}
    row = [1]
    for m in range(2, ell + 1):
        row = [
            (j + 1) * (row[j] if j < len(row) else 0)
            + (m - j) * (row[j - 1] if j >= 1 else 0)
            for j in range(m)
        ]
    return RatPoly((0, *row))


@lru_cache(maxsize=None)
def generalized_eulerian(info: RootSystemInfo) -> RatPoly:
    """R_Phi(t) as the cyclotomic-type product over the marks times A_l."""
    acc = eulerian(info.rank)
    for c in info.marks:
        acc = acc * cyclotomic_type(c)
    return acc


def generalized_eulerian_by_weyl(info: RootSystemInfo, cap: int = 200000) -> RatPoly:
    """R_Phi(t) summed over the Weyl group: (1/f) sum_w t^asc(w).

    The mark attached to alpha_i must follow the simple-root numbering, so
    the coefficient vector is (1, highest-root coordinates), not the sorted
    marks tuple.
    """
    cs = (1,) + highest_root(info)
    counts: dict[int, int] = {}
    for el in weyl_elements(info, cap):
        a = 0
        for c, positive in zip(cs, el.signs):
            if positive:
                a += c
        counts[a] = counts.get(a, 0) + 1
    coeffs = [Fraction(0)] * (max(counts) + 1)
    for a, cnt in counts.items():
        coeffs[a] = Fraction(cnt, info.index_f)
    return RatPoly(coeffs)


def eulerian_congruence_check(ell: int, n: int) -> bool:
    """Whether A_ell(t^n) = (1/n^(ell+1)) [n]_t^(ell+1) A_ell(t)
    mod (1-t)^(ell+1)."""
    if ell < 1 or n < 2:
        raise ValueError("need ell >= 1 and n >= 2")
    from .ratpoly import congruent_mod_power

    a = eulerian(ell)
    lhs = compose_power(a, n)
    rhs = (cyclotomic_type(n) ** (ell + 1) * a).scale(Fraction(1, n ** (ell + 1)))
    return congruent_mod_power(lhs, rhs, ell + 1)


def generalized_congruence_operator(info: RootSystemInfo, n: int) -> tuple[RatPoly, RatPoly]:
    """Both sides of the R_Phi congruence: lhs = R_Phi(t^n), rhs =
    prod_i (1/n)[n]_{t^(c_i)} * R_Phi(t); congruent mod (1-t)^(l+1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r = generalized_eulerian(info)
    lhs = compose_power(r, n)
    rhs = r
    for c in info.marks:
        rhs = rhs * compose_power(cyclotomic_type(n), c)
    rhs = rhs.scale(Fraction(1, n ** len(info.marks)))
    return lhs, rhs
