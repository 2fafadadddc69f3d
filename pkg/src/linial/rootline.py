"""Verify that all roots of a polynomial lie on a vertical line Re z = a.

Two independent routes:

numeric — all roots via Aberth–Ehrlich simultaneous iteration.  Zero roots
are stripped off exactly first, and repeated roots are separated with an
exact gcd so the iteration only ever runs on squarefree factors, where
per-root convergence can be detected by a backward-error test (the residual
|p(z)| dropping to the floating-point noise floor of the evaluation).  Each
converged root is then sharpened by two Newton steps carried out in exact
rational complex arithmetic, which pushes the error to the last few ulps
regardless of the coefficient scale.  The report carries the maximal
deviation |Re z - a|.

exact — shift by a (rational arithmetic): all roots lie on Re z = a iff
r(s) = p(s + a) satisfies r(-s) = (-1)^deg r(s) AND the real polynomial
w(u) = i^(-deg) * r(iu) has only real roots.  The parity is an exact
coefficient check; the all-real-roots claim is certified by an exact Sturm
count when r is squarefree.  Together these turn a floating-point
observation into a rational-arithmetic proof.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .ratpoly import (
    RatPoly,
    derivative,
    poly_divmod,
    poly_gcd,
    shift_argument,
    sturm_count_real_roots,
)

__all__ = ["RootReport", "RootFindingError", "find_roots", "verify_line"]

_EPS = 2.220446049250313e-16
_MAX_ITER = 500


class RootFindingError(RuntimeError):
    """Aberth iteration failed to converge."""


@dataclass(frozen=True)
class RootReport:
    target_real_part: Fraction
    roots: tuple[complex, ...]
    max_deviation: float
    symmetry_exact: bool
    sturm_exact: bool
    squarefree: bool


def _scaled_float_coeffs(p: RatPoly) -> tuple[list[float], float]:
    """Monic-normalize and rescale the variable so roots land near the unit
    circle; returns (coefficients of q(y) = p(R y)/(lead * R^deg), R)."""
    deg = int(p.degree)
    lead = p.leading
    radius = 0.0
    for k in range(deg):
        ratio = abs(p.coeffs[k] / lead)
        if ratio:
            radius = max(radius, 2.0 * float(ratio) ** (1.0 / (deg - k)))
    if radius == 0.0:
        radius = 1.0
    scaled = [float(p.coeffs[k] / lead) / radius ** (deg - k) for k in range(deg)]
    scaled.append(1.0)
    return scaled, radius


def _polish_exact(p: RatPoly, z0: complex, rounds: int = 2) -> complex:
    """Sharpen an approximate simple root by Newton steps in exact rational
    complex arithmetic.  Convergence is quadratic, so two rounds take a
    double-precision seed to well below one ulp of the true root."""
    re, im = Fraction(z0.real), Fraction(z0.imag)
    coeffs = p.coeffs
    for _ in range(rounds):
        pv_re = pv_im = Fraction(0)
        dv_re = dv_im = Fraction(0)
        for c in reversed(coeffs):
            dv_re, dv_im = (
                dv_re * re - dv_im * im + pv_re,
                dv_re * im + dv_im * re + pv_im,
            )
            pv_re, pv_im = pv_re * re - pv_im * im + c, pv_re * im + pv_im * re
        if pv_re == 0 and pv_im == 0:
            break
        dmag = dv_re * dv_re + dv_im * dv_im
        if dmag == 0:
            break
        step_re = (pv_re * dv_re + pv_im * dv_im) / dmag
        step_im = (pv_im * dv_re - pv_re * dv_im) / dmag
        re -= step_re
        im -= step_im
    return complex(float(re), float(im))


def _aberth_squarefree(p: RatPoly) -> list[complex]:
    """Roots of a squarefree polynomial with nonzero constant term."""
    deg = int(p.degree)
    coeffs, radius = _scaled_float_coeffs(p)
    dcoeffs = [k * c for k, c in enumerate(coeffs)][1:]
    threshold = (2.0 * deg + 2.0) * _EPS
    # perturbed circle: fixed angular offset plus a small per-index wobble
    z = [
        (0.75 + 0.15 * ((3 * j) % 4) / 4.0)
        * cmath.exp(1j * (2 * math.pi * j / deg + 0.41))
        for j in range(deg)
    ]
    converged = [False] * deg
    for _ in range(_MAX_ITER):
        done = True
        for j in range(deg):
            if converged[j]:
                continue
            zj = z[j]
            azj = abs(zj)
            pv = 0j
            dv = 0j
            err = 0.0
            for c in reversed(coeffs):
                dv = dv * zj + pv
                pv = pv * zj + c
                err = err * azj + abs(c)
            if abs(pv) <= threshold * err:
                # indistinguishable from an exact zero in double precision
                converged[j] = True
                continue
            done = False
            if dv == 0:
                z[j] = zj + 1e-6 + 1e-6j
                continue
            newton = pv / dv
            repel = 0j
            collided = False
            for k in range(deg):
                if k == j:
                    continue
                diff = zj - z[k]
                if diff == 0:
                    collided = True
                    break
                repel += 1.0 / diff
            if collided:
                z[j] = zj + 1e-8 * (1 + j) * (1 + 1j)
                continue
            denom = 1.0 - newton * repel
            z[j] = zj - (newton / denom if denom != 0 else newton)
        if done:
            break
    else:
        raise RootFindingError(
            f"no convergence after {_MAX_ITER} iterations (degree {deg})"
        )
    return [_polish_exact(p, w * radius) for w in z]


def find_roots(p: RatPoly) -> list[complex]:
    """All complex roots of p (degree >= 1), with multiplicity,
    deterministically ordered by (imaginary, real) part."""
    if p.is_zero or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")

    roots: list[complex] = []
    first = 0
    while p.coeffs[first] == 0:
        first += 1
    roots.extend([0j] * first)
    if first:
        p = RatPoly(p.coeffs[first:])

    deg = int(p.degree) if not p.is_zero else 0
    if deg == 1:
        roots.append(complex(Fraction(-p.coeffs[0], p.coeffs[1])))
    elif deg >= 2:
        g = poly_gcd(p, derivative(p))
        if g.degree >= 1:
            squarefree_part, rem = poly_divmod(p, g)
            assert rem.is_zero
            roots.extend(_aberth_squarefree(squarefree_part))
            roots.extend(find_roots(g))
        else:
            roots.extend(_aberth_squarefree(p))
    return sorted(roots, key=lambda w: (w.imag, w.real))


def verify_line(p: RatPoly, a: Fraction | int) -> RootReport:
    """Check that every root of p lies on Re z = a, numerically and exactly."""
    a = Fraction(a)
    roots = tuple(find_roots(p))
    max_dev = max(abs(z.real - float(a)) for z in roots)

    r = shift_argument(p, a)  # r(s) = p(s + a)
    deg = int(r.degree)
    symmetry = all(
        c == 0 for k, c in enumerate(r.coeffs) if (k - deg) % 2
    )
    squarefree = poly_gcd(r, derivative(r)).degree <= 0

    sturm_ok = False
    if symmetry and squarefree:
        # w(u) = i^(-deg) r(iu) has rational coefficients by parity
        w = RatPoly(
            tuple(
                c * (-1) ** ((deg - k) // 2) if (deg - k) % 2 == 0 else Fraction(0)
                for k, c in enumerate(r.coeffs)
            )
        )
        sturm_ok = sturm_count_real_roots(w) == deg
    return RootReport(
        target_real_part=a,
        roots=roots,
        max_deviation=max_dev,
        symmetry_exact=symmetry,
        sturm_exact=sturm_ok,
        squarefree=squarefree,
    )
