"""Exact univariate polynomial arithmetic over the rationals.

Dense representation: a polynomial is a tuple of ``fractions.Fraction``
coefficients indexed by the power of ``t`` (lowest degree first), with no
trailing zeros.  The zero polynomial is the empty tuple and has degree
``-inf``.  Everything in this module is exact; no floats anywhere.

Besides the ring operations this module provides the small amount of
special-purpose machinery the rest of the package leans on:

* ``cyclotomic_type(c)`` builds ``[c]_t = 1 + t + ... + t^(c-1)``,
* exact division / congruence predicates,
* the residue-class moment test that characterises divisibility by
  ``[n]_t^(l+1)``,
* exact Sturm chains for counting real roots of squarefree polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "RatPoly",
    "X",
    "cyclotomic_type",
    "shift_argument",
    "compose_power",
    "poly_divmod",
    "divides",
    "poly_gcd",
    "derivative",
    "congruent_mod_power",
    "moment_divisibility",
    "residue_split",
    "sturm_count_real_roots",
    "render_poly",
]

NEG_INF = float("-inf")


class RatPoly:
    """Immutable dense polynomial with big-rational coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RatPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: Fraction | int = 1) -> "RatPoly":
        """Return ``c * t^k``."""
        return cls((0,) * k + (c,))

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of ``t^k`` (zero when out of range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPoly(out)

    def scale(self, c: Fraction | int) -> "RatPoly":
        c = Fraction(c)
        return RatPoly(tuple(c * a for a in self.coeffs))

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative power")
        out = RatPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, t: Fraction | int) -> Fraction:
        """Evaluate by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- comparisons / misc -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({render_poly(self)})"


#: The variable ``t`` itself, for building polynomials expression-style.
X = RatPoly((0, 1))


def cyclotomic_type(c: int) -> RatPoly:
    """Return ``[c]_t = 1 + t + ... + t^(c-1)``; ``[0]_t = 0``."""
    if c < 0:
        raise ValueError("negative block size")
    return RatPoly((1,) * c)


def shift_argument(p: RatPoly, a: Fraction | int) -> RatPoly:
    """Return the Taylor shift ``p(t + a)``, exactly."""
    a = Fraction(a)
    if a == 0 or p.is_zero:
        return p
    # Horner: start with leading coeff, repeatedly multiply by (t + a).
    out: list[Fraction] = []
    for c in reversed(p.coeffs):
        # out <- out * (t + a) + c
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i + 1] += v
            nxt[i] += a * v
        nxt[0] += c
        out = nxt
    return RatPoly(out)


def compose_power(p: RatPoly, m: int) -> RatPoly:
    """Return ``p(t^m)`` for ``m >= 1``."""
    if m < 1:
        raise ValueError("power substitution needs m >= 1")
    if m == 1 or p.is_zero:
        return p
    out = [Fraction(0)] * ((len(p.coeffs) - 1) * m + 1)
    for i, c in enumerate(p.coeffs):
        out[i * m] = c
    return RatPoly(out)


def poly_divmod(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Exact division with remainder: ``f = q*g + r`` with deg r < deg g."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lead = g.coeffs[-1]
    q = [Fraction(0)] * max(len(rem) - dg, 0)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        factor = c / lead
        q[i - dg] = factor
        for j, gc in enumerate(g.coeffs):
            rem[i - dg + j] -= factor * gc
    return RatPoly(q), RatPoly(rem)


def divides(d: RatPoly, g: RatPoly) -> tuple[bool, RatPoly | None]:
    """Whether ``d`` divides ``g`` exactly; quotient returned on success."""
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = poly_divmod(g, d)
    if r.is_zero:
        return True, q
    return False, None


def poly_gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd over Q (a nonzero constant gcd is returned as 1)."""
    a, b = f, g
    while not b.is_zero:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero:
        return a
    return a.scale(1 / a.leading)


def derivative(p: RatPoly) -> RatPoly:
    return RatPoly(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def congruent_mod_power(g1: RatPoly, g2: RatPoly, k: int) -> bool:
    """True iff ``(1 - t)^k`` divides ``g1 - g2``."""
    if k < 1:
        raise ValueError("k must be positive")
    diff = g1 - g2
    # (1-t)^k | diff  <=>  diff and its first k-1 derivatives vanish at t=1.
    for _ in range(k):
        if diff(1) != 0:
            return False
        diff = derivative(diff)
    return True


def moment_divisibility(g: RatPoly, n: int, ell: int) -> bool:
    """Residue-class moment test for divisibility by ``[n]_t^(ell+1)``.

    True iff, for every r in 0..ell, the moment sum
    ``sum_{k = j mod n} a_k * k^r`` does not depend on the class j.
    Agrees with exact division by ``[n]_t^(ell+1)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    for r in range(ell + 1):
        sums = [Fraction(0)] * n
        for k, a in enumerate(g.coeffs):
            if a != 0:
                sums[k % n] += a * k**r
        if any(s != sums[0] for s in sums[1:]):
            return False
    return True


def residue_split(g: RatPoly, n: int) -> list[RatPoly]:
    """Split ``g`` into its n residue-class pieces; piece j holds the
    monomials with exponent = j (mod n).  Pieces sum back to ``g``."""
    if n < 1:
        raise ValueError("n must be positive")
    pieces: list[list[Fraction]] = [[Fraction(0)] * len(g.coeffs) for _ in range(n)]
    for k, a in enumerate(g.coeffs):
        pieces[k % n][k] = a
    return [RatPoly(p) for p in pieces]


# ---------------------------------------------------------------------------
# Sturm chains


def _primitive_int_coeffs(p: RatPoly) -> list[int]:
    """Scale by a positive rational to primitive integer coefficients."""
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _sign_at_inf(coeffs: Sequence[int], positive: bool) -> int:
    lead = coeffs[-1]
    if positive:
        return 1 if lead > 0 else -1
    return (1 if lead > 0 else -1) * (1 if (len(coeffs) - 1) % 2 == 0 else -1)


def sturm_count_real_roots(p: RatPoly) -> int:
    """Number of distinct real roots of a squarefree ``p``, by exact Sturm
    chains over (-inf, +inf).

    Coefficient growth in the chain is tamed by stripping each remainder to
    a primitive integer polynomial (a positive rescale, which leaves the
    chain's sign variations untouched).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0
    if poly_gcd(p, derivative(p)).degree > 0:
        raise ValueError("polynomial is not squarefree")

    chain: list[list[int]] = [_primitive_int_coeffs(p)]
    d = derivative(p)
    if not d.is_zero:
        chain.append(_primitive_int_coeffs(d))
        while True:
            f = RatPoly(chain[-2])
            g = RatPoly(chain[-1])
            _, r = poly_divmod(f, g)
            if r.is_zero:
                break
            chain.append(_primitive_int_coeffs(-r))
            if len(chain[-1]) == 1:
                break

    def variations(positive: bool) -> int:
        signs = [_sign_at_inf(c, positive) for c in chain]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(False) - variations(True)


# ---------------------------------------------------------------------------
# Rendering


def render_poly(p: RatPoly, var: str = "t") -> str:
    """Human-readable form, descending powers: ``t^2 - 3t + 3``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mag = "" if a == 1 else str(a)
            body = f"{mag}{var}" if k == 1 else f"{mag}{var}^{k}"
        parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
    return " ".join(parts)
