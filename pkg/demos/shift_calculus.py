"""A guided tour of the shift-operator calculus.

Everything in this package is built from one move: feeding a polynomial in
the shift operator S (where (S f)(t) = f(t - 1)) to a quasi-polynomial.
This script walks through the basic identities on small examples, printing
each step, so you can see the machinery before pointing it at the
exceptional types.

Run:  python3 demos/shift_calculus.py
"""

from fractions import Fraction
from math import comb

from linial.ehrhart import ehrhart_quasi
from linial.eulerian import eulerian, generalized_eulerian
from linial.quasipoly import OperatorPoly, QuasiPoly, apply_S, tilde
from linial.ratpoly import RatPoly, render_poly
from linial.rootsystems import catalog


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("1. Ascent polynomials and the binomial identity")

# The classical row for ell = 3: coefficients count permutations of
# {1,2,3} by ascents (shifted by one).
A3 = eulerian(3)
print("R_3(t) =", render_poly(A3))
print("Check t^3 = sum_k a_k * C(t + 3 - k, 3) at t = 0..6:")
for t in range(7):
    rhs = sum(c * comb(t + 3 - k, 3) for k, c in enumerate(A3.coeffs))
    print(f"  t={t}:  t^3 = {t ** 3},  sum = {rhs}")

banner("2. The same identity as an operator equation")

# C(t + 3, 3) is the lattice-point count of the dilated fundamental alcove
# for the rank-3 'all coefficients 1' family, so the identity above says
# R_3(S) applied to that count gives back t^3 exactly.
L = ehrhart_quasi(catalog("A3"))
result = apply_S(L, OperatorPoly(A3, stride=1))
print("R_3(S) L_A3 =", render_poly(result.constituents[0]), "(period", result.period, ")")
assert result == QuasiPoly.from_poly(RatPoly.monomial(3))

banner("3. The weighted analogue for a multiply-laced type")

info = catalog("G2")
R = generalized_eulerian(info)
print("G2 weighted ascent polynomial:", render_poly(R))
print("degree = h - 1 =", info.coxeter_h - 1, "| R(1) = |W| =", R(1))
LG = ehrhart_quasi(info)
print("L_G2 has period", LG.period, "with constituents:")
for r, c in enumerate(LG.constituents):
    print(f"  t = {r} mod {LG.period}:  {render_poly(c)}")
assert apply_S(LG, OperatorPoly(R, stride=1)) == QuasiPoly.from_poly(RatPoly.monomial(2))
print("R_G2(S) L_G2 = t^2  -- checked exactly.")

banner("4. Averaging: the tilde operation")

# tilde(f, k) replaces each residue class by the average of the classes in
# its orbit under stepping by k.  It is what makes strided operators
# (polynomials in S^m) interact cleanly with the period.
f = QuasiPoly(2, (RatPoly((Fraction(0),)), RatPoly((Fraction(1),))))  # 0,1,0,1,...


def row(g):
    return "  ".join(str(g.eval(t)) for t in range(6))


print("f on t = 0..5:        ", row(f))
print("tilde(f, 2) on 0..5:  ", row(tilde(f, 2)), "(orbits of step 2 mod 2 are trivial)")
print("tilde(f, 1) on 0..5:  ", row(tilde(f, 1)), "(full average)")

print()
print("All identities above were verified exactly over the rationals.")
