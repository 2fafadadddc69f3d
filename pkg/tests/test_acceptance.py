"""End-to-end acceptance ladder.

Each test prints one summary line (visible with ``pytest -s`` or in the
captured output of a failing test) and then asserts the criterion.

ACCEPTANCE 3 is EXPECTED TO FAIL, on purpose: the quasi-polynomial only
counts the modular complement once the modulus clears the hyperplane window,
q >= n(h-1); the prescribed grid includes many smaller moduli, where the two
sides genuinely differ (see test_arrangements.py for hand-checked witnesses
and for the matching sweep inside the agreement regime).  The test states the
criterion literally, reports every mismatching tuple, and fails honestly
rather than shrinking the grid to make itself green.
"""

import json
import random
import time
from fractions import Fraction
from math import gcd

from conftest import ALL_TYPES
from golden_tables import GOLDEN

from linial.arrangements import (
    char_poly,
    char_quasi,
    gcd_prime_polynomial,
    oracle_agreement_bound,
    oracle_count,
    verify_corollary1,
    verify_main_theorem,
    verify_rad_theorem,
)
from linial.cli import main as cli_main
from linial.ehrhart import (
    cross_type_relation_check,
    decompose_ehrhart,
    denumerant_count,
    ehrhart_quasi,
)
from linial.eulerian import (
    eulerian,
    eulerian_congruence_check,
    generalized_congruence_operator,
    generalized_eulerian,
    generalized_eulerian_by_weyl,
)
from linial.quasipoly import (
    OperatorPoly,
    QuasiPoly,
    apply_S,
    apply_Sbar,
    has_gcd_property,
    minimal_period,
    tilde,
)
from linial.ratpoly import (
    RatPoly,
    congruent_mod_power,
    cyclotomic_type,
    divides,
    moment_divisibility,
)
from linial.rootline import verify_line
from linial.rootsystems import catalog

TABLE_ARGS = {
    "E6": "1,2,5",
    "F4": "1,2,5",
    "E7": "1,2,5",
    "E8": "1,2,4,5,9,14,29",
}

REAL_PART_COLUMNS = {
    "E6": [6, 12, 30],
    "F4": [6, 12, 30],
    "E7": [9, 18, 45],
    "E8": [15, 30, 60, 75, 135, 210, 435],
}


def _report(num, name, ok, detail=""):
    tail = f" — {detail}" if detail else ""
    print(f"ACCEPTANCE {num} ({name}): {'PASS' if ok else 'FAIL'}{tail}")


def test_criterion_1_table_reproduction(capsys):
    started = time.monotonic()
    mismatches = []
    for label, n_list in TABLE_ARGS.items():
        code = cli_main(["table", label, "--n-list", n_list, "--format", "json"])
        out = capsys.readouterr().out
        assert code == 0
        doc = json.loads(out)
        for row, (n, ascending) in zip(doc["rows"], GOLDEN[label]):
            assert row["n"] == n
            want = [str(c) for c in reversed(ascending)]
            if row["coeffs"] != want:
                mismatches.append((label, n))
    elapsed = time.monotonic() - started
    ok = not mismatches and elapsed < 120.0
    _report(1, "table reproduction", ok, f"{elapsed:.1f}s for 16 rows")
    assert not mismatches, mismatches
    assert elapsed < 120.0


def test_criterion_2_real_parts():
    worst = 0.0
    bad = []
    for label, columns in REAL_PART_COLUMNS.items():
        info = catalog(label)
        for (n, _), column in zip(GOLDEN[label], columns):
            assert Fraction(n * info.coxeter_h, 2) == column
            rep = verify_line(char_poly(info, n), Fraction(column))
            worst = max(worst, rep.max_deviation)
            if not (
                rep.max_deviation < 1e-8
                and rep.symmetry_exact
                and rep.sturm_exact
                and rep.squarefree
            ):
                bad.append((label, n))
    ok = not bad
    _report(2, "real parts on the line", ok, f"max deviation {worst:.2e}")
    assert ok, bad


def test_criterion_3_oracle_equivalence():
    started = time.monotonic()
    grid = [
        (label, n, q)
        for label in ("A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4")
        for n in (0, 1, 2, 3, 5)
        for q in range(1, 13)
    ] + [("E6", n, q) for n in (1, 2) for q in (5, 7)]
    mismatches = []
    for label, n, q in grid:
        info = catalog(label)
        formula = char_quasi(info, n).eval(q)
        count = oracle_count(info, 1, n, q)
        if formula != count:
            mismatches.append((label, n, q, int(formula), count))
    elapsed = time.monotonic() - started
    assert elapsed < 180.0
    below_bound = all(
        q < oracle_agreement_bound(catalog(label), n)
        for label, n, q, _, _ in mismatches
    )
    _report(
        3,
        "oracle equivalence on the full grid",
        not mismatches,
        f"{len(mismatches)} of {len(grid)} points disagree "
        f"({elapsed:.1f}s); every mismatch has q < n(h-1): {below_bound}",
    )
    if mismatches:
        print("  first mismatches (type, n, q, formula, count):")
        for row in mismatches[:12]:
            print(f"    {row}")
    assert not mismatches, (
        f"{len(mismatches)} grid points disagree; all below the q >= n(h-1) "
        f"agreement threshold: {below_bound}; first: {mismatches[0]}"
    )


def test_criterion_4_ehrhart_equivalence():
    bad = []
    for label in ALL_TYPES:
        info = catalog(label)
        L = ehrhart_quasi(info)
        top = 3 * info.period_rho * (info.rank + 1)
        for q in range(0, top + 1):
            if L.eval(q) != denumerant_count(info, q):
                bad.append((label, q))
                break
    _report(4, "alcove count equivalence", not bad, f"{len(ALL_TYPES)} families")
    assert not bad, bad


def test_criterion_5_identity_suite():
    failures = []

    # classical ascent rows recover the monomial
    for ell in range(1, 9):
        L = ehrhart_quasi(catalog(f"A{ell}"))
        got = apply_S(L, OperatorPoly(eulerian(ell), 1))
        if got != QuasiPoly.from_poly(RatPoly.monomial(ell)):
            failures.append(("worpitzky", ell))

    for label in ALL_TYPES:
        info = catalog(label)
        L = ehrhart_quasi(info)
        h, rho, sign = info.coxeter_h, info.period_rho, (-1) ** info.rank

        # weighted version: R(S) L = t^ell
        got = apply_S(L, OperatorPoly(generalized_eulerian(info), 1))
        if got != QuasiPoly.from_poly(RatPoly.monomial(info.rank)):
            failures.append(("generalized worpitzky", label))

        if any(L.eval(-q) != sign * L.eval(q - h) for q in range(-3 * rho, 3 * rho + 1)):
            failures.append(("duality", label))
        if any(L.eval(-q) != 0 for q in range(1, h)):
            failures.append(("vanishing", label))
        if not has_gcd_property(L):
            failures.append(("gcd-property", label))

        # clearing all the marks lowers to the all-ones family
        operator = [(cyclotomic_type(c), 1) for c in info.marks]
        if not cross_type_relation_check(info, operator, catalog(f"A{info.rank}")):
            failures.append(("mark clearing", label))

        parts = decompose_ehrhart(info)
        total = parts[0][1]
        for _, part in parts[1:]:
            total = total + part
        if total != L:
            failures.append(("decomposition", label))

    # the six fixed rank-lowering relations
    S1 = RatPoly((1, -1))
    fixed = [
        ("C4", [(S1, 2)], "C3", None),
        ("D5", [(S1, 2)], "D4", None),
        ("E7", [(cyclotomic_type(3), 1), (cyclotomic_type(4), 1), (S1, 1)], "E6", None),
        (
            "E8",
            [(cyclotomic_type(2), 2), (cyclotomic_type(5), 1), (cyclotomic_type(6), 1), (S1, 1)],
            "E7",
            None,
        ),
        ("F4", [(cyclotomic_type(2), 1), (cyclotomic_type(4), 1), (S1, 1), (S1, 1)], "G2", None),
        ("E6", [(S1, 1), (S1, 1)], "F4", [(RatPoly((1, 0, 1)), 1)]),
    ]
    for lhs, op, rhs, rop in fixed:
        if not cross_type_relation_check(catalog(lhs), op, catalog(rhs), rop):
            failures.append(("cross-type", lhs, rhs))

    for ell in range(1, 8):
        for n in range(2, 11):
            if not eulerian_congruence_check(ell, n):
                failures.append(("congruence", ell, n))

    for label in ALL_TYPES:
        info = catalog(label)
        for n in range(2, 7):
            lhs, rhs = generalized_congruence_operator(info, n)
            if not congruent_mod_power(lhs, rhs, info.rank + 1):
                failures.append(("generalized congruence", label, n))

    _report(5, "identity suite", not failures, f"{len(ALL_TYPES)} families")
    assert not failures, failures


def test_criterion_6_main_theorem_suite():
    started = time.monotonic()
    failures = []
    prime_cases = 0
    for label in ALL_TYPES:
        info = catalog(label)
        rho, h = info.period_rho, info.coxeter_h
        for n in range(0, 2 * rho + 1):
            if not verify_main_theorem(info, n):
                failures.append(("main", label, n))
            if not verify_corollary1(info, n):
                failures.append(("corollary1", label, n))
            if not verify_rad_theorem(info, n):
                failures.append(("rad", label, n))
            if gcd(n + 1, rho) == 1:
                prime_cases += 1
                f = char_quasi(info, n)
                if minimal_period(f).period != 1:
                    failures.append(("period", label, n))
                p = gcd_prime_polynomial(info, n)
                if p != char_poly(info, n):
                    failures.append(("closed form", label, n))
                rep = verify_line(p, Fraction(n * h, 2))
                certified = rep.sturm_exact or not rep.squarefree
                if not (rep.max_deviation < 1e-8 and rep.symmetry_exact and certified):
                    failures.append(("line", label, n))
    elapsed = time.monotonic() - started
    _report(
        6,
        "main-theorem suite",
        not failures,
        f"{prime_cases} coprime cases, {elapsed:.1f}s",
    )
    assert not failures, failures[:10]


def test_criterion_7_weyl_cross_check():
    labels = [f"A{r}" for r in range(1, 7)]
    labels += ["B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "F4", "G2"]
    bad = [
        label
        for label in labels
        if generalized_eulerian_by_weyl(catalog(label)) != generalized_eulerian(catalog(label))
    ]
    _report(7, "group-statistic cross-check", not bad, f"{len(labels)} groups")
    assert not bad, bad


def _random_quasipoly(rng, max_period=6, max_deg=4):
    n = rng.randint(1, max_period)
    return QuasiPoly(
        n,
        tuple(
            RatPoly(
                tuple(Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(0, max_deg + 1)))
            )
            for _ in range(n)
        ),
    )


def _radical(n):
    rad, d, m = 1, 2, n
    while d * d <= m:
        if m % d == 0:
            rad *= d
            while m % d == 0:
                m //= d
        d += 1
    return rad * (m if m > 1 else 1)


def test_criterion_8_property_families():
    checked = {}

    rng = random.Random(8001)
    for _ in range(220):
        f = _random_quasipoly(rng)
        n = minimal_period(f).period
        k = rng.randint(1, 3 * n + 2)
        assert tilde(f, k) == tilde(f, gcd(k, n))
        assert tilde(f, k) == tilde(f, k + n)
    checked["tilde-gcd"] = 220

    rng = random.Random(8002)
    for _ in range(220):
        f = _random_quasipoly(rng, max_period=5, max_deg=3)
        n = minimal_period(f).period
        ell = int(f.degree) if f.degree != float("-inf") else 0
        m = rng.randint(1, 6)
        c = (n // gcd(m, n)) * rng.randint(1, 3)
        g = RatPoly(tuple(Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))))
        block = cyclotomic_type(c) ** (ell + 1) * g
        lhs = apply_S(f, OperatorPoly(block, m))
        rhs = apply_Sbar(tilde(f, gcd(m, n)), OperatorPoly(block, m))
        for t in range(0, 4 * n + 1):
            assert lhs.eval(t) == rhs.eval(t)
    checked["averaging"] = 220

    rng = random.Random(8003)
    for _ in range(220):
        f = _random_quasipoly(rng, max_period=4)
        g = _random_quasipoly(rng, max_period=4)
        k = rng.randint(1, 8)
        a, b = Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
        assert tilde(f.scale(a) + g.scale(b), k) == tilde(f, k).scale(a) + tilde(g, k).scale(b)
    checked["linearity"] = 220

    rng = random.Random(8004)
    for _ in range(220):
        n = rng.randint(1, 12)
        ell = rng.randint(0, 8)
        base = RatPoly(
            tuple(Fraction(rng.randint(-6, 6)) for _ in range(rng.randint(1, 20)))
        )
        if rng.random() < 0.5:
            g = base * cyclotomic_type(n) ** (ell + 1)
        else:
            g = base
        want, _ = divides(cyclotomic_type(n) ** (ell + 1), g)
        assert moment_divisibility(g, n, ell) == want
    checked["moment-divisibility"] = 220

    rng = random.Random(8005)
    for _ in range(240):
        n = rng.randint(1, 200)
        d = rng.randint(1, 200)
        m = rng.randint(0, n)
        assert gcd(d + m * _radical(n) * gcd(d, n), n) == gcd(d, n)
    checked["shift-arithmetic"] = 240

    ok = all(v >= 200 for v in checked.values())
    _report(8, "randomized property families", ok, str(checked))
    assert ok
