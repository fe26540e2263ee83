"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are also repeated in the terminal summary.  Running this file directly
with ``python`` prints the lines without pytest.
"""

import sys
import time

import numpy as np

from twistkit import homology as hom
from twistkit.artin import artin_generator, braid_equal, evaluate
from twistkit.braid import BraidWord
from twistkit.cli import main as cli_main
from twistkit.fpgroup import AbelianGroup, abelianization, vanishing_cycle_classes
from twistkit.invariants import (
    EIGHTH_CLASS,
    SYMPLECTIC_B2PLUS,
    SYMPLECTIC_PARITY,
    endo_signature,
    invariant_report,
    is_positive_definite,
    matrix_A,
    monodromy_data,
)
from twistkit.snf import det, smith_normal_form
from twistkit.words import Word

RESULTS = []


def record(number, title, problems, elapsed, limit=None):
    if limit is not None and elapsed >= limit:
        problems = problems + [f"took {elapsed:.2f}s, limit {limit}s"]
    status = "PASS" if not problems else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s)"
    if problems:
        line += " -- " + "; ".join(problems[:6])
        if len(problems) > 6:
            line += f"; ... {len(problems) - 6} more"
    RESULTS.append(line)
    print(line)
    assert not problems, line


def _silent_cli(*argv):
    import io
    out = io.StringIO()
    return cli_main(list(argv), out), out.getvalue()


def test_criterion_1_main_braid_relation():
    t0 = time.perf_counter()
    code, text = _silent_cli("verify", "T3", "--genus-range", "0..5")
    problems = [] if code == 0 else [f"exit {code}: {text.strip().splitlines()[-1]}"]
    from twistkit.braid import theorem3_sides, beta, half_twist
    lhs, rhs = theorem3_sides(0)
    base = beta(0) * BraidWord(2, Word([1]))
    if not (braid_equal(lhs, base) and braid_equal(rhs, half_twist(0))):
        problems.append("g=0 does not reduce to the base case")
    record(1, "main braid relation, g = 0..5", problems, time.perf_counter() - t0, 60)


def test_criterion_2_lemmas():
    t0 = time.perf_counter()
    code, text = _silent_cli("verify", "L1a", "L1b", "L1c", "L1d", "L2a", "L2b", "L3",
                             "--genus-range", "1..5", "--json")
    import json
    reports = json.loads(text)
    problems = [f"{r['claim']} g={r['genus']}: {r['status']}" for r in reports
                if r["status"] != "verified"]
    if code != 0 or len(reports) != 35:
        problems.append(f"exit {code}, {len(reports)} reports")
    record(2, "lemma suite, exhaustive over parameters, g = 1..5", problems,
           time.perf_counter() - t0, 60)


def test_criterion_3_relation_word_on_homology():
    t0 = time.perf_counter()
    problems = []
    for g in range(2, 9):
        M = hom.evaluate_twistword(hom.relation_word(g))
        if not (M == hom.identity(g)).all():
            problems.append(f"W != I at g={g}")
        J = hom.hyperelliptic_matrix(g)
        if (J == hom.identity(g)).all() or (M == J).all():
            problems.append(f"-I not separated from W at g={g}")
    record(3, "W acts trivially on H_1 and differs from -I, g = 2..8", problems,
           time.perf_counter() - t0, 5)


def test_criterion_4_chain_relation_shadows():
    t0 = time.perf_counter()
    problems = []
    for g in (2, 4, 6, 8):
        M = hom.evaluate_twistword(hom.chain_power_word(g, g, 2 * (g + 1)))
        if not (M == hom.identity(g)).all():
            problems.append(f"even chain power != I at g={g}")
    for g in (3, 5, 7):
        try:
            alpha, beta = hom.chain_boundary_classes(g)
            M = hom.evaluate_twistword(hom.chain_power_word(g, g, g + 1))
            if not (hom.transvection(alpha, 1).dot(hom.transvection(beta, 1)) == M).all():
                problems.append(f"reconstruction fails at g={g}")
        except hom.ChainBoundaryError as exc:
            problems.append(f"g={g}: {exc}")
    record(4, "chain relation shadows, even g = 2..8 and odd g = 3, 5, 7", problems,
           time.perf_counter() - t0)


def test_criterion_5_h1_of_fiber_sums():
    t0 = time.perf_counter()
    problems = []
    for g in range(2, 7):
        per_copy = 2 * g + 4 if g % 2 == 0 else 2 * g + 10
        for n in range(1, 11):
            classes = vanishing_cycle_classes(g, n)
            if len(classes) != g * per_copy:
                problems.append(f"g={g} n={n}: {len(classes)} cycles, expected {g * per_copy}")
            h1 = abelianization(classes, g)
            if h1 != AbelianGroup(1, (n,)):
                problems.append(f"g={g} n={n}: H_1 = {h1}")
    record(5, "H_1(X_n) = Z + Z_n for g = 2..6, n = 1..10", problems,
           time.perf_counter() - t0, 30)


def test_criterion_6_even_genus_invariants():
    t0 = time.perf_counter()
    problems = []
    for g in (2, 4, 6, 8):
        r = invariant_report(g)
        got = (str(abelianization(vanishing_cycle_classes(g), g)), r.chi, r.sigma, r.b2plus)
        want = (str(AbelianGroup(g)), 8 - 2 * g, -4, 1)
        if got != want:
            problems.append(f"g={g}: {got} != {want}")
        d = monodromy_data(g)
        if (d.m, d.s) != (2 * g + 2, {g // 2: 2}) or endo_signature(d) != -4:
            problems.append(f"g={g}: signature inputs {d}")
    record(6, "even genus H_1, chi, sigma, b2+, g = 2..8", problems, time.perf_counter() - t0)


def test_criterion_7_odd_genus_invariants():
    t0 = time.perf_counter()
    problems = []
    pd = is_positive_definite(matrix_A())
    if not pd.positive or len(pd.minors) != 7:
        problems.append(f"A minors {pd.minors}")
    for g in (3, 5, 7, 9):
        r = invariant_report(g)
        h1 = abelianization(vanishing_cycle_classes(g), g)
        if h1 != AbelianGroup(g - 1) or r.chi != 14 - 2 * g or r.b2 != 10:
            problems.append(f"g={g}: H_1 {h1}, chi {r.chi}, b2 {r.b2}")
        if (r.sigma, r.b2minus, r.b2plus) != (-8, 9, 1):
            problems.append(f"g={g}: sigma {r.sigma}, b2- {r.b2minus}, b2+ {r.b2plus}")
        if set(r.premises) != {SYMPLECTIC_PARITY, SYMPLECTIC_B2PLUS, EIGHTH_CLASS}:
            problems.append(f"g={g}: premises {r.premises}")
    record(7, "odd genus H_1, chi, b2 and the signature deduction, g = 3..9", problems,
           time.perf_counter() - t0)


def _group_axioms(rng, problems):
    def rand_word():
        k = int(rng.integers(0, 25))
        return Word([int(x) * int(s) for x, s in zip(rng.integers(1, 6, k), rng.choice([-1, 1], k))])
    for _ in range(300):
        u, v, w = rand_word(), rand_word(), rand_word()
        if (u * v) * w != u * (v * w) or not (u * ~u).is_identity() or u * Word.identity() != u:
            problems.append(f"group axioms fail at {u}, {v}, {w}")
            return


def _artin(rng, problems):
    n = 6
    def rand_braid():
        k = int(rng.integers(0, 15))
        return BraidWord(n, Word([int(x) * int(s) for x, s in
                                  zip(rng.integers(1, n, k), rng.choice([-1, 1], k))]))
    for _ in range(200):
        u, v = rand_braid(), rand_braid()
        if evaluate(u * v) != evaluate(u) * evaluate(v):
            problems.append(f"Artin homomorphism fails at {u}, {v}")
            return
    for i in range(1, n - 1):
        a, b = artin_generator(n, i), artin_generator(n, i + 1)
        if a * b * a != b * a * b:
            problems.append(f"braid relation fails at sigma_{i}")
    for i in range(1, n):
        for j in range(i + 2, n):
            if artin_generator(n, i) * artin_generator(n, j) != artin_generator(n, j) * artin_generator(n, i):
                problems.append(f"far commutation fails at {i}, {j}")


def _symplectic(problems):
    for g in range(1, 9):
        words = [hom.hyperelliptic_word(g), hom.chain_power_word(g, 2 * g + 1, 2)]
        if g >= 2:
            words.append(hom.relation_word(g))
        words += [hom.TwistWord(g, ((f"A{i}", 1),)) for i in range(1, 2 * g + 2)]
        words += [hom.TwistWord(g, ((f"B{k}", -1),)) for k in range(0, g + 1)]
        for w in words:
            if not hom.is_symplectic(hom.evaluate_twistword(w)):
                problems.append(f"non-symplectic matrix from {w}")
        for i in range(1, 2 * g + 2):
            for j in range(i + 1, 2 * g + 2):
                x = hom.intersection(hom.chain_class(g, i), hom.chain_class(g, j))
                if (abs(x) != 1) if j == i + 1 else (x != 0):
                    problems.append(f"chain pattern fails at g={g}, ({i}, {j})")


def _snf(rng, problems):
    for _ in range(1000):
        r, c = (int(x) for x in rng.integers(1, 13, 2))
        M = rng.integers(-20, 21, (r, c)).astype(object)
        D, U, V = smith_normal_form(M)
        d = [D[i, i] for i in range(min(r, c))]
        off = D.copy()
        for i in range(min(r, c)):
            off[i, i] = 0
        chain_ok = all((y == 0) if x == 0 else y % x == 0 for x, y in zip(d, d[1:]))
        if (not (U.dot(M).dot(V) == D).all() or abs(det(U)) != 1 or abs(det(V)) != 1
                or (off != 0).any() or not chain_ok or any(x < 0 for x in d)):
            problems.append(f"SNF identities fail on a {r}x{c} matrix")
            return


def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240801)
    problems = []
    _group_axioms(rng, problems)
    _artin(rng, problems)
    _symplectic(problems)
    _snf(rng, problems)
    record(8, "property suites incl. SNF on 1000 random matrices up to 12x12", problems,
           time.perf_counter() - t0)


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
