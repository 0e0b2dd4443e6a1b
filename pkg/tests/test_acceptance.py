"""Acceptance suite: one test per headline criterion, each printing a
pass/fail line (run with ``pytest tests/test_acceptance.py -s`` to watch).

Every expected value here is either computed by an independent oracle in
this file, verified against the displayed cofactor expansions, or asserted
at its stated exact tolerance.  Budgets are wall-clock seconds.
"""

import json
import random
import time
from itertools import combinations, product

from formstrength.cli import run
from formstrength.domains import GF, QQ
from formstrength.groebner import (
    Ideal,
    codimension,
    groebner_basis,
    is_regular_sequence_codim,
    is_regular_sequence_direct,
    normal_form,
    spolynomial,
)
import formstrength.groebner as groebner_module
from formstrength.linalg import mat_mul, mat_rank, transpose
from formstrength.minors import GenericMatrix, laplace_strength_bound, maximal_minors
from formstrength.poly import Grading, Poly, Ring
from formstrength.quadratic import (
    DiagonalPair,
    QuadraticForm,
    strength_from_rank,
    verify_minrank_identity,
)
from formstrength.strength import class_ideals, exclusion_matrix, strength_bruteforce_small

from conftest import random_homogeneous, random_poly


def _report(name, ok, elapsed, budget, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"[acceptance] {name}: {status} ({elapsed:.2f}s of {budget}s budget)"
    if detail and not ok:
        line += f" -- {detail}"
    print(line)
    return line


def test_criterion_1_n32_lower(capsys):
    start = time.time()
    t0 = time.time()
    codim = codimension(maximal_minors(GenericMatrix(3, 2, QQ)).ideal())
    gb_elapsed = time.time() - t0
    exit_code = run(["certify", "n32-lower", "--json"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    scan = next(
        v for v in doc["subverdicts"] if v["name"].startswith("all_nonzero_f5")
    )
    elapsed = time.time() - start
    ok = (
        exit_code == 0
        and doc["passed"]
        and codim == 2
        and gb_elapsed < 5.0
        and scan["witness"]["points_checked"] == 124
        and scan["witness"]["rank_histogram"] == {"4": 124}
        and elapsed < 10.0
    )
    with capsys.disabled():
        detail = _report("criterion 1 (N(3,2) >= 2)", ok, elapsed, 10)
    assert ok, detail


def test_criterion_2_n33(capsys):
    start = time.time()
    groebner_module._BASIS_CACHE.clear()

    dom = GF(32003)
    family = maximal_minors(GenericMatrix(4, 3, dom))
    t0 = time.time()
    codim = codimension(Ideal(family.ring, family.minors[:3]))
    gb_elapsed = time.time() - t0

    matrix_q = GenericMatrix(4, 3, QQ)
    family_q = maximal_minors(matrix_q)
    t0 = time.time()
    bounds_ok = all(
        laplace_strength_bound(matrix_q, i).bound == 2 for i in range(1, 5)
    )
    laplace_elapsed = time.time() - t0

    t0 = time.time()
    ideals = class_ideals(family_q.ring)
    reports = {tag: exclusion_matrix(family_q.minors[:3], ideal) for tag, ideal in ideals.items()}
    exclusion_elapsed = time.time() - t0
    # row counts verified against the displayed expansions: the two cases
    # keeping a full cofactor block survive with 10 monomials, the skew case
    # with 11
    rows = {tag: r.row_count() for tag, r in reports.items()}
    kernels_ok = all(r.trivial_kernel for r in reports.values())
    rows_ok = rows == {"parallel-rows": 10, "same-column": 10, "skew": 11}

    exit_code = run(["certify", "n33", "--json"])
    doc = json.loads(capsys.readouterr().out)
    four_minor = next(
        v for v in doc["subverdicts"] if v["name"] == "exclusion_strengthened_four_minor_variant"
    )

    elapsed = time.time() - start
    ok = (
        codim == 2
        and gb_elapsed < 60.0
        and bounds_ok
        and laplace_elapsed < 1.0
        and kernels_ok
        and rows_ok
        and exclusion_elapsed < 1.0
        and exit_code == 0
        and doc["passed"]
        and four_minor["passed"]
    )
    with capsys.disabled():
        detail = _report("criterion 2 (N(3,3) > 2)", ok, elapsed, 62, detail=str(rows))
    assert ok, detail


def test_criterion_3_minrank_codim_identity(capsys):
    start = time.time()
    rng = random.Random(20240503)
    failures = []
    for trial in range(50):
        n = rng.randint(2, 5)
        # the base form must be nondegenerate, so its diagonal avoids 0
        a = [rng.choice([1, 2, 3, 4, 5]) for _ in range(n)]
        b = [rng.randint(-5, 5) for _ in range(n)]
        dp = DiagonalPair(a, b)
        report = verify_minrank_identity(dp, prime=101)
        lam_max = max(dp.lambdas)
        if not (
            report.passed
            and report.jacobian_codim == n - lam_max
            and report.bruteforce_value == n - lam_max
            and report.intersection_matches
        ):
            failures.append((a, b, report.to_dict()))
    elapsed = time.time() - start
    ok = not failures and elapsed < 120.0
    with capsys.disabled():
        detail = _report(
            "criterion 3 (minrank = codim identity, 50 pairs)",
            ok,
            elapsed,
            120,
            detail=str(failures[:1]),
        )
    assert ok, detail


def test_criterion_4_rank_strength_law_over_f3(capsys):
    # the closed-field law strength = ceil(rank/2) - 1, asserted verbatim
    # against the definitional search over F_3 on all diagonal
    # representatives and 500 random forms
    start = time.time()
    ring = Ring.flat(4, GF(3))
    rng = random.Random(20240504)
    checked = 0
    counterexample = None

    def check(f):
        nonlocal checked, counterexample
        checked += 1
        k = QuadraticForm.from_poly(f).rank()
        formula = strength_from_rank(k)
        brute = strength_bruteforce_small(f, s_max=2)
        if brute != formula and counterexample is None:
            counterexample = {
                "form": str(f),
                "rank": k,
                "formula_strength": formula,
                "bruteforce_strength": brute,
            }

    for diag in product(range(3), repeat=4):
        terms = {
            tuple(2 if k == i else 0 for k in range(4)): ring.domain.from_int(c)
            for i, c in enumerate(diag)
            if c
        }
        check(Poly(ring, terms))
    for _ in range(500):
        check(random_homogeneous(rng, ring, 2, max_terms=6))

    elapsed = time.time() - start
    ok = counterexample is None and elapsed < 300.0
    with capsys.disabled():
        detail = _report(
            f"criterion 4 (rank-strength law, {checked} forms over F_3)",
            ok,
            elapsed,
            300,
            detail=str(counterexample),
        )
    assert ok, detail


def test_criterion_4_witt_corrected_law_over_f3(capsys):
    # companion check: over F_3 the brute-force strength equals the
    # closed-field formula on every odd-rank form, and exceeds it by exactly
    # one on even-rank forms whose anisotropic part is binary; exhaustive
    # over all 3^10 quadrics in 4 variables
    start = time.time()
    ring = Ring.flat(4, GF(3))
    monos = [
        tuple(2 if k == i else 0 for k in range(4)) for i in range(4)
    ] + [
        tuple(1 if k in (i, j) else 0 for k in range(4))
        for i, j in combinations(range(4), 2)
    ]
    bad = None
    split_mismatch = 0
    total = 0
    for coeffs in product(range(3), repeat=10):
        terms = {m: c for m, c in zip(monos, coeffs) if c}
        f = Poly(ring, terms, _clean=False)
        total += 1
        k = QuadraticForm.from_poly(f).rank()
        formula = strength_from_rank(k)
        brute = strength_bruteforce_small(f, s_max=2)
        if k % 2 == 1 or k == 0:
            if brute != formula and bad is None:
                bad = (terms, k, formula, brute)
        else:
            if brute not in (formula, formula + 1) and bad is None:
                bad = (terms, k, formula, brute)
            if brute != formula:
                split_mismatch += 1
    elapsed = time.time() - start
    ok = bad is None and total == 3**10 and split_mismatch > 0 and elapsed < 300.0
    with capsys.disabled():
        detail = _report(
            f"criterion 4-companion (Witt-corrected law, {total} forms, "
            f"{split_mismatch} non-split deviations)",
            ok,
            elapsed,
            300,
            detail=str(bad),
        )
    assert ok, detail


def test_criterion_5_regular_sequence_oracle_equivalence(capsys):
    start = time.time()
    rng = random.Random(20240505)
    disagreements = []
    for _ in range(100):
        n = rng.randint(2, 4)
        ring = Ring.flat(n, GF(7))
        fs = [
            random_homogeneous(rng, ring, rng.randint(1, 2))
            for _ in range(rng.randint(1, min(3, n)))
        ]
        via_codim = is_regular_sequence_codim(fs)
        via_quotients = is_regular_sequence_direct(fs)
        if via_codim != via_quotients:
            disagreements.append([str(f) for f in fs])

    # named systems
    ring3 = Ring.flat(3, GF(7))
    named = []
    named.append(([ring3.var(0), ring3.var(1), ring3.var(2)], True))
    ring2 = Ring.flat(2, GF(7))
    x, y = ring2.gens()
    named.append(([x, x * y], False))
    fam32 = maximal_minors(GenericMatrix(3, 2, GF(7)))
    named.append((fam32.minors, False))
    fam43 = maximal_minors(GenericMatrix(4, 3, GF(7)))
    named.append((fam43.minors[:3], False))
    for fs, expected in named:
        via_codim = is_regular_sequence_codim(fs)
        via_quotients = is_regular_sequence_direct(fs)
        if not (via_codim == via_quotients == expected):
            disagreements.append([str(f) for f in fs])

    elapsed = time.time() - start
    ok = not disagreements and elapsed < 300.0
    with capsys.disabled():
        detail = _report(
            "criterion 5 (quotient test == codim test, 100 systems + named)",
            ok,
            elapsed,
            300,
            detail=str(disagreements[:1]),
        )
    assert ok, detail


def test_criterion_6_small_r_certificate(capsys):
    start = time.time()
    exit_code = run(["certify", "small-r", "--json"])
    doc = json.loads(capsys.readouterr().out)
    agree = next(
        v for v in doc["subverdicts"] if v["name"] == "gcd_and_codimension_verdicts_agree"
    )
    elapsed = time.time() - start
    ok = (
        exit_code == 0
        and doc["passed"]
        and agree["passed"]
        and agree["witness"]["pairs_checked"] >= 200
        and elapsed < 120.0
    )
    with capsys.disabled():
        detail = _report("criterion 6 (gcd criterion certificate)", ok, elapsed, 120)
    assert ok, detail


def test_criterion_7_hilbert_burch_confirmation(capsys):
    start = time.time()
    groebner_module._BASIS_CACHE.clear()
    results = {}
    for label, rows, cols, dom in (
        ("3x2/q", 3, 2, QQ),
        ("3x2/fp32003", 3, 2, GF(32003)),
        ("4x3/fp32003", 4, 3, GF(32003)),
    ):
        family = maximal_minors(GenericMatrix(rows, cols, dom))
        results[label] = codimension(family.ideal())
    elapsed = time.time() - start
    ok = all(v == 2 for v in results.values()) and elapsed < 90.0
    with capsys.disabled():
        detail = _report(
            "criterion 7 (maximal-minor ideals have codim 2)", ok, elapsed, 90, detail=str(results)
        )
    assert ok, detail


def test_criterion_8_property_suites(capsys):
    start = time.time()
    rng = random.Random(20240508)
    failures = []

    # (a) S-polynomial certificates on random bases
    for _ in range(10):
        n = rng.randint(2, 3)
        ring = Ring.flat(n, GF(7))
        gens = [random_poly(rng, ring, max_degree=2) for _ in range(rng.randint(2, 3))]
        basis = groebner_basis(gens)
        for f, g in combinations(basis.elements, 2):
            if not normal_form(spolynomial(f, g), basis).is_zero():
                failures.append(("spoly", [str(x) for x in (f, g)]))

    # (b) component-sum reconstruction in the column grading
    ring = Ring.matrix(4, 3, GF(7))
    grading = Grading.by_columns(ring)
    for _ in range(25):
        f = random_poly(rng, ring, max_degree=3, max_terms=6)
        total = ring.zero()
        for d in f.multidegree_support(grading):
            total = total + f.component(grading, d)
        if total != f:
            failures.append(("component-sum", str(f)))

    # (c) congruence invariance of rank
    dom = GF(11)
    qring = Ring.flat(4, dom)
    for _ in range(5):
        raw = [[dom.from_int(rng.randrange(11)) for _ in range(4)] for _ in range(4)]
        gram = [[dom.add(raw[i][j], raw[j][i]) for j in range(4)] for i in range(4)]
        base = QuadraticForm(qring, gram).rank()
        for _ in range(20):
            while True:
                t = [[dom.from_int(rng.randrange(11)) for _ in range(4)] for _ in range(4)]
                if mat_rank(t, dom) == 4:
                    break
            moved = mat_mul(mat_mul(transpose(t), gram, dom), t, dom)
            if QuadraticForm(qring, moved).rank() != base:
                failures.append(("congruence-rank", gram))

    # (d) exclusion-kernel invariance under family re-mixing
    family = maximal_minors(GenericMatrix(4, 3, QQ))
    triple = family.minors[:3]
    ideals = list(class_ideals(family.ring).values())
    for _ in range(5):
        while True:
            t = [[QQ(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            if mat_rank(t, QQ) == 3:
                break
        mixed = []
        for row in t:
            combo = family.ring.zero()
            for c, f in zip(row, triple):
                combo = combo + f.scale(c)
            mixed.append(combo)
        for ideal in ideals:
            if not exclusion_matrix(mixed, ideal).trivial_kernel:
                failures.append(("exclusion-remix", str(t)))

    elapsed = time.time() - start
    ok = not failures and elapsed < 300.0
    with capsys.disabled():
        detail = _report(
            "criterion 8 (seeded property suites)", ok, elapsed, 300, detail=str(failures[:1])
        )
    assert ok, detail
