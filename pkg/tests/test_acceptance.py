"""Acceptance gate: one pass/fail line per criterion.

Every equality is exact rational arithmetic; there are no tolerances
anywhere.  Run with -s to see the per-criterion report lines.
"""

import random
import time
from fractions import Fraction

from liftbank.cli import haar_cascade_plain, haar_cascade_scaled, identity_cascade, main
from liftbank.errors import DCZero
from liftbank.factor import (dc_normalize, equivalent_mod_rescaling,
                             factor_euclidean, factor_hs, factor_ws)
from liftbank.glstructure import (S_H, S_W, cascade_in_structure,
                                  check_order_increasing, d_invariance_check,
                                  ws_radii)
from liftbank.laurent import LaurentPoly
from liftbank.lifting import (IDENTITY, LiftingStep, normalize_semidirect,
                              scaling_matrix, word_concat)
from liftbank.polyphase import PolyphaseMatrix, classify_bank, haar_bank
from liftbank.randgen import (rand_admissible_step, rand_dyadic_ws_cascade,
                              rand_hs_cascade, rand_hs_concentric_bank,
                              rand_int_signal, rand_poly, rand_word,
                              rand_ws_cascade)
from liftbank.transform import (_int_split, _rounded_update,
                                reversible_analysis, reversible_synthesis)

F = Fraction


def report(num, name, ok):
    print(f"criterion {num:02d} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


def best_time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_01_haar_reproduction(capsys):
    target = haar_bank()
    ok = (haar_cascade_scaled().product() == target
          and haar_cascade_plain().product() == target)
    ok = ok and target == PolyphaseMatrix.from_entries(F(1, 2), F(1, 2), -1, 1)
    ok = ok and main(["demo", "haar"]) == 0
    elapsed = best_time(lambda: (haar_cascade_scaled().product(),
                                 haar_cascade_plain().product()))
    ok = ok and elapsed < 0.001
    capsys.readouterr()
    with capsys.disabled():
        report(1, "Haar reproduction", ok)


def test_criterion_02_identity_lifting(capsys):
    c = identity_cascade()
    ok = len(c) == 8 and c.product() == IDENTITY
    increasing, orders = check_order_increasing(c)
    ok = ok and not increasing and orders[-1] == 0
    elapsed = best_time(lambda: c.product())
    ok = ok and elapsed < 0.001
    capsys.readouterr()
    with capsys.disabled():
        report(2, "identity lifting", ok)


WS_CASCADES = []


def test_criterion_03_ws_unique_round_trip(capsys):
    rng = random.Random(303)
    t0 = time.perf_counter()
    ok = True
    for _ in range(1000):
        gen = rand_ws_cascade(rng)
        WS_CASCADES.append(gen)
        recovered = factor_ws(gen.product())
        if (recovered.scale != gen.scale or len(recovered) != len(gen)
                or recovered.steps != gen.steps
                or recovered.base != IDENTITY):
            ok = False
            break
    ok = ok and time.perf_counter() - t0 < 60
    with capsys.disabled():
        report(3, "WS unique factorization round trip", ok)


HS_CASCADES = []


def test_criterion_04_hs_round_trip_mod_rescaling(capsys):
    rng = random.Random(404)
    t0 = time.perf_counter()
    ok = True
    count = 0
    while count < 1000:
        gen = rand_hs_cascade(rng)
        if gen.base.scalar_filter(0)(1) == 0:
            continue  # DC normalization undefined; redraw
        count += 1
        HS_CASCADES.append(gen)
        h = gen.product()
        recovered = factor_hs(h)
        if recovered.product() != h:
            ok = False
            break
        if equivalent_mod_rescaling(recovered, gen) is None:
            ok = False
            break
        if factor_hs(h, normalize_dc=True) != dc_normalize(gen):
            ok = False
            break
    ok = ok and time.perf_counter() - t0 < 60
    with capsys.disabled():
        report(4, "HS round trip modulo rescaling", ok)


def test_criterion_05_order_increase_and_radii(capsys):
    ok = bool(WS_CASCADES) and bool(HS_CASCADES)
    for gen in WS_CASCADES:
        increasing, _ = check_order_increasing(gen)
        if not increasing or not ws_radii(gen).ok:
            ok = False
            break
    if ok:
        for gen in HS_CASCADES:
            if len(gen) and not check_order_increasing(gen)[0]:
                ok = False
                break
    with capsys.disabled():
        report(5, "order increase and radius recursion", ok)


def test_criterion_06_right_lift_obstruction(capsys):
    rng = random.Random(606)
    exceptions = 0
    for _ in range(500):
        h = rand_hs_concentric_bank(rng)
        s = rand_admissible_step(rng, S_H)
        if classify_bank(h @ s.matrix()).kind == "HS_CONCENTRIC":
            exceptions += 1
    with capsys.disabled():
        report(6, "right-lift obstruction", exceptions == 0)


def test_criterion_07_group_axioms(capsys):
    rng = random.Random(707)
    ok = True
    for _ in range(500):
        w1, w2, w3 = rand_word(rng), rand_word(rng), rand_word(rng)
        if word_concat(word_concat(w1, w2), w3) != word_concat(w1, word_concat(w2, w3)):
            ok = False
            break
        if not word_concat(w1, w1.inverse()).is_empty():
            ok = False
            break
        if word_concat(w1, w2).matrix() != w1.matrix() @ w2.matrix():
            ok = False
            break
    if ok:
        for _ in range(500):
            word, ref = [], IDENTITY
            for _ in range(rng.randint(0, 7)):
                if rng.random() < 0.3:
                    k = F(rng.choice([1, -1]) * rng.randint(1, 5), rng.randint(1, 5))
                    word.append(k)
                    ref = ref @ scaling_matrix(k)
                else:
                    s = LiftingStep(rng.randint(0, 1), rand_poly(rng, -1, 1))
                    word.append(s)
                    ref = ref @ s.matrix()
            out = normalize_semidirect(word)
            if out.product() != ref:
                ok = False
                break
            again = normalize_semidirect([out.scale] + list(reversed(out.steps)))
            if again != out:
                ok = False
                break
    with capsys.disabled():
        report(7, "free product and semidirect normal form", ok)


def test_criterion_08_d_invariance(capsys):
    ok = (d_invariance_check(S_W, trials=64, seed=808) is True
          and d_invariance_check(S_H, trials=64, seed=808) is True)
    with capsys.disabled():
        report(8, "scaling invariance of step groups", ok)


def test_criterion_09_nonuniqueness_exhibit(capsys):
    a = factor_euclidean(haar_bank(), policy="A")
    b = factor_euclidean(haar_bank(), policy="B")
    ok = (a.product() == haar_bank() == b.product()
          and a.is_irreducible and b.is_irreducible and a != b)
    with capsys.disabled():
        report(9, "two distinct factorizations of one bank", ok)


def test_criterion_10_reversible_round_trip(capsys):
    rng = random.Random(1010)
    t0 = time.perf_counter()
    ok = True
    for _ in range(100):
        c = rand_dyadic_ws_cascade(rng)
        x = rand_int_signal(rng, 1024)
        y = reversible_analysis(c, x)
        if reversible_synthesis(c, y) != {k: v for k, v in x.items() if v}:
            ok = False
            break
        # rounding bound: each rounded update within 1 of the exact update
        y0, y1 = _int_split(x)
        for s in c.steps:
            src = y1 if s.m == 0 else y0
            upd = _rounded_update(s.filter, src)
            exact = s.filter * LaurentPoly({k: F(v) for k, v in src.items()})
            if any(abs(upd.get(n, 0) - exact.coeff(n)) >= 1
                   for n in set(upd) | set(exact.indices())):
                ok = False
                break
            dst = y0 if s.m == 0 else y1
            for n, v in upd.items():
                dst[n] = dst.get(n, 0) + v
        if not ok:
            break
    ok = ok and time.perf_counter() - t0 < 30
    with capsys.disabled():
        report(10, "reversible integer round trip", ok)


def test_criterion_11_closure_and_nonclosure(capsys):
    rng = random.Random(1111)
    ok = True
    for _ in range(200):
        a = rand_ws_cascade(rng).product()
        b = rand_ws_cascade(rng).product()
        if classify_bank(a @ b).kind != "WS_DELAY_MINIMIZED":
            ok = False
            break
        if classify_bank(a.inverse()).kind != "WS_DELAY_MINIMIZED":
            ok = False
            break
    found_escape = False
    if ok:
        for _ in range(200):
            p = rand_hs_concentric_bank(rng) @ rand_hs_concentric_bank(rng)
            if classify_bank(p).kind != "HS_CONCENTRIC":
                found_escape = True
                break
    ok = ok and found_escape
    with capsys.disabled():
        report(11, "WS closure, HS non-closure", ok)
