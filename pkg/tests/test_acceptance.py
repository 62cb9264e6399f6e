"""The eight acceptance criteria, each at zero tolerance.

Every criterion prints one PASS/FAIL line (also under output capture).
Criteria 6 and 8 audit every curve met while running criteria 1 to 5.
Run directly with ``python tests/test_acceptance.py`` for the summary alone.
"""

import random
import time

import pytest

from goeritz import (
    BASE, CurveImages, apply_word, base_intersection, build_ball,
    canonical_form, check_relations, factorize, farey_distance, is_reducing,
    neighbor, path_to_base, random_word, reduce_step, validate,
    verify_local_structure,
)
from goeritz.curve_model import INFINITY, Slope

ZERO = Slope(0, 1)
SEED = 20240601
SEEN = {}  # canonical form -> diagram, every curve met in criteria 1-5


def _remember(*curves):
    for q in curves:
        SEEN.setdefault(canonical_form(q), q)


def _say(capsys, number, title, ok, detail):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


_BALL = {}


def _ball():
    if "b" not in _BALL:
        _BALL["b"] = build_ball(2, 6)
    return _BALL["b"]


def criterion_1(capsys=None):
    start = time.perf_counter()
    ball = _ball()
    curves = [v.diagram for v in ball.vertices]
    rng = random.Random(SEED + 1)
    curves += [apply_word(random_word(rng, 8)) for _ in range(500)]
    _remember(*curves)
    bad = [q for q in curves if base_intersection(q) % 2 or base_intersection(q) == 2]
    took = time.perf_counter() - start
    ok = not bad and took < 60
    return _say(capsys, 1, "parity and gap", ok,
                f"{len(curves)} curves ({len(ball.vertices)} ball vertices), "
                f"{len(bad)} exceptions, {took:.1f}s")


def criterion_2(capsys=None):
    family = [neighbor(n, g) for n in range(-6, 7) for g in (0, 1)]
    _remember(*family)
    distinct = len({canonical_form(q) for q in family})
    fours = sum(base_intersection(q) == 4 for q in family)
    ok = len(family) == 26 == distinct == fours
    return _say(capsys, 2, "adjacent family", ok,
                f"{len(family)} diagrams, {distinct} distinct, {fours} meet P in 4 points")


def criterion_3(capsys=None):
    rng = random.Random(SEED + 3)
    sample = [apply_word(random_word(rng, 8)) for _ in range(100)]
    _remember(*sample)
    report = check_relations(sample)
    return _say(capsys, 3, "presentation relations", report.ok, report.summary())


def criterion_4(capsys=None):
    start = time.perf_counter()
    rng = random.Random(SEED + 4)
    deep, adjacent = [], []
    while len(deep) < 200:
        q = apply_word(random_word(rng, 8))
        pq = base_intersection(q)
        (deep if pq >= 6 else adjacent if pq == 4 else []).append(q)
    failures = 0
    for q in deep:
        r, cert = reduce_step(q)
        _remember(q, r)
        pq = base_intersection(q)
        failures += not (base_intersection(r) == 4 and cert["r_dot_q"] <= cert["bound_r_dot_q"] == pq - 2)
    for q in adjacent:
        r, _ = reduce_step(q)
        failures += canonical_form(r) != canonical_form(q)
    took = time.perf_counter() - start
    ok = failures == 0 and took < 120
    return _say(capsys, 4, "strict descent", ok,
                f"{len(deep)} deep and {len(adjacent)} adjacent inputs, {failures} failures, {took:.1f}s")


def criterion_5(capsys=None):
    start = time.perf_counter()
    rng = random.Random(SEED + 5)
    path_bad = 0
    for _ in range(200):
        q = apply_word(random_word(rng, 8))
        back = apply_word(path_to_base(q))
        _remember(q, back)
        path_bad += canonical_form(back) != canonical_form(q)
    factor_bad = 0
    for _ in range(50):
        h = CurveImages.of_word(random_word(rng, 6))
        _remember(h.c)
        factor_bad += CurveImages.of_word(factorize(h)).key() != h.key()
    took = time.perf_counter() - start
    ok = path_bad == factor_bad == 0 and took < 300
    return _say(capsys, 5, "connectivity round trip", ok,
                f"path {200 - path_bad}/200, factorize {50 - factor_bad}/50, {took:.1f}s")


def _ensure_seen():
    if not SEEN:
        for check in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5):
            check()


def criterion_6(capsys=None):
    _ensure_seen()
    audited, bad = 0, 0
    for q in SEEN.values():
        if q.is_base or not is_reducing(q):
            continue
        audited += 1
        slopes = {f.slope for f in q.plus.families + q.minus.families}
        bad += not {ZERO, INFINITY} <= slopes
    ok = bad == 0 and audited > 0
    return _say(capsys, 6, "outermost slopes", ok, f"{audited} reducing curves, {bad} missing 0 or inf")


def criterion_7(capsys=None):
    report = verify_local_structure(_ball())
    ok = report.ok and report.interior_edges > 0 and report.base_simplex is not None
    return _say(capsys, 7, "local simplex structure", ok, report.summary())


def criterion_8(capsys=None):
    _ensure_seen()
    sides, bad = 0, 0
    for q in SEEN.values():
        if not validate(q).ok:
            continue
        for side in (q.plus, q.minus):
            sides += 1
            slopes = [f.slope for f in side.families]
            pairwise = all(farey_distance(s, t) == 1 for i, s in enumerate(slopes) for t in slopes[i + 1:])
            bad += not (len(slopes) <= 3 and pairwise)
    return _say(capsys, 8, "Farey structure", bad == 0 and sides > 0,
                f"{sides} side diagrams, {bad} violations")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(check, capsys):
    assert check(capsys)


if __name__ == "__main__":
    results = [check() for check in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
