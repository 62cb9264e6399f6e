import json

import pytest

from goeritz import (
    BASE, INFINITY, REFERENCE_CURVES, CurveDiagram, CurveError, Slope,
    apply_word, base_intersection, canonical_form, farey_distance, from_json,
    handlebody_word, is_reducing, minimize, normalize_slope, slope_spectrum,
    to_json, validate,
)
from goeritz.curve_model import INESSENTIAL, arc_boundary

ZERO = Slope(0, 1)


@pytest.mark.parametrize("p, q, expected", [
    (2, 4, Slope(1, 2)), (-1, -3, Slope(1, 3)), (3, 0, INFINITY),
    (-3, 0, INFINITY), (0, -5, ZERO), (0, 0, INESSENTIAL), (1, -2, Slope(-1, 2)),
])
def test_normalize_slope(p, q, expected):
    assert normalize_slope(p, q) == expected


def test_farey_distance():
    assert farey_distance(ZERO, INFINITY) == 1
    assert farey_distance(Slope(1, 2), Slope(1, 3)) == 1
    assert farey_distance(Slope(1, 2), Slope(2, 3)) == 1
    assert farey_distance(ZERO, Slope(1, 2)) == 1
    assert farey_distance(Slope(1, 3), Slope(2, 3)) == 3


def test_base_is_empty_and_valid():
    assert base_intersection(BASE) == 0
    assert BASE.plus.families == () and BASE.minus.families == ()
    assert validate(BASE).ok
    assert to_json(BASE) == {"plus": {"families": [], "offset": 0},
                             "minus": {"families": [], "offset": 0}}


def test_first_neighbour_has_outermost_slopes():
    d = apply_word("d")
    assert base_intersection(d) == 4
    assert slope_spectrum(d, "plus") == {(ZERO, 2)}
    assert slope_spectrum(d, "minus") == {(INFINITY, 2)}


def test_reference_curves_bound_disks():
    # meridians have trivial word in their own handlebody
    assert handlebody_word(REFERENCE_CURVES["mu_plus"], "V") == ()
    assert handlebody_word(REFERENCE_CURVES["mu_minus"], "V") == ()
    assert handlebody_word(REFERENCE_CURVES["lambda_plus"], "W") == ()
    assert handlebody_word(REFERENCE_CURVES["lambda_minus"], "W") == ()
    for name in ("mu_plus", "lambda_plus", "mu_minus", "lambda_minus"):
        d = REFERENCE_CURVES[name]
        assert not d.separating and base_intersection(d) == 0


def test_two_slot_curve_is_nonseparating():
    # one slope-0 arc on each side: primitive in W, not reducing
    d = arc_boundary(1)
    assert d.plus.families[0].slope == ZERO and d.minus.families[0].slope == ZERO
    assert base_intersection(d) == 2
    assert handlebody_word(d, "W") == (-1, 2)
    assert not is_reducing(d)


def test_reducing_curves():
    assert is_reducing(BASE)
    assert is_reducing(apply_word("gdbd"))
    assert not is_reducing(REFERENCE_CURVES["mu_plus"])


def test_minimize_is_idempotent():
    d = apply_word("dbgd")
    assert minimize(d) == d and minimize(minimize(d)) == minimize(d)


@pytest.mark.parametrize("word", ["", "d", "bd", "Bgd", "dbdgdBd"])
def test_json_round_trip(word):
    d = apply_word(word)
    text = json.dumps(to_json(d))
    assert canonical_form(from_json(text)) == canonical_form(d)


def test_families_alone_are_rejected():
    obj = to_json(apply_word("d"))
    del obj["normal"]
    with pytest.raises(CurveError):
        from_json(obj)


@pytest.mark.parametrize("obj, fragment", [
    ({"plus": {"families": []}}, "missing minus"),
    ([], "JSON object"),
    ({"plus": {"families": [{"slope": [2, 4], "weight": 1}]},
      "minus": {"families": [], "offset": 0}}, "not normalized"),
    ({"plus": {"families": [{"slope": [1, 3], "weight": 1}, {"slope": [2, 3], "weight": 1}]},
      "minus": {"families": [{"slope": [0, 1], "weight": 2}]}}, "disjointness"),
    ({"plus": {"families": [{"slope": [0, 0], "weight": 1}]},
      "minus": {"families": [{"slope": [0, 1], "weight": 1}]}}, "inessential"),
    ({"plus": {"families": [{"slope": [0, 1], "weight": 2}]},
      "minus": {"families": [{"slope": [0, 1], "weight": 4}]}}, "endpoint counts"),
])
def test_validate_rejects(obj, fragment):
    report = validate(obj)
    assert not report.ok
    assert any(fragment in p for p in report.problems), report.problems


def test_inconsistent_normal_rejected():
    obj = to_json(apply_word("d"))
    obj["plus"]["offset"] += 1
    assert not validate(obj).ok
    obj = to_json(apply_word("d"))
    obj["normal"][0] += 1
    assert not validate(obj).ok


@pytest.mark.parametrize("weights", [(0,) * 12, (1,) + (0,) * 11, (-1,) * 12, (1, 2)])
def test_bad_weights(weights):
    with pytest.raises(CurveError):
        CurveDiagram(weights) if len(weights) != 12 or min(weights) < 0 else from_json(
            {"plus": {"families": []}, "minus": {"families": []}, "normal": list(weights)})
