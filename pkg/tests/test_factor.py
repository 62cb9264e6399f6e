import json
import random

import pytest

from goeritz import (
    BASE, REFERENCE_CURVES, CurveImages, EdgeWord, InconsistentImages,
    PreconditionError, apply_word, canonical_form, factorize,
    identify_edge_word, neighbor, path_to_base, random_word,
)


@pytest.mark.parametrize("n, g", [(0, 0), (0, 1), (5, 0), (-4, 1), (13, 0)])
def test_identify_edge_word(n, g):
    assert identify_edge_word(neighbor(n, g)) == EdgeWord(n, g)


@pytest.mark.parametrize("q", [BASE, apply_word("dbd")])
def test_edge_word_needs_four_points(q):
    with pytest.raises(PreconditionError):
        identify_edge_word(q)


def test_path_of_base_is_empty():
    assert path_to_base(BASE) == ""


def test_path_round_trip():
    rng = random.Random(21)
    for _ in range(60):
        q = apply_word(random_word(rng, 8))
        assert canonical_form(apply_word(path_to_base(q))) == canonical_form(q)


def test_path_rejects_nonreducing():
    with pytest.raises(PreconditionError):
        path_to_base(REFERENCE_CURVES["lambda_plus"])


@pytest.mark.parametrize("word, expected", [("", ""), ("g", "g"), ("b", ""), ("a", "")])
def test_factorize_stabilizer(word, expected):
    # beta and alpha fix every reference curve
    assert factorize(CurveImages.of_word(word)) == expected


def test_factorize_round_trip():
    rng = random.Random(8)
    for _ in range(25):
        h = CurveImages.of_word(random_word(rng, 6))
        assert CurveImages.of_word(factorize(h)).key() == h.key()


def test_images_json_round_trip():
    h = CurveImages.of_word("dgbd")
    text = json.dumps(h.to_json())
    assert CurveImages.from_json(text).key() == h.key()


def test_inconsistent_images():
    ref = CurveImages.of_word("")
    swapped = CurveImages(ref.c, ref.lambda_plus, ref.mu_plus, ref.mu_minus, ref.lambda_minus)
    with pytest.raises(InconsistentImages):
        factorize(swapped)
    bad = CurveImages(ref.c, apply_word("d"), ref.lambda_plus, ref.mu_minus, ref.lambda_minus)
    with pytest.raises(InconsistentImages):
        factorize(bad)
