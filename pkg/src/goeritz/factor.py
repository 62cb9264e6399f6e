"""Words carrying the base sphere to a given one, and factorization of
splitting-preserving maps given by where they send the reference curves.

beta twists about c and alpha is the hyperelliptic involution; both fix all
five reference curves.  So from reference images alone the stabilizer part
of a map is known only up to beta^n alpha^a, and ``factorize`` reports the
representative with n = a = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .curve_model import BASE, INFINITY, REFERENCE_CURVES, CurveDiagram, canonical_form, from_json, to_json
from .goeritz_action import apply_word, inverse_word, neighbor, reduce_word
from .reduction import PreconditionError, reduce_step

__all__ = [
    "EdgeWord", "CurveImages", "InconsistentImages", "identify_edge_word",
    "path_to_base", "factorize", "REFERENCE_NAMES",
]

REFERENCE_NAMES = ("c", "mu_plus", "lambda_plus", "mu_minus", "lambda_minus")


class InconsistentImages(ValueError):
    """The five images are not those of any element of the Goeritz group."""


@dataclass(frozen=True)
class EdgeWord:
    """beta^n gamma^g delta: carries P to a neighbour across an edge of Gamma."""

    n: int
    g: int

    def word(self) -> str:
        return ("b" * self.n if self.n >= 0 else "B" * -self.n) + "g" * self.g + "d"

    def __iter__(self):
        return iter((self.n, self.g))


def identify_edge_word(r: CurveDiagram, n_max: int = 64) -> EdgeWord:
    """The (n, g) with neighbor(n, g) isotopic to r."""
    if r.base_intersection != 4 or not r.separating:
        raise PreconditionError("edge words exist only for spheres meeting P in 4 points")
    g = 1 if any(f.slope == INFINITY for f in r.plus.families) else 0
    guess = r.plus.offset - neighbor(0, g).plus.offset
    target = canonical_form(r)
    for n in [guess] + sorted(range(-n_max, n_max + 1), key=abs):
        if canonical_form(neighbor(n, g)) == target:
            return EdgeWord(n, g)
    raise PreconditionError(f"no edge word with |n| <= {n_max}")


def path_to_base(q: CurveDiagram, n_max: int = 64) -> str:
    """A word w with w(P) isotopic to q, built by repeated banding."""
    from .curve_model import is_reducing

    if not is_reducing(q):
        raise PreconditionError("curve is not a reducing curve")
    word, current = "", q
    while not current.is_base:
        r, _ = reduce_step(current)
        step = identify_edge_word(r, n_max).word()
        word += step
        current = apply_word(inverse_word(step), current)
    return reduce_word(word)


@dataclass(frozen=True)
class CurveImages:
    c: CurveDiagram
    mu_plus: CurveDiagram
    lambda_plus: CurveDiagram
    mu_minus: CurveDiagram
    lambda_minus: CurveDiagram

    @classmethod
    def of_word(cls, word: str) -> "CurveImages":
        return cls(*(apply_word(word, REFERENCE_CURVES[k]) for k in REFERENCE_NAMES))

    def pulled_back(self, word: str) -> "CurveImages":
        inv = inverse_word(word)
        return CurveImages(*(apply_word(inv, getattr(self, k)) for k in REFERENCE_NAMES))

    def key(self) -> tuple:
        return tuple(canonical_form(getattr(self, k)) for k in REFERENCE_NAMES)

    def to_json(self) -> dict:
        return {k: to_json(getattr(self, k)) for k in REFERENCE_NAMES}

    @classmethod
    def from_json(cls, obj) -> "CurveImages":
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        return cls(*(from_json(obj[k]) for k in REFERENCE_NAMES))


def factorize(h: CurveImages, n_max: int = 64) -> str:
    """A word in alpha, beta, gamma, delta sending the references to h."""
    for name in ("mu_plus", "lambda_plus", "mu_minus", "lambda_minus"):
        image = getattr(h, name)
        if image.separating:
            raise InconsistentImages(f"{name} image is not a non-separating curve")
    lead = path_to_base(h.c, n_max)
    rest = h.pulled_back(lead)
    for tail in ("", "g"):
        if rest.key() == CurveImages.of_word(tail).key():
            return reduce_word(lead + tail)
    raise InconsistentImages("reference images match no element fixing P")
