"""The generators alpha, beta, gamma, delta acting on curve diagrams.

Words are strings over ``a b B g d D`` (``B`` and ``D`` are the inverses of
beta and delta); whitespace is ignored and Greek letters are accepted.  A
word acts as a composition of maps, so its rightmost letter acts first.

alpha is the hyperelliptic involution.  It fixes every unoriented curve, so
it acts trivially on diagrams even though it is a nontrivial group element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from ._generators import apply_letters, encoding
from .curve_model import BASE, CurveDiagram, canonical_form

__all__ = [
    "GENERATORS", "RELATIONS", "StabilizerNormalForm", "RelationReport",
    "parse_word", "inverse_word", "reduce_word", "apply_generator",
    "apply_word", "stabilizer_normal_form", "neighbor", "check_relations",
    "random_word",
]

GENERATORS = ("a", "b", "B", "g", "d", "D")
_INVERSE = {"a": "a", "b": "B", "B": "b", "g": "g", "d": "D", "D": "d"}
_GREEK = {"α": "a", "β": "b", "γ": "g", "δ": "d"}
_TOKEN = re.compile(r"[abBgdDαβγδ](?:\^-1)?")

# (name, lhs, rhs) checked as equal actions on curves
RELATIONS = (
    ("alpha^2 = 1", "aa", ""),
    ("gamma^2 = 1", "gg", ""),
    ("delta^3 = 1", "ddd", ""),
    ("alpha beta = beta alpha", "ab", "ba"),
    ("gamma alpha gamma = alpha", "gag", "a"),
    ("gamma beta gamma = alpha beta", "gbg", "ab"),
)


def parse_word(text: str) -> str:
    compact = "".join(text.split()).replace("⁻¹", "^-1")
    out = []
    for token in _TOKEN.findall(compact):
        ch = _GREEK.get(token[0], token[0])
        out.append(_INVERSE[ch] if token.endswith("^-1") else ch)
    if "".join(_TOKEN.findall(compact)) != compact:
        raise ValueError(f"cannot read generator word {text!r}")
    return "".join(out)


def inverse_word(word: str) -> str:
    return "".join(_INVERSE[ch] for ch in reversed(word))


def reduce_word(word: str) -> str:
    """Cancel adjacent inverse pairs (bB, dD, aa, gg)."""
    stack: list[str] = []
    for ch in word:
        if stack and stack[-1] == _INVERSE[ch]:
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def apply_generator(g: str, d: CurveDiagram) -> CurveDiagram:
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}")
    return CurveDiagram(encoding(g)(d.weights))


def apply_word(word: str, d: CurveDiagram = BASE) -> CurveDiagram:
    return CurveDiagram(apply_letters(parse_word(word), d.weights))


@dataclass(frozen=True)
class StabilizerNormalForm:
    """beta^n alpha^a gamma^g in the stabilizer of the base sphere."""

    n: int = 0
    a: int = 0
    g: int = 0

    def __mul__(self, other: "StabilizerNormalForm") -> "StabilizerNormalForm":
        # gamma beta^n = alpha^n beta^n gamma and alpha is central
        return StabilizerNormalForm(
            self.n + other.n,
            (self.a + other.a + self.g * other.n) % 2,
            (self.g + other.g) % 2,
        )

    def word(self) -> str:
        return ("b" * self.n if self.n >= 0 else "B" * -self.n) + "a" * self.a + "g" * self.g

    def __iter__(self):
        return iter((self.n, self.a, self.g))


_LETTER_FORMS = {
    "a": StabilizerNormalForm(0, 1, 0),
    "b": StabilizerNormalForm(1, 0, 0),
    "B": StabilizerNormalForm(-1, 0, 0),
    "g": StabilizerNormalForm(0, 0, 1),
}


def stabilizer_normal_form(word: str) -> StabilizerNormalForm:
    form = StabilizerNormalForm()
    for ch in parse_word(word):
        if ch not in _LETTER_FORMS:
            raise ValueError(f"{ch!r} does not fix the base sphere")
        form = form * _LETTER_FORMS[ch]
    return form


def neighbor(n: int, g: int) -> CurveDiagram:
    """beta^n gamma^g delta (P), a sphere meeting P in four points."""
    return apply_word(StabilizerNormalForm(n, 0, g).word() + "d")


@dataclass(frozen=True)
class RelationReport:
    samples: int
    failures: Mapping[str, int]

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def summary(self) -> str:
        held = sum(1 for v in self.failures.values() if not v)
        text = f"{held}/{len(self.failures)} relations hold on {self.samples} samples"
        broken = [k for k, v in self.failures.items() if v]
        return text + (f"; failing: {', '.join(broken)}" if broken else "")


def check_relations(
    sample: Iterable[CurveDiagram],
    act: Callable[[str, CurveDiagram], CurveDiagram] | None = None,
) -> RelationReport:
    """Compare both sides of each relation on every sample curve.

    ``act(letter, curve)`` overrides the generator action, which lets a test
    plant a faulty generator and watch the report name the broken relation.
    """
    act = act or apply_generator
    sample = list(sample)
    failures = {}
    for name, lhs, rhs in RELATIONS:
        bad = 0
        for d in sample:
            left, right = d, d
            for ch in reversed(lhs):
                left = act(ch, left)
            for ch in reversed(rhs):
                right = act(ch, right)
            bad += canonical_form(left) != canonical_form(right)
        failures[name] = bad
    return RelationReport(len(sample), failures)


def random_word(rng, max_length: int, letters: str = "abBgdD") -> str:
    """Uniform length in 0..max_length, uniform letters; ``rng`` is a
    ``random.Random``."""
    return "".join(rng.choice(letters) for _ in range(rng.randint(0, max_length)))
