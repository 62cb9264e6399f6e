"""Weight encodings of the Goeritz generators on the quotient sphere.

sigma_i is the right half twist about the hexagon arc (i, i+1).  Downstairs:
  alpha = the hyperelliptic involution, trivial on unoriented curves
  beta  = (s1 s2)^3, the Dehn twist about the base circle (half twist upstairs)
  gamma = s1 s2 s3 s4 s5 s1 s2 s3 s4 s1 s2 s3 s1 s2 s1, the half turn i -> 7 - i
  delta = (s1 s2 s3 s4 s5)^2, rotating the hexagon by two steps
Words compose as maps: ``g1 g2`` applies g2 first.
"""

from __future__ import annotations

from functools import lru_cache, reduce

from ._surface import EDGE, SPHERE, Encoding, half_twist

_ARCS = ("12", "32", "34", "45", "56")


@lru_cache(maxsize=None)
def sigma(i: int, power: int = 1) -> Encoding:
    forward, backward = half_twist(SPHERE, EDGE[_ARCS[i - 1]])
    return forward if power == 1 else backward


def _compose(*maps: Encoding) -> Encoding:
    return reduce(lambda acc, m: acc * m, maps, Encoding())


def _braid(word: str) -> Encoding:
    # "12-1" style: digits are sigma_i, a preceding "-" inverts
    maps, sign = [], 1
    for ch in word:
        if ch == "-":
            sign = -1
            continue
        maps.append(sigma(int(ch), sign))
        sign = 1
    return _compose(*maps)


@lru_cache(maxsize=None)
def encoding(letter: str) -> Encoding:
    table = {
        "a": "",
        "b": "121212",
        "B": "-2-1-2-1-2-1",
        "g": "123451234123121",
        "d": "1234512345",
        "D": "-5-4-3-2-1-5-4-3-2-1",
    }
    return _braid(table[letter])


def apply_letters(letters: str, weights: tuple[int, ...]) -> tuple[int, ...]:
    for ch in reversed(letters):
        weights = encoding(ch)(weights)
    return weights


def twist_offset(curve) -> int:
    """Signed count of beta twists separating ``curve`` from the lightest
    curve in its beta-orbit (the leftmost one on ties)."""
    from ._trace import base_crossings

    w = curve.weights
    if base_crossings(w) == 0:
        return 0
    cache = {0: w}

    def weights_at(j):
        if j not in cache:
            step = j - 1 if j > 0 else j + 1
            cache[j] = encoding("b" if j > 0 else "B")(weights_at(step))
        return cache[j]

    def at(j):
        return sum(weights_at(j))

    j = 0
    while at(j - 1) <= at(j):
        j -= 1
    while at(j + 1) < at(j):
        j += 1
    return -j
