"""One step of descent: band c to itself to get R with P.R = 4 and R.Q < P.Q.

Two arcs of Q, one of slope 0 and one of slope infinity, on opposite sides
of c and with alternating ends, guide the band.  The banded curve meets c in
four points, so it lies in the family beta^n gamma^g delta(P): the plus slope
of the guiding pair fixes g, and n is the twist that brings it closest to Q.
R.Q is computed exactly as P.(h^-1 Q) for the edge word h.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._generators import apply_letters
from .curve_model import INFINITY, CurveDiagram, Slope, _side_slope
from ._trace import MINUS_AXES, PLUS_AXES, base_crossings

__all__ = [
    "ArcRef", "CrossingPair", "BandedCurve", "PreconditionError",
    "NoQualifyingPair", "find_crossing_pair", "candidate_pairs", "band", "reduce_step",
]

ZERO = Slope(0, 1)


class PreconditionError(ValueError):
    pass


class NoQualifyingPair(RuntimeError):
    """No guiding pair produced a descending band; the input is not a
    reducing curve in minimal position."""


@dataclass(frozen=True)
class ArcRef:
    side: str
    slope: Slope
    ends: tuple[int, int] | None = None  # doubled positions on c; None if constructed
    segment: int | None = None

    @property
    def constructed(self) -> bool:
        return self.ends is None


@dataclass(frozen=True)
class CrossingPair:
    plus_arc: ArcRef
    minus_arc: ArcRef
    crossing: bool

    def to_json(self) -> dict:
        def arc(a):
            return {"slope": [a.slope.p, a.slope.q], "ends": list(a.ends) if a.ends else None}
        return {"plus": arc(self.plus_arc), "minus": arc(self.minus_arc), "crossing": self.crossing}


@dataclass(frozen=True)
class BandedCurve:
    diagram: CurveDiagram
    intersection_with_base: int
    intersection_bound_with_Q: int
    intersection_with_Q: int
    edge_word: tuple[int, int]  # (n, g) with diagram = beta^n gamma^g delta(P)


def _alternate(a: tuple[int, int], b: tuple[int, int]) -> bool:
    lo, hi = sorted(a)
    inside = [lo < x < hi for x in b]
    return inside[0] != inside[1]


def _pushoffs(ends: tuple[int, int], size: int) -> list[tuple[int, int]]:
    """Ends of the two parallel copies of an arc (doubled coordinates, so
    the points of Q sit at even positions).

    The band around an arc meets c in two intervals whose orientations are
    opposite, so one copy has ends (b1 + 1/2, b2 - 1/2), the other the reverse.
    """
    b1, b2 = ends
    return [((b1 + 1) % size, (b2 - 1) % size), ((b1 - 1) % size, (b2 + 1) % size)]


def _upstairs_arcs(q: CurveDiagram) -> list[ArcRef]:
    m = q.trace.crossings
    arcs = []
    for k, seg in enumerate(q.trace.segments):
        slope = _side_slope(seg.counts, PLUS_AXES if seg.side == "plus" else MINUS_AXES)
        for sheet in range(q.sheets):
            ends = (2 * (sheet * m + seg.start), 2 * (((sheet + seg.v_parity) % q.sheets) * m + seg.end))
            arcs.append(ArcRef(seg.side, slope, ends, k))
    return arcs


def find_crossing_pair(q: CurveDiagram) -> CrossingPair:
    """Alternating slope-0 / slope-infinity pair of arcs of q on opposite sides.

    If q's own arcs contain no such pair, a constructed pair is returned:
    arcs of the two special slopes disjoint from q, taken in the orientation
    that the intersection count guarantees; ``band`` then certifies it.
    """
    pairs = candidate_pairs(q)
    if not pairs:
        raise NoQualifyingPair("no arcs of slope 0 or infinity")
    return pairs[0]


def candidate_pairs(q: CurveDiagram) -> list[CrossingPair]:
    if q.base_intersection < 4 or not q.separating:
        raise PreconditionError("need a separating curve meeting c in at least 4 points")
    arcs = _upstairs_arcs(q)
    special = (ZERO, INFINITY)
    plus = [a for a in arcs if a.side == "plus" and a.slope in special]
    minus = [a for a in arcs if a.side == "minus" and a.slope in special]
    size = 2 * q.sheets * q.trace.crossings
    found = []
    for p in plus:
        for n in minus:
            if p.slope == n.slope:
                continue
            for copy in _pushoffs(n.ends, size):
                if _alternate(p.ends, copy):
                    found.append(CrossingPair(p, ArcRef("minus", n.slope, copy, n.segment), True))
            for copy in _pushoffs(p.ends, size):
                if _alternate(n.ends, copy):
                    found.append(CrossingPair(ArcRef("plus", p.slope, copy, p.segment), n, True))
    if found:
        return found
    # constructed arcs: each special slope on the side where it is disjoint from q
    out = []
    for ps in special:
        ms = INFINITY if ps == ZERO else ZERO
        out.append(CrossingPair(ArcRef("plus", ps), ArcRef("minus", ms), True))
    return out


def _edge_letters(n: int, g: int) -> str:
    return ("b" * n if n >= 0 else "B" * -n) + "g" * g + "d"


def band(q: CurveDiagram, pair: CrossingPair) -> BandedCurve:
    """The curve obtained by banding c along the pair, with exact R.Q."""
    g = 0 if pair.plus_arc.slope == ZERO else 1
    pulled = {0: q.weights}

    def shifted(n):
        # beta^-n applied to q
        if n not in pulled:
            pulled[n] = apply_letters("B" if n > 0 else "b", shifted(n - 1 if n > 0 else n + 1))
        return pulled[n]

    def cost(n):
        return base_crossings(apply_letters("D" + "g" * g, shifted(n)))

    n = 0
    while cost(n - 1) <= cost(n):
        n -= 1
    while cost(n + 1) < cost(n):
        n += 1
    diagram = CurveDiagram(apply_letters(_edge_letters(n, g), _base_weights()))
    return BandedCurve(diagram, diagram.base_intersection, q.base_intersection - 2, 2 * cost(n), (n, g))


def _base_weights():
    from .curve_model import BASE

    return BASE.weights


def reduce_step(q: CurveDiagram) -> tuple[CurveDiagram, dict]:
    """R with P.R = 4 and R.Q <= P.Q - 2, plus an audit certificate."""
    pairs = candidate_pairs(q)
    tried = {}
    for pair in pairs:
        key = pair.plus_arc.slope
        if key not in tried:
            tried[key] = (band(q, pair), pair)
    banded, pair = min(tried.values(), key=lambda bp: bp[0].intersection_with_Q)
    if banded.intersection_with_Q > banded.intersection_bound_with_Q:
        raise NoQualifyingPair(f"best band meets Q in {banded.intersection_with_Q} points")
    certificate = {
        "p_dot_r": banded.intersection_with_base,
        "bound_r_dot_q": banded.intersection_bound_with_Q,
        "r_dot_q": banded.intersection_with_Q,
        "edge_word": list(banded.edge_word),
        "pair": pair.to_json(),
    }
    return banded.diagram, certificate
