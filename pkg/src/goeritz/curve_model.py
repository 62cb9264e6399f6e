"""Curves on the genus-2 splitting surface, seen relative to the base circle c.

Every curve is stored through its image in the quotient sphere by the
hyperelliptic involution: a curve on the six-punctured sphere in normal
position with respect to a fixed ideal triangulation.  The normal weights are
a complete isotopy invariant, so canonical forms are exact.  The arc
families, slopes and handlebody words are read off by tracing the curve.

Slopes on the plus side are measured against mu+ (lift of the arc 12) and
lambda+ (lift of 23); on the minus side against mu- (56) and lambda- (45).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import gcd

from ._surface import EDGE, SPHERE, label
from ._trace import MINUS_AXES, PLUS_AXES, V_CUTS, Trace, base_crossings, trace

__all__ = [
    "Slope", "ArcFamily", "SideDiagram", "CurveDiagram", "ValidationReport",
    "normalize_slope", "farey_distance", "validate", "minimize",
    "base_intersection", "slope_spectrum", "handlebody_word", "is_reducing",
    "canonical_form", "BASE", "REFERENCE_CURVES", "to_json", "from_json",
    "CurveError",
]


class CurveError(ValueError):
    """Raised for weight vectors or JSON that describe no single curve."""


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __str__(self) -> str:
        if (self.p, self.q) == (0, 0):
            return "inessential"
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


INFINITY = Slope(1, 0)
INESSENTIAL = Slope(0, 0)


def normalize_slope(p: int, q: int) -> Slope:
    """Reduce p/q with q >= 0; 1/0 is infinity and 0/0 the inessential marker."""
    if p == 0 and q == 0:
        return INESSENTIAL
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def farey_distance(s: Slope, t: Slope) -> int:
    return abs(s.p * t.q - s.q * t.p)


@dataclass(frozen=True)
class ArcFamily:
    slope: Slope
    weight: int

    def __post_init__(self):
        if self.weight < 1:
            raise CurveError("family weight must be positive")


@dataclass(frozen=True)
class SideDiagram:
    families: tuple[ArcFamily, ...] = ()
    offset: int = 0

    @property
    def endpoints(self) -> int:
        return 2 * sum(f.weight for f in self.families)

    def spectrum(self) -> frozenset[tuple[Slope, int]]:
        return frozenset((f.slope, f.weight) for f in self.families)


def _side_slope(counts: dict, axes: tuple[int, int, int]) -> Slope:
    mu, lam, diagonal = (counts.get(k, 0) for k in axes)
    if counts.get(axes[2], 0) == abs(mu - lam):
        return normalize_slope(mu, lam)
    if diagonal != mu + lam:
        raise CurveError("arc meets the reference curves inconsistently")
    return normalize_slope(-mu, lam)


def _link(vertex_edges: dict, v: int, zeta: int) -> tuple[int, ...]:
    w = [0] * zeta
    for e, tail in vertex_edges.items():
        if tail == v:
            w[label(e)] += 1
    return tuple(w)


_TAILS = SPHERE.tails()
_LINKS = frozenset(_link(_TAILS, v, SPHERE.zeta) for v in set(_TAILS.values()))


@dataclass(frozen=True)
class CurveDiagram:
    """A curve on the splitting surface, relative to the base circle.

    ``weights`` are the normal coordinates of its quotient curve.  Everything
    else (arc families, slots, offset) is derived from them.
    """

    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != SPHERE.zeta or any(int(x) != x or x < 0 for x in self.weights):
            raise CurveError(f"expected {SPHERE.zeta} non-negative integer weights")

    @cached_property
    def trace(self) -> Trace:
        return trace(self.weights)

    @property
    def is_base(self) -> bool:
        return self.weights == BASE.weights

    @cached_property
    def separating(self) -> bool:
        """Whether the lift is a separating curve (three punctures on each side)."""
        if self.is_base:
            return True
        crossings = sum(self.weights[k] for k in V_CUTS)
        return crossings % 2 == 1

    @property
    def sheets(self) -> int:
        return 2 if self.separating else 1

    @cached_property
    def base_intersection(self) -> int:
        return self.sheets * base_crossings(self.weights)

    def _families(self, side: str) -> tuple[ArcFamily, ...]:
        axes = PLUS_AXES if side == "plus" else MINUS_AXES
        tally: dict[Slope, int] = {}
        for seg in self.trace.segments:
            if seg.side == side:
                s = _side_slope(seg.counts, axes)
                tally[s] = tally.get(s, 0) + self.sheets
        return tuple(ArcFamily(s, n) for s, n in sorted(tally.items()))

    @cached_property
    def plus(self) -> SideDiagram:
        from ._generators import twist_offset

        return SideDiagram(self._families("plus"), twist_offset(self))

    @cached_property
    def minus(self) -> SideDiagram:
        return SideDiagram(self._families("minus"), 0)

    @cached_property
    def slots(self) -> tuple[tuple[Slope, Slope], ...]:
        """Pairs (plus slope, minus slope) meeting at each point of c, in order."""
        if not self.trace.segments:
            return ()
        m = self.trace.crossings
        plus, minus = [None] * m, [None] * m
        for seg in self.trace.segments:
            axes, ends = (PLUS_AXES, plus) if seg.side == "plus" else (MINUS_AXES, minus)
            s = _side_slope(seg.counts, axes)
            ends[seg.start] = ends[seg.end] = s
        return tuple(zip(plus, minus)) * self.sheets

    def __str__(self) -> str:
        if self.is_base:
            return "c"
        show = lambda side: " ".join(f"{f.slope}x{f.weight}" for f in side.families) or "-"
        return f"[{show(self.plus)} | {show(self.minus)} ; twist {self.plus.offset}]"


def arc_boundary(edge: int) -> CurveDiagram:
    """The boundary of a regular neighbourhood of a triangulation edge."""
    tails = SPHERE.tails()
    ends = {tails[edge], tails[~edge]}
    w = [0] * SPHERE.zeta
    for e, v in tails.items():
        if label(e) != label(edge) and v in ends:
            w[label(e)] += 1
    return CurveDiagram(tuple(w))


BASE = CurveDiagram(tuple(1 if k in (EDGE["34"], EDGE["34'"], EDGE["41"], EDGE["42"]) else 0
                          for k in range(SPHERE.zeta)))

# c, mu+, lambda+, mu-, lambda-: lifts of the base circle and of the arcs 12, 23, 56, 45
REFERENCE_CURVES = {
    "c": BASE,
    "mu_plus": arc_boundary(EDGE["12"]),
    "lambda_plus": arc_boundary(EDGE["32"]),
    "mu_minus": arc_boundary(EDGE["56"]),
    "lambda_minus": arc_boundary(EDGE["45"]),
}


def base_intersection(d: CurveDiagram) -> int:
    """P . Q: the number of points in which the curve meets c, minimised."""
    return d.base_intersection


def slope_spectrum(d: CurveDiagram, side: str) -> frozenset[tuple[Slope, int]]:
    if side not in ("plus", "minus"):
        raise ValueError("side must be 'plus' or 'minus'")
    return (d.plus if side == "plus" else d.minus).spectrum()


def minimize(d: CurveDiagram) -> CurveDiagram:
    """Normal curves already meet c minimally, so this is the identity."""
    return d


def canonical_form(d: CurveDiagram) -> tuple[int, ...]:
    """Isotopy-class key: the normal coordinates of the quotient curve."""
    return d.weights


def _free_reduce(word: list[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == -stack[hi - 1]:
        lo, hi = lo + 1, hi - 1
    return tuple(stack[lo:hi])


_INSIDE_BEFORE = {  # which exits leave the left side of the oriented hexagon
    EDGE["45"]: lambda out: out >= 0,
    EDGE["32"]: lambda out: out < 0,
}


def handlebody_word(d: CurveDiagram, body: str) -> tuple[int, ...]:
    """Freely and cyclically reduced image of the curve in pi_1 of V or W.

    Letters are +-1 and +-2.  In V they are dual to the disks bounded by mu+
    and mu-; in W to those bounded by lambda+ and lambda-.  The lift is read
    on the two sheets of the branched cover, so an odd walk is taken twice.
    """
    if body not in ("V", "W"):
        raise ValueError("body must be 'V' or 'W'")
    letters = {"V": {EDGE["12"]: 1, EDGE["56"]: 2}, "W": {EDGE["32"]: 1, EDGE["45"]: 2}}[body]
    exits = [e[1] for e in d.trace.events if e[0] == "edge"]
    sheet, word = 0, []
    for _ in range(d.sheets):
        for out in exits:
            lab = label(out)
            if lab in letters:
                level = sheet if body == "V" else sheet ^ _INSIDE_BEFORE[lab](out)
                word.append(letters[lab] if level == 0 else -letters[lab])
            if lab in V_CUTS:
                sheet ^= 1
    return _free_reduce(word)


def is_reducing(d: CurveDiagram) -> bool:
    """Separating, and bounds a disk in both handlebodies."""
    return d.separating and not handlebody_word(d, "V") and not handlebody_word(d, "W")


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _side_problems(name: str, families) -> list[str]:
    out = []
    if len(families) > 3:
        out.append(f"{name}: family count {len(families)} exceeds 3")
    slopes = [f.slope for f in families]
    if len(set(slopes)) != len(slopes):
        out.append(f"{name}: repeated slope")
    for i, s in enumerate(slopes):
        if s == INESSENTIAL:
            out.append(f"{name}: inessential arc")
        for t in slopes[i + 1:]:
            if farey_distance(s, t) != 1:
                out.append(f"{name}: disjointness fails for {s} and {t}")
    return out


def _weight_problems(w: tuple[int, ...]) -> list[str]:
    out = []
    for x, y, z in SPHERE.triangles:
        a, b, c = (w[label(e)] for e in (x, y, z))
        if (a + b + c) % 2 or a > b + c or b > a + c or c > a + b:
            out.append(f"weights {a}, {b}, {c} are not normal on a triangle")
    if not out:
        if not any(w):
            out.append("no curve")
        elif w in _LINKS:
            out.append("curve is peripheral")
        else:
            try:
                trace(w)
            except ValueError:
                out.append("weights carry more than one component")
    return out


def validate(d) -> ValidationReport:
    """Check a CurveDiagram, or its JSON mapping, against the invariants."""
    if isinstance(d, CurveDiagram):
        problems = _weight_problems(d.weights)
        if not problems:
            problems += _side_problems("plus", d.plus.families)
            problems += _side_problems("minus", d.minus.families)
        return ValidationReport(not problems, tuple(problems))
    if not isinstance(d, dict):
        return ValidationReport(False, ("malformed: expected a JSON object",))
    missing = [k for k in ("plus", "minus") if k not in d]
    if missing:
        return ValidationReport(False, (f"malformed: missing {', '.join(missing)}",))
    try:
        sides = {k: _read_side(d[k]) for k in ("plus", "minus")}
    except (CurveError, KeyError, TypeError, ValueError) as err:
        return ValidationReport(False, (f"malformed: {err}",))
    problems = []
    for name, side in sides.items():
        problems += _side_problems(name, side.families)
    if sides["plus"].endpoints != sides["minus"].endpoints:
        problems.append("plus and minus endpoint counts differ")
    if "normal" in d and not problems:
        problems += _weight_problems(tuple(d["normal"]))
        if not problems:
            curve = CurveDiagram(tuple(d["normal"]))
            if sides["plus"] != curve.plus or sides["minus"] != curve.minus:
                problems.append("families or offsets disagree with the normal coordinates")
    return ValidationReport(not problems, tuple(problems))


def _write_side(side: SideDiagram) -> dict:
    return {
        "families": [{"slope": [f.slope.p, f.slope.q], "weight": f.weight} for f in side.families],
        "offset": side.offset,
    }


def _read_side(obj: dict) -> SideDiagram:
    fams = []
    for f in obj["families"]:
        p, q = f["slope"]
        s = normalize_slope(p, q)
        if (s.p, s.q) != (p, q):
            raise CurveError(f"slope {p}/{q} is not normalized")
        fams.append(ArcFamily(s, int(f["weight"])))
    return SideDiagram(tuple(fams), int(obj.get("offset", 0)))


def to_json(d: CurveDiagram) -> dict:
    """JSON-ready mapping.  The base curve is the bare empty diagram; every
    other curve also carries its normal coordinates under ``normal``."""
    out = {"plus": _write_side(d.plus), "minus": _write_side(d.minus)}
    if not d.is_base:
        out["normal"] = list(d.weights)
    return out


def from_json(obj) -> CurveDiagram:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    if "normal" in obj:
        report = validate(obj)
        if not report:
            raise CurveError("; ".join(report.problems))
        return CurveDiagram(tuple(obj["normal"]))
    sides = [_read_side(obj[k]) for k in ("plus", "minus")]
    if all(not s.families and s.offset == 0 for s in sides):
        return BASE
    raise CurveError("arc families alone do not fix the gluing; supply 'normal' coordinates")
