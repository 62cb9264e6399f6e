"""Walk a normal curve through the triangulation.

The base circle runs parallel to the loop edge, hugging puncture 4 on the
inside.  It is placed in minimal position with the traced curve by pushing
it past the strands that wind fully around puncture 4; what remains of the
intersection sits inside the triangle (loop, 34', 34) in a known order.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._surface import EDGE, SPHERE, label

LOOP, P, Q = EDGE["loop"], EDGE["34"], EDGE["34'"]
V_CUTS = frozenset({EDGE["12"], EDGE["34"], EDGE["56"]})
PLUS_AXES = (EDGE["12"], EDGE["32"], EDGE["31"])
MINUS_AXES = (EDGE["56"], EDGE["45"], EDGE["46"])

_CORNER = {}
for _t in SPHERE.triangles:
    for _k in range(3):
        _CORNER[_t[_k]] = (_t[_k], _t[(_k + 1) % 3], _t[(_k + 2) % 3])
_BAND = _CORNER[LOOP]  # (loop, 34', ~34)


def corner_count(w, x: int, y: int, z: int) -> int:
    """Normal arcs cutting off the corner between sides x and y."""
    return (w[label(x)] + w[label(y)] - w[label(z)]) // 2


def _fan(w):
    # corners at puncture 4 between the two sides of the loop, inside it
    a, q, p = LOOP, Q, P
    e41, e42, e12, e31, e32 = (EDGE[k] for k in ("41", "42", "12", "31", "32"))
    return [
        corner_count(w, a, q, p),
        corner_count(w, q, e42, e32),
        corner_count(w, e42, e41, e12),
        corner_count(w, e41, p, e31),
        corner_count(w, p, a, q),
    ]


def base_crossings(w) -> int:
    """Geometric intersection of the curve with the base circle (downstairs)."""
    return w[LOOP] - 2 * min(_fan(w))


@dataclass(frozen=True)
class Segment:
    side: str  # "plus" or "minus"
    start: int  # positions on the base circle, 0 .. 2m-1
    end: int
    counts: dict
    v_parity: int


@dataclass(frozen=True)
class Trace:
    events: tuple  # ("edge", oriented edge, index) or ("base", position, side entered)
    segments: tuple

    @property
    def crossings(self) -> int:
        return sum(1 for e in self.events if e[0] == "base")


def trace(w) -> Trace:
    total = sum(w)
    if total == 0:
        return Trace((), ())
    around = min(_fan(w))
    c_pa = corner_count(w, ~P, LOOP, Q)
    c_aq = corner_count(w, LOOP, Q, ~P)
    start = (next(e for e in range(len(w)) if w[e] > 0), 0)
    state, events = start, []
    while True:
        y, j = state
        _, z, x = _CORNER[y]
        if j < corner_count(w, x, y, z):
            pair, t, out, i = (x, y), j, x, w[label(x)] - 1 - j
        else:
            t = w[label(y)] - 1 - j
            pair, out, i = (y, z), z, t
        if y in _BAND:
            if pair == (~P, LOOP) and t >= around:
                events.append(("base", t - around, "minus" if out == LOOP else "plus"))
            elif pair == (LOOP, Q) and t >= around:
                events.append(("base", c_pa - around + c_aq - 1 - t, "minus" if out == LOOP else "plus"))
        events.append(("edge", out, i))
        state = (~out, w[label(out)] - 1 - i)
        if state == start or len(events) > 4 * total + 4:
            break
    if sum(1 for e in events if e[0] == "edge") != total:
        raise ValueError("weights carry more than one component")
    return Trace(tuple(events), _segments(events))


def _segments(events) -> tuple:
    marks = [k for k, e in enumerate(events) if e[0] == "base"]
    if not marks:
        return ()
    rolled = events[marks[0]:] + events[:marks[0]]
    out, current = [], None
    for e in rolled + [rolled[0]]:
        if e[0] == "base":
            if current is not None:
                out.append(Segment(current[0], current[1], e[1], current[2], current[3] % 2))
            current = [e[2], e[1], {}, 0]
        else:
            lab = label(e[1])
            current[2][lab] = current[2].get(lab, 0) + 1
            current[3] += lab in V_CUTS
    return tuple(out)
