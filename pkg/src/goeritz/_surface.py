"""Ideal triangulations of the six-times punctured sphere.

This is the quotient of the genus-2 splitting surface by its hyperelliptic
involution.  Curves are stored as normal coordinates (one weight per edge),
which are a complete isotopy invariant on a fixed triangulation.  Mapping
classes act by sequences of edge flips and relabellings.

Oriented edges are integers: label ``i`` and its reverse ``~i``.  Triangles
are counterclockwise triples ``(x, y, z)`` with ``head(x) == tail(y)`` etc.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce


def label(edge: int) -> int:
    return edge if edge >= 0 else ~edge


@dataclass(frozen=True)
class Triangulation:
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def zeta(self) -> int:
        return len(self.triangles) * 3 // 2

    def corner(self, edge: int) -> tuple[int, int, int]:
        """The triangle containing ``edge``, rotated so that it comes first."""
        for x, y, z in self.triangles:
            if edge == x:
                return (x, y, z)
            if edge == y:
                return (y, z, x)
            if edge == z:
                return (z, x, y)
        raise KeyError(edge)

    def tails(self) -> dict[int, int]:
        """Map each oriented edge to the vertex it leaves."""
        parent = {e: e for t in self.triangles for e in t}

        def find(e):
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for x, y, z in self.triangles:
            # head(x) = tail(~x) = tail(y)
            for a, b in ((~x, y), (~y, z), (~z, x)):
                parent[find(a)] = find(b)
        roots = sorted({find(e) for e in parent})
        return {e: roots.index(find(e)) for e in parent}

    def valence(self, edge: int) -> int:
        tails = self.tails()
        return sum(1 for e in tails if tails[e] == tails[edge])

    def is_flippable(self, edge: int) -> bool:
        return set(self.corner(edge)) != set(self.corner(~edge))

    def square(self, edge: int) -> tuple[int, int, int, int]:
        _, a, b = self.corner(edge)
        _, c, d = self.corner(~edge)
        return a, b, c, d

    def flip(self, edge: int) -> "Triangulation":
        a, b, c, d = self.square(edge)
        gone = {self.corner(edge), self.corner(~edge)}
        kept = tuple(t for t in self.triangles if _rotations(t) & gone == set())
        return Triangulation(kept + ((edge, d, a), (~edge, b, c)))

    def find_isometry(self, other: "Triangulation", seed: dict[int, int]) -> dict[int, int] | None:
        """Extend ``seed`` to an oriented-edge map carrying self onto other."""
        image = dict(seed)
        for e, f in seed.items():
            image[~e] = ~f
        todo = list(seed)
        while todo:
            e = todo.pop()
            for src, dst in zip(self.corner(e), other.corner(image[e])):
                for s, d in ((src, dst), (~src, ~dst)):
                    if s in image:
                        if image[s] != d:
                            return None
                    else:
                        image[s] = d
                        todo.append(s)
        if len(image) != 2 * self.zeta:
            return None
        return image


def _rotations(t):
    x, y, z = t
    return {(x, y, z), (y, z, x), (z, x, y)}


@dataclass(frozen=True)
class Encoding:
    """A mapping class as a sequence of weight moves.

    A move is either ``("flip", e, a, b, c, d)`` with edge labels taken from
    the square around ``e``, or ``("perm", sigma)`` sending the weight on
    label ``i`` to label ``sigma[i]``.
    """

    moves: tuple = ()

    def __call__(self, weights: tuple[int, ...]) -> tuple[int, ...]:
        w = list(weights)
        for move in self.moves:
            if move[0] == "flip":
                _, e, a, b, c, d = move
                w[e] = max(w[a] + w[c], w[b] + w[d]) - w[e]
            else:
                sigma = move[1]
                new = [0] * len(w)
                for i, x in enumerate(w):
                    new[sigma[i]] = x
                w = new
        return tuple(w)

    def __mul__(self, other: "Encoding") -> "Encoding":
        # (self * other)(x) = self(other(x))
        return Encoding(other.moves + self.moves)

    def __pow__(self, n: int) -> "Encoding":
        if n < 0:
            raise ValueError("use an explicit inverse")
        return reduce(lambda acc, _: self * acc, range(n), Encoding())


class _Path:
    """Move sequence recorded together with every triangulation it visits."""

    def __init__(self, start: Triangulation):
        self.states = [start]
        self.moves: list = []

    @property
    def end(self) -> Triangulation:
        return self.states[-1]

    def flip(self, edge: int) -> None:
        e = label(edge)
        a, b, c, d = (label(x) for x in self.end.square(e))
        self.moves.append(("flip", e, a, b, c, d))
        self.states.append(self.end.flip(e))

    def relabel(self, image: dict[int, int]) -> None:
        sigma = tuple(label(image[i]) for i in range(self.end.zeta))
        self.moves.append(("perm", sigma))
        self.states.append(Triangulation(tuple(tuple(image[e] for e in t) for t in self.end.triangles)))

    def reversed_moves(self) -> tuple:
        # flipping e again lands on the previous state with e reversed,
        # which is invisible to weights
        out = []
        for k in range(len(self.moves) - 1, -1, -1):
            move = self.moves[k]
            if move[0] == "flip":
                e = move[1]
                a, b, c, d = (label(x) for x in self.states[k + 1].square(e))
                out.append(("flip", e, a, b, c, d))
            else:
                sigma = move[1]
                inv = [0] * len(sigma)
                for i, j in enumerate(sigma):
                    inv[j] = i
                out.append(("perm", tuple(inv)))
        return tuple(out)


def half_twist(tri: Triangulation, edge: int) -> tuple[Encoding, Encoding]:
    """Right half twist about the arc ``edge`` and its inverse.

    Edges are pushed off the initial vertex until it has valence one; the
    twist itself then pushes them across to the terminal vertex and closes
    up with the isometry reversing ``edge``.
    """
    tails = tri.tails()
    if tails[edge] == tails[~edge]:
        raise ValueError("edge is a loop")
    go = _Path(tri)
    while go.end.valence(edge) > 1:
        go.flip(go.end.corner(edge)[2])
    twist = _Path(go.end)
    while twist.end.valence(~edge) > 1:
        twist.flip(twist.end.corner(~edge)[2])
    iso = twist.end.find_isometry(go.end, {edge: ~edge})
    if iso is None:
        raise RuntimeError("no closing isometry for half twist")
    twist.relabel(iso)
    there, back = tuple(go.moves), go.reversed_moves()
    return (Encoding(there + tuple(twist.moves) + back),
            Encoding(there + twist.reversed_moves() + back))


# Punctures 1..6 lie on the hexagon 1-2-3-4-5-6.  Edge 0 is a loop at 4
# enclosing 1, 2, 3, so the base circle runs parallel to it.
EDGE = {
    "loop": 0, "34": 1, "34'": 2, "41": 3, "31": 4, "12": 5,
    "42": 6, "32": 7, "45": 8, "45'": 9, "46": 10, "56": 11,
}

SPHERE = Triangulation((
    (1, 4, ~3),
    (3, 5, ~6),
    (7, ~5, ~4),
    (6, ~7, ~2),
    (0, 2, ~1),
    (~0, 8, ~9),
    (~8, 10, ~11),
    (9, 11, ~10),
))
