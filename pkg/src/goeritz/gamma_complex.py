"""Finite balls in the complex of reducing spheres around the base vertex.

Vertices are canonical forms.  The group acts transitively, so the vertices
adjacent to w(P) are w(beta^n gamma^g delta (P)); every edge and every
adjacency is found this way, never by comparing two arbitrary spheres.
A ball is a truncation of an infinite complex: all checks hold only within
the explored set, and neighbours with |n| > n_range are simply absent.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from ._generators import apply_letters
from .curve_model import BASE, CurveDiagram
from .goeritz_action import StabilizerNormalForm

__all__ = [
    "GammaBall", "LocalStructureReport", "ResourceLimit", "UnknownFormat",
    "build_ball", "verify_local_structure", "export", "import_ball",
]


class ResourceLimit(RuntimeError):
    pass


class UnknownFormat(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    weights: tuple[int, ...]
    depth: int
    word: str

    @property
    def diagram(self) -> CurveDiagram:
        return CurveDiagram(self.weights)


@dataclass
class GammaBall:
    radius: int
    n_range: int
    vertices: list[Vertex] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    simplices: list[tuple[int, int, int]] = field(default_factory=list)
    expanded: list[int] = field(default_factory=list)

    def index(self) -> dict[tuple[int, ...], int]:
        return {v.weights: i for i, v in enumerate(self.vertices)}

    def adjacency(self) -> dict[int, set[int]]:
        adj = {i: set() for i in range(len(self.vertices))}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def __eq__(self, other):
        if not isinstance(other, GammaBall):
            return NotImplemented
        return export(self, "json") == export(other, "json")


def edge_words(n_range: int) -> list[str]:
    return [StabilizerNormalForm(n, 0, g).word() + "d"
            for g in (0, 1) for n in range(-n_range, n_range + 1)]


@lru_cache(maxsize=None)
def _neighbor_weights(n_range: int) -> tuple[tuple[int, ...], ...]:
    return tuple(apply_letters(e, BASE.weights) for e in edge_words(n_range))


def build_ball(radius: int, n_range: int = 6, vertex_cap: int = 100_000,
               max_radius: int = 3) -> GammaBall:
    """Breadth-first ball of the given radius around the base vertex."""
    if radius < 0 or radius > max_radius:
        raise ResourceLimit(f"radius must lie in 0..{max_radius}")
    ball = GammaBall(radius, n_range, [Vertex(BASE.weights, 0, "")])
    where = {BASE.weights: 0}
    edges = set()
    words = edge_words(n_range)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        v = ball.vertices[i]
        if v.depth >= radius:
            continue
        ball.expanded.append(i)
        for e, nw in zip(words, _neighbor_weights(n_range)):
            w = apply_letters(v.word, nw)
            j = where.get(w)
            if j is None:
                if len(ball.vertices) >= vertex_cap:
                    raise ResourceLimit(f"more than {vertex_cap} vertices")
                j = where[w] = len(ball.vertices)
                ball.vertices.append(Vertex(w, v.depth + 1, v.word + e))
                queue.append(j)
            edges.add((min(i, j), max(i, j)))
    ball.edges = sorted(edges)
    adj = ball.adjacency()
    ball.simplices = sorted(
        (a, b, c) for a, b in ball.edges for c in adj[a] & adj[b] if c > b
    )
    return ball


@dataclass(frozen=True)
class LocalStructureReport:
    """Simplex counts on edges, all relative to the explored ball."""

    interior_edges: int
    boundary_edges: tuple[tuple[int, int], ...]
    bad_edges: tuple[tuple[tuple[int, int], int], ...]  # (edge, simplex count)
    base_simplex: tuple[int, ...] | None
    base_simplex_ok: bool

    @property
    def ok(self) -> bool:
        return not self.bad_edges and self.base_simplex_ok

    def summary(self) -> str:
        verdict = "ok" if self.ok else "FAILED"
        return (f"within explored ball: {self.interior_edges} interior edges, "
                f"{len(self.bad_edges)} not on exactly one 2-simplex, "
                f"{len(self.boundary_edges)} boundary edges exempt; "
                f"base simplex {'is' if self.base_simplex_ok else 'is not'} "
                f"{{P, delta P, delta^2 P}}: {verdict}")


def verify_local_structure(ball: GammaBall) -> LocalStructureReport:
    """Interior edges join two expanded vertices, so both neighbour scans are
    known; each must have exactly one common neighbour."""
    adj = ball.adjacency()
    expanded = set(ball.expanded)
    interior, boundary, bad = 0, [], []
    for a, b in ball.edges:
        if a in expanded and b in expanded:
            interior += 1
            k = len(adj[a] & adj[b])
            if k != 1:
                bad.append(((a, b), k))
        else:
            boundary.append((a, b))
    base_simplex, base_ok = None, True
    if ball.edges:
        where = ball.index()
        rotated = [where.get(apply_letters(w, BASE.weights)) for w in ("d", "dd")]
        if None in rotated:
            base_ok = False
        else:
            base_simplex = tuple(sorted([0] + rotated))
            # the simplex is recorded only when the delta P vertex was expanded
            base_ok = base_simplex in ball.simplices or rotated[0] not in expanded
            base_ok = base_ok and apply_letters("ddd", BASE.weights) == BASE.weights
    return LocalStructureReport(interior, tuple(boundary), tuple(bad), base_simplex, base_ok)


def _node(i: int) -> str:
    return "v_P" if i == 0 else f"v{i}"


def _to_dict(ball: GammaBall) -> dict:
    return {
        "radius": ball.radius,
        "n_range": ball.n_range,
        "vertex_count": len(ball.vertices),
        "vertices": [{"id": i, "depth": v.depth, "word": v.word, "weights": list(v.weights)}
                     for i, v in enumerate(ball.vertices)],
        "edges": [list(e) for e in ball.edges],
        "simplices": [list(s) for s in ball.simplices],
        "expanded": list(ball.expanded),
    }


def _to_dot(ball: GammaBall) -> str:
    lines = ["graph Gamma {"]
    for i, v in enumerate(ball.vertices):
        label = "v_P" if i == 0 else f"depth {v.depth}\\nP.Q={v.diagram.base_intersection}"
        lines.append(f'  {_node(i)} [label="{label}"];')
    for a, b in ball.edges:
        lines.append(f"  {_node(a)} -- {_node(b)};")
    for k, s in enumerate(ball.simplices):
        members = "; ".join(_node(i) for i in s)
        lines.append(f'  subgraph cluster_simplex_{k} {{ style=filled; color="#dde8f5"; {members}; }}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(ball: GammaBall, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(_to_dict(ball), separators=(",", ":")) + "\n").encode()
    if fmt == "dot":
        return _to_dot(ball).encode()
    raise UnknownFormat(f"unknown export format {fmt!r}; use dot or json")


def import_ball(data) -> GammaBall:
    obj = json.loads(data) if isinstance(data, (str, bytes)) else data
    vertices = [Vertex(tuple(v["weights"]), v["depth"], v["word"]) for v in obj["vertices"]]
    return GammaBall(
        obj["radius"], obj["n_range"], vertices,
        [tuple(e) for e in obj["edges"]],
        [tuple(s) for s in obj["simplices"]],
        list(obj["expanded"]),
    )
