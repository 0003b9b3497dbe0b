"""Cosimplicial simplicial sets and their realization over a complex.

A cosimplicial object here assigns a standard simplex to each dimension
and acts on monotone maps through a vertex rule.  Realization over a
complex X is the colimit of one copy of the value per nondegenerate
simplex of X, glued along faces.
"""

from __future__ import annotations

from ..core.complex import SimplicialSet, standard_simplex
from ..core.maps import SimplicialMap, map_by_vertices
from ..core.ops import GlueResult, glue
from ..core.simplex import flag_map, nondeg


class VertexCosimplicial:
    """Cosimplicial object determined by a vertex rule.

    ``width(d)`` is the dimension of the value at [d]; the value itself
    is that standard simplex.  ``vertex(g, d_src, d_tgt, v)`` gives the
    image of vertex v under the map induced by the monotone map g
    (stored as the tuple of its values on 0..d_src).
    """

    def __init__(self, width, vertex, name="cosimplicial"):
        self.width = width
        self.vertex = vertex
        self.name = name
        self._cache: dict[int, SimplicialSet] = {}

    def at(self, d: int) -> SimplicialSet:
        if d not in self._cache:
            self._cache[d] = standard_simplex(self.width(d))
        return self._cache[d]

    def arrow(self, g: tuple[int, ...], d_src: int, d_tgt: int) -> SimplicialMap:
        assert len(g) == d_src + 1
        assert all(0 <= v <= d_tgt for v in g)
        return map_by_vertices(
            self.at(d_src), self.at(d_tgt),
            lambda v: self.vertex(g, d_src, d_tgt, v))


def mirror_join_object() -> VertexCosimplicial:
    """[d] goes to Delta^{2d+1}, the join of [d] with its reversal."""

    def vertex(g, ds, dt, v):
        if v <= ds:
            return g[v]
        return 2 * dt + 1 - g[2 * ds + 1 - v]

    return VertexCosimplicial(lambda d: 2 * d + 1, vertex, "mirror_join")


def cone_object() -> VertexCosimplicial:
    """[d] goes to Delta^{d+1}, the cone on [d]."""

    def vertex(g, ds, dt, v):
        return g[v] if v <= ds else dt + 1

    return VertexCosimplicial(lambda d: d + 1, vertex, "cone")


def mirror_cone_object() -> VertexCosimplicial:
    """[d] goes to Delta^{2d+2}, the cone on the mirrored join."""

    def vertex(g, ds, dt, v):
        if v <= ds:
            return g[v]
        if v <= 2 * ds + 1:
            return 2 * dt + 1 - g[2 * ds + 1 - v]
        return 2 * dt + 2

    return VertexCosimplicial(lambda d: 2 * d + 2, vertex, "mirror_cone")


def coface(i: int, d: int) -> tuple[int, ...]:
    """The injection [d-1] -> [d] missing i, as a value tuple."""
    return tuple(v if v < i else v + 1 for v in range(d))


def realize(F: VertexCosimplicial, X: SimplicialSet,
            top_dim: int | None = None) -> GlueResult:
    """Colimit of F over the simplices of X.

    The result's pieces are indexed by the nondegenerate cells of X in
    sorted order; ``maps[k]`` embeds (not necessarily injectively) the
    value of F at the k-th cell.
    """
    cells = sorted(X.all_cells())
    pos = {c: k for k, c in enumerate(cells)}
    pieces = [F.at(c[0]) for c in cells]
    rels = []
    for c in cells:
        d = c[0]
        if d == 0:
            continue
        for i, f in enumerate(X.faces[c]):
            into_c = F.arrow(coface(i, d), d - 1, d)
            onto_base = F.arrow(flag_map(f.word, f.base[0]), d - 1, f.base[0])
            A = F.at(d - 1)
            for a in A.all_cells():
                rels.append(((pos[c], into_c(nondeg(*a))),
                             (pos[f.base], onto_base(nondeg(*a)))))
    return glue(pieces, rels, top_dim=top_dim)
