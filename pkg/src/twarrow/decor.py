"""Thin-triangle (scaled) and marked-edge structure on complexes.

A decoration names a set of nondegenerate 2-cells as thin and a set of
nondegenerate 1-cells as marked.  Degenerate triangles and edges always
count as thin resp. marked.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core.complex import Cell, SimplicialSet
from .core.maps import SimplicialMap, enumerate_homs, find_isomorphism
from .core.ops import GlueResult, op_simplex
from .core.simplex import Simplex, nondeg


@dataclass
class Decorated:
    space: SimplicialSet
    thin: frozenset = frozenset()
    marked: frozenset = frozenset()

    def __post_init__(self):
        self.thin = frozenset(self.thin)
        self.marked = frozenset(self.marked)
        for c in self.thin:
            if c[0] != 2 or not (0 <= c[1] < self.space.n_cells(2)):
                raise ValueError(f"thin entry {c} is not a 2-cell")
        for c in self.marked:
            if c[0] != 1 or not (0 <= c[1] < self.space.n_cells(1)):
                raise ValueError(f"marked entry {c} is not an edge")

    def is_thin(self, s: Simplex) -> bool:
        if s.dim != 2:
            raise ValueError("thinness is about 2-simplices")
        return s.is_degenerate or s.base in self.thin

    def is_marked(self, s: Simplex) -> bool:
        if s.dim != 1:
            raise ValueError("markedness is about edges")
        return s.is_degenerate or s.base in self.marked

    def thin_labels(self):
        return sorted(self.space.labels.get(c, c) for c in self.thin)

    def with_thin(self, extra) -> "Decorated":
        return replace(self, thin=self.thin | frozenset(extra))

    def with_marked(self, extra) -> "Decorated":
        return replace(self, marked=self.marked | frozenset(extra))


def flat(X: SimplicialSet) -> Decorated:
    return Decorated(X)


def sharp(X: SimplicialSet) -> Decorated:
    return Decorated(X, thin=frozenset(X.cells(2)), marked=frozenset(X.cells(1)))


def thin_sharp(X: SimplicialSet) -> Decorated:
    """All triangles thin, no marking."""
    return Decorated(X, thin=frozenset(X.cells(2)))


def preserves_decoration(f: SimplicialMap, src: Decorated, tgt: Decorated) -> bool:
    # same cell tables, not necessarily the same objects
    assert f.source.counts == src.space.counts
    assert f.target.counts == tgt.space.counts
    for c in src.thin:
        if not tgt.is_thin(f(nondeg(*c))):
            return False
    for c in src.marked:
        if not tgt.is_marked(f(nondeg(*c))):
            return False
    return True


def decorated_homs(src: Decorated, tgt: Decorated, limit: int | None = None):
    out = []
    for f in enumerate_homs(src.space, tgt.space):
        if preserves_decoration(f, src, tgt):
            out.append(f)
            if limit is not None and len(out) >= limit:
                break
    return out


def decorated_isomorphic(A: Decorated, B: Decorated) -> bool:
    iso = find_isomorphism(A.space, B.space)
    if iso is None:
        return False
    if preserves_decoration(iso, A, B) and preserves_decoration(iso.inverse(), B, A):
        return True
    # fall back to a search that honors the decoration on the fly
    return _decorated_iso_search(A, B) is not None


def _decorated_iso_search(A: Decorated, B: Decorated):
    from .core.simplex import degenerate_word

    X, Y = A.space, B.space
    if X.counts != Y.counts or len(A.thin) != len(B.thin) or \
            len(A.marked) != len(B.marked):
        return None
    cells = sorted(X.all_cells())

    def ok_pair(c, t):
        if c[0] == 2 and (c in A.thin) != (t in B.thin):
            return False
        if c[0] == 1 and (c in A.marked) != (t in B.marked):
            return False
        return True

    def rec(k, assign, used):
        if k == len(cells):
            return dict(assign)
        c = cells[k]
        d = c[0]
        for j in range(Y.n_cells(d)):
            t = (d, j)
            if t in used or not ok_pair(c, t):
                continue
            if d >= 1:
                good = True
                for i, f in enumerate(X.faces[c]):
                    if Y.face(nondeg(d, j), i) != degenerate_word(assign[f.base], f.word):
                        good = False
                        break
                if not good:
                    continue
            assign[c] = nondeg(d, j)
            used.add(t)
            res = rec(k + 1, assign, used)
            if res is not None:
                return res
            del assign[c]
            used.remove(t)
        return None

    data = rec(0, {}, set())
    if data is None:
        return None
    return SimplicialMap(X, Y, data, check=False)


def pull_decoration(incl: SimplicialMap, tgt: Decorated) -> Decorated:
    """Decoration induced on the source of a map (usually an inclusion)."""
    thin = {c for c in incl.source.cells(2) if tgt.is_thin(incl(nondeg(*c)))}
    marked = {c for c in incl.source.cells(1) if tgt.is_marked(incl(nondeg(*c)))}
    return Decorated(incl.source, thin, marked)


def push_decoration(res: GlueResult, decs: list[Decorated]) -> Decorated:
    """Decoration generated on a glued complex by piecewise decorations."""
    Q = res.complex
    thin, marked = set(), set()
    for f, dec in zip(res.maps, decs):
        for c in dec.thin:
            img = f(nondeg(*c))
            if not img.is_degenerate:
                thin.add(img.base)
        for c in dec.marked:
            img = f(nondeg(*c))
            if not img.is_degenerate:
                marked.add(img.base)
    return Decorated(Q, thin, marked)


def op_decoration(dec: Decorated, Xop: SimplicialSet) -> Decorated:
    """Same thin and marked cells, read in the opposite complex."""
    return Decorated(Xop, dec.thin, dec.marked)
