"""Maps of simplicial sets, hom enumeration, isomorphism search."""

from __future__ import annotations

from .complex import Cell, SimplicialSet
from .simplex import Simplex, degenerate_word, nondeg


class SimplicialMap:
    """A map of simplicial sets, stored on nondegenerate cells."""

    def __init__(self, source: SimplicialSet, target: SimplicialSet,
                 data: dict[Cell, Simplex], check: bool = True):
        self.source = source
        self.target = target
        self.data = dict(data)
        if check:
            self.validate()

    def __call__(self, x: Simplex) -> Simplex:
        return degenerate_word(self.data[x.base], x.word)

    def validate(self) -> None:
        for c in self.source.all_cells():
            if c not in self.data:
                raise ValueError(f"no image for cell {c}")
            img = self.data[c]
            if img.dim != c[0]:
                raise ValueError(f"image of {c} has dimension {img.dim}")
            bd, bi = img.base
            if not (0 <= bi < self.target.n_cells(bd)):
                raise ValueError(f"image of {c} names unknown cell {img.base}")
            if c[0] >= 1:
                for i, f in enumerate(self.source.faces[c]):
                    if self.target.face(img, i) != self(f):
                        raise ValueError(
                            f"map does not commute with d_{i} at {c}")

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other."""
        if other.target is not self.source:
            other_cells = set(other.target.all_cells())
            if other_cells != set(self.source.all_cells()):
                raise ValueError("composition across different complexes")
        data = {c: self(img) for c, img in other.data.items()}
        return SimplicialMap(other.source, self.target, data, check=False)

    def is_isomorphism(self) -> bool:
        if self.source.counts != self.target.counts:
            return False
        for d in self.source.counts:
            imgs = {self.data[(d, i)] for i in range(self.source.counts[d])}
            if any(x.is_degenerate for x in imgs):
                return False
            if len(imgs) != self.source.counts[d]:
                return False
        return True

    def inverse(self) -> "SimplicialMap":
        assert self.is_isomorphism()
        data = {img.base: nondeg(*c) for c, img in self.data.items()}
        return SimplicialMap(self.target, self.source, data, check=False)

    @classmethod
    def identity(cls, X: SimplicialSet) -> "SimplicialMap":
        return cls(X, X, {c: nondeg(*c) for c in X.all_cells()}, check=False)


def simplex_by_chain(Y: SimplicialSet, chain) -> Simplex:
    """Simplex of Y whose vertex-label sequence is ``chain``.

    Only meaningful when the nondegenerate cells of Y are labelled by
    their strictly ascending vertex-label tuples (nerves, standard
    simplices and most built complexes here are).
    """
    chain = tuple(chain)
    stripped, word = [], []
    for t, v in enumerate(chain):
        if stripped and stripped[-1] == v:
            word.append(t - 1)
        else:
            stripped.append(v)
    cell = Y.cell_with_label(tuple(stripped))
    return Simplex(tuple(sorted(word, reverse=True)), cell)


def unwrap_label(lab):
    """Singleton chain labels stand for their only entry."""
    if isinstance(lab, tuple) and len(lab) == 1:
        return lab[0]
    return lab


def map_by_vertices(X: SimplicialSet, Y: SimplicialSet, vertex_fn) -> SimplicialMap:
    """Build a map from a function on vertex labels.

    Each nondegenerate cell of X is sent to the Y-simplex whose chain is
    the image of its vertex-label chain under ``vertex_fn``.  Labels that
    are singleton tuples (nerve and standard simplex vertices) are
    unwrapped before the function sees them.
    """
    data = {}
    for c in X.all_cells():
        chain = tuple(vertex_fn(unwrap_label(lab))
                      for lab in X.vertex_labels(nondeg(*c)))
        data[c] = simplex_by_chain(Y, chain)
    return SimplicialMap(X, Y, data)


def enumerate_homs(A: SimplicialSet, X: SimplicialSet, limit: int | None = None):
    """All simplicial maps A -> X by backtracking over cells."""
    cells = sorted(A.all_cells())
    pools = {d: list(X.simplices(d)) for d in A.counts}
    out = []

    def fits(partial, c, cand):
        for i, f in enumerate(A.faces[c]):
            want = degenerate_word(partial[f.base], f.word)
            if X.face(cand, i) != want:
                return False
        return True

    def rec(k, partial):
        if limit is not None and len(out) >= limit:
            return
        if k == len(cells):
            out.append(SimplicialMap(A, X, dict(partial), check=False))
            return
        c = cells[k]
        for cand in pools[c[0]]:
            if c[0] == 0 or fits(partial, c, cand):
                partial[c] = cand
                rec(k + 1, partial)
                del partial[c]

    rec(0, {})
    return out


def find_isomorphism(X: SimplicialSet, Y: SimplicialSet) -> SimplicialMap | None:
    """Search for an isomorphism, dimension by dimension."""
    if X.counts != Y.counts:
        return None
    cells = sorted(X.all_cells())

    def rec(k, assign, used):
        if k == len(cells):
            return dict(assign)
        c = cells[k]
        d = c[0]
        for j in range(Y.n_cells(d)):
            t = (d, j)
            if t in used:
                continue
            if d >= 1:
                ok = True
                for i, f in enumerate(X.faces[c]):
                    want = degenerate_word(assign[f.base], f.word)
                    if Y.face(nondeg(d, j), i) != want:
                        ok = False
                        break
                if not ok:
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
