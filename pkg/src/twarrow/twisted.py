"""Twisted arrow complexes of scaled inputs, their slices and cone fibers.

An n-simplex of the twisted arrow complex of C is a scaled map into C
from the mirror join of Delta^n with its own reversal, stored as its
underlying witness: a (2n+1)-simplex of C whose restrictions to the
mirror-join thin triangles are thin.  Faces and degeneracies act through
the cosimplicial structure of the mirror join, so the k-th face deletes
the position pair {k, 2n+1-k} and the j-th degeneracy doubles a mirror
pair of positions.  The slice and cone-fiber complexes are built the
same way from the cone and mirror-cone shapes, and all three share one
normalization engine below.

Simplex identity is the witness itself; no quotient is taken.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import DIM_CAP
from .core.complex import Cell, SimplicialSet, point, standard_simplex, subcomplex
from .core.maps import SimplicialMap, map_by_vertices, simplex_by_chain, unwrap_label
from .core.ops import ProductData, op_simplex, opposite, product, pushout
from .core.poset import Poset, nerve
from .core.simplex import Simplex, collapses_to_word, nondeg, strip_collapse
from .decor import Decorated, flat, pull_decoration, push_decoration
from .zoo import (boxplus_complex, boxplus_thin_triangle, cone_inclusion,
                  cone_retraction, q_complex, q_thin_triangle)


# -- the three witness shapes ------------------------------------------


class _MirrorShape:
    """Witnesses are (2n+1)-simplices, structure maps act in mirror pairs."""

    def witness_dim(self, n: int) -> int:
        return 2 * n + 1

    def face_positions(self, n: int, k: int) -> tuple[int, ...]:
        return (k, 2 * n + 1 - k)

    def degeneracy_positions(self, n: int, j: int) -> tuple[int, ...]:
        # an n-cell is s_j of an (n-1)-cell iff both positions collapse
        return (j, 2 * n - j)

    def thin_triples(self, n: int):
        w = self.witness_dim(n)
        return [t for t in itertools.combinations(range(w + 1), 3)
                if q_thin_triangle(n, t)]

    def label(self, chain, n: int):
        return tuple((chain[i], chain[2 * n + 1 - i]) for i in range(n + 1))


class _ConeShape:
    """Witnesses are (n+1)-simplices ending at the slice vertex."""

    def witness_dim(self, n: int) -> int:
        return n + 1

    def face_positions(self, n: int, k: int) -> tuple[int, ...]:
        return (k,)

    def degeneracy_positions(self, n: int, j: int) -> tuple[int, ...]:
        return (j,)

    def thin_triples(self, n: int):
        return list(itertools.combinations(range(n + 1), 3))

    def label(self, chain, n: int):
        return tuple(chain[: n + 1])


class _MirrorConeShape:
    """Witnesses are (2n+2)-simplices, constant at the cone tail."""

    def witness_dim(self, n: int) -> int:
        return 2 * n + 2

    def face_positions(self, n: int, k: int) -> tuple[int, ...]:
        return (k, 2 * n + 1 - k)

    def degeneracy_positions(self, n: int, j: int) -> tuple[int, ...]:
        return (j, 2 * n - j)

    def thin_triples(self, n: int):
        w = self.witness_dim(n)
        return [t for t in itertools.combinations(range(w + 1), 3)
                if boxplus_thin_triangle(n, t)]

    def label(self, chain, n: int):
        return tuple(chain[: n + 1])


# -- the shared builder ------------------------------------------------


@dataclass
class WitnessComplex:
    """A complex whose nondegenerate cells carry witness simplices of a
    source complex, together with the tables to go back and forth."""

    dec: Decorated
    source: Decorated
    max_dim: int
    witness: dict
    cell_of: dict
    shape: object

    @property
    def space(self) -> SimplicialSet:
        return self.dec.space

    def normalize(self, x: Simplex, n: int) -> Simplex:
        """The cell-level simplex named by an arbitrary valid witness."""
        shape, phi, m = self.shape, list(range(n + 1)), n
        while True:
            S = set(x.word)
            j = next((j for j in range(m)
                      if all(p in S for p in shape.degeneracy_positions(m, j))),
                     None)
            if j is None:
                break
            for p in sorted(shape.degeneracy_positions(m, j), reverse=True):
                x = strip_collapse(x, p)
            phi = [v if v <= j else v - 1 for v in phi]
            m -= 1
        word = collapses_to_word({t for t in range(n) if phi[t] == phi[t + 1]})
        return Simplex(word, self.cell_of[x])


def _is_shape_degenerate(shape, x: Simplex, n: int) -> bool:
    S = set(x.word)
    return any(all(p in S for p in shape.degeneracy_positions(n, j))
               for j in range(n))


def _build(shape, src: Decorated, max_dim: int, extra_ok=None) -> WitnessComplex:
    space = src.space
    counts, faces, labels = {}, {}, {}
    witness, cell_of = {}, {}
    for n in range(max_dim + 1):
        triples = shape.thin_triples(n)
        found = []
        for x in space.simplices(shape.witness_dim(n)):
            if _is_shape_degenerate(shape, x, n):
                continue
            if extra_ok is not None and not extra_ok(n, x):
                continue
            if all(src.is_thin(space.restrict(x, t)) for t in triples):
                found.append(x)
        found.sort()
        if found:
            counts[n] = len(found)
        for i, x in enumerate(found):
            witness[(n, i)] = x
            cell_of[x] = (n, i)
            labels[(n, i)] = shape.label(
                tuple(map(unwrap_label, space.vertex_labels(x))), n)
    if len(set(labels.values())) < len(labels):
        labels = {}
    out = WitnessComplex(Decorated(SimplicialSet(counts, {}, labels)),
                         src, max_dim, witness, cell_of, shape)
    for (n, i), x in witness.items():
        if n >= 1:
            faces[(n, i)] = tuple(
                out.normalize(space.face_many(x, shape.face_positions(n, k)),
                              n - 1)
                for k in range(n + 1))
    built = SimplicialSet(counts, faces, labels)
    marked = frozenset(
        c for c in built.cells(1)
        if all(src.is_thin(space.restrict(witness[c], t))
               for t in itertools.combinations(
                   range(shape.witness_dim(1) + 1), 3)))
    out.dec = Decorated(built, marked=marked)
    return out


def _vertex_cell(space: SimplicialSet, y) -> Cell:
    hits = [c for c in space.cells(0)
            if unwrap_label(space.labels.get(c, c)) == y or c == y]
    if len(hits) != 1:
        raise ValueError(f"unknown vertex {y!r}")
    return hits[0]


def _constant_simplex(cell: Cell, d: int) -> Simplex:
    assert cell[0] == 0
    return Simplex(tuple(range(d - 1, -1, -1)), cell)


# -- the twisted arrow complex -----------------------------------------


def twisted_arrow(src: Decorated, max_dim: int) -> WitnessComplex:
    """Twisted arrow complex of a scaled input, truncated at max_dim.

    Vertices are the edges of the input, an n-cell is a (2n+1)-simplex
    whose two halves read an n-chain of arrows with the target chain
    reversed.  An edge is marked when its witness is thin on all four
    of its triangles, not just the mirror-join ones.
    """
    if max_dim > DIM_CAP:
        raise ValueError(f"max_dim {max_dim} above the dimension cap {DIM_CAP}")
    return _build(_MirrorShape(), src, max_dim)


def tw_projection(twc: WitnessComplex, top_dim: int | None = None):
    """The map to (input) x (input reversed), by restriction to the two
    halves of each witness.  Returns (map, product data, decorated target).
    """
    C = twc.source
    cap = twc.max_dim if top_dim is None else top_dim
    pdata = product(C.space, opposite(C.space), top_dim=cap)
    Cop = op_decorated(C)
    thin = frozenset(
        c for c in pdata.complex.cells(2)
        if C.is_thin(pdata.pr1(nondeg(*c))) and Cop.is_thin(pdata.pr2(nondeg(*c))))
    marked = frozenset(
        c for c in pdata.complex.cells(1)
        if C.is_marked(pdata.pr1(nondeg(*c))) and Cop.is_marked(pdata.pr2(nondeg(*c))))
    data = {}
    for c, x in twc.witness.items():
        n = c[0]
        sx = C.space.restrict(x, range(n + 1))
        sy = op_simplex(C.space.restrict(x, range(n + 1, 2 * n + 2)))
        data[c] = _pair_simplex(pdata, sx, sy)
    f = SimplicialMap(twc.space, pdata.complex, data)
    return f, pdata, Decorated(pdata.complex, thin=thin, marked=marked)


def op_decorated(dec: Decorated) -> Decorated:
    """The same decoration carried over the reversed complex."""
    return Decorated(opposite(dec.space), thin=dec.thin, marked=dec.marked)


def _pair_simplex(pdata: ProductData, sx: Simplex, sy: Simplex) -> Simplex:
    """The product simplex with the given jointly arbitrary components."""
    common = sorted(set(sx.word) & set(sy.word), reverse=True)
    for t in common:
        sx, sy = strip_collapse(sx, t), strip_collapse(sy, t)
    return Simplex(collapses_to_word(common), pdata.cell_of(sx, sy))


def tw_functor(f: SimplicialMap, src_tw: WitnessComplex,
               tgt_tw: WitnessComplex) -> SimplicialMap:
    """The induced map of twisted arrow complexes of a scaled map."""
    data = {c: tgt_tw.normalize(f(x), c[0]) for c, x in src_tw.witness.items()}
    return SimplicialMap(src_tw.space, tgt_tw.space, data)


def tw_fiber(twc: WitnessComplex, x=None, y=None):
    """Fiber of the twisted arrow complex over vertices of the input.

    Keeps the cells whose witness is constant at x on the source half,
    resp. constant at y on the reversed half; either side may be None.
    Returns the decorated fiber and its inclusion.
    """
    C = twc.source.space
    cx = None if x is None else _vertex_cell(C, x)
    cy = None if y is None else _vertex_cell(C, y)
    keep = set()
    for c, w in twc.witness.items():
        n = c[0]
        if cx is not None and \
                C.restrict(w, range(n + 1)) != _constant_simplex(cx, n):
            continue
        if cy is not None and \
                C.restrict(w, range(n + 1, 2 * n + 2)) != _constant_simplex(cy, n):
            continue
        keep.add(c)
    sub, incl_data = subcomplex(twc.space, keep)
    incl = SimplicialMap(sub, twc.space, incl_data)
    return pull_decoration(incl, twc.dec), incl


# -- the classical oracle ----------------------------------------------


def tw_poset(P: Poset) -> Poset:
    """Pairs a <= b, ordered by (a, b) <= (a', b') iff a <= a', b' <= b."""
    elems = [(a, b) for a in P.elements for b in P.elements if P.leq(a, b)]
    pairs = [(p, q) for p in elems for q in elems
             if P.leq(p[0], q[0]) and P.leq(q[1], p[1])]
    return Poset(elems, pairs)


def tw_comparison(P: Poset, twc: WitnessComplex) -> SimplicialMap:
    """Canonical map from the nerve of the pair poset into the twisted
    arrow complex of the nerve of P.

    A chain of pairs (a_0,b_0) <= ... <= (a_k,b_k) goes to the cell
    witnessed by the chain a_0 ... a_k b_k ... b_0.  On nerves this is
    an isomorphism in every truncation degree.
    """
    TP = nerve(tw_poset(P), top_dim=twc.max_dim)
    data = {}
    for c in TP.all_cells():
        chain = TP.labels[c]
        wit = tuple(a for a, _ in chain) + tuple(b for _, b in reversed(chain))
        data[c] = twc.normalize(simplex_by_chain(twc.source.space, wit), c[0])
    return SimplicialMap(TP, twc.space, data)


# -- slices and cone fibers --------------------------------------------


def slice_outer(src: Decorated, y, max_dim: int) -> WitnessComplex:
    """The outer slice at a vertex: n-cells are (n+1)-simplices ending
    at y whose triangles away from the cone point are thin.  An edge is
    marked when its witness triangle is thin."""
    cy = _vertex_cell(src.space, y)

    def ok(n, x):
        return src.space.vertices(x)[n + 1] == cy

    return _build(_ConeShape(), src, max_dim, extra_ok=ok)


def slice_projection(slc: WitnessComplex) -> SimplicialMap:
    """Forget the cone point; lands in the underlying input complex."""
    data = {c: slc.source.space.restrict(x, range(c[0] + 1))
            for c, x in slc.witness.items()}
    return SimplicialMap(slc.space, slc.source.space, data)


def cone_fiber_complex(src: Decorated, y, max_dim: int) -> WitnessComplex:
    """n-cells are (2n+2)-simplices totally degenerate at y from
    position n+1 on, thin on the mirror-cone triangles."""
    cy = _vertex_cell(src.space, y)
    C = src.space

    def ok(n, x):
        return C.restrict(x, range(n + 1, 2 * n + 3)) == \
            _constant_simplex(cy, n + 1)

    return _build(_MirrorConeShape(), src, max_dim, extra_ok=ok)


@dataclass
class ConeFiberSpan:
    """The cone fiber at a vertex with its two legs: rho to the outer
    slice and pi to the mirrored fiber of the twisted arrow complex."""

    cone: WitnessComplex
    outer: WitnessComplex
    tw: WitnessComplex
    fiber: Decorated
    fiber_incl: SimplicialMap
    rho: SimplicialMap
    pi: SimplicialMap


def cone_fiber_span(src: Decorated, y, max_dim: int,
                    twc: WitnessComplex | None = None) -> ConeFiberSpan:
    C = src.space
    cone = cone_fiber_complex(src, y, max_dim)
    outer = slice_outer(src, y, max_dim)
    if twc is None:
        twc = twisted_arrow(src, max_dim)
    fiber, incl = tw_fiber(twc, y=y)
    back = {s.base: c for c, s in incl.data.items()}

    rho_data, pi_data = {}, {}
    for c, x in cone.witness.items():
        n = c[0]
        rho_data[c] = outer.normalize(
            C.restrict(x, list(range(n + 1)) + [2 * n + 2]), n)
        s = twc.normalize(C.face(x, 2 * n + 2), n)
        pi_data[c] = Simplex(s.word, back[s.base])
    return ConeFiberSpan(
        cone, outer, twc, fiber, incl,
        rho=SimplicialMap(cone.space, outer.space, rho_data),
        pi=SimplicialMap(cone.space, fiber.space, pi_data))


# -- the quotient retraction -------------------------------------------


def _collapse_tail(dec: Decorated, first: int):
    """Quotient of a decorated standard simplex collapsing the face on
    the positions from ``first`` up to a point."""
    X = dec.space
    A = standard_simplex(X.top_dim - first)
    inc = map_by_vertices(A, X, lambda v: v + first)
    pt = point()
    to_pt = SimplicialMap(A, pt, {c: _constant_simplex((0, 0), c[0])
                                  for c in A.all_cells()}, check=False)
    res = pushout(to_pt, inc)
    qdec = push_decoration(res, [flat(pt), dec])
    return qdec, res.maps[1]


def _induced_on_quotient(qsrc, src_quot_map, qtgt, tgt_quot_map, raw):
    # send a class to the image of any representative; validate() is the
    # well-definedness check
    rep = {}
    for u, img in src_quot_map.data.items():
        if not img.word:
            rep.setdefault(img.base, u)
    data = {c: tgt_quot_map(raw(nondeg(*rep[c]))) for c in qsrc.space.all_cells()}
    return SimplicialMap(qsrc.space, qtgt.space, data)


@dataclass
class RetractionPair:
    mirror_quot: Decorated
    cone_quot: Decorated
    incl: SimplicialMap
    retr: SimplicialMap


def retraction_pair(n: int) -> RetractionPair:
    """The mirror join sits inside the mirror cone; after collapsing the
    far halves, folding the cone point back retracts one onto the other.

    Both maps are scaled for the quotient decorations, the retraction
    splits the inclusion, and the straightening homotopy has degenerate
    components because the composite fixes every vertex class.
    """
    qq, qmap = _collapse_tail(q_complex(n), n + 1)
    bq, bmap = _collapse_tail(boxplus_complex(n), n + 1)
    incl = _induced_on_quotient(qq, qmap, bq, bmap, cone_inclusion(n))
    retr = _induced_on_quotient(bq, bmap, qq, qmap, cone_retraction(n))
    return RetractionPair(qq, bq, incl, retr)
