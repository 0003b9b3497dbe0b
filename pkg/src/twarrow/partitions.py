"""Ordered partitions of posets and the chain-subset mapping-space model.

An ordered partition splits a finite poset into a lower and an upper
part so that no upper element sits strictly below a lower one.
Collapsing the nerve of the upper part gives a pointed quotient; doing
the same on both sides leaves a quotient with two distinguished
vertices.  The totally ordered subsets meeting both parts form the
chain poset of the partition, ordered by inclusion.  Cutting a flag of
such subsets at the first upper element of the smallest one (or the
last lower element, or both) is an idempotent truncation operator, and
equality of truncations is a simplicial congruence on the nerve of the
chain poset.  The quotients by these congruences reproduce the
rigidification mapping spaces of the collapsed complexes out of a lower
vertex, resp. between the two distinguished vertices; the necklace
module supplies the independent check of that claim.

Edges of the chain poset additionally carry a marking derived from a
scaling of the ambient nerve: the edge S into T cuts T into segments
between consecutive members of S, and it is marked exactly when every
segment maps to an all-thin simplex of the two-sided quotient.  A
single thin triangle bridged by its long edge is the generating case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core.complex import Cell, SimplicialSet, point
from .core.maps import SimplicialMap, map_by_vertices, simplex_by_chain, unwrap_label
from .core.ops import GlueResult, pushout, quotient_by_key
from .core.poset import Poset, nerve, total_order
from .core.simplex import Simplex, nondeg
from .decor import Decorated, flat, push_decoration
from .zoo import boxplus_complex, join_parts, q_complex, square_complex, star_complex

SIDES = ("R", "L", "A")


@dataclass(frozen=True)
class OrderedPartition:
    """A poset split into a lower and an upper part.

    Every element belongs to exactly one part, and no upper element may
    sit strictly below a lower one; an upper element is either above or
    incomparable to each lower element.
    """

    poset: Poset
    lower: frozenset
    upper: frozenset

    def __post_init__(self):
        object.__setattr__(self, "lower", frozenset(self.lower))
        object.__setattr__(self, "upper", frozenset(self.upper))
        elems = set(self.poset.elements)
        overlap = self.lower & self.upper
        if overlap:
            raise ValueError(f"overlap: {sorted(map(repr, overlap))} lie in both parts")
        off = (self.lower | self.upper) ^ elems
        if off:
            raise ValueError(
                f"parts do not cover the poset exactly: {sorted(map(repr, off))}")
        for y in self.upper:
            for x in self.lower:
                if self.poset.lt(y, x):
                    raise ValueError(
                        f"order violation: upper element {y!r} below lower {x!r}")

    def opposite(self) -> "OrderedPartition":
        return OrderedPartition(self.poset.opposite(), self.upper, self.lower)


def make_partition(poset: Poset, lower, upper) -> OrderedPartition:
    return OrderedPartition(poset, frozenset(lower), frozenset(upper))


@dataclass(frozen=True)
class DecoratedPartition:
    """A scaled complex together with the partition of its vertex poset."""

    part: OrderedPartition
    dec: Decorated


@lru_cache(maxsize=None)
def q_partition(n: int) -> DecoratedPartition:
    part = make_partition(total_order(2 * n + 1), range(n + 1),
                          range(n + 1, 2 * n + 2))
    return DecoratedPartition(part, q_complex(n))


@lru_cache(maxsize=None)
def star_partition(n: int) -> DecoratedPartition:
    lo, hi = join_parts("star", n)
    return DecoratedPartition(make_partition(total_order(n + 1), lo, hi),
                              star_complex(n))


@lru_cache(maxsize=None)
def boxplus_partition(n: int) -> DecoratedPartition:
    lo, hi = join_parts("boxplus", n)
    return DecoratedPartition(make_partition(total_order(2 * n + 2), lo, hi),
                              boxplus_complex(n))


@lru_cache(maxsize=None)
def square_partition(n: int) -> DecoratedPartition:
    # the early-switch scaling is the one the cone collapse preserves
    lo, hi = join_parts("square", n)
    part = make_partition(total_order(n).product(total_order(1)), lo, hi)
    return DecoratedPartition(part, square_complex(n, "early")[0])


# -- totally ordered subsets -------------------------------------------


def _ranks(P: Poset) -> dict:
    return {e: (sum(1 for f in P.elements if P.lt(f, e)), P.elements.index(e))
            for e in P.elements}


def sorted_chain(P: Poset, S) -> tuple:
    """A totally ordered subset listed in increasing order."""
    ranks = _ranks(P)
    out = tuple(sorted(S, key=ranks.__getitem__))
    for u, v in zip(out, out[1:]):
        if not P.lt(u, v):
            raise ValueError(f"{sorted(map(repr, S))} is not totally ordered")
    return out


def is_chain_element(part: OrderedPartition, S) -> bool:
    S = set(S)
    if not S:
        return False
    P = part.poset
    if any(not (P.leq(u, v) or P.leq(v, u))
           for u, v in itertools.combinations(S, 2)):
        return False
    chain = sorted_chain(P, S)
    return chain[0] in part.lower and chain[-1] in part.upper


_chain_poset_cache: dict = {}


def chain_poset(part: OrderedPartition) -> Poset:
    """All totally ordered subsets meeting both parts correctly, under
    inclusion."""
    key = (part.poset.elements, part.poset.le, part.lower, part.upper)
    if key not in _chain_poset_cache:
        P = part.poset
        if len(P.elements) > 16:
            raise ValueError("chain poset enumeration needs a small poset")
        ranks = _ranks(P)
        els = [frozenset(c)
               for r in range(1, len(P.elements) + 1)
               for c in itertools.combinations(P.elements, r)
               if is_chain_element(part, c)]
        els.sort(key=lambda S: (len(S), tuple(sorted(ranks[e] for e in S))))
        pairs = [(S, T) for S in els for T in els if S <= T]
        _chain_poset_cache[key] = Poset(els, pairs)
    return _chain_poset_cache[key]


def chain_poset_at(part: OrderedPartition, j) -> Poset:
    """The slice of the chain poset on subsets with smallest element j."""
    if j not in part.lower:
        raise ValueError(f"{j!r} is not in the lower part")
    P = chain_poset(part)
    keep = [S for S in P.elements if sorted_chain(part.poset, S)[0] == j]
    return P.subposet(keep)


# -- truncation and its congruences ------------------------------------


def truncate_chain(part: OrderedPartition, chain, side: str):
    """Truncate an ascending flag of chain-poset elements.

    Side "R" keeps, in every set, the elements up to the first upper
    element of the smallest set; "L" keeps those from its last lower
    element on; "A" applies both.  Repeated sets are allowed, so the
    flag of any nerve simplex, degenerate or not, can be fed in.
    """
    chain = tuple(frozenset(S) for S in chain)
    if not chain:
        return chain
    for S, T in zip(chain, chain[1:]):
        if not S <= T:
            raise ValueError("flag is not ascending")
    if side == "A":
        return truncate_chain(part, truncate_chain(part, chain, "R"), "L")
    if side not in ("R", "L"):
        raise ValueError(f"unknown truncation side {side!r}")
    P = part.poset
    first = sorted_chain(P, chain[0])
    if side == "R":
        pivot = next(s for s in first if s in part.upper)
        return tuple(frozenset(s for s in S if P.leq(s, pivot)) for S in chain)
    pivot = next(s for s in reversed(first) if s in part.lower)
    return tuple(frozenset(s for s in S if P.leq(pivot, s)) for S in chain)


def simplex_flag(N: SimplicialSet, s: Simplex) -> tuple:
    """The vertex chain of a nerve simplex, repeats included."""
    return tuple(unwrap_label(lab) for lab in N.vertex_labels(s))


def truncate(part: OrderedPartition, N: SimplicialSet, s: Simplex,
             side: str) -> Simplex:
    """Truncation of a chain-poset nerve simplex, as a simplex again."""
    return simplex_by_chain(N, truncate_chain(part, simplex_flag(N, s), side))


def congruence_quotient(part: OrderedPartition, side: str, j=None,
                        top_dim: int | None = None) -> tuple[GlueResult, SimplicialSet]:
    """Quotient of the chain-poset nerve by equality of truncations.

    The key relation must be a simplicial congruence; quotient_by_key
    re-checks that on the closed classes and raises if propagation ever
    merges differently keyed simplices.
    """
    P = chain_poset(part) if j is None else chain_poset_at(part, j)
    N = nerve(P, top_dim=top_dim)

    def key(s: Simplex):
        return truncate_chain(part, simplex_flag(N, s), side)

    return quotient_by_key(N, key, top_dim=top_dim), N


def mapping_space(part: OrderedPartition, mode: str, j=None,
                  top_dim: int | None = None) -> SimplicialSet:
    """The chain-poset model of a mapping space of the collapsed nerve.

    Mode "right" takes a lower vertex j and models maps from j to the
    collapsed upper part; mode "two_sided" models maps between the two
    distinguished vertices of the fully collapsed nerve.
    """
    if mode == "right":
        res, _ = congruence_quotient(part, "R", j=j, top_dim=top_dim)
    elif mode == "two_sided":
        res, _ = congruence_quotient(part, "A", top_dim=top_dim)
    else:
        raise ValueError(f"unknown mapping-space mode {mode!r}")
    return res.complex


# -- collapsed nerves --------------------------------------------------


@dataclass
class Collapse:
    """A pointed quotient of the (possibly scaled) nerve of a partition."""

    dec: Decorated
    quot: SimplicialMap
    base0: Cell | None
    base1: Cell | None


def _to_point(A: SimplicialSet) -> SimplicialMap:
    pt = point()
    data = {c: Simplex(tuple(range(c[0] - 1, -1, -1)), (0, 0))
            for c in A.all_cells()}
    return SimplicialMap(A, pt, data, check=False)


def _part_nerve(part: OrderedPartition, dec: Decorated | None) -> Decorated:
    if dec is None:
        return flat(nerve(part.poset))
    return dec


def collapse_upper(part: OrderedPartition, dec: Decorated | None = None) -> Collapse:
    """The nerve with the upper part crushed to a point."""
    dec = _part_nerve(part, dec)
    A = nerve(part.poset.subposet(part.upper))
    to_pt = _to_point(A)
    res = pushout(to_pt, map_by_vertices(A, dec.space, lambda e: e))
    qdec = push_decoration(res, [flat(to_pt.target), dec])
    base1 = res.maps[0](nondeg(0, 0)).base
    return Collapse(qdec, res.maps[1], None, base1)


def collapse_both(part: OrderedPartition, dec: Decorated | None = None) -> Collapse:
    """The nerve with both parts crushed, one point each."""
    first = collapse_upper(part, dec)
    A = nerve(part.poset.subposet(part.lower))
    to_pt = _to_point(A)
    inc = first.quot.compose(map_by_vertices(A, first.quot.source, lambda e: e))
    res = pushout(to_pt, inc)
    qdec = push_decoration(res, [flat(to_pt.target), first.dec])
    base0 = res.maps[0](nondeg(0, 0)).base
    base1 = res.maps[1](nondeg(*first.base1)).base
    return Collapse(qdec, res.maps[1].compose(first.quot), base0, base1)


def vertex_cell(X: SimplicialSet, e) -> Cell:
    for c in X.cells(0):
        if unwrap_label(X.labels.get(c, c)) == e:
            return c
    raise ValueError(f"unknown vertex {e!r}")


# -- the derived marking on chain-poset edges --------------------------


def _segments(P: Poset, S, T):
    t = sorted_chain(P, T)
    cuts = sorted(t.index(s) for s in S)
    bounds = [0] + cuts + [len(t) - 1]
    return [t[a:b + 1] for a, b in zip(bounds, bounds[1:]) if b > a]


def marked_chain_edge(part: OrderedPartition, col: Collapse, S, T) -> bool:
    """Markedness of the chain-poset edge from S to T.

    Cut T at the members of S; the edge is marked when each piece lands
    on an all-thin simplex of the two-sided collapse.
    """
    if not S <= T:
        raise ValueError("not an inclusion of chain elements")
    X, Q = col.quot.source, col.dec.space
    for seg in _segments(part.poset, S, T):
        img = col.quot(simplex_by_chain(X, seg))
        for tri in itertools.combinations(range(img.dim + 1), 3):
            if not col.dec.is_thin(Q.restrict(img, tri)):
                return False
    return True


def marked_chain_edges(dpart: DecoratedPartition) -> set[tuple]:
    """All marked inclusions (S, T) of the partition's chain poset."""
    col = collapse_both(dpart.part, dpart.dec)
    P = chain_poset(dpart.part)
    return {(S, T) for S in P.elements for T in P.elements
            if S < T and marked_chain_edge(dpart.part, col, S, T)}
