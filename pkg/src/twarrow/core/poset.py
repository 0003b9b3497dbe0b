"""Finite posets, their nerves, and small-poset enumeration."""

from __future__ import annotations

import itertools

from .complex import SimplicialSet
from .simplex import nondeg


class Poset:
    """A finite poset given by elements and a generating relation.

    The constructor takes generating pairs (a, b) meaning a <= b and
    stores the reflexive transitive closure, rejecting cycles.
    """

    def __init__(self, elements, pairs=()):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate elements")
        le = {(a, a) for a in self.elements}
        le.update((a, b) for a, b in pairs)
        for a, b in le:
            if a not in self.elements or b not in self.elements:
                raise ValueError(f"relation pair {(a, b)} off the element set")
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(le), repeat=2):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
        for a, b in le:
            if a != b and (b, a) in le:
                raise ValueError(f"cycle through {a} and {b}")
        self.le = frozenset(le)

    def leq(self, a, b) -> bool:
        return (a, b) in self.le

    def lt(self, a, b) -> bool:
        return a != b and (a, b) in self.le

    def opposite(self) -> "Poset":
        return Poset(self.elements, [(b, a) for a, b in self.le])

    def product(self, other: "Poset") -> "Poset":
        elems = [(a, b) for a in self.elements for b in other.elements]
        pairs = [((a, b), (c, d)) for (a, b) in elems for (c, d) in elems
                 if self.leq(a, c) and other.leq(b, d)]
        return Poset(elems, pairs)

    def subposet(self, subset) -> "Poset":
        subset = [e for e in self.elements if e in set(subset)]
        return Poset(subset, [(a, b) for a, b in self.le
                              if a in subset and b in subset])

    def chains(self, length: int):
        """All strictly increasing chains with ``length`` elements."""
        if length == 0:
            yield ()
            return
        def extend(chain):
            if len(chain) == length:
                yield chain
                return
            for e in self.elements:
                if self.lt(chain[-1], e):
                    yield from extend(chain + (e,))
        for e in self.elements:
            yield from extend((e,))

    def height(self) -> int:
        """Number of elements in a longest chain."""
        h = 0
        while any(True for _ in self.chains(h + 1)):
            h += 1
        return h

    def minima(self):
        return [a for a in self.elements
                if not any(self.lt(b, a) for b in self.elements)]

    def maxima(self):
        return [a for a in self.elements
                if not any(self.lt(a, b) for b in self.elements)]

    def __repr__(self):
        rel = sorted((a, b) for a, b in self.le if a != b)
        return f"Poset({list(self.elements)}, {rel})"


def total_order(n: int) -> Poset:
    return Poset(range(n + 1), [(i, i + 1) for i in range(n)])


def nerve(P: Poset, top_dim: int | None = None) -> SimplicialSet:
    """Nerve of a poset, cells labelled by their chains."""
    cap = P.height() - 1
    if top_dim is not None:
        cap = min(cap, top_dim)
    counts, faces, labels = {}, {}, {}
    index: dict[tuple, int] = {}
    for d in range(cap + 1):
        cs = sorted(P.chains(d + 1), key=lambda c: tuple(P.elements.index(e) for e in c))
        if not cs:
            break
        counts[d] = len(cs)
        for i, chain in enumerate(cs):
            index[chain] = i
            labels[(d, i)] = chain
            if d >= 1:
                faces[(d, i)] = tuple(
                    nondeg(d - 1, index[chain[:k] + chain[k + 1:]])
                    for k in range(d + 1))
    return SimplicialSet(counts, faces, labels)


def poset_key(P: Poset):
    """Isomorphism invariant canonical form."""
    n = len(P.elements)
    best = None
    for perm in itertools.permutations(range(n)):
        rel = frozenset((perm[P.elements.index(a)], perm[P.elements.index(b)])
                        for a, b in P.le if a != b)
        key = tuple(sorted(rel))
        if best is None or key < best:
            best = key
    return n, best


def all_posets(n: int):
    """All posets on n elements, one per isomorphism class."""
    if n == 0:
        return [Poset([])]
    elems = list(range(n))
    arcs = [(a, b) for a in elems for b in elems if a != b]
    seen = set()
    out = []
    for chosen in itertools.product([False, True], repeat=len(arcs)):
        rel = {arc for arc, c in zip(arcs, chosen) if c}
        # want: rel already transitive and acyclic, so each poset appears once
        if any((a, b) in rel and (b, a) in rel for a, b in rel):
            continue
        if any((a, d) not in rel
               for a, b in rel for c, d in rel if b == c and a != d):
            continue
        P = Poset(elems, rel)
        key = poset_key(P)
        if key not in seen:
            seen.add(key)
            out.append(P)
    return out
