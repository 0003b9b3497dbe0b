"""Filling certificates built on the pivot construction.

A dull family over the vertex positions of a simplex names a union of
facets whose inclusion into the full simplex can be filled purely by
inner horn attachments anchored at one pivot vertex, provided a small
collection of triangles through the pivot is thin.  This module
produces those fillings as explicit certificates (ordered horn
attachments over a fixed decorated ambient) and replays them with an
independent verifier.

A certificate never trusts its producer: `verify_certificate` rechecks
face-closure of the start, availability of every horn face, inner-ness,
thinness of every middle triangle, and the final cell set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core.complex import Cell, SimplicialSet, close_cells, is_closed, subcomplex
from .core.maps import SimplicialMap, simplex_by_chain
from .core.simplex import Simplex, nondeg
from .decor import Decorated, pull_decoration


class CertificateError(ValueError):
    """A filling could not be produced; carries a witness when one exists."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


# -- dull families of vertex positions ---------------------------------


def family_pivots(family, n) -> list[int]:
    """Positions usable as a pivot for the family inside [0..n]."""
    fam = [frozenset(S) for S in family]
    used = frozenset().union(*fam) if fam else frozenset()
    singles = sorted(min(S) for S in fam if len(S) == 1)
    out = []
    for i in range(1, n):
        if i in used:
            continue
        if any(u < i for u in singles) and any(v > i for v in singles):
            out.append(i)
    return out


def is_dull(family, n):
    """Verdict, admissible pivots, and an explanation on failure."""
    fam = [frozenset(S) for S in family]
    if any(not S for S in fam):
        return False, [], "contains the empty set"
    if any(min(S) < 0 or max(S) > n for S in fam if S):
        return False, [], "member outside the vertex range"
    for a in range(len(fam)):
        for b in range(a + 1, len(fam)):
            if fam[a] & fam[b]:
                return False, [], (f"members {sorted(fam[a])} and "
                                   f"{sorted(fam[b])} overlap")
    pivots = family_pivots(fam, n)
    if not pivots:
        return False, [], "no free position between two straddling singletons"
    return True, pivots, None


def basal_sets(family) -> list[tuple[int, ...]]:
    """One representative from each member, every way, sorted."""
    fam = [sorted(S) for S in family]
    return sorted({tuple(sorted(pick)) for pick in itertools.product(*fam)})


def pivot_strata(n, family, pivot) -> dict[int, list[tuple[int, ...]]]:
    """Vertex sets to fill, keyed by size, lexicographic within a size.

    A set qualifies when it contains the pivot and meets every member of
    the family; the smallest size is one more than the family size.
    """
    fam = [frozenset(S) for S in family]
    out: dict[int, list[tuple[int, ...]]] = {}
    for size in range(1, n + 2):
        for X in itertools.combinations(range(n + 1), size):
            xs = frozenset(X)
            if pivot not in xs:
                continue
            if any(not (xs & S) for S in fam):
                continue
            out.setdefault(size, []).append(X)
    return out


def kappa_stratum_matches(n, family, pivot) -> bool:
    """The smallest stratum is exactly the basal sets plus the pivot."""
    strata = pivot_strata(n, family, pivot)
    kappa = min(strata)
    if kappa != len(list(family)) + 1:
        return False
    expect = sorted(tuple(sorted(set(Z) | {pivot})) for Z in basal_sets(family))
    return strata[kappa] == expect


def all_disjoint_families(n):
    """Every family of pairwise disjoint nonempty subsets of [0..n]."""
    def rec(elems):
        if not elems:
            yield ()
            return
        e, rest = elems[0], elems[1:]
        for fam in rec(rest):
            yield fam
            yield fam + ((e,),)
            for k in range(len(fam)):
                yield fam[:k] + (tuple(sorted(fam[k] + (e,))),) + fam[k + 1:]
    yield from rec(tuple(range(n + 1)))


def all_dull_families(n):
    """Pairs (family, admissible pivots) over [0..n]."""
    for fam in all_disjoint_families(n):
        ok, pivots, _ = is_dull(fam, n)
        if ok:
            yield fam, pivots


# -- certificates ------------------------------------------------------


@dataclass(frozen=True)
class Step:
    n: int
    i: int
    attach: Cell
    klass: str = "inner_horn"


@dataclass(frozen=True)
class Certificate:
    start: frozenset
    steps: tuple
    end: frozenset


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "start": sorted([d, i] for (d, i) in cert.start),
        "steps": [{"class": s.klass, "n": s.n, "i": s.i,
                   "attach": list(s.attach)} for s in cert.steps],
        "end": sorted([d, i] for (d, i) in cert.end),
    }


def certificate_from_json(doc) -> Certificate:
    steps = tuple(Step(n=s["n"], i=s["i"], attach=tuple(s["attach"]),
                       klass=s.get("class", "inner_horn"))
                  for s in doc["steps"])
    return Certificate(frozenset(tuple(c) for c in doc["start"]), steps,
                       frozenset(tuple(c) for c in doc["end"]))


# -- generation --------------------------------------------------------


def _face_vertices(space: SimplicialSet, vertices):
    if vertices is not None:
        return tuple(vertices)
    labs = []
    for c in space.cells(0):
        lab = space.labels.get(c)
        if isinstance(lab, tuple) and len(lab) == 1:
            lab = lab[0]
        labs.append(lab)
    return tuple(labs)


def _chain_cell(space: SimplicialSet, vertices, positions) -> Simplex:
    sx = simplex_by_chain(space, tuple(vertices[p] for p in positions))
    assert not sx.word, "a strict vertex chain must be nondegenerate"
    return sx


def facet_sets(n, family) -> list[tuple[int, ...]]:
    return [tuple(v for v in range(n + 1) if v not in set(S))
            for S in family]


def dull_start_cells(space: SimplicialSet, vertices, family) -> set[Cell]:
    """Face closure of the facets named by the family."""
    n = len(vertices) - 1
    seeds = [_chain_cell(space, vertices, F).base
             for F in facet_sets(n, family)]
    return close_cells(space, seeds)


def facet_union(dec: Decorated, family, vertices=None):
    """The union of the named facets as a decorated subcomplex.

    Returns the decorated subcomplex and its inclusion map.
    """
    vertices = _face_vertices(dec.space, vertices)
    cells = dull_start_cells(dec.space, vertices, family)
    sub, incl_data = subcomplex(dec.space, cells)
    incl = SimplicialMap(sub, dec.space, incl_data)
    return pull_decoration(incl, dec), incl


def _hypothesis_witness(dec: Decorated, vertices, pivot, Z):
    space = dec.space
    lo = max(z for z in Z if z < pivot)
    hi = min(z for z in Z if z > pivot)
    for r in range(lo, pivot):
        for s in range(pivot + 1, hi + 1):
            tri = _chain_cell(space, vertices, (r, pivot, s))
            if not dec.is_thin(tri):
                return (vertices[r], vertices[pivot], vertices[s])
    return None


def pivot_certificate(dec: Decorated, family, *, vertices=None,
                      pivot=None, basal=None) -> Certificate:
    """Fill the facet union into the whole simplex through one pivot.

    ``vertices`` picks the face of the ambient to work in, as a chain of
    vertex labels; family members, the pivot, and the basal set are
    positions within that chain.  When ``pivot`` or ``basal`` is left
    out, admissible pivots are scanned in ascending order and basal sets
    in lexicographic order, and the first pair passing the thinness
    hypothesis wins.  Raises CertificateError, with a witness triangle,
    when no pair passes.
    """
    space = dec.space
    vertices = _face_vertices(space, vertices)
    n = len(vertices) - 1
    ok, pivots, why = is_dull(family, n)
    if not ok:
        raise CertificateError(f"family is not dull: {why}")
    if pivot is not None:
        if pivot not in pivots:
            raise CertificateError(
                f"pivot {pivot} is not admissible, admissible ones: {pivots}")
        pivots = [pivot]
    if basal is not None:
        basals = [tuple(sorted(basal))]
        if basals[0] not in basal_sets(family):
            raise CertificateError(f"{basal} is not a basal set")
    else:
        basals = basal_sets(family)
    chosen = first_witness = None
    for i in pivots:
        for Z in basals:
            w = _hypothesis_witness(dec, vertices, i, Z)
            if w is None:
                chosen = i
                break
            if first_witness is None:
                first_witness = w
        if chosen is not None:
            break
    if chosen is None:
        raise CertificateError(
            f"thinness hypothesis fails, witness triangle {first_witness}",
            witness=first_witness)
    i = chosen

    start = frozenset(dull_start_cells(space, vertices, family))
    stage = set(start)
    steps = []
    strata = pivot_strata(n, family, i)
    for size in sorted(strata):
        for X in strata[size]:
            pos = X.index(i)
            sx = _chain_cell(space, vertices, X)
            middle = space.restrict(sx, (pos - 1, pos, pos + 1))
            if not dec.is_thin(middle):
                w = (vertices[X[pos - 1]], vertices[i], vertices[X[pos + 1]])
                raise CertificateError(
                    f"middle triangle {w} is not thin", witness=w)
            steps.append(Step(n=size - 1, i=pos, attach=sx.base))
            stage.add(sx.base)
            missing = space.face(sx, pos)
            assert not missing.word
            stage.add(missing.base)
    # the filtration must have filled the whole face
    assert stage == close_cells(space, [_chain_cell(space, vertices,
                                                    range(n + 1)).base])
    return Certificate(start, tuple(steps), frozenset(stage))


def concatenate(space: SimplicialSet, certs, start=None) -> Certificate:
    """Steps of several runs in sequence over a common ambient."""
    certs = list(certs)
    if not certs and start is None:
        raise ValueError("nothing to concatenate")
    s = frozenset(certs[0].start if start is None else start)
    steps = tuple(st for c in certs for st in c.steps)
    stage = set(s)
    for st in steps:
        stage.add(st.attach)
        stage.add(space.face(nondeg(*st.attach), st.i).base)
    return Certificate(s, steps, frozenset(stage))


# -- verification ------------------------------------------------------


def verify_certificate(dec: Decorated, cert: Certificate):
    """Independent replay; returns (ok, first_bad_step, reason).

    Step numbers are 1-based; 0 refers to the starting subcomplex, one
    past the last step to the final comparison.
    """
    space = dec.space
    stage = set(cert.start)
    for c in stage:
        if not 0 <= c[1] < space.n_cells(c[0]):
            return False, 0, f"start cell {c} does not exist"
    if not is_closed(space, stage):
        return False, 0, "start is not face-closed"
    for k, st in enumerate(cert.steps, start=1):
        if st.klass != "inner_horn":
            return False, k, f"unknown step class {st.klass!r}"
        nn, i = st.n, st.i
        if not 0 < i < nn:
            return False, k, f"horn position {i} is not inner in dimension {nn}"
        cell = st.attach
        if cell[0] != nn:
            return False, k, "attached cell dimension mismatch"
        if cell[1] >= space.n_cells(nn):
            return False, k, f"attached cell {cell} does not exist"
        if cell in stage:
            return False, k, "attached simplex is already present"
        sx = nondeg(*cell)
        miss = space.face(sx, i)
        if miss.word:
            return False, k, "missing face is degenerate"
        if miss.base in stage:
            return False, k, "missing face is already present"
        for j in range(nn + 1):
            if j == i:
                continue
            f = space.face(sx, j)
            if not f.word and f.base not in stage:
                return False, k, f"face {j} absent before attachment"
        middle = space.restrict(sx, (i - 1, i, i + 1))
        if not dec.is_thin(middle):
            return False, k, "middle triangle is not thin"
        stage.add(cell)
        stage.add(miss.base)
    if stage != set(cert.end):
        return False, len(cert.steps) + 1, "final stage differs from the stated end"
    return True, 0, "ok"


def dual_certificate(cert: Certificate) -> Certificate:
    """The same filling read in the opposite ambient."""
    steps = tuple(Step(n=s.n, i=s.n - s.i, attach=s.attach, klass=s.klass)
                  for s in cert.steps)
    return Certificate(cert.start, steps, cert.end)
