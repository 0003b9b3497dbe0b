"""Concrete filling certificates for the twisted arrow tower.

Three generators, each returning the ambient decoration together with a
replayable certificate:

- ``fibstep1(n, i)``: the extended core of the mirrored join fills the
  whole simplex through one pivot run.
- ``fibstep2(n, i)``: the plain core fills the extended core, one pivot
  run per missing stretch of the first face, then the mirror-image runs
  for the last face.
- ``xi_certificate(n)``: the doubled-chain core of the ladder fills the
  whole ladder, one pivot run per staircase simplex, stratified by how
  far the staircase deviates from the symmetric ones.

Every run re-derives its starting subcomplex from the dull family and
asserts it matches what is already present; the composite is then
rechecked with the independent verifier by the caller or the tests.
"""

from __future__ import annotations

from .anodyne import (
    Certificate,
    CertificateError,
    concatenate,
    dull_start_cells,
    pivot_certificate,
)
from .core.complex import close_cells
from .core.maps import simplex_by_chain
from .decor import Decorated
from .zoo import (
    Ladder,
    ladder_complex,
    ladder_core_cells,
    ladder_top_chain,
    q_complex,
    q_core_cells,
    q_core_dull_family,
    q_core_extended_cells,
    q_diamond,
)

FIBSTEP_CAP = 3
XI_CAP = 2


def _check_range(n: int, i: int, cap: int):
    if not 1 <= n <= cap:
        raise ValueError(f"n={n} outside the supported range 1..{cap}")
    if not 0 < i <= n:
        raise ValueError(f"i={i} outside the range 1..{n}")


def _ambient(n: int, i: int) -> Decorated:
    return q_diamond(n) if i == n else q_complex(n)


def fibstep1(n: int, i: int):
    """Fill the extended core into the whole mirrored join."""
    _check_range(n, i, FIBSTEP_CAP)
    dec = _ambient(n, i)
    cert = pivot_certificate(dec, q_core_dull_family(n, i))
    assert set(cert.start) == q_core_extended_cells(n, i)
    return dec, cert


def fibstep2_family(n: int, i: int, r: int):
    """The facet family of one stretch, in the positions of the face
    spanned by the vertices r..2n+1, redundant members dropped."""
    N = 2 * n + 1 - r
    fam = [{0}]
    for j in range(2 * n + 2 - 2 * r, N + 1):
        if j != 2 * n + 1 - r - i:
            fam.append({j})
    for k in range(1, n - r + 1):
        if r + k != i:
            fam.append({k, 2 * n + 1 - 2 * r - k})
    return fam


def fibstep2(n: int, i: int):
    """Fill the core into the extended core, one stretch at a time."""
    _check_range(n, i, FIBSTEP_CAP)
    dec = _ambient(n, i)
    space = dec.space
    start = frozenset(q_core_cells(n, i))
    stage = set(start)
    runs = []
    for mirrored in (False, True):
        for r in range(n, 0, -1):
            N = 2 * n + 1 - r
            fam = fibstep2_family(n, i, r)
            if mirrored:
                fam = [{N - p for p in S} for S in fam]
                verts = tuple(range(0, 2 * n + 2 - r))
            else:
                verts = tuple(range(r, 2 * n + 2))
            window = close_cells(space, [simplex_by_chain(space, verts).base])
            assert stage & window == dull_start_cells(space, verts, fam), \
                f"stretch r={r} mirrored={mirrored} has an unexpected shape"
            cert = pivot_certificate(dec, fam, vertices=verts)
            runs.append(cert)
            stage |= set(cert.end)
    out = concatenate(space, runs, start=start)
    assert set(out.end) == q_core_extended_cells(n, i)
    return dec, out


def staircase_pairs(n: int):
    """(summand, r, s) in attachment order: summand 1 then 2, raising
    strata |r-s|, forward staircases before backward ones."""
    out = []
    for summand in (1, 2):
        for a in range(1, n + 1):
            for r in range(n + 1):
                for s in range(n + 1):
                    if r - s == a:
                        out.append((summand, r, s))
            for r in range(n + 1):
                for s in range(n + 1):
                    if s - r == a:
                        out.append((summand, r, s))
    return out


def staircase_walls(n: int, r: int, s: int):
    """Wall positions and pivot of one staircase simplex.

    Forward staircases (r > s) drop positions r and 2n+2-s and fill
    through 2n+2-r; backward ones are the mirror image under the bar
    symmetry, which reverses positions.
    """
    if r > s:
        return [{r}, {2 * n + 2 - s}], 2 * n + 2 - r
    return [{r + 1}, {2 * n + 3 - s}], s + 1


def staircase_window(L: Ladder, n: int, r: int, s: int, summand: int):
    """Face closure of the two walls of one staircase simplex."""
    space = L.space
    sx = simplex_by_chain(space, ladder_top_chain(n, r, s, summand))
    family, _ = staircase_walls(n, r, s)
    walls = [space.face(sx, min(S)) for S in family]
    return close_cells(space, [w.base for w in walls])


def xi_certificate(n: int):
    """Fill the doubled-chain core into the whole ladder."""
    if not 0 <= n <= XI_CAP:
        raise ValueError(f"n={n} outside the supported range 0..{XI_CAP}")
    L = ladder_complex(n)
    space = L.space
    start = frozenset(ladder_core_cells(L))
    stage = set(start)
    runs = []
    for summand, r, s in staircase_pairs(n):
        chain = ladder_top_chain(n, r, s, summand)
        family, pivot = staircase_walls(n, r, s)
        window = close_cells(space, [simplex_by_chain(space, chain).base])
        assert stage & window == dull_start_cells(space, chain, family), \
            f"staircase ({r},{s}) in summand {summand} has an unexpected shape"
        cert = pivot_certificate(L.dec, family, vertices=chain, pivot=pivot)
        runs.append(cert)
        stage |= set(cert.end)
    out = concatenate(space, runs, start=start)
    assert set(out.end) == set(space.all_cells())
    return L, out
