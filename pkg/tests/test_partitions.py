"""Ordered partitions: chain posets, truncations, congruences, collapses."""

import itertools

import pytest

from twarrow.core.complex import standard_simplex
from twarrow.core.maps import find_isomorphism, simplex_by_chain
from twarrow.core.poset import all_posets, nerve, total_order
from twarrow.partitions import (
    boxplus_partition,
    chain_poset,
    chain_poset_at,
    collapse_both,
    collapse_upper,
    congruence_quotient,
    make_partition,
    mapping_space,
    marked_chain_edge,
    marked_chain_edges,
    q_partition,
    simplex_flag,
    square_partition,
    star_partition,
    truncate,
    truncate_chain,
)

F = frozenset


# -- construction ------------------------------------------------------


def test_rejects_overlap():
    with pytest.raises(ValueError, match="overlap"):
        make_partition(total_order(1), {0, 1}, {1})


def test_rejects_bad_cover():
    with pytest.raises(ValueError, match="cover"):
        make_partition(total_order(2), {0}, {1})
    with pytest.raises(ValueError, match="cover"):
        make_partition(total_order(1), {0}, {1, 7})


def test_rejects_order_violation():
    with pytest.raises(ValueError, match="order violation"):
        make_partition(total_order(1), {1}, {0})


def test_opposite_partition_is_valid():
    p = make_partition(total_order(2), {0}, {1, 2})
    q = p.opposite()
    assert q.lower == F({1, 2}) and q.upper == F({0})
    assert q.poset.leq(2, 0)


def test_all_valid_partitions_have_valid_opposites():
    for P in all_posets(3):
        for r in range(1, len(P.elements)):
            for lo in itertools.combinations(P.elements, r):
                hi = [e for e in P.elements if e not in lo]
                try:
                    part = make_partition(P, lo, hi)
                except ValueError:
                    continue
                part.opposite()


# -- chain posets ------------------------------------------------------


def test_chain_poset_q1():
    P = chain_poset(q_partition(1).part)
    assert len(P.elements) == 9
    assert F({0, 2}) in P.elements
    assert F({2, 3}) not in P.elements
    assert P.leq(F({0, 2}), F({0, 1, 2, 3}))
    assert not P.leq(F({0, 2}), F({1, 3}))


def test_chain_poset_sizes():
    assert len(chain_poset(star_partition(1).part).elements) == 3
    assert len(chain_poset(boxplus_partition(1).part).elements) == 21
    assert len(chain_poset(square_partition(1).part).elements) == 5


def test_chain_poset_slice():
    part = q_partition(1).part
    P0 = chain_poset_at(part, 0)
    assert all(0 in S for S in P0.elements)
    with pytest.raises(ValueError, match="lower"):
        chain_poset_at(part, 2)


# -- truncation --------------------------------------------------------


def test_truncate_full_chain_q1():
    part = q_partition(1).part
    S = (F({0, 1, 2, 3}),)
    assert truncate_chain(part, S, "R") == (F({0, 1, 2}),)
    assert truncate_chain(part, S, "L") == (F({1, 2, 3}),)
    assert truncate_chain(part, S, "A") == (F({1, 2}),)


def test_truncate_flag_keeps_pivot_of_first_set():
    part = make_partition(total_order(2), {0}, {1, 2})
    flag = (F({0, 2}), F({0, 1, 2}))
    # first set switches at 2, so nothing is cut
    assert truncate_chain(part, flag, "R") == flag


def test_truncate_simplices():
    part = q_partition(1).part
    N = nerve(chain_poset(part))
    v = simplex_by_chain(N, (F({0, 1, 2, 3}),))
    assert N.labels[truncate(part, N, v, "A").base] == (F({1, 2}),)
    e = simplex_by_chain(N, (F({0, 2}), F({0, 1, 2, 3})))
    t = truncate(part, N, e, "R")
    assert simplex_flag(N, t) == (F({0, 2}), F({0, 1, 2}))


def _valid_partitions(P):
    for r in range(1, len(P.elements)):
        for lo in itertools.combinations(P.elements, r):
            hi = [e for e in P.elements if e not in lo]
            try:
                yield make_partition(P, lo, hi)
            except ValueError:
                continue


def test_truncation_idempotent_and_commuting():
    for size in (2, 3, 4):
        for P in all_posets(size):
            for part in _valid_partitions(P):
                C = chain_poset(part)
                flags = [(S,) for S in C.elements]
                flags += [c for c in C.chains(2)] + [c for c in C.chains(3)]
                for flag in flags:
                    R = truncate_chain(part, flag, "R")
                    L = truncate_chain(part, flag, "L")
                    A = truncate_chain(part, flag, "A")
                    assert truncate_chain(part, R, "R") == R
                    assert truncate_chain(part, L, "L") == L
                    assert truncate_chain(part, A, "A") == A
                    assert truncate_chain(part, R, "L") == A
                    assert truncate_chain(part, L, "R") == A


def test_truncate_rejects_non_ascending():
    part = q_partition(1).part
    with pytest.raises(ValueError, match="ascending"):
        truncate_chain(part, (F({0, 1, 2}), F({0, 2})), "R")


# -- congruences -------------------------------------------------------


def test_right_congruence_identifies_vertices():
    part = make_partition(total_order(2), {0}, {1, 2})
    res, N = congruence_quotient(part, "R", j=0)
    q = res.maps[0]
    v1 = simplex_by_chain(N, (F({0, 1}),))
    v2 = simplex_by_chain(N, (F({0, 1, 2}),))
    v3 = simplex_by_chain(N, (F({0, 2}),))
    assert q(v1) == q(v2)
    assert q(v1) != q(v3)
    assert find_isomorphism(res.complex, standard_simplex(1)) is not None


def test_right_congruence_trivial_for_singleton_upper():
    part = make_partition(total_order(2), {0, 1}, {2})
    res, N = congruence_quotient(part, "R")
    assert res.complex.counts == N.counts


def test_two_sided_relation_is_coarser():
    part = boxplus_partition(1).part
    S, T = (F({0, 1, 2}),), (F({1, 2}),)
    assert truncate_chain(part, S, "A") == truncate_chain(part, T, "A")
    assert truncate_chain(part, S, "R") != truncate_chain(part, T, "R")


def test_congruences_close_on_compendium():
    # quotient_by_key re-verifies class homogeneity and raises otherwise
    for n in (0, 1):
        for dp in (q_partition(n), star_partition(n), boxplus_partition(n)):
            congruence_quotient(dp.part, "R", j=0, top_dim=2)
            congruence_quotient(dp.part, "A", top_dim=2)
    congruence_quotient(square_partition(1).part, "A", top_dim=2)


# -- mapping spaces ----------------------------------------------------


def test_mapping_space_segment_examples():
    part = make_partition(total_order(2), {0, 1}, {2})
    X = mapping_space(part, "right", j=0)
    assert find_isomorphism(X, standard_simplex(1)) is not None

    part = make_partition(total_order(2), {0}, {1, 2})
    X = mapping_space(part, "right", j=0)
    assert find_isomorphism(X, standard_simplex(1)) is not None

    part = make_partition(total_order(1), {0}, {1})
    X = mapping_space(part, "two_sided")
    assert X.counts == {0: 1}


def test_mapping_space_rejects_bad_input():
    part = make_partition(total_order(2), {0}, {1, 2})
    with pytest.raises(ValueError, match="lower"):
        mapping_space(part, "right", j=2)
    with pytest.raises(ValueError, match="mode"):
        mapping_space(part, "sideways")


# -- collapsed nerves --------------------------------------------------


def test_collapse_interval():
    part = make_partition(total_order(1), {0}, {1})
    up = collapse_upper(part)
    assert up.dec.space.counts == {0: 2, 1: 1}
    both = collapse_both(part)
    assert both.dec.space.counts == {0: 2, 1: 1}
    assert both.base0 != both.base1


def test_collapse_upper_triangle():
    part = make_partition(total_order(2), {0}, {1, 2})
    col = collapse_upper(part)
    assert col.dec.space.n_cells(0) == 2
    assert col.dec.space.n_cells(1) == 2


def test_collapse_both_q1_has_two_vertices():
    col = collapse_both(q_partition(1).part, q_partition(1).dec)
    assert col.dec.space.n_cells(0) == 2
    assert col.quot(simplex_by_chain(col.quot.source, (0,))).base == col.base0
    assert col.quot(simplex_by_chain(col.quot.source, (3,))).base == col.base1


def test_collapse_pushes_scaling_forward():
    dp = boxplus_partition(0)
    col = collapse_both(dp.part, dp.dec)
    img = col.quot(simplex_by_chain(col.quot.source, (0, 1, 2)))
    assert img.word == () and col.dec.is_thin(img)


# -- markings ----------------------------------------------------------


def test_marked_edges_boxplus0():
    dp = boxplus_partition(0)
    marked = marked_chain_edges(dp)
    assert marked == {(F({0, 1}), F({0, 1, 2})), (F({0, 2}), F({0, 1, 2}))}


def test_marking_needs_thin_interior():
    part = boxplus_partition(0).part
    col = collapse_both(part)
    # without the scaling the wide edge fails, the short one survives
    assert not marked_chain_edge(part, col, F({0, 2}), F({0, 1, 2}))
    assert marked_chain_edge(part, col, F({0, 1}), F({0, 1, 2}))
