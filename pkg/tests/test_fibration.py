import itertools

import pytest

from twarrow.core.complex import point, standard_simplex
from twarrow.core.maps import SimplicialMap, map_by_vertices
from twarrow.core.poset import all_posets, nerve, total_order
from twarrow.core.simplex import degenerate_word, nondeg
from twarrow.decor import flat, sharp
from twarrow.fibration import (
    FibrationReport, LiftingProblem, boundary_inclusion, cartesian_edge,
    cartesian_fibration, horn_inclusion, inner_fibration, iter_lifts,
    marked_supply, solve_lift, trivial_fibration)
from twarrow.twisted import cone_fiber_span, twisted_arrow, tw_projection


def to_point(X):
    pt = point()
    return SimplicialMap(X, pt, {c: degenerate_word(nondeg(0, 0), tuple(range(c[0] - 1, -1, -1)))
                                 for c in X.all_cells()}, check=False)


def horn_square_over_point(n, i, X, top):
    incl = horn_inclusion(n, i)
    p = to_point(X)
    bottom = to_point(incl.target)
    return LiftingProblem(incl, p, top, bottom)


def test_solve_lift_horn_in_simplex():
    D = standard_simplex(2)
    incl = horn_inclusion(2, 1)
    p = SimplicialMap.identity(D)
    prob = LiftingProblem(incl, p, incl, SimplicialMap.identity(D))
    lift = solve_lift(prob)
    assert lift is not None
    assert prob.is_lift(lift)
    assert lift.data[(2, 0)] == nondeg(2, 0)


def test_solve_lift_reversed_edge_has_none():
    D = standard_simplex(1)
    incl = boundary_inclusion(1)
    p = to_point(D)
    top = SimplicialMap(incl.source, D,
                        {(0, 0): nondeg(0, 1), (0, 1): nondeg(0, 0)})
    prob = LiftingProblem(incl, p, top, to_point(D))
    assert solve_lift(prob) is None
    assert list(iter_lifts(prob)) == []


def test_solve_lift_unique_in_a_nerve():
    N = nerve(total_order(3))
    incl = horn_inclusion(3, 2)
    top = map_by_vertices(incl.source, N, lambda v: v)
    prob = LiftingProblem(incl, to_point(N), top, to_point(incl.target))
    lifts = list(iter_lifts(prob))
    assert len(lifts) == 1
    assert prob.is_lift(lifts[0])
    assert lifts[0].data[(3, 0)] == nondeg(3, 0)


def test_non_commuting_square_rejected():
    D = standard_simplex(1)
    incl = boundary_inclusion(1)
    top = SimplicialMap(incl.source, D,
                        {(0, 0): nondeg(0, 1), (0, 1): nondeg(0, 0)})
    with pytest.raises(ValueError, match="does not commute"):
        LiftingProblem(incl, SimplicialMap.identity(D), top,
                       SimplicialMap.identity(D))


def exhaustive_lifts(prob):
    """Reference enumeration: try every assignment of the free cells."""
    B, X = prob.incl.target, prob.p.source
    forced = prob.forced()
    cells = sorted(B.all_cells())
    pools = []
    for c in cells:
        if c in forced:
            pools.append([forced[c]])
        else:
            pools.append([s for s in X.simplices(c[0])
                          if prob.p(s) == prob.bottom.data[c]])
    out = []
    for combo in itertools.product(*pools):
        assign = dict(zip(cells, combo))
        ok = all(X.face(assign[c], k) == degenerate_word(assign[f.base], f.word)
                 for c in cells if c[0] >= 1
                 for k, f in enumerate(B.faces[c]))
        if ok:
            out.append(tuple(combo))
    return sorted(out)


def test_backtracking_matches_exhaustive_enumeration():
    N = nerve(total_order(2))
    incl = horn_inclusion(2, 1)
    top = map_by_vertices(incl.source, N, lambda v: v)
    prob = LiftingProblem(incl, to_point(N), top, to_point(incl.target))
    cells = sorted(incl.target.all_cells())
    got = sorted(tuple(f.data[c] for c in cells) for f in iter_lifts(prob))
    assert got == exhaustive_lifts(prob)
    assert len(got) == 1

    # and on an unsolvable problem both find nothing
    H, _ = incl.source, incl.target
    hp = horn_square_over_point(2, 1, H, SimplicialMap.identity(H))
    assert exhaustive_lifts(hp) == []
    assert list(iter_lifts(hp)) == []


def test_inner_fibration_nerve_maps_pass():
    p = map_by_vertices(nerve(total_order(2)), nerve(total_order(1)),
                        lambda v: min(v, 1))
    assert inner_fibration(p, 3).ok
    for P in all_posets(3):
        rep = inner_fibration(to_point(nerve(P)), 3)
        assert rep.ok, P


def test_inner_fibration_horn_over_point_fails():
    H = horn_inclusion(2, 1).source
    rep = inner_fibration(to_point(H), 2)
    assert not rep.ok
    assert rep.counterexample is not None
    assert solve_lift(rep.counterexample) is None


def test_cartesian_edges_of_identity():
    D = standard_simplex(2)
    p = SimplicialMap.identity(D)
    for c in D.cells(1):
        rep = cartesian_edge(p, c, 3)
        assert rep.ok and rep.squares > 0


def test_cartesian_edge_failure_reverifies():
    H = horn_inclusion(2, 1).source
    e = H.cell_with_label((1, 2))
    rep = cartesian_edge(to_point(H), e, 2)
    assert not rep.ok
    assert solve_lift(rep.counterexample) is None


def test_cartesian_edge_unknown_edge():
    p = SimplicialMap.identity(standard_simplex(2))
    with pytest.raises(ValueError, match="unknown edge"):
        cartesian_edge(p, (2, 0), 2)
    with pytest.raises(ValueError, match="unknown edge"):
        cartesian_edge(p, (1, 99), 2)


def test_marked_supply_flat_interval_fails():
    D = standard_simplex(1)
    p = SimplicialMap.identity(D)
    rep = marked_supply(p, flat(D))
    assert not rep.ok
    assert solve_lift(rep.counterexample) is None
    assert marked_supply(p, sharp(D)).ok


def test_cartesian_fibration_flat_projection_fails_supply():
    D = standard_simplex(1)
    rep = cartesian_fibration(SimplicialMap.identity(D), flat(D), 2)
    assert not rep.ok
    assert "supply" in rep.detail
    assert solve_lift(rep.counterexample) is None


@pytest.mark.parametrize("n", [0, 1, 2])
def test_twisted_arrow_projection_is_cartesian(n):
    twc = twisted_arrow(sharp(standard_simplex(n)), 3)
    f, _, _ = tw_projection(twc)
    rep = cartesian_fibration(f, twc.dec, 3)
    assert rep.ok, rep.detail
    # and each marked edge individually
    for c in sorted(twc.dec.marked):
        assert cartesian_edge(f, c, 3).ok


def test_trivial_fibration_identity_and_reversal():
    D = standard_simplex(2)
    assert trivial_fibration(SimplicialMap.identity(D), 2).ok
    rep = trivial_fibration(to_point(standard_simplex(1)), 1)
    assert not rep.ok
    assert "dimension 1" in rep.detail
    assert solve_lift(rep.counterexample) is None


def test_trivial_fibration_of_cone_fiber_projection():
    span = cone_fiber_span(sharp(standard_simplex(1)), 1, 2)
    rep = trivial_fibration(span.pi, 2)
    assert rep.ok, rep.detail


def test_dimension_cap_respected():
    D = standard_simplex(1)
    with pytest.raises(ValueError, match="dimension cap"):
        inner_fibration(SimplicialMap.identity(D), 99)


def test_report_truthiness():
    D = standard_simplex(1)
    assert trivial_fibration(SimplicialMap.identity(D), 1)
    assert not trivial_fibration(to_point(D), 1)
    assert isinstance(inner_fibration(SimplicialMap.identity(D), 2),
                      FibrationReport)
