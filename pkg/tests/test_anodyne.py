"""Tests for the dull-family pivot engine and certificate replay."""

import json
import random

import pytest

from twarrow.anodyne import (
    CertificateError,
    Certificate,
    Step,
    all_disjoint_families,
    all_dull_families,
    basal_sets,
    certificate_from_json,
    certificate_to_json,
    concatenate,
    dual_certificate,
    dull_start_cells,
    facet_union,
    family_pivots,
    is_dull,
    kappa_stratum_matches,
    pivot_certificate,
    pivot_strata,
    verify_certificate,
)
from twarrow.core import close_cells, opposite, simplex_cell, standard_simplex
from twarrow.decor import Decorated, op_decoration
from twarrow.zoo import q_complex, q_core_dull_family, q_core_extended_cells, q_diamond


def tri_dec(n, thin):
    X = standard_simplex(n)
    return Decorated(X, thin={simplex_cell(n, t) for t in thin})


def test_is_dull_examples():
    ok, pivots, _ = is_dull([{0}, {3}], 3)
    assert ok and pivots == [1, 2]
    ok, pivots, _ = is_dull([{0}, {5}, {2, 3}], 5)
    assert ok and pivots == [1, 4]
    ok, _, why = is_dull([{0, 1}, {1, 2}], 3)
    assert not ok and "overlap" in why
    ok, _, why = is_dull([{0}, {3}, set()], 3)
    assert not ok and "empty" in why
    ok, _, why = is_dull([{1}, {2}], 4)
    assert not ok  # no singleton to the right of any free position
    assert is_dull([{0}, {4}], 4)[1] == [1, 2, 3]


def test_basal_sets():
    assert basal_sets([{0}, {3}]) == [(0, 3)]
    bas = basal_sets([{0}, {5}, {2, 3}])
    assert bas == [(0, 2, 5), (0, 3, 5)]
    assert all(len(Z) == 3 for Z in bas)


def test_kappa_stratum_small():
    strata = pivot_strata(3, [{0}, {3}], 1)
    assert min(strata) == 3
    assert strata[3] == [(0, 1, 3)]
    assert kappa_stratum_matches(3, [{0}, {3}], 1)
    assert kappa_stratum_matches(3, [{0}, {3}], 2)


def test_kappa_lemma_exhaustive_small():
    for n in range(2, 5):
        seen = 0
        for fam, pivots in all_dull_families(n):
            for i in pivots:
                seen += 1
                assert kappa_stratum_matches(n, fam, i)
        assert seen > 0


def test_disjoint_family_enumeration_is_exact():
    # families of pairwise disjoint nonempty subsets of a k-set are
    # counted by the Bell number of k+1
    fams = list(all_disjoint_families(2))
    assert len(fams) == len(set(map(frozenset, map(lambda f: map(frozenset, f), fams)))) == 15
    assert len(list(all_disjoint_families(3))) == 52


def test_dull_start_cells_two_facets():
    X = standard_simplex(3)
    got = dull_start_cells(X, tuple(range(4)), [{0}, {3}])
    want = close_cells(X, [simplex_cell(3, (1, 2, 3)), simplex_cell(3, (0, 1, 2))])
    assert got == want
    assert simplex_cell(3, (0, 1, 2, 3)) not in got


def test_extended_core_is_a_dull_facet_union():
    for n, i in [(1, 1), (2, 1), (2, 2)]:
        fam = q_core_dull_family(n, i)
        X = standard_simplex(2 * n + 1)
        got = dull_start_cells(X, tuple(range(2 * n + 2)), fam)
        assert got == q_core_extended_cells(n, i)


def test_facet_union_decorated():
    dec = q_complex(1)
    sub, incl = facet_union(dec, [{0}, {3}])
    assert sub.space.n_cells(2) == 2
    incl.validate()


def test_pivot_certificate_negative_q1():
    dec = q_complex(1)
    with pytest.raises(CertificateError) as err:
        pivot_certificate(dec, [{0}, {3}], pivot=1)
    assert err.value.witness == (0, 1, 3)
    # scanning both pivots cannot help with this scaling
    with pytest.raises(CertificateError):
        pivot_certificate(dec, [{0}, {3}])


def test_pivot_certificate_two_steps():
    dec = tri_dec(3, [(0, 2, 3), (1, 2, 3)])
    cert = pivot_certificate(dec, [{0}, {3}], pivot=2)
    assert len(cert.steps) == 2
    first, second = cert.steps
    assert (first.n, first.i) == (2, 1)
    assert first.attach == simplex_cell(3, (0, 2, 3))
    assert (second.n, second.i) == (3, 2)
    assert second.attach == simplex_cell(3, (0, 1, 2, 3))
    ok, step, reason = verify_certificate(dec, cert)
    assert ok, (step, reason)


def test_pivot_scan_on_diamond():
    dec = q_diamond(1)
    cert = pivot_certificate(dec, [{0}, {3}])
    ok, step, reason = verify_certificate(dec, cert)
    assert ok, (step, reason)
    # every triangle of the diamond is thin, so the scan stops at pivot 1
    assert cert.steps[0].i == 1


def test_verify_rejects_flat_ambient():
    thin = tri_dec(3, [(0, 2, 3), (1, 2, 3)])
    cert = pivot_certificate(thin, [{0}, {3}], pivot=2)
    flat = Decorated(thin.space)
    ok, step, reason = verify_certificate(flat, cert)
    assert not ok and step == 1 and "thin" in reason


def test_verify_rejects_mutations():
    dec = tri_dec(3, [(0, 2, 3), (1, 2, 3)])
    cert = pivot_certificate(dec, [{0}, {3}], pivot=2)
    no_first = Certificate(cert.start, cert.steps[1:], cert.end)
    ok, step, _ = verify_certificate(dec, no_first)
    assert not ok and step == 1
    outer = Certificate(
        cert.start,
        (Step(n=2, i=2, attach=cert.steps[0].attach),) + cert.steps[1:],
        cert.end)
    ok, step, reason = verify_certificate(dec, outer)
    assert not ok and step == 1 and "inner" in reason
    bad_end = Certificate(cert.start, cert.steps, cert.start)
    ok, step, _ = verify_certificate(dec, bad_end)
    assert not ok and step == len(cert.steps) + 1
    ragged = Certificate(cert.start | {cert.steps[1].attach}, cert.steps, cert.end)
    ok, step, reason = verify_certificate(dec, ragged)
    assert not ok and step == 0 and "closed" in reason


def test_same_stratum_order_is_free():
    dec = q_diamond(2)
    fam = q_core_dull_family(2, 2)
    cert = pivot_certificate(dec, fam)
    rng = random.Random(7)
    by_size = {}
    for s in cert.steps:
        by_size.setdefault(s.n, []).append(s)
    shuffled = []
    for n in sorted(by_size):
        block = by_size[n][:]
        rng.shuffle(block)
        shuffled.extend(block)
    alt = Certificate(cert.start, tuple(shuffled), cert.end)
    ok, step, reason = verify_certificate(dec, alt)
    assert ok, (step, reason)


def test_certificate_json_roundtrip():
    dec = tri_dec(3, [(0, 2, 3), (1, 2, 3)])
    cert = pivot_certificate(dec, [{0}, {3}], pivot=2)
    doc = json.loads(json.dumps(certificate_to_json(cert)))
    back = certificate_from_json(doc)
    assert back == cert
    ok, _, _ = verify_certificate(dec, back)
    assert ok


def test_dual_certificate_verifies():
    dec = tri_dec(3, [(0, 2, 3), (1, 2, 3)])
    cert = pivot_certificate(dec, [{0}, {3}], pivot=2)
    dual = dual_certificate(cert)
    decop = op_decoration(dec, opposite(dec.space))
    ok, step, reason = verify_certificate(decop, dual)
    assert ok, (step, reason)
    # and the dual of an invalid replay stays invalid
    ok, _, _ = verify_certificate(op_decoration(Decorated(dec.space),
                                                opposite(dec.space)), dual)
    assert not ok


def test_certificate_in_a_face_of_a_bigger_ambient():
    # run the two-facet filling inside the face 1..4 of Delta^5
    thin = [(1, 3, 4), (2, 3, 4)]
    dec = tri_dec(5, thin)
    cert = pivot_certificate(dec, [{0}, {3}], vertices=(1, 2, 3, 4), pivot=2)
    ok, step, reason = verify_certificate(dec, cert)
    assert ok, (step, reason)
    assert cert.steps[-1].attach == simplex_cell(5, (1, 2, 3, 4))


def test_concatenate_replays():
    dec = q_diamond(1)
    a = pivot_certificate(dec, [{0}, {3}])
    whole = concatenate(dec.space, [a])
    assert whole == a
