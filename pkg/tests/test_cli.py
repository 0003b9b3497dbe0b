"""Command-line surface: subcommands, serialization, exports, the suite."""

import json

import pytest

from twarrow.anodyne import certificate_from_json, verify_certificate
from twarrow.cli import (
    ZOO_NAMES,
    SuiteConfig,
    build_zoo,
    decorated_from_json,
    decorated_to_json,
    export_text,
    main,
    map_from_json,
    map_to_json,
    poset_from_json,
    poset_to_json,
    run_suite,
)
from twarrow.core.complex import simplex_cell, standard_simplex
from twarrow.core.io import complex_to_json, complexes_equal
from twarrow.core.maps import SimplicialMap, map_by_vertices
from twarrow.core.poset import Poset, nerve, total_order
from twarrow.core.simplex import Simplex
from twarrow.decor import Decorated
from twarrow.fibration import horn_inclusion


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


# -- serialization -----------------------------------------------------


def test_decorated_round_trip_all_zoo_objects():
    for name in ZOO_NAMES:
        for n in range(3):
            try:
                dec = build_zoo(name, n)
            except ValueError:
                continue
            back = decorated_from_json(
                json.loads(json.dumps(decorated_to_json(dec))))
            assert complexes_equal(dec.space, back.space)
            assert back.thin == dec.thin and back.marked == dec.marked


def test_decorated_from_json_rejects_bad_index():
    obj = decorated_to_json(build_zoo("q", 1))
    obj["thin"] = [99]
    with pytest.raises(ValueError, match="names no cell"):
        decorated_from_json(obj)


def test_map_round_trip_validates():
    N2, N1 = nerve(total_order(2)), nerve(total_order(1))
    f = map_by_vertices(N2, N1, lambda v: min(v, 1))
    g, _, _ = map_from_json(json.loads(json.dumps(map_to_json(f))))
    assert g.data == f.data
    broken = map_to_json(f)
    broken["data"]["1:0"] = [[], 0, 0]
    with pytest.raises(ValueError):
        map_from_json(broken)


def test_poset_round_trip():
    P = Poset("abc", [("a", "b"), ("a", "c")])
    Q = poset_from_json(json.loads(json.dumps(poset_to_json(P))))
    assert set(Q.elements) == set(P.elements)
    for x in P.elements:
        for y in P.elements:
            assert P.leq(x, y) == Q.leq(x, y)


# -- exports -----------------------------------------------------------


def test_export_json_is_byte_stable():
    assert export_text("json", "q", 1) == export_text("json", "q", 1)
    assert export_text("json", "r", 1) == export_text("json", "r", 1)


def test_export_dot_tw_interval():
    text = export_text("dot", "tw", 1)
    assert text.count("[label=") == 3
    assert text.count("->") == 2
    # both edges of the sharp interval are marked, hence drawn bold
    assert text.count("penwidth") == 2


def test_export_dot_ladder_hasse_counts():
    text = export_text("dot", "r-hasse", 1)
    assert text.count("[label=") == 12


def test_export_unknown_object():
    with pytest.raises(ValueError, match="unknown zoo object"):
        export_text("json", "mystery", 1)


def test_zoo_build_cli(tmp_path):
    out = tmp_path / "q1.json"
    assert main(["zoo", "build", "q", "--n", "1",
                 "--json", str(out)]) == 0
    first = out.read_bytes()
    assert main(["zoo", "build", "q", "--n", "1",
                 "--json", str(out)]) == 0
    assert out.read_bytes() == first
    assert main(["zoo", "build", "k", "--n", "2", "--i", "2"]) == 0
    assert main(["zoo", "build", "k", "--n", "0"]) == 2


# -- tw and poset commands ---------------------------------------------


def test_tw_build_sharp_default(tmp_path):
    src = write(tmp_path / "tri.json",
                complex_to_json(standard_simplex(2)))
    out, dot = tmp_path / "tw.json", tmp_path / "tw.dot"
    assert main(["tw", "build", "--complex", src, "--max-dim", "3",
                 "--out", str(out), "--dot", str(dot)]) == 0
    doc = json.loads(out.read_text())
    # a bare complex counts as sharp, so every edge upstairs is marked
    assert len(doc["marked"]) == 9
    assert "penwidth" in dot.read_text()


def test_tw_fiber_cli(tmp_path):
    src = write(tmp_path / "seg.json",
                complex_to_json(standard_simplex(1)))
    out = tmp_path / "fiber.json"
    assert main(["tw", "fiber", "--complex", src, "--x", "0", "--y", "1",
                 "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["simplices"]["0"]["count"] == 1


def test_poset_mapspace_cli(tmp_path):
    assert main(["poset", "mapspace", "--chain", "2", "--upper", "2",
                 "--mode", "right", "--j", "0"]) == 0
    out = tmp_path / "ms.json"
    assert main(["poset", "mapspace", "--chain", "2", "--upper", "1,2",
                 "--mode", "right", "--j", "0", "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["simplices"]["0"]["count"] == 2
    with pytest.raises(SystemExit):
        main(["poset", "mapspace", "--chain", "2", "--upper", "2",
              "--mode", "sideways"])


def test_poset_mapspace_from_file(tmp_path):
    src = write(tmp_path / "p.json", poset_to_json(total_order(1)))
    assert main(["poset", "mapspace", "--poset", src, "--upper", "1",
                 "--mode", "two-sided"]) == 0


def test_poset_descends_cli():
    assert main(["poset", "descends", "--map", "zeta", "--n", "1",
                 "--i", "0"]) == 0
    # h_rho without its switch index is a usage error
    assert main(["poset", "descends", "--map", "h_rho", "--n", "1"]) == 2


# -- certificates ------------------------------------------------------


def test_certify_pivot_cli(tmp_path):
    out = tmp_path / "cert.json"
    assert main(["certify", "pivot", "--dull", "0;3", "--n", "3",
                 "--thin", "023,123", "--pivot", "2",
                 "--out", str(out)]) == 0
    cert = certificate_from_json(json.loads(out.read_text()))
    dec = Decorated(standard_simplex(3),
                    thin={simplex_cell(3, (0, 2, 3)),
                          simplex_cell(3, (1, 2, 3))})
    ok, _, _ = verify_certificate(dec, cert)
    assert ok
    assert main(["certify", "pivot", "--dull", "0;3", "--n", "3",
                 "--thin", "023,123", "--pivot", "1"]) == 1
    assert main(["certify", "pivot", "--dull", "0;3", "--n", "3",
                 "--pivot", "auto"]) == 1      # flat scaling, no run works


def test_certify_paper_cli(tmp_path):
    out = tmp_path / "cert.json"
    assert main(["certify", "paper", "--which", "fibstep2", "--n", "2",
                 "--i", "2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["steps"]
    assert main(["certify", "paper", "--which", "xi", "--n", "0"]) == 0
    assert main(["certify", "paper", "--which", "fibstep1",
                 "--n", "2"]) == 2              # missing --i


# -- fibration checks --------------------------------------------------


def test_check_cli_pass_and_fail(tmp_path):
    N2, N1 = nerve(total_order(2)), nerve(total_order(1))
    f = map_by_vertices(N2, N1, lambda v: min(v, 1))
    good = write(tmp_path / "good.json", map_to_json(f))
    rep = tmp_path / "rep.json"
    assert main(["check", "inner-fibration", "--map", good,
                 "--max-dim", "3", "--report", str(rep)]) == 0
    assert json.loads(rep.read_text())["ok"] is True

    H = horn_inclusion(2, 1).source
    data = {c: Simplex(tuple(range(c[0] - 1, -1, -1)), (0, 0))
            for c in H.all_cells()}
    p = SimplicialMap(H, standard_simplex(0), data, check=False)
    bad = write(tmp_path / "bad.json", map_to_json(p))
    assert main(["check", "inner-fibration", "--map", bad,
                 "--max-dim", "2", "--report", str(rep)]) == 1
    doc = json.loads(rep.read_text())
    assert doc["ok"] is False and doc["counterexample"] is not None


def test_check_cli_trivial(tmp_path):
    I = standard_simplex(1)
    p = map_by_vertices(I, standard_simplex(0), lambda v: 0)
    m = write(tmp_path / "int.json", map_to_json(p))
    assert main(["check", "trivial", "--map", m, "--max-dim", "1"]) == 1


# -- the suite ---------------------------------------------------------

QUICK = "cone-fiber,pivot-certificates,scaling-counts"


def test_suite_quick_checks_pass(tmp_path):
    rep = tmp_path / "rep.json"
    assert main(["suite", "--checks", QUICK, "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    assert doc["ok"] is True
    assert [c["check"] for c in doc["checks"]] == sorted(QUICK.split(","))
    assert all(c["ok"] for c in doc["checks"])


def test_suite_inject_flat_scaling_fails(tmp_path):
    rep = tmp_path / "rep.json"
    assert main(["suite", "--checks", "pivot-certificates",
                 "--inject", "flat-q1", "--report", str(rep)]) == 1
    doc = json.loads(rep.read_text())
    assert doc["ok"] is False
    assert "rejected" in doc["checks"][0]["detail"]


def test_suite_empty_check_list(tmp_path):
    rep = tmp_path / "rep.json"
    assert main(["suite", "--checks", "", "--report", str(rep)]) == 0
    assert json.loads(rep.read_text())["checks"] == []


def test_suite_same_seed_reports_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["suite", "--checks", QUICK, "--seed", "7",
                     "--report", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_suite_config_validation():
    with pytest.raises(ValueError, match="unknown checks"):
        SuiteConfig(checks=("no-such-check",))
    with pytest.raises(ValueError, match="dim_cap"):
        SuiteConfig(dim_cap=99)
    with pytest.raises(ValueError, match="injection"):
        SuiteConfig(inject="sabotage")


def test_run_suite_returns_report():
    status, report = run_suite(SuiteConfig(checks=("scaling-counts",)))
    assert status == 0
    assert report["checks"][0]["check"] == "scaling-counts"


def test_main_without_command():
    assert main([]) == 2
