"""Command line front end: parsing, outputs, exit codes."""

import json

import pytest

from foldmatch import cli

FIX_B = {"rank": 3, "kind": "B",
         "triangulation": [[2, 4], [1, 4], [4, 0], [5, 0], [6, 0]],
         "orbit": [2, 7]}
FIX_C = {"rank": 3, "kind": "C",
         "triangulation": [[0, 2], [2, 4], [4, 0], [6, 0], [4, 6]],
         "orbit": [3, 5]}


def _write(tmp_path, data, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_parse_instance_roundtrip():
    inst = cli.parse_instance(json.dumps(FIX_B))
    assert inst.rank == 3 and inst.kind == "B"
    assert inst.triangulation.orientation == (4, 0)
    assert inst.target == (2, 7)


def test_parse_rejects_degenerate():
    bad = dict(FIX_B, triangulation=[[2, 2]] + FIX_B["triangulation"][1:])
    with pytest.raises(cli.ValidationError):
        cli.parse_instance(json.dumps(bad))


def test_parse_rejects_unknown_field():
    with pytest.raises(cli.ParseError):
        cli.parse_instance(json.dumps(dict(FIX_B, extra=1)))


def test_parse_diameter_position():
    bad = dict(FIX_B, triangulation=[[2, 4], [4, 0], [1, 4], [5, 0], [6, 0]])
    with pytest.raises(cli.ValidationError) as err:
        cli.parse_instance(json.dumps(bad))
    assert err.value.code == "DiameterNotAtIndexN"


def test_expand_fix_b(tmp_path, capsys):
    path = _write(tmp_path, FIX_B)
    assert cli.main(["expand", path]) == 0
    out = capsys.readouterr().out
    assert out == ("F = 1 + 2*y3 + y3^2 + 2*y2*y3 + 2*y2*y3^2 + y2^2*y3^2"
                   " + y1*y2*y3^2 + y1*y2^2*y3^2\n"
                   "g = [1,0,-2]\n")


def test_expand_fix_c(tmp_path, capsys):
    path = _write(tmp_path, FIX_C)
    assert cli.main(["expand", path]) == 0
    out = capsys.readouterr().out
    assert out == "F = 1 + y1 + y1*y3 + y1*y2*y3\ng = [-1,0,0]\n"


def test_expand_orbit_inside(tmp_path, capsys):
    inst = dict(FIX_B, orbit=[2, 4])
    path = _write(tmp_path, inst)
    assert cli.main(["expand", path]) == 0
    assert capsys.readouterr().out == "F = 1\ng = [1,0,0]\n"


def test_exit_code_unsupported_b(tmp_path, capsys):
    inst = dict(FIX_C, kind="B")
    path = _write(tmp_path, inst)
    assert cli.main(["expand", path]) == 2
    capsys.readouterr()


def test_verify_fixture(tmp_path, capsys):
    path = _write(tmp_path, FIX_B)
    assert cli.main(["verify", path]) == 0
    assert "12/12 orbits OK" in capsys.readouterr().out


def test_verify_json_report(tmp_path, capsys):
    path = _write(tmp_path, FIX_C)
    assert cli.main(["verify", path, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert len(payload["orbits"]) == 12


def test_verify_corrupted_folding(tmp_path, capsys):
    path = _write(tmp_path, FIX_B)
    assert cli.main(["verify", path, "--corrupt-folding"]) == 3
    capsys.readouterr()


def test_render_dot_structure(tmp_path, capsys):
    path = _write(tmp_path, FIX_C)
    assert cli.main(["render", path, "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph snake {")
    assert out.count("{") == out.count("}")
    assert out.rstrip().endswith("}")
    assert out.count("subgraph cluster_tile") == 3
    assert 'kind="interior"' in out and 'kind="boundary"' in out


def test_render_tikz_has_hexagons_and_arc(tmp_path, capsys):
    path = _write(tmp_path, FIX_B)
    assert cli.main(["render", path, "--format", "tikz"]) == 0
    out = capsys.readouterr().out
    assert "% arc edge" in out
    assert out.count("(hexagon)") == 2


def test_render_matching_zero_is_minimal(tmp_path, capsys):
    from foldmatch import geometry as geo, folded as fd, snake as sn
    path = _write(tmp_path, FIX_B)
    assert cli.main(["render", path, "--format", "dot", "--matching", "0"]) == 0
    out = capsys.readouterr().out
    t = geo.theta_invariant_triangulation(
        3, [(2, 4), (1, 4), (0, 4), (5, 0), (6, 0)], (4, 0))
    g = fd.build_g_ab_b(frozenset([(2, 7), (3, 6)]), t)
    assert out.count('color="red"') == len(sn.minimal_matching(g))


def test_matchings_listing(tmp_path, capsys):
    path = _write(tmp_path, FIX_C)
    assert cli.main(["matchings", path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("0: y(P) = 1 ")


def test_output_deterministic(tmp_path, capsys):
    path = _write(tmp_path, FIX_B)
    cli.main(["expand", path])
    first = capsys.readouterr().out
    cli.main(["expand", path])
    second = capsys.readouterr().out
    assert first == second
