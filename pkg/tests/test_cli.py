import json

import pytest

from rootcluster import cli


def run(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    out, err = capsys.readouterr()
    return exc.value.code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


class TestCommands:
    def test_invariants(self, capsys):
        report = run_json(capsys, "invariants", "catalog:metacyclic:9")
        assert {k: report["cluster"][k] for k in ("n", "r", "s")} == {"n": 9, "r": 1, "s": 9}
        assert len(report["clusters"]) == 9

    def test_invariants_table(self, capsys):
        code, out, _ = run(capsys, "invariants", "catalog:wreathlike:3:2")
        assert code == 0
        assert "Cluster invariants: wreathlike:3:2" in out
        assert "1, 2, 3" in out

    def test_tower_order(self, capsys):
        report = run_json(capsys, "tower", "catalog:metacyclic:9", "--order", "1,4,2,3,5,6,7,8,9")
        assert report["degree_sequence"] == [9, 18, 54]
        assert report["length"] == 4

    def test_tower_all_orders(self, capsys):
        report = run_json(capsys, "tower", "catalog:metacyclic:8", "--all-orders")
        assert report["orderings"] == 24
        assert report["bound_holds"] is True

    def test_tower_needs_a_mode(self, capsys):
        code, _, err = run(capsys, "tower", "catalog:metacyclic:8")
        assert code == 2
        assert "usage" in err

    def test_chain_ascending(self, capsys):
        report = run_json(capsys, "chain", "--ascending", "catalog:metacyclic:12")
        assert report["step_indices"] == [2, 2]
        assert report["ascending_index"] == 2

    def test_chain_descending(self, capsys):
        report = run_json(capsys, "chain", "--descending", "catalog:metacyclic:12")
        assert report["field_degrees"] == [12, 6, 3]
        assert report["subgroup_chain"][0]["order"] == 4

    def test_capacity(self, capsys):
        report = run_json(capsys, "capacity", "catalog:metacyclic:12", "--upper", "points:1,3")
        assert (report["rho"], report["a"], report["r"]) == (6, 3, 2)

    def test_detect(self, capsys):
        assert run_json(capsys, "detect", "catalog:alternating:5")["primitive"] is True
        found = run_json(capsys, "detect", "catalog:metacyclic:6")
        assert found["primitive"] is False
        assert 2 in [d["magnification_factor"] for d in found["decompositions"]]

    def test_magnify(self, capsys):
        report = run_json(capsys, "magnify", "catalog:wreathlike:3:2", "--by", "catalog:cyclic:2")
        assert (report["after"]["r"], report["after"]["s"]) == (6, 2)
        assert report["ascending_after"] == [4, 3]

    def test_basechange(self, capsys):
        code, out, _ = run(capsys, "basechange", "catalog:wreathlike:2:3", "--by", "catalog:cyclic:5")
        assert code == 0
        assert "all preserved" in out

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "catalog:wreathlike:3:2")
        assert code == 0
        assert "PASS" in out

    def test_spec_file(self, capsys, tmp_path):
        path = tmp_path / "s3.json"
        path.write_text(json.dumps({"degree": 3, "generators": ["(1 2)", "(1 2 3)"]}))
        report = run_json(capsys, "invariants", str(path))
        assert report["cluster"]["r"] == 1


class TestCatalog:
    def test_list(self, capsys):
        entries = run_json(capsys, "catalog", "list")
        names = [e["name"] for e in entries]
        assert len(names) >= 12
        assert {"nPk-5-2", "perlis-wreath-3-2"} <= set(names)

    def test_list_text(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0
        assert "AVAILABLE FIXTURES" in out

    @pytest.mark.parametrize("name", ["nPk-5-2", "perlis-wreath-3-2"])
    def test_run(self, capsys, name):
        report = run_json(capsys, "catalog", "run", name)
        assert report["passed"] is True
        assert report["reports"][0]["name"] == name

    def test_run_unknown(self, capsys, caplog):
        code, _, _ = run(capsys, "catalog", "run", "no-such-fixture")
        assert code == 2
        assert "no-such-fixture" in caplog.text

    def test_run_needs_name(self, capsys):
        code, _, _ = run(capsys, "catalog", "run")
        assert code == 2


class TestExitCodes:
    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2
        assert "usage" in err

    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "invariants", "catalog:metacyclic:9", "--bogus")
        assert code == 2

    def test_invalid_spec(self, capsys, caplog, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"degree": 3, "generators": [[1, 1, 2]]}))
        code, _, _ = run(capsys, "invariants", str(path))
        assert code == 2
        assert "generators[0]" in caplog.text

    def test_bad_ordering(self, capsys):
        code, _, _ = run(capsys, "tower", "catalog:metacyclic:9", "--order", "1,2")
        assert code == 2

    def test_resource_cap(self, capsys, caplog):
        code, _, _ = run(capsys, "invariants", "catalog:symmetric:8", "--max-order", "1000")
        assert code == 3
        assert "1000" in caplog.text


class TestJson:
    @pytest.mark.parametrize(
        "argv",
        [
            ["invariants", "catalog:metacyclic:12"],
            ["chain", "--descending", "catalog:wreathlike:3:2"],
            ["capacity", "catalog:metacyclic:12", "--upper", "points:1,4"],
            ["catalog", "run", "weak-counterexample-wreath-2-3"],
        ],
    )
    def test_round_trip_is_byte_identical(self, capsys, argv):
        code, out, _ = run(capsys, *argv, "--json")
        assert code == 0
        again = json.dumps(json.loads(out), indent=2, sort_keys=True, ensure_ascii=False)
        assert again + "\n" == out
