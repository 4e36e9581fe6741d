import json

import pytest

from rootcluster.errors import (
    BadParameter,
    DegreeMismatch,
    NotASubgroup,
    SpecFormatError,
    UnknownFixture,
)
from rootcluster.permcore import Limits
from rootcluster.specfile import load_spec, parse_spec, resolve, resolve_group, resolve_upper

S3 = {"name": "S3", "degree": 3, "generators": [[2, 1, 3], "(1 2 3)"]}


def write(tmp_path, data, name="spec.json"):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(path)


class TestParse:
    def test_defaults_to_stabilizer_of_one(self):
        spec = parse_spec(S3)
        assert (spec.group.order, spec.subgroup.order) == (6, 2)
        assert spec.name == "S3"
        assert spec.root_pair().n == 3

    def test_subgroup_generators(self):
        spec = parse_spec(
            {
                "degree": 4,
                "generators": ["(1 2 3 4)", "(1 2)"],
                "subgroup": {"generators": ["(1 2)(3 4)", "(1 3)(2 4)"]},
            },
            source="klein",
        )
        assert spec.name == "klein"
        assert spec.subgroup.order == 4
        P = spec.root_pair()
        assert (P.n, P.group.order) == (6, 6)

    def test_stabilizer_of_other_point_is_reduced(self):
        spec = parse_spec(dict(S3, subgroup={"stabilizer_of": 2}))
        assert spec.root_pair().n == 3

    @pytest.mark.parametrize(
        "data,field",
        [
            ({"degree": 0}, "degree"),
            ({"degree": "3"}, "degree"),
            (dict(S3, generators=[[1, 1, 2]]), "generators[0]"),
            (dict(S3, generators=[[2, 1, 3], [1, 2]]), "generators[1]"),
            (dict(S3, generators=[[2, 1, 3], 7]), "generators[1]"),
            (dict(S3, generators="(1 2)"), "generators"),
            (dict(S3, subgroup={"stabilizer_of": 4}), "subgroup.stabilizer_of"),
            (dict(S3, subgroup={"stabilizer_of": 1, "generators": []}), "subgroup"),
            (dict(S3, subgroup={"generators": ["(1 4)"]}), "subgroup.generators[0]"),
            ([1, 2, 3], "top level"),
        ],
    )
    def test_errors_name_the_field(self, data, field):
        with pytest.raises(SpecFormatError, match=field.replace("[", r"\[").replace("]", r"\]")):
            parse_spec(data)

    def test_subgroup_generator_outside_group(self):
        spec = {"degree": 4, "generators": ["(1 2 3 4)"], "subgroup": {"generators": ["(1 2)"]}}
        with pytest.raises(SpecFormatError, match="subgroup.generators"):
            parse_spec(spec)

    def test_degree_cap(self):
        with pytest.raises(SpecFormatError, match="exceeds"):
            parse_spec(S3, limits=Limits(max_degree=2))


class TestLoad:
    def test_load(self, tmp_path):
        spec = load_spec(write(tmp_path, S3))
        assert spec.group.order == 6

    def test_invalid_json_reports_position(self, tmp_path):
        path = write(tmp_path, '{\n  "degree": 3,\n  "generators": [[2, 1, 3],\n}')
        with pytest.raises(SpecFormatError, match=r"line 4, column 1"):
            load_spec(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecFormatError, match="not found"):
            load_spec(str(tmp_path / "missing.json"))


class TestResolve:
    def test_constructor_uri(self):
        spec = resolve("catalog:metacyclic:9")
        assert (spec.group.degree, spec.group.order) == (9, 54)
        assert spec.name == "metacyclic:9"

    def test_two_parameter_constructor(self):
        assert resolve("catalog:tuples:5:2").group.degree == 20

    def test_wrong_arity(self):
        with pytest.raises(BadParameter):
            resolve("catalog:wreathlike:3")

    @pytest.mark.parametrize("uri", ["catalog:metacyclic:1,2", "catalog:tuples:5:2,3"])
    def test_parameter_lists_are_rejected(self, uri):
        with pytest.raises(BadParameter, match="single integer"):
            resolve(uri)

    def test_fixture_uri(self):
        assert resolve("catalog:nPk-5-2").root_pair().n == 20

    def test_unknown_fixture(self):
        with pytest.raises(UnknownFixture):
            resolve("catalog:no-such-fixture")

    def test_fixture_without_pair(self):
        with pytest.raises(UnknownFixture):
            resolve("catalog:tuple-fields-5")

    def test_path(self, tmp_path):
        assert resolve(write(tmp_path, S3)).group.order == 6

    def test_groups(self):
        assert resolve_group("catalog:cyclic:3").order == 3
        assert resolve_group("catalog:abelian:2,2").order == 4
        assert resolve_group("catalog:symmetric:3").order == 6
        with pytest.raises(BadParameter):
            resolve_group("catalog:cyclic:0")

    def test_upper_points(self, metacyclic12):
        U = resolve_upper("points:1,4", metacyclic12.group)
        assert U.order == 2

    def test_upper_must_share_group(self, tmp_path, metacyclic12):
        with pytest.raises(DegreeMismatch):
            resolve_upper(write(tmp_path, S3), metacyclic12.group)
        with pytest.raises(NotASubgroup):
            resolve_upper("catalog:wreathlike:3:4", metacyclic12.group)
