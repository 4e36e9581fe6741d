"""Group spec files and ``catalog:`` URIs.

A spec file is JSON::

    {
      "name": "S3 on 3 points",
      "degree": 3,
      "generators": [[2, 1, 3], "(1 2 3)"],
      "subgroup": {"stabilizer_of": 1}
    }

Generators are 1-based image arrays or cycle strings. ``subgroup`` is either
``{"stabilizer_of": point}`` or ``{"generators": [...]}``.
"""
import json
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from . import constructions
from .clustercalc import ExtensionPair, RootPair
from .errors import (
    BadParameter,
    DegreeMismatch,
    InputError,
    InvalidPermutation,
    NotASubgroup,
    SpecFormatError,
    UnknownFixture,
)
from .magnification import to_galois_pair
from .permcore import (
    DEFAULT_LIMITS,
    Group,
    Limits,
    Permutation,
    Subgroup,
    as_subgroup,
    closure,
    pointwise_stabilizer,
    stabilizer,
    subgroup_generated,
)
from .utils import parse_int_list, parse_points

log = logging.getLogger("rootcluster.specfile")

CATALOG_PREFIX = "catalog:"
POINTS_PREFIX = "points:"

# constructor name -> (builder, number of integer parameters)
CONSTRUCTORS: Dict[str, Tuple[Callable[..., RootPair], int]] = {
    "metacyclic": (constructions.metacyclic, 1),
    "wreathlike": (constructions.wreathlike, 2),
    "tuples": (constructions.tuple_action, 2),
    "symmetric": (constructions.symmetric, 1),
    "alternating": (constructions.alternating, 1),
    "units": (constructions.units_regular, 1),
    "clustersize": (constructions.cluster_size_pair, 2),
    "ascindex": (constructions.ascending_index_pair, 2),
}


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group with one subgroup, wherever it came from"""

    name: str
    group: Group
    subgroup: Subgroup
    source: str

    def extension(self) -> ExtensionPair:
        return ExtensionPair(self.group, self.subgroup, self.name)

    def root_pair(self, limits: Optional[Limits] = None) -> RootPair:
        """The pair itself when the subgroup is Stab(1) of a transitive group, else its reduction"""
        if self.subgroup.keys == stabilizer(self.group, 1).keys:
            try:
                return RootPair(self.group, self.subgroup, self.name)
            except InputError:
                pass
        log.info(f"Reducing {self.name or self.source} to the action on cosets of its subgroup")
        return to_galois_pair(self.extension(), limits)

    @classmethod
    def from_pair(cls, pair: RootPair, source: str) -> "GroupSpec":
        return cls(pair.name, pair.group, pair.stabilizer, source)


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

def _permutation(value: Any, degree: int, field: str) -> Permutation:
    try:
        if isinstance(value, str):
            return Permutation.from_cycles(degree, value)
        if isinstance(value, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in value):
            p = Permutation(value)
        else:
            raise SpecFormatError(f"{field}: expected an image array or a cycle string")
    except InvalidPermutation as e:
        raise SpecFormatError(f"{field}: {e}")
    if p.degree != degree:
        raise SpecFormatError(f"{field}: has {p.degree} images, degree is {degree}")
    return p


def _generators(values: Any, degree: int, field: str) -> List[Permutation]:
    if not isinstance(values, list):
        raise SpecFormatError(f"{field}: expected a list")
    return [_permutation(v, degree, f"{field}[{i}]") for i, v in enumerate(values)]


def parse_spec(data: Any, source: str = "<spec>", limits: Optional[Limits] = None) -> GroupSpec:
    """Build a GroupSpec from decoded JSON, naming the offending field on error"""
    limits = limits or DEFAULT_LIMITS
    if not isinstance(data, dict):
        raise SpecFormatError(f"{source}: top level must be an object")
    degree = data.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise SpecFormatError(f"{source}: degree: expected a positive integer, got {degree!r}")
    if degree > limits.max_degree:
        raise SpecFormatError(f"{source}: degree: {degree} exceeds the cap of {limits.max_degree}")
    try:
        gens = _generators(data.get("generators", []), degree, "generators")
    except SpecFormatError as e:
        raise SpecFormatError(f"{source}: {e}")
    group = closure(degree, gens, limits.max_order)

    sub = data.get("subgroup")
    if sub is None:
        sub = {"stabilizer_of": 1}
    if not isinstance(sub, dict) or len(set(sub) & {"stabilizer_of", "generators"}) != 1:
        raise SpecFormatError(
            f"{source}: subgroup: expected exactly one of 'stabilizer_of' or 'generators'"
        )
    if "stabilizer_of" in sub:
        point = sub["stabilizer_of"]
        if not isinstance(point, int) or isinstance(point, bool) or not 1 <= point <= degree:
            raise SpecFormatError(
                f"{source}: subgroup.stabilizer_of: expected a point in 1..{degree}, got {point!r}"
            )
        subgroup = stabilizer(group, point)
    else:
        try:
            sub_gens = _generators(sub["generators"], degree, "subgroup.generators")
            subgroup = subgroup_generated(group, sub_gens)
        except NotASubgroup as e:
            raise SpecFormatError(f"{source}: subgroup.generators: {e}")
        except SpecFormatError as e:
            raise SpecFormatError(f"{source}: {e}")

    name = data.get("name") or source
    log.debug(f"Parsed {name}: degree {degree}, order {group.order}, subgroup order {subgroup.order}")
    return GroupSpec(str(name), group, subgroup, source)


def load_spec(path: str, limits: Optional[Limits] = None) -> GroupSpec:
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise SpecFormatError(f"Spec file not found: {path}")
    except json.JSONDecodeError as e:
        raise SpecFormatError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")
    return parse_spec(data, path, limits)


# ---------------------------------------------------------------------------
# URIs
# ---------------------------------------------------------------------------

def _construct(name: str, args: List[str], limits: Limits) -> RootPair:
    builder, arity = CONSTRUCTORS[name]
    if len(args) != arity:
        raise BadParameter(f"'{name}' takes {arity} parameter(s), got {len(args)}")
    values = []
    for a in args:
        parsed = parse_int_list(a, "parameter")
        if len(parsed) != 1:
            raise BadParameter(f"'{name}' parameter '{a}' must be a single integer")
        values.append(parsed[0])
    return builder(*values, limits=limits)


def resolve(text: str, limits: Optional[Limits] = None) -> GroupSpec:
    """Resolve a file path, ``catalog:<fixture>`` or ``catalog:<constructor>:<params>``"""
    limits = limits or DEFAULT_LIMITS
    if not text.startswith(CATALOG_PREFIX):
        return load_spec(text, limits)
    body = text[len(CATALOG_PREFIX):]
    head, *args = body.split(":")
    if head in CONSTRUCTORS:
        return GroupSpec.from_pair(_construct(head, args, limits), text)

    from .catalog import get_fixture

    fixture = get_fixture(body)
    pair = fixture.pair(limits)
    if pair is None:
        raise UnknownFixture(f"Fixture '{body}' has no root pair to load")
    return GroupSpec.from_pair(pair, text)


def resolve_group(text: str, limits: Optional[Limits] = None) -> Group:
    """Group for ``--by``: ``catalog:cyclic:m``, ``catalog:abelian:a,b,...`` or any pair spec"""
    limits = limits or DEFAULT_LIMITS
    if text.startswith(CATALOG_PREFIX):
        head, _, arg = text[len(CATALOG_PREFIX):].partition(":")
        if head == "cyclic":
            return constructions.cyclic_group(parse_int_list(arg, "order", minimum=1)[0], limits)
        if head == "abelian":
            return constructions.abelian_group(parse_int_list(arg, "order", minimum=1), limits)
    return resolve(text, limits).group


def resolve_upper(text: str, G: Group, limits: Optional[Limits] = None) -> Subgroup:
    """Subgroup for ``capacity --upper``: ``points:i,j,...`` or a spec over the same group"""
    if text.startswith(POINTS_PREFIX):
        return pointwise_stabilizer(G, parse_points(text[len(POINTS_PREFIX):]))
    spec = resolve(text, limits)
    if spec.group.degree != G.degree:
        raise DegreeMismatch(f"{text} acts on {spec.group.degree} points, expected {G.degree}")
    if spec.group.keys != G.keys:
        raise NotASubgroup(f"{text} is over a different group of order {spec.group.order}")
    return as_subgroup(G, spec.subgroup)
