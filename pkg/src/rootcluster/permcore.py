"""Permutation group kernel

Groups are fully enumerated: every Group and Subgroup holds its element set
as 0-based image tuples (``keys``). Points are 1-based in every public
signature and in everything that gets serialized.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import (
    BadParameter,
    DegreeMismatch,
    GroupTooLarge,
    InvalidPermutation,
    NotASubgroup,
    ParentMismatch,
)

log = logging.getLogger("rootcluster.permcore")

Key = Tuple[int, ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Limits:
    """Resource caps applied to every enumeration"""

    max_order: int = 200_000
    max_degree: int = 5000
    max_subgroups: int = 20_000


DEFAULT_LIMITS = Limits()


# ---------------------------------------------------------------------------
# Key-level helpers (0-based image tuples)
# ---------------------------------------------------------------------------

def _identity(degree: int) -> Key:
    return tuple(range(degree))


def _mul(a: Key, b: Key) -> Key:
    """a∘b, i.e. i ↦ a(b(i))"""
    return tuple(map(a.__getitem__, b))


def _inv(a: Key) -> Key:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def _conj(g: Key, h: Key, g_inv: Optional[Key] = None) -> Key:
    """g h g⁻¹"""
    if g_inv is None:
        g_inv = _inv(g)
    return tuple(map(g.__getitem__, map(h.__getitem__, g_inv)))


def _dedupe(keys: Iterable[Key]) -> Tuple[Key, ...]:
    return tuple(dict.fromkeys(keys))


def _close(degree: int, gens: Iterable[Key], cap: int) -> FrozenSet[Key]:
    """Breadth-first closure of the generators under composition"""
    ident = _identity(degree)
    gens = [g for g in _dedupe(gens) if g != ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(map(g.__getitem__, x))
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise GroupTooLarge(cap)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _concat(a: Key, b: Key, shift: int) -> Key:
    """Element (a, b) of a direct product, b acting on points shifted past a's"""
    return a + tuple(x + shift for x in b)


def _cyclic_keys(x: Key) -> FrozenSet[Key]:
    ident = _identity(len(x))
    powers = [ident]
    y = x
    while y != ident:
        powers.append(y)
        y = _mul(x, y)
    return frozenset(powers)


def _generating_set(degree: int, keys: FrozenSet[Key]) -> Tuple[Key, ...]:
    """Greedy generating set, scanning elements in canonical order"""
    gens: List[Key] = []
    span = frozenset([_identity(degree)])
    target = len(keys)
    for k in sorted(keys):
        if len(span) == target:
            break
        if k in span:
            continue
        gens.append(k)
        span = _close(degree, gens, target)
    return tuple(gens)


# ---------------------------------------------------------------------------
# Permutation
# ---------------------------------------------------------------------------

@total_ordering
class Permutation:
    """Bijection of {1..degree}.

    ``Permutation([2, 3, 1])`` sends 1→2, 2→3, 3→1. The images are held
    0-based in ``key``; ordering is lexicographic on (degree, images).
    """

    __slots__ = ("key",)

    def __init__(self, images: Iterable[int]):
        images = list(images)
        bad = [i for i in images if not isinstance(i, int) or isinstance(i, bool)]
        if bad:
            raise InvalidPermutation(f"Images must be integers, got {bad[0]!r}")
        key = tuple(i - 1 for i in images)
        if not key or sorted(key) != list(range(len(key))):
            raise InvalidPermutation(
                f"Not a bijection of 1..{len(key)}: {[i + 1 for i in key]}"
            )
        self.key = key

    @classmethod
    def wrap(cls, key: Key) -> "Permutation":
        """Trusted constructor from a 0-based image tuple"""
        p = cls.__new__(cls)
        p.key = key
        return p

    @classmethod
    def from_cycles(cls, degree: int, text: str) -> "Permutation":
        """Parse cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` is the identity"""
        if degree < 1:
            raise InvalidPermutation(f"Degree must be positive, got {degree}")
        if _CYCLE_RE.sub("", text).strip():
            raise InvalidPermutation(f"Malformed cycle notation: {text!r}")

        images = list(range(degree))
        used = set()
        for body in _CYCLE_RE.findall(text):
            tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            try:
                cycle = [int(t) for t in tokens]
            except ValueError:
                raise InvalidPermutation(f"Non-integer point in cycle ({body})")
            for point in cycle:
                if not 1 <= point <= degree:
                    raise InvalidPermutation(f"Point {point} outside 1..{degree} in ({body})")
                if point in used:
                    raise InvalidPermutation(f"Point {point} repeated in {text!r}")
                used.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return cls.wrap(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.key)

    def __call__(self, point: int) -> int:
        return self.key[point - 1] + 1

    def to_list(self) -> List[int]:
        return [i + 1 for i in self.key]

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.key))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point"""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.key[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.key[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.key[nxt]
            out.append(tuple(p + 1 for p in cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.key == other.key

    def __lt__(self, other: "Permutation") -> bool:
        return (self.degree, self.key) < (other.degree, other.key)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Permutation({self.to_list()})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p∘q, mapping i to p(q(i))"""
    if p.degree != q.degree:
        raise DegreeMismatch(f"Cannot compose degree {p.degree} with degree {q.degree}")
    return Permutation.wrap(_mul(p.key, q.key))


def inverse(p: Permutation) -> Permutation:
    return Permutation.wrap(_inv(p.key))


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise InvalidPermutation(f"Degree must be positive, got {degree}")
    return Permutation.wrap(_identity(degree))


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """g h g⁻¹"""
    if g.degree != h.degree:
        raise DegreeMismatch(f"Cannot conjugate degree {h.degree} by degree {g.degree}")
    return Permutation.wrap(_conj(g.key, h.key))


# ---------------------------------------------------------------------------
# Groups and subgroups
# ---------------------------------------------------------------------------

class _ElementSet:
    degree: int
    keys: FrozenSet[Key]
    gen_keys: Tuple[Key, ...]

    @property
    def order(self) -> int:
        return len(self.keys)

    @cached_property
    def sorted_keys(self) -> Tuple[Key, ...]:
        return tuple(sorted(self.keys))

    @cached_property
    def elements(self) -> Tuple[Permutation, ...]:
        return tuple(Permutation.wrap(k) for k in self.sorted_keys)

    @cached_property
    def generators(self) -> Tuple[Permutation, ...]:
        return tuple(Permutation.wrap(k) for k in self.gen_keys)

    @property
    def identity(self) -> Permutation:
        return Permutation.wrap(_identity(self.degree))

    def is_trivial(self) -> bool:
        return len(self.keys) == 1

    def __contains__(self, p: object) -> bool:
        return isinstance(p, Permutation) and p.degree == self.degree and p.key in self.keys

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.keys)


class Group(_ElementSet):
    """Generated permutation group with its full, canonically sorted element set"""

    def __init__(self, degree: int, gen_keys: Sequence[Key], keys: FrozenSet[Key]):
        self.degree = degree
        self.gen_keys = tuple(gen_keys)
        self.keys = keys

    def full(self) -> "Subgroup":
        return Subgroup(self, self.keys, self.gen_keys)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, frozenset([_identity(self.degree)]), ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self is other or (self.degree == other.degree and self.keys == other.keys)

    def __hash__(self) -> int:
        return hash((self.degree, self.keys))

    def __repr__(self) -> str:
        return f"Group(degree={self.degree}, order={self.order})"


class Subgroup(_ElementSet):
    """Subgroup of a parent Group; generators are derived lazily when not supplied"""

    def __init__(self, parent: Group, keys: FrozenSet[Key], gen_keys: Optional[Sequence[Key]] = None):
        self.parent = parent
        self.degree = parent.degree
        self.keys = keys
        if gen_keys is not None:
            ident = _identity(self.degree)
            self.__dict__["gen_keys"] = tuple(k for k in _dedupe(gen_keys) if k != ident)

    @cached_property
    def gen_keys(self) -> Tuple[Key, ...]:  # type: ignore[override]
        return _generating_set(self.degree, self.keys)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def as_group(self) -> Group:
        return Group(self.degree, self.gen_keys, self.keys)

    def __le__(self, other: "Subgroup") -> bool:
        return self.keys <= other.keys

    def __lt__(self, other: "Subgroup") -> bool:
        return self.keys < other.keys

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.degree == other.degree and self.keys == other.keys

    def __hash__(self) -> int:
        return hash((self.degree, self.keys))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, index={self.index})"


GroupLike = Union[Group, Subgroup]


def as_subgroup(G: Group, H: GroupLike) -> Subgroup:
    """View H as a subgroup of G, checking containment"""
    if isinstance(H, Subgroup) and H.parent is G:
        return H
    if H.degree != G.degree:
        raise DegreeMismatch(f"Subgroup acts on {H.degree} points, group on {G.degree}")
    if not H.keys <= G.keys:
        raise NotASubgroup(
            f"Set of order {H.order} is not contained in the group of order {G.order}"
        )
    return Subgroup(G, H.keys, H.gen_keys)


def _check_same_parent(H1: Subgroup, H2: Subgroup) -> Group:
    if H1.parent is not H2.parent and H1.parent != H2.parent:
        raise ParentMismatch(
            f"Subgroups belong to different groups (orders {H1.parent.order} and {H2.parent.order})"
        )
    return H1.parent


def closure(degree: int, generators: Sequence[Permutation], cap: Optional[int] = None) -> Group:
    """Enumerate the group generated by ``generators``.

    Args:
        degree: Number of points acted on
        generators: Permutations of that degree; empty gives the trivial group
        cap: Maximum number of elements before giving up

    Returns:
        Group with every element enumerated

    Raises:
        DegreeMismatch: A generator has another degree
        GroupTooLarge: More than ``cap`` elements
    """
    if degree < 1:
        raise InvalidPermutation(f"Degree must be positive, got {degree}")
    cap = DEFAULT_LIMITS.max_order if cap is None else cap
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(f"Generator {g.to_list()} has degree {g.degree}, expected {degree}")

    ident = _identity(degree)
    gens = tuple(k for k in _dedupe(g.key for g in generators) if k != ident)
    keys = _close(degree, gens, cap)
    log.debug(f"Closed {len(gens)} generator(s) on {degree} points: order {len(keys)}")
    return Group(degree, gens, keys)


def is_subgroup(G: Group, S: Iterable[Permutation]) -> bool:
    members = list(S)
    for p in members:
        if p.degree != G.degree:
            raise DegreeMismatch(f"Element {p.to_list()} has degree {p.degree}, expected {G.degree}")
    keys = {p.key for p in members}
    if _identity(G.degree) not in keys or not keys <= G.keys:
        return False
    for a in keys:
        if _inv(a) not in keys:
            return False
        for b in keys:
            if _mul(a, b) not in keys:
                return False
    return True


def subgroup_generated(G: Group, generators: Iterable[Permutation]) -> Subgroup:
    """Close ``generators`` inside G"""
    gens = []
    for g in generators:
        if g.degree != G.degree:
            raise DegreeMismatch(f"Generator {g.to_list()} has degree {g.degree}, expected {G.degree}")
        if g.key not in G.keys:
            raise NotASubgroup(f"Generator {g.to_list()} is not an element of the group")
        gens.append(g.key)
    keys = _close(G.degree, gens, G.order)
    return Subgroup(G, keys, gens)


def subgroup_of(G: Group, elements: Iterable[Permutation]) -> Subgroup:
    """Wrap an explicit element set, which must already be a subgroup of G"""
    members = list(elements)
    if not is_subgroup(G, members):
        raise NotASubgroup(f"The {len(members)} given elements do not form a subgroup")
    return Subgroup(G, frozenset(p.key for p in members))


def cyclic_subgroup(G: Group, g: Permutation) -> Subgroup:
    if g.key not in G.keys:
        raise NotASubgroup(f"{g.to_list()} is not an element of the group")
    return Subgroup(G, _cyclic_keys(g.key), (g.key,))


def _check_points(degree: int, points: Iterable[int]) -> List[int]:
    pts = list(points)
    for p in pts:
        if not 1 <= p <= degree:
            raise BadParameter(f"Point {p} outside 1..{degree}")
    return pts


def stabilizer(G: Group, point: int) -> Subgroup:
    return pointwise_stabilizer(G, [point])


def pointwise_stabilizer(G: Group, points: Iterable[int]) -> Subgroup:
    idx = [p - 1 for p in _check_points(G.degree, points)]
    keys = frozenset(k for k in G.keys if all(k[i] == i for i in idx))
    return Subgroup(G, keys)


# ---------------------------------------------------------------------------
# Normalizer, normal closure, core, cosets
# ---------------------------------------------------------------------------

def _normalizes(g: Key, h_gens: Sequence[Key], h_keys: FrozenSet[Key]) -> bool:
    g_inv = _inv(g)
    return all(_conj(g, h, g_inv) in h_keys for h in h_gens)


def normalizes(g: Permutation, H: GroupLike) -> bool:
    """Whether gHg⁻¹ = H"""
    return _normalizes(g.key, H.gen_keys, H.keys)


def is_normal(G: Group, H: GroupLike) -> bool:
    H = as_subgroup(G, H)
    return all(_normalizes(g, H.gen_keys, H.keys) for g in G.gen_keys)


def normalizer(G: Group, H: GroupLike) -> Subgroup:
    H = as_subgroup(G, H)
    if not H.gen_keys:
        return G.full()
    keys = frozenset(g for g in G.keys if _normalizes(g, H.gen_keys, H.keys))
    log.debug(f"Normalizer of order-{H.order} subgroup has order {len(keys)}")
    return Subgroup(G, keys)


def normal_closure(G: Group, H: GroupLike) -> Subgroup:
    """Smallest normal subgroup of G containing H"""
    H = as_subgroup(G, H)
    gens = list(H.gen_keys)
    keys = H.keys
    conjugators = [(g, _inv(g)) for g in G.gen_keys]
    pending = list(gens)
    while pending:
        x = pending.pop()
        for g, g_inv in conjugators:
            y = _conj(g, x, g_inv)
            if y not in keys:
                gens.append(y)
                keys = _close(G.degree, gens, G.order)
                pending.append(y)
    return Subgroup(G, keys, gens)


def lies_in_conjugate(H: GroupLike, t: Permutation, U: GroupLike) -> bool:
    """Whether H ⊆ tUt⁻¹"""
    t_inv = _inv(t.key)
    return all(_conj(t_inv, h, t.key) in U.keys for h in H.gen_keys)


def conjugate_subgroup(G: Group, t: Permutation, H: GroupLike) -> Subgroup:
    """tHt⁻¹ as a subgroup of G"""
    H = as_subgroup(G, H)
    t_inv = _inv(t.key)
    keys = frozenset(_conj(t.key, h, t_inv) for h in H.keys)
    gens = [_conj(t.key, h, t_inv) for h in H.gen_keys]
    return Subgroup(G, keys, gens)


def _left_cosets(G: Group, H: Subgroup) -> Tuple[List[Key], Dict[Key, int]]:
    """Least element of each left coset gH, in canonical order, and the coset of every element"""
    reps: List[Key] = []
    index_of: Dict[Key, int] = {}
    h_keys = H.keys
    for g in G.sorted_keys:
        if g in index_of:
            continue
        i = len(reps)
        reps.append(g)
        for h in h_keys:
            index_of[_mul(g, h)] = i
    return reps, index_of


def coset_reps(G: Group, H: GroupLike) -> List[Permutation]:
    H = as_subgroup(G, H)
    reps, _ = _left_cosets(G, H)
    return [Permutation.wrap(k) for k in reps]


def core(G: Group, H: GroupLike) -> Subgroup:
    """Intersection of all conjugates of H"""
    H = as_subgroup(G, H)
    reps, _ = _left_cosets(G, H)
    keys = set(H.keys)
    for t in reps[1:]:
        if len(keys) == 1:
            break
        t_inv = _inv(t)
        keys = {x for x in keys if _conj(t_inv, x, t) in H.keys}
    return Subgroup(G, frozenset(keys))


def coset_action(G: Group, H: GroupLike, limits: Optional[Limits] = None) -> Group:
    """Group induced by G on the left cosets of H, points in coset_reps order"""
    limits = limits or DEFAULT_LIMITS
    H = as_subgroup(G, H)
    if H.index > limits.max_degree:
        raise GroupTooLarge(limits.max_degree, "points")
    reps, index_of = _left_cosets(G, H)
    gens = [tuple(index_of[_mul(g, t)] for t in reps) for g in G.gen_keys]
    ident = _identity(len(reps))
    gens = [g for g in _dedupe(gens) if g != ident]
    keys = _close(len(reps), gens, limits.max_order)
    log.debug(f"Coset action on {len(reps)} points: image of order {len(keys)}")
    return Group(len(reps), gens, keys)


# ---------------------------------------------------------------------------
# Points
# ---------------------------------------------------------------------------

def fixed_points(H: GroupLike, degree: Optional[int] = None) -> Tuple[int, ...]:
    if degree is not None and degree != H.degree:
        raise DegreeMismatch(f"Group acts on {H.degree} points, asked about {degree}")
    gens = H.gen_keys
    return tuple(i + 1 for i in range(H.degree) if all(g[i] == i for g in gens))


def orbits(G: GroupLike) -> Tuple[Tuple[int, ...], ...]:
    seen = [False] * G.degree
    result = []
    for start in range(G.degree):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        for p in orbit:
            for g in G.gen_keys:
                q = g[p]
                if not seen[q]:
                    seen[q] = True
                    orbit.append(q)
        result.append(tuple(sorted(p + 1 for p in orbit)))
    return tuple(result)


def is_transitive(G: GroupLike) -> bool:
    return len(orbits(G)) == 1


# ---------------------------------------------------------------------------
# Lattice operations
# ---------------------------------------------------------------------------

def commute(H1: GroupLike, H2: GroupLike) -> bool:
    """Whether every element of H1 commutes with every element of H2"""
    return all(_mul(x, y) == _mul(y, x) for x in H1.gen_keys for y in H2.gen_keys)


def intersect(H1: Subgroup, H2: Subgroup) -> Subgroup:
    parent = _check_same_parent(H1, H2)
    return Subgroup(parent, H1.keys & H2.keys)


def join(H1: Subgroup, H2: Subgroup) -> Subgroup:
    parent = _check_same_parent(H1, H2)
    if H2.keys <= H1.keys:
        return H1
    if H1.keys <= H2.keys:
        return H2
    gens = H1.gen_keys + H2.gen_keys
    return Subgroup(parent, _close(parent.degree, gens, parent.order), gens)


@dataclass(frozen=True)
class DirectProduct:
    """G×R acting on disjoint point sets: G on 1..deg G, R on the rest"""

    group: Group
    left: Group
    right: Group

    def embed(self, A: Optional[GroupLike] = None, B: Optional[GroupLike] = None) -> Subgroup:
        """A×B as a subgroup of the product; None stands for the trivial factor"""
        a = as_subgroup(self.left, A) if A is not None else self.left.trivial()
        b = as_subgroup(self.right, B) if B is not None else self.right.trivial()
        id_a = _identity(self.left.degree)
        id_b = _identity(self.right.degree)
        shift = self.left.degree
        keys = frozenset(_concat(x, y, shift) for x in a.keys for y in b.keys)
        gens = [_concat(x, id_b, shift) for x in a.gen_keys] + [
            _concat(id_a, y, shift) for y in b.gen_keys
        ]
        return Subgroup(self.group, keys, gens)

    def left_factor(self) -> Subgroup:
        return self.embed(self.left, None)

    def right_factor(self) -> Subgroup:
        return self.embed(None, self.right)


def direct_product(G: Group, R: Group, limits: Optional[Limits] = None) -> DirectProduct:
    limits = limits or DEFAULT_LIMITS
    if G.order * R.order > limits.max_order:
        raise GroupTooLarge(limits.max_order)
    shift = G.degree
    keys = frozenset(_concat(a, b, shift) for a in G.keys for b in R.keys)
    id_g = _identity(G.degree)
    id_r = _identity(R.degree)
    gens = [_concat(g, id_r, shift) for g in G.gen_keys] + [
        _concat(id_g, r, shift) for r in R.gen_keys
    ]
    return DirectProduct(Group(G.degree + R.degree, gens, keys), G, R)


def _canonical(subgroups: Iterable[Subgroup]) -> List[Subgroup]:
    return sorted(subgroups, key=lambda S: (S.order, S.sorted_keys))


def _join_closure(found: Dict[FrozenSet[Key], Subgroup], seeds: Sequence[Subgroup], cap: int) -> None:
    """Grow ``found`` until it is closed under join with every seed"""
    frontier = list(found.values())
    while frontier:
        nxt = []
        for S in frontier:
            for C in seeds:
                if C.keys <= S.keys:
                    continue
                J = join(S, C)
                if J.keys not in found:
                    found[J.keys] = J
                    nxt.append(J)
                    if len(found) > cap:
                        raise GroupTooLarge(cap, "subgroups")
        frontier = nxt


def _class_reps(G: Group) -> List[Key]:
    """One representative per conjugacy class, in canonical order"""
    conjugators = [(g, _inv(g)) for g in G.gen_keys]
    seen = set()
    reps = []
    for x in G.sorted_keys:
        if x in seen:
            continue
        reps.append(x)
        seen.add(x)
        stack = [x]
        while stack:
            y = stack.pop()
            for g, g_inv in conjugators:
                z = _conj(g, y, g_inv)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return reps


def normal_subgroups(G: Group, limits: Optional[Limits] = None) -> List[Subgroup]:
    """All normal subgroups, smallest first"""
    limits = limits or DEFAULT_LIMITS
    if G.order > limits.max_order:
        raise GroupTooLarge(limits.max_order)
    trivial = G.trivial()
    found: Dict[FrozenSet[Key], Subgroup] = {trivial.keys: trivial}
    seeds: Dict[FrozenSet[Key], Subgroup] = {}
    for x in _class_reps(G)[1:]:
        N = normal_closure(G, Subgroup(G, _cyclic_keys(x), (x,)))
        seeds.setdefault(N.keys, N)
    for keys, N in seeds.items():
        found.setdefault(keys, N)
    _join_closure(found, list(seeds.values()), limits.max_subgroups)
    result = _canonical(found.values())
    log.debug(f"Group of order {G.order} has {len(result)} normal subgroups")
    return result


def subgroups(G: GroupLike, limits: Optional[Limits] = None) -> List[Subgroup]:
    """All subgroups, smallest first"""
    limits = limits or DEFAULT_LIMITS
    parent = G if isinstance(G, Group) else G.as_group()
    cyclic: Dict[FrozenSet[Key], Subgroup] = {}
    for x in parent.sorted_keys:
        keys = _cyclic_keys(x)
        if keys not in cyclic:
            cyclic[keys] = Subgroup(parent, keys, (x,))
    found = dict(cyclic)
    _join_closure(found, list(cyclic.values()), limits.max_subgroups)
    result = _canonical(found.values())
    log.debug(f"Group of order {parent.order} has {len(result)} subgroups")
    return result
