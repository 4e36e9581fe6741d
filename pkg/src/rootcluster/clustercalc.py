"""Root cluster calculus on top of permcore.

A RootPair (G, Stab(1)) models L = K(α): points are the roots of the minimal
polynomial of α. An ExtensionPair (Γ, U) models the fixed field of U inside any
Galois extension with group Γ. Cluster size, chains and the ascending index
are computed directly in Γ; since the core C of U is normal in Γ and lies in U,
N_{Γ/C}(U/C) = N_Γ(U)/C and (U/C)^{Γ/C} = U^Γ/C, so indices agree with the
reduced pair.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .errors import (
    BadOrdering,
    BadParameter,
    InvalidExtensionPair,
    InvalidRootPair,
    InvariantViolation,
    NotAnExtension,
    NotASubgroup,
)
from .permcore import (
    Group,
    Key,
    Limits,
    Subgroup,
    as_subgroup,
    coset_action,
    coset_reps,
    conjugate_subgroup,
    core,
    fixed_points,
    intersect,
    is_normal,
    is_transitive,
    join,
    lies_in_conjugate,
    normal_closure,
    normalizer,
    normalizes,
    stabilizer,
)
from .reports import fingerprint

log = logging.getLogger("rootcluster.clustercalc")


# ---------------------------------------------------------------------------
# Pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionPair:
    """The field Fix(sub) inside a Galois extension with group ``ambient``"""

    ambient: Group
    sub: Subgroup
    name: str = ""

    def __post_init__(self):
        try:
            sub = as_subgroup(self.ambient, self.sub)
        except NotASubgroup as e:
            raise InvalidExtensionPair(str(e))
        object.__setattr__(self, "sub", sub)

    @property
    def degree(self) -> int:
        return self.sub.index

    @cached_property
    def fingerprint(self) -> str:
        return fingerprint(self.ambient, self.sub)


@dataclass(frozen=True)
class RootPair:
    """Faithful transitive group with the stabilizer of point 1"""

    group: Group
    stabilizer: Subgroup
    name: str = ""

    def __post_init__(self):
        G = self.group
        if not is_transitive(G):
            raise InvalidRootPair(f"Group of order {G.order} is not transitive on {G.degree} points")
        stab = stabilizer(G, 1)
        if self.stabilizer.keys != stab.keys:
            raise InvalidRootPair(
                f"Subgroup of order {self.stabilizer.order} is not the stabilizer of point 1"
            )
        # a permutation group acts faithfully, so core(G, Stab(1)) is trivial
        object.__setattr__(self, "stabilizer", stab)

    @classmethod
    def from_group(cls, group: Group, name: str = "") -> "RootPair":
        return cls(group, stabilizer(group, 1), name)

    @property
    def n(self) -> int:
        return self.group.degree

    def as_extension(self) -> ExtensionPair:
        return ExtensionPair(self.group, self.stabilizer, self.name)

    @cached_property
    def fingerprint(self) -> str:
        return fingerprint(self.group, self.stabilizer)


PairLike = Union[RootPair, ExtensionPair]


def as_extension(pair: PairLike) -> ExtensionPair:
    return pair.as_extension() if isinstance(pair, RootPair) else pair


def _check_chain(G: Group, U_M: Subgroup, U_L: Subgroup) -> Tuple[Subgroup, Subgroup]:
    """U_M ≤ U_L ≤ Γ, i.e. K ⊆ L ⊆ M"""
    try:
        U_M = as_subgroup(G, U_M)
        U_L = as_subgroup(G, U_L)
    except NotASubgroup as e:
        raise NotAnExtension(str(e))
    if not U_M.keys <= U_L.keys:
        raise NotAnExtension(
            f"Subgroup of order {U_M.order} is not contained in subgroup of order {U_L.order}"
        )
    return U_M, U_L


def cluster_size(G: Group, U: Subgroup) -> int:
    """[N_Γ(U):U], the cluster size of Fix(U)"""
    return normalizer(G, U).order // as_subgroup(G, U).order


# ---------------------------------------------------------------------------
# Cluster size, clusters, towers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClusterReport:
    n: int
    r: int
    s: int
    aut_order: int
    fingerprint: str


def cluster_report(P: RootPair) -> ClusterReport:
    """Cluster size three ways: fixed points of H, [N_G(H):H], and self-normalizing cosets"""
    G, H = P.group, P.stabilizer
    by_points = len(fixed_points(H))
    by_normalizer = cluster_size(G, H)
    by_cosets = sum(1 for t in coset_reps(G, H) if normalizes(t, H))
    if not by_points == by_normalizer == by_cosets:
        raise InvariantViolation(
            f"Cluster size disagreement: {by_points} fixed points, "
            f"normalizer index {by_normalizer}, {by_cosets} automorphisms"
        )
    log.debug(f"{P.name or 'pair'}: n={P.n} r={by_points} s={P.n // by_points}")
    return ClusterReport(
        n=P.n, r=by_points, s=P.n // by_points, aut_order=by_cosets, fingerprint=P.fingerprint
    )


def cluster_partition(P: RootPair) -> Tuple[Tuple[int, ...], ...]:
    """Blocks of roots sharing a stabilizer, ordered by least point"""
    G, H = P.group, P.stabilizer
    fixed = [p - 1 for p in fixed_points(H)]
    carriers: Dict[int, Key] = {}
    for k in G.keys:
        carriers.setdefault(k[0], k)
        if len(carriers) == P.n:
            break
    # the block of j is g(Fix(H)) for any g sending 1 to j
    blocks = {tuple(sorted(k[x] + 1 for x in fixed)) for k in carriers.values()}
    result = tuple(sorted(blocks))
    if sum(len(b) for b in result) != P.n:
        raise InvariantViolation(f"Cluster blocks do not partition {P.n} points: {result}")
    return result


@dataclass(frozen=True)
class TowerReport:
    ordering: Tuple[int, ...]
    jump_indices: Tuple[int, ...]
    degree_sequence: Tuple[int, ...]
    length: int
    order_bound: int
    capacities: Tuple[int, ...]
    fingerprint: str


def _order_bound(n: int, r: int, jumps: Sequence[int]) -> int:
    return n * prod(n - (m - 1) * r for m in jumps)


def _check_ordering(blocks: Sequence[Tuple[int, ...]], ordering: Sequence[int]) -> None:
    block_of = {p: i for i, b in enumerate(blocks) for p in b}
    seen = set()
    for point in ordering:
        if point not in block_of:
            raise BadOrdering(f"Point {point} is not a root (expected 1..{len(block_of)})")
        if block_of[point] in seen:
            raise BadOrdering(f"Point {point} repeats cluster {blocks[block_of[point]]}")
        seen.add(block_of[point])
    if len(seen) != len(blocks):
        raise BadOrdering(f"Ordering covers {len(seen)} of {len(blocks)} clusters")


def cluster_tower(P: RootPair, ordering: Sequence[int]) -> TowerReport:
    """Tower K ⊂ K(β1) ⊂ K(β1, β2) ⊂ … for one ordering of cluster representatives.

    Args:
        P: Root pair
        ordering: One 1-based point from every cluster

    Returns:
        TowerReport with jump indices, degrees [G:J_m] and ρ(K_m, K(β1)) per step

    Raises:
        BadOrdering: ordering is not a representative system
        InvariantViolation: the order bound fails
    """
    blocks = cluster_partition(P)
    ordering = tuple(ordering)
    _check_ordering(blocks, ordering)

    G = P.group
    n = P.n
    r = len(blocks[0])
    if n == 1:
        return TowerReport(ordering, (), (), 1, 1, (1,), P.fingerprint)

    J: Optional[FrozenSet[Key]] = None
    jumps: List[int] = []
    degrees: List[int] = []
    capacities: List[int] = []
    for m, beta in enumerate(ordering, start=1):
        b = beta - 1
        if J is None:
            J = frozenset(k for k in G.keys if k[b] == b)
            degrees.append(G.order // len(J))
        else:
            nxt = frozenset(k for k in J if k[b] == b)
            if len(nxt) < len(J):
                jumps.append(m)
                degrees.append(G.order // len(nxt))
            J = nxt
        capacities.append(sum(1 for i in range(n) if all(k[i] == i for k in J)))

    bound = _order_bound(n, r, jumps)
    if G.order > bound:
        raise InvariantViolation(f"|G| = {G.order} exceeds the tower bound {bound}")
    return TowerReport(
        ordering=ordering,
        jump_indices=tuple(jumps),
        degree_sequence=tuple(degrees),
        length=len(jumps) + 2,
        order_bound=bound,
        capacities=tuple(capacities),
        fingerprint=P.fingerprint,
    )


@dataclass(frozen=True)
class TowerOutcome:
    degree_sequence: Tuple[int, ...]
    length: int
    count: int
    example_ordering: Tuple[int, ...]


@dataclass(frozen=True)
class TowerSweepReport:
    orderings: int
    outcomes: Tuple[TowerOutcome, ...]
    bound_holds: bool
    fingerprint: str


_Continuations = Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Tuple[int, Tuple[int, ...]]]


class _TowerSweep:
    """Memoized walk over orderings; state is (running intersection, remaining representatives)"""

    def __init__(self, group_order: int):
        self.group_order = group_order
        self.memo: Dict[Tuple[FrozenSet[Key], Tuple[int, ...]], _Continuations] = {}

    def continuations(self, J: FrozenSet[Key], remaining: Tuple[int, ...]) -> _Continuations:
        """(jump offsets, degrees) → (ordering count, example suffix) over all orders of ``remaining``"""
        state = (J, remaining)
        if state in self.memo:
            return self.memo[state]
        result: _Continuations = {}
        if len(J) == 1 or not remaining:
            result[((), ())] = (factorial(len(remaining)), remaining)
        else:
            for beta in remaining:
                b = beta - 1
                nxt = frozenset(k for k in J if k[b] == b)
                rest = tuple(x for x in remaining if x != beta)
                jumped = len(nxt) < len(J)
                for (offsets, degrees), (count, suffix) in self.continuations(nxt, rest).items():
                    key = (
                        ((1,) if jumped else ()) + tuple(o + 1 for o in offsets),
                        ((self.group_order // len(nxt),) if jumped else ()) + degrees,
                    )
                    if key in result:
                        result[key] = (result[key][0] + count, result[key][1])
                    else:
                        result[key] = (count, (beta,) + suffix)
        self.memo[state] = result
        return result


def tower_sweep(P: RootPair, max_clusters: int = 10, workers: Optional[int] = None) -> TowerSweepReport:
    """Every ordering of the cluster representatives (least point of each block)"""
    blocks = cluster_partition(P)
    s = len(blocks)
    if s > max_clusters:
        raise BadParameter(f"{s} clusters exceed the sweep limit of {max_clusters}")
    G = P.group
    n = P.n
    r = len(blocks[0])
    reps = tuple(b[0] for b in blocks)

    def sweep_from(first: int) -> _Continuations:
        J = frozenset(k for k in G.keys if k[first - 1] == first - 1)
        rest = tuple(x for x in reps if x != first)
        return _TowerSweep(G.order).continuations(J, rest)

    with ThreadPoolExecutor(max_workers=workers) as executor:
        branches = list(executor.map(sweep_from, reps))

    merged: Dict[Tuple[Tuple[int, ...], int], List] = {}
    bound_holds = True
    for first, branch in zip(reps, branches):
        for (offsets, degrees), (count, suffix) in branch.items():
            jumps = tuple(1 + o for o in offsets)
            sequence = (n,) + degrees if n > 1 else ()
            length = len(jumps) + 2 if n > 1 else 1
            if G.order > _order_bound(n, r, jumps):
                bound_holds = False
            key = (sequence, length)
            if key in merged:
                merged[key][0] += count
            else:
                merged[key] = [count, (first,) + suffix]

    outcomes = tuple(
        TowerOutcome(degree_sequence=seq, length=length, count=count, example_ordering=example)
        for (seq, length), (count, example) in sorted(merged.items())
    )
    log.debug(f"Tower sweep over {factorial(s)} orderings: {len(outcomes)} distinct outcomes")
    return TowerSweepReport(
        orderings=factorial(s), outcomes=outcomes, bound_holds=bound_holds, fingerprint=P.fingerprint
    )


# ---------------------------------------------------------------------------
# Automorphisms and chains
# ---------------------------------------------------------------------------

def aut_group(E: PairLike, limits: Optional[Limits] = None) -> Group:
    """Aut(M/K) as N_Γ(U)/U acting on the cosets of U"""
    E = as_extension(E)
    N = normalizer(E.ambient, E.sub)
    return coset_action(N.as_group(), E.sub, limits)


@dataclass(frozen=True)
class ChainReport:
    direction: str
    subgroup_chain: Tuple[Subgroup, ...]
    step_indices: Tuple[int, ...]
    terminal_flag: str
    field_degrees: Tuple[int, ...]
    ascending_index: Optional[int]
    complement_index: Optional[int]
    fingerprint: str


def descending_chain(E: PairLike) -> ChainReport:
    """H ◁ N(H) ◁ N(N(H)) ◁ … until self-normalizing; step i is r_K(N_i)"""
    E = as_extension(E)
    G = E.ambient
    chain = [E.sub]
    while True:
        nxt = normalizer(G, chain[-1])
        if nxt.keys == chain[-1].keys:
            break
        chain.append(nxt)
    steps = tuple(b.order // a.order for a, b in zip(chain, chain[1:]))
    flag = "degenerate" if E.sub.keys == G.keys else "self-normalizing"
    log.debug(f"Descending chain of {len(chain)} subgroups, steps {steps}")
    return ChainReport(
        direction="descending",
        subgroup_chain=tuple(chain),
        step_indices=steps,
        terminal_flag=flag,
        field_degrees=tuple(S.index for S in chain),
        ascending_index=None,
        complement_index=None,
        fingerprint=E.fingerprint,
    )


def ascending_chain(E: PairLike) -> ChainReport:
    """G ▷ H^G ▷ H^(H^G) ▷ … until the normal closure stops shrinking; step i is t_{F_i}(L)"""
    E = as_extension(E)
    G = E.ambient
    chain = [G.full()]
    while True:
        current = chain[-1]
        nxt = as_subgroup(G, normal_closure(current.as_group(), E.sub))
        if nxt.keys == current.keys:
            break
        chain.append(nxt)
    steps = tuple(a.order // b.order for a, b in zip(chain, chain[1:]))
    t = chain[1].index if len(chain) > 1 else 1
    flag = "degenerate" if E.sub.keys == G.keys else "normal-closure-stable"
    log.debug(f"Ascending chain of {len(chain)} subgroups, steps {steps}, t={t}")
    return ChainReport(
        direction="ascending",
        subgroup_chain=tuple(chain),
        step_indices=steps,
        terminal_flag=flag,
        field_degrees=tuple(S.index for S in chain),
        ascending_index=t,
        complement_index=E.degree // t,
        fingerprint=E.fingerprint,
    )


def ascending_index(E: PairLike) -> Tuple[int, int]:
    """(t, u) = ([Γ:U^Γ], [U^Γ:U])"""
    E = as_extension(E)
    closure = normal_closure(E.ambient, E.sub)
    return closure.index, closure.order // E.sub.order


# ---------------------------------------------------------------------------
# Root capacity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CapacityReport:
    rho: int
    a: int
    r: int
    s: int
    support_subgroup: Subgroup
    witness_cosets: Tuple[int, ...]
    roots: Tuple[int, ...]
    fingerprint: str


def root_capacity(G: Group, U_M: Subgroup, U_L: Subgroup) -> CapacityReport:
    """Number of roots of L's minimal polynomial lying in M.

    Roots are the left cosets σU_L in coset_reps order; σU_L lies in M iff
    U_M ⊆ σU_Lσ⁻¹. Clusters are the cosets of N_Γ(U_L), and
    ``support_subgroup`` is the intersection of the conjugates over the
    clusters met, i.e. the subgroup fixing L_M.

    Raises:
        NotAnExtension: U_M ≤ U_L ≤ Γ fails
    """
    U_M, U_L = _check_chain(G, U_M, U_L)
    roots = tuple(
        i for i, t in enumerate(coset_reps(G, U_L), start=1) if lies_in_conjugate(U_M, t, U_L)
    )
    N = normalizer(G, U_L)
    r = N.order // U_L.order
    cluster_reps = coset_reps(G, N)
    witnesses = tuple(
        i for i, t in enumerate(cluster_reps, start=1) if lies_in_conjugate(U_M, t, U_L)
    )
    if len(roots) != len(witnesses) * r:
        raise InvariantViolation(
            f"Capacity {len(roots)} is not {len(witnesses)} clusters of size {r}"
        )
    T = G.full()
    for i in witnesses:
        T = intersect(T, conjugate_subgroup(G, cluster_reps[i - 1], U_L))
    return CapacityReport(
        rho=len(roots),
        a=len(witnesses),
        r=r,
        s=len(cluster_reps),
        support_subgroup=T,
        witness_cosets=witnesses,
        roots=roots,
        fingerprint=fingerprint(G, U_M, U_L),
    )


@dataclass(frozen=True)
class LMProfile:
    """Properties of L_M, the field generated by the roots of L's polynomial inside M"""

    within_intersection: bool
    same_capacity: bool
    minimal_iff_self: bool
    support_self_capacity: bool
    intersection_forces_minimal: bool
    fingerprint: str

    @property
    def holds(self) -> bool:
        return all(
            (
                self.within_intersection,
                self.same_capacity,
                self.minimal_iff_self,
                self.support_self_capacity,
                self.intersection_forces_minimal,
            )
        )


def lm_profile(G: Group, U_M: Subgroup, U_L: Subgroup) -> LMProfile:
    U_M, U_L = _check_chain(G, U_M, U_L)
    cap = root_capacity(G, U_M, U_L)
    T = cap.support_subgroup
    # M ∩ L̃ corresponds to the join of U_M with the core of U_L
    meet = join(U_M, core(G, U_L))
    minimal = meet.keys == U_L.keys
    return LMProfile(
        within_intersection=meet.keys <= T.keys,
        same_capacity=root_capacity(G, T, U_L).rho == cap.rho,
        minimal_iff_self=(cap.rho == cap.r) == (T.keys == U_L.keys),
        support_self_capacity=root_capacity(G, U_M, T).rho == cluster_size(G, T),
        intersection_forces_minimal=(not minimal) or cap.rho == cap.r,
        fingerprint=cap.fingerprint,
    )


# ---------------------------------------------------------------------------
# Automorphism laws
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RestrictionProfile:
    """Aut(M/K), Aut(M/L), Aut(L/K) and the restriction map between them"""

    r_K_M: int
    r_L_M: int
    r_K_L: int
    aut_divides: bool
    restricts: bool
    kernel_normal: Optional[bool]
    product_divides: Optional[bool]
    onto: Optional[bool]
    capacity_forces_restriction: bool
    fingerprint: str


def restriction_profile(G: Group, U_M: Subgroup, U_L: Subgroup) -> RestrictionProfile:
    """Raises InvariantViolation when restriction exists but its laws fail"""
    U_M, U_L = _check_chain(G, U_M, U_L)
    NM = normalizer(G, U_M)
    NL = normalizer(G, U_L)
    W = intersect(NM, U_L)  # Aut(M/L) lifted: N_{U_L}(U_M)
    r_K_M = NM.order // U_M.order
    r_K_L = NL.order // U_L.order
    r_L_M = W.order // U_M.order
    restricts = NM.keys <= NL.keys

    kernel_normal = product_divides = onto = None
    if restricts:
        kernel_normal = is_normal(NM.as_group(), W)
        product_divides = (r_L_M * r_K_L) % r_K_M == 0
        image = NM.order // W.order
        onto = image == r_K_L
        if not kernel_normal or not product_divides or onto != (r_K_M == r_L_M * r_K_L):
            raise InvariantViolation(
                f"Restriction laws fail: r_K(M)={r_K_M}, r_L(M)={r_L_M}, r_K(L)={r_K_L}, image {image}"
            )

    rho = sum(1 for t in coset_reps(G, U_L) if lies_in_conjugate(U_M, t, U_L))
    return RestrictionProfile(
        r_K_M=r_K_M,
        r_L_M=r_L_M,
        r_K_L=r_K_L,
        aut_divides=r_K_M % r_L_M == 0,
        restricts=restricts,
        kernel_normal=kernel_normal,
        product_divides=product_divides,
        onto=onto,
        capacity_forces_restriction=rho != r_K_L or restricts,
        fingerprint=fingerprint(G, U_M, U_L),
    )


@dataclass(frozen=True)
class NormalizerRestriction:
    quotient_order: int
    target_order: int
    divides: bool
    fingerprint: str


def normalizer_restriction(G: Group, U_M: Subgroup, U_L: Subgroup) -> NormalizerRestriction:
    """N_{Aut(M/K)}(Aut(M/L))/Aut(M/L) against Aut(M^{Aut(M/L)}/K)"""
    U_M, U_L = _check_chain(G, U_M, U_L)
    NM = normalizer(G, U_M)
    W = intersect(NM, U_L)
    NW = normalizer(G, W)
    quotient = intersect(NM, NW).order // W.order
    target = NW.order // W.order
    return NormalizerRestriction(
        quotient_order=quotient,
        target_order=target,
        divides=target % quotient == 0,
        fingerprint=fingerprint(G, U_M, U_L),
    )


@dataclass(frozen=True)
class HintReport:
    intersection_condition: bool
    degree_condition: bool
    hypotheses_hold: bool
    conclusion: Optional[bool]
    fingerprint: str


def hint_check(G: Group, U_M: Subgroup, U_L: Subgroup) -> HintReport:
    """If M ∩ L̃ = L and [M:L]·r_K(L) = r_K(M), then M/L is Galois (U_M ⊴ U_L)"""
    U_M, U_L = _check_chain(G, U_M, U_L)
    intersection_condition = join(U_M, core(G, U_L)).keys == U_L.keys
    degree_condition = (U_L.order // U_M.order) * cluster_size(G, U_L) == cluster_size(G, U_M)
    hypotheses = intersection_condition and degree_condition
    conclusion = None
    if hypotheses:
        conclusion = is_normal(U_L.as_group(), U_M)
        if not conclusion:
            raise InvariantViolation(
                f"Subgroup of order {U_M.order} is not normal in subgroup of order {U_L.order} "
                f"although both hypotheses hold"
            )
    return HintReport(
        intersection_condition=intersection_condition,
        degree_condition=degree_condition,
        hypotheses_hold=hypotheses,
        conclusion=conclusion,
        fingerprint=fingerprint(G, U_M, U_L),
    )


# ---------------------------------------------------------------------------
# Linkage of the two chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinkProfile:
    N_eq_F: bool
    H_normal_in_HG: bool
    NGH_normal_in_G: bool
    clauses: Dict[str, bool]
    relations: Dict[str, int]
    descending_shape: str
    ascending_shape: str
    fingerprint: str


def _descending_shape(chain: ChainReport, normal_middle: bool) -> str:
    count = len(chain.subgroup_chain)
    if count == 1:
        return "singleton"
    if chain.subgroup_chain[1].index == 1:
        return "L>K"
    if count == 3 and chain.subgroup_chain[2].index == 1 and normal_middle:
        return "L>N>K"
    return f"{count - 1} steps"


def _ascending_shape(chain: ChainReport, H: Subgroup) -> str:
    count = len(chain.subgroup_chain)
    if count == 1:
        return "singleton"
    if chain.subgroup_chain[1].keys == H.keys:
        return "K<L"
    if count == 3 and chain.subgroup_chain[2].keys == H.keys:
        return "K<F<L"
    return f"{count - 1} steps"


def link_profile(P: PairLike) -> LinkProfile:
    """Relations between N = Fix(N_G(H)) and F = Fix(H^G).

    Raises:
        InvariantViolation: H^G = N_G(H) without r·t = n and t = s
    """
    E = as_extension(P)
    G, H = E.ambient, E.sub
    n = E.degree
    N = normalizer(G, H)
    HG = normal_closure(G, H)
    r, s = N.order // H.order, N.index
    t, u = HG.index, HG.order // H.order

    H_normal_in_HG = is_normal(HG.as_group(), H)
    NGH_normal = is_normal(G, N)
    coincide = HG.keys == N.keys
    desc = descending_chain(E)
    asc = ascending_chain(E)
    desc_shape = _descending_shape(desc, NGH_normal)
    asc_shape = _ascending_shape(asc, H)

    if n == 1:
        clauses = {str(i): True for i in range(1, 6)}
    else:
        chains_coincide = (
            [S.keys for S in desc.subgroup_chain] == [H.keys, N.keys, G.keys]
            and [S.keys for S in asc.subgroup_chain] == [G.keys, HG.keys, H.keys]
        )
        clauses = {
            "1": (N.keys == G.keys) == (r == n) == (t == n) == (HG.keys == H.keys),
            "2": H_normal_in_HG == (HG.keys <= N.keys),
            "3": (not NGH_normal) or HG.keys <= N.keys,
            "4": (not coincide)
            or (NGH_normal and N.keys != G.keys and H_normal_in_HG and H.keys != HG.keys),
            "5": coincide == chains_coincide,
        }
        if coincide and not (r * t == n and t == s):
            raise InvariantViolation(f"N = F but r·t = {r * t}, n = {n}, t = {t}, s = {s}")

    return LinkProfile(
        N_eq_F=coincide,
        H_normal_in_HG=H_normal_in_HG,
        NGH_normal_in_G=NGH_normal,
        clauses=clauses,
        relations={"n": n, "r": r, "s": s, "t": t, "u": u},
        descending_shape=desc_shape,
        ascending_shape=asc_shape,
        fingerprint=E.fingerprint,
    )
