"""Strong and weak cluster magnification, reduction to faithful pairs, base change.

Magnifying L = K(α) by a Galois F/K linearly disjoint from L̃ is modelled
by Γ = G×R with M ↔ H×1, L ↔ H×R and F ↔ G×1. Base change to K' is
modelled the same way with K' ↔ G×1, i.e. every base change here is
linearly disjoint from L̃.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .clustercalc import (
    ExtensionPair,
    PairLike,
    RootPair,
    as_extension,
    ascending_chain,
    ascending_index,
    cluster_report,
    cluster_size,
    descending_chain,
    root_capacity,
)
from .errors import DegreeTooSmall, InvariantViolation
from .permcore import (
    DirectProduct,
    Group,
    Limits,
    Subgroup,
    as_subgroup,
    commute,
    coset_action,
    core,
    direct_product,
    join,
    normal_subgroups,
    subgroups,
)
from .reports import fingerprint

log = logging.getLogger("rootcluster.magnification")

EXHAUSTIVE_CAPACITY_DEGREE = 24


def to_galois_pair(E: PairLike, limits: Optional[Limits] = None) -> RootPair:
    """Faithful transitive pair of the field Fix(sub): Γ/core acting on the cosets of sub"""
    E = as_extension(E)
    C = core(E.ambient, E.sub)
    group = coset_action(E.ambient, E.sub, limits)
    if group.order * C.order != E.ambient.order:
        raise InvariantViolation(
            f"Coset action kernel has order {E.ambient.order // group.order}, core {C.order}"
        )
    # point 1 is the coset of the identity, so its stabilizer is the image of sub
    return RootPair.from_group(group, name=E.name)


def magnified_extension(
    P: RootPair, R: Group, limits: Optional[Limits] = None
) -> Tuple[ExtensionPair, DirectProduct]:
    """Unreduced model of M = LF: (G×R, H×1)"""
    D = direct_product(P.group, R, limits)
    name = f"{P.name or 'pair'}*{R.order}"
    return ExtensionPair(D.group, D.embed(P.stabilizer, None), name), D


def magnify(P: RootPair, R: Group, limits: Optional[Limits] = None) -> RootPair:
    """Compositum of L with a Galois F/K of group R; degree n·|R|, cluster size r·|R|.

    Raises:
        DegreeTooSmall: n ≤ 2
    """
    if P.n <= 2:
        raise DegreeTooSmall(f"Magnification needs degree > 2, got {P.n}")
    E, _ = magnified_extension(P, R, limits)
    M = to_galois_pair(E, limits)
    log.info(f"✓ Magnified {P.name or 'pair'} of degree {P.n} by a group of order {R.order}: degree {M.n}")
    return M


# ---------------------------------------------------------------------------
# Detection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionReport:
    """G' = A×B with H' = A'×1; L ↔ A'B and F ↔ A"""

    found: bool
    A: Subgroup
    B: Subgroup
    A_prime: Subgroup
    L_subgroup: Subgroup
    F_subgroup: Subgroup
    magnification_factor: int
    fingerprint: str


def detect_strong_magnification(
    P: RootPair, limits: Optional[Limits] = None, workers: Optional[int] = None
) -> List[DecompositionReport]:
    """Every internal decomposition G' = A×B exhibiting M as a strong magnification.

    Candidates A are normal subgroups containing H' with [A:H'] > 2; B ranges
    over nontrivial normal subgroups meeting A trivially, commuting with it
    and filling G'. An empty result means M/K is primitive.
    """
    G, H = P.group, P.stabilizer
    normals = normal_subgroups(G, limits)
    candidates_A = [A for A in normals if H.keys <= A.keys and A.order // H.order > 2]
    candidates_B = [B for B in normals if not B.is_trivial()]

    def partners(A: Subgroup) -> List[DecompositionReport]:
        found = []
        for B in candidates_B:
            if A.order * B.order != G.order or len(A.keys & B.keys) != 1:
                continue
            if not commute(A, B):
                continue
            found.append(
                DecompositionReport(
                    found=True,
                    A=A,
                    B=B,
                    A_prime=H,
                    L_subgroup=join(H, B),
                    F_subgroup=A,
                    magnification_factor=B.order,
                    fingerprint=fingerprint(G, A, B),
                )
            )
        return found

    with ThreadPoolExecutor(max_workers=workers) as executor:
        batches = list(executor.map(partners, candidates_A))

    reports = [rep for batch in batches for rep in batch]
    log.debug(f"{P.name or 'pair'}: {len(reports)} decomposition(s) over {len(normals)} normal subgroups")
    return reports


# ---------------------------------------------------------------------------
# Weak magnification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeakMagnificationReport:
    r_K_M: int
    r_K_L: int
    holds: bool
    factor: Union[int, Fraction]
    fingerprint: str


def is_weak_magnification(G: Group, U_M: Subgroup, U_L: Subgroup) -> WeakMagnificationReport:
    """Whether r_K(L) divides r_K(M) for L ⊆ M; factor is the quotient (exact even when it fails)"""
    cap = root_capacity(G, U_M, U_L)  # validates U_M ≤ U_L ≤ Γ
    r_M = cluster_size(G, U_M)
    r_L = cap.r
    holds = r_M % r_L == 0
    return WeakMagnificationReport(
        r_K_M=r_M,
        r_K_L=r_L,
        holds=holds,
        factor=r_M // r_L if holds else Fraction(r_M, r_L),
        fingerprint=cap.fingerprint,
    )


# ---------------------------------------------------------------------------
# Chain correspondences and base change
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StrongChainReport:
    descending_matches: bool
    ascending_matches: bool
    r_multiplies: bool
    s_preserved: bool
    t_multiplies: bool
    u_preserved: bool
    fingerprint: str

    @property
    def holds(self) -> bool:
        return all(
            (
                self.descending_matches,
                self.ascending_matches,
                self.r_multiplies,
                self.s_preserved,
                self.t_multiplies,
                self.u_preserved,
            )
        )


def _keys(chain: Sequence[Subgroup]) -> List:
    return [S.keys for S in chain]


def strong_chain_verify(P: RootPair, R: Group, limits: Optional[Limits] = None) -> StrongChainReport:
    """Both unique chains of M = LF against those of L, inside G×R"""
    E, D = magnified_extension(P, R, limits)
    desc_L = descending_chain(P).subgroup_chain
    asc_L = ascending_chain(P).subgroup_chain
    desc_M = descending_chain(E).subgroup_chain
    asc_M = ascending_chain(E).subgroup_chain

    if R.order == 1:
        want_desc = [D.embed(S, None) for S in desc_L]
        want_asc = [D.embed(S, None) for S in asc_L]
    else:
        H, G = desc_L[0], asc_L[0]
        if len(desc_L) == 1:
            want_desc = [D.embed(H, None), D.embed(H, R)]
        else:
            want_desc = [D.embed(H, None)] + [D.embed(S, R) for S in desc_L[1:]]
        if len(asc_L) == 1:
            want_asc = [D.embed(G, R), D.embed(G, None)]
        else:
            want_asc = [D.embed(G, R)] + [D.embed(S, None) for S in asc_L[1:]]

    base = cluster_report(P)
    r_M = cluster_size(E.ambient, E.sub)
    s_M = E.degree // r_M
    t_L, u_L = ascending_index(P)
    t_M, u_M = ascending_index(E)
    return StrongChainReport(
        descending_matches=_keys(desc_M) == _keys(want_desc),
        ascending_matches=_keys(asc_M) == _keys(want_asc),
        r_multiplies=r_M == base.r * R.order,
        s_preserved=s_M == base.s,
        t_multiplies=t_M == t_L * R.order,
        u_preserved=u_M == u_L,
        fingerprint=fingerprint(P.group, P.stabilizer, R),
    )


@dataclass(frozen=True)
class BaseChangeReport:
    """Flags for L/K against LK'/K' with K' linearly disjoint from L̃"""

    galois_preserved: bool
    cluster_size_preserved: bool
    descending_chain_preserved: bool
    ascending_chain_preserved: bool
    capacity_preserved: bool
    capacity_subfields: int
    ascending_index_preserved: bool
    strong_preserved: Optional[bool]
    weak_preserved: Optional[bool]
    fingerprint: str

    @property
    def holds(self) -> bool:
        flags = [
            self.galois_preserved,
            self.cluster_size_preserved,
            self.descending_chain_preserved,
            self.ascending_chain_preserved,
            self.capacity_preserved,
            self.ascending_index_preserved,
        ]
        flags += [f for f in (self.strong_preserved, self.weak_preserved) if f is not None]
        return all(flags)


def _over_base(D: DirectProduct, U: Subgroup) -> ExtensionPair:
    """The field Fix(U)·K' as an extension of K' = Fix(G×1)"""
    ambient = D.left_factor().as_group()
    return ExtensionPair(ambient, as_subgroup(ambient, D.embed(U, None)))


def _magnifier_survives(P: RootPair, S: Group, R: Group, limits: Optional[Limits]) -> Tuple[bool, bool]:
    """Strong and weak magnification of L by S, read over K' inside G×S×R"""
    E, DS = magnified_extension(P, S, limits)
    D = direct_product(E.ambient, R, limits)
    ambient = D.left_factor().as_group()
    U_M = as_subgroup(ambient, D.embed(E.sub, None))
    U_L = as_subgroup(ambient, D.embed(DS.embed(P.stabilizer, S), None))
    M_over = to_galois_pair(ExtensionPair(ambient, U_M), limits)
    strong = any(
        rep.magnification_factor == S.order for rep in detect_strong_magnification(M_over, limits)
    )
    weak = is_weak_magnification(ambient, U_M, U_L)
    return strong, weak.holds and weak.factor == S.order


def base_change_verify(
    P: RootPair,
    R: Group,
    magnifier: Optional[Group] = None,
    limits: Optional[Limits] = None,
) -> BaseChangeReport:
    """Check that cluster invariants of L/K survive the base change to K' = Fix(G×1) inside G×R.

    Capacities are compared for every intermediate field M ⊇ L (every
    subgroup of H) when n ≤ 24, otherwise for M = L and M = L̃.
    """
    G, H = P.group, P.stabilizer
    D = direct_product(G, R, limits)
    over_K = ExtensionPair(D.group, D.embed(H, R))
    over_Kp = _over_base(D, H)
    Kp_group = over_Kp.ambient

    galois = to_galois_pair(over_Kp, limits).group.order == G.order

    r = cluster_report(P).r
    sizes = (cluster_size(Kp_group, over_Kp.sub), cluster_size(over_K.ambient, over_K.sub))
    size_ok = sizes == (r, r)

    desc = descending_chain(P).subgroup_chain
    asc = ascending_chain(P).subgroup_chain
    desc_ok = _keys(descending_chain(over_Kp).subgroup_chain) == _keys(
        [D.embed(S, None) for S in desc]
    ) and _keys(descending_chain(over_K).subgroup_chain) == _keys([D.embed(S, R) for S in desc])
    asc_ok = _keys(ascending_chain(over_Kp).subgroup_chain) == _keys(
        [D.embed(S, None) for S in asc]
    ) and _keys(ascending_chain(over_K).subgroup_chain) == _keys([D.embed(S, R) for S in asc])

    if P.n <= EXHAUSTIVE_CAPACITY_DEGREE:
        fields = subgroups(H, limits)
    else:
        fields = [H, H.parent.trivial()]
    capacity_ok = True
    for U in fields:
        U = as_subgroup(G, U)
        below = root_capacity(G, U, H).rho
        above = root_capacity(Kp_group, as_subgroup(Kp_group, D.embed(U, None)), over_Kp.sub).rho
        if below != above:
            log.warning(f"Capacity changed under base change: {below} → {above}")
            capacity_ok = False

    t_ok = ascending_index(over_Kp) == ascending_index(P)

    strong = weak = None
    if magnifier is not None:
        strong, weak = _magnifier_survives(P, magnifier, R, limits)

    log.debug(
        f"Base change of {P.name or 'pair'} by order {R.order}: "
        f"{len(fields)} intermediate fields compared"
    )
    return BaseChangeReport(
        galois_preserved=galois,
        cluster_size_preserved=size_ok,
        descending_chain_preserved=desc_ok,
        ascending_chain_preserved=asc_ok,
        capacity_preserved=capacity_ok,
        capacity_subfields=len(fields),
        ascending_index_preserved=t_ok,
        strong_preserved=strong,
        weak_preserved=weak,
        fingerprint=fingerprint(G, H, R, magnifier) if magnifier else fingerprint(G, H, R),
    )
