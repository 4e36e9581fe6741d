"""Named fixtures with their expectation sets.

Each fixture is a check function registered with ``@fixture``; it receives an
InvariantSuite and the active Limits and records assertions. Fixtures that
revolve around one pair also expose it, so ``catalog:<name>`` works as a spec.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, List, Optional

from .clustercalc import (
    ExtensionPair,
    RootPair,
    ascending_chain,
    ascending_index,
    cluster_report,
    cluster_size,
    cluster_tower,
    descending_chain,
    hint_check,
    link_profile,
    root_capacity,
    tower_sweep,
)
from .constructions import (
    abelian_group,
    alternating,
    arith,
    ascending_index_pair,
    cluster_size_pair,
    cyclic_group,
    euler_checks,
    metacyclic,
    symmetric,
    tuple_action,
    tuple_fields,
    units_regular,
    wreathlike,
)
from .errors import UnknownFixture
from .magnification import (
    base_change_verify,
    detect_strong_magnification,
    is_weak_magnification,
    magnified_extension,
    magnify,
    strong_chain_verify,
    to_galois_pair,
)
from .permcore import (
    DEFAULT_LIMITS,
    Limits,
    core,
    intersect,
    is_transitive,
    join,
    normal_closure,
    normalizer,
    pointwise_stabilizer,
)
from .verify import InvariantSuite, SuiteReport

log = logging.getLogger("rootcluster.catalog")

CheckFn = Callable[[InvariantSuite, Limits], None]
BuildFn = Callable[[Limits], RootPair]


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    check: CheckFn
    build: Optional[BuildFn] = None
    slow: bool = False

    def pair(self, limits: Optional[Limits] = None) -> Optional[RootPair]:
        return self.build(limits or DEFAULT_LIMITS) if self.build else None


REGISTRY: Dict[str, Fixture] = {}


def fixture(name: str, description: str, build: Optional[BuildFn] = None, slow: bool = False):
    """Register a check function under ``name``"""

    def register(fn: CheckFn) -> CheckFn:
        if name in REGISTRY:
            raise ValueError(f"Duplicate fixture name: {name}")
        REGISTRY[name] = Fixture(name, description, fn, build, slow)
        return fn

    return register


def get_fixture(name: str) -> Fixture:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownFixture(f"Unknown fixture '{name}' (try 'catalog list')")


def list_fixtures() -> List[Fixture]:
    return list(REGISTRY.values())


def run_fixture(name: str, limits: Optional[Limits] = None) -> SuiteReport:
    fx = get_fixture(name)
    suite = InvariantSuite(fx.name)
    fx.check(suite, limits or DEFAULT_LIMITS)
    report = suite.report()
    mark = "✓" if report.passed else "✗"
    log.info(f"{mark} {name}: {report.total - report.failures}/{report.total} assertions ({report.elapsed})")
    return report


# ---------------------------------------------------------------------------
# Shared expectations
# ---------------------------------------------------------------------------

def _expect_clusters(suite: InvariantSuite, P: RootPair, r: int, s: int) -> None:
    prefix = f"{P.name} "
    rep = suite.attempt(f"{prefix}cluster size agreement", cluster_report, P)
    if rep is not None:
        suite.expect(f"{prefix}r", r, rep.r)
        suite.expect(f"{prefix}s", s, rep.s)


def _factors(P: RootPair, limits: Limits) -> List[int]:
    return sorted(d.magnification_factor for d in detect_strong_magnification(P, limits))


# ---------------------------------------------------------------------------
# Tuple actions
# ---------------------------------------------------------------------------

@fixture("nPk-5-2", "S_5 on ordered pairs: degree 20, r = 2, s = 10", build=lambda lim: tuple_action(5, 2, lim))
def _npk_5_2(suite: InvariantSuite, limits: Limits) -> None:
    P = tuple_action(5, 2, limits)
    suite.expect("degree", 20, P.n)
    _expect_clusters(suite, P, 2, 10)
    suite.expect("(t, u)", (1, 20), ascending_index(P))
    suite.expect("ascending chain length", 1, len(ascending_chain(P).subgroup_chain))
    suite.expect("descending chain length", 2, len(descending_chain(P).subgroup_chain))


@fixture("nPk-4-1", "S_4 on single points: natural action, r = 1", build=lambda lim: tuple_action(4, 1, lim))
def _npk_4_1(suite: InvariantSuite, limits: Limits) -> None:
    P = tuple_action(4, 1, limits)
    _expect_clusters(suite, P, 1, 4)
    suite.expect("t", 1, ascending_index(P)[0])
    suite.expect("descending chain length", 1, len(descending_chain(P).subgroup_chain))


@fixture("nPk-sweep", "tuple actions for 3 ≤ n ≤ 6: r = k!, s = C(n,k), chain shapes", slow=True)
def _npk_sweep(suite: InvariantSuite, limits: Limits) -> None:
    for n in range(3, 7):
        for k in range(1, n - 1):
            P = tuple_action(n, k, limits)
            _expect_clusters(suite, P, factorial(k), comb(n, k))
            asc = ascending_chain(P)
            suite.expect(f"{P.name} ascending chain length", 1, len(asc.subgroup_chain))
            suite.expect(f"{P.name} t", 1, asc.ascending_index)
            desc = descending_chain(P).subgroup_chain
            if k == 1:
                suite.expect(f"{P.name} descending chain length", 1, len(desc))
            elif 2 * k == n:
                suite.expect(f"{P.name} descending chain length", 3, len(desc))
                suite.expect(f"{P.name} middle stage cluster size", 2, cluster_size(P.group, desc[1]))
            else:
                suite.expect(f"{P.name} descending chain length", 2, len(desc))


@fixture("tuple-fields-5", "fields L_k = K(α_1..α_k) inside the S_5 closure: capacities and weak magnification")
def _tuple_fields(suite: InvariantSuite, limits: Limits) -> None:
    n = 5
    for k in range(1, n - 1):
        G, U_M, U_L = tuple_fields(n, 1, k, limits)
        suite.expect(f"ρ(L_{k}, L_1)", k, root_capacity(G, U_M, U_L).rho)
    G, U_M, U_L = tuple_fields(n, 1, 2, limits)
    suite.expect("ρ(L_2, L)", 2, root_capacity(G, U_M, U_L).rho)
    for k in range(1, n + 1):
        for j in range(k, n + 1):
            G, U_M, U_L = tuple_fields(n, k, j, limits)
            suite.expect_true(f"r(L_{k}) | r(L_{j})", is_weak_magnification(G, U_M, U_L).holds)


# ---------------------------------------------------------------------------
# Cluster size constructions
# ---------------------------------------------------------------------------

def _expect_coinciding_chains(suite: InvariantSuite, P: RootPair, r: int, s: int) -> None:
    G, H = P.group, P.stabilizer
    N = normalizer(G, H)
    HG = normal_closure(G, H)
    suite.expect(f"{P.name} N_G(H) = H^G", True, N.keys == HG.keys)
    suite.expect(f"{P.name} |N_G(H)|", r ** s, N.order)
    link = suite.attempt(f"{P.name} chain linkage", link_profile, P)
    if link is not None:
        suite.expect_true(f"{P.name} N = F", link.N_eq_F)
        suite.expect_true(f"{P.name} linkage clauses", all(link.clauses.values()))
        suite.expect(f"{P.name} r·t", P.n, r * link.relations["t"])
        suite.expect(f"{P.name} t = s", s, link.relations["t"])


@fixture("perlis-wreath-3-2", "(Z/3)^2 ⋊ Z/2 on 6 points: r = 3 and N = F", build=lambda lim: wreathlike(3, 2, lim))
def _wreath_3_2(suite: InvariantSuite, limits: Limits) -> None:
    P = wreathlike(3, 2, limits)
    suite.expect("order", 18, P.group.order)
    _expect_clusters(suite, P, 3, 2)
    _expect_coinciding_chains(suite, P, 3, 2)
    link = link_profile(P)
    suite.expect("descending shape", "L>N>K", link.descending_shape)
    suite.expect("ascending shape", "K<F<L", link.ascending_shape)


@fixture("perlis-wreath-2-3", "(Z/2)^3 ⋊ Z/3 on 6 points: r = 2, N_G(H) = H^G of order 8", build=lambda lim: wreathlike(2, 3, lim))
def _wreath_2_3(suite: InvariantSuite, limits: Limits) -> None:
    P = wreathlike(2, 3, limits)
    suite.expect("order", 24, P.group.order)
    _expect_clusters(suite, P, 2, 3)
    _expect_coinciding_chains(suite, P, 2, 3)


@fixture("perlis-wreath-sweep", "wreathlike(r, s) for r ≥ 2 and rs ≤ 24: cluster size r, coinciding chains", slow=True)
def _wreath_sweep(suite: InvariantSuite, limits: Limits) -> None:
    for r in range(2, 25):
        for s in range(1, 24 // r + 1):
            if r * s < 3:
                continue
            P = wreathlike(r, s, limits)
            suite.expect_true(f"{P.name} transitive", is_transitive(P.group))
            _expect_clusters(suite, P, r, s)
            if s > 1:
                _expect_coinciding_chains(suite, P, r, s)


@fixture("admissible-n-r-t", "every r | n and every t | n occurs, for 3 ≤ n ≤ 6")
def _admissible(suite: InvariantSuite, limits: Limits) -> None:
    for n in range(3, 7):
        for d in range(1, n + 1):
            if n % d:
                continue
            P = cluster_size_pair(n, d, limits)
            suite.expect(f"n={n} cluster size", d, cluster_report(P).r)
            Q = ascending_index_pair(n, d, limits)
            suite.expect(f"n={n} ascending index", d, ascending_index(Q)[0])


# ---------------------------------------------------------------------------
# Towers
# ---------------------------------------------------------------------------

@fixture("tower-metacyclic-9", "x^9 − c: towers (9, 54) and (9, 18, 54)", build=lambda lim: metacyclic(9, lim))
def _tower_9(suite: InvariantSuite, limits: Limits) -> None:
    P = metacyclic(9, limits)
    short = cluster_tower(P, [1, 2, 4, 3, 5, 6, 7, 8, 9])
    suite.expect("short tower degrees", (9, 54), short.degree_sequence)
    suite.expect("short tower length", 3, short.length)
    long = cluster_tower(P, [1, 4, 2, 3, 5, 6, 7, 8, 9])
    suite.expect("long tower degrees", (9, 18, 54), long.degree_sequence)
    suite.expect("long tower length", 4, long.length)
    sweep = tower_sweep(P)
    suite.expect_true("order bound on all orderings", sweep.bound_holds)
    suite.expect(
        "distinct outcomes",
        {((9, 54), 3), ((9, 18, 54), 4)},
        {(o.degree_sequence, o.length) for o in sweep.outcomes},
    )


@fixture("tower-metacyclic-8", "x^8 − c: towers (8, 32) and (8, 16, 32)", build=lambda lim: metacyclic(8, lim))
def _tower_8(suite: InvariantSuite, limits: Limits) -> None:
    P = metacyclic(8, limits)
    short = cluster_tower(P, [1, 2, 3, 4])
    suite.expect("short tower", ((8, 32), 3), (short.degree_sequence, short.length))
    long = cluster_tower(P, [1, 3, 2, 4])
    suite.expect("long tower", ((8, 16, 32), 4), (long.degree_sequence, long.length))
    suite.expect_true("order bound on all orderings", tower_sweep(P).bound_holds)


@fixture("alternating-4-tower", "A_4: every ordering gives the tower (4, 12)", build=lambda lim: alternating(4, lim))
def _tower_a4(suite: InvariantSuite, limits: Limits) -> None:
    P = alternating(4, limits)
    sweep = tower_sweep(P)
    suite.expect("orderings", 24, sweep.orderings)
    suite.expect("outcomes", [((4, 12), 3, 24)], [(o.degree_sequence, o.length, o.count) for o in sweep.outcomes])
    suite.expect_true("order bound", sweep.bound_holds)


# ---------------------------------------------------------------------------
# Unique chains
# ---------------------------------------------------------------------------

def _expect_nth_root_chains(suite: InvariantSuite, n: int, limits: Limits) -> None:
    P = metacyclic(n, limits)
    desc = descending_chain(P)
    asc = ascending_chain(P)
    if n % 2:
        suite.expect(f"{P.name} chain lengths", (1, 1), (len(desc.subgroup_chain), len(asc.subgroup_chain)))
        return
    length = arith(n).v2 + 1
    suite.expect(f"{P.name} descending chain length", length, len(desc.subgroup_chain))
    suite.expect(f"{P.name} descending steps", (2,) * (length - 1), desc.step_indices)
    suite.expect(f"{P.name} ascending chain length", length, len(asc.subgroup_chain))
    suite.expect(f"{P.name} ascending steps", (2,) * (length - 1), asc.step_indices)


@fixture("nth-root-12", "x^12 − c: order 48, both chains of 3 subgroups with index 2 steps", build=lambda lim: metacyclic(12, lim))
def _nth_root_12(suite: InvariantSuite, limits: Limits) -> None:
    P = metacyclic(12, limits)
    suite.expect("order", 48, P.group.order)
    _expect_clusters(suite, P, 2, 6)
    _expect_nth_root_chains(suite, 12, limits)
    suite.expect("t", 2, ascending_index(P)[0])


@fixture("nth-root-sweep", "x^n − c chains for even n ∈ {4,8,12,16,20} and odd n ∈ {9,15,21}")
def _nth_root_sweep(suite: InvariantSuite, limits: Limits) -> None:
    for n in (4, 8, 12, 16, 20, 9, 15, 21):
        _expect_nth_root_chains(suite, n, limits)
    for n in (9, 15, 21):
        _expect_clusters(suite, metacyclic(n, limits), 1, n)


@fixture("quartic-2", "x^4 − 2: N = F and no strong magnification", build=lambda lim: metacyclic(4, lim))
def _quartic(suite: InvariantSuite, limits: Limits) -> None:
    P = metacyclic(4, limits)
    suite.expect("order", 8, P.group.order)
    suite.expect("descending steps", (2, 2), descending_chain(P).step_indices)
    suite.expect_true("N = F", link_profile(P).N_eq_F)
    suite.expect("decompositions", [], _factors(P, limits))


# ---------------------------------------------------------------------------
# Magnification
# ---------------------------------------------------------------------------

@fixture("alternating-5", "A_5 natural action: primitive", build=lambda lim: alternating(5, lim))
def _a5(suite: InvariantSuite, limits: Limits) -> None:
    P = alternating(5, limits)
    _expect_clusters(suite, P, 1, 5)
    suite.expect("decompositions", [], _factors(P, limits))


@fixture(
    "magnified-wreath-3-2-by-2",
    "wreathlike(3,2) magnified by Z/2: n = 12, r = 6, s = 2, and detected back",
    build=lambda lim: magnify(wreathlike(3, 2, lim), cyclic_group(2), lim),
)
def _magnified_wreath(suite: InvariantSuite, limits: Limits) -> None:
    P = wreathlike(3, 2, limits)
    M = magnify(P, cyclic_group(2), limits)
    suite.expect("degree", 12, M.n)
    _expect_clusters(suite, M, 6, 2)
    reports = [d for d in detect_strong_magnification(M, limits) if d.magnification_factor == 2]
    suite.expect_true("decomposition with |B| = 2", reports)
    recovered = set()
    for d in reports:
        L = cluster_report(to_galois_pair(ExtensionPair(M.group, d.L_subgroup), limits))
        recovered.add((L.n, L.r, L.s))
    suite.expect_true("L recovered with (n, r, s) = (6, 3, 2)", (6, 3, 2) in recovered)


@fixture("magnification-roundtrip", "magnify then detect, for three pairs and three groups R", slow=True)
def _roundtrip(suite: InvariantSuite, limits: Limits) -> None:
    pairs = [wreathlike(3, 2, limits), tuple_action(4, 1, limits), metacyclic(9, limits)]
    groups = [("Z/2", cyclic_group(2)), ("Z/3", cyclic_group(3)), ("Z/2xZ/2", abelian_group([2, 2]))]
    for P in pairs:
        base = cluster_report(P)
        t, u = ascending_index(P)
        for label, R in groups:
            d = R.order
            M = magnify(P, R, limits)
            rep = cluster_report(M)
            tag = f"{P.name} by {label}"
            suite.expect(f"{tag} (r, s)", (base.r * d, base.s), (rep.r, rep.s))
            suite.expect(f"{tag} (t, u)", (t * d, u), ascending_index(M))
            suite.expect_true(f"{tag} detected", d in _factors(M, limits))
            suite.expect_true(f"{tag} chains", strong_chain_verify(P, R, limits).holds)


@fixture("galois-units", "Galois case: (Z/15)^× = Z/2×Z/4 splits, (Z/8)^× = Z/2×Z/2 does not", build=lambda lim: units_regular(15, lim))
def _galois_units(suite: InvariantSuite, limits: Limits) -> None:
    suite.expect_true("units:15 decomposes", _factors(units_regular(15, limits), limits))
    suite.expect("units:8 decompositions", [], _factors(units_regular(8, limits), limits))


@fixture("nth-root-6-strong", "x^6 − c is a cubic field magnified by a quadratic one", build=lambda lim: metacyclic(6, lim))
def _nth_root_6(suite: InvariantSuite, limits: Limits) -> None:
    P = metacyclic(6, limits)
    _expect_clusters(suite, P, 2, 3)
    suite.expect_true("decomposition with |B| = 2", 2 in _factors(P, limits))


@fixture("weak-counterexample-wreath-2-3", "N ⊂ L with r_K(N) ∤ r_K(L) for n = 6, r = 2 and r = 3", build=lambda lim: wreathlike(2, 3, lim))
def _weak_counterexample(suite: InvariantSuite, limits: Limits) -> None:
    for r, s in ((2, 3), (3, 2)):
        P = wreathlike(r, s, limits)
        G, H = P.group, P.stabilizer
        weak = is_weak_magnification(G, H, normalizer(G, H))
        suite.expect(f"{P.name} weak magnification over N", False, weak.holds)
        suite.expect(f"{P.name} factor", Fraction(r, s), weak.factor)
    P = wreathlike(2, 3, limits)
    closure = is_weak_magnification(P.group, core(P.group, P.stabilizer), P.stabilizer)
    suite.expect("Galois closure is a weak magnification", (True, 12), (closure.holds, closure.factor))


@fixture("basechange-wreath-2-3-by-5", "base change of wreathlike(2,3) to a Z/5 extension", build=lambda lim: wreathlike(2, 3, lim))
def _basechange_wreath(suite: InvariantSuite, limits: Limits) -> None:
    rep = base_change_verify(wreathlike(2, 3, limits), cyclic_group(5), limits=limits)
    suite.expect_true("all flags", rep.holds)
    suite.expect("intermediate fields compared", True, rep.capacity_subfields > 1)


@fixture("basechange-sweep", "base change for three pairs over Z/3 and Z/5, and survival of magnification", slow=True)
def _basechange_sweep(suite: InvariantSuite, limits: Limits) -> None:
    for P in (wreathlike(2, 3, limits), metacyclic(12, limits), tuple_action(4, 1, limits)):
        for m in (3, 5):
            rep = base_change_verify(P, cyclic_group(m), limits=limits)
            suite.expect_true(f"{P.name} over Z/{m}", rep.holds)
    rep = base_change_verify(wreathlike(2, 3, limits), cyclic_group(3), magnifier=cyclic_group(2), limits=limits)
    suite.expect("magnification survives", (True, True), (rep.strong_preserved, rep.weak_preserved))


# ---------------------------------------------------------------------------
# Root capacity and the Galois criterion for M/L
# ---------------------------------------------------------------------------

@fixture("capacity-12", "x^12 − c: capacities 6, 4, 12 and a strict compositum inequality", build=lambda lim: metacyclic(12, lim))
def _capacity_12(suite: InvariantSuite, limits: Limits) -> None:
    P = metacyclic(12, limits)
    G, H = P.group, P.stabilizer
    M1 = pointwise_stabilizer(G, [1, 3])
    M2 = pointwise_stabilizer(G, [1, 4])
    rho1 = root_capacity(G, M1, H).rho
    rho2 = root_capacity(G, M2, H).rho
    rho12 = root_capacity(G, intersect(M1, M2), H).rho
    rho_meet = root_capacity(G, join(M1, M2), H).rho
    suite.expect("capacities", (6, 4, 12), (rho1, rho2, rho12))
    suite.expect("capacity of the intersection field", 2, rho_meet)
    suite.expect_true("strict compositum inequality", rho12 > rho1 + rho2 - rho_meet)


def _magnified_hint(limits: Limits):
    P = wreathlike(2, 3, limits)
    E, D = magnified_extension(P, cyclic_group(3), limits)
    return E.ambient, E.sub, D.embed(P.stabilizer, D.right)


@fixture("hint-cases", "Galois criterion for M/L: a magnified case and five hypothesis failures")
def _hint_cases(suite: InvariantSuite, limits: Limits) -> None:
    G, U_M, U_L = _magnified_hint(limits)
    hint = suite.attempt("magnified pair", hint_check, G, U_M, U_L)
    if hint is not None:
        suite.expect("magnified pair conclusion", True, hint.conclusion)

    W = wreathlike(2, 3, limits)
    S5 = symmetric(5, limits).group
    stab12 = pointwise_stabilizer(S5, [1, 2])
    failures = {
        "Galois closure": (W.group, core(W.group, W.stabilizer), W.stabilizer),
        "H inside its normalizer": (W.group, W.stabilizer, normalizer(W.group, W.stabilizer)),
        "pair fields in S_5": (S5, stab12, normalizer(S5, stab12)),
        "L = K": (W.group, W.stabilizer, W.group.full()),
        "L_2 ⊂ L_3 in S_5": tuple_fields(5, 2, 3, limits),
    }
    for label, (G, U_M, U_L) in failures.items():
        hint = suite.attempt(label, hint_check, G, U_M, U_L)
        if hint is not None:
            suite.expect(f"{label} hypotheses", False, hint.hypotheses_hold)


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

@fixture("euler-9-3", "totient relations for l | n, with n = 9, l = 3 and a sweep to 200")
def _euler(suite: InvariantSuite, limits: Limits) -> None:
    e = euler_checks(9, 3)
    suite.expect("φ(9), φ(3)", (6, 2), (e.phi_n, e.phi_l))
    suite.expect("φ(3) | φ(9)", True, e.phi_divides)
    suite.expect("φ(9) = φ(3)", False, e.phi_equal)
    suite.expect("φ(6) = φ(3)", True, euler_checks(6, 3).phi_equal)
    broken = [
        (n, l)
        for n in range(1, 201)
        for l in range(1, n + 1)
        if n % l == 0 and not euler_checks(n, l).consistent
    ]
    suite.expect("inconsistent (n, l) up to 200", [], broken)

