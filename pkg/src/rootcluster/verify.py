"""Assertion bookkeeping and the cross-module invariant suite run by ``verify``"""
import logging
import time
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple, TypeVar

from .clustercalc import (
    ExtensionPair,
    RootPair,
    ascending_chain,
    ascending_index,
    aut_group,
    cluster_partition,
    cluster_report,
    descending_chain,
    hint_check,
    link_profile,
    lm_profile,
    normalizer_restriction,
    restriction_profile,
    root_capacity,
    tower_sweep,
)
from .constructions import cyclic_group
from .errors import GroupTooLarge, InvariantViolation
from .magnification import (
    base_change_verify,
    detect_strong_magnification,
    is_weak_magnification,
    magnified_extension,
    magnify,
    strong_chain_verify,
    to_galois_pair,
)
from .permcore import DEFAULT_LIMITS, Limits, as_subgroup, is_normal, subgroups
from .utils import format_duration

log = logging.getLogger("rootcluster.verify")

T = TypeVar("T")

SWEEP_MAX_DEGREE = 24
SWEEP_MAX_SUBGROUP_ORDER = 2000
TOWER_MAX_CLUSTERS = 8
MAGNIFY_MAX_ORDER = 2000


@dataclass(frozen=True)
class Assertion:
    name: str
    expected: Any
    actual: Any
    passed: bool


@dataclass(frozen=True)
class SuiteReport:
    name: str
    passed: bool
    total: int
    failures: int
    skipped: Tuple[str, ...]
    assertions: Tuple[Assertion, ...]
    elapsed: str


class InvariantSuite:
    """Collects assertions; a suite passes only if every single one does"""

    def __init__(self, name: str):
        self.name = name
        self.assertions: List[Assertion] = []
        self.skipped: List[str] = []
        self._started = time.monotonic()

    def expect(self, name: str, expected: Any, actual: Any) -> bool:
        passed = expected == actual
        self.assertions.append(Assertion(name, expected, actual, passed))
        if not passed:
            log.warning(f"✗ {self.name}: {name}: expected {expected!r}, got {actual!r}")
        return passed

    def expect_true(self, name: str, condition: bool) -> bool:
        return self.expect(name, True, bool(condition))

    def attempt(self, name: str, fn: Callable[..., T], *args: Any, **kwargs: Any) -> Optional[T]:
        """Run a computation that raises InvariantViolation when an internal law fails"""
        try:
            result = fn(*args, **kwargs)
        except InvariantViolation as e:
            self.assertions.append(Assertion(name, "holds", str(e), False))
            log.warning(f"✗ {self.name}: {name}: {e}")
            return None
        self.assertions.append(Assertion(name, "holds", "holds", True))
        return result

    def skip(self, what: str) -> None:
        log.debug(f"{self.name}: skipped {what}")
        self.skipped.append(what)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def report(self) -> SuiteReport:
        failures = sum(1 for a in self.assertions if not a.passed)
        return SuiteReport(
            name=self.name,
            passed=failures == 0,
            total=len(self.assertions),
            failures=failures,
            skipped=tuple(self.skipped),
            assertions=tuple(self.assertions),
            elapsed=format_duration(time.monotonic() - self._started),
        )


# ---------------------------------------------------------------------------
# Pair suite
# ---------------------------------------------------------------------------

def check_intermediate_fields(suite: InvariantSuite, P: RootPair, limits: Limits) -> None:
    """Capacity, automorphism and hint laws for every field M ⊇ L"""
    G, H = P.group, P.stabilizer
    if P.n > SWEEP_MAX_DEGREE or H.order > SWEEP_MAX_SUBGROUP_ORDER:
        suite.skip("intermediate-field sweep")
        return
    fields = [as_subgroup(G, U) for U in subgroups(H, limits)]
    t_L, _ = ascending_index(P)
    bad = {
        "r divides capacity": 0,
        "L_M laws": 0,
        "restriction laws": 0,
        "normalizer restriction divides": 0,
        "r_L(M) divides r_K(M)": 0,
        "t_K(L) divides t_K(M)": 0,
        "Galois criterion for M/L": 0,
    }
    for U in fields:
        try:
            cap = root_capacity(G, U, H)
            bad["r divides capacity"] += cap.rho % cap.r != 0
        except InvariantViolation:
            bad["r divides capacity"] += 1
        try:
            bad["L_M laws"] += not lm_profile(G, U, H).holds
        except InvariantViolation:
            bad["L_M laws"] += 1
        try:
            bad["r_L(M) divides r_K(M)"] += not restriction_profile(G, U, H).aut_divides
        except InvariantViolation:
            bad["restriction laws"] += 1
        bad["normalizer restriction divides"] += not normalizer_restriction(G, U, H).divides
        bad["t_K(L) divides t_K(M)"] += ascending_index(ExtensionPair(G, U))[0] % t_L != 0
        try:
            hint_check(G, U, H)
        except InvariantViolation:
            bad["Galois criterion for M/L"] += 1
    for name, count in bad.items():
        suite.expect(f"{name} ({len(fields)} fields)", 0, count)


def check_chains(suite: InvariantSuite, P: RootPair, r: int) -> None:
    G, H = P.group, P.stabilizer
    n = P.n
    desc = descending_chain(P).subgroup_chain
    asc = ascending_chain(P).subgroup_chain
    t, u = ascending_index(P)
    suite.expect("t·u = n", n, t * u)
    suite.expect("descending chain is singleton iff r = 1", r == 1, len(desc) == 1)
    suite.expect("ascending chain is singleton iff t = 1", t == 1, len(asc) == 1)
    if len(desc) > 1:
        suite.expect("first descending step is r", r, desc[1].order // desc[0].order)
    for i, (a, b) in enumerate(zip(desc, desc[1:])):
        stage = to_galois_pair(ExtensionPair(G, a))
        suite.expect(f"descending step {i} is r_K(N_{i})", cluster_report(stage).r, b.order // a.order)
    if 1 < t < n:
        # L over F = Fix(H^G)
        over_F = to_galois_pair(ExtensionPair(asc[1].as_group(), H))
        r_F = cluster_report(over_F).r
        suite.expect("r_K(L) divides t·r_F(L)", 0, (t * r_F) % r)
    suite.expect_true(
        "descending chain reaches Γ exactly after a normal stage",
        all((b.keys == G.keys) == is_normal(G, a) for a, b in zip(desc, desc[1:])),
    )
    suite.expect_true(
        "ascending chain reaches U exactly after a stage normalizing it",
        all((b.keys == H.keys) == is_normal(a.as_group(), H) for a, b in zip(asc, asc[1:])),
    )

    link = suite.attempt("chain linkage", link_profile, P)
    if link is None or n == 1:
        return
    suite.expect_true("linkage clauses", all(link.clauses.values()))
    galois = r == n
    suite.expect("shape L>K iff Galois", galois, link.descending_shape == "L>K")
    suite.expect("shape K<L iff Galois", galois, link.ascending_shape == "K<L")
    suite.expect(
        "shape L>N>K iff N_G(H) is proper normal",
        link.NGH_normal_in_G and 1 < r < n,
        link.descending_shape == "L>N>K",
    )
    suite.expect(
        "shape K<F<L iff H is proper normal in proper H^G",
        link.H_normal_in_HG and 1 < t < n,
        link.ascending_shape == "K<F<L",
    )


def check_towers(suite: InvariantSuite, P: RootPair, r: int, workers: Optional[int]) -> None:
    s = P.n // r
    if s > TOWER_MAX_CLUSTERS:
        suite.skip("tower sweep")
        return
    sweep = suite.attempt("tower bound", tower_sweep, P, TOWER_MAX_CLUSTERS, workers)
    if sweep is None:
        return
    suite.expect_true("tower order bound on every ordering", sweep.bound_holds)
    n = P.n
    full = [o for o in sweep.outcomes if len(o.degree_sequence) > 1 and o.degree_sequence[1] == n * (n - 1)]
    if full:
        suite.expect("second tower degree n(n−1) forces r = 1", 1, r)


def check_magnification(suite: InvariantSuite, P: RootPair, limits: Limits) -> None:
    if P.n <= 2 or P.group.order > MAGNIFY_MAX_ORDER:
        suite.skip("magnification")
        return
    R = cyclic_group(2)
    base = cluster_report(P)
    t, u = ascending_index(P)
    M = magnify(P, R, limits)
    mag = cluster_report(M)
    suite.expect("magnified r", 2 * base.r, mag.r)
    suite.expect("magnified s", base.s, mag.s)
    suite.expect("magnified (t, u)", (2 * t, u), ascending_index(M))
    factors = [d.magnification_factor for d in detect_strong_magnification(M, limits)]
    suite.expect_true("magnification by Z/2 is detected", 2 in factors)
    suite.expect_true("chains of the magnified field", strong_chain_verify(P, R, limits).holds)
    E, D = magnified_extension(P, R, limits)
    weak = is_weak_magnification(E.ambient, E.sub, D.embed(P.stabilizer, R))
    suite.expect("weak magnification factor", 2, weak.factor)

    if P.group.order * 3 > limits.max_order:
        suite.skip("base change")
        return
    suite.expect_true("base change by Z/3", base_change_verify(P, cyclic_group(3), limits=limits).holds)


def check_pair(
    suite: InvariantSuite, P: RootPair, limits: Optional[Limits] = None, workers: Optional[int] = None
) -> None:
    limits = limits or DEFAULT_LIMITS
    rep = suite.attempt("cluster size agreement", cluster_report, P)
    if rep is None:
        return
    suite.expect("r·s = n", P.n, rep.r * rep.s)
    blocks = suite.attempt("cluster partition", cluster_partition, P)
    if blocks is not None:
        suite.expect_true("clusters have size r", all(len(b) == rep.r for b in blocks))
    suite.expect("|Aut(L/K)| = r", rep.r, aut_group(P, limits).order)
    check_chains(suite, P, rep.r)
    check_towers(suite, P, rep.r, workers)
    try:
        check_intermediate_fields(suite, P, limits)
        check_magnification(suite, P, limits)
    except GroupTooLarge as e:
        suite.skip(f"remaining checks ({e})")


def verify_pair(P: RootPair, limits: Optional[Limits] = None, workers: Optional[int] = None) -> SuiteReport:
    """Run the full invariant suite on one pair"""
    suite = InvariantSuite(P.name or P.fingerprint)
    check_pair(suite, P, limits, workers)
    report = suite.report()
    log.debug(f"{report.name}: {report.total - report.failures}/{report.total} assertions in {report.elapsed}")
    return report
