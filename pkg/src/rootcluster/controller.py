"""Main orchestration controller"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import catalog
from .clustercalc import (
    CapacityReport,
    ChainReport,
    ClusterReport,
    TowerReport,
    TowerSweepReport,
    ascending_chain,
    ascending_index,
    cluster_partition,
    cluster_report,
    cluster_tower,
    descending_chain,
    root_capacity,
    tower_sweep,
)
from .errors import RootClusterError
from .magnification import (
    BaseChangeReport,
    DecompositionReport,
    base_change_verify,
    detect_strong_magnification,
    magnify,
)
from .permcore import DEFAULT_LIMITS, Limits
from .specfile import GroupSpec, resolve, resolve_group, resolve_upper
from .utils import format_duration
from .verify import SuiteReport, verify_pair

log = logging.getLogger("rootcluster.controller")


@dataclass(frozen=True)
class Invariants:
    name: str
    cluster: ClusterReport
    clusters: Tuple[Tuple[int, ...], ...]
    ascending_index: int
    complement_index: int


@dataclass(frozen=True)
class Detection:
    name: str
    primitive: bool
    decompositions: Tuple[DecompositionReport, ...]


@dataclass(frozen=True)
class Magnification:
    name: str
    factor: int
    before: ClusterReport
    after: ClusterReport
    ascending_before: Tuple[int, int]
    ascending_after: Tuple[int, int]


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    description: str
    slow: bool
    loadable: bool


@dataclass(frozen=True)
class CatalogRun:
    passed: bool
    fixtures: int
    failed: Tuple[str, ...]
    reports: Tuple[SuiteReport, ...]
    elapsed: str


Result = Union[
    Invariants,
    TowerReport,
    TowerSweepReport,
    ChainReport,
    CapacityReport,
    Detection,
    Magnification,
    BaseChangeReport,
    SuiteReport,
    CatalogRun,
    List[FixtureInfo],
]


class Controller:
    """Runs one command of the calculus against resolved specs"""

    def __init__(self, limits: Optional[Limits] = None, workers: Optional[int] = None):
        self.limits = limits or DEFAULT_LIMITS
        self.workers = workers
        log.debug(
            f"Limits: max_order={self.limits.max_order}, max_degree={self.limits.max_degree}, "
            f"workers={workers or 'default'}"
        )

    def load(self, spec: str) -> GroupSpec:
        try:
            loaded = resolve(spec, self.limits)
        except RootClusterError as e:
            log.error(f"Cannot load {spec}: {e}")
            raise
        log.debug(f"Loaded {loaded.name}: degree {loaded.group.degree}, order {loaded.group.order}")
        return loaded

    def invariants(self, spec: str) -> Invariants:
        P = self.load(spec).root_pair(self.limits)
        rep = cluster_report(P)
        t, u = ascending_index(P)
        log.info(f"✓ {P.name}: n={rep.n} r={rep.r} s={rep.s}")
        return Invariants(P.name, rep, cluster_partition(P), t, u)

    def tower(
        self, spec: str, order: Optional[Sequence[int]] = None, max_clusters: int = 10
    ) -> Union[TowerReport, TowerSweepReport]:
        P = self.load(spec).root_pair(self.limits)
        if order is not None:
            return cluster_tower(P, order)
        started = time.monotonic()
        sweep = tower_sweep(P, max_clusters=max_clusters, workers=self.workers)
        log.info(
            f"✓ Swept {sweep.orderings} orderings of {P.name}: {len(sweep.outcomes)} outcome(s) "
            f"in {format_duration(time.monotonic() - started)}"
        )
        return sweep

    def chain(self, spec: str, ascending: bool = False) -> ChainReport:
        E = self.load(spec).extension()
        return ascending_chain(E) if ascending else descending_chain(E)

    def capacity(self, spec: str, upper: str) -> CapacityReport:
        loaded = self.load(spec)
        U_M = resolve_upper(upper, loaded.group, self.limits)
        return root_capacity(loaded.group, U_M, loaded.subgroup)

    def detect(self, spec: str) -> Detection:
        P = self.load(spec).root_pair(self.limits)
        found = detect_strong_magnification(P, self.limits, self.workers)
        if found:
            log.info(f"✓ {P.name}: {len(found)} decomposition(s)")
        else:
            log.info(f"{P.name} is primitive")
        return Detection(P.name, not found, tuple(found))

    def magnify(self, spec: str, by: str) -> Magnification:
        P = self.load(spec).root_pair(self.limits)
        R = resolve_group(by, self.limits)
        M = magnify(P, R, self.limits)
        return Magnification(
            name=P.name,
            factor=R.order,
            before=cluster_report(P),
            after=cluster_report(M),
            ascending_before=ascending_index(P),
            ascending_after=ascending_index(M),
        )

    def basechange(self, spec: str, by: str, magnifier: Optional[str] = None) -> BaseChangeReport:
        P = self.load(spec).root_pair(self.limits)
        R = resolve_group(by, self.limits)
        S = resolve_group(magnifier, self.limits) if magnifier else None
        rep = base_change_verify(P, R, magnifier=S, limits=self.limits)
        if rep.holds:
            log.info(f"✓ {P.name}: every invariant survives base change by a group of order {R.order}")
        else:
            log.warning(f"✗ {P.name}: base change by a group of order {R.order} changed an invariant")
        return rep

    def verify(self, spec: str) -> SuiteReport:
        P = self.load(spec).root_pair(self.limits)
        log.info("=" * 60)
        log.info(f"VERIFYING {P.name}")
        log.info("=" * 60)
        report = verify_pair(P, self.limits, self.workers)
        mark = "✓" if report.passed else "✗"
        log.info(f"{mark} {report.total - report.failures}/{report.total} assertions passed ({report.elapsed})")
        return report

    # ------------------------------------------------------------------
    # Catalog
    # ------------------------------------------------------------------

    def catalog_list(self) -> List[FixtureInfo]:
        return [
            FixtureInfo(fx.name, fx.description, fx.slow, fx.build is not None)
            for fx in catalog.list_fixtures()
        ]

    def catalog_run(self, names: Sequence[str]) -> CatalogRun:
        """Run fixtures in parallel; reports come back in the order requested"""
        fixtures = [catalog.get_fixture(n).name for n in names]
        started = time.monotonic()
        log.info("=" * 60)
        log.info(f"RUNNING {len(fixtures)} FIXTURE(S)")
        log.info("=" * 60)

        results: Dict[str, SuiteReport] = {}
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            future_to_name = {
                executor.submit(catalog.run_fixture, name, self.limits): name for name in fixtures
            }
            for future in as_completed(future_to_name):
                name = future_to_name[future]
                try:
                    results[name] = future.result()
                except RootClusterError as e:
                    log.error(f"✗ {name}: {e}")
                    raise

        reports = tuple(results[n] for n in fixtures)
        failed = tuple(r.name for r in reports if not r.passed)
        elapsed = format_duration(time.monotonic() - started)
        if failed:
            log.warning(f"✗ {len(failed)}/{len(reports)} fixture(s) failed: {', '.join(failed)}")
        else:
            log.info(f"✓ All {len(reports)} fixture(s) passed in {elapsed}")
        return CatalogRun(not failed, len(reports), failed, reports, elapsed)
