"""Aligned text tables for each command's result"""
from typing import Any, Callable, Dict, List

from .clustercalc import CapacityReport, ChainReport, TowerReport, TowerSweepReport
from .controller import CatalogRun, Detection, FixtureInfo, Invariants, Magnification
from .magnification import BaseChangeReport
from .reports import Section, render_table
from .verify import SuiteReport


Renderer = Callable[[Any], str]

RENDERERS: Dict[type, Renderer] = {}


def renderer(cls: type) -> Callable[[Renderer], Renderer]:
    def register(fn: Renderer) -> Renderer:
        RENDERERS[cls] = fn
        return fn

    return register


def render(result: Any) -> str:
    """Text table for any command result"""
    fn = RENDERERS.get(type(result))
    if fn is None:
        raise TypeError(f"No table for {type(result).__name__}")
    return fn(result)


@renderer(Invariants)
def _invariants(result: Invariants) -> str:
    rep = result.cluster
    rows = [
        ("n", rep.n),
        ("r", rep.r),
        ("s", rep.s),
        ("|Aut(L/K)|", rep.aut_order),
        ("t", result.ascending_index),
        ("u", result.complement_index),
        ("fingerprint", rep.fingerprint),
    ]
    clusters = Section("Clusters", ["#", "points"], [[i, c] for i, c in enumerate(result.clusters, 1)])
    return render_table(f"Cluster invariants: {result.name}", rows, [clusters])


@renderer(TowerReport)
def _tower(result: TowerReport) -> str:
    rows = [
        ("ordering", result.ordering),
        ("jumps", result.jump_indices),
        ("degrees", result.degree_sequence),
        ("length", result.length),
        ("order bound", result.order_bound),
        ("fingerprint", result.fingerprint),
    ]
    steps = Section(
        "Capacities",
        ["root", "capacity"],
        [[c, cap] for c, cap in zip(result.ordering, result.capacities)],
    )
    return render_table("Cluster tower", rows, [steps])


@renderer(TowerSweepReport)
def _tower_sweep(result: TowerSweepReport) -> str:
    rows = [
        ("orderings", result.orderings),
        ("outcomes", len(result.outcomes)),
        ("order bound holds", result.bound_holds),
        ("fingerprint", result.fingerprint),
    ]
    outcomes = Section(
        "Outcomes",
        ["degrees", "length", "orderings", "example"],
        [[o.degree_sequence, o.length, o.count, o.example_ordering] for o in result.outcomes],
    )
    return render_table("Cluster towers over all orderings", rows, [outcomes])


@renderer(ChainReport)
def _chain(result: ChainReport) -> str:
    rows = [
        ("steps", len(result.step_indices)),
        ("step indices", result.step_indices),
        ("terminal", result.terminal_flag),
        ("field degrees", result.field_degrees),
    ]
    if result.ascending_index is not None:
        rows += [("t", result.ascending_index), ("u", result.complement_index)]
    rows.append(("fingerprint", result.fingerprint))
    stages = Section(
        "Subgroups",
        ["stage", "order", "field degree"],
        [[i, U.order, d] for i, (U, d) in enumerate(zip(result.subgroup_chain, result.field_degrees))],
    )
    return render_table(f"{result.direction.capitalize()} chain", rows, [stages])


@renderer(CapacityReport)
def _capacity(result: CapacityReport) -> str:
    rows = [
        ("rho", result.rho),
        ("a", result.a),
        ("r", result.r),
        ("s", result.s),
        ("support", result.support_subgroup),
        ("witness cosets", result.witness_cosets),
        ("roots in M", result.roots),
        ("fingerprint", result.fingerprint),
    ]
    return render_table("Root capacity", rows)


@renderer(Detection)
def _detection(result: Detection) -> str:
    rows = [("primitive", result.primitive), ("decompositions", len(result.decompositions))]
    found = Section(
        "Decompositions",
        ["|A|", "|B|", "|A'|", "|L|", "|F|", "factor"],
        [
            [d.A.order, d.B.order, d.A_prime.order, d.L_subgroup.order, d.F_subgroup.order,
             d.magnification_factor]
            for d in result.decompositions
        ],
    )
    return render_table(f"Strong magnification: {result.name}", rows, [found])


@renderer(Magnification)
def _magnification(result: Magnification) -> str:
    before, after = result.before, result.after
    table = Section(
        "Invariants",
        ["", "before", "after"],
        [
            ["n", before.n, after.n],
            ["r", before.r, after.r],
            ["s", before.s, after.s],
            ["t", result.ascending_before[0], result.ascending_after[0]],
            ["u", result.ascending_before[1], result.ascending_after[1]],
        ],
    )
    rows = [("factor", result.factor), ("fingerprint", after.fingerprint)]
    return render_table(f"Magnification of {result.name}", rows, [table])


@renderer(BaseChangeReport)
def _basechange(result: BaseChangeReport) -> str:
    rows = [
        ("Galois", result.galois_preserved),
        ("cluster size", result.cluster_size_preserved),
        ("descending chain", result.descending_chain_preserved),
        ("ascending chain", result.ascending_chain_preserved),
        (f"capacity ({result.capacity_subfields} fields)", result.capacity_preserved),
        ("ascending index", result.ascending_index_preserved),
        ("strong magnification", result.strong_preserved),
        ("weak magnification", result.weak_preserved),
        ("all preserved", result.holds),
        ("fingerprint", result.fingerprint),
    ]
    return render_table("Base change", rows)


@renderer(SuiteReport)
def _suite(result: SuiteReport) -> str:
    rows = [
        ("result", "PASS" if result.passed else "FAIL"),
        ("assertions", result.total),
        ("failures", result.failures),
        ("skipped", result.skipped),
        ("elapsed", result.elapsed),
    ]
    checks = Section(
        "Assertions",
        ["", "assertion", "expected", "actual"],
        [["✓" if a.passed else "✗", a.name, a.expected, a.actual] for a in result.assertions],
    )
    return render_table(f"Invariant suite: {result.name}", rows, [checks])


@renderer(CatalogRun)
def _catalog_run(result: CatalogRun) -> str:
    rows = [
        ("result", "PASS" if result.passed else "FAIL"),
        ("fixtures", result.fixtures),
        ("failed", result.failed),
        ("elapsed", result.elapsed),
    ]
    per_fixture = Section(
        "Fixtures",
        ["", "fixture", "passed", "elapsed"],
        [
            ["✓" if r.passed else "✗", r.name, f"{r.total - r.failures}/{r.total}", r.elapsed]
            for r in result.reports
        ],
    )
    sections = [per_fixture]
    for r in result.reports:
        bad = [a for a in r.assertions if not a.passed]
        if bad:
            sections.append(
                Section(f"Failures in {r.name}", ["assertion", "expected", "actual"],
                        [[a.name, a.expected, a.actual] for a in bad])
            )
    return render_table("Catalog run", rows, sections)


@renderer(list)
def _fixtures(result: List[FixtureInfo]) -> str:
    entries = Section(
        "Fixtures",
        ["name", "slow", "description"],
        [[f.name, f.slow, f.description] for f in result],
    )
    return render_table("Catalog", [("fixtures", len(result))], [entries])
