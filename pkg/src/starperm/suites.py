"""Named verification suites over one parameter pair.

Each suite turns the module-level operations into a deterministic list of
timed checks.  Precondition failures (triangles, excluded instances, caps)
are reported as status "precondition"/"skip", never as crashes; only a
false claim yields status "fail".
"""

from __future__ import annotations

import time
from typing import Optional

from . import __version__
from .chains import pancake_chain_check, schreier_quotient_check, verify_chain
from .coloring import (
    choosability_suite,
    efficiency_obstruction_witness,
    max_selector,
    min_selector,
    sigma_total_coloring,
    verify_coloring,
)
from .domination import (
    se_set,
    sigma_set,
    verify_efficient_domination,
    verify_ei_avoidance,
    verify_partition_and_edge_cover,
)
from .errors import CapExceeded, GirthPrecondition
from .graphs import Params, PermGraph, build_graph
from .mstrings import list_assignment
from .report import FAIL, PASS, PRECONDITION, SKIP, CheckResult, SuiteReport
from .structure import classify_six_cycles, color_class_decomposition, toroidal_assembly

SUITES = (
    "domination",
    "coloring",
    "chi",
    "cycles",
    "toroidal",
    "chains",
    "schreier",
    "pancake",
    "all",
)


WITNESS_CAP = 32


class _Runner:
    def __init__(self, report: SuiteReport) -> None:
        self.report = report

    def add(self, name: str, fn) -> CheckResult:
        t0 = time.perf_counter()
        try:
            ok, detail, witnesses = fn()
            status = PASS if ok else FAIL
        except GirthPrecondition as exc:
            status, detail, witnesses = PRECONDITION, str(exc), []
        except CapExceeded as exc:
            status, detail, witnesses = SKIP, str(exc), []
        truncated = len(witnesses) > WITNESS_CAP
        res = CheckResult(
            name=name,
            status=status,
            detail=detail,
            witnesses=list(witnesses)[:WITNESS_CAP],
            seconds=time.perf_counter() - t0,
            truncated=truncated,
        )
        self.report.checks.append(res)
        return res

    def precondition(self, name: str, detail: str) -> None:
        self.report.checks.append(CheckResult(name=name, status=PRECONDITION, detail=detail))

    def skip(self, name: str, detail: str) -> None:
        self.report.checks.append(CheckResult(name=name, status=SKIP, detail=detail))


def _new_report(suite: str, k: int, ell: int, seed: Optional[int]) -> SuiteReport:
    return SuiteReport(suite=suite, params={"k": k, "l": ell}, tool_version=__version__, seed=seed)


def run_suite(
    suite: str,
    k: int,
    ell: int,
    graph: Optional[PermGraph] = None,
    cap: int = 10**7,
    seed: Optional[int] = None,
    d1: Optional[int] = None,
    quad: Optional[tuple[int, ...]] = None,
) -> SuiteReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
    if suite == "all":
        report = _new_report("all", k, ell, seed)
        parts = ["domination", "coloring", "chi", "cycles", "toroidal", "chains", "schreier", "pancake"]
        for part in parts:
            sub = run_suite(part, k, ell, graph=graph, cap=cap, seed=seed, d1=d1, quad=quad)
            for c in sub.checks:
                c.name = f"{part}/{c.name}"
                report.checks.append(c)
        return report

    report = _new_report(suite, k, ell, seed)
    run = _Runner(report)
    p = Params(k, ell)

    def need_graph() -> PermGraph:
        return graph if graph is not None else build_graph(p, cap=cap)

    if suite == "domination":
        _suite_domination(run, k, ell, need_graph)
    elif suite == "coloring":
        _suite_coloring(run, k, ell, need_graph)
    elif suite == "chi":
        _suite_chi(run, k, ell, need_graph, cap)
    elif suite == "cycles":
        _suite_cycles(run, k, ell, need_graph)
    elif suite == "toroidal":
        _suite_toroidal(run, k, ell, need_graph, d1, quad)
    elif suite == "chains":
        _suite_chains(run, k, ell, cap)
    elif suite == "schreier":
        _suite_schreier(run, k, ell)
    elif suite == "pancake":
        _suite_pancake(run, k, ell, cap)
    return report


def _suite_domination(run: _Runner, k: int, ell: int, need_graph) -> None:
    if (k, ell) == (2, 1):
        run.precondition("girth-precondition", "excluded instance: the 2-symbol 1-repetition graph (a single edge) has no girth above 3")
        return
    g = need_graph()
    if g.has_triangle():
        run.precondition("girth-precondition", "graph contains a triangle")
        return
    run.add("girth-precondition", lambda: (True, "triangle-free", []))
    for i in range(k):
        cert = verify_efficient_domination(g, se_set(g, i), ell)
        run.add(
            f"se-set-{i}-efficient",
            lambda cert=cert: (cert.passed, f"violations={len(cert.violations)}", [v.kind for v in cert.violations]),
        )
    prep = verify_partition_and_edge_cover(g, "SE")
    run.add("se-partition-and-edge-cover", lambda: (prep.passed, "", prep.failures[:8]))
    if ell == 2:
        sigmas = [sigma_set(g, i) for i in range(1, 2 * k)]
        covered = sorted(len(s) for s in sigmas)

        def partition_check():
            union: set = set()
            total = 0
            for s in sigmas:
                union |= s
                total += len(s)
            ok = union == set(g.vertices) and total == g.n
            return ok, f"sizes={covered}", []

        run.add("sigma-partition", partition_check)
        for i, s in enumerate(sigmas, start=1):
            cert = verify_efficient_domination(g, s, 1)
            run.add(
                f"sigma-{i}-e-set-distance-3",
                lambda cert=cert: (
                    cert.passed and cert.min_internal_distance == 3,
                    f"min_distance={cert.min_internal_distance}",
                    [v.kind for v in cert.violations],
                ),
            )
        tc = sigma_total_coloring(g)
        ei = verify_ei_avoidance(g, tc)
        run.add("ei-avoidance", lambda: (ei["passed"] and ei["last_position_rationale"], "", []))


def _suite_coloring(run: _Runner, k: int, ell: int, need_graph) -> None:
    g = need_graph()
    from .coloring import TotalColoring, positional_edge_coloring

    edge_colors = positional_edge_coloring(g)
    placeholder = TotalColoring({v: 0 for v in g.vertices}, edge_colors, frozenset(range(0, k * ell)))
    pe = verify_coloring(g, placeholder, "proper-edge")
    run.add("positional-edge-proper", lambda: (bool(pe.proper_edge), "", pe.witnesses[:8]))

    if ell == 2:
        tc = sigma_total_coloring(g)
        tot = verify_coloring(g, tc, "total")
        eff = verify_coloring(g, tc, "efficient")
        run.add("sigma-total", lambda: (bool(tot.total), "", tot.witnesses[:8]))
        run.add("sigma-efficient", lambda: (bool(eff.efficient), "", eff.witnesses[:8]))
        used = frozenset(tc.vertex_colors.values()) | frozenset(tc.edge_colors.values())
        run.add("sigma-palette-size", lambda: (used == tc.palette and len(used) == 2 * k - 1, f"colors={sorted(used)}", []))
    if ell >= 3:
        def disjoint():
            bad = [(u, v) for u, v, _ in g.edges() if list_assignment(u) & list_assignment(v)]
            return not bad, f"edges={g.m}", bad[:8]

        run.add("list-disjointness", disjoint)
        ok_min, _ = choosability_suite(g, min_selector)
        ok_max, _ = choosability_suite(g, max_selector)
        run.add("selector-min-proper", lambda: (ok_min, "", []))
        run.add("selector-max-proper", lambda: (ok_max, "", []))
        center = g.vertices[0]
        obs = efficiency_obstruction_witness(g, center)
        run.add(
            "efficiency-obstruction",
            lambda: (obs.passed, f"method={obs.method} selections={obs.selection_count}", obs.witnesses[:8]),
        )


def _suite_chi(run: _Runner, k: int, ell: int, need_graph, cap: int) -> None:
    if ell != 2:
        run.precondition("chi-preconditions", f"suite needs l = 2, got l = {ell}")
        return
    g = need_graph()
    tc = sigma_total_coloring(g)
    reference = build_graph(Params(k - 1, 2), cap=cap) if k >= 2 else None
    rep = color_class_decomposition(g, tc, reference=reference)
    if not rep.precondition_ok:
        run.precondition("chi-preconditions", rep.precondition_detail)
        return
    run.add("chi-preconditions", lambda: (True, f"h={rep.h}", []))
    expected_components = k * 2 ** (k - 1)
    for case in rep.cases:
        i = case.color
        run.add(
            f"color-{i}-minus-class-regular-connected",
            lambda case=case: (case.item1_ok(rep.h), f"degree={case.minus_class_regular_degree}", []),
        )
        run.add(
            f"color-{i}-components-regular-totally-colored",
            lambda case=case: (case.item2_ok(rep.h), f"components={len(case.components)}", []),
        )
        run.add(
            f"color-{i}-component-count-and-type",
            lambda case=case: (
                len(case.components) == expected_components
                and all(c.isomorphic_to_reference for c in case.components),
                f"count={len(case.components)} expected={expected_components}",
                [],
            ),
        )
        run.add(
            f"color-{i}-minus-edges-biregular-nonbipartite",
            lambda case=case: (case.item3_ok(rep.h), f"degrees={case.minus_edges_degrees}", []),
        )


def _suite_cycles(run: _Runner, k: int, ell: int, need_graph) -> None:
    if ell != 2:
        run.precondition("cycle-classification", f"suite needs l = 2, got l = {ell}")
        return
    g = need_graph()
    tc = sigma_total_coloring(g)
    classes, census = classify_six_cycles(g, tc)
    run.add(
        "all-six-cycles-classified",
        lambda: (census["other"] == 0 and sum(census.values()) > 0, f"census={census}", []),
    )
    if k == 3:
        run.add(
            "type1-cycle-2-3-4-found",
            lambda: (any(c.kind == "type1" and c.colors == (2, 3, 4) for c in classes), "", []),
        )


def _suite_toroidal(run: _Runner, k: int, ell: int, need_graph, d1, quad) -> None:
    if ell != 2 or k < 3:
        run.precondition("toroidal-audit", f"suite needs l = 2 and k >= 3, got k = {k}, l = {ell}")
        return
    g = need_graph()
    tc = sigma_total_coloring(g)
    d1 = d1 if d1 is not None else 2 * k - 1
    quad = tuple(quad) if quad else (1, 2, 3, 4)
    rep = toroidal_assembly(g, tc, d1, quad)
    run.add(
        "type2-union-built",
        lambda: (rep.type2_cycle_count > 0, f"type2_cycles={rep.type2_cycle_count} n={rep.assembly.n}", []),
    )
    run.add("contained-type1-disjoint", lambda: (bool(rep.contained_type1) and rep.type1_disjoint, f"count={len(rep.contained_type1)}", []))
    run.add(
        "departure-sextuples-monochromatic",
        lambda: (rep.departures_ok, f"landing_census={rep.landing_class_census}", rep.departure_failures[:8]),
    )
    if len(tc.palette) == 5:
        run.add("departures-land-in-d1-class", lambda: (rep.all_land_in_d1, f"d1={rep.d1}", []))
    run.add("class-vertices-pendant", lambda: (rep.sigma_pendant_ok, "", rep.departure_failures[:8]))
    run.add(
        "landing-vertices-min-distance-3",
        lambda: (rep.landing_min_distance_3, f"distances={rep.landing_distance_values}", []),
    )


def _suite_chains(run: _Runner, k: int, ell: int, cap: int) -> None:
    if ell != 2:
        run.precondition("chain-embeddings", f"suite needs l = 2, got l = {ell}")
        return
    rep = verify_chain(k, cap=cap)
    run.add("images-disjoint-induced", lambda: (rep.images_disjoint and rep.images_induced_isomorphic, f"images={k + 1}", rep.failures[:8]))
    run.add("sigma-bijection", lambda: (rep.sigma_bijection_ok and rep.blocks_partition_sigma, f"blocks={rep.block_sizes}", []))
    run.add("cardinality-identity", lambda: (rep.cardinality_identity_ok, f"sigma={rep.sigma_size}", []))


def _suite_schreier(run: _Runner, k: int, ell: int) -> None:
    try:
        rep = schreier_quotient_check(k, ell)
    except CapExceeded as exc:
        run.skip("schreier-quotient", str(exc))
        return
    run.add("fibers-are-cosets", lambda: (rep.fibers_are_cosets and rep.fiber_sizes_ok, "", rep.failures[:8]))
    run.add("quotient-matches-graph", lambda: (rep.quotient_equals_graph, "", rep.failures[:8]))
    run.add("local-generator-sets", lambda: (rep.generator_sets_ok, "", rep.failures[:8]))


def _suite_pancake(run: _Runner, k: int, ell: int, cap: int) -> None:
    if ell != 2:
        run.precondition("pancake-obstructions", f"suite needs l = 2, got l = {ell}")
        return
    try:
        rep = pancake_chain_check(k, cap=cap)
    except CapExceeded as exc:
        run.skip("pancake-obstructions", str(exc))
        return
    run.add(
        "last-sigma-is-e-set",
        lambda: (rep.last_sigma_passes, f"min_distance={rep.last_sigma_min_distance}", []),
    )
    run.add(
        "lower-sigmas-fail-with-witness",
        lambda: (rep.all_lower_sigmas_fail, "", [(i, w[0]) for i, w in sorted(rep.failing_sigmas.items())]),
    )
    run.add(
        "black-removal-neighborhood-partition",
        lambda: (
            rep.neighborhoods_partition_remainder,
            f"degree_after_vertices={rep.minus_sigma_regular_degree} after_edges={rep.remainder_regular_degree}",
            [],
        ),
    )
