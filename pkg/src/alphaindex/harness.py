"""Theorem- and lemma-level verification campaigns.

Each target turns a quantified claim into an exhaustive (desk-scale) or
seeded-random pass/fail sweep and returns a :class:`VerificationReport`:
one case per parameter point, violations when an asserted case fails, and
flags for anomalies that are reported without being asserted (near-zero
gaps, out-of-hypothesis parameter points, known discrepancies).

Alpha values travel as decimal strings and are echoed verbatim in
reports, so a grid reads back exactly as it was specified.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import certificates as ct
from .connectivity import (
    is_connected,
    is_minimally_two_connected_by_chords,
    is_minimally_two_connected_by_deletion,
    triangle_free,
)
from .enumeration import canonical_form, graphs_by_order, graphs_by_size
from .families import FamilyId, build
from .graphs import Graph, emit_graph6
from .spectral import (
    alpha_index,
    column_sum_certificate,
    closed_form_complete_bipartite,
    lower_bound_max_degree,
    perron_symmetry_check,
    upper_bound_degree_average,
)
from .transforms import Rotation, rotation_monotonicity_check, valid_moved_candidates

GAP_MARGIN = 1e-10
DEFAULT_ALPHAS = ["0.50", "0.55", "0.60", "0.65", "0.70", "0.75", "0.80", "0.85", "0.90", "0.95"]
PROBE_ALPHA = "0.999"
THEOREM_ALPHAS = DEFAULT_ALPHAS + [PROBE_ALPHA]
CERT_ALPHAS = ["0.5", "0.6", "0.75", "0.9"]
SANDWICH_ALPHAS = ["0.5", "0.75", "0.9"]
CLOSED_FORM_ALPHAS = ["0", "0.25", "0.5", "0.75", "0.9"]
ROTATION_SEED = 20250808

LEMMA_TARGETS = (
    "lemma1", "lemma2", "lemma3", "lemma4", "lemma5", "lemma6", "lemma7",
    "lemma8", "lemma9", "lemma10", "lemma11",
    "claim-order", "claim-size", "fact1", "fact2", "fact3",
)


@dataclass
class VerificationReport:
    target: str
    params: dict
    alpha_grid: list[str]
    cases: int
    case_results: list[dict]
    argmax_graph6: str | None
    gap: float | None
    violations: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "params": self.params,
            "alpha_grid": self.alpha_grid,
            "cases": self.cases,
            "argmax_graph6": self.argmax_graph6,
            "gap": self.gap,
            "violations": self.violations,
            "flags": self.flags,
            "runtime_ms": self.runtime_ms,
            "passed": self.passed,
            "case_results": self.case_results,
        }

    def to_csv_rows(self) -> list[list]:
        rows = [["target", "case", "alpha", "argmax_graph6", "gap", "ok", "note"]]
        for case in self.case_results:
            rows.append([
                self.target,
                case.get("case", ""),
                case.get("alpha", ""),
                case.get("argmax_graph6", ""),
                case.get("gap", ""),
                case.get("ok", ""),
                case.get("note", ""),
            ])
        return rows


def _finish(report: VerificationReport, start: float) -> VerificationReport:
    report.runtime_ms = int((time.monotonic() - start) * 1000)
    report.cases = len(report.case_results)
    asserted = [
        c for c in report.case_results
        if c.get("gap") is not None and not c.get("informational")
    ]
    if asserted:
        worst = min(asserted, key=lambda c: c["gap"])
        report.gap = worst["gap"]
        report.argmax_graph6 = worst.get("argmax_graph6")
    return report


# -- theorem campaigns -------------------------------------------------------


def _extremal_case(classes: list[Graph], alpha: float) -> tuple[str, float | None]:
    """argmax canonical form and the gap to the runner-up."""
    scored = sorted(
        ((alpha_index(g, alpha).rho, emit_graph6(g)) for g in classes),
        reverse=True,
    )
    argmax = scored[0][1]
    if len(scored) < 2:
        return argmax, None
    return argmax, scored[0][0] - scored[1][0]


def _order_case(args: tuple) -> list[dict]:
    n, alphas, allow_slow = args
    classes = graphs_by_order(n, "minimally_two_connected", allow_slow=allow_slow)
    target = canonical_form(build(FamilyId("K", (2, n - 2)))[0])
    out = []
    for alpha_str in alphas:
        alpha = float(alpha_str)
        argmax, gap = _extremal_case(classes, alpha)
        ok = argmax == target
        note = ""
        if ok and gap is not None and gap <= GAP_MARGIN:
            # A correct argmax at sub-margin gap is an anomaly, not a failure.
            note = "gap below strictness margin"
        out.append({
            "case": f"n={n}",
            "alpha": alpha_str,
            "argmax_graph6": argmax,
            "expected_graph6": target,
            "gap": gap,
            "classes": len(classes),
            "ok": ok,
            "note": note,
        })
    return out


def verify_theorem_order(
    n_values: Iterable[int] = (5, 6, 7, 8),
    alphas: Sequence[str] | None = None,
    jobs: int = 1,
    allow_slow: bool = False,
) -> VerificationReport:
    """Order theorem: the unique alpha-index maximizer among minimally
    2-connected graphs of order n is K_{2,n-2}, for alpha in [1/2, 1)."""
    start = time.monotonic()
    n_values = sorted(set(int(n) for n in n_values))
    alphas = list(alphas or THEOREM_ALPHAS)
    for n in n_values:
        if n < 5:
            raise ValueError("the order theorem starts at n = 5")
    for s in alphas:
        if not 0.5 <= float(s) < 1.0:
            raise ValueError(f"order theorem alpha grid must sit in [1/2, 1), got {s}")
    inputs = [(n, alphas, allow_slow) for n in n_values]
    chunks = _run_cases(_order_case, inputs, jobs)
    report = VerificationReport(
        target="theorem1.3",
        params={"n": n_values},
        alpha_grid=alphas,
        cases=0,
        case_results=[c for chunk in chunks for c in chunk],
        argmax_graph6=None,
        gap=None,
    )
    for case in report.case_results:
        if not case["ok"]:
            report.violations.append(
                f"{case['case']}, alpha={case['alpha']}: argmax "
                f"{case['argmax_graph6']} (expected {case['expected_graph6']}), gap {case['gap']}"
            )
        if case["note"]:
            report.flags.append(f"{case['case']}, alpha={case['alpha']}: {case['note']}")
    return _finish(report, start)


def _size_case(args: tuple) -> list[dict]:
    m, alphas = args
    classes = graphs_by_size(m)
    even = m % 2 == 0
    asserted = (even and m >= 6) or (not even and m >= 9)
    if even:
        target = canonical_form(build(FamilyId("K", (2, m // 2)))[0])
    elif m >= 5:
        target = canonical_form(build(FamilyId("SK2", ((m - 1) // 2,)))[0])
    else:
        target = None
    out = []
    for alpha_str in alphas:
        alpha = float(alpha_str)
        argmax, gap = _extremal_case(classes, alpha)
        ok = True
        note = ""
        root_dev = None
        if asserted:
            ok = argmax == target
            if not even:
                rho = alpha_index(build(FamilyId("SK2", ((m - 1) // 2,)))[0], alpha).rho
                root = ct.largest_real_root(ct.sk_cubic(m, alpha))
                root_dev = abs(rho - root)
                if root_dev > 1e-9:
                    ok = False
                    note = f"cubic root deviates from rho by {root_dev:.3e}"
            if ok and gap is not None and gap <= GAP_MARGIN:
                note = "gap below strictness margin"
        else:
            note = "outside theorem hypotheses; reported without assertion"
        out.append({
            "case": f"m={m}",
            "alpha": alpha_str,
            "argmax_graph6": argmax,
            "expected_graph6": target,
            "gap": gap,
            "classes": len(classes),
            "root_deviation": root_dev,
            "ok": ok,
            "informational": not asserted,
            "note": note,
        })
    return out


def verify_theorem_size(
    m_values: Iterable[int] = (6, 8, 9, 10, 11, 12, 13),
    alphas: Sequence[str] | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Size theorem: the unique maximizer of given size m is K_{2,m/2} for
    even m >= 6 and the subdivided K_{2,(m-1)/2} for odd m >= 9, whose
    alpha-index is pinned by the cubic.  Out-of-hypothesis sizes (such as
    m = 7) are computed and reported without assertion."""
    start = time.monotonic()
    m_values = sorted(set(int(m) for m in m_values))
    alphas = list(alphas or THEOREM_ALPHAS)
    for s in alphas:
        if not 0.5 <= float(s) < 1.0:
            raise ValueError(f"size theorem alpha grid must sit in [1/2, 1), got {s}")
    inputs = [(m, alphas) for m in m_values]
    chunks = _run_cases(_size_case, inputs, jobs)
    report = VerificationReport(
        target="theorem1.4",
        params={"m": m_values},
        alpha_grid=alphas,
        cases=0,
        case_results=[c for chunk in chunks for c in chunk],
        argmax_graph6=None,
        gap=None,
    )
    for case in report.case_results:
        if case.get("informational"):
            report.flags.append(f"{case['case']}, alpha={case['alpha']}: {case['note']}")
        elif not case["ok"]:
            report.violations.append(
                f"{case['case']}, alpha={case['alpha']}: argmax {case['argmax_graph6']} "
                f"(expected {case['expected_graph6']}), gap {case['gap']}, {case['note']}"
            )
        elif case["note"]:
            report.flags.append(f"{case['case']}, alpha={case['alpha']}: {case['note']}")
    return _finish(report, start)


def _run_cases(fn, inputs: list, jobs: int) -> list:
    if jobs <= 1 or len(inputs) <= 1:
        return [fn(item) for item in inputs]
    with ProcessPoolExecutor(max_workers=min(jobs, len(inputs))) as pool:
        return list(pool.map(fn, inputs))


# -- lemma suite -------------------------------------------------------------


def verify_lemma_suite(
    targets: Sequence[str] | None = None,
    n_max: int = 8,
    alphas: Sequence[str] | None = None,
    rotation_cases: int = 1000,
    seed: int = ROTATION_SEED,
) -> list[VerificationReport]:
    chosen = list(targets or LEMMA_TARGETS)
    for t in chosen:
        if t not in LEMMA_TARGETS:
            raise ValueError(f"unknown verification target {t!r}")
    reports = []
    for t in chosen:
        builder = _LEMMA_BUILDERS[t]
        if t == "lemma7":
            reports.append(builder(n_max=n_max, alphas=alphas, cases=rotation_cases, seed=seed))
        else:
            reports.append(builder(n_max=n_max, alphas=alphas))
    return reports


def _min2c_corpus(n_max: int) -> list[tuple[int, Graph]]:
    out = []
    for n in range(4, n_max + 1):
        for g in graphs_by_order(n, "minimally_two_connected"):
            out.append((n, g))
    return out


def _lemma_sandwich(which: str, n_max: int, alphas) -> VerificationReport:
    start = time.monotonic()
    alphas = list(alphas or SANDWICH_ALPHAS)
    n_cap = min(n_max, 7)
    report = VerificationReport(
        target=which, params={"n": list(range(2, n_cap + 1))}, alpha_grid=alphas,
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for n in range(2, n_cap + 1):
        classes = [g for g in graphs_by_order(n) if is_connected(g)]
        for alpha_str in alphas:
            alpha = float(alpha_str)
            worst = float("inf")
            bad = 0
            for g in classes:
                rho = alpha_index(g, alpha).rho
                if which == "lemma1":
                    slack = upper_bound_degree_average(g, alpha) - rho
                else:
                    slack = rho - lower_bound_max_degree(g, alpha)
                if slack < worst:
                    worst = slack
                if slack < -GAP_MARGIN:
                    bad += 1
                    report.violations.append(
                        f"n={n}, alpha={alpha_str}, {emit_graph6(g)}: slack {slack:.3e}"
                    )
            report.case_results.append({
                "case": f"n={n}", "alpha": alpha_str, "classes": len(classes),
                "min_slack": worst, "ok": bad == 0,
            })
    return _finish(report, start)


def _lemma1(n_max: int = 8, alphas=None) -> VerificationReport:
    return _lemma_sandwich("lemma1", n_max, alphas)


def _lemma2(n_max: int = 8, alphas=None) -> VerificationReport:
    return _lemma_sandwich("lemma2", n_max, alphas)


def _structural(target: str, n_max: int, predicate) -> VerificationReport:
    start = time.monotonic()
    report = VerificationReport(
        target=target, params={"n": list(range(4, n_max + 1))}, alpha_grid=[],
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for n, g in _min2c_corpus(n_max):
        ok, note = predicate(n, g)
        report.case_results.append({"case": f"n={n}", "graph6": emit_graph6(g), "ok": ok, "note": note})
        if not ok:
            report.violations.append(f"n={n}, {emit_graph6(g)}: {note}")
    return _finish(report, start)


def _lemma3(n_max: int = 8, alphas=None) -> VerificationReport:
    return _structural(
        "lemma3", n_max,
        lambda n, g: (min(g.degrees()) == 2, f"min degree {min(g.degrees())}"),
    )


def _lemma4(n_max: int = 8, alphas=None) -> VerificationReport:
    return _structural(
        "lemma4", n_max,
        lambda n, g: (triangle_free(g), "triangle found"),
    )


def _lemma5(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    report = VerificationReport(
        target="lemma5", params={"n": list(range(4, n_max + 1))}, alpha_grid=[],
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for n in range(4, n_max + 1):
        extremal_expected = canonical_form(build(FamilyId("K", (2, n - 2)))[0])
        at_bound = []
        for g in graphs_by_order(n, "minimally_two_connected"):
            if g.m > 2 * n - 4:
                report.violations.append(f"n={n}, {emit_graph6(g)}: m={g.m} > 2n-4")
            if g.m == 2 * n - 4:
                at_bound.append(emit_graph6(g))
        ok = at_bound == [extremal_expected]
        if not ok:
            report.violations.append(
                f"n={n}: classes at m=2n-4 are {at_bound}, expected [{extremal_expected}]"
            )
        report.case_results.append({
            "case": f"n={n}", "at_bound": at_bound, "expected": extremal_expected, "ok": ok,
        })
    return _finish(report, start)


def _lemma6(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    report = VerificationReport(
        target="lemma6", params={"n": list(range(1, n_max + 1))}, alpha_grid=[],
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for n in range(1, n_max + 1):
        disagreements = 0
        total = 0
        for g in graphs_by_order(n):
            total += 1
            if is_minimally_two_connected_by_deletion(g) != is_minimally_two_connected_by_chords(g):
                disagreements += 1
                report.violations.append(f"n={n}, {emit_graph6(g)}: recognizers disagree")
        report.case_results.append({
            "case": f"n={n}", "classes": total, "disagreements": disagreements,
            "ok": disagreements == 0,
        })
    return _finish(report, start)


def sample_connected_graph(
    rng: random.Random, n_lo: int = 4, n_hi: int = 8,
    p_lo: float = 0.25, p_hi: float = 0.75,
) -> Graph:
    """Seeded Erdos-Renyi draw, redrawn until connected."""
    while True:
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(p_lo, p_hi)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def sample_rotation(rng: random.Random, g: Graph, tries: int = 20) -> Rotation | None:
    for _ in range(tries):
        u = rng.randrange(g.n)
        v = rng.randrange(g.n)
        if u == v:
            continue
        candidates = valid_moved_candidates(g, u, v)
        if not candidates:
            continue
        k = rng.randint(1, len(candidates))
        moved = frozenset(rng.sample(candidates, k))
        return Rotation(u=u, v=v, moved=moved)
    return None


def _lemma7(n_max: int = 8, alphas=None, cases: int = 1000, seed: int = ROTATION_SEED) -> VerificationReport:
    start = time.monotonic()
    alphas = list(alphas or DEFAULT_ALPHAS)
    report = VerificationReport(
        target="lemma7",
        params={"random_cases": cases, "seed": seed, "chain_m": [9, 11, 13]},
        alpha_grid=alphas, cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    rng = random.Random(seed)
    collected = 0
    satisfied = 0
    while satisfied < cases:
        g = sample_connected_graph(rng, 4, max(4, min(n_max, 8)))
        rot = sample_rotation(rng, g)
        if rot is None:
            continue
        alpha = rng.choice((0.5, 0.75))
        collected += 1
        chk = rotation_monotonicity_check(g, rot, alpha)
        if not chk.perron_precondition:
            continue
        satisfied += 1
        if chk.increase <= 0:
            report.violations.append(
                f"{emit_graph6(g)}, u={rot.u}, v={rot.v}, moved={sorted(rot.moved)}, "
                f"alpha={alpha}: increase {chk.increase:.3e}"
            )
        elif chk.increase <= GAP_MARGIN:
            report.flags.append(
                f"{emit_graph6(g)}, u={rot.u}, v={rot.v}, alpha={alpha}: "
                f"near-zero increase {chk.increase:.3e}"
            )
    report.case_results.append({
        "case": "random-corpus", "alpha": "0.5|0.75", "attempted": collected,
        "precondition_satisfied": satisfied, "ok": not report.violations,
    })
    # G(a, b) chain: rho increases strictly toward G(1, (m-3)/2).
    for m in (9, 11, 13):
        k = (m - 1) // 2
        for alpha_str in alphas:
            alpha = float(alpha_str)
            rhos = {}
            for a in range(1, k // 2 + 1):
                rhos[a] = alpha_index(build(FamilyId("G", (a, k - a)))[0], alpha).rho
            sk_rho = alpha_index(build(FamilyId("SK2", (k,)))[0], alpha).rho
            ok = abs(rhos[1] - sk_rho) <= 1e-9
            if not ok:
                report.violations.append(
                    f"m={m}, alpha={alpha_str}: G(1,{k-1}) rho {rhos[1]} != SK rho {sk_rho}"
                )
            for a in range(2, k // 2 + 1):
                diff = rhos[a - 1] - rhos[a]
                if diff < -GAP_MARGIN:
                    ok = False
                    report.violations.append(
                        f"m={m}, alpha={alpha_str}: rho(G({a-1},{k-a+1})) < rho(G({a},{k-a}))"
                    )
                elif diff <= GAP_MARGIN:
                    report.flags.append(
                        f"m={m}, alpha={alpha_str}: chain step a={a} margin {diff:.3e} "
                        "below strictness threshold"
                    )
            report.case_results.append({
                "case": f"chain m={m}", "alpha": alpha_str,
                "rho_values": [rhos[a] for a in sorted(rhos)], "ok": ok,
            })
    return _finish(report, start)


def _lemma8(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    alphas = list(alphas or DEFAULT_ALPHAS)
    fams = [FamilyId("K", (a, b)) for a in range(1, 5) for b in range(1, a + 1)]
    fams += [FamilyId("SK2", (k,)) for k in range(2, 7)]
    fams += [FamilyId("G", (a, b)) for a in range(1, 4) for b in range(a, 5)]
    fams += [FamilyId("C", (n,)) for n in range(3, 11)]
    report = VerificationReport(
        target="lemma8", params={"families": [str(f) for f in fams]}, alpha_grid=alphas,
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for fid in fams:
        g, orbits = build(fid)
        for alpha_str in alphas:
            ok = perron_symmetry_check(g, orbits, float(alpha_str))
            report.case_results.append({"case": str(fid), "alpha": alpha_str, "ok": ok})
            if not ok:
                report.violations.append(f"{fid}, alpha={alpha_str}: orbit coordinates differ")
    return _finish(report, start)


def _lemma9(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    alphas = list(alphas or CLOSED_FORM_ALPHAS)
    report = VerificationReport(
        target="lemma9", params={"a_max": 12}, alpha_grid=alphas,
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    anchor = closed_form_complete_bipartite(3, 2, 0.5)
    if abs(anchor - 2.5) > 1e-12:
        report.violations.append(f"anchor rho_1/2(K_2,3) = {anchor!r}, expected 2.5")
    for alpha_str in alphas:
        alpha = float(alpha_str)
        worst = 0.0
        for a in range(1, 13):
            for b in range(1, a + 1):
                formula = closed_form_complete_bipartite(a, b, alpha)
                if alpha < 1.0:
                    rho = alpha_index(build(FamilyId("K", (a, b)))[0], alpha).rho
                    worst = max(worst, abs(formula - rho))
        ok = worst <= 1e-10
        report.case_results.append({
            "case": "K_{a,b} 1<=b<=a<=12", "alpha": alpha_str, "max_deviation": worst, "ok": ok,
        })
        if not ok:
            report.violations.append(f"alpha={alpha_str}: max deviation {worst:.3e}")
    return _finish(report, start)


def _lemma10(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    alphas = list(alphas or DEFAULT_ALPHAS)
    ms = ct.odd_range(9, 25)
    report = VerificationReport(
        target="lemma10", params={"m": ms}, alpha_grid=alphas,
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for m in ms:
        g = build(FamilyId("SK2", ((m - 1) // 2,)))[0]
        for alpha_str in alphas:
            alpha = float(alpha_str)
            rho = alpha_index(g, alpha).rho
            root = ct.largest_real_root(ct.sk_cubic(m, alpha))
            dev = abs(rho - root)
            ok = dev <= 1e-9
            report.case_results.append({"case": f"m={m}", "alpha": alpha_str, "deviation": dev, "ok": ok})
            if not ok:
                report.violations.append(f"m={m}, alpha={alpha_str}: |rho - root| = {dev:.3e}")
    return _finish(report, start)


def _lemma11(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    ms = ct.odd_range(9, 99)
    grid = ct.alpha_grid("0.50", "0.99", "0.01")
    report = VerificationReport(
        target="lemma11", params={"m": [9, 99], "step": 2}, alpha_grid=grid,
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for poly in ("f", "g"):
        cert = ct.sign_grid(poly, ms, grid)
        report.case_results.append({
            "case": f"sign {poly}", "alpha": "grid",
            "min_abs_value": cert.min_abs_value,
            "violations": len(cert.violations), "ok": cert.passed,
        })
        for m, alpha_str, value in cert.violations:
            report.violations.append(f"{poly}(alpha={alpha_str}, m={m}) = {value}")
    worst = 0.0
    for alpha_str in ("0.5", "0.7", "0.9"):
        alpha = float(alpha_str)
        dev = abs(ct.eval_f(alpha, 9) - ct.f_at_m9_factored(alpha)) / max(1.0, abs(ct.eval_f(alpha, 9)))
        worst = max(worst, dev)
    ok = worst <= 1e-9
    report.case_results.append({"case": "f(alpha,9) factored endpoint", "alpha": "0.5|0.7|0.9", "max_rel_dev": worst, "ok": ok})
    if not ok:
        report.violations.append(f"f(alpha,9) endpoint form deviates by {worst:.3e}")
    # Increasing in m at fixed alpha (finite differences).
    for alpha_str in ("0.5", "0.75", "0.99"):
        alpha = float(alpha_str)
        monotone = all(ct.eval_f(alpha, m + 2) > ct.eval_f(alpha, m) for m in ms[:-1])
        report.case_results.append({"case": "f increasing in m", "alpha": alpha_str, "ok": monotone})
        if not monotone:
            report.violations.append(f"f not increasing in m at alpha={alpha_str}")
    return _finish(report, start)


def _claim_order(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    alphas = list(alphas or CERT_ALPHAS)
    report = VerificationReport(
        target="claim-order", params={"n": list(range(5, n_max + 1)), "max_degree": "<= n-3"},
        alpha_grid=alphas, cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for n in range(5, n_max + 1):
        eligible = [
            g for g in graphs_by_order(n, "minimally_two_connected")
            if max(g.degrees()) <= n - 3
        ]
        for alpha_str in alphas:
            alpha = float(alpha_str)
            worst = -float("inf")
            ok = True
            for g in eligible:
                cert = column_sum_certificate(g, alpha, "order")
                top = max(cert.column_sums)
                worst = max(worst, top)
                if top > 1e-12:
                    ok = False
                    report.violations.append(
                        f"n={n}, alpha={alpha_str}, {emit_graph6(g)}: c_u = {top:.3e} > 0"
                    )
            report.case_results.append({
                "case": f"n={n}", "alpha": alpha_str, "graphs": len(eligible),
                "max_column_sum": None if worst == -float("inf") else worst, "ok": ok,
            })
    return _finish(report, start)


def _claim_size(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    alphas = list(alphas or CERT_ALPHAS)
    report = VerificationReport(
        target="claim-size", params={"m": list(range(6, 13)), "max_degree": "3 <= Delta <= (m-2)/2"},
        alpha_grid=alphas, cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for m in range(6, 13):
        eligible = [
            g for g in graphs_by_size(m)
            if 3 <= max(g.degrees()) <= (m - 2) // 2
        ]
        for alpha_str in alphas:
            alpha = float(alpha_str)
            worst = -float("inf")
            ok = True
            for g in eligible:
                cert = column_sum_certificate(g, alpha, "size")
                top = max(cert.column_sums)
                worst = max(worst, top)
                if top > 1e-12:
                    ok = False
                    report.violations.append(
                        f"m={m}, alpha={alpha_str}, {emit_graph6(g)}: c_u = {top:.3e} > 0"
                    )
            report.case_results.append({
                "case": f"m={m}", "alpha": alpha_str, "graphs": len(eligible),
                "max_column_sum": None if worst == -float("inf") else worst, "ok": ok,
            })
    return _finish(report, start)


def _fact1(n_max: int = 8, alphas=None) -> VerificationReport:
    start = time.monotonic()
    report = VerificationReport(
        target="fact1", params={"m": [9, 11, 13]}, alpha_grid=[],
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    for m in (9, 11, 13):
        ok = True
        classes = graphs_by_size(m)
        for g in classes:
            degs = g.degrees()
            for w in range(g.n):
                s = sum(degs[v] for v in g.neighbors(w))
                if s > m - 1:
                    ok = False
                    report.violations.append(
                        f"m={m}, {emit_graph6(g)}, w={w}: neighbour degree sum {s} > m-1"
                    )
        report.case_results.append({"case": f"m={m}", "classes": len(classes), "ok": ok})
    return _finish(report, start)


def _identity_report(target: str, check, lhs_name: str) -> VerificationReport:
    start = time.monotonic()
    ms = ct.odd_range(9, 99)
    grid = ct.alpha_grid("0.50", "0.99", "0.01")
    report = VerificationReport(
        target=target, params={"m": [9, 99], "step": 2}, alpha_grid=grid,
        cases=0, case_results=[], argmax_graph6=None, gap=None,
    )
    worst = 0.0
    failing = 0
    exemplars: list[str] = []
    for m in ms:
        for alpha_str in grid:
            err = check(float(alpha_str), m)
            if err > worst:
                worst = err
            if err > ct.IDENTITY_RTOL:
                failing += 1
                if len(exemplars) < 5:
                    exemplars.append(
                        f"alpha={alpha_str}, m={m}: {lhs_name} relative error {err:.3e}"
                    )
    if failing:
        report.violations.append(
            f"{lhs_name}: {failing} of {len(ms) * len(grid)} grid points exceed "
            f"{ct.IDENTITY_RTOL:g} (max relative error {worst:.3e}); "
            "examples: " + "; ".join(exemplars)
        )
    report.case_results.append({
        "case": "identity grid", "alpha": "grid", "max_rel_error": worst,
        "grid_points": len(ms) * len(grid), "failing_points": failing,
        "ok": worst <= ct.IDENTITY_RTOL,
    })
    return _finish(report, start)


def _fact2(n_max: int = 8, alphas=None) -> VerificationReport:
    return _identity_report("fact2", ct.identity_check_f, "-8(m-3)^3 p(x0) vs f")


def _fact3(n_max: int = 8, alphas=None) -> VerificationReport:
    report = _identity_report("fact3", ct.identity_check_g, "4 p(x1) vs g")
    # The inequality the size-theorem proof actually rests on: p(x1) < 0.
    start = time.monotonic()
    ms = ct.odd_range(9, 99)
    grid = ct.alpha_grid("0.50", "0.99", "0.01")
    worst = -float("inf")
    for m in ms:
        for alpha_str in grid:
            value = ct.g_identity_lhs(float(alpha_str), m)
            worst = max(worst, value)
    report.case_results.append({
        "case": "bound 4 p(x1) < 0", "alpha": "grid", "max_value": worst, "ok": worst < 0,
    })
    if worst >= 0:
        report.violations.append(f"4 p(x1) reaches {worst:.3e} >= 0 on the grid")
    else:
        report.flags.append(
            "4 p(x1) < 0 holds on the whole grid even where the printed g identity fails"
        )
    report.runtime_ms += int((time.monotonic() - start) * 1000)
    return report


_LEMMA_BUILDERS = {
    "lemma1": _lemma1,
    "lemma2": _lemma2,
    "lemma3": _lemma3,
    "lemma4": _lemma4,
    "lemma5": _lemma5,
    "lemma6": _lemma6,
    "lemma7": _lemma7,
    "lemma8": _lemma8,
    "lemma9": _lemma9,
    "lemma10": _lemma10,
    "lemma11": _lemma11,
    "claim-order": _claim_order,
    "claim-size": _claim_size,
    "fact1": _fact1,
    "fact2": _fact2,
    "fact3": _fact3,
}
