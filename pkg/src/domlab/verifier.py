"""Corpus-driven verification suites and counterexample scans.

Each suite evaluates one universally quantified statement instance by
instance over a graph stream and collects violations; an empty violation
list means the statement held on the whole corpus. Suites are gated by the
property flags their statement assumes: running a suite outside its scope
yields a "skip" status (never a silent pass), because a violation outside
the hypotheses would be meaningless.

Reports are deterministic: two runs over the same corpus and options produce
identical output except for the elapsed field. With jobs > 1 the per-graph
work is distributed over a process pool and merged back in corpus order.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bitset import members
from .corpus import iter_graph6_lines, resolve_corpus
from .criticality import check_theorem1_conditions
from .errors import CorpusError
from .formats import to_graph6
from .graph import (
    Graph,
    components,
    delete_edge,
    delete_vertex,
    private_neighbors,
    subdivide_edge,
    translate_set,
)
from .multisubdivision import check_multi1, check_multi4, msd_graph
from .properties import PropertyDescriptor, audit_flags, holds_induced
from .solver import (
    all_minimum_sets,
    gamma,
    gamma_oracle,
    gamma_value,
    in_some_minimum_set,
    is_dominating,
)

Violation = dict


@dataclass(frozen=True)
class VerifyOptions:
    fail_fast: bool = False
    literal_iii: bool = False
    jobs: int = 1


@dataclass
class SuiteReport:
    suite: str
    property_key: str
    status: str  # "pass" | "fail" | "skip"
    reason: str = ""
    graphs_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "property": self.property_key,
            "status": self.status,
            "reason": self.reason,
            "graphs_checked": self.graphs_checked,
            "violations": self.violations,
            "elapsed": round(self.elapsed, 6),
        }


def _scope_hereditary_k1(p: PropertyDescriptor) -> str | None:
    if not (p.hereditary and p.closed_union_K1):
        return f"property {p.key} is not hereditary and closed under union with K1"
    return None


def _scope_induced_k1(p: PropertyDescriptor) -> str | None:
    if not (p.induced_hereditary and p.closed_union_K1):
        return (
            f"property {p.key} is not induced-hereditary and closed under "
            "union with K1"
        )
    return None


def _scope_nondegenerate_k1(p: PropertyDescriptor) -> str | None:
    if not (p.nondegenerate and p.closed_union_K1):
        return f"property {p.key} is not nondegenerate and closed under union with K1"
    return None


def _scope_unrestricted_only(p: PropertyDescriptor) -> str | None:
    if p.key != "I":
        return f"the iff characterization is only claimed for property I, not {p.key}"
    return None


def _scope_any(p: PropertyDescriptor) -> str | None:
    return None


def _record(g: Graph, **details) -> Violation:
    out = {"graph6": to_graph6(g)}
    out.update(details)
    return out


# ---------------------------------------------------------------- suites --


def _check_t1_bound(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    base = gamma_value(g, p)
    out = []
    for e in g.edges():
        sub = gamma_value(subdivide_edge(g, e, 1), p)
        if sub > base + 1:
            out.append(_record(g, edge=list(e), gamma=base, gamma_subdivided=sub,
                               detail="single subdivision raised gamma by more than one"))
    return out


def _check_t1_necessity(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    base = gamma_value(g, p)
    out = []
    min_sets = None
    for e in g.edges():
        sub = gamma_value(subdivide_edge(g, e, 1), p)
        if sub <= base:
            continue
        if sub != base + 1:
            out.append(_record(g, edge=list(e), gamma=base, gamma_subdivided=sub,
                               detail="critical edge without the forced +1 value"))
        if min_sets is None:
            min_sets = all_minimum_sets(g, p)
        for M in min_sets:
            cond = check_theorem1_conditions(g, e, p, M, literal=opt.literal_iii)
            if not cond.any:
                out.append(_record(
                    g, edge=list(e), minimum_set=members(M),
                    detail="critical edge with a minimum set satisfying no condition"))
    return out


def _check_cor2_iff(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    base = gamma_value(g, p)
    min_sets = all_minimum_sets(g, p)
    out = []
    for e in g.edges():
        lhs = gamma_value(subdivide_edge(g, e, 1), p) > base
        rhs = all(
            check_theorem1_conditions(g, e, p, M, literal=opt.literal_iii).any
            for M in min_sets
        )
        if lhs != rhs:
            out.append(_record(g, edge=list(e), s_plus=lhs, conditions_all=rhs,
                               detail="iff characterization mismatch"))
    return out


def _check_t3_equiv(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    base = gamma_value(g, p)
    out = []
    for e in g.edges():
        s_minus = gamma_value(subdivide_edge(g, e, 1), p) < base
        er_minus = gamma_value(delete_edge(g, e), p) < base
        if s_minus != er_minus:
            out.append(_record(g, edge=list(e), s_minus=s_minus, er_minus=er_minus,
                               detail="subdivision and deletion criticality differ"))
    return out


def _check_cor4_classes(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    edges = g.edges()
    if not edges:
        return []
    base = gamma_value(g, p)
    cs = all(gamma_value(subdivide_edge(g, e, 1), p) < base for e in edges)
    cer = all(gamma_value(delete_edge(g, e), p) < base for e in edges)
    if cs != cer:
        return [_record(g, cs_minus=cs, cer_minus=cer,
                        detail="all-edges criticality classes differ")]
    return []


def _check_t5_sandwich(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    out = []
    for e in g.edges():
        deleted = gamma_value(delete_edge(g, e), p)
        sub3 = gamma_value(subdivide_edge(g, e, 3), p)
        if not deleted <= sub3 <= deleted + 1:
            out.append(_record(g, edge=list(e), gamma_deleted=deleted,
                               gamma_sub3=sub3, detail="sandwich bound failed"))
    return out


def _check_t5_a1a2(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    out = []
    for e in g.edges():
        m = check_multi1(g, e, p)
        if m.a1 != m.a2:
            out.append(_record(g, edge=list(e), a1=m.a1, a2=m.a2,
                               detail="a1 and a2 differ"))
    return out


def _check_t5_a1a3(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    out = []
    for e in g.edges():
        m = check_multi1(g, e, p)
        if m.a1 != m.a3:
            out.append(_record(g, edge=list(e), a1=m.a1, a3=m.a3,
                               detail="a1 and a3 differ"))
    return out


def _check_t6_iff(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    out = []
    for e in g.edges():
        m = check_multi4(g, e, p)
        if not m.iff_holds:
            out.append(_record(g, edge=list(e), values=list(m.profile.values),
                               detail="triple-subdivision iff failed"))
    return out


def _check_t6_chain(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    out = []
    for e in g.edges():
        m = check_multi4(g, e, p)
        if m.chain is False:
            out.append(_record(g, edge=list(e), values=list(m.profile.values),
                               detail="seven-term profile chain failed"))
    return out


def _check_t6_msd3(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    out = []
    for e in g.edges():
        m = check_multi4(g, e, p)
        if not m.msd_le_3:
            out.append(_record(g, edge=list(e), msd=str(m.profile.msd),
                               values=list(m.profile.values),
                               detail="multisubdivision number above 3"))
    return out


def _check_ta_vertex(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    base = gamma_value(g, p)
    out = []
    for v in range(g.n):
        smaller, kept = delete_vertex(g, v)
        reduced = gamma_value(smaller, p)
        if reduced is None:
            out.append(_record(g, vertex=v,
                               detail="gamma undefined after vertex deletion"))
            continue
        if not in_some_minimum_set(g, p, v) and reduced != base:
            out.append(_record(g, vertex=v, gamma=base, gamma_deleted=reduced,
                               detail="vertex in no minimum set changed gamma"))
        if reduced < base:
            if reduced != base - 1:
                out.append(_record(g, vertex=v, gamma=base, gamma_deleted=reduced,
                                   detail="deletion lowered gamma by more than one"))
            for M in all_minimum_sets(smaller, p):
                lifted = translate_set(M, kept) | (1 << v)
                ok = (
                    lifted.bit_count() == base
                    and is_dominating(g, lifted)
                    and holds_induced(p, g, lifted)
                    and private_neighbors(g, v, lifted) == 1 << v
                )
                if not ok:
                    out.append(_record(
                        g, vertex=v, minimum_set=members(lifted),
                        detail="lifted minimum set not minimum or private "
                               "neighborhood not the vertex alone"))
    return out


def _check_tb_edgeadd(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    base = gamma_value(g, p)
    out = []
    for e in g.edges():
        m = check_multi1(g, e, p)
        if base < m.gamma_deleted and base != m.gamma_deleted - 1:
            out.append(_record(g, edge=list(e), gamma=base,
                               gamma_deleted=m.gamma_deleted,
                               detail="edge addition gained more than one"))
        lhs = base == m.gamma_deleted - 1
        if lhs != m.a2:
            out.append(_record(g, edge=list(e), drop_by_one=lhs, conditions=m.a2,
                               detail="edge-addition iff failed"))
    return out


def _check_tc_plus1(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    base = gamma_value(g, p)
    out = []
    for e in g.edges():
        x, y = e
        reduced_graph = delete_edge(g, e)
        deleted = gamma_value(reduced_graph, p)
        if base <= deleted:
            continue  # out of this statement's scope
        pair = (1 << x) | (1 << y)
        for M in all_minimum_sets(reduced_graph, p):
            if holds_induced(p, g, M):
                out.append(_record(g, edge=list(e), minimum_set=members(M),
                                   detail="minimum set of the deleted graph keeps "
                                          "the property with the edge restored"))
            if M & pair != pair:
                out.append(_record(g, edge=list(e), minimum_set=members(M),
                                   detail="minimum set missing an endpoint"))
        for a, b in ((x, y), (y, x)):
            smaller, _ = delete_vertex(g, a)
            reduced = gamma_value(smaller, p)
            if reduced < deleted:
                out.append(_record(g, edge=list(e), vertex=a, gamma_deleted=deleted,
                                   gamma_vertex_deleted=reduced,
                                   detail="vertex deletion undercut edge deletion"))
            elif reduced == deleted:
                b_new = b - 1 if b > a else b
                if in_some_minimum_set(smaller, p, b_new):
                    out.append(_record(g, edge=list(e), vertex=a, other=b,
                                       detail="other endpoint occurs in a minimum "
                                              "set despite equal gamma"))
    return out


def _check_oracle_equiv(g: Graph, p: PropertyDescriptor, opt: VerifyOptions):
    fast = gamma(g, p)
    slow = gamma_oracle(g, p)
    out = []
    if fast.value != slow.value or fast.witness != slow.witness:
        out.append(_record(
            g,
            solver=[fast.value, members(fast.witness) if fast.witness is not None else None],
            oracle=[slow.value, members(slow.witness) if slow.witness is not None else None],
            detail="solver and oracle disagree"))
    elif fast.value is not None:
        if not (is_dominating(g, fast.witness) and holds_induced(p, g, fast.witness)):
            out.append(_record(g, witness=members(fast.witness),
                               detail="witness not a dominating p-set"))
    return out


@dataclass(frozen=True)
class _Suite:
    scope: Callable[[PropertyDescriptor], str | None]
    per_graph: Callable | None  # None: corpus-level suite


SUITES: dict[str, _Suite] = {
    "T1-bound": _Suite(_scope_hereditary_k1, _check_t1_bound),
    "T1-necessity": _Suite(_scope_hereditary_k1, _check_t1_necessity),
    "COR2-iff": _Suite(_scope_unrestricted_only, _check_cor2_iff),
    "T3-equiv": _Suite(_scope_induced_k1, _check_t3_equiv),
    "COR4-classes": _Suite(_scope_induced_k1, _check_cor4_classes),
    "T5-sandwich": _Suite(_scope_induced_k1, _check_t5_sandwich),
    "T5-A1A2": _Suite(_scope_induced_k1, _check_t5_a1a2),
    "T5-A1A3": _Suite(_scope_hereditary_k1, _check_t5_a1a3),
    "T6-iff": _Suite(_scope_hereditary_k1, _check_t6_iff),
    "T6-chain": _Suite(_scope_hereditary_k1, _check_t6_chain),
    "T6-msd3": _Suite(_scope_hereditary_k1, _check_t6_msd3),
    "TA-vertex": _Suite(_scope_nondegenerate_k1, _check_ta_vertex),
    "TB-edgeadd": _Suite(_scope_hereditary_k1, _check_tb_edgeadd),
    "TC-plus1-lemma": _Suite(_scope_hereditary_k1, _check_tc_plus1),
    "FLAG-audit": _Suite(_scope_any, None),
    "ORACLE-equiv": _Suite(_scope_any, _check_oracle_equiv),
}

# every verified statement maps to its suite facets; checked at import so a
# new statement cannot be added without a suite (and vice versa)
STATEMENT_COVERAGE: dict[str, tuple[str, ...]] = {
    "single-subdivision-bound": ("T1-bound", "T1-necessity"),
    "s-plus-iff-ordinary-domination": ("COR2-iff",),
    "s-minus-iff-er-minus": ("T3-equiv",),
    "criticality-classes-coincide": ("COR4-classes",),
    "triple-subdivision-sandwich": ("T5-sandwich", "T5-A1A2", "T5-A1A3"),
    "multisubdivision-master": ("T6-iff", "T6-chain", "T6-msd3"),
    "vertex-removal-lemma": ("TA-vertex",),
    "edge-addition-lemma": ("TB-edgeadd",),
    "plus-one-edge-lemma": ("TC-plus1-lemma",),
    "property-flag-audit": ("FLAG-audit",),
    "solver-oracle-equivalence": ("ORACLE-equiv",),
}

_covered = [s for suites in STATEMENT_COVERAGE.values() for s in suites]
if sorted(_covered) != sorted(SUITES) or len(set(_covered)) != len(_covered):
    raise RuntimeError("suite registry out of sync with statement coverage")


def _run_flag_audit(p: PropertyDescriptor, graphs: list[Graph]) -> list[Violation]:
    report = audit_flags(p, graphs)
    return [
        {"graph6": g6, "flag": flag, "detail": detail}
        for flag, hits in sorted(report.claim_violations.items())
        for g6, detail in hits
    ]


def run_suite(
    suite_id: str,
    p: PropertyDescriptor,
    corpus: Iterable[Graph],
    options: VerifyOptions | None = None,
) -> SuiteReport:
    """Evaluate one suite over a corpus; violations carry replay data."""
    if suite_id not in SUITES:
        raise ValueError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    opt = options or VerifyOptions()
    suite = SUITES[suite_id]
    started = time.perf_counter()
    reason = suite.scope(p)
    if reason is not None:
        return SuiteReport(suite_id, p.key, "skip", reason=reason,
                           elapsed=time.perf_counter() - started)
    graphs = list(corpus)
    violations: list[Violation] = []
    checked = 0
    if suite.per_graph is None:
        violations = _run_flag_audit(p, graphs)
        checked = len(graphs)
    else:
        for g in graphs:
            checked += 1
            violations.extend(suite.per_graph(g, p, opt))
            if opt.fail_fast and violations:
                break
    status = "pass" if not violations else "fail"
    return SuiteReport(suite_id, p.key, status, graphs_checked=checked,
                       violations=violations,
                       elapsed=time.perf_counter() - started)


# ------------------------------------------------- parallel orchestration --

_WORKER_STATE: dict = {}


def _init_worker(options: VerifyOptions):
    _WORKER_STATE["options"] = options


def _graph_task(args):
    suite_id, prop, g = args
    check = SUITES[suite_id].per_graph
    return check(g, prop, _WORKER_STATE["options"])


def run_suites(
    suite_ids: list[str],
    properties: list[PropertyDescriptor],
    corpus: Iterable[Graph],
    options: VerifyOptions | None = None,
) -> list[SuiteReport]:
    """Run each suite for each property; reports in (suite, property) order.

    With options.jobs > 1, per-graph checks are distributed over a process
    pool; violation lists are merged in corpus order, so the output is
    identical to a serial run.
    """
    opt = options or VerifyOptions()
    graphs = list(corpus)
    reports = []
    pool = None
    try:
        if opt.jobs > 1:
            pool = multiprocessing.Pool(opt.jobs, initializer=_init_worker,
                                        initargs=(opt,))
        for suite_id in suite_ids:
            suite = SUITES[suite_id]
            for p in properties:
                if pool is None or suite.per_graph is None:
                    reports.append(run_suite(suite_id, p, graphs, opt))
                    continue
                started = time.perf_counter()
                reason = suite.scope(p)
                if reason is not None:
                    reports.append(SuiteReport(
                        suite_id, p.key, "skip", reason=reason,
                        elapsed=time.perf_counter() - started))
                    continue
                violations: list[Violation] = []
                checked = 0
                tasks = ((suite_id, p, g) for g in graphs)
                for hits in pool.imap(_graph_task, tasks, chunksize=8):
                    checked += 1
                    violations.extend(hits)
                    if opt.fail_fast and violations:
                        break
                status = "pass" if not violations else "fail"
                reports.append(SuiteReport(
                    suite_id, p.key, status, graphs_checked=checked,
                    violations=violations,
                    elapsed=time.perf_counter() - started))
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
    return reports


# -------------------------------------------------- counterexample scans --


def _has_cut_vertex(g: Graph) -> bool:
    base = len(components(g))
    for v in range(g.n):
        smaller, _ = delete_vertex(g, v)
        if smaller.n and len(components(smaller)) > base:
            return True
    return False


def _scan_s_class(i: int):
    def scan(g: Graph, p: PropertyDescriptor):
        if not g.edges():
            return None
        m = msd_graph(g, p, cap=3).msd
        if m == i:
            return {"msd": m}
        return None

    return scan


def _scan_msd_above_3(g: Graph, p: PropertyDescriptor):
    if not g.edges():
        return None
    m = msd_graph(g, p, cap=3).msd
    if not isinstance(m, int):
        return {"msd": str(m)}
    return None


def _scan_er_minus_exists(g: Graph, p: PropertyDescriptor):
    base = gamma_value(g, p)
    if base is None:
        return None
    for e in g.edges():
        deleted = gamma_value(delete_edge(g, e), p)
        if deleted is not None and deleted < base:
            return {"edge": list(e), "gamma": base, "gamma_deleted": deleted}
    return None


def _scan_s2_cut_vertex(g: Graph, p: PropertyDescriptor):
    hit = _scan_s_class(2)(g, p)
    if hit is not None and _has_cut_vertex(g):
        return hit
    return None


ASSERTIONS = {
    "in-S1": _scan_s_class(1),
    "in-S2": _scan_s_class(2),
    "in-S3": _scan_s_class(3),
    "msd-above-3": _scan_msd_above_3,
    "er-minus-exists": _scan_er_minus_exists,
    "s2-with-cut-vertex": _scan_s2_cut_vertex,
}


def scan_counterexamples(
    assertion_id: str, p: PropertyDescriptor, corpus: Iterable[Graph]
) -> list[Violation]:
    """Exploratory scan: emit the graphs matching a predicate, in order."""
    if assertion_id not in ASSERTIONS:
        raise ValueError(
            f"unknown assertion {assertion_id!r}; known: {', '.join(sorted(ASSERTIONS))}"
        )
    predicate = ASSERTIONS[assertion_id]
    hits = []
    for g in corpus:
        found = predicate(g, p)
        if found is not None:
            record = {"graph6": to_graph6(g), "label": g.label}
            record.update(found)
            hits.append(record)
    return hits


# ----------------------------------------------------------- corpus + io --


def ingest_corpus(source, fmt: str = "graph6", skip_bad: bool = False, warn=None):
    """Lazily yield graphs from a path, text stream, or stdin ("-").

    graph6 sources yield one graph per line with line numbers in labels;
    edge-list sources yield a single graph. Parse errors raise CorpusError
    carrying the line number unless skip_bad is set.
    """
    if fmt == "graph6":
        if hasattr(source, "read"):
            text, name = source.read(), getattr(source, "name", "<stream>")
        else:
            from pathlib import Path

            path = Path(source)
            if not path.is_file():
                raise CorpusError(f"input file {path} not found")
            text, name = path.read_text(), str(path)
        return iter_graph6_lines(text, source=name, skip_bad=skip_bad, warn=warn)
    if fmt == "edges":
        if hasattr(source, "read"):
            from .formats import parse_edge_list

            return iter([parse_edge_list(source.read())])
        return iter(resolve_corpus(f"edges:{source}", skip_bad=skip_bad, warn=warn))
    raise CorpusError(f"unknown corpus format {fmt!r} (use graph6 or edges)")


def emit_report(report: SuiteReport, sink) -> None:
    """Write one report as a JSON line."""
    sink.write(json.dumps(report.to_json_dict()) + "\n")


def all_reports_pass(reports: list[SuiteReport]) -> bool:
    return all(r.status in ("pass", "skip") for r in reports)
