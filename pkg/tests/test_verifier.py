"""Suite machinery: scoping, reports, determinism, scans, ingestion."""

import io
import json

import pytest

from domlab import (
    ANY_GRAPH,
    CLIQUE_COMPONENTS,
    CONNECTED,
    EDGELESS,
    CorpusError,
    PropertyDescriptor,
    STATEMENT_COVERAGE,
    SUITES,
    VerifyOptions,
    all_reports_pass,
    complete,
    cycle,
    emit_report,
    ingest_corpus,
    load_corpus,
    path,
    run_suite,
    run_suites,
    scan_counterexamples,
    star,
)

SMALL = [path(2), path(3), cycle(3), cycle(4), star(3)]


class TestRegistry:
    def test_every_statement_has_suites_and_vice_versa(self):
        covered = [s for suites in STATEMENT_COVERAGE.values() for s in suites]
        assert sorted(covered) == sorted(SUITES)
        assert len(set(covered)) == len(covered)

    def test_expected_suite_ids(self):
        assert set(SUITES) == {
            "T1-bound", "T1-necessity", "COR2-iff", "T3-equiv", "COR4-classes",
            "T5-sandwich", "T5-A1A2", "T5-A1A3", "T6-iff", "T6-chain",
            "T6-msd3", "TA-vertex", "TB-edgeadd", "TC-plus1-lemma",
            "FLAG-audit", "ORACLE-equiv",
        }

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("T9-imaginary", ANY_GRAPH, SMALL)


class TestScoping:
    def test_connected_is_skipped_not_passed(self):
        r = run_suite("T1-bound", CONNECTED, SMALL)
        assert r.status == "skip"
        assert "closed under union with K1" in r.reason
        assert r.graphs_checked == 0

    def test_cor2_only_for_unrestricted(self):
        assert run_suite("COR2-iff", EDGELESS, SMALL).status == "skip"
        assert run_suite("COR2-iff", ANY_GRAPH, SMALL).status == "pass"

    def test_uk_gets_induced_suites_but_not_hereditary_ones(self):
        assert run_suite("T3-equiv", CLIQUE_COMPONENTS, SMALL).status == "pass"
        assert run_suite("T5-A1A3", CLIQUE_COMPONENTS, SMALL).status == "skip"


class TestReports:
    def test_pass_report_shape(self):
        r = run_suite("T3-equiv", ANY_GRAPH, SMALL)
        assert r.status == "pass"
        assert r.graphs_checked == len(SMALL)
        assert r.violations == []

    def test_emit_json_line(self):
        r = run_suite("T5-sandwich", EDGELESS, SMALL)
        sink = io.StringIO()
        emit_report(r, sink)
        record = json.loads(sink.getvalue())
        assert record["suite"] == "T5-sandwich"
        assert record["property"] == "O"
        assert record["status"] == "pass"
        assert record["violations"] == []

    def test_flag_audit_fail_path(self):
        # a descriptor whose claims are wrong must produce a failing report
        broken = PropertyDescriptor(
            "UK", "disjoint union of cliques (overclaimed)",
            hereditary=True, induced_hereditary=True,
            closed_union_K1=True, nondegenerate=True,
        )
        r = run_suite("FLAG-audit", broken, [complete(3)])
        assert r.status == "fail"
        assert r.violations[0]["flag"] == "hereditary"
        assert r.violations[0]["graph6"] == "Bw"
        assert not all_reports_pass([r])

    def test_fail_fast_stops_early(self, monkeypatch):
        from domlab import verifier

        probe = verifier._Suite(
            lambda p: None,
            lambda g, p, opt: [{"graph6": "x", "detail": "always"}],
        )
        monkeypatch.setitem(SUITES, "TEST-fail", probe)
        r = run_suite("TEST-fail", ANY_GRAPH, SMALL, VerifyOptions(fail_fast=True))
        assert r.status == "fail"
        assert r.graphs_checked == 1
        assert len(r.violations) == 1

    def test_determinism_excluding_elapsed(self):
        corpus = load_corpus("n5all")[:30]
        suites = ["T3-equiv", "ORACLE-equiv", "T6-msd3"]
        props = [ANY_GRAPH, CLIQUE_COMPONENTS]

        def normalize(reports):
            out = []
            for r in reports:
                d = r.to_json_dict()
                d.pop("elapsed")
                out.append(json.dumps(d))
            return out

        first = normalize(run_suites(suites, props, corpus))
        second = normalize(run_suites(suites, props, corpus))
        assert first == second

    def test_parallel_matches_serial(self):
        corpus = load_corpus("n5all")[:20]
        serial = run_suites(["T1-bound"], [ANY_GRAPH], corpus)
        parallel = run_suites(["T1-bound"], [ANY_GRAPH], corpus,
                              VerifyOptions(jobs=2))
        for a, b in zip(serial, parallel):
            da, db = a.to_json_dict(), b.to_json_dict()
            da.pop("elapsed"), db.pop("elapsed")
            assert da == db


class TestScans:
    def test_paths_in_s2(self):
        paths = [path(n) for n in range(2, 15)]
        hits = scan_counterexamples("in-S2", ANY_GRAPH, paths)
        # the residue-2 paths; P2 qualifies as well since two subdivisions
        # of its edge are the first to change gamma
        assert [h["label"] for h in hits] == ["P2", "P5", "P8", "P11", "P14"]

    def test_cycles_in_s1(self):
        cycles = [cycle(n) for n in range(3, 13)]
        hits = scan_counterexamples("in-S1", EDGELESS, cycles)
        assert [h["label"] for h in hits] == ["C3", "C6", "C9", "C12"]

    def test_k2_not_in_s3(self):
        assert scan_counterexamples("in-S3", ANY_GRAPH, [complete(2)]) == []

    def test_no_msd_above_3_on_small_corpus(self):
        assert scan_counterexamples("msd-above-3", ANY_GRAPH, SMALL) == []

    def test_er_minus_exists_finds_k333(self):
        from domlab import complete_multipartite

        hits = scan_counterexamples("er-minus-exists", EDGELESS,
                                    [path(4), complete_multipartite([3, 3, 3])])
        assert len(hits) == 1 and hits[0]["gamma"] == 3

    def test_unknown_assertion(self):
        with pytest.raises(ValueError):
            scan_counterexamples("in-S9", ANY_GRAPH, SMALL)


class TestIngest:
    def test_three_lines(self, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("A_\nBw\nCh\n")
        got = list(ingest_corpus(f))
        assert [g.n for g in got] == [2, 3, 4]
        assert got[1].label.endswith(":2 Bw")

    def test_bad_line_skipped_with_warning(self, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("A_\n~broken\nBw\n")
        warnings = []
        got = list(ingest_corpus(f, skip_bad=True, warn=warnings.append))
        assert len(got) == 2 and len(warnings) == 1

    def test_bad_line_raises_with_line_number(self, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("A_\n~broken\n")
        with pytest.raises(CorpusError, match=":2:"):
            list(ingest_corpus(f))

    def test_empty_file_gives_empty_suite(self, tmp_path):
        f = tmp_path / "c.g6"
        f.write_text("")
        graphs = list(ingest_corpus(f))
        assert graphs == []
        r = run_suite("T1-bound", ANY_GRAPH, graphs)
        assert r.status == "pass" and r.graphs_checked == 0

    def test_stream_sources(self):
        got = list(ingest_corpus(io.StringIO("A_\nBw\n")))
        assert len(got) == 2
        one = list(ingest_corpus(io.StringIO("0 1\n1 2\n"), fmt="edges"))
        assert len(one) == 1 and one[0].n == 3

    def test_unknown_format(self):
        with pytest.raises(CorpusError):
            list(ingest_corpus(io.StringIO(""), fmt="dot"))
