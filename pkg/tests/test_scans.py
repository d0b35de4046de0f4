import io
import json
from fractions import Fraction
from pathlib import Path

import pytest

from aspectra import graph as gr
from aspectra.factor import FactorCertificate
from aspectra.formats import encode_graph6, parse_graph6
from aspectra.spectral import threshold
from aspectra.verify.scans import (CSV_HEADER, case_scan, exception_check, exhaustive_scan, family_case,
                                   scan_graphs, shard_count, write_csv)

GOLDEN = Path(__file__).parent / "golden"


def test_family_case_boundaries():
    assert family_case(25, 1) == 1
    assert family_case(25, 13) == 1
    assert family_case(25, 14) == 2
    assert family_case(26, 15) == 3


@pytest.mark.parametrize("alpha", [0, Fraction(1, 3), Fraction(1, 2)])
def test_case_scan_n25(alpha):
    rep = case_scan(25, alpha)
    assert rep.equality_at_s1 and rep.all_below_for_s_ge_2 and rep.s1_is_maximum
    assert rep.max_discrepancy < 1e-7
    assert all(r.quotient_matches for r in rep.rows)
    assert not rep.exploratory
    assert abs(rep.threshold - threshold(25, alpha)) < 1e-12
    cases = {r.s: r.case for r in rep.rows}
    assert cases[14] == 2 and max(cases) == 14


def test_case_scan_rejects_large_alpha():
    with pytest.raises(ValueError):
        case_scan(25, Fraction(2, 3))


def test_case_scan_closed_forms_case3():
    rep = case_scan(26, Fraction(1, 4))
    row = next(r for r in rep.rows if r.case == 3)
    assert row.closed_form is not None and abs(row.closed_form - row.lambda_dense) < 1e-7


def test_scan_n4_examples():
    summary = exhaustive_scan(4, Fraction(1, 2), n_min=4)
    by_code = {r.graph6: r for r in summary.records}
    k4 = by_code[encode_graph6(gr.complete(4))]
    assert k4.above_threshold and k4.has_factor
    assert summary.cells["above_nofactor"] == 0


def test_scan_c5_is_below():
    summary = scan_graphs([gr.cycle(5)], 0)
    rec = summary.records[0]
    assert abs(rec.lambda_alpha - 2) < 1e-9 and not rec.above_threshold and rec.has_factor


def test_scan_n6_half_matches_golden():
    golden = json.loads((GOLDEN / "scan_n6_alpha_half.json").read_text())
    summary = exhaustive_scan(6, "1/2", n_min=6)
    assert summary.cells == golden["cells"]
    assert [list(e) for e in summary.exceptions] == golden["exceptions"]
    assert summary.kano_violations == golden["kano_violations"]
    assert summary.exploratory


def test_positive_certificates_validate():
    summary = exhaustive_scan(6, 0, n_min=5)
    for r in summary.records:
        if r.has_factor:
            cert = FactorCertificate.from_text(r.certificate.replace(" / ", "\n"))
            assert cert.validate(parse_graph6(r.graph6))


def test_sharded_scan_matches_serial():
    a = exhaustive_scan(5, Fraction(1, 3), shards=1)
    b = exhaustive_scan(5, Fraction(1, 3), shards=2)
    assert a.records == b.records


def test_labelled_scan_has_same_cells_shape():
    dedup = exhaustive_scan(4, 0, n_min=4)
    labelled = exhaustive_scan(4, 0, n_min=4, dedup=False)
    assert len(labelled.records) == 38
    assert labelled.cells["above_nofactor"] == dedup.cells["above_nofactor"] == 0


def test_csv_output():
    summary = exhaustive_scan(3, 0)
    text = write_csv(summary.records)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER) == "graph6,n,alpha,lambda,above,factor,kano"
    assert len(lines) == 3
    assert all(line.split(",")[4] in "01" for line in lines[1:])
    buf = io.StringIO()
    write_csv(summary.records, buf)
    assert buf.getvalue() == text


def test_shard_count(monkeypatch):
    monkeypatch.setenv("ASPECTRA_SHARDS", "3")
    assert shard_count() == 3
    assert shard_count(2) == 2
    monkeypatch.delenv("ASPECTRA_SHARDS")
    assert shard_count() == 1


@pytest.mark.parametrize("n", [6, 10])
def test_exception_graph_report(n):
    rep = exception_check(n, Fraction(1, 3))
    assert rep.kano_fails_at_cut_vertex
    assert rep.engines_agree is True
    assert abs(rep.lambda_alpha - rep.threshold) < 1e-9
    # the graph does have a factor: flagged, not asserted away
    assert rep.discrepancy and "FLAG" not in rep.message()
    assert rep.dp.certificate.validate(gr.exception_graph(n))


def test_exception_certificate_n10():
    rep = exception_check(10, 0)
    assert rep.dp.certificate.blocks == ((1, 2, 3, 0, 9), (4, 5, 6, 7, 8))


def test_exception_check_range():
    with pytest.raises(ValueError):
        exception_check(4, 0)
    assert exception_check(15, 0).engines_agree is None
