"""Numeric scans: the extremal family per s, small-order sweeps and the exception graph."""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .. import catalog as cat
from ..algebra import MultiPoly, char_poly
from ..census import MAX_CANONICAL_ORDER, canonical_code, nonisomorphic_graphs
from ..factor import (MAX_ORACLE_ORDER, FactorOutcome, KanoReport, brute_force_factor_oracle,
                      has_p345_factor, kano_condition)
from ..formats import encode_graph6, parse_graph6
from ..graph import FamilySpec, Graph, exception_graph, extremal_g1, is_connected
from ..roots import largest_real_root
from ..spectral import (ConsistencyError, _check_alpha, as_alpha, lambda_alpha, quotient_matrix,
                        threshold_result)

THEOREM_MIN_ORDER = 25
CROSS_CHECK_TOL = 1e-7
ABOVE_SLACK = 1e-9
EQUALITY_TOL = 1e-9
CSV_HEADER = ("graph6", "n", "alpha", "lambda", "above", "factor", "kano")


def shard_count(flag: int | None = None) -> int:
    """Worker count: explicit value, else ``ASPECTRA_SHARDS``, else 1."""
    if flag is not None:
        value = flag
    else:
        raw = os.environ.get("ASPECTRA_SHARDS", "1")
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"ASPECTRA_SHARDS must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"shard count must be at least 1, got {value}")
    return value


def _const_matrix(rows, n_value: int, alpha: Fraction) -> list[list[Fraction]]:
    return [[e.evaluate({"n": n_value, "a": alpha}) if isinstance(e, MultiPoly)
             else Fraction(e) for e in row] for row in rows]


def family_case(n: int, s: int) -> int:
    """1, 2 or 3 according to how far n sits above floor(5s/3)."""
    gap = n - (5 * s) // 3
    if gap >= 3:
        return 1
    if gap in (1, 2):
        return 4 - gap
    raise ValueError(f"G1({n}, {s}) is undefined")


@dataclass(frozen=True)
class CaseRow:
    s: int
    case: int
    clique2: int
    independents: int
    lambda_dense: float
    lambda_quotient: float
    closed_form: float | None
    quotient_matches: bool
    below_threshold: bool
    below_n_minus_2: bool

    @property
    def discrepancy(self) -> float:
        return abs(self.lambda_dense - self.lambda_quotient)


@dataclass
class CaseScanReport:
    n: int
    alpha: Fraction
    threshold: float
    rows: list[CaseRow]
    exploratory: bool
    tolerance: float = CROSS_CHECK_TOL

    @property
    def equality_at_s1(self) -> bool:
        return bool(self.rows) and abs(self.rows[0].lambda_dense - self.threshold) <= EQUALITY_TOL

    @property
    def all_below_for_s_ge_2(self) -> bool:
        return all(r.below_threshold for r in self.rows[1:])

    @property
    def s1_is_maximum(self) -> bool:
        return all(r.lambda_dense <= self.rows[0].lambda_dense + EQUALITY_TOL for r in self.rows)

    @property
    def max_discrepancy(self) -> float:
        return max((r.discrepancy for r in self.rows), default=0.0)


def _case_row(n: int, s: int, alpha: Fraction, thr: float) -> CaseRow:
    spec = FamilySpec(n, s)
    g = extremal_g1(spec)
    fl2, fl5 = (2 * s) // 3, (5 * s) // 3
    case = family_case(n, s)
    dense = lambda_alpha(g, alpha)
    closed = None
    if case == 1:
        cells = spec.cells
        model = cat.b1_matrix(MultiPoly.const(s), MultiPoly.const(fl2), MultiPoly.const(fl5))
    else:
        cells = [spec.cells[0], spec.cells[1] + spec.cells[2]]
        maker = cat.b4_matrix if case == 2 else cat.b5_matrix
        model = maker(MultiPoly.const(s), MultiPoly.const(fl2))
        const_fn = cat.b4_constant if case == 2 else cat.b5_constant
        disc = cat.closed_form_discriminant(const_fn(MultiPoly.const(s), MultiPoly.const(fl2)))
        b = cat.quadratic_linear(MultiPoly.const(s)).evaluate({"n": n, "a": alpha})
        closed = (float(b) + math.sqrt(float(disc.evaluate({"n": n, "a": alpha, "s": s})))) / 2
    exact = _const_matrix(model, n, alpha)
    quot = quotient_matrix(g, cells, alpha)
    matches = quot.equitable and [list(r) for r in quot.block_avgs] == exact
    root = float(largest_real_root(char_poly(exact)))
    for other in (dense, closed):
        if other is not None and abs(other - root) > CROSS_CHECK_TOL:
            raise ConsistencyError(f"G1({n}, {s}), alpha={alpha}: quotient root {root!r} vs {other!r}")
    return CaseRow(s, case, spec.clique2_size, spec.independents, dense, root, closed, matches,
                   dense < thr - EQUALITY_TOL, dense < n - 2)


def case_scan(n: int, alpha) -> CaseScanReport:
    """lambda_alpha(G1(n, s)) for every admissible s, by eigensolver and by quotient root."""
    alpha = as_alpha(alpha)
    _check_alpha(alpha)
    if alpha >= Fraction(2, 3):
        raise ValueError(f"alpha must be below 2/3, got {alpha}")
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    thr = threshold_result(n, alpha).value
    rows = [_case_row(n, s, alpha, thr) for s in range(1, 3 * (n - 1) // 5 + 1)]
    return CaseScanReport(n, alpha, thr, rows, exploratory=n < THEOREM_MIN_ORDER)


@dataclass(frozen=True)
class ScanRecord:
    graph6: str
    order: int
    alpha: Fraction
    lambda_alpha: float
    above_threshold: bool
    has_factor: bool
    kano_holds: bool
    certificate: str | None = None

    def csv_row(self) -> list[str]:
        return [self.graph6, str(self.order), str(self.alpha), f"{self.lambda_alpha:.12g}",
                str(int(self.above_threshold)), str(int(self.has_factor)), str(int(self.kano_holds))]


@dataclass
class ScanSummary:
    alpha: Fraction
    orders: tuple[int, ...]
    records: list[ScanRecord]
    exceptions: list[tuple[str, bool | None]] = field(default_factory=list)

    @property
    def exploratory(self) -> bool:
        return min(self.orders) < THEOREM_MIN_ORDER

    @property
    def cells(self) -> dict[str, int]:
        out = {"above_factor": 0, "above_nofactor": 0, "below_factor": 0, "below_nofactor": 0}
        for r in self.records:
            key = ("above" if r.above_threshold else "below") + ("_factor" if r.has_factor else "_nofactor")
            out[key] += 1
        return out

    @property
    def kano_violations(self) -> int:
        """Graphs meeting the isolated-vertex condition but lacking a factor."""
        return sum(1 for r in self.records if r.kano_holds and not r.has_factor)


def scan_graph(g: Graph, alpha: Fraction, thresholds: dict[int, float]) -> ScanRecord:
    outcome: FactorOutcome = has_p345_factor(g)
    if outcome.has_factor and not outcome.certificate.validate(g):
        raise ConsistencyError(f"certificate for {encode_graph6(g)} does not validate")
    lam = lambda_alpha(g, alpha)
    thr = thresholds[g.order]
    return ScanRecord(encode_graph6(g), g.order, alpha, lam, lam >= thr - ABOVE_SLACK, outcome.has_factor,
                      kano_condition(g).holds,
                      outcome.certificate.to_text().replace("\n", " / ") if outcome.has_factor else None)


def _scan_chunk(args) -> list[ScanRecord]:
    codes, alpha, thresholds = args
    return [scan_graph(parse_graph6(c), alpha, thresholds) for c in codes]


def _is_exception(g: Graph) -> bool | None:
    if g.order > MAX_CANONICAL_ORDER:
        return None
    return canonical_code(g) == canonical_code(exception_graph(g.order))


def scan_graphs(graphs: Iterable[Graph], alpha, shards: int = 1) -> ScanSummary:
    """Classify every connected graph of order at least 3; records sorted by (order, graph6)."""
    alpha = as_alpha(alpha)
    _check_alpha(alpha)
    codes = sorted({(g.order, encode_graph6(g)) for g in graphs if g.order >= 3 and is_connected(g)})
    orders = tuple(sorted({o for o, _ in codes}))
    thresholds = {o: threshold_result(o, alpha).value for o in orders}
    plain = [c for _, c in codes]
    if shards > 1 and len(plain) > 1:
        size = math.ceil(len(plain) / shards)
        chunks = [(plain[i:i + size], alpha, thresholds) for i in range(0, len(plain), size)]
        with ProcessPoolExecutor(max_workers=shards) as pool:
            records = [r for part in pool.map(_scan_chunk, chunks) for r in part]
    else:
        records = _scan_chunk((plain, alpha, thresholds))
    records.sort(key=lambda r: (r.order, r.graph6))
    summary = ScanSummary(alpha, orders or (0,), records)
    for r in records:
        if r.above_threshold and not r.has_factor:
            summary.exceptions.append((r.graph6, _is_exception(parse_graph6(r.graph6))))
    return summary


def exhaustive_scan(n_max: int, alpha, n_min: int = 3, shards: int = 1, dedup: bool = True) -> ScanSummary:
    """Every connected graph with n_min <= order <= n_max, one per isomorphism class by default."""
    if not 3 <= n_min <= n_max <= MAX_CANONICAL_ORDER - 1:
        raise ValueError(f"orders must satisfy 3 <= n_min <= n_max <= {MAX_CANONICAL_ORDER - 1}")
    if dedup:
        graphs = [g for k in range(n_min, n_max + 1) for g in nonisomorphic_graphs(k)]
    else:
        from ..census import labeled_graphs
        graphs = [g for k in range(n_min, n_max + 1) for g in labeled_graphs(k) if is_connected(g)]
    return scan_graphs(graphs, alpha, shards)


def write_csv(records: Sequence[ScanRecord], fh=None) -> str:
    buf = fh if fh is not None else io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue() if fh is None else ""


@dataclass(frozen=True)
class ExceptionReport:
    n: int
    alpha: Fraction
    lambda_alpha: float
    threshold: float
    kano: KanoReport
    dp: FactorOutcome
    oracle: FactorOutcome | None

    @property
    def cut_vertex(self) -> int:
        return 0

    @property
    def kano_fails_at_cut_vertex(self) -> bool:
        return (not self.kano.holds and self.kano.worst_set == (self.cut_vertex,)
                and self.kano.worst_margin == Fraction(1, 3))

    @property
    def engines_agree(self) -> bool | None:
        return None if self.oracle is None else self.oracle.has_factor == self.dp.has_factor

    @property
    def discrepancy(self) -> bool:
        """True when the excluded graph nevertheless has a {P3, P4, P5}-factor."""
        return self.dp.has_factor

    def message(self) -> str:
        if self.discrepancy:
            return (f"K1 v (K{self.n - 2} u K1) has a {{P3,P4,P5}}-factor although it is the excluded "
                    "graph; the exclusion is not an obstruction at this order")
        return f"K1 v (K{self.n - 2} u K1) has no {{P3,P4,P5}}-factor"


def exception_check(n: int, alpha) -> ExceptionReport:
    """Probe K1 v (K_{n-2} u K1): spectral radius, isolated-vertex audit and both factor engines."""
    if not 5 <= n <= 20:
        raise ValueError(f"exception_check supports 5 <= n <= 20, got {n}")
    alpha = as_alpha(alpha)
    thr = threshold_result(n, alpha)
    g = exception_graph(n)
    dp = has_p345_factor(g)
    if dp.has_factor and not dp.certificate.validate(g):
        raise ConsistencyError("exception-graph certificate does not validate")
    oracle = brute_force_factor_oracle(g) if n <= MAX_ORACLE_ORDER else None
    return ExceptionReport(n, alpha, thr.dense, thr.value, kano_condition(g), dp, oracle)
