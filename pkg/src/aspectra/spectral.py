"""A_alpha matrices, a cyclic Jacobi eigensolver, quotient matrices and interlacing."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import catalog
from .algebra import char_poly
from .graph import Graph, exception_graph, is_connected
from .roots import largest_real_root

MAX_SWEEPS = 500
DEFAULT_TOL = 1e-12
# Above this size the Jacobi sweeps get slow in numpy; LAPACK takes over.
JACOBI_MAX_SIZE = 300
MAX_ORDER = 2000


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def as_alpha(alpha) -> Fraction:
    """Exact rational alpha; floats go through their shortest repr so 0.6 becomes 3/5."""
    if isinstance(alpha, Fraction):
        return alpha
    if isinstance(alpha, int):
        return Fraction(alpha)
    if isinstance(alpha, float):
        return Fraction(repr(alpha))
    return Fraction(str(alpha).strip())


def _check_alpha(alpha: Fraction) -> None:
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")


class SymmetricMatrix:
    """Dense real symmetric matrix; only the upper triangle of the input is read."""

    __slots__ = ("_a",)

    def __init__(self, data):
        arr = np.array(data, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"square matrix required, got shape {arr.shape}")
        upper = np.triu(arr)
        arr = upper + np.triu(arr, 1).T
        arr.setflags(write=False)
        self._a = arr

    @property
    def size(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._a

    def principal(self, keep: Sequence[int]) -> "SymmetricMatrix":
        idx = list(keep)
        return SymmetricMatrix(self._a[np.ix_(idx, idx)])

    def __getitem__(self, key):
        return self._a[key]


@dataclass(frozen=True)
class SpectralResult:
    lambda_max: float
    full_spectrum: tuple[float, ...] | None
    residual: float
    iterations: int
    method: str = "jacobi"


def a_alpha_exact(g: Graph, alpha) -> list[list[Fraction]]:
    """A_alpha(g) = alpha D + (1 - alpha) A with rational entries."""
    alpha = as_alpha(alpha)
    _check_alpha(alpha)
    if g.order == 0:
        raise ValueError("A_alpha is undefined for the empty graph")
    off = 1 - alpha
    rows = []
    for v in range(g.order):
        row = [off if g.adjacent(v, u) else Fraction(0) for u in range(g.order)]
        row[v] = alpha * g.degree(v)
        rows.append(row)
    return rows


def a_alpha_matrix(g: Graph, alpha) -> SymmetricMatrix:
    alpha = as_alpha(alpha)
    _check_alpha(alpha)
    if g.order == 0:
        raise ValueError("A_alpha is undefined for the empty graph")
    if g.order > MAX_ORDER:
        raise ValueError(f"order {g.order} exceeds the supported maximum {MAX_ORDER}")
    af = float(alpha)
    n = g.order
    adj = np.zeros((n, n))
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1.0
    deg = adj.sum(axis=1)
    return SymmetricMatrix(af * np.diag(deg) + (1.0 - af) * adj)


def jacobi_eigenvalues(m: SymmetricMatrix, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS):
    """Cyclic-by-row Jacobi diagonalisation.

    Stops once the off-diagonal Frobenius norm is at most ``tol * min(1, ||m||_F)``,
    which bounds every eigenvalue error by ``tol`` in absolute terms.
    Returns ``(eigenvalues, off_norm, sweeps)``.
    """
    a = np.array(m.array, dtype=float)
    k = a.shape[0]
    fro = float(np.linalg.norm(a))
    target = tol * min(1.0, fro) if fro else 0.0

    def off_norm() -> float:
        # summing the off-diagonal squares directly avoids cancellation against the diagonal
        off_diag = a - np.diag(np.diag(a))
        return float(np.sqrt(np.sum(off_diag * off_diag)))

    off = off_norm()
    sweeps = 0
    while off > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", off)
        sweeps += 1
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                g100 = 100.0 * abs(apq)
                if abs(app) + g100 == abs(app) and abs(aqq) + g100 == abs(aqq):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                tr = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, tr)
                sn = tr * c
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - sn * row_q
                a[q, :] = sn * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - sn * col_q
                a[:, q] = sn * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
        off = off_norm()
    return np.diag(a).copy(), off, sweeps


def spectral_radius(m: SymmetricMatrix, tol: float = DEFAULT_TOL, method: str = "auto") -> SpectralResult:
    """Largest eigenvalue together with the full descending spectrum."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if method == "auto":
        method = "jacobi" if m.size <= JACOBI_MAX_SIZE else "lapack"
    if method == "jacobi":
        vals, off, sweeps = jacobi_eigenvalues(m, tol)
    elif method == "lapack":
        vals = np.linalg.eigvalsh(m.array)
        # eigvalsh is backward stable; report the standard a-posteriori bound
        off, sweeps = float(np.finfo(float).eps * np.linalg.norm(m.array) * m.size), 0
    else:
        raise ValueError(f"unknown method {method!r}")
    spectrum = tuple(sorted((float(v) for v in vals), reverse=True))
    return SpectralResult(spectrum[0], spectrum, off, sweeps, method)


def lambda_alpha(g: Graph, alpha, tol: float = DEFAULT_TOL) -> float:
    """A_alpha spectral radius of ``g``."""
    return spectral_radius(a_alpha_matrix(g, alpha), tol).lambda_max


@dataclass(frozen=True)
class ThresholdResult:
    n: int
    alpha: Fraction
    value: float
    dense: float
    bracket_low: Fraction
    bracket_high: Fraction

    @property
    def agreement(self) -> float:
        return abs(self.value - self.dense)


def threshold_result(n: int, alpha, agree_tol: float = 1e-7) -> ThresholdResult:
    """lambda_alpha(K_1 v (K_{n-2} u K_1)) by eigensolve and by exact root, cross-checked."""
    if n < 3:
        raise ValueError(f"threshold needs n >= 3, got {n}")
    alpha = as_alpha(alpha)
    _check_alpha(alpha)
    dense = lambda_alpha(exception_graph(n), alpha)
    phi = catalog.phi_bstar().subs({"n": n, "a": alpha})
    bracket = largest_real_root(phi)
    value = float(bracket)
    if abs(value - dense) > agree_tol:
        raise ConsistencyError(
            f"threshold({n}, {alpha}): eigensolver {dense!r} vs exact root {value!r}"
        )
    if not (n - 2 < bracket.low and bracket.high < n - 1):
        raise ConsistencyError(f"threshold({n}, {alpha}) = {value} outside ({n - 2}, {n - 1})")
    return ThresholdResult(n, alpha, value, dense, bracket.low, bracket.high)


def threshold(n: int, alpha) -> float:
    return threshold_result(n, alpha).value


@dataclass(frozen=True)
class QuotientMatrix:
    cells: tuple[tuple[int, ...], ...]
    block_avgs: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def as_array(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.block_avgs])

    def char_poly(self):
        return char_poly(self.block_avgs)

    def largest_eigenvalue(self) -> float:
        if self.size <= 3:
            return float(largest_real_root(self.char_poly()))
        return float(np.max(np.linalg.eigvals(self.as_array()).real))


def _validate_partition(n: int, cells) -> tuple[tuple[int, ...], ...]:
    cells = tuple(tuple(c) for c in cells)
    seen: set[int] = set()
    for c in cells:
        if not c:
            raise ValueError("partition cells must be non-empty")
        for v in c:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for order {n}")
            if v in seen:
                raise ValueError(f"vertex {v} appears in more than one cell")
            seen.add(v)
    if len(seen) != n:
        raise ValueError(f"partition covers {len(seen)} of {n} vertices")
    return cells


def quotient_matrix(g: Graph, cells, alpha) -> QuotientMatrix:
    """Average row sums of the A_alpha blocks induced by ``cells``, exactly."""
    cells = _validate_partition(g.order, cells)
    m = a_alpha_exact(g, alpha)
    avgs = []
    equitable = True
    for ci in cells:
        row = []
        for cj in cells:
            sums = [sum((m[v][u] for u in cj), Fraction(0)) for v in ci]
            if any(x != sums[0] for x in sums):
                equitable = False
            row.append(sum(sums, Fraction(0)) / len(ci))
        avgs.append(tuple(row))
    return QuotientMatrix(cells, tuple(avgs), equitable)


@dataclass(frozen=True)
class CrossCheck:
    ok: bool
    dense: float
    quotient: float

    def __bool__(self) -> bool:
        return self.ok


def quotient_cross_check(g: Graph, cells, alpha, tol: float = 1e-7) -> CrossCheck:
    q = quotient_matrix(g, cells, alpha)
    if not q.equitable:
        raise ValueError("quotient_cross_check requires an equitable partition")
    dense = lambda_alpha(g, alpha)
    quot = q.largest_eigenvalue()
    return CrossCheck(abs(dense - quot) <= tol, dense, quot)


def symmetrize_quotient(q: QuotientMatrix) -> SymmetricMatrix:
    """Q^(1/2) B Q^(-1/2) with Q = diag(cell sizes); symmetric for equitable A_alpha quotients."""
    sizes = np.sqrt(np.array(q.sizes, dtype=float))
    b = q.as_array()
    sym = sizes[:, None] * b / sizes[None, :]
    if not np.allclose(sym, sym.T, rtol=0, atol=1e-12 * max(1.0, np.abs(sym).max())):
        raise ValueError("quotient does not symmetrise; partition is not equitable")
    return SymmetricMatrix(sym)


@dataclass(frozen=True)
class InterlaceResult:
    ok: bool
    full: tuple[float, ...]
    sub: tuple[float, ...]
    violation: tuple[int, str] | None = None

    def __bool__(self) -> bool:
        return self.ok


def interlace_check(m: SymmetricMatrix, keep: Sequence[int], slack: float = 1e-8) -> InterlaceResult:
    """lambda_i >= mu_i >= lambda_{k-t+i} for the principal submatrix on ``keep``."""
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("keep must be non-empty")
    full = spectral_radius(m).full_spectrum
    sub = spectral_radius(m.principal(keep)).full_spectrum
    k, tt = len(full), len(sub)
    for i in range(tt):
        if full[i] < sub[i] - slack:
            return InterlaceResult(False, full, sub, (i, "upper"))
        if sub[i] < full[k - tt + i] - slack:
            return InterlaceResult(False, full, sub, (i, "lower"))
    return InterlaceResult(True, full, sub)


def monotonicity_check(g: Graph, h: Graph, alpha, embedding: Sequence[int] | None = None) -> bool:
    """True iff lambda_alpha(g) > lambda_alpha(h) - 1e-9 for a proper subgraph ``h``.

    ``embedding[i]`` is the vertex of ``g`` playing the role of vertex ``i`` of ``h``
    (identity by default).
    """
    if not is_connected(g):
        raise ValueError("monotonicity needs a connected host graph")
    emb = list(range(h.order)) if embedding is None else list(embedding)
    if len(emb) != h.order or len(set(emb)) != len(emb) or any(not 0 <= v < g.order for v in emb):
        raise ValueError("embedding must be an injective map into V(g)")
    for u, v in h.edges():
        if not g.adjacent(emb[u], emb[v]):
            raise ValueError(f"edge ({u}, {v}) of h is not an edge of g")
    if h.order == g.order and h.size() == g.size():
        raise ValueError("h is not a proper subgraph of g")
    if h.order == 0:
        return True
    return lambda_alpha(g, alpha) > lambda_alpha(h, alpha) - 1e-9
