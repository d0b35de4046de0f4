"""Exact rational polynomials in the variables x, n, s, t, a.

``x`` is the eigenvalue variable, ``n`` the graph order, ``s`` the cut-set size,
``t`` the quotient in ``s = 3t + r`` and ``a`` the weight alpha.  Floors of
``2s/3`` and ``5s/3`` are never represented; callers instantiate one polynomial
per residue ``r = s mod 3`` instead (see :func:`floor_terms`).

Coefficients are :class:`fractions.Fraction`, so every identity check is exact.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

VARS = ("x", "n", "s", "t", "a")
_INDEX = {name: i for i, name in enumerate(VARS)}
_NV = len(VARS)
_ZERO_EXP = (0,) * _NV

Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class MultiPoly:
    """Sparse multivariate polynomial with rational coefficients.

    Terms are stored as a map from exponent tuples (ordered like ``VARS``) to
    non-zero fractions, so two equal polynomials always compare equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, c in terms.items():
                c = _as_fraction(c)
                if c:
                    if len(exp) != _NV or any(e < 0 for e in exp):
                        raise ValueError(f"bad exponent vector {exp}")
                    clean[tuple(exp)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[tuple[int, ...], Fraction]) -> "MultiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        exp = [0] * _NV
        exp[_index(name)] = 1
        return cls._raw({tuple(exp): Fraction(1)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        used = [False] * _NV
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(name for name, u in zip(VARS, used) if u)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(exp == _ZERO_EXP for exp in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial is not constant: {self}")
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def degree(self, name: str | None = None) -> int:
        """Total degree, or the degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(exp) for exp in self._terms)
        i = _index(name)
        return max(exp[i] for exp in self._terms)

    def coefficients(self, name: str) -> list["MultiPoly"]:
        """Coefficients of ``name**k`` for ``k = 0 .. degree``, as polynomials in the rest."""
        i = _index(name)
        out: list[dict] = [{} for _ in range(max(self.degree(name), 0) + 1)]
        for exp, c in self._terms.items():
            rest = exp[:i] + (0,) + exp[i + 1:]
            out[exp[i]][rest] = c
        return [MultiPoly._raw(d) for d in out]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded lexicographic order (x > n > s > t > a), highest first."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(_as_fraction(other))

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "MultiPoly":
        return self

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return MultiPoly()
            return MultiPoly._raw({e: v * c for e, v in self._terms.items()})
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        c = _as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of polynomial by zero")
        return self * (1 / c)

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        try:
            return self._terms == MultiPoly.const(_as_fraction(other))._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- substitution and evaluation -------------------------------------

    def subs(self, values: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Simultaneous substitution of polynomials or rationals for variables."""
        idx = {_index(k): v for k, v in values.items()}
        if not idx:
            return self
        scalar = {i: _as_fraction(v) for i, v in idx.items() if not isinstance(v, MultiPoly)}
        poly = {i: v for i, v in idx.items() if isinstance(v, MultiPoly)}
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            key = (i, k)
            if key not in powers:
                powers[key] = poly[i] ** k
            return powers[key]

        out = MultiPoly()
        grouped: dict[tuple[int, ...], dict] = {}
        for exp, c in self._terms.items():
            for i, v in scalar.items():
                if exp[i]:
                    c = c * v ** exp[i]
            if not c:
                continue
            kept = tuple(0 if (i in idx) else e for i, e in enumerate(exp))
            poly_key = tuple(exp[i] for i in sorted(poly))
            bucket = grouped.setdefault(poly_key, {})
            v = bucket.get(kept, 0) + c
            if v:
                bucket[kept] = v
            else:
                bucket.pop(kept, None)
        for poly_key, bucket in grouped.items():
            if not bucket:
                continue
            term = MultiPoly._raw(bucket)
            for i, k in zip(sorted(poly), poly_key):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def __call__(self, **values) -> "MultiPoly | Fraction":
        """Evaluate at the given values; returns a Fraction once nothing is left."""
        p = self.subs(values)
        return p.constant_value() if p.is_constant() else p

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a point covering every variable in use."""
        fvals = [None] * _NV
        for k, v in values.items():
            fvals[_index(k)] = _as_fraction(v)
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for i, e in enumerate(exp):
                if e:
                    v = fvals[i]
                    if v is None:
                        raise ValueError(f"no value supplied for variable {VARS[i]!r}")
                    term *= v ** e
            total += term
        return total

    def evaluate_float(self, values: Mapping[str, float]) -> float:
        fvals = [0.0] * _NV
        for k, v in values.items():
            fvals[_index(k)] = float(v)
        total = 0.0
        for exp, c in self._terms.items():
            term = float(c)
            for i, e in enumerate(exp):
                if e:
                    term *= fvals[i] ** e
            total += term
        return total

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = " ".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(VARS, exp) if e
            )
            parts.append(f"{c} * {mono}" if mono else f"{c}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARS}") from None


x, n, s, t, a = (MultiPoly.var(v) for v in VARS)


def poly_arith(op: str, p: MultiPoly, q: MultiPoly | None = None) -> MultiPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: MultiPoly, var: str, value: "MultiPoly | Scalar") -> MultiPoly:
    return p.subs({var: value})


def identity_equal(lhs: "MultiPoly | Scalar", rhs: "MultiPoly | Scalar") -> bool:
    lhs = lhs if isinstance(lhs, MultiPoly) else MultiPoly.const(lhs)
    rhs = rhs if isinstance(rhs, MultiPoly) else MultiPoly.const(rhs)
    return (lhs - rhs).is_zero()


def first_difference(lhs: MultiPoly, rhs: MultiPoly) -> str | None:
    """Leading monomial of ``lhs - rhs`` in canonical order, or None when equal."""
    diff = lhs - rhs
    if diff.is_zero():
        return None
    exp, c = diff.sorted_terms()[0]
    return str(MultiPoly._raw({exp: c}))


def floor_terms(r: int) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """``(s, floor(2s/3), floor(5s/3))`` written in ``t`` under ``s = 3t + r``."""
    if r == 0:
        return 3 * t, 2 * t, 5 * t
    if r == 1:
        return 3 * t + 1, 2 * t, 5 * t + 1
    if r == 2:
        return 3 * t + 2, 2 * t + 1, 5 * t + 3
    raise ValueError(f"residue must be 0, 1 or 2, got {r}")


def _entry(v) -> MultiPoly:
    return v if isinstance(v, MultiPoly) else MultiPoly.const(_as_fraction(v))


def _det(m: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    k = len(m)
    if k == 1:
        return m[0][0]
    if k == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = MultiPoly()
    for j in range(k):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def char_poly(m: Sequence[Sequence["MultiPoly | Scalar"]]) -> MultiPoly:
    """det(x I - m) by cofactor expansion; entries must not involve ``x``."""
    k = len(m)
    if k == 0 or k > 3 or any(len(row) != k for row in m):
        raise ValueError("char_poly supports square matrices of size 1 to 3")
    shifted = [
        [(x if i == j else MultiPoly()) - _entry(m[i][j]) for j in range(k)]
        for i in range(k)
    ]
    return _det(shifted)


def det_rational(m: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant of a small rational matrix by cofactor expansion."""
    k = len(m)
    if k == 0:
        return Fraction(1)
    if k == 1:
        return _as_fraction(m[0][0])
    total = Fraction(0)
    for j in range(k):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = _as_fraction(m[0][j]) * det_rational(minor)
            total += term if j % 2 == 0 else -term
    return total


def univariate_coeffs(p: MultiPoly, name: str = "x") -> list[Fraction]:
    """Rational coefficients, constant term first, of a polynomial in one variable."""
    others = [v for v in p.variables if v != name]
    if others:
        raise ValueError(f"polynomial still depends on {others}: {p}")
    return [c.constant_value() for c in p.coefficients(name)]


def from_coeffs(coeffs: Iterable[Scalar], name: str = "x") -> MultiPoly:
    v = MultiPoly.var(name)
    out = MultiPoly()
    for k, c in enumerate(coeffs):
        if c:
            out = out + _as_fraction(c) * v ** k
    return out
