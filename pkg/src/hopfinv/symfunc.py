"""Exact symmetric functions in the m, e, h, p and s bases.

A :class:`SymFunc` is a homogeneous sparse linear combination of basis
elements indexed by partitions. Coefficients are ``Fraction`` (or ``int``)
or :class:`~hopfinv.tpoly.TPoly`. Every conversion goes through the monomial
basis using per-degree transition matrices that are computed once.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import conjugate, kostka, partition_list, sort_partition
from .errors import DomainError, ResourceError
from .tpoly import TPoly, coefficient_items, nonnegative

BASES = ("m", "e", "h", "p", "s")
MULTIPLICATIVE = ("e", "h", "p")

MAX_DEGREE = 12


def set_max_degree(n: int) -> None:
    global MAX_DEGREE
    MAX_DEGREE = n


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


class SymFunc:
    """Homogeneous symmetric function of a fixed degree in one basis."""

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis: str, terms: dict | None = None, degree: int | None = None):
        if basis not in BASES:
            raise DomainError(f"unknown basis {basis!r}")
        terms = _clean({sort_partition(k): v for k, v in (terms or {}).items()})
        degrees = {sum(k) for k in terms}
        if len(degrees) > 1:
            raise DomainError(f"inhomogeneous terms of degrees {sorted(degrees)}")
        if degrees:
            d = degrees.pop()
            if degree is not None and degree != d:
                raise DomainError(f"terms have degree {d}, not {degree}")
            degree = d
        if degree is None:
            raise DomainError("degree of the zero function must be given")
        self.basis = basis
        self.degree = degree
        self.terms = terms

    @classmethod
    def zero(cls, degree: int, basis: str = "m") -> "SymFunc":
        return cls(basis, {}, degree)

    @classmethod
    def basis_element(cls, basis: str, la, coeff=1) -> "SymFunc":
        la = sort_partition(la)
        return cls(basis, {la: coeff}, sum(la))

    # access -------------------------------------------------------------

    def coeff(self, la):
        return self.terms.get(sort_partition(la), 0)

    def items(self):
        return sorted(self.terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    # arithmetic -----------------------------------------------------------

    def _aligned(self, other: "SymFunc") -> dict:
        if self.degree != other.degree and self.terms and other.terms:
            raise DomainError("cannot add symmetric functions of different degrees")
        return convert(other, self.basis).terms

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, v in self._aligned(other).items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.basis, out, self.degree)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(self.basis, {k: -v for k, v in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, TPoly)):
            return SymFunc(self.basis, {k: v * other for k, v in self.terms.items()}, self.degree)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        if self.degree != other.degree:
            return False
        return self.terms == convert(other, self.basis).terms

    __hash__ = None

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.basis, {k: fn(v) for k, v in self.terms.items()}, self.degree)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for la, c in self.items():
            name = f"{self.basis}{list(la)}"
            if isinstance(c, TPoly) and not c.is_constant():
                parts.append(f"({c})*{name}")
            else:
                c = c.constant() if isinstance(c, TPoly) else c
                parts.append(name if c == 1 else "-" + name if c == -1 else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


def m(*la):
    return SymFunc.basis_element("m", la)


def e(*la):
    return SymFunc.basis_element("e", la)


def h(*la):
    return SymFunc.basis_element("h", la)


def p(*la):
    return SymFunc.basis_element("p", la)


def s(*la):
    return SymFunc.basis_element("s", la)


# ---------------------------------------------------------------------------
# transition matrices
# ---------------------------------------------------------------------------

def _distributions(kind: str, k: int, target: tuple):
    """Exponent vectors v <= target with |v| = k contributed by one factor
    e_k, h_k or p_k."""
    ell = len(target)
    if kind == "p":
        for i in range(ell):
            if target[i] >= k:
                v = [0] * ell
                v[i] = k
                yield v
    elif kind == "e":
        def rec(i, left, acc):
            if left == 0:
                yield acc + [0] * (ell - i)
                return
            if ell - i < left:
                return
            if target[i] >= 1:
                yield from rec(i + 1, left - 1, acc + [1])
            yield from rec(i + 1, left, acc + [0])
        yield from rec(0, k, [])
    else:
        def rec(i, left, acc):
            if i == ell:
                if left == 0:
                    yield acc
                return
            for x in range(min(left, target[i]) + 1):
                yield from rec(i + 1, left - x, acc + [x])
        yield from rec(0, k, [])


@lru_cache(maxsize=None)
def _product_coeff(kind: str, parts: tuple, target: tuple) -> int:
    """Coefficient of x^target in prod_{k in parts} g_k(x), g in {e, h, p}."""
    if not parts:
        return 0 if target else 1
    total = 0
    for v in _distributions(kind, parts[0], target):
        rest = tuple(sorted((t - x for t, x in zip(target, v) if t - x), reverse=True))
        total += _product_coeff(kind, parts[1:], rest)
    return total


def _invert(rows: list) -> list:
    """Inverse of a square integer matrix over Q by Gauss-Jordan."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


_lock = threading.Lock()
_to_m_cache: dict = {}
_from_m_cache: dict = {}


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise ResourceError(f"degree {n} exceeds the guard {MAX_DEGREE}")


def to_m_matrix(basis: str, n: int) -> list:
    """Row i holds the m-expansion of basis[partition_list(n)[i]]."""
    key = (basis, n)
    if key in _to_m_cache:
        return _to_m_cache[key]
    _check_degree(n)
    with _lock:
        if key not in _to_m_cache:
            parts = partition_list(n)
            if basis == "m":
                mat = [[int(i == j) for j in range(len(parts))] for i in range(len(parts))]
            elif basis == "s":
                mat = [[kostka(la, mu) for mu in parts] for la in parts]
            else:
                mat = [[_product_coeff(basis, la, mu) for mu in parts] for la in parts]
            _to_m_cache[key] = mat
    return _to_m_cache[key]


def from_m_matrix(basis: str, n: int) -> list:
    """Row i holds the basis-expansion of m[partition_list(n)[i]]."""
    key = (basis, n)
    if key in _from_m_cache:
        return _from_m_cache[key]
    mat = to_m_matrix(basis, n)
    with _lock:
        if key not in _from_m_cache:
            _from_m_cache[key] = _invert(mat)
    return _from_m_cache[key]


def _apply(vec: dict, mat: list, parts: tuple, index: dict) -> dict:
    out: dict = {}
    for la, c in vec.items():
        row = mat[index[la]]
        for j, x in enumerate(row):
            if x:
                mu = parts[j]
                out[mu] = out.get(mu, 0) + c * x
    return out


@lru_cache(maxsize=None)
def _index(n: int) -> dict:
    return {la: i for i, la in enumerate(partition_list(n))}


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-express f in the target basis."""
    if target not in BASES:
        raise DomainError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    n = f.degree
    _check_degree(n)
    if not f.terms:
        return SymFunc.zero(n, target)
    parts, index = partition_list(n), _index(n)
    terms = f.terms
    if f.basis != "m":
        terms = _apply(terms, to_m_matrix(f.basis, n), parts, index)
    if target != "m":
        terms = _apply(terms, from_m_matrix(target, n), parts, index)
    return SymFunc(target, terms, n)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, returned in the basis of f."""
    basis = f.basis if f.basis in MULTIPLICATIVE else "p"
    a, b = convert(f, basis), convert(g, basis)
    out: dict = {}
    for la, c in a.terms.items():
        for mu, d in b.terms.items():
            key = sort_partition(la + mu)
            out[key] = out.get(key, 0) + c * d
    return convert(SymFunc(basis, out, f.degree + g.degree), f.basis)


# ---------------------------------------------------------------------------
# involutions and substitutions
# ---------------------------------------------------------------------------

def omega(f: SymFunc) -> SymFunc:
    """The involution p_k -> (-1)^(k-1) p_k, returned in the input basis."""
    if f.basis in ("e", "h"):
        return SymFunc("h" if f.basis == "e" else "e", f.terms, f.degree).to(f.basis)
    if f.basis == "s":
        return SymFunc("s", {conjugate(la): c for la, c in f.terms.items()}, f.degree)
    g = convert(f, "p")
    g = SymFunc("p", {la: c if (sum(la) - len(la)) % 2 == 0 else -c
                      for la, c in g.terms.items()}, g.degree)
    return convert(g, f.basis)


def inflate(f: SymFunc, d: int) -> SymFunc:
    """Substitute x_i -> x_i^d."""
    g = convert(f, "p")
    out = SymFunc("p", {tuple(d * k for k in la): c for la, c in g.terms.items()}, d * f.degree)
    return convert(out, f.basis)


def deflate(f: SymFunc, d: int) -> SymFunc:
    """Inverse of :func:`inflate`; every power-sum part must be divisible by d."""
    g = convert(f, "p")
    if f.degree % d:
        raise DomainError(f"degree {f.degree} not divisible by {d}")
    out = {}
    for la, c in g.terms.items():
        if any(k % d for k in la):
            raise DomainError(f"p{list(la)} has a part not divisible by {d}")
        out[tuple(k // d for k in la)] = c
    return convert(SymFunc("p", out, f.degree // d), f.basis)


# ---------------------------------------------------------------------------
# positivity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositivityReport:
    positive: bool
    witness: tuple | None = None  # (partition, power of t, coefficient)

    def __bool__(self):
        return self.positive


def positivity_report(f: SymFunc, basis: str) -> PositivityReport:
    g = convert(f, basis)
    for la, c in sorted(g.terms.items()):
        for power, x in coefficient_items(c):
            if x < 0:
                return PositivityReport(False, (la, power, x))
    return PositivityReport(True)


@dataclass(frozen=True)
class HAlternatingReport:
    holds: bool
    strict: bool  # every signed coefficient is nonzero
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def is_h_alternating(f: SymFunc) -> HAlternatingReport:
    """Whether (-1)^(n - l(la)) [h_la] f >= 0 for every partition la of n."""
    g = convert(f, "h")
    n = f.degree
    strict = True
    for la in partition_list(n):
        c = g.terms.get(la, 0)
        signed = c if (n - len(la)) % 2 == 0 else -c
        if not nonnegative(signed):
            return HAlternatingReport(False, False, (la, signed))
        if not signed:
            strict = False
    return HAlternatingReport(True, strict)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def coeff_to_json(c) -> dict:
    return {str(k): str(v) for k, v in coefficient_items(c)}


def coeff_from_json(d: dict):
    poly = TPoly.from_dict({int(k): Fraction(v) for k, v in d.items()})
    return poly.constant() if poly.is_constant() else poly


def to_json(f: SymFunc) -> dict:
    return {
        "basis": f.basis,
        "degree": f.degree,
        "terms": [{"partition": list(la), "coeff": coeff_to_json(c)} for la, c in f.items()],
    }


def from_json(d: dict) -> SymFunc:
    terms = {tuple(t["partition"]): coeff_from_json(t["coeff"]) for t in d["terms"]}
    return SymFunc(d["basis"], terms, d["degree"])
