"""Quasisymmetric functions in the monomial (M) and fundamental (F) bases,
plus the principal specialization and a truncated-variable expansion."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .combinat import refinements, sort_partition
from .errors import DomainError, NotSymmetricError
from .symfunc import SymFunc, convert
from .tpoly import TPoly

QBASES = ("M", "F")


class QSymFunc:
    """Homogeneous quasisymmetric function in the M or F basis."""

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis: str, terms: dict | None = None, degree: int | None = None):
        if basis not in QBASES:
            raise DomainError(f"unknown basis {basis!r}")
        terms = {tuple(k): v for k, v in (terms or {}).items() if v}
        degrees = {sum(k) for k in terms}
        if len(degrees) > 1:
            raise DomainError(f"inhomogeneous terms of degrees {sorted(degrees)}")
        if degrees:
            degree = degrees.pop()
        if degree is None:
            raise DomainError("degree of the zero function must be given")
        self.basis = basis
        self.degree = degree
        self.terms = terms

    def coeff(self, alpha):
        return self.terms.get(tuple(alpha), 0)

    def items(self):
        return sorted(self.terms.items())

    def to(self, basis: str) -> "QSymFunc":
        if basis == self.basis:
            return self
        out: dict = {}
        if basis == "M":
            for alpha, c in self.terms.items():
                for beta in refinements(alpha):
                    out[beta] = out.get(beta, 0) + c
        else:
            # M_a = sum over refinements b of a of (-1)^(l(b)-l(a)) F_b
            for alpha, c in self.terms.items():
                for beta in refinements(alpha):
                    sign = -1 if (len(beta) - len(alpha)) % 2 else 1
                    out[beta] = out.get(beta, 0) + sign * c
        return QSymFunc(basis, out, self.degree)

    def __add__(self, other):
        if not isinstance(other, QSymFunc):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.to(self.basis).terms.items():
            out[k] = out.get(k, 0) + v
        return QSymFunc(self.basis, out, self.degree if self.terms else other.degree)

    def __neg__(self):
        return QSymFunc(self.basis, {k: -v for k, v in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QSymFunc):
            return qsym_product(self, other)
        return QSymFunc(self.basis, {k: v * other for k, v in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSymFunc):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.to(self.basis).terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{self.basis}{list(a)}" for a, c in self.items())


def M(*alpha):
    return QSymFunc("M", {tuple(alpha): 1}, sum(alpha))


def F(*alpha):
    return QSymFunc("F", {tuple(alpha): 1}, sum(alpha))


def _quasi_shuffles(a: tuple, b: tuple):
    if not a:
        yield b
        return
    if not b:
        yield a
        return
    for rest in _quasi_shuffles(a[1:], b):
        yield (a[0],) + rest
    for rest in _quasi_shuffles(a, b[1:]):
        yield (b[0],) + rest
    for rest in _quasi_shuffles(a[1:], b[1:]):
        yield (a[0] + b[0],) + rest


def qsym_product(f: QSymFunc, g: QSymFunc) -> QSymFunc:
    """Product via the quasi-shuffle rule on the M basis; returned in M."""
    out: dict = {}
    for a, c in f.to("M").terms.items():
        for b, d in g.to("M").terms.items():
            for w in _quasi_shuffles(a, b):
                out[w] = out.get(w, 0) + c * d
    return QSymFunc("M", out, f.degree + g.degree)


def phi_t(q: QSymFunc) -> TPoly:
    """Principal specialization M_a -> binomial(t, l(a))."""
    total = TPoly()
    for alpha, c in q.to("M").terms.items():
        total = total + TPoly.binomial(len(alpha)) * c
    return total


def qsym_to_sym(q: QSymFunc) -> SymFunc:
    """The m-expansion of a symmetric q; raises if q is not symmetric."""
    q = q.to("M")
    seen: dict = {}
    for alpha, c in q.terms.items():
        la = sort_partition(alpha)
        if la in seen and seen[la][1] != c:
            raise NotSymmetricError(f"M{list(seen[la][0])} and M{list(alpha)} differ",
                                    (seen[la][0], alpha))
        seen.setdefault(la, (alpha, c))
    for la, (alpha, c) in seen.items():
        for beta in set(_rearrangements(la)):
            if beta not in q.terms:
                raise NotSymmetricError(f"M{list(alpha)} present but M{list(beta)} absent",
                                        (alpha, beta))
    return SymFunc("m", {la: c for la, (alpha, c) in seen.items()}, q.degree)


def sym_to_qsym(f: SymFunc) -> QSymFunc:
    g = convert(f, "m")
    out = {}
    for la, c in g.terms.items():
        for alpha in _rearrangements(la):
            out[alpha] = c
    return QSymFunc("M", out, f.degree)


def _rearrangements(seq: tuple):
    """Distinct permutations of a sequence."""
    counts: dict = {}
    for x in seq:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)

    def rec(left):
        if left == 0:
            yield ()
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                for rest in rec(left - 1):
                    yield (k,) + rest
                counts[k] += 1

    yield from rec(len(seq))


def expand_monomials(f, nvars: int) -> dict:
    """Polynomial in x_1..x_nvars as {exponent tuple: coefficient}."""
    if nvars < 1:
        raise DomainError("need at least one variable")
    q = sym_to_qsym(f) if isinstance(f, SymFunc) else f.to("M")
    out: dict = {}
    for alpha, c in q.terms.items():
        if len(alpha) > nvars:
            continue
        for pos in combinations(range(nvars), len(alpha)):
            expo = [0] * nvars
            for i, a in zip(pos, alpha):
                expo[i] = a
            key = tuple(expo)
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def principal_specialization(f, k: int):
    """f(1, ..., 1, 0, 0, ...) with k ones, summed from the k-variable expansion."""
    if k == 0:
        return Fraction(0) if f.degree else sum(f.terms.values(), Fraction(0))
    return sum(expand_monomials(f, k).values(), Fraction(0))


def from_monomials(poly: dict, degree: int) -> QSymFunc:
    """Read M-coefficients off the packed monomials x_1^a1 ... x_l^al of a
    truncated quasisymmetric polynomial (exact when nvars >= degree)."""
    out = {}
    for expo, c in poly.items():
        support = [x for x in expo if x]
        if list(expo[:len(support)]) == support:
            out[tuple(support)] = c
    return QSymFunc("M", out, degree)

