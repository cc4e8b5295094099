"""Univariate polynomials in t with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class TPoly:
    """Immutable polynomial sum_k coeffs[k] t^k over Q.

    Mixes freely with ``int`` and ``Fraction`` in arithmetic and equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "TPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "TPoly":
        return cls([0] * power + [coeff])

    @classmethod
    def from_dict(cls, d: dict) -> "TPoly":
        if not d:
            return cls()
        top = max(int(k) for k in d)
        cs = [0] * (top + 1)
        for k, v in d.items():
            cs[int(k)] = Fraction(v)
        return cls(cs)

    @classmethod
    def binomial(cls, k: int) -> "TPoly":
        """binomial(t, k) = t(t-1)...(t-k+1)/k!"""
        out = cls((1,))
        for i in range(k):
            out = out * cls((Fraction(-i, i + 1), Fraction(1, i + 1)))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def to_dict(self) -> dict:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeff(0)

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, TPoly) else TPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_neg(self) -> "TPoly":
        """p(-t)."""
        return TPoly([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Rational)):
            return TPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return TPoly([c * other for c in self.coeffs])
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms).replace("+ -", "- ")


def nonnegative(c) -> bool:
    """True if c (a rational or a TPoly) has no negative coefficient."""
    if isinstance(c, TPoly):
        return all(x >= 0 for x in c.coeffs)
    return c >= 0


def coefficient_items(c) -> list:
    """[(power, coefficient)] for a rational or TPoly coefficient."""
    if isinstance(c, TPoly):
        return sorted(c.to_dict().items())
    return [(0, Fraction(c))] if c else []
