"""Hopf algebras of permutations, posets and graphs: product, coproduct,
global decomposition, characters and antipodes.

Elements of each algebra are formal integer combinations of the objects
in :mod:`hopfinv.objects`. The isomorphism-class quotient of the graph
algebra is handled by canonicalizing at the boundary.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import combinations

from .combinat import compositions, ordered_set_compositions
from .errors import DomainError, InvalidObjectError, ResourceError
from .graphs import (GraphClass, acyclic_orientations, canonical_graph, connected_partitions,
                     contract, flat_of_partition)
from .objects import (Graph, Permutation, Poset, incomparability_graph,
                      poset_of_permutation)

TAKEUCHI_MAX_N = 7
HM_MAX_N = 9

_EMPTY = {Permutation: Permutation(()), Poset: Poset(0, frozenset()), Graph: Graph(0, frozenset())}


def empty_like(x):
    return _EMPTY[type(x)]


class LinCombo:
    """Formal sum of hashable basis elements with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in dict(terms or {}).items() if v}

    def add(self, key, coeff=1) -> None:
        c = self.terms.get(key, 0) + coeff
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "LinCombo") -> "LinCombo":
        out = LinCombo(self.terms)
        for k, v in other.terms.items():
            out.add(k, v)
        return out

    def __eq__(self, other):
        return isinstance(other, LinCombo) and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, key) -> int:
        return self.terms.get(key, 0)

    def map_keys(self, fn) -> "LinCombo":
        out = LinCombo()
        for k, v in self.terms.items():
            out.add(fn(k), v)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in self.terms.items())


# ---------------------------------------------------------------------------
# product, coproduct, decomposition
# ---------------------------------------------------------------------------

def product(x, y):
    """Graded product: shifted concatenation / ordinal sum / disjoint union."""
    if type(x) is not type(y):
        raise DomainError(f"cannot multiply {type(x).__name__} by {type(y).__name__}")
    return x.shift_product(y)


def product_all(factors, like):
    return reduce(product, factors, empty_like(like))


def restrict(x, subset):
    return x.restrict(subset)


def coproduct_parts(x, a: int, b: int) -> LinCombo:
    """The (a, b) component of the coproduct: pairs of standardized
    restrictions over all A_1 with |A_1| = a."""
    if a < 0 or b < 0 or a + b != x.n:
        raise DomainError(f"({a}, {b}) does not split n = {x.n}")
    out = LinCombo()
    ground = range(1, x.n + 1)
    for first in combinations(ground, a):
        second = [v for v in ground if v not in first]
        out.add((x.restrict(first), x.restrict(second)))
    return out


def coproduct(x) -> LinCombo:
    out = LinCombo()
    for a in range(x.n + 1):
        out = out + coproduct_parts(x, a, x.n - a)
    return out


def iterated_coproduct(x, sizes) -> LinCombo:
    """Delta_alpha(x): tensors of restrictions to ordered set compositions."""
    out = LinCombo()
    for blocks in ordered_set_compositions(x.n, sizes):
        out.add(tuple(x.restrict(b) for b in blocks))
    return out


def global_decomposition(x) -> list:
    """Unique factorization into indecomposables (split at every global
    split point)."""
    if x.n == 0:
        return []
    cuts = [0] + x.split_points() + [x.n]
    return [x.restrict(range(cuts[i] + 1, cuts[i + 1] + 1)) for i in range(len(cuts) - 1)]


def is_indecomposable(x) -> bool:
    return x.n > 0 and not x.split_points()


def perm_to_poset(alpha: Permutation) -> Poset:
    return poset_of_permutation(alpha)


def poset_to_graph(P: Poset) -> Graph:
    return incomparability_graph(P)


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """Multiplicative character.

    kind "gamma": 1 on the l-fold product of the generator, 0 elsewhere.
    kind "A": graphs only; 1 iff every connected component is isomorphic
    to a member of ``classes``.
    """

    kind: str
    generator: object = None
    classes: frozenset = frozenset()
    name: str = ""

    def __post_init__(self):
        if self.kind == "gamma":
            if not is_indecomposable(self.generator):
                raise InvalidObjectError(f"{self.generator} is not indecomposable")
        elif self.kind == "A":
            cl = frozenset(c if isinstance(c, GraphClass) else canonical_graph(c) for c in self.classes)
            for c in cl:
                if not c.canonical.is_connected() or c.n == 0:
                    raise InvalidObjectError(f"{c} is not a connected graph")
            object.__setattr__(self, "classes", cl)
        else:
            raise DomainError(f"unknown character kind {self.kind!r}")

    @property
    def ident(self) -> str:
        if self.name:
            return self.name
        if self.kind == "gamma":
            return f"gamma:{type(self.generator).__name__}:{_compact(self.generator.encode())}"
        return "A:" + ";".join(_compact(c.encode()) for c in sorted(self.classes))

    def homogeneous_degree(self):
        """Common vertex count d of the members of A, or None."""
        sizes = {c.n for c in self.classes}
        return sizes.pop() if len(sizes) == 1 else None

    def __call__(self, x) -> int:
        return character_eval(self, x)


def _compact(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def zeta_gamma(generator, name: str = "") -> Character:
    return Character("gamma", generator=generator, name=name)


def zeta_one(kind=Graph) -> Character:
    """The character that is 1 exactly on powers of the one-element object."""
    gen = {Permutation: Permutation((1,)), Poset: Poset(1, frozenset()), Graph: Graph(1, frozenset())}[kind]
    return zeta_gamma(gen, name="zeta1")


def zeta_21() -> Character:
    return zeta_gamma(Permutation((2, 1)), name="zeta21")


def zeta_A(classes, name: str = "") -> Character:
    return Character("A", classes=frozenset(classes), name=name)


def zeta_edge() -> Character:
    """zeta_A with A = {K_2}: 1 iff the graph is a perfect matching."""
    return zeta_A([Graph.complete(2)], name="zeta_edge")


def character_eval(z: Character, x) -> int:
    if z.kind == "A":
        if not isinstance(x, Graph):
            raise DomainError("zeta_A is defined on graphs only")
        for comp in x.components():
            if canonical_graph(x.restrict(comp)) not in z.classes:
                return 0
        return 1
    gen = z.generator
    if type(x) is not type(gen):
        raise DomainError(f"character on {type(gen).__name__} applied to {type(x).__name__}")
    if x.n == 0:
        return 1
    if x.n % gen.n:
        return 0
    return int(all(f == gen for f in global_decomposition(x)))


# ---------------------------------------------------------------------------
# antipodes
# ---------------------------------------------------------------------------

def set_guards(takeuchi: int | None = None, hm: int | None = None) -> None:
    global TAKEUCHI_MAX_N, HM_MAX_N
    if takeuchi is not None:
        TAKEUCHI_MAX_N = takeuchi
    if hm is not None:
        HM_MAX_N = hm


def antipode_takeuchi(x) -> LinCombo:
    """S(x) = sum over compositions alpha of (-1)^l(alpha) m_alpha Delta_alpha(x)."""
    if x.n > TAKEUCHI_MAX_N:
        raise ResourceError(f"Takeuchi antipode limited to n <= {TAKEUCHI_MAX_N}, got {x.n}")
    out = LinCombo()
    if x.n == 0:
        out.add(x)
        return out
    for alpha in compositions(x.n):
        sign = -1 if len(alpha) % 2 else 1
        for blocks in ordered_set_compositions(x.n, alpha):
            out.add(product_all((x.restrict(b) for b in blocks), x), sign)
    return out


def project_to_classes(combo: LinCombo) -> LinCombo:
    return combo.map_keys(canonical_graph)


def antipode_graphs_hm(g: Graph) -> LinCombo:
    """Antipode on isomorphism classes as a sum over flats F of
    (-1)^c(F) a(g/F) [(V, F)], c(F) the number of components of (V, F)."""
    if g.n > HM_MAX_N:
        raise ResourceError(f"flat-sum antipode limited to n <= {HM_MAX_N}, got {g.n}")
    out = LinCombo()
    for part in connected_partitions(g):
        F = flat_of_partition(g, part)
        sign = -1 if len(part) % 2 else 1
        out.add(canonical_graph(Graph(g.n, F)), sign * acyclic_orientations(contract(g, part)))
    return out


def antipode_check(x) -> bool:
    """m (S x Id) Delta (x) = 0 for n >= 1."""
    total = Counter()
    for a in range(x.n + 1):
        for (left, right), c in coproduct_parts(x, a, x.n - a).items():
            for y, d in antipode_takeuchi(left).items():
                total[product(y, right)] += c * d
    return all(v == 0 for v in total.values()) if x.n else True
