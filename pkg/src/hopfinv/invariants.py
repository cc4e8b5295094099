"""Symmetric-function invariants of characters on the Hopf algebras of
permutations, posets and graphs, plus the chromatic polynomial family.

Several routes compute the same invariant; the tests compare them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .combinat import partition_type, set_partitions, sort_partition
from .errors import ConsistencyError, DomainError, NotSymmetricError, ResourceError
from .graphs import (acyclic_orientations, canonical_graph, connected_partitions, contract,
                     flat_of_partition, is_connected_on, partitions_into_classes,
                     perfect_matchings)
from .hopf import Character, character_eval
from .objects import Graph, Permutation, permutation_graph
from .qsym import QSymFunc, phi_t, qsym_to_sym
from .symfunc import SymFunc, inflate, omega, positivity_report
from .tpoly import TPoly

PSI_MAX_N = 8
SUBSET_MAX_N = 12


def set_psi_max_n(n: int) -> None:
    global PSI_MAX_N
    PSI_MAX_N = n


# ---------------------------------------------------------------------------
# the universal morphism
# ---------------------------------------------------------------------------

def zeta_compositions(z: Character, x) -> dict:
    """{alpha: zeta_alpha(x)} where zeta_alpha(x) sums, over ordered set
    compositions (A_1, ..., A_l) with |A_i| = alpha_i, the product of
    zeta on the standardized restrictions.

    Dynamic programming over subsets: blocks with zeta = 0 are never
    extended, which prunes most of the sweep.
    """
    n = x.n
    full = (1 << n) - 1
    value = [0] * (full + 1)
    for mask in range(1, full + 1):
        subset = [i + 1 for i in range(n) if mask >> i & 1]
        value[mask] = character_eval(z, x.restrict(subset))
    table: dict = {0: {(): 1}}

    def solve(mask: int) -> dict:
        if mask in table:
            return table[mask]
        out: dict = {}
        sub = mask
        while sub:
            v = value[sub]
            if v:
                size = bin(sub).count("1")
                for alpha, c in solve(mask & ~sub).items():
                    key = (size,) + alpha
                    out[key] = out.get(key, 0) + v * c
            sub = (sub - 1) & mask
        table[mask] = {k: c for k, c in out.items() if c}
        return table[mask]

    return solve(full)


def psi_qsym(z: Character, x) -> QSymFunc:
    """Sum over compositions alpha of zeta_alpha(x) M_alpha."""
    if x.n > PSI_MAX_N:
        raise ResourceError(f"psi limited to n <= {PSI_MAX_N}, got {x.n}")
    return QSymFunc("M", zeta_compositions(z, x), x.n)


def psi(z: Character, x) -> SymFunc:
    """The invariant as a symmetric function in the m basis."""
    try:
        return qsym_to_sym(psi_qsym(z, x))
    except NotSymmetricError as exc:
        raise ConsistencyError(f"invariant of {x} is not symmetric: {exc}") from exc


# ---------------------------------------------------------------------------
# chromatic symmetric function: subset and bond-lattice routes
# ---------------------------------------------------------------------------

def csf_subset_expansion(g) -> SymFunc:
    """Sum over edge subsets S of (-1)^|S| p_{type of components of (V, S)}.
    Works for graphs and hypergraphs."""
    if g.n > SUBSET_MAX_N:
        raise ResourceError(f"subset expansion limited to n <= {SUBSET_MAX_N}")
    edges = sorted(g.edges)
    terms: dict = {}

    def rec(i: int, parent: tuple, sign: int):
        if i == len(edges):
            roots: dict = {}
            for v in range(g.n):
                r = _find(parent, v)
                roots[r] = roots.get(r, 0) + 1
            la = sort_partition(roots.values())
            terms[la] = terms.get(la, 0) + sign
            return
        rec(i + 1, parent, sign)
        merged = list(parent)
        root = _find(merged, edges[i][0] - 1)
        for v in edges[i][1:]:
            r = _find(merged, v - 1)
            if r != root:
                merged[r] = root
        rec(i + 1, tuple(merged), -sign)

    rec(0, tuple(range(g.n)), 1)
    return SymFunc("p", terms, g.n)


def _find(parent, v):
    while parent[v] != v:
        v = parent[v]
    return v


@dataclass
class BondLattice:
    graph: Graph
    elements: list  # connected set partitions, tuples of sorted tuples
    mobius: dict = field(default_factory=dict)  # element -> mu(bottom, element)

    @property
    def bottom(self):
        return tuple((v,) for v in range(1, self.graph.n + 1))


def _block_mobius(g: Graph):
    """mu(bottom, block) for the bond lattice restricted to a block,
    computed bottom-up: mu(B) = -sum over proper connected partitions Q of
    B of the product of mu over the blocks of Q."""

    @lru_cache(maxsize=None)
    def mu(block: tuple) -> int:
        if len(block) == 1:
            return 1
        total = 0
        for part in connected_partitions(g, block):
            if len(part) > 1:
                prod_ = 1
                for b in part:
                    prod_ *= mu(b)
                total += prod_
        return -total

    return mu


def bond_lattice(g: Graph) -> BondLattice:
    if g.n > 9:
        raise ResourceError(f"bond lattice limited to n <= 9, got {g.n}")
    mu = _block_mobius(g)
    elements = list(connected_partitions(g))
    lat = BondLattice(g, elements)
    for Q in elements:
        val = 1
        for b in Q:
            val *= mu(b)
        lat.mobius[Q] = val
    return lat


def mobius_generic(elements, leq) -> dict:
    """mu(bottom, x) for a finite poset with a unique minimum, by the
    defining recursion. Independent of the block factorization above."""
    order = sorted(elements, key=lambda x: sum(1 for y in elements if leq(y, x)))
    bottom = order[0]
    mu: dict = {}
    for x in order:
        if x == bottom:
            mu[x] = 1
        else:
            mu[x] = -sum(mu[y] for y in mu if y != x and leq(y, x))
    return mu


def refines_partition(fine, coarse) -> bool:
    where = {v: i for i, b in enumerate(coarse) for v in b}
    return all(len({where[v] for v in b}) == 1 for b in fine)


def csf_bond(g: Graph) -> SymFunc:
    """Sum over the bond lattice of mu(bottom, Q) p_{type Q}."""
    lat = bond_lattice(g)
    terms: dict = {}
    for Q, mu in lat.mobius.items():
        la = partition_type(Q)
        terms[la] = terms.get(la, 0) + mu
    return SymFunc("p", terms, g.n)


@lru_cache(maxsize=4096)
def _csf_of_class(cls) -> SymFunc:
    return csf_bond(cls.canonical)


def csf(g: Graph) -> SymFunc:
    """Chromatic symmetric function in the p basis (cached per isomorphism class)."""
    if g.n <= 10:
        return _csf_of_class(canonical_graph(g))
    return csf_bond(g)


# ---------------------------------------------------------------------------
# the matching invariant
# ---------------------------------------------------------------------------

@dataclass
class DDBondPoset:
    graph: Graph
    elements: list
    nu: dict = field(default_factory=dict)

    def minimal_elements(self) -> list:
        return [K for K in self.elements if all(len(b) == 2 for b in K)]


def _has_perfect_matching(g: Graph, block) -> bool:
    return next(perfect_matchings(g.restrict(block)), None) is not None


def dd_bond_poset(g: Graph) -> DDBondPoset:
    """Set partitions coarsening a perfect matching with connected blocks;
    nu is 1 on perfect matchings and sums to zero below every other element."""
    if g.n % 2:
        return DDBondPoset(g, [])

    @lru_cache(maxsize=None)
    def good(block: tuple) -> bool:
        return len(block) % 2 == 0 and is_connected_on(g, block) and _has_perfect_matching(g, block)

    @lru_cache(maxsize=None)
    def nu_block(block: tuple) -> int:
        if len(block) == 2:
            return 1
        total = 0
        for part in set_partitions(block):
            if len(part) > 1 and all(good(b) for b in part):
                prod_ = 1
                for b in part:
                    prod_ *= nu_block(b)
                total += prod_
        return -total

    poset = DDBondPoset(g, [])
    for K in set_partitions(range(1, g.n + 1)):
        if all(good(b) for b in K):
            poset.elements.append(K)
            val = 1
            for b in K:
                val *= nu_block(b)
            poset.nu[K] = val
    return poset


def psi_dd_bond(g: Graph) -> SymFunc:
    poset = dd_bond_poset(g)
    terms: dict = {}
    for K, v in poset.nu.items():
        la = partition_type(K)
        terms[la] = terms.get(la, 0) + v
    return SymFunc("p", terms, g.n)


def psi_dd_matchings(g: Graph) -> SymFunc:
    """Sum over perfect matchings pi of csf(g contracted along pi)(x^2)."""
    total = SymFunc.zero(g.n, "p")
    if g.n % 2:
        return total
    for matching in perfect_matchings(g):
        total = total + inflate(csf(contract(g, matching)), 2)
    return total


def matching_contractions(g: Graph) -> list:
    return [contract(g, m) for m in perfect_matchings(g)]


def psi_21_contraction(alpha: Permutation) -> SymFunc:
    """The invariant of zeta_21 on a permutation via contractions of its
    inversion graph."""
    return psi_dd_matchings(permutation_graph(alpha))


def deflated_psi_21(alpha: Permutation) -> SymFunc:
    """Sum of csf over matching contractions: psi_21 with x^2 -> x."""
    g = permutation_graph(alpha)
    total = SymFunc.zero(g.n // 2, "p")
    for h in matching_contractions(g):
        total = total + csf(h)
    return total


# ---------------------------------------------------------------------------
# zeta_A via partitions into members of A
# ---------------------------------------------------------------------------

def _homogeneous_degree(z: Character) -> int:
    if z.kind != "A":
        raise DomainError("expected a zeta_A character")
    d = z.homogeneous_degree()
    if d is None:
        raise DomainError("members of A do not all have the same vertex count")
    return d


def enumerate_pi_A(z: Character, g: Graph):
    """Set partitions of V all of whose induced blocks lie in A."""
    d = _homogeneous_degree(z)
    yield from partitions_into_classes(g, z.classes, d)


def psi_hom(z: Character, g: Graph) -> SymFunc:
    """Sum over pi in Pi_A(g) of csf(g contracted along pi)(x^d)."""
    if g.n > 10:
        raise ResourceError(f"psi_hom limited to n <= 10, got {g.n}")
    d = _homogeneous_degree(z)
    total = SymFunc.zero(g.n, "p")
    for pi in enumerate_pi_A(z, g):
        total = total + inflate(csf(contract(g, pi)), d)
    return total


# ---------------------------------------------------------------------------
# chromatic polynomials and the checks built on them
# ---------------------------------------------------------------------------

def chromatic_polynomial(z: Character, g) -> TPoly:
    return phi_t(psi_qsym(z, g))


def chromatic_polynomial_by_coloring(g: Graph) -> TPoly:
    """Proper colourings counted for k = 0..n and interpolated (oracle)."""
    points = [(k, _count_colorings(g, k)) for k in range(g.n + 1)]
    return _interpolate(points)


def _count_colorings(g: Graph, k: int) -> int:
    adj = g.adjacency()
    colors = [0] * (g.n + 1)

    def rec(v: int) -> int:
        if v > g.n:
            return 1
        total = 0
        for c in range(1, k + 1):
            if all(colors[u] != c for u in adj[v] if u < v):
                colors[v] = c
                total += rec(v + 1)
        colors[v] = 0
        return total

    return rec(1)


def _interpolate(points) -> TPoly:
    """Lagrange interpolation over the rationals."""
    total = TPoly()
    for i, (xi, yi) in enumerate(points):
        term = TPoly((yi,))
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * TPoly((Fraction(-xj, xi - xj), Fraction(1, xi - xj)))
        total = total + term
    return total


@dataclass(frozen=True)
class ReciprocityReport:
    k: int | None
    lhs: Fraction  # (-1)^k chi(-1)
    rhs: int  # sum of a(g/F) over the flats covering by A
    ok: bool


def covering_flats(z: Character, g: Graph) -> list:
    """Flats F whose spanning graph (V, F) has every component in A."""
    out = []
    for part in connected_partitions(g):
        F = flat_of_partition(g, part)
        if all(canonical_graph(g.restrict(b)) in z.classes for b in part):
            out.append((part, F))
    return out


def reciprocity_check(z: Character, g: Graph) -> ReciprocityReport:
    """(-1)^k chi_{g, zeta_A}(-1) against the sum of a(g/F) over flats F
    with every component of (V, F) in A; k = n/d."""
    d = _homogeneous_degree(z)
    value = chromatic_polynomial(z, g)(-1)
    rhs = sum(acyclic_orientations(contract(g, part)) for part, _ in covering_flats(z, g))
    if g.n % d:
        return ReciprocityReport(None, value, rhs, value == 0 and rhs == 0)
    k = g.n // d
    lhs = value if k % 2 == 0 else -value
    return ReciprocityReport(k, lhs, rhs, lhs == rhs)


def hom_omega_check(z: Character, g: Graph) -> bool:
    """(-1)^(n-k) omega(psi_A(g)) is p-positive."""
    d = _homogeneous_degree(z)
    f = psi_hom(z, g)
    if g.n % d:
        return not f.terms
    sign = -1 if (g.n - g.n // d) % 2 else 1
    return positivity_report(omega(f) * sign, "p").positive


def whitney_alternation_check(z: Character, g) -> bool:
    """(-1)^deg chi(-t) has nonnegative coefficients."""
    chi = chromatic_polynomial(z, g)
    if not chi:
        return True
    flipped = chi.substitute_neg() * (-1 if chi.degree % 2 else 1)
    return all(c >= 0 for c in flipped.coeffs)


def logconcavity_check(z: Character, g) -> bool:
    """a_i^2 >= a_(i-1) a_(i+1) on absolute coefficients between the first
    and last nonzero ones. Empirical: failures are data, not errors."""
    chi = chromatic_polynomial(z, g)
    coeffs = [abs(c) for c in chi.coeffs]
    nz = [i for i, c in enumerate(coeffs) if c]
    if not nz:
        return True
    a = coeffs[nz[0]:nz[-1] + 1]
    return all(a[i] ** 2 >= a[i - 1] * a[i + 1] for i in range(1, len(a) - 1))


def eval_at(poly: TPoly, x) -> Fraction:
    return poly(Fraction(x))
