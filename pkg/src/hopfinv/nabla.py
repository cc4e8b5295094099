"""The nabla operator specialized at q = 1.

At q = 1 nabla is multiplicative, so it is fixed by its values on h_n.
Two routes are provided:

* route A: h_n -> (-1)^(n-1) * sum over prime Dyck paths of t^area e_type,
  extended multiplicatively;
* route B: h_la -> (-1)^(|la| - l(la)) * sum over parking functions with
  comp = la of t^area F_ides (the compositional shuffle sum at q = 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .combinat import (compositions, dyck_paths, dyck_paths_refining, f_lambda, partition_list,
                       parking_functions, prime_dyck_paths, sort_partition)
from .errors import DomainError, ResourceError
from .graphs import acyclic_orientations
from .invariants import bond_lattice, csf
from .objects import Graph
from .qsym import QSymFunc, qsym_to_sym
from .symfunc import SymFunc, convert, h
from .tpoly import TPoly

NABLA_MAX_DEGREE = 9
PF_MAX_DEGREE = 8

_T = TPoly.t()


def c_alpha_q1(alpha) -> SymFunc:
    """(C_alpha 1) at q = 1: the signed product (-1)^(|alpha| - l(alpha)) h_alpha."""
    alpha = tuple(alpha)
    n = sum(alpha)
    sign = -1 if (n - len(alpha)) % 2 else 1
    return SymFunc("h", {sort_partition(alpha): sign}, n)


def nabla_q1_hook(k: int, n: int) -> SymFunc:
    """nabla(s_{k 1^(n-k)}) at q = 1, as a signed sum over Dyck paths of
    size n whose first diagonal return is at least k."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    sign = -1 if (k - 1) % 2 else 1
    terms: dict = {}
    for d in dyck_paths(n):
        if d.comp()[0] >= k:
            key = d.type()
            terms[key] = terms.get(key, 0) + TPoly.monomial(d.area(), sign)
    return SymFunc("e", terms, n)


@lru_cache(maxsize=None)
def _nabla_h_single(n: int) -> dict:
    """e-expansion of nabla(h_n) at q = 1 from prime Dyck paths."""
    sign = -1 if (n - 1) % 2 else 1
    terms: dict = {}
    for d in prime_dyck_paths(n):
        key = d.type()
        terms[key] = terms.get(key, 0) + TPoly.monomial(d.area(), sign)
    return {k: v for k, v in terms.items() if v}


@lru_cache(maxsize=None)
def _nabla_h(la: tuple) -> dict:
    """e-expansion of nabla(h_la) at q = 1 by multiplicativity."""
    out = {(): TPoly((1,))}
    for part in la:
        nxt: dict = {}
        for mu, c in out.items():
            for nu, d in _nabla_h_single(part).items():
                key = sort_partition(mu + nu)
                nxt[key] = nxt.get(key, 0) + c * d
        out = {k: v for k, v in nxt.items() if v}
    return out


@dataclass
class NablaResult:
    input: SymFunc
    schur_coeffs: dict = field(default_factory=dict)  # la -> TPoly
    e_coeffs: dict = field(default_factory=dict)
    route: str = "A"

    def as_e(self) -> SymFunc:
        return SymFunc("e", self.e_coeffs, self.input.degree)

    def as_s(self) -> SymFunc:
        return SymFunc("s", self.schur_coeffs, self.input.degree)


def _as_tpoly(c) -> TPoly:
    return c if isinstance(c, TPoly) else TPoly((c,))


def nabla_q1_e(f: SymFunc) -> SymFunc:
    """Route A image of f, in the e basis."""
    n = f.degree
    if n > NABLA_MAX_DEGREE:
        raise ResourceError(f"nabla limited to degree <= {NABLA_MAX_DEGREE}, got {n}")
    terms: dict = {}
    for la, c in convert(f, "h").terms.items():
        for mu, d in _nabla_h(la).items():
            terms[mu] = terms.get(mu, 0) + d * c
    return SymFunc("e", terms, n)


def nabla_q1(f: SymFunc) -> NablaResult:
    """Route A with both the Schur and e expansions of the image."""
    image = nabla_q1_e(f)
    schur = convert(image, "s")
    return NablaResult(
        input=f,
        schur_coeffs={la: _as_tpoly(c) for la, c in schur.terms.items()},
        e_coeffs={la: _as_tpoly(c) for la, c in image.terms.items()},
        route="A",
    )


def nabla_q1_h_via_pf_composition(alpha) -> SymFunc:
    """Route B for a composition: the signed parking-function sum with
    comp(PF) = alpha, returned in the m basis."""
    alpha = tuple(alpha)
    n = sum(alpha)
    if n > PF_MAX_DEGREE:
        raise ResourceError(f"parking-function route limited to degree <= {PF_MAX_DEGREE}")
    sign = -1 if (n - len(alpha)) % 2 else 1
    terms: dict = {}
    for pf in parking_functions(n, alpha):
        key = pf.ides()
        terms[key] = terms.get(key, 0) + TPoly.monomial(pf.area(), sign)
    q = QSymFunc("F", terms, n)
    return qsym_to_sym(q.to("M"))


def nabla_q1_h_via_pf(la) -> SymFunc:
    """Route B on h_la, using la (sorted decreasing) as the composition."""
    return nabla_q1_h_via_pf_composition(sort_partition(la))


def route_agreement(la) -> bool:
    return nabla_q1_h_via_pf(la) == nabla_q1_e(h(*la))


def composition_order_independent(la) -> bool:
    """All rearrangements of la give the same route-B sum."""
    first = nabla_q1_h_via_pf(la)
    return all(nabla_q1_h_via_pf_composition(r) == first for r in set(permutations(la)))


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

def sum_c_alpha(n: int) -> SymFunc:
    total = SymFunc.zero(n, "h")
    for alpha in compositions(n):
        total = total + c_alpha_q1(alpha)
    return total


def sum_c_alpha_check(n: int) -> bool:
    """The sum over compositions of (C_alpha 1) at q = 1 equals e_n."""
    return sum_c_alpha(n) == SymFunc("e", {(n,): 1}, n)


def pn_identity_check(n: int) -> bool:
    """(-1)^(n-1) p_n = sum over compositions alpha of alpha_1 (C_alpha 1) at q = 1,
    compared in the m basis."""
    if n > 10:
        raise ResourceError("pn identity check limited to n <= 10")
    rhs = SymFunc.zero(n, "h")
    for alpha in compositions(n):
        rhs = rhs + c_alpha_q1(alpha) * alpha[0]
    lhs = SymFunc("p", {(n,): -1 if (n - 1) % 2 else 1}, n)
    return convert(lhs, "m") == convert(rhs, "m")


def pn_e_alternation_check(n: int) -> bool:
    """(-1)^(n - l(mu)) [e_mu] p_n > 0 for every mu."""
    f = convert(SymFunc("p", {(n,): 1}, n), "e")
    for mu in partition_list(n):
        c = f.coeff(mu)
        if not (c if (n - len(mu)) % 2 == 0 else -c) > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# coefficient information for chromatic symmetric functions
# ---------------------------------------------------------------------------

@dataclass
class DLambdaReport:
    n: int
    acyclic: int
    constant_terms_ok: bool
    top_row_ok: bool
    column_ok: bool
    column_expected: TPoly
    column_found: TPoly
    note: str = ("the |mu(0, pi)| weight in the column formula is read as "
                 "|mu(bottom, Q)| for Q in the bond lattice")

    @property
    def ok(self) -> bool:
        return self.constant_terms_ok and self.top_row_ok and self.column_ok


def dlambda_column_formula(g: Graph) -> TPoly:
    """Sum over bonds Q and Dyck paths D refining type(Q) of
    a_{comp(D), type(Q)} |mu(bottom, Q)| t^area(D)."""
    total = TPoly()
    lat = bond_lattice(g)
    by_type: dict = {}
    for Q, mu in lat.mobius.items():
        la = sort_partition(len(b) for b in Q)
        by_type[la] = by_type.get(la, 0) + abs(mu)
    for la, weight in by_type.items():
        for d, a in dyck_paths_refining(la):
            total = total + TPoly.monomial(d.area(), a * weight)
    return total


def info_dlambda_checks(g: Graph) -> DLambdaReport:
    n = g.n
    if n > 7:
        raise ResourceError("coefficient checks limited to n <= 7")
    res = nabla_q1(csf(g))
    a = acyclic_orientations(g)
    d = {la: res.schur_coeffs.get(la, TPoly()) for la in partition_list(n)}
    constant_ok = all(d[la].constant() == a * f_lambda(la) for la in partition_list(n))
    top = d[(n,)]
    top_ok = top.is_constant() and top.constant() == a
    expected = dlambda_column_formula(g)
    found = d[(1,) * n]
    return DLambdaReport(n, a, constant_ok, top_ok, found == expected, expected, found)
