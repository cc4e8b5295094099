"""Family scanners: run a predicate over every object of a family.

Graphs are scanned up to isomorphism; posets are the naturally labelled
ones on [n]; permutations are all of S_n.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import DomainError
from .graphs import graph_classes, is_claw_free
from .hopf import zeta_one
from .invariants import csf, logconcavity_check, matching_contractions
from .objects import Graph, Permutation, Poset, incomparability_graph, permutation_graph
from .symfunc import SymFunc, is_h_alternating, omega, positivity_report

FAMILIES = ("graphs", "posets", "permutations")
PREDICATES = ("e-positive", "h-alternating", "omega-p-positive", "log-concave-chrom",
              "dd-e-positive-after-deflate")


def naturally_labelled_posets(n: int):
    """Strict orders on [n] contained in the usual order, i.e. transitively
    closed subsets of {(i, j) : i < j}."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        less = {p for k, p in enumerate(pairs) if bits >> k & 1}
        if all((a, d) in less for a, b in less for c, d in less if b == c):
            yield Poset(n, frozenset(less))


def family(name: str, n: int, up_to: bool = False):
    sizes = range(1, n + 1) if up_to else (n,)
    for k in sizes:
        if name == "graphs":
            for cls in graph_classes(k):
                yield cls.canonical
        elif name == "posets":
            yield from naturally_labelled_posets(k)
        elif name == "permutations":
            for w in permutations(range(1, k + 1)):
                yield Permutation(w)
        else:
            raise DomainError(f"unknown family {name!r}")


def underlying_graph(x) -> Graph:
    if isinstance(x, Graph):
        return x
    if isinstance(x, Poset):
        return incomparability_graph(x)
    return permutation_graph(x)


@dataclass(frozen=True)
class ScanTask:
    predicate: str
    require_claw: bool = False


def deflated_dd(g: Graph):
    """(sum of csf over perfect-matching contractions, list of contractions)."""
    contractions = matching_contractions(g)
    total = SymFunc.zero(g.n // 2, "p")
    for h in contractions:
        total = total + csf(h)
    return total, contractions


def verdict(task: ScanTask, x) -> bool:
    g = underlying_graph(x)
    if task.predicate == "e-positive":
        return positivity_report(csf(g), "e").positive
    if task.predicate == "h-alternating":
        return is_h_alternating(csf(g)).holds
    if task.predicate == "omega-p-positive":
        return positivity_report(omega(csf(g)), "p").positive
    if task.predicate == "log-concave-chrom":
        return logconcavity_check(zeta_one(Graph), g)
    if task.predicate == "dd-e-positive-after-deflate":
        if g.n % 2:
            return False
        total, contractions = deflated_dd(g)
        if not contractions:
            return False
        if task.require_claw and all(is_claw_free(h) for h in contractions):
            return False
        return positivity_report(total, "e").positive
    raise DomainError(f"unknown predicate {task.predicate!r}")


def _run_chunk(args):
    task, items = args
    return [verdict(task, x) for x in items]


def scan(name: str, n: int, task: ScanTask, jobs: int = 1, up_to: bool = False,
         chunk: int = 512):
    """Yield (object, verdict) in family order."""
    items = list(family(name, n, up_to))
    if jobs <= 1:
        for x in items:
            yield x, verdict(task, x)
        return
    chunks = [items[i:i + chunk] for i in range(0, len(items), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part, results in zip(chunks, pool.map(_run_chunk, [(task, c) for c in chunks])):
            yield from zip(part, results)


def encode(x):
    if isinstance(x, Permutation):
        return "".join(map(str, x.one_line)) if x.n <= 9 else x.encode()
    return x.encode()
