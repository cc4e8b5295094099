"""Graph utilities: canonical forms, flats, contraction, acyclic
orientations, perfect matchings and isomorphism-class enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .combinat import set_partitions
from .errors import DomainError, ResourceError
from .objects import Graph, components

CANONICAL_MAX_N = 10


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def _refined_colors(g: Graph) -> list:
    """Colour refinement started from degrees. Colours are ranks of
    signatures, so the result depends only on the isomorphism type."""
    adj = g.adjacency()
    colors = {v: len(adj[v]) for v in adj}
    while True:
        sig = {v: (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in adj}
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in adj}
        if len(set(new.values())) == len(set(colors.values())):
            return [new[v] for v in range(1, g.n + 1)]
        colors = new


@dataclass(frozen=True)
class GraphClass:
    """Isomorphism class, represented by its canonical labelled graph."""

    canonical: Graph

    @property
    def n(self) -> int:
        return self.canonical.n

    def encode(self) -> dict:
        return self.canonical.encode()

    def __lt__(self, other: "GraphClass") -> bool:
        return _sort_key(self.canonical) < _sort_key(other.canonical)

    def __str__(self):
        return f"[{self.canonical}]"


def _sort_key(g: Graph) -> tuple:
    return (g.n, len(g.edges), g.sorted_edges())


@lru_cache(maxsize=65536)
def _canonical_edges(n: int, edges: frozenset) -> tuple:
    g = Graph(n, edges)
    colors = _refined_colors(g)
    cells: dict = {}
    for v, c in enumerate(colors, start=1):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    best = None
    for choice in product(*(permutations(cell) for cell in ordered)):
        order = [v for block in choice for v in block]
        new_label = {v: i + 1 for i, v in enumerate(order)}
        key = tuple(sorted(
            (min(new_label[a], new_label[b]), max(new_label[a], new_label[b]))
            for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def canonical_graph(g: Graph) -> GraphClass:
    """Lexicographically least sorted edge list among relabellings that
    list the refined colour classes in order. Isomorphism invariant."""
    if g.n > CANONICAL_MAX_N:
        raise ResourceError(f"canonical form limited to n <= {CANONICAL_MAX_N}, got {g.n}")
    return GraphClass(Graph(g.n, frozenset(_canonical_edges(g.n, g.edges))))


def set_canonical_max_n(n: int) -> None:
    global CANONICAL_MAX_N
    CANONICAL_MAX_N = n


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and len(g.edges) == len(h.edges) and canonical_graph(g) == canonical_graph(h)


# ---------------------------------------------------------------------------
# connected partitions, flats, contraction
# ---------------------------------------------------------------------------

def is_connected_on(g: Graph, block) -> bool:
    block = tuple(block)
    if len(block) <= 1:
        return True
    return len(components(block, g.induced_edges(block))) == 1


def connected_partitions(g: Graph, vertices=None):
    """Set partitions of the vertex set whose blocks induce connected subgraphs."""
    vertices = tuple(range(1, g.n + 1)) if vertices is None else tuple(vertices)
    for part in set_partitions(vertices):
        if all(is_connected_on(g, b) for b in part):
            yield part


def flat_of_partition(g: Graph, part) -> frozenset:
    out = set()
    for b in part:
        out |= g.induced_edges(b)
    return frozenset(out)


def flats(g: Graph) -> list:
    """All flats, each a frozenset of edges. A flat is the set of edges
    induced by a connected partition, so flats and bonds correspond."""
    return [flat_of_partition(g, part) for part in connected_partitions(g)]


def is_flat(g: Graph, F) -> bool:
    F = frozenset(F)
    comp_of = {}
    for i, c in enumerate(components(range(1, g.n + 1), F)):
        for v in c:
            comp_of[v] = i
    return all(e in F or comp_of[e[0]] != comp_of[e[1]] for e in g.edges)


def contract(g: Graph, blocks) -> Graph:
    """Merge each block of a set partition of [n] to one vertex; loops are
    dropped and parallel edges merged. New vertices are numbered by
    increasing block minimum."""
    blocks = sorted(tuple(sorted(b)) for b in blocks)
    where = {v: i + 1 for i, b in enumerate(blocks) for v in b}
    if sorted(where) != list(range(1, g.n + 1)) or len(where) != sum(map(len, blocks)):
        raise DomainError(f"{blocks} is not a set partition of [1, {g.n}]")
    edges = {(min(where[a], where[b]), max(where[a], where[b]))
             for a, b in g.edges if where[a] != where[b]}
    return Graph(len(blocks), frozenset(edges))


def contract_edges(g: Graph, F) -> Graph:
    """g/F: contract every edge of F."""
    return contract(g, components(range(1, g.n + 1), F))


def spanning_subgraph(g: Graph, F) -> Graph:
    """The graph (V, F)."""
    return Graph(g.n, frozenset(F))


# ---------------------------------------------------------------------------
# acyclic orientations
# ---------------------------------------------------------------------------

def acyclic_orientations(g: Graph) -> int:
    """a(g) by inclusion-exclusion on the set of sources:
    a(G) = sum over nonempty independent S of (-1)^(|S|+1) a(G - S)."""
    n = g.n
    nbr = [0] * n
    for a, b in g.edges:
        nbr[a - 1] |= 1 << (b - 1)
        nbr[b - 1] |= 1 << (a - 1)

    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if mask == 0:
            return 1
        total = 0
        sub = mask
        while sub:
            independent = all(not (nbr[v] & sub) for v in range(n) if sub >> v & 1)
            if independent:
                sign = 1 if bin(sub).count("1") % 2 else -1
                total += sign * count(mask & ~sub)
            sub = (sub - 1) & mask
        return total

    return count((1 << n) - 1)


def acyclic_orientations_brute(g: Graph) -> int:
    """Direct enumeration of all 2^|E| orientations (small graphs only)."""
    edges = g.sorted_edges()
    total = 0
    for flips in product((False, True), repeat=len(edges)):
        arcs = [(b, a) if f else (a, b) for (a, b), f in zip(edges, flips)]
        if _is_acyclic(g.n, arcs):
            total += 1
    return total


def _is_acyclic(n: int, arcs) -> bool:
    indeg = [0] * (n + 1)
    out = {v: [] for v in range(1, n + 1)}
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


# ---------------------------------------------------------------------------
# matchings and partitions into isomorphic pieces
# ---------------------------------------------------------------------------

def perfect_matchings(g: Graph):
    """Perfect matchings as tuples of edges (i, j), ordered by i."""
    adj = g.adjacency()

    def rec(free: tuple):
        if not free:
            yield ()
            return
        v = free[0]
        for w in free[1:]:
            if w in adj[v]:
                rest = tuple(x for x in free if x != v and x != w)
                for tail in rec(rest):
                    yield ((v, w),) + tail

    if g.n % 2:
        return
    yield from rec(tuple(range(1, g.n + 1)))


def partitions_into_classes(g: Graph, classes, d: int):
    """Set partitions of [n] into blocks of size d whose induced subgraphs
    lie in ``classes`` (a set of GraphClass on d vertices)."""
    classes = frozenset(classes)
    if g.n % d:
        return

    def rec(free: tuple):
        if not free:
            yield ()
            return
        v = free[0]
        for others in combinations(free[1:], d - 1):
            block = (v,) + others
            if canonical_graph(g.restrict(block)) in classes:
                rest = tuple(x for x in free if x not in block)
                for tail in rec(rest):
                    yield (block,) + tail

    yield from rec(tuple(range(1, g.n + 1)))


def claw() -> Graph:
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def net() -> Graph:
    """Triangle with one pendant vertex attached at each corner."""
    return Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)])


def has_induced(g: Graph, pattern: Graph) -> bool:
    target = canonical_graph(pattern)
    return any(canonical_graph(g.restrict(sub)) == target
               for sub in combinations(range(1, g.n + 1), pattern.n))


def is_claw_free(g: Graph) -> bool:
    adj = g.adjacency()
    for v in adj:
        for a, b, c in combinations(sorted(adj[v]), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def graph_classes(n: int, connected_only: bool = False) -> tuple:
    """All isomorphism classes on n vertices (sorted), built by adding one
    vertex with every neighbourhood to each class on n - 1 vertices."""
    if n == 0:
        out = [GraphClass(Graph(0, frozenset()))]
    else:
        seen = set()
        for base in graph_classes(n - 1):
            g = base.canonical
            for k in range(n):
                for nbrs in combinations(range(1, n), k):
                    edges = g.edges | {(v, n) for v in nbrs}
                    seen.add(canonical_graph(Graph(n, frozenset(edges))))
        out = sorted(seen)
    if connected_only:
        out = [c for c in out if c.canonical.is_connected()]
    return tuple(out)


def all_labelled_graphs(n: int):
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))
