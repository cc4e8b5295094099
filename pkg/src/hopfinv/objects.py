"""Labelled combinatorial objects on [n] = {1, ..., n}.

Each class supports the three operations the Hopf structures are built
from: ``restrict`` (restriction to a subset followed by standardization),
``shift_product`` (the graded product) and ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinat import standardize
from .errors import InvalidObjectError


def _ranks(subset) -> dict:
    return {v: i + 1 for i, v in enumerate(sorted(subset))}


@dataclass(frozen=True)
class Permutation:
    one_line: tuple

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise InvalidObjectError(f"{self.one_line} is not a permutation")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if text.startswith("["):
            import json
            return cls(tuple(json.loads(text)))
        if not text.isdigit() or len(text) > 9:
            raise InvalidObjectError(f"cannot read permutation {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def restrict(self, subset) -> "Permutation":
        """Standardized subsequence of the entries whose values lie in subset."""
        subset = set(subset)
        return Permutation(standardize([v for v in self.one_line if v in subset]))

    def shift_product(self, other: "Permutation") -> "Permutation":
        return Permutation(self.one_line + tuple(v + self.n for v in other.one_line))

    def split_points(self) -> list:
        """Global ascents i: every entry in positions <= i is smaller than
        every entry after i."""
        out, running_max = [], 0
        for i, v in enumerate(self.one_line[:-1], start=1):
            running_max = max(running_max, v)
            if running_max == i:
                out.append(i)
        return out

    def encode(self) -> list:
        return list(self.one_line)

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.one_line)) or "()"
        return str(list(self.one_line))


@dataclass(frozen=True)
class Poset:
    """Strict order on [n] given as the set of pairs (i, j) with i <_P j."""

    n: int
    less: frozenset

    def __post_init__(self):
        less = frozenset((int(a), int(b)) for a, b in self.less)
        object.__setattr__(self, "less", less)
        for a, b in less:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise InvalidObjectError(f"relation {(a, b)} outside [1, {self.n}]")
            if a == b:
                raise InvalidObjectError(f"reflexive pair {(a, b)} in strict order")
            if (b, a) in less:
                raise InvalidObjectError(f"pairs {(a, b)} and {(b, a)} violate antisymmetry")
        for a, b in less:
            for c, d in less:
                if b == c and (a, d) not in less:
                    raise InvalidObjectError(f"missing {(a, d)} for transitivity")

    @classmethod
    def from_relations(cls, n: int, pairs) -> "Poset":
        """Transitive closure of cover pairs; rejects cycles."""
        less = {(int(a), int(b)) for a, b in pairs}
        changed = True
        while changed:
            changed = False
            for a, b in list(less):
                for c, d in list(less):
                    if b == c and (a, d) not in less:
                        less.add((a, d))
                        changed = True
        if any(a == b for a, b in less):
            raise InvalidObjectError("relations contain a cycle")
        return cls(n, frozenset(less))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, frozenset())

    def lt(self, a: int, b: int) -> bool:
        return (a, b) in self.less

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.less or (b, a) in self.less

    def is_naturally_labeled(self) -> bool:
        return all(a < b for a, b in self.less)

    def restrict(self, subset) -> "Poset":
        r = _ranks(subset)
        return Poset(len(r), frozenset((r[a], r[b]) for a, b in self.less if a in r and b in r))

    def shift_product(self, other: "Poset") -> "Poset":
        a = self.n
        less = set(self.less)
        less |= {(x + a, y + a) for x, y in other.less}
        less |= {(i, j) for i in range(1, a + 1) for j in range(a + 1, a + other.n + 1)}
        return Poset(a + other.n, frozenset(less))

    def split_points(self) -> list:
        return [i for i in range(1, self.n)
                if all((x, y) in self.less
                       for x in range(1, i + 1) for y in range(i + 1, self.n + 1))]

    def cover_relations(self) -> list:
        return sorted((a, b) for a, b in self.less
                      if not any((a, c) in self.less and (c, b) in self.less
                                 for c in range(1, self.n + 1)))

    def encode(self) -> dict:
        return {"n": self.n, "relations": [list(x) for x in self.cover_relations()]}

    def __str__(self):
        return f"Poset(n={self.n}, covers={self.cover_relations()})"


def _norm_edge(a, b) -> tuple:
    a, b = int(a), int(b)
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Simple graph on [n]; edges are pairs (i, j) with i < j."""

    n: int
    edges: frozenset

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            e = tuple(e)
            if len(e) != 2:
                raise InvalidObjectError(f"edge {e} is not a pair")
            a, b = _norm_edge(*e)
            if a == b:
                raise InvalidObjectError(f"loop at {a}")
            if not (1 <= a and b <= self.n):
                raise InvalidObjectError(f"edge {(a, b)} outside [1, {self.n}]")
            edges.add((a, b))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def adjacency(self) -> dict:
        adj = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def restrict(self, subset) -> "Graph":
        r = _ranks(subset)
        return Graph(len(r), frozenset((r[a], r[b]) for a, b in self.edges if a in r and b in r))

    def induced_edges(self, subset) -> frozenset:
        subset = set(subset)
        return frozenset(e for e in self.edges if e[0] in subset and e[1] in subset)

    def shift_product(self, other: "Graph") -> "Graph":
        a = self.n
        return Graph(a + other.n, self.edges | {(x + a, y + a) for x, y in other.edges})

    def split_points(self) -> list:
        return [i for i in range(1, self.n)
                if not any(a <= i < b for a, b in self.edges)]

    def relabel(self, sigma) -> "Graph":
        """Image under vertex map v -> sigma[v-1]."""
        return Graph(self.n, frozenset(_norm_edge(sigma[a - 1], sigma[b - 1]) for a, b in self.edges))

    def components(self, edges=None) -> list:
        """Vertex sets of connected components of ([n], edges)."""
        edges = self.edges if edges is None else edges
        return components(range(1, self.n + 1), edges)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def encode(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class Hypergraph:
    """Simple hypergraph on [n]; each edge has at least two vertices."""

    n: int
    edges: frozenset

    def __post_init__(self):
        edges = set()
        for e in self.edges:
            e = tuple(sorted(int(v) for v in e))
            if len(e) < 2 or len(set(e)) != len(e):
                raise InvalidObjectError(f"hyperedge {e} must have at least two distinct vertices")
            if e[0] < 1 or e[-1] > self.n:
                raise InvalidObjectError(f"hyperedge {e} outside [1, {self.n}]")
            edges.add(e)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Hypergraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def components(self, edges=None) -> list:
        edges = self.edges if edges is None else edges
        return components(range(1, self.n + 1), edges)

    def encode(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}


def components(vertices, edges) -> list:
    """Connected components (sorted tuples) of a (hyper)graph by union-find."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        root = find(e[0])
        for v in e[1:]:
            r = find(v)
            if r != root:
                parent[r] = root
    groups: dict = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def poset_of_permutation(alpha: Permutation) -> Poset:
    """i < j in the poset iff i < j and alpha(i) < alpha(j)."""
    w = alpha.one_line
    return Poset(alpha.n, frozenset((i + 1, j + 1) for i, j in combinations(range(alpha.n), 2)
                                    if w[i] < w[j]))


def incomparability_graph(P: Poset) -> Graph:
    return Graph(P.n, frozenset((i, j) for i, j in combinations(range(1, P.n + 1), 2)
                                if not P.comparable(i, j)))


def permutation_graph(alpha: Permutation) -> Graph:
    """Incomparability graph of the poset of alpha: its inversion graph."""
    return incomparability_graph(poset_of_permutation(alpha))
