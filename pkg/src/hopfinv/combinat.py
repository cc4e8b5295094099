"""Enumerative primitives: partitions, compositions, set partitions,
tableaux counts, Dyck paths and parking functions.

Partitions and compositions are plain tuples of positive ints. Partitions
are always stored weakly decreasing.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import DomainError, InvalidObjectError

Partition = tuple
Composition = tuple
SetPartition = tuple  # tuple of sorted tuples, ordered by minimum element


# ---------------------------------------------------------------------------
# partitions and compositions
# ---------------------------------------------------------------------------

def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple:
    return tuple(partitions(n))


def compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def sort_partition(parts: Sequence[int]) -> Partition:
    return tuple(sorted((p for p in parts if p), reverse=True))


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > i) for i in range(la[0]))


def dominates(la: Partition, mu: Partition) -> bool:
    """True if la >= mu in dominance order (same weight assumed)."""
    a = b = 0
    for i in range(max(len(la), len(mu))):
        a += la[i] if i < len(la) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def refines(fine: Composition, coarse: Composition) -> bool:
    """True if consecutive parts of ``fine`` sum block-wise to ``coarse``."""
    i = 0
    for c in coarse:
        s = 0
        while s < c and i < len(fine):
            s += fine[i]
            i += 1
        if s != c:
            return False
    return i == len(fine)


def refinements(alpha: Composition) -> Iterator[Composition]:
    """Every composition refining ``alpha`` block-wise."""
    if not alpha:
        yield ()
        return
    for head in compositions(alpha[0]):
        for tail in refinements(alpha[1:]):
            yield head + tail


def descent_composition(word: Sequence[int]) -> Composition:
    """Composition of len(word) whose partial sums are the descent positions."""
    n = len(word)
    if n == 0:
        return ()
    parts, last = [], 0
    for i in range(1, n):
        if word[i - 1] > word[i]:
            parts.append(i - last)
            last = i
    parts.append(n - last)
    return tuple(parts)


def multinomial(parts: Sequence[int]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# sets
# ---------------------------------------------------------------------------

def ordered_set_compositions(n: int, sizes: Sequence[int]) -> Iterator[tuple]:
    """Every tuple of disjoint blocks (frozensets) covering {1..n} with the
    given block sizes, each produced once."""
    sizes = tuple(sizes)
    if any(s <= 0 for s in sizes) or sum(sizes) != n:
        raise DomainError(f"sizes {sizes} are not a composition of {n}")

    def rec(remaining: tuple, k: int):
        if k == len(sizes):
            yield ()
            return
        for block in combinations(remaining, sizes[k]):
            rest = tuple(x for x in remaining if x not in block)
            for tail in rec(rest, k + 1):
                yield (frozenset(block),) + tail

    yield from rec(tuple(range(1, n + 1)), 0)


def set_partitions(elements: Sequence) -> Iterator[SetPartition]:
    """All set partitions of ``elements`` as tuples of sorted tuples."""
    elements = sorted(elements)
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            merged = tuple(sorted((first,) + part[i]))
            yield tuple(sorted(part[:i] + (merged,) + part[i + 1:]))


def partition_type(blocks: Sequence[Sequence]) -> Partition:
    return sort_partition([len(b) for b in blocks])


def standardize(values: Sequence[int]) -> tuple:
    """Order-preserving relabelling of distinct values onto 1..k."""
    values = tuple(values)
    if len(set(values)) != len(values):
        raise DomainError(f"values {values} are not distinct")
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values)


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------

def f_lambda(la: Partition) -> int:
    """Number of standard Young tableaux of shape la (hook length formula)."""
    la = tuple(la)
    n = sum(la)
    conj = conjugate(la)
    hooks = 1
    for i, row in enumerate(la):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


@lru_cache(maxsize=None)
def syt_count(la: Partition) -> int:
    """Number of SYT of shape la by removing the largest entry from a corner."""
    if sum(la) == 0:
        return 1
    total = 0
    for i, row in enumerate(la):
        if row and (i + 1 == len(la) or la[i + 1] < row):
            smaller = list(la)
            smaller[i] -= 1
            total += syt_count(tuple(p for p in smaller if p))
    return total


def _horizontal_strips(la: Partition, k: int) -> Iterator[Partition]:
    """Partitions nu inside la with la/nu a horizontal strip of size k."""
    la = list(la)

    def rec(i: int, left: int, acc: list):
        if i == len(la):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        below = la[i + 1] if i + 1 < len(la) else 0
        for r in range(0, min(left, la[i] - below) + 1):
            yield from rec(i + 1, left - r, acc + [la[i] - r])

    yield from rec(0, k, [])


@lru_cache(maxsize=None)
def kostka(la: Partition, mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape la and content mu."""
    mu = tuple(mu)
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1
    return sum(kostka(nu, mu[:-1]) for nu in _horizontal_strips(la, mu[-1]))


def kostka_matrix(n: int) -> dict:
    """K[la][mu] for all partitions la, mu of n."""
    parts = partition_list(n)
    return {la: {mu: kostka(la, mu) for mu in parts} for la in parts}


# ---------------------------------------------------------------------------
# Dyck paths and parking functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DyckPath:
    """Lattice path from (0,0) to (n,n) with N/E steps staying weakly above
    the diagonal, stored as a string over {'N', 'E'}."""

    steps: str

    def __post_init__(self):
        height = 0
        for s in self.steps:
            if s == "N":
                height += 1
            elif s == "E":
                height -= 1
            else:
                raise InvalidObjectError(f"bad step {s!r}")
            if height < 0:
                raise InvalidObjectError(f"{self.steps} goes below the diagonal")
        if height != 0:
            raise InvalidObjectError(f"{self.steps} does not end on the diagonal")

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def north_cells(self) -> list:
        """(row, column) of each north step, bottom to top."""
        cells, col = [], 0
        for s in self.steps:
            if s == "N":
                cells.append((len(cells), col))
            else:
                col += 1
        return cells

    def diagonals(self) -> list:
        return [r - c for r, c in self.north_cells()]

    def area(self) -> int:
        return sum(self.diagonals())

    def comp(self) -> Composition:
        parts, last, h = [], 0, 0
        north = 0
        for s in self.steps:
            if s == "N":
                h += 1
                north += 1
            else:
                h -= 1
                if h == 0:
                    parts.append(north - last)
                    last = north
        return tuple(parts)

    def runs(self) -> list:
        """Lengths of the maximal vertical runs, bottom to top."""
        runs, cur = [], 0
        for s in self.steps:
            if s == "N":
                cur += 1
            elif cur:
                runs.append(cur)
                cur = 0
        if cur:
            runs.append(cur)
        return runs

    def type(self) -> Partition:
        return sort_partition(self.runs())

    def __add__(self, other: "DyckPath") -> "DyckPath":
        return DyckPath(self.steps + other.steps)


def path_stats(path: DyckPath) -> tuple:
    return path.comp(), path.area(), path.type()


def dyck_paths(n: int) -> Iterator[DyckPath]:
    def rec(prefix: str, north: int, east: int):
        if north == n and east == n:
            yield DyckPath(prefix)
            return
        if north < n:
            yield from rec(prefix + "N", north + 1, east)
        if east < north:
            yield from rec(prefix + "E", north, east + 1)

    yield from rec("", 0, 0)


@lru_cache(maxsize=None)
def prime_dyck_paths(n: int) -> tuple:
    """Paths of size n touching the diagonal only at both ends."""
    if n == 0:
        return (DyckPath(""),)
    return tuple(DyckPath("N" + d.steps + "E") for d in dyck_paths(n - 1))


def dyck_paths_with_comp(alpha: Composition) -> Iterator[DyckPath]:
    if not alpha:
        yield DyckPath("")
        return
    for head in prime_dyck_paths(alpha[0]):
        for tail in dyck_paths_with_comp(alpha[1:]):
            yield head + tail


def dyck_paths_refining(la: Partition) -> Iterator[tuple]:
    """Pairs (D, weight) for D whose comp refines la block-wise, where weight
    is the product of the first part of comp(D) inside each block."""
    for alpha in refinements(tuple(la)):
        weight, i = 1, 0
        for block in la:
            weight *= alpha[i]
            s = 0
            while s < block:
                s += alpha[i]
                i += 1
        for d in dyck_paths_with_comp(alpha):
            yield d, weight


@dataclass(frozen=True)
class ParkingFunction:
    """Dyck path with labels 1..n on its north steps (bottom to top),
    increasing along every vertical run."""

    path: DyckPath
    labels: tuple

    def __post_init__(self):
        n = self.path.size
        if sorted(self.labels) != list(range(1, n + 1)):
            raise InvalidObjectError(f"labels {self.labels} are not a permutation of 1..{n}")
        i = 0
        for r in self.path.runs():
            run = self.labels[i:i + r]
            if any(a >= b for a, b in zip(run, run[1:])):
                raise InvalidObjectError(f"labels {run} decrease along a vertical run")
            i += r

    def comp(self) -> Composition:
        return self.path.comp()

    def area(self) -> int:
        return self.path.area()

    def word(self) -> tuple:
        # highest diagonal first, right to left within a diagonal
        cells = self.path.north_cells()
        order = sorted(range(len(cells)),
                       key=lambda k: (-(cells[k][0] - cells[k][1]), -cells[k][1]))
        return tuple(self.labels[k] for k in order)

    def ides(self) -> Composition:
        w = self.word()
        inverse = [0] * len(w)
        for pos, v in enumerate(w):
            inverse[v - 1] = pos + 1
        return descent_composition(inverse)


def pf_stats(pf: ParkingFunction) -> tuple:
    return pf.comp(), pf.area(), pf.word(), pf.ides()


def labelings(path: DyckPath) -> Iterator[tuple]:
    """Every column-increasing labelling of the north steps of ``path``."""
    runs = path.runs()
    n = path.size
    for blocks in ordered_set_compositions(n, runs) if n else [()]:
        labels = []
        for b in blocks:
            labels.extend(sorted(b))
        yield tuple(labels)


def parking_functions(n: int, comp: Composition | None = None) -> Iterator[ParkingFunction]:
    """All parking functions of size n, optionally only those with the given comp."""
    paths = dyck_paths(n) if comp is None else dyck_paths_with_comp(tuple(comp))
    for d in paths:
        for labels in labelings(d):
            yield ParkingFunction(d, labels)


def count_parking_functions(n: int) -> int:
    """Sum over Dyck paths of the number of column-increasing labellings."""
    return sum(multinomial(d.runs()) if n else 1 for d in dyck_paths(n))
