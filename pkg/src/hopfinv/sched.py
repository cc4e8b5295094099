"""Scheduling problems: Boolean formulas over comparisons of positive
integer variables x1, x2, ..., and the quasisymmetric generating function
of their solutions.

Grammar (precedence ! > & > |)::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | atom
    atom   := VAR ('=' | '!=' | '<=') VAR
    VAR    := 'x' [1-9][0-9]*
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product as cartesian

from .errors import DomainError, HopfInvError
from .graphs import canonical_graph, connected_partitions, flat_of_partition
from .hopf import Character
from .objects import Graph
from .qsym import QSymFunc, from_monomials

RELATIONS = ("=", "!=", "<=")


class FormulaSyntaxError(HopfInvError, ValueError):
    def __init__(self, message, position=None, token_index=None):
        super().__init__(message)
        self.position = position
        self.token_index = token_index


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    i: int
    rel: str
    j: int

    def max_var(self) -> int:
        return max(self.i, self.j)


@dataclass(frozen=True)
class Not:
    child: object

    def max_var(self) -> int:
        return self.child.max_var()


@dataclass(frozen=True)
class And:
    children: tuple

    def max_var(self) -> int:
        return max((c.max_var() for c in self.children), default=0)


@dataclass(frozen=True)
class Or:
    children: tuple

    def max_var(self) -> int:
        return max((c.max_var() for c in self.children), default=0)


@dataclass(frozen=True)
class SchedFormula:
    root: object
    n: int

    def __post_init__(self):
        if self.root.max_var() > self.n:
            raise DomainError(f"formula uses x{self.root.max_var()} but n = {self.n}")

    def __str__(self):
        return to_text(self.root)

    def evaluate(self, values) -> bool:
        """values[k - 1] is the value of x_k."""
        return evaluate(self.root, values)


# ---------------------------------------------------------------------------
# lexer and parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(x\d+)|(!=|<=|=|&|\||!|\(|\)))")


def tokenize(text: str) -> list:
    """[(kind, lexeme, char position)], kind in {'var', 'op', 'end'}."""
    tokens, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            tokens.append(("end", "", pos))
            return tokens
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r} at position {pos}",
                                     pos, len(tokens) + 1)
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            tokens.append(("var", m.group(1), start))
        else:
            tokens.append(("op", m.group(2), start))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def error(self, what: str):
        kind, lexeme, pos = self.peek()
        shown = lexeme or "end of input"
        raise FormulaSyntaxError(f"syntax error at token {self.k + 1} ({shown!r}, position {pos}): "
                                 f"expected {what}", pos, self.k + 1)

    def take(self, lexeme: str):
        if self.peek()[1] != lexeme or self.peek()[0] != "op":
            self.error(repr(lexeme))
        self.k += 1

    def expr(self):
        items = [self.term()]
        while self.peek() == ("op", "|", self.peek()[2]):
            self.k += 1
            items.append(self.term())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def term(self):
        items = [self.factor()]
        while self.peek() == ("op", "&", self.peek()[2]):
            self.k += 1
            items.append(self.factor())
        return items[0] if len(items) == 1 else And(tuple(items))

    def factor(self):
        kind, lexeme, _ = self.peek()
        if kind == "op" and lexeme == "!":
            self.k += 1
            return Not(self.factor())
        if kind == "op" and lexeme == "(":
            self.k += 1
            node = self.expr()
            self.take(")")
            return node
        return self.atom()

    def var(self) -> int:
        kind, lexeme, _ = self.peek()
        if kind != "var":
            self.error("a variable x<k>")
        index = int(lexeme[1:])
        if index < 1:
            self.error("a variable index >= 1")
        self.k += 1
        return index

    def atom(self):
        i = self.var()
        kind, lexeme, _ = self.peek()
        if kind != "op" or lexeme not in RELATIONS:
            self.error("one of = != <=")
        self.k += 1
        return Atom(i, lexeme, self.var())


def parse(text: str, n: int | None = None) -> SchedFormula:
    p = _Parser(text)
    root = p.expr()
    if p.peek()[0] != "end":
        p.error("end of input")
    return SchedFormula(root, root.max_var() if n is None else n)


# ---------------------------------------------------------------------------
# printing and evaluation
# ---------------------------------------------------------------------------

def to_text(node) -> str:
    if isinstance(node, Atom):
        return f"x{node.i} {node.rel} x{node.j}"
    if isinstance(node, Not):
        return f"!({to_text(node.child)})"
    if isinstance(node, And):
        if not node.children:
            return "x1 = x1"
        return " & ".join(_wrap(c, (And, Or)) for c in node.children)
    if isinstance(node, Or):
        if not node.children:
            return "x1 != x1"
        return " | ".join(_wrap(c, (Or,)) for c in node.children)
    raise TypeError(f"not a formula node: {node!r}")


def _wrap(child, kinds) -> str:
    text = to_text(child)
    return f"({text})" if isinstance(child, kinds) else text


def evaluate(node, values) -> bool:
    if isinstance(node, Atom):
        a, b = values[node.i - 1], values[node.j - 1]
        return a == b if node.rel == "=" else a != b if node.rel == "!=" else a <= b
    if isinstance(node, Not):
        return not evaluate(node.child, values)
    if isinstance(node, And):
        return all(evaluate(c, values) for c in node.children)
    return any(evaluate(c, values) for c in node.children)


def compile_formula(node):
    """A closure equivalent to evaluate(node, .), for tight loops."""
    if isinstance(node, Atom):
        i, j = node.i - 1, node.j - 1
        if node.rel == "=":
            return lambda v: v[i] == v[j]
        if node.rel == "!=":
            return lambda v: v[i] != v[j]
        return lambda v: v[i] <= v[j]
    if isinstance(node, Not):
        inner = compile_formula(node.child)
        return lambda v: not inner(v)
    parts = [compile_formula(c) for c in node.children]
    if isinstance(node, And):
        return lambda v: all(f(v) for f in parts)
    return lambda v: any(f(v) for f in parts)


# ---------------------------------------------------------------------------
# generating function of solutions
# ---------------------------------------------------------------------------

def solutions(S: SchedFormula, N: int):
    test = compile_formula(S.root)
    for values in cartesian(range(1, N + 1), repeat=S.n):
        if test(values):
            yield values


def phi_polynomial(S: SchedFormula, N: int) -> dict:
    """Sum of x_f over solutions f: [n] -> [N], as {exponents: count}."""
    poly: dict = {}
    for values in solutions(S, N):
        expo = [0] * N
        for v in values:
            expo[v - 1] += 1
        key = tuple(expo)
        poly[key] = poly.get(key, 0) + 1
    return poly


def phi_truncated(S: SchedFormula, N: int) -> QSymFunc:
    """The quasisymmetric function of S, read off its N-variable
    truncation. Exact for N >= n since every composition indexing a
    degree-n monomial function has at most n parts."""
    if N < S.n:
        raise DomainError(f"need N >= n = {S.n}, got N = {N}")
    return from_monomials(phi_polynomial(S, N), S.n)


# ---------------------------------------------------------------------------
# formulas from graphs
# ---------------------------------------------------------------------------

def coloring_formula(g: Graph) -> SchedFormula:
    atoms = tuple(Atom(a, "!=", b) for a, b in g.sorted_edges())
    if len(atoms) == 1:
        return SchedFormula(atoms[0], g.n)
    return SchedFormula(And(atoms), g.n)


def covering_flats_for(g: Graph, classes) -> list:
    """Flats F whose spanning graph (V, F) has every component in classes."""
    out = []
    for part in connected_partitions(g):
        if all(canonical_graph(g.restrict(b)) in classes for b in part):
            out.append(flat_of_partition(g, part))
    return out


def build_S_g_A(g: Graph, A) -> SchedFormula:
    """Disjunction over covering flats F of (edges of F equal) and
    (remaining edges different). No covering flat gives an empty
    disjunction, which is never satisfied."""
    classes = A.classes if isinstance(A, Character) else frozenset(
        c if not isinstance(c, Graph) else canonical_graph(c) for c in A)
    disjuncts = []
    for F in covering_flats_for(g, classes):
        atoms = [Atom(a, "=", b) for a, b in sorted(F)]
        atoms += [Atom(a, "!=", b) for a, b in g.sorted_edges() if (a, b) not in F]
        if len(atoms) == 1:
            disjuncts.append(atoms[0])
        elif atoms:
            disjuncts.append(And(tuple(atoms)))
        else:
            disjuncts.append(And(()))
    root = disjuncts[0] if len(disjuncts) == 1 else Or(tuple(disjuncts))
    return SchedFormula(root, g.n)


@dataclass(frozen=True)
class PhiPsiReport:
    equal: bool
    witness: tuple | None = None  # (exponents, phi count, psi count)


def verify_phi_equals_psi(g: Graph, A) -> PhiPsiReport:
    """Compare the truncated solution polynomial of S(g, A) with the
    monomial expansion of the zeta_A invariant, in n variables."""
    from .hopf import zeta_A
    from .invariants import psi
    from .qsym import expand_monomials

    if g.n > 7:
        raise DomainError("phi/psi comparison limited to n <= 7")
    z = A if isinstance(A, Character) else zeta_A(A)
    if g.n == 0:
        return PhiPsiReport(True)
    lhs = phi_polynomial(build_S_g_A(g, z), g.n)
    rhs = expand_monomials(psi(z, g), g.n)
    for key in sorted(set(lhs) | set(rhs)):
        if lhs.get(key, 0) != rhs.get(key, 0):
            return PhiPsiReport(False, (key, lhs.get(key, 0), rhs.get(key, 0)))
    return PhiPsiReport(True)
