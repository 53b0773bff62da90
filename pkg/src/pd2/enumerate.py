"""Backtracking search over multiplication tables on a fixed graded basis.

The basis (and so the Hilbert series) is fixed in advance; index 0 is the
unit.  Every product of two positive-degree basis elements is either fixed
or ranges over a finite list of candidate values.  Associativity is checked
on a basis triple as soon as every entry it can touch has been assigned,
which prunes most branches long before a full table is reached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .algebra import GradedAlgebra
from .gf2 import bits, span_elements

Pair = Tuple[int, int]


@dataclass
class TableProblem:
    """Search space of tables on a basis with the given sorted degrees.

    ``fixed`` pins products; ``choices`` lists candidate values.  A pair in
    neither map ranges over the whole target piece, or is zero when no basis
    element has the target degree.
    """
    degrees: Tuple[int, ...]
    fixed: Dict[Pair, int] = field(default_factory=dict)
    choices: Dict[Pair, Tuple[int, ...]] = field(default_factory=dict)
    names: Optional[Tuple[str, ...]] = None

    def piece_mask(self, d: int) -> int:
        m = 0
        for i, e in enumerate(self.degrees):
            if e == d:
                m |= 1 << i
        return m

    def piece_elements(self, d: int) -> List[int]:
        return span_elements([1 << i for i in range(len(self.degrees)) if self.degrees[i] == d])

    def domain(self, i: int, j: int) -> Tuple[int, ...]:
        key = (min(i, j), max(i, j))
        if key in self.fixed:
            return (self.fixed[key],)
        if key in self.choices:
            return tuple(self.choices[key])
        return tuple(self.piece_elements(self.degrees[i] + self.degrees[j]))


def _default_names(degrees: Sequence[int]) -> Tuple[str, ...]:
    out = ["1"]
    for i in range(1, len(degrees)):
        out.append(f"e{i}")
    return tuple(out)


def search_tables(problem: TableProblem) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Yield every associative commutative table in the search space."""
    degs = problem.degrees
    n = len(degs)
    if n == 0 or degs[0] != 0:
        raise ValueError("basis must start with the unit in degree 0")
    present = set(degs)
    masks: Dict[int, int] = {}
    for i, d in enumerate(degs):
        masks[d] = masks.get(d, 0) | (1 << i)

    T = [[0] * n for _ in range(n)]
    for j in range(n):
        T[0][j] = T[j][0] = 1 << j
    variables: List[Tuple[Pair, Tuple[int, ...]]] = []
    for i in range(1, n):
        for j in range(i, n):
            dom = problem.domain(i, j)
            target = degs[i] + degs[j]
            allowed = masks.get(target, 0)
            dom = tuple(v for v in dom if v & ~allowed == 0)
            if not dom:
                return
            if len(dom) == 1:
                T[i][j] = T[j][i] = dom[0]
            else:
                variables.append(((i, j), dom))
    order: List[int] = []
    nv = len(variables)
    index = {pair: k for k, (pair, _) in enumerate(variables)}

    def var_of(i: int, j: int) -> int:
        return index.get((min(i, j), max(i, j)), -1)

    # the free entries each associativity triple can touch
    triples: List[Tuple[Tuple[int, int, int], set]] = []
    for a in range(1, n):
        for b in range(a, n):
            for c in range(b, n):
                if degs[a] + degs[b] + degs[c] not in present:
                    continue
                need = {var_of(a, b), var_of(a, c), var_of(b, c)}
                for x in bits(masks.get(degs[a] + degs[b], 0)):
                    need.add(var_of(x, c))
                for x in bits(masks.get(degs[b] + degs[c], 0)):
                    need.add(var_of(a, x))
                for x in bits(masks.get(degs[a] + degs[c], 0)):
                    need.add(var_of(x, b))
                need.discard(-1)
                triples.append(((a, b, c), need))

    # greedy order: next is the entry closing the most triples, then the
    # one with the smallest domain
    remaining = [set(need) for _, need in triples]
    left = set(range(nv))
    while left:
        def score(v: int) -> tuple:
            closes = sum(1 for rem in remaining if rem == {v})
            touches = sum(1 for rem in remaining if v in rem)
            return (-closes, -touches, len(variables[v][1]), v)
        v = min(left, key=score)
        order.append(v)
        left.discard(v)
        for rem in remaining:
            rem.discard(v)
    variables = [variables[v] for v in order]
    rank_of = {old: new for new, old in enumerate(order)}
    checks: List[List[Tuple[int, int, int]]] = [[] for _ in range(nv + 1)]
    for t, need in triples:
        last = max((rank_of[v] for v in need), default=-1)
        checks[last + 1].append(t)

    def right(x: int, c: int) -> int:
        out = 0
        for t in bits(x):
            out ^= T[t][c]
        return out

    def consistent(level: int) -> bool:
        for a, b, c in checks[level]:
            abc = right(T[a][b], c)
            if abc != right(T[b][c], a) or abc != right(T[a][c], b):
                return False
        return True

    if not consistent(0):
        return

    def rec(k: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if k == nv:
            yield tuple(tuple(row) for row in T)
            return
        (i, j), dom = variables[k]
        for v in dom:
            T[i][j] = T[j][i] = v
            if consistent(k + 1):
                yield from rec(k + 1)
        T[i][j] = T[j][i] = 0

    yield from rec(0)


def enumerate_algebras(problem: TableProblem,
                       keep: Optional[Callable[[GradedAlgebra], bool]] = None) -> Iterator[GradedAlgebra]:
    names = problem.names or _default_names(problem.degrees)
    for table in search_tables(problem):
        A = GradedAlgebra(names, tuple(problem.degrees), table)
        if keep is None or keep(A):
            yield A
