from itertools import product

from oracles import associative, commutative
from pd2 import validate_algebra
from pd2.algebra import GradedAlgebra
from pd2.enumerate import TableProblem, enumerate_algebras, search_tables


def _brute(degrees):
    """Every commutative associative table with unit on the basis, by
    trying all values of each product independently."""
    n = len(degrees)
    pos = range(1, n)
    pairs = [(i, j) for i in pos for j in pos if i <= j]
    doms = []
    for i, j in pairs:
        d = degrees[i] + degrees[j]
        idx = [k for k in range(n) if degrees[k] == d]
        doms.append([sum(1 << idx[t] for t in range(len(idx)) if m >> t & 1)
                     for m in range(1 << len(idx))])
    count = 0
    for vals in product(*doms):
        table = [[0] * n for _ in range(n)]
        for k in range(n):
            table[0][k] = table[k][0] = 1 << k
        for (i, j), v in zip(pairs, vals):
            table[i][j] = table[j][i] = v
        A = GradedAlgebra(tuple(f"e{k}" for k in range(n)), tuple(degrees),
                          tuple(tuple(r) for r in table))
        if associative(A) and commutative(A):
            count += 1
    return count


def test_search_matches_brute_force():
    for degs in [(0, 1, 1, 2), (0, 1, 2, 3), (0, 1, 1, 2, 2), (0, 2, 2, 4, 4, 6)]:
        prob = TableProblem(degrees=degs)
        assert sum(1 for _ in search_tables(prob)) == _brute(degs), degs


def test_enumerated_tables_are_valid():
    prob = TableProblem(degrees=(0, 1, 1, 2, 3))
    algebras = list(enumerate_algebras(prob, lambda A: True))
    assert algebras
    assert all(validate_algebra(A).ok for A in algebras)


def test_fixed_and_choices():
    prob = TableProblem(degrees=(0, 1, 2), fixed={(1, 1): 0})
    tables = list(search_tables(prob))
    assert len(tables) == 1 and tables[0][1][1] == 0
    prob = TableProblem(degrees=(0, 1, 2), choices={(1, 1): (4,)})
    assert [t[1][1] for t in search_tables(prob)] == [4]
