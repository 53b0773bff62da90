from pd2.gf2 import (EchelonBasis, apply_matrix, bits, invertible_matrices, kernel, popcount,
                     rank, solve, span_elements)


def test_bits_and_popcount():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert popcount(0b10110) == 3


def test_rank_and_kernel():
    cols = [0b011, 0b110, 0b101]
    assert rank(cols) == 2
    ker = kernel(cols, 3)
    assert len(ker) == 1
    assert apply_matrix(cols, ker[0]) == 0


def test_solve():
    cols = [0b01, 0b11]
    x = solve(cols, 0b10)
    assert apply_matrix(cols, x) == 0b10
    assert solve([0b01, 0b01], 0b10) is None


def test_echelon_membership():
    eb = EchelonBasis()
    assert eb.add(0b110)
    assert eb.add(0b011)
    assert not eb.add(0b101)
    assert eb.contains(0b101)
    assert not eb.contains(0b001)


def test_span_and_group_orders():
    assert sorted(span_elements([1, 2])) == [0, 1, 2, 3]
    # |GL_n(F2)| = 1, 6, 168
    assert [len(invertible_matrices(n)) for n in (1, 2, 3)] == [1, 6, 168]
