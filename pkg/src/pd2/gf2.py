"""Linear algebra over the two-element field on int bitsets.

A vector is an ``int`` whose bit ``i`` is the coefficient of basis vector ``i``.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a subspace.

    Each stored row has a distinct pivot (its highest set bit).  ``reduce``
    returns the remainder of a vector modulo the span, ``add`` inserts it.
    Optionally tracks, for every stored row, which inserted vectors it is
    the sum of, so membership can come with a certificate.
    """

    __slots__ = ("rows", "tags", "_track")

    def __init__(self, track: bool = False) -> None:
        self.rows: dict[int, int] = {}
        self.tags: dict[int, int] = {}
        self._track = track

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> int:
        rows = self.rows
        while v:
            p = v.bit_length() - 1
            r = rows.get(p)
            if r is None:
                return v
            v ^= r
        return 0

    def reduce_tagged(self, v: int, tag: int = 0) -> Tuple[int, int]:
        rows, tags = self.rows, self.tags
        while v:
            p = v.bit_length() - 1
            r = rows.get(p)
            if r is None:
                break
            v ^= r
            tag ^= tags[p]
        return v, tag

    def add(self, v: int, tag: int = 0) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        if self._track:
            v, tag = self.reduce_tagged(v, tag)
        else:
            v = self.reduce(v)
        if not v:
            return False
        p = v.bit_length() - 1
        self.rows[p] = v
        if self._track:
            self.tags[p] = tag
        return True

    def normal_form(self, v: int) -> int:
        """Remainder of ``v`` with no pivot bit set (fully reduced)."""
        rows = self.rows
        out = 0
        while v:
            p = v.bit_length() - 1
            r = rows.get(p)
            if r is None:
                out |= 1 << p
                v ^= 1 << p
            else:
                v ^= r
        return out

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0


def rank(vectors: Iterable[int]) -> int:
    eb = EchelonBasis()
    for v in vectors:
        eb.add(v)
    return len(eb)


def span_elements(vectors: Sequence[int]) -> List[int]:
    """All F2-combinations of ``vectors`` (with repetition if dependent)."""
    out = [0]
    for v in vectors:
        out = out + [x ^ v for x in out]
    return out


def kernel(columns: Sequence[int], n: int) -> List[int]:
    """Basis of ``{x in F2^n : sum_i x_i * columns[i] = 0}``.

    ``columns[i]`` is the image of the ``i``-th unit vector.
    """
    eb = EchelonBasis(track=True)
    out = []
    for i in range(n):
        rem, tag = eb.reduce_tagged(columns[i], 1 << i)
        if rem == 0:
            out.append(tag)
        else:
            eb.add(columns[i], 1 << i)
    return out


def solve(columns: Sequence[int], target: int) -> Optional[int]:
    """Return ``x`` with ``sum_i x_i * columns[i] == target`` or None."""
    eb = EchelonBasis(track=True)
    for i, c in enumerate(columns):
        eb.add(c, 1 << i)
    rem, tag = eb.reduce_tagged(target)
    return tag if rem == 0 else None


def invertible_matrices(n: int) -> List[Tuple[int, ...]]:
    """All invertible n x n matrices over F2, as tuples of column bitsets."""
    if n == 0:
        return [()]
    out = []
    for cols in product(range(1, 1 << n), repeat=n):
        if rank(cols) == n:
            out.append(cols)
    return out


def apply_matrix(cols: Sequence[int], x: int) -> int:
    """Image of ``x`` under the matrix with the given columns."""
    y = 0
    for i in bits(x):
        y ^= cols[i]
    return y
