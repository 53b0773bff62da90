"""Independent brute-force oracles and a seeded random algebra source.

The oracles read only the raw multiplication table and degrees, and use
their own elimination, so they share no code with the library's search.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pd2 import (GradedAlgebra, connected_sum, disjoint_union, make_truncated, point,
                 sphere, tensor_product, wedge_sum)
from pd2.algebra import rebase


def _rank(vectors: Sequence[int]) -> int:
    rows: List[int] = []
    for v in vectors:
        for r in rows:
            v = min(v, v ^ r)
        if v:
            rows.append(v)
    return len(rows)


def _apply(images: Sequence[int], x: int) -> int:
    y, i = 0, 0
    while x:
        if x & 1:
            y ^= images[i]
        x >>= 1
        i += 1
    return y


def _mul(A: GradedAlgebra, x: int, y: int) -> int:
    out = 0
    for i in range(A.dim):
        if x >> i & 1:
            for j in range(A.dim):
                if y >> j & 1:
                    out ^= A.table[i][j]
    return out


def pieces(A: GradedAlgebra) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for i, d in enumerate(A.degrees):
        out.setdefault(d, []).append(i)
    return out


def associative(A: GradedAlgebra) -> bool:
    n = A.dim
    for a in range(n):
        for b in range(n):
            ab = A.table[a][b]
            for c in range(n):
                if _mul(A, ab, 1 << c) != _mul(A, 1 << a, A.table[b][c]):
                    return False
    return True


def commutative(A: GradedAlgebra) -> bool:
    return all(A.table[i][j] == A.table[j][i] for i in range(A.dim) for j in range(A.dim))


def poincare_duality(A: GradedAlgebra) -> bool:
    """Connected, rank one top piece, and every pairing matrix square of full rank."""
    P = pieces(A)
    if len(P.get(0, [])) != 1:
        return False
    r = max(P)
    if len(P[r]) != 1:
        return False
    v = 1 << P[r][0]
    for d, lo in P.items():
        hi = P.get(r - d, [])
        if len(hi) != len(lo):
            return False
        rows = [sum(1 << k for k, j in enumerate(hi) if A.table[i][j] & v) for i in lo]
        if _rank(rows) != len(lo):
            return False
    return True


def hilbert(A: GradedAlgebra) -> Dict[int, int]:
    return {d: len(v) for d, v in pieces(A).items()}


def _invertible(n: int) -> List[Tuple[int, ...]]:
    return [cols for cols in product(range(1, 1 << n), repeat=n) if _rank(cols) == n]


def linear_map_count(A: GradedAlgebra) -> int:
    total = 1
    for idx in pieces(A).values():
        total *= len(_invertible(len(idx))) if len(idx) <= 3 else 10 ** 9
    return total


def brute_isomorphic(A: GradedAlgebra, B: GradedAlgebra, limit: int = 200000) -> Optional[bool]:
    """Try every degree preserving linear bijection; None when the space
    exceeds ``limit``."""
    PA, PB = pieces(A), pieces(B)
    if {d: len(v) for d, v in PA.items()} != {d: len(v) for d, v in PB.items()}:
        return False
    if linear_map_count(A) > limit:
        return None
    degs = sorted(PA)
    choices = [_invertible(len(PA[d])) for d in degs]
    for pick in product(*choices):
        images = [0] * A.dim
        for d, cols in zip(degs, pick):
            for k, i in enumerate(PA[d]):
                images[i] = sum(1 << PB[d][t] for t in range(len(PB[d])) if cols[k] >> t & 1)
        if all(_apply(images, A.table[i][j]) == _mul(B, images[i], images[j])
               for i in range(A.dim) for j in range(i, A.dim)):
            return True
    return False


# -- random algebras --------------------------------------------------------


def _base(rng: random.Random) -> GradedAlgebra:
    kind = rng.random()
    if kind < 0.1:
        return point()
    if kind < 0.55:
        return sphere(rng.randint(1, 4))
    h = rng.randint(2, 7)
    return make_truncated(rng.choice((1, 2, 3)) if h <= 4 else 1, h)


def _pd_dimension(A: GradedAlgebra) -> Optional[int]:
    return A.top_degree if A.connected and poincare_duality(A) else None


def _matching_base(rng: random.Random, r: int, room: int) -> Optional[GradedAlgebra]:
    opts = [sphere(r)]
    for h in range(2, 8):
        if r % h == 0 and h + 1 <= room:
            opts.append(make_truncated(r // h, h))
    opts = [o for o in opts if o.dim <= room]
    return rng.choice(opts) if opts else None


def random_algebra(rng: random.Random, max_rank: int = 8) -> Tuple[GradedAlgebra, str]:
    """A valid algebra of rank at most ``max_rank`` with a recipe string."""
    A = _base(rng)
    recipe = f"base({A.hilbert_str() if hasattr(A, 'hilbert_str') else A.degrees})"
    for _ in range(rng.randint(0, 3)):
        op = rng.choice(("tensor", "csum", "wedge", "union"))
        if op == "tensor":
            B = _base(rng)
            if A.dim * B.dim <= max_rank and A.connected and B.connected:
                A, recipe = tensor_product(A, B), f"({recipe} x {B.degrees})"
        elif op == "csum":
            r = _pd_dimension(A)
            B = _matching_base(rng, r, max_rank - A.dim + 2) if r else None
            if B is not None and r > 0:
                A, recipe = connected_sum(A, B), f"({recipe} # {B.degrees})"
        elif op == "wedge":
            B = _base(rng)
            if A.connected and B.connected and A.dim + B.dim - 1 <= max_rank and B.dim > 1:
                A, recipe = wedge_sum(A, B), f"({recipe} v {B.degrees})"
        else:
            B = _base(rng)
            if A.dim + B.dim <= max_rank:
                A, recipe = disjoint_union(A, B), f"({recipe} + {B.degrees})"
    return A, recipe


def random_basis_change(rng: random.Random, A: GradedAlgebra) -> Tuple[GradedAlgebra, List[int]]:
    """Rewrite ``A`` in a random homogeneous basis, in a shuffled order."""
    cols: List[int] = []
    for d, idx in sorted(pieces(A).items()):
        mats = _invertible(len(idx)) if len(idx) <= 3 else None
        if mats is None:
            m = tuple(1 << k for k in range(len(idx)))
        else:
            m = rng.choice(mats)
        for c in m:
            cols.append(sum(1 << idx[t] for t in range(len(idx)) if c >> t & 1))
    order = list(range(len(cols)))
    # keep degree 0 first so the unit stays a basis element of a connected algebra
    head = [i for i in order if A.degrees[next(j for j in range(A.dim) if cols[i] >> j & 1)] == 0]
    tail = [i for i in order if i not in head]
    rng.shuffle(tail)
    cols = [cols[i] for i in head + tail]
    names = [f"e{i}" for i in range(len(cols))]
    return rebase(A, cols, names), cols


def algebra_stream(seed: int, count: int, max_rank: int = 8) -> Iterator[Tuple[GradedAlgebra, str]]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_algebra(rng, max_rank)
