"""Finite graded-commutative algebras over F2 given by structure constants.

Elements are int bitsets over the basis.  ``table[i][j]`` is the product of
basis elements ``i`` and ``j``.  Everything here is exact; there are no
tolerances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .gf2 import EchelonBasis, bits, kernel, rank, span_elements


@dataclass(frozen=True)
class GradedAlgebra:
    names: Tuple[str, ...]
    degrees: Tuple[int, ...]
    table: Tuple[Tuple[int, ...], ...]
    connected: bool = True

    def __post_init__(self) -> None:
        n = len(self.names)
        if n == 0:
            raise ValueError("basis must be nonempty")
        if len(self.degrees) != n or len(self.table) != n:
            raise ValueError("names, degrees and table must have equal length")
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table must be square")
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonnegative")
        if len(set(self.names)) != n:
            raise ValueError("basis names must be distinct")

    # -- basic structure -------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.names)

    @cached_property
    def by_degree(self) -> Dict[int, Tuple[int, ...]]:
        out: Dict[int, List[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return {d: tuple(v) for d, v in sorted(out.items())}

    def piece(self, d: int) -> Tuple[int, ...]:
        return self.by_degree.get(d, ())

    def piece_mask(self, d: int) -> int:
        m = 0
        for i in self.piece(d):
            m |= 1 << i
        return m

    def piece_elements(self, d: int) -> List[int]:
        return span_elements([1 << i for i in self.piece(d)])

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    @property
    def positive_degrees(self) -> List[int]:
        return [d for d in self.by_degree if d > 0]

    def mul(self, x: int, y: int) -> int:
        t = self.table
        out = 0
        for i in bits(x):
            row = t[i]
            for j in bits(y):
                out ^= row[j]
        return out

    def power(self, x: int, k: int) -> int:
        out = self.unit
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def height(self, x: int) -> int:
        """Largest h with x^h != 0 (0 for x = 0); only for positive degree."""
        h, p = 0, x
        while p:
            h += 1
            p = self.mul(p, x)
            if h > self.dim:
                break
        return h

    @cached_property
    def unit(self) -> int:
        zero = self.piece(0)
        for e in span_elements([1 << i for i in zero]):
            if e and all(self.mul(e, 1 << i) == 1 << i for i in range(self.dim)):
                return e
        return 0

    def element_str(self, x: int) -> str:
        if x == 0:
            return "0"
        return " + ".join(self.names[i] for i in bits(x))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def element(self, *names: str) -> int:
        x = 0
        for nm in names:
            x ^= 1 << self.index(nm)
        return x

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        mult = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.table[i][j]
                if v:
                    mult.append([self.names[i], self.names[j],
                                 [self.names[k] for k in bits(v)]])
        return {
            "basis": list(self.names),
            "degrees": list(self.degrees),
            "mult": mult,
            "connected": self.connected,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GradedAlgebra":
        names = tuple(data["basis"])
        idx = {nm: i for i, nm in enumerate(names)}
        n = len(names)
        table = [[0] * n for _ in range(n)]
        for a, b, terms in data["mult"]:
            v = 0
            for t in terms:
                v ^= 1 << idx[t]
            table[idx[a]][idx[b]] = v
        return cls(names, tuple(int(d) for d in data["degrees"]),
                   tuple(tuple(r) for r in table), bool(data.get("connected", True)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GradedAlgebra":
        return cls.from_dict(json.loads(text))


def make_algebra(names: Sequence[str], degrees: Sequence[int],
                 products: Dict[Tuple[int, int], int], connected: bool = True,
                 symmetric: bool = True) -> GradedAlgebra:
    """Build an algebra from a sparse product dict keyed by index pairs."""
    n = len(names)
    table = [[0] * n for _ in range(n)]
    for (i, j), v in products.items():
        table[i][j] = v
        if symmetric:
            table[j][i] = v
    return GradedAlgebra(tuple(names), tuple(degrees),
                         tuple(tuple(r) for r in table), connected)


def rebase(A: GradedAlgebra, columns: Sequence[int],
           names: Optional[Sequence[str]] = None) -> GradedAlgebra:
    """Rewrite ``A`` in the basis whose ``i``-th element is ``columns[i]``.

    ``columns`` must be homogeneous and span ``A``; degrees follow the
    columns.
    """
    n = A.dim
    if len(columns) != n:
        raise ValueError("need one column per basis element")
    degs = []
    for c in columns:
        ds = {A.degrees[i] for i in bits(c)}
        if len(ds) != 1:
            raise ValueError("basis change must be homogeneous")
        degs.append(ds.pop())
    eb = EchelonBasis(track=True)
    for i, c in enumerate(columns):
        if not eb.add(c, 1 << i):
            raise ValueError("basis change is not invertible")

    def coords(v: int) -> int:
        rem, tag = eb.reduce_tagged(v)
        assert rem == 0
        return tag

    table = tuple(tuple(coords(A.mul(columns[i], columns[j])) for j in range(n))
                  for i in range(n))
    return GradedAlgebra(tuple(names) if names is not None else A.names,
                         tuple(degs), table, A.connected)


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: Tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.kind}: ({', '.join(self.witness)})"


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set:
        return {v.kind for v in self.violations}


def validate_algebra(A: GradedAlgebra, first_only: bool = False) -> ValidationReport:
    """List every violated axiom with a witness; empty means valid.

    Checks the unit (and connectedness at degree 0 when flagged),
    commutativity, degree-additivity and associativity on basis triples.
    """
    out: List[Violation] = []
    n, t, names, deg = A.dim, A.table, A.names, A.degrees

    def done() -> bool:
        return first_only and bool(out)

    zero = A.piece(0)
    if A.connected and len(zero) != 1:
        out.append(Violation("connected", tuple(names[i] for i in zero)))
    u = A.unit
    if not u:
        out.append(Violation("unit", tuple(names[i] for i in zero)))
    elif A.connected and len(zero) == 1:
        e = zero[0]
        for i in range(n):
            if t[e][i] != 1 << i or t[i][e] != 1 << i:
                out.append(Violation("unit", (names[e], names[i])))
                break
    for i in range(n):
        if done():
            break
        for j in range(n):
            v = t[i][j]
            if v != t[j][i] and i < j:
                out.append(Violation("commutativity", (names[i], names[j])))
            if any(deg[k] != deg[i] + deg[j] for k in bits(v)):
                out.append(Violation("degree", (names[i], names[j])))
    if not done():
        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    if A.mul(ij, 1 << k) != A.mul(1 << i, t[j][k]):
                        out.append(Violation("associativity",
                                             (names[i], names[j], names[k])))
                        if first_only:
                            return ValidationReport(tuple(out))
    return ValidationReport(tuple(out))


# -- Hilbert series -------------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    coefficients: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: Dict[int, int]) -> "HilbertSeries":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coefficients)

    def __getitem__(self, d: int) -> int:
        return self.as_dict().get(d, 0)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.coefficients)

    @property
    def top(self) -> int:
        return self.coefficients[-1][0] if self.coefficients else 0

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        d = self.as_dict()
        for k, v in other.coefficients:
            d[k] = d.get(k, 0) + v
        return HilbertSeries.from_dict(d)

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        d: Dict[int, int] = {}
        for a, x in self.coefficients:
            for b, y in other.coefficients:
                d[a + b] = d.get(a + b, 0) + x * y
        return HilbertSeries.from_dict(d)

    def is_palindromic(self) -> bool:
        d, r = self.as_dict(), self.top
        return all(d.get(r - k, 0) == v for k, v in d.items())

    def __str__(self) -> str:
        terms = []
        for k, v in self.coefficients:
            c = "" if v == 1 and k else str(v)
            t = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(f"{c}{t}")
        return " + ".join(terms) or "0"


def hilbert_series(A: GradedAlgebra) -> HilbertSeries:
    return HilbertSeries.from_dict({d: len(ix) for d, ix in A.by_degree.items()})


# -- Poincare duality -------------------------------------------------------------


@dataclass(frozen=True)
class PDReport:
    is_pd: bool
    formal_dimension: int
    top_class: Optional[str] = None
    failure_witness: Optional[Tuple[str, int]] = None
    reason: str = ""


def check_poincare_duality(A: GradedAlgebra) -> PDReport:
    """Test nondegeneracy of every pairing H^i x H^(r-i) -> H^r.

    On failure ``failure_witness`` is ``(class, complementary degree)``: a
    nonzero class whose products with all classes of the complementary
    degree vanish in the top degree.
    """
    r = A.top_degree
    top = A.piece(r)
    if len(A.piece(0)) != 1:
        return PDReport(False, r, reason="not connected")
    if len(top) != 1:
        return PDReport(False, r, reason=f"top degree {r} has rank {len(top)}")
    v = top[0]
    vbit = 1 << v
    for d in A.by_degree:
        lo, hi = A.piece(d), A.piece(r - d)
        # column i: pairing of lo[i] against every element of hi
        cols = []
        for i in lo:
            c = 0
            for k, j in enumerate(hi):
                if A.table[i][j] & vbit:
                    c |= 1 << k
            cols.append(c)
        null = kernel(cols, len(lo))
        if null:
            x = 0
            for k in bits(null[0]):
                x |= 1 << lo[k]
            return PDReport(False, r, A.names[v], (A.element_str(x), r - d),
                            reason=f"pairing degenerate in degree {d}")
        if len(lo) != len(hi):
            return PDReport(False, r, A.names[v], None,
                            reason=f"rank mismatch in degrees {d}, {r - d}")
    return PDReport(True, r, A.names[v])


# -- generators ------------------------------------------------------------------


def decomposables(A: GradedAlgebra, d: int) -> EchelonBasis:
    """Echelon basis of the span of products of positive-degree classes in degree d."""
    eb = EchelonBasis()
    bd = A.by_degree
    for a in bd:
        if a <= 0 or a > d - a:
            continue
        b = d - a
        if b not in bd:
            continue
        for i in bd[a]:
            for j in bd[b]:
                eb.add(A.table[i][j])
    return eb


def indecomposable_basis(A: GradedAlgebra) -> List[int]:
    """Basis elements whose classes form a basis of the indecomposables."""
    gens = []
    for d in A.positive_degrees:
        eb = decomposables(A, d)
        for i in A.piece(d):
            if eb.add(1 << i):
                gens.append(i)
    return gens


def minimal_generators(A: GradedAlgebra) -> Tuple[int, Tuple[int, ...]]:
    """Number of algebra generators and their degrees (with multiplicity)."""
    degs = []
    for d in A.positive_degrees:
        degs += [d] * (len(A.piece(d)) - len(decomposables(A, d)))
    return len(degs), tuple(degs)


# -- invariants -----------------------------------------------------------------


@dataclass(frozen=True)
class InvariantSignature:
    hilbert: HilbertSeries
    generator_count: int
    generator_degrees: Tuple[int, ...]
    nilpotency_profile: Tuple[Tuple[int, Tuple[int, ...]], ...]
    product_rank_table: Tuple[Tuple[Tuple[int, int], int], ...]
    square_ranks: Tuple[Tuple[int, int], ...]
    connected: bool = True

    def sort_key(self) -> tuple:
        return (self.hilbert.coefficients, self.generator_degrees,
                self.nilpotency_profile, self.product_rank_table,
                self.square_ranks)


def _mult_map_rank(A: GradedAlgebra, i: int, j: int) -> int:
    """Rank of x in H^i |-> (y |-> xy) in Hom(H^j, H^(i+j))."""
    hi, hj = A.piece(i), A.piece(j)
    n = A.dim
    vecs = []
    for a in hi:
        v = 0
        for k, b in enumerate(hj):
            v |= A.table[a][b] << (n * k)
        vecs.append(v)
    return rank(vecs)


def canonical_signature(A: GradedAlgebra) -> InvariantSignature:
    count, gdegs = minimal_generators(A)
    nil = []
    for d in A.positive_degrees:
        eb = decomposables(A, d)
        if len(eb) == len(A.piece(d)):
            continue
        heights = sorted(A.height(x) for x in A.piece_elements(d)
                         if not eb.contains(x))
        nil.append((d, tuple(heights)))
    prt = []
    pos = A.positive_degrees
    for i in pos:
        for j in pos:
            if i + j in A.by_degree:
                prt.append(((i, j), _mult_map_rank(A, i, j)))
    sq = []
    for d in pos:
        if 2 * d in A.by_degree:
            sq.append((d, rank(A.mul(1 << a, 1 << a) for a in A.piece(d))))
    return InvariantSignature(hilbert_series(A), count, gdegs, tuple(nil),
                              tuple(prt), tuple(sq), len(A.piece(0)) == 1)


def total_rank(A: GradedAlgebra) -> int:
    return A.dim


def has_nonzero_product(A: GradedAlgebra) -> bool:
    """True when some product of two positive-degree classes is nonzero."""
    pos = [i for i, d in enumerate(A.degrees) if d > 0]
    return any(A.table[i][j] for i, j in combinations_with_replacement(pos, 2))
