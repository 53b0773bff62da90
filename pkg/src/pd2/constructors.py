"""Constructors: truncated polynomial algebras, products, connected sums,
wedges, disjoint unions and quotients of polynomial rings by presentations."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import GradedAlgebra, check_poincare_duality, make_algebra
from .gf2 import EchelonBasis, bits

DEFAULT_DEGREE_CAP = 64


def _power_name(g: str, k: int) -> str:
    if k == 0:
        return "1"
    return g if k == 1 else f"{g}^{k}"


def make_truncated(q: int, h: int, gen: str = "x") -> GradedAlgebra:
    """P^h(q): one generator of degree q with x^(h+1) = 0."""
    if q < 1 or h < 1:
        raise ValueError("truncated algebra needs q >= 1 and h >= 1")
    n = h + 1
    prods = {}
    for i in range(n):
        for j in range(n):
            if i + j <= h:
                prods[(i, j)] = 1 << (i + j)
    return make_algebra([_power_name(gen, k) for k in range(n)],
                        [k * q for k in range(n)], prods)


def sphere(q: int, gen: str = "s") -> GradedAlgebra:
    return make_truncated(q, 1, gen)


def point() -> GradedAlgebra:
    return make_algebra(["1"], [0], {(0, 0): 1})


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def _tokens(names: Sequence[str]) -> set:
    out = set()
    for nm in names:
        out.update(_TOKEN_RE.findall(nm))
    return out


def _rename_apart(A: GradedAlgebra, B: GradedAlgebra) -> List[str]:
    """B's basis names with generator symbols primed away from A's symbols."""
    taken = _tokens(A.names) | _tokens(B.names)
    clash = _tokens(A.names) & _tokens(B.names)
    mapping = {}
    for t in sorted(clash):
        new = t + "'"
        while new in taken:
            new += "'"
        taken.add(new)
        mapping[t] = new
    return [_TOKEN_RE.sub(lambda m: mapping.get(m.group(0), m.group(0)), nm)
            for nm in B.names]


def tensor_product(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    """Graded tensor product (no signs in characteristic 2)."""
    bnames = _rename_apart(A, B)
    names, degs, pairs = [], [], []
    for i in range(A.dim):
        for j in range(B.dim):
            a, b = A.names[i], bnames[j]
            if A.degrees[i] == 0 and a == "1":
                nm = b
            elif B.degrees[j] == 0 and b == "1":
                nm = a
            else:
                nm = f"{a}*{b}"
            names.append(nm)
            degs.append(A.degrees[i] + B.degrees[j])
            pairs.append((i, j))
    m = B.dim
    n = len(pairs)
    table = [[0] * n for _ in range(n)]
    for p, (i1, j1) in enumerate(pairs):
        for q, (i2, j2) in enumerate(pairs):
            x, y = A.table[i1][i2], B.table[j1][j2]
            v = 0
            for a in bits(x):
                for b in bits(y):
                    v ^= 1 << (a * m + b)
            table[p][q] = v
    return GradedAlgebra(tuple(names), tuple(degs), tuple(tuple(r) for r in table),
                         A.connected and B.connected)


def _middle(A: GradedAlgebra, r: Optional[int] = None) -> List[int]:
    top = A.top_degree if r is None else r
    return [i for i, d in enumerate(A.degrees) if 0 < d < top]


def connected_sum(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    """A # B for connected Poincare duality algebras of equal dimension."""
    pa, pb = check_poincare_duality(A), check_poincare_duality(B)
    if not pa.is_pd or not pb.is_pd:
        raise ValueError("connected sum needs Poincare duality algebras")
    if pa.formal_dimension != pb.formal_dimension:
        raise ValueError(f"formal dimensions differ: {pa.formal_dimension} vs "
                         f"{pb.formal_dimension}")
    r = pa.formal_dimension
    ma, mb = _middle(A), _middle(B)
    bnames = _rename_apart(A, B)
    names = ["1"] + [A.names[i] for i in ma] + [bnames[i] for i in mb]
    degs = [0] + [A.degrees[i] for i in ma] + [B.degrees[i] for i in mb] + [r]
    top_name = A.names[A.piece(r)[0]]
    names.append(top_name)
    n = len(names)
    top = n - 1
    amap = {A.piece(0)[0]: 0, A.piece(r)[0]: top}
    amap.update({i: 1 + k for k, i in enumerate(ma)})
    bmap = {B.piece(0)[0]: 0, B.piece(r)[0]: top}
    bmap.update({i: 1 + len(ma) + k for k, i in enumerate(mb)})

    def push(v: int, mp: Dict[int, int]) -> int:
        out = 0
        for i in bits(v):
            out ^= 1 << mp[i]
        return out

    table = [[0] * n for _ in range(n)]
    for X, mp in ((A, amap), (B, bmap)):
        for i, a in mp.items():
            for j, b in mp.items():
                table[a][b] = push(X.table[i][j], mp)
    return GradedAlgebra(tuple(names), tuple(degs), tuple(tuple(r_) for r_ in table))


def wedge_sum(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    """One-point union: shared unit, positive parts side by side, zero cross products."""
    pa = [i for i, d in enumerate(A.degrees) if d > 0]
    pb = [i for i, d in enumerate(B.degrees) if d > 0]
    bnames = _rename_apart(A, B)
    names = ["1"] + [A.names[i] for i in pa] + [bnames[i] for i in pb]
    degs = [0] + [A.degrees[i] for i in pa] + [B.degrees[i] for i in pb]
    amap = {A.piece(0)[0]: 0, **{i: 1 + k for k, i in enumerate(pa)}}
    bmap = {B.piece(0)[0]: 0, **{i: 1 + len(pa) + k for k, i in enumerate(pb)}}
    n = len(names)
    table = [[0] * n for _ in range(n)]
    for X, mp in ((A, amap), (B, bmap)):
        for i, a in mp.items():
            for j, b in mp.items():
                v = 0
                for t in bits(X.table[i][j]):
                    v ^= 1 << mp[t]
                table[a][b] = v
    return GradedAlgebra(tuple(names), tuple(degs), tuple(tuple(r) for r in table))


def disjoint_union(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    """Ring product A x B, the cohomology of a disjoint union."""
    names = list(A.names)
    used = set(names)
    for nm in _rename_apart(A, B):
        # units and other symbol-free names still clash after renaming
        while nm in used:
            nm += "'"
        used.add(nm)
        names.append(nm)
    degs = list(A.degrees) + list(B.degrees)
    n, off = len(names), A.dim
    table = [[0] * n for _ in range(n)]
    for i in range(A.dim):
        for j in range(A.dim):
            table[i][j] = A.table[i][j]
    for i in range(B.dim):
        for j in range(B.dim):
            table[off + i][off + j] = B.table[i][j] << off
    return GradedAlgebra(tuple(names), tuple(degs), tuple(tuple(r) for r in table),
                         connected=False)


def disjoint_union_all(parts: Sequence[GradedAlgebra]) -> GradedAlgebra:
    out = parts[0]
    for p in parts[1:]:
        out = disjoint_union(out, p)
    return out


# -- presentations ---------------------------------------------------------------

Monomial = Tuple[int, ...]


class PresentationError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[Tuple[str, int], ...]
    relations: Tuple[Tuple[Monomial, ...], ...] = ()

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(g for g, _ in self.generators)

    def degree(self, m: Monomial) -> int:
        return sum(e * d for e, (_, d) in zip(m, self.generators))

    def monomial_str(self, m: Monomial) -> str:
        parts = [_power_name(g, e) for e, (g, _) in zip(m, self.generators) if e]
        return "*".join(parts) or "1"

    def to_text(self) -> str:
        lines = [f"gen {g} {d};" for g, d in self.generators]
        for rel in self.relations:
            lines.append("rel " + " + ".join(self.monomial_str(m) for m in rel) + ";")
        return "\n".join(lines) + "\n"


def presentation(generators: Sequence[Tuple[str, int]], *relations: str) -> Presentation:
    """Build a presentation from generator degrees and relation strings
    such as ``"x^4 + y^2"``."""
    names = [g for g, _ in generators]
    rels = tuple(_parse_polynomial(r, names, 1, 1) for r in relations)
    return Presentation(tuple((g, int(d)) for g, d in generators), rels)


_MONO_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)(?:\^(\d+))?$")


def _parse_polynomial(text: str, names: Sequence[str], line: int, col: int) -> Tuple[Monomial, ...]:
    terms: Dict[Monomial, int] = {}
    offset = 0
    for raw in text.split("+"):
        term = raw.strip()
        tcol = col + offset + (len(raw) - len(raw.lstrip()))
        offset += len(raw) + 1
        if not term:
            raise PresentationError("empty term", line, tcol)
        exps = [0] * len(names)
        for factor in term.split("*"):
            f = factor.strip()
            m = _MONO_RE.match(f)
            if not m:
                raise PresentationError(f"malformed factor '{f}'", line, tcol)
            g, p = m.group(1), m.group(2)
            if g not in names:
                raise PresentationError(f"unknown generator '{g}'", line, tcol)
            exps[names.index(g)] += int(p) if p else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) ^ 1
    return tuple(sorted(k for k, v in terms.items() if v))


def parse_presentation(text: str) -> Presentation:
    """Parse ``gen <name> <degree>;`` and ``rel <m1> [+ <m2> ...];`` statements."""
    gens: List[Tuple[str, int]] = []
    rels: List[Tuple[Monomial, ...]] = []
    pending: List[Tuple[str, int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        code = line.split("#", 1)[0]
        pos = 0
        for stmt in code.split(";"):
            start = pos
            pos += len(stmt) + 1
            s = stmt.strip()
            if not s:
                continue
            col = start + (len(stmt) - len(stmt.lstrip())) + 1
            word, _, rest = s.partition(" ")
            if word == "gen":
                parts = rest.split()
                if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                    raise PresentationError("expected 'gen <name> <degree>'", lineno, col)
                name, d = parts[0], int(parts[1])
                if not _MONO_RE.match(name) or "^" in name:
                    raise PresentationError(f"bad generator name '{name}'", lineno, col)
                if d < 1:
                    raise PresentationError("generator degree must be positive", lineno, col)
                if name in (g for g, _ in gens):
                    raise PresentationError(f"duplicate generator '{name}'", lineno, col)
                if pending:
                    raise PresentationError("generators must precede relations", lineno, col)
                gens.append((name, d))
            elif word == "rel":
                pending.append((rest, lineno, col + 4))
            else:
                raise PresentationError(f"unknown statement '{word}'", lineno, col)
        if code.strip() and not code.rstrip().endswith(";"):
            raise PresentationError("missing ';'", lineno, len(code.rstrip()) + 1)
    names = [g for g, _ in gens]
    for body, ln, col in pending:
        rels.append(_parse_polynomial(body, names, ln, col))
    return Presentation(tuple(gens), tuple(rels))


def _monomials_of_degree(degs: Sequence[int], d: int) -> List[Monomial]:
    out: List[Monomial] = []

    def rec(i: int, rem: int, acc: List[int]) -> None:
        if i == len(degs):
            if rem == 0:
                out.append(tuple(acc))
            return
        for e in range(rem // degs[i] + 1):
            acc.append(e)
            rec(i + 1, rem - e * degs[i], acc)
            acc.pop()

    rec(0, d, [])
    return out


def from_presentation(P: Presentation, degree_cap: Optional[int] = None) -> GradedAlgebra:
    """Quotient of F2[generators] by the homogeneous ideal of the relations.

    Works degree by degree with exact linear algebra: the ideal in degree d
    is spanned by monomial multiples of the relations.  Stops once a run of
    zero degrees as long as the largest generator degree is seen.
    """
    degs = [d for _, d in P.generators]
    if not degs:
        return GradedAlgebra(("1",), (0,), ((1,),))
    rel_deg = []
    for rel in P.relations:
        ds = {P.degree(m) for m in rel}
        if len(ds) > 1:
            raise PresentationError("relation is not homogeneous: "
                                    + " + ".join(P.monomial_str(m) for m in rel))
        if rel:
            rel_deg.append((rel, ds.pop()))
    width = max(degs)
    if degree_cap is None:
        degree_cap = DEFAULT_DEGREE_CAP * width
    # per degree: monomial list, index, echelon basis of the ideal
    normal: Dict[int, Tuple[List[Monomial], Dict[Monomial, int], EchelonBasis, List[int]]] = {}
    zero_run = 0
    d = 0
    while True:
        if d > degree_cap:
            raise PresentationError(f"quotient not finite below degree cap {degree_cap}")
        mons = _monomials_of_degree(degs, d)
        # highest bit = largest monomial, so pivots eliminate large monomials
        mons.sort()
        idx = {m: i for i, m in enumerate(mons)}
        eb = EchelonBasis()
        for rel, e in rel_deg:
            if e > d:
                continue
            for m in _monomials_of_degree(degs, d - e):
                v = 0
                for t in rel:
                    v ^= 1 << idx[tuple(a + b for a, b in zip(m, t))]
                eb.add(v)
        std = [i for i in range(len(mons)) if i not in eb.rows]
        normal[d] = (mons, idx, eb, std)
        if std:
            zero_run = 0
        else:
            zero_run += 1
            if zero_run >= width:
                break
        d += 1
    names, bdegs, where = [], [], {}
    for dd in sorted(normal):
        mons, idx, eb, std = normal[dd]
        for i in std:
            where[(dd, i)] = len(names)
            names.append(P.monomial_str(mons[i]))
            bdegs.append(dd)

    def reduce(m: Monomial) -> int:
        dd = P.degree(m)
        if dd not in normal:
            return 0
        mons, idx, eb, std = normal[dd]
        rem = eb.normal_form(1 << idx[m])
        out = 0
        for i in bits(rem):
            out ^= 1 << where[(dd, i)]
        return out

    basis_mons = []
    for dd in sorted(normal):
        mons, _, _, std = normal[dd]
        basis_mons += [mons[i] for i in std]
    n = len(basis_mons)
    table = tuple(tuple(reduce(tuple(a + b for a, b in zip(basis_mons[i], basis_mons[j])))
                        for j in range(n)) for i in range(n))
    return GradedAlgebra(tuple(names), tuple(bdegs), table)
