"""Isomorphism search and canonical forms for graded algebras.

Both work through generating tuples: once images of a minimal generating
set are fixed, a graded algebra map is determined, and its behaviour on a
monomial basis decides whether it is an isomorphism. Algebras with several
components are split along their primitive degree-0 idempotents first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .algebra import (GradedAlgebra, canonical_signature, decomposables,
                      indecomposable_basis)
from .gf2 import EchelonBasis, bits, rank, span_elements

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialBasis:
    gens: Tuple[int, ...]
    exponents: Tuple[Exponent, ...]
    values: Tuple[int, ...]
    echelon: EchelonBasis

    def coords(self, x: int) -> int:
        rem, tag = self.echelon.reduce_tagged(x)
        if rem:
            raise ValueError("element outside the span of the monomial basis")
        return tag


def _monomials(A: GradedAlgebra, gens: Sequence[int]) -> List[Tuple[Exponent, int]]:
    """All exponent vectors with nonzero value, each listed once."""
    k = len(gens)
    start = (0,) * k
    out = [(start, A.unit)]
    stack = [(start, A.unit, 0)]
    while stack:
        e, val, last = stack.pop()
        for i in range(last, k):
            v = A.mul(val, gens[i])
            if v:
                e2 = e[:i] + (e[i] + 1,) + e[i + 1:]
                out.append((e2, v))
                stack.append((e2, v, i))
    return out


def _degree(A: GradedAlgebra, gdeg: Sequence[int], e: Exponent) -> int:
    return sum(a * b for a, b in zip(gdeg, e))


def monomial_basis(A: GradedAlgebra, gens: Sequence[int],
                   degree_free: bool = False) -> Optional[MonomialBasis]:
    """Greedy basis of monomials in ``gens`` for a fixed monomial order.

    The order is by degree then exponent vector, or, with ``degree_free``,
    by total exponent then exponent vector.  Returns None when ``gens`` do
    not generate ``A``.
    """
    gdeg = [A.degrees[next(bits(g))] for g in gens]
    mons = _monomials(A, gens)
    if degree_free:
        mons.sort(key=lambda m: (sum(m[0]), m[0]))
    else:
        mons.sort(key=lambda m: (_degree(A, gdeg, m[0]), m[0]))
    eb = EchelonBasis(track=True)
    exps, vals = [], []
    for e, v in mons:
        if eb.add(v, 1 << len(exps)):
            exps.append(e)
            vals.append(v)
            if len(exps) == A.dim:
                break
    if len(exps) != A.dim:
        return None
    return MonomialBasis(tuple(gens), tuple(exps), tuple(vals), eb)


def element_profile(A: GradedAlgebra, x: int) -> tuple:
    """Basis-independent data of a homogeneous element: degree, height and
    the rank of multiplication by ``x`` on each graded piece."""
    d = A.degrees[next(bits(x))]
    ranks = []
    for e in A.positive_degrees:
        if e + d in A.by_degree:
            ranks.append(rank(A.mul(x, 1 << j) for j in A.piece(e)))
    return (d, A.height(x), tuple(ranks))


def _candidates(A: GradedAlgebra, d: int) -> List[Tuple[int, tuple]]:
    dec = decomposables(A, d)
    return [(x, element_profile(A, x)) for x in A.piece_elements(d) if not dec.contains(x)]


def _generator_choices(A: GradedAlgebra, degrees: Sequence[int],
                       profiles: Optional[Sequence[tuple]] = None) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of elements, one per entry of ``degrees``, whose classes
    are independent modulo decomposables within each degree.  With
    ``profiles`` each entry must also have the given element profile."""
    cands = {d: _candidates(A, d) for d in set(degrees)}
    bases = {}
    for d in set(degrees):
        eb = EchelonBasis()
        eb.rows = dict(decomposables(A, d).rows)
        bases[d] = eb
    k = len(degrees)
    chosen: List[int] = []

    def rec(pos: int) -> Iterator[Tuple[int, ...]]:
        if pos == k:
            yield tuple(chosen)
            return
        d = degrees[pos]
        eb = bases[d]
        want = None if profiles is None else profiles[pos]
        for x, prof in cands[d]:
            if want is not None and prof != want:
                continue
            r = eb.reduce(x)
            if not r:
                continue
            saved = dict(eb.rows)
            eb.add(r)
            chosen.append(x)
            yield from rec(pos + 1)
            chosen.pop()
            eb.rows = saved

    yield from rec(0)


def _sorted_generators(A: GradedAlgebra) -> Tuple[int, ...]:
    return tuple(1 << i for i in indecomposable_basis(A))


@dataclass(frozen=True)
class Isomorphism:
    """A graded algebra isomorphism, given by the images of the basis of the
    source expressed in the basis of the target."""
    source: GradedAlgebra
    target: GradedAlgebra
    images: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        y = 0
        for i in bits(x):
            y ^= self.images[i]
        return y

    def inverse(self) -> "Isomorphism":
        eb = EchelonBasis(track=True)
        for i, c in enumerate(self.images):
            eb.add(c, 1 << i)
        inv = []
        for j in range(self.target.dim):
            rem, tag = eb.reduce_tagged(1 << j)
            assert rem == 0
            inv.append(tag)
        return Isomorphism(self.target, self.source, tuple(inv))

    def as_dict(self) -> Dict[str, str]:
        A, B = self.source, self.target
        return {A.names[i]: B.element_str(v) for i, v in enumerate(self.images)}


def is_isomorphism(A: GradedAlgebra, B: GradedAlgebra, images: Sequence[int]) -> bool:
    """Check that the linear map with the given basis images is a degree
    preserving, bijective, multiplicative map A -> B."""
    if A.dim != B.dim or len(images) != A.dim:
        return False
    eb = EchelonBasis()
    for i, v in enumerate(images):
        if not v or any(B.degrees[j] != A.degrees[i] for j in bits(v)):
            return False
        if not eb.add(v):
            return False

    def phi(x: int) -> int:
        y = 0
        for i in bits(x):
            y ^= images[i]
        return y

    for i in range(A.dim):
        for j in range(i, A.dim):
            if phi(A.table[i][j]) != B.mul(images[i], images[j]):
                return False
    return True


class _Plan:
    """Precomputed data for testing candidate generator images from ``A``."""

    def __init__(self, A: GradedAlgebra, gens: Sequence[int]):
        mb = monomial_basis(A, gens)
        if mb is None:
            raise ValueError("generators do not generate the algebra")
        self.A = A
        self.mb = mb
        n = A.dim
        self.exps = mb.exponents
        self.index = {e: i for i, e in enumerate(mb.exponents)}
        # product of monomials s, t in coordinates of the monomial basis
        self.pairs = []
        for i in range(n):
            for j in range(i, n):
                c = mb.coords(A.mul(mb.values[i], mb.values[j]))
                e = tuple(a + b for a, b in zip(mb.exponents[i], mb.exponents[j]))
                self.pairs.append((e, c))
        self.basis_coords = [mb.coords(1 << i) for i in range(n)]

    def try_images(self, B: GradedAlgebra, h: Sequence[int]) -> Optional[Tuple[int, ...]]:
        memo: Dict[Exponent, int] = {}
        k = len(h)

        def ev(e: Exponent) -> int:
            v = memo.get(e)
            if v is not None:
                return v
            if not any(e):
                v = B.unit
            else:
                i = next(i for i in range(k) if e[i])
                v = B.mul(ev(e[:i] + (e[i] - 1,) + e[i + 1:]), h[i])
            memo[e] = v
            return v

        imgs = [ev(e) for e in self.exps]
        eb = EchelonBasis()
        for v in imgs:
            if not eb.add(v):
                return None
        for e, c in self.pairs:
            y = 0
            for t in bits(c):
                y ^= imgs[t]
            if y != ev(e):
                return None
        out = []
        for c in self.basis_coords:
            y = 0
            for t in bits(c):
                y ^= imgs[t]
            out.append(y)
        return tuple(out)


@lru_cache(maxsize=4096)
def _plan(A: GradedAlgebra) -> _Plan:
    return _Plan(A, _sorted_generators(A))


# -- components -----------------------------------------------------------------


def primitive_idempotents(A: GradedAlgebra) -> List[int]:
    """Minimal nonzero idempotents of the degree-0 piece, in increasing order."""
    zero = [1 << i for i in A.piece(0)]
    idem = [e for e in span_elements(zero) if e and A.mul(e, e) == e]
    return sorted(e for e in idem if not any(f != e and A.mul(e, f) == f for f in idem))


def components(A: GradedAlgebra) -> List[Tuple[GradedAlgebra, Tuple[int, ...]]]:
    """The connected summands ``eA``, each with the elements of ``A`` that
    form its basis (unit first, then by degree)."""
    out = []
    for k, e in enumerate(primitive_idempotents(A)):
        eb = EchelonBasis()
        cols = []
        for d in sorted(A.by_degree):
            for i in A.piece(d):
                v = A.mul(e, 1 << i)
                if v and eb.add(v):
                    cols.append(v)
        track = EchelonBasis(track=True)
        for j, c in enumerate(cols):
            track.add(c, 1 << j)
        n = len(cols)
        table = tuple(tuple(track.reduce_tagged(A.mul(cols[i], cols[j]))[1] for j in range(n))
                      for i in range(n))
        names = tuple(f"c{k}.{j}" for j in range(n))
        degs = tuple(A.degrees[next(bits(c))] for c in cols)
        out.append((GradedAlgebra(names, degs, table, True), tuple(cols)))
    return out


def _split(A: GradedAlgebra) -> bool:
    return len(A.piece(0)) > 1


def _component_isomorphism(A: GradedAlgebra, B: GradedAlgebra) -> Optional["Isomorphism"]:
    ca, cb = components(A), components(B)
    if len(ca) != len(cb):
        return None
    maps: List[Optional[Tuple[int, "Isomorphism"]]] = [None] * len(ca)
    used = [False] * len(cb)

    def rec(k: int) -> bool:
        if k == len(ca):
            return True
        for t, (C, _) in enumerate(cb):
            if not used[t]:
                phi = find_isomorphism(ca[k][0], C)
                if phi is not None:
                    used[t], maps[k] = True, (t, phi)
                    if rec(k + 1):
                        return True
                    used[t] = False
        return False

    if not rec(0):
        return None
    # image of each A-component basis element, written in B's basis
    track = EchelonBasis(track=True)
    col_images = []
    for k, (_, cols) in enumerate(ca):
        t, phi = maps[k]
        bcols = cb[t][1]
        for j, c in enumerate(cols):
            track.add(c, 1 << len(col_images))
            y = 0
            for u in bits(phi.images[j]):
                y ^= bcols[u]
            col_images.append(y)
    images = []
    for i in range(A.dim):
        y = 0
        for u in bits(track.reduce_tagged(1 << i)[1]):
            y ^= col_images[u]
        images.append(y)
    return Isomorphism(A, B, tuple(images))


def find_isomorphism(A: GradedAlgebra, B: GradedAlgebra,
                     check_signature: bool = True) -> Optional[Isomorphism]:
    """Search for an isomorphism A -> B.

    Images of a fixed minimal generating set of ``A`` range over all
    generating tuples of ``B`` of matching degrees; components are matched
    one by one.
    """
    if A.dim != B.dim:
        return None
    if check_signature and canonical_signature(A) != canonical_signature(B):
        return None
    if _split(A) or _split(B):
        return _component_isomorphism(A, B) if _split(A) and _split(B) else None
    gens = _sorted_generators(A)
    gdeg = [A.degrees[next(bits(g))] for g in gens]
    if sorted(gdeg) != sorted(B.degrees[next(bits(g))] for g in _sorted_generators(B)):
        return None
    plan = _plan(A)
    profiles = [element_profile(A, g) for g in gens]
    for h in _generator_choices(B, gdeg, profiles):
        imgs = plan.try_images(B, h)
        if imgs is not None:
            return Isomorphism(A, B, imgs)
    return None


def are_isomorphic(A: GradedAlgebra, B: GradedAlgebra) -> Optional[Isomorphism]:
    return find_isomorphism(A, B)


def _profile_tuples(A: GradedAlgebra, gdeg: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """One generating tuple per achievable sequence of element profiles."""
    prof = {x: pr for d in set(gdeg) for x, pr in _candidates(A, d)}
    seen = set()
    for h in _generator_choices(A, gdeg):
        key = tuple(prof[x] for x in h)
        if key not in seen:
            seen.add(key)
            yield h


def canonical_form(A: GradedAlgebra, degree_free: bool = False) -> tuple:
    """Lexicographically least monomial-basis multiplication table over all
    generating tuples of ``A``; equal exactly for isomorphic algebras.

    With ``degree_free`` the degrees themselves are dropped and only the
    order relations between generator degrees are kept, so concrete
    instances of one parametric family share the form. For several
    components this is the sorted tuple of their forms.
    """
    if _split(A):
        return ("components", tuple(sorted(canonical_form(C, degree_free) for C, _ in components(A))))
    gens = _sorted_generators(A)
    gdeg = tuple(A.degrees[next(bits(g))] for g in gens)
    prof = {x: pr for d in set(gdeg) for x, pr in _candidates(A, d)}
    least = min(tuple(prof[x] for x in h) for h in _profile_tuples(A, gdeg))
    best = None
    for h in _generator_choices(A, gdeg, least):
        mb = monomial_basis(A, h, degree_free=degree_free)
        if mb is None:
            continue
        n = A.dim
        tab = tuple(mb.coords(A.mul(mb.values[i], mb.values[j]))
                    for i in range(n) for j in range(i, n))
        key = (mb.exponents, tab)
        if best is None or key < best:
            best = key
    if degree_free:
        ranks = sorted(set(gdeg))
        shape = tuple(ranks.index(d) for d in gdeg)
        return (len(A.piece(0)), shape, best)
    return (tuple(sorted(A.degrees)), gdeg, best)


_LETTERS = ("x", "y", "z", "w")


def _mono_str(names: Sequence[str], e: Exponent) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
    return "*".join(parts) if parts else "1"


def presentation_of(A: GradedAlgebra) -> Tuple[List[Tuple[str, int]], List[str]]:
    """Generators and relations of a connected algebra.

    The relations form a Groebner basis for the degree-then-exponent
    order: one per minimal monomial outside the greedy monomial basis,
    rewritten in that basis.
    """
    gens = _sorted_generators(A)
    k = len(gens)
    names = list(_LETTERS[:k]) if k <= len(_LETTERS) else [f"x{i + 1}" for i in range(k)]
    gdeg = [A.degrees[next(bits(g))] for g in gens]
    mb = monomial_basis(A, gens)
    if mb is None:
        raise ValueError("algebra is not generated by its indecomposables")
    std = set(mb.exponents)
    value = dict(zip(mb.exponents, mb.values))
    rels = []
    seen = set()
    for e in sorted(std, key=lambda e: (_degree(A, gdeg, e), e)):
        for i in range(k):
            m = e[:i] + (e[i] + 1,) + e[i + 1:]
            if m in std or m in seen:
                continue
            if any(m[j] and m[:j] + (m[j] - 1,) + m[j + 1:] not in std for j in range(k)):
                continue
            seen.add(m)
            v = A.mul(value[e], gens[i])
            terms = [_mono_str(names, mb.exponents[t]) for t in bits(mb.coords(v))]
            rels.append((_degree(A, gdeg, m), m, " + ".join([_mono_str(names, m)] + terms)))
    rels.sort()
    return list(zip(names, gdeg)), [r for _, _, r in rels]


def presentation_string(A: GradedAlgebra) -> str:
    gens, rels = presentation_of(A)
    if not gens:
        return "Z2"
    head = "Z2[" + ", ".join(f"{n}|{d}" for n, d in gens) + "]"
    return head + "/(" + ", ".join(rels) + ")"
