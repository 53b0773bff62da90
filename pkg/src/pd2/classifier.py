"""Exhaustive classification of candidate fixed-point cohomology rings.

Rank ``2^k`` connected rings are searched on the sphere-product degree
scaffold: middle classes ``u_1 .. u_m`` (``m = 2^k - 2``) sorted by degree,
a top class ``v``, and forced duality pairings ``u_i u_{m+1-i} = v``.
Smaller ranks are searched with every product free.  Runs work over
concrete degrees bounded by the largest generator degree.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import (Callable, Dict, FrozenSet, Iterable, Iterator, List,
                    Mapping, Optional, Sequence, Tuple)

from .algebra import (GradedAlgebra, InvariantSignature, canonical_signature,
                      check_poincare_duality, has_nonzero_product,
                      hilbert_series, minimal_generators)
from .enumerate import TableProblem, enumerate_algebras
from .gf2 import EchelonBasis, bits
from .iso import canonical_form, find_isomorphism

# --------------------------------------------------------------------------
# constraints

REALIZABILITY_VARIANTS: Dict[str, Dict[int, FrozenSet[int]]] = {
    "paper-statement": {2: frozenset({1, 2, 4, 8})},
    "paper-proof": {2: frozenset({1, 2, 3, 4})},
    "none": {},
}


def _lower_generated(A: GradedAlgebra, d: int, target: int) -> EchelonBasis:
    """Span in degree ``target`` of the subalgebra generated by classes of
    degree below ``d``."""
    low = [1 << i for e in A.positive_degrees if e < d for i in A.piece(e)]
    spans: Dict[int, List[int]] = {0: [A.unit]}
    for e in range(1, target + 1):
        eb = EchelonBasis()
        for g in low:
            ge = A.degrees[next(bits(g))]
            for y in spans.get(e - ge, ()):
                eb.add(A.mul(g, y))
        spans[e] = list(eb.rows.values())
    out = EchelonBasis()
    for y in spans[target]:
        out.add(y)
    return out


def _splits_off(A: GradedAlgebra, x: int, d: int) -> bool:
    """True when ``x`` kills every class of positive degree below ``d``."""
    return all(A.mul(x, 1 << j) == 0 for e in A.positive_degrees if e < d for j in A.piece(e))


def realizable(A: GradedAlgebra, filt: Mapping[int, FrozenSet[int]]) -> bool:
    """Degree filter on classes that behave like truncated polynomial generators.

    A class ``x`` of degree ``d`` with ``x^2 != 0`` trips the filter when
    ``x^2`` lies outside the subalgebra generated by classes of degree below
    ``d``, or when ``x`` annihilates every class of lower positive degree (so
    that it spans a projective-plane summand on its own).  For the largest
    key ``h`` of ``filt`` at most the height of such a class, ``d`` must lie
    in ``filt[h]``.
    """
    if not filt:
        return True
    keys = sorted(filt)
    for d in A.positive_degrees:
        if 2 * d not in A.by_degree:
            continue
        forced = _lower_generated(A, d, 2 * d)
        h = 0
        for x in A.piece_elements(d):
            sq = A.mul(x, x) if x else 0
            if sq and (not forced.contains(sq) or _splits_off(A, x, d)):
                h = max(h, A.height(x))
        applicable = [k for k in keys if k <= h]
        if applicable and d not in filt[applicable[-1]]:
            return False
    return True


@dataclass(frozen=True)
class EnumerationConstraints:
    require_pd: bool = True
    generator_bound: int = 3
    realizability: Tuple[Tuple[int, FrozenSet[int]], ...] = tuple(
        REALIZABILITY_VARIANTS["paper-statement"].items())
    rank_tail_source: Optional[Tuple[int, int, int]] = None
    max_generator_degree: Optional[int] = None
    require_nonzero_product: bool = False

    def __post_init__(self) -> None:
        if self.generator_bound < 1:
            raise ValueError("generator_bound must be at least 1")
        if any(not s for _, s in self.realizability):
            raise ValueError("realizability sets must be nonempty")

    @classmethod
    def with_variant(cls, variant: str = "paper-statement", **kw) -> "EnumerationConstraints":
        if variant not in REALIZABILITY_VARIANTS:
            raise ValueError(f"unknown realizability variant {variant!r}")
        return cls(realizability=tuple(REALIZABILITY_VARIANTS[variant].items()), **kw)

    @property
    def filter_map(self) -> Dict[int, FrozenSet[int]]:
        return dict(self.realizability)

    def accepts(self, A: GradedAlgebra) -> bool:
        count, degs = minimal_generators(A)
        if count > self.generator_bound:
            return False
        if self.max_generator_degree is not None and degs and max(degs) > self.max_generator_degree:
            return False
        if self.require_pd and not check_poincare_duality(A).is_pd:
            return False
        if self.require_nonzero_product and not has_nonzero_product(A):
            return False
        if not realizable(A, self.filter_map):
            return False
        if self.rank_tail_source is not None and not check_rank_tail_inequality(A, self.rank_tail_source).ok:
            return False
        return True


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("PD2_THREADS", "1")))
    except ValueError:
        return 1


# --------------------------------------------------------------------------
# rank tail


@dataclass(frozen=True)
class TailReport:
    ok: bool
    failing_j: Optional[int] = None
    fixed_tail: Optional[int] = None
    space_tail: Optional[int] = None


def sphere_product_betti(degrees: Sequence[int]) -> Dict[int, int]:
    out = {0: 1}
    for d in degrees:
        new: Dict[int, int] = {}
        for e, c in out.items():
            new[e] = new.get(e, 0) + c
            new[e + d] = new.get(e + d, 0) + c
        out = new
    return out


def check_rank_tail_inequality(F: GradedAlgebra, X_degrees: Sequence[int]) -> TailReport:
    """Compare tail sums of ranks of F with those of a product of spheres."""
    fx = hilbert_series(F).as_dict()
    xx = sphere_product_betti(X_degrees)
    top = max(max(fx), max(xx))
    for j in range(0, top + 1):
        a = sum(c for d, c in fx.items() if d >= j)
        b = sum(c for d, c in xx.items() if d >= j)
        if a > b:
            return TailReport(False, j, a, b)
    return TailReport(True)


# --------------------------------------------------------------------------
# profiles


@dataclass(frozen=True)
class StructureProfile:
    q: Tuple[int, ...]
    r: int

    @property
    def degrees(self) -> Tuple[int, ...]:
        return (0,) + self.q + (self.r,)

    @property
    def k(self) -> int:
        return (len(self.q) + 2).bit_length() - 1

    def __getattr__(self, name: str):
        if len(name) > 1 and name[0] == "q" and name[1:].isdigit():
            i = int(name[1:])
            if 1 <= i <= len(self.q):
                return self.q[i - 1]
        raise AttributeError(name)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.q)) + f"; r={self.r})"


def derive_profile(q1: int, q2: int, q3: int, r: int) -> StructureProfile:
    """Complete ``(q1, q2, q3, r)`` to the rank-8 scaffold degrees."""
    checks = [(0 < q1, "0 < q1"), (q1 <= q2, "q1 <= q2"), (q2 <= q3, "q2 <= q3"),
              (q3 <= r - q3, "q3 <= r-q3")]
    for ok, name in checks:
        if not ok:
            raise ValueError(f"profile violates {name}: (q1,q2,q3,r) = ({q1},{q2},{q3},{r})")
    return StructureProfile((q1, q2, q3, r - q3, r - q2, r - q1), r)


def _sum_degrees(degs: Sequence[int]) -> set:
    pos = sorted(set(d for d in degs if d > 0))
    return {a + b for i, a in enumerate(pos) for b in pos[i:]}


def _generator_lower_bound(degs: Sequence[int], pairs: Iterable[Tuple[int, int]]) -> Dict[int, int]:
    """Per degree, classes that no product in ``pairs`` can reach.

    ``pairs`` are index pairs into ``degs`` whose product may be nonzero.
    """
    reach: Dict[int, int] = {}
    for i, j in pairs:
        d = degs[i] + degs[j]
        reach[d] = reach.get(d, 0) + 1
    count: Dict[int, int] = {}
    for d in degs:
        if d > 0:
            count[d] = count.get(d, 0) + 1
    return {d: c - reach.get(d, 0) for d, c in count.items() if c > reach.get(d, 0)}


def _lower_halves(h: int, bound: int, gen_bound: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing degree sequences of length ``h`` in which every entry is
    either a sum of two earlier entries or one of at most ``gen_bound``
    generator slots of degree at most ``bound``."""
    def rec(seq: List[int], gens: int) -> Iterator[Tuple[int, ...]]:
        if len(seq) == h:
            yield tuple(seq)
            return
        lo = seq[-1] if seq else 1
        sums = {a + b for i, a in enumerate(seq) for b in seq[i:]}
        for d in range(lo, cap + 1):
            if d in sums:
                yield from rec(seq + [d], gens)
            elif d <= bound and gens < gen_bound:
                yield from rec(seq + [d], gens + 1)
    yield from rec([], 0)


def sphere_scaffold_pairs(k: int) -> Dict[str, List[Tuple[int, int]]]:
    """Index pairs (1-based middle indices) by their role on the scaffold."""
    m = 2 ** k - 2
    free, paired, zero, squares = [], [], [], []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            if i == j:
                squares.append((i, i))
            elif i + j == m + 1:
                paired.append((i, j))
            elif i + j > m + 1:
                zero.append((i, j))
            else:
                free.append((i, j))
    return {"free": free, "paired": paired, "zero": zero, "squares": squares}


RANK8_FREE_PAIRS: Tuple[Tuple[int, int], ...] = tuple(sphere_scaffold_pairs(3)["free"])


def _possible_pairs(k: int, q: Sequence[int], r: int, free_ok: Callable[[Tuple[int, int]], bool]):
    m = 2 ** k - 2
    degs = (0,) + tuple(q) + (r,)
    roles = sphere_scaffold_pairs(k)
    out = list(roles["paired"])
    out += [p for p in roles["free"] if free_ok(p) and degs[p[0]] + degs[p[1]] != r]
    for i, _ in roles["squares"]:
        if i <= m // 2 or 2 * degs[i] == r:
            out.append((i, i))
    return degs, out


def sphere_profiles(k: int, bound: int, gen_bound: int = 3, q1: Optional[int] = None,
                    free_ok: Callable[[Tuple[int, int]], bool] = lambda p: True,
                    require_free_targets: bool = False) -> List[StructureProfile]:
    """Degree scaffolds of rank ``2^k`` with generator degrees at most ``bound``.

    A connected algebra with at most ``gen_bound`` generators of degree at
    most ``bound`` has top degree at most ``(2^k - 1) * bound`` since a
    nonzero monomial in the top degree has that many distinct-degree
    nonzero divisors.  Profiles are discarded when the products allowed by
    the scaffold cannot reach enough classes.
    """
    m = 2 ** k - 2
    h = m // 2
    rmax = (2 ** k - 1) * bound
    out = []
    for low in _lower_halves(h, bound, gen_bound, rmax // 2):
        if q1 is not None and low[0] != q1:
            continue
        for r in range(2 * low[-1], rmax + 1):
            q = low + tuple(r - d for d in reversed(low))
            degs, pairs = _possible_pairs(k, q, r, free_ok)
            if require_free_targets:
                present = set(degs)
                if any(degs[i] + degs[j] not in present
                       for i, j in sphere_scaffold_pairs(k)["free"] if free_ok((i, j))):
                    continue
            lb = _generator_lower_bound(degs, pairs)
            if sum(lb.values()) > gen_bound or any(d > bound for d in lb):
                continue
            out.append(StructureProfile(q, r))
    return out


def sphere_problem(profile: StructureProfile, mode: Mapping[Tuple[int, int], str],
                   values: str = "basis") -> TableProblem:
    """Search space on the scaffold; ``mode`` maps free pairs to ``zero``,
    ``nonzero`` or ``any`` (missing pairs are ``any``).

    With ``values="basis"`` every free product and square is zero or a
    single basis element; with ``values="span"`` it may be any element of
    the target degree.

    Bases of complementary degrees are taken dual to each other, which
    PD always permits, so a free product landing in the top degree is zero.
    """
    k = profile.k
    m = 2 ** k - 2
    degs = profile.degrees
    v = 1 << (m + 1)
    roles = sphere_scaffold_pairs(k)
    prob = TableProblem(degrees=degs)
    prob.names = ("1",) + tuple(f"u{i}" for i in range(1, m + 1)) + ("v",)
    for i in range(1, m + 2):
        prob.fixed[(i, m + 1)] = 0
    for p in roles["paired"]:
        prob.fixed[p] = v
    for p in roles["zero"]:
        prob.fixed[p] = 0
    if values not in ("basis", "span"):
        raise ValueError("values must be 'basis' or 'span'")

    def targets(p: Tuple[int, int]) -> Tuple[int, ...]:
        d = degs[p[0]] + degs[p[1]]
        if values == "span":
            return tuple(x for x in prob.piece_elements(d) if x)
        return tuple(1 << t for t in range(len(degs)) if degs[t] == d)

    for i, _ in roles["squares"]:
        if i > m // 2 and 2 * degs[i] != profile.r:
            prob.fixed[(i, i)] = 0
        else:
            prob.choices[(i, i)] = (0,) + targets((i, i))
    for p in roles["free"]:
        how = mode.get(p, "any")
        if degs[p[0]] + degs[p[1]] == profile.r:
            prob.fixed[p] = 0
            if how == "nonzero":
                prob.choices[p] = ()
                del prob.fixed[p]
        elif how == "zero":
            prob.fixed[p] = 0
        elif how == "nonzero":
            prob.choices[p] = targets(p)
        else:
            prob.choices[p] = (0,) + targets(p)
    return prob


CupPattern = FrozenSet[Tuple[int, int]]


def pattern_of(A: GradedAlgebra, k: int = 3) -> CupPattern:
    """Free scaffold products that are nonzero in a scaffold table."""
    return frozenset(p for p in sphere_scaffold_pairs(k)["free"] if A.table[p[0]][p[1]])


def pattern_str(p: CupPattern) -> str:
    return "{" + ",".join(f"u{i}u{j}" for i, j in sorted(p)) + "}"


def parse_pattern(text: str) -> CupPattern:
    out = set()
    for tok in text.replace("{", "").replace("}", "").split(","):
        tok = tok.strip()
        if not tok:
            continue
        a, b = tok.lstrip("u").split("u")
        pair = (int(a), int(b))
        if pair not in RANK8_FREE_PAIRS:
            raise ValueError(f"not a free product: {tok}")
        out.add(pair)
    return frozenset(out)


# --------------------------------------------------------------------------
# isomorphism class sets


@dataclass
class ClassEntry:
    algebra: GradedAlgebra
    signature: InvariantSignature
    match: str = "UNLISTED"
    parameters: Dict[str, int] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    found_in: List[str] = field(default_factory=list)

    @property
    def key(self) -> tuple:
        return canonical_key(self.algebra)


@lru_cache(maxsize=None)
def _canonical_key_cached(A: GradedAlgebra) -> tuple:
    return canonical_form(A)


def canonical_key(A: GradedAlgebra) -> tuple:
    return _canonical_key_cached(A)


class IsoClassSet:
    """Pairwise non-isomorphic representatives, kept in signature buckets."""

    def __init__(self) -> None:
        self._buckets: Dict[InvariantSignature, List[ClassEntry]] = {}

    def add(self, A: GradedAlgebra, origin: Optional[str] = None) -> ClassEntry:
        sig = canonical_signature(A)
        bucket = self._buckets.setdefault(sig, [])
        for e in bucket:
            if find_isomorphism(e.algebra, A, check_signature=False) is not None:
                if origin and origin not in e.found_in:
                    e.found_in.append(origin)
                return e
        e = ClassEntry(A, sig)
        if origin:
            e.found_in.append(origin)
        bucket.append(e)
        return e

    def update(self, other: "IsoClassSet") -> None:
        for e in other.entries():
            mine = self.add(e.algebra)
            for o in e.found_in:
                if o not in mine.found_in:
                    mine.found_in.append(o)

    def entries(self) -> List[ClassEntry]:
        out = [e for b in self._buckets.values() for e in b]
        out.sort(key=lambda e: e.key)
        return out

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())

    def __iter__(self):
        return iter(self.entries())

    def find(self, A: GradedAlgebra) -> Optional[ClassEntry]:
        for e in self._buckets.get(canonical_signature(A), []):
            if find_isomorphism(e.algebra, A, check_signature=False) is not None:
                return e
        return None


# --------------------------------------------------------------------------
# rank 2^k scaffold enumeration


@lru_cache(maxsize=None)
def _scaffold_tables(profile: StructureProfile, constraints: EnumerationConstraints,
                     mode_items: Tuple[Tuple[Tuple[int, int], str], ...]) -> Tuple[GradedAlgebra, ...]:
    prob = sphere_problem(profile, dict(mode_items))
    return tuple(enumerate_algebras(prob, constraints.accepts))


@lru_cache(maxsize=None)
def _profile_by_pattern(profile: StructureProfile,
                        constraints: EnumerationConstraints) -> Dict[CupPattern, Tuple[IsoClassSet, int]]:
    """All accepted scaffold tables on a rank-8 profile, deduplicated per pattern."""
    out: Dict[CupPattern, IsoClassSet] = {}
    counts: Dict[CupPattern, int] = {}
    for A in _scaffold_tables(profile, constraints, ()):
        p = pattern_of(A)
        out.setdefault(p, IsoClassSet()).add(A, str(profile))
        counts[p] = counts.get(p, 0) + 1
    return {p: (s, counts[p]) for p, s in out.items()}


def enumerate_connected_rank8(profile: StructureProfile, pattern: CupPattern,
                              constraints: EnumerationConstraints = EnumerationConstraints()) -> IsoClassSet:
    """Isomorphism classes of accepted tables on ``profile`` whose nonzero free
    products are exactly ``pattern``."""
    if profile.k != 3:
        raise ValueError("rank-8 enumeration needs a profile with six middle degrees")
    found = _profile_by_pattern(profile, constraints).get(frozenset(pattern))
    result = IsoClassSet()
    if found is not None:
        result.update(found[0])
    return result


def rank8_profiles(bound: int, constraints: EnumerationConstraints = EnumerationConstraints()) -> List[StructureProfile]:
    return sphere_profiles(3, bound, constraints.generator_bound)


def _grid_constraints(bound: int, constraints: EnumerationConstraints) -> EnumerationConstraints:
    if constraints.max_generator_degree is None or constraints.max_generator_degree > bound:
        return EnumerationConstraints(
            require_pd=constraints.require_pd, generator_bound=constraints.generator_bound,
            realizability=constraints.realizability, rank_tail_source=constraints.rank_tail_source,
            max_generator_degree=bound, require_nonzero_product=constraints.require_nonzero_product)
    return constraints


def _run_profiles(profiles: Sequence[StructureProfile], constraints: EnumerationConstraints):
    threads = worker_count()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(lambda p: _profile_by_pattern(p, constraints), profiles))
    return [_profile_by_pattern(p, constraints) for p in profiles]


@dataclass
class PatternSurvey:
    bound: int
    classes: Dict[CupPattern, IsoClassSet]
    table_counts: Dict[CupPattern, int]
    profiles: List[StructureProfile]


def survey_rank8(bound: int, constraints: EnumerationConstraints = EnumerationConstraints()) -> PatternSurvey:
    """Enumerate every rank-8 profile up to ``bound`` and merge by pattern."""
    cons = _grid_constraints(bound, constraints)
    profiles = rank8_profiles(bound, cons)
    merged: Dict[CupPattern, IsoClassSet] = {}
    counts: Dict[CupPattern, int] = {}
    for res in _run_profiles(profiles, cons):
        for p, (s, c) in sorted(res.items(), key=lambda kv: sorted(kv[0])):
            merged.setdefault(p, IsoClassSet()).update(s)
            counts[p] = counts.get(p, 0) + c
    return PatternSurvey(bound, merged, counts, profiles)


def all_patterns(count: int) -> List[CupPattern]:
    return [frozenset(c) for c in combinations(RANK8_FREE_PAIRS, count)]


def admissible_patterns(count: int, degree_search_bound: int = 6,
                        constraints: EnumerationConstraints = EnumerationConstraints()) -> List[CupPattern]:
    """Patterns of the given size realized by some profile up to the bound."""
    if not 0 <= count <= len(RANK8_FREE_PAIRS):
        raise ValueError("pattern size must be between 0 and 6")
    survey = survey_rank8(degree_search_bound, constraints)
    found = [p for p in all_patterns(count) if p in survey.classes and len(survey.classes[p])]
    return sorted(found, key=lambda p: sorted(p))


# --------------------------------------------------------------------------
# k spheres


def enumerate_k_spheres_extremes(k: int, q: int, which: str, max_degree: Optional[int] = None,
                                 constraints: Optional[EnumerationConstraints] = None) -> IsoClassSet:
    """Rank ``2^k`` classes with lowest degree ``q`` in which every free
    scaffold product vanishes (``all-zero``) or none does (``all-nonzero``)."""
    if not 2 <= k <= 4:
        raise ValueError("k must be between 2 and 4")
    if which not in ("all-zero", "all-nonzero"):
        raise ValueError("which must be 'all-zero' or 'all-nonzero'")
    bound = max_degree if max_degree is not None else max(q, 4 if k == 4 else 6)
    if constraints is None:
        constraints = EnumerationConstraints(generator_bound=k)
    cons = _grid_constraints(bound, constraints)
    how = "zero" if which == "all-zero" else "nonzero"
    free = sphere_scaffold_pairs(k)["free"]
    mode = tuple((p, how) for p in free)
    profiles = sphere_profiles(k, bound, cons.generator_bound, q1=q,
                               free_ok=lambda p: how != "zero",
                               require_free_targets=(how == "nonzero"))
    out = IsoClassSet()
    for prof in profiles:
        for A in _scaffold_tables(prof, cons, mode):
            out.add(A, str(prof))
    return out


# --------------------------------------------------------------------------
# small ranks with every product free


def connected_betti_profiles(rank: int, bound: int, gen_bound: int = 3,
                             pd: bool = True) -> List[Tuple[int, ...]]:
    """Sorted degree lists (unit first) of connected rank-``rank`` candidates."""
    if rank < 1:
        raise ValueError("rank must be positive")
    if rank == 1:
        return [(0,)]
    m = rank - 2
    rmax = (rank - 1) * bound
    out = []
    if pd:
        h, mid = divmod(m, 2)
        for low in _lower_halves(h, bound, gen_bound, rmax // 2):
            rlo = 2 * low[-1] if low else 1
            for r in range(max(rlo, 1), rmax + 1):
                if mid and r % 2:
                    continue
                middle = (r // 2,) * mid
                degs = (0,) + low + middle + tuple(r - d for d in reversed(low)) + (r,)
                lb = _generator_lower_bound(degs, _all_pairs(degs))
                if sum(lb.values()) > gen_bound or any(d > bound for d in lb):
                    continue
                out.append(degs)
    else:
        for seq in _lower_halves(rank - 1, bound, gen_bound, rmax):
            out.append((0,) + seq)
    return sorted(set(out))


def _all_pairs(degs: Sequence[int]) -> List[Tuple[int, int]]:
    n = len(degs)
    return [(i, j) for i in range(1, n) for j in range(i, n)]


def _pin_duality(prob: TableProblem) -> None:
    """Fix products into the top degree on a palindromic degree list.

    Complementary pieces get dual bases, and the middle piece a form that is
    antidiagonal plus diagonal, so ``u_i u_{n-1-i} = v`` and every other
    product into the top is zero except middle squares.
    """
    degs = prob.degrees
    n = len(degs)
    r = degs[-1]
    v = 1 << (n - 1)
    for i in range(1, n):
        prob.fixed[(i, n - 1)] = 0
        for j in range(i, n - 1):
            if degs[i] + degs[j] != r:
                continue
            if i + j == n - 1:
                prob.fixed[(i, j)] = v
            elif i == j:
                prob.choices[(i, j)] = (0, v)
            else:
                prob.fixed[(i, j)] = 0


@lru_cache(maxsize=None)
def _free_tables(degs: Tuple[int, ...], constraints: EnumerationConstraints) -> IsoClassSet:
    out = IsoClassSet()
    if len(degs) == 1:
        out.add(GradedAlgebra(("1",), (0,), ((1,),)))
        return out
    names = ("1",) + tuple(f"u{i}" for i in range(1, len(degs)))
    prob = TableProblem(degrees=degs, names=names)
    if constraints.require_pd:
        _pin_duality(prob)
    for A in enumerate_algebras(prob, constraints.accepts):
        out.add(A, "(" + ",".join(map(str, degs[1:])) + ")")
    return out


def classify_connected(rank: int, betti_profile: Optional[Sequence[int]] = None,
                       constraints: EnumerationConstraints = EnumerationConstraints(),
                       max_degree: int = 4) -> IsoClassSet:
    """Every connected class of the given rank, on one degree list or on all
    candidate degree lists with generator degrees at most ``max_degree``."""
    cons = _grid_constraints(max_degree, constraints)
    if betti_profile is not None:
        degs = tuple(sorted(betti_profile))
        if len(degs) != rank or degs.count(0) != 1 or degs[0] != 0:
            raise ValueError("betti profile must list one degree-0 class and sum to the rank")
        profiles = [degs]
    else:
        profiles = connected_betti_profiles(rank, max_degree, cons.generator_bound, cons.require_pd)
    out = IsoClassSet()
    for degs in profiles:
        out.update(_free_tables(degs, cons))
    return out


# --------------------------------------------------------------------------
# disconnected


def partitions(n: int, largest: Optional[int] = None) -> List[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


@dataclass
class ComponentFamily:
    """A family of connected components keyed by a catalog name."""
    name: str
    rank: int
    examples: List[GradedAlgebra]


@dataclass
class DisconnectedReport:
    total_rank: int
    families: Dict[int, List[ComponentFamily]]
    by_partition: Dict[Tuple[int, ...], List[Tuple[str, ...]]]


def classify_disconnected(total_rank: int = 8,
                          constraints: EnumerationConstraints = EnumerationConstraints(),
                          max_degree: int = 3,
                          namer: Optional[Callable[[GradedAlgebra], str]] = None,
                          min_components: int = 2) -> DisconnectedReport:
    """Multisets of connected component families whose ranks sum to ``total_rank``.

    Components are classified with :func:`classify_connected` and grouped
    into families by ``namer`` (catalog matching by default).
    """
    if namer is None:
        from .catalog import component_family_name
        namer = component_family_name
    families: Dict[int, List[ComponentFamily]] = {}
    for rk in range(1, total_rank + 1):
        byname: Dict[str, ComponentFamily] = {}
        for e in classify_connected(rk, constraints=constraints, max_degree=max_degree):
            nm = namer(e.algebra)
            fam = byname.setdefault(nm, ComponentFamily(nm, rk, []))
            fam.examples.append(e.algebra)
        families[rk] = sorted(byname.values(), key=lambda f: f.name)
    by_partition: Dict[Tuple[int, ...], List[Tuple[str, ...]]] = {}
    for part in partitions(total_rank):
        if len(part) < min_components:
            continue
        if any(not families.get(rk) for rk in part):
            continue
        combos = set()

        def rec(i: int, acc: Tuple[str, ...]) -> None:
            if i == len(part):
                combos.add(tuple(sorted(acc)))
                return
            for nm in families[part[i]]:
                rec(i + 1, acc + (nm.name,))
        rec(0, ())
        by_partition[part] = sorted(combos)
    return DisconnectedReport(total_rank, families, by_partition)
