"""Rank bookkeeping in the Borel spectral sequence of an involution on a
product of three spheres.

Differentials are treated as rank cancellations between entries of
compatible bidegree; no cochain-level maps are computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import GradedAlgebra, Violation, make_algebra, minimal_generators
from .catalog import component_family_name, match_catalog
from .classifier import (EnumerationConstraints, IsoClassSet,
                         check_rank_tail_inequality, classify_connected)
from .gf2 import bits, rank
from .iso import monomial_basis

PRESETS = ("swap", "shear-a", "shear-b", "trivial")


def product_of_spheres(n: int, m: int, l: int) -> GradedAlgebra:
    """The ring of S^n x S^m x S^l on the basis of square-free monomials."""
    if not 1 <= n <= m <= l:
        raise ValueError("need 1 <= n <= m <= l")
    names = ["1", "a", "b", "c", "ab", "ac", "bc", "abc"]
    letter = {"a": n, "b": m, "c": l}
    degs = [sum(letter[ch] for ch in s if ch in letter) for s in names]
    idx = {s: i for i, s in enumerate(names)}
    prods = {}
    for i, s in enumerate(names):
        for j in range(i, len(names)):
            t = names[j]
            if s == "1" or t == "1":
                w = t if s == "1" else s
                prods[(i, j)] = 1 << idx[w]
            elif not set(s) & set(t):
                prods[(i, j)] = 1 << idx["".join(sorted(s + t))]
    return make_algebra(names, degs, prods)


@dataclass(frozen=True)
class InvolutionAction:
    """g* on ``base``; ``images[i]`` is the image of the i-th basis element."""
    base: GradedAlgebra
    images: Tuple[int, ...]
    name: str = "custom"

    def __call__(self, x: int) -> int:
        y = 0
        for i in bits(x):
            y ^= self.images[i]
        return y

    @property
    def maps(self) -> Dict[int, Tuple[int, ...]]:
        """Per-degree matrices: column j is the image of the j-th basis
        element of that piece, in local coordinates."""
        out = {}
        for d in sorted(self.base.by_degree):
            piece = self.base.piece(d)
            pos = {g: t for t, g in enumerate(piece)}
            cols = []
            for g in piece:
                v = self.images[g]
                cols.append(sum(1 << pos[t] for t in bits(v) if t in pos))
            out[d] = tuple(cols)
        return out

    @property
    def trivial(self) -> bool:
        return all(v == 1 << i for i, v in enumerate(self.images))


def extend_multiplicatively(base: GradedAlgebra, generator_images: Mapping[int, int],
                            name: str = "custom") -> InvolutionAction:
    """Extend images of generating basis elements to a ring map."""
    gens = tuple(sorted(generator_images))
    mb = monomial_basis(base, [1 << g for g in gens])
    if mb is None:
        raise ValueError("the given elements do not generate the algebra")
    mono_img = []
    for e in mb.exponents:
        v = base.unit
        for g, k in zip(gens, e):
            for _ in range(k):
                v = base.mul(v, generator_images[g])
        mono_img.append(v)
    images = []
    for i in range(base.dim):
        y = 0
        for t in bits(mb.coords(1 << i)):
            y ^= mono_img[t]
        images.append(y)
    return InvolutionAction(base, tuple(images), name)


def preset_action(name: str, degrees: Sequence[int]) -> InvolutionAction:
    """One of the built-in actions on S^n x S^m x S^l.

    The nontrivial presets act on the two generators of equal degree: a and
    b when n = m, otherwise b and c when m = l.
    """
    n, m, l = degrees
    X = product_of_spheres(n, m, l)
    a, b, c = (X.index(s) for s in "abc")
    gens = {a: 1 << a, b: 1 << b, c: 1 << c}
    if name == "trivial":
        return extend_multiplicatively(X, gens, name)
    if name not in PRESETS:
        raise ValueError(f"unknown action preset {name!r}; choose from {', '.join(PRESETS)}")
    if n == m:
        x, y = a, b
    elif m == l:
        x, y = b, c
    else:
        raise ValueError("a nontrivial action needs two sphere degrees to agree")
    if name == "swap":
        gens[x], gens[y] = 1 << y, 1 << x
    elif name == "shear-a":
        gens[y] = (1 << x) | (1 << y)
    else:
        gens[x] = (1 << x) | (1 << y)
    return extend_multiplicatively(X, gens, name)


@dataclass(frozen=True)
class ActionReport:
    violations: Tuple[Violation, ...]
    orbits: Tuple[Tuple[str, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_action(action: InvolutionAction) -> ActionReport:
    """Check that g* is a degree preserving ring involution fixing the unit,
    and list the orbits of g on basis elements."""
    A, g = action.base, action
    out: List[Violation] = []
    if len(action.images) != A.dim:
        return ActionReport((Violation("shape", (str(len(action.images)),)),), ())
    for i, v in enumerate(action.images):
        if any(A.degrees[t] != A.degrees[i] for t in bits(v)):
            out.append(Violation("degree", (A.names[i], A.element_str(v))))
    if g(A.unit) != A.unit:
        out.append(Violation("unit", (A.element_str(g(A.unit)),)))
    for i in range(A.dim):
        for j in range(i, A.dim):
            lhs = g(A.table[i][j])
            rhs = A.mul(g(1 << i), g(1 << j))
            if lhs != rhs:
                out.append(Violation("homomorphism", (A.names[i], A.names[j])))
    for i in range(A.dim):
        if g(g(1 << i)) != 1 << i:
            out.append(Violation("involution", (A.names[i], A.element_str(g(g(1 << i))))))
    orbits, seen = [], set()
    for i in range(A.dim):
        if i in seen:
            continue
        v = action.images[i]
        if v == 1 << i:
            orbits.append((A.names[i],))
        elif v & (v - 1) == 0:
            j = v.bit_length() - 1
            seen.add(j)
            orbits.append((A.names[i], A.names[j]))
        else:
            orbits.append((A.names[i], "->", A.element_str(v)))
        seen.add(i)
    return ActionReport(tuple(out), tuple(orbits))


@dataclass(frozen=True)
class E2Page:
    """Ranks of E_2^{k,i}; column k >= 1 is stored once as k = 1."""
    entries: Tuple[Tuple[Tuple[int, int], int], ...]
    trivial_action: bool

    def rank(self, k: int, i: int) -> int:
        return dict(self.entries).get((min(k, 1), i), 0)

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(sorted({i for (_, i), _ in self.entries}))

    def column_total(self, k: int) -> int:
        return sum(self.rank(k, i) for i in self.rows)

    def table(self, columns: int = 3) -> List[str]:
        head = "  i | " + " ".join(f"k={k}" for k in range(columns)) + f" ... (k>={columns - 1} constant)"
        lines = [head]
        for i in reversed(self.rows):
            lines.append(f"{i:3d} | " + " ".join(f"{self.rank(k, i):3d}" for k in range(columns)))
        return lines


def e2_page(action: InvolutionAction) -> E2Page:
    """Column 0 is ker(1+g*); columns k > 0 are ker(1+g*)/im(1+g*)."""
    entries = []
    for d, cols in action.maps.items():
        dim = len(cols)
        tau = [c ^ (1 << j) for j, c in enumerate(cols)]
        im = rank(tau)
        ker = dim - im
        entries.append(((0, d), ker))
        entries.append(((1, d), ker - im))
    return E2Page(tuple(sorted(entries)), action.trivial)


def feasible_fixed_ranks(X_rank: int, tnhz: bool, fixed_nonempty: bool = True) -> set:
    """Total fixed-set ranks allowed by the Floyd constraint."""
    if X_rank < 2 or X_rank % 2:
        raise ValueError("X_rank must be even and at least 2")
    if tnhz:
        return {X_rank}
    out = set(range(2, X_rank, 2))
    if not fixed_nonempty:
        out.add(0)
    return out


@dataclass(frozen=True)
class Differential:
    page: int
    source: int
    target: int

    def __str__(self) -> str:
        return f"d_{self.page}: row {self.source} -> row {self.target}"


@dataclass(frozen=True)
class DifferentialPattern:
    differentials: Tuple[Differential, ...]
    permanent_classes: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.differentials:
            return "E2 = E_infinity"
        return ", ".join(str(d) for d in self.differentials)


@dataclass(frozen=True)
class PatternConstraints:
    """Permanent classes may not be sources; with a nonempty fixed set the
    generator rows do not transgress to row 0, and some rank survives."""
    permanent: Tuple[int, ...] = ()
    forbidden: Tuple[Tuple[int, int], ...] = ()
    fixed_nonempty: bool = True


def permanent_classes(action: InvolutionAction) -> List[int]:
    """Nonzero products x g*(x) for basis generators x moved by g*."""
    A = action.base
    out = []
    for i in range(1, A.dim):
        x = 1 << i
        if action(x) != x and A.degrees[i] in _generator_degrees(A):
            p = A.mul(x, action(x))
            if p and p not in out:
                out.append(p)
    return out


def _generator_degrees(A: GradedAlgebra) -> set:
    return set(minimal_generators(A)[1])


def default_constraints(action: InvolutionAction, fixed_nonempty: bool = True) -> PatternConstraints:
    A = action.base
    perm = tuple(A.degrees[next(bits(p))] for p in permanent_classes(action))
    forbidden = tuple((d, 0) for d in sorted(_generator_degrees(A))) if fixed_nonempty else ()
    return PatternConstraints(perm, forbidden, fixed_nonempty)


def stable_column_rank(page: E2Page, pattern: DifferentialPattern, column: int) -> int:
    """Rank of column ``column`` after running every differential as a
    cancellation of one unit of rank at source and target."""
    left = {i: page.rank(column, i) for i in page.rows}
    for d in pattern.differentials:
        left[d.source] -= 1
        if column - d.page >= 0:
            left[d.target] -= 1
    return sum(left.values())


def enumerate_differential_patterns(page: E2Page, constraints: PatternConstraints = PatternConstraints(),
                                    formal_dimension: Optional[int] = None
                                    ) -> List[Tuple[DifferentialPattern, int]]:
    """Every multiset of cancellations within the rank budgets of the E2
    columns k >= 1, with its stable rank."""
    rows = [i for i in page.rows if page.rank(1, i) > 0]
    K = (formal_dimension if formal_dimension is not None else max(page.rows)) + 1
    budget = {i: page.rank(1, i) for i in rows}
    src_budget = {i: budget[i] - constraints.permanent.count(i) for i in rows}
    bad = set(constraints.forbidden)
    cands = [(s, t) for s in rows for t in rows if s > t and (s, t) not in bad]
    perm = tuple(f"row {i}" for i in sorted(constraints.permanent))
    out = []

    def rec(pos: int, used_src: Dict[int, int], used: Dict[int, int], chosen: List[Tuple[int, int]]):
        if pos == len(cands):
            diffs = tuple(Differential(s - t + 1, s, t) for s, t in chosen)
            diffs = tuple(sorted(diffs, key=lambda d: (d.page, d.source)))
            pat = DifferentialPattern(diffs, perm)
            r = stable_column_rank(page, pat, K)
            if constraints.fixed_nonempty and r <= 0:
                return
            out.append((pat, r))
            return
        s, t = cands[pos]
        rec(pos + 1, used_src, used, chosen)
        k = 0
        while True:
            k += 1
            if used_src.get(s, 0) + k > src_budget[s] or used.get(s, 0) + k > budget[s] \
                    or used.get(t, 0) + k > budget[t]:
                break
            u2 = dict(used)
            u2[s] = u2.get(s, 0) + k
            u2[t] = u2.get(t, 0) + k
            us = dict(used_src)
            us[s] = us.get(s, 0) + k
            rec(pos + 1, us, u2, chosen + [(s, t)] * k)

    rec(0, {}, {}, [])
    out.sort(key=lambda pr: (len(pr[0].differentials), [(d.page, d.source) for d in pr[0].differentials]))
    return out


def differential_patterns(action: InvolutionAction, fixed_nonempty: bool = True
                          ) -> List[Tuple[DifferentialPattern, int]]:
    page = e2_page(action)
    return enumerate_differential_patterns(page, default_constraints(action, fixed_nonempty),
                                           action.base.top_degree)


# --------------------------------------------------------------------------
# fixed sets of rank 2 and 4 when X is not TNHZ


def degree_bounds(n: int, m: int, l: int) -> Dict[str, Dict[str, Dict[str, int]]]:
    """Upper bounds on the parameters of each family, in the two readings of
    the disjunctive bounds."""
    r1 = {"min": min(2 * n, l), "alt": n}
    return {
        "thm3.10.1": {"r1": {"min": n + m + l, "alt": n + m + l}},
        "thm3.10.2": {"r1": r1, "r2": {"min": max(2 * n, l), "alt": 2 * m}},
        "thm3.10.3": {"r1": r1},
        "thm3.10.4": {"r1": r1},
        "thm3.10.5": {"r1": r1, "r2": {"min": 2 * n + l, "alt": n + 2 * m}},
    }


SMOOTH_EXCLUDED = ("thm3.10.5",)
_OPEN = EnumerationConstraints(require_pd=False, generator_bound=3, realizability=())


def _sphere_degrees(action: InvolutionAction) -> Tuple[int, int, int]:
    degs = minimal_generators(action.base)[1]
    if len(degs) != 3:
        raise ValueError("action base must be a product of three spheres")
    return tuple(sorted(degs))


def nontnhz_connected_possibilities(action: InvolutionAction, fixed_rank: int,
                                    max_degree: Optional[int] = None,
                                    realizability: str = "paper-statement") -> IsoClassSet:
    """Connected candidates of the given rank passing the rank tail test,
    annotated with their family and the bound readings they satisfy."""
    if fixed_rank not in feasible_fixed_ranks(action.base.dim, tnhz=False, fixed_nonempty=True):
        raise ValueError(f"fixed rank {fixed_rank} is not feasible for a non-TNHZ action")
    n, m, l = _sphere_degrees(action)
    if max_degree is None:
        max_degree = n + m + l if fixed_rank <= 4 else min(n + m + l, 4)
    cons = EnumerationConstraints.with_variant(
        realizability, require_pd=False, require_nonzero_product=fixed_rank > 2,
        max_generator_degree=n + m + l)
    found = classify_connected(fixed_rank, constraints=cons, max_degree=max_degree)
    bounds = degree_bounds(n, m, l)
    out = IsoClassSet()
    for e in found.entries():
        F = e.algebra
        if not check_rank_tail_inequality(F, (n, m, l)).ok:
            continue
        entry = out.add(F, *e.found_in[:1])
        key = component_family_name(F)
        if key not in bounds:
            entry.match = "UNLISTED"
            entry.warnings.append("not in the non-TNHZ connected list")
            continue
        hits = match_catalog(F, [key], max(F.degrees), _OPEN, "none")
        entry.match = key
        entry.parameters = hits[0].param_dict if hits else {}
        for reading in ("min", "alt"):
            bad = [p for p, b in bounds[key].items()
                   if p in entry.parameters and entry.parameters[p] > b[reading]]
            if bad:
                entry.warnings.append(f"exceeds the '{reading}' bound on {', '.join(bad)}")
        if key in SMOOTH_EXCLUDED:
            entry.warnings.append("does not occur for smooth manifolds (informational)")
    return out
