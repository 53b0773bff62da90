"""Soundness and completeness checks of the classification statements.

Each theorem id names an enumeration and a set of catalog entries.  A run
is SOUND when every catalog instance on the degree grid is produced and
COMPLETE when every produced class matches a catalog instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import GradedAlgebra, hilbert_series, minimal_generators
from .catalog import (CATALOG, RANK8_BY_SIZE, CatalogError, Instance,
                      catalog_instantiate, grid_instances, match_catalog)
from .classifier import (EnumerationConstraints, IsoClassSet, classify_connected,
                         classify_disconnected, enumerate_k_spheres_extremes,
                         partitions, survey_rank8)
from .iso import find_isomorphism

THEOREM_IDS: Tuple[str, ...] = (
    "3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8", "3.9", "3.10",
    "3.12", "3.13", "3.14", "3.15", "nontnhz-disconnected",
)

TITLES = {
    "3.1": "rank 8, no free product nonzero",
    "3.2": "rank 8, one free product nonzero",
    "3.3": "rank 8, two free products nonzero",
    "3.4": "rank 8, three free products nonzero",
    "3.5": "rank 8, four free products nonzero",
    "3.6": "rank 8, five free products nonzero",
    "3.7": "rank 8, all free products nonzero",
    "3.8": "rank 2^k, all free products zero",
    "3.9": "rank 2^k, all free products nonzero",
    "3.10": "connected, not TNHZ, nontrivial action",
    "3.12": "disconnected, components of rank at most 4",
    "3.13": "disconnected, a component of rank 5",
    "3.14": "disconnected, a component of rank 6",
    "3.15": "disconnected, a component of rank 7",
    "nontnhz-disconnected": "disconnected, not TNHZ, nontrivial action",
}

DEFAULT_GRID = {"rank8": 6, "small": 4, "disconnected": 3, "spheres": 4}


class UnknownTheorem(ValueError):
    pass


@dataclass
class ClassRecord:
    algebra: GradedAlgebra
    match: str = "UNLISTED"
    label: str = ""
    parameters: Dict[str, int] = field(default_factory=dict)
    found_in: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def describe(self) -> str:
        if self.match == "UNLISTED":
            return "UNLISTED"
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        return f"{self.match}({inner})  {self.label}"

    def to_dict(self) -> dict:
        A = self.algebra
        return {
            "match": self.match,
            "label": self.label,
            "parameters": dict(sorted(self.parameters.items())),
            "hilbert": str(hilbert_series(A)),
            "rank": A.dim,
            "generators": minimal_generators(A)[0],
            "found_in": list(self.found_in),
            "warnings": list(self.warnings),
            "algebra": A.to_dict(),
        }


@dataclass
class Report:
    theorem: str
    grid: Dict[str, object]
    classes: List[ClassRecord] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)
    whitelisted: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def unlisted(self) -> List[ClassRecord]:
        return [c for c in self.classes if c.match == "UNLISTED"]

    @property
    def sound(self) -> bool:
        return not self.missing and not any(m.startswith("missing") for m in self.mismatches)

    @property
    def complete(self) -> bool:
        return not self.unlisted and not any(m.startswith("extra") for m in self.mismatches)

    @property
    def ok(self) -> bool:
        return self.sound and self.complete

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "title": TITLES.get(self.theorem, ""),
            "grid": dict(self.grid),
            "sound": self.sound,
            "complete": self.complete,
            "classes": [c.to_dict() for c in self.classes if c.match != "UNLISTED"],
            "unlisted": [c.to_dict() for c in self.unlisted],
            "missing": list(self.missing),
            "mismatches": list(self.mismatches),
            "whitelisted": list(self.whitelisted),
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        head = f"theorem {self.theorem}: {TITLES.get(self.theorem, '')}"
        grid = ", ".join(f"{k}={v}" for k, v in self.grid.items())
        lines = [head, f"  grid: {grid}",
                 f"  {'SOUND' if self.sound else 'NOT SOUND'}  {'COMPLETE' if self.complete else 'NOT COMPLETE'}"]
        listed = [c for c in self.classes if c.match != "UNLISTED"]
        if listed:
            lines.append(f"  classes ({len(listed)}):")
            for c in listed:
                lines.append(f"    {c.describe()}  [{hilbert_series(c.algebra)}]")
                for w in c.warnings:
                    lines.append(f"      warning: {w}")
        for c in self.unlisted:
            lines.append(f"  UNLISTED [{hilbert_series(c.algebra)}] seen in {', '.join(c.found_in[:3])}")
            lines.append("    " + c.algebra.to_json())
        for m in self.missing:
            lines.append(f"  missing: {m}")
        for m in self.mismatches:
            lines.append(f"  mismatch: {m}")
        for m in self.whitelisted:
            lines.append(f"  whitelisted: {m}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _constraints(realizability: str, generator_bound: int, require_pd: bool = True,
                 require_nonzero_product: bool = False,
                 max_degree: Optional[int] = None) -> EnumerationConstraints:
    return EnumerationConstraints.with_variant(
        realizability, generator_bound=generator_bound, require_pd=require_pd,
        require_nonzero_product=require_nonzero_product, max_generator_degree=max_degree)


def _record(entry_algebra: GradedAlgebra, found_in: Sequence[str], keys: Sequence[str],
            bound: int, cons: EnumerationConstraints, realizability: str,
            matched: Dict[str, bool]) -> ClassRecord:
    rec = ClassRecord(entry_algebra, found_in=list(found_in))
    hits = match_catalog(entry_algebra, keys, bound, cons, realizability)
    for inst in hits:
        matched[str(inst)] = True
    if hits:
        first = hits[0]
        rec.match = first.key
        rec.label = CATALOG[first.key].label
        rec.parameters = first.param_dict
        other = sorted({h.key for h in hits[1:] if h.key != first.key})
        if other:
            rec.warnings.append("also matches " + ", ".join(other))
    return rec


def _compare(theorem: str, grid: Dict[str, object], found: IsoClassSet, keys: Sequence[str],
             bound: int, cons: EnumerationConstraints, realizability: str,
             expected: Optional[Iterable[Instance]] = None) -> Report:
    rep = Report(theorem, grid)
    if expected is None:
        expected = [i for k in keys for i in grid_instances(k, bound, cons, realizability)]
    expected = list(expected)
    matched = {str(i): False for i in expected}
    for e in found.entries():
        rep.classes.append(_record(e.algebra, e.found_in, keys, bound, cons, realizability, matched))
    rep.missing = [name for name, hit in matched.items() if not hit]
    return rep


# --------------------------------------------------------------------------
# rank 8 and rank 2^k


_RANK8_SIZE = {f"3.{s + 1}": s for s in range(7)}


def _verify_rank8(theorem: str, bound: int, realizability: str, generator_bound: int) -> Report:
    size = _RANK8_SIZE[theorem]
    cons = _constraints(realizability, generator_bound, max_degree=bound)
    survey = survey_rank8(bound, cons)
    found = IsoClassSet()
    for p, classes in sorted(survey.classes.items(), key=lambda kv: sorted(kv[0])):
        if len(p) == size:
            found.update(classes)
    grid = {"max_degree": bound, "pattern_size": size, "realizability": realizability}
    rep = _compare(theorem, grid, found, RANK8_BY_SIZE[size], bound, cons, realizability)
    patterns = sorted(p for p in survey.classes if len(p) == size and len(survey.classes[p]))
    rep.notes.append(f"{len(patterns)} admissible patterns, {len(survey.profiles)} degree profiles")
    return rep


def _verify_spheres(theorem: str, bound: int, realizability: str) -> Report:
    which = "all-zero" if theorem == "3.8" else "all-nonzero"
    key = "thm3.8" if theorem == "3.8" else "thm3.9"
    rep = Report(theorem, {"max_degree": bound, "k": "2..4", "realizability": realizability})
    for k in (2, 3, 4):
        qmax = min(bound, 2) if k == 4 else bound
        for q in range(1, qmax + 1):
            cons = _constraints(realizability, k)
            found = enumerate_k_spheres_extremes(k, q, which, constraints=cons)
            try:
                want = catalog_instantiate(key, realizability=realizability, k=k, q=q)
            except CatalogError:
                want = None
            hit = False
            for e in found.entries():
                rec = ClassRecord(e.algebra, found_in=list(e.found_in))
                if want is not None and want.dim == e.algebra.dim:
                    if find_isomorphism(want, e.algebra):
                        rec.match, rec.label, rec.parameters = key, CATALOG[key].label, {"k": k, "q": q}
                        hit = True
                rep.classes.append(rec)
            if want is not None and not hit:
                why = "" if want.dim == 2 ** k else f" (catalog ring has rank {want.dim}, not {2 ** k})"
                rep.missing.append(f"{key}(k={k}, q={q}){why}")
    rep.notes.append("k = 4 is run for q <= 2")
    return rep


# --------------------------------------------------------------------------
# connected, not TNHZ


def _verify_nontnhz_connected(bound: int, realizability: str, generator_bound: int) -> Report:
    rep = Report("3.10", {"max_degree": bound, "ranks": "2, 4", "pd": "optional",
                          "realizability": realizability})
    for rk, keys in ((2, ("thm3.10.1",)),
                     (4, ("thm3.10.2", "thm3.10.3", "thm3.10.4", "thm3.10.5"))):
        cons = _constraints(realizability, generator_bound, require_pd=False,
                            require_nonzero_product=rk > 2, max_degree=bound)
        found = classify_connected(rk, constraints=cons, max_degree=bound)
        sub = _compare("3.10", {}, found, keys, bound, cons, realizability)
        rep.classes += sub.classes
        rep.missing += sub.missing
    rep.notes.append("rank 6 is feasible but not listed; see `spectral` for the rank bookkeeping")
    rep.notes.append("degree bounds with the ambiguous 'or' are reported, not enforced")
    rep.notes.append("only the wedge family can fail to occur for smooth manifolds (informational)")
    return rep


# --------------------------------------------------------------------------
# disconnected

S, P2, PT = "thm3.10.1", "thm3.12.P2", "pt"
X4 = ("thm3.10.2", "thm3.10.3", "thm3.10.4")
X5 = ("thm3.13.#3P2", "thm3.13.P2#SxS", "thm3.13.P4")
X6 = ("thm3.14.#2P3", "thm3.14.P3#SxS", "thm3.14.P2xS", "thm3.14.P5")
X7 = ("thm3.15.1.(P2xS)#P2", "thm3.15.1.P4#SxS", "thm3.15.1.P6", "thm3.15.2")

# each item is a list of slots; a slot is a tuple of admissible family names
_ITEMS: Dict[str, List[List[Tuple[str, ...]]]] = {
    "3.12": [[(S,), (S,), (S,), (S,)],
             [(P2,), (P2,), (S,)],
             [(S,), (PT,), (P2,), (S,)],
             [X4, (S,), (S,)],
             [X4, (P2,), (PT,)],
             [X4, X4]],
    "3.13": [[X5, (P2,)],
             [X5, (S,), (PT,)]],
    "3.14": [[X6, (S,)]],
    "3.15": [[X7, (PT,)]],
}
_MAX_PART = {"3.12": (1, 4), "3.13": (5, 5), "3.14": (6, 6), "3.15": (7, 7)}
_RANK = {S: 2, P2: 3, PT: 1}
_RANK.update({k: 4 for k in X4})
_RANK.update({k: 5 for k in X5})
_RANK.update({k: 6 for k in X6})
_RANK.update({k: 7 for k in X7})
# partitions where the component indexing of the rank-5 statement is ambiguous
WHITELIST = {"3.13": {(5, 3), (5, 2, 1), (5, 1, 1, 1)}}


def _expand(item: List[Tuple[str, ...]], sphere_zero: bool = True) -> List[Tuple[str, ...]]:
    """Multisets of family names for one theorem item; a sphere slot may be
    a zero sphere, which is two points."""
    out = set()
    for choice in product(*item):
        pools = [[(c,)] + ([(PT, PT)] if sphere_zero and c == S else []) for c in choice]
        for parts in product(*pools):
            out.add(tuple(sorted(x for p in parts for x in p)))
    return sorted(out)


def expected_multisets(theorem: str) -> Dict[Tuple[int, ...], List[Tuple[str, ...]]]:
    out: Dict[Tuple[int, ...], set] = {}
    for item in _ITEMS[theorem]:
        for ms in _expand(item):
            part = tuple(sorted((_RANK[n] for n in ms), reverse=True))
            out.setdefault(part, set()).add(ms)
    return {p: sorted(v) for p, v in out.items()}


def _verify_disconnected(theorem: str, bound: int, realizability: str,
                         generator_bound: int) -> Report:
    lo, hi = _MAX_PART[theorem]
    cons = _constraints(realizability, generator_bound, max_degree=bound)
    rep = Report(theorem, {"max_degree": bound, "total_rank": 8, "realizability": realizability})
    report = classify_disconnected(8, cons, max_degree=bound)
    want = expected_multisets(theorem)
    white = WHITELIST.get(theorem, set())
    parts = sorted({p for p in partitions(8) if len(p) > 1 and lo <= p[0] <= hi}, reverse=True)
    for part in parts:
        got = set(report.by_partition.get(part, []))
        exp = set(want.get(part, []))
        for ms in sorted(exp - got):
            msg = f"missing {'+'.join(ms)} in partition {'+'.join(map(str, part))}"
            (rep.whitelisted if part in white else rep.mismatches).append(msg)
        for ms in sorted(got - exp):
            msg = f"extra {'+'.join(ms)} in partition {'+'.join(map(str, part))}"
            (rep.whitelisted if part in white else rep.mismatches).append(msg)
    for rk in sorted({x for p in parts for x in p}):
        for fam in report.families.get(rk, []):
            if fam.name.startswith("UNLISTED"):
                for A in fam.examples:
                    rep.classes.append(ClassRecord(A, found_in=[f"component of rank {rk}"]))
    rep.notes.append(f"{sum(len(v) for p, v in report.by_partition.items() if p in parts)} "
                     f"component multisets over {len(parts)} partitions")
    rep.notes.append("a sphere slot may be a zero sphere (two points)")
    if white:
        listed = ", ".join("+".join(map(str, p)) for p in sorted(white, reverse=True))
        rep.notes.append(f"differences in partitions {listed} are whitelisted: "
                         "the component indexing admits each of them")
    return rep


def _verify_nontnhz_disconnected(bound: int, realizability: str, generator_bound: int) -> Report:
    rep = Report("nontnhz-disconnected", {"max_degree": bound, "total_ranks": "2, 4",
                                          "pd": "optional", "realizability": realizability})
    cons = _constraints(realizability, generator_bound, require_pd=False, max_degree=bound)
    sv = "nontnhz.SvS"
    want = {
        (1, 1): {(PT, PT)},
        (2, 2): {(S, S)},
        (2, 1, 1): {(PT, PT, S)},
        (1, 1, 1, 1): {(PT, PT, PT, PT)},
        (3, 1): {tuple(sorted((P2, PT))), tuple(sorted((sv, PT)))},
    }
    for total in (2, 4):
        report = classify_disconnected(total, cons, max_degree=bound)
        for part in partitions(total):
            if len(part) < 2:
                continue
            got = set(report.by_partition.get(part, []))
            exp = want.get(part, set())
            for ms in sorted(exp - got):
                rep.mismatches.append(f"missing {'+'.join(ms)} in partition {'+'.join(map(str, part))}")
            for ms in sorted(got - exp):
                rep.mismatches.append(f"extra {'+'.join(ms)} in partition {'+'.join(map(str, part))}")
    rep.notes.append("total rank 6 is feasible and not listed (informational)")
    return rep


# --------------------------------------------------------------------------


def verify_theorem(theorem: str, max_degree: Optional[int] = None,
                   realizability: str = "paper-statement", generator_bound: int = 3) -> Report:
    """Run the enumeration behind ``theorem`` and compare with the catalog."""
    if theorem not in THEOREM_IDS:
        raise UnknownTheorem(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREM_IDS)}")
    if theorem in _RANK8_SIZE:
        return _verify_rank8(theorem, max_degree or DEFAULT_GRID["rank8"], realizability, generator_bound)
    if theorem in ("3.8", "3.9"):
        return _verify_spheres(theorem, max_degree or DEFAULT_GRID["spheres"], realizability)
    if theorem == "3.10":
        return _verify_nontnhz_connected(max_degree or DEFAULT_GRID["small"], realizability, generator_bound)
    if theorem == "nontnhz-disconnected":
        return _verify_nontnhz_disconnected(max_degree or DEFAULT_GRID["small"], realizability,
                                            generator_bound)
    return _verify_disconnected(theorem, max_degree or DEFAULT_GRID["disconnected"], realizability,
                                generator_bound)


def verify_all(max_degree: Optional[int] = None, realizability: str = "paper-statement",
               generator_bound: int = 3) -> List[Report]:
    return [verify_theorem(t, max_degree, realizability, generator_bound) for t in THEOREM_IDS]
