"""Named catalog of the rings that appear in the classification statements.

Each entry builds concrete algebras from integer degree parameters.  All
parameters are generator degrees, so a degree grid is a box of parameter
values.  Keys and theorem ids are stable identifiers used by the verifier
and the command line.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (GradedAlgebra, canonical_signature,
                      hilbert_series, minimal_generators)
from .classifier import (REALIZABILITY_VARIANTS, EnumerationConstraints,
                         check_rank_tail_inequality)
from .constructors import (connected_sum, from_presentation, make_truncated, point,
                           presentation, sphere, tensor_product, wedge_sum)
from .iso import find_isomorphism

Params = Dict[str, int]
# parameters that pick a variant rather than a degree
SELECTORS = frozenset({"uv", "u", "ijk", "k"})
Constraint = Tuple[str, Callable[[Params], bool]]


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    theorem: str
    label: str
    params: Tuple[str, ...]
    builder: Callable[[Params], GradedAlgebra]
    constraints: Tuple[Constraint, ...] = ()
    hopf: Tuple[str, ...] = ()
    pd: bool = True
    presentation: Optional[str] = None
    printed: Optional[str] = None
    note: str = ""

    def violations(self, params: Params, realizability: str = "paper-statement") -> List[str]:
        missing = [p for p in self.params if p not in params]
        if missing:
            return [f"missing parameter {', '.join(missing)}"]
        extra = sorted(set(params) - set(self.params))
        if extra:
            return [f"unknown parameter {', '.join(extra)}"]
        out = [f"{p} >= 1" for p in self.params if p not in SELECTORS and params[p] < 1]
        if out:
            return out
        out = [text for text, ok in self.constraints if not ok(params)]
        allowed = REALIZABILITY_VARIANTS[realizability].get(2)
        if allowed is not None:
            for p in self.hopf:
                if params[p] not in allowed:
                    out.append(f"{p} in {{{','.join(map(str, sorted(allowed)))}}}")
        return out

    def build(self, params: Params) -> GradedAlgebra:
        return self.builder(dict(params))


# --------------------------------------------------------------------------
# builders


def _trunc(q: int, h: int, g: str) -> GradedAlgebra:
    return make_truncated(q, h, g)


def _csum(*parts: GradedAlgebra) -> GradedAlgebra:
    out = parts[0]
    for p in parts[1:]:
        out = connected_sum(out, p)
    return out


def _tensor(*parts: GradedAlgebra) -> GradedAlgebra:
    out = parts[0]
    for p in parts[1:]:
        out = tensor_product(out, p)
    return out


def _pres(gens: Sequence[Tuple[str, int]], rels: Sequence[str]) -> GradedAlgebra:
    return from_presentation(presentation(gens, *rels))


def _eq(text: str, f: Callable[[Params], bool]) -> Constraint:
    return (text, f)


_ENTRIES: List[CatalogEntry] = []


def _add(*args, **kw) -> None:
    _ENTRIES.append(CatalogEntry(*args, **kw))


# rank 8, connected

_add("thm3.1", "3.1", "#3 P^3(q)", ("q",),
     lambda p: _csum(_trunc(p["q"], 3, "x"), _trunc(p["q"], 3, "y"), _trunc(p["q"], 3, "z")),
     hopf=("q",),
     presentation="x^4, y^4, z^4, x^3+y^3, y^3+z^3, xy, yz, xz",
     note="statement and proof give different degree sets for q; see `--realizability`")
_add("thm3.2", "3.2", "P^3(r1) # (P^2(r2) x S^r3)", ("r1", "r2", "r3"),
     lambda p: _csum(_trunc(p["r1"], 3, "x"),
                     _tensor(_trunc(p["r2"], 2, "y"), sphere(p["r3"], "s"))),
     constraints=(_eq("3*r1 = 2*r2 + r3", lambda p: 3 * p["r1"] == 2 * p["r2"] + p["r3"]),),
     hopf=("r1", "r2"))
_add("thm3.3.1", "3.3", "P^5(r1) # (S^r2 x S^r3)", ("r1", "r2", "r3"),
     lambda p: _csum(_trunc(p["r1"], 5, "x"), _tensor(sphere(p["r2"], "s"), sphere(p["r3"], "t"))),
     constraints=(_eq("5*r1 = r2 + r3", lambda p: 5 * p["r1"] == p["r2"] + p["r3"]),
                  _eq("r2 <= r3", lambda p: p["r2"] <= p["r3"])),
     hopf=("r1",))
_add("thm3.3.2", "3.3", "(P^2(r1) # P^2(r1)) x S^r2", ("r1", "r2"),
     lambda p: _tensor(_csum(_trunc(p["r1"], 2, "x"), _trunc(p["r1"], 2, "y")), sphere(p["r2"], "s")),
     hopf=("r1",))


def _thm333(p: Params) -> GradedAlgebra:
    g = [("x", p["dx"]), ("y", p["dy"]), ("z", p["dz"])]
    if p["uv"] == 0:
        return _pres(g, ["x^3", "y^3", "z^2", "x*z + y^2", "y*z", "x^2*y"])
    return _pres(g, ["x^3", "z^3", "y^2", "x*y + z^2", "y*z", "x^2*z"])


_add("thm3.3.3", "3.3", "Z2[x,y,z]/(x^3, u^3, v^2, xv+u^2, yz, x^2u)", ("dx", "dy", "dz", "uv"),
     _thm333,
     constraints=(_eq("uv in {0,1} (0: (u,v)=(y,z), 1: (u,v)=(z,y))", lambda p: p["uv"] in (0, 1)),
                  _eq("deg x + deg v = 2 deg u",
                      lambda p: p["dx"] + (p["dz"] if p["uv"] == 0 else p["dy"])
                      == 2 * (p["dy"] if p["uv"] == 0 else p["dz"]))),
     presentation="x^3, u^3, v^2, x*v + u^2, y*z, x^2*u",
     printed="x^3, u^3, v^2, xv+u^2, yz",
     note="printed relations leave rank 9; the case analysis gives x^2 u = 0")


def _thm334(p: Params) -> GradedAlgebra:
    q = p["q"]
    u = "y" if p["u"] == 0 else "z"
    return _pres([("x", q), ("y", q), ("z", q)], ["x^2", f"y^2 + z^2 + {u}*x", "y*z"])


_add("thm3.3.4", "3.3", "Z2[x,y,z]/(x^2, y^2+z^2+ux, yz)", ("q", "u"), _thm334,
     constraints=(_eq("u in {0,1} (0: u=y, 1: u=z)", lambda p: p["u"] in (0, 1)),),
     presentation="x^2, y^2 + z^2 + u*x, y*z",
     printed="x^2, y^3, z^3, y^2+z^2+ux, yz",
     note="printed cubic relations leave rank 7 without duality")
_add("thm3.4.1", "3.4", "Z2[x,y]/(x^6, y^3, x^4+y^2, x^2y)", ("q",),
     lambda p: _pres([("x", p["q"]), ("y", 2 * p["q"])], ["x^6", "y^3", "x^4 + y^2", "x^2*y"]),
     presentation="x^6, y^3, x^4 + y^2, x^2*y",
     printed="x^6, y^3, x^4+y^2",
     note="printed relations leave rank 10; the case analysis gives x^2 y = 0")

_THM342 = {
    0: ("000", ["x^2", "y^2", "z^2"]),
    1: ("200", ["x^4", "y^2", "z^2", "y*z + x^2"]),
    2: ("220", ["x^4", "y^4", "z^2", "y*z + x^2", "x*z + y^2"]),
    3: ("222", ["x^4", "y^4", "z^4", "y*z + x^2", "x*z + y^2", "x*y + z^2", "x^2*y", "x^2*z"]),
    4: ("111", ["x^3", "y^3", "z^3", "y*z + x^2", "x*z + y^2", "x*y + z^2", "x^2*y"]),
}


def _thm342_ok(p: Params) -> bool:
    dx, dy, dz, v = p["dx"], p["dy"], p["dz"], p["ijk"]
    if v == 1:
        return dy + dz == 2 * dx
    if v >= 2:
        return dx == dy == dz
    return dx <= dy <= dz


_add("thm3.4.2", "3.4", "Z2[x,y,z]/(x^(2+i), y^(2+j), z^(2+k), a_i(yz+x^i), a_j(xz+y^j), a_k(xy+z^k))",
     ("dx", "dy", "dz", "ijk"),
     lambda p: _pres([("x", p["dx"]), ("y", p["dy"]), ("z", p["dz"])], _THM342[p["ijk"]][1]),
     constraints=(_eq("ijk in {0:000, 1:200, 2:220, 3:222, 4:111}", lambda p: p["ijk"] in _THM342),
                  _eq("relations homogeneous", lambda p: p["ijk"] not in _THM342 or _thm342_ok(p))),
     presentation="ijk=000: S x S x S; 200: x^4,y^2,z^2,yz+x^2; 220: x^4,y^4,z^2,yz+x^2,xz+y^2; "
                  "222: x^4,y^4,z^4,yz+x^2,xz+y^2,xy+z^2,x^2y,x^2z; 111: x^3,y^3,z^3,yz+x^2,xz+y^2,xy+z^2,x^2y",
     printed="x^(2+i), y^(2+j), z^(2+k), a_i(yz+x^i), a_j(xz+y^j), a_k(xy+z^k)",
     note="variants 222 and 111 need x^2y (and x^2z) = 0 for rank 8; 111 uses the quadratic relations")
_add("thm3.5.1", "3.5", "P^3(r1) x S^r2", ("r1", "r2"),
     lambda p: _tensor(_trunc(p["r1"], 3, "x"), sphere(p["r2"], "s")), hopf=("r1",))
_add("thm3.5.2", "3.5", "Z2[x,y]/(x^4, y^4, x^3+y^2, y^2x)", ("a",),
     lambda p: _pres([("x", 2 * p["a"]), ("y", 3 * p["a"])], ["x^4", "y^4", "x^3 + y^2", "y^2*x"]),
     presentation="x^4, y^4, x^3 + y^2, y^2*x  (deg x = 2a, deg y = 3a)")
_add("thm3.6", "3.6", "P^3(r1) x S^r1", ("r1",),
     lambda p: _tensor(_trunc(p["r1"], 3, "x"), sphere(p["r1"], "s")), hopf=("r1",))
_add("thm3.7", "3.7", "P^7(q)", ("q",), lambda p: _trunc(p["q"], 7, "x"), hopf=("q",))

# rank 2^k extremes

_add("thm3.8", "3.8", "#k P^k(q)", ("k", "q"),
     lambda p: _csum(*[_trunc(p["q"], p["k"], f"x{i}") for i in range(1, p["k"] + 1)]),
     constraints=(_eq("2 <= k <= 4", lambda p: 2 <= p["k"] <= 4),),
     hopf=("q",), note="rank is k^2 - k + 2, which equals 2^k only for k = 2, 3")
_add("thm3.9", "3.9", "P^(2^k-1)(q)", ("k", "q"),
     lambda p: _trunc(p["q"], 2 ** p["k"] - 1, "x"),
     constraints=(_eq("2 <= k <= 4", lambda p: 2 <= p["k"] <= 4),), hopf=("q",))

# connected pieces of rank at most 7

_add("pt", "3.12", "pt", (), lambda p: point())
_add("thm3.10.1", "3.10", "S^r1", ("r1",), lambda p: sphere(p["r1"], "s"))
_add("thm3.12.P2", "3.12", "P^2(r1)", ("r1",), lambda p: _trunc(p["r1"], 2, "x"), hopf=("r1",))
_add("nontnhz.SvS", "nontnhz", "S^r1 v S^r2", ("r1", "r2"),
     lambda p: wedge_sum(sphere(p["r1"], "s"), sphere(p["r2"], "t")),
     constraints=(_eq("r1 <= r2", lambda p: p["r1"] <= p["r2"]),), pd=False)
_add("thm3.10.2", "3.10", "S^r1 x S^r2", ("r1", "r2"),
     lambda p: _tensor(sphere(p["r1"], "s"), sphere(p["r2"], "t")),
     constraints=(_eq("r1 <= r2", lambda p: p["r1"] <= p["r2"]),))
_add("thm3.10.3", "3.10", "P^3(r1)", ("r1",), lambda p: _trunc(p["r1"], 3, "x"), hopf=("r1",))
_add("thm3.10.4", "3.10", "P^2(r1) # P^2(r1)", ("r1",),
     lambda p: _csum(_trunc(p["r1"], 2, "x"), _trunc(p["r1"], 2, "y")), hopf=("r1",))
_add("thm3.10.5", "3.10", "P^2(r1) v S^r2", ("r1", "r2"),
     lambda p: wedge_sum(_trunc(p["r1"], 2, "x"), sphere(p["r2"], "s")), hopf=("r1",), pd=False)
_add("thm3.13.#3P2", "3.13", "#3 P^2(r1)", ("r1",),
     lambda p: _csum(*[_trunc(p["r1"], 2, g) for g in "xyz"]), hopf=("r1",))
_add("thm3.13.P2#SxS", "3.13", "P^2(r1) # (S^r2 x S^r3)", ("r1", "r2", "r3"),
     lambda p: _csum(_trunc(p["r1"], 2, "x"), _tensor(sphere(p["r2"], "s"), sphere(p["r3"], "t"))),
     constraints=(_eq("2*r1 = r2 + r3", lambda p: 2 * p["r1"] == p["r2"] + p["r3"]),
                  _eq("r2 <= r3", lambda p: p["r2"] <= p["r3"])),
     hopf=("r1",))
_add("thm3.13.P4", "3.13", "P^4(r1)", ("r1",), lambda p: _trunc(p["r1"], 4, "x"), hopf=("r1",))
_add("thm3.14.#2P3", "3.14", "#2 P^3(r1)", ("r1",),
     lambda p: _csum(_trunc(p["r1"], 3, "x"), _trunc(p["r1"], 3, "y")), hopf=("r1",))
_add("thm3.14.P3#SxS", "3.14", "P^3(r1) # (S^r2 x S^r3)", ("r1", "r2", "r3"),
     lambda p: _csum(_trunc(p["r1"], 3, "x"), _tensor(sphere(p["r2"], "s"), sphere(p["r3"], "t"))),
     constraints=(_eq("3*r1 = r2 + r3", lambda p: 3 * p["r1"] == p["r2"] + p["r3"]),
                  _eq("r2 <= r3", lambda p: p["r2"] <= p["r3"])),
     hopf=("r1",))
_add("thm3.14.P2xS", "3.14", "P^2(r1) x S^r2", ("r1", "r2"),
     lambda p: _tensor(_trunc(p["r1"], 2, "x"), sphere(p["r2"], "s")), hopf=("r1",))
_add("thm3.14.P5", "3.14", "P^5(r1)", ("r1",), lambda p: _trunc(p["r1"], 5, "x"), hopf=("r1",))
_add("thm3.15.1.(P2xS)#P2", "3.15", "(P^2(r1) x S^r2) # P^2(r3)", ("r1", "r2", "r3"),
     lambda p: _csum(_tensor(_trunc(p["r1"], 2, "x"), sphere(p["r2"], "s")), _trunc(p["r3"], 2, "y")),
     constraints=(_eq("2*r1 + r2 = 2*r3", lambda p: 2 * p["r1"] + p["r2"] == 2 * p["r3"]),),
     hopf=("r1", "r3"))
_add("thm3.15.1.P4#SxS", "3.15", "P^4(r1) # (S^r2 x S^r3)", ("r1", "r2", "r3"),
     lambda p: _csum(_trunc(p["r1"], 4, "x"), _tensor(sphere(p["r2"], "s"), sphere(p["r3"], "t"))),
     constraints=(_eq("4*r1 = r2 + r3", lambda p: 4 * p["r1"] == p["r2"] + p["r3"]),
                  _eq("r2 <= r3", lambda p: p["r2"] <= p["r3"])),
     hopf=("r1",))
_add("thm3.15.1.P6", "3.15", "P^6(r1)", ("r1",), lambda p: _trunc(p["r1"], 6, "x"), hopf=("r1",))
_add("thm3.15.2", "3.15", "Z2[x,y]/(x^5, y^3, x^3+y^2, x^2y)", ("a",),
     lambda p: _pres([("x", 2 * p["a"]), ("y", 3 * p["a"])], ["x^5", "y^3", "x^3 + y^2", "x^2*y"]),
     presentation="x^5, y^3, x^3 + y^2, x^2*y  (deg x = 2a, deg y = 3a)")

CATALOG: Dict[str, CatalogEntry] = {e.key: e for e in _ENTRIES}

# which catalog keys the rank-8 verifier compares, by number of nonzero free products
RANK8_BY_SIZE: Dict[int, Tuple[str, ...]] = {
    0: ("thm3.1",),
    1: ("thm3.2",),
    2: ("thm3.3.1", "thm3.3.2", "thm3.3.3", "thm3.3.4"),
    3: ("thm3.4.1", "thm3.4.2"),
    4: ("thm3.5.1", "thm3.5.2"),
    5: ("thm3.6",),
    6: ("thm3.7",),
}

# connected pieces by rank, as listed for components of fixed sets
COMPONENT_KEYS: Dict[int, Tuple[str, ...]] = {
    1: ("pt",),
    2: ("thm3.10.1",),
    3: ("thm3.12.P2", "nontnhz.SvS"),
    4: ("thm3.10.2", "thm3.10.3", "thm3.10.4", "thm3.10.5"),
    5: ("thm3.13.#3P2", "thm3.13.P2#SxS", "thm3.13.P4"),
    6: ("thm3.14.#2P3", "thm3.14.P3#SxS", "thm3.14.P2xS", "thm3.14.P5"),
    7: ("thm3.15.1.(P2xS)#P2", "thm3.15.1.P4#SxS", "thm3.15.1.P6", "thm3.15.2"),
}


def keys() -> List[str]:
    return list(CATALOG)


def get_entry(key: str) -> CatalogEntry:
    try:
        return CATALOG[key]
    except KeyError:
        raise CatalogError(f"unknown catalog key {key!r}") from None


def catalog_instantiate(key: str, parameters: Optional[Mapping[str, int]] = None,
                        realizability: str = "paper-statement",
                        source: Optional[Tuple[int, int, int]] = None, **kw: int) -> GradedAlgebra:
    """Build the catalog ring ``key`` at the given degree parameters.

    With ``source`` the rank tail inequality against that product of
    spheres is enforced as well.
    """
    if realizability not in REALIZABILITY_VARIANTS:
        raise CatalogError(f"unknown realizability variant {realizability!r}")
    entry = get_entry(key)
    params = dict(parameters or {})
    params.update(kw)
    bad = entry.violations(params, realizability)
    if bad:
        raise CatalogError(f"{key}: parameter constraint violated: {'; '.join(bad)}")
    A = entry.build(params)
    if source is not None:
        tail = check_rank_tail_inequality(A, source)
        if not tail.ok:
            raise CatalogError(f"{key}: rank tail inequality fails at j = {tail.failing_j} "
                               f"against degrees {tuple(source)}")
    return A


# --------------------------------------------------------------------------
# grids


@dataclass(frozen=True)
class Instance:
    key: str
    params: Tuple[Tuple[str, int], ...]
    algebra: GradedAlgebra

    @property
    def param_dict(self) -> Params:
        return dict(self.params)

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.key}({inner})"


def _param_ranges(entry: CatalogEntry, bound: int) -> List[Sequence[int]]:
    out = []
    for p in entry.params:
        if p == "k":
            out.append(range(2, 5))
        elif p in ("uv", "u"):
            out.append(range(0, 2))
        elif p == "ijk":
            out.append(range(0, len(_THM342)))
        else:
            out.append(range(1, bound + 1))
    return out


@lru_cache(maxsize=None)
def grid_instances(key: str, bound: int,
                   constraints: EnumerationConstraints = EnumerationConstraints(),
                   realizability: str = "paper-statement") -> Tuple[Instance, ...]:
    """Instances of ``key`` whose generator degrees are at most ``bound`` and
    which pass ``constraints``; isomorphic instances are listed once."""
    entry = get_entry(key)
    seen: List[Instance] = []
    for values in product(*_param_ranges(entry, bound)):
        params = dict(zip(entry.params, values))
        if entry.violations(params, realizability):
            continue
        A = entry.build(params)
        _, gdeg = minimal_generators(A)
        if gdeg and max(gdeg) > bound:
            continue
        if not constraints.accepts(A):
            continue
        if any(canonical_signature(A) == canonical_signature(i.algebra)
               and find_isomorphism(i.algebra, A) for i in seen):
            continue
        seen.append(Instance(key, tuple(sorted(params.items())), A))
    return tuple(seen)


def match_catalog(A: GradedAlgebra, keys_: Sequence[str], bound: int,
                  constraints: EnumerationConstraints = EnumerationConstraints(),
                  realizability: str = "paper-statement") -> List[Instance]:
    """Grid instances among ``keys_`` isomorphic to ``A``, in key order."""
    sig = canonical_signature(A)
    out = []
    for k in keys_:
        for inst in grid_instances(k, bound, constraints, realizability):
            if canonical_signature(inst.algebra) == sig and find_isomorphism(inst.algebra, A):
                out.append(inst)
    return out


_NO_FILTER = EnumerationConstraints(require_pd=False, generator_bound=99,
                                    realizability=())


@lru_cache(maxsize=None)
def _component_name(A: GradedAlgebra) -> str:
    if not A.connected:
        return "DISCONNECTED"
    bound = max(A.degrees) if A.dim > 1 else 1
    for k in COMPONENT_KEYS.get(A.dim, ()):
        for inst in grid_instances(k, bound, _NO_FILTER, "none"):
            if inst.algebra.dim == A.dim and find_isomorphism(inst.algebra, A):
                return k
    return "UNLISTED[" + str(hilbert_series(A)) + "]"


def component_family_name(A: GradedAlgebra) -> str:
    """Catalog key of the component family containing ``A``."""
    return _component_name(A)


# --------------------------------------------------------------------------
# display


def describe(entry: CatalogEntry) -> List[str]:
    lines = [f"{entry.key}  [{entry.theorem}]  {entry.label}"]
    if entry.params:
        lines.append("  parameters: " + ", ".join(entry.params))
    cons = [t for t, _ in entry.constraints]
    if entry.hopf:
        cons.append(f"{', '.join(entry.hopf)} in realizability set")
    if cons:
        lines.append("  constraints: " + "; ".join(cons))
    if entry.presentation:
        lines.append("  relations: " + entry.presentation)
    if entry.printed:
        lines.append("  as printed: " + entry.printed)
    if entry.key == "thm3.1":
        st = ", ".join(map(str, sorted(REALIZABILITY_VARIANTS["paper-statement"][2])))
        pr = ", ".join(map(str, sorted(REALIZABILITY_VARIANTS["paper-proof"][2])))
        lines.append(f"  DISCREPANCY: statement gives q in {{{st}}}, proof gives q in {{{pr}}}; "
                     "default is the statement set")
    if entry.note:
        lines.append("  note: " + entry.note)
    lines.append("  duality: " + ("PD" if entry.pd else "not PD"))
    return lines


def entry_as_dict(entry: CatalogEntry) -> Dict[str, object]:
    out: Dict[str, object] = {
        "key": entry.key, "theorem": entry.theorem, "label": entry.label,
        "parameters": list(entry.params),
        "constraints": [t for t, _ in entry.constraints],
        "realizability_parameters": list(entry.hopf), "pd": entry.pd,
    }
    if entry.presentation:
        out["relations"] = entry.presentation
    if entry.printed:
        out["printed"] = entry.printed
    if entry.key == "thm3.1":
        out["discrepancy"] = {
            "paper-statement": sorted(REALIZABILITY_VARIANTS["paper-statement"][2]),
            "paper-proof": sorted(REALIZABILITY_VARIANTS["paper-proof"][2]),
        }
    if entry.note:
        out["note"] = entry.note
    return out
