"""Command line entry point: ``pd2 <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails or two algebras
are not isomorphic, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, List, Optional, Sequence

from .algebra import GradedAlgebra, hilbert_series, minimal_generators
from .catalog import (CATALOG, RANK8_BY_SIZE, CatalogError, catalog_instantiate,
                      component_family_name, describe, entry_as_dict, keys, match_catalog)
from .classifier import (REALIZABILITY_VARIANTS, EnumerationConstraints, IsoClassSet,
                         classify_connected, classify_disconnected,
                         enumerate_k_spheres_extremes, pattern_of, pattern_str,
                         sphere_scaffold_pairs,
                         survey_rank8)
from .constructors import PresentationError, from_presentation, parse_presentation
from .iso import find_isomorphism, presentation_string
from .spectral import (PRESETS, differential_patterns, e2_page, feasible_fixed_ranks,
                       nontnhz_connected_possibilities, preset_action, validate_action)
from .verify import THEOREM_IDS, UnknownTheorem, verify_theorem

CSV_FIELDS = ("key", "degrees", "rank", "generators")


class UsageError(Exception):
    pass


# -- helpers ----------------------------------------------------------------


def _int_list(text: str, option: str) -> List[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{option}: expected comma separated integers, got {text!r}") from None
    if not vals:
        raise UsageError(f"{option}: expected at least one integer")
    return vals


def _constraints(args, require_pd: Optional[bool] = None, generator_bound: Optional[int] = None,
                 **kw) -> EnumerationConstraints:
    pd = args.pd if require_pd is None else require_pd
    if args.generator_bound < 1:
        raise UsageError("--generator-bound: must be at least 1")
    gb = args.generator_bound if generator_bound is None else generator_bound
    return EnumerationConstraints.with_variant(args.realizability, require_pd=pd,
                                               generator_bound=gb, **kw)


def _class_row(A: GradedAlgebra, key: str = "") -> dict:
    return {
        "key": key or component_family_name(A),
        "degrees": " ".join(map(str, A.degrees)),
        "rank": A.dim,
        "generators": minimal_generators(A)[0],
    }


def _class_dict(A: GradedAlgebra, key: str = "", extra: Optional[dict] = None) -> dict:
    out = {
        "key": key,
        "hilbert": str(hilbert_series(A)),
        "rank": A.dim,
        "generators": minimal_generators(A)[0],
        "presentation": presentation_string(A) if A.connected else "",
        "algebra": A.to_dict(),
    }
    if extra:
        out.update(extra)
    return out


def _csv(rows: Iterable[dict], fields: Sequence[str] = CSV_FIELDS) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue().rstrip("\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _no_csv(args, what: str) -> None:
    if args.format == "csv":
        raise UsageError(f"--format csv: {what} output is nested; use text or json")


def _read_algebra(path: str) -> GradedAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: cannot read ({exc.strerror})") from None
    if text.lstrip().startswith("{"):
        try:
            return GradedAlgebra.from_json(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{path}: malformed algebra file ({exc})") from None
    try:
        return from_presentation(parse_presentation(text))
    except (PresentationError, ValueError) as exc:
        raise UsageError(f"{path}: malformed presentation file ({exc})") from None


def _label(entry_key: str) -> str:
    e = CATALOG.get(entry_key)
    return e.label if e else ""


# -- subcommands --------------------------------------------------------------


def cmd_catalog(args) -> tuple:
    if args.action == "list":
        rows = [{"key": k, "theorem": CATALOG[k].theorem, "label": CATALOG[k].label,
                 "parameters": ",".join(CATALOG[k].params)} for k in keys()]
        if args.format == "json":
            return 0, _json([entry_as_dict(CATALOG[k]) for k in keys()])
        if args.format == "csv":
            return 0, _csv(rows, ("key", "theorem", "label", "parameters"))
        width = max(len(k) for k in keys())
        return 0, "\n".join(f"{r['key']:<{width}}  {r['label']}" for r in rows)
    if not args.key:
        raise UsageError("catalog show: a catalog key is required")
    if args.key not in CATALOG:
        raise UsageError(f"catalog show: unknown catalog key {args.key!r}")
    entry = CATALOG[args.key]
    params = {}
    for item in args.param or []:
        name, sep, val = item.partition("=")
        if not sep or not val.lstrip("-").isdigit():
            raise UsageError(f"--param: expected name=integer, got {item!r}")
        params[name] = int(val)
    A = None
    if params:
        try:
            A = catalog_instantiate(args.key, params, realizability=args.realizability)
        except CatalogError as exc:
            raise UsageError(f"--param: {exc}") from None
    if args.format == "json":
        out = entry_as_dict(entry)
        if A is not None:
            out["instance"] = _class_dict(A, args.key, {"parameters": params})
        return 0, _json(out)
    if args.format == "csv":
        if A is None:
            raise UsageError("--format csv: catalog show needs --param to list an instance")
        return 0, _csv([_class_row(A, args.key)])
    lines = describe(entry)
    if A is not None:
        lines.append(f"  instance: {hilbert_series(A)}")
        lines.append(f"  presentation: {presentation_string(A)}")
        lines.append("  " + A.to_json())
    return 0, "\n".join(lines)


def _listing(args, entries: List[tuple], header: List[str]) -> str:
    """``entries`` holds (algebra, key, extra-dict, text-suffix)."""
    if args.format == "json":
        return _json({"header": header,
                      "classes": [_class_dict(A, k, extra) for A, k, extra, _ in entries]})
    if args.format == "csv":
        return _csv(_class_row(A, k) for A, k, _, _ in entries)
    lines = list(header)
    for A, k, extra, suffix in entries:
        label = _label(k)
        params = extra.get("parameters") if extra else None
        name = k + ("(" + ", ".join(f"{p}={v}" for p, v in sorted(params.items())) + ")"
                    if params else "")
        lines.append(f"{name}  {label}".rstrip())
        lines.append(f"    {hilbert_series(A)}    {presentation_string(A) if A.connected else ''}".rstrip())
        if suffix:
            lines.append("    " + suffix)
    lines.append(f"{len(entries)} class(es)")
    return "\n".join(lines)


def _named(A: GradedAlgebra, keys_: Sequence[str], bound: int, cons, realizability: str):
    hits = match_catalog(A, keys_, bound, cons, realizability)
    if not hits:
        return "UNLISTED", {}
    return hits[0].key, hits[0].param_dict


def cmd_enumerate(args) -> tuple:
    k = args.dim
    if not 2 <= k <= 4:
        raise UsageError(f"--dim: number of sphere factors must be 2, 3 or 4, got {k}")
    free = len(sphere_scaffold_pairs(k)["free"])
    if args.nonzero is None or not 0 <= args.nonzero <= free:
        raise UsageError(f"--nonzero: pattern size between 0 and {free} is required for --dim {k}")
    if args.degrees:
        degs = _int_list(args.degrees, "--degrees")
        if len(degs) != k or min(degs) < 1:
            raise UsageError(f"--degrees: expected {k} positive sphere degrees")
        bound = max(degs)
    else:
        bound = args.max_degree if args.max_degree is not None else 4
    if args.max_degree is not None:
        bound = min(bound, args.max_degree)
    cons = _constraints(args, generator_bound=max(args.generator_bound, k) if k != 3 else args.generator_bound)
    header = [f"rank {2 ** k}, {args.nonzero} nonzero free products, generator degrees <= {bound}"]
    found = IsoClassSet()
    if k == 3:
        survey = survey_rank8(bound, cons)
        for p in sorted(survey.classes, key=lambda p: sorted(p)):
            if len(p) == args.nonzero:
                found.update(survey.classes[p])
        names = RANK8_BY_SIZE[args.nonzero]
    else:
        if args.nonzero not in (0, free):
            raise UsageError(f"--nonzero: for --dim {k} only 0 and {free} are supported")
        which = "all-zero" if args.nonzero == 0 else "all-nonzero"
        for q in range(1, bound + 1):
            found.update(enumerate_k_spheres_extremes(k, q, which, constraints=cons))
        names = ("thm3.8",) if args.nonzero == 0 else ("thm3.9",)
    entries = []
    for e in found.entries():
        key, params = _named(e.algebra, names, bound, cons, args.realizability)
        suffix = ""
        if k == 3:
            suffix = "pattern " + pattern_str(pattern_of(e.algebra))
        entries.append((e.algebra, key, {"parameters": params}, suffix))
    return 0, _listing(args, entries, header)


def cmd_classify(args) -> tuple:
    if args.rank < 1:
        raise UsageError("--rank: must be positive")
    bound = args.max_degree if args.max_degree is not None else (3 if args.disconnected else 4)
    if args.disconnected:
        _no_csv(args, "disconnected classification")
        cons = _constraints(args, require_nonzero_product=False)
        rep = classify_disconnected(args.rank, cons, max_degree=bound)
        if args.format == "json":
            return 0, _json({
                "total_rank": rep.total_rank,
                "families": {str(r): [{"name": f.name, "examples": len(f.examples)} for f in fs]
                             for r, fs in sorted(rep.families.items())},
                "by_partition": {"+".join(map(str, p)): [list(ms) for ms in v]
                                 for p, v in sorted(rep.by_partition.items(), reverse=True)},
            })
        lines = [f"disconnected, total rank {rep.total_rank}, generator degrees <= {bound}"]
        for p, v in sorted(rep.by_partition.items(), reverse=True):
            lines.append("partition " + "+".join(map(str, p)) + f" ({len(v)})")
            for ms in v:
                lines.append("    " + " + ".join(ms))
        return 0, "\n".join(lines)
    betti = _int_list(args.betti, "--betti") if args.betti else None
    cons = _constraints(args, require_nonzero_product=args.nonzero_product)
    try:
        found = classify_connected(args.rank, betti, cons, max_degree=bound)
    except ValueError as exc:
        raise UsageError(f"--betti: {exc}") from None
    entries = [(e.algebra, component_family_name(e.algebra), {}, "") for e in found.entries()]
    header = [f"connected, rank {args.rank}, {'PD' if args.pd else 'PD optional'}, "
              f"generator degrees <= {bound}"]
    return 0, _listing(args, entries, header)


def cmd_verify(args) -> tuple:
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    reports = []
    for t in ids:
        try:
            reports.append(verify_theorem(t, args.max_degree, args.realizability,
                                          args.generator_bound))
        except UnknownTheorem as exc:
            raise UsageError(f"theorem: {exc}") from None
    status = 0 if all(r.ok for r in reports) else 1
    if args.format == "json":
        body = [r.to_dict() for r in reports]
        return status, _json(body if args.theorem == "all" else body[0])
    if args.format == "csv":
        rows = []
        for r in reports:
            for c in r.classes:
                row = _class_row(c.algebra, c.match)
                row["theorem"] = r.theorem
                rows.append(row)
        return status, _csv(rows, ("theorem",) + CSV_FIELDS)
    text = "\n\n".join(r.to_text() for r in reports)
    if len(reports) > 1:
        text += "\n\n" + "\n".join(
            f"{r.theorem:<22} {'SOUND' if r.sound else 'NOT SOUND':<10} "
            f"{'COMPLETE' if r.complete else 'NOT COMPLETE'}" for r in reports)
    return status, text


def cmd_iso(args) -> tuple:
    _no_csv(args, "isomorphism")
    A, B = _read_algebra(args.first), _read_algebra(args.second)
    phi = find_isomorphism(A, B) if A.connected and B.connected else None
    if args.format == "json":
        return (0 if phi else 1), _json({"isomorphic": phi is not None,
                                         "map": phi.as_dict() if phi else None})
    if phi is None:
        return 1, "not isomorphic"
    lines = ["isomorphic"] + [f"  {s} -> {t}" for s, t in phi.as_dict().items()]
    return 0, "\n".join(lines)


def cmd_spectral(args) -> tuple:
    _no_csv(args, "spectral")
    degs = _int_list(args.degrees, "--degrees")
    if len(degs) != 3:
        raise UsageError("--degrees: expected three sphere degrees n,m,l")
    degs = sorted(degs)
    if degs[0] < 1:
        raise UsageError("--degrees: sphere degrees must be positive")
    try:
        action = preset_action(args.action, degs)
    except ValueError as exc:
        raise UsageError(f"--action: {exc}") from None
    report = validate_action(action)
    page = e2_page(action)
    pats = differential_patterns(action, fixed_nonempty=not args.possibly_empty)
    ranks = sorted({r for _, r in pats})
    feasible = sorted(feasible_fixed_ranks(action.base.dim, tnhz=False,
                                           fixed_nonempty=not args.possibly_empty))
    poss = None
    if args.fixed_rank is not None:
        try:
            poss = nontnhz_connected_possibilities(action, args.fixed_rank,
                                                   max_degree=args.max_degree,
                                                   realizability=args.realizability)
        except ValueError as exc:
            raise UsageError(f"--fixed-rank: {exc}") from None
    if args.format == "json":
        out = {
            "action": args.action, "degrees": degs, "valid": report.ok,
            "violations": [str(v) for v in report.violations],
            "orbits": [list(o) for o in report.orbits],
            "e2": [{"column": "0" if k == 0 else ">=1", "row": i, "rank": r}
                   for (k, i), r in page.entries],
            "patterns": [{"differentials": [str(d) for d in p.differentials],
                          "stable_rank": r} for p, r in pats],
            "stable_ranks": ranks,
            "feasible_ranks": feasible,
        }
        if poss is not None:
            out["possibilities"] = [_class_dict(e.algebra, e.match, {"parameters": e.parameters,
                                                                     "warnings": e.warnings})
                                    for e in poss.entries()]
        return 0, _json(out)
    lines = [f"action {args.action} on S^{degs[0]} x S^{degs[1]} x S^{degs[2]}: "
             + ("valid" if report.ok else "INVALID")]
    lines += [f"  {v}" for v in report.violations]
    lines.append("orbits: " + "  ".join("{" + ",".join(o) + "}" for o in report.orbits))
    lines.append("E2 ranks (row i = fiber degree, column k):")
    lines += ["  " + s for s in page.table()]
    lines.append(f"differential patterns ({len(pats)}):")
    for p, r in pats:
        lines.append(f"  {p}  -> stable rank {r}")
    lines.append("stable ranks: " + ", ".join(map(str, ranks)))
    lines.append("feasible fixed ranks: " + ", ".join(map(str, feasible)))
    if poss is not None:
        lines.append(f"rank {args.fixed_rank} connected candidates ({len(poss)}):")
        for e in poss.entries():
            ps = ", ".join(f"{k}={v}" for k, v in sorted(e.parameters.items()))
            lines.append(f"  {e.match}({ps})  {_label(e.match)}  [{hilbert_series(e.algebra)}]")
            for w in e.warnings:
                lines.append(f"      {w}")
    return 0, "\n".join(lines)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--realizability", choices=sorted(REALIZABILITY_VARIANTS),
                        default="paper-statement")
    common.add_argument("--generator-bound", type=int, default=3)
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--pd", action=argparse.BooleanOptionalAction, default=True)

    p = argparse.ArgumentParser(prog="pd2", description="Mod 2 cohomology rings of fixed point sets "
                                "of involutions on products of three spheres.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("catalog", parents=[common], help="list or show catalog entries")
    s.add_argument("action", choices=("list", "show"), nargs="?", default="list")
    s.add_argument("key", nargs="?")
    s.add_argument("--param", action="append", metavar="NAME=VALUE")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("enumerate", parents=[common], help="rank 2^k classes by pattern size")
    s.add_argument("--degrees", help="sphere degrees; the largest caps generator degrees")
    s.add_argument("--dim", type=int, default=3, help="number of sphere factors k (rank 2^k)")
    s.add_argument("--nonzero", type=int, help="number of nonzero free products")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("classify", parents=[common], help="connected or disconnected classification")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--betti", help="degree list of a basis, unit first (e.g. 0,1,1,2)")
    s.add_argument("--disconnected", action="store_true")
    s.add_argument("--nonzero-product", action="store_true",
                   help="require some product of positive-degree classes to be nonzero")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[common], help="check a theorem against enumeration")
    s.add_argument("theorem", help="theorem id or 'all': " + ", ".join(THEOREM_IDS))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("iso", parents=[common], help="isomorphism test of two algebra files")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("spectral", parents=[common], help="E2 ranks and differential patterns")
    s.add_argument("--action", choices=PRESETS, required=True)
    s.add_argument("--degrees", required=True, help="n,m,l")
    s.add_argument("--fixed-rank", type=int)
    s.add_argument("--possibly-empty", action="store_true", help="allow an empty fixed set")
    s.set_defaults(func=cmd_spectral)
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple:
    """Parse ``argv`` and return (status, body)."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        return 2, f"pd2: error: {exc}"


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, body = run(argv)
    stream = sys.stderr if status == 2 else sys.stdout
    print(body, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
