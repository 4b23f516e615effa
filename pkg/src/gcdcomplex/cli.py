"""Command-line interface.

Subcommands: ``analyze``, ``map-loop``, ``fuzz``, ``export`` and ``pk``.

Input sets are given inline as comma/whitespace separated integers, or with
``--file`` pointing at one integer per line or a JSON array. 1s and
duplicates are accepted and dropped with a notice on stderr.

Exit codes: 0 when every check passes, 1 when a theorem check fails (an
implementation bug), 2 on bad input.

Presentations are printed one token line each::

    base <vertex>
    gen e_{a,b}                  one per generator (a non-tree edge a < b)
    rel e_{a,b} e_{c,d}^-1 ...   one per triangle; "rel 1" is the empty word
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import __version__
from .applications import p_group_shortcut, property_pk, rank_bound_report
from .divisor import (
    IntegerSet,
    build_common,
    build_prime,
    check_connectivity_theorem,
    check_near_surjectivity,
    check_subset_reversal,
)
from .errors import ComplexError, EnumerationLimitError
from .homology import H1Basis, induced_h1_map
from .paths import eta_star, eta_star_inverse, validate_path
from .presentation import abelianized_invariants, edge_path_group
from .simplicial import SimplicialComplex
from .verify import run_fuzz

SCHEMA_VERSION = 1
EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_values(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON array: {exc}") from None
        if not isinstance(data, list) or not all(type(x) is int for x in data):
            raise InputError("JSON input must be an array of integers")
        return data
    values = []
    for tok in re.split(r"[\s,]+", text):
        if not tok:
            continue
        try:
            values.append(int(tok))
        except ValueError:
            raise InputError(f"not an integer: {tok!r}") from None
    return values


def read_set(args) -> IntegerSet:
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    else:
        text = " ".join(args.values)
    values = parse_values(text)
    if not values:
        raise InputError("no input values")
    try:
        X = IntegerSet.of(values)
    except (ValueError, OverflowError, TypeError) as exc:
        raise InputError(str(exc)) from None
    if X.ones_removed:
        print(f"notice: removed {X.ones_removed} occurrence(s) of 1", file=sys.stderr)
    if X.duplicates_removed:
        print(f"notice: collapsed {X.duplicates_removed} duplicate value(s)", file=sys.stderr)
    if not X.star:
        raise InputError("X* is empty")
    return X


def dump(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return "\n".join(_text_lines(report, 0)) + "\n"


def _scalar(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _text_lines(obj: dict, depth: int):
    pad = "  " * depth
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, dict):
            yield f"{pad}{key}:"
            yield from _text_lines(value, depth + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            yield f"{pad}{key}:"
            for i, item in enumerate(value):
                yield f"{pad}  - [{i}]"
                yield from _text_lines(item, depth + 2)
        elif isinstance(value, str) and "\n" in value:
            yield f"{pad}{key}: |"
            for line in value.splitlines():
                yield f"{pad}  {line}"
        else:
            yield f"{pad}{key}: {_scalar(value)}"


def complex_block(K: SimplicialComplex) -> dict:
    block = {
        "vertex_count": len(K.vertices),
        "vertices": list(K.vertices),
        "facets": [list(f) for f in K.facets],
        "dimension": K.dimension,
        "connected": K.is_connected(),
    }
    if block["connected"]:
        hom = H1Basis(K).summary
        pres = edge_path_group(K)
        block["betti1"] = hom.betti1
        block["torsion"] = hom.torsion
        block["presentation"] = {
            "generators": len(pres.generators),
            "relators": len(pres.relators),
            "agrees_with_homology": abelianized_invariants(pres) == hom,
            "text": pres.to_text(),
        }
    else:
        block["components"] = [list(c) for c in K.components()]
    return block


def isomorphism_block(X: IntegerSet) -> dict:
    rep = induced_h1_map(X)
    return {
        "h1_common": {"betti1": rep.source.betti1, "torsion": rep.source.torsion},
        "h1_prime": {"betti1": rep.target.betti1, "torsion": rep.target.torsion},
        "h1_equal": rep.source == rep.target,
        "matrix": rep.matrix.tolist(),
        "surjective": rep.surjective,
        "isomorphism": rep.isomorphism,
    }


def pk_block(X: IntegerSet) -> dict:
    k = property_pk(X)
    n = build_common(X).dimension
    block = {"k": k, "n": n, "identity_k_eq_n_plus_2": k == n + 2, "bound": k * k - 3 * k + 1}
    try:
        rep = rank_bound_report(X)
    except ComplexError:
        block.update(applicable=False, satisfied=None, verdict="not applicable (disconnected)")
        return block
    block.update(
        betti1=rep.betti1, applicable=rep.applicable, satisfied=rep.satisfied, verdict=rep.verdict
    )
    return block


def analyze_report(X: IntegerSet, per_component: bool = False) -> tuple[dict, list[str]]:
    G, D = build_common(X), build_prime(X)
    report: dict = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "raw": list(X.raw),
            "star": list(X.star),
            "ones_removed": X.ones_removed,
            "duplicates_removed": X.duplicates_removed,
        },
        "common": complex_block(G),
        "prime": complex_block(D),
    }
    failures = []
    eta_checks = {
        "near_surjectivity": check_near_surjectivity(X),
        "connectivity_equivalence": check_connectivity_theorem(X),
    }
    try:
        eta_checks["subset_reversal"] = check_subset_reversal(X)
    except EnumerationLimitError as exc:
        eta_checks["subset_reversal"] = f"skipped ({exc})"
    report["eta"] = eta_checks
    failures += [k for k, v in eta_checks.items() if v is False]
    for name in ("common", "prime"):
        pres = report[name].get("presentation")
        if pres and not pres["agrees_with_homology"]:
            failures.append(f"presentation vs homology ({name})")
    if G.is_connected():
        iso = isomorphism_block(X)
        report["isomorphism"] = iso
        if not iso["h1_equal"]:
            failures.append("h1 equality")
        if not iso["isomorphism"]:
            failures.append("induced map isomorphism")
    else:
        report["per_component_note"] = (
            f"common divisor complex has {len(G.components())} components; "
            "isomorphism is checked per component (use --per-component)"
        )
        if per_component:
            comps = []
            for verts in G.components():
                sub = IntegerSet.of(verts)
                iso = isomorphism_block(sub)
                comps.append({"vertices": list(verts), "primes": list(sub.primes), **iso})
                if not (iso["h1_equal"] and iso["isomorphism"]):
                    failures.append(f"component {list(verts)}")
            report["components"] = comps
    pk = pk_block(X)
    report["pk"] = pk
    if not pk["identity_k_eq_n_plus_2"]:
        failures.append("k = n + 2")
    report["checks_passed"] = not failures
    report["failed_checks"] = failures
    return report, failures


def cmd_analyze(args) -> int:
    X = read_set(args)
    start = time.perf_counter()
    report, failures = analyze_report(X, args.per_component)
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    sys.stdout.write(dump(report, args.json))
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def _loop_class(K: SimplicialComplex, loop) -> tuple[int, ...]:
    comp = next(c for c in K.components() if loop.basepoint in c)
    return H1Basis(K.induced(comp)).class_of_loop(loop)


def cmd_map_loop(args) -> int:
    X = read_set(args)
    seq = parse_values(args.loop)
    G, D = build_common(X), build_prime(X)
    if args.direction == "forward":
        source, target, there, back = G, D, eta_star, eta_star_inverse
    else:
        source, target, there, back = D, G, eta_star_inverse, eta_star
    try:
        loop = validate_path(source, seq)
    except ComplexError as exc:
        raise InputError(str(exc)) from None
    if not loop.is_loop:
        raise InputError("path is not closed (first and last vertex differ)")
    image = there(X, loop)
    validate_path(target, image.vertices)
    round_trip = back(X, image)
    validate_path(source, round_trip.vertices)
    same = _loop_class(source, loop) == _loop_class(source, round_trip)
    report = {
        "schema_version": SCHEMA_VERSION,
        "direction": args.direction,
        "loop": list(loop.vertices),
        "image": list(image.vertices),
        "round_trip": list(round_trip.vertices),
        "loop_class": list(_loop_class(source, loop)),
        "image_class": list(_loop_class(target, image)),
        "round_trip_class_equal": same,
    }
    sys.stdout.write(dump(report, args.json))
    return EXIT_OK if same else EXIT_CHECK_FAILED


def cmd_fuzz(args) -> int:
    for name in ("trials", "max_elems", "max_value", "workers"):
        if getattr(args, name) < 1:
            raise InputError(f"--{name.replace('_', '-')} must be positive")
    summary = run_fuzz(args.trials, args.max_elems, args.max_value, args.seed, args.workers)
    report = {
        "schema_version": SCHEMA_VERSION,
        "seed": args.seed,
        "trials": summary.trials,
        "empty_skipped": summary.empty,
        "connected": summary.connected,
        "disconnected": summary.disconnected,
        "failures": len(summary.failed),
        "passed": summary.trials - len(summary.failed),
    }
    if summary.failed:
        first = summary.failed[0]
        report["first_failure"] = {
            "trial": first.index,
            "seed": args.seed,
            "values": list(first.values),
            "checks": first.failures,
        }
    sys.stdout.write(dump(report, args.json))
    return EXIT_OK if summary.ok else EXIT_CHECK_FAILED


def to_dot(K: SimplicialComplex, name: str) -> str:
    edges = K.simplices(1)
    tris = K.simplices(2)
    lines = [f"graph {name} {{"]
    lines.append(f"  // vertices: {len(K.vertices)}, edges: {len(edges)}, triangles: {len(tris)}")
    lines += [f"  // triangle {a} {b} {c}" for a, b, c in tris]
    lines += [f"  {v};" for v in K.vertices]
    lines += [f"  {a} -- {b};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(K: SimplicialComplex, name: str) -> str:
    data = {
        "schema_version": SCHEMA_VERSION,
        "complex": name,
        "vertices": list(K.vertices),
        "facets": [list(f) for f in K.facets],
        "edges": [list(e) for e in K.simplices(1)],
        "triangles": [list(t) for t in K.simplices(2)],
    }
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def cmd_export(args) -> int:
    X = read_set(args)
    K = build_common(X) if args.which == "g" else build_prime(X)
    name = args.which.upper()
    text = to_dot(K, name) if args.format == "dot" else to_json(K, name)
    if args.output and args.output != "-":
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_pk(args) -> int:
    X = read_set(args)
    block = pk_block(X)
    shortcut = p_group_shortcut(X)
    block["p_group_shortcut"] = {"applies": shortcut.applies, "prime": shortcut.prime}
    report = {"schema_version": SCHEMA_VERSION, "source_label": args.label, "degrees": list(X.star), **block}
    sys.stdout.write(dump(report, args.json))
    return EXIT_OK if block["identity_k_eq_n_plus_2"] else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcdcomplex",
        description="Common-divisor and prime-divisor simplicial complexes of integer sets.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("values", nargs="*", help="integers, comma or space separated")
        p.add_argument("--file", help="file with one integer per line or a JSON array")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = with_input(sub.add_parser("analyze", help="full report for one set"))
    p.add_argument("--per-component", action="store_true", help="analyze each component of a disconnected set")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing (not byte-stable)")
    p.set_defaults(func=cmd_analyze)

    p = with_input(sub.add_parser("map-loop", help="map an edge loop through eta_* or its inverse"))
    p.add_argument("--loop", required=True, help="loop vertices, e.g. 22,210,33,22")
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    p.set_defaults(func=cmd_map_loop)

    p = sub.add_parser("fuzz", help="seeded randomized verification")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-elems", type=int, default=7)
    p.add_argument("--max-value", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = with_input(sub.add_parser("export", help="write G(X) or D(X) as DOT or JSON"))
    p.add_argument("--which", choices=("g", "d"), required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--output", "-o", help="output path (default: stdout)")
    p.set_defaults(func=cmd_export)

    p = with_input(sub.add_parser("pk", help="property P_k and the rank bound for a degree set"))
    p.add_argument("--label", default="", help="where the degree set came from")
    p.set_defaults(func=cmd_pk)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # theorem-level invariant violations land here
        print(f"internal check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
