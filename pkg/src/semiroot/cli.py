"""Command line front end.

Input is a single JSON document (``--input FILE``) or an inline generator
list (``--gens "2,0;3,0;0,1"``).  Reports are canonical JSON (sorted keys,
sorted vectors) so identical invocations are byte-identical; a timing
field is added unless ``--reproducible`` is set.

Exit codes: 0 success; 1 definite NO under ``--strict``; 2 errors;
3 UNKNOWN_UP_TO_BOUND under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import classify, liealg, reconstruct, roots
from .classify import Status, Verdict
from .errors import SemirootError
from .semigroup import AffineSemigroup

COMMANDS = (
    "classify",
    "roots",
    "exceptional",
    "bracket",
    "member",
    "cocycle",
    "fingerprint",
    "compare",
    "reconstruct",
)


@dataclass
class InputSpec:
    generators: list[list[int]]
    label: str | None = None
    second_generators: list[list[int]] | None = None
    derivation: list | None = None
    x: list | None = None
    y: list | None = None
    dimension: int | None = None
    degree: int | None = None
    bound: int | None = None


def parse_input(text: str) -> InputSpec:
    """Parse and validate the JSON input document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SemirootError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise SemirootError("input document must be a JSON object")
    spec = InputSpec(generators=[])
    if "semigroups" in doc:
        pair = doc["semigroups"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise SemirootError("'semigroups' must list exactly two objects")
        spec.generators = _generator_list(pair[0])
        spec.second_generators = _generator_list(pair[1])
    elif "generators" in doc:
        spec.generators = _generator_list(doc)
    spec.label = doc.get("label")
    spec.derivation = doc.get("derivation")
    spec.x = doc.get("x")
    spec.y = doc.get("y")
    if "dimension" in doc:
        spec.dimension = int(doc["dimension"])
    if "degree" in doc:
        spec.degree = int(doc["degree"])
    if "bound" in doc:
        spec.bound = int(doc["bound"])
    return spec


def _generator_list(doc) -> list[list[int]]:
    gens = doc.get("generators") if isinstance(doc, dict) else None
    if not isinstance(gens, list):
        raise SemirootError("missing 'generators' list")
    if not gens:
        raise SemirootError("'generators' must be nonempty")
    out = []
    for g in gens:
        if not isinstance(g, list) or not all(isinstance(x, int) for x in g):
            raise SemirootError(f"generator {g!r} is not a list of integers")
        out.append(g)
    return out


def _parse_gens_text(text: str) -> list[list[int]]:
    vectors = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            vectors.append([int(x) for x in chunk.split(",")])
        except ValueError as exc:
            raise SemirootError(f"cannot parse generator {chunk!r}") from exc
    return vectors


def _parse_derivation(terms, n: int) -> liealg.Derivation:
    """Terms are [lambda, axis, numerator, denominator] lists."""
    if not isinstance(terms, list):
        raise SemirootError("derivation must be a list of terms")
    acc = {}
    for term in terms:
        try:
            lam, axis, num, den = term
            key = (tuple(int(x) for x in lam), int(axis))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(int(num), int(den))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise SemirootError(f"bad derivation term {term!r}") from exc
    return liealg.Derivation(n, acc)


# -- serialization --------------------------------------------------------


def _plain(obj):
    """Canonical JSON-ready form: tuples to lists, Fractions to strings."""
    if isinstance(obj, Verdict):
        return {
            "status": obj.status.value,
            "bound": obj.bound,
            "witness": _plain(obj.witness),
            "note": obj.note,
        }
    if isinstance(obj, Status):
        return obj.value
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if hasattr(obj, "__dataclass_fields__"):
        return {
            k: _plain(getattr(obj, k)) for k in obj.__dataclass_fields__
        }
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _derivation_plain(d: liealg.Derivation):
    return [
        [list(lam), axis, c.numerator, c.denominator]
        for (lam, axis), c in d.terms.items()
    ]


# -- command handlers ------------------------------------------------------


def _semigroup(spec: InputSpec) -> AffineSemigroup:
    return AffineSemigroup(spec.generators)


def _cmd_classify(spec, args):
    sg = _semigroup(spec)
    bound = args.bound if args.bound is not None else classify.default_bound(sg)
    report = classify.classification_report(sg, bound)
    result = {
        "standard_simplicial": _plain(report.standard_simplicial),
        "cohen_macaulay": _plain(report.cohen_macaulay),
        "buchsbaum": _plain(report.buchsbaum),
        "cm_defect": _plain(report.cm_defect),
        "pseudo_members": _plain(report.pseudo_members),
        "gorenstein": report.gorenstein,
        "cm_type": report.cm_type,
    }
    bounds = {"box": bound, "stabilization_box": 2 * bound}
    return result, bounds, report.stabilized, report.cohen_macaulay.status


def _cmd_roots(spec, args):
    sg = _semigroup(spec)
    table = roots.root_table(sg, args.degree)
    entries = [
        {
            "lambda": list(lam),
            "dimension": rs.dimension,
            "kind": rs.kind.value,
            "axis": rs.axis,
            "basis": _plain(rs.space.basis),
        }
        for lam, rs in table.sorted_items()
    ]
    return {"roots": entries}, {"degree": args.degree}, True, None


def _cmd_exceptional(spec, args):
    sg = _semigroup(spec)
    if args.axis is None:
        raise SemirootError("--axis is required for 'exceptional'")
    gens = roots.exceptional_generators(sg, args.axis, args.degree)
    all_roots = roots.exceptional_roots(sg, args.axis, args.degree)
    result = {
        "axis": args.axis,
        "generators": _plain(gens),
        "roots": _plain(all_roots),
        "regenerated_matches": roots.regenerate_exceptional(
            sg, args.axis, args.degree
        )
        == all_roots,
    }
    return result, {"degree": args.degree}, True, None


def _cmd_bracket(spec, args):
    if spec.x is None or spec.y is None:
        raise SemirootError("'bracket' needs 'x' and 'y' derivation terms")
    n = spec.dimension
    if n is None:
        if spec.generators:
            n = len(spec.generators[0])
        else:
            raise SemirootError("'bracket' needs 'dimension' or 'generators'")
    x = _parse_derivation(spec.x, n)
    y = _parse_derivation(spec.y, n)
    z = x.bracket(y)
    return {"bracket": _derivation_plain(z)}, {}, True, None


def _cmd_member(spec, args):
    sg = _semigroup(spec)
    if spec.derivation is None:
        raise SemirootError("'member' needs a 'derivation' term list")
    d = _parse_derivation(spec.derivation, sg.n)
    verdict = liealg.in_derivation_algebra(sg, d, args.bound)
    return {"member": _plain(verdict)}, {}, True, verdict.status


def _cmd_cocycle(spec, args):
    sg = _semigroup(spec)
    sol = liealg.degree_zero_cocycles(sg, args.degree)
    result = {
        "restricted_equal": sol.restricted_equal,
        "inner_dimension": sol.inner_dimension,
        "solution_dimension": sol.solution_space.dimension,
        "unknowns": len(sol.unknown_index),
        "core_degree": sol.core_degree,
    }
    status = Status.YES if sol.restricted_equal else Status.NO
    return result, {"degree": args.degree}, True, status


def _cmd_fingerprint(spec, args):
    sg = _semigroup(spec)
    f = reconstruct.fingerprint(sg, args.degree)
    dims = [[list(lam), dim] for lam, dim in f.dims]
    return {"fingerprint": dims, "n": f.n}, {"degree": args.degree}, True, None


def _cmd_compare(spec, args):
    if spec.second_generators is None:
        raise SemirootError("'compare' needs a 'semigroups' pair")
    s1 = AffineSemigroup(spec.generators)
    s2 = AffineSemigroup(spec.second_generators)
    f1 = reconstruct.fingerprint(s1, args.degree)
    f2 = reconstruct.fingerprint(s2, args.degree)
    equal_fp = reconstruct.fingerprints_equal(f1, f2)
    equal_sets = all(s2.contains(g) for g in s1.generators) and all(
        s1.contains(g) for g in s2.generators
    )
    result = {"fingerprints_equal": equal_fp, "semigroups_equal": equal_sets}
    status = Status.YES if equal_fp else Status.NO
    return result, {"degree": args.degree}, True, status


def _cmd_reconstruct(spec, args):
    stilde = _semigroup(spec)
    recovered = reconstruct.gorenstein_reconstruct(stilde)
    return (
        {"generators": _plain(recovered.generators)},
        {},
        True,
        None,
    )


_HANDLERS = {
    "classify": _cmd_classify,
    "roots": _cmd_roots,
    "exceptional": _cmd_exceptional,
    "bracket": _cmd_bracket,
    "member": _cmd_member,
    "cocycle": _cmd_cocycle,
    "fingerprint": _cmd_fingerprint,
    "compare": _cmd_compare,
    "reconstruct": _cmd_reconstruct,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiroot",
        description="Classification and derivation-algebra root data of "
        "simplicial affine semigroups.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="JSON input file")
    parser.add_argument(
        "--gens", help="inline generators, e.g. \"2,0;3,0;0,1\""
    )
    parser.add_argument("--degree", type=int, default=None)
    parser.add_argument("--bound", type=int, default=None)
    parser.add_argument("--axis", type=int, default=None)
    parser.add_argument("--strict", action="store_true")
    parser.add_argument("--reproducible", action="store_true")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--text", action="store_true")
    return parser


def run_command(argv) -> tuple[dict, int]:
    """Execute one command; returns (report, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    if args.input:
        with open(args.input, "r", encoding="utf-8") as handle:
            spec = parse_input(handle.read())
    elif args.gens:
        spec = InputSpec(generators=_parse_gens_text(args.gens))
    else:
        spec = parse_input(sys.stdin.read())
    # flags win; the input document may supply defaults
    if args.degree is None:
        args.degree = spec.degree if spec.degree is not None else 8
    if args.bound is None:
        args.bound = spec.bound
    result, bounds, stabilized, status = _HANDLERS[args.command](spec, args)
    report = {
        "command": args.command,
        "input": {
            "generators": spec.generators,
            "label": spec.label,
        },
        "bounds": bounds,
        "result": result,
        "stabilized": stabilized,
    }
    if spec.second_generators is not None:
        report["input"]["second_generators"] = spec.second_generators
    if not args.reproducible:
        report["timing_seconds"] = round(time.perf_counter() - started, 6)
    code = 0
    if args.strict and status is not None:
        if status is Status.NO:
            code = 1
        elif status is Status.UNKNOWN_UP_TO_BOUND:
            code = 3
    return report, code


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    lines.append(f"bounds: {json.dumps(report['bounds'], sort_keys=True)}")
    lines.append(f"stabilized: {report['stabilized']}")
    for key, value in sorted(report["result"].items()):
        lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        report, code = run_command(argv)
    except SemirootError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    except OSError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    wants_text = "--text" in argv
    if wants_text:
        print(_render_text(report))
    else:
        print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
