"""Command line interface, the cell-list parser and the shared command runner.

Input collections use the brace-list encoding (each cell as its two diagonal
corners, lower left first) or the equivalent JSON array syntax.  Every
subcommand is also reachable through the JSON service; both produce the same
canonical JSON payload bytes for the same request.
"""

import argparse
import json
import sys
import time

from . import geometry, hilbert, ideals, polyalg, toric
from .errors import (
    Deadline,
    ParseError,
    PolyoError,
    PreconditionError,
    ResourceLimitExceeded,
)
from .groebner import initial_ideal

COMMANDS = ("classify", "ideal", "matrix", "toric", "compare", "groebner", "initial", "hilbert")
DEFAULT_TIMEOUT_SECONDS = 300.0

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_TIMEOUT = 4


def parse_encoding(text, dedupe=False):
    """Parse a brace-list (M2 style) or JSON cell encoding into a collection.

    Example: ``{{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}}`` or the same with
    square brackets.
    """
    if not isinstance(text, str):
        raise ParseError("encoding must be a string")
    normalized = text.strip().replace("{", "[").replace("}", "]")
    if not normalized:
        raise ParseError("empty encoding")
    try:
        data = json.loads(normalized)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed cell list: {exc.msg} at position {exc.pos}")
    return cells_from_data(data, dedupe=dedupe)


def cells_from_data(data, dedupe=False):
    """Validate the nested-list form: [[[i,j],[i+1,j+1]], ...]."""
    if not isinstance(data, list):
        raise ParseError("cell list must be a list of cells")
    pairs = []
    for entry in data:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or any(not isinstance(c, list) or len(c) != 2 for c in entry)
            or any(not isinstance(n, int) or isinstance(n, bool) for c in entry for n in c)
        ):
            raise ParseError(
                "each cell must be a pair of integer corner pairs, e.g. [[1,1],[2,2]]"
            )
        pairs.append((tuple(entry[0]), tuple(entry[1])))
    return geometry.CellCollection.from_corner_pairs(pairs, dedupe=dedupe)


def render_encoding(P):
    """Brace-list encoding of a collection (cells sorted by lower-left corner)."""
    cells = ", ".join(
        f"{{{{{c.a.i}, {c.a.j}}}, {{{c.a.i + 1}, {c.a.j + 1}}}}}" for c in P
    )
    return f"{{{cells}}}"


def canonical_json_bytes(payload):
    """The stable byte serialization shared by the CLI and the HTTP service."""
    return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()


# ---------------------------------------------------------------------------
# result builders


def _poly_payload(f):
    return {
        "text": str(f),
        "terms": [
            {
                "coefficient": f.ring.field.render(c),
                "monomial": [[str(f.ring.variables[r]), e] for r, e in m.exps],
            }
            for m, c in f.terms
        ],
    }


def _ring_payload(ring):
    return {
        "field": ring.field.name,
        "order": ring.order.name,
        "variables": [str(v) for v in ring.variables],
    }


def _ideal_payload(handle):
    return {
        "ring": _ring_payload(handle.ring),
        "generator_count": len(handle.generators),
        "generators": [_poly_payload(g) for g in handle.generators],
    }


def _classify_result(P, options, deadline):
    cls = geometry.classify(P)
    holes = geometry.detect_holes(P)
    return {
        "cell_count": P.rank,
        "vertex_count": len(P.vertices),
        "is_polyomino": cls.is_polyomino,
        "weakly_connected": cls.weakly_connected,
        "row_convex": cls.row_convex,
        "column_convex": cls.column_convex,
        "convex": cls.convex,
        "simple": cls.simple,
        "hole_count": cls.hole_count,
        "component_count": cls.component_count,
        "hole_corners": [[h.corner.i, h.corner.j] for h in holes],
        "encoding": render_encoding(P),
    }


def _ideal_handle(P, options):
    return ideals.polyo_ideal(
        P,
        field_spec=options["field"],
        ring_choice=options["ring_choice"],
        term_order=options["term_order"],
    )


def _ideal_result(P, options, deadline):
    return _ideal_payload(_ideal_handle(P, options))


def _matrix_result(P, options, deadline):
    M = ideals.polyo_matrix(P)
    return {
        "row_count": M.row_count,
        "column_count": M.column_count,
        "entries": [list(row) for row in M.entry_strings()],
        "text": M.render(),
    }


def _holes_option(P, options):
    holes = options.get("holes", "auto")
    if holes in (None, "auto"):
        return None
    if isinstance(holes, str):
        normalized = holes.strip().replace("{", "[").replace("}", "]")
        try:
            holes = json.loads(normalized)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed hole list: {exc.msg}")
    if not isinstance(holes, list) or any(
        not isinstance(p, list) or len(p) != 2 or any(not isinstance(n, int) for n in p)
        for p in holes
    ):
        raise ParseError("holes must be \"auto\" or a list of corner pairs [[i,j],...]")
    return tuple(geometry.GridPoint(*p) for p in holes)


def _toric_result(P, options, deadline):
    holes = _holes_option(P, options)
    handle = toric.polyo_toric(
        P,
        holes=holes,
        field_spec=options["field"],
        term_order=options["term_order"],
        deadline=deadline,
    )
    used = holes if holes is not None else tuple(
        h.corner for h in geometry.detect_holes(P)
    )
    payload = _ideal_payload(handle)
    payload["hole_corners"] = [[p.i, p.j] for p in used]
    return payload


def _compare_result(P, options, deadline):
    holes = _holes_option(P, options)
    cmp = toric.toric_compare(
        P, field_spec=options["field"], holes=holes, deadline=deadline
    )
    return {
        "equal": cmp.equal,
        "theorem_applies": cmp.theorem_applies,
        "extra_generators": [_poly_payload(g) for g in cmp.extra_generators],
        "inner_minor_count": cmp.inner_minor_count,
        "toric_generator_count": cmp.toric_generator_count,
        "hole_corners": [[p.i, p.j] for p in cmp.hole_corners],
    }


def _groebner_result(P, options, deadline):
    handle = _ideal_handle(P, options)
    basis = handle.groebner_basis(deadline=deadline)
    return {
        "ring": _ring_payload(handle.ring),
        "basis_size": len(basis),
        "basis": [_poly_payload(g) for g in basis],
    }


def _initial_result(P, options, deadline):
    handle = _ideal_handle(P, options)
    monomials = initial_ideal(handle, deadline=deadline)
    return {
        "ring": _ring_payload(handle.ring),
        "monomial_count": len(monomials),
        "monomials": [handle.ring.render_monomial(m) for m in monomials],
    }


def _hilbert_result(P, options, deadline):
    handle = _ideal_handle(P, options)
    series = hilbert.reduced_hilbert_series(handle, deadline=deadline)
    return {
        "numerator_coefficients": list(series.numerator),
        "numerator": series.numerator_text(),
        "denominator_exponent": series.denominator_exponent,
        "multiplicity": series.numerator_at_one(),
        "text": str(series),
    }


_RESULT_BUILDERS = {
    "classify": _classify_result,
    "ideal": _ideal_result,
    "matrix": _matrix_result,
    "toric": _toric_result,
    "compare": _compare_result,
    "groebner": _groebner_result,
    "initial": _initial_result,
    "hilbert": _hilbert_result,
}


def normalize_options(raw):
    raw = dict(raw or {})
    options = {
        "field": raw.pop("field", "qq"),
        "ring_choice": raw.pop("ring_choice", 1),
        "term_order": raw.pop("term_order", "lex"),
        "holes": raw.pop("holes", "auto"),
        "dedupe": bool(raw.pop("dedupe", False)),
        "timeout_seconds": raw.pop("timeout_seconds", DEFAULT_TIMEOUT_SECONDS),
    }
    if raw:
        raise ParseError(f"unknown options: {sorted(raw)}")
    if options["ring_choice"] not in (1, 2):
        raise ParseError("ring_choice must be 1 or 2")
    if options["term_order"] not in ("lex", "grevlex"):
        raise ParseError("term_order must be lex or grevlex")
    timeout = options["timeout_seconds"]
    if timeout is not None:
        try:
            timeout = float(timeout)
        except (TypeError, ValueError):
            raise ParseError("timeout_seconds must be a number")
        if timeout <= 0:
            raise ParseError("timeout_seconds must be positive")
        options["timeout_seconds"] = timeout
    polyalg.field_from_spec(options["field"])  # validate early
    return options


def run_command(request):
    """Execute a JobRequest dict and return (JobResponse dict, elapsed seconds).

    The response payload is deterministic for a given request; timing is
    returned separately so CLI and service payloads stay byte-identical.
    """
    started = time.monotonic()
    command = request.get("command")
    warnings = []
    try:
        if command not in COMMANDS:
            raise ParseError(f"unknown command {command!r} (choose from {', '.join(COMMANDS)})")
        options = normalize_options(request.get("options"))
        cells = request.get("cells")
        if isinstance(cells, str):
            P = parse_encoding(cells, dedupe=options["dedupe"])
        elif isinstance(cells, list):
            P = cells_from_data(cells, dedupe=options["dedupe"])
        else:
            raise ParseError("request must carry cells as an encoding string or a list")
        if options["ring_choice"] == 2 and command in ("ideal", "groebner", "initial", "hilbert"):
            if options["term_order"] != "lex":
                warnings.append("term_order is ignored when ring_choice is 2")
        deadline = Deadline(options["timeout_seconds"])
        result = _RESULT_BUILDERS[command](P, options, deadline)
        response = {
            "status": "ok",
            "command": command,
            "result": result,
            "warnings": warnings,
        }
    except PolyoError as exc:
        response = {
            "status": "error",
            "command": command,
            "error": {"code": exc.code, "message": str(exc)},
            "warnings": warnings,
        }
    return response, time.monotonic() - started


def exit_code_for(response):
    if response["status"] == "ok":
        return EXIT_OK
    code = response["error"]["code"]
    if code == "parse_error":
        return EXIT_PARSE
    if code == "timeout":
        return EXIT_TIMEOUT
    return EXIT_PRECONDITION


# ---------------------------------------------------------------------------
# text rendering


def render_text(response):
    if response["status"] == "error":
        err = response["error"]
        return f"error[{err['code']}]: {err['message']}"
    command = response["command"]
    result = response["result"]
    lines = []
    if command == "classify":
        for key in (
            "cell_count", "vertex_count", "component_count", "is_polyomino",
            "weakly_connected", "row_convex", "column_convex", "convex",
            "simple", "hole_count",
        ):
            lines.append(f"{key} = {result[key]}")
        if result["hole_corners"]:
            corners = ", ".join(f"({i},{j})" for i, j in result["hole_corners"])
            lines.append(f"hole_corners = {corners}")
    elif command in ("ideal", "toric"):
        lines.append(f"ring: {', '.join(result['ring']['variables'])}")
        lines.append(f"{result['generator_count']} generators:")
        lines.extend(g["text"] for g in result["generators"])
    elif command == "matrix":
        lines.append(result["text"])
    elif command == "groebner":
        lines.append(f"{result['basis_size']} basis elements:")
        lines.extend(g["text"] for g in result["basis"])
    elif command == "initial":
        lines.append(f"{result['monomial_count']} monomials:")
        lines.extend(result["monomials"])
    elif command == "compare":
        verdict = "I = J" if result["equal"] else "I != J"
        lines.append(verdict)
        lines.append(f"theorem_applies = {result['theorem_applies']}")
        if result["extra_generators"]:
            lines.append("extra generators of degree >= 3:")
            lines.extend(g["text"] for g in result["extra_generators"])
    elif command == "hilbert":
        lines.append(result["text"])
        lines.append(f"multiplicity = {result['multiplicity']}")
    for w in response["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argparse front end


def _add_common_options(sub):
    sub.add_argument("cells", nargs="?", default="-",
                     help="cell encoding (brace list or JSON); '-' reads stdin")
    sub.add_argument("--field", default="qq", help="qq, fp or fp:<prime>")
    sub.add_argument("--ring-choice", type=int, default=1, choices=(1, 2),
                     dest="ring_choice")
    sub.add_argument("--term-order", default="lex", choices=("lex", "grevlex"),
                     dest="term_order")
    sub.add_argument("--holes", default="auto",
                     help='"auto" or explicit corner list, e.g. "{{2,3}}"')
    sub.add_argument("--format", default="text", choices=("text", "json"))
    sub.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT_SECONDS,
                     help="seconds before the computation is aborted")
    sub.add_argument("--dedupe", action="store_true",
                     help="drop duplicate cells instead of rejecting them")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polyoideals",
        description="Inner 2-minor ideals of collections of grid cells",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        _add_common_options(sub)
    serve = subparsers.add_parser("serve", help="run the local JSON service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8642)
    return parser


def request_from_args(args):
    cells = args.cells
    if cells == "-":
        cells = sys.stdin.read()
    return {
        "command": args.subcommand,
        "cells": cells,
        "options": {
            "field": args.field,
            "ring_choice": args.ring_choice,
            "term_order": args.term_order,
            "holes": args.holes,
            "dedupe": args.dedupe,
            "timeout_seconds": args.timeout,
        },
    }


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.subcommand == "serve":
        from .service import serve_api

        serve_api(args.host, args.port)
        return EXIT_OK
    response, elapsed = run_command(request_from_args(args))
    if args.format == "json":
        sys.stdout.buffer.write(canonical_json_bytes(response))
    else:
        print(render_text(response))
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return exit_code_for(response)


if __name__ == "__main__":
    sys.exit(main())
