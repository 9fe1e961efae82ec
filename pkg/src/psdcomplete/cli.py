"""Command-line interface.

Subcommands: analyze-graph, complete, pd-exists, extreme-ray, toric,
moment-check. Inputs and outputs are JSON; output is canonical (sorted keys,
two-space indent), so repeated runs on the same inputs are byte-identical.

Exit status: 0 on success, 1 when the verdict is negative (infeasible / no /
not_psd), 2 on malformed input, reported as {"code", "message", "location"}.
The tolerance may also be set through the PSDCOMPLETE_TOL environment
variable; an explicit --tol wins.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import completion, graphs, moments, rays, serialize
from .errors import InputError, PsdCompleteError
from .linalg import DEFAULT_TOL, GRAM_TOL, numeric_rank, psd_min_eig

ENV_TOL = "PSDCOMPLETE_TOL"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psdcomplete",
        description="PSD completion of graph-patterned matrices, extreme-ray "
                    "certificates, and lattice-polygon index bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--tol", type=float, default=None,
                       help=f"relative tolerance (default {DEFAULT_TOL}, "
                            f"or ${ENV_TOL} when set)")
        p.add_argument("--seed", type=int, default=0, help="random seed")
        p.add_argument("--out", metavar="FILE", default=None,
                       help="write the JSON report here instead of stdout")

    p = sub.add_parser("analyze-graph", help="chordality, cliques and index bounds")
    p.add_argument("--graph", required=True, metavar="FILE")
    add_common(p)

    p = sub.add_parser("complete", help="complete partial data or certify failure")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--partial", required=True, metavar="FILE")
    add_common(p)

    p = sub.add_parser("pd-exists", help="decide positive definite completability")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--partial", required=True, metavar="FILE")
    add_common(p)

    p = sub.add_parser("extreme-ray", help="emit the m-cycle extreme-ray certificate")
    p.add_argument("--cycle", required=True, type=int, metavar="M")
    add_common(p)

    p = sub.add_parser("toric", help="boundary lattice points and index bounds")
    p.add_argument("--polygon", required=True, metavar="FILE")
    add_common(p)

    p = sub.add_parser("moment-check", help="representability of a moment operator")
    p.add_argument("--moment", required=True, metavar="FILE")
    p.add_argument("--polygon", required=True, metavar="FILE",
                   help="polygon supplying the rank bound")
    add_common(p)

    return parser


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return float(args.tol)
    env = os.environ.get(ENV_TOL)
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise InputError(f"invalid {ENV_TOL} value {env!r}",
                             location=ENV_TOL, code="value") from exc
    return DEFAULT_TOL


def _load_graph(path: str) -> graphs.Graph:
    return serialize.load_graph(serialize.load_json_file(path), location=path)


def _load_partial(path: str) -> completion.PartialSymmetricMatrix:
    n, diag, entries = serialize.load_partial(serialize.load_json_file(path),
                                              location=path)
    return completion.PartialSymmetricMatrix(n, diag, entries)


def _run_analyze_graph(args, tol: float):
    g = _load_graph(args.graph)
    chordal, _ = graphs.is_chordal(g)
    cyc = graphs.shortest_induced_cycle(g)
    report = {
        "chordal": chordal,
        "clique_number": graphs.clique_number(g),
        "shortest_induced_cycle": list(cyc.vertices) if cyc else None,
        "gl_index": serialize.render_index(graphs.green_lazarsfeld_index(g))
        if cyc else "infinity",
        "hankel_index": serialize.render_index(graphs.hankel_index(g))
        if cyc else "infinity",
        "tolerance": tol,
    }
    return report, False


def _run_complete(args, tol: float):
    g = _load_graph(args.graph)
    part = _load_partial(args.partial)
    rep = completion.complete_or_certify(g, part, tol=tol)
    if rep.completion is not None:
        # Re-validate before emitting: the completion must still match the
        # data and be PSD at a small multiple of the working tolerance.
        slack = 10.0 * GRAM_TOL * (1.0 + part.max_abs())
        if completion.completion_residual(part, rep.completion) > slack or \
                psd_min_eig(rep.completion) < -slack:
            raise PsdCompleteError("completion failed re-validation against the input")
    report = {
        "verdict": rep.verdict,
        "completion": serialize.dump_matrix(rep.completion)["rows"]
        if rep.completion is not None else None,
        "rank": rep.rank,
        "certificate": serialize.dump_certificate(rep.certificate)
        if rep.certificate is not None else None,
        "separating_value": rep.separating_value,
        "violating_clique": list(rep.violating_clique)
        if rep.violating_clique is not None else None,
        "tolerance": tol,
    }
    return report, rep.verdict == "infeasible"


def _run_pd_exists(args, tol: float):
    g = _load_graph(args.graph)
    part = _load_partial(args.partial)
    verdict = completion.pd_completion_exists(g, part, tol=tol)
    report = {
        "answer": verdict.answer,
        "witness": serialize.dump_matrix(verdict.witness)["rows"]
        if verdict.witness is not None else None,
        "failed_condition": verdict.failed_condition,
        "tolerance": tol,
    }
    return report, verdict.answer == "no"


def _run_extreme_ray(args, tol: float):
    cert = rays.cycle_extreme_ray(args.cycle)
    report = serialize.dump_certificate(cert)
    report["tolerance"] = tol
    report["seed"] = args.seed
    return report, False


def _run_toric(args, tol: float):
    poly = serialize.load_polygon(serialize.load_json_file(args.polygon),
                                  location=args.polygon)
    b = moments.boundary_lattice_points(poly)
    report = {
        "boundary_lattice_points": b,
        "gl_index": b - 3 if b >= 4 else None,
        "hankel_lower_bound": b - 2 if b >= 4 else None,
        "tolerance": tol,
    }
    return report, False


def _run_moment_check(args, tol: float):
    op = serialize.load_moment_operator(serialize.load_json_file(args.moment),
                                        location=args.moment)
    poly = serialize.load_polygon(serialize.load_json_file(args.polygon),
                                  location=args.polygon)
    bound = moments.toric_hankel_lower_bound(poly)
    verdict = moments.moment_representable(op, bound, tol=tol)
    report = {
        "verdict": verdict,
        "rank": int(numeric_rank(op.matrix, tol)),
        "hankel_lower_bound": bound,
        "tolerance": tol,
    }
    return report, verdict == "not_psd"


_RUNNERS = {
    "analyze-graph": _run_analyze_graph,
    "complete": _run_complete,
    "pd-exists": _run_pd_exists,
    "extreme-ray": _run_extreme_ray,
    "toric": _run_toric,
    "moment-check": _run_moment_check,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        tol = _resolve_tol(args)
        if not math.isfinite(tol) or tol < 0:
            raise InputError(f"tolerance must be a finite nonnegative number, got {tol}",
                             location="--tol", code="value")
        report, negative = _RUNNERS[args.command](args, tol)
    except InputError as exc:
        sys.stdout.write(serialize.canonical_dumps(
            {"code": exc.code, "message": exc.message, "location": exc.location}
        ))
        return 2
    except PsdCompleteError as exc:
        sys.stdout.write(serialize.canonical_dumps(
            {"code": "value", "message": str(exc), "location": args.command}
        ))
        return 2

    text = serialize.canonical_dumps(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if negative else 0


if __name__ == "__main__":
    sys.exit(main())
