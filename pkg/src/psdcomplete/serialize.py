"""JSON schemas for graphs, matrices, partial data, certificates, polygons, moments.

Loaders validate shape and value constraints and raise InputError with a
location breadcrumb; dumpers emit plain dicts ready for canonical_dumps,
which renders deterministic, byte-stable JSON (sorted keys, two-space
indent, shortest round-trip floats).
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import InputError
from .graphs import Graph
from .linalg import SYM_TOL
from .moments import LatticePolygon, MomentOperator
from .rays import ExtremeRayCertificate

__all__ = [
    "load_json_file",
    "canonical_dumps",
    "load_graph",
    "dump_graph",
    "load_matrix",
    "dump_matrix",
    "load_partial",
    "dump_partial",
    "load_certificate",
    "dump_certificate",
    "load_polygon",
    "load_moment_operator",
    "render_index",
]


def load_json_file(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(str(exc), location=path, code="io") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}", location=path, code="bad-json") from exc


def _plain(obj):
    """Recursively convert numpy containers/scalars to plain Python values."""
    if isinstance(obj, np.ndarray):
        return [_plain(row) for row in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def canonical_dumps(obj) -> str:
    return json.dumps(_plain(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def render_index(value):
    """Finite indices stay integers; infinite ones render as the string "infinity"."""
    if value == math.inf:
        return "infinity"
    return int(value)


def _require(obj, key, location):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"missing key {key!r}", location=location, code="schema")
    return obj[key]


def _int_value(x, what, location):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}", location=location,
                         code="schema")
    return x


def _float_value(x, what, location):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{what} must be a number, got {x!r}", location=location,
                         code="schema")
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"{what} must be finite", location=location, code="value")
    return x


def _float_list(xs, what, location):
    if not isinstance(xs, list):
        raise InputError(f"{what} must be a list", location=location, code="schema")
    return [_float_value(x, f"{what}[{i}]", location) for i, x in enumerate(xs)]


def _float_rows(rows, what, location):
    if not isinstance(rows, list) or not rows:
        raise InputError(f"{what} must be a non-empty list of rows", location=location,
                         code="schema")
    out = [_float_list(r, f"{what}[{i}]", location) for i, r in enumerate(rows)]
    width = len(out[0])
    if any(len(r) != width for r in out):
        raise InputError(f"{what} rows have unequal lengths", location=location,
                         code="schema")
    return np.array(out, dtype=float)


def load_graph(obj, location="graph") -> Graph:
    n = _int_value(_require(obj, "n", location), "n", location)
    edges_raw = _require(obj, "edges", location)
    if not isinstance(edges_raw, list):
        raise InputError("edges must be a list of [i, j] pairs", location=location,
                         code="schema")
    edges = []
    for t, e in enumerate(edges_raw):
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"edges[{t}] must be a pair", location=location,
                             code="schema")
        i = _int_value(e[0], f"edges[{t}][0]", location)
        j = _int_value(e[1], f"edges[{t}][1]", location)
        edges.append((i, j))
    try:
        return Graph.from_edges(n, edges)
    except InputError as exc:
        raise InputError(exc.message, location=location, code=exc.code) from exc


def dump_graph(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def load_matrix(obj, location="matrix") -> np.ndarray:
    n = _int_value(_require(obj, "n", location), "n", location)
    rows = _float_rows(_require(obj, "rows", location), "rows", location)
    if rows.shape != (n, n):
        raise InputError(f"rows shape {rows.shape} != ({n},{n})", location=location,
                         code="value")
    scale = 1.0 + float(np.max(np.abs(rows)))
    if float(np.max(np.abs(rows - rows.T))) > SYM_TOL * scale:
        raise InputError("matrix is not symmetric within tolerance",
                         location=location, code="value")
    return 0.5 * (rows + rows.T)


def dump_matrix(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=float)
    return {"n": int(a.shape[0]), "rows": _plain(a)}


def load_partial(obj, location="partial"):
    """Returns (n, diag, entries) for PartialSymmetricMatrix construction."""
    n = _int_value(_require(obj, "n", location), "n", location)
    diag = _float_list(_require(obj, "diag", location), "diag", location)
    if len(diag) != n:
        raise InputError(f"diag length {len(diag)} != n={n}", location=location,
                         code="value")
    raw = _require(obj, "entries", location)
    if not isinstance(raw, list):
        raise InputError("entries must be a list of [i, j, value] triples",
                         location=location, code="schema")
    entries = {}
    for t, e in enumerate(raw):
        if not isinstance(e, list) or len(e) != 3:
            raise InputError(f"entries[{t}] must be an [i, j, value] triple",
                             location=location, code="schema")
        i = _int_value(e[0], f"entries[{t}][0]", location)
        j = _int_value(e[1], f"entries[{t}][1]", location)
        v = _float_value(e[2], f"entries[{t}][2]", location)
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise InputError(f"entries[{t}] index ({i},{j}) invalid for n={n}",
                             location=location, code="value")
        key = (min(i, j), max(i, j))
        if key in entries:
            raise InputError(f"duplicate entry for pair {key}", location=location,
                             code="value")
        entries[key] = v
    return n, np.array(diag), entries


def dump_partial(n: int, diag, entries) -> dict:
    return {
        "n": int(n),
        "diag": _plain(np.asarray(diag)),
        "entries": [[int(i), int(j), float(v)] for (i, j), v in sorted(entries.items())],
    }


def load_certificate(obj, location="certificate") -> ExtremeRayCertificate:
    n = _int_value(_require(obj, "n", location), "n", location)
    tau = _float_rows(_require(obj, "tau", location), "tau", location)
    points = _float_rows(_require(obj, "points", location), "points", location)
    relation = _float_list(_require(obj, "relation", location), "relation", location)
    weights = _float_list(_require(obj, "weights", location), "weights", location)
    kernel = _float_list(_require(obj, "kernel_form", location), "kernel_form", location)
    rank = _int_value(_require(obj, "rank", location), "rank", location)
    if tau.shape != (n, n):
        raise InputError(f"tau shape {tau.shape} != ({n},{n})", location=location,
                         code="value")
    s = points.shape[0]
    if points.shape[1] != n or len(relation) != s or len(weights) != s or len(kernel) != n:
        raise InputError("certificate field shapes are inconsistent",
                         location=location, code="value")
    return ExtremeRayCertificate(
        tau=tau,
        points=points,
        relation=np.array(relation),
        weights=np.array(weights),
        kernel_form=np.array(kernel),
        rank=rank,
    )


def dump_certificate(cert: ExtremeRayCertificate) -> dict:
    return {
        "n": int(cert.n),
        "tau": _plain(cert.tau),
        "points": _plain(cert.points),
        "relation": _plain(cert.relation),
        "weights": _plain(cert.weights),
        "kernel_form": _plain(cert.kernel_form),
        "rank": int(cert.rank),
    }


def load_polygon(obj, location="polygon") -> LatticePolygon:
    raw = _require(obj, "vertices", location)
    if not isinstance(raw, list):
        raise InputError("vertices must be a list of [x, y] pairs", location=location,
                         code="schema")
    vs = []
    for t, v in enumerate(raw):
        if not isinstance(v, list) or len(v) != 2:
            raise InputError(f"vertices[{t}] must be a pair", location=location,
                             code="schema")
        x = _int_value(v[0], f"vertices[{t}][0]", location)
        y = _int_value(v[1], f"vertices[{t}][1]", location)
        vs.append((x, y))
    return LatticePolygon(tuple(vs))


def load_moment_operator(obj, location="moment") -> MomentOperator:
    num_vars = _int_value(_require(obj, "num_vars", location), "num_vars", location)
    degree = _int_value(_require(obj, "degree", location), "degree", location)
    basis = _require(obj, "basis", location)
    if basis != "grlex":
        raise InputError(f"basis must be \"grlex\", got {basis!r}", location=location,
                         code="schema")
    rows = _float_rows(_require(obj, "rows", location), "rows", location)
    scale = 1.0 + float(np.max(np.abs(rows)))
    if rows.shape[0] != rows.shape[1] or \
            float(np.max(np.abs(rows - rows.T))) > SYM_TOL * scale:
        raise InputError("moment matrix must be square and symmetric",
                         location=location, code="value")
    return MomentOperator(matrix=rows, num_vars=num_vars, degree=degree, basis=basis)
