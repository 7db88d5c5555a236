"""Graph files and report serialization.

Edge lists hold one edge per line, ``i j`` or ``i j w`` with 1-based
vertex indices; ``#`` starts a comment. A leading comment of the form
``# pathlength: n=5 directed=false`` (written by :func:`write_edgelist`)
fixes the vertex count and directedness. Matrix Market coordinate files
are read through scipy; a ``symmetric`` header means undirected.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from pathlib import Path
from typing import Optional, Union

import numpy as np
import scipy.io

from pathlength.enhance import Proposal
from pathlength.graph import Graph, GraphError
from pathlength.measures import MeasureReport
from pathlength.tropical import TropicalMatrix

PathLike = Union[str, Path]
FORMATS = ("edgelist", "matrixmarket")

_DIRECTIVE = re.compile(r"#\s*pathlength:\s*(.*)")


class ParseError(GraphError):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.lineno = lineno


def guess_format(path: PathLike) -> str:
    return "matrixmarket" if str(path).lower().endswith((".mtx", ".mm")) else "edgelist"


def _parse_directive(text: str) -> dict:
    out = {}
    for item in text.split():
        key, _, value = item.partition("=")
        out[key.strip()] = value.strip()
    return out


def read_edgelist(
    path: PathLike,
    directed: Optional[bool] = None,
    n: Optional[int] = None,
    allow_negative: bool = False,
) -> Graph:
    """Read an edge list; ``directed=None`` detects directedness from symmetry."""
    arcs: dict[tuple[int, int], tuple[float, int]] = {}
    header: dict = {}
    max_index = 0
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            m = _DIRECTIVE.match(raw.strip())
            if m and not arcs:
                header.update(_parse_directive(m.group(1)))
                continue
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise ParseError(path, lineno, f"expected 'i j' or 'i j w', got {line!r}")
            try:
                i, j = int(parts[0]), int(parts[1])
                w = float(parts[2]) if len(parts) == 3 else 1.0
            except ValueError:
                raise ParseError(path, lineno, f"cannot parse {line!r}") from None
            if i < 1 or j < 1:
                raise ParseError(path, lineno, "vertex indices are 1-based")
            if i == j:
                raise ParseError(path, lineno, f"self-loop at vertex {i}")
            if w == 0 or not math.isfinite(w):
                raise ParseError(path, lineno, f"invalid edge weight {parts[2]}")
            if w < 0 and not allow_negative:
                raise ParseError(path, lineno, f"negative weight {w} (allow_negative is off)")
            if (i, j) in arcs and arcs[(i, j)][0] != w:
                raise ParseError(path, lineno, f"duplicate edge ({i}, {j}) with conflicting weight")
            arcs[(i, j)] = (w, lineno)
            max_index = max(max_index, i, j)

    if n is None and "n" in header:
        n = int(header["n"])
    if directed is None and "directed" in header:
        directed = header["directed"].lower() == "true"
    n = max_index if n is None else n
    if n < 1:
        raise GraphError(f"{path}: no vertices")
    if max_index > n:
        raise GraphError(f"{path}: vertex index {max_index} exceeds n={n}")

    w = np.zeros((n, n))
    for (i, j), (weight, _) in arcs.items():
        w[i - 1, j - 1] = weight
    if directed is False:
        for (i, j), (weight, lineno) in arcs.items():
            back = arcs.get((j, i))
            if back is not None and back[0] != weight:
                raise ParseError(path, lineno, f"undirected edge ({i}, {j}) listed with two weights")
            w[j - 1, i - 1] = weight
    return Graph(w, directed=directed, allow_negative=allow_negative)


def read_matrix_market(
    path: PathLike,
    directed: Optional[bool] = None,
    allow_negative: bool = False,
) -> Graph:
    try:
        rows, cols, _, fmt, field, symmetry = scipy.io.mminfo(str(path))
        mat = scipy.io.mmread(str(path))
    except (ValueError, IndexError) as exc:
        raise GraphError(f"{path}: malformed Matrix Market file: {exc}") from None
    if fmt != "coordinate":
        raise GraphError(f"{path}: only coordinate Matrix Market files are supported")
    if field not in ("real", "integer", "pattern"):
        raise GraphError(f"{path}: unsupported field {field!r}")
    if rows != cols:
        raise GraphError(f"{path}: adjacency matrix must be square, got {rows}x{cols}")
    coo = mat.tocoo()
    pairs = list(zip(coo.row.tolist(), coo.col.tolist()))
    if len(set(pairs)) != len(pairs):
        raise GraphError(f"{path}: duplicate entries")
    if np.any(coo.row == coo.col):
        raise GraphError(f"{path}: self-loop on the diagonal")
    data = np.ones_like(coo.data, dtype=float) if field == "pattern" else coo.data.astype(float)
    if np.any(data == 0):
        raise GraphError(f"{path}: explicit zero weight listed as an edge")
    w = np.zeros((rows, cols))
    w[coo.row, coo.col] = data
    if symmetry in ("symmetric", "hermitian") and directed is None:
        directed = False
    elif symmetry == "skew-symmetric":
        raise GraphError(f"{path}: skew-symmetric adjacency is not a graph")
    return Graph(w, directed=directed, allow_negative=allow_negative)


def read_graph(
    path: PathLike,
    format: Optional[str] = None,
    directed: Optional[bool] = None,
    n: Optional[int] = None,
    allow_negative: bool = False,
) -> Graph:
    format = format or guess_format(path)
    if format == "edgelist":
        return read_edgelist(path, directed, n, allow_negative)
    if format == "matrixmarket":
        g = read_matrix_market(path, directed, allow_negative)
        if n is not None and n != g.n:
            raise GraphError(f"{path}: file holds {g.n} vertices, not {n}")
        return g
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def _fmt_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def write_edgelist(g: Graph, dest) -> None:
    """Write ``g`` so that :func:`read_edgelist` restores it exactly."""
    own = isinstance(dest, (str, Path))
    fh = open(dest, "w") if own else dest
    try:
        fh.write(f"# pathlength: n={g.n} directed={'true' if g.directed else 'false'}\n")
        for i, j, w in g.edges():
            fh.write(f"{i + 1} {j + 1} {_fmt_weight(w)}\n")
    finally:
        if own:
            fh.close()


def write_matrix_market(g: Graph, path: PathLike) -> None:
    from scipy.sparse import coo_matrix

    symmetry = "general" if g.directed else "symmetric"
    scipy.io.mmwrite(str(path), coo_matrix(g.weights), symmetry=symmetry)


def write_graph(g: Graph, path: PathLike, format: Optional[str] = None) -> None:
    format = format or guess_format(path)
    if format == "matrixmarket":
        write_matrix_market(g, path)
    else:
        write_edgelist(g, path)


# --- reports ---------------------------------------------------------------


def jsonable(value):
    """Recursively convert numpy values; infinities become the string "inf"."""
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    return value


def _one_based(vs):
    return [v + 1 for v in vs]


def report_dict(r: MeasureReport) -> dict:
    return jsonable(
        {
            "n": r.n,
            "directed": r.directed,
            "K": r.K,
            "connected": r.connected,
            "diameter": r.diameter,
            "radius": r.radius,
            "in_radius": r.inward.radius,
            "avg_path_length": r.avg_path_length,
            "global_efficiency": r.global_efficiency,
            "global_k_efficiency": r.global_k_efficiency,
            "harary": r.harary,
            "per_vertex": {
                "closeness": r.closeness,
                "eccentricity": r.eccentricity,
                "harmonic": r.harmonic,
                "harmonic_k": r.harmonic_k,
                "closeness_in": r.inward.closeness,
                "eccentricity_in": r.inward.eccentricity,
                "harmonic_in": r.inward.harmonic,
                "harmonic_k_in": r.inward_k.harmonic,
            },
            "centers": {
                "center": _one_based(r.center),
                "h_center": _one_based(r.h_center),
                "hk_center": _one_based(r.hk_center),
                "in_center": _one_based(r.inward.center),
                "hk_in_center": _one_based(r.hk_in_center),
            },
        }
    )


def _num(v: float, decimals: int) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.{decimals}f}"


def report_json(r: MeasureReport) -> str:
    return json.dumps(report_dict(r), indent=2)


def report_csv(r: MeasureReport, decimals: int = 4) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ["closeness", "eccentricity", "harmonic", "harmonic_k",
            "closeness_in", "eccentricity_in", "harmonic_in", "harmonic_k_in"]
    pv = {
        "closeness": r.closeness, "eccentricity": r.eccentricity,
        "harmonic": r.harmonic, "harmonic_k": r.harmonic_k,
        "closeness_in": r.inward.closeness, "eccentricity_in": r.inward.eccentricity,
        "harmonic_in": r.inward.harmonic, "harmonic_k_in": r.inward_k.harmonic,
    }
    w.writerow(["vertex"] + cols)
    for v in range(r.n):
        w.writerow([v + 1] + [_num(pv[c][v], decimals) for c in cols])
    return buf.getvalue()


def report_table(r: MeasureReport, decimals: int = 4) -> str:
    d = decimals
    lines = [
        f"n={r.n}  directed={str(r.directed).lower()}  K={r.K}  connected={str(r.connected).lower()}",
        f"diameter            {_num(r.diameter, d)}",
        f"radius              {_num(r.radius, d)}",
        f"in-radius           {_num(r.inward.radius, d)}",
        f"avg path length     {_num(r.avg_path_length, d)}",
        f"global efficiency   {_num(r.global_efficiency, d)}",
        f"global K-efficiency {_num(r.global_k_efficiency, d)}",
    ]
    if r.harary is not None:
        lines.append(f"Harary index        {_num(r.harary, d)}")
    fmt_set = lambda s: "{" + ", ".join(str(v + 1) for v in s) + "}"
    lines += [
        f"center              {fmt_set(r.center)}",
        f"h-center            {fmt_set(r.h_center)}",
        f"hK-center           {fmt_set(r.hk_center)}",
        f"hK_in-center        {fmt_set(r.hk_in_center)}",
        "",
    ]
    header = ["v", "e_i", "h_i", "c_i", "h_i^K", "e_in", "h_in", "c_in", "h^K_in"]
    rows = []
    for v in range(r.n):
        rows.append([str(v + 1)] + [_num(x, d) for x in (
            r.eccentricity[v], r.harmonic[v], r.closeness[v], r.harmonic_k[v],
            r.inward.eccentricity[v], r.inward.harmonic[v], r.inward.closeness[v],
            r.inward_k.harmonic[v])])
    widths = [max(len(h), *(len(row[c]) for row in rows)) for c, h in enumerate(header)]
    lines.append("  ".join(h.rjust(wd) for h, wd in zip(header, widths)))
    for row in rows:
        lines.append("  ".join(x.rjust(wd) for x, wd in zip(row, widths)))
    return "\n".join(lines) + "\n"


def matrix_text(t: TropicalMatrix, output: str = "table", decimals: int = 4) -> str:
    e = t.entries
    if output == "json":
        return json.dumps(jsonable({"K": t.k, "stable_at": t.stable_at, "entries": e}), indent=2)
    cells = [[_num_compact(x, decimals) for x in row] for row in e]
    if output == "csv":
        return "\n".join(",".join(row) for row in cells) + "\n"
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def _num_compact(v: float, decimals: int) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if float(v).is_integer():
        return str(int(v))
    return f"{v:.{decimals}f}".rstrip("0")


def proposals_dict(props: list[Proposal]) -> list[dict]:
    return jsonable([p.as_dict() for p in props])


def proposals_text(props: list[Proposal], output: str = "table", decimals: int = 4) -> str:
    if output == "json":
        return json.dumps(proposals_dict(props), indent=2)
    rows = [["step", "method", "K", "h1", "h2", "e_before", "e_after"]]
    for s, p in enumerate(props, 1):
        rows.append([str(s), p.method, str(p.K), str(p.h1 + 1), str(p.h2 + 1),
                     f"{p.e_before:.{decimals}e}" if p.e_before < 0.01 else f"{p.e_before:.{decimals}f}",
                     f"{p.e_after:.{decimals}e}" if p.e_after < 0.01 else f"{p.e_after:.{decimals}f}"])
    if output == "csv":
        return "\n".join(",".join(r) for r in rows) + "\n"
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows) + "\n"
