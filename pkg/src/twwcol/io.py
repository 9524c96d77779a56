"""Text formats: graphs, contraction witnesses, vertex orders, profiles.

Files use 1-based ids; everything in memory is 0-based.  Lines starting with
``c`` are comments.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import FormatError, InvalidSequenceError
from .graph import Graph
from .order import LinearOrder
from .trigraph import ContractionSequence

__all__ = [
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
    "parse_witness",
    "format_witness",
    "read_witness",
    "write_witness",
    "parse_order",
    "format_order",
    "read_order",
    "write_order",
    "profile_csv",
    "profile_json",
    "PROFILE_COLUMNS",
]

PROFILE_COLUMNS = ("vertex", "rank", "wreach", "sreach", "backconn")


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line


def parse_graph(text: str) -> tuple[Graph, tuple[int, ...]]:
    """Parse ``p tww <n> <m>`` followed by ``m`` edge lines.

    Returns the graph and ``labels``, where ``labels[i]`` is the file label of
    vertex ``i``.  Labels within ``1..n`` map to ``label - 1``; any other
    labelling is compacted in sorted order, padded with isolated vertices up
    to ``n``.
    """
    header = None
    pairs = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: second header")
            if len(parts) != 4 or parts[1] != "tww":
                raise FormatError(f"line {lineno}: expected 'p tww <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header") from None
            continue
        if header is None:
            raise FormatError(f"line {lineno}: edge before header")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex id") from None
    if header is None:
        raise FormatError("missing 'p tww' header")
    n, m = header
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges, found {len(pairs)}")
    used = {x for e in pairs for x in e}
    if all(1 <= x <= n for x in used):
        labels = tuple(range(1, n + 1))
    else:
        seen = sorted(used)
        extra = max(n - len(seen), 0)
        top = max(seen, default=0)
        labels = tuple(seen) + tuple(range(top + 1, top + 1 + extra))
    index = {lab: i for i, lab in enumerate(labels)}
    try:
        return Graph(len(labels), ((index[u], index[v]) for u, v in pairs)), labels
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"p tww {g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())[0]


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g))


def parse_witness(text: str, g: Graph, scheme: str = "fresh") -> ContractionSequence:
    """Parse a witness for ``g``.

    With ``scheme='fresh'`` each line ``u v`` merges node ``v`` into ``u`` and
    the ``k``-th line creates node ``n + k``.  With ``scheme='pace'`` the
    merged node keeps the id ``u`` (the PACE 2023 solver output).
    """
    raw = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        try:
            raw.append((int(parts[0]) - 1, int(parts[1]) - 1))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer node id") from None
    if scheme == "fresh":
        merges = raw
    elif scheme == "pace":
        current = {v: v for v in range(g.n)}
        merges = []
        for k, (u, v) in enumerate(raw):
            if u not in current or v not in current or u == v:
                raise InvalidSequenceError(f"vertex {u + 1} or {v + 1} not live", step=k + 1)
            merges.append((current[u], current.pop(v)))
            current[u] = g.n + k
    else:
        raise ValueError(f"unknown witness scheme {scheme!r}")
    return ContractionSequence(g, tuple(merges))


def format_witness(seq: ContractionSequence) -> str:
    return "".join(f"{a + 1} {b + 1}\n" for a, b in seq.merges)


def read_witness(path, g: Graph, scheme: str = "fresh") -> ContractionSequence:
    return parse_witness(Path(path).read_text(), g, scheme)


def write_witness(seq: ContractionSequence, path) -> None:
    Path(path).write_text(format_witness(seq))


def parse_order(text: str, g: Graph | None = None) -> LinearOrder:
    seq = []
    for lineno, line in _content_lines(text):
        try:
            seq.append(int(line) - 1)
        except ValueError:
            raise FormatError(f"line {lineno}: expected a vertex id") from None
    if g is not None and len(seq) != g.n:
        raise FormatError(f"order lists {len(seq)} vertices, graph has {g.n}")
    try:
        return LinearOrder(seq)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_order(order: LinearOrder) -> str:
    return "".join(f"{v + 1}\n" for v in order.sequence)


def read_order(path, g: Graph | None = None) -> LinearOrder:
    return parse_order(Path(path).read_text(), g)


def write_order(order: LinearOrder, path) -> None:
    Path(path).write_text(format_order(order))


def _profile_rows_1based(prof):
    for row in prof.rows():
        row = dict(row)
        row["vertex"] += 1
        yield row


def profile_csv(prof) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=PROFILE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in _profile_rows_1based(prof):
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    return buf.getvalue()


def profile_json(prof) -> str:
    return json.dumps(
        {
            "r": prof.r,
            "wcol": prof.wcol,
            "scol": prof.scol,
            "adm": prof.adm,
            "vertices": list(_profile_rows_1based(prof)),
        },
        indent=2,
    )
