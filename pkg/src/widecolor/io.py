"""DIMACS and labeled-JSON serialization for graphs.

DIMACS (``"dimacs"``)::

    p edge <n> <m>
    c name <graph name>          (optional, anywhere after the header)
    e <u> <v>                    (m lines, 1-indexed, u < v, sorted)

DIMACS has no label field, so labels travel in a JSON sidecar holding a list
of encoded labels (see :func:`label_to_json`).

Labeled JSON (``"json"``)::

    {"name": str, "n": int, "edges": [[u, v], ...], "labels": [...] | null}

with 0-indexed edges sorted lexicographically. Both writers are deterministic.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .graph import Graph
from .mycielski import APEX, Apex, MycielskiVertex

FORMATS = ("dimacs", "json")


def label_to_json(label):
    """Encode a vertex label: tuples become arrays, Mycielski vertices become objects."""
    if isinstance(label, MycielskiVertex):
        return {"base": label_to_json(label.base), "level": label.level}
    if isinstance(label, Apex):
        return {"apex": True}
    if isinstance(label, (tuple, list, frozenset)):
        items = sorted(label) if isinstance(label, frozenset) else label
        return [label_to_json(x) for x in items]
    return label


def label_from_json(obj):
    if isinstance(obj, list):
        return tuple(label_from_json(x) for x in obj)
    if isinstance(obj, dict):
        if obj.get("apex") is True:
            return APEX
        if "base" in obj and "level" in obj:
            return MycielskiVertex(label_from_json(obj["base"]), int(obj["level"]))
        raise ValueError(f"unrecognised label object {obj!r}")
    return obj


def export_graph(G: Graph, fmt: str = "dimacs") -> bytes:
    if fmt == "dimacs":
        lines = [f"p edge {G.n} {G.m}"]
        if G.name:
            lines.append(f"c name {G.name}")
        lines.extend(f"e {u + 1} {v + 1}" for u, v in G.sorted_edges())
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        payload = {
            "name": G.name,
            "n": G.n,
            "edges": [list(e) for e in G.sorted_edges()],
            "labels": None if G.labels is None else [label_to_json(x) for x in G.labels],
        }
        return json.dumps(payload, separators=(",", ":")).encode()
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def export_labels(G: Graph) -> bytes:
    """JSON sidecar with the labels of G (``null`` when unlabeled)."""
    labels = None if G.labels is None else [label_to_json(x) for x in G.labels]
    return json.dumps(labels, separators=(",", ":")).encode()


def _decode_labels(raw, n):
    if raw is None:
        return None
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(f"expected a list of {n} labels")
    try:
        return [label_from_json(x) for x in raw]
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def import_graph(data: bytes | str, fmt: str = "dimacs", labels: bytes | str | None = None) -> Graph:
    if isinstance(data, bytes):
        data = data.decode()
    if fmt == "dimacs":
        G = _parse_dimacs(data)
        if labels is not None:
            try:
                raw = json.loads(labels)
            except json.JSONDecodeError as exc:
                raise ParseError(f"label sidecar: {exc.msg} (column {exc.colno})", exc.lineno) from exc
            lab = _decode_labels(raw, G.n)
            try:
                G = Graph(G.n, G.edges, lab, G.name)
            except ValueError as exc:
                raise ParseError(f"label sidecar: {exc}") from exc
        return G
    if fmt == "json":
        return _parse_json(data)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _parse_dimacs(text: str) -> Graph:
    n = m = None
    name = ""
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tok = line.split()
        if not tok:
            continue
        kind = tok[0]
        if kind == "c":
            if len(tok) >= 2 and tok[1] == "name":
                name = line.split(None, 2)[2] if len(tok) > 2 else ""
            continue
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tok) != 4 or tok[1] != "edge":
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative counts", lineno)
            continue
        if kind == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(tok) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' line")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    G = Graph(n, edges, name=name)
    if G.m != m:
        raise ParseError("duplicate edges")
    return G


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{exc.msg} (column {exc.colno})", exc.lineno) from exc
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    for key in ("n", "edges"):
        if key not in obj:
            raise ParseError(f"missing field {key!r}")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("field 'n' must be a non-negative integer")
    edges = []
    for i, e in enumerate(obj["edges"]):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"edges[{i}] is not a pair of integers")
        edges.append(tuple(e))
    labels = _decode_labels(obj.get("labels"), n)
    try:
        G = Graph(n, edges, labels, obj.get("name", ""))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if G.m != len(edges):
        raise ParseError("duplicate edges")
    return G


# -- homomorphism certificates ---------------------------------------------

CERT_FIELDS = ("source", "target", "images", "certificate", "policy", "seed", "counts")


def certificate_to_json(source: str, target: str, images, certificate: str, policy=None, seed=None,
                        counts=None) -> bytes:
    """Serialize a map certificate; ``source``/``target`` are family specs such as ``"W:3,8"``."""
    payload = {
        "source": source,
        "target": target,
        "images": [int(x) for x in images],
        "certificate": certificate,
        "policy": policy,
        "seed": seed,
        "counts": dict(counts or {}),
    }
    return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()


def certificate_from_json(data: bytes | str) -> dict:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate: {exc.msg} (column {exc.colno})", exc.lineno) from exc
    if not isinstance(obj, dict):
        raise ParseError("certificate must be a JSON object")
    missing = [k for k in CERT_FIELDS if k not in obj]
    if missing:
        raise ParseError(f"certificate lacks fields {missing}")
    imgs = obj["images"]
    if not isinstance(imgs, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in imgs):
        raise ParseError("certificate images must be a list of integers")
    return obj
