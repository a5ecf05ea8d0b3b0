"""JSON input documents and generator naming for the command line.

Input format::

    {"vertices": [{"id": "a", "group": {"free_rank": 1, "torsion": []}},
                  {"id": "s", "group": {"non_abelian": "Sym(5)", "known_semicomplete": "yes"}}],
     "edges": [["a", "s"]]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .abelian import ExpandedGraph, FGAbelian, GroupLabel, LabelError, NonAbelian, cyclic
from .graph import GraphError, SimplicialGraph


class DocumentError(ValueError):
    """Malformed input; the message names the offending field."""


def _fail(where: str, msg: str):
    raise DocumentError(f"{where}: {msg}")


def parse_label(obj: Any, where: str = "group") -> GroupLabel:
    if not isinstance(obj, dict):
        _fail(where, "must be an object")
    if "non_abelian" in obj:
        extra = set(obj) - {"non_abelian", "known_semicomplete"}
        if extra:
            _fail(f"{where}.{sorted(extra)[0]}", "unexpected field")
        name = obj["non_abelian"]
        if not isinstance(name, str) or not name:
            _fail(f"{where}.non_abelian", "must be a non-empty string")
        flag = obj.get("known_semicomplete", "unknown")
        if flag not in ("yes", "no", "unknown"):
            _fail(f"{where}.known_semicomplete", "must be 'yes', 'no' or 'unknown'")
        return NonAbelian(name, flag)
    extra = set(obj) - {"free_rank", "torsion"}
    if extra:
        _fail(f"{where}.{sorted(extra)[0]}", "unexpected field")
    if not obj:
        _fail(where, "needs free_rank/torsion or non_abelian")
    rank = obj.get("free_rank", 0)
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        _fail(f"{where}.free_rank", "must be a nonnegative integer")
    torsion = obj.get("torsion", [])
    if not isinstance(torsion, list):
        _fail(f"{where}.torsion", "must be a list")
    for i, t in enumerate(torsion):
        if not isinstance(t, int) or isinstance(t, bool) or t < 2:
            _fail(f"{where}.torsion[{i}]", "must be an integer >= 2")
    try:
        return FGAbelian(rank, tuple(torsion))
    except LabelError as exc:
        _fail(where, str(exc))


def label_to_dict(label: GroupLabel) -> dict:
    if isinstance(label, NonAbelian):
        return {"non_abelian": label.name, "known_semicomplete": label.known_semicomplete}
    return {"free_rank": label.free_rank, "torsion": list(label.torsion)}


def _check_id(x: Any, where: str) -> str:
    if not isinstance(x, str) or not x:
        _fail(where, "vertex id must be a non-empty string")
    if "^" in x or any(c.isspace() for c in x):
        _fail(where, f"vertex id {x!r} may not contain '^' or whitespace")
    return x


def parse_document(doc: Any) -> tuple[SimplicialGraph, dict]:
    if not isinstance(doc, dict):
        _fail("document", "must be an object")
    if "vertices" not in doc:
        _fail("vertices", "missing")
    vertices = doc["vertices"]
    if not isinstance(vertices, list):
        _fail("vertices", "must be a list")
    labels: dict = {}
    for i, entry in enumerate(vertices):
        where = f"vertices[{i}]"
        if not isinstance(entry, dict):
            _fail(where, "must be an object")
        if "id" not in entry:
            _fail(f"{where}.id", "missing")
        if "group" not in entry:
            _fail(f"{where}.group", "missing")
        vid = _check_id(entry["id"], f"{where}.id")
        if vid in labels:
            _fail(f"{where}.id", f"duplicate vertex id {vid!r}")
        labels[vid] = parse_label(entry["group"], f"{where}.group")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        _fail("edges", "must be a list")
    pairs = []
    for i, e in enumerate(edges):
        where = f"edges[{i}]"
        if not isinstance(e, list) or len(e) != 2:
            _fail(where, "must be a pair of vertex ids")
        for j, x in enumerate(e):
            if x not in labels:
                _fail(f"{where}[{j}]", f"unknown vertex id {x!r}")
        if e[0] == e[1]:
            _fail(where, f"self-edge at {e[0]!r}")
        pairs.append((e[0], e[1]))
    try:
        g = SimplicialGraph(labels, pairs)
    except GraphError as exc:
        _fail("document", str(exc))
    return g, labels


def load_document(path) -> tuple[SimplicialGraph, dict]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_document(doc)


class GeneratorNames:
    """Text names for expanded vertices.

    A vertex with one cyclic factor keeps its original id; otherwise its
    factors are ``id:0``, ``id:1``, ...  The ``id:k`` form is always accepted.
    """

    def __init__(self, eg: ExpandedGraph):
        counts: dict = {}
        for v in eg.graph.vertices:
            counts[eg.origin_of[v]] = counts.get(eg.origin_of[v], 0) + 1
        self._name = {}
        for v in eg.graph.vertices:
            orig, k = v
            self._name[v] = str(orig) if counts[orig] == 1 else f"{orig}:{k}"
        self._lookup = {}
        for v, name in self._name.items():
            self._lookup[f"{v[0]}:{v[1]}"] = v
        for v, name in self._name.items():
            if name in self._lookup and self._lookup[name] != v:
                raise DocumentError(f"generator name {name!r} is ambiguous")
            self._lookup[name] = v

    def name(self, v) -> str:
        return self._name[v]

    def resolve(self, text: str):
        if text not in self._lookup:
            raise DocumentError(f"unknown generator {text!r}")
        return self._lookup[text]


def expanded_document(eg: ExpandedGraph) -> dict:
    names = GeneratorNames(eg)
    return {
        "vertices": [
            {
                "id": names.name(v),
                "group": label_to_dict(cyclic(eg.factor_of[v])),
                "origin": str(eg.origin_of[v]),
            }
            for v in eg.graph.vertices
        ],
        "edges": [[names.name(a), names.name(b)] for a, b in eg.graph.edge_list()],
    }


def graph_document(g: SimplicialGraph, labels: dict) -> dict:
    return {
        "vertices": [{"id": v, "group": label_to_dict(labels[v])} for v in g.vertices],
        "edges": [list(e) for e in g.edge_list()],
    }
