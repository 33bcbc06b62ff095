"""Strict JSON schema for finite graphs.

Document shape:

    {
      "vertices": [{"id": "a", "mu": 2}, {"id": "b", "mu": "inf"}, ...],
      "less":     [["a", "b"], ...],    # a < b; any acyclic relation
      "edges":    [["a", "b"], ...],
      "phi":      {"a": [["b", "c"], ...], ...}   # omitted entries: identity
    }

Unknown fields anywhere are rejected.  Vertex ids are nonempty strings
without whitespace or '^' (they double as word tokens).  The loader
closes ``less`` transitively and rejects cycles; star-map entries must
name star vertices, but their images are taken as given so that files
describing broken graphs still load and can be diagnosed with validate.
"""

from __future__ import annotations

import json

from .graph import INFINITY, GraphError, TrickleGraph

_TOP_FIELDS = {"vertices", "less", "edges", "phi"}
_VERTEX_FIELDS = {"id", "mu"}


def _check_id(vid):
    if not isinstance(vid, str) or not vid:
        raise GraphError(f"vertex id must be a nonempty string, got {vid!r}")
    if "^" in vid or any(c.isspace() for c in vid):
        raise GraphError(f"vertex id {vid!r} may not contain '^' or whitespace")
    return vid


def _pairs(value, what, ids):
    if not isinstance(value, list):
        raise GraphError(f"{what} must be an array of pairs")
    out = []
    for item in value:
        if not (isinstance(item, list) and len(item) == 2):
            raise GraphError(f"{what} entry {item!r} is not a pair")
        a, b = item
        for v in (a, b):
            if v not in ids:
                raise GraphError(f"{what} entry names unknown vertex {v!r}")
        out.append((a, b))
    return out


def graph_from_dict(doc) -> TrickleGraph:
    if not isinstance(doc, dict):
        raise GraphError("graph document must be a JSON object")
    unknown = set(doc) - _TOP_FIELDS
    if unknown:
        raise GraphError(f"unknown fields: {sorted(unknown)}")
    if "vertices" not in doc or "edges" not in doc:
        raise GraphError("graph document needs 'vertices' and 'edges'")

    mu = {}
    order = []
    for entry in doc["vertices"]:
        if not isinstance(entry, dict):
            raise GraphError(f"vertex entry {entry!r} is not an object")
        extra = set(entry) - _VERTEX_FIELDS
        if extra:
            raise GraphError(f"unknown vertex fields: {sorted(extra)}")
        if "id" not in entry or "mu" not in entry:
            raise GraphError(f"vertex entry {entry!r} needs 'id' and 'mu'")
        vid = _check_id(entry["id"])
        if vid in mu:
            raise GraphError(f"duplicate vertex id {vid!r}")
        m = entry["mu"]
        if m == "inf":
            m = INFINITY
        elif not isinstance(m, int) or m < 2:
            raise GraphError(f"mu of {vid!r} must be an integer >= 2 or \"inf\"")
        mu[vid] = m
        order.append(vid)

    ids = set(order)
    edges = _pairs(doc["edges"], "edges", ids)
    less = _pairs(doc.get("less", []), "less", ids)

    phi_doc = doc.get("phi", {})
    if not isinstance(phi_doc, dict):
        raise GraphError("phi must be an object")
    adjacency = {v: set() for v in order}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    phi = {}
    for x, entries in phi_doc.items():
        if x not in ids:
            raise GraphError(f"phi names unknown vertex {x!r}")
        table = {}
        for y, img in _pairs(entries, f"phi[{x!r}]", ids):
            if y != x and y not in adjacency[x]:
                raise GraphError(f"phi[{x!r}] defined at {y!r}, not a star vertex")
            if y in table:
                raise GraphError(f"phi[{x!r}] defines {y!r} twice")
            table[y] = img
        phi[x] = table

    return TrickleGraph.build(order, mu, edges, less, phi, name="graph")


def load_graph(path) -> TrickleGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as e:
                raise GraphError(f"{path}: not valid JSON ({e})") from None
    except OSError as e:
        raise GraphError(f"cannot read {path}: {e.strerror or e}") from None
    return graph_from_dict(doc)


def graph_to_dict(graph: TrickleGraph) -> dict:
    if not graph.finite:
        raise GraphError("only finite graphs serialize")
    verts = graph.vertices
    mu = [{"id": v, "mu": "inf" if graph.mu(v) == INFINITY else graph.mu(v)}
          for v in verts]
    edges = sorted([sorted((a, b)) for i, a in enumerate(verts)
                    for b in verts[i + 1:] if graph.edge(a, b)])
    less = sorted([a, b] for a in verts for b in verts if graph.less(a, b))
    phi = {}
    for x in verts:
        moved = sorted([y, graph.phi(x, y)] for y in graph.star(x)
                       if graph.phi(x, y) != y)
        if moved:
            phi[x] = moved
    return {"vertices": mu, "less": less, "edges": edges, "phi": phi}


def dump_graph(graph: TrickleGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2, sort_keys=True) + "\n"
