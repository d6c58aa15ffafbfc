"""File formats: JSON label codec, PACE ``.td`` files, artifact dispatch."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Hashable

from .errors import SurftwError
from .hypergraph import Hypergraph, Merged, TreeDecomposition, label_key, sort_labels


def encode_label(x: Hashable):
    """Labels to JSON values; tuples become lists, merged labels objects."""
    if isinstance(x, Merged):
        return {"merged": [encode_label(y) for y in sort_labels(x.members)]}
    if isinstance(x, tuple):
        return [encode_label(y) for y in x]
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return x
    raise SurftwError("BAD_INPUT", f"label {x!r} cannot be serialised")


def decode_label(x) -> Hashable:
    if isinstance(x, dict):
        if set(x) != {"merged"}:
            raise SurftwError("BAD_INPUT", f"unknown label object {x!r}")
        return Merged(decode_label(y) for y in x["merged"])
    if isinstance(x, list):
        return tuple(decode_label(y) for y in x)
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return x
    raise SurftwError("BAD_INPUT", f"bad label {x!r}")


def write_pace_td(H: Hypergraph, td: TreeDecomposition) -> str:
    """PACE ``.td`` text; vertices and nodes are numbered from 1 in label order."""
    vnum = {v: i + 1 for i, v in enumerate(sort_labels(H.vertices))}
    nodes = sorted(td.bags, key=label_key)
    nnum = {n: i + 1 for i, n in enumerate(nodes)}
    lines = [f"s td {len(nodes)} {td.width + 1} {len(vnum)}"]
    for n in nodes:
        ids = sorted(vnum[v] for v in td.bags[n])
        lines.append(" ".join(["b", str(nnum[n])] + [str(i) for i in ids]))
    for u, v in td.tree_edges:
        lines.append(f"{nnum[u]} {nnum[v]}")
    return "\n".join(lines) + "\n"


def read_pace_td(text: str, H: Hypergraph | None = None) -> TreeDecomposition:
    """Parse PACE ``.td`` text; with ``H`` vertex numbers map back to labels."""
    names = None
    if H is not None:
        names = {i + 1: v for i, v in enumerate(sort_labels(H.vertices))}
    bags: dict = {}
    edges = []
    header = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "s":
            header = tuple(int(t) for t in tok[2:5])
        elif tok[0] == "b":
            ids = [int(t) for t in tok[2:]]
            bags[int(tok[1])] = [names[i] for i in ids] if names else ids
        else:
            edges.append((int(tok[0]), int(tok[1])))
    if header is None or header[0] != len(bags):
        raise SurftwError("BAD_INPUT", "malformed .td header")
    return TreeDecomposition(bags, edges)


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SurftwError("BAD_INPUT", f"cannot read {path}: {exc}") from exc


def dump_json(data, path=None) -> str:
    text = json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def graph_to_json(H: Hypergraph) -> dict:
    return {"kind": "hypergraph", **H.to_json()}


def td_to_json(td: TreeDecomposition) -> dict:
    nodes = sorted(td.bags, key=label_key)
    nnum = {n: i for i, n in enumerate(nodes)}
    return {"bags": [[encode_label(v) for v in sort_labels(td.bags[n])] for n in nodes],
            "edges": [[nnum[u], nnum[v]] for u, v in td.tree_edges]}


def td_from_json(data: dict) -> TreeDecomposition:
    bags = {i: [decode_label(v) for v in b] for i, b in enumerate(data["bags"])}
    return TreeDecomposition(bags, [tuple(e) for e in data["edges"]])
