"""JSON serialization and DOT export.

Complexes serialize as

    {"top_dim": d,
     "simplices": {"<dim>": {"count": n, "faces": [[...], ...]}},
     "labels": {"<dim>:<idx>": <encoded label>}}

where each face is ``[[word letters], base_dim, base_idx]``.  Labels are
encoded with small type tags so tuples and frozensets survive the round
trip exactly.
"""

from __future__ import annotations

import json

from .complex import SimplicialSet
from .simplex import Simplex


def encode_label(lab):
    if lab is None or isinstance(lab, (int, str, bool)):
        return lab
    if isinstance(lab, tuple):
        return {"t": [encode_label(x) for x in lab]}
    if isinstance(lab, frozenset):
        return {"s": sorted((encode_label(x) for x in lab),
                            key=lambda v: json.dumps(v, sort_keys=True))}
    raise TypeError(f"label of type {type(lab).__name__} is not serializable")


def decode_label(obj):
    if obj is None or isinstance(obj, (int, str, bool)):
        return obj
    if isinstance(obj, dict) and "t" in obj:
        return tuple(decode_label(x) for x in obj["t"])
    if isinstance(obj, dict) and "s" in obj:
        return frozenset(decode_label(x) for x in obj["s"])
    raise TypeError(f"cannot decode label {obj!r}")


def complex_to_json(X: SimplicialSet) -> dict:
    simplices = {}
    for d in sorted(X.counts):
        entry = {"count": X.counts[d]}
        if d >= 1:
            entry["faces"] = [
                [[list(f.word), f.base[0], f.base[1]] for f in X.faces[(d, i)]]
                for i in range(X.counts[d])]
        simplices[str(d)] = entry
    labels = {f"{d}:{i}": encode_label(lab) for (d, i), lab in sorted(X.labels.items())}
    out = {"top_dim": X.top_dim, "simplices": simplices}
    if labels:
        out["labels"] = labels
    return out


def complex_from_json(obj: dict) -> SimplicialSet:
    counts, faces, labels = {}, {}, {}
    for dstr, entry in obj["simplices"].items():
        d = int(dstr)
        counts[d] = entry["count"]
        if d >= 1:
            for i, row in enumerate(entry["faces"]):
                faces[(d, i)] = tuple(
                    Simplex(tuple(w), (bd, bi)) for w, bd, bi in row)
    for key, lab in obj.get("labels", {}).items():
        d, i = key.split(":")
        labels[(int(d), int(i))] = decode_label(lab)
    X = SimplicialSet(counts, faces, labels)
    X.validate()
    return X


def complexes_equal(X: SimplicialSet, Y: SimplicialSet) -> bool:
    return (X.counts == Y.counts and X.faces == Y.faces and
            X.labels == Y.labels)


def dot_skeleton(X: SimplicialSet, marked=frozenset(), name="complex") -> str:
    """Graphviz digraph of the 1-skeleton; marked edges drawn bold."""
    lines = [f"digraph {json.dumps(name)} {{"]
    for i in range(X.n_cells(0)):
        lab = X.labels.get((0, i))
        text = str(lab) if lab is not None else f"v{i}"
        lines.append(f"  v{i} [label={json.dumps(text)}];")
    for i in range(X.n_cells(1)):
        tail = X.faces[(1, i)][1].base[1]
        head = X.faces[(1, i)][0].base[1]
        style = ' [penwidth=2, color="firebrick"]' if (1, i) in marked or i in marked else ""
        lines.append(f"  v{tail} -> v{head}{style};")
    lines.append("}")
    return "\n".join(lines)
