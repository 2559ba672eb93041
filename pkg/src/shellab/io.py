"""JSON documents and DOT export.

A document is the poset schema with optional labeling keys::

    {"elements": [...], "covers": [[x, y], ...], "bounded": true,
     "labels": {"x|y": 3, ...} | "edge_labels": [[x, y, 3], ...],
     "rooted_labels": [{"root": [...], "edge": [x, y], "label": 1}, ...],
     "label_poset": "integers" | {"elements": [...], "covers": [...]}}
"""

import json

from .errors import ShellabError
from .labeling import INTEGERS, ChainEdgeLabeling, EdgeLabeling, PosetOrder
from .poset import build_poset, rank_function


class DocumentError(ShellabError):
    pass


def read_json(text, source="<stdin>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: malformed JSON at line {exc.lineno} column {exc.colno} "
                            f"(offset {exc.pos}): {exc.msg}") from None


def load_poset(doc, require_bounded=None):
    if not isinstance(doc, dict) or "elements" not in doc or "covers" not in doc:
        raise DocumentError("document needs 'elements' and 'covers'")
    elements = [str(x) for x in doc["elements"]]
    covers = [(str(a), str(b)) for a, b in doc["covers"]]
    bounded = doc.get("bounded", False) if require_bounded is None else require_bounded
    return build_poset(elements, covers, require_bounded=bool(bounded))


def _label_value(v, order):
    if order is INTEGERS:
        if isinstance(v, str):
            try:
                return int(v)
            except ValueError:
                try:
                    return float(v)
                except ValueError:
                    return v
        return v
    return str(v)


def load_labeling(doc, P=None):
    """The labeling described by a document, or None if it has no labels."""
    lp = doc.get("label_poset", "integers")
    if lp in (None, "integers"):
        order = INTEGERS
    else:
        order = PosetOrder(load_poset(lp, require_bounded=False))
    base = {}
    if "labels" in doc:
        for key, v in doc["labels"].items():
            if key.count("|") != 1:
                raise DocumentError(f"label key {key!r} must look like 'x|y'")
            x, y = key.split("|")
            base[(x, y)] = _label_value(v, order)
    for x, y, v in doc.get("edge_labels", []):
        base[(str(x), str(y))] = _label_value(v, order)
    rooted = {}
    for entry in doc.get("rooted_labels", []):
        x, y = (str(e) for e in entry["edge"])
        rooted[(tuple(str(r) for r in entry["root"]), x, y)] = _label_value(entry["label"], order)
    if not base and not rooted:
        return None
    if rooted or doc.get("kind") == "cl":
        return ChainEdgeLabeling(base, rooted, order)
    return EdgeLabeling(base, order)


def load_document(doc):
    return load_poset(doc), load_labeling(doc)


def _jsonable_label(v):
    return v if isinstance(v, (int, float)) else str(v)


def dump_poset(P):
    names = P.names
    if len(set(names.values())) != len(P):
        raise DocumentError("element names are not unique")
    return {"elements": [names[x] for x in P.elements],
            "covers": [[names[a], names[b]] for a, b in P.cover_list()],
            "bounded": P.is_bounded()}


def dump_document(P, labeling=None, **extra):
    doc = dump_poset(P)
    if labeling is not None:
        name = P.name
        if isinstance(labeling.order, PosetOrder):
            doc["label_poset"] = dump_poset(labeling.order.poset)
        else:
            doc["label_poset"] = "integers"
        base, rooted = [], []
        for x, y in P.cover_list():
            if not labeling.rooted:
                base.append([name(x), name(y), _jsonable_label(labeling.label(None, x, y))])
                continue
            roots = P.roots(x)
            labs = [labeling.label(r, x, y) for r in roots]
            if len(set(labs)) == 1:
                base.append([name(x), name(y), _jsonable_label(labs[0])])
            else:
                for r, v in zip(roots, labs):
                    rooted.append({"root": [name(z) for z in r], "edge": [name(x), name(y)],
                                   "label": _jsonable_label(v)})
        if any("|" in name(x) for x in P.elements):
            doc["edge_labels"] = base
        else:
            doc["labels"] = {f"{a}|{b}": v for a, b, v in base}
        if labeling.rooted:
            doc["kind"] = "cl"
            doc["rooted_labels"] = rooted
        else:
            doc["kind"] = "el"
    doc.update(extra)
    return doc


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# DOT

def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(P, names=None, graph="P"):
    """Hasse diagram drawn bottom to top, elements of equal rank on one level."""
    names = names or P.names
    lines = [f"digraph {graph} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in P.elements:
        lines.append(f"  {_q(names[x])};")
    rk = rank_function(P)
    if rk is not None:
        for r in sorted(set(rk.values())):
            level = " ".join(_q(names[x]) + ";" for x in P.elements if rk[x] == r)
            lines.append(f"  {{ rank=same; {level} }}")
    for a, b in P.cover_list():
        lines.append(f"  {_q(names[a])} -> {_q(names[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def mcd_dot(mcd):
    cord = mcd.as_poset()
    return hasse_dot(cord, cord.names, graph="Cord")


def mcd_json(mcd):
    P = mcd.poset
    return {"chains": [[P.name(x) for x in c] for c in mcd.chains],
            "labels": [[_jsonable_label(v) for v in s] for s in mcd.labels],
            "moves": [list(p) for p in mcd.move_pairs],
            "covers": [list(p) for p in sorted(mcd.covers)]}


def mcd_table(mcd):
    names = mcd.chain_names()
    rows = [("index", "labels", "descents", "covers below", "chain")]
    P = mcd.poset
    for i, c in enumerate(mcd.chains):
        rows.append((str(i), names[i], str(len(mcd.descents(i))), str(len(mcd.down_covers(i))),
                     " < ".join(P.name(x) for x in c)))
    return format_table(rows)


def format_table(rows):
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    out = []
    for n, r in enumerate(rows):
        out.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        if n == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"
