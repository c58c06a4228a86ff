"""JSON documents and DOT renderings.  Output is deterministic byte for byte."""
import json

from .dag import Dag
from .errors import DagError
from .family import BinaryWord, dag_from_word
from .report import SCHEMA_VERSION


def _dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dag_to_document(dag, word=None):
    doc = {
        "schema_version": SCHEMA_VERSION,
        "n": dag.n,
        "edges": [{"tail": e.tail, "head": e.head, "slot": e.slot} for e in dag.edges],
    }
    if word is not None:
        doc["word"] = str(word)
    return doc


def dag_to_json(dag, word=None):
    return _dumps(dag_to_document(dag, word))


def dag_from_document(doc):
    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DagError(f"unsupported schema_version {doc.get('schema_version')!r}")
    try:
        n = int(doc["n"])
        pairs = [(int(e["tail"]), int(e["head"])) for e in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DagError(f"malformed DAG document: {exc}") from None
    dag = Dag(n + 1, pairs)
    given = [(e["tail"], e["head"], e.get("slot", 0)) for e in doc["edges"]]
    if sorted(given) != [tuple(e) for e in dag.edges]:
        raise DagError("edge list is not in canonical (tail, head, slot) form")
    if "word" in doc and doc["word"] is not None:
        if dag_from_word(BinaryWord.parse(doc["word"])) != dag:
            raise DagError(f"edges do not match word {doc['word']}")
    return dag


def dag_to_dot(dag, name="G"):
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    lines += [f"  {v};" for v in range(1, dag.vertex_count + 1)]
    for e in dag.edges:
        attr = " [style=bold]" if e.slot == 0 and e.head == e.tail + 1 else ""
        lines.append(f"  {e.tail} -> {e.head}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dot(tree, name="P"):
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  x{i + 1} [rank=0];" for i in range(tree.n_lower)]
    lines += [f"  y{j + 1} [rank=1];" for j in range(tree.n_upper)]
    lines += [f"  x{x + 1} -> y{y + 1};" for x, y in tree.relations]
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_document(tree):
    return {"schema_version": SCHEMA_VERSION, "n_lower": tree.n_lower, "n_upper": tree.n_upper,
            "relations": [list(r) for r in tree.relations]}


def lattice_to_dot(lattice, volumes=None, name="L"):
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for w in lattice.nodes:
        label = str(w) if volumes is None else f"{w}\\n{volumes[w]}"
        lines.append(f'  "{w}" [label="{label}"];')
    for c in lattice.covers:
        lines.append(f'  "{c.lower}" -> "{c.upper}" [label="{c.pair}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_document(lattice, volumes=None):
    doc = {
        "schema_version": SCHEMA_VERSION,
        "n": lattice.n,
        "nodes": [str(w) for w in lattice.nodes],
        "covers": [{"lower": str(c.lower), "upper": str(c.upper), "position": c.position,
                    "outer": list(c.pair.outer.ends), "inner": list(c.pair.inner.ends)}
                   for c in lattice.covers],
    }
    if volumes is not None:
        doc["volumes"] = {str(w): v for w, v in volumes.items()}
    return doc


def _node_id(address):
    return "r" + "".join(f"_{k}" for k in address)


def flowtree_to_dot(tree, name="T"):
    lines = [f"digraph {name} {{"]
    for node in tree.nodes():
        lines.append(f'  {_node_id(node.address)} [label="{node.flow}"];')
        for c in node.children:
            lines.append(f"  {_node_id(node.address)} -> {_node_id(c.address)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def flowtree_to_document(tree):
    return {
        "schema_version": SCHEMA_VERSION,
        "dag": dag_to_document(tree.dag),
        "netflow": list(tree.netflow),
        "leaves": tree.leaf_count(),
        "nodes": [{"address": list(node.address), "level": node.level,
                   "values": list(node.flow.values), "leaves": node.leaf_count()}
                  for node in tree.nodes()],
    }


def to_json(doc):
    return _dumps(doc)
