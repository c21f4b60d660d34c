"""Graphviz DOT rendering of an instance with a highlighted spanner."""

from __future__ import annotations

from collections.abc import Iterable

from .core import Edge, SimpleClique
from .gen import vertex_name
from .reach import Instance, _labels_of

EMITTER = "#c7e9c0"
COLLECTOR = "#8c1c13"


def to_dot(
    inst: Instance,
    spanner: Iterable[Edge],
    emitters: Iterable[int] = (),
    collectors: Iterable[int] = (),
    name: str = "G",
) -> str:
    """Emitters are light, collectors dark, spanner edges bold and the
    remaining edges dashed."""
    keep = {Edge.of(*e) for e in spanner}
    em, co = set(emitters), set(collectors)
    out = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(inst.n):
        attrs = [f'label="{vertex_name(v)}"']
        if v in em and v in co:
            attrs += ['style="wedged"', f'fillcolor="{EMITTER}:{COLLECTOR}"']
        elif v in em:
            attrs.append(f'fillcolor="{EMITTER}"')
        elif v in co:
            attrs += [f'fillcolor="{COLLECTOR}"', "fontcolor=white"]
        out.append(f"  {v} [{', '.join(attrs)}];")
    for e in inst.edges():
        labs = ",".join(map(str, _labels_of(inst, e)))
        style = "style=bold, penwidth=2.5" if e in keep else "style=dashed, color=gray60"
        out.append(f'  {e.u} -- {e.v} [label="{labs}", {style}];')
    out.append("}")
    return "\n".join(out) + "\n"


def fireworks_roles(c: SimpleClique) -> tuple[frozenset[int], frozenset[int]]:
    from .fireworks import max_trees, min_trees

    return min_trees(c).roots, max_trees(c).roots
