"""Graphviz DOT export of cycle quivers."""

from src.models import Arrow, NonOrientedCycle


def to_dot(Q: NonOrientedCycle, name: str = "Q") -> str:
    """Digraph with vertices 1..n placed anti-clockwise on a circle.

    Sources are drawn as boxes and sinks as double circles.
    """
    n = len(Q)
    sources, sinks = set(Q.sources()), set(Q.sinks())
    lines = [f"digraph {name} {{", "    layout=circo;", "    node [shape=circle];"]
    for v in range(1, n + 1):
        attributes = [f'label="{v}"']
        if v in sources:
            attributes.append("shape=box")
        elif v in sinks:
            attributes.append("shape=doublecircle")
        lines.append(f"    {v} [{','.join(attributes)}];")
    for k, letter in enumerate(Q.word, start=1):
        tail, head = k, k % n + 1
        if letter is Arrow.DEC:
            tail, head = head, tail
        lines.append(f"    {tail} -> {head};")
    lines.append("}")
    return "\n".join(lines)
