"""
Deterministic text renderings of arc diagrams: a plain-text column view and
a standalone TikZ picture.  Input may mix colors (for drawing a whole
collection); arcs are laid out sorted, one column or path each.
"""
from __future__ import annotations

from typing import Sequence

from .arcs import GREEN, LEFT, Arc


def _sorted_arcs(arcs: Sequence[Arc]) -> list[Arc]:
    return sorted(arcs, key=lambda a: (a.bottom, a.top, a.sides, a.color))


def render_ascii(nodes: int, arcs: Sequence[Arc]) -> str:
    """
    One text column per arc: '*' marks its endpoints, 'L'/'R' the side it
    passes each node in between.

    >>> print(render_ascii(3, [Arc(GREEN, 1, 3, (LEFT,))]))
      :  g:1-3
      3  *
      2  L
      1  *
    """
    ordered = _sorted_arcs(arcs)
    labels = [f"{a.color[0]}:{a.bottom}-{a.top}" for a in ordered]
    width = max([len(x) for x in labels], default=1)
    lines = ["  :  " + "  ".join(lab.ljust(width) for lab in labels).rstrip()]
    for node in range(nodes, 0, -1):
        cells = []
        for a in ordered:
            if node in (a.bottom, a.top):
                cells.append("*".ljust(width))
            elif node in a.interior:
                cells.append(a.side_at(node).ljust(width))
            else:
                cells.append(" " * width)
        lines.append((f"{node:3}  " + "  ".join(cells)).rstrip())
    return "\n".join(lines)


def render_tikz(nodes: int, arcs: Sequence[Arc]) -> str:
    """A standalone TikZ document drawing the node column and the arcs."""
    out = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[scale=0.8]",
    ]
    for node in range(1, nodes + 1):
        out.append(rf"\filldraw ({0:.2f},{node:.2f}) circle (2pt) node[left=2pt] {{{node}}};")
    for a in _sorted_arcs(arcs):
        style = "green!55!black, thick, ->" if a.color == GREEN else "red, thick, dashed, ->"
        coords = [(0.0, float(a.bottom))]
        for k in a.interior:
            coords.append((-0.5 if a.side_at(k) == LEFT else 0.5, float(k)))
        coords.append((0.0, float(a.top)))
        if a.color != GREEN:
            pass  # red arcs are drawn bottom-to-top already
        else:
            coords.reverse()  # green arcs run downward
        path = " ".join(f"({x:.2f},{y:.2f})" for x, y in coords)
        out.append(rf"\draw[{style}] plot [smooth] coordinates {{{path}}};")
    out.append(r"\end{tikzpicture}")
    out.append(r"\end{document}")
    return "\n".join(out)
