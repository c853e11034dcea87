"""
Bricks of the gentle algebra RA_n as string modules, and the arc calculus
for their homomorphisms and extensions.

RA_n is the quiver 1 <-> 2 <-> ... <-> n with arrows a_i: i -> i+1 and
a_i*: i+1 -> i, modulo all 2-cycles.  Every brick is a string module with
interval support [p, q] and, on each support edge i (joining vertices i and
i+1), exactly one of a_i ("down") or a_i* ("up") acting.

The bijection sigma sends an arc with endpoints p < q to the brick with
support [p, q-1]; the arc's passage side at node i decides the action on
edge i-1: right = a_{i-1} (down), left = a_{i-1}* (up).  Under sigma,
predecessor/successor closed subarcs correspond to quotients/submodules,
which is what the hom and ext routines below exploit.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Iterator, Optional, Sequence

from .arcs import (
    GREEN,
    LEFT,
    RED,
    RIGHT,
    Arc,
    common_subarcs,
    is_predecessor_closed,
    is_successor_closed,
)

DOWN = "down"
UP = "up"


@dataclasses.dataclass(frozen=True, order=True)
class StringBrick:
    """
    A brick of RA_n: support interval and one action per support edge.

    ``actions[j]`` describes edge p+j: "down" when a_{p+j} acts, "up" when
    a_{p+j}* acts.
    """

    n: int
    support: tuple[int, int]
    actions: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", tuple(self.support))
        object.__setattr__(self, "actions", tuple(self.actions))
        p, q = self.support
        if not 1 <= p <= q <= self.n:
            raise ValueError(f"support {self.support} does not fit in RA_{self.n}")
        if len(self.actions) != q - p:
            raise ValueError("one action per support edge is required")
        if any(x not in (DOWN, UP) for x in self.actions):
            raise ValueError(f"actions must be {DOWN!r} or {UP!r}: {self.actions!r}")

    @property
    def vertices(self) -> range:
        return range(self.support[0], self.support[1] + 1)

    @property
    def dim(self) -> int:
        return self.support[1] - self.support[0] + 1

    def action_at(self, edge: int) -> str:
        p, q = self.support
        if not p <= edge < q:
            raise ValueError(f"edge {edge} is outside the support of {self}")
        return self.actions[edge - p]

    def layers(self) -> str:
        """
        Stacked radical-layer style name, head at the top: the brick with
        a_1* and a_2 acting renders as "2/13".

        >>> StringBrick(4, (1, 3), (UP, DOWN)).layers()
        '2/13'
        >>> StringBrick(4, (3, 4), (UP,)).layers()
        '4/3'
        """
        p, q = self.support
        depth = {p: 0}
        for edge in range(p, q):
            step = 1 if self.actions[edge - p] == DOWN else -1
            depth[edge + 1] = depth[edge] + step
        lowest = min(depth.values())
        rows: dict[int, list[int]] = {}
        for v in self.vertices:
            rows.setdefault(depth[v] - lowest, []).append(v)
        return "/".join("".join(str(v) for v in sorted(rows[r])) for r in sorted(rows))


def sigma(arc: Arc, nodes: int) -> StringBrick:
    """
    The brick of RA_{nodes-1} corresponding to an arc on ``nodes`` nodes.

    >>> sigma(Arc(GREEN, 1, 2), 5).support
    (1, 1)
    >>> sigma(Arc(GREEN, 1, 4, (LEFT, RIGHT)), 5)
    StringBrick(n=4, support=(1, 3), actions=('up', 'down'))
    """
    if arc.top > nodes:
        raise ValueError(f"arc {arc} does not fit on {nodes} nodes")
    actions = tuple(DOWN if arc.side_at(i) == RIGHT else UP for i in arc.interior)
    return StringBrick(nodes - 1, (arc.bottom, arc.top - 1), actions)


def sigma_inverse(brick: StringBrick, color: str) -> Arc:
    """
    The arc of the requested color corresponding to a brick.

    >>> sigma_inverse(StringBrick(4, (1, 3), (UP, DOWN)), GREEN)
    Arc(color='green', bottom=1, top=4, sides=('L', 'R'))
    """
    p, q = brick.support
    sides = tuple(RIGHT if x == DOWN else LEFT for x in brick.actions)
    return Arc(color, p, q + 1, sides)


def enumerate_bricks(n: int) -> tuple[StringBrick, ...]:
    """
    All bricks of RA_n, sorted; there are 2^(n+1) - n - 2 of them.

    >>> [len(enumerate_bricks(n)) for n in (1, 2, 3, 4)]
    [1, 4, 11, 26]
    """
    bricks = [
        StringBrick(n, (p, q), actions)
        for p in range(1, n + 1)
        for q in range(p, n + 1)
        for actions in itertools.product((DOWN, UP), repeat=q - p)
    ]
    return tuple(sorted(bricks))


def simple_brick(n: int, vertex: int) -> StringBrick:
    return StringBrick(n, (vertex, vertex))


def hom_arc_basis(source: StringBrick, target: StringBrick) -> tuple[Arc, ...]:
    """
    The graph-map basis of Hom(source, target): common subarcs that are
    predecessor closed in arc(source) and successor closed in arc(target).
    Each basis arc is the image of the corresponding morphism.

    >>> b = StringBrick(4, (1, 3), (UP, DOWN))
    >>> [g.curve() for g in hom_arc_basis(b, b)]
    [(1, 4, ('L', 'R'))]
    """
    a = sigma_inverse(source, GREEN)
    b = sigma_inverse(target, GREEN)
    return tuple(
        g
        for g in common_subarcs(a, b)
        if is_predecessor_closed(g, a) and is_successor_closed(g, b)
    )


def hom_dim_by_arcs(source: StringBrick, target: StringBrick) -> int:
    return len(hom_arc_basis(source, target))


def _glue(lower: Arc, upper: Arc, junction_side: str) -> Arc:
    """Concatenate two arcs meeting at lower.top == upper.bottom."""
    if lower.top != upper.bottom:
        raise ValueError("arcs are not adjacent")
    sides = lower.sides + (junction_side,) + upper.sides
    return Arc(GREEN, lower.bottom, upper.top, sides)


def _splice(a: Arc, b: Arc, gamma: Arc) -> Arc:
    """
    The middle-term arc running from a's bottom to b's top: it follows a
    below gamma, gamma in between, and b above; at gamma's endpoints it
    agrees with whichever of a, b still passes there.
    """
    sides = []
    for k in range(a.bottom + 1, b.top):
        if k < gamma.bottom:
            sides.append(a.side_at(k))
        elif k == gamma.bottom:
            sides.append(a.side_at(k))
        elif k < gamma.top:
            sides.append(gamma.side_at(k))
        elif k == gamma.top:
            sides.append(b.side_at(k))
        else:
            sides.append(b.side_at(k))
    return Arc(GREEN, a.bottom, b.top, tuple(sides))


def ext_middle_terms(
    quotient: StringBrick, sub: StringBrick
) -> tuple[tuple[Arc, Optional[Arc]], ...]:
    """
    One entry per basis class of Ext^1(quotient, sub), i.e. per non-split
    sequence sub -> E -> quotient, as the arcs of E's indecomposable
    summands.

    Two sources: an arrow splicing the arcs across a shared node when the
    supports are adjacent (single middle term), and two-sided arc maps from
    arc(sub) to arc(quotient), whose middle term is E1 + E2.
    """
    a = sigma_inverse(quotient, GREEN)
    b = sigma_inverse(sub, GREEN)
    classes: list[tuple[Arc, Optional[Arc]]] = []
    # Arrow extension: the connecting arrow runs from the quotient part into
    # the sub part, which orients the junction side.
    if a.top == b.bottom:
        classes.append((_glue(a, b, RIGHT), None))
    elif b.top == a.bottom:
        classes.append((_glue(b, a, LEFT), None))
    # Two-sided arc maps certify a morphism sub -> quotient whose mapping
    # cylinder splits into the two spliced arcs.
    for gamma in common_subarcs(a, b):
        if not (is_predecessor_closed(gamma, b) and is_successor_closed(gamma, a)):
            continue
        a1_empty = gamma.bottom == a.bottom
        a2_empty = gamma.top == a.top
        b1_empty = gamma.bottom == b.bottom
        b2_empty = gamma.top == b.top
        if (a1_empty and b1_empty) or (a2_empty and b2_empty):
            continue
        classes.append((_splice(a, b, gamma), _splice(b, a, gamma)))
    return tuple(classes)


def ext_nonzero_by_arcs(
    quotient: StringBrick, sub: StringBrick
) -> Optional[tuple[Arc, Optional[Arc]]]:
    """
    The first Ext class between the bricks, as middle-term arcs, or None
    when Ext^1(quotient, sub) = 0.

    >>> s = StringBrick(4, (2, 4), (DOWN, UP))      # 24/3
    >>> t = StringBrick(4, (1, 3), (UP, DOWN))      # 2/13
    >>> e1, e2 = ext_nonzero_by_arcs(s, t)
    >>> (e1.curve(), e2.curve())
    ((2, 4, ('R',)), (1, 5, ('L', 'R', 'L')))
    >>> ext_nonzero_by_arcs(s, s) is None
    True
    """
    classes = ext_middle_terms(quotient, sub)
    return classes[0] if classes else None


def ext_dim_by_arcs(quotient: StringBrick, sub: StringBrick) -> int:
    return len(ext_middle_terms(quotient, sub))


def quotient_by_submodule(brick: StringBrick, sub: StringBrick) -> StringBrick:
    """
    The cokernel of the inclusion sub -> brick, which must again be a brick:
    the submodule has to sit at one end of the support interval.
    """
    piece = _complement_piece(brick, sub)
    if piece is None:
        raise ValueError(f"cokernel of {sub.layers()} in {brick.layers()} is not a brick")
    return piece


def kernel_of_epi(brick: StringBrick, quotient: StringBrick) -> StringBrick:
    """The kernel of a surjection brick -> quotient, when it is a brick."""
    piece = _complement_piece(brick, quotient)
    if piece is None:
        raise ValueError(f"kernel of {brick.layers()} -> {quotient.layers()} is not a brick")
    return piece


def _complement_piece(brick: StringBrick, part: StringBrick) -> Optional[StringBrick]:
    p, q = brick.support
    pp, qq = part.support
    if (pp, qq) == (p, q):
        return None
    if pp == p:
        lo, hi = qq + 1, q
    elif qq == q:
        lo, hi = p, pp - 1
    else:
        return None  # interior part leaves two pieces
    actions = tuple(brick.action_at(e) for e in range(lo, hi))
    return StringBrick(brick.n, (lo, hi), actions)


def splice_extension(quotient: StringBrick, sub: StringBrick) -> StringBrick:
    """
    The middle term of the arrow extension sub -> E -> quotient for bricks
    with adjacent supports.
    """
    a = sigma_inverse(quotient, GREEN)
    b = sigma_inverse(sub, GREEN)
    if a.top == b.bottom:
        arc = _glue(a, b, RIGHT)
    elif b.top == a.bottom:
        arc = _glue(b, a, LEFT)
    else:
        raise ValueError("supports are not adjacent")
    return sigma(arc, quotient.n + 1)
