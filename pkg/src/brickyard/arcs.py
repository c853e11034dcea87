"""
Colored arcs on a column of nodes, noncrossing diagrams, and the bijections
delta / delta_bar between permutations and one-colored diagrams.

Nodes 1, ..., m are drawn in a vertical column, numbered bottom to top.  An
arc connects a bottom node to a top node and passes each node strictly
between them on one side, "L" or "R".  A green arc is oriented downward
(source = top endpoint), a red arc upward (source = bottom endpoint).  Arcs
are identified up to combinatorial equivalence, i.e. by (color, endpoints,
sides).

Side bits are stored as the arcs are drawn in the plane: ``side_at(k) == "L"``
means the curve passes to the left of node k (so node k lies to the arc's
right).
"""
from __future__ import annotations

import dataclasses
import enum
import functools
import itertools
from typing import Iterable, Iterator, Optional, Sequence

from .permutations import Word, symmetric_group, validate_word

GREEN = "green"
RED = "red"
LEFT = "L"
RIGHT = "R"

_MAX_INVERSE_NODES = 9  # delta_inverse tabulates S_m; 9! is the desk-scale bound


@dataclasses.dataclass(frozen=True, order=True)
class Arc:
    """
    A colored arc.  ``sides`` lists the passage side for the interior nodes
    bottom+1, ..., top-1 in increasing order.

    >>> a = Arc(GREEN, 1, 4, (LEFT, RIGHT))
    >>> (a.src, a.tar, a.side_at(2), a.side_at(3))
    (4, 1, 'L', 'R')
    """

    color: str
    bottom: int
    top: int
    sides: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.color not in (GREEN, RED):
            raise ValueError(f"arc color must be {GREEN!r} or {RED!r}: {self.color!r}")
        if not 1 <= self.bottom < self.top:
            raise ValueError(f"arc needs bottom < top: {self.bottom}, {self.top}")
        object.__setattr__(self, "sides", tuple(self.sides))
        if len(self.sides) != self.top - self.bottom - 1:
            raise ValueError("one side bit per interior node is required")
        if any(s not in (LEFT, RIGHT) for s in self.sides):
            raise ValueError(f"sides must be {LEFT!r} or {RIGHT!r}: {self.sides!r}")

    @property
    def src(self) -> int:
        return self.top if self.color == GREEN else self.bottom

    @property
    def tar(self) -> int:
        return self.bottom if self.color == GREEN else self.top

    @property
    def support(self) -> range:
        """All nodes between and including the endpoints."""
        return range(self.bottom, self.top + 1)

    @property
    def interior(self) -> range:
        """The nodes the arc passes, i.e. strictly between its endpoints."""
        return range(self.bottom + 1, self.top)

    def side_at(self, node: int) -> str:
        if node not in self.interior:
            raise ValueError(f"arc {self} does not pass node {node}")
        return self.sides[node - self.bottom - 1]

    def recolored(self, color: str) -> "Arc":
        return Arc(color, self.bottom, self.top, self.sides)

    def curve(self) -> tuple[int, int, tuple[str, ...]]:
        """The underlying uncolored curve, for color-agnostic comparisons."""
        return (self.bottom, self.top, self.sides)


class SubarcRelation(enum.Enum):
    NOT_SUBARC = "not-subarc"
    SUBARC = "subarc"
    PREDECESSOR_CLOSED = "predecessor-closed"
    SUCCESSOR_CLOSED = "successor-closed"
    BOTH = "both"


def is_subarc(g: Arc, a: Arc) -> bool:
    """
    g is a subarc of a when supp(g) is contained in supp(a) and the two arcs
    pass every interior node of g on the same side.  Color is ignored.
    """
    if g.bottom < a.bottom or g.top > a.top:
        return False
    return all(g.side_at(k) == a.side_at(k) for k in g.interior)


def subarc_relation(g: Arc, a: Arc) -> SubarcRelation:
    """
    Classify g against a: predecessor closed means a passes neither to the
    right of g's bottom endpoint nor to the left of its top endpoint;
    successor closed is the mirror image.  BOTH holds exactly when the two
    arcs are the same curve.

    >>> a = Arc(GREEN, 1, 3, (RIGHT,))
    >>> subarc_relation(a, a)
    <SubarcRelation.BOTH: 'both'>
    >>> subarc_relation(Arc(GREEN, 1, 2), a)
    <SubarcRelation.PREDECESSOR_CLOSED: 'predecessor-closed'>
    >>> subarc_relation(Arc(GREEN, 2, 3), a)
    <SubarcRelation.SUCCESSOR_CLOSED: 'successor-closed'>
    >>> subarc_relation(Arc(GREEN, 1, 2), Arc(GREEN, 3, 4))
    <SubarcRelation.NOT_SUBARC: 'not-subarc'>
    """
    if not is_subarc(g, a):
        return SubarcRelation.NOT_SUBARC
    pred = (g.bottom == a.bottom or a.side_at(g.bottom) == LEFT) and (
        g.top == a.top or a.side_at(g.top) == RIGHT
    )
    succ = (g.bottom == a.bottom or a.side_at(g.bottom) == RIGHT) and (
        g.top == a.top or a.side_at(g.top) == LEFT
    )
    if pred and succ:
        return SubarcRelation.BOTH
    if pred:
        return SubarcRelation.PREDECESSOR_CLOSED
    if succ:
        return SubarcRelation.SUCCESSOR_CLOSED
    return SubarcRelation.SUBARC


def is_predecessor_closed(g: Arc, a: Arc) -> bool:
    return subarc_relation(g, a) in (
        SubarcRelation.PREDECESSOR_CLOSED,
        SubarcRelation.BOTH,
    )


def is_successor_closed(g: Arc, a: Arc) -> bool:
    return subarc_relation(g, a) in (
        SubarcRelation.SUCCESSOR_CLOSED,
        SubarcRelation.BOTH,
    )


def _order_tokens(a: Arc, b: Arc) -> list[int]:
    """
    Pinned left-to-right orders of the two curves, bottom to top: +1 means a
    must run left of b near that height, -1 the opposite.  A node interior to
    both pins the order when the side bits differ; an endpoint of one arc
    interior to the other pins the order just beside it (the passing arc is
    on its side bit, the ending arc hugs the column).  Shared endpoints pin
    nothing.
    """
    lo = max(a.bottom, b.bottom)
    hi = min(a.top, b.top)
    if lo >= hi:
        return []
    tokens: list[int] = []

    def boundary(node: int) -> None:
        if node in a.interior and node not in b.interior:
            tokens.append(1 if a.side_at(node) == LEFT else -1)
        elif node in b.interior and node not in a.interior:
            tokens.append(-1 if b.side_at(node) == LEFT else 1)

    boundary(lo)
    for k in range(lo + 1, hi):
        sa, sb = a.side_at(k), b.side_at(k)
        if sa != sb:
            tokens.append(1 if sa == LEFT else -1)
    boundary(hi)
    return tokens


def noncrossing(a: Arc, b: Arc) -> bool:
    """
    Decide whether the two arcs can be drawn with disjoint interiors.  Two
    monotone curves must cross exactly when two of their pinned left-right
    orders disagree.

    >>> noncrossing(Arc(GREEN, 1, 2), Arc(GREEN, 3, 4))
    True
    >>> alpha = Arc(GREEN, 1, 5, (RIGHT, RIGHT, LEFT))
    >>> beta = Arc(RED, 1, 4, (RIGHT, LEFT))
    >>> noncrossing(alpha, beta)
    False
    """
    tokens = _order_tokens(a, b)
    return not (1 in tokens and -1 in tokens)


def crossing_witness(a: Arc, b: Arc) -> Optional[Arc]:
    """
    For crossing arcs, return a common subarc that is predecessor closed in
    one of them and successor closed in the other (the canonical certificate
    of a nonzero morphism).  Returns None for noncrossing arcs.

    >>> alpha = Arc(GREEN, 1, 5, (RIGHT, RIGHT, LEFT))
    >>> beta = Arc(RED, 1, 4, (RIGHT, LEFT))
    >>> crossing_witness(alpha, beta)
    Arc(color='green', bottom=1, top=3, sides=('R',))
    """
    if noncrossing(a, b):
        return None
    for g in common_subarcs(a, b):
        ga, gb = subarc_relation(g, a), subarc_relation(g, b)
        if ga is SubarcRelation.PREDECESSOR_CLOSED and gb is SubarcRelation.SUCCESSOR_CLOSED:
            return g
        if ga is SubarcRelation.SUCCESSOR_CLOSED and gb is SubarcRelation.PREDECESSOR_CLOSED:
            return g
    raise RuntimeError(f"crossing arcs without a closure witness: {a}, {b}")


def common_subarcs(a: Arc, b: Arc) -> Iterator[Arc]:
    """All arcs that are subarcs of both a and b, smallest endpoints first."""
    lo = max(a.bottom, b.bottom)
    hi = min(a.top, b.top)
    for bot, top in itertools.combinations(range(lo, hi + 1), 2):
        if all(a.side_at(k) == b.side_at(k) for k in range(bot + 1, top)):
            yield Arc(GREEN, bot, top, tuple(a.side_at(k) for k in range(bot + 1, top)))


def is_left_of(b: Arc, a: Arc) -> bool:
    """
    Whether b is left of a, for overlapping noncrossing arcs: every node left
    of b that a passes is also left of a, a passes b's endpoints on the
    right, and b passes a's endpoints on the left.  (A node is left of an arc
    when the arc passes it on the right.)

    >>> solid = Arc(GREEN, 1, 5, (LEFT, LEFT, LEFT))
    >>> dashed = Arc(RED, 2, 4, (RIGHT,))
    >>> is_left_of(solid, dashed), is_left_of(dashed, solid)
    (True, False)
    """
    if not set(a.support) & set(b.support):
        raise ValueError("arcs do not overlap")
    if not noncrossing(a, b):
        raise ValueError("left-of is undefined for crossing arcs")
    for k in b.interior:
        if k in a.interior and b.side_at(k) == RIGHT and a.side_at(k) != RIGHT:
            return False
    for k in (b.bottom, b.top):
        if k in a.interior and a.side_at(k) != RIGHT:
            return False
    for k in (a.bottom, a.top):
        if k in b.interior and b.side_at(k) != LEFT:
            return False
    return True


@dataclasses.dataclass(frozen=True)
class ArcDiagram:
    """
    A noncrossing arc diagram: arcs of a single color on ``nodes`` nodes, no
    two sharing a bottom endpoint or a top endpoint, no two crossing.
    """

    nodes: int
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        if self.nodes < 1:
            raise ValueError("a diagram needs at least one node")
        arcs = sorted(self.arcs)
        if len({a.color for a in arcs}) > 1:
            raise ValueError("diagram arcs must share one color")
        for a in arcs:
            if a.top > self.nodes:
                raise ValueError(f"arc {a} does not fit on {self.nodes} nodes")
        for a, b in itertools.combinations(arcs, 2):
            if a.bottom == b.bottom or a.top == b.top:
                raise ValueError(f"arcs share an endpoint: {a}, {b}")
            if not noncrossing(a, b):
                raise ValueError(f"arcs cross: {a}, {b}")

    @property
    def color(self) -> Optional[str]:
        for a in self.arcs:
            return a.color
        return None

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


def delta(word: Sequence[int]) -> ArcDiagram:
    """
    Reading's bijection: one green arc per descent of w.  The descent
    (q, p) = (w_i, w_{i+1}) becomes the arc from p up to q; squashing the
    plot of the word onto a vertical line puts an interior node k on the
    right of the arc when k's column is left of the descent's segment, and
    on the left when it is right.

    >>> [sorted(delta(w).arcs) for w in [(1, 2, 3), (2, 1, 3)]]
    [[], [Arc(color='green', bottom=1, top=2, sides=())]]
    >>> len(delta((3, 2, 1)).arcs)
    2
    """
    return _squash(word, GREEN)


def delta_bar(word: Sequence[int]) -> ArcDiagram:
    """
    The red twin of delta: one red arc per ascent.

    >>> sorted(delta_bar((5, 3, 4, 1, 2)).arcs)
    [Arc(color='red', bottom=1, top=2, sides=()), Arc(color='red', bottom=3, top=4, sides=())]
    """
    return _squash(word, RED)


def _squash(word: Sequence[int], color: str) -> ArcDiagram:
    w = validate_word(word)
    position = {letter: i for i, letter in enumerate(w)}
    arcs = []
    for i in range(len(w) - 1):
        descending = w[i] > w[i + 1]
        if (color == GREEN) != descending:
            continue
        bottom, top = sorted((w[i], w[i + 1]))
        sides = []
        for k in range(bottom + 1, top):
            # Column j of node k relative to the segment spanning columns
            # i, i+1 decides the passage side.
            j = position[k]
            sides.append(RIGHT if j < i else LEFT)
        arcs.append(Arc(color, bottom, top, tuple(sides)))
    return ArcDiagram(len(w), frozenset(arcs))


@functools.lru_cache(maxsize=None)
def _inverse_table(nodes: int, color: str) -> dict[frozenset[Arc], Word]:
    if nodes > _MAX_INVERSE_NODES:
        raise ValueError(f"delta_inverse is tabulated only up to {_MAX_INVERSE_NODES} nodes")
    squash = delta if color == GREEN else delta_bar
    return {squash(w).arcs: tuple(w) for w in symmetric_group(nodes)}


def delta_inverse(diagram: ArcDiagram, color: Optional[str] = None) -> Word:
    """
    The permutation mapping to the given one-colored noncrossing diagram.
    The color must be passed explicitly for an empty diagram.

    >>> delta_inverse(ArcDiagram(4, frozenset()), GREEN)
    (1, 2, 3, 4)
    >>> delta_inverse(delta((5, 3, 4, 1, 2)))
    (5, 3, 4, 1, 2)
    >>> delta_inverse(ArcDiagram(4, {Arc(GREEN, 1, 2)}))
    (2, 1, 3, 4)
    """
    if diagram.color is not None:
        if color is not None and color != diagram.color:
            raise ValueError("explicit color disagrees with the diagram")
        color = diagram.color
    if color is None:
        raise ValueError("an empty diagram needs an explicit color")
    table = _inverse_table(diagram.nodes, color)
    try:
        return table[diagram.arcs]
    except KeyError:
        # The maps are bijections onto the noncrossing diagrams, so a valid
        # diagram without a preimage signals an implementation bug.
        raise RuntimeError(f"no preimage for valid diagram {diagram}") from None


def all_arcs(nodes: int, color: str = GREEN) -> Iterator[Arc]:
    """Every arc on the given node column, in sorted order."""
    for bottom, top in itertools.combinations(range(1, nodes + 1), 2):
        for sides in itertools.product((LEFT, RIGHT), repeat=top - bottom - 1):
            yield Arc(color, bottom, top, sides)
