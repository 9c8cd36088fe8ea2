"""Flip moves on trivalent tailed fatgraphs and relation loops.

A flip collapses a non-tail edge e with distinct trivalent endpoints and
re-expands it the other way across its quadrilateral.  The labels below
follow the cyclic orders read at the two endpoints:

    inward at head(e):   (e, a, b)         b \       / a
    inward at head(~e):  (~e, c, d)           o--e'--o          e points up,
                                            c /       \ d       e' to the left
    after the flip:      (e', b, c) and (~e', d, a)

so the quadrilateral corners run (a, b, c, d) counterclockwise and the
oriented pair (e, e') is positively oriented.  All other vertices and
edges are untouched; the new edge gets a fresh id so that edge ids are
never reused along a path of flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple, Union

from .fatgraph import FatGraph, FatGraphError, OrientedEdge

EdgeLike = Union[int, OrientedEdge]


class FlipError(FatGraphError):
    """The requested flip is not defined."""


class PathStepError(FlipError):
    """A step of a flip path failed; ``index`` is the failing position."""

    def __init__(self, index: int, cause: Exception):
        super().__init__("step %d: %s" % (index, cause))
        self.index = index
        self.cause = cause


class ClosureError(FatGraphError):
    """A loop that must return to its starting graph failed to do so."""


@dataclass(frozen=True)
class FlipContext:
    """Everything recorded about one flip.

    ``edge`` and the four neighbor labels a, b, c, d are oriented edges
    of the graph *before* the flip; ``new_edge`` lives in the graph
    after it.
    """

    edge: OrientedEdge
    a: OrientedEdge
    b: OrientedEdge
    c: OrientedEdge
    d: OrientedEdge
    new_edge: OrientedEdge


@dataclass(frozen=True)
class FlipPath:
    """A composable sequence of flips with all intermediate graphs."""

    graphs: Tuple[FatGraph, ...]
    steps: Tuple[FlipContext, ...]

    @property
    def start(self) -> FatGraph:
        return self.graphs[0]

    @property
    def end(self) -> FatGraph:
        return self.graphs[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def correspondence(self) -> Dict[OrientedEdge, OrientedEdge]:
        """The composed identification of oriented edges, start to end."""
        out = {h: h for h in self.start.oriented_edges()}
        for ctx in self.steps:
            e, e2 = ctx.edge, ctx.new_edge
            for k, v in out.items():
                if v == e:
                    out[k] = e2
                elif v == e.rev:
                    out[k] = e2.rev
        return out

    def is_closed(self) -> bool:
        return self.start.canonical_key() == self.end.canonical_key()


def _as_oriented(graph: FatGraph, e: EdgeLike) -> OrientedEdge:
    if isinstance(e, OrientedEdge):
        return e
    return OrientedEdge(int(e), 1)


def flippable(graph: FatGraph, e: EdgeLike) -> bool:
    e = _as_oriented(graph, e)
    if e not in graph._at or e.edge == graph.tail.edge:
        return False
    v, w = graph.vertex_of(e), graph.vertex_of(e.rev)
    return v != w and graph.valence(v) == 3 and graph.valence(w) == 3


def flippable_edges(graph: FatGraph) -> List[int]:
    return [x for x in graph.edge_ids() if flippable(graph, x)]


def flip(graph: FatGraph, e: EdgeLike) -> Tuple[FatGraph, FlipContext]:
    """Flip along e, returning the new graph and the move record."""
    e = _as_oriented(graph, e)
    if e not in graph._at:
        raise FlipError("no edge %s" % (e,))
    if e.edge == graph.tail.edge:
        raise FlipError("cannot flip the tail edge")
    v, w = graph.vertex_of(e), graph.vertex_of(e.rev)
    if v == w:
        raise FlipError("edge %d is a loop" % e.edge)
    if graph.valence(v) != 3 or graph.valence(w) != 3:
        raise FlipError("endpoints of edge %d are not both trivalent" % e.edge)

    a = graph.successor(e)
    b = graph.successor(a)
    c = graph.successor(e.rev)
    d = graph.successor(c)
    new_id = max(graph.edge_ids()) + 1
    e2 = OrientedEdge(new_id, 1)

    verts = list(graph.vertices)
    verts[v] = (e2, b, c)
    verts[w] = (e2.rev, d, a)
    ctx = FlipContext(edge=e, a=a, b=b, c=c, d=d, new_edge=e2)
    return FatGraph(verts, graph.tail), ctx


def apply_path(graph: FatGraph, flips: Iterable[EdgeLike]) -> FlipPath:
    """Flip the listed edges in order; empty input gives the identity path."""
    graphs = [graph]
    steps: List[FlipContext] = []
    for i, e in enumerate(flips):
        try:
            nxt, ctx = flip(graphs[-1], e)
        except FlipError as err:
            raise PathStepError(i, err) from err
        graphs.append(nxt)
        steps.append(ctx)
    return FlipPath(tuple(graphs), tuple(steps))


def _require_closed(path: FlipPath, what: str) -> FlipPath:
    if not path.is_closed():
        raise ClosureError("%s did not return to its starting graph" % what)
    return path


def reverse_path(path: FlipPath) -> FlipPath:
    """The path undoing ``path``, step by step in reverse.

    Each undo flips the current image of the edge the forward step
    created; images must be tracked because a forward step may flip an
    edge created earlier, whose id the undos recreate afresh.
    """
    restored: Dict[int, int] = {}
    graphs = [path.end]
    steps: List[FlipContext] = []
    for ctx in reversed(path.steps):
        target = restored.get(ctx.new_edge.edge, ctx.new_edge.edge)
        nxt, undo = flip(graphs[-1], target)
        restored[ctx.edge.edge] = undo.new_edge.edge
        graphs.append(nxt)
        steps.append(undo)
    return FlipPath(tuple(graphs), tuple(steps))


def concat_paths(first: FlipPath, second: FlipPath) -> FlipPath:
    """Join two paths where ``second`` starts at the end graph of ``first``."""
    if second.start != first.end:
        raise FatGraphError("paths do not share the junction graph")
    return FlipPath(first.graphs + second.graphs[1:],
                    first.steps + second.steps)


def involution_pair(graph: FatGraph, e: EdgeLike) -> FlipPath:
    """Flip e, then flip the edge it created.  A closed loop of length 2."""
    g1, ctx1 = flip(graph, e)
    g2, ctx2 = flip(g1, ctx1.new_edge)
    path = FlipPath((graph, g1, g2), (ctx1, ctx2))
    return _require_closed(path, "involution pair")


def commuting_loop(graph: FatGraph, e1: EdgeLike, e2: EdgeLike) -> FlipPath:
    """The length-4 loop flipping two disjoint edges and then undoing both."""
    e1 = _as_oriented(graph, e1)
    e2 = _as_oriented(graph, e2)
    ends1 = set(graph.endpoints(e1.edge))
    ends2 = set(graph.endpoints(e2.edge))
    if ends1 & ends2:
        raise FlipError("edges %d and %d share an endpoint"
                        % (e1.edge, e2.edge))
    g1, c1 = flip(graph, e1)
    g2, c2 = flip(g1, e2)
    g3, c3 = flip(g2, c1.new_edge)
    g4, c4 = flip(g3, c2.new_edge)
    path = FlipPath((graph, g1, g2, g3, g4), (c1, c2, c3, c4))
    return _require_closed(path, "commuting square")


def pentagon_path(graph: FatGraph, f: EdgeLike, g: EdgeLike) -> FlipPath:
    """The pentagon loop for two edges sharing exactly one endpoint.

    Alternately flips the current images of f and g (five flips in all);
    by construction no flip immediately undoes the previous one.  The
    result is a closed loop.
    """
    f = _as_oriented(graph, f)
    g = _as_oriented(graph, g)
    if f.edge == g.edge:
        raise FlipError("pentagon needs two distinct edges")
    shared = set(graph.endpoints(f.edge)) & set(graph.endpoints(g.edge))
    if len(shared) != 1:
        raise FlipError("edges %d and %d share %d endpoints, need exactly 1"
                        % (f.edge, g.edge, len(shared)))
    graphs = [graph]
    steps: List[FlipContext] = []
    cur = {0: f, 1: g}
    for i in range(5):
        which = i % 2
        try:
            nxt, ctx = flip(graphs[-1], cur[which])
        except FlipError as err:
            raise PathStepError(i, err) from err
        cur[which] = ctx.new_edge
        graphs.append(nxt)
        steps.append(ctx)
    path = FlipPath(tuple(graphs), tuple(steps))
    return _require_closed(path, "pentagon loop")


def disjoint_flippable_pairs(graph: FatGraph) -> List[Tuple[int, int]]:
    """Pairs of flippable edges with no common endpoint."""
    ids = flippable_edges(graph)
    out = []
    for i, x in enumerate(ids):
        for y in ids[i + 1:]:
            if not set(graph.endpoints(x)) & set(graph.endpoints(y)):
                out.append((x, y))
    return out


def adjacent_flippable_pairs(graph: FatGraph) -> List[Tuple[int, int]]:
    """Pairs of flippable edges sharing exactly one endpoint."""
    ids = flippable_edges(graph)
    out = []
    for i, x in enumerate(ids):
        for y in ids[i + 1:]:
            if len(set(graph.endpoints(x)) & set(graph.endpoints(y))) == 1:
                out.append((x, y))
    return out
