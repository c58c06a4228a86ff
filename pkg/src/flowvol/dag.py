"""Directed acyclic multigraphs on vertices 1..n+1 with increasing edges.

A :class:`Dag` is stored in canonical form: edges sorted by
``(tail, head, slot)`` with slots numbered densely from 0 inside each group
of parallel edges.  Two DAGs are equal exactly when their edge multisets
agree.  The slot-0 copy of ``(i, i+1)`` is the designated spine edge.
"""
from collections import Counter
from typing import NamedTuple

from .errors import DagError, FamilyError, MissingSpineEdgeError, PairError

NESTED = "nested"
CROSSED = "crossed"


class Edge(NamedTuple):
    tail: int
    head: int
    slot: int = 0

    @property
    def ends(self):
        return (self.tail, self.head)

    def __str__(self):
        s = f"({self.tail},{self.head})"
        return s if self.slot == 0 else f"{s}#{self.slot}"


class DegreeSequence(NamedTuple):
    out_degrees: tuple
    in_degrees: tuple


class EdgePair(NamedTuple):
    """Two edges with interleaved endpoints.

    nested:  outer=(a,d), inner=(b,c)
    crossed: outer=(a,c), inner=(b,d)
    with a<b<c<d in both cases.
    """
    outer: Edge
    inner: Edge
    kind: str

    @property
    def vertices(self):
        a, b = self.outer.tail, self.inner.tail
        if self.kind == NESTED:
            return a, b, self.inner.head, self.outer.head
        return a, b, self.outer.head, self.inner.head

    def __str__(self):
        return f"({self.outer.tail},{self.outer.head}),({self.inner.tail},{self.inner.head})"


def _canonical(pairs):
    counts = Counter(pairs)
    edges = []
    for (t, h) in sorted(counts):
        edges.extend(Edge(t, h, s) for s in range(counts[(t, h)]))
    return tuple(edges)


class Dag:
    """Immutable DAG on vertices ``1..vertex_count``.

    >>> g = Dag(3, [(2, 3), (1, 2), (1, 2)])
    >>> [str(e) for e in g.edges]
    ['(1,2)', '(1,2)#1', '(2,3)']
    """

    __slots__ = ("vertex_count", "edges", "_hash")

    def __init__(self, vertex_count, pairs):
        if vertex_count < 1:
            raise DagError("a DAG needs at least one vertex")
        pairs = [tuple(p[:2]) for p in pairs]
        for t, h in pairs:
            if not (1 <= t < h <= vertex_count):
                raise DagError(f"edge ({t},{h}) must satisfy 1 <= tail < head <= {vertex_count}")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", _canonical(pairs))
        object.__setattr__(self, "_hash", hash((vertex_count, self.edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Dag is immutable")

    @property
    def n(self):
        return self.vertex_count - 1

    def __eq__(self, other):
        if not isinstance(other, Dag):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Dag({self.vertex_count}, {[e.ends for e in self.edges]})"

    def __len__(self):
        return len(self.edges)

    def pairs(self):
        return [e.ends for e in self.edges]

    def canonical(self):
        return Dag(self.vertex_count, self.pairs())

    def multiplicity(self, tail, head):
        return sum(1 for e in self.edges if e.tail == tail and e.head == head)

    def has_edge(self, edge):
        return edge in self.edges

    def out_edges(self, v):
        return [e for e in self.edges if e.tail == v]

    def in_edges(self, v):
        return [e for e in self.edges if e.head == v]

    def degrees(self):
        out = [0] * self.vertex_count
        inn = [0] * self.vertex_count
        for e in self.edges:
            out[e.tail - 1] += 1
            inn[e.head - 1] += 1
        return DegreeSequence(tuple(out), tuple(inn))

    def prefix_length(self, i):
        """Number of edges in L_i, the edges whose tail is at most ``i``."""
        return sum(1 for e in self.edges if e.tail <= i)

    def replace(self, remove, add):
        """Return the canonical DAG with one copy of each pair in ``remove``
        taken out and the pairs in ``add`` put in."""
        counts = Counter(self.pairs())
        for p in remove:
            if counts[p] == 0:
                raise PairError(f"edge {p} not present")
            counts[p] -= 1
        return Dag(self.vertex_count, list(counts.elements()) + list(add))


def validate_family(dag, k):
    """True iff the out-degrees are (k,2,...,2,0) and the in-degrees (0,2,...,2,k)."""
    m = dag.vertex_count
    if m < 2:
        return False
    out, inn = dag.degrees()
    want_out = (k,) + (2,) * (m - 2) + (0,)
    want_in = (0,) + (2,) * (m - 2) + (k,)
    return out == want_out and inn == want_in


def require_family(dag, k=3):
    if not validate_family(dag, k):
        raise FamilyError(f"DAG is not in F_(n,{k}): degrees {dag.degrees()}")


def edge_count_check(dag, k):
    require_family(dag, k)
    return len(dag.edges) == 2 * dag.n + k - 2


def spine(dag):
    """The slot-0 copies of (i, i+1) for i = 1..n."""
    out = []
    for i in range(1, dag.vertex_count):
        e = Edge(i, i + 1, 0)
        if e not in dag.edges:
            raise MissingSpineEdgeError(i)
        out.append(e)
    return out


def _top_copies(dag):
    top = {}
    for e in dag.edges:
        top[e.ends] = e
    return list(top.values())


def find_pairs(dag, kind):
    """All nested or crossed pairs, one per pair of endpoint tuples.

    When an edge has parallel copies the highest slot stands in for the
    group, since that is the copy :func:`interchange` consumes.
    """
    if kind not in (NESTED, CROSSED):
        raise ValueError(f"kind must be {NESTED!r} or {CROSSED!r}")
    edges = _top_copies(dag)
    found = []
    for x in edges:
        for y in edges:
            a, hx = x.ends
            b, hy = y.ends
            if not a < b:
                continue
            if kind == NESTED and b < hy < hx:
                found.append(EdgePair(x, y, NESTED))
            elif kind == CROSSED and b < hx < hy:
                found.append(EdgePair(x, y, CROSSED))
    found.sort(key=lambda p: (p.outer.ends, p.inner.ends))
    return found


def _check_pair(dag, pair, kind):
    if pair.kind != kind:
        raise PairError(f"expected a {kind} pair, got {pair.kind}")
    a, b, c, d = pair.vertices
    if not a < b < c < d:
        raise PairError(f"pair {pair} is not {kind}: endpoints out of order")
    for e in (pair.outer, pair.inner):
        if dag.multiplicity(e.tail, e.head) == 0:
            raise PairError(f"edge {e.ends} not in DAG")
    return a, b, c, d


def nested_pair(outer, inner):
    return EdgePair(Edge(*outer), Edge(*inner), NESTED)


def crossed_pair(outer, inner):
    return EdgePair(Edge(*outer), Edge(*inner), CROSSED)


def interchange(dag, pair):
    """Replace nested (a,d),(b,c) by (a,c),(b,d)."""
    a, b, c, d = _check_pair(dag, pair, NESTED)
    return dag.replace([(a, d), (b, c)], [(a, c), (b, d)])


def reverse_interchange(dag, pair):
    """Replace crossed (a,c),(b,d) by (a,d),(b,c)."""
    a, b, c, d = _check_pair(dag, pair, CROSSED)
    return dag.replace([(a, c), (b, d)], [(a, d), (b, c)])


def overpasses(dag, i):
    return [e for e in dag.edges if e.tail < i < e.head]


def unique_overpass(dag, i):
    """The single edge (a,d) with a < i < d in a member of F_(n,3)."""
    require_family(dag, 3)
    if not 2 <= i <= dag.n:
        raise ValueError(f"vertex {i} is not interior")
    over = overpasses(dag, i)
    if len(over) != 1:
        raise FamilyError(f"expected one edge over vertex {i}, found {len(over)}")
    return over[0]
