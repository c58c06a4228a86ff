"""Planar embeddings, truncated duals and rank-1 posets.

A member of F_(n,3) is drawn with the spine on a horizontal line, path A
below it and path B above it.  Each non-spine edge (j,k) of A bounds one
face under spine edges e_j..e_{k-1}; likewise for B above.  The truncated
dual has one element per bounded face and one relation per spine edge,
joining the face below that edge to the face above it.

A :class:`RankOnePoset` keeps its rank-0 elements x_0..x_{l-1} and rank-1
elements y_0..y_{r-1} in left-to-right order (0-based here), and its
relations as ``(x, y)`` index pairs in left-to-right order.  Relation k
corresponds to spine edge e_{k+1}.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .dag import Dag, Edge, require_family, spine
from .errors import RealizabilityError, ResourceLimitError, MAX_ORACLE_ELEMENTS
from .family import BinaryWord, all_words, check_family_n, dag_from_word, word_from_dag
from .flows import volume_f1, W_SPECIAL
from .report import Report

DOWNSET_DP = "downset_dp"
PERMUTATION_ORACLE = "permutation_oracle"


class PlanarEmbedding(NamedTuple):
    spine: list
    path_a: list  # drawn below the spine, starts with the second (1,2)
    path_b: list  # drawn above the spine


def _follow(start, next_edge):
    path = [start]
    while start.head in next_edge:
        start = next_edge[start.head]
        path.append(start)
    return path


def embed(dag):
    require_family(dag, 3)
    sp = spine(dag)
    spine_set = set(sp)
    rest = [e for e in dag.edges if e not in spine_set]
    # every interior vertex has exactly one non-spine out-edge
    next_edge = {e.tail: e for e in rest if e.tail != 1}
    first = [e for e in rest if e.tail == 1]
    a_start = next(e for e in first if e.head == 2)
    b_start = next(e for e in first if e is not a_start)
    return PlanarEmbedding(sp, _follow(a_start, next_edge), _follow(b_start, next_edge))


def crossing_positions(dag):
    """Word positions k with a crossing between vertices k+1 and k+2.

    Non-spine edges are drawn as upper semicircles.  Arcs (p,q) and (r,s)
    with p<r<q<s meet once, at x = (rs - pq) / (r + s - p - q).
    """
    require_family(dag, 3)
    sp = set(spine(dag))
    arcs = [e.ends for e in dag.edges if e not in sp]
    found = set()
    for (p, q), (r, s) in itertools.combinations(arcs, 2):
        if r < p:
            (p, q), (r, s) = (r, s), (p, q)
        if p < r < q < s:
            x = Fraction(r * s - p * q, r + s - p - q)
            found.add(int(x) - 1)
    return found


@dataclass(frozen=True)
class RankOnePoset:
    n_lower: int
    n_upper: int
    relations: tuple

    def __post_init__(self):
        rel = tuple(tuple(r) for r in self.relations)
        object.__setattr__(self, "relations", rel)
        for x, y in rel:
            if not (0 <= x < self.n_lower and 0 <= y < self.n_upper):
                raise ValueError(f"relation {(x, y)} out of range")

    @property
    def size(self):
        return self.n_lower + self.n_upper

    def degree_lower(self, x):
        return sum(1 for r in self.relations if r[0] == x)

    def degree_upper(self, y):
        return sum(1 for r in self.relations if r[1] == y)

    def element(self, rank, idx):
        return idx if rank == 0 else self.n_lower + idx

    def order_pairs(self):
        """Cover relations (smaller, larger) on element ids 0..size-1, lower ids first."""
        return [(x, self.n_lower + y) for x, y in self.relations]

    def is_connected(self):
        parent = list(range(self.size))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for p, q in self.order_pairs():
            parent[find(p)] = find(q)
        return len({find(u) for u in range(self.size)}) == 1

    def is_noncrossing(self):
        for (i, j), (p, q) in itertools.combinations(self.relations, 2):
            if (i < p and q < j) or (p < i and j < q):
                return False
        return True

    def is_bnt(self):
        """Bipartite non-crossing tree: connected, size-1 relations, no interleaving."""
        return (self.n_lower >= 1 and self.n_upper >= 1
                and len(set(self.relations)) == len(self.relations) == self.size - 1
                and self.is_connected() and self.is_noncrossing())

    def is_realizable(self):
        return self.is_bnt() and self.degree_lower(0) == 1

    def dual(self):
        """Order-reversed poset; ranks swap, left-to-right order is kept."""
        return RankOnePoset(self.n_upper, self.n_lower, tuple((y, x) for x, y in self.relations))

    def steps(self):
        """Which rank gains a new element between consecutive relations ('x' or 'y')."""
        out = []
        for (x0, y0), (x1, y1) in zip(self.relations, self.relations[1:]):
            if x1 == x0 + 1 and y1 == y0:
                out.append("x")
            elif y1 == y0 + 1 and x1 == x0:
                out.append("y")
            else:
                raise ValueError("relations are not a left-to-right staircase")
        return out

    @classmethod
    def from_steps(cls, steps):
        x = y = 0
        rel = [(0, 0)]
        for s in steps:
            if s == "x":
                x += 1
            else:
                y += 1
            rel.append((x, y))
        return cls(x + 1, y + 1, tuple(rel))

    def __str__(self):
        return " ".join(f"x{x + 1}<y{y + 1}" for x, y in self.relations)


def truncated_dual(dag):
    emb = embed(dag)
    lower = sorted(emb.path_a, key=lambda e: e.tail)
    upper = sorted(emb.path_b, key=lambda e: e.tail)

    def face_over(faces, i):
        return next(k for k, e in enumerate(faces) if e.tail <= i < e.head)

    rel = tuple((face_over(lower, e.tail), face_over(upper, e.tail)) for e in emb.spine)
    return RankOnePoset(len(lower), len(upper), rel)


def dag_from_tree(tree):
    """Rebuild the member of F_(n,3) whose truncated dual is ``tree``."""
    if not tree.is_bnt():
        raise RealizabilityError("not a bipartite non-crossing tree")
    if tree.degree_lower(0) != 1:
        raise RealizabilityError("left-most rank-0 element must have degree 1")
    n = len(tree.relations)
    pairs = [(i, i + 1) for i in range(1, n + 1)]
    for rank, count in ((0, tree.n_lower), (1, tree.n_upper)):
        for idx in range(count):
            spans = [k + 1 for k, r in enumerate(tree.relations) if r[rank] == idx]
            pairs.append((min(spans), max(spans) + 1))
    dag = Dag(n + 1, pairs)
    require_family(dag, 3)
    return dag


def enumerate_bnt(vertex_count, max_vertices=16):
    """All bipartite non-crossing trees on ``vertex_count`` vertices.

    Exhaustive search over edge subsets of the complete bipartite graph,
    keeping those that are pairwise non-crossing and form a spanning tree.
    """
    if vertex_count < 2:
        return []
    if vertex_count > max_vertices:
        raise ResourceLimitError(f"{vertex_count} vertices exceeds guard {max_vertices}")
    found = []
    need = vertex_count - 1
    for l in range(1, vertex_count):
        r = vertex_count - l
        cand = [(x, y) for x in range(l) for y in range(r)]

        def rec(start, chosen):
            if len(chosen) == need:
                t = RankOnePoset(l, r, tuple(chosen))
                if t.is_connected():
                    found.append(t)
                return
            if len(chosen) + (len(cand) - start) < need:
                return
            for k in range(start, len(cand)):
                i, j = cand[k]
                if any((i < p and q < j) or (p < i and j < q) for p, q in chosen):
                    continue
                chosen.append((i, j))
                rec(k + 1, chosen)
                chosen.pop()

        rec(0, [])
    return found


def count_bnt(vertex_count):
    return len(enumerate_bnt(vertex_count))


def _linear_extensions_dp(size, pairs):
    preds = [0] * size
    for p, q in pairs:
        preds[q] |= 1 << p
    ways = {0: 1}
    for _ in range(size):
        nxt = {}
        for mask, w in ways.items():
            for v in range(size):
                bit = 1 << v
                if not mask & bit and preds[v] & mask == preds[v]:
                    nxt[mask | bit] = nxt.get(mask | bit, 0) + w
        ways = nxt
    return ways.get((1 << size) - 1, 0)


def _linear_extensions_brute(size, pairs):
    if size > MAX_ORACLE_ELEMENTS:
        raise ResourceLimitError(f"permutation oracle limited to {MAX_ORACLE_ELEMENTS} elements")
    total = 0
    for perm in itertools.permutations(range(size)):
        pos = [0] * size
        for k, v in enumerate(perm):
            pos[v] = k
        if all(pos[p] < pos[q] for p, q in pairs):
            total += 1
    return total


def linear_extensions(poset, method=DOWNSET_DP):
    """e(P), the number of linear extensions.

    ``downset_dp`` grows down-sets one element at a time;
    ``permutation_oracle`` checks every ordering.
    """
    pairs = poset.order_pairs()
    if method == DOWNSET_DP:
        return _linear_extensions_dp(poset.size, pairs)
    if method == PERMUTATION_ORACLE:
        return _linear_extensions_brute(poset.size, pairs)
    raise ValueError(f"unknown method {method!r}")


def tree_from_word(word):
    """Build T_b: a start edge, a path edge per 1, a terminal edge, a pendant per 0.

    The walk keeps a hub (the endpoint where the path currently ends).
    A 1 extends the path from the hub to a new element of the other rank,
    which becomes the hub; a 0 hangs a new element of the other rank off
    the hub.
    """
    word = BinaryWord.parse(word)
    counts = [1, 1]
    hub = (1, 0)  # (rank, index): start edge x_0 - y_0, hub y_0
    rel = [(0, 0)]

    def attach():
        rank = 1 - hub[0]
        new = (rank, counts[rank])
        counts[rank] += 1
        ends = {hub[0]: hub[1], rank: new[1]}
        rel.append((ends[0], ends[1]))
        return new

    for b in word.bits:
        new = attach()
        if b == 1:
            hub = new
    attach()
    return RankOnePoset(counts[0], counts[1], tuple(rel))


def _rightmost(tree):
    x, y = tree.relations[-1]
    if tree.degree_lower(x) == 1 and tree.degree_upper(y) != 1:
        return (0, x)
    return (1, y)


def spanning_path(tree):
    """Relation indices on the path from the left-most rank-0 element to the right-most element."""
    adj = {}
    for k, (x, y) in enumerate(tree.relations):
        adj.setdefault((0, x), []).append(((1, y), k))
        adj.setdefault((1, y), []).append(((0, x), k))
    start, goal = (0, 0), _rightmost(tree)
    back = {start: None}
    frontier = [start]
    while frontier:
        u = frontier.pop()
        for v, k in adj[u]:
            if v not in back:
                back[v] = (u, k)
                frontier.append(v)
    path = []
    node = goal
    while back[node] is not None:
        node, k = back[node]
        path.append(k)
    return sorted(path)


def word_from_tree(tree):
    if not tree.is_realizable():
        raise RealizabilityError("tree is not realizable (need a BNT with deg x_1 = 1)")
    on_path = set(spanning_path(tree))
    inner = range(1, len(tree.relations) - 1)
    return BinaryWord(tuple(1 if k in on_path else 0 for k in inner))


def flip(tree, edge):
    """Flip at relation ``edge`` (0-based, left to right), which must be off the path.

    The tree is cut after that relation; the right part is replaced by its
    poset dual and glued back so the relation joins the spanning path.
    With the tree written as a staircase of rank steps, dualizing the
    right part swaps every step after the cut.
    """
    if not tree.is_realizable():
        raise RealizabilityError("flip needs a realizable tree")
    if edge in spanning_path(tree) or not 0 <= edge < len(tree.relations):
        raise ValueError(f"relation {edge} is on the spanning path")
    steps = tree.steps()
    left, right = steps[:edge], steps[edge:]
    swapped = ["y" if s == "x" else "x" for s in right]
    return RankOnePoset.from_steps(left + swapped)


def flip_edge_for_position(l):
    """Relation index carrying word bit b_l."""
    return l


def verify_duality(n, max_n=None):
    if max_n is not None:
        check_family_n(n, max_n)
    check_family_n(n)
    report = Report(f"verify_duality n={n}")
    ext = {}
    for w in all_words(n):
        g = dag_from_word(w)
        vol = volume_f1(g, W_SPECIAL)
        dual = truncated_dual(g)
        e = linear_extensions(dual)
        ext[w] = e
        report.add(vol == e and dual == tree_from_word(w), kind="equality", word=str(w),
                   volume=vol, extensions=e)
    for w in all_words(n):
        for l in w.zeros:
            up = w.with_bit(l, 1)
            flipped = flip(tree_from_word(w), flip_edge_for_position(l))
            report.add(flipped == tree_from_word(up) and ext[up] <= ext[w], kind="flip",
                       word=str(w), flipped=str(up), extensions=ext[w], flipped_extensions=ext[up])
    return report
