"""Kostant partition functions, flow decomposition trees and volume formulas.

Netflow vectors are plain integer tuples ``(a_1, ..., a_{n+1})`` summing to
zero, where ``a_v`` is outflow minus inflow at ``v``.  Partial flows on
``L_i`` (edges with tail <= i) are stored against the canonical edge
order; because edges are sorted by tail, ``L_i`` is always a prefix of
``dag.edges``.

All counts are exact Python integers, checked against the unsigned 64-bit
range unless ``bigint=True`` is passed.
"""
from dataclasses import dataclass, field
from math import comb, factorial

from .dag import Dag, require_family, unique_overpass
from .errors import (LevelError, NetflowError, ResourceLimitError, FamilyError, checked,
                     max_tree_nodes)

TREE = "tree"
FRONTIER_DP = "frontier_dp"

W_SPECIAL = "w_special"
LIDSKII_SIMPLE = "lidskii_simple"
FLOW_REVERSAL = "flow_reversal"
LIDSKII_SUM = "lidskii_sum"


def make_w(n):
    """The netflow (0, 1, ..., 1, -(n-1)) of length n+1."""
    if n < 2:
        raise NetflowError("w_n needs n >= 2")
    return (0,) + (1,) * (n - 1) + (-(n - 1),)


def unit_netflow(n):
    return (1,) + (0,) * (n - 1) + (-1,)


def check_netflow(dag, a):
    a = tuple(int(x) for x in a)
    if len(a) != dag.vertex_count:
        raise NetflowError(f"netflow has {len(a)} entries, DAG has {dag.vertex_count} vertices")
    if sum(a) != 0:
        raise NetflowError(f"netflow {a} does not sum to zero")
    return a


def weak_compositions(total, parts):
    """Tuples of ``parts`` nonnegative integers summing to ``total``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def count_weak_compositions(total, parts):
    if total < 0:
        return 0
    if parts == 0:
        return 1 if total == 0 else 0
    return comb(total + parts - 1, parts - 1)


@dataclass(frozen=True)
class PartialFlow:
    """Values on L_cut, valid on vertices 1..cut.  Sits at tree level cut+1."""
    dag: Dag
    cut: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.dag.prefix_length(self.cut):
            raise LevelError(f"{len(self.values)} values for L_{self.cut}")

    @property
    def level(self):
        return self.cut + 1

    @property
    def edges(self):
        return self.dag.edges[:len(self.values)]

    def as_dict(self):
        return dict(zip(self.edges, self.values))

    def value(self, edge):
        idx = self.dag.edges.index(edge)
        if idx >= len(self.values):
            raise LevelError(f"edge {edge} is not assigned at cut {self.cut}")
        return self.values[idx]

    def inflow(self, v):
        return sum(x for e, x in zip(self.edges, self.values) if e.head == v)

    def outflow(self, v):
        return sum(x for e, x in zip(self.edges, self.values) if e.tail == v)

    def is_valid(self, a):
        if any(x < 0 for x in self.values):
            return False
        return all(self.outflow(v) - self.inflow(v) == a[v - 1] for v in range(1, self.cut + 1))

    def restrict(self, cut):
        return PartialFlow(self.dag, cut, self.values[:self.dag.prefix_length(cut)])

    def __str__(self):
        return "{" + ", ".join(f"{e}:{x}" for e, x in zip(self.edges, self.values)) + "}"


def root_flow(dag):
    return PartialFlow(dag, 0, ())


def children(flow, a):
    """Extensions of ``flow`` to L_{cut+1}, in lexicographic order of the new values."""
    dag = flow.dag
    v = flow.cut + 1
    if v > dag.n:
        return []
    out = flow.inflow(v) + a[v - 1]
    k = len(dag.out_edges(v))
    if out < 0:
        return []
    return [PartialFlow(dag, v, flow.values + comp) for comp in weak_compositions(out, k)]


def branch_count(outflow_degree, t, a_i):
    """Children of a level-i node with t units entering vertex i: C(t+a_i+outd-1, outd-1)."""
    return count_weak_compositions(t + a_i, outflow_degree)


def level_nodes(dag, a, cut, max_nodes=None):
    """All partial flows on L_cut valid on [cut], in tree order."""
    a = check_netflow(dag, a)
    if not 0 <= cut <= dag.n:
        raise LevelError(f"cut {cut} out of range 0..{dag.n}")
    limit = max_tree_nodes(max_nodes)
    layer = [root_flow(dag)]
    seen = 1
    for _ in range(cut):
        layer = [c for f in layer for c in children(f, a)]
        seen += len(layer)
        if seen > limit:
            raise ResourceLimitError(f"more than {limit} tree nodes")
    return layer


@dataclass
class TreeNode:
    flow: PartialFlow
    address: tuple
    children: list = field(default_factory=list)
    _leaves: int = None

    @property
    def level(self):
        return self.flow.level

    @property
    def branches(self):
        return len(self.children)

    def leaf_count(self):
        if self._leaves is None:
            if self.flow.cut == self.flow.dag.n:
                self._leaves = 1
            else:
                self._leaves = sum(c.leaf_count() for c in self.children)
        return self._leaves

    def walk(self):
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass
class FlowTree:
    dag: Dag
    netflow: tuple
    root: TreeNode

    def leaf_count(self):
        return self.root.leaf_count()

    def nodes(self):
        return self.root.walk()

    def level(self, level):
        return [node for node in self.nodes() if node.level == level]

    def leaves(self):
        return self.level(self.dag.n + 1)

    def node_at(self, address):
        node = self.root
        for k in address:
            node = node.children[k]
        return node

    def __len__(self):
        return sum(1 for _ in self.nodes())


def build_flow_tree(dag, a, max_nodes=None):
    """Materialize T_G(a).  Dead branches (negative required outflow) are simply absent."""
    a = check_netflow(dag, a)
    limit = max_tree_nodes(max_nodes)
    root = TreeNode(root_flow(dag), ())
    count = 1
    stack = [root]
    while stack:
        node = stack.pop()
        for k, child in enumerate(children(node.flow, a)):
            count += 1
            if count > limit:
                raise ResourceLimitError(f"flow tree exceeds {limit} nodes")
            c = TreeNode(child, node.address + (k,))
            node.children.append(c)
            stack.append(c)
    return FlowTree(dag, a, root)


def _count_tree_walk(dag, a, max_nodes=None):
    limit = max_tree_nodes(max_nodes)
    leaves = 0
    visited = 0
    stack = [root_flow(dag)]
    while stack:
        f = stack.pop()
        visited += 1
        if visited > limit:
            raise ResourceLimitError(f"tree walk exceeds {limit} nodes")
        if f.cut == dag.n:
            leaves += 1
        else:
            stack.extend(children(f, a))
    return leaves


class FrontierCounter:
    """Memoized completion counts over vertex cuts.

    The state after cut i is the total flow already committed into each
    later vertex.  Two partial flows with the same state have the same set
    of completions, so counts are shared between them.  The memo table
    lives on the instance and is discarded with it.
    """

    def __init__(self, dag, a, bigint=False):
        self.dag = dag
        self.a = check_netflow(dag, a)
        self.bigint = bigint
        n1 = dag.vertex_count
        # per vertex: distinct heads of out-edges and parallel multiplicities
        self._out = {}
        for v in range(1, n1 + 1):
            heads = {}
            for e in dag.out_edges(v):
                heads[e.head] = heads.get(e.head, 0) + 1
            self._out[v] = sorted(heads.items())
        self.memo = {}

    def state_of(self, flow):
        base = flow.cut + 1
        state = [0] * (self.dag.vertex_count - flow.cut)
        for e, x in zip(flow.edges, flow.values):
            if e.head >= base:
                state[e.head - base] += x
        return tuple(state)

    def completions(self, flow):
        """Number of leaves below the node ``flow`` in T_G(a)."""
        if flow.dag != self.dag:
            raise ValueError("partial flow belongs to a different DAG")
        return self._count(flow.cut, self.state_of(flow))

    def total(self):
        return self._count(0, (0,) * self.dag.vertex_count)

    def _count(self, cut, state):
        key = (cut, state)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        n = self.dag.n
        if cut == n:
            result = 1
        else:
            v = cut + 1
            out = state[0] + self.a[v - 1]
            rest = state[1:]
            result = 0
            if out >= 0:
                groups = self._out[v]
                for comp in weak_compositions(out, len(groups)):
                    ways = 1
                    nxt = list(rest)
                    for (head, mult), x in zip(groups, comp):
                        ways *= comb(x + mult - 1, mult - 1)
                        nxt[head - v - 1] += x
                    result += ways * self._count(v, tuple(nxt))
        result = checked(result, self.bigint)
        self.memo[key] = result
        return result


def kostant(dag, a, method=FRONTIER_DP, bigint=False, max_nodes=None):
    """K_G(a): the number of nonnegative integer flows on ``dag`` with netflow ``a``."""
    a = check_netflow(dag, a)
    if method == FRONTIER_DP:
        return FrontierCounter(dag, a, bigint).total()
    if method == TREE:
        return checked(_count_tree_walk(dag, a, max_nodes), bigint)
    raise ValueError(f"unknown method {method!r}")


def count_completions(flow, a, bigint=False):
    return FrontierCounter(flow.dag, a, bigint).completions(flow)


def require_source_sink(dag):
    out, inn = dag.degrees()
    for v in range(2, dag.vertex_count):
        if inn[v - 1] == 0 or out[v - 1] == 0:
            raise FamilyError(f"vertex {v} is a source or sink; need unique source 1 and sink n+1")
    if dag.vertex_count > 1 and (out[0] == 0 or inn[-1] == 0):
        raise FamilyError("vertex 1 must emit and vertex n+1 must absorb flow")


def lidskii_simple_netflow(dag):
    out, _ = dag.degrees()
    e, v = len(dag.edges), dag.vertex_count
    return (e - v + 2 - out[0],) + tuple(1 - d for d in out[1:-1]) + (0,)


def flow_reversal_netflow(dag):
    _, inn = dag.degrees()
    e, v = len(dag.edges), dag.vertex_count
    return (0,) + tuple(d - 1 for d in inn[1:-1]) + (v - e - 2 + inn[-1],)


def volume_f1(dag, formula=LIDSKII_SIMPLE, method=FRONTIER_DP, bigint=False):
    """Normalized volume of the unit flow polytope F_1(G)."""
    require_source_sink(dag)
    if formula == W_SPECIAL:
        require_family(dag, 3)
        a = make_w(dag.n)
    elif formula == LIDSKII_SIMPLE:
        a = lidskii_simple_netflow(dag)
    elif formula == FLOW_REVERSAL:
        a = flow_reversal_netflow(dag)
    elif formula == LIDSKII_SUM:
        return lidskii_volume(dag, unit_netflow(dag.n), bigint=bigint)
    else:
        raise ValueError(f"unknown formula {formula!r}")
    return kostant(dag, a, method=method, bigint=bigint)


def _multinomial(total, parts):
    if any(p < 0 for p in parts) or sum(parts) != total:
        return 0
    result = factorial(total)
    for p in parts:
        result //= factorial(p)
    return result


def _dominating_compositions(total, floor):
    """Weak compositions m of ``total`` whose prefix sums dominate those of ``floor``."""
    n = len(floor)
    floor_prefix = [0] * (n + 1)
    for i, x in enumerate(floor):
        floor_prefix[i + 1] = floor_prefix[i] + x

    def rec(i, prefix, acc):
        if i == n - 1:
            last = total - prefix
            if last >= 0 and prefix + last >= floor_prefix[n]:
                yield acc + (last,)
            return
        for m in range(total - prefix + 1):
            if prefix + m >= floor_prefix[i + 1]:
                yield from rec(i + 1, prefix + m, acc + (m,))

    yield from rec(0, 0, ())


def lidskii_volume(dag, a, bigint=False, max_terms=10**6):
    """Normalized volume of F_G(a) via the Lidskii sum over dominating compositions."""
    a = check_netflow(dag, a)
    n = dag.n
    if any(x < 0 for x in a[:n]):
        raise NetflowError("Lidskii evaluation needs a_1..a_n >= 0")
    out, _ = dag.degrees()
    outd = out[:n]
    e_count = len(dag.edges)
    top = e_count - dag.vertex_count + 1
    total = 0
    terms = 0
    counter = None
    for m in _dominating_compositions(e_count, outd):
        terms += 1
        if terms > max_terms:
            raise ResourceLimitError(f"Lidskii sum exceeds {max_terms} terms")
        if any(x == 0 for x in m):
            continue
        weight = 1
        for ai, mi in zip(a, m):
            weight *= ai ** (mi - 1)
        if weight == 0:
            continue
        coeff = _multinomial(top, [x - 1 for x in m])
        if coeff == 0:
            continue
        target = tuple(mi - di for mi, di in zip(m, outd)) + (0,)
        if counter is None or counter.a != target:
            counter = FrontierCounter(dag, target, bigint=True)
        total += coeff * weight * counter.total()
        checked(total, bigint)
    return total


def inflow_bound_check(dag, flow, i):
    """Check inflow(i) = i-2 - f(overpass of i) and inflow(i) <= i-2 under w_n."""
    require_family(dag, 3)
    if flow.dag != dag:
        raise ValueError("partial flow belongs to a different DAG")
    if flow.cut < i - 1:
        raise LevelError(f"flow must be assigned on L_{i - 1}")
    over = unique_overpass(dag, i)
    t = flow.inflow(i)
    return t == i - 2 - flow.value(over) and t <= i - 2
