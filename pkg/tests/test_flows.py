import random

import pytest
from hypothesis import given, settings, strategies as st

from flowvol import (FLOW_REVERSAL, FRONTIER_DP, LIDSKII_SIMPLE, LIDSKII_SUM, TREE, W_SPECIAL, Dag,
                     FrontierCounter, all_words, branch_count, build_flow_tree, children,
                     dag_from_word, flow_reversal_netflow, inflow_bound_check, kostant,
                     level_nodes, lidskii_simple_netflow, lidskii_volume, make_w, root_flow,
                     unit_netflow, volume_f1)
from flowvol.errors import CountOverflowError, LevelError, NetflowError, ResourceLimitError
from flowvol.flows import count_weak_compositions, weak_compositions

from oracles import K4_EDGES, brute_kostant, w_vector, word_edges


def test_netflow_vectors():
    assert make_w(4) == tuple(w_vector(4))
    assert unit_netflow(3) == (1, 0, 0, -1)
    g = dag_from_word("11")
    assert lidskii_simple_netflow(g) == (9 - 5 + 2 - 3, -1, -1, -1, 0)
    assert flow_reversal_netflow(g) == (0, 1, 1, 1, 5 - 9 - 2 + 3)
    assert sum(lidskii_simple_netflow(g)) == sum(flow_reversal_netflow(g)) == 0
    with pytest.raises(NetflowError):
        kostant(g, (1, 0, 0, 0))
    with pytest.raises(NetflowError):
        kostant(g, (1, 0, 0, 0, 0))


def test_weak_compositions():
    got = list(weak_compositions(2, 3))
    assert got == [(0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0)]
    assert count_weak_compositions(2, 3) == 6
    assert count_weak_compositions(-1, 3) == 0


def test_k4_baseline():
    expected = brute_kostant(4, K4_EDGES, (1, 1, 1, -3))
    assert expected == 7
    g = Dag(4, K4_EDGES)
    assert kostant(g, (1, 1, 1, -3), TREE) == 7
    assert kostant(g, (1, 1, 1, -3), FRONTIER_DP) == 7
    assert build_flow_tree(g, (1, 1, 1, -3)).leaf_count() == 7


@pytest.mark.parametrize("bits", ["00", "01", "10", "11"])
@pytest.mark.parametrize("formula", [W_SPECIAL, LIDSKII_SIMPLE, FLOW_REVERSAL, LIDSKII_SUM])
def test_n4_volumes(bits, formula):
    vc, edges = word_edges(bits)
    expected = brute_kostant(vc, edges, w_vector(4))
    assert expected == {"00": 24, "01": 18, "10": 18, "11": 16}[bits]
    assert volume_f1(dag_from_word(bits), formula) == expected


def test_n3_volumes():
    assert volume_f1(dag_from_word("0")) == 6
    assert volume_f1(dag_from_word("1")) == 5


def test_lidskii_small():
    g = Dag(3, [(1, 2), (1, 2), (2, 3), (2, 3)])
    assert lidskii_volume(g, (1, 0, -1)) == 2
    assert kostant(g, (1, 0, -1)) == brute_kostant(3, g.pairs(), (1, 0, -1)) == 4


def test_known_sequences():
    # all-zeros word gives n!, all-ones gives the Euler zigzag numbers
    zigzag = {3: 5, 4: 16, 5: 61, 6: 272, 7: 1385}
    for n in range(3, 8):
        assert volume_f1(dag_from_word("0" * (n - 2))) == [1, 1, 2, 6, 24, 120, 720, 5040][n]
        assert volume_f1(dag_from_word("1" * (n - 2))) == zigzag[n]


def _random_dag(rng, vc, m):
    return Dag(vc, [tuple(sorted(rng.sample(range(1, vc + 1), 2))) for _ in range(m)])


def _random_feasible(rng, dag, top=2):
    net = [0] * dag.vertex_count
    for e in dag.edges:
        x = rng.randint(0, top)
        net[e.tail - 1] += x
        net[e.head - 1] -= x
    return tuple(net)


def test_methods_agree_on_random_dags():
    rng = random.Random(20240611)
    for _ in range(100):
        vc = rng.randint(2, 5)
        g = _random_dag(rng, vc, rng.randint(1, 6))
        a = _random_feasible(rng, g)
        tree = kostant(g, a, TREE)
        assert tree == kostant(g, a, FRONTIER_DP)
        assert tree == brute_kostant(vc, g.pairs(), a)
        assert tree >= 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 6), st.integers(1, 9))
def test_methods_agree_property(seed, vc, m):
    rng = random.Random(seed)
    g = _random_dag(rng, vc, m)
    a = _random_feasible(rng, g)
    assert kostant(g, a, TREE) == kostant(g, a, FRONTIER_DP)


@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 7), st.integers(0, 10))
def test_zero_netflow_has_one_flow(seed, vc, m):
    rng = random.Random(seed)
    g = _random_dag(rng, vc, m)
    assert kostant(g, (0,) * vc) == 1


def test_infeasible_netflow_counts_zero():
    g = dag_from_word("11")
    assert kostant(g, (-1, 0, 0, 0, 1)) == 0
    assert kostant(g, (-1, 0, 0, 0, 1), TREE) == 0


def test_flow_tree_micro_values():
    g = dag_from_word("11")
    level4 = level_nodes(g, make_w(4), 3)
    assert len(level4) == 5
    tree = build_flow_tree(g, make_w(4))
    assert len(tree.level(4)) == 5
    assert tree.leaf_count() == 16 == len(tree.leaves())
    assert tree.node_at(()).flow == root_flow(g)


def test_leaf_sums_decompose_per_level():
    for w in all_words(5):
        g = dag_from_word(w)
        a = make_w(5)
        counter = FrontierCounter(g, a)
        tree = build_flow_tree(g, a)
        total = counter.total()
        for level in range(1, g.n + 2):
            nodes = tree.level(level)
            assert sum(n.leaf_count() for n in nodes) == total
            assert sum(counter.completions(n.flow) for n in nodes) == total


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_branch_counts_on_every_node(n):
    for w in all_words(n):
        g = dag_from_word(w)
        a = make_w(n)
        out, _ = g.degrees()
        for node in build_flow_tree(g, a).nodes():
            f = node.flow
            v = f.cut + 1
            if v > n:
                assert node.branches == 0
                continue
            t = f.inflow(v)
            assert node.branches == branch_count(out[v - 1], t, a[v - 1])
            assert node.branches == (1 if v == 1 else 2 if v == 2 else t + 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_inflow_law(n):
    for w in all_words(n):
        g = dag_from_word(w)
        for node in build_flow_tree(g, make_w(n)).nodes():
            for i in range(2, min(n, node.flow.cut + 1) + 1):
                assert inflow_bound_check(g, node.flow, i)


def test_inflow_examples_on_bad_node():
    g = dag_from_word("11")
    bad = level_nodes(g, make_w(4), 3)[1]
    assert bad.value((2, 4, 0)) == 1 and bad.value((3, 5, 0)) == 0
    # vertex 3 sits under (2,4) carrying 1; vertex 4 under (3,5) carrying 0
    assert bad.inflow(3) == 3 - 2 - 1 == 0
    assert bad.inflow(4) == 4 - 2 - 0 == 2
    assert inflow_bound_check(g, bad, 3) and inflow_bound_check(g, bad, 4)
    with pytest.raises(LevelError):
        inflow_bound_check(g, bad.restrict(1), 4)


def test_children_of_root():
    g = dag_from_word("11")
    kids = children(root_flow(g), make_w(4))
    assert len(kids) == 1 and kids[0].values == (0, 0, 0)


def test_resource_guards(monkeypatch):
    g = dag_from_word("0000")
    with pytest.raises(ResourceLimitError):
        build_flow_tree(g, make_w(6), max_nodes=10)
    with pytest.raises(ResourceLimitError):
        kostant(g, make_w(6), TREE, max_nodes=10)
    monkeypatch.setenv("FLOWVOL_MAX_NODES", "10")
    with pytest.raises(ResourceLimitError):
        build_flow_tree(g, make_w(6))


def test_overflow_check():
    g = dag_from_word("0" * 20)  # volume 22! > 2^64
    with pytest.raises(CountOverflowError):
        volume_f1(g, W_SPECIAL)
    big = volume_f1(g, W_SPECIAL, bigint=True)
    assert big == 1124000727777607680000
