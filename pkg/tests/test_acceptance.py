"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""
import random
import sys
import time

import pytest

from flowvol import (FLOW_REVERSAL, FRONTIER_DP, LIDSKII_SIMPLE, LIDSKII_SUM,
                     TREE, W_SPECIAL, BAD, Dag, InterchangeContext, all_words, brute_force_family,
                     classify, count_bnt, dag_from_word, enumerate_bnt, enumerate_family, flip,
                     flip_edge_for_position, hasse_lattice, kostant, leaf_identities,
                     linear_extensions, lidskii_volume, proof_sweep, tree_from_word,
                     truncated_dual, unit_netflow, verify_duality, verify_order_reversal,
                     verify_structure, volume_f1, word_from_tree)
from flowvol.dag import Edge

from oracles import K4_EDGES, N4_DUALS, brute_kostant, brute_linear_extensions, w_vector, word_edges


def criterion_1():
    for n in range(3, 13):
        fam = enumerate_family(n)
        if not len(fam) == len(set(fam)) == 2 ** (n - 2):
            return False, f"n={n}: {len(set(fam))} distinct"
    for n in range(3, 7):
        if set(enumerate_family(n)) != set(brute_force_family(n, 3)):
            return False, f"n={n}: differs from stub matching"
    return True, "2^(n-2) members for n=3..12; equal to stub matching for n<=6"


def criterion_2():
    oracle = brute_kostant(4, K4_EDGES, (1, 1, 1, -3))
    g = Dag(4, K4_EDGES)
    tree = kostant(g, (1, 1, 1, -3), TREE)
    dp = kostant(g, (1, 1, 1, -3), FRONTIER_DP)
    return oracle == tree == dp == 7, f"oracle={oracle} tree={tree} dp={dp}"


def criterion_3():
    expected = {"00": 24, "01": 18, "10": 18, "11": 16}
    rows = []
    ok = True
    for bits, want in expected.items():
        vc, edges = word_edges(bits)
        flows = brute_kostant(vc, edges, w_vector(4))
        ext = brute_linear_extensions(5, N4_DUALS[bits])
        vol = volume_f1(dag_from_word(bits))
        ok &= flows == ext == vol == want
        rows.append(f"{bits}:{vol}/{flows}/{ext}")
    return ok, "volume/flow-oracle/extension-oracle " + " ".join(rows)


def criterion_4():
    start = time.perf_counter()
    covers = 0
    for n in range(3, 11):
        r = verify_order_reversal(n)
        if r.summary["total"] != 2 ** (n - 3) * (n - 2):
            return False, f"n={n}: {r.summary['total']} covers"
        if not r.ok:
            return False, f"n={n}: {r.summary['failed']} violations"
        covers += r.summary["total"]
    elapsed = time.perf_counter() - start
    return elapsed < 60, f"{covers} covers for n=3..10, 0 violations, {elapsed:.1f}s"


def criterion_5():
    cover = [c for c in hasse_lattice(4).covers
             if str(c.lower) == "10" and str(c.upper) == "11"][0]
    ctx = InterchangeContext.from_cover(cover)
    top = ctx.level_nodes(ctx.upper, 4)
    bad = [f for f in top if classify(ctx, f) == BAD]
    if len(top) != 5 or len(bad) != 1:
        return False, f"{len(top)} level-4 nodes, {len(bad)} bad"
    f = bad[0]
    vals = (f.value(Edge(2, 4)), f.value(Edge(3, 5)))
    ids = leaf_identities(ctx, f)
    counts = (ids.bad, ids.partner, ids.image, ids.partner_image)
    ok = vals == (1, 0) and counts == (4, 3, 3, 4) and ids.holds
    return ok, f"5 nodes, 1 bad, f(2,4),f(3,5)={vals}, leaves l(f'),l(psi),l(phi),l(phi psi)={counts}"


def criterion_6():
    total = 0
    for n in range(3, 7):
        r = proof_sweep(n)
        for it in r.items:
            needed = ("phi_bijective", "psi_injective", "psi_lands_good", "key_lemma",
                      "good_dominated")
            if not all(it[k] for k in needed):
                return False, f"n={n} cover {it['lower']}->{it['upper']} fails"
        total += r.summary["total"]
        if not r.ok:
            return False, f"n={n}: {r.summary['failed']} covers fail"
    return True, f"{total} covers audited for n=3..6, 0 violations"


def criterion_7():
    count = 0
    for n in range(3, 9):
        for w in all_words(n):
            g = dag_from_word(w)
            if volume_f1(g) != linear_extensions(truncated_dual(g)):
                return False, f"mismatch at {w}"
            count += 1
    return True, f"{count} members for n=3..8"


def _random_case(rng):
    vc = rng.randint(2, 6)
    g = Dag(vc, [tuple(sorted(rng.sample(range(1, vc + 1), 2))) for _ in range(rng.randint(1, 9))])
    net = [0] * vc
    for e in g.edges:
        x = rng.randint(0, 2)
        net[e.tail - 1] += x
        net[e.head - 1] -= x
    return g, tuple(net)


def criterion_8():
    members = 0
    for n in range(3, 8):
        for w in all_words(n):
            g = dag_from_word(w)
            vals = {volume_f1(g, f, m) for f in (W_SPECIAL, LIDSKII_SIMPLE, FLOW_REVERSAL)
                    for m in (TREE, FRONTIER_DP)}
            vals.add(lidskii_volume(g, unit_netflow(n)))
            vals.add(volume_f1(g, LIDSKII_SUM))
            if len(vals) != 1:
                return False, f"{w}: {sorted(vals)}"
            members += 1
    rng = random.Random(7)
    for k in range(100):
        g, a = _random_case(rng)
        if kostant(g, a, TREE) != kostant(g, a, FRONTIER_DP):
            return False, f"random case {k}: {g} {a}"
    return True, f"{members} members agree (3 Kostant formulas x tree and DP, plus the Lidskii sum); 100 random DAGs agree"


def criterion_9():
    for n in range(2, 11):
        bnt = count_bnt(n)
        real = sum(1 for t in enumerate_bnt(n + 1) if t.is_realizable())
        if not bnt == real == 2 ** (n - 2):
            return False, f"n={n}: count_bnt={bnt} realizable={real}"
    return True, "count_bnt(n) = realizable(n+1) = 2^(n-2) for n=2..10"


def criterion_10():
    squares = 0
    for n in range(3, 11):
        for w in all_words(n):
            t = tree_from_word(w)
            for l in w.zeros:
                if word_from_tree(flip(t, flip_edge_for_position(l))) != w.with_bit(l, 1):
                    return False, f"square fails at {w}, position {l}"
                squares += 1
    flips = 0
    for n in range(3, 9):
        r = verify_duality(n)
        items = [it for it in r.items if it["kind"] == "flip"]
        if any(it["status"] != "pass" for it in items):
            return False, f"n={n}: flip inequality fails"
        flips += len(items)
    return True, f"{squares} commuting squares (length<=8), {flips} flips with e(T')<=e(T) (n<=8)"


def criterion_11():
    total = 0
    for n in range(3, 7):
        r = verify_structure(n)
        total += r.summary["total"]
        if not r.ok:
            bad = sorted({(it["lemma"], it["word"]) for it in r.failures()})
            return False, f"n={n}: {bad[:3]}"
    return True, f"{total} lemma checks for n=3..6 (spine, overpass, inflow, branch count, crossings)"


CRITERIA = [
    (1, "family count", criterion_1),
    (2, "Kostant baseline K_4", criterion_2),
    (3, "n=4 volumes", criterion_3),
    (4, "volume order reversal on every cover", criterion_4),
    (5, "bad-node micro-values", criterion_5),
    (6, "proof machinery sweep", criterion_6),
    (7, "volume = linear extensions", criterion_7),
    (8, "formula cross-agreement", criterion_8),
    (9, "non-crossing tree counts", criterion_9),
    (10, "flip calculus", criterion_10),
    (11, "structural lemmas", criterion_11),
]


def _line(num, name, ok, detail):
    return f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("num,name,check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(num, name, ok, detail))
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
