"""Exhaustive sweeps of the structural lemmas over F_(n,3)."""
from .dag import CROSSED, NESTED, find_pairs, interchange, overpasses, spine, validate_family
from .duality import crossing_positions
from .errors import MissingSpineEdgeError
from .family import all_words, brute_force_family, check_family_n, dag_from_word, enumerate_family
from .flows import branch_count, build_flow_tree, inflow_bound_check, make_w
from .report import Report


def _has_forced_edges(dag):
    try:
        spine(dag)
    except MissingSpineEdgeError:
        return False
    n = dag.n
    return dag.multiplicity(1, 2) >= 2 and dag.multiplicity(n, n + 1) >= 2


def _tree_laws(dag):
    """Branch-count and inflow laws at every node of T_G(w_n)."""
    w = make_w(dag.n)
    out, _ = dag.degrees()
    branch_ok = inflow_ok = True
    for node in build_flow_tree(dag, w).nodes():
        f = node.flow
        v = f.cut + 1
        if v <= dag.n:
            expect = branch_count(out[v - 1], f.inflow(v), w[v - 1])
            special = 1 if v == 1 else 2 if v == 2 else f.inflow(v) + 2
            if node.branches != expect or expect != special:
                branch_ok = False
        for i in range(2, min(dag.n, f.cut + 1) + 1):
            if not inflow_bound_check(dag, f, i):
                inflow_ok = False
    return branch_ok, inflow_ok


def verify_structure(n, max_n=None, trees=True):
    """One report item per (lemma, word)."""
    if max_n is not None:
        check_family_n(n, max_n)
    check_family_n(n)
    report = Report(f"verify_structure n={n}")
    for w in all_words(n):
        g = dag_from_word(w)
        report.add(validate_family(g, 3), lemma="family", word=str(w))
        report.add(_has_forced_edges(g), lemma="spine", word=str(w))
        report.add(all(len(overpasses(g, i)) == 1 for i in range(2, n + 1)),
                   lemma="unique_overpass", word=str(w))
        report.add(all(p.vertices[2] == p.vertices[1] + 1 for p in find_pairs(g, CROSSED)),
                   lemma="consecutive_crossings", word=str(w))
        report.add(crossing_positions(g) == set(w.ones), lemma="crossings_are_ones", word=str(w))
        report.add(all(validate_family(interchange(g, p), 3) for p in find_pairs(g, NESTED)),
                   lemma="interchange_closure", word=str(w))
        if trees:
            branch_ok, inflow_ok = _tree_laws(g)
            report.add(branch_ok, lemma="branch_count", word=str(w))
            report.add(inflow_ok, lemma="inflow_law", word=str(w))
    return report


def verify_family_oracle(n):
    """Word construction against exhaustive stub matching."""
    report = Report(f"verify_family_oracle n={n}")
    built = enumerate_family(n)
    brute = brute_force_family(n, 3)
    report.add(len(set(built)) == len(built) == 2 ** (n - 2), check="distinct", count=len(built))
    report.add(set(built) == set(brute), check="oracle_equal", count=len(brute))
    return report
