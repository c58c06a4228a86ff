"""Command-line interface: ``flowvol <command> ...``.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage,
parse, family, guard or overflow errors.
"""
import argparse
import json
import sys

from . import checks, export
from .duality import (DOWNSET_DP, PERMUTATION_ORACLE, linear_extensions, truncated_dual,
                      verify_duality)
from .errors import FlowvolError, max_tree_nodes
from .family import BinaryWord, check_family_n, dag_from_word, hasse_lattice, word_from_dag
from .flows import (FLOW_REVERSAL, FRONTIER_DP, LIDSKII_SIMPLE, LIDSKII_SUM, TREE, W_SPECIAL,
                    build_flow_tree, kostant, make_w, volume_f1)
from .proof import proof_sweep, verify_order_reversal
from .report import Report

FORMULAS = {"w": W_SPECIAL, "lidskii": LIDSKII_SIMPLE, "reversal": FLOW_REVERSAL, "sum": LIDSKII_SUM}
METHODS = {"tree": TREE, "dp": FRONTIER_DP}
DEFAULT_MAX_N = 12


class UsageError(Exception):
    pass


def _netflow(text):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"netflow must be comma-separated integers: {text!r}")
    if sum(values) != 0:
        raise argparse.ArgumentTypeError(f"netflow must sum to 0, got {sum(values)}")
    return values


def _load_input(args):
    """Resolve --bits/--dag/-n into (dag, word or None)."""
    if getattr(args, "dag", None):
        with open(args.dag, encoding="utf-8") as fh:
            dag = export.dag_from_document(json.load(fh))
        if args.n is not None and args.n != dag.n:
            raise UsageError(f"-n {args.n} does not match document n={dag.n}")
        try:
            word = word_from_dag(dag)
        except FlowvolError:
            word = None
        return dag, word
    if args.bits is None:
        raise UsageError("give --bits WORD or --dag PATH")
    try:
        word = BinaryWord.parse(args.bits)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.n is not None and args.n != word.n:
        raise UsageError(f"word of length {len(word)} belongs to n={word.n}, not n={args.n}")
    return dag_from_word(word), word


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, report):
    fmt = getattr(args, "format", None) or "table"
    _emit(args, report.to_json() if fmt == "json" else report.to_table())
    return 0 if report.ok else 1


def cmd_volume(args):
    dag, word = _load_input(args)
    vol = volume_f1(dag, FORMULAS[args.formula], METHODS[args.method], bigint=args.bigint)
    if args.format == "json":
        report = Report("volume")
        report.add(True, word=str(word) if word else None, formula=args.formula, volume=vol)
        return _emit_report(args, report)
    _emit(args, f"{vol}\n")
    return 0


def cmd_kostant(args):
    dag, word = _load_input(args)
    a = args.netflow if args.netflow is not None else make_w(dag.n)
    k = kostant(dag, a, METHODS[args.method], bigint=args.bigint,
                max_nodes=max_tree_nodes(args.max_nodes))
    if args.format == "json":
        report = Report("kostant")
        report.add(True, word=str(word) if word else None, netflow=list(a), count=k)
        return _emit_report(args, report)
    _emit(args, f"{k}\n")
    return 0


def _check_n(args):
    if args.n is None:
        raise UsageError("-n is required")
    if args.n < 3:
        raise UsageError(f"n must be at least 3, got {args.n}")
    check_family_n(args.n, args.max_n)


def cmd_lattice(args):
    _check_n(args)
    n = args.n
    lattice = hasse_lattice(n, args.max_n)
    volumes = {w: volume_f1(dag_from_word(w), W_SPECIAL, METHODS[args.method]) for w in lattice.nodes}
    if args.format == "dot":
        _emit(args, export.lattice_to_dot(lattice, volumes))
        reports = []
    else:
        reports = [_lattice_report(lattice, volumes)]
    for check in args.check or ():
        if check == "volumes":
            reports.append(verify_order_reversal(n, args.max_n))
        elif check == "duality":
            reports.append(verify_duality(n, args.max_n))
        elif check == "proof":
            reports.append(proof_sweep(n, args.max_n))
    ok = all(r.ok for r in reports)
    if args.format == "dot":
        for r in reports:
            s = r.summary
            sys.stderr.write(f"# {r.command}: {s['passed']}/{s['total']} passed\n")
    elif args.format == "json":
        _emit(args, json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n")
    else:
        _emit(args, "\n".join(r.to_table() for r in reports))
    return 0 if ok else 1


def _lattice_report(lattice, volumes):
    report = Report(f"lattice n={lattice.n}")
    ups = {w: 0 for w in lattice.nodes}
    for c in lattice.covers:
        ups[c.lower] += 1
    for w in lattice.nodes:
        report.add(True, word=str(w), volume=volumes[w], up_covers=ups[w])
    return report


def cmd_dual(args):
    dag, word = _load_input(args)
    tree = truncated_dual(dag)
    if args.format == "dot":
        _emit(args, export.poset_to_dot(tree))
    elif args.format == "json":
        _emit(args, export.to_json(export.poset_to_document(tree)))
    else:
        _emit(args, f"{tree}\n")
    return 0


def cmd_extensions(args):
    dag, word = _load_input(args)
    method = PERMUTATION_ORACLE if args.method == "oracle" else DOWNSET_DP
    e = linear_extensions(truncated_dual(dag), method)
    if args.format == "json":
        report = Report("extensions")
        report.add(True, word=str(word) if word else None, extensions=e)
        return _emit_report(args, report)
    _emit(args, f"{e}\n")
    return 0


def cmd_export(args):
    fmt = args.format or "json"
    if fmt == "table":
        raise UsageError("export writes dot or json")
    if args.what == "lattice":
        _check_n(args)
        lattice = hasse_lattice(args.n, args.max_n)
        text = (export.lattice_to_dot(lattice) if fmt == "dot"
                else export.to_json(export.lattice_to_document(lattice)))
        _emit(args, text)
        return 0
    dag, word = _load_input(args)
    if args.what == "dag":
        text = export.dag_to_dot(dag) if fmt == "dot" else export.dag_to_json(dag, word)
    elif args.what == "dual":
        tree = truncated_dual(dag)
        text = (export.poset_to_dot(tree) if fmt == "dot"
                else export.to_json(export.poset_to_document(tree)))
    else:
        a = args.netflow if args.netflow is not None else make_w(dag.n)
        tree = build_flow_tree(dag, a, max_tree_nodes(args.max_nodes))
        text = (export.flowtree_to_dot(tree) if fmt == "dot"
                else export.to_json(export.flowtree_to_document(tree)))
    _emit(args, text)
    return 0


def cmd_verify(args):
    _check_n(args)
    report = checks.verify_structure(args.n, args.max_n)
    if args.n <= 6:
        oracle = checks.verify_family_oracle(args.n)
        for item in oracle.items:
            report.items.append(dict(item, lemma="family_oracle"))
    return _emit_report(args, report)


def build_parser():
    p = argparse.ArgumentParser(prog="flowvol", description="Flow polytope volumes on F_(n,3).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, source=True, formats=("table", "json")):
        if source:
            sp.add_argument("--bits", help="binary word b_1..b_(n-2)")
            sp.add_argument("--dag", metavar="PATH", help="DagDocument JSON file")
        sp.add_argument("-n", type=int)
        sp.add_argument("--format", choices=formats)
        sp.add_argument("--out", metavar="PATH")
        sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
        sp.add_argument("--max-nodes", type=int, default=None)
        return sp

    sp = common(sub.add_parser("volume", help="normalized volume of F_1(G)"))
    sp.add_argument("--formula", choices=sorted(FORMULAS), default="w")
    sp.add_argument("--method", choices=sorted(METHODS), default="dp")
    sp.add_argument("--bigint", action="store_true", help="allow counts beyond 64 bits")
    sp.set_defaults(func=cmd_volume)

    sp = common(sub.add_parser("kostant", help="Kostant partition function K_G(a)"))
    sp.add_argument("--netflow", type=_netflow, help="a1,a2,...; defaults to w_n")
    sp.add_argument("--method", choices=sorted(METHODS), default="dp")
    sp.add_argument("--bigint", action="store_true")
    sp.set_defaults(func=cmd_kostant)

    sp = common(sub.add_parser("lattice", help="Boolean lattice of F_(n,3) with volumes"),
                source=False, formats=("table", "json", "dot"))
    sp.add_argument("--check", action="append", choices=["volumes", "duality", "proof"])
    sp.add_argument("--method", choices=sorted(METHODS), default="dp")
    sp.set_defaults(func=cmd_lattice)

    sp = common(sub.add_parser("dual", help="truncated dual poset"),
                formats=("table", "json", "dot"))
    sp.set_defaults(func=cmd_dual)

    sp = common(sub.add_parser("extensions", help="linear extensions of the dual"))
    sp.add_argument("--method", choices=["dp", "oracle"], default="dp")
    sp.set_defaults(func=cmd_extensions)

    sp = common(sub.add_parser("export", help="write DOT or JSON"), formats=("dot", "json", "table"))
    sp.add_argument("--what", choices=["dag", "dual", "lattice", "flowtree"], required=True)
    sp.add_argument("--netflow", type=_netflow)
    sp.set_defaults(func=cmd_export)

    sp = common(sub.add_parser("verify", help="exhaustive structural checks"), source=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (FlowvolError, ValueError) as exc:
        sys.stderr.write(f"flowvol: error: {type(exc).__name__}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"flowvol: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
