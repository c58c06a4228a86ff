"""Executable form of the volume order-reversal argument.

Setting: ``lower`` (G) has the nested pair (a,d),(b,b+1); interchanging it
gives ``upper`` (G') with the crossed pair (a,b+1),(b,d).  Nodes of the two
flow decomposition trees at levels up to b+1 are matched by ``phi``; at
level b+1 the bad nodes of G' are sent to good ones by ``psi``.  All trees
use the netflow w_n.
"""
from dataclasses import dataclass
from functools import cached_property

from .dag import Edge, interchange, require_family
from .errors import ClassificationError, LevelError
from .family import all_words, dag_from_word, hasse_lattice, check_family_n
from .flows import FrontierCounter, PartialFlow, level_nodes, make_w, volume_f1, W_SPECIAL
from .report import Report

GOOD = "good"
BAD = "bad"


@dataclass(frozen=True)
class InterchangeContext:
    lower: object
    upper: object
    a: int
    b: int
    d: int

    def __post_init__(self):
        if not self.a < self.b < self.b + 1 < self.d:
            raise ValueError(f"need a < b < b+1 < d, got a={self.a} b={self.b} d={self.d}")
        require_family(self.lower, 3)

    @classmethod
    def from_cover(cls, cover):
        lower = dag_from_word(cover.lower)
        upper = interchange(lower, cover.pair)
        return cls(lower, upper, cover.a, cover.b, cover.d)

    @property
    def n(self):
        return self.lower.n

    @cached_property
    def w(self):
        return make_w(self.n)

    # the four edges the interchange touches; (b,b+1) in G is the non-spine copy
    @property
    def lower_outer(self):
        return Edge(self.a, self.d, 0)

    @property
    def lower_inner(self):
        return Edge(self.b, self.b + 1, self.lower.multiplicity(self.b, self.b + 1) - 1)

    @property
    def upper_left(self):
        return Edge(self.a, self.b + 1, 0)

    @property
    def upper_right(self):
        return Edge(self.b, self.d, 0)

    @cached_property
    def lower_counter(self):
        return FrontierCounter(self.lower, self.w)

    @cached_property
    def upper_counter(self):
        return FrontierCounter(self.upper, self.w)

    def leaves(self, node):
        counter = self.upper_counter if node.dag == self.upper else self.lower_counter
        return counter.completions(node)

    def level_nodes(self, dag, level):
        return level_nodes(dag, self.w, level - 1)


def _transport(node, target, mapping):
    vals = node.as_dict()
    out = {mapping.get(e, e): x for e, x in vals.items()}
    values = tuple(out[e] for e in target.edges[:target.prefix_length(node.cut)])
    return PartialFlow(target, node.cut, values)


def _check_level(ctx, node):
    if node.level > ctx.b + 1:
        raise LevelError(f"phi is defined up to level {ctx.b + 1}, node is at level {node.level}")


def phi(ctx, node):
    """Level-preserving map from nodes of T_{G'} to nodes of T_G (levels <= b+1)."""
    if node.dag != ctx.upper:
        raise ValueError("phi takes a node of the upper DAG")
    _check_level(ctx, node)
    return _transport(node, ctx.lower, {ctx.upper_left: ctx.lower_outer,
                                        ctx.upper_right: ctx.lower_inner})


def phi_inverse(ctx, node):
    if node.dag != ctx.lower:
        raise ValueError("phi inverse takes a node of the lower DAG")
    _check_level(ctx, node)
    return _transport(node, ctx.upper, {ctx.lower_outer: ctx.upper_left,
                                        ctx.lower_inner: ctx.upper_right})


def _require_top_level(ctx, node):
    if node.level != ctx.b + 1:
        raise LevelError(f"expected a level {ctx.b + 1} node, got level {node.level}")


def classify(ctx, node):
    _require_top_level(ctx, node)
    if node.dag == ctx.upper:
        left, right = node.value(ctx.upper_left), node.value(ctx.upper_right)
    elif node.dag == ctx.lower:
        left, right = node.value(ctx.lower_outer), node.value(ctx.lower_inner)
    else:
        raise ValueError("node belongs to neither DAG of the context")
    return BAD if left > right else GOOD


def _psi_upper(ctx, node):
    vals = node.as_dict()
    x, y = vals[ctx.upper_left], vals[ctx.upper_right]
    vals[ctx.upper_left], vals[ctx.upper_right] = y, x
    for i in range(ctx.a, ctx.b):
        vals[Edge(i, i + 1, 0)] += x - y
    return PartialFlow(ctx.upper, node.cut, tuple(vals[e] for e in node.edges))


def psi(ctx, node):
    """Send a bad level-(b+1) node to its good partner in the same tree.

    On T_G the map is defined by conjugating with phi.
    """
    if classify(ctx, node) != BAD:
        raise ClassificationError("psi is defined on bad nodes only")
    if node.dag == ctx.upper:
        return _psi_upper(ctx, node)
    return phi(ctx, _psi_upper(ctx, phi_inverse(ctx, node)))


@dataclass(frozen=True)
class LeafIdentities:
    bad: int          # l(f')
    partner: int      # l(psi(f'))
    image: int        # l(phi(f'))
    partner_image: int  # l(phi(psi(f')))

    @property
    def first_holds(self):
        return self.bad == self.partner_image

    @property
    def second_holds(self):
        return self.partner == self.image

    @property
    def sums_equal(self):
        return self.bad + self.partner == self.image + self.partner_image

    @property
    def holds(self):
        return self.first_holds and self.second_holds and self.sums_equal


def leaf_identities(ctx, node):
    if node.dag != ctx.upper:
        raise ValueError("leaf identities start from a bad node of the upper DAG")
    partner = psi(ctx, node)
    return LeafIdentities(
        bad=ctx.leaves(node),
        partner=ctx.leaves(partner),
        image=ctx.leaves(phi(ctx, node)),
        partner_image=ctx.leaves(phi(ctx, partner)),
    )


@dataclass
class CoverAudit:
    """Exhaustive check of every step of the argument on one cover."""
    lower_word: str
    upper_word: str
    a: int
    b: int
    d: int
    phi_bijective: bool
    bad_nodes: int
    good_nodes: int
    psi_injective: bool
    psi_lands_good: bool
    key_lemma: bool
    good_dominated: bool
    bad_strict: bool
    decomposition: bool
    lower_volume: int
    upper_volume: int

    @property
    def ok(self):
        return all((self.phi_bijective, self.psi_injective, self.psi_lands_good, self.key_lemma,
                    self.good_dominated, self.bad_strict, self.decomposition,
                    self.upper_volume <= self.lower_volume))


def audit_cover(cover):
    ctx = InterchangeContext.from_cover(cover)
    phi_ok = True
    for level in range(1, ctx.b + 2):
        up = ctx.level_nodes(ctx.upper, level)
        lo = ctx.level_nodes(ctx.lower, level)
        images = [phi(ctx, f) for f in up]
        if len(set(images)) != len(up) or set(images) != set(lo):
            phi_ok = False
        if any(phi_inverse(ctx, phi(ctx, f)) != f for f in up):
            phi_ok = False
        if any(phi(ctx, phi_inverse(ctx, g)) != g for g in lo):
            phi_ok = False

    top = ctx.level_nodes(ctx.upper, ctx.b + 1)
    bad = [f for f in top if classify(ctx, f) == BAD]
    good = [f for f in top if classify(ctx, f) == GOOD]
    partners = [psi(ctx, f) for f in bad]
    top_set = set(top)
    psi_good = all(p in top_set and classify(ctx, p) == GOOD for p in partners)
    psi_inj = len(set(partners)) == len(partners)

    key = all(leaf_identities(ctx, f).holds for f in bad)
    good_dom = all(ctx.leaves(f) <= ctx.leaves(phi(ctx, f)) for f in good)
    bad_strict = all(ctx.leaves(f) > ctx.leaves(phi(ctx, f)) for f in bad)

    # regroup the level-(b+1) leaf sums: bad+partner pairs, then the remaining good nodes
    upper_total = sum(ctx.leaves(f) for f in top)
    lower_total = sum(ctx.leaves(g) for g in ctx.level_nodes(ctx.lower, ctx.b + 1))
    paired = set(partners)
    rest = [f for f in good if f not in paired]
    pair_sum_upper = sum(ctx.leaves(f) + ctx.leaves(p) for f, p in zip(bad, partners))
    pair_sum_lower = sum(ctx.leaves(phi(ctx, f)) + ctx.leaves(phi(ctx, p))
                         for f, p in zip(bad, partners))
    rest_upper = sum(ctx.leaves(f) for f in rest)
    rest_lower = sum(ctx.leaves(phi(ctx, f)) for f in rest)
    upper_vol = ctx.upper_counter.total()
    lower_vol = ctx.lower_counter.total()
    decomposition = (upper_total == upper_vol == pair_sum_upper + rest_upper
                     and lower_total == lower_vol == pair_sum_lower + rest_lower
                     and pair_sum_upper == pair_sum_lower and rest_upper <= rest_lower)

    return CoverAudit(str(cover.lower), str(cover.upper), ctx.a, ctx.b, ctx.d,
                      phi_ok, len(bad), len(good), psi_inj, psi_good, key, good_dom,
                      bad_strict, decomposition, lower_vol, upper_vol)


def verify_order_reversal(n, max_n=None):
    """Check vol F_1(G') <= vol F_1(G) across every cover of the lattice."""
    if max_n is not None:
        check_family_n(n, max_n)
    lattice = hasse_lattice(n)
    volumes = {w: volume_f1(dag_from_word(w), W_SPECIAL) for w in all_words(n)}
    report = Report(f"verify_order_reversal n={n}")
    for c in lattice.covers:
        lo, up = volumes[c.lower], volumes[c.upper]
        report.add(up <= lo, lower=str(c.lower), upper=str(c.upper), pair=str(c.pair),
                   lower_volume=lo, upper_volume=up)
    return report


def proof_sweep(n, max_n=None):
    """Run :func:`audit_cover` on every cover and collect the outcomes."""
    if max_n is not None:
        check_family_n(n, max_n)
    report = Report(f"proof_sweep n={n}")
    for c in hasse_lattice(n).covers:
        audit = audit_cover(c)
        item = dict(vars(audit))
        report.add(audit.ok, **item)
    return report
