import pytest

from flowvol import (BAD, GOOD, Edge, InterchangeContext, audit_cover, classify, hasse_lattice,
                     leaf_identities, phi, phi_inverse, proof_sweep, psi, verify_order_reversal)
from flowvol.errors import ClassificationError, LevelError


def _context(lower, upper):
    cover = [c for c in hasse_lattice(len(lower) + 2).covers
             if str(c.lower) == lower and str(c.upper) == upper][0]
    return InterchangeContext.from_cover(cover)


@pytest.fixture
def ctx():
    return _context("10", "11")


def test_context_parameters(ctx):
    assert (ctx.a, ctx.b, ctx.d) == (2, 3, 5)
    assert ctx.lower_outer == Edge(2, 5) and ctx.lower_inner == Edge(3, 4, 1)
    assert ctx.upper_left == Edge(2, 4) and ctx.upper_right == Edge(3, 5)


def test_example_bad_node(ctx):
    top = ctx.level_nodes(ctx.upper, 4)
    assert len(top) == 5
    kinds = [classify(ctx, f) for f in top]
    assert kinds.count(BAD) == 1
    bad = top[kinds.index(BAD)]
    assert bad.value(Edge(2, 4)) == 1 and bad.value(Edge(3, 5)) == 0

    partner = psi(ctx, bad)
    assert partner.value(Edge(2, 4)) == 0 and partner.value(Edge(3, 5)) == 1
    assert partner.value(Edge(2, 3)) == bad.value(Edge(2, 3)) + 1
    assert classify(ctx, partner) == GOOD

    image = phi(ctx, bad)
    assert image.value(Edge(2, 5)) == 1 and image.value(Edge(3, 4, 1)) == 0

    ids = leaf_identities(ctx, bad)
    assert (ids.bad, ids.partner, ids.image, ids.partner_image) == (4, 3, 3, 4)
    assert ids.first_holds and ids.second_holds and ids.sums_equal


def test_phi_inverse_and_psi_on_lower(ctx):
    bad = [f for f in ctx.level_nodes(ctx.upper, 4) if classify(ctx, f) == BAD][0]
    g = phi(ctx, bad)
    assert phi_inverse(ctx, g) == bad
    assert classify(ctx, g) == BAD
    assert psi(ctx, g) == phi(ctx, psi(ctx, bad))


def test_level_errors(ctx):
    leaf = ctx.level_nodes(ctx.upper, 5)[0]
    with pytest.raises(LevelError):
        phi(ctx, leaf)
    with pytest.raises(LevelError):
        classify(ctx, ctx.level_nodes(ctx.upper, 3)[0])
    good = [f for f in ctx.level_nodes(ctx.upper, 4) if classify(ctx, f) == GOOD][0]
    with pytest.raises(ClassificationError):
        psi(ctx, good)
    with pytest.raises(ValueError):
        phi(ctx, ctx.level_nodes(ctx.lower, 2)[0])


def test_phi_preserves_levels(ctx):
    for level in range(1, 5):
        for f in ctx.level_nodes(ctx.upper, level):
            assert phi(ctx, f).level == level


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_every_cover_audit(n):
    for cover in hasse_lattice(n).covers:
        audit = audit_cover(cover)
        assert audit.ok, audit
        assert audit.upper_volume <= audit.lower_volume


def test_sweep_reports():
    r = proof_sweep(5)
    assert r.ok and r.summary == {"total": 12, "passed": 12, "failed": 0}
    r = verify_order_reversal(6)
    assert r.ok and r.summary["total"] == 32


def test_context_rejects_bad_parameters(ctx):
    with pytest.raises(ValueError):
        InterchangeContext(ctx.lower, ctx.upper, 3, 3, 5)
