"""
Volumes decrease up the lattice
===============================

Walk through the cover 10 -> 11 for n=4: match tree nodes with phi, find
the bad node, pair it with psi and compare leaf counts.
"""
from flowvol import (BAD, InterchangeContext, classify, hasse_lattice, leaf_identities, phi, psi,
                     proof_sweep, verify_order_reversal)

cover = [c for c in hasse_lattice(4).covers if str(c.lower) == "10" and str(c.upper) == "11"][0]
ctx = InterchangeContext.from_cover(cover)
print("a, b, d =", ctx.a, ctx.b, ctx.d)

for f in ctx.level_nodes(ctx.upper, ctx.b + 1):
    kind = classify(ctx, f)
    print(f"{kind:4s} leaves={ctx.leaves(f)}  image leaves={ctx.leaves(phi(ctx, f))}   {f}")
    if kind == BAD:
        bad = f

partner = psi(ctx, bad)
print("psi(bad) =", partner)
print(leaf_identities(ctx, bad))

# every cover, every n up to 6, audited step by step
for n in range(3, 7):
    print(n, proof_sweep(n).summary)

# the inequality alone, up to n=10
r = verify_order_reversal(10)
print(r.summary)
