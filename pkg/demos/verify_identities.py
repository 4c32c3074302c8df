"""Check every registered generating-function identity, then break one on purpose.

Both sides are expanded as truncated power series with exact rational
coefficients and compared term by term.  Random mode instead evaluates the
parameters at seeded rational points, which scales to higher orders.
"""

from charlier_gf import verify
from charlier_gf.identities import REGISTRY

ORDERS = {"egf": 10, "bilinear": 6, "multilinear": 5, "trilinear": 4, "carlitz": 4,
          "bilinear-general": 4, "derangement-bilinear": 6, "derangement-trilinear": 5,
          "derangement-bilinear-general": 4}

for ident in sorted(REGISTRY):
    report = verify(ident, ORDERS[ident])
    print(report.to_text(timing=True))

print()
print("random evaluation, bilinear identity to order 8 at 20 points:")
print(verify("bilinear", 8, mode="random", points=20, seed=7).to_text(timing=True))

print()
print("the same check with the exponential prefactor removed from the right side:")
broken = verify("bilinear", 2, drop_prefactor=True)
print(broken.to_text(timing=False))
print("first mismatch:", broken.first_mismatch)
