"""Charlier configurations on a small label set and the polynomial they add up to.

A configuration splits the labels into A and B and permutes A.  Weighting each
one by a^(cycles) r^|B| and summing over every configuration on [n] gives the
Charlier polynomial C_n(a, r).
"""

from charlier_gf import CharlierConfig, ParamSet, charlier_C, config_weight, enumerate_configs

AR = ParamSet(("a", "r"))
a, r = AR.vars()

print("all configurations on {1,2,3} with their weights:")
total = AR.zero()
for config in enumerate_configs([1, 2, 3]):
    w = config_weight(config, a, r)
    total = total + w
    print(f"  {str(config):32s} {w}")

print()
print("sum of weights :", total)
print("C_3(a, r)      :", charlier_C(3))
assert total == charlier_C(3)

# one larger configuration, built from its cycles; labels outside the cycles land in B
big = CharlierConfig.from_cycles(range(1, 11), [(1, 5, 10, 3), (4, 9, 6), (7,)])
print()
print("a ten-label configuration:", big)
print("its weight:", config_weight(big, a, r))
