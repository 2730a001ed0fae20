"""
The closed formula
==================

A, B, k0min and k0max are simple functions of the six labels.  The
fusion coefficient is how many integers fit between k0min and
min(k0max, l).
"""

from a2fusion import bmw_intermediates, fusion_coefficient
from a2fusion.bmw import bmw_fusion
from a2fusion.verify import sweep

lam, mu = (4, 2), (3, 1)
for nu in [(2, 4), (3, 5), (5, 4), (0, 5)]:
    im = bmw_intermediates(lam, mu, nu, 7)
    print(nu, im.to_json())

# As the level grows, N climbs one step at a time from 0 to the tensor
# coefficient.
nu = (4, 3)
print([bmw_fusion(lam, mu, nu, level) for level in range(6, 13)])
print([fusion_coefficient(lam, mu, nu, level) for level in range(6, 13)])

# Check everything up to level 6 (the CLI's `verify` goes further).
result = sweep(6)
print(result.triples, "triples checked; all agree:", result.ok)
