"""
Tensor products and their level-l truncations
=============================================

The Racah-Speiser algorithm folds the translated weight diagram of
V(4, 2) into the dominant chamber.  Kac-Walton folds it into the level-l
alcove instead, which cancels more terms.
"""

from a2fusion import fusion_decomposition, tensor_decomposition
from a2fusion.rootsystem import dimension

lam, mu = (4, 2), (3, 1)

tensor = tensor_decomposition(lam, mu)
print("V(4,2) x V(3,1):")
for nu, n in tensor.items():
    print(f"  {tuple(nu)}  N = {n}")
# Dimensions add up: 60 * 15 = 900.
print(sum(n * dimension(nu) for nu, n in tensor.items()), dimension(lam) * dimension(mu))

# At level 7 the components with e + f > 7 drop out and a few others
# lose multiplicity.
fusion = fusion_decomposition(lam, mu, 7)
print("level 7:")
for nu in tensor:
    print(f"  {tuple(nu)}  {tensor[nu]} -> {fusion.get(nu, 0)}")

# Raising the level restores the tensor product once the level is at
# least (a+b) + (c+d).
for level in range(6, 12):
    f = fusion_decomposition(lam, mu, level)
    print(level, sum(f.values()), f == tensor)

# The same answer from the 13-alcove sum.
assert fusion_decomposition(lam, mu, 7, mode="alcoves") == fusion
